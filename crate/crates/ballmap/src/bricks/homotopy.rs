//! Radial contraction of a brick toward its recorded interior center.
//!
//! Every catalog brick stores a point `p` that sees the whole set along
//! straight segments (the `radially_convex` flag certifies this).  Composing
//! the brick map `F` with the affine contraction `y ↦ t·p + (1−t)·y` yields a
//! family `H_t` that interpolates between the original map (`t = 0`) and the
//! constant map at `p` (`t = 1`).  For `t` strictly between the endpoints the
//! image is pulled strictly inside the set, which is what downstream gluing
//! steps rely on when they need room to maneuver near a boundary.

use num_traits::Zero;

use crate::polycore::{rat_int, MapPipeline, MultiPoly, PolyMap, Rat};
use crate::{BallmapError, Result};

use super::result::BrickResult;

/// Contracts a brick map toward its interior center by the exact factor `t`.
///
/// Returns the staged map `x ↦ t·p + (1−t)·F(x)` where `F` is `r.map` and `p`
/// is `r.homotopy_center`.  Requires `0 ≤ t ≤ 1` and a brick whose set is
/// star-shaped around `p` (`r.radially_convex`); otherwise the contracted
/// image could escape the set and the family would certify nothing.
///
/// `t = 0` returns the original pipeline unchanged; `t = 1` returns a map
/// that is constant at `p`.
pub fn brick_homotopy(r: &BrickResult, t: &Rat) -> Result<MapPipeline> {
    if t < &Rat::zero() || t > &rat_int(1) {
        return Err(BallmapError::ParamRange(
            "contraction parameter must lie in [0, 1]".into(),
        ));
    }
    if !r.radially_convex {
        return Err(BallmapError::Precondition(
            "brick does not certify a star center; contraction could leave the set".into(),
        ));
    }
    if t.is_zero() {
        return Ok(r.map.clone());
    }

    let n = r.set.dim();
    if r.homotopy_center.len() != n {
        return Err(BallmapError::Precondition(
            "brick center dimension does not match its set".into(),
        ));
    }

    let shrink = rat_int(1) - t;
    let comps = (0..n)
        .map(|j| {
            let mut exp = vec![0u32; n];
            exp[j] = 1;
            MultiPoly::from_terms(
                n,
                [
                    (exp, shrink.clone()),
                    (vec![0; n], t * &r.homotopy_center[j]),
                ],
            )
        })
        .collect();
    let stage = PolyMap::from_rat(n, comps).with_step("contract toward the interior center");
    r.map.clone().then(stage)
}

#[cfg(test)]
mod tests {
    use super::super::{simplex_map, spherical_star_map};
    use super::*;
    use crate::polycore::rat;
    use crate::verify::sample_ball;
    use rand::SeedableRng;

    fn right_triangle() -> BrickResult {
        simplex_map(&[
            vec![rat_int(0), rat_int(0)],
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
        ])
        .unwrap()
    }

    #[test]
    fn full_contraction_is_constant_at_the_center() {
        let brick = right_triangle();
        let shrunk = brick_homotopy(&brick, &rat_int(1)).unwrap();
        let center: Vec<f64> = brick
            .homotopy_center
            .iter()
            .map(|c| crate::polycore::Ring::to_f64(c))
            .collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let m = shrunk.nvars();
        for _ in 0..50 {
            let x = sample_ball(&mut rng, m);
            let y = shrunk.eval_f64(&x);
            for (yi, ci) in y.iter().zip(&center) {
                assert!((yi - ci).abs() < 1e-12, "image {y:?} is not the center");
            }
        }
    }

    #[test]
    fn zero_contraction_returns_the_original_map() {
        let brick = right_triangle();
        let same = brick_homotopy(&brick, &Rat::zero()).unwrap();
        assert_eq!(same.stages().len(), brick.map.stages().len());
        for (a, b) in same.stages().iter().zip(brick.map.stages()) {
            assert_eq!(a.comps(), b.comps());
        }
    }

    #[test]
    fn half_contraction_lands_strictly_inside() {
        let brick = right_triangle();
        let half = brick_homotopy(&brick, &rat(1, 2)).unwrap();
        let m = half.nvars();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut scratch = Vec::new();
        let mut out = Vec::new();
        for _ in 0..1000 {
            let x = sample_ball(&mut rng, m);
            let y = half.eval_f64(&x);
            let margin = brick.set.min_margin(&y, &mut scratch, &mut out);
            assert!(
                margin > 1e-4,
                "half-contracted image {y:?} is not strictly interior (margin {margin})"
            );
        }
    }

    #[test]
    fn parameter_and_flag_guards_fire() {
        let brick = right_triangle();
        assert!(brick_homotopy(&brick, &rat(-1, 10)).is_err());
        assert!(brick_homotopy(&brick, &rat(11, 10)).is_err());

        let mut unflagged = right_triangle();
        unflagged.radially_convex = false;
        assert!(brick_homotopy(&unflagged, &rat(1, 2)).is_err());
    }

    #[test]
    fn contraction_works_on_a_staged_brick() {
        let star = spherical_star_map(&[2, 2]).unwrap();
        let half = brick_homotopy(&star, &rat(1, 2)).unwrap();
        let m = half.nvars();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut scratch = Vec::new();
        let mut out = Vec::new();
        for _ in 0..200 {
            let x = sample_ball(&mut rng, m);
            let y = half.eval_f64(&x);
            let margin = star.set.min_margin(&y, &mut scratch, &mut out);
            assert!(margin > 1e-6, "image {y:?} has margin {margin}");
        }
    }
}
