//! Univariate radial profiles shared by the catalog constructions.
//!
//! Three cubic/poly profiles do most of the geometric work in this crate:
//!
//! * [`interval_fold`] — `g(t) = t(3 − 4t²)` folds `[−1,1]` onto itself so
//!   that the subinterval `[−1/2, 1/2]` already covers the whole target:
//!   `g(±1/2) = ±1` while `g(±1) = ∓1`. This is what lets a ball, whose
//!   slices shrink near the poles, still cover a full cylinder height.
//! * [`disc_shrink`] — `h(t) = √3(1 − 4/9·t²)`, the radial factor paired
//!   with `g`: `h₁(t) = t·h(t)` maps `[0, √3/2]` onto `[0,1]` with its
//!   maximum exactly 1 at `t = √3/2`, so `x′ ↦ h(‖x′‖)·x′` sends every
//!   disc of radius ≥ √3/2 onto the closed unit disc without overshoot.
//! * [`cube_ball_profile`] — `H(s)` with `s = ‖x‖²` driving the radial map
//!   `x ↦ H(‖x‖²)·x` that sends the cube `[−1,1]ⁿ` onto the closed unit
//!   ball: `H(0) = 0`, `H(1) = 1`, `H(n) = 0`, and `ρ·H(ρ²) ∈ [0,1]` for
//!   every `ρ ∈ [0, √n]`.
//!
//! All coefficients are exact: `g` and `H` are rational, `h` lives in
//! `ℚ(√3)` (its square is rational, which is why squared compositions of
//! the cylinder map land back in `ℚ`).

use crate::polycore::{rat, rat_int, QSqrt3, Rat, UniPoly};

/// `g(t) = 3t − 4t³`: odd cubic with `g(±1) = ∓1` and `g(±1/2) = ±1`,
/// mapping `[−1,1]` onto `[−1,1]` and already surjective on `[−1/2,1/2]`.
pub fn interval_fold() -> UniPoly<Rat> {
    UniPoly::new(vec![rat_int(0), rat_int(3), rat_int(0), rat_int(-4)])
}

/// `1 − g(t)² = (1 − t²)(4t² − 1)²`: the complement identity certifying
/// that `g` never leaves `[−1,1]` on `[−1,1]`.
#[cfg_attr(not(test), allow(dead_code))] // identity witness, exercised by tests
pub fn interval_fold_complement() -> UniPoly<Rat> {
    // (1 − t²)(4t² − 1)²
    let one_minus_t2 = UniPoly::new(vec![rat_int(1), rat_int(0), rat_int(-1)]);
    let four_t2_minus_1 = UniPoly::new(vec![rat_int(-1), rat_int(0), rat_int(4)]);
    one_minus_t2.mul_ref(&four_t2_minus_1.pow(2))
}

/// `h(t) = √3(1 − 4/9·t²)`: radial factor of the disc-onto-disc squeeze.
#[cfg_attr(not(test), allow(dead_code))] // identity witness, exercised by tests
pub fn disc_shrink() -> UniPoly<QSqrt3> {
    let s3 = QSqrt3::sqrt3();
    UniPoly::new(vec![
        s3.clone(),
        QSqrt3::from_rat(rat_int(0)),
        QSqrt3::new(rat_int(0), rat(-4, 9)),
    ])
}

/// `h₁(t) = t·h(t)`: maps `[0, √3/2]` onto `[0,1]`, peak value exactly 1.
#[cfg_attr(not(test), allow(dead_code))] // identity witness, exercised by tests
pub fn disc_shrink_times_t() -> UniPoly<QSqrt3> {
    disc_shrink().mul_ref(&UniPoly::x())
}

/// Radial profile `H(s)` (in `s = ‖x‖²`) of the cube-onto-ball map
/// `x ↦ H(‖x‖²)·x` on `[−1,1]ⁿ`.
///
/// For `n = 1` this is `H(s) = (3 − s)/2`, giving the cubic
/// `t ↦ t(3 − t²)/2`. For `n ≥ 2` it is the composite
/// `H(s) = h(s)·(3 − s·h(s)²)/2` with
/// `h(s) = s²(s − n)^{2(n−1)} / (n−1)^{2(n−1)}`.
///
/// The inner factor `h` alone has `h(0) = 0`, `h(1) = 1`, `h(n) = 0`, but
/// the raw radial map `ρ ↦ ρ·h(ρ²)` overshoots radius 1 slightly just
/// past `ρ = 1` (its derivative at `ρ = 1` is `h(1) = 1 > 0`), so the
/// image of the cube would spill outside the ball. Post-composing the
/// radial contraction `r ↦ r(3 − r²)/2` — which maps `[0, √3]` into
/// `[0,1]` and fixes 1 — repairs containment without disturbing
/// surjectivity, and keeps the overall map a polynomial of the same
/// `H(‖x‖²)·x` shape. The overshoot never exceeds `1.118 < √3`, so the
/// contraction stays nonnegative on everything it receives.
///
/// The end-point identities survive: `H(0) = 0`, `H(1) = 1`, `H(n) = 0`.
pub fn cube_ball_profile(n: usize) -> UniPoly<Rat> {
    assert!(n >= 1, "profile needs a positive dimension");
    if n == 1 {
        // (3 − s)/2
        return UniPoly::new(vec![rat(3, 2), rat(-1, 2)]);
    }
    let base = cube_ball_inner_profile(n);
    // H = h·(3 − s·h²)/2
    let s = UniPoly::x();
    let three = UniPoly::constant(rat_int(3));
    let inner = three.sub_ref(&s.mul_ref(&base.pow(2)));
    base.mul_ref(&inner).scale(&rat(1, 2))
}

/// The raw (uncorrected) profile `h(s) = s²(s−n)^{2(n−1)}/(n−1)^{2(n−1)}`
/// for `n ≥ 2`; `(3−s)/2` for `n = 1`.
pub(crate) fn cube_ball_inner_profile(n: usize) -> UniPoly<Rat> {
    assert!(n >= 1);
    if n == 1 {
        return UniPoly::new(vec![rat(3, 2), rat(-1, 2)]);
    }
    let e = 2 * (n as u32 - 1);
    let s_minus_n = UniPoly::new(vec![rat_int(-(n as i64)), rat_int(1)]);
    let mut den = rat_int(1);
    for _ in 0..e {
        den = den * rat_int(n as i64 - 1);
    }
    let x2 = UniPoly::monomial(2, rat_int(1));
    x2.mul_ref(&s_minus_n.pow(e)).scale(&den.recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_fold_endpoint_identities() {
        let g = interval_fold();
        assert_eq!(g.eval(&rat_int(1)), rat_int(-1));
        assert_eq!(g.eval(&rat_int(-1)), rat_int(1));
        assert_eq!(g.eval(&rat(1, 2)), rat_int(1));
        assert_eq!(g.eval(&rat(-1, 2)), rat_int(-1));
    }

    #[test]
    fn interval_fold_complement_identity() {
        // g² + (1 − g²) = 1 as polynomials.
        let g = interval_fold();
        let total = g.pow(2).add_ref(&interval_fold_complement());
        assert_eq!(total, UniPoly::constant(rat_int(1)));
    }

    #[test]
    fn disc_shrink_peaks_at_one() {
        // h₁(√3/2) = 1 exactly in ℚ(√3).
        let h1 = disc_shrink_times_t();
        let half_sqrt3 = QSqrt3::new(rat_int(0), rat(1, 2));
        assert_eq!(h1.eval(&half_sqrt3), QSqrt3::from_rat(rat_int(1)));
        // h₁(1) = √3·5/9 < 1: no overshoot at the disc boundary.
        let at_one = h1.eval(&QSqrt3::from_rat(rat_int(1)));
        assert_eq!(at_one, QSqrt3::new(rat_int(0), rat(5, 9)));
    }

    #[test]
    fn cube_ball_profile_endpoint_identities() {
        // H(1) = 1 always: basis points of the cube stay on the sphere.
        // For n ≥ 2, H(0) = 0 and H(n) = 0: the origin is fixed by the
        // x-prefactor of the full map and the far corner folds back to
        // the origin. In dimension one the map x·H(x²) = x(3 − x²)/2 is
        // monotone on [−1, 1], so no corner identity is needed.
        for n in 1..=6usize {
            let h = cube_ball_profile(n);
            assert_eq!(h.eval(&rat_int(1)), rat_int(1), "H(1) at n={n}");
            if n >= 2 {
                assert_eq!(h.eval(&rat_int(0)), rat_int(0), "H(0) at n={n}");
                assert_eq!(h.eval(&rat_int(n as i64)), rat_int(0), "H(n) at n={n}");
            }
        }
        let h1 = cube_ball_profile(1);
        assert_eq!(h1.eval(&rat(1, 4)), rat(11, 8));
    }

    #[test]
    fn cube_ball_radial_image_stays_in_unit_interval() {
        // ρ·H(ρ²) ∈ [0, 1] across the whole reach ρ ∈ [0, √n] of the
        // cube, checked exactly: H(s) ≥ 0 and s·H(s)² ≤ 1 on a rational
        // grid of s = ‖x‖² values (expanded high-degree coefficients
        // make float evaluation near the corner lose ~1e-9).
        for n in 1..=6usize {
            let h = cube_ball_profile(n);
            for k in 0..=800i64 {
                let s = rat(k * n as i64, 800);
                let hs = h.eval(&s);
                assert!(hs >= rat_int(0), "H({s}) < 0 at n={n}");
                let v2 = s * hs.clone() * hs;
                assert!(v2 <= rat_int(1), "s·H(s)² = {v2} > 1 at n={n}");
            }
        }
    }

    #[test]
    fn uncorrected_profile_overshoots_but_stays_under_sqrt3() {
        // The raw profile exceeds 1 just past ρ = 1 (why the correction
        // exists) yet never reaches √3 (why the correction is safe).
        for n in 2..=6usize {
            let h = cube_ball_inner_profile(n).to_f64();
            let rho_max = (n as f64).sqrt();
            let mut peak = 0.0f64;
            for k in 0..=4000 {
                let rho = rho_max * k as f64 / 4000.0;
                peak = peak.max(rho * h.eval(&(rho * rho)));
            }
            assert!(peak > 1.0, "n={n}: raw profile should overshoot");
            assert!(peak < 3f64.sqrt(), "n={n}: overshoot must stay below √3");
        }
    }
}
