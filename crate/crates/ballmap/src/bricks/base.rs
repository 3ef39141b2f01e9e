//! Foundational bricks: simplices, cylinders, cubes, prisms, and products.
//!
//! Everything here follows one architecture: an exact polynomial map is
//! assembled as a [`MapPipeline`] of small stages (squarings, radial
//! squeezes, per-block products), the image region is written down as
//! exact polynomial inequalities, and a strictly interior rational point
//! is recorded for the shrinking homotopy. Flat single-map forms are
//! produced whenever the expansion stays small; deep towers (cubes in
//! dimension ≥ 5, products) remain staged.

use crate::geometry::{SemialgebraicSet, Simplex};
use crate::polycore::{
    rat, rat_int, MapPipeline, MultiPoly, PolyMap, QSqrt3, Rat, Ring, UniPoly,
};
use crate::{BallmapError, Result};

use super::profiles::{cube_ball_profile, interval_fold};
use super::result::BrickResult;
use super::sets;

/// The coordinate-squaring map `(x₁,…,xₙ) ↦ (x₁²,…,xₙ²)`, which sends
/// the closed unit ball (and the cube) onto the standard simplex.
pub(crate) fn squaring_map(n: usize) -> PolyMap {
    let comps = (0..n)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[i] = 2;
            MultiPoly::monomial(n, e, rat_int(1))
        })
        .collect();
    PolyMap::from_rat(n, comps).with_step("coordinate squaring")
}

/// Affine map sending the standard simplex `Δₙ` onto the simplex with the
/// given vertices: `u ↦ v₀ + Σ uⱼ(vⱼ₊₁ − v₀)`.
fn simplex_affine(simplex: &Simplex) -> PolyMap {
    let n = simplex.dim();
    let vs = simplex.vertices();
    let comps = (0..n)
        .map(|i| {
            let terms: Vec<(usize, Rat)> = (0..n)
                .map(|j| (j, vs[j + 1][i].clone() - vs[0][i].clone()))
                .collect();
            sets::affine_form(n, &terms, vs[0][i].clone())
        })
        .collect();
    PolyMap::from_rat(n, comps).with_step("affine placement of the standard simplex")
}

fn simplex_pipeline(simplex: &Simplex) -> Result<MapPipeline> {
    Ok(MapPipeline::from_map(squaring_map(simplex.dim()))
        .then(simplex_affine(simplex))?
        .flattened_or_self())
}

fn bbox_of_vertices(vertices: &[Vec<Rat>]) -> Vec<(f64, f64)> {
    let n = vertices[0].len();
    (0..n)
        .map(|i| {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for v in vertices {
                let x = v[i].to_f64();
                lo = lo.min(x);
                hi = hi.max(x);
            }
            (lo, hi)
        })
        .collect()
}

/// Map from `B̄ₙ` onto the simplex with the given `n+1` vertices:
/// coordinate squaring onto the standard simplex, then the affine
/// placement. Errors if the vertices are affinely dependent.
pub fn simplex_map(vertices: &[Vec<Rat>]) -> Result<BrickResult> {
    let simplex = Simplex::new(vertices.to_vec())?;
    let pipe = simplex_pipeline(&simplex)?;
    let set = SemialgebraicSet::from_simplex(&simplex)?
        .with_bbox(bbox_of_vertices(simplex.vertices()));
    let center = simplex.centroid();
    BrickResult::checked(pipe, set, center, true)
}

/// The single exact stage of the ball-onto-cylinder squeeze in `n ≥ 2`
/// variables: the first `n−1` components squeeze the equatorial disc
/// radially by `√3(1 − 4/9·‖x′‖²)`, the last folds the axis by
/// `g(t) = t(3 − 4t²)`. Coefficients live in `ℚ(√3)`.
pub(crate) fn cylinder_stage(n: usize) -> PolyMap {
    debug_assert!(n >= 2);
    let s3 = QSqrt3::sqrt3();
    let neg_s3_4_9 = QSqrt3::new(rat_int(0), rat(-4, 9));
    let mut comps: Vec<MultiPoly<QSqrt3>> = Vec::with_capacity(n);
    for i in 0..n - 1 {
        let mut terms: Vec<(Vec<u32>, QSqrt3)> = Vec::with_capacity(n);
        let mut e = vec![0u32; n];
        e[i] = 1;
        terms.push((e, s3.clone()));
        for j in 0..n - 1 {
            let mut e = vec![0u32; n];
            e[i] += 1;
            e[j] += 2;
            terms.push((e, neg_s3_4_9.clone()));
        }
        comps.push(MultiPoly::from_terms(n, terms));
    }
    let g = interval_fold().map_coeffs(|c| QSqrt3::from_rat(c.clone()));
    comps.push(MultiPoly::from_unipoly(&g, n, n - 1));
    PolyMap::from_sq3(n, comps).with_step("ball onto cylinder squeeze")
}

/// The planar squeeze `(x₁, x₂) ↦ (x₁·h(x₁), g(x₂))` sending the closed
/// unit disc onto the square `[−1,1]²`, with both components in parity
/// form (first even in `x₂` — it does not involve `x₂` at all — and the
/// second odd in `x₂`).
pub fn square_map_2d() -> PolyMap {
    cylinder_stage(2)
}

/// Map from `B̄ₙ` onto the solid cylinder `B̄ₙ₋₁ × [−1,1]`, `n ≥ 2`.
pub fn cylinder_map(n: usize) -> Result<BrickResult> {
    if n < 2 {
        return Err(BallmapError::ParamRange(format!(
            "cylinder needs dimension ≥ 2, got {n}"
        )));
    }
    let pipe = MapPipeline::from_map(cylinder_stage(n));
    let mut piece = vec![sets::const_minus_sum_sq(n, rat_int(1), 0..n - 1)];
    piece.extend(sets::interval(n, n - 1, rat_int(-1), rat_int(1)));
    let set = SemialgebraicSet::new(n, vec![piece])?.with_bbox(vec![(-1.0, 1.0); n]);
    BrickResult::checked(pipe, set, vec![rat_int(0); n], true)
}

/// The staged map from `B̄ₙ` onto the cube `[−1,1]ⁿ`: peel one axis at a
/// time through the cylinder squeeze. Dimension 1 is the identity.
pub(crate) fn hypercube_pipeline(n: usize) -> Result<MapPipeline> {
    if n == 0 {
        return Err(BallmapError::ParamRange(
            "cube needs dimension ≥ 1".into(),
        ));
    }
    if n == 1 {
        return Ok(MapPipeline::from_map(PolyMap::identity(1)));
    }
    let peel = MapPipeline::from_map(cylinder_stage(n));
    let rest = MapPipeline::block(&[
        hypercube_pipeline(n - 1)?,
        MapPipeline::from_map(PolyMap::identity(1)),
    ]);
    MapPipeline::compose(&rest, &peel)
}

/// Map from `B̄ₙ` onto the cube `[−1,1]ⁿ`.
pub fn hypercube_map(n: usize) -> Result<BrickResult> {
    let pipe = hypercube_pipeline(n)?.flattened_or_self();
    let mut piece = Vec::with_capacity(2 * n);
    for i in 0..n {
        piece.extend(sets::interval(n, i, rat_int(-1), rat_int(1)));
    }
    let set = SemialgebraicSet::new(n, vec![piece])?.with_bbox(vec![(-1.0, 1.0); n]);
    BrickResult::checked(pipe, set, vec![rat_int(0); n], true)
}

/// Map from `B̄ₙ₊₁` onto the prism `Δ × [a, b]` over the given
/// `n`-dimensional simplex: squeeze onto `B̄ₙ × [−1,1]`, then apply the
/// simplex map to the disc block and rescale the height.
pub fn prism_map(vertices: &[Vec<Rat>], interval: (Rat, Rat)) -> Result<BrickResult> {
    let (a, b) = interval;
    if a >= b {
        return Err(BallmapError::ParamRange(format!(
            "prism interval needs a < b, got [{a}, {b}]"
        )));
    }
    let simplex = Simplex::new(vertices.to_vec())?;
    let n = simplex.dim();
    let mid = (a.clone() + b.clone()) / rat_int(2);
    let half = (b.clone() - a.clone()) / rat_int(2);
    let height = PolyMap::from_rat(
        1,
        vec![sets::affine_form(1, &[(0, half)], mid.clone())],
    );
    let pipe = MapPipeline::compose(
        &MapPipeline::block(&[simplex_pipeline(&simplex)?, MapPipeline::from_map(height)]),
        &MapPipeline::from_map(cylinder_stage(n + 1)),
    )?
    .flattened_or_self();

    let base_set = SemialgebraicSet::from_simplex(&simplex)?;
    let mut piece: Vec<MultiPoly<Rat>> = base_set.pieces()[0]
        .inequalities()
        .iter()
        .map(|g| g.shift_vars(0, n + 1))
        .collect();
    piece.extend(sets::interval(n + 1, n, a.clone(), b.clone()));
    let mut bbox = bbox_of_vertices(simplex.vertices());
    bbox.push((a.to_f64(), b.to_f64()));
    let set = SemialgebraicSet::new(n + 1, vec![piece])?.with_bbox(bbox);
    let mut center = simplex.centroid();
    center.push(mid);
    BrickResult::checked(pipe, set, center, true)
}

/// Staged map sending the cube `[−1,1]ⁿ` onto the closed unit ball:
/// `x ↦ H(‖x‖²)·x` with the radial profile [`cube_ball_profile`].
///
/// Stages: append `s = ‖x‖²`, evaluate the univariate profile, multiply —
/// which keeps every stage tiny in any dimension; flat expansion is
/// attempted under the default term budget.
pub fn ball_from_cube(n: usize) -> Result<MapPipeline> {
    if n == 0 {
        return Err(BallmapError::ParamRange(
            "cube-to-ball map needs dimension ≥ 1".into(),
        ));
    }
    // Stage 1: (x) ↦ (x, ‖x‖²).
    let mut comps1: Vec<MultiPoly<Rat>> = (0..n).map(|i| MultiPoly::var(n, i)).collect();
    comps1.push(sets::sum_sq(n, 0..n));
    let stage1 = PolyMap::from_rat(n, comps1).with_step("append squared norm");
    // Stage 2: (x, s) ↦ (x, H(s)).
    let profile: UniPoly<Rat> = cube_ball_profile(n);
    let mut comps2: Vec<MultiPoly<Rat>> =
        (0..n).map(|i| MultiPoly::var(n + 1, i)).collect();
    comps2.push(MultiPoly::from_unipoly(&profile, n + 1, n));
    let stage2 = PolyMap::from_rat(n + 1, comps2).with_step("radial profile");
    // Stage 3: (x, u) ↦ u·x.
    let comps3: Vec<MultiPoly<Rat>> = (0..n)
        .map(|i| {
            let mut e = vec![0u32; n + 1];
            e[i] = 1;
            e[n] = 1;
            MultiPoly::monomial(n + 1, e, rat_int(1))
        })
        .collect();
    let stage3 = PolyMap::from_rat(n + 1, comps3).with_step("radial rescale");
    Ok(MapPipeline::new(vec![stage1, stage2, stage3])?.flattened_or_self())
}

/// Map from `B̄_m`, `m = Σ dims`, onto the product of closed unit balls
/// `B̄_{d₁} × ⋯ × B̄_{d_ℓ}`: flatten the ball to the cube, then bend each
/// block of the cube back onto its factor ball.
pub fn ball_product_map(dims: &[usize]) -> Result<BrickResult> {
    if dims.is_empty() {
        return Err(BallmapError::EmptyInput("ball product dimensions"));
    }
    if dims.contains(&0) {
        return Err(BallmapError::ParamRange(
            "ball product factors need dimension ≥ 1".into(),
        ));
    }
    let m: usize = dims.iter().sum();
    let factors: Vec<MapPipeline> = dims
        .iter()
        .map(|&d| ball_from_cube(d))
        .collect::<Result<_>>()?;
    let routed = MapPipeline::compose(&MapPipeline::block(&factors), &hypercube_pipeline(m)?)?;
    // The term-work guard inside `flatten` does not account for coefficient
    // bit growth, and the cube-routing stages carry wide dyadic coefficients
    // that make a flattened form slower to build *and* evaluate than the
    // staged one. Only collapse the tiny cases.
    let pipe = if m <= 2 { routed.flattened_or_self() } else { routed };
    let mut piece = Vec::with_capacity(dims.len());
    let mut off = 0usize;
    for &d in dims {
        piece.push(sets::const_minus_sum_sq(m, rat_int(1), off..off + d));
        off += d;
    }
    let set = SemialgebraicSet::new(m, vec![piece])?.with_bbox(vec![(-1.0, 1.0); m]);
    BrickResult::checked(pipe, set, vec![rat_int(0); m], true)
}

/// Product of already-built bricks: a map from `B̄_m`, `m = Σ mᵢ`, onto
/// `S₁ × ⋯ × S_ℓ`. Routes the ball through the cube, bends each block
/// onto the factor's source ball, and applies the factor maps; the region
/// is the product description and the center the tuple of centers. A
/// single factor is returned unchanged.
pub fn product_of_bricks(factors: &[BrickResult]) -> Result<BrickResult> {
    if factors.is_empty() {
        return Err(BallmapError::EmptyInput("brick product factors"));
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let m: usize = factors.iter().map(BrickResult::source_dim).sum();
    let routes: Vec<MapPipeline> = factors
        .iter()
        .map(|f| MapPipeline::compose(&f.map, &ball_from_cube(f.source_dim())?))
        .collect::<Result<_>>()?;
    let pipe = MapPipeline::compose(&MapPipeline::block(&routes), &hypercube_pipeline(m)?)?;

    let k_total: usize = factors.iter().map(BrickResult::target_dim).sum();
    let mut pieces: Vec<Vec<MultiPoly<Rat>>> = vec![Vec::new()];
    let mut center: Vec<Rat> = Vec::with_capacity(k_total);
    let mut bbox: Vec<(f64, f64)> = Vec::with_capacity(k_total);
    let mut have_bbox = true;
    let mut off = 0usize;
    for f in factors {
        let mut next = Vec::with_capacity(pieces.len() * f.set.pieces().len());
        for existing in &pieces {
            for piece in f.set.pieces() {
                let mut combo = existing.clone();
                combo.extend(
                    piece
                        .inequalities()
                        .iter()
                        .map(|g| g.shift_vars(off, k_total)),
                );
                next.push(combo);
            }
        }
        pieces = next;
        center.extend(f.homotopy_center.iter().cloned());
        match f.set.bbox() {
            Some(b) => bbox.extend_from_slice(b),
            None => have_bbox = false,
        }
        off += f.target_dim();
    }
    let mut set = SemialgebraicSet::new(k_total, pieces)?;
    if have_bbox {
        set = set.with_bbox(bbox);
    }
    let radially_convex = factors.iter().all(|f| f.radially_convex);
    BrickResult::checked(pipe, set, center, radially_convex)
}
