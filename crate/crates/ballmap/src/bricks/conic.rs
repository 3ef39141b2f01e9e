//! Circular and hyperbolic sectors and segments.
//!
//! All four families share one strategy. A symmetric triangle with apex
//! at the origin is carved out of the ball; a radial cubic rescale blows
//! the triangle up onto a thin sector (circular or hyperbolic); then
//! angle-doubling quadratic maps widen the sector step by step; finally
//! an optional chord map collapses the straight edges onto a vertical
//! line, turning the sector into a segment. Every stage preserves the
//! even/odd structure in the second variable, so the planar pipelines
//! revolve stage-by-stage into their higher-dimensional versions.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::geometry::SemialgebraicSet;
use crate::polycore::{
    rat, rat_from_f64_exact, rat_int, MapPipeline, MultiPoly, PolyMap, Rat, Ring,
};
use crate::{BallmapError, Result};

use super::result::BrickResult;
use super::revolve::revolution_pipeline;
use super::sets;

/// Radial cubic rescale of the plane, `x ↦ ((3 − ‖x‖²)/2)·x`. Fixes the
/// unit circle, folds radius `√3` to the origin; applied to a triangle
/// with apex at the origin whose far corners reach at most radius `√3`,
/// it fills the circular sector spanned by the triangle.
pub fn disc_radial_cubic() -> PolyMap {
    let scale = |i: usize| {
        let mut e = vec![0u32; 2];
        e[i] = 1;
        MultiPoly::monomial(2, e.clone(), rat(3, 2))
            .sub_ref(&{
                e[0] += 2;
                MultiPoly::monomial(2, e.clone(), rat(1, 2))
            })
            .sub_ref(&{
                e[0] -= 2;
                e[1] += 2;
                MultiPoly::monomial(2, e, rat(1, 2))
            })
    };
    PolyMap::from_rat(2, vec![scale(0), scale(1)]).with_step("radial cubic rescale")
}

/// Square of the plane seen as ℂ: `(x₁, x₂) ↦ (x₁² − x₂², 2x₁x₂)`.
/// Doubles polar angles, squares radii, keeps the closed unit disc onto
/// itself — widening a circular sector to twice its opening.
pub fn complex_square() -> PolyMap {
    PolyMap::from_rat(
        2,
        vec![
            MultiPoly::from_terms(
                2,
                vec![(vec![2, 0], rat_int(1)), (vec![0, 2], rat_int(-1))],
            ),
            MultiPoly::monomial(2, vec![1, 1], rat_int(2)),
        ],
    )
    .with_step("angle-doubling square")
}

/// Chord map for circular sectors: with `K = cos 2γ`,
/// `(x₁, x₂) ↦ ((1−K)x₁² − (1+K)x₂² + K, 2x₁x₂)`. Sends the unit circle
/// to itself with angles doubled, and both straight edges of the sector
/// of half-opening `γ` onto the vertical chord `x₁ = cos 2γ`, so the
/// sector becomes the disc segment beyond that chord.
pub fn sector_to_segment(gamma: f64) -> PolyMap {
    let k = (2.0 * gamma).cos();
    PolyMap::from_f64(
        2,
        vec![
            MultiPoly::from_terms(
                2,
                vec![
                    (vec![2, 0], 1.0 - k),
                    (vec![0, 2], -(1.0 + k)),
                    (vec![0, 0], k),
                ],
            ),
            MultiPoly::monomial(2, vec![1, 1], 2.0),
        ],
    )
    .with_step("sector chord collapse")
}

/// Hyperbolic analogue of [`disc_radial_cubic`]: `x ↦ ((3 − q)/2)·x`
/// with `q = x₁² − x₂²`. Fixes the hyperbola `q = 1` and folds the level
/// `q = 3` to the origin, filling the hyperbolic sector spanned by a
/// triangle whose far corners sit on the hyperbola with `q ≤ 3` inside.
pub fn hyperbolic_radial_cubic() -> PolyMap {
    let scale = |i: usize| {
        let mut e = vec![0u32; 2];
        e[i] = 1;
        MultiPoly::monomial(2, e.clone(), rat(3, 2))
            .sub_ref(&{
                e[0] += 2;
                MultiPoly::monomial(2, e.clone(), rat(1, 2))
            })
            .add_ref(&{
                e[0] -= 2;
                e[1] += 2;
                MultiPoly::monomial(2, e, rat(1, 2))
            })
    };
    PolyMap::from_rat(2, vec![scale(0), scale(1)]).with_step("hyperbolic radial cubic rescale")
}

/// Square of the plane seen as split-complex numbers:
/// `(x₁, x₂) ↦ (x₁² + x₂², 2x₁x₂)`. Squares the level `q = x₁² − x₂²`
/// and doubles hyperbolic angles: a ray of slope `tan θ`, `|θ| < π/4`,
/// lands on the ray of slope `sin 2θ` — widening a hyperbolic sector.
pub fn split_complex_square() -> PolyMap {
    PolyMap::from_rat(
        2,
        vec![
            MultiPoly::from_terms(
                2,
                vec![(vec![2, 0], rat_int(1)), (vec![0, 2], rat_int(1))],
            ),
            MultiPoly::monomial(2, vec![1, 1], rat_int(2)),
        ],
    )
    .with_step("hyperbolic-angle-doubling square")
}

/// Chord map for hyperbolic sectors: with `K = 1/cos 2γ`,
/// `(x₁, x₂) ↦ ((1−K)x₁² + (1+K)x₂² + K, 2x₁x₂)`. Sends the hyperbola
/// `x₁² − x₂² = 1` to itself and both straight edges of the hyperbolic
/// sector of half-opening `γ` onto the vertical line `x₁ = 1/cos 2γ`,
/// turning the sector into the region pinched between chord and
/// hyperbola.
pub fn hyperbolic_sector_to_segment(gamma: f64) -> PolyMap {
    let k = 1.0 / (2.0 * gamma).cos();
    PolyMap::from_f64(
        2,
        vec![
            MultiPoly::from_terms(
                2,
                vec![
                    (vec![2, 0], 1.0 - k),
                    (vec![0, 2], 1.0 + k),
                    (vec![0, 0], k),
                ],
            ),
            MultiPoly::monomial(2, vec![1, 1], 2.0),
        ],
    )
    .with_step("hyperbolic chord collapse")
}

/// Map from `B̄₂` onto the triangle with vertices `(0, 0)` and
/// `(c, ±slope·c)`: the first component sweeps `[0, c]` using the fold
/// `t·h(t)` that peaks exactly at 1, the second fans out by the odd fold
/// `g`, which already reaches `±1` at `±1/2` — close enough to the axis
/// that every needed fiber stays inside the ball. Even/odd in `x₂`.
pub fn triangle_map_symmetric(c: f64, slope: f64) -> Result<PolyMap> {
    if !(c > 0.0) || !(slope > 0.0) {
        return Err(BallmapError::Degenerate(format!(
            "triangle needs positive reach and slope, got c={c}, slope={slope}"
        )));
    }
    let s3 = 3.0f64.sqrt();
    // c/2·(x₁h(x₁) + 1) with x₁h(x₁) = √3x₁ − (4√3/9)x₁³.
    let comp1 = MultiPoly::from_terms(
        2,
        vec![
            (vec![1, 0], c / 2.0 * s3),
            (vec![3, 0], -c / 2.0 * 4.0 * s3 / 9.0),
            (vec![0, 0], c / 2.0),
        ],
    );
    // slope·(comp1 as above)·g(x₂) with g(x₂) = 3x₂ − 4x₂³.
    let scaled: Vec<(Vec<u32>, f64)> = comp1
        .terms()
        .flat_map(|(e, a)| {
            let e = e.to_vec();
            [
                ({
                    let mut e2 = e.clone();
                    e2[1] += 1;
                    e2
                }, slope * a * 3.0),
                ({
                    let mut e2 = e.clone();
                    e2[1] += 3;
                    e2
                }, slope * a * -4.0),
            ]
        })
        .collect();
    let comp2 = MultiPoly::from_terms(2, scaled);
    Ok(PolyMap::from_f64(2, vec![comp1, comp2]).with_step("symmetric triangle sweep"))
}

fn dyadic(x: f64) -> Result<Rat> {
    rat_from_f64_exact(x).ok_or_else(|| {
        BallmapError::ParamRange("angle constant is not representable".into())
    })
}

fn check_angle(alpha: f64, max: f64, what: &str) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 && alpha <= max {
        Ok(())
    } else {
        Err(BallmapError::ParamRange(format!(
            "{what} needs an opening angle in (0, {max:.6}], got {alpha}"
        )))
    }
}

/// The planar pipeline onto the circular sector of half-opening `alpha`:
/// triangle of half-opening `alpha/4` (its corners at radius
/// `sec(α/4) ≤ √2 < √3`, so the radial cubic applies), radial cubic
/// rescale, then two angle doublings.
fn elliptic_sector_pipeline(alpha: f64) -> Result<MapPipeline> {
    let tri = triangle_map_symmetric(1.0, (alpha / 4.0).tan())?;
    Ok(MapPipeline::new(vec![
        tri,
        disc_radial_cubic(),
        complex_square(),
        complex_square(),
    ])?
    .flattened_or_self())
}

/// Map from `B̄ₙ` onto the circular sector of half-opening `alpha ∈ (0, π]`
/// about the positive `x₁`-axis (rotated about that axis for `n ≥ 3`):
/// `{ ‖x‖ ≤ 1, angle(x, e₁) ≤ alpha }`.
pub fn elliptic_sector_map(alpha: f64, n: usize) -> Result<BrickResult> {
    check_angle(alpha, PI, "circular sector")?;
    if n < 2 {
        return Err(BallmapError::ParamRange(
            "circular sector needs dimension ≥ 2".into(),
        ));
    }
    let pipe2 = elliptic_sector_pipeline(alpha)?;
    let pipe = if n == 2 {
        pipe2
    } else {
        revolution_pipeline(&pipe2, n - 2)?.flattened_or_self()
    };

    let rs = dyadic(alpha.sin())?;
    let rc = dyadic(alpha.cos())?;
    let ball = sets::const_minus_sum_sq(n, rat_int(1), 0..n);
    let x1 = MultiPoly::var(n, 0);
    let mut e = vec![0u32; n];
    e[0] = 2;
    let cone = MultiPoly::monomial(n, e, rs.clone() * rs.clone())
        .sub_ref(&sets::sum_sq(n, 1..n).scale(&(rc.clone() * rc)));
    let (pieces, x1_lo) = if alpha <= FRAC_PI_2 {
        (vec![vec![ball, x1, cone]], 0.0)
    } else {
        (
            vec![
                vec![ball.clone(), x1.clone()],
                vec![ball, x1.neg_ref(), cone.neg_ref()],
            ],
            -1.0,
        )
    };
    let spread = if alpha <= FRAC_PI_2 { alpha.sin() } else { 1.0 };
    let mut bbox = vec![(x1_lo, 1.0)];
    bbox.extend(std::iter::repeat_n((-spread, spread), n - 1));
    let set = SemialgebraicSet::new(n, pieces)?.with_bbox(bbox);

    let mut center = vec![rat_int(0); n];
    center[0] = rat(1, 2);
    BrickResult::checked(pipe, set, center, true)
}

/// Map from `B̄ₙ` onto the disc segment `{ ‖x‖ ≤ 1, x₁ ≥ cos alpha }`
/// (rotated about the `x₁`-axis for `n ≥ 3`), `alpha ∈ (0, π]`: the
/// sector of half-opening `alpha/2` followed by the chord collapse.
pub fn elliptic_segment_map(alpha: f64, n: usize) -> Result<BrickResult> {
    check_angle(alpha, PI, "disc segment")?;
    if n < 2 {
        return Err(BallmapError::ParamRange(
            "disc segment needs dimension ≥ 2".into(),
        ));
    }
    let chord = dyadic(alpha.cos())?;
    if chord >= rat_int(1) {
        return Err(BallmapError::ParamRange(format!(
            "opening angle {alpha} is too small to leave room beyond the chord"
        )));
    }
    let pipe2 = MapPipeline::new(vec![
        // Half-opening alpha/2, then doubling via the chord map.
        triangle_map_symmetric(1.0, (alpha / 8.0).tan())?,
        disc_radial_cubic(),
        complex_square(),
        complex_square(),
        sector_to_segment(alpha / 2.0),
    ])?
    .flattened_or_self();
    let pipe = if n == 2 {
        pipe2
    } else {
        revolution_pipeline(&pipe2, n - 2)?.flattened_or_self()
    };

    let ball = sets::const_minus_sum_sq(n, rat_int(1), 0..n);
    let piece = vec![ball, sets::var_minus_const(n, 0, chord.clone())];
    let c_f = chord.to_f64();
    let spread = (1.0 - (c_f.max(0.0)).powi(2)).sqrt();
    let mut bbox = vec![(c_f, 1.0)];
    bbox.extend(std::iter::repeat_n((-spread, spread), n - 1));
    let set = SemialgebraicSet::new(n, vec![piece])?.with_bbox(bbox);

    let mut center = vec![rat_int(0); n];
    center[0] = (rat_int(1) + chord) / rat_int(2);
    BrickResult::checked(pipe, set, center, true)
}

/// Largest half-opening a hyperbolic triangle can cover directly: the
/// far corners sit at level `q = c² = 1/(1 − tan²θ)`, and the radial
/// cubic needs `q ≤ 3`, i.e. `tan θ ≤ √(2/3)`.
fn hyperbolic_direct_limit() -> f64 {
    (2.0f64 / 3.0).sqrt().atan()
}

/// Corner reach of the hyperbolic sector of half-opening `alpha`: its
/// straight edges meet the hyperbola `x₁² − x₂² = 1` at
/// `x₁ = cos α / √(cos 2α)`.
fn hyperbolic_corner(alpha: f64) -> f64 {
    alpha.cos() / (2.0 * alpha).cos().sqrt()
}

/// Plan the widening schedule for a hyperbolic sector of half-opening
/// `alpha ∈ (0, π/4)`: returns `(m, beta)` such that starting from the
/// directly constructible half-opening `beta` and doubling the
/// hyperbolic angle `m` times lands exactly on `alpha`. `m = 0` means
/// `alpha` itself is directly constructible. One doubling widens `β` to
/// `atan(sin 2β)`; its fixed point `π/4` is superattracting, so `m`
/// stays small for any representable angle (guarded at 12).
pub fn hyperbolic_sector_schedule(alpha: f64) -> Result<(usize, f64)> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha < FRAC_PI_4) {
        return Err(BallmapError::ParamRange(format!(
            "hyperbolic sector needs an opening angle in (0, π/4), got {alpha}"
        )));
    }
    let x0 = hyperbolic_direct_limit();
    if alpha <= x0 {
        return Ok((0, alpha));
    }
    let widen = |x: f64| (2.0 * x).sin().atan();
    let mut m = 0usize;
    let mut reach = x0;
    while reach <= alpha {
        m += 1;
        if m > 12 {
            return Err(BallmapError::RetryExhausted {
                attempts: 12,
                context: format!("widening a hyperbolic sector to half-opening {alpha}"),
            });
        }
        reach = widen(reach);
    }
    let widen_m = |b: f64| {
        let mut v = b;
        for _ in 0..m {
            v = widen(v);
        }
        v
    };
    let (mut lo, mut hi) = (0.0f64, x0);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if widen_m(mid) < alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((m, 0.5 * (lo + hi)))
}

fn hyperbolic_sector_pipeline(alpha: f64) -> Result<MapPipeline> {
    let (m, beta) = hyperbolic_sector_schedule(alpha)?;
    let tri = triangle_map_symmetric(hyperbolic_corner(beta), beta.tan())?;
    let mut stages = vec![tri, hyperbolic_radial_cubic()];
    stages.extend(std::iter::repeat_with(split_complex_square).take(m));
    Ok(MapPipeline::new(stages)?.flattened_or_self())
}

/// Map from `B̄ₙ` onto the hyperbolic sector of half-opening
/// `alpha ∈ (0, π/4)` (rotated about the `x₁`-axis for `n ≥ 3`): the
/// region between the rays of slope `±tan alpha` and the hyperbola
/// `x₁² − Σ_{j≥2} xⱼ² = 1`, on the origin side.
pub fn hyperbolic_sector_map(alpha: f64, n: usize) -> Result<BrickResult> {
    if n < 2 {
        return Err(BallmapError::ParamRange(
            "hyperbolic sector needs dimension ≥ 2".into(),
        ));
    }
    let pipe2 = hyperbolic_sector_pipeline(alpha)?;
    let pipe = if n == 2 {
        pipe2
    } else {
        revolution_pipeline(&pipe2, n - 2)?.flattened_or_self()
    };

    let rs = dyadic(alpha.sin())?;
    let rc = dyadic(alpha.cos())?;
    let sum_rest = sets::sum_sq(n, 1..n);
    let mut e = vec![0u32; n];
    e[0] = 2;
    let x1sq = MultiPoly::monomial(n, e, rat_int(1));
    let hyperbola = MultiPoly::constant(n, rat_int(1))
        .sub_ref(&x1sq)
        .add_ref(&sum_rest);
    let cone = x1sq.scale(&(rs.clone() * rs)).sub_ref(&sum_rest.scale(&(rc.clone() * rc)));
    let piece = vec![hyperbola, MultiPoly::var(n, 0), cone];
    let corner = hyperbolic_corner(alpha);
    let spread = corner * alpha.tan();
    let mut bbox = vec![(0.0, corner)];
    bbox.extend(std::iter::repeat_n((-spread, spread), n - 1));
    let set = SemialgebraicSet::new(n, vec![piece])?.with_bbox(bbox);

    // Interior point on the axis. Placed at 0.45/corner so chords from
    // it to any region point keep the hyperbola margin concave-side
    // (2εc ≤ 1 + ε² guarantees radial convexity); margins stay provably
    // positive for every admissible alpha.
    let mut center = vec![rat_int(0); n];
    center[0] = dyadic(0.45 / corner)?;
    BrickResult::checked(pipe, set, center, true)
}

/// Map from `B̄ₙ` onto the region pinched between the hyperbola
/// `x₁² − Σ_{j≥2} xⱼ² = 1` and its vertical chord
/// `x₁ = cos α / √(cos 2α)`, `alpha ∈ (0, π/4)` (rotated about the
/// `x₁`-axis for `n ≥ 3`): the hyperbolic sector of half-opening
/// `β = asin(tan α)/2` followed by the hyperbolic chord collapse, which
/// doubles `β` back while straightening the edges.
pub fn hyperbolic_segment_map(alpha: f64, n: usize) -> Result<BrickResult> {
    if n < 2 {
        return Err(BallmapError::ParamRange(
            "hyperbolic segment needs dimension ≥ 2".into(),
        ));
    }
    if !(alpha.is_finite() && alpha > 0.0 && alpha < FRAC_PI_4) {
        return Err(BallmapError::ParamRange(format!(
            "hyperbolic segment needs an opening angle in (0, π/4), got {alpha}"
        )));
    }
    let chord = dyadic(hyperbolic_corner(alpha))?;
    if chord <= rat_int(1) {
        return Err(BallmapError::ParamRange(format!(
            "opening angle {alpha} is too small to leave room beyond the hyperbola"
        )));
    }
    let beta = alpha.tan().asin() / 2.0;
    let sector = hyperbolic_sector_pipeline(beta)?;
    let pipe2 = sector
        .then(hyperbolic_sector_to_segment(beta))?
        .flattened_or_self();
    let pipe = if n == 2 {
        pipe2
    } else {
        revolution_pipeline(&pipe2, n - 2)?.flattened_or_self()
    };

    let sum_rest = sets::sum_sq(n, 1..n);
    let mut e = vec![0u32; n];
    e[0] = 2;
    let branch = MultiPoly::monomial(n, e, rat_int(1))
        .sub_ref(&sum_rest)
        .sub_ref(&MultiPoly::constant(n, rat_int(1)));
    let piece = vec![
        branch,
        MultiPoly::var(n, 0),
        sets::const_minus_var(n, 0, chord.clone()),
    ];
    let c_f = chord.to_f64();
    let spread = (c_f * c_f - 1.0).sqrt();
    let mut bbox = vec![(1.0, c_f)];
    bbox.extend(std::iter::repeat_n((-spread, spread), n - 1));
    let set = SemialgebraicSet::new(n, vec![piece])?.with_bbox(bbox);

    let mut center = vec![rat_int(0); n];
    center[0] = (rat_int(1) + chord) / rat_int(2);
    BrickResult::checked(pipe, set, center, true)
}
