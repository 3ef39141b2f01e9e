//! Convex hulls of polynomial images of balls.
//!
//! If `f` maps `B̄_m` into ℝⁿ, every point of the convex hull of its
//! image is a combination `(1 − Σλ_k)·f(y₀) + Σ_k λ_k·f(y_k)` of `n+1`
//! image points with barycentric weights `λ` — so the hull itself is a
//! polynomial image of a ball: route `B̄_N`, `N = m(n+1) + n`, onto the
//! product of `n+1` source balls and a weight simplex, fan `f` across
//! the ball factors, and take the combination.
//!
//! The hull map is exact. The certified *description* of the hull is
//! not: it is the inequality form of a polytope spanned by sampled
//! extreme image points, with every facet pushed slightly outward so
//! fresh image samples stay inside. The report language for these
//! bricks is therefore "hull of sampled image within tolerance".

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::geometry::linalg::{affine_rank, dot, nullspace};
use crate::geometry::polytope::centroid_of;
use crate::geometry::{HPolytope, SemialgebraicSet};
use crate::polycore::{rat, rat_int, MapPipeline, MultiPoly, PolyMap, Rat, Ring};
use crate::verify::sample_ball;
use crate::{BallmapError, Result};

use super::base::{ball_from_cube, hypercube_pipeline, squaring_map};
use super::result::BrickResult;

/// Default image sample count for the hull description.
const HULL_SAMPLES: usize = 4096;
/// Default seed for the hull description sampler.
const HULL_SEED: u64 = 0xBA11;
/// How far each facet of the sampled hull is pushed outward (absolute
/// distance in target units).
const FACET_SLACK: f64 = 0.02;
/// Denominator of the dyadic grid extreme points are rounded to.
const DYADIC: i64 = 1 << 20;

/// Map from `B̄_{m(n+1)+n}` onto the convex hull of the image of `f`
/// (`f: B̄_m → ℝⁿ`), with the hull described from `HULL_SAMPLES` seeded
/// image samples. Target dimension is limited to `n ≤ 3` by the
/// polytope machinery behind the description.
pub fn convex_hull_map(f: &MapPipeline) -> Result<BrickResult> {
    convex_hull_map_seeded(f, HULL_SAMPLES, HULL_SEED)
}

/// [`convex_hull_map`] with explicit sampling controls for the hull
/// description (the map itself is deterministic and unaffected).
pub fn convex_hull_map_seeded(f: &MapPipeline, samples: usize, seed: u64) -> Result<BrickResult> {
    let m = f.nvars();
    let n = f.ncomps();
    if m == 0 || n == 0 {
        return Err(BallmapError::EmptyInput(
            "hull of a map needs positive source and target dimensions",
        ));
    }
    if n > 3 {
        return Err(BallmapError::Precondition(format!(
            "hull descriptions are supported up to target dimension 3, got {n}"
        )));
    }
    let pipe = caratheodory_pipeline(f)?;
    let cloud = sample_image(f, samples, seed);
    let extremes = support_extremes(n, &cloud)?;
    let (set, center, radially_convex) = describe_hull(n, &extremes, &cloud)?;
    if set.membership_exact(&center) == crate::geometry::Membership::Outside {
        return Err(BallmapError::Degenerate(
            "hull center fell outside its own description".into(),
        ));
    }
    Ok(BrickResult {
        map: pipe,
        set,
        homotopy_center: center,
        radially_convex,
    })
}

/// The routed hull map: cube split → per-block ball maps → weight
/// simplex → `f` fanned across the ball factors → convex combination.
fn caratheodory_pipeline(f: &MapPipeline) -> Result<MapPipeline> {
    let m = f.nvars();
    let n = f.ncomps();
    let total = m * (n + 1) + n;
    let cube = hypercube_pipeline(total)?;
    let mut ball_blocks: Vec<MapPipeline> = Vec::with_capacity(n + 2);
    for _ in 0..=n {
        ball_blocks.push(ball_from_cube(m)?);
    }
    ball_blocks.push(ball_from_cube(n)?);
    let balls = MapPipeline::block(&ball_blocks);
    let weights = MapPipeline::block(&[
        MapPipeline::from_map(PolyMap::identity(m * (n + 1))),
        MapPipeline::from_map(
            squaring_map(n).with_step("ball onto weight simplex"),
        ),
    ]);
    let mut fan_blocks: Vec<MapPipeline> = (0..=n).map(|_| f.clone()).collect();
    fan_blocks.push(MapPipeline::from_map(PolyMap::identity(n)));
    let fanned = MapPipeline::block(&fan_blocks);
    let mut stages = cube.stages().to_vec();
    stages.extend_from_slice(balls.stages());
    stages.extend_from_slice(weights.stages());
    stages.extend_from_slice(fanned.stages());
    stages.push(combination_stage(n));
    MapPipeline::new(stages)
}

/// Final stage `(z₀, …, zₙ, λ) ↦ (1 − Σλ_k)·z₀ + Σ_k λ_k·z_k`, degree 2.
fn combination_stage(n: usize) -> PolyMap {
    let width = n * (n + 1) + n;
    let lambda = |k: usize| MultiPoly::<Rat>::var(width, n * (n + 1) + k);
    let mut remainder = MultiPoly::constant(width, rat_int(1));
    for k in 0..n {
        remainder = remainder.sub_ref(&lambda(k));
    }
    let comps = (0..n)
        .map(|j| {
            let mut g = MultiPoly::var(width, j).mul_ref(&remainder);
            for k in 1..=n {
                g = g.add_ref(&MultiPoly::var(width, k * n + j).mul_ref(&lambda(k - 1)));
            }
            g
        })
        .collect();
    PolyMap::from_rat(width, comps).with_step("convex combination of fanned images")
}

/// Seeded image cloud: random ball samples plus a deterministic family
/// (origin, `±eᵢ`, and for curves a fine parameter grid) so isolated
/// extreme points of low-dimensional images are never missed.
fn sample_image(f: &MapPipeline, samples: usize, seed: u64) -> Vec<Vec<f64>> {
    let m = f.nvars();
    let mut sources: Vec<Vec<f64>> = Vec::with_capacity(samples + 2 * m + 1);
    sources.push(vec![0.0; m]);
    for i in 0..m {
        for s in [-1.0, 1.0] {
            let mut e = vec![0.0; m];
            e[i] = s;
            sources.push(e);
        }
    }
    if m == 1 {
        sources.extend((0..=2048).map(|k| vec![-1.0 + k as f64 / 1024.0]));
    }
    let mut rng = crate::verify::hull_rng(seed);
    sources.extend((0..samples).map(|_| sample_ball(&mut rng, m)));
    let compiled = crate::polycore::CompiledPipeline::new(f);
    sources.iter().map(|x| compiled.eval(x)).collect()
}

/// Reduce a cloud to candidate extreme points: the argmax of `d·p` over
/// a fixed family of support directions, rounded onto a dyadic grid.
fn support_extremes(n: usize, cloud: &[Vec<f64>]) -> Result<Vec<Vec<Rat>>> {
    if cloud.is_empty() {
        return Err(BallmapError::EmptyInput("image cloud for hull description"));
    }
    let dirs = support_directions(n);
    let mut keep = BTreeSet::new();
    for d in &dirs {
        let mut best = 0usize;
        let mut best_v = f64::NEG_INFINITY;
        for (i, p) in cloud.iter().enumerate() {
            let v: f64 = d.iter().zip(p).map(|(a, b)| a * b).sum();
            if v > best_v {
                best_v = v;
                best = i;
            }
        }
        keep.insert(best);
    }
    let mut out: Vec<Vec<Rat>> = keep
        .into_iter()
        .map(|i| cloud[i].iter().map(|&x| dyadic_round(x)).collect())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn dyadic_round(x: f64) -> Rat {
    let scaled = (x * DYADIC as f64).round();
    Rat::new(
        BigInt::from(scaled as i64),
        BigInt::from(DYADIC),
    )
}

fn support_directions(n: usize) -> Vec<Vec<f64>> {
    match n {
        1 => vec![vec![1.0], vec![-1.0]],
        2 => (0..64)
            .map(|k| {
                let th = std::f64::consts::TAU * k as f64 / 64.0;
                vec![th.cos(), th.sin()]
            })
            .collect(),
        _ => {
            // Fibonacci sphere: near-even coverage of S². Kept small —
            // facet enumeration over the extremes is exact and
            // combinatorial — and compensated by cloud-aware facet
            // inflation below.
            let count = 42;
            let golden = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
            (0..count)
                .map(|k| {
                    let z = 1.0 - 2.0 * (k as f64 + 0.5) / count as f64;
                    let r = (1.0 - z * z).sqrt();
                    let th = golden * k as f64;
                    vec![r * th.cos(), r * th.sin(), z]
                })
                .collect()
        }
    }
}

/// Build the certified description from the extreme points: a point, a
/// segment, or a full-dimensional polytope with outward facet slack.
/// Images of intermediate affine rank have no robust inequality
/// description in the ambient space and are refused.
fn describe_hull(
    n: usize,
    extremes: &[Vec<Rat>],
    cloud: &[Vec<f64>],
) -> Result<(SemialgebraicSet, Vec<Rat>, bool)> {
    match affine_rank(extremes) {
        0 => {
            let p = extremes[0].clone();
            let gs: Vec<MultiPoly<Rat>> = (0..n)
                .flat_map(|i| {
                    let x = MultiPoly::<Rat>::var(n, i);
                    let c = MultiPoly::constant(n, p[i].clone());
                    [x.sub_ref(&c), c.sub_ref(&x)]
                })
                .collect();
            let set = SemialgebraicSet::new(n, vec![gs])?.with_bbox(
                p.iter().map(|v| (Ring::to_f64(v), Ring::to_f64(v))).collect(),
            );
            Ok((set, p, true))
        }
        1 => {
            let (a, b) = farthest_pair(extremes);
            let u: Vec<Rat> = a.iter().zip(&b).map(|(x, y)| y - x).collect();
            let neg = |v: &[Rat]| v.iter().map(|c| -c).collect::<Vec<Rat>>();
            let mut gs = vec![
                affine_ineq(n, &u, &-dot(&u, &a)),
                affine_ineq(n, &neg(&u), &dot(&u, &b)),
            ];
            for w in nullspace(&[u.clone()], n) {
                let off = dot(&w, &a);
                gs.push(affine_ineq(n, &w, &-off.clone()));
                gs.push(affine_ineq(n, &neg(&w), &off));
            }
            let bbox = (0..n)
                .map(|i| {
                    let (x, y) = (Ring::to_f64(&a[i]), Ring::to_f64(&b[i]));
                    (x.min(y), x.max(y))
                })
                .collect();
            let set = SemialgebraicSet::new(n, vec![gs])?.with_bbox(bbox);
            let center = a
                .iter()
                .zip(&b)
                .map(|(x, y)| (x + y) / rat_int(2))
                .collect();
            Ok((set, center, true))
        }
        r if r == n => {
            let hull = HPolytope::from_vertices(extremes)?;
            let rows_a = hull.rows_a().to_vec();
            let mut rows_b = hull.rows_b().to_vec();
            for (a, b) in rows_a.iter().zip(&mut rows_b) {
                // Whatever part of the cloud the extreme-point hull
                // misses (it is built from finitely many support
                // directions) gets absorbed into the facet offsets,
                // plus the fixed slack for fresh samples.
                let af: Vec<f64> = a.iter().map(Ring::to_f64).collect();
                let bf = Ring::to_f64(b);
                let overshoot = cloud
                    .iter()
                    .map(|p| af.iter().zip(p).map(|(x, y)| x * y).sum::<f64>() - bf)
                    .fold(0.0f64, f64::max);
                let norm = af.iter().map(|c| c * c).sum::<f64>().sqrt();
                let bump = ((overshoot + FACET_SLACK * norm) * DYADIC as f64).ceil();
                *b += rat(bump as i64, DYADIC);
            }
            let inflated = HPolytope::new(rows_a, rows_b)?;
            let set = SemialgebraicSet::from_hpolytope(&inflated)?;
            Ok((set, centroid_of(extremes), true))
        }
        r => Err(BallmapError::Degenerate(format!(
            "image hull has affine rank {r} inside dimension {n}: neither a point, a segment, nor full-dimensional"
        ))),
    }
}

fn farthest_pair(points: &[Vec<Rat>]) -> (Vec<Rat>, Vec<Rat>) {
    let mut best = (points[0].clone(), points[0].clone());
    let mut best_d = rat_int(-1);
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            let d: Rat = p
                .iter()
                .zip(q)
                .map(|(x, y)| {
                    let t = x - y;
                    &t * &t
                })
                .sum();
            if d > best_d {
                best_d = d;
                best = (p.clone(), q.clone());
            }
        }
    }
    best
}

/// `Σ cᵢ·xᵢ + offset ≥ 0` as a polynomial.
fn affine_ineq(n: usize, coeffs: &[Rat], offset: &Rat) -> MultiPoly<Rat> {
    let mut g = MultiPoly::constant(n, offset.clone());
    for (i, c) in coeffs.iter().enumerate() {
        if !Ring::is_zero(c) {
            g = g.add_ref(&MultiPoly::var(n, i).scale(c));
        }
    }
    g
}
