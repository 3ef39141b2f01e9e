//! Containment, coverage, and waypoint certification.

use std::time::Instant;

use rayon::prelude::*;

use crate::geometry::SemialgebraicSet;
use crate::polycore::{
    rat_vec_to_strings, CompiledPipeline, MapPipeline, PipelineScratch, Rat, Ring,
};
use crate::{BallmapError, Result};

use super::report::{VerifyReport, WaypointRecord};
use super::sample::{chunk_rng, sample_set, SourceDomain};

const CHUNK: usize = 1024;

fn check_dims(map: &MapPipeline, source_dim: usize, target_dim: usize) -> Result<()> {
    if map.nvars() != source_dim {
        return Err(BallmapError::DimensionMismatch {
            context: "map source vs. sampling domain",
            expected: source_dim,
            got: map.nvars(),
        });
    }
    if map.ncomps() != target_dim {
        return Err(BallmapError::DimensionMismatch {
            context: "map target vs. set ambient space",
            expected: target_dim,
            got: map.ncomps(),
        });
    }
    Ok(())
}

/// Sample `n_samples` points of `source`, push them through `map`, and
/// test membership of every image point in `target`. A sample is a
/// violation when its best piece margin drops below `−tol`. The report
/// is deterministic in `seed` regardless of thread schedule.
pub fn check_containment(
    map: &MapPipeline,
    source: &SourceDomain,
    target: &SemialgebraicSet,
    n_samples: usize,
    tol: f64,
    seed: u64,
) -> Result<VerifyReport> {
    check_dims(map, source.dim(), target.dim())?;
    let start = Instant::now();
    let compiled = CompiledPipeline::new(map);
    let n_chunks = n_samples.div_ceil(CHUNK);
    let (violations, worst) = (0..n_chunks as u64)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let take = CHUNK.min(n_samples - c as usize * CHUNK);
            let mut scratch = PipelineScratch::default();
            let mut image = vec![0.0; compiled.ncomps()];
            let mut piece_scratch = Vec::new();
            let mut margins = Vec::new();
            let mut bad = 0usize;
            let mut worst = 0.0f64;
            for _ in 0..take {
                let x = source.sample(&mut rng);
                compiled.eval_into(&x, &mut image, &mut scratch);
                let margin = target.min_margin(&image, &mut piece_scratch, &mut margins);
                if margin < -tol {
                    bad += 1;
                }
                worst = worst.min(margin);
            }
            (bad, worst)
        })
        .reduce(|| (0, 0.0), |a, b| (a.0 + b.0, a.1.min(b.1)));
    Ok(VerifyReport {
        n_samples,
        violations,
        worst_margin: worst,
        coverage_gap: None,
        waypoints: Vec::new(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        interval_certified: None,
    })
}

/// Measure how much of `target` the image reaches: draw `n_img` source
/// points, map them into an image cloud, draw `n_tgt` points of the
/// target by rejection, and report the largest nearest-neighbor
/// distance from a target point into the cloud.
pub fn check_coverage(
    map: &MapPipeline,
    source: &SourceDomain,
    target: &SemialgebraicSet,
    n_img: usize,
    n_tgt: usize,
    seed: u64,
) -> Result<VerifyReport> {
    check_dims(map, source.dim(), target.dim())?;
    if n_img == 0 {
        return Err(BallmapError::EmptyInput("image cloud size"));
    }
    let start = Instant::now();
    let compiled = CompiledPipeline::new(map);
    let dim = compiled.ncomps();
    let n_chunks = n_img.div_ceil(CHUNK);
    // Flat row-major cloud, assembled chunk by chunk in index order.
    let cloud: Vec<f64> = (0..n_chunks as u64)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let take = CHUNK.min(n_img - c as usize * CHUNK);
            let mut scratch = PipelineScratch::default();
            let mut image = vec![0.0; dim];
            let mut rows = Vec::with_capacity(take * dim);
            for _ in 0..take {
                let x = source.sample(&mut rng);
                compiled.eval_into(&x, &mut image, &mut scratch);
                rows.extend_from_slice(&image);
            }
            rows
        })
        .flatten()
        .collect();
    let targets = sample_set(target, n_tgt, seed ^ 0x5EED_7A26_0CE1_11F0)?;
    let index = NearestNeighbors::build(dim, cloud);
    let gap = targets
        .par_iter()
        .map(|t| index.nearest_distance(t))
        .reduce(|| 0.0, f64::max);
    Ok(VerifyReport {
        n_samples: n_tgt,
        violations: 0,
        worst_margin: 0.0,
        coverage_gap: Some(gap),
        waypoints: Vec::new(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        interval_certified: None,
    })
}

/// Evaluate `map` at each waypoint input and compare with the expected
/// value. Exact pipelines are evaluated in exact arithmetic, so `exact`
/// certifies algebraic identity; float pipelines always report
/// `exact = false` with the observed values. Non-exact waypoints count
/// as violations and their float deviation feeds `worst_margin`.
pub fn check_waypoints(map: &MapPipeline, waypoints: &[(Vec<Rat>, Vec<Rat>)]) -> VerifyReport {
    let start = Instant::now();
    let mut records = Vec::with_capacity(waypoints.len());
    let mut violations = 0usize;
    let mut worst = 0.0f64;
    for (input, expected) in waypoints {
        let (got, exact) = match map.eval_q(input) {
            Some(values) => {
                let exact = values.len() == expected.len()
                    && values.iter().zip(expected).all(|(v, e)| v.as_rat() == Some(e));
                (values.iter().map(|v| v.to_string()).collect(), exact)
            }
            None => {
                let xf: Vec<f64> = input.iter().map(Ring::to_f64).collect();
                let values = map.eval_f64(&xf);
                (values.iter().map(|v| format!("{v}")).collect(), false)
            }
        };
        if !exact {
            violations += 1;
            let xf: Vec<f64> = input.iter().map(Ring::to_f64).collect();
            let vf = map.eval_f64(&xf);
            for (v, e) in vf.iter().zip(expected) {
                worst = worst.min(-(v - Ring::to_f64(e)).abs());
            }
        }
        records.push(WaypointRecord {
            input: rat_vec_to_strings(input),
            expected: rat_vec_to_strings(expected),
            got,
            exact,
        });
    }
    VerifyReport {
        n_samples: waypoints.len(),
        violations,
        worst_margin: worst,
        coverage_gap: None,
        waypoints: records,
        elapsed_ms: start.elapsed().as_millis() as u64,
        interval_certified: None,
    }
}

/// Nearest-neighbor index over a flat point cloud: a uniform grid of
/// buckets in dimensions ≤ 3 (queried by expanding cell rings), brute
/// force above that.
pub(crate) struct NearestNeighbors {
    dim: usize,
    pts: Vec<f64>,
    grid: Option<Grid>,
}

struct Grid {
    lo: Vec<f64>,
    cell: f64,
    shape: Vec<usize>,
    buckets: Vec<Vec<u32>>,
}

impl NearestNeighbors {
    pub(crate) fn build(dim: usize, pts: Vec<f64>) -> Self {
        let count = if dim == 0 { 0 } else { pts.len() / dim };
        let grid = (dim >= 1 && dim <= 3 && count >= 256)
            .then(|| Grid::build(dim, &pts))
            .flatten();
        Self { dim, pts, grid }
    }

    pub(crate) fn nearest_distance(&self, q: &[f64]) -> f64 {
        if self.pts.is_empty() {
            return f64::INFINITY;
        }
        match &self.grid {
            Some(g) => g.nearest(q, &self.pts, self.dim),
            None => self
                .pts
                .chunks_exact(self.dim.max(1))
                .map(|p| dist2(q, p))
                .fold(f64::INFINITY, f64::min)
                .sqrt(),
        }
    }
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

impl Grid {
    fn build(dim: usize, pts: &[f64]) -> Option<Grid> {
        let count = pts.len() / dim;
        let mut lo = vec![f64::INFINITY; dim];
        let mut hi = vec![f64::NEG_INFINITY; dim];
        for p in pts.chunks_exact(dim) {
            for i in 0..dim {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        if lo.iter().chain(hi.iter()).any(|v| !v.is_finite()) {
            return None;
        }
        let max_extent = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| h - l)
            .fold(0.0f64, f64::max);
        if max_extent <= 0.0 {
            return None;
        }
        // Aim for a couple of points per occupied cell, capped so the
        // bucket table stays small.
        let per_axis = ((count as f64 / 2.0).powf(1.0 / dim as f64).ceil() as usize)
            .clamp(1, 64);
        let cell = max_extent / per_axis as f64;
        let shape: Vec<usize> = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| (((h - l) / cell).floor() as usize + 1).clamp(1, 65))
            .collect();
        let total: usize = shape.iter().product();
        let mut buckets = vec![Vec::new(); total];
        for (idx, p) in pts.chunks_exact(dim).enumerate() {
            let cells: Vec<usize> = (0..dim)
                .map(|i| (((p[i] - lo[i]) / cell) as usize).min(shape[i] - 1))
                .collect();
            buckets[flat_index(&cells, &shape)].push(idx as u32);
        }
        Some(Grid {
            lo,
            cell,
            shape,
            buckets,
        })
    }

    fn nearest(&self, q: &[f64], pts: &[f64], dim: usize) -> f64 {
        let home: Vec<isize> = (0..dim)
            .map(|i| {
                (((q[i] - self.lo[i]) / self.cell) as isize)
                    .clamp(0, self.shape[i] as isize - 1)
            })
            .collect();
        let max_shape = *self.shape.iter().max().unwrap_or(&1);
        let mut best2 = f64::INFINITY;
        for ring in 0..=max_shape as isize {
            // Every cell of Chebyshev ring `r ≥ 1` is at least
            // `(r−1)·cell` away from the query point.
            if best2.is_finite() && ring >= 2 {
                let lower = (ring - 1) as f64 * self.cell;
                if lower * lower > best2 {
                    break;
                }
            }
            self.for_ring(&home, ring, &mut |cell_idx| {
                for &pi in &self.buckets[cell_idx] {
                    let p = &pts[pi as usize * dim..(pi as usize + 1) * dim];
                    best2 = best2.min(dist2(q, p));
                }
            });
        }
        best2.sqrt()
    }

    /// Visit every in-range cell at Chebyshev distance exactly `ring`
    /// from `home`.
    fn for_ring(&self, home: &[isize], ring: isize, visit: &mut impl FnMut(usize)) {
        let dim = home.len();
        let mut cells = vec![0usize; dim];
        let mut walk = |coords: &[isize]| {
            if coords
                .iter()
                .zip(home)
                .map(|(c, h)| (c - h).abs())
                .max()
                .unwrap_or(0)
                != ring
            {
                return;
            }
            for i in 0..dim {
                if coords[i] < 0 || coords[i] >= self.shape[i] as isize {
                    return;
                }
            }
            for i in 0..dim {
                cells[i] = coords[i] as usize;
            }
            visit(flat_index(&cells, &self.shape));
        };
        match dim {
            1 => {
                for a in home[0] - ring..=home[0] + ring {
                    walk(&[a]);
                }
            }
            2 => {
                for a in home[0] - ring..=home[0] + ring {
                    for b in home[1] - ring..=home[1] + ring {
                        if (a - home[0]).abs() == ring || (b - home[1]).abs() == ring {
                            walk(&[a, b]);
                        }
                    }
                }
            }
            _ => {
                for a in home[0] - ring..=home[0] + ring {
                    for b in home[1] - ring..=home[1] + ring {
                        for c in home[2] - ring..=home[2] + ring {
                            if (a - home[0]).abs() == ring
                                || (b - home[1]).abs() == ring
                                || (c - home[2]).abs() == ring
                            {
                                walk(&[a, b, c]);
                            }
                        }
                    }
                }
            }
        }
    }
}

fn flat_index(cells: &[usize], shape: &[usize]) -> usize {
    let mut idx = 0usize;
    for (c, s) in cells.iter().zip(shape) {
        idx = idx * s + c;
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{rat, rat_int, MultiPoly, PolyMap};
    use rand::Rng;

    fn identity_map(n: usize) -> MapPipeline {
        let comps = (0..n).map(|i| MultiPoly::<Rat>::var(n, i)).collect();
        MapPipeline::from_map(PolyMap::from_rat(n, comps))
    }

    #[test]
    fn identity_on_ball_has_no_violations() {
        let map = identity_map(2);
        let ball = SemialgebraicSet::unit_ball(2);
        let rep =
            check_containment(&map, &SourceDomain::Ball(2), &ball, 10_000, 1e-9, 42).unwrap();
        assert_eq!(rep.violations, 0);
        assert!(rep.worst_margin >= 0.0);
        // Same seed, same report (modulo timing).
        let rep2 =
            check_containment(&map, &SourceDomain::Ball(2), &ball, 10_000, 1e-9, 42).unwrap();
        assert_eq!(rep.violations, rep2.violations);
        assert_eq!(rep.worst_margin, rep2.worst_margin);
    }

    #[test]
    fn shifted_map_is_caught() {
        let comps = vec![
            MultiPoly::<Rat>::var(2, 0).add_ref(&MultiPoly::constant(2, rat_int(2))),
            MultiPoly::var(2, 1),
        ];
        let map = MapPipeline::from_map(PolyMap::from_rat(2, comps));
        let ball = SemialgebraicSet::unit_ball(2);
        let rep = check_containment(&map, &SourceDomain::Ball(2), &ball, 1000, 1e-9, 1).unwrap();
        assert_eq!(rep.violations, 1000);
        assert!(rep.worst_margin < -1.0);
    }

    #[test]
    fn identity_coverage_gap_shrinks() {
        let map = identity_map(2);
        let ball = SemialgebraicSet::unit_ball(2);
        let small = check_coverage(&map, &SourceDomain::Ball(2), &ball, 1_000, 400, 9).unwrap();
        let large = check_coverage(&map, &SourceDomain::Ball(2), &ball, 100_000, 400, 9).unwrap();
        let (gs, gl) = (small.coverage_gap.unwrap(), large.coverage_gap.unwrap());
        assert!(gl <= gs, "gap grew: {gs} -> {gl}");
        assert!(gl <= 0.05, "gap too large at 1e5 samples: {gl}");
    }

    #[test]
    fn constant_map_coverage_gap_detects_missing_mass() {
        // Constant at the center of the square [0,1]²: the farthest
        // target points are the corners at distance √2/2.
        let comps = vec![
            MultiPoly::<Rat>::constant(2, rat(1, 2)),
            MultiPoly::constant(2, rat(1, 2)),
        ];
        let map = MapPipeline::from_map(PolyMap::from_rat(2, comps));
        let square = SemialgebraicSet::from_hpolytope(
            &crate::geometry::HPolytope::axis_box(
                &[rat_int(0), rat_int(0)],
                &[rat_int(1), rat_int(1)],
            )
            .unwrap(),
        )
        .unwrap();
        let rep = check_coverage(&map, &SourceDomain::Ball(2), &square, 2_000, 4_000, 3).unwrap();
        let gap = rep.coverage_gap.unwrap();
        assert!((gap - std::f64::consts::FRAC_1_SQRT_2).abs() < 0.03, "gap {gap}");
    }

    #[test]
    fn waypoints_flag_exact_and_broken_values() {
        let map = identity_map(1);
        let rep = check_waypoints(
            &map,
            &[
                (vec![rat(1, 2)], vec![rat(1, 2)]),
                (vec![rat(1, 3)], vec![rat(1, 4)]),
            ],
        );
        assert_eq!(rep.violations, 1);
        assert!(rep.waypoints[0].exact);
        assert!(!rep.waypoints[1].exact);
        assert!(rep.worst_margin < -0.08);
    }

    #[test]
    fn grid_and_brute_force_agree() {
        let mut rng = chunk_rng(11, 0);
        let dim = 3;
        let pts: Vec<f64> = (0..3000 * dim).map(|_| rng.random_range(-1.0..1.0)).collect();
        let grid = NearestNeighbors::build(dim, pts.clone());
        let brute = NearestNeighbors {
            dim,
            pts,
            grid: None,
        };
        for _ in 0..200 {
            let q: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.5..1.5)).collect();
            let a = grid.nearest_distance(&q);
            let b = brute.nearest_distance(&q);
            assert!((a - b).abs() < 1e-12, "grid {a} vs brute {b}");
        }
    }
}
