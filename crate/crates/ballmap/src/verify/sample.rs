//! Quasi-uniform samplers for source domains and target sets.
//!
//! Every verification statistic is computed from seeded streams of
//! points: source domains are sampled directly (ball via normalized
//! Gaussian directions with `U^{1/m}` radii, cubes per-coordinate,
//! simplices via exponential barycentric weights, products as
//! products), target sets by rejection from their bounding boxes.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::geometry::{Membership, SemialgebraicSet};
use crate::{BallmapError, Result};

/// A source region the certification samplers know how to draw from.
#[derive(Debug, Clone)]
pub enum SourceDomain {
    /// Closed unit ball `B̄_m`.
    Ball(usize),
    /// Cube `[−1, 1]^m`.
    Cube(usize),
    /// `B̄_{m−1} × [−1, 1]` (total dimension `m`).
    Cylinder(usize),
    /// Simplex × interval, sampled as a product.
    Prism {
        vertices: Vec<Vec<f64>>,
        lo: f64,
        hi: f64,
    },
}

impl SourceDomain {
    pub fn dim(&self) -> usize {
        match self {
            SourceDomain::Ball(m) | SourceDomain::Cube(m) | SourceDomain::Cylinder(m) => *m,
            SourceDomain::Prism { vertices, .. } => {
                vertices.first().map_or(0, Vec::len) + 1
            }
        }
    }

    /// Draw one quasi-uniform point of the domain.
    pub fn sample(&self, rng: &mut impl Rng) -> Vec<f64> {
        match self {
            SourceDomain::Ball(m) => sample_ball(rng, *m),
            SourceDomain::Cube(m) => sample_cube(rng, *m),
            SourceDomain::Cylinder(m) => {
                let mut x = sample_ball(rng, m.saturating_sub(1));
                x.push(rng.random_range(-1.0..=1.0));
                x
            }
            SourceDomain::Prism { vertices, lo, hi } => {
                let mut x = sample_simplex(rng, vertices);
                x.push(rng.random_range(*lo..=*hi));
                x
            }
        }
    }
}

/// Uniform point of the closed unit ball: a Gaussian vector scaled to
/// the sphere, then pulled inward by a `U^{1/m}` radius.
pub fn sample_ball(rng: &mut impl Rng, m: usize) -> Vec<f64> {
    if m == 0 {
        return Vec::new();
    }
    loop {
        let g: Vec<f64> = (0..m).map(|_| rng.sample(StandardNormal)).collect();
        let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm < 1e-12 {
            continue;
        }
        let r = rng.random_range(0.0..=1.0f64).powf(1.0 / m as f64);
        return g.into_iter().map(|v| v * r / norm).collect();
    }
}

/// Uniform point of `[−1, 1]^m`.
pub fn sample_cube(rng: &mut impl Rng, m: usize) -> Vec<f64> {
    (0..m).map(|_| rng.random_range(-1.0..=1.0)).collect()
}

/// Uniform point of the simplex spanned by `vertices` (barycentric
/// weights from normalized exponentials).
pub fn sample_simplex(rng: &mut impl Rng, vertices: &[Vec<f64>]) -> Vec<f64> {
    let dim = vertices.first().map_or(0, Vec::len);
    let mut weights: Vec<f64> = (0..vertices.len())
        .map(|_| -rng.random_range(f64::MIN_POSITIVE..1.0f64).ln())
        .collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let mut x = vec![0.0; dim];
    for (w, v) in weights.iter().zip(vertices) {
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi += w * vi;
        }
    }
    x
}

/// Deterministic per-chunk RNG: every sample index draws from a stream
/// that depends only on `seed` and its chunk, so parallel schedules
/// cannot change any reported number.
pub(crate) fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ chunk.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Draw `count` points of `set` by rejection from its bounding box.
/// Needs a bounding box; gives up after `4096 × count` proposals so a
/// mis-specified (measure-zero or mis-boxed) set fails loudly instead
/// of hanging.
pub fn sample_set(set: &SemialgebraicSet, count: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    let bbox = set.bbox().ok_or(BallmapError::Precondition(
        "target set carries no bounding box to sample from".into(),
    ))?;
    let mut rng = chunk_rng(seed, 0xB0B0);
    let mut out = Vec::with_capacity(count);
    let mut scratch = Vec::new();
    let mut margins = Vec::new();
    let mut budget = count.saturating_mul(4096).max(4096);
    let mut point = vec![0.0; bbox.len()];
    while out.len() < count {
        if budget == 0 {
            return Err(BallmapError::RetryExhausted {
                attempts: count.saturating_mul(4096).max(4096),
                context: "rejection sampling of the target set".into(),
            });
        }
        budget -= 1;
        for (p, (lo, hi)) in point.iter_mut().zip(bbox) {
            *p = if hi > lo {
                rng.random_range(*lo..=*hi)
            } else {
                *lo
            };
        }
        if set.min_margin(&point, &mut scratch, &mut margins) >= 0.0 {
            out.push(point.clone());
        }
    }
    Ok(out)
}

/// Like [`sample_set`] but classifying with a tolerance band, for sets
/// whose pieces are lower-dimensional (waypoint curves etc.).
pub fn sample_set_with_tol(
    set: &SemialgebraicSet,
    count: usize,
    tol: f64,
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    let bbox = set.bbox().ok_or(BallmapError::Precondition(
        "target set carries no bounding box to sample from".into(),
    ))?;
    let mut rng = chunk_rng(seed, 0xB0B1);
    let mut out = Vec::with_capacity(count);
    let mut budget = count.saturating_mul(4096).max(4096);
    let mut point = vec![0.0; bbox.len()];
    while out.len() < count {
        if budget == 0 {
            return Err(BallmapError::RetryExhausted {
                attempts: count.saturating_mul(4096).max(4096),
                context: "rejection sampling of the target set".into(),
            });
        }
        budget -= 1;
        for (p, (lo, hi)) in point.iter_mut().zip(bbox) {
            *p = if hi > lo {
                rng.random_range(*lo..=*hi)
            } else {
                *lo
            };
        }
        if set.membership(&point, tol) != Membership::Outside {
            out.push(point.clone());
        }
    }
    Ok(out)
}
