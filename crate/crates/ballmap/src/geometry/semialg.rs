//! Semialgebraic target-set descriptions and membership tests.
//!
//! A set is a finite union of *basic pieces*, each a conjunction of
//! polynomial inequalities `g ≥ 0`. Every region a map is certified against
//! is described this way: polytopes and simplices convert losslessly,
//! curved regions (balls, parabolic/elliptic sectors) are supplied by their
//! defining inequalities. Membership is available both exactly (rational
//! points, rational polynomials) and as a fast float test with tolerance
//! for sampling loops, which uses compiled evaluators.

use super::plunion::PLUnion;
use super::polytope::{HPolytope, Simplex};
use crate::polycore::{rat_int, CompiledMap, MultiPoly, Rat, Ring};
use crate::{BallmapError, Result};

/// Classification of a point relative to a set, given a tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// Some piece satisfies every inequality strictly beyond the tolerance.
    Inside,
    /// No piece is strict, but some piece holds within the tolerance band.
    Boundary,
    /// Every piece is violated beyond the tolerance.
    Outside,
}

/// One conjunction of polynomial inequalities `g_i(x) ≥ 0`.
#[derive(Debug, Clone)]
pub struct BasicPiece {
    gs: Vec<MultiPoly<Rat>>,
    compiled: CompiledMap,
}

impl BasicPiece {
    fn new(nvars: usize, gs: Vec<MultiPoly<Rat>>) -> Result<Self> {
        if gs.is_empty() {
            return Err(BallmapError::EmptyInput(
                "a basic piece needs at least one inequality",
            ));
        }
        if let Some(bad) = gs.iter().find(|g| g.nvars() != nvars) {
            return Err(BallmapError::DimensionMismatch {
                context: "inequality variable count",
                expected: nvars,
                got: bad.nvars(),
            });
        }
        let f64_gs: Vec<MultiPoly<f64>> = gs.iter().map(|g| g.to_f64()).collect();
        let compiled = CompiledMap::from_components(nvars, &f64_gs);
        Ok(Self { gs, compiled })
    }

    pub fn inequalities(&self) -> &[MultiPoly<Rat>] {
        &self.gs
    }
}

/// A finite union of basic pieces in a common ambient space.
#[derive(Debug, Clone)]
pub struct SemialgebraicSet {
    dim: usize,
    pieces: Vec<BasicPiece>,
    /// Optional float bounding box used by coverage samplers.
    bbox: Option<Vec<(f64, f64)>>,
}

impl SemialgebraicSet {
    pub fn new(dim: usize, pieces: Vec<Vec<MultiPoly<Rat>>>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(BallmapError::EmptyInput("set needs at least one piece"));
        }
        let pieces = pieces
            .into_iter()
            .map(|gs| BasicPiece::new(dim, gs))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dim,
            pieces,
            bbox: None,
        })
    }

    /// Attach a bounding box (needed by coverage samplers).
    pub fn with_bbox(mut self, bbox: Vec<(f64, f64)>) -> Self {
        assert_eq!(bbox.len(), self.dim, "bounding box width");
        self.bbox = Some(bbox);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> &[BasicPiece] {
        &self.pieces
    }

    pub fn bbox(&self) -> Option<&[(f64, f64)]> {
        self.bbox.as_deref()
    }

    /// The closed unit ball `{‖x‖² ≤ 1}`.
    pub fn unit_ball(n: usize) -> Self {
        let mut g = MultiPoly::constant(n, rat_int(1));
        for i in 0..n {
            let sq = MultiPoly::var(n, i).pow(2);
            g = g.sub_ref(&sq);
        }
        Self::new(n, vec![vec![g]])
            .expect("unit ball description is well-formed")
            .with_bbox(vec![(-1.0, 1.0); n])
    }

    /// Convert a polytope: one piece, `b_i − a_i·x ≥ 0` per row.
    pub fn from_hpolytope(p: &HPolytope) -> Result<Self> {
        let n = p.dim();
        let gs: Vec<MultiPoly<Rat>> = (0..p.nrows())
            .map(|i| {
                let (row, b) = p.row(i);
                let mut g = MultiPoly::constant(n, b.clone());
                for (j, c) in row.iter().enumerate() {
                    if !Ring::is_zero(c) {
                        let t = MultiPoly::var(n, j).scale(c);
                        g = g.sub_ref(&t);
                    }
                }
                g
            })
            .collect();
        let set = Self::new(n, vec![gs])?;
        match p.bounding_box() {
            Ok(bb) => Ok(set.with_bbox(
                bb.iter()
                    .map(|(lo, hi)| (Ring::to_f64(lo), Ring::to_f64(hi)))
                    .collect(),
            )),
            Err(_) => Ok(set),
        }
    }

    pub fn from_simplex(s: &Simplex) -> Result<Self> {
        Self::from_hpolytope(&s.to_hpolytope()?)
    }

    /// Convert a union of polytopes: one piece per member.
    pub fn from_plunion(u: &PLUnion) -> Result<Self> {
        let mut pieces = Vec::new();
        let mut boxes = Vec::new();
        for m in u.members() {
            let single = Self::from_hpolytope(m)?;
            boxes.push(single.bbox.clone());
            pieces.push(single.pieces.into_iter().next().unwrap());
        }
        let mut set = Self {
            dim: u.dim(),
            pieces,
            bbox: None,
        };
        if boxes.iter().all(|b| b.is_some()) {
            let n = u.dim();
            let mut acc = vec![(f64::INFINITY, f64::NEG_INFINITY); n];
            for b in boxes.into_iter().flatten() {
                for (i, (lo, hi)) in b.into_iter().enumerate() {
                    acc[i].0 = acc[i].0.min(lo);
                    acc[i].1 = acc[i].1.max(hi);
                }
            }
            set.bbox = Some(acc);
        }
        Ok(set)
    }

    /// Union of two sets over the same space (pieces concatenated).
    pub fn union(mut self, other: SemialgebraicSet) -> Result<SemialgebraicSet> {
        if self.dim != other.dim {
            return Err(BallmapError::DimensionMismatch {
                context: "set union ambient dimension",
                expected: self.dim,
                got: other.dim,
            });
        }
        self.pieces.extend(other.pieces);
        self.bbox = match (self.bbox.take(), other.bbox) {
            (Some(a), Some(b)) => Some(
                a.into_iter()
                    .zip(b)
                    .map(|((alo, ahi), (blo, bhi))| (alo.min(blo), ahi.max(bhi)))
                    .collect(),
            ),
            _ => None,
        };
        Ok(self)
    }

    /// The best piece margin at `x`: max over pieces of (min over its
    /// inequalities of `g(x)`). Positive strictly inside, ≈0 on the
    /// boundary, negative outside.
    pub fn min_margin(&self, x: &[f64], scratch: &mut Vec<f64>, out: &mut Vec<f64>) -> f64 {
        let mut best = f64::NEG_INFINITY;
        for piece in &self.pieces {
            out.resize(piece.compiled.ncomps(), 0.0);
            piece.compiled.eval_into(x, out, scratch);
            let worst = out.iter().copied().fold(f64::INFINITY, f64::min);
            best = best.max(worst);
        }
        best
    }

    /// Float membership with tolerance.
    pub fn membership(&self, x: &[f64], tol: f64) -> Membership {
        let mut scratch = Vec::new();
        let mut out = Vec::new();
        let margin = self.min_margin(x, &mut scratch, &mut out);
        if margin > tol {
            Membership::Inside
        } else if margin >= -tol {
            Membership::Boundary
        } else {
            Membership::Outside
        }
    }

    /// Exact membership of a rational point (tolerance zero).
    pub fn membership_exact(&self, x: &[Rat]) -> Membership {
        let zero = rat_int(0);
        let mut any_closed = false;
        for piece in &self.pieces {
            let vals: Vec<Rat> = piece.gs.iter().map(|g| g.eval(x)).collect();
            if vals.iter().all(|v| *v > zero) {
                return Membership::Inside;
            }
            if vals.iter().all(|v| *v >= zero) {
                any_closed = true;
            }
        }
        if any_closed {
            Membership::Boundary
        } else {
            Membership::Outside
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    #[test]
    fn unit_disc_membership() {
        let disc = SemialgebraicSet::unit_ball(2);
        assert_eq!(disc.membership(&[0.0, 0.0], 1e-9), Membership::Inside);
        assert_eq!(disc.membership(&[1.0, 0.0], 1e-9), Membership::Boundary);
        assert_eq!(disc.membership(&[2.0, 0.0], 1e-9), Membership::Outside);
        assert_eq!(
            disc.membership_exact(&[rat(1, 2), rat(1, 2)]),
            Membership::Inside
        );
        assert_eq!(
            disc.membership_exact(&[rat_int(1), rat_int(0)]),
            Membership::Boundary
        );
        assert_eq!(
            disc.membership_exact(&[rat_int(2), rat_int(0)]),
            Membership::Outside
        );
    }

    #[test]
    fn polytope_conversion_matches() {
        let sq = HPolytope::axis_box(
            &[rat_int(0), rat_int(0)],
            &[rat_int(1), rat_int(1)],
        )
        .unwrap();
        let set = SemialgebraicSet::from_hpolytope(&sq).unwrap();
        assert_eq!(set.membership(&[0.5, 0.5], 1e-9), Membership::Inside);
        assert_eq!(set.membership(&[1.0, 0.5], 1e-9), Membership::Boundary);
        assert_eq!(set.membership(&[1.5, 0.5], 1e-9), Membership::Outside);
        assert_eq!(set.bbox().unwrap(), &[(0.0, 1.0), (0.0, 1.0)]);
    }

    #[test]
    fn union_of_pieces() {
        let left = SemialgebraicSet::from_hpolytope(
            &HPolytope::axis_box(&[rat_int(0), rat_int(0)], &[rat_int(1), rat_int(1)]).unwrap(),
        )
        .unwrap();
        let right = SemialgebraicSet::from_hpolytope(
            &HPolytope::axis_box(&[rat_int(2), rat_int(0)], &[rat_int(3), rat_int(1)]).unwrap(),
        )
        .unwrap();
        let both = left.union(right).unwrap();
        assert_eq!(both.membership(&[0.5, 0.5], 1e-9), Membership::Inside);
        assert_eq!(both.membership(&[2.5, 0.5], 1e-9), Membership::Inside);
        assert_eq!(both.membership(&[1.5, 0.5], 1e-9), Membership::Outside);
        assert_eq!(both.bbox().unwrap(), &[(0.0, 3.0), (0.0, 1.0)]);
    }
}
