//! The package a brick construction hands back.

use crate::geometry::{Membership, SemialgebraicSet};
use crate::polycore::{MapPipeline, Rat};
use crate::{BallmapError, Result};

/// A certified brick: a polynomial map from the closed unit ball of its
/// source dimension onto a region, together with the region's inequality
/// description and an interior point for shrinking homotopies.
///
/// Invariants maintained by every constructor in this module tree:
/// the sampled image of the source ball lies in `set`; `homotopy_center`
/// is strictly interior to `set` (verified exactly at construction); and
/// `radially_convex` is true only when every segment from the center to a
/// point of the region stays inside it, which is what makes the shrinking
/// homotopy `t·p + (1−t)F(x)` land in the interior for `t ∈ (0,1)`.
#[derive(Clone, Debug)]
pub struct BrickResult {
    /// Map from the closed unit ball `B̄_m`, `m = map.nvars()`, onto the
    /// region. Kept in staged form; deep constructions cannot be expanded.
    pub map: MapPipeline,
    /// Inequality description of the image region.
    pub set: SemialgebraicSet,
    /// Exact strictly interior point of `set`.
    pub homotopy_center: Vec<Rat>,
    /// Whether `set` is strictly radially convex from the center, the
    /// precondition of the shrinking homotopy.
    pub radially_convex: bool,
}

impl BrickResult {
    /// Assemble and check the structural invariants that are cheap to
    /// verify exactly: matching dimensions and a strictly interior center.
    pub(crate) fn checked(
        map: MapPipeline,
        set: SemialgebraicSet,
        homotopy_center: Vec<Rat>,
        radially_convex: bool,
    ) -> Result<Self> {
        if map.ncomps() != set.dim() {
            return Err(BallmapError::DimensionMismatch {
                context: "brick map target vs region dimension",
                expected: set.dim(),
                got: map.ncomps(),
            });
        }
        if homotopy_center.len() != set.dim() {
            return Err(BallmapError::DimensionMismatch {
                context: "brick homotopy center dimension",
                expected: set.dim(),
                got: homotopy_center.len(),
            });
        }
        if set.membership_exact(&homotopy_center) != Membership::Inside {
            return Err(BallmapError::Degenerate(
                "brick homotopy center is not strictly interior to its region".into(),
            ));
        }
        Ok(Self {
            map,
            set,
            homotopy_center,
            radially_convex,
        })
    }

    /// Source ball dimension `m`.
    pub fn source_dim(&self) -> usize {
        self.map.nvars()
    }

    /// Ambient dimension of the image region.
    pub fn target_dim(&self) -> usize {
        self.map.ncomps()
    }
}
