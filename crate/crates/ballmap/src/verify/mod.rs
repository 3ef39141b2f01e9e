//! Certification utilities shared by every construction.
//!
//! Three kinds of evidence back a map-onto-set claim:
//!
//! * **Containment** — seeded quasi-uniform source samples pushed
//!   through the map must land inside the target set (up to a
//!   tolerance). See [`check_containment`].
//! * **Coverage** — target-set samples must all lie near the mapped
//!   image cloud; the report states the largest nearest-neighbor gap,
//!   never a symbolic "onto" claim. See [`check_coverage`].
//! * **Waypoints** — finitely many input/output pairs checked in exact
//!   rational arithmetic whenever the map's coefficients allow it. See
//!   [`check_waypoints`].
//!
//! All statistics are deterministic functions of the seed: sampling is
//! chunked and each chunk derives its own RNG stream, so thread
//! scheduling can never change a report.

mod checks;
mod report;
mod sample;

/// Seeded RNG stream for internal deterministic samplers.
pub(crate) fn hull_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    sample::chunk_rng(seed, 0x4811)
}

pub use checks::{check_containment, check_coverage, check_waypoints};
pub use report::{VerifyReport, WaypointRecord};
pub use sample::{
    sample_ball, sample_cube, sample_set, sample_set_with_tol, sample_simplex, SourceDomain,
};
