//! Explicit polynomial maps from closed unit balls onto compact semialgebraic sets.
//!
//! This crate constructs, for a prescribed compact semialgebraic target —
//! a simplex, cube, cylinder, sector, star, convex hull, or a finite union
//! of convex polytopes or of such "bricks" — an explicit polynomial map
//! `f: ℝ^m → ℝ^n` with `f(B̄_m) = S`, where `B̄_m` is the closed unit ball.
//! Every construction is certified: prescribed waypoint identities are
//! checked exactly in rational arithmetic, and containment/coverage of the
//! image are checked by dense seeded sampling.
//!
//! Module layout:
//!
//! * [`polycore`] — exact and floating-point polynomial arithmetic
//!   (sparse multivariate, dense univariate, polynomial maps, canonical
//!   JSON).
//! * [`geometry`] — convex polytopes, triangulation of polytope unions,
//!   bridge arcs between polyhedra, the bridge graph, and the
//!   analytic-path-connectivity decision.
//! * [`bricks`] — the catalog of basic targets and the maps onto them.
//! * [`paths`] — single polynomial paths through prescribed waypoints
//!   confined to prescribed open regions (piecewise assembly, corner
//!   smoothing, simultaneous approximation with jet interpolation).
//! * [`assembler`] — the two headline pipelines: polytope unions swept by
//!   a moving simplex, and brick unions swept by a path in coefficient
//!   space; plus the hexagon reference construction with its verbatim
//!   degree-34 coefficients.
//! * [`verify`] — containment/coverage/waypoint certification and report
//!   types shared by everything above.

pub mod assembler;
pub mod bricks;
pub mod error;
pub mod geometry;
pub mod paths;
pub mod polycore;
pub mod verify;

pub use error::{BallmapError, Result};
