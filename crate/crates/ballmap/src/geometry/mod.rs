//! Target-set geometry: polytopes, unions, semialgebraic descriptions,
//! triangulation, and bridge-based analytic connectivity.
//!
//! Everything structural is exact: vertex enumeration, convex hulls,
//! triangulations and bridge-direction searches run over arbitrary-precision
//! rationals, with a hand-rolled exact simplex solver ([`lp`]) underneath,
//! so "no bridge exists for this arc family at these base points" is a
//! theorem about the input, not a tolerance call. Floating point appears
//! only in sampling-oriented membership tests.
//!
//! Contents:
//! * [`linalg`] — exact solve/rank/nullspace for tiny systems.
//! * [`lp`] — exact two-phase simplex with Bland's rule.
//! * [`polytope`] — `HPolytope` (H-form, vertex enumeration ≤ 4D) and
//!   `Simplex` (barycentric predicates).
//! * [`plunion`] — unions of polytopes, JSON schema, centroid-fan
//!   triangulation.
//! * [`semialg`] — sets given by polynomial inequalities; membership.
//! * [`bridge`] — analytic arcs between polytopes, bridge graphs, walks,
//!   connectivity decision.

pub mod bridge;
pub mod linalg;
pub mod lp;
pub mod plunion;
pub mod polytope;
pub mod semialg;

pub use bridge::{
    arc_certificate_ok, bridge_between, bridge_graph, is_analytic_path_connected, walk_order,
    BridgeGraph, BridgeSpec,
};
pub use lp::{Cmp, LinearProgram, LpOutcome};
pub use plunion::{fan_triangulation, PLUnion};
pub use polytope::{HPolytope, Simplex};
pub use semialg::{Membership, SemialgebraicSet};
