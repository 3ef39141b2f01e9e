//! Exact and floating-point polynomial arithmetic.
//!
//! Everything the rest of the crate builds is a polynomial with exact
//! rational coefficients whenever the inputs are rational; binary64
//! floats are confined to sampling and verification, plus maps whose
//! defining constants are genuinely irrational (trigonometric angle
//! data). A third, crate-internal coefficient ring `ℚ(√3)` exists so that
//! compositions in which `√3` factors cancel (squared cylinder
//! components) land back in exact rationals automatically instead of
//! being degraded to floats.
//!
//! Contents:
//! * [`scalar`] — the coefficient-ring abstraction and the three rings.
//! * [`unipoly`] — dense univariate polynomials (paths, profile curves).
//! * [`multipoly`] — sparse exponent-vector multivariate polynomials.
//! * [`polymap`] — tuples of multivariate polynomials with a shared
//!   source dimension, a backend tag, and a construction trace.
//! * [`pipeline`] — staged compositions whose flat expansions would be
//!   too large to store.
//! * [`compiled`] — flattened f64 evaluators for sampling hot loops.
//! * [`json`] — canonical JSON with bit-exact round-trip.

pub mod compiled;
pub mod json;
pub mod multipoly;
pub mod pipeline;
pub mod polymap;
pub mod scalar;
pub mod unipoly;

pub use compiled::{CompiledMap, CompiledPipeline, PipelineScratch};
pub use json::{rat_vec_from_strings, rat_vec_to_strings, PolyMapRepr};
pub use multipoly::MultiPoly;
pub use pipeline::{MapPipeline, DEFAULT_TERM_BUDGET};
pub use polymap::{Backend, MapComps, PolyMap};
pub use scalar::{
    rat, rat_from_f64_exact, rat_from_str, rat_int, rat_to_string, Field, QSqrt3, Rat, Ring,
};
pub use unipoly::{taylor_jet, UniPoly};
