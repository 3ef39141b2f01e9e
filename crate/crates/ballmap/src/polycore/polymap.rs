//! Polynomial maps `f: ℝ^m → ℝ^n` with a construction trace.
//!
//! A map is a tuple of multivariate polynomials over a shared source
//! dimension. Coefficients live in one of three rings:
//!
//! * exact rationals — the default; every construction with rational
//!   input data stays here, and only here are waypoint checks exact;
//! * `ℚ(√3)` — crate-internal; compositions that cancel their `√3`
//!   factors are demoted back to exact rationals automatically;
//! * binary64 — maps whose defining constants are irrational angle data
//!   (trigonometric values). These are "float-tagged": exact checks on
//!   them downgrade to tolerance checks.
//!
//! The serialized backend tag is two-valued (`exact` / `float`); the
//! `ℚ(√3)` ring never escapes to artifacts.

use super::multipoly::MultiPoly;
use super::scalar::{QSqrt3, Rat, Ring};
use crate::error::{BallmapError, Result};

/// Public coefficient-backend tag.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Backend {
    /// All coefficients are exact rationals.
    Exact,
    /// Coefficients are binary64 (or carry a surviving `√3` factor and
    /// will serialize as binary64).
    Float,
}

/// Component storage for the three coefficient rings.
#[derive(Clone, PartialEq, Debug)]
pub enum MapComps {
    Rat(Vec<MultiPoly<Rat>>),
    Sq3(Vec<MultiPoly<QSqrt3>>),
    F64(Vec<MultiPoly<f64>>),
}

/// Polynomial map with declared source dimension and construction trace.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMap {
    nvars: usize,
    comps: MapComps,
    trace: Vec<String>,
}

fn check_arity<C: Ring>(comps: &[MultiPoly<C>], nvars: usize) {
    for (i, c) in comps.iter().enumerate() {
        assert_eq!(
            c.nvars(),
            nvars,
            "component {i} disagrees on source dimension"
        );
    }
}

impl PolyMap {
    /// Exact-rational map from components.
    pub fn from_rat(nvars: usize, comps: Vec<MultiPoly<Rat>>) -> Self {
        check_arity(&comps, nvars);
        Self {
            nvars,
            comps: MapComps::Rat(comps),
            trace: Vec::new(),
        }
    }

    /// `ℚ(√3)` map from components; demoted to exact rationals when every
    /// `√3` part cancels.
    pub fn from_sq3(nvars: usize, comps: Vec<MultiPoly<QSqrt3>>) -> Self {
        check_arity(&comps, nvars);
        let all_rational = comps
            .iter()
            .all(|p| p.terms().all(|(_, c)| c.is_rational()));
        let comps = if all_rational {
            MapComps::Rat(
                comps
                    .iter()
                    .map(|p| p.map_coeffs(|c| c.rational.clone()))
                    .collect(),
            )
        } else {
            MapComps::Sq3(comps)
        };
        Self {
            nvars,
            comps,
            trace: Vec::new(),
        }
    }

    /// Float-backed map from components.
    pub fn from_f64(nvars: usize, comps: Vec<MultiPoly<f64>>) -> Self {
        check_arity(&comps, nvars);
        Self {
            nvars,
            comps: MapComps::F64(comps),
            trace: Vec::new(),
        }
    }

    /// The identity map on `ℝ^n`.
    pub fn identity(n: usize) -> Self {
        Self::from_rat(n, (0..n).map(|i| MultiPoly::var(n, i)).collect())
            .with_step(format!("identity on R^{n}"))
    }

    /// The constant map with the given value.
    pub fn constant_map(nvars: usize, value: &[Rat]) -> Self {
        Self::from_rat(
            nvars,
            value
                .iter()
                .map(|v| MultiPoly::constant(nvars, v.clone()))
                .collect(),
        )
    }

    /// Source dimension `m` (the ball `B̄_m` this map is meant to be
    /// restricted to).
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Target dimension `n`.
    pub fn ncomps(&self) -> usize {
        match &self.comps {
            MapComps::Rat(v) => v.len(),
            MapComps::Sq3(v) => v.len(),
            MapComps::F64(v) => v.len(),
        }
    }

    /// Two-valued public backend tag.
    pub fn backend(&self) -> Backend {
        match &self.comps {
            MapComps::Rat(_) => Backend::Exact,
            _ => Backend::Float,
        }
    }

    /// True when coefficients are exact rationals.
    pub fn is_exact_rational(&self) -> bool {
        matches!(self.comps, MapComps::Rat(_))
    }

    /// True while a `√3` factor survives internally.
    pub fn has_radical(&self) -> bool {
        matches!(self.comps, MapComps::Sq3(_))
    }

    pub fn comps(&self) -> &MapComps {
        &self.comps
    }

    /// Exact rational components, if this is an exact map.
    pub fn comps_rat(&self) -> Option<&[MultiPoly<Rat>]> {
        match &self.comps {
            MapComps::Rat(v) => Some(v),
            _ => None,
        }
    }

    /// Components lifted into `ℚ(√3)` (never lossy; `None` for floats).
    pub fn comps_sq3(&self) -> Option<Vec<MultiPoly<QSqrt3>>> {
        match &self.comps {
            MapComps::Rat(v) => Some(
                v.iter()
                    .map(|p| p.map_coeffs(|c| QSqrt3::from_rat(c.clone())))
                    .collect(),
            ),
            MapComps::Sq3(v) => Some(v.clone()),
            MapComps::F64(_) => None,
        }
    }

    /// Components as binary64 polynomials (lossy rounding for the exact
    /// backends; the values themselves were computed exactly first).
    pub fn comps_f64(&self) -> Vec<MultiPoly<f64>> {
        match &self.comps {
            MapComps::Rat(v) => v.iter().map(MultiPoly::to_f64).collect(),
            MapComps::Sq3(v) => v.iter().map(MultiPoly::to_f64).collect(),
            MapComps::F64(v) => v.clone(),
        }
    }

    /// Force the float backend.
    pub fn to_float(&self) -> Self {
        Self {
            nvars: self.nvars,
            comps: MapComps::F64(self.comps_f64()),
            trace: self.trace.clone(),
        }
    }

    /// Largest total degree among components.
    pub fn degree(&self) -> u32 {
        match &self.comps {
            MapComps::Rat(v) => v.iter().map(MultiPoly::total_degree).max().unwrap_or(0),
            MapComps::Sq3(v) => v.iter().map(MultiPoly::total_degree).max().unwrap_or(0),
            MapComps::F64(v) => v.iter().map(MultiPoly::total_degree).max().unwrap_or(0),
        }
    }

    /// Numeric evaluation (all backends).
    pub fn eval_f64(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.nvars, "evaluation point dimension mismatch");
        match &self.comps {
            MapComps::Rat(v) => v.iter().map(|p| p.to_f64().eval(&x.to_vec())).collect(),
            MapComps::Sq3(v) => v.iter().map(|p| p.to_f64().eval(&x.to_vec())).collect(),
            MapComps::F64(v) => v.iter().map(|p| p.eval(x)).collect(),
        }
    }

    /// Exact evaluation at a rational point; `None` for float maps.
    pub fn eval_rat(&self, x: &[Rat]) -> Option<Vec<Rat>> {
        match &self.comps {
            MapComps::Rat(v) => Some(v.iter().map(|p| p.eval(x)).collect()),
            _ => None,
        }
    }

    /// Exact evaluation in `ℚ(√3)` at a rational point; works for both
    /// exact backends, `None` for floats.
    pub fn eval_q(&self, x: &[Rat]) -> Option<Vec<QSqrt3>> {
        let comps = self.comps_sq3()?;
        let xq: Vec<QSqrt3> = x.iter().map(|v| QSqrt3::from_rat(v.clone())).collect();
        Some(comps.iter().map(|p| p.eval(&xq)).collect())
    }

    /// Composition `self ∘ inner` (apply `inner` first). Backends are
    /// promoted to the weakest common ring; a `ℚ(√3)` result with all
    /// radical parts cancelled is demoted back to exact rationals.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.compose_capped(inner, usize::MAX)
    }

    /// Composition with a term budget: every intermediate product is
    /// abandoned with a size error as soon as it grows past `cap` terms,
    /// so towers whose flat form would be astronomically large fail fast.
    pub fn compose_capped(&self, inner: &Self, cap: usize) -> Result<Self> {
        if inner.ncomps() != self.nvars {
            return Err(BallmapError::DimensionMismatch {
                context: "compose",
                expected: self.nvars,
                got: inner.ncomps(),
            });
        }
        let over = || BallmapError::DegreeCap {
            cap,
            context: "composing polynomial maps".into(),
        };
        let nvars = inner.nvars;
        let comps = match (&self.comps, &inner.comps) {
            (MapComps::Rat(f), MapComps::Rat(g)) => MapComps::Rat(
                f.iter()
                    .map(|p| p.eval_poly_capped(g, cap).ok_or_else(over))
                    .collect::<Result<_>>()?,
            ),
            (MapComps::F64(_), _) | (_, MapComps::F64(_)) => {
                let f = self.comps_f64();
                let g = inner.comps_f64();
                MapComps::F64(
                    f.iter()
                        .map(|p| p.eval_poly_capped(&g, cap).ok_or_else(over))
                        .collect::<Result<_>>()?,
                )
            }
            _ => {
                // At least one ℚ(√3) operand, no floats: compose exactly.
                let f = self.comps_sq3().expect("non-float backend");
                let g = inner.comps_sq3().expect("non-float backend");
                return Ok(Self::from_sq3(
                    nvars,
                    f.iter()
                        .map(|p| p.eval_poly_capped(&g, cap).ok_or_else(over))
                        .collect::<Result<_>>()?,
                )
                .with_trace_of(inner, self));
            }
        };
        Ok(Self {
            nvars,
            comps,
            trace: Vec::new(),
        }
        .with_trace_of(inner, self))
    }

    /// Direct product: stack the maps on disjoint variable blocks.
    pub fn block(maps: &[Self]) -> Self {
        assert!(!maps.is_empty(), "block of zero maps");
        let nvars: usize = maps.iter().map(Self::nvars).sum();
        let any_float = maps.iter().any(|m| matches!(m.comps, MapComps::F64(_)));
        let any_radical = maps.iter().any(|m| matches!(m.comps, MapComps::Sq3(_)));
        let mut trace = Vec::new();
        for m in maps {
            trace.extend(m.trace.iter().cloned());
        }
        let mut offset = 0usize;
        if any_float {
            let mut comps = Vec::new();
            for m in maps {
                for p in m.comps_f64() {
                    comps.push(p.shift_vars(offset, nvars));
                }
                offset += m.nvars;
            }
            return Self {
                nvars,
                comps: MapComps::F64(comps),
                trace,
            };
        }
        if any_radical {
            let mut comps = Vec::new();
            for m in maps {
                for p in m.comps_sq3().expect("non-float backend") {
                    comps.push(p.shift_vars(offset, nvars));
                }
                offset += m.nvars;
            }
            let mut out = Self::from_sq3(nvars, comps);
            out.trace = trace;
            return out;
        }
        let mut comps = Vec::new();
        for m in maps {
            for p in m.comps_rat().expect("exact backend") {
                comps.push(p.shift_vars(offset, nvars));
            }
            offset += m.nvars;
        }
        Self {
            nvars,
            comps: MapComps::Rat(comps),
            trace,
        }
    }

    /// Construction trace: human-readable steps, outermost last.
    pub fn trace(&self) -> &[String] {
        &self.trace
    }

    /// Append a trace step.
    pub fn with_step(mut self, step: impl Into<String>) -> Self {
        self.trace.push(step.into());
        self
    }

    fn with_trace_of(mut self, inner: &Self, outer: &Self) -> Self {
        self.trace = inner
            .trace
            .iter()
            .chain(outer.trace.iter())
            .cloned()
            .collect();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::scalar::{rat, rat_int};

    /// The 1-variable squaring map and successor map compose exactly.
    #[test]
    fn compose_exact() {
        let sq = PolyMap::from_rat(1, vec![MultiPoly::var(1, 0).pow(2)]);
        let succ = PolyMap::from_rat(
            1,
            vec![&MultiPoly::var(1, 0) + &MultiPoly::constant(1, rat_int(1))],
        );
        let m = sq.compose(&succ).unwrap();
        let y = m.eval_rat(&[rat_int(3)]).unwrap();
        assert_eq!(y, vec![rat_int(16)]);
    }

    #[test]
    fn compose_with_identity_is_identity() {
        let sq = PolyMap::from_rat(2, vec![MultiPoly::var(2, 0).pow(2), MultiPoly::var(2, 1)]);
        let id = PolyMap::identity(2);
        assert_eq!(sq.compose(&id).unwrap().comps(), sq.comps());
        assert_eq!(id.compose(&sq).unwrap().comps(), sq.comps());
    }

    #[test]
    fn radical_cancellation_demotes_to_exact() {
        // f(x) = √3·x, then squared: 3x², exactly rational.
        let sqrt3x = MultiPoly::monomial(1, vec![1], QSqrt3::sqrt3());
        let inner = PolyMap::from_sq3(1, vec![sqrt3x]);
        assert!(inner.has_radical());
        let sq = PolyMap::from_rat(1, vec![MultiPoly::var(1, 0).pow(2)]);
        let composed = sq.compose(&inner).unwrap();
        assert!(composed.is_exact_rational());
        assert_eq!(
            composed.eval_rat(&[rat(1, 2)]).unwrap(),
            vec![rat(3, 4)]
        );
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let f = PolyMap::identity(2);
        let g = PolyMap::identity(3);
        assert!(matches!(
            f.compose(&g),
            Err(BallmapError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn block_shifts_variables() {
        let a = PolyMap::from_rat(1, vec![MultiPoly::var(1, 0).pow(2)]);
        let b = PolyMap::identity(2);
        let p = PolyMap::block(&[a, b]);
        assert_eq!(p.nvars(), 3);
        assert_eq!(p.ncomps(), 3);
        let y = p
            .eval_rat(&[rat_int(2), rat_int(5), rat_int(7)])
            .unwrap();
        assert_eq!(y, vec![rat_int(4), rat_int(5), rat_int(7)]);
    }
}
