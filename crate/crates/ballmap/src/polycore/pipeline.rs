//! Staged polynomial maps.
//!
//! Deeply composed constructions (hypercube towers, product routings,
//! Carathéodory combinations) have flat coefficient expansions whose term
//! counts grow multiplicatively with every composition — far past what can
//! be stored, let alone serialized. A [`MapPipeline`] keeps such a map as
//! an ordered list of small stages evaluated first-to-last, preserving
//! exactness stage by stage; [`MapPipeline::flatten`] expands to a single
//! [`PolyMap`] only under an explicit term budget.

use serde::{Deserialize, Serialize};

use super::polymap::{Backend, PolyMap};
use super::scalar::{QSqrt3, Rat};
use crate::error::{BallmapError, Result};

/// A polynomial map represented as a composition of stages.
///
/// `stages[0]` is applied to the input first; the overall map equals
/// `stages[last] ∘ … ∘ stages[0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MapPipeline {
    stages: Vec<PolyMap>,
}

impl MapPipeline {
    /// A single-stage pipeline.
    pub fn from_map(map: PolyMap) -> Self {
        Self { stages: vec![map] }
    }

    /// Build from stages, validating adjacent dimensions.
    pub fn new(stages: Vec<PolyMap>) -> Result<Self> {
        if stages.is_empty() {
            return Err(BallmapError::EmptyInput("pipeline with no stages"));
        }
        for w in stages.windows(2) {
            if w[0].ncomps() != w[1].nvars() {
                return Err(BallmapError::DimensionMismatch {
                    context: "pipeline stage boundary",
                    expected: w[0].ncomps(),
                    got: w[1].nvars(),
                });
            }
        }
        Ok(Self { stages })
    }

    /// Append a stage applied after the current pipeline.
    pub fn then(mut self, next: PolyMap) -> Result<Self> {
        if self.ncomps() != next.nvars() {
            return Err(BallmapError::DimensionMismatch {
                context: "pipeline stage boundary",
                expected: self.ncomps(),
                got: next.nvars(),
            });
        }
        self.stages.push(next);
        Ok(self)
    }

    /// Composition `outer ∘ inner` as concatenated stages.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        let mut stages = inner.stages.clone();
        stages.extend(outer.stages.iter().cloned());
        Self::new(stages)
    }

    pub fn nvars(&self) -> usize {
        self.stages[0].nvars()
    }

    pub fn ncomps(&self) -> usize {
        self.stages.last().expect("nonempty").ncomps()
    }

    pub fn stages(&self) -> &[PolyMap] {
        &self.stages
    }

    /// The sole stage, when the pipeline is a plain map.
    pub fn as_single(&self) -> Option<&PolyMap> {
        if self.stages.len() == 1 {
            Some(&self.stages[0])
        } else {
            None
        }
    }

    /// Float if any stage is float-backed; exact otherwise (radical stages
    /// evaluate exactly in `ℚ(√3)`).
    pub fn backend(&self) -> Backend {
        if self
            .stages
            .iter()
            .any(|s| matches!(s.backend(), Backend::Float) && !s.has_radical())
        {
            Backend::Float
        } else {
            Backend::Exact
        }
    }

    /// True when every stage evaluates exactly (rational or `ℚ(√3)`).
    pub fn is_exact(&self) -> bool {
        self.stages.iter().all(|s| s.comps_sq3().is_some())
    }

    /// Upper bound on the flattened total degree (product of stage degrees,
    /// saturating).
    pub fn degree_bound(&self) -> u64 {
        self.stages
            .iter()
            .map(|s| s.degree().max(1) as u64)
            .fold(1u64, u64::saturating_mul)
    }

    /// Direct product on disjoint variable blocks. Shorter pipelines are
    /// padded with identity stages at their end so stages align.
    pub fn block(pipes: &[Self]) -> Self {
        assert!(!pipes.is_empty(), "block of zero pipelines");
        let depth = pipes.iter().map(|p| p.stages.len()).max().expect("nonempty");
        let mut stages = Vec::with_capacity(depth);
        for i in 0..depth {
            let parts: Vec<PolyMap> = pipes
                .iter()
                .map(|p| {
                    p.stages
                        .get(i)
                        .cloned()
                        .unwrap_or_else(|| PolyMap::identity(p.ncomps()))
                })
                .collect();
            stages.push(PolyMap::block(&parts));
        }
        Self { stages }
    }

    /// Numeric evaluation, stage by stage.
    pub fn eval_f64(&self, x: &[f64]) -> Vec<f64> {
        let mut cur = x.to_vec();
        for s in &self.stages {
            cur = s.eval_f64(&cur);
        }
        cur
    }

    /// Exact rational evaluation; `None` if any stage leaves `ℚ`.
    pub fn eval_rat(&self, x: &[Rat]) -> Option<Vec<Rat>> {
        let mut cur = x.to_vec();
        for s in &self.stages {
            cur = s.eval_rat(&cur)?;
        }
        Some(cur)
    }

    /// Exact evaluation in `ℚ(√3)`; `None` if any stage is float-backed.
    pub fn eval_q(&self, x: &[Rat]) -> Option<Vec<QSqrt3>> {
        let mut cur: Vec<QSqrt3> = x.iter().map(|v| QSqrt3::from_rat(v.clone())).collect();
        for s in &self.stages {
            let comps = s.comps_sq3()?;
            cur = comps.iter().map(|p| p.eval(&cur)).collect();
        }
        Some(cur)
    }

    /// Expand to a single map by composing all stages, refusing once any
    /// intermediate component set exceeds `term_budget` terms.
    pub fn flatten(&self, term_budget: usize) -> Result<PolyMap> {
        let mut acc = self.stages[0].clone();
        for s in &self.stages[1..] {
            acc = s.compose_capped(&acc, term_budget)?;
        }
        Ok(acc)
    }

    /// Flatten with the default budget, falling back to the staged form.
    pub fn flattened_or_self(self) -> Self {
        match self.flatten(DEFAULT_TERM_BUDGET) {
            Ok(map) => Self::from_map(map),
            Err(_) => self,
        }
    }

    /// Concatenated construction traces of all stages.
    pub fn trace(&self) -> Vec<String> {
        let mut out = Vec::new();
        for s in &self.stages {
            out.extend(s.trace().iter().cloned());
        }
        out
    }
}

/// Default term budget used by [`MapPipeline::flattened_or_self`].
pub const DEFAULT_TERM_BUDGET: usize = 20_000;

#[derive(Serialize, Deserialize)]
struct PipelineRepr {
    stages: Vec<PolyMap>,
}

impl Serialize for MapPipeline {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PipelineRepr {
            stages: self.stages.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MapPipeline {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PipelineRepr::deserialize(d)?;
        Self::new(repr.stages).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::multipoly::MultiPoly;
    use crate::polycore::scalar::{rat, rat_int};

    fn squaring(n: usize) -> PolyMap {
        PolyMap::from_rat(
            n,
            (0..n)
                .map(|i| MultiPoly::monomial(n, {
                    let mut e = vec![0u32; n];
                    e[i] = 2;
                    e
                }, rat_int(1)))
                .collect(),
        )
    }

    #[test]
    fn staged_evaluation_matches_flattened() {
        let p = MapPipeline::from_map(squaring(2))
            .then(squaring(2))
            .unwrap();
        let flat = p.flatten(1000).unwrap();
        let x = [rat(1, 2), rat(-2, 3)];
        assert_eq!(p.eval_rat(&x).unwrap(), flat.eval_rat(&x).unwrap());
        assert_eq!(p.degree_bound(), 4);
    }

    #[test]
    fn flatten_honors_term_budget() {
        let dense = PolyMap::from_rat(
            1,
            vec![MultiPoly::from_terms(
                1,
                (0..=8).map(|k| (vec![k as u32], rat_int(k + 1))),
            )],
        );
        let p = MapPipeline::from_map(dense.clone()).then(dense).unwrap();
        assert!(matches!(
            p.flatten(10),
            Err(BallmapError::DegreeCap { cap: 10, .. })
        ));
    }

    #[test]
    fn block_pads_shorter_pipelines() {
        let two_stage = MapPipeline::from_map(squaring(1)).then(squaring(1)).unwrap();
        let one_stage = MapPipeline::from_map(PolyMap::identity(1));
        let b = MapPipeline::block(&[two_stage, one_stage]);
        assert_eq!(b.nvars(), 2);
        let y = b.eval_rat(&[rat_int(2), rat_int(5)]).unwrap();
        assert_eq!(y, vec![rat_int(16), rat_int(5)]);
    }

    #[test]
    fn mismatched_stage_dims_rejected() {
        let p = MapPipeline::from_map(squaring(2)).then(squaring(3));
        assert!(p.is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = MapPipeline::from_map(squaring(2)).then(squaring(2)).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let back: MapPipeline = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}

