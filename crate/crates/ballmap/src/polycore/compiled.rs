//! Flattened binary64 evaluators for sampling hot loops.
//!
//! Verification evaluates maps at 10⁴–10⁵ points; converting coefficients
//! per call would dominate. A `CompiledMap` snapshots the coefficients as
//! f64 once, stores each term's nonzero exponents sparsely, and reuses
//! per-variable power tables across components at one point.

use super::multipoly::MultiPoly;
use super::pipeline::MapPipeline;
use super::polymap::PolyMap;

/// One term: nonzero `(variable, exponent)` pairs and the coefficient.
type Term = (Vec<(u16, u32)>, f64);

/// Immutable f64 evaluator snapshot of a [`PolyMap`].
#[derive(Clone, Debug)]
pub struct CompiledMap {
    nvars: usize,
    comps: Vec<Vec<Term>>,
    /// Per-variable maximum exponent over all components.
    max_exp: Vec<u32>,
    /// Prefix offsets into the shared power table.
    offsets: Vec<usize>,
    table_len: usize,
}

impl CompiledMap {
    pub fn new(map: &PolyMap) -> Self {
        Self::from_components(map.nvars(), &map.comps_f64())
    }

    /// Compile a bare list of f64 polynomials sharing `nvars` variables
    /// (used for fast inequality-margin evaluation of region descriptions,
    /// not only for maps).
    pub fn from_components(nvars: usize, f64_comps: &[MultiPoly<f64>]) -> Self {
        let mut max_exp = vec![0u32; nvars];
        let mut comps = Vec::with_capacity(f64_comps.len());
        for poly in f64_comps {
            let mut terms = Vec::with_capacity(poly.num_terms());
            for (exp, &c) in poly.terms() {
                let sparse: Vec<(u16, u32)> = exp
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| (v as u16, e))
                    .collect();
                for &(v, e) in &sparse {
                    max_exp[v as usize] = max_exp[v as usize].max(e);
                }
                terms.push((sparse, c));
            }
            comps.push(terms);
        }
        let mut offsets = Vec::with_capacity(nvars);
        let mut acc = 0usize;
        for &m in &max_exp {
            offsets.push(acc);
            acc += m as usize + 1;
        }
        Self {
            nvars,
            comps,
            max_exp,
            offsets,
            table_len: acc,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ncomps(&self) -> usize {
        self.comps.len()
    }

    /// Evaluate into `out`, reusing `scratch` for the power table.
    /// Summation order is the canonical term order, so results are
    /// deterministic.
    pub fn eval_into(&self, x: &[f64], out: &mut [f64], scratch: &mut Vec<f64>) {
        debug_assert_eq!(x.len(), self.nvars);
        debug_assert_eq!(out.len(), self.comps.len());
        scratch.clear();
        scratch.resize(self.table_len, 1.0);
        for v in 0..self.nvars {
            let base = self.offsets[v];
            let mut p = 1.0f64;
            for e in 1..=self.max_exp[v] as usize {
                p *= x[v];
                scratch[base + e] = p;
            }
        }
        for (ci, terms) in self.comps.iter().enumerate() {
            let mut acc = 0.0f64;
            for (sparse, c) in terms {
                let mut t = *c;
                for &(v, e) in sparse {
                    t *= scratch[self.offsets[v as usize] + e as usize];
                }
                acc += t;
            }
            out[ci] = acc;
        }
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.comps.len()];
        let mut scratch = Vec::new();
        self.eval_into(x, &mut out, &mut scratch);
        out
    }
}

/// Staged f64 evaluator for a [`MapPipeline`]: one [`CompiledMap`] per
/// stage plus two ping-pong buffers, so evaluating a point allocates
/// nothing after construction.
#[derive(Clone, Debug)]
pub struct CompiledPipeline {
    stages: Vec<CompiledMap>,
    nvars: usize,
    ncomps: usize,
}

/// Reusable buffers for [`CompiledPipeline::eval_into`].
#[derive(Clone, Debug, Default)]
pub struct PipelineScratch {
    a: Vec<f64>,
    b: Vec<f64>,
    table: Vec<f64>,
}

impl CompiledPipeline {
    pub fn new(pipe: &MapPipeline) -> Self {
        let stages: Vec<CompiledMap> = pipe.stages().iter().map(CompiledMap::new).collect();
        Self {
            nvars: pipe.nvars(),
            ncomps: pipe.ncomps(),
            stages,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ncomps(&self) -> usize {
        self.ncomps
    }

    /// Evaluate into `out`, reusing `scratch` across calls.
    pub fn eval_into(&self, x: &[f64], out: &mut [f64], scratch: &mut PipelineScratch) {
        debug_assert_eq!(x.len(), self.nvars);
        debug_assert_eq!(out.len(), self.ncomps);
        if self.stages.len() == 1 {
            self.stages[0].eval_into(x, out, &mut scratch.table);
            return;
        }
        scratch.a.clear();
        scratch.a.extend_from_slice(x);
        for (i, stage) in self.stages.iter().enumerate() {
            let last = i + 1 == self.stages.len();
            if last {
                self.stages[i].eval_into(&scratch.a, out, &mut scratch.table);
            } else {
                scratch.b.clear();
                scratch.b.resize(stage.ncomps(), 0.0);
                stage.eval_into(&scratch.a, &mut scratch.b, &mut scratch.table);
                std::mem::swap(&mut scratch.a, &mut scratch.b);
            }
        }
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.ncomps];
        let mut scratch = PipelineScratch::default();
        self.eval_into(x, &mut out, &mut scratch);
        out
    }
}
