//! Rotating a map's image about a coordinate axis.
//!
//! If `F = (F₁, …, F_k)` on `B̄_m` is *even* in its last source variable
//! in every component except the last, and *odd* in the last component,
//! then the image of `F` is symmetric under flipping that variable and
//! can be spun into a body of revolution: replace every `x_m²` by
//! `S = x_m² + ⋯ + x_{m+ℓ}²` and fan the odd component out along the new
//! block. The result maps `B̄_{m+ℓ}` onto the set swept by rotating the
//! image of `F` around the hyperplane of its first `k−1` coordinates.

use crate::polycore::{MapComps, MapPipeline, MultiPoly, PolyMap, Ring};
use crate::{BallmapError, Result};

/// Check the even/odd structure needed by [`revolution_map`]: every
/// component except the last must use only even powers of the last
/// source variable, and the last component only odd powers.
pub fn parity_check(f: &PolyMap) -> Result<()> {
    let m = f.nvars();
    if m == 0 {
        return Err(BallmapError::EmptyInput("map with no source variables"));
    }
    if f.ncomps() == 0 {
        return Err(BallmapError::EmptyInput("map with no components"));
    }
    match f.comps() {
        MapComps::Rat(c) => check_parity(c, m - 1),
        MapComps::Sq3(c) => check_parity(c, m - 1),
        MapComps::F64(c) => check_parity(c, m - 1),
    }
}

fn check_parity<C: Ring>(comps: &[MultiPoly<C>], var: usize) -> Result<()> {
    let last = comps.len() - 1;
    for (i, p) in comps.iter().enumerate() {
        let want_odd = i == last;
        for (exp, _) in p.terms() {
            let e = exp[var];
            if (e % 2 == 1) != want_odd {
                return Err(BallmapError::ParityViolation(format!(
                    "component {} must be {} in source variable {}, found exponent {e}",
                    i + 1,
                    if want_odd { "odd" } else { "even" },
                    var + 1,
                )));
            }
        }
    }
    Ok(())
}

fn revolve_comps<C: Ring>(comps: &[MultiPoly<C>], m: usize, ell: usize) -> Vec<MultiPoly<C>> {
    let nv = m + ell;
    // S = x_m² + ⋯ + x_{m+ℓ}² over the widened variable set.
    let s = {
        let mut acc = MultiPoly::zero(nv);
        for i in m - 1..nv {
            let mut e = vec![0u32; nv];
            e[i] = 2;
            acc = acc.add_ref(&MultiPoly::monomial(nv, e, C::one()));
        }
        acc
    };
    let max_half: u32 = comps
        .iter()
        .flat_map(|p| p.terms().map(|(exp, _)| exp[m - 1] / 2))
        .max()
        .unwrap_or(0);
    let mut s_pows: Vec<MultiPoly<C>> = Vec::with_capacity(max_half as usize + 1);
    s_pows.push(MultiPoly::constant(nv, C::one()));
    for k in 1..=max_half as usize {
        s_pows.push(s_pows[k - 1].mul_ref(&s));
    }

    let widen = |exp: &[u32]| {
        let mut e = exp.to_vec();
        e[m - 1] = 0;
        e.resize(nv, 0);
        e
    };
    // Stream (source term) × (power of S) products into one term list and
    // let the constructor merge collisions; building the output one
    // polynomial addition at a time would be quadratic in its size.
    let expand = |p: &MultiPoly<C>, extra: Option<usize>| {
        let mut terms: Vec<(Vec<u32>, C)> = Vec::new();
        for (exp, c) in p.terms() {
            let j = (exp[m - 1] / 2) as usize;
            let mut base = widen(exp);
            if let Some(t) = extra {
                base[m - 1 + t] = 1;
            }
            for (sexp, sc) in s_pows[j].terms() {
                let mut e = base.clone();
                for (ei, si) in e.iter_mut().zip(sexp) {
                    *ei += si;
                }
                terms.push((e, c.mul_ref(sc)));
            }
        }
        MultiPoly::from_terms(nv, terms)
    };

    let last = comps.len() - 1;
    let mut out: Vec<MultiPoly<C>> = Vec::with_capacity(comps.len() + ell);
    for p in &comps[..last] {
        out.push(expand(p, None));
    }
    // Fan the odd component out along the rotation block: each final
    // coordinate t gets x_{m+t}·E(x', S) where F_k = x_m·E(x', x_m²).
    for t in 0..=ell {
        out.push(expand(&comps[last], Some(t)));
    }
    out
}

/// Spin the image of `f` about the hyperplane of its first `k−1` target
/// coordinates, adding `ell` fresh source and target variables. Requires
/// [`parity_check`]; `ell = 0` returns the map unchanged. The defining
/// identity, for any unit vector `u ∈ S^ℓ`:
/// `G(x′, x_m·u) = (F₁(x), …, F_{k−1}(x), F_k(x)·u)`.
pub fn revolution_map(f: &PolyMap, ell: usize) -> Result<PolyMap> {
    parity_check(f)?;
    if ell == 0 {
        return Ok(f.clone());
    }
    let m = f.nvars();
    let out = match f.comps() {
        MapComps::Rat(c) => PolyMap::from_rat(m + ell, revolve_comps(c, m, ell)),
        MapComps::Sq3(c) => PolyMap::from_sq3(m + ell, revolve_comps(c, m, ell)),
        MapComps::F64(c) => PolyMap::from_f64(m + ell, revolve_comps(c, m, ell)),
    };
    Ok(out.with_step(format!("revolution adding {ell} rotation variable(s)")))
}

/// Stage-wise revolution of a pipeline whose every stage passes
/// [`parity_check`]. Revolution distributes over composition of such
/// maps: writing any point of the widened ball as `(x′, x_m·u)` with
/// `u ∈ S^ℓ`, each revolved stage reproduces its original head
/// components and scales `u` by the original last component, so chaining
/// the revolved stages equals revolving the chained map — while every
/// stage stays as small as it was.
pub fn revolution_pipeline(pipe: &MapPipeline, ell: usize) -> Result<MapPipeline> {
    let stages = pipe
        .stages()
        .iter()
        .map(|s| revolution_map(s, ell))
        .collect::<Result<Vec<_>>>()?;
    MapPipeline::new(stages)
}
