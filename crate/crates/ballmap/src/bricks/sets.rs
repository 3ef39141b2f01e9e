//! Small builders for the polynomial inequalities describing brick regions.
//!
//! Every helper returns exact-rational polynomials meant to be read as
//! `p(x) ≥ 0` constraints of a [`SemialgebraicSet`] piece. Irrational
//! region constants (trigonometric data, square roots) are embedded as
//! their binary64 values lifted losslessly into `ℚ` — the lift is exact,
//! so membership of rational points stays exactly decidable; only the
//! original constant is approximated, at unit-roundoff scale.
//!
//! [`SemialgebraicSet`]: crate::geometry::SemialgebraicSet

use crate::polycore::{rat_int, MultiPoly, Rat};

/// `Σ_{i ∈ range} xᵢ²` in `nvars` variables.
pub(crate) fn sum_sq(nvars: usize, range: std::ops::Range<usize>) -> MultiPoly<Rat> {
    let mut acc = MultiPoly::zero(nvars);
    for i in range {
        let mut e = vec![0u32; nvars];
        e[i] = 2;
        acc.add_term(e, rat_int(1));
    }
    acc
}

/// `c − Σ_{i ∈ range} xᵢ²` — a ball constraint when `c = 1`.
pub(crate) fn const_minus_sum_sq(
    nvars: usize,
    c: Rat,
    range: std::ops::Range<usize>,
) -> MultiPoly<Rat> {
    MultiPoly::constant(nvars, c).sub_ref(&sum_sq(nvars, range))
}

/// `xᵢ − c`.
pub(crate) fn var_minus_const(nvars: usize, i: usize, c: Rat) -> MultiPoly<Rat> {
    MultiPoly::var(nvars, i).sub_ref(&MultiPoly::constant(nvars, c))
}

/// `c − xᵢ`.
pub(crate) fn const_minus_var(nvars: usize, i: usize, c: Rat) -> MultiPoly<Rat> {
    MultiPoly::constant(nvars, c).sub_ref(&MultiPoly::var(nvars, i))
}

/// The affine form `cst + Σ coeffs[i]·x_{idx[i]}`.
pub(crate) fn affine_form(
    nvars: usize,
    terms: &[(usize, Rat)],
    cst: Rat,
) -> MultiPoly<Rat> {
    let mut acc = MultiPoly::constant(nvars, cst);
    for (i, c) in terms {
        let mut e = vec![0u32; nvars];
        e[*i] = 1;
        acc.add_term(e, c.clone());
    }
    acc
}

/// Interval constraints `lo ≤ xᵢ ≤ hi` as two inequalities.
pub(crate) fn interval(nvars: usize, i: usize, lo: Rat, hi: Rat) -> [MultiPoly<Rat>; 2] {
    [
        var_minus_const(nvars, i, lo),
        const_minus_var(nvars, i, hi),
    ]
}
