//! Sparse multivariate polynomials.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, which gives a
//! canonical (lexicographic) term order for free — serialization and
//! equality are deterministic without extra sorting. The constructions
//! in this crate are sparse (component maps like `(x₁², …, x_n²)`), and
//! compositions of the degree-34 reference curve would explode a dense
//! total-degree layout.

use std::collections::BTreeMap;

use super::scalar::Ring;
use super::unipoly::UniPoly;

/// Multivariate polynomial in `nvars` variables with coefficients in `C`.
///
/// Invariants: no zero coefficients stored; every exponent vector has
/// length `nvars`.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<C: Ring> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Ring> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} vars");
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exp, C::one());
        p
    }

    /// The monomial `c·x^exp`.
    pub fn monomial(nvars: usize, exp: Vec<u32>, c: C) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exp, c);
        p
    }

    /// Sum arbitrary terms (duplicates combined, zeros dropped).
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    /// Embed a univariate polynomial as a polynomial in `x_var`.
    pub fn from_unipoly(u: &UniPoly<C>, nvars: usize, var: usize) -> Self {
        assert!(var < nvars);
        let mut p = Self::zero(nvars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut exp = vec![0; nvars];
            exp[var] = k as u32;
            p.add_term(exp, c.clone());
        }
        p
    }

    /// View a univariate polynomial (at most one variable with nonzero
    /// exponents, namely `var`) as a `UniPoly`.
    pub fn to_unipoly(&self, var: usize) -> Option<UniPoly<C>> {
        let deg = self.degree_in(var) as usize;
        let mut coeffs = vec![C::zero(); deg + 1];
        for (exp, c) in &self.terms {
            for (i, &e) in exp.iter().enumerate() {
                if i != var && e != 0 {
                    return None;
                }
            }
            coeffs[exp[var] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate terms in canonical (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Largest total degree among terms (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Largest exponent of `x_var` among terms.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Largest exponent per variable (all zeros for the zero polynomial).
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.nvars];
        for e in self.terms.keys() {
            for (mi, &ei) in m.iter_mut().zip(e) {
                *mi = (*mi).max(ei);
            }
        }
        m
    }

    /// Add `c·x^exp` in place.
    pub fn add_term(&mut self, exp: Vec<u32>, c: C) {
        assert_eq!(exp.len(), self.nvars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, a)| (e.clone(), a.mul_ref(c))),
        )
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::constant(self.nvars, C::one());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        result
    }

    /// Exact evaluation at a point of `C^nvars`; per-variable power tables
    /// avoid repeated exponentiation.
    pub fn eval(&self, x: &[C]) -> C {
        assert_eq!(
            x.len(),
            self.nvars,
            "evaluation point has wrong dimension"
        );
        let maxe = self.max_exponents();
        let powers: Vec<Vec<C>> = x
            .iter()
            .zip(&maxe)
            .map(|(xi, &m)| {
                let mut row = Vec::with_capacity(m as usize + 1);
                row.push(C::one());
                for k in 1..=m as usize {
                    let next = row[k - 1].mul_ref(xi);
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = C::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in exp.iter().enumerate() {
                if e > 0 {
                    term = term.mul_ref(&powers[v][e as usize]);
                }
            }
            acc = acc.add_ref(&term);
        }
        acc
    }

    /// Formal partial derivative with respect to `x_var`.
    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars);
        let mut out = Self::zero(self.nvars);
        for (exp, c) in &self.terms {
            let e = exp[var];
            if e == 0 {
                continue;
            }
            let mut new_exp = exp.clone();
            new_exp[var] = e - 1;
            out.add_term(new_exp, c.mul_ref(&C::from_int(e as i64)));
        }
        out
    }

    /// Substitute polynomials for all variables (the composition step of
    /// map composition). Power tables per variable keep repeated
    /// exponents cheap.
    pub fn eval_poly(&self, args: &[Self]) -> Self {
        self.eval_poly_capped(args, usize::MAX)
            .expect("uncapped composition cannot overflow")
    }

    /// Budgeted substitution: like [`eval_poly`](Self::eval_poly) but
    /// returns `None` as soon as any intermediate product grows past
    /// `cap` terms, or a pending multiplication would cost more than
    /// `200·cap` coefficient products, so hopeless expansions abort
    /// early instead of consuming unbounded time and memory.
    pub fn eval_poly_capped(&self, args: &[Self], cap: usize) -> Option<Self> {
        assert_eq!(args.len(), self.nvars, "composition arity mismatch");
        let out_vars = if let Some(a) = args.first() {
            a.nvars
        } else {
            // nvars == 0: constant polynomial in zero variables
            0
        };
        for a in args {
            assert_eq!(a.nvars, out_vars, "composition arguments disagree on arity");
        }
        let work_cap = cap.saturating_mul(200);
        let mul = |a: &Self, b: &Self| -> Option<Self> {
            if a.num_terms().saturating_mul(b.num_terms()) > work_cap {
                return None;
            }
            let p = a.mul_ref(b);
            (p.num_terms() <= cap).then_some(p)
        };
        let maxe = self.max_exponents();
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(args.len());
        for (arg, &m) in args.iter().zip(&maxe) {
            let mut row = Vec::with_capacity(m as usize + 1);
            row.push(Self::constant(out_vars, C::one()));
            for k in 1..=m as usize {
                let next = mul(&row[k - 1], arg)?;
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc = Self::zero(out_vars);
        for (exp, c) in &self.terms {
            let mut term = Self::constant(out_vars, c.clone());
            for (v, &e) in exp.iter().enumerate() {
                if e > 0 {
                    term = mul(&term, &powers[v][e as usize])?;
                }
            }
            acc = acc.add_ref(&term);
            if acc.num_terms() > cap {
                return None;
            }
        }
        Some(acc)
    }

    /// Reinterpret in a larger variable set, sending `x_i ↦ x_{i+offset}`.
    pub fn shift_vars(&self, offset: usize, new_nvars: usize) -> Self {
        assert!(self.nvars + offset <= new_nvars);
        Self::from_terms(
            new_nvars,
            self.terms.iter().map(|(e, c)| {
                let mut exp = vec![0u32; new_nvars];
                exp[offset..offset + self.nvars].copy_from_slice(e);
                (exp, c.clone())
            }),
        )
    }

    /// Convert coefficients to another ring.
    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| (e.clone(), f(c))),
        )
    }

    /// Coefficients as f64.
    pub fn to_f64(&self) -> MultiPoly<f64> {
        self.map_coeffs(Ring::to_f64)
    }
}

impl<C: Ring> std::ops::Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        self.add_ref(rhs)
    }
}

impl<C: Ring> std::ops::Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        self.sub_ref(rhs)
    }
}

impl<C: Ring> std::ops::Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Ring> std::ops::Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.neg_ref()
    }
}

impl<C: Ring> std::fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c:?}")?;
            for (v, &e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{v}")?,
                    _ => write!(f, "*x{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::scalar::{rat_int, Rat};

    fn x(n: usize, i: usize) -> MultiPoly<Rat> {
        MultiPoly::var(n, i)
    }

    #[test]
    fn sum_of_squares_at_three_four() {
        let p = &(&x(2, 0) * &x(2, 0)) + &(&x(2, 1) * &x(2, 1));
        assert_eq!(p.eval(&[rat_int(3), rat_int(4)]), rat_int(25));
    }

    #[test]
    fn zero_polynomial_evaluates_to_zero() {
        let z: MultiPoly<Rat> = MultiPoly::zero(3);
        assert_eq!(z.eval(&[rat_int(1), rat_int(-7), rat_int(2)]), rat_int(0));
        assert_eq!(z.total_degree(), 0);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = &x(1, 0) - &x(1, 0);
        assert!(p.is_zero());
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let c: MultiPoly<Rat> = MultiPoly::constant(2, rat_int(5));
        assert!(c.derivative(0).is_zero());
    }

    #[test]
    fn composition_square_of_successor() {
        // f(x) = x², g(x) = x + 1 → f(g) = x² + 2x + 1
        let f = x(1, 0).pow(2);
        let g = &x(1, 0) + &MultiPoly::constant(1, rat_int(1));
        let fg = f.eval_poly(&[g]);
        let expected = MultiPoly::from_terms(
            1,
            vec![
                (vec![0], rat_int(1)),
                (vec![1], rat_int(2)),
                (vec![2], rat_int(1)),
            ],
        );
        assert_eq!(fg, expected);
    }

    #[test]
    fn shift_vars_relabels() {
        let p = x(2, 1).pow(3); // x1³ in 2 vars
        let q = p.shift_vars(2, 5); // becomes x3³ in 5 vars
        assert_eq!(q.degree_in(3), 3);
        assert_eq!(q.degree_in(1), 0);
    }

    #[test]
    fn unipoly_round_trip() {
        let u = UniPoly::new(vec![rat_int(2), rat_int(0), rat_int(-1)]);
        let m = MultiPoly::from_unipoly(&u, 3, 1);
        assert_eq!(m.to_unipoly(1).unwrap(), u);
        assert_eq!(m.to_unipoly(0), None);
    }
}
