//! Dense univariate polynomials.
//!
//! These carry the one-parameter objects of the crate: profile curves of
//! the basic maps, path components, approximation bases, and the
//! reference degree-34 curve. Coefficients are stored by ascending power
//! with trailing zeros trimmed; the zero polynomial is the empty vector.

use super::scalar::{Field, Ring};

/// Univariate polynomial `c₀ + c₁ t + … + c_d t^d`.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> UniPoly<C> {
    /// Build from coefficients by ascending power; trailing zeros trimmed.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `t`.
    pub fn x() -> Self {
        Self::new(vec![C::zero(), C::one()])
    }

    /// The monomial `c·t^k`.
    pub fn monomial(k: usize, c: C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// Coefficients by ascending power (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial, else the exponent of the leading term.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(t).add_ref(c);
        }
        acc
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::constant(C::one());
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

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul_ref(&C::from_int(k as i64)));
        }
        Self::new(out)
    }

    /// `k`-th formal derivative.
    pub fn nth_derivative(&self, k: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_zero() {
                break;
            }
            p = p.derivative();
        }
        p
    }

    /// Substitute another polynomial for the variable (Horner over
    /// polynomials).
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(inner).add_ref(&Self::constant(c.clone()));
        }
        acc
    }

    /// Pre-compose with the affine substitution `t ↦ a·t + b`.
    pub fn compose_affine(&self, a: &C, b: &C) -> Self {
        self.compose(&Self::new(vec![b.clone(), a.clone()]))
    }

    /// Convert coefficients to another ring.
    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Coefficients as f64 (for plotting / numeric sampling).
    pub fn to_f64(&self) -> UniPoly<f64> {
        self.map_coeffs(Ring::to_f64)
    }
}

impl<C: Field> UniPoly<C> {
    /// The antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(C::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c.div_ref(&C::from_int(k as i64 + 1)));
        }
        Self::new(out)
    }
}

impl<C: Ring> std::ops::Add for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, rhs: Self) -> UniPoly<C> {
        self.add_ref(rhs)
    }
}

impl<C: Ring> std::ops::Sub for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, rhs: Self) -> UniPoly<C> {
        self.sub_ref(rhs)
    }
}

impl<C: Ring> std::ops::Mul for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, rhs: Self) -> UniPoly<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Ring> std::ops::Neg for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> UniPoly<C> {
        self.neg_ref()
    }
}

/// The jet `(γ(t₀), γ′(t₀), …, γ^(k)(t₀))` of a polynomial curve
/// `γ = (u₁, …, u_n)`: entry `j` is the vector of `j`-th derivative
/// values, computed exactly.
pub fn taylor_jet<C: Ring>(curve: &[UniPoly<C>], t0: &C, order: usize) -> Vec<Vec<C>> {
    let mut jets = Vec::with_capacity(order + 1);
    let mut current: Vec<UniPoly<C>> = curve.to_vec();
    for _ in 0..=order {
        jets.push(current.iter().map(|u| u.eval(t0)).collect());
        for u in &mut current {
            *u = u.derivative();
        }
    }
    jets
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::scalar::{rat, rat_int, Rat};

    fn p(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[]).degree(), None);
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn cubic_profile_identities() {
        // t(3 − 4t²) sends ±1 ↦ ∓1 and ±1/2 ↦ ±1.
        let g = p(&[0, 3, 0, -4]);
        assert_eq!(g.eval(&rat_int(1)), rat_int(-1));
        assert_eq!(g.eval(&rat_int(-1)), rat_int(1));
        assert_eq!(g.eval(&rat(1, 2)), rat_int(1));
        assert_eq!(g.eval(&rat(-1, 2)), rat_int(-1));
        // d/dt t(3 − 4t²) = 3 − 12t²
        assert_eq!(g.derivative(), p(&[3, 0, -12]));
    }

    #[test]
    fn third_derivative_of_cube_is_six() {
        assert_eq!(p(&[0, 0, 0, 1]).nth_derivative(3), p(&[6]));
        assert_eq!(p(&[5]).derivative(), UniPoly::zero());
    }

    #[test]
    fn composition_matches_pointwise() {
        let f = p(&[0, 0, 1]); // t²
        let g = p(&[1, 1]); // t + 1
        assert_eq!(f.compose(&g), p(&[1, 2, 1]));
        let h = f.compose_affine(&rat(5, 2), &rat(-1, 2));
        for t in [-2i64, -1, 0, 1, 2] {
            let t = rat_int(t);
            let expected = f.eval(&(&(&rat(5, 2) * &t) + &rat(-1, 2)));
            assert_eq!(h.eval(&t), expected);
        }
    }

    #[test]
    fn jets_are_exact() {
        // u = t²: jet at 0 of order 2 is (0, 0, 2).
        let jet = taylor_jet(&[p(&[0, 0, 1])], &rat_int(0), 2);
        assert_eq!(jet, vec![vec![rat_int(0)], vec![rat_int(0)], vec![rat_int(2)]]);
        // constant curve: (c, 0, 0)
        let jet = taylor_jet(&[p(&[7])], &rat_int(3), 2);
        assert_eq!(jet, vec![vec![rat_int(7)], vec![rat_int(0)], vec![rat_int(0)]]);
    }

    #[test]
    fn antiderivative_inverts_derivative() {
        let f = p(&[2, -3, 0, 5]);
        assert_eq!(f.antiderivative().derivative(), f);
    }
}
