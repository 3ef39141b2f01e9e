//! Coefficient rings: exact rationals, `ℚ(√3)`, and binary64 floats.
//!
//! The polynomial containers are generic over a [`Ring`] (a commutative
//! ring with 1 and decidable equality); the handful of operations that
//! divide (antiderivatives, least-squares projections, Hermite bases)
//! require the stronger [`Field`]. All three rings here are fields.
//!
//! `ℚ(√3)` is deliberately not part of the public serialization contract:
//! artifacts carry either exact rationals or floats. It exists so that a
//! composition like "square each cylinder component" can cancel its `√3`
//! factors symbolically and recover exact rational output.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Exact arbitrary-precision rational, the default coefficient type.
pub type Rat = BigRational;

/// Shorthand constructor for the rational `n/d`.
///
/// Panics if `d == 0` (programming error, not input error).
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand constructor for the integer rational `n`.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Commutative ring with 1, decidable zero test, and an f64 image.
///
/// Reference-taking arithmetic avoids cloning arbitrary-precision values
/// in inner loops.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_int(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Numeric image (lossy for big rationals, exact for small ones).
    fn to_f64(&self) -> f64;
}

/// Ring with exact division by nonzero elements.
pub trait Field: Ring {
    fn inv(&self) -> Self;
    fn div_ref(&self, rhs: &Self) -> Self {
        self.mul_ref(&rhs.inv())
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(v: i64) -> Self {
        rat_int(v)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        rat(num, den)
    }
    fn to_f64(&self) -> f64 {
        // ToPrimitive handles magnitudes beyond f64 by saturating through
        // BigInt division; adequate for verification sampling.
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Field for Rat {
    fn inv(&self) -> Self {
        <BigRational as One>::one() / self
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Field for f64 {
    fn inv(&self) -> Self {
        1.0 / self
    }
}

/// Element `rational + radical·√3` of the quadratic field `ℚ(√3)`.
///
/// Used internally while composing constructions whose intermediate maps
/// carry `√3` factors; see the module docs. Equality and the zero test
/// are exact because `√3` is irrational: `a + b√3 = 0 ⇔ a = b = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSqrt3 {
    pub rational: Rat,
    pub radical: Rat,
}

impl QSqrt3 {
    pub fn new(rational: Rat, radical: Rat) -> Self {
        Self { rational, radical }
    }

    /// Embed a plain rational.
    pub fn from_rat(r: Rat) -> Self {
        Self {
            rational: r,
            radical: <Rat as Zero>::zero(),
        }
    }

    /// The element `√3` itself.
    pub fn sqrt3() -> Self {
        Self {
            rational: <Rat as Zero>::zero(),
            radical: <Rat as One>::one(),
        }
    }

    /// True when the `√3` part vanishes, i.e. the element is rational.
    pub fn is_rational(&self) -> bool {
        Ring::is_zero(&self.radical)
    }

    /// The rational part, provided the radical part is zero.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.rational)
    }
}

impl Ring for QSqrt3 {
    fn zero() -> Self {
        Self::from_rat(<Rat as Zero>::zero())
    }
    fn one() -> Self {
        Self::from_rat(<Rat as One>::one())
    }
    fn is_zero(&self) -> bool {
        Ring::is_zero(&self.rational) && Ring::is_zero(&self.radical)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Self {
            rational: &self.rational + &rhs.rational,
            radical: &self.radical + &rhs.radical,
        }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Self {
            rational: &self.rational - &rhs.rational,
            radical: &self.radical - &rhs.radical,
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        // (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3
        let three = rat_int(3);
        Self {
            rational: &self.rational * &rhs.rational + &(&self.radical * &rhs.radical) * &three,
            radical: &self.rational * &rhs.radical + &self.radical * &rhs.rational,
        }
    }
    fn neg_ref(&self) -> Self {
        Self {
            rational: -&self.rational,
            radical: -&self.radical,
        }
    }
    fn from_int(v: i64) -> Self {
        Self::from_rat(rat_int(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rat(rat(num, den))
    }
    fn to_f64(&self) -> f64 {
        Ring::to_f64(&self.rational) + Ring::to_f64(&self.radical) * 3f64.sqrt()
    }
}

impl Field for QSqrt3 {
    fn inv(&self) -> Self {
        // (a + b√3)⁻¹ = (a − b√3)/(a² − 3b²); the norm a² − 3b² is nonzero
        // for nonzero elements because √3 is irrational.
        let three = rat_int(3);
        let norm = &self.rational * &self.rational - &(&self.radical * &self.radical) * &three;
        assert!(!Ring::is_zero(&norm), "inverse of zero in QSqrt3");
        Self {
            rational: &self.rational / &norm,
            radical: -&self.radical / &norm,
        }
    }
}

/// Format a rational canonically: `"p"` when the denominator is 1,
/// otherwise `"p/q"` with `q > 0` and the fraction reduced (BigRational
/// maintains both invariants).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"` or `"p/q"` into an exact rational.
pub fn rat_from_str(s: &str) -> crate::Result<Rat> {
    let bad = || crate::BallmapError::BadRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((p, q)) => {
            let n: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = q.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Exact conversion of a finite f64 into a rational (every finite binary64
/// value is a dyadic rational).
pub fn rat_from_f64_exact(x: f64) -> Option<Rat> {
    BigRational::from_float(x)
}

impl std::fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if Ring::is_zero(&self.radical) {
            write!(f, "{}", rat_to_string(&self.rational))
        } else if Ring::is_zero(&self.rational) {
            write!(f, "{}*sqrt(3)", rat_to_string(&self.radical))
        } else {
            write!(
                f,
                "{} + {}*sqrt(3)",
                rat_to_string(&self.rational),
                rat_to_string(&self.radical)
            )
        }
    }
}
