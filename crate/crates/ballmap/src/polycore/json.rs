//! Canonical JSON for polynomials and maps.
//!
//! Exact coefficients serialize as reduced decimal strings (`"p"` or
//! `"p/q"`, positive denominator); float coefficients serialize as JSON
//! numbers (shortest round-trip representation, so parsing returns the
//! identical bits). Terms appear in the canonical lexicographic exponent
//! order, making output deterministic and round-trips bit-exact.
//!
//! A map whose `√3` parts survived construction serializes under the
//! float backend; the internal ring is not an artifact format.

use serde::{Deserialize, Serialize};

use super::multipoly::MultiPoly;
use super::polymap::{MapComps, PolyMap};
use super::scalar::{rat_from_str, rat_to_string, Rat, Ring};
use super::unipoly::UniPoly;
use crate::error::{BallmapError, Result};

/// One serialized coefficient: exact string or binary64 number.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum CoeffRepr {
    Exact(String),
    Float(f64),
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermRepr {
    pub exp: Vec<u32>,
    pub coeff: CoeffRepr,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ComponentRepr {
    pub terms: Vec<TermRepr>,
}

/// Serialized form of a [`PolyMap`].
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PolyMapRepr {
    pub nvars: usize,
    pub backend: String,
    pub components: Vec<ComponentRepr>,
    #[serde(default)]
    pub trace: Vec<String>,
}

/// Serialized form of a univariate polynomial.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct UniPolyRepr {
    pub coeffs: Vec<CoeffRepr>,
}

fn rat_component_repr(p: &MultiPoly<Rat>) -> ComponentRepr {
    ComponentRepr {
        terms: p
            .terms()
            .map(|(exp, c)| TermRepr {
                exp: exp.to_vec(),
                coeff: CoeffRepr::Exact(rat_to_string(c)),
            })
            .collect(),
    }
}

fn f64_component_repr(p: &MultiPoly<f64>) -> ComponentRepr {
    ComponentRepr {
        terms: p
            .terms()
            .map(|(exp, &c)| TermRepr {
                exp: exp.to_vec(),
                coeff: CoeffRepr::Float(c),
            })
            .collect(),
    }
}

impl PolyMapRepr {
    pub fn from_map(map: &PolyMap) -> Self {
        let (backend, components) = match map.comps() {
            MapComps::Rat(v) => (
                "exact".to_string(),
                v.iter().map(rat_component_repr).collect(),
            ),
            _ => (
                "float".to_string(),
                map.comps_f64().iter().map(f64_component_repr).collect(),
            ),
        };
        Self {
            nvars: map.nvars(),
            backend,
            components,
            trace: map.trace().to_vec(),
        }
    }

    pub fn into_map(self) -> Result<PolyMap> {
        let nvars = self.nvars;
        let mut map = match self.backend.as_str() {
            "exact" => {
                let mut comps = Vec::with_capacity(self.components.len());
                for c in &self.components {
                    let mut terms = Vec::with_capacity(c.terms.len());
                    for t in &c.terms {
                        if t.exp.len() != nvars {
                            return Err(BallmapError::DimensionMismatch {
                                context: "polynomial term exponent vector",
                                expected: nvars,
                                got: t.exp.len(),
                            });
                        }
                        let coeff = match &t.coeff {
                            CoeffRepr::Exact(s) => rat_from_str(s)?,
                            CoeffRepr::Float(x) => {
                                return Err(BallmapError::BadRational(format!(
                                    "float {x} in exact-backend map"
                                )))
                            }
                        };
                        terms.push((t.exp.clone(), coeff));
                    }
                    comps.push(MultiPoly::from_terms(nvars, terms));
                }
                PolyMap::from_rat(nvars, comps)
            }
            "float" => {
                let mut comps = Vec::with_capacity(self.components.len());
                for c in &self.components {
                    let mut terms = Vec::with_capacity(c.terms.len());
                    for t in &c.terms {
                        if t.exp.len() != nvars {
                            return Err(BallmapError::DimensionMismatch {
                                context: "polynomial term exponent vector",
                                expected: nvars,
                                got: t.exp.len(),
                            });
                        }
                        let coeff = match &t.coeff {
                            CoeffRepr::Exact(s) => Ring::to_f64(&rat_from_str(s)?),
                            CoeffRepr::Float(x) => *x,
                        };
                        terms.push((t.exp.clone(), coeff));
                    }
                    comps.push(MultiPoly::from_terms(nvars, terms));
                }
                PolyMap::from_f64(nvars, comps)
            }
            other => {
                return Err(BallmapError::BadRational(format!(
                    "unknown backend tag {other:?}"
                )))
            }
        };
        for step in self.trace {
            map = map.with_step(step);
        }
        Ok(map)
    }
}

impl Serialize for PolyMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyMapRepr::from_map(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyMapRepr::deserialize(d)?;
        repr.into_map().map_err(serde::de::Error::custom)
    }
}

impl Serialize for UniPoly<Rat> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        UniPolyRepr {
            coeffs: self
                .coeffs()
                .iter()
                .map(|c| CoeffRepr::Exact(rat_to_string(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly<Rat> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = UniPolyRepr::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for c in &repr.coeffs {
            match c {
                CoeffRepr::Exact(s) => {
                    coeffs.push(rat_from_str(s).map_err(serde::de::Error::custom)?)
                }
                CoeffRepr::Float(x) => {
                    return Err(serde::de::Error::custom(format!(
                        "float coefficient {x} in exact univariate polynomial"
                    )))
                }
            }
        }
        Ok(UniPoly::new(coeffs))
    }
}

impl Serialize for UniPoly<f64> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        UniPolyRepr {
            coeffs: self
                .coeffs()
                .iter()
                .map(|&c| CoeffRepr::Float(c))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly<f64> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = UniPolyRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .into_iter()
            .map(|c| match c {
                CoeffRepr::Exact(s) => rat_from_str(&s)
                    .map(|r| Ring::to_f64(&r))
                    .map_err(serde::de::Error::custom),
                CoeffRepr::Float(x) => Ok(x),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(UniPoly::new(coeffs))
    }
}

/// Serialize a rational vector as canonical strings.
pub fn rat_vec_to_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_to_string).collect()
}

/// Parse a vector of canonical rational strings.
pub fn rat_vec_from_strings(v: &[String]) -> Result<Vec<Rat>> {
    v.iter().map(|s| rat_from_str(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::scalar::{rat, QSqrt3};

    #[test]
    fn exact_map_round_trip_is_bit_exact() {
        let c0 = MultiPoly::from_terms(
            2,
            vec![(vec![2, 0], rat(-76664779, 104530224)), (vec![0, 1], rat(1, 3))],
        );
        let map = PolyMap::from_rat(2, vec![c0]).with_step("test map");
        let s = serde_json::to_string(&map).unwrap();
        let back: PolyMap = serde_json::from_str(&s).unwrap();
        assert_eq!(back.comps(), map.comps());
        assert_eq!(back.trace(), map.trace());
        // Serializing again yields the identical byte string.
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn float_map_round_trip_is_bit_exact() {
        let c0 = MultiPoly::from_terms(1, vec![(vec![3], 0.1f64), (vec![0], -2.5e-17f64)]);
        let map = PolyMap::from_f64(1, vec![c0]);
        let s = serde_json::to_string(&map).unwrap();
        let back: PolyMap = serde_json::from_str(&s).unwrap();
        assert_eq!(back.comps(), map.comps());
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn radical_map_serializes_as_float() {
        let p = MultiPoly::monomial(1, vec![1], QSqrt3::sqrt3());
        let map = PolyMap::from_sq3(1, vec![p]);
        let repr = PolyMapRepr::from_map(&map);
        assert_eq!(repr.backend, "float");
        let back = repr.into_map().unwrap();
        let y = back.eval_f64(&[2.0]);
        assert!((y[0] - 2.0 * 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn exact_unipoly_round_trip() {
        let u: UniPoly<Rat> = UniPoly::new(vec![rat(2, 1), rat(-1, 8), rat(-1, 6)]);
        let s = serde_json::to_string(&u).unwrap();
        assert_eq!(s, r#"{"coeffs":["2","-1/8","-1/6"]}"#);
        let back: UniPoly<Rat> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, u);
    }
}
