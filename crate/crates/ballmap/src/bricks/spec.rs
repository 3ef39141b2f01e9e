//! Declarative brick descriptions and the dispatcher that builds them.
//!
//! A [`BrickSpec`] is the JSON-friendly recipe for one catalog brick: it names
//! the shape family and carries the parameters.  Exact data (simplex vertices,
//! interval endpoints, cone radii) travel as rational strings such as `"3/4"`;
//! angles travel as decimal strings in radians, since they are floating-point
//! inputs to begin with.  [`build`] turns a spec into a certified
//! [`BrickResult`]; [`build_map`] returns just the map, which also covers the
//! one recipe (`revolution` of a raw map) that has no certified region
//! attached.

use serde::{Deserialize, Serialize};

use crate::polycore::{rat_from_str, MapPipeline, PolyMapRepr, Rat};
use crate::{BallmapError, Result};

use super::result::BrickResult;

/// A serializable recipe for one brick of the catalog.
///
/// The JSON encoding uses a `"kind"` tag in `snake_case`, with the remaining
/// fields inline: `{"kind": "elliptic_sector", "alpha": "1.2", "n": 3}`.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BrickSpec {
    /// Affine simplex spanned by `vertices` (rational strings, one row per
    /// vertex, `n+1` affinely independent rows in dimension `n`).
    Simplex { vertices: Vec<Vec<String>> },
    /// Cube `[-1, 1]^n`.
    Hypercube { n: usize },
    /// Solid cylinder: ball of dimension `n-1` times `[-1, 1]`.
    Cylinder { n: usize },
    /// Prism: simplex times a closed interval, both exact.
    Prism {
        vertices: Vec<Vec<String>>,
        interval: [String; 2],
    },
    /// Product of balls with the given dimensions.
    BallProduct { dims: Vec<usize> },
    /// Star-shaped union of coordinate caps with odd-power weights.
    SphericalStar { weights: Vec<u32> },
    /// Solid cone frustum between parallel slices at heights `a < b`.
    TruncatedCone { a: String, b: String, n: usize },
    /// Solid paraboloid piece of dimension `n`.
    ParabolicN { n: usize },
    /// Planar parabola segment with aperture parameter `a > 0`.
    Parabolic2 { a: String },
    /// Filled elliptic sector of opening `alpha` (radians, `0 < alpha ≤ π`).
    EllipticSector { alpha: String, n: usize },
    /// Filled elliptic segment cut by the chord of opening `alpha`.
    EllipticSegment { alpha: String, n: usize },
    /// Filled hyperbolic sector of opening `alpha` (`0 < alpha < π/4`).
    HyperbolicSector { alpha: String, n: usize },
    /// Filled hyperbolic segment cut by the chord of opening `alpha`.
    HyperbolicSegment { alpha: String, n: usize },
    /// Convex hull of the image of `inner`, described from samples (target
    /// dimension at most 3).
    ConvexHullOfImage { inner: PolyMapRepr },
    /// Rotate the image of a parity-form map around its axis, appending
    /// `ell` extra coordinates.  Carries a map but no certified region.
    Revolution { inner: PolyMapRepr, ell: usize },
    /// Cartesian product of previously describable bricks.
    ProductOfBricks { factors: Vec<BrickSpec> },
}

fn parse_angle(s: &str) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|_| {
        BallmapError::ParamRange(format!("angle {s:?} is not a decimal radian value"))
    })
}

fn parse_rows(rows: &[Vec<String>]) -> Result<Vec<Vec<Rat>>> {
    rows.iter()
        .map(|row| row.iter().map(|s| rat_from_str(s)).collect())
        .collect()
}

/// Builds the certified brick a spec describes: the map, the region, and the
/// star center.  The `revolution` recipe is the one refusal: a raw revolved
/// map carries no region description, so only [`build_map`] accepts it.  The
/// rotational bricks (sectors, segments, cones, paraboloids) revolve together
/// with their regions via their dimension parameter `n`.
pub fn build(spec: &BrickSpec) -> Result<BrickResult> {
    match spec {
        BrickSpec::Simplex { vertices } => super::simplex_map(&parse_rows(vertices)?),
        BrickSpec::Hypercube { n } => super::hypercube_map(*n),
        BrickSpec::Cylinder { n } => super::cylinder_map(*n),
        BrickSpec::Prism { vertices, interval } => {
            let lo = rat_from_str(&interval[0])?;
            let hi = rat_from_str(&interval[1])?;
            super::prism_map(&parse_rows(vertices)?, (lo, hi))
        }
        BrickSpec::BallProduct { dims } => super::ball_product_map(dims),
        BrickSpec::SphericalStar { weights } => super::spherical_star_map(weights),
        BrickSpec::TruncatedCone { a, b, n } => {
            super::truncated_cone_map(rat_from_str(a)?, rat_from_str(b)?, *n)
        }
        BrickSpec::ParabolicN { n } => super::parabolic_n_map(*n),
        BrickSpec::Parabolic2 { a } => super::parabolic2_map(rat_from_str(a)?),
        BrickSpec::EllipticSector { alpha, n } => {
            super::elliptic_sector_map(parse_angle(alpha)?, *n)
        }
        BrickSpec::EllipticSegment { alpha, n } => {
            super::elliptic_segment_map(parse_angle(alpha)?, *n)
        }
        BrickSpec::HyperbolicSector { alpha, n } => {
            super::hyperbolic_sector_map(parse_angle(alpha)?, *n)
        }
        BrickSpec::HyperbolicSegment { alpha, n } => {
            super::hyperbolic_segment_map(parse_angle(alpha)?, *n)
        }
        BrickSpec::ConvexHullOfImage { inner } => {
            let map = inner.clone().into_map()?;
            super::convex_hull_map(&MapPipeline::from_map(map))
        }
        BrickSpec::Revolution { .. } => Err(BallmapError::Precondition(
            "a revolved raw map has no certified region; build the map alone, or use the \
             dimension parameter of a rotational brick"
                .into(),
        )),
        BrickSpec::ProductOfBricks { factors } => {
            let built: Vec<BrickResult> = factors.iter().map(build).collect::<Result<_>>()?;
            super::product_of_bricks(&built)
        }
    }
}

/// Builds only the polynomial map a spec describes.  Accepts every recipe,
/// including `revolution`, whose region side [`build`] refuses.
pub fn build_map(spec: &BrickSpec) -> Result<MapPipeline> {
    match spec {
        BrickSpec::Revolution { inner, ell } => {
            let map = inner.clone().into_map()?;
            let revolved = super::revolution_map(&map, *ell)?;
            Ok(MapPipeline::from_map(revolved))
        }
        BrickSpec::ProductOfBricks { factors } => {
            let pipes: Vec<MapPipeline> =
                factors.iter().map(build_map).collect::<Result<_>>()?;
            Ok(MapPipeline::block(&pipes))
        }
        other => Ok(build(other)?.map),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{rat_int, MultiPoly, PolyMap, Ring};

    fn triangle_spec() -> BrickSpec {
        BrickSpec::Simplex {
            vertices: vec![
                vec!["0".into(), "0".into()],
                vec!["1".into(), "0".into()],
                vec!["0".into(), "1".into()],
            ],
        }
    }

    #[test]
    fn specs_round_trip_through_json() {
        let specs = vec![
            triangle_spec(),
            BrickSpec::Hypercube { n: 3 },
            BrickSpec::EllipticSector {
                alpha: "1.25".into(),
                n: 2,
            },
            BrickSpec::ProductOfBricks {
                factors: vec![BrickSpec::Cylinder { n: 2 }, BrickSpec::Hypercube { n: 1 }],
            },
        ];
        for spec in specs {
            let text = serde_json::to_string(&spec).unwrap();
            let back: BrickSpec = serde_json::from_str(&text).unwrap();
            assert_eq!(
                serde_json::to_string(&back).unwrap(),
                text,
                "round trip changed {text}"
            );
        }
    }

    #[test]
    fn tagged_json_literals_parse_and_build() {
        let sector: BrickSpec =
            serde_json::from_str(r#"{"kind": "elliptic_sector", "alpha": "1.0471975511965976", "n": 2}"#)
                .unwrap();
        let brick = build(&sector).unwrap();
        assert_eq!(brick.set.dim(), 2);
        assert_eq!(brick.map.ncomps(), 2);

        let cone: BrickSpec =
            serde_json::from_str(r#"{"kind": "truncated_cone", "a": "1/2", "b": "2", "n": 2}"#)
                .unwrap();
        assert!(build(&cone).is_ok());

        let unknown = serde_json::from_str::<BrickSpec>(r#"{"kind": "moebius_band", "n": 2}"#);
        assert!(unknown.is_err(), "unknown kinds must be rejected");
    }

    #[test]
    fn dispatcher_covers_the_catalog() {
        let specs = vec![
            triangle_spec(),
            BrickSpec::Hypercube { n: 2 },
            BrickSpec::Cylinder { n: 2 },
            BrickSpec::Prism {
                vertices: vec![
                    vec!["0".into(), "0".into()],
                    vec!["1".into(), "0".into()],
                    vec!["0".into(), "1".into()],
                ],
                interval: ["-1".into(), "1/2".into()],
            },
            BrickSpec::BallProduct { dims: vec![1, 2] },
            BrickSpec::SphericalStar { weights: vec![2, 2] },
            BrickSpec::TruncatedCone {
                a: "1".into(),
                b: "3/2".into(),
                n: 2,
            },
            BrickSpec::ParabolicN { n: 2 },
            BrickSpec::Parabolic2 { a: "1".into() },
            BrickSpec::EllipticSector {
                alpha: "0.9".into(),
                n: 2,
            },
            BrickSpec::EllipticSegment {
                alpha: "0.9".into(),
                n: 2,
            },
            BrickSpec::HyperbolicSector {
                alpha: "0.6".into(),
                n: 2,
            },
            BrickSpec::HyperbolicSegment {
                alpha: "0.6".into(),
                n: 2,
            },
            BrickSpec::ProductOfBricks {
                factors: vec![BrickSpec::Hypercube { n: 1 }, triangle_spec()],
            },
        ];
        for spec in &specs {
            let brick = build(spec).unwrap_or_else(|e| panic!("{spec:?} failed: {e}"));
            assert_eq!(
                brick.map.ncomps(),
                brick.set.dim(),
                "map and region dimension disagree for {spec:?}"
            );
            let center: Vec<f64> = brick.homotopy_center.iter().map(Ring::to_f64).collect();
            let mut scratch = Vec::new();
            let mut out = Vec::new();
            assert!(
                brick.set.min_margin(&center, &mut scratch, &mut out) >= -1e-12,
                "center outside region for {spec:?}"
            );
            let same = build_map(spec).unwrap();
            assert_eq!(same.ncomps(), brick.map.ncomps());
        }
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(build(&BrickSpec::TruncatedCone {
            a: "2".into(),
            b: "1".into(),
            n: 2,
        })
        .is_err());
        assert!(build(&BrickSpec::Parabolic2 { a: "0".into() }).is_err());
        assert!(build(&BrickSpec::EllipticSector {
            alpha: "not-a-number".into(),
            n: 2,
        })
        .is_err());
        assert!(build(&BrickSpec::HyperbolicSector {
            alpha: "1.0".into(),
            n: 2,
        })
        .is_err(), "hyperbolic opening must stay below a quarter turn");
        assert!(build(&BrickSpec::Simplex {
            vertices: vec![vec!["1/0".into()]],
        })
        .is_err());
    }

    #[test]
    fn revolution_builds_a_map_but_refuses_a_region() {
        let planar = PolyMap::from_rat(
            2,
            vec![
                MultiPoly::monomial(2, vec![0, 2], rat_int(1)),
                MultiPoly::var(2, 1),
            ],
        );
        let spec = BrickSpec::Revolution {
            inner: PolyMapRepr::from_map(&planar),
            ell: 1,
        };
        let map = build_map(&spec).unwrap();
        assert_eq!(map.nvars(), 3);
        assert_eq!(map.ncomps(), 3);
        assert!(build(&spec).is_err());
    }
}
