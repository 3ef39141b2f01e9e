//! Unions of full-dimensional polytopes, their JSON form, and covering
//! triangulations.
//!
//! The triangulation is a per-member centroid fan: facets are triangulated
//! and coned to the member's vertex centroid (an interior point). Members
//! are handled independently, so simplices from different members may
//! overlap — downstream constructions only need a finite simplex covering
//! with pairwise-disjoint interiors *within* each member, not a globally
//! common refinement.
//!
//! JSON schema:
//! ```json
//! { "dim": 2,
//!   "polyhedra": [
//!     { "A": [["1","0"], ...], "b": ["1", ...] },
//!     { "vertices": [["0","0"], ["1","0"], ["0","1"]] } ] }
//! ```
//! Numeric entries may be integers, floats (converted exactly as binary64
//! dyadics), or `"p/q"` strings; output always uses exact strings.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::polytope::{HPolytope, Simplex};
use crate::polycore::scalar::{rat_from_f64_exact, rat_from_str, rat_to_string};
use crate::polycore::{rat_int, Rat};
use crate::{BallmapError, Result};

/// A union of full-dimensional compact polytopes in a common ℝⁿ.
#[derive(Debug, Clone)]
pub struct PLUnion {
    dim: usize,
    members: Vec<HPolytope>,
}

impl PLUnion {
    pub fn new(members: Vec<HPolytope>) -> Result<Self> {
        if members.is_empty() {
            return Err(BallmapError::EmptyInput("union needs at least one member"));
        }
        let dim = members[0].dim();
        for (i, m) in members.iter().enumerate() {
            if m.dim() != dim {
                return Err(BallmapError::DimensionMismatch {
                    context: "union member ambient dimension",
                    expected: dim,
                    got: m.dim(),
                });
            }
            if !m.is_full_dimensional() {
                return Err(BallmapError::Degenerate(format!(
                    "union member {i} has empty interior"
                )));
            }
        }
        Ok(Self { dim, members })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[HPolytope] {
        &self.members
    }

    /// Covering triangulation (ambient dimension ≤ 3): a centroid fan per
    /// member. Every simplex lies in its member; within a member the
    /// interiors are disjoint; across members overlaps are permitted.
    pub fn triangulate(&self) -> Result<Vec<Simplex>> {
        let mut out = Vec::new();
        for m in &self.members {
            out.extend(fan_triangulation(m)?);
        }
        Ok(out)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("union serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| BallmapError::Json {
            path: "<inline union>".into(),
            source: e,
        })
    }
}

/// Centroid-fan triangulation of one polytope (ambient dimension ≤ 3).
pub fn fan_triangulation(p: &HPolytope) -> Result<Vec<Simplex>> {
    let n = p.dim();
    if n == 0 || n > 3 {
        return Err(BallmapError::ParamRange(format!(
            "triangulation supported for ambient dimension 1–3, got {n}"
        )));
    }
    let verts = p.vertices()?.to_vec();
    let c = super::polytope::centroid_of(&verts);
    // Facets as vertex-index sets, deduplicated across redundant rows.
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for i in 0..p.nrows() {
        let (row, b) = p.row(i);
        let f: Vec<usize> = (0..verts.len())
            .filter(|&k| super::linalg::dot(row, &verts[k]) == *b)
            .collect();
        if f.len() >= n && !facets.contains(&f) {
            facets.push(f);
        }
    }
    let mut out = Vec::new();
    for f in facets {
        match n {
            1 => {
                debug_assert_eq!(f.len(), 1);
                out.push(Simplex::new(vec![c.clone(), verts[f[0]].clone()])?);
            }
            2 => {
                debug_assert_eq!(f.len(), 2);
                out.push(Simplex::new(vec![
                    c.clone(),
                    verts[f[0]].clone(),
                    verts[f[1]].clone(),
                ])?);
            }
            _ => {
                let cycle = polygon_cycle(&verts, &f)?;
                for i in 1..cycle.len() - 1 {
                    out.push(Simplex::new(vec![
                        c.clone(),
                        verts[cycle[0]].clone(),
                        verts[cycle[i]].clone(),
                        verts[cycle[i + 1]].clone(),
                    ])?);
                }
            }
        }
    }
    if out.is_empty() {
        return Err(BallmapError::Degenerate(
            "polytope yielded no facets to triangulate".into(),
        ));
    }
    Ok(out)
}

/// Order the vertices of a planar convex polygon embedded in ℝ³ into a
/// cycle, exactly, starting from the lexicographically smallest vertex.
fn polygon_cycle(verts: &[Vec<Rat>], face: &[usize]) -> Result<Vec<usize>> {
    // Project out the coordinate in which the face has the smallest spread
    // of... more robustly: find two coordinates in which the projected
    // points still span dimension 2, by trying all three axis pairs.
    let zero = rat_int(0);
    for drop in 0..3usize {
        let keep: Vec<usize> = (0..3).filter(|&k| k != drop).collect();
        let proj: Vec<(Rat, Rat)> = face
            .iter()
            .map(|&i| (verts[i][keep[0]].clone(), verts[i][keep[1]].clone()))
            .collect();
        let pts: Vec<Vec<Rat>> = proj.iter().map(|(x, y)| vec![x.clone(), y.clone()]).collect();
        if super::linalg::affine_rank(&pts) != 2 {
            continue;
        }
        // Exact angular sort around the projected centroid.
        let cx = {
            let mut s = rat_int(0);
            for (x, _) in &proj {
                s += x;
            }
            s / rat_int(proj.len() as i64)
        };
        let cy = {
            let mut s = rat_int(0);
            for (_, y) in &proj {
                s += y;
            }
            s / rat_int(proj.len() as i64)
        };
        let mut order: Vec<usize> = (0..face.len()).collect();
        let delta = |k: usize| (&proj[k].0 - &cx, &proj[k].1 - &cy);
        let half = |d: &(Rat, Rat)| -> u8 {
            if d.1 > zero || (d.1 == zero && d.0 > zero) {
                0
            } else {
                1
            }
        };
        order.sort_by(|&i, &j| {
            let di = delta(i);
            let dj = delta(j);
            let (hi, hj) = (half(&di), half(&dj));
            if hi != hj {
                return hi.cmp(&hj);
            }
            // Counterclockwise: cross > 0 means di comes first.
            let cross = &di.0 * &dj.1 - &di.1 * &dj.0;
            if cross > zero {
                std::cmp::Ordering::Less
            } else if cross < zero {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        });
        let mut cycle: Vec<usize> = order.into_iter().map(|k| face[k]).collect();
        // Rotate so the lexicographically smallest vertex leads.
        let start = (0..cycle.len())
            .min_by(|&i, &j| verts[cycle[i]].cmp(&verts[cycle[j]]))
            .unwrap();
        cycle.rotate_left(start);
        return Ok(cycle);
    }
    Err(BallmapError::Degenerate(
        "facet is not two-dimensional".into(),
    ))
}

// ---------------------------------------------------------------------------
// JSON representation
// ---------------------------------------------------------------------------

/// One numeric entry: integer, float (exact dyadic), or `"p/q"` string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum NumRepr {
    Int(i64),
    Float(f64),
    Str(String),
}

impl NumRepr {
    fn to_rat(&self) -> Result<Rat> {
        match self {
            NumRepr::Int(i) => Ok(rat_int(*i)),
            NumRepr::Float(f) => rat_from_f64_exact(*f).ok_or_else(|| {
                BallmapError::BadRational(format!("non-finite numeric entry {f}"))
            }),
            NumRepr::Str(s) => rat_from_str(s),
        }
    }
}

fn num_row(v: &[Rat]) -> Vec<NumRepr> {
    v.iter().map(|r| NumRepr::Str(rat_to_string(r))).collect()
}

fn rat_row(v: &[NumRepr]) -> Result<Vec<Rat>> {
    v.iter().map(|n| n.to_rat()).collect()
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PolyhedronRepr {
    HRep {
        #[serde(rename = "A")]
        a: Vec<Vec<NumRepr>>,
        b: Vec<NumRepr>,
    },
    VRep {
        vertices: Vec<Vec<NumRepr>>,
    },
}

impl PolyhedronRepr {
    fn to_polytope(&self) -> Result<HPolytope> {
        match self {
            PolyhedronRepr::HRep { a, b } => {
                let rows = a.iter().map(|r| rat_row(r)).collect::<Result<Vec<_>>>()?;
                HPolytope::new(rows, rat_row(b)?)
            }
            PolyhedronRepr::VRep { vertices } => {
                let pts = vertices
                    .iter()
                    .map(|r| rat_row(r))
                    .collect::<Result<Vec<_>>>()?;
                HPolytope::from_vertices(&pts)
            }
        }
    }

    fn from_polytope(p: &HPolytope) -> Self {
        PolyhedronRepr::HRep {
            a: p.rows_a().iter().map(|r| num_row(r)).collect(),
            b: num_row(p.rows_b()),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PLUnionRepr {
    dim: usize,
    polyhedra: Vec<PolyhedronRepr>,
}

impl Serialize for PLUnion {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PLUnionRepr {
            dim: self.dim,
            polyhedra: self
                .members
                .iter()
                .map(PolyhedronRepr::from_polytope)
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PLUnion {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = PLUnionRepr::deserialize(de)?;
        let members = repr
            .polyhedra
            .iter()
            .map(|p| p.to_polytope())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let u = PLUnion::new(members).map_err(D::Error::custom)?;
        if u.dim() != repr.dim {
            return Err(D::Error::custom(format!(
                "declared dim {} does not match member dimension {}",
                repr.dim,
                u.dim()
            )));
        }
        Ok(u)
    }
}

impl Serialize for HPolytope {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PolyhedronRepr::from_polytope(self).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for HPolytope {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        PolyhedronRepr::deserialize(de)?
            .to_polytope()
            .map_err(D::Error::custom)
    }
}

impl Serialize for Simplex {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            vertices: Vec<Vec<NumRepr>>,
        }
        Repr {
            vertices: self.vertices().iter().map(|v| num_row(v)).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            vertices: Vec<Vec<NumRepr>>,
        }
        let repr = Repr::deserialize(de)?;
        let pts = repr
            .vertices
            .iter()
            .map(|r| rat_row(r))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Simplex::new(pts).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn pt(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    fn unit_square() -> HPolytope {
        HPolytope::axis_box(&pt(&[0, 0]), &pt(&[1, 1])).unwrap()
    }

    #[test]
    fn square_fans_into_four_triangles() {
        let u = PLUnion::new(vec![unit_square()]).unwrap();
        let tris = u.triangulate().unwrap();
        assert_eq!(tris.len(), 4);
        let c = vec![rat(1, 2), rat(1, 2)];
        for t in &tris {
            assert_eq!(t.vertices()[0], c);
            assert!(t.contains_rat(&c));
        }
    }

    #[test]
    fn single_simplex_stays_one_piece_per_facet() {
        let tri = Simplex::standard(2);
        let u = PLUnion::new(vec![tri.to_hpolytope().unwrap()]).unwrap();
        let tris = u.triangulate().unwrap();
        assert_eq!(tris.len(), 3);
    }

    #[test]
    fn hexagon_fans_from_its_center() {
        let hex = HPolytope::from_vertices(&[
            pt(&[0, 0]),
            pt(&[1, 0]),
            pt(&[2, 1]),
            pt(&[2, 2]),
            pt(&[1, 2]),
            pt(&[0, 1]),
        ])
        .unwrap();
        let u = PLUnion::new(vec![hex]).unwrap();
        let tris = u.triangulate().unwrap();
        assert_eq!(tris.len(), 6);
        for t in &tris {
            assert_eq!(t.vertices()[0], pt(&[1, 1]));
        }
    }

    #[test]
    fn cube_fan_in_three_dimensions() {
        let cube = HPolytope::axis_box(&pt(&[0, 0, 0]), &pt(&[1, 1, 1])).unwrap();
        let u = PLUnion::new(vec![cube]).unwrap();
        let tets = u.triangulate().unwrap();
        // 6 facets × 2 triangles each.
        assert_eq!(tets.len(), 12);
        let c = vec![rat(1, 2), rat(1, 2), rat(1, 2)];
        for t in &tets {
            assert!(t.contains_rat(&c));
        }
    }

    #[test]
    fn degenerate_member_rejected() {
        // A segment in the plane has empty interior.
        let flat = HPolytope::new(
            vec![
                vec![rat_int(1), rat_int(0)],
                vec![rat_int(-1), rat_int(0)],
                vec![rat_int(0), rat_int(1)],
                vec![rat_int(0), rat_int(-1)],
            ],
            vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
        )
        .unwrap();
        assert!(PLUnion::new(vec![flat]).is_err());
    }

    #[test]
    fn json_round_trip_and_mixed_input() {
        let raw = r#"{
            "dim": 2,
            "polyhedra": [
                { "A": [[1, 0], [-1, 0], [0, "1"], [0, -1]], "b": [1, 0, 1.0, 0] },
                { "vertices": [[2, 0], [3, 0], ["5/2", 1]] }
            ]
        }"#;
        let u = PLUnion::from_json_str(raw).unwrap();
        assert_eq!(u.members().len(), 2);
        assert_eq!(u.members()[1].vertices().unwrap().len(), 3);
        let text = u.to_json_string();
        let back = PLUnion::from_json_str(&text).unwrap();
        assert_eq!(back.members().len(), 2);
        assert_eq!(
            back.members()[1].vertices().unwrap(),
            u.members()[1].vertices().unwrap()
        );
    }

    #[test]
    fn json_rejects_dim_mismatch() {
        let raw = r#"{ "dim": 3, "polyhedra": [ { "vertices": [[0,0],[1,0],[0,1]] } ] }"#;
        assert!(PLUnion::from_json_str(raw).is_err());
    }
}
