//! Bridges between convex polytopes, the bridge graph of a union, and the
//! analytic-path-connectivity decision.
//!
//! A *bridge* between polytopes K₁ and K₂ is a polynomial arc
//! `t ↦ q + t²·v + t³·w` whose left half (t < 0) lies in int K₁ and whose
//! right half (t > 0) lies in int K₂. For a facet of K₁ with outward row
//! `a·x ≤ b` active at `q`, the margin along the arc is
//! `t²(a·v) + t³(a·w)`, so the arc enters the interior iff `a·v < 0`, or
//! `a·v = 0` and `a·w > 0` (because t³ < 0 on the left half). On the K₂
//! side the same reasoning with t³ > 0 flips the `a·w` sign. Inactive
//! facets impose no condition beyond continuity.
//!
//! The search is exact and deterministic:
//! 1. If the interiors overlap, the largest-margin common point `q` with a
//!    cubic segment arc through it is returned directly.
//! 2. Otherwise candidate base points are taken on the faces of K₁ ∩ K₂ —
//!    relative-interior points (vertex centroids) of higher-dimensional
//!    faces first, then vertices, each enumerated brute-force.
//! 3. At each candidate, one small LP per active facet decides whether its
//!    margin can decrease strictly (`a·v < 0`) inside the common descent
//!    cone; averaging the optimizers gives a `v` strict on every facet
//!    that admits one and exactly zero on the rest.
//! 4. The remaining zero-margin facets constrain `w` through a second LP
//!    maximizing the worst strict margin; a positive optimum yields `w`.
//! 5. The half-width `eps` is fixed by sampling the arc at 256 rational
//!    parameters per side with exact strict-interior checks, halving until
//!    the certificate passes.
//!
//! Whether a degree-(2,3) arc detects every bridgeable pair of convex
//! polytopes is not settled; the criterion implemented here is sufficient
//! for connectivity (each found bridge is a genuine analytic path) and is
//! reported as-is by [`is_analytic_path_connected`].

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::linalg::{affine_rank, dot};
use super::lp::{Cmp, LinearProgram, LpOutcome};
use super::plunion::PLUnion;
use super::polytope::{centroid_of, combinations, HPolytope};
use crate::polycore::json::{rat_vec_from_strings, rat_vec_to_strings};
use crate::polycore::scalar::{rat_from_str, rat_to_string};
use crate::polycore::{rat, rat_int, Rat, UniPoly};
use crate::{BallmapError, Result};

/// Samples per arc side used when validating a candidate half-width.
const CERT_SAMPLES: usize = 256;

/// Most permissive half-width tried first; halved on certificate failure.
const MAX_EPS_HALVINGS: usize = 60;

/// A validated bridge arc `t ↦ q + t²·v + t³·w`, `t ∈ [−eps, eps]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BridgeSpec {
    pub q: Vec<Rat>,
    pub v: Vec<Rat>,
    pub w: Vec<Rat>,
    /// Validated half-width (> 0).
    pub eps: Rat,
    /// Number of sample parameters per side in the stored certificate.
    pub cert_samples: usize,
}

impl BridgeSpec {
    /// Evaluate the arc at parameter `t`, exactly.
    pub fn arc_at(&self, t: &Rat) -> Vec<Rat> {
        let t2 = t * t;
        let t3 = &t2 * t;
        self.q
            .iter()
            .zip(&self.v)
            .zip(&self.w)
            .map(|((q, v), w)| q + &t2 * v + &t3 * w)
            .collect()
    }

    /// The arc reversed: enters the *second* set for t < 0. Swapping the
    /// parameter sign fixes v and negates w.
    pub fn reversed(&self) -> BridgeSpec {
        BridgeSpec {
            q: self.q.clone(),
            v: self.v.clone(),
            w: self.w.iter().map(|x| -x).collect(),
            eps: self.eps.clone(),
            cert_samples: self.cert_samples,
        }
    }

    /// The arc as one univariate polynomial per coordinate.
    pub fn arc_polys(&self) -> Vec<UniPoly<Rat>> {
        (0..self.q.len())
            .map(|i| {
                UniPoly::new(vec![
                    self.q[i].clone(),
                    rat_int(0),
                    self.v[i].clone(),
                    self.w[i].clone(),
                ])
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct BridgeRepr {
    q: Vec<String>,
    v: Vec<String>,
    w: Vec<String>,
    eps: String,
    cert_samples: usize,
}

impl Serialize for BridgeSpec {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        BridgeRepr {
            q: rat_vec_to_strings(&self.q),
            v: rat_vec_to_strings(&self.v),
            w: rat_vec_to_strings(&self.w),
            eps: rat_to_string(&self.eps),
            cert_samples: self.cert_samples,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for BridgeSpec {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = BridgeRepr::deserialize(de)?;
        Ok(BridgeSpec {
            q: rat_vec_from_strings(&r.q).map_err(D::Error::custom)?,
            v: rat_vec_from_strings(&r.v).map_err(D::Error::custom)?,
            w: rat_vec_from_strings(&r.w).map_err(D::Error::custom)?,
            eps: rat_from_str(&r.eps).map_err(D::Error::custom)?,
            cert_samples: r.cert_samples,
        })
    }
}

/// Search for a bridge from `k1` into `k2`. `Ok(None)` means the arc
/// criterion found none; errors are reserved for precondition violations.
pub fn bridge_between(k1: &HPolytope, k2: &HPolytope) -> Result<Option<BridgeSpec>> {
    if k1.dim() != k2.dim() {
        return Err(BallmapError::DimensionMismatch {
            context: "bridge endpoint dimensions",
            expected: k1.dim(),
            got: k2.dim(),
        });
    }
    let n = k1.dim();
    for (k, side) in [(k1, "first"), (k2, "second")] {
        if !k.is_full_dimensional() {
            return Err(BallmapError::Degenerate(format!(
                "{side} bridge endpoint has empty interior"
            )));
        }
    }

    // Overlapping interiors: a cubic segment arc through the
    // largest-margin common interior point.
    if let Some(q) = interior_common_point(k1, k2) {
        let v = vec![rat_int(0); n];
        let mut w = vec![rat_int(0); n];
        w[0] = rat_int(1);
        let spec = certify(k1, k2, q, v, w).ok_or(BallmapError::RetryExhausted {
            attempts: MAX_EPS_HALVINGS + 1,
            context: "interior segment arc certificate".into(),
        })?;
        return Ok(Some(spec));
    }

    let kq = k1.intersect(k2)?;
    if kq.is_empty() {
        return Ok(None);
    }
    for q in face_candidates(&kq, n)? {
        if let Some((v, w)) = arc_directions(k1, k2, &q) {
            if let Some(spec) = certify(k1, k2, q, v, w) {
                return Ok(Some(spec));
            }
        }
    }
    Ok(None)
}

/// Largest-margin point of `int K₁ ∩ int K₂`, if the intersection of the
/// interiors is nonempty.
fn interior_common_point(k1: &HPolytope, k2: &HPolytope) -> Option<Vec<Rat>> {
    let n = k1.dim();
    let mut obj = vec![rat_int(0); n + 1];
    obj[n] = rat_int(1);
    let mut lp = LinearProgram::new(n + 1).maximize(obj);
    for k in [k1, k2] {
        for (row, b) in k.rows_a().iter().zip(k.rows_b()) {
            let mut c = row.clone();
            c.push(rat_int(1));
            lp.constraint(c, Cmp::Le, b.clone());
        }
    }
    let mut cap = vec![rat_int(0); n + 1];
    cap[n] = rat_int(1);
    lp.constraint(cap, Cmp::Le, rat_int(1));
    match lp.solve() {
        LpOutcome::Optimal { x, value } if value > rat_int(0) => Some(x[..n].to_vec()),
        _ => None,
    }
}

/// Candidate base points on the faces of the intersection polytope:
/// relative-interior points (vertex centroids) of every face discovered
/// from row subsets of size ≤ n, higher-dimensional faces first, ties
/// broken lexicographically.
fn face_candidates(kq: &HPolytope, n: usize) -> Result<Vec<Vec<Rat>>> {
    let verts = kq.vertices()?.to_vec();
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    // The whole intersection (empty row subset) is itself a candidate face:
    // when the interiors do not overlap it is at most (n−1)-dimensional.
    faces.insert((0..verts.len()).collect());
    for size in 1..=n.min(kq.nrows()) {
        for subset in combinations(kq.nrows(), size) {
            let f: Vec<usize> = (0..verts.len())
                .filter(|&k| {
                    subset
                        .iter()
                        .all(|&r| dot(kq.row(r).0, &verts[k]) == *kq.row(r).1)
                })
                .collect();
            if !f.is_empty() {
                faces.insert(f);
            }
        }
    }
    let mut ranked: Vec<(usize, Vec<Rat>)> = Vec::new();
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for f in faces {
        let pts: Vec<Vec<Rat>> = f.iter().map(|&i| verts[i].clone()).collect();
        let dim = affine_rank(&pts);
        let c = centroid_of(&pts);
        if seen.insert(c.clone()) {
            ranked.push((dim, c));
        }
    }
    ranked.sort_by(|(da, pa), (db, pb)| db.cmp(da).then_with(|| pa.cmp(pb)));
    Ok(ranked.into_iter().map(|(_, p)| p).collect())
}

/// Solve for arc directions at base point `q`, or `None` when the sign
/// system is infeasible there.
fn arc_directions(k1: &HPolytope, k2: &HPolytope, q: &[Rat]) -> Option<(Vec<Rat>, Vec<Rat>)> {
    let n = k1.dim();
    let zero = rat_int(0);
    let act1 = k1.active_rows_at(q);
    let act2 = k2.active_rows_at(q);
    let normals: Vec<&[Rat]> = act1
        .iter()
        .map(|&i| k1.row(i).0)
        .chain(act2.iter().map(|&i| k2.row(i).0))
        .collect();

    // Per-facet strict-descent test inside the common descent cone.
    let mut optimizers: Vec<Vec<Rat>> = Vec::new();
    for f in &normals {
        let mut lp =
            LinearProgram::new(n).maximize(f.iter().map(|c| -c).collect());
        for g in &normals {
            lp.constraint(g.to_vec(), Cmp::Le, rat_int(0));
        }
        for i in 0..n {
            lp.bound_abs(i, rat_int(1));
        }
        if let LpOutcome::Optimal { x, value } = lp.solve() {
            if value > zero {
                optimizers.push(x);
            }
        }
    }
    let v: Vec<Rat> = if optimizers.is_empty() {
        vec![rat_int(0); n]
    } else {
        let k = rat_int(optimizers.len() as i64);
        (0..n)
            .map(|j| {
                let mut s = rat_int(0);
                for o in &optimizers {
                    s += &o[j];
                }
                s / &k
            })
            .collect()
    };

    // Facets whose margin stays flat to second order constrain w.
    let z1: Vec<&[Rat]> = act1
        .iter()
        .map(|&i| k1.row(i).0)
        .filter(|a| dot(a, &v) == zero)
        .collect();
    let z2: Vec<&[Rat]> = act2
        .iter()
        .map(|&i| k2.row(i).0)
        .filter(|a| dot(a, &v) == zero)
        .collect();

    let w: Vec<Rat> = if z1.is_empty() && z2.is_empty() {
        vec![rat_int(0); n]
    } else {
        // maximize s subject to a·w ≥ s on the K₁ side, a·w ≤ −s on the
        // K₂ side, |w_i| ≤ 1; feasible strictly iff s* > 0.
        let mut obj = vec![rat_int(0); n + 1];
        obj[n] = rat_int(1);
        let mut lp = LinearProgram::new(n + 1).maximize(obj);
        for a in &z1 {
            let mut c: Vec<Rat> = a.iter().map(|x| -x).collect();
            c.push(rat_int(1));
            lp.constraint(c, Cmp::Le, rat_int(0));
        }
        for a in &z2 {
            let mut c: Vec<Rat> = a.to_vec();
            c.push(rat_int(1));
            lp.constraint(c, Cmp::Le, rat_int(0));
        }
        for i in 0..n {
            lp.bound_abs(i, rat_int(1));
        }
        let mut cap = vec![rat_int(0); n + 1];
        cap[n] = rat_int(1);
        lp.constraint(cap, Cmp::Le, rat_int(1));
        match lp.solve() {
            LpOutcome::Optimal { x, value } if value > zero => x[..n].to_vec(),
            _ => return None,
        }
    };

    if v.iter().all(|c| *c == zero) && w.iter().all(|c| *c == zero) {
        return None; // a constant arc is not a bridge
    }
    Some((v, w))
}

/// Fix `eps` by decreasing powers of two until the sampled certificate
/// passes: strict interior of K₁ on the left half, of K₂ on the right.
fn certify(
    k1: &HPolytope,
    k2: &HPolytope,
    q: Vec<Rat>,
    v: Vec<Rat>,
    w: Vec<Rat>,
) -> Option<BridgeSpec> {
    let spec = BridgeSpec {
        q,
        v,
        w,
        eps: rat_int(1),
        cert_samples: CERT_SAMPLES,
    };
    let mut eps = rat_int(1);
    for _ in 0..=MAX_EPS_HALVINGS {
        let trial = BridgeSpec {
            eps: eps.clone(),
            ..spec.clone()
        };
        if arc_certificate_ok(k1, k2, &trial, CERT_SAMPLES) {
            return Some(trial);
        }
        eps *= rat(1, 2);
    }
    None
}

/// Exact sampled re-validation of a bridge arc.
pub fn arc_certificate_ok(
    k1: &HPolytope,
    k2: &HPolytope,
    spec: &BridgeSpec,
    samples: usize,
) -> bool {
    let m = rat_int(samples as i64);
    for j in 1..=samples {
        let frac = &spec.eps * rat_int(j as i64) / &m;
        let left = spec.arc_at(&(-&frac));
        if !k1.strictly_contains_rat(&left) {
            return false;
        }
        let right = spec.arc_at(&frac);
        if !k2.strictly_contains_rat(&right) {
            return false;
        }
    }
    true
}

/// The bridge graph of a union: vertices are member indices, edges carry a
/// validated bridge.
#[derive(Debug, Clone)]
pub struct BridgeGraph {
    nmembers: usize,
    edges: BTreeMap<(usize, usize), BridgeSpec>,
}

/// Build the graph by searching every unordered member pair.
pub fn bridge_graph(s: &PLUnion) -> Result<BridgeGraph> {
    let ms = s.members();
    let mut edges = BTreeMap::new();
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if let Some(b) = bridge_between(&ms[i], &ms[j])? {
                edges.insert((i, j), b);
            }
        }
    }
    Ok(BridgeGraph {
        nmembers: ms.len(),
        edges,
    })
}

impl BridgeGraph {
    pub fn nmembers(&self) -> usize {
        self.nmembers
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.contains_key(&key)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.nmembers)
            .filter(|&j| j != i && self.has_edge(i, j))
            .collect()
    }

    /// The bridge oriented from `from` into `to`, when the edge exists.
    pub fn bridge_for(&self, from: usize, to: usize) -> Option<BridgeSpec> {
        if from < to {
            self.edges.get(&(from, to)).cloned()
        } else {
            self.edges.get(&(to, from)).map(|b| b.reversed())
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.nmembers == 0 {
            return true;
        }
        let mut seen = vec![false; self.nmembers];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// A walk visiting every member with consecutive members bridged —
    /// depth-first with backtracking, so repetitions appear whenever the
    /// graph is not a path. Deterministic: neighbors in index order,
    /// trailing backtracks trimmed.
    pub fn walk_order(&self) -> Result<Vec<usize>> {
        if self.nmembers == 0 {
            return Err(BallmapError::EmptyInput("walk of an empty union"));
        }
        let mut seen = vec![false; self.nmembers];
        let mut walk = vec![0usize];
        seen[0] = true;
        fn dfs(u: usize, g: &BridgeGraph, seen: &mut [bool], walk: &mut Vec<usize>) {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    walk.push(v);
                    dfs(v, g, seen, walk);
                    walk.push(u);
                }
            }
        }
        dfs(0, self, &mut seen, &mut walk);
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(BallmapError::NotConnected(format!(
                "no bridge chain reaches member {missing}; the union is not \
                 connected by analytic paths"
            )));
        }
        // Trim returns after the last first-visit.
        let mut last_new = 0usize;
        let mut seen2 = vec![false; self.nmembers];
        for (idx, &u) in walk.iter().enumerate() {
            if !seen2[u] {
                seen2[u] = true;
                last_new = idx;
            }
        }
        walk.truncate(last_new + 1);
        Ok(walk)
    }
}

/// Convenience: the walk of the union's bridge graph.
pub fn walk_order(s: &PLUnion) -> Result<Vec<usize>> {
    bridge_graph(s)?.walk_order()
}

/// A union of full-dimensional polytopes is connected by analytic paths iff
/// its bridge graph is connected. Sufficiency of the implemented arc
/// criterion is exact (every reported bridge is validated); completeness
/// for arbitrary configurations uses degree-(2,3) arcs only.
pub fn is_analytic_path_connected(s: &PLUnion) -> Result<bool> {
    Ok(bridge_graph(s)?.is_connected())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polytope::Simplex;

    fn pt(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    fn boxp(lo: &[i64], hi: &[i64]) -> HPolytope {
        HPolytope::axis_box(&pt(lo), &pt(hi)).unwrap()
    }

    fn tri(a: &[i64], b: &[i64], c: &[i64]) -> HPolytope {
        Simplex::new(vec![pt(a), pt(b), pt(c)])
            .unwrap()
            .to_hpolytope()
            .unwrap()
    }

    #[test]
    fn edge_sharing_squares_bridge() {
        let k1 = boxp(&[0, 0], &[1, 1]);
        let k2 = boxp(&[1, 0], &[2, 1]);
        let b = bridge_between(&k1, &k2).unwrap().unwrap();
        assert_eq!(b.q, vec![rat_int(1), rat(1, 2)]);
        assert_eq!(b.v, pt(&[0, 0]));
        assert_eq!(b.w, pt(&[1, 0]));
        assert!(b.eps > rat_int(0));
        // Re-validate on a finer grid than the stored certificate.
        assert!(arc_certificate_ok(&k1, &k2, &b, 1000));
    }

    #[test]
    fn overlapping_squares_bridge_at_center() {
        let k = boxp(&[0, 0], &[1, 1]);
        let b = bridge_between(&k, &k).unwrap().unwrap();
        assert_eq!(b.q, vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(b.v, pt(&[0, 0]));
        assert!(arc_certificate_ok(&k, &k, &b, 1000));
    }

    #[test]
    fn vee_cones_have_no_bridge() {
        // Truncations of two plane sectors whose full line spans meet only
        // at the origin (between slopes 1/2 and 2 on each side of the
        // y-axis): no analytic arc can cross.
        let k1 = tri(&[0, 0], &[-2, 1], &[-1, 2]);
        let k2 = tri(&[0, 0], &[2, 1], &[1, 2]);
        assert!(bridge_between(&k1, &k2).unwrap().is_none());
    }

    #[test]
    fn opposed_cones_admit_vertical_bridge() {
        // Two vertically opposed triangles sharing only their apex. The
        // reflection of one tangent cone is exactly the other, so a pure
        // cubic arc slides through: this pair IS connected by an analytic
        // path, and the solver must find it.
        let k1 = tri(&[0, 0], &[1, 1], &[-1, 1]);
        let k2 = tri(&[0, 0], &[1, -1], &[-1, -1]);
        let b = bridge_between(&k1, &k2).unwrap().unwrap();
        assert_eq!(b.q, pt(&[0, 0]));
        assert_eq!(b.v, pt(&[0, 0]));
        assert!(dot(&b.w, &pt(&[0, -1])) > rat_int(0));
        assert!(arc_certificate_ok(&k1, &k2, &b, 1000));
    }

    #[test]
    fn disjoint_squares_no_bridge() {
        let k1 = boxp(&[0, 0], &[1, 1]);
        let k2 = boxp(&[5, 0], &[6, 1]);
        assert!(bridge_between(&k1, &k2).unwrap().is_none());
    }

    #[test]
    fn corner_touching_squares_bridge() {
        // Squares sharing exactly one corner: diagonal arc through it.
        let k1 = boxp(&[0, 0], &[1, 1]);
        let k2 = boxp(&[1, 1], &[2, 2]);
        let b = bridge_between(&k1, &k2).unwrap().unwrap();
        assert_eq!(b.q, pt(&[1, 1]));
        assert!(arc_certificate_ok(&k1, &k2, &b, 1000));
    }

    #[test]
    fn walk_of_two_edge_sharing_triangles() {
        let t1 = tri(&[0, 0], &[1, 0], &[0, 1]);
        let t2 = tri(&[1, 0], &[0, 1], &[1, 1]);
        let u = PLUnion::new(vec![t1, t2]).unwrap();
        let g = bridge_graph(&u).unwrap();
        assert!(g.has_edge(0, 1));
        assert_eq!(g.walk_order().unwrap(), vec![0, 1]);
        assert!(is_analytic_path_connected(&u).unwrap());
    }

    #[test]
    fn bowtie_union_not_connected() {
        let k1 = tri(&[0, 0], &[-2, 1], &[-1, 2]);
        let k2 = tri(&[0, 0], &[2, 1], &[1, 2]);
        let u = PLUnion::new(vec![k1, k2]).unwrap();
        assert!(!is_analytic_path_connected(&u).unwrap());
        assert!(matches!(
            walk_order(&u).unwrap_err(),
            BallmapError::NotConnected(_)
        ));
    }

    #[test]
    fn single_member_walks_trivially() {
        let u = PLUnion::new(vec![boxp(&[0, 0], &[1, 1])]).unwrap();
        assert_eq!(walk_order(&u).unwrap(), vec![0]);
        assert!(is_analytic_path_connected(&u).unwrap());
    }

    #[test]
    fn star_walk_backtracks() {
        // Members 1 and 2 both touch member 0 but not each other.
        let mid = boxp(&[0, 0], &[1, 1]);
        let left = boxp(&[-1, 0], &[0, 1]);
        let right = boxp(&[1, 0], &[2, 1]);
        let u = PLUnion::new(vec![left, mid, right]).unwrap();
        let g = bridge_graph(&u).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        assert_eq!(g.walk_order().unwrap(), vec![0, 1, 2]);

        let u2 = PLUnion::new(vec![
            boxp(&[0, 0], &[1, 1]),
            boxp(&[-1, 0], &[0, 1]),
            boxp(&[1, 0], &[2, 1]),
        ])
        .unwrap();
        let g2 = bridge_graph(&u2).unwrap();
        assert_eq!(g2.walk_order().unwrap(), vec![0, 1, 0, 2]);
    }

    #[test]
    fn reversed_bridge_flips_sides() {
        let k1 = boxp(&[0, 0], &[1, 1]);
        let k2 = boxp(&[1, 0], &[2, 1]);
        let b = bridge_between(&k1, &k2).unwrap().unwrap();
        let r = b.reversed();
        assert!(arc_certificate_ok(&k2, &k1, &r, 500));
    }

    #[test]
    fn bridge_json_round_trip() {
        let k1 = boxp(&[0, 0], &[1, 1]);
        let k2 = boxp(&[1, 0], &[2, 1]);
        let b = bridge_between(&k1, &k2).unwrap().unwrap();
        let s = serde_json::to_string(&b).unwrap();
        let back: BridgeSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn arc_polys_match_pointwise() {
        let k1 = boxp(&[0, 0], &[1, 1]);
        let k2 = boxp(&[1, 0], &[2, 1]);
        let b = bridge_between(&k1, &k2).unwrap().unwrap();
        let polys = b.arc_polys();
        let t = rat(1, 7);
        let direct = b.arc_at(&t);
        for (p, d) in polys.iter().zip(&direct) {
            assert_eq!(p.eval(&t), *d);
        }
    }
}
