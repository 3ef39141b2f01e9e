//! Property-based and sampling invariants for the geometry layer.

use ballmap::geometry::linalg::affine_rank;
use ballmap::geometry::{
    arc_certificate_ok, bridge_between, is_analytic_path_connected, HPolytope, PLUnion, Simplex,
};
use ballmap::polycore::{rat, rat_int, Rat, Ring};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pt(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn boxp(lo: &[i64], hi: &[i64]) -> HPolytope {
    HPolytope::axis_box(&pt(lo), &pt(hi)).unwrap()
}

fn hexagon() -> HPolytope {
    HPolytope::from_vertices(&[
        pt(&[0, 0]),
        pt(&[1, 0]),
        pt(&[2, 1]),
        pt(&[2, 2]),
        pt(&[1, 2]),
        pt(&[0, 1]),
    ])
    .unwrap()
}

/// Rejection-sample `count` points of the union and check each lies in some
/// simplex of the triangulation; also check simplex sample points lie in
/// the union.
fn check_covering(u: &PLUnion, count: usize, seed: u64) {
    let tris = u.triangulate().unwrap();
    let boxes: Vec<Vec<(f64, f64)>> = u
        .members()
        .iter()
        .map(|m| {
            m.bounding_box()
                .unwrap()
                .iter()
                .map(|(lo, hi)| (Ring::to_f64(lo), Ring::to_f64(hi)))
                .collect()
        })
        .collect();
    let bbox: Vec<(f64, f64)> = (0..u.dim())
        .map(|i| {
            (
                boxes.iter().map(|b| b[i].0).fold(f64::INFINITY, f64::min),
                boxes
                    .iter()
                    .map(|b| b[i].1)
                    .fold(f64::NEG_INFINITY, f64::max),
            )
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kept = 0usize;
    let mut attempts = 0usize;
    while kept < count && attempts < count * 200 {
        attempts += 1;
        let x: Vec<f64> = bbox
            .iter()
            .map(|&(lo, hi)| rng.random_range(lo..=hi))
            .collect();
        // Exact membership of the float sample (floats are dyadic).
        let xr: Vec<Rat> = x
            .iter()
            .map(|&c| ballmap::polycore::scalar::rat_from_f64_exact(c).unwrap())
            .collect();
        if !u.members().iter().any(|m| m.contains_rat(&xr)) {
            continue;
        }
        kept += 1;
        assert!(
            tris.iter().any(|t| t.contains_f64(&x, 1e-9)),
            "union point {x:?} not covered by any simplex"
        );
    }
    assert!(kept >= count, "rejection sampling starved: kept {kept}");
    // Simplex sample points lie in the union: vertices, centroid, and edge
    // midpoints of every simplex.
    for t in &tris {
        let mut probes: Vec<Vec<Rat>> = t.vertices().to_vec();
        probes.push(t.centroid());
        for i in 0..t.vertices().len() {
            for j in i + 1..t.vertices().len() {
                probes.push(
                    t.vertices()[i]
                        .iter()
                        .zip(&t.vertices()[j])
                        .map(|(a, b)| (a + b) * rat(1, 2))
                        .collect(),
                );
            }
        }
        for p in probes {
            assert!(
                u.members().iter().any(|m| m.contains_rat(&p)),
                "simplex probe escapes the union"
            );
        }
    }
}

#[test]
fn hexagon_triangulation_covers_ten_thousand_samples() {
    let u = PLUnion::new(vec![hexagon()]).unwrap();
    check_covering(&u, 10_000, 0xC0FFEE);
}

#[test]
fn two_box_union_triangulation_covers_ten_thousand_samples() {
    let u = PLUnion::new(vec![boxp(&[0, 0], &[2, 2]), boxp(&[1, 1], &[4, 3])]).unwrap();
    check_covering(&u, 10_000, 0xBEEF);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Vertex set → H-form → vertex set is the identity on simplices.
    #[test]
    fn hull_vertex_round_trip_on_simplices(
        dim in 1usize..=3,
        coords in proptest::collection::vec(-6i64..=6, 16),
    ) {
        let pts: Vec<Vec<Rat>> = (0..=dim)
            .map(|i| (0..dim).map(|j| rat_int(coords[i * dim + j])).collect())
            .collect();
        prop_assume!(affine_rank(&pts) == dim);
        let s = Simplex::new(pts.clone()).unwrap();
        let hp = s.to_hpolytope().unwrap();
        let vs = hp.vertices().unwrap();
        let mut expect = pts;
        expect.sort();
        expect.dedup();
        prop_assert_eq!(vs, &expect[..]);
    }

    /// Triangulations of random box unions cover their sampled points.
    #[test]
    fn random_union_triangulation_covers(
        seed in 0u64..1u64 << 32,
        corners in proptest::collection::vec((0i64..=5, 0i64..=5, 1i64..=3, 1i64..=3), 1..=3),
    ) {
        let members: Vec<HPolytope> = corners
            .iter()
            .map(|&(x, y, w, h)| boxp(&[x, y], &[x + w, y + h]))
            .collect();
        let u = PLUnion::new(members).unwrap();
        check_covering(&u, 400, seed);
    }

    /// Bridges between touching axis boxes exist exactly when the contact
    /// is nonempty, and every returned arc re-validates strictly.
    #[test]
    fn adjacent_box_bridges_revalidate(
        a in 1i64..=3, b in 1i64..=3,
        lo2 in -3i64..=3, len2 in 1i64..=3,
    ) {
        let k1 = boxp(&[0, 0], &[a, b]);
        let k2 = boxp(&[a, lo2], &[a + 2, lo2 + len2]);
        let touching = lo2 <= b && lo2 + len2 >= 0;
        match bridge_between(&k1, &k2).unwrap() {
            Some(spec) => {
                prop_assert!(touching);
                prop_assert!(arc_certificate_ok(&k1, &k2, &spec, 1000));
            }
            None => prop_assert!(!touching),
        }
    }

    /// Adding a member overlapping an existing member's interior never
    /// disconnects a connected union.
    #[test]
    fn connectivity_monotone_under_overlapping_member(
        corners in proptest::collection::vec((0i64..=4, 0i64..=4, 1i64..=2, 1i64..=2), 2..=3),
    ) {
        let members: Vec<HPolytope> = corners
            .iter()
            .map(|&(x, y, w, h)| boxp(&[x, y], &[x + w, y + h]))
            .collect();
        let u = PLUnion::new(members.clone()).unwrap();
        let before = is_analytic_path_connected(&u).unwrap();
        // Overlap member 0's interior: same box shifted by half its width.
        let (x, y, w, h) = corners[0];
        let lo = vec![rat_int(x) + rat(w, 2), rat_int(y)];
        let hi = vec![rat_int(x + w) + rat(w, 2), rat_int(y + h)];
        let mut grown = members;
        grown.push(HPolytope::axis_box(&lo, &hi).unwrap());
        let u2 = PLUnion::new(grown).unwrap();
        let after = is_analytic_path_connected(&u2).unwrap();
        prop_assert!(!(before && !after), "adding an overlapping member disconnected the union");
    }
}
