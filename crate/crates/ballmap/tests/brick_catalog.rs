//! Catalog-wide integration checks: every brick recipe is built from its
//! JSON form, its map is sampled for containment and coverage against the
//! declared region, and the structural identities behind the rotational
//! constructions are exercised end to end.

use ballmap::bricks::{
    brick_homotopy, build, complex_square, elliptic_sector_map, parity_check, revolution_map,
    triangle_map_symmetric, BrickResult, BrickSpec,
};
use ballmap::polycore::{rat, rat_int, MapPipeline, PolyMap, Ring};
use ballmap::verify::{check_containment, check_coverage, sample_ball, SourceDomain};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Builds a brick from its JSON recipe — the same path the CLI takes.
fn brick_from_json(text: &str) -> BrickResult {
    let spec: BrickSpec = serde_json::from_str(text).unwrap();
    build(&spec).unwrap_or_else(|e| panic!("building {text} failed: {e}"))
}

/// Containment: `N_BALL` uniform ball samples must land in the region at
/// tolerance 1e-9.  Coverage: 10³ region samples must each lie within 0.05
/// of a 10⁵-point image cloud (checked for 2D/3D bricks).
fn assert_brick_sound(name: &str, brick: &BrickResult, seed: u64) {
    let m = brick.map.nvars();
    let source = SourceDomain::Ball(m);
    let containment =
        check_containment(&brick.map, &source, &brick.set, 10_000, 1e-9, seed).unwrap();
    assert_eq!(
        containment.violations, 0,
        "{name}: {} containment violations, worst margin {}",
        containment.violations, containment.worst_margin
    );

    let dim = brick.set.dim();
    if (2..=3).contains(&dim) {
        let coverage =
            check_coverage(&brick.map, &source, &brick.set, 100_000, 1_000, seed ^ 0xC0FE).unwrap();
        let gap = coverage.coverage_gap.unwrap();
        assert!(
            gap < 0.05,
            "{name}: coverage gap {gap} exceeds 0.05"
        );
    }
}

macro_rules! catalog_case {
    ($test:ident, $json:expr, $seed:expr) => {
        #[test]
        fn $test() {
            let brick = brick_from_json($json);
            assert_brick_sound(stringify!($test), &brick, $seed);
        }
    };
}

catalog_case!(
    triangle_brick,
    r#"{"kind": "simplex", "vertices": [["0","0"], ["1","0"], ["0","1"]]}"#,
    11
);
catalog_case!(
    tetrahedron_brick,
    r#"{"kind": "simplex", "vertices": [["0","0","0"], ["1","0","0"], ["0","1","0"], ["0","0","1"]]}"#,
    12
);
catalog_case!(square_brick, r#"{"kind": "hypercube", "n": 2}"#, 13);
catalog_case!(cube_brick, r#"{"kind": "hypercube", "n": 3}"#, 14);
catalog_case!(cylinder_brick, r#"{"kind": "cylinder", "n": 3}"#, 15);
catalog_case!(
    prism_brick,
    r#"{"kind": "prism", "vertices": [["0","0"], ["1","0"], ["0","1"]], "interval": ["-1", "1/2"]}"#,
    16
);
catalog_case!(
    ball_product_brick,
    r#"{"kind": "ball_product", "dims": [1, 2]}"#,
    17
);
catalog_case!(
    star_brick,
    r#"{"kind": "spherical_star", "weights": [3, 2]}"#,
    18
);
catalog_case!(
    cone_brick,
    r#"{"kind": "truncated_cone", "a": "1", "b": "2", "n": 2}"#,
    19
);
catalog_case!(paraboloid_brick, r#"{"kind": "parabolic_n", "n": 2}"#, 20);
catalog_case!(
    parabola_segment_brick,
    r#"{"kind": "parabolic2", "a": "1"}"#,
    21
);
catalog_case!(
    elliptic_sector_brick,
    r#"{"kind": "elliptic_sector", "alpha": "1.5707963267948966", "n": 2}"#,
    22
);
catalog_case!(
    elliptic_segment_brick,
    r#"{"kind": "elliptic_segment", "alpha": "0.7853981633974483", "n": 2}"#,
    23
);
catalog_case!(
    hyperbolic_sector_brick,
    r#"{"kind": "hyperbolic_sector", "alpha": "0.6", "n": 2}"#,
    24
);
catalog_case!(
    hyperbolic_segment_brick,
    r#"{"kind": "hyperbolic_segment", "alpha": "0.3", "n": 2}"#,
    25
);
catalog_case!(
    revolved_sector_brick,
    r#"{"kind": "elliptic_sector", "alpha": "1.5707963267948966", "n": 3}"#,
    26
);
catalog_case!(
    product_brick,
    r#"{"kind": "product_of_bricks", "factors": [{"kind": "hypercube", "n": 1}, {"kind": "simplex", "vertices": [["0","0"], ["1","0"], ["0","1"]]}]}"#,
    27
);

/// Composing two maps that are even in the last variable on their leading
/// components and odd on the last stays in that parity class.
#[test]
fn parity_class_closed_under_composition() {
    let tri = triangle_map_symmetric(1.0, 0.5).unwrap();
    for stage in [
        ballmap::bricks::disc_radial_cubic(),
        complex_square(),
        ballmap::bricks::hyperbolic_radial_cubic(),
        ballmap::bricks::split_complex_square(),
    ] {
        assert!(parity_check(&stage).is_ok(), "stage is not parity-form");
        let composed = MapPipeline::from_map(tri.clone())
            .then(stage)
            .unwrap()
            .flattened_or_self();
        let flat = composed.as_single().expect("small compositions flatten");
        assert!(
            parity_check(flat).is_ok(),
            "composition left the parity class"
        );
    }
}

/// The squaring map doubles angles: boundary-arc points of the sector of
/// half-opening β land on the arc of the sector of opening 2β.
#[test]
fn squaring_doubles_boundary_angles() {
    let square = MapPipeline::from_map(complex_square());
    let beta = 0.55f64;
    for k in 0..100 {
        let theta = -beta + 2.0 * beta * (k as f64) / 99.0;
        let y = square.eval_f64(&[theta.cos(), theta.sin()]);
        let r = (y[0] * y[0] + y[1] * y[1]).sqrt();
        assert!((r - 1.0).abs() < 1e-9, "image left the unit arc");
        let angle = y[1].atan2(y[0]);
        assert!(
            (angle - 2.0 * theta).abs() < 1e-9,
            "angle {theta} doubled to {angle}"
        );
    }
}

/// Rotating a planar parity-form map commutes with evaluation: writing a
/// source point as (x', x_m·u) with u on the unit ℓ-sphere, the revolved map
/// returns the head of the planar value and its last component times u.
#[test]
fn revolution_commutes_with_evaluation() {
    let planar = triangle_map_symmetric(1.0, 0.8).unwrap();
    for ell in 1..=2usize {
        let revolved = revolution_map(&planar, ell).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(40 + ell as u64);
        for _ in 0..100 {
            let xp: f64 = rng.random_range(-0.7..0.7);
            let xm: f64 = rng.random_range(-0.7..0.7);
            let u = {
                let raw: Vec<f64> = (0..=ell).map(|_| rng.random_range(-1.0..1.0)).collect();
                let norm = raw.iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-9);
                raw.into_iter().map(|v| v / norm).collect::<Vec<f64>>()
            };
            let mut source = vec![xp];
            source.extend(u.iter().map(|ui| xm * ui));
            let got = revolved.eval_f64(&source);
            let flat = planar.eval_f64(&[xp, xm]);
            assert!((got[0] - flat[0]).abs() < 1e-9);
            for (gi, ui) in got[1..].iter().zip(&u) {
                assert!(
                    (gi - flat[1] * ui).abs() < 1e-9,
                    "rotation identity failed at ({xp}, {xm})"
                );
            }
        }
    }
}

/// Contracted images stay inside the region for every sampled strength, and
/// the worst sampled margin improves monotonically with the strength.
#[test]
fn homotopy_images_are_weakly_nested() {
    let brick = elliptic_sector_map(1.2, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let inputs: Vec<Vec<f64>> = (0..200)
        .map(|_| sample_ball(&mut rng, brick.map.nvars()))
        .collect();
    let mut scratch = Vec::new();
    let mut out = Vec::new();
    let mut last_worst = f64::NEG_INFINITY;
    for tenths in 0..=10i64 {
        let shrunk = brick_homotopy(&brick, &rat(tenths, 10)).unwrap();
        let worst = inputs
            .iter()
            .map(|x| {
                let y = shrunk.eval_f64(x);
                brick.set.min_margin(&y, &mut scratch, &mut out)
            })
            .fold(f64::INFINITY, f64::min);
        assert!(
            worst > -1e-9,
            "contraction t={tenths}/10 left the region (worst margin {worst})"
        );
        assert!(
            worst >= last_worst - 1e-9,
            "margins are not nested at t={tenths}/10: {worst} < {last_worst}"
        );
        last_worst = worst;
    }
}

/// The map JSON representation round-trips an exact staged brick and the
/// reconstruction evaluates identically — the persistence path the CLI uses.
#[test]
fn map_json_round_trip_preserves_evaluation() {
    let brick = brick_from_json(
        r#"{"kind": "elliptic_segment", "alpha": "0.7853981633974483", "n": 2}"#,
    );
    let stages: Vec<PolyMap> = brick.map.stages().to_vec();
    let reprs: Vec<ballmap::polycore::PolyMapRepr> = stages
        .iter()
        .map(ballmap::polycore::PolyMapRepr::from_map)
        .collect();
    let text = serde_json::to_string(&reprs).unwrap();
    let back: Vec<ballmap::polycore::PolyMapRepr> = serde_json::from_str(&text).unwrap();
    let rebuilt = MapPipeline::new(
        back.into_iter()
            .map(|r| r.into_map().unwrap())
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let x = sample_ball(&mut rng, brick.map.nvars());
        let a = brick.map.eval_f64(&x);
        let b = rebuilt.eval_f64(&x);
        for (ai, bi) in a.iter().zip(&b) {
            assert!((ai - bi).abs() < 1e-12);
        }
    }
}

/// Exact waypoints survive the whole build: the symmetric triangle source
/// map sends the apex row of the ball to the exact origin, rationally.
#[test]
fn triangle_waypoints_are_exact() {
    let tri = triangle_map_symmetric(1.0, 0.5).unwrap();
    let pipe = MapPipeline::from_map(tri);
    let report = ballmap::verify::check_waypoints(
        &pipe,
        &[(
            vec![rat_int(0), rat_int(0)],
            vec![rat(1, 2), rat_int(0)],
        )],
    );
    assert_eq!(report.violations, 0);
    assert!(report.waypoints.iter().all(|w| w.exact));
}
