//! Bricks bounded by quadric-like surfaces: weighted power images of the
//! ball, cone frusta, and paraboloid regions.

use num_bigint::BigInt;

use crate::geometry::SemialgebraicSet;
use crate::polycore::{
    rat, rat_from_f64_exact, rat_int, MapPipeline, MultiPoly, PolyMap, Rat, Ring,
};
use crate::{BallmapError, Result};

use super::base::cylinder_stage;
use super::result::BrickResult;
use super::sets;

/// Map `x ↦ (x₁^{k₁}, …, xₙ^{kₙ})` on the closed unit ball, with the
/// image described exactly. The description is available when every
/// weight is 1 or 2 (the image is then a convex ball-like region), or
/// when exactly one weight is larger (its variable can be isolated);
/// with two or more weights above 2 no polynomial inequality description
/// is produced and the construction refuses.
pub fn spherical_star_map(weights: &[u32]) -> Result<BrickResult> {
    if weights.is_empty() {
        return Err(BallmapError::EmptyInput("power map weights"));
    }
    if weights.contains(&0) {
        return Err(BallmapError::ParamRange(
            "power map weights must be ≥ 1".into(),
        ));
    }
    let n = weights.len();
    let comps = weights
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let mut e = vec![0u32; n];
            e[i] = k;
            MultiPoly::monomial(n, e, rat_int(1))
        })
        .collect();
    let map = PolyMap::from_rat(n, comps).with_step("coordinate powers");

    let big: Vec<usize> = (0..n).filter(|&i| weights[i] > 2).collect();
    if big.len() >= 2 {
        return Err(BallmapError::Precondition(format!(
            "cannot describe the image exactly with {} weights above 2; at most one is supported",
            big.len()
        )));
    }

    // Unit-ball pullback of the small weights: squares of the odd-power
    // coordinates plus the even-power coordinates themselves.
    let pullback = |skip: Option<usize>| -> MultiPoly<Rat> {
        let mut acc = MultiPoly::zero(n);
        for i in 0..n {
            if Some(i) == skip {
                continue;
            }
            let mut e = vec![0u32; n];
            e[i] = if weights[i] % 2 == 1 { 2 } else { 1 };
            acc = acc.add_ref(&MultiPoly::monomial(n, e, rat_int(1)));
        }
        acc
    };
    let one = MultiPoly::constant(n, rat_int(1));

    let mut piece: Vec<MultiPoly<Rat>> = Vec::new();
    match big.first() {
        None => {
            // 1 − Σ (squares of odd-weight coords, even-weight coords) ≥ 0.
            piece.push(one.sub_ref(&pullback(None)));
        }
        Some(&j) => {
            // Isolate x_j: the remaining coordinates pull back to
            // P = Σ…, and x_j ranges over |x_j| ≤ (1 − P)^{k_j / 2},
            // written without fractional powers as (1−P)^{k_j} ≥ x_j².
            let p = pullback(Some(j));
            let slack = one.sub_ref(&p);
            if !p.is_zero() {
                piece.push(slack.clone());
            }
            let mut e = vec![0u32; n];
            e[j] = 2;
            piece.push(slack.pow(weights[j]).sub_ref(&MultiPoly::monomial(
                n,
                e,
                rat_int(1),
            )));
        }
    }
    for i in 0..n {
        if weights[i] % 2 == 0 {
            piece.push(MultiPoly::var(n, i));
        }
    }

    let bbox = (0..n)
        .map(|i| if weights[i] % 2 == 0 { (0.0, 1.0) } else { (-1.0, 1.0) })
        .collect();
    let set = SemialgebraicSet::new(n, vec![piece])?.with_bbox(bbox);

    // Interior point (2n)^{-k_i}: far enough inside every inequality.
    let base = BigInt::from(2 * n as i64);
    let center: Vec<Rat> = weights
        .iter()
        .map(|&k| Rat::new(BigInt::from(1), base.pow(k)))
        .collect();
    let radially_convex = n == 1 || big.is_empty();
    BrickResult::checked(MapPipeline::from_map(map), set, center, radially_convex)
}

/// Map from `B̄ₙ` onto the cone frustum `{ ‖x′‖ ≤ |xₙ|, a ≤ xₙ ≤ b }`,
/// `n ≥ 2`. The interval must not straddle 0: a frustum pinched at the
/// apex has no interior there and should be built as two bricks.
pub fn truncated_cone_map(a: Rat, b: Rat, n: usize) -> Result<BrickResult> {
    if n < 2 {
        return Err(BallmapError::ParamRange(format!(
            "cone frustum needs dimension ≥ 2, got {n}"
        )));
    }
    if a >= b {
        return Err(BallmapError::ParamRange(format!(
            "cone frustum needs a < b, got [{a}, {b}]"
        )));
    }
    let zero = rat_int(0);
    if a < zero && b > zero {
        return Err(BallmapError::ParamRange(format!(
            "cone frustum interval [{a}, {b}] straddles the apex; build each side separately"
        )));
    }

    // Height rescale [−1, 1] → [a, b] on the last coordinate.
    let mid = (a.clone() + b.clone()) / rat_int(2);
    let half = (b.clone() - a.clone()) / rat_int(2);
    let mut height_comps: Vec<MultiPoly<Rat>> =
        (0..n - 1).map(|i| MultiPoly::var(n, i)).collect();
    height_comps.push(sets::affine_form(n, &[(n - 1, half)], mid.clone()));
    let height = PolyMap::from_rat(n, height_comps).with_step("height rescale");

    // Scale the disc block by the height: (x′, xₙ) ↦ (x′·xₙ, xₙ).
    let mut cone_comps: Vec<MultiPoly<Rat>> = (0..n - 1)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[i] = 1;
            e[n - 1] = 1;
            MultiPoly::monomial(n, e, rat_int(1))
        })
        .collect();
    cone_comps.push(MultiPoly::var(n, n - 1));
    let cone = PolyMap::from_rat(n, cone_comps).with_step("disc scaled by height");

    let pipe = MapPipeline::new(vec![cylinder_stage(n), height, cone])?.flattened_or_self();

    let mut e = vec![0u32; n];
    e[n - 1] = 2;
    let piece = vec![
        MultiPoly::monomial(n, e, rat_int(1)).sub_ref(&sets::sum_sq(n, 0..n - 1)),
        sets::var_minus_const(n, n - 1, a.clone()),
        sets::const_minus_var(n, n - 1, b.clone()),
    ];
    let r = a.to_f64().abs().max(b.to_f64().abs());
    let mut bbox = vec![(-r, r); n - 1];
    bbox.push((a.to_f64(), b.to_f64()));
    let set = SemialgebraicSet::new(n, vec![piece])?.with_bbox(bbox);

    let mut center = vec![rat_int(0); n];
    center[n - 1] = mid;
    BrickResult::checked(pipe, set, center, true)
}

/// Map from `B̄ₙ` onto the region between the hyperplane `xₙ = 0` and the
/// paraboloid `xₙ = 2(1 − ‖x′‖²)`. In dimension one this degenerates to
/// the segment `[0, 2]`.
pub fn parabolic_n_map(n: usize) -> Result<BrickResult> {
    if n == 0 {
        return Err(BallmapError::ParamRange(
            "paraboloid region needs dimension ≥ 1".into(),
        ));
    }
    if n == 1 {
        let map = PolyMap::from_rat(
            1,
            vec![sets::affine_form(1, &[(0, rat_int(1))], rat_int(1))],
        )
        .with_step("shift onto [0, 2]");
        let piece = vec![
            MultiPoly::var(1, 0),
            sets::const_minus_var(1, 0, rat_int(2)),
        ];
        let set = SemialgebraicSet::new(1, vec![piece])?.with_bbox(vec![(0.0, 2.0)]);
        return BrickResult::checked(
            MapPipeline::from_map(map),
            set,
            vec![rat_int(1)],
            true,
        );
    }

    // (x′, t) ↦ (x′, (1 − ‖x′‖²)(t + 1)) on the cylinder B̄ₙ₋₁ × [−1, 1].
    let slack = MultiPoly::constant(n, rat_int(1)).sub_ref(&sets::sum_sq(n, 0..n - 1));
    let t_plus_1 = sets::affine_form(n, &[(n - 1, rat_int(1))], rat_int(1));
    let mut comps: Vec<MultiPoly<Rat>> = (0..n - 1).map(|i| MultiPoly::var(n, i)).collect();
    comps.push(slack.mul_ref(&t_plus_1));
    let cap = PolyMap::from_rat(n, comps).with_step("height capped by the paraboloid");
    let pipe = MapPipeline::new(vec![cylinder_stage(n), cap])?.flattened_or_self();

    let paraboloid = MultiPoly::constant(n, rat_int(2))
        .sub_ref(&sets::sum_sq(n, 0..n - 1).scale(&rat_int(2)))
        .sub_ref(&MultiPoly::var(n, n - 1));
    let piece = vec![MultiPoly::var(n, n - 1), paraboloid];
    let mut bbox = vec![(-1.0, 1.0); n - 1];
    bbox.push((0.0, 2.0));
    let set = SemialgebraicSet::new(n, vec![piece])?.with_bbox(bbox);

    let mut center = vec![rat_int(0); n];
    center[n - 1] = rat_int(1);
    BrickResult::checked(pipe, set, center, true)
}

/// Exact rational square root of a positive rational, if it has one.
fn rat_sqrt_exact(a: &Rat) -> Option<Rat> {
    let (num, den) = (a.numer(), a.denom());
    let sn = num.sqrt();
    let sd = den.sqrt();
    (&sn * &sn == *num && &sd * &sd == *den).then(|| Rat::new(sn, sd))
}

/// Map from `B̄₂` onto the planar region `{ y² ≤ x ≤ √a·y }` pinched
/// between a parabola and a line through the origin, `a > 0`. The map is
/// `(x₁, x₂) ↦ (a·x₂²(x₁² + x₂²), √a·x₂²)`: exact rational when `√a` is
/// rational, float-backed otherwise.
pub fn parabolic2_map(a: Rat) -> Result<BrickResult> {
    if a <= rat_int(0) {
        return Err(BallmapError::ParamRange(format!(
            "parabola–line region needs a > 0, got {a}"
        )));
    }
    let sqrt_a = rat_sqrt_exact(&a);
    // Set/center constant: the exact root when available, else the
    // closest binary64 value lifted exactly to a rational.
    let sa = match &sqrt_a {
        Some(r) => r.clone(),
        None => rat_from_f64_exact(a.to_f64().sqrt())
            .ok_or_else(|| BallmapError::ParamRange("a is too extreme to represent".into()))?,
    };

    // First component a·x₂²·(x₁² + x₂²) is exact either way.
    let comp1 = MultiPoly::from_terms(
        2,
        vec![
            (vec![2, 2], a.clone()),
            (vec![0, 4], a.clone()),
        ],
    );
    let map = match &sqrt_a {
        Some(r) => PolyMap::from_rat(
            2,
            vec![comp1, MultiPoly::monomial(2, vec![0, 2], r.clone())],
        ),
        None => PolyMap::from_f64(
            2,
            vec![
                comp1.to_f64(),
                MultiPoly::monomial(2, vec![0, 2], a.to_f64().sqrt()),
            ],
        ),
    }
    .with_step("parabola–line pinch");

    let piece = vec![
        // x ≥ y²
        MultiPoly::var(2, 0).sub_ref(&MultiPoly::monomial(2, vec![0, 2], rat_int(1))),
        // √a·y ≥ x
        MultiPoly::monomial(2, vec![0, 1], sa.clone()).sub_ref(&MultiPoly::var(2, 0)),
    ];
    let set = SemialgebraicSet::new(2, vec![piece])?
        .with_bbox(vec![(0.0, a.to_f64()), (0.0, sa.to_f64())]);

    let center = vec![a.clone() * rat(3, 8), sa * rat(7, 16)];
    BrickResult::checked(MapPipeline::from_map(map), set, center, true)
}
