//! Convex polytopes in H-form and exact simplices.
//!
//! `HPolytope` stores `{x : A·x ≤ b}` with rational data and enumerates its
//! vertices exactly by brute force over row subsets — adequate and fully
//! reliable for the low ambient dimensions this crate targets (documented
//! limit: dimension ≤ 4). `Simplex` is the vertex-form counterpart used by
//! triangulations and barycentric interpolation. All predicates on rational
//! inputs are exact; a float containment test with tolerance exists for
//! sampling-based certificates only.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::linalg::{affine_rank, dot, nullspace, solve_square};
use super::lp::{Cmp, LinearProgram, LpOutcome};
use crate::polycore::{rat_int, Rat};
use crate::{BallmapError, Result};

/// Maximum ambient dimension for exact vertex enumeration.
///
/// Brute force over row subsets is exponential in the dimension; every
/// construction in this crate lives in dimension ≤ 4, so the limit is
/// enforced rather than silently degrading.
pub const MAX_VERTEX_ENUM_DIM: usize = 4;

/// A compact convex polytope `{x ∈ ℝⁿ : A·x ≤ b}` with rational data.
#[derive(Debug, Clone)]
pub struct HPolytope {
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
    dim: usize,
    vcache: OnceLock<Vec<Vec<Rat>>>,
}

impl HPolytope {
    /// Build from inequality rows. Emptiness/boundedness are not checked
    /// here; operations that need them check on demand.
    pub fn new(a: Vec<Vec<Rat>>, b: Vec<Rat>) -> Result<Self> {
        if a.is_empty() {
            return Err(BallmapError::EmptyInput("polytope needs at least one row"));
        }
        let dim = a[0].len();
        if dim == 0 {
            return Err(BallmapError::EmptyInput("polytope rows must have width ≥ 1"));
        }
        if a.len() != b.len() {
            return Err(BallmapError::DimensionMismatch {
                context: "polytope rows vs right-hand sides",
                expected: a.len(),
                got: b.len(),
            });
        }
        if let Some(bad) = a.iter().find(|row| row.len() != dim) {
            return Err(BallmapError::DimensionMismatch {
                context: "polytope row width",
                expected: dim,
                got: bad.len(),
            });
        }
        Ok(Self {
            a,
            b,
            dim,
            vcache: OnceLock::new(),
        })
    }

    /// Axis-aligned box `lo ≤ x ≤ hi` (componentwise).
    pub fn axis_box(lo: &[Rat], hi: &[Rat]) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(BallmapError::DimensionMismatch {
                context: "box corner widths",
                expected: lo.len(),
                got: hi.len(),
            });
        }
        let n = lo.len();
        let mut a = Vec::with_capacity(2 * n);
        let mut b = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut row = vec![rat_int(0); n];
            row[i] = rat_int(1);
            a.push(row);
            b.push(hi[i].clone());
            let mut row = vec![rat_int(0); n];
            row[i] = rat_int(-1);
            a.push(row);
            b.push(-&lo[i]);
        }
        Self::new(a, b)
    }

    /// Convex hull of a full-dimensional point set, as inequalities.
    ///
    /// Candidate facet hyperplanes are spanned by n-subsets of the points;
    /// a hyperplane is kept iff every input point lies on one side. This is
    /// exact and complete for full-dimensional hulls in small dimension.
    pub fn from_vertices(points: &[Vec<Rat>]) -> Result<Self> {
        if points.is_empty() {
            return Err(BallmapError::EmptyInput("convex hull of no points"));
        }
        let n = points[0].len();
        if points.iter().any(|p| p.len() != n) {
            return Err(BallmapError::DimensionMismatch {
                context: "hull point width",
                expected: n,
                got: points.iter().find(|p| p.len() != n).unwrap().len(),
            });
        }
        if n > MAX_VERTEX_ENUM_DIM {
            return Err(BallmapError::ParamRange(format!(
                "convex hull supported up to dimension {MAX_VERTEX_ENUM_DIM}, got {n}"
            )));
        }
        let pts: Vec<Vec<Rat>> = points
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if affine_rank(&pts) != n {
            return Err(BallmapError::Degenerate(format!(
                "hull points span dimension {} inside ℝ^{n}",
                affine_rank(&pts)
            )));
        }
        let mut seen: BTreeSet<(Vec<BigInt>, BigInt)> = BTreeSet::new();
        let mut rows_a: Vec<Vec<Rat>> = Vec::new();
        let mut rows_b: Vec<Rat> = Vec::new();
        for subset in combinations(pts.len(), n) {
            // Hyperplane a·x = c through the subset: (a, c) spans the null
            // space of the rows [p_i | −1].
            let mat: Vec<Vec<Rat>> = subset
                .iter()
                .map(|&i| {
                    let mut row = pts[i].clone();
                    row.push(rat_int(-1));
                    row
                })
                .collect();
            let ns = nullspace(&mat, n + 1);
            if ns.len() != 1 {
                continue; // affinely dependent subset
            }
            let mut normal: Vec<Rat> = ns[0][..n].to_vec();
            let mut offset: Rat = ns[0][n].clone();
            let zero = rat_int(0);
            let mut has_pos = false;
            let mut has_neg = false;
            for p in &pts {
                let s = dot(&normal, p) - &offset;
                if s > zero {
                    has_pos = true;
                } else if s < zero {
                    has_neg = true;
                }
            }
            if has_pos && has_neg {
                continue; // not a supporting hyperplane
            }
            if has_pos {
                for c in normal.iter_mut() {
                    *c = -&*c;
                }
                offset = -offset;
            }
            let key = canonical_halfspace(&normal, &offset);
            if seen.insert(key.clone()) {
                let (ia, ib) = key;
                rows_a.push(ia.into_iter().map(Rat::from_integer).collect());
                rows_b.push(Rat::from_integer(ib));
            }
        }
        // Deterministic row order.
        let mut paired: Vec<(Vec<Rat>, Rat)> = rows_a.into_iter().zip(rows_b).collect();
        paired.sort();
        let (a, b) = paired.into_iter().unzip();
        let hp = Self::new(a, b)?;
        debug_assert!(pts.iter().all(|p| hp.contains_rat(p)));
        Ok(hp)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nrows(&self) -> usize {
        self.a.len()
    }

    pub fn row(&self, i: usize) -> (&[Rat], &Rat) {
        (&self.a[i], &self.b[i])
    }

    pub fn rows_a(&self) -> &[Vec<Rat>] {
        &self.a
    }

    pub fn rows_b(&self) -> &[Rat] {
        &self.b
    }

    /// Exact membership.
    pub fn contains_rat(&self, x: &[Rat]) -> bool {
        self.a
            .iter()
            .zip(&self.b)
            .all(|(row, b)| dot(row, x) <= *b)
    }

    /// Exact strict-interior membership.
    pub fn strictly_contains_rat(&self, x: &[Rat]) -> bool {
        self.a.iter().zip(&self.b).all(|(row, b)| dot(row, x) < *b)
    }

    /// Indices of rows active (tight) at `x`, exactly.
    pub fn active_rows_at(&self, x: &[Rat]) -> Vec<usize> {
        self.a
            .iter()
            .zip(&self.b)
            .enumerate()
            .filter(|(_, (row, b))| dot(row, x) == **b)
            .map(|(i, _)| i)
            .collect()
    }

    /// A point maximizing the worst un-normalized row margin, together with
    /// that margin. `Some` iff the interior is nonempty (margin > 0).
    pub fn interior_point(&self) -> Option<(Vec<Rat>, Rat)> {
        let n = self.dim;
        let mut obj = vec![rat_int(0); n + 1];
        obj[n] = rat_int(1);
        let mut lp = LinearProgram::new(n + 1).maximize(obj);
        for (row, b) in self.a.iter().zip(&self.b) {
            let mut c = row.clone();
            c.push(rat_int(1));
            lp.constraint(c, Cmp::Le, b.clone());
        }
        let mut cap = vec![rat_int(0); n + 1];
        cap[n] = rat_int(1);
        lp.constraint(cap, Cmp::Le, rat_int(1));
        match lp.solve() {
            LpOutcome::Optimal { x, value } if value > rat_int(0) => {
                Some((x[..n].to_vec(), value))
            }
            _ => None,
        }
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.interior_point().is_some()
    }

    pub fn is_empty(&self) -> bool {
        let mut lp = LinearProgram::new(self.dim);
        for (row, b) in self.a.iter().zip(&self.b) {
            lp.constraint(row.clone(), Cmp::Le, b.clone());
        }
        matches!(lp.solve(), LpOutcome::Infeasible)
    }

    /// Exact coordinate ranges. Errors on empty or unbounded input.
    pub fn bounding_box(&self) -> Result<Vec<(Rat, Rat)>> {
        let n = self.dim;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut hi_obj = vec![rat_int(0); n];
            hi_obj[i] = rat_int(1);
            let mut lo_obj = vec![rat_int(0); n];
            lo_obj[i] = rat_int(-1);
            let mut hi = None;
            let mut lo = None;
            for (obj, slot) in [(hi_obj, &mut hi), (lo_obj, &mut lo)] {
                let mut lp = LinearProgram::new(n).maximize(obj);
                for (row, b) in self.a.iter().zip(&self.b) {
                    lp.constraint(row.clone(), Cmp::Le, b.clone());
                }
                match lp.solve() {
                    LpOutcome::Optimal { value, .. } => *slot = Some(value),
                    LpOutcome::Infeasible => {
                        return Err(BallmapError::Degenerate("empty polytope".into()))
                    }
                    LpOutcome::Unbounded => return Err(BallmapError::Unbounded),
                }
            }
            out.push((-lo.unwrap(), hi.unwrap()));
        }
        Ok(out)
    }

    /// Exact vertex enumeration (dimension ≤ 4), lexicographically sorted.
    pub fn vertices(&self) -> Result<&[Vec<Rat>]> {
        if let Some(v) = self.vcache.get() {
            return Ok(v);
        }
        let v = self.enumerate_vertices()?;
        Ok(self.vcache.get_or_init(|| v))
    }

    fn enumerate_vertices(&self) -> Result<Vec<Vec<Rat>>> {
        let n = self.dim;
        if n > MAX_VERTEX_ENUM_DIM {
            return Err(BallmapError::ParamRange(format!(
                "vertex enumeration supported up to dimension {MAX_VERTEX_ENUM_DIM}, got {n}"
            )));
        }
        // Also certifies boundedness and nonemptiness.
        self.bounding_box()?;
        let mut set: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for subset in combinations(self.a.len(), n) {
            let mat: Vec<Vec<Rat>> = subset.iter().map(|&i| self.a[i].clone()).collect();
            let rhs: Vec<Rat> = subset.iter().map(|&i| self.b[i].clone()).collect();
            if let Some(x) = solve_square(&mat, &rhs) {
                if self.contains_rat(&x) {
                    set.insert(x);
                }
            }
        }
        if set.is_empty() {
            return Err(BallmapError::Degenerate(
                "polytope has no vertices".into(),
            ));
        }
        Ok(set.into_iter().collect())
    }

    /// Mean of the vertices.
    pub fn centroid(&self) -> Result<Vec<Rat>> {
        let vs = self.vertices()?;
        Ok(centroid_of(vs))
    }

    /// `{x : self ∧ other}` by stacking rows.
    pub fn intersect(&self, other: &HPolytope) -> Result<HPolytope> {
        if self.dim != other.dim {
            return Err(BallmapError::DimensionMismatch {
                context: "polytope intersection",
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut a = self.a.clone();
        a.extend(other.a.iter().cloned());
        let mut b = self.b.clone();
        b.extend(other.b.iter().cloned());
        HPolytope::new(a, b)
    }
}

/// Mean of a nonempty point list.
pub fn centroid_of(points: &[Vec<Rat>]) -> Vec<Rat> {
    let n = points[0].len();
    let k = Rat::from_integer(BigInt::from(points.len()));
    (0..n)
        .map(|j| {
            let mut s = rat_int(0);
            for p in points {
                s += &p[j];
            }
            s / &k
        })
        .collect()
}

/// Primitive-integer canonical form of the half-space `a·x ≤ c`, preserving
/// orientation (scales by positive factors only).
fn canonical_halfspace(a: &[Rat], c: &Rat) -> (Vec<BigInt>, BigInt) {
    let mut denom_lcm = BigInt::from(1);
    for r in a.iter().chain(std::iter::once(c)) {
        denom_lcm = denom_lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = a
        .iter()
        .chain(std::iter::once(c))
        .map(|r| r.numer() * (&denom_lcm / r.denom()))
        .collect();
    let mut g = BigInt::from(0);
    for v in &ints {
        g = g.gcd(v);
    }
    if g.is_zero() {
        g = BigInt::from(1);
    }
    let prim: Vec<BigInt> = ints.iter().map(|v| v / &g).collect();
    let c_out = prim[prim.len() - 1].clone();
    (prim[..prim.len() - 1].to_vec(), c_out)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A nondegenerate simplex: `n+1` affinely independent vertices in `ℝⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Simplex {
    vertices: Vec<Vec<Rat>>,
}

impl Simplex {
    pub fn new(vertices: Vec<Vec<Rat>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(BallmapError::EmptyInput("simplex needs vertices"));
        }
        let n = vertices[0].len();
        if vertices.len() != n + 1 {
            return Err(BallmapError::DimensionMismatch {
                context: "simplex vertex count (needs dim + 1)",
                expected: n + 1,
                got: vertices.len(),
            });
        }
        if vertices.iter().any(|v| v.len() != n) {
            return Err(BallmapError::DimensionMismatch {
                context: "simplex vertex width",
                expected: n,
                got: vertices.iter().find(|v| v.len() != n).unwrap().len(),
            });
        }
        if affine_rank(&vertices) != n {
            return Err(BallmapError::Degenerate(
                "simplex vertices are affinely dependent".into(),
            ));
        }
        Ok(Self { vertices })
    }

    /// The simplex spanned by the origin and the standard basis vectors.
    pub fn standard(n: usize) -> Self {
        let mut vertices = vec![vec![rat_int(0); n]];
        for i in 0..n {
            let mut v = vec![rat_int(0); n];
            v[i] = rat_int(1);
            vertices.push(v);
        }
        Self { vertices }
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn centroid(&self) -> Vec<Rat> {
        centroid_of(&self.vertices)
    }

    /// Exact barycentric coordinates of `x` (length `dim + 1`, sums to 1).
    pub fn barycentric(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        let n = self.dim();
        if x.len() != n {
            return Err(BallmapError::DimensionMismatch {
                context: "barycentric point width",
                expected: n,
                got: x.len(),
            });
        }
        let v0 = &self.vertices[0];
        // Columns are v_i − v_0.
        let mat: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                (1..=n)
                    .map(|c| &self.vertices[c][r] - &v0[r])
                    .collect()
            })
            .collect();
        let rhs: Vec<Rat> = (0..n).map(|r| &x[r] - &v0[r]).collect();
        let lam = solve_square(&mat, &rhs)
            .expect("simplex edge matrix is invertible by construction");
        let mut out = Vec::with_capacity(n + 1);
        let mut rest = rat_int(0);
        for l in &lam {
            rest += l;
        }
        out.push(rat_int(1) - rest);
        out.extend(lam);
        Ok(out)
    }

    /// Exact membership.
    pub fn contains_rat(&self, x: &[Rat]) -> bool {
        match self.barycentric(x) {
            Ok(lam) => lam.iter().all(|l| *l >= rat_int(0)),
            Err(_) => false,
        }
    }

    /// Float membership with tolerance on the barycentric coordinates.
    pub fn contains_f64(&self, x: &[f64], tol: f64) -> bool {
        let n = self.dim();
        if x.len() != n {
            return false;
        }
        let mut mat = vec![vec![0.0f64; n + 1]; n];
        for r in 0..n {
            for c in 1..=n {
                mat[r][c - 1] =
                    rat_to_f64(&self.vertices[c][r]) - rat_to_f64(&self.vertices[0][r]);
            }
            mat[r][n] = x[r] - rat_to_f64(&self.vertices[0][r]);
        }
        let Some(lam) = f64_solve(&mut mat) else {
            return false;
        };
        let rest: f64 = lam.iter().sum();
        lam.iter().all(|l| *l >= -tol) && rest <= 1.0 + tol
    }

    pub fn to_hpolytope(&self) -> Result<HPolytope> {
        HPolytope::from_vertices(&self.vertices)
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    crate::polycore::Ring::to_f64(r)
}

/// Solve an n×(n+1) augmented float system in place; `None` if near-singular.
fn f64_solve(m: &mut [Vec<f64>]) -> Option<Vec<f64>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| {
            m[i][col]
                .abs()
                .partial_cmp(&m[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        let p = m[col][col];
        for j in col..=n {
            m[col][j] /= p;
        }
        for i in 0..n {
            if i != col && m[i][col] != 0.0 {
                let f = m[i][col];
                for j in col..=n {
                    m[i][j] -= f * m[col][j];
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n]).collect())
}
