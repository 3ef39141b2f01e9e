//! Exact two-phase simplex over arbitrary-precision rationals.
//!
//! Decides feasibility and optimizes the small linear programs arising in
//! interior-point computation, bounding boxes, emptiness tests and
//! bridge-arc direction search. Variables are free (unrestricted in sign);
//! the solver splits each into a nonnegative pair internally. Bland's rule
//! guarantees termination, every pivot is exact, and the reduced costs are
//! recomputed from scratch each iteration — the problems are tiny, so we
//! buy auditability instead of speed. The outcome is therefore a decision
//! procedure, not a numerical heuristic: `Infeasible` and strict-positivity
//! answers are exact.

use crate::polycore::{rat_int, Rat};
use num_traits::Zero;

/// Comparison operator of one linear constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Eq,
}

/// `maximize objective · x` subject to rows `coeffs · x (≤|≥|=) rhs`,
/// with every `x_j` free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    nvars: usize,
    rows: Vec<(Vec<Rat>, Cmp, Rat)>,
    objective: Vec<Rat>,
}

/// Outcome of an exact solve.
#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Rat>, value: Rat },
}

impl LpOutcome {
    /// The optimizer if the program had one.
    pub fn optimal(self) -> Option<(Vec<Rat>, Rat)> {
        match self {
            LpOutcome::Optimal { x, value } => Some((x, value)),
            _ => None,
        }
    }
}

impl LinearProgram {
    pub fn new(nvars: usize) -> Self {
        Self {
            nvars,
            rows: Vec::new(),
            objective: vec![rat_int(0); nvars],
        }
    }

    /// Set the objective (maximized).
    pub fn maximize(mut self, objective: Vec<Rat>) -> Self {
        assert_eq!(objective.len(), self.nvars, "objective width");
        self.objective = objective;
        self
    }

    pub fn constraint(&mut self, coeffs: Vec<Rat>, cmp: Cmp, rhs: Rat) {
        assert_eq!(coeffs.len(), self.nvars, "constraint width");
        self.rows.push((coeffs, cmp, rhs));
    }

    /// Add the pair of box constraints `-bound ≤ x_var ≤ bound`.
    pub fn bound_abs(&mut self, var: usize, bound: Rat) {
        let mut c = vec![rat_int(0); self.nvars];
        c[var] = rat_int(1);
        self.constraint(c.clone(), Cmp::Le, bound.clone());
        c[var] = rat_int(-1);
        self.constraint(c, Cmp::Le, bound);
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::solve(self)
    }
}

/// Dense simplex tableau. Column layout: `n` positive parts, `n` negative
/// parts, slack/surplus columns, artificial columns (phase one only).
struct Tableau {
    ncols: usize,
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn solve(lp: &LinearProgram) -> LpOutcome {
        let n = lp.nvars;
        let nsplit = 2 * n;

        // Normalize every row to nonnegative rhs.
        let norm: Vec<(Vec<Rat>, Cmp, Rat)> = lp
            .rows
            .iter()
            .map(|(c, cmp, b)| {
                if b < &rat_int(0) {
                    let flipped = match cmp {
                        Cmp::Le => Cmp::Ge,
                        Cmp::Ge => Cmp::Le,
                        Cmp::Eq => Cmp::Eq,
                    };
                    (c.iter().map(|x| -x).collect(), flipped, -b)
                } else {
                    (c.clone(), *cmp, b.clone())
                }
            })
            .collect();

        let nslack = norm.iter().filter(|r| r.1 != Cmp::Eq).count();
        let nart = norm.iter().filter(|r| r.1 != Cmp::Le).count();
        let art_start = nsplit + nslack;
        let ncols = art_start + nart;

        let mut rows = Vec::with_capacity(norm.len());
        let mut rhs = Vec::with_capacity(norm.len());
        let mut basis = Vec::with_capacity(norm.len());
        let mut slack_idx = 0usize;
        let mut art_idx = 0usize;
        for (c, cmp, b) in &norm {
            let mut row = vec![rat_int(0); ncols];
            for j in 0..n {
                row[j] = c[j].clone();
                row[n + j] = -&c[j];
            }
            match cmp {
                Cmp::Le => {
                    let sc = nsplit + slack_idx;
                    slack_idx += 1;
                    row[sc] = rat_int(1);
                    basis.push(sc);
                }
                Cmp::Ge => {
                    let sc = nsplit + slack_idx;
                    slack_idx += 1;
                    row[sc] = rat_int(-1);
                    let ac = art_start + art_idx;
                    art_idx += 1;
                    row[ac] = rat_int(1);
                    basis.push(ac);
                }
                Cmp::Eq => {
                    let ac = art_start + art_idx;
                    art_idx += 1;
                    row[ac] = rat_int(1);
                    basis.push(ac);
                }
            }
            rows.push(row);
            rhs.push(b.clone());
        }

        let mut t = Tableau {
            ncols,
            rows,
            rhs,
            basis,
        };

        // Phase one: maximize minus the sum of artificials.
        if nart > 0 {
            let mut cost = vec![rat_int(0); ncols];
            for c in cost.iter_mut().skip(art_start) {
                *c = rat_int(-1);
            }
            match t.optimize(&cost) {
                Err(()) => unreachable!("phase-one objective is bounded above by zero"),
                Ok(v) => {
                    if !v.is_zero() {
                        return LpOutcome::Infeasible;
                    }
                }
            }
            t.drive_out_artificials(art_start);
            t.ncols = art_start;
            for row in &mut t.rows {
                row.truncate(art_start);
            }
        }

        // Phase two: the real objective on the split variables.
        let mut cost = vec![rat_int(0); t.ncols];
        for j in 0..n {
            cost[j] = lp.objective[j].clone();
            cost[n + j] = -&lp.objective[j];
        }
        match t.optimize(&cost) {
            Err(()) => LpOutcome::Unbounded,
            Ok(value) => {
                let col_value = |col: usize| -> Rat {
                    t.basis
                        .iter()
                        .position(|&b| b == col)
                        .map(|i| t.rhs[i].clone())
                        .unwrap_or_else(|| rat_int(0))
                };
                let x = (0..n).map(|j| col_value(j) - col_value(n + j)).collect();
                LpOutcome::Optimal { x, value }
            }
        }
    }

    /// Run simplex iterations for `maximize cost · columns` with Bland's
    /// rule. Returns the optimal value, or `Err(())` when unbounded.
    fn optimize(&mut self, cost: &[Rat]) -> Result<Rat, ()> {
        loop {
            // Reduced costs from scratch: z_j = cost_B · column_j − cost_j.
            let mut z: Vec<Rat> = cost.iter().map(|c| -c).collect();
            for (i, &bi) in self.basis.iter().enumerate() {
                if !cost[bi].is_zero() {
                    for j in 0..self.ncols {
                        if !self.rows[i][j].is_zero() {
                            let d = &cost[bi] * &self.rows[i][j];
                            z[j] = &z[j] + &d;
                        }
                    }
                }
            }
            // Bland: entering column is the smallest index priced negative.
            let Some(col) = (0..self.ncols).find(|&j| z[j] < rat_int(0)) else {
                let mut value = rat_int(0);
                for (i, &bi) in self.basis.iter().enumerate() {
                    value += &cost[bi] * &self.rhs[i];
                }
                return Ok(value);
            };
            // Ratio test; smallest basic index breaks ties.
            let zero = rat_int(0);
            let mut pick: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col] > zero {
                    let ratio = &self.rhs[i] / &self.rows[i][col];
                    let better = match &pick {
                        None => true,
                        Some((pi, pr)) => {
                            ratio < *pr || (ratio == *pr && self.basis[i] < self.basis[*pi])
                        }
                    };
                    if better {
                        pick = Some((i, ratio));
                    }
                }
            }
            let Some((prow, _)) = pick else {
                return Err(());
            };
            self.pivot(prow, col);
        }
    }

    fn pivot(&mut self, prow: usize, pcol: usize) {
        let p = self.rows[prow][pcol].clone();
        for j in 0..self.ncols {
            self.rows[prow][j] = &self.rows[prow][j] / &p;
        }
        self.rhs[prow] = &self.rhs[prow] / &p;
        for i in 0..self.rows.len() {
            if i == prow || self.rows[i][pcol].is_zero() {
                continue;
            }
            let f = self.rows[i][pcol].clone();
            for j in 0..self.ncols {
                let d = &f * &self.rows[prow][j];
                self.rows[i][j] = &self.rows[i][j] - &d;
            }
            let d = &f * &self.rhs[prow];
            self.rhs[i] = &self.rhs[i] - &d;
        }
        self.basis[prow] = pcol;
    }

    /// After a zero-value phase one, replace any artificial still basic by a
    /// structural column, dropping rows that turn out redundant.
    fn drive_out_artificials(&mut self, art_start: usize) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= art_start {
                if let Some(j) = (0..art_start).find(|&j| !self.rows[i][j].is_zero()) {
                    self.pivot(i, j);
                    i += 1;
                } else {
                    // Redundant constraint: remove the row entirely.
                    self.rows.remove(i);
                    self.rhs.remove(i);
                    self.basis.remove(i);
                }
            } else {
                i += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn row(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn corner_of_unit_square() {
        let mut lp = LinearProgram::new(2).maximize(row(&[1, 1]));
        lp.constraint(row(&[1, 0]), Cmp::Le, rat_int(1));
        lp.constraint(row(&[0, 1]), Cmp::Le, rat_int(1));
        lp.constraint(row(&[-1, 0]), Cmp::Le, rat_int(0));
        lp.constraint(row(&[0, -1]), Cmp::Le, rat_int(0));
        let (x, v) = lp.solve().optimal().unwrap();
        assert_eq!(v, rat_int(2));
        assert_eq!(x, row(&[1, 1]));
    }

    #[test]
    fn infeasible_detected() {
        let mut lp = LinearProgram::new(1);
        lp.constraint(row(&[1]), Cmp::Le, rat_int(-1));
        lp.constraint(row(&[1]), Cmp::Ge, rat_int(0));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let mut lp = LinearProgram::new(1).maximize(row(&[1]));
        lp.constraint(row(&[1]), Cmp::Ge, rat_int(0));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn margin_program_square() {
        // Largest s with a margin of s on every face of the unit square:
        // s* = 1/2 at the center.
        let mut lp = LinearProgram::new(3).maximize(row(&[0, 0, 1]));
        lp.constraint(row(&[1, 0, 1]), Cmp::Le, rat_int(1));
        lp.constraint(row(&[-1, 0, 1]), Cmp::Le, rat_int(0));
        lp.constraint(row(&[0, 1, 1]), Cmp::Le, rat_int(1));
        lp.constraint(row(&[0, -1, 1]), Cmp::Le, rat_int(0));
        lp.constraint(row(&[0, 0, 1]), Cmp::Le, rat_int(1));
        let (x, v) = lp.solve().optimal().unwrap();
        assert_eq!(v, rat(1, 2));
        assert_eq!(x, vec![rat(1, 2), rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn equality_rows_and_negative_rhs() {
        // x + y = 1, x - y = -1  =>  x = 0, y = 1; maximize y.
        let mut lp = LinearProgram::new(2).maximize(row(&[0, 1]));
        lp.constraint(row(&[1, 1]), Cmp::Eq, rat_int(1));
        lp.constraint(row(&[1, -1]), Cmp::Eq, rat_int(-1));
        let (x, v) = lp.solve().optimal().unwrap();
        assert_eq!(v, rat_int(1));
        assert_eq!(x, row(&[0, 1]));
    }

    #[test]
    fn free_variables_go_negative() {
        let mut lp = LinearProgram::new(1).maximize(row(&[-1]));
        lp.constraint(row(&[1]), Cmp::Ge, rat_int(-5));
        let (x, v) = lp.solve().optimal().unwrap();
        assert_eq!(v, rat_int(5));
        assert_eq!(x, row(&[-5]));
    }

    #[test]
    fn redundant_equality_rows() {
        let mut lp = LinearProgram::new(2).maximize(row(&[1, 0]));
        lp.constraint(row(&[1, 1]), Cmp::Eq, rat_int(2));
        lp.constraint(row(&[2, 2]), Cmp::Eq, rat_int(4));
        lp.constraint(row(&[1, 0]), Cmp::Le, rat_int(3));
        let (x, v) = lp.solve().optimal().unwrap();
        assert_eq!(v, rat_int(3));
        assert_eq!(x, row(&[3, -1]));
    }
}
