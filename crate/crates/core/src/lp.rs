//! An exact rational simplex solver for the small linear programs in this
//! crate.
//!
//! The solver works on maximization problems over nonnegative variables
//! with `>=` constraints and optional equality fixings. All arithmetic is
//! over `BigRational`; Bland's rule guarantees termination. Every optimum
//! comes with a dual solution whose certificate (dual feasibility plus
//! complementary slackness) is verified exactly before returning.

use crate::error::{Error, Result};
use crate::Rational;
use num::{One, Signed, Zero};

/// `maximize c.x  subject to  rows.x >= rhs, x >= 0, x_i = value (fixings)`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Rational>,
    /// Constraint rows with sense `>=`.
    pub rows: Vec<(Vec<Rational>, Rational)>,
    /// Pinned variables `(index, value)`.
    pub fixings: Vec<(usize, Rational)>,
}

/// An exact optimum with primal and dual solutions.
#[derive(Debug, Clone)]
pub struct LpSolution {
    pub optimum: Rational,
    pub primal: Vec<Rational>,
    /// One multiplier per constraint row (nonnegative).
    pub dual: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl PartialEq for LpSolution {
    fn eq(&self, other: &Self) -> bool {
        self.optimum == other.optimum
    }
}
impl Eq for LpSolution {}

fn zero() -> Rational {
    Rational::zero()
}

/// Dense simplex tableau over rationals, Bland's rule.
struct Tableau {
    /// rows x cols; last column is the rhs, last row the objective.
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let piv = self.t[row][col].clone();
        for x in self.t[row].iter_mut() {
            *x /= piv.clone();
        }
        let pivot_row = self.t[row].clone();
        for (r, tr) in self.t.iter_mut().enumerate() {
            if r != row && !tr[col].is_zero() {
                let f = tr[col].clone();
                for (x, p) in tr.iter_mut().zip(&pivot_row) {
                    *x -= f.clone() * p;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Runs the simplex loop on a feasible tableau. Returns false when the
    /// problem is unbounded. `limit` is the set of columns allowed to enter.
    fn optimize(&mut self, allowed: &[bool]) -> bool {
        let obj_row = self.t.len() - 1;
        loop {
            // Bland: smallest-index column with negative reduced cost.
            let Some(col) = (0..self.ncols - 1)
                .find(|&c| allowed[c] && self.t[obj_row][c].is_negative())
            else {
                return true;
            };
            // Bland: ratio test, ties broken by smallest basis index.
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..obj_row {
                if self.t[r][col].is_positive() {
                    let ratio = &self.t[r][self.ncols - 1] / &self.t[r][col];
                    let better = match &best {
                        None => true,
                        Some((br, bratio)) => {
                            ratio < *bratio
                                || (ratio == *bratio && self.basis[r] < self.basis[*br])
                        }
                    };
                    if better {
                        best = Some((r, ratio));
                    }
                }
            }
            match best {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

/// Solves the LP exactly. The returned dual multipliers certify optimality
/// with respect to the reduced problem after substituting the fixings;
/// certification is re-checked exactly inside this function.
pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    // Substitute fixings, keeping a map from reduced to original indices.
    let mut fixed = vec![None; lp.num_vars];
    for (i, v) in &lp.fixings {
        if *i >= lp.num_vars {
            return Err(Error::Domain(format!("fixing of unknown variable {i}")));
        }
        fixed[*i] = Some(v.clone());
    }
    let free: Vec<usize> = (0..lp.num_vars).filter(|&i| fixed[i].is_none()).collect();
    let nf = free.len();

    let mut obj_const = zero();
    let mut objective = Vec::with_capacity(nf);
    for (i, c) in lp.objective.iter().enumerate() {
        match &fixed[i] {
            Some(v) => obj_const += c * v,
            None => {}
        }
    }
    for &i in &free {
        objective.push(lp.objective[i].clone());
    }

    let mut rows = Vec::with_capacity(lp.rows.len());
    for (row, rhs) in &lp.rows {
        if row.len() != lp.num_vars {
            return Err(Error::Dimension("constraint row has wrong arity".into()));
        }
        let mut r = Vec::with_capacity(nf);
        let mut b = rhs.clone();
        for (i, c) in row.iter().enumerate() {
            match &fixed[i] {
                Some(v) => b -= c * v,
                None => {}
            }
        }
        for &i in &free {
            r.push(row[i].clone());
        }
        rows.push((r, b));
    }

    // Phase 1/2 tableau with slack and artificial variables:
    //   row.x - s = b  with s >= 0 (for >=), after flipping rows to b >= 0.
    let m = rows.len();
    let ncols = nf + m + m + 1; // structural, slack, artificial, rhs
    let mut t = vec![vec![zero(); ncols]; m + 1];
    let mut basis = vec![0usize; m];
    for (r, (row, rhs)) in rows.iter().enumerate() {
        let flip = rhs.is_negative();
        for (c, v) in row.iter().enumerate() {
            t[r][c] = if flip { -v.clone() } else { v.clone() };
        }
        // >= turns into row.x - s = b; flipped rows become <= with +s.
        t[r][nf + r] = if flip { Rational::one() } else { -Rational::one() };
        t[r][nf + m + r] = Rational::one();
        t[r][ncols - 1] = if flip { -rhs.clone() } else { rhs.clone() };
        basis[r] = nf + m + r;
    }
    // Phase 1 objective: minimize sum of artificials == maximize -sum.
    for r in 0..m {
        for c in 0..ncols {
            let v = t[r][c].clone();
            t[m][c] -= v;
        }
    }
    for r in 0..m {
        t[m][nf + m + r] = zero();
    }
    let mut tab = Tableau { t, basis, ncols };
    let allowed: Vec<bool> = (0..ncols - 1).map(|c| c < nf + m).collect();
    tab.optimize(&allowed);
    if tab.t[m][ncols - 1].is_negative() {
        return Ok(LpOutcome::Infeasible);
    }
    // Drive leftover artificial variables out of the basis where possible.
    for r in 0..m {
        if tab.basis[r] >= nf + m {
            if let Some(c) = (0..nf + m).find(|&c| !tab.t[r][c].is_zero()) {
                tab.pivot(r, c);
            }
        }
    }

    // Phase 2 objective.
    let obj_row = tab.t.len() - 1;
    for c in 0..ncols {
        tab.t[obj_row][c] = zero();
    }
    for (c, coef) in objective.iter().enumerate() {
        tab.t[obj_row][c] = -coef.clone();
    }
    for r in 0..m {
        let b = tab.basis[r];
        if !tab.t[obj_row][b].is_zero() {
            let f = tab.t[obj_row][b].clone();
            let row = tab.t[r].clone();
            for (x, p) in tab.t[obj_row].iter_mut().zip(&row) {
                *x -= f.clone() * p;
            }
        }
    }
    if !tab.optimize(&allowed) {
        return Ok(LpOutcome::Unbounded);
    }

    // Extract primal and dual solutions.
    let mut x = vec![zero(); nf];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < nf {
            x[b] = tab.t[r][ncols - 1].clone();
        }
    }
    let optimum = tab.t[obj_row][ncols - 1].clone() + &obj_const;
    // Dual value of constraint r is the final objective-row entry of its
    // slack column; flipping a row negates both the slack sign and the
    // constraint, so the entry reads off the original multiplier directly.
    let dual: Vec<Rational> = (0..m).map(|r| tab.t[obj_row][nf + r].clone()).collect();

    let mut primal = Vec::with_capacity(lp.num_vars);
    let mut it = x.into_iter();
    for i in 0..lp.num_vars {
        match &fixed[i] {
            Some(v) => primal.push(v.clone()),
            None => primal.push(it.next().unwrap()),
        }
    }
    let sol = LpSolution { optimum, primal, dual };
    verify_certificate(lp, &sol)?;
    Ok(LpOutcome::Optimal(sol))
}

/// Exact optimality certificate: primal feasibility, dual feasibility on the
/// free variables, and complementary slackness with zero residuals.
pub fn verify_certificate(lp: &LinearProgram, sol: &LpSolution) -> Result<()> {
    let fixed: Vec<bool> = {
        let mut f = vec![false; lp.num_vars];
        for (i, _) in &lp.fixings {
            f[*i] = true;
        }
        f
    };
    // Primal feasibility.
    for (i, v) in &lp.fixings {
        if sol.primal[*i] != *v {
            return Err(Error::Domain("certificate: fixing violated".into()));
        }
    }
    for (i, x) in sol.primal.iter().enumerate() {
        if !fixed[i] && x.is_negative() {
            return Err(Error::Domain("certificate: negative variable".into()));
        }
    }
    let mut slacks = Vec::with_capacity(lp.rows.len());
    for (row, rhs) in &lp.rows {
        let lhs: Rational = row.iter().zip(&sol.primal).map(|(a, x)| a * x).sum();
        if lhs < *rhs {
            return Err(Error::Domain("certificate: constraint violated".into()));
        }
        slacks.push(lhs - rhs);
    }
    // Dual feasibility for the Lagrangian c.x + sum_r y_r (a_r.x - b_r)
    // with y >= 0: the reduced costs c_i + (y^T A)_i must be <= 0 on the
    // free variables, which makes sum_fixed (c + y^T A)_i v_i - y.b an upper
    // bound on the program.
    let mut reduced = lp.objective.clone();
    for (y, (row, _)) in sol.dual.iter().zip(&lp.rows) {
        if y.is_negative() {
            return Err(Error::Domain("certificate: negative dual".into()));
        }
        for (ri, a) in reduced.iter_mut().zip(row) {
            *ri += y * a;
        }
    }
    for (i, r) in reduced.iter().enumerate() {
        if !fixed[i] {
            if r.is_positive() {
                return Err(Error::Domain("certificate: dual infeasible".into()));
            }
            // Complementary slackness: x_i > 0 forces zero reduced cost.
            if sol.primal[i].is_positive() && !r.is_zero() {
                return Err(Error::Domain("certificate: slackness violated".into()));
            }
        }
    }
    // y_r > 0 forces a tight constraint.
    for (y, s) in sol.dual.iter().zip(&slacks) {
        if y.is_positive() && !s.is_zero() {
            return Err(Error::Domain("certificate: dual slackness violated".into()));
        }
    }
    // Both objective identities must hold exactly.
    let primal_obj: Rational = lp
        .objective
        .iter()
        .zip(&sol.primal)
        .map(|(c, x)| c * x)
        .sum();
    if primal_obj != sol.optimum {
        return Err(Error::Domain("certificate: primal objective mismatch".into()));
    }
    let mut dual_obj: Rational = -sol
        .dual
        .iter()
        .zip(&lp.rows)
        .map(|(y, (_, b))| y * b)
        .sum::<Rational>();
    for (i, v) in &lp.fixings {
        dual_obj += &reduced[*i] * v;
    }
    if dual_obj != sol.optimum {
        return Err(Error::Domain("certificate: dual objective mismatch".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn r(v: i64) -> Rational {
        Rational::from_i64(v).unwrap()
    }

    fn solve_opt(lp: &LinearProgram) -> Rational {
        match solve(lp).unwrap() {
            LpOutcome::Optimal(s) => s.optimum,
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn one_variable_cap() {
        // max x s.t. x <= 7, i.e. -x >= -7
        let lp = LinearProgram {
            num_vars: 1,
            objective: vec![r(1)],
            rows: vec![(vec![r(-1)], r(-7))],
            fixings: vec![],
        };
        assert_eq!(solve_opt(&lp), r(7));
    }

    #[test]
    fn unbounded_detected() {
        let lp = LinearProgram {
            num_vars: 1,
            objective: vec![r(1)],
            rows: vec![(vec![r(1)], r(0))],
            fixings: vec![],
        };
        assert_eq!(solve(&lp).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn infeasible_detected() {
        // x >= 3 and -x >= -1
        let lp = LinearProgram {
            num_vars: 1,
            objective: vec![r(1)],
            rows: vec![(vec![r(1)], r(3)), (vec![r(-1)], r(-1))],
            fixings: vec![],
        };
        assert_eq!(solve(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn fixings_are_respected() {
        // max x + y with x = 1, constraint x + y <= 3
        let lp = LinearProgram {
            num_vars: 2,
            objective: vec![r(1), r(1)],
            rows: vec![(vec![r(-1), r(-1)], r(-3))],
            fixings: vec![(0, r(1))],
        };
        let LpOutcome::Optimal(sol) = solve(&lp).unwrap() else { panic!() };
        assert_eq!(sol.optimum, r(3));
        assert_eq!(sol.primal[0], r(1));
        assert_eq!(sol.primal[1], r(2));
    }

    /// Brute-force LP optimum by enumerating basic solutions: intersect all
    /// subsets of tight constraints (rows or nonnegativity) and keep the
    /// best feasible point.
    fn brute_force_opt(lp: &LinearProgram) -> Option<Rational> {
        use itertools::Itertools;
        let n = lp.num_vars;
        // constraints as equalities: rows and x_i = 0 planes
        let mut planes: Vec<(Vec<Rational>, Rational)> = lp.rows.clone();
        for i in 0..n {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            planes.push((row, Rational::zero()));
        }
        let mut best: Option<Rational> = None;
        for combo in (0..planes.len()).combinations(n) {
            // Solve the n x n system by Gaussian elimination.
            let mut a: Vec<Vec<Rational>> =
                combo.iter().map(|&i| planes[i].0.clone()).collect();
            let mut b: Vec<Rational> = combo.iter().map(|&i| planes[i].1.clone()).collect();
            let mut ok = true;
            for col in 0..n {
                let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                    ok = false;
                    break;
                };
                a.swap(col, p);
                b.swap(col, p);
                let piv = a[col][col].clone();
                for x in a[col].iter_mut() {
                    *x /= piv.clone();
                }
                b[col] /= piv.clone();
                for row in 0..n {
                    if row != col && !a[row][col].is_zero() {
                        let f = a[row][col].clone();
                        for c in 0..n {
                            let v = a[col][c].clone();
                            a[row][c] -= f.clone() * v;
                        }
                        let v = b[col].clone();
                        b[row] -= f * v;
                    }
                }
            }
            if !ok {
                continue;
            }
            let x = b;
            let feasible = x.iter().all(|v| !v.is_negative())
                && lp.rows.iter().all(|(row, rhs)| {
                    row.iter().zip(&x).map(|(a, x)| a * x).sum::<Rational>() >= *rhs
                });
            if feasible {
                let obj: Rational =
                    lp.objective.iter().zip(&x).map(|(c, x)| c * x).sum();
                best = Some(match best {
                    None => obj,
                    Some(b) => b.max(obj),
                });
            }
        }
        best
    }

    #[test]
    fn random_lps_match_vertex_enumeration() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut checked = 0;
        for _ in 0..60 {
            let n = rng.gen_range(1..4usize);
            let m = rng.gen_range(1..5usize);
            let lp = LinearProgram {
                num_vars: n,
                objective: (0..n).map(|_| r(rng.gen_range(-4..5))).collect(),
                rows: (0..m)
                    .map(|_| {
                        (
                            (0..n).map(|_| r(rng.gen_range(-4..5))).collect(),
                            r(rng.gen_range(-6..7)),
                        )
                    })
                    .collect(),
                fixings: vec![],
            };
            let brute = brute_force_opt(&lp);
            match solve(&lp).unwrap() {
                LpOutcome::Optimal(sol) => {
                    assert_eq!(Some(sol.optimum), brute);
                    checked += 1;
                }
                LpOutcome::Infeasible => assert_eq!(brute, None),
                LpOutcome::Unbounded => {
                    // brute force of an unbounded LP may still find vertices;
                    // nothing to compare.
                }
            }
        }
        assert!(checked >= 10, "too few bounded instances sampled");
    }
}
