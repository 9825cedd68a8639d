//! The stabilizer-summed polynomials whose evaluations at the F-matrices
//! give the reduced block entries.
//!
//! Three routes to the same polynomial are implemented: the defining
//! double sum over row-equivalent fillings and column-stabilizer pairs, a
//! count-function enumeration over column profiles, and a differential
//! operator applied to a product of determinants. The first is exponential
//! and exists as an oracle for the other two.

use super::partition::Partition;
use super::poly::{det, Poly, Scalar};
use super::tableau::SemistandardTableau;
use crate::{factorial, Int, Rational};
use itertools::Itertools;
use std::collections::HashMap;

/// Label of the symbolic variable `x_{j,h}` (1-based indices) in a matrix
/// of side `m`.
pub fn xvar(m: u8, j: u8, h: u8) -> u32 {
    debug_assert!(1 <= j && j <= m && 1 <= h && h <= m);
    (j as u32 - 1) * m as u32 + (h as u32 - 1)
}

/// The symbolic `m x m` matrix `X`.
pub fn symbolic_matrix(m: u8) -> Vec<Vec<Poly<Rational>>> {
    (1..=m)
        .map(|j| {
            (1..=m)
                .map(|h| Poly::linear(xvar(m, j, h), <Rational as Scalar>::one()))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PtsAlgorithm {
    /// Enumeration of column count functions.
    Count,
    /// Differential operators on a determinant product.
    Diffop,
    /// The defining double sum; exponential, for cross-checks only.
    Definitional,
}

/// Picks the default algorithm for entry bound `m`: count for `m <= 3`,
/// diffop otherwise.
pub fn default_algorithm(m: u8) -> PtsAlgorithm {
    if m <= 3 {
        PtsAlgorithm::Count
    } else {
        PtsAlgorithm::Diffop
    }
}

/// `p_{tau,sigma}` as a polynomial in the symbolic variables `x_{j,h}`.
pub fn p_in_x(
    tau: &SemistandardTableau,
    sigma: &SemistandardTableau,
    m: u8,
    algo: PtsAlgorithm,
) -> Poly<Rational> {
    assert_eq!(tau.shape(), sigma.shape(), "tableau shape mismatch");
    match algo {
        PtsAlgorithm::Count => count(tau, sigma, m),
        PtsAlgorithm::Diffop => diffop(tau, sigma, m),
        PtsAlgorithm::Definitional => definitional(tau, sigma, m),
    }
}

/// Evaluates `p_{tau,sigma}` at an `m x m` matrix of polynomials.
pub fn p_tau_sigma<S: Scalar>(
    tau: &SemistandardTableau,
    sigma: &SemistandardTableau,
    x: &[Vec<Poly<S>>],
    algo: PtsAlgorithm,
) -> Poly<S> {
    let m = x.len() as u8;
    substitute(&p_in_x(tau, sigma, m, algo), x)
}

/// Product of the per-factor polynomials evaluated at their F-matrices:
/// the reduced block entry as a polynomial in the class labels, homogeneous
/// of degree `n = sum n_i`.
pub fn product_p<S: Scalar>(
    taus: &[SemistandardTableau],
    sigmas: &[SemistandardTableau],
    fs: &[&[Vec<Poly<S>>]],
    algo: PtsAlgorithm,
) -> Poly<S> {
    assert_eq!(taus.len(), sigmas.len());
    assert_eq!(taus.len(), fs.len());
    let mut prod = Poly::one();
    for ((tau, sigma), f) in taus.iter().zip(sigmas).zip(fs) {
        let m = f.len() as u8;
        let p = p_in_x(tau, sigma, m, algo);
        prod = prod.mul(&substitute(&p, f));
    }
    prod
}

/// Substitutes matrix entries for the symbolic variables of `p`.
pub fn substitute<S: Scalar>(p: &Poly<Rational>, x: &[Vec<Poly<S>>]) -> Poly<S> {
    let m = x.len() as u32;
    let mut power_cache: HashMap<(u32, u32), Poly<S>> = HashMap::new();
    let mut out = Poly::zero();
    for (mono, coef) in p.terms() {
        let mut prod = Poly::constant(S::from_rational(coef));
        let mut i = 0;
        while i < mono.len() {
            let label = mono[i];
            let mut e = 0u32;
            while i < mono.len() && mono[i] == label {
                e += 1;
                i += 1;
            }
            let entry = power_cache
                .entry((label, e))
                .or_insert_with(|| {
                    let base = &x[(label / m) as usize][(label % m) as usize];
                    base.pow(e)
                })
                .clone();
            prod = prod.mul(&entry);
        }
        out.add_assign(&prod);
    }
    out
}

/// Distinct rearrangements of every row of `t`: the fillings `t' ~ t`.
fn row_rearrangements(rows: &[Vec<u8>]) -> Vec<Vec<Vec<u8>>> {
    let mut out: Vec<Vec<Vec<u8>>> = vec![vec![]];
    for row in rows {
        let perms: Vec<Vec<u8>> = row
            .iter()
            .copied()
            .permutations(row.len())
            .unique()
            .collect();
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for prefix in &out {
            for p in &perms {
                let mut v = prefix.clone();
                v.push(p.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Column-stabilizer elements as per-column row permutations, with signs.
/// `perms[i]` maps the cell in row `j` of column `i` to row `perms[i][j]`.
fn column_stabilizer(shape: &Partition) -> Vec<(Vec<Vec<usize>>, bool)> {
    let heights = shape.dual();
    let mut out: Vec<(Vec<Vec<usize>>, bool)> = vec![(vec![], true)];
    for &h in &heights {
        let col_perms: Vec<(Vec<usize>, bool)> = (0..h as usize)
            .permutations(h as usize)
            .map(|p| {
                let sign = permutation_sign(&p);
                (p, sign)
            })
            .collect();
        let mut next = Vec::with_capacity(out.len() * col_perms.len());
        for (prefix, s) in &out {
            for (p, ps) in &col_perms {
                let mut v = prefix.clone();
                v.push(p.clone());
                next.push((v, *s == *ps));
            }
        }
        out = next;
    }
    out
}

fn permutation_sign(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut even = true;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            even = !even;
        }
    }
    even
}

/// The defining double sum over `tau' ~ tau`, `sigma' ~ sigma` and pairs of
/// column-stabilizer elements.
fn definitional(
    tau: &SemistandardTableau,
    sigma: &SemistandardTableau,
    m: u8,
) -> Poly<Rational> {
    let shape = tau.shape();
    let heights = shape.dual();
    let taus = row_rearrangements(tau.rows());
    let sigmas = row_rearrangements(sigma.rows());
    let stab = column_stabilizer(&shape);
    let mut out = Poly::zero();
    for t in &taus {
        for s in &sigmas {
            for (c, csign) in &stab {
                for (cp, cpsign) in &stab {
                    let mut mono: Vec<u32> = Vec::new();
                    for (i, &h) in heights.iter().enumerate() {
                        for j in 0..h as usize {
                            let tj = c[i][j];
                            let sj = cp[i][j];
                            mono.push(xvar(m, t[tj][i], s[sj][i]));
                        }
                    }
                    mono.sort_unstable();
                    let coef = if csign == cpsign {
                        <Rational as Scalar>::one()
                    } else {
                        Scalar::neg(&<Rational as Scalar>::one())
                    };
                    out.add_term(mono, coef);
                }
            }
        }
    }
    out
}

/// Count-function enumeration: group the columns of `tau'` and `sigma'` by
/// their content profiles and sum determinant powers over all admissible
/// profile multiplicities.
fn count(tau: &SemistandardTableau, sigma: &SemistandardTableau, m: u8) -> Poly<Rational> {
    let shape = tau.shape();
    let h = shape.height();
    if h == 0 {
        return Poly::one();
    }
    let x = symbolic_matrix(m);
    // Remaining row-symbol capacities, 1-based [row][symbol].
    let mut r_rem = vec![vec![0i64; m as usize + 1]; h + 1];
    let mut u_rem = vec![vec![0i64; m as usize + 1]; h + 1];
    for j in 1..=h {
        for s in 1..=m {
            r_rem[j][s as usize] = tau.row_symbol_count(s, j) as i64;
            u_rem[j][s as usize] = sigma.row_symbol_count(s, j) as i64;
        }
    }

    struct Ctx {
        x: Vec<Vec<Poly<Rational>>>,
        shape: Partition,
        m: u8,
        total: Poly<Rational>,
        det_cache: HashMap<(Vec<u8>, Vec<u8>), Poly<Rational>>,
    }

    impl Ctx {
        fn det_of(&mut self, v: &[u8], w: &[u8]) -> Poly<Rational> {
            if let Some(d) = self.det_cache.get(&(v.to_vec(), w.to_vec())) {
                return d.clone();
            }
            let t = v.len();
            let mat: Vec<Vec<Poly<Rational>>> = (0..t)
                .map(|j| {
                    (0..t)
                        .map(|jp| self.x[v[j] as usize - 1][w[jp] as usize - 1].clone())
                        .collect()
                })
                .collect();
            let d = det(&mat);
            self.det_cache.insert((v.to_vec(), w.to_vec()), d.clone());
            d
        }

        /// Distributes the columns of height `t`, then recurses to `t - 1`.
        fn heights(
            &mut self,
            t: usize,
            r_rem: &mut Vec<Vec<i64>>,
            u_rem: &mut Vec<Vec<i64>>,
            acc: &Poly<Rational>,
        ) {
            if t == 0 {
                debug_assert!(r_rem.iter().flatten().all(|&c| c == 0));
                self.total.add_assign(acc);
                return;
            }
            let c_t = self.shape.columns_of_height(t) as i64;
            if c_t == 0 {
                self.heights(t - 1, r_rem, u_rem, acc);
                return;
            }
            // Profiles with repeated symbols have vanishing determinants.
            let tuples: Vec<Vec<u8>> = (1..=self.m).permutations(t).collect();
            let profiles: Vec<(Vec<u8>, Vec<u8>)> = tuples
                .iter()
                .filter(|v| (0..t).all(|j| r_rem[j + 1][v[j] as usize] > 0))
                .flat_map(|v| {
                    tuples
                        .iter()
                        .filter(|w| (0..t).all(|j| u_rem[j + 1][w[j] as usize] > 0))
                        .map(move |w| (v.clone(), w.clone()))
                })
                .collect();
            let scaled = acc.scale_int(&factorial(c_t as u64));
            self.profiles(t, &profiles, 0, c_t, r_rem, u_rem, &scaled);
        }

        fn profiles(
            &mut self,
            t: usize,
            profiles: &[(Vec<u8>, Vec<u8>)],
            idx: usize,
            remaining: i64,
            r_rem: &mut Vec<Vec<i64>>,
            u_rem: &mut Vec<Vec<i64>>,
            acc: &Poly<Rational>,
        ) {
            if remaining == 0 {
                self.heights(t - 1, r_rem, u_rem, acc);
                return;
            }
            if idx == profiles.len() {
                return;
            }
            let (v, w) = profiles[idx].clone();
            let max_k = (0..t)
                .map(|j| r_rem[j + 1][v[j] as usize].min(u_rem[j + 1][w[j] as usize]))
                .min()
                .unwrap()
                .min(remaining);
            // k = 0 branch first
            self.profiles(t, profiles, idx + 1, remaining, r_rem, u_rem, acc);
            if max_k <= 0 {
                return;
            }
            let d = self.det_of(&v, &w);
            let mut powered = acc.clone();
            for k in 1..=max_k {
                for j in 0..t {
                    r_rem[j + 1][v[j] as usize] -= 1;
                    u_rem[j + 1][w[j] as usize] -= 1;
                }
                powered = powered.mul(&d).div_int(&Int::from(k));
                self.profiles(t, profiles, idx + 1, remaining - k, r_rem, u_rem, &powered);
            }
            for j in 0..t {
                r_rem[j + 1][v[j] as usize] += max_k;
                u_rem[j + 1][w[j] as usize] += max_k;
            }
        }
    }

    let mut ctx = Ctx {
        x,
        shape: shape.clone(),
        m,
        total: Poly::zero(),
        det_cache: HashMap::new(),
    };
    ctx.heights(h, &mut r_rem, &mut u_rem, &Poly::one());

    // |C_lambda| = product of column-height factorials.
    let mut stab = Int::from(1);
    for &ch in &shape.dual() {
        stab *= factorial(ch as u64);
    }
    ctx.total.scale_int(&stab)
}

/// The polynomial `P_lambda(X) = prod_k (k! det_k(X))^{lambda_k - lambda_{k+1}}`.
fn p_lambda(shape: &Partition, m: u8) -> Poly<Rational> {
    let x = symbolic_matrix(m);
    let mut out = Poly::one();
    for k in 1..=m as usize {
        let e = shape.part(k).saturating_sub(shape.part(k + 1));
        if e == 0 {
            continue;
        }
        let minor: Vec<Vec<Poly<Rational>>> = (0..k)
            .map(|i| (0..k).map(|j| x[i][j].clone()).collect())
            .collect();
        let base = det(&minor).scale_int(&factorial(k as u64));
        out = out.mul(&base.pow(e));
    }
    out
}

/// Lowering operator `d_{s -> j} = sum_i x_{s,i} d/dx_{j,i}`.
fn apply_row_op(p: &Poly<Rational>, m: u8, s: u8, j: u8) -> Poly<Rational> {
    let mut out = Poly::zero();
    for i in 1..=m {
        let d = p.derivative(xvar(m, j, i));
        out.add_assign(&d.mul(&Poly::linear(xvar(m, s, i), <Rational as Scalar>::one())));
    }
    out
}

/// Lowering operator `d*_{j -> s} = sum_i x_{i,s} d/dx_{i,j}`.
fn apply_col_op(p: &Poly<Rational>, m: u8, j: u8, s: u8) -> Poly<Rational> {
    let mut out = Poly::zero();
    for i in 1..=m {
        let d = p.derivative(xvar(m, i, j));
        out.add_assign(&d.mul(&Poly::linear(xvar(m, i, s), <Rational as Scalar>::one())));
    }
    out
}

/// Differential-operator route: apply the lowering operators prescribed by
/// the row statistics of `tau` and `sigma` to `P_lambda(X)`. Factors are
/// applied right-to-left in the double product over `j < s`.
fn diffop(tau: &SemistandardTableau, sigma: &SemistandardTableau, m: u8) -> Poly<Rational> {
    let shape = tau.shape();
    let mut p = p_lambda(&shape, m);
    for j in (1..m).rev() {
        for s in ((j + 1)..=m).rev() {
            let r = tau.row_symbol_count(s, j as usize) as u64;
            let u = sigma.row_symbol_count(s, j as usize) as u64;
            for _ in 0..u {
                p = apply_col_op(&p, m, j, s);
            }
            for _ in 0..r {
                p = apply_row_op(&p, m, s, j);
            }
            if r > 0 || u > 0 {
                p = p.div_int(&(factorial(r) * factorial(u)));
            }
        }
    }
    p
}
