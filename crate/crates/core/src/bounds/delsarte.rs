//! Exact Delsarte linear-programming bounds in the Hamming and Johnson
//! schemes.

use crate::error::{Error, Result};
use crate::lp::{solve, LinearProgram, LpOutcome, LpSolution};
use crate::{binomial_signed, Int, Rational};
use num::{One, Zero};

/// The Krawtchouk polynomial value
/// `K_t(x) = sum_j (-1)^j C(x,j) C(n-x,t-j) (q-1)^{t-j}`.
pub fn krawtchouk(q: u32, n: u32, t: u32, x: i64) -> Rational {
    let mut acc = Int::zero();
    for j in 0..=t as u64 {
        let mut term = binomial_signed(x, j) * binomial_signed(n as i64 - x, (t as u64) - j);
        term *= Int::from(q as i64 - 1).pow((t as u64 - j) as u32);
        if j % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    Rational::from(acc)
}

/// The Eberlein polynomial value
/// `E_i(x) = sum_j (-1)^j C(x,j) C(w-x,i-j) C(n-w-x,i-j)`.
pub fn eberlein(n: u32, w: u32, i: u32, x: i64) -> Rational {
    let mut acc = Int::zero();
    for j in 0..=i as u64 {
        let mut term = binomial_signed(x, j)
            * binomial_signed(w as i64 - x, i as u64 - j)
            * binomial_signed(n as i64 - w as i64 - x, i as u64 - j);
        if j % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    Rational::from(acc)
}

/// The Delsarte LP in the Hamming scheme, as a [`LinearProgram`] over the
/// distance distribution `a_0..a_n`.
pub fn hamming_lp(q: u32, n: u32, d: u32) -> LinearProgram {
    let nv = n as usize + 1;
    let mut fixings = vec![(0usize, Rational::one())];
    for i in 1..d.min(n + 1) {
        fixings.push((i as usize, Rational::zero()));
    }
    let rows = (0..=n)
        .map(|t| {
            let row: Vec<Rational> = (0..=n).map(|i| krawtchouk(q, n, t, i as i64)).collect();
            (row, Rational::zero())
        })
        .collect();
    LinearProgram {
        num_vars: nv,
        objective: vec![Rational::one(); nv],
        rows,
        fixings,
    }
}

/// Exact optimum `D_q(n,d)` of the Delsarte LP in the Hamming scheme.
pub fn delsarte_hamming(q: u32, n: u32, d: u32) -> Result<LpSolution> {
    if q < 2 || d < 2 || d > n {
        return Err(Error::Domain(format!("delsarte_hamming needs q >= 2, 2 <= d <= n; got q={q}, n={n}, d={d}")));
    }
    match solve(&hamming_lp(q, n, d))? {
        LpOutcome::Optimal(sol) => Ok(sol),
        other => Err(Error::Domain(format!("Hamming LP was {other:?}"))),
    }
}

/// Result of the Johnson-scheme bound: the exact optimum, its floor, and
/// whether an odd `d` was normalized to `d + 1`.
#[derive(Debug, Clone)]
pub struct JohnsonBound {
    pub optimum: Rational,
    pub floor: Int,
    pub normalized_d: u32,
    pub solution: LpSolution,
}

/// The Delsarte LP in the Johnson scheme over variables `a_0, a_2, .., a_2w`
/// (indexed by half-distance `i`).
pub fn johnson_lp(n: u32, d: u32, w: u32) -> LinearProgram {
    let nv = w as usize + 1;
    let mut fixings = vec![(0usize, Rational::one())];
    for i in 1..(d / 2).min(w + 1) {
        fixings.push((i as usize, Rational::zero()));
    }
    let rows = (0..=w)
        .map(|k| {
            let row: Vec<Rational> = (0..=w)
                .map(|i| {
                    let weight = Rational::new(
                        Int::one(),
                        crate::binomial(w as u64, i as u64)
                            * crate::binomial((n - w) as u64, i as u64),
                    );
                    weight * eberlein(n, w, i, k as i64)
                })
                .collect();
            (row, Rational::zero())
        })
        .collect();
    LinearProgram {
        num_vars: nv,
        objective: vec![Rational::one(); nv],
        rows,
        fixings,
    }
}

/// Exact optimum `D(n,d,w)` of the Delsarte LP in the Johnson scheme. Odd
/// `d` is normalized to `d + 1` (any two words of equal weight have even
/// distance) and the normalization is reported.
pub fn delsarte_johnson(n: u32, d: u32, w: u32) -> Result<JohnsonBound> {
    if 2 * w > n {
        return Err(Error::Domain(format!("delsarte_johnson needs w <= n/2; got n={n}, w={w}")));
    }
    let d_even = if d % 2 == 1 { d + 1 } else { d };
    match solve(&johnson_lp(n, d_even, w))? {
        LpOutcome::Optimal(sol) => Ok(JohnsonBound {
            optimum: sol.optimum.clone(),
            floor: sol.optimum.floor().to_integer(),
            normalized_d: d_even,
            solution: sol,
        }),
        other => Err(Error::Domain(format!("Johnson LP was {other:?}"))),
    }
}
