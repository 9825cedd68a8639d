//! Closed-form and search-based combinatorial upper bounds on `A_q(n,d)`.

use crate::code::{Code, Metric, Word};
use crate::error::{Error, Result};
use crate::{binomial, Int};
use num::integer::Integer;
use num::Zero;

/// How a [`BoundResult`] was obtained, with the parameters certifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundMethod {
    Plotkin,
    Shortening { inner: Int },
    Divisibility { m: Int, r: u32 },
}

/// An upper bound on `A_q(n,d)` together with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub value: Int,
    pub method: BoundMethod,
}

/// The q-ary Plotkin bound: if `qd > (q-1)n` then
/// `A_q(n,d) <= floor(qd / (qd - (q-1)n))`. Returns `None` when the
/// hypothesis fails.
pub fn plotkin(q: u32, n: u32, d: u32) -> Option<BoundResult> {
    let (q, n, d) = (Int::from(q), Int::from(n), Int::from(d));
    let denom = &q * &d - (&q - 1) * &n;
    if denom <= Int::zero() {
        return None;
    }
    Some(BoundResult {
        value: (q * d).div_floor(&denom),
        method: BoundMethod::Plotkin,
    })
}

/// `A_q(n,d) <= q * A_q(n-1,d)`, lifted from a bound for length `n-1`.
pub fn shorten_bound(q: u32, inner: &BoundResult) -> BoundResult {
    BoundResult {
        value: Int::from(q) * &inner.value,
        method: BoundMethod::Shortening { inner: inner.value.clone() },
    }
}

/// `h(q,n,d,M)`: the slack between the two ends of the double counting of
/// equal-symbol pairs in an `(n,d)_q`-code of size `M`. It bounds the number
/// of word pairs at distance different from `d`.
///
/// `h = C(M,2)(n-d) - n((q-r)C(m,2) + rC(m-1,2))` with `m = ceil(M/q)` and
/// `r = qm - M`.
pub fn h_value(q: u32, n: u32, d: u32, m_size: u64) -> Int {
    let m = (m_size + q as u64 - 1) / q as u64; // ceil(M/q)
    let r = Int::from(q as u64 * m - m_size);
    let qi = Int::from(q);
    let left = binomial(m_size, 2) * (Int::from(n) - Int::from(d));
    let right = Int::from(n)
        * ((&qi - &r) * binomial(m, 2) + r * binomial(m.saturating_sub(1), 2));
    left - right
}

/// Divisibility bound: when `m := d / (qd - (q-1)(n-1))` is a positive
/// integer, `n - d` does not divide `m(n-1)`, and some `r in [1, q-1]`
/// satisfies `n(n-1-d)(r-1)r < (q-r+1)(qm(q+r-2) - 2r)`, then
/// `A_q(n,d) <= q^2 m - r - 1`. The largest qualifying `r` gives the
/// strongest bound and is recorded in the certificate.
pub fn divisibility_bound(q: u32, n: u32, d: u32) -> Option<BoundResult> {
    if n < 2 || d == 0 || n < d {
        return None;
    }
    let (qi, ni, di) = (Int::from(q), Int::from(n), Int::from(d));
    let denom: Int = &qi * &di - (&qi - Int::from(1)) * (&ni - Int::from(1));
    if denom <= Int::zero() || !(di.clone() % denom.clone()).is_zero() {
        return None;
    }
    let m = &di / &denom;
    if m <= Int::zero() {
        return None;
    }
    let n_minus_d: Int = &ni - &di;
    if n_minus_d.is_zero() {
        return None;
    }
    let rem: Int = m.clone() * (ni.clone() - Int::from(1)) % &n_minus_d;
    if rem.is_zero() {
        return None;
    }
    for r in (1..q).rev() {
        let ri = Int::from(r);
        let lhs: Int = &ni * (&ni - Int::from(1) - &di) * (&ri - Int::from(1)) * &ri;
        let rhs: Int = (&qi - &ri + Int::from(1)) * (&qi * &m * (&qi + &ri - Int::from(2)) - Int::from(2) * &ri);
        if lhs < rhs {
            return Some(BoundResult {
                value: &qi * &qi * &m - &ri - Int::from(1),
                method: BoundMethod::Divisibility { m, r },
            });
        }
    }
    None
}

/// Completes a code that misses exactly one word from an extremal
/// equal-occupancy configuration: every column must contain one symbol
/// `m - 1` times and the other `q - 1` symbols `m` times each, where
/// `m = (|C|+1)/q`. The appended word takes the deficient symbol in each
/// column. Errors when the occupancy pattern does not hold or when the
/// completion would lower the minimum distance.
pub fn plotkin_complete(code: &Code) -> Result<Code> {
    let q = code.q();
    let n = code.n();
    let size = code.len();
    if (size + 1) % q as usize != 0 {
        return Err(Error::Domain(format!(
            "|C|+1 = {} is not divisible by q = {q}",
            size + 1
        )));
    }
    let m = (size + 1) / q as usize;
    let mut appended = Vec::with_capacity(n);
    for j in 0..n {
        let mut counts = vec![0usize; q as usize];
        for w in code.words() {
            counts[w.symbols()[j] as usize] += 1;
        }
        let deficient: Vec<u16> = (0..q as u16)
            .filter(|&s| counts[s as usize] == m - 1)
            .collect();
        let full = (0..q as u16).filter(|&s| counts[s as usize] == m).count();
        if deficient.len() != 1 || full != q as usize - 1 {
            return Err(Error::Domain(format!(
                "column {j} does not have the (q-1) x {m} + 1 x {} occupancy pattern",
                m - 1
            )));
        }
        appended.push(deficient[0]);
    }
    let d = code.min_distance(Metric::Hamming);
    let mut words: Vec<Word> = code.words().to_vec();
    words.push(Word::new(q, appended)?);
    let completed = Code::new(q, n, words)?;
    if let (Some(d), Some(d_new)) = (d, completed.min_distance(Metric::Hamming)) {
        if d_new < d {
            return Err(Error::Domain(format!(
                "completion lowered the minimum distance from {d} to {d_new}"
            )));
        }
    }
    Ok(completed)
}
