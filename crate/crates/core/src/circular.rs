//! Circular graphs `C_{d,q}`, their Lovász theta values, the extremal
//! constructions behind the continuity result for the Shannon capacity,
//! and the pipeline producing the 367-word independent set in the fifth
//! strong power of the 7-cycle.

use crate::code::{circ_dist, Code, Metric, Word};
use crate::error::{Error, Result};
use crate::oracle::{self, SearchBudget};
use crate::{Int, Rational};
use num::{Signed, ToPrimitive};
use std::f64::consts::PI;

/// Closed form for the Lovász theta number of the circular graph
/// `C_{d,q}` (vertices `Z_q`, edges between vertices at circular distance
/// below `d`).
pub fn theta_circular(d: u32, q: u32) -> Result<f64> {
    if d == 0 || q < 2 * d {
        return Err(Error::Domain(format!("circular graph needs q >= 2d, got d={d}, q={q}")));
    }
    let (df, qf) = (d as f64, q as f64);
    let mut sum = 0.0;
    for i in 0..d {
        let mut prod = 1.0;
        for j in 1..d {
            let floored = (q as u64 * j as u64 / d as u64) as f64;
            let cj = (floored * 2.0 * PI / qf).cos();
            prod *= ((2.0 * i as f64 * PI / df).cos() - cj) / (1.0 - cj);
        }
        sum += prod;
    }
    Ok(qf / df * sum)
}

/// The threshold sequence `q_n = (1 + r^n (r - 2)) / (r - 1)`; satisfies
/// `q_n = r q_{n-1} - 1`.
pub fn qn(r: u64, n: u32) -> Result<Int> {
    if r < 3 {
        return Err(Error::Domain("the sequence needs r >= 3".into()));
    }
    let r = Int::from(r);
    let num: Int = Int::from(1) + r.pow(n) * (&r - Int::from(2));
    Ok(num / (r - Int::from(1)))
}

/// The cyclic power construction: `{ t (1, r, .., r^{n-1}) : t in Z_{q_n} }`,
/// an independent set of size `q_n` in `C_{q_{n-1}, q_n}^{boxtimes n}`.
pub fn circular_construction(r: u64, n: u32) -> Result<Code> {
    if n == 0 {
        return Err(Error::Domain("power must be positive".into()));
    }
    let q: u64 = qn(r, n)?
        .to_u64()
        .ok_or_else(|| Error::Domain("q_n too large".into()))?;
    if q > u16::MAX as u64 {
        return Err(Error::Domain(format!("q_n = {q} exceeds the alphabet cap")));
    }
    let words = (0..q).map(|t| {
        let symbols = (0..n)
            .scan(1u64, |power, _| {
                let s = (t * *power) % q;
                *power = (*power * r) % q;
                Some(s as u16)
            })
            .collect();
        Word::new(q as u32, symbols).unwrap()
    });
    Code::from_set(q as u32, n as usize, words)
}

/// Verifies by exhaustive search that no independent set in
/// `C_{q_{n-1}, q_n}^{boxtimes n}` beats `q_n`.
pub fn upper_bound_check(r: u64, n: u32, budget: SearchBudget) -> Result<bool> {
    let q = qn(r, n)?
        .to_u64()
        .ok_or_else(|| Error::Domain("q_n too large".into()))? as u32;
    let d_low = qn(r, n - 1)?
        .to_u64()
        .ok_or_else(|| Error::Domain("q_{n-1} too large".into()))? as u32;
    if d_low == 0 || q < 2 * d_low {
        // r = 3, n = 1: C_{1,2} has no edges and alpha = 2 = q_1 trivially
        let best = oracle::max_code(q, n as usize, d_low, Metric::LeeInf, None, budget)?;
        return Ok(Int::from(best.size) == qn(r, n)?);
    }
    let best = oracle::alpha_circular(d_low, q, n as usize, budget)?;
    if !best.exact {
        return Err(Error::Budget("search did not finish".into()));
    }
    Ok(Int::from(best.size) == qn(r, n)?)
}

/// The 382-word independent set in `C_{108,382}^{boxtimes 5}`:
/// `{ t (1, 7, 7^2, 7^3, 7^4) : t in Z_382 }`.
pub fn independent_382() -> Code {
    let q = 382u64;
    let words = (0..q).map(|t| {
        let symbols = (0..5)
            .scan(1u64, |power, _| {
                let s = (t * *power) % q;
                *power = (*power * 7) % q;
                Some(s as u16)
            })
            .collect();
        Word::new(q as u32, symbols).unwrap()
    });
    Code::from_set(q as u32, 5, words).unwrap()
}

/// The verbatim 367-word independent set in `C_7^{boxtimes 5}`.
pub fn c7_367() -> Code {
    let data = include_str!("data/c7_367.txt");
    let words: Vec<Word> = data
        .lines()
        .map(|line| Word::from_digits(7, line.trim()).unwrap())
        .collect();
    assert_eq!(words.len(), 367, "embedded word list corrupted");
    Code::new(7, 5, words).unwrap()
}

/// Stage sizes of the [`c7_pipeline`] run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    /// Distinct words after the shift and floor-divide steps.
    pub projected: usize,
    /// Words left after removing every word with a conflict.
    pub after_removal: usize,
    pub residual_vertices: usize,
    pub residual_edges: usize,
    pub extension: usize,
    pub total: usize,
}

/// The five-step construction: shift the 382-word set, floor-divide each
/// letter into `Z_7`, drop every word that conflicts with another, and
/// extend the remainder by a maximum independent set of the residual
/// graph.
pub fn c7_pipeline(shift: &Word, divisor: &Rational) -> Result<(Code, PipelineReport)> {
    if !divisor.is_positive() {
        return Err(Error::Domain("divisor must be positive".into()));
    }
    let base = independent_382();
    if shift.q() != base.q() || shift.len() != base.n() {
        return Err(Error::Dimension("shift must be a word over Z_382 of length 5".into()));
    }
    let mut projected = std::collections::BTreeSet::new();
    for w in base.words() {
        let symbols: Vec<u16> = w
            .symbols()
            .iter()
            .zip(shift.symbols())
            .map(|(&s, &t)| {
                let shifted = (s as u64 + t as u64) % 382;
                // floor(shifted / divisor), exactly
                let scaled = Rational::from(Int::from(shifted)) / divisor;
                let v = scaled.floor().to_integer().to_u64().unwrap();
                v.min(6) as u16
            })
            .collect();
        projected.insert(Word::new(7, symbols)?);
    }
    let projected_code = Code::from_set(7, 5, projected.iter().cloned())?;
    let retained: Vec<Word> = projected
        .iter()
        .filter(|u| {
            projected
                .iter()
                .all(|v| v == *u || u.distance(Metric::LeeInf, v).unwrap() >= 2)
        })
        .cloned()
        .collect();
    let kept = Code::from_set(7, 5, retained)?;
    let (vertices, edges) = oracle::residual_graph(&kept, Metric::LeeInf, 2)?;
    let extended = oracle::max_independent_extension(
        &kept,
        Metric::LeeInf,
        2,
        SearchBudget::default(),
    )?;
    let report = PipelineReport {
        projected: projected_code.len(),
        after_removal: kept.len(),
        residual_vertices: vertices,
        residual_edges: edges,
        extension: extended.len() - kept.len(),
        total: extended.len(),
    };
    Ok((extended, report))
}

/// The shift used in the published pipeline run.
pub fn paper_shift() -> Word {
    Word::new(382, vec![40, 123, 40, 123, 40]).unwrap()
}

/// The divisor used in the published pipeline run: `109/2 = 54.5`.
pub fn paper_divisor() -> Rational {
    Rational::new(Int::from(109), Int::from(2))
}

/// Circular distance helper for reports.
pub fn circular_distance(q: u32, x: u32, y: u32) -> u32 {
    circ_dist(q, x, y)
}
