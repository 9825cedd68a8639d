//! Test-support utilities: the dense counterpart of the Hamming pair
//! reduction. The full invariant matrix over ordered pairs of words is
//! materialized and its PSD status compared against the generated blocks.

use super::evaluate::is_psd;
use super::program::SdpProgram;
use crate::code::Word;
use crate::symmetry::orbit::{canonical_orbit, OrbitGroup};

/// All words of `[q]^n` in counting order.
pub fn all_words(q: u32, n: usize) -> Vec<Word> {
    let total = (q as usize).pow(n as u32);
    let mut ws = Vec::with_capacity(total);
    let mut cur = vec![0u16; n];
    loop {
        ws.push(Word::new(q, cur.clone()).unwrap());
        let mut i = n;
        let mut done = true;
        while i > 0 {
            i -= 1;
            cur[i] += 1;
            if (cur[i] as u32) < q {
                done = false;
                break;
            }
            cur[i] = 0;
        }
        if done {
            return ws;
        }
    }
}

/// Precomputed variable index of every entry of the dense invariant matrix
/// over ordered pairs: entry `((a,b),(c,d))` belongs to the orbit of the
/// code `{a,b,c,d}`.
pub struct DenseIndex {
    pub dim: usize,
    pub var: Vec<Vec<usize>>,
}

pub fn dense_index(program: &SdpProgram) -> DenseIndex {
    let words = all_words(program.q, program.n);
    let total = words.len();
    let dim = total * total;
    let mut var = vec![vec![0usize; dim]; dim];
    // Cache per unordered quadruple-of-indices key to avoid recanonicalizing.
    let mut cache: std::collections::HashMap<[usize; 4], usize> =
        std::collections::HashMap::new();
    for a in 0..total {
        for b in 0..total {
            for c in 0..total {
                for d in 0..total {
                    let mut sorted = [a, b, c, d];
                    sorted.sort_unstable();
                    let v = *cache.entry(sorted).or_insert_with(|| {
                        let key = canonical_orbit(
                            &[
                                words[sorted[0]].clone(),
                                words[sorted[1]].clone(),
                                words[sorted[2]].clone(),
                                words[sorted[3]].clone(),
                            ],
                            OrbitGroup::SymbolPerms,
                        );
                        program.var_of(&key).expect("orbit missing from unfiltered program")
                    });
                    var[a * total + b][c * total + d] = v;
                }
            }
        }
    }
    DenseIndex { dim, var }
}

/// PSD verdict of the dense matrix at `z`.
pub fn dense_is_psd(index: &DenseIndex, z: &[f64]) -> bool {
    let m: Vec<Vec<f64>> = index
        .var
        .iter()
        .map(|row| row.iter().map(|&v| z[v]).collect())
        .collect();
    is_psd(&m)
}

/// PSD verdict of all generated blocks at `z`, with bordered blocks
/// stripped of their constant row (the dense matrix has no empty-set row).
pub fn blocks_are_psd(program: &SdpProgram, z: &[f64]) -> bool {
    program
        .blocks
        .iter()
        .map(|blk| {
            let mut m = blk.dense_f64(z);
            if blk
                .entries
                .iter()
                .any(|(i, j, f)| i == j && !f.constant.is_zero())
            {
                let d0 = m.len() - 1;
                m.truncate(d0);
                for row in &mut m {
                    row.truncate(d0);
                }
            }
            m
        })
        .all(|m| m.is_empty() || is_psd(&m))
}
