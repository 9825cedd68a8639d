//! Linear algebra over the two-element field, on codes with `q = 2`.

use crate::code::{Code, Word};
use crate::error::{Error, Result};

fn require_binary(c: &Code) -> Result<()> {
    if c.q() != 2 {
        return Err(Error::Domain(format!("q = {} code in F2 routine", c.q())));
    }
    Ok(())
}

fn to_rows(c: &Code) -> Vec<Vec<u16>> {
    c.words().iter().map(|w| w.symbols().to_vec()).collect()
}

fn add(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

/// Row echelon basis of the span of `rows`.
fn echelon(mut rows: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    let n = rows.first().map_or(0, Vec::len);
    let mut basis: Vec<Vec<u16>> = Vec::new();
    for col in 0..n {
        if let Some(pos) = rows.iter().position(|r| r[col] == 1) {
            let pivot = rows.swap_remove(pos);
            for r in rows.iter_mut() {
                if r[col] == 1 {
                    *r = add(r, &pivot);
                }
            }
            basis.push(pivot);
        }
    }
    basis
}

/// Dimension of the span of `c` over F2.
pub fn rank(c: &Code) -> Result<usize> {
    require_binary(c)?;
    Ok(echelon(to_rows(c)).len())
}

/// Maximum rank for which we will materialize a span (2^20 words).
const MAX_SPAN_RANK: usize = 20;

/// The linear span of `c` as a code. `|span| = 2^rank`.
pub fn span(c: &Code) -> Result<Code> {
    require_binary(c)?;
    let basis = echelon(to_rows(c));
    if basis.len() > MAX_SPAN_RANK {
        return Err(Error::Domain(format!(
            "span of rank {} too large to materialize",
            basis.len()
        )));
    }
    let n = c.n();
    let mut words = vec![vec![0u16; n]];
    for b in &basis {
        let mut next = Vec::with_capacity(words.len() * 2);
        for w in &words {
            next.push(w.clone());
            next.push(add(w, b));
        }
        words = next;
    }
    Code::new(2, n, words.into_iter().map(|s| Word::new(2, s).unwrap()).collect())
}

/// The dual code `{ v : <v, u> = 0 for all u in C }`; its dimension is
/// `n - rank(C)`.
pub fn dual(c: &Code) -> Result<Code> {
    require_binary(c)?;
    let basis = echelon(to_rows(c));
    let n = c.n();
    let k = basis.len();
    if n - k > MAX_SPAN_RANK {
        return Err(Error::Domain(format!(
            "dual of dimension {} too large to materialize",
            n - k
        )));
    }
    // Null space of the basis matrix: reduce to RREF, read off free columns.
    let mut m = basis;
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if let Some(pos) = (row..m.len()).find(|&r| m[r][col] == 1) {
            m.swap(row, pos);
            let pivot = m[row].clone();
            for (r, mr) in m.iter_mut().enumerate() {
                if r != row && mr[col] == 1 {
                    *mr = add(mr, &pivot);
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut null_basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![0u16; n];
        v[fc] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = m[r][fc];
        }
        null_basis.push(Word::new(2, v).unwrap());
    }
    span(&Code::from_set(2, n, null_basis)?)
}
