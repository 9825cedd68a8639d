//! Semistandard Young tableaux.

use super::partition::Partition;
use std::fmt;

/// A semistandard filling of a Young shape: rows weakly increasing, columns
/// strictly increasing, entries in `1..=m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemistandardTableau {
    shape: Vec<u32>,
    /// Row-major entries: `rows[j][i]` is the cell in row `j+1`, column `i+1`.
    rows: Vec<Vec<u8>>,
}

impl SemistandardTableau {
    pub fn new(shape: &Partition, rows: Vec<Vec<u8>>) -> Self {
        assert_eq!(rows.len(), shape.height());
        for (j, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), shape.part(j + 1) as usize);
            assert!(row.windows(2).all(|w| w[0] <= w[1]), "rows must be nondecreasing");
        }
        for i in 0..shape.part(1) as usize {
            for j in 1..rows.len() {
                if rows[j].len() > i {
                    assert!(rows[j - 1][i] < rows[j][i], "columns must be strictly increasing");
                }
            }
        }
        SemistandardTableau { shape: shape.parts().to_vec(), rows }
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.shape.clone())
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Number of cells holding symbol `s` (1-based).
    pub fn symbol_count(&self, s: u8) -> usize {
        self.rows
            .iter()
            .map(|r| r.iter().filter(|&&x| x == s).count())
            .sum()
    }

    /// Number of cells holding symbol `s` in row `j` (both 1-based); the
    /// statistic `r(s,j)` resp. `u(s,j)`.
    pub fn row_symbol_count(&self, s: u8, j: usize) -> usize {
        self.rows
            .get(j - 1)
            .map_or(0, |r| r.iter().filter(|&&x| x == s).count())
    }

    /// Column `i` (1-based), top to bottom.
    pub fn column(&self, i: usize) -> Vec<u8> {
        self.rows
            .iter()
            .filter_map(|r| r.get(i - 1).copied())
            .collect()
    }
}

impl fmt::Debug for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<String>())
            .collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

/// All semistandard tableaux of the given shape with entries in `1..=m`,
/// ordered lexicographically by their row-reading words.
pub fn semistandard_tableaux(shape: &Partition, m: u8) -> Vec<SemistandardTableau> {
    if shape.height() == 0 {
        return vec![SemistandardTableau { shape: vec![], rows: vec![] }];
    }
    if (shape.height() as u8) > m {
        return vec![];
    }
    let heights = shape.dual();
    let nrows = shape.height();
    let mut rows: Vec<Vec<u8>> = (0..nrows)
        .map(|j| vec![0u8; shape.part(j + 1) as usize])
        .collect();
    let mut out = Vec::new();
    // Fill cells in row-reading order, checking constraints incrementally.
    let cells: Vec<(usize, usize)> = (0..nrows)
        .flat_map(|j| (0..shape.part(j + 1) as usize).map(move |i| (j, i)))
        .collect();
    fn rec(
        cells: &[(usize, usize)],
        pos: usize,
        m: u8,
        heights: &[u32],
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<SemistandardTableau>,
        shape: &Partition,
    ) {
        if pos == cells.len() {
            out.push(SemistandardTableau {
                shape: shape.parts().to_vec(),
                rows: rows.clone(),
            });
            return;
        }
        let (j, i) = cells[pos];
        let min_row = if i > 0 { rows[j][i - 1] } else { 1 };
        let min_col = if j > 0 { rows[j - 1][i] + 1 } else { 1 };
        let lo = min_row.max(min_col);
        // A column of height h needs h distinct increasing entries; cap so
        // the cells below can still be filled.
        let below = heights[i] as usize - (j + 1);
        let hi = m.saturating_sub(below as u8);
        for v in lo..=hi {
            rows[j][i] = v;
            rec(cells, pos + 1, m, heights, rows, out, shape);
        }
    }
    rec(&cells, 0, m, &heights, &mut rows, &mut out, shape);
    out
}

#[cfg(test)]
mod tests {
    use super::super::partition::partitions;
    use super::*;
    use crate::binomial;
    use crate::Int;

    #[test]
    fn single_row_single_symbol() {
        let shape = Partition::new(vec![5]);
        assert_eq!(semistandard_tableaux(&shape, 1).len(), 1);
    }

    #[test]
    fn hook_with_two_symbols() {
        let shape = Partition::new(vec![2, 1]);
        let ts = semistandard_tableaux(&shape, 2);
        // 11/2 and 12/2
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), &[vec![1, 1], vec![2]]);
        assert_eq!(ts[1].rows(), &[vec![1, 2], vec![2]]);
    }

    #[test]
    fn empty_when_too_tall() {
        let shape = Partition::new(vec![1, 1, 1]);
        assert!(semistandard_tableaux(&shape, 2).is_empty());
        assert_eq!(semistandard_tableaux(&shape, 3).len(), 1);
    }

    #[test]
    fn rsk_dimension_identity() {
        // sum over partitions of n of |T_{lambda,m}|^2 = C(m^2 + n - 1, n)
        for m in 1..=4u8 {
            for n in 0..=8u32 {
                let lhs: Int = partitions(n, m as usize)
                    .iter()
                    .map(|shape| {
                        let c = semistandard_tableaux(shape, m).len() as u64;
                        Int::from(c) * Int::from(c)
                    })
                    .sum();
                let rhs = binomial((m as u64) * (m as u64) + n as u64 - 1, n as u64);
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn row_symbol_counts() {
        let shape = Partition::new(vec![3, 1]);
        let t = SemistandardTableau::new(&shape, vec![vec![1, 1, 2], vec![2]]);
        assert_eq!(t.row_symbol_count(1, 1), 2);
        assert_eq!(t.row_symbol_count(2, 1), 1);
        assert_eq!(t.row_symbol_count(2, 2), 1);
        assert_eq!(t.symbol_count(2), 2);
        assert_eq!(t.column(1), vec![1, 2]);
    }
}
