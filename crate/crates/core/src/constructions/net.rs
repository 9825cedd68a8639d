//! Symmetric `(mu, q)`-nets and their correspondence with
//! `(mu q, mu q - mu)_q`-codes of size `mu q^2`.

use crate::code::{Code, Metric, Word};
use crate::error::{Error, Result};

/// A symmetric net given by its point-block incidence matrix, with the
/// point and block parallel classes discovered from the matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricNet {
    pub mu: usize,
    pub q: u32,
    /// `incidence[point][block]`.
    pub incidence: Vec<Vec<u8>>,
    /// Partition of the points into classes of size `q`.
    pub point_classes: Vec<Vec<usize>>,
    /// Partition of the blocks into classes of size `q`.
    pub block_classes: Vec<Vec<usize>>,
}

impl SymmetricNet {
    pub fn order(&self) -> usize {
        self.mu * (self.q as usize).pow(2)
    }

    /// Checks the three symmetric-net axioms directly on the incidence
    /// matrix: the block classes partition the points, blocks from
    /// different classes meet in `mu` points, and points from different
    /// classes lie in `mu` common blocks while same-class points share
    /// none.
    pub fn verify_axioms(&self) -> Result<()> {
        let v = self.order();
        let qi = self.q as usize;
        let column = |b: usize| (0..v).filter(|&p| self.incidence[p][b] == 1).collect::<Vec<_>>();
        // (s1) each block class is a partition of the point set
        for class in &self.block_classes {
            if class.len() != qi {
                return Err(Error::Domain("block class of wrong size".into()));
            }
            let mut covered = vec![false; v];
            for &b in class {
                for p in column(b) {
                    if covered[p] {
                        return Err(Error::Domain("block class overlaps".into()));
                    }
                    covered[p] = true;
                }
            }
            if !covered.iter().all(|&c| c) {
                return Err(Error::Domain("block class misses points".into()));
            }
        }
        // (s2) blocks from different classes meet in exactly mu points
        let class_of_block = {
            let mut m = vec![usize::MAX; v];
            for (ci, class) in self.block_classes.iter().enumerate() {
                for &b in class {
                    m[b] = ci;
                }
            }
            m
        };
        for b1 in 0..v {
            for b2 in b1 + 1..v {
                let meet = (0..v)
                    .filter(|&p| self.incidence[p][b1] == 1 && self.incidence[p][b2] == 1)
                    .count();
                let expect = if class_of_block[b1] == class_of_block[b2] { 0 } else { self.mu };
                if meet != expect {
                    return Err(Error::Domain(format!(
                        "blocks {b1},{b2} meet in {meet}, expected {expect}"
                    )));
                }
            }
        }
        // (s3) dual condition on the points
        let class_of_point = {
            let mut m = vec![usize::MAX; v];
            for (ci, class) in self.point_classes.iter().enumerate() {
                if class.len() != qi {
                    return Err(Error::Domain("point class of wrong size".into()));
                }
                for &p in class {
                    m[p] = ci;
                }
            }
            m
        };
        for p1 in 0..v {
            for p2 in p1 + 1..v {
                let together = (0..v)
                    .filter(|&b| self.incidence[p1][b] == 1 && self.incidence[p2][b] == 1)
                    .count();
                let expect = if class_of_point[p1] == class_of_point[p2] { 0 } else { self.mu };
                if together != expect {
                    return Err(Error::Domain(format!(
                        "points {p1},{p2} share {together} blocks, expected {expect}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Builds the incidence matrix of a symmetric net from an extremal
/// `(mu q, mu q - mu)_q`-code of size `mu q^2`: group the words into
/// mutually-at-distance-n classes, write each word as a 0/1 row of length
/// `qn`, and stack the groups.
pub fn net_from_code(code: &Code) -> Result<SymmetricNet> {
    let q = code.q();
    let n = code.n();
    if n % q as usize != 0 {
        return Err(Error::Domain(format!("length {n} is not a multiple of q={q}")));
    }
    let mu = n / q as usize;
    let expect_size = mu * (q as usize).pow(2);
    if code.len() != expect_size {
        return Err(Error::Domain(format!(
            "code has {} words, a symmetric ({mu},{q})-net needs {expect_size}",
            code.len()
        )));
    }
    let d = (n - mu) as u32;
    if code.min_distance(Metric::Hamming).map_or(true, |m| m < d) {
        return Err(Error::Domain(format!("minimum distance below {d}")));
    }
    // Partition into groups of q words at pairwise distance n.
    let words = code.words();
    let mut group_of = vec![usize::MAX; words.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..words.len() {
        if group_of[i] != usize::MAX {
            continue;
        }
        let mut group = vec![i];
        for (j, w) in words.iter().enumerate().skip(i + 1) {
            if group_of[j] == usize::MAX
                && words[i].distance(Metric::Hamming, w)? == n as u32
            {
                group.push(j);
            }
        }
        if group.len() != q as usize {
            return Err(Error::Domain(
                "words do not split into full-distance groups of size q".into(),
            ));
        }
        for &j in &group {
            group_of[j] = groups.len();
        }
        groups.push(group);
    }
    // Rows in group order; columns indexed by (position, symbol).
    let v = expect_size;
    let mut incidence = vec![vec![0u8; v]; v];
    let mut point_classes = Vec::new();
    let mut row = 0;
    for group in &groups {
        let mut class = Vec::new();
        for &i in group {
            for (pos, &s) in words[i].symbols().iter().enumerate() {
                incidence[row][pos * q as usize + s as usize] = 1;
            }
            class.push(row);
            row += 1;
        }
        point_classes.push(class);
    }
    let block_classes = (0..n)
        .map(|pos| (0..q as usize).map(|s| pos * q as usize + s).collect())
        .collect();
    Ok(SymmetricNet { mu, q, incidence, point_classes, block_classes })
}

/// Reads the code back off a net built by [`net_from_code`]: each row must
/// consist of one incidence per position group.
pub fn code_from_net(net: &SymmetricNet) -> Result<Code> {
    let q = net.q as usize;
    let n = net.mu * q;
    let mut words = Vec::with_capacity(net.order());
    for row in &net.incidence {
        let mut symbols = Vec::with_capacity(n);
        for pos in 0..n {
            let hits: Vec<usize> =
                (0..q).filter(|&s| row[pos * q + s] == 1).collect();
            if hits.len() != 1 {
                return Err(Error::Domain(format!(
                    "row is not a word: {} incidences in position {pos}",
                    hits.len()
                )));
            }
            symbols.push(hits[0] as u16);
        }
        words.push(Word::new(net.q, symbols)?);
    }
    Code::new(net.q, n, words)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nine_word_code() -> Code {
        Code::from_digit_strings(
            3,
            3,
            &["000", "111", "222", "021", "102", "210", "012", "120", "201"],
        )
        .unwrap()
    }

    #[test]
    fn one_three_net_round_trip() {
        let c = nine_word_code();
        let net = net_from_code(&c).unwrap();
        assert_eq!(net.mu, 1);
        assert_eq!(net.q, 3);
        net.verify_axioms().unwrap();
        let back = code_from_net(&net).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn incidence_products_match_design_equation() {
        // M M^T = M^T M = A with A = mu q I on the diagonal blocks and
        // mu J off the diagonal
        let net = net_from_code(&nine_word_code()).unwrap();
        let v = net.order();
        let m = &net.incidence;
        let prod = |transpose_first: bool| -> Vec<Vec<usize>> {
            (0..v)
                .map(|i| {
                    (0..v)
                        .map(|j| {
                            (0..v)
                                .filter(|&k| {
                                    if transpose_first {
                                        m[k][i] == 1 && m[k][j] == 1
                                    } else {
                                        m[i][k] == 1 && m[j][k] == 1
                                    }
                                })
                                .count()
                        })
                        .collect()
                })
                .collect()
        };
        for t in [false, true] {
            let p = prod(t);
            for i in 0..v {
                for j in 0..v {
                    let same_block = i / 3 == j / 3;
                    let expect = match (i == j, same_block) {
                        (true, _) => 3,
                        (false, true) => 0,
                        (false, false) => 1,
                    };
                    assert_eq!(p[i][j], expect, "t={t} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn wrong_parameters_rejected() {
        let c = Code::from_digit_strings(3, 3, &["000", "111"]).unwrap();
        assert!(net_from_code(&c).is_err());
    }
}
