//! Integer partitions and Young shapes.

use std::fmt;

/// A partition of `n`: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part at 1-based index `k`; zero beyond the height.
    pub fn part(&self, k: usize) -> u32 {
        if k == 0 || k > self.parts.len() {
            0
        } else {
            self.parts[k - 1]
        }
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// Dual (conjugate) partition; `dual()[i]` is the height of column `i+1`.
    pub fn dual(&self) -> Vec<u32> {
        let width = self.part(1) as usize;
        (1..=width)
            .map(|col| self.parts.iter().filter(|&&p| p as usize >= col).count() as u32)
            .collect()
    }

    /// Number of columns of height exactly `t` (`lambda_t - lambda_{t+1}`).
    pub fn columns_of_height(&self, t: usize) -> u32 {
        self.part(t).saturating_sub(self.part(t + 1))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` with height at most `max_height`, in a fixed
/// deterministic order (lexicographically decreasing).
pub fn partitions(n: u32, max_height: usize) -> Vec<Partition> {
    fn rec(n: u32, max_part: u32, left: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if left == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            prefix.push(p);
            rec(n - p, p, left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    rec(n, n.max(1), max_height, &mut prefix, &mut out);
    out
}

/// All compositions of `n` into exactly `k` nonnegative parts, in
/// lexicographic order.
pub fn compositions(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn rec(n: u32, k: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=n {
            prefix.push(first);
            rec(n - first, k - 1, prefix, out);
            prefix.pop();
        }
    }
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}
