//! Canonical labels and sizes for group orbits of small codes.
//!
//! A code of `j <= 4` words over `[q]^n` is determined, up to the action of
//! the column-permuting wreath product, by the multiset of its column
//! tuples taken modulo the per-column base group; quotienting additionally
//! by the `j!` orderings of the words gives a canonical key for the orbit
//! of the code as a set.

use super::classes::{dihedral_min, pattern_of};
use crate::code::{Code, Metric, Word};
use crate::{factorial, Int};
use itertools::Itertools;
use std::collections::BTreeSet;

/// The per-column base group of an orbit family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitGroup {
    /// Full symbol permutations `S_q` (Hamming equivalence).
    SymbolPerms,
    /// Dihedral group `D_q` (Lee equivalence).
    Dihedral,
    /// Trivial group: only coordinate permutations act.
    Trivial,
}

impl OrbitGroup {
    fn canonical_column(self, q: u32, col: &[u16]) -> Vec<u16> {
        match self {
            OrbitGroup::SymbolPerms => pattern_of(col),
            OrbitGroup::Dihedral => dihedral_min(q, col),
            OrbitGroup::Trivial => col.to_vec(),
        }
    }

    /// Number of distinct images of a column tuple under the base group.
    fn column_class_size(self, q: u32, col: &[u16]) -> Int {
        match self {
            OrbitGroup::SymbolPerms => {
                let distinct = col.iter().collect::<BTreeSet<_>>().len() as u64;
                let mut size = Int::from(1);
                for i in 0..distinct {
                    size *= Int::from(q as u64 - i);
                }
                size
            }
            OrbitGroup::Dihedral => {
                let mut images = BTreeSet::new();
                for rot in 0..q {
                    for reflect in [false, true] {
                        let image: Vec<u16> = col
                            .iter()
                            .map(|&s| {
                                let v = if reflect { (q - s as u32) % q } else { s as u32 };
                                ((v + rot) % q) as u16
                            })
                            .collect();
                        images.insert(image);
                    }
                }
                Int::from(images.len())
            }
            OrbitGroup::Trivial => Int::from(1),
        }
    }
}

/// Canonical label for the orbit of a code of at most a few words under
/// `G^n x| S_n` (with `G` given by the group tag), as a set of words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitKey {
    pub group: OrbitGroup,
    pub q: u32,
    pub n: usize,
    /// Number of distinct words.
    pub size: usize,
    /// Sorted canonical column tuples; each tuple has `size` entries.
    pub columns: Vec<Vec<u16>>,
}

impl OrbitKey {
    /// A representative code, read back off the canonical columns.
    pub fn representative(&self) -> Code {
        let words: Vec<Word> = (0..self.size)
            .map(|r| {
                Word::new(self.q, self.columns.iter().map(|c| c[r]).collect()).unwrap()
            })
            .collect();
        Code::from_set(self.q, self.n, words).unwrap()
    }

    /// Minimum distance of the orbit's codes; `None` is infinity.
    pub fn min_distance(&self, metric: Metric) -> Option<u32> {
        self.representative().min_distance(metric)
    }

    /// Number of codes in the orbit.
    pub fn orbit_size(&self) -> Int {
        // Count ordered word tuples first: choose which columns carry which
        // class (a multinomial) and an actual member per column.
        let mut ordered = factorial(self.n as u64);
        for (count, column) in self.columns.iter().dedup_with_count() {
            ordered /= factorial(count as u64);
            ordered *= self
                .group
                .column_class_size(self.q, column)
                .pow(count as u32);
        }
        // The orderings of the codes in the orbit split into ordered orbits
        // of equal size, one per distinct image of the column multiset under
        // reordering the words; hence |orbit| = ordered / stab.
        let mut stab = Int::from(0);
        for perm in (0..self.size).permutations(self.size) {
            let mut cols: Vec<Vec<u16>> = self
                .columns
                .iter()
                .map(|c| {
                    let permuted: Vec<u16> = perm.iter().map(|&i| c[i]).collect();
                    self.group.canonical_column(self.q, &permuted)
                })
                .collect();
            cols.sort();
            if cols == self.columns {
                stab += 1;
            }
        }
        ordered / stab
    }
}

/// Canonicalizes the orbit of the given words (duplicates collapse) under
/// the group family. Minimizes the sorted column multiset over all word
/// orderings.
pub fn canonical_orbit(words: &[Word], group: OrbitGroup) -> OrbitKey {
    assert!(!words.is_empty(), "empty code has no orbit key");
    let q = words[0].q();
    let n = words[0].len();
    let distinct: Vec<&Word> = words.iter().collect::<BTreeSet<_>>().into_iter().collect();
    let j = distinct.len();
    let mut best: Option<Vec<Vec<u16>>> = None;
    for perm in (0..j).permutations(j) {
        let mut cols: Vec<Vec<u16>> = (0..n)
            .map(|pos| {
                let col: Vec<u16> =
                    perm.iter().map(|&i| distinct[i].symbols()[pos]).collect();
                group.canonical_column(q, &col)
            })
            .collect();
        cols.sort();
        if best.as_ref().map_or(true, |b| cols < *b) {
            best = Some(cols);
        }
    }
    OrbitKey { group, q, n, size: j, columns: best.unwrap() }
}
