//! Words, codes, the three metrics and the groups acting on them.

use crate::error::{Error, Result};
use crate::{Int, Rational};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::fmt;

/// Largest supported alphabet size. Everything in scope has `q <= 13`.
pub const MAX_Q: u32 = 1 << 16;

/// The supported distance functions on `[q]^n` resp. `Z_q^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    Hamming,
    Lee,
    LeeInf,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Hamming => "hamming",
            Metric::Lee => "lee",
            Metric::LeeInf => "lee_inf",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "hamming" => Ok(Metric::Hamming),
            "lee" => Ok(Metric::Lee),
            "lee_inf" | "leeinf" | "lee-inf" => Ok(Metric::LeeInf),
            other => Err(Error::Parse(format!("unknown metric `{other}`"))),
        }
    }
}

/// Circular distance `min(|x-y|, q-|x-y|)` on `Z_q`.
pub fn circ_dist(q: u32, x: u32, y: u32) -> u32 {
    let d = if x >= y { x - y } else { y - x };
    d.min(q - d)
}

/// A word over the alphabet `{0, .., q-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    q: u32,
    symbols: Vec<u16>,
}

impl Word {
    pub fn new(q: u32, symbols: Vec<u16>) -> Result<Self> {
        if q < 2 || q > MAX_Q {
            return Err(Error::Domain(format!("alphabet size {q} out of range")));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s as u32 >= q) {
            return Err(Error::Domain(format!("symbol {s} not below q={q}")));
        }
        Ok(Word { q, symbols })
    }

    /// The all-zeros word of length `n`.
    pub fn zero(q: u32, n: usize) -> Self {
        Word { q, symbols: vec![0; n] }
    }

    /// Parses a word from a compact digit string such as `02114` (only
    /// available for `q <= 10`).
    pub fn from_digits(q: u32, s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad digit `{c}`")))
                    .map(|d| d as u16)
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(q, symbols)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u16] {
        &self.symbols
    }

    /// Number of nonzero symbols.
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    fn check_compatible(&self, other: &Word) -> Result<()> {
        if self.q != other.q || self.symbols.len() != other.symbols.len() {
            return Err(Error::Dimension(format!(
                "words over q={},n={} and q={},n={}",
                self.q,
                self.len(),
                other.q,
                other.len()
            )));
        }
        Ok(())
    }

    /// Distance to `other` in the given metric.
    pub fn distance(&self, metric: Metric, other: &Word) -> Result<u32> {
        self.check_compatible(other)?;
        Ok(distance_unchecked(metric, self.q, &self.symbols, &other.symbols))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, &s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn distance_unchecked(metric: Metric, q: u32, a: &[u16], b: &[u16]) -> u32 {
    match metric {
        Metric::Hamming => a.iter().zip(b).filter(|(x, y)| x != y).count() as u32,
        Metric::Lee => a
            .iter()
            .zip(b)
            .map(|(&x, &y)| circ_dist(q, x as u32, y as u32))
            .sum(),
        Metric::LeeInf => a
            .iter()
            .zip(b)
            .map(|(&x, &y)| circ_dist(q, x as u32, y as u32))
            .max()
            .unwrap_or(0),
    }
}

/// Distance computation that gives up once `cutoff` is reached; the return
/// value is exact when it is below `cutoff`.
fn distance_bounded(metric: Metric, q: u32, a: &[u16], b: &[u16], cutoff: u32) -> u32 {
    let mut acc = 0u32;
    for (&x, &y) in a.iter().zip(b) {
        match metric {
            Metric::Hamming => acc += (x != y) as u32,
            Metric::Lee => acc += circ_dist(q, x as u32, y as u32),
            Metric::LeeInf => acc = acc.max(circ_dist(q, x as u32, y as u32)),
        }
        if acc >= cutoff {
            return acc;
        }
    }
    acc
}

/// A set of words with uniform alphabet size and length.
#[derive(Clone, PartialEq, Eq)]
pub struct Code {
    q: u32,
    n: usize,
    words: Vec<Word>,
}

impl Code {
    /// Builds a code from a list of words. Duplicates are rejected, not
    /// silently removed.
    pub fn new(q: u32, n: usize, words: Vec<Word>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for w in &words {
            if w.q != q || w.len() != n {
                return Err(Error::Dimension(format!(
                    "word `{w}` does not match q={q}, n={n}"
                )));
            }
            if !seen.insert(w.clone()) {
                return Err(Error::Domain(format!("duplicate word `{w}`")));
            }
        }
        let mut words = words;
        words.sort();
        Ok(Code { q, n, words })
    }

    /// Builds a code from a set of words, deduplicating on purpose. Used by
    /// constructions such as group orbits where repeats are expected.
    pub fn from_set(q: u32, n: usize, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let set: BTreeSet<Word> = words.into_iter().collect();
        for w in &set {
            if w.q != q || w.len() != n {
                return Err(Error::Dimension(format!(
                    "word `{w}` does not match q={q}, n={n}"
                )));
            }
        }
        Ok(Code { q, n, words: set.into_iter().collect() })
    }

    pub fn from_digit_strings(q: u32, n: usize, rows: &[&str]) -> Result<Self> {
        let words = rows
            .iter()
            .map(|s| Word::from_digits(q, s))
            .collect::<Result<Vec<_>>>()?;
        Code::new(q, n, words)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Words in sorted order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Minimum pairwise distance; `None` encodes infinity (`|C| <= 1`).
    pub fn min_distance(&self, metric: Metric) -> Option<u32> {
        if self.words.len() <= 1 {
            return None;
        }
        let q = self.q;
        let best = std::sync::atomic::AtomicU32::new(u32::MAX);
        (0..self.words.len() - 1).into_par_iter().for_each(|i| {
            let wi = &self.words[i];
            let mut local = best.load(std::sync::atomic::Ordering::Relaxed);
            for wj in &self.words[i + 1..] {
                let d = distance_bounded(metric, q, &wi.symbols, &wj.symbols, local);
                if d < local {
                    local = d;
                    best.fetch_min(d, std::sync::atomic::Ordering::Relaxed);
                }
            }
        });
        Some(best.load(std::sync::atomic::Ordering::Relaxed))
    }

    /// Hamming distance distribution `a_i = |C|^{-1} #{(u,v): d(u,v)=i}`.
    pub fn distance_distribution(&self) -> Result<Vec<Rational>> {
        if self.words.is_empty() {
            return Err(Error::Domain("distance distribution of empty code".into()));
        }
        let mut counts = vec![Int::from(0); self.n + 1];
        for u in &self.words {
            for v in &self.words {
                counts[distance_unchecked(Metric::Hamming, self.q, &u.symbols, &v.symbols)
                    as usize] += 1;
            }
        }
        let size = Int::from(self.words.len());
        Ok(counts
            .into_iter()
            .map(|c| Rational::new(c, size.clone()))
            .collect())
    }

    /// Count of words at each Hamming distance from a fixed word, i.e. the
    /// weight profile when `from` is the zero word of a linear code.
    pub fn distance_profile(&self, from: &Word) -> Result<Vec<usize>> {
        let mut counts = vec![0usize; self.n + 1];
        for w in &self.words {
            counts[from.distance(Metric::Hamming, w)? as usize] += 1;
        }
        Ok(counts)
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(q={}, n={}, |C|={})", self.q, self.n, self.words.len())
    }
}

/// One of the per-column symbol actions underlying code equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolMap {
    /// An arbitrary permutation of `[q]` (Hamming equivalence).
    Permutation(Vec<u16>),
    /// An element of the dihedral group `D_q`: `x -> rot + x` or
    /// `x -> rot - x` (Lee equivalence).
    Dihedral { rotation: u16, reflect: bool },
    /// The reflection-only action fixing `0`: identity or `x -> -x`.
    Reflection { reflect: bool },
}

impl SymbolMap {
    fn apply(&self, q: u32, s: u16) -> u16 {
        match self {
            SymbolMap::Permutation(p) => p[s as usize],
            SymbolMap::Dihedral { rotation, reflect } => {
                let v = if *reflect { (q - s as u32) % q } else { s as u32 };
                ((v + *rotation as u32) % q) as u16
            }
            SymbolMap::Reflection { reflect } => {
                if *reflect {
                    ((q - s as u32) % q) as u16
                } else {
                    s
                }
            }
        }
    }

    fn check(&self, q: u32) -> Result<()> {
        if let SymbolMap::Permutation(p) = self {
            if p.len() != q as usize {
                return Err(Error::Dimension(format!(
                    "symbol permutation on {} symbols used with q={q}",
                    p.len()
                )));
            }
            let mut seen = vec![false; q as usize];
            for &s in p {
                if s as u32 >= q || seen[s as usize] {
                    return Err(Error::Domain("symbol map is not a bijection".into()));
                }
                seen[s as usize] = true;
            }
        }
        Ok(())
    }
}

/// An element of the wreath product `G^n x| S_n` acting on words: first the
/// per-column symbol maps, then the column permutation.
#[derive(Debug, Clone)]
pub struct GroupElement {
    /// `column_perm[i]` is the source column placed at position `i`.
    pub column_perm: Vec<usize>,
    pub symbol_maps: Vec<SymbolMap>,
}

impl GroupElement {
    pub fn identity(q: u32, n: usize) -> Self {
        GroupElement {
            column_perm: (0..n).collect(),
            symbol_maps: vec![SymbolMap::Permutation((0..q as u16).collect()); n],
        }
    }

    pub fn apply_word(&self, w: &Word) -> Result<Word> {
        if self.column_perm.len() != w.len() || self.symbol_maps.len() != w.len() {
            return Err(Error::Dimension("group element has wrong length".into()));
        }
        for m in &self.symbol_maps {
            m.check(w.q)?;
        }
        let mapped: Vec<u16> = w
            .symbols
            .iter()
            .zip(&self.symbol_maps)
            .map(|(&s, m)| m.apply(w.q, s))
            .collect();
        let symbols = self.column_perm.iter().map(|&i| mapped[i]).collect();
        Ok(Word { q: w.q, symbols })
    }

    pub fn apply_code(&self, c: &Code) -> Result<Code> {
        let words = c
            .words
            .iter()
            .map(|w| self.apply_word(w))
            .collect::<Result<Vec<_>>>()?;
        Code::new(c.q, c.n, words)
    }
}

/// Report produced by [`verify_code`].
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub size: usize,
    pub q: u32,
    pub n: usize,
    /// `None` means infinite (at most one word).
    pub min_distance: Option<u32>,
    pub weight_uniform: Option<bool>,
    pub pass: bool,
}

/// Checks `d_min >= d` and, when `w` is given, that every word has weight `w`.
pub fn verify_code(code: &Code, metric: Metric, d: u32, w: Option<usize>) -> VerifyReport {
    let min_distance = code.min_distance(metric);
    let dist_ok = min_distance.map_or(true, |m| m >= d);
    let weight_uniform = w.map(|w| code.words().iter().all(|v| v.weight() == w));
    VerifyReport {
        size: code.len(),
        q: code.q(),
        n: code.n(),
        min_distance,
        weight_uniform,
        pass: dist_ok && weight_uniform.unwrap_or(true),
    }
}
