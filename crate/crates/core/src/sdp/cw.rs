//! Generators for the triple and quadruple semidefinite programming bounds
//! on binary constant weight codes.

use super::program::{
    poly_to_linform_exact, Block, Coef, Family, LinForm, SdpProgram, VariableInfo,
};
use crate::code::{Metric, Word};
use crate::error::{Error, Result};
use crate::symmetry::classes::trivial_classes;
use crate::symmetry::orbit::{canonical_orbit, OrbitGroup, OrbitKey};
use crate::symmetry::partition::{partitions, Partition};
use crate::symmetry::poly::Poly;
use crate::symmetry::pts::{default_algorithm, p_in_x, product_p, substitute};
use crate::symmetry::repset::{f_table, rep_set_exact, RepSetKind};
use crate::symmetry::tableau::{semistandard_tableaux, SemistandardTableau};
use crate::{binomial, Int, Rational};
use itertools::Itertools;
use rayon::prelude::*;
use std::collections::HashMap;

/// Which constant-weight level to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CwLevel {
    A3,
    A4,
    B4,
}

impl CwLevel {
    fn family(self) -> Family {
        match self {
            CwLevel::A3 => Family::CwA3,
            CwLevel::A4 => Family::CwA4,
            CwLevel::B4 => Family::CwB4,
        }
    }

    fn subset_bound(self) -> usize {
        match self {
            CwLevel::A3 => 3,
            CwLevel::A4 | CwLevel::B4 => 4,
        }
    }
}

/// Enumerates orbits of j-word constant weight codes as sorted column-type
/// multisets with per-word weight constraints.
fn enumerate_vars(n: usize, d: u32, w: usize, max_size: usize) -> Vec<VariableInfo> {
    let mut keys: Vec<OrbitKey> = Vec::new();
    for j in 1..=max_size {
        let types: Vec<u16> = (0..(1u16 << j)).rev().collect();
        let mut counts = vec![0usize; types.len()];
        let mut weights = vec![w; j];
        let mut found: Vec<OrbitKey> = Vec::new();
        dfs_types(
            &types, 0, n, &mut counts, &mut weights, j, n, d, &mut found,
        );
        keys.extend(found);
    }
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .map(|key| VariableInfo {
            orbit_size: key.orbit_size(),
            min_distance: key.min_distance(Metric::Hamming),
            key,
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn dfs_types(
    types: &[u16],
    idx: usize,
    cols_left: usize,
    counts: &mut Vec<usize>,
    weights: &mut Vec<usize>,
    j: usize,
    n: usize,
    d: u32,
    out: &mut Vec<OrbitKey>,
) {
    if weights.iter().any(|&r| r > cols_left) {
        return;
    }
    if idx == types.len() {
        if cols_left == 0 && weights.iter().all(|&r| r == 0) {
            // materialize the words
            let mut rows = vec![Vec::with_capacity(n); j];
            for (t, &c) in counts.iter().enumerate() {
                for _ in 0..c {
                    for (r, row) in rows.iter_mut().enumerate() {
                        row.push(((types[t] >> (j - 1 - r)) & 1) as u16);
                    }
                }
            }
            let words: Vec<Word> =
                rows.into_iter().map(|s| Word::new(2, s).unwrap()).collect();
            // all words distinct and at pairwise distance >= d
            let distinct = words.iter().collect::<std::collections::BTreeSet<_>>().len();
            if distinct != j {
                return;
            }
            let code = crate::code::Code::from_set(2, n, words.clone()).unwrap();
            if code.min_distance(Metric::Hamming).map_or(true, |m| m >= d) {
                out.push(canonical_orbit(&words, OrbitGroup::Trivial));
            }
        }
        return;
    }
    let t = types[idx];
    // if some word still needs ones but no remaining type provides them,
    // prune (types are processed in decreasing order, zeros last)
    let max_count = cols_left;
    for c in 0..=max_count {
        if c > 0 {
            let mut ok = true;
            for (r, wr) in weights.iter().enumerate() {
                if (t >> (j - 1 - r)) & 1 == 1 && *wr < c {
                    ok = false;
                    break;
                }
            }
            if !ok {
                break;
            }
        }
        counts[idx] = c;
        for (r, wr) in weights.iter_mut().enumerate() {
            *wr -= c * (((t >> (j - 1 - r)) & 1) as usize);
        }
        dfs_types(types, idx + 1, cols_left - c, counts, weights, j, n, d, out);
        for (r, wr) in weights.iter_mut().enumerate() {
            *wr += c * (((t >> (j - 1 - r)) & 1) as usize);
        }
    }
    counts[idx] = 0;
}

/// A monomial-to-variable map for the constant-weight programs.
struct CwSubst<'a> {
    program: &'a SdpProgram,
    d: u32,
    w: usize,
    cache: HashMap<Vec<u32>, Option<usize>>,
}

impl<'a> CwSubst<'a> {
    fn new(program: &'a SdpProgram, d: u32, w: usize) -> Self {
        CwSubst { program, d, w, cache: HashMap::new() }
    }

    fn lookup(&mut self, words: Vec<Word>, mono: &[u32]) -> Option<usize> {
        if let Some(v) = self.cache.get(mono) {
            return *v;
        }
        let var = (|| {
            if words.iter().any(|v| v.weight() != self.w) {
                return None;
            }
            let code = crate::code::Code::from_set(2, self.program.n, words.clone()).ok()?;
            if code.min_distance(Metric::Hamming).is_some_and(|m| m < self.d) {
                return None;
            }
            self.program
                .var_of(&canonical_orbit(&words, OrbitGroup::Trivial))
        })();
        self.cache.insert(mono.to_vec(), var);
        var
    }
}

/// Builds the program for `A_3(n,d,w)`, `A_4(n,d,w)` or `B_4(n,d,w)`.
pub fn gen_cw(n: usize, d: u32, w: usize, level: CwLevel) -> Result<SdpProgram> {
    if n == 0 || w > n {
        return Err(Error::Domain(format!("constant weight needs 0 < w <= n; got n={n}, w={w}")));
    }
    // Distances between equal-weight words are even.
    let d = if d % 2 == 1 { d + 1 } else { d };
    let (w, complemented) = if 2 * w > n { (n - w, true) } else { (w, false) };
    if w == 0 {
        return Err(Error::Domain("weight 0 leaves a single-word universe".into()));
    }

    let vars = enumerate_vars(n, d, w, level.subset_bound());
    let mut program =
        SdpProgram::new(level.family(), 2, n, d, Some(w), complemented, vars);
    let singleton = program.singleton_var();
    program.objective[singleton] = Rational::from(binomial(n as u64, w as u64));

    let mut blocks: Vec<Block> = Vec::new();

    // |D| in {1, 2} blocks at pair parameter t.
    let mut ts: Vec<usize> = vec![0];
    if level != CwLevel::A3 {
        ts.extend((d as usize / 2)..=w);
    }
    for t in ts {
        if t > n - w {
            continue;
        }
        blocks.par_extend(d_blocks(&program, n, d, w, t).into_par_iter());
    }

    // The empty-set block family.
    match level {
        CwLevel::A3 | CwLevel::B4 => {
            blocks.extend(empty_blocks_xi1(&program, n, d, w, singleton));
        }
        CwLevel::A4 => {
            blocks.extend(empty_blocks_xi2(&program, n, d, w, singleton));
        }
    }

    program.blocks = blocks;
    program.prune_all_blocks();
    Ok(program)
}

/// The two fixed words of the `|D|` blocks for parameter `t`, in segment
/// order (t, w-t, t, n-w-t).
fn fixed_words(n: usize, w: usize, t: usize) -> (Word, Word) {
    let mut v1 = vec![0u16; n];
    let mut v2 = vec![0u16; n];
    for i in 0..w {
        v1[i] = 1;
    }
    for i in t..w + t {
        v2[i] = 1;
    }
    (Word::new(2, v1).unwrap(), Word::new(2, v2).unwrap())
}

/// Decodes a monomial over the four segment label spaces into the words
/// `alpha, beta` (label in segment i occupies offset 4i; class `(x, y)`
/// encodes the bits of alpha and beta).
fn decode_segments(n: usize, seg_sizes: &[usize; 4], mono: &[u32]) -> (Word, Word) {
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    let mut per_seg: [Vec<u32>; 4] = Default::default();
    for &label in mono {
        per_seg[(label / 4) as usize].push(label % 4);
    }
    for (seg, labels) in per_seg.iter().enumerate() {
        debug_assert_eq!(labels.len(), seg_sizes[seg]);
        for &l in labels {
            alpha.push((l >> 1) as u16);
            beta.push((l & 1) as u16);
        }
    }
    (Word::new(2, alpha).unwrap(), Word::new(2, beta).unwrap())
}

fn d_blocks(program: &SdpProgram, n: usize, d: u32, w: usize, t: usize) -> Vec<Block> {
    let seg_sizes = [t, w - t, t, n - w - t];
    let (v1, v2) = fixed_words(n, w, t);
    let f2_classes = trivial_classes(2);
    let repset = rep_set_exact(RepSetKind::TrivialF2, 2);
    // one F-table per segment, with label offsets 0, 4, 8, 12
    let fs: Vec<Vec<Vec<Poly<Rational>>>> = (0..4)
        .map(|i| {
            let t = f_table(&repset, &f2_classes, 4 * i as u32);
            t.into_iter().next().unwrap()
        })
        .collect();

    let mut subst = CwSubst::new(program, d, w);
    let mut out = Vec::new();
    let per_seg_partitions: Vec<Vec<Partition>> = seg_sizes
        .iter()
        .map(|&j| partitions(j as u32, 2))
        .collect();
    for lambda in per_seg_partitions.iter().multi_cartesian_product() {
        let per_seg_tabs: Vec<Vec<SemistandardTableau>> = lambda
            .iter()
            .map(|l| semistandard_tableaux(l, 2))
            .collect();
        if per_seg_tabs.iter().any(Vec::is_empty) {
            continue;
        }
        let rows: Vec<Vec<SemistandardTableau>> = per_seg_tabs
            .into_iter()
            .multi_cartesian_product()
            .filter(|tuple| {
                let two = |i: usize| tuple[i].symbol_count(2);
                let one = |i: usize| tuple[i].symbol_count(1);
                let weight = two(0) + two(1) + two(2) + two(3);
                if weight != w {
                    return false;
                }
                let d1 = one(0) + one(1) + two(2) + two(3);
                let d2 = two(0) + one(1) + one(2) + two(3);
                let ok = |x: usize| x == 0 || x as u32 >= d;
                ok(d1) && ok(d2)
            })
            .collect();
        if rows.is_empty() {
            continue;
        }
        let f_refs: Vec<&[Vec<Poly<Rational>>]> = fs.iter().map(|fi| fi.as_slice()).collect();
        let mut entries = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, col) in rows.iter().enumerate().skip(i) {
                let prod = product_p(row, col, &f_refs, default_algorithm(2));
                let form = poly_to_linform_exact(&prod, |mono| {
                    let (alpha, beta) = decode_segments(n, &seg_sizes, mono);
                    let words = vec![v1.clone(), v2.clone(), alpha, beta];
                    subst.lookup(words, mono)
                });
                if !form.is_zero() {
                    entries.push((i, j, form));
                }
            }
        }
        out.push(Block {
            label: format!(
                "t={t} lambda=({})",
                lambda.iter().map(|l| format!("{l:?}")).join(",")
            ),
            dim: rows.len(),
            entries,
        });
    }
    out
}

fn empty_blocks_xi1(
    program: &SdpProgram,
    n: usize,
    d: u32,
    w: usize,
    singleton: usize,
) -> Vec<Block> {
    let classes = trivial_classes(2);
    let repset = rep_set_exact(RepSetKind::TrivialF2, 2);
    let f = f_table(&repset, &classes, 0).into_iter().next().unwrap();
    let mut subst = CwSubst::new(program, d, w);
    let mut out = Vec::new();
    for lambda in partitions(n as u32, 2) {
        let rows: Vec<SemistandardTableau> = semistandard_tableaux(&lambda, 2)
            .into_iter()
            .filter(|t| t.symbol_count(2) == w)
            .collect();
        let is_border = lambda.height() <= 1;
        if rows.is_empty() && !is_border {
            continue;
        }
        let dim = rows.len() + usize::from(is_border);
        let mut entries = Vec::new();
        for (i, tau) in rows.iter().enumerate() {
            for (j, sigma) in rows.iter().enumerate().skip(i) {
                let p = p_in_x(tau, sigma, 2, default_algorithm(2));
                let prod = substitute(&p, &f);
                let form = poly_to_linform_exact(&prod, |mono| {
                    let alpha =
                        Word::new(2, mono.iter().map(|&l| (l >> 1) as u16).collect()).unwrap();
                    let beta =
                        Word::new(2, mono.iter().map(|&l| (l & 1) as u16).collect()).unwrap();
                    subst.lookup(vec![alpha, beta], mono)
                });
                if !form.is_zero() {
                    entries.push((i, j, form));
                }
            }
        }
        if is_border {
            let last = dim - 1;
            entries.push((
                last,
                last,
                LinForm::constant(Coef::Exact(Rational::from(Int::from(1)))),
            ));
            if !rows.is_empty() {
                let coef = Rational::from(binomial(n as u64, w as u64));
                entries.push((0, last, LinForm::single(singleton, Coef::Exact(coef))));
            }
        }
        out.push(Block {
            label: format!("empty xi=1 lambda={lambda:?}"),
            dim,
            entries,
        });
    }
    out
}

fn empty_blocks_xi2(
    program: &SdpProgram,
    n: usize,
    d: u32,
    w: usize,
    singleton: usize,
) -> Vec<Block> {
    let classes = trivial_classes(4);
    let repset = rep_set_exact(RepSetKind::IdentityQ, 4);
    let f = f_table(&repset, &classes, 0).into_iter().next().unwrap();
    let mut subst = CwSubst::new(program, d, w);
    let mut out = Vec::new();
    for lambda in partitions(n as u32, 4) {
        let rows: Vec<SemistandardTableau> = semistandard_tableaux(&lambda, 4)
            .into_iter()
            .filter(|t| {
                let c = |s: u8| t.symbol_count(s);
                let w1 = c(3) + c(4);
                let w2 = c(2) + c(4);
                let d1 = c(2) + c(3);
                w1 == w && w2 == w && (d1 == 0 || d1 as u32 >= d)
            })
            .collect();
        let is_border = lambda.height() <= 1;
        if rows.is_empty() && !is_border {
            continue;
        }
        let dim = rows.len() + usize::from(is_border);
        let mut entries = Vec::new();
        for (i, tau) in rows.iter().enumerate() {
            for (j, sigma) in rows.iter().enumerate().skip(i) {
                let p = p_in_x(tau, sigma, 4, default_algorithm(4));
                let prod = substitute(&p, &f);
                let form = poly_to_linform_exact(&prod, |mono| {
                    // class label encodes a pair of Z = F_2^2 elements
                    let decode = |l: u32| -> ((u16, u16), (u16, u16)) {
                        let zj = l / 4;
                        let zh = l % 4;
                        (
                            ((zj >> 1) as u16, (zj & 1) as u16),
                            ((zh >> 1) as u16, (zh & 1) as u16),
                        )
                    };
                    let mut words = vec![Vec::with_capacity(n); 4];
                    for &l in mono {
                        let ((a, b), (c, dd)) = decode(l);
                        words[0].push(a);
                        words[1].push(b);
                        words[2].push(c);
                        words[3].push(dd);
                    }
                    let words: Vec<Word> = words
                        .into_iter()
                        .map(|s| Word::new(2, s).unwrap())
                        .collect();
                    subst.lookup(words, mono)
                });
                if !form.is_zero() {
                    entries.push((i, j, form));
                }
            }
        }
        if is_border {
            let last = dim - 1;
            entries.push((
                last,
                last,
                LinForm::constant(Coef::Exact(Rational::from(Int::from(1)))),
            ));
            for (i, tau) in rows.iter().enumerate() {
                let t = tau.symbol_count(2);
                let coef = binomial(n as u64, w as u64)
                    * binomial(w as u64, t as u64)
                    * binomial((n - w) as u64, t as u64);
                let var = if t == 0 {
                    Some(singleton)
                } else {
                    // pair of weight-w words at distance 2t
                    let mut a = vec![0u16; n];
                    let mut b = vec![0u16; n];
                    for x in a.iter_mut().take(w) {
                        *x = 1;
                    }
                    for x in b.iter_mut().take(w + t).skip(t) {
                        *x = 1;
                    }
                    let pair = [Word::new(2, a).unwrap(), Word::new(2, b).unwrap()];
                    program.var_of(&canonical_orbit(&pair, OrbitGroup::Trivial))
                };
                if let Some(var) = var {
                    entries.push((
                        i,
                        last,
                        LinForm::single(var, Coef::Exact(Rational::from(coef))),
                    ));
                }
            }
        }
        out.push(Block {
            label: format!("empty xi=2 lambda={lambda:?}"),
            dim,
            entries,
        });
    }
    out
}
