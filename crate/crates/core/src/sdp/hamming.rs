//! Generator for the quadruple semidefinite programming bound on
//! unrestricted q-ary codes with the Hamming distance.

use super::program::{poly_to_linform_exact, Block, Coef, Family, LinForm, SdpProgram, VariableInfo};
use crate::code::{Metric, Word};
use crate::error::{Error, Result};
use crate::symmetry::classes::{hamming_pair_classes, LambdaClasses};
use crate::symmetry::orbit::{canonical_orbit, OrbitGroup, OrbitKey};
use crate::symmetry::partition::{compositions, partitions, Partition};
use crate::symmetry::poly::Poly;
use crate::symmetry::pts::{default_algorithm, product_p};
use crate::symmetry::repset::{f_table, rep_set_exact, RepSetKind};
use crate::symmetry::tableau::{semistandard_tableaux, SemistandardTableau};
use crate::{binomial, Int, Rational};
use itertools::Itertools;
use rayon::prelude::*;
use std::collections::HashMap;

/// Builds the four words encoded by a multiset of pair-class labels, one
/// class per column.
fn words_of_monomial(classes: &LambdaClasses, q: u32, mono: &[u32]) -> Vec<Word> {
    let n = mono.len();
    let mut rows = vec![vec![0u16; n]; 4];
    for (col, &label) in mono.iter().enumerate() {
        let rep = &classes.classes[label as usize].label;
        for (r, row) in rows.iter_mut().enumerate() {
            row[col] = rep[r];
        }
    }
    rows.into_iter().map(|s| Word::new(q, s).unwrap()).collect()
}

/// Enumerates the variables: orbits of nonempty codes of size at most four
/// with minimum distance at least `d`, each reached from some class
/// multiset.
fn enumerate_vars(classes: &LambdaClasses, q: u32, n: usize, d: u32) -> Vec<VariableInfo> {
    let monos: Vec<Vec<u32>> = (0..classes.len() as u32)
        .combinations_with_replacement(n)
        .collect();
    let mut keys: Vec<OrbitKey> = monos
        .par_iter()
        .map(|mono| {
            let words = words_of_monomial(classes, q, mono);
            canonical_orbit(&words, OrbitGroup::SymbolPerms)
        })
        .collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|key| {
            let dist = key.min_distance(Metric::Hamming);
            dist.map_or(true, |m| m >= d).then(|| VariableInfo {
                orbit_size: key.orbit_size(),
                min_distance: dist,
                key,
            })
        })
        .collect()
}

/// The tableau tuple data for one block row/column.
#[derive(Clone)]
struct RowTuple {
    tableaux: Vec<SemistandardTableau>,
}

/// The quadruple-bound program for `A_q(n, d)` in SDPA-ready block form.
pub fn gen_hamming_quadruple(q: u32, n: usize, d: u32) -> Result<SdpProgram> {
    if q < 2 || n == 0 || d == 0 {
        return Err(Error::Domain(format!("hamming4 needs q >= 2, n, d >= 1; got q={q} n={n} d={d}")));
    }
    let classes = hamming_pair_classes(q);
    let repset = rep_set_exact(RepSetKind::SqPairs, q);
    let mults = repset.multiplicities();
    let k = mults.len();
    let f = f_table(&repset, &classes, 0);

    let vars = enumerate_vars(&classes, q, n, d);
    let mut program = SdpProgram::new(Family::Hamming4, q, n, d, None, false, vars);

    // Objective: q^n at the singleton orbit.
    let singleton = program.singleton_var();
    program.objective[singleton] = Rational::from(Int::from(q as u64).pow(n as u32));

    // Shared monomial -> variable cache (None = filtered to zero).
    let mono_cache: HashMap<Vec<u32>, Option<usize>> = {
        let monos: Vec<Vec<u32>> = (0..classes.len() as u32)
            .combinations_with_replacement(n)
            .collect();
        monos
            .into_par_iter()
            .map(|mono| {
                let words = words_of_monomial(&classes, q, &mono);
                let key = canonical_orbit(&words, OrbitGroup::SymbolPerms);
                let var = program.var_of(&key);
                (mono, var)
            })
            .collect()
    };

    // All (composition, partition tuple) block labels.
    let mut shapes: Vec<(Vec<u32>, Vec<Partition>)> = Vec::new();
    for comp in compositions(n as u32, k) {
        let per_factor: Vec<Vec<Partition>> = comp
            .iter()
            .zip(&mults)
            .map(|(&ni, &mi)| partitions(ni, mi))
            .collect();
        for lambda in per_factor.into_iter().multi_cartesian_product() {
            shapes.push((comp.clone(), lambda));
        }
    }

    let blocks: Vec<Block> = shapes
        .par_iter()
        .filter_map(|(comp, lambda)| {
            build_block(&program, &mono_cache, &f, &mults, q, n, d, comp, lambda, singleton)
        })
        .collect();
    program.blocks = blocks;
    program.prune_all_blocks();
    Ok(program)
}

#[allow(clippy::too_many_arguments)]
fn build_block(
    program: &SdpProgram,
    mono_cache: &HashMap<Vec<u32>, Option<usize>>,
    f: &[Vec<Vec<Poly<Rational>>>],
    mults: &[usize],
    q: u32,
    n: usize,
    d: u32,
    comp: &[u32],
    lambda: &[Partition],
    singleton: usize,
) -> Option<Block> {
    let k = mults.len();
    // Row index tuples, restricted by the pair parity and the distance
    // condition on the diagonal-supporting symbols.
    let per_factor: Vec<Vec<SemistandardTableau>> = lambda
        .iter()
        .zip(mults)
        .map(|(l, &m)| semistandard_tableaux(l, m as u8))
        .collect();
    if per_factor.iter().any(|t| t.is_empty()) {
        return None;
    }
    let rows: Vec<RowTuple> = per_factor
        .into_iter()
        .multi_cartesian_product()
        .filter(|tuple| {
            // parity of the skew-supported entries: symbol 2 of B_2 and
            // (for q >= 3) symbol 1 of B_3
            let mut parity = tuple[1].symbol_count(2);
            if k >= 3 {
                parity += tuple[2].symbol_count(1);
            }
            if parity % 2 != 0 {
                return false;
            }
            // Hamming distance carried by the tuple
            let t = n - tuple[0].symbol_count(1) - tuple[1].symbol_count(1);
            t == 0 || (t as u32) >= d
        })
        .map(|tableaux| RowTuple { tableaux })
        .collect();

    let is_border_block = comp[0] == n as u32 && lambda[0].height() <= 1;
    if rows.is_empty() && !is_border_block {
        return None;
    }

    let algo = default_algorithm(*mults.iter().max().unwrap() as u8);
    let dim = rows.len() + usize::from(is_border_block);
    let f_refs: Vec<&[Vec<Poly<Rational>>]> = f.iter().map(|fi| fi.as_slice()).collect();
    let mut entries: Vec<(usize, usize, LinForm)> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, col) in rows.iter().enumerate().skip(i) {
            let prod = product_p(&row.tableaux, &col.tableaux, &f_refs, algo);
            let form = poly_to_linform_exact(&prod, |mono| {
                mono_cache.get(mono).copied().flatten()
            });
            if !form.is_zero() {
                entries.push((i, j, form));
            }
        }
    }

    if is_border_block {
        // lambda = ((n), (), .., ()): append the empty-set row/column.
        let last = dim - 1;
        entries.push((last, last, LinForm::constant(Coef::Exact(Rational::from(Int::from(1))))));
        for (i, row) in rows.iter().enumerate() {
            let t = (n - row.tableaux[0].symbol_count(1)) as u32;
            let coef = binomial(n as u64, t as u64)
                * Int::from(q as u64).pow(n as u32)
                * Int::from(q as u64 - 1).pow(t);
            let var = if t == 0 {
                Some(singleton)
            } else {
                // orbit of a pair at Hamming distance t
                let mut s = vec![0u16; n];
                for x in s.iter_mut().take(t as usize) {
                    *x = 1;
                }
                let pair = [Word::zero(q, n), Word::new(q, s).unwrap()];
                program.var_of(&canonical_orbit(&pair, OrbitGroup::SymbolPerms))
            };
            if let Some(var) = var {
                entries.push((i, last, LinForm::single(var, Coef::Exact(Rational::from(coef)))));
            }
        }
    }

    let label = format!(
        "n=({}) lambda=({})",
        comp.iter().map(u32::to_string).join(","),
        lambda.iter().map(|l| format!("{l:?}")).join(",")
    );
    Some(Block { label, dim, entries })
}
