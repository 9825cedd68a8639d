//! Generator for the triple semidefinite programming bound on Lee codes
//! and its Lee-infinity variant (independent sets in strong powers of
//! circular graphs).

use super::program::{
    poly_to_linform_exact, poly_to_linform_float, Block, Coef, Family, LinForm, SdpProgram,
    VariableInfo,
};
use crate::code::{Metric, Word};
use crate::error::{Error, Result};
use crate::symmetry::classes::{dihedral_classes, reflection_classes, LambdaClasses};
use crate::symmetry::orbit::{canonical_orbit, OrbitGroup, OrbitKey};
use crate::symmetry::partition::{compositions, partitions, Partition};
use crate::symmetry::poly::Poly;
use crate::symmetry::pts::{default_algorithm, product_p};
use crate::symmetry::repset::{f_table, rep_set_dihedral, rep_set_exact, RepSetKind};
use crate::symmetry::tableau::{semistandard_tableaux, SemistandardTableau};
use crate::{Int, Rational};
use itertools::Itertools;
use rayon::prelude::*;
use std::collections::HashMap;

/// The pair of words `(0, alpha, beta)` encoded by a multiset of reflection
/// class labels.
fn words_of_monomial(classes: &LambdaClasses, q: u32, n: usize, mono: &[u32]) -> [Word; 3] {
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    for &label in mono {
        let rep = &classes.classes[label as usize].label;
        alpha.push(rep[0]);
        beta.push(rep[1]);
    }
    [
        Word::zero(q, n),
        Word::new(q, alpha).unwrap(),
        Word::new(q, beta).unwrap(),
    ]
}

fn enumerate_vars(
    classes: &LambdaClasses,
    q: u32,
    n: usize,
    d: u32,
    metric: Metric,
) -> Vec<VariableInfo> {
    let monos: Vec<Vec<u32>> = (0..classes.len() as u32)
        .combinations_with_replacement(n)
        .collect();
    let mut keys: Vec<OrbitKey> = monos
        .par_iter()
        .map(|mono| {
            let words = words_of_monomial(classes, q, n, mono);
            canonical_orbit(&words, OrbitGroup::Dihedral)
        })
        .collect();
    keys.sort();
    keys.dedup();
    keys.into_par_iter()
        .filter_map(|key| {
            let dist = key.min_distance(metric);
            dist.map_or(true, |m| m >= d).then(|| VariableInfo {
                orbit_size: key.orbit_size(),
                min_distance: dist,
                key,
            })
        })
        .collect()
}

/// Number of variables of the Lee-infinity triple program: orbits of
/// nonempty codes of size at most three with minimum Lee-infinity distance
/// at least `d`, without assembling the blocks.
pub fn leeinf_variable_count(q: u32, n: usize, d: u32) -> Result<usize> {
    if q < 2 || n == 0 {
        return Err(Error::Domain("needs q >= 2 and n >= 1".into()));
    }
    let classes = reflection_classes(q);
    Ok(enumerate_vars(&classes, q, n, d, Metric::LeeInf).len())
}

/// Builds the triple-bound program for `A_q^L(n,d)` (`metric = Lee`) or for
/// `alpha(C_{d,q}^{boxtimes n})` (`metric = LeeInf`).
pub fn gen_lee_triple(q: u32, n: usize, d: u32, metric: Metric) -> Result<SdpProgram> {
    if q < 2 || n == 0 || d == 0 {
        return Err(Error::Domain(format!("lee3 needs q >= 2, n, d >= 1; got q={q} n={n} d={d}")));
    }
    let family = match metric {
        Metric::Lee => Family::Lee3,
        Metric::LeeInf => Family::LeeInf3,
        Metric::Hamming => {
            return Err(Error::Domain("lee3 takes the Lee or Lee-infinity metric".into()))
        }
    };
    let refl_classes = reflection_classes(q);
    let refl_repset = rep_set_exact(RepSetKind::S2Reflection, q);
    let mults = refl_repset.multiplicities();
    let f_refl = f_table(&refl_repset, &refl_classes, 0);

    let vars = enumerate_vars(&refl_classes, q, n, d, metric);
    let mut program = SdpProgram::new(family, q, n, d, None, false, vars);
    let singleton = program.singleton_var();
    program.objective[singleton] = Rational::from(Int::from(q as u64).pow(n as u32));

    // monomial -> variable cache over reflection labels
    let mono_cache: HashMap<Vec<u32>, Option<usize>> = {
        let monos: Vec<Vec<u32>> = (0..refl_classes.len() as u32)
            .combinations_with_replacement(n)
            .collect();
        monos
            .into_par_iter()
            .map(|mono| {
                let words = words_of_monomial(&refl_classes, q, n, &mono);
                let key = canonical_orbit(&words, OrbitGroup::Dihedral);
                let var = program.var_of(&key);
                (mono, var)
            })
            .collect()
    };

    // |D| = 1 blocks over the reflection tableaux.
    let mut shapes: Vec<(Vec<u32>, Vec<Partition>)> = Vec::new();
    for comp in compositions(n as u32, 2) {
        let per: Vec<Vec<Partition>> = comp
            .iter()
            .zip(&mults)
            .map(|(&ni, &mi)| partitions(ni, mi))
            .collect();
        for lambda in per.into_iter().multi_cartesian_product() {
            shapes.push((comp.clone(), lambda));
        }
    }
    let mut blocks: Vec<Block> = shapes
        .par_iter()
        .filter_map(|(comp, lambda)| {
            let per: Vec<Vec<SemistandardTableau>> = lambda
                .iter()
                .zip(&mults)
                .map(|(l, &m)| semistandard_tableaux(l, m as u8))
                .collect();
            if per.iter().any(Vec::is_empty) {
                return None;
            }
            let rows: Vec<Vec<SemistandardTableau>> =
                per.into_iter().multi_cartesian_product().collect();
            let algo = default_algorithm(*mults.iter().max().unwrap() as u8);
            let f_refs: Vec<&[Vec<Poly<Rational>>]> =
                f_refl.iter().map(|fi| fi.as_slice()).collect();
            let mut entries = Vec::new();
            for (i, row) in rows.iter().enumerate() {
                for (j, col) in rows.iter().enumerate().skip(i) {
                    let prod = product_p(row, col, &f_refs, algo);
                    let form = poly_to_linform_exact(&prod, |mono| {
                        mono_cache.get(mono).copied().flatten()
                    });
                    if !form.is_zero() {
                        entries.push((i, j, form));
                    }
                }
            }
            Some(Block {
                label: format!(
                    "D1 n=({}) lambda=({})",
                    comp.iter().map(u32::to_string).join(","),
                    lambda.iter().map(|l| format!("{l:?}")).join(",")
                ),
                dim: rows.len(),
                entries,
            })
        })
        .collect();

    // D = empty: diagonal blocks over the dihedral representative set.
    let dih_classes = dihedral_classes(q);
    let dih_repset = rep_set_dihedral(q);
    let f_dih = f_table(&dih_repset, &dih_classes, 0);
    let k = dih_repset.blocks.len();
    // dihedral monomial -> variable: labels are circular differences
    let mut dih_cache: HashMap<Vec<u32>, Option<usize>> = HashMap::new();
    let mut dih_lookup = |program: &SdpProgram, mono: &[u32]| -> Option<usize> {
        if let Some(v) = dih_cache.get(mono) {
            return *v;
        }
        let beta: Vec<u16> = mono
            .iter()
            .map(|&l| dih_classes.classes[l as usize].label[1])
            .collect();
        let words = [Word::zero(q, n), Word::new(q, beta).unwrap()];
        let var = program.var_of(&canonical_orbit(&words, OrbitGroup::Dihedral));
        dih_cache.insert(mono.to_vec(), var);
        var
    };
    for comp in compositions(n as u32, k) {
        let mut prod = Poly::<f64>::one();
        for (i, &ni) in comp.iter().enumerate() {
            prod = prod.mul(&f_dih[i][0][0].pow(ni));
        }
        let form = poly_to_linform_float(&prod, |mono| dih_lookup(&program, mono));
        let is_border = comp[0] == n as u32;
        let mut entries = Vec::new();
        if !form.is_zero() {
            entries.push((0, 0, form));
        }
        let dim = if is_border {
            let border = Rational::from(Int::from(q as u64).pow(n as u32));
            entries.push((0, 1, LinForm::single(singleton, Coef::Exact(border))));
            entries.push((1, 1, LinForm::constant(Coef::Exact(Rational::from(Int::from(1))))));
            2
        } else {
            1
        };
        blocks.push(Block {
            label: format!("D0 n=({})", comp.iter().map(u32::to_string).join(",")),
            dim,
            entries,
        });
    }

    program.blocks = blocks;
    program.prune_all_blocks();
    Ok(program)
}
