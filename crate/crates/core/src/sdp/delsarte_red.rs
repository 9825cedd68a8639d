//! The Delsarte bound in the Hamming scheme, derived through the general
//! reduction machinery instead of the classical formulas: the single-symbol
//! representative set turns the invariant program into 1x1 blocks, i.e. a
//! linear program over the distance distribution.

use super::program::{Block, Coef, Family, LinForm, SdpProgram, VariableInfo};
use crate::code::{Metric, Word};
use crate::error::{Error, Result};
use crate::lp::LinearProgram;
use crate::symmetry::classes::hamming_single_classes;
use crate::symmetry::orbit::{canonical_orbit, OrbitGroup};
use crate::symmetry::repset::{f_table, rep_set_exact, RepSetKind};
use crate::{binomial, Int, Rational};
use num::{One, Zero};

/// Builds the reduced program: one row per block index `t = 0..n`, with the
/// coefficient of `a_i` obtained from the degree-n expansion of
/// `F1^{n-t} F2^t` after translating orbit variables `z` into distribution
/// entries `a_i = |orbit_i| z_i`.
pub fn gen_delsarte_via_reduction(q: u32, n: u32, d: u32) -> Result<LinearProgram> {
    if q < 2 || n == 0 {
        return Err(Error::Domain("reduction needs q >= 2 and n >= 1".into()));
    }
    let classes = hamming_single_classes(q);
    let repset = rep_set_exact(RepSetKind::SqSingle, q);
    let f = f_table(&repset, &classes, 0);
    let f1 = &f[0][0][0];
    let f2 = &f[1][0][0];
    let diag = classes.class_of(&[0, 0]).unwrap(); // pairs of equal symbols
    let off = classes.class_of(&[0, 1]).unwrap();

    let nv = n as usize + 1;
    let mut rows = Vec::with_capacity(nv);
    for t in 0..=n {
        let block = f1.pow(n - t).mul(&f2.pow(t));
        let mut row = vec![Rational::zero(); nv];
        for (mono, coef) in block.terms() {
            let i = mono.iter().filter(|&&l| l == off).count();
            debug_assert_eq!(mono.len(), n as usize);
            debug_assert_eq!(mono.iter().filter(|&&l| l == diag).count(), n as usize - i);
            // z(orbit_i) = a_i / |orbit_i| with |orbit_i| = C(n,i)(q-1)^i q^n
            let orbit = Rational::from(
                binomial(n as u64, i as u64)
                    * Int::from(q as i64 - 1).pow(i as u32)
                    * Int::from(q as u64).pow(n),
            );
            row[i] += coef / orbit;
        }
        rows.push((row, Rational::zero()));
    }
    let mut fixings = vec![(0usize, Rational::one())];
    for i in 1..d.min(n + 1) {
        fixings.push((i as usize, Rational::zero()));
    }
    Ok(LinearProgram {
        num_vars: nv,
        objective: vec![Rational::one(); nv],
        rows,
        fixings,
    })
}

/// The same reduction packaged as a pair-level semidefinite program over
/// singleton and pair orbits, with the empty-set border on the all-trivial
/// block. The 1x1 blocks carry the Krawtchouk rows; the program's optimum
/// is the Delsarte bound.
pub fn gen_delsarte_pair_sdp(q: u32, n: usize, d: u32) -> Result<SdpProgram> {
    if q < 2 || n == 0 || d == 0 {
        return Err(Error::Domain("pair program needs q >= 2, n, d >= 1".into()));
    }
    let classes = hamming_single_classes(q);
    let repset = rep_set_exact(RepSetKind::SqSingle, q);
    let f = f_table(&repset, &classes, 0);
    let off = classes.class_of(&[0, 1]).unwrap();

    // variables: the singleton orbit and pair orbits at distances d..n
    let pair_key = |i: usize| {
        let mut s = vec![0u16; n];
        for x in s.iter_mut().take(i) {
            *x = 1;
        }
        canonical_orbit(
            &[Word::zero(q, n), Word::new(q, s).unwrap()],
            OrbitGroup::SymbolPerms,
        )
    };
    let mut vars = vec![pair_key(0)];
    vars.extend((d as usize..=n).map(pair_key));
    let vars: Vec<VariableInfo> = vars
        .into_iter()
        .map(|key| VariableInfo {
            orbit_size: key.orbit_size(),
            min_distance: key.min_distance(Metric::Hamming),
            key,
        })
        .collect();
    let mut program = SdpProgram::new(Family::Delsarte2, q, n, d, None, false, vars);
    let singleton = program.singleton_var();
    program.objective[singleton] = Rational::from(Int::from(q as u64).pow(n as u32));

    let mut blocks = Vec::new();
    for t in 0..=n {
        let poly = f[0][0][0].pow((n - t) as u32).mul(&f[1][0][0].pow(t as u32));
        let mut entry = super::program::LinFormBuilder::new();
        for (mono, coef) in poly.terms() {
            let i = mono.iter().filter(|&&l| l == off).count();
            let var = if i == 0 {
                Some(singleton)
            } else {
                program.var_of(&pair_key(i))
            };
            if let Some(var) = var {
                entry.add_exact(var, coef.clone());
            }
        }
        let form = entry.build();
        let mut entries = Vec::new();
        if !form.is_zero() {
            entries.push((0, 0, form));
        }
        let dim = if t == 0 {
            let border = Rational::from(Int::from(q as u64).pow(n as u32));
            entries.push((0, 1, LinForm::single(singleton, Coef::Exact(border))));
            entries.push((
                1,
                1,
                LinForm::constant(Coef::Exact(Rational::from(Int::from(1)))),
            ));
            2
        } else {
            1
        };
        blocks.push(Block { label: format!("t={t}"), dim, entries });
    }
    program.blocks = blocks;
    program.prune_all_blocks();
    Ok(program)
}
