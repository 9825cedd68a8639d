//! The symmetry-reduced semidefinite program produced by the generators:
//! variables indexed by code orbits, an objective, and blocks whose entries
//! are linear forms in the variables.

use crate::code::Metric;
use crate::symmetry::orbit::{OrbitGroup, OrbitKey};
use crate::symmetry::poly::{rational_to_f64, Poly};
use crate::{Int, Rational};
use num::Zero;
use std::collections::HashMap;

/// The supported program families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Quadruple bound for unrestricted q-ary codes.
    Hamming4,
    /// Triple bound for binary constant weight codes.
    CwA3,
    /// Quadruple bound for binary constant weight codes.
    CwA4,
    /// Quadruple relaxation with the small empty-set block.
    CwB4,
    /// Triple bound for Lee codes.
    Lee3,
    /// Triple bound for Lee-infinity codes (circular graph powers).
    LeeInf3,
    /// Pair-level program whose optimum is the Delsarte bound.
    Delsarte2,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hamming4 => "hamming4",
            Family::CwA3 => "cw-a3",
            Family::CwA4 => "cw-a4",
            Family::CwB4 => "cw-b4",
            Family::Lee3 => "lee3",
            Family::LeeInf3 => "leeinf3",
            Family::Delsarte2 => "delsarte2",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "hamming4" => Family::Hamming4,
            "cw-a3" => Family::CwA3,
            "cw-a4" => Family::CwA4,
            "cw-b4" => Family::CwB4,
            "lee3" => Family::Lee3,
            "leeinf3" => Family::LeeInf3,
            "delsarte2" => Family::Delsarte2,
            _ => return None,
        })
    }

    /// Metric used for the distance filter.
    pub fn metric(self) -> Metric {
        match self {
            Family::Hamming4 | Family::CwA3 | Family::CwA4 | Family::CwB4 => Metric::Hamming,
            Family::Lee3 => Metric::Lee,
            Family::LeeInf3 => Metric::LeeInf,
            Family::Delsarte2 => Metric::Hamming,
        }
    }

    /// Largest subset size carrying a variable.
    pub fn subset_bound(self) -> usize {
        match self {
            Family::Hamming4 | Family::CwA4 | Family::CwB4 => 4,
            Family::CwA3 | Family::Lee3 | Family::LeeInf3 => 3,
            Family::Delsarte2 => 2,
        }
    }

    pub fn orbit_group(self) -> OrbitGroup {
        match self {
            Family::Hamming4 | Family::Delsarte2 => OrbitGroup::SymbolPerms,
            Family::CwA3 | Family::CwA4 | Family::CwB4 => OrbitGroup::Trivial,
            Family::Lee3 | Family::LeeInf3 => OrbitGroup::Dihedral,
        }
    }
}

/// A coefficient: exact where possible, floating point for the dihedral
/// (cosine-valued) blocks.
#[derive(Debug, Clone, PartialEq)]
pub enum Coef {
    Exact(Rational),
    Float(f64),
}

impl Coef {
    pub fn zero() -> Self {
        Coef::Exact(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coef::Exact(r) => r.is_zero(),
            Coef::Float(f) => *f == 0.0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Coef::Exact(r) => rational_to_f64(r),
            Coef::Float(f) => *f,
        }
    }
}

/// A linear form `constant + sum coef_i z_i` appearing as a block entry.
#[derive(Debug, Clone, PartialEq)]
pub struct LinForm {
    pub constant: Coef,
    /// Terms sorted by variable index.
    pub terms: Vec<(usize, Coef)>,
}

impl LinForm {
    pub fn zero() -> Self {
        LinForm { constant: Coef::zero(), terms: vec![] }
    }

    pub fn constant(c: Coef) -> Self {
        LinForm { constant: c, terms: vec![] }
    }

    pub fn single(var: usize, c: Coef) -> Self {
        LinForm { constant: Coef::zero(), terms: vec![(var, c)] }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.iter().all(|(_, c)| c.is_zero())
    }

    pub fn eval_f64(&self, z: &[f64]) -> f64 {
        self.constant.to_f64()
            + self
                .terms
                .iter()
                .map(|(v, c)| c.to_f64() * z[*v])
                .sum::<f64>()
    }

    /// Exact evaluation; float coefficients poison the result into `None`.
    pub fn eval_exact(&self, z: &[Rational]) -> Option<Rational> {
        let mut acc = match &self.constant {
            Coef::Exact(r) => r.clone(),
            Coef::Float(_) => return None,
        };
        for (v, c) in &self.terms {
            match c {
                Coef::Exact(r) => acc += r * &z[*v],
                Coef::Float(_) => return None,
            }
        }
        Some(acc)
    }
}

/// Accumulates a linear form from polynomial terms.
pub(crate) struct LinFormBuilder {
    constant: Coef,
    exact: HashMap<usize, Rational>,
    float: HashMap<usize, f64>,
}

impl LinFormBuilder {
    pub fn new() -> Self {
        LinFormBuilder {
            constant: Coef::zero(),
            exact: HashMap::new(),
            float: HashMap::new(),
        }
    }

    pub fn add_exact(&mut self, var: usize, c: Rational) {
        *self.exact.entry(var).or_insert_with(Rational::zero) += c;
    }

    pub fn add_float(&mut self, var: usize, c: f64) {
        *self.float.entry(var).or_insert(0.0) += c;
    }

    pub fn build(self) -> LinForm {
        let mut terms: Vec<(usize, Coef)> = self
            .exact
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(v, c)| (v, Coef::Exact(c)))
            .chain(
                self.float
                    .into_iter()
                    .filter(|(_, c)| *c != 0.0)
                    .map(|(v, c)| (v, Coef::Float(c))),
            )
            .collect();
        terms.sort_by_key(|(v, _)| *v);
        LinForm { constant: self.constant, terms }
    }
}

/// One PSD block: symmetric, stored as its upper triangle.
#[derive(Debug, Clone)]
pub struct Block {
    pub label: String,
    pub dim: usize,
    /// Entries `(i, j, form)` with `i <= j`; missing entries are zero.
    pub entries: Vec<(usize, usize, LinForm)>,
}

impl Block {
    /// Removes rows/columns whose every entry is identically zero.
    pub fn prune_zero_rows(&mut self) {
        let mut live = vec![false; self.dim];
        for (i, j, f) in &self.entries {
            if !f.is_zero() {
                live[*i] = true;
                live[*j] = true;
            }
        }
        if live.iter().all(|&l| l) {
            return;
        }
        let remap: Vec<Option<usize>> = {
            let mut next = 0;
            live.iter()
                .map(|&l| {
                    if l {
                        let v = next;
                        next += 1;
                        Some(v)
                    } else {
                        None
                    }
                })
                .collect()
        };
        self.dim = live.iter().filter(|&&l| l).count();
        self.entries = std::mem::take(&mut self.entries)
            .into_iter()
            .filter_map(|(i, j, f)| match (remap[i], remap[j]) {
                (Some(a), Some(b)) if !f.is_zero() => Some((a, b, f)),
                _ => None,
            })
            .collect();
    }

    pub fn dense_f64(&self, z: &[f64]) -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; self.dim]; self.dim];
        for (i, j, f) in &self.entries {
            let v = f.eval_f64(z);
            m[*i][*j] = v;
            m[*j][*i] = v;
        }
        m
    }
}

/// A variable of the reduced program: one orbit of small codes.
#[derive(Debug, Clone)]
pub struct VariableInfo {
    pub key: OrbitKey,
    pub orbit_size: Int,
    /// Minimum distance (in the family metric) of the orbit's codes.
    pub min_distance: Option<u32>,
}

/// A symmetry-reduced semidefinite program.
#[derive(Debug, Clone)]
pub struct SdpProgram {
    pub family: Family,
    pub q: u32,
    pub n: usize,
    pub d: u32,
    pub w: Option<usize>,
    /// True when a constant-weight instance was complemented to `w <= n/2`.
    pub complemented: bool,
    pub vars: Vec<VariableInfo>,
    /// Objective coefficients `b`, one per variable (maximize `b.z`).
    pub objective: Vec<Rational>,
    pub blocks: Vec<Block>,
    var_index: HashMap<OrbitKey, usize>,
}

impl SdpProgram {
    pub(crate) fn new(
        family: Family,
        q: u32,
        n: usize,
        d: u32,
        w: Option<usize>,
        complemented: bool,
        vars: Vec<VariableInfo>,
    ) -> Self {
        let var_index = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.key.clone(), i))
            .collect();
        let objective = vec![Rational::zero(); vars.len()];
        SdpProgram {
            family,
            q,
            n,
            d,
            w,
            complemented,
            vars,
            objective,
            blocks: vec![],
            var_index,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_of(&self, key: &OrbitKey) -> Option<usize> {
        self.var_index.get(key).copied()
    }

    /// Index of the singleton orbit.
    pub fn singleton_var(&self) -> usize {
        self.vars
            .iter()
            .position(|v| v.key.size == 1)
            .expect("program without singleton orbit")
    }

    pub(crate) fn prune_all_blocks(&mut self) {
        for b in &mut self.blocks {
            b.prune_zero_rows();
        }
        self.blocks.retain(|b| b.dim > 0);
    }
}

/// Turns a polynomial over class-label monomials into a linear form via a
/// monomial-to-variable substitution. The substitution returns `None` for
/// monomials whose orbit was filtered out (variable pinned to zero).
pub(crate) fn poly_to_linform_exact(
    p: &Poly<Rational>,
    mut subst: impl FnMut(&[u32]) -> Option<usize>,
) -> LinForm {
    let mut b = LinFormBuilder::new();
    for (mono, coef) in p.terms() {
        if let Some(var) = subst(mono) {
            b.add_exact(var, coef.clone());
        }
    }
    b.build()
}

pub(crate) fn poly_to_linform_float(
    p: &Poly<f64>,
    mut subst: impl FnMut(&[u32]) -> Option<usize>,
) -> LinForm {
    let mut b = LinFormBuilder::new();
    for (mono, coef) in p.terms() {
        if let Some(var) = subst(mono) {
            b.add_float(var, *coef);
        }
    }
    b.build()
}
