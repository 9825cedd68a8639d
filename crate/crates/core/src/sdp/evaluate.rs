//! Evaluating a generated program at the invariant point derived from an
//! explicit code, and numeric positive-semidefiniteness checks.

use super::program::{Family, SdpProgram};
use crate::code::Code;
use crate::error::{Error, Result};
use crate::symmetry::orbit::canonical_orbit;
use crate::symmetry::poly::rational_to_f64;
use crate::Rational;
use itertools::Itertools;
use nalgebra::DMatrix;
use num::Zero;

/// Outcome of evaluating a program at a code-derived point.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub feasible: bool,
    /// Exact objective value; equals `|C|` for a valid code.
    pub objective: Rational,
    /// Smallest block eigenvalue encountered.
    pub min_eigenvalue: f64,
    /// Name of the first violated block, if any.
    pub violated: Option<String>,
}

/// Relative tolerance used in the PSD checks.
pub const PSD_TOL: f64 = 1e-9;

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eigenvalue(m: &[Vec<f64>]) -> f64 {
    let dim = m.len();
    if dim == 0 {
        return 0.0;
    }
    let dm = DMatrix::from_fn(dim, dim, |i, j| m[i][j]);
    dm.symmetric_eigen()
        .eigenvalues
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min)
}

/// PSD check with scaled tolerance.
pub fn is_psd(m: &[Vec<f64>]) -> bool {
    let scale = m
        .iter()
        .flatten()
        .fold(1.0f64, |acc, v| acc.max(v.abs()));
    min_eigenvalue(m) >= -PSD_TOL * scale
}

/// The invariant point of a code: `z(omega) = #{S subset C : S in omega} / |omega|`.
/// Returns `None` when some subset hits an orbit that is not a program
/// variable (i.e. one pinned to zero by the distance filter).
pub fn invariant_point(program: &SdpProgram, code: &Code) -> Result<Option<Vec<Rational>>> {
    if code.q() != program.q || code.n() != program.n {
        return Err(Error::Dimension(format!(
            "code over q={}, n={} fed to a q={}, n={} program",
            code.q(),
            code.n(),
            program.q,
            program.n
        )));
    }
    if matches!(program.family, Family::CwA3 | Family::CwA4 | Family::CwB4) {
        let w = program.w.unwrap();
        if code.words().iter().any(|v| v.weight() != w) {
            return Err(Error::Domain(format!("code is not constant weight {w}")));
        }
    }
    let mut counts = vec![Rational::zero(); program.num_vars()];
    let group = program.family.orbit_group();
    for size in 1..=program.family.subset_bound().min(code.len()) {
        for subset in code.words().iter().combinations(size) {
            let words: Vec<_> = subset.into_iter().cloned().collect();
            let key = canonical_orbit(&words, group);
            match program.var_of(&key) {
                Some(v) => counts[v] += Rational::from(crate::Int::from(1)),
                None => return Ok(None),
            }
        }
    }
    for (c, v) in counts.iter_mut().zip(&program.vars) {
        *c /= Rational::from(v.orbit_size.clone());
    }
    Ok(Some(counts))
}

/// Evaluates all blocks at the code's invariant point.
pub fn evaluate_at_code(program: &SdpProgram, code: &Code) -> Result<Evaluation> {
    if code.is_empty() {
        return Ok(Evaluation {
            feasible: true,
            objective: Rational::zero(),
            min_eigenvalue: 0.0,
            violated: None,
        });
    }
    let Some(z) = invariant_point(program, code)? else {
        return Ok(Evaluation {
            feasible: false,
            objective: Rational::zero(),
            min_eigenvalue: f64::NEG_INFINITY,
            violated: Some("mass on a variable pinned to zero".into()),
        });
    };
    let objective: Rational = program
        .objective
        .iter()
        .zip(&z)
        .map(|(b, zi)| b * zi)
        .sum();
    let zf: Vec<f64> = z.iter().map(rational_to_f64).collect();
    let mut min_eig = f64::INFINITY;
    let mut violated = None;
    let mut feasible = true;
    for block in &program.blocks {
        let dense = block.dense_f64(&zf);
        let scale = dense
            .iter()
            .flatten()
            .fold(1.0f64, |acc, v| acc.max(v.abs()));
        let eig = min_eigenvalue(&dense);
        if eig < min_eig {
            min_eig = eig;
        }
        if eig < -PSD_TOL * scale && feasible {
            feasible = false;
            violated = Some(block.label.clone());
        }
    }
    // Nonnegativity of the variables themselves (their own 1x1 blocks).
    if let Some((idx, _)) = z.iter().find_position(|v| v < &&Rational::zero()) {
        feasible = false;
        violated = Some(format!("z[{idx}] < 0"));
    }
    Ok(Evaluation { feasible, objective, min_eigenvalue: min_eig, violated })
}
