//! Analysis of (approximate) dual solutions: which orbits are forbidden in
//! every optimum code.
//!
//! For a program `max b.z, M(z) = F_empty - sum F_omega z(omega) >= 0` with
//! a separate 1x1 block per variable, an approximate dual solution `X >= 0`
//! with residuals `eps_omega = <X, F_omega> - b_omega` satisfies
//! `X_omega z(omega) <= <F_empty, X> - |C| + sum max(eps, 0)` at every
//! primal point of value `|C|` with `z in [0,1]`. When the right-hand side
//! divided by `X_omega` drops below the least possible value of a nonzero
//! `z(omega)`, the orbit cannot occur in any optimum code.

use super::evaluate::{is_psd, min_eigenvalue};
use super::program::SdpProgram;
use crate::error::{Error, Result};
use crate::symmetry::orbit::OrbitKey;

/// A numeric dual solution aligned with a program's blocks and variables.
#[derive(Debug, Clone)]
pub struct DualSolution {
    /// One symmetric matrix per structural block, same dimensions.
    pub block_mats: Vec<Vec<Vec<f64>>>,
    /// The 1x1 dual blocks paired with the nonnegativity constraints.
    pub var_duals: Vec<f64>,
}

/// Report for one variable of the analysis.
#[derive(Debug, Clone)]
pub struct ForbiddenOrbit {
    pub var: usize,
    pub key: OrbitKey,
    /// Upper bound on `z(omega)` in any optimum solution.
    pub z_bound: f64,
}

/// Flags orbits that occur in no optimum code. `lower_bound_on_nonzero_z`
/// is the least value a nonzero invariant `z(omega)` can take (e.g.
/// `1/|H|`); `attained` is the known optimal objective value.
pub fn analyze_dual(
    program: &SdpProgram,
    dual: &DualSolution,
    lower_bound_on_nonzero_z: f64,
    attained: f64,
) -> Result<Vec<ForbiddenOrbit>> {
    if dual.block_mats.len() != program.blocks.len()
        || dual.var_duals.len() != program.num_vars()
    {
        return Err(Error::Dimension("dual solution shape mismatch".into()));
    }
    for (mat, block) in dual.block_mats.iter().zip(&program.blocks) {
        if mat.len() != block.dim || mat.iter().any(|row| row.len() != block.dim) {
            return Err(Error::Dimension(format!(
                "dual block for `{}` has wrong dimension",
                block.label
            )));
        }
        if !is_psd(mat) {
            return Err(Error::Domain(format!(
                "dual block for `{}` is not positive semidefinite (min eig {})",
                block.label,
                min_eigenvalue(mat)
            )));
        }
    }
    if let Some(v) = dual.var_duals.iter().find(|v| **v < 0.0) {
        return Err(Error::Domain(format!("negative variable dual {v}")));
    }

    // <F_empty, X> over the structural blocks (constants live only there).
    let mut f0_inner = 0.0f64;
    for (mat, block) in dual.block_mats.iter().zip(&program.blocks) {
        for (i, j, form) in &block.entries {
            let c = form.constant.to_f64();
            if c != 0.0 {
                let mult = if i == j { 1.0 } else { 2.0 };
                f0_inner += mult * c * mat[*i][*j];
            }
        }
    }

    // eps_omega = <X, F_omega> - b_omega with F_omega = -(A_omega plus the
    // variable's own nonnegativity slot).
    let mut eps = vec![0.0f64; program.num_vars()];
    for (v, e) in eps.iter_mut().enumerate() {
        *e -= dual.var_duals[v];
    }
    for (mat, block) in dual.block_mats.iter().zip(&program.blocks) {
        for (i, j, form) in &block.entries {
            let mult = if i == j { 1.0 } else { 2.0 };
            for (v, c) in &form.terms {
                eps[*v] -= mult * c.to_f64() * mat[*i][*j];
            }
        }
    }
    let mut slack = f0_inner - attained;
    for (v, e) in eps.iter_mut().enumerate() {
        *e -= crate::symmetry::poly::rational_to_f64(&program.objective[v]);
        if *e > 0.0 {
            slack += *e;
        }
    }

    let mut forbidden = Vec::new();
    for (v, &xv) in dual.var_duals.iter().enumerate() {
        if xv > 0.0 {
            let z_bound = slack / xv;
            if z_bound < lower_bound_on_nonzero_z {
                forbidden.push(ForbiddenOrbit {
                    var: v,
                    key: program.vars[v].key.clone(),
                    z_bound,
                });
            }
        }
    }
    Ok(forbidden)
}
