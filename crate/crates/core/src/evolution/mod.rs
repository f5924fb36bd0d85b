//! Solvers for first-order-in-τ evolution equations with fractional and
//! pseudodifferential generators.

mod affine;
mod half_derivative;
mod inv_sqrt;
mod pseudoheat;
mod symbol;

pub use affine::solve_affine_sqrt;
pub use half_derivative::{half_derivative_at, solve_half_derivative};
pub use inv_sqrt::{apply_inv_sqrt_shift, DECAYED_BOUNDARY, TAIL_TOLERANCE};
pub use pseudoheat::{pseudoheat_gaussian, solve_pseudoheat};
pub use symbol::SymbolSpec;

use crate::error::{Error, Result};
use crate::field::{Field, FieldResult, Warning};
use crate::spectral::apply_multiplier;

/// Spectral solution `F = 𝓕⁻¹[e^{τ P(ik)} 𝓕 f]` on the zero-padded grid.
pub fn solve_symbol_spectral(f: &Field, tau: f64, symbol: &SymbolSpec) -> Result<FieldResult> {
    if !tau.is_finite() {
        return Err(Error::domain("solve_symbol_spectral", "tau must be finite"));
    }
    let mut r = apply_multiplier(f, |k| (symbol.eval(k) * tau).exp()).map_err(|e| match e {
        Error::Range { .. } => Error::Range {
            op: "solve_symbol_spectral",
            detail: format!("e^{{τP}} overflows for symbol {}", symbol.name()),
        },
        other => other,
    })?;
    if symbol.is_experimental() {
        r.warnings.push(Warning::Experimental("half-derivative spectral branch"));
    }
    Ok(r)
}
