//! Parsing of interaction specifications from flags or config values.
//!
//! A point interaction can be given as (ξ, α, β), as chiral angles on an
//! invariant torus, as a self-dual angle, or as a transfer matrix. Complex
//! numbers and matrices are written as comma-separated reals ("re,im" and
//! "a,b,c,d") to stay locale-proof.

use crate::CliError;
use clap::Args;
use pointline::mat2::C64;
use pointline::params::{CharacteristicMatrix, PauliAxis, ScaleParameter, TransferMatrix};
use serde::Deserialize;
use std::f64::consts::PI;

#[derive(Debug, Clone, Args, Deserialize, Default)]
#[serde(deny_unknown_fields, default)]
pub struct USpec {
    /// Overall phase ξ ∈ [0, π) of the characteristic matrix.
    #[arg(long, value_name = "RAD")]
    pub xi: Option<f64>,
    /// α as "re,im".
    #[arg(long, value_name = "RE,IM")]
    pub alpha: Option<String>,
    /// β as "re,im".
    #[arg(long, value_name = "RE,IM")]
    pub beta: Option<String>,
    /// Chiral angle ϑ₊ on the invariant torus of --axis.
    #[arg(long, value_name = "RAD")]
    pub theta_plus: Option<f64>,
    /// Chiral angle ϑ₋ on the invariant torus of --axis.
    #[arg(long, value_name = "RAD")]
    pub theta_minus: Option<f64>,
    /// Pauli axis of the chiral angles: 1 (parity), 2 or 3.
    #[arg(long, default_value_t = 1)]
    pub axis: usize,
    /// Self-dual interaction e^{iθ}I at this angle.
    #[arg(long, value_name = "RAD")]
    pub self_dual: Option<f64>,
    /// Transfer matrix entries "a,b,c,d" (dimensionless against L0).
    #[arg(long, value_name = "A,B,C,D")]
    pub transfer: Option<String>,
    /// Transfer-matrix phase χ ∈ [0, π).
    #[arg(long, value_name = "RAD")]
    pub chi: Option<f64>,
}

pub fn parse_complex(s: &str, what: &str) -> Result<C64, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::usage(format!(
            "{what} must be written as \"re,im\", got \"{s}\""
        )));
    }
    let re = parts[0].trim().parse::<f64>();
    let im = parts[1].trim().parse::<f64>();
    match (re, im) {
        (Ok(re), Ok(im)) => Ok(C64::new(re, im)),
        _ => Err(CliError::usage(format!(
            "{what} components must be decimal numbers, got \"{s}\""
        ))),
    }
}

fn angle(v: f64, deg: bool) -> f64 {
    if deg {
        v * PI / 180.0
    } else {
        v
    }
}

impl USpec {
    /// Resolve the specification into a characteristic matrix.
    pub fn resolve(&self, deg: bool, l0: ScaleParameter) -> Result<CharacteristicMatrix, CliError> {
        let explicit = self.xi.is_some() || self.alpha.is_some() || self.beta.is_some();
        let chiral = self.theta_plus.is_some() || self.theta_minus.is_some();
        let modes = [explicit, chiral, self.self_dual.is_some(), self.transfer.is_some()];
        match modes.iter().filter(|&&m| m).count() {
            0 => {
                return Err(CliError::usage(
                    "no interaction given: use --xi/--alpha/--beta, --theta-plus/--theta-minus, \
                     --self-dual or --transfer",
                ))
            }
            1 => {}
            _ => {
                return Err(CliError::usage(
                    "conflicting interaction specifications: give exactly one of \
                     (--xi,--alpha,--beta), (--theta-plus,--theta-minus), --self-dual, --transfer",
                ))
            }
        }
        if let Some(entries) = &self.transfer {
            let parts: Vec<&str> = entries.split(',').collect();
            if parts.len() != 4 {
                return Err(CliError::usage(format!(
                    "--transfer expects \"a,b,c,d\", got \"{entries}\""
                )));
            }
            let mut vals = [0.0f64; 4];
            for (v, p) in vals.iter_mut().zip(parts.iter()) {
                *v = p.trim().parse::<f64>().map_err(|_| {
                    CliError::usage(format!("--transfer entries must be numbers, got \"{p}\""))
                })?;
            }
            let chi = angle(self.chi.unwrap_or(0.0), deg);
            let lam = TransferMatrix::new(chi, vals[0], vals[1], vals[2], vals[3])
                .map_err(|e| CliError::usage(format!("invalid transfer matrix: {e}")))?;
            return Ok(CharacteristicMatrix::from_transfer(&lam, l0));
        }
        if let Some(theta) = self.self_dual {
            return Ok(CharacteristicMatrix::self_dual(angle(theta, deg)));
        }
        if chiral {
            let (Some(tp), Some(tm)) = (self.theta_plus, self.theta_minus) else {
                return Err(CliError::usage(
                    "both --theta-plus and --theta-minus are required for a chiral specification",
                ));
            };
            let axis = PauliAxis::from_index(self.axis)
                .map_err(|_| CliError::usage("--axis must be 1, 2 or 3"))?;
            let (tp, tm) = (angle(tp, deg), angle(tm, deg));
            for (name, v) in [("--theta-plus", tp), ("--theta-minus", tm)] {
                if !(0.0..2.0 * PI).contains(&v) {
                    return Err(CliError::usage(format!(
                        "{name} must lie in [0, 2π) radians (got {v}); \
                         reduce the angle modulo 2π first"
                    )));
                }
            }
            return Ok(CharacteristicMatrix::from_chiral_angles(axis, tp, tm));
        }
        let (Some(xi), Some(alpha), Some(beta)) = (self.xi, &self.alpha, &self.beta) else {
            return Err(CliError::usage(
                "an explicit interaction needs all of --xi, --alpha and --beta",
            ));
        };
        let xi = angle(xi, deg);
        if !(0.0..PI).contains(&xi) {
            return Err(CliError::usage(format!(
                "--xi must lie in [0, π) (got {xi}); fold ξ by π and negate α, β to renormalize"
            )));
        }
        let alpha = parse_complex(alpha, "--alpha")?;
        let beta = parse_complex(beta, "--beta")?;
        CharacteristicMatrix::new(xi, alpha, beta)
            .map_err(|e| CliError::usage(format!("invalid characteristic parameters: {e}")))
    }
}
