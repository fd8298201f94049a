//! Packaged verification suites behind the `verify` CLI subcommand.
//!
//! Each suite reports its residuals, the grid-refinement (or step-halving)
//! ratios, and a single converged flag: residuals under tolerance and every
//! ratio inside the second-order window [2.8, 5.6].

use super::action::{gauss_variation_check, pw_defect};
use super::field::{flatness_residual, kn_fields, random_algebra_field, random_field, FieldClass};
use super::grid::LatticeGrid;
use super::symplectic::{random_variation, symplectic_renderings};
use super::WzwError;
use crate::splitting::Theory;
use serde::{Deserialize, Serialize};

pub const RATIO_WINDOW: (f64, f64) = (2.8, 5.6);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifySuite {
    Flatness,
    Pw,
    Gauss,
    Symplectic,
}

impl std::str::FromStr for VerifySuite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "flatness" => Ok(VerifySuite::Flatness),
            "pw" => Ok(VerifySuite::Pw),
            "gauss" => Ok(VerifySuite::Gauss),
            "symplectic" => Ok(VerifySuite::Symplectic),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: VerifySuite,
    pub grid: usize,
    pub residuals: Vec<f64>,
    pub ratios: Vec<f64>,
    pub converged: bool,
}

fn ratios_ok(ratios: &[f64]) -> bool {
    ratios
        .iter()
        .all(|&r| r >= RATIO_WINDOW.0 && r <= RATIO_WINDOW.1)
}

/// Run one verification suite at base grid `n`, refining to `2n` where the
/// suite studies h-convergence.
pub fn run_suite(
    suite: VerifySuite,
    n: usize,
    amplitude: f64,
    seed: u64,
    level: i64,
    tol: f64,
) -> Result<VerifyReport, WzwError> {
    match suite {
        VerifySuite::Flatness => {
            let mut residuals = Vec::new();
            for m in [n, 2 * n] {
                let grid = LatticeGrid::square(m)?;
                let u = random_field(grid, FieldClass::Sl2c, amplitude, seed)?;
                residuals.push(flatness_residual(&kn_fields(&u)?));
            }
            let ratios = vec![residuals[0] / residuals[1]];
            let converged = residuals[0] <= tol && ratios_ok(&ratios);
            Ok(VerifyReport {
                suite,
                grid: n,
                residuals,
                ratios,
                converged,
            })
        }
        VerifySuite::Pw => {
            let mut residuals = Vec::new();
            for m in [n, 2 * n] {
                let grid = LatticeGrid::square(m)?;
                let a = random_field(grid, FieldClass::Sl2c, amplitude, seed)?;
                let b = random_field(grid, FieldClass::Sl2c, amplitude, seed.wrapping_add(1))?;
                residuals.push(pw_defect(&a, &b)?);
            }
            let ratios = vec![residuals[0] / residuals[1]];
            let converged = residuals[0] <= tol && ratios_ok(&ratios);
            Ok(VerifyReport {
                suite,
                grid: n,
                residuals,
                ratios,
                converged,
            })
        }
        VerifySuite::Gauss => {
            // η-halving study at fixed grid: residual must drop ≈4x
            let grid = LatticeGrid::square(n)?;
            let u = random_field(grid, FieldClass::Sl2c, amplitude, seed)?;
            let dir = random_algebra_field(grid, FieldClass::Su2, 1.0, seed.wrapping_add(1))?;
            let mut residuals = Vec::new();
            for eta in [1e-3, 5e-4] {
                let eps = dir.map(|m| m.scale_re(eta));
                residuals.push(gauss_variation_check(&u, &eps, level)?);
            }
            let ratios = vec![residuals[0] / residuals[1]];
            let converged = residuals[0] <= tol && ratios_ok(&ratios);
            Ok(VerifyReport {
                suite,
                grid: n,
                residuals,
                ratios,
                converged,
            })
        }
        VerifySuite::Symplectic => {
            // worst relative disagreement between the two renderings over
            // seeded variation pairs, per split theory
            let grid = LatticeGrid::square(n)?;
            let mut residuals = Vec::new();
            for theory in [Theory::Tmym, Theory::Ym] {
                let mut worst = 0.0f64;
                for pair in 0..10u64 {
                    let v = random_variation(grid, theory, seed.wrapping_add(2 * pair))?;
                    let w = random_variation(grid, theory, seed.wrapping_add(2 * pair + 1))?;
                    let (direct, split) = symplectic_renderings(theory, level, &v, &w)?;
                    let rel = (direct - split).norm() / (1.0 + direct.norm());
                    worst = worst.max(rel);
                }
                residuals.push(worst);
            }
            let converged = residuals.iter().all(|&r| r <= tol);
            Ok(VerifyReport {
                suite,
                grid: n,
                residuals,
                ratios: Vec::new(),
                converged,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatness_suite_converges() {
        let r = run_suite(VerifySuite::Flatness, 16, 0.3, 1, 4, 1e-1).unwrap();
        assert!(r.converged, "{r:?}");
        assert_eq!(r.residuals.len(), 2);
    }

    #[test]
    fn symplectic_suite_converges_tightly() {
        let r = run_suite(VerifySuite::Symplectic, 8, 0.3, 9, 4, 1e-10).unwrap();
        assert!(r.converged, "{r:?}");
        assert!(r.ratios.is_empty());
    }

    #[test]
    fn gauss_suite_eta_scaling() {
        let r = run_suite(VerifySuite::Gauss, 16, 0.05, 2, 4, 1e-2).unwrap();
        assert!(r.converged, "{r:?}");
    }

    #[test]
    fn report_serializes_with_contract_fields() {
        let r = run_suite(VerifySuite::Symplectic, 8, 0.3, 9, 4, 1e-10).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["suite"], "symplectic");
        assert!(v["residuals"].is_array());
        assert!(v["converged"].is_boolean());
    }

    #[test]
    fn deterministic_reports() {
        let a = run_suite(VerifySuite::Pw, 16, 0.3, 5, 4, 1e-2).unwrap();
        let b = run_suite(VerifySuite::Pw, 16, 0.3, 5, 4, 1e-2).unwrap();
        assert_eq!(a, b);
    }
}
