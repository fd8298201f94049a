//! Lattice verification of the quantization identities the level splitting
//! rests on: Karabali-Nair flatness, the Polyakov-Wiegmann identity, the
//! Gauss-law variation condition, Kähler potentials and the symplectic-form
//! decompositions.
//!
//! Everything runs on a periodic square torus with O(h²) central
//! differences; identities are checked as residuals that must both sit
//! under a tolerance and shrink by ≈4 per grid refinement.

mod action;
mod field;
mod grid;
mod mat2;
mod suites;
mod symplectic;

pub use action::{
    gauss_variation_check, kahler_potential, kahler_quadrature, pw_crossterm, pw_defect,
    wzw_action, wzw_action_with_nodes, ActionValue,
};
pub use field::{
    flatness_residual, kn_fields, random_algebra_field, random_field, FieldClass,
    LatticeGaugeField, LatticeGroupField,
};
pub use grid::{integral_trace_product, quadrature, LatticeGrid, MatrixField};
pub use mat2::Mat2;
pub use suites::{run_suite, VerifyReport, VerifySuite};
pub use symplectic::{
    random_variation, symplectic_pairing, symplectic_renderings, FieldVariation,
    PhaseSpaceVariation,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum WzwError {
    #[error("grid must be even and at least 8 per side, got {nx}x{ny}")]
    BadGrid { nx: usize, ny: usize },
    #[error("amplitude must be in (0, 1], got {0}")]
    AmplitudeOutOfRange(f64),
    #[error("determinant differs from 1 at site {site}")]
    NotUnimodular { site: usize },
    #[error("singular matrix at site {site}")]
    SingularSite { site: usize },
    #[error("field outside principal-log domain")]
    LogBranch,
    #[error("mismatched grids")]
    MismatchedGrids,
    #[error("variation does not belong to the theory's phase space")]
    VariationTheoryMismatch,
}
