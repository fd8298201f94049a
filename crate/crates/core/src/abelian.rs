//! Exact U(1)_k expectation phases for mixed Wilson/'t Hooft loop
//! configurations.
//!
//! The expectation-phase convention exp((2πi/k)·n·m·lk) is the minimal one
//! whose equal-time exchange limit reproduces the 't Hooft algebra
//! T(C₁)W(C₂) = e^{(2πi/k)l} W(C₂)T(C₁). It is a convention: every
//! downstream use is relative (ratios of phases), never absolute. W-W and
//! T-T pairs contribute 1 by declared convention.

use crate::linkmodel::LinkingMatrix;
use crate::phase::UnitPhase;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AbelianError {
    #[error("level must be at least 1, got {0}")]
    InvalidLevel(i64),
    #[error("charge must be nonzero")]
    ZeroCharge,
    #[error("mixed_phase needs one W and one T loop; use normal_order for same-kind words")]
    SameKindPair,
    #[error("missing linking matrix entry ({0}, {1})")]
    MissingEntry(usize, usize),
}

/// Wilson (`W`) or 't Hooft (`T`) loop kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LoopKind {
    W,
    T,
}

/// An abelian loop operator: a curve reference, a kind fixed at
/// construction, and a nonzero integer charge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargedLoop {
    kind: LoopKind,
    curve: String,
    charge: i64,
}

impl ChargedLoop {
    pub fn new(
        kind: LoopKind,
        curve: impl Into<String>,
        charge: i64,
    ) -> Result<Self, AbelianError> {
        if charge == 0 {
            return Err(AbelianError::ZeroCharge);
        }
        Ok(ChargedLoop {
            kind,
            curve: curve.into(),
            charge,
        })
    }

    pub fn kind(&self) -> LoopKind {
        self.kind
    }

    pub fn curve(&self) -> &str {
        &self.curve
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }
}

/// Expectation phase of a W-T pair with linking/intersection integer `lk`:
/// exp((2πi/k)·n_a·n_b·lk).
pub fn mixed_phase(
    a: &ChargedLoop,
    b: &ChargedLoop,
    k: i64,
    lk: i64,
) -> Result<UnitPhase, AbelianError> {
    if k < 1 {
        return Err(AbelianError::InvalidLevel(k));
    }
    if a.kind == b.kind {
        return Err(AbelianError::SameKindPair);
    }
    Ok(UnitPhase::from_fraction(a.charge * b.charge * lk, k))
}

/// Product of [`mixed_phase`] over all W-T pairs of a configuration; W-W and
/// T-T pairs contribute 1. Framing self-phases are opt-in through the
/// matrix's framed diagonal and are not applied here.
pub fn configuration_phase(
    loops: &[ChargedLoop],
    k: i64,
    matrix: &LinkingMatrix,
) -> Result<UnitPhase, AbelianError> {
    if k < 1 {
        return Err(AbelianError::InvalidLevel(k));
    }
    let mut phase = UnitPhase::one();
    for i in 0..loops.len() {
        for j in (i + 1)..loops.len() {
            if loops[i].kind == loops[j].kind {
                continue;
            }
            let lk = matrix
                .entry(i, j)
                .map_err(|_| AbelianError::MissingEntry(i, j))?;
            phase *= UnitPhase::from_fraction(loops[i].charge * loops[j].charge * lk, k);
        }
    }
    Ok(phase)
}
