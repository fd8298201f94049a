//! Level-splitting maps for 2+1D gauge theory inner products and
//! observables, the even-level rule, winding-phase checks, 't Hooft-word
//! normal ordering and O(1/m²) correction bookkeeping.
//!
//! Topologically massive Yang-Mills at level k splits into two CS factors
//! at level k/2; pure Yang-Mills splits into levels k/2 and −k/2. Split
//! levels live as exact rationals inside [`InnerProductForm`] and never
//! reach the skein evaluator, which demands an integer level: observable
//! splitting is therefore only available for even k, enforced at the type
//! boundary.

use crate::abelian::LoopKind;
use crate::linkmodel::PDCode;
use crate::phase::UnitPhase;
use crate::skein::{cs_expectation, Normalization, RootOfUnityScalar, SkeinError};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SplitError {
    #[error("theory is already Chern-Simons: splitting is the identity map")]
    AlreadyChernSimons,
    #[error("even level required for observable splitting, got k = {0}")]
    OddLevel(i64),
    #[error("nonzero intersection number between entries {0} and {1}: outside the zero-intersection regime")]
    NonzeroIntersection(usize, usize),
    #[error("mass parameter required for theory {0:?}")]
    MissingMass(Theory),
    #[error("mass parameter only applies to TMYM and YM")]
    UnexpectedMass,
    #[error("level must be at least 1, got {0}")]
    InvalidLevel(i64),
    #[error("expected theory {expected:?}, got {got:?}")]
    WrongTheory { expected: Theory, got: Theory },
    #[error("length scale must be positive")]
    NonPositiveLengthScale,
    #[error("intersection matrix must be antisymmetric with one row per entry")]
    BadIntersectionMatrix,
    #[error("duplicate curve id `{0}` in loop word")]
    DuplicateCurve(String),
    #[error(transparent)]
    Skein(#[from] SkeinError),
}

/// Theory tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Theory {
    Cs,
    Tmym,
    Ym,
}

/// A theory with integer level k; TMYM and YM carry a positive mass gap m
/// (units of inverse distance).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TheoryLevel {
    theory: Theory,
    k: i64,
    m: Option<f64>,
}

impl TheoryLevel {
    pub fn new(theory: Theory, k: i64, m: Option<f64>) -> Result<Self, SplitError> {
        match theory {
            Theory::Cs => {
                if m.is_some() {
                    return Err(SplitError::UnexpectedMass);
                }
            }
            Theory::Tmym | Theory::Ym => match m {
                Some(mass) if mass > 0.0 => {}
                _ => return Err(SplitError::MissingMass(theory)),
            },
        }
        Ok(TheoryLevel { theory, k, m })
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn level(&self) -> i64 {
        self.k
    }

    pub fn mass(&self) -> Option<f64> {
        self.m
    }
}

/// Symbolic WZW-exponent coefficient `2c_A ± k/2`; the Casimir c_A is never
/// assigned a number because no functional integral is performed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WzwCoefficient {
    pub casimir_multiple: i64,
    pub level_term: Rational64,
}

impl fmt::Display for WzwCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.level_term;
        if t >= Rational64::new(0, 1) {
            write!(f, "{}c_A + {}", self.casimir_multiple, t)
        } else {
            write!(f, "{}c_A - {}", self.casimir_multiple, -t)
        }
    }
}

/// One CS factor of a split inner product: an exact rational level and its
/// symbolic WZW coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CsFactor {
    pub level: Rational64,
    pub wzw_coefficient: WzwCoefficient,
}

/// Order bookkeeping for the O(1/m^p) truncation. The correction is
/// metadata: it is never added to values, only reported.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrectionOrder {
    pub order: u32,
    pub bound_coefficient: Option<f64>,
}

impl CorrectionOrder {
    pub fn large_distance() -> Self {
        CorrectionOrder {
            order: 2,
            bound_coefficient: None,
        }
    }
}

/// Symbolic form of a split inner product: one or two CS factors plus the
/// truncation order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InnerProductForm {
    pub theory: Theory,
    pub level: i64,
    pub factors: Vec<CsFactor>,
    pub correction: CorrectionOrder,
    /// False for odd k: the inner product still splits, but observables
    /// cannot be mapped to integer-level CS expectations.
    pub observable_map_available: bool,
}

impl InnerProductForm {
    /// Sum of factor levels: k for TMYM, 0 for YM.
    pub fn level_sum(&self) -> Rational64 {
        self.factors.iter().map(|f| f.level).sum()
    }
}

/// Split a TMYM or YM inner product into its CS factors.
///
/// TMYM_k ↦ (CS, k/2) × (CS, k/2) with coefficients 2c_A + k/2;
/// YM_k ↦ (CS, k/2) × (CS, −k/2) with coefficients 2c_A ± k/2.
pub fn split_inner_product(t: &TheoryLevel) -> Result<InnerProductForm, SplitError> {
    let k = t.level();
    let half = Rational64::new(k, 2);
    let factors = match t.theory() {
        Theory::Cs => return Err(SplitError::AlreadyChernSimons),
        Theory::Tmym => vec![
            CsFactor {
                level: half,
                wzw_coefficient: WzwCoefficient {
                    casimir_multiple: 2,
                    level_term: half,
                },
            };
            2
        ],
        Theory::Ym => vec![
            CsFactor {
                level: half,
                wzw_coefficient: WzwCoefficient {
                    casimir_multiple: 2,
                    level_term: half,
                },
            },
            CsFactor {
                level: -half,
                wzw_coefficient: WzwCoefficient {
                    casimir_multiple: 2,
                    level_term: -half,
                },
            },
        ],
    };
    Ok(InnerProductForm {
        theory: t.theory(),
        level: k,
        factors,
        correction: CorrectionOrder::large_distance(),
        observable_map_available: k % 2 == 0,
    })
}

/// One entry of a loop-operator word: a W or T loop on a named curve with an
/// abelian charge (1 for the nonabelian fundamental entries).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordEntry {
    pub kind: LoopKind,
    pub curve: String,
    pub charge: i64,
}

/// An ordered word of W/T loop operators together with the antisymmetric
/// matrix of pairwise intersection numbers l(C_i, C_j).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopOperatorWord {
    entries: Vec<WordEntry>,
    intersections: Vec<Vec<i64>>,
}

impl LoopOperatorWord {
    pub fn new(entries: Vec<WordEntry>, intersections: Vec<Vec<i64>>) -> Result<Self, SplitError> {
        let n = entries.len();
        if intersections.len() != n || intersections.iter().any(|row| row.len() != n) {
            return Err(SplitError::BadIntersectionMatrix);
        }
        for i in 0..n {
            for j in 0..n {
                if intersections[i][j] != -intersections[j][i] {
                    return Err(SplitError::BadIntersectionMatrix);
                }
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for e in &entries {
            if !seen.insert(e.curve.clone()) {
                return Err(SplitError::DuplicateCurve(e.curve.clone()));
            }
        }
        Ok(LoopOperatorWord {
            entries,
            intersections,
        })
    }

    pub fn entries(&self) -> &[WordEntry] {
        &self.entries
    }

    pub fn intersection(&self, i: usize, j: usize) -> i64 {
        self.intersections[i][j]
    }

    pub fn intersections(&self) -> &[Vec<i64>] {
        &self.intersections
    }

    fn is_normal_ordered(&self) -> bool {
        self.entries
            .windows(2)
            .all(|w| !(w[0].kind == LoopKind::T && w[1].kind == LoopKind::W))
    }
}

/// Reorder a word into canonical form (all W's left of all T's, stable
/// within kinds) by adjacent transpositions, accumulating the 't Hooft
/// exchange phase e^{(2πi/k)·l(C_i,C_j)·n_i·n_j} for every T moved past a W.
pub fn normal_order(
    word: &LoopOperatorWord,
    k: i64,
) -> Result<(LoopOperatorWord, UnitPhase), SplitError> {
    if k < 1 {
        return Err(SplitError::InvalidLevel(k));
    }
    let mut entries = word.entries.clone();
    let mut m = word.intersections.clone();
    let mut phase = UnitPhase::one();
    let n = entries.len();
    loop {
        let mut swapped = false;
        for p in 0..n.saturating_sub(1) {
            if entries[p].kind == LoopKind::T && entries[p + 1].kind == LoopKind::W {
                // moving T(C_p) past W(C_{p+1}): T W = e^{(2πi/k) l n n'} W T
                let l = m[p][p + 1];
                phase *= UnitPhase::from_fraction(l * entries[p].charge * entries[p + 1].charge, k);
                entries.swap(p, p + 1);
                m.swap(p, p + 1);
                for row in m.iter_mut() {
                    row.swap(p, p + 1);
                }
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    let reordered = LoopOperatorWord {
        entries,
        intersections: m,
    };
    debug_assert!(reordered.is_normal_ordered());
    Ok((reordered, phase))
}

/// Exact split evaluation of an observable word, with the provenance of each
/// CS sub-evaluation and the truncation order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitExpectation {
    pub value: RootOfUnityScalar,
    pub provenance: Vec<SplitProvenance>,
    pub correction: CorrectionOrder,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitProvenance {
    pub curve: String,
    pub cs_level: i64,
    pub value: RootOfUnityScalar,
}

/// TMYM observable expectation via level splitting: each 𝒲 or 𝒯 loop of a
/// zero-intersection word at even level k evaluates to the CS expectation of
/// its curve at level k/2, and the word evaluates to the exact product.
///
/// `curves` resolves curve ids to diagrams; unresolved curves default to the
/// zero-crossing unknot.
pub fn tmym_expectation(
    word: &LoopOperatorWord,
    curves: &BTreeMap<String, PDCode>,
    t: &TheoryLevel,
    framing: Normalization,
) -> Result<SplitExpectation, SplitError> {
    if t.theory() != Theory::Tmym {
        return Err(SplitError::WrongTheory {
            expected: Theory::Tmym,
            got: t.theory(),
        });
    }
    if t.level() < 1 {
        return Err(SplitError::InvalidLevel(t.level()));
    }
    if t.level() % 2 != 0 {
        return Err(SplitError::OddLevel(t.level()));
    }
    for i in 0..word.entries.len() {
        for j in (i + 1)..word.entries.len() {
            if word.intersection(i, j) != 0 {
                return Err(SplitError::NonzeroIntersection(i, j));
            }
        }
    }
    let half = t.level() / 2;
    let order = RootOfUnityScalar::order_for_level(half);
    let mut value = RootOfUnityScalar::one(order);
    let unknot = PDCode::unknot();
    let mut provenance = Vec::with_capacity(word.entries.len());
    for e in &word.entries {
        let pd = curves.get(&e.curve).unwrap_or(&unknot);
        let sub = cs_expectation(pd, half, framing)?;
        value = value.mul(&sub.value);
        provenance.push(SplitProvenance {
            curve: e.curve.clone(),
            cs_level: half,
            value: sub.value,
        });
    }
    // the bound needs a length scale; without one only the order is reported
    let correction = CorrectionOrder {
        order: 2,
        bound_coefficient: None,
    };
    Ok(SplitExpectation {
        value,
        provenance,
        correction,
    })
}

/// Multiple of π, used for exact winding-phase bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiMultiple(pub i64);

impl PiMultiple {
    pub fn radians(&self) -> f64 {
        self.0 as f64 * std::f64::consts::PI
    }
}

/// Large-gauge winding phase of the split action.
///
/// Each half-level CS factor shifts by πkω under a winding-ω gauge
/// transformation. TMYM sums two halves (total 2πkω, always a multiple of
/// 2π); YM's two halves cancel exactly; a single CS half alone shifts by
/// πkω and is invariant only when kω is even.
pub fn gauge_phase_check(t: &TheoryLevel, winding: i64) -> (PiMultiple, bool) {
    let k = t.level();
    match t.theory() {
        Theory::Tmym => {
            let total = PiMultiple(2 * k * winding);
            (total, total.0 % 2 == 0)
        }
        Theory::Ym => (PiMultiple(0), true),
        Theory::Cs => {
            let total = PiMultiple(k * winding);
            (total, total.0 % 2 == 0)
        }
    }
}

/// Dimensionless size of the neglected O(1/m²) correction at a given length
/// scale: (1/(m·L))². The paper gives no coefficient, so none is fabricated;
/// this is the small parameter itself.
pub fn correction_bound(t: &TheoryLevel, length_scale: f64) -> Result<CorrectionOrder, SplitError> {
    let m = t.mass().ok_or(SplitError::MissingMass(t.theory()))?;
    if !(length_scale > 0.0) {
        return Err(SplitError::NonPositiveLengthScale);
    }
    let x = 1.0 / (m * length_scale);
    Ok(CorrectionOrder {
        order: 2,
        bound_coefficient: Some(x * x),
    })
}
