//! Chern-Simons Wilson-loop expectation values for the SU(2) fundamental
//! representation, evaluated through the Kauffman bracket at level k.
//!
//! Convention: A = exp(iπ/(2(k+2))), so the closed-loop value is
//! d = −A² − A⁻² = −2cos(π/(k+2)). The sign relative to the quantum
//! dimension 2cos(π/(k+2)) is a convention and is surfaced through the
//! normalization tag.

mod bracket;
mod cyclotomic;

pub use bracket::bracket_by_enumeration;
pub use cyclotomic::RootOfUnityScalar;

use crate::linkmodel::PDCode;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SkeinError {
    #[error("level must be at least 1, got {0}")]
    InvalidLevel(i64),
}

/// Normalization of a skein invariant: the raw bracket, or the
/// framing-independent value (−A³)^{−w}·⟨L⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    Bracket,
    WritheCorrected,
}

/// Representation label carried on expectation values. Only the SU(2)
/// fundamental evaluator is implemented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Fundamental,
}

/// Exact Wilson-loop expectation value at level k, with its float rendering
/// derived from the exact coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CSExpectation {
    pub value: RootOfUnityScalar,
    pub level: i64,
    pub normalization: Normalization,
    pub representation: Representation,
}

impl CSExpectation {
    /// Output JSON per the external interface:
    /// `{"level", "normalization", "value_exact", "value_re", "value_im"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let z = self.value.to_complex();
        serde_json::json!({
            "level": self.level,
            "normalization": match self.normalization {
                Normalization::Bracket => "bracket",
                Normalization::WritheCorrected => "writhe_corrected",
            },
            "value_exact": self.value.coeffs(),
            "value_re": z.re,
            "value_im": z.im,
        })
    }
}

/// Kauffman bracket of a diagram at level k, in Z[A]/(A^{4(k+2)} − 1).
pub fn kauffman_bracket(pd: &PDCode, k: i64) -> Result<RootOfUnityScalar, SkeinError> {
    if k < 1 {
        return Err(SkeinError::InvalidLevel(k));
    }
    let order = RootOfUnityScalar::order_for_level(k);
    Ok(bracket::bracket_recursive(pd, order))
}

/// Wilson-loop expectation value: the bracket, writhe-corrected by
/// (−A³)^{−w} when asked for the framing-independent normalization.
pub fn cs_expectation(
    pd: &PDCode,
    k: i64,
    framing: Normalization,
) -> Result<CSExpectation, SkeinError> {
    let raw = kauffman_bracket(pd, k)?;
    let order = RootOfUnityScalar::order_for_level(k);
    let value = match framing {
        Normalization::Bracket => raw,
        Normalization::WritheCorrected => {
            let w = pd.writhe();
            let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
            let correction = RootOfUnityScalar::term(order, sign, -3 * w);
            raw.mul(&correction)
        }
    };
    Ok(CSExpectation {
        value,
        level: k,
        normalization: framing,
        representation: Representation::Fundamental,
    })
}

/// Quantum dimension of the fundamental at level k: 2cos(π/(k+2)).
pub fn quantum_dimension(k: i64) -> Result<f64, SkeinError> {
    if k < 1 {
        return Err(SkeinError::InvalidLevel(k));
    }
    Ok(2.0 * (std::f64::consts::PI / (k as f64 + 2.0)).cos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkmodel::{braid_closure, disjoint_union, parse_braid};

    #[test]
    fn quantum_dimension_values() {
        assert!((quantum_dimension(1).unwrap() - 1.0).abs() < 1e-14);
        assert!((quantum_dimension(2).unwrap() - 2.0f64.sqrt()).abs() < 1e-14);
        // monotone approach of 2 from below
        let mut prev = quantum_dimension(1).unwrap();
        for k in 2..200 {
            let q = quantum_dimension(k).unwrap();
            assert!(q > prev && q < 2.0);
            prev = q;
        }
        assert_eq!(quantum_dimension(0), Err(SkeinError::InvalidLevel(0)));
    }

    #[test]
    fn unknot_expectation_magnitude_at_k2() {
        let e = cs_expectation(&PDCode::unknot(), 2, Normalization::Bracket).unwrap();
        assert!((e.value.to_complex().norm() - 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn invalid_level_rejected() {
        assert_eq!(
            kauffman_bracket(&PDCode::unknot(), 0),
            Err(SkeinError::InvalidLevel(0))
        );
    }

    #[test]
    fn writhe_correction_cancels_reidemeister_one() {
        // Markov stabilization: σ1³ on 2 strands and σ1³σ2 on 3 strands close
        // to the same knot; the extra kink shifts the writhe to +4
        let t3 = braid_closure(&parse_braid("1 1 1").unwrap());
        let t3_kink = braid_closure(&parse_braid("1 1 1 2").unwrap());
        assert_eq!(t3_kink.writhe(), 4);
        for k in [1, 2, 3, 5] {
            let a = cs_expectation(&t3, k, Normalization::WritheCorrected).unwrap();
            let b = cs_expectation(&t3_kink, k, Normalization::WritheCorrected).unwrap();
            assert_eq!(a.value, b.value, "k = {k}");
            // raw brackets differ by the R1 factor, so they must not agree
            let ar = cs_expectation(&t3, k, Normalization::Bracket).unwrap();
            let br = cs_expectation(&t3_kink, k, Normalization::Bracket).unwrap();
            assert_ne!(ar.value, br.value, "k = {k}");
        }
    }

    #[test]
    fn reidemeister_two_invariance_of_raw_bracket() {
        // σ1 σ1⁻¹ inserted into the trefoil word is an R2 move
        let t = braid_closure(&parse_braid("1 1 1").unwrap());
        let t_r2 = braid_closure(&parse_braid("1 1 1 1 -1").unwrap());
        for k in [1, 3] {
            assert_eq!(
                kauffman_bracket(&t, k).unwrap(),
                kauffman_bracket(&t_r2, k).unwrap()
            );
        }
    }

    #[test]
    fn reidemeister_three_invariance_of_raw_bracket() {
        // braid relation σ1σ2σ1 = σ2σ1σ2 is R3
        let a = braid_closure(&parse_braid("1 2 1 1").unwrap());
        let b = braid_closure(&parse_braid("2 1 2 1").unwrap());
        for k in [2, 5] {
            assert_eq!(
                kauffman_bracket(&a, k).unwrap(),
                kauffman_bracket(&b, k).unwrap()
            );
        }
    }

    #[test]
    fn distant_union_multiplies() {
        let t = braid_closure(&parse_braid("1 1 1").unwrap());
        let h = braid_closure(&parse_braid("1 1").unwrap());
        let u = disjoint_union(&t, &h);
        let k = 3;
        let bt = kauffman_bracket(&t, k).unwrap();
        let bh = kauffman_bracket(&h, k).unwrap();
        assert_eq!(kauffman_bracket(&u, k).unwrap(), bt.mul(&bh));
    }

    #[test]
    fn expectation_json_shape() {
        let e = cs_expectation(&PDCode::unknot(), 3, Normalization::Bracket).unwrap();
        let v = e.to_json();
        assert_eq!(v["level"], 3);
        assert_eq!(v["normalization"], "bracket");
        assert!(v["value_exact"].is_array());
    }
}
