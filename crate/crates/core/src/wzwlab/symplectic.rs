//! Symplectic two-forms of the three theories, evaluated on pairs of field
//! variations, in both their direct and split renderings.
//!
//! A wedge δX^a_z̄ δY^a_z evaluated on variations (v, w) is
//! X_z̄(v)·Y_z(w) − X_z̄(w)·Y_z(v), summed over color with
//! X^aY^a = −2Tr(XY), then integrated over the torus.

use super::grid::{integral_trace_product, LatticeGrid, MatrixField};
use super::WzwError;
use crate::splitting::Theory;
use num_complex::Complex64;
use std::f64::consts::PI;

/// A variation of one gauge field: tangent-space (δX_z, δX_z̄) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldVariation {
    pub z: MatrixField,
    pub zbar: MatrixField,
}

impl FieldVariation {
    pub fn new(z: MatrixField, zbar: MatrixField) -> Result<Self, WzwError> {
        if z.grid() != zbar.grid() {
            return Err(WzwError::MismatchedGrids);
        }
        Ok(FieldVariation { z, zbar })
    }

    pub fn grid(&self) -> LatticeGrid {
        self.z.grid()
    }

    /// Component one-forms: X_1 = X_z + X_z̄, X_2 = i(X_z − X_z̄).
    fn components(&self) -> (MatrixField, MatrixField) {
        let x1 = self.z.zip_map(&self.zbar, |a, b| *a + *b);
        let x2 = self
            .z
            .zip_map(&self.zbar, |a, b| (*a - *b).scale(Complex64::new(0.0, 1.0)));
        (x1, x2)
    }
}

/// A tangent vector of the theory's phase space: δA for CS, (δA, δÃ) for
/// TMYM, (δA, δE) for YM.
#[derive(Debug, Clone, PartialEq)]
pub enum PhaseSpaceVariation {
    Cs {
        a: FieldVariation,
    },
    Tmym {
        a: FieldVariation,
        a_tilde: FieldVariation,
    },
    Ym {
        a: FieldVariation,
        e: FieldVariation,
    },
}

impl PhaseSpaceVariation {
    fn grid(&self) -> LatticeGrid {
        match self {
            PhaseSpaceVariation::Cs { a } => a.grid(),
            PhaseSpaceVariation::Tmym { a, .. } => a.grid(),
            PhaseSpaceVariation::Ym { a, .. } => a.grid(),
        }
    }

    fn matches_theory(&self, t: Theory) -> bool {
        matches!(
            (self, t),
            (PhaseSpaceVariation::Cs { .. }, Theory::Cs)
                | (PhaseSpaceVariation::Tmym { .. }, Theory::Tmym)
                | (PhaseSpaceVariation::Ym { .. }, Theory::Ym)
        )
    }
}

/// ∫ δX^a δY^a wedge evaluated on (v, w): X(v)Y(w) − X(w)Y(v) with the
/// −2Tr color contraction.
fn wedge_fields(
    xv: &MatrixField,
    yw: &MatrixField,
    xw: &MatrixField,
    yv: &MatrixField,
) -> Complex64 {
    (integral_trace_product(xv, yw) - integral_trace_product(xw, yv)) * (-2.0)
}

/// Ω(v, w) in the theory's primary rendering.
pub fn symplectic_pairing(
    theory: Theory,
    k: i64,
    v: &PhaseSpaceVariation,
    w: &PhaseSpaceVariation,
) -> Result<Complex64, WzwError> {
    let (primary, _) = symplectic_renderings(theory, k, v, w)?;
    Ok(primary)
}

/// Ω(v, w) in both renderings: (direct form, split form). For CS the two
/// coincide by definition; for TMYM the split form uses the B/C coordinates
/// B = (A + "i-rotated" Ã)/2 mixing components; for YM it uses the
/// tilde/hat difference of two half CS-like parts.
pub fn symplectic_renderings(
    theory: Theory,
    k: i64,
    v: &PhaseSpaceVariation,
    w: &PhaseSpaceVariation,
) -> Result<(Complex64, Complex64), WzwError> {
    if !v.matches_theory(theory) || !w.matches_theory(theory) {
        return Err(WzwError::VariationTheoryMismatch);
    }
    if v.grid() != w.grid() {
        return Err(WzwError::MismatchedGrids);
    }
    let ik = Complex64::new(0.0, k as f64);
    match (v, w) {
        (PhaseSpaceVariation::Cs { a: va }, PhaseSpaceVariation::Cs { a: wa }) => {
            // Ω = (ik/2π) ∫ δA^a_z̄ δA^a_z
            let omega = wedge_fields(&va.zbar, &wa.z, &wa.zbar, &va.z) * ik / (2.0 * PI);
            Ok((omega, omega))
        }
        (
            PhaseSpaceVariation::Tmym { a: va, a_tilde: vt },
            PhaseSpaceVariation::Tmym { a: wa, a_tilde: wt },
        ) => {
            // Ω = (ik/4π) ∫ (δÃ^a_z̄ δA^a_z + δA^a_z̄ δÃ^a_z)
            let direct = (wedge_fields(&vt.zbar, &wa.z, &wt.zbar, &va.z)
                + wedge_fields(&va.zbar, &wt.z, &wa.zbar, &vt.z))
                * ik
                / (4.0 * PI);

            // B/C coordinates: B₁ = A₁, B₂ = Ã₂ and C₁ = Ã₁, C₂ = A₂;
            // Ω = (ik/4π) ∫ (δB^a_z̄ δB^a_z + δC^a_z̄ δC^a_z)
            let bc = |a: &FieldVariation, t: &FieldVariation| {
                let (a1, a2) = a.components();
                let (t1, t2) = t.components();
                let half_i = Complex64::new(0.0, 0.5);
                let b_z = a1.zip_map(&t2, |p, q| p.scale_re(0.5) - q.scale(half_i));
                let b_zbar = a1.zip_map(&t2, |p, q| p.scale_re(0.5) + q.scale(half_i));
                let c_z = t1.zip_map(&a2, |p, q| p.scale_re(0.5) - q.scale(half_i));
                let c_zbar = t1.zip_map(&a2, |p, q| p.scale_re(0.5) + q.scale(half_i));
                (b_z, b_zbar, c_z, c_zbar)
            };
            let (vbz, vbzb, vcz, vczb) = bc(va, vt);
            let (wbz, wbzb, wcz, wczb) = bc(wa, wt);
            let split = (wedge_fields(&vbzb, &wbz, &wbzb, &vbz)
                + wedge_fields(&vczb, &wcz, &wczb, &vcz))
                * ik
                / (4.0 * PI);
            Ok((direct, split))
        }
        (PhaseSpaceVariation::Ym { a: va, e: ve }, PhaseSpaceVariation::Ym { a: wa, e: we }) => {
            // Ω = (ik/4π) ∫ (δE^a_z̄ δA^a_z + δA^a_z̄ δE^a_z)
            let direct = (wedge_fields(&ve.zbar, &wa.z, &we.zbar, &va.z)
                + wedge_fields(&va.zbar, &we.z, &wa.zbar, &ve.z))
                * ik
                / (4.0 * PI);

            // Ã = A + E, Â = A − E; Ω = (ik/4π) ∫ (δÃ^a_z̄ δA^a_z − δA^a_z̄ δÂ^a_z)
            let tilde = |a: &FieldVariation, e: &FieldVariation| FieldVariation {
                z: a.z.zip_map(&e.z, |p, q| *p + *q),
                zbar: a.zbar.zip_map(&e.zbar, |p, q| *p + *q),
            };
            let hat = |a: &FieldVariation, e: &FieldVariation| FieldVariation {
                z: a.z.zip_map(&e.z, |p, q| *p - *q),
                zbar: a.zbar.zip_map(&e.zbar, |p, q| *p - *q),
            };
            let (vt, wt) = (tilde(va, ve), tilde(wa, we));
            let (vh, wh) = (hat(va, ve), hat(wa, we));
            let split = (wedge_fields(&vt.zbar, &wa.z, &wt.zbar, &va.z)
                - wedge_fields(&va.zbar, &wh.z, &wa.zbar, &vh.z))
                * ik
                / (4.0 * PI);
            Ok((direct, split))
        }
        _ => Err(WzwError::VariationTheoryMismatch),
    }
}

/// Random traceless variation direction for property tests and suites.
pub fn random_variation(
    grid: LatticeGrid,
    theory: Theory,
    seed: u64,
) -> Result<PhaseSpaceVariation, WzwError> {
    use super::field::{random_algebra_field, FieldClass};
    let part = |s: u64| -> Result<FieldVariation, WzwError> {
        FieldVariation::new(
            random_algebra_field(grid, FieldClass::Sl2c, 0.5, s)?,
            random_algebra_field(grid, FieldClass::Sl2c, 0.5, s.wrapping_add(1 << 32))?,
        )
    };
    Ok(match theory {
        Theory::Cs => PhaseSpaceVariation::Cs { a: part(seed)? },
        Theory::Tmym => PhaseSpaceVariation::Tmym {
            a: part(seed)?,
            a_tilde: part(seed.wrapping_add(7_777_777))?,
        },
        Theory::Ym => PhaseSpaceVariation::Ym {
            a: part(seed)?,
            e: part(seed.wrapping_add(7_777_777))?,
        },
    })
}
