//! Group-valued lattice fields and the gauge fields derived from them.
//!
//! Random fields are exponentials of seeded low-frequency Fourier sums in
//! the algebra. Coefficients are drawn independently of the grid size, so
//! the same seed yields samples of the same smooth continuum field on every
//! grid; that is what makes grid-refinement studies meaningful.

use super::grid::{LatticeGrid, MatrixField};
use super::mat2::Mat2;
use super::WzwError;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Matrix class of a group field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldClass {
    Sl2c,
    PositiveHermitian,
    Su2,
}

/// A per-site group element field with unit determinant.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeGroupField {
    field: MatrixField,
    class: FieldClass,
}

impl LatticeGroupField {
    /// Wrap a matrix field, checking det = 1 at every site.
    pub fn new(field: MatrixField, class: FieldClass) -> Result<Self, WzwError> {
        let one = Complex64::new(1.0, 0.0);
        for (idx, m) in field.values().iter().enumerate() {
            if (m.det() - one).norm() > 1e-12 {
                return Err(WzwError::NotUnimodular { site: idx });
            }
        }
        Ok(LatticeGroupField { field, class })
    }

    pub fn constant(grid: LatticeGrid, m: Mat2, class: FieldClass) -> Result<Self, WzwError> {
        Self::new(MatrixField::constant(grid, m), class)
    }

    /// For fields knowingly off det = 1 by higher-order terms, such as
    /// (1+ε)U in variation checks.
    pub(crate) fn new_unchecked(field: MatrixField, class: FieldClass) -> Self {
        LatticeGroupField { field, class }
    }

    /// Sitewise exponential of a traceless algebra field.
    pub fn from_algebra(x: &MatrixField, class: FieldClass) -> Self {
        LatticeGroupField {
            field: x.map(Mat2::exp_traceless),
            class,
        }
    }

    pub fn grid(&self) -> LatticeGrid {
        self.field.grid()
    }

    pub fn class(&self) -> FieldClass {
        self.class
    }

    pub fn field(&self) -> &MatrixField {
        &self.field
    }

    pub fn values(&self) -> &[Mat2] {
        self.field.values()
    }

    /// Sitewise product, keeping the class only when it is closed under
    /// multiplication (SL2C, SU2); products of Hermitian fields are general.
    pub fn product(&self, rhs: &LatticeGroupField) -> LatticeGroupField {
        let class = if self.class == rhs.class && self.class != FieldClass::PositiveHermitian {
            self.class
        } else {
            FieldClass::Sl2c
        };
        LatticeGroupField {
            field: self.field.zip_map(&rhs.field, |a, b| *a * *b),
            class,
        }
    }

    /// Conjugate by a constant group element: g⁻¹ U g.
    pub fn conjugated(&self, g: &Mat2) -> LatticeGroupField {
        let gi = g.inverse().expect("singular conjugator");
        LatticeGroupField {
            field: self.field.map(|m| gi * *m * *g),
            class: self.class,
        }
    }

    pub fn max_unitarity_residual(&self) -> f64 {
        self.field
            .values()
            .iter()
            .map(|m| (*m * m.adjoint() - Mat2::identity()).norm())
            .fold(0.0, f64::max)
    }
}

const FREQ_CUTOFF: i64 = 2;

/// Seeded low-frequency algebra-valued field with spectral norm ≤ amplitude.
///
/// The field is Σ c_{p,q,a}·basis_a·cos(2π(px+qy)+θ), truncated at
/// |p|,|q| ≤ 2, rescaled by the analytic bound Σ|c|·‖basis_a‖ on the
/// spectral norm. The draw order is fixed, so values are deterministic per
/// seed and independent of the grid.
pub fn random_algebra_field(
    grid: LatticeGrid,
    class: FieldClass,
    amplitude: f64,
    seed: u64,
) -> Result<MatrixField, WzwError> {
    if !(amplitude > 0.0 && amplitude <= 1.0) {
        return Err(WzwError::AmplitudeOutOfRange(amplitude));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = match class {
        FieldClass::Su2 | FieldClass::Sl2c => Mat2::su2_basis(),
        FieldClass::PositiveHermitian => Mat2::hermitian_basis(),
    };
    struct Mode {
        p: f64,
        q: f64,
        phase: f64,
        coeff: Complex64,
        basis: usize,
    }
    let mut modes = Vec::new();
    let mut norm_bound = 0.0;
    for p in -FREQ_CUTOFF..=FREQ_CUTOFF {
        for q in -FREQ_CUTOFF..=FREQ_CUTOFF {
            for a in 0..3 {
                let re: f64 = rng.gen_range(-1.0..1.0);
                let im: f64 = rng.gen_range(-1.0..1.0);
                let phase: f64 = rng.gen_range(0.0..TAU);
                let coeff = match class {
                    // real coefficients keep the field anti-Hermitian (SU2)
                    // or Hermitian (PositiveHermitian)
                    FieldClass::Su2 | FieldClass::PositiveHermitian => Complex64::new(re, 0.0),
                    FieldClass::Sl2c => Complex64::new(re, im),
                };
                // each basis matrix has spectral norm 1/2
                norm_bound += coeff.norm() * 0.5;
                modes.push(Mode {
                    p: p as f64,
                    q: q as f64,
                    phase,
                    coeff,
                    basis: a,
                });
            }
        }
    }
    let scale = amplitude / norm_bound;
    Ok(MatrixField::from_fn(grid, |x, y| {
        let mut m = Mat2::zero();
        for mode in &modes {
            let c = (TAU * (mode.p * x + mode.q * y) + mode.phase).cos();
            m = m + basis[mode.basis].scale(mode.coeff * (c * scale));
        }
        m
    }))
}

/// Random group field: exp of [`random_algebra_field`].
pub fn random_field(
    grid: LatticeGrid,
    class: FieldClass,
    amplitude: f64,
    seed: u64,
) -> Result<LatticeGroupField, WzwError> {
    let x = random_algebra_field(grid, class, amplitude, seed)?;
    Ok(LatticeGroupField::from_algebra(&x, class))
}

/// Derived gauge field pair A_z̄ = −∂_z̄U·U⁻¹, 𝒜_z = −∂_zU·U⁻¹, traceless
/// at every site.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeGaugeField {
    a_z: MatrixField,
    a_zbar: MatrixField,
}

impl LatticeGaugeField {
    pub fn new(a_z: MatrixField, a_zbar: MatrixField) -> Result<Self, WzwError> {
        if a_z.grid() != a_zbar.grid() {
            return Err(WzwError::MismatchedGrids);
        }
        Ok(LatticeGaugeField { a_z, a_zbar })
    }

    /// Pair with a_z = −(a_z̄)†, the holomorphic partner a unitary U induces.
    pub fn conjugate_pair(a_zbar: MatrixField) -> Self {
        let a_z = a_zbar.map(|m| -m.adjoint());
        LatticeGaugeField { a_z, a_zbar }
    }

    pub fn grid(&self) -> LatticeGrid {
        self.a_z.grid()
    }

    pub fn a_z(&self) -> &MatrixField {
        &self.a_z
    }

    pub fn a_zbar(&self) -> &MatrixField {
        &self.a_zbar
    }
}

/// Karabali-Nair gauge fields of a group field, by central differences.
pub fn kn_fields(u: &LatticeGroupField) -> Result<LatticeGaugeField, WzwError> {
    let mut inverses = Vec::with_capacity(u.values().len());
    for (idx, m) in u.values().iter().enumerate() {
        inverses.push(m.inverse().ok_or(WzwError::SingularSite { site: idx })?);
    }
    let inv = MatrixField::new(u.grid(), inverses);
    let a_z = u
        .field()
        .dz()
        .zip_map(&inv, |d, i| (-(*d * *i)).traceless_part());
    let a_zbar = u
        .field()
        .dzbar()
        .zip_map(&inv, |d, i| (-(*d * *i)).traceless_part());
    Ok(LatticeGaugeField { a_z, a_zbar })
}

/// Max-norm of the discrete flatness combination
/// ∂_z A_z̄ − ∂_z̄ 𝒜_z + [𝒜_z, A_z̄].
pub fn flatness_residual(a: &LatticeGaugeField) -> f64 {
    let d1 = a.a_zbar.dz();
    let d2 = a.a_z.dzbar();
    let comm = a.a_z.zip_map(&a.a_zbar, |x, y| x.commutator(y));
    d1.zip_map(&d2, |p, q| *p - *q)
        .zip_map(&comm, |p, c| *p + *c)
        .max_norm()
}
