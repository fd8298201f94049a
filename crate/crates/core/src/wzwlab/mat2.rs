//! Dense 2×2 complex matrices with the closed-form exponential and
//! principal logarithm the lattice fields need.
//!
//! Everything here exploits Cayley-Hamilton for 2×2: a traceless M
//! satisfies M² = −det(M)·I, so exp and log reduce to scalar functions of
//! the eigenvalues with no iteration.

use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Row-major 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub e: [[Complex64; 2]; 2],
}

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2 {
            e: [[a, b], [c, d]],
        }
    }

    pub fn zero() -> Self {
        Mat2::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub fn identity() -> Self {
        Mat2::new(ONE, ZERO, ZERO, ONE)
    }

    /// Anti-Hermitian su(2) basis τ_a = iσ_a/2.
    pub fn su2_basis() -> [Mat2; 3] {
        let i = Complex64::new(0.0, 1.0);
        let h = 0.5;
        [
            // iσ₁/2
            Mat2::new(ZERO, i * h, i * h, ZERO),
            // iσ₂/2
            Mat2::new(ZERO, Complex64::new(h, 0.0), Complex64::new(-h, 0.0), ZERO),
            // iσ₃/2
            Mat2::new(i * h, ZERO, ZERO, -i * h),
        ]
    }

    /// Hermitian traceless basis σ_a/2.
    pub fn hermitian_basis() -> [Mat2; 3] {
        let i = Complex64::new(0.0, 1.0);
        Mat2::su2_basis().map(|t| t.scale(-i))
    }

    pub fn trace(&self) -> Complex64 {
        self.e[0][0] + self.e[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2 {
        Mat2::new(
            self.e[0][0].conj(),
            self.e[1][0].conj(),
            self.e[0][1].conj(),
            self.e[1][1].conj(),
        )
    }

    pub fn scale(&self, s: Complex64) -> Mat2 {
        Mat2::new(
            self.e[0][0] * s,
            self.e[0][1] * s,
            self.e[1][0] * s,
            self.e[1][1] * s,
        )
    }

    pub fn scale_re(&self, s: f64) -> Mat2 {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn inverse(&self) -> Option<Mat2> {
        let d = self.det();
        if d.norm() < 1e-300 {
            return None;
        }
        Some(Mat2::new(self.e[1][1], -self.e[0][1], -self.e[1][0], self.e[0][0]).scale(d.inv()))
    }

    pub fn commutator(&self, rhs: &Mat2) -> Mat2 {
        *self * *rhs - *rhs * *self
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.e
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Remove the trace part: M − (tr M / 2)·I.
    pub fn traceless_part(&self) -> Mat2 {
        let t = self.trace() * 0.5;
        Mat2::new(
            self.e[0][0] - t,
            self.e[0][1],
            self.e[1][0],
            self.e[1][1] - t,
        )
    }

    pub fn is_traceless(&self, tol: f64) -> bool {
        self.trace().norm() <= tol
    }

    /// exp(M) for traceless M: with λ² = −det M,
    /// exp(M) = cosh(λ)·I + sinch(λ)·M where sinch(λ) = sinh(λ)/λ.
    pub fn exp_traceless(&self) -> Mat2 {
        debug_assert!(self.is_traceless(1e-9 * (1.0 + self.norm())));
        let lam2 = -self.det();
        let lam = lam2.sqrt();
        let (c, s) = if lam.norm() < 1e-6 {
            // series: cosh = 1 + λ²/2 + λ⁴/24, sinch = 1 + λ²/6 + λ⁴/120
            (
                ONE + lam2 * 0.5 + lam2 * lam2 / 24.0,
                ONE + lam2 / 6.0 + lam2 * lam2 / 120.0,
            )
        } else {
            (lam.cosh(), lam.sinh() / lam)
        };
        Mat2::identity().scale(c) + self.scale(s)
    }

    /// Principal logarithm. Fails when an eigenvalue lies on the closed
    /// negative real axis, where the principal branch is undefined.
    pub fn principal_log(&self) -> Result<Mat2, LogBranchError> {
        let t = self.trace();
        let d = self.det();
        let disc = (t * t - d * 4.0).sqrt();
        let l1 = (t + disc) * 0.5;
        let l2 = (t - disc) * 0.5;
        for l in [l1, l2] {
            if l.re <= 0.0 && l.im.abs() <= 1e-12 * (1.0 + l.re.abs()) {
                return Err(LogBranchError);
            }
        }
        let scale = self.norm().max(1.0);
        let log = if (l1 - l2).norm() <= 1e-9 * scale {
            // repeated eigenvalue: M = λ(I + N) with N² = 0
            let l = t * 0.5;
            let n = (*self - Mat2::identity().scale(l)).scale(l.inv());
            Mat2::identity().scale(l.ln()) + n
        } else {
            // Lagrange interpolation of log on the two eigenvalues
            let coeff = (l1.ln() - l2.ln()) / (l1 - l2);
            (*self - Mat2::identity().scale(l2)).scale(coeff) + Mat2::identity().scale(l2.ln())
        };
        Ok(log)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogBranchError;

impl std::fmt::Display for LogBranchError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "field outside principal-log domain")
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, r: Mat2) -> Mat2 {
        Mat2::new(
            self.e[0][0] + r.e[0][0],
            self.e[0][1] + r.e[0][1],
            self.e[1][0] + r.e[1][0],
            self.e[1][1] + r.e[1][1],
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, r: Mat2) -> Mat2 {
        self + r.neg()
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale_re(-1.0)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, r: Mat2) -> Mat2 {
        let a = &self.e;
        let b = &r.e;
        Mat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}
