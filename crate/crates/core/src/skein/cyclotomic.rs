//! Exact arithmetic in Z[A]/(A^N − 1) with N = 4(k+2), where
//! A = exp(iπ/(2(k+2))) is the level-k Kauffman variable.
//!
//! Skein sums at roots of unity suffer catastrophic cancellation in floats,
//! so the integer coefficient vector is the source of truth and complex
//! values are only a rendering.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::fmt;

/// An element of Z[A]/(A^N − 1), stored as the canonical reduced coefficient
/// vector `c[0] + c[1] A + … + c[N−1] A^{N−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnityScalar {
    coeffs: Vec<i64>,
}

impl RootOfUnityScalar {
    /// Modulus order for level `k`: N = 4(k+2).
    pub fn order_for_level(k: i64) -> usize {
        4 * (k as usize + 2)
    }

    pub fn zero(order: usize) -> Self {
        RootOfUnityScalar {
            coeffs: vec![0; order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0)
    }

    /// `A^e`, with `e` reduced mod N.
    pub fn monomial(order: usize, e: i64) -> Self {
        let mut coeffs = vec![0; order];
        coeffs[e.rem_euclid(order as i64) as usize] = 1;
        RootOfUnityScalar { coeffs }
    }

    /// `c · A^e`.
    pub fn term(order: usize, c: i64, e: i64) -> Self {
        let mut coeffs = vec![0; order];
        coeffs[e.rem_euclid(order as i64) as usize] = c;
        RootOfUnityScalar { coeffs }
    }

    /// The closed-loop factor d = −A² − A⁻².
    pub fn loop_factor(order: usize) -> Self {
        let mut d = Self::zero(order);
        d.add_term(-1, 2);
        d.add_term(-1, -2);
        d
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add_term(&mut self, c: i64, e: i64) {
        let n = self.coeffs.len() as i64;
        self.coeffs[e.rem_euclid(n) as usize] += c;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "mixed modulus orders");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        RootOfUnityScalar { coeffs }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "mixed modulus orders");
        let n = self.order();
        let mut coeffs = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let idx = (i + j) % n;
                coeffs[idx] += a * b;
            }
        }
        RootOfUnityScalar { coeffs }
    }

    pub fn scale(&self, c: i64) -> Self {
        RootOfUnityScalar {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Float rendering at A = exp(2πi/N).
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order() as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let theta = TAU * j as f64 / n;
                z += Complex64::new(theta.cos(), theta.sin()) * c as f64;
            }
        }
        z
    }
}

impl fmt::Display for RootOfUnityScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            match (a, j) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "A")?,
                (1, _) => write!(f, "A^{j}")?,
                (_, 1) => write!(f, "{a}A")?,
                (_, _) => write!(f, "{a}A^{j}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
