//! Exact unit-modulus phases, stored as rational multiples of 2π.

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::fmt;

/// A complex number of modulus one, `exp(2πi · turns)`, with `turns` kept as
/// an exact rational reduced into `[0, 1)`.
///
/// Multiplication of phases is addition of turns, so products of 't Hooft
/// exchange factors stay exact no matter how they are grouped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitPhase {
    turns: Rational64,
}

impl UnitPhase {
    pub fn one() -> Self {
        UnitPhase {
            turns: Rational64::zero(),
        }
    }

    /// Phase `exp(2πi · t)`, reduced mod 1.
    pub fn from_turns(t: Rational64) -> Self {
        let mut t = t.fract();
        if t < Rational64::zero() {
            t += Rational64::new(1, 1);
        }
        UnitPhase { turns: t }
    }

    /// Phase `exp(2πi · num/den)`.
    pub fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_turns(Rational64::new(num, den))
    }

    pub fn turns(&self) -> Rational64 {
        self.turns
    }

    pub fn is_one(&self) -> bool {
        self.turns.is_zero()
    }

    pub fn inverse(&self) -> Self {
        Self::from_turns(-self.turns)
    }

    pub fn pow(&self, n: i64) -> Self {
        Self::from_turns(self.turns * Rational64::new(n, 1))
    }

    pub fn to_complex(&self) -> Complex64 {
        let theta = TAU * (*self.turns.numer() as f64) / (*self.turns.denom() as f64);
        Complex64::new(theta.cos(), theta.sin())
    }
}

impl std::ops::Mul for UnitPhase {
    type Output = UnitPhase;
    fn mul(self, rhs: UnitPhase) -> UnitPhase {
        UnitPhase::from_turns(self.turns + rhs.turns)
    }
}

impl std::ops::MulAssign for UnitPhase {
    fn mul_assign(&mut self, rhs: UnitPhase) {
        *self = *self * rhs;
    }
}

impl fmt::Display for UnitPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp(2πi·{}/{})", self.turns.numer(), self.turns.denom())
    }
}
