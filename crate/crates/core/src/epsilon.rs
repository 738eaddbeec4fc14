//! Rationals extended by a positive infinitesimal.
//!
//! A value `s + k·ε` compares lexicographically: first by `s`, then by `k`.
//! Strict inequalities `x < c` become `x ≤ c − ε` without committing to a
//! numeric `ε`; a concrete value is substituted only when a solution is
//! turned into coordinates.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct EpsilonValue {
    pub standard: Rational,
    /// Coefficient of the infinitesimal. Integral for every constraint bound;
    /// only extent minimization produces fractions.
    pub infinitesimal: Rational,
}

impl EpsilonValue {
    pub fn new(standard: Rational, infinitesimal: i128) -> Self {
        EpsilonValue { standard, infinitesimal: int(infinitesimal) }
    }

    pub fn standard(standard: Rational) -> Self {
        EpsilonValue { standard, infinitesimal: Rational::zero() }
    }

    /// `k·ε`.
    pub fn epsilon(k: i128) -> Self {
        Self::new(Rational::zero(), k)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    /// Multiplies both parts by a rational.
    pub fn scale(self, factor: Rational) -> Self {
        EpsilonValue { standard: self.standard * factor, infinitesimal: self.infinitesimal * factor }
    }

    /// Substitutes a concrete value for `ε`.
    pub fn instantiate(&self, epsilon: Rational) -> Rational {
        self.standard + self.infinitesimal * epsilon
    }
}

impl Ord for EpsilonValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.standard.cmp(&other.standard).then(self.infinitesimal.cmp(&other.infinitesimal))
    }
}

impl PartialOrd for EpsilonValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for EpsilonValue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        EpsilonValue {
            standard: self.standard + rhs.standard,
            infinitesimal: self.infinitesimal + rhs.infinitesimal,
        }
    }
}

impl AddAssign for EpsilonValue {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for EpsilonValue {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for EpsilonValue {
    type Output = Self;
    fn neg(self) -> Self {
        EpsilonValue { standard: -self.standard, infinitesimal: -self.infinitesimal }
    }
}

impl From<Rational> for EpsilonValue {
    fn from(r: Rational) -> Self {
        Self::standard(r)
    }
}

impl fmt::Display for EpsilonValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, k) = (self.standard, self.infinitesimal);
        match (s.is_zero(), k.is_zero()) {
            (_, true) => write!(f, "{s}"),
            (true, false) => write!(f, "{k}ε"),
            (false, false) if k.is_negative() => write!(f, "{s} - {}ε", -k),
            (false, false) => write!(f, "{s} + {k}ε"),
        }
    }
}
