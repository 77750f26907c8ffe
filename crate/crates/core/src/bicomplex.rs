//! Bicomplex scalars `z₁ + i₂z₂` with exact Gaussian-rational parts.
//!
//! The stored form is the `(z₁, z₂)` pair. The idempotent coordinates
//! `(1ξ, 2ξ) = (z₁ − i₁z₂, z₁ + i₁z₂)` are derived on demand; in those
//! coordinates the ring operations act componentwise, and an element is
//! invertible exactly when both coordinates are nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bicomplex {
    pub z1: GaussianRational,
    pub z2: GaussianRational,
}

/// Where an element sits relative to the principal ideals `I₁ = ℂ₂e₁`
/// and `I₂ = ℂ₂e₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum SingularityClass {
    Zero,
    /// Nonzero element of `I₁` (second idempotent part vanishes).
    E1Line,
    /// Nonzero element of `I₂` (first idempotent part vanishes).
    E2Line,
    Invertible,
}

impl SingularityClass {
    pub fn is_singular(self) -> bool {
        self != SingularityClass::Invertible
    }
}

impl Bicomplex {
    pub fn new(z1: GaussianRational, z2: GaussianRational) -> Self {
        Bicomplex { z1, z2 }
    }

    /// `u₁ + u₂i₁ + u₃i₂ + u₄i₁i₂`.
    pub fn from_coeffs(u1: Rational, u2: Rational, u3: Rational, u4: Rational) -> Self {
        Bicomplex::new(GaussianRational::new(u1, u2), GaussianRational::new(u3, u4))
    }

    pub fn from_int_coeffs(u1: i64, u2: i64, u3: i64, u4: i64) -> Self {
        Bicomplex::new(GaussianRational::from_ints(u1, u2), GaussianRational::from_ints(u3, u4))
    }

    /// Embeds a complex number (`z₂ = 0`).
    pub fn from_complex(z: GaussianRational) -> Self {
        Bicomplex::new(z, GaussianRational::zero())
    }

    /// The four real coefficients `[u₁, u₂, u₃, u₄]`.
    pub fn coeffs(&self) -> [Rational; 4] {
        [self.z1.re.clone(), self.z1.im.clone(), self.z2.re.clone(), self.z2.im.clone()]
    }

    pub fn i1() -> Self {
        Bicomplex::from_int_coeffs(0, 1, 0, 0)
    }

    pub fn i2() -> Self {
        Bicomplex::from_int_coeffs(0, 0, 1, 0)
    }

    /// The hyperbolic unit `i₁i₂`.
    pub fn j() -> Self {
        Bicomplex::from_int_coeffs(0, 0, 0, 1)
    }

    /// `e₁ = (1 + i₁i₂)/2`.
    pub fn e1() -> Self {
        Bicomplex::from_idempotent(GaussianRational::one(), GaussianRational::zero())
    }

    /// `e₂ = (1 − i₁i₂)/2`.
    pub fn e2() -> Self {
        Bicomplex::from_idempotent(GaussianRational::zero(), GaussianRational::one())
    }

    /// First idempotent part `1ξ = z₁ − i₁z₂`.
    pub fn part1(&self) -> GaussianRational {
        &self.z1 - &self.z2.mul_i()
    }

    /// Second idempotent part `2ξ = z₁ + i₁z₂`.
    pub fn part2(&self) -> GaussianRational {
        &self.z1 + &self.z2.mul_i()
    }

    pub fn idempotent_parts(&self) -> (GaussianRational, GaussianRational) {
        let iz2 = self.z2.mul_i();
        (&self.z1 - &iz2, &self.z1 + &iz2)
    }

    /// Inverse of [`Bicomplex::idempotent_parts`]: `c1·e₁ + c2·e₂`.
    pub fn from_idempotent(c1: GaussianRational, c2: GaussianRational) -> Self {
        let z1 = (&c1 + &c2).half();
        // i₁(c1 − c2)/2
        let z2 = (&c1 - &c2).half().mul_i();
        Bicomplex::new(z1, z2)
    }

    pub fn singularity_class(&self) -> SingularityClass {
        let (p1, p2) = self.idempotent_parts();
        match (p1.is_zero(), p2.is_zero()) {
            (true, true) => SingularityClass::Zero,
            (false, true) => SingularityClass::E1Line,
            (true, false) => SingularityClass::E2Line,
            (false, false) => SingularityClass::Invertible,
        }
    }

    /// Membership in the singular set `O₂ = I₁ ∪ I₂`.
    pub fn is_singular(&self) -> bool {
        self.singularity_class().is_singular()
    }

    pub fn is_invertible(&self) -> bool {
        !self.is_singular()
    }

    /// `ξ ∈ I₁` (zero included).
    pub fn in_i1(&self) -> bool {
        self.part2().is_zero()
    }

    /// `ξ ∈ I₂` (zero included).
    pub fn in_i2(&self) -> bool {
        self.part1().is_zero()
    }

    /// Componentwise reciprocal in idempotent coordinates.
    pub fn inverse(&self) -> Result<Self> {
        let (p1, p2) = self.idempotent_parts();
        match (p1.inv(), p2.inv()) {
            (Some(q1), Some(q2)) => Ok(Bicomplex::from_idempotent(q1, q2)),
            _ => Err(Error::NotInvertible),
        }
    }

    /// Product with a complex scalar.
    pub fn scale(&self, k: &GaussianRational) -> Self {
        Bicomplex::new(k * &self.z1, k * &self.z2)
    }
}

impl Zero for Bicomplex {
    fn zero() -> Self {
        Bicomplex::new(GaussianRational::zero(), GaussianRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.z1.is_zero() && self.z2.is_zero()
    }
}

impl One for Bicomplex {
    fn one() -> Self {
        Bicomplex::from_complex(GaussianRational::one())
    }
}

impl<'a> Add<&'a Bicomplex> for &'a Bicomplex {
    type Output = Bicomplex;
    fn add(self, rhs: &Bicomplex) -> Bicomplex {
        Bicomplex::new(&self.z1 + &rhs.z1, &self.z2 + &rhs.z2)
    }
}

impl<'a> Sub<&'a Bicomplex> for &'a Bicomplex {
    type Output = Bicomplex;
    fn sub(self, rhs: &Bicomplex) -> Bicomplex {
        Bicomplex::new(&self.z1 - &rhs.z1, &self.z2 - &rhs.z2)
    }
}

impl<'a> Mul<&'a Bicomplex> for &'a Bicomplex {
    type Output = Bicomplex;
    /// `(z₁ + i₂z₂)(w₁ + i₂w₂) = (z₁w₁ − z₂w₂) + i₂(z₁w₂ + z₂w₁)`.
    fn mul(self, rhs: &Bicomplex) -> Bicomplex {
        Bicomplex::new(
            &(&self.z1 * &rhs.z1) - &(&self.z2 * &rhs.z2),
            &(&self.z1 * &rhs.z2) + &(&self.z2 * &rhs.z1),
        )
    }
}

impl Neg for &Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        Bicomplex::new(-&self.z1, -&self.z2)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Bicomplex {
            type Output = Bicomplex;
            fn $m(self, rhs: Bicomplex) -> Bicomplex {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Bicomplex> for Bicomplex {
            type Output = Bicomplex;
            fn $m(self, rhs: &Bicomplex) -> Bicomplex {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        -&self
    }
}

impl From<i64> for Bicomplex {
    fn from(v: i64) -> Self {
        Bicomplex::from_int_coeffs(v, 0, 0, 0)
    }
}

impl From<GaussianRational> for Bicomplex {
    fn from(z: GaussianRational) -> Self {
        Bicomplex::from_complex(z)
    }
}

/// Canonical literal `u₁+u₂i1+u₃i2+u₄i1i2`, zero terms omitted, `0` for zero.
impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const UNITS: [&str; 4] = ["", "i1", "i2", "i1i2"];
        let mut first = true;
        for (u, unit) in self.coeffs().iter().zip(UNITS) {
            if u.is_zero() {
                continue;
            }
            if u.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let mag = u.abs();
            if unit.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(unit)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
