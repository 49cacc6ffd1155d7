use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numbers::{int_gcd_ext, Int};
use crate::ring::{BezoutDomain, GcdCert, RingKind, Shape};

impl BezoutDomain for Int {
    const KIND: RingKind = RingKind::Integers;

    fn zero_like(&self) -> Self {
        Int::zero()
    }

    fn one_like(&self) -> Self {
        Int::one()
    }

    fn from_int_like(&self, n: &Int) -> Self {
        n.clone()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn negate(&self) -> Self {
        -self
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn unit_inverse(&self) -> Result<Self> {
        if BezoutDomain::is_unit(self) {
            Ok(self.clone())
        } else {
            Err(Error::NotAUnit(self.to_string()))
        }
    }

    fn split_unit(&self) -> Result<(Self, Self)> {
        if self.is_negative() {
            Ok((-self, -Int::one()))
        } else {
            Ok((self.clone(), Int::one()))
        }
    }

    fn gcd_ext(&self, other: &Self) -> Result<GcdCert<Self>> {
        let (g, u, v) = int_gcd_ext(self, other);
        let (a1, b1) = if Zero::is_zero(&g) {
            (Int::zero(), Int::zero())
        } else {
            (self / &g, other / &g)
        };
        Ok(GcdCert { g, u, v, a1, b1 })
    }

    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if Zero::is_zero(divisor) {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.div_rem(divisor);
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(Error::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            })
        }
    }

    fn shape(&self) -> Result<Shape> {
        Ok(if Zero::is_zero(self) {
            Shape::Zero
        } else if BezoutDomain::is_unit(self) {
            Shape::Unit
        } else {
            Shape::Integer(self.abs())
        })
    }
}
