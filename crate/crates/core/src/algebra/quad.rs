use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// An element `a + b·θ` of the quadratic extension `Q(θ)`, `θ² = r`.
///
/// The extension is never collapsed: even when `r` is a perfect square the
/// value keeps its `θ` component, so branch choices stay explicit. Equality
/// is structural (`a`, `b` and `r` all agree).
///
/// Binary operations require both operands to live over the same `r`. A
/// value with `b = 0` is treated as a plain rational and adopts the other
/// operand's `r`; mixing two genuinely different extensions panics.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub r: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, r: Rational) -> Self {
        QuadExt { a, b, r }
    }

    /// A rational value living in the extension with defining value `r`.
    pub fn rational(a: Rational, r: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            r,
        }
    }

    /// `θ` itself.
    pub fn theta(r: Rational) -> Self {
        QuadExt {
            a: Rational::zero(),
            b: Rational::one(),
            r,
        }
    }

    pub fn zero_in(r: &Rational) -> Self {
        QuadExt::rational(Rational::zero(), r.clone())
    }

    pub fn one_in(r: &Rational) -> Self {
        QuadExt::rational(Rational::one(), r.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// `a − bθ`.
    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            r: self.r.clone(),
        }
    }

    /// `a² − b²r`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * &self.r
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadExt {
            a: &self.a * k,
            b: &self.b * k,
            r: self.r.clone(),
        }
    }

    /// Same value, possibly re-homed in another extension (only legal when
    /// `b = 0` or the defining values already agree).
    pub fn with_r(&self, r: &Rational) -> Self {
        assert!(
            self.b.is_zero() || &self.r == r,
            "cannot move a non-rational value between quadratic extensions"
        );
        QuadExt {
            a: self.a.clone(),
            b: self.b.clone(),
            r: r.clone(),
        }
    }

    fn common_r(&self, rhs: &QuadExt) -> Rational {
        if self.r == rhs.r {
            return self.r.clone();
        }
        match (self.b.is_zero(), rhs.b.is_zero()) {
            (true, false) => rhs.r.clone(),
            (false, true) => self.r.clone(),
            (true, true) => {
                if self.r.is_zero() {
                    rhs.r.clone()
                } else {
                    self.r.clone()
                }
            }
            (false, false) => panic!(
                "mixed quadratic extensions: theta^2 = {} vs {}",
                self.r, rhs.r
            ),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(QuadExt {
            a: c.a.checked_div(&n)?,
            b: c.b.checked_div(&n)?,
            r: self.r.clone(),
        })
    }

    pub fn checked_div(&self, rhs: &QuadExt) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QuadExt::one_in(&self.r);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let theta = format!("sqrt({})", self.r);
        let bpart = if self.b.is_one() {
            theta
        } else if (-&self.b).is_one() {
            format!("-{theta}")
        } else {
            format!("{}*{theta}", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{bpart}")
        } else if bpart.starts_with('-') {
            write!(f, "{} - {}", self.a, &bpart[1..])
        } else {
            write!(f, "{} + {bpart}", self.a)
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [theta^2 = {}]", self, self.r)
    }
}

impl Add<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            r: self.common_r(rhs),
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            r: self.common_r(rhs),
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let r = self.common_r(rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &r;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadExt { a, b, r }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            r: self.r.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
        impl $tr<QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$method(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn theta_squares_to_r() {
        let t = QuadExt::theta(q(-3, 4));
        assert_eq!(&t * &t, QuadExt::rational(q(-3, 4), q(-3, 4)));
    }

    #[test]
    fn perfect_square_is_not_collapsed() {
        let t = QuadExt::theta(q(4, 1));
        assert!(!t.is_rational());
        assert_ne!(t, QuadExt::rational(q(2, 1), q(4, 1)));
    }

    #[test]
    fn inverse_and_zero_norm() {
        let r = q(2, 1);
        let z = QuadExt::new(q(1, 1), q(1, 1), r.clone());
        let inv = z.inv().unwrap();
        assert_eq!(&z * &inv, QuadExt::one_in(&r));
        // 2 - 1·sqrt(4) has norm zero even though it is structurally nonzero
        let w = QuadExt::new(q(2, 1), q(1, 1), q(4, 1));
        assert_eq!(w.inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        let v = QuadExt::new(q(0, 1), q(-2, 1), q(-3, 4));
        assert_eq!(v.to_string(), "-2*sqrt(-3/4)");
        let w = QuadExt::new(q(1, 2), q(1, 1), q(5, 1));
        assert_eq!(w.to_string(), "1/2 + sqrt(5)");
    }

    #[test]
    #[should_panic(expected = "mixed quadratic extensions")]
    fn mixing_extensions_panics() {
        let _ = &QuadExt::theta(q(2, 1)) + &QuadExt::theta(q(3, 1));
    }
}
