//! Independent oracles for the integration tests. Nothing here calls into the
//! library's psi engine; values are computed from the textbook division
//! polynomial recursion with plain `num-rational` arithmetic.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `a + b·√r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub a: Q,
    pub b: Q,
    pub r: Q,
}

impl Surd {
    pub fn rat(a: Q, r: &Q) -> Self {
        Surd {
            a,
            b: Q::zero(),
            r: r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn inv(&self) -> Surd {
        let n = &self.a * &self.a - &self.r * &self.b * &self.b;
        Surd {
            a: &self.a / &n,
            b: -&self.b / &n,
            r: self.r.clone(),
        }
    }

    pub fn div(&self, o: &Surd) -> Surd {
        self * &o.inv()
    }

    pub fn sq(&self) -> Surd {
        self * self
    }

    pub fn cube(&self) -> Surd {
        &self.sq() * self
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, o: &Surd) -> Surd {
        Surd {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            r: self.r.clone(),
        }
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, o: &Surd) -> Surd {
        Surd {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            r: self.r.clone(),
        }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, o: &Surd) -> Surd {
        Surd {
            a: &self.a * &o.a + &self.r * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
            r: self.r.clone(),
        }
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            a: -&self.a,
            b: -&self.b,
            r: self.r.clone(),
        }
    }
}

/// Division polynomial values at `(x, y)` on `y² = x³ + l2·x² + l1·x + l0`,
/// in the normalization `ψ2 = −2y`, i.e. the textbook values at `(x, −y)`.
pub struct OracleSeq {
    memo: BTreeMap<i64, Surd>,
}

impl OracleSeq {
    pub fn new(l: [Q; 3], x: Q, y: Surd) -> Self {
        let [l0, l1, l2] = l;
        let r = y.r.clone();
        let c = |v: Q| Surd::rat(v, &r);
        let b2 = q(4, 1) * &l2;
        let b4 = q(2, 1) * &l1;
        let b6 = q(4, 1) * &l0;
        let b8 = q(4, 1) * &l2 * &l0 - &l1 * &l1;
        let xp = |k: u32| num_traits::pow(x.clone(), k as usize);
        // textbook convention at the point (x, −y)
        let ty = -&y;
        let psi2 = &c(q(2, 1)) * &ty;
        let psi3 = q(3, 1) * xp(4) + &b2 * xp(3) + q(3, 1) * &b4 * xp(2) + q(3, 1) * &b6 * &x + &b8;
        let inner = q(2, 1) * xp(6)
            + &b2 * xp(5)
            + q(5, 1) * &b4 * xp(4)
            + q(10, 1) * &b6 * xp(3)
            + q(10, 1) * &b8 * xp(2)
            + (&b2 * &b8 - &b4 * &b6) * &x
            + (&b4 * &b8 - &b6 * &b6);
        let psi4 = &psi2 * &c(inner);
        let mut memo = BTreeMap::new();
        memo.insert(0, c(Q::zero()));
        memo.insert(1, c(Q::one()));
        memo.insert(2, psi2);
        memo.insert(3, c(psi3));
        memo.insert(4, psi4);
        OracleSeq { memo }
    }

    pub fn at(&mut self, n: i64) -> Surd {
        if n < 0 {
            return -&self.at(-n);
        }
        if let Some(v) = self.memo.get(&n) {
            return v.clone();
        }
        let m = n / 2;
        let v = if n % 2 == 1 {
            &(&self.at(m + 2) * &self.at(m).cube()) - &(&self.at(m - 1) * &self.at(m + 1).cube())
        } else {
            let t = &(&self.at(m + 2) * &self.at(m - 1).sq())
                - &(&self.at(m - 2) * &self.at(m + 1).sq());
            (&self.at(m) * &t).div(&self.at(2))
        };
        self.memo.insert(n, v.clone());
        v
    }
}

/// Parses `"a"`, `"a/b"`.
pub fn qs(s: &str) -> Q {
    s.parse().unwrap()
}

pub fn f_at(l: &[Q; 3], x: &Q) -> Q {
    x * x * x + &l[2] * x * x + &l[1] * x + &l[0]
}

/// The oracle point `(x, θ)` with `θ² = f(x)`.
pub fn oracle_at(l: &[Q; 3], x: &Q) -> OracleSeq {
    let y = Surd {
        a: Q::zero(),
        b: Q::one(),
        r: f_at(l, x),
    };
    OracleSeq::new(l.clone(), x.clone(), y)
}
