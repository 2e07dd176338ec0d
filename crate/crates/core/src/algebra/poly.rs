use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// The fixed variable universe: the curve coordinate `x` and the curve
/// coefficients `λ0 … λ4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    L0,
    L1,
    L2,
    L3,
    L4,
}

pub const NVARS: usize = 6;

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::L0, Var::L1, Var::L2, Var::L3, Var::L4];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::L0 => "l0",
            Var::L1 => "l1",
            Var::L2 => "l2",
            Var::L3 => "l3",
            Var::L4 => "l4",
        }
    }

    /// `λ_i` for `i ≤ 4`.
    pub fn lambda(i: usize) -> Option<Var> {
        Var::ALL.get(i + 1).copied()
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "x" => Some(Var::X),
            "l0" | "λ0" | "lambda0" => Some(Var::L0),
            "l1" | "λ1" | "lambda1" => Some(Var::L1),
            "l2" | "λ2" | "lambda2" => Some(Var::L2),
            "l3" | "λ3" | "lambda3" => Some(Var::L3),
            "l4" | "λ4" | "lambda4" => Some(Var::L4),
            _ => None,
        }
    }
}

/// Exponent vector over [`Var::ALL`], ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Exponent-wise sum, panicking on `u32` overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = [0; NVARS];
        for (i, slot) in m.iter_mut().enumerate() {
            *slot = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow");
        }
        Monomial(m)
    }

    fn only_x(&self) -> bool {
        self.0[1..].iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                f.write_str(v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms live in a map keyed by graded-lex monomials and never store zero
/// coefficients, so equal polynomials have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        MultiPoly::constant(Rational::from(c))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn x() -> Self {
        MultiPoly::var(Var::X)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(&Monomial::one()))
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// True when no `λ` variable occurs.
    pub fn is_univariate_in_x(&self) -> bool {
        self.terms.keys().all(Monomial::only_x)
    }

    pub fn symbols(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.uses(v)).collect()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Self {
        let i = v.index();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.0[i] = e - 1;
            out.add_term(dm, &(c * Rational::from(e as i64)));
        }
        out
    }

    /// Substitutes a rational value for one variable.
    pub fn substitute(&self, v: Var, value: &Rational) -> Self {
        let i = v.index();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut rm = *m;
            rm.0[i] = 0;
            out.add_term(rm, &(c * value.pow(e)));
        }
        out
    }

    /// Substitutes a polynomial for one variable.
    pub fn compose(&self, v: Var, value: &MultiPoly) -> Self {
        let i = v.index();
        let max = self.degree_in(v).unwrap_or(0);
        let mut powers = vec![MultiPoly::one()];
        for k in 1..=max as usize {
            powers.push(&powers[k - 1] * value);
        }
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            let mut rm = *m;
            rm.0[i] = 0;
            out = &out + &(&powers[e] * &MultiPoly::term(c.clone(), rm));
        }
        out
    }

    /// Evaluates with every occurring variable bound.
    pub fn eval(&self, bind: impl Fn(Var) -> Option<Rational>) -> Result<Rational> {
        let mut vals: [Option<Rational>; NVARS] = Default::default();
        for v in self.symbols() {
            vals[v.index()] =
                Some(bind(v).ok_or_else(|| Error::Symbolic(format!("unbound {}", v.name())))?);
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    t *= &vals[v.index()].as_ref().unwrap().pow(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    pub fn to_univariate(&self) -> Result<UniPoly> {
        if !self.is_univariate_in_x() {
            return Err(Error::Symbolic(self.to_string()));
        }
        let deg = self.degree_in(Var::X).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            coeffs[m.exp(Var::X) as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn from_univariate(p: &UniPoly) -> Self {
        MultiPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var(Var::X, k as u32), c.clone())),
        )
    }

    /// The coefficient of `x^k`, a polynomial in the `λ`s.
    pub fn coeff_x(&self, k: u32) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().filter(|(m, _)| m.exp(Var::X) == k).map(
            |(m, c)| {
                let mut rm = *m;
                rm.0[0] = 0;
                (rm, c.clone())
            },
        ))
    }

    /// Division with remainder in `x`, for divisors whose leading
    /// `x`-coefficient is a nonzero rational constant.
    pub fn div_rem_x(&self, d: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        let dd = d.degree_in(Var::X).ok_or(Error::DivisionByZero)?;
        let lead = d.coeff_x(dd).constant_value().ok_or_else(|| {
            Error::InvalidArgument(format!("leading x-coefficient of {d} is not constant"))
        })?;
        let lead_inv = lead.recip()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some(rd) = rem.degree_in(Var::X) {
            if rd < dd || rem.is_zero() {
                break;
            }
            let c = rem.coeff_x(rd).scale(&lead_inv);
            let shift = MultiPoly::term(Rational::one(), Monomial::var(Var::X, rd - dd));
            let t = &c * &shift;
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Ok((quot, rem))
    }

    pub fn exact_div_x(&self, d: &MultiPoly) -> Result<MultiPoly> {
        let (q, r) = self.div_rem_x(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!("({self}) / ({d})")))
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One entry of the JSON term list.
#[derive(Serialize)]
struct TermJson<'a> {
    coeff: &'a Rational,
    powers: BTreeMap<&'static str, u32>,
}

impl Serialize for MultiPoly {
    /// Sorted term list, highest graded-lex term first.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms.iter().rev() {
            let powers = Var::ALL
                .into_iter()
                .filter(|&v| m.exp(v) > 0)
                .map(|v| (v.name(), m.exp(v)))
                .collect();
            seq.serialize_element(&TermJson { coeff: c, powers })?;
        }
        seq.end()
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        if self.is_univariate_in_x() && rhs.is_univariate_in_x() {
            let a = self.to_univariate().expect("univariate");
            let b = rhs.to_univariate().expect("univariate");
            return MultiPoly::from_univariate(&(&a * &b));
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { terms: acc }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Ring operations named as in the polynomial-arithmetic contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &MultiPoly, q: &MultiPoly, op: PolyOp) -> MultiPoly {
    match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    }
}

/// Multiplicity of `x0` as a root of a univariate polynomial in `x`.
pub fn root_multiplicity(p: &MultiPoly, x0: &Rational) -> Result<usize> {
    p.to_univariate()?.root_multiplicity(x0)
}

/// Rational roots (with multiplicities) of a univariate polynomial in `x`.
pub fn rational_roots(p: &MultiPoly) -> Result<Vec<(Rational, usize)>> {
    p.to_univariate()?.rational_roots()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn lam(i: usize) -> MultiPoly {
        MultiPoly::var(Var::lambda(i).unwrap())
    }

    #[test]
    fn difference_of_squares() {
        let x = MultiPoly::x();
        let one = MultiPoly::one();
        let p = poly_arith(&(&x + &one), &(&x - &one), PolyOp::Mul);
        assert_eq!(p, &x.pow(2) - &one);
    }

    #[test]
    fn self_cancellation() {
        let x = MultiPoly::x();
        let p = &(&x.pow(2).scale(&q(3, 1)) + &(&lam(2) * &x).scale(&q(2, 1))) + &lam(1);
        assert!(poly_arith(&p, &p, PolyOp::Sub).is_zero());
    }

    #[test]
    fn derivative_squared_of_generic_cubic() {
        let x = MultiPoly::x();
        let f = &(&(&x.pow(3) + &(&lam(2) * &x.pow(2))) + &(&lam(1) * &x)) + &lam(0);
        let fp = f.derivative(Var::X);
        // 9x^4 + 12 l2 x^3 + (4 l2^2 + 6 l1) x^2 + 4 l1 l2 x + l1^2, expanded by hand
        let expected = MultiPoly::int(9) * x.pow(4)
            + MultiPoly::int(12) * &lam(2) * x.pow(3)
            + (MultiPoly::int(4) * lam(2).pow(2) + MultiPoly::int(6) * lam(1)) * x.pow(2)
            + MultiPoly::int(4) * &lam(1) * &lam(2) * &x
            + lam(1).pow(2);
        assert_eq!(&fp * &fp, expected);
    }

    #[test]
    fn root_multiplicity_cases() {
        let x = MultiPoly::x();
        let p = x.pow(3) * (MultiPoly::one() + MultiPoly::int(3) * &x);
        assert_eq!(root_multiplicity(&p, &q(0, 1)).unwrap(), 3);
        assert_eq!(root_multiplicity(&MultiPoly::one(), &q(7, 2)).unwrap(), 0);
        assert!(root_multiplicity(&MultiPoly::zero(), &q(0, 1)).is_err());
        assert!(root_multiplicity(&lam(0), &q(0, 1)).is_err());
    }

    #[test]
    fn rational_root_cases() {
        let x = MultiPoly::x();
        let p = MultiPoly::int(3) * &x * (MultiPoly::one() + x.pow(3));
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![(q(-1, 1), 1), (q(0, 1), 1)]
        );
        assert!(rational_roots(&(x.pow(2) + MultiPoly::one()))
            .unwrap()
            .is_empty());
        let p = x.pow(2) * (&x + &MultiPoly::constant(q(1, 4)));
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![(q(-1, 4), 1), (q(0, 1), 2)]
        );
        assert!(rational_roots(&MultiPoly::zero()).is_err());
    }

    #[test]
    fn division_in_x_by_monic_cubic() {
        let x = MultiPoly::x();
        let f = &(&x.pow(3) + &(&lam(1) * &x)) + &lam(0);
        let g = &x.pow(2) - &lam(2);
        let prod = &f * &g;
        assert_eq!(prod.exact_div_x(&f).unwrap(), g);
        assert!((&prod + &MultiPoly::one()).exact_div_x(&f).is_err());
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial::var(Var::X, 2);
        let b = Monomial::var(Var::L0, 3);
        let c = Monomial::var(Var::L0, 2);
        assert!(a < b);
        assert!(c < a);
    }

    #[test]
    fn json_term_list() {
        let x = MultiPoly::x();
        let p = &(&x.pow(2).scale(&q(1, 2)) - &lam(0)) + &MultiPoly::int(1);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"[{"coeff":"1/2","powers":{"x":2}},{"coeff":"-1","powers":{"l0":1}},{"coeff":"1","powers":{}}]"#
        );
    }
}
