use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QuadExt, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upwards with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        UniPoly::new(v)
    }

    pub fn x() -> Self {
        UniPoly::monomial(Rational::one(), 1)
    }

    /// `x − a`.
    pub fn linear_root(a: &Rational) -> Self {
        UniPoly::new(vec![-a, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&l.recip().expect("nonzero lead")),
            None => UniPoly::zero(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_quad(&self, x: &QuadExt) -> QuadExt {
        self.coeffs
            .iter()
            .rev()
            .fold(QuadExt::zero_in(&x.r), |acc, c| {
                let mut v = &acc * x;
                v.a += c;
                v
            })
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(x + c)`.
    pub fn taylor_shift(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * c;
                a[j] += &t;
            }
        }
        UniPoly::new(a)
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.lead().unwrap().recip()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                let t = &c * di;
                rem[k + i] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!("{self} by {d}")))
        }
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn xgcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (UniPoly::zero(), UniPoly::zero(), UniPoly::zero()),
            Some(l) => {
                let inv = l.recip().expect("nonzero lead");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn is_square_free(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    pub fn square_free_part(&self) -> UniPoly {
        if self.is_constant() {
            return self.clone();
        }
        self.exact_div(&self.gcd(&self.derivative()))
            .expect("gcd divides")
    }

    /// Largest `k` with `g^k | self`; `g` must be non-constant.
    pub fn factor_multiplicity(&self, g: &UniPoly) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("root multiplicity"));
        }
        if g.is_constant() {
            return Err(Error::InvalidArgument(
                "multiplicity of a constant factor".into(),
            ));
        }
        let mut k = 0;
        let mut p = self.clone();
        loop {
            let (q, r) = p.div_rem(g)?;
            if !r.is_zero() {
                return Ok(k);
            }
            p = q;
            k += 1;
        }
    }

    /// Largest `k` with `(x − x0)^k | self`, by repeated synthetic division.
    pub fn root_multiplicity(&self, x0: &Rational) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("root multiplicity"));
        }
        let mut k = 0;
        let mut c = self.coeffs.clone();
        loop {
            // synthetic division by (x - x0)
            let mut carry = Rational::zero();
            let mut quot = vec![Rational::zero(); c.len().saturating_sub(1)];
            for i in (0..c.len()).rev() {
                let v = &c[i] + &(&carry * x0);
                if i == 0 {
                    carry = v;
                } else {
                    quot[i - 1] = v.clone();
                    carry = v;
                }
            }
            if !carry.is_zero() || quot.is_empty() {
                return Ok(k);
            }
            c = quot;
            k += 1;
        }
    }

    /// Integer coefficients `c` and a common denominator `d` with
    /// `self = c / d`.
    fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = Rational::lcm_denominators(self.coeffs.iter());
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }

    /// Primitive integer polynomial proportional to `self` with positive
    /// leading coefficient.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let den = Rational::lcm_denominators(self.coeffs.iter());
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !content.is_zero() {
            for c in &mut ints {
                *c = &*c / &content;
            }
        }
        if ints.last().is_some_and(|l| l.is_negative()) {
            for c in &mut ints {
                *c = -&*c;
            }
        }
        ints
    }

    /// All rational roots with multiplicities, ascending.
    ///
    /// Roots are isolated with a Sturm sequence of the square-free part; a
    /// rational root `p/q` of a primitive integer polynomial has `q` dividing
    /// the leading coefficient `a`, so `a·root` is an integer and every
    /// isolating interval narrower than `1/a` has at most two candidates.
    pub fn rational_roots(&self) -> Result<Vec<(Rational, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("rational roots"));
        }
        let mut roots = Vec::new();
        let zero_mult = self.root_multiplicity(&Rational::zero())?;
        let stripped = UniPoly::new(self.coeffs[zero_mult..].to_vec());
        if zero_mult > 0 {
            roots.push((Rational::zero(), zero_mult));
        }
        if stripped.degree().unwrap_or(0) == 0 {
            roots.sort();
            return Ok(roots);
        }
        let sf = stripped.square_free_part();
        let ints = sf.primitive_integer_coeffs();
        let lead = Rational::from(ints.last().unwrap().clone());
        let sf = UniPoly::new(ints.into_iter().map(Rational::from).collect());
        let chain = SturmChain::new(&sf);

        // Cauchy bound: every root lies strictly inside (-B, B).
        let bound = sf.coeffs.iter().map(|c| (c / &lead).abs()).max().unwrap() + Rational::one();
        let mut found = Vec::new();
        isolate(&sf, &chain, &lead, -&bound, bound, &mut found)?;
        for r in found {
            let m = stripped.root_multiplicity(&r)?;
            roots.push((r, m));
        }
        roots.sort();
        Ok(roots)
    }
}

struct SturmChain(Vec<UniPoly>);

impl SturmChain {
    fn new(p: &UniPoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero");
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        SturmChain(chain)
    }

    fn sign_changes(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.0 {
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_negative() {
                -1
            } else {
                1
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Distinct roots in `(lo, hi]`, valid when neither endpoint is a root.
    fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.sign_changes(lo).saturating_sub(self.sign_changes(hi))
    }
}

fn isolate(
    p: &UniPoly,
    chain: &SturmChain,
    lead: &Rational,
    lo: Rational,
    hi: Rational,
    out: &mut Vec<Rational>,
) -> Result<()> {
    let mut stack = vec![(lo, hi)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        let width = &hi - &lo;
        if n == 1 && (&width * lead) < Rational::one() {
            let start = (&lo * lead).ceil();
            let end = (&hi * lead).floor();
            let mut m = start;
            while m <= end {
                let cand = Rational::from(m.clone()) / lead;
                if cand > lo && cand <= hi && p.eval(&cand).is_zero() {
                    out.push(cand);
                }
                m += BigInt::one();
            }
            continue;
        }
        let mid = (&lo + &hi) / Rational::from(2);
        if p.eval(&mid).is_zero() {
            out.push(mid.clone());
            // carve out a root-free neighbourhood of mid
            let mut delta = &width / Rational::from(4);
            loop {
                let a = &mid - &delta;
                let b = &mid + &delta;
                if !p.eval(&a).is_zero() && !p.eval(&b).is_zero() && chain.count(&a, &b) == 1 {
                    stack.push((lo.clone(), a));
                    stack.push((b, hi.clone()));
                    break;
                }
                delta = delta / Rational::from(3);
            }
        } else {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    Ok(())
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
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
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        // multiply over the integers after clearing denominators, then
        // normalize each output coefficient once
        let (a, da) = self.integer_form();
        let (b, db) = rhs.integer_form();
        let den = &da * &db;
        let out = convolve(&a, &b);
        UniPoly::new(
            out.into_iter()
                .map(|c| Rational::new(c, den.clone()))
                .collect(),
        )
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Product of integer coefficient vectors, via Kronecker substitution for
/// large inputs so the big-integer library's fast multiplication applies.
fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len() + b.len() - 1;
    if a.len().min(b.len()) < 16 {
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        return out;
    }
    let bits = |v: &[BigInt]| v.iter().map(|c| c.bits()).max().unwrap_or(0);
    let slot = bits(a) + bits(b) + (a.len().min(b.len()) as u64).ilog2() as u64 + 2;
    let (ap, an) = split_signs(a);
    let (bp, bn) = split_signs(b);
    let pack = |v: &[BigInt]| -> BigInt {
        v.iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| (acc << slot) + c)
    };
    let unpack = |mut v: BigInt| -> Vec<BigInt> {
        let mask = (BigInt::one() << slot) - 1;
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            out.push(&v & &mask);
            v >>= slot;
        }
        out
    };
    let (pap, pan, pbp, pbn) = (pack(&ap), pack(&an), pack(&bp), pack(&bn));
    let pos = unpack(&pap * &pbp + &pan * &pbn);
    let neg = unpack(&pap * &pbn + &pan * &pbp);
    pos.into_iter().zip(neg).map(|(p, q)| p - q).collect()
}

fn split_signs(v: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    v.iter()
        .map(|c| {
            if c.is_negative() {
                (BigInt::zero(), -c)
            } else {
                (c.clone(), BigInt::zero())
            }
        })
        .unzip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        let d = UniPoly::from_ints(&[-1, 1]);
        let (qq, r) = p.div_rem(&d).unwrap();
        assert_eq!(qq, UniPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let g = p.gcd(&UniPoly::from_ints(&[1, 2, 1]));
        assert_eq!(g, UniPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn xgcd_identity() {
        let a = UniPoly::from_ints(&[1, 0, 3, 1]);
        let b = UniPoly::from_ints(&[2, -1, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let p = UniPoly::from_ints(&[3, -2, 0, 5]);
        let c = q(2, 3);
        let s = p.taylor_shift(&c);
        for x in [q(0, 1), q(1, 1), q(-5, 7)] {
            assert_eq!(s.eval(&x), p.eval(&(&x + &c)));
        }
    }

    #[test]
    fn multiplicities() {
        // x^3 (1 + 3x)
        let p = UniPoly::from_ints(&[0, 0, 0, 1, 3]);
        assert_eq!(p.root_multiplicity(&q(0, 1)).unwrap(), 3);
        assert_eq!(p.root_multiplicity(&q(-1, 3)).unwrap(), 1);
        assert_eq!(UniPoly::one().root_multiplicity(&q(5, 1)).unwrap(), 0);
        assert!(UniPoly::zero().root_multiplicity(&q(0, 1)).is_err());
    }

    #[test]
    fn rational_roots_small_cases() {
        // 3x(1 + x^3)
        let p = UniPoly::from_ints(&[0, 3, 0, 0, 3]);
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![(q(-1, 1), 1), (q(0, 1), 1)]
        );
        assert!(UniPoly::from_ints(&[1, 0, 1])
            .rational_roots()
            .unwrap()
            .is_empty());
        // x^2 (x + 1/4)
        let p = UniPoly::new(vec![q(0, 1), q(0, 1), q(1, 4), q(1, 1)]);
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![(q(-1, 4), 1), (q(0, 1), 2)]
        );
    }

    #[test]
    fn rational_roots_with_bisection_hits() {
        // roots exactly on bisection midpoints and clustered roots
        let p = &(&UniPoly::linear_root(&q(0, 1)) * &UniPoly::linear_root(&q(1, 1)))
            * &(&UniPoly::linear_root(&q(-1, 1)) * &UniPoly::linear_root(&q(1, 1000)));
        let p = &p * &UniPoly::from_ints(&[-2, 0, 1]);
        let roots = p.rational_roots().unwrap();
        assert_eq!(
            roots,
            vec![(q(-1, 1), 1), (q(0, 1), 1), (q(1, 1000), 1), (q(1, 1), 1)]
        );
    }

    #[test]
    fn packed_product_matches_schoolbook() {
        let a: Vec<Rational> = (0..40)
            .map(|k| q((k * 37 % 23) - 11, (k % 5) + 1))
            .collect();
        let b: Vec<Rational> = (0..33).map(|k| q(1 - (k * 19 % 29), 3 + k % 4)).collect();
        let mut naive = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                naive[i + j] += &(x * y);
            }
        }
        assert_eq!(&UniPoly::new(a) * &UniPoly::new(b), UniPoly::new(naive));
    }
}
