//! Division polynomials `ψn` as coordinate-ring elements.

use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::algebra::{parse_expr, MultiPoly, Rational, Var};
use crate::curve::{CurveElement, ElementContext, EllipticCurve};
use crate::error::{Error, Result};
use crate::listings;

pub const DEFAULT_MAX_N: usize = 64;
pub const DEFAULT_BK_MAX_N: usize = 8;

/// Memoized `n ↦ ψn` for one curve.
///
/// Entries are appended in order under a single write lock and never change
/// afterwards, so readers may share a sequence across threads.
#[derive(Debug)]
pub struct PsiSequence {
    curve: EllipticCurve,
    max_n: usize,
    memo: RwLock<Vec<Arc<CurveElement>>>,
}

impl PsiSequence {
    pub fn new(curve: EllipticCurve) -> Self {
        PsiSequence::with_limit(curve, DEFAULT_MAX_N)
    }

    pub fn with_limit(curve: EllipticCurve, max_n: usize) -> Self {
        let seeds = closed_forms(&curve);
        PsiSequence::from_seeds(curve, seeds, max_n)
    }

    /// A sequence whose `ψ3`, `ψ4` are replaced by the given elements; higher
    /// terms still come from the doubling recursion. Useful for tracing which
    /// seeds a reference table was generated from.
    pub fn with_seeds(curve: EllipticCurve, psi3: CurveElement, psi4: CurveElement) -> Self {
        let [p0, p1, p2, _, _] = closed_forms(&curve);
        PsiSequence::from_seeds(curve, [p0, p1, p2, psi3, psi4], DEFAULT_MAX_N)
    }

    fn from_seeds(curve: EllipticCurve, seeds: [CurveElement; 5], max_n: usize) -> Self {
        PsiSequence {
            curve,
            max_n: max_n.max(4),
            memo: RwLock::new(seeds.into_iter().map(Arc::new).collect()),
        }
    }

    pub fn curve(&self) -> &EllipticCurve {
        &self.curve
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `ψn`, with `ψ0 = 0` and `ψ−n = −ψn`.
    pub fn psi(&self, n: i64) -> Result<Arc<CurveElement>> {
        let k = n.unsigned_abs() as usize;
        if k > self.max_n {
            return Err(Error::IndexLimit {
                n,
                limit: self.max_n,
            });
        }
        self.fill(k)?;
        let e = self.memo.read().unwrap()[k].clone();
        Ok(if n < 0 { Arc::new(-e.as_ref()) } else { e })
    }

    fn fill(&self, k: usize) -> Result<()> {
        if self.memo.read().unwrap().len() > k {
            return Ok(());
        }
        let mut memo = self.memo.write().unwrap();
        while memo.len() <= k {
            let next = self.next_term(&memo)?;
            memo.push(Arc::new(next));
        }
        Ok(())
    }

    fn next_term(&self, memo: &[Arc<CurveElement>]) -> Result<CurveElement> {
        let c = &self.curve;
        let n = memo.len();
        let ps = |i: usize| memo[i].as_ref();
        let m = n / 2;
        if n % 2 == 1 {
            let a = c.mul(ps(m + 2), &c.pow(ps(m), 3));
            let b = c.mul(&c.pow(ps(m + 1), 3), ps(m - 1));
            Ok(&a - &b)
        } else {
            let inner =
                &c.mul(ps(m + 2), &c.square(ps(m - 1))) - &c.mul(&c.square(ps(m + 1)), ps(m - 2));
            let num = c.mul(ps(m), &inner);
            // divide by ψ2 = −2y
            c.div_by_y(&num)
                .map(|e| e.scale(&Rational::new(-1, 2)))
                .map_err(|e| Error::Internal(format!("psi{n}: division by psi2 failed: {e}")))
        }
    }

    /// `ψn` through the Hankel determinant of derivatives of `℘ = x`.
    pub fn psi_bk(&self, n: usize) -> Result<CurveElement> {
        psi_bk(&self.curve, n)
    }

    /// Checks `ψ_{n+m}ψ_{m−n} = ψ_{m+1}ψ_{m−1}ψn² − ψ_{n+1}ψ_{n−1}ψm²`.
    pub fn verify_recursion_identity(&self, m: i64, n: i64) -> Result<bool> {
        let c = &self.curve;
        let p = |k: i64| self.psi(k);
        let lhs = c.mul(&*p(n + m)?, &*p(m - n)?);
        let a = c.mul(&c.mul(&*p(m + 1)?, &*p(m - 1)?), &c.square(&*p(n)?));
        let b = c.mul(&c.mul(&*p(n + 1)?, &*p(n - 1)?), &c.square(&*p(m)?));
        Ok((&lhs - &(&a - &b)).is_zero())
    }

    pub fn check_structure(&self, n: usize) -> Result<StructureReport> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "structure check needs n >= 1".into(),
            ));
        }
        let e = self.psi(n as i64)?;
        let (part, stray) = if n % 2 == 1 {
            (&e.p, &e.q)
        } else {
            (&e.q, &e.p)
        };
        let degree = part.degree_in(Var::X).unwrap_or(0) as usize;
        let expected_degree = if n % 2 == 1 {
            (n * n - 1) / 2
        } else {
            (n * n - 4) / 2
        };
        let generic = self.curve.is_symbolic();
        let degree_ok = if generic {
            degree == expected_degree
        } else {
            degree <= expected_degree
        };
        Ok(StructureReport {
            n,
            parity_ok: stray.is_zero(),
            degree,
            expected_degree,
            generic,
            degree_ok,
        })
    }

    /// Whether `ψn` divides `ψm` for `n | m`, after removing `y` factors.
    pub fn check_divisibility(&self, n: usize, m: usize) -> Result<bool> {
        if n == 0 || m % n != 0 {
            return Err(Error::InvalidArgument(format!("{n} does not divide {m}")));
        }
        let pn = self.psi(n as i64)?;
        let pm = self.psi(m as i64)?;
        let strip = |e: &CurveElement, k: usize| if k % 2 == 1 { e.p.clone() } else { e.q.clone() };
        let (d, num) = (strip(&pn, n), strip(&pm, m));
        let (_, r) = num.div_rem_x(&d)?;
        Ok(r.is_zero())
    }

    /// `ψ_{p+q}ψ_{p−q} + ψp² − ψq²`, whose zeros are the points with `c = 1`.
    pub fn condition_polynomial(&self, p: i64, q: i64) -> Result<ConditionReport> {
        if !(p > q && q >= 1) || gcd(p, q) != 1 {
            return Err(Error::InvalidArgument(format!(
                "need p > q >= 1 coprime, got ({p}, {q})"
            )));
        }
        let c = &self.curve;
        let e = &(&c.mul(&*self.psi(p + q)?, &*self.psi(p - q)?) + &c.square(&*self.psi(p)?))
            - &c.square(&*self.psi(q)?);
        let degree = e.p.degree_in(Var::X).map(|d| d as usize);
        let roots = if e.is_numeric() && e.q.is_zero() && !e.p.is_zero() {
            Some(e.p.to_univariate()?.rational_roots()?)
        } else {
            None
        };
        Ok(ConditionReport {
            p,
            q,
            element: e,
            degree,
            rational_roots: roots,
        })
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

/// `ψ0 … ψ4` from the closed forms.
fn closed_forms(curve: &EllipticCurve) -> [CurveElement; 5] {
    let l = |i: usize| match curve.lambda(i) {
        Some(c) => MultiPoly::constant(c.clone()),
        None => MultiPoly::var(Var::lambda(i).unwrap()),
    };
    let (l0, l1, l2) = (l(0), l(1), l(2));
    let x = MultiPoly::x();
    let k = MultiPoly::int;
    let psi3 = k(3) * x.pow(4) + k(4) * &l2 * x.pow(3) + k(6) * &l1 * x.pow(2) + k(12) * &l0 * &x
        - l1.pow(2)
        + k(4) * &l2 * &l0;
    let psi4_inner = x.pow(6)
        + k(2) * &l2 * x.pow(5)
        + k(5) * &l1 * x.pow(4)
        + k(20) * &l0 * x.pow(3)
        + (k(20) * &l2 * &l0 - k(5) * l1.pow(2)) * x.pow(2)
        + (k(8) * l2.pow(2) * &l0 - k(2) * &l2 * l1.pow(2) - k(4) * &l1 * &l0) * &x
        + k(4) * &l2 * &l1 * &l0
        - l1.pow(3)
        - k(8) * l0.pow(2);
    [
        CurveElement::zero(),
        CurveElement::one(),
        CurveElement::new(MultiPoly::zero(), k(-2)),
        CurveElement::from_p(psi3),
        CurveElement::new(MultiPoly::zero(), k(-4) * psi4_inner),
    ]
}

/// Determinant of a square matrix of ring elements by Laplace expansion over
/// column subsets; uses no division.
pub fn det(curve: &EllipticCurve, m: &[Vec<CurveElement>]) -> CurveElement {
    let k = m.len();
    if k == 0 {
        return CurveElement::one();
    }
    let mut dp = vec![CurveElement::zero(); 1 << k];
    dp[0] = CurveElement::one();
    for mask in 0usize..(1 << k) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == k {
            continue;
        }
        for col in 0..k {
            if mask & (1 << col) != 0 || m[row][col].is_zero() {
                continue;
            }
            let above = (mask >> (col + 1)).count_ones();
            let term = curve.mul(&dp[mask], &m[row][col]);
            let slot = &mut dp[mask | (1 << col)];
            *slot = if above % 2 == 0 {
                &*slot + &term
            } else {
                &*slot - &term
            };
        }
    }
    dp.pop().unwrap()
}

pub fn psi_bk(curve: &EllipticCurve, n: usize) -> Result<CurveElement> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "the determinant formula needs n >= 2, got {n}"
        )));
    }
    // derivs[k] = ℘^(k), ℘' = D(x) = 2y
    let top = 2 * n - 3;
    let mut derivs = vec![curve.x(), curve.derive(&curve.x())];
    while derivs.len() <= top {
        let next = curve.derive(derivs.last().unwrap());
        derivs.push(next);
    }
    let size = n - 1;
    let h: Vec<Vec<CurveElement>> = (0..size)
        .map(|i| (0..size).map(|j| derivs[i + j + 1].clone()).collect())
        .collect();
    let d = det(curve, &h);
    let mut fact = Rational::one();
    let mut prod = Rational::one();
    for k in 1..n {
        fact = &fact * &Rational::from(k as i64);
        prod = &prod * &fact;
    }
    let sign = if (n - 1) % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    };
    Ok(d.scale(&(sign / (&prod * &prod))))
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct StructureReport {
    pub n: usize,
    pub parity_ok: bool,
    pub degree: usize,
    pub expected_degree: usize,
    pub generic: bool,
    pub degree_ok: bool,
}

impl StructureReport {
    pub fn ok(&self) -> bool {
        self.parity_ok && self.degree_ok
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub p: i64,
    pub q: i64,
    pub element: CurveElement,
    pub degree: Option<usize>,
    pub rational_roots: Option<Vec<(Rational, usize)>>,
}

/// The three preset curves with stored factored `ψ` listings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ListedCurve {
    A1,
    A2,
    A3,
}

impl ListedCurve {
    pub const ALL: [ListedCurve; 3] = [ListedCurve::A1, ListedCurve::A2, ListedCurve::A3];

    pub fn curve(self) -> EllipticCurve {
        match self {
            ListedCurve::A1 => EllipticCurve::a1(),
            ListedCurve::A2 => EllipticCurve::a2(),
            ListedCurve::A3 => EllipticCurve::a3(),
        }
    }

    pub fn listing(self) -> &'static [&'static str] {
        match self {
            ListedCurve::A1 => listings::CUBIC_QUARTER,
            ListedCurve::A2 => listings::CUBIC_MINUS_X,
            ListedCurve::A3 => listings::NODAL_QUARTER,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a1" => Some(ListedCurve::A1),
            "a2" => Some(ListedCurve::A2),
            "a3" => Some(ListedCurve::A3),
            _ => None,
        }
    }

    /// Expands the listing; `psiK` references resolve to earlier entries.
    pub fn expanded_listing(self) -> Result<Vec<CurveElement>> {
        let curve = self.curve();
        let mut out: Vec<CurveElement> = Vec::new();
        for src in self.listing() {
            let done = out.clone();
            let lookup = move |k: i64| -> Result<CurveElement> {
                match k {
                    0 => Ok(CurveElement::zero()),
                    k if k > 0 && (k as usize) <= done.len() => Ok(done[k as usize - 1].clone()),
                    _ => Err(Error::InvalidArgument(format!(
                        "psi{k} referenced before it is listed"
                    ))),
                }
            };
            let ctx = ElementContext::with_psi(&curve, &lookup);
            out.push(parse_expr(src)?.eval(&ctx)?);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ListingEntry {
    pub n: usize,
    pub matches: bool,
    pub expected: CurveElement,
    pub actual: CurveElement,
    /// `actual − expected`, empty when they agree.
    pub difference: CurveElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct ListingReport {
    pub curve: ListedCurve,
    pub entries: Vec<ListingEntry>,
}

impl ListingReport {
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(|e| e.matches)
    }

    pub fn mismatches(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| !e.matches)
            .map(|e| e.n)
            .collect()
    }
}

/// Regenerates `ψn` on a preset curve and compares with its listing.
pub fn check_appendix(which: ListedCurve) -> Result<ListingReport> {
    let expected = which.expanded_listing()?;
    let seq = PsiSequence::new(which.curve());
    let mut entries = Vec::new();
    for (i, exp) in expected.into_iter().enumerate() {
        let n = i + 1;
        let act = seq.psi(n as i64)?.as_ref().clone();
        let difference = &act - &exp;
        entries.push(ListingEntry {
            n,
            matches: difference.is_zero(),
            expected: exp,
            actual: act,
            difference,
        });
    }
    Ok(ListingReport {
        curve: which,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn small_indices() {
        let s = PsiSequence::new(EllipticCurve::symbolic());
        assert!(s.psi(0).unwrap().is_zero());
        assert_eq!(*s.psi(1).unwrap(), CurveElement::one());
        assert_eq!(*s.psi(-3).unwrap(), -s.psi(3).unwrap().as_ref());
        let c = s.curve();
        let expected = c
            .parse_element("3x^4 + 4 l2 x^3 + 6 l1 x^2 + 12 l0 x - l1^2 + 4 l2 l0")
            .unwrap();
        assert_eq!(*s.psi(3).unwrap(), expected);
    }

    #[test]
    fn psi5_on_cubic_quarter() {
        let c = EllipticCurve::a1();
        let s = PsiSequence::new(c.clone());
        let expected = c
            .parse_element("-1 - 25x^3 - 15x^6 + 95x^9 + 5x^12")
            .unwrap();
        assert_eq!(*s.psi(5).unwrap(), expected);
    }

    #[test]
    fn index_limit() {
        let s = PsiSequence::with_limit(EllipticCurve::a1(), 10);
        assert!(matches!(s.psi(11), Err(Error::IndexLimit { .. })));
    }

    #[test]
    fn determinant_formula_small_n() {
        let c = EllipticCurve::symbolic();
        let s = PsiSequence::new(c.clone());
        for n in 2..=4 {
            assert_eq!(psi_bk(&c, n).unwrap(), *s.psi(n as i64).unwrap(), "n = {n}");
        }
        // n = 3 equals 2 f f'' - f'^2
        let f = c.f();
        let fp = f.derivative(Var::X);
        let fpp = fp.derivative(Var::X);
        let alt = MultiPoly::int(2) * f * &fpp - &fp * &fp;
        assert_eq!(psi_bk(&c, 3).unwrap(), CurveElement::from_p(alt));
        assert!(psi_bk(&c, 1).is_err());
    }

    #[test]
    fn structure_and_divisibility() {
        let s = PsiSequence::new(EllipticCurve::symbolic());
        for n in 1..=6 {
            assert!(s.check_structure(n).unwrap().ok(), "n = {n}");
        }
        assert_eq!(s.check_structure(3).unwrap().degree, 4);
        assert_eq!(s.check_structure(4).unwrap().degree, 6);
        let a1 = PsiSequence::new(EllipticCurve::a1());
        assert!(a1.check_divisibility(3, 6).unwrap());
        assert!(a1.check_divisibility(5, 15).unwrap());
        assert!(a1.check_divisibility(4, 4).unwrap());
        assert!(!a1.check_divisibility(1, 1).is_err());
        assert!(a1.check_divisibility(4, 6).is_err());
    }

    #[test]
    fn condition_for_two_one() {
        let c = EllipticCurve::symbolic();
        let s = PsiSequence::new(c.clone());
        let r = s.condition_polynomial(2, 1).unwrap();
        let expected = &(&*s.psi(3).unwrap() + &CurveElement::from_p(c.f().scale(&q(4, 1))))
            - &CurveElement::one();
        assert_eq!(r.element, expected);
        assert_eq!(r.degree, Some(4));
        assert!(s.condition_polynomial(2, 2).is_err());
    }

    #[test]
    fn recursion_identity_small() {
        let s = PsiSequence::new(EllipticCurve::symbolic());
        assert!(s.verify_recursion_identity(3, 2).unwrap());
        assert!(s.verify_recursion_identity(2, 2).unwrap());
        let a2 = PsiSequence::new(EllipticCurve::a2());
        assert!(a2.verify_recursion_identity(5, 2).unwrap());
    }
}
