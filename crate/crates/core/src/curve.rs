//! The cubic `y² = x³ + λ2x² + λ1x + λ0` and its coordinate ring.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::parse::ExprContext;
use crate::algebra::{parse_expr, MultiPoly, QuadExt, Rational, UniPoly, Var};
use crate::error::{Error, Result};

/// A monic cubic curve. Each coefficient is either a rational number or the
/// free symbol `λi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurve {
    lambda: [Option<Rational>; 3],
    f: MultiPoly,
    f_prime: MultiPoly,
}

impl EllipticCurve {
    pub fn new(l0: Rational, l1: Rational, l2: Rational) -> Self {
        EllipticCurve::from_coeffs([Some(l0), Some(l1), Some(l2)])
    }

    /// Coefficients given as `None` stay symbolic.
    pub fn from_coeffs(lambda: [Option<Rational>; 3]) -> Self {
        let x = MultiPoly::x();
        let coeff = |i: usize| match &lambda[i] {
            Some(c) => MultiPoly::constant(c.clone()),
            None => MultiPoly::var(Var::lambda(i).unwrap()),
        };
        let f = x.pow(3) + coeff(2) * x.pow(2) + coeff(1) * &x + coeff(0);
        let f_prime = f.derivative(Var::X);
        EllipticCurve { lambda, f, f_prime }
    }

    /// The generic curve with all three coefficients symbolic.
    pub fn symbolic() -> Self {
        EllipticCurve::from_coeffs([None, None, None])
    }

    /// `y² = x³ + 1/4`.
    pub fn a1() -> Self {
        EllipticCurve::new(Rational::new(1, 4), Rational::zero(), Rational::zero())
    }

    /// `y² = x³ − x`.
    pub fn a2() -> Self {
        EllipticCurve::new(Rational::zero(), Rational::from(-1), Rational::zero())
    }

    /// `y² = x²(x + 1/4)`, a nodal cubic.
    pub fn a3() -> Self {
        EllipticCurve::new(Rational::zero(), Rational::zero(), Rational::new(1, 4))
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "a1" => Some(EllipticCurve::a1()),
            "a2" => Some(EllipticCurve::a2()),
            "a3" => Some(EllipticCurve::a3()),
            "symbolic" | "generic" => Some(EllipticCurve::symbolic()),
            _ => None,
        }
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    pub fn f_prime(&self) -> &MultiPoly {
        &self.f_prime
    }

    pub fn lambda(&self, i: usize) -> Option<&Rational> {
        self.lambda[i].as_ref()
    }

    pub fn is_symbolic(&self) -> bool {
        self.lambda.iter().any(Option::is_none)
    }

    /// `(λ0, λ1, λ2)` when all are numeric.
    pub fn numeric_lambdas(&self) -> Result<[Rational; 3]> {
        match &self.lambda {
            [Some(a), Some(b), Some(c)] => Ok([a.clone(), b.clone(), c.clone()]),
            _ => Err(Error::Symbolic(format!("curve y^2 = {}", self.f))),
        }
    }

    pub fn f_uni(&self) -> Result<UniPoly> {
        self.f.to_univariate()
    }

    pub fn f_at(&self, x0: &Rational) -> Result<Rational> {
        Ok(self.f_uni()?.eval(x0))
    }

    /// Rational roots of `f` with multiplicities.
    pub fn branch_points(&self) -> Result<Vec<(Rational, usize)>> {
        self.f_uni()?.rational_roots()
    }

    /// True when `f` has a repeated root.
    pub fn is_nodal(&self) -> Result<bool> {
        Ok(!self.f_uni()?.is_square_free())
    }

    /// The point with abscissa `x0` and `y0 = sign·θ`, `θ² = f(x0)`.
    pub fn point_at_x(&self, x0: Rational, sign: i8) -> Result<PointValue> {
        let r = self.f_at(&x0)?;
        let theta = QuadExt::theta(r);
        let y = if sign < 0 { -theta } else { theta };
        PointValue::new(self, x0, y)
    }

    pub fn element(&self, p: MultiPoly, q: MultiPoly) -> CurveElement {
        CurveElement { p, q }
    }

    /// `y` as a ring element.
    pub fn y(&self) -> CurveElement {
        CurveElement::new(MultiPoly::zero(), MultiPoly::one())
    }

    pub fn x(&self) -> CurveElement {
        CurveElement::from_p(MultiPoly::x())
    }

    /// Product with `y²` reduced to `f(x)`.
    pub fn mul(&self, a: &CurveElement, b: &CurveElement) -> CurveElement {
        let qq = &a.q * &b.q;
        CurveElement {
            p: &a.p * &b.p + &qq * &self.f,
            q: &a.p * &b.q + &a.q * &b.p,
        }
    }

    pub fn square(&self, a: &CurveElement) -> CurveElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &CurveElement, e: u32) -> CurveElement {
        let mut acc = CurveElement::one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// The derivation `2y·d/dx`: `D(P + Qy) = (2Q′f + Qf′) + 2P′y`.
    pub fn derive(&self, a: &CurveElement) -> CurveElement {
        let two = MultiPoly::int(2);
        let qd = a.q.derivative(Var::X);
        CurveElement {
            p: &two * &qd * &self.f + &a.q * &self.f_prime,
            q: &two * &a.p.derivative(Var::X),
        }
    }

    /// Exact division by `y`; fails unless `f` divides the `y`-free part.
    pub fn div_by_y(&self, a: &CurveElement) -> Result<CurveElement> {
        let (pf, rem) = a.p.div_rem_x(&self.f)?;
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!("({a}) / y")));
        }
        Ok(CurveElement {
            p: a.q.clone(),
            q: pf,
        })
    }

    /// Evaluates at a point, binding any numeric coefficients.
    pub fn eval(&self, a: &CurveElement, pt: &PointValue) -> Result<QuadExt> {
        let lambdas = self.numeric_lambdas()?;
        let bind = |v: Var| match v {
            Var::X => Some(pt.x.clone()),
            Var::L0 => Some(lambdas[0].clone()),
            Var::L1 => Some(lambdas[1].clone()),
            Var::L2 => Some(lambdas[2].clone()),
            _ => None,
        };
        let pv = a.p.eval(bind)?;
        let qv = a.q.eval(bind)?;
        let r = pt.y.r.clone();
        Ok(QuadExt::rational(pv, r.clone()) + pt.y.scale(&qv).with_r(&r))
    }

    /// Binds the symbolic coefficients of an element to this curve's values.
    pub fn specialize(&self, a: &CurveElement) -> CurveElement {
        let sub = |m: &MultiPoly| {
            let mut out = m.clone();
            for (i, l) in self.lambda.iter().enumerate() {
                if let Some(c) = l {
                    out = out.substitute(Var::lambda(i).unwrap(), c);
                }
            }
            out
        };
        CurveElement::new(sub(&a.p), sub(&a.q))
    }

    /// Parses an expression in `x`, `y` and the curve's `λ` symbols.
    pub fn parse_element(&self, s: &str) -> Result<CurveElement> {
        parse_expr(s)?.eval(&ElementContext::new(self))
    }
}

impl fmt::Display for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.f)
    }
}

/// Serialized form `{"genus": 1, "lambda": ["λ0", "λ1", "λ2"]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub genus: u8,
    pub lambda: Vec<Option<Rational>>,
}

impl From<&EllipticCurve> for CurveSpec {
    fn from(c: &EllipticCurve) -> Self {
        CurveSpec {
            genus: 1,
            lambda: c.lambda.to_vec(),
        }
    }
}

impl TryFrom<CurveSpec> for EllipticCurve {
    type Error = Error;
    fn try_from(s: CurveSpec) -> Result<Self> {
        if s.genus != 1 || s.lambda.len() != 3 {
            return Err(Error::InvalidArgument(
                "an elliptic curve needs genus 1 and three coefficients".into(),
            ));
        }
        let mut it = s.lambda.into_iter();
        Ok(EllipticCurve::from_coeffs([
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ]))
    }
}

/// `P(x) + Q(x)·y`, the canonical residue of a coordinate-ring element.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct CurveElement {
    #[serde(rename = "p_part")]
    pub p: MultiPoly,
    #[serde(rename = "q_part")]
    pub q: MultiPoly,
}

impl CurveElement {
    pub fn new(p: MultiPoly, q: MultiPoly) -> Self {
        CurveElement { p, q }
    }

    pub fn from_p(p: MultiPoly) -> Self {
        CurveElement::new(p, MultiPoly::zero())
    }

    pub fn zero() -> Self {
        CurveElement::default()
    }

    pub fn one() -> Self {
        CurveElement::from_p(MultiPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        CurveElement::from_p(MultiPoly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        CurveElement::new(self.p.scale(k), self.q.scale(k))
    }

    /// True when the element involves no `λ` symbol.
    pub fn is_numeric(&self) -> bool {
        self.p.is_univariate_in_x() && self.q.is_univariate_in_x()
    }
}

impl fmt::Display for CurveElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "({})*y", self.q),
            (false, false) => write!(f, "{} + ({})*y", self.p, self.q),
        }
    }
}

impl fmt::Debug for CurveElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&CurveElement> for &CurveElement {
    type Output = CurveElement;
    fn add(self, rhs: &CurveElement) -> CurveElement {
        CurveElement::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub<&CurveElement> for &CurveElement {
    type Output = CurveElement;
    fn sub(self, rhs: &CurveElement) -> CurveElement {
        CurveElement::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Neg for &CurveElement {
    type Output = CurveElement;
    fn neg(self) -> CurveElement {
        CurveElement::new(-&self.p, -&self.q)
    }
}

impl Add for CurveElement {
    type Output = CurveElement;
    fn add(self, rhs: CurveElement) -> CurveElement {
        &self + &rhs
    }
}

impl Sub for CurveElement {
    type Output = CurveElement;
    fn sub(self, rhs: CurveElement) -> CurveElement {
        &self - &rhs
    }
}

impl Neg for CurveElement {
    type Output = CurveElement;
    fn neg(self) -> CurveElement {
        -&self
    }
}

/// A point `(x0, y0)` with `y0² = f(x0)`; the sign of `y0` is part of it.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointValue {
    pub x: Rational,
    pub y: QuadExt,
}

impl PointValue {
    pub fn new(curve: &EllipticCurve, x: Rational, y: QuadExt) -> Result<Self> {
        let fx = curve.f_at(&x)?;
        let lhs = &y * &y;
        if lhs != QuadExt::rational(fx.clone(), y.r.clone()) {
            return Err(Error::NotOnCurve(format!("y^2 = {lhs} but f(x) = {fx}")));
        }
        Ok(PointValue { x, y })
    }

    /// The same abscissa on the opposite branch.
    pub fn conjugate(&self) -> Self {
        PointValue {
            x: self.x.clone(),
            y: -&self.y,
        }
    }
}

impl fmt::Debug for PointValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?})", self.x, self.y)
    }
}

/// Evaluates parsed expressions into ring elements; `psiN` resolves
/// through an optional lookup.
pub struct ElementContext<'a> {
    curve: &'a EllipticCurve,
    psi: Option<&'a dyn Fn(i64) -> Result<CurveElement>>,
}

impl<'a> ElementContext<'a> {
    pub fn new(curve: &'a EllipticCurve) -> Self {
        ElementContext { curve, psi: None }
    }

    pub fn with_psi(
        curve: &'a EllipticCurve,
        psi: &'a dyn Fn(i64) -> Result<CurveElement>,
    ) -> Self {
        ElementContext {
            curve,
            psi: Some(psi),
        }
    }
}

impl ExprContext for ElementContext<'_> {
    type Value = CurveElement;

    fn num(&self, c: &Rational) -> CurveElement {
        CurveElement::constant(c.clone())
    }

    fn sym(&self, name: &str) -> Result<CurveElement> {
        match name {
            "x" => Ok(self.curve.x()),
            "y" => Ok(self.curve.y()),
            _ => {
                let v = Var::from_name(name)
                    .filter(|v| *v != Var::X)
                    .ok_or_else(|| Error::Parse {
                        what: "curve expression",
                        detail: format!("unknown symbol {name}"),
                    })?;
                let i = v.index() - 1;
                Ok(match self.curve.lambda.get(i).cloned().flatten() {
                    Some(c) => CurveElement::constant(c),
                    None => CurveElement::from_p(MultiPoly::var(v)),
                })
            }
        }
    }

    fn psi(&self, n: i64) -> Result<CurveElement> {
        match self.psi {
            Some(f) => f(n),
            None => Err(Error::InvalidArgument(format!(
                "psi{n} is not defined here"
            ))),
        }
    }

    fn add(&self, a: &CurveElement, b: &CurveElement) -> CurveElement {
        a + b
    }

    fn sub(&self, a: &CurveElement, b: &CurveElement) -> CurveElement {
        a - b
    }

    fn mul(&self, a: &CurveElement, b: &CurveElement) -> CurveElement {
        self.curve.mul(a, b)
    }

    fn neg(&self, a: &CurveElement) -> CurveElement {
        -a
    }

    fn div(&self, a: &CurveElement, b: &CurveElement) -> Result<CurveElement> {
        match (b.p.constant_value(), b.q.is_zero()) {
            (Some(c), true) => Ok(a.scale(&c.recip()?)),
            _ => Err(Error::InvalidArgument(format!(
                "only division by constants is supported, got ({b})"
            ))),
        }
    }
}
