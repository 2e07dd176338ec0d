//! Genus-two curves `y² = x⁵ + λ4x⁴ + … + λ0`: Mumford divisors, Cantor's
//! group law, the `℘ij` values of a divisor, `Q(u, v)`, and the discrete
//! Toda checks on externally supplied `ψ` sequences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{QuadExt, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::toda::{CellCheck, CellReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus2Curve {
    lambda: [Rational; 5],
    f: UniPoly,
}

impl Genus2Curve {
    pub fn new(lambda: [Rational; 5]) -> Self {
        let mut c = lambda.to_vec();
        c.push(Rational::one());
        Genus2Curve {
            lambda,
            f: UniPoly::new(c),
        }
    }

    /// `y² = x⁵ − x + 1`.
    pub fn standard() -> Self {
        let z = Rational::zero;
        Genus2Curve::new([Rational::one(), Rational::from(-1), z(), z(), z()])
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    /// `λi` for `i ≤ 5`, with `λ5 = 1`.
    pub fn lambda(&self, i: usize) -> Rational {
        if i == 5 {
            Rational::one()
        } else {
            self.lambda[i].clone()
        }
    }

    pub fn is_square_free(&self) -> bool {
        self.f.is_square_free()
    }

    pub fn on_curve(&self, x: &Rational, y: &Rational) -> bool {
        &(y * y) == &self.f.eval(x)
    }
}

impl TryFrom<crate::curve::CurveSpec> for Genus2Curve {
    type Error = Error;
    fn try_from(s: crate::curve::CurveSpec) -> Result<Self> {
        if s.genus != 2 || s.lambda.len() != 5 {
            return Err(Error::InvalidArgument(
                "a genus-two curve needs genus 2 and five coefficients".into(),
            ));
        }
        let mut it = s.lambda.into_iter().map(|l| {
            l.ok_or_else(|| Error::Symbolic("genus-two coefficients must be numeric".into()))
        });
        let mut next = || it.next().unwrap();
        Ok(Genus2Curve::new([
            next()?,
            next()?,
            next()?,
            next()?,
            next()?,
        ]))
    }
}

impl fmt::Display for Genus2Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.f)
    }
}

/// A reduced divisor class `(u, v)`: `u` monic of degree ≤ 2, `deg v < deg u`,
/// `u | v² − f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MumfordDivisor {
    pub u: UniPoly,
    pub v: UniPoly,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DivisorRepr {
    /// Coefficients, constant term first.
    u: Vec<Rational>,
    v: Vec<Rational>,
}

impl Serialize for MumfordDivisor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DivisorRepr {
            u: self.u.coeffs().to_vec(),
            v: self.v.coeffs().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MumfordDivisor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DivisorRepr::deserialize(d)?;
        Ok(MumfordDivisor {
            u: UniPoly::new(r.u),
            v: UniPoly::new(r.v),
        })
    }
}

impl fmt::Display for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl MumfordDivisor {
    pub fn identity() -> Self {
        MumfordDivisor {
            u: UniPoly::one(),
            v: UniPoly::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.u == UniPoly::one() && self.v.is_zero()
    }

    pub fn degree(&self) -> usize {
        self.u.degree().unwrap_or(0)
    }

    /// Validates a pair as a reduced divisor on `curve`.
    pub fn new(curve: &Genus2Curve, u: UniPoly, v: UniPoly) -> Result<Self> {
        let du = u
            .degree()
            .ok_or_else(|| Error::InvalidArgument("u must be nonzero".into()))?;
        if du > 2 || u.lead() != Some(&Rational::one()) {
            return Err(Error::InvalidArgument(format!(
                "u = {u} must be monic of degree <= 2"
            )));
        }
        if !v.is_zero() && v.degree().unwrap() >= du.max(1) || (du == 0 && !v.is_zero()) {
            return Err(Error::InvalidArgument(format!(
                "deg v must be below deg u = {du}"
            )));
        }
        if !(&(&v * &v) - curve.f()).rem(&u)?.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "u = {u} does not divide v^2 - f"
            )));
        }
        Ok(MumfordDivisor { u, v })
    }

    /// The class of `P − ∞`.
    pub fn from_point(curve: &Genus2Curve, x: &Rational, y: &Rational) -> Result<Self> {
        if !curve.on_curve(x, y) {
            return Err(Error::NotOnCurve(format!("({x}, {y})")));
        }
        MumfordDivisor::new(curve, UniPoly::linear_root(x), UniPoly::constant(y.clone()))
    }

    /// The class of `P1 + P2 − 2∞` for points with distinct `x`.
    pub fn from_points(
        curve: &Genus2Curve,
        (x1, y1): (&Rational, &Rational),
        (x2, y2): (&Rational, &Rational),
    ) -> Result<Self> {
        if !curve.on_curve(x1, y1) || !curve.on_curve(x2, y2) {
            return Err(Error::NotOnCurve(format!("({x1}, {y1}), ({x2}, {y2})")));
        }
        let a = MumfordDivisor::from_point(curve, x1, y1)?;
        let b = MumfordDivisor::from_point(curve, x2, y2)?;
        if x1 == x2 {
            return Err(Error::InvalidArgument("points must have distinct x".into()));
        }
        cantor_add(curve, &a, &b)
    }

    pub fn neg(&self) -> Self {
        MumfordDivisor {
            u: self.u.clone(),
            v: -&self.v,
        }
    }
}

/// Composition followed by reduction.
pub fn cantor_add(
    curve: &Genus2Curve,
    a: &MumfordDivisor,
    b: &MumfordDivisor,
) -> Result<MumfordDivisor> {
    let f = curve.f();
    let (d1, e1, e2) = a.u.xgcd(&b.u);
    let (d, c1, c2) = d1.xgcd(&(&a.v + &b.v));
    let (s1, s2, s3) = (&c1 * &e1, &c1 * &e2, c2);
    let d2 = &d * &d;
    let mut u = (&a.u * &b.u).exact_div(&d2)?;
    let num = &(&(&s1 * &(&a.u * &b.v)) + &(&s2 * &(&b.u * &a.v))) + &(&s3 * &(&(&a.v * &b.v) + f));
    let mut v = num.exact_div(&d)?.rem(&u)?;
    while u.degree().unwrap_or(0) > 2 {
        let next = (f - &(&v * &v)).exact_div(&u)?.monic();
        v = (-&v).rem(&next)?;
        u = next;
    }
    let u = u.monic();
    let v = v.rem(&u)?;
    if !(&(&v * &v) - f).rem(&u)?.is_zero() {
        return Err(Error::Internal("cantor output fails u | v^2 - f".into()));
    }
    Ok(MumfordDivisor { u, v })
}

/// `k·D` by double-and-add.
pub fn cantor_mul(curve: &Genus2Curve, d: &MumfordDivisor, k: i64) -> Result<MumfordDivisor> {
    let mut base = if k < 0 { d.neg() } else { d.clone() };
    let mut acc = MumfordDivisor::identity();
    let mut n = k.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc = cantor_add(curve, &acc, &base)?;
        }
        base = cantor_add(curve, &base, &base)?;
        n >>= 1;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WpTriple {
    pub wp11: Rational,
    pub wp12: Rational,
    pub wp22: Rational,
}

/// `f(x, z) = Σ_{j=0}^{2} x^j z^j (λ_{2j+1}(x+z) + 2λ_{2j})` in terms of
/// `s = x + z`, `p = xz`.
fn f_sym(curve: &Genus2Curve, s: &Rational, p: &Rational) -> Rational {
    (0..3).rev().fold(Rational::zero(), |acc, j| {
        let term = &(&curve.lambda(2 * j + 1) * s) + &(&Rational::from(2) * &curve.lambda(2 * j));
        &(&acc * p) + &term
    })
}

fn generic_parts(d: &MumfordDivisor) -> Result<(Rational, Rational, Rational, Rational)> {
    match d.degree() {
        2 => {}
        k => {
            return Err(Error::UnsupportedPoint(format!(
                "divisor of degree {k} is outside the generic stratum"
            )))
        }
    }
    let s = -d.u.coeff(1);
    let p = d.u.coeff(0);
    let disc = &(&s * &s) - &(&Rational::from(4) * &p);
    if disc.is_zero() {
        return Err(Error::Domain("x1 = x2: degenerate divisor".into()));
    }
    Ok((s, p, d.v.coeff(1), d.v.coeff(0)))
}

/// `℘11, ℘12, ℘22` by symmetric functions of the roots of `u`.
pub fn wp_values(curve: &Genus2Curve, d: &MumfordDivisor) -> Result<WpTriple> {
    let (s, p, a, b) = generic_parts(d)?;
    // y1y2 = v(x1)v(x2) for v = ax + b
    let y1y2 = &(&(&(&a * &a) * &p) + &(&(&a * &b) * &s)) + &(&b * &b);
    let disc = &(&s * &s) - &(&Rational::from(4) * &p);
    let num = &f_sym(curve, &s, &p) - &(&Rational::from(2) * &y1y2);
    Ok(WpTriple {
        wp11: num.checked_div(&disc)?,
        wp12: p,
        wp22: s,
    })
}

/// Same triple computed from the roots `x1,2 = (s ± √disc)/2` in `Q(√disc)`.
///
/// Errors unless the result lands back in the rationals.
pub fn wp_values_split(curve: &Genus2Curve, d: &MumfordDivisor) -> Result<WpTriple> {
    let (s, p, _, _) = generic_parts(d)?;
    let r = &(&s * &s) - &(&Rational::from(4) * &p);
    let half = Rational::new(1, 2);
    let x1 = QuadExt::new(&s * &half, half.clone(), r.clone());
    let x2 = x1.conj();
    let k = |c: Rational| QuadExt::rational(c, r.clone());
    let y1 = d.v.eval_quad(&x1);
    let y2 = d.v.eval_quad(&x2);
    let mut fxz = k(Rational::zero());
    for j in 0..3u32 {
        let pj = (&x1 * &x2).pow(j);
        let inner = &(&k(curve.lambda(2 * j as usize + 1)) * &(&x1 + &x2))
            + &k(&Rational::from(2) * &curve.lambda(2 * j as usize));
        fxz = &fxz + &(&pj * &inner);
    }
    let diff = &x1 - &x2;
    let wp11 = (&fxz - &(&k(Rational::from(2)) * &(&y1 * &y2))).checked_div(&(&diff * &diff))?;
    let rational = |q: QuadExt, what: &str| {
        q.as_rational()
            .cloned()
            .ok_or_else(|| Error::Internal(format!("{what} = {q} is not in the base field")))
    };
    Ok(WpTriple {
        wp11: rational(wp11, "wp11")?,
        wp12: rational(&x1 * &x2, "wp12")?,
        wp22: rational(&x1 + &x2, "wp22")?,
    })
}

/// `−(℘11(u) − ℘11(v) + ℘12(u)℘22(v) − ℘12(v)℘22(u))`.
pub fn q_from_triples(u: &WpTriple, v: &WpTriple) -> Rational {
    let inner = &(&(&u.wp11 - &v.wp11) + &(&u.wp12 * &v.wp22)) - &(&v.wp12 * &u.wp22);
    -inner
}

pub fn q_function(
    curve: &Genus2Curve,
    du: &MumfordDivisor,
    dv: &MumfordDivisor,
) -> Result<Rational> {
    Ok(q_from_triples(
        &wp_values(curve, du)?,
        &wp_values(curve, dv)?,
    ))
}

/// A `ψ` sequence given by values at `n ≥ 0`, extended by `ψ_{−n} = −ψn`.
#[derive(Clone, Debug)]
pub struct ScalarSequence {
    values: Vec<QuadExt>,
}

impl ScalarSequence {
    pub fn new(values: Vec<QuadExt>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("empty sequence".into()));
        }
        let r = values
            .iter()
            .find(|v| !v.b.is_zero())
            .unwrap_or(&values[0])
            .r
            .clone();
        if values.iter().any(|v| !v.b.is_zero() && v.r != r) {
            return Err(Error::InvalidArgument(
                "sequence mixes two quadratic extensions".into(),
            ));
        }
        Ok(ScalarSequence {
            values: values.into_iter().map(|v| v.with_r(&r)).collect(),
        })
    }

    pub fn from_rationals(values: Vec<Rational>) -> Result<Self> {
        ScalarSequence::new(
            values
                .into_iter()
                .map(|v| QuadExt::rational(v, Rational::zero()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn at(&self, n: i64) -> Result<QuadExt> {
        let v = self
            .values
            .get(n.unsigned_abs() as usize)
            .ok_or(Error::IndexLimit {
                n,
                limit: self.values.len() - 1,
            })?;
        Ok(if n < 0 { -v } else { v.clone() })
    }
}

/// `ψ_{n+m}ψ_{m−n} = ψ_{m+1}ψ_{m−1}ψn² − ψ_{n+1}ψ_{n−1}ψm²`.
pub fn verify_rec_sequence(psis: &ScalarSequence, m: i64, n: i64) -> Result<bool> {
    let s = |k| psis.at(k);
    let lhs = &s(n + m)? * &s(m - n)?;
    let det = &(&(&s(m - 1)? * &s(n)?) * &(&s(m + 1)? * &s(n)?))
        - &(&(&s(m)? * &s(n + 1)?) * &(&s(m)? * &s(n - 1)?));
    Ok(lhs == det)
}

/// Which printed forms of the grid relation hold on the supplied data.
#[derive(Clone, Debug, Serialize)]
pub struct VariantMatch {
    /// `φ^{j+1}φ^{j−1} − c(1−δ²)φ² − δ²φ_{i+1}φ_{i−1} = 0`.
    pub delta_squared_form: bool,
    /// `δ⁻²φ^{j+1}φ^{j−1} + c(1−δ⁻²)φ² − φ_{i+1}φ_{i−1} = 0` with the same `c`.
    pub inverse_form_consistent_c: bool,
    /// The inverse form with `c(1−δ⁻²)` read as the value `ψ_{p+q}ψ_{p−q}/ψp²`.
    pub inverse_form_literal_constant: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Dtoda3Report {
    pub p: i64,
    pub q: i64,
    pub n0: i64,
    pub delta2: QuadExt,
    pub cd: QuadExt,
    pub c: QuadExt,
    pub grid: Vec<Vec<QuadExt>>,
    pub cells: CellReport,
    pub variants: VariantMatch,
}

/// Builds `φ_i^j = ψ_{n0+pi+qj}` over `0..rows × 0..cols` and checks the
/// inverse-δ grid relation on interior cells.
pub fn dtoda3_grid(
    psis: &ScalarSequence,
    (p, q, n0): (i64, i64, i64),
    rows: usize,
    cols: usize,
) -> Result<Dtoda3Report> {
    let pp = psis.at(p)?;
    let pq = psis.at(q)?;
    if pp.is_zero() || pq.is_zero() {
        return Err(Error::InvalidArgument(format!("psi{p} or psi{q} is zero")));
    }
    let r = pp.r.clone();
    let one = QuadExt::one_in(&r);
    let delta2 = (&pq * &pq).checked_div(&(&pp * &pp))?;
    let cd = (&psis.at(p + q)? * &psis.at(p - q)?).checked_div(&(&pp * &pp))?;
    let c = cd.checked_div(&(&one - &delta2))?;
    let inv_d2 = one.checked_div(&delta2)?;
    let c_inv = &c * &(&one - &inv_d2);
    let grid = (0..rows as i64)
        .map(|j| {
            (0..cols as i64)
                .map(|i| psis.at(n0 + p * i + q * j))
                .collect()
        })
        .collect::<Result<Vec<Vec<_>>>>()?;
    let at = |i: i64, j: i64| grid[j as usize][i as usize].clone();
    let mut cells = Vec::new();
    let (mut fwd, mut lit) = (true, true);
    for j in 1..rows as i64 - 1 {
        for i in 1..cols as i64 - 1 {
            let vert = &at(i, j + 1) * &at(i, j - 1);
            let horiz = &at(i + 1, j) * &at(i - 1, j);
            let sq = &at(i, j) * &at(i, j);
            let residual = &(&(&inv_d2 * &vert) + &(&c_inv * &sq)) - &horiz;
            fwd &= (&(&vert - &(&cd * &sq)) - &(&delta2 * &horiz)).is_zero();
            lit &= (&(&(&inv_d2 * &vert) + &(&cd * &sq)) - &horiz).is_zero();
            cells.push(CellCheck {
                i,
                j,
                ok: residual.is_zero(),
                residual,
                via_phi: true,
            });
        }
    }
    let cells = CellReport {
        equation: "delta^-2 phi(j+1) phi(j-1) + c(1-delta^-2) phi^2 - phi(i+1) phi(i-1) = 0",
        cells,
    };
    let variants = VariantMatch {
        delta_squared_form: fwd,
        inverse_form_consistent_c: cells.all_ok(),
        inverse_form_literal_constant: lit,
    };
    Ok(Dtoda3Report {
        p,
        q,
        n0,
        delta2,
        cd,
        c,
        grid,
        cells,
        variants,
    })
}
