//! Discrete Toda grids `φ_i^j = ψ_{n0+pi+qj}` and their exact verification.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Serialize, Serializer};

use crate::algebra::{QuadExt, Rational};
use crate::curve::{CurveElement, PointValue};
use crate::error::{Error, Result};
use crate::psi::PsiSequence;
use crate::valuation::PointSpec;

/// `ψn` evaluated at one point, cached per index.
pub struct PointPsi<'a> {
    seq: &'a PsiSequence,
    point: PointValue,
    cache: RefCell<BTreeMap<i64, QuadExt>>,
}

impl<'a> PointPsi<'a> {
    pub fn new(seq: &'a PsiSequence, point: PointValue) -> Self {
        PointPsi {
            seq,
            point,
            cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn point(&self) -> &PointValue {
        &self.point
    }

    pub fn at(&self, n: i64) -> Result<QuadExt> {
        if let Some(v) = self.cache.borrow().get(&n) {
            return Ok(v.clone());
        }
        let v = self.seq.curve().eval(&*self.seq.psi(n)?, &self.point)?;
        self.cache.borrow_mut().insert(n, v.clone());
        Ok(v)
    }

    pub fn r(&self) -> &Rational {
        &self.point.y.r
    }
}

/// The exact point named by a spec: a generic point, or a rational branch
/// point with `y = 0`.
pub fn point_value(curve: &crate::curve::EllipticCurve, spec: &PointSpec) -> Result<PointValue> {
    match spec {
        PointSpec::Generic { x, y: Some(y), .. } => PointValue::new(curve, x.clone(), y.clone()),
        PointSpec::Generic { x, y: None, sign } => curve.point_at_x(x.clone(), *sign),
        PointSpec::Branch {
            b: Some(b),
            factor: None,
        } => PointValue::new(curve, b.clone(), QuadExt::zero_in(&Rational::zero())),
        _ => Err(Error::UnsupportedPoint(
            "grid points must be finite with an explicit x".into(),
        )),
    }
}

/// Constants of one `(p, q, n0)` configuration at a point.
#[derive(Clone, Debug, Serialize)]
pub struct TodaParams {
    pub p: i64,
    pub q: i64,
    pub n0: i64,
    /// `δ² = (ψq/ψp)²`.
    pub delta2: QuadExt,
    /// `c(1 − δ²) = ψ_{p+q}ψ_{p−q}/ψp²`.
    pub cd: QuadExt,
}

impl TodaParams {
    pub fn new(values: &PointPsi, p: i64, q: i64, n0: i64) -> Result<Self> {
        if p < 1 || q < 1 || num_integer::Integer::gcd(&p, &q) != 1 {
            return Err(Error::InvalidArgument(format!(
                "(p, q) = ({p}, {q}) must be coprime positive integers"
            )));
        }
        let pp = values.at(p)?;
        let pq = values.at(q)?;
        if pp.is_zero() || pq.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "psi{p} or psi{q} vanishes at the point"
            )));
        }
        let pp2 = &pp * &pp;
        let delta2 = (&pq * &pq).checked_div(&pp2)?;
        let cd = (&values.at(p + q)? * &values.at(p - q)?).checked_div(&pp2)?;
        Ok(TodaParams {
            p,
            q,
            n0,
            delta2,
            cd,
        })
    }

    pub fn index(&self, i: i64, j: i64) -> i64 {
        self.n0 + self.p * i + self.q * j
    }

    /// `c = c(1 − δ²)/(1 − δ²)`.
    pub fn c(&self) -> Result<QuadExt> {
        let one = QuadExt::one_in(&self.delta2.r);
        let denom = &one - &self.delta2;
        if denom.is_zero() {
            return Err(Error::InvalidArgument(
                "delta^2 = 1 leaves c undefined".into(),
            ));
        }
        self.cd.checked_div(&denom)
    }
}

/// A grid entry: an exact value or the projective point at infinity.
#[derive(Clone, PartialEq, Eq)]
pub enum GridValue {
    Finite(QuadExt),
    Infinite,
}

impl GridValue {
    pub fn finite(&self) -> Option<&QuadExt> {
        match self {
            GridValue::Finite(v) => Some(v),
            GridValue::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, GridValue::Infinite)
    }
}

impl fmt::Display for GridValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridValue::Finite(v) => write!(f, "{v}"),
            GridValue::Infinite => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for GridValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GridValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GridValue::Finite(v) => v.serialize(s),
            GridValue::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Phi,
    U,
    V,
}

/// Entries indexed `[j][i]` over inclusive ranges.
#[derive(Clone, Debug, Serialize)]
pub struct TodaGrid {
    pub kind: GridKind,
    pub i_start: i64,
    pub j_start: i64,
    pub rows: Vec<Vec<GridValue>>,
}

impl TodaGrid {
    pub fn get(&self, i: i64, j: i64) -> Option<&GridValue> {
        let (di, dj) = (i - self.i_start, j - self.j_start);
        if di < 0 || dj < 0 {
            return None;
        }
        self.rows.get(dj as usize)?.get(di as usize)
    }

    pub fn i_range(&self) -> RangeInclusive<i64> {
        let w = self.rows.first().map_or(0, Vec::len) as i64;
        self.i_start..=self.i_start + w - 1
    }

    pub fn j_range(&self) -> RangeInclusive<i64> {
        self.j_start..=self.j_start + self.rows.len() as i64 - 1
    }

    fn from_fn(
        kind: GridKind,
        i_range: &RangeInclusive<i64>,
        j_range: &RangeInclusive<i64>,
        mut cell: impl FnMut(i64, i64) -> Result<GridValue>,
    ) -> Result<Self> {
        let rows = j_range
            .clone()
            .map(|j| i_range.clone().map(|i| cell(i, j)).collect())
            .collect::<Result<_>>()?;
        Ok(TodaGrid {
            kind,
            i_start: *i_range.start(),
            j_start: *j_range.start(),
            rows,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TodaGrids {
    pub params: TodaParams,
    pub phi: TodaGrid,
    pub u: TodaGrid,
    pub v: TodaGrid,
}

/// `num/den`, with `∞` for a nonzero over zero and an error for `0/0`.
fn ratio(num: &QuadExt, den: &QuadExt, i: i64, j: i64) -> Result<GridValue> {
    if den.is_zero() {
        if num.is_zero() {
            return Err(Error::IndeterminateCell {
                i,
                j,
                detail: "0/0 in U".into(),
            });
        }
        return Ok(GridValue::Infinite);
    }
    Ok(GridValue::Finite(num.checked_div(den)?))
}

/// `U` and `V` grids from an arbitrary `φ` function.
pub fn u_v_grids(
    params: &TodaParams,
    phi: impl Fn(i64, i64) -> Result<QuadExt>,
    i_range: &RangeInclusive<i64>,
    j_range: &RangeInclusive<i64>,
) -> Result<(TodaGrid, TodaGrid)> {
    let u = TodaGrid::from_fn(GridKind::U, i_range, j_range, |i, j| {
        let num = &phi(i + 1, j)? * &phi(i - 1, j)?;
        let p = phi(i, j)?;
        ratio(&num, &(&p * &p), i, j)
    })?;
    let c = params.c().ok();
    let v = TodaGrid::from_fn(GridKind::V, i_range, j_range, |i, j| {
        Ok(match (u.get(i, j).unwrap(), &c) {
            (GridValue::Finite(x), Some(c)) => GridValue::Finite(x - c),
            (GridValue::Finite(_), None) => {
                return Err(Error::InvalidArgument(
                    "delta^2 = 1 leaves c undefined".into(),
                ))
            }
            (GridValue::Infinite, _) => GridValue::Infinite,
        })
    })?;
    Ok((u, v))
}

pub fn phi_grid(
    values: &PointPsi,
    params: &TodaParams,
    i_range: &RangeInclusive<i64>,
    j_range: &RangeInclusive<i64>,
) -> Result<TodaGrid> {
    TodaGrid::from_fn(GridKind::Phi, i_range, j_range, |i, j| {
        values.at(params.index(i, j)).map(GridValue::Finite)
    })
}

pub fn build_grids(
    values: &PointPsi,
    params: &TodaParams,
    i_range: RangeInclusive<i64>,
    j_range: RangeInclusive<i64>,
) -> Result<TodaGrids> {
    let phi = phi_grid(values, params, &i_range, &j_range)?;
    let (u, v) = u_v_grids(
        params,
        |i, j| values.at(params.index(i, j)),
        &i_range,
        &j_range,
    )?;
    Ok(TodaGrids {
        params: params.clone(),
        phi,
        u,
        v,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CellCheck {
    pub i: i64,
    pub j: i64,
    pub residual: QuadExt,
    pub ok: bool,
    /// True when the cell was checked at the `φ` level because a `U`
    /// neighbour is infinite.
    pub via_phi: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellReport {
    pub equation: &'static str,
    pub cells: Vec<CellCheck>,
}

impl CellReport {
    pub fn all_ok(&self) -> bool {
        self.cells.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<(i64, i64)> {
        self.cells
            .iter()
            .filter(|c| !c.ok)
            .map(|c| (c.i, c.j))
            .collect()
    }
}

fn interior(r: RangeInclusive<i64>) -> RangeInclusive<i64> {
    r.start() + 1..=r.end() - 1
}

fn phi_residual(params: &TodaParams, phi: &TodaGrid, i: i64, j: i64) -> QuadExt {
    let at = |i, j| phi.get(i, j).and_then(GridValue::finite).unwrap().clone();
    let c = at(i, j);
    &(&(&at(i, j + 1) * &at(i, j - 1)) - &(&params.cd * &(&c * &c)))
        - &(&params.delta2 * &(&at(i + 1, j) * &at(i - 1, j)))
}

/// `φ^{j+1}φ^{j−1} − c(1−δ²)φ² − δ²φ_{i+1}φ_{i−1} = 0` on interior cells.
pub fn verify_dtoda_phi(params: &TodaParams, phi: &TodaGrid) -> CellReport {
    let mut cells = Vec::new();
    for j in interior(phi.j_range()) {
        for i in interior(phi.i_range()) {
            let residual = phi_residual(params, phi, i, j);
            cells.push(CellCheck {
                i,
                j,
                ok: residual.is_zero(),
                residual,
                via_phi: true,
            });
        }
    }
    CellReport {
        equation: "phi(j+1) phi(j-1) - c(1-delta^2) phi^2 - delta^2 phi(i+1) phi(i-1) = 0",
        cells,
    }
}

/// `(c+V)²(c+δ²V_{i+1})(c+δ²V_{i−1}) = (c+δ²V)²(c+V^{j+1})(c+V^{j−1})`.
///
/// Cells with an infinite neighbour fall back to the `φ` relation.
pub fn verify_dtoda_v(params: &TodaParams, grids: &TodaGrids) -> Result<CellReport> {
    let c = params.c()?;
    let d2 = &params.delta2;
    let v = &grids.v;
    let mut cells = Vec::new();
    for j in interior(v.j_range()) {
        for i in interior(v.i_range()) {
            let around = [(i, j), (i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)];
            let vals: Option<Vec<&QuadExt>> = around
                .iter()
                .map(|&(a, b)| v.get(a, b).and_then(GridValue::finite))
                .collect();
            let (residual, via_phi) = match vals {
                Some(w) => {
                    let cv = |x: &QuadExt| &c + x;
                    let cdv = |x: &QuadExt| &c + &(d2 * x);
                    let lhs = &(&cv(w[0]) * &cv(w[0])) * &(&cdv(w[1]) * &cdv(w[2]));
                    let rhs = &(&cdv(w[0]) * &cdv(w[0])) * &(&cv(w[3]) * &cv(w[4]));
                    (&lhs - &rhs, false)
                }
                None => (phi_residual(params, &grids.phi, i, j), true),
            };
            cells.push(CellCheck {
                i,
                j,
                ok: residual.is_zero(),
                residual,
                via_phi,
            });
        }
    }
    Ok(CellReport {
        equation: "(c+V)^2 (c+d2 V(i+1)) (c+d2 V(i-1)) = (c+d2 V)^2 (c+V(j+1)) (c+V(j-1))",
        cells,
    })
}

/// Whether `ψ_{p+q}ψ_{p−q} + ψp² − ψq²` vanishes at the point (`c = 1`).
pub fn check_c1(values: &PointPsi, p: i64, q: i64) -> Result<bool> {
    let v = &(&(&values.at(p + q)? * &values.at(p - q)?) + &values.at(p)?.pow(2))
        - &values.at(q)?.pow(2);
    Ok(v.is_zero())
}

/// `ψp²ψ_{N+q}ψ_{N−q} − ψq²ψ_{N+p}ψ_{N−p} − ψN²ψ_{p+q}ψ_{p−q}` as a ring element.
pub fn master_identity_residual(seq: &PsiSequence, p: i64, q: i64, n: i64) -> Result<CurveElement> {
    let c = seq.curve();
    let s = |k: i64| seq.psi(k);
    let a = c.mul(&c.square(&*s(p)?), &c.mul(&*s(n + q)?, &*s(n - q)?));
    let b = c.mul(&c.square(&*s(q)?), &c.mul(&*s(n + p)?, &*s(n - p)?));
    let rhs = c.mul(&c.square(&*s(n)?), &c.mul(&*s(p + q)?, &*s(p - q)?));
    Ok(&(&a - &b) - &rhs)
}

/// Which sign of the two-term eliminations holds for one `(p, q, N)`.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct EliminationReport {
    pub p: i64,
    pub q: i64,
    pub n: i64,
    /// `ψ_{N+p}ψ_{N−p} = ψN²ψ_{p+1}ψ_{p−1} − ψp²ψ_{N+1}ψ_{N−1}` (and for `q`).
    pub displayed_form_holds: bool,
    /// `ψ_{N+p}ψ_{N−p} = ψp²ψ_{N+1}ψ_{N−1} − ψN²ψ_{p+1}ψ_{p−1}` (and for `q`).
    pub expanded_form_holds: bool,
    /// `(ψ_{N+p}ψ_{N−p} − ψN²ψ_{p+1}ψ_{p−1})ψq² = (ψ_{N+q}ψ_{N−q} − ψN²ψ_{q+1}ψ_{q−1})ψp²`.
    pub minus_elimination_holds: bool,
    /// The same with `+ψN²ψ_{k+1}ψ_{k−1}` inside both brackets.
    pub plus_elimination_holds: bool,
}

pub fn elimination_report(seq: &PsiSequence, p: i64, q: i64, n: i64) -> Result<EliminationReport> {
    let c = seq.curve();
    let s = |k: i64| seq.psi(k).map(|e| e.as_ref().clone());
    let prod = |a: i64, b: i64| -> Result<CurveElement> { Ok(c.mul(&s(a)?, &s(b)?)) };
    let n2 = c.square(&s(n)?);
    let near = prod(n + 1, n - 1)?;
    let pair = |k: i64| -> Result<(CurveElement, CurveElement, CurveElement)> {
        Ok((prod(n + k, n - k)?, prod(k + 1, k - 1)?, c.square(&s(k)?)))
    };
    let (ap, bp, sp) = pair(p)?;
    let (aq, bq, sq) = pair(q)?;
    let displayed = |a: &CurveElement, b: &CurveElement, s2: &CurveElement| {
        (&(a - &c.mul(&n2, b)) + &c.mul(s2, &near)).is_zero()
    };
    let expanded = |a: &CurveElement, b: &CurveElement, s2: &CurveElement| {
        (&(a - &c.mul(s2, &near)) + &c.mul(&n2, b)).is_zero()
    };
    let elim = |sign: i64| {
        let k = Rational::from(sign);
        let lhs = c.mul(&(&ap + &c.mul(&n2, &bp).scale(&k)), &sq);
        let rhs = c.mul(&(&aq + &c.mul(&n2, &bq).scale(&k)), &sp);
        (&lhs - &rhs).is_zero()
    };
    Ok(EliminationReport {
        p,
        q,
        n,
        displayed_form_holds: displayed(&ap, &bp, &sp) && displayed(&aq, &bq, &sq),
        expanded_form_holds: expanded(&ap, &bp, &sp) && expanded(&aq, &bq, &sq),
        minus_elimination_holds: elim(-1),
        plus_elimination_holds: elim(1),
    })
}
