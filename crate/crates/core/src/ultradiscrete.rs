//! Max-plus layer: `f` grids from valuations, the ultradiscrete Toda check,
//! a standalone evolver and the genericity audit.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::algebra::{ExtInt, Finite, PosInf};
use crate::curve::CurveElement;
use crate::error::{Error, Result};
use crate::psi::PsiSequence;
use crate::valuation::{val, ValuationPoint};

/// Which sign convention turns `g` second differences into `f`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FSign {
    /// `f = g_{i+1} − 2g_i + g_{i−1}`, which reproduces the stored reference grids.
    #[default]
    Difference,
    /// `f = −val(U)`, the negation of the above.
    NegatedValuation,
}

#[derive(Clone, Debug, Serialize)]
pub struct TropicalSource {
    pub p: i64,
    pub q: i64,
    pub n0: i64,
    pub point: String,
    /// `val(c(1−δ²)) = g_{p+q} + g_{p−q} − 2g_p`; the construction wants 0.
    pub val_cd: ExtInt,
    pub sign: FSign,
}

/// Extended-integer grid indexed `[j][i]`.
#[derive(Clone, Debug, Serialize)]
pub struct TropicalGrid {
    pub i_start: i64,
    pub j_start: i64,
    pub d: ExtInt,
    pub rows: Vec<Vec<ExtInt>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<TropicalSource>,
}

impl TropicalGrid {
    pub fn free(d: ExtInt, rows: Vec<Vec<ExtInt>>) -> Self {
        TropicalGrid {
            i_start: 0,
            j_start: 0,
            d,
            rows,
            source: None,
        }
    }

    pub fn get(&self, i: i64, j: i64) -> Option<ExtInt> {
        let (di, dj) = (i - self.i_start, j - self.j_start);
        if di < 0 || dj < 0 {
            return None;
        }
        self.rows.get(dj as usize)?.get(di as usize).copied()
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("j");
        for k in 0..self.width() {
            out.push_str(&format!(",i={}", self.i_start + k as i64));
        }
        out.push('\n');
        for (dj, row) in self.rows.iter().enumerate() {
            out.push_str(&(self.j_start + dj as i64).to_string());
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// `val ψn` memoised over the indices a grid touches.
struct GCache<'a> {
    seq: &'a PsiSequence,
    pt: &'a ValuationPoint,
    memo: std::collections::BTreeMap<i64, ExtInt>,
}

impl<'a> GCache<'a> {
    fn new(seq: &'a PsiSequence, pt: &'a ValuationPoint) -> Self {
        GCache {
            seq,
            pt,
            memo: Default::default(),
        }
    }

    fn g(&mut self, n: i64) -> Result<ExtInt> {
        if let Some(v) = self.memo.get(&n) {
            return Ok(*v);
        }
        let v = val(self.seq.curve(), &*self.seq.psi(n)?, self.pt)?;
        self.memo.insert(n, v);
        Ok(v)
    }
}

fn second_difference(a: ExtInt, b: ExtInt, c: ExtInt) -> Result<ExtInt> {
    a.try_sub(b.try_scale(2)?)?.try_add(c)
}

/// `d = −2(g_q − g_p)` and `val(c(1−δ²))` from a `g` lookup.
pub fn constants_from_g(
    mut g: impl FnMut(i64) -> Result<ExtInt>,
    p: i64,
    q: i64,
) -> Result<(ExtInt, ExtInt)> {
    let (gp, gq) = (g(p)?, g(q)?);
    let d = gq.try_sub(gp)?.try_scale(-2)?;
    let val_cd = g(p + q)?.try_add(g(p - q)?)?.try_sub(gp.try_scale(2)?)?;
    Ok((d, val_cd))
}

/// The `f` grid from any `g` lookup (`g(n) = val ψn`).
pub fn f_grid_from_g(
    mut g: impl FnMut(i64) -> Result<ExtInt>,
    (p, q, n0): (i64, i64, i64),
    i_range: RangeInclusive<i64>,
    j_range: RangeInclusive<i64>,
    sign: FSign,
) -> Result<(TropicalGrid, ExtInt)> {
    let (d, val_cd) = constants_from_g(&mut g, p, q)?;
    let mut rows = Vec::new();
    for j in j_range.clone() {
        let mut row = Vec::new();
        for i in i_range.clone() {
            let n = n0 + p * i + q * j;
            let v = second_difference(g(n + p)?, g(n)?, g(n - p)?).map_err(|e| {
                Error::IndeterminateCell {
                    i,
                    j,
                    detail: e.to_string(),
                }
            })?;
            row.push(match sign {
                FSign::Difference => v,
                FSign::NegatedValuation => -v,
            });
        }
        rows.push(row);
    }
    Ok((
        TropicalGrid {
            i_start: *i_range.start(),
            j_start: *j_range.start(),
            d,
            rows,
            source: None,
        },
        val_cd,
    ))
}

/// Valuation-seeded grid `f_i^j` at `pt`.
pub fn f_grid(
    seq: &PsiSequence,
    pt: &ValuationPoint,
    (p, q, n0): (i64, i64, i64),
    i_range: RangeInclusive<i64>,
    j_range: RangeInclusive<i64>,
    sign: FSign,
) -> Result<TropicalGrid> {
    let mut cache = GCache::new(seq, pt);
    let (mut grid, val_cd) = f_grid_from_g(|n| cache.g(n), (p, q, n0), i_range, j_range, sign)?;
    grid.source = Some(TropicalSource {
        p,
        q,
        n0,
        point: pt.to_string(),
        val_cd,
        sign,
    });
    Ok(grid)
}

#[derive(Clone, Debug, Serialize)]
pub struct UCell {
    pub i: i64,
    pub j: i64,
    pub lhs: ExtInt,
    pub rhs: ExtInt,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct UdteReport {
    /// Cells where every referenced entry is finite.
    pub checked: Vec<UCell>,
    /// Cells touching `±∞`, evaluated with `max(0, +∞) = +∞`.
    pub infinite: Vec<UCell>,
    /// Cells where `∞ − ∞` appears.
    pub indeterminate: Vec<(i64, i64)>,
}

impl UdteReport {
    pub fn all_ok(&self) -> bool {
        self.checked.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<(i64, i64)> {
        self.checked
            .iter()
            .filter(|c| !c.ok)
            .map(|c| (c.i, c.j))
            .collect()
    }
}

/// `max(0, f_{i+1}+d) − 2max(0, f_i+d) + max(0, f_{i−1}+d)`.
fn tropical_rhs(left: ExtInt, mid: ExtInt, right: ExtInt, d: ExtInt) -> Result<ExtInt> {
    let m = |x: ExtInt| x.try_add(d).map(ExtInt::pos_part);
    second_difference(m(right)?, m(mid)?, m(left)?)
}

/// `f^{j+1} − 2f^j + f^{j−1} = max(0,f_{i+1}+d) − 2max(0,f_i+d) + max(0,f_{i−1}+d)`.
pub fn verify_udte(grid: &TropicalGrid) -> UdteReport {
    let mut report = UdteReport::default();
    let (h, w) = (grid.rows.len() as i64, grid.width() as i64);
    for dj in 1..h - 1 {
        for di in 1..w - 1 {
            let (i, j) = (grid.i_start + di, grid.j_start + dj);
            let at = |a, b| grid.get(a, b).unwrap();
            let refs = [
                at(i, j),
                at(i, j + 1),
                at(i, j - 1),
                at(i + 1, j),
                at(i - 1, j),
            ];
            let lhs = second_difference(refs[1], refs[0], refs[2]);
            let rhs = tropical_rhs(refs[4], refs[0], refs[3], grid.d);
            match (lhs, rhs) {
                (Ok(lhs), Ok(rhs)) => {
                    let cell = UCell {
                        i,
                        j,
                        lhs,
                        rhs,
                        ok: lhs == rhs,
                    };
                    if refs.iter().all(|v| v.is_finite()) && grid.d.is_finite() {
                        report.checked.push(cell);
                    } else {
                        report.infinite.push(cell);
                    }
                }
                _ => report.indeterminate.push((i, j)),
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Boundary {
    /// Pinned ghost columns on both sides.
    Fixed {
        left: ExtInt,
        right: ExtInt,
    },
    Periodic,
}

/// Runs the explicit update from two seed rows.
///
/// The result holds the seed rows followed by `steps` new rows.
pub fn evolve(
    prev: &[ExtInt],
    cur: &[ExtInt],
    d: ExtInt,
    steps: usize,
    boundary: Boundary,
) -> Result<TropicalGrid> {
    if prev.len() != cur.len() || cur.is_empty() {
        return Err(Error::InvalidArgument(
            "seed rows must be non-empty and of equal length".into(),
        ));
    }
    let n = cur.len();
    let mut rows = vec![prev.to_vec(), cur.to_vec()];
    for step in 0..steps {
        let (a, b) = (&rows[step], &rows[step + 1]);
        let side = |k: isize| -> ExtInt {
            match boundary {
                Boundary::Periodic => b[k.rem_euclid(n as isize) as usize],
                Boundary::Fixed { left, .. } if k < 0 => left,
                Boundary::Fixed { right, .. } if k >= n as isize => right,
                Boundary::Fixed { .. } => b[k as usize],
            }
        };
        let next = (0..n)
            .map(|i| {
                let k = i as isize;
                let rhs = tropical_rhs(side(k - 1), b[i], side(k + 1), d)?;
                b[i].try_scale(2)?.try_sub(a[i])?.try_add(rhs)
            })
            .enumerate()
            .map(|(i, r)| {
                r.map_err(|e| Error::IndeterminateCell {
                    i: i as i64,
                    j: step as i64 + 2,
                    detail: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(next);
    }
    Ok(TropicalGrid::free(d, rows))
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericityCell {
    pub i: i64,
    pub j: i64,
    /// `val(c(1−δ²))`.
    pub k: ExtInt,
    /// `val(δ²U)`.
    pub m: ExtInt,
    /// `val(c(1−δ²) + δ²U)`, computed from the numerator element.
    pub val_sum: ExtInt,
    pub flagged: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct GenericityReport {
    pub cells: Vec<GenericityCell>,
    /// Cells with `φ_i^j = 0`, where `U` is not a finite quantity.
    pub skipped: Vec<(i64, i64)>,
}

impl GenericityReport {
    pub fn flagged(&self) -> Vec<(i64, i64)> {
        self.cells
            .iter()
            .filter(|c| c.flagged)
            .map(|c| (c.i, c.j))
            .collect()
    }
}

/// Audits `val(c(1−δ²) + δ²U) = min(val c(1−δ²), val δ²U)` cell by cell.
///
/// The sum is `[ψ_{p+q}ψ_{p−q}φ² + ψq²φ_{i+1}φ_{i−1}] / (ψp²φ²)`; its
/// numerator is valued directly as a ring element.
pub fn genericity_check(
    seq: &PsiSequence,
    pt: &ValuationPoint,
    (p, q, n0): (i64, i64, i64),
    i_range: RangeInclusive<i64>,
    j_range: RangeInclusive<i64>,
) -> Result<GenericityReport> {
    let curve = seq.curve();
    let mut cache = GCache::new(seq, pt);
    let (gp, gq) = (cache.g(p)?, cache.g(q)?);
    let k = cache
        .g(p + q)?
        .try_add(cache.g(p - q)?)?
        .try_sub(gp.try_scale(2)?)?;
    let val_d2 = gq.try_sub(gp)?.try_scale(2)?;
    let cd_num = curve.mul(&*seq.psi(p + q)?, &*seq.psi(p - q)?);
    let q2 = curve.square(&*seq.psi(q)?);
    let mut report = GenericityReport::default();
    for j in j_range {
        for i in i_range.clone() {
            let n = n0 + p * i + q * j;
            let g = cache.g(n)?;
            if g == PosInf {
                report.skipped.push((i, j));
                continue;
            }
            let m = val_d2.try_add(second_difference(cache.g(n + p)?, g, cache.g(n - p)?)?)?;
            let phi2 = curve.square(&*seq.psi(n)?);
            let side = curve.mul(&*seq.psi(n + p)?, &*seq.psi(n - p)?);
            let num: CurveElement = &curve.mul(&cd_num, &phi2) + &curve.mul(&q2, &side);
            let denom = gp.try_scale(2)?.try_add(g.try_scale(2)?)?;
            let val_sum = val(curve, &num, pt)?.try_sub(denom)?;
            report.cells.push(GenericityCell {
                i,
                j,
                k,
                m,
                val_sum,
                flagged: val_sum > k.min(m),
            });
        }
    }
    Ok(report)
}

/// Parses a row such as `[2, "-2", "inf"]` or `2,-2,inf`.
pub fn parse_row(s: &str) -> Result<Vec<ExtInt>> {
    let t = s.trim();
    if t.starts_with('[') {
        return serde_json::from_str(t).map_err(|e| Error::Parse {
            what: "row",
            detail: e.to_string(),
        });
    }
    t.split(',').map(str::parse).collect()
}

pub fn finite_row(v: &[i64]) -> Vec<ExtInt> {
    v.iter().map(|&x| Finite(x)).collect()
}
