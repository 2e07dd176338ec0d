//! One-shot regeneration of the stored reference values with per-item
//! pass/fail records.

use serde::Serialize;

use crate::algebra::{ExtInt, QuadExt, Rational, UniPoly};
use crate::curve::EllipticCurve;
use crate::error::Result;
use crate::psi::{check_appendix, ListedCurve, PsiSequence};
use crate::reference::{self, FGridRef};
use crate::toda::{build_grids, PointPsi, TodaParams};
use crate::ultradiscrete::{f_grid, FSign};
use crate::valuation::{g_sequence, ValuationPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportItem {
    pub item: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

impl ReportItem {
    pub fn new(item: impl Into<String>, expected: String, actual: String) -> Self {
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        ReportItem {
            item: item.into(),
            status,
            expected,
            actual,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn join<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    format!(
        "[{}]",
        v.into_iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn rows<T: ToString>(rows: impl IntoIterator<Item = impl IntoIterator<Item = T>>) -> String {
    join(rows.into_iter().map(join))
}

fn listing_item(which: ListedCurve) -> Result<ReportItem> {
    let r = check_appendix(which)?;
    let name = format!("{which:?}").to_lowercase();
    Ok(ReportItem::new(
        format!("listing/{name}"),
        format!("{} entries, no mismatches", r.entries.len()),
        match r.mismatches() {
            m if m.is_empty() => format!("{} entries, no mismatches", r.entries.len()),
            m => format!("{} entries, mismatches at n = {}", r.entries.len(), join(m)),
        },
    ))
}

fn nodal_point() -> Result<(PsiSequence, crate::curve::PointValue)> {
    let c = EllipticCurve::a3();
    let pt = c.point_at_x(Rational::from(-1), 1)?;
    Ok((PsiSequence::new(c), pt))
}

fn psi_values_item() -> Result<ReportItem> {
    let (seq, pt) = nodal_point()?;
    let r = pt.y.r.clone();
    let vals = PointPsi::new(&seq, pt);
    let expected = reference::PSI_AT_MINUS_ONE
        .iter()
        .map(|&(a, b)| QuadExt::new(Rational::from(a), Rational::from(b), r.clone()));
    let actual = (0..=12).map(|n| vals.at(n)).collect::<Result<Vec<_>>>()?;
    Ok(ReportItem::new(
        "psi-values/nodal-x=-1",
        join(expected),
        join(actual),
    ))
}

fn u_grid_items() -> Result<Vec<ReportItem>> {
    let (seq, pt) = nodal_point()?;
    let vals = PointPsi::new(&seq, pt);
    let mut out = Vec::new();
    for g in &reference::U_GRIDS {
        let params = TodaParams::new(&vals, g.pq.0, g.pq.1, 0)?;
        let tag = format!("{},{}", g.pq.0, g.pq.1);
        out.push(ReportItem::new(
            format!("u-constants/{tag}"),
            format!("delta^2 = {}, c(1-delta^2) = {}", g.delta2, g.cd),
            format!("delta^2 = {}, c(1-delta^2) = {}", params.delta2, params.cd),
        ));
        let grids = build_grids(&vals, &params, 0..=3, 0..=3)?;
        out.push(ReportItem::new(
            format!("u-grid/{tag}"),
            rows(g.rows.iter().map(|r| r.iter())),
            rows(grids.u.rows.iter().map(|r| r.iter())),
        ));
    }
    Ok(out)
}

fn quarter_branch(c: &EllipticCurve) -> Result<ValuationPoint> {
    ValuationPoint::branch_factor(
        c,
        UniPoly::new(vec![
            Rational::new(1, 4),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        ]),
    )
}

fn g_items() -> Result<Vec<ReportItem>> {
    let a1 = EllipticCurve::a1();
    let pt1 = quarter_branch(&a1)?;
    let g1 = g_sequence(&PsiSequence::new(a1), &pt1, 12)?;
    let a2 = EllipticCurve::a2();
    let pt2 = ValuationPoint::branch(&a2, Rational::zero())?;
    let g2 = g_sequence(&PsiSequence::new(a2), &pt2, 12)?;
    Ok(vec![
        ReportItem::new(
            "g/cubic-quarter-branch",
            join(reference::G_CUBIC_QUARTER),
            join(g1),
        ),
        ReportItem::new(
            "g/cubic-minus-x-at-0",
            join(reference::G_CUBIC_MINUS_X),
            join(g2),
        ),
    ])
}

fn f_items(r: &FGridRef, seq: &PsiSequence, pt: &ValuationPoint) -> Result<Vec<ReportItem>> {
    let (p, q) = r.pq;
    let width = r.rows[0].len() as i64;
    let g = f_grid(
        seq,
        pt,
        (p, q, 0),
        r.i_start..=r.i_start + width - 1,
        0..=r.rows.len() as i64 - 1,
        FSign::Difference,
    )?;
    let val_cd = g
        .source
        .as_ref()
        .map(|s| s.val_cd)
        .unwrap_or(ExtInt::PosInf);
    let tag = format!("{p},{q}");
    Ok(vec![
        ReportItem::new(
            format!("f-constants/{tag}"),
            format!("d = {}, val(c(1-delta^2)) = {}", r.d, r.val_cd),
            format!("d = {}, val(c(1-delta^2)) = {}", g.d, val_cd),
        ),
        ReportItem::new(
            format!("f-grid/{tag}"),
            rows(r.rows.iter().map(|r| r.iter())),
            rows(g.rows.iter().map(|r| r.iter())),
        ),
    ])
}

/// Every reference item, in a fixed order.
pub fn reproduce() -> Result<Vec<ReportItem>> {
    let mut out = Vec::new();
    for which in ListedCurve::ALL {
        out.push(listing_item(which)?);
    }
    out.push(psi_values_item()?);
    out.extend(u_grid_items()?);
    out.extend(g_items()?);
    let a1 = EllipticCurve::a1();
    let pt1 = quarter_branch(&a1)?;
    out.extend(f_items(
        &reference::F_GRID_3_2,
        &PsiSequence::new(a1),
        &pt1,
    )?);
    let a2 = EllipticCurve::a2();
    let pt2 = ValuationPoint::branch(&a2, Rational::zero())?;
    out.extend(f_items(
        &reference::F_GRID_5_2,
        &PsiSequence::new(a2),
        &pt2,
    )?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn item_status() {
        assert!(ReportItem::new("x", "1".into(), "1".into()).passed());
        assert!(!ReportItem::new("x", "1".into(), "2".into()).passed());
    }

    #[test]
    fn small_items_pass() {
        assert!(psi_values_item().unwrap().passed());
        assert!(u_grid_items().unwrap().iter().all(ReportItem::passed));
    }
}
