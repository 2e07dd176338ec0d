//! Valuation-seeded max-plus grid, its check, the genericity scan and a free
//! run of the max-plus update.

use toda_psi::algebra::{q, ExtInt, UniPoly};
use toda_psi::curve::EllipticCurve;
use toda_psi::psi::PsiSequence;
use toda_psi::ultradiscrete::{
    evolve, f_grid, finite_row, genericity_check, verify_udte, Boundary, FSign,
};
use toda_psi::valuation::ValuationPoint;

fn main() -> toda_psi::Result<()> {
    let curve = EllipticCurve::a1();
    let seq = PsiSequence::new(curve.clone());
    let pt = ValuationPoint::branch_factor(
        &curve,
        UniPoly::new(vec![q(1, 4), q(0, 1), q(0, 1), q(1, 1)]),
    )?;
    let grid = f_grid(&seq, &pt, (3, 2, 0), 1..=5, 0..=3, FSign::Difference)?;
    print!("{}", grid.to_csv());
    let r = verify_udte(&grid);
    println!(
        "d = {}, {} finite cells checked, all ok: {}",
        grid.d,
        r.checked.len(),
        r.all_ok()
    );
    let gen = genericity_check(&seq, &pt, (3, 2, 0), 1..=5, 0..=3)?;
    println!("genericity flags: {:?}", gen.flagged());

    // a single soliton-like bump under the periodic update
    let a = finite_row(&[0, 0, 1, 0, 0, 0, 0, 0]);
    let b = finite_row(&[0, 0, 0, 1, 0, 0, 0, 0]);
    let run = evolve(&a, &b, ExtInt::from(-1), 6, Boundary::Periodic)?;
    print!("{}", run.to_csv());
    Ok(())
}
