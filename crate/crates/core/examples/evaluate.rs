//! Parses an expression in x, y and psiN, reduces it on the curve and
//! evaluates it at a point with irrational y.

use toda_psi::algebra::{parse_expr, q};
use toda_psi::curve::{ElementContext, EllipticCurve};
use toda_psi::psi::PsiSequence;

fn main() -> toda_psi::Result<()> {
    let curve = EllipticCurve::a3();
    let seq = PsiSequence::new(curve.clone());
    let lookup = |k: i64| seq.psi(k).map(|e| e.as_ref().clone());
    let ctx = ElementContext::with_psi(&curve, &lookup);
    let e = parse_expr("psi3^2 - psi2*psi4 + y^2")?.eval(&ctx)?;
    println!("psi3^2 - psi2*psi4 + y^2 = {e}");
    let pt = curve.point_at_x(q(-1, 1), 1)?;
    println!("at (x, y) = ({}, {}): {}", pt.x, pt.y, curve.eval(&e, &pt)?);
    Ok(())
}
