//! Orders of vanishing of psi_n at branch points, a generic point and infinity.

use toda_psi::algebra::{q, UniPoly};
use toda_psi::curve::EllipticCurve;
use toda_psi::psi::PsiSequence;
use toda_psi::valuation::{g_sequence, ValuationPoint};

fn main() -> toda_psi::Result<()> {
    let a1 = EllipticCurve::a1();
    let cubic = UniPoly::new(vec![q(1, 4), q(0, 1), q(0, 1), q(1, 1)]);
    let a2 = EllipticCurve::a2();
    let cases = [
        (
            "x^3 + 1/4 at its roots",
            a1.clone(),
            ValuationPoint::branch_factor(&a1, cubic)?,
        ),
        (
            "x^3 - x at x = 0",
            a2.clone(),
            ValuationPoint::branch(&a2, q(0, 1))?,
        ),
        (
            "x^3 - x at x = 2",
            a2.clone(),
            ValuationPoint::generic_at_x(&a2, q(2, 1), 1)?,
        ),
        ("x^3 - x at infinity", a2.clone(), ValuationPoint::Infinity),
    ];
    for (name, curve, pt) in cases {
        let g = g_sequence(&PsiSequence::new(curve), &pt, 12)?;
        let g: Vec<String> = g.iter().map(ToString::to_string).collect();
        println!("{name}: [{}]", g.join(", "));
    }
    Ok(())
}
