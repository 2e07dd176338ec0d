//! Division polynomials on a preset curve and on the symbolic curve.

use toda_psi::curve::EllipticCurve;
use toda_psi::psi::PsiSequence;

fn main() -> toda_psi::Result<()> {
    let seq = PsiSequence::new(EllipticCurve::a1());
    println!("y^2 = x^3 + 1/4");
    for n in 1..=6 {
        println!("  psi{n} = {}", seq.psi(n)?);
    }
    let sym = PsiSequence::new(EllipticCurve::symbolic());
    println!("generic curve:\n  psi3 = {}", sym.psi(3)?);
    let s = sym.check_structure(5)?;
    println!("  psi5 structure ok: {}", s.ok());
    Ok(())
}
