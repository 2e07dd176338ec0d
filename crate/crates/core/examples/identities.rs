//! Symbolic checks: the addition recursion, the Hankel determinant formula and
//! the three-term identity behind the discrete Toda equation.

use toda_psi::curve::EllipticCurve;
use toda_psi::psi::PsiSequence;
use toda_psi::toda::{elimination_report, master_identity_residual};

fn main() -> toda_psi::Result<()> {
    let sym = PsiSequence::new(EllipticCurve::symbolic());
    for (m, n) in [(2, 1), (3, 2), (4, 3)] {
        println!(
            "recursion (m, n) = ({m}, {n}): {}",
            sym.verify_recursion_identity(m, n)?
        );
    }
    for n in 2..=5 {
        println!(
            "determinant formula n = {n}: {}",
            sym.psi_bk(n)? == *sym.psi(n as i64)?
        );
    }
    let seq = PsiSequence::new(EllipticCurve::a2());
    for (p, q, n) in [(3, 2, 5), (5, 2, 7)] {
        let zero = master_identity_residual(&seq, p, q, n)?.is_zero();
        println!("three-term identity (p, q, N) = ({p}, {q}, {n}) vanishes: {zero}");
    }
    for (p, q) in [(2, 1), (3, 2), (5, 2)] {
        let c = seq.condition_polynomial(p, q)?;
        println!(
            "c = 1 locus for ({p}, {q}): degree {:?} in x, rational roots {:?}",
            c.degree, c.rational_roots
        );
    }
    let e = elimination_report(&seq, 3, 2, 5)?;
    println!(
        "eliminating psi_(N+q)psi_(N-q): '+' form {}, '-' form {}",
        e.plus_elimination_holds, e.minus_elimination_holds
    );
    Ok(())
}
