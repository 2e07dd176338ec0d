//! Jacobian arithmetic on y^2 = x^5 - x + 1, the wp_ij values of a divisor,
//! the Q function and the scalar recursion fed with genus-one data.

use toda_psi::algebra::q;
use toda_psi::curve::EllipticCurve;
use toda_psi::genus2::{
    cantor_add, cantor_mul, dtoda3_grid, q_function, verify_rec_sequence, wp_values, Genus2Curve,
    MumfordDivisor, ScalarSequence,
};
use toda_psi::psi::PsiSequence;
use toda_psi::toda::PointPsi;

fn main() -> toda_psi::Result<()> {
    let c = Genus2Curve::standard();
    let p = MumfordDivisor::from_point(&c, &q(0, 1), &q(1, 1))?;
    let r = MumfordDivisor::from_point(&c, &q(1, 1), &q(1, 1))?;
    let d = cantor_add(&c, &p, &r)?;
    let e = cantor_mul(&c, &d, 3)?;
    println!("P + R: u = {}, v = {}", d.u, d.v);
    println!("3(P + R): u = {}, v = {}", e.u, e.v);
    let w = wp_values(&c, &e)?;
    println!("wp11 = {}, wp12 = {}, wp22 = {}", w.wp11, w.wp12, w.wp22);
    println!("Q(P + R, 3(P + R)) = {}", q_function(&c, &d, &e)?);

    let ell = EllipticCurve::a3();
    let seq = PsiSequence::new(ell.clone());
    let vals = PointPsi::new(&seq, ell.point_at_x(q(-1, 1), 1)?);
    let s = ScalarSequence::new(
        (0..=20)
            .map(|n| vals.at(n))
            .collect::<toda_psi::Result<_>>()?,
    )?;
    println!(
        "scalar recursion (5, 3): {}",
        verify_rec_sequence(&s, 5, 3)?
    );
    let g = dtoda3_grid(&s, (3, 2, 0), 4, 4)?;
    println!(
        "grid relation holds: {}, variants {:?}",
        g.cells.all_ok(),
        g.variants
    );
    Ok(())
}
