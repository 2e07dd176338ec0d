//! phi, U and V grids at x = -1 on the nodal cubic and the exact check of the
//! bilinear and V forms.

use toda_psi::algebra::q;
use toda_psi::curve::EllipticCurve;
use toda_psi::psi::PsiSequence;
use toda_psi::toda::{build_grids, verify_dtoda_phi, verify_dtoda_v, PointPsi, TodaParams};

fn main() -> toda_psi::Result<()> {
    let curve = EllipticCurve::a3();
    let seq = PsiSequence::new(curve.clone());
    let vals = PointPsi::new(&seq, curve.point_at_x(q(-1, 1), 1)?);
    for (p, qq) in [(3, 2), (2, 3)] {
        let params = TodaParams::new(&vals, p, qq, 0)?;
        println!(
            "(p, q) = ({p}, {qq}): delta^2 = {}, c(1 - delta^2) = {}",
            params.delta2, params.cd
        );
        let grids = build_grids(&vals, &params, 0..=3, 0..=3)?;
        for row in &grids.u.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            println!("  U: {}", cells.join("  "));
        }
        let phi = verify_dtoda_phi(&params, &grids.phi);
        let v = verify_dtoda_v(&params, &grids)?;
        println!(
            "  bilinear form holds: {}, V form holds: {}",
            phi.all_ok(),
            v.all_ok()
        );
    }
    Ok(())
}
