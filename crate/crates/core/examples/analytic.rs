//! Series for wp and sigma, the addition formula, and the continuous Toda
//! finite-difference probe with its convergence rate.

use num_complex::Complex64;
use toda_psi::analytic::{analytic_summary, ContinuousTodaProbe, WeierstrassData};

fn main() -> toda_psi::Result<()> {
    let w = WeierstrassData::new(Complex64::new(4.0, 0.0), Complex64::new(0.0, 0.0));
    println!("g2 = 4, g3 = 0, admissible radius {:.4}", w.u_max);
    let u = Complex64::new(0.3, 0.1);
    println!("wp({u}) = {:.12}, sigma = {:.12}", w.wp(u)?, w.sigma(u)?);
    let s = analytic_summary(&w, 50, 7, &ContinuousTodaProbe::standard(1e-3))?;
    println!("max ODE residual {:.2e}", s.max_ode_residual);
    println!(
        "max addition-formula relative residual {:.2e}",
        s.max_add1_relative
    );
    println!(
        "Toda residual {:.3e} at h = 1e-3, ratio {:.3}, extrapolated {:.2e}",
        s.toda.max_residual, s.convergence.ratio, s.convergence.extrapolated_residual
    );
    Ok(())
}
