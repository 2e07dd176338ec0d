//! Floating-point Weierstrass `℘` and `σ` near the origin.
//!
//! Everything lives in a disk where the Laurent and Taylor series converge
//! quickly; no period lattice is computed.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{MultiPoly, Rational, Var};
use crate::curve::EllipticCurve;
use crate::error::{Error, Result};

/// Number of `c_k` kept in the `℘` series.
pub const SERIES_TERMS: usize = 48;

/// Exact invariants of the depressed form `ȳ² = 4X³ − g2X − g3`,
/// `x = X − λ2/3`, `ȳ = 2y`.
pub fn invariants(curve: &EllipticCurve) -> Result<(Rational, Rational)> {
    let [l0, l1, l2] = curve.numeric_lambdas()?;
    let r = Rational::new;
    let g2 = &(&r(4, 3) * &(&l2 * &l2)) - &(&r(4, 1) * &l1);
    let g3 =
        &(&(&r(-8, 27) * &(&(&l2 * &l2) * &l2)) + &(&r(4, 3) * &(&l1 * &l2))) - &(&r(4, 1) * &l0);
    Ok((g2, g3))
}

/// Checks `4f(X − λ2/3) = 4X³ − g2X − g3` as polynomials.
pub fn depression_holds(curve: &EllipticCurve) -> Result<bool> {
    let (g2, g3) = invariants(curve)?;
    let l2 = curve.numeric_lambdas()?[2].clone();
    let shift = &MultiPoly::x() - &MultiPoly::constant(&l2 * &Rational::new(1, 3));
    let lhs = curve.f().compose(Var::X, &shift).scale(&Rational::from(4));
    let x = MultiPoly::x();
    let rhs = &(&x.pow(3).scale(&Rational::from(4)) - &x.scale(&g2)) - &MultiPoly::constant(g3);
    Ok((&lhs - &rhs).is_zero())
}

fn to_c(r: &Rational) -> Complex64 {
    Complex64::new(r.to_f64(), 0.0)
}

#[derive(Clone, Debug, Serialize)]
pub struct WeierstrassData {
    pub g2: Complex64,
    pub g3: Complex64,
    pub discriminant: Complex64,
    /// `c[k]` multiplies `u^{2k−2}`; entries 0 and 1 are unused.
    #[serde(skip)]
    c: Vec<Complex64>,
    /// `σ(u) = Σ s[n] u^{2n+1}`.
    #[serde(skip)]
    s: Vec<Complex64>,
    /// Admissible radius, half the ratio-test convergence radius.
    pub u_max: f64,
}

impl WeierstrassData {
    pub fn new(g2: Complex64, g3: Complex64) -> Self {
        let n = SERIES_TERMS;
        let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
        c[2] = g2 / 20.0;
        if n >= 3 {
            c[3] = g3 / 28.0;
        }
        for k in 4..=n {
            let sum: Complex64 = (2..=k - 2).map(|m| c[m] * c[k - m]).sum();
            c[k] = sum * (3.0 / ((2 * k + 1) as f64 * (k - 3) as f64));
        }
        // log(σ/u) = −Σ c_k w^k / (2k(2k−1)), w = u²; exponentiate term by term.
        let mut lg = vec![Complex64::new(0.0, 0.0); n + 1];
        for k in 2..=n {
            lg[k] = -c[k] / ((2 * k) as f64 * (2 * k - 1) as f64);
        }
        let mut s = vec![Complex64::new(0.0, 0.0); n + 1];
        s[0] = Complex64::new(1.0, 0.0);
        for m in 1..=n {
            let acc: Complex64 = (1..=m).map(|k| lg[k] * s[m - k] * k as f64).sum();
            s[m] = acc / m as f64;
        }
        let radius = (n / 2..=n)
            .filter(|&k| c[k].norm() > 0.0)
            .map(|k| c[k].norm().powf(-1.0 / (2 * k - 2) as f64))
            .fold(f64::INFINITY, f64::min);
        WeierstrassData {
            g2,
            g3,
            discriminant: g2 * g2 * g2 - g3 * g3 * 27.0,
            c,
            s,
            u_max: 0.5 * radius,
        }
    }

    pub fn from_curve(curve: &EllipticCurve) -> Result<Self> {
        let (g2, g3) = invariants(curve)?;
        Ok(WeierstrassData::new(to_c(&g2), to_c(&g3)))
    }

    pub fn coefficient(&self, k: usize) -> Complex64 {
        self.c[k]
    }

    fn guard(&self, u: Complex64, allow_zero: bool) -> Result<()> {
        if !u.is_finite() || u.norm() > self.u_max || (!allow_zero && u.norm() == 0.0) {
            return Err(Error::Domain(format!(
                "|u| = {} outside (0, {}]",
                u.norm(),
                self.u_max
            )));
        }
        Ok(())
    }

    pub fn wp(&self, u: Complex64) -> Result<Complex64> {
        self.guard(u, false)?;
        let w = u * u;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (2..self.c.len()).rev() {
            acc = acc * w + self.c[k];
        }
        Ok(w.inv() + acc * w)
    }

    pub fn wp_deriv(&self, u: Complex64) -> Result<Complex64> {
        self.guard(u, false)?;
        let w = u * u;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (2..self.c.len()).rev() {
            acc = acc * w + self.c[k] * (2 * k - 2) as f64;
        }
        Ok(-2.0 / (w * u) + acc * u)
    }

    /// `σ, σ′, σ″` at `u`.
    pub fn sigma_jet(&self, u: Complex64) -> Result<[Complex64; 3]> {
        self.guard(u, true)?;
        let w = u * u;
        let zero = Complex64::new(0.0, 0.0);
        let (mut s0, mut s1, mut s2) = (zero, zero, zero);
        for n in (0..self.s.len()).rev() {
            let a = self.s[n];
            let e = (2 * n + 1) as f64;
            s0 = s0 * w + a;
            s1 = s1 * w + a * e;
            // σ″ has no u^{-1} term: n = 0 contributes 0.
            s2 = s2 * w + a * (e * (e - 1.0));
        }
        Ok([s0 * u, s1, if u.norm() == 0.0 { zero } else { s2 / u }])
    }

    pub fn sigma(&self, u: Complex64) -> Result<Complex64> {
        Ok(self.sigma_jet(u)?[0])
    }

    /// `(℘′)² − (4℘³ − g2℘ − g3)`.
    pub fn ode_residual(&self, u: Complex64) -> Result<Complex64> {
        let p = self.wp(u)?;
        let d = self.wp_deriv(u)?;
        Ok(d * d - (p * p * p * 4.0 - self.g2 * p - self.g3))
    }

    /// The ODE residual over `max(|℘′|², |4℘³|)`, the size of the cancelling terms.
    pub fn ode_relative(&self, u: Complex64) -> Result<f64> {
        let p = self.wp(u)?;
        let d = self.wp_deriv(u)?;
        let scale = (d * d).norm().max((p * p * p * 4.0).norm());
        Ok(self.ode_residual(u)?.norm() / scale)
    }

    /// `−(log σ)″ − ℘`.
    pub fn log_sigma_residual(&self, u: Complex64) -> Result<Complex64> {
        let [s, s1, s2] = self.sigma_jet(u)?;
        Ok((s1 * s1 - s * s2) / (s * s) - self.wp(u)?)
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Add1Residual {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub relative: f64,
}

/// `−[℘(u) − ℘(v)]` against `σ(v+u)σ(u−v)/[σ(v)σ(u)]²`.
pub fn check_add1(w: &WeierstrassData, u: Complex64, v: Complex64) -> Result<Add1Residual> {
    let lhs = -(w.wp(u)? - w.wp(v)?);
    let su = w.sigma(u)?;
    let sv = w.sigma(v)?;
    let rhs = w.sigma(v + u)? * w.sigma(u - v)? / (sv * su).powi(2);
    let scale = lhs.norm().max(rhs.norm());
    let relative = if scale == 0.0 {
        0.0
    } else {
        (lhs - rhs).norm() / scale
    };
    Ok(Add1Residual { lhs, rhs, relative })
}

#[derive(Clone, Debug, Serialize)]
pub struct ContinuousTodaProbe {
    pub u0: Complex64,
    pub t: Complex64,
    pub n_range: Vec<i64>,
    pub h: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TodaRow {
    pub n: i64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TodaProbeReport {
    pub b: Complex64,
    pub rows: Vec<TodaRow>,
    pub skipped: Vec<(i64, String)>,
    pub max_residual: f64,
    /// `|e^{q_n} − (℘ − b)|` over every evaluation, a definitional check.
    pub identity_residual: f64,
}

/// `−q_n″ = e^{q_{n+1}} − 2e^{q_n} + e^{q_{n−1}}`, `q_n = log(℘((n+1)u0 + t) − b)`,
/// with `q_n″` from a central second difference in `t`.
pub fn check_continuous_toda(
    w: &WeierstrassData,
    probe: &ContinuousTodaProbe,
) -> Result<TodaProbeReport> {
    let b = w.wp(probe.u0)?;
    let h = Complex64::new(probe.h, 0.0);
    let mut identity_residual: f64 = 0.0;
    let mut e = |n: i64, dt: Complex64| -> Result<Complex64> {
        let arg = probe.u0 * (n + 1) as f64 + probe.t + dt;
        let v = w.wp(arg)? - b;
        if v.norm() < 1e-300 {
            return Err(Error::Domain(format!("log of ~0 at n = {n}")));
        }
        identity_residual = identity_residual.max((v.ln().exp() - v).norm());
        Ok(v)
    };
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for &n in &probe.n_range {
        let row = (|| -> Result<TodaRow> {
            let mid = e(n, Complex64::new(0.0, 0.0))?;
            // ratios near 1 keep the principal logarithm on one branch
            let d2 = ((e(n, h)? / mid).ln() + (e(n, -h)? / mid).ln()) / (h * h);
            let lhs = -d2;
            let rhs = e(n + 1, Complex64::new(0.0, 0.0))? - mid * 2.0
                + e(n - 1, Complex64::new(0.0, 0.0))?;
            Ok(TodaRow {
                n,
                lhs,
                rhs,
                residual: (lhs - rhs).norm(),
            })
        })();
        match row {
            Ok(r) => rows.push(r),
            Err(err) => skipped.push((n, err.to_string())),
        }
    }
    let max_residual = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    Ok(TodaProbeReport {
        b,
        rows,
        skipped,
        max_residual,
        identity_residual,
    })
}

/// Residuals at `h` and `2h` and their ratio (4 for second order).
#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    pub residual_h: f64,
    pub residual_2h: f64,
    pub ratio: f64,
    /// Residual of the Richardson combination `(4D(h) − D(2h))/3`.
    pub extrapolated_residual: f64,
}

pub fn toda_convergence(
    w: &WeierstrassData,
    probe: &ContinuousTodaProbe,
) -> Result<ConvergenceReport> {
    let fine = check_continuous_toda(w, probe)?;
    let coarse = ContinuousTodaProbe {
        h: probe.h * 2.0,
        ..probe.clone()
    };
    let coarse = check_continuous_toda(w, &coarse)?;
    let extrapolated_residual = fine
        .rows
        .iter()
        .zip(&coarse.rows)
        .map(|(a, b)| ((a.lhs * 4.0 - b.lhs) / 3.0 - a.rhs).norm())
        .fold(0.0, f64::max);
    Ok(ConvergenceReport {
        residual_h: fine.max_residual,
        residual_2h: coarse.max_residual,
        ratio: coarse.max_residual / fine.max_residual,
        extrapolated_residual,
    })
}

/// A point with `lo·u_max ≤ |u| ≤ hi·u_max` and uniform argument.
pub fn sample_point(w: &WeierstrassData, rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    let r = w.u_max.min(1e3) * rng.gen_range(lo..hi);
    Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyticSummary {
    pub g2: Complex64,
    pub g3: Complex64,
    pub u_max: f64,
    pub samples: usize,
    pub seed: u64,
    pub max_ode_residual: f64,
    pub max_log_sigma_residual: f64,
    pub max_add1_relative: f64,
    pub toda: TodaProbeReport,
    pub convergence: ConvergenceReport,
}

/// Random admissible pairs `(u, v)`: both in `[u_max/8, u_max/2]`, apart by
/// at least `u_max/16`, so `u ± v` stays inside the disk and off the pole.
pub fn random_pairs(w: &WeierstrassData, samples: usize, seed: u64) -> Vec<(Complex64, Complex64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        let u = sample_point(w, &mut rng, 0.125, 0.5);
        let v = sample_point(w, &mut rng, 0.125, 0.5);
        if (u - v).norm() >= w.u_max.min(1e3) / 16.0 {
            out.push((u, v));
        }
    }
    out
}

pub fn analytic_summary(
    w: &WeierstrassData,
    samples: usize,
    seed: u64,
    probe: &ContinuousTodaProbe,
) -> Result<AnalyticSummary> {
    let mut max_ode: f64 = 0.0;
    let mut max_sig: f64 = 0.0;
    let mut max_add: f64 = 0.0;
    for (u, v) in random_pairs(w, samples, seed) {
        max_ode = max_ode.max(w.ode_relative(u)?);
        max_sig = max_sig.max(w.log_sigma_residual(u)?.norm());
        max_add = max_add.max(check_add1(w, u, v)?.relative);
    }
    Ok(AnalyticSummary {
        g2: w.g2,
        g3: w.g3,
        u_max: w.u_max,
        samples,
        seed,
        max_ode_residual: max_ode,
        max_log_sigma_residual: max_sig,
        max_add1_relative: max_add,
        toda: check_continuous_toda(w, probe)?,
        convergence: toda_convergence(w, probe)?,
    })
}

impl ContinuousTodaProbe {
    /// `u0 = 0.3`, `t = 0.05i`, `n ∈ {−1, 0, 1}`.
    pub fn standard(h: f64) -> Self {
        ContinuousTodaProbe {
            u0: Complex64::new(0.3, 0.0),
            t: Complex64::new(0.0, 0.05),
            n_range: vec![-1, 0, 1],
            h,
        }
    }
}
