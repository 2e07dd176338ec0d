//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one `criterion N (...): PASS|FAIL | details` line; the
//! process exits non-zero if any criterion fails.
//!
//! Reference values are hardcoded here rather than read from the library,
//! and derived values come from the oracles in `common`.

mod common;

use common::{oracle_at, q as oq, Surd, Q};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toda_psi::algebra::{q, ExtInt, QuadExt, Rational, UniPoly};
use toda_psi::analytic::{
    check_add1, check_continuous_toda, random_pairs, toda_convergence, ContinuousTodaProbe,
    WeierstrassData,
};
use toda_psi::curve::EllipticCurve;
use toda_psi::genus2::{
    cantor_add, cantor_mul, dtoda3_grid, q_function, verify_rec_sequence, wp_values,
    wp_values_split, Genus2Curve, MumfordDivisor, ScalarSequence,
};
use toda_psi::psi::{check_appendix, ListedCurve, PsiSequence};
use toda_psi::toda::{
    build_grids, master_identity_residual, phi_grid, verify_dtoda_phi, PointPsi, TodaParams,
};
use toda_psi::ultradiscrete::{
    evolve, f_grid, genericity_check, verify_udte, Boundary, FSign, TropicalGrid,
};
use toda_psi::valuation::{g_sequence, ValuationPoint};

fn verdict(n: u32, what: &str, ok: bool, detail: &str) -> bool {
    println!(
        "criterion {n} ({what}): {} | {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn to_q(r: &Rational) -> Q {
    r.to_string().parse().unwrap()
}

fn lambdas(c: &EllipticCurve) -> [Q; 3] {
    let l = c.numeric_lambdas().unwrap();
    [to_q(&l[0]), to_q(&l[1]), to_q(&l[2])]
}

fn agrees(lib: &QuadExt, o: &Surd) -> bool {
    to_q(&lib.a) == o.a && to_q(&lib.b) == o.b && to_q(&lib.r) == o.r
}

/// Rendering used by the hardcoded grids: plain rationals, `a+bθ` otherwise.
fn render(s: &Surd) -> String {
    if s.b == Q::from_integer(0.into()) {
        s.a.to_string()
    } else {
        format!("{}+{}θ", s.a, s.b)
    }
}

const CURVES: [ListedCurve; 3] = [ListedCurve::A1, ListedCurve::A2, ListedCurve::A3];

fn criterion_01_factored_listings() -> bool {
    let mut detail = Vec::new();
    let mut ok = true;
    for (which, want) in CURVES.iter().zip([15usize, 9, 16]) {
        let rep = check_appendix(*which).unwrap();
        let bad = rep.mismatches();
        ok &= bad.is_empty() && rep.entries.len() == want;
        // locate the disagreement: engine against the oracle, listing against the oracle
        let curve = which.curve();
        let l = lambdas(&curve);
        let seq = PsiSequence::new(curve.clone());
        let listing = which.expanded_listing().unwrap();
        let mut engine_bad = Vec::new();
        let mut listing_bad = Vec::new();
        for x in [oq(2, 1), oq(-1, 3)] {
            let mut o = oracle_at(&l, &x);
            let pt = curve
                .point_at_x(Rational::new(x.numer().clone(), x.denom().clone()), 1)
                .unwrap();
            for n in 1..=want {
                let truth = o.at(n as i64);
                let e = curve.eval(&seq.psi(n as i64).unwrap(), &pt).unwrap();
                if !agrees(&e, &truth) {
                    engine_bad.push(n);
                }
                let v = curve.eval(&listing[n - 1], &pt).unwrap();
                if !agrees(&v, &truth) && !listing_bad.contains(&n) {
                    listing_bad.push(n);
                }
            }
        }
        ok &= engine_bad.is_empty();
        detail.push(format!(
            "{which:?}: {} entries, mismatches {bad:?}, engine-vs-oracle {engine_bad:?}, listing-vs-oracle {listing_bad:?}",
            rep.entries.len()
        ));
    }
    verdict(1, "factored listings", ok, &detail.join("; "))
}

const PSI_AT_NODE: [(i64, i64); 13] = [
    (0, 0),
    (1, 0),
    (0, -2),
    (2, 0),
    (0, -2),
    (1, 0),
    (0, 0),
    (-1, 0),
    (0, 2),
    (-2, 0),
    (0, 2),
    (-1, 0),
    (0, 0),
];

fn node_values() -> (PsiSequence, toda_psi::curve::PointValue) {
    let c = EllipticCurve::a3();
    let pt = c.point_at_x(q(-1, 1), 1).unwrap();
    (PsiSequence::new(c), pt)
}

fn criterion_02_values_at_node_point() -> bool {
    let (seq, pt) = node_values();
    let r = q(-3, 4);
    let vals = PointPsi::new(&seq, pt);
    let mut o = oracle_at(&lambdas(seq.curve()), &oq(-1, 1));
    let mut bad = Vec::new();
    for (n, &(a, b)) in PSI_AT_NODE.iter().enumerate() {
        let want = QuadExt::new(q(a, 1), q(b, 1), r.clone());
        let got = vals.at(n as i64).unwrap();
        if got != want || !agrees(&got, &o.at(n as i64)) {
            bad.push(n);
        }
    }
    let zeros: Vec<i64> = (0..=12)
        .filter(|&n| vals.at(n).unwrap().is_zero())
        .collect();
    let periodic = (0..=24).all(|n| {
        vals.at(n + 12).unwrap() == vals.at(n).unwrap()
            && vals.at(n + 6).unwrap() == -vals.at(n).unwrap()
    });
    let ok = bad.is_empty() && zeros == vec![0, 6, 12] && periodic;
    verdict(
        2,
        "psi at x = -1",
        ok,
        &format!("mismatched n {bad:?}, zeros at {zeros:?}, period-12 sign pattern {periodic}"),
    )
}

struct UGrid {
    pq: (i64, i64),
    delta2: &'static str,
    cd: &'static str,
    rows: [[&'static str; 4]; 4],
}

const U_EXPECTED: [UGrid; 2] = [
    UGrid {
        pq: (3, 2),
        delta2: "-3/4",
        cd: "1/4",
        rows: [
            ["inf", "0", "inf", "0"],
            ["1/3", "3", "1/3", "3"],
            ["1/3", "3", "1/3", "3"],
            ["inf", "0", "inf", "0"],
        ],
    },
    UGrid {
        pq: (2, 3),
        delta2: "-4/3",
        cd: "1/3",
        rows: [
            ["inf", "0", "0", "inf"],
            ["1/4", "-2", "-2", "1/4"],
            ["inf", "0", "0", "inf"],
            ["1/4", "-2", "-2", "1/4"],
        ],
    },
];

fn criterion_03_u_grids() -> bool {
    let (seq, pt) = node_values();
    let vals = PointPsi::new(&seq, pt);
    let mut o = oracle_at(&lambdas(seq.curve()), &oq(-1, 1));
    let mut ok = true;
    let mut detail = Vec::new();
    for g in &U_EXPECTED {
        let (p, qq) = g.pq;
        let params = TodaParams::new(&vals, p, qq, 0).unwrap();
        let consts = params.delta2.to_string() == g.delta2 && params.cd.to_string() == g.cd;
        // oracle constants
        let (pp, pq) = (o.at(p), o.at(qq));
        let od2 = pq.sq().div(&pp.sq());
        let ocd = (&o.at(p + qq) * &o.at(p - qq)).div(&pp.sq());
        let oconsts = render(&od2) == g.delta2 && render(&ocd) == g.cd;
        let grids = build_grids(&vals, &params, 0..=3, 0..=3).unwrap();
        let mut cells_bad = 0;
        let mut oracle_bad = 0;
        for j in 0..4i64 {
            for i in 0..4i64 {
                let want = g.rows[j as usize][i as usize];
                if grids.u.get(i, j).unwrap().to_string() != want {
                    cells_bad += 1;
                }
                let n = p * i + qq * j;
                let (num, den) = (&o.at(n + p) * &o.at(n - p), o.at(n).sq());
                let oval = if den.is_zero() {
                    "inf".to_string()
                } else {
                    render(&num.div(&den))
                };
                if oval != want {
                    oracle_bad += 1;
                }
            }
        }
        ok &= consts && oconsts && cells_bad == 0 && oracle_bad == 0;
        detail.push(format!(
            "({p},{qq}): constants {consts} (oracle {oconsts}), cell mismatches {cells_bad} (oracle {oracle_bad})"
        ));
    }
    verdict(3, "U grids", ok, &detail.join("; "))
}

const G_QUARTER: [&str; 13] = [
    "inf", "0", "1", "0", "1", "0", "1", "0", "1", "0", "1", "0", "1",
];
const G_MINUS_X: [&str; 13] = [
    "inf", "0", "1", "4", "5", "8", "13", "16", "21", "28", "33", "40", "49",
];

/// At a branch point of a smooth cubic the point has order two, so `ψn` has
/// a simple zero there for even `n` and none for odd `n`.
fn g_oracle(n: i64) -> ExtInt {
    match n {
        0 => ExtInt::PosInf,
        n if n % 2 == 0 => ExtInt::from(1),
        _ => ExtInt::from(0),
    }
}

fn quarter_branch(c: &EllipticCurve) -> ValuationPoint {
    ValuationPoint::branch_factor(c, UniPoly::new(vec![q(1, 4), q(0, 1), q(0, 1), q(1, 1)]))
        .unwrap()
}

fn strings(v: &[ExtInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn criterion_04_valuation_sequences() -> bool {
    let a1 = EllipticCurve::a1();
    let g1 = g_sequence(&PsiSequence::new(a1.clone()), &quarter_branch(&a1), 12).unwrap();
    let a2 = EllipticCurve::a2();
    let g2 = g_sequence(
        &PsiSequence::new(a2.clone()),
        &ValuationPoint::branch(&a2, q(0, 1)).unwrap(),
        12,
    )
    .unwrap();
    let oracle: Vec<ExtInt> = (0..=12).map(g_oracle).collect();
    let m1 = strings(&g1) == G_QUARTER;
    let m2 = strings(&g2) == G_MINUS_X;
    let detail = format!(
        "cubic +1/4 branch: reference {m1}, oracle {}; x^3 - x at 0: reference {m2}, oracle {}, computed {:?}",
        g1 == oracle,
        g2 == oracle,
        strings(&g2)
    );
    verdict(
        4,
        "valuation sequences",
        m1 && m2 && g1 == oracle && g2 == oracle,
        &detail,
    )
}

struct FGrid {
    pq: (i64, i64),
    d: i64,
    val_cd: i64,
    rows: &'static [&'static [&'static str]],
}

const F_QUARTER: FGrid = FGrid {
    pq: (3, 2),
    d: -2,
    val_cd: 0,
    rows: &[
        &["inf", "-2", "2", "-2", "2"],
        &["2", "-2", "2", "-2", "2"],
        &["2", "-2", "2", "-2", "2"],
        &["2", "-2", "2", "-2", "2"],
    ],
};

const F_MINUS_X: FGrid = FGrid {
    pq: (5, 2),
    d: 14,
    val_cd: 0,
    rows: &[
        &["inf", "18", "14", "18"],
        &["18", "14", "18", "18"],
        &["14", "18", "18", "14"],
    ],
};

/// Oracle `f` cell from the parity valuations.
fn f_oracle(n: i64, p: i64) -> String {
    let (a, b, c) = (g_oracle(n + p), g_oracle(n), g_oracle(n - p));
    match (a.finite(), b.finite(), c.finite()) {
        (Some(a), Some(b), Some(c)) => (a - 2 * b + c).to_string(),
        (_, Some(_), _) => "inf".into(),
        _ => "indeterminate".into(),
    }
}

fn f_case(seq: &PsiSequence, pt: &ValuationPoint, want: &FGrid) -> (bool, String) {
    let (p, qq) = want.pq;
    let w = want.rows[0].len() as i64;
    let grid = f_grid(
        seq,
        pt,
        (p, qq, 0),
        1..=w,
        0..=want.rows.len() as i64 - 1,
        FSign::Difference,
    )
    .unwrap();
    let val_cd = grid.source.as_ref().unwrap().val_cd;
    let consts = grid.d == ExtInt::from(want.d) && val_cd == ExtInt::from(want.val_cd);
    let mut bad = 0;
    let mut oracle_bad = 0;
    for (j, row) in want.rows.iter().enumerate() {
        for (k, cell) in row.iter().enumerate() {
            let i = k as i64 + 1;
            let got = grid.get(i, j as i64).unwrap().to_string();
            if got != *cell {
                bad += 1;
            }
            if got != f_oracle(p * i + qq * j as i64, p) {
                oracle_bad += 1;
            }
        }
    }
    let od = -2 * (g_oracle(qq).finite().unwrap() - g_oracle(p).finite().unwrap());
    let ocd = g_oracle(p + qq).finite().unwrap() + g_oracle(p - qq).finite().unwrap()
        - 2 * g_oracle(p).finite().unwrap();
    let oconsts = grid.d == ExtInt::from(od) && val_cd == ExtInt::from(ocd);
    (
        consts && bad == 0 && oracle_bad == 0 && oconsts,
        format!(
            "({p},{qq}): d = {} val = {val_cd} (reference {} {}, oracle {od} {ocd}), reference-cell mismatches {bad}, oracle mismatches {oracle_bad}",
            grid.d, want.d, want.val_cd
        ),
    )
}

fn criterion_05_f_grids() -> bool {
    let a1 = EllipticCurve::a1();
    let (ok1, d1) = f_case(
        &PsiSequence::new(a1.clone()),
        &quarter_branch(&a1),
        &F_QUARTER,
    );
    let a2 = EllipticCurve::a2();
    let (ok2, d2) = f_case(
        &PsiSequence::new(a2.clone()),
        &ValuationPoint::branch(&a2, q(0, 1)).unwrap(),
        &F_MINUS_X,
    );
    verdict(5, "f grids", ok1 && ok2, &format!("{d1}; {d2}"))
}

fn criterion_06_symbolic_identities() -> bool {
    let sym = PsiSequence::new(EllipticCurve::symbolic());
    let rec = [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3)]
        .iter()
        .all(|&(m, n)| sym.verify_recursion_identity(m, n).unwrap());
    let bk_sym = (2..=6).all(|n| sym.psi_bk(n).unwrap() == *sym.psi(n as i64).unwrap());
    let mut bk_num = true;
    let mut master = true;
    let mut master_oracle = true;
    for which in CURVES {
        let curve = which.curve();
        let seq = PsiSequence::new(curve.clone());
        bk_num &= (2..=10).all(|n| seq.psi_bk(n).unwrap() == *seq.psi(n as i64).unwrap());
        let mut o = oracle_at(&lambdas(&curve), &oq(3, 2));
        for (p, qq, n) in [(3, 2, 5), (2, 3, 5), (5, 2, 7)] {
            master &= master_identity_residual(&seq, p, qq, n).unwrap().is_zero();
            let lhs = &(&o.at(p).sq() * &(&o.at(n + qq) * &o.at(n - qq)))
                - &(&o.at(qq).sq() * &(&o.at(n + p) * &o.at(n - p)));
            let rhs = &o.at(n).sq() * &(&o.at(p + qq) * &o.at(p - qq));
            master_oracle &= (&lhs - &rhs).is_zero();
        }
    }
    let ok = rec && bk_sym && bk_num && master && master_oracle;
    verdict(
        6,
        "symbolic identities",
        ok,
        &format!(
            "recursion {rec}, determinant symbolic {bk_sym}, determinant numeric {bk_num}, three-term identity {master} (oracle {master_oracle})"
        ),
    )
}

fn random_x(rng: &mut ChaCha8Rng) -> Q {
    oq(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

fn criterion_07_discrete_toda() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7d0da);
    let mut checked = 0;
    let mut lib_bad = Vec::new();
    let mut oracle_bad = Vec::new();
    for which in CURVES {
        let curve = which.curve();
        let l = lambdas(&curve);
        let seq = PsiSequence::new(curve.clone());
        for (p, qq) in [(3, 2), (5, 2)] {
            let mut found = 0;
            while found < 3 {
                let x = random_x(&mut rng);
                let fx = common::f_at(&l, &x);
                let mut o = oracle_at(&l, &x);
                if fx == oq(0, 1) || o.at(p).is_zero() || o.at(qq).is_zero() {
                    continue;
                }
                found += 1;
                let pt = curve
                    .point_at_x(Rational::new(x.numer().clone(), x.denom().clone()), 1)
                    .unwrap();
                let vals = PointPsi::new(&seq, pt);
                let params = TodaParams::new(&vals, p, qq, 1).unwrap();
                let phi = phi_grid(&vals, &params, &(-2..=2), &(-2..=2)).unwrap();
                let rep = verify_dtoda_phi(&params, &phi);
                checked += rep.cells.len();
                if !rep.all_ok() || rep.cells.is_empty() {
                    lib_bad.push((which, p, qq, x.to_string()));
                }
                // oracle residual on the same 5x5 block
                let d2 = o.at(qq).sq().div(&o.at(p).sq());
                let cd = (&o.at(p + qq) * &o.at(p - qq)).div(&o.at(p).sq());
                let mut phi_o = |i: i64, j: i64| o.at(1 + p * i + qq * j);
                for j in -1..=1 {
                    for i in -1..=1 {
                        let r = &(&(&phi_o(i, j + 1) * &phi_o(i, j - 1))
                            - &(&cd * &phi_o(i, j).sq()))
                            - &(&d2 * &(&phi_o(i + 1, j) * &phi_o(i - 1, j)));
                        if !r.is_zero() {
                            oracle_bad.push((which, p, qq, i, j));
                        }
                    }
                }
            }
        }
    }
    let ok = lib_bad.is_empty() && oracle_bad.is_empty();
    verdict(
        7,
        "discrete Toda",
        ok,
        &format!("18 random grids, {checked} interior cells, failures {lib_bad:?}, oracle failures {oracle_bad:?}"),
    )
}

fn parse_rows(rows: &[&[&str]]) -> Vec<Vec<ExtInt>> {
    rows.iter()
        .map(|r| r.iter().map(|c| c.parse().unwrap()).collect())
        .collect()
}

/// Max-plus residual check written from scratch.
fn udte_oracle(rows: &[Vec<ExtInt>], d: i64, periodic: bool) -> (usize, usize) {
    let w = rows[0].len() as i64;
    let m = |v: i64| (v + d).max(0);
    let (mut checked, mut bad) = (0, 0);
    for j in 1..rows.len() - 1 {
        let (lo, hi) = if periodic { (0, w) } else { (1, w - 1) };
        for i in lo..hi {
            let at = |jj: usize, ii: i64| rows[jj][ii.rem_euclid(w) as usize].finite();
            let cells = [
                at(j + 1, i),
                at(j, i),
                at(j - 1, i),
                at(j, i + 1),
                at(j, i - 1),
            ];
            if cells.iter().any(Option::is_none) {
                continue;
            }
            let [up, c, down, r, l] = cells.map(Option::unwrap);
            checked += 1;
            if up - 2 * c + down != m(r) - 2 * m(c) + m(l) {
                bad += 1;
            }
        }
    }
    (checked, bad)
}

fn criterion_08_ultradiscrete() -> bool {
    let mut detail = Vec::new();
    let mut ok = true;
    for g in [&F_QUARTER, &F_MINUS_X] {
        let rows = parse_rows(g.rows);
        let rep = verify_udte(&TropicalGrid::free(ExtInt::from(g.d), rows.clone()));
        let (oc, ob) = udte_oracle(&rows, g.d, false);
        ok &= rep.all_ok() && ob == 0 && rep.checked.len() == oc;
        detail.push(format!(
            "({},{}) reference grid: {} finite cells checked, failures {:?} (oracle {oc} checked, {ob} bad)",
            g.pq.0,
            g.pq.1,
            rep.checked.len(),
            rep.failures()
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dd);
    let mut reversible = 0;
    let mut oracle_bad = 0;
    for _ in 0..100 {
        let w = rng.gen_range(3..=8);
        let d = rng.gen_range(-4..=4);
        let steps = rng.gen_range(1..=6);
        let mut row = || {
            (0..w)
                .map(|_| ExtInt::from(rng.gen_range(-5..=5)))
                .collect::<Vec<_>>()
        };
        let (a, b) = (row(), row());
        let periodic = rng.gen_bool(0.5);
        let boundary = if periodic {
            Boundary::Periodic
        } else {
            Boundary::Fixed {
                left: ExtInt::from(rng.gen_range(-3..=3)),
                right: ExtInt::from(rng.gen_range(-3..=3)),
            }
        };
        let fwd = evolve(&a, &b, ExtInt::from(d), steps, boundary.clone()).unwrap();
        let n = fwd.rows.len();
        let back = evolve(
            &fwd.rows[n - 1],
            &fwd.rows[n - 2],
            ExtInt::from(d),
            steps,
            boundary,
        )
        .unwrap();
        let mut rev = back.rows.clone();
        rev.reverse();
        if rev == fwd.rows {
            reversible += 1;
        }
        if periodic && udte_oracle(&fwd.rows, d, true).1 != 0 {
            oracle_bad += 1;
        }
    }
    ok &= reversible == 100 && oracle_bad == 0;
    detail.push(format!(
        "reversible seeds {reversible}/100, periodic runs violating the oracle {oracle_bad}"
    ));

    let a1 = EllipticCurve::a1();
    let gq = genericity_check(
        &PsiSequence::new(a1.clone()),
        &quarter_branch(&a1),
        (3, 2, 0),
        1..=5,
        0..=3,
    )
    .unwrap();
    let a2 = EllipticCurve::a2();
    let gm = genericity_check(
        &PsiSequence::new(a2.clone()),
        &ValuationPoint::branch(&a2, q(0, 1)).unwrap(),
        (5, 2, 0),
        1..=4,
        0..=2,
    )
    .unwrap();
    ok &= gq.flagged().is_empty() && gm.flagged().is_empty();
    detail.push(format!(
        "genericity flags {:?} and {:?}",
        gq.flagged(),
        gm.flagged()
    ));
    verdict(8, "ultradiscrete", ok, &detail.join("; "))
}

fn criterion_09_analytic() -> bool {
    let w = WeierstrassData::new(Complex64::new(4.0, 0.0), Complex64::new(0.0, 0.0));
    let worst = random_pairs(&w, 50, 2024)
        .into_iter()
        .map(|(u, v)| check_add1(&w, u, v).unwrap().relative)
        .fold(0.0f64, f64::max);
    let probe = ContinuousTodaProbe::standard(1e-3);
    let toda = check_continuous_toda(&w, &probe).unwrap();
    let conv = toda_convergence(&w, &probe).unwrap();
    let second_order = (3.5..=4.5).contains(&conv.ratio);
    let ok = worst < 1e-9 && toda.max_residual < 1e-4 && second_order;
    verdict(
        9,
        "analytic layer",
        ok,
        &format!(
            "addition max relative {worst:.2e}, Toda residual {:.3e} at h = 1e-3 (bound 1e-4), h/2h ratio {:.3}, extrapolated {:.2e}",
            toda.max_residual, conv.ratio, conv.extrapolated_residual
        ),
    )
}

fn random_divisor(
    c: &Genus2Curve,
    base: &[MumfordDivisor],
    rng: &mut ChaCha8Rng,
) -> MumfordDivisor {
    let mut acc = MumfordDivisor::identity();
    for b in base {
        let k = rng.gen_range(-3..=3);
        acc = cantor_add(c, &acc, &cantor_mul(c, b, k).unwrap()).unwrap();
    }
    acc
}

fn criterion_10_genus_two() -> bool {
    let c = Genus2Curve::standard();
    let base: Vec<MumfordDivisor> = [(0, 1), (1, 1), (-1, 1)]
        .iter()
        .map(|&(x, y)| MumfordDivisor::from_point(&c, &q(x, 1), &q(y, 1)).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e2);
    let mut laws = 0;
    for _ in 0..100 {
        let (a, b, d) = (
            random_divisor(&c, &base, &mut rng),
            random_divisor(&c, &base, &mut rng),
            random_divisor(&c, &base, &mut rng),
        );
        let add = |x: &MumfordDivisor, y: &MumfordDivisor| cantor_add(&c, x, y).unwrap();
        let assoc = add(&add(&a, &b), &d) == add(&a, &add(&b, &d));
        let comm = add(&a, &b) == add(&b, &a);
        let ident = add(&a, &MumfordDivisor::identity()) == a;
        let inv = add(&a, &a.neg()).is_identity();
        if assoc && comm && ident && inv {
            laws += 1;
        }
    }

    // wp values: rational output, agreement with the splitting route, symmetry in the two points
    let mut wp_checked = 0;
    let mut wp_bad = 0;
    let mut degree_two = Vec::new();
    while degree_two.len() < 50 {
        let d = random_divisor(&c, &base, &mut rng);
        if let Ok(w) = wp_values(&c, &d) {
            wp_checked += 1;
            if wp_values_split(&c, &d).ok() != Some(w) {
                wp_bad += 1;
            }
            degree_two.push(d);
        }
    }
    let pts = [(q(0, 1), q(1, 1)), (q(1, 1), q(-1, 1)), (q(-1, 1), q(1, 1))];
    let mut sym = true;
    for (i, p1) in pts.iter().enumerate() {
        for p2 in &pts[i + 1..] {
            let d12 = MumfordDivisor::from_points(&c, (&p1.0, &p1.1), (&p2.0, &p2.1)).unwrap();
            let d21 = MumfordDivisor::from_points(&c, (&p2.0, &p2.1), (&p1.0, &p1.1)).unwrap();
            sym &= wp_values(&c, &d12).unwrap() == wp_values(&c, &d21).unwrap();
        }
    }

    let mut anti = 0;
    for k in 0..50 {
        let (u, v) = (&degree_two[k], &degree_two[(k * 7 + 3) % 50]);
        let quv = q_function(&c, u, v).unwrap();
        let qvu = q_function(&c, v, u).unwrap();
        if quv == -qvu && q_function(&c, u, u).unwrap().is_zero() {
            anti += 1;
        }
    }

    // genus-one data through the scalar recursion and the grid relation
    let r = q(-3, 4);
    let seq = ScalarSequence::new(
        PSI_AT_NODE
            .iter()
            .map(|&(a, b)| QuadExt::new(q(a, 1), q(b, 1), r.clone()))
            .collect(),
    )
    .unwrap();
    let rec = [
        (2, 1),
        (3, 1),
        (3, 2),
        (4, 1),
        (4, 3),
        (5, 2),
        (6, 5),
        (7, 4),
    ]
    .iter()
    .all(|&(m, n)| verify_rec_sequence(&seq, m, n).unwrap());
    let grid = dtoda3_grid(&seq, (3, 2, 0), 3, 3).unwrap();
    let feed = rec && grid.cells.all_ok() && grid.variants.delta_squared_form;

    let ok = laws == 100 && wp_bad == 0 && wp_checked == 50 && sym && anti == 50 && feed;
    verdict(
        10,
        "genus two",
        ok,
        &format!(
            "group laws {laws}/100, wp rational and split-consistent {}/{wp_checked}, symmetric {sym}, Q antisymmetric {anti}/50, genus-one feed-through {feed}",
            wp_checked - wp_bad
        ),
    )
}

fn main() -> std::process::ExitCode {
    let criteria: [fn() -> bool; 10] = [
        criterion_01_factored_listings,
        criterion_02_values_at_node_point,
        criterion_03_u_grids,
        criterion_04_valuation_sequences,
        criterion_05_f_grids,
        criterion_06_symbolic_identities,
        criterion_07_discrete_toda,
        criterion_08_ultradiscrete,
        criterion_09_analytic,
        criterion_10_genus_two,
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, run) in criteria.iter().enumerate() {
        let ok = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            println!("criterion {} (aborted): FAIL | {msg}", k + 1);
            false
        });
        failed += usize::from(!ok);
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        std::process::ExitCode::SUCCESS
    } else {
        std::process::ExitCode::FAILURE
    }
}
