//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use zerodyn::catalog::{check_model, Catalog, LedgerTarget, Sampler};
use zerodyn::cli::{model_seed, trajectory_sweep};
use zerodyn::complex::{c, C64, ONE, ZERO};
use zerodyn::engine::{check_admissible, compare};
use zerodyn::extensions::{
    canonical_table, conda_residual, conda_scale, integrate_plane_numeric, plane_period, reduce_with_report, solve_quadratic_plane, transform_linear,
    PlaneQuadraticSystem, ReductionSpec,
};
use zerodyn::identities::{build_derivative_system, complete_ydot, pair_relations, xdot_from_ydot};
use zerodyn::polynomials::{coeffs_from_zeros, expand_product, zeros_from_coeffs, MultiRootPolynomial, SelectedPair};
use zerodyn::solvers::{A3EnergyFlow, Flow, Variant};
use zerodyn::specfun::jacobi_sn_cn_dn;
use zerodyn::{Error, Tolerances};

struct Outcome {
    pass: bool,
    detail: String,
}

fn rc(rng: &mut ChaCha8Rng, r: f64) -> C64 {
    c(rng.gen_range(-r..r), rng.gen_range(-r..r))
}

/// Points in the unit square with pairwise distance above `gap`.
fn separated(rng: &mut ChaCha8Rng, n: usize, gap: f64) -> Vec<C64> {
    loop {
        let x: Vec<C64> = (0..n).map(|_| rc(rng, 1.0)).collect();
        let ok = (0..n).all(|i| (i + 1..n).all(|j| (x[i] - x[j]).norm() > gap));
        if ok && x.iter().all(|z| z.norm() > gap) {
            return x;
        }
    }
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

fn seconds(d: Duration) -> f64 {
    d.as_secs_f64()
}

fn round_trip() -> Outcome {
    let tol = Tolerances::default();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for sig in [[3usize, 1], [2, 2]] {
        for _ in 0..1000 {
            let x = separated(&mut rng, 2, 0.05);
            let p = MultiRootPolynomial::from_values(&x, &sig, &tol).unwrap();
            let back = match zeros_from_coeffs(&coeffs_from_zeros(&p), &sig, &tol) {
                Ok(b) => b,
                Err(_) => {
                    failures += 1;
                    continue;
                }
            };
            let got: Vec<C64> = back.zeros().iter().map(|z| z.value).collect();
            // equal multiplicities leave the labels free
            let direct = rel(got[0], x[0]).max(rel(got[1], x[1]));
            let err = if sig[0] == sig[1] { direct.min(rel(got[0], x[1]).max(rel(got[1], x[0]))) } else { direct };
            worst = worst.max(err);
        }
    }
    let secs = seconds(start.elapsed());
    Outcome {
        pass: failures == 0 && worst < 1e-8 && secs < 5.0,
        detail: format!("2x1000 instances, max rel err {worst:.2e}, {failures} failures, {secs:.2}s"),
    }
}

fn signatures() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..=6 {
        out.push(vec![a]);
        for b in 1..=a {
            if a + b <= 6 {
                out.push(vec![a, b]);
            }
            for c in 1..=b {
                if a + b + c <= 6 {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out
}

fn identity_suite() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let h = 1e-3;
    let sigs = signatures();
    let mut worst: f64 = 0.0;
    for sig in &sigs {
        for _ in 0..200 {
            let x = separated(&mut rng, sig.len(), 0.2);
            let v: Vec<C64> = (0..sig.len()).map(|_| rc(&mut rng, 1.0)).collect();
            let at = |s: f64| -> Vec<C64> { x.iter().zip(&v).map(|(a, b)| a + b * s).collect() };
            // fourth-order central difference of the coefficients
            let y = |s: f64| expand_product(&at(s), sig);
            let (p1, m1, p2, m2) = (y(h), y(-h), y(2.0 * h), y(-2.0 * h));
            let ydot: Vec<C64> = (1..p1.len()).map(|i| (8.0 * (p1[i] - m1[i]) - (p2[i] - m2[i])) / (12.0 * h)).collect();
            let sys = build_derivative_system(&MultiRootPolynomial::from_values(&x, sig, &tol).unwrap(), &tol).unwrap();
            let xd = xdot_from_ydot(&sys, &ydot, &tol).unwrap();
            let scale = v.iter().map(|z| z.norm()).fold(1.0, f64::max);
            worst = worst.max(xd.iter().zip(&v).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) / scale);
        }
    }
    Outcome { pass: worst < 1e-6, detail: format!("{} signatures (N<=3, M<=6) x 200, max rel err {worst:.2e}", sigs.len()) }
}

fn pair_relation_suite() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let relations = pair_relations();
    let mut worst: f64 = 0.0;
    for r in &relations {
        let mut done = 0;
        while done < 100 {
            let x = separated(&mut rng, 2, 0.2);
            let sys = build_derivative_system(&MultiRootPolynomial::from_values(&x, &r.case.signature(), &tol).unwrap(), &tol).unwrap();
            let pair = SelectedPair::unordered(r.sources[0], r.sources[1], r.case).unwrap();
            let given = [rc(&mut rng, 1.0), rc(&mut rng, 1.0)];
            let Ok(full) = complete_ydot(&sys, pair, given, &tol) else { continue };
            let y4 = [full[0], full[1], full[2], full[3]];
            let v = (r.eval)(x[0], x[1], &y4);
            worst = worst.max((v - y4[r.target - 1]).norm() / (1.0 + y4[r.target - 1].norm()));
            done += 1;
        }
    }
    Outcome { pass: relations.len() == 24 && worst < 1e-10, detail: format!("{} relations x 100 points, max rel err {worst:.2e}", relations.len()) }
}

fn catalog_rederivation() -> Outcome {
    let start = Instant::now();
    let cat = Catalog::builtin();
    let distinct: Vec<(usize, _)> = cat.models.iter().enumerate().filter(|(_, m)| m.duplicate_of.is_none()).collect();
    let checks: Vec<_> = distinct.par_iter().map(|(i, m)| (m.id.clone(), check_model(cat, m, 100, model_seed(1, *i)))).collect();
    let mut worst: f64 = 0.0;
    let mut errors = Vec::new();
    for (id, ch) in &checks {
        match ch {
            Ok(ch) => worst = worst.max(ch.max_discrepancy),
            Err(e) => errors.push(format!("{id}: {e}")),
        }
    }
    let power = cat.ledger.iter().any(|e| {
        e.target == LedgerTarget::AppendixMap && e.printed.iter().any(|s| s.contains("1638*b")) && e.corrected.iter().any(|s| s.contains("16384*b"))
    });
    let secs = seconds(start.elapsed());
    Outcome {
        pass: distinct.len() == 34 && errors.is_empty() && worst < 1e-9 && power && secs < 30.0,
        detail: format!(
            "{} models x 100 points, max rel discrepancy {worst:.2e}, ledger {} entries (2^14 b entry: {}), {secs:.2}s{}",
            distinct.len(),
            cat.ledger.len(),
            if power { "present" } else { "missing" },
            if errors.is_empty() { String::new() } else { format!(", errors: {errors:?}") }
        ),
    }
}

fn analytic_vs_oracle() -> Outcome {
    let tol = Tolerances::default();
    let start = Instant::now();
    let cat = Catalog::builtin();
    let models: Vec<(usize, _)> = cat.models.iter().enumerate().filter(|(_, m)| m.duplicate_of.is_none() && m.has_closed_form_path()).collect();
    let sweeps: Vec<_> = models.par_iter().map(|(i, m)| (m.id.clone(), trajectory_sweep(m, 20, model_seed(1, *i) ^ 0x5bd1_e995, &tol))).collect();
    let (mut worst, mut min_h, mut runs) = (0.0f64, f64::INFINITY, 0);
    let mut errors = Vec::new();
    let mut worst_id = String::new();
    for (id, (done, dev, h, errs)) in &sweeps {
        runs += done;
        if *dev > worst {
            worst = *dev;
            worst_id = id.clone();
        }
        min_h = min_h.min(*h);
        errors.extend(errs.iter().map(|e| format!("{id}: {e}")));
    }
    let secs = seconds(start.elapsed());
    Outcome {
        pass: errors.is_empty() && worst < 1e-7 && secs < 120.0,
        detail: format!(
            "{} models, {runs} runs, max rel dev {worst:.2e} ({worst_id}), shortest horizon {min_h:.3}, {secs:.1}s{}",
            models.len(),
            if errors.is_empty() { String::new() } else { format!(", errors: {errors:?}") }
        ),
    }
}

fn energy_conservation() -> Outcome {
    let tol = Tolerances::default();
    let cat = Catalog::builtin();
    let times: Vec<f64> = (1..=40).map(|k| k as f64 / 40.0).collect();
    let (mut worst, mut runs, mut cut) = (0.0f64, 0, 0);
    let mut models = 0;
    for (i, m) in cat.models.iter().enumerate().filter(|(_, m)| m.duplicate_of.is_none() && matches!(m.variant, Variant::A32 | Variant::A33)) {
        models += 1;
        let mut s = Sampler::new(model_seed(1, i));
        let mut done = 0;
        while done < 20 {
            let p = s.params(m, 1.0);
            let x0 = s.point(0.5);
            let Ok(inst) = m.instantiate(&p) else { continue };
            if check_admissible(&inst, x0, &tol).is_err() {
                continue;
            }
            let Ok(mut f) = A3EnergyFlow::new(&inst.system, inst.driving_state(x0), &tol) else { continue };
            done += 1;
            for &t in &times {
                match f.state_at(t) {
                    Ok(_) => worst = worst.max(f.energy_drift()),
                    Err(Error::BlowUp { .. }) => {
                        cut += 1;
                        break;
                    }
                    Err(e) => panic!("{}: {e}", m.id),
                }
            }
        }
        runs += done;
    }
    Outcome { pass: models > 0 && worst < 1e-9, detail: format!("{models} models, {runs} trajectories ({cut} cut at a blow-up), max C drift {worst:.2e}") }
}

fn elliptic_kernel() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let z = c(rng.gen_range(-4.0..4.0), rng.gen_range(-2.0..2.0));
        let k = loop {
            let k = rc(&mut rng, 0.9);
            if k.norm() <= 0.9 {
                break k;
            }
        };
        let j = jacobi_sn_cn_dn(z, k, &tol).unwrap();
        // near a pole the terms are large; the violation is judged on their scale
        let scale = 1.0 + j.sn.norm_sqr() + j.cn.norm_sqr() + j.dn.norm_sqr();
        let a = (j.sn * j.sn + j.cn * j.cn - ONE).norm();
        let b = (k * k * j.sn * j.sn + j.dn * j.dn - ONE).norm();
        worst = worst.max(a.max(b) / scale);
    }
    let mut limit: f64 = 0.0;
    for _ in 0..1000 {
        let z = c(rng.gen_range(-3.0..3.0), rng.gen_range(-1.0..1.0));
        let j = jacobi_sn_cn_dn(z, ZERO, &tol).unwrap();
        limit = limit.max((j.sn - z.sin()).norm()).max((j.cn - z.cos()).norm()).max((j.dn - ONE).norm());
        let j = jacobi_sn_cn_dn(z, ONE, &tol).unwrap();
        let sech = ONE / z.cosh();
        limit = limit.max((j.sn - z.tanh()).norm()).max((j.cn - sech).norm()).max((j.dn - sech).norm());
    }
    Outcome { pass: worst < 1e-11 && limit < 1e-12, detail: format!("1e4 points |k|<=0.9, max violation {worst:.2e}; k=0/k=1 limits max err {limit:.2e}") }
}

fn random_spec(rng: &mut ChaCha8Rng) -> ReductionSpec {
    loop {
        let a = [[rc(rng, 1.0), rc(rng, 1.0)], [rc(rng, 1.0), rc(rng, 1.0)]];
        if (a[0][0] * a[1][1] - a[0][1] * a[1][0]).norm() > 0.1 {
            return ReductionSpec::new(a, rc(rng, 1.0), rc(rng, 1.0)).unwrap();
        }
    }
}

fn reduction_suite() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let times: Vec<f64> = (0..41).map(|k| k as f64 / 40.0).collect();
    let (mut conda, mut trip, mut dev) = (0.0f64, 0.0f64, 0.0f64);
    let mut short = 0;
    let mut errors = Vec::new();
    for _ in 0..500 {
        let r = random_spec(&mut rng);
        let mut s = transform_linear(&r).unwrap();
        conda = conda.max(conda_residual(&s).norm() / conda_scale(&s));
        match reduce_with_report(&s, &tol) {
            Ok(red) => trip = trip.max(red.round_trip),
            Err(e) => errors.push(e.to_string()),
        }
        s.a = rc(&mut rng, 1.0);
        let z0 = [rc(&mut rng, 0.2), rc(&mut rng, 0.2)];
        match (solve_quadratic_plane(&s, z0, &times, &tol), integrate_plane_numeric(&s, z0, &times, 1e-12)) {
            (Ok(an), Ok(nu)) => {
                if !an.is_complete(times.len()) || !nu.is_complete(times.len()) {
                    short += 1;
                }
                dev = dev.max(compare(&an, &nu).max_relative);
            }
            (Err(e), _) | (_, Err(e)) => errors.push(e.to_string()),
        }
    }
    Outcome {
        pass: errors.is_empty() && conda < 1e-10 && trip < 1e-9 && dev < 1e-7,
        detail: format!(
            "500 specs, conda {conda:.2e} (x scale), round trip {trip:.2e}, solve vs oracle {dev:.2e} ({short} runs end at a singularity){}",
            if errors.is_empty() { String::new() } else { format!(", errors: {errors:?}") }
        ),
    }
}

fn isochrony() -> Outcome {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    let mut pass = true;
    let mut worst: f64 = 0.0;
    let mut found = Vec::new();
    for ratio in [1.0, 0.5, 2.0, 3.0] {
        let mut qs = Vec::new();
        for _ in 0..3 {
            let b2 = rc(&mut rng, 1.0);
            let s = PlaneQuadraticSystem::new(c(0.0, 1.0), canonical_table(b2 * ratio, b2));
            let z0 = [rc(&mut rng, 0.05), rc(&mut rng, 0.05)];
            match plane_period(&s, z0, 12.0 * std::f64::consts::TAU, &tol) {
                Ok(Some(p)) => {
                    let q = p.multiple.unwrap_or(0);
                    pass &= q > 0 && (p.period - q as f64 * std::f64::consts::TAU).abs() < 1e-9 && p.deviation < 1e-6;
                    worst = worst.max(p.deviation);
                    qs.push(q.to_string());
                }
                _ => {
                    pass = false;
                    qs.push("none".into());
                }
            }
        }
        found.push(format!("a2/b2={ratio}: q={}", qs.join("/")));
    }
    Outcome { pass, detail: format!("{}; max deviation {worst:.2e}", found.join(", ")) }
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = zerodyn::cli::run(args.iter().copied(), &mut out, &mut err);
    (code, out)
}

fn determinism() -> Outcome {
    let configs: [&[&str]; 3] = [
        &["zerodyn", "solve", "--model", "4.(i)1.2d", "--param", "a=1", "--param", "b=1", "--seed", "42", "--t", "0:1:51"],
        &[
            "zerodyn", "solve", "--model", "ii24b", "--param", "a0=0.3", "--param", "a1=-0.2+0.1i", "--param", "a2=0.1", "--param", "b0=0.2", "--param", "b1=0.1i",
            "--param", "b2=-0.1", "--param", "b3=0.05", "--seed", "7", "--format", "json", "--t", "0:0.5:21",
        ],
        &["zerodyn", "solve", "--plane", "3,0,1;0,1,3", "--gauge", "i", "--seed", "3", "--t", "0:6.283185307179586:65"],
    ];
    let mut pass = true;
    let mut notes = Vec::new();
    for args in configs {
        let (c1, o1) = run_cli(args);
        let (c2, o2) = run_cli(args);
        let same = c1 == c2 && o1 == o2 && !o1.is_empty();
        pass &= same && c1 != 2;
        notes.push(format!("{} bytes exit {c1} {}", o1.len(), if same { "identical" } else { "DIFFERENT" }));
    }
    Outcome { pass, detail: notes.join("; ") }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("zero-coefficient round trip", round_trip),
        ("identity suite", identity_suite),
        ("two-term ydot relations", pair_relation_suite),
        ("catalog rederivation", catalog_rederivation),
        ("analytic vs oracle trajectories", analytic_vs_oracle),
        ("energy conservation", energy_conservation),
        ("elliptic kernel", elliptic_kernel),
        ("plane reduction suite", reduction_suite),
        ("isochrony", isochrony),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, n + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
