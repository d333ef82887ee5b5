//! Property tests for the invariants of the zero/coefficient machinery, the
//! solvers and the plane reductions.

use proptest::prelude::*;

use zerodyn::cli::{parse_trajectory_csv, trajectory_csv};
use zerodyn::complex::{c, C64, ZERO};
use zerodyn::engine::{recover_zeros, solve_trajectory};
use zerodyn::extensions::{
    conda_residual, conda_scale, integrate_plane_numeric, reduce_with_report, solve_quadratic_plane, table_distance, transform_linear, ReductionSpec,
};
use zerodyn::identities::{build_derivative_system, xdot_from_ydot, ydot_from_xdot};
use zerodyn::polynomials::{case_coeffs, coeffs_from_zeros, expand_product, zeros_from_coeffs, CaseTag, MultiRootPolynomial};
use zerodyn::solvers::{flow, AppendixASystem, Variant};
use zerodyn::specfun::{carlson_rf, jacobi_sn_cn_dn};
use zerodyn::catalog::Catalog;
use zerodyn::Tolerances;

fn cpx(r: f64) -> impl Strategy<Value = C64> {
    (-r..r, -r..r).prop_map(|(a, b)| c(a, b))
}

fn pair(r: f64) -> impl Strategy<Value = [C64; 2]> {
    (cpx(r), cpx(r)).prop_map(|(a, b)| [a, b])
}

/// Two zeros at least `gap` apart and away from the origin.
fn zeros(gap: f64) -> impl Strategy<Value = [C64; 2]> {
    pair(1.0).prop_filter("separated", move |x| (x[0] - x[1]).norm() > gap && x[0].norm() > gap && x[1].norm() > gap)
}

fn case() -> impl Strategy<Value = CaseTag> {
    prop_oneof![Just(CaseTag::I), Just(CaseTag::II)]
}

fn spec() -> impl Strategy<Value = ReductionSpec> {
    (pair(1.0), pair(1.0), cpx(1.0), cpx(1.0))
        .prop_filter("invertible", |(r0, r1, _, _)| (r0[0] * r1[1] - r0[1] * r1[0]).norm() > 0.1)
        .prop_map(|(r0, r1, a2, b2)| ReductionSpec::new([r0, r1], a2, b2).unwrap())
}

fn dist(a: [C64; 2], b: [C64; 2]) -> f64 {
    (a[0] - b[0]).norm().max((a[1] - b[1]).norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn coefficients_round_trip(x in zeros(0.05), case in case()) {
        let tol = Tolerances::default();
        let sig = case.signature();
        let p = MultiRootPolynomial::from_values(&x, &sig, &tol).unwrap();
        let back = zeros_from_coeffs(&coeffs_from_zeros(&p), &sig, &tol).unwrap();
        let got = [back.zeros()[0].value, back.zeros()[1].value];
        let err = if case == CaseTag::II { dist(got, x).min(dist([got[1], got[0]], x)) } else { dist(got, x) };
        prop_assert!(err < 1e-8, "{err}");
    }

    #[test]
    fn closed_forms_match_the_product(x in pair(2.0), case in case()) {
        let full = expand_product(&x, &case.signature());
        let y = case_coeffs(case, x[0], x[1]);
        for m in 0..4 {
            prop_assert!((full[m + 1] - y[m]).norm() < 1e-12 * (1.0 + y[m].norm()));
        }
    }

    #[test]
    fn chain_rule_inverts_the_identities(x in zeros(0.2), v in pair(1.0), case in case()) {
        let tol = Tolerances::default();
        let p = MultiRootPolynomial::from_values(&x, &case.signature(), &tol).unwrap();
        let ydot = ydot_from_xdot(&p, &v);
        let sys = build_derivative_system(&p, &tol).unwrap();
        let back = xdot_from_ydot(&sys, &ydot, &tol).unwrap();
        prop_assert!(dist([back[0], back[1]], v) < 1e-10 * (1.0 + v[0].norm().max(v[1].norm())));
    }

    #[test]
    fn recovery_inverts_the_forward_map(x in zeros(0.2), case in case(), k in 0usize..6) {
        let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        let pr = pairs[k];
        let y = case_coeffs(case, x[0], x[1]);
        let near = [x[0] + c(1e-4, 0.0), x[1] - c(0.0, 1e-4)];
        let r = recover_zeros(case, pr, [y[pr.0 - 1], y[pr.1 - 1]], near, 1e-8).unwrap();
        prop_assert!(dist(r.x, x) < 1e-8, "{:?} vs {x:?}", r.x);
    }

    #[test]
    fn jacobi_identities_and_periods(z in cpx(3.0), k in cpx(0.6)) {
        let tol = Tolerances::default();
        let j = jacobi_sn_cn_dn(z, k, &tol).unwrap();
        let scale = 1.0 + j.sn.norm_sqr() + j.cn.norm_sqr();
        prop_assert!((j.sn * j.sn + j.cn * j.cn - 1.0).norm() < 1e-11 * scale);
        prop_assert!((k * k * j.sn * j.sn + j.dn * j.dn - 1.0).norm() < 1e-11 * scale);
        // sn has period 4K
        let kk = carlson_rf(ZERO, C64::from(1.0) - k * k, C64::from(1.0)).unwrap();
        let s = jacobi_sn_cn_dn(z + 4.0 * kk, k, &tol).unwrap();
        prop_assert!((s.sn - j.sn).norm() < 1e-9 * (1.0 + j.sn.norm()));
    }

    #[test]
    fn conda_holds_for_every_reshuffle(r in spec(), b in (pair(1.0), pair(1.0))) {
        let tol = Tolerances::default();
        let s = transform_linear(&r).unwrap();
        prop_assert!(conda_residual(&s).norm() < 1e-10 * conda_scale(&s));
        // composing with a second linear map stays inside the family
        let (b0, b1) = b;
        prop_assume!((b0[0] * b1[1] - b0[1] * b1[0]).norm() > 0.1);
        let a = r.a;
        let ba = [
            [b0[0] * a[0][0] + b0[1] * a[1][0], b0[0] * a[0][1] + b0[1] * a[1][1]],
            [b1[0] * a[0][0] + b1[1] * a[1][0], b1[0] * a[0][1] + b1[1] * a[1][1]],
        ];
        let s2 = transform_linear(&ReductionSpec::new(ba, r.a2, r.b2).unwrap()).unwrap();
        prop_assert!(conda_residual(&s2).norm() < 1e-10 * conda_scale(&s2));
        let red = reduce_with_report(&s2, &tol).unwrap();
        let back = transform_linear(&red.spec).unwrap();
        prop_assert!(table_distance(&back.table, &s2.table) < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn plane_solutions_satisfy_their_ode(r in spec(), a in cpx(0.5), z0 in pair(0.2), t in 0.1f64..0.9) {
        let tol = Tolerances::default();
        let mut s = transform_linear(&r).unwrap();
        s.a = a;
        let h = 1e-5;
        let tr = solve_quadratic_plane(&s, z0, &[0.0, t - h, t, t + h], &tol).unwrap();
        prop_assume!(tr.is_complete(4));
        let f = s.rhs(tr.states[2]);
        for n in 0..2 {
            let fd = (tr.states[3][n] - tr.states[1][n]) / (2.0 * h);
            prop_assert!((fd - f[n]).norm() < 1e-6 * (1.0 + f[n].norm()), "{fd} vs {}", f[n]);
        }
    }

    #[test]
    fn solver_flows_satisfy_their_ode(
        which in 0usize..5,
        al in prop::collection::vec(cpx(0.5), 2),
        be in prop::collection::vec(cpx(0.5), 2),
        y0 in pair(0.5),
        t in 0.1f64..0.5,
    ) {
        let tol = Tolerances::default();
        let (v, first, second) = [(Variant::A1, 1, 2), (Variant::A2, 1, 3), (Variant::A31, 1, 2), (Variant::A32, 1, 3), (Variant::A33, 1, 4)][which];
        let gamma = if v == Variant::A2 { vec![ZERO, c(0.1, 0.0)] } else { vec![] };
        let sys = AppendixASystem::new(v, first, second, al, be, gamma).unwrap();
        let Ok(mut f) = flow(&sys, y0, &tol) else { return Ok(()) };
        let h = 1e-5;
        let (Ok(a), Ok(m), Ok(b)) = (f.state_at(t - h), f.state_at(t), f.state_at(t + h)) else { return Ok(()) };
        let rhs = sys.rhs(m).unwrap();
        for n in 0..2 {
            let fd = (b[n] - a[n]) / (2.0 * h);
            prop_assert!((fd - rhs[n]).norm() < 1e-6 * (1.0 + rhs[n].norm()), "{v:?} {fd} vs {}", rhs[n]);
        }
    }

    #[test]
    fn trajectory_csv_round_trips_exactly(z0 in pair(0.3), a in cpx(1.0), r in spec()) {
        let mut s = transform_linear(&r).unwrap();
        s.a = a;
        let times: Vec<f64> = (0..11).map(|k| k as f64 / 10.0).collect();
        let tr = integrate_plane_numeric(&s, z0, &times, 1e-10).unwrap();
        let rows = parse_trajectory_csv(&trajectory_csv(&tr)).unwrap();
        prop_assert_eq!(rows.len(), tr.times.len());
        for (row, (t, x)) in rows.iter().zip(tr.times.iter().zip(&tr.states)) {
            prop_assert_eq!(row.0.to_bits(), t.to_bits());
            prop_assert_eq!(row.1, *x);
        }
    }

    #[test]
    fn trajectories_are_deterministic(k in 0usize..34, seed in 0u64..1000) {
        let tol = Tolerances::default();
        let cat = Catalog::builtin();
        let m = cat.distinct().nth(k).unwrap();
        let mut smp = zerodyn::catalog::Sampler::new(seed);
        let p = smp.params(m, 1.0);
        let x0 = smp.point(0.5);
        let inst = m.instantiate(&p).unwrap();
        let times: Vec<f64> = (0..21).map(|j| j as f64 / 40.0).collect();
        let a = solve_trajectory(&inst, x0, &times, &tol);
        let b = solve_trajectory(&inst, x0, &times, &tol);
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(a), Err(b)) => prop_assert_eq!(a.to_string(), b.to_string()),
            _ => prop_assert!(false, "one run failed and the other did not"),
        }
    }
}
