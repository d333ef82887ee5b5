//! Derivative identities between zero velocities xdot_n and coefficient
//! velocities ydot_m.
//!
//! Differentiating P(z,t) = prod (z - x_n)^mu_n in t and taking the first
//! mu_n - 1 z-derivatives at z = x_n gives M - N linear constraints on ydot
//! ("constraint rows"); the (mu_n - 1)-th derivative gives xdot_n.

use nalgebra::{DMatrix, DVector};

use crate::complex::{C64, ONE, ZERO};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::polynomials::{coeff_jacobian, separation_threshold, CaseTag, MultiRootPolynomial, SelectedPair};

#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeSystem {
    pub polynomial: MultiRootPolynomial,
    /// (M - N) x M, rows ordered by zero then derivative order.
    pub constraints: DMatrix<C64>,
    /// N x M.
    pub transfer: DMatrix<C64>,
    pub prefactors: Vec<C64>,
}

fn falling(n: usize, k: usize) -> f64 {
    (0..k).map(|j| (n - j) as f64).product()
}

/// Coefficients of sum_m ydot_m d^order/dz^order z^(M-m) at z = x.
pub fn derivative_row(x: C64, degree: usize, order: usize) -> Vec<C64> {
    (1..=degree)
        .map(|m| {
            let p = degree - m;
            if p < order {
                ZERO
            } else {
                falling(p, order) * x.powu((p - order) as u32)
            }
        })
        .collect()
}

pub fn build_derivative_system(p: &MultiRootPolynomial, tol: &Tolerances) -> Result<DerivativeSystem> {
    let zeros = p.zeros();
    for i in 0..zeros.len() {
        for j in i + 1..zeros.len() {
            let d = (zeros[i].value - zeros[j].value).norm();
            if d <= separation_threshold(zeros[i].value, zeros[j].value, tol) {
                return Err(Error::Collision { distance: d });
            }
        }
    }
    let m_deg = p.degree();
    let n = p.len();
    let mut constraints = DMatrix::zeros(m_deg - n, m_deg);
    let mut transfer = DMatrix::zeros(n, m_deg);
    let mut prefactors = Vec::with_capacity(n);
    let mut row = 0;
    for (k, z) in zeros.iter().enumerate() {
        for order in 0..z.multiplicity - 1 {
            for (col, v) in derivative_row(z.value, m_deg, order).into_iter().enumerate() {
                constraints[(row, col)] = v;
            }
            row += 1;
        }
        for (col, v) in derivative_row(z.value, m_deg, z.multiplicity - 1).into_iter().enumerate() {
            transfer[(k, col)] = v;
        }
        let mut denom = C64::from(falling(z.multiplicity, z.multiplicity));
        for (l, other) in zeros.iter().enumerate() {
            if l != k {
                denom *= (z.value - other.value).powu(other.multiplicity as u32);
            }
        }
        prefactors.push(-ONE / denom);
    }
    Ok(DerivativeSystem { polynomial: p.clone(), constraints, transfer, prefactors })
}

/// Largest constraint violation, each row relative to sum |row_m ydot_m|.
pub fn constraint_residual(sys: &DerivativeSystem, ydot: &[C64]) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..sys.constraints.nrows() {
        let mut acc = ZERO;
        let mut scale = 0.0;
        for (m, &yd) in ydot.iter().enumerate() {
            let v = sys.constraints[(r, m)] * yd;
            acc += v;
            scale += v.norm();
        }
        if scale > 0.0 {
            worst = worst.max(acc.norm() / scale);
        }
    }
    worst
}

pub fn xdot_from_ydot(sys: &DerivativeSystem, ydot: &[C64], tol: &Tolerances) -> Result<Vec<C64>> {
    if ydot.len() != sys.polynomial.degree() {
        return Err(Error::InvalidSystem("ydot length must equal the degree".into()));
    }
    let residual = constraint_residual(sys, ydot);
    if residual > tol.ydot_consistency {
        return Err(Error::InconsistentYdot { residual });
    }
    Ok((0..sys.prefactors.len())
        .map(|n| {
            let dot: C64 = ydot.iter().enumerate().map(|(m, &yd)| sys.transfer[(n, m)] * yd).sum();
            sys.prefactors[n] * dot
        })
        .collect())
}

/// Reciprocal condition of a small matrix after column equilibration.
fn rcond(a: &DMatrix<C64>) -> f64 {
    let mut b = a.clone();
    for j in 0..b.ncols() {
        let norm = b.column(j).norm();
        if norm == 0.0 {
            return 0.0;
        }
        b.column_mut(j).unscale_mut(norm);
    }
    let sv = b.singular_values();
    let max = sv.max();
    if max == 0.0 {
        0.0
    } else {
        sv.min() / max
    }
}

/// Fill in the M - N unknown ydot components from the N given ones
/// (1-based index, value) by solving the constraint rows.
pub fn complete_ydot_indices(sys: &DerivativeSystem, given: &[(usize, C64)], tol: &Tolerances) -> Result<Vec<C64>> {
    let m_deg = sys.polynomial.degree();
    let free = sys.constraints.nrows();
    if given.len() + free != m_deg {
        return Err(Error::InvalidSystem(format!("need exactly {} given components", m_deg - free)));
    }
    let mut full = vec![ZERO; m_deg];
    let mut known = vec![false; m_deg];
    for &(m, v) in given {
        if m == 0 || m > m_deg || known[m - 1] {
            return Err(Error::InvalidSystem(format!("bad coefficient index {m}")));
        }
        known[m - 1] = true;
        full[m - 1] = v;
    }
    if free == 0 {
        return Ok(full);
    }
    let unknown: Vec<usize> = (0..m_deg).filter(|&m| !known[m]).collect();
    let minor = DMatrix::from_fn(free, free, |r, k| sys.constraints[(r, unknown[k])]);
    let rc = rcond(&minor);
    if rc < tol.singular_rcond {
        return Err(Error::SingularMinor { rcond: rc });
    }
    let rhs = DVector::from_fn(free, |r, _| {
        -(0..m_deg).filter(|&m| known[m]).map(|m| sys.constraints[(r, m)] * full[m]).sum::<C64>()
    });
    let sol = minor.lu().solve(&rhs).ok_or(Error::SingularMinor { rcond: 0.0 })?;
    for (k, &m) in unknown.iter().enumerate() {
        full[m] = sol[k];
    }
    Ok(full)
}

pub fn complete_ydot(sys: &DerivativeSystem, pair: SelectedPair, values: [C64; 2], tol: &Tolerances) -> Result<Vec<C64>> {
    complete_ydot_indices(sys, &[(pair.first, values[0]), (pair.second, values[1])], tol)
}

/// Chain rule through the coefficient map.
pub fn ydot_from_xdot(p: &MultiRootPolynomial, xdot: &[C64]) -> Vec<C64> {
    let jac = coeff_jacobian(&p.values(), &p.signature());
    (0..jac.nrows()).map(|m| (0..jac.ncols()).map(|n| jac[(m, n)] * xdot[n]).sum()).collect()
}

/// Zero velocities of a simple-root polynomial, directly from the generic formula.
pub fn generic_xdot(x: &[C64], ydot: &[C64]) -> Vec<C64> {
    let m_deg = x.len();
    (0..m_deg)
        .map(|n| {
            let mut den = ONE;
            for (l, &xl) in x.iter().enumerate() {
                if l != n {
                    den *= x[n] - xl;
                }
            }
            let num: C64 = ydot.iter().enumerate().map(|(m, &yd)| yd * x[n].powu((m_deg - m - 1) as u32)).sum();
            -num / den
        })
        .collect()
}

/// Closed-form xdot for M = 4, N = 2 in terms of a selected pair of ydot.
pub fn pair_xdot(case: CaseTag, pair: (usize, usize), x1: C64, x2: C64, yd: [C64; 2]) -> Result<[C64; 2]> {
    let (a, b) = (yd[0], yd[1]);
    let d = x1 - x2;
    let out = match (case, pair) {
        (CaseTag::I, (1, 2)) => [-(3.0 * x1 * a + b) / (3.0 * d), ((2.0 * x1 + x2) * a + b) / d],
        (CaseTag::I, (1, 3)) => [
            -(3.0 * x1 * x1 * a - b) / (6.0 * x1 * d),
            (x1 * (x1 + 2.0 * x2) * a - b) / (2.0 * x1 * d),
        ],
        (CaseTag::I, (1, 4)) => [
            -(x1.powu(3) * a + b) / (3.0 * x1 * x1 * d),
            (x1 * x1 * x2 * a + b) / (x1 * x1 * d),
        ],
        (CaseTag::I, (2, 3)) => [
            (x1 * a + b) / (3.0 * x1 * d),
            -(x1 * (x1 + 2.0 * x2) * a + (2.0 * x1 + x2) * b) / (3.0 * x1 * x1 * d),
        ],
        (CaseTag::I, (2, 4)) => [
            (x1 * x1 * a - 3.0 * b) / (6.0 * x1 * x1 * d),
            -(x1 * x1 * x2 * a - (2.0 * x1 + x2) * b) / (2.0 * x1.powu(3) * d),
        ],
        (CaseTag::I, (3, 4)) => [
            -(x1 * a + 3.0 * b) / (3.0 * x1 * x1 * d),
            (x1 * x2 * a + (x1 + 2.0 * x2) * b) / (x1.powu(3) * d),
        ],
        (CaseTag::II, (1, 2)) => [-((2.0 * x1 + x2) * a + b) / (2.0 * d), ((x1 + 2.0 * x2) * a + b) / (2.0 * d)],
        (CaseTag::II, (1, 3)) => {
            let q = 2.0 * (x1 * x1 - x2 * x2);
            [-(x1 * (x1 + 2.0 * x2) * a - b) / q, (x2 * (x2 + 2.0 * x1) * a - b) / q]
        }
        (CaseTag::II, (1, 4)) => {
            let q = 2.0 * x1 * x2 * d;
            [-(x1 * x1 * x2 * a + b) / q, (x1 * x2 * x2 * a + b) / q]
        }
        (CaseTag::II, (2, 3)) => {
            let q = 2.0 * (x1.powu(3) - x2.powu(3));
            [
                (x1 * (x1 + 2.0 * x2) * a + (2.0 * x1 + x2) * b) / q,
                -(x2 * (x2 + 2.0 * x1) * a + (2.0 * x2 + x1) * b) / q,
            ]
        }
        (CaseTag::II, (2, 4)) => {
            let q = 2.0 * x1 * x2 * (x1 * x1 - x2 * x2);
            [
                (x1 * x1 * x2 * a - (2.0 * x1 + x2) * b) / q,
                -(x2 * x2 * x1 * a - (2.0 * x2 + x1) * b) / q,
            ]
        }
        (CaseTag::II, (3, 4)) => [
            -(x1 * x2 * a + (x1 + 2.0 * x2) * b) / (2.0 * x1 * x2 * x2 * d),
            (x1 * x2 * a + (x2 + 2.0 * x1) * b) / (2.0 * x2 * x1 * x1 * d),
        ],
        _ => return Err(Error::InvalidSystem(format!("bad coefficient pair {pair:?}"))),
    };
    Ok(out)
}

pub type RelationFn = fn(C64, C64, &[C64; 4]) -> C64;

/// One explicit relation expressing ydot_target through two other ydot components.
#[derive(Clone, Copy)]
pub struct PairRelation {
    pub case: CaseTag,
    pub target: usize,
    pub sources: [usize; 2],
    pub eval: RelationFn,
    /// The commonly printed form where it differs from the correct one.
    pub misprint: Option<RelationFn>,
}

impl std::fmt::Debug for PairRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ydot{} from ydot{}, ydot{} (case {})", self.target, self.sources[0], self.sources[1], self.case.label())
    }
}

macro_rules! rel {
    ($case:expr, $t:expr, [$a:expr, $b:expr], |$x1:ident, $x2:ident, $y:ident| $body:expr) => {
        PairRelation {
            case: $case,
            target: $t,
            sources: [$a, $b],
            #[allow(unused_variables)]
            eval: |$x1, $x2, $y| $body,
            misprint: None,
        }
    };
}

/// All 24 explicit two-term relations among the ydot for M = 4, N = 2.
pub fn pair_relations() -> Vec<PairRelation> {
    use CaseTag::{I, II};
    let mut out = vec![
        PairRelation {
            misprint: Some(|x1, _x2, y| -(2.0 * x1 * y[1] + y[2]) / (3.0 * x1.powu(3))),
            ..rel!(I, 1, [2, 3], |x1, x2, y| -(2.0 * x1 * y[1] + y[2]) / (3.0 * x1 * x1))
        },
        rel!(I, 1, [2, 4], |x1, x2, y| -(x1 * x1 * y[1] - y[3]) / (2.0 * x1.powu(3))),
        rel!(I, 1, [3, 4], |x1, x2, y| (x1 * y[2] + 2.0 * y[3]) / x1.powu(3)),
        rel!(I, 2, [1, 3], |x1, x2, y| -(3.0 * x1 * x1 * y[0] + y[2]) / (2.0 * x1)),
        rel!(I, 2, [1, 4], |x1, x2, y| -(2.0 * x1.powu(3) * y[0] - y[3]) / (x1 * x1)),
        rel!(I, 2, [3, 4], |x1, x2, y| -(2.0 * x1 * y[2] + 3.0 * y[3]) / (x1 * x1)),
        rel!(I, 3, [1, 2], |x1, x2, y| -3.0 * x1 * x1 * y[0] - 2.0 * x1 * y[1]),
        rel!(I, 3, [1, 4], |x1, x2, y| (x1.powu(3) * y[0] - 2.0 * y[3]) / x1),
        rel!(I, 3, [2, 4], |x1, x2, y| -(x1 * x1 * y[1] + 3.0 * y[3]) / (2.0 * x1)),
        rel!(I, 4, [1, 2], |x1, x2, y| 2.0 * x1.powu(3) * y[0] + x1 * x1 * y[1]),
        rel!(I, 4, [1, 3], |x1, x2, y| (x1.powu(3) * y[0] - x1 * y[2]) / 2.0),
        rel!(I, 4, [2, 3], |x1, x2, y| -(x1 * x1 * y[1] + 2.0 * x1 * y[2]) / 3.0),
    ];
    fn spq(x1: C64, x2: C64) -> (C64, C64, C64) {
        (x1 + x2, x1 * x2, x1 * x1 + x1 * x2 + x2 * x2)
    }
    out.extend([
        rel!(II, 1, [2, 3], |x1, x2, y| { let (s, _p, q) = spq(x1, x2); -(s * y[1] + y[2]) / q }),
        rel!(II, 1, [2, 4], |x1, x2, y| { let (s, p, _q) = spq(x1, x2); -(p * y[1] - y[3]) / (p * s) }),
        rel!(II, 1, [3, 4], |x1, x2, y| { let (s, p, _q) = spq(x1, x2); (p * y[2] + s * y[3]) / (p * p) }),
        rel!(II, 2, [1, 3], |x1, x2, y| { let (s, _p, q) = spq(x1, x2); -(q * y[0] + y[2]) / s }),
        rel!(II, 2, [1, 4], |x1, x2, y| { let (s, p, _q) = spq(x1, x2); -(p * s * y[0] - y[3]) / p }),
        rel!(II, 2, [3, 4], |x1, x2, y| { let (s, p, q) = spq(x1, x2); -(p * s * y[2] + q * y[3]) / (p * p) }),
        rel!(II, 3, [1, 2], |x1, x2, y| { let (s, _p, q) = spq(x1, x2); -q * y[0] - s * y[1] }),
        rel!(II, 3, [1, 4], |x1, x2, y| { let (s, p, _q) = spq(x1, x2); (p * p * y[0] - s * y[3]) / p }),
        rel!(II, 3, [2, 4], |x1, x2, y| { let (s, p, q) = spq(x1, x2); -(p * p * y[1] + q * y[3]) / (p * s) }),
        rel!(II, 4, [1, 2], |x1, x2, y| { let (s, p, _q) = spq(x1, x2); p * s * y[0] + p * y[1] }),
        rel!(II, 4, [1, 3], |x1, x2, y| { let (s, p, _q) = spq(x1, x2); (p * p * y[0] - p * y[2]) / s }),
        rel!(II, 4, [2, 3], |x1, x2, y| { let (s, p, q) = spq(x1, x2); -(p * p * y[1] + p * s * y[2]) / q }),
    ]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{c, re};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn poly(x: &[C64], sig: &[usize]) -> MultiRootPolynomial {
        MultiRootPolynomial::from_values(x, sig, &tol()).unwrap()
    }

    #[test]
    fn constraint_rows() {
        let sys = build_derivative_system(&poly(&[ONE, re(2.0)], &[3, 1]), &tol()).unwrap();
        let rows: Vec<Vec<C64>> = (0..2).map(|r| sys.constraints.row(r).iter().copied().collect()).collect();
        assert_eq!(rows[0], vec![ONE; 4]);
        assert_eq!(rows[1], vec![re(3.0), re(2.0), ONE, ZERO]);

        let (x1, x2) = (c(0.5, 0.1), re(-2.0));
        let sys = build_derivative_system(&poly(&[x1, x2], &[2, 2]), &tol()).unwrap();
        for (r, x) in [x1, x2].into_iter().enumerate() {
            let want = [x.powu(3), x * x, x, ONE];
            for m in 0..4 {
                assert!((sys.constraints[(r, m)] - want[m]).norm() < 1e-15);
            }
        }

        let sys = build_derivative_system(&poly(&[ONE, re(2.0), re(3.0)], &[1, 1, 1]), &tol()).unwrap();
        assert_eq!(sys.constraints.nrows(), 0);
    }

    #[test]
    fn xdot_example() {
        let sys = build_derivative_system(&poly(&[ONE, re(2.0)], &[3, 1]), &tol()).unwrap();
        let ydot = [ONE, ZERO, re(-3.0), re(2.0)];
        let xd = xdot_from_ydot(&sys, &ydot, &tol()).unwrap();
        assert!((xd[0] - ONE).norm() < 1e-14 && (xd[1] - re(-4.0)).norm() < 1e-14);
        assert_eq!(xdot_from_ydot(&sys, &[ZERO; 4], &tol()).unwrap(), vec![ZERO, ZERO]);
        assert!(matches!(
            xdot_from_ydot(&sys, &[ONE, ZERO, ZERO, ZERO], &tol()),
            Err(Error::InconsistentYdot { .. })
        ));
    }

    #[test]
    fn generic_case_matches_direct_formula() {
        let x = [c(0.3, 0.2), c(-1.0, 0.5), c(2.0, -0.7)];
        let p = poly(&x, &[1, 1, 1]);
        let sys = build_derivative_system(&p, &tol()).unwrap();
        let yd = [c(0.1, 0.4), c(-0.3, 0.2), c(1.1, -0.5)];
        let a = xdot_from_ydot(&sys, &yd, &tol()).unwrap();
        let b = generic_xdot(&x, &yd);
        for n in 0..3 {
            assert!((a[n] - b[n]).norm() < 1e-13);
        }
    }

    #[test]
    fn completion_examples() {
        let sys = build_derivative_system(&poly(&[ONE, re(2.0)], &[3, 1]), &tol()).unwrap();
        let pair = SelectedPair::new(1, 2, CaseTag::I).unwrap();
        let full = complete_ydot(&sys, pair, [ONE, ZERO], &tol()).unwrap();
        assert!((full[2] - re(-3.0)).norm() < 1e-14 && (full[3] - re(2.0)).norm() < 1e-14);

        let sys = build_derivative_system(&poly(&[ONE, re(-1.0)], &[2, 2]), &tol()).unwrap();
        let pair = SelectedPair::new(1, 2, CaseTag::II).unwrap();
        assert_eq!(complete_ydot(&sys, pair, [ZERO, ZERO], &tol()).unwrap(), vec![ZERO; 4]);

        let sys = build_derivative_system(&poly(&[ZERO, re(2.0)], &[3, 1]), &tol()).unwrap();
        let pair = SelectedPair::new(3, 4, CaseTag::I).unwrap();
        assert!(matches!(complete_ydot(&sys, pair, [ONE, ONE], &tol()), Err(Error::SingularMinor { .. })));
    }

    #[test]
    fn chain_rule_examples() {
        let yd = ydot_from_xdot(&poly(&[ONE, re(2.0)], &[3, 1]), &[ONE, re(-4.0)]);
        let want = [ONE, ZERO, re(-3.0), re(2.0)];
        for m in 0..4 {
            assert!((yd[m] - want[m]).norm() < 1e-14);
        }
        let yd = ydot_from_xdot(&poly(&[ONE, re(-1.0)], &[2, 2]), &[ONE, ONE]);
        let want = [re(-4.0), ZERO, re(4.0), ZERO];
        for m in 0..4 {
            assert!((yd[m] - want[m]).norm() < 1e-14);
        }
    }

    #[test]
    fn pair_forms_match_generic() {
        let (x1, x2) = (c(0.7, -0.3), c(-0.4, 1.1));
        for case in [CaseTag::I, CaseTag::II] {
            let p = poly(&[x1, x2], &case.signature());
            let xd = [c(0.2, 0.5), c(-1.3, 0.1)];
            let yd = ydot_from_xdot(&p, &xd);
            for a in 1..=4 {
                for b in a + 1..=4 {
                    let got = pair_xdot(case, (a, b), x1, x2, [yd[a - 1], yd[b - 1]]).unwrap();
                    for n in 0..2 {
                        assert!((got[n] - xd[n]).norm() < 1e-12, "{case:?} ({a},{b})");
                    }
                }
            }
        }
    }

    #[test]
    fn relations_hold_and_misprint_differs() {
        let (x1, x2) = (c(0.7, -0.3), c(-0.4, 1.1));
        for r in pair_relations() {
            let p = poly(&[x1, x2], &r.case.signature());
            let yd = ydot_from_xdot(&p, &[c(0.2, 0.5), c(-1.3, 0.1)]);
            let y4 = [yd[0], yd[1], yd[2], yd[3]];
            let v = (r.eval)(x1, x2, &y4);
            assert!((v - y4[r.target - 1]).norm() < 1e-12 * (1.0 + v.norm()), "{r:?}");
            if let Some(bad) = r.misprint {
                assert!((bad(x1, x2, &y4) - v).norm() > 1e-3);
            }
        }
        assert_eq!(pair_relations().len(), 24);
    }
}
