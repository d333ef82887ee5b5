use super::{check_time, AppendixASystem, Flow, ScalarPoly, Variant};
use crate::complex::C64;
use crate::config::Tolerances;
use crate::error::{Error, Result};

/// Two uncoupled separable ODEs.
pub struct A1Flow {
    first: ScalarPoly,
    second: ScalarPoly,
    y0: [C64; 2],
    t: f64,
    y: [C64; 2],
}

impl A1Flow {
    pub fn new(sys: &AppendixASystem, y0: [C64; 2], tol: &Tolerances) -> Result<Self> {
        if sys.variant != Variant::A1 {
            return Err(Error::InvalidSystem("not an A1 system".into()));
        }
        Ok(A1Flow {
            first: ScalarPoly::new(&sys.first_poly(), tol)?,
            second: ScalarPoly::new(&sys.second_poly(), tol)?,
            y0,
            t: 0.0,
            y: y0,
        })
    }

    pub fn components(&self) -> (&ScalarPoly, &ScalarPoly) {
        (&self.first, &self.second)
    }
}

impl Flow for A1Flow {
    fn state_at(&mut self, t: f64) -> Result<[C64; 2]> {
        check_time(t)?;
        if t < self.t {
            self.t = 0.0;
            self.y = self.y0;
        }
        let dt = t - self.t;
        let a = self.first.advance(self.y[0], dt).map_err(|e| shift(e, self.t))?;
        let b = self.second.advance(self.y[1], dt).map_err(|e| shift(e, self.t))?;
        self.t = t;
        self.y = [a, b];
        Ok(self.y)
    }

    fn initial(&self) -> [C64; 2] {
        self.y0
    }
}

/// Errors from an anchored advance carry times relative to the anchor.
pub(crate) fn shift(e: Error, t0: f64) -> Error {
    match e {
        Error::BlowUp { t } => Error::BlowUp { t: t + t0 },
        Error::ContinuationStall { t } => Error::ContinuationStall { t: t + t0 },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{c, re, ONE, ZERO};
    use crate::solvers::testutil::{fd_residual, oracle};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn linear_limit() {
        let sys = AppendixASystem::new(Variant::A1, 1, 2, vec![ONE, ZERO], vec![re(2.0), ZERO], vec![]).unwrap();
        let y = super::super::solve_a1(&sys, [re(0.5), re(1.0)], 1.0, &tol()).unwrap();
        assert!((y[0] - re(0.5 * 1f64.exp())).norm() < 1e-14);
        assert!((y[1] - re(2f64.exp())).norm() < 1e-13);
    }

    #[test]
    fn bernoulli_and_implicit_match_oracle() {
        let cases = [
            AppendixASystem::new(Variant::A1, 1, 2, vec![c(0.3, 0.2), c(-0.5, 0.4)], vec![c(0.1, -0.3), c(0.2, 0.2)], vec![]).unwrap(),
            AppendixASystem::new(Variant::A1, 2, 3, vec![c(0.3, 0.2), c(-0.5, 0.4)], vec![c(0.1, -0.3), c(0.2, 0.2)], vec![]).unwrap(),
            AppendixASystem::new(
                Variant::A1,
                2,
                4,
                vec![c(0.3, 0.2), c(-0.5, 0.4), c(0.2, 0.1)],
                vec![c(0.1, -0.3), c(0.2, 0.2), c(-0.1, 0.3)],
                vec![],
            )
            .unwrap(),
        ];
        let y0 = [c(0.4, -0.3), c(-0.2, 0.5)];
        for sys in &cases {
            let mut f = A1Flow::new(sys, y0, &tol()).unwrap();
            let want = oracle(sys, y0, 1.0);
            let got = f.state_at(1.0).unwrap();
            for i in 0..2 {
                assert!((got[i] - want[i]).norm() < 1e-9, "{sys:?}");
            }
            assert!(fd_residual(&mut f, sys, &[0.2, 0.5, 0.9]) < 1e-6);
        }
    }

    #[test]
    fn blow_up_reported() {
        // ydot = y^3 from y = 1: pole at t = 1/2
        let sys = AppendixASystem::new(Variant::A1, 1, 2, vec![ZERO, ONE], vec![ZERO, ZERO], vec![]).unwrap();
        match super::super::solve_a1(&sys, [ONE, ONE], 1.0, &tol()) {
            Err(Error::BlowUp { t }) => assert!((t - 0.5).abs() < 1e-6, "{t}"),
            other => panic!("{other:?}"),
        }
    }
}
