//! The autonomous scalar ODE ydot = P(y), P a polynomial, advanced from any
//! anchor state. Closed forms where they exist, otherwise the separable
//! relation sum_n r_n log(y - ybar_n) = alpha_L t continued in t.

use crate::complex::{expm1_over, tanh_over, C64, ONE, ZERO};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::polynomials::roots_ascending;
use crate::specfun::{newton_continuation, partial_fractions, ContinuationOptions};

#[derive(Debug, Clone, PartialEq)]
pub enum ScalarMode {
    Constant,
    /// a0 + a1 y
    Linear { a0: C64, a1: C64 },
    /// a0 + a1 y + a2 y^2, delta^2 = a1^2 - 4 a0 a2
    Riccati { a0: C64, a1: C64, a2: C64, delta: C64 },
    /// a y + b y^(k+1), k >= 2
    Bernoulli { a: C64, b: C64, k: u32 },
    /// general case: distinct roots and residues of 1/P divided by the leading coefficient
    Implicit { roots: Vec<C64>, weights: Vec<C64> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPoly {
    /// ascending coefficients
    pub coeffs: Vec<C64>,
    pub mode: ScalarMode,
    tol: Tolerances,
}

impl ScalarPoly {
    pub fn new(coeffs: &[C64], tol: &Tolerances) -> Result<Self> {
        let mut c = coeffs.to_vec();
        while c.last() == Some(&ZERO) {
            c.pop();
        }
        let deg = c.len().saturating_sub(1);
        let nonzero: Vec<usize> = (0..c.len()).filter(|&i| c[i] != ZERO).collect();
        let get = |i: usize| c.get(i).copied().unwrap_or(ZERO);
        let mode = if c.is_empty() || (deg == 0 && c[0] == ZERO) {
            ScalarMode::Constant
        } else if deg <= 1 {
            ScalarMode::Linear { a0: get(0), a1: get(1) }
        } else if deg == 2 {
            let (a0, a1, a2) = (get(0), get(1), get(2));
            ScalarMode::Riccati { a0, a1, a2, delta: (a1 * a1 - 4.0 * a0 * a2).sqrt() }
        } else if nonzero.iter().all(|&i| i == 1 || i == deg) {
            ScalarMode::Bernoulli { a: get(1), b: get(deg), k: (deg - 1) as u32 }
        } else {
            let roots = roots_ascending(&c)?;
            let res = partial_fractions(&roots, tol)?;
            let lead = c[deg];
            ScalarMode::Implicit { roots, weights: res.into_iter().map(|r| r / lead).collect() }
        };
        Ok(ScalarPoly { coeffs: c, mode, tol: *tol })
    }

    pub fn eval(&self, y: C64) -> C64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &a| acc * y + a)
    }

    /// y(t0 + dt) given y(t0) = ya, with dt >= 0.
    pub fn advance(&self, ya: C64, dt: f64) -> Result<C64> {
        if dt == 0.0 {
            return Ok(ya);
        }
        match &self.mode {
            ScalarMode::Constant => Ok(ya),
            ScalarMode::Linear { a0, a1 } => Ok(ya + (a0 + a1 * ya) * dt * expm1_over(a1 * dt)),
            ScalarMode::Riccati { a0, a1, a2, delta } => {
                let tau = |s: f64| (s / 2.0) * tanh_over(delta * (s / 2.0));
                let cden = 2.0 * a2 * ya + a1;
                let den = |s: f64| ONE - cden * tau(s);
                if let Some(tp) = scan_zero(&den, dt) {
                    return Err(Error::BlowUp { t: tp });
                }
                let tt = tau(dt);
                Ok((ya * (ONE + a1 * tt) + 2.0 * a0 * tt) / den(dt))
            }
            ScalarMode::Bernoulli { a, b, k } => {
                let kf = *k as f64;
                let yk = ya.powu(*k);
                let w = |s: f64| ONE - kf * b * yk * s * expm1_over(kf * a * s);
                if let Some(tp) = scan_zero(&w, dt) {
                    return Err(Error::BlowUp { t: tp });
                }
                let arg = unwrapped_arg(&w, 0.0, dt, 0.0, 0)?;
                let wd = w(dt);
                let log_w = C64::new(wd.norm().ln(), arg);
                Ok(ya * (a * dt).exp() * (-log_w / kf).exp())
            }
            ScalarMode::Implicit { roots, weights } => self.implicit(roots, weights, ya, dt),
        }
    }

    fn implicit(&self, roots: &[C64], weights: &[C64], ya: C64, dt: f64) -> Result<C64> {
        let min_gap = |y: C64| roots.iter().map(|&r| (y - r).norm()).fold(f64::INFINITY, f64::min);
        if min_gap(ya) == 0.0 {
            return Ok(ya);
        }
        let eq = |y: C64, t: f64, tk: f64, yk: C64| {
            let mut g = C64::new(-(t - tk), 0.0);
            for (&r, &w) in roots.iter().zip(weights) {
                g += w * ((y - r) / (yk - r)).ln();
            }
            let p = self.eval(y);
            (g, if p == ZERO { C64::new(f64::INFINITY, 0.0) } else { ONE / p })
        };
        let opts = ContinuationOptions::from_tolerances(&self.tol);
        match newton_continuation(eq, |yk| 0.5 * min_gap(yk), dt, ya, &opts) {
            Ok(y) => Ok(y),
            Err(Error::ContinuationStall { t }) => Err(Error::BlowUp { t }),
            Err(e) => Err(e),
        }
    }

    /// Residual of the separable relation between (0, y0) and (t, y), for tests.
    pub fn implicit_residual(&self, y0: C64, y: C64, t: f64) -> Option<C64> {
        match &self.mode {
            ScalarMode::Implicit { roots, weights } => {
                let mut g = C64::new(-t, 0.0);
                for (&r, &w) in roots.iter().zip(weights) {
                    g += w * ((y - r) / (y0 - r)).ln();
                }
                Some(g)
            }
            _ => None,
        }
    }
}

/// Zero of a closed-form denominator on (0, dt]: sample, then refine the
/// smallest sample by golden section. Reports the time of a near-zero.
fn scan_zero<F: Fn(f64) -> C64>(f: &F, dt: f64) -> Option<f64> {
    const N: usize = 32;
    let reference = f(0.0).norm().max(1e-300);
    let mut best = (0.0, f64::INFINITY);
    for i in 1..=N {
        let s = dt * i as f64 / N as f64;
        let v = f(s).norm();
        if v < best.1 {
            best = (s, v);
        }
    }
    if best.1 > 0.25 * reference {
        return None;
    }
    let h = dt / N as f64;
    let (mut lo, mut hi) = ((best.0 - h).max(0.0), (best.0 + h).min(dt));
    let g = 0.618_033_988_749_894_8;
    for _ in 0..80 {
        let a = hi - g * (hi - lo);
        let b = lo + g * (hi - lo);
        if f(a).norm() < f(b).norm() {
            hi = b;
        } else {
            lo = a;
        }
    }
    let tp = 0.5 * (lo + hi);
    (f(tp).norm() <= 1e-10 * reference).then_some(tp)
}

/// arg f(t1) continued from arg f(t0) = start along [t0, t1].
fn unwrapped_arg<F: Fn(f64) -> C64>(f: &F, t0: f64, t1: f64, start: f64, depth: u32) -> Result<f64> {
    const N: usize = 16;
    let mut arg = start;
    let mut prev = f(t0);
    for i in 1..=N {
        let s = t0 + (t1 - t0) * i as f64 / N as f64;
        let cur = f(s);
        let step = (cur / prev).arg();
        if step.abs() > 0.5 {
            if depth > 30 {
                return Err(Error::BlowUp { t: s });
            }
            let sp = t0 + (t1 - t0) * (i - 1) as f64 / N as f64;
            arg = unwrapped_arg(f, sp, s, arg, depth + 1)?;
        } else {
            arg += step;
        }
        prev = cur;
    }
    Ok(arg)
}
