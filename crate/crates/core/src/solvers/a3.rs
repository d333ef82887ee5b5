//! ydot_first = alpha0 + alpha1 y_second,
//! ydot_second = beta0 y_first^(q-1) + beta1 y_first^(2q-1),  q = second/first.
//!
//! Equivalent to the Newtonian equation wddot = alpha1 (beta0 w^(q-1) + beta1 w^(2q-1))
//! with energy v^2 - (alpha1/q) w^q (2 beta0 + beta1 w^q) conserved, v = wdot.
//! For q = 2 the solution is w = mu sn(lambda t + rho, k).

use serde::{Deserialize, Serialize};

use super::{check_time, power_integral, AppendixASystem, Flow, Variant};
use crate::complex::{C64, ONE, ZERO};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::ode::Dopri5;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use crate::specfun::{inverse_sn, jacobi_sn_cn_dn};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllipticParams {
    pub lambda: C64,
    pub mu: C64,
    pub rho: C64,
    pub k: C64,
    /// Riccati discriminant slot, unused here and kept zero.
    pub delta: C64,
    pub c1: C64,
    pub c2: C64,
    /// Initial-data residual of the selected branch.
    pub residual: f64,
    /// Both roots m of the modulus equation in k^2 = m.
    pub admissible_m: Vec<C64>,
}

/// Fit (lambda, mu, rho, k) to w(0) = w0, u(0) = u0.
#[allow(clippy::too_many_arguments)]
pub fn fit_elliptic_params(alpha0: C64, alpha1: C64, beta0: C64, beta1: C64, w0: C64, u0: C64, tol: &Tolerances) -> Result<EllipticParams> {
    if alpha1 == ZERO || beta1 == ZERO {
        return Err(Error::InvalidSystem("elliptic fit needs alpha1 and beta1 nonzero".into()));
    }
    let v0 = alpha0 + alpha1 * u0;
    let energy = v0 * v0 - alpha1 * beta0 * w0 * w0 - alpha1 * beta1 / 2.0 * w0.powu(4);
    let c1 = -2.0 * alpha1 * beta0 * beta0;
    let c2 = beta1 * energy;
    if beta0 == ZERO || c2 == ZERO {
        return Err(Error::NoConsistentBranch { residual: f64::INFINITY });
    }
    // c2 m^2 + (2 c2 + c1) m + c2 = 0, roots m and 1/m
    let b = 2.0 * c2 + c1;
    let disc = (b * b - 4.0 * c2 * c2).sqrt();
    let q = if (b.conj() * disc).re >= 0.0 { -(b + disc) / 2.0 } else { -(b - disc) / 2.0 };
    let mut roots = vec![q / c2, c2 / q];
    roots.sort_by(|x, y| x.norm().total_cmp(&y.norm()));

    let mut best: Option<EllipticParams> = None;
    for &m in &roots {
        if (ONE + m).norm() < 1e-14 || m == ZERO {
            continue;
        }
        let k = m.sqrt();
        let mu = (-2.0 * m * beta0 / (beta1 * (ONE + m))).sqrt();
        let lam = (-alpha1 * beta0 / (ONE + m)).sqrt();
        let s0 = w0 / mu;
        let rho = match inverse_sn(s0, k, tol) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let j = match jacobi_sn_cn_dn(rho, k, tol) {
            Ok(j) => j,
            Err(_) => continue,
        };
        let cd = j.cn * j.dn;
        let lambda = if (lam * mu * cd - v0).norm() <= (-lam * mu * cd - v0).norm() { lam } else { -lam };
        let residual = ((mu * j.sn - w0).norm() / (1.0 + w0.norm())).max((lambda * mu * cd - v0).norm() / (1.0 + v0.norm()));
        if best.as_ref().map_or(true, |p| residual < p.residual) {
            best = Some(EllipticParams { lambda, mu, rho, k, delta: ZERO, c1, c2, residual, admissible_m: roots.clone() });
        }
    }
    match best {
        Some(p) if p.residual <= tol.branch_consistency => Ok(p),
        Some(p) => Err(Error::NoConsistentBranch { residual: p.residual }),
        None => Err(Error::NoConsistentBranch { residual: f64::INFINITY }),
    }
}

fn sinhc(x: C64) -> C64 {
    if x.norm() < 1e-4 {
        ONE + x * x / 6.0
    } else {
        x.sinh() / x
    }
}

#[derive(Debug, Clone)]
enum Mode {
    /// alpha1 = 0: w moves linearly, u is a polynomial in t
    Drift,
    /// beta1 = 0: w = w0 cosh(omega t) + v0 sinh(omega t)/omega
    Hyperbolic { omega: C64 },
    Trivial,
    Elliptic(EllipticParams),
}

pub struct A31Flow {
    alpha: [C64; 2],
    beta: [C64; 2],
    y0: [C64; 2],
    mode: Mode,
    tol: Tolerances,
}

impl A31Flow {
    pub fn new(sys: &AppendixASystem, y0: [C64; 2], tol: &Tolerances) -> Result<Self> {
        if sys.variant != Variant::A31 {
            return Err(Error::InvalidSystem("not an A31 system".into()));
        }
        let alpha = [sys.alpha[0], sys.alpha[1]];
        let beta = [sys.beta[0], sys.beta[1]];
        let [w0, u0] = y0;
        let v0 = alpha[0] + alpha[1] * u0;
        let mode = if alpha[1] == ZERO {
            Mode::Drift
        } else if beta[1] == ZERO {
            Mode::Hyperbolic { omega: (alpha[1] * beta[0]).sqrt() }
        } else if beta[0] == ZERO && w0 == ZERO && v0 == ZERO {
            Mode::Trivial
        } else {
            Mode::Elliptic(fit_elliptic_params(alpha[0], alpha[1], beta[0], beta[1], w0, u0, tol)?)
        };
        Ok(A31Flow { alpha, beta, y0, mode, tol: *tol })
    }

    pub fn params(&self) -> Option<&EllipticParams> {
        match &self.mode {
            Mode::Elliptic(p) => Some(p),
            _ => None,
        }
    }
}

impl Flow for A31Flow {
    fn state_at(&mut self, t: f64) -> Result<[C64; 2]> {
        check_time(t)?;
        let [w0, u0] = self.y0;
        let [a0, a1] = self.alpha;
        let [b0, b1] = self.beta;
        let v0 = a0 + a1 * u0;
        Ok(match &self.mode {
            Mode::Drift => [w0 + a0 * t, u0 + b0 * power_integral(w0, a0, 1, t) + b1 * power_integral(w0, a0, 3, t)],
            Mode::Hyperbolic { omega } => {
                let x = omega * t;
                let w = w0 * x.cosh() + v0 * t * sinhc(x);
                let v = w0 * omega * omega * t * sinhc(x) + v0 * x.cosh();
                [w, (v - a0) / a1]
            }
            Mode::Trivial => [ZERO, u0],
            Mode::Elliptic(p) => {
                let j = jacobi_sn_cn_dn(p.lambda * t + p.rho, p.k, &self.tol)?;
                let w = p.mu * j.sn;
                let u = (p.lambda * p.mu * j.cn * j.dn - a0) / a1;
                if !crate::complex::is_finite(w) || !crate::complex::is_finite(u) {
                    return Err(Error::BlowUp { t });
                }
                [w, u]
            }
        })
    }

    fn initial(&self) -> [C64; 2] {
        self.y0
    }
}

/// Energy-form integration of the Newtonian equation, with the energy monitored.
pub struct A3EnergyFlow {
    alpha: [C64; 2],
    beta: [C64; 2],
    q: u32,
    y0: [C64; 2],
    ode_tol: f64,
    ode: Option<Dopri5<'static>>,
    c0: C64,
    last: (f64, [C64; 2]),
    // largest |y| seen by the integrator since the last `take_peak`
    peak: Arc<AtomicU64>,
}

impl A3EnergyFlow {
    pub fn new(sys: &AppendixASystem, y0: [C64; 2], tol: &Tolerances) -> Result<Self> {
        if !matches!(sys.variant, Variant::A31 | Variant::A32 | Variant::A33) {
            return Err(Error::InvalidSystem("not an A3 system".into()));
        }
        let alpha = [sys.alpha[0], sys.alpha[1]];
        let beta = [sys.beta[0], sys.beta[1]];
        let q = sys.a3_ratio();
        let mut flow = A3EnergyFlow { alpha, beta, q, y0, ode_tol: tol.ode.min(1e-13), ode: None, c0: ZERO, last: (0.0, [ZERO; 2]), peak: Arc::default() };
        flow.c0 = flow.energy(y0[0], flow.velocity(y0[1]));
        flow.reset();
        Ok(flow)
    }

    fn velocity(&self, u: C64) -> C64 {
        self.alpha[0] + self.alpha[1] * u
    }

    /// C = v^2 - (alpha1/q) y^q (2 beta0 + beta1 y^q)
    pub fn energy(&self, y: C64, v: C64) -> C64 {
        let yq = y.powu(self.q);
        v * v - self.alpha[1] / self.q as f64 * yq * (2.0 * self.beta[0] + self.beta[1] * yq)
    }

    pub fn initial_energy(&self) -> C64 {
        self.c0
    }

    /// |C(t) - C(0)| / max(1, |C(0)|) at the last evaluated time.
    pub fn energy_drift(&self) -> f64 {
        let (_, [y, u]) = self.last;
        (self.energy(y, self.velocity(u)) - self.c0).norm() / self.c0.norm().max(1.0)
    }

    /// Largest |y| the integrator visited since the previous call.
    ///
    /// A value far above the sampled |y| marks a close pass by a pole in complex time.
    pub fn take_peak(&mut self) -> f64 {
        f64::from_bits(self.peak.swap(0, Ordering::Relaxed)).max(self.last.1[0].norm())
    }

    fn reset(&mut self) {
        self.last = (0.0, self.y0);
        self.peak.store(0, Ordering::Relaxed);
        if self.alpha[1] == ZERO {
            self.ode = None;
            return;
        }
        let (a1, b0, b1, q) = (self.alpha[1], self.beta[0], self.beta[1], self.q);
        let peak = Arc::clone(&self.peak);
        let rhs = move |_t: f64, s: &[C64]| -> Result<Vec<C64>> {
            peak.fetch_max(s[0].norm().to_bits(), Ordering::Relaxed);
            Ok(vec![s[1], a1 * (b0 * s[0].powu(q - 1) + b1 * s[0].powu(2 * q - 1))])
        };
        // one gradient step back onto C = c0 after each accepted step
        let (c0, half) = (self.c0, a1 / q as f64);
        let project = move |s: &mut [C64]| {
            for _ in 0..2 {
                let (y, v) = (s[0], s[1]);
                let yq = y.powu(q);
                let gap = v * v - half * yq * (2.0 * b0 + b1 * yq) - c0;
                let gy = -2.0 * a1 * (b0 * y.powu(q - 1) + b1 * y.powu(2 * q - 1));
                let gv = 2.0 * v;
                let g2 = gy.norm_sqr() + gv.norm_sqr();
                if g2 == 0.0 || gap == ZERO {
                    return;
                }
                s[0] -= gap * gy.conj() / g2;
                s[1] -= gap * gv.conj() / g2;
            }
        };
        self.ode = Some(Dopri5::new(rhs, 0.0, vec![self.y0[0], self.velocity(self.y0[1])], self.ode_tol).with_projection(project));
    }
}

impl Flow for A3EnergyFlow {
    fn state_at(&mut self, t: f64) -> Result<[C64; 2]> {
        check_time(t)?;
        if t < self.last.0 {
            self.reset();
        }
        let [a0, a1] = self.alpha;
        let state = match &mut self.ode {
            None => {
                let [y0, u0] = self.y0;
                let q = self.q;
                [
                    y0 + a0 * t,
                    u0 + self.beta[0] * power_integral(y0, a0, q - 1, t) + self.beta[1] * power_integral(y0, a0, 2 * q - 1, t),
                ]
            }
            Some(ode) => {
                let s = ode.advance_to(t).map_err(|e| match e {
                    Error::StepCollapse { t } => Error::BlowUp { t },
                    other => other,
                })?;
                [s[0], (s[1] - a0) / a1]
            }
        };
        self.last = (t, state);
        Ok(state)
    }

    fn initial(&self) -> [C64; 2] {
        self.y0
    }
}
