//! Dormand-Prince 5(4) with step-size control, complex state vectors, and
//! steps clipped to land exactly on requested output times.

use crate::complex::{all_finite, C64};
use crate::error::{Error, Result};

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// fifth minus fourth order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

pub type Rhs<'a> = dyn FnMut(f64, &[C64]) -> Result<Vec<C64>> + Send + 'a;
pub type Projection<'a> = dyn FnMut(&mut [C64]) + Send + 'a;

pub struct Dopri5<'a> {
    f: Box<Rhs<'a>>,
    t: f64,
    y: Vec<C64>,
    k1: Option<Vec<C64>>,
    h: f64,
    tol: f64,
    project: Option<Box<Projection<'a>>>,
    pub max_steps: usize,
    pub steps: usize,
    pub rejected: usize,
}

fn axpy(y: &[C64], h: f64, terms: &[(f64, &[C64])]) -> Vec<C64> {
    let mut out = y.to_vec();
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = C64::new(0.0, 0.0);
        for (w, k) in terms {
            acc += k[i] * *w;
        }
        *o += acc * h;
    }
    out
}

impl<'a> Dopri5<'a> {
    /// `tol` is used both as relative and absolute local-error target.
    pub fn new<F>(f: F, t0: f64, y0: Vec<C64>, tol: f64) -> Self
    where
        F: FnMut(f64, &[C64]) -> Result<Vec<C64>> + Send + 'a,
    {
        Dopri5 { f: Box::new(f), t: t0, y: y0, k1: None, h: 0.0, tol, project: None, max_steps: 2_000_000, steps: 0, rejected: 0 }
    }

    /// Map applied to every accepted state, e.g. back onto an invariant manifold.
    pub fn with_projection<P>(mut self, p: P) -> Self
    where
        P: FnMut(&mut [C64]) + Send + 'a,
    {
        self.project = Some(Box::new(p));
        self
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn state(&self) -> &[C64] {
        &self.y
    }

    fn initial_step(&mut self, k1: &[C64], span: f64) -> Result<f64> {
        let scale = |i: usize, y: &[C64]| self.tol + self.tol * y[i].norm();
        let n = self.y.len() as f64;
        let d0 = (self.y.iter().enumerate().map(|(i, v)| (v.norm() / scale(i, &self.y)).powi(2)).sum::<f64>() / n).sqrt();
        let d1 = (k1.iter().enumerate().map(|(i, v)| (v.norm() / scale(i, &self.y)).powi(2)).sum::<f64>() / n).sqrt();
        let mut h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
        h0 = h0.min(span.abs());
        let y1 = axpy(&self.y, h0 * span.signum(), &[(1.0, k1)]);
        let k2 = (self.f)(self.t + h0 * span.signum(), &y1)?;
        let d2 = (k2.iter().zip(k1).enumerate().map(|(i, (a, b))| ((a - b).norm() / scale(i, &self.y)).powi(2)).sum::<f64>() / n).sqrt() / h0;
        let h1 = if d1.max(d2) <= 1e-15 { (h0 * 1e-3).max(1e-6) } else { (0.01 / d1.max(d2)).powf(0.2) };
        Ok((100.0 * h0).min(h1).min(span.abs()))
    }

    /// Integrate to `t_end` (either direction) and return the state there.
    pub fn advance_to(&mut self, t_end: f64) -> Result<&[C64]> {
        if t_end == self.t {
            return Ok(&self.y);
        }
        let dir = (t_end - self.t).signum();
        let k1 = match self.k1.take() {
            Some(k) => k,
            None => (self.f)(self.t, &self.y)?,
        };
        let mut k1 = k1;
        if self.h == 0.0 || self.h.signum() != dir {
            self.h = self.initial_step(&k1, t_end - self.t)? * dir;
        }
        while (t_end - self.t) * dir > 0.0 {
            if self.steps + self.rejected >= self.max_steps {
                return Err(Error::StepCollapse { t: self.t });
            }
            let remaining = t_end - self.t;
            let last = (self.h.abs() >= remaining.abs()) || (remaining.abs() - self.h.abs()) < 1e-12 * remaining.abs();
            let h = if last { remaining } else { self.h };
            if h.abs() < 1e-14 * self.t.abs().max(1.0) {
                return Err(Error::StepCollapse { t: self.t });
            }
            let t = self.t;
            let y = &self.y;
            let k2 = (self.f)(t + C2 * h, &axpy(y, h, &[(A21, &k1)]))?;
            let k3 = (self.f)(t + C3 * h, &axpy(y, h, &[(A31, &k1), (A32, &k2)]))?;
            let k4 = (self.f)(t + C4 * h, &axpy(y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]))?;
            let k5 = (self.f)(t + C5 * h, &axpy(y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]))?;
            let k6 = (self.f)(t + h, &axpy(y, h, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]))?;
            let y_new = axpy(y, h, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
            let k7 = if all_finite(&y_new) { (self.f)(t + h, &y_new)? } else { y_new.clone() };
            let mut err: f64 = 0.0;
            for i in 0..y.len() {
                let e = (k1[i] * E1 + k3[i] * E3 + k4[i] * E4 + k5[i] * E5 + k6[i] * E6 + k7[i] * E7) * h;
                let sc = self.tol + self.tol * y[i].norm().max(y_new[i].norm());
                err = err.max(e.norm() / sc);
            }
            if !err.is_finite() || !all_finite(&y_new) {
                self.rejected += 1;
                self.h = h * 0.2;
                continue;
            }
            let factor = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
            if err <= 1.0 {
                self.t = if last { t_end } else { t + h };
                self.y = y_new;
                k1 = match &mut self.project {
                    Some(p) => {
                        p(&mut self.y);
                        (self.f)(self.t, &self.y)?
                    }
                    None => k7,
                };
                self.steps += 1;
                if !last || factor < 1.0 {
                    self.h = h * factor;
                }
            } else {
                self.rejected += 1;
                self.h = h * factor.min(1.0);
            }
        }
        self.k1 = Some(k1);
        Ok(&self.y)
    }
}
