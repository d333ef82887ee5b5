//! Path following of a scalar equation f(y, t) = 0 in a real parameter t.
//!
//! The equation may depend on an anchor (t_k, y_k), the last accepted point;
//! this lets callers write relations such as sums of logarithms relative to
//! the anchor so that no branch cut is ever crossed within one step.

use crate::complex::C64;
use crate::config::Tolerances;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct ContinuationOptions {
    /// Steps attempted on [0, T] before any halving.
    pub initial_steps: usize,
    pub max_halvings: u32,
    /// Converged when the Newton step is below this, relative to max(1, |y|).
    pub step_tol: f64,
    /// Accepted residual |f| after convergence.
    pub residual: f64,
}

impl ContinuationOptions {
    pub fn from_tolerances(tol: &Tolerances) -> Self {
        ContinuationOptions { initial_steps: 16, max_halvings: tol.max_halvings, step_tol: 1e-14, residual: tol.newton_residual }
    }
}

/// Continue the root of `eq` from (0, seed) to t_end. `eq(y, t, t_k, y_k)`
/// returns (f, df/dy); `radius(y_k)` bounds |y - y_k| for an accepted step.
pub fn newton_continuation<F, R>(mut eq: F, radius: R, t_end: f64, seed: C64, opts: &ContinuationOptions) -> Result<C64>
where
    F: FnMut(C64, f64, f64, C64) -> (C64, C64),
    R: Fn(C64) -> f64,
{
    if t_end == 0.0 {
        return Ok(seed);
    }
    let h_max = t_end / opts.initial_steps.max(1) as f64;
    let h_min = h_max.abs() * 0.5f64.powi(opts.max_halvings as i32);
    let mut h = h_max;
    let (mut t, mut y) = (0.0, seed);
    let mut prev: Option<(f64, C64)> = None;
    while (t_end - t) * t_end.signum() > 0.0 {
        if (t + h - t_end) * t_end.signum() > 0.0 {
            h = t_end - t;
        }
        let t_new = t + h;
        let guess = match prev {
            Some((tp, yp)) if tp != t => y + (y - yp) * ((t_new - t) / (t - tp)),
            _ => y,
        };
        let limit = radius(y);
        match correct(&mut eq, guess, t_new, t, y, opts) {
            Some(y_new) if (y_new - y).norm() <= limit => {
                prev = Some((t, y));
                t = t_new;
                y = y_new;
                if h.abs() < h_max.abs() {
                    h = (h * 2.0).clamp(-h_max.abs(), h_max.abs());
                }
            }
            _ => {
                h /= 2.0;
                if h.abs() < h_min {
                    return Err(Error::ContinuationStall { t });
                }
            }
        }
    }
    Ok(y)
}

fn correct<F>(eq: &mut F, guess: C64, t: f64, t_k: f64, y_k: C64, opts: &ContinuationOptions) -> Option<C64>
where
    F: FnMut(C64, f64, f64, C64) -> (C64, C64),
{
    let mut y = guess;
    for _ in 0..12 {
        let (f, df) = eq(y, t, t_k, y_k);
        if !crate::complex::is_finite(f) || !crate::complex::is_finite(df) || df.norm() == 0.0 {
            return None;
        }
        let step = f / df;
        y -= step;
        if step.norm() <= opts.step_tol * 1f64.max(y.norm()) {
            // near a simple root of df^-1 the residual is ill-conditioned; judge it in y
            let (f, df) = eq(y, t, t_k, y_k);
            let ok = f.norm() <= opts.residual.max(1e-15 * y.norm())
                || (df.norm() > 0.0 && (f / df).norm() <= opts.residual * 1f64.max(y.norm()));
            return ok.then_some(y);
        }
    }
    None
}
