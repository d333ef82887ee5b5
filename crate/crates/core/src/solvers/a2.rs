//! ydot_first = sum alpha_l y^l, and y_second linear in itself with
//! coefficients depending on y_first:
//!
//!   y2(b) = F(b) [y2(a) + int_a^b G(y1) / F],   F = exp int_a^t B(y1).
//!
//! The integrating factor restarts on every piece, so a near pole of y1 does
//! not leave a huge F multiplying a cancelled sum. Both integrals come from
//! Chebyshev interpolation in t: y1 is sampled once per piece and the inner
//! antiderivative comes from the series.

use super::a1::shift;
use super::{check_time, AppendixASystem, Flow, ScalarPoly, Variant};
use crate::complex::{powi, C64, ZERO};
use crate::config::Tolerances;
use crate::error::{Error, Result};

/// Spacing of the stored states; a query runs one fresh piece from the
/// nearest stored state, so its value depends on t alone and not on the
/// sequence of earlier queries.
const GRID: f64 = 1.0 / 64.0;

pub struct A2Flow {
    first: ScalarPoly,
    /// ascending coefficients of B(y1) = sum_{l>=1} beta_l y1^(l-1)
    b: Vec<C64>,
    /// (exponent, coefficient) terms of G(y1)
    g: Vec<(i64, C64)>,
    quad_tol: f64,
    y0: [C64; 2],
    /// (y1, y2) at k * GRID
    grid: Vec<[C64; 2]>,
}

impl A2Flow {
    pub fn new(sys: &AppendixASystem, y0: [C64; 2], tol: &Tolerances) -> Result<Self> {
        if sys.variant != Variant::A2 {
            return Err(Error::InvalidSystem("not an A2 system".into()));
        }
        let mut b: Vec<C64> = sys.beta.iter().skip(1).copied().collect();
        while b.last() == Some(&ZERO) {
            b.pop();
        }
        let mut g = Vec::new();
        if sys.gamma.iter().any(|x| *x != ZERO) {
            let q = (sys.second / sys.first) as i64;
            for (l, &gl) in sys.gamma.iter().enumerate() {
                if gl != ZERO {
                    g.push((l as i64 - 1 + q, gl));
                }
            }
        }
        Ok(A2Flow {
            first: ScalarPoly::new(&sys.alpha, tol)?,
            b,
            g,
            quad_tol: tol.quadrature,
            y0,
            grid: vec![y0],
        })
    }

    pub fn first(&self) -> &ScalarPoly {
        &self.first
    }

    fn eval_b(&self, y: C64) -> C64 {
        self.b.iter().rev().fold(ZERO, |acc, &c| acc * y + c)
    }

    fn eval_g(&self, y: C64) -> C64 {
        self.g.iter().map(|&(e, c)| c * powi(y, e)).sum()
    }

    /// (y1, y2) at b from (y1, y2) at a, halving [a, b] until it is resolved.
    fn step_piece(&self, a: f64, b: f64, ya: [C64; 2]) -> Result<[C64; 2]> {
        let mut n = 8;
        loop {
            match self.cheb_piece(a, b, ya[0], n)? {
                Some((y1b, ib, dj)) => return Ok([y1b, ib.exp() * (ya[1] + dj)]),
                None if n < MAX_NODES => n *= 2,
                None => {
                    let mid = 0.5 * (a + b);
                    if mid - a < 1e-13 * (1.0 + a.abs()) {
                        return Err(Error::NonConvergent { estimate: f64::NAN });
                    }
                    let ym = self.step_piece(a, mid, ya)?;
                    return self.step_piece(mid, b, ym);
                }
            }
        }
    }

    /// One Chebyshev pass with n + 1 nodes on [a, b], giving y1(b), int_a^b B
    /// and int_a^b G/F. None when the series tails are not small.
    fn cheb_piece(&self, a: f64, b: f64, y1a: C64, n: usize) -> Result<Option<(C64, C64, C64)>> {
        let half = 0.5 * (b - a);
        let nodes: Vec<f64> = (0..=n).map(|j| (std::f64::consts::PI * j as f64 / n as f64).cos()).collect();
        // x = 1 is the right end; hop from node to node starting at the left
        let mut y1 = vec![y1a; n + 1];
        let (mut s_prev, mut y_prev) = (a, y1a);
        for j in (0..n).rev() {
            let s = a + half * (nodes[j] + 1.0);
            y_prev = self.first.advance(y_prev, s - s_prev).map_err(|e| shift(e, s_prev))?;
            y1[j] = y_prev;
            s_prev = s;
        }
        // the end value from one hop, not through the node chain
        let y1b = self.first.advance(y1a, b - a).map_err(|e| shift(e, a))?;
        y1[0] = y1b;
        let constant_b = self.b.len() <= 1;
        let ib: Vec<C64> = if constant_b {
            let b0 = self.b.first().copied().unwrap_or(ZERO);
            nodes.iter().map(|&x| b0 * half * (x + 1.0)).collect()
        } else {
            let vals: Vec<C64> = y1.iter().map(|&y| self.eval_b(y)).collect();
            let c = cheb_coeffs(&vals);
            if !tail_small(&c, self.quad_tol) {
                return Ok(None);
            }
            let big = cheb_integral(&c);
            nodes.iter().map(|&x| half * cheb_eval(&big, x)).collect()
        };
        let dj = if self.g.is_empty() {
            ZERO
        } else {
            let vals: Vec<C64> = y1.iter().zip(&ib).map(|(&y, &i)| self.eval_g(y) * (-i).exp()).collect();
            let c = cheb_coeffs(&vals);
            if !tail_small(&c, self.quad_tol) {
                return Ok(None);
            }
            half * c.iter().enumerate().filter(|(k, _)| k % 2 == 0).map(|(k, &ck)| ck * (2.0 / (1.0 - (k * k) as f64))).sum::<C64>()
        };
        Ok(Some((y1b, ib[0], dj)))
    }
}

const MAX_NODES: usize = 64;

/// Chebyshev coefficients of the interpolant through values at cos(pi j/n).
fn cheb_coeffs(f: &[C64]) -> Vec<C64> {
    let n = f.len() - 1;
    (0..=n)
        .map(|k| {
            let mut s = ZERO;
            for (j, &fj) in f.iter().enumerate() {
                let w = if j == 0 || j == n { 0.5 } else { 1.0 };
                s += fj * (w * (std::f64::consts::PI * (j * k) as f64 / n as f64).cos());
            }
            let c = s * (2.0 / n as f64);
            if k == 0 || k == n {
                c * 0.5
            } else {
                c
            }
        })
        .collect()
}

fn tail_small(c: &[C64], tol: f64) -> bool {
    let total: f64 = c.iter().map(|z| z.norm()).sum();
    let n = c.len();
    let tail = c[n - 2].norm().max(c[n - 1].norm());
    !(tail.is_nan()) && tail <= tol.max(1e-15) * total.max(f64::MIN_POSITIVE) && total.is_finite()
}

/// Coefficients of the antiderivative vanishing at -1.
fn cheb_integral(c: &[C64]) -> Vec<C64> {
    let n = c.len();
    let at = |k: usize| if k < n { c[k] } else { ZERO };
    let mut out = vec![ZERO; n + 1];
    out[1] = at(0) - at(2) / 2.0;
    for k in 2..=n {
        out[k] = (at(k - 1) - at(k + 1)) / (2.0 * k as f64);
    }
    let mut minus_one = ZERO;
    for (k, &ck) in out.iter().enumerate().skip(1) {
        minus_one += if k % 2 == 0 { ck } else { -ck };
    }
    out[0] = -minus_one;
    out
}

fn cheb_eval(c: &[C64], x: f64) -> C64 {
    // Clenshaw
    let (mut b1, mut b2) = (ZERO, ZERO);
    for &ck in c.iter().skip(1).rev() {
        let b0 = ck + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    c[0] + x * b1 - b2
}

impl Flow for A2Flow {
    fn state_at(&mut self, t: f64) -> Result<[C64; 2]> {
        check_time(t)?;
        let k = (t / GRID).floor() as usize;
        while self.grid.len() <= k {
            let j = self.grid.len() - 1;
            let next = self.step_piece(j as f64 * GRID, (j + 1) as f64 * GRID, self.grid[j])?;
            self.grid.push(next);
        }
        let a = k as f64 * GRID;
        if t == a {
            return Ok(self.grid[k]);
        }
        self.step_piece(a, t, self.grid[k])
    }

    fn initial(&self) -> [C64; 2] {
        self.y0
    }
}
