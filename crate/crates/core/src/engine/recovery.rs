//! Zeros (x1, x2) from a selected coefficient pair by elimination.
//!
//! Case (i) eliminates x2 and leaves a polynomial of degree at most 4 in x1.
//! Case (ii) recovers s = x1 + x2 and p = x1 x2, then solves u^2 - s u + p = 0.

use serde::{Deserialize, Serialize};

use crate::complex::{all_finite, C64, ZERO};
use crate::error::{Error, Result};
use crate::polynomials::{case_coeffs, poly_roots, CaseTag};

/// One candidate preimage with the branch that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate {
    pub x: [C64; 2],
    /// case (ii): sign chosen for sqrt(y4) (0 when no square root is taken)
    pub p_sign: i8,
}

/// Outcome of a recovery step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Recovery {
    pub x: [C64; 2],
    /// candidates that reproduce the pair
    pub candidates: usize,
    /// distance from the previous x to the chosen and to the runner-up candidate
    pub distance: f64,
    pub runner_up: f64,
    /// smallest distance from the chosen candidate to any other candidate
    pub separation: f64,
    pub p_sign: i8,
    /// forward-map residual of the pair, relative
    pub residual: f64,
}

fn dist(a: [C64; 2], b: [C64; 2]) -> f64 {
    (a[0] - b[0]).norm().max((a[1] - b[1]).norm())
}

/// All preimages of the pair values (y_lo, y_hi), unfiltered.
pub fn elimination_candidates(case: CaseTag, pair: (usize, usize), y: [C64; 2]) -> Result<Vec<Candidate>> {
    let (a, b) = (y[0], y[1]);
    let mut out = Vec::new();
    match case {
        CaseTag::I => {
            // elimination polynomial (descending) and x2 as a function of x1
            let (desc, x2_of): (Vec<C64>, Box<dyn Fn(C64) -> C64>) = match pair {
                (1, 2) => (vec![6.0 * C64::from(1.0), 3.0 * a, b], Box::new(move |x1| -a - 3.0 * x1)),
                (1, 3) => (vec![C64::from(8.0), 3.0 * a, ZERO, -b], Box::new(move |x1| -a - 3.0 * x1)),
                (1, 4) => (vec![C64::from(3.0), a, ZERO, ZERO, b], Box::new(move |x1| -a - 3.0 * x1)),
                (2, 3) => (vec![C64::from(2.0), ZERO, -a, -b], Box::new(move |x1| a / (3.0 * x1) - x1)),
                (2, 4) => (vec![C64::from(3.0), ZERO, -a, ZERO, 3.0 * b], Box::new(move |x1| a / (3.0 * x1) - x1)),
                (3, 4) => (vec![C64::from(1.0), ZERO, ZERO, a, 3.0 * b], Box::new(move |x1: C64| b / x1.powu(3))),
                _ => return Err(Error::InvalidSystem(format!("bad coefficient pair {pair:?}"))),
            };
            for x1 in poly_roots(&desc)? {
                out.push(Candidate { x: [x1, x2_of(x1)], p_sign: 0 });
            }
        }
        CaseTag::II => {
            let mut sp: Vec<(C64, C64, i8)> = Vec::new();
            let roots_p = |y4: C64| {
                let r = y4.sqrt();
                [(r, 1i8), (-r, -1i8)]
            };
            match pair {
                (1, 2) => {
                    let s = -a / 2.0;
                    sp.push((s, (b - s * s) / 2.0, 0));
                }
                (1, 3) => {
                    let s = -a / 2.0;
                    sp.push((s, -b / (2.0 * s), 0));
                }
                (1, 4) => {
                    let s = -a / 2.0;
                    for (p, sg) in roots_p(b) {
                        sp.push((s, p, sg));
                    }
                }
                (2, 3) => {
                    for s in poly_roots(&[C64::from(1.0), ZERO, -a, -b])? {
                        sp.push((s, (a - s * s) / 2.0, 0));
                    }
                }
                (2, 4) => {
                    for (p, sg) in roots_p(b) {
                        let s = (a - 2.0 * p).sqrt();
                        sp.push((s, p, sg));
                        sp.push((-s, p, sg));
                    }
                }
                (3, 4) => {
                    for (p, sg) in roots_p(b) {
                        sp.push((-a / (2.0 * p), p, sg));
                    }
                }
                _ => return Err(Error::InvalidSystem(format!("bad coefficient pair {pair:?}"))),
            }
            for (s, p, sg) in sp {
                let d = (s * s - 4.0 * p).sqrt();
                let (u, v) = ((s + d) / 2.0, (s - d) / 2.0);
                out.push(Candidate { x: [u, v], p_sign: sg });
                out.push(Candidate { x: [v, u], p_sign: sg });
            }
        }
    }
    Ok(out.into_iter().filter(|c| all_finite(&c.x)).collect())
}

/// Relative residual of the pair under the forward map.
pub fn pair_residual(case: CaseTag, pair: (usize, usize), y: [C64; 2], x: [C64; 2]) -> f64 {
    let f = case_coeffs(case, x[0], x[1]);
    let r0 = (f[pair.0 - 1] - y[0]).norm() / (1.0 + y[0].norm());
    let r1 = (f[pair.1 - 1] - y[1]).norm() / (1.0 + y[1].norm());
    r0.max(r1)
}

/// Preimage nearest to `previous` among the candidates reproducing the pair.
///
/// `y` holds (y_lo, y_hi) for the pair in increasing index order.
pub fn recover_zeros(case: CaseTag, pair: (usize, usize), y: [C64; 2], previous: [C64; 2], residual_tol: f64) -> Result<Recovery> {
    let mut cands: Vec<(Candidate, f64)> = elimination_candidates(case, pair, y)?
        .into_iter()
        .map(|c| (c, pair_residual(case, pair, y, c.x)))
        .filter(|(_, r)| *r <= residual_tol.max(1e-10))
        .collect();
    if cands.is_empty() {
        return Err(Error::NoRealizableRoot);
    }
    cands.sort_by(|a, b| dist(a.0.x, previous).total_cmp(&dist(b.0.x, previous)));
    let (best, residual) = cands[0];
    let distance = dist(best.x, previous);
    // candidates that coincide with the chosen one (repeated elimination roots) are not rivals
    let scale = 1.0 + best.x[0].norm().max(best.x[1].norm());
    let rivals: Vec<&(Candidate, f64)> = cands[1..].iter().filter(|(c, _)| dist(c.x, best.x) > 1e-12 * scale).collect();
    let runner_up = rivals.first().map_or(f64::INFINITY, |(c, _)| dist(c.x, previous));
    let separation = rivals.iter().map(|(c, _)| dist(c.x, best.x)).fold(f64::INFINITY, f64::min);
    Ok(Recovery { x: best.x, candidates: cands.len(), distance, runner_up, separation, p_sign: best.p_sign, residual })
}
