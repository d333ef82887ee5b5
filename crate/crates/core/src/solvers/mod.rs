//! Initial-value solvers for the driving two-component y-systems.
//!
//! Variables are stored in the system's own order: `y[0]` is y_first (the
//! component whose ODE is autonomous), `y[1]` is y_second.

pub mod a1;
pub mod a2;
pub mod a3;
pub mod scalar;

use serde::{Deserialize, Serialize};

use crate::complex::{powi, C64, ZERO};
use crate::config::Tolerances;
use crate::error::{Error, Result};

pub use a1::A1Flow;
pub use a2::A2Flow;
pub use a3::{fit_elliptic_params, A31Flow, A3EnergyFlow, EllipticParams};
pub use scalar::{ScalarMode, ScalarPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    A1,
    A2,
    A31,
    A32,
    A33,
}

impl Variant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "A1" => Ok(Variant::A1),
            "A2" => Ok(Variant::A2),
            "A31" => Ok(Variant::A31),
            "A32" => Ok(Variant::A32),
            "A33" => Ok(Variant::A33),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Variant::A1 => "A1",
            Variant::A2 => "A2",
            Variant::A31 => "A31",
            Variant::A32 => "A32",
            Variant::A33 => "A33",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AppendixASystem {
    pub variant: Variant,
    pub first: usize,
    pub second: usize,
    pub alpha: Vec<C64>,
    pub beta: Vec<C64>,
    pub gamma: Vec<C64>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn coeff(list: &[C64], i: usize) -> C64 {
    list.get(i).copied().unwrap_or(ZERO)
}

impl AppendixASystem {
    pub fn new(variant: Variant, first: usize, second: usize, alpha: Vec<C64>, beta: Vec<C64>, gamma: Vec<C64>) -> Result<Self> {
        let sys = AppendixASystem { variant, first, second, alpha, beta, gamma };
        sys.validate()?;
        Ok(sys)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidSystem(msg.to_string()));
        if !(1..=4).contains(&self.first) || !(1..=4).contains(&self.second) || self.first == self.second {
            return bad("coefficient indices must be distinct values in 1..4");
        }
        match self.variant {
            Variant::A1 => {
                if self.alpha.is_empty() || self.alpha.len() != self.beta.len() {
                    return bad("alpha and beta must both list L+1 values");
                }
            }
            Variant::A2 => {
                if self.alpha.is_empty() {
                    return bad("alpha must list L+1 values");
                }
                if self.second % self.first != 0 && self.gamma.iter().any(|g| *g != ZERO) {
                    return bad("gamma terms need an integer exponent second/first");
                }
            }
            Variant::A31 | Variant::A32 | Variant::A33 => {
                let ok = matches!(
                    (self.variant, self.first, self.second),
                    (Variant::A31, 1, 2) | (Variant::A31, 2, 4) | (Variant::A32, 1, 3) | (Variant::A33, 1, 4)
                );
                if !ok {
                    return bad("pair not allowed for this variant");
                }
                if self.alpha.len() != 2 || self.beta.len() != 2 {
                    return bad("A3 systems take alpha0, alpha1, beta0, beta1");
                }
            }
        }
        Ok(())
    }

    /// L, the top parameter index.
    pub fn order(&self) -> usize {
        self.alpha.len().max(self.beta.len()).max(self.gamma.len()).saturating_sub(1)
    }

    /// Exponent steps for the generalized A1 form: lcm/first, lcm/second.
    pub fn a1_steps(&self) -> (usize, usize) {
        let lcm = self.first * self.second / gcd(self.first, self.second);
        (lcm / self.first, lcm / self.second)
    }

    /// q = second/first for the A3 family.
    pub fn a3_ratio(&self) -> u32 {
        (self.second / self.first) as u32
    }

    /// Ascending coefficients of the autonomous ODE for y_first (A1, A2).
    pub fn first_poly(&self) -> Vec<C64> {
        match self.variant {
            Variant::A1 => {
                let (k1, _) = self.a1_steps();
                let mut c = vec![ZERO; self.order() * k1 + 2];
                for (l, &a) in self.alpha.iter().enumerate() {
                    c[l * k1 + 1] += a;
                }
                c
            }
            _ => self.alpha.clone(),
        }
    }

    /// Ascending coefficients of the autonomous ODE for y_second (A1 only).
    pub fn second_poly(&self) -> Vec<C64> {
        let (_, k2) = self.a1_steps();
        let mut c = vec![ZERO; self.order() * k2 + 2];
        for (l, &b) in self.beta.iter().enumerate() {
            c[l * k2 + 1] += b;
        }
        c
    }

    /// Right-hand side f(y).
    pub fn rhs(&self, y: [C64; 2]) -> Result<[C64; 2]> {
        let [u, v] = y;
        match self.variant {
            Variant::A1 => {
                let horner = |c: &[C64], x: C64| c.iter().rev().fold(ZERO, |acc, &a| acc * x + a);
                Ok([horner(&self.first_poly(), u), horner(&self.second_poly(), v)])
            }
            Variant::A2 => {
                let f1 = self.alpha.iter().rev().fold(ZERO, |acc, &a| acc * u + a);
                let mut b = ZERO;
                for l in (1..self.beta.len()).rev() {
                    b = b * u + self.beta[l];
                }
                let mut g = ZERO;
                if self.gamma.iter().any(|x| *x != ZERO) {
                    let q = (self.second / self.first) as i64;
                    for (l, &gl) in self.gamma.iter().enumerate() {
                        if gl != ZERO {
                            g += gl * powi(u, l as i64 - 1 + q);
                        }
                    }
                }
                Ok([f1, v * b + g])
            }
            _ => {
                let q = self.a3_ratio();
                let f1 = coeff(&self.alpha, 0) + coeff(&self.alpha, 1) * v;
                let f2 = coeff(&self.beta, 0) * u.powu(q - 1) + coeff(&self.beta, 1) * u.powu(2 * q - 1);
                Ok([f1, f2])
            }
        }
    }
}

/// A solution evaluated at non-decreasing times. Asking for an earlier time
/// restarts from t = 0.
pub trait Flow: Send {
    fn state_at(&mut self, t: f64) -> Result<[C64; 2]>;
    fn initial(&self) -> [C64; 2];
}

/// The solver appropriate for the variant.
pub fn flow(sys: &AppendixASystem, y0: [C64; 2], tol: &Tolerances) -> Result<Box<dyn Flow>> {
    Ok(match sys.variant {
        Variant::A1 => Box::new(A1Flow::new(sys, y0, tol)?),
        Variant::A2 => Box::new(A2Flow::new(sys, y0, tol)?),
        Variant::A31 => Box::new(A31Flow::new(sys, y0, tol)?),
        Variant::A32 | Variant::A33 => Box::new(A3EnergyFlow::new(sys, y0, tol)?),
    })
}

/// One-shot evaluation at a single time.
pub fn solve(sys: &AppendixASystem, y0: [C64; 2], t: f64, tol: &Tolerances) -> Result<[C64; 2]> {
    flow(sys, y0, tol)?.state_at(t)
}

pub fn solve_a1(sys: &AppendixASystem, y0: [C64; 2], t: f64, tol: &Tolerances) -> Result<[C64; 2]> {
    A1Flow::new(sys, y0, tol)?.state_at(t)
}

pub fn solve_a2(sys: &AppendixASystem, y0: [C64; 2], t: f64, tol: &Tolerances) -> Result<[C64; 2]> {
    A2Flow::new(sys, y0, tol)?.state_at(t)
}

pub fn solve_a31(sys: &AppendixASystem, y0: [C64; 2], t: f64, tol: &Tolerances) -> Result<[C64; 2]> {
    A31Flow::new(sys, y0, tol)?.state_at(t)
}

pub fn solve_a32_a33(sys: &AppendixASystem, y0: [C64; 2], t: f64, tol: &Tolerances) -> Result<[C64; 2]> {
    A3EnergyFlow::new(sys, y0, tol)?.state_at(t)
}

/// integral_0^t (w0 + v s)^p ds, expanded so that v -> 0 is exact.
pub(crate) fn power_integral(w0: C64, v: C64, p: u32, t: f64) -> C64 {
    let mut acc = ZERO;
    let mut binom = 1.0;
    for j in 0..=p {
        acc += binom * w0.powu(p - j) * v.powu(j) * t.powi(j as i32 + 1) / (j as f64 + 1.0);
        binom = binom * (p - j) as f64 / (j + 1) as f64;
    }
    acc
}

pub(crate) fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidSystem(format!("time must be finite and non-negative, got {t}")));
    }
    Ok(())
}
