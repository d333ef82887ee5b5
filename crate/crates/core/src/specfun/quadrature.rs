//! Globally adaptive Gauss-Kronrod (7, 15) quadrature.

use crate::complex::{C64, ZERO};
use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

const MAX_INTERVALS: usize = 4000;

fn gk15<F: FnMut(f64) -> C64>(f: &mut F, a: f64, b: f64) -> (C64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let sum = f(center - dx) + f(center + dx);
        kronrod += sum * WGK[j];
        if j % 2 == 1 {
            gauss += sum * WG[j / 2];
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).norm())
}

/// Integral of f over the real interval [a, b] to relative accuracy `tol`.
pub fn integrate_real<F: FnMut(f64) -> C64>(mut f: F, a: f64, b: f64, tol: f64) -> Result<C64> {
    if a == b {
        return Ok(ZERO);
    }
    let (v, e) = gk15(&mut f, a, b);
    let mut parts = vec![(a, b, v, e)];
    loop {
        let total: C64 = parts.iter().map(|p| p.2).sum();
        let err: f64 = parts.iter().map(|p| p.3).sum();
        if !crate::complex::is_finite(total) {
            return Err(Error::NonConvergent { estimate: f64::INFINITY });
        }
        if err <= tol * total.norm() || err <= 1e-300 {
            return Ok(total);
        }
        if parts.len() >= MAX_INTERVALS {
            return Err(Error::NonConvergent { estimate: err });
        }
        let (worst, _) = parts.iter().enumerate().fold((0, -1.0), |acc, (i, p)| if p.3 > acc.1 { (i, p.3) } else { acc });
        let (lo, hi, _, _) = parts.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Err(Error::NonConvergent { estimate: err });
        }
        let (v1, e1) = gk15(&mut f, lo, mid);
        let (v2, e2) = gk15(&mut f, mid, hi);
        parts.push((lo, mid, v1, e1));
        parts.push((mid, hi, v2, e2));
    }
}

/// Integral of f along the straight segment from `from` to `to` in the complex plane.
pub fn adaptive_quadrature<F: FnMut(C64) -> C64>(mut f: F, from: C64, to: C64, tol: f64) -> Result<C64> {
    let dir = to - from;
    integrate_real(|s| f(from + dir * s) * dir, 0.0, 1.0, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{c, re, ONE};

    #[test]
    fn examples() {
        let v = adaptive_quadrature(|_| ONE, ZERO, ONE, 1e-13).unwrap();
        assert!((v - ONE).norm() < 1e-15);
        let v = adaptive_quadrature(|z| z * z * z, ZERO, ONE, 1e-13).unwrap();
        assert!((v - re(0.25)).norm() < 1e-15);
        let v = adaptive_quadrature(|z| ONE / (ONE - z * z).sqrt(), ZERO, re(0.5), 1e-13).unwrap();
        assert!((v.re - std::f64::consts::PI / 6.0).abs() < 1e-14);
    }

    #[test]
    fn complex_segment() {
        // integral of exp(z) from 0 to 1+i
        let end = c(1.0, 1.0);
        let v = adaptive_quadrature(|z| z.exp(), ZERO, end, 1e-13).unwrap();
        assert!((v - (end.exp() - ONE)).norm() < 1e-13);
    }

    #[test]
    fn singular_integrand_fails() {
        assert!(integrate_real(|x| re(1.0 / x), 0.0, 1.0, 1e-13).is_err());
    }
}
