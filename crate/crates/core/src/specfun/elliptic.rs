//! Jacobi elliptic functions of complex argument and complex modulus, by the
//! descending Landen transformation, and Carlson's R_F for the inverse.

use crate::complex::{C64, ONE, ZERO};
use crate::config::Tolerances;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiTriple {
    pub sn: C64,
    pub cn: C64,
    pub dn: C64,
}

fn principal_kprime(k: C64) -> C64 {
    let kp = (ONE - k * k).sqrt();
    if kp.re < 0.0 {
        -kp
    } else {
        kp
    }
}

/// sn, cn, dn of (z, k). The modulus k (not the parameter k^2) is given.
pub fn jacobi_sn_cn_dn(z: C64, k: C64, tol: &Tolerances) -> Result<JacobiTriple> {
    if k == ZERO {
        return Ok(JacobiTriple { sn: z.sin(), cn: z.cos(), dn: ONE });
    }
    if (k - ONE).norm() == 0.0 || (k + ONE).norm() == 0.0 {
        let sech = ONE / z.cosh();
        return Ok(JacobiTriple { sn: z.tanh(), cn: sech, dn: sech });
    }
    if k.norm() > 1.0 {
        // reciprocal modulus: sn(z,k) = sn(kz,1/k)/k, cn(z,k) = dn(kz,1/k), dn(z,k) = cn(kz,1/k)
        let inner = descend(z * k, ONE / k, tol)?;
        return Ok(JacobiTriple { sn: inner.sn / k, cn: inner.dn, dn: inner.cn });
    }
    descend(z, k, tol)
}

/// z - 2aK - 2b iK' in the period parallelogram centred on 0, with (a, b).
///
/// The ascending half of the Landen recurrence cancels badly once |Im w| is
/// large, so the argument is reduced first.
fn reduce_argument(z: C64, k: C64) -> Result<(C64, i64, i64)> {
    let m = k * k;
    let p1 = 2.0 * carlson_rf(ZERO, ONE - m, ONE)?;
    let p2 = 2.0 * C64::i() * carlson_rf(ZERO, m, ONE)?;
    let det = p1.re * p2.im - p1.im * p2.re;
    if !det.is_finite() || det.abs() < 1e-300 {
        return Ok((z, 0, 0));
    }
    let a = ((z.re * p2.im - z.im * p2.re) / det).round();
    let b = ((p1.re * z.im - p1.im * z.re) / det).round();
    if a == 0.0 && b == 0.0 {
        return Ok((z, 0, 0));
    }
    Ok((z - p1 * a - p2 * b, a as i64, b as i64))
}

fn descend(z: C64, k: C64, tol: &Tolerances) -> Result<JacobiTriple> {
    // sn(z + 2K) = -sn, cn(z + 2K) = -cn; cn(z + 2iK') = -cn, dn(z + 2iK') = -dn
    let (z, a, b) = reduce_argument(z, k)?;
    let sign = |n: i64| if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let j = descend_reduced(z, k, tol)?;
    Ok(JacobiTriple { sn: j.sn * sign(a), cn: j.cn * sign(a + b), dn: j.dn * sign(b) })
}

fn descend_reduced(z: C64, k: C64, tol: &Tolerances) -> Result<JacobiTriple> {
    let mut moduli = Vec::new();
    let mut kn = k;
    let mut iter = 0;
    while kn.norm() >= tol.landen_stop {
        if iter >= tol.landen_max_iter {
            return Err(Error::ModulusSingular);
        }
        let kp = principal_kprime(kn);
        let next = kn * kn / ((ONE + kp) * (ONE + kp));
        if !crate::complex::is_finite(next) || next.norm() >= 1.0 {
            return Err(Error::ModulusSingular);
        }
        moduli.push(next);
        kn = next;
        iter += 1;
    }
    let mut w = z;
    for &k1 in &moduli {
        w /= ONE + k1;
    }
    let (mut s, mut c, mut d) = (w.sin(), w.cos(), ONE);
    for &k1 in moduli.iter().rev() {
        let denom = ONE + k1 * s * s;
        let sn = (ONE + k1) * s / denom;
        let cn = c * d / denom;
        let dn = (ONE - k1 * s * s) / denom;
        s = sn;
        c = cn;
        d = dn;
    }
    Ok(JacobiTriple { sn: s, cn: c, dn: d })
}

/// Carlson's symmetric integral R_F(x, y, z) by duplication.
pub fn carlson_rf(x: C64, y: C64, z: C64) -> Result<C64> {
    let (mut x, mut y, mut z) = (x, y, z);
    for _ in 0..200 {
        let mu = (x + y + z) / 3.0;
        let scale = mu.norm();
        if scale == 0.0 {
            return Err(Error::NonConvergent { estimate: f64::INFINITY });
        }
        let dx = (mu - x) / mu;
        let dy = (mu - y) / mu;
        let dz = (mu - z) / mu;
        let e = dx.norm().max(dy.norm()).max(dz.norm());
        if e < 1e-4 {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            let series = ONE - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
            return Ok(series / mu.sqrt());
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sx * sz + sy * sz;
        x = (x + lambda) / 4.0;
        y = (y + lambda) / 4.0;
        z = (z + lambda) / 4.0;
    }
    Err(Error::NonConvergent { estimate: f64::NAN })
}

/// A solution rho of sn(rho, k) = s, Newton-polished. The branch is the one
/// continued from rho = 0 at s = 0 along the principal square roots.
pub fn inverse_sn(s: C64, k: C64, tol: &Tolerances) -> Result<C64> {
    let mut rho = if s == ZERO { ZERO } else { s * carlson_rf(ONE - s * s, ONE - k * k * s * s, ONE)? };
    for _ in 0..8 {
        let j = jacobi_sn_cn_dn(rho, k, tol)?;
        let deriv = j.cn * j.dn;
        if deriv == ZERO {
            break;
        }
        let step = (j.sn - s) / deriv;
        rho -= step;
        if step.norm() <= 1e-16 * (1.0 + rho.norm()) {
            break;
        }
    }
    Ok(rho)
}
