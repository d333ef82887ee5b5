//! Jacobi sn, cn, dn at complex argument and modulus, with the inverse of sn.

use zerodyn::complex::c;
use zerodyn::specfun::{inverse_sn, jacobi_sn_cn_dn};
use zerodyn::Tolerances;

fn main() -> zerodyn::Result<()> {
    let tol = Tolerances::default();
    let k = c(0.6, 0.2);
    for z in [c(0.3, 0.0), c(1.2, -0.4), c(-2.5, 1.1)] {
        let j = jacobi_sn_cn_dn(z, k, &tol)?;
        let w = inverse_sn(j.sn, k, &tol)?;
        println!("z = {z:.3}: sn {:.10} cn {:.10} dn {:.10}", j.sn, j.cn, j.dn);
        println!("  sn^2+cn^2-1 = {:.1e}, sn(inverse_sn) - sn = {:.1e}", (j.sn * j.sn + j.cn * j.cn - 1.0).norm(), (jacobi_sn_cn_dn(w, k, &tol)?.sn - j.sn).norm());
    }
    Ok(())
}
