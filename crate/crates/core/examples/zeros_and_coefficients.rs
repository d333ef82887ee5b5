//! Zeros with multiplicities to coefficients and back.

use zerodyn::complex::c;
use zerodyn::polynomials::{coeffs_from_zeros, zeros_from_coeffs, MultiRootPolynomial};
use zerodyn::Tolerances;

fn main() -> zerodyn::Result<()> {
    let tol = Tolerances::default();
    for sig in [[3, 1], [2, 2]] {
        let p = MultiRootPolynomial::from_values(&[c(0.4, -0.3), c(-1.1, 0.7)], &sig, &tol)?;
        let y = coeffs_from_zeros(&p);
        println!("signature {sig:?}");
        for (m, v) in y.y.iter().enumerate() {
            println!("  y{} = {v:.6}", m + 1);
        }
        let back = zeros_from_coeffs(&y, &sig, &tol)?;
        for z in back.zeros() {
            println!("  zero {:.12} multiplicity {}", z.value, z.multiplicity);
        }
    }
    Ok(())
}
