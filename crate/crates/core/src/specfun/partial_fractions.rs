use crate::complex::{C64, ONE, ZERO};
use crate::config::Tolerances;
use crate::error::{Error, Result};

/// The data of one separable quadrature dy / (alpha_L prod (y - root_n)).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureData {
    pub roots: Vec<C64>,
    pub residues: Vec<C64>,
    pub leading: C64,
    /// Conserved constant of an energy-form quadrature, zero when unused.
    pub conserved: C64,
}

impl QuadratureData {
    pub fn new(roots: Vec<C64>, leading: C64, tol: &Tolerances) -> Result<Self> {
        let residues = partial_fractions(&roots, tol)?;
        Ok(QuadratureData { roots, residues, leading, conserved: ZERO })
    }

    /// sum r_n / (y - root_n), which equals 1 / prod (y - root_n).
    pub fn reconstruct(&self, y: C64) -> C64 {
        self.roots.iter().zip(&self.residues).map(|(&root, &r)| r / (y - root)).sum()
    }
}

/// Residues r_n = prod_{j != n} (root_n - root_j)^(-1).
pub fn partial_fractions(roots: &[C64], tol: &Tolerances) -> Result<Vec<C64>> {
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = (roots[i] - roots[j]).norm();
            if d <= tol.separation * 1f64.max(roots[i].norm()).max(roots[j].norm()) {
                return Err(Error::RepeatedRoot { distance: d });
            }
        }
    }
    Ok((0..roots.len())
        .map(|n| {
            let mut prod = ONE;
            for (j, &rj) in roots.iter().enumerate() {
                if j != n {
                    prod *= roots[n] - rj;
                }
            }
            ONE / prod
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{c, re};

    #[test]
    fn examples() {
        let t = Tolerances::default();
        let r = partial_fractions(&[ZERO, ONE, re(-1.0)], &t).unwrap();
        assert_eq!(r, vec![re(-1.0), re(0.5), re(0.5)]);
        assert_eq!(partial_fractions(&[c(2.0, 1.0)], &t).unwrap(), vec![ONE]);
        assert!(matches!(partial_fractions(&[ONE, ONE], &t), Err(Error::RepeatedRoot { .. })));
    }

    #[test]
    fn reconstruction() {
        let t = Tolerances::default();
        let roots = vec![c(0.1, 0.2), c(-1.0, 0.3), c(0.5, -0.9), c(2.0, 0.0), c(-0.3, -1.4)];
        let q = QuadratureData::new(roots.clone(), ONE, &t).unwrap();
        assert!(q.residues.iter().sum::<C64>().norm() < 1e-13);
        let y = c(0.37, 0.61);
        let direct = ONE / roots.iter().map(|&r| y - r).product::<C64>();
        assert!((q.reconstruct(y) - direct).norm() < 1e-12 * direct.norm());
    }
}
