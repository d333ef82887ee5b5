//! Periods of the gauged canonical system with a purely imaginary linear term.

use zerodyn::complex::c;
use zerodyn::extensions::{canonical_table, plane_period, PlaneQuadraticSystem};
use zerodyn::Tolerances;

fn main() -> zerodyn::Result<()> {
    let tol = Tolerances::default();
    let z0 = [c(0.03, 0.01), c(-0.02, 0.02)];
    for (a2, b2) in [(1.0, 1.0), (0.5, 1.0), (2.0, 1.0), (3.0, 1.0)] {
        let s = PlaneQuadraticSystem::new(c(0.0, 1.0), canonical_table(c(a2, 0.0), c(b2, 0.0)));
        match plane_period(&s, z0, 12.0 * std::f64::consts::TAU, &tol)? {
            Some(p) => println!("a2/b2 = {}: period {:.12} = {} x 2 pi, deviation {:.1e}", a2 / b2, p.period, p.multiple.unwrap_or(0), p.deviation),
            None => println!("a2/b2 = {}: no period within the horizon", a2 / b2),
        }
    }
    Ok(())
}
