//! Reduce a linearly reshuffled quadratic plane system to the canonical
//! solvable form, then solve it through the reduction.

use zerodyn::complex::c;
use zerodyn::engine::compare;
use zerodyn::extensions::{conda_residual, conda_scale, integrate_plane_numeric, reduce_with_report, solve_quadratic_plane, transform_linear, ReductionSpec};
use zerodyn::Tolerances;

fn main() -> zerodyn::Result<()> {
    let tol = Tolerances::default();
    let spec = ReductionSpec::new([[c(1.0, 0.2), c(-0.5, 0.0)], [c(0.3, -0.1), c(0.8, 0.4)]], c(0.7, 0.1), c(-0.3, 0.5))?;
    let mut s = transform_linear(&spec)?;
    println!("table {:.6?}", s.table);
    println!("conda residual {:.1e} (relative)", conda_residual(&s).norm() / conda_scale(&s));
    let red = reduce_with_report(&s, &tol)?;
    println!("a2 = {:.10}, b2 = {:.10}, round trip {:.1e}", red.spec.a2, red.spec.b2, red.round_trip);

    s.a = c(0.2, -0.3);
    let z0 = [c(0.1, 0.05), c(-0.1, 0.1)];
    let times: Vec<f64> = (0..=20).map(|k| k as f64 / 20.0).collect();
    let an = solve_quadratic_plane(&s, z0, &times, &tol)?;
    let nu = integrate_plane_numeric(&s, z0, &times, 1e-12)?;
    println!("z(1) = {:.10?}, deviation from oracle {:.1e}", an.states.last().unwrap(), compare(&an, &nu).max_relative);
    Ok(())
}
