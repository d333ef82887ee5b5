//! Follow the zeros of a catalog model along the analytic path, compare with
//! direct integration and print the CSV.

use zerodyn::catalog::{params, Catalog};
use zerodyn::cli::trajectory_csv;
use zerodyn::complex::c;
use zerodyn::engine::{compare, integrate_numeric, solve_trajectory};
use zerodyn::Tolerances;

fn main() -> zerodyn::Result<()> {
    let tol = Tolerances::default();
    let m = Catalog::builtin().get("4i12d")?;
    let inst = m.instantiate(&params(&[("a", c(1.0, 0.0)), ("b", c(1.0, 0.0))]))?;
    let x0 = [c(0.1, 0.0), c(0.2, 0.1)];
    let times: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
    let an = solve_trajectory(&inst, x0, &times, &tol)?;
    let nu = integrate_numeric(&inst, x0, &times, 1e-12)?;
    print!("{}", trajectory_csv(&an));
    println!("max relative deviation from the numerical oracle {:.1e}", compare(&an, &nu).max_relative);
    Ok(())
}
