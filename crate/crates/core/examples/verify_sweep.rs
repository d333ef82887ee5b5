//! The analytic-versus-oracle sweep behind `zerodyn verify`, for a few models.

use zerodyn::catalog::Catalog;
use zerodyn::cli::trajectory_sweep;
use zerodyn::Tolerances;

fn main() {
    let tol = Tolerances::default();
    let cat = Catalog::builtin();
    for id in ["4i12d", "4ii13a", "4i24b"] {
        let Ok(m) = cat.get(id) else { continue };
        let (runs, worst, horizon, errors) = trajectory_sweep(m, 5, 11, &tol);
        println!("{}: {runs} runs, max deviation {worst:.1e}, shortest horizon {horizon:.2}, {} errors", m.id, errors.len());
    }
}
