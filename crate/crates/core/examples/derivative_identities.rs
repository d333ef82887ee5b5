//! Zero velocities from coefficient velocities, and the two-term ydot relations.

use zerodyn::complex::{c, C64};
use zerodyn::identities::{build_derivative_system, complete_ydot, pair_relations, xdot_from_ydot, ydot_from_xdot};
use zerodyn::polynomials::{CaseTag, MultiRootPolynomial, SelectedPair};
use zerodyn::Tolerances;

fn main() -> zerodyn::Result<()> {
    let tol = Tolerances::default();
    let x = [c(0.7, -0.3), c(-0.4, 1.1)];
    let p = MultiRootPolynomial::from_values(&x, &CaseTag::I.signature(), &tol)?;
    let sys = build_derivative_system(&p, &tol)?;

    // prescribe ydot1, ydot2 and let the multiplicity constraints fix the rest
    let pair = SelectedPair::new(1, 2, CaseTag::I)?;
    let ydot = complete_ydot(&sys, pair, [c(0.2, 0.0), c(-0.5, 0.1)], &tol)?;
    let xdot = xdot_from_ydot(&sys, &ydot, &tol)?;
    println!("ydot = {ydot:.6?}");
    println!("xdot = {xdot:.6?}");
    let again = ydot_from_xdot(&p, &xdot);
    let err = again.iter().zip(&ydot).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    println!("chain rule round trip error {err:.1e}");

    let y4: [C64; 4] = [ydot[0], ydot[1], ydot[2], ydot[3]];
    for r in pair_relations().iter().filter(|r| r.case == CaseTag::I) {
        let v = (r.eval)(x[0], x[1], &y4);
        println!("{r:?}: {:.1e}", (v - y4[r.target - 1]).norm());
    }
    Ok(())
}
