//! The solvable two-component driving systems: closed forms where they exist,
//! energy-conserving quadrature for the hyperelliptic cases.

use zerodyn::complex::{c, ZERO};
use zerodyn::solvers::{flow, AppendixASystem, A3EnergyFlow, Flow, Variant};
use zerodyn::Tolerances;

fn main() -> zerodyn::Result<()> {
    let tol = Tolerances::default();
    let y0 = [c(0.3, -0.1), c(0.2, 0.2)];
    let systems = [
        AppendixASystem::new(Variant::A1, 1, 2, vec![c(0.1, 0.0), c(-0.4, 0.2)], vec![c(0.3, 0.1), c(0.2, -0.1)], vec![])?,
        AppendixASystem::new(Variant::A2, 1, 3, vec![c(0.2, 0.0), c(-0.3, 0.1)], vec![ZERO, c(0.5, 0.2)], vec![ZERO, c(0.1, 0.0)])?,
        AppendixASystem::new(Variant::A31, 1, 2, vec![c(0.3, -0.2), c(-0.7, 0.4)], vec![c(0.5, 0.1), c(-0.4, 0.6)], vec![])?,
    ];
    for sys in &systems {
        let mut f = flow(sys, y0, &tol)?;
        let y = f.state_at(1.0)?;
        println!("{}: y(1) = ({:.10}, {:.10})", sys.variant.label(), y[0], y[1]);
    }
    let sys = AppendixASystem::new(Variant::A33, 1, 4, vec![c(0.1, 0.2), c(-0.6, 0.3)], vec![c(0.4, -0.2), c(0.3, 0.5)], vec![])?;
    let mut f = A3EnergyFlow::new(&sys, y0, &tol)?;
    for t in [0.25, 0.5, 1.0] {
        let y = f.state_at(t)?;
        println!("A33: y({t}) = ({:.10}, {:.10}), C drift {:.1e}", y[0], y[1], f.energy_drift());
    }
    Ok(())
}
