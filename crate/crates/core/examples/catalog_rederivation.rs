//! Rederive a catalog model's equations of motion from its driving system and
//! show the typo ledger.

use zerodyn::catalog::{check_model, params, Catalog};
use zerodyn::complex::c;

fn main() -> zerodyn::Result<()> {
    let cat = Catalog::builtin();
    let m = cat.get("4.(i)1.2d")?;
    let inst = m.instantiate(&params(&[("a", c(1.0, 0.0)), ("b", c(0.5, -0.2))]))?;
    let x = [c(0.1, 0.0), c(0.2, 0.1)];
    println!("{} printed   {:.12?}", m.id, inst.rhs(x)?);
    println!("{} rederived {:.12?}", m.id, inst.rederive(x)?);

    let mut worst: f64 = 0.0;
    for m in cat.distinct() {
        worst = worst.max(check_model(cat, m, 20, 1)?.max_discrepancy);
    }
    println!("{} distinct models, worst discrepancy {worst:.1e}", cat.distinct().count());
    for e in &cat.ledger {
        println!("ledger {}: {}", e.model, e.note);
    }
    Ok(())
}
