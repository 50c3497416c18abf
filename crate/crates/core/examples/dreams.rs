//! List the KS dreams of the running example and draw the first one.

use dsring::enumerate::{dream_weight, render_dream};
use dsring::*;

fn main() -> Result<()> {
    let lambda = BoxedPartition::parse("1,1", 2, 2)?;
    let mu = BoxedPartition::parse("1", 2, 1)?;
    let region = build_region(&lambda, &mu);
    let dreams = enumerate_dreams(&region, Mode::KS)?;

    for d in &dreams {
        let s = d.stats();
        let w: LaurentPoly = dream_weight(d)?;
        println!(
            "{}  weight {w}  E={} fusing={}",
            d.nu(),
            s.equivariant,
            s.fusing
        );
    }
    if let Some(first) = dreams.first() {
        print!("\n{}", render_dream(first));
    }
    Ok(())
}
