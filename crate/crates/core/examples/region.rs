//! The empty region of a pair, with its fixed boundary labels and shaded zone.

use dsring::*;

fn main() -> Result<()> {
    for (l, (a, b), m, (c, d)) in [("1,1", (2, 2), "1", (2, 1)), ("1", (2, 1), "1,1", (2, 2))] {
        let region = build_region(
            &BoxedPartition::parse(l, a, b)?,
            &BoxedPartition::parse(m, c, d)?,
        );
        println!(
            "{} x {}: {} cells, width {}",
            region.lambda(),
            region.mu(),
            region.num_cells(),
            region.width()
        );
        println!("{}", region.render());
    }
    Ok(())
}
