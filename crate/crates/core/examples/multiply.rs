//! Multiply two Schubert classes in each of the three rings.
//!
//!     cargo run --example multiply -- 1,1 2x2 1 2x1

use dsring::partitions::parse_box;
use dsring::*;

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let (a, b) = parse_box(&arg(1, "2x2"))?;
    let (c, d) = parse_box(&arg(3, "2x1"))?;
    let lambda = BoxedPartition::parse(&arg(0, "1,1"), a, b)?;
    let mu = BoxedPartition::parse(&arg(2, "1"), c, d)?;

    for mode in Mode::ALL {
        let x = Element::schubert(&lambda, mode);
        let y = Element::schubert(&mu, mode);
        println!("{:>2}: {}", mode.name(), x.multiply(&y)?);
    }
    Ok(())
}
