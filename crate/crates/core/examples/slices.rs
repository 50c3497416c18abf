//! Slices of a juggling pattern, and the pattern attached to a dream region.

use dsring::juggling::{pattern_to_slice, region_slice, sigma_prime, slice_to_pattern, Slice};
use dsring::*;

fn word(v: &[Letter]) -> String {
    v.iter().map(|l| l.symbol()).collect()
}

fn show(s: &Slice) -> String {
    format!(
        "south {} east {} diag {}",
        word(&s.south),
        word(&s.east),
        word(&s.diag)
    )
}

fn main() -> Result<()> {
    let bits: BitString = "0110".parse()?;
    let zero = Slice::zero(&bits);
    println!(
        "0-slice of {bits}: {} -> {}",
        show(&zero),
        slice_to_pattern(&zero)?
    );

    let lambda = BoxedPartition::parse("1,1", 2, 2)?;
    let mu = BoxedPartition::parse("1", 2, 1)?;
    let s = sigma_prime(&lambda, &mu);
    println!("\nsigma' = {s}");
    print!("{}", s.render());

    let boundary = region_slice(&build_region(&lambda, &mu));
    println!(
        "region boundary: {} -> {}",
        show(&boundary),
        slice_to_pattern(&boundary)?
    );
    let level = lambda.rows() + lambda.cols();
    for sl in pattern_to_slice(&s, level) {
        println!("slice at {level}: {}", show(&sl));
    }
    Ok(())
}
