//! Bounded juggling patterns: windows, triangles, duals, ranks.

use dsring::juggling::{dual, is_sorted, rank_and_essential, rotate, schubert_pattern};
use dsring::*;

fn main() -> Result<()> {
    let bits: BitString = "0101".parse()?;
    let j = schubert_pattern(&bits);
    println!(
        "Schubert pattern of {bits}: {j}, ball number {}",
        j.ball_number()
    );
    print!("{}", j.render());

    let d = dual(&j);
    println!("dual {d}, ball number {}", d.ball_number());
    println!("rotated by 1: {}", rotate(&j, 1));

    let ranks = rank_and_essential(&j);
    println!("essential boxes {:?}", ranks.essential);
    let sorted: Vec<usize> = (0..=j.n()).filter(|&i| is_sorted(&j, i)).collect();
    println!("i-sorted for i in {sorted:?}");
    Ok(())
}
