//! ([1]·[1])·[1] against [1]·([1]·[1]) in every ring, intermediate boxes included.

use dsring::*;

fn main() -> Result<()> {
    let one = BoxedPartition::parse("1", 1, 1)?;
    for mode in Mode::ALL {
        let x = Element::schubert(&one, mode);
        let left = x.multiply(&x)?.multiply(&x)?;
        let right = x.multiply(&x.multiply(&x)?)?;
        println!("{:>2}: {left}", mode.name());
        assert_eq!(left, right);
    }
    Ok(())
}
