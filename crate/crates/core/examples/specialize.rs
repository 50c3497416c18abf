//! Forgetting the torus: t = 0 in HS and q = 1 in KS.

use dsring::ring::Specialization;
use dsring::*;

fn main() -> Result<()> {
    let lambda = BoxedPartition::parse("1,1", 2, 2)?;
    let mu = BoxedPartition::parse("1", 2, 1)?;
    let product = |mode| Element::schubert(&lambda, mode).multiply(&Element::schubert(&mu, mode));

    let hs = product(Mode::HS)?;
    println!("HS        {hs}");
    println!("HS at t=0 {}", hs.specialize(Specialization::HsT0)?);
    println!("H         {}", product(Mode::H)?);

    let ks = product(Mode::KS)?;
    println!("KS        {ks}");
    println!("KS at q=1 {}", ks.specialize(Specialization::KsQ1)?);
    println!("latex     {}", ks.to_latex());
    Ok(())
}
