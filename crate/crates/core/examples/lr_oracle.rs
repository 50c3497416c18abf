//! Littlewood-Richardson numbers two ways, and the H ring against them.

use std::collections::BTreeMap;

use dsring::oracle::{lr_expansion, schur_product_bruteforce};
use dsring::*;
use num_bigint::BigInt;

fn main() -> Result<()> {
    let (l, m) = (vec![2, 1], vec![2, 1]);
    let tableaux = lr_expansion(&l, &m);
    let brute = schur_product_bruteforce(&l, &m, 4)?;
    for (nu, c) in &tableaux {
        println!(
            "c^{nu:?} = {c}  (brute force {})",
            brute.get(nu).copied().unwrap_or(0)
        );
    }

    // The same product inside boxes big enough to hold every term.
    let lambda = BoxedPartition::new(l, 2, 2)?;
    let mu = BoxedPartition::new(m, 2, 2)?;
    let h = expand::<BigInt>(&lambda, &mu)?;
    let from_dreams: BTreeMap<Vec<usize>, BigInt> = h
        .terms()
        .iter()
        .map(|(nu, c)| (nu.nonzero_parts().to_vec(), c.clone()))
        .collect();
    let expected: BTreeMap<Vec<usize>, BigInt> =
        tableaux.into_iter().map(|(nu, c)| (nu, c.into())).collect();
    println!("dreams agree with tableaux: {}", from_dreams == expected);
    Ok(())
}
