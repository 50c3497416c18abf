//! Tile catalogs for both halves, with the admissible subsets.

use dsring::cli::tiles_report;
use dsring::tiles::{catalog, CatalogCounts};
use dsring::*;

fn main() {
    // Summary lines only; the tile list itself is what `dsring tiles` prints.
    for line in tiles_report(Half::Lower, Catalog::K)
        .lines()
        .filter(|l| !l.starts_with([' ', 'x']))
    {
        println!("{line}");
    }
    for half in [Half::Lower, Half::Upper] {
        for mode in [Catalog::H, Catalog::K] {
            let all = catalog(half, mode);
            let ok: Vec<Tile> = all.iter().copied().filter(Tile::is_admissible).collect();
            println!(
                "{half:?} {mode:?}: {} tiles, {} admissible",
                all.len(),
                CatalogCounts::of(&ok).total()
            );
        }
    }
}
