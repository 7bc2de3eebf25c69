//! The cube theory with diagonals but no connections embeds into the
//! lattice one faithfully but not fully: connection maps have no preimage.
//!
//! ```bash
//! cargo run --example bipointed_comparison
//! ```

use std::collections::BTreeSet;

use latcube::cube::{enumerate_bipointed, enumerate_hom, from_bipointed, CubeMorphism};

fn main() -> latcube::Result<()> {
    let bip = enumerate_bipointed(2, 1);
    let image: BTreeSet<CubeMorphism> = bip.iter().map(from_bipointed).collect();
    let full = enumerate_hom(2, 1)?;
    println!("bipointed hom(2,1): {} morphisms", bip.len());
    println!("lattice hom(2,1):   {} morphisms", full.len());
    println!("image of the comparison functor:");
    for f in &image {
        println!("  {f}");
    }
    println!("not in the image:");
    for f in full.iter().filter(|f| !image.contains(*f)) {
        println!("  {f}");
    }
    for m in 0..=2usize {
        for n in 0..=2usize {
            let all = enumerate_bipointed(m, n);
            let image: BTreeSet<CubeMorphism> = all.iter().map(from_bipointed).collect();
            assert_eq!(all.len(), image.len());
        }
    }
    println!("faithful on every hom-set with m, n <= 2");
    Ok(())
}
