//! Birkhoff duality on finite data: a distributive lattice is the downset
//! lattice of its join-irreducible poset, with an explicit verified
//! isomorphism.
//!
//! ```bash
//! cargo run --example birkhoff_duality
//! ```

use latcube::duality::{duality_roundtrip, find_poset_iso, join_irreducibles, FinitePoset};
use latcube::lattice::FiniteLattice;

fn main() -> latcube::Result<()> {
    let free2 = FiniteLattice::free(2)?;
    println!(
        "the free lattice on two generators has {} elements:",
        free2.len()
    );
    let (poset, ids) = join_irreducibles(&free2);
    println!("its join-irreducibles:");
    for (k, &id) in ids.iter().enumerate() {
        let below: Vec<&str> = (0..poset.len())
            .filter(|&other| other != k && poset.leq(other, k))
            .map(|other| poset.names()[other].as_str())
            .collect();
        println!(
            "  {}  (strictly below it: {})",
            free2.name(id),
            below.join(", ")
        );
    }
    let square = FinitePoset::two_power(2);
    println!(
        "isomorphic to the square poset: {}",
        find_poset_iso(&poset, &square).is_some()
    );

    let (_, downsets, iso) = duality_roundtrip(&free2)?;
    println!(
        "round trip: {} elements map onto {} downsets, order preserved both ways",
        free2.len(),
        downsets.len()
    );
    for (a, &image) in iso.forward.iter().enumerate().take(3) {
        println!("  {}  |->  {}", free2.name(a), downsets.name(image));
    }
    println!("  ...");
    Ok(())
}
