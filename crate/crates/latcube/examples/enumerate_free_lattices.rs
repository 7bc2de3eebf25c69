//! Enumerate free bounded distributive lattices and free De Morgan
//! algebras: the sizes follow the count of monotone Boolean functions.
//!
//! ```bash
//! cargo run --example enumerate_free_lattices
//! ```

use latcube::lattice::{enumerate_free, enumerate_free_dm};

fn main() -> latcube::Result<()> {
    for n in 0..=4usize {
        println!("free lattice on {n}: {} elements", enumerate_free(n)?.len());
    }
    println!();
    println!("the six elements of the free lattice on two generators:");
    for e in enumerate_free(2)? {
        println!("  {e}");
    }
    println!();
    for n in 0..=2usize {
        println!(
            "free De Morgan algebra on {n}: {} elements",
            enumerate_free_dm(n)?.len()
        );
    }
    Ok(())
}
