//! Any finite distributive lattice gives a cocubical object: level n is
//! the set of n-tuples, and a cube morphism acts by evaluating its term
//! components. Functoriality is checked here on a small chain.
//!
//! ```bash
//! cargo run --example cocubical_models
//! ```

use latcube::cset::cocubical_eval;
use latcube::cube::{self, ConnectionKind};
use latcube::lattice::FiniteLattice;

fn main() -> latcube::Result<()> {
    let chain = FiniteLattice::chain(3)?;
    let join = cube::connection(1, 0, 1, ConnectionKind::Join)?;
    println!("the join connection on tuples over the 3-chain:");
    for a in 0..3usize {
        for b in 0..3usize {
            let image = cocubical_eval(&chain, &join).apply(&[a, b])?;
            println!(
                "  ({}, {}) |-> {}",
                chain.name(a),
                chain.name(b),
                chain.name(image[0])
            );
        }
    }
    // contravariant functoriality on a sample of composites
    let mut checked = 0usize;
    for f in cube::enumerate_hom(1, 1)? {
        for g in cube::enumerate_hom(2, 1)? {
            let composite = f.compose(&g)?;
            for a in 0..3usize {
                for b in 0..3usize {
                    let point = vec![a, b];
                    let staged = cocubical_eval(&chain, &f)
                        .apply(&cocubical_eval(&chain, &g).apply(&point)?)?;
                    let direct = cocubical_eval(&chain, &composite).apply(&point)?;
                    assert_eq!(staged, direct);
                    checked += 1;
                }
            }
        }
    }
    println!("functoriality checked on {checked} composite evaluations");
    Ok(())
}
