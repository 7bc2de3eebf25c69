//! Chains are flat: the bounded search finds a witness for every equalized
//! pair of term tuples, and the sort-and-cumulative-join construction
//! produces one directly.
//!
//! ```bash
//! cargo run --example flatness_chains
//! ```

use latcube::cube::CubeMorphism;
use latcube::flatness::{check_flatness_bounded, linear_order_witness, Bounds, FlatnessInstance};
use latcube::lattice::{normalize, FiniteLattice};
use latcube::term::parse;

fn main() -> latcube::Result<()> {
    let chain = FiniteLattice::chain(4)?;
    let bounds = Bounds::new(2, 2, 3);
    let outcome = check_flatness_bounded(&chain, bounds)?;
    println!(
        "4-chain at bounds (n,m,k) = (2,2,3): flat up to bounds = {}",
        outcome.is_flat_up_to_bounds()
    );

    // one instance worked by hand: x0 and x0 ^ x1 agree at (a, b) when
    // a <= b; the witness re-expands the sorted point
    let alpha = CubeMorphism::new(2, 1, vec![normalize(&parse("x0")?, 2)?])?;
    let beta = CubeMorphism::new(2, 1, vec![normalize(&parse("x0 ^ x1")?, 2)?])?;
    let instance = FlatnessInstance {
        alpha: alpha.clone(),
        beta: beta.clone(),
        point: vec![1, 2],
    };
    let witness = linear_order_witness(&chain, &instance)?;
    println!("instance: alpha = {alpha}");
    println!("          beta  = {beta}");
    println!("          point = (c1, c2)");
    println!("witness:  gamma = {}", witness.gamma);
    println!(
        "          lift  = ({})",
        witness
            .lift
            .iter()
            .map(|&i| chain.name(i))
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!(
        "          alpha . gamma = {}",
        alpha.compose(&witness.gamma)?
    );
    println!(
        "          beta  . gamma = {}",
        beta.compose(&witness.gamma)?
    );
    Ok(())
}
