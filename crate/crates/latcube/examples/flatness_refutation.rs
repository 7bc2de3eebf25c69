//! The four-element Boolean lattice is not flat: joins can reach the top
//! without either side being top, and no substitution repairs that.
//!
//! ```bash
//! cargo run --example flatness_refutation
//! ```

use latcube::flatness::{
    check_disjunction_property, check_flatness_bounded, Bounds, DisjunctionOutcome, FlatnessOutcome,
};
use latcube::lattice::FiniteLattice;

fn main() -> latcube::Result<()> {
    let b = FiniteLattice::boolean(2)?;
    match check_disjunction_property(&b) {
        DisjunctionOutcome::Counterexample { a, b: bb } => {
            println!(
                "disjunction property fails: {} v {} = 1 with neither side 1",
                b.name(a),
                b.name(bb)
            );
        }
        DisjunctionOutcome::Pass => println!("disjunction property holds"),
    }
    match check_flatness_bounded(&b, Bounds::new(1, 2, 2))? {
        FlatnessOutcome::Refuted { counterexample, .. } => {
            println!("flatness refuted:");
            println!("  alpha = {}", counterexample.alpha);
            println!("  beta  = {}", counterexample.beta);
            println!(
                "  point = ({})",
                counterexample
                    .point
                    .iter()
                    .map(|&i| b.name(i))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!("  no witness exists within the searched bounds");
        }
        FlatnessOutcome::FlatUpToBounds { .. } => println!("unexpectedly flat"),
    }
    Ok(())
}
