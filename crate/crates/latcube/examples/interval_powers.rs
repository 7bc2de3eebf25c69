//! Representable cubical sets are powers of the interval: the cells of the
//! representable on n at level m are exactly the n-tuples of free-lattice
//! elements on m generators, compatibly with every generating morphism.
//!
//! ```bash
//! cargo run --example interval_powers
//! ```

use latcube::cset::{yoneda_is_interval_power, CubicalSet};

fn main() -> latcube::Result<()> {
    let interval = CubicalSet::representable(1, 2)?;
    println!("the interval, truncated at level 2:");
    for m in 0..=2 {
        println!(
            "  level {m}: cells {:?}",
            interval.cells(m).iter().collect::<Vec<_>>()
        );
    }
    println!();
    for n in 0..=2usize {
        let report = yoneda_is_interval_power(n, 2)?;
        println!(
            "representable on {n}: levels {:?}, {} generator actions checked, compatible = {}",
            report.level_counts, report.generators_checked, report.all_compatible
        );
    }
    // products multiply levelwise: interval squared is the square
    let square = CubicalSet::representable(2, 2)?;
    let product = interval.product(&interval)?;
    println!(
        "interval x interval is the representable square: {}",
        product.isomorphic_to(&square)
    );
    Ok(())
}
