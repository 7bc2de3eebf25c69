//! Parse lattice terms, normalize them to the canonical antichain form,
//! and evaluate them over different value lattices.
//!
//! ```bash
//! cargo run --example normal_forms
//! ```

use latcube::lattice::{normalize, normalize_dm, FiniteLattice, Rational, UnitInterval};
use latcube::term::parse;

fn main() -> latcube::Result<()> {
    // absorption collapses redundant clauses
    let term = parse("x0 v (x0 ^ x1)")?;
    let normal = normalize(&term, 2)?;
    println!("x0 v (x0 ^ x1)      =  {normal}");

    // distribution produces the two-clause normal form
    let term = parse("(x0 v x1) ^ (x0 v x2)")?;
    let normal = normalize(&term, 3)?;
    println!("(x0 v x1)^(x0 v x2) =  {normal}");

    // homomorphic evaluation over the unit interval: meet is min, join max
    let point = [
        Rational::new(1, 5),
        Rational::new(9, 10),
        Rational::new(1, 2),
    ];
    let value = normal.evaluate(&UnitInterval, &point)?;
    println!("  at (1/5, 9/10, 1/2) the value is {value}");

    // and over a finite model
    let chain = FiniteLattice::chain(4)?;
    let value = normal.evaluate(&chain, &[1, 3, 2])?;
    println!(
        "  over the 4-chain at (c1, c3, c2) it is {}",
        chain.name(value)
    );

    // the De Morgan signature adds an involution
    let term = parse("~(x0 v (x1 ^ ~x0))")?;
    let dm = normalize_dm(&term, 2)?;
    println!("~(x0 v (x1 ^ ~x0))  =  {dm}");
    println!("negated twice       =  {}", dm.negate().negate());
    Ok(())
}
