//! The cube category: morphisms are tuples of lattice terms composed by
//! substitution, and their normal forms decide equality. Composition
//! agrees exactly with min/max arithmetic on the unit cube.
//!
//! ```bash
//! cargo run --example cube_category
//! ```

use latcube::cube::{
    connection, diagonal, face, hom_count, symmetry, ConnectionKind, CubeMorphism, End,
};
use latcube::lattice::{Rational, UnitInterval};

fn main() -> latcube::Result<()> {
    let conn = connection(1, 0, 1, ConnectionKind::Join)?;
    let diag = diagonal(1, 0, 1)?;
    println!("join connection: {conn}");
    println!("diagonal:        {diag}");
    println!("their composite: {}", conn.compose(&diag)?);

    let top_face = face(1, 0, End::Top)?;
    println!("top face:        {top_face}");
    println!(
        "connection after top face collapses: {}",
        conn.compose(&face(2, 1, End::Top)?)?
    );

    let swap = symmetry(2, &[1, 0])?;
    println!("swap twice:      {}", swap.compose(&swap)?);

    for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        println!("|hom({m}, {n})| = {}", hom_count(m, n)?);
    }

    // pointwise semantics: evaluating the composite equals evaluating in
    // stages, exactly over rationals
    let f = CubeMorphism::new(
        1,
        2,
        vec![
            latcube::lattice::normalize(&latcube::term::parse("x0")?, 1)?,
            latcube::lattice::normalize(&latcube::term::parse("1")?, 1)?,
        ],
    )?;
    let g = conn.clone();
    let p = vec![Rational::new(1, 3)];
    let staged = g.evaluate(&UnitInterval, &f.evaluate(&UnitInterval, &p)?)?;
    let direct = g.compose(&f)?.evaluate(&UnitInterval, &p)?;
    println!(
        "staged {staged:?} equals direct {direct:?}: {}",
        staged == direct
    );
    Ok(())
}
