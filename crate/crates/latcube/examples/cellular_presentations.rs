//! Build truncated cubical sets from cellular presentations: generating
//! cells with face identifications, closed up under the full action.
//!
//! ```bash
//! cargo run --example cellular_presentations
//! ```

use latcube::cset::{CubicalSet, Presentation};
use latcube::cube::End;

fn main() -> latcube::Result<()> {
    // the circle: one vertex, one loop
    let circle = CubicalSet::from_presentation(
        &Presentation::new(1)
            .cell("v", 0)
            .cell("e", 1)
            .face("e", 0, End::Bot, "v")
            .face("e", 0, End::Top, "v"),
    )?;
    println!("circle:\n{circle}");

    // the torus: one vertex, two loops, one square with opposite sides glued
    let torus = latcube::corpus::torus(2)?;
    println!("torus:\n{torus}");
    println!("torus level-1 cells: {:?}", torus.cells(1));

    // functoriality of the closure action is checkable directly
    torus.verify_functoriality()?;
    println!("torus action verified functorial");

    // re-presenting the closure reproduces the same cubical set
    let again = CubicalSet::from_presentation(&torus.to_presentation()?)?;
    println!(
        "re-presented torus is isomorphic: {}",
        torus.isomorphic_to(&again)
    );
    Ok(())
}
