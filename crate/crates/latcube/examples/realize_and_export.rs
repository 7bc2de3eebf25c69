//! Triangulate and numerically realize the corpus shapes, compare their
//! characteristics, and export a mesh.
//!
//! ```bash
//! cargo run --example realize_and_export
//! ```

use latcube::corpus;
use latcube::realization::{export_mesh, realize_numeric, triangulate, MeshFormat};

fn main() -> latcube::Result<()> {
    let shapes = [
        ("circle", corpus::circle(1)?),
        ("torus", corpus::torus(2)?),
        ("cube boundary", corpus::cube_boundary(2)?),
    ];
    for (name, set) in &shapes {
        let complex = triangulate(set)?;
        let mesh = realize_numeric(set, 3)?;
        println!(
            "{name:>13}: simplices per dim {:?}, top {}, chi = {} (mesh agrees: {})",
            complex.counts_per_dim(),
            complex.top_simplex_count(),
            complex.euler_characteristic(),
            complex.euler_characteristic() == mesh.euler_characteristic()
        );
    }
    println!();
    let mesh = realize_numeric(&corpus::torus(2)?, 3)?;
    println!(
        "torus mesh at 3 samples per axis: {} points, {} triangles",
        mesh.points.len(),
        mesh.triangles.len()
    );
    let off = export_mesh(&mesh, MeshFormat::Off)?;
    println!("--- OFF ---");
    print!("{off}");
    Ok(())
}
