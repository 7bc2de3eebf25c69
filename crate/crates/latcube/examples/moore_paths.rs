//! Moore paths: strictly associative composition with zero-length
//! identities, De Morgan reversal, and the connection staircase that
//! contracts a path onto its target.
//!
//! ```bash
//! cargo run --example moore_paths
//! ```

use latcube::corpus;
use latcube::moore::PathContext;

fn main() -> latcube::Result<()> {
    // a three-edge chain, truncated at level 2 so contraction squares exist
    let graph = corpus::chain_graph(3, 2)?;
    let ctx = PathContext::new(&graph)?;
    let edges: Vec<_> = (1..=3)
        .map(|i| graph.cell_named(1, &format!("g{i}")).unwrap())
        .collect();
    let p = ctx.path(&edges, None)?;
    println!(
        "path of length {} from {} to {}",
        p.len(),
        graph.cell_name(p.source()),
        graph.cell_name(p.target())
    );
    let stairs = ctx.contract_path(&p)?;
    println!("contraction staircase ({} rows):", stairs.rows.len());
    for (k, row) in stairs.rows.iter().enumerate() {
        let cells: Vec<&str> = row.iter().map(|sq| graph.cell_name(sq.cell)).collect();
        println!("  row {}: {}", k + 1, cells.join(" | "));
    }
    println!();

    // reversal needs the De Morgan action; the two-cycle carries one
    let two = corpus::two_cycle_dm(1)?;
    let ctx = PathContext::new(&two)?;
    let e = two.cell_named(1, "e").unwrap();
    let f = two.cell_named(1, "f").unwrap();
    let p = ctx.path(&[e, f, e], None)?;
    let r = ctx.reverse(&p)?;
    println!(
        "reversing e.f.e gives {}: {} -> {}",
        r.edges()
            .iter()
            .map(|&i| two.cells(1)[i].as_str())
            .collect::<Vec<_>>()
            .join("."),
        two.cell_name(r.source()),
        two.cell_name(r.target())
    );
    println!(
        "reversing twice recovers the path: {}",
        ctx.reverse(&r)? == p
    );

    // the terminal cubical set has only the zero-length path
    let terminal = corpus::point(1)?;
    let ctx = PathContext::new(&terminal)?;
    println!(
        "paths of length <= 3 in the terminal cubical set: {}",
        ctx.enumerate_paths(3).len()
    );
    Ok(())
}
