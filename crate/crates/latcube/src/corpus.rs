//! A small corpus of standard cubical sets used by the tests, the examples
//! and the CLI builtins.

use std::collections::BTreeMap;

use crate::cset::{CubicalSet, Presentation};
use crate::cube::End;
use crate::error::{Error, Result};

/// One vertex and nothing else (the terminal object).
pub fn point(max_dim: usize) -> Result<CubicalSet> {
    CubicalSet::from_presentation(&Presentation::new(max_dim).cell("pt", 0))
}

/// Two endpoints joined by one edge.
pub fn interval(max_dim: usize) -> Result<CubicalSet> {
    let p = Presentation::new(max_dim)
        .cell("v0", 0)
        .cell("v1", 0)
        .cell("e", 1)
        .face("e", 0, End::Bot, "v0")
        .face("e", 0, End::Top, "v1");
    CubicalSet::from_presentation(&p)
}

/// One vertex, one loop.
pub fn circle(max_dim: usize) -> Result<CubicalSet> {
    let p = Presentation::new(max_dim)
        .cell("v", 0)
        .cell("e", 1)
        .face("e", 0, End::Bot, "v")
        .face("e", 0, End::Top, "v");
    CubicalSet::from_presentation(&p)
}

/// A filled square: four vertices, four edges, one 2-cell.
pub fn square(max_dim: usize) -> Result<CubicalSet> {
    let p = Presentation::new(max_dim)
        .cell("v00", 0)
        .cell("v10", 0)
        .cell("v01", 0)
        .cell("v11", 0)
        .cell("b", 1)
        .cell("t", 1)
        .cell("l", 1)
        .cell("r", 1)
        .cell("s", 2)
        .face("b", 0, End::Bot, "v00")
        .face("b", 0, End::Top, "v10")
        .face("t", 0, End::Bot, "v01")
        .face("t", 0, End::Top, "v11")
        .face("l", 0, End::Bot, "v00")
        .face("l", 0, End::Top, "v01")
        .face("r", 0, End::Bot, "v10")
        .face("r", 0, End::Top, "v11")
        // coordinate 0 runs left to right, coordinate 1 bottom to top
        .face("s", 0, End::Bot, "l")
        .face("s", 0, End::Top, "r")
        .face("s", 1, End::Bot, "b")
        .face("s", 1, End::Top, "t");
    CubicalSet::from_presentation(&p)
}

/// The boundary of the square: four vertices, four edges.
pub fn square_boundary(max_dim: usize) -> Result<CubicalSet> {
    let p = Presentation::new(max_dim)
        .cell("v00", 0)
        .cell("v10", 0)
        .cell("v01", 0)
        .cell("v11", 0)
        .cell("b", 1)
        .cell("t", 1)
        .cell("l", 1)
        .cell("r", 1)
        .face("b", 0, End::Bot, "v00")
        .face("b", 0, End::Top, "v10")
        .face("t", 0, End::Bot, "v01")
        .face("t", 0, End::Top, "v11")
        .face("l", 0, End::Bot, "v00")
        .face("l", 0, End::Top, "v01")
        .face("r", 0, End::Bot, "v10")
        .face("r", 0, End::Top, "v11");
    CubicalSet::from_presentation(&p)
}

/// One vertex, two loops, one square with opposite sides identified.
pub fn torus(max_dim: usize) -> Result<CubicalSet> {
    let p = Presentation::new(max_dim)
        .cell("v", 0)
        .cell("a", 1)
        .cell("b", 1)
        .cell("s", 2)
        .face("a", 0, End::Bot, "v")
        .face("a", 0, End::Top, "v")
        .face("b", 0, End::Bot, "v")
        .face("b", 0, End::Top, "v")
        .face("s", 0, End::Bot, "a")
        .face("s", 0, End::Top, "a")
        .face("s", 1, End::Bot, "b")
        .face("s", 1, End::Top, "b");
    CubicalSet::from_presentation(&p)
}

fn vertex_id(bits: [usize; 3]) -> String {
    format!("v{}{}{}", bits[0], bits[1], bits[2])
}

fn edge_id(axis: usize, fixed: [(usize, usize); 2]) -> String {
    // fixed lists (axis, value) for the two other axes, ascending
    format!("e{}_{}{}", axis, fixed[0].1, fixed[1].1)
}

/// The boundary of the 3-cube: 8 vertices, 12 edges, 6 squares.
pub fn cube_boundary(max_dim: usize) -> Result<CubicalSet> {
    let mut p = Presentation::new(max_dim);
    for bits0 in 0..2usize {
        for bits1 in 0..2usize {
            for bits2 in 0..2usize {
                p = p.cell(&vertex_id([bits0, bits1, bits2]), 0);
            }
        }
    }
    // edges along `axis`, the other two axes fixed
    for axis in 0..3usize {
        let others: Vec<usize> = (0..3).filter(|&a| a != axis).collect();
        for c0 in 0..2usize {
            for c1 in 0..2usize {
                let id = edge_id(axis, [(others[0], c0), (others[1], c1)]);
                p = p.cell(&id, 1);
                let mut bits = [0usize; 3];
                bits[others[0]] = c0;
                bits[others[1]] = c1;
                bits[axis] = 0;
                let src = vertex_id(bits);
                bits[axis] = 1;
                let dst = vertex_id(bits);
                p = p.face(&id, 0, End::Bot, &src).face(&id, 0, End::Top, &dst);
            }
        }
    }
    // squares with `fixed_axis` held at `eps`, spanned by the other axes
    for fixed_axis in 0..3usize {
        let span: Vec<usize> = (0..3).filter(|&a| a != fixed_axis).collect();
        for eps in 0..2usize {
            let id = format!("f{fixed_axis}{eps}");
            p = p.cell(&id, 2);
            // intrinsic coordinate k of the square runs along span[k];
            // its (k, end) face is the edge along the other span axis
            for (k, &axis_k) in span.iter().enumerate() {
                let other = span[1 - k];
                for (end, value) in [(End::Bot, 0usize), (End::Top, 1usize)] {
                    // the edge along `other` with fixed_axis=eps, axis_k=value
                    let mut fixed: Vec<(usize, usize)> = vec![(fixed_axis, eps), (axis_k, value)];
                    fixed.sort();
                    let edge = edge_id(other, [fixed[0], fixed[1]]);
                    p = p.face(&id, k, end, &edge);
                }
            }
        }
    }
    CubicalSet::from_presentation(&p)
}

/// A path graph with `edges` composable edges: vertices w0..w{edges}.
pub fn chain_graph(edges: usize, max_dim: usize) -> Result<CubicalSet> {
    let mut p = Presentation::new(max_dim);
    for v in 0..=edges {
        p = p.cell(&format!("w{v}"), 0);
    }
    for e in 1..=edges {
        let id = format!("g{e}");
        p = p
            .cell(&id, 1)
            .face(&id, 0, End::Bot, &format!("w{}", e - 1))
            .face(&id, 0, End::Top, &format!("w{e}"));
    }
    CubicalSet::from_presentation(&p)
}

/// Two vertices with one edge in each direction, carrying the De Morgan
/// reversal that swaps them.
pub fn two_cycle_dm(max_dim: usize) -> Result<CubicalSet> {
    let p = Presentation::new(max_dim)
        .cell("u", 0)
        .cell("w", 0)
        .cell("e", 1)
        .cell("f", 1)
        .face("e", 0, End::Bot, "u")
        .face("e", 0, End::Top, "w")
        .face("f", 0, End::Bot, "w")
        .face("f", 0, End::Top, "u");
    let set = CubicalSet::from_presentation(&p)?;
    let mut rev = BTreeMap::new();
    rev.insert("e".to_string(), "f".to_string());
    set.with_reversal(&rev)
}

/// The circle with the reversal fixing its only edge.
pub fn circle_dm(max_dim: usize) -> Result<CubicalSet> {
    let set = circle(max_dim)?;
    let mut rev = BTreeMap::new();
    rev.insert("e".to_string(), "e".to_string());
    set.with_reversal(&rev)
}

/// Look up a builtin cubical set by name.
pub fn builtin(name: &str, max_dim: usize) -> Result<CubicalSet> {
    match name {
        "point" => point(max_dim),
        "interval" => interval(max_dim),
        "circle" => circle(max_dim),
        "square" => square(max_dim),
        "square-boundary" => square_boundary(max_dim),
        "torus" => torus(max_dim),
        "cube-boundary" => cube_boundary(max_dim),
        "chain3" => chain_graph(3, max_dim),
        "two-cycle" => two_cycle_dm(max_dim),
        "y1" => CubicalSet::representable(1, max_dim),
        "y2" => CubicalSet::representable(2, max_dim),
        "y3" => CubicalSet::representable(3, max_dim),
        other => Err(Error::input(format!(
            "unknown builtin cubical set {other:?}; known: point, interval, circle, square, \
             square-boundary, torus, cube-boundary, chain3, two-cycle, y1, y2, y3"
        ))),
    }
}

/// The natural truncation level of a builtin (where its geometry lives).
pub fn default_dim(name: &str) -> usize {
    match name {
        "square" | "torus" | "cube-boundary" | "y2" => 2,
        "y3" => 3,
        _ => 1,
    }
}

pub const BUILTIN_NAMES: &[&str] = &[
    "point",
    "interval",
    "circle",
    "square",
    "square-boundary",
    "torus",
    "cube-boundary",
    "chain3",
    "two-cycle",
    "y1",
    "y2",
    "y3",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_presentations_build_and_are_functorial() {
        for name in BUILTIN_NAMES {
            let max_dim = match *name {
                "y3" => 3,
                "point" | "interval" | "circle" | "chain3" | "two-cycle" | "square-boundary" => 1,
                _ => 2,
            };
            let set = builtin(name, max_dim).unwrap();
            set.verify_functoriality().unwrap();
        }
    }

    #[test]
    fn torus_counts() {
        let t = torus(2).unwrap();
        assert_eq!(t.cell_count(0), 1);
        assert_eq!(t.nondegenerate_cells(1).len(), 3); // a, b and the pulled-back diagonal
        assert_eq!(t.cell_count(1), 4);
    }

    #[test]
    fn cube_boundary_counts() {
        let c = cube_boundary(2).unwrap();
        assert_eq!(c.cell_count(0), 8);
        // 12 edges, 6 face diagonals, 8 degenerate vertices
        let nd1 = c.nondegenerate_cells(1).len();
        assert_eq!(nd1, 18);
        assert_eq!(c.cell_count(1), 26);
    }

    #[test]
    fn chain_graph_counts() {
        let g = chain_graph(3, 1).unwrap();
        assert_eq!(g.cell_count(0), 4);
        assert_eq!(g.nondegenerate_cells(1).len(), 3);
    }

    #[test]
    fn unknown_builtin_is_an_input_error() {
        assert!(builtin("klein-bottle", 2).is_err());
    }
}
