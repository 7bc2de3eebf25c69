//! Moore paths on a truncated cubical set: lists of composable
//! nondegenerate edges with zero-length identities, strictly associative
//! concatenation, De Morgan reversal where the ambient set carries one,
//! and the connection-based contraction that homotopes a path onto the
//! constant path at its target.

use std::fmt;

use crate::cset::{Cell, CubicalSet};
use crate::cube::{self, ConnectionKind, End};
use crate::error::{Error, Result};

/// Path operations over one ambient cubical set, with the face actions
/// cached. The quotient by constant paths is kept in normal form: a
/// degenerate edge never appears in an edge list.
pub struct PathContext<'a> {
    ambient: &'a CubicalSet,
    /// source and target vertex of each level-1 cell
    source: Vec<usize>,
    target: Vec<usize>,
}

/// A Moore path: composable nondegenerate edges, or the zero-length path
/// at a vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MoorePath {
    edges: Vec<usize>,
    source: usize,
    target: usize,
}

impl MoorePath {
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn source(&self) -> Cell {
        Cell {
            dim: 0,
            index: self.source,
        }
    }

    pub fn target(&self) -> Cell {
        Cell {
            dim: 0,
            index: self.target,
        }
    }
}

/// A level-2 cell together with its four boundary edges, each checked
/// against the ambient action tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSquare {
    pub cell: Cell,
    /// face with the second coordinate at its bottom end
    pub bottom: Cell,
    /// face with the second coordinate at its top end
    pub top: Cell,
    /// face with the first coordinate at its bottom end
    pub left: Cell,
    /// face with the first coordinate at its top end
    pub right: Cell,
}

/// The contraction of a path, row by row: row `k` slides the `k`-th edge
/// into the target while the prefix stays constant and the suffix rides
/// along unchanged.
#[derive(Debug, Clone)]
pub struct Staircase {
    pub rows: Vec<Vec<PathSquare>>,
    /// edge lists of the intermediate paths, from the original (index 0)
    /// to the fully constant one; kept raw, including degenerate slots
    pub levels: Vec<Vec<usize>>,
}

impl<'a> PathContext<'a> {
    pub fn new(ambient: &'a CubicalSet) -> Result<Self> {
        if ambient.max_dim() < 1 {
            return Err(Error::input(
                "Moore paths need at least one level of edges".to_string(),
            ));
        }
        let bot = cube::face(1, 0, End::Bot)?;
        let top = cube::face(1, 0, End::Top)?;
        let mut source = Vec::with_capacity(ambient.cell_count(1));
        let mut target = Vec::with_capacity(ambient.cell_count(1));
        for index in 0..ambient.cell_count(1) {
            let edge = Cell { dim: 1, index };
            source.push(ambient.act(&bot, edge)?.index);
            target.push(ambient.act(&top, edge)?.index);
        }
        Ok(PathContext {
            ambient,
            source,
            target,
        })
    }

    pub fn ambient(&self) -> &CubicalSet {
        self.ambient
    }

    pub fn edge_source(&self, edge: Cell) -> Cell {
        Cell {
            dim: 0,
            index: self.source[edge.index],
        }
    }

    pub fn edge_target(&self, edge: Cell) -> Cell {
        Cell {
            dim: 0,
            index: self.target[edge.index],
        }
    }

    /// The zero-length path at a vertex.
    pub fn zero_path(&self, vertex: Cell) -> Result<MoorePath> {
        if vertex.dim != 0 || vertex.index >= self.ambient.cell_count(0) {
            return Err(Error::input(
                "zero-length paths sit at vertices".to_string(),
            ));
        }
        Ok(MoorePath {
            edges: Vec::new(),
            source: vertex.index,
            target: vertex.index,
        })
    }

    /// Build a path from an edge list: degenerate edges are dropped (the
    /// constant-path quotient in normal form) and composability of the
    /// remainder is checked. An empty result needs `at` to anchor the
    /// zero-length path; when edges remain, `at` must agree.
    pub fn path(&self, edges: &[Cell], at: Option<Cell>) -> Result<MoorePath> {
        let mut kept = Vec::new();
        for &edge in edges {
            if edge.dim != 1 || edge.index >= self.ambient.cell_count(1) {
                return Err(Error::input("paths are lists of level-1 cells".to_string()));
            }
            if self.ambient.is_degenerate(edge) {
                continue;
            }
            kept.push(edge.index);
        }
        if kept.is_empty() {
            let anchor = match (at, edges.first()) {
                (Some(v), _) => v,
                // a list of degenerate edges collapses to its source
                (None, Some(&first)) => self.edge_source(first),
                (None, None) => {
                    return Err(Error::input(
                        "an empty path needs a vertex to sit at".to_string(),
                    ))
                }
            };
            return self.zero_path(anchor);
        }
        for pair in kept.windows(2) {
            if self.target[pair[0]] != self.source[pair[1]] {
                return Err(Error::input(format!(
                    "edges {} and {} do not compose",
                    self.ambient.cells(1)[pair[0]],
                    self.ambient.cells(1)[pair[1]]
                )));
            }
        }
        let path = MoorePath {
            source: self.source[kept[0]],
            target: self.target[*kept.last().expect("nonempty")],
            edges: kept,
        };
        if let Some(v) = at {
            if v.index != path.source && v.index != path.target {
                return Err(Error::input(
                    "anchor vertex does not lie on the path".to_string(),
                ));
            }
        }
        Ok(path)
    }

    /// Strictly associative concatenation; zero-length paths are identities.
    pub fn concat(&self, p: &MoorePath, q: &MoorePath) -> Result<MoorePath> {
        if p.target != q.source {
            return Err(Error::input(format!(
                "paths do not compose: target {} differs from source {}",
                self.ambient.cells(0)[p.target],
                self.ambient.cells(0)[q.source]
            )));
        }
        let mut edges = p.edges.clone();
        edges.extend_from_slice(&q.edges);
        Ok(MoorePath {
            edges,
            source: p.source,
            target: q.target,
        })
    }

    /// Reverse a path using the ambient De Morgan reversal: the edge list
    /// is reversed and each edge replaced by its reversal; endpoints swap.
    pub fn reverse(&self, p: &MoorePath) -> Result<MoorePath> {
        if !self.ambient.has_reversal() {
            return Err(Error::UnsupportedTheory(
                "reversal needs an ambient De Morgan action".to_string(),
            ));
        }
        let mut edges = Vec::with_capacity(p.edges.len());
        for &e in p.edges.iter().rev() {
            let r = self.ambient.reverse_edge(Cell { dim: 1, index: e })?;
            edges.push(r.index);
        }
        Ok(MoorePath {
            edges,
            source: p.target,
            target: p.source,
        })
    }

    /// The square obtained by acting with the join connection on an edge:
    /// its bottom and left faces are the edge itself, its top and right
    /// faces the degenerate path at the edge's target.
    pub fn contract_edge(&self, edge: Cell) -> Result<PathSquare> {
        if self.ambient.max_dim() < 2 {
            return Err(Error::capacity(
                "contraction squares need truncation level at least 2".to_string(),
            ));
        }
        if edge.dim != 1 {
            return Err(Error::input("only edges contract to squares".to_string()));
        }
        let join = cube::connection(1, 0, 1, ConnectionKind::Join)?;
        let cell = self.ambient.act(&join, edge)?;
        self.square(cell)
    }

    /// Package a level-2 cell with its four faces.
    pub fn square(&self, cell: Cell) -> Result<PathSquare> {
        if cell.dim != 2 {
            return Err(Error::input("a path square is a level-2 cell".to_string()));
        }
        let face = |axis: usize, end: End| -> Result<Cell> {
            self.ambient.act(&cube::face(2, axis, end)?, cell)
        };
        Ok(PathSquare {
            cell,
            left: face(0, End::Bot)?,
            right: face(0, End::Top)?,
            bottom: face(1, End::Bot)?,
            top: face(1, End::Top)?,
        })
    }

    /// Degenerate square riding an edge along the first axis (the edge
    /// varies vertically, the horizontal direction is constant).
    fn vertical_square(&self, edge: Cell) -> Result<PathSquare> {
        let eps = cube::degeneracy(1, 0)?;
        self.square(self.ambient.act(&eps, edge)?)
    }

    /// Degenerate square riding an edge along the second axis.
    fn horizontal_square(&self, edge: Cell) -> Result<PathSquare> {
        let eps = cube::degeneracy(1, 1)?;
        self.square(self.ambient.act(&eps, edge)?)
    }

    fn degenerate_edge_at(&self, vertex: usize) -> Result<Cell> {
        let eps = cube::degeneracy(0, 0)?;
        self.ambient.act(
            &eps,
            Cell {
                dim: 0,
                index: vertex,
            },
        )
    }

    /// The full contraction staircase: row `k` (1-based) consists of
    /// vertically degenerate squares on the already-contracted prefix,
    /// the connection square of edge `k` on the diagonal, and horizontally
    /// degenerate squares on the untouched suffix. Row bottoms and tops
    /// agree with the intermediate paths, and horizontally adjacent
    /// squares share their vertical faces.
    pub fn contract_path(&self, p: &MoorePath) -> Result<Staircase> {
        if self.ambient.max_dim() < 2 {
            return Err(Error::capacity(
                "contraction squares need truncation level at least 2".to_string(),
            ));
        }
        let length = p.len();
        let mut levels = Vec::with_capacity(length + 1);
        for k in 0..=length {
            // path after k steps: the first k slots constant at vertex k,
            // the rest the original edges
            let mut level = Vec::with_capacity(length);
            let vertex_k = if k == 0 {
                p.source
            } else {
                self.target[p.edges[k - 1]]
            };
            for j in 0..length {
                if j < k {
                    level.push(self.degenerate_edge_at(vertex_k)?.index);
                } else {
                    level.push(p.edges[j]);
                }
            }
            levels.push(level);
        }
        let mut rows = Vec::with_capacity(length);
        for k in 1..=length {
            let edge_k = Cell {
                dim: 1,
                index: p.edges[k - 1],
            };
            let mut row = Vec::with_capacity(length);
            for _ in 1..k {
                row.push(self.vertical_square(edge_k)?);
            }
            row.push(self.contract_edge(edge_k)?);
            for j in (k + 1)..=length {
                row.push(self.horizontal_square(Cell {
                    dim: 1,
                    index: p.edges[j - 1],
                })?);
            }
            rows.push(row);
        }
        let staircase = Staircase { rows, levels };
        self.validate_staircase(p, &staircase)?;
        Ok(staircase)
    }

    /// Machine check of the staircase incidences.
    fn validate_staircase(&self, p: &MoorePath, staircase: &Staircase) -> Result<()> {
        let length = p.len();
        for (k, row) in staircase.rows.iter().enumerate() {
            let below = &staircase.levels[k];
            let above = &staircase.levels[k + 1];
            if row.len() != length {
                return Err(Error::input(
                    "staircase row has the wrong width".to_string(),
                ));
            }
            for (j, square) in row.iter().enumerate() {
                if square.bottom.index != below[j] {
                    return Err(Error::input(format!(
                        "row {} square {} bottom face mismatch",
                        k + 1,
                        j + 1
                    )));
                }
                if square.top.index != above[j] {
                    return Err(Error::input(format!(
                        "row {} square {} top face mismatch",
                        k + 1,
                        j + 1
                    )));
                }
            }
            for j in 1..row.len() {
                if row[j - 1].right != row[j].left {
                    return Err(Error::input(format!(
                        "row {} squares {} and {} do not share a vertical face",
                        k + 1,
                        j,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// All paths of length at most `max_len`, in deterministic order.
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<MoorePath> {
        let mut out: Vec<MoorePath> = Vec::new();
        for v in 0..self.ambient.cell_count(0) {
            out.push(MoorePath {
                edges: Vec::new(),
                source: v,
                target: v,
            });
        }
        let nondegenerate: Vec<usize> = (0..self.ambient.cell_count(1))
            .filter(|&i| !self.ambient.is_degenerate(Cell { dim: 1, index: i }))
            .collect();
        let mut frontier: Vec<MoorePath> = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for &e in &nondegenerate {
                    if self.source[e] == p.target {
                        let mut edges = p.edges.clone();
                        edges.push(e);
                        next.push(MoorePath {
                            edges,
                            source: p.source,
                            target: self.target[e],
                        });
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

impl fmt::Display for MoorePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "path(len {})", self.edges.len())
    }
}
