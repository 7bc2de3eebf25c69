//! Dimension-truncated cubical sets: presheaves on the cube category with
//! finite cell sets per level.
//!
//! Every construction here is backed by a free cellular closure. A
//! presentation lists generating cells with optional face identifications;
//! the closure realizes a cell at level `m` as an equivalence class of
//! pairs `(g, phi)` where `g` is a generating cell and `phi : m -> dim g`
//! a cube morphism, two pairs being identified when a declared face or
//! degeneracy relation forces it. The action of a morphism `f : m -> n`
//! sends the class of `(g, phi)` to the class of `(g, phi . f)`, so
//! functoriality holds by construction. Representables are the special
//! case of a single generator with no relations, and the terminal object
//! is the closure of a single vertex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cube::{self, CubeMorphism, End};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::util::UnionFind;

/// Hard cap on truncation level.
pub const MAX_TRUNCATION: usize = 3;

/// Default cap on the total number of closure tokens.
pub const DEFAULT_CELL_BUDGET: usize = 200_000;

/// A handle to a cell: its dimension and index within that level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub dim: usize,
    pub index: usize,
}

/// A face value in a presentation: either a plain generating cell one
/// dimension down, or a formal composite `X(via)(cell)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceValue {
    Cell(String),
    Composite { cell: String, via: CubeMorphism },
}

/// A cellular presentation: generating cells with dimensions, face
/// identifications, and optional aliases declaring a generator to be a
/// formal composite (used for explicitly listed degenerate cells).
#[derive(Debug, Clone, Default)]
pub struct Presentation {
    pub max_dim: usize,
    /// (name, dimension) of each generating cell.
    pub cells: Vec<(String, usize)>,
    /// (cell, axis, end) -> face value.
    pub faces: BTreeMap<(String, usize, End), FaceValue>,
    /// (cell, target, via): the cell equals `X(via)(target)`.
    pub aliases: Vec<(String, String, CubeMorphism)>,
    /// General identifications `X(alpha)(left) = X(alpha_r)(right)`;
    /// faces and aliases are special cases. Used when a closure is
    /// re-presented with its full incidence structure.
    pub relations: Vec<(String, CubeMorphism, String, CubeMorphism)>,
    pub cell_budget: Option<usize>,
}

impl Presentation {
    pub fn new(max_dim: usize) -> Self {
        Presentation {
            max_dim,
            ..Default::default()
        }
    }

    pub fn cell(mut self, name: &str, dim: usize) -> Self {
        self.cells.push((name.to_string(), dim));
        self
    }

    pub fn face(mut self, cell: &str, axis: usize, end: End, target: &str) -> Self {
        self.faces.insert(
            (cell.to_string(), axis, end),
            FaceValue::Cell(target.to_string()),
        );
        self
    }

    pub fn face_composite(
        mut self,
        cell: &str,
        axis: usize,
        end: End,
        target: &str,
        via: CubeMorphism,
    ) -> Self {
        self.faces.insert(
            (cell.to_string(), axis, end),
            FaceValue::Composite {
                cell: target.to_string(),
                via,
            },
        );
        self
    }

    pub fn alias(mut self, cell: &str, target: &str, via: CubeMorphism) -> Self {
        self.aliases
            .push((cell.to_string(), target.to_string(), via));
        self
    }

    pub fn relation(
        mut self,
        left: &str,
        alpha: CubeMorphism,
        right: &str,
        alpha_r: CubeMorphism,
    ) -> Self {
        self.relations
            .push((left.to_string(), alpha, right.to_string(), alpha_r));
        self
    }
}

/// Token: a generating cell pulled back along a morphism.
type Token = (usize, CubeMorphism);

#[derive(Debug, Clone)]
struct FreeData {
    /// per level: token -> class index
    class_of: Vec<BTreeMap<Token, usize>>,
    /// per level, per class: the least token
    repr: Vec<Vec<Token>>,
    /// per level, per class: whether the class contains the identity token
    /// of some generating cell
    presented: Vec<Vec<bool>>,
}

#[derive(Debug, Clone)]
enum Backend {
    Free(FreeData),
    Product {
        left: Box<CubicalSet>,
        right: Box<CubicalSet>,
        pairs: Vec<Vec<(usize, usize)>>,
        pair_index: Vec<BTreeMap<(usize, usize), usize>>,
    },
}

/// A truncated cubical set with named cells and a computable action.
#[derive(Debug, Clone)]
pub struct CubicalSet {
    max_dim: usize,
    names: Vec<Vec<String>>,
    degenerate: Vec<Vec<bool>>,
    backend: Backend,
    /// Level-1 action of the De Morgan reversion, when the set carries it.
    reversal: Option<Vec<usize>>,
}

fn check_truncation(max_dim: usize) -> Result<()> {
    if max_dim > MAX_TRUNCATION {
        return Err(Error::capacity(format!(
            "truncation level {max_dim} exceeds the cap of {MAX_TRUNCATION}"
        )));
    }
    Ok(())
}

impl CubicalSet {
    /// The representable cubical set on `n`, truncated at `max_dim`. For
    /// `n = 1` this is the interval, whose level `m` is the free lattice
    /// on `m` generators.
    pub fn representable(n: usize, max_dim: usize) -> Result<Self> {
        if n > max_dim {
            return Err(Error::input(format!(
                "representable dimension {n} exceeds truncation {max_dim}"
            )));
        }
        let p = Presentation::new(max_dim).cell(&format!("y{n}"), n);
        Self::from_presentation(&p)
    }

    /// One cell per level: the terminal cubical set.
    pub fn terminal(max_dim: usize) -> Result<Self> {
        Self::from_presentation(&Presentation::new(max_dim).cell("pt", 0))
    }

    /// Build the free closure of a presentation.
    pub fn from_presentation(p: &Presentation) -> Result<Self> {
        check_truncation(p.max_dim)?;
        let budget = p.cell_budget.unwrap_or(DEFAULT_CELL_BUDGET);
        let mut seen = BTreeSet::new();
        for (name, dim) in &p.cells {
            if name.contains('[') || name.contains(']') || name.contains(',') {
                return Err(Error::input(format!(
                    "cell name {name:?} may not contain '[', ']' or ','"
                )));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::input(format!("duplicate cell name {name:?}")));
            }
            if *dim > p.max_dim {
                return Err(Error::input(format!(
                    "cell {name:?} has dimension {dim} beyond truncation {}",
                    p.max_dim
                )));
            }
        }
        let gen_index: BTreeMap<&str, usize> = p
            .cells
            .iter()
            .enumerate()
            .map(|(i, (name, _))| (name.as_str(), i))
            .collect();

        // collect the pair relations (gL, alpha) ~ (gR, alpha')
        let mut relations: Vec<(usize, CubeMorphism, usize, CubeMorphism)> = Vec::new();
        for ((cell, axis, end), value) in &p.faces {
            let gl = *gen_index
                .get(cell.as_str())
                .ok_or_else(|| Error::input(format!("face declared on unknown cell {cell:?}")))?;
            let d = p.cells[gl].1;
            if d == 0 {
                return Err(Error::input(format!("vertex {cell:?} cannot have faces")));
            }
            if *axis >= d {
                return Err(Error::input(format!(
                    "face axis {axis} out of range for {d}-cell {cell:?}"
                )));
            }
            let alpha = cube::face(d, *axis, *end)?;
            let (gr, alpha_r) = match value {
                FaceValue::Cell(target) => {
                    let gr = *gen_index.get(target.as_str()).ok_or_else(|| {
                        Error::input(format!(
                            "face of {cell:?} references unknown cell {target:?}"
                        ))
                    })?;
                    if p.cells[gr].1 + 1 != d {
                        return Err(Error::input(format!(
                            "face of {d}-cell {cell:?} must be a {}-cell, but {target:?} has dimension {}",
                            d - 1,
                            p.cells[gr].1
                        )));
                    }
                    (gr, CubeMorphism::identity(d - 1))
                }
                FaceValue::Composite { cell: target, via } => {
                    let gr = *gen_index.get(target.as_str()).ok_or_else(|| {
                        Error::input(format!(
                            "face of {cell:?} references unknown cell {target:?}"
                        ))
                    })?;
                    if via.src() != d - 1 || via.dst() != p.cells[gr].1 {
                        return Err(Error::input(format!(
                            "face composite for {cell:?} must be a morphism {} -> {}",
                            d - 1,
                            p.cells[gr].1
                        )));
                    }
                    (gr, via.clone())
                }
            };
            relations.push((gl, alpha, gr, alpha_r));
        }
        for (cell, target, via) in &p.aliases {
            let gl = *gen_index
                .get(cell.as_str())
                .ok_or_else(|| Error::input(format!("alias on unknown cell {cell:?}")))?;
            let gr = *gen_index
                .get(target.as_str())
                .ok_or_else(|| Error::input(format!("alias references unknown cell {target:?}")))?;
            let d = p.cells[gl].1;
            if via.src() != d || via.dst() != p.cells[gr].1 {
                return Err(Error::input(format!(
                    "alias for {cell:?} must be a morphism {} -> {}",
                    d, p.cells[gr].1
                )));
            }
            relations.push((gl, CubeMorphism::identity(d), gr, via.clone()));
        }
        for (left, alpha, right, alpha_r) in &p.relations {
            let gl = *gen_index
                .get(left.as_str())
                .ok_or_else(|| Error::input(format!("relation on unknown cell {left:?}")))?;
            let gr = *gen_index
                .get(right.as_str())
                .ok_or_else(|| Error::input(format!("relation on unknown cell {right:?}")))?;
            if alpha.dst() != p.cells[gl].1
                || alpha_r.dst() != p.cells[gr].1
                || alpha.src() != alpha_r.src()
            {
                return Err(Error::input(format!(
                    "relation between {left:?} and {right:?} has mismatched dimensions"
                )));
            }
            relations.push((gl, alpha.clone(), gr, alpha_r.clone()));
        }

        // budget check before enumerating
        let mut total_tokens = 0usize;
        for m in 0..=p.max_dim {
            for (_, d) in &p.cells {
                total_tokens += cube::hom_count(m, *d)?;
            }
        }
        if total_tokens > budget {
            return Err(Error::capacity(format!(
                "presentation closure needs {total_tokens} tokens, budget is {budget}"
            )));
        }

        let mut hom_cache: BTreeMap<(usize, usize), Vec<CubeMorphism>> = BTreeMap::new();
        let mut homs = |m: usize, d: usize| -> Vec<CubeMorphism> {
            hom_cache
                .entry((m, d))
                .or_insert_with(|| cube::enumerate_hom(m, d).expect("within caps"))
                .clone()
        };

        let mut class_of: Vec<BTreeMap<Token, usize>> = Vec::new();
        let mut repr: Vec<Vec<Token>> = Vec::new();
        let mut names: Vec<Vec<String>> = Vec::new();
        let mut presented: Vec<Vec<bool>> = Vec::new();
        for m in 0..=p.max_dim {
            // enumerate tokens at this level in canonical order
            let mut tokens: Vec<Token> = Vec::new();
            for (g, (_, d)) in p.cells.iter().enumerate() {
                for phi in homs(m, *d) {
                    tokens.push((g, phi));
                }
            }
            let token_id: BTreeMap<Token, usize> = tokens
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, t)| (t, i))
                .collect();
            let mut uf = UnionFind::new(tokens.len());
            for (gl, alpha, gr, alpha_r) in &relations {
                for f in homs(m, alpha.src()) {
                    let left = (*gl, alpha.compose(&f)?);
                    let right = (*gr, alpha_r.compose(&f)?);
                    uf.union(token_id[&left], token_id[&right]);
                }
            }
            let (class, count) = uf.classes();
            // representative = least token of the class; tokens are already
            // in canonical order, so the first occurrence wins
            let mut reps: Vec<Option<Token>> = vec![None; count];
            let mut identity_name: Vec<Option<&str>> = vec![None; count];
            for (i, tok) in tokens.iter().enumerate() {
                let c = class[i];
                if reps[c].is_none() {
                    reps[c] = Some(tok.clone());
                }
                let (g, phi) = tok;
                if p.cells[*g].1 == m && *phi == CubeMorphism::identity(m) {
                    if let Some(prev) = identity_name[c] {
                        return Err(Error::Presentation(format!(
                            "face identities force cells {prev:?} and {:?} (dimension {m}) to coincide",
                            p.cells[*g].0
                        )));
                    }
                    identity_name[c] = Some(&p.cells[*g].0);
                }
            }
            let mut level_names = Vec::with_capacity(count);
            for c in 0..count {
                let name = match identity_name[c] {
                    Some(n) => n.to_string(),
                    None => {
                        let (g, phi) = reps[c].as_ref().expect("every class has a representative");
                        let comps: Vec<String> =
                            phi.components().iter().map(|e| e.to_string()).collect();
                        format!("{}[{}]", p.cells[*g].0, comps.join(","))
                    }
                };
                level_names.push(name);
            }
            class_of.push(
                tokens
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, t)| (t, class[i]))
                    .collect(),
            );
            repr.push(
                reps.into_iter()
                    .map(|t| t.expect("nonempty class"))
                    .collect(),
            );
            presented.push(identity_name.iter().map(|n| n.is_some()).collect());
            names.push(level_names);
        }

        let mut set = CubicalSet {
            max_dim: p.max_dim,
            names,
            degenerate: Vec::new(),
            backend: Backend::Free(FreeData {
                class_of,
                repr,
                presented,
            }),
            reversal: None,
        };
        set.compute_degeneracies()?;
        Ok(set)
    }

    /// Levelwise product with the diagonal action.
    pub fn product(&self, other: &CubicalSet) -> Result<CubicalSet> {
        if self.max_dim != other.max_dim {
            return Err(Error::input(format!(
                "product requires equal truncation levels ({} vs {})",
                self.max_dim, other.max_dim
            )));
        }
        let mut pairs = Vec::new();
        let mut pair_index = Vec::new();
        let mut names = Vec::new();
        let mut total = 0usize;
        for m in 0..=self.max_dim {
            let mut level_pairs = Vec::new();
            let mut level_index = BTreeMap::new();
            let mut level_names = Vec::new();
            for a in 0..self.cell_count(m) {
                for b in 0..other.cell_count(m) {
                    level_index.insert((a, b), level_pairs.len());
                    level_pairs.push((a, b));
                    level_names.push(format!("({},{})", self.names[m][a], other.names[m][b]));
                }
            }
            total += level_pairs.len();
            pairs.push(level_pairs);
            pair_index.push(level_index);
            names.push(level_names);
        }
        if total > DEFAULT_CELL_BUDGET {
            return Err(Error::capacity(format!(
                "product has {total} cells, budget is {DEFAULT_CELL_BUDGET}"
            )));
        }
        let mut set = CubicalSet {
            max_dim: self.max_dim,
            names,
            degenerate: Vec::new(),
            backend: Backend::Product {
                left: Box::new(self.clone()),
                right: Box::new(other.clone()),
                pairs,
                pair_index,
            },
            reversal: None,
        };
        set.compute_degeneracies()?;
        Ok(set)
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn cell_count(&self, dim: usize) -> usize {
        self.names.get(dim).map_or(0, |v| v.len())
    }

    pub fn cells(&self, dim: usize) -> &[String] {
        &self.names[dim]
    }

    pub fn cell_name(&self, cell: Cell) -> &str {
        &self.names[cell.dim][cell.index]
    }

    pub fn cell_named(&self, dim: usize, name: &str) -> Option<Cell> {
        self.names
            .get(dim)?
            .iter()
            .position(|n| n == name)
            .map(|index| Cell { dim, index })
    }

    pub fn is_degenerate(&self, cell: Cell) -> bool {
        self.degenerate[cell.dim][cell.index]
    }

    /// Nondegenerate cells of one level.
    pub fn nondegenerate_cells(&self, dim: usize) -> Vec<Cell> {
        (0..self.cell_count(dim))
            .filter(|&index| !self.degenerate[dim][index])
            .map(|index| Cell { dim, index })
            .collect()
    }

    /// A cell is presented when its class contains the identity token of a
    /// generating cell: these are the cells the presentation names directly,
    /// as opposed to pullbacks the closure generated. Presented cells carry
    /// the geometry in the realization module.
    pub fn is_presented(&self, cell: Cell) -> bool {
        match &self.backend {
            Backend::Free(data) => data.presented[cell.dim][cell.index],
            Backend::Product {
                left, right, pairs, ..
            } => {
                let (a, b) = pairs[cell.dim][cell.index];
                left.is_presented(Cell {
                    dim: cell.dim,
                    index: a,
                }) && right.is_presented(Cell {
                    dim: cell.dim,
                    index: b,
                })
            }
        }
    }

    /// The action of `f : m -> n` on a cell of level `n`, landing in level `m`.
    pub fn act(&self, f: &CubeMorphism, cell: Cell) -> Result<Cell> {
        if cell.dim != f.dst() || f.src() > self.max_dim || f.dst() > self.max_dim {
            return Err(Error::input(format!(
                "action of a morphism {} -> {} does not apply to a {}-cell in a {}-truncated set",
                f.src(),
                f.dst(),
                cell.dim,
                self.max_dim
            )));
        }
        if cell.index >= self.cell_count(cell.dim) {
            return Err(Error::input("cell index out of range".to_string()));
        }
        Ok(self.act_unchecked(f, cell))
    }

    fn act_unchecked(&self, f: &CubeMorphism, cell: Cell) -> Cell {
        match &self.backend {
            Backend::Free(data) => {
                let (g, phi) = &data.repr[cell.dim][cell.index];
                let composed = phi.compose(f).expect("dimensions match");
                let index = data.class_of[f.src()][&(*g, composed)];
                Cell {
                    dim: f.src(),
                    index,
                }
            }
            Backend::Product {
                left,
                right,
                pairs,
                pair_index,
            } => {
                let (a, b) = pairs[cell.dim][cell.index];
                let la = left.act_unchecked(
                    f,
                    Cell {
                        dim: cell.dim,
                        index: a,
                    },
                );
                let rb = right.act_unchecked(
                    f,
                    Cell {
                        dim: cell.dim,
                        index: b,
                    },
                );
                Cell {
                    dim: f.src(),
                    index: pair_index[f.src()][&(la.index, rb.index)],
                }
            }
        }
    }

    fn compute_degeneracies(&mut self) -> Result<()> {
        let mut degenerate: Vec<Vec<bool>> = (0..=self.max_dim)
            .map(|m| vec![false; self.cell_count(m)])
            .collect();
        for n in 1..=self.max_dim {
            for i in 0..n {
                let eps = cube::degeneracy(n - 1, i)?; // n -> n-1
                for index in 0..self.cell_count(n - 1) {
                    let image = self.act_unchecked(&eps, Cell { dim: n - 1, index });
                    degenerate[n][image.index] = true;
                }
            }
        }
        self.degenerate = degenerate;
        Ok(())
    }

    /// Attach a De Morgan reversal: an involution on level-1 cells that
    /// swaps the two endpoint faces and fixes degenerate edges. The map is
    /// given on nondegenerate edges; degenerate edges are fixed.
    pub fn with_reversal(mut self, map: &BTreeMap<String, String>) -> Result<CubicalSet> {
        if self.max_dim < 1 {
            return Err(Error::input(
                "a reversal needs at least level 1".to_string(),
            ));
        }
        let n1 = self.cell_count(1);
        let mut rev: Vec<Option<usize>> = vec![None; n1];
        for index in 0..n1 {
            if self.degenerate[1][index] {
                rev[index] = Some(index);
            }
        }
        for (from, to) in map {
            let a = self
                .cell_named(1, from)
                .ok_or_else(|| Error::input(format!("reversal names unknown edge {from:?}")))?;
            let b = self
                .cell_named(1, to)
                .ok_or_else(|| Error::input(format!("reversal names unknown edge {to:?}")))?;
            rev[a.index] = Some(b.index);
            rev[b.index] = Some(a.index);
        }
        let rev: Vec<usize> = rev
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                r.ok_or_else(|| {
                    Error::input(format!(
                        "reversal must cover nondegenerate edge {:?}",
                        self.names[1][i]
                    ))
                })
            })
            .collect::<Result<_>>()?;
        // involution
        for (i, &j) in rev.iter().enumerate() {
            if rev[j] != i {
                return Err(Error::input("reversal is not an involution".to_string()));
            }
        }
        // endpoint swap
        let bot = cube::face(1, 0, End::Bot)?;
        let top = cube::face(1, 0, End::Top)?;
        for (i, &j) in rev.iter().enumerate() {
            let e = Cell { dim: 1, index: i };
            let r = Cell { dim: 1, index: j };
            let src = self.act_unchecked(&bot, e);
            let tgt = self.act_unchecked(&top, e);
            if self.act_unchecked(&bot, r) != tgt || self.act_unchecked(&top, r) != src {
                return Err(Error::input(format!(
                    "reversal of {:?} does not swap its endpoints",
                    self.names[1][i]
                )));
            }
        }
        self.reversal = Some(rev);
        Ok(self)
    }

    pub fn has_reversal(&self) -> bool {
        self.reversal.is_some()
    }

    /// The reversal action on a level-1 cell, if the set carries one.
    pub fn reverse_edge(&self, edge: Cell) -> Result<Cell> {
        if edge.dim != 1 {
            return Err(Error::input("only edges can be reversed".to_string()));
        }
        match &self.reversal {
            Some(rev) => Ok(Cell {
                dim: 1,
                index: rev[edge.index],
            }),
            None => Err(Error::UnsupportedTheory(
                "this cubical set does not carry the De Morgan reversal".to_string(),
            )),
        }
    }

    /// Functoriality check: identities act as identities, and the action of
    /// a composite agrees with the composite of actions. Exhaustive over the
    /// generating morphisms and their pairwise composites when levels are
    /// small, sampled otherwise.
    pub fn verify_functoriality(&self) -> Result<()> {
        for n in 0..=self.max_dim {
            let id = CubeMorphism::identity(n);
            for index in 0..self.cell_count(n) {
                let c = Cell { dim: n, index };
                if self.act_unchecked(&id, c) != c {
                    return Err(Error::input(format!(
                        "identity acts nontrivially on {}",
                        self.cell_name(c)
                    )));
                }
            }
        }
        let gens = cube::generator_morphisms(self.max_dim);
        let mut rng = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            rng ^= rng << 13;
            rng ^= rng >> 7;
            rng ^= rng << 17;
            rng
        };
        for f in &gens {
            for g in &gens {
                if g.src() != f.dst() {
                    continue;
                }
                let composite = g.compose(f).expect("checked dims");
                let k = g.dst();
                let count = self.cell_count(k);
                let exhaustive = count <= 512;
                let indices: Vec<usize> = if exhaustive {
                    (0..count).collect()
                } else {
                    (0..64).map(|_| (next() % count as u64) as usize).collect()
                };
                for index in indices {
                    let c = Cell { dim: k, index };
                    let via = self.act_unchecked(f, self.act_unchecked(g, c));
                    let direct = self.act_unchecked(&composite, c);
                    if via != direct {
                        return Err(Error::input(format!(
                            "functoriality fails on cell {} under {} then {}",
                            self.cell_name(c),
                            g,
                            f
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Search for a levelwise bijection commuting with the action of every
    /// generating morphism.
    pub fn isomorphic_to(&self, other: &CubicalSet) -> bool {
        if self.max_dim != other.max_dim {
            return false;
        }
        for m in 0..=self.max_dim {
            if self.cell_count(m) != other.cell_count(m) {
                return false;
            }
            let mine: Vec<bool> = (0..self.cell_count(m))
                .map(|i| self.degenerate[m][i])
                .collect();
            let theirs: Vec<bool> = (0..other.cell_count(m))
                .map(|i| other.degenerate[m][i])
                .collect();
            if mine.iter().filter(|d| **d).count() != theirs.iter().filter(|d| **d).count() {
                return false;
            }
        }
        let gens = cube::generator_morphisms(self.max_dim);
        // assign levels bottom-up; the actions map downwards, so lower
        // levels constrain higher ones
        let mut image: Vec<Vec<Option<usize>>> = (0..=self.max_dim)
            .map(|m| vec![None; self.cell_count(m)])
            .collect();
        self.match_level(other, &gens, 0, 0, &mut image)
    }

    fn match_level(
        &self,
        other: &CubicalSet,
        gens: &[CubeMorphism],
        level: usize,
        pos: usize,
        image: &mut Vec<Vec<Option<usize>>>,
    ) -> bool {
        if level > self.max_dim {
            return true;
        }
        if pos == self.cell_count(level) {
            return self.match_level(other, gens, level + 1, 0, image);
        }
        let c = Cell {
            dim: level,
            index: pos,
        };
        let used: BTreeSet<usize> = image[level].iter().flatten().copied().collect();
        for cand in 0..other.cell_count(level) {
            if used.contains(&cand) {
                continue;
            }
            if self.degenerate[level][pos] != other.degenerate[level][cand] {
                continue;
            }
            let d = Cell {
                dim: level,
                index: cand,
            };
            // actions land in already-assigned (lower or equal) levels
            let consistent = gens.iter().all(|f| {
                if f.dst() != level || f.src() > level {
                    return true;
                }
                let fc = self.act_unchecked(f, c);
                let fd = other.act_unchecked(f, d);
                match image[fc.dim][fc.index] {
                    Some(assigned) => assigned == fd.index,
                    None => true,
                }
            });
            if !consistent {
                continue;
            }
            image[level][pos] = Some(cand);
            if self.match_level(other, gens, level, pos + 1, image) {
                return true;
            }
            image[level][pos] = None;
        }
        false
    }

    /// Re-present the set: nondegenerate cells become generators, their
    /// faces expressed through nondegenerate cells and degeneracy
    /// composites. Rebuilding from this presentation yields an isomorphic
    /// cubical set.
    pub fn to_presentation(&self) -> Result<Presentation> {
        // auto-generated closure names carry brackets, which presentations
        // reserve; rename those cells positionally
        let mut taken: BTreeSet<String> = BTreeSet::new();
        let mut renamed: BTreeMap<(usize, usize), String> = BTreeMap::new();
        for dim in 0..=self.max_dim {
            for cell in self.nondegenerate_cells(dim) {
                let raw = self.cell_name(cell);
                let mut name = if raw.contains('[') || raw.contains(']') || raw.contains(',') {
                    format!("c{}_{}", dim, cell.index)
                } else {
                    raw.to_string()
                };
                while !taken.insert(name.clone()) {
                    name.push('_');
                }
                renamed.insert((dim, cell.index), name);
            }
        }
        let name_of = |cell: Cell| renamed[&(cell.dim, cell.index)].clone();
        let mut p = Presentation::new(self.max_dim);
        for dim in 0..=self.max_dim {
            for cell in self.nondegenerate_cells(dim) {
                p = p.cell(&name_of(cell), dim);
            }
        }
        for dim in 1..=self.max_dim {
            for cell in self.nondegenerate_cells(dim) {
                for axis in 0..dim {
                    for end in [End::Bot, End::Top] {
                        let delta = cube::face(dim, axis, end)?;
                        let target = self.act_unchecked(&delta, cell);
                        let (base, via) = self.degeneracy_decomposition(target)?;
                        if via.src() == via.dst() && via == CubeMorphism::identity(via.src()) {
                            p = p.face(&name_of(cell), axis, end, &name_of(base));
                        } else {
                            p = p.face_composite(&name_of(cell), axis, end, &name_of(base), via);
                        }
                    }
                }
            }
        }
        // the faces alone do not remember which nondegenerate cells were
        // pullbacks (connection or symmetry images) of others; wire every
        // pullback to the canonical form of its value
        for dim in 0..=self.max_dim {
            for cell in self.nondegenerate_cells(dim) {
                for m in 0..=self.max_dim {
                    for phi in cube::enumerate_hom(m, dim)? {
                        if phi == CubeMorphism::identity(dim) {
                            continue;
                        }
                        let value = self.act_unchecked(&phi, cell);
                        let (base, sigma) = self.degeneracy_decomposition(value)?;
                        p = p.relation(&name_of(cell), phi, &name_of(base), sigma);
                    }
                }
            }
        }
        Ok(p)
    }

    /// Write a cell as `X(sigma)(base)` with `base` nondegenerate and
    /// `sigma` a composite of degeneracies (the identity when the cell is
    /// already nondegenerate).
    pub fn degeneracy_decomposition(&self, cell: Cell) -> Result<(Cell, CubeMorphism)> {
        let mut base = cell;
        let mut sigma = CubeMorphism::identity(cell.dim);
        'outer: while self.degenerate[base.dim][base.index] {
            let n = base.dim;
            for i in 0..n {
                let eps = cube::degeneracy(n - 1, i)?; // n -> n-1
                for index in 0..self.cell_count(n - 1) {
                    let c0 = Cell { dim: n - 1, index };
                    if self.act_unchecked(&eps, c0) == base {
                        // X(sigma)(cell) chains: cell = X(sigma)(base) and
                        // base = X(eps)(c0), so cell = X(sigma . eps?) --
                        // composition in the category: sigma then eps
                        sigma = eps.compose(&sigma)?;
                        base = c0;
                        continue 'outer;
                    }
                }
            }
            return Err(Error::input(format!(
                "degenerate cell {} has no degeneracy preimage",
                self.cell_name(base)
            )));
        }
        Ok((base, sigma))
    }
}

impl fmt::Display for CubicalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cubical set truncated at {}", self.max_dim)?;
        for m in 0..=self.max_dim {
            writeln!(
                f,
                "  level {m}: {} cells ({} nondegenerate)",
                self.cell_count(m),
                self.nondegenerate_cells(m).len()
            )?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Cocubical objects and the interval comparison.
// ---------------------------------------------------------------------------

/// The cocubical object of a finite lattice `D`: the level `n` is `D^n`
/// and a morphism acts by componentwise term evaluation.
pub struct CocubicalMap<'a> {
    lattice: &'a FiniteLattice,
    morphism: &'a CubeMorphism,
}

pub fn cocubical_eval<'a>(
    lattice: &'a FiniteLattice,
    morphism: &'a CubeMorphism,
) -> CocubicalMap<'a> {
    CocubicalMap { lattice, morphism }
}

impl CocubicalMap<'_> {
    /// Apply `D^m -> D^n` at a tuple of element ids.
    pub fn apply(&self, point: &[usize]) -> Result<Vec<usize>> {
        self.morphism.evaluate(self.lattice, point)
    }
}

/// Report for the identification of the representable on `n` with the
/// `n`-th power of the interval: level counts agree and the bijection
/// commutes with every generating morphism.
#[derive(Debug, Clone)]
pub struct YonedaReport {
    pub n: usize,
    pub max_level: usize,
    /// (level, representable count, interval-power count)
    pub level_counts: Vec<(usize, usize, usize)>,
    pub generators_checked: usize,
    pub all_compatible: bool,
}

/// Verify `y(n)(m) = DL(m)^n` with action compatibility for levels up to
/// `max_level`.
pub fn yoneda_is_interval_power(n: usize, max_level: usize) -> Result<YonedaReport> {
    check_truncation(max_level)?;
    let mut level_counts = Vec::new();
    for m in 0..=max_level {
        let hom = cube::enumerate_hom(m, n)?;
        let power = cube::hom_count(m, n)?;
        level_counts.push((m, hom.len(), power));
    }
    let mut generators_checked = 0usize;
    let mut all_compatible = level_counts.iter().all(|(_, a, b)| a == b);
    for f in cube::generator_morphisms(max_level) {
        generators_checked += 1;
        for phi in cube::enumerate_hom(f.dst(), n)? {
            // the representable acts by precomposition
            let via_y = phi.compose(&f)?;
            // the interval power acts by componentwise substitution
            let comps = phi
                .components()
                .iter()
                .map(|c| c.substitute(f.components(), f.src()))
                .collect::<Result<Vec<_>>>()?;
            let via_power = CubeMorphism::new(f.src(), n, comps)?;
            if via_y != via_power {
                all_compatible = false;
            }
        }
    }
    Ok(YonedaReport {
        n,
        max_level,
        level_counts,
        generators_checked,
        all_compatible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::ConnectionKind;

    fn circle() -> CubicalSet {
        let p = Presentation::new(1)
            .cell("v", 0)
            .cell("e", 1)
            .face("e", 0, End::Bot, "v")
            .face("e", 0, End::Top, "v");
        CubicalSet::from_presentation(&p).unwrap()
    }

    #[test]
    fn interval_levels() {
        let interval = CubicalSet::representable(1, 2).unwrap();
        assert_eq!(interval.cell_count(0), 2);
        assert_eq!(interval.cell_count(1), 3);
        assert_eq!(interval.cell_count(2), 6);
        assert_eq!(interval.nondegenerate_cells(1).len(), 1);
    }

    #[test]
    fn representable_square_has_four_vertices() {
        let square = CubicalSet::representable(2, 2).unwrap();
        assert_eq!(square.cell_count(0), 4);
        assert_eq!(square.cell_count(1), 9);
        assert_eq!(square.cell_count(2), 36);
    }

    #[test]
    fn representable_beyond_truncation_fails() {
        assert!(CubicalSet::representable(3, 2).is_err());
        assert!(CubicalSet::representable(2, 4).is_err());
    }

    #[test]
    fn circle_closure_counts() {
        let c = circle();
        assert_eq!(c.cell_count(0), 1);
        assert_eq!(c.cell_count(1), 2);
        assert_eq!(c.nondegenerate_cells(1).len(), 1);
        c.verify_functoriality().unwrap();
    }

    #[test]
    fn terminal_has_one_cell_per_level() {
        let t = CubicalSet::terminal(3).unwrap();
        for m in 0..=3 {
            assert_eq!(t.cell_count(m), 1);
        }
    }

    #[test]
    fn product_counts_match() {
        let i = CubicalSet::representable(1, 2).unwrap();
        let p = i.product(&i).unwrap();
        assert_eq!(p.cell_count(0), 4);
        assert_eq!(p.cell_count(1), 9);
        assert_eq!(p.cell_count(2), 36);
        p.verify_functoriality().unwrap();
    }

    #[test]
    fn interval_squared_is_the_representable_square() {
        let i = CubicalSet::representable(1, 2).unwrap();
        let p = i.product(&i).unwrap();
        let y2 = CubicalSet::representable(2, 2).unwrap();
        assert!(p.isomorphic_to(&y2));
    }

    #[test]
    fn product_with_terminal_is_identity() {
        let c = circle();
        let t = CubicalSet::terminal(1).unwrap();
        let p = c.product(&t).unwrap();
        assert!(p.isomorphic_to(&c));
    }

    #[test]
    fn functoriality_of_representables() {
        for n in 0..=2usize {
            let y = CubicalSet::representable(n, 2).unwrap();
            y.verify_functoriality().unwrap();
        }
    }

    #[test]
    fn action_by_connection_lands_on_the_merge() {
        let interval = CubicalSet::representable(1, 2).unwrap();
        let edge = interval.cell_named(1, "y1").unwrap();
        let conn = cube::connection(1, 0, 1, ConnectionKind::Join).unwrap();
        let square = interval.act(&conn, edge).unwrap();
        assert_eq!(interval.cell_name(square), "y1[x0 v x1]");
    }

    #[test]
    fn square_boundary_level_counts() {
        let p = Presentation::new(1)
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
        let x = CubicalSet::from_presentation(&p).unwrap();
        assert_eq!(x.cell_count(0), 4);
        // 4 edges plus 4 degenerate vertices
        assert_eq!(x.cell_count(1), 8);
        assert_eq!(x.nondegenerate_cells(1).len(), 4);
    }

    #[test]
    fn undeclared_cells_are_input_errors() {
        let p = Presentation::new(1)
            .cell("e", 1)
            .face("e", 0, End::Bot, "v");
        assert!(matches!(
            CubicalSet::from_presentation(&p),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn dimension_mismatch_is_an_input_error() {
        let p = Presentation::new(2)
            .cell("v", 0)
            .cell("s", 2)
            .face("s", 0, End::Bot, "v");
        assert!(matches!(
            CubicalSet::from_presentation(&p),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn contradictory_faces_are_presentation_errors() {
        // two distinct vertices forced equal through a shared edge corner
        let p = Presentation::new(2)
            .cell("u", 0)
            .cell("w", 0)
            .cell("e", 1)
            .cell("f", 1)
            .cell("s", 2)
            .face("e", 0, End::Bot, "u")
            .face("e", 0, End::Top, "u")
            .face("f", 0, End::Bot, "w")
            .face("f", 0, End::Top, "w")
            // square with left edge e and bottom edge f: the shared corner
            // forces u = w
            .face("s", 0, End::Bot, "e")
            .face("s", 1, End::Bot, "f");
        let err = CubicalSet::from_presentation(&p);
        assert!(matches!(err, Err(Error::Presentation(_))));
    }

    #[test]
    fn alias_merges_with_the_degenerate_class() {
        let eps = cube::degeneracy(0, 0).unwrap();
        let p = Presentation::new(1)
            .cell("v", 0)
            .cell("e", 1)
            .face("e", 0, End::Bot, "v")
            .face("e", 0, End::Top, "v")
            .cell("pad", 1)
            .alias("pad", "v", eps);
        let x = CubicalSet::from_presentation(&p).unwrap();
        // pad coincides with the degenerate edge on v
        assert_eq!(x.cell_count(1), 2);
        assert_eq!(x.nondegenerate_cells(1).len(), 1);
    }

    #[test]
    fn cocubical_functoriality_on_a_chain() {
        let chain = FiniteLattice::chain(3).unwrap();
        for f in cube::enumerate_hom(1, 1).unwrap() {
            for g in cube::enumerate_hom(2, 1).unwrap() {
                let composite = f.compose(&g).unwrap();
                for a in 0..3usize {
                    for b in 0..3usize {
                        let point = vec![a, b];
                        let inner = cocubical_eval(&chain, &g).apply(&point).unwrap();
                        let via = cocubical_eval(&chain, &f).apply(&inner).unwrap();
                        let direct = cocubical_eval(&chain, &composite).apply(&point).unwrap();
                        assert_eq!(via, direct);
                    }
                }
            }
        }
    }

    #[test]
    fn cocubical_identity_and_connection() {
        let chain = FiniteLattice::chain(3).unwrap();
        let id = CubeMorphism::identity(2);
        for a in 0..3usize {
            for b in 0..3usize {
                assert_eq!(
                    cocubical_eval(&chain, &id).apply(&[a, b]).unwrap(),
                    vec![a, b]
                );
            }
        }
        let join = cube::connection(1, 0, 1, ConnectionKind::Join).unwrap();
        assert_eq!(
            cocubical_eval(&chain, &join).apply(&[1, 2]).unwrap(),
            vec![2]
        );
    }

    #[test]
    fn yoneda_report_small_levels() {
        for n in 0..=2usize {
            let report = yoneda_is_interval_power(n, 2).unwrap();
            assert!(
                report.all_compatible,
                "level counts: {:?}",
                report.level_counts
            );
        }
    }

    #[test]
    fn representation_roundtrip_is_isomorphic() {
        let c = circle();
        let again = CubicalSet::from_presentation(&c.to_presentation().unwrap()).unwrap();
        assert!(c.isomorphic_to(&again));

        let y1 = CubicalSet::representable(1, 2).unwrap();
        let again = CubicalSet::from_presentation(&y1.to_presentation().unwrap()).unwrap();
        assert!(y1.isomorphic_to(&again));
    }

    #[test]
    fn reversal_requires_endpoint_swap() {
        // chain u -> w has no reversed edge available
        let p = Presentation::new(1)
            .cell("u", 0)
            .cell("w", 0)
            .cell("e", 1)
            .face("e", 0, End::Bot, "u")
            .face("e", 0, End::Top, "w");
        let x = CubicalSet::from_presentation(&p).unwrap();
        let mut map = BTreeMap::new();
        map.insert("e".to_string(), "e".to_string());
        assert!(x.with_reversal(&map).is_err());
    }

    #[test]
    fn reversal_on_the_circle() {
        let c = circle();
        let mut map = BTreeMap::new();
        map.insert("e".to_string(), "e".to_string());
        let c = c.with_reversal(&map).unwrap();
        let e = c.cell_named(1, "e").unwrap();
        assert_eq!(c.reverse_edge(e).unwrap(), e);
    }
}
