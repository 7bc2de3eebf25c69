//! Geometric realization of truncated cubical sets.
//!
//! Both routes below spend geometry only on *presented* cells (the cells a
//! presentation names directly; the closure's pullback cells are
//! reparametrizations of those and would double-count). `triangulate`
//! builds the permutation triangulation: each presented nondegenerate
//! `n`-cell contributes one simplex per chain of its corner poset, chains
//! lying in a face are pushed down along the face action, and symmetric
//! duplicates are merged, so shared faces appear once. The result is kept
//! as a delta-complex: a simplex knows its (possibly repeating) corner
//! vertices, which is what loops on a single vertex need.
//!
//! `realize_numeric` glues one `s^n` grid of points per presented cell
//! along the action of every morphism between truncated levels. Grid
//! coordinates are exact (min/max arithmetic on grid indices), so gluing
//! is by equality and no tolerance enters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::cset::{Cell, CubicalSet};
use crate::cube::{self, CubeMorphism};
use crate::error::{Error, Result};
use crate::lattice::{IndexChain, LatticeElement};
use crate::util::UnionFind;

pub const DEFAULT_POINT_BUDGET: usize = 500_000;

// ---------------------------------------------------------------------------
// Simplicial complexes (delta-style: simplices carry ordered corner lists).
// ---------------------------------------------------------------------------

/// Identity of a simplex: the carrier cell it was canonicalized into and
/// the corner chain inside that cell's cube.
pub type SimplexKey = (usize, usize, Vec<u32>);

#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    vertex_labels: Vec<String>,
    /// key -> ordered corner vertices (repeats allowed, e.g. loops)
    simplices: BTreeMap<SimplexKey, Vec<usize>>,
    tops: BTreeSet<SimplexKey>,
}

impl SimplicialComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    /// (dimension, corner vertices) of every simplex.
    pub fn simplices(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.simplices
            .iter()
            .map(|(k, v)| (k.2.len() - 1, v.as_slice()))
    }

    pub fn counts_per_dim(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for key in self.simplices.keys() {
            let d = key.2.len() - 1;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        counts
    }

    pub fn count_of_dim(&self, dim: usize) -> usize {
        self.counts_per_dim().get(dim).copied().unwrap_or(0)
    }

    /// Simplices that are not a face of any other simplex.
    pub fn top_simplex_count(&self) -> usize {
        self.tops.len()
    }

    pub fn top_simplices(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.tops
            .iter()
            .map(|k| (k.2.len() - 1, self.simplices[k].as_slice()))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .keys()
            .map(|k| {
                if (k.2.len() - 1) % 2 == 0 {
                    1i64
                } else {
                    -1i64
                }
            })
            .sum()
    }
}

/// All strictly increasing chains in the corner poset of the `n`-cube.
fn corner_chains(n: usize) -> Vec<Vec<u32>> {
    let corners = 1u32 << n;
    let mut chains: Vec<Vec<u32>> = Vec::new();
    let mut stack: Vec<Vec<u32>> = (0..corners).map(|c| vec![c]).collect();
    while let Some(chain) = stack.pop() {
        chains.push(chain.clone());
        let last = *chain.last().expect("nonempty");
        for next in 0..corners {
            if next != last && next & last == last {
                let mut longer = chain.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
    }
    chains.sort();
    chains
}

/// Strip bit `j` from a corner mask.
fn drop_bit(w: u32, j: usize) -> u32 {
    let low = w & ((1 << j) - 1);
    let high = (w >> (j + 1)) << j;
    low | high
}

/// Push a chain down along face actions while it lies in a face of its
/// carrier cube: the canonical carrier of the simplex.
fn face_reduce(set: &CubicalSet, mut cell: Cell, mut chain: Vec<u32>) -> Result<(Cell, Vec<u32>)> {
    'outer: loop {
        let d = cell.dim;
        if d == 0 {
            return Ok((cell, chain));
        }
        for j in 0..d {
            let bits: BTreeSet<u32> = chain.iter().map(|w| w >> j & 1).collect();
            if bits.len() == 1 {
                let value = bits.into_iter().next().expect("nonempty");
                let end = if value == 0 {
                    cube::End::Bot
                } else {
                    cube::End::Top
                };
                let delta = cube::face(d, j, end)?;
                cell = set.act(&delta, cell)?;
                chain = chain.iter().map(|&w| drop_bit(w, j)).collect();
                continue 'outer;
            }
        }
        return Ok((cell, chain));
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in perms {
            for slot in 0..=p.len() {
                let mut q = p.clone();
                q.insert(slot, p.len());
                next.push(q);
            }
        }
        perms = next;
    }
    perms
}

/// Canonical key of a simplex: face-reduce, then take the least
/// symmetry-equivalent presentation of the carrier and chain.
fn simplex_key(set: &CubicalSet, cell: Cell, chain: &[u32]) -> Result<SimplexKey> {
    let (cell, chain) = face_reduce(set, cell, chain.to_vec())?;
    let d = cell.dim;
    if d < 2 {
        return Ok((cell.dim, cell.index, chain));
    }
    let mut best: Option<SimplexKey> = None;
    for perm in permutations(d) {
        let sym = cube::symmetry(d, &perm)?;
        let twin = set.act(&sym, cell)?;
        // the simplex (cell, w) equals (twin, w') where applying the
        // symmetry's bit action to w' gives w
        let twisted: Vec<u32> = chain
            .iter()
            .map(|&w| {
                let mut w_prime = 0u32;
                for (k, &p) in perm.iter().enumerate() {
                    w_prime |= (w >> k & 1) << p;
                }
                w_prime
            })
            .collect();
        let candidate = (twin.dim, twin.index, twisted);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    Ok(best.expect("identity permutation always contributes"))
}

/// Corner vertex (a level-0 cell) of a cell at a corner mask.
fn corner_vertex(set: &CubicalSet, cell: Cell, corner: u32) -> Result<Cell> {
    let d = cell.dim;
    let components = (0..d)
        .map(|j| {
            if corner >> j & 1 == 1 {
                LatticeElement::top(0)
            } else {
                LatticeElement::bot(0)
            }
        })
        .collect();
    let point = CubeMorphism::new(0, d, components)?;
    set.act(&point, cell)
}

/// The permutation triangulation of the presented cells.
pub fn triangulate(set: &CubicalSet) -> Result<SimplicialComplex> {
    let vertex_labels: Vec<String> = set.cells(0).to_vec();
    let mut simplices: BTreeMap<SimplexKey, Vec<usize>> = BTreeMap::new();
    let mut faces_of_larger: BTreeSet<SimplexKey> = BTreeSet::new();
    for dim in 0..=set.max_dim() {
        let chains = corner_chains(dim);
        for index in 0..set.cell_count(dim) {
            let cell = Cell { dim, index };
            if !set.is_presented(cell) || set.is_degenerate(cell) {
                continue;
            }
            for chain in &chains {
                let key = simplex_key(set, cell, chain)?;
                if let std::collections::btree_map::Entry::Vacant(e) = simplices.entry(key) {
                    let corners = chain
                        .iter()
                        .map(|&w| Ok(corner_vertex(set, cell, w)?.index))
                        .collect::<Result<Vec<usize>>>()?;
                    e.insert(corners);
                }
                for mask in 1..(1u32 << chain.len()) {
                    if mask == (1 << chain.len()) - 1 {
                        continue;
                    }
                    let sub: Vec<u32> = (0..chain.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| chain[i])
                        .collect();
                    let sub_key = simplex_key(set, cell, &sub)?;
                    faces_of_larger.insert(sub_key.clone());
                    if let std::collections::btree_map::Entry::Vacant(e) = simplices.entry(sub_key)
                    {
                        let corners = sub
                            .iter()
                            .map(|&w| Ok(corner_vertex(set, cell, w)?.index))
                            .collect::<Result<Vec<usize>>>()?;
                        e.insert(corners);
                    }
                }
            }
        }
    }
    let tops: BTreeSet<SimplexKey> = simplices
        .keys()
        .filter(|k| !faces_of_larger.contains(*k))
        .cloned()
        .collect();
    Ok(SimplicialComplex {
        vertex_labels,
        simplices,
        tops,
    })
}

// ---------------------------------------------------------------------------
// Numeric realization.
// ---------------------------------------------------------------------------

/// Cell name and exact local grid coordinates of a glued point's canonical
/// representative.
pub type Provenance = (String, Vec<(u32, u32)>);

/// A mesh point: an averaged embedding position plus the provenance of the
/// least grid point in its glued class.
#[derive(Debug, Clone)]
pub struct MeshPoint {
    pub position: [f64; 3],
    /// cell name of the provenance grid point
    pub cell: String,
    /// local grid coordinates as fractions numerator/denominator
    pub coords: Vec<(u32, u32)>,
}

/// A triangulated mesh with explicit simplices up to dimension 3.
///
/// Simplices are ordered tuples of point ids, each traversing its grid
/// cell monotonically. Every gluing map is monotone, so a face shared
/// through a seam arrives in the same order from both sides and merges,
/// while geometrically distinct faces on the same points (parallel
/// triangles of a coarsely sampled torus) stay distinct.
#[derive(Debug, Clone)]
pub struct Mesh {
    pub points: Vec<MeshPoint>,
    pub edges: Vec<[usize; 2]>,
    pub triangles: Vec<[usize; 3]>,
    pub tetrahedra: Vec<[usize; 4]>,
}

impl Mesh {
    /// Alternating-sum characteristic over the closure of the stored
    /// simplices under ordered sub-tuples, comparable with the
    /// triangulation route.
    pub fn euler_characteristic(&self) -> i64 {
        let mut simplices: BTreeSet<Vec<usize>> = BTreeSet::new();
        for i in 0..self.points.len() {
            simplices.insert(vec![i]);
        }
        let mut insert_all = |verts: &[usize]| {
            let n = verts.len();
            for mask in 1..(1u32 << n) {
                let face: Vec<usize> = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| verts[i])
                    .collect();
                simplices.insert(face);
            }
        };
        for e in &self.edges {
            insert_all(e);
        }
        for t in &self.triangles {
            insert_all(t);
        }
        for t in &self.tetrahedra {
            insert_all(t);
        }
        simplices
            .iter()
            .map(|s| if (s.len() - 1) % 2 == 0 { 1i64 } else { -1i64 })
            .sum()
    }
}

fn grid_points(dim: usize, s: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity(s.pow(dim as u32));
    let mut cur = vec![0u32; dim];
    loop {
        out.push(cur.clone());
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if (cur[i] as usize) < s {
                break;
            }
            cur[i] = 0;
        }
    }
}

fn encode_grid(p: &[u32], s: usize) -> usize {
    p.iter().fold(0usize, |acc, &v| acc * s + v as usize)
}

/// Dense token ids for the grid points of the presented cells.
struct GridTokens {
    /// per level: cell index -> offset (usize::MAX when the cell carries
    /// no grid)
    offsets: Vec<Vec<usize>>,
    total: usize,
}

impl GridTokens {
    fn new(set: &CubicalSet, s: usize) -> Self {
        let mut offsets = Vec::new();
        let mut total = 0usize;
        for dim in 0..=set.max_dim() {
            let mut level = Vec::new();
            for index in 0..set.cell_count(dim) {
                if set.is_presented(Cell { dim, index }) {
                    level.push(total);
                    total += s.pow(dim as u32);
                } else {
                    level.push(usize::MAX);
                }
            }
            offsets.push(level);
        }
        GridTokens { offsets, total }
    }

    fn id(&self, cell: Cell, point: usize) -> Option<usize> {
        let off = self.offsets[cell.dim][cell.index];
        if off == usize::MAX {
            None
        } else {
            Some(off + point)
        }
    }
}

/// Glue one `s^n` grid per presented cell along the action of every
/// morphism between truncated levels, and triangulate the surviving grid
/// cells.
pub fn realize_numeric(set: &CubicalSet, samples_per_axis: usize) -> Result<Mesh> {
    let s = samples_per_axis;
    if s < 2 {
        return Err(Error::input("need at least 2 samples per axis".to_string()));
    }
    let tokens = GridTokens::new(set, s);
    if tokens.total > DEFAULT_POINT_BUDGET {
        return Err(Error::capacity(format!(
            "realization needs {} grid points, budget is {DEFAULT_POINT_BUDGET}",
            tokens.total
        )));
    }
    let mut uf = UnionFind::new(tokens.total);
    let chain = IndexChain {
        top: (s - 1) as u32,
    };
    for n in 0..=set.max_dim() {
        let sources: Vec<Cell> = (0..set.cell_count(n))
            .map(|index| Cell { dim: n, index })
            .filter(|&c| set.is_presented(c))
            .collect();
        if sources.is_empty() {
            continue;
        }
        for m in 0..=set.max_dim() {
            // the action of every morphism m -> n is computable directly,
            // so the gluing relation needs no generator decomposition
            for f in cube::enumerate_hom(m, n)? {
                if m == n && f == CubeMorphism::identity(n) {
                    continue;
                }
                for &c in &sources {
                    let c_src = set.act(&f, c)?;
                    let Some(_) = tokens.id(c_src, 0) else {
                        continue;
                    };
                    for p in grid_points(m, s) {
                        let q = f.evaluate(&chain, &p)?;
                        let a = tokens.id(c_src, encode_grid(&p, s)).expect("checked");
                        let b = tokens.id(c, encode_grid(&q, s)).expect("source presented");
                        uf.union(a, b);
                    }
                }
            }
        }
    }
    let (class, class_count) = uf.classes();

    // embedding: cells laid out on an integer offset grid, glued points
    // averaged; geometry is for inspection, topology is the contract
    let mut sums = vec![[0f64; 3]; class_count];
    let mut counts = vec![0usize; class_count];
    let mut provenance: Vec<Option<Provenance>> = vec![None; class_count];
    let denom = (s - 1) as f64;
    for dim in 0..=set.max_dim() {
        for index in 0..set.cell_count(dim) {
            let cell = Cell { dim, index };
            if tokens.id(cell, 0).is_none() {
                continue;
            }
            let offset_x = 1.5 * index as f64;
            let offset_y = 2.0 * dim as f64;
            for p in grid_points(dim, s) {
                let cls = class[tokens.id(cell, encode_grid(&p, s)).expect("presented")];
                let mut pos = [offset_x, offset_y, 0.0];
                for (axis, &coord) in p.iter().enumerate().take(3) {
                    pos[axis] += coord as f64 / denom;
                }
                for (axis, acc) in sums[cls].iter_mut().enumerate() {
                    *acc += pos[axis];
                }
                counts[cls] += 1;
                if provenance[cls].is_none() {
                    provenance[cls] = Some((
                        set.cell_name(cell).to_string(),
                        p.iter().map(|&c| (c, (s - 1) as u32)).collect(),
                    ));
                }
            }
        }
    }
    let points: Vec<MeshPoint> = (0..class_count)
        .map(|cls| {
            let (cell, coords) = provenance[cls].clone().expect("class inhabited");
            let k = counts[cls] as f64;
            MeshPoint {
                position: [sums[cls][0] / k, sums[cls][1] / k, sums[cls][2] / k],
                cell,
                coords,
            }
        })
        .collect();

    // facets from grid cells, degenerate ones dropped, duplicates merged
    let mut edges: BTreeSet<[usize; 2]> = BTreeSet::new();
    let mut triangles: BTreeSet<[usize; 3]> = BTreeSet::new();
    let mut tetrahedra: BTreeSet<[usize; 4]> = BTreeSet::new();
    for dim in 0..=set.max_dim() {
        for index in 0..set.cell_count(dim) {
            let cell = Cell { dim, index };
            if tokens.id(cell, 0).is_none() || set.is_degenerate(cell) {
                continue;
            }
            let cls = |p: &[u32]| class[tokens.id(cell, encode_grid(p, s)).expect("presented")];
            match dim {
                1 => {
                    for i in 0..(s - 1) as u32 {
                        let a = cls(&[i]);
                        let b = cls(&[i + 1]);
                        if a != b {
                            edges.insert([a, b]);
                        }
                    }
                }
                2 => {
                    for i in 0..(s - 1) as u32 {
                        for j in 0..(s - 1) as u32 {
                            // the two monotone corner paths of the quad
                            let paths = [
                                [[i, j], [i + 1, j], [i + 1, j + 1]],
                                [[i, j], [i, j + 1], [i + 1, j + 1]],
                            ];
                            for path in paths {
                                let t = [cls(&path[0]), cls(&path[1]), cls(&path[2])];
                                let distinct: BTreeSet<usize> = t.iter().copied().collect();
                                if distinct.len() == 3 {
                                    triangles.insert(t);
                                }
                            }
                        }
                    }
                }
                3 => {
                    for i in 0..(s - 1) as u32 {
                        for j in 0..(s - 1) as u32 {
                            for k in 0..(s - 1) as u32 {
                                // Kuhn subdivision: one tetrahedron per
                                // monotone corner path of the grid cube
                                let base = [i, j, k];
                                for perm in [
                                    [0, 1, 2],
                                    [0, 2, 1],
                                    [1, 0, 2],
                                    [1, 2, 0],
                                    [2, 0, 1],
                                    [2, 1, 0],
                                ] {
                                    let mut cur = base;
                                    let mut verts = [cls(&cur), 0, 0, 0];
                                    for (step, &axis) in perm.iter().enumerate() {
                                        cur[axis] += 1;
                                        verts[step + 1] = cls(&cur);
                                    }
                                    let distinct: BTreeSet<usize> = verts.iter().copied().collect();
                                    if distinct.len() == 4 {
                                        tetrahedra.insert(verts);
                                    }
                                }
                            }
                        }
                    }
                }
                _ => {}
            }
        }
    }
    Ok(Mesh {
        points,
        edges: edges.into_iter().collect(),
        triangles: triangles.into_iter().collect(),
        tetrahedra: tetrahedra.into_iter().collect(),
    })
}

// ---------------------------------------------------------------------------
// Export.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Off,
    Obj,
}

/// Serialize the mesh. Vertex order follows the canonical provenance
/// order, so the output is byte-identical across runs. Tetrahedra are
/// written through their boundary triangles; both formats are surface
/// formats.
pub fn export_mesh(mesh: &Mesh, format: MeshFormat) -> Result<String> {
    if mesh.points.iter().any(|p| p.coords.len() > 3) {
        return Err(Error::input(
            "meshes beyond dimension 3 are not exportable".to_string(),
        ));
    }
    let mut triangles: BTreeSet<[usize; 3]> = mesh.triangles.iter().copied().collect();
    for tet in &mesh.tetrahedra {
        for skip in 0..4 {
            let face: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| tet[i]).collect();
            triangles.insert([face[0], face[1], face[2]]);
        }
    }
    let mut out = String::new();
    match format {
        MeshFormat::Off => {
            writeln!(out, "OFF").unwrap();
            writeln!(
                out,
                "{} {} {}",
                mesh.points.len(),
                triangles.len(),
                mesh.edges.len()
            )
            .unwrap();
            for p in &mesh.points {
                writeln!(
                    out,
                    "{:.6} {:.6} {:.6}",
                    p.position[0], p.position[1], p.position[2]
                )
                .unwrap();
            }
            for t in &triangles {
                writeln!(out, "3 {} {} {}", t[0], t[1], t[2]).unwrap();
            }
        }
        MeshFormat::Obj => {
            for p in &mesh.points {
                writeln!(
                    out,
                    "v {:.6} {:.6} {:.6}",
                    p.position[0], p.position[1], p.position[2]
                )
                .unwrap();
            }
            for e in &mesh.edges {
                writeln!(out, "l {} {}", e[0] + 1, e[1] + 1).unwrap();
            }
            for t in &triangles {
                writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1).unwrap();
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::cset::CubicalSet;

    #[test]
    fn chains_of_the_square_poset() {
        let chains = corner_chains(2);
        assert_eq!(chains.iter().filter(|c| c.len() == 1).count(), 4);
        assert_eq!(chains.iter().filter(|c| c.len() == 2).count(), 5);
        assert_eq!(chains.iter().filter(|c| c.len() == 3).count(), 2);
    }

    #[test]
    fn triangulated_square_counts() {
        let y2 = CubicalSet::representable(2, 2).unwrap();
        let complex = triangulate(&y2).unwrap();
        assert_eq!(complex.count_of_dim(0), 4);
        assert_eq!(complex.count_of_dim(1), 5);
        assert_eq!(complex.count_of_dim(2), 2);
        assert_eq!(complex.top_simplex_count(), 2);
        assert_eq!(complex.euler_characteristic(), 1);
    }

    #[test]
    fn triangulated_interval_and_point() {
        let y1 = CubicalSet::representable(1, 1).unwrap();
        let c = triangulate(&y1).unwrap();
        assert_eq!(c.count_of_dim(0), 2);
        assert_eq!(c.count_of_dim(1), 1);
        let pt = corpus::point(1).unwrap();
        let c = triangulate(&pt).unwrap();
        assert_eq!(c.count_of_dim(0), 1);
        assert_eq!(c.top_simplex_count(), 1);
    }

    #[test]
    fn triangulated_cube_has_six_top_simplices() {
        let y3 = CubicalSet::representable(3, 3).unwrap();
        let complex = triangulate(&y3).unwrap();
        assert_eq!(complex.count_of_dim(0), 8);
        assert_eq!(complex.count_of_dim(1), 19);
        assert_eq!(complex.count_of_dim(2), 18);
        assert_eq!(complex.count_of_dim(3), 6);
        assert_eq!(complex.top_simplex_count(), 6);
        assert_eq!(complex.euler_characteristic(), 1);
    }

    #[test]
    fn circle_triangulation_has_euler_zero() {
        let circle = corpus::circle(1).unwrap();
        let complex = triangulate(&circle).unwrap();
        assert_eq!(complex.count_of_dim(0), 1);
        assert_eq!(complex.count_of_dim(1), 1);
        assert_eq!(complex.euler_characteristic(), 0);
        // the loop's two corners are the same vertex
        let (_, loop_corners) = complex
            .simplices()
            .find(|(d, _)| *d == 1)
            .expect("one edge");
        assert_eq!(loop_corners[0], loop_corners[1]);
    }

    #[test]
    fn torus_triangulation_has_euler_zero() {
        let torus = corpus::torus(2).unwrap();
        let complex = triangulate(&torus).unwrap();
        assert_eq!(complex.count_of_dim(0), 1);
        assert_eq!(complex.count_of_dim(1), 3);
        assert_eq!(complex.count_of_dim(2), 2);
        assert_eq!(complex.euler_characteristic(), 0);
        assert_eq!(complex.top_simplex_count(), 2);
    }

    #[test]
    fn cube_boundary_triangulation_is_a_sphere() {
        let shell = corpus::cube_boundary(2).unwrap();
        let complex = triangulate(&shell).unwrap();
        assert_eq!(complex.count_of_dim(0), 8);
        assert_eq!(complex.count_of_dim(1), 18);
        assert_eq!(complex.count_of_dim(2), 12);
        assert_eq!(complex.euler_characteristic(), 2);
        assert_eq!(complex.top_simplex_count(), 12);
    }

    #[test]
    fn characteristics_agree_across_the_corpus() {
        let cases = [
            ("point", corpus::point(1).unwrap()),
            ("interval", corpus::interval(1).unwrap()),
            ("circle", corpus::circle(1).unwrap()),
            ("square", corpus::square(2).unwrap()),
            ("torus", corpus::torus(2).unwrap()),
            ("cube boundary", corpus::cube_boundary(2).unwrap()),
        ];
        for (name, set) in &cases {
            let complex = triangulate(set).unwrap();
            let mesh = realize_numeric(set, 3).unwrap();
            assert_eq!(
                complex.euler_characteristic(),
                mesh.euler_characteristic(),
                "characteristic mismatch on the {name}"
            );
        }
    }

    #[test]
    fn top_simplices_match_cell_factorials() {
        // one square contributes 2, a filled square presentation likewise
        let square = corpus::square(2).unwrap();
        let complex = triangulate(&square).unwrap();
        assert_eq!(complex.top_simplex_count(), 2);
        let interval = corpus::interval(1).unwrap();
        assert_eq!(triangulate(&interval).unwrap().top_simplex_count(), 1);
    }

    #[test]
    fn realize_point_and_interval() {
        let pt = corpus::point(1).unwrap();
        let mesh = realize_numeric(&pt, 3).unwrap();
        assert_eq!(mesh.points.len(), 1);

        let interval = CubicalSet::representable(1, 1).unwrap();
        let mesh = realize_numeric(&interval, 5).unwrap();
        assert_eq!(mesh.points.len(), 5);
        assert_eq!(mesh.edges.len(), 4);
        // the endpoints are the grid ends of the single presented edge
        let coords: Vec<Vec<(u32, u32)>> = mesh.points.iter().map(|p| p.coords.clone()).collect();
        assert!(coords.contains(&vec![(0, 4)]));
        assert!(coords.contains(&vec![(4, 4)]));
    }

    #[test]
    fn realize_torus_point_count_and_euler() {
        let torus = corpus::torus(2).unwrap();
        let mesh = realize_numeric(&torus, 3).unwrap();
        // a 3x3 grid glued along both seams leaves (s-1)^2 points
        assert_eq!(mesh.points.len(), 4);
        assert_eq!(mesh.euler_characteristic(), 0);
        let complex = triangulate(&torus).unwrap();
        assert_eq!(complex.euler_characteristic(), mesh.euler_characteristic());
    }

    #[test]
    fn realize_matches_triangulation_on_the_shell() {
        let shell = corpus::cube_boundary(2).unwrap();
        let mesh = realize_numeric(&shell, 3).unwrap();
        assert_eq!(mesh.euler_characteristic(), 2);
        assert_eq!(mesh.points.len(), 26);
    }

    #[test]
    fn gluing_respects_composition() {
        // gluing under two actions in sequence identifies the same points
        // as gluing under their composite
        let torus = corpus::torus(2).unwrap();
        let s = 3usize;
        let tokens = GridTokens::new(&torus, s);
        let mut uf = UnionFind::new(tokens.total);
        let chain = IndexChain {
            top: (s - 1) as u32,
        };
        for n in 0..=torus.max_dim() {
            for m in 0..=torus.max_dim() {
                for f in cube::enumerate_hom(m, n).unwrap() {
                    for index in 0..torus.cell_count(n) {
                        let c = Cell { dim: n, index };
                        if tokens.id(c, 0).is_none() {
                            continue;
                        }
                        let c_src = torus.act(&f, c).unwrap();
                        if tokens.id(c_src, 0).is_none() {
                            continue;
                        }
                        for p in grid_points(m, s) {
                            let q = f.evaluate(&chain, &p).unwrap();
                            uf.union(
                                tokens.id(c_src, encode_grid(&p, s)).unwrap(),
                                tokens.id(c, encode_grid(&q, s)).unwrap(),
                            );
                        }
                    }
                }
            }
        }
        let gens = cube::generator_morphisms(torus.max_dim());
        for f in &gens {
            for g in &gens {
                if g.src() != f.dst() {
                    continue;
                }
                let composite = g.compose(f).unwrap();
                for index in 0..torus.cell_count(g.dst()) {
                    let c = Cell {
                        dim: g.dst(),
                        index,
                    };
                    if tokens.id(c, 0).is_none() {
                        continue;
                    }
                    let c_src = torus.act(&composite, c).unwrap();
                    if tokens.id(c_src, 0).is_none() {
                        continue;
                    }
                    for p in grid_points(composite.src(), s) {
                        let q = composite.evaluate(&chain, &p).unwrap();
                        let a = uf.find(tokens.id(c_src, encode_grid(&p, s)).unwrap());
                        let b = uf.find(tokens.id(c, encode_grid(&q, s)).unwrap());
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn realization_invariant_under_explicit_degenerate_cells() {
        use crate::cset::Presentation;
        use crate::cube::End;
        let plain = corpus::circle(1).unwrap();
        let padded = {
            let eps = cube::degeneracy(0, 0).unwrap();
            let p = Presentation::new(1)
                .cell("v", 0)
                .cell("e", 1)
                .face("e", 0, End::Bot, "v")
                .face("e", 0, End::Top, "v")
                .cell("pad", 1)
                .alias("pad", "v", eps);
            CubicalSet::from_presentation(&p).unwrap()
        };
        let a = realize_numeric(&plain, 4).unwrap();
        let b = realize_numeric(&padded, 4).unwrap();
        assert_eq!(a.points.len(), b.points.len());
        assert_eq!(a.edges.len(), b.edges.len());
        assert_eq!(a.euler_characteristic(), b.euler_characteristic());
    }

    #[test]
    fn exports_are_deterministic_and_well_formed() {
        let square = corpus::square(2).unwrap();
        let mesh = realize_numeric(&square, 3).unwrap();
        let off1 = export_mesh(&mesh, MeshFormat::Off).unwrap();
        let mesh2 = realize_numeric(&square, 3).unwrap();
        let off2 = export_mesh(&mesh2, MeshFormat::Off).unwrap();
        assert_eq!(off1, off2);
        let mut lines = off1.lines();
        assert_eq!(lines.next(), Some("OFF"));
        let counts = lines.next().unwrap();
        assert_eq!(
            counts,
            format!(
                "{} {} {}",
                mesh.points.len(),
                mesh.triangles.len(),
                mesh.edges.len()
            )
        );

        let circle = corpus::circle(1).unwrap();
        let mesh = realize_numeric(&circle, 3).unwrap();
        let obj = export_mesh(&mesh, MeshFormat::Obj).unwrap();
        assert!(obj.lines().any(|l| l.starts_with("v ")));
        assert!(obj.lines().any(|l| l.starts_with("l ")));
    }

    #[test]
    fn empty_set_exports_zero_counts() {
        let empty = CubicalSet::from_presentation(&crate::cset::Presentation::new(1)).unwrap();
        let mesh = realize_numeric(&empty, 3).unwrap();
        let off = export_mesh(&mesh, MeshFormat::Off).unwrap();
        assert_eq!(off, "OFF\n0 0 0\n");
    }

    #[test]
    fn sample_count_must_be_at_least_two() {
        let pt = corpus::point(1).unwrap();
        assert!(realize_numeric(&pt, 1).is_err());
    }
}
