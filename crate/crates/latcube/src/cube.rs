//! The cube category: objects are natural numbers, a morphism `m -> n` is
//! an `n`-tuple of free-lattice elements over `m` generators, composed by
//! substitution. Semantically such a morphism is the map `I^m -> I^n`
//! obtained by evaluating each component; algebraically it is a lattice
//! homomorphism in the opposite direction, determined by where it sends
//! the `n` generators.
//!
//! The generating morphisms are faces (insert an endpoint), degeneracies
//! (drop a coordinate), connections (merge two coordinates with meet or
//! join), diagonals (duplicate a coordinate) and symmetries (permute).
//! Reversions are not part of this theory; the De Morgan variant lives in
//! [`DmMorphism`].

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{
    enumerate_free, enumerate_free_dm, free_lattice_size, DeMorganElement, LatticeElement,
    ValueLattice,
};
use crate::term;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeMorphism {
    src: usize,
    dst: usize,
    components: Vec<LatticeElement>,
}

impl CubeMorphism {
    pub fn new(src: usize, dst: usize, components: Vec<LatticeElement>) -> Result<Self> {
        if components.len() != dst {
            return Err(Error::input(format!(
                "morphism {src} -> {dst} needs {dst} components, got {}",
                components.len()
            )));
        }
        if components.iter().any(|c| c.n_generators() != src) {
            return Err(Error::input(format!(
                "components of a morphism {src} -> {dst} must have {src} generators"
            )));
        }
        Ok(CubeMorphism {
            src,
            dst,
            components,
        })
    }

    pub fn identity(n: usize) -> Self {
        let components = (0..n)
            .map(|i| LatticeElement::generator(n, i).expect("index in range"))
            .collect();
        CubeMorphism {
            src: n,
            dst: n,
            components,
        }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn components(&self) -> &[LatticeElement] {
        &self.components
    }

    /// Kleisli composition: `g.compose(f)` is `g` after `f`, obtained by
    /// substituting the components of `f` into each component of `g`.
    pub fn compose(&self, f: &CubeMorphism) -> Result<CubeMorphism> {
        if f.dst != self.src {
            return Err(Error::input(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.src, self.dst, f.src, f.dst
            )));
        }
        let components = self
            .components
            .iter()
            .map(|c| c.substitute(&f.components, f.src))
            .collect::<Result<Vec<_>>>()?;
        CubeMorphism::new(f.src, self.dst, components)
    }

    /// Componentwise evaluation, giving the underlying map of points.
    pub fn evaluate<L: ValueLattice>(
        &self,
        lattice: &L,
        point: &[L::Value],
    ) -> Result<Vec<L::Value>> {
        self.components
            .iter()
            .map(|c| c.evaluate(lattice, point))
            .collect()
    }

    /// Evaluation over the two-element lattice, bitmask to bitmask.
    pub fn evaluate_bits(&self, point: u32) -> u32 {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| c.eval_bits(point))
            .map(|(k, _)| 1u32 << k)
            .sum()
    }
}

impl fmt::Display for CubeMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "cube {} -> {} : [{}]",
            self.src,
            self.dst,
            comps.join(", ")
        )
    }
}

/// Parse the textual morphism format, e.g. `cube 2 -> 1 : [x0 v x1]`.
pub fn parse_morphism(input: &str) -> Result<CubeMorphism> {
    let rest = input
        .trim()
        .strip_prefix("cube")
        .ok_or_else(|| Error::input("morphism must start with 'cube'"))?;
    let (dims, comps) = rest
        .split_once(':')
        .ok_or_else(|| Error::input("morphism needs ':' before its components"))?;
    let (src_s, dst_s) = dims
        .split_once("->")
        .ok_or_else(|| Error::input("morphism needs 'm -> n' dimensions"))?;
    let src: usize = src_s
        .trim()
        .parse()
        .map_err(|_| Error::input("bad source dimension"))?;
    let dst: usize = dst_s
        .trim()
        .parse()
        .map_err(|_| Error::input("bad target dimension"))?;
    let comps = comps.trim();
    let inner = comps
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::input("components must be bracketed"))?;
    let parts: Vec<&str> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner.split(',').collect()
    };
    let components = parts
        .iter()
        .map(|p| crate::lattice::normalize(&term::parse(p)?, src))
        .collect::<Result<Vec<_>>>()?;
    CubeMorphism::new(src, dst, components)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Bot,
    Top,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConnectionKind {
    Meet,
    Join,
}

/// The named generating morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `n-1 -> n`: insert the constant `end` at slot `i <= n-1`.
    Face { n: usize, i: usize, end: End },
    /// `n+1 -> n`: drop coordinate `i <= n`.
    Degeneracy { n: usize, i: usize },
    /// `n+1 -> n`: merge coordinates `i < j` of the source with meet or join.
    Connection {
        n: usize,
        i: usize,
        j: usize,
        kind: ConnectionKind,
    },
    /// `n -> n+1`: duplicate source coordinate `i`, placing the copy at
    /// target slot `j`.
    Diagonal { n: usize, i: usize, j: usize },
    /// `n -> n`: coordinate permutation; component `k` is `x_{perm[k]}`.
    Symmetry { n: usize, perm: Vec<usize> },
}

/// Construct the named generator, validating its indices.
pub fn generator(g: &Generator) -> Result<CubeMorphism> {
    match g {
        Generator::Face { n, i, end } => face(*n, *i, *end),
        Generator::Degeneracy { n, i } => degeneracy(*n, *i),
        Generator::Connection { n, i, j, kind } => connection(*n, *i, *j, *kind),
        Generator::Diagonal { n, i, j } => diagonal(*n, *i, *j),
        Generator::Symmetry { n, perm } => symmetry(*n, perm),
    }
}

/// Face `n-1 -> n`: insert the constant endpoint at slot `i`.
pub fn face(n: usize, i: usize, end: End) -> Result<CubeMorphism> {
    if n == 0 || i >= n {
        return Err(Error::input(format!(
            "face slot {i} out of range for target dimension {n}"
        )));
    }
    let m = n - 1;
    let mut components = Vec::with_capacity(n);
    for k in 0..n {
        if k == i {
            components.push(match end {
                End::Bot => LatticeElement::bot(m),
                End::Top => LatticeElement::top(m),
            });
        } else {
            let idx = if k < i { k } else { k - 1 };
            components.push(LatticeElement::generator(m, idx)?);
        }
    }
    CubeMorphism::new(m, n, components)
}

/// Degeneracy `n+1 -> n`: drop source coordinate `i`.
pub fn degeneracy(n: usize, i: usize) -> Result<CubeMorphism> {
    if i > n {
        return Err(Error::input(format!(
            "degeneracy slot {i} out of range for source dimension {}",
            n + 1
        )));
    }
    let m = n + 1;
    let components = (0..n)
        .map(|k| LatticeElement::generator(m, if k < i { k } else { k + 1 }))
        .collect::<Result<Vec<_>>>()?;
    CubeMorphism::new(m, n, components)
}

/// Connection `n+1 -> n`: merge source coordinates `i < j` into target
/// slot `i` with meet or join.
pub fn connection(n: usize, i: usize, j: usize, kind: ConnectionKind) -> Result<CubeMorphism> {
    let m = n + 1;
    if i >= j || j >= m || i >= n {
        return Err(Error::input(format!(
            "connection indices ({i}, {j}) out of range for source dimension {m}"
        )));
    }
    let xi = LatticeElement::generator(m, i)?;
    let xj = LatticeElement::generator(m, j)?;
    let merged = match kind {
        ConnectionKind::Meet => xi.meet(&xj),
        ConnectionKind::Join => xi.join(&xj),
    };
    let components = (0..n)
        .map(|k| {
            if k == i {
                Ok(merged.clone())
            } else {
                let idx = if k < j { k } else { k + 1 };
                LatticeElement::generator(m, idx)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    CubeMorphism::new(m, n, components)
}

/// Diagonal `n -> n+1`: duplicate source coordinate `i`, the copy landing
/// at target slot `j`.
pub fn diagonal(n: usize, i: usize, j: usize) -> Result<CubeMorphism> {
    if i >= n || j > n {
        return Err(Error::input(format!(
            "diagonal indices ({i}, {j}) out of range for source dimension {n}"
        )));
    }
    let components = (0..=n)
        .map(|k| {
            if k == j {
                LatticeElement::generator(n, i)
            } else {
                let idx = if k < j { k } else { k - 1 };
                LatticeElement::generator(n, idx)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    CubeMorphism::new(n, n + 1, components)
}

/// Symmetry `n -> n`: component `k` is `x_{perm[k]}`.
pub fn symmetry(n: usize, perm: &[usize]) -> Result<CubeMorphism> {
    if perm.len() != n {
        return Err(Error::input(format!(
            "permutation length {} != {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::input("not a permutation".to_string()));
        }
        seen[p] = true;
    }
    let components = perm
        .iter()
        .map(|&p| LatticeElement::generator(n, p))
        .collect::<Result<Vec<_>>>()?;
    CubeMorphism::new(n, n, components)
}

/// The standard generating set between dimensions `<= max_dim`: faces,
/// degeneracies, adjacent connections of both kinds, adjacent diagonals
/// and adjacent transpositions. Every morphism of the category is a
/// composite of these.
pub fn generator_morphisms(max_dim: usize) -> Vec<CubeMorphism> {
    let mut out = Vec::new();
    for n in 1..=max_dim {
        for i in 0..n {
            out.push(face(n, i, End::Bot).unwrap());
            out.push(face(n, i, End::Top).unwrap());
        }
    }
    for n in 0..max_dim {
        for i in 0..=n {
            out.push(degeneracy(n, i).unwrap());
        }
        for i in 0..n {
            out.push(connection(n, i, i + 1, ConnectionKind::Meet).unwrap());
            out.push(connection(n, i, i + 1, ConnectionKind::Join).unwrap());
        }
    }
    for n in 1..max_dim {
        for i in 0..n {
            out.push(diagonal(n, i, i + 1).unwrap());
        }
    }
    for n in 2..=max_dim {
        for i in 0..n - 1 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, i + 1);
            out.push(symmetry(n, &perm).unwrap());
        }
    }
    out
}

/// `|hom(m, n)| = |DL(m)|^n`, with a capacity error past the enumeration cap.
pub fn hom_count(m: usize, n: usize) -> Result<usize> {
    let base = free_lattice_size(m)?;
    base.checked_pow(
        u32::try_from(n).map_err(|_| Error::capacity("hom target dimension too large"))?,
    )
    .ok_or_else(|| Error::capacity(format!("|hom({m}, {n})| exceeds machine range")))
}

/// All morphisms `m -> n` in canonical order (component tuples ordered
/// lexicographically over the canonical element order).
pub fn enumerate_hom(m: usize, n: usize) -> Result<Vec<CubeMorphism>> {
    let elems = enumerate_free(m)?;
    let total = hom_count(m, n)?;
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0usize; n];
    loop {
        let components = idx.iter().map(|&i| elems[i].clone()).collect();
        out.push(CubeMorphism::new(m, n, components)?);
        // odometer over component indices, last component fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// The bipointed cube category.
// ---------------------------------------------------------------------------

/// A component of a bipointed morphism: a bare generator or an endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BipointedComponent {
    Gen(usize),
    Const(End),
}

/// A morphism of the cube category with diagonals but no connections:
/// every component is a single generator or an endpoint constant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BipointedMorphism {
    src: usize,
    dst: usize,
    components: Vec<BipointedComponent>,
}

impl BipointedMorphism {
    pub fn new(src: usize, dst: usize, components: Vec<BipointedComponent>) -> Result<Self> {
        if components.len() != dst {
            return Err(Error::input(format!(
                "bipointed morphism {src} -> {dst} needs {dst} components"
            )));
        }
        for c in &components {
            if let BipointedComponent::Gen(i) = c {
                if *i >= src {
                    return Err(Error::input(format!(
                        "generator x{i} out of range for source dimension {src}"
                    )));
                }
            }
        }
        Ok(BipointedMorphism {
            src,
            dst,
            components,
        })
    }

    pub fn identity(n: usize) -> Self {
        BipointedMorphism {
            src: n,
            dst: n,
            components: (0..n).map(BipointedComponent::Gen).collect(),
        }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn components(&self) -> &[BipointedComponent] {
        &self.components
    }

    pub fn compose(&self, f: &BipointedMorphism) -> Result<BipointedMorphism> {
        if f.dst != self.src {
            return Err(Error::input(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.src, self.dst, f.src, f.dst
            )));
        }
        let components = self
            .components
            .iter()
            .map(|c| match c {
                BipointedComponent::Gen(i) => f.components[*i],
                konst => *konst,
            })
            .collect();
        BipointedMorphism::new(f.src, self.dst, components)
    }
}

/// All bipointed morphisms `m -> n`; there are `(m + 2)^n`.
pub fn enumerate_bipointed(m: usize, n: usize) -> Vec<BipointedMorphism> {
    let mut options: Vec<BipointedComponent> = vec![
        BipointedComponent::Const(End::Bot),
        BipointedComponent::Const(End::Top),
    ];
    options.extend((0..m).map(BipointedComponent::Gen));
    options.sort();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let components = idx.iter().map(|&i| options[i]).collect();
        out.push(BipointedMorphism::new(m, n, components).expect("valid components"));
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < options.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The comparison functor into the full cube category: generators go to
/// generators and the two points to the lattice bounds. It is faithful but
/// not full; the connections are not in its image.
pub fn from_bipointed(f: &BipointedMorphism) -> CubeMorphism {
    let components = f
        .components
        .iter()
        .map(|c| match c {
            BipointedComponent::Gen(i) => {
                LatticeElement::generator(f.src, *i).expect("index in range")
            }
            BipointedComponent::Const(End::Bot) => LatticeElement::bot(f.src),
            BipointedComponent::Const(End::Top) => LatticeElement::top(f.src),
        })
        .collect();
    CubeMorphism::new(f.src, f.dst, components).expect("component count matches")
}

// ---------------------------------------------------------------------------
// The De Morgan variant.
// ---------------------------------------------------------------------------

/// A morphism of the De Morgan cube theory: components are free De Morgan
/// algebra elements, composed by the De Morgan substitution. This theory
/// has the reversion `x -> x*` as an extra 1 -> 1 generator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DmMorphism {
    src: usize,
    dst: usize,
    components: Vec<DeMorganElement>,
}

impl DmMorphism {
    pub fn new(src: usize, dst: usize, components: Vec<DeMorganElement>) -> Result<Self> {
        if components.len() != dst || components.iter().any(|c| c.n_vars() != src) {
            return Err(Error::input(format!(
                "De Morgan morphism {src} -> {dst} needs {dst} components over {src} variables"
            )));
        }
        Ok(DmMorphism {
            src,
            dst,
            components,
        })
    }

    pub fn identity(n: usize) -> Self {
        let components = (0..n)
            .map(|i| DeMorganElement::generator(n, i).expect("index in range"))
            .collect();
        DmMorphism {
            src: n,
            dst: n,
            components,
        }
    }

    /// The reversion `1 -> 1` sending the generator to its involute.
    pub fn reversion() -> Self {
        DmMorphism {
            src: 1,
            dst: 1,
            components: vec![DeMorganElement::negated_generator(1, 0).expect("index in range")],
        }
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn components(&self) -> &[DeMorganElement] {
        &self.components
    }

    pub fn compose(&self, f: &DmMorphism) -> Result<DmMorphism> {
        if f.dst != self.src {
            return Err(Error::input(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.src, self.dst, f.src, f.dst
            )));
        }
        let components = self
            .components
            .iter()
            .map(|c| c.substitute(&f.components, f.src))
            .collect::<Result<Vec<_>>>()?;
        DmMorphism::new(f.src, self.dst, components)
    }
}

/// `|hom_DM(m, n)| = |DL(2m)|^n`.
pub fn dm_hom_count(m: usize, n: usize) -> Result<usize> {
    let base = free_lattice_size(2 * m)?;
    base.checked_pow(
        u32::try_from(n).map_err(|_| Error::capacity("hom target dimension too large"))?,
    )
    .ok_or_else(|| Error::capacity(format!("|hom_DM({m}, {n})| exceeds machine range")))
}

/// All De Morgan morphisms `m -> n` in canonical order.
pub fn enumerate_dm_hom(m: usize, n: usize) -> Result<Vec<DmMorphism>> {
    let elems = enumerate_free_dm(m)?;
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let components = idx.iter().map(|&i| elems[i].clone()).collect();
        out.push(DmMorphism::new(m, n, components)?);
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{normalize, Rational, UnitInterval};
    use crate::term::parse;

    fn nf(s: &str, n: usize) -> LatticeElement {
        normalize(&parse(s).unwrap(), n).unwrap()
    }

    #[test]
    fn identity_laws() {
        for f in enumerate_hom(2, 1).unwrap() {
            assert_eq!(CubeMorphism::identity(1).compose(&f).unwrap(), f);
            assert_eq!(f.compose(&CubeMorphism::identity(2)).unwrap(), f);
        }
    }

    #[test]
    fn connection_after_diagonal_is_identity() {
        let conn = connection(1, 0, 1, ConnectionKind::Join).unwrap();
        let diag = diagonal(1, 0, 1).unwrap();
        assert_eq!(conn.compose(&diag).unwrap(), CubeMorphism::identity(1));
    }

    #[test]
    fn face_then_degeneracy_is_identity_on_the_point() {
        let f = face(1, 0, End::Bot).unwrap(); // 0 -> 1
        let d = degeneracy(0, 0).unwrap(); // 1 -> 0
        assert_eq!(d.compose(&f).unwrap(), CubeMorphism::identity(0));
        // the other composite is the constant-bottom endomap of the interval
        let other = f.compose(&d).unwrap();
        assert_eq!(other.components(), &[LatticeElement::bot(1)]);
    }

    #[test]
    fn named_generator_examples() {
        let f = face(1, 0, End::Top).unwrap();
        assert_eq!(f.src(), 0);
        assert_eq!(f.dst(), 1);
        assert!(f.components()[0].is_top());

        let conn = connection(1, 0, 1, ConnectionKind::Join).unwrap();
        assert_eq!(conn.components()[0], nf("x0 v x1", 2));

        let diag = diagonal(1, 0, 1).unwrap();
        assert_eq!(diag.components(), &[nf("x0", 1), nf("x0", 1)]);
    }

    #[test]
    fn join_connection_after_top_face_is_constant_top() {
        // inserting 1 into a join-connection forces the constant 1
        let conn = connection(1, 0, 1, ConnectionKind::Join).unwrap(); // 2 -> 1
        let top_face = face(2, 1, End::Top).unwrap(); // 1 -> 2
        let composite = conn.compose(&top_face).unwrap();
        assert_eq!(composite.components(), &[LatticeElement::top(1)]);
    }

    #[test]
    fn swap_is_an_involution() {
        let swap = symmetry(2, &[1, 0]).unwrap();
        assert_eq!(swap.compose(&swap).unwrap(), CubeMorphism::identity(2));
    }

    #[test]
    fn face_face_identity() {
        // for i < j: d_j . d_i = d_i . d_{j-1}
        for n in 1..=2usize {
            for j in 0..=n {
                for i in 0..j {
                    for (ei, ej) in [
                        (End::Bot, End::Top),
                        (End::Top, End::Bot),
                        (End::Bot, End::Bot),
                    ] {
                        let lhs = face(n + 1, j, ej)
                            .unwrap()
                            .compose(&face(n, i, ei).unwrap())
                            .unwrap();
                        let rhs = face(n + 1, i, ei)
                            .unwrap()
                            .compose(&face(n, j - 1, ej).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn degeneracy_face_identities() {
        for n in 1..=2usize {
            for i in 0..n {
                for end in [End::Bot, End::Top] {
                    let d = degeneracy(n - 1, i).unwrap(); // n -> n-1
                    let f = face(n, i, end).unwrap(); // n-1 -> n
                    assert_eq!(d.compose(&f).unwrap(), CubeMorphism::identity(n - 1));
                }
            }
        }
    }

    #[test]
    fn connection_face_identities() {
        // restricting a join-connection square to a bottom face recovers
        // the identity, to a top face the constant top
        let conn = connection(1, 0, 1, ConnectionKind::Join).unwrap();
        let bottom0 = face(2, 0, End::Bot).unwrap();
        let got = conn.compose(&bottom0).unwrap();
        assert_eq!(got, CubeMorphism::identity(1));
        let bottom1 = face(2, 1, End::Bot).unwrap();
        assert_eq!(conn.compose(&bottom1).unwrap(), CubeMorphism::identity(1));
    }

    #[test]
    fn symmetry_naturality_with_connections() {
        // merging after a swap equals merging directly for the meet case
        let swap = symmetry(2, &[1, 0]).unwrap();
        let conn = connection(1, 0, 1, ConnectionKind::Meet).unwrap();
        assert_eq!(conn.compose(&swap).unwrap(), conn);
    }

    #[test]
    fn hom_counts() {
        assert_eq!(hom_count(1, 1).unwrap(), 3);
        assert_eq!(hom_count(2, 1).unwrap(), 6);
        assert_eq!(hom_count(2, 2).unwrap(), 36);
        assert_eq!(enumerate_hom(1, 1).unwrap().len(), 3);
        assert_eq!(enumerate_hom(2, 2).unwrap().len(), 36);
        assert_eq!(enumerate_hom(3, 2).unwrap().len(), 400);
        assert!(hom_count(5, 1).is_err());
    }

    #[test]
    fn semantic_soundness_small() {
        let f = enumerate_hom(2, 1).unwrap();
        let g = enumerate_hom(1, 2).unwrap();
        let half = Rational::new(1, 2);
        let third = Rational::new(1, 3);
        for ff in &f {
            for gg in &g {
                let comp = gg.compose(ff).unwrap();
                let p = vec![half, third];
                let via = gg
                    .evaluate(&UnitInterval, &ff.evaluate(&UnitInterval, &p).unwrap())
                    .unwrap();
                let direct = comp.evaluate(&UnitInterval, &p).unwrap();
                assert_eq!(via, direct);
            }
        }
    }

    #[test]
    fn morphism_text_roundtrip() {
        let m = parse_morphism("cube 2 -> 1 : [x0 v x1]").unwrap();
        assert_eq!(m, connection(1, 0, 1, ConnectionKind::Join).unwrap());
        let printed = m.to_string();
        assert_eq!(parse_morphism(&printed).unwrap(), m);
        let id0 = parse_morphism("cube 0 -> 0 : []").unwrap();
        assert_eq!(id0, CubeMorphism::identity(0));
    }

    #[test]
    fn bipointed_hom_2_1_has_four_elements() {
        let bip = enumerate_bipointed(2, 1);
        assert_eq!(bip.len(), 4);
        let image: std::collections::BTreeSet<CubeMorphism> =
            bip.iter().map(from_bipointed).collect();
        assert_eq!(image.len(), 4);
        let full = enumerate_hom(2, 1).unwrap();
        assert_eq!(full.len(), 6);
        let missing: Vec<&CubeMorphism> = full.iter().filter(|m| !image.contains(m)).collect();
        assert_eq!(missing.len(), 2);
        let meets: Vec<String> = missing
            .iter()
            .map(|m| m.components()[0].to_string())
            .collect();
        assert!(meets.contains(&"x0 ^ x1".to_string()));
        assert!(meets.contains(&"x0 v x1".to_string()));
    }

    #[test]
    fn bipointed_functor_is_faithful_on_small_homs() {
        for m in 0..=2usize {
            for n in 0..=2usize {
                let all = enumerate_bipointed(m, n);
                let image: std::collections::BTreeSet<CubeMorphism> =
                    all.iter().map(from_bipointed).collect();
                assert_eq!(image.len(), all.len());
            }
        }
    }

    #[test]
    fn bipointed_functor_preserves_composition() {
        for f in enumerate_bipointed(1, 2) {
            for g in enumerate_bipointed(2, 1) {
                let lhs = from_bipointed(&g.compose(&f).unwrap());
                let rhs = from_bipointed(&g).compose(&from_bipointed(&f)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn dm_reversion_is_an_involution() {
        let r = DmMorphism::reversion();
        assert_eq!(r.compose(&r).unwrap(), DmMorphism::identity(1));
    }

    #[test]
    fn dm_hom_counts() {
        assert_eq!(dm_hom_count(1, 1).unwrap(), 6);
        assert_eq!(enumerate_dm_hom(1, 1).unwrap().len(), 6);
    }
}
