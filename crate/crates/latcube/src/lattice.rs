//! Free bounded distributive lattices with canonical normal forms, free De
//! Morgan algebras, and finite distributive lattices given by explicit
//! order tables.
//!
//! An element of the free lattice on `n` generators is kept in monotone
//! disjunctive normal form: an antichain of clauses, each clause a set of
//! generator indices standing for the meet of those generators, the whole
//! element being the join of its clauses. The empty clause set is bottom,
//! the singleton empty clause is top. The antichain of inclusion-minimal
//! clauses is unique, so structural equality decides lattice equality.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::term::Term;

/// A clause is a bitmask of generator indices (meet of those generators).
pub type Clause = u32;

pub const MAX_GENERATORS: usize = 16;

/// Hard cap for free-lattice enumeration. The free lattice sizes grow as
/// the Dedekind numbers (2, 3, 6, 20, 168, ...); everything here stays at
/// desk scale with n <= 4.
pub const MAX_ENUMERATION_GENERATORS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeElement {
    n_generators: usize,
    clauses: BTreeSet<Clause>,
}

fn check_generator_count(n: usize) -> Result<()> {
    if n > MAX_GENERATORS {
        return Err(Error::capacity(format!(
            "at most {MAX_GENERATORS} generators supported, got {n}"
        )));
    }
    Ok(())
}

/// Remove every clause that strictly contains another clause of the set,
/// leaving the antichain of inclusion-minimal clauses.
fn reduce_to_antichain(clauses: BTreeSet<Clause>) -> BTreeSet<Clause> {
    clauses
        .iter()
        .filter(|&&c| !clauses.iter().any(|&d| d != c && c & d == d))
        .copied()
        .collect()
}

impl LatticeElement {
    pub fn bot(n_generators: usize) -> Self {
        LatticeElement {
            n_generators,
            clauses: BTreeSet::new(),
        }
    }

    pub fn top(n_generators: usize) -> Self {
        LatticeElement {
            n_generators,
            clauses: [0 as Clause].into_iter().collect(),
        }
    }

    pub fn generator(n_generators: usize, index: usize) -> Result<Self> {
        check_generator_count(n_generators)?;
        if index >= n_generators {
            return Err(Error::input(format!(
                "generator x{index} out of range for {n_generators} generators"
            )));
        }
        Ok(LatticeElement {
            n_generators,
            clauses: [1 << index as Clause].into_iter().collect(),
        })
    }

    /// Build from raw clause bitmasks; reduces to the canonical antichain.
    pub fn from_clauses(
        n_generators: usize,
        clauses: impl IntoIterator<Item = Clause>,
    ) -> Result<Self> {
        check_generator_count(n_generators)?;
        let set: BTreeSet<Clause> = clauses.into_iter().collect();
        let limit: Clause = if n_generators == 32 {
            u32::MAX
        } else {
            (1 << n_generators) - 1
        };
        for &c in &set {
            if c & !limit != 0 {
                return Err(Error::input(format!(
                    "clause {c:#b} uses generators beyond x{}",
                    n_generators.saturating_sub(1)
                )));
            }
        }
        Ok(LatticeElement {
            n_generators,
            clauses: reduce_to_antichain(set),
        })
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn clauses(&self) -> &BTreeSet<Clause> {
        &self.clauses
    }

    /// Clauses as sorted index lists, ordered lexicographically; this is the
    /// canonical serialization order.
    pub fn clause_lists(&self) -> Vec<Vec<usize>> {
        let mut lists: Vec<Vec<usize>> = self
            .clauses
            .iter()
            .map(|&c| {
                (0..self.n_generators)
                    .filter(|&i| c >> i & 1 == 1)
                    .collect()
            })
            .collect();
        lists.sort();
        lists
    }

    pub fn is_bot(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn is_top(&self) -> bool {
        self.clauses.len() == 1 && self.clauses.contains(&0)
    }

    pub fn join(&self, other: &Self) -> Self {
        assert_eq!(
            self.n_generators, other.n_generators,
            "join of elements over different generator sets"
        );
        let union: BTreeSet<Clause> = self.clauses.union(&other.clauses).copied().collect();
        LatticeElement {
            n_generators: self.n_generators,
            clauses: reduce_to_antichain(union),
        }
    }

    pub fn meet(&self, other: &Self) -> Self {
        assert_eq!(
            self.n_generators, other.n_generators,
            "meet of elements over different generator sets"
        );
        let mut prods = BTreeSet::new();
        for &a in &self.clauses {
            for &b in &other.clauses {
                prods.insert(a | b);
            }
        }
        LatticeElement {
            n_generators: self.n_generators,
            clauses: reduce_to_antichain(prods),
        }
    }

    /// Lattice order: self <= other as monotone functions.
    pub fn leq(&self, other: &Self) -> bool {
        // every clause of self must be refined by some clause of other
        self.clauses
            .iter()
            .all(|&c| other.clauses.iter().any(|&d| c & d == d))
    }

    /// Evaluate over the two-element lattice at the Boolean assignment with
    /// the given bits.
    pub fn eval_bits(&self, assignment: u32) -> bool {
        self.clauses.iter().any(|&c| assignment & c == c)
    }

    /// Number of satisfying two-valued assignments (out of 2^n). Used as a
    /// semantic rank when scanning elements from the top of the lattice.
    pub fn weight(&self) -> u32 {
        (0..1u32 << self.n_generators)
            .filter(|&v| self.eval_bits(v))
            .count() as u32
    }

    /// Homomorphic evaluation: clauses become meets, the clause set a join.
    pub fn evaluate<L: ValueLattice>(
        &self,
        lattice: &L,
        assignment: &[L::Value],
    ) -> Result<L::Value> {
        if assignment.len() != self.n_generators {
            return Err(Error::input(format!(
                "assignment length {} does not match {} generators",
                assignment.len(),
                self.n_generators
            )));
        }
        let mut acc = lattice.bot();
        for &c in &self.clauses {
            let mut m = lattice.top();
            for (i, value) in assignment.iter().enumerate() {
                if c >> i & 1 == 1 {
                    m = lattice.meet(&m, value);
                }
            }
            acc = lattice.join(&acc, &m);
        }
        Ok(acc)
    }

    /// Kleisli extension: replace generator `i` by `images[i]` (elements
    /// over `target_generators`) and renormalize. The target count is
    /// explicit because it cannot be inferred from an empty image tuple.
    pub fn substitute(
        &self,
        images: &[LatticeElement],
        target_generators: usize,
    ) -> Result<LatticeElement> {
        if images.len() != self.n_generators {
            return Err(Error::input(format!(
                "substitution arity mismatch: element has {} generators, {} images given",
                self.n_generators,
                images.len()
            )));
        }
        let m = target_generators;
        if images.iter().any(|e| e.n_generators != m) {
            return Err(Error::input(
                "substitution images must match the target generator count".to_string(),
            ));
        }
        let mut acc = LatticeElement::bot(m);
        for &c in &self.clauses {
            let mut term = LatticeElement::top(m);
            for (i, image) in images.iter().enumerate() {
                if c >> i & 1 == 1 {
                    term = term.meet(image);
                }
            }
            acc = acc.join(&term);
        }
        Ok(acc)
    }
}

impl fmt::Display for LatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bot() {
            return write!(f, "0");
        }
        if self.is_top() {
            return write!(f, "1");
        }
        let lists = self.clause_lists();
        let many = lists.len() > 1;
        let rendered: Vec<String> = lists
            .iter()
            .map(|clause| {
                let body = clause
                    .iter()
                    .map(|i| format!("x{i}"))
                    .collect::<Vec<_>>()
                    .join(" ^ ");
                if many && clause.len() > 1 {
                    format!("({body})")
                } else {
                    body
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" v "))
    }
}

/// Normalize a term over `n` generators into its unique antichain form.
/// Terms containing `~` are rejected here; use [`normalize_dm`] for the
/// De Morgan signature.
pub fn normalize(term: &Term, n_generators: usize) -> Result<LatticeElement> {
    check_generator_count(n_generators)?;
    if term.contains_negation() {
        return Err(Error::input(
            "negation is not part of the distributive-lattice signature; use the De Morgan theory"
                .to_string(),
        ));
    }
    if let Some(max) = term.max_generator() {
        if max >= n_generators {
            return Err(Error::input(format!(
                "generator x{max} out of range for {n_generators} generators"
            )));
        }
    }
    Ok(normalize_unchecked(term, n_generators))
}

fn normalize_unchecked(term: &Term, n: usize) -> LatticeElement {
    match term {
        Term::Zero => LatticeElement::bot(n),
        Term::One => LatticeElement::top(n),
        Term::Gen(i) => {
            LatticeElement::from_clauses(n, [1 << *i as Clause]).expect("checked index")
        }
        Term::Meet(a, b) => normalize_unchecked(a, n).meet(&normalize_unchecked(b, n)),
        Term::Join(a, b) => normalize_unchecked(a, n).join(&normalize_unchecked(b, n)),
        Term::Not(_) => unreachable!("negation rejected before normalization"),
    }
}

/// All elements of the free bounded distributive lattice on `n <= 4`
/// generators, in canonical order. The count is the Dedekind number of
/// monotone Boolean functions: 2, 3, 6, 20, 168 for n = 0..4.
pub fn enumerate_free(n_generators: usize) -> Result<Vec<LatticeElement>> {
    if n_generators > MAX_ENUMERATION_GENERATORS {
        return Err(Error::capacity(format!(
            "free-lattice enumeration capped at {MAX_ENUMERATION_GENERATORS} generators (requested {n_generators}); \
             the next size is 7581 elements"
        )));
    }
    let subsets = 1usize << n_generators;
    let families = 1u32 << subsets;
    let mut out = Vec::new();
    for family in 0..families as u64 {
        let family = family as u32;
        let mut is_antichain = true;
        'outer: for t in 0..subsets as u32 {
            if t == 0 || family >> t & 1 == 0 {
                continue;
            }
            // walk the proper subsets of t, largest first, ending at 0
            let mut s = t.wrapping_sub(1) & t;
            loop {
                if family >> s & 1 == 1 {
                    is_antichain = false;
                    break 'outer;
                }
                if s == 0 {
                    break;
                }
                s = s.wrapping_sub(1) & t;
            }
        }
        if is_antichain {
            let clauses = (0..subsets as u32).filter(|&s| family >> s & 1 == 1);
            out.push(LatticeElement::from_clauses(n_generators, clauses)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Size of the free lattice on `n <= 4` generators.
pub fn free_lattice_size(n_generators: usize) -> Result<usize> {
    const SIZES: [usize; 5] = [2, 3, 6, 20, 168];
    SIZES.get(n_generators).copied().ok_or_else(|| {
        Error::capacity(format!(
            "free-lattice size only available for n <= {MAX_ENUMERATION_GENERATORS} (requested {n_generators})"
        ))
    })
}

// ---------------------------------------------------------------------------
// Value lattices: targets for homomorphic evaluation.
// ---------------------------------------------------------------------------

/// A bounded lattice of values that normal forms can be evaluated into.
pub trait ValueLattice {
    type Value: Clone;
    fn bot(&self) -> Self::Value;
    fn top(&self) -> Self::Value;
    fn meet(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn join(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
}

/// The two-element lattice.
pub struct TwoPoint;

impl ValueLattice for TwoPoint {
    type Value = bool;
    fn bot(&self) -> bool {
        false
    }
    fn top(&self) -> bool {
        true
    }
    fn meet(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn join(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }
}

/// The unit interval with min/max, over exact rationals.
pub struct UnitInterval;

pub type Rational = num_rational::Ratio<i64>;

impl ValueLattice for UnitInterval {
    type Value = Rational;
    fn bot(&self) -> Rational {
        Rational::new(0, 1)
    }
    fn top(&self) -> Rational {
        Rational::new(1, 1)
    }
    fn meet(&self, a: &Rational, b: &Rational) -> Rational {
        *a.min(b)
    }
    fn join(&self, a: &Rational, b: &Rational) -> Rational {
        *a.max(b)
    }
}

/// The chain 0 < 1 < ... < top, as grid indices. min/max on indices is
/// exact, which is what makes numeric realization gluing tolerance-free.
pub struct IndexChain {
    pub top: u32,
}

impl ValueLattice for IndexChain {
    type Value = u32;
    fn bot(&self) -> u32 {
        0
    }
    fn top(&self) -> u32 {
        self.top
    }
    fn meet(&self, a: &u32, b: &u32) -> u32 {
        *a.min(b)
    }
    fn join(&self, a: &u32, b: &u32) -> u32 {
        *a.max(b)
    }
}

// ---------------------------------------------------------------------------
// Finite distributive lattices.
// ---------------------------------------------------------------------------

/// An explicit finite bounded distributive lattice: a carrier of element
/// ids with an order relation and derived meet/join tables. Construction
/// validates the partial order, the existence of all meets and joins,
/// distributivity and the bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    names: Vec<String>,
    leq: Vec<bool>,
    meet_table: Vec<usize>,
    join_table: Vec<usize>,
    bot: usize,
    top: usize,
}

impl FiniteLattice {
    /// Build from a full reflexive order matrix (`leq[a][b]` means a <= b).
    pub fn from_order_matrix(names: Vec<String>, leq_matrix: Vec<Vec<bool>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::input("a bounded lattice needs at least one element"));
        }
        if leq_matrix.len() != n || leq_matrix.iter().any(|row| row.len() != n) {
            return Err(Error::input(
                "order matrix shape does not match element count",
            ));
        }
        let mut names_sorted = names.clone();
        names_sorted.sort();
        names_sorted.dedup();
        if names_sorted.len() != n {
            return Err(Error::input("duplicate element names"));
        }
        let leq: Vec<bool> = leq_matrix.into_iter().flatten().collect();
        let at = |a: usize, b: usize| leq[a * n + b];
        for a in 0..n {
            if !at(a, a) {
                return Err(Error::input(format!("order not reflexive at {}", names[a])));
            }
            for b in 0..n {
                if a != b && at(a, b) && at(b, a) {
                    return Err(Error::input(format!(
                        "order not antisymmetric: {} and {}",
                        names[a], names[b]
                    )));
                }
                for c in 0..n {
                    if at(a, b) && at(b, c) && !at(a, c) {
                        return Err(Error::input(format!(
                            "order not transitive: {} <= {} <= {}",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        // meets and joins as order-theoretic glb/lub
        let mut meet_table = vec![0usize; n * n];
        let mut join_table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let lowers: Vec<usize> = (0..n).filter(|&c| at(c, a) && at(c, b)).collect();
                let glb = lowers
                    .iter()
                    .copied()
                    .find(|&c| lowers.iter().all(|&d| at(d, c)));
                let uppers: Vec<usize> = (0..n).filter(|&c| at(a, c) && at(b, c)).collect();
                let lub = uppers
                    .iter()
                    .copied()
                    .find(|&c| uppers.iter().all(|&d| at(c, d)));
                match (glb, lub) {
                    (Some(m), Some(j)) => {
                        meet_table[a * n + b] = m;
                        join_table[a * n + b] = j;
                    }
                    _ => {
                        return Err(Error::input(format!(
                            "not a lattice: {} and {} lack a meet or join",
                            names[a], names[b]
                        )))
                    }
                }
            }
        }
        let bot = (0..n)
            .find(|&c| (0..n).all(|d| at(c, d)))
            .ok_or_else(|| Error::input("no least element"))?;
        let top = (0..n)
            .find(|&c| (0..n).all(|d| at(d, c)))
            .ok_or_else(|| Error::input("no greatest element"))?;
        let lat = FiniteLattice {
            names,
            leq,
            meet_table,
            join_table,
            bot,
            top,
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = lat.meet(a, lat.join(b, c));
                    let rhs = lat.join(lat.meet(a, b), lat.meet(a, c));
                    if lhs != rhs {
                        return Err(Error::input(format!(
                            "not distributive at ({}, {}, {})",
                            lat.names[a], lat.names[b], lat.names[c]
                        )));
                    }
                }
            }
        }
        Ok(lat)
    }

    /// Build from a relation given as pairs; the reflexive-transitive
    /// closure is taken, so cover pairs suffice.
    pub fn from_leq_pairs(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::input("leq pair references unknown element"));
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for a in 0..n {
                if leq[a][k] {
                    for b in 0..n {
                        if leq[k][b] {
                            leq[a][b] = true;
                        }
                    }
                }
            }
        }
        Self::from_order_matrix(names, leq)
    }

    /// The chain with `k` elements.
    pub fn chain(k: usize) -> Result<Self> {
        let names = (0..k).map(|i| format!("c{i}")).collect();
        let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        Self::from_leq_pairs(names, &pairs)
    }

    /// The Boolean lattice of subsets of `atoms` atoms. For two atoms the
    /// elements are named 0, a, b, 1.
    pub fn boolean(atoms: usize) -> Result<Self> {
        if atoms > 4 {
            return Err(Error::capacity(
                "boolean lattice capped at 4 atoms".to_string(),
            ));
        }
        let size = 1usize << atoms;
        let names = (0..size)
            .map(|mask| {
                if mask == 0 {
                    "0".to_string()
                } else if mask == size - 1 && atoms > 0 {
                    "1".to_string()
                } else {
                    (0..atoms)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| char::from(b'a' + i as u8).to_string())
                        .collect::<Vec<_>>()
                        .join("")
                }
            })
            .collect();
        let mut leq = vec![vec![false; size]; size];
        for (a, row) in leq.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = a & b == a;
            }
        }
        Self::from_order_matrix(names, leq)
    }

    /// The free lattice on `n` generators packaged as an explicit finite
    /// lattice. Element names are the canonical term strings.
    pub fn free(n_generators: usize) -> Result<Self> {
        let elems = enumerate_free(n_generators)?;
        let names = elems.iter().map(|e| e.to_string()).collect();
        let size = elems.len();
        let mut leq = vec![vec![false; size]; size];
        for (a, ea) in elems.iter().enumerate() {
            for (b, eb) in elems.iter().enumerate() {
                leq[a][b] = ea.leq(eb);
            }
        }
        Self::from_order_matrix(names, leq)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_table[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join_table[a * self.len() + b]
    }

    pub fn bot_id(&self) -> usize {
        self.bot
    }

    pub fn top_id(&self) -> usize {
        self.top
    }

    /// True when the order is total.
    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| self.leq(a, b) || self.leq(b, a)))
    }
}

impl ValueLattice for FiniteLattice {
    type Value = usize;
    fn bot(&self) -> usize {
        self.bot
    }
    fn top(&self) -> usize {
        self.top
    }
    fn meet(&self, a: &usize, b: &usize) -> usize {
        FiniteLattice::meet(self, *a, *b)
    }
    fn join(&self, a: &usize, b: &usize) -> usize {
        FiniteLattice::join(self, *a, *b)
    }
}

// ---------------------------------------------------------------------------
// Free De Morgan algebras.
// ---------------------------------------------------------------------------

/// An element of the free De Morgan algebra on `n` generators, stored as a
/// free-lattice element over `2n` generators: generator `2i` is `x_i` and
/// generator `2i+1` is its involute.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeMorganElement {
    underlying: LatticeElement,
}

impl DeMorganElement {
    pub fn from_underlying(underlying: LatticeElement) -> Result<Self> {
        if !underlying.n_generators().is_multiple_of(2) {
            return Err(Error::input(
                "a De Morgan element needs an even underlying generator count".to_string(),
            ));
        }
        Ok(DeMorganElement { underlying })
    }

    pub fn bot(n_vars: usize) -> Self {
        DeMorganElement {
            underlying: LatticeElement::bot(2 * n_vars),
        }
    }

    pub fn top(n_vars: usize) -> Self {
        DeMorganElement {
            underlying: LatticeElement::top(2 * n_vars),
        }
    }

    pub fn generator(n_vars: usize, index: usize) -> Result<Self> {
        if index >= n_vars {
            return Err(Error::input(format!(
                "generator x{index} out of range for {n_vars} variables"
            )));
        }
        Ok(DeMorganElement {
            underlying: LatticeElement::generator(2 * n_vars, 2 * index)?,
        })
    }

    pub fn negated_generator(n_vars: usize, index: usize) -> Result<Self> {
        if index >= n_vars {
            return Err(Error::input(format!(
                "generator x{index} out of range for {n_vars} variables"
            )));
        }
        Ok(DeMorganElement {
            underlying: LatticeElement::generator(2 * n_vars, 2 * index + 1)?,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.underlying.n_generators() / 2
    }

    pub fn underlying(&self) -> &LatticeElement {
        &self.underlying
    }

    pub fn meet(&self, other: &Self) -> Self {
        DeMorganElement {
            underlying: self.underlying.meet(&other.underlying),
        }
    }

    pub fn join(&self, other: &Self) -> Self {
        DeMorganElement {
            underlying: self.underlying.join(&other.underlying),
        }
    }

    /// The involution: swaps each generator with its star, exchanges meet
    /// with join and bottom with top, and renormalizes.
    pub fn negate(&self) -> Self {
        let n2 = self.underlying.n_generators();
        // ~(join of clauses) = meet over clauses of (join of swapped literals)
        let mut acc = LatticeElement::top(n2);
        for &clause in self.underlying.clauses() {
            let mut lit_join = LatticeElement::bot(n2);
            for i in 0..n2 {
                if clause >> i & 1 == 1 {
                    let swapped = i ^ 1;
                    lit_join = lit_join
                        .join(&LatticeElement::generator(n2, swapped).expect("index in range"));
                }
            }
            acc = acc.meet(&lit_join);
        }
        DeMorganElement { underlying: acc }
    }

    /// Kleisli extension for the De Morgan theory: generator `i` goes to
    /// `images[i]` (elements over `target_vars` variables) and its star to
    /// the negation of `images[i]`.
    pub fn substitute(
        &self,
        images: &[DeMorganElement],
        target_vars: usize,
    ) -> Result<DeMorganElement> {
        if images.len() != self.n_vars() {
            return Err(Error::input(format!(
                "substitution arity mismatch: element has {} variables, {} images given",
                self.n_vars(),
                images.len()
            )));
        }
        let mut doubled = Vec::with_capacity(2 * images.len());
        for image in images {
            doubled.push(image.underlying.clone());
            doubled.push(image.negate().underlying);
        }
        Ok(DeMorganElement {
            underlying: self.underlying.substitute(&doubled, 2 * target_vars)?,
        })
    }
}

impl fmt::Display for DeMorganElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.underlying.is_bot() {
            return write!(f, "0");
        }
        if self.underlying.is_top() {
            return write!(f, "1");
        }
        let literal = |i: usize| {
            if i.is_multiple_of(2) {
                format!("x{}", i / 2)
            } else {
                format!("~x{}", i / 2)
            }
        };
        let lists = self.underlying.clause_lists();
        let many = lists.len() > 1;
        let rendered: Vec<String> = lists
            .iter()
            .map(|clause| {
                let body = clause
                    .iter()
                    .map(|&i| literal(i))
                    .collect::<Vec<_>>()
                    .join(" ^ ");
                if many && clause.len() > 1 {
                    format!("({body})")
                } else {
                    body
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" v "))
    }
}

/// Normalize a term (possibly with `~`) in the free De Morgan algebra on
/// `n_vars` variables: negations are pushed to the literals first.
pub fn normalize_dm(term: &Term, n_vars: usize) -> Result<DeMorganElement> {
    check_generator_count(2 * n_vars)?;
    if let Some(max) = term.max_generator() {
        if max >= n_vars {
            return Err(Error::input(format!(
                "generator x{max} out of range for {n_vars} variables"
            )));
        }
    }
    Ok(nnf(term, n_vars, false))
}

fn nnf(term: &Term, n: usize, negated: bool) -> DeMorganElement {
    match (term, negated) {
        (Term::Zero, false) | (Term::One, true) => DeMorganElement::bot(n),
        (Term::One, false) | (Term::Zero, true) => DeMorganElement::top(n),
        (Term::Gen(i), false) => DeMorganElement::generator(n, *i).expect("checked index"),
        (Term::Gen(i), true) => DeMorganElement::negated_generator(n, *i).expect("checked index"),
        (Term::Meet(a, b), false) | (Term::Join(a, b), true) => {
            nnf(a, n, negated).meet(&nnf(b, n, negated))
        }
        (Term::Join(a, b), false) | (Term::Meet(a, b), true) => {
            nnf(a, n, negated).join(&nnf(b, n, negated))
        }
        (Term::Not(a), _) => nnf(a, n, !negated),
    }
}

/// All elements of the free De Morgan algebra on `n` variables (a free
/// lattice on `2n` generators underneath).
pub fn enumerate_free_dm(n_vars: usize) -> Result<Vec<DeMorganElement>> {
    let base = enumerate_free(2 * n_vars)?;
    base.into_iter()
        .map(DeMorganElement::from_underlying)
        .collect()
}
