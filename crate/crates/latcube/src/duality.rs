//! Birkhoff duality for finite structures: a finite distributive lattice is
//! recovered from the poset of its join-irreducible elements as the lattice
//! of lower sets, and a finite poset is recovered from its downset lattice.

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// A finite poset over elements `0..len` with an explicit order matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    leq: Vec<bool>,
}

impl FinitePoset {
    pub fn from_order_matrix(names: Vec<String>, leq_matrix: Vec<Vec<bool>>) -> Result<Self> {
        let n = names.len();
        if leq_matrix.len() != n || leq_matrix.iter().any(|r| r.len() != n) {
            return Err(Error::input(
                "order matrix shape does not match element count",
            ));
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
        Ok(FinitePoset { names, leq })
    }

    /// Build from a relation given as pairs, closing reflexively and
    /// transitively first.
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

    pub fn antichain(n: usize) -> Self {
        let names = (0..n).map(|i| format!("p{i}")).collect();
        FinitePoset::from_leq_pairs(names, &[]).expect("antichain is a poset")
    }

    pub fn chain(n: usize) -> Self {
        let names = (0..n).map(|i| format!("p{i}")).collect();
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_leq_pairs(names, &pairs).expect("chain is a poset")
    }

    /// The poset of subsets of an `n`-set ordered by inclusion (the n-th
    /// power of the two-point poset).
    pub fn two_power(n: usize) -> Self {
        let size = 1usize << n;
        let names = (0..size).map(|mask| format!("s{mask:b}")).collect();
        let mut leq = vec![vec![false; size]; size];
        for (a, row) in leq.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = a & b == a;
            }
        }
        FinitePoset::from_order_matrix(names, leq).expect("subset order is a poset")
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

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    /// Number of elements strictly below `a`.
    pub fn height(&self, a: usize) -> usize {
        (0..self.len())
            .filter(|&b| b != a && self.leq(b, a))
            .count()
    }

    /// A cheap invariant used to prune isomorphism search: how many
    /// elements lie (weakly) below and above.
    fn signature(&self, a: usize) -> (usize, usize) {
        let below = (0..self.len()).filter(|&b| self.leq(b, a)).count();
        let above = (0..self.len()).filter(|&b| self.leq(a, b)).count();
        (below, above)
    }
}

/// A finite poset carrying an order-reversing involution.
#[derive(Debug, Clone)]
pub struct InvolutivePoset {
    base: FinitePoset,
    inv: Vec<usize>,
}

impl InvolutivePoset {
    pub fn new(base: FinitePoset, inv: Vec<usize>) -> Result<Self> {
        let n = base.len();
        if inv.len() != n || inv.iter().any(|&i| i >= n) {
            return Err(Error::input("involution must be a self-map of the carrier"));
        }
        for a in 0..n {
            if inv[inv[a]] != a {
                return Err(Error::input(format!(
                    "not an involution at {}",
                    base.names()[a]
                )));
            }
            for b in 0..n {
                if base.leq(a, b) && !base.leq(inv[b], inv[a]) {
                    return Err(Error::input(format!(
                        "involution is not order-reversing on ({}, {})",
                        base.names()[a],
                        base.names()[b]
                    )));
                }
            }
        }
        Ok(InvolutivePoset { base, inv })
    }

    pub fn base(&self) -> &FinitePoset {
        &self.base
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// The subset poset of an `n`-set with the complement involution.
    pub fn two_power(n: usize) -> Self {
        let base = FinitePoset::two_power(n);
        let full = (1usize << n) - 1;
        let inv = (0..1usize << n).map(|mask| full & !mask).collect();
        InvolutivePoset::new(base, inv).expect("complement reverses inclusion")
    }
}

/// The subposet of join-irreducible elements of `lattice`: elements `j`
/// other than bottom such that `j = a v b` forces `j = a` or `j = b`.
/// Returns the poset together with the lattice id of each poset element.
pub fn join_irreducibles(lattice: &FiniteLattice) -> (FinitePoset, Vec<usize>) {
    let n = lattice.len();
    let mut irr = Vec::new();
    for j in 0..n {
        if j == lattice.bot_id() {
            continue;
        }
        let mut reducible = false;
        'pairs: for a in 0..n {
            for b in 0..n {
                if lattice.join(a, b) == j && a != j && b != j {
                    reducible = true;
                    break 'pairs;
                }
            }
        }
        if !reducible {
            irr.push(j);
        }
    }
    let names = irr.iter().map(|&j| lattice.name(j).to_string()).collect();
    let leq = irr
        .iter()
        .map(|&a| irr.iter().map(|&b| lattice.leq(a, b)).collect())
        .collect();
    let poset = FinitePoset::from_order_matrix(names, leq).expect("subposet of a lattice order");
    (poset, irr)
}

/// The lattice of lower sets of `poset`, ordered by inclusion, with union
/// and intersection as join and meet. Also returns each element's downset
/// as a bitmask over the poset carrier.
pub fn lower_sets(poset: &FinitePoset) -> (FiniteLattice, Vec<u64>) {
    let n = poset.len();
    assert!(n < 24, "downset enumeration is desk-scale only");
    let mut downsets: Vec<u64> = Vec::new();
    for mask in 0..1u64 << n {
        let closed = (0..n)
            .all(|a| mask >> a & 1 == 0 || (0..n).all(|b| !poset.leq(b, a) || mask >> b & 1 == 1));
        if closed {
            downsets.push(mask);
        }
    }
    let names = downsets
        .iter()
        .map(|&mask| {
            let members: Vec<&str> = (0..n)
                .filter(|&a| mask >> a & 1 == 1)
                .map(|a| poset.names()[a].as_str())
                .collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let leq = downsets
        .iter()
        .map(|&a| downsets.iter().map(|&b| a & b == a).collect())
        .collect();
    let lattice = FiniteLattice::from_order_matrix(names, leq)
        .expect("downsets ordered by inclusion form a distributive lattice");
    (lattice, downsets)
}

/// An explicit isomorphism between two finite lattices: a bijection
/// preserving the order in both directions.
#[derive(Debug, Clone)]
pub struct LatticeIso {
    /// forward[a] is the image in the second lattice of element a.
    pub forward: Vec<usize>,
}

/// The round trip of Birkhoff duality: the canonical map sending each
/// lattice element to the set of join-irreducibles below it, verified to be
/// an isomorphism onto the downset lattice of the irreducible poset.
pub fn duality_roundtrip(
    lattice: &FiniteLattice,
) -> Result<(FinitePoset, FiniteLattice, LatticeIso)> {
    let (poset, irr_ids) = join_irreducibles(lattice);
    let (down, downset_masks) = lower_sets(&poset);
    let mut forward = Vec::with_capacity(lattice.len());
    for a in 0..lattice.len() {
        let mask: u64 = irr_ids
            .iter()
            .enumerate()
            .filter(|&(_, &j)| lattice.leq(j, a))
            .map(|(k, _)| 1u64 << k)
            .sum();
        let image = downset_masks
            .iter()
            .position(|&m| m == mask)
            .ok_or_else(|| {
                Error::input(format!(
                    "irreducibles below {} do not form a lower set; lattice is not distributive",
                    lattice.name(a)
                ))
            })?;
        forward.push(image);
    }
    // bijectivity
    let mut seen = vec![false; down.len()];
    for &im in &forward {
        if seen[im] {
            return Err(Error::input(
                "canonical duality map is not injective; lattice is not distributive".to_string(),
            ));
        }
        seen[im] = true;
    }
    if forward.len() != down.len() {
        return Err(Error::input(
            "canonical duality map is not surjective; lattice is not distributive".to_string(),
        ));
    }
    // order preserved both ways
    for a in 0..lattice.len() {
        for b in 0..lattice.len() {
            if lattice.leq(a, b) != down.leq(forward[a], forward[b]) {
                return Err(Error::input(format!(
                    "duality map does not preserve order at ({}, {})",
                    lattice.name(a),
                    lattice.name(b)
                )));
            }
        }
    }
    Ok((poset, down, LatticeIso { forward }))
}

/// Backtracking search for a poset isomorphism, candidates sorted by
/// (height, signature) so mismatched shapes fail fast. Instances here are
/// tiny, so no further pruning is needed.
pub fn find_poset_iso(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    if p.len() != q.len() {
        return None;
    }
    let n = p.len();
    let mut p_sigs: Vec<(usize, usize)> = (0..n).map(|a| p.signature(a)).collect();
    let mut q_sigs: Vec<(usize, usize)> = (0..n).map(|a| q.signature(a)).collect();
    p_sigs.sort();
    q_sigs.sort();
    if p_sigs != q_sigs {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| (p.height(a), p.signature(a)));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        k: usize,
        order: &[usize],
        p: &FinitePoset,
        q: &FinitePoset,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let a = order[k];
        for b in 0..q.len() {
            if used[b] || p.signature(a) != q.signature(b) {
                continue;
            }
            let consistent = order[..k].iter().all(|&prev| {
                p.leq(a, prev) == q.leq(b, image[prev]) && p.leq(prev, a) == q.leq(image[prev], b)
            });
            if !consistent {
                continue;
            }
            image[a] = b;
            used[b] = true;
            if assign(k + 1, order, p, q, image, used) {
                return true;
            }
            image[a] = usize::MAX;
            used[b] = false;
        }
        false
    }
    if assign(0, &order, p, q, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

/// Extract the order-reversing involution induced on the irreducible poset
/// of the free De Morgan algebra on `n_vars` variables: each irreducible is
/// sent through the algebra involution and matched with the corresponding
/// meet-irreducible's lower companion.
pub fn dm_involutive_poset(n_vars: usize) -> Result<InvolutivePoset> {
    use crate::lattice::{enumerate_free_dm, DeMorganElement};
    let elems = enumerate_free_dm(n_vars)?;
    let index_of = |e: &DeMorganElement| elems.iter().position(|f| f == e).expect("closed algebra");
    let n = elems.len();
    let leq = |a: usize, b: usize| elems[a].underlying().leq(elems[b].underlying());
    // join-irreducibles of the underlying lattice
    let mut irr: Vec<usize> = Vec::new();
    for j in 0..n {
        if elems[j].underlying().is_bot() {
            continue;
        }
        let mut reducible = false;
        'pairs: for a in 0..n {
            for b in 0..n {
                if a != j && b != j && elems[a].join(&elems[b]) == elems[j] {
                    reducible = true;
                    break 'pairs;
                }
            }
        }
        if !reducible {
            irr.push(j);
        }
    }
    // kappa(j): the largest element not above j; its inverse pairs
    // meet-irreducibles back with join-irreducibles.
    let kappa = |j: usize| -> usize {
        let mut acc = DeMorganElement::bot(n_vars);
        for (a, e) in elems.iter().enumerate() {
            if !leq(j, a) {
                acc = acc.join(e);
            }
        }
        index_of(&acc)
    };
    let kappa_of: Vec<usize> = irr.iter().map(|&j| kappa(j)).collect();
    let inv: Vec<usize> = irr
        .iter()
        .map(|&j| {
            let neg = index_of(&elems[j].negate());
            kappa_of
                .iter()
                .position(|&m| m == neg)
                .expect("negation of a join-irreducible is a meet-irreducible")
        })
        .collect();
    let names = irr.iter().map(|&j| elems[j].to_string()).collect();
    let order = irr
        .iter()
        .map(|&a| irr.iter().map(|&b| leq(a, b)).collect())
        .collect();
    let base = FinitePoset::from_order_matrix(names, order)?;
    InvolutivePoset::new(base, inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_irreducibles() {
        // 0 < a < 1: irreducibles are a and 1, ordered as a chain
        let lat = FiniteLattice::chain(3).unwrap();
        let (poset, ids) = join_irreducibles(&lat);
        assert_eq!(ids, vec![1, 2]);
        assert!(poset.leq(0, 1));
        assert!(!poset.leq(1, 0));
    }

    #[test]
    fn two_element_lattice_has_one_irreducible() {
        let lat = FiniteLattice::chain(2).unwrap();
        let (poset, ids) = join_irreducibles(&lat);
        assert_eq!(poset.len(), 1);
        assert_eq!(ids, vec![1]);
    }

    #[test]
    fn free_dl2_irreducibles_form_a_square() {
        let lat = FiniteLattice::free(2).unwrap();
        let (poset, _) = join_irreducibles(&lat);
        assert_eq!(poset.len(), 4);
        let square = FinitePoset::two_power(2);
        assert!(find_poset_iso(&poset, &square).is_some());
    }

    #[test]
    fn downsets_of_antichain_are_boolean() {
        let (lat, _) = lower_sets(&FinitePoset::antichain(2));
        assert_eq!(lat.len(), 4);
        let boolean = FiniteLattice::boolean(2).unwrap();
        let (p1, _) = join_irreducibles(&lat);
        let (p2, _) = join_irreducibles(&boolean);
        assert!(find_poset_iso(&p1, &p2).is_some());
    }

    #[test]
    fn downsets_of_one_point_are_two() {
        let (lat, _) = lower_sets(&FinitePoset::antichain(1));
        assert_eq!(lat.len(), 2);
    }

    #[test]
    fn downsets_of_square_match_free_dl2() {
        let (lat, _) = lower_sets(&FinitePoset::two_power(2));
        assert_eq!(lat.len(), 6);
    }

    #[test]
    fn roundtrip_on_chains() {
        for k in 1..=6 {
            let lat = FiniteLattice::chain(k).unwrap();
            duality_roundtrip(&lat).unwrap();
        }
    }

    #[test]
    fn roundtrip_on_boolean_cube() {
        let lat = FiniteLattice::boolean(3).unwrap();
        let (poset, down, _) = duality_roundtrip(&lat).unwrap();
        assert_eq!(poset.len(), 3);
        assert_eq!(down.len(), 8);
    }

    #[test]
    fn poset_recovered_from_downsets() {
        let chains = [
            FinitePoset::chain(3),
            FinitePoset::antichain(3),
            FinitePoset::two_power(2),
        ];
        for poset in chains {
            let (lat, _) = lower_sets(&poset);
            let (recovered, _) = join_irreducibles(&lat);
            assert!(find_poset_iso(&poset, &recovered).is_some());
        }
    }

    /// All partial orders on `n` labeled elements, as strict-pair bitmasks
    /// filtered for antisymmetry and transitivity.
    fn all_posets(n: usize) -> Vec<FinitePoset> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        let pair_index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a, b)).unwrap();
        let mut out = Vec::new();
        'masks: for mask in 0u32..1 << pairs.len() {
            let strict = |a: usize, b: usize| mask >> pair_index(a, b) & 1 == 1;
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 0 {
                    continue;
                }
                if strict(b, a) {
                    continue 'masks; // antisymmetry
                }
                for c in 0..n {
                    if c != a && c != b && strict(b, c) && !strict(a, c) {
                        continue 'masks; // transitivity
                    }
                }
            }
            let names = (0..n).map(|i| format!("q{i}")).collect();
            let index_pairs: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            out.push(FinitePoset::from_leq_pairs(names, &index_pairs).expect("validated"));
        }
        out
    }

    #[test]
    fn every_small_poset_is_recovered_from_its_downsets() {
        for n in 0..=5usize {
            for poset in all_posets(n) {
                let (lat, _) = lower_sets(&poset);
                let (recovered, _) = join_irreducibles(&lat);
                assert!(
                    find_poset_iso(&poset, &recovered).is_some(),
                    "{n}-element poset not recovered"
                );
            }
        }
    }

    #[test]
    fn roundtrip_on_every_downset_lattice_up_to_eight_elements() {
        // downsets of 3-element posets realize every shape up to 8 elements
        for poset in all_posets(3) {
            let (lat, _) = lower_sets(&poset);
            assert!(lat.len() <= 8);
            duality_roundtrip(&lat).unwrap();
        }
    }

    #[test]
    fn involutive_two_power_validates() {
        let ip = InvolutivePoset::two_power(2);
        assert_eq!(ip.inv(0), 3);
        assert_eq!(ip.inv(3), 0);
    }

    #[test]
    fn involution_must_reverse_order() {
        let base = FinitePoset::chain(2);
        // identity on a chain of 2 is order-preserving, not reversing
        assert!(InvolutivePoset::new(base.clone(), vec![0, 1]).is_err());
        assert!(InvolutivePoset::new(base, vec![1, 0]).is_ok());
    }

    #[test]
    fn dm1_induces_the_paired_flip_involution_on_the_square() {
        let ip = dm_involutive_poset(1).unwrap();
        assert_eq!(ip.base().len(), 4);
        assert!(find_poset_iso(ip.base(), &FinitePoset::two_power(2)).is_some());
        // the dual involution of the free algebra on one variable is
        // (a,b) |-> (~b,~a), which fixes exactly the two middle elements
        let expected = {
            let base = FinitePoset::two_power(2);
            let inv = (0..4usize)
                .map(|mask| 3 & !(((mask & 1) << 1) | (mask >> 1 & 1)))
                .collect();
            InvolutivePoset::new(base, inv).unwrap()
        };
        let fixed = (0..4).filter(|&a| ip.inv(a) == a).count();
        let expected_fixed = (0..4).filter(|&a| expected.inv(a) == a).count();
        assert_eq!(fixed, expected_fixed);
        assert_eq!(fixed, 2);
    }
}
