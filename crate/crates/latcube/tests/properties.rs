//! Randomized law checking. The oracle here is independent of the normal
//! form machinery: terms are evaluated structurally over the two-element
//! lattice on every assignment, so two terms agree as monotone Boolean
//! functions exactly when their truth tables coincide.

use proptest::prelude::*;

use latcube::cube::CubeMorphism;
use latcube::lattice::{
    self, enumerate_free_dm, normalize, normalize_dm, DeMorganElement, FiniteLattice,
    LatticeElement, Rational, UnitInterval, ValueLattice,
};
use latcube::term::Term;

/// Truth table of a term over `n` generators: bit `v` is the value at
/// assignment `v`. Computed by structural folding, not via normal forms.
fn truth_table(term: &Term, n: usize) -> u32 {
    let mut table = 0u32;
    for v in 0..1u32 << n {
        if term.eval_bits(v) {
            table |= 1 << v;
        }
    }
    table
}

fn truth_table_of_element(e: &LatticeElement) -> u32 {
    let mut table = 0u32;
    for v in 0..1u32 << e.n_generators() {
        if e.eval_bits(v) {
            table |= 1 << v;
        }
    }
    table
}

/// Random terms over `n` generators, negation-free.
fn term_strategy(n: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        (0..n).prop_map(Term::Gen),
    ];
    leaf.prop_recursive(5, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::meet(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::join(a, b)),
        ]
    })
}

/// Random terms that may use negation, for the De Morgan algebra.
fn dm_term_strategy(n: usize) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        (0..n).prop_map(Term::Gen),
    ];
    leaf.prop_recursive(4, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::meet(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::join(a, b)),
            inner.prop_map(Term::not),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, ..ProptestConfig::default() })]

    /// Normal forms are sound and complete for the function semantics.
    #[test]
    fn normal_form_equality_is_function_equality(
        (n, s, t) in (1usize..=4).prop_flat_map(|n| (Just(n), term_strategy(n), term_strategy(n)))
    ) {
        let ns = normalize(&s, n).unwrap();
        let nt = normalize(&t, n).unwrap();
        prop_assert_eq!(ns == nt, truth_table(&s, n) == truth_table(&t, n));
        // and the normal form denotes the same function as the term
        prop_assert_eq!(truth_table_of_element(&ns), truth_table(&s, n));
    }

    /// Lattice laws hold on normal forms.
    #[test]
    fn lattice_laws((n, a, b, c) in (1usize..=4).prop_flat_map(|n| {
        (Just(n), term_strategy(n), term_strategy(n), term_strategy(n))
    })) {
        let a = normalize(&a, n).unwrap();
        let b = normalize(&b, n).unwrap();
        let c = normalize(&c, n).unwrap();
        // commutativity, associativity, idempotence, absorption, distributivity
        prop_assert_eq!(a.join(&b), b.join(&a));
        prop_assert_eq!(a.meet(&b), b.meet(&a));
        prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
        prop_assert_eq!(a.meet(&b).meet(&c), a.meet(&b.meet(&c)));
        prop_assert_eq!(a.join(&a), a.clone());
        prop_assert_eq!(a.meet(&a), a.clone());
        prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
        prop_assert_eq!(a.meet(&a.join(&b)), a.clone());
        prop_assert_eq!(
            a.meet(&b.join(&c)),
            a.meet(&b).join(&a.meet(&c))
        );
    }

    /// Evaluation is a lattice homomorphism, over the unit interval and
    /// over a finite model.
    #[test]
    fn evaluate_is_a_homomorphism(
        (a, b) in (term_strategy(3), term_strategy(3)),
        nums in prop::collection::vec((0i64..=12, 1i64..=12), 3),
        ids in prop::collection::vec(0usize..6, 3),
    ) {
        let a = normalize(&a, 3).unwrap();
        let b = normalize(&b, 3).unwrap();
        let point: Vec<Rational> = nums
            .iter()
            .map(|&(p, q)| {
                let r = Rational::new(p, q);
                if r > Rational::new(1, 1) { r.recip() } else { r }
            })
            .collect();
        let ui = UnitInterval;
        let va = a.evaluate(&ui, &point).unwrap();
        let vb = b.evaluate(&ui, &point).unwrap();
        prop_assert_eq!(a.meet(&b).evaluate(&ui, &point).unwrap(), ui.meet(&va, &vb));
        prop_assert_eq!(a.join(&b).evaluate(&ui, &point).unwrap(), ui.join(&va, &vb));

        let model = FiniteLattice::free(2).unwrap();
        let m_point: Vec<usize> = ids.iter().map(|&i| i % model.len()).collect();
        let ma = a.evaluate(&model, &m_point).unwrap();
        let mb = b.evaluate(&model, &m_point).unwrap();
        prop_assert_eq!(
            a.meet(&b).evaluate(&model, &m_point).unwrap(),
            model.meet(ma, mb)
        );
        prop_assert_eq!(
            a.join(&b).evaluate(&model, &m_point).unwrap(),
            model.join(ma, mb)
        );
    }

    /// Substitution satisfies the monad laws and agrees with the function
    /// semantics: substituting then evaluating equals evaluating through.
    #[test]
    fn substitution_monad_laws(
        e in term_strategy(2),
        f0 in term_strategy(3),
        f1 in term_strategy(3),
        g0 in term_strategy(2),
        g1 in term_strategy(2),
        g2 in term_strategy(2),
    ) {
        let e = normalize(&e, 2).unwrap();
        let fs = [normalize(&f0, 3).unwrap(), normalize(&f1, 3).unwrap()];
        let gs = [
            normalize(&g0, 2).unwrap(),
            normalize(&g1, 2).unwrap(),
            normalize(&g2, 2).unwrap(),
        ];
        // unit laws
        let units: Vec<LatticeElement> = (0..2)
            .map(|i| LatticeElement::generator(2, i).unwrap())
            .collect();
        prop_assert_eq!(e.substitute(&units, 2).unwrap(), e.clone());
        let x0 = LatticeElement::generator(1, 0).unwrap();
        prop_assert_eq!(
            x0.substitute(std::slice::from_ref(&e), 2).unwrap(),
            e.clone()
        );
        // associativity: two-step substitution equals one-shot
        let one_step: Vec<LatticeElement> = fs
            .iter()
            .map(|f| f.substitute(&gs, 2).unwrap())
            .collect();
        let lhs = e.substitute(&fs, 3).unwrap().substitute(&gs, 2).unwrap();
        let rhs = e.substitute(&one_step, 2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// The involution negates, swaps the operations and is its own inverse.
    #[test]
    fn de_morgan_involution(
        (a, b) in (dm_term_strategy(2), dm_term_strategy(2)),
    ) {
        let a = normalize_dm(&a, 2).unwrap();
        let b = normalize_dm(&b, 2).unwrap();
        prop_assert_eq!(a.negate().negate(), a.clone());
        prop_assert_eq!(a.meet(&b).negate(), a.negate().join(&b.negate()));
        prop_assert_eq!(a.join(&b).negate(), a.negate().meet(&b.negate()));
    }

    /// Composition in the cube category is associative and agrees with the
    /// pointwise min/max semantics, exactly over rationals.
    #[test]
    fn cube_composition_sound(
        comps_f in prop::collection::vec(term_strategy(2), 3),
        comps_g in prop::collection::vec(term_strategy(3), 2),
        comps_h in prop::collection::vec(term_strategy(2), 2),
        nums in prop::collection::vec((0i64..=10, 1i64..=10), 2),
    ) {
        let f = CubeMorphism::new(
            2,
            3,
            comps_f.iter().map(|t| normalize(t, 2).unwrap()).collect(),
        )
        .unwrap();
        let g = CubeMorphism::new(
            3,
            2,
            comps_g.iter().map(|t| normalize(t, 3).unwrap()).collect(),
        )
        .unwrap();
        let h = CubeMorphism::new(
            2,
            2,
            comps_h.iter().map(|t| normalize(t, 2).unwrap()).collect(),
        )
        .unwrap();
        // associativity of composition
        let left = h.compose(&g.compose(&f).unwrap()).unwrap();
        let right = h.compose(&g).unwrap().compose(&f).unwrap();
        prop_assert_eq!(left, right);
        // semantic soundness
        let point: Vec<Rational> = nums
            .iter()
            .map(|&(p, q)| {
                let r = Rational::new(p, q);
                if r > Rational::new(1, 1) { r.recip() } else { r }
            })
            .collect();
        let ui = UnitInterval;
        let via = g.evaluate(&ui, &f.evaluate(&ui, &point).unwrap()).unwrap();
        let direct = g.compose(&f).unwrap().evaluate(&ui, &point).unwrap();
        prop_assert_eq!(via, direct);
    }

    /// Printing then parsing is the identity on canonical forms.
    #[test]
    fn canonical_print_parse_roundtrip(t in term_strategy(4)) {
        let e = normalize(&t, 4).unwrap();
        let reparsed = normalize(&latcube::term::parse(&e.to_string()).unwrap(), 4).unwrap();
        prop_assert_eq!(e, reparsed);
    }
}

/// The independent enumeration oracle: all monotone truth tables on `n`
/// variables, counted directly.
fn count_monotone_functions(n: usize) -> usize {
    let inputs = 1usize << n;
    let mut count = 0usize;
    'tables: for table in 0u64..1u64 << inputs {
        for v in 0..inputs {
            for bit in 0..n {
                let w = v | (1 << bit);
                if w != v && table >> v & 1 == 1 && table >> w & 1 == 0 {
                    continue 'tables;
                }
            }
        }
        count += 1;
    }
    count
}

#[test]
fn enumeration_matches_the_monotone_function_oracle() {
    for n in 0..=4usize {
        let enumerated = lattice::enumerate_free(n).unwrap();
        assert_eq!(enumerated.len(), count_monotone_functions(n));
        // all normal forms denote distinct functions
        let tables: std::collections::BTreeSet<u32> =
            enumerated.iter().map(truth_table_of_element).collect();
        assert_eq!(tables.len(), enumerated.len());
    }
}

#[test]
fn dm_involution_exhaustive_on_one_variable() {
    let all = enumerate_free_dm(1).unwrap();
    assert_eq!(all.len(), 6);
    for e in &all {
        assert_eq!(e.negate().negate(), e.clone());
        for f in &all {
            assert_eq!(e.meet(f).negate(), e.negate().join(&f.negate()));
        }
    }
    // the involution is not the identity
    let x = DeMorganElement::generator(1, 0).unwrap();
    assert_ne!(x.negate(), x);
}
