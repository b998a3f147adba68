//! Property-based invariants for the polynomial substrate, the Groebner
//! engine, the toric pipeline, and the standard-pair decomposition.

use std::cmp::Ordering;

use proptest::prelude::*;

use gkzmod::groebner::{
    buchberger, ideal_eq, normal_form, reduce, satisfies_buchberger_criterion, Ideal,
};
use gkzmod::poly::{parse_poly, Poly, Ring, RingRef, TermOrder};
use gkzmod::rational::{rat, rat_frac, Rat};
use gkzmod::standard_pairs::{standard_pairs, MonomialIdeal};
use gkzmod::toric::{build_atilde, lattice_kernel, toric_ideal, ProblemSpec};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat_frac(p, q))
}

fn expo(nvars: usize, max: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..=max, nvars)
}

fn poly(ring: RingRef, max_deg: i64, max_terms: usize) -> impl Strategy<Value = Poly> {
    let n = ring.nvars();
    prop::collection::vec((expo(n, max_deg), small_rat()), 1..=max_terms)
        .prop_map(move |terms| Poly::from_terms(ring.clone(), terms))
}

fn order() -> impl Strategy<Value = TermOrder> {
    prop_oneof![
        Just(TermOrder::Lex),
        Just(TermOrder::Grevlex),
        prop::collection::vec(0i64..=4, 3).prop_map(TermOrder::WeightGrevlex),
    ]
}

fn r3() -> RingRef {
    Ring::new(vec!["x", "y", "z"])
}

fn r2() -> RingRef {
    Ring::new(vec!["x", "y"])
}

fn order2() -> impl Strategy<Value = TermOrder> {
    prop_oneof![
        Just(TermOrder::Lex),
        Just(TermOrder::Grevlex),
        prop::collection::vec(0i64..=4, 2).prop_map(TermOrder::WeightGrevlex),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn print_parse_round_trip(f in poly(r3(), 4, 5)) {
        let r = r3();
        let printed = f.to_string();
        let back = parse_poly(&r, &printed).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn term_order_is_total_and_consistent(
        ord in order(),
        a in expo(3, 5),
        b in expo(3, 5),
        c in expo(3, 5),
    ) {
        // antisymmetry
        prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
        // equality only on equal exponents
        if ord.cmp(&a, &b) == Ordering::Equal {
            prop_assert_eq!(&a, &b);
        }
        // transitivity
        if ord.cmp(&a, &b) != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
            prop_assert!(ord.cmp(&a, &c) != Ordering::Greater);
        }
    }

    #[test]
    fn initial_form_multiplicative(
        f in poly(r3(), 3, 4),
        g in poly(r3(), 3, 4),
        w in prop::collection::vec(-3i64..=3, 3),
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let lhs = f.mul(&g).initial_form(&w).unwrap();
        let rhs = f.initial_form(&w).unwrap().mul(&g.initial_form(&w).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn buchberger_criterion_and_membership(
        gens in prop::collection::vec(poly(r2(), 2, 3), 1..=3),
        ord in order2(),
    ) {
        prop_assume!(ord.is_global());
        let ideal = Ideal::new(r2(), gens.clone());
        let gb = buchberger(&ideal, &ord).unwrap();
        prop_assert!(satisfies_buchberger_criterion(&gb));
        for g in &gens {
            prop_assert!(normal_form(g, &gb).unwrap().is_zero());
        }
    }

    #[test]
    fn normal_form_reducer_permutation_invariant(
        gens in prop::collection::vec(poly(r2(), 2, 3), 1..=3),
        f in poly(r2(), 4, 5),
        rot in 0usize..6,
    ) {
        let ideal = Ideal::new(r2(), gens);
        let gb = buchberger(&ideal, &TermOrder::Grevlex).unwrap();
        prop_assume!(!gb.elements.is_empty());
        let nf = reduce(&f, &gb.elements, &TermOrder::Grevlex);
        let mut shuffled = gb.elements.clone();
        let len = shuffled.len();
        shuffled.rotate_left(rot % len);
        let nf2 = reduce(&f, &shuffled, &TermOrder::Grevlex);
        prop_assert_eq!(nf, nf2);
    }

    #[test]
    fn toric_ideal_row_operation_invariant(
        a1 in 1i64..=3,
        a2 in 1i64..=4,
        k in -2i64..=2,
        w in prop::collection::vec(-2i64..=2, 2),
    ) {
        prop_assume!(num_integer::gcd(a1, a2) == 1 && a1 != a2);
        let spec = ProblemSpec::new(vec![vec![a1, a2]], vec![rat(0)], w).unwrap();
        let atilde = build_atilde(&spec);
        prop_assume!(lattice_kernel(&atilde).is_ok());
        // add k times the first row to the second: same row lattice, so
        // the same toric ideal
        let mut transformed = atilde.clone();
        for j in 0..3 {
            transformed[1][j] += k * transformed[0][j];
        }
        let i1 = toric_ideal(&atilde).unwrap();
        let i2 = toric_ideal(&transformed).unwrap();
        prop_assert!(ideal_eq(&i1, &i2).unwrap());
    }

    #[test]
    fn standard_pair_cover(
        nvars in 1usize..=3,
        raw in prop::collection::vec(prop::collection::vec(0i64..=3, 3), 1..=4),
    ) {
        let gens: Vec<Vec<i64>> = raw.into_iter().map(|g| g[..nvars].to_vec()).collect();
        let m = MonomialIdeal::new(nvars, gens);
        let pairs = standard_pairs(&m);
        // exhaustive check to total degree 5
        let mut mono = vec![0i64; nvars];
        fn rec(
            m: &MonomialIdeal,
            pairs: &[gkzmod::standard_pairs::StandardPair],
            mono: &mut Vec<i64>,
            j: usize,
            left: i64,
        ) -> bool {
            if j == mono.len() {
                let standard = !m.contains_monomial(mono);
                let covered = pairs.iter().any(|p| p.contains_monomial(mono));
                return standard == covered;
            }
            for e in 0..=left {
                mono[j] = e;
                if !rec(m, pairs, mono, j + 1, left - e) {
                    return false;
                }
            }
            mono[j] = 0;
            true
        }
        prop_assert!(rec(&m, &pairs, &mut mono, 0, 5));
    }

    #[test]
    fn reduced_basis_is_canonical(
        gens in prop::collection::vec(poly(r2(), 2, 3), 1..=3),
        rot in 0usize..6,
    ) {
        // the reduced Groebner basis does not depend on generator order
        let i1 = Ideal::new(r2(), gens.clone());
        let mut shuffled = gens;
        let len = shuffled.len();
        shuffled.rotate_left(rot % len);
        let i2 = Ideal::new(r2(), shuffled);
        let g1 = buchberger(&i1, &TermOrder::Grevlex).unwrap();
        let g2 = buchberger(&i2, &TermOrder::Grevlex).unwrap();
        prop_assert_eq!(g1.elements, g2.elements);
    }
}
