use num_bigint::BigUint;
use olevel::binomial::{binom, binom_u64, macaulay_expand, macaulay_growth, OSequence};
use olevel::monomial::MonomialIdeal;
use olevel::oracle::{hilbert_function, koszul_betti};
use olevel::resolution::ek_betti;
use olevel::sweep::enumerate_o_sequences;
use olevel::typevector::{hf_from_typevector, typevector_from_hf, TypeVector};
use proptest::prelude::*;

proptest! {
    #[test]
    fn expansion_sums_back_and_is_strict(h in 1u64..5_000_000, i in 1u32..12) {
        let e = macaulay_expand(h, i);
        let total: BigUint = e.terms.iter().map(|t| binom(t.top, t.bottom as u64)).sum();
        prop_assert_eq!(total, BigUint::from(h));
        prop_assert_eq!(e.terms[0].bottom, i);
        for w in e.terms.windows(2) {
            prop_assert!(w[0].top > w[1].top);
            prop_assert_eq!(w[0].bottom, w[1].bottom + 1);
        }
        let last = e.terms.last().unwrap();
        prop_assert!(last.top >= last.bottom as u64 && last.bottom >= 1);
    }

    #[test]
    fn growth_is_monotone(h in 0u64..100_000, i in 1u32..10) {
        prop_assert!(macaulay_growth(h, i) <= macaulay_growth(h + 1, i));
        prop_assert!(macaulay_growth(h, i) >= BigUint::from(h));
    }

    #[test]
    fn full_ring_is_a_fixpoint(n in 1u64..7, t in 1u64..15) {
        // dim R_t = C(t+n-1, t) grows to exactly dim R_{t+1}.
        let here = binom_u64(t + n - 1, t).unwrap();
        let next = binom_u64(t + n, t + 1).unwrap();
        prop_assert_eq!(macaulay_growth(here, t as u32), BigUint::from(next));
    }

    #[test]
    fn sequence_text_round_trips(v in proptest::collection::vec(1u64..50, 0..10)) {
        let mut vals = vec![1];
        vals.extend(v);
        let h = OSequence::new(vals).unwrap();
        prop_assert_eq!(h.to_string().parse::<OSequence>().unwrap(), h);
    }

    #[test]
    fn two_type_text_round_trips(mask in 1u32..(1 << 12)) {
        let ds: Vec<u32> = (1..=12).filter(|b| mask & (1 << (b - 1)) != 0).collect();
        let t = TypeVector::two(&ds);
        prop_assert_eq!(t.to_string().parse::<TypeVector>().unwrap(), t.clone());
        let h = hf_from_typevector(&t).unwrap();
        // a plane configuration has Σ d_j points
        prop_assert_eq!(h.values().iter().sum::<u64>(), ds.iter().map(|&d| d as u64).sum::<u64>());
    }
}

#[test]
fn three_type_point_count() {
    for t in olevel::typevector::enumerate_type_vectors3(6) {
        let h = hf_from_typevector(&t).unwrap();
        let points: u64 = t
            .children()
            .iter()
            .flat_map(|c| c.entries().unwrap())
            .map(u64::from)
            .sum();
        assert_eq!(h.values().iter().sum::<u64>(), points, "{t}");
        assert_eq!(typevector_from_hf(&h).unwrap(), t);
    }
}

#[test]
fn lex_ideal_round_trips_and_is_stable() {
    for h in enumerate_o_sequences(3, 6, 10) {
        let ideal = MonomialIdeal::lex(&h, 3).unwrap();
        assert!(ideal.is_stable(), "({h})");
        assert_eq!(hilbert_function(&ideal, h.socle_degree() + 2).unwrap(), h);
    }
}

#[test]
fn ek_matches_koszul_in_four_variables() {
    for h in enumerate_o_sequences(4, 3, 6) {
        let ideal = MonomialIdeal::lex(&h, 4).unwrap();
        let ek = ek_betti(&ideal).unwrap();
        let kz = koszul_betti(&ideal, h.socle_degree() + 5).unwrap();
        assert_eq!(ek, kz, "({h})");
    }
}
