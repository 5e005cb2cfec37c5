use coxorbit::checks;
use coxorbit::weyl::{enumerate_min_coset_reps, DEFAULT_CAP};
use coxorbit::{build_root_system, Family, GroupTable, IJKDatum, ParabolicSubset, WeylElement};
use proptest::prelude::*;

#[test]
fn bruhat_matches_subword_and_tableau_criteria() {
    for (f, n) in [(Family::A, 3), (Family::A, 4), (Family::B, 3), (Family::G, 2), (Family::D, 4)] {
        checks::bruhat_oracles(f, n).unwrap_or_else(|e| panic!("{f}{n}: {e}"));
    }
}

#[test]
fn bruhat_on_min_coset_reps_is_graded() {
    for (n, k) in [(3, vec![2]), (4, vec![1, 3]), (4, vec![2])] {
        let sys = build_root_system(Family::A, n).unwrap();
        let table = GroupTable::new(&sys, DEFAULT_CAP).unwrap();
        let reps = enumerate_min_coset_reps(&sys, &ParabolicSubset::new(k.iter().copied()), DEFAULT_CAP).unwrap();
        let idx: Vec<usize> = reps.iter().map(|w| table.index_of(w).unwrap()).collect();
        for &a in &idx {
            for &b in &idx {
                if a == b || !table.bruhat_leq(a, b) {
                    continue;
                }
                let between = idx.iter().any(|&c| c != a && c != b && table.bruhat_leq(a, c) && table.bruhat_leq(c, b));
                if !between {
                    assert_eq!(table.length(b), table.length(a) + 1);
                }
            }
        }
    }
}

#[test]
fn quotient_orders_pass_the_cover_and_coset_checks() {
    for (label, datum) in checks::standard_data().unwrap() {
        checks::covers_theorem(&datum).unwrap_or_else(|e| panic!("{label}: {e}"));
        checks::coset_oracle(&datum).unwrap_or_else(|e| panic!("{label}: {e}"));
    }
}

#[test]
fn orders_agree_for_small_type_a_data() {
    for (n, r) in [(3, 1), (4, 1), (4, 2), (5, 1), (5, 2)] {
        checks::prop_equiv(n, r).unwrap_or_else(|e| panic!("({n},{r}): {e}"));
    }
}

#[test]
fn empty_datum_gives_the_whole_bruhat_order() {
    let sys = build_root_system(Family::A, 2).unwrap();
    let datum = IJKDatum::new(&sys, ParabolicSubset::empty(), ParabolicSubset::empty(), ParabolicSubset::empty(), &[])
        .unwrap();
    let poset = datum.build_poset(DEFAULT_CAP).unwrap();
    assert_eq!(poset.nodes.len(), 6);
    assert_eq!(poset.edges.len(), 8);
    assert!(poset.is_graded());
}

fn word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=4, 0..14)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn reduced_words_reproduce_elements(w in word()) {
        let sys = build_root_system(Family::B, 4).unwrap();
        let x = WeylElement::from_word(&sys, &w).unwrap();
        let red = x.reduced_word();
        prop_assert_eq!(red.len(), x.length());
        prop_assert_eq!(WeylElement::from_word(&sys, &red).unwrap(), x.clone());
        prop_assert_eq!(x.inverse().length(), x.length());
    }

    #[test]
    fn bruhat_is_compatible_with_length_and_inverse(a in word(), b in word()) {
        let sys = build_root_system(Family::A, 4).unwrap();
        let u = WeylElement::from_word(&sys, &a).unwrap();
        let w = WeylElement::from_word(&sys, &b).unwrap();
        let le = u.bruhat_leq(&w).unwrap();
        if le {
            prop_assert!(u.length() <= w.length());
        }
        prop_assert_eq!(u.inverse().bruhat_leq(&w.inverse()).unwrap(), le);
        let tableau = coxorbit::link_pattern::tableau_leq(&u.to_line_notation().unwrap(), &w.to_line_notation().unwrap());
        prop_assert_eq!(tableau, le);
    }

    #[test]
    fn parabolic_factorization_multiplies_back(w in word(), mask in 0u8..16) {
        let sys = build_root_system(Family::D, 4).unwrap();
        let l = ParabolicSubset::new((1..=4).filter(|i| mask & (1 << (i - 1)) != 0));
        let x = WeylElement::from_word(&sys, &w).unwrap();
        let (upper, lower) = x.parabolic_decompose(&l).unwrap();
        prop_assert!(upper.is_min_coset_rep(&l));
        prop_assert!(lower.in_parabolic(&l).unwrap());
        prop_assert_eq!(upper.length() + lower.length(), x.length());
        prop_assert_eq!(upper.mul(&lower).unwrap(), x);
    }

    #[test]
    fn canonical_rep_is_constant_on_cosets(w in prop::collection::vec(1usize..=5, 0..12)) {
        let datum = IJKDatum::type_a(6, 2).unwrap();
        let x = WeylElement::from_word(datum.system(), &w).unwrap();
        let q = datum.canonical_rep(&x).unwrap();
        for y in datum.coset(&x).unwrap() {
            prop_assert_eq!(&datum.canonical_rep(&y).unwrap().rep, &q.rep);
            prop_assert!(q.length() <= y.length());
        }
    }
}
