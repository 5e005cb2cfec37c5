use coxorbit::checks;
use coxorbit::nilpotent::{
    chain_cascade, classify, enumerate_orthogonal_sets, height_of_sum, is_rationally_orthogonal, is_spherical,
    weighted_dynkin, ClassificationReport, OrthogonalSet,
};
use coxorbit::{build_root_system, Family, WeylElement};
use proptest::prelude::*;

#[test]
fn combinations_classify_in_every_scanned_system() {
    for (f, n) in [
        (Family::A, 4),
        (Family::B, 3),
        (Family::B, 4),
        (Family::C, 3),
        (Family::C, 4),
        (Family::D, 4),
        (Family::F, 4),
        (Family::G, 2),
    ] {
        checks::combination_scan(f, n, 4).unwrap_or_else(|e| panic!("{f}{n}: {e}"));
    }
}

#[test]
fn simply_laced_orthogonal_pairs_are_strongly_orthogonal() {
    for (f, n) in [(Family::A, 5), (Family::D, 5), (Family::E, 6)] {
        checks::combination_scan(f, n, 2).unwrap_or_else(|e| panic!("{f}{n}: {e}"));
    }
}

#[test]
fn rationally_orthogonal_sets_are_spherical() {
    for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G, 2), (Family::F, 4)] {
        let sys = build_root_system(f, n).unwrap();
        for set in enumerate_orthogonal_sets(&sys) {
            if is_rationally_orthogonal(&set).unwrap() {
                let v = is_spherical(&set).unwrap();
                assert!(v.spherical() && v.height <= 3, "{set}");
            }
        }
    }
}

/// Along every cascade, height 2 comes with an already dominant `Σ θ^∨`.
#[test]
fn cascade_prefixes_of_height_two_are_dominant() {
    let systems = [
        (Family::A, 6),
        (Family::B, 5),
        (Family::C, 5),
        (Family::D, 6),
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
        (Family::F, 4),
        (Family::G, 2),
    ];
    for (f, n) in systems {
        let sys = build_root_system(f, n).unwrap();
        let tree = chain_cascade(&sys).unwrap();
        tree.walk(&mut |node| {
            if node.chain.is_empty() {
                return;
            }
            let set = OrthogonalSet::new(&sys, node.chain.clone()).unwrap();
            if height_of_sum(&set).unwrap() == 2 {
                assert!(node.coweight.is_dominant(), "{f}{n}: {set}");
            }
        });
    }
}

#[test]
fn cascade_chains_are_orthogonal_and_end_at_leaves() {
    let sys = build_root_system(Family::A, 3).unwrap();
    let tree = chain_cascade(&sys).unwrap();
    assert_eq!(tree.depth(), 2);
    let leaf = &tree.children[0].children[0];
    assert_eq!(leaf.chain.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(), vec![vec![1, 1, 1], vec![0, 1, 0]]);
    let g2 = build_root_system(Family::G, 2).unwrap();
    let tree = chain_cascade(&g2).unwrap();
    let leaf = &tree.children[0].children[0];
    assert_eq!(leaf.chain.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(), vec![vec![3, 2], vec![1, 0]]);
}

#[test]
fn report_roundtrips_through_json() {
    let sys = build_root_system(Family::G, 2).unwrap();
    let set = OrthogonalSet::from_coords(&sys, &[vec![3, 2], vec![1, 0]]).unwrap();
    let report = classify(&set).unwrap();
    assert_eq!(report.height, 4);
    assert!(!report.spherical);
    let text = serde_json::to_string(&report).unwrap();
    let back: ClassificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
}

#[test]
fn empty_set_gives_whole_levi() {
    let sys = build_root_system(Family::D, 5).unwrap();
    let set = OrthogonalSet::new(&sys, vec![]).unwrap();
    let report = classify(&set).unwrap();
    assert_eq!(report.involution.levi, vec![1, 2, 3, 4, 5]);
    assert_eq!(report.involution.folded_type, "D5");
    assert_eq!(report.height, 0);
}

fn e6_sets() -> Vec<OrthogonalSet> {
    let sys = build_root_system(Family::E, 6).unwrap();
    enumerate_orthogonal_sets(&sys).into_iter().filter(|s| s.len() <= 3).step_by(7).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn labels_do_not_depend_on_the_translate(idx in 0usize..200, word in prop::collection::vec(1usize..=6, 0..12)) {
        let sets = e6_sets();
        let set = &sets[idx % sets.len()];
        let w = WeylElement::from_word(set.system(), &word).unwrap();
        let moved = set.translate(&w).unwrap();
        prop_assert_eq!(weighted_dynkin(&moved), weighted_dynkin(set));
        prop_assert_eq!(height_of_sum(&moved).unwrap(), height_of_sum(set).unwrap());
    }

    #[test]
    fn grading_is_symmetric(idx in 0usize..200) {
        let sets = e6_sets();
        let set = &sets[idx % sets.len()];
        let h = weighted_dynkin(set);
        let dims = coxorbit::nilpotent::grading_dimensions(set.system(), &h);
        for (&k, &d) in &dims {
            if k != 0 {
                prop_assert_eq!(dims.get(&-k).copied(), Some(d));
            }
        }
        let top = dims.keys().copied().max().unwrap();
        prop_assert_eq!(top, h.eval(set.system().highest_root().coords()));
    }
}
