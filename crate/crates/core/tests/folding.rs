use foldlab_core::action::{validate, PinnedAction};
use foldlab_core::folding::*;
use foldlab_core::intlat::FinAbGroup;
use foldlab_core::presets::{by_name, CATALOG};
use foldlab_core::rootdata::weyl::{weyl_group, DEFAULT_WEYL_LIMIT};
use foldlab_core::rootdata::{build_preset, Family, Isogeny, RootDatum};
use proptest::prelude::*;

fn setup(name: &str) -> (RootDatum, PinnedAction) {
    let p = by_name(name).unwrap();
    let act = validate(&p.datum, &p.generators).unwrap();
    (p.datum, act)
}

fn coeffs(d: &RootDatum, roots: &[usize]) -> Vec<Vec<i64>> {
    roots.iter().map(|&r| d.coefficients(r).to_vec()).collect()
}

#[test]
fn a2_flip_has_one_twisted_class() {
    let (d, act) = setup("A2-sc-flip");
    let cl = equivalence_classes(&d, &act).unwrap();
    assert_eq!(cl.len(), 1);
    assert_eq!(cl[0].class_type, ClassType::TypeII);
    assert_eq!(coeffs(&d, &cl[0].members), vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    assert_eq!(coeffs(&d, &cl[0].special), vec![vec![1, 1]]);
}

#[test]
fn a3_flip_classes() {
    let (d, act) = setup("A3-sc-flip");
    let cl = equivalence_classes(&d, &act).unwrap();
    assert!(cl.iter().all(|c| c.class_type == ClassType::TypeI));
    let got: Vec<Vec<Vec<i64>>> = cl.iter().map(|c| coeffs(&d, &c.members)).collect();
    assert_eq!(
        got,
        vec![
            vec![vec![1, 0, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0]],
            vec![vec![1, 1, 0], vec![0, 1, 1]],
            vec![vec![1, 1, 1]],
        ]
    );
}

#[test]
fn d4_triality_folds_to_g2() {
    let (d, act) = setup("D4-sc-triality");
    let cl = equivalence_classes(&d, &act).unwrap();
    assert_eq!(cl.len(), 6);
    assert!(cl.iter().all(|c| c.class_type == ClassType::TypeI));
    let r1 = folded_root_datum(&d, &act, Variant::R1).unwrap();
    assert_eq!(r1.datum.cartan_type().unwrap().components, vec![(Family::G, 2)]);
    let mut off: Vec<i64> = vec![r1.datum.cartan_matrix()[0][1], r1.datum.cartan_matrix()[1][0]];
    off.sort_unstable();
    assert_eq!(off, vec![-3, -1]);
    assert_eq!(fixed_weyl(&d, &act, DEFAULT_WEYL_LIMIT).unwrap().order(), 12);
    assert_eq!(weyl_group(&r1.datum, DEFAULT_WEYL_LIMIT).unwrap().order(), 12);
}

#[test]
fn a2_flip_folds_to_pgl2_and_sl2() {
    let (d, act) = setup("A2-sc-flip");
    let [r1, r2, nr] = folded_root_data(&d, &act).unwrap();
    let a1 = "A1".parse().unwrap();
    assert!(r1.datum.is_isomorphic(&build_preset(&a1, Isogeny::Adjoint).unwrap()).unwrap());
    assert!(r2.datum.is_isomorphic(&build_preset(&a1, Isogeny::SimplyConnected).unwrap()).unwrap());
    assert!(!r1.datum.is_isomorphic(&r2.datum).unwrap());
    // exact lattice data in the chosen basis of M_A
    let mut r1_roots = r1.datum.roots().to_vec();
    r1_roots.sort();
    assert_eq!(r1_roots, vec![vec![-1], vec![1]]);
    assert_eq!(r1.datum.coroot(r1.datum.find(&[1]).unwrap()), &[2]);
    assert_eq!(r2.datum.coroot(r2.datum.find(&[2]).unwrap()), &[1]);
    assert!(!nr.datum.is_reduced());
    assert_eq!(nr.datum.num_roots(), 4);
}

#[test]
fn a4_flip_variants() {
    let (d, act) = setup("A4-sc-flip");
    let [r1, r2, nr] = folded_root_data(&d, &act).unwrap();
    assert_eq!(r1.datum.cartan_type().unwrap().to_string(), "B2");
    assert_eq!(r2.datum.cartan_type().unwrap().to_string(), "C2");
    assert_eq!(nr.datum.cartan_type().unwrap().to_string(), "BC2");
    assert_eq!(equivalence_classes(&d, &act).unwrap().len(), 4);
}

#[test]
fn fixed_weyl_orders() {
    let d = build_preset(&"A2".parse().unwrap(), Isogeny::SimplyConnected).unwrap();
    assert_eq!(fixed_weyl(&d, &PinnedAction::trivial(&d), DEFAULT_WEYL_LIMIT).unwrap().order(), 6);
    let (d, act) = setup("A2-sc-flip");
    assert_eq!(fixed_weyl(&d, &act, DEFAULT_WEYL_LIMIT).unwrap().order(), 2);
    let (d, act) = setup("E6-sc-flip");
    assert_eq!(fixed_weyl(&d, &act, DEFAULT_WEYL_LIMIT).unwrap().order(), 1152);
}

#[test]
fn centers() {
    let a1 = build_preset(&"A1".parse().unwrap(), Isogeny::SimplyConnected).unwrap();
    assert_eq!(center_structure(&a1, &PinnedAction::trivial(&a1)).unwrap(), FinAbGroup::from_small(0, &[2]));
    let (d, act) = setup("A2-sc-flip");
    assert!(center_structure(&d, &act).unwrap().is_trivial());
    let (d, act) = setup("A3-sc-flip");
    assert_eq!(center_structure(&d, &act).unwrap(), FinAbGroup::from_small(0, &[2]));
}

#[test]
fn parabolics() {
    let (d, act) = setup("A4-sc-flip");
    let all = parabolic_correspondence(&d, &act, d.basis()).unwrap();
    assert_eq!(all.folded_subset, vec![0, 1]);
    let borel = parabolic_correspondence(&d, &act, &[]).unwrap();
    assert!(borel.folded_subset.is_empty());
    // the four simple roots have two distinct images
    assert_eq!(borel.generators.len(), 2);
    assert_eq!(all.generators.len(), 4);
    let ends = parabolic_correspondence(&d, &act, &[d.basis()[0], d.basis()[3]]).unwrap();
    assert_eq!(ends.folded_subset.len(), 1);
    assert!(parabolic_correspondence(&d, &act, &[d.basis()[0]]).is_err());
}

#[test]
fn isogeny_checks() {
    for name in CATALOG {
        let (d, act) = setup(name);
        assert!(isogeny_injectivity_check(&d, &act).unwrap(), "{name}");
    }
    let d = build_preset(&"B3".parse().unwrap(), Isogeny::Adjoint).unwrap();
    assert!(isogeny_injectivity_check(&d, &PinnedAction::trivial(&d)).unwrap());
}

#[test]
fn nonreduced_input_rejected() {
    let (d, act) = setup("A2-sc-flip");
    let nr = folded_root_datum(&d, &act, Variant::NonReduced).unwrap();
    let triv = PinnedAction::trivial(&nr.datum);
    assert!(equivalence_classes(&nr.datum, &triv).is_err());
}

#[test]
fn catalog_has_no_invariant_violations() {
    for name in CATALOG {
        let (d, act) = setup(name);
        assert_eq!(invariant_violations(&d, &act, DEFAULT_WEYL_LIMIT).unwrap(), Vec::<String>::new(), "{name}");
    }
}

const EXTRA: &[&str] = &[
    "A1-sc-identity",
    "A2-ad-flip",
    "A4-ad-flip",
    "A6-sc-flip",
    "A6-ad-flip",
    "A3-ad-flip",
    "A5-ad-flip",
    "D4-ad-triality",
    "D4-ad-cyclic3",
    "D5-sc-flip",
    "D5-ad-flip",
    "D4-sc-flip",
    "A2+A2-ad-swap",
    "A3+A3-sc-swap",
    "A1+A1-sc-swap",
    "A4+A4-sc-swap",
    "B3+B3-ad-swap",
    "E6-ad-flip",
    "G2-sc-identity",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn invariants_hold_on_named_actions(k in 0..EXTRA.len()) {
        let (d, act) = setup(EXTRA[k]);
        let v = invariant_violations(&d, &act, DEFAULT_WEYL_LIMIT).unwrap();
        prop_assert!(v.is_empty(), "{}: {:?}", EXTRA[k], v);
        // classes partition the positive roots
        let cl = equivalence_classes(&d, &act).unwrap();
        let total: usize = cl.iter().map(|c| c.members.len()).sum();
        prop_assert_eq!(total, d.positive_roots().len());
    }
}
