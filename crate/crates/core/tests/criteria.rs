use foldlab_core::action::{validate, PinnedAction};
use foldlab_core::criteria::*;
use foldlab_core::folding::Variant;
use foldlab_core::intlat::FinAbGroup;
use foldlab_core::matrixlab::tangent_dim;
use foldlab_core::presets::{by_name, CATALOG};
use foldlab_core::rootdata::RootDatum;

fn setup(name: &str) -> (RootDatum, PinnedAction) {
    let p = by_name(name).unwrap();
    let act = validate(&p.datum, &p.generators).unwrap();
    (p.datum, act)
}

#[test]
fn a2_flip_over_the_integers() {
    let (d, act) = setup("A2-sc-flip");
    let r = decide(&d, &act, &BaseSpec::AllPrimes).unwrap();
    assert!(r.flat.value);
    assert!(r.geometrically_connected.value);
    assert!(!r.smooth.value);
    assert!(r.has_active_a2n);
    assert!(r.smooth.reason.contains("2"));
}

#[test]
fn a2_flip_away_from_two() {
    let (d, act) = setup("A2-sc-flip");
    let r = decide(&d, &act, &BaseSpec::explicit(&[3, 5]).unwrap()).unwrap();
    assert!(r.smooth.value);
    assert!(r.quasi_reductive_over_mixed_char_dvr.value);
    assert_eq!(r.quasi_reductive_by_prime, vec![(3, true), (5, true)]);
}

#[test]
fn torus_inversion() {
    let (d, act) = setup("A1-torus-inversion");
    let r = decide(&d, &act, &BaseSpec::explicit(&[3]).unwrap()).unwrap();
    assert!(!r.geometrically_connected.value);
    assert!(r.smooth.value);
    assert_eq!(r.torsion, FinAbGroup::from_small(0, &[2]));
}

#[test]
fn empty_residual_set_requires_torsion_freeness() {
    for name in CATALOG {
        let (d, act) = setup(name);
        let r = decide(&d, &act, &BaseSpec::explicit(&[]).unwrap()).unwrap();
        assert!(r.smooth.value, "{name}");
        assert_eq!(r.geometrically_connected.value, r.torsion.is_torsion_free(), "{name}");
    }
}

#[test]
fn fiber_reports() {
    let (d, act) = setup("A2-sc-flip");
    let f0 = fiber_report(&d, &act, 0).unwrap();
    assert_eq!((f0.dimension, f0.reduced, f0.variant), (3, true, Variant::R1));
    assert!(f0.component_group.is_trivial());
    let f2 = fiber_report(&d, &act, 2).unwrap();
    assert_eq!((f2.dimension, f2.reduced, f2.variant), (3, false, Variant::R2));
    assert!(f2.component_group.is_trivial());
    let (d, act) = setup("A4-sc-flip");
    let f = fiber_report(&d, &act, 2).unwrap();
    assert_eq!((f.dimension, f.reduced, f.variant), (10, false, Variant::R2));
}

#[test]
fn dimension_is_independent_of_the_characteristic() {
    for name in CATALOG {
        let (d, act) = setup(name);
        let dims: Vec<usize> = [0, 2, 3, 5, 7].iter().map(|&p| fiber_report(&d, &act, p).unwrap().dimension).collect();
        assert!(dims.windows(2).all(|w| w[0] == w[1]), "{name}: {dims:?}");
    }
}

#[test]
fn component_groups() {
    let (d, act) = setup("A1-torus-inversion");
    assert_eq!(fiber_report(&d, &act, 3).unwrap().component_group, FinAbGroup::from_small(0, &[2]));
    assert_eq!(fiber_report(&d, &act, 0).unwrap().component_group, FinAbGroup::from_small(0, &[2]));
    assert!(fiber_report(&d, &act, 2).unwrap().component_group.is_trivial());
}

#[test]
fn tangent_dimension_detects_smoothness_on_matrix_models() {
    for name in ["A2-sc-flip", "A4-sc-flip"] {
        let p = by_name(name).unwrap();
        let n = p.matrix_model.unwrap();
        let act = validate(&p.datum, &p.generators).unwrap();
        for prime in [2, 3, 5] {
            let f = fiber_report(&p.datum, &act, prime).unwrap();
            let t = tangent_dim(n, prime).unwrap();
            assert_eq!(t == f.dimension, f.reduced, "{name} at {prime}");
            assert!(t >= f.dimension);
        }
    }
}

#[test]
fn connectedness_with_a_single_prime() {
    let (d, act) = setup("A1-torus-inversion");
    assert!(decide(&d, &act, &BaseSpec::explicit(&[2]).unwrap()).unwrap().geometrically_connected.value);
    assert!(!decide(&d, &act, &BaseSpec::explicit(&[2, 3]).unwrap()).unwrap().geometrically_connected.value);
    assert!(!decide(&d, &act, &BaseSpec::AllPrimes).unwrap().geometrically_connected.value);
}
