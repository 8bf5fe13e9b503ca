use foldlab_core::action::validate;
use foldlab_core::matrixlab::*;
use foldlab_core::presets::by_name;
use foldlab_core::rootdata::weyl::DEFAULT_WEYL_LIMIT;
use foldlab_core::Error;
use num::rational::BigRational;
use num::BigInt;
use rand::{Rng, SeedableRng};

fn predicted(name: &str, q: u64) -> u128 {
    let p = by_name(name).unwrap();
    let act = validate(&p.datum, &p.generators).unwrap();
    bruhat_predicted_count(&p.datum, &act, q, DEFAULT_WEYL_LIMIT).unwrap()
}

#[test]
fn literal_enumeration_small_cases() {
    assert_eq!(count_fixed_enumerate(1, 2, 1 << 20).unwrap(), 6);
    assert_eq!(count_fixed_enumerate(1, 3, 1 << 20).unwrap(), 24);
    assert_eq!(count_fixed_enumerate(1, 4, 1 << 20).unwrap(), 60);
}

#[test]
fn backtracking_agrees_with_enumeration() {
    for q in [2, 3, 4, 5] {
        let lit = count_fixed_enumerate(1, q, 2_000_000).unwrap();
        let bt = count_fixed_backtrack(1, q, DEFAULT_COUNT_BUDGET).unwrap();
        assert_eq!(lit, bt, "q = {q}");
    }
}

#[test]
fn counts_match_bruhat_prediction() {
    for (n, q, expected) in [(1, 2, 6), (1, 3, 24), (1, 4, 60), (1, 5, 120), (2, 2, 720)] {
        let c = count_fixed(n, q, CountOptions::default()).unwrap().count;
        assert_eq!(c, expected, "({n},{q})");
        let name = if n == 1 { "A2-sc-flip" } else { "A4-sc-flip" };
        assert_eq!(predicted(name, q), expected, "({n},{q})");
        assert_eq!(classical_order(n, q), Some(expected));
    }
}

#[test]
fn predicted_counts_follow_classical_orders() {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        assert_eq!(Some(predicted("A2-sc-flip", q)), classical_order(1, q), "q = {q}");
        assert_eq!(Some(predicted("A4-sc-flip", q)), classical_order(2, q), "q = {q}");
        assert_eq!(Some(predicted("A6-sc-flip", q)), classical_order(3, q), "q = {q}");
    }
}

#[test]
fn budget_is_enforced() {
    let tight = CountOptions { budget: 100, enum_limit: DEFAULT_ENUM_LIMIT };
    assert!(matches!(count_fixed(1, 2, tight), Err(Error::Resource(_))));
    assert!(matches!(count_fixed(3, 3, CountOptions::default()), Err(Error::Resource(_))));
    assert!(matches!(count_fixed(1, 6, CountOptions::default()), Err(Error::Domain(_))));
}

#[test]
fn tangent_dimensions() {
    assert_eq!(tangent_dim(1, 3).unwrap(), 3);
    assert_eq!(tangent_dim(1, 2).unwrap(), 5);
    assert_eq!(tangent_dim(2, 3).unwrap(), 10);
    assert!(tangent_dim(2, 2).unwrap() > 10);
    assert!(tangent_dim(1, 4).is_err());
}

#[test]
fn dual_numbers_confirm_linear_solve() {
    for (n, p) in [(1, 2), (1, 3)] {
        let c = dual_number_tangent_count(n, p, 1 << 20).unwrap();
        assert_eq!(c, u128::from(p).pow(tangent_dim(n, p).unwrap() as u32), "({n},{p})");
    }
}

fn generic3(ring: &PolyRing, offset: usize) -> Mat<Poly> {
    (0..3).map(|i| (0..3).map(|j| ring.var(offset + 3 * i + j)).collect()).collect()
}

#[test]
fn embedding_identities_are_polynomial() {
    let ring = PolyRing { nvars: 18 };
    let g = generic3(&ring, 0);
    let h = generic3(&ring, 9);
    let j3 = InvolutedSL::new(1).unwrap().j(&ring);
    for n in 1..=3 {
        let jn = InvolutedSL::new(n).unwrap().j(&ring);
        for i in 1..=n {
            let f = |x: &Mat<Poly>| embed_f(&ring, i, n, x).unwrap();
            assert_eq!(f(&mat_mul(&ring, &g, &h)), mat_mul(&ring, &f(&g), &f(&h)), "hom ({i},{n})");
            assert_eq!(f(&transpose(&g)), transpose(&f(&g)), "transpose ({i},{n})");
            let conj = mat_mul(&ring, &mat_mul(&ring, &j3, &g), &j3);
            assert_eq!(f(&conj), mat_mul(&ring, &mat_mul(&ring, &jn, &f(&g)), &jn), "J ({i},{n})");
            assert_eq!(f(&identity(&ring, 3)), identity(&ring, 2 * n + 1));
        }
    }
    let f11 = embed_f(&ring, 1, 1, &g).unwrap();
    assert_eq!(f11, g);
}

fn random_sl3(f: &Gf, rng: &mut impl Rng) -> Mat<u8> {
    loop {
        let g: Mat<u8> = (0..3).map(|_| (0..3).map(|_| rng.gen_range(0..5u8)).collect()).collect();
        let d = det(f, &g);
        if let Some(di) = f.inv(&d) {
            let mut g = g;
            for x in g[0].iter_mut() {
                *x = f.mul(x, &di);
            }
            return g;
        }
    }
}

#[test]
fn embedding_is_equivariant_on_samples_over_f5() {
    let f = Gf::new(5).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let s3 = InvolutedSL::new(1).unwrap();
    for n in 1..=3 {
        let sn = InvolutedSL::new(n).unwrap();
        for i in 1..=n {
            for _ in 0..50 {
                let g = random_sl3(&f, &mut rng);
                let lhs = sn.theta(&f, &embed_f(&f, i, n, &g).unwrap()).unwrap();
                let rhs = embed_f(&f, i, n, &s3.theta(&f, &g).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

fn sl2(f: &Gf) -> Vec<Mat<u8>> {
    let e: Vec<u8> = f.elements().collect();
    let mut out = Vec::new();
    for &a in &e {
        for &b in &e {
            for &c in &e {
                for &d in &e {
                    let g = vec![vec![a, b], vec![c, d]];
                    if det(f, &g) == 1 {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn xi_odd_is_a_fixed_homomorphism_with_kernel_plus_minus_one() {
    let f = Gf::new(5).unwrap();
    let s3 = InvolutedSL::new(1).unwrap();
    let group = sl2(&f);
    assert_eq!(group.len(), 120);
    let mut kernel = 0;
    for g in &group {
        let x = xi_odd(&f, g).unwrap();
        assert!(s3.is_fixed(&f, &x));
        kernel += usize::from(x == identity(&f, 3));
        for h in group.iter().step_by(7) {
            assert_eq!(xi_odd(&f, &mat_mul(&f, g, h)).unwrap(), mat_mul(&f, &x, &xi_odd(&f, h).unwrap()));
        }
    }
    assert_eq!(kernel, 2);
}

#[test]
fn xi_odd_values() {
    let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let id = identity(&Rationals, 2);
    assert_eq!(xi_odd(&Rationals, &id).unwrap(), identity(&Rationals, 3));
    let w = vec![vec![q(0, 1), q(1, 1)], vec![q(-1, 1), q(0, 1)]];
    let expected = vec![
        vec![q(0, 1), q(0, 1), q(1, 2)],
        vec![q(0, 1), q(-1, 1), q(0, 1)],
        vec![q(2, 1), q(0, 1), q(0, 1)],
    ];
    assert_eq!(xi_odd(&Rationals, &w).unwrap(), expected);
    assert!(matches!(xi_odd(&Gf::new(2).unwrap(), &identity(&Gf::new(2).unwrap(), 2)), Err(Error::Domain(_))));
}

#[test]
fn xi_even_is_a_fixed_homomorphism() {
    for q in [2, 4] {
        let f = Gf::new(q).unwrap();
        let s3 = InvolutedSL::new(1).unwrap();
        let group = sl2(&f);
        for g in &group {
            let x = xi_even(&f, g).unwrap();
            assert!(s3.is_fixed(&f, &x));
            for h in &group {
                assert_eq!(xi_even(&f, &mat_mul(&f, g, h)).unwrap(), mat_mul(&f, &x, &xi_even(&f, h).unwrap()));
            }
        }
    }
    let f = Gf::new(2).unwrap();
    let mut expected = identity(&f, 3);
    expected[0][2] = 1;
    assert_eq!(xi_even(&f, &vec![vec![1, 1], vec![0, 1]]).unwrap(), expected);
    assert!(xi_even(&Gf::new(3).unwrap(), &identity(&Gf::new(3).unwrap(), 2)).is_err());
}

#[test]
fn u3_presentation() {
    let u = u3_fixed_presentation();
    assert!(u.action_is_involution());
    let expected = Poly::from_terms(2, &[(1, &[2, 0]), (-2, &[0, 1])]);
    assert_eq!(u.presentation.variables, vec!["x", "y"]);
    assert_eq!(u.presentation.relations, vec![expected]);
    assert_eq!(u.presentation.to_string(), "Z[x,y]/(x^2 - 2*y)");
    assert_eq!(u.ideal.len(), 2);

    let s2 = u.specialize(2).unwrap();
    assert_eq!(s2.nilpotent, Some(Poly::var(2, 0)));
    assert!(!s2.jacobian_smooth);
    let s3 = u.specialize(3).unwrap();
    assert!(s3.nilpotent.is_none());
    assert!(s3.jacobian_smooth);
    for q in [2, 3, 4, 5, 7, 9] {
        assert_eq!(u.point_count(q).unwrap(), u128::from(q));
    }
}

#[test]
fn unipotent_factors() {
    let shape = |name: &str| {
        let p = by_name(name).unwrap();
        let act = validate(&p.datum, &p.generators).unwrap();
        u_fixed_factors(&p.datum, &act).unwrap()
    };
    assert_eq!(shape("A2-sc-flip"), vec![UFactor::TwistedA2Factor]);
    assert_eq!(shape("A3-sc-flip"), vec![UFactor::AffineLine; 4]);
    assert_eq!(shape("D4-sc-triality"), vec![UFactor::AffineLine; 6]);
    for name in ["A4-sc-flip", "E6-sc-flip", "A2+A2-sc-swap"] {
        let f = shape(name);
        for q in [2, 3, 4] {
            let total: u128 = f.iter().map(|x| x.point_count(q).unwrap()).product();
            assert_eq!(total, u128::from(q).pow(f.len() as u32));
        }
    }
}
