use foldlab_core::intlat::*;
use foldlab_core::Error;
use num::{BigInt, Integer, Signed, Zero};
use proptest::prelude::*;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn smith_of_two_by_two_matches_gcd_and_determinant() {
    // d1 = gcd of entries = 2, d1 d2 = |det| = 8
    let m = IntMatrix::from_rows(&[[2, 4], [6, 8]]);
    assert_eq!(smith_normal_form(&m).diagonal(), big(&[2, 4]));
}

#[test]
fn smith_of_rank_deficient_matrix() {
    let m = IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6]]);
    let s = smith_normal_form(&m);
    assert_eq!(s.diagonal(), big(&[1, 0]));
    assert_eq!(s.rank(), 1);
    assert_eq!(kernel_basis(&m).len(), 2);
}

#[test]
fn coinvariant_examples() {
    // inversion on Z: Z/2
    let g = coinvariants(1, &[IntMatrix::from_rows(&[[-1]])]).unwrap();
    assert_eq!(g, FinAbGroup::from_small(0, &[2]));
    assert_eq!(g.to_string(), "Z/2");
    // swap on Z^2: Z
    let g = coinvariants(2, &[IntMatrix::from_rows(&[[0, 1], [1, 0]])]).unwrap();
    assert_eq!(g, FinAbGroup::from_small(1, &[]));
    // -swap on Z^2: (x,y) ~ (-y,-x), quotient Z
    let g = coinvariants(2, &[IntMatrix::from_rows(&[[0, -1], [-1, 0]])]).unwrap();
    assert_eq!(g, FinAbGroup::from_small(1, &[]));
    // -1 on Z^2: (Z/2)^2
    let g = coinvariants(2, &[IntMatrix::from_rows(&[[-1, 0], [0, -1]])]).unwrap();
    assert_eq!(g, FinAbGroup::from_small(0, &[2, 2]));
    // no generators: the lattice itself
    assert_eq!(coinvariants(3, &[]).unwrap(), FinAbGroup::from_small(3, &[]));
}

#[test]
fn coinvariants_reject_bad_generators() {
    assert!(matches!(coinvariants(2, &[IntMatrix::from_rows(&[[2, 0], [0, 1]])]), Err(Error::InvalidAction(_))));
    assert!(matches!(coinvariants(2, &[IntMatrix::identity(3)]), Err(Error::InvalidAction(_))));
}

#[test]
fn group_operations() {
    let g = FinAbGroup::from_small(1, &[2, 12]);
    assert_eq!(g.torsion_order(), BigInt::from(24));
    assert_eq!(g.without_prime(2), FinAbGroup::from_small(1, &[3]));
    assert_eq!(g.without_prime(3), FinAbGroup::from_small(1, &[2, 4]));
    assert!(!g.torsion_is_l_group(2));
    assert!(FinAbGroup::from_small(0, &[2, 8]).torsion_is_l_group(2));
    assert!(FinAbGroup::trivial().is_trivial());
}

#[test]
fn unit_counts() {
    let z2 = FinAbGroup::from_small(0, &[2]);
    assert_eq!(hom_to_units_count(&z2, 3).unwrap(), 2);
    assert_eq!(hom_to_units_count(&z2, 4).unwrap(), 1);
    assert_eq!(hom_to_units_count(&FinAbGroup::from_small(2, &[]), 5).unwrap(), 16);
    assert!(matches!(hom_to_units_count(&z2, 6), Err(Error::Domain(_))));
}

#[test]
fn prime_powers() {
    assert_eq!(prime_power(9), Some((3, 2)));
    assert_eq!(prime_power(12), None);
    assert_eq!(prime_power(2), Some((2, 1)));
    assert!(is_prime(97) && !is_prime(91) && !is_prime(1));
}

#[test]
fn quotient_projection() {
    let q = coinvariant_quotient(2, &[IntMatrix::from_rows(&[[0, 1], [1, 0]])]).unwrap();
    let a = q.project_free_i64(&[1, 0]);
    let b = q.project_free_i64(&[0, 1]);
    assert_eq!(a, b);
    assert!(q.is_zero(&big(&[1, -1])));
    assert!(!q.is_zero(&big(&[1, 0])));
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..4, 1usize..4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..10, c), r))
}

proptest! {
    #[test]
    fn smith_decomposition_is_valid(rows in small_matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert!(s.u.is_unimodular());
        prop_assert!(s.v.is_unimodular());
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        let diag = s.diagonal();
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j { prop_assert!(s.d.get(i, j).is_zero()); }
            }
        }
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            if !w[1].is_zero() { prop_assert!(w[1].is_multiple_of(&w[0])); }
            else { prop_assert!(true); }
        }
        // first invariant factor is the gcd of all entries
        let g = rows.iter().flatten().fold(BigInt::zero(), |a, &x| a.gcd(&BigInt::from(x)));
        prop_assert_eq!(&diag[0], &g);
        if m.is_square() {
            let prod: BigInt = diag.iter().product();
            prop_assert_eq!(prod, m.det().abs());
        }
    }

    #[test]
    fn kernel_vectors_are_killed(rows in small_matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let k = kernel_basis(&m);
        prop_assert_eq!(k.len(), m.cols() - smith_normal_form(&m).rank());
        for v in k {
            prop_assert!(m.apply(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn unimodular_inverse(a in -5i64..6, b in -5i64..6, c in -5i64..6) {
        // products of elementary matrices are unimodular
        let m = IntMatrix::from_rows(&[[1, a, 0], [0, 1, 0], [0, 0, 1]])
            .mul(&IntMatrix::from_rows(&[[1, 0, 0], [b, 1, 0], [0, c, 1]]))
            .mul(&IntMatrix::from_rows(&[[0, 1, 0], [1, 0, 0], [0, 0, -1]]));
        let inv = m.inverse_unimodular().unwrap();
        prop_assert!(m.mul(&inv).is_identity());
    }
}
