//! Root data with a chosen basis of simple roots.

pub mod cartan;
pub mod weyl;

use std::collections::HashMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{ToPrimitive, Zero};

pub use cartan::{CartanType, Family};
pub use weyl::{weyl_group, Perm, WeylGroup, DEFAULT_WEYL_LIMIT};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
}

/// A root datum `(M, R, M^vee, R^vee)` with basis `Delta`.
///
/// Roots are integer vectors in a basis of `M`, coroots in the dual basis of
/// `M^vee`, so the pairing is the plain dot product.
#[derive(Clone, Debug)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    basis: Vec<usize>,
    reduced: bool,
    coeffs: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    neg: Vec<usize>,
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootDatum {
    /// Validates and builds a root datum.
    pub fn new(
        rank: usize,
        roots: Vec<Vec<i64>>,
        coroots: Vec<Vec<i64>>,
        basis: Vec<usize>,
        reduced: bool,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidDatum(m));
        if roots.len() != coroots.len() {
            return bad(format!("{} roots but {} coroots", roots.len(), coroots.len()));
        }
        if roots.iter().chain(&coroots).any(|v| v.len() != rank) {
            return bad(format!("every root and coroot must have {rank} coordinates"));
        }
        let mut index = HashMap::with_capacity(roots.len());
        for (i, r) in roots.iter().enumerate() {
            if r.iter().all(|&x| x == 0) {
                return bad(format!("root {i} is zero"));
            }
            if index.insert(r.clone(), i).is_some() {
                return bad(format!("root {r:?} listed twice"));
            }
        }
        let coroot_index: HashMap<&Vec<i64>, usize> = coroots.iter().enumerate().map(|(i, c)| (c, i)).collect();
        if coroot_index.len() != coroots.len() {
            return bad("coroots are not distinct".into());
        }
        for i in 0..roots.len() {
            if dot(&roots[i], &coroots[i]) != 2 {
                return bad(format!("<alpha, alpha^vee> != 2 for root {i}"));
            }
        }
        // reflection stability, compatible with the root/coroot bijection
        for j in 0..roots.len() {
            for i in 0..roots.len() {
                let p = dot(&roots[i], &coroots[j]);
                let img: Vec<i64> = roots[i].iter().zip(&roots[j]).map(|(b, a)| b - p * a).collect();
                let Some(&k) = index.get(&img) else {
                    return bad(format!("reflection in root {j} does not preserve the roots"));
                };
                let q = dot(&roots[j], &coroots[i]);
                let cimg: Vec<i64> = coroots[i].iter().zip(&coroots[j]).map(|(b, a)| b - q * a).collect();
                if coroot_index.get(&cimg) != Some(&k) {
                    return bad(format!("reflection in coroot {j} does not match the root reflection"));
                }
            }
        }
        let neg: Vec<usize> = roots
            .iter()
            .map(|r| {
                let m: Vec<i64> = r.iter().map(|x| -x).collect();
                index.get(&m).copied()
            })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidDatum("root set is not symmetric".into()))?;
        if reduced {
            for r in &roots {
                let d: Vec<i64> = r.iter().map(|x| 2 * x).collect();
                if index.contains_key(&d) {
                    return bad(format!("datum marked reduced but 2*{r:?} is a root"));
                }
            }
        }
        if basis.iter().any(|&b| b >= roots.len()) {
            return bad("basis index out of range".into());
        }
        let basis_vecs: Vec<Vec<i64>> = basis.iter().map(|&b| roots[b].clone()).collect();
        let coeffs = express_in_basis(&basis_vecs, &roots)
            .ok_or_else(|| Error::InvalidDatum("basis is dependent or does not span the roots integrally".into()))?;
        for (i, c) in coeffs.iter().enumerate() {
            if !(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0)) {
                return bad(format!("root {i} is neither positive nor negative for the basis"));
            }
        }
        Ok(RootDatum { rank, roots, coroots, basis, reduced, coeffs, index, neg })
    }

    /// A torus of the given rank: no roots.
    pub fn torus(rank: usize) -> Self {
        Self::new(rank, vec![], vec![], vec![], true).expect("a torus is a valid datum")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// `<root i, coroot j>`
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        dot(&self.roots[i], &self.coroots[j])
    }

    /// Coefficients of root `i` in the basis.
    pub fn coefficients(&self, i: usize) -> &[i64] {
        &self.coeffs[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coeffs[i].iter().sum()
    }

    pub fn find(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn negative(&self, i: usize) -> usize {
        self.neg[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.coeffs[i].iter().all(|&x| x >= 0)
    }

    /// Indices of the positive roots, in storage order.
    pub fn positive_roots(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.is_positive(i)).collect()
    }

    /// Position of a root inside the basis list.
    pub fn basis_position(&self, root: usize) -> Option<usize> {
        self.basis.iter().position(|&b| b == root)
    }

    /// Index of `root i + root j` if it is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[i].iter().zip(&self.roots[j]).map(|(a, b)| a + b).collect();
        self.find(&s)
    }

    /// Cartan matrix on the basis: `a_ij = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.basis
            .iter()
            .map(|&i| self.basis.iter().map(|&j| self.pairing(i, j)).collect())
            .collect()
    }

    /// Dynkin components as lists of basis positions.
    pub fn simple_components(&self) -> Vec<Vec<usize>> {
        cartan::diagram_components(&self.cartan_matrix())
    }

    /// Component (in the order of [`Self::simple_components`]) containing a root.
    pub fn root_component(&self, i: usize) -> usize {
        let comps = self.simple_components();
        let pos = self.coeffs[i].iter().position(|&x| x != 0).expect("roots are nonzero");
        comps.iter().position(|c| c.contains(&pos)).expect("every basis node lies in a component")
    }

    /// Partition of all root indices into indecomposable constituents.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let comps = self.simple_components();
        let mut out = vec![Vec::new(); comps.len()];
        for i in 0..self.roots.len() {
            let pos = self.coeffs[i].iter().position(|&x| x != 0).expect("roots are nonzero");
            let c = comps.iter().position(|c| c.contains(&pos)).unwrap();
            out[c].push(i);
        }
        out
    }

    /// Recognized Cartan type, one entry per component. Components with
    /// divisible roots are reported as `BC`.
    pub fn cartan_type(&self) -> Result<CartanType> {
        let cm = self.cartan_matrix();
        let comps = self.simple_components();
        let by_root = self.components();
        let mut out = Vec::new();
        for (c, nodes) in comps.iter().enumerate() {
            let (fam, n) = cartan::recognize_component(&cm, nodes)?;
            let nonreduced = by_root[c].iter().any(|&i| {
                let d: Vec<i64> = self.roots[i].iter().map(|x| 2 * x).collect();
                self.index.contains_key(&d)
            });
            out.push(if nonreduced { (Family::BC, n) } else { (fam, n) });
        }
        CartanType::new(out)
    }

    /// Root permutation induced by the reflection in root `j`.
    pub fn reflection_perm(&self, j: usize) -> Perm {
        (0..self.roots.len())
            .map(|i| {
                let p = self.pairing(i, j);
                let img: Vec<i64> = self.roots[i].iter().zip(&self.roots[j]).map(|(b, a)| b - p * a).collect();
                self.index[&img] as u16
            })
            .collect()
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn length(&self, w: &Perm) -> usize {
        (0..self.roots.len()).filter(|&i| self.is_positive(i) && !self.is_positive(w[i] as usize)).count()
    }

    /// True if some automorphism of the lattice carries this datum onto
    /// `other`, matching bases. Only decided for semisimple data of full rank.
    pub fn is_isomorphic(&self, other: &RootDatum) -> Result<bool> {
        let l = self.basis.len();
        if self.rank != other.rank || l != other.basis.len() || self.roots.len() != other.roots.len() {
            return Ok(false);
        }
        if l != self.rank {
            return Err(Error::Domain("isomorphism test needs a semisimple datum".into()));
        }
        let ca = self.cartan_matrix();
        let cb = other.cartan_matrix();
        let mut perm = Vec::with_capacity(l);
        let mut used = vec![false; l];
        Ok(self.match_bases(other, &ca, &cb, &mut perm, &mut used))
    }

    fn match_bases(
        &self,
        other: &RootDatum,
        ca: &[Vec<i64>],
        cb: &[Vec<i64>],
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let k = perm.len();
        let l = ca.len();
        if k == l {
            return self.check_basis_map(other, perm);
        }
        for t in 0..l {
            if used[t] {
                continue;
            }
            if (0..k).any(|s| ca[s][k] != cb[perm[s]][t] || ca[k][s] != cb[t][perm[s]]) {
                continue;
            }
            perm.push(t);
            used[t] = true;
            if self.match_bases(other, ca, cb, perm, used) {
                return true;
            }
            perm.pop();
            used[t] = false;
        }
        false
    }

    fn check_basis_map(&self, other: &RootDatum, perm: &[usize]) -> bool {
        // g maps basis root k to other's basis root perm[k]: g = B' B^{-1}
        let l = perm.len();
        let src = crate::intlat::IntMatrix::from_columns(
            l,
            &self.basis.iter().map(|&b| big_vec(&self.roots[b])).collect::<Vec<_>>(),
        );
        let dst = crate::intlat::IntMatrix::from_columns(
            l,
            &perm.iter().map(|&t| big_vec(&other.roots[other.basis[t]])).collect::<Vec<_>>(),
        );
        let Some(inv) = src.rational_inverse() else { return false };
        let mut g = crate::intlat::IntMatrix::zeros(l, l);
        for i in 0..l {
            for j in 0..l {
                let mut s = BigRational::zero();
                for k in 0..l {
                    s += BigRational::from_integer(dst.get(i, k).clone()) * &inv[k][j];
                }
                if !s.is_integer() {
                    return false;
                }
                g.set(i, j, s.to_integer());
            }
        }
        if !g.is_unimodular() {
            return false;
        }
        let dual = g.inverse_unimodular().unwrap().transpose();
        (0..self.roots.len()).all(|i| {
            let r = to_i64(&g.apply_i64(&self.roots[i]));
            let c = to_i64(&dual.apply_i64(&self.coroots[i]));
            match (r, c, ) {
                (Some(r), Some(c)) => other.find(&r).is_some_and(|k| other.coroots[k] == c),
                _ => false,
            }
        })
    }
}

pub(crate) fn big_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub(crate) fn to_i64(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.to_i64()).collect()
}

/// Integer coefficients of each vector in terms of linearly independent
/// `basis` vectors; `None` if the basis is dependent or some vector is not an
/// integral combination.
pub fn express_in_basis(basis: &[Vec<i64>], vectors: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let k = basis.len();
    if k == 0 {
        return vectors.iter().all(|v| v.iter().all(|&x| x == 0)).then(|| vectors.iter().map(|_| vec![]).collect());
    }
    let r = basis[0].len();
    // Gaussian elimination on the r x k system, tracking row operations
    let mut a: Vec<Vec<BigRational>> =
        (0..r).map(|i| (0..k).map(|j| BigRational::from_integer(basis[j][i].into())).collect()).collect();
    let mut ops: Vec<Vec<BigRational>> = (0..r)
        .map(|i| (0..r).map(|j| BigRational::from_integer(BigInt::from((i == j) as i64))).collect())
        .collect();
    let mut row = 0;
    for col in 0..k {
        let p = (row..r).find(|&i| !a[i][col].is_zero())?;
        a.swap(row, p);
        ops.swap(row, p);
        let piv = a[row][col].clone();
        for x in a[row].iter_mut().chain(ops[row].iter_mut()) {
            *x = &*x / &piv;
        }
        for i in 0..r {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..k {
                    let t = &a[row][j] * &f;
                    a[i][j] -= t;
                }
                for j in 0..r {
                    let t = &ops[row][j] * &f;
                    ops[i][j] -= t;
                }
            }
        }
        row += 1;
    }
    vectors
        .iter()
        .map(|v| {
            let t: Vec<BigRational> = (0..r)
                .map(|i| (0..r).map(|j| &ops[i][j] * BigRational::from_integer(v[j].into())).sum())
                .collect();
            if t[k..].iter().any(|x| !x.is_zero()) {
                return None;
            }
            t[..k].iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect()
        })
        .collect()
}

/// Positive roots of a finite-type Cartan matrix as coefficient vectors,
/// sorted by height and then with earlier simple roots first.
pub fn positive_root_coefficients(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| (0..n).map(|j| (i == j) as i64).collect::<Vec<i64>>();
    let mut all: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut set: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                let mut p = 0;
                loop {
                    let mut d = beta.clone();
                    d[i] -= p + 1;
                    if set.contains(&d) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pair > 0 {
                    let mut s = beta.clone();
                    s[i] += 1;
                    if set.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}

/// Standard root datum of the given type: `M` is the weight lattice
/// (simply connected) or the root lattice (adjoint) of each component.
pub fn build_preset(ty: &CartanType, isogeny: Isogeny) -> Result<RootDatum> {
    let cartan = ty.cartan_matrix()?;
    let n = cartan.len();
    let d = cartan::symmetrizer(&cartan)?;
    let pos = positive_root_coefficients(&cartan);
    let norm = |c: &[i64]| -> i64 {
        // (alpha, alpha) with B_ij = a_ij d_j
        (0..n).map(|i| (0..n).map(|j| c[i] * cartan[i][j] * d[j] * c[j]).sum::<i64>()).sum()
    };
    let mut roots = Vec::with_capacity(2 * pos.len());
    let mut coroots = Vec::with_capacity(2 * pos.len());
    for c in &pos {
        let nn = norm(c);
        // alpha^vee = sum_i c_i (alpha_i, alpha_i)/(alpha, alpha) alpha_i^vee
        let cv: Vec<i64> = (0..n).map(|i| c[i] * 2 * d[i] / nn).collect();
        debug_assert!((0..n).all(|i| (c[i] * 2 * d[i]) % nn == 0));
        let (r, k) = match isogeny {
            Isogeny::SimplyConnected => ((0..n).map(|i| (0..n).map(|j| c[j] * cartan[j][i]).sum()).collect(), cv),
            Isogeny::Adjoint => (c.clone(), (0..n).map(|i| (0..n).map(|j| cartan[i][j] * cv[j]).sum()).collect()),
        };
        roots.push(r);
        coroots.push(k);
    }
    let m = roots.len();
    for i in 0..m {
        roots.push(roots[i].iter().map(|x| -x).collect());
        coroots.push(coroots[i].iter().map(|x| -x).collect());
    }
    RootDatum::new(n, roots, coroots, (0..n).collect(), true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn preset(s: &str, iso: Isogeny) -> RootDatum {
        build_preset(&s.parse().unwrap(), iso).unwrap()
    }

    #[test]
    fn a2_simply_connected() {
        let d = preset("A2", Isogeny::SimplyConnected);
        assert_eq!(d.rank(), 2);
        assert_eq!(d.num_roots(), 6);
        assert_eq!(d.cartan_matrix(), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(d.root(0), &[2, -1]);
        assert_eq!(d.coroot(2), &[1, 1]);
    }

    #[test]
    fn positive_roots_partition() {
        let d = preset("B3", Isogeny::Adjoint);
        let pos = d.positive_roots();
        assert_eq!(pos.len() * 2, d.num_roots());
        for &i in &pos {
            assert!(!d.is_positive(d.negative(i)));
        }
    }

    #[test]
    fn rejects_bad_pairing() {
        let err = RootDatum::new(1, vec![vec![1], vec![-1]], vec![vec![1], vec![-1]], vec![0], true);
        assert!(matches!(err, Err(Error::InvalidDatum(_))));
    }

    #[test]
    fn rejects_dependent_basis() {
        let d = preset("A1+A1", Isogeny::Adjoint);
        let err = RootDatum::new(2, d.roots().to_vec(), d.coroots().to_vec(), vec![0, 2], true);
        assert!(err.is_err());
    }

    #[test]
    fn components_of_products() {
        let d = preset("A1+A1+A1", Isogeny::SimplyConnected);
        let comps = d.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn recognizes_types() {
        for s in ["A3", "B3", "C3", "G2", "F4", "D5", "A2+G2"] {
            let d = preset(s, Isogeny::Adjoint);
            assert_eq!(d.cartan_type().unwrap().to_string(), s);
        }
    }

    #[test]
    fn sc_and_adjoint_a1_not_isomorphic() {
        let sc = preset("A1", Isogeny::SimplyConnected);
        let ad = preset("A1", Isogeny::Adjoint);
        assert!(!sc.is_isomorphic(&ad).unwrap());
        assert!(sc.is_isomorphic(&sc).unwrap());
        // B2 and C2 are the same datum up to renumbering
        let b2 = preset("B2", Isogeny::Adjoint);
        let c2 = preset("C2", Isogeny::Adjoint);
        assert!(b2.is_isomorphic(&c2).unwrap());
    }
}
