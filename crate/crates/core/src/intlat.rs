//! Exact integer linear algebra: Smith forms, lattice quotients, coinvariants.

use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense matrix with arbitrary-precision integer entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must share a length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m.set(i, j, c[i].clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn apply_i64(&self, v: &[i64]) -> Vec<BigInt> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.apply(&big)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[IntMatrix], cols: usize) -> IntMatrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for p in parts {
            assert_eq!(p.cols, cols);
            data.extend(p.data.iter().cloned());
        }
        IntMatrix { rows, cols, data }
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(parts: &[IntMatrix], rows: usize) -> IntMatrix {
        let t: Vec<IntMatrix> = parts.iter().map(|p| p.transpose()).collect();
        IntMatrix::vstack(&t, rows).transpose()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    /// Exact inverse over the rationals; `None` if singular or not square.
    pub fn rational_inverse(&self) -> Option<Vec<Vec<BigRational>>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> =
                    (0..n).map(|j| BigRational::from_integer(self.get(i, j).clone())).collect();
                row.extend((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero())?;
            a.swap(c, p);
            let piv = a[c][c].clone();
            for x in a[c].iter_mut() {
                *x = &*x / &piv;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for j in 0..2 * n {
                        let t = &a[c][j] * &f;
                        a[r][j] = &a[r][j] - t;
                    }
                }
            }
        }
        Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Integer inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        let inv = self.rational_inverse()?;
        let n = self.rows;
        let mut out = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if !inv[i][j].is_integer() {
                    return None;
                }
                out.set(i, j, inv[i][j].to_integer());
            }
        }
        Some(out)
    }

    /// Converts to machine integers, failing if any entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_i64()).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.rows) && self.is_square()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * f;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * f;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Output of [`smith_normal_form`]: `u * m * v == d`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form by elementary row and column operations.
///
/// The pivot is always an entry of least absolute value, so every round of
/// reduction strictly shrinks it until it divides its row and column.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = a.get(i, j);
                    if !x.is_zero()
                        && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { u, d: a, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..r {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -a.get(i, t).div_floor(a.get(t, t));
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..c {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(a.get(t, t));
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let piv = a.get(t, t).clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a.get(i, j).is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d: a, v }
}

/// Integer basis of the kernel `{x : m x = 0}`, as column vectors.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let k = snf.rank();
    (k..m.cols).map(|j| snf.v.column(j)).collect()
}

/// True when `v` lies in the integer column span of `m`.
pub fn column_span_contains(m: &IntMatrix, v: &[BigInt]) -> bool {
    assert_eq!(v.len(), m.rows);
    let snf = smith_normal_form(m);
    let w = snf.u.apply(v);
    let diag = snf.diagonal();
    w.iter().enumerate().all(|(i, x)| match diag.get(i) {
        Some(d) if !d.is_zero() => x.is_multiple_of(d),
        _ => x.is_zero(),
    })
}

/// Finitely generated abelian group `Z^free_rank + sum Z/d_i` with `d_i | d_{i+1}`, `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl FinAbGroup {
    /// Builds the group from a divisibility chain, dropping unit factors.
    pub fn new(free_rank: usize, factors: Vec<BigInt>) -> Self {
        let invariant_factors: Vec<BigInt> = factors.into_iter().map(|d| d.abs()).filter(|d| !d.is_one()).collect();
        debug_assert!(invariant_factors.iter().all(|d| *d >= BigInt::from(2)));
        debug_assert!(invariant_factors.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        FinAbGroup { free_rank, invariant_factors }
    }

    pub fn from_small(free_rank: usize, factors: &[u64]) -> Self {
        Self::new(free_rank, factors.iter().map(|&d| BigInt::from(d)).collect())
    }

    pub fn trivial() -> Self {
        FinAbGroup { free_rank: 0, invariant_factors: vec![] }
    }

    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Torsion subgroup as a group in its own right.
    pub fn torsion(&self) -> FinAbGroup {
        FinAbGroup { free_rank: 0, invariant_factors: self.invariant_factors.clone() }
    }

    /// Removes the `p`-primary part of the torsion; divisibility is preserved.
    pub fn without_prime(&self, p: u64) -> FinAbGroup {
        let p = BigInt::from(p);
        let factors = self
            .invariant_factors
            .iter()
            .map(|d| {
                let mut d = d.clone();
                while d.is_multiple_of(&p) {
                    d /= &p;
                }
                d
            })
            .collect();
        FinAbGroup::new(self.free_rank, factors)
    }

    /// True when the torsion order is a power of `l` (the trivial group counts).
    pub fn torsion_is_l_group(&self, l: u64) -> bool {
        self.without_prime(l).invariant_factors.is_empty()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Quotient `Z^rank / L` of a lattice by the column span of a relation matrix,
/// kept together with the Smith data needed to project vectors.
#[derive(Clone, Debug)]
pub struct LatticeQuotient {
    pub rank: usize,
    pub group: FinAbGroup,
    u: IntMatrix,
    u_inv: IntMatrix,
    diag: Vec<BigInt>,
}

impl LatticeQuotient {
    pub fn new(rank: usize, relations: &IntMatrix) -> Self {
        assert_eq!(relations.rows, rank);
        let snf = smith_normal_form(relations);
        let mut diag = snf.diagonal();
        diag.resize(rank, BigInt::zero());
        let free = diag.iter().filter(|d| d.is_zero()).count();
        let factors: Vec<BigInt> = diag.iter().filter(|d| !d.is_zero()).cloned().collect();
        let u_inv = snf.u.inverse_unimodular().expect("Smith transform is unimodular");
        LatticeQuotient { rank, group: FinAbGroup::new(free, factors), u: snf.u, u_inv, diag }
    }

    fn free_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(|&i| self.diag[i].is_zero())
    }

    /// Image in the free quotient `Z^free_rank`.
    pub fn project_free(&self, v: &[BigInt]) -> Vec<BigInt> {
        let w = self.u.apply(v);
        self.free_positions().map(|i| w[i].clone()).collect()
    }

    pub fn project_free_i64(&self, v: &[i64]) -> Vec<BigInt> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.project_free(&big)
    }

    /// Canonical coordinates of the class of `v`: torsion residues (one per
    /// invariant factor) followed by the free coordinates.
    pub fn normal_coordinates(&self, v: &[BigInt]) -> Vec<BigInt> {
        let w = self.u.apply(v);
        let mut out = Vec::new();
        for i in 0..self.rank {
            let d = &self.diag[i];
            if !d.is_zero() && !d.is_one() {
                out.push(w[i].mod_floor(d));
            }
        }
        out.extend(self.free_positions().map(|i| w[i].clone()));
        out
    }

    pub fn is_zero(&self, v: &[BigInt]) -> bool {
        self.normal_coordinates(v).iter().all(|x| x.is_zero())
    }

    /// Preimages in `Z^rank` of the standard basis of the free quotient.
    pub fn free_lifts(&self) -> Vec<Vec<BigInt>> {
        self.free_positions().map(|i| self.u_inv.column(i)).collect()
    }
}

fn check_generators(rank: usize, generators: &[IntMatrix]) -> Result<()> {
    for (k, g) in generators.iter().enumerate() {
        if g.rows != rank || g.cols != rank {
            return Err(Error::InvalidAction(format!(
                "generator {k} is {}x{}, expected {rank}x{rank}",
                g.rows, g.cols
            )));
        }
        if !g.is_unimodular() {
            return Err(Error::InvalidAction(format!("generator {k} is not unimodular")));
        }
    }
    Ok(())
}

/// Relation matrix whose columns are `(a - id) e_j` for every generator `a`.
pub fn coinvariant_relations(rank: usize, generators: &[IntMatrix]) -> IntMatrix {
    let id = IntMatrix::identity(rank);
    let parts: Vec<IntMatrix> = generators.iter().map(|g| g.sub(&id)).collect();
    IntMatrix::hstack(&parts, rank)
}

/// Coinvariants `Z^rank / <m - a m>` with its projection data.
pub fn coinvariant_quotient(rank: usize, generators: &[IntMatrix]) -> Result<LatticeQuotient> {
    check_generators(rank, generators)?;
    Ok(LatticeQuotient::new(rank, &coinvariant_relations(rank, generators)))
}

/// Structure of the coinvariants `Z^rank / <m - a m>`.
pub fn coinvariants(rank: usize, generators: &[IntMatrix]) -> Result<FinAbGroup> {
    Ok(coinvariant_quotient(rank, generators)?.group)
}

/// Decomposes `q` as `p^e` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q % d == 0).unwrap_or(q);
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

pub fn is_prime(p: u64) -> bool {
    matches!(prime_power(p), Some((_, 1)))
}

/// `|Hom(g, F_q^*)|`, the number of `F_q`-points of the diagonalizable group of `g`.
pub fn hom_to_units_count(g: &FinAbGroup, q: u64) -> Result<u128> {
    if prime_power(q).is_none() {
        return Err(Error::Domain(format!("{q} is not a prime power")));
    }
    let unit = BigInt::from(q - 1);
    let mut total: u128 = 1;
    let overflow = || Error::Resource("point count does not fit in 128 bits".into());
    for _ in 0..g.free_rank {
        total = total.checked_mul(u128::from(q - 1)).ok_or_else(overflow)?;
    }
    for d in &g.invariant_factors {
        let c = d.gcd(&unit).to_u128().ok_or_else(overflow)?;
        total = total.checked_mul(c).ok_or_else(overflow)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_of_identity_is_identity() {
        let snf = smith_normal_form(&IntMatrix::identity(2));
        assert_eq!(snf.d, IntMatrix::identity(2));
    }

    #[test]
    fn snf_one_by_one() {
        let snf = smith_normal_form(&IntMatrix::from_rows(&[[2]]));
        assert_eq!(snf.d, IntMatrix::from_rows(&[[2]]));
    }

    #[test]
    fn snf_negative_pivot_is_normalized() {
        let m = IntMatrix::from_rows(&[[-3, 0], [0, 0]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), big(&[3, 0]));
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
    }

    #[test]
    fn snf_rectangular_round_trip() {
        let m = IntMatrix::from_rows(&[[4, 6, 8], [6, 9, 12]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
        assert_eq!(snf.diagonal(), big(&[1, 0]));
    }

    #[test]
    fn det_small() {
        assert_eq!(IntMatrix::from_rows(&[[2, 4], [6, 8]]).det(), BigInt::from(-8));
        assert_eq!(IntMatrix::from_rows(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]).det(), BigInt::from(-1));
        assert_eq!(IntMatrix::from_rows(&[[1, 2], [2, 4]]).det(), BigInt::zero());
    }

    #[test]
    fn kernel_of_rank_one_map() {
        let m = IntMatrix::from_rows(&[[1, 2, 3]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn span_membership() {
        let m = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
        assert!(column_span_contains(&m, &big(&[4, 3])));
        assert!(!column_span_contains(&m, &big(&[1, 0])));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert!(!is_prime(1) && is_prime(2) && !is_prime(8));
    }

    #[test]
    fn group_prime_removal() {
        let g = FinAbGroup::from_small(1, &[2, 6]);
        assert_eq!(g.without_prime(2), FinAbGroup::from_small(1, &[3]));
        assert_eq!(g.without_prime(3), FinAbGroup::from_small(1, &[2, 2]));
        assert!(!g.torsion_is_l_group(2));
        assert!(FinAbGroup::from_small(0, &[2, 4]).torsion_is_l_group(2));
        assert_eq!(g.to_string(), "Z^1 + Z/2 + Z/6");
    }

    #[test]
    fn quotient_projection() {
        // Z^2 / <(1,-1)> is Z with both basis vectors mapping to the same generator
        let q = LatticeQuotient::new(2, &IntMatrix::from_rows(&[[1], [-1]]));
        let a = q.project_free(&big(&[1, 0]));
        let b = q.project_free(&big(&[0, 1]));
        assert_eq!(a, b);
        assert_eq!(a[0].abs(), BigInt::one());
        let lifts = q.free_lifts();
        assert_eq!(q.project_free(&lifts[0]), big(&[1]));
    }
}
