//! Explicit `SL_{2n+1}` with the involution `g -> J (g^T)^{-1} J`: point counts,
//! tangent spaces, the block embeddings and the rank-one morphisms.

pub mod poly;
pub mod ring;

use rayon::prelude::*;

use crate::action::PinnedAction;
use crate::error::{Error, Result};
use crate::folding::{class_length, coinvariant_lattice, equivalence_classes, fixed_weyl, ClassType};
use crate::intlat::{hom_to_units_count, is_prime, prime_power};
use crate::rootdata::RootDatum;
pub use poly::{u3_fixed_presentation, Poly, PolyRing, Presentation, U3Fixed, U3Specialization};
pub use ring::{DualNumbers, Gf, Rationals, Ring};

pub type Mat<E> = Vec<Vec<E>>;

/// Default cap on `|SL_{2n+1}(F_q)|` for point counting.
pub const DEFAULT_COUNT_BUDGET: u128 = 100_000_000;
/// Above this many `(2n+1) x (2n+1)` matrices the counter switches to row backtracking.
pub const DEFAULT_ENUM_LIMIT: u128 = 2_000_000;

pub fn identity<R: Ring>(r: &R, m: usize) -> Mat<R::Elem> {
    (0..m).map(|i| (0..m).map(|j| if i == j { r.one() } else { r.zero() }).collect()).collect()
}

pub fn mat_mul<R: Ring>(r: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> Mat<R::Elem> {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(r.zero(), |acc, t| r.add(&acc, &r.mul(&a[i][t], &b[t][j]))))
                .collect()
        })
        .collect()
}

pub fn transpose<E: Clone>(a: &Mat<E>) -> Mat<E> {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

fn minor<E: Clone>(a: &Mat<E>, i: usize, j: usize) -> Mat<E> {
    a.iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, row)| row.iter().enumerate().filter(|&(l, _)| l != j).map(|(_, x)| x.clone()).collect())
        .collect()
}

/// Determinant by cofactor expansion; only used on small matrices.
pub fn det<R: Ring>(r: &R, a: &Mat<R::Elem>) -> R::Elem {
    match a.len() {
        0 => r.one(),
        1 => a[0][0].clone(),
        2 => r.sub(&r.mul(&a[0][0], &a[1][1]), &r.mul(&a[0][1], &a[1][0])),
        n => (0..n).fold(r.zero(), |acc, j| {
            let t = r.mul(&a[0][j], &det(r, &minor(a, 0, j)));
            if j % 2 == 0 {
                r.add(&acc, &t)
            } else {
                r.sub(&acc, &t)
            }
        }),
    }
}

pub fn adjugate<R: Ring>(r: &R, a: &Mat<R::Elem>) -> Mat<R::Elem> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = det(r, &minor(a, j, i));
                    if (i + j) % 2 == 0 {
                        c
                    } else {
                        r.neg(&c)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn inverse<R: Ring>(r: &R, a: &Mat<R::Elem>) -> Option<Mat<R::Elem>> {
    let di = r.inv(&det(r, a))?;
    Some(adjugate(r, a).into_iter().map(|row| row.iter().map(|x| r.mul(x, &di)).collect()).collect())
}

pub fn map_int<R: Ring>(r: &R, a: &[Vec<i64>]) -> Mat<R::Elem> {
    a.iter().map(|row| row.iter().map(|&x| r.from_int(x)).collect()).collect()
}

/// `SL_{2n+1}` with the anti-diagonal form `J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvolutedSL {
    pub n: usize,
}

impl InvolutedSL {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be positive".into()));
        }
        Ok(InvolutedSL { n })
    }

    pub fn size(&self) -> usize {
        2 * self.n + 1
    }

    /// Sign of the anti-diagonal entry in row `i` (0-based): `-1` on odd 1-based rows.
    pub fn sign(i: usize) -> i64 {
        if i % 2 == 0 {
            -1
        } else {
            1
        }
    }

    pub fn j_int(&self) -> Vec<Vec<i64>> {
        let m = self.size();
        (0..m).map(|i| (0..m).map(|j| if i + j == m - 1 { Self::sign(i) } else { 0 }).collect()).collect()
    }

    pub fn j<R: Ring>(&self, r: &R) -> Mat<R::Elem> {
        map_int(r, &self.j_int())
    }

    /// `J (g^T)^{-1} J`, when `g` is invertible.
    pub fn theta<R: Ring>(&self, r: &R, g: &Mat<R::Elem>) -> Option<Mat<R::Elem>> {
        let j = self.j(r);
        Some(mat_mul(r, &mat_mul(r, &j, &transpose(&inverse(r, g)?)), &j))
    }

    /// `g J g^T = J` and `det g = 1`, which together say `theta(g) = g` in `SL`.
    pub fn is_fixed<R: Ring>(&self, r: &R, g: &Mat<R::Elem>) -> bool {
        let j = self.j(r);
        det(r, g) == r.one() && mat_mul(r, &mat_mul(r, g, &j), &transpose(g)) == j
    }
}

/// `|SL_m(F_q)|`, or `None` on overflow.
pub fn sl_order(m: usize, q: u64) -> Option<u128> {
    let q = u128::from(q);
    let mut total = q.checked_pow((m * (m - 1) / 2) as u32)?;
    for i in 2..=m as u32 {
        total = total.checked_mul(q.checked_pow(i)? - 1)?;
    }
    Some(total)
}

/// `q^{n^2} prod_{i=1..n} (q^{2i} - 1)`, the common order of `SO_{2n+1}(F_q)` and `Sp_{2n}(F_q)`.
pub fn classical_order(n: usize, q: u64) -> Option<u128> {
    let q = u128::from(q);
    let mut total = q.checked_pow((n * n) as u32)?;
    for i in 1..=n as u32 {
        total = total.checked_mul(q.checked_pow(2 * i)? - 1)?;
    }
    Some(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountOptions {
    /// Resource error when `|SL_{2n+1}(F_q)|` exceeds this.
    pub budget: u128,
    /// Literal enumeration of all matrices up to this many; backtracking above.
    pub enum_limit: u128,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { budget: DEFAULT_COUNT_BUDGET, enum_limit: DEFAULT_ENUM_LIMIT }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Enumeration,
    Backtracking,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedCount {
    pub count: u128,
    pub method: CountMethod,
}

fn check_budget(n: usize, q: u64, budget: u128) -> Result<(InvolutedSL, Gf)> {
    let sl = InvolutedSL::new(n)?;
    let field = Gf::new(q)?;
    match sl_order(sl.size(), q) {
        Some(o) if o <= budget => Ok((sl, field)),
        _ => Err(Error::Resource(format!("|SL_{}(F_{q})| exceeds the budget {budget}", sl.size()))),
    }
}

/// `|{g in SL_{2n+1}(F_q) : theta(g) = g}|`.
pub fn count_fixed(n: usize, q: u64, opts: CountOptions) -> Result<FixedCount> {
    check_budget(n, q, opts.budget)?;
    let m = 2 * n + 1;
    let all = u128::from(q).checked_pow((m * m) as u32);
    if all.is_some_and(|a| a <= opts.enum_limit) {
        Ok(FixedCount { count: count_fixed_enumerate(n, q, opts.enum_limit)?, method: CountMethod::Enumeration })
    } else {
        Ok(FixedCount { count: count_fixed_backtrack(n, q, opts.budget)?, method: CountMethod::Backtracking })
    }
}

/// Literal oracle: every matrix, `det = 1` and `J adj(g)^T J = g`.
pub fn count_fixed_enumerate(n: usize, q: u64, limit: u128) -> Result<u128> {
    let sl = InvolutedSL::new(n)?;
    let f = Gf::new(q)?;
    let m = sl.size();
    let total = u128::from(q)
        .checked_pow((m * m) as u32)
        .filter(|&t| t <= limit)
        .ok_or_else(|| Error::Resource(format!("{q}^{} matrices exceed the enumeration limit {limit}", m * m)))?;
    let j = sl.j(&f);
    let qq = q as u128;
    let count = (0..total)
        .into_par_iter()
        .filter(|&k| {
            let mut k = k;
            let g: Mat<u8> = (0..m)
                .map(|_| {
                    (0..m)
                        .map(|_| {
                            let d = (k % qq) as u8;
                            k /= qq;
                            d
                        })
                        .collect()
                })
                .collect();
            det(&f, &g) == 1 && mat_mul(&f, &mat_mul(&f, &j, &transpose(&adjugate(&f, &g))), &j) == g
        })
        .count();
    Ok(count as u128)
}

/// Row-by-row search on `g J g^T = J`, then `det g = 1`. Parallel over the first row.
pub fn count_fixed_backtrack(n: usize, q: u64, budget: u128) -> Result<u128> {
    let (sl, f) = check_budget(n, q, budget)?;
    let m = sl.size();
    let vectors: Vec<Vec<u8>> = (0..(q as usize).pow(m as u32))
        .map(|mut k| {
            (0..m)
                .map(|_| {
                    let d = (k % q as usize) as u8;
                    k /= q as usize;
                    d
                })
                .collect()
        })
        .collect();
    let signs: Vec<u8> = (0..m).map(|i| f.from_int(InvolutedSL::sign(i))).collect();
    let form = |x: &[u8], y: &[u8]| -> u8 {
        (0..m).fold(0, |acc, i| f.add(&acc, &f.mul(&f.mul(&x[i], &signs[i]), &y[m - 1 - i])))
    };
    let target = |i: usize, j: usize| -> u8 { if i + j == m - 1 { signs[i] } else { 0 } };
    let ok = |rows: &[&Vec<u8>], v: &Vec<u8>| -> bool {
        let i = rows.len();
        rows.iter().enumerate().all(|(j, r)| form(v, r) == target(i, j)) && form(v, v) == target(i, i)
    };
    fn search<'a>(
        rows: &mut Vec<&'a Vec<u8>>,
        vectors: &'a [Vec<u8>],
        m: usize,
        ok: &dyn Fn(&[&Vec<u8>], &Vec<u8>) -> bool,
        done: &dyn Fn(&[&Vec<u8>]) -> bool,
    ) -> u128 {
        if rows.len() == m {
            return u128::from(done(rows));
        }
        let mut total = 0;
        for v in vectors {
            if ok(rows, v) {
                rows.push(v);
                total += search(rows, vectors, m, ok, done);
                rows.pop();
            }
        }
        total
    }
    let done = |rows: &[&Vec<u8>]| {
        let g: Mat<u8> = rows.iter().map(|r| (*r).clone()).collect();
        det(&f, &g) == 1
    };
    let count = vectors
        .par_iter()
        .filter(|v| ok(&[], v))
        .map(|v| {
            let mut rows = vec![v];
            search(&mut rows, &vectors, m, &ok, &done)
        })
        .sum();
    Ok(count)
}

/// `|T^A(F_q)| q^N sum_{w in W^A} q^{l_A(w)}`.
pub fn bruhat_predicted_count(d: &RootDatum, act: &PinnedAction, q: u64, weyl_limit: usize) -> Result<u128> {
    let overflow = || Error::Resource("predicted count does not fit in 128 bits".into());
    let torus = hom_to_units_count(&coinvariant_lattice(act)?.group, q)?;
    let classes = equivalence_classes(d, act)?;
    let wa = fixed_weyl(d, act, weyl_limit)?;
    let mut poincare: u128 = 0;
    for w in &wa.elements {
        let l = class_length(d, &classes, w)?;
        poincare = poincare.checked_add(u128::from(q).checked_pow(l as u32).ok_or_else(overflow)?).ok_or_else(overflow)?;
    }
    let unipotent = u128::from(q).checked_pow(classes.len() as u32).ok_or_else(overflow)?;
    torus.checked_mul(unipotent).and_then(|x| x.checked_mul(poincare)).ok_or_else(overflow)
}

/// Dimension over `F_p` of `{X in sl_{2n+1} : X = -J X^T J}` by a linear solve.
pub fn tangent_dim(n: usize, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not a prime")));
    }
    let sl = InvolutedSL::new(n)?;
    let m = sl.size();
    let var = |i: usize, j: usize| i * m + j;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let red = |x: i64| x.rem_euclid(p as i64) as u64;
    for i in 0..m {
        for j in 0..m {
            // (J X^T J)_{ij} = s_i s_{m-1-j} X_{m-1-j, m-1-i}
            let mut row = vec![0u64; m * m];
            row[var(i, j)] = 1;
            let k = var(m - 1 - j, m - 1 - i);
            row[k] = (row[k] + red(InvolutedSL::sign(i) * InvolutedSL::sign(m - 1 - j))) % p;
            rows.push(row);
        }
    }
    let mut trace = vec![0u64; m * m];
    for i in 0..m {
        trace[var(i, i)] = 1;
    }
    rows.push(trace);
    Ok(m * m - rank_mod_p(rows, p))
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let inv = |a: u64| num::integer::Integer::extended_gcd(&(a as i64), &(p as i64)).x.rem_euclid(p as i64) as u64;
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let iv = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * iv % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let k = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + (p - k) * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Number of `X` with `I + eps X` fixed in `SL_{2n+1}(F_p[eps])`, by enumerating all `X`.
pub fn dual_number_tangent_count(n: usize, p: u64, limit: u128) -> Result<u128> {
    let sl = InvolutedSL::new(n)?;
    let r = DualNumbers::new(p)?;
    let m = sl.size();
    let total = u128::from(p)
        .checked_pow((m * m) as u32)
        .filter(|&t| t <= limit)
        .ok_or_else(|| Error::Resource("dual-number enumeration exceeds the limit".into()))?;
    let count = (0..total)
        .into_par_iter()
        .filter(|&k| {
            let mut k = k;
            let g: Mat<(u64, u64)> = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| {
                            let x = (k % u128::from(p)) as u64;
                            k /= u128::from(p);
                            (u64::from(i == j), x)
                        })
                        .collect()
                })
                .collect();
            sl.is_fixed(&r, &g)
        })
        .count();
    Ok(count as u128)
}

/// Places the 3x3 matrix `g` on rows and columns `i, n+1, 2n+2-i` (1-based) of
/// `SL_{2n+1}`, with the corner entries of the middle row and column twisted
/// by `(-1)^{i+n}`.
pub fn embed_f<R: Ring>(r: &R, i: usize, n: usize, g: &Mat<R::Elem>) -> Result<Mat<R::Elem>> {
    if n == 0 || i == 0 || i > n {
        return Err(Error::Domain(format!("embedding index i = {i} must satisfy 1 <= i <= n = {n}")));
    }
    if g.len() != 3 || g.iter().any(|row| row.len() != 3) {
        return Err(Error::Domain("embedding expects a 3x3 matrix".into()));
    }
    let m = 2 * n + 1;
    let pos = [i - 1, n, 2 * n + 1 - i];
    let twisted = (i + n) % 2 == 1;
    let mut out = identity(r, m);
    for (a, &pa) in pos.iter().enumerate() {
        for (b, &pb) in pos.iter().enumerate() {
            let flip = twisted && ((a == 2) != (b == 2));
            out[pa][pb] = if flip { r.neg(&g[a][b]) } else { g[a][b].clone() };
        }
    }
    Ok(out)
}

/// `[[a,b],[c,d]] -> [[a^2, ab, b^2/2], [2ac, ad+bc, bd], [2c^2, 2cd, d^2]]`.
pub fn xi_odd<R: Ring>(r: &R, g: &Mat<R::Elem>) -> Result<Mat<R::Elem>> {
    let half = r.inv(&r.from_int(2)).ok_or_else(|| Error::Domain("2 is not invertible in the coefficient ring".into()))?;
    let [a, b, c, d] = entries2(g)?;
    let two = r.from_int(2);
    let m = |x: &R::Elem, y: &R::Elem| r.mul(x, y);
    Ok(vec![
        vec![m(&a, &a), m(&a, &b), m(&m(&b, &b), &half)],
        vec![m(&two, &m(&a, &c)), r.add(&m(&a, &d), &m(&b, &c)), m(&b, &d)],
        vec![m(&two, &m(&c, &c)), m(&two, &m(&c, &d)), m(&d, &d)],
    ])
}

/// `[[a,b],[c,d]] -> [[a,0,b],[0,1,0],[c,0,d]]`, for characteristic two.
pub fn xi_even<R: Ring>(r: &R, g: &Mat<R::Elem>) -> Result<Mat<R::Elem>> {
    if r.from_int(2) != r.zero() {
        return Err(Error::Domain("the corner embedding needs characteristic 2".into()));
    }
    let [a, b, c, d] = entries2(g)?;
    Ok(vec![vec![a, r.zero(), b], vec![r.zero(), r.one(), r.zero()], vec![c, r.zero(), d]])
}

fn entries2<E: Clone>(g: &Mat<E>) -> Result<[E; 4]> {
    match g.as_slice() {
        [r0, r1] if r0.len() == 2 && r1.len() == 2 => Ok([r0[0].clone(), r0[1].clone(), r1[0].clone(), r1[1].clone()]),
        _ => Err(Error::Domain("expected a 2x2 matrix".into())),
    }
}

/// Shape of the fixed points of one class's unipotent subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UFactor {
    /// `G_a`, from a class of the first type.
    AffineLine,
    /// `Spec Z[x,y]/(x^2 - 2y)`, from a class of the second type.
    TwistedA2Factor,
}

impl UFactor {
    /// `F_q`-points, computed literally for the twisted factor.
    pub fn point_count(self, q: u64) -> Result<u128> {
        prime_power(q).ok_or_else(|| Error::Domain(format!("{q} is not a prime power")))?;
        match self {
            UFactor::AffineLine => Ok(u128::from(q)),
            UFactor::TwistedA2Factor => u3_fixed_presentation().point_count(q),
        }
    }
}

pub fn u_fixed_factors(d: &RootDatum, act: &PinnedAction) -> Result<Vec<UFactor>> {
    Ok(equivalence_classes(d, act)?
        .iter()
        .map(|c| match c.class_type {
            ClassType::TypeI => UFactor::AffineLine,
            ClassType::TypeII => UFactor::TwistedA2Factor,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_squares_to_identity() {
        for n in 1..4 {
            let sl = InvolutedSL::new(n).unwrap();
            let j = sl.j(&Rationals);
            assert_eq!(mat_mul(&Rationals, &j, &j), identity(&Rationals, sl.size()));
            assert_eq!(transpose(&j), j);
        }
    }

    #[test]
    fn sl_orders() {
        assert_eq!(sl_order(3, 2), Some(168));
        assert_eq!(sl_order(3, 3), Some(5616));
        assert_eq!(classical_order(2, 2), Some(720));
    }

    #[test]
    fn embed_rejects_bad_index() {
        let g = identity(&Rationals, 3);
        assert!(embed_f(&Rationals, 0, 2, &g).is_err());
        assert!(embed_f(&Rationals, 3, 2, &g).is_err());
    }
}
