//! Chevalley structure constants and equivariant sign choices.
//!
//! The Lie algebra is realized only through its structure constants over the
//! integers: `[X_a, X_-a] = a^vee`, `[h, X_b] = <b, h> X_b` and
//! `[X_a, X_b] = N(a, b) X_{a+b}`.

use std::collections::BTreeSet;

use num::rational::Ratio;
use rayon::prelude::*;

use crate::action::{OrbitDomain, PinnedAction};
use crate::error::{Error, Result};
use crate::folding::{equivalence_classes, FoldClass};
use crate::rootdata::cartan::symmetrizer;
use crate::rootdata::{dot, Family, RootDatum};

/// Table of `N(a, b)` over all ordered root pairs (zero when `a + b` is not a
/// root) and the signs `eps` relating this system to the base one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    num_roots: usize,
    n: Vec<i64>,
    /// `eps[r]` for every root; `eps[-r] == eps[r]`.
    pub eps: Vec<i8>,
}

impl StructureConstants {
    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.n[a * self.num_roots + b]
    }

    pub fn num_roots(&self) -> usize {
        self.num_roots
    }

    /// Applies `X'_r = eps(r) X_r`; `eps` is given on all roots and must be even.
    pub fn rescaled(&self, d: &RootDatum, eps: &[i8]) -> StructureConstants {
        let r = self.num_roots;
        let mut n = self.n.clone();
        for a in 0..r {
            for b in 0..r {
                if let Some(s) = d.sum_index(a, b) {
                    n[a * r + b] *= i64::from(eps[a] * eps[b] * eps[s]);
                }
            }
        }
        let total = self.eps.iter().zip(eps).map(|(x, y)| x * y).collect();
        StructureConstants { num_roots: r, n, eps: total }
    }
}

/// Inner products of roots from the symmetrized Cartan matrix.
struct Geometry<'a> {
    d: &'a RootDatum,
    form: Vec<Vec<i64>>,
    order: Vec<usize>,
    rank_of: Vec<usize>,
}

impl<'a> Geometry<'a> {
    fn new(d: &'a RootDatum) -> Result<Self> {
        if !d.is_reduced() {
            return Err(Error::Domain("structure constants need a reduced root datum".into()));
        }
        let a = d.cartan_matrix();
        let s = symmetrizer(&a)?;
        let l = a.len();
        let form = (0..l).map(|i| (0..l).map(|j| a[i][j] * s[j]).collect()).collect();
        let mut order = d.positive_roots();
        order.sort_by_key(|&r| (d.height(r), r));
        let mut rank_of = vec![usize::MAX; d.num_roots()];
        for (k, &r) in order.iter().enumerate() {
            rank_of[r] = k;
        }
        Ok(Geometry { d, form, order, rank_of })
    }

    fn inner(&self, a: usize, b: usize) -> i64 {
        let (ca, cb) = (self.d.coefficients(a), self.d.coefficients(b));
        let l = ca.len();
        (0..l).map(|i| (0..l).map(|j| ca[i] * self.form[i][j] * cb[j]).sum::<i64>()).sum()
    }

    fn norm(&self, a: usize) -> i64 {
        self.inner(a, a)
    }

    fn diff(&self, a: usize, b: usize) -> Option<usize> {
        self.d.sum_index(a, self.d.negative(b))
    }

    /// Largest `p` with `b - p a` a root.
    fn string_down(&self, a: usize, b: usize) -> i64 {
        let mut p = 0;
        let mut cur = b;
        while let Some(next) = self.diff(cur, a) {
            p += 1;
            cur = next;
        }
        p
    }

    /// Extraspecial pair of a nonsimple positive root: least simple `xi` with `gamma - xi` a root.
    fn extraspecial(&self, gamma: usize) -> Option<(usize, usize)> {
        let mut simples: Vec<usize> = self.d.basis().to_vec();
        simples.sort_by_key(|&s| self.rank_of[s]);
        simples.into_iter().find_map(|xi| self.diff(gamma, xi).map(|zeta| (xi, zeta)))
    }
}

/// Structure constants for the positive part, extended by the standard relations.
struct Builder<'a> {
    g: &'a Geometry<'a>,
    table: std::collections::HashMap<(usize, usize), i64>,
}

impl Builder<'_> {
    fn get_pos(&self, a: usize, b: usize) -> Result<i64> {
        let (x, y, sign) = if self.g.rank_of[a] < self.g.rank_of[b] { (a, b, 1) } else { (b, a, -1) };
        self.table
            .get(&(x, y))
            .map(|v| sign * v)
            .ok_or_else(|| Error::Internal(format!("structure constant N({a},{b}) requested before it was fixed")))
    }

    fn get(&self, a: usize, b: usize) -> Result<i64> {
        let d = self.g.d;
        let Some(s) = d.sum_index(a, b) else { return Ok(0) };
        let (pa, pb) = (d.is_positive(a), d.is_positive(b));
        match (pa, pb) {
            (true, true) => self.get_pos(a, b),
            (false, false) => Ok(-self.get(d.negative(a), d.negative(b))?),
            (false, true) => Ok(-self.get(b, a)?),
            (true, false) => {
                let ss = Ratio::from_integer(self.g.norm(s));
                let v = if d.is_positive(s) {
                    ss / self.g.norm(a) * -self.get(d.negative(b), s)?
                } else {
                    ss / self.g.norm(b) * self.get(d.negative(s), a)?
                };
                if !v.is_integer() {
                    return Err(Error::Internal(format!("nonintegral structure constant N({a},{b})")));
                }
                Ok(v.to_integer())
            }
        }
    }
}

/// A Chevalley system built from extraspecial pairs: `N(xi, zeta) = p + 1 > 0`.
pub fn base_constants(d: &RootDatum) -> Result<StructureConstants> {
    let g = Geometry::new(d)?;
    let mut b = Builder { g: &g, table: Default::default() };
    for &gamma in &g.order {
        let Some((xi, zeta)) = g.extraspecial(gamma) else { continue };
        let n_xz = g.string_down(xi, zeta) + 1;
        b.table.insert((xi, zeta), n_xz);
        let gg = Ratio::from_integer(g.norm(gamma));
        for &alpha in &g.order {
            let Some(beta) = g.diff(gamma, alpha) else { continue };
            if !d.is_positive(beta) || g.rank_of[alpha] >= g.rank_of[beta] || alpha == xi {
                continue;
            }
            let (mxi, mzeta) = (d.negative(xi), d.negative(zeta));
            let mut bracket = Ratio::from_integer(0);
            if let Some(s) = d.sum_index(beta, mxi) {
                bracket += Ratio::new(b.get(beta, mxi)? * b.get(alpha, mzeta)?, g.norm(s));
            }
            if let Some(s) = d.sum_index(alpha, mxi) {
                bracket += Ratio::new(b.get(mxi, alpha)? * b.get(beta, mzeta)?, g.norm(s));
            }
            let v = gg / n_xz * bracket;
            if !v.is_integer() || v == Ratio::from_integer(0) {
                return Err(Error::Internal(format!("bad structure constant {v} for roots {alpha}, {beta}")));
            }
            b.table.insert((alpha, beta), v.to_integer());
        }
    }
    let r = d.num_roots();
    let mut n = vec![0i64; r * r];
    for a in 0..r {
        for c in 0..r {
            n[a * r + c] = b.get(a, c)?;
        }
    }
    Ok(StructureConstants { num_roots: r, n, eps: vec![1; r] })
}

/// Pairs whose constant violates `|N(a, b)| = p + 1`.
pub fn magnitude_violations(d: &RootDatum, sc: &StructureConstants) -> Vec<(usize, usize)> {
    let r = d.num_roots();
    let mut out = Vec::new();
    for a in 0..r {
        for b in 0..r {
            let expected = match d.sum_index(a, b) {
                Some(_) => {
                    let mut p = 0;
                    let mut cur = b;
                    while let Some(nx) = d.sum_index(cur, d.negative(a)) {
                        p += 1;
                        cur = nx;
                    }
                    p + 1
                }
                None => 0,
            };
            if sc.get(a, b).abs() != expected {
                out.push((a, b));
            }
        }
    }
    out
}

/// One term of a bracket of basis elements.
#[derive(Clone, Debug)]
enum Term {
    Zero,
    H(Vec<i64>),
    X(i64, usize),
}

#[derive(Clone, Copy, Debug)]
enum Basis {
    H(usize),
    X(usize),
}

fn bracket_xx(d: &RootDatum, sc: &StructureConstants, a: usize, b: usize) -> Term {
    if d.negative(a) == b {
        return Term::H(d.coroot(a).to_vec());
    }
    match d.sum_index(a, b) {
        Some(s) => Term::X(sc.get(a, b), s),
        None => Term::Zero,
    }
}

fn bracket_basis_term(d: &RootDatum, sc: &StructureConstants, x: Basis, t: &Term) -> Term {
    match (x, t) {
        (_, Term::Zero) => Term::Zero,
        (Basis::H(_), Term::H(_)) => Term::Zero,
        (Basis::H(i), Term::X(c, b)) => Term::X(c * d.root(*b)[i], *b),
        (Basis::X(a), Term::H(h)) => Term::X(-dot(d.root(a), h), a),
        (Basis::X(a), Term::X(c, b)) => match bracket_xx(d, sc, a, *b) {
            Term::Zero => Term::Zero,
            Term::H(h) => Term::H(h.iter().map(|v| v * c).collect()),
            Term::X(k, s) => Term::X(k * c, s),
        },
    }
}

fn bracket_basis(d: &RootDatum, sc: &StructureConstants, x: Basis, y: Basis) -> Term {
    match (x, y) {
        (Basis::H(_), Basis::H(_)) => Term::Zero,
        (Basis::H(i), Basis::X(b)) => Term::X(d.root(b)[i], b),
        (Basis::X(a), Basis::H(i)) => Term::X(-d.root(a)[i], a),
        (Basis::X(a), Basis::X(b)) => bracket_xx(d, sc, a, b),
    }
}

fn jacobi_holds(d: &RootDatum, sc: &StructureConstants, x: Basis, y: Basis, z: Basis) -> bool {
    let mut h = vec![0i64; d.rank()];
    let mut xs = std::collections::BTreeMap::<usize, i64>::new();
    for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
        match bracket_basis_term(d, sc, p, &bracket_basis(d, sc, q, r)) {
            Term::Zero => {}
            Term::H(v) => h.iter_mut().zip(v).for_each(|(a, b)| *a += b),
            Term::X(c, s) => *xs.entry(s).or_default() += c,
        }
    }
    h.iter().all(|&v| v == 0) && xs.values().all(|&v| v == 0)
}

/// Number of basis triples (root vectors and torus coordinates) on which the
/// Jacobi identity fails.
pub fn jacobi_violations(d: &RootDatum, sc: &StructureConstants) -> usize {
    let r = d.num_roots();
    let roots: Vec<Basis> = (0..r).map(Basis::X).collect();
    let xxx: usize = (0..r)
        .into_par_iter()
        .map(|a| {
            let mut bad = 0;
            for &y in &roots {
                for &z in &roots {
                    bad += usize::from(!jacobi_holds(d, sc, Basis::X(a), y, z));
                }
            }
            bad
        })
        .sum();
    let hxx: usize = (0..d.rank())
        .map(|i| {
            roots.iter().map(|&y| roots.iter().filter(|&&z| !jacobi_holds(d, sc, Basis::H(i), y, z)).count()).sum::<usize>()
        })
        .sum();
    xxx + hxx
}

/// `c_e(r)` with `e . X_r = c_e(r) X_{e r}` for every element `e` and root `r`.
/// Pinned automorphisms fix the simple root vectors, which determines the rest.
pub fn action_coefficients(d: &RootDatum, sc: &StructureConstants, act: &PinnedAction) -> Result<Vec<Vec<i64>>> {
    let g = Geometry::new(d)?;
    let mut out = Vec::with_capacity(act.order());
    for e in 0..act.order() {
        let mut c = vec![0i64; d.num_roots()];
        for &r in &g.order {
            c[r] = match g.extraspecial(r) {
                None => 1,
                Some((xi, zeta)) => {
                    let num = c[xi] * c[zeta] * sc.get(act.act_root(e, xi), act.act_root(e, zeta));
                    let den = sc.get(xi, zeta);
                    if num % den != 0 || (num / den).abs() != 1 {
                        return Err(Error::Internal(format!("action coefficient of root {r} is {num}/{den}")));
                    }
                    num / den
                }
            };
            c[d.negative(r)] = c[r];
        }
        // the coefficients must define a Lie algebra automorphism
        for a in 0..d.num_roots() {
            for b in 0..d.num_roots() {
                if let Some(s) = d.sum_index(a, b) {
                    let lhs = c[a] * c[b] * sc.get(act.act_root(e, a), act.act_root(e, b));
                    if lhs != sc.get(a, b) * c[s] {
                        return Err(Error::Internal(format!("element {e} is not an automorphism on roots {a}, {b}")));
                    }
                }
            }
        }
        out.push(c);
    }
    Ok(out)
}

/// Signs on every root making the system equivariant on all nonspecial positive roots.
pub fn equivariant_signs(d: &RootDatum, sc: &StructureConstants, act: &PinnedAction) -> Result<StructureConstants> {
    let classes = equivalence_classes(d, act)?;
    let is_d4 = d.cartan_type()?.components == [(Family::D, 4)];
    let eps = if is_d4 && act.order() == 6 {
        d4_word_signs(d, sc)?
    } else {
        propagated_signs(d, sc, act, &classes)?
    };
    let out = sc.rescaled(d, &eps);
    let report = check_equivariance(d, &out, act)?;
    if let Some(o) = report.orbits.iter().find(|o| !o.special && !o.satisfied) {
        return Err(Error::Internal(format!("sign choice leaves orbit {:?} non-equivariant", o.roots)));
    }
    Ok(out)
}

fn propagated_signs(d: &RootDatum, sc: &StructureConstants, act: &PinnedAction, classes: &[FoldClass]) -> Result<Vec<i8>> {
    let special: BTreeSet<usize> = classes.iter().flat_map(|c| c.special.iter().copied()).collect();
    let coeff = action_coefficients(d, sc, act)?;
    let simple: BTreeSet<usize> = d.basis().iter().copied().collect();
    let mut eps = vec![1i8; d.num_roots()];
    for orbit in act.orbits(d, OrbitDomain::PositiveRoots) {
        let rep = orbit[0];
        if special.contains(&rep) || simple.contains(&rep) {
            continue;
        }
        let mut assigned = vec![0i8; d.num_roots()];
        for (e, c) in coeff.iter().enumerate() {
            let img = act.act_root(e, rep);
            let s = c[rep] as i8;
            if assigned[img] != 0 && assigned[img] != s {
                return Err(Error::Internal(format!("sign conflict on the stabilizer of root {rep} (orbit {orbit:?})")));
            }
            assigned[img] = s;
        }
        for &r in &orbit {
            eps[r] = assigned[r];
            eps[d.negative(r)] = assigned[r];
        }
    }
    Ok(eps)
}

/// Bracket words (in Bourbaki positions, `alpha_2` the branch node) defining
/// the positive nonsimple root vectors of the triality-equivariant D4 system.
pub const D4_WORDS: &[&[usize]] = &[
    &[0, 1],
    &[2, 1],
    &[3, 1],
    &[0, 1, 2],
    &[0, 1, 3],
    &[2, 1, 3],
    &[0, 1, 2, 3],
    &[0, 1, 2, 3, 1],
];

fn d4_word_signs(d: &RootDatum, sc: &StructureConstants) -> Result<Vec<i8>> {
    let mut eps = vec![1i8; d.num_roots()];
    let mut covered = BTreeSet::new();
    for word in D4_WORDS {
        let mut r = d.basis()[word[0]];
        let mut coef = 1i64;
        for &p in &word[1..] {
            let s = d.basis()[p];
            coef *= sc.get(r, s);
            r = d.sum_index(r, s).ok_or_else(|| Error::Internal("bracket word leaves the root system".into()))?;
        }
        if coef.abs() != 1 {
            return Err(Error::Internal(format!("bracket word {word:?} has coefficient {coef}")));
        }
        eps[r] = coef.signum() as i8;
        eps[d.negative(r)] = eps[r];
        covered.insert(r);
    }
    if covered.len() != D4_WORDS.len() {
        return Err(Error::Internal("bracket words do not cover distinct roots".into()));
    }
    Ok(eps)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCheck {
    /// Positive roots of the orbit.
    pub roots: Vec<usize>,
    pub special: bool,
    /// True when `a . X_r = X_{a r}` for all elements and members.
    pub satisfied: bool,
    /// Distinct values of `c_a(r)` over the orbit.
    pub discrepancies: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivarianceReport {
    pub orbits: Vec<OrbitCheck>,
}

impl EquivarianceReport {
    pub fn nonspecial_satisfied(&self) -> bool {
        self.orbits.iter().all(|o| o.special || o.satisfied)
    }

    /// Every realized coefficient on special orbits lies in `{1, -1}`.
    pub fn special_discrepancies_are_signs(&self) -> bool {
        self.orbits.iter().filter(|o| o.special).all(|o| o.discrepancies.iter().all(|v| v.abs() == 1))
    }
}

/// Per positive orbit, whether the action carries root vectors to root vectors.
pub fn check_equivariance(d: &RootDatum, sc: &StructureConstants, act: &PinnedAction) -> Result<EquivarianceReport> {
    let classes = equivalence_classes(d, act)?;
    let special: BTreeSet<usize> = classes.iter().flat_map(|c| c.special.iter().copied()).collect();
    let coeff = action_coefficients(d, sc, act)?;
    let orbits = act
        .orbits(d, OrbitDomain::PositiveRoots)
        .into_iter()
        .map(|roots| {
            let vals: BTreeSet<i64> = roots.iter().flat_map(|&r| coeff.iter().map(move |c| c[r])).collect();
            OrbitCheck {
                special: special.contains(&roots[0]),
                satisfied: vals.iter().all(|&v| v == 1),
                discrepancies: vals.into_iter().collect(),
                roots,
            }
        })
        .collect();
    Ok(EquivarianceReport { orbits })
}
