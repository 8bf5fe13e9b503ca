//! Multivariate integer polynomials: arithmetic, substitution and linear elimination.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::bigint::BigInt;
use num::{Signed, ToPrimitive, Zero};

use super::ring::{Gf, Ring};
use crate::error::{Error, Result};
use crate::intlat::{is_prime, prime_power};

/// A polynomial in a fixed number of variables; keys are exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn constant(nvars: usize, c: i64) -> Poly {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(vec![0; nvars], BigInt::from(c));
        }
        Poly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly { nvars, terms: BTreeMap::from([(e, BigInt::from(1))]) }
    }

    /// Builds from `(coefficient, exponents)` pairs.
    pub fn from_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Poly {
        let mut p = Poly::constant(nvars, 0);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e.to_vec(), BigInt::from(*c));
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> Poly {
        let mut r = Poly::constant(self.nvars, 0);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c * k);
        }
        r
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::constant(self.nvars, 0);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.nvars, 1), |acc, _| acc.mul(self))
    }

    /// Replaces variable `var` by `value`.
    pub fn substitute(&self, var: usize, value: &Poly) -> Poly {
        let mut r = Poly::constant(self.nvars, 0);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[var] = 0;
            let mono = Poly { nvars: self.nvars, terms: BTreeMap::from([(rest, c.clone())]) };
            r = r.add(&mono.mul(&value.pow(e[var])));
        }
        r
    }

    /// Removes a variable that no longer occurs.
    pub fn drop_var(&self, var: usize) -> Poly {
        assert_eq!(self.degree_in(var), 0, "variable still occurs");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.remove(var);
                (e, c.clone())
            })
            .collect();
        Poly { nvars: self.nvars - 1, terms }
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut r = Poly::constant(self.nvars, 0);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut e2 = e.clone();
                e2[var] -= 1;
                r.add_term(e2, c * e[var]);
            }
        }
        r
    }

    /// Coefficients reduced into `0..p`.
    pub fn reduce_mod(&self, p: u64) -> Poly {
        let m = BigInt::from(p);
        let mut r = Poly::constant(self.nvars, 0);
        for (e, c) in &self.terms {
            let v = ((c % &m) + &m) % &m;
            r.add_term(e.clone(), v);
        }
        r
    }

    /// Sign-normalized: the greatest exponent vector has a positive coefficient.
    pub fn normalized(&self) -> Poly {
        match self.terms.iter().next_back() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn eval<R: Ring>(&self, ring: &R, point: &[R::Elem]) -> R::Elem {
        let mut acc = ring.zero();
        for (e, c) in &self.terms {
            let k = c.to_i64().expect("small coefficient");
            let mut t = ring.from_int(k);
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = ring.mul(&t, x);
                }
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    /// Human form, highest terms first, e.g. `x^2 - 2*y`.
    pub fn display(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, n)| if k == 1 { n.to_string() } else { format!("{n}^{k}") })
                .collect();
            let mag = c.abs();
            let body = match (mono.is_empty(), mag == BigInt::from(1)) {
                (true, _) => mag.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{mag}*{}", mono.join("*")),
            };
            match (k, c.is_negative()) {
                (0, true) => write!(out, "-{body}"),
                (0, false) => write!(out, "{body}"),
                (_, true) => write!(out, " - {body}"),
                (_, false) => write!(out, " + {body}"),
            }
            .expect("string write");
        }
        out
    }
}

/// An integer polynomial ring as a [`Ring`] context.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing {
    pub nvars: usize,
}

impl PolyRing {
    pub fn var(&self, i: usize) -> Poly {
        Poly::var(self.nvars, i)
    }
}

impl Ring for PolyRing {
    type Elem = Poly;
    fn zero(&self) -> Poly {
        Poly::constant(self.nvars, 0)
    }
    fn one(&self) -> Poly {
        Poly::constant(self.nvars, 1)
    }
    fn from_int(&self, n: i64) -> Poly {
        Poly::constant(self.nvars, n)
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }
    fn inv(&self, a: &Poly) -> Option<Poly> {
        match a.constant_value()?.to_i64()? {
            c @ (1 | -1) => Some(Poly::constant(self.nvars, c)),
            _ => None,
        }
    }
}

/// A quotient `Z[vars]/(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub variables: Vec<String>,
    pub relations: Vec<Poly>,
}

impl std::fmt::Display for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        let rels: Vec<String> = self.relations.iter().map(|r| r.display(&names)).collect();
        write!(f, "Z[{}]/({})", self.variables.join(","), rels.join(", "))
    }
}

impl Presentation {
    /// Eliminates, from the last variable down, any variable occurring in some
    /// relation as `+-v + h` with `h` free of `v`.
    pub fn eliminate_linear(mut self) -> Presentation {
        let mut v = self.variables.len();
        while v > 0 {
            v -= 1;
            let n = self.variables.len();
            let pick = self.relations.iter().position(|r| {
                let dv = r.derivative(v);
                matches!(dv.constant_value().and_then(|c| c.to_i64()), Some(1 | -1)) && r.degree_in(v) == 1
            });
            let Some(k) = pick else { continue };
            let rel = self.relations.remove(k);
            let c = rel.derivative(v).constant_value().and_then(|c| c.to_i64()).expect("unit coefficient");
            // rel = c v + h, so v = -c h
            let h = rel.sub(&Poly::var(n, v).scale(c));
            let value = h.scale(-c);
            self.relations = self
                .relations
                .iter()
                .map(|r| r.substitute(v, &value).drop_var(v).normalized())
                .filter(|r| !r.is_zero())
                .collect();
            self.variables.remove(v);
        }
        self
    }

    /// Number of `F_q`-points by enumeration.
    pub fn point_count(&self, q: u64) -> Result<u128> {
        let f = Gf::new(q)?;
        let n = self.variables.len();
        let total = (q as u128).checked_pow(n as u32).filter(|&t| t <= 1 << 24);
        let total = total.ok_or_else(|| Error::Resource(format!("too many points to enumerate over F_{q}")))?;
        let mut count = 0;
        for k in 0..total {
            let point: Vec<u8> = (0..n).map(|i| ((k / (q as u128).pow(i as u32)) % q as u128) as u8).collect();
            if self.relations.iter().all(|r| r.eval(&f, &point) == 0) {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// The fixed-point computation on the upper unitriangular group of `SL_3`.
#[derive(Clone, Debug)]
pub struct U3Fixed {
    /// Images of `x, y, z` under the involution (entries 12, 13, 23).
    pub action: Vec<Poly>,
    /// Generators `v - action(v)`, sign-normalized and deduplicated.
    pub ideal: Vec<Poly>,
    pub presentation: Presentation,
}

/// Specialization of the one-relation presentation at a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct U3Specialization {
    pub p: u64,
    pub relation: Poly,
    /// A nonzero nilpotent element, when the relation is a monomial with a repeated factor.
    pub nilpotent: Option<Poly>,
    /// Some variable has a nonzero constant partial derivative modulo `p`.
    pub jacobian_smooth: bool,
}

/// The involution acts on `[[1,x,y],[0,1,z],[0,0,1]]` by `(x, y, z) -> (z, xz - y, x)`.
pub fn u3_fixed_presentation() -> U3Fixed {
    let r = PolyRing { nvars: 3 };
    let (x, y, z) = (r.var(0), r.var(1), r.var(2));
    let action = vec![z.clone(), x.mul(&z).sub(&y), x.clone()];
    let mut ideal: Vec<Poly> = Vec::new();
    for (v, img) in [&x, &y, &z].into_iter().zip(&action) {
        let g = img.sub(v).normalized();
        if !g.is_zero() && !ideal.contains(&g) {
            ideal.push(g);
        }
    }
    let presentation = Presentation { variables: vec!["x".into(), "y".into(), "z".into()], relations: ideal.clone() }
        .eliminate_linear();
    U3Fixed { action, ideal, presentation }
}

impl U3Fixed {
    pub fn action_is_involution(&self) -> bool {
        self.action.iter().enumerate().all(|(i, f)| {
            // substitute through fresh variables 3..6, then rename them back
            let mut g = lift(f, 6);
            for (j, img) in self.action.iter().enumerate() {
                g = g.substitute(j, &shift(img, 6, 3));
            }
            let g = (0..3).fold(g, |acc, _| acc.drop_var(0));
            g == Poly::var(3, i)
        })
    }

    pub fn specialize(&self, p: u64) -> Result<U3Specialization> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not a prime")));
        }
        let [rel] = &self.presentation.relations[..] else {
            return Err(Error::Internal("expected a single relation".into()));
        };
        let relation = rel.reduce_mod(p);
        let nvars = relation.nvars();
        let nilpotent = match relation.terms().collect::<Vec<_>>()[..] {
            [(e, _)] if e.iter().any(|&k| k >= 2) => {
                let e: Vec<u32> = e.iter().map(|&k| k.min(1)).collect();
                Some(Poly { nvars, terms: BTreeMap::from([(e, BigInt::from(1))]) })
            }
            _ => None,
        };
        let jacobian_smooth = (0..nvars).any(|v| {
            let d = relation.derivative(v).reduce_mod(p);
            matches!(d.constant_value(), Some(c) if !c.is_zero())
        });
        Ok(U3Specialization { p, relation, nilpotent, jacobian_smooth })
    }

    pub fn point_count(&self, q: u64) -> Result<u128> {
        prime_power(q).ok_or_else(|| Error::Domain(format!("{q} is not a prime power")))?;
        self.presentation.point_count(q)
    }
}

/// Embeds a polynomial in `n` variables into `total` variables (new ones last).
fn lift(f: &Poly, total: usize) -> Poly {
    let terms = f
        .terms
        .iter()
        .map(|(e, c)| {
            let mut e = e.clone();
            e.resize(total, 0);
            (e, c.clone())
        })
        .collect();
    Poly { nvars: total, terms }
}

/// Like [`lift`] but moves variable `i` to `i + offset`.
fn shift(f: &Poly, total: usize, offset: usize) -> Poly {
    let terms = f
        .terms
        .iter()
        .map(|(e, c)| {
            let mut ne = vec![0; total];
            for (i, &k) in e.iter().enumerate() {
                ne[i + offset] = k;
            }
            (ne, c.clone())
        })
        .collect();
    Poly { nvars: total, terms }
}
