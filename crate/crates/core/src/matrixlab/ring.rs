//! Small exact rings used as matrix carriers.

use std::fmt::Debug;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::intlat::prime_power;

/// A commutative ring context. Elements are plain values; the context owns any tables.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, if it exists.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// The finite field with `q = p^e <= 256` elements, by lookup tables.
///
/// Element `k` is the polynomial whose base-`p` digits of `k` are its
/// coefficients, constant term first.
#[derive(Clone, Debug)]
pub struct Gf {
    p: u64,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl Gf {
    pub fn new(q: u64) -> Result<Gf> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::Domain(format!("{q} is not a prime power")))?;
        if q > 256 {
            return Err(Error::Domain(format!("field size {q} exceeds the supported 256")));
        }
        let q = q as usize;
        let pu = p as usize;
        let digits = |mut k: usize| -> Vec<usize> {
            (0..e)
                .map(|_| {
                    let d = k % pu;
                    k /= pu;
                    d
                })
                .collect()
        };
        let encode = |v: &[usize]| v.iter().rev().fold(0, |acc, &d| acc * pu + d);
        let mut add = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let da = digits(a);
            neg[a] = encode(&da.iter().map(|&x| (pu - x) % pu).collect::<Vec<_>>()) as u8;
            for b in 0..q {
                let s: Vec<usize> = da.iter().zip(digits(b)).map(|(x, y)| (x + y) % pu).collect();
                add[a * q + b] = encode(&s) as u8;
            }
        }
        // try monic moduli x^e + c(x) until the multiplication has no zero divisors
        for c in 0..q {
            let modulus = digits(c);
            let mut mul = vec![0u8; q * q];
            for a in 0..q {
                for b in 0..q {
                    mul[a * q + b] = encode(&poly_mul_mod(&digits(a), &digits(b), &modulus, pu)) as u8;
                }
            }
            let inv: Vec<Option<u8>> =
                (0..q).map(|a| (1..q).find(|&b| mul[a * q + b] == 1).map(|b| b as u8)).collect();
            if inv[1..].iter().all(Option::is_some) {
                let inv = inv.into_iter().map(|x| x.unwrap_or(0)).collect();
                return Ok(Gf { p, q, add, mul, neg, inv });
            }
        }
        Err(Error::Internal(format!("no irreducible polynomial of degree {e} over F_{p}")))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn size(&self) -> usize {
        self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.q).map(|k| k as u8)
    }
}

/// Product of two polynomials modulo the monic `x^e + modulus(x)`.
fn poly_mul_mod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let e = a.len();
    let mut prod = vec![0usize; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (e..2 * e).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        // x^k = x^{k-e} * x^e = -x^{k-e} * modulus
        for (i, &m) in modulus.iter().enumerate() {
            prod[k - e + i] = (prod[k - e + i] + (p - c) * m) % p;
        }
    }
    prod.truncate(e);
    prod
}

impl Ring for Gf {
    type Elem = u8;
    fn zero(&self) -> u8 {
        0
    }
    fn one(&self) -> u8 {
        1
    }
    fn from_int(&self, n: i64) -> u8 {
        n.rem_euclid(self.p as i64) as u8
    }
    fn add(&self, a: &u8, b: &u8) -> u8 {
        self.add[*a as usize * self.q + *b as usize]
    }
    fn neg(&self, a: &u8) -> u8 {
        self.neg[*a as usize]
    }
    fn mul(&self, a: &u8, b: &u8) -> u8 {
        self.mul[*a as usize * self.q + *b as usize]
    }
    fn inv(&self, a: &u8) -> Option<u8> {
        (*a != 0).then(|| self.inv[*a as usize])
    }
}

/// Dual numbers `F_p[eps]/(eps^2)`; an element is `(a, b)` for `a + b eps`.
#[derive(Clone, Copy, Debug)]
pub struct DualNumbers {
    p: u64,
}

impl DualNumbers {
    pub fn new(p: u64) -> Result<Self> {
        if !crate::intlat::is_prime(p) {
            return Err(Error::Domain(format!("{p} is not a prime")));
        }
        Ok(DualNumbers { p })
    }
}

impl Ring for DualNumbers {
    type Elem = (u64, u64);
    fn zero(&self) -> Self::Elem {
        (0, 0)
    }
    fn one(&self) -> Self::Elem {
        (1, 0)
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        (n.rem_euclid(self.p as i64) as u64, 0)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        ((a.0 + b.0) % self.p, (a.1 + b.1) % self.p)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        ((self.p - a.0) % self.p, (self.p - a.1) % self.p)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (a.0 * b.0 % self.p, (a.0 * b.1 + a.1 * b.0) % self.p)
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.0 == 0 {
            return None;
        }
        let p = self.p as i64;
        let i = num::integer::Integer::extended_gcd(&(a.0 as i64), &p).x.rem_euclid(p) as u64;
        // (a + b eps)^{-1} = a^{-1} - b a^{-2} eps
        Some((i, (self.p - a.1 * i % self.p * i % self.p) % self.p))
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
}
