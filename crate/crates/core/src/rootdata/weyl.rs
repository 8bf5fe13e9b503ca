//! Weyl groups as permutation groups on the root list.

use std::collections::HashMap;

use super::RootDatum;
use crate::error::{Error, Result};

/// A permutation of root indices: `i -> p[i]`.
pub type Perm = Vec<u16>;

pub const DEFAULT_WEYL_LIMIT: usize = 1_000_000;

/// `p ∘ q`
pub fn compose(p: &[u16], q: &[u16]) -> Perm {
    q.iter().map(|&i| p[i as usize]).collect()
}

pub fn identity(n: usize) -> Perm {
    (0..n as u16).collect()
}

/// Closure of `gens` under composition, identity first, breadth-first order.
pub fn closure(n: usize, gens: &[Perm], limit: usize) -> Option<Vec<Perm>> {
    let id = identity(n);
    let mut seen: HashMap<Perm, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut elems = vec![id];
    let mut head = 0;
    while head < elems.len() {
        let g = elems[head].clone();
        head += 1;
        for s in gens {
            let h = compose(&g, s);
            if !seen.contains_key(&h) {
                if elems.len() >= limit {
                    return None;
                }
                seen.insert(h.clone(), ());
                elems.push(h);
            }
        }
    }
    Some(elems)
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    /// Simple reflections, in basis order.
    pub generators: Vec<Perm>,
    /// All elements, identity first.
    pub elements: Vec<Perm>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Enumerates the Weyl group by closing the simple reflections.
pub fn weyl_group(d: &RootDatum, limit: usize) -> Result<WeylGroup> {
    let generators: Vec<Perm> = d.basis().iter().map(|&b| d.reflection_perm(b)).collect();
    weyl_from_generators(d, generators, limit)
}

pub(crate) fn weyl_from_generators(d: &RootDatum, generators: Vec<Perm>, limit: usize) -> Result<WeylGroup> {
    if d.num_roots() > u16::MAX as usize {
        return Err(Error::Resource("too many roots for permutation storage".into()));
    }
    let elements = closure(d.num_roots(), &generators, limit)
        .ok_or_else(|| Error::Resource(format!("Weyl group has more than {limit} elements")))?;
    Ok(WeylGroup { generators, elements })
}
