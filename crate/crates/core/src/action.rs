//! Finite groups acting on a root datum by pinned automorphisms.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::intlat::IntMatrix;
use crate::rootdata::weyl::compose;
use crate::rootdata::{to_i64, Perm, RootDatum};

pub const DEFAULT_ACTION_LIMIT: usize = 10_000;

/// The faithful image of a finite group in the automorphisms of a based root datum.
#[derive(Clone, Debug)]
pub struct PinnedAction {
    rank: usize,
    generators: Vec<IntMatrix>,
    elements: Vec<IntMatrix>,
    duals: Vec<IntMatrix>,
    root_perms: Vec<Perm>,
    generator_elements: Vec<usize>,
    index: HashMap<IntMatrix, usize>,
}

/// What [`PinnedAction::orbits`] partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitDomain {
    Roots,
    PositiveRoots,
    SimpleRoots,
    Components,
}

/// Validates generators with the default closure limit.
pub fn validate(d: &RootDatum, generators: &[IntMatrix]) -> Result<PinnedAction> {
    validate_with_limit(d, generators, DEFAULT_ACTION_LIMIT)
}

pub fn validate_with_limit(d: &RootDatum, generators: &[IntMatrix], limit: usize) -> Result<PinnedAction> {
    let r = d.rank();
    for (k, g) in generators.iter().enumerate() {
        if g.rows() != r || g.cols() != r {
            return Err(Error::InvalidAction(format!(
                "generator {k} is {}x{} but the lattice has rank {r}",
                g.rows(),
                g.cols()
            )));
        }
        if !g.is_unimodular() {
            return Err(Error::InvalidAction(format!("generator {k} is not invertible over the integers")));
        }
    }
    let id = IntMatrix::identity(r);
    let mut index = HashMap::new();
    index.insert(id.clone(), 0);
    let mut elements = vec![id];
    let mut head = 0;
    while head < elements.len() {
        let a = elements[head].clone();
        head += 1;
        for g in generators {
            let b = g.mul(&a);
            if !index.contains_key(&b) {
                if elements.len() >= limit {
                    return Err(Error::InvalidAction(format!(
                        "closure exceeds {limit} elements; the generators do not seem to generate a finite group"
                    )));
                }
                index.insert(b.clone(), elements.len());
                elements.push(b);
            }
        }
    }
    let generator_elements = generators.iter().map(|g| index[g]).collect();
    let basis: BTreeSet<usize> = d.basis().iter().copied().collect();
    let mut duals = Vec::with_capacity(elements.len());
    let mut root_perms = Vec::with_capacity(elements.len());
    for (e, a) in elements.iter().enumerate() {
        let dual = a.inverse_unimodular().expect("closure of unimodular matrices").transpose();
        let mut perm = Vec::with_capacity(d.num_roots());
        for i in 0..d.num_roots() {
            let img = to_i64(&a.apply_i64(d.root(i)));
            let Some(j) = img.and_then(|v| d.find(&v)) else {
                return Err(Error::InvalidAction(format!("element {e} does not preserve the roots")));
            };
            let cimg = to_i64(&dual.apply_i64(d.coroot(i)));
            if cimg.as_deref() != Some(d.coroot(j)) {
                return Err(Error::InvalidAction(format!(
                    "element {e}: dual action does not carry coroot {i} to the coroot of its image"
                )));
            }
            perm.push(j as u16);
        }
        if d.basis().iter().any(|&b| !basis.contains(&(perm[b] as usize))) {
            return Err(Error::InvalidAction(format!("element {e} does not preserve the basis Delta")));
        }
        duals.push(dual);
        root_perms.push(perm);
    }
    Ok(PinnedAction { rank: r, generators: generators.to_vec(), elements, duals, root_perms, generator_elements, index })
}

impl PinnedAction {
    /// The trivial action.
    pub fn trivial(d: &RootDatum) -> Self {
        validate(d, &[]).expect("the trivial action is always valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    /// Action on `M^vee`: inverse transpose.
    pub fn dual(&self, e: usize) -> &IntMatrix {
        &self.duals[e]
    }

    pub fn root_perm(&self, e: usize) -> &Perm {
        &self.root_perms[e]
    }

    /// Element indices of the generators.
    pub fn generator_elements(&self) -> &[usize] {
        &self.generator_elements
    }

    pub fn generator_root_perms(&self) -> Vec<&Perm> {
        self.generator_elements.iter().map(|&g| &self.root_perms[g]).collect()
    }

    /// Index of the product `a * b`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Image of a root under element `e`.
    pub fn act_root(&self, e: usize, root: usize) -> usize {
        self.root_perms[e][root] as usize
    }

    /// For every element, the induced permutation of indecomposable components.
    /// Verified to be a homomorphism on generator/element pairs, which suffices.
    pub fn component_permutation(&self, d: &RootDatum) -> Result<Vec<Vec<usize>>> {
        let comps = d.simple_components();
        let table: Vec<Vec<usize>> = self
            .root_perms
            .iter()
            .map(|p| {
                comps
                    .iter()
                    .map(|c| d.root_component(p[d.basis()[c[0]]] as usize))
                    .collect()
            })
            .collect();
        for &g in &self.generator_elements {
            for b in 0..self.order() {
                let gb = self.product(g, b);
                let composed: Vec<usize> = table[b].iter().map(|&c| table[g][c]).collect();
                if table[gb] != composed {
                    return Err(Error::Internal("component permutation is not a homomorphism".into()));
                }
            }
        }
        Ok(table)
    }

    /// Partition into orbits, each sorted, ordered by least member. Roots are
    /// reported by root index, components by component index.
    pub fn orbits(&self, d: &RootDatum, domain: OrbitDomain) -> Vec<Vec<usize>> {
        match domain {
            OrbitDomain::Components => {
                let table = self.component_permutation(d).expect("validated action");
                let n = d.simple_components().len();
                partition((0..n).collect(), |x| table.iter().map(|p| p[x]).collect())
            }
            _ => {
                let items: Vec<usize> = match domain {
                    OrbitDomain::Roots => (0..d.num_roots()).collect(),
                    OrbitDomain::PositiveRoots => d.positive_roots(),
                    _ => d.basis().to_vec(),
                };
                partition(items, |x| self.root_perms.iter().map(|p| p[x] as usize).collect())
            }
        }
    }

    /// Orbit of a single root.
    pub fn root_orbit(&self, root: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.root_perms.iter().map(|p| p[root] as usize).collect();
        set.into_iter().collect()
    }

    /// True if some element stabilizing component `c` moves one of its roots.
    pub fn stabilizer_acts_nontrivially(&self, d: &RootDatum, c: usize) -> bool {
        let table = self.component_permutation(d).expect("validated action");
        let roots = &d.components()[c];
        (0..self.order()).any(|e| table[e][c] == c && roots.iter().any(|&r| self.root_perms[e][r] as usize != r))
    }

    /// Group generated by the root permutations, for cross-checks.
    pub fn root_perm_products_consistent(&self) -> bool {
        self.generator_elements.iter().all(|&g| {
            (0..self.order()).all(|b| compose(&self.root_perms[g], &self.root_perms[b]) == self.root_perms[self.product(g, b)])
        })
    }
}

fn partition(items: Vec<usize>, orbit_of: impl Fn(usize) -> BTreeSet<usize>) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in items {
        if seen.contains(&x) {
            continue;
        }
        let orb = orbit_of(x);
        seen.extend(orb.iter().copied());
        out.push(orb.into_iter().collect());
    }
    out
}
