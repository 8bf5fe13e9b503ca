//! Equivalence classes of positive roots and the folded root data.

use std::collections::{BTreeSet, HashSet};

use num::bigint::BigInt;
use num::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::action::{OrbitDomain, PinnedAction};
use crate::error::{Error, Result};
use crate::intlat::{column_span_contains, kernel_basis, FinAbGroup, IntMatrix, LatticeQuotient};
use crate::rootdata::weyl::{closure, compose, weyl_group};
use crate::rootdata::{big_vec, dot, Family, Perm, RootDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassType {
    /// A single orbit in which no two members sum to a root.
    TypeI,
    /// Two orbits; one consists of sums of pairs from the other.
    TypeII,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldClass {
    /// Sorted root indices.
    pub members: Vec<usize>,
    pub class_type: ClassType,
    /// Members that are sums of two members; empty for `TypeI`.
    pub special: Vec<usize>,
    /// Lowest member index.
    pub representative: usize,
    /// The orbits making up the class, each sorted.
    pub orbits: Vec<Vec<usize>>,
}

impl FoldClass {
    pub fn nonspecial(&self) -> Vec<usize> {
        self.members.iter().copied().filter(|m| !self.special.contains(m)).collect()
    }

    /// Lowest special member, if any.
    pub fn special_representative(&self) -> Option<usize> {
        self.special.first().copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Nondivisible roots; the datum in force away from characteristic 2.
    R1,
    /// Nonmultipliable roots; the datum in force in characteristic 2.
    R2,
    /// All folded roots.
    NonReduced,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::R1, Variant::R2, Variant::NonReduced];

    pub fn name(self) -> &'static str {
        match self {
            Variant::R1 => "R1",
            Variant::R2 => "R2",
            Variant::NonReduced => "NonReduced",
        }
    }
}

/// Role of a folded root within its class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoldedRole {
    /// Image of a `TypeI` class.
    Plain,
    /// Image of the nonspecial members of a `TypeII` class.
    Multipliable,
    /// Image of the special members of a `TypeII` class.
    Divisible,
}

#[derive(Clone, Debug)]
pub struct FoldedDatum {
    pub datum: RootDatum,
    pub variant: Variant,
    /// For each folded root, the index of its class.
    pub class_of_root: Vec<usize>,
    pub role: Vec<FoldedRole>,
}

/// True if some component of type `A_{2n}` has a stabilizer acting nontrivially on it.
pub fn has_active_a2n(d: &RootDatum, act: &PinnedAction) -> Result<bool> {
    let ty = d.cartan_type()?;
    Ok(ty
        .components
        .iter()
        .enumerate()
        .any(|(c, &(fam, n))| fam == Family::A && n % 2 == 0 && act.stabilizer_acts_nontrivially(d, c)))
}

fn proportional(u: &[i64], v: &[i64]) -> bool {
    (0..u.len()).all(|i| (0..u.len()).all(|j| i128::from(u[i]) * i128::from(v[j]) == i128::from(u[j]) * i128::from(v[i])))
}

fn proportional_big(u: &[BigInt], v: &[BigInt]) -> bool {
    (0..u.len()).all(|i| (0..u.len()).all(|j| &u[i] * &v[j] == &u[j] * &v[i]))
}

/// Coinvariant quotient `M_A` of the character lattice.
pub fn coinvariant_lattice(act: &PinnedAction) -> Result<LatticeQuotient> {
    crate::intlat::coinvariant_quotient(act.rank(), act.generators())
}

/// `sum alpha^vee` over a set of roots, in `M^vee` coordinates.
pub fn coroot_sum(d: &RootDatum, roots: &[usize]) -> Vec<i64> {
    let mut s = vec![0i64; d.rank()];
    for &r in roots {
        for (x, y) in s.iter_mut().zip(d.coroot(r)) {
            *x += y;
        }
    }
    s
}

/// Partition of the positive roots into classes of proportional orbit sums.
pub fn equivalence_classes(d: &RootDatum, act: &PinnedAction) -> Result<Vec<FoldClass>> {
    if !d.is_reduced() {
        return Err(Error::Domain("folding input must be a reduced root datum".into()));
    }
    let orbits = act.orbits(d, OrbitDomain::PositiveRoots);
    let sums: Vec<Vec<i64>> = orbits.iter().map(|o| coefficient_free_sum(d, o)).collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (k, s) in sums.iter().enumerate() {
        match groups.iter_mut().find(|g| proportional(&sums[g[0]], s)) {
            Some(g) => g.push(k),
            None => groups.push(vec![k]),
        }
    }
    let coinv = coinvariant_lattice(act)?;
    let mut classes = Vec::with_capacity(groups.len());
    for g in groups {
        let class_orbits: Vec<Vec<usize>> = g.iter().map(|&k| orbits[k].clone()).collect();
        let mut members: Vec<usize> = class_orbits.iter().flatten().copied().collect();
        members.sort_unstable();
        let special: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&s| members.iter().any(|&a| members.iter().any(|&b| a < b && d.sum_index(a, b) == Some(s))))
            .collect();
        let pair_sums = members.iter().any(|&a| members.iter().any(|&b| a < b && d.sum_index(a, b).is_some()));
        let class_type = match class_orbits.len() {
            1 if !pair_sums => ClassType::TypeI,
            2 if class_orbits.iter().any(|o| *o == special) => {
                let ns = members.iter().copied().find(|m| !special.contains(m)).unwrap();
                let two_m: Vec<BigInt> = d.root(ns).iter().map(|&x| BigInt::from(2 * x)).collect();
                let diff: Vec<BigInt> = big_vec(d.root(special[0])).iter().zip(&two_m).map(|(a, b)| a - b).collect();
                if !coinv.is_zero(&diff) {
                    return Err(Error::Internal(format!(
                        "special root {} is not twice the nonspecial image in the coinvariants",
                        special[0]
                    )));
                }
                ClassType::TypeII
            }
            _ => {
                return Err(Error::Internal(format!("class {members:?} matches neither class type")));
            }
        };
        let special = if class_type == ClassType::TypeI { vec![] } else { special };
        classes.push(FoldClass { representative: members[0], members, class_type, special, orbits: class_orbits });
    }
    classes.sort_by_key(|c| c.representative);
    let any_type_ii = classes.iter().any(|c| c.class_type == ClassType::TypeII);
    if any_type_ii != has_active_a2n(d, act)? {
        return Err(Error::Internal(
            "TypeII classes occur exactly when an A_2n component has a nontrivially acting stabilizer; this failed".into(),
        ));
    }
    Ok(classes)
}

/// Orbit sum as a vector in `M`.
fn coefficient_free_sum(d: &RootDatum, orbit: &[usize]) -> Vec<i64> {
    let mut s = vec![0i64; d.rank()];
    for &r in orbit {
        for (x, y) in s.iter_mut().zip(d.root(r)) {
            *x += y;
        }
    }
    s
}

/// Everything the folded data are built from.
struct FoldContext {
    classes: Vec<FoldClass>,
    coinv: LatticeQuotient,
    lifts: Vec<Vec<BigInt>>,
}

impl FoldContext {
    fn new(d: &RootDatum, act: &PinnedAction) -> Result<Self> {
        let classes = equivalence_classes(d, act)?;
        let coinv = coinvariant_lattice(act)?;
        let lifts = coinv.free_lifts();
        let f = lifts.len();
        // (M^vee)^A: kernel of the stacked (dual(a) - id)
        let id = IntMatrix::identity(d.rank());
        let parts: Vec<IntMatrix> = act.generator_elements().iter().map(|&g| act.dual(g).sub(&id)).collect();
        let invariants = if parts.is_empty() {
            (0..d.rank()).map(|j| id.column(j)).collect()
        } else {
            kernel_basis(&IntMatrix::vstack(&parts, d.rank()))
        };
        if invariants.len() != f {
            return Err(Error::Internal(format!(
                "free rank of coinvariants ({f}) differs from rank of invariants ({})",
                invariants.len()
            )));
        }
        let mut pairing = IntMatrix::zeros(f, f);
        for i in 0..f {
            for j in 0..f {
                pairing.set(i, j, lifts[i].iter().zip(&invariants[j]).map(|(a, b)| a * b).sum());
            }
        }
        if !pairing.is_unimodular() {
            return Err(Error::Internal("coinvariants and invariants are not in perfect duality".into()));
        }
        let ctx = FoldContext { classes, coinv, lifts };
        ctx.check_images(d)?;
        Ok(ctx)
    }

    fn image(&self, d: &RootDatum, root: usize) -> Vec<BigInt> {
        self.coinv.project_free_i64(d.root(root))
    }

    /// Dual-basis coordinates of an invariant cocharacter.
    fn dual_coordinates(&self, cochar: &[i64]) -> Vec<BigInt> {
        let c = big_vec(cochar);
        self.lifts.iter().map(|l| l.iter().zip(&c).map(|(a, b)| a * b).sum()).collect()
    }

    /// Class images are nonzero and pairwise non-proportional; re-verified
    /// on every input instead of being taken from the classification.
    fn check_images(&self, d: &RootDatum) -> Result<()> {
        let imgs: Vec<Vec<BigInt>> = self.classes.iter().map(|c| self.image(d, c.representative)).collect();
        for (i, a) in imgs.iter().enumerate() {
            if a.iter().all(|x| x.is_zero()) {
                return Err(Error::Internal(format!("class {i} has zero image in the coinvariants")));
            }
            for (j, b) in imgs.iter().enumerate().skip(i + 1) {
                if proportional_big(a, b) {
                    return Err(Error::Internal(format!("classes {i} and {j} have proportional images")));
                }
            }
        }
        Ok(())
    }

    fn build(&self, d: &RootDatum, act: &PinnedAction, variant: Variant) -> Result<FoldedDatum> {
        let mut roots: Vec<Vec<BigInt>> = Vec::new();
        let mut coroots: Vec<Vec<BigInt>> = Vec::new();
        let mut class_of_root = Vec::new();
        let mut role = Vec::new();
        // position of the folded root to use as simple root for each class
        let mut main_of_class = vec![usize::MAX; self.classes.len()];
        for (k, c) in self.classes.iter().enumerate() {
            let full = self.dual_coordinates(&coroot_sum(d, &c.members));
            match c.class_type {
                ClassType::TypeI => {
                    main_of_class[k] = roots.len();
                    roots.push(self.image(d, c.representative));
                    coroots.push(full);
                    class_of_root.push(k);
                    role.push(FoldedRole::Plain);
                }
                ClassType::TypeII => {
                    let m = self.image(d, c.nonspecial()[0]);
                    let dv = self.image(d, c.special[0]);
                    if dv != m.iter().map(|x| x * 2).collect::<Vec<_>>() {
                        return Err(Error::Internal(format!("class {k}: divisible image is not twice the multipliable one")));
                    }
                    let dco = self.dual_coordinates(&coroot_sum(d, &c.special));
                    if variant != Variant::R2 {
                        main_of_class[k] = roots.len();
                        roots.push(m);
                        coroots.push(full);
                        class_of_root.push(k);
                        role.push(FoldedRole::Multipliable);
                    }
                    if variant != Variant::R1 {
                        if variant == Variant::R2 {
                            main_of_class[k] = roots.len();
                        }
                        roots.push(dv);
                        coroots.push(dco);
                        class_of_root.push(k);
                        role.push(FoldedRole::Divisible);
                    }
                }
            }
        }
        let positive = roots.len();
        for i in 0..positive {
            roots.push(roots[i].iter().map(|x| -x).collect());
            coroots.push(coroots[i].iter().map(|x| -x).collect());
            class_of_root.push(class_of_root[i]);
            role.push(role[i]);
        }
        let mut basis = Vec::new();
        for orbit in act.orbits(d, OrbitDomain::SimpleRoots) {
            let k = self.classes.iter().position(|c| c.members.contains(&orbit[0])).expect("simple roots are positive");
            basis.push(main_of_class[k]);
        }
        let conv = |vs: Vec<Vec<BigInt>>| -> Result<Vec<Vec<i64>>> {
            vs.into_iter()
                .map(|v| v.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>())
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Resource("folded coordinates exceed 64 bits".into()))
        };
        let datum = RootDatum::new(
            self.lifts.len(),
            conv(roots)?,
            conv(coroots)?,
            basis,
            variant != Variant::NonReduced,
        )
        .map_err(|e| Error::Internal(format!("folded {} datum is invalid: {e}", variant.name())))?;
        Ok(FoldedDatum { datum, variant, class_of_root, role })
    }
}

/// The folded root datum on `M_A / torsion` and `(M^vee)^A`.
pub fn folded_root_datum(d: &RootDatum, act: &PinnedAction, variant: Variant) -> Result<FoldedDatum> {
    FoldContext::new(d, act)?.build(d, act, variant)
}

/// All three folded variants from one classification pass.
pub fn folded_root_data(d: &RootDatum, act: &PinnedAction) -> Result<[FoldedDatum; 3]> {
    let ctx = FoldContext::new(d, act)?;
    Ok([ctx.build(d, act, Variant::R1)?, ctx.build(d, act, Variant::R2)?, ctx.build(d, act, Variant::NonReduced)?])
}

#[derive(Clone, Debug)]
pub struct FixedWeyl {
    /// Elements of `W` commuting with the action, identity first.
    pub elements: Vec<Perm>,
    /// Longest elements of the parabolic subgroups of the orbits in `Delta`.
    pub coxeter_generators: Vec<Perm>,
}

impl FixedWeyl {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// `W^A` by filtering `W`, with its Coxeter generators checked to generate it.
pub fn fixed_weyl(d: &RootDatum, act: &PinnedAction, limit: usize) -> Result<FixedWeyl> {
    let w = weyl_group(d, limit)?;
    let gens = act.generator_root_perms();
    let elements: Vec<Perm> = w
        .elements
        .par_iter()
        .filter(|x| gens.iter().all(|g| compose(x, g) == compose(g, x)))
        .cloned()
        .collect();
    let mut coxeter_generators = Vec::new();
    for orbit in act.orbits(d, OrbitDomain::SimpleRoots) {
        let refl: Vec<Perm> = orbit.iter().map(|&r| d.reflection_perm(r)).collect();
        let sub = closure(d.num_roots(), &refl, limit)
            .ok_or_else(|| Error::Resource("parabolic subgroup exceeds the Weyl limit".into()))?;
        let longest = sub.into_iter().max_by_key(|x| d.length(x)).expect("nonempty group");
        coxeter_generators.push(longest);
    }
    let set: HashSet<&Perm> = elements.iter().collect();
    if coxeter_generators.iter().any(|g| !set.contains(g)) {
        return Err(Error::Internal("a folded simple reflection does not commute with the action".into()));
    }
    let generated = closure(d.num_roots(), &coxeter_generators, limit)
        .ok_or_else(|| Error::Resource("fixed Weyl group exceeds the limit".into()))?;
    if generated.len() != elements.len() {
        return Err(Error::Internal(format!(
            "folded simple reflections generate {} elements but W^A has {}",
            generated.len(),
            elements.len()
        )));
    }
    Ok(FixedWeyl { elements, coxeter_generators })
}

/// Number of classes `E` with `w^{-1}(E)` negative; `w` must commute with the action.
pub fn class_length(d: &RootDatum, classes: &[FoldClass], w: &Perm) -> Result<usize> {
    let mut inv = vec![0u16; w.len()];
    for (i, &j) in w.iter().enumerate() {
        inv[j as usize] = i as u16;
    }
    let mut count = 0;
    for c in classes {
        let neg = c.members.iter().filter(|&&m| !d.is_positive(inv[m] as usize)).count();
        if neg == c.members.len() {
            count += 1;
        } else if neg != 0 {
            return Err(Error::Internal("a fixed Weyl element splits an equivalence class".into()));
        }
    }
    Ok(count)
}

/// `(M / Z R)_A`, the character group of the center of the fixed points.
pub fn center_structure(d: &RootDatum, act: &PinnedAction) -> Result<FinAbGroup> {
    let r = d.rank();
    let roots: Vec<Vec<BigInt>> = d.basis().iter().map(|&b| big_vec(d.root(b))).collect();
    let mut parts = vec![IntMatrix::from_columns(r, &roots)];
    parts.push(crate::intlat::coinvariant_relations(r, act.generators()));
    Ok(LatticeQuotient::new(r, &IntMatrix::hstack(&parts, r)).group)
}

#[derive(Clone, Debug)]
pub struct Parabolic {
    /// Positions in the folded basis (orbit order of `Delta`).
    pub folded_subset: Vec<usize>,
    /// Monoid generators in normal coordinates of `M_A`: images of `Delta`,
    /// then negated images of `Gamma`, without repeats.
    pub generators: Vec<Vec<BigInt>>,
}

/// Correspondence between `A`-stable subsets of `Delta` and subsets of the folded basis.
pub fn parabolic_correspondence(d: &RootDatum, act: &PinnedAction, gamma: &[usize]) -> Result<Parabolic> {
    let gset: BTreeSet<usize> = gamma.iter().copied().collect();
    if let Some(g) = gset.iter().find(|g| d.basis_position(**g).is_none()) {
        return Err(Error::Domain(format!("root {g} is not a simple root")));
    }
    for p in act.generator_root_perms() {
        if gset.iter().any(|&g| !gset.contains(&(p[g] as usize))) {
            return Err(Error::Domain("subset of Delta is not stable under the action".into()));
        }
    }
    let coinv = coinvariant_lattice(act)?;
    let orbits = act.orbits(d, OrbitDomain::SimpleRoots);
    let folded_subset = orbits.iter().enumerate().filter(|(_, o)| o.iter().all(|r| gset.contains(r))).map(|(k, _)| k).collect();
    let mut generators: Vec<Vec<BigInt>> = Vec::new();
    let mut push = |v: Vec<BigInt>| {
        if !generators.contains(&v) {
            generators.push(v);
        }
    };
    for &b in d.basis() {
        push(coinv.normal_coordinates(&big_vec(d.root(b))));
    }
    for &g in &gset {
        let neg: Vec<BigInt> = d.root(g).iter().map(|&x| BigInt::from(-x)).collect();
        push(coinv.normal_coordinates(&neg));
    }
    Ok(Parabolic { folded_subset, generators })
}

/// Whether `(Z R)_A -> (M_sc)_A` is injective, both sides in the bases
/// `Delta` and fundamental weights on which `A` acts by permutations.
pub fn isogeny_injectivity_check(d: &RootDatum, act: &PinnedAction) -> Result<bool> {
    let l = d.basis().len();
    if l == 0 {
        return Ok(true);
    }
    let cartan = d.cartan_matrix();
    let mut rel_cols: Vec<Vec<BigInt>> = Vec::new();
    for p in act.generator_root_perms() {
        for i in 0..l {
            let j = d.basis_position(p[d.basis()[i]] as usize).ok_or_else(|| Error::Internal("basis not preserved".into()))?;
            if i != j {
                let mut v = vec![BigInt::zero(); l];
                v[i] += 1;
                v[j] -= 1;
                rel_cols.push(v);
            }
        }
    }
    let rel = IntMatrix::from_columns(l, &rel_cols);
    // alpha_i -> sum_j a_ij omega_j
    let phi = IntMatrix::from_rows(&cartan).transpose();
    let stacked = IntMatrix::hstack(&[phi, rel.neg()], l);
    for v in kernel_basis(&stacked) {
        let x = &v[..l];
        let in_span = if rel_cols.is_empty() { x.iter().all(|t| t.is_zero()) } else { column_span_contains(&rel, x) };
        if !in_span {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `<alpha, gamma^vee>` for every member `alpha` of a class, against the class
/// coroot of the chosen variant (full sum, or special members only for the
/// divisible root of `R2`).
pub fn member_pairings(d: &RootDatum, class: &FoldClass, special_only: bool) -> Vec<i64> {
    let co = if special_only { coroot_sum(d, &class.special) } else { coroot_sum(d, &class.members) };
    class.members.iter().map(|&m| dot(d.root(m), &co)).collect()
}

/// Structural invariants of the folding, each violation described in one line.
///
/// Checks closure of classes under sums, non-proportional class images,
/// `<alpha_E, gamma_E^vee> = 2` in every variant, equal Weyl orders for
/// `W^A`, `R1` and `R2`, the isogeny injectivity, and the doubling bijection
/// between multipliable and divisible roots of the nonreduced variant.
pub fn invariant_violations(d: &RootDatum, act: &PinnedAction, weyl_limit: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let classes = equivalence_classes(d, act)?;
    let class_of = |r: usize| classes.iter().position(|c| c.members.contains(&r));
    for (k, c) in classes.iter().enumerate() {
        for &a in &c.members {
            for &b in &c.members {
                if let Some(s) = d.sum_index(a, b) {
                    if class_of(s) != Some(k) {
                        out.push(format!("class {k}: sum of roots {a} and {b} leaves the class"));
                    }
                }
            }
        }
        let expect = |v: &[i64], what: &str, out: &mut Vec<String>| {
            if v.iter().any(|&x| x != 2) {
                out.push(format!("class {k}: {what} pairings {v:?}, expected 2"));
            }
        };
        match c.class_type {
            ClassType::TypeI => expect(&member_pairings(d, c, false), "member", &mut out),
            ClassType::TypeII => {
                let full = member_pairings(d, c, false);
                let ns: Vec<i64> = c.members.iter().zip(&full).filter(|(m, _)| !c.special.contains(m)).map(|(_, v)| *v).collect();
                expect(&ns, "nonspecial", &mut out);
                let sp = member_pairings(d, c, true);
                let sp: Vec<i64> = c.members.iter().zip(&sp).filter(|(m, _)| c.special.contains(m)).map(|(_, v)| *v).collect();
                expect(&sp, "special", &mut out);
            }
        }
    }
    let coinv = coinvariant_lattice(act)?;
    let imgs: Vec<Vec<BigInt>> = classes.iter().map(|c| coinv.project_free_i64(d.root(c.representative))).collect();
    for i in 0..imgs.len() {
        for j in i + 1..imgs.len() {
            if proportional_big(&imgs[i], &imgs[j]) {
                out.push(format!("classes {i} and {j} have proportional images"));
            }
        }
    }
    let data = folded_root_data(d, act)?;
    for f in &data {
        if let Some(i) = (0..f.datum.num_roots()).find(|&i| f.datum.pairing(i, i) != 2) {
            out.push(format!("{}: folded root {i} pairs with its coroot to {}", f.variant.name(), f.datum.pairing(i, i)));
        }
    }
    let wa = fixed_weyl(d, act, weyl_limit)?.order();
    for f in &data[..2] {
        let w = weyl_group(&f.datum, weyl_limit)?.order();
        if w != wa {
            out.push(format!("{}: Weyl group order {w} differs from |W^A| = {wa}", f.variant.name()));
        }
    }
    if !isogeny_injectivity_check(d, act)? {
        out.push("coinvariants of the root lattice do not inject".into());
    }
    let nr = &data[2];
    let mut hit = vec![false; nr.datum.num_roots()];
    for i in 0..nr.datum.num_roots() {
        if nr.role[i] != FoldedRole::Multipliable {
            continue;
        }
        let twice: Vec<i64> = nr.datum.root(i).iter().map(|x| 2 * x).collect();
        match nr.datum.find(&twice) {
            Some(j) if nr.role[j] == FoldedRole::Divisible && nr.class_of_root[j] == nr.class_of_root[i] && !hit[j] => hit[j] = true,
            _ => out.push(format!("NonReduced: multipliable root {i} has no matching divisible root")),
        }
    }
    if let Some(j) = (0..hit.len()).find(|&j| nr.role[j] == FoldedRole::Divisible && !hit[j]) {
        out.push(format!("NonReduced: divisible root {j} is not the double of a multipliable root"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::validate;
    use crate::presets;

    fn setup(name: &str) -> (RootDatum, PinnedAction) {
        let p = presets::by_name(name).unwrap();
        let act = validate(&p.datum, &p.generators).unwrap();
        (p.datum, act)
    }

    #[test]
    fn a3_flip_classes() {
        let (d, act) = setup("A3-sc-flip");
        let cl = equivalence_classes(&d, &act).unwrap();
        let members: Vec<Vec<Vec<i64>>> =
            cl.iter().map(|c| c.members.iter().map(|&m| d.coefficients(m).to_vec()).collect()).collect();
        assert_eq!(
            members,
            vec![
                vec![vec![1, 0, 0], vec![0, 0, 1]],
                vec![vec![0, 1, 0]],
                vec![vec![1, 1, 0], vec![0, 1, 1]],
                vec![vec![1, 1, 1]],
            ]
        );
        assert!(cl.iter().all(|c| c.class_type == ClassType::TypeI));
    }

    #[test]
    fn nonreduced_input_rejected() {
        let (d, act) = setup("A2-sc-flip");
        let nr = folded_root_datum(&d, &act, Variant::NonReduced).unwrap();
        let triv = PinnedAction::trivial(&nr.datum);
        assert!(matches!(equivalence_classes(&nr.datum, &triv), Err(Error::Domain(_))));
    }

    #[test]
    fn parabolic_errors_and_cases() {
        let (d, act) = setup("A4-sc-flip");
        assert!(parabolic_correspondence(&d, &act, &[0]).is_err());
        assert!(parabolic_correspondence(&d, &act, &[4]).is_err());
        let p = parabolic_correspondence(&d, &act, &[0, 3]).unwrap();
        assert_eq!(p.folded_subset, vec![0]);
        let borel = parabolic_correspondence(&d, &act, &[]).unwrap();
        assert_eq!(borel.generators.len(), 2);
        let full = parabolic_correspondence(&d, &act, &[0, 1, 2, 3]).unwrap();
        assert_eq!(full.folded_subset, vec![0, 1]);
        for g in &full.generators {
            let n: Vec<BigInt> = g.iter().map(|x| -x).collect();
            assert!(full.generators.contains(&n));
        }
    }
}
