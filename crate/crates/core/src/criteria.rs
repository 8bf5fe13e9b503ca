//! Flatness, connectedness, smoothness and per-field fiber data of the fixed points.

use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::One;

use crate::action::PinnedAction;
use crate::error::{Error, Result};
use crate::folding::{coinvariant_lattice, equivalence_classes, has_active_a2n, Variant};
use crate::intlat::{is_prime, FinAbGroup};
use crate::rootdata::RootDatum;

/// The positive residual characteristics of the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    /// Every prime occurs, as over the integers.
    AllPrimes,
    /// Exactly these primes occur. The empty set models a base over the rationals.
    ExplicitSet(Vec<u64>),
}

impl BaseSpec {
    /// Validated explicit set: distinct primes, stored sorted.
    pub fn explicit(primes: &[u64]) -> Result<Self> {
        let set: BTreeSet<u64> = primes.iter().copied().collect();
        if set.len() != primes.len() {
            return Err(Error::Domain("residual primes must be distinct".into()));
        }
        if let Some(p) = set.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::Domain(format!("{p} is not a prime")));
        }
        Ok(BaseSpec::ExplicitSet(set.into_iter().collect()))
    }

    pub fn contains(&self, p: u64) -> bool {
        match self {
            BaseSpec::AllPrimes => true,
            BaseSpec::ExplicitSet(s) => s.contains(&p),
        }
    }

    /// True if `n` is coprime to every residual characteristic.
    fn coprime_to_all(&self, n: &BigInt) -> bool {
        match self {
            BaseSpec::AllPrimes => n.is_one(),
            BaseSpec::ExplicitSet(s) => s.iter().all(|&p| !n.is_multiple_of(&BigInt::from(p))),
        }
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpec::AllPrimes => f.write_str("all primes"),
            BaseSpec::ExplicitSet(s) => {
                let v: Vec<String> = s.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", v.join(", "))
            }
        }
    }
}

/// A boolean verdict with the criterion clause that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub value: bool,
    pub reason: String,
}

impl Decision {
    fn new(value: bool, reason: impl Into<String>) -> Self {
        Decision { value, reason: reason.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriteriaReport {
    pub flat: Decision,
    pub geometrically_connected: Decision,
    pub smooth: Decision,
    /// Sufficient condition for quasi-reductivity over a mixed characteristic DVR.
    pub quasi_reductive_over_mixed_char_dvr: Decision,
    /// The same verdict for each explicit residual prime.
    pub quasi_reductive_by_prime: Vec<(u64, bool)>,
    pub coinvariants: FinAbGroup,
    pub torsion: FinAbGroup,
    pub has_active_a2n: bool,
}

/// Decides the fixed-point criteria over a base with the given residual characteristics.
pub fn decide(d: &RootDatum, act: &PinnedAction, base: &BaseSpec) -> Result<CriteriaReport> {
    let coinvariants = coinvariant_lattice(act)?.group;
    let torsion = coinvariants.torsion();
    let order = torsion.torsion_order();
    let active = has_active_a2n(d, act)?;

    let flat = Decision::new(true, "flatness: the fixed points are always flat");

    let geometrically_connected = if torsion.is_torsion_free() {
        Decision::new(true, "connectedness: M_A is torsion-free")
    } else {
        match base {
            BaseSpec::ExplicitSet(s) if s.len() == 1 && torsion.torsion_is_l_group(s[0]) => Decision::new(
                true,
                format!("connectedness: single residual characteristic {} and the torsion of M_A is a {}-group", s[0], s[0]),
            ),
            BaseSpec::ExplicitSet(s) if s.len() == 1 => Decision::new(
                false,
                format!("connectedness: torsion of M_A ({torsion}) is not a {}-group", s[0]),
            ),
            BaseSpec::ExplicitSet(s) if s.is_empty() => Decision::new(
                false,
                format!("connectedness: no residual characteristic and M_A has torsion {torsion}"),
            ),
            _ => Decision::new(
                false,
                format!("connectedness: M_A has torsion {torsion} and the base has more than one residual characteristic"),
            ),
        }
    };

    let torsion_ok = base.coprime_to_all(&order);
    let a2n_ok = !(active && base.contains(2));
    let smooth = match (torsion_ok, a2n_ok) {
        (true, true) if active => {
            Decision::new(true, "smoothness: torsion order coprime to residual characteristics and 2 is invertible")
        }
        (true, true) => Decision::new(true, "smoothness: torsion order coprime to residual characteristics"),
        (false, _) => Decision::new(
            false,
            format!("smoothness: torsion order {order} is not coprime to the residual characteristics {base}"),
        ),
        (true, false) => Decision::new(
            false,
            "smoothness: an A_2n component has a nontrivially acting stabilizer and 2 is a residual characteristic",
        ),
    };

    let qr = torsion.is_torsion_free();
    let quasi_reductive_over_mixed_char_dvr = Decision::new(
        qr,
        if qr {
            "quasi-reductivity: M_A is torsion-free"
        } else {
            "quasi-reductivity: not guaranteed, M_A has torsion"
        },
    );
    let quasi_reductive_by_prime = match base {
        BaseSpec::ExplicitSet(s) => s.iter().map(|&p| (p, qr)).collect(),
        BaseSpec::AllPrimes => vec![],
    };

    Ok(CriteriaReport {
        flat,
        geometrically_connected,
        smooth,
        quasi_reductive_over_mixed_char_dvr,
        quasi_reductive_by_prime,
        coinvariants,
        torsion,
        has_active_a2n: active,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberReport {
    pub char_p: u64,
    pub dimension: usize,
    pub reduced: bool,
    pub variant: Variant,
    pub component_group: FinAbGroup,
}

/// Fiber of the fixed points over a field of characteristic `char_p` (0 allowed).
pub fn fiber_report(d: &RootDatum, act: &PinnedAction, char_p: u64) -> Result<FiberReport> {
    if char_p != 0 && !is_prime(char_p) {
        return Err(Error::Domain(format!("characteristic {char_p} is neither 0 nor a prime")));
    }
    let classes = equivalence_classes(d, act)?;
    let base = if char_p == 0 { BaseSpec::ExplicitSet(vec![]) } else { BaseSpec::ExplicitSet(vec![char_p]) };
    let report = decide(d, act, &base)?;
    let component_group =
        if char_p == 0 { report.torsion.clone() } else { report.torsion.without_prime(char_p) };
    Ok(FiberReport {
        char_p,
        dimension: report.coinvariants.free_rank + 2 * classes.len(),
        reduced: report.smooth.value,
        variant: if char_p == 2 { Variant::R2 } else { Variant::R1 },
        component_group,
    })
}
