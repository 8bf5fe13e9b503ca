//! The analyses and their serializable report.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use foldlab_core::action::PinnedAction;
use foldlab_core::chevalley::{base_constants, check_equivariance, equivariant_signs, jacobi_violations, magnitude_violations};
use foldlab_core::criteria::{decide, fiber_report, Decision};
use foldlab_core::folding::{coinvariant_lattice, equivalence_classes, fixed_weyl, folded_root_data, ClassType};
use foldlab_core::matrixlab::{bruhat_predicted_count, count_fixed, tangent_dim, CountMethod, CountOptions, DEFAULT_COUNT_BUDGET, DEFAULT_ENUM_LIMIT};
use foldlab_core::rootdata::weyl::{weyl_group, DEFAULT_WEYL_LIMIT};
use foldlab_core::rootdata::RootDatum;

use crate::config::{JobConfig, Resolved};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Analysis {
    Fold,
    Criteria,
    Report,
    Chevalley,
    Count,
    Tangent,
}

impl Analysis {
    pub const ALL: [Analysis; 6] =
        [Analysis::Fold, Analysis::Criteria, Analysis::Report, Analysis::Chevalley, Analysis::Count, Analysis::Tangent];
}

impl FromStr for Analysis {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "fold" => Analysis::Fold,
            "criteria" => Analysis::Criteria,
            "report" => Analysis::Report,
            "chevalley" => Analysis::Chevalley,
            "count" => Analysis::Count,
            "tangent" => Analysis::Tangent,
            _ => return Err(CliError::parse(format!("unknown analysis \"{s}\""))),
        })
    }
}

/// Command-line overrides of the job file.
#[derive(Clone, Debug)]
pub struct Options {
    pub analyses: Vec<String>,
    pub q: Option<u64>,
    pub p: Option<u64>,
    pub weyl_limit: usize,
    pub count_budget: u128,
}

impl Default for Options {
    fn default() -> Self {
        Options { analyses: vec![], q: None, p: None, weyl_limit: DEFAULT_WEYL_LIMIT, count_budget: DEFAULT_COUNT_BUDGET }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DatumSummary {
    pub label: String,
    pub cartan_type: String,
    pub rank: usize,
    pub num_roots: usize,
    pub action_order: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassOut {
    #[serde(rename = "type")]
    pub class_type: String,
    /// Members in simple-root coordinates.
    pub members: Vec<Vec<i64>>,
    pub special: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VariantOut {
    pub variant: String,
    pub cartan_type: String,
    pub rank: usize,
    pub num_roots: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub weyl_order: Option<usize>,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FoldedOut {
    pub coinvariants: String,
    pub fixed_weyl_order: usize,
    pub variants: Vec<VariantOut>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DecisionOut {
    pub value: bool,
    pub reason: String,
}

impl From<&Decision> for DecisionOut {
    fn from(d: &Decision) -> Self {
        DecisionOut { value: d.value, reason: d.reason.clone() }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PrimeVerdict {
    pub prime: u64,
    pub value: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CriteriaOut {
    pub base: String,
    pub flat: DecisionOut,
    pub geometrically_connected: DecisionOut,
    pub smooth: DecisionOut,
    pub quasi_reductive_over_mixed_char_dvr: DecisionOut,
    pub quasi_reductive_by_prime: Vec<PrimeVerdict>,
    pub coinvariants: String,
    pub torsion: String,
    pub has_active_a2n: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FiberOut {
    pub characteristic: u64,
    pub dimension: usize,
    pub reduced: bool,
    pub variant: String,
    pub component_group: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OrbitOut {
    pub roots: Vec<Vec<i64>>,
    pub special: bool,
    pub satisfied: bool,
    pub discrepancies: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ChevalleyOut {
    pub magnitudes_ok: bool,
    pub jacobi_ok: bool,
    pub nonspecial_equivariant: bool,
    pub special_discrepancies_are_signs: bool,
    pub orbits: Vec<OrbitOut>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CountsOut {
    pub q: u64,
    pub predicted: u128,
    /// Absent unless the job is an `SL_{2n+1}` flip model.
    pub brute: Option<u128>,
    pub method: Option<String>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TangentOut {
    pub p: u64,
    pub fiber_dimension: usize,
    pub reduced: bool,
    pub tangent_dim: Option<usize>,
    /// Tangent dimension equals the fiber dimension exactly when the fiber is reduced.
    pub agrees: Option<bool>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub datum: DatumSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub folded: Option<FoldedOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub criteria: Option<CriteriaOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibers: Option<Vec<FiberOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chevalley: Option<ChevalleyOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<CountsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tangent: Option<Vec<TangentOut>>,
}

impl Report {
    /// Cross-checks that failed: count mismatch, tangent disagreement, or a
    /// Chevalley system that is not equivariant.
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(c) = &self.counts {
            if c.matches == Some(false) {
                out.push(format!("brute count {:?} differs from predicted {}", c.brute, c.predicted));
            }
        }
        for t in self.tangent.iter().flatten() {
            if t.agrees == Some(false) {
                out.push(format!("tangent dimension at p = {} disagrees with reducedness", t.p));
            }
        }
        if let Some(c) = &self.chevalley {
            if !(c.magnitudes_ok && c.jacobi_ok && c.nonspecial_equivariant && c.special_discrepancies_are_signs) {
                out.push("Chevalley system checks failed".into());
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let d = &self.datum;
        let _ = writeln!(s, "datum: {} (type {}, rank {}, {} roots), |A| = {}", d.label, d.cartan_type, d.rank, d.num_roots, d.action_order);
        if let Some(cl) = &self.classes {
            let _ = writeln!(s, "classes: {}", cl.len());
            for (k, c) in cl.iter().enumerate() {
                let _ = write!(s, "  [{k}] {} members {:?}", c.class_type, c.members);
                if !c.special.is_empty() {
                    let _ = write!(s, " special {:?}", c.special);
                }
                s.push('\n');
            }
        }
        if let Some(f) = &self.folded {
            let _ = writeln!(s, "folded: M_A = {}, |W^A| = {}", f.coinvariants, f.fixed_weyl_order);
            for v in &f.variants {
                let w = v.weyl_order.map_or("-".to_string(), |w| w.to_string());
                let _ = writeln!(s, "  {}: type {}, {} roots, Cartan {:?}, |W| = {w}", v.variant, v.cartan_type, v.num_roots, v.cartan_matrix);
            }
        }
        if let Some(c) = &self.criteria {
            let _ = writeln!(s, "criteria over {} (M_A = {}, torsion {}):", c.base, c.coinvariants, c.torsion);
            for (name, dd) in [
                ("flat", &c.flat),
                ("geometrically connected", &c.geometrically_connected),
                ("smooth", &c.smooth),
                ("quasi-reductive (mixed char DVR)", &c.quasi_reductive_over_mixed_char_dvr),
            ] {
                let _ = writeln!(s, "  {name}: {} [{}]", dd.value, dd.reason);
            }
        }
        for f in self.fibers.iter().flatten() {
            let _ = writeln!(
                s,
                "fiber p = {}: dim {}, reduced {}, variant {}, components {}",
                f.characteristic, f.dimension, f.reduced, f.variant, f.component_group
            );
        }
        if let Some(c) = &self.chevalley {
            let _ = writeln!(
                s,
                "chevalley: magnitudes {}, Jacobi {}, nonspecial equivariant {}, special discrepancies +-1 {}",
                c.magnitudes_ok, c.jacobi_ok, c.nonspecial_equivariant, c.special_discrepancies_are_signs
            );
            for o in c.orbits.iter().filter(|o| o.special) {
                let _ = writeln!(s, "  special orbit {:?}: coefficients {:?}", o.roots, o.discrepancies);
            }
        }
        if let Some(c) = &self.counts {
            let brute = c.brute.map_or("-".to_string(), |b| b.to_string());
            let m = c.matches.map_or("-".to_string(), |m| m.to_string());
            let _ = writeln!(s, "counts q = {}: brute {brute}, predicted {}, match {m}", c.q, c.predicted);
        }
        for t in self.tangent.iter().flatten() {
            let td = t.tangent_dim.map_or("-".to_string(), |x| x.to_string());
            let _ = writeln!(s, "tangent p = {}: dim {td}, fiber dim {}, reduced {}", t.p, t.fiber_dimension, t.reduced);
        }
        s
    }
}

fn coords(d: &RootDatum, roots: &[usize]) -> Vec<Vec<i64>> {
    roots.iter().map(|&r| d.coefficients(r).to_vec()).collect()
}

fn type_name(d: &RootDatum) -> String {
    d.cartan_type().map_or_else(|_| "?".into(), |t| t.to_string())
}

fn fold(d: &RootDatum, act: &PinnedAction, weyl_limit: usize) -> Result<(Vec<ClassOut>, FoldedOut), CliError> {
    let classes = equivalence_classes(d, act)?
        .iter()
        .map(|c| ClassOut {
            class_type: match c.class_type {
                ClassType::TypeI => "TypeI".into(),
                ClassType::TypeII => "TypeII".into(),
            },
            members: coords(d, &c.members),
            special: coords(d, &c.special),
        })
        .collect();
    let variants = folded_root_data(d, act)?
        .iter()
        .map(|f| {
            let fd = &f.datum;
            Ok(VariantOut {
                variant: f.variant.name().into(),
                cartan_type: type_name(fd),
                rank: fd.rank(),
                num_roots: fd.num_roots(),
                cartan_matrix: fd.cartan_matrix(),
                weyl_order: Some(weyl_group(fd, weyl_limit)?.order()),
                simple_roots: fd.basis().iter().map(|&b| fd.root(b).to_vec()).collect(),
                simple_coroots: fd.basis().iter().map(|&b| fd.coroot(b).to_vec()).collect(),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let folded = FoldedOut {
        coinvariants: coinvariant_lattice(act)?.group.to_string(),
        fixed_weyl_order: fixed_weyl(d, act, weyl_limit)?.order(),
        variants,
    };
    Ok((classes, folded))
}

fn chevalley(d: &RootDatum, act: &PinnedAction) -> Result<ChevalleyOut, CliError> {
    let sc = equivariant_signs(d, &base_constants(d)?, act)?;
    let report = check_equivariance(d, &sc, act)?;
    Ok(ChevalleyOut {
        magnitudes_ok: magnitude_violations(d, &sc).is_empty(),
        jacobi_ok: jacobi_violations(d, &sc) == 0,
        nonspecial_equivariant: report.nonspecial_satisfied(),
        special_discrepancies_are_signs: report.special_discrepancies_are_signs(),
        orbits: report
            .orbits
            .iter()
            .map(|o| OrbitOut {
                roots: coords(d, &o.roots),
                special: o.special,
                satisfied: o.satisfied,
                discrepancies: o.discrepancies.clone(),
            })
            .collect(),
    })
}

fn fiber(d: &RootDatum, act: &PinnedAction, p: u64) -> Result<FiberOut, CliError> {
    let f = fiber_report(d, act, p)?;
    Ok(FiberOut {
        characteristic: p,
        dimension: f.dimension,
        reduced: f.reduced,
        variant: f.variant.name().into(),
        component_group: f.component_group.to_string(),
    })
}

/// Runs the analyses requested by the flags, else by the job file, else all.
/// Failed cross-checks are left in the report; see [`Report::mismatches`].
pub fn run(cfg: &JobConfig, opts: &Options) -> Result<Report, CliError> {
    let names = if opts.analyses.is_empty() { &cfg.run.analyses } else { &opts.analyses };
    let mut analyses: Vec<Analysis> = Vec::new();
    for n in names {
        if n == "all" {
            analyses.extend(Analysis::ALL);
        } else {
            analyses.push(n.parse()?);
        }
    }
    if analyses.is_empty() {
        analyses.extend(Analysis::ALL);
    }
    analyses.sort();
    analyses.dedup();
    let q = opts.q.or(cfg.run.q);
    let p = opts.p.or(cfg.run.p);
    let base = cfg.base()?;
    let Resolved { datum: d, action: act, matrix_model, label } = cfg.resolve()?;

    let mut report = Report {
        datum: DatumSummary {
            label,
            cartan_type: type_name(&d),
            rank: d.rank(),
            num_roots: d.num_roots(),
            action_order: act.order(),
        },
        classes: None,
        folded: None,
        criteria: None,
        fibers: None,
        chevalley: None,
        counts: None,
        tangent: None,
    };
    let primes = match p {
        Some(p) => vec![p],
        None => vec![0, 2, 3],
    };
    for a in analyses {
        match a {
            Analysis::Fold => {
                let (c, f) = fold(&d, &act, opts.weyl_limit)?;
                report.classes = Some(c);
                report.folded = Some(f);
            }
            Analysis::Criteria => {
                let r = decide(&d, &act, &base)?;
                report.criteria = Some(CriteriaOut {
                    base: base.to_string(),
                    flat: (&r.flat).into(),
                    geometrically_connected: (&r.geometrically_connected).into(),
                    smooth: (&r.smooth).into(),
                    quasi_reductive_over_mixed_char_dvr: (&r.quasi_reductive_over_mixed_char_dvr).into(),
                    quasi_reductive_by_prime: r
                        .quasi_reductive_by_prime
                        .iter()
                        .map(|&(prime, value)| PrimeVerdict { prime, value })
                        .collect(),
                    coinvariants: r.coinvariants.to_string(),
                    torsion: r.torsion.to_string(),
                    has_active_a2n: r.has_active_a2n,
                });
            }
            Analysis::Report => {
                report.fibers = Some(primes.iter().map(|&p| fiber(&d, &act, p)).collect::<Result<_, _>>()?);
            }
            Analysis::Chevalley => report.chevalley = Some(chevalley(&d, &act)?),
            Analysis::Count => {
                let Some(q) = q else {
                    if names.iter().any(|n| n == "count") {
                        return Err(CliError::parse("the count analysis needs q (--q or [run] q)"));
                    }
                    continue;
                };
                let predicted = bruhat_predicted_count(&d, &act, q, opts.weyl_limit)?;
                let brute = match matrix_model {
                    Some(n) => Some(count_fixed(n, q, CountOptions { budget: opts.count_budget, enum_limit: DEFAULT_ENUM_LIMIT })?),
                    None => None,
                };
                report.counts = Some(CountsOut {
                    q,
                    predicted,
                    brute: brute.map(|b| b.count),
                    method: brute.map(|b| match b.method {
                        CountMethod::Enumeration => "enumeration".into(),
                        CountMethod::Backtracking => "backtracking".into(),
                    }),
                    matches: brute.map(|b| b.count == predicted),
                });
            }
            Analysis::Tangent => {
                let mut out = Vec::new();
                for &p in primes.iter().filter(|&&p| p != 0) {
                    let f = fiber_report(&d, &act, p)?;
                    let t = matrix_model.map(|n| tangent_dim(n, p)).transpose()?;
                    out.push(TangentOut {
                        p,
                        fiber_dimension: f.dimension,
                        reduced: f.reduced,
                        tangent_dim: t,
                        agrees: t.map(|t| (t == f.dimension) == f.reduced),
                    });
                }
                report.tangent = Some(out);
            }
        }
    }
    Ok(report)
}
