//! Job files: `[datum]`, `[action]`, `[base]` and `[run]` sections in TOML.

use serde::Deserialize;

use foldlab_core::action::{validate_with_limit, PinnedAction, DEFAULT_ACTION_LIMIT};
use foldlab_core::criteria::BaseSpec;
use foldlab_core::intlat::IntMatrix;
use foldlab_core::presets::{by_name, named_action};
use foldlab_core::rootdata::{build_preset, CartanType, Isogeny, RootDatum};

use crate::CliError;

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub datum: DatumSpec,
    #[serde(default)]
    pub action: ActionSpec,
    #[serde(default)]
    pub base: BaseConfig,
    #[serde(default)]
    pub run: RunConfig,
}

/// One of: a preset name, a Cartan type with isogeny, or explicit matrices.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumSpec {
    pub preset: Option<String>,
    #[serde(rename = "type")]
    pub cartan_type: Option<String>,
    pub isogeny: Option<String>,
    pub rank: Option<usize>,
    pub roots: Option<Vec<Vec<i64>>>,
    pub coroots: Option<Vec<Vec<i64>>>,
    /// Indices into `roots` of the simple roots.
    pub basis: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    /// Named action such as `flip`, `triality`, `cyclic3`, `factor-swap`.
    pub kind: Option<String>,
    /// Matrices as lists of integer rows, acting on the character lattice.
    pub generators: Option<Vec<Vec<Vec<i64>>>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ResidualPrimes {
    Keyword(String),
    List(Vec<u64>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseConfig {
    pub residual_primes: ResidualPrimes,
}

impl Default for BaseConfig {
    fn default() -> Self {
        BaseConfig { residual_primes: ResidualPrimes::Keyword("all".into()) }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub analyses: Vec<String>,
    pub q: Option<u64>,
    pub p: Option<u64>,
}

pub fn parse(text: &str) -> Result<JobConfig, CliError> {
    toml::from_str(text).map_err(|e| CliError::parse(format!("config: {e}")))
}

/// Datum, action and the name of a matrix model if the job is an `SL_{2n+1}` flip.
pub struct Resolved {
    pub datum: RootDatum,
    pub action: PinnedAction,
    pub matrix_model: Option<usize>,
    pub label: String,
}

fn matrices(gens: &[Vec<Vec<i64>>]) -> Result<Vec<IntMatrix>, CliError> {
    gens.iter()
        .enumerate()
        .map(|(k, g)| {
            let cols = g.first().map_or(0, Vec::len);
            if g.is_empty() || g.iter().any(|r| r.len() != cols) {
                return Err(CliError::parse(format!("generator {k} is not a rectangular matrix")));
            }
            Ok(IntMatrix::from_rows(g))
        })
        .collect()
}

impl JobConfig {
    pub fn base(&self) -> Result<BaseSpec, CliError> {
        match &self.base.residual_primes {
            ResidualPrimes::Keyword(k) if k == "all" => Ok(BaseSpec::AllPrimes),
            ResidualPrimes::Keyword(k) => {
                Err(CliError::parse(format!("residual_primes must be \"all\" or a list of primes, got \"{k}\"")))
            }
            ResidualPrimes::List(ps) => Ok(BaseSpec::explicit(ps)?),
        }
    }

    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let d = &self.datum;
        let explicit = d.rank.is_some() || d.roots.is_some() || d.coroots.is_some() || d.basis.is_some();
        let chosen = [d.preset.is_some(), d.cartan_type.is_some(), explicit].iter().filter(|&&x| x).count();
        if chosen != 1 {
            return Err(CliError::parse(
                "[datum] needs exactly one of: preset, type (with isogeny), or rank/roots/coroots/basis",
            ));
        }
        let kind = self.action.kind.as_deref();
        let custom = self.action.generators.as_deref().map(matrices).transpose()?;
        if kind.is_some() && custom.is_some() {
            return Err(CliError::parse("[action] takes either kind or generators, not both"));
        }
        let (datum, gens, mut matrix_model, label) = if let Some(name) = &d.preset {
            let p = by_name(name)?;
            let ty = p.datum.cartan_type()?;
            let gens = match (kind, custom) {
                (Some(k), _) => named_action(&ty, k)?,
                (None, Some(g)) => g,
                (None, None) => p.generators,
            };
            let overridden = self.action.kind.is_some() || self.action.generators.is_some();
            let model = if overridden { None } else { p.matrix_model };
            (p.datum, gens, model, name.clone())
        } else if let Some(t) = &d.cartan_type {
            let ty: CartanType = t.parse()?;
            let iso = match d.isogeny.as_deref() {
                Some("sc") | Some("simply-connected") => Isogeny::SimplyConnected,
                Some("ad") | Some("adjoint") => Isogeny::Adjoint,
                Some(other) => return Err(CliError::parse(format!("unknown isogeny \"{other}\" (use sc or ad)"))),
                None => return Err(CliError::parse("[datum] type needs an isogeny (sc or ad)")),
            };
            let datum = build_preset(&ty, iso)?;
            let gens = match (kind, custom) {
                (Some(k), _) => named_action(&ty, k)?,
                (None, Some(g)) => g,
                (None, None) => vec![],
            };
            let label = format!("{ty}-{}-{}", if iso == Isogeny::SimplyConnected { "sc" } else { "ad" }, kind.unwrap_or("custom"));
            (datum, gens, None, label)
        } else {
            let (Some(rank), Some(roots), Some(coroots), Some(basis)) = (d.rank, &d.roots, &d.coroots, &d.basis) else {
                return Err(CliError::parse("explicit [datum] needs rank, roots, coroots and basis"));
            };
            let datum = RootDatum::new(rank, roots.clone(), coroots.clone(), basis.clone(), true)?;
            let gens = match (kind, custom) {
                (Some("identity" | "trivial"), _) | (None, None) => vec![],
                (Some("inversion"), _) => named_action(&datum.cartan_type()?, "inversion")?,
                (Some(k), _) => {
                    return Err(CliError::parse(format!("named action \"{k}\" needs a preset datum; give generators")))
                }
                (None, Some(g)) => g,
            };
            (datum, gens, None, "explicit".into())
        };
        let action = validate_with_limit(&datum, &gens, DEFAULT_ACTION_LIMIT)?;
        if action.is_trivial() {
            matrix_model = None;
        }
        Ok(Resolved { datum, action, matrix_model, label })
    }
}
