//! Named data and actions: the shipped catalog plus `<type>-<sc|ad>-<action>` names.

use crate::error::{Error, Result};
use crate::intlat::IntMatrix;
use crate::rootdata::{build_preset, CartanType, Family, Isogeny, RootDatum};

/// Catalog shipped with the tool. Spans both class types, products, torsion,
/// and image groups of order 2, 3 and 6.
pub const CATALOG: &[&str] = &[
    "A2-sc-flip",
    "A4-sc-flip",
    "A3-sc-flip",
    "A5-sc-flip",
    "D4-sc-triality",
    "D4-sc-cyclic3",
    "A2+A2-sc-swap",
    "A1-torus-inversion",
    "E6-sc-flip",
];

#[derive(Clone, Debug)]
pub struct Preset {
    pub name: String,
    pub datum: RootDatum,
    pub generators: Vec<IntMatrix>,
    /// `Some(n)` when the preset is `SL_{2n+1}` with the flip, which the
    /// matrix laboratory models explicitly.
    pub matrix_model: Option<usize>,
}

/// Named actions understood by [`named_action`].
pub const ACTION_NAMES: &[&str] = &["identity", "flip", "triality", "cyclic3", "swap", "factor-swap", "inversion"];

/// Looks up a catalog entry or any `<type>-<sc|ad>-<action>` combination.
pub fn by_name(name: &str) -> Result<Preset> {
    if name == "A1-torus-inversion" {
        return Ok(Preset {
            name: name.into(),
            datum: RootDatum::torus(1),
            generators: vec![IntMatrix::from_rows(&[[-1]])],
            matrix_model: None,
        });
    }
    let parts: Vec<&str> = name.rsplitn(3, '-').collect();
    let [action, iso, ty] = parts[..] else {
        return Err(Error::Domain(format!("preset name '{name}' is not of the form <type>-<sc|ad>-<action>")));
    };
    let ty: CartanType = ty.parse()?;
    let isogeny = match iso {
        "sc" => Isogeny::SimplyConnected,
        "ad" | "adj" | "adjoint" => Isogeny::Adjoint,
        _ => return Err(Error::Domain(format!("unknown isogeny '{iso}' (use sc or ad)"))),
    };
    let datum = build_preset(&ty, isogeny)?;
    let generators = named_action(&ty, action)?;
    let matrix_model = match (&ty.components[..], isogeny, action) {
        ([(Family::A, n)], Isogeny::SimplyConnected, "flip") if n % 2 == 0 => Some(n / 2),
        _ => None,
    };
    Ok(Preset { name: name.into(), datum, generators, matrix_model })
}

/// Permutation matrix sending `e_i` to `e_{sigma(i)}`. On the weight lattice
/// and on the root lattice alike this realizes the diagram automorphism `sigma`.
pub fn perm_matrix(sigma: &[usize]) -> IntMatrix {
    let n = sigma.len();
    let mut rows = vec![vec![0i64; n]; n];
    for (i, &s) in sigma.iter().enumerate() {
        rows[s][i] = 1;
    }
    IntMatrix::from_rows(&rows)
}

fn component_flip(fam: Family, n: usize) -> Option<Vec<usize>> {
    let mut s: Vec<usize> = (0..n).collect();
    match (fam, n) {
        (Family::A, n) if n >= 2 => s.reverse(),
        (Family::D, n) => s.swap(n - 2, n - 1),
        (Family::E, 6) => {
            s.swap(0, 5);
            s.swap(2, 4);
        }
        _ => return None,
    }
    Some(s)
}

/// Generators (as lattice matrices) of a named diagram action on a preset type.
pub fn named_action(ty: &CartanType, action: &str) -> Result<Vec<IntMatrix>> {
    let rank = ty.rank();
    let unsupported = || Error::Domain(format!("action '{action}' is not available on type {ty}"));
    let d4 = ty.components == [(Family::D, 4)];
    let perms: Vec<Vec<usize>> = match action {
        "identity" | "trivial" => vec![],
        "flip" => {
            let mut s = Vec::with_capacity(rank);
            let mut any = false;
            for &(fam, n) in &ty.components {
                let off = s.len();
                match component_flip(fam, n) {
                    Some(f) => {
                        any = true;
                        s.extend(f.into_iter().map(|x| x + off));
                    }
                    None => s.extend(off..off + n),
                }
            }
            if !any {
                return Err(unsupported());
            }
            vec![s]
        }
        // Bourbaki numbering: alpha_2 is the branch node of D4
        "triality" if d4 => vec![vec![2, 1, 3, 0], vec![0, 1, 3, 2]],
        "cyclic3" if d4 => vec![vec![2, 1, 3, 0]],
        "swap" | "factor-swap" => {
            let [a, b] = ty.components[..] else { return Err(unsupported()) };
            if a != b {
                return Err(unsupported());
            }
            let n = a.1;
            vec![(0..2 * n).map(|i| (i + n) % (2 * n)).collect()]
        }
        "inversion" => {
            let rows: Vec<Vec<i64>> = (0..rank).map(|i| (0..rank).map(|j| -((i == j) as i64)).collect()).collect();
            return Ok(vec![IntMatrix::from_rows(&rows)]);
        }
        _ => return Err(unsupported()),
    };
    Ok(perms.iter().map(|s| perm_matrix(s)).collect())
}
