//! Cartan types: Bourbaki Gram data, symmetrizers and type recognition.

use std::fmt;
use std::str::FromStr;

use num::integer::Integer;
use num::rational::Ratio;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    /// Nonreduced type; only ever produced by recognition of folded data.
    BC,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

/// A list of irreducible components, each a family with a rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub components: Vec<(Family, usize)>,
}

impl CartanType {
    /// Validates and normalizes the component list (`D3` becomes `A3`).
    pub fn new(components: Vec<(Family, usize)>) -> Result<Self> {
        let mut out = Vec::with_capacity(components.len());
        for (fam, n) in components {
            let ok = match fam {
                Family::A => n >= 1,
                Family::B | Family::C | Family::BC => n >= 2 || (fam == Family::BC && n >= 1),
                Family::D => n >= 3,
                Family::E => (6..=8).contains(&n),
                Family::F => n == 4,
                Family::G => n == 2,
            };
            if !ok {
                return Err(Error::Domain(format!("unsupported Cartan type {fam}{n}")));
            }
            out.push(if fam == Family::D && n == 3 { (Family::A, 3) } else { (fam, n) });
        }
        Ok(CartanType { components: out })
    }

    pub fn simple(fam: Family, n: usize) -> Result<Self> {
        Self::new(vec![(fam, n)])
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }

    /// Gram matrix of the simple roots (block diagonal over components).
    pub fn gram(&self) -> Result<Vec<Vec<i64>>> {
        if self.components.iter().any(|c| c.0 == Family::BC) {
            return Err(Error::Domain("nonreduced types have no preset".into()));
        }
        let n = self.rank();
        let mut g = vec![vec![0i64; n]; n];
        let mut off = 0;
        for &(fam, r) in &self.components {
            let block = gram_block(fam, r);
            for i in 0..r {
                for j in 0..r {
                    g[off + i][off + j] = block[i][j];
                }
            }
            off += r;
        }
        Ok(g)
    }

    /// Cartan matrix `a_ij = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i64>>> {
        Ok(cartan_from_gram(&self.gram()?))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("trivial");
        }
        let parts: Vec<String> = self.components.iter().map(|(fam, n)| format!("{fam}{n}")).collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut comps = Vec::new();
        for part in s.split('+').map(str::trim) {
            let split = part.find(|c: char| c.is_ascii_digit()).ok_or_else(|| bad_type(part))?;
            let (f, n) = part.split_at(split);
            let fam = match f.to_ascii_uppercase().as_str() {
                "A" => Family::A,
                "B" => Family::B,
                "C" => Family::C,
                "D" => Family::D,
                "E" => Family::E,
                "F" => Family::F,
                "G" => Family::G,
                _ => return Err(bad_type(part)),
            };
            let n: usize = n.parse().map_err(|_| bad_type(part))?;
            comps.push((fam, n));
        }
        CartanType::new(comps)
    }
}

fn bad_type(s: &str) -> Error {
    Error::Domain(format!("cannot parse Cartan type '{s}'"))
}

fn chain(g: &mut [Vec<i64>], i: usize, j: usize, v: i64) {
    g[i][j] = v;
    g[j][i] = v;
}

/// Bourbaki numbering, scaled so that all entries are integers.
fn gram_block(fam: Family, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let simply_laced_path = |g: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto {
            g[i][i] = 2;
            if i + 1 < upto {
                chain(g, i, i + 1, -1);
            }
        }
    };
    match fam {
        Family::A => simply_laced_path(&mut g, n),
        Family::B => {
            simply_laced_path(&mut g, n);
            g[n - 1][n - 1] = 1;
        }
        Family::C => {
            simply_laced_path(&mut g, n);
            g[n - 1][n - 1] = 4;
            chain(&mut g, n - 2, n - 1, -2);
        }
        Family::D => {
            simply_laced_path(&mut g, n - 1);
            g[n - 1][n - 1] = 2;
            chain(&mut g, n - 3, n - 1, -1);
        }
        Family::E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4
            for i in 0..n {
                g[i][i] = 2;
            }
            chain(&mut g, 0, 2, -1);
            chain(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                chain(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            chain(&mut g, 0, 1, -2);
            chain(&mut g, 1, 2, -2);
            chain(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            chain(&mut g, 0, 1, -3);
        }
        Family::BC => unreachable!("no Gram data for nonreduced types"),
    }
    g
}

pub fn cartan_from_gram(g: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = g.len();
    (0..n).map(|i| (0..n).map(|j| 2 * g[i][j] / g[j][j]).collect()).collect()
}

/// Positive integers `d_j` with `a_ij d_j = a_ji d_i`, minimal on each component.
/// `(alpha_j, alpha_j) = 2 d_j` then defines an invariant form `B_ij = a_ij d_j`.
pub fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                if cartan[j][i] == 0 {
                    return Err(Error::InvalidDatum("Cartan matrix is not symmetrizable".into()));
                }
                let dj = d[i].unwrap() * Ratio::new(cartan[j][i], cartan[i][j]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        comp.push(j);
                        stack.push(j);
                    }
                    Some(old) if old != dj => {
                        return Err(Error::InvalidDatum("Cartan matrix is not symmetrizable".into()))
                    }
                    _ => {}
                }
            }
        }
        let l = comp.iter().fold(1i64, |acc, &j| acc.lcm(d[j].unwrap().denom()));
        let ints: Vec<i64> = comp.iter().map(|&j| (d[j].unwrap() * l).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&j, &v) in comp.iter().zip(&ints) {
            d[j] = Some(Ratio::from_integer(v / g));
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

/// Connected components of the Dynkin graph, each sorted, ordered by least node.
pub fn diagram_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (cartan[i][j] != 0 || cartan[j][i] != 0) {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Recognizes the type of one connected component given by node indices.
///
/// In rank 2 with a double bond the numbering decides the name: a long first
/// node reads as `B2`, a short one as `C2`.
pub fn recognize_component(cartan: &[Vec<i64>], nodes: &[usize]) -> Result<(Family, usize)> {
    let n = nodes.len();
    let sub: Vec<Vec<i64>> = nodes.iter().map(|&i| nodes.iter().map(|&j| cartan[i][j]).collect()).collect();
    let not_finite = || Error::InvalidDatum(format!("Cartan matrix {sub:?} is not of finite type"));
    if n == 1 {
        return Ok((Family::A, 1));
    }
    let d = symmetrizer(&sub)?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let m = sub[i][j] * sub[j][i];
            if m != 0 {
                edges.push((i, j, m));
            }
        }
    }
    if edges.len() != n - 1 {
        return Err(not_finite());
    }
    let deg = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let max_bond = edges.iter().map(|e| e.2).max().unwrap_or(0);
    match max_bond {
        3 if n == 2 => Ok((Family::G, 2)),
        2 => {
            if edges.iter().filter(|e| e.2 == 2).count() != 1 || (0..n).any(|v| deg(v) > 2) {
                return Err(not_finite());
            }
            let &(i, j, _) = edges.iter().find(|e| e.2 == 2).unwrap();
            if n == 2 {
                return Ok((if d[0] > d[1] { Family::B } else { Family::C }, 2));
            }
            let (leaf, other) = match (deg(i), deg(j)) {
                (1, _) => (i, j),
                (_, 1) => (j, i),
                _ if n == 4 => return Ok((Family::F, 4)),
                _ => return Err(not_finite()),
            };
            Ok((if d[leaf] < d[other] { Family::B } else { Family::C }, n))
        }
        1 => {
            let branch: Vec<usize> = (0..n).filter(|&v| deg(v) >= 3).collect();
            if branch.is_empty() {
                return Ok((Family::A, n));
            }
            if branch.len() > 1 || deg(branch[0]) != 3 {
                return Err(not_finite());
            }
            let c = branch[0];
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|e| if e.0 == c { Some(e.1) } else if e.1 == c { Some(e.0) } else { None })
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (c, start, 1);
                    loop {
                        let next = edges.iter().find_map(|e| {
                            let o = if e.0 == cur { e.1 } else if e.1 == cur { e.0 } else { return None };
                            (o != prev).then_some(o)
                        });
                        match next {
                            Some(nx) => {
                                prev = cur;
                                cur = nx;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, k) => Ok((Family::D, k + 3)),
                (1, 2, 2) => Ok((Family::E, 6)),
                (1, 2, 3) => Ok((Family::E, 7)),
                (1, 2, 4) => Ok((Family::E, 8)),
                _ => Err(not_finite()),
            }
        }
        _ => Err(not_finite()),
    }
}
