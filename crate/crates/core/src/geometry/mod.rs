//! Exact rational polyhedral computation.
//!
//! Everything here is exact: coefficients are [`BigRational`]s, ray
//! enumeration runs on integer vectors, and no routine ever rounds.

mod dd;
mod linalg;
mod lp;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use dd::{cone_generators, dd_hull, dd_rays, dd_vertices, ConeGenerators, DEFAULT_DIM_LIMIT};
pub use linalg::{affine_rank, rank, rref};
pub(crate) use linalg::affinely_independent_subset;
pub use lp::{is_implied, lp_solve, LpResult, LpStatus, Sense};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q = BigInt::from_str(q).ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(BigInt::from_str(p).ok()?, q))
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Le,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
        }
    }
}

/// Which generator produced a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Nonneg,
    Node,
    Edge,
    BalancedBiclique,
    NonbalancedLifted,
    EfRaw,
    Projected,
    Other,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Nonneg => "nonneg",
            Family::Node => "node",
            Family::Edge => "edge",
            Family::BalancedBiclique => "balanced",
            Family::NonbalancedLifted => "lifted",
            Family::EfRaw => "ef-raw",
            Family::Projected => "projected",
            Family::Other => "other",
        }
    }
}

/// `coeffs · z (<= | =) rhs`, tagged with its family of origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearInequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub relation: Relation,
    pub family: Family,
    pub note: String,
}

/// Scale-free identity of a row: coprime integers, see [`LinearInequality::normalized`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowKey {
    pub coeffs: Vec<BigInt>,
    pub rhs: BigInt,
    pub relation: Relation,
}

impl LinearInequality {
    pub fn le(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        LinearInequality {
            coeffs,
            rhs,
            relation: Relation::Le,
            family: Family::Other,
            note: String::new(),
        }
    }

    pub fn eq(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        LinearInequality {
            relation: Relation::Eq,
            ..Self::le(coeffs, rhs)
        }
    }

    /// `-z_i <= 0` in a space of dimension `dim`.
    pub fn nonneg(dim: usize, i: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); dim];
        coeffs[i] = rat(-1);
        Self::le(coeffs, Rational::zero()).tagged(Family::Nonneg, "")
    }

    pub fn tagged(mut self, family: Family, note: impl Into<String>) -> Self {
        self.family = family;
        self.note = note.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn lhs(&self, z: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(z)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, x)| c * x)
            .sum()
    }

    /// `lhs(z) - rhs`; positive means violated for `<=` rows.
    pub fn slack_violation(&self, z: &[Rational]) -> Rational {
        self.lhs(z) - &self.rhs
    }

    pub fn satisfied_by(&self, z: &[Rational]) -> bool {
        let l = self.lhs(z);
        match self.relation {
            Relation::Le => l <= self.rhs,
            Relation::Eq => l == self.rhs,
        }
    }

    pub fn is_tight(&self, z: &[Rational]) -> bool {
        self.lhs(z) == self.rhs
    }

    /// Integer coprime coefficients obtained by positive scaling. Equalities
    /// additionally get a positive leading nonzero entry of `(coeffs, rhs)`.
    pub fn normalized(&self) -> Self {
        let key = self.key();
        LinearInequality {
            coeffs: key.coeffs.into_iter().map(Rational::from_integer).collect(),
            rhs: Rational::from_integer(key.rhs),
            relation: self.relation,
            family: self.family,
            note: self.note.clone(),
        }
    }

    pub fn key(&self) -> RowKey {
        let mut ints = integer_row(self.coeffs.iter().chain(std::iter::once(&self.rhs)));
        if self.relation == Relation::Eq {
            if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
                if first.is_negative() {
                    ints.iter_mut().for_each(|x| *x = -&*x);
                }
            }
        }
        let rhs = ints.pop().unwrap();
        RowKey {
            coeffs: ints,
            rhs,
            relation: self.relation,
        }
    }

    /// Text row: coefficients, relation, rhs.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.coeffs {
            s.push_str(&c.to_string());
            s.push(' ');
        }
        s.push_str(self.relation.symbol());
        s.push(' ');
        s.push_str(&self.rhs.to_string());
        s
    }
}

impl fmt::Display for LinearInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Scales a rational vector by a positive factor to coprime integers.
pub fn integer_row<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Vec<BigInt> {
    let xs: Vec<&Rational> = xs.into_iter().collect();
    let lcm = xs
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = xs
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    reduce_by_gcd(&mut ints);
    ints
}

pub(crate) fn reduce_by_gcd(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// H-representation over a named coordinate space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    pub space: Vec<String>,
    pub rows: Vec<LinearInequality>,
}

impl HPolytope {
    pub fn new(space: Vec<String>, rows: Vec<LinearInequality>) -> Result<Self> {
        let p = HPolytope { space, rows };
        p.check()?;
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.space.len()
    }

    fn check(&self) -> Result<()> {
        match self.rows.iter().find(|r| r.dim() != self.dim()) {
            Some(r) => Err(Error::Dimension {
                expected: self.dim(),
                actual: r.dim(),
            }),
            None => Ok(()),
        }
    }

    pub fn contains(&self, z: &[Rational]) -> bool {
        self.rows.iter().all(|r| r.satisfied_by(z))
    }

    /// Normalized, deduplicated row keys.
    pub fn key_set(&self) -> HashSet<RowKey> {
        self.rows.iter().map(LinearInequality::key).collect()
    }

    /// Rows normalized, deduplicated (first occurrence wins) and sorted by key.
    pub fn canonical(&self) -> HPolytope {
        let mut seen = HashSet::new();
        let mut rows: Vec<LinearInequality> = self
            .rows
            .iter()
            .filter(|r| seen.insert(r.key()))
            .map(LinearInequality::normalized)
            .collect();
        rows.sort_by_key(LinearInequality::key);
        HPolytope {
            space: self.space.clone(),
            rows,
        }
    }

    /// Text format: a `space` header, then one row per line with an optional
    /// trailing `c <family> <note>` comment.
    pub fn to_text(&self) -> String {
        let mut out = format!("space {} {}\n", self.dim(), self.space.join(" "));
        for r in &self.rows {
            out.push_str(&r.to_text());
            out.push_str("  c ");
            out.push_str(r.family.name());
            if !r.note.is_empty() {
                out.push(' ');
                out.push_str(&r.note);
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<HPolytope> {
        let perr = |line: usize, msg: String| Error::Parse { line, msg };
        let mut space: Option<Vec<String>> = None;
        let mut rows = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks[0] == "space" {
                if space.is_some() {
                    return Err(perr(lineno, "duplicate space header".into()));
                }
                let k: usize = toks
                    .get(1)
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| perr(lineno, "malformed space header".into()))?;
                if toks.len() != k + 2 {
                    return Err(perr(
                        lineno,
                        format!("space header declares {} names, found {}", k, toks.len() - 2),
                    ));
                }
                space = Some(toks[2..].iter().map(|s| s.to_string()).collect());
                continue;
            }
            let dim = space
                .as_ref()
                .ok_or_else(|| perr(lineno, "row before space header".into()))?
                .len();
            let (body, comment) = match toks.iter().position(|&t| t == "c") {
                Some(p) => (&toks[..p], &toks[p + 1..]),
                None => (&toks[..], &toks[toks.len()..]),
            };
            if body.len() != dim + 2 {
                return Err(perr(
                    lineno,
                    format!("expected {} coefficients, relation and rhs", dim),
                ));
            }
            let nums: Vec<Rational> = body[..dim]
                .iter()
                .chain(std::iter::once(&body[dim + 1]))
                .map(|t| parse_rational(t).ok_or_else(|| perr(lineno, format!("bad rational `{}`", t))))
                .collect::<Result<_>>()?;
            let mut coeffs = nums;
            let mut rhs = coeffs.pop().unwrap();
            let relation = match body[dim] {
                "<=" => Relation::Le,
                "=" | "==" => Relation::Eq,
                ">=" => {
                    coeffs.iter_mut().for_each(|c| *c = -&*c);
                    rhs = -rhs;
                    Relation::Le
                }
                other => return Err(perr(lineno, format!("bad relation `{}`", other))),
            };
            let family = comment
                .first()
                .map(|f| match *f {
                    "nonneg" => Family::Nonneg,
                    "node" => Family::Node,
                    "edge" => Family::Edge,
                    "balanced" => Family::BalancedBiclique,
                    "lifted" => Family::NonbalancedLifted,
                    "ef-raw" => Family::EfRaw,
                    "projected" => Family::Projected,
                    _ => Family::Other,
                })
                .unwrap_or(Family::Other);
            let note = comment.get(1..).map(|c| c.join(" ")).unwrap_or_default();
            rows.push(LinearInequality {
                coeffs,
                rhs,
                relation,
                family,
                note,
            });
        }
        let space = space.ok_or_else(|| perr(1, "missing space header".into()))?;
        HPolytope::new(space, rows)
    }
}

/// V-representation: vertices and rays over a named coordinate space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    pub space: Vec<String>,
    pub vertices: Vec<Vec<Rational>>,
    pub rays: Vec<Vec<Rational>>,
}

impl VPolytope {
    /// Deduplicates vertices (keeping first occurrences) and normalizes rays.
    pub fn new(space: Vec<String>, vertices: Vec<Vec<Rational>>, rays: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = space.len();
        if let Some(v) = vertices.iter().chain(&rays).find(|v| v.len() != dim) {
            return Err(Error::Dimension {
                expected: dim,
                actual: v.len(),
            });
        }
        let mut seen = HashSet::new();
        let vertices = vertices.into_iter().filter(|v| seen.insert(v.clone())).collect();
        let mut seen = HashSet::new();
        let rays = rays
            .iter()
            .map(|r| integer_row(r).into_iter().map(Rational::from_integer).collect::<Vec<_>>())
            .filter(|r| seen.insert(r.clone()))
            .collect();
        Ok(VPolytope { space, vertices, rays })
    }

    pub fn dim(&self) -> usize {
        self.space.len()
    }
}

pub fn max_over_points(objective: &[Rational], points: &[Vec<Rational>]) -> Option<Rational> {
    points
        .iter()
        .map(|p| objective.iter().zip(p).map(|(c, x)| c * x).sum::<Rational>())
        .max()
}
