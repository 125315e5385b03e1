//! Double description method on integer vectors.
//!
//! [`cone_generators`] converts `{x : a_i · x >= 0}` into a lineality basis
//! plus extreme rays. Constraints are inserted in lexicographic order; the
//! lineality space is split off one constraint at a time, so no initial
//! basis computation is required. Two rays are combined only when they are
//! adjacent, decided from their common zero sets.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::int_rank;
use super::{integer_row, reduce_by_gcd, rref, HPolytope, LinearInequality, Rational, Relation, VPolytope};
use crate::error::{Error, Result};

pub const DEFAULT_DIM_LIMIT: usize = 15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeGenerators {
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

/// Bitset over processed constraint indices.
#[derive(Clone, Debug)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn new(len: usize) -> Self {
        ZeroSet(vec![0; len.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn subset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: ZeroSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .filter(|(x, _)| !x.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// `alpha * x - beta * y`, reduced by gcd.
fn combine(alpha: &BigInt, x: &[BigInt], beta: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| alpha * a - beta * b).collect();
    reduce_by_gcd(&mut out);
    out
}

/// Generators of the polyhedral cone `{x in R^dim : row · x >= 0 for all rows}`.
pub fn cone_generators(rows: &[Vec<BigInt>], dim: usize) -> ConeGenerators {
    let mut order: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            reduce_by_gcd(&mut r);
            r
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    order.sort();
    order.dedup();
    let total = order.len();

    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in order.iter().enumerate() {
        if let Some(p) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            // The constraint cuts the lineality space: l0 becomes a ray and
            // everything else is projected onto the hyperplane a·x = 0.
            let mut l0 = lineality.swap_remove(p);
            let mut s0 = dot(a, &l0);
            if s0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -&*x);
                s0 = -s0;
            }
            for l in lineality.iter_mut() {
                let s = dot(a, l);
                if !s.is_zero() {
                    *l = combine(&s0, l, &s, &l0);
                }
            }
            for r in rays.iter_mut() {
                let s = dot(a, &r.v);
                if !s.is_zero() {
                    r.v = combine(&s0, &r.v, &s, &l0);
                }
                r.zeros.insert(k);
            }
            let mut zeros = ZeroSet::new(total);
            for j in 0..k {
                zeros.insert(j);
            }
            rays.push(Ray { v: l0, zeros });
            continue;
        }

        let signs: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, s) in rays.iter_mut().zip(&signs) {
                if s.is_zero() {
                    r.zeros.insert(k);
                }
            }
            continue;
        }

        let pointed_dim = dim - lineality.len();
        let mut fresh = Vec::new();
        for &i in &pos {
            for &j in &neg {
                let common = rays[i].zeros.and(&rays[j].zeros);
                if common.count() + 2 < pointed_dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(t, r)| t == i || t == j || !common.subset_of(&r.zeros));
                if !adjacent {
                    continue;
                }
                let v = combine(&signs[i], &rays[j].v, &signs[j], &rays[i].v);
                let mut zeros = common;
                zeros.insert(k);
                fresh.push(Ray { v, zeros });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, s) in rays.into_iter().zip(&signs) {
            if s.is_positive() {
                kept.push(r);
            } else if s.is_zero() {
                let mut r = r;
                r.zeros.insert(k);
                kept.push(r);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    ConeGenerators { lineality, rays: out }
}

/// Dimension DD effectively works in: ambient minus the rank of the equalities.
fn effective_dim(p: &HPolytope) -> usize {
    let eqs: Vec<Vec<BigInt>> = p
        .rows
        .iter()
        .filter(|r| r.relation == Relation::Eq)
        .map(|r| integer_row(&r.coeffs))
        .collect();
    p.dim() - int_rank(eqs)
}

/// Irredundant facet description of the convex hull of `v.vertices`.
/// Equalities are emitted for the affine hull; facet rows are reduced
/// modulo those equalities so the output is canonical.
pub fn dd_hull(v: &VPolytope, dim_limit: usize) -> Result<HPolytope> {
    if v.vertices.is_empty() {
        return Err(Error::Empty("dd_hull needs at least one vertex"));
    }
    if !v.rays.is_empty() {
        return Err(Error::NotACone("dd_hull expects a polytope without rays".into()));
    }
    let d = v.dim();
    if d > dim_limit {
        return Err(Error::LimitExceeded {
            what: "hull dimension",
            actual: d,
            limit: dim_limit,
        });
    }
    // h = (h0, h1..hd) with h0 + h·x >= 0 at every vertex encodes -h·x <= h0.
    let rows: Vec<Vec<BigInt>> = v
        .vertices
        .iter()
        .map(|p| integer_row(std::iter::once(&Rational::from_integer(1.into())).chain(p)))
        .collect();
    let gens = cone_generators(&rows, d + 1);
    let as_row = |h: &[BigInt], rel: Relation| {
        let coeffs = h[1..].iter().map(|x| Rational::from_integer(-x)).collect();
        let rhs = Rational::from_integer(h[0].clone());
        match rel {
            Relation::Le => LinearInequality::le(coeffs, rhs),
            Relation::Eq => LinearInequality::eq(coeffs, rhs),
        }
    };

    let eq_rows: Vec<LinearInequality> = gens.lineality.iter().map(|h| as_row(h, Relation::Eq)).collect();
    let (eq_rref, pivots) = rref(
        &eq_rows
            .iter()
            .map(|r| r.coeffs.iter().chain(std::iter::once(&r.rhs)).cloned().collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );

    let mut out = Vec::new();
    for e in &eq_rref {
        let n = e.len() - 1;
        out.push(LinearInequality::eq(e[..n].to_vec(), e[n].clone()).normalized());
    }
    let mut seen = HashSet::new();
    for h in &gens.rays {
        let mut row = as_row(h, Relation::Le);
        for (e, &pc) in eq_rref.iter().zip(&pivots) {
            if pc >= d || row.coeffs[pc].is_zero() {
                continue;
            }
            let f = row.coeffs[pc].clone();
            for (c, ej) in row.coeffs.iter_mut().zip(&e[..d]) {
                *c -= &f * ej;
            }
            row.rhs -= &f * &e[d];
        }
        if row.coeffs.iter().all(Zero::is_zero) {
            // 0 <= c with c >= 0 is implied
            continue;
        }
        let row = row.normalized();
        if seen.insert(row.key()) {
            out.push(row);
        }
    }
    out.sort_by_key(LinearInequality::key);
    HPolytope::new(v.space.clone(), out)
}

/// Extreme rays of a pointed cone given by homogeneous rows.
pub fn dd_rays(c: &HPolytope, dim_limit: usize) -> Result<Vec<Vec<Rational>>> {
    if let Some(r) = c.rows.iter().find(|r| !r.rhs.is_zero()) {
        return Err(Error::NotACone(format!("row `{}` is not homogeneous", r)));
    }
    let eff = effective_dim(c);
    if eff > dim_limit {
        return Err(Error::LimitExceeded {
            what: "cone dimension",
            actual: eff,
            limit: dim_limit,
        });
    }
    let mut rows = Vec::new();
    for r in &c.rows {
        let a = integer_row(&r.coeffs);
        if r.relation == Relation::Eq {
            rows.push(a.clone());
        }
        rows.push(a.into_iter().map(|x| -x).collect());
    }
    let gens = cone_generators(&rows, c.dim());
    if !gens.lineality.is_empty() {
        return Err(Error::NotACone("cone contains a line".into()));
    }
    Ok(gens
        .rays
        .into_iter()
        .map(|r| r.into_iter().map(Rational::from_integer).collect())
        .collect())
}

/// Vertices and recession rays of a pointed polyhedron.
pub fn dd_vertices(p: &HPolytope, dim_limit: usize) -> Result<VPolytope> {
    let eff = effective_dim(p);
    if eff > dim_limit {
        return Err(Error::LimitExceeded {
            what: "polyhedron dimension",
            actual: eff,
            limit: dim_limit,
        });
    }
    let d = p.dim();
    // homogenize with t at index 0: rhs·t - a·x >= 0, and t >= 0
    let mut rows = Vec::new();
    for r in &p.rows {
        let row: Vec<Rational> = std::iter::once(r.rhs.clone())
            .chain(r.coeffs.iter().map(|c| -c))
            .collect();
        let a = integer_row(&row);
        if r.relation == Relation::Eq {
            rows.push(a.iter().map(|x| -x).collect());
        }
        rows.push(a);
    }
    let mut t = vec![BigInt::zero(); d + 1];
    t[0] = BigInt::from(1);
    rows.push(t);
    let gens = cone_generators(&rows, d + 1);
    if !gens.lineality.is_empty() {
        return Err(Error::NotACone("polyhedron contains a line".into()));
    }
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for g in gens.rays {
        if g[0].is_zero() {
            rays.push(g[1..].iter().cloned().map(Rational::from_integer).collect());
        } else {
            let t = Rational::from_integer(g[0].clone());
            vertices.push(g[1..].iter().map(|x| Rational::from_integer(x.clone()) / &t).collect());
        }
    }
    vertices.sort();
    rays.sort();
    VPolytope::new(p.space.clone(), vertices, rays)
}
