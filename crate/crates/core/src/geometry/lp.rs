//! Two-phase primal simplex on a dense rational tableau with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::{HPolytope, LinearInequality, Rational, Relation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpResult {
    pub status: LpStatus,
    /// Optimal objective value (only when optimal).
    pub value: Option<Rational>,
    /// A basic optimal solution (only when optimal).
    pub point: Option<Vec<Rational>>,
}

/// How an original variable maps onto tableau columns.
#[derive(Clone, Copy)]
enum VarMap {
    /// x = column (explicit `-x <= 0` row was absorbed)
    Nonneg(usize),
    /// x = pos - neg
    Free(usize, usize),
}

struct Tableau {
    // rows: constraint rows, each of width `cols + 1` (last entry is rhs)
    a: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.a[r][c].recip();
        if !inv.is_one() {
            for x in self.a[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let prow = self.a[r].clone();
        for (i, row) in self.a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced costs `c_j - c_B B^-1 A_j` for maximizing `cost`.
    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut d: Vec<Rational> = cost.to_vec();
        for (row, &b) in self.a.iter().zip(&self.basis) {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (dj, aij) in d.iter_mut().zip(row.iter()) {
                if !aij.is_zero() {
                    *dj -= cb * aij;
                }
            }
        }
        d
    }

    /// Maximizes `cost · x` over columns `allowed`. Returns false if unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let d = self.reduced_costs(cost);
            // Bland: smallest improving column
            let Some(enter) = (0..self.cols).find(|&j| allowed[j] && d[j].is_positive()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.a.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }

    fn value_of(&self, col: usize) -> Rational {
        self.basis
            .iter()
            .position(|&b| b == col)
            .map(|i| self.a[i][self.cols].clone())
            .unwrap_or_else(Rational::zero)
    }
}

/// Exact LP over an H-polytope with free variables.
///
/// Rows of the form `-c·x_i <= 0` (`c > 0`) are absorbed as sign constraints
/// on `x_i`; all other variables are split into positive and negative parts.
pub fn lp_solve(p: &HPolytope, objective: &[Rational], sense: Sense) -> Result<LpResult> {
    let n = p.dim();
    if objective.len() != n {
        return Err(Error::Dimension {
            expected: n,
            actual: objective.len(),
        });
    }
    let mut nonneg = vec![false; n];
    let mut rows: Vec<&LinearInequality> = Vec::new();
    for r in &p.rows {
        if let Some(i) = sign_row(r) {
            nonneg[i] = true;
        } else {
            rows.push(r);
        }
    }

    let mut map = Vec::with_capacity(n);
    let mut cols = 0;
    for &nn in &nonneg {
        if nn {
            map.push(VarMap::Nonneg(cols));
            cols += 1;
        } else {
            map.push(VarMap::Free(cols, cols + 1));
            cols += 2;
        }
    }
    let slack_start = cols;
    let slack_count = rows.iter().filter(|r| r.relation == Relation::Le).count();
    cols += slack_count;
    let art_start = cols;
    // Every row gets an artificial; rows whose slack can start basic skip it.
    let m = rows.len();

    let mut a: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut needs_art = Vec::with_capacity(m);
    let mut slack_col = slack_start;
    for r in &rows {
        let mut row = vec![Rational::zero(); cols];
        for (i, c) in r.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match map[i] {
                VarMap::Nonneg(j) => row[j] = c.clone(),
                VarMap::Free(j, k) => {
                    row[j] = c.clone();
                    row[k] = -c;
                }
            }
        }
        let mut rhs = r.rhs.clone();
        let mut slack = None;
        if r.relation == Relation::Le {
            row[slack_col] = Rational::one();
            slack = Some(slack_col);
            slack_col += 1;
        }
        if rhs.is_negative() {
            row.iter_mut().for_each(|x| *x = -&*x);
            rhs = -rhs;
        }
        match slack {
            Some(s) if row[s].is_positive() => {
                basis.push(s);
                needs_art.push(false);
            }
            _ => {
                basis.push(usize::MAX);
                needs_art.push(true);
            }
        }
        row.push(rhs);
        a.push(row);
    }
    let art_count = needs_art.iter().filter(|&&b| b).count();
    let total = art_start + art_count;
    for row in a.iter_mut() {
        let rhs = row.pop().unwrap();
        row.resize(total, Rational::zero());
        row.push(rhs);
    }
    let mut art = art_start;
    for (i, &need) in needs_art.iter().enumerate() {
        if need {
            a[i][art] = Rational::one();
            basis[i] = art;
            art += 1;
        }
    }
    let mut t = Tableau { a, basis, cols: total };

    // phase 1: maximize -sum(artificials)
    if art_count > 0 {
        let mut cost = vec![Rational::zero(); total];
        for c in cost[art_start..].iter_mut() {
            *c = -Rational::one();
        }
        let allowed = vec![true; total];
        t.optimize(&cost, &allowed);
        let infeasibility: Rational = (art_start..total).map(|j| t.value_of(j)).sum();
        if infeasibility.is_positive() {
            return Ok(LpResult {
                status: LpStatus::Infeasible,
                value: None,
                point: None,
            });
        }
        // drive zero-level artificials out of the basis; drop redundant rows
        let mut i = 0;
        while i < t.a.len() {
            if t.basis[i] >= art_start {
                match (0..art_start).find(|&j| !t.a[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.a.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    // phase 2
    let mut cost = vec![Rational::zero(); total];
    for (i, c) in objective.iter().enumerate() {
        let c = match sense {
            Sense::Max => c.clone(),
            Sense::Min => -c,
        };
        match map[i] {
            VarMap::Nonneg(j) => cost[j] = c,
            VarMap::Free(j, k) => {
                cost[k] = -&c;
                cost[j] = c;
            }
        }
    }
    let allowed: Vec<bool> = (0..total).map(|j| j < art_start).collect();
    if !t.optimize(&cost, &allowed) {
        return Ok(LpResult {
            status: LpStatus::Unbounded,
            value: None,
            point: None,
        });
    }
    let point: Vec<Rational> = map
        .iter()
        .map(|m| match *m {
            VarMap::Nonneg(j) => t.value_of(j),
            VarMap::Free(j, k) => t.value_of(j) - t.value_of(k),
        })
        .collect();
    let value = objective.iter().zip(&point).map(|(c, x)| c * x).sum();
    Ok(LpResult {
        status: LpStatus::Optimal,
        value: Some(value),
        point: Some(point),
    })
}

/// `Some(i)` when the row reads `-c·x_i <= 0` with `c > 0`.
fn sign_row(r: &LinearInequality) -> Option<usize> {
    if r.relation != Relation::Le || !r.rhs.is_zero() {
        return None;
    }
    let mut nz = r.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
    let (i, c) = nz.next()?;
    (nz.next().is_none() && c.is_negative()).then_some(i)
}

/// Whether every point of `p` satisfies `ineq`.
pub fn is_implied(ineq: &LinearInequality, p: &HPolytope) -> Result<bool> {
    let senses: &[Sense] = match ineq.relation {
        Relation::Le => &[Sense::Max],
        Relation::Eq => &[Sense::Max, Sense::Min],
    };
    for &sense in senses {
        let res = lp_solve(p, &ineq.coeffs, sense)?;
        match res.status {
            LpStatus::Infeasible => return Err(Error::Infeasible),
            LpStatus::Unbounded => return Ok(false),
            LpStatus::Optimal => {
                let v = res.value.unwrap();
                let ok = match sense {
                    Sense::Max => v <= ineq.rhs,
                    Sense::Min => v >= ineq.rhs,
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
