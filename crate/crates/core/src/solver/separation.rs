use num_traits::{Signed, Zero};

use crate::catalog::{complete_bipartite_description, subsets, BicliqueSelector};
use crate::error::{Error, Result};
use crate::geometry::{rat, Family, LinearInequality, Rational};
use crate::graph::{Element, Graph, Side};

/// Default bound on the number of candidate side-subset pairs.
pub const DEFAULT_SEPARATION_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationResult {
    pub violated: bool,
    pub inequality: Option<LinearInequality>,
    /// `lhs - rhs` of the reported row, zero when nothing is violated.
    pub violation: Rational,
}

impl SeparationResult {
    fn none() -> Self {
        SeparationResult {
            violated: false,
            inequality: None,
            violation: Rational::zero(),
        }
    }

    fn keep_best(best: &mut Option<(Rational, LinearInequality)>, v: Rational, row: impl FnOnce() -> LinearInequality) {
        if v.is_positive() && best.as_ref().is_none_or(|(b, _)| v > *b) {
            *best = Some((v, row()));
        }
    }

    fn from_best(best: Option<(Rational, LinearInequality)>) -> Self {
        match best {
            Some((v, row)) => SeparationResult {
                violated: true,
                inequality: Some(row),
                violation: v,
            },
            None => SeparationResult::none(),
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn check_point(g: &Graph, point: &[Rational]) -> Result<()> {
    if point.len() != g.dim() {
        return Err(Error::Dimension {
            expected: g.dim(),
            actual: point.len(),
        });
    }
    if point.iter().any(Signed::is_negative) {
        return Err(Error::Selector("point must be nonnegative".into()));
    }
    Ok(())
}

/// Exhaustive search for the most violated `Σ x + Σ y <= k` row over all
/// `k`-subsets of each side of a bipartite host with complete sides.
pub fn separate_balanced(g: &Graph, point: &[Rational], k: usize, limit: usize) -> Result<SeparationResult> {
    check_point(g, point)?;
    if g.sides().is_none() {
        return Err(Error::Graph("separation needs a bipartition".into()));
    }
    let side_a = g.side_vertices(Side::A);
    let side_b = g.side_vertices(Side::B);
    if k == 0 || k > side_a.len().min(side_b.len()) {
        return Err(Error::Selector(format!(
            "size {} outside 1..={}",
            k,
            side_a.len().min(side_b.len())
        )));
    }
    let candidates = binomial(side_a.len(), k).saturating_mul(binomial(side_b.len(), k));
    if candidates > limit {
        return Err(Error::LimitExceeded {
            what: "separation candidates",
            actual: candidates,
            limit,
        });
    }
    let b_sets = subsets(&side_b, k);
    let mut best = None;
    for a in subsets(&side_a, k) {
        for b in &b_sets {
            let mut support: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
            let mut complete = true;
            for &u in &a {
                for &w in b {
                    match g.element_index(Element::edge(u, w)) {
                        Some(i) => support.push(i),
                        None => complete = false,
                    }
                }
            }
            if !complete {
                continue;
            }
            let lhs: Rational = support.iter().map(|&i| &point[i]).sum();
            SeparationResult::keep_best(&mut best, lhs - rat(k as i64), || {
                let mut c = vec![Rational::zero(); g.dim()];
                for &i in &support {
                    c[i] = rat(1);
                }
                let sel = BicliqueSelector::new(a.clone(), b.clone(), vec![], vec![]);
                let family = if k == 1 { Family::Edge } else { Family::BalancedBiclique };
                LinearInequality::le(c, rat(k as i64)).tagged(family, sel.to_string())
            });
        }
    }
    Ok(SeparationResult::from_best(best))
}

/// Exact separation over the complete description of `P_T(K_{r,s})`.
pub fn separate_catalog(r: usize, s: usize, point: &[Rational]) -> Result<SeparationResult> {
    let h = complete_bipartite_description(r, s)?;
    if point.len() != h.dim() {
        return Err(Error::Dimension {
            expected: h.dim(),
            actual: point.len(),
        });
    }
    let mut best = None;
    for row in &h.rows {
        SeparationResult::keep_best(&mut best, row.slack_violation(point), || row.clone());
    }
    Ok(SeparationResult::from_best(best))
}
