//! Inequality families of the total matching polytope and certifiers for them.
//!
//! Rows are expressed over the canonical element space of the host graph.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::enumeration::{enumerate_total_matchings, Mode, TotalMatching};
use crate::error::{Error, Result};
use crate::geometry::{affine_rank, dd_hull, rat, Family, HPolytope, LinearInequality, Rational, RowKey, VPolytope};
use crate::graph::{make_complete_bipartite, Graph, Side};

/// Selects a biclique `(A, B)` of a host graph and, for the lifted family,
/// the blocks `A1 ⊆ A`, `B1 ⊆ B` that receive coefficient β.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicliqueSelector {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub a1: Vec<usize>,
    pub b1: Vec<usize>,
}

impl BicliqueSelector {
    pub fn new(a: Vec<usize>, b: Vec<usize>, a1: Vec<usize>, b1: Vec<usize>) -> Self {
        let sorted = |mut v: Vec<usize>| {
            v.sort_unstable();
            v
        };
        BicliqueSelector {
            a: sorted(a),
            b: sorted(b),
            a1: sorted(a1),
            b1: sorted(b1),
        }
    }

    /// `β = (s + |A1| - r - |B1|) / (|A1| - |B1|)` with `r = |A|`, `s = |B|`.
    pub fn beta(&self) -> Rational {
        let (r, s) = (self.a.len() as i64, self.b.len() as i64);
        let (a1, b1) = (self.a1.len() as i64, self.b1.len() as i64);
        Rational::new((s + a1 - r - b1).into(), (a1 - b1).into())
    }

    /// Right-hand side `|A1|(β - 1) + |A|`.
    pub fn lifted_rhs(&self) -> Rational {
        rat(self.a1.len() as i64) * (self.beta() - Rational::one()) + rat(self.a.len() as i64)
    }

    /// Checks the lifted-family constraints on the set sizes.
    pub fn check_lifted(&self) -> Result<()> {
        let (r, s, a1, b1) = (self.a.len(), self.b.len(), self.a1.len(), self.b1.len());
        let fail = |m: String| Err(Error::Selector(m));
        if !(s > r && r >= 2) {
            return fail(format!("need |B| > |A| >= 2, got |A|={} |B|={}", r, s));
        }
        if !(r > a1 && a1 > b1) {
            return fail(format!("need |A| > |A1| > |B1|, got {} > {} > {}", r, a1, b1));
        }
        if b1 == 0 && a1 != 1 {
            return fail(format!("|B1| = 0 requires |A1| = 1, got |A1| = {}", a1));
        }
        if !self.a1.iter().all(|v| self.a.contains(v)) || !self.b1.iter().all(|v| self.b.contains(v)) {
            return fail("A1 must lie in A and B1 in B".into());
        }
        Ok(())
    }
}

fn set_text(vs: &[usize]) -> String {
    let inner: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl fmt::Display for BicliqueSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={} B={}", set_text(&self.a), set_text(&self.b))?;
        if !self.a1.is_empty() || !self.b1.is_empty() {
            write!(f, " A1={} B1={}", set_text(&self.a1), set_text(&self.b1))?;
        }
        Ok(())
    }
}

/// Lexicographic `k`-subsets of `items`.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(items, k, 0, &mut cur, &mut out);
    out
}

/// Node, edge and nonnegativity rows: `n + m + (n + m)` in total.
pub fn relaxation_inequalities(g: &Graph) -> Vec<LinearInequality> {
    let d = g.dim();
    let n = g.vertex_count();
    let mut rows = Vec::with_capacity(n + 2 * d);
    for v in 0..n {
        let mut c = vec![Rational::zero(); d];
        c[v] = Rational::one();
        for e in g.incident_edges(v) {
            c[e] = Rational::one();
        }
        rows.push(LinearInequality::le(c, Rational::one()).tagged(Family::Node, format!("v{}", v + 1)));
    }
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        let mut c = vec![Rational::zero(); d];
        c[u] = Rational::one();
        c[v] = Rational::one();
        c[n + k] = Rational::one();
        rows.push(
            LinearInequality::le(c, Rational::one()).tagged(Family::Edge, format!("e{}-{}", u + 1, v + 1)),
        );
    }
    for i in 0..d {
        rows.push(LinearInequality::nonneg(d, i).tagged(Family::Nonneg, g.element(i).id()));
    }
    rows
}

/// Rejects `(A, B)` unless it induces a complete bipartite subgraph with
/// the two sets on opposite sides (when `g` carries a bipartition).
fn check_induced_biclique(g: &Graph, a: &[usize], b: &[usize]) -> Result<()> {
    let n = g.vertex_count();
    if a.is_empty() || b.is_empty() {
        return Err(Error::Selector("both sides must be nonempty".into()));
    }
    if let Some(&v) = a.iter().chain(b).find(|&&v| v >= n) {
        return Err(Error::Selector(format!("vertex {} out of range", v + 1)));
    }
    if a.iter().any(|v| b.contains(v)) {
        return Err(Error::Selector("sides overlap".into()));
    }
    if let Some(sides) = g.sides() {
        let sa = sides[a[0]];
        if a.iter().any(|&v| sides[v] != sa) || b.iter().any(|&v| sides[v] != sa.other()) {
            return Err(Error::Selector("sides do not follow the bipartition".into()));
        }
    }
    for side in [a, b] {
        for (i, &u) in side.iter().enumerate() {
            if side[i + 1..].iter().any(|&w| g.has_edge(u, w)) {
                return Err(Error::Selector("biclique is not induced".into()));
            }
        }
    }
    for &u in a {
        if let Some(&w) = b.iter().find(|&&w| !g.has_edge(u, w)) {
            return Err(Error::Selector(format!("edge {}-{} missing", u + 1, w + 1)));
        }
    }
    Ok(())
}

fn biclique_support(g: &Graph, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = a.iter().chain(b).copied().collect();
    for &u in a {
        for &w in b {
            idx.push(g.element_index(crate::graph::Element::edge(u, w)).unwrap());
        }
    }
    idx
}

/// `Σ x_v + Σ y_e <= r` over an induced `K_{r,r}`, `r >= 2`.
pub fn balanced_biclique_inequality(g: &Graph, a: &[usize], b: &[usize]) -> Result<LinearInequality> {
    if a.len() != b.len() {
        return Err(Error::Selector(format!("sides differ: {} vs {}", a.len(), b.len())));
    }
    if a.len() < 2 {
        return Err(Error::Selector("r = 1 gives the edge inequality; need r >= 2".into()));
    }
    check_induced_biclique(g, a, b)?;
    let sel = BicliqueSelector::new(a.to_vec(), b.to_vec(), vec![], vec![]);
    let mut c = vec![Rational::zero(); g.dim()];
    for i in biclique_support(g, a, b) {
        c[i] = Rational::one();
    }
    Ok(LinearInequality::le(c, rat(a.len() as i64)).tagged(Family::BalancedBiclique, sel.to_string()))
}

/// The non-balanced lifted biclique row: β on `A1 ∪ B1 ∪ (A1 × B1)`, 1 on
/// the rest of the biclique, right-hand side `|A1|(β-1) + |A|`.
pub fn nonbalanced_lifted_inequality(g: &Graph, sel: &BicliqueSelector) -> Result<LinearInequality> {
    sel.check_lifted()?;
    check_induced_biclique(g, &sel.a, &sel.b)?;
    let beta = sel.beta();
    let mut c = vec![Rational::zero(); g.dim()];
    for i in biclique_support(g, &sel.a, &sel.b) {
        c[i] = Rational::one();
    }
    for i in biclique_support(g, &sel.a1, &sel.b1) {
        c[i] = beta.clone();
    }
    // A1 x B1 is empty when B1 is, but A1 itself still gets β
    for &v in sel.a1.iter().chain(&sel.b1) {
        c[v] = beta.clone();
    }
    Ok(LinearInequality::le(c, sel.lifted_rhs()).tagged(Family::NonbalancedLifted, sel.to_string()))
}

/// All-ones row with rhs `s` over an induced `K_{r,s}`, `s > r >= 2`.
/// Valid but never facet-defining; kept for domination checks.
pub fn plain_nonbalanced_inequality(g: &Graph, a: &[usize], b: &[usize]) -> Result<LinearInequality> {
    if !(b.len() > a.len() && a.len() >= 2) {
        return Err(Error::Selector(format!(
            "need |B| > |A| >= 2, got |A|={} |B|={}",
            a.len(),
            b.len()
        )));
    }
    check_induced_biclique(g, a, b)?;
    let sel = BicliqueSelector::new(a.to_vec(), b.to_vec(), vec![], vec![]);
    let mut c = vec![Rational::zero(); g.dim()];
    for i in biclique_support(g, a, b) {
        c[i] = Rational::one();
    }
    Ok(LinearInequality::le(c, rat(b.len() as i64)).tagged(Family::Other, format!("non-facet {}", sel)))
}

pub fn tree_description(g: &Graph) -> Result<HPolytope> {
    if !g.is_tree() {
        return Err(Error::Graph("not a tree".into()));
    }
    HPolytope::new(g.element_ids(), relaxation_inequalities(g))
}

/// Every admissible `(A1, B1)` for a biclique with sides `a` (smaller) and `b`.
pub fn lifted_selectors(a: &[usize], b: &[usize]) -> Vec<BicliqueSelector> {
    let mut out = Vec::new();
    for k1 in 1..a.len() {
        for k2 in 0..k1 {
            if k2 == 0 && k1 != 1 {
                continue;
            }
            for a1 in subsets(a, k1) {
                for b1 in subsets(b, k2) {
                    out.push(BicliqueSelector::new(a.to_vec(), b.to_vec(), a1.clone(), b1));
                }
            }
        }
    }
    out
}

/// Relaxation rows, balanced rows for every `K_{k,k}` (k >= 2), and lifted
/// rows for every `K_{a,b}` (b > a >= 2, either orientation) with every
/// admissible `(A1, B1)`. Deduplicated by normalized form.
pub fn complete_bipartite_description(r: usize, s: usize) -> Result<HPolytope> {
    let g = make_complete_bipartite(r, s)?;
    let side_a = g.side_vertices(Side::A);
    let side_b = g.side_vertices(Side::B);
    let mut rows = relaxation_inequalities(&g);
    for k in 2..=r.min(s) {
        for a in subsets(&side_a, k) {
            for b in subsets(&side_b, k) {
                rows.push(balanced_biclique_inequality(&g, &a, &b)?);
            }
        }
    }
    for (small_side, large_side) in [(&side_a, &side_b), (&side_b, &side_a)] {
        for ka in 2..=small_side.len() {
            for kb in ka + 1..=large_side.len() {
                for a in subsets(small_side, ka) {
                    for b in subsets(large_side, kb) {
                        for sel in lifted_selectors(&a, &b) {
                            rows.push(nonbalanced_lifted_inequality(&g, &sel)?);
                        }
                    }
                }
            }
        }
    }
    let mut seen = HashSet::new();
    rows.retain(|row| seen.insert(row.key()));
    HPolytope::new(g.element_ids(), rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// A total matching whose characteristic vector violates the row.
    Violated(TotalMatching),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Checks the row against every total matching of `g`.
pub fn is_valid(g: &Graph, ineq: &LinearInequality, limit: usize) -> Result<Validity> {
    check_dim(g, ineq)?;
    let all = enumerate_total_matchings(g, Mode::All, limit)?;
    Ok(validity_over(g, ineq, &all))
}

fn validity_over(g: &Graph, ineq: &LinearInequality, all: &[TotalMatching]) -> Validity {
    match all.iter().find(|t| !ineq.satisfied_by(&t.characteristic_vector(g))) {
        Some(t) => Validity::Violated(t.clone()),
        None => Validity::Valid,
    }
}

fn check_dim(g: &Graph, ineq: &LinearInequality) -> Result<()> {
    if ineq.dim() != g.dim() {
        return Err(Error::Dimension {
            expected: g.dim(),
            actual: ineq.dim(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetCheck {
    pub is_facet: bool,
    /// Affine rank of the tight characteristic vectors.
    pub rank: usize,
    /// A maximal affinely independent subset of the tight total matchings.
    pub certificate: Vec<TotalMatching>,
}

/// A valid row defines a facet of the full-dimensional `P_T(g)` exactly when
/// its tight characteristic vectors have affine rank `n + m`.
pub fn is_facet(g: &Graph, ineq: &LinearInequality, limit: usize) -> Result<FacetCheck> {
    check_dim(g, ineq)?;
    let all = enumerate_total_matchings(g, Mode::All, limit)?;
    facet_over(g, ineq, &all)
}

fn facet_over(g: &Graph, ineq: &LinearInequality, all: &[TotalMatching]) -> Result<FacetCheck> {
    if !validity_over(g, ineq, all).is_valid() {
        return Err(Error::NotValid);
    }
    let tight: Vec<&TotalMatching> = all
        .iter()
        .filter(|t| ineq.is_tight(&t.characteristic_vector(g)))
        .collect();
    if tight.is_empty() {
        return Ok(FacetCheck {
            is_facet: false,
            rank: 0,
            certificate: Vec::new(),
        });
    }
    let points: Vec<Vec<Rational>> = tight.iter().map(|t| t.characteristic_vector(g)).collect();
    let rank = affine_rank(&points)?;
    let certificate = crate::geometry::affinely_independent_subset(&points)
        .into_iter()
        .map(|i| tight[i].clone())
        .collect();
    Ok(FacetCheck {
        is_facet: rank == g.dim(),
        rank,
        certificate,
    })
}

/// Certifies many rows against one enumeration.
pub struct Certifier<'g> {
    g: &'g Graph,
    all: Vec<TotalMatching>,
}

impl<'g> Certifier<'g> {
    pub fn new(g: &'g Graph, limit: usize) -> Result<Self> {
        let all = enumerate_total_matchings(g, Mode::All, limit)?;
        Ok(Certifier { g, all })
    }

    pub fn total_matchings(&self) -> &[TotalMatching] {
        &self.all
    }

    pub fn is_valid(&self, ineq: &LinearInequality) -> Result<Validity> {
        check_dim(self.g, ineq)?;
        Ok(validity_over(self.g, ineq, &self.all))
    }

    pub fn is_facet(&self, ineq: &LinearInequality) -> Result<FacetCheck> {
        check_dim(self.g, ineq)?;
        facet_over(self.g, ineq, &self.all)
    }
}

/// Characteristic vectors of all total matchings, as a V-polytope.
pub fn total_matching_vertices(g: &Graph, limit: usize) -> Result<VPolytope> {
    let all = enumerate_total_matchings(g, Mode::All, limit)?;
    VPolytope::new(
        g.element_ids(),
        all.iter().map(|t| t.characteristic_vector(g)).collect(),
        vec![],
    )
}

/// Facets of `P_T(g)` by double description over all characteristic vectors.
pub fn hull_facets(g: &Graph, elem_limit: usize, dim_limit: usize) -> Result<HPolytope> {
    let v = total_matching_vertices(g, elem_limit)?;
    dd_hull(&v, dim_limit)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescriptionReport {
    /// Every hull facet appears among the rows.
    pub complete: bool,
    /// Every row is valid.
    pub sound: bool,
    /// Every row is a hull facet and no row is repeated.
    pub irredundant: bool,
    pub hull_facets: usize,
    pub missing: Vec<LinearInequality>,
    pub invalid: Vec<LinearInequality>,
    pub redundant: Vec<LinearInequality>,
}

impl DescriptionReport {
    pub fn passed(&self) -> bool {
        self.complete && self.sound && self.irredundant
    }

    pub fn summary(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        format!(
            "complete: {}, sound: {}, irredundant: {}, facets: {}",
            yn(self.complete),
            yn(self.sound),
            yn(self.irredundant),
            self.hull_facets
        )
    }
}

pub fn verify_description(
    g: &Graph,
    h: &HPolytope,
    elem_limit: usize,
    dim_limit: usize,
) -> Result<DescriptionReport> {
    if h.dim() != g.dim() {
        return Err(Error::Dimension {
            expected: g.dim(),
            actual: h.dim(),
        });
    }
    let cert = Certifier::new(g, elem_limit)?;
    let v = VPolytope::new(
        g.element_ids(),
        cert.total_matchings().iter().map(|t| t.characteristic_vector(g)).collect(),
        vec![],
    )?;
    let hull = dd_hull(&v, dim_limit)?;
    let hull_keys: HashSet<RowKey> = hull.key_set();
    let row_keys = h.key_set();

    let missing: Vec<LinearInequality> = hull
        .rows
        .iter()
        .filter(|r| !row_keys.contains(&r.key()))
        .cloned()
        .collect();
    let mut invalid = Vec::new();
    for r in &h.rows {
        if !cert.is_valid(r)?.is_valid() {
            invalid.push(r.clone());
        }
    }
    let mut seen = HashSet::new();
    let redundant: Vec<LinearInequality> = h
        .rows
        .iter()
        .filter(|r| {
            let k = r.key();
            !hull_keys.contains(&k) || !seen.insert(k)
        })
        .cloned()
        .collect();
    Ok(DescriptionReport {
        complete: missing.is_empty(),
        sound: invalid.is_empty(),
        irredundant: redundant.is_empty(),
        hull_facets: hull.rows.len(),
        missing,
        invalid,
        redundant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::DEFAULT_ELEMENT_LIMIT as LIM;
    use crate::geometry::{is_implied, ratio, DEFAULT_DIM_LIMIT};
    use crate::graph::{complete, path, star};

    fn k(r: usize, s: usize) -> Graph {
        make_complete_bipartite(r, s).unwrap()
    }

    #[test]
    fn relaxation_counts() {
        assert_eq!(relaxation_inequalities(&k(1, 1)).len(), 6);
        assert_eq!(relaxation_inequalities(&k(2, 2)).len(), 16);
        let g = k(2, 3);
        let rows = relaxation_inequalities(&g);
        let cert = Certifier::new(&g, LIM).unwrap();
        for r in &rows {
            assert!(cert.is_valid(r).unwrap().is_valid(), "{}", r);
        }
    }

    #[test]
    fn balanced_examples() {
        let g = k(2, 2);
        let row = balanced_biclique_inequality(&g, &[0, 1], &[2, 3]).unwrap();
        assert!(row.coeffs.iter().all(|c| *c == rat(1)));
        assert_eq!(row.rhs, rat(2));
        assert_eq!(row.note, "A={1,2} B={3,4}");

        let g = k(2, 3);
        let row = balanced_biclique_inequality(&g, &[0, 1], &[2, 3]).unwrap();
        assert_eq!(row.coeffs.iter().filter(|c| **c == rat(1)).count(), 8);
        assert_eq!(row.rhs, rat(2));
        assert!(is_valid(&g, &row, LIM).unwrap().is_valid());

        assert!(balanced_biclique_inequality(&g, &[0], &[2]).is_err());
        assert!(balanced_biclique_inequality(&g, &[0, 1], &[2, 3, 4]).is_err());
        // not induced: K4 has edges inside both sides
        assert!(balanced_biclique_inequality(&complete(4), &[0, 1], &[2, 3]).is_err());
    }

    #[test]
    fn lifted_k23_example() {
        let g = k(2, 3);
        let sel = BicliqueSelector::new(vec![0, 1], vec![2, 3, 4], vec![0], vec![]);
        assert_eq!(sel.beta(), rat(2));
        let row = nonbalanced_lifted_inequality(&g, &sel).unwrap();
        let want: Vec<Rational> = [2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1].iter().map(|&x| rat(x)).collect();
        assert_eq!(row.coeffs, want);
        assert_eq!(row.rhs, rat(3));
        assert_eq!(row.note, "A={1,2} B={3,4,5} A1={1} B1={}");
        assert!(is_valid(&g, &row, LIM).unwrap().is_valid());

        let bad = BicliqueSelector::new(vec![0, 1], vec![2, 3, 4], vec![0, 1], vec![]);
        assert!(matches!(nonbalanced_lifted_inequality(&g, &bad), Err(Error::Selector(_))));
        let bad = BicliqueSelector::new(vec![0, 1, 2], vec![3, 4, 5, 6], vec![0, 1], vec![]);
        assert!(matches!(bad.check_lifted(), Err(Error::Selector(_))));
    }

    #[test]
    fn lifted_k34_example() {
        let g = k(3, 4);
        let sel = BicliqueSelector::new(vec![0, 1, 2], vec![3, 4, 5, 6], vec![0, 1], vec![3]);
        assert_eq!(sel.beta(), rat(2));
        assert_eq!(sel.lifted_rhs(), rat(5));
        let row = nonbalanced_lifted_inequality(&g, &sel).unwrap();
        let beta_edges = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| row.coeffs[g.vertex_count() + i] == rat(2))
            .map(|(_, e)| *e)
            .collect::<Vec<_>>();
        assert_eq!(beta_edges, vec![(0, 3), (1, 3)]);
        assert_eq!(row.coeffs[0], rat(2));
        assert_eq!(row.coeffs[3], rat(2));
        assert_eq!(row.coeffs[2], rat(1));
    }

    #[test]
    fn side_count_identity_holds_for_all_selectors() {
        for (r, s) in [(2, 3), (2, 4), (3, 4), (3, 5), (4, 6)] {
            let a: Vec<usize> = (0..r).collect();
            let b: Vec<usize> = (r..r + s).collect();
            for sel in lifted_selectors(&a, &b) {
                let beta = sel.beta();
                let lhs = sel.lifted_rhs();
                let b1 = rat(sel.b1.len() as i64);
                let rhs = &beta * &b1 + rat(s as i64) - &b1;
                assert_eq!(lhs, rhs, "{sel}");
                assert!(beta > rat(1));
            }
        }
    }

    #[test]
    fn plain_row_valid_but_not_facet() {
        let g = k(2, 3);
        let row = plain_nonbalanced_inequality(&g, &[0, 1], &[2, 3, 4]).unwrap();
        assert!(row.coeffs.iter().all(|c| *c == rat(1)));
        assert_eq!(row.rhs, rat(3));
        assert!(is_valid(&g, &row, LIM).unwrap().is_valid());
        assert!(!is_facet(&g, &row, LIM).unwrap().is_facet);
        let h = complete_bipartite_description(2, 3).unwrap();
        assert!(is_implied(&row, &h).unwrap());
    }

    #[test]
    fn validity_and_facet_examples() {
        let g = k(2, 2);
        let bal = balanced_biclique_inequality(&g, &[0, 1], &[2, 3]).unwrap();
        assert!(is_valid(&g, &bal, LIM).unwrap().is_valid());
        let all_le_one = LinearInequality::le(vec![rat(1); 8], rat(1));
        match is_valid(&g, &all_le_one, LIM).unwrap() {
            Validity::Violated(t) => assert_eq!(t.len(), 2),
            Validity::Valid => panic!("sum <= 1 accepted"),
        }
        let trivial = LinearInequality::le(vec![rat(0); 8], rat(0));
        assert!(is_valid(&g, &trivial, LIM).unwrap().is_valid());
        assert!(!is_facet(&g, &trivial, LIM).unwrap().is_facet);

        for row in relaxation_inequalities(&g).iter().filter(|r| r.family == Family::Node) {
            let f = is_facet(&g, row, LIM).unwrap();
            assert!(f.is_facet);
            assert_eq!(f.certificate.len(), 8);
        }
        assert!(matches!(is_facet(&g, &all_le_one, LIM), Err(Error::NotValid)));
        // same row as the balanced one after scaling
        let half = LinearInequality::le(vec![ratio(1, 2); 8], rat(1));
        assert!(is_facet(&g, &half, LIM).unwrap().is_facet);
        let mut c = vec![rat(0); 8];
        c[0] = rat(1);
        let weak = LinearInequality::le(c, rat(1));
        assert!(!is_facet(&g, &weak, LIM).unwrap().is_facet);
    }

    #[test]
    fn tree_descriptions() {
        assert_eq!(tree_description(&star(3)).unwrap().rows.len(), 14);
        assert_eq!(tree_description(&path(2)).unwrap().rows.len(), 6);
        assert!(tree_description(&complete(3)).is_err());
        // leaf node rows are dominated by edge rows, so only inclusion holds
        for t in [path(2), path(4), star(3)] {
            let hull = hull_facets(&t, LIM, DEFAULT_DIM_LIMIT).unwrap();
            let desc = tree_description(&t).unwrap();
            assert!(hull.key_set().is_subset(&desc.key_set()));
            for row in &desc.rows {
                assert!(is_implied(row, &hull).unwrap());
            }
        }
    }

    #[test]
    fn catalog_counts() {
        let count = |r, s, fam| {
            complete_bipartite_description(r, s)
                .unwrap()
                .rows
                .iter()
                .filter(|row| row.family == fam)
                .count()
        };
        assert_eq!(complete_bipartite_description(2, 2).unwrap().rows.len(), 17);
        assert_eq!(complete_bipartite_description(2, 3).unwrap().rows.len(), 27);
        assert_eq!(complete_bipartite_description(2, 4).unwrap().rows.len(), 44);
        assert_eq!(count(2, 3, Family::BalancedBiclique), 3);
        assert_eq!(count(2, 3, Family::NonbalancedLifted), 2);
        assert_eq!(count(2, 4, Family::BalancedBiclique), 6);
        assert_eq!(count(2, 4, Family::NonbalancedLifted), 10);
        // regenerating yields identical text
        let a = complete_bipartite_description(3, 3).unwrap().to_text();
        let b = complete_bipartite_description(3, 3).unwrap().to_text();
        assert_eq!(a, b);
    }

    #[test]
    fn hull_of_single_edge() {
        let g = k(1, 1);
        let hull = hull_facets(&g, LIM, DEFAULT_DIM_LIMIT).unwrap();
        let texts: HashSet<String> = hull.rows.iter().map(|r| r.to_text()).collect();
        let want: HashSet<String> = ["-1 0 0 <= 0", "0 -1 0 <= 0", "0 0 -1 <= 0", "1 1 1 <= 1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(texts, want);
    }

    #[test]
    fn verify_small_cases() {
        let g = k(2, 2);
        let rep = verify_description(&g, &complete_bipartite_description(2, 2).unwrap(), LIM, 15).unwrap();
        assert!(rep.passed(), "{}", rep.summary());
        assert_eq!(rep.hull_facets, 17);
        let g = k(2, 3);
        let relax = HPolytope::new(g.element_ids(), relaxation_inequalities(&g)).unwrap();
        let rep = verify_description(&g, &relax, LIM, 15).unwrap();
        assert!(!rep.complete);
        assert!(rep.sound && rep.irredundant);
        assert_eq!(rep.missing.len(), 5);
    }
}
