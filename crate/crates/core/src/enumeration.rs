//! Exhaustive ground truth: total matchings, `ν_T`, max-weight total matching.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{parse_rational, Rational};
use crate::graph::{Element, Graph};

pub const DEFAULT_ELEMENT_LIMIT: usize = 24;
// Conflict sets are u128 masks.
const HARD_ELEMENT_LIMIT: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    All,
    Maximal,
    Maximum,
}

/// A set of pairwise independent elements, as sorted canonical indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TotalMatching {
    pub elements: Vec<usize>,
}

impl TotalMatching {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Characteristic vector `χ[T]` in the element space of `g`.
    pub fn characteristic_vector(&self, g: &Graph) -> Vec<Rational> {
        let mut z = vec![Rational::zero(); g.dim()];
        for &i in &self.elements {
            z[i] = Rational::one();
        }
        z
    }

    pub fn weight(&self, w: &[Rational]) -> Rational {
        self.elements.iter().map(|&i| &w[i]).sum()
    }

    pub fn to_ids(&self, g: &Graph) -> Vec<String> {
        self.elements.iter().map(|&i| g.element(i).id()).collect()
    }

    /// Whether the elements are pairwise non-adjacent in `g`.
    pub fn is_independent(&self, g: &Graph) -> bool {
        self.elements.iter().enumerate().all(|(k, &i)| {
            self.elements[k + 1..]
                .iter()
                .all(|&j| i != j && !g.adjacent_indices(i, j))
        })
    }
}

fn conflict_masks(g: &Graph, limit: usize) -> Result<Vec<u128>> {
    let dim = g.dim();
    let limit = limit.min(HARD_ELEMENT_LIMIT);
    if dim > limit {
        return Err(Error::LimitExceeded {
            what: "element count",
            actual: dim,
            limit,
        });
    }
    Ok((0..dim)
        .map(|i| {
            (0..dim)
                .filter(|&j| j == i || g.adjacent_indices(i, j))
                .fold(0u128, |m, j| m | (1 << j))
        })
        .collect())
}

/// Visits every total matching of `g` in lexicographic order of the sorted
/// element index lists (the empty set first). The visitor also learns
/// whether the set is inclusion-maximal.
pub fn for_each_total_matching(
    g: &Graph,
    limit: usize,
    mut visit: impl FnMut(&[usize], bool),
) -> Result<()> {
    let masks = conflict_masks(g, limit)?;
    let full: u128 = if masks.len() == 128 { u128::MAX } else { (1u128 << masks.len()) - 1 };
    let mut current = Vec::new();
    dfs(&masks, full, 0, 0, &mut current, &mut visit);
    Ok(())
}

fn dfs(
    masks: &[u128],
    full: u128,
    start: usize,
    blocked: u128,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize], bool),
) {
    visit(current, blocked == full);
    for i in start..masks.len() {
        if blocked & (1 << i) == 0 {
            current.push(i);
            dfs(masks, full, i + 1, blocked | masks[i], current, visit);
            current.pop();
        }
    }
}

pub fn enumerate_total_matchings(g: &Graph, mode: Mode, limit: usize) -> Result<Vec<TotalMatching>> {
    let mut out = Vec::new();
    let mut best = 0;
    for_each_total_matching(g, limit, |set, maximal| {
        let keep = match mode {
            Mode::All => true,
            Mode::Maximal => maximal,
            Mode::Maximum => {
                if set.len() > best {
                    best = set.len();
                    out.clear();
                }
                set.len() == best
            }
        };
        if keep {
            out.push(TotalMatching {
                elements: set.to_vec(),
            });
        }
    })?;
    Ok(out)
}

/// Maximum size of a total matching.
pub fn nu_t(g: &Graph, limit: usize) -> Result<usize> {
    let mut best = 0;
    for_each_total_matching(g, limit, |set, _| best = best.max(set.len()))?;
    Ok(best)
}

/// Exhaustive maximum-weight total matching. Ties go to the lexicographically
/// smallest element set.
pub fn max_weight_total_matching_bruteforce(
    g: &Graph,
    w: &[Rational],
    limit: usize,
) -> Result<(Rational, TotalMatching)> {
    if w.len() != g.dim() {
        return Err(Error::Dimension {
            expected: g.dim(),
            actual: w.len(),
        });
    }
    let mut best: Option<(Rational, Vec<usize>)> = None;
    for_each_total_matching(g, limit, |set, _| {
        let v: Rational = set.iter().map(|&i| &w[i]).sum();
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, set.to_vec()));
        }
    })?;
    let (v, elements) = best.expect("the empty set is always a total matching");
    Ok((v, TotalMatching { elements }))
}

/// Parses a weight file: one `<element-id> <p>/<q>` line per element.
pub fn parse_weights(g: &Graph, text: &str) -> Result<Vec<Rational>> {
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let mut w: Vec<Option<Rational>> = vec![None; g.dim()];
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(perr(lineno, "expected `<element-id> <p>/<q>`".into()));
        }
        let i = Element::parse_id(toks[0])
            .and_then(|d| g.element_index(d))
            .ok_or_else(|| perr(lineno, format!("unknown element `{}`", toks[0])))?;
        let value = parse_rational(toks[1]).ok_or_else(|| perr(lineno, format!("bad rational `{}`", toks[1])))?;
        if w[i].replace(value).is_some() {
            return Err(perr(lineno, format!("duplicate weight for `{}`", toks[0])));
        }
    }
    let missing: Vec<String> = w
        .iter()
        .enumerate()
        .filter(|(_, x)| x.is_none())
        .map(|(i, _)| g.element(i).id())
        .collect();
    if !missing.is_empty() {
        return Err(perr(last.max(1), format!("missing weights for {}", missing.join(", "))));
    }
    Ok(w.into_iter().map(Option::unwrap).collect())
}

pub fn format_weights(g: &Graph, w: &[Rational]) -> String {
    g.elements()
        .iter()
        .zip(w)
        .map(|(d, x)| format!("{} {}\n", d.id(), x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{rat, ratio};
    use crate::graph::{complete, make_complete_bipartite, path, Graph};
    use proptest::prelude::*;

    /// Independent oracle: filter the full power set.
    fn power_set_matchings(g: &Graph) -> Vec<Vec<usize>> {
        let d = g.dim();
        let mut out = Vec::new();
        for mask in 0u32..(1 << d) {
            let set: Vec<usize> = (0..d).filter(|&i| mask & (1 << i) != 0).collect();
            let ok = set
                .iter()
                .enumerate()
                .all(|(k, &i)| set[k + 1..].iter().all(|&j| !g.adjacent_indices(i, j)));
            if ok {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn single_edge_matchings() {
        let g = make_complete_bipartite(1, 1).unwrap();
        let all = enumerate_total_matchings(&g, Mode::All, DEFAULT_ELEMENT_LIMIT).unwrap();
        let sets: Vec<Vec<usize>> = all.into_iter().map(|t| t.elements).collect();
        assert_eq!(sets, vec![vec![], vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn dfs_agrees_with_power_set() {
        for g in [
            make_complete_bipartite(2, 2).unwrap(),
            make_complete_bipartite(2, 3).unwrap(),
            complete(4),
            path(5),
        ] {
            let dfs: Vec<Vec<usize>> = enumerate_total_matchings(&g, Mode::All, 24)
                .unwrap()
                .into_iter()
                .map(|t| t.elements)
                .collect();
            assert_eq!(dfs, power_set_matchings(&g));
        }
    }

    #[test]
    fn triangle_and_path() {
        let k3 = complete(3);
        let max = enumerate_total_matchings(&k3, Mode::Maximum, 24).unwrap();
        assert!(max.iter().all(|t| t.len() == 2));
        // {v1, e2-3} is one of them
        assert!(max.contains(&TotalMatching { elements: vec![0, 5] }));
        assert_eq!(nu_t(&k3, 24).unwrap(), 2);
        // path a-b-c-d: {a, d, e(b,c)} is independent and nothing larger is
        let p4 = path(4);
        assert!(TotalMatching { elements: vec![0, 3, 5] }.is_independent(&p4));
        let best = power_set_matchings(&p4).iter().map(Vec::len).max().unwrap();
        assert_eq!(best, 3);
        assert_eq!(nu_t(&p4, 24).unwrap(), 3);
    }

    #[test]
    fn nu_t_spot_values() {
        for r in 2..=4 {
            assert_eq!(nu_t(&make_complete_bipartite(r, r).unwrap(), 24).unwrap(), r);
        }
        assert_eq!(nu_t(&make_complete_bipartite(2, 3).unwrap(), 24).unwrap(), 3);
    }

    #[test]
    fn limit_is_enforced() {
        let g = make_complete_bipartite(3, 4).unwrap();
        assert!(matches!(
            nu_t(&g, 18),
            Err(Error::LimitExceeded { actual: 19, limit: 18, .. })
        ));
    }

    #[test]
    fn weighted_examples() {
        let g = make_complete_bipartite(3, 3).unwrap();
        let ones = vec![rat(1); g.dim()];
        assert_eq!(max_weight_total_matching_bruteforce(&g, &ones, 24).unwrap().0, rat(3));
        let zeros = vec![rat(0); g.dim()];
        let (v, t) = max_weight_total_matching_bruteforce(&g, &zeros, 24).unwrap();
        assert_eq!(v, rat(0));
        assert!(t.is_empty());

        let k22 = make_complete_bipartite(2, 2).unwrap();
        let w: Vec<Rational> = (0..8).map(|i| if i < 4 { rat(1) } else { rat(10) }).collect();
        let (v, t) = max_weight_total_matching_bruteforce(&k22, &w, 24).unwrap();
        assert_eq!(v, rat(20));
        assert_eq!(t.len(), 2);
        assert!(t.elements.iter().all(|&i| i >= 4));
    }

    #[test]
    fn maximal_sets_are_maximal() {
        let g = make_complete_bipartite(2, 3).unwrap();
        let maximal = enumerate_total_matchings(&g, Mode::Maximal, 24).unwrap();
        for t in &maximal {
            for d in 0..g.dim() {
                if t.elements.contains(&d) {
                    continue;
                }
                let mut bigger = t.elements.clone();
                bigger.push(d);
                bigger.sort();
                assert!(!TotalMatching { elements: bigger }.is_independent(&g));
            }
        }
    }

    #[test]
    fn weight_file_round_trip_and_errors() {
        let g = make_complete_bipartite(1, 2).unwrap();
        let w = vec![rat(1), ratio(-1, 2), rat(0), ratio(7, 3), rat(4)];
        let text = format_weights(&g, &w);
        assert!(text.starts_with("v1 1\nv2 -1/2\n"));
        assert_eq!(parse_weights(&g, &text).unwrap(), w);
        assert!(matches!(parse_weights(&g, "v1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_weights(&g, "v9 1\n"), Err(Error::Parse { line: 1, .. })));
        let dup = format!("{}v1 2\n", text);
        assert!(matches!(parse_weights(&g, &dup), Err(Error::Parse { line: 6, .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn matchings_independent_and_maximum_sizes_agree(r in 1usize..=3, s in 1usize..=3) {
            let g = make_complete_bipartite(r, s).unwrap();
            for t in enumerate_total_matchings(&g, Mode::All, 24).unwrap() {
                prop_assert!(t.is_independent(&g));
            }
            let nu = nu_t(&g, 24).unwrap();
            for t in enumerate_total_matchings(&g, Mode::Maximum, 24).unwrap() {
                prop_assert_eq!(t.len(), nu);
            }
        }

        /// ν_T of an induced subgraph never exceeds ν_T of the graph.
        #[test]
        fn nu_t_monotone_under_vertex_deletion(n in 2usize..=6, edges in proptest::collection::vec(any::<bool>(), 15), drop in proptest::collection::vec(any::<bool>(), 6)) {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let g = Graph::new(n, pairs.zip(&edges).filter(|(_, &e)| e).map(|(p, _)| p)).unwrap();
            let keep: Vec<usize> = (0..n).filter(|&v| !drop[v]).collect();
            let sub = g.induced(&keep);
            prop_assert!(nu_t(&sub, 24).unwrap() <= nu_t(&g, 24).unwrap());
        }
    }
}
