//! Polynomial max-weight total matching on complete bipartite graphs and
//! separation oracles for biclique rows.

mod assignment;
mod separation;

pub use assignment::{max_value_assignment, min_cost_assignment};
pub use separation::{separate_balanced, separate_catalog, SeparationResult, DEFAULT_SEPARATION_LIMIT};

use num_traits::{Signed, Zero};

use crate::enumeration::TotalMatching;
use crate::error::{Error, Result};
use crate::geometry::{
    lp_solve, rat, HPolytope, LinearInequality, LpResult, Rational, Sense,
};
use crate::graph::{make_complete_bipartite, reduced_total_graph_cliques, Element, Graph, Side};

fn positive(x: &Rational) -> Rational {
    if x.is_positive() {
        x.clone()
    } else {
        Rational::zero()
    }
}

/// Best total matching of `K_{r,s}` that uses no vertex of `removed`.
///
/// Each kept vertex is a row of an assignment problem; columns are the
/// removed vertices (take the edge) followed by one self column per kept
/// vertex (take the vertex, or nothing).
pub fn solve_side(g: &Graph, w: &[Rational], removed: Side) -> (Rational, TotalMatching) {
    let kept = g.side_vertices(removed.other());
    let gone = g.side_vertices(removed);
    let k = kept.len();
    let edge = |v: usize, u: usize| g.element_index(Element::edge(v, u)).expect("complete bipartite");
    let mut value = vec![vec![Rational::zero(); gone.len() + k]; k];
    for (i, &v) in kept.iter().enumerate() {
        for (j, &u) in gone.iter().enumerate() {
            value[i][j] = positive(&w[edge(v, u)]);
        }
        value[i][gone.len() + i] = positive(&w[v]);
    }
    let (assign, total) = max_value_assignment(&value);
    let mut elements = Vec::new();
    for (i, &j) in assign.iter().enumerate() {
        let v = kept[i];
        let d = if j < gone.len() { edge(v, gone[j]) } else if j == gone.len() + i { v } else { continue };
        if w[d].is_positive() {
            elements.push(d);
        }
    }
    elements.sort_unstable();
    (total, TotalMatching { elements })
}

/// Exact maximum-weight total matching of `K_{r,s}`. Every total matching
/// avoids the vertices of at least one side, so the better of the two
/// side-restricted optima is the answer.
pub fn solve_kbipartite(r: usize, s: usize, w: &[Rational]) -> Result<(Rational, TotalMatching)> {
    let g = make_complete_bipartite(r, s)?;
    if w.len() != g.dim() {
        return Err(Error::Dimension {
            expected: g.dim(),
            actual: w.len(),
        });
    }
    let a = solve_side(&g, w, Side::B);
    let b = solve_side(&g, w, Side::A);
    Ok(if b.0 > a.0 { b } else { a })
}

/// LP over the clique rows of `T(K_{r,s})` minus the `removed` side, with
/// nonnegativity and the removed vertices fixed to zero.
pub fn clique_lp(r: usize, s: usize, removed: Side, objective: &[Rational]) -> Result<LpResult> {
    let g = make_complete_bipartite(r, s)?;
    let d = g.dim();
    let mut rows = Vec::new();
    for clique in reduced_total_graph_cliques(r, s, removed)? {
        let mut c = vec![Rational::zero(); d];
        for i in clique {
            c[i] = rat(1);
        }
        rows.push(LinearInequality::le(c, rat(1)));
    }
    for i in 0..d {
        rows.push(LinearInequality::nonneg(d, i));
    }
    for v in g.side_vertices(removed) {
        let mut c = vec![Rational::zero(); d];
        c[v] = rat(1);
        rows.push(LinearInequality::eq(c, Rational::zero()));
    }
    lp_solve(&HPolytope::new(g.element_ids(), rows)?, objective, Sense::Max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{max_weight_total_matching_bruteforce, DEFAULT_ELEMENT_LIMIT};
    use crate::geometry::{rat, ratio};
    use num_traits::One;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn examples() {
        assert_eq!(solve_kbipartite(3, 3, &vec![rat(1); 15]).unwrap().0, rat(3));
        let (v, t) = solve_kbipartite(2, 3, &vec![rat(1); 11]).unwrap();
        assert_eq!(v, rat(3));
        assert_eq!(t.len(), 3);
        assert!(t.is_independent(&make_complete_bipartite(2, 3).unwrap()));
        let mut w = vec![rat(1); 8];
        for x in &mut w[4..] {
            *x = rat(10);
        }
        assert_eq!(solve_kbipartite(2, 2, &w).unwrap().0, rat(20));
        let (v, t) = solve_kbipartite(2, 2, &vec![rat(-1); 8]).unwrap();
        assert!(v.is_zero() && t.is_empty());
        assert!(solve_kbipartite(2, 2, &[rat(1)]).is_err());
    }

    #[test]
    fn random_against_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (r, s) in [(1, 1), (1, 4), (2, 3), (3, 3), (2, 5)] {
            let g = make_complete_bipartite(r, s).unwrap();
            for _ in 0..30 {
                let w: Vec<Rational> = (0..g.dim()).map(|_| ratio(rng.gen_range(-6..10), rng.gen_range(1..4))).collect();
                let (v, t) = solve_kbipartite(r, s, &w).unwrap();
                let (bv, _) = max_weight_total_matching_bruteforce(&g, &w, DEFAULT_ELEMENT_LIMIT).unwrap();
                assert_eq!(v, bv);
                assert!(t.is_independent(&g));
                assert_eq!(t.weight(&w), v);
            }
        }
    }

    #[test]
    fn clique_lp_is_integral() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = make_complete_bipartite(2, 3).unwrap();
        for removed in [Side::A, Side::B] {
            for _ in 0..10 {
                let w: Vec<Rational> = (0..g.dim()).map(|_| rat(rng.gen_range(-3..8))).collect();
                let lp = clique_lp(2, 3, removed, &w).unwrap();
                assert_eq!(lp.value.clone().unwrap(), solve_side(&g, &w, removed).0);
                assert!(lp.point.unwrap().iter().all(|x| x.is_integer() && (x.is_zero() || x.is_one())));
            }
        }
    }
}
