use super::{make_complete_bipartite, Graph, Side};
use crate::error::Result;

/// All inclusion-maximal cliques (Bron–Kerbosch with Tomita pivoting).
/// Each clique is sorted; the list is in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p: Vec<usize> = (0..g.vertex_count()).collect();
    bron_kerbosch(g, &mut r, p, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
        .unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    let (mut p, mut x) = (p, x);
    for v in candidates {
        let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Maximal cliques of `T(K_{r,s})` minus the vertices of side `removed`,
/// built directly from the graph structure: `{v} ∪ δ(v)` for every kept
/// vertex `v`, and `δ(w)` for every removed vertex `w`.
///
/// Cliques are sets of element indices of `K_{r,s}` (canonical order). When
/// the kept side is a single vertex, each `δ(w)` is one edge already inside
/// that vertex's clique and is dropped, so only `r + s` sets are returned
/// when the kept side has at least two vertices.
pub fn reduced_total_graph_cliques(r: usize, s: usize, removed: Side) -> Result<Vec<Vec<usize>>> {
    let g = make_complete_bipartite(r, s)?;
    let kept = g.side_vertices(removed.other());
    let gone = g.side_vertices(removed);
    let mut out = Vec::with_capacity(r + s);
    for &v in &kept {
        let mut c = vec![v];
        c.extend(g.incident_edges(v));
        c.sort_unstable();
        out.push(c);
    }
    if kept.len() >= 2 {
        for &w in &gone {
            let mut c = g.incident_edges(w);
            c.sort_unstable();
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, star};

    #[test]
    fn small_examples() {
        assert_eq!(maximal_cliques(&complete(3)), vec![vec![0, 1, 2]]);
        let c4 = maximal_cliques(&cycle(4).unwrap());
        assert_eq!(c4.len(), 4);
        assert!(c4.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn star_total_graph_cliques() {
        // elements: center 0, leaves 1..3, edges 4..6 = (0,1),(0,2),(0,3)
        let g = star(3);
        let got = maximal_cliques(&g.total_graph());
        let mut want = vec![vec![0, 4, 5, 6], vec![0, 1, 4], vec![0, 2, 5], vec![0, 3, 6]];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn reduced_examples() {
        let c = reduced_total_graph_cliques(2, 2, Side::B).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.iter().filter(|k| k.len() == 3).count(), 2);
        assert_eq!(c.iter().filter(|k| k.len() == 2).count(), 2);
        assert_eq!(reduced_total_graph_cliques(2, 3, Side::B).unwrap().len(), 5);
    }

    /// Agreement with generic enumeration on the reduced total graph.
    #[test]
    fn reduced_matches_generic_enumeration() {
        for r in 1..=4 {
            for s in 1..=4 {
                for removed in [Side::A, Side::B] {
                    let g = make_complete_bipartite(r, s).unwrap();
                    let gone = g.side_vertices(removed);
                    let keep: Vec<usize> = (0..g.dim()).filter(|i| !gone.contains(i)).collect();
                    let reduced = g.total_graph().induced(&keep);
                    let mut generic: Vec<Vec<usize>> = maximal_cliques(&reduced)
                        .into_iter()
                        .map(|c| c.into_iter().map(|i| keep[i]).collect())
                        .collect();
                    generic.sort();
                    let mut structural = reduced_total_graph_cliques(r, s, removed).unwrap();
                    structural.sort();
                    assert_eq!(generic, structural, "K{r},{s} minus {removed:?}");
                    let kept = if removed == Side::A { s } else { r };
                    if kept >= 2 {
                        assert_eq!(structural.len(), r + s);
                    }
                }
            }
        }
    }
}
