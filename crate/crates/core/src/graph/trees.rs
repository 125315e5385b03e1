use std::collections::BTreeMap;

use super::Graph;

/// Labelled tree on `seq.len() + 2` vertices from a Prüfer sequence.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple tree")
}

/// One representative per isomorphism class of trees on `n` vertices,
/// ordered by canonical encoding. Exhaustive over Prüfer sequences, so only
/// meant for small `n`.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Graph::new(1, []).unwrap()],
        2 => return vec![Graph::new(2, [(0, 1)]).unwrap()],
        _ => {}
    }
    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let t = tree_from_prufer(&seq);
        classes.entry(canonical_form(&t)).or_insert(t);
        // odometer increment
        let mut i = 0;
        while i < seq.len() {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            break;
        }
    }
    classes.into_values().collect()
}

/// AHU encoding rooted at the center; bicentral trees take the smaller of
/// the two rootings.
fn canonical_form(t: &Graph) -> String {
    centers(t)
        .into_iter()
        .map(|c| encode(t, c, usize::MAX))
        .min()
        .unwrap()
}

fn encode(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(t, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| t.neighbors(v).len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        // number of unlabelled trees: 1, 1, 1, 2, 3, 6, 11, 23
        let counts: Vec<usize> = (1..=8).map(|n| nonisomorphic_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn outputs_are_trees() {
        for n in 1..=7 {
            for t in nonisomorphic_trees(n) {
                assert!(t.is_tree());
                assert_eq!(t.vertex_count(), n);
            }
        }
    }
}
