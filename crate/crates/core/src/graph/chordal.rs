use std::collections::VecDeque;

use super::Graph;

/// Outcome of a chordality test. Both variants carry a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// Vertices in perfect elimination order.
    Chordal(Vec<usize>),
    /// A chordless cycle of length at least four, listed in cycle order.
    Hole(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

// Exhaustive odd-hole search is only attempted below these sizes.
const ODD_HOLE_SEARCH_MAX_VERTICES: usize = 40;
const ODD_HOLE_SEARCH_BUDGET: usize = 2_000_000;

/// Maximum cardinality search followed by perfect-elimination verification.
///
/// On failure the witness is an odd hole when one is found by a bounded
/// exhaustive search (shortest first), otherwise any hole.
pub fn is_chordal(g: &Graph) -> Chordality {
    let peo = mcs_elimination_order(g);
    if verify_peo(g, &peo) {
        return Chordality::Chordal(peo);
    }
    if g.vertex_count() <= ODD_HOLE_SEARCH_MAX_VERTICES {
        if let Some(h) = shortest_odd_hole(g) {
            return Chordality::Hole(h);
        }
    }
    Chordality::Hole(any_hole(g).expect("non-chordal graph has a hole"))
}

/// Reverse of the MCS visit order; ties go to the smallest index.
fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

fn verify_peo(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
            return false;
        }
    }
    true
}

/// For some vertex with two non-adjacent neighbours `a`, `b`, a shortest
/// `a`-`b` path avoiding the rest of its closed neighbourhood closes a hole.
fn any_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for v in 0..n {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in nb {
                    blocked[w] = w != a && w != b;
                }
                if let Some(p) = bfs_path(g, a, b, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(p);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn bfs_path(g: &Graph, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Iterative deepening over induced paths whose first vertex is the smallest
/// on the cycle. Returns `None` when no odd hole exists or the budget runs out.
fn shortest_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut budget = ODD_HOLE_SEARCH_BUDGET;
    let mut len = 5;
    while len <= n {
        for s in 0..n {
            let mut path = vec![s];
            match extend_hole(g, &mut path, len, &mut budget) {
                Search::Found => return Some(path),
                Search::Exhausted => return None,
                Search::NotFound => {}
            }
        }
        len += 2;
    }
    None
}

enum Search {
    Found,
    NotFound,
    Exhausted,
}

fn extend_hole(g: &Graph, path: &mut Vec<usize>, len: usize, budget: &mut usize) -> Search {
    if *budget == 0 {
        return Search::Exhausted;
    }
    *budget -= 1;
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        // w may touch only `last` among internal vertices, and `s` only when closing.
        let inner = path.get(1..path.len() - 1).unwrap_or(&[]);
        let touches_inner = inner.iter().any(|&p| g.has_edge(p, w));
        if touches_inner {
            continue;
        }
        let closes = path.len() >= 2 && g.has_edge(s, w);
        if path.len() + 1 == len {
            if closes && path.len() >= 3 {
                path.push(w);
                return Search::Found;
            }
        } else if !closes {
            path.push(w);
            match extend_hole(g, path, len, budget) {
                Search::NotFound => {
                    path.pop();
                }
                other => return other,
            }
        }
    }
    Search::NotFound
}
