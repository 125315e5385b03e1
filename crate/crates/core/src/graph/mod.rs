//! Simple undirected graphs, their elements (vertices and edges) and total graphs.
//!
//! Every vector in this crate is indexed by the canonical element order of a
//! graph: all vertices by index, then all edges in lexicographic endpoint order.

mod chordal;
mod cliques;
mod trees;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub use chordal::{is_chordal, Chordality};
pub use cliques::{maximal_cliques, reduced_total_graph_cliques};
pub use trees::{nonisomorphic_trees, tree_from_prufer};

/// Side of a vertex in a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A vertex or an edge of a graph. Edge endpoints are stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(usize),
    Edge(usize, usize),
}

impl Element {
    pub fn edge(u: usize, v: usize) -> Element {
        if u < v {
            Element::Edge(u, v)
        } else {
            Element::Edge(v, u)
        }
    }

    /// Canonical textual id: `v<i>` or `e<i>-<j>`, 1-based.
    pub fn id(&self) -> String {
        match *self {
            Element::Vertex(v) => format!("v{}", v + 1),
            Element::Edge(u, v) => format!("e{}-{}", u + 1, v + 1),
        }
    }

    /// Inverse of [`Element::id`].
    pub fn parse_id(s: &str) -> Option<Element> {
        if let Some(rest) = s.strip_prefix('v') {
            let i: usize = rest.parse().ok()?;
            return (i >= 1).then(|| Element::Vertex(i - 1));
        }
        let rest = s.strip_prefix('e')?;
        let (a, b) = rest.split_once('-')?;
        let (a, b): (usize, usize) = (a.parse().ok()?, b.parse().ok()?);
        (a >= 1 && b >= 1 && a != b).then(|| Element::edge(a - 1, b - 1))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
    neighbors: Vec<Vec<usize>>,
    sides: Option<Vec<Side>>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, duplicates and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Graph(format!("loop at vertex {}", u + 1)));
            }
            if u >= n || v >= n {
                return Err(Error::Graph(format!(
                    "edge {}-{} out of range for {} vertices",
                    u + 1,
                    v + 1,
                    n
                )));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Graph(format!(
                "duplicate edge {}-{}",
                w[0].0 + 1,
                w[0].1 + 1
            )));
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &list {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        let edge_index = list.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(Graph {
            n,
            edges: list,
            edge_index,
            neighbors,
            sides: None,
        })
    }

    /// Attaches a bipartition; every edge must cross it.
    pub fn with_bipartition(mut self, sides: Vec<Side>) -> Result<Graph> {
        if sides.len() != self.n {
            return Err(Error::Graph(format!(
                "bipartition covers {} of {} vertices",
                sides.len(),
                self.n
            )));
        }
        if let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| sides[u] == sides[v]) {
            return Err(Error::Graph(format!(
                "edge {}-{} violates the bipartition",
                u + 1,
                v + 1
            )));
        }
        self.sides = Some(sides);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of elements, `n + m`.
    pub fn dim(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index.contains_key(&(u.min(v), u.max(v)))
    }

    pub fn sides(&self) -> Option<&[Side]> {
        self.sides.as_deref()
    }

    /// Vertices on one side of the bipartition, in index order.
    pub fn side_vertices(&self, side: Side) -> Vec<usize> {
        match &self.sides {
            Some(s) => (0..self.n).filter(|&v| s[v] == side).collect(),
            None => Vec::new(),
        }
    }

    /// Edges incident to `v`, as element indices.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        self.neighbors[v]
            .iter()
            .map(|&w| self.n + self.edge_index[&(v.min(w), v.max(w))])
            .collect()
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> Vec<Element> {
        (0..self.n)
            .map(Element::Vertex)
            .chain(self.edges.iter().map(|&(u, v)| Element::Edge(u, v)))
            .collect()
    }

    pub fn element(&self, index: usize) -> Element {
        if index < self.n {
            Element::Vertex(index)
        } else {
            let (u, v) = self.edges[index - self.n];
            Element::Edge(u, v)
        }
    }

    pub fn element_index(&self, d: Element) -> Option<usize> {
        match d {
            Element::Vertex(v) => (v < self.n).then_some(v),
            Element::Edge(u, v) => self.edge_index.get(&(u, v)).map(|i| self.n + i),
        }
    }

    pub fn element_ids(&self) -> Vec<String> {
        self.elements().iter().map(Element::id).collect()
    }

    /// Element adjacency: adjacent vertices, incident edges, or an edge and
    /// one of its endpoints.
    pub fn adjacent(&self, d: Element, d2: Element) -> Result<bool> {
        for x in [d, d2] {
            if self.element_index(x).is_none() {
                return Err(Error::UnknownElement(x.id()));
            }
        }
        Ok(self.adjacent_unchecked(d, d2))
    }

    fn adjacent_unchecked(&self, d: Element, d2: Element) -> bool {
        use Element::*;
        if d == d2 {
            return false;
        }
        match (d, d2) {
            (Vertex(a), Vertex(b)) => self.has_edge(a, b),
            (Vertex(a), Edge(u, v)) | (Edge(u, v), Vertex(a)) => a == u || a == v,
            (Edge(a, b), Edge(u, v)) => a == u || a == v || b == u || b == v,
        }
    }

    /// Adjacency by canonical element index.
    pub fn adjacent_indices(&self, i: usize, j: usize) -> bool {
        self.adjacent_unchecked(self.element(i), self.element(j))
    }

    /// The total graph: one vertex per element (canonical order), joined when
    /// the elements are adjacent.
    pub fn total_graph(&self) -> Graph {
        let dim = self.dim();
        let mut edges = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                if self.adjacent_indices(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(dim, edges).expect("total graph is simple")
    }

    /// Subgraph induced by `keep` (relabelled to `0..keep.len()` in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(u, v)| Some((*pos.get(u)?, *pos.get(v)?)));
        Graph::new(keep.len(), edges).expect("induced subgraph is simple")
    }

    /// True when connected with `m = n - 1`.
    pub fn is_tree(&self) -> bool {
        if self.n == 0 || self.edges.len() + 1 != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Serializes to the `p tm` graph file format.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("p tm {} {}\n", self.n, self.edges.len());
        if let Some(sides) = &self.sides {
            let k = sides.iter().take_while(|&&s| s == Side::A).count();
            if sides[k..].iter().all(|&s| s == Side::B) {
                out.push_str(&format!("b {}\n", k));
            }
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

/// `K_{r,s}` with side A on vertices `0..r` and side B on `r..r+s`.
pub fn make_complete_bipartite(r: usize, s: usize) -> Result<Graph> {
    if r == 0 || s == 0 {
        return Err(Error::Graph(format!("K_{{{},{}}} needs both sides nonempty", r, s)));
    }
    let edges = (0..r).flat_map(|i| (0..s).map(move |j| (i, r + j)));
    let sides = (0..r + s).map(|v| if v < r { Side::A } else { Side::B }).collect();
    Graph::new(r + s, edges)?.with_bipartition(sides)
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Graph(format!("cycle needs at least 3 vertices, got {}", n)));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    Graph::new(k + 1, (1..=k).map(|i| (0, i))).expect("star is simple")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("complete graph is simple")
}

/// Parses the `p tm <n> <m>` graph file format (1-based vertices).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let mut header: Option<(usize, usize, usize)> = None;
    let mut side_a: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(perr(lineno, "duplicate header".into()));
                }
                if toks.len() != 4 || toks[1] != "tm" {
                    return Err(perr(lineno, "malformed header, expected `p tm <n> <m>`".into()));
                }
                let n = toks[2]
                    .parse()
                    .map_err(|_| perr(lineno, format!("bad vertex count `{}`", toks[2])))?;
                let m = toks[3]
                    .parse()
                    .map_err(|_| perr(lineno, format!("bad edge count `{}`", toks[3])))?;
                header = Some((n, m, lineno));
            }
            "b" => {
                let (n, _, _) = header.ok_or_else(|| perr(lineno, "`b` line before header".into()))?;
                if side_a.is_some() || !edges.is_empty() {
                    return Err(perr(lineno, "`b` line must precede edges and appear once".into()));
                }
                if toks.len() != 2 {
                    return Err(perr(lineno, "malformed bipartition line, expected `b <k>`".into()));
                }
                let k: usize = toks[1]
                    .parse()
                    .map_err(|_| perr(lineno, format!("bad side size `{}`", toks[1])))?;
                if k > n {
                    return Err(perr(lineno, format!("side size {} exceeds {} vertices", k, n)));
                }
                side_a = Some(k);
            }
            "e" => {
                let (n, _, _) = header.ok_or_else(|| perr(lineno, "edge before header".into()))?;
                if toks.len() != 3 {
                    return Err(perr(lineno, "malformed edge line, expected `e <u> <v>`".into()));
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&toks[1..]) {
                    let x: usize = tok
                        .parse()
                        .map_err(|_| perr(lineno, format!("bad vertex `{}`", tok)))?;
                    if x == 0 || x > n {
                        return Err(perr(lineno, format!("vertex {} out of range 1..{}", x, n)));
                    }
                    *slot = x - 1;
                }
                let (u, v) = (ends[0], ends[1]);
                if u == v {
                    return Err(perr(lineno, format!("loop at vertex {}", u + 1)));
                }
                let key = (u.min(v), u.max(v));
                if let Some(prev) = seen.insert(key, lineno) {
                    return Err(perr(
                        lineno,
                        format!("duplicate edge {}-{} (first on line {})", u + 1, v + 1, prev),
                    ));
                }
                if let Some(k) = side_a {
                    if (u < k) == (v < k) {
                        return Err(perr(
                            lineno,
                            format!("edge {}-{} violates the bipartition", u + 1, v + 1),
                        ));
                    }
                }
                edges.push((u, v));
            }
            other => return Err(perr(lineno, format!("unknown line type `{}`", other))),
        }
    }

    let (n, m, hline) = header.ok_or_else(|| perr(last_line.max(1), "missing header".into()))?;
    if edges.len() != m {
        return Err(perr(
            hline,
            format!("header declares {} edges, found {}", m, edges.len()),
        ));
    }
    let g = Graph::new(n, edges).map_err(|e| perr(hline, e.to_string()))?;
    match side_a {
        Some(k) => g
            .with_bipartition((0..n).map(|v| if v < k { Side::A } else { Side::B }).collect())
            .map_err(|e| perr(hline, e.to_string())),
        None => Ok(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Element::*;

    #[test]
    fn complete_bipartite_shapes() {
        let g = make_complete_bipartite(2, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        let g = make_complete_bipartite(2, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        let g = make_complete_bipartite(1, 1).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.side_vertices(Side::A), vec![0]);
        assert_eq!(g.side_vertices(Side::B), vec![1]);
        assert!(make_complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn parse_examples() {
        let g = parse_graph("p tm 2 1\ne 1 2").unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        let g = parse_graph("c triangle\np tm 3 3\ne 1 2\ne 2 3\ne 1 3").unwrap();
        assert_eq!(g, complete(3));
        let err = parse_graph("p tm 3 1\ne 1 5").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("p tm x 1\ne 1 2", 1),
            ("p tm 3 2\ne 1 2\ne 2 1", 3),
            ("p tm 3 1\ne 2 2", 2),
            ("p tm 4 1\nb 2\ne 1 2", 3),
            ("p tm 3 2\ne 1 2", 1),
            ("e 1 2", 1),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn file_round_trip_keeps_bipartition() {
        let g = make_complete_bipartite(2, 3).unwrap();
        let h = parse_graph(&g.to_file_string()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn element_order() {
        let g = make_complete_bipartite(1, 1).unwrap();
        assert_eq!(g.elements(), vec![Vertex(0), Vertex(1), Edge(0, 1)]);
        assert_eq!(make_complete_bipartite(2, 2).unwrap().elements().len(), 8);
        let empty = Graph::new(3, []).unwrap();
        assert_eq!(empty.elements(), vec![Vertex(0), Vertex(1), Vertex(2)]);
        for (i, d) in g.elements().into_iter().enumerate() {
            assert_eq!(g.element_index(d), Some(i));
            assert_eq!(Element::parse_id(&d.id()), Some(d));
        }
    }

    #[test]
    fn adjacency_examples() {
        let g = make_complete_bipartite(1, 1).unwrap();
        assert!(g.adjacent(Vertex(0), Edge(0, 1)).unwrap());
        let p = path(4);
        assert!(!p.adjacent(Vertex(0), Edge(2, 3)).unwrap());
        let k = make_complete_bipartite(2, 2).unwrap();
        assert!(!k.adjacent(Edge(0, 2), Edge(1, 3)).unwrap());
        assert!(k.adjacent(Vertex(0), Vertex(3)).unwrap());
        assert!(!k.adjacent(Vertex(0), Vertex(1)).unwrap());
        assert!(matches!(
            p.adjacent(Vertex(0), Edge(0, 2)),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn adjacency_symmetric_irreflexive() {
        for g in [make_complete_bipartite(2, 3).unwrap(), complete(4), path(5), star(3)] {
            let els = g.elements();
            for &a in &els {
                assert!(!g.adjacent(a, a).unwrap());
                for &b in &els {
                    assert_eq!(g.adjacent(a, b).unwrap(), g.adjacent(b, a).unwrap());
                }
            }
        }
    }

    /// Edge count of T(G) is m + #incident edge pairs + 2m.
    fn total_edge_formula(g: &Graph) -> usize {
        let pairs: usize = (0..g.vertex_count())
            .map(|v| {
                let d = g.neighbors(v).len();
                d * d.saturating_sub(1) / 2
            })
            .sum();
        3 * g.edge_count() + pairs
    }

    #[test]
    fn total_graph_counts() {
        let t = make_complete_bipartite(1, 1).unwrap().total_graph();
        assert_eq!(t, complete(3));
        let t = make_complete_bipartite(2, 2).unwrap().total_graph();
        assert_eq!((t.vertex_count(), t.edge_count()), (8, 16));
        let t = path(3).total_graph();
        assert_eq!(t.vertex_count(), 5);
        for g in [make_complete_bipartite(2, 3).unwrap(), complete(5), path(6), star(4)] {
            let t = g.total_graph();
            assert_eq!(t.vertex_count(), g.dim());
            assert_eq!(t.edge_count(), total_edge_formula(&g));
        }
    }

    #[test]
    fn tree_detection() {
        assert!(path(5).is_tree());
        assert!(star(3).is_tree());
        assert!(!complete(3).is_tree());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_tree());
    }
}
