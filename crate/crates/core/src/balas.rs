//! Disjunctive extended formulation of `P_T(K_{r,s})` and its projection.
//!
//! `P_T(K_{r,s})` is the convex hull of `P_A` (side `B` vertices unused) and
//! `P_B` (side `A` vertices unused). The lifted space is
//! `(x, y, λ₁, y¹)`; the projection cone has coordinates
//! `(u¹ over V, u² over V, u¹ over E, u² over E, u^{λ1}, u^{λ2})`.

use std::collections::HashSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{
    dd_rays, integer_row, is_implied, lp_solve, rank, rat, Family, HPolytope, LinearInequality, LpStatus,
    Rational, Relation, Sense,
};
use crate::graph::{make_complete_bipartite, Element, Graph, Side};

/// A point of the lifted space, length `n + 2m + 1`.
pub type ExtendedVector = Vec<Rational>;

/// A point of the projection cone, length `2(n + m + 1)`.
pub type ConeRay = Vec<Rational>;

fn unit(d: usize, i: usize) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); d];
    c[i] = Rational::one();
    c
}

fn side_of(g: &Graph, v: usize) -> Side {
    g.sides().expect("complete bipartite graphs carry a bipartition")[v]
}

fn disjunct(g: &Graph, keep: Side) -> Result<HPolytope> {
    let (n, d) = (g.vertex_count(), g.dim());
    let mut rows = Vec::new();
    for v in 0..n {
        let mut c = vec![Rational::zero(); d];
        for e in g.incident_edges(v) {
            c[e] = Rational::one();
        }
        if side_of(g, v) == keep {
            c[v] = Rational::one();
            rows.push(LinearInequality::le(c, Rational::one()).tagged(Family::Node, format!("v{}", v + 1)));
        } else {
            rows.push(LinearInequality::le(c, Rational::one()).tagged(Family::Other, format!("star v{}", v + 1)));
        }
    }
    for i in 0..d {
        rows.push(LinearInequality::nonneg(d, i).tagged(Family::Nonneg, g.element(i).id()));
    }
    for v in (0..n).filter(|&v| side_of(g, v) != keep) {
        rows.push(LinearInequality::eq(unit(d, v), Rational::zero()).tagged(Family::Other, format!("v{} = 0", v + 1)));
    }
    HPolytope::new(g.element_ids(), rows)
}

/// `P_A` and `P_B` embedded in the full element space of `K_{r,s}`.
pub fn build_pa_pb(r: usize, s: usize) -> Result<(HPolytope, HPolytope)> {
    let g = make_complete_bipartite(r, s)?;
    Ok((disjunct(&g, Side::A)?, disjunct(&g, Side::B)?))
}

/// Coordinate names of the lifted space.
pub fn lifted_space(g: &Graph) -> Vec<String> {
    let mut names: Vec<String> = g.elements().iter().map(|d| match d {
        Element::Vertex(_) => format!("x_{}", d.id()),
        Element::Edge(..) => format!("y_{}", d.id()),
    }).collect();
    names.push("l1".into());
    names.extend(g.edges().iter().map(|&(u, v)| format!("y1_{}", Element::edge(u, v).id())));
    names
}

/// Coordinate names of the projection cone.
pub fn cone_space(g: &Graph) -> Vec<String> {
    let n = g.vertex_count();
    let mut names = Vec::with_capacity(2 * (g.dim() + 1));
    for j in 1..=2 {
        names.extend((0..n).map(|v| format!("u{}_v{}", j, v + 1)));
    }
    for j in 1..=2 {
        names.extend(g.edges().iter().map(|&(u, v)| format!("u{}_{}", j, Element::edge(u, v).id())));
    }
    names.push("ul1".into());
    names.push("ul2".into());
    names
}

/// The lifted system `Q`. Each row's note is the name of its dual
/// multiplier; the `-x_v <= 0` rows are tagged as nonnegativity instead.
pub fn build_q(r: usize, s: usize) -> Result<HPolytope> {
    let g = make_complete_bipartite(r, s)?;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let len = n + 2 * m + 1;
    let lam = n + m;
    let y1 = |e: usize| n + m + 1 + e;
    let y = |e: usize| n + e;
    let side_a = g.side_vertices(Side::A);
    let side_b = g.side_vertices(Side::B);
    let star = |v: usize| -> Vec<usize> { g.incident_edges(v).into_iter().map(|i| i - n).collect() };
    let mut rows = Vec::new();
    let mut push = |c: Vec<Rational>, rhs: i64, label: String| {
        rows.push(LinearInequality::le(c, rat(rhs)).tagged(Family::Other, label));
    };

    for (group, vs) in [(0, &side_a), (1, &side_b)] {
        for &v in vs.iter() {
            let mut c = vec![Rational::zero(); len];
            if group == 0 {
                c[v] = rat(1);
            }
            for e in star(v) {
                c[y1(e)] = rat(1);
            }
            c[lam] = rat(-1);
            push(c, 0, format!("u1_v{}", v + 1));
        }
    }
    for (group, vs) in [(0, &side_b), (1, &side_a)] {
        for &v in vs.iter() {
            let mut c = vec![Rational::zero(); len];
            if group == 0 {
                c[v] = rat(1);
            }
            for e in star(v) {
                c[y(e)] = rat(1);
                c[y1(e)] = rat(-1);
            }
            c[lam] = rat(1);
            push(c, 1, format!("u2_v{}", v + 1));
        }
    }
    let edge_id = |e: usize| {
        let (u, v) = g.edges()[e];
        Element::edge(u, v).id()
    };
    for e in 0..m {
        let mut c = vec![Rational::zero(); len];
        c[y1(e)] = rat(-1);
        push(c, 0, format!("u1_{}", edge_id(e)));
    }
    for e in 0..m {
        let mut c = vec![Rational::zero(); len];
        c[y1(e)] = rat(1);
        c[y(e)] = rat(-1);
        push(c, 0, format!("u2_{}", edge_id(e)));
    }
    for v in 0..n {
        rows.push(LinearInequality::nonneg(len, v).tagged(Family::Nonneg, format!("v{}", v + 1)));
    }
    let mut c = vec![Rational::zero(); len];
    c[lam] = rat(-1);
    rows.push(LinearInequality::le(c, rat(0)).tagged(Family::Other, "ul1"));
    rows.push(LinearInequality::le(unit(len, lam), rat(1)).tagged(Family::Other, "ul2"));
    HPolytope::new(lifted_space(&g), rows)
}

fn with_fixed_xy(q: &HPolytope, z: &[Rational]) -> Result<HPolytope> {
    let mut rows = q.rows.clone();
    for (i, zi) in z.iter().enumerate() {
        rows.push(LinearInequality::eq(unit(q.dim(), i), zi.clone()));
    }
    HPolytope::new(q.space.clone(), rows)
}

/// A feasible point of `Q` projecting onto `z`, if `z ∈ P_T(K_{r,s})`.
pub fn lift_point(z: &[Rational], r: usize, s: usize) -> Result<ExtendedVector> {
    let q = build_q(r, s)?;
    let d = r + s + r * s;
    if z.len() != d {
        return Err(Error::Dimension {
            expected: d,
            actual: z.len(),
        });
    }
    let sys = with_fixed_xy(&q, z)?;
    let res = lp_solve(&sys, &vec![Rational::zero(); q.dim()], Sense::Max)?;
    match (res.status, res.point) {
        (LpStatus::Optimal, Some(p)) => Ok(p),
        _ => Err(Error::NoLift("point lies outside the total matching polytope".into())),
    }
}

/// Maximizes `objective · (x, y)` over `Q`; returns the value and the
/// `(x, y)` part of an optimal point.
pub fn solve_over_q(r: usize, s: usize, objective: &[Rational]) -> Result<(Rational, Vec<Rational>)> {
    let q = build_q(r, s)?;
    let d = r + s + r * s;
    if objective.len() != d {
        return Err(Error::Dimension {
            expected: d,
            actual: objective.len(),
        });
    }
    let mut c = objective.to_vec();
    c.resize(q.dim(), Rational::zero());
    let res = lp_solve(&q, &c, Sense::Max)?;
    match (res.status, res.value, res.point) {
        (LpStatus::Optimal, Some(v), Some(mut p)) => {
            p.truncate(d);
            Ok((v, p))
        }
        _ => Err(Error::Infeasible),
    }
}

/// `C_P`: one equality per edge, the balance equality, nonnegativity.
pub fn projection_cone(r: usize, s: usize) -> Result<HPolytope> {
    let g = make_complete_bipartite(r, s)?;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let len = 2 * (n + m + 1);
    let mut rows = Vec::new();
    for (e, &(v, w)) in g.edges().iter().enumerate() {
        let mut c = vec![Rational::zero(); len];
        c[v] = rat(1);
        c[w] = rat(1);
        c[2 * n + e] = rat(-1);
        c[n + v] = rat(-1);
        c[n + w] = rat(-1);
        c[2 * n + m + e] = rat(1);
        rows.push(LinearInequality::eq(c, rat(0)).tagged(Family::Other, format!("edge {}", Element::edge(v, w).id())));
    }
    let mut c = vec![Rational::zero(); len];
    for v in 0..n {
        c[v] = rat(1);
        c[n + v] = rat(-1);
    }
    c[len - 2] = rat(1);
    c[len - 1] = rat(-1);
    rows.push(LinearInequality::eq(c, rat(0)).tagged(Family::Other, "balance"));
    for i in 0..len {
        rows.push(LinearInequality::nonneg(len, i).tagged(Family::Nonneg, ""));
    }
    HPolytope::new(cone_space(&g), rows)
}

/// `{u >= 0 : uB = 0}` where `B` is the block of `Q`'s columns for `λ₁` and
/// `y¹`, with rows matched to cone coordinates through the multiplier labels.
pub fn cone_from_q(r: usize, s: usize) -> Result<HPolytope> {
    let g = make_complete_bipartite(r, s)?;
    let q = build_q(r, s)?;
    let space = cone_space(&g);
    let mut coord = vec![None; q.rows.len()];
    for (i, row) in q.rows.iter().enumerate() {
        if row.family == Family::Nonneg {
            continue;
        }
        let k = space
            .iter()
            .position(|name| *name == row.note)
            .ok_or_else(|| Error::NotACone(format!("row label `{}` has no cone coordinate", row.note)))?;
        coord[i] = Some(k);
    }
    let mut rows = Vec::new();
    for col in g.dim()..q.dim() {
        let mut c = vec![Rational::zero(); space.len()];
        for (i, row) in q.rows.iter().enumerate() {
            if let Some(k) = coord[i] {
                c[k] += &row.coeffs[col];
            } else if !row.coeffs[col].is_zero() {
                return Err(Error::NotACone("unlabeled row touches a lifted column".into()));
            }
        }
        rows.push(LinearInequality::eq(c, rat(0)));
    }
    for i in 0..space.len() {
        rows.push(LinearInequality::nonneg(space.len(), i));
    }
    HPolytope::new(space, rows)
}

fn check_ray(g: &Graph, u: &[Rational]) -> Result<()> {
    let len = 2 * (g.dim() + 1);
    if u.len() != len {
        return Err(Error::Dimension {
            expected: len,
            actual: u.len(),
        });
    }
    let (r, s) = (g.side_vertices(Side::A).len(), g.side_vertices(Side::B).len());
    let cone = projection_cone(r, s)?;
    if !cone.contains(u) {
        return Err(Error::NotACone("vector is not in the projection cone".into()));
    }
    Ok(())
}

struct RayParts<'a> {
    n: usize,
    m: usize,
    u: &'a [Rational],
}

impl RayParts<'_> {
    fn vert(&self, j: usize, v: usize) -> &Rational {
        &self.u[(j - 1) * self.n + v]
    }
    fn edge(&self, j: usize, e: usize) -> &Rational {
        &self.u[2 * self.n + (j - 1) * self.m + e]
    }
    fn lam(&self, j: usize) -> &Rational {
        &self.u[2 * (self.n + self.m) + j - 1]
    }
    fn vsum(&self, j: usize) -> Rational {
        (0..self.n).map(|v| self.vert(j, v)).sum()
    }
}

/// Both projected forms of a cone point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedRow {
    /// Edge coefficients `min_j(u^j_v + u^j_w)`, rhs `max_j Σ_V u^j`.
    pub strengthened: LinearInequality,
    /// `uA x <= ud` read off the `u²` multipliers directly.
    pub raw: LinearInequality,
}

/// Projects a cone point to an inequality over the element space.
pub fn ray_to_inequality(u: &[Rational], r: usize, s: usize) -> Result<ProjectedRow> {
    let g = make_complete_bipartite(r, s)?;
    check_ray(&g, u)?;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let p = RayParts { n, m, u };
    let mut strong = vec![Rational::zero(); n + m];
    let mut raw = vec![Rational::zero(); n + m];
    for v in 0..n {
        let j = if side_of(&g, v) == Side::A { 1 } else { 2 };
        strong[v] = p.vert(j, v).clone();
        raw[v] = p.vert(j, v).clone();
    }
    for (e, &(v, w)) in g.edges().iter().enumerate() {
        let a = p.vert(1, v) + p.vert(1, w);
        let b = p.vert(2, v) + p.vert(2, w);
        raw[n + e] = &b - p.edge(2, e);
        strong[n + e] = a.min(b);
    }
    let rhs_strong = p.vsum(1).max(p.vsum(2));
    let rhs_raw = p.vsum(2) + p.lam(2);
    Ok(ProjectedRow {
        strengthened: LinearInequality::le(strong, rhs_strong).tagged(Family::Projected, ""),
        raw: LinearInequality::le(raw, rhs_raw).tagged(Family::EfRaw, ""),
    })
}

fn is_trivial(row: &LinearInequality) -> bool {
    row.relation == Relation::Le && row.coeffs.iter().all(Zero::is_zero) && !row.rhs.is_negative()
}

/// Extreme rays of the projection cone, as coprime integer vectors.
pub fn cone_rays(r: usize, s: usize, dim_limit: usize) -> Result<Vec<ConeRay>> {
    dd_rays(&projection_cone(r, s)?, dim_limit)
}

/// Projects `Q` onto the element space through the extreme rays of its
/// projection cone, then removes implied rows.
pub fn project_q(r: usize, s: usize, dim_limit: usize) -> Result<HPolytope> {
    let g = make_complete_bipartite(r, s)?;
    let rays = cone_rays(r, s, dim_limit)?;
    let mut rows = Vec::new();
    for (k, u) in rays.iter().enumerate() {
        let row = ray_to_inequality(u, r, s)?.strengthened;
        if !is_trivial(&row) {
            rows.push(row.normalized().tagged(Family::Projected, format!("ray {}", k + 1)));
        }
    }
    for i in 0..g.dim() {
        rows.push(LinearInequality::nonneg(g.dim(), i).tagged(Family::Nonneg, g.element(i).id()));
    }
    let mut seen = HashSet::new();
    rows.retain(|row| seen.insert(row.key()));
    rows.sort_by_key(LinearInequality::key);
    let mut i = 0;
    while i < rows.len() {
        let mut rest = rows.clone();
        let row = rest.remove(i);
        if is_implied(&row, &HPolytope::new(g.element_ids(), rest)?)? {
            rows.remove(i);
        } else {
            i += 1;
        }
    }
    HPolytope::new(g.element_ids(), rows)
}

/// Whether the vertex part of `u` is supported by `2n - 1` linearly
/// independent tight constraints among `u^j_v = 0`, the edge balances
/// `u¹_v + u¹_w = u²_v + u²_w` and `Σ u¹ = Σ u²`.
pub fn vertex_part_in_y(u: &[Rational], r: usize, s: usize) -> Result<bool> {
    let g = make_complete_bipartite(r, s)?;
    let (n, m) = (g.vertex_count(), g.edge_count());
    if u.len() != 2 * (n + m + 1) {
        return Err(Error::Dimension {
            expected: 2 * (n + m + 1),
            actual: u.len(),
        });
    }
    let w = &u[..2 * n];
    if w.iter().any(Signed::is_negative) {
        return Ok(false);
    }
    let mut tight = Vec::new();
    for (i, wi) in w.iter().enumerate() {
        if wi.is_zero() {
            tight.push(unit(2 * n, i));
        }
    }
    let mut balance = |pairs: &[usize]| {
        let mut c = vec![Rational::zero(); 2 * n];
        for &v in pairs {
            c[v] += rat(1);
            c[n + v] -= rat(1);
        }
        if c.iter().zip(w).map(|(a, b)| a * b).sum::<Rational>().is_zero() {
            tight.push(c);
        }
    };
    for &(v, x) in g.edges() {
        balance(&[v, x]);
    }
    balance(&(0..n).collect::<Vec<_>>());
    Ok(rank(&tight) >= 2 * n - 1)
}

/// Integer form of a ray, for display.
pub fn ray_text(u: &[Rational]) -> String {
    integer_row(u).iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{balanced_biclique_inequality, complete_bipartite_description, nonbalanced_lifted_inequality, BicliqueSelector};
    use crate::enumeration::{enumerate_total_matchings, nu_t, Mode, DEFAULT_ELEMENT_LIMIT};
    use crate::geometry::{dd_vertices, DEFAULT_DIM_LIMIT};

    fn k(r: usize, s: usize) -> Graph {
        make_complete_bipartite(r, s).unwrap()
    }

    #[test]
    fn pa_pb_shape_and_vertices() {
        let (pa, pb) = build_pa_pb(2, 2).unwrap();
        let count = |p: &HPolytope, f: Family| p.rows.iter().filter(|r| r.family == f).count();
        assert_eq!(count(&pa, Family::Node), 2);
        assert_eq!(pa.rows.iter().filter(|r| r.note.starts_with("star")).count(), 2);
        assert_eq!(pa.rows.iter().filter(|r| r.relation == Relation::Eq).count(), 2);
        assert_eq!(count(&pa, Family::Nonneg), 8);

        let g = k(2, 2);
        let verts = dd_vertices(&pa, DEFAULT_DIM_LIMIT).unwrap();
        let want: HashSet<Vec<Rational>> = enumerate_total_matchings(&g, Mode::All, DEFAULT_ELEMENT_LIMIT)
            .unwrap()
            .iter()
            .filter(|t| !t.elements.iter().any(|&i| (2..4).contains(&i)))
            .map(|t| t.characteristic_vector(&g))
            .collect();
        let got: HashSet<Vec<Rational>> = verts.vertices.into_iter().collect();
        assert_eq!(got, want);

        let mut side_a = vec![rat(0); 8];
        side_a[0] = rat(1);
        side_a[1] = rat(1);
        assert!(pa.contains(&side_a));
        assert!(!pb.contains(&side_a));
    }

    #[test]
    fn q_shape() {
        let q = build_q(2, 2).unwrap();
        assert_eq!(q.dim(), 13);
        assert_eq!(q.rows.len(), 22);
        assert_eq!(build_q(2, 3).unwrap().dim(), 18);
        assert_eq!(build_q(2, 3).unwrap().rows.len(), 29);
        let labels: Vec<&str> = q.rows.iter().map(|r| r.note.as_str()).collect();
        assert_eq!(&labels[..8], &["u1_v1", "u1_v2", "u1_v3", "u1_v4", "u2_v3", "u2_v4", "u2_v1", "u2_v2"]);
        assert_eq!(labels[8], "u1_e1-3");
        assert_eq!(labels[12], "u2_e1-3");
        assert_eq!(&labels[20..], &["ul1", "ul2"]);
    }

    #[test]
    fn total_matchings_on_side_a_lift_trivially() {
        let g = k(2, 3);
        let q = build_q(2, 3).unwrap();
        for t in enumerate_total_matchings(&g, Mode::All, DEFAULT_ELEMENT_LIMIT).unwrap() {
            if t.elements.iter().any(|&i| (2..5).contains(&i)) {
                continue;
            }
            let mut p = t.characteristic_vector(&g);
            let y: Vec<Rational> = p[5..].to_vec();
            p.push(rat(1));
            p.extend(y);
            assert!(q.contains(&p), "{:?}", t.to_ids(&g));
        }
    }

    #[test]
    fn lift_examples() {
        let zero = lift_point(&vec![rat(0); 8], 2, 2).unwrap();
        assert!(build_q(2, 2).unwrap().contains(&zero));
        // perfect matching {1-3, 2-4}
        let mut pm = vec![rat(0); 8];
        pm[4] = rat(1);
        pm[7] = rat(1);
        let l = lift_point(&pm, 2, 2).unwrap();
        assert_eq!(&l[..8], &pm[..]);
        let mut side_b = vec![rat(0); 8];
        side_b[2] = rat(1);
        side_b[3] = rat(1);
        let l = lift_point(&side_b, 2, 2).unwrap();
        assert_eq!(l[8], rat(0));
        assert!(l[9..].iter().all(Zero::is_zero));
        assert!(matches!(lift_point(&vec![rat(1); 8], 2, 2), Err(Error::NoLift(_))));
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_over_q(2, 2, &vec![rat(1); 8]).unwrap().0, rat(2));
        assert_eq!(solve_over_q(2, 3, &vec![rat(1); 11]).unwrap().0, rat(3));
        assert_eq!(solve_over_q(2, 2, &vec![rat(0); 8]).unwrap().0, rat(0));
        assert_eq!(nu_t(&k(2, 3), DEFAULT_ELEMENT_LIMIT).unwrap(), 3);
    }

    #[test]
    fn cone_matches_q_columns() {
        for (r, s) in [(1, 1), (2, 2), (2, 3)] {
            let a = projection_cone(r, s).unwrap();
            let b = cone_from_q(r, s).unwrap();
            assert_eq!(a.space, b.space);
            assert_eq!(a.key_set(), b.key_set());
        }
        let c = projection_cone(2, 2).unwrap();
        assert_eq!(c.dim(), 18);
        assert_eq!(c.rows.iter().filter(|r| r.relation == Relation::Eq).count(), 5);
    }

    fn biclique_ray(g: &Graph, a: &[usize], b: &[usize], extra: Option<(usize, i64)>) -> ConeRay {
        let (n, m) = (g.vertex_count(), g.edge_count());
        let mut u = vec![rat(0); 2 * (n + m + 1)];
        for &v in a {
            u[v] = rat(1);
        }
        if let Some((v, c)) = extra {
            u[v] = rat(c);
        }
        for &w in b {
            u[n + w] = rat(1);
        }
        // pick edge multipliers so each edge equality holds
        for (e, &(v, w)) in g.edges().iter().enumerate() {
            let d = (&u[v] + &u[w]) - (&u[n + v] + &u[n + w]);
            if d.is_positive() {
                u[2 * n + e] = d;
            } else {
                u[2 * n + m + e] = -d;
            }
        }
        let d: Rational = (0..n).map(|v| &u[v] - &u[n + v]).sum();
        if d.is_positive() {
            u[2 * (n + m) + 1] = d;
        } else {
            u[2 * (n + m)] = -d;
        }
        u
    }

    #[test]
    fn biclique_rays_give_biclique_rows() {
        let g = k(2, 2);
        let u = biclique_ray(&g, &[0, 1], &[2, 3], None);
        assert!(projection_cone(2, 2).unwrap().contains(&u));
        let row = ray_to_inequality(&u, 2, 2).unwrap();
        let want = balanced_biclique_inequality(&g, &[0, 1], &[2, 3]).unwrap();
        assert_eq!(row.strengthened.key(), want.key());

        let g = k(2, 3);
        let u = biclique_ray(&g, &[0], &[2, 3], Some((1, 1)));
        let row = ray_to_inequality(&u, 2, 3).unwrap().strengthened;
        let want = balanced_biclique_inequality(&g, &[0, 1], &[2, 3]).unwrap();
        assert_eq!(row.key(), want.key());

        // one extra side-A vertex with weight |B'| - |A'|
        let g = k(2, 3);
        let u = biclique_ray(&g, &[0, 1], &[2, 3, 4], Some((0, 2)));
        let got = ray_to_inequality(&u, 2, 3).unwrap().strengthened;
        let sel = BicliqueSelector::new(vec![0, 1], vec![2, 3, 4], vec![0], vec![]);
        let want = nonbalanced_lifted_inequality(&g, &sel).unwrap();
        assert_eq!(got.key(), want.key());
    }

    #[test]
    fn ray_errors_and_zero() {
        let zero = vec![rat(0); 18];
        let row = ray_to_inequality(&zero, 2, 2).unwrap().strengthened;
        assert!(is_trivial(&row));
        let mut neg = zero.clone();
        neg[0] = rat(-1);
        assert!(matches!(ray_to_inequality(&neg, 2, 2), Err(Error::NotACone(_))));
        assert!(matches!(ray_to_inequality(&zero[..5], 2, 2), Err(Error::Dimension { .. })));
    }

    #[test]
    fn projection_small_cases() {
        let p11 = project_q(1, 1, DEFAULT_DIM_LIMIT).unwrap();
        assert_eq!(p11.rows.len(), 4);
        let p22 = project_q(2, 2, DEFAULT_DIM_LIMIT).unwrap();
        let cat = complete_bipartite_description(2, 2).unwrap();
        assert_eq!(p22.rows.len(), 17);
        assert_eq!(p22.key_set(), cat.key_set());
    }

    #[test]
    fn raw_form_is_implied_by_strengthened() {
        let rays = cone_rays(2, 2, DEFAULT_DIM_LIMIT).unwrap();
        let g = k(2, 2);
        for u in &rays {
            let p = ray_to_inequality(u, 2, 2).unwrap();
            let mut rows: Vec<LinearInequality> = (0..8).map(|i| LinearInequality::nonneg(8, i)).collect();
            rows.push(p.strengthened.clone());
            let h = HPolytope::new(g.element_ids(), rows).unwrap();
            assert!(is_implied(&p.raw, &h).unwrap());
            assert!(vertex_part_in_y(u, 2, 2).unwrap());
        }
    }
}
