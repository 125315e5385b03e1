//! Exact Hungarian method with potentials (shortest augmenting paths).

use num_traits::Zero;

use crate::geometry::Rational;

/// Minimum-cost assignment of every row to a distinct column of a
/// `rows × cols` matrix with `rows <= cols`. Returns the column chosen for
/// each row and the total cost.
pub fn min_cost_assignment(cost: &[Vec<Rational>]) -> (Vec<usize>, Rational) {
    let n = cost.len();
    if n == 0 {
        return (Vec::new(), Rational::zero());
    }
    let m = cost[0].len();
    assert!(n <= m, "assignment needs at least as many columns as rows");
    // 1-based arrays; column 0 is the virtual root
    let mut u = vec![Rational::zero(); n + 1];
    let mut v = vec![Rational::zero(); m + 1];
    let mut p = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<Rational>> = vec![None; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0;
            for j in 1..=m {
                if used[j] {
                    continue;
                }
                let cur = &cost[i0 - 1][j - 1] - &u[i0] - &v[j];
                if minv[j].as_ref().is_none_or(|mv| cur < *mv) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].as_ref().unwrap();
                if delta.as_ref().is_none_or(|d| mj < d) {
                    delta = Some(mj.clone());
                    j1 = j;
                }
            }
            let delta = delta.expect("a free column always exists");
            for j in 0..=m {
                if used[j] {
                    u[p[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(mv) = minv[j].as_mut() {
                    *mv -= &delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0; n];
    for j in 1..=m {
        if p[j] != 0 {
            assign[p[j] - 1] = j - 1;
        }
    }
    let total = assign.iter().enumerate().map(|(i, &j)| &cost[i][j]).sum();
    (assign, total)
}

/// Maximum-value assignment, same shape contract as [`min_cost_assignment`].
pub fn max_value_assignment(value: &[Vec<Rational>]) -> (Vec<usize>, Rational) {
    let neg: Vec<Vec<Rational>> = value.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    let (a, c) = min_cost_assignment(&neg);
    (a, -c)
}
