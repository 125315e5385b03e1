//! Browser bindings: the complete description of `P_T(K_{r,s})`, the
//! maximum-weight total matching and separation of a point.

use wasm_bindgen::prelude::*;

use tmpoly::catalog::complete_bipartite_description;
use tmpoly::enumeration::{format_weights, parse_weights};
use tmpoly::geometry::{rat, Family};
use tmpoly::graph::make_complete_bipartite;
use tmpoly::solver::{separate_catalog, solve_kbipartite};

/// Sides larger than this make the page sluggish.
pub const MAX_SIDE: usize = 6;

fn check_sides(r: usize, s: usize) -> Result<(), String> {
    if r == 0 || s == 0 || r > MAX_SIDE || s > MAX_SIDE {
        return Err(format!("sides must lie in 1..={}", MAX_SIDE));
    }
    Ok(())
}

pub fn catalog_text(r: usize, s: usize) -> Result<String, String> {
    check_sides(r, s)?;
    let h = complete_bipartite_description(r, s).map_err(|e| e.to_string())?;
    let count = |f: Family| h.rows.iter().filter(|row| row.family == f).count();
    Ok(format!(
        "c {} rows: {} node, {} edge, {} nonneg, {} balanced, {} lifted\n{}",
        h.rows.len(),
        count(Family::Node),
        count(Family::Edge),
        count(Family::Nonneg),
        count(Family::BalancedBiclique),
        count(Family::NonbalancedLifted),
        h.to_text()
    ))
}

/// Weight file with every element set to 1, as a starting point for edits.
pub fn unit_weights_text(r: usize, s: usize) -> Result<String, String> {
    check_sides(r, s)?;
    let g = make_complete_bipartite(r, s).map_err(|e| e.to_string())?;
    Ok(format_weights(&g, &vec![rat(1); g.dim()]))
}

pub fn solve_text(r: usize, s: usize, weights: &str) -> Result<String, String> {
    check_sides(r, s)?;
    let g = make_complete_bipartite(r, s).map_err(|e| e.to_string())?;
    let w = parse_weights(&g, weights).map_err(|e| e.to_string())?;
    let (value, t) = solve_kbipartite(r, s, &w).map_err(|e| e.to_string())?;
    let ids = t.to_ids(&g);
    Ok(format!(
        "value: {}\nmatching: {}\n",
        value,
        if ids.is_empty() { "{}".to_string() } else { ids.join(" ") }
    ))
}

pub fn separate_text(r: usize, s: usize, point: &str) -> Result<String, String> {
    check_sides(r, s)?;
    let g = make_complete_bipartite(r, s).map_err(|e| e.to_string())?;
    let z = parse_weights(&g, point).map_err(|e| e.to_string())?;
    let res = separate_catalog(r, s, &z).map_err(|e| e.to_string())?;
    Ok(match res.inequality {
        Some(row) => format!(
            "{}  c {} {}\nviolation: {}\n",
            row.to_text(),
            row.family.name(),
            row.note,
            res.violation
        ),
        None => "no violated inequality\nviolation: 0\n".into(),
    })
}

#[wasm_bindgen]
pub fn catalog(r: usize, s: usize) -> Result<String, JsValue> {
    catalog_text(r, s).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = unitWeights)]
pub fn unit_weights(r: usize, s: usize) -> Result<String, JsValue> {
    unit_weights_text(r, s).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn solve(r: usize, s: usize, weights: &str) -> Result<String, JsValue> {
    solve_text(r, s, weights).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn separate(r: usize, s: usize, point: &str) -> Result<String, JsValue> {
    separate_text(r, s, point).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_counts() {
        let text = catalog_text(2, 3).unwrap();
        assert!(text.starts_with("c 27 rows: 5 node, 6 edge, 11 nonneg, 3 balanced, 2 lifted\nspace 11 "));
        assert!(catalog_text(0, 3).is_err());
        assert!(catalog_text(2, 7).is_err());
    }

    #[test]
    fn solve_unit_weights() {
        let w = unit_weights_text(2, 3).unwrap();
        assert_eq!(w.lines().count(), 11);
        assert!(solve_text(2, 3, &w).unwrap().starts_with("value: 3\n"));
        let err = solve_text(2, 3, "v1 1\n").unwrap_err();
        assert!(err.contains("missing weights"));
    }

    #[test]
    fn separate_fractional_point() {
        let pt = "v1 0\nv2 0\nv3 0\nv4 0\ne1-3 3/4\ne1-4 3/4\ne2-3 3/4\ne2-4 3/4\n";
        let out = separate_text(2, 2, pt).unwrap();
        assert!(out.contains("c balanced A={1,2} B={3,4}"));
        assert!(out.ends_with("violation: 1\n"));
        let w = unit_weights_text(2, 2).unwrap().replace(" 1\n", " 0\n");
        assert_eq!(separate_text(2, 2, &w).unwrap(), "no violated inequality\nviolation: 0\n");
    }
}
