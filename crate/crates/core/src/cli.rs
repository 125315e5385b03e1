//! Command-line front end. `run` parses arguments, executes one subcommand
//! and returns the process exit code.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::balas::{build_pa_pb, build_q, cone_rays, lift_point, project_q, ray_text, ray_to_inequality, solve_over_q};
use crate::catalog::{complete_bipartite_description, hull_facets, tree_description, verify_description, Certifier};
use crate::enumeration::{
    enumerate_total_matchings, format_weights, max_weight_total_matching_bruteforce, nu_t, parse_weights, Mode,
    DEFAULT_ELEMENT_LIMIT,
};
use crate::error::Error;
use crate::geometry::{rat, HPolytope, Rational, DEFAULT_DIM_LIMIT};
use crate::graph::{make_complete_bipartite, nonisomorphic_trees, parse_graph, path, star, Graph, Side};
use crate::solver::{separate_balanced, separate_catalog, solve_kbipartite, DEFAULT_SEPARATION_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

pub const DEFAULT_SEED: u64 = 20240601;

#[derive(Parser, Debug)]
#[command(name = "tmpoly", version, about = "Exact tools for the total matching polytope")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the result here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Instance {
    /// Use the complete bipartite graph K_{R,S}.
    #[arg(long, num_args = 2, value_names = ["R", "S"], conflicts_with_all = ["graph", "tree"])]
    complete_bipartite: Option<Vec<usize>>,

    /// Read a graph file.
    #[arg(long, value_name = "FILE", conflicts_with = "tree")]
    graph: Option<PathBuf>,

    /// A tree: pathN, starK (K leaves) or treeN-I (I-th tree on N vertices).
    #[arg(long, value_name = "SPEC")]
    tree: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct Limits {
    /// Maximum number of elements for exhaustive enumeration.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_LIMIT, value_parser = positive)]
    limit_elements: usize,

    /// Maximum effective dimension for double description.
    #[arg(long, default_value_t = DEFAULT_DIM_LIMIT, value_parser = positive)]
    limit_dim: usize,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ModeArg {
    All,
    Maximal,
    Maximum,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum EfAction {
    /// Print Q.
    Build,
    /// Print P_A and P_B.
    Disjuncts,
    /// Maximize the weights over Q.
    Solve,
    /// Lift a point of the element space into Q.
    Lift,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a graph file, or a random weight file with --random-weights.
    Gen {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        random_weights: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// List total matchings, one per line.
    Enumerate {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_enum, default_value = "all")]
        mode: ModeArg,
    },
    /// Print the maximum size of a total matching.
    Nut {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        limits: Limits,
    },
    /// Maximum-weight total matching (unit weights unless --weights).
    Solve {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_name = "FILE")]
        weights: Option<PathBuf>,
        /// Use exhaustive search instead of the assignment solver.
        #[arg(long)]
        brute_force: bool,
        /// Compare both solvers on this many random weight vectors.
        #[arg(long, value_parser = positive)]
        trials: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the known complete description (trees, complete bipartite graphs).
    Describe {
        #[command(flatten)]
        inst: Instance,
    },
    /// Facets of the convex hull of all characteristic vectors.
    Hull {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        limits: Limits,
    },
    /// Check a description against the hull. Fails when rows are missing
    /// or invalid; redundant rows are reported only.
    Verify {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        limits: Limits,
        /// Description to check instead of the built-in one.
        #[arg(long, value_name = "FILE")]
        rows: Option<PathBuf>,
    },
    /// Validity and facet checks for every row of an inequality file.
    Facet {
        #[command(flatten)]
        inst: Instance,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_name = "FILE")]
        rows: PathBuf,
    },
    /// The extended formulation of a complete bipartite graph.
    Ef {
        #[arg(value_enum)]
        action: EfAction,
        #[arg(long, num_args = 2, value_names = ["R", "S"], required = true)]
        complete_bipartite: Vec<usize>,
        #[arg(long, value_name = "FILE")]
        weights: Option<PathBuf>,
        /// Point to lift, in the weight file format.
        #[arg(long, value_name = "FILE")]
        point: Option<PathBuf>,
    },
    /// Extreme rays of the projection cone and their inequalities.
    Cone {
        #[arg(long, num_args = 2, value_names = ["R", "S"], required = true)]
        complete_bipartite: Vec<usize>,
        #[command(flatten)]
        limits: Limits,
        /// Print the irredundant projected description instead.
        #[arg(long)]
        project: bool,
    },
    /// Separate a point, over balanced rows of size --r or the full catalog.
    Separate {
        #[arg(long, num_args = 2, value_names = ["R", "S"], required = true)]
        complete_bipartite: Vec<usize>,
        #[arg(long, value_name = "FILE")]
        point: PathBuf,
        #[arg(long = "r", value_name = "K")]
        size: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEPARATION_LIMIT)]
        limit_candidates: usize,
    },
}

enum Failure {
    Usage(String),
    Limit(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded { .. } => Failure::Limit(e.to_string()),
            Error::Parse { .. }
            | Error::Graph(_)
            | Error::UnknownElement(_)
            | Error::Selector(_)
            | Error::Dimension { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type CmdResult = Result<(String, bool), Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))
}

fn parse_tree(spec: &str) -> Result<Graph, Failure> {
    let bad = || Failure::Usage(format!("unknown tree spec `{}`", spec));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if let Some(k) = spec.strip_prefix("path") {
        let n = num(k)?;
        if n == 0 {
            return Err(bad());
        }
        Ok(path(n))
    } else if let Some(k) = spec.strip_prefix("star") {
        Ok(star(num(k)?))
    } else if let Some(rest) = spec.strip_prefix("tree") {
        let (n, i) = rest.split_once('-').ok_or_else(bad)?;
        let trees = nonisomorphic_trees(num(n)?);
        trees.into_iter().nth(num(i)?).ok_or_else(bad)
    } else {
        Err(bad())
    }
}

/// Side sizes when `g` is complete bipartite with side A first.
fn bipartite_shape(g: &Graph) -> Option<(usize, usize)> {
    let sides = g.sides()?;
    let r = sides.iter().take_while(|&&s| s == Side::A).count();
    let s = g.vertex_count() - r;
    if r == 0 || s == 0 || sides[r..].iter().any(|&x| x != Side::B) || g.edge_count() != r * s {
        return None;
    }
    Some((r, s))
}

fn load(inst: &Instance) -> Result<Graph, Failure> {
    if let Some(rs) = &inst.complete_bipartite {
        return Ok(make_complete_bipartite(rs[0], rs[1])?);
    }
    if let Some(p) = &inst.graph {
        return Ok(parse_graph(&read(p)?)?);
    }
    if let Some(t) = &inst.tree {
        return parse_tree(t);
    }
    Err(Failure::Usage("give --complete-bipartite, --graph or --tree".into()))
}

fn weights_or_unit(g: &Graph, path: &Option<PathBuf>) -> Result<Vec<Rational>, Failure> {
    match path {
        Some(p) => Ok(parse_weights(g, &read(p)?)?),
        None => Ok(vec![rat(1); g.dim()]),
    }
}

fn random_weights(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    (0..g.dim()).map(|_| rat(rng.gen_range(-5..=10))).collect()
}

fn builtin_description(g: &Graph) -> Result<HPolytope, Failure> {
    if g.is_tree() {
        return Ok(tree_description(g)?);
    }
    match bipartite_shape(g) {
        Some((r, s)) => Ok(complete_bipartite_description(r, s)?),
        None => Err(Failure::Usage(
            "no built-in description: the graph is neither a tree nor complete bipartite".into(),
        )),
    }
}

fn matching_text(elems: &[String]) -> String {
    if elems.is_empty() {
        "{}".into()
    } else {
        elems.join(" ")
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn rs(v: &[usize]) -> (usize, usize) {
    (v[0], v[1])
}

fn execute(cmd: Command) -> CmdResult {
    let mut out = String::new();
    let mut ok = true;
    match cmd {
        Command::Gen {
            inst,
            random_weights: rw,
            seed,
        } => {
            let g = load(&inst)?;
            if rw {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                out = format_weights(&g, &random_weights(&g, &mut rng));
            } else {
                out = g.to_file_string();
            }
        }
        Command::Enumerate { inst, limits, mode } => {
            let g = load(&inst)?;
            let mode = match mode {
                ModeArg::All => Mode::All,
                ModeArg::Maximal => Mode::Maximal,
                ModeArg::Maximum => Mode::Maximum,
            };
            let all = enumerate_total_matchings(&g, mode, limits.limit_elements)?;
            for t in &all {
                out.push_str(&matching_text(&t.to_ids(&g)));
                out.push('\n');
            }
            out.push_str(&format!("count: {}\n", all.len()));
        }
        Command::Nut { inst, limits } => {
            let g = load(&inst)?;
            out = format!("{}\n", nu_t(&g, limits.limit_elements)?);
        }
        Command::Solve {
            inst,
            limits,
            weights,
            brute_force,
            trials,
            seed,
        } => {
            let g = load(&inst)?;
            let shape = bipartite_shape(&g);
            if let Some(n) = trials {
                let (r, s) = shape.ok_or_else(|| Failure::Usage("--trials needs a complete bipartite graph".into()))?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut mismatches = 0;
                for _ in 0..n {
                    let w = random_weights(&g, &mut rng);
                    let fast = solve_kbipartite(r, s, &w)?.0;
                    let slow = max_weight_total_matching_bruteforce(&g, &w, limits.limit_elements)?.0;
                    if fast != slow {
                        mismatches += 1;
                    }
                }
                out = format!("trials: {}, mismatches: {}\n", n, mismatches);
                ok = mismatches == 0;
            } else {
                let w = weights_or_unit(&g, &weights)?;
                let (value, t) = match (brute_force, shape) {
                    (false, Some((r, s))) => solve_kbipartite(r, s, &w)?,
                    (false, None) => {
                        return Err(Failure::Usage(
                            "the fast solver needs a complete bipartite graph; use --brute-force".into(),
                        ))
                    }
                    (true, _) => max_weight_total_matching_bruteforce(&g, &w, limits.limit_elements)?,
                };
                out = format!("value: {}\nmatching: {}\n", value, matching_text(&t.to_ids(&g)));
            }
        }
        Command::Describe { inst } => {
            let g = load(&inst)?;
            out = builtin_description(&g)?.to_text();
        }
        Command::Hull { inst, limits } => {
            let g = load(&inst)?;
            out = hull_facets(&g, limits.limit_elements, limits.limit_dim)?.to_text();
        }
        Command::Verify { inst, limits, rows } => {
            let g = load(&inst)?;
            let h = match rows {
                Some(p) => HPolytope::parse(&read(&p)?)?,
                None => builtin_description(&g)?,
            };
            let rep = verify_description(&g, &h, limits.limit_elements, limits.limit_dim)?;
            out.push_str(&rep.summary());
            out.push('\n');
            for (label, rows) in [("missing", &rep.missing), ("invalid", &rep.invalid), ("redundant", &rep.redundant)] {
                for r in rows.iter() {
                    out.push_str(&format!("{}: {}\n", label, r.to_text()));
                }
            }
            ok = rep.complete && rep.sound;
        }
        Command::Facet { inst, limits, rows } => {
            let g = load(&inst)?;
            let h = HPolytope::parse(&read(&rows)?)?;
            let cert = Certifier::new(&g, limits.limit_elements)?;
            for (i, row) in h.rows.iter().enumerate() {
                let valid = cert.is_valid(row)?.is_valid();
                let line = if valid {
                    let f = cert.is_facet(row)?;
                    ok &= f.is_facet;
                    format!("row {}: valid: yes, facet: {}, rank: {}/{}", i + 1, yn(f.is_facet), f.rank, g.dim())
                } else {
                    ok = false;
                    format!("row {}: valid: no, facet: no", i + 1)
                };
                out.push_str(&line);
                out.push('\n');
            }
        }
        Command::Ef {
            action,
            complete_bipartite,
            weights,
            point,
        } => {
            let (r, s) = rs(&complete_bipartite);
            let g = make_complete_bipartite(r, s)?;
            match action {
                EfAction::Build => out = build_q(r, s)?.to_text(),
                EfAction::Disjuncts => {
                    let (pa, pb) = build_pa_pb(r, s)?;
                    out = format!("c P_A\n{}c P_B\n{}", pa.to_text(), pb.to_text());
                }
                EfAction::Solve => {
                    let w = weights_or_unit(&g, &weights)?;
                    let (value, z) = solve_over_q(r, s, &w)?;
                    out = format!("value: {}\n{}", value, format_weights(&g, &z));
                }
                EfAction::Lift => {
                    let p = point.ok_or_else(|| Failure::Usage("lift needs --point".into()))?;
                    let z = parse_weights(&g, &read(&p)?)?;
                    let lifted = lift_point(&z, r, s)?;
                    let q = build_q(r, s)?;
                    for (name, v) in q.space.iter().zip(&lifted) {
                        out.push_str(&format!("{} {}\n", name, v));
                    }
                }
            }
        }
        Command::Cone {
            complete_bipartite,
            limits,
            project,
        } => {
            let (r, s) = rs(&complete_bipartite);
            if project {
                out = project_q(r, s, limits.limit_dim)?.to_text();
            } else {
                for (k, u) in cone_rays(r, s, limits.limit_dim)?.iter().enumerate() {
                    let row = ray_to_inequality(u, r, s)?.strengthened.normalized();
                    out.push_str(&format!("ray {}: {}\n  {}\n", k + 1, ray_text(u), row.to_text()));
                }
            }
        }
        Command::Separate {
            complete_bipartite,
            point,
            size,
            limit_candidates,
        } => {
            let (r, s) = rs(&complete_bipartite);
            let g = make_complete_bipartite(r, s)?;
            let z = parse_weights(&g, &read(&point)?)?;
            let res = match size {
                Some(k) => separate_balanced(&g, &z, k, limit_candidates)?,
                None => separate_catalog(r, s, &z)?,
            };
            match &res.inequality {
                Some(row) => out.push_str(&format!("{}  c {} {}\n", row.to_text(), row.family.name(), row.note)),
                None => out.push_str("no violated inequality\n"),
            }
            out.push_str(&format!("violation: {}\n", res.violation));
            debug_assert_eq!(res.violated, !res.violation.is_zero());
        }
    }
    Ok((out, ok))
}

/// Runs the CLI on `args` (including the program name). Results go to
/// `stdout` or the `--out` file, diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let (text, ok) = match execute(cli.command) {
        Ok(r) => r,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Limit(m) => (EXIT_LIMIT, m),
                Failure::Failed(m) => (EXIT_FAILED, m),
            };
            let _ = writeln!(stderr, "error: {}", msg);
            return code;
        }
    };
    let written = match &cli.out {
        Some(p) => fs::write(p, &text).map_err(|e| format!("{}: {}", p.display(), e)),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(m) = written {
        let _ = writeln!(stderr, "error: {}", m);
        return EXIT_FAILED;
    }
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut o = Vec::new();
        let mut e = Vec::new();
        let argv = std::iter::once("tmpoly").chain(args.iter().copied());
        let code = run(argv, &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn tree_specs() {
        assert!(parse_tree("path5").is_ok());
        assert_eq!(parse_tree("star3").ok().unwrap().vertex_count(), 4);
        assert_eq!(parse_tree("tree6-5").ok().unwrap().vertex_count(), 6);
        assert!(parse_tree("tree6-6").is_err());
        assert!(parse_tree("path0").is_err());
        assert!(parse_tree("cycle4").is_err());
    }

    #[test]
    fn shape_detection() {
        assert_eq!(bipartite_shape(&make_complete_bipartite(2, 3).unwrap()), Some((2, 3)));
        assert_eq!(bipartite_shape(&path(3)), None);
        let g = parse_graph(&make_complete_bipartite(3, 1).unwrap().to_file_string()).unwrap();
        assert_eq!(bipartite_shape(&g), Some((3, 1)));
    }

    #[test]
    fn basic_commands() {
        assert_eq!(call(&["nut", "--complete-bipartite", "3", "3"]), (0, "3\n".into(), String::new()));
        let (code, out, _) = call(&["solve", "--complete-bipartite", "2", "3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("value: 3\n"));
        let (code, _, err) = call(&["solve", "--tree", "path4"]);
        assert_eq!(code, 2);
        assert!(err.contains("--brute-force"));
        assert_eq!(call(&["solve", "--tree", "path4", "--brute-force"]).1, "value: 3\nmatching: v1 v4 e2-3\n");
        let (code, out, _) = call(&["enumerate", "--tree", "path2", "--mode", "maximal"]);
        assert_eq!(code, 0);
        assert_eq!(out, "v1\nv2\ne1-2\ncount: 3\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["nut"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["nut", "--complete-bipartite", "3", "5", "--limit-elements", "10"]).0, 3);
        assert_eq!(call(&["nut", "--complete-bipartite", "3", "3", "--limit-elements", "0"]).0, 2);
        assert_eq!(call(&["describe", "--complete-bipartite", "0", "3"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
