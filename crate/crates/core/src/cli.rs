//! Command-line front end. [`run`] parses arguments, executes one command
//! and writes its output; the `arith` binary is a thin wrapper around it.
//!
//! Exit codes: 0 success, 1 internal error, 2 input error, 3 cap exceeded
//! (box cap or time cap).

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith_enum::{arithmetical_structures, min_dgeq0_matrix};
use crate::classify::{classify_z, mp3_membership};
use crate::error::{Error, Result};
use crate::exactmat::IntMatrix;
use crate::frontier::Frontier;
use crate::graphs::{adjacency, conjecture_check, connected_graphs_upto, family, parse_edge_list, canonical_code};
use crate::json;
use crate::poly_enum::{frontier_at_level, lift_non_squarefree, min_dgeq0, min_dgeq0_poly};
use crate::polyring::{charpoly_of_matrix, parse, parse_general, Monomial, Parsed, SqFreePoly};
use crate::solutions::{brute_force_box, slice_solve, SolutionSet, Target, DEFAULT_BOX_CAP};

#[derive(Parser, Debug, Clone)]
#[command(name = "arith", version, about = "Exact enumeration of arithmetical structures")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    pub out: OutFormat,

    /// Worker threads for the graph table.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: u64,

    /// Largest number of points a brute-force box may contain.
    #[arg(long, global = true, default_value_t = DEFAULT_BOX_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub box_cap: u64,

    /// Wall-clock limit in seconds; exceeding it exits with code 3.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub time_cap: Option<u64>,

    /// Work with the level set `f >= alpha` instead of `f >= 0`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<BigInt>,

    /// Allow runs that take hours (the table for six vertices).
    #[arg(long, global = true)]
    pub slow: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Frontier, structures or classification of a matrix (JSON or edge list).
    Matrix {
        #[arg(value_enum)]
        action: MatrixAction,
        #[arg(long)]
        input: PathBuf,
    },
    /// Classify a Z-matrix given as JSON.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Work with a dominated polynomial.
    Poly {
        #[arg(value_enum)]
        action: PolyAction,
        #[command(flatten)]
        src: PolySource,
        #[command(flatten)]
        solve: SolveArgs,
    },
    /// Positive integer zeros of a polynomial.
    Solve {
        #[command(flatten)]
        src: PolySource,
        #[command(flatten)]
        solve: SolveArgs,
    },
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Structure counts for every connected graph on `n` vertices.
    Conjecture {
        #[arg(long)]
        n: usize,
    },
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixAction {
    Frontier,
    Structures,
    Classify,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyAction {
    Frontier,
    Structures,
    Solve,
    Mp3,
    Lift,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Slice,
    Box,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct PolySource {
    /// Polynomial JSON, or a file holding an expression.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Inline expression such as `x*y*z - 2*x + 6`.
    #[arg(long)]
    pub expr: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct SolveArgs {
    /// Comma-separated variable order for `--expr`.
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    /// Box bounds `b1,b2,...` (each coordinate ranges over `1..=b_i`).
    #[arg(long = "box", value_delimiter = ',')]
    pub bounds: Option<Vec<BigInt>>,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum GraphCommand {
    /// A named family (path, cycle, complete, star) and its adjacency matrix.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
    },
    /// One representative per class of connected graphs on `n` vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum OracleCommand {
    /// Exhaustive scan of a box for a matrix or a polynomial.
    Box {
        /// Matrix JSON, polynomial JSON or an edge list.
        #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
        input: Option<PathBuf>,
        #[arg(long)]
        expr: Option<String>,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
        #[arg(long = "box", value_delimiter = ',', required = true)]
        bounds: Vec<BigInt>,
    },
}

/// Stable exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoxTooLarge { .. } => 3,
        Error::Invariant(_) => 1,
        _ => 2,
    }
}

/// One command's result in every output format.
struct Output {
    json: Value,
    table: Option<Table>,
    text: String,
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn csv(&self) -> String {
        let mut s = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn strs(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

fn tuple(v: &[BigInt]) -> String {
    format!("({})", strs(v).join(", "))
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn frontier_output(vars: &[String], f: &Frontier, zeros_of: Option<&SqFreePoly>) -> Result<Output> {
    let mut text = format!("{} minimal vectors\n", f.len());
    for d in f.iter() {
        let mark = match zeros_of {
            Some(p) if p.eval(d)?.is_zero() => "  zero",
            _ => "",
        };
        let _ = writeln!(text, "{}{mark}", tuple(d));
    }
    Ok(Output {
        json: json!({ "vars": vars, "frontier": json::frontier_to_json(f) }),
        table: Some(Table { header: vars.to_vec(), rows: f.iter().map(|d| strs(d)).collect() }),
        text,
    })
}

fn read_source(path: &PathBuf) -> Result<String> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::BadInput(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))?;
    }
    Ok(s)
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Matrix JSON or an edge list.
fn load_matrix(path: &PathBuf) -> Result<IntMatrix> {
    let text = read_source(path)?;
    if looks_like_json(&text) {
        json::matrix_from_json(&parse_json(&text)?)
    } else {
        adjacency(&parse_edge_list(&text)?)
    }
}

fn load_general(src: &PolySource, vars: Option<&[String]>) -> Result<Parsed<crate::GeneralPoly>> {
    match (&src.expr, &src.input) {
        (Some(e), _) => parse_general(e, vars),
        (None, Some(path)) => {
            let text = read_source(path)?;
            if looks_like_json(&text) {
                let p = json::poly_from_json(&parse_json(&text)?)?;
                let terms = p.poly.terms().map(|(m, c)| {
                    let e = (0..p.poly.nvars()).map(|i| u32::from(m.contains(i))).collect();
                    (e, c.clone())
                });
                Ok(Parsed { vars: p.vars.clone(), poly: crate::GeneralPoly { nvars: p.poly.nvars(), terms: terms.collect() } })
            } else {
                parse_general(text.trim(), vars)
            }
        }
        (None, None) => Err(Error::BadInput("one of --expr or --input is required".into())),
    }
}

fn load_poly(src: &PolySource, vars: Option<&[String]>) -> Result<Parsed<SqFreePoly>> {
    let g = load_general(src, vars)?;
    let poly = g.poly.to_square_free(&g.vars)?;
    Ok(Parsed { vars: g.vars, poly })
}

fn matrix_command(action: MatrixAction, input: &PathBuf, alpha: Option<&BigInt>) -> Result<Output> {
    let l = load_matrix(input)?;
    let vars = names("d", l.n());
    match action {
        MatrixAction::Classify => classify_output(&l),
        MatrixAction::Frontier => match alpha {
            Some(a) => frontier_output(&vars, &frontier_at_level(&charpoly_of_matrix(&l), a)?, None),
            None => {
                let f = min_dgeq0_matrix(&l)?;
                frontier_output(&vars, &f, Some(&charpoly_of_matrix(&l)))
            }
        },
        MatrixAction::Structures => {
            let rep = arithmetical_structures(&l)?;
            log::info!("matrix structures: {:?}", rep.stats);
            let mut header = vars.clone();
            header.extend(names("r", l.n()));
            header.push("k".into());
            let rows = rep
                .structures()
                .iter()
                .map(|s| {
                    let mut row = strs(&s.d);
                    row.extend(strs(s.r.as_slice()));
                    row.push(s.k.to_string());
                    row
                })
                .collect();
            let mut text = format!(
                "outcome {}; frontier {} vectors; {} structures\n",
                rep.outcome.name(),
                rep.frontier.len(),
                rep.structures().len()
            );
            for s in rep.structures() {
                let _ = writeln!(text, "d={} r={} k={}", tuple(&s.d), tuple(s.r.as_slice()), s.k);
            }
            Ok(Output { json: json::enum_report_to_json(&rep), table: Some(Table { header, rows }), text })
        }
    }
}

fn classify_output(m: &IntMatrix) -> Result<Output> {
    let c = classify_z(m);
    let j = json::classification_to_json(&c);
    let obj = j.as_object().expect("object");
    let header: Vec<String> = obj.keys().cloned().collect();
    let row = obj.values().map(|v| v.as_str().map_or_else(|| v.to_string(), str::to_string)).collect();
    let text = format!("{} (det {})\n", c.label(), c.det);
    Ok(Output { json: j, table: Some(Table { header, rows: vec![row] }), text })
}

fn poly_structures(vars: &[String], f: &SqFreePoly) -> Result<Output> {
    let rep = min_dgeq0_poly(f)?;
    let mut header = vars.to_vec();
    header.push("k".into());
    let rows = rep
        .structures
        .iter()
        .map(|s| {
            let mut row = strs(&s.d);
            row.push(s.k.to_string());
            row
        })
        .collect();
    let mut text = format!("frontier {} vectors; {} structures\n", rep.frontier.len(), rep.structures.len());
    for s in &rep.structures {
        let _ = writeln!(text, "d={} k={}", tuple(&s.d), s.k);
    }
    if let Some(red) = &rep.reducible {
        let _ = writeln!(text, "reducible into {} factors; infinitely many zeros, e.g.", red.factors.len());
        for w in red.witnesses.iter().take(5) {
            let _ = writeln!(text, "  {}", tuple(w));
        }
    }
    Ok(Output { json: json::poly_report_to_json(vars, &rep), table: Some(Table { header, rows }), text })
}

fn in_box(d: &[BigInt], bounds: &[BigInt]) -> bool {
    d.iter().zip(bounds).all(|(x, b)| x <= b)
}

fn solutions_output(vars: &[String], s: &SolutionSet) -> Output {
    let mut header = vars.to_vec();
    if s.kernels.is_some() {
        header.extend(names("r", vars.len()));
    }
    let rows = s
        .solutions
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let mut row = strs(d);
            if let Some(k) = &s.kernels {
                row.extend(strs(k[i].as_slice()));
            }
            row
        })
        .collect();
    let mut text = format!(
        "{} solutions in {}; {}\n",
        s.solutions.len(),
        s.region,
        if s.complete { "complete" } else { "incomplete" }
    );
    for (i, d) in s.solutions.iter().enumerate() {
        match &s.kernels {
            Some(k) => {
                let _ = writeln!(text, "{} r={}", tuple(d), tuple(k[i].as_slice()));
            }
            None => {
                let _ = writeln!(text, "{}", tuple(d));
            }
        }
    }
    let mut j = json::solutions_to_json(s);
    j["vars"] = json!(vars);
    Output { json: j, table: Some(Table { header, rows }), text }
}

fn solve_command(src: &PolySource, args: &SolveArgs, box_cap: u64) -> Result<Output> {
    let p = load_poly(src, args.vars.as_deref())?;
    let method = args.method.unwrap_or(if args.bounds.is_some() { Method::Box } else { Method::Slice });
    let set = match method {
        Method::Box => {
            let bounds = args.bounds.as_ref().ok_or_else(|| Error::BadInput("--method box needs --box".into()))?;
            brute_force_box(Target::Poly(&p.poly), bounds, box_cap)?
        }
        Method::Slice => {
            let mut s = slice_solve(&p.poly, &min_dgeq0(&p.poly)?)?;
            if let Some(b) = &args.bounds {
                if b.len() != p.poly.nvars() {
                    return Err(Error::DimensionMismatch { expected: p.poly.nvars(), got: b.len() });
                }
                s.solutions.retain(|d| in_box(d, b));
                s.region = format!("{} intersected with the box ({})", s.region, strs(b).join(","));
            }
            s
        }
    };
    Ok(solutions_output(&p.vars, &set))
}

/// Read `x1x2x3 + a1 x1 + a2 x2 + a3 x3 + b` off a parsed polynomial.
fn mp3_coefficients(f: &SqFreePoly) -> Result<([BigInt; 3], BigInt)> {
    if f.nvars() != 3 || f.coef(Monomial::full(3)) != BigInt::one() {
        return Err(Error::BadInput("expected x1*x2*x3 + a1*x1 + a2*x2 + a3*x3 + b".into()));
    }
    if (0..3).any(|i| (i + 1..3).any(|j| !f.coef(Monomial::from_vars(&[i, j])).is_zero())) {
        return Err(Error::BadInput("degree-two terms are not allowed".into()));
    }
    let a = [0, 1, 2].map(|i| f.coef(Monomial::from_vars(&[i])));
    Ok((a, f.constant_term()))
}

fn mp3_command(vars: &[String], f: &SqFreePoly) -> Result<Output> {
    let (a, b) = mp3_coefficients(f)?;
    let w = mp3_membership([&a[0], &a[1], &a[2]], &b);
    let check = w.as_ref().map(|m| charpoly_of_matrix(m) == *f);
    let text = match &w {
        Some(m) => {
            let rows: Vec<String> = m.rows().map(tuple).collect();
            format!("member; witness A = [{}]\n", rows.join(", "))
        }
        None => "not a member\n".to_string(),
    };
    let table = w.as_ref().map(|m| Table { header: names("c", 3), rows: m.rows().map(strs).collect() });
    Ok(Output {
        json: json!({
            "vars": vars,
            "a": json::vec(&a),
            "b": json::int(&b),
            "member": w.is_some(),
            "witness": w.as_ref().map(json::matrix_to_json),
            "round_trip": check,
        }),
        table,
        text,
    })
}

fn lift_command(src: &PolySource, vars: Option<&[String]>) -> Result<Output> {
    let g = load_general(src, vars)?;
    let rep = lift_non_squarefree(&g.poly)?;
    let mut text = format!("surrogate {}\nfrontier {} vectors\n", rep.surrogate, rep.frontier.len());
    for d in rep.frontier.iter() {
        let _ = writeln!(text, "{}", tuple(d));
    }
    let _ = writeln!(text, "{} structures", rep.structures.len());
    for d in &rep.structures {
        let _ = writeln!(text, "{}", tuple(d));
    }
    Ok(Output {
        json: json::lift_report_to_json(&g.vars, &rep),
        table: Some(Table { header: g.vars.clone(), rows: rep.frontier.iter().map(|d| strs(d)).collect() }),
        text,
    })
}

fn poly_command(action: PolyAction, src: &PolySource, args: &SolveArgs, cfg: &RunConfig) -> Result<Output> {
    let vars = args.vars.as_deref();
    match action {
        PolyAction::Lift => lift_command(src, vars),
        PolyAction::Solve => solve_command(src, args, cfg.box_cap),
        PolyAction::Frontier => {
            let p = load_poly(src, vars)?;
            match &cfg.alpha {
                Some(a) => frontier_output(&p.vars, &frontier_at_level(&p.poly, a)?, None),
                None => frontier_output(&p.vars, &min_dgeq0(&p.poly)?, Some(&p.poly)),
            }
        }
        PolyAction::Structures => {
            let p = load_poly(src, vars)?;
            let f = cfg.alpha.as_ref().map_or_else(|| p.poly.clone(), |a| p.poly.minus_constant(a));
            poly_structures(&p.vars, &f)
        }
        PolyAction::Mp3 => {
            let p = load_poly(src, vars)?;
            mp3_command(&p.vars, &p.poly)
        }
    }
}

fn edges_text(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(i, j)| format!("{i}-{j}")).collect::<Vec<_>>().join(" ")
}

fn graph_command(cmd: &GraphCommand) -> Result<Output> {
    match cmd {
        GraphCommand::Family { name, n } => {
            let g = family(name, *n)?;
            let m = adjacency(&g)?;
            let rows: Vec<String> = m.rows().map(tuple).collect();
            Ok(Output {
                json: json!({ "graph": json::graph_to_json(&g), "matrix": json::matrix_to_json(&m) }),
                table: Some(Table { header: names("c", *n), rows: m.rows().map(strs).collect() }),
                text: format!("{g}\n{}\n", rows.join("\n")),
            })
        }
        GraphCommand::Enumerate { n } => {
            let gs = connected_graphs_upto(*n)?;
            let codes = gs.iter().map(canonical_code).collect::<Result<Vec<_>>>()?;
            let mut text = format!("{} connected graphs on {n} vertices\n", gs.len());
            for (g, c) in gs.iter().zip(&codes) {
                let _ = writeln!(text, "{c:>6}  {}", edges_text(&g.edges));
            }
            Ok(Output {
                json: json!(gs
                    .iter()
                    .zip(&codes)
                    .map(|(g, c)| json!({ "code": c, "edges": g.edges }))
                    .collect::<Vec<_>>()),
                table: Some(Table {
                    header: vec!["code".into(), "edges".into()],
                    rows: gs.iter().zip(&codes).map(|(g, c)| vec![c.to_string(), edges_text(&g.edges)]).collect(),
                }),
                text,
            })
        }
    }
}

fn conjecture_command(n: usize, cfg: &RunConfig) -> Result<Output> {
    let rep = conjecture_check(n, cfg.threads as usize, cfg.slow)?;
    let header = ["code", "name", "edges", "count", "max_entry"].map(String::from).to_vec();
    let rows: Vec<Vec<String>> = rep
        .rows
        .iter()
        .map(|r| {
            vec![
                r.code.to_string(),
                r.name.clone().unwrap_or_default(),
                edges_text(&r.graph.edges),
                r.count.to_string(),
                r.max_entry.to_string(),
            ]
        })
        .collect();
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(text, "{:>10} {:>8}  {:<9} {}", r[3], r[4], r[1], r[2]);
    }
    let _ = writeln!(text, "path is minimal: {}; complete is maximal: {}", rep.path_is_min, rep.complete_is_max);
    Ok(Output { json: json::conjecture_to_json(&rep), table: Some(Table { header, rows }), text })
}

fn oracle_command(cmd: &OracleCommand, box_cap: u64) -> Result<Output> {
    let OracleCommand::Box { input, expr, vars, bounds } = cmd;
    if let Some(e) = expr {
        let p = parse(e, vars.as_deref())?;
        return Ok(solutions_output(&p.vars, &brute_force_box(Target::Poly(&p.poly), bounds, box_cap)?));
    }
    let path = input.as_ref().ok_or_else(|| Error::BadInput("one of --expr or --input is required".into()))?;
    let text = read_source(path)?;
    if looks_like_json(&text) {
        let v = parse_json(&text)?;
        if v.get("terms").is_some() {
            let p = json::poly_from_json(&v)?;
            return Ok(solutions_output(&p.vars, &brute_force_box(Target::Poly(&p.poly), bounds, box_cap)?));
        }
        let m = json::matrix_from_json(&v)?;
        return Ok(solutions_output(&names("d", m.n()), &brute_force_box(Target::Matrix(&m), bounds, box_cap)?));
    }
    let m = adjacency(&parse_edge_list(&text)?)?;
    Ok(solutions_output(&names("d", m.n()), &brute_force_box(Target::Matrix(&m), bounds, box_cap)?))
}

fn execute(cfg: &RunConfig) -> Result<Output> {
    match &cfg.command {
        Command::Matrix { action, input } => matrix_command(*action, input, cfg.alpha.as_ref()),
        Command::Classify { input } => classify_output(&load_matrix(input)?),
        Command::Poly { action, src, solve } => poly_command(*action, src, solve, cfg),
        Command::Solve { src, solve } => solve_command(src, solve, cfg.box_cap),
        Command::Graph(g) => graph_command(g),
        Command::Conjecture { n } => conjecture_command(*n, cfg),
        Command::Oracle(o) => oracle_command(o, cfg.box_cap),
    }
}

enum Failure {
    Error(Error),
    TimeCap(u64),
}

/// Run the command, on a worker thread when a time cap is set. A timed-out
/// worker is abandoned; the binary exits right after.
fn execute_capped(cfg: &RunConfig) -> std::result::Result<Output, Failure> {
    let Some(secs) = cfg.time_cap else {
        return execute(cfg).map_err(Failure::Error);
    };
    let (tx, rx) = mpsc::channel();
    let owned = cfg.clone();
    std::thread::spawn(move || {
        let _ = tx.send(execute(&owned));
    });
    match rx.recv_timeout(Duration::from_secs(secs)) {
        Ok(r) => r.map_err(Failure::Error),
        Err(_) => Err(Failure::TimeCap(secs)),
    }
}

fn render(cfg: &RunConfig, o: &Output) -> Result<String> {
    Ok(match cfg.out {
        OutFormat::Json => {
            let mut s = serde_json::to_string(&o.json).map_err(|e| Error::Invariant(e.to_string()))?;
            s.push('\n');
            s
        }
        OutFormat::Text => o.text.clone(),
        OutFormat::Csv => o
            .table
            .as_ref()
            .ok_or_else(|| Error::BadInput("this command has no CSV form".into()))?
            .csv(),
    })
}

/// Parse `argv` (including the program name), run, and write the result to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let start = Instant::now();
    let result = execute_capped(&cfg).and_then(|o| render(&cfg, &o).map_err(Failure::Error));
    log::info!("{:?} finished in {:?}", cfg.command, start.elapsed());
    match result {
        Ok(s) => {
            if out.write_all(s.as_bytes()).and_then(|_| out.flush()).is_err() {
                return 1;
            }
            0
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::TimeCap(secs)) => {
            let _ = writeln!(err, "error: time cap of {secs}s exceeded");
            3
        }
    }
}
