//! Command implementations behind the `siginf` binary.
//!
//! Each command produces a [`Report`] and an exit code. Rendering (human or
//! JSON) is separate so tests can inspect reports directly.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use siginf_core::{
    build_et, closed_form_min_norm, et_report, mu_infinity, optimal_vector, q_infinity_formula,
    q_infinity_lp, verify_duality, Error, EtParams, Graph, RatMatrix, RatVector, Rational,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "siginf",
    version,
    about = "Exact signless ∞-Laplacian eigenvalues and minimal-norm generalized inverses"
)]
pub struct Cli {
    /// Emit a single JSON object on standard output.
    #[arg(long, global = true)]
    pub json: bool,

    /// Print only the headline value.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smallest normalized signless ∞-Laplacian eigenvalue of a graph.
    MuInf { file: PathBuf },
    /// Minimal ∞,∞-norm generalized inverse of the weighted incidence matrix.
    Geninv {
        file: PathBuf,
        /// Print the full inverse matrix.
        #[arg(long)]
        matrix: bool,
        /// Use the weighted-median path for bicyclic graphs (m = n + 1).
        #[arg(long)]
        median: bool,
    },
    /// Check that μ∞ times the minimal inverse norm is exactly one.
    Verify { file: PathBuf },
    /// Work with the ET(n, a, b) family.
    Et(EtArgs),
    /// Unnormalized q∞ by the odd-walk formula and by linear programming.
    Qinf { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct EtArgs {
    /// Length of the odd cycle.
    #[arg(long, required_unless_present = "grid")]
    pub a: Option<usize>,
    /// Length of the second cycle.
    #[arg(long, required_unless_present = "grid")]
    pub b: Option<usize>,
    /// Write the graph as an edge list instead of the report.
    #[arg(long)]
    pub emit_graph: bool,
    /// Sweep every valid (a, b) with a ≤ A and b ≤ B.
    #[arg(long, num_args = 2, value_names = ["A", "B"], conflicts_with_all = ["a", "b", "emit_graph"])]
    pub grid: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: String,
    pub m: String,
    pub connected: bool,
    pub bipartite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum State {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Status {
    pub state: State,
    pub code: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

/// Outcome of one command. Every number is a canonical rational string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: Option<InputSummary>,
    pub results: Map<String, Value>,
    pub status: Status,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            input: None,
            results: Map::new(),
            status: Status {
                state: State::Ok,
                code: EXIT_OK.to_string(),
                message: None,
            },
        }
    }

    fn set(&mut self, key: &str, value: Value) {
        self.results.insert(key.into(), value);
    }

    fn fail(&mut self, code: i32, message: String) {
        self.status = Status {
            state: State::Error,
            code: code.to_string(),
            message: Some(message),
        };
    }

    pub fn exit_code(&self) -> i32 {
        self.status.code.parse().unwrap_or(EXIT_INCONSISTENT)
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::InvalidParameter(_)
        | Error::InvalidInput(_)
        | Error::IllFormed(_) => EXIT_INPUT,
        Error::Hypothesis(_) | Error::Degenerate(_) | Error::Infeasible(_) => EXIT_HYPOTHESIS,
        Error::Dimension(_) | Error::ConstructionMismatch(_) => EXIT_INCONSISTENT,
    }
}

fn q(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn qvec(v: &RatVector) -> Value {
    Value::Array(v.iter().map(q).collect())
}

fn qmat(m: &RatMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| qvec(&m.row_vector(i))).collect())
}

fn count(k: usize) -> Value {
    Value::String(k.to_string())
}

fn summarize(g: &Graph) -> InputSummary {
    InputSummary {
        n: g.n().to_string(),
        m: g.m().to_string(),
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
    }
}

fn load(path: &Path) -> Result<Graph, (i32, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| (EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
    Graph::parse_edge_list(&text)
        .map_err(|e| (exit_code_for(&e), format!("{}: {e}", path.display())))
}

type Step = Result<(), (i32, String)>;

fn lift(e: Error) -> (i32, String) {
    (exit_code_for(&e), e.to_string())
}

fn mu_inf(path: &Path, report: &mut Report) -> Step {
    let g = load(path)?;
    report.input = Some(summarize(&g));
    let r = mu_infinity(&g).map_err(lift)?;
    report.set("mu", q(&r.mu));
    report.set("optimal_x", qvec(&r.optimal_x));
    if g.is_bipartite() {
        report.set("certificate", json!("bipartite"));
    } else {
        let (u, v) = g.edges()[r.tight_edge];
        report.set("tight_edge", count(r.tight_edge + 1));
        report.set("tight_edge_vertices", json!([count(u + 1), count(v + 1)]));
        report.set("fixed_coord", count(r.fixed_coord + 1));
    }
    Ok(())
}

fn geninv(path: &Path, matrix: bool, median: bool, report: &mut Report) -> Step {
    let g = load(path)?;
    report.input = Some(summarize(&g));
    let use_median = median && g.m() == g.n() + 1;
    let r = if use_median {
        siginf_core::min_norm_bicyclic_median(&g)
    } else {
        siginf_core::min_norm_generalized_inverse(&g)
    }
    .map_err(lift)?;
    report.set("method", json!(if use_median { "median" } else { "lp" }));
    report.set("norm", q(&r.norm));
    report.set("row_values", qvec(&r.row_values));
    if matrix {
        report.set("matrix", qmat(&r.g));
    }
    Ok(())
}

fn verify(path: &Path, report: &mut Report) -> Step {
    let g = load(path)?;
    report.input = Some(summarize(&g));
    let r = verify_duality(&g).map_err(lift)?;
    report.set("mu", q(&r.mu));
    report.set("norm", q(&r.norm));
    report.set("product", q(&r.product));
    report.set("pass", json!(r.pass));
    if !r.pass {
        return Err((
            EXIT_INCONSISTENT,
            format!("mu * norm = {}, expected 1", r.product),
        ));
    }
    Ok(())
}

fn qinf(path: &Path, report: &mut Report) -> Step {
    let g = load(path)?;
    report.input = Some(summarize(&g));
    let formula = q_infinity_formula(&g).map_err(lift)?;
    let lp = q_infinity_lp(&g).map_err(lift)?;
    let agree = formula == lp;
    report.set("formula", q(&formula));
    report.set("lp", q(&lp));
    report.set("agree", json!(agree));
    if !agree {
        return Err((
            EXIT_INCONSISTENT,
            format!("odd-walk formula {formula} disagrees with LP {lp}"),
        ));
    }
    Ok(())
}

fn et(args: &EtArgs, report: &mut Report) -> Step {
    if let Some(bounds) = &args.grid {
        let mut rows = Vec::new();
        let mut bad = Vec::new();
        for p in EtParams::grid(bounds[0], bounds[1]) {
            let r = et_report(p).map_err(lift)?;
            if !r.all_consistent {
                bad.push(format!("({}, {})", p.a(), p.b()));
            }
            rows.push(json!({
                "a": count(p.a()),
                "b": count(p.b()),
                "n": count(p.n()),
                "closed_form": q(&r.closed_form),
                "all_consistent": r.all_consistent,
            }));
        }
        report.set("grid", Value::Array(rows));
        if !bad.is_empty() {
            return Err((
                EXIT_INCONSISTENT,
                format!("inconsistent at {}", bad.join(", ")),
            ));
        }
        return Ok(());
    }
    let (a, b) = (
        args.a.expect("clap enforces --a"),
        args.b.expect("clap enforces --b"),
    );
    let p = EtParams::new(a, b).map_err(lift)?;
    let g = build_et(p);
    report.input = Some(summarize(&g));
    report.set("a", count(a));
    report.set("b", count(b));
    report.set("n", count(p.n()));
    if args.emit_graph {
        report.set("edge_list", json!(g.to_edge_list()));
        return Ok(());
    }
    let r = et_report(p).map_err(lift)?;
    report.set("closed_form", q(&r.closed_form));
    report.set("lp_norm", q(&r.lp_norm));
    report.set("median_norm", q(&r.median_norm));
    report.set("mu_lp", q(&r.mu_lp));
    report.set("y_eval", q(&r.y_eval));
    report.set("optimal_vector", qvec(&optimal_vector(p).map_err(lift)?));
    report.set("all_consistent", json!(r.all_consistent));
    if !r.all_consistent {
        return Err((
            EXIT_INCONSISTENT,
            format!("routes disagree; closed form {}", closed_form_min_norm(p)),
        ));
    }
    Ok(())
}

/// Runs a parsed command line and returns its report; the exit code is
/// [`Report::exit_code`].
pub fn run(cli: &Cli) -> Report {
    let name = match &cli.command {
        Command::MuInf { .. } => "mu-inf",
        Command::Geninv { .. } => "geninv",
        Command::Verify { .. } => "verify",
        Command::Et(_) => "et",
        Command::Qinf { .. } => "qinf",
    };
    let mut report = Report::new(name);
    let step = match &cli.command {
        Command::MuInf { file } => mu_inf(file, &mut report),
        Command::Geninv {
            file,
            matrix,
            median,
        } => geninv(file, *matrix, *median, &mut report),
        Command::Verify { file } => verify(file, &mut report),
        Command::Et(args) => et(args, &mut report),
        Command::Qinf { file } => qinf(file, &mut report),
    };
    if let Err((code, message)) = step {
        report.fail(code, message);
    }
    report
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "({})",
            items.iter().map(text).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

/// The key printed alone under `--quiet`.
fn headline(command: &str) -> &'static str {
    match command {
        "mu-inf" => "mu",
        "geninv" => "norm",
        "verify" => "product",
        "qinf" => "lp",
        _ => "closed_form",
    }
}

/// Human-readable rendering for standard output.
pub fn render_text(report: &Report, quiet: bool) -> String {
    let mut out = String::new();
    if let Some(Value::String(edges)) = report.results.get("edge_list") {
        return edges.clone();
    }
    if quiet {
        if let Some(v) = report.results.get(headline(&report.command)) {
            let _ = writeln!(out, "{}", text(v));
        }
        return out;
    }
    if let Some(inp) = &report.input {
        let _ = writeln!(
            out,
            "graph: n = {}, m = {}, connected = {}, bipartite = {}",
            inp.n, inp.m, inp.connected, inp.bipartite
        );
    }
    for (key, value) in &report.results {
        match (key.as_str(), value) {
            ("matrix", Value::Array(rows)) => {
                let _ = writeln!(out, "matrix =");
                for row in rows {
                    let _ = writeln!(
                        out,
                        "  [{}]",
                        text(row).trim_matches(|c| c == '(' || c == ')')
                    );
                }
            }
            ("grid", Value::Array(rows)) => {
                let _ = writeln!(
                    out,
                    "{:>3} {:>3} {:>3} {:>12} consistent",
                    "a", "b", "n", "min-norm"
                );
                for row in rows {
                    let _ = writeln!(
                        out,
                        "{:>3} {:>3} {:>3} {:>12} {}",
                        text(&row["a"]),
                        text(&row["b"]),
                        text(&row["n"]),
                        text(&row["closed_form"]),
                        row["all_consistent"]
                    );
                }
            }
            _ => {
                let _ = writeln!(out, "{key} = {}", text(value));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_are_disjoint_by_class() {
        let parse = Error::Parse {
            line: 1,
            message: "x".into(),
        };
        assert_eq!(exit_code_for(&parse), EXIT_INPUT);
        assert_eq!(
            exit_code_for(&Error::InvalidParameter("a".into())),
            EXIT_INPUT
        );
        assert_eq!(
            exit_code_for(&Error::Hypothesis("h".into())),
            EXIT_HYPOTHESIS
        );
        assert_eq!(
            exit_code_for(&Error::Degenerate("d".into())),
            EXIT_HYPOTHESIS
        );
        assert_eq!(
            exit_code_for(&Error::ConstructionMismatch("c".into())),
            EXIT_INCONSISTENT
        );
    }

    #[test]
    fn quiet_text_uses_headline() {
        let cli = Cli::parse_from(["siginf", "et", "--a", "3", "--b", "4"]);
        let report = run(&cli);
        assert_eq!(render_text(&report, true), "7\n");
        assert!(render_text(&report, false).contains("y_eval = 1/7"));
    }
}
