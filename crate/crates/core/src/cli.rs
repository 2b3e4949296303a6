//! Command-line front end. `run` never exits the process; `main` does.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::koszul_report;
use crate::graph::{BrauerGraph, GraphError};
use crate::oracle::FieldKind;
use crate::presentation::Presentation;
use crate::resolution::{self, ResolutionError};
use crate::strings::{self, StringError};
use crate::verify::{verify, Fault, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "brauer", version, about = "Brauer graph algebras: quivers, resolutions, Ext and Koszul-type classification")]
struct Cli {
    /// Brauer graph document (`.bg.json`).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Run on every `.bg.json` file in a directory.
    #[arg(long, global = true, conflicts_with = "input")]
    input_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldKind,
    #[command(subcommand)]
    command: Command,
}

fn parse_field(s: &str) -> Result<FieldKind, String> {
    FieldKind::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Subcommand)]
enum Command {
    /// The quiver of the algebra.
    Quiver,
    /// Relations generating the ideal.
    Relations {
        #[arg(long)]
        minimal: bool,
    },
    /// Homogeneity and Koszul-type verdicts.
    Classify {
        #[arg(long)]
        explain: bool,
    },
    /// Explicit minimal resolution of a simple module.
    Resolve {
        #[arg(long)]
        edge: String,
        #[arg(long, default_value_t = 4)]
        max: usize,
        #[arg(long)]
        graded: bool,
    },
    /// Iterated syzygies of a simple module as string descriptors.
    Syzygy {
        #[arg(long)]
        edge: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Brauer walk from a truncated edge.
    Walk {
        #[arg(long)]
        edge: String,
    },
    /// Ext dimensions between simple modules.
    Ext {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: Option<String>,
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Cross-check everything against the brute-force algebra.
    Verify {
        #[arg(long, default_value_t = 4)]
        max: usize,
        /// Negate one differential entry, `edge:degree:row:col`.
        #[arg(long, value_name = "EDGE:DEGREE:ROW:COL")]
        flip_sign: Vec<String>,
        /// Leave out the k-th minimal relation.
        #[arg(long, value_name = "K")]
        drop_relation: Vec<usize>,
    },
}

#[derive(Debug)]
enum Failure {
    Validation(String),
    Hypothesis(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Validation(_) => EXIT_VALIDATION,
            Failure::Hypothesis(_) => EXIT_HYPOTHESIS,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::Hypothesis(m) => m,
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Invalid(report) => Failure::Validation(
                serde_json::to_string_pretty(&serde_json::json!({ "violations": report.violations })).expect("serializable"),
            ),
            GraphError::Parse(_) | GraphError::UnknownVertex(_) | GraphError::UnknownEdge(_) => Failure::Validation(e.to_string()),
            _ => Failure::Hypothesis(e.to_string()),
        }
    }
}

impl From<StringError> for Failure {
    fn from(e: StringError) -> Self {
        match e {
            StringError::Graph(g) => g.into(),
            other => Failure::Hypothesis(other.to_string()),
        }
    }
}

impl From<ResolutionError> for Failure {
    fn from(e: ResolutionError) -> Self {
        match e {
            ResolutionError::Graph(g) => g.into(),
            ResolutionError::Strings(s) => s.into(),
            ResolutionError::Hypothesis(_) => Failure::Hypothesis(e.to_string()),
        }
    }
}

/// Rendered result of one command on one graph.
struct Report {
    code: i32,
    json: serde_json::Value,
    text: String,
    dot: Option<String>,
}

impl Report {
    fn ok(json: serde_json::Value, text: String) -> Self {
        Report { code: EXIT_OK, json, text, dot: None }
    }

    fn render(&self, format: Format) -> Result<String, Failure> {
        match format {
            Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(&self.json).expect("serializable"))),
            Format::Text => Ok(self.text.clone()),
            Format::Dot => self.dot.clone().ok_or_else(|| Failure::Validation("DOT output is only available for `quiver`".into())),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_VALIDATION, stdout: String::new(), stderr: text },
            };
        }
    };
    match (&cli.input, &cli.input_dir) {
        (Some(path), None) => run_file(&cli, path),
        (None, Some(dir)) => run_dir(&cli, dir),
        _ => Outcome { code: EXIT_VALIDATION, stdout: String::new(), stderr: "one of --input or --input-dir is required\n".into() },
    }
}

fn load(path: &Path) -> Result<BrauerGraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Validation(format!("cannot read {}: {e}", path.display())))?;
    Ok(BrauerGraph::from_json(&text)?)
}

fn run_file(cli: &Cli, path: &Path) -> Outcome {
    let result = load(path).and_then(|g| execute(&g, &cli.command, cli.field)).and_then(|r| Ok((r.code, r.render(cli.format)?)));
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(f) => Outcome { code: f.code(), stdout: String::new(), stderr: format!("{}\n", f.message()) },
    }
}

/// Files are processed concurrently; the report lists them in name order.
fn run_dir(cli: &Cli, dir: &Path) -> Outcome {
    let mut files: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(entries) => entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.to_string_lossy().ends_with(".bg.json"))
            .collect(),
        Err(e) => {
            return Outcome { code: EXIT_VALIDATION, stdout: String::new(), stderr: format!("cannot read {}: {e}\n", dir.display()) }
        }
    };
    files.sort();
    let outcomes: Vec<Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = files.iter().map(|f| s.spawn(|| run_file(cli, f))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let code = outcomes.iter().map(|o| o.code).max().unwrap_or(EXIT_OK);
    let name = |p: &PathBuf| p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    match cli.format {
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (f, o) in files.iter().zip(&outcomes) {
                let value = if o.stdout.is_empty() {
                    serde_json::json!({ "exit": o.code, "error": o.stderr.trim_end() })
                } else {
                    serde_json::json!({ "exit": o.code, "result": serde_json::from_str::<serde_json::Value>(&o.stdout).unwrap_or_default() })
                };
                map.insert(name(f), value);
            }
            let stdout = format!("{}\n", serde_json::to_string_pretty(&serde_json::Value::Object(map)).expect("serializable"));
            Outcome { code, stdout, stderr: String::new() }
        }
        _ => {
            let mut stdout = String::new();
            let mut stderr = String::new();
            for (f, o) in files.iter().zip(&outcomes) {
                let _ = writeln!(stdout, "== {} (exit {})", name(f), o.code);
                stdout.push_str(&o.stdout);
                if !o.stderr.is_empty() {
                    let _ = write!(stderr, "{}: {}", name(f), o.stderr);
                }
            }
            Outcome { code, stdout, stderr }
        }
    }
}

fn execute(g: &BrauerGraph, cmd: &Command, field: FieldKind) -> Result<Report, Failure> {
    match cmd {
        Command::Quiver => {
            let p = Presentation::new(g);
            Ok(Report { dot: Some(p.quiver_dot()), ..Report::ok(p.quiver_json(g), p.quiver_text()) })
        }
        Command::Relations { minimal } => {
            let p = Presentation::new(g);
            Ok(Report::ok(p.relations_json(g, *minimal), p.relations_text(g, *minimal)))
        }
        Command::Classify { explain } => {
            let report = koszul_report(g, field);
            let json = report.to_json(*explain);
            let mut text = String::new();
            if let serde_json::Value::Object(map) = report.to_json(false) {
                for (k, v) in map {
                    let _ = writeln!(text, "{k}: {v}");
                }
            }
            Ok(Report::ok(json, text))
        }
        Command::Resolve { edge, max, graded } => {
            let e = g.edge(edge)?;
            if *graded && !g.is_length_graded() {
                return Err(Failure::Hypothesis("the algebra is not length graded".into()));
            }
            let (variant, steps) = if g.is_reduced() {
                ("reduced", resolution::resolve_simple(g, e, *max)?)
            } else {
                ("2-d-homogeneous", resolution::resolve_simple_2d(g, e, *max)?)
            };
            let p = Presentation::new(g);
            let json = serde_json::json!({
                "edge": edge,
                "variant": variant,
                "steps": steps.iter().map(|s| s.to_json(g, &p.quiver, *graded)).collect::<Vec<_>>(),
            });
            let mut text = String::new();
            for s in &steps {
                let parts: Vec<String> = s
                    .summands
                    .iter()
                    .zip(&s.generation_degrees)
                    .map(|(&(pos, v), &d)| if *graded { format!("P({})<{d}>@{pos}", g.edge_id(v)) } else { format!("P({})@{pos}", g.edge_id(v)) })
                    .collect();
                let _ = writeln!(text, "Q^{} = {}", s.degree, parts.join(" + "));
                for x in &s.entries {
                    let _ = writeln!(text, "  [{},{}] {}{}", x.row, x.col, if x.negative { "-" } else { "+" }, x.path.ids(&p.quiver).join(""));
                }
            }
            Ok(Report::ok(json, text))
        }
        Command::Syzygy { edge, max } => {
            let e = g.edge(edge)?;
            let trace = strings::iterate_syzygy(g, e, *max)?;
            let cap = strings::default_period_cap(g);
            let period = strings::period(g, e, cap)?;
            let mut json = trace.to_json(g);
            json["period"] = serde_json::json!(period);
            let mut text = String::new();
            for n in 1..=*max {
                let _ = writeln!(text, "Ω^{n} = {}", trace.omega(n).display(g));
            }
            let _ = writeln!(text, "period: {}", period.map_or_else(|| format!("none up to {cap}"), |p| p.to_string()));
            Ok(Report::ok(json, text))
        }
        Command::Walk { edge } => {
            let w = g.brauer_walk(g.edge(edge)?)?;
            let ids: Vec<&str> = w.edges.iter().map(|&e| g.edge_id(e)).collect();
            Ok(Report::ok(serde_json::json!(ids), format!("{}\n", ids.join(" -> "))))
        }
        Command::Ext { from, to, max } => {
            let s = g.edge(from)?;
            let targets: Vec<usize> = match to {
                Some(t) => vec![g.edge(t)?],
                None => (0..g.num_edges()).collect(),
            };
            let mut table = serde_json::Map::new();
            let mut text = format!("n\t{}\n", targets.iter().map(|&t| g.edge_id(t)).collect::<Vec<_>>().join("\t"));
            let mut rows = vec![Vec::new(); max + 1];
            for &t in &targets {
                let dims = (0..=*max).map(|n| resolution::ext_dim(g, s, t, n)).collect::<Result<Vec<_>, _>>()?;
                for (n, d) in dims.iter().enumerate() {
                    rows[n].push(d.to_string());
                }
                table.insert(g.edge_id(t).to_string(), serde_json::json!(dims));
            }
            for (n, row) in rows.iter().enumerate() {
                let _ = writeln!(text, "{n}\t{}", row.join("\t"));
            }
            Ok(Report::ok(serde_json::json!({ "from": from, "dims": table }), text))
        }
        Command::Verify { max, flip_sign, drop_relation } => {
            let mut faults = Vec::new();
            for arg in flip_sign {
                faults.push(parse_flip(g, arg)?);
            }
            faults.extend(drop_relation.iter().map(|&k| Fault::DropRelation(k)));
            let report = verify(g, &VerifyOptions { max_degree: *max, field, faults });
            let mut text = String::new();
            for (name, r) in &report.sections {
                let _ = writeln!(text, "{name}: {} checks, {} mismatches", r.checks, r.diffs.len());
                for d in &r.diffs {
                    let _ = writeln!(text, "  {}: expected {}, got {}", d.check, d.expected, d.actual);
                }
            }
            let code = if report.ok() { EXIT_OK } else { EXIT_MISMATCH };
            Ok(Report { code, ..Report::ok(report.to_json(), text) })
        }
    }
}

fn parse_flip(g: &BrauerGraph, arg: &str) -> Result<Fault, Failure> {
    let bad = || Failure::Validation(format!("--flip-sign expects EDGE:DEGREE:ROW:COL, got `{arg}`"));
    let parts: Vec<&str> = arg.split(':').collect();
    let [edge, degree, row, col] = parts.as_slice() else { return Err(bad()) };
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    Ok(Fault::FlipSign { edge: g.edge(edge)?, degree: num(degree)?, row: num(row)?, col: num(col)? })
}
