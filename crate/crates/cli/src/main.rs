//! `homz`: exact computations with finitely generated abelian groups.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homz_core::battery::{run_suite, SUITES};
use homz_core::fgab::{hom_group, tensor, Canonical, PresentationJson};
use homz_core::intlin::smith_normal_form;
use homz_core::robinson::{
    component_group, worked_example_report, pi0, pi0_report, Truncation, DEFAULT_OBJECT_LIMIT,
};
use homz_core::torfun::{free_resolution, tor_table, ResolutionStyle};
use homz_core::{Error, FgAbGroup, IntMatrix};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "homz", version, about = "Exact homological algebra over the integers")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form U·A·V = D of a matrix given as JSON, e.g. '[[2,4],[6,8]]'.
    Snf { matrix: String },
    /// Invariant factors and free rank of a group.
    Classify { group: String },
    /// A ⊗ B.
    Tensor { a: String, b: String },
    /// Hom(A, B).
    Hom { a: String, b: String },
    /// Tor_0 … Tor_nmax of (A, B).
    Tor {
        a: String,
        b: String,
        #[arg(default_value_t = 2)]
        nmax: usize,
    },
    /// A free resolution of a group.
    Resolve {
        group: String,
        /// Add this many cancelling pairs to the minimal resolution.
        #[arg(long, default_value_t = 0)]
        pad: usize,
    },
    /// Path components of the truncated torsion category of (A, B).
    Pi0 {
        a: String,
        b: String,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Shuffle the edge visiting order; the result must not change.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_OBJECT_LIMIT)]
        limit: usize,
    },
    /// The worked example A = Z/4, B = Z/6, replayed with every step checked.
    RobinsonDemo,
    /// Run a named property battery.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A group literal (`Z^2 + Z/4`) or a JSON presentation
/// (`{"generators": 2, "relations": [["2","0"],["0","3"]]}`).
fn group(arg: &str) -> Result<FgAbGroup, Error> {
    if arg.trim_start().starts_with('{') {
        let p: PresentationJson = serde_json::from_str(arg).map_err(|e| {
            Error::parse(e.column().saturating_sub(1), format!("presentation JSON: {e}"))
        })?;
        return p.into_group();
    }
    FgAbGroup::parse(arg)
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn new(value: impl Serialize, text: String) -> Self {
        Output {
            json: serde_json::to_value(value).expect("report serialises"),
            text,
            ok: true,
        }
    }
}

fn matrix_text(m: &IntMatrix) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return format!("  ({}x{})\n", m.rows(), m.cols());
    }
    let cells: Vec<String> = m.entries().iter().map(ToString::to_string).collect();
    let w = cells.iter().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for row in cells.chunks(m.cols()) {
        s.push_str("  [");
        s.push_str(&row.iter().map(|c| format!("{c:>w$}")).collect::<Vec<_>>().join(" "));
        s.push_str("]\n");
    }
    s
}

fn canonical_json(c: &Canonical) -> Value {
    let mut v = serde_json::to_value(c).expect("canonical serialises");
    v["literal"] = json!(c.to_literal());
    v
}

fn run(cli: &Cli) -> Result<Output, Error> {
    Ok(match &cli.command {
        Command::Snf { matrix } => {
            let a = IntMatrix::from_json(matrix)?;
            let s = smith_normal_form(&a);
            let diag: Vec<String> = s.diagonal().iter().map(ToString::to_string).collect();
            let text = format!(
                "rank {}\ndiagonal [{}]\nU\n{}D\n{}V\n{}",
                s.rank,
                diag.join(", "),
                matrix_text(&s.u),
                matrix_text(&s.d),
                matrix_text(&s.v)
            );
            Output::new(
                json!({"rank": s.rank, "diagonal": diag, "U": s.u, "D": s.d, "V": s.v}),
                text,
            )
        }
        Command::Classify { group: g } => {
            let c = group(g)?.canonical().clone();
            Output {
                text: format!("{c}\n"),
                json: canonical_json(&c),
                ok: true,
            }
        }
        Command::Tensor { a, b } => {
            let (a, b) = (group(a)?, group(b)?);
            let t = tensor(&a, &b);
            let c = t.group().canonical();
            Output::new(
                json!({"A": a.to_literal(), "B": b.to_literal(), "result": canonical_json(c)}),
                format!("{a} ⊗ {b} ≅ {c}\n"),
            )
        }
        Command::Hom { a, b } => {
            let (a, b) = (group(a)?, group(b)?);
            let h = hom_group(&a, &b)?;
            let c = h.group().canonical();
            Output::new(
                json!({"A": a.to_literal(), "B": b.to_literal(), "result": canonical_json(c)}),
                format!("Hom({a}, {b}) ≅ {c}\n"),
            )
        }
        Command::Tor { a, b, nmax } => {
            let t = tor_table(&group(a)?, &group(b)?, *nmax)?;
            let mut text = String::new();
            for e in &t.results {
                let _ = writeln!(text, "Tor_{}({}, {}) ≅ {}", e.n, t.a, t.b, e.group);
            }
            Output::new(&t, text)
        }
        Command::Resolve { group: g, pad } => {
            let g = group(g)?;
            let style = match pad {
                0 => ResolutionStyle::Minimal,
                k => ResolutionStyle::Padded(*k),
            };
            let r = free_resolution(&g, style);
            let mut text = format!("resolution of {g}: ranks {:?}\n", r.ranks());
            for (i, d) in r.boundaries().iter().enumerate() {
                let _ = write!(text, "d_{}\n{}", i + 1, matrix_text(d));
            }
            let _ = write!(text, "augmentation\n{}", matrix_text(r.augmentation().matrix()));
            Output::new(
                json!({
                    "group": g.to_literal(),
                    "ranks": r.ranks(),
                    "boundaries": r.boundaries(),
                    "augmentation": r.augmentation().matrix(),
                    "exact": r.is_exact()?,
                }),
                text,
            )
        }
        Command::Pi0 {
            a,
            b,
            rank,
            seed,
            limit,
        } => {
            let t = Truncation::enumerate(&group(a)?, &group(b)?, *rank, *limit)?;
            let p = pi0(&t, *seed)?;
            let g = component_group(&t, &p)?;
            let r = pi0_report(&t, &p, &g);
            let mut text = format!(
                "A = {}, B = {}, rank ≤ {}: {} objects, {} edges, {} components",
                r.a, r.b, r.max_rank, r.object_count, r.edge_count, r.component_count
            );
            if let Some(c) = &r.component_group {
                let _ = write!(text, ", group {c}");
            }
            let _ = writeln!(text, ", χ̄ bijective: {}", r.bijection);
            for c in &r.components {
                let _ = writeln!(text, "  {} ({} objects)", c.representative, c.size);
            }
            Output::new(&r, text)
        }
        Command::RobinsonDemo => {
            let r = worked_example_report()?;
            let mut text = String::new();
            for run in &r.runs {
                let _ = writeln!(
                    text,
                    "rank ≤ {}: {} objects, {} components, group {}",
                    run.max_rank,
                    run.object_count,
                    run.component_count,
                    run.component_group.as_ref().map_or("-".into(), Canonical::to_literal)
                );
            }
            for s in &r.steps {
                let _ = writeln!(text, "[{}] {}: {}", if s.passed { "ok" } else { "FAIL" }, s.name, s.detail);
            }
            let ok = r.passed;
            let mut out = Output::new(&r, text);
            out.ok = ok;
            out
        }
        Command::Check { suite, seed } => {
            let r = run_suite(suite, *seed)?;
            let mut text = format!(
                "{} (seed {}): {} cases, {} failures\n",
                r.suite,
                r.seed,
                r.cases,
                r.failures.len()
            );
            for f in &r.failures {
                let _ = writeln!(text, "  {f}");
            }
            let ok = r.passed();
            let mut json = serde_json::to_value(&r).expect("report serialises");
            json["passed"] = json!(ok);
            Output { json, text, ok }
        }
    })
}

/// The offending literal of a parse error, for the caret display.
fn offending_input(cli: &Cli) -> Vec<&str> {
    match &cli.command {
        Command::Snf { matrix } => vec![matrix],
        Command::Classify { group } | Command::Resolve { group, .. } => vec![group],
        Command::Tensor { a, b } | Command::Hom { a, b } | Command::Tor { a, b, .. } | Command::Pi0 { a, b, .. } => {
            vec![a, b]
        }
        Command::RobinsonDemo | Command::Check { .. } => vec![],
    }
}

fn report_error(cli: &Cli, e: &Error) -> ExitCode {
    let code = if e.is_parse() { 2 } else { 1 };
    match cli.format {
        Format::Json => {
            let mut v = json!({"error": e.to_string(), "exitCode": code});
            if let Error::Parse { position, message } = e {
                v["position"] = json!(position);
                v["message"] = json!(message);
            }
            eprintln!("{v}");
        }
        Format::Text => {
            eprintln!("error: {e}");
            if let Error::Parse { position, .. } = e {
                // only unambiguous when a single literal was given
                if let [input] = offending_input(cli)[..] {
                    eprintln!("  {input}\n  {}^", " ".repeat(*position));
                }
            }
        }
    }
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Check { suite, .. } = &cli.command {
        if !SUITES.contains(&suite.as_str()) {
            eprintln!("error: unknown suite {suite:?}; expected one of {}", SUITES.join(", "));
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&out.json).expect("valid JSON"))
                }
                Format::Text => print!("{}", out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => report_error(&cli, &e),
    }
}
