//! Batch front end for `seifert-core`: parse or generate a forest, run one
//! computation, print a table or JSON.

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use seifert_core::alexander::{self, Method};
use seifert_core::complex::sc_dim_from_counts;
use seifert_core::{hf, spectral, BiPolynomial, BigradedTable, Error, Forest, IntPolynomial, SeifertComplex};

pub mod check;

/// Forests whose complexes are larger than this are refused without `--force`.
pub const CONFIG_LIMIT: u128 = 1 << 30;

/// Vertex bound for the Euler cross-check inside `check`.
pub const EULER_LIMIT: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "seifert", version, about = "Seifert complex of a forest over GF(2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Do not report elapsed time on stderr.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Run even when the complex exceeds the size guardrail.
    #[arg(long, global = true)]
    pub force: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Seifert cohomology dimensions and the Poincaré polynomial.
    Cohomology { input: String },
    /// Alexander polynomial.
    Alexander {
        input: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Det)]
        method: MethodArg,
    },
    /// Pages of the spectral sequence and its limit.
    Spectral {
        input: String,
        /// Last page to print (default: the page after which nothing changes).
        #[arg(long)]
        max_page: Option<usize>,
    },
    /// Cohomology of the K₂ operator.
    K2 { input: String },
    /// Heegaard–Floer polynomials from Δ and the comparison with K₂-cohomology.
    Hf { input: String },
    /// Run the invariant suite.
    Check { input: String },
    /// Configuration counts per bidegree.
    Count { input: String },
}

impl Command {
    fn input(&self) -> &str {
        match self {
            Command::Cohomology { input }
            | Command::Alexander { input, .. }
            | Command::Spectral { input, .. }
            | Command::K2 { input }
            | Command::Hf { input }
            | Command::Check { input }
            | Command::Count { input } => input,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Cohomology { .. } => "cohomology",
            Command::Alexander { .. } => "alexander",
            Command::Spectral { .. } => "spectral",
            Command::K2 { .. } => "k2",
            Command::Hf { .. } => "hf",
            Command::Check { .. } => "check",
            Command::Count { .. } => "count",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Det,
    Matchings,
    Euler,
    Recursive,
    Monodromy,
    All,
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID_INPUT: i32 = 1;
    pub const PRECONDITION: i32 = 2;
    pub const INVARIANT: i32 = 3;
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Precondition(String),
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        let (code, message) = match self {
            Failure::Input(m) => (exit::INVALID_INPUT, m),
            Failure::Precondition(m) => (exit::PRECONDITION, m),
        };
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Link(_) | Error::Disconnected | Error::NotAlgebraic(_) | Error::RecipeViolation { .. } => {
                Failure::Precondition(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Result of one computation.
pub struct Report {
    pub forest: Forest,
    pub computation: &'static str,
    pub result: Value,
    pub text: String,
    /// Set when an invariant or cross-check failed.
    pub failed: bool,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "forest": forest_json(&self.forest),
            "computation": self.computation,
            "result": self.result,
        })
    }
}

/// Captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs a parsed command line, reading `-` input from `stdin`.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let start = Instant::now();
    let forest = match read_forest(cli.command.input(), stdin) {
        Ok(f) => f,
        Err(e) => return e.into_outcome(),
    };
    let report = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| guarded(cli, forest)),
            Err(e) => Err(Failure::Input(format!("cannot start {n} threads: {e}"))),
        },
        None => guarded(cli, forest),
    };
    match report {
        Err(e) => e.into_outcome(),
        Ok(report) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&report.to_json()).expect("JSON values serialize");
                s.push('\n');
                s
            } else {
                report.text
            };
            let mut stderr = String::new();
            if !cli.no_timing {
                let _ = writeln!(stderr, "elapsed: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
            }
            let code = if report.failed { exit::INVARIANT } else { exit::OK };
            Outcome { code, stdout, stderr }
        }
    }
}

/// Total number of configurations, from matching counts alone.
pub fn configuration_count(f: &Forest) -> u128 {
    let v = f.vertex_count();
    f.matching_size_counts().iter().enumerate().map(|(j, &m)| m as u128 * (1u128 << (v - 2 * j))).sum()
}

fn guarded(cli: &Cli, f: Forest) -> Result<Report, Failure> {
    if !cli.force && !matches!(cli.command, Command::Count { .. }) {
        let count = configuration_count(&f);
        if count > CONFIG_LIMIT {
            return Err(Failure::Precondition(format!(
                "{count} configurations exceed the limit of {CONFIG_LIMIT}; pass --force to run anyway"
            )));
        }
    }
    execute(&cli.command, f)
}

/// `-` reads stdin; an existing path is read as a file; anything else must
/// be a named shorthand.
fn read_forest(input: &str, stdin: &mut dyn Read) -> Result<Forest, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
        s
    } else if Path::new(input).is_file() {
        std::fs::read_to_string(input).map_err(|e| Failure::Input(format!("reading {input}: {e}")))?
    } else {
        return match Forest::from_shorthand(input) {
            Some(result) => Ok(result?),
            None => Err(Failure::Input(format!("{input:?} is neither a file nor a known shorthand"))),
        };
    };
    Ok(Forest::parse_source(&text)?)
}

fn execute(command: &Command, f: Forest) -> Result<Report, Failure> {
    let name = command.name();
    let (result, text, failed) = match command {
        Command::Cohomology { .. } => cohomology(&f),
        Command::Alexander { method, .. } => alexander_cmd(&f, *method),
        Command::Spectral { max_page, .. } => spectral_cmd(&f, *max_page)?,
        Command::K2 { .. } => k2_cmd(&f)?,
        Command::Hf { .. } => hf_cmd(&f)?,
        Command::Check { .. } => check_cmd(&f),
        Command::Count { .. } => count_cmd(&f),
    };
    let header = format!("forest: {} vertices, {} edges\n", f.vertex_count(), f.edge_count());
    Ok(Report { forest: f, computation: name, result, text: header + &text, failed })
}

pub fn forest_json(f: &Forest) -> Value {
    json!({ "v": f.vertex_count(), "edges": f.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>() })
}

/// Nonzero terms as `[coefficient, exponent]`, ascending.
pub fn poly_json(p: &IntPolynomial) -> Value {
    let terms: Vec<Value> =
        p.coefficients().iter().enumerate().filter(|(_, c)| **c != 0).map(|(k, c)| json!([c, k])).collect();
    Value::Array(terms)
}

/// Nonzero terms as `[coefficient, first exponent, second exponent]`,
/// ascending lexicographically in the exponents.
pub fn bipoly_json(p: &BiPolynomial) -> Value {
    Value::Array(p.terms().map(|((a, b), c)| json!([c, a, b])).collect())
}

/// `[{"q", "e", "dim"}]` sorted by `(e, q)`.
pub fn table_json(t: &BigradedTable) -> Value {
    Value::Array(t.entries().iter().map(|(b, d)| json!({ "q": b.q, "e": b.e, "dim": d })).collect())
}

fn table_text(t: &BigradedTable) -> String {
    let rows: Vec<(usize, usize, String)> = t.entries().iter().map(|(b, d)| (b.e, b.q, d.to_string())).collect();
    grid(&rows)
}

/// Right-aligned `E Q dim` columns sized to the widest entry.
fn grid(rows: &[(usize, usize, String)]) -> String {
    let w = rows.iter().map(|r| r.2.len()).max().unwrap_or(0).max(3);
    let mut s = format!("{:>4} {:>4} {:>w$}\n", "E", "Q", "dim");
    for (e, q, d) in rows {
        let _ = writeln!(s, "{e:>4} {q:>4} {d:>w$}");
    }
    s
}

type Rendered = (Value, String, bool);

fn cohomology(f: &Forest) -> Rendered {
    let c = SeifertComplex::new(f.clone());
    let dims = c.cohomology_dims();
    let p = dims.generating_polynomial();
    let text = format!("{}P(q,t) = {p}\n", table_text(&dims));
    (json!({ "dims": table_json(&dims), "total": dims.total(), "poincare": bipoly_json(&p) }), text, false)
}

fn alexander_cmd(f: &Forest, method: MethodArg) -> Rendered {
    let single = match method {
        MethodArg::Det => Some(Method::Det),
        MethodArg::Matchings => Some(Method::Matchings),
        MethodArg::Euler => Some(Method::Euler),
        MethodArg::Recursive => Some(Method::Recursive),
        MethodArg::Monodromy => Some(Method::Monodromy),
        MethodArg::All => None,
    };
    match single {
        Some(Method::Monodromy) => {
            let m = alexander::monodromy_report(f);
            let text = format!(
                "Δ(t) = {} (monodromy, {} det)\nM = {:?}\n",
                m.charpoly,
                if m.agrees_with_det { "agrees with" } else { "DISAGREES with" },
                m.matrix.rows()
            );
            let value = json!({
                "method": "monodromy",
                "coefficients": m.charpoly.coefficients(),
                "delta": poly_json(&m.charpoly),
                "matrix": m.matrix.rows(),
                "agrees_with_det": m.agrees_with_det,
            });
            (value, text, !m.agrees_with_det)
        }
        Some(m) => {
            let p = m.compute(f);
            let text = format!("Δ(t) = {p} ({})\n", m.name());
            (json!({ "method": m.name(), "coefficients": p.coefficients(), "delta": poly_json(&p) }), text, false)
        }
        None => {
            let results: Vec<(Method, IntPolynomial)> = Method::ALL.into_iter().map(|m| (m, m.compute(f))).collect();
            let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
            let mut text = String::new();
            for (m, p) in &results {
                let _ = writeln!(text, "{:>10}: {p}", m.name());
            }
            let _ = writeln!(text, "verdict: {}", if agree { "OK" } else { "MISMATCH" });
            let methods: serde_json::Map<String, Value> =
                results.iter().map(|(m, p)| (m.name().to_string(), json!(p.coefficients()))).collect();
            let value = json!({
                "method": "all",
                "coefficients": results[0].1.coefficients(),
                "delta": poly_json(&results[0].1),
                "methods": methods,
                "verdict": if agree { "OK" } else { "MISMATCH" },
            });
            (value, text, !agree)
        }
    }
}

fn spectral_cmd(f: &Forest, max_page: Option<usize>) -> Result<Rendered, Failure> {
    let c = SeifertComplex::new(f.clone());
    let stable = spectral::stable_page(f.vertex_count());
    let last = max_page.unwrap_or(stable);
    if last == 0 {
        return Err(Failure::Input("--max-page must be at least 1".into()));
    }
    let pages = (1..=last).map(|r| spectral::page_dims(&c, r)).collect::<Result<Vec<_>, _>>()?;
    let by_q = spectral::limit_dims_by_q(&c);
    let limit: usize = by_q.iter().sum();
    let mut text = String::new();
    for p in &pages {
        let _ = writeln!(text, "E_{} (total {})", p.r, p.dims.total());
        text.push_str(&table_text(&p.dims));
    }
    let _ = writeln!(text, "pages are constant from E_{stable}; limit dimension {limit}");
    let value = json!({
        "pages": pages.iter().map(|p| json!({ "r": p.r, "total": p.dims.total(), "dims": table_json(&p.dims) })).collect::<Vec<_>>(),
        "stable_page": stable,
        "limit_dim": limit,
        "limit_by_q": by_q,
    });
    Ok((value, text, false))
}

fn k2_cmd(f: &Forest) -> Result<Rendered, Failure> {
    let c = SeifertComplex::new(f.clone());
    let k2 = spectral::k2_operator(&c)?;
    let gens = spectral::k2_cohomology(&c)?;
    let mut text = format!(
        "K2 rank {} on {} SH classes; {} survivors\n{:>4} {:>4}\n",
        k2.rank(),
        k2.basis.len(),
        gens.len(),
        "E",
        "Q"
    );
    for g in &gens {
        let _ = writeln!(text, "{:>4} {:>4}", g.bidegree.e, g.bidegree.q);
    }
    let value = json!({
        "rank": k2.rank(),
        "sh_total": k2.basis.len(),
        "generators": gens.iter().map(|g| json!({ "q": g.bidegree.q, "e": g.bidegree.e })).collect::<Vec<_>>(),
    });
    Ok((value, text, false))
}

fn hf_cmd(f: &Forest) -> Result<Rendered, Failure> {
    let report = hf::compare_report(f)?;
    let gaps = hf::gap_exponents(&report.delta)?;
    let minus = hf::hf_minus_poly(&report.delta)?;
    let verdict = if report.matches() { "MATCH" } else { "MISMATCH" };
    let mut text = format!(
        "Δ(t) = {}\nHF- (u,t) = {minus}\nHF^ (u,t) = {}\n  K2 (Q,E)   HF^ (u,t)\n",
        report.delta,
        report.hf_hat.display_with("u", "t")
    );
    let cell = |x: Option<(u32, u32)>| x.map_or("-".to_string(), |(a, b)| format!("({a},{b})"));
    for (k, h) in report.rows() {
        let _ = writeln!(text, "{:>10}{:>12}", cell(k), cell(h));
    }
    let _ = writeln!(text, "verdict: {verdict}");
    let value = json!({
        "delta": poly_json(&report.delta),
        "gaps": { "alpha": gaps.alpha, "stable_from": gaps.stable_from },
        "hf_minus": { "terms": bipoly_json(&minus.polynomial), "next": [minus.next.0, minus.next.1], "step": [minus.step.0, minus.step.1] },
        "hf_hat": bipoly_json(&report.hf_hat),
        "k2": report.k2.iter().map(|&(q, e)| [q, e]).collect::<Vec<_>>(),
        "hf": report.hf.iter().map(|&(u, t)| [u, t]).collect::<Vec<_>>(),
        "verdict": verdict,
    });
    Ok((value, text, false))
}

fn check_cmd(f: &Forest) -> Rendered {
    let results = check::run_checks(f, EULER_LIMIT);
    let passed = results.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &results {
        let _ = write!(text, "{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
        if !r.detail.is_empty() {
            let _ = write!(text, ": {}", r.detail);
        }
        text.push('\n');
    }
    let value = json!({
        "passed": passed,
        "checks": results.iter().map(|r| json!({ "name": r.name, "passed": r.passed, "detail": r.detail })).collect::<Vec<_>>(),
    });
    (value, text, !passed)
}

fn count_json(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

fn count_cmd(f: &Forest) -> Rendered {
    let v = f.vertex_count();
    let counts = f.matching_size_counts();
    let mut rows = Vec::new();
    let mut total: u128 = 0;
    for e in 0..=v {
        for q in 0..=e {
            let d = sc_dim_from_counts(v, &counts, q, e);
            if d > 0 {
                total += d;
                rows.push((q, e, d));
            }
        }
    }
    let cells: Vec<(usize, usize, String)> = rows.iter().map(|&(q, e, d)| (e, q, d.to_string())).collect();
    let text = format!("{total} configurations\n{}", grid(&cells));
    let value = json!({
        "configurations": count_json(total),
        "matchings": counts,
        "dims": rows.iter().map(|&(q, e, d)| json!({ "q": q, "e": e, "dim": count_json(d) })).collect::<Vec<_>>(),
    });
    (value, text, false)
}
