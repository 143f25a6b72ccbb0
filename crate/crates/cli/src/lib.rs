//! Command-line surface for `hyperquat`.
//!
//! [`run`] does all the work and returns the exit code with the rendered
//! output, so the binary only parses arguments and prints.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperquat::fibonacci::{self, closed_forms, complex_fib_quaternion, equation_matrices, fib, fib_quaternion};
use hyperquat::identities::{self, Expectation, DEFAULT_BOUND, DEFAULT_SEED, DEFAULT_TRIALS};
use hyperquat::literal::{parse_biquaternion, parse_quaternion};
use hyperquat::repr::{epsilon, gamma, lambda, rho, theta};
use hyperquat::solver::{self, Term};
use hyperquat::{Biquaternion, Error, IdentityReport, LinearEquation, Matrix, ParseError, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IDENTITY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hyperquat", version, about = "Exact matrix representations of real and complex quaternions")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputMode::Text, global = true)]
    pub format: OutputMode,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReprTarget {
    Lambda,
    Rho,
    Gamma,
    Theta,
    Epsilon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FibKind {
    Number,
    Quaternion,
    Biquaternion,
    ClosedForms,
    EquationMatrices,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print a matrix representation. `lambda` and `rho` take a quaternion
    /// literal, the others a biquaternion literal "x ; y".
    Repr {
        target: ReprTarget,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Determinant of a matrix representation.
    Det {
        target: ReprTarget,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
    /// Fibonacci numbers, quaternions and their closed forms.
    Fib { kind: FibKind, n: u32 },
    /// Solve Σ A·X·B = C, given as JSON or as a single term `A B C`.
    Solve {
        #[arg(long, conflicts_with = "term")]
        json: Option<String>,
        #[arg(num_args = 3, value_names = ["A", "B", "RHS"], required_unless_present = "json", allow_hyphen_values = true)]
        term: Vec<String>,
    },
    /// Check named identities on seeded random inputs.
    Verify {
        /// Identity ids, or `all`.
        #[arg(default_value = "all")]
        ids: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, env = "HYPERQUAT_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
    /// Map x + iy to x + e1·y.
    Collapse {
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
}

/// Exit code and rendered output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response {
    pub code: i32,
    pub output: String,
}

enum Failure {
    Parse(ParseError),
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Parse(p),
            Error::UnknownIdentity(_) | Error::Equation(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

/// Output of a successful command: text rendering, JSON rendering, exit code.
struct Rendered {
    text: String,
    json: Value,
    code: i32,
}

impl Rendered {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Rendered { text: text.into(), json, code: EXIT_OK }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn run(command: &Command, mode: OutputMode) -> Response {
    match execute(command) {
        Ok(r) => {
            let output = match mode {
                OutputMode::Text => r.text,
                OutputMode::Json => r.json.to_string(),
            };
            Response { code: r.code, output: with_newline(output) }
        }
        Err(f) => render_failure(f, mode),
    }
}

/// Reports an argument error raised before a command could be built.
pub fn usage_error(message: &str, mode: OutputMode) -> Response {
    let message = message.trim_end();
    let message = message.strip_prefix("error: ").unwrap_or(message);
    render_failure(Failure::Usage(message.to_string()), mode)
}

fn render_failure(f: Failure, mode: OutputMode) -> Response {
    let (code, json, text) = match f {
        Failure::Parse(p) => (
            EXIT_USAGE,
            json!({"error": {"kind": "parse", "message": p.to_string(), "offset": p.offset, "expected": p.expected}}),
            format!("error: {p}"),
        ),
        Failure::Usage(m) => (EXIT_USAGE, json!({"error": {"kind": "usage", "message": m}}), format!("error: {m}")),
        Failure::Domain(e) => (EXIT_DOMAIN, json!({"error": {"kind": "domain", "message": e.to_string()}}), format!("error: {e}")),
    };
    let output = match mode {
        OutputMode::Text => text,
        OutputMode::Json => json.to_string(),
    };
    Response { code, output: with_newline(output) }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn execute(command: &Command) -> Result<Rendered, Failure> {
    match command {
        Command::Repr { target, value } => {
            let m = representation(*target, value)?;
            Ok(Rendered::ok(m.to_string(), to_json(&m)))
        }
        Command::Det { target, value } => {
            let d = representation(*target, value)?.det()?;
            Ok(Rendered::ok(d.to_string(), json!({"det": d.to_string()})))
        }
        Command::Fib { kind, n } => Ok(fib_command(*kind, *n)),
        Command::Solve { json: text, term } => {
            let eq = match text {
                Some(text) => serde_json::from_str::<LinearEquation>(text)
                    .map_err(|e| Failure::Usage(format!("invalid equation JSON: {e}")))?,
                None => {
                    let [a, b, c] = term.as_slice() else {
                        return Err(Failure::Usage("expected A B RHS".into()));
                    };
                    let term = Term::new(parse_biquaternion(a)?, parse_biquaternion(b)?);
                    LinearEquation::new(vec![term], parse_biquaternion(c)?)?
                }
            };
            let out = solver::solve(&eq)?;
            let mut text = format!("kind: {:?}\nrank: {}\n", out.kind, out.rank);
            if let Some(x) = &out.solution {
                text.push_str(&format!("solution: {x}\n"));
            }
            for v in &out.nullspace {
                text.push_str(&format!("nullspace: {v}\n"));
            }
            Ok(Rendered::ok(text, to_json(&out)))
        }
        Command::Verify { ids, trials, seed, bound } => verify(ids, *trials, *seed, *bound),
        Command::Collapse { value } => {
            let q = parse_biquaternion(value)?.collapse();
            Ok(Rendered::ok(q.to_string(), to_json(&q)))
        }
    }
}

fn representation(target: ReprTarget, value: &str) -> Result<Matrix<Rational>, Failure> {
    Ok(match target {
        ReprTarget::Lambda => lambda(&parse_quaternion(value)?),
        ReprTarget::Rho => rho(&parse_quaternion(value)?),
        ReprTarget::Gamma => gamma(&parse_biquaternion(value)?),
        ReprTarget::Theta => theta(&parse_biquaternion(value)?),
        ReprTarget::Epsilon => epsilon(&parse_biquaternion(value)?),
    })
}

fn fib_command(kind: FibKind, n: u32) -> Rendered {
    match kind {
        FibKind::Number => {
            let f = fib(n);
            Rendered::ok(f.to_string(), json!({"n": n, "value": f.to_string()}))
        }
        FibKind::Quaternion => {
            let f = fib_quaternion(n);
            Rendered::ok(f.to_string(), json!({"n": n, "value": f.to_string()}))
        }
        FibKind::Biquaternion => {
            let q: Biquaternion = complex_fib_quaternion(n);
            Rendered::ok(q.to_string(), json!({"n": n, "value": q.to_string()}))
        }
        FibKind::ClosedForms => {
            let c = closed_forms(n);
            let json = to_json(&c);
            let text = json
                .as_object()
                .expect("record")
                .iter()
                .map(|(k, v)| format!("{k} = {}", v.as_str().map_or_else(|| v.to_string(), str::to_string)))
                .collect::<Vec<_>>()
                .join("\n");
            Rendered::ok(text, json)
        }
        FibKind::EquationMatrices => {
            let m: fibonacci::EquationMatrices = equation_matrices(n);
            let text = format!("B =\n{}\nD =\n{}\ndelta =\n{}", m.b, m.d, m.delta);
            Rendered::ok(text, to_json(&m))
        }
    }
}

fn verify(ids: &[String], trials: usize, seed: u64, bound: u32) -> Result<Rendered, Failure> {
    let specs = if ids.is_empty() || ids.iter().any(|id| id == "all") {
        identities::catalog().iter().collect::<Vec<_>>()
    } else {
        ids.iter().map(|id| identities::lookup(id)).collect::<Result<Vec<_>, _>>()?
    };
    let reports: Vec<IdentityReport> = specs.iter().map(|s| identities::run(s, trials, seed, bound)).collect();

    let mut text = String::new();
    let mut unexpected = 0;
    for (spec, report) in specs.iter().zip(&reports) {
        let expected_holds = spec.expectation == Expectation::Holds;
        let marker = if expected_holds && !report.holds() {
            unexpected += 1;
            "  UNEXPECTED"
        } else {
            ""
        };
        let status = if report.holds() { "holds" } else { "fails" };
        let expectation = if expected_holds { "holds" } else { "fails" };
        text.push_str(&format!(
            "{:<36} {status}  expected {expectation}  {}/{trials} counterexamples{marker}\n",
            report.identity,
            report.counterexamples.len()
        ));
    }
    text.push_str(&format!("seed {seed}, bound {bound}, {unexpected} unexpected failure(s)\n"));
    let code = if unexpected == 0 { EXIT_OK } else { EXIT_IDENTITY_FAILED };
    Ok(Rendered { text, json: to_json(&reports), code })
}
