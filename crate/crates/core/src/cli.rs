//! The `pascal-toeplitz` command line. Data goes to `out`, diagnostics to
//! `err`; exit code 0 on success, 1 when a verification or minor check
//! fails, 2 on usage and parse errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::determinant::{det_cofactor, det_exact};
use crate::error::{Error, Result};
use crate::factorization::{det_via_factorization, factorize_pascal_with, toeplitz_to_pascal_with, Direction};
use crate::identities::{find_identity, register_identities, IdentityRecord, ParamGrid, VerificationReport};
use crate::matrix::{build_kind, pascal_matrix};
use crate::minors::{build_family, parse_family, principal_minor_sequence, MinorFamily};
use crate::scalar::QuadScalar;
use crate::sequences::{SequenceSpec, SequenceView, Transform};

const APPROX_DIGITS: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "pascal-toeplitz", version, about = "Exact generalized Pascal triangles and Toeplitz matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the first terms of a sequence.
    Seq {
        spec: String,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build a Pascal or Toeplitz matrix.
    Matrix {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Emit the L, T, U factors as JSON.
    Factorize {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = DirectionArg::PascalToToeplitz)]
        direction: DirectionArg,
    },
    /// Exact determinant.
    Det {
        #[command(flatten)]
        input: MatrixInput,
        /// oracle, cofactor, factorization or closed-form:<identity id>
        #[arg(long, default_value = "oracle")]
        method: String,
        /// Also print a decimal approximation.
        #[arg(long)]
        approx: bool,
    },
    /// Check closed-form identities against the determinant oracle.
    Verify {
        /// Identity id, or `all`.
        id: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// Axis overrides, e.g. `rho=-2,1/2;sigma=0..3`.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Leading principal minors of a named family.
    Minors {
        #[arg(long)]
        family: String,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i8>,
        #[arg(long)]
        k: Option<u8>,
        /// Sequence spec for the tridiagonal family (default: const:1).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct MatrixInput {
    #[arg(long, value_enum, default_value_t = Kind::Pascal)]
    kind: Kind,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(short = 'n')]
    n: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Pascal,
    Toeplitz,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Pascal => "pascal",
            Kind::Toeplitz => "toeplitz",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DirectionArg {
    PascalToToeplitz,
    ToeplitzToPascal,
}

/// Outcome of a successful command: `true` when every check passed.
type Outcome = Result<bool>;

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_registry(argv, &register_identities(), out, err)
}

/// As [`run`], with `verify` resolved against `registry`.
pub fn run_with_registry<I, T>(argv: I, registry: &[IdentityRecord], out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let mut buf = Vec::new();
    let outcome = dispatch(cli.command, registry, &mut buf);
    let _ = out.write_all(&buf);
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::OutOfDomain(format!("write failed: {e}"))
}

fn spec(text: &str, flag: &str) -> Result<SequenceSpec> {
    text.parse::<SequenceSpec>().map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos, msg: format!("{flag}: {msg}") },
        other => other,
    })
}

fn view(text: &str, flag: &str) -> Result<SequenceView> {
    SequenceView::new(spec(text, flag)?)
}

fn join(values: &[QuadScalar]) -> String {
    // rational values print without spaces, so a single space separates them
    let sep = if values.iter().all(QuadScalar::is_rational) { " " } else { "; " };
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn strings(values: &[QuadScalar]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

fn dispatch(command: Command, registry: &[IdentityRecord], out: &mut Vec<u8>) -> Outcome {
    match command {
        Command::Seq { spec: text, len, json } => {
            let terms = view(&text, "spec")?.prefix(len)?;
            if json {
                writeln!(out, "{}", strings(&terms)).map_err(io)?;
            } else {
                writeln!(out, "{}", join(&terms)).map_err(io)?;
            }
            Ok(true)
        }
        Command::Matrix { input, format } => {
            let m = build_kind(input.kind.as_str(), &view(&input.alpha, "--alpha")?, &view(&input.beta, "--beta")?, input.n)?;
            match format {
                Format::Table => write!(out, "{m}").map_err(io)?,
                Format::Json => writeln!(out, "{}", m.to_json()).map_err(io)?,
                Format::Csv => write!(out, "{}", m.to_csv()).map_err(io)?,
            }
            Ok(true)
        }
        Command::Factorize { alpha, beta, n, direction } => {
            let (a, b) = (view(&alpha, "--alpha")?, view(&beta, "--beta")?);
            let (triple, source) = match direction {
                DirectionArg::PascalToToeplitz => {
                    (factorize_pascal_with(&a, &b, n, false)?, build_kind("pascal", &a, &b, n)?)
                }
                DirectionArg::ToeplitzToPascal => {
                    (toeplitz_to_pascal_with(&a, &b, n, false)?, build_kind("toeplitz", &a, &b, n)?)
                }
            };
            let ok = triple.reproduces(&source)?;
            let dir = match triple.direction {
                Direction::PascalToToeplitz => "pascal-to-toeplitz",
                Direction::ToeplitzToPascal => "toeplitz-to-pascal",
            };
            let doc = json!({
                "direction": dir,
                "L": triple.l.to_json(),
                "T": triple.t.to_json(),
                "U": triple.u.to_json(),
                "residual_ok": ok,
            });
            writeln!(out, "{doc}").map_err(io)?;
            Ok(ok)
        }
        Command::Det { input, method, approx } => {
            let value = det_command(&input, &method, registry)?;
            writeln!(out, "{value}").map_err(io)?;
            if approx {
                writeln!(out, "approx: {}", value.to_decimal_string(APPROX_DIGITS)).map_err(io)?;
            }
            Ok(true)
        }
        Command::Verify { id, max_n, grid, json } => verify_command(&id, max_n, grid.as_deref(), json, registry, out),
        Command::Minors {
            family,
            r,
            s,
            eps,
            t,
            k,
            lambda,
            max_n,
            json,
        } => {
            let family = parse_family(&family, r, s, eps.as_deref(), t, k, lambda.as_deref())?;
            minors_command(&family, max_n, json, out)
        }
    }
}

fn det_command(input: &MatrixInput, method: &str, registry: &[IdentityRecord]) -> Result<QuadScalar> {
    let (a, b) = (view(&input.alpha, "--alpha")?, view(&input.beta, "--beta")?);
    let kind = input.kind.as_str();
    let n = input.n;
    if let Some(id) = method.strip_prefix("closed-form:") {
        let record = find_identity(registry, id)?;
        let params = (record.recognize)(kind, a.spec(), b.spec()).ok_or_else(|| {
            Error::OutOfDomain(format!("input is not an instance of identity `{id}`"))
        })?;
        // recognition fixes the closed-form parameters; corners must still agree
        build_kind(kind, &a, &b, n)?;
        return record.expected_at(&params, n);
    }
    match method {
        "oracle" => det_exact(&build_kind(kind, &a, &b, n)?),
        "cofactor" => det_cofactor(&build_kind(kind, &a, &b, n)?),
        "factorization" => match input.kind {
            Kind::Pascal => det_via_factorization(&a, &b, n),
            Kind::Toeplitz => {
                let up = |v: &SequenceView| SequenceView::new(v.spec().clone().transformed(Transform::Check));
                build_kind(kind, &a, &b, n)?;
                det_exact(&pascal_matrix(&up(&a)?, &up(&b)?, n)?)
            }
        },
        other => Err(Error::parse(
            0,
            format!("--method: expected oracle, cofactor, factorization or closed-form:<id>, got `{other}`"),
        )),
    }
}

fn verify_command(
    id: &str,
    max_n: Option<usize>,
    grid: Option<&str>,
    json: bool,
    registry: &[IdentityRecord],
    out: &mut Vec<u8>,
) -> Outcome {
    let records: Vec<&IdentityRecord> = if id == "all" {
        registry.iter().collect()
    } else {
        vec![find_identity(registry, id)?]
    };
    let overrides = match grid {
        Some(text) if id == "all" => {
            return Err(Error::parse(0, format!("--grid needs a single identity id, got `all` with `{text}`")));
        }
        Some(text) => Some(text.parse::<ParamGrid>()?),
        None => None,
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for record in records {
        let base = (record.default_grid)();
        let grid = match &overrides {
            Some(o) => base.overridden_by(o)?,
            None => base,
        };
        let hi = max_n.unwrap_or(*record.n_range.end());
        reports.push(record.verify(&grid, *record.n_range.start()..=hi)?);
    }
    let all_pass = reports.iter().all(VerificationReport::passed);
    if json {
        let doc = json!({
            "pass": all_pass,
            "reports": reports.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
        });
        writeln!(out, "{doc}").map_err(io)?;
    } else {
        let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(0);
        for r in &reports {
            let status = match &r.first_failure {
                None => "PASS".to_string(),
                Some(f) => format!("FAIL  {f}"),
            };
            writeln!(out, "{:<width$}  {:>6}  {status}", r.id, r.cases_run).map_err(io)?;
        }
    }
    Ok(all_pass)
}

fn minors_command(family: &MinorFamily, max_n: usize, json: bool, out: &mut Vec<u8>) -> Outcome {
    if max_n == 0 {
        return Err(Error::OutOfDomain("--max-n must be at least 1".into()));
    }
    // surface construction errors before the determinant loop
    build_family(family, max_n)?;
    let minors = principal_minor_sequence(family, max_n)?;
    let expected: Vec<Option<QuadScalar>> = (1..=max_n as u64)
        .map(|n| family.expected_minor(n).map(QuadScalar::from_bigint))
        .collect();
    let matches: Vec<bool> = minors
        .iter()
        .zip(&expected)
        .map(|(m, e)| e.as_ref() == Some(m))
        .collect();
    let all = matches.iter().all(|&b| b);
    if json {
        let doc = json!({
            "family": family.to_string(),
            "minors": strings(&minors),
            "expected": expected.iter().map(|e| e.as_ref().map(ToString::to_string)).collect::<Vec<_>>(),
            "match": matches,
            "all_match": all,
        });
        writeln!(out, "{doc}").map_err(io)?;
    } else {
        let shown: Vec<QuadScalar> = expected.iter().map(|e| e.clone().unwrap_or_default()).collect();
        let flags: Vec<&str> = matches.iter().map(|&b| if b { "yes" } else { "no" }).collect();
        writeln!(out, "{}", join(&minors)).map_err(io)?;
        writeln!(out, "expected: {}", join(&shown)).map_err(io)?;
        writeln!(out, "match: {}", flags.join(" ")).map_err(io)?;
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("pascal-toeplitz").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn det_example() {
        let (code, out, _) = call(&["det", "--kind", "pascal", "--alpha", "fib", "--beta", "fib", "-n", "4"]);
        assert_eq!((code, out.as_str()), (0, "-4\n"));
    }

    #[test]
    fn minors_example() {
        let (code, out, _) = call(&["minors", "--family", "theorem4", "--r", "1", "--s", "1", "--eps", "+", "--max-n", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1 2 3 5 8\nexpected: 1 2 3 5 8\nmatch: yes yes yes yes yes\n");
    }

    #[test]
    fn negative_flag_values() {
        let (code, out, err) = call(&["minors", "--family", "strang", "--t", "-1", "--max-n", "3"]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out.lines().next(), Some("3 8 21"));
        let (code, _, err) = call(&["minors", "--family", "theorem4", "--r", "2", "--s", "1", "--eps", "-", "--max-n", "4"]);
        assert_eq!(code, 0, "{err}");
    }

    #[test]
    fn methods_agree() {
        for method in ["oracle", "cofactor", "factorization", "closed-form:geometric-pascal"] {
            let (code, out, err) = call(&["det", "--alpha", "geom:2", "--beta", "geom:3", "-n", "3", "--method", method]);
            assert_eq!((code, out.as_str()), (0, "1\n"), "{method}: {err}");
        }
        let (code, _, err) = call(&["det", "--alpha", "fib", "--beta", "fib", "-n", "3", "--method", "closed-form:arith-alt"]);
        assert_eq!(code, 2);
        assert!(err.contains("arith-alt"));
    }

    #[test]
    fn usage_errors_name_the_flag() {
        let (code, _, err) = call(&["det", "--alpha", "fib", "-n", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("--beta"));
        let (code, _, err) = call(&["seq", "hat(arith:1,x)", "--len", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("position 12") || err.contains("12"), "{err}");
    }

    #[test]
    fn seq_and_matrix_outputs() {
        assert_eq!(call(&["seq", "hat(lit:0,1,3,8,21)", "--len", "5"]).1, "0 1 1 2 3\n");
        let (_, json, _) = call(&["matrix", "--alpha", "fib", "--beta", "fib", "-n", "3", "--format", "json"]);
        let m = crate::matrix::ExactMatrix::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(m.rows(), 3);
    }

    #[test]
    fn factorize_reports_residual() {
        let (code, out, _) = call(&["factorize", "--alpha", "catalan", "--beta", "fact", "-n", "4"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["residual_ok"], Value::Bool(true));
        let (code, _, _) = call(&["factorize", "--alpha", "fib", "--beta", "fib", "-n", "4", "--direction", "toeplitz-to-pascal"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn failing_minors_exit_one() {
        let (code, out, _) = call(&["minors", "--family", "cahill", "--t", "-1", "--max-n", "4"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("2 3 5 10\n"));
    }
}
