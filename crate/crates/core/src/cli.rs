//! Command-line front end. [`run`] parses arguments, dispatches and returns
//! the process exit code: 0 success, 1 computational error or failed check,
//! 2 usage error, 3 internal inconsistency.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::model::{check_consistency, verify_z_recursion, ConsistencyReport, ModelParams, ZRecursionReport};
use crate::padic::{Padic, DEFAULT_PRECISION, GUARD_DIGITS};
use crate::primes::is_prime;
use crate::report::{Envelope, Status, TOOL_NAME, TOOL_VERSION};
use crate::solvers::{
    classify_with, growth_profile, norm_discrepancies, sign, solution_field, solution_fields,
    stated_partition_exponent, table1, ClassificationReport, Discrepancy, FieldLabel, GrowthProfile, PeriodicOutcome,
    SolverError, Table1Row, MAX_GROWTH_DEPTH,
};

#[derive(Debug, Parser)]
#[command(name = TOOL_NAME, version, about = "Boundary fields, consistency checks and norm growth for p-adic spin measures on the binary tree")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Prime p.
    #[arg(long, value_parser = parse_prime)]
    p: u64,
    /// Coupling J = J1 = J2 (nonzero).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_coupling)]
    j: i64,
    /// Absolute precision K in base-p digits.
    #[arg(long, default_value_t = DEFAULT_PRECISION, value_parser = parse_precision)]
    precision: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count and build translation-invariant and 2-periodic fields; check boundedness.
    Classify {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Brute-force marginal consistency and Z-recursion checks for every field.
    Verify {
        #[command(flatten)]
        model: ModelArgs,
        /// Deepest level to check (1 to 3).
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        depth: u32,
    },
    /// Existence of √D(θ) for J < 0 across primes.
    Table1 {
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',', value_parser = parse_prime, required = true)]
        primes: Vec<u64>,
        /// Negative coupling J.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_negative)]
        j: i64,
    },
    /// Norm growth of finite-volume measures for one field.
    Growth {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value = "h0", value_parser = parse_label)]
        field: FieldLabel,
        #[arg(long, default_value_t = MAX_GROWTH_DEPTH, value_parser = clap::value_parser!(u32).range(1..))]
        max_depth: u32,
    },
    /// Square root of num/den in Q_p.
    Sqrt {
        #[arg(long, value_parser = parse_prime)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        num: BigInt,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        den: BigInt,
        #[arg(long, default_value_t = DEFAULT_PRECISION, value_parser = parse_precision)]
        precision: i64,
    },
    /// Tool version, defaults and limits.
    Info,
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if is_prime(p) {
        Ok(p)
    } else {
        Err(format!("InvalidPrime: {p} is not prime"))
    }
}

fn parse_coupling(s: &str) -> Result<i64, String> {
    let j: i64 = s.parse().map_err(|e| format!("{e}"))?;
    match j {
        0 => Err("ZeroCoupling: J must be nonzero".into()),
        j if j.abs() > 64 => Err("|J| above 64 is not supported".into()),
        j => Ok(j),
    }
}

fn parse_negative(s: &str) -> Result<i64, String> {
    let j = parse_coupling(s)?;
    if j < 0 {
        Ok(j)
    } else {
        Err(format!("the table is defined for J < 0, got {j}"))
    }
}

fn parse_precision(s: &str) -> Result<i64, String> {
    let k: i64 = s.parse().map_err(|e| format!("{e}"))?;
    if (GUARD_DIGITS + 4..=4096).contains(&k) {
        Ok(k)
    } else {
        Err(format!("precision must lie in {}..=4096", GUARD_DIGITS + 4))
    }
}

fn parse_label(s: &str) -> Result<FieldLabel, String> {
    s.parse()
}

/// A rendered command result.
struct Outcome {
    envelope: Envelope,
    text: String,
    csv: Option<String>,
}

fn solver_status(e: &SolverError) -> Status {
    if matches!(e, SolverError::InternalInconsistency(_)) {
        Status::InternalInconsistency
    } else {
        Status::Error
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize")
}

fn params(m: &ModelArgs) -> Result<ModelParams, SolverError> {
    Ok(ModelParams::symmetric(m.p, m.j, m.precision)?)
}

fn model_input(m: &ModelArgs) -> Value {
    json!({ "p": m.p, "j": m.j, "precision": m.precision })
}

fn fail(envelope: Envelope, e: SolverError) -> Outcome {
    let text = format!("error: {}: {e}\n", e.name());
    let envelope = envelope.with_error(e.name(), e.to_string(), solver_status(&e));
    Outcome {
        envelope,
        text,
        csv: None,
    }
}

fn classify_cmd(m: &ModelArgs) -> Outcome {
    let env = Envelope::new("classify", model_input(m));
    match params(m).and_then(|p| classify_with(&p, MAX_GROWTH_DEPTH)) {
        Ok(r) => {
            let text = classify_text(&r);
            let mut env = env;
            env.results = to_value(&r);
            env.discrepancies = r.discrepancies.clone();
            Outcome {
                envelope: env,
                text,
                csv: None,
            }
        }
        Err(e) => fail(env, e),
    }
}

fn classify_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "p = {}, J = {}, precision = {}", r.prime, r.coupling, r.precision);
    let _ = writeln!(
        s,
        "translation-invariant fields: {} ({:?})",
        r.ti_count, r.ti_verdict.reason
    );
    for t in &r.ti_solutions {
        let _ = writeln!(
            s,
            "  h{}  |h|_p = {:<8} residual order {}",
            t.index,
            t.h_norm.to_string(),
            t.residual_order
        );
    }
    let _ = writeln!(
        s,
        "2-periodic fields: {} ({:?})",
        r.periodic_count, r.periodic_verdict.reason
    );
    if let PeriodicOutcome::Absent {
        reason, obstruction, ..
    } = &r.periodic
    {
        let _ = writeln!(s, "  none: {reason:?} ({obstruction})");
    }
    let _ = writeln!(s, "boundedness:");
    for b in &r.boundedness {
        let _ = writeln!(
            s,
            "  {:<4} theorem {:<9} trend {:<15} log_p|mu(sigma*)| {:?}  max {:?}",
            b.field.as_str(),
            format!("{:?}", b.theorem).to_lowercase(),
            format!("{:?}", b.empirical),
            b.profile.star_exponents,
            b.profile.max_exponents
        );
    }
    discrepancy_text(&mut s, &r.discrepancies);
    s
}

fn discrepancy_text(s: &mut String, ds: &[Discrepancy]) {
    if ds.is_empty() {
        return;
    }
    let _ = writeln!(s, "discrepancies:");
    for d in ds {
        let _ = writeln!(
            s,
            "  {}: published {} computed {}",
            d.topic, d.paper_value, d.computed_value
        );
        let _ = writeln!(s, "    {}", d.note);
    }
}

#[derive(Serialize)]
struct FieldChecks {
    field: FieldLabel,
    consistency: Vec<ConsistencyReport>,
    z_recursion: Vec<ZRecursionReport>,
    pass: bool,
}

fn verify_cmd(m: &ModelArgs, depth: u32) -> Outcome {
    let mut env = Envelope::new(
        "verify",
        json!({ "p": m.p, "j": m.j, "precision": m.precision, "depth": depth }),
    );
    let run = || -> Result<Vec<FieldChecks>, SolverError> {
        let params = params(m)?;
        let mut out = Vec::new();
        for (label, field) in solution_fields(&params)? {
            let consistency = (1..=depth)
                .map(|n| check_consistency(n, &field, &params))
                .collect::<Result<Vec<_>, _>>()?;
            let z_recursion = (1..=depth.min(2))
                .map(|n| verify_z_recursion(n, &field, &params))
                .collect::<Result<Vec<_>, _>>()?;
            let pass = consistency.iter().all(|c| c.pass) && z_recursion.iter().all(|z| z.pass);
            out.push(FieldChecks {
                field: label,
                consistency,
                z_recursion,
                pass,
            });
        }
        Ok(out)
    };
    match run() {
        Ok(checks) => {
            let mut text = format!("p = {}, J = {}, depth = {}\n", m.p, m.j, depth);
            for c in &checks {
                let cons: Vec<String> = c
                    .consistency
                    .iter()
                    .map(|r| format!("n={} order {}", r.depth, r.worst_order))
                    .collect();
                let zs: Vec<String> = c
                    .z_recursion
                    .iter()
                    .map(|r| format!("n={} order {}", r.depth, r.mismatch_order))
                    .collect();
                let _ = writeln!(
                    text,
                    "  {:<4} {}  consistency [{}]  z-recursion [{}]",
                    c.field.as_str(),
                    if c.pass { "PASS" } else { "FAIL" },
                    cons.join(", "),
                    zs.join(", ")
                );
            }
            let all = checks.iter().all(|c| c.pass);
            env.results = to_value(&checks);
            if !all {
                env = env.with_error("VerificationFailed", "at least one check failed".into(), Status::Fail);
            }
            Outcome {
                envelope: env,
                text,
                csv: None,
            }
        }
        Err(e) => fail(env, e),
    }
}

fn table1_cmd(primes: &[u64], j: i64) -> Outcome {
    let mut env = Envelope::new("table1", json!({ "primes": primes, "j": j }));
    match table1(primes, j) {
        Ok(rows) => {
            env.discrepancies = rows
                .iter()
                .filter(|r| r.agree == Some(false))
                .map(|r| Discrepancy {
                    topic: format!("existence of sqrt D(theta) at p = {}", r.prime),
                    paper_value: sign(r.paper_value.expect("disagreement implies a published value")).into(),
                    computed_value: sign(r.computed_value).into(),
                    note: r.note.clone().unwrap_or_default(),
                })
                .collect();
            env.results = to_value(&rows);
            let text = table1_text(&rows, &env.discrepancies);
            let csv = table1_csv(&rows);
            Outcome {
                envelope: env,
                text,
                csv: Some(csv),
            }
        }
        Err(e) => fail(env, e),
    }
}

fn table1_text(rows: &[Table1Row], ds: &[Discrepancy]) -> String {
    let mut s = String::new();
    let cell = |v: Option<bool>| v.map(sign).unwrap_or(" ");
    let _ = write!(s, "{:<10}", "p");
    rows.iter().for_each(|r| {
        let _ = write!(s, "{:>4}", r.prime);
    });
    let _ = write!(s, "\n{:<10}", "published");
    rows.iter().for_each(|r| {
        let _ = write!(s, "{:>4}", cell(r.paper_value));
    });
    let _ = write!(s, "\n{:<10}", "computed");
    rows.iter().for_each(|r| {
        let _ = write!(s, "{:>4}", sign(r.computed_value));
    });
    s.push('\n');
    discrepancy_text(&mut s, ds);
    s
}

fn table1_csv(rows: &[Table1Row]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["prime", "paper_value", "computed_value", "agree_flag", "note"])
        .expect("in-memory write");
    for r in rows {
        w.write_record([
            r.prime.to_string(),
            r.paper_value.map(sign).unwrap_or("").to_string(),
            sign(r.computed_value).to_string(),
            r.agree.map(|a| a.to_string()).unwrap_or_default(),
            r.note.clone().unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn growth_cmd(m: &ModelArgs, label: FieldLabel, max_depth: u32) -> Outcome {
    let mut env = Envelope::new(
        "growth",
        json!({ "p": m.p, "j": m.j, "precision": m.precision, "field": label, "max_depth": max_depth }),
    );
    let run = || -> Result<GrowthProfile, SolverError> {
        let params = params(m)?;
        let field = solution_field(&params, label)?;
        growth_profile(&params, &field, max_depth)
    };
    match run() {
        Ok(g) => {
            norm_discrepancies(label, &g, &mut env.discrepancies);
            let mut text = format!(
                "p = {}, J = {}, field {}, {:?} evaluation\n{:>5} {:>10} {:>10} {:>10} {:>10}\n",
                g.prime, g.coupling, label, g.mode, "n", "sigma*", "max", "log|Z_n|", "log|A_n-1|"
            );
            for (i, n) in g.depths.iter().enumerate() {
                let a = g.level_factor_exponents[i]
                    .map(|e| e.to_string())
                    .unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    text,
                    "{:>5} {:>10} {:>10} {:>10} {:>10}",
                    n, g.star_exponents[i], g.max_exponents[i], g.partition_exponents[i], a
                );
            }
            let _ = writeln!(text, "verdict: {:?}", g.verdict);
            discrepancy_text(&mut text, &env.discrepancies);
            let csv = growth_csv(&g, label);
            env.results = to_value(&g);
            Outcome {
                envelope: env,
                text,
                csv: Some(csv),
            }
        }
        Err(e) => fail(env, e),
    }
}

fn growth_csv(g: &GrowthProfile, label: FieldLabel) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "depth",
        "star_exponent",
        "max_exponent",
        "partition_exponent",
        "stated_partition_exponent",
        "level_factor_exponent",
    ])
    .expect("in-memory write");
    for (i, &n) in g.depths.iter().enumerate() {
        w.write_record([
            n.to_string(),
            g.star_exponents[i].to_string(),
            g.max_exponents[i].to_string(),
            g.partition_exponents[i].to_string(),
            stated_partition_exponent(label, g.prime, g.coupling, n)
                .map(|e| e.to_string())
                .unwrap_or_default(),
            g.level_factor_exponents[i].map(|e| e.to_string()).unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn sqrt_cmd(p: u64, num: &BigInt, den: &BigInt, precision: i64) -> Outcome {
    let mut env = Envelope::new(
        "sqrt",
        json!({ "p": p, "num": num.to_string(), "den": den.to_string(), "precision": precision }),
    );
    let x = match Padic::from_rational(num.clone(), den.clone(), p, precision) {
        Ok(x) => x,
        Err(e) => return fail(env, e.into()),
    };
    match x.sqrt() {
        Ok(r) => {
            let check = r
                .mul(&r)
                .and_then(|s| s.sub(&x))
                .map(|d| d.vanishing_order())
                .unwrap_or(i64::MIN);
            let text = format!("sqrt({num}/{den}) in Q_{p}:\n  {r}\n  digits {:?}\n", r.digits());
            env.results = json!({ "value": x, "root": r, "digits": r.digits(), "square_check_order": check });
            Outcome {
                envelope: env,
                text,
                csv: None,
            }
        }
        Err(e) => {
            let mut out = fail(env, e.clone().into());
            if let crate::padic::PadicError::NotASquare(why) = e {
                out.envelope.results = json!({ "value": x, "obstruction": why });
            }
            out
        }
    }
}

fn info_cmd() -> Outcome {
    let mut env = Envelope::new("info", json!({}));
    env.results = json!({
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "default_precision": DEFAULT_PRECISION,
        "guard_digits": GUARD_DIGITS,
        "max_tree_depth": crate::model::MAX_TREE_DEPTH,
        "max_partition_depth": crate::model::MAX_PARTITION_DEPTH,
        "fields": FieldLabel::ALL,
        "exit_codes": { "0": "success", "1": "computational error or failed check", "2": "usage error", "3": "internal inconsistency" },
    });
    let text = format!(
        "{TOOL_NAME} {TOOL_VERSION}\ndefault precision {DEFAULT_PRECISION}, guard digits {GUARD_DIGITS}\n\
         partition depth <= {}, tree depth <= {}\nfields: h0 h1 h2 per1 per2\n",
        crate::model::MAX_PARTITION_DEPTH,
        crate::model::MAX_TREE_DEPTH
    );
    Outcome {
        envelope: env,
        text,
        csv: None,
    }
}

/// Runs the tool on `args` (including the program name), writing the
/// report to `stdout` and diagnostics to `stderr`.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let csv_capable = matches!(cli.command, Command::Table1 { .. } | Command::Growth { .. });
    if cli.format == Format::Csv && !csv_capable {
        let _ = writeln!(stderr, "error: CSV output is available for table1 and growth only");
        return 2;
    }
    let outcome = match &cli.command {
        Command::Classify { model } => classify_cmd(model),
        Command::Verify { model, depth } => verify_cmd(model, *depth),
        Command::Table1 { primes, j } => table1_cmd(primes, *j),
        Command::Growth {
            model,
            field,
            max_depth,
        } => growth_cmd(model, *field, *max_depth),
        Command::Sqrt { p, num, den, precision } => sqrt_cmd(*p, num, den, *precision),
        Command::Info => info_cmd(),
    };
    let status = outcome.envelope.status;
    let body = match cli.format {
        Format::Json => outcome.envelope.to_json() + "\n",
        Format::Csv if status == Status::Ok => outcome.csv.unwrap_or_default(),
        _ => outcome.text,
    };
    let to_stderr = cli.format != Format::Json && matches!(status, Status::Error | Status::InternalInconsistency);
    let written = match (&cli.out, to_stderr) {
        (_, true) => stderr.write_all(body.as_bytes()),
        (Some(path), false) => std::fs::write(path, body.as_bytes()),
        (None, false) => stdout.write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: IoError: {e}");
        return 1;
    }
    status.exit_code()
}

/// Runs the tool against the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("padic-gibbs").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["classify", "--p", "9", "--j", "1"]).0, 2);
        assert_eq!(run_capture(&["classify", "--p", "5", "--j", "0"]).0, 2);
        assert_eq!(run_capture(&["classify", "--p", "5", "--j", "1", "--bogus"]).0, 2);
        assert_eq!(
            run_capture(&["classify", "--p", "5", "--j", "1", "--format", "csv"]).0,
            2
        );
        assert_eq!(run_capture(&["table1", "--primes", "2,3", "--j", "1"]).0, 2);
    }

    #[test]
    fn sqrt_digits_and_errors() {
        let (code, out, _) = run_capture(&["sqrt", "--p", "5", "--num", "-1", "--den", "1", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["results"]["digits"][0], 2);
        assert_eq!(v["results"]["digits"][1], 1);
        let (code, out, _) = run_capture(&["sqrt", "--p", "5", "--num", "2", "--format", "json"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"]["name"], "NotASquare");
    }

    #[test]
    fn info_and_help() {
        assert_eq!(run_capture(&["info"]).0, 0);
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("classify"));
    }
}
