//! Library side of the `horadam` binary, so the command logic can be driven
//! without spawning a process.

pub mod args;
pub mod output;

use args::{Cli, Command, Family, GridScale, Kind, OutputFormat, Progression};
use clap::Parser;
use horadam_core::verify::{self, Scale};
use horadam_core::{
    brute_sum, gf_power, series_coeffs, sum_linear, sum_power, term_by_binet, term_by_recurrence,
    Error, HoradamParams, Rational, SeqKind, SumSpec,
};
pub use output::Output;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// Environment-derived switches.
#[derive(Clone, Copy, Debug, Default)]
pub struct Config {
    /// Treat a vanishing closed-form denominator as an error instead of
    /// falling back to direct summation.
    pub no_fallback: bool,
}

impl Config {
    pub fn from_env() -> Self {
        Config { no_fallback: std::env::var("HORADAM_NO_FALLBACK").is_ok_and(|v| v == "1") }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, config: Config) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(cli.command, config),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            }
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn params(family: &Family) -> Result<(HoradamParams, SeqKind), Failure> {
    let kind = SeqKind::from(family.kind);
    let (a, b) = match (family.kind, &family.a, &family.b) {
        (Kind::W, Some(a), Some(b)) => (a.clone(), b.clone()),
        (Kind::W, _, _) => return Err(Failure::Usage("kind w needs both -a and -b".into())),
        _ => (Rational::zero(), Rational::one()),
    };
    Ok((HoradamParams::new(a, b, family.p.clone(), family.q.clone())?, kind))
}

fn render(out: &Output, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => out.plain() + "\n",
        OutputFormat::Json => out.json() + "\n",
    }
}

fn execute(command: Command, config: Config) -> Outcome {
    if let Command::Verify(v) = command {
        return verify_cmd(v.scale, v.output);
    }
    let mut stderr = String::new();
    let (format, result) = match command {
        Command::Term(t) => (t.family.output, term(&t.family, t.n, t.binet)),
        Command::Sum(s) => {
            (s.family.output, sum(&s.family, &s.progression, s.k, s.z, config, &mut stderr))
        }
        Command::Gf(g) => (g.family.output, gf(&g.family, &g.progression)),
        Command::Series(s) => (s.family.output, series(&s.family, &s.progression, s.m)),
        Command::Verify(_) => unreachable!(),
    };
    match result {
        Ok(out) => Outcome { code: EXIT_OK, stdout: render(&out, format), stderr },
        Err(Failure::Usage(msg)) => Outcome::fail(EXIT_USAGE, msg),
        Err(Failure::Domain(e)) => {
            let mut o = Outcome::fail(EXIT_DOMAIN, e);
            o.stderr.insert_str(0, &stderr);
            o
        }
    }
}

fn term(family: &Family, n: i64, binet: bool) -> Result<Output, Failure> {
    let (params, kind) = params(family)?;
    let value = if binet {
        term_by_binet(&params, kind, n)?
    } else {
        term_by_recurrence(&params, kind, n)
    };
    Ok(Output::Scalar(value))
}

fn sum(
    family: &Family,
    prog: &Progression,
    k: i64,
    z: Rational,
    config: Config,
    stderr: &mut String,
) -> Result<Output, Failure> {
    let (params, kind) = params(family)?;
    let spec = SumSpec::new(kind, prog.n, prog.r, prog.s, k, z)?;
    let closed = if prog.n == 1 { sum_linear(&params, &spec) } else { sum_power(&params, &spec) };
    match closed {
        Ok(v) => Ok(Output::Scalar(v)),
        Err(Error::DenominatorVanishes(which)) if !config.no_fallback => {
            stderr.push_str(&format!(
                "warning: degenerate denominator ({which}); value computed by direct summation\n"
            ));
            Ok(Output::Scalar(brute_sum(&params, &spec)))
        }
        Err(e) => Err(e.into()),
    }
}

fn gf(family: &Family, prog: &Progression) -> Result<Output, Failure> {
    let (params, kind) = params(family)?;
    Ok(Output::Function(gf_power(&params, kind, prog.n, prog.r, prog.s)?))
}

fn series(family: &Family, prog: &Progression, m: usize) -> Result<Output, Failure> {
    let (params, kind) = params(family)?;
    let rf = gf_power(&params, kind, prog.n, prog.r, prog.s)?;
    Ok(Output::Series(series_coeffs(&rf, m)))
}

fn verify_cmd(scale: GridScale, format: OutputFormat) -> Outcome {
    let scale = match scale {
        GridScale::Small => Scale::Small,
        GridScale::Full => Scale::Full,
    };
    let reports = verify::run(scale);
    let passed = reports.iter().all(|r| r.passed());
    let stdout = match format {
        OutputFormat::Plain => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&format!("{} {}\n", if r.passed() { "ok  " } else { "FAIL" }, r));
                for f in &r.failures {
                    s.push_str(&format!("    {f}\n"));
                }
            }
            s
        }
        OutputFormat::Json => {
            let list: Vec<_> = reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "name": r.name,
                        "checks": r.checks,
                        "vanishing": r.vanishing,
                        "failures": r.failures,
                    })
                })
                .collect();
            serde_json::json!({ "passed": passed, "reports": list }).to_string() + "\n"
        }
    };
    Outcome { code: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED }, stdout, stderr: String::new() }
}
