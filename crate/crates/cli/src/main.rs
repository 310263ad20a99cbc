//! `dunkl`: construct polynomials, run the verification suites and emit
//! singular-polynomial certificates.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 domain or
//! pole error.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use dunkl_core::dunkl::alternating;
use dunkl_core::field::{format_rational, parse_rational};
use dunkl_core::jackbasis::{f_poly, omega_at_ones, PBasis};
use dunkl_core::singular::{family_half, family_n0, family_nn, verify_certificate};
use dunkl_core::verify::{self, Suite, VerifyConfig};
use dunkl_core::{DunklContext, Error, KappaMode, Polynomial, Rational};

#[derive(Parser, Debug)]
#[command(
    name = "dunkl",
    version,
    about = "Exact Dunkl operators for the symmetric group"
)]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct RunConfig {
    /// Number of variables.
    #[arg(long = "N", global = true, default_value_t = 3)]
    nvars: usize,
    /// `generic` or a rational such as `-1/2`.
    #[arg(long, global = true, default_value = "generic", allow_hyphen_values = true, value_parser = parse_kappa)]
    kappa: Kappa,
    /// Degree bound for the suites (default 4 generic, 6 specialized).
    #[arg(long = "max-degree", global = true)]
    max_degree: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    out: Output,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Debug)]
struct Kappa(Option<Rational>);

fn parse_kappa(s: &str) -> Result<Kappa, String> {
    if s == "generic" {
        return Ok(Kappa(None));
    }
    parse_rational(s)
        .map(|r| Kappa(Some(r)))
        .map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a polynomial: p, omega, q, f2 (N = 2 family) or alt (power of a_N).
    Poly {
        #[arg(value_enum)]
        kind: PolyKind,
        /// First label index (the power for `alt`).
        m: usize,
        /// Second label index (unused for `alt`).
        n: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Build and certify a singular-polynomial family instance.
    Family {
        #[arg(value_enum)]
        family: FamilyArg,
        a: usize,
        b: usize,
    },
    /// Evaluation table.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long = "m-max", default_value_t = 4)]
        m_max: usize,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
    },
    /// Re-verify a certificate file produced by `family`.
    Check { path: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyKind {
    P,
    Omega,
    Q,
    F2,
    Alt,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Commute,
    Recurrences,
    Dwmn,
    Val1n,
    N2,
    Krawtchouk,
    Qexpand,
    Q2z,
    Families,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    N0,
    Nn,
    Half,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableKind {
    Val1n,
}

/// Failure categories, mapped onto exit codes.
enum Failure {
    Verification,
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn write_stdout(bytes: &[u8]) -> io::Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(bytes).and_then(|()| out.flush()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.run.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let run = &cli.run;
    match &cli.command {
        Command::Poly { kind, m, n } => cmd_poly(*kind, *m, *n, run),
        Command::Verify { suite } => cmd_verify(*suite, run),
        Command::Family { family, a, b } => cmd_family(*family, *a, *b, run),
        Command::Table {
            kind: TableKind::Val1n,
            m_max,
            n_max,
        } => cmd_table_val1n(*m_max, n_max.unwrap_or(*m_max), run),
        Command::Check { path } => cmd_check(path, run),
    }
}

fn context(run: &RunConfig, nvars: usize) -> Result<DunklContext, Failure> {
    let mode = match &run.kappa.0 {
        None => KappaMode::Generic,
        Some(k) => KappaMode::Specialized(k.clone()),
    };
    DunklContext::new(nvars, mode).map_err(|e| Failure::Usage(e.to_string()))
}

fn emit(text: &str) -> Outcome {
    if text.ends_with('\n') {
        write_stdout(text.as_bytes())?;
    } else {
        write_stdout(format!("{text}\n").as_bytes())?;
    }
    Ok(())
}

fn emit_json(v: &Value) -> Outcome {
    emit(&serde_json::to_string_pretty(v).expect("JSON values serialize"))
}

fn emit_poly(f: &Polynomial, run: &RunConfig) -> Outcome {
    match run.out {
        Output::Text => emit(&f.to_string()),
        Output::Json => emit_json(&f.to_json()),
    }
}

fn cmd_poly(kind: PolyKind, m: usize, n: Option<usize>, run: &RunConfig) -> Outcome {
    let need_n = || {
        n.ok_or_else(|| {
            Failure::Usage(format!(
                "poly {} needs two indices m n",
                format!("{kind:?}").to_lowercase()
            ))
        })
    };
    let f = match kind {
        PolyKind::P => (*PBasis::new(&context(run, run.nvars)?).p(m, need_n()?)?).clone(),
        PolyKind::Omega => PBasis::new(&context(run, run.nvars)?).omega(m, need_n()?)?,
        PolyKind::Q => PBasis::new(&context(run, run.nvars)?).q(m, need_n()?)?,
        PolyKind::F2 => {
            let ctx = context(run, 2)?;
            f_poly(m, need_n()?)?.map_coeffs(|c| ctx.eval(c))?
        }
        PolyKind::Alt => {
            if run.nvars < 2 {
                return Err(Failure::Usage("alt needs N >= 2".into()));
            }
            alternating(run.nvars, m as u32)?
        }
    };
    emit_poly(&f, run)
}

fn cmd_verify(suite: SuiteArg, run: &RunConfig) -> Outcome {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        other => {
            let name = format!("{other:?}").to_lowercase();
            vec![Suite::from_name(&name).expect("suite names match")]
        }
    };
    context(run, run.nvars)?;
    let cfg = VerifyConfig {
        nvars: run.nvars,
        kappa: run.kappa.0.clone(),
        max_degree: run.max_degree,
        seed: run.seed,
        ..VerifyConfig::default()
    };
    let report = verify::run(&suites, &cfg)?;
    match run.out {
        Output::Text => emit(&report.to_text())?,
        Output::Json => emit_json(&report.to_json())?,
    }
    if report.ok() {
        return Ok(());
    }
    if let Some((s, c)) = report
        .suites
        .iter()
        .find_map(|s| s.first_failure().map(|c| (s.suite, c)))
    {
        eprintln!(
            "first counterexample: {s} {} :: {}",
            c.key,
            c.detail.as_deref().unwrap_or("")
        );
    }
    Err(Failure::Verification)
}

fn cmd_family(family: FamilyArg, a: usize, b: usize, run: &RunConfig) -> Outcome {
    let cert = match family {
        FamilyArg::N0 => family_n0(a, b)?,
        FamilyArg::Nn => family_nn(a, b)?,
        FamilyArg::Half => family_half(a, b)?,
    };
    match run.out {
        Output::Json => emit_json(&cert.to_json())?,
        Output::Text => {
            let c = &cert.checks;
            emit(&format!(
                "family {} {:?}: N={} kappa={} label=({}, {}) degree={}\n\
                 dunkl_zero={:?} nonzero={} antisymmetric_12={} euler_match={} rank={}\n\
                 singular: {}\n{}",
                cert.family.name(),
                cert.params,
                cert.nvars,
                format_rational(&cert.kappa),
                cert.label.0,
                cert.label.1,
                cert.verdict.degree,
                c.dunkl_zero,
                c.nonzero,
                c.antisymmetric_12
                    .map_or("n/a".to_string(), |b| b.to_string()),
                c.euler_match,
                c.rank.map_or("n/a".to_string(), |r| r.to_string()),
                cert.singular(),
                serde_json::to_string_pretty(&cert.to_json()).expect("JSON values serialize"),
            ))?;
        }
    }
    if cert.singular() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_table_val1n(m_max: usize, n_max: usize, run: &RunConfig) -> Outcome {
    if n_max > m_max {
        return Err(Failure::Usage(format!(
            "--n-max {n_max} exceeds --m-max {m_max}"
        )));
    }
    let ctx = context(run, run.nvars)?;
    let basis = PBasis::new(&ctx);
    let mut rows = Vec::new();
    let mut all_ok = true;
    for m in 0..=m_max {
        for n in 0..=n_max.min(m) {
            let closed = omega_at_ones(m, n, &ctx)?;
            let direct = basis.omega(m, n)?.eval_ones();
            let ok = closed == direct;
            all_ok &= ok;
            rows.push((m, n, closed, direct, ok));
        }
    }
    match run.out {
        Output::Text => {
            let mut s = format!("# omega_mn(1^N), {ctx}\n");
            for (m, n, closed, direct, ok) in &rows {
                s.push_str(&format!(
                    "{m} {n} | closed {closed} | direct {direct} | {}\n",
                    if *ok { "match" } else { "MISMATCH" }
                ));
            }
            emit(&s)?;
        }
        Output::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(m, n, closed, direct, ok)| {
                    serde_json::json!({
                        "m": m, "n": n,
                        "closed": closed.to_json(),
                        "direct": direct.to_json(),
                        "match": ok,
                    })
                })
                .collect();
            emit_json(&Value::Array(v))?;
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_check(path: &str, run: &RunConfig) -> Outcome {
    let text = fs::read_to_string(path)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let r = verify_certificate(&v)?;
    match run.out {
        Output::Text => emit(&format!(
            "hash {} | recomputed all pass {} | claims match {}",
            if r.hash_ok { "ok" } else { "MISMATCH" },
            r.recomputed.all_pass(),
            r.ok()
        ))?,
        Output::Json => emit_json(&serde_json::json!({
            "hash_ok": r.hash_ok,
            "recomputed_pass": r.recomputed.all_pass(),
            "ok": r.ok(),
        }))?,
    }
    if r.ok() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
