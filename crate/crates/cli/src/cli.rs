//! Argument parsing and dispatch.
//!
//! Exit codes: 0 success, 1 counterexample found, 2 usage error,
//! 3 internal error.

use std::ffi::OsString;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qfib_core::verify::SweepOptions;
use qfib_core::{
    cyclo_spectrum, cyclotomic, fib, q_binom, ClaimId, CyclotomicTable, Error, FamilyId, Params,
};

use crate::engine::{self, BoundProfile, EngineOptions, VerificationReport};
use crate::report::{self, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "qfib",
    version,
    about = "Exact q-Fibonacci polynomials and divisibility checks"
)]
pub struct CliConfig {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Worker threads for sweeps (0 = one per CPU).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a single object.
    #[command(subcommand)]
    Compute(Compute),
    /// Check a claim over a range, or `all` claims at a bound profile.
    Verify(VerifyArgs),
    /// Scan a conjecture.
    Scan(ScanArgs),
    /// List the registered claims.
    Claims,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    #[value(name = "fr")]
    Fr,
}

#[derive(Debug, Args)]
pub struct FamilySel {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Parameter of the `fr` family.
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<i64>,
}

impl FamilySel {
    fn resolve(&self) -> Result<FamilyId, Error> {
        match (self.family, self.r) {
            (FamilyArg::F, None) => Ok(FamilyId::SchurF),
            (FamilyArg::G, None) => Ok(FamilyId::SchurG),
            (FamilyArg::Fr, r) => FamilyId::cigler(r.unwrap_or(0)),
            (_, Some(_)) => Err(Error::Unsupported("--r only applies to --family fr".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Compute {
    /// A member of a family.
    Fib {
        #[command(flatten)]
        family: FamilySel,
        #[arg(long)]
        n: usize,
    },
    /// The Gaussian binomial [N; K].
    Qbinom {
        n: usize,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// The cyclotomic polynomial Phi_N.
    Cyclotomic { n: usize },
    /// All d <= max-d with Phi_d dividing a family member.
    Spectrum {
        #[command(flatten)]
        family: FamilySel,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_d: usize,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Claim id (see `qfib claims`) or `all`.
    pub claim: String,
    /// Sweep bound; defaults to the claim's full profile bound.
    #[arg(long, conflicts_with = "instance")]
    pub bound: Option<u64>,
    /// Allow bounds above the claim's soft limit.
    #[arg(long = "override")]
    pub allow_override: bool,
    /// Check one instance, e.g. `k=1,m=2`.
    #[arg(long)]
    pub instance: Option<String>,
    /// Profile for `verify all`.
    #[arg(long, value_enum)]
    pub bound_profile: Option<ProfileArg>,
    /// Largest r swept for the f_r family.
    #[arg(long, default_value_t = 3)]
    pub max_r: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Conjecture {
    Conj31,
    Conj32,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    pub conjecture: Conjecture,
    #[arg(long = "max-6n")]
    pub max_6n: u64,
    #[arg(long, default_value_t = 3)]
    pub max_r: u32,
    #[arg(long = "override")]
    pub allow_override: bool,
}

enum Failed {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        match e {
            Error::DivisionByZero
            | Error::NonUnitLeadingCoefficient
            | Error::NotDivisible
            | Error::ModulusMismatch { .. }
            | Error::ZeroPolynomial => Failed::Internal(e.to_string()),
            _ => Failed::Usage(e.to_string()),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = catch_unwind(AssertUnwindSafe(|| execute(&config)));
    let (code, text) = match result {
        Ok(Ok((code, text))) => (code, text),
        Ok(Err(Failed::Usage(msg))) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
        Ok(Err(Failed::Internal(msg))) => {
            let _ = writeln!(err, "internal error: {msg}");
            return EXIT_INTERNAL;
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| panic.downcast_ref::<&str>().copied())
                .unwrap_or("panic");
            let _ = writeln!(err, "internal error: {msg}");
            return EXIT_INTERNAL;
        }
    };
    if out
        .write_all(text.as_bytes())
        .and_then(|()| out.flush())
        .is_err()
    {
        return EXIT_INTERNAL;
    }
    code
}

fn execute(config: &CliConfig) -> Result<(i32, String), Failed> {
    let format = config.format;
    match &config.command {
        Command::Compute(c) => compute(c, format).map(|s| (EXIT_OK, s)),
        Command::Verify(v) => verify(v, config.jobs, format),
        Command::Scan(s) => {
            let claim = match s.conjecture {
                Conjecture::Conj31 => ClaimId::Conj3_1,
                Conjecture::Conj32 => ClaimId::Conj3_2,
            };
            let opts = EngineOptions {
                jobs: config.jobs,
                allow_override: s.allow_override,
                ..Default::default()
            };
            let r = engine::scan_conjecture(claim, s.max_6n, s.max_r, &opts)?;
            Ok(single(r, format))
        }
        Command::Claims => Ok((EXIT_OK, list_claims(format))),
    }
}

fn single(r: VerificationReport, format: Format) -> (i32, String) {
    let code = if r.passed() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    (code, report::render_report(&r, format))
}

fn list_claims(format: Format) -> String {
    match format {
        Format::Pretty => ClaimId::ALL
            .iter()
            .map(|c| {
                format!(
                    "{:<13} quick {:>5}  full {:>5}  limit {:>6}  {}\n",
                    c.name(),
                    c.quick_bound(),
                    c.full_bound(),
                    c.soft_limit(),
                    c.statement()
                )
            })
            .collect(),
        _ => {
            let names: Vec<&str> = ClaimId::ALL.iter().map(|c| c.name()).collect();
            serde_json::to_string(&names).expect("names serialize") + "\n"
        }
    }
}

fn compute(c: &Compute, format: Format) -> Result<String, Failed> {
    Ok(match c {
        Compute::Fib { family, n } => {
            let id = family.resolve()?;
            let labels = [("family", json_str(&id.to_string())), ("n", n.to_string())];
            report::render_poly(&fib(id, *n), format, &labels)
        }
        Compute::Qbinom { n, k } => {
            let labels = [("n", n.to_string()), ("k", k.to_string())];
            report::render_poly(&q_binom(*n, *k), format, &labels)
        }
        Compute::Cyclotomic { n } => {
            let phi = cyclotomic(*n)?;
            report::render_poly(&phi, format, &[("n", n.to_string())])
        }
        Compute::Spectrum { family, n, max_d } => {
            let id = family.resolve()?;
            let ds: Vec<usize> = cyclo_spectrum(&fib(id, *n), *max_d, &mut CyclotomicTable::new())?
                .into_iter()
                .collect();
            let labels = [
                ("family", json_str(&id.to_string())),
                ("n", n.to_string()),
                ("max_d", max_d.to_string()),
            ];
            report::render_indices(&ds, format, &labels)
        }
    })
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn verify(v: &VerifyArgs, jobs: usize, format: Format) -> Result<(i32, String), Failed> {
    let opts = EngineOptions {
        jobs,
        allow_override: v.allow_override,
        sweep: SweepOptions { max_r: v.max_r },
    };
    if v.claim.eq_ignore_ascii_case("all") {
        if v.bound.is_some() || v.instance.is_some() {
            return Err(Failed::Usage(
                "`verify all` takes --bound-profile, not --bound or --instance".into(),
            ));
        }
        let profile = match v.bound_profile.unwrap_or(ProfileArg::Quick) {
            ProfileArg::Quick => BoundProfile::Quick,
            ProfileArg::Full => BoundProfile::Full,
        };
        let reports = engine::verify_all(profile, &opts)?;
        let code = if reports.iter().all(VerificationReport::passed) {
            EXIT_OK
        } else {
            EXIT_COUNTEREXAMPLE
        };
        return Ok((code, report::render_reports(&reports, format)));
    }
    if v.bound_profile.is_some() {
        return Err(Failed::Usage(
            "--bound-profile only applies to `verify all`".into(),
        ));
    }
    let claim: ClaimId = v.claim.parse()?;
    if let Some(text) = &v.instance {
        let params = Params::parse_for(claim, text)?;
        return Ok(single(engine::verify_instance(claim, &params), format));
    }
    let bound = v.bound.unwrap_or_else(|| claim.full_bound());
    if bound == 0 {
        return Err(Failed::Usage("--bound must be positive".into()));
    }
    Ok(single(engine::verify_claim(claim, bound, &opts)?, format))
}
