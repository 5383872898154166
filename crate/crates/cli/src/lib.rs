//! Driver behind the `pwt` binary: reads `.alg` files, runs one
//! computation, prints a table and optionally writes JSON and DOT.

pub mod algfile;
pub mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use pwt_core::homology::DEFAULT_SYZYGY_CAP;
use pwt_core::Field;

pub use report::RunReport;

#[derive(Debug, Parser)]
#[command(name = "pwt", about = "PWT modules over bound quiver algebras and one-point extensions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the indecomposable modules.
    Indecs(Common),
    /// Ext dimensions between all pairs of indecomposables.
    ExtTable(Common),
    /// List the basic PWT modules.
    Pwt(Common),
    /// Left mutations of every PWT module (or of `--module` at `--summand`).
    Mutate(Common),
    /// The left-mutation graph of the PWT modules.
    MutationGraph(Common),
    /// Lift every PWT module U to ℰU ⊕ P_a and check it is PWT over Λ[M].
    ExtendVerifyA(Common),
    /// Lift every left mutation U → U' and compare with the mutation over Λ[M].
    ExtendVerifyB(Common),
    /// Compare PWT(Λ[S_i]) with the lifts of PWT(Λ) and RPWT(Λ, S_i).
    ExtendBijection(Common),
    /// Tilting counts with and without the bound pd ≤ 1.
    TiltCount(Common),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Indecs(_) => "indecs",
            Command::ExtTable(_) => "ext-table",
            Command::Pwt(_) => "pwt",
            Command::Mutate(_) => "mutate",
            Command::MutationGraph(_) => "mutation-graph",
            Command::ExtendVerifyA(_) => "extend-verify-a",
            Command::ExtendVerifyB(_) => "extend-verify-b",
            Command::ExtendBijection(_) => "extend-bijection",
            Command::TiltCount(_) => "tilt-count",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::Indecs(c)
            | Command::ExtTable(c)
            | Command::Pwt(c)
            | Command::Mutate(c)
            | Command::MutationGraph(c)
            | Command::ExtendVerifyA(c)
            | Command::ExtendVerifyB(c)
            | Command::ExtendBijection(c)
            | Command::TiltCount(c) => c,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    /// Brute force over GF(2) and GF(3), structural otherwise.
    Auto,
    Brute,
    /// Nakayama quotients for Λ, `ℰ(ind Λ) ∪ {P_a, S_a}` for triples.
    Structural,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Algebra file in `.alg` format.
    pub file: PathBuf,
    /// A prime p or `Q`.
    #[arg(long, default_value = "101")]
    pub field: String,
    #[arg(long, default_value_t = DEFAULT_SYZYGY_CAP)]
    pub syzygy_cap: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest dimension per vertex for brute-force enumeration.
    #[arg(long, default_value_t = 2)]
    pub dim_bound: usize,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    pub strategy: StrategyArg,
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Extend by the simple module at this vertex.
    #[arg(long, conflicts_with = "extend_by")]
    pub at: Option<String>,
    /// Extend by a named module from the file.
    #[arg(long)]
    pub extend_by: Option<String>,
    /// Named module to mutate.
    #[arg(long, requires = "summand")]
    pub module: Option<String>,
    /// Named summand of `--module` to mutate at.
    #[arg(long)]
    pub summand: Option<String>,
    /// Highest Ext degree shown by `ext-table`.
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

pub fn parse_field(s: &str) -> Result<Field, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Rational);
    }
    let p: u64 = s.parse().map_err(|_| format!("field must be a prime or Q, got `{s}`"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Runs one command. Exit codes: 0 success, 1 usage or input error,
/// 2 failed check or refused computation.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_to(argv, &mut std::io::stdout().lock())
}

/// [`run`] with the human-readable output sent to `out`.
pub fn run_to<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let common = cli.command.common().clone();
    let field = match parse_field(&common.field) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let text = match std::fs::read_to_string(&common.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", common.file.display());
            return 1;
        }
    };
    let parsed = match algfile::parse_alg(&text, field, common.seed) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {}: {e}", common.file.display());
            return 1;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(common.threads.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let session = commands::Session::new(parsed, field, &common);
    let outcome = pool.install(|| commands::dispatch(&cli.command, &session));
    let mut report = RunReport {
        command: cli.command.name().to_string(),
        algebra_digest: digest(text.as_bytes()),
        field: field.to_string(),
        seed: common.seed,
        syzygy_cap: common.syzygy_cap,
        dim_bound: common.dim_bound,
        results: serde_json::Value::Null,
        checks: Vec::new(),
    };
    let code = match outcome {
        Ok(result) => {
            for line in &result.lines {
                let _ = writeln!(out, "{line}");
            }
            for c in &result.checks {
                let _ = writeln!(out, "[{}] {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.witness);
            }
            if let Some(dot) = &result.dot {
                match &common.dot {
                    Some(path) => {
                        if let Err(e) = std::fs::write(path, dot) {
                            eprintln!("error: {}: {e}", path.display());
                            return 1;
                        }
                    }
                    None => {
                        let _ = write!(out, "{dot}");
                    }
                }
            }
            let ok = result.checks.iter().all(|c| c.pass);
            report.results = result.results;
            report.checks = result.checks;
            if ok {
                0
            } else {
                2
            }
        }
        Err(e) => {
            let kind = report::error_kind(&e);
            eprintln!("error: {kind}: {e}");
            report.results = serde_json::json!({ "error": kind, "message": e.to_string() });
            report.checks.push(pwt_core::opext::Check::new("computation", false, format!("{kind}: {e}")));
            // bad vertex or module names on the command line are usage errors
            match e {
                pwt_core::Error::UnknownVertex(_) | pwt_core::Error::MalformedId(_) => 1,
                _ => 2,
            }
        }
    };
    if let Some(path) = &common.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: {}: {e}", path.display());
            return 1;
        }
    }
    code
}
