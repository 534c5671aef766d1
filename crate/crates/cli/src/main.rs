use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use msdual_cli::commands::{self, Options, Output, Run, Status};
use msdual_cli::doc::{self, DocError, Loaded};

#[derive(Parser)]
#[command(name = "msdual", version, about = "Finite duality for meet-semilattices and monotone semilattices")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write DOT diagrams to this file.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    /// Seed for sampled quantifiers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Skip the all-endomaps extension check above this many maps.
    #[arg(long, global = true, default_value_t = 4096)]
    limit: usize,
    /// Run every suite instead of stopping at the first failing one.
    #[arg(long, global = true)]
    all: bool,
    /// Emit the JSON report (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; only the exit code.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the document describes a semilattice (and operator, maps).
    Validate { file: String },
    /// The dual S-space.
    Dual { file: String },
    /// The canonical extension.
    Canext { file: String },
    /// σ and π extensions of the document's maps.
    Extend {
        file: String,
        /// Only this map; `m` names the operator.
        #[arg(long)]
        map: Option<String>,
    },
    /// Congruences and their families.
    Congruences { file: String },
    /// The lattice of lower-Vietoris-type families.
    Vietoris { file: String },
    /// Every property suite.
    VerifyAll { file: String },
    /// All semilattices of size n up to isomorphism.
    Enumerate {
        n: usize,
        /// Run verify-all on each.
        #[arg(long)]
        verify: bool,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::Validate { .. } => "validate",
            Cmd::Dual { .. } => "dual",
            Cmd::Canext { .. } => "canext",
            Cmd::Extend { .. } => "extend",
            Cmd::Congruences { .. } => "congruences",
            Cmd::Vietoris { .. } => "vietoris",
            Cmd::VerifyAll { .. } => "verify-all",
            Cmd::Enumerate { .. } => "enumerate",
        }
    }

    fn file(&self) -> Option<&str> {
        match self {
            Cmd::Validate { file }
            | Cmd::Dual { file }
            | Cmd::Canext { file }
            | Cmd::Extend { file, .. }
            | Cmd::Congruences { file }
            | Cmd::Vietoris { file }
            | Cmd::VerifyAll { file } => Some(file),
            Cmd::Enumerate { .. } => None,
        }
    }
}

fn load(path: &str) -> Result<Loaded, DocError> {
    doc::read(path)?.load()
}

fn dispatch(cmd: &Cmd, opts: &Options) -> Result<Run, DocError> {
    if let Cmd::Enumerate { n, verify } = cmd {
        return Ok(commands::enumerate(*n, *verify, opts));
    }
    let l = load(cmd.file().expect("file commands"))?;
    Ok(match cmd {
        Cmd::Validate { .. } => commands::validate(&l),
        Cmd::Dual { .. } => commands::dual(&l, opts),
        Cmd::Canext { .. } => commands::canext(&l),
        Cmd::Extend { map, .. } => commands::extend(&l, map.as_deref())?,
        Cmd::Congruences { .. } => commands::congruences(&l, opts),
        Cmd::Vietoris { .. } => commands::vietoris(&l, opts),
        Cmd::VerifyAll { .. } => commands::verify(&l, opts),
        Cmd::Enumerate { .. } => unreachable!(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let opts = Options { seed: cli.seed, limit: cli.limit, all: cli.all };
    let (output, dot) = match dispatch(&cli.cmd, &opts) {
        Ok(Run { output, dot }) => (output, dot),
        Err(e) => {
            eprintln!("msdual: {e}");
            (Output::doc_error(cli.cmd.name(), &e), Vec::new())
        }
    };
    if let Some(path) = &cli.dot {
        if !dot.is_empty() {
            if let Err(e) = std::fs::write(path, dot.concat()) {
                eprintln!("msdual: cannot write {}: {e}", path.display());
                return ExitCode::from(Status::ParseError.exit_code() as u8);
            }
        }
    }
    if !cli.quiet {
        let _ = writeln!(std::io::stdout().lock(), "{}", output.to_json());
    }
    if output.status == Status::Counterexample {
        if let Some(c) = output.checks.first_failure() {
            eprintln!("msdual: counterexample in {}: {}", c.name, c.witness.as_deref().unwrap_or(""));
        }
    }
    ExitCode::from(output.status.exit_code() as u8)
}
