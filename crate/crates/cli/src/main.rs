use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use entangler_core::oracle::OracleBudget;
use entangler_forge::commands;
use entangler_forge::error::CliError;
use entangler_forge::gate::{single_spec, specs_from_args, GateSpec};

/// Two-qubit gate analysis: entangling strength, optimal run counts,
/// perfect-entangler synthesis and a brute-force cross-check.
///
/// Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 matrix not
/// unitary, 4 gate outside the command's regime.
#[derive(Parser)]
#[command(name = "entangler-forge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GateArgs {
    /// Catalog gate: identity, cnot, cz, swap, sqrt_swap, cp, canonical, xx.
    /// Parameters inline (`cp(0.5)`) or through --param.
    #[arg(long)]
    gate: Option<String>,
    /// Gate parameter in radians; repeat for gates that take several.
    #[arg(long = "param", allow_negative_numbers = true)]
    params: Vec<f64>,
    /// JSON file with a gate spec or a 4x4 array of [re, im] pairs.
    #[arg(long, conflicts_with = "gate")]
    matrix: Option<PathBuf>,
}

impl GateArgs {
    fn spec(&self) -> Result<GateSpec, CliError> {
        single_spec(self.gate.as_ref(), &self.params, self.matrix.as_ref())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Canonical invariants, Ω, run count and perfect-entangler status.
    Analyze(GateArgs),
    /// Build a perfect-entangling circuit from the optimal number of uses.
    Synthesize {
        #[command(flatten)]
        gate: GateArgs,
        /// Where to write the circuit; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a circuit file: product input in, maximally entangled state out.
    Verify {
        /// Circuit file written by `synthesize`.
        circuit: PathBuf,
        /// Slack on both concurrence checks.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Lower bound on uses of the first gate needed to simulate the second.
    Bound {
        /// Give twice (or mix with --matrix); the first is the resource.
        #[arg(long = "gate")]
        gates: Vec<String>,
        #[arg(long = "param", allow_negative_numbers = true)]
        params: Vec<f64>,
        #[arg(long = "matrix")]
        matrices: Vec<PathBuf>,
    },
    /// Numerically maximize output concurrence over k-use interleavings.
    Oracle {
        #[command(flatten)]
        gate: GateArgs,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        /// Simplex iterations per restart.
        #[arg(long, default_value_t = 2000)]
        iterations: usize,
    },
}

/// Standard output text and exit code of a successful run.
struct Done {
    stdout: String,
    code: u8,
}

fn ok(stdout: String) -> Done {
    Done { stdout, code: 0 }
}

fn run(cli: Cli) -> Result<Done, CliError> {
    match cli.command {
        Command::Analyze(g) => commands::analyze(&g.spec()?.resolve()?).map(ok),
        Command::Synthesize { gate, out } => {
            let spec = gate.spec()?;
            let name = out.as_ref().map(|p| p.display().to_string());
            let (file, summary) = commands::synthesize(&spec, name.as_deref())?;
            match (out, summary) {
                (Some(path), Some(summary)) => {
                    std::fs::write(&path, file).map_err(|e| {
                        CliError::Io(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok(ok(summary))
                }
                _ => Ok(ok(file)),
            }
        }
        Command::Verify { circuit, tol } => {
            let text = std::fs::read_to_string(&circuit)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", circuit.display())))?;
            let (report, passed) = commands::verify(&text, tol)?;
            Ok(Done {
                stdout: report,
                code: if passed { 0 } else { 1 },
            })
        }
        Command::Bound {
            gates,
            params,
            matrices,
        } => {
            let specs = specs_from_args(&gates, &params, &matrices)?;
            let [u, v] = specs.as_slice() else {
                return Err(CliError::Parse(format!(
                    "bound needs exactly two gates, got {}",
                    specs.len()
                )));
            };
            commands::bound(u, v).map(ok)
        }
        Command::Oracle {
            gate,
            k,
            seed,
            restarts,
            iterations,
        } => {
            let budget = OracleBudget {
                restarts,
                max_iterations: iterations,
                seed,
                ..OracleBudget::default()
            };
            commands::oracle(&gate.spec()?, k, &budget).map(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            let err = CliError::Parse(e.to_string().trim().to_string());
            eprint!("{}", err.to_json());
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(done) => {
            print!("{}", done.stdout);
            let _ = std::io::stdout().flush();
            ExitCode::from(done.code)
        }
        Err(err) => {
            eprint!("{}", err.to_json());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
