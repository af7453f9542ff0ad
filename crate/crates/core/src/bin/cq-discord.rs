use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cq_discord::cli::{self, CliError, CliResult, Method, Quantity, SweepConfig};
use cq_discord::correlations::MeshOptions;
use cq_discord::qmat::Subsystem;
use cq_discord::states::CanonicalParams;

#[derive(Parser)]
#[command(name = "cq-discord", version, about = "Discord of classical-quantum states under amplitude damping")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the damping probability and report D, C and I.
    Evolve {
        #[arg(long, default_value_t = 201)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Method::Analytic)]
        method: Method,
        /// Relaxation rate; adds a physical-time column.
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        p_min: f64,
        #[arg(long, default_value_t = 1.0)]
        p_max: f64,
        /// Exit 1 if analytic and numeric disagree by more than 1e-4 (with --method both).
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Discord or classical correlations over (s, phi).
    Surface {
        #[arg(long, default_value_t = 101)]
        ns: usize,
        #[arg(long, default_value_t = 181)]
        nphi: usize,
        #[arg(long, value_enum, default_value_t = Quantity::Discord)]
        quantity: Quantity,
        #[command(flatten)]
        output: Output,
    },
    /// The conditional-entropy surface, optionally restricted to a state's ellipse.
    DeltaSurface {
        #[arg(long, default_value_t = 101)]
        n: usize,
        #[arg(long, requires_all = ["s1", "phi"])]
        s0: Option<f64>,
        #[arg(long, requires_all = ["s0", "phi"])]
        s1: Option<f64>,
        #[arg(long, requires_all = ["s0", "s1"])]
        phi: Option<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Bloch-plane paths of the damped |+> and |-> states.
    Trajectory {
        #[arg(long, default_value_t = 201)]
        points: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Numeric discord of a state read from a file.
    Discord {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "B")]
        measured: Subsystem,
        #[arg(long, default_value_t = 64)]
        ntheta: usize,
        #[arg(long, default_value_t = 128)]
        nphi_m: usize,
        #[arg(long)]
        no_refine: bool,
    },
}

fn sink(output: &Output) -> CliResult<Box<dyn Write>> {
    Ok(match &output.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cmd: Command) -> CliResult<()> {
    match cmd {
        Command::Evolve { points, method, gamma, p_min, p_max, check, output } => {
            let cfg = SweepConfig { points, p_min, p_max, gamma, method, mesh: MeshOptions::default(), check };
            cfg.validate()?;
            cli::cmd_evolve(&cfg, sink(&output)?)?;
        }
        Command::Surface { ns, nphi, quantity, output } => {
            cli::cmd_surface(ns, nphi, quantity, sink(&output)?)?;
        }
        Command::DeltaSurface { n, s0, s1, phi, output } => {
            let params = match (s0, s1, phi) {
                (Some(s0), Some(s1), Some(phi)) => {
                    Some(CanonicalParams::new(s0, s1, phi).map_err(|e| CliError::Usage(e.to_string()))?)
                }
                _ => None,
            };
            cli::cmd_delta_surface(n, params, sink(&output)?, io::stderr())?;
        }
        Command::Trajectory { points, output } => {
            cli::cmd_trajectory(points, sink(&output)?)?;
        }
        Command::Discord { input, measured, ntheta, nphi_m, no_refine } => {
            let mesh = MeshOptions { n_theta: ntheta, n_phi: nphi_m, refine: !no_refine };
            cli::cmd_discord(&input, measured, &mesh, io::stdout().lock())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cq-discord: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
