//! `qgeom`: command-line front end for exact finite-group geometry.

mod commands;
mod job;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};

use commands::Output;
use job::{Job, JobArgs};

#[derive(Parser)]
#[command(name = "qgeom", version, about = "Exact Riemannian geometry and Dirac operators on finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group, calculus, 2-form and Killing form summary.
    Info(JobArgs),
    /// Torsion-free and cotorsion-free moduli and their regular points.
    Solve(JobArgs),
    /// Curvature, Ricci and metric-compatibility diagnostics.
    Geometry(JobArgs),
    /// Gamma matrices, Dirac operator, spectrum and the Connes check.
    Dirac(JobArgs),
    /// Compare the finite-set tensor engine with the group modules.
    FinsetCheck(JobArgs),
    /// Write every JSON artifact to --out.
    Export(JobArgs),
}

/// Writes a line to stdout; a closed pipe (as with `| head`) is not an error.
fn say(line: &str) -> Result<()> {
    match writeln!(io::stdout().lock(), "{line}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(job: &Job, out: Output) -> Result<()> {
    say(&out.text)?;
    if let Some(path) = job.write_artifact(out.artifact, &out.json)? {
        say(&format!("wrote {}", path.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let (args, which): (JobArgs, fn(&Job) -> Result<Output>) = match cli.command {
        Command::Info(a) => (a, commands::info),
        Command::Solve(a) => (a, commands::solve),
        Command::Geometry(a) => (a, commands::geometry),
        Command::Dirac(a) => (a, commands::dirac),
        Command::FinsetCheck(a) => (a, commands::finset_check),
        Command::Export(a) => {
            if a.out.is_none() {
                bail!("export needs --out DIR");
            }
            let job = Job::resolve(a)?;
            let steps: [fn(&Job) -> Result<Output>; 5] = [
                commands::info,
                commands::solve,
                commands::geometry,
                commands::dirac,
                commands::finset_check,
            ];
            for step in steps {
                let out = step(&job)?;
                if let Some(path) = job.write_artifact(out.artifact, &out.json)? {
                    say(&format!("wrote {}", path.display()))?;
                }
            }
            return Ok(());
        }
    };
    let job = Job::resolve(args)?;
    let out = which(&job)?;
    emit(&job, out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
