// zxopt - T-count reduction for quantum circuits using the ZX-calculus
// Copyright (C) 2026 - The zxopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `zxopt`: T-count optimisation from the command line.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 I/O error, 3 verification
//! inconclusive, 4 benchmark failure.

mod bench;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use zxopt::circuit::{basic_cancel, Circuit};
use zxopt::semantics::{validate_equal, Validation};
use zxopt::teleport::teleport;

use crate::io::{read_circuit, write_circuit, CliError, Format};

/// Version tag of the tab-separated summary lines.
pub const SUMMARY_TAG: &str = "zxopt-summary/1";

#[derive(Parser)]
#[command(name = "zxopt", version, about = "T-count reduction by ZX-calculus phase teleportation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Qc,
    Qasm,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce the T-count of a circuit.
    Optimize {
        input: PathBuf,
        /// Output file. Without it the circuit goes to stdout and the
        /// summary line to stderr.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Output format. Defaults to the output file's extension, else the
        /// input format.
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Skip the gate cancellation pass after teleportation.
        #[arg(long)]
        no_postprocess: bool,
        /// Repeat teleportation until the T-count stops decreasing.
        #[arg(long)]
        iterate: bool,
    },
    /// Check that two circuits are equal by simplifying one against the
    /// adjoint of the other.
    Verify { a: PathBuf, b: PathBuf },
    /// Print gate statistics.
    Stats { input: PathBuf },
    /// Optimise and verify every fixture listed in a manifest.
    Bench {
        dir: PathBuf,
        /// Manifest file. Defaults to `<dir>/manifest.tsv`.
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Treat missing fixtures as failures.
        #[arg(long)]
        strict: bool,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also run fixtures marked `full`.
        #[arg(long)]
        full: bool,
        /// Per-fixture wall-clock budget in seconds.
        #[arg(long, default_value_t = 300)]
        timeout: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Optimize {
            input,
            output,
            format,
            no_postprocess,
            iterate,
        } => optimize(input, output, format, no_postprocess, iterate),
        Command::Verify { a, b } => verify(a, b),
        Command::Stats { input } => stats(input),
        Command::Bench {
            dir,
            manifest,
            strict,
            jobs,
            full,
            timeout,
        } => bench::run(bench::BenchConfig {
            manifest: manifest.unwrap_or_else(|| dir.join("manifest.tsv")),
            dir,
            strict,
            jobs: jobs.max(1),
            full,
            timeout: std::time::Duration::from_secs(timeout),
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("zxopt: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}

/// Teleportation followed, unless disabled, by gate cancellation.
pub fn optimize_circuit(c: &Circuit, postprocess: bool, iterate: bool) -> Circuit {
    let trace = std::env::var("ZXOPT_TRACE").is_ok_and(|v| v == "1");
    let mut cur = c.decompose_to_basic();
    loop {
        let run = teleport(&cur);
        if trace {
            eprint!("{}", run.report.trace());
        }
        let improved = run.circuit.t_count() < cur.t_count();
        cur = run.circuit;
        if !iterate || !improved {
            break;
        }
    }
    if postprocess {
        cur = basic_cancel(&cur);
    }
    cur
}

fn summary(name: &str, before: &Circuit, after: &Circuit) -> String {
    let (b, a) = (before.decompose_to_basic().stats(), after.stats());
    format!(
        "{}\t{}\tqubits={}\tt_before={}\tt_after={}\tgates_before={}\tgates_after={}\ttwo_qubit_before={}\ttwo_qubit_after={}",
        SUMMARY_TAG, name, b.qubits, b.t_count, a.t_count, b.gates, a.gates, b.two_qubit, a.two_qubit
    )
}

fn optimize(
    input: PathBuf,
    output: Option<PathBuf>,
    format: Option<FormatArg>,
    no_postprocess: bool,
    iterate: bool,
) -> Result<u8, CliError> {
    let (c, in_format) = read_circuit(&input)?;
    let out = optimize_circuit(&c, !no_postprocess, iterate);
    let format = match format {
        Some(FormatArg::Qc) => Format::Qc,
        Some(FormatArg::Qasm) => Format::Qasm,
        None => output.as_deref().and_then(Format::from_path).unwrap_or(in_format),
    };
    let line = summary(&input.display().to_string(), &c, &out);
    match output {
        Some(path) => {
            write_circuit(&path, &out, format)?;
            println!("{}", line);
        }
        None => {
            print!("{}", format.render(&out));
            eprintln!("{}", line);
        }
    }
    Ok(0)
}

fn verify(a: PathBuf, b: PathBuf) -> Result<u8, CliError> {
    let (ca, _) = read_circuit(&a)?;
    let (cb, _) = read_circuit(&b)?;
    match validate_equal(&ca, &cb).map_err(CliError::Usage)? {
        Validation::Validated => {
            println!("VALIDATED");
            Ok(0)
        }
        Validation::Unknown => {
            println!("UNKNOWN");
            Ok(3)
        }
    }
}

fn stats(input: PathBuf) -> Result<u8, CliError> {
    let (c, _) = read_circuit(&input)?;
    let s = c.decompose_to_basic().stats();
    println!(
        "zxopt-stats/1\t{}\tqubits={}\tgates={}\tbasic_gates={}\tt_count={}\ttwo_qubit={}\thadamard={}\tclifford_phase={}",
        input.display(),
        s.qubits,
        c.len(),
        s.gates,
        s.t_count,
        s.two_qubit,
        s.hadamard,
        s.clifford_phase
    );
    Ok(0)
}
