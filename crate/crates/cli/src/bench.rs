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

//! The `bench` command.
//!
//! The manifest has one fixture per line: `name<TAB>expected_t_after`, with
//! an optional third column `full` for fixtures that only run under
//! `--full`. Blank lines and lines starting with `#` are ignored. Fixture
//! `name` is read from `<dir>/name.qc`.

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{mpsc, Mutex};
use std::time::{Duration, Instant};

use zxopt::semantics::{validate_equal, Validation};

use crate::io::{read_circuit, CliError};
use crate::optimize_circuit;

pub struct BenchConfig {
    pub dir: PathBuf,
    pub manifest: PathBuf,
    pub strict: bool,
    pub jobs: usize,
    pub full: bool,
    pub timeout: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub expected: usize,
    pub full: bool,
}

pub fn parse_manifest(text: &str) -> Result<Vec<Entry>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        let bad = || format!("manifest line {}: expected `name<TAB>count[<TAB>full]`", i + 1);
        if cols.len() < 2 || cols.len() > 3 {
            return Err(bad());
        }
        let expected = cols[1].trim().parse().map_err(|_| bad())?;
        let full = match cols.get(2).map(|s| s.trim()) {
            None => false,
            Some("full") => true,
            Some(_) => return Err(bad()),
        };
        out.push(Entry {
            name: cols[0].trim().to_string(),
            expected,
            full,
        });
    }
    Ok(out)
}

enum Outcome {
    Done {
        qubits: usize,
        t_before: usize,
        t_after: usize,
        validated: bool,
        secs: f64,
    },
    Skipped(&'static str),
    Timeout,
    Error(String),
}

fn run_one(path: PathBuf, timeout: Duration) -> Outcome {
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let start = Instant::now();
        let result = read_circuit(&path).map(|(c, _)| {
            let out = optimize_circuit(&c, true, false);
            let validated = validate_equal(&c, &out) == Ok(Validation::Validated);
            let basic = c.decompose_to_basic();
            Outcome::Done {
                qubits: basic.width(),
                t_before: basic.t_count(),
                t_after: out.t_count(),
                validated,
                secs: start.elapsed().as_secs_f64(),
            }
        });
        let _ = tx.send(result.unwrap_or_else(|e| Outcome::Error(e.to_string())));
    });
    rx.recv_timeout(timeout).unwrap_or(Outcome::Timeout)
}

pub fn run(cfg: BenchConfig) -> Result<u8, CliError> {
    let text = std::fs::read_to_string(&cfg.manifest).map_err(|e| CliError::Io(cfg.manifest.clone(), e))?;
    let entries = parse_manifest(&text).map_err(|m| {
        CliError::Io(
            cfg.manifest.clone(),
            std::io::Error::new(std::io::ErrorKind::InvalidData, m),
        )
    })?;

    let results: Mutex<Vec<Option<Outcome>>> = Mutex::new((0..entries.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..cfg.jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(e) = entries.get(i) else { break };
                let path = cfg.dir.join(format!("{}.qc", e.name));
                let outcome = if e.full && !cfg.full {
                    Outcome::Skipped("needs --full")
                } else if !path.exists() {
                    Outcome::Skipped("missing fixture")
                } else {
                    run_one(path, cfg.timeout)
                };
                results.lock().unwrap()[i] = Some(outcome);
            });
        }
    });

    println!("circuit\tn\tT\tT-after\texpected\tstatus\tseconds");
    let mut failed = false;
    for (e, r) in entries.iter().zip(results.into_inner().unwrap()) {
        match r.expect("every entry ran") {
            Outcome::Done {
                qubits,
                t_before,
                t_after,
                validated,
                secs,
            } => {
                let ok = validated && t_after <= e.expected;
                failed |= !ok;
                let status = match (ok, validated) {
                    (true, _) => "ok",
                    (false, false) => "FAIL (not validated)",
                    (false, true) => "FAIL (T above expected)",
                };
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{:.3}",
                    e.name, qubits, t_before, t_after, e.expected, status, secs
                );
            }
            Outcome::Skipped(why) => {
                failed |= cfg.strict && why == "missing fixture";
                println!("{}\t-\t-\t-\t{}\tskipped ({})\t-", e.name, e.expected, why);
            }
            Outcome::Timeout => {
                failed = true;
                println!(
                    "{}\t-\t-\t-\t{}\tFAIL (timeout after {}s)\t-",
                    e.name,
                    e.expected,
                    cfg.timeout.as_secs()
                );
            }
            Outcome::Error(m) => {
                failed = true;
                println!("{}\t-\t-\t-\t{}\tFAIL ({})\t-", e.name, e.expected, m);
            }
        }
    }
    Ok(if failed { 4 } else { 0 })
}
