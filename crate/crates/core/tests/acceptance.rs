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

//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.
//!
//! `cargo test -p zxopt --test acceptance`

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use zxopt::circuit::qc::parse_qc;
use zxopt::circuit::Circuit;
use zxopt::rewrite::Rule;
use zxopt::semantics::{proportional, tensor_of_circuit, validate_equal, Validation};
use zxopt::simplify::is_reduced_gadget_form;
use zxopt::teleport::{teleport, Teleported};

use common::*;

const TOL: f64 = 1e-9;

/// Benchmark rows: name, T before, T after.
const TABLE: [(&str, usize, usize); 13] = [
    ("tof_3", 21, 15),
    ("tof_4", 35, 23),
    ("tof_5", 49, 31),
    ("tof_10", 119, 71),
    ("barenco-tof_3", 28, 16),
    ("barenco-tof_4", 56, 28),
    ("barenco-tof_5", 84, 40),
    ("barenco-tof_10", 224, 100),
    ("mod5_4", 28, 8),
    ("vbe-adder_3", 70, 24),
    ("mod-red-21", 119, 73),
    ("rc-adder_6", 77, 47),
    ("ham15-low", 161, 97),
];

const LARGE: [(&str, usize); 4] = [("hwb_8", 3517), ("nth-prime_8", 4047), ("cycle17_3", 1797), ("Adder64", 504)];

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: u32, title: &str, ok: bool, detail: String) {
        if !ok {
            self.failures += 1;
        }
        println!("[{}] {}. {}: {}", if ok { "PASS" } else { "FAIL" }, id, title, detail);
    }
}

fn bench_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../benchmarks")
}

struct FixtureRun {
    name: &'static str,
    original: Circuit,
    run: Teleported,
    elapsed: Duration,
}

fn main() {
    let mut r = Report { failures: 0 };

    // Load and optimise every available fixture once.
    let mut runs = Vec::new();
    let mut missing = Vec::new();
    for &(name, _, _) in &TABLE {
        let path = bench_dir().join(format!("{}.qc", name));
        match std::fs::read_to_string(&path) {
            Ok(text) => {
                let original = parse_qc(&text).expect("fixture parses");
                let start = Instant::now();
                let run = teleport(&original);
                runs.push(FixtureRun {
                    name,
                    original,
                    run,
                    elapsed: start.elapsed(),
                });
            }
            Err(_) => missing.push(name),
        }
    }

    // 1. T-count reproduction.
    let mut bad = Vec::new();
    for f in &runs {
        let &(_, before, after) = TABLE.iter().find(|t| t.0 == f.name).unwrap();
        let got = (f.run.basic.t_count(), f.run.circuit.t_count());
        if got != (before, after) || f.elapsed >= Duration::from_secs(60) {
            bad.push(format!("{} got {}->{} in {:.1?}", f.name, got.0, got.1, f.elapsed));
        }
    }
    let slowest = runs.iter().map(|f| f.elapsed).max().unwrap_or_default();
    r.line(
        1,
        "T-count reproduction",
        bad.is_empty() && !runs.is_empty(),
        format!(
            "{}/{} rows exact (slowest {:.2?}); skipped, fixture absent: {}{}",
            runs.len() - bad.len(),
            runs.len(),
            slowest,
            if missing.is_empty() { "none".into() } else { missing.join(", ") },
            if bad.is_empty() { String::new() } else { format!("; mismatches: {}", bad.join("; ")) }
        ),
    );

    // 2. Structure preservation.
    let bad: Vec<&str> = runs
        .iter()
        .filter(|f| {
            f.run.circuit.skeleton() != f.run.basic.skeleton()
                || f.run.circuit.two_qubit_count() != f.run.basic.two_qubit_count()
        })
        .map(|f| f.name)
        .collect();
    r.line(
        2,
        "Structure preservation",
        bad.is_empty(),
        format!("{} fixtures with identical gate skeleton{}", runs.len() - bad.len(), fail_list(&bad)),
    );

    // 3. Validation closure.
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    for f in &runs {
        let start = Instant::now();
        let v = validate_equal(&f.original, &f.run.circuit).unwrap();
        let t = start.elapsed();
        slowest = slowest.max(t);
        if v != Validation::Validated || t >= Duration::from_secs(120) {
            bad.push(f.name);
        }
    }
    r.line(
        3,
        "Validation closure",
        bad.is_empty(),
        format!(
            "{}/{} VALIDATED (slowest {:.2?}){}",
            runs.len() - bad.len(),
            runs.len(),
            slowest,
            fail_list(&bad)
        ),
    );

    // 4. Rule soundness.
    let mut counts = [0usize; 6];
    let mut unsound = [0usize; 6];
    let mut not_graph_like = 0;
    let mut nc_increase = 0;
    let mut g = rng(4);
    let mut walks = 0;
    while counts.iter().any(|&c| c < 200) && walks < 20_000 {
        walks += 1;
        let c = random_circuit(&mut g, 5, 40);
        let mut d = graph_like(&c);
        for s in random_walk(&mut d, &mut g, &counts) {
            let i = Rule::ALL.iter().position(|&x| x == s.rule).unwrap();
            counts[i] += 1;
            unsound[i] += !s.sound as usize;
            not_graph_like += !s.graph_like as usize;
            nc_increase += (s.non_clifford_after > s.non_clifford_before) as usize;
        }
    }
    let per_rule: Vec<String> = Rule::ALL
        .iter()
        .zip(counts.iter().zip(&unsound))
        .map(|(r, (c, u))| format!("{} {}/{}", r, c - u, c))
        .collect();
    r.line(
        4,
        "Rule soundness",
        counts.iter().all(|&c| c >= 200) && unsound.iter().all(|&u| u == 0) && not_graph_like == 0,
        format!(
            "{} ({} walks, boundaries <= 10, tol {:e}); graph-like violations {}",
            per_rule.join(", "),
            walks,
            TOL,
            not_graph_like
        ),
    );

    // 5. End-to-end unitary oracle.
    let start = Instant::now();
    let mut g = rng(5);
    let mut bad = 0;
    let mut small_runs = Vec::new();
    for _ in 0..1000 {
        let c = acceptance_circuit(&mut g, 5, 40);
        let run = teleport(&c);
        let a = tensor_of_circuit(&c, None).unwrap();
        let b = tensor_of_circuit(&run.circuit, None).unwrap();
        if !proportional(&a, &b, TOL).unwrap() {
            bad += 1;
        }
        small_runs.push((c, run));
    }
    let elapsed = start.elapsed();
    r.line(
        5,
        "End-to-end unitary oracle",
        bad == 0 && elapsed < Duration::from_secs(600),
        format!("{}/1000 proportional at tol {:e} in {:.2?}", 1000 - bad, TOL, elapsed),
    );

    // 6. Monotonicity.
    let all_runs = runs.iter().map(|f| &f.run).chain(small_runs.iter().map(|(_, r)| r));
    let (mut t_up, mut nc_up, mut total) = (0, 0, 0);
    for run in all_runs {
        total += 1;
        t_up += (run.circuit.t_count() > run.basic.t_count()) as usize;
        nc_up += run.report.non_clifford_trace.windows(2).any(|w| w[1] > w[0]) as usize;
    }
    r.line(
        6,
        "Monotonicity",
        t_up == 0 && nc_up == 0 && nc_increase == 0,
        format!(
            "{} runs: T-count increases {}, non-Clifford trace increases {}, single-rule increases {}",
            total, t_up, nc_up, nc_increase
        ),
    );

    // 7. Reduced gadget form.
    let not_reduced = runs
        .iter()
        .map(|f| &f.run)
        .chain(small_runs.iter().map(|(_, r)| r))
        .filter(|run| !is_reduced_gadget_form(&run.diagram))
        .count();
    r.line(
        7,
        "Reduced gadget form",
        not_reduced == 0,
        format!("{} final diagrams not in reduced gadget form", not_reduced),
    );

    // 8. Exclusions.
    let manifest = std::fs::read_to_string(bench_dir().join("manifest.tsv")).unwrap_or_default();
    let gated: Vec<String> = LARGE
        .iter()
        .filter(|(n, t)| manifest.lines().any(|l| l == format!("{}\t{}\tfull", n, t)))
        .map(|(n, t)| format!("{} ({})", n, t))
        .collect();
    r.line(
        8,
        "Excluded items",
        gated.len() == LARGE.len(),
        format!(
            "not run here: the TODD post-processing column; large fixtures gated behind `bench --full`: {}",
            gated.join(", ")
        ),
    );

    if r.failures > 0 {
        println!("{} criteria failed", r.failures);
        std::process::exit(1);
    }
}

fn fail_list(names: &[&str]) -> String {
    if names.is_empty() {
        String::new()
    } else {
        format!("; failing: {}", names.join(", "))
    }
}
