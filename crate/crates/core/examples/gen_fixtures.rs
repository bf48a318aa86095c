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

//! Writes the multi-controlled Toffoli benchmark circuits as `.qc` files.
//!
//! `cargo run -p zxopt --example gen_fixtures -- <out-dir>`
//!
//! `tof_n` computes an n-controlled Toffoli with a ladder of Toffolis into
//! n-2 ancillas and uncomputes it. `barenco-tof_n` uses the Barenco
//! construction, a down-up ladder applied twice.

use std::fs;
use std::path::PathBuf;

use zxopt::circuit::qc::write_qc;
use zxopt::circuit::{Circuit, Gate};

fn names(n: usize) -> Vec<String> {
    let mut v: Vec<String> = (0..n).map(|i| format!("c{}", i)).collect();
    v.extend((0..n - 2).map(|i| format!("a{}", i)));
    v.push("t".into());
    v
}

fn build(n: usize, triples: &[(usize, usize, usize)]) -> Circuit {
    let mut c = Circuit::with_names(names(n));
    for &(a, b, t) in triples {
        c.push(Gate::tof(a, b, t)).unwrap();
    }
    c
}

/// Qubit indices: controls `0..n`, ancillas `n..2n-2`, target `2n-2`.
fn tof(n: usize) -> Circuit {
    let anc = |i: usize| n + i;
    let target = 2 * n - 2;
    let mut seq = vec![(0, 1, anc(0))];
    for i in 2..n - 1 {
        seq.push((i, anc(i - 2), anc(i - 1)));
    }
    let mid = (n - 1, anc(n - 3), target);
    let mut all = seq.clone();
    all.push(mid);
    all.extend(seq.iter().rev());
    build(n, &all)
}

fn barenco(n: usize) -> Circuit {
    let anc = |i: usize| n + i;
    let target = 2 * n - 2;
    let mut down = vec![(n - 1, anc(n - 3), target)];
    for i in (2..n - 1).rev() {
        down.push((i, anc(i - 2), anc(i - 1)));
    }
    let mut half = down.clone();
    half.push((0, 1, anc(0)));
    half.extend(down[1..].iter().rev());
    let mut all = half.clone();
    all.extend(half);
    build(n, &all)
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "benchmarks".into()));
    fs::create_dir_all(&dir).expect("create output directory");
    for n in [3, 4, 5, 10] {
        for (name, c) in [(format!("tof_{}", n), tof(n)), (format!("barenco-tof_{}", n), barenco(n))] {
            let path = dir.join(format!("{}.qc", name));
            fs::write(&path, write_qc(&c)).expect("write fixture");
            println!("{}\t{} qubits\t{} T", path.display(), c.width(), c.decompose_to_basic().t_count());
        }
    }
}
