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

//! Random circuits and rewrite walks shared by the integration tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zxopt::circuit::{Circuit, Gate};
use zxopt::graph::{ZxDiagram, V};
use zxopt::phase::Angle;
use zxopt::rewrite::{self, RewriteError, RewriteEvent, Rule};
use zxopt::semantics::{proportional, tensor_of_diagram, TensorValue, DEFAULT_TOL};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The gate mix used throughout: CNOT, H, T, T†, S, Z, CZ and occasional
/// X and odd multiples of π/8.
pub fn random_circuit(rng: &mut impl Rng, max_qubits: usize, max_gates: usize) -> Circuit {
    let n = rng.gen_range(1..=max_qubits);
    let len = rng.gen_range(0..=max_gates);
    let mut c = Circuit::new(n);
    for _ in 0..len {
        let q = rng.gen_range(0..n);
        let g = match rng.gen_range(0..10) {
            0 | 1 if n > 1 => {
                let mut t = rng.gen_range(0..n - 1);
                if t >= q {
                    t += 1;
                }
                Gate::cnot(q, t)
            }
            2 if n > 1 => {
                let mut t = rng.gen_range(0..n - 1);
                if t >= q {
                    t += 1;
                }
                Gate::Cz(q, t)
            }
            0..=3 => Gate::H(q),
            4 => Gate::t(q),
            5 => Gate::tdg(q),
            6 => Gate::s(q),
            7 => Gate::z(q, Angle::PI),
            8 => Gate::x(q, Angle::PI),
            _ => Gate::z(q, Angle::new(2 * rng.gen_range(0..8) + 1, 8)),
        };
        c.push(g).unwrap();
    }
    c
}

/// A random circuit restricted to the acceptance gate mix
/// CNOT/H/T/S/Z/CZ.
pub fn acceptance_circuit(rng: &mut impl Rng, max_qubits: usize, max_gates: usize) -> Circuit {
    let n = rng.gen_range(1..=max_qubits);
    let len = rng.gen_range(0..=max_gates);
    let mut c = Circuit::new(n);
    for _ in 0..len {
        let q = rng.gen_range(0..n);
        let other = |rng: &mut dyn rand::RngCore| {
            let mut t = rng.gen_range(0..n - 1);
            if t >= q {
                t += 1;
            }
            t
        };
        let g = match rng.gen_range(0..6) {
            0 if n > 1 => Gate::cnot(q, other(rng)),
            5 if n > 1 => Gate::Cz(q, other(rng)),
            1 | 0 | 5 => Gate::H(q),
            2 => Gate::t(q),
            3 => Gate::s(q),
            _ => Gate::z(q, Angle::PI),
        };
        c.push(g).unwrap();
    }
    c
}

pub fn graph_like(c: &Circuit) -> ZxDiagram {
    let mut d = ZxDiagram::from_circuit(c).unwrap();
    d.to_graph_like();
    d
}

pub fn tensor(d: &ZxDiagram) -> TensorValue {
    tensor_of_diagram(d, None).unwrap()
}

pub fn same(a: &TensorValue, b: &TensorValue) -> bool {
    proportional(a, b, DEFAULT_TOL).unwrap()
}

/// Every current match of `rule`, as vertex lists.
pub fn matches(d: &ZxDiagram, rule: Rule) -> Vec<Vec<V>> {
    let one = |v: Vec<V>| v.into_iter().map(|x| vec![x]).collect();
    let two = |v: Vec<(V, V)>| v.into_iter().map(|(a, b)| vec![a, b]).collect();
    match rule {
        Rule::LComp => one(rewrite::match_lcomp(d)),
        Rule::Pivot => two(rewrite::match_pivot(d)),
        Rule::PivotGadget => two(rewrite::match_pivot_gadget(d)),
        Rule::PivotBoundary => two(rewrite::match_pivot_boundary(d)),
        Rule::IdFuse => one(rewrite::match_id_fuse(d)),
        Rule::GadgetFuse => two(rewrite::match_gadget_fuse(d)),
    }
}

pub fn apply(d: &mut ZxDiagram, rule: Rule, m: &[V]) -> Result<RewriteEvent, RewriteError> {
    match rule {
        Rule::LComp => rewrite::apply_lcomp(d, m[0]),
        Rule::Pivot => rewrite::apply_pivot(d, m[0], m[1]),
        Rule::PivotGadget => rewrite::apply_pivot_gadget(d, m[0], m[1]),
        Rule::PivotBoundary => rewrite::apply_pivot_boundary(d, m[0], m[1]),
        Rule::IdFuse => rewrite::apply_id_fuse(d, m[0]),
        Rule::GadgetFuse => rewrite::apply_gadget_fuse(d, m[0], m[1]),
    }
}

/// Outcome of one checked rewrite inside a random walk.
pub struct Step {
    pub rule: Rule,
    pub sound: bool,
    pub graph_like: bool,
    pub non_clifford_before: usize,
    pub non_clifford_after: usize,
}

/// Applies randomly chosen matches, favouring the rules seen least so far,
/// until nothing matches. Each step is checked against the tensor oracle.
pub fn random_walk(d: &mut ZxDiagram, rng: &mut impl Rng, seen: &[usize; 6]) -> Vec<Step> {
    let mut steps = Vec::new();
    let mut before = tensor(d);
    let mut local = *seen;
    loop {
        let mut avail: Vec<(usize, Vec<Vec<V>>)> = Rule::ALL
            .iter()
            .enumerate()
            .map(|(i, &r)| (i, matches(d, r)))
            .filter(|(_, m)| !m.is_empty())
            .collect();
        if avail.is_empty() {
            return steps;
        }
        avail.sort_by_key(|(i, _)| local[*i]);
        let (i, ms) = &avail[0];
        let rule = Rule::ALL[*i];
        let m = ms.choose(rng).unwrap();
        let nc_before = d.non_clifford_count();
        apply(d, rule, m).expect("matcher output applies");
        let after = tensor(d);
        steps.push(Step {
            rule,
            sound: same(&before, &after),
            graph_like: d.is_graph_like(),
            non_clifford_before: nc_before,
            non_clifford_after: d.non_clifford_count(),
        });
        local[*i] += 1;
        before = after;
    }
}
