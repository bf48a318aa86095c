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

//! Local gate cancellation by forward and backward passes.

use super::{Circuit, Gate, Qubit};

/// Moves single-qubit gates forward through the two-qubit gates they commute
/// with, fusing adjacent phases and cancelling `H·H`. The pass is repeated on
/// the adjoint until the gate count stops decreasing.
///
/// ```
/// use zxopt::circuit::{basic_cancel, Circuit, Gate};
/// use zxopt::phase::Angle;
///
/// let c = Circuit::from_gates(1, [Gate::t(0), Gate::t(0)]).unwrap();
/// assert_eq!(basic_cancel(&c).gates(), &[Gate::z(0, Angle::HALF_PI)]);
/// ```
pub fn basic_cancel(c: &Circuit) -> Circuit {
    let mut cur = c.clone();
    loop {
        let before = cur.len();
        cur = forward(&forward(&cur).adjoint()).adjoint();
        if cur.len() >= before {
            return cur;
        }
    }
}

fn commutes(g: &Gate, q: Qubit, two: &Gate) -> bool {
    let z = matches!(g, Gate::ZPhase(..));
    let x = matches!(g, Gate::XPhase(..));
    match *two {
        Gate::Cnot { control, .. } => (z && q == control) || (x && q != control),
        Gate::Cz(..) => z,
        _ => false,
    }
}

/// Adds `g` to the end of a wire's pending list, combining it with the last
/// pending gate where possible.
fn push_pending(list: &mut Vec<Gate>, g: Gate) {
    match (list.last().copied(), g) {
        (Some(Gate::H(_)), Gate::H(_)) => {
            list.pop();
        }
        (Some(Gate::ZPhase(_, a)), Gate::ZPhase(_, b)) | (Some(Gate::XPhase(_, a)), Gate::XPhase(_, b)) => {
            match a.checked_add(b) {
                Ok(sum) => {
                    list.pop();
                    if !sum.is_zero() {
                        list.push(g.with_phase(sum));
                    }
                }
                Err(_) => list.push(g),
            }
        }
        _ => {
            if !g.phase().is_some_and(|p| p.is_zero()) {
                list.push(g);
            }
        }
    }
}

fn forward(c: &Circuit) -> Circuit {
    let mut pending: Vec<Vec<Gate>> = vec![Vec::new(); c.width()];
    let mut out = Vec::with_capacity(c.len());
    for g in c.gates() {
        let qs = g.qubits();
        if qs.len() == 1 {
            push_pending(&mut pending[qs[0]], *g);
            continue;
        }
        for &q in &qs {
            let list = &mut pending[q];
            let keep = list.iter().rev().take_while(|p| commutes(p, q, g)).count();
            let split = list.len() - keep;
            out.extend(list.drain(..split));
        }
        out.push(*g);
    }
    for list in pending {
        out.extend(list);
    }
    c.with_gates(out)
}
