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

//! Equality checking by simplifying `c1 · c2†` to the identity.

use std::collections::BTreeSet;

use super::SemanticsError;
use crate::circuit::Circuit;
use crate::graph::{EdgeKind, ZxDiagram, V};
use crate::simplify::zx_simplify;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Validation {
    /// The two circuits implement the same unitary up to a global phase.
    Validated,
    /// Simplification did not reach the identity. The circuits may still be
    /// equal.
    Unknown,
}

/// Composes `c1` with the adjoint of `c2`, simplifies, and reports whether
/// the result is the identity diagram. Never claims inequality.
///
/// ```
/// use zxopt::circuit::{Circuit, Gate};
/// use zxopt::semantics::{validate_equal, Validation};
///
/// let a = Circuit::from_gates(1, [Gate::t(0), Gate::t(0)]).unwrap();
/// let b = Circuit::from_gates(1, [Gate::s(0)]).unwrap();
/// assert_eq!(validate_equal(&a, &b).unwrap(), Validation::Validated);
/// ```
pub fn validate_equal(c1: &Circuit, c2: &Circuit) -> Result<Validation, SemanticsError> {
    if c1.width() != c2.width() {
        return Err(SemanticsError::WidthMismatch(c1.width(), c2.width()));
    }
    let joined = c1
        .then(&c2.adjoint())
        .expect("widths checked")
        .decompose_to_basic();
    let mut d = ZxDiagram::from_circuit(&joined).expect("basic after decomposition");
    let mut fused_vars = false;
    d.to_graph_like_with(&mut |_| fused_vars = true);
    zx_simplify(&mut d, &mut |_| fused_vars = true);
    if !fused_vars && is_identity(&d) {
        Ok(Validation::Validated)
    } else {
        Ok(Validation::Unknown)
    }
}

/// Each input reaches the output with the same index through phase-free
/// degree-two spiders, crossing an even number of Hadamard edges, and
/// nothing else is in the diagram.
pub fn is_identity(d: &ZxDiagram) -> bool {
    if d.inputs().len() != d.outputs().len() {
        return false;
    }
    let mut visited = BTreeSet::new();
    for (&i, &o) in d.inputs().iter().zip(d.outputs()) {
        let mut prev = i;
        let mut cur = i;
        let mut parity = false;
        visited.insert(i);
        loop {
            let next: Vec<(V, EdgeKind)> = d.incident(cur).filter(|&(w, _)| w != prev).collect();
            if cur != i && d.is_boundary(cur) {
                if cur != o || parity {
                    return false;
                }
                break;
            }
            if next.len() != 1 || (cur != i && (!d.phase(cur).is_zero() || d.degree(cur) != 2)) {
                return false;
            }
            let (w, k) = next[0];
            parity ^= k == EdgeKind::Hadamard;
            if !visited.insert(w) {
                return false;
            }
            prev = cur;
            cur = w;
        }
    }
    visited.len() == d.num_vertices()
}
