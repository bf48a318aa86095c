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

//! Phase teleportation: simplify a symbolic copy of the circuit and use the
//! recorded fusions to move phases between the original gate positions.

use thiserror::Error;

use crate::circuit::{Circuit, Gate};
use crate::graph::ZxDiagram;
use crate::phase::{Angle, Fusion, Phase, PhaseTable, VarId};
use crate::simplify::{zx_simplify, SimplifyReport};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TeleportError {
    #[error("variable {0} is not in the phase table")]
    UnknownVariable(VarId),
    #[error("fusion of variable {0} with itself")]
    SelfFusion(VarId),
}

/// Replaces each non-Clifford phase gate's angle by a fresh variable,
/// numbered from 1 in gate order, and records the original angles.
///
/// ```
/// use zxopt::circuit::{Circuit, Gate};
/// use zxopt::phase::{Angle, VarId};
/// use zxopt::teleport::parametrize;
///
/// let c = Circuit::from_gates(2, [Gate::t(0), Gate::s(0), Gate::t(1)]).unwrap();
/// let (_, table) = parametrize(&c);
/// assert_eq!(table.len(), 2);
/// assert_eq!(table.get(VarId(2)), Some(Angle::QUARTER_PI));
/// ```
pub fn parametrize(c: &Circuit) -> (Circuit, PhaseTable) {
    let mut table = PhaseTable::new();
    let mut next = 1;
    let gates = c
        .gates()
        .iter()
        .map(|g| match g.phase() {
            Some(p) if p.is_non_clifford() && p.var.is_none() => {
                let id = VarId(next);
                next += 1;
                table.insert(id, p.constant);
                g.with_phase(Phase::var(id))
            }
            _ => *g,
        })
        .collect();
    (c.with_gates(gates), table)
}

/// Folds the absorbed variable into the kept one: `τ(kept) ± τ(absorbed)`,
/// then `τ(absorbed) = 0`.
pub fn on_fusion(table: &mut PhaseTable, f: Fusion) -> Result<(), TeleportError> {
    if f.kept == f.absorbed {
        return Err(TeleportError::SelfFusion(f.kept));
    }
    let k = table.get(f.kept).ok_or(TeleportError::UnknownVariable(f.kept))?;
    let a = table.get(f.absorbed).ok_or(TeleportError::UnknownVariable(f.absorbed))?;
    let sum = if f.same_sign { k + a } else { k - a };
    table.set(f.kept, sum);
    table.set(f.absorbed, Angle::ZERO);
    Ok(())
}

/// Everything produced by one teleportation run.
#[derive(Clone, Debug)]
pub struct Teleported {
    /// The input after expanding Toffoli, CCZ and SWAP.
    pub basic: Circuit,
    /// `basic` with updated phases and zero-phase gates removed.
    pub circuit: Circuit,
    pub initial_table: PhaseTable,
    pub table: PhaseTable,
    pub fusions: Vec<Fusion>,
    pub report: SimplifyReport,
    /// The simplified diagram.
    pub diagram: ZxDiagram,
}

/// Runs phase teleportation and keeps the intermediate results.
pub fn teleport(c: &Circuit) -> Teleported {
    let basic = c.decompose_to_basic();
    let (symbolic, initial_table) = parametrize(&basic);
    let mut table = initial_table.clone();
    let mut fusions = Vec::new();
    let mut d = ZxDiagram::from_circuit(&symbolic).expect("basic after decomposition");
    let mut sink = |f: Fusion| {
        on_fusion(&mut table, f).expect("fusions only involve allocated variables");
        fusions.push(f);
    };
    d.to_graph_like_with(&mut sink);
    let report = zx_simplify(&mut d, &mut sink);
    let circuit = substitute(&symbolic, &table);
    Teleported {
        basic,
        circuit,
        initial_table,
        table,
        fusions,
        report,
        diagram: d,
    }
}

/// Instantiates the variables of `symbolic` and drops phase gates that end
/// up with angle 0.
fn substitute(symbolic: &Circuit, table: &PhaseTable) -> Circuit {
    let gates = symbolic
        .gates()
        .iter()
        .filter_map(|g| match g.phase() {
            Some(p) => {
                let a = p.evaluate(table).expect("every variable is in the table");
                (!a.is_zero()).then(|| g.with_phase(Phase::constant(a)))
            }
            None => Some(*g),
        })
        .collect::<Vec<Gate>>();
    symbolic.with_gates(gates)
}

/// The input with phases moved by phase teleportation. Apart from removed
/// zero-phase gates, the output has the gate sequence of
/// `c.decompose_to_basic()`.
///
/// ```
/// use zxopt::circuit::{Circuit, Gate};
/// use zxopt::teleport::teleport_optimize;
///
/// let c = Circuit::from_gates(2, [Gate::t(1), Gate::cnot(0, 1), Gate::cnot(0, 1), Gate::t(1)]).unwrap();
/// let out = teleport_optimize(&c);
/// assert_eq!(out.t_count(), 0);
/// assert_eq!(out.skeleton(), c.skeleton());
/// ```
pub fn teleport_optimize(c: &Circuit) -> Circuit {
    teleport(c).circuit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{proportional, tensor_of_circuit, DEFAULT_TOL};

    fn table(entries: &[(u32, Angle)]) -> PhaseTable {
        entries.iter().map(|&(i, a)| (VarId(i), a)).collect()
    }

    fn fusion(same_sign: bool) -> Fusion {
        Fusion {
            kept: VarId(1),
            absorbed: VarId(2),
            same_sign,
        }
    }

    #[test]
    fn same_sign_adds() {
        let mut t = table(&[(1, Angle::QUARTER_PI), (2, Angle::QUARTER_PI)]);
        on_fusion(&mut t, fusion(true)).unwrap();
        assert_eq!(t, table(&[(1, Angle::HALF_PI), (2, Angle::ZERO)]));
    }

    #[test]
    fn opposite_sign_subtracts() {
        let mut t = table(&[(1, Angle::QUARTER_PI), (2, Angle::QUARTER_PI)]);
        on_fusion(&mut t, fusion(false)).unwrap();
        assert_eq!(t, table(&[(1, Angle::ZERO), (2, Angle::ZERO)]));
    }

    #[test]
    fn zero_absorbed_is_noop() {
        let mut t = table(&[(1, Angle::new(3, 8)), (2, Angle::ZERO)]);
        on_fusion(&mut t, fusion(false)).unwrap();
        assert_eq!(t.get(VarId(1)), Some(Angle::new(3, 8)));
    }

    #[test]
    fn unknown_variable() {
        let mut t = table(&[(1, Angle::QUARTER_PI)]);
        assert_eq!(on_fusion(&mut t, fusion(true)), Err(TeleportError::UnknownVariable(VarId(2))));
    }

    #[test]
    fn clifford_circuit_has_empty_table() {
        let c = Circuit::from_gates(2, [Gate::s(0), Gate::H(1), Gate::cnot(0, 1)]).unwrap();
        assert!(parametrize(&c).1.is_empty());
    }

    #[test]
    fn toffoli_expansion_has_seven_variables() {
        let c = Circuit::from_gates(3, [Gate::tof(0, 1, 2)]).unwrap().decompose_to_basic();
        assert_eq!(parametrize(&c).1.len(), 7);
    }

    #[test]
    fn structure_and_unitary_kept() {
        let c = Circuit::from_gates(
            3,
            [
                Gate::tof(0, 1, 2),
                Gate::t(0),
                Gate::H(1),
                Gate::tof(0, 2, 1),
                Gate::tof(0, 1, 2),
            ],
        )
        .unwrap();
        let out = teleport_optimize(&c);
        let basic = c.decompose_to_basic();
        assert_eq!(out.skeleton(), basic.skeleton());
        assert!(out.t_count() <= basic.t_count());
        let a = tensor_of_circuit(&basic, None).unwrap();
        let b = tensor_of_circuit(&out, None).unwrap();
        assert!(proportional(&a, &b, DEFAULT_TOL).unwrap());
    }
}
