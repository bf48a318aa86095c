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

//! Circuit intermediate representation.
//!
//! A [`Circuit`] is an ordered list of [`Gate`]s over a fixed number of
//! named qubits. The "basic" gate set that the ZX pipeline consumes is
//! CNOT, CZ, H, Z-phase and X-phase; Toffoli, CCZ and SWAP are accepted on
//! input and expanded by [`Circuit::decompose_to_basic`].

mod cancel;
pub mod qasm;
pub mod qc;

pub use cancel::basic_cancel;

use std::fmt;

use thiserror::Error;

use crate::phase::{Angle, Phase};

pub type Qubit = usize;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GateKind {
    Cnot,
    Cz,
    H,
    ZPhase,
    XPhase,
    Tof,
    Ccz,
    Swap,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gate {
    Cnot { control: Qubit, target: Qubit },
    Cz(Qubit, Qubit),
    H(Qubit),
    ZPhase(Qubit, Phase),
    XPhase(Qubit, Phase),
    Tof { c1: Qubit, c2: Qubit, target: Qubit },
    Ccz(Qubit, Qubit, Qubit),
    Swap(Qubit, Qubit),
}

impl Gate {
    pub fn cnot(control: Qubit, target: Qubit) -> Gate {
        Gate::Cnot { control, target }
    }

    pub fn tof(c1: Qubit, c2: Qubit, target: Qubit) -> Gate {
        Gate::Tof { c1, c2, target }
    }

    pub fn z(q: Qubit, a: Angle) -> Gate {
        Gate::ZPhase(q, Phase::constant(a))
    }

    pub fn x(q: Qubit, a: Angle) -> Gate {
        Gate::XPhase(q, Phase::constant(a))
    }

    pub fn t(q: Qubit) -> Gate {
        Gate::z(q, Angle::QUARTER_PI)
    }

    pub fn tdg(q: Qubit) -> Gate {
        Gate::z(q, Angle::new(7, 4))
    }

    pub fn s(q: Qubit) -> Gate {
        Gate::z(q, Angle::HALF_PI)
    }

    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Cnot { .. } => GateKind::Cnot,
            Gate::Cz(..) => GateKind::Cz,
            Gate::H(_) => GateKind::H,
            Gate::ZPhase(..) => GateKind::ZPhase,
            Gate::XPhase(..) => GateKind::XPhase,
            Gate::Tof { .. } => GateKind::Tof,
            Gate::Ccz(..) => GateKind::Ccz,
            Gate::Swap(..) => GateKind::Swap,
        }
    }

    /// Qubits in argument order (controls first).
    pub fn qubits(&self) -> Vec<Qubit> {
        match *self {
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Cz(a, b) | Gate::Swap(a, b) => vec![a, b],
            Gate::H(q) | Gate::ZPhase(q, _) | Gate::XPhase(q, _) => vec![q],
            Gate::Tof { c1, c2, target } => vec![c1, c2, target],
            Gate::Ccz(a, b, c) => vec![a, b, c],
        }
    }

    pub fn phase(&self) -> Option<Phase> {
        match *self {
            Gate::ZPhase(_, p) | Gate::XPhase(_, p) => Some(p),
            _ => None,
        }
    }

    pub(crate) fn with_phase(&self, p: Phase) -> Gate {
        match *self {
            Gate::ZPhase(q, _) => Gate::ZPhase(q, p),
            Gate::XPhase(q, _) => Gate::XPhase(q, p),
            g => g,
        }
    }

    pub fn is_basic(&self) -> bool {
        !matches!(self, Gate::Tof { .. } | Gate::Ccz(..) | Gate::Swap(..))
    }

    pub fn is_phase_gate(&self) -> bool {
        matches!(self, Gate::ZPhase(..) | Gate::XPhase(..))
    }

    /// Phase gate whose angle is not a multiple of π/2 (symbolic phases count).
    pub fn is_non_clifford(&self) -> bool {
        self.phase().is_some_and(|p| p.is_non_clifford())
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::Cnot { .. } | Gate::Cz(..) | Gate::Swap(..))
    }

    pub fn adjoint(&self) -> Gate {
        match *self {
            Gate::ZPhase(q, p) => Gate::ZPhase(q, -p),
            Gate::XPhase(q, p) => Gate::XPhase(q, -p),
            g => g,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Cnot { control, target } => write!(f, "CNOT q{} q{}", control, target),
            Gate::Cz(a, b) => write!(f, "CZ q{} q{}", a, b),
            Gate::H(q) => write!(f, "H q{}", q),
            Gate::ZPhase(q, p) => write!(f, "Z({}) q{}", p, q),
            Gate::XPhase(q, p) => write!(f, "X({}) q{}", p, q),
            Gate::Tof { c1, c2, target } => write!(f, "Tof q{} q{} q{}", c1, c2, target),
            Gate::Ccz(a, b, c) => write!(f, "CCZ q{} q{} q{}", a, b, c),
            Gate::Swap(a, b) => write!(f, "SWAP q{} q{}", a, b),
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("gate {gate} uses qubit {qubit} but the circuit has width {width}")]
    QubitOutOfRange {
        gate: String,
        qubit: Qubit,
        width: usize,
    },
    #[error("gate {0} repeats a qubit")]
    RepeatedQubit(String),
    #[error("circuit widths differ: {0} vs {1}")]
    WidthMismatch(usize, usize),
    #[error("gate {0} is not in the basic gate set")]
    NotBasic(String),
}

/// Errors from the `.qc` and QASM readers. Line numbers are 1-based.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: undeclared qubit `{name}`")]
    UndeclaredQubit { line: usize, name: String },
    #[error("line {line}: gate `{gate}` takes {expected} qubit(s), got {found}")]
    Arity {
        line: usize,
        gate: String,
        expected: String,
        found: usize,
    },
    #[error("line {line}: unsupported gate `{name}`")]
    UnsupportedGate { line: usize, name: String },
    #[error("line {line}: angle `{text}` is not a rational multiple of pi")]
    NonRationalAngle { line: usize, text: String },
    #[error("line {line}: only a single quantum register is supported")]
    MultipleRegisters { line: usize },
    #[error("line {line}: {source}")]
    Circuit {
        line: usize,
        #[source]
        source: CircuitError,
    },
}

/// Counts reported by the `stats` command and the optimiser summary.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GateStats {
    pub qubits: usize,
    pub gates: usize,
    pub t_count: usize,
    pub two_qubit: usize,
    pub hadamard: usize,
    pub clifford_phase: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    names: Vec<String>,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Empty circuit on `width` qubits named `q0, q1, ...`.
    pub fn new(width: usize) -> Circuit {
        Circuit {
            names: (0..width).map(|i| format!("q{}", i)).collect(),
            gates: Vec::new(),
        }
    }

    pub fn with_names(names: Vec<String>) -> Circuit {
        Circuit {
            names,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(width: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Circuit, CircuitError> {
        let mut c = Circuit::new(width);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn width(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, g: Gate) -> Result<(), CircuitError> {
        let qs = g.qubits();
        for (i, &q) in qs.iter().enumerate() {
            if q >= self.width() {
                return Err(CircuitError::QubitOutOfRange {
                    gate: g.to_string(),
                    qubit: q,
                    width: self.width(),
                });
            }
            if qs[..i].contains(&q) {
                return Err(CircuitError::RepeatedQubit(g.to_string()));
            }
        }
        self.gates.push(g);
        Ok(())
    }

    /// Same qubits, different gate list. Gates are assumed valid.
    pub(crate) fn with_gates(&self, gates: Vec<Gate>) -> Circuit {
        Circuit {
            names: self.names.clone(),
            gates,
        }
    }

    pub fn t_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_non_clifford()).count()
    }

    pub fn two_qubit_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_two_qubit()).count()
    }

    pub fn stats(&self) -> GateStats {
        GateStats {
            qubits: self.width(),
            gates: self.gates.len(),
            t_count: self.t_count(),
            two_qubit: self.two_qubit_count(),
            hadamard: self.gates.iter().filter(|g| matches!(g, Gate::H(_))).count(),
            clifford_phase: self
                .gates
                .iter()
                .filter(|g| g.is_phase_gate() && !g.is_non_clifford())
                .count(),
        }
    }

    pub fn is_basic(&self) -> bool {
        self.gates.iter().all(Gate::is_basic)
    }

    /// Reversed gate list with every phase negated.
    pub fn adjoint(&self) -> Circuit {
        self.with_gates(self.gates.iter().rev().map(Gate::adjoint).collect())
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Circuit) -> Result<Circuit, CircuitError> {
        if self.width() != other.width() {
            return Err(CircuitError::WidthMismatch(self.width(), other.width()));
        }
        let mut gates = self.gates.clone();
        gates.extend_from_slice(&other.gates);
        Ok(self.with_gates(gates))
    }

    /// The gates other than Z/X phase gates, in order.
    pub fn skeleton(&self) -> Vec<Gate> {
        self.gates.iter().filter(|g| !g.is_phase_gate()).copied().collect()
    }

    /// Expands Toffoli and CCZ into the 7-T, 6-CNOT circuit and SWAP into
    /// three CNOTs. Basic gates are copied unchanged.
    pub fn decompose_to_basic(&self) -> Circuit {
        let mut out = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            match *g {
                Gate::Tof { c1, c2, target } => {
                    out.push(Gate::H(target));
                    push_ccz(&mut out, c1, c2, target);
                    out.push(Gate::H(target));
                }
                Gate::Ccz(a, b, c) => push_ccz(&mut out, a, b, c),
                Gate::Swap(a, b) => {
                    out.push(Gate::cnot(a, b));
                    out.push(Gate::cnot(b, a));
                    out.push(Gate::cnot(a, b));
                }
                g => out.push(g),
            }
        }
        self.with_gates(out)
    }
}

fn push_ccz(out: &mut Vec<Gate>, c1: Qubit, c2: Qubit, t: Qubit) {
    out.extend_from_slice(&[
        Gate::cnot(c2, t),
        Gate::tdg(t),
        Gate::cnot(c1, t),
        Gate::t(t),
        Gate::cnot(c2, t),
        Gate::tdg(t),
        Gate::cnot(c1, t),
        Gate::t(c2),
        Gate::t(t),
        Gate::cnot(c1, c2),
        Gate::t(c1),
        Gate::tdg(c2),
        Gate::cnot(c1, c2),
    ]);
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "circuit on {} qubits:", self.width())?;
        for g in &self.gates {
            writeln!(f, "  {}", g)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_validates_qubits() {
        let mut c = Circuit::new(2);
        assert!(c.push(Gate::cnot(0, 1)).is_ok());
        assert!(matches!(
            c.push(Gate::H(2)),
            Err(CircuitError::QubitOutOfRange { qubit: 2, .. })
        ));
        assert!(matches!(
            c.push(Gate::cnot(1, 1)),
            Err(CircuitError::RepeatedQubit(_))
        ));
    }

    #[test]
    fn adjoint_reverses_and_negates() {
        let c = Circuit::from_gates(1, [Gate::H(0), Gate::t(0)]).unwrap();
        let a = c.adjoint();
        assert_eq!(a.gates(), &[Gate::z(0, Angle::new(-1, 4)), Gate::H(0)]);
        let c = Circuit::from_gates(2, [Gate::cnot(0, 1)]).unwrap();
        assert_eq!(c.adjoint(), c);
    }

    #[test]
    fn toffoli_expands_to_seven_t() {
        let c = Circuit::from_gates(3, [Gate::tof(0, 1, 2)]).unwrap();
        let d = c.decompose_to_basic();
        assert!(d.is_basic());
        assert_eq!(d.t_count(), 7);
        assert_eq!(d.two_qubit_count(), 6);
        let c = Circuit::from_gates(3, [Gate::Ccz(0, 1, 2)]).unwrap();
        let d = c.decompose_to_basic();
        assert_eq!((d.t_count(), d.two_qubit_count(), d.len()), (7, 6, 13));
    }

    #[test]
    fn basic_gates_pass_through() {
        let c = Circuit::from_gates(1, [Gate::H(0)]).unwrap();
        assert_eq!(c.decompose_to_basic(), c);
        let c = Circuit::from_gates(2, [Gate::Swap(0, 1)]).unwrap();
        assert_eq!(c.decompose_to_basic().len(), 3);
    }

    #[test]
    fn t_count_ignores_clifford_phases() {
        let c = Circuit::from_gates(
            1,
            [
                Gate::t(0),
                Gate::s(0),
                Gate::z(0, Angle::PI),
                Gate::x(0, Angle::new(3, 4)),
                Gate::z(0, Angle::new(1, 8)),
            ],
        )
        .unwrap();
        assert_eq!(c.t_count(), 3);
        assert_eq!(c.stats().clifford_phase, 2);
    }
}
