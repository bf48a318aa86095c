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

//! Dense state-vector simulation of circuits.

use num_complex::Complex64;

use super::{SemanticsError, TensorValue};
use crate::circuit::{Circuit, Gate};
use crate::phase::PhaseTable;

pub const DEFAULT_WIDTH_LIMIT: usize = 6;

/// Tensor of `c` with entries `<o|U|i>`, for circuits of width at most
/// [`DEFAULT_WIDTH_LIMIT`]. Any gate, basic or not, is accepted.
pub fn tensor_of_circuit(c: &Circuit, table: Option<&PhaseTable>) -> Result<TensorValue, SemanticsError> {
    let n = c.width();
    if n > DEFAULT_WIDTH_LIMIT {
        return Err(SemanticsError::TooWide {
            width: n,
            limit: DEFAULT_WIDTH_LIMIT,
        });
    }
    let empty = PhaseTable::new();
    let table = table.unwrap_or(&empty);
    let mut angles = Vec::with_capacity(c.len());
    for g in c.gates() {
        let theta = match g.phase() {
            Some(p) => p.evaluate(table)?.to_radians(),
            None => 0.0,
        };
        angles.push(theta);
    }

    let dim = 1usize << n;
    let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
    for input in 0..dim {
        let mut psi = vec![Complex64::new(0.0, 0.0); dim];
        psi[input] = Complex64::new(1.0, 0.0);
        for (g, &theta) in c.gates().iter().zip(&angles) {
            apply(&mut psi, n, g, theta);
        }
        data[input * dim..(input + 1) * dim].copy_from_slice(&psi);
    }
    Ok(TensorValue::new(2 * n, data))
}

fn bit(n: usize, q: usize) -> usize {
    1 << (n - 1 - q)
}

fn hadamard(psi: &mut [Complex64], m: usize) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..psi.len() {
        if i & m == 0 {
            let (a, b) = (psi[i], psi[i | m]);
            psi[i] = (a + b) * s;
            psi[i | m] = (a - b) * s;
        }
    }
}

fn phase_on(psi: &mut [Complex64], mask: usize, theta: f64) {
    let e = Complex64::from_polar(1.0, theta);
    for (i, z) in psi.iter_mut().enumerate() {
        if i & mask == mask {
            *z *= e;
        }
    }
}

/// Swaps amplitudes of basis states differing in `flip`, among those with
/// every bit of `cond` set.
fn flip_on(psi: &mut [Complex64], cond: usize, flip: usize) {
    for i in 0..psi.len() {
        if i & cond == cond && i & flip == 0 {
            psi.swap(i, i | flip);
        }
    }
}

fn apply(psi: &mut [Complex64], n: usize, g: &Gate, theta: f64) {
    let b = |q| bit(n, q);
    match *g {
        Gate::H(q) => hadamard(psi, b(q)),
        Gate::ZPhase(q, _) => phase_on(psi, b(q), theta),
        Gate::XPhase(q, _) => {
            hadamard(psi, b(q));
            phase_on(psi, b(q), theta);
            hadamard(psi, b(q));
        }
        Gate::Cnot { control, target } => flip_on(psi, b(control), b(target)),
        Gate::Cz(x, y) => phase_on(psi, b(x) | b(y), std::f64::consts::PI),
        Gate::Tof { c1, c2, target } => flip_on(psi, b(c1) | b(c2), b(target)),
        Gate::Ccz(x, y, z) => phase_on(psi, b(x) | b(y) | b(z), std::f64::consts::PI),
        Gate::Swap(x, y) => {
            for i in 0..psi.len() {
                if i & b(x) != 0 && i & b(y) == 0 {
                    psi.swap(i, i ^ b(x) ^ b(y));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{proportional, DEFAULT_TOL};

    fn real(v: &[f64]) -> Vec<Complex64> {
        v.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    #[test]
    fn hadamard_matrix() {
        let c = Circuit::from_gates(1, [Gate::H(0)]).unwrap();
        let t = tensor_of_circuit(&c, None).unwrap();
        assert!(proportional(&t, &TensorValue::new(2, real(&[1.0, 1.0, 1.0, -1.0])), DEFAULT_TOL).unwrap());
    }

    #[test]
    fn cnot_matrix() {
        let c = Circuit::from_gates(2, [Gate::cnot(0, 1)]).unwrap();
        let t = tensor_of_circuit(&c, None).unwrap();
        // Rows are inputs: |10> goes to |11>.
        #[rustfmt::skip]
        let m = real(&[
            1.0, 0.0, 0.0, 0.0,
            0.0, 1.0, 0.0, 0.0,
            0.0, 0.0, 0.0, 1.0,
            0.0, 0.0, 1.0, 0.0,
        ]);
        assert_eq!(t.data(), &m[..]);
    }

    #[test]
    fn toffoli_matches_decomposition() {
        let c = Circuit::from_gates(3, [Gate::tof(0, 1, 2)]).unwrap();
        let a = tensor_of_circuit(&c, None).unwrap();
        let b = tensor_of_circuit(&c.decompose_to_basic(), None).unwrap();
        assert!(proportional(&a, &b, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn swap_matches_cnots() {
        let c = Circuit::from_gates(3, [Gate::Swap(0, 2)]).unwrap();
        let a = tensor_of_circuit(&c, None).unwrap();
        let b = tensor_of_circuit(&c.decompose_to_basic(), None).unwrap();
        assert!(proportional(&a, &b, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn width_limit() {
        assert_eq!(
            tensor_of_circuit(&Circuit::new(7), None),
            Err(SemanticsError::TooWide { width: 7, limit: 6 })
        );
    }
}
