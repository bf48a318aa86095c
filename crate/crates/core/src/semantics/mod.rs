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

//! Dense tensor semantics for circuits and diagrams, and comparison up to a
//! global scalar.
//!
//! Tensors have one axis of dimension 2 per boundary, inputs first and then
//! outputs, with axis 0 the most significant bit of the flat index. For a
//! circuit `U` on `n` qubits the entry at `(i, o)` is `<o|U|i>`, and qubit 0
//! is the most significant bit of both `i` and `o`.

mod contract;
mod simulate;
mod validate;

pub use contract::{tensor_of_diagram, tensor_of_diagram_with_limit, DEFAULT_AXIS_LIMIT};
pub use simulate::{tensor_of_circuit, DEFAULT_WIDTH_LIMIT};
pub use validate::{validate_equal, Validation};

use num_complex::Complex64;
use thiserror::Error;

use crate::phase::PhaseError;

/// Default relative tolerance for [`proportional`].
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum SemanticsError {
    #[error("{axes} boundary wires exceed the limit of {limit}")]
    TooManyAxes { axes: usize, limit: usize },
    #[error("circuit width {width} exceeds the limit of {limit}")]
    TooWide { width: usize, limit: usize },
    #[error("tensor shapes differ: {0} vs {1} axes")]
    ShapeMismatch(usize, usize),
    #[error("contraction needs an intermediate tensor with {0} axes")]
    TooLarge(usize),
    #[error(transparent)]
    Phase(#[from] PhaseError),
    #[error("circuit widths differ: {0} vs {1}")]
    WidthMismatch(usize, usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TensorValue {
    axes: usize,
    data: Vec<Complex64>,
}

impl TensorValue {
    pub fn new(axes: usize, data: Vec<Complex64>) -> TensorValue {
        assert_eq!(data.len(), 1 << axes, "tensor data length");
        TensorValue { axes, data }
    }

    /// The identity on `n` qubits, as a tensor with `2n` axes.
    pub fn identity(n: usize) -> TensorValue {
        let dim = 1usize << n;
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        TensorValue { axes: 2 * n, data }
    }

    pub fn axes(&self) -> usize {
        self.axes
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Entry at a bit string, axis 0 first.
    pub fn get(&self, bits: &[u8]) -> Complex64 {
        assert_eq!(bits.len(), self.axes);
        let idx = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        self.data[idx]
    }

    fn max_abs(&self) -> (usize, f64) {
        self.data
            .iter()
            .enumerate()
            .map(|(i, z)| (i, z.norm()))
            .fold((0, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best })
    }
}

/// True iff `a = λ·b` for some nonzero `λ`, up to `tol·‖a‖∞` in every
/// entry. `λ` is fixed by the largest entry of `a`. Two zero tensors are
/// proportional; a zero and a nonzero tensor are not.
///
/// ```
/// use num_complex::Complex64;
/// use zxopt::semantics::{proportional, TensorValue, DEFAULT_TOL};
///
/// let a = TensorValue::identity(1);
/// let data = a.data().iter().map(|z| z * Complex64::new(0.0, 2.0)).collect();
/// let b = TensorValue::new(2, data);
/// assert!(proportional(&a, &b, DEFAULT_TOL).unwrap());
/// ```
pub fn proportional(a: &TensorValue, b: &TensorValue, tol: f64) -> Result<bool, SemanticsError> {
    if a.axes != b.axes {
        return Err(SemanticsError::ShapeMismatch(a.axes, b.axes));
    }
    let (k, norm_a) = a.max_abs();
    let (_, norm_b) = b.max_abs();
    if norm_a == 0.0 || norm_b == 0.0 {
        return Ok(norm_a == 0.0 && norm_b == 0.0);
    }
    if b.data[k].norm() <= tol * norm_b {
        return Ok(false);
    }
    let lambda = a.data[k] / b.data[k];
    let bound = tol * norm_a;
    Ok(a
        .data
        .iter()
        .zip(&b.data)
        .all(|(x, y)| (x - lambda * y).norm() <= bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn scalar_multiples() {
        let a = TensorValue::new(1, vec![c(1.0, 0.0), c(0.0, 1.0)]);
        let b = TensorValue::new(1, vec![c(0.0, 2.0), c(-2.0, 0.0)]);
        assert!(proportional(&a, &b, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn perturbation_detected() {
        let a = TensorValue::identity(1);
        let mut d = a.data().to_vec();
        d[1] += c(1e-6, 0.0);
        assert!(!proportional(&a, &TensorValue::new(2, d), DEFAULT_TOL).unwrap());
    }

    #[test]
    fn zero_cases() {
        let z = TensorValue::new(1, vec![c(0.0, 0.0); 2]);
        let one = TensorValue::new(1, vec![c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(proportional(&z, &z, DEFAULT_TOL).unwrap());
        assert!(!proportional(&z, &one, DEFAULT_TOL).unwrap());
        assert!(!proportional(&one, &z, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn shape_checked() {
        let e = proportional(&TensorValue::identity(1), &TensorValue::identity(2), DEFAULT_TOL);
        assert_eq!(e, Err(SemanticsError::ShapeMismatch(2, 4)));
    }
}
