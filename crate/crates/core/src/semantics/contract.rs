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

//! Diagram contraction by variable elimination.
//!
//! A Z spider with phase `α` is the tensor that is 1 on all-zero legs,
//! `e^{iα}` on all-one legs and 0 elsewhere, so each spider is one binary
//! variable with weight `e^{iαx}`. An X spider is a Z spider with a Hadamard
//! on every leg. Plain wires identify variables; Hadamard wires contribute a
//! 2×2 factor. Boundary variables stay open.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use super::{SemanticsError, TensorValue};
use crate::graph::{EdgeKind, VertexKind, ZxDiagram, V};
use crate::phase::PhaseTable;

pub const DEFAULT_AXIS_LIMIT: usize = 12;

/// Largest intermediate factor, in variables, the contraction will build.
const MAX_SCOPE: usize = 24;

/// Tensor of `d` with at most [`DEFAULT_AXIS_LIMIT`] boundary wires.
/// Variables in phases are looked up in `table`.
///
/// ```
/// use zxopt::circuit::{Circuit, Gate};
/// use zxopt::graph::ZxDiagram;
/// use zxopt::semantics::{proportional, tensor_of_circuit, tensor_of_diagram, DEFAULT_TOL};
///
/// let c = Circuit::from_gates(2, [Gate::H(0), Gate::cnot(0, 1), Gate::t(1)]).unwrap();
/// let d = ZxDiagram::from_circuit(&c).unwrap();
/// let a = tensor_of_circuit(&c, None).unwrap();
/// let b = tensor_of_diagram(&d, None).unwrap();
/// assert!(proportional(&a, &b, DEFAULT_TOL).unwrap());
/// ```
pub fn tensor_of_diagram(d: &ZxDiagram, table: Option<&PhaseTable>) -> Result<TensorValue, SemanticsError> {
    tensor_of_diagram_with_limit(d, table, DEFAULT_AXIS_LIMIT)
}

pub fn tensor_of_diagram_with_limit(
    d: &ZxDiagram,
    table: Option<&PhaseTable>,
    limit: usize,
) -> Result<TensorValue, SemanticsError> {
    let open: Vec<V> = d.inputs().iter().chain(d.outputs()).copied().collect();
    if open.len() > limit {
        return Err(SemanticsError::TooManyAxes {
            axes: open.len(),
            limit,
        });
    }
    let empty = PhaseTable::new();
    let table = table.unwrap_or(&empty);

    let ids: Vec<V> = d.vertices().collect();
    let index: BTreeMap<V, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(ids.len());
    let mut hadamards = Vec::new();
    for (u, v, k) in d.edges() {
        let mut h = k == EdgeKind::Hadamard;
        h ^= d.kind(u) == VertexKind::X;
        h ^= d.kind(v) == VertexKind::X;
        if h {
            hadamards.push((index[&u], index[&v]));
        } else {
            uf.union(index[&u], index[&v]);
        }
    }

    let mut angles: BTreeMap<usize, f64> = BTreeMap::new();
    for &v in &ids {
        if d.kind(v) != VertexKind::Boundary {
            let a = d.phase(v).evaluate(table)?;
            if !a.is_zero() {
                *angles.entry(uf.find(index[&v])).or_insert(0.0) += a.to_radians();
            }
        }
    }

    let one = Complex64::new(1.0, 0.0);
    let mut factors = Vec::new();
    for (c, theta) in angles {
        factors.push(Factor {
            vars: vec![c],
            data: vec![one, Complex64::from_polar(1.0, theta)],
        });
    }
    for (a, b) in hadamards {
        let (a, b) = (uf.find(a), uf.find(b));
        if a == b {
            factors.push(Factor {
                vars: vec![a],
                data: vec![one, -one],
            });
        } else {
            factors.push(Factor {
                vars: vec![a.min(b), a.max(b)],
                data: vec![one, one, one, -one],
            });
        }
    }

    let open_classes: Vec<usize> = open.iter().map(|v| uf.find(index[v])).collect();
    let open_set: BTreeSet<usize> = open_classes.iter().copied().collect();
    let result = eliminate(factors, &open_set)?;

    let axes = open.len();
    let mut data = vec![Complex64::new(0.0, 0.0); 1 << axes];
    'entries: for (idx, slot) in data.iter_mut().enumerate() {
        let mut assign: BTreeMap<usize, u8> = BTreeMap::new();
        for (ax, &c) in open_classes.iter().enumerate() {
            let bit = ((idx >> (axes - 1 - ax)) & 1) as u8;
            if *assign.entry(c).or_insert(bit) != bit {
                continue 'entries;
            }
        }
        let fi = result
            .vars
            .iter()
            .fold(0usize, |acc, c| (acc << 1) | assign[c] as usize);
        *slot = result.data[fi];
    }
    Ok(TensorValue::new(axes, data))
}

struct Factor {
    vars: Vec<usize>,
    data: Vec<Complex64>,
}

/// Multiplies `fs` and sums out `sum_var` if given. `scope` lists the
/// variables of the result.
fn combine(fs: &[Factor], scope: &[usize], sum_var: Option<usize>) -> Factor {
    let mut full: Vec<usize> = scope.to_vec();
    if let Some(x) = sum_var {
        full.push(x);
    }
    let n = full.len();
    let pos: Vec<Vec<usize>> = fs
        .iter()
        .map(|f| f.vars.iter().map(|v| full.iter().position(|w| w == v).unwrap()).collect())
        .collect();
    let mut out = vec![Complex64::new(0.0, 0.0); 1 << scope.len()];
    for a in 0..(1usize << n) {
        let mut prod = Complex64::new(1.0, 0.0);
        for (f, p) in fs.iter().zip(&pos) {
            let mut i = 0;
            for &q in p {
                i = (i << 1) | ((a >> (n - 1 - q)) & 1);
            }
            prod *= f.data[i];
            if prod == Complex64::new(0.0, 0.0) {
                break;
            }
        }
        let target = if sum_var.is_some() { a >> 1 } else { a };
        out[target] += prod;
    }
    Factor {
        vars: scope.to_vec(),
        data: out,
    }
}

fn eliminate(factors: Vec<Factor>, open: &BTreeSet<usize>) -> Result<Factor, SemanticsError> {
    let mut pool: Vec<Option<Factor>> = factors.into_iter().map(Some).collect();
    let mut touching: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (i, f) in pool.iter().enumerate() {
        for &v in &f.as_ref().unwrap().vars {
            touching.entry(v).or_default().insert(i);
        }
    }
    loop {
        let mut best: Option<(usize, usize, Vec<usize>)> = None;
        for (&x, fs) in &touching {
            if open.contains(&x) {
                continue;
            }
            let mut scope = BTreeSet::new();
            for &i in fs {
                scope.extend(pool[i].as_ref().unwrap().vars.iter().copied());
            }
            scope.remove(&x);
            if best.as_ref().map_or(true, |b| scope.len() < b.1) {
                best = Some((x, scope.len(), scope.into_iter().collect()));
            }
        }
        let Some((x, size, scope)) = best else { break };
        if size > MAX_SCOPE {
            return Err(SemanticsError::TooLarge(size));
        }
        let ids = touching.remove(&x).unwrap();
        let fs: Vec<Factor> = ids.iter().map(|&i| pool[i].take().unwrap()).collect();
        for f in &fs {
            for v in &f.vars {
                if let Some(set) = touching.get_mut(v) {
                    for i in &ids {
                        set.remove(i);
                    }
                }
            }
        }
        let new = combine(&fs, &scope, Some(x));
        let id = pool.len();
        for &v in &new.vars {
            touching.entry(v).or_default().insert(id);
        }
        pool.push(Some(new));
    }
    let rest: Vec<Factor> = pool.into_iter().flatten().collect();
    let scope: Vec<usize> = rest
        .iter()
        .flat_map(|f| f.vars.iter().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if scope.len() > MAX_SCOPE {
        return Err(SemanticsError::TooLarge(scope.len()));
    }
    Ok(combine(&rest, &scope, None))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::{Angle, Phase};
    use crate::semantics::{proportional, DEFAULT_TOL};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn spider(kind: VertexKind, a: Angle, legs: usize) -> ZxDiagram {
        let mut d = ZxDiagram::new();
        let v = d.add_vertex(kind, Phase::constant(a));
        let bs: Vec<V> = (0..legs).map(|_| d.add_vertex(VertexKind::Boundary, Phase::ZERO)).collect();
        for &b in &bs {
            d.add_edge(v, b, EdgeKind::Simple);
        }
        d.set_inputs(bs);
        d
    }

    #[test]
    fn z_phase_is_diagonal() {
        let t = tensor_of_diagram(&spider(VertexKind::Z, Angle::new(1, 3), 2), None).unwrap();
        let e = Complex64::from_polar(1.0, std::f64::consts::PI / 3.0);
        let expected = TensorValue::new(2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), e]);
        assert!(proportional(&t, &expected, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn phase_free_state_is_plus() {
        let t = tensor_of_diagram(&spider(VertexKind::Z, Angle::ZERO, 1), None).unwrap();
        assert!(proportional(&t, &TensorValue::new(1, vec![c(1.0, 0.0), c(1.0, 0.0)]), DEFAULT_TOL).unwrap());
    }

    #[test]
    fn x_pi_state_is_one() {
        let t = tensor_of_diagram(&spider(VertexKind::X, Angle::PI, 1), None).unwrap();
        assert!(proportional(&t, &TensorValue::new(1, vec![c(0.0, 0.0), c(1.0, 0.0)]), DEFAULT_TOL).unwrap());
    }

    #[test]
    fn gadget_is_parity_phase() {
        // Hub with three targets, each target a phase-free spider on a wire.
        let mut d = ZxDiagram::new();
        let alpha = Angle::new(1, 4);
        let mut ins = Vec::new();
        let mut outs = Vec::new();
        let hub = d.add_vertex(VertexKind::Z, Phase::ZERO);
        let leaf = d.add_vertex(VertexKind::Z, Phase::constant(alpha));
        d.add_edge(hub, leaf, EdgeKind::Hadamard);
        for _ in 0..3 {
            let i = d.add_vertex(VertexKind::Boundary, Phase::ZERO);
            let o = d.add_vertex(VertexKind::Boundary, Phase::ZERO);
            let z = d.add_vertex(VertexKind::Z, Phase::ZERO);
            d.add_edge(i, z, EdgeKind::Simple);
            d.add_edge(z, o, EdgeKind::Simple);
            d.add_edge(z, hub, EdgeKind::Hadamard);
            ins.push(i);
            outs.push(o);
        }
        d.set_inputs(ins);
        d.set_outputs(outs);
        let t = tensor_of_diagram(&d, None).unwrap();
        let mut data = vec![c(0.0, 0.0); 64];
        for x in 0..8usize {
            let parity = x.count_ones() % 2;
            data[x * 8 + x] = Complex64::from_polar(1.0, alpha.to_radians() * parity as f64);
        }
        assert!(proportional(&t, &TensorValue::new(6, data), DEFAULT_TOL).unwrap());
    }

    #[test]
    fn limit_enforced() {
        let d = ZxDiagram::identity(7);
        assert_eq!(
            tensor_of_diagram(&d, None),
            Err(SemanticsError::TooManyAxes { axes: 14, limit: 12 })
        );
    }

    #[test]
    fn unassigned_variable() {
        let mut d = spider(VertexKind::Z, Angle::ZERO, 1);
        let v = d.vertices().next().unwrap();
        d.set_phase(v, Phase::var(crate::phase::VarId(4)));
        assert!(matches!(tensor_of_diagram(&d, None), Err(SemanticsError::Phase(_))));
    }
}
