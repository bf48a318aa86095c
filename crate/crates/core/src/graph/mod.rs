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

//! ZX-diagrams with stable vertex ids and at most one edge per vertex pair.
//!
//! Parallel edges and self-loops are never stored. [`ZxDiagram::add_edge`]
//! resolves them on insertion with the usual derived rules: a pair of
//! Hadamard edges between Z spiders cancels, a simple and a Hadamard edge
//! leave a simple edge plus a `π` phase, and a Hadamard self-loop adds `π`.

mod graphlike;

use std::collections::BTreeMap;
use std::fmt::Write;

use thiserror::Error;

use crate::circuit::{Circuit, CircuitError, Gate};
use crate::phase::{Angle, Fusion, Phase};

/// Vertex id. Ids are allocated in increasing order and never reused.
pub type V = usize;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum VertexKind {
    Boundary,
    Z,
    X,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum EdgeKind {
    Simple,
    Hadamard,
}

impl EdgeKind {
    pub fn toggle(self) -> EdgeKind {
        match self {
            EdgeKind::Simple => EdgeKind::Hadamard,
            EdgeKind::Hadamard => EdgeKind::Simple,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error("cannot compose: {outputs} outputs against {inputs} inputs")]
    ArityMismatch { outputs: usize, inputs: usize },
    #[error("vertex {0} is not a Z spider")]
    NotZ(V),
    #[error("self-loop requested on vertex {0}")]
    SelfLoop(V),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct VData {
    kind: VertexKind,
    phase: Phase,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZxDiagram {
    vdata: BTreeMap<V, VData>,
    adj: BTreeMap<V, BTreeMap<V, EdgeKind>>,
    inputs: Vec<V>,
    outputs: Vec<V>,
    next_id: V,
    ops: u64,
}

impl ZxDiagram {
    pub fn new() -> ZxDiagram {
        ZxDiagram::default()
    }

    /// `n` bare wires.
    pub fn identity(n: usize) -> ZxDiagram {
        let mut d = ZxDiagram::new();
        let ins: Vec<V> = (0..n).map(|_| d.add_vertex(VertexKind::Boundary, Phase::ZERO)).collect();
        let outs: Vec<V> = (0..n).map(|_| d.add_vertex(VertexKind::Boundary, Phase::ZERO)).collect();
        for (&i, &o) in ins.iter().zip(&outs) {
            d.add_edge(i, o, EdgeKind::Simple);
        }
        d.inputs = ins;
        d.outputs = outs;
        d
    }

    /// Translates a circuit over the basic gate set. Each phase gate becomes
    /// a spider on its wire, `CNOT` a Z spider joined to an X spider, `CZ`
    /// two Z spiders joined by a Hadamard edge, and `H` a Hadamard edge on
    /// the wire.
    ///
    /// ```
    /// use zxopt::circuit::{Circuit, Gate};
    /// use zxopt::graph::ZxDiagram;
    ///
    /// let c = Circuit::from_gates(2, [Gate::cnot(0, 1)]).unwrap();
    /// let d = ZxDiagram::from_circuit(&c).unwrap();
    /// assert_eq!(d.num_vertices(), 6);
    /// assert_eq!(d.num_edges(), 5);
    /// ```
    pub fn from_circuit(c: &Circuit) -> Result<ZxDiagram, GraphError> {
        let n = c.width();
        let mut d = ZxDiagram::new();
        d.inputs = (0..n).map(|_| d.add_vertex(VertexKind::Boundary, Phase::ZERO)).collect();
        let mut last = d.inputs.clone();
        let mut pending = vec![EdgeKind::Simple; n];

        let attach = |d: &mut ZxDiagram, last: &mut [V], pending: &mut [EdgeKind], q: usize, kind, phase| {
            let v = d.add_vertex(kind, phase);
            d.add_edge(last[q], v, pending[q]);
            last[q] = v;
            pending[q] = EdgeKind::Simple;
            v
        };
        for g in c.gates() {
            match *g {
                Gate::H(q) => pending[q] = pending[q].toggle(),
                Gate::ZPhase(q, p) => {
                    attach(&mut d, &mut last, &mut pending, q, VertexKind::Z, p);
                }
                Gate::XPhase(q, p) => {
                    attach(&mut d, &mut last, &mut pending, q, VertexKind::X, p);
                }
                Gate::Cnot { control, target } => {
                    let a = attach(&mut d, &mut last, &mut pending, control, VertexKind::Z, Phase::ZERO);
                    let b = attach(&mut d, &mut last, &mut pending, target, VertexKind::X, Phase::ZERO);
                    d.add_edge(a, b, EdgeKind::Simple);
                }
                Gate::Cz(x, y) => {
                    let a = attach(&mut d, &mut last, &mut pending, x, VertexKind::Z, Phase::ZERO);
                    let b = attach(&mut d, &mut last, &mut pending, y, VertexKind::Z, Phase::ZERO);
                    d.add_edge(a, b, EdgeKind::Hadamard);
                }
                _ => return Err(CircuitError::NotBasic(g.to_string()).into()),
            }
        }
        let outs: Vec<V> = (0..n).map(|_| d.add_vertex(VertexKind::Boundary, Phase::ZERO)).collect();
        for (q, &o) in outs.iter().enumerate() {
            let (l, k) = (last[q], pending[q]);
            d.add_edge(l, o, k);
        }
        d.outputs = outs;
        Ok(d)
    }

    /// `self` followed by `other`: outputs of `self` are plugged into the
    /// inputs of `other`. Each joined wire keeps a phase-free Z spider at the
    /// seam.
    pub fn compose(&self, other: &ZxDiagram) -> Result<ZxDiagram, GraphError> {
        if self.outputs.len() != other.inputs.len() {
            return Err(GraphError::ArityMismatch {
                outputs: self.outputs.len(),
                inputs: other.inputs.len(),
            });
        }
        let mut d = self.clone();
        let mut map = BTreeMap::new();
        for (&v, data) in &other.vdata {
            map.insert(v, d.add_vertex(data.kind, data.phase));
        }
        for (u, v, k) in other.edges() {
            d.add_edge(map[&u], map[&v], k);
        }
        let seams: Vec<(V, V)> = self
            .outputs
            .iter()
            .zip(&other.inputs)
            .map(|(&o, &i)| (o, map[&i]))
            .collect();
        for (o, i) in seams {
            let (u, k1) = d.sole_neighbor(o);
            let (w, k2) = d.sole_neighbor(i);
            d.remove_vertex(o);
            d.remove_vertex(i);
            let z = d.add_vertex(VertexKind::Z, Phase::ZERO);
            d.add_edge(u, z, k1);
            d.add_edge(z, w, k2);
        }
        d.outputs = other.outputs.iter().map(|v| map[v]).collect();
        Ok(d)
    }

    fn sole_neighbor(&self, b: V) -> (V, EdgeKind) {
        let (&v, &k) = self.adj[&b].iter().next().expect("boundary vertex has a neighbor");
        (v, k)
    }

    pub fn add_vertex(&mut self, kind: VertexKind, phase: Phase) -> V {
        let v = self.next_id;
        self.next_id += 1;
        self.vdata.insert(v, VData { kind, phase });
        self.adj.insert(v, BTreeMap::new());
        self.ops += 1;
        v
    }

    /// Removes `v` and its edges. Inputs and outputs are not updated.
    pub fn remove_vertex(&mut self, v: V) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for w in nbrs.keys() {
                if let Some(m) = self.adj.get_mut(w) {
                    m.remove(&v);
                }
                self.ops += 1;
            }
        }
        self.vdata.remove(&v);
        self.ops += 1;
    }

    pub fn contains(&self, v: V) -> bool {
        self.vdata.contains_key(&v)
    }

    pub fn kind(&self, v: V) -> VertexKind {
        self.vdata[&v].kind
    }

    pub fn phase(&self, v: V) -> Phase {
        self.vdata[&v].phase
    }

    pub fn set_phase(&mut self, v: V, p: Phase) {
        self.vdata.get_mut(&v).expect("vertex exists").phase = p;
        self.ops += 1;
    }

    pub(crate) fn set_kind(&mut self, v: V, k: VertexKind) {
        self.vdata.get_mut(&v).expect("vertex exists").kind = k;
    }

    pub fn add_to_phase(&mut self, v: V, a: Angle) {
        let p = self.phase(v).add_angle(a);
        self.set_phase(v, p);
    }

    /// Adds `p` to the phase of `v`. If both carry a variable, `v` keeps its
    /// own and the fusion is passed to `sink`.
    pub fn fuse_phase(&mut self, v: V, p: Phase, sink: &mut dyn FnMut(Fusion)) {
        let (sum, fusion) = self.phase(v).fuse(p);
        if let Some(f) = fusion {
            sink(f);
        }
        self.set_phase(v, sum);
    }

    pub fn vertices(&self) -> impl Iterator<Item = V> + '_ {
        self.vdata.keys().copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.vdata.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.values().map(BTreeMap::len).sum::<usize>() / 2
    }

    pub fn inputs(&self) -> &[V] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[V] {
        &self.outputs
    }

    pub fn set_inputs(&mut self, v: Vec<V>) {
        self.inputs = v;
    }

    pub fn set_outputs(&mut self, v: Vec<V>) {
        self.outputs = v;
    }

    pub fn neighbors(&self, v: V) -> impl Iterator<Item = V> + '_ {
        self.adj[&v].keys().copied()
    }

    /// Neighbors with the kind of the connecting edge, by ascending id.
    pub fn incident(&self, v: V) -> impl Iterator<Item = (V, EdgeKind)> + '_ {
        self.adj[&v].iter().map(|(&w, &k)| (w, k))
    }

    pub fn degree(&self, v: V) -> usize {
        self.adj[&v].len()
    }

    pub fn edge(&self, u: V, v: V) -> Option<EdgeKind> {
        self.adj.get(&u).and_then(|m| m.get(&v)).copied()
    }

    pub fn connected(&self, u: V, v: V) -> bool {
        self.edge(u, v).is_some()
    }

    /// All edges `(u, v, kind)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(V, V, EdgeKind)> {
        let mut out = Vec::new();
        for (&u, m) in &self.adj {
            for (&v, &k) in m.range(u + 1..) {
                out.push((u, v, k));
            }
        }
        out
    }

    /// Number of elementary graph operations performed so far.
    pub fn op_count(&self) -> u64 {
        self.ops
    }

    pub fn is_boundary(&self, v: V) -> bool {
        self.kind(v) == VertexKind::Boundary
    }

    /// True if `v` is a spider adjacent to an input or output.
    pub fn touches_boundary(&self, v: V) -> bool {
        self.neighbors(v).any(|w| self.is_boundary(w))
    }

    /// Replaces any edge between `u` and `v`.
    pub fn set_edge(&mut self, u: V, v: V, k: EdgeKind) {
        self.adj.get_mut(&u).expect("vertex exists").insert(v, k);
        self.adj.get_mut(&v).expect("vertex exists").insert(u, k);
        self.ops += 1;
    }

    pub fn remove_edge(&mut self, u: V, v: V) -> Option<EdgeKind> {
        self.ops += 1;
        let k = self.adj.get_mut(&u)?.remove(&v);
        self.adj.get_mut(&v)?.remove(&u);
        k
    }

    /// Adds an edge, resolving a parallel edge or self-loop into at most one
    /// edge plus a phase change.
    ///
    /// # Panics
    /// If the result would give a boundary vertex a second edge or a loop.
    pub fn add_edge(&mut self, u: V, v: V, k: EdgeKind) {
        if u == v {
            assert!(!self.is_boundary(u), "self-loop on boundary {}", u);
            if k == EdgeKind::Hadamard {
                self.add_to_phase(u, Angle::PI);
            }
            return;
        }
        let Some(old) = self.edge(u, v) else {
            self.set_edge(u, v, k);
            return;
        };
        assert!(
            !self.is_boundary(u) && !self.is_boundary(v),
            "parallel edge at boundary {}-{}",
            u,
            v
        );
        // Work in the frame where both ends are the same colour.
        let same = self.kind(u) == self.kind(v);
        let recolour = |e: EdgeKind| if same { e } else { e.toggle() };
        let (a, b) = (recolour(old), recolour(k));
        let merged = match (a, b) {
            (EdgeKind::Simple, EdgeKind::Simple) => Some(EdgeKind::Simple),
            (EdgeKind::Hadamard, EdgeKind::Hadamard) => None,
            _ => {
                self.add_to_phase(u, Angle::PI);
                Some(EdgeKind::Simple)
            }
        };
        match merged.map(recolour) {
            Some(e) => self.set_edge(u, v, e),
            None => {
                self.remove_edge(u, v);
            }
        }
    }

    /// Toggles the Hadamard edge between two distinct Z spiders.
    pub fn add_hadamard_edge_xor(&mut self, u: V, v: V) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if self.kind(w) != VertexKind::Z {
                return Err(GraphError::NotZ(w));
            }
        }
        if self.remove_edge(u, v).is_none() {
            self.set_edge(u, v, EdgeKind::Hadamard);
        }
        Ok(())
    }

    /// Toggle without checks, for use inside rewrites on graph-like diagrams.
    pub(crate) fn toggle_hadamard(&mut self, u: V, v: V) {
        debug_assert!(u != v);
        if self.remove_edge(u, v).is_none() {
            self.set_edge(u, v, EdgeKind::Hadamard);
        }
    }

    /// Spiders with a phase that is not a constant multiple of `π/2`.
    pub fn non_clifford_count(&self) -> usize {
        self.vdata
            .values()
            .filter(|d| d.kind != VertexKind::Boundary && d.phase.is_non_clifford())
            .count()
    }

    /// Deterministic text listing of vertices and edges.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let list = |vs: &[V]| vs.iter().map(V::to_string).collect::<Vec<_>>().join(" ");
        writeln!(s, "inputs: {}", list(&self.inputs)).unwrap();
        writeln!(s, "outputs: {}", list(&self.outputs)).unwrap();
        for (v, d) in &self.vdata {
            match d.kind {
                VertexKind::Boundary => writeln!(s, "v {} B", v),
                VertexKind::Z => writeln!(s, "v {} Z {}", v, d.phase),
                VertexKind::X => writeln!(s, "v {} X {}", v, d.phase),
            }
            .unwrap();
        }
        for (u, v, k) in self.edges() {
            let t = if k == EdgeKind::Simple { "S" } else { "H" };
            writeln!(s, "e {} {} {}", u, v, t).unwrap();
        }
        s
    }

    /// Graphviz rendering: Z spiders green, X spiders red, Hadamard edges
    /// dashed blue.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph zx {\n  node [style=filled];\n");
        for (v, d) in &self.vdata {
            let (colour, label) = match d.kind {
                VertexKind::Boundary => ("white", String::new()),
                VertexKind::Z => ("palegreen", phase_label(d.phase)),
                VertexKind::X => ("lightcoral", phase_label(d.phase)),
            };
            writeln!(s, "  {} [fillcolor={}, label=\"{}\"];", v, colour, label).unwrap();
        }
        for (u, v, k) in self.edges() {
            let style = if k == EdgeKind::Hadamard { " [style=dashed, color=blue]" } else { "" };
            writeln!(s, "  {} -- {}{};", u, v, style).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn phase_label(p: Phase) -> String {
    if p.is_zero() {
        String::new()
    } else {
        p.to_string()
    }
}
