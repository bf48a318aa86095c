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

//! Conversion to graph-like form.

use std::collections::{BTreeSet, VecDeque};

use super::{EdgeKind, VertexKind, ZxDiagram, V};
use crate::phase::{Fusion, Phase};

impl ZxDiagram {
    /// Brings the diagram into graph-like form: X spiders are recoloured,
    /// spiders joined by simple edges are fused, every spider touches at
    /// most one boundary, and parts not connected to any boundary (scalars)
    /// are dropped.
    ///
    /// # Panics
    /// If two spiders carrying variables are fused. Use
    /// [`to_graph_like_with`](Self::to_graph_like_with) to receive those.
    pub fn to_graph_like(&mut self) {
        self.to_graph_like_with(&mut |f: Fusion| panic!("unexpected variable fusion {:?}", f));
    }

    /// As [`to_graph_like`](Self::to_graph_like), passing each fusion of two
    /// variables to `sink`. The surviving spider is always the one with the
    /// lower id.
    pub fn to_graph_like_with(&mut self, sink: &mut dyn FnMut(Fusion)) {
        self.recolour_x();
        self.fuse_simple_edges(sink);
        self.separate_boundaries();
        self.drop_scalars();
    }

    fn recolour_x(&mut self) {
        let xs: Vec<V> = self.vertices().filter(|&v| self.kind(v) == VertexKind::X).collect();
        for &v in &xs {
            let inc: Vec<(V, EdgeKind)> = self.incident(v).collect();
            for (w, k) in inc {
                self.set_edge(v, w, k.toggle());
            }
            self.set_kind(v, VertexKind::Z);
        }
    }

    fn fuse_simple_edges(&mut self, sink: &mut dyn FnMut(Fusion)) {
        let zs: Vec<V> = self.vertices().filter(|&v| self.kind(v) == VertexKind::Z).collect();
        for u in zs {
            if !self.contains(u) {
                continue;
            }
            loop {
                let next = self
                    .incident(u)
                    .find(|&(w, k)| k == EdgeKind::Simple && self.kind(w) == VertexKind::Z)
                    .map(|(w, _)| w);
                match next {
                    Some(w) => self.fuse_into(u, w, sink),
                    None => break,
                }
            }
        }
    }

    /// Merges spider `w` into its simple-edge neighbour `u`.
    fn fuse_into(&mut self, u: V, w: V, sink: &mut dyn FnMut(Fusion)) {
        self.remove_edge(u, w);
        let p = self.phase(w);
        self.fuse_phase(u, p, sink);
        let inc: Vec<(V, EdgeKind)> = self.incident(w).collect();
        self.remove_vertex(w);
        for (x, k) in inc {
            self.add_edge(u, x, k);
        }
    }

    fn separate_boundaries(&mut self) {
        let boundaries: Vec<V> = self.inputs.iter().chain(&self.outputs).copied().collect();
        // Bare wires get a pair of spiders.
        for &b in &boundaries {
            let (v, k) = self.sole_neighbor(b);
            if self.is_boundary(v) && b < v {
                self.remove_edge(b, v);
                let z1 = self.add_vertex(VertexKind::Z, Phase::ZERO);
                let z2 = self.add_vertex(VertexKind::Z, Phase::ZERO);
                self.set_edge(b, z1, EdgeKind::Simple);
                self.set_edge(z1, z2, EdgeKind::Hadamard);
                self.set_edge(z2, v, k.toggle());
            }
        }
        // A spider keeps its first boundary; later ones go through an
        // identity made of two Hadamard edges.
        let mut claimed = BTreeSet::new();
        for &b in &boundaries {
            let (v, k) = self.sole_neighbor(b);
            if claimed.insert(v) {
                continue;
            }
            self.remove_edge(b, v);
            let z1 = self.add_vertex(VertexKind::Z, Phase::ZERO);
            let z2 = self.add_vertex(VertexKind::Z, Phase::ZERO);
            self.set_edge(b, z1, k);
            self.set_edge(z1, z2, EdgeKind::Hadamard);
            self.set_edge(z2, v, EdgeKind::Hadamard);
        }
    }

    pub(crate) fn drop_scalars(&mut self) -> bool {
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<V> = self.inputs.iter().chain(&self.outputs).copied().collect();
        while let Some(v) = queue.pop_front() {
            if seen.insert(v) {
                queue.extend(self.neighbors(v));
            }
        }
        let dead: Vec<V> = self.vertices().filter(|v| !seen.contains(v)).collect();
        for &v in &dead {
            self.remove_vertex(v);
        }
        !dead.is_empty()
    }

    /// Describes the first graph-like violation found, if any.
    pub fn graph_like_violation(&self) -> Option<String> {
        let bset: BTreeSet<V> = self.inputs.iter().chain(&self.outputs).copied().collect();
        if bset.len() != self.inputs.len() + self.outputs.len() {
            return Some("a boundary is listed twice".into());
        }
        for v in self.vertices() {
            match self.kind(v) {
                VertexKind::X => return Some(format!("vertex {} is an X spider", v)),
                VertexKind::Boundary => {
                    if !bset.contains(&v) {
                        return Some(format!("boundary {} is not an input or output", v));
                    }
                    if self.degree(v) != 1 {
                        return Some(format!("boundary {} has degree {}", v, self.degree(v)));
                    }
                    if !self.phase(v).is_zero() {
                        return Some(format!("boundary {} carries a phase", v));
                    }
                    let (w, _) = self.sole_neighbor(v);
                    if self.kind(w) != VertexKind::Z {
                        return Some(format!("boundary {} is not attached to a Z spider", v));
                    }
                }
                VertexKind::Z => {
                    let nb = self.neighbors(v).filter(|&w| self.is_boundary(w)).count();
                    if nb > 1 {
                        return Some(format!("spider {} touches {} boundaries", v, nb));
                    }
                    for (w, k) in self.incident(v) {
                        if self.kind(w) == VertexKind::Z && k != EdgeKind::Hadamard {
                            return Some(format!("simple edge between spiders {} and {}", v, w));
                        }
                    }
                }
            }
        }
        None
    }

    /// Graph-like form: only Z spiders, Hadamard edges between spiders,
    /// degree-one boundaries each on a distinct spider. Simplicity of the
    /// graph holds by construction.
    pub fn is_graph_like(&self) -> bool {
        self.graph_like_violation().is_none()
    }
}
