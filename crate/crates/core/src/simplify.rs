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

//! The simplification driver.

use std::collections::BTreeMap;

use crate::graph::{ZxDiagram, V};
use crate::phase::Fusion;
use crate::rewrite::{
    self, gadget_hub, gadgets, is_interior, RewriteError, RewriteEvent, Rule,
};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplifyReport {
    /// Passes of the outer loop, including the final one that changed nothing.
    pub iterations: usize,
    pub events: Vec<RewriteEvent>,
    /// Non-Clifford spider count before the first event and after each one.
    pub non_clifford_trace: Vec<usize>,
    pub final_non_clifford: usize,
    /// Elementary graph operations spent by the run.
    pub ops: u64,
}

impl SimplifyReport {
    pub fn count(&self, rule: Rule) -> usize {
        self.events.iter().filter(|e| e.rule == rule).count()
    }

    /// One line per event.
    pub fn trace(&self) -> String {
        self.events.iter().map(|e| format!("{}\n", e)).collect()
    }
}

struct Run<'a> {
    d: &'a mut ZxDiagram,
    sink: &'a mut dyn FnMut(Fusion),
    report: SimplifyReport,
}

impl Run<'_> {
    fn record(&mut self, r: Result<RewriteEvent, RewriteError>) -> bool {
        match r {
            Ok(ev) => {
                if let Some(f) = ev.fusion {
                    (self.sink)(f);
                }
                self.report.events.push(ev);
                self.report.non_clifford_trace.push(self.d.non_clifford_count());
                true
            }
            Err(_) => false,
        }
    }

    /// Applies every candidate of a single-vertex rule until none is left.
    fn exhaust_v(
        &mut self,
        m: fn(&ZxDiagram) -> Vec<V>,
        a: fn(&mut ZxDiagram, V) -> Result<RewriteEvent, RewriteError>,
    ) -> usize {
        let mut n = 0;
        loop {
            let mut fired = false;
            for v in m(self.d) {
                let r = a(self.d, v);
                let ok = self.record(r);
                fired |= ok;
                n += ok as usize;
            }
            if !fired {
                return n;
            }
        }
    }

    fn exhaust_e(
        &mut self,
        m: fn(&ZxDiagram) -> Vec<(V, V)>,
        a: fn(&mut ZxDiagram, V, V) -> Result<RewriteEvent, RewriteError>,
    ) -> usize {
        let mut n = 0;
        loop {
            let mut fired = 0;
            for (u, v) in m(self.d) {
                let r = a(self.d, u, v);
                fired += self.record(r) as usize;
            }
            n += fired;
            if fired == 0 {
                return n;
            }
        }
    }

    fn interior_clifford(&mut self) -> usize {
        let mut total = 0;
        loop {
            let n = self.exhaust_v(rewrite::match_id_fuse, rewrite::apply_id_fuse)
                + self.exhaust_v(rewrite::match_lcomp, rewrite::apply_lcomp)
                + self.exhaust_e(rewrite::match_pivot, rewrite::apply_pivot);
            total += n;
            if n == 0 {
                return total;
            }
        }
    }

    fn pivots(&mut self) -> usize {
        let mut total = 0;
        loop {
            let n = self.interior_clifford()
                + self.exhaust_e(rewrite::match_pivot_boundary, rewrite::apply_pivot_boundary)
                + self.exhaust_e(rewrite::match_pivot_gadget, rewrite::apply_pivot_gadget);
            total += n;
            if n == 0 {
                return total;
            }
        }
    }

    fn fusions(&mut self) -> usize {
        let mut n = self.d.drop_scalars() as usize;
        let hubs: Vec<V> = gadgets(self.d).into_iter().map(|(_, h)| h).collect();
        for h in hubs {
            rewrite::normalize_hub(self.d, h);
        }
        n += self.exhaust_v(rewrite::match_id_fuse, rewrite::apply_id_fuse);
        n += self.exhaust_e(rewrite::match_gadget_fuse, rewrite::apply_gadget_fuse);
        n
    }
}

/// Simplifies a graph-like diagram to reduced gadget form. Each pass
/// removes interior Clifford spiders by local complementation and identity
/// removal, eliminates interior Pauli spiders by the pivot rules (creating
/// phase gadgets where needed), and then fuses single-target gadgets into
/// their target and gadgets with equal targets into each other. Passes repeat
/// until one applies no rule.
///
/// Every combination of two variable-carrying phases is passed to
/// `on_fusion` as it happens.
pub fn zx_simplify(d: &mut ZxDiagram, on_fusion: &mut dyn FnMut(Fusion)) -> SimplifyReport {
    let start_ops = d.op_count();
    let trace = vec![d.non_clifford_count()];
    let mut run = Run {
        d,
        sink: on_fusion,
        report: SimplifyReport {
            non_clifford_trace: trace,
            ..SimplifyReport::default()
        },
    };
    loop {
        run.report.iterations += 1;
        let fired = run.pivots() + run.fusions();
        if fired == 0 {
            break;
        }
    }
    let mut report = run.report;
    report.final_non_clifford = d.non_clifford_count();
    report.ops = d.op_count() - start_ops;
    report
}

/// [`zx_simplify`] for diagrams without variables.
///
/// # Panics
/// If two variables meet.
pub fn zx_simplify_concrete(d: &mut ZxDiagram) -> SimplifyReport {
    zx_simplify(d, &mut |f| panic!("unexpected variable fusion {:?}", f))
}

/// Every interior spider is non-Clifford or belongs to a non-Clifford phase
/// gadget, every gadget has more than one target, and no two gadgets have
/// the same targets.
pub fn is_reduced_gadget_form(d: &ZxDiagram) -> bool {
    let gs = gadgets(d);
    let mut in_gadget = BTreeMap::new();
    let mut seen_targets = BTreeMap::new();
    for &(leaf, hub) in &gs {
        if !d.phase(leaf).is_non_clifford() {
            return false;
        }
        let ts: Vec<V> = d.neighbors(hub).filter(|&w| w != leaf).collect();
        if ts.len() < 2 || seen_targets.insert(ts, leaf).is_some() {
            return false;
        }
        in_gadget.insert(leaf, ());
        in_gadget.insert(hub, ());
    }
    d.vertices()
        .filter(|&v| is_interior(d, v))
        .all(|v| in_gadget.contains_key(&v) || (d.phase(v).is_non_clifford() && gadget_hub(d, v).is_none()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{Circuit, Gate};
    use crate::graph::{EdgeKind, VertexKind};
    use crate::phase::{Angle, Phase};
    use crate::semantics::{proportional, tensor_of_circuit, tensor_of_diagram, DEFAULT_TOL};

    fn simplified(c: &Circuit) -> (ZxDiagram, SimplifyReport) {
        let mut d = ZxDiagram::from_circuit(c).unwrap();
        d.to_graph_like();
        let r = zx_simplify_concrete(&mut d);
        (d, r)
    }

    #[test]
    fn clifford_circuit_has_no_interior_spiders() {
        let c = Circuit::from_gates(
            3,
            [
                Gate::H(0),
                Gate::cnot(0, 1),
                Gate::s(1),
                Gate::Cz(1, 2),
                Gate::H(2),
                Gate::cnot(2, 0),
                Gate::z(0, Angle::PI),
            ],
        )
        .unwrap();
        let (d, r) = simplified(&c);
        assert!(d.vertices().all(|v| !is_interior(&d, v)));
        assert_eq!(r.final_non_clifford, 0);
        assert!(is_reduced_gadget_form(&d));
        let a = tensor_of_circuit(&c, None).unwrap();
        let b = tensor_of_diagram(&d, None).unwrap();
        assert!(proportional(&a, &b, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn ccz_keeps_seven_phases() {
        let c = Circuit::from_gates(3, [Gate::Ccz(0, 1, 2)]).unwrap().decompose_to_basic();
        let (d, r) = simplified(&c);
        assert_eq!(r.final_non_clifford, 7);
        assert!(is_reduced_gadget_form(&d));
        assert!(r.non_clifford_trace.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn cancelling_t_gates_across_cnots() {
        let c = Circuit::from_gates(
            2,
            [Gate::t(1), Gate::cnot(0, 1), Gate::cnot(0, 1), Gate::tdg(1), Gate::H(0)],
        )
        .unwrap();
        let (_, r) = simplified(&c);
        assert_eq!(r.final_non_clifford, 0);
    }

    #[test]
    fn deterministic() {
        let c = Circuit::from_gates(3, [Gate::tof(0, 1, 2), Gate::tof(1, 2, 0)])
            .unwrap()
            .decompose_to_basic();
        let (d1, r1) = simplified(&c);
        let (d2, r2) = simplified(&c);
        assert_eq!(r1, r2);
        assert_eq!(d1.dump(), d2.dump());
    }

    #[test]
    fn predicate_rejects_duplicate_gadgets_and_interior_pauli() {
        let mut d = ZxDiagram::new();
        let mut ts = Vec::new();
        let (mut ins, mut outs) = (Vec::new(), Vec::new());
        for _ in 0..2 {
            let i = d.add_vertex(VertexKind::Boundary, Phase::ZERO);
            let z = d.add_vertex(VertexKind::Z, Phase::ZERO);
            let o = d.add_vertex(VertexKind::Boundary, Phase::ZERO);
            d.add_edge(i, z, EdgeKind::Simple);
            d.add_edge(z, o, EdgeKind::Hadamard);
            ins.push(i);
            outs.push(o);
            ts.push(z);
        }
        d.set_inputs(ins);
        d.set_outputs(outs);
        let add_gadget = |d: &mut ZxDiagram| {
            let h = d.add_vertex(VertexKind::Z, Phase::ZERO);
            let l = d.add_vertex(VertexKind::Z, Phase::constant(Angle::QUARTER_PI));
            d.add_edge(h, l, EdgeKind::Hadamard);
            for &t in &ts {
                d.add_edge(h, t, EdgeKind::Hadamard);
            }
        };
        add_gadget(&mut d);
        assert!(is_reduced_gadget_form(&d));
        add_gadget(&mut d);
        assert!(!is_reduced_gadget_form(&d));

        let mut e = ZxDiagram::identity(1);
        let z = e.add_vertex(VertexKind::Z, Phase::ZERO);
        let w = e.add_vertex(VertexKind::Z, Phase::constant(Angle::QUARTER_PI));
        let x = e.add_vertex(VertexKind::Z, Phase::constant(Angle::QUARTER_PI));
        e.add_edge(z, w, EdgeKind::Hadamard);
        e.add_edge(z, x, EdgeKind::Hadamard);
        e.add_edge(w, x, EdgeKind::Hadamard);
        assert!(!is_reduced_gadget_form(&e));
    }
}
