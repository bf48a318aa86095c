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

//! Identity removal and gadget fusion.

use std::collections::BTreeMap;

use super::{gadget_hub, gadgets, is_interior, is_leaf, no_match, RewriteError, RewriteEvent, Rule};
use crate::graph::{EdgeKind, ZxDiagram, V};
use crate::phase::{Angle, Phase};

/// Rewrites a gadget hub with phase `π` to phase 0 by negating its leaf.
/// Returns whether anything changed.
pub fn normalize_hub(d: &mut ZxDiagram, hub: V) -> bool {
    if d.phase(hub) != Phase::constant(Angle::PI) {
        return false;
    }
    let leaves: Vec<V> = d.neighbors(hub).filter(|&w| is_leaf(d, w)).collect();
    if leaves.len() != 1 {
        return false;
    }
    d.set_phase(hub, Phase::ZERO);
    let p = d.phase(leaves[0]);
    d.set_phase(leaves[0], -p);
    true
}

fn id_neighbors(d: &ZxDiagram, z: V) -> Option<(V, V)> {
    if !is_interior(d, z) || !d.phase(z).is_zero() || d.degree(z) != 2 {
        return None;
    }
    let inc: Vec<(V, EdgeKind)> = d.incident(z).collect();
    if inc.iter().any(|&(_, k)| k != EdgeKind::Hadamard) {
        return None;
    }
    let (a, b) = (inc[0].0, inc[1].0);
    if d.touches_boundary(a) && d.touches_boundary(b) {
        return None;
    }
    Some((a, b))
}

/// Interior phase-free spiders with exactly two Hadamard edges, whose
/// neighbours can be merged without putting two boundaries on one spider.
/// A gadget with a single target is the special case where one neighbour
/// is the gadget's leaf.
pub fn match_id_fuse(d: &ZxDiagram) -> Vec<V> {
    d.vertices().filter(|&z| id_neighbors(d, z).is_some()).collect()
}

/// Removes the identity spider `z` and fuses its two neighbours. The
/// survivor is the one on the boundary if any, otherwise the one that is not
/// a leaf, otherwise the lower id.
///
/// ```
/// use zxopt::graph::{EdgeKind, VertexKind, ZxDiagram};
/// use zxopt::phase::{Angle, Phase};
/// use zxopt::rewrite::apply_id_fuse;
///
/// let mut d = ZxDiagram::new();
/// let t = d.add_vertex(VertexKind::Z, Phase::constant(Angle::QUARTER_PI));
/// let hub = d.add_vertex(VertexKind::Z, Phase::ZERO);
/// let leaf = d.add_vertex(VertexKind::Z, Phase::constant(Angle::QUARTER_PI));
/// let other = d.add_vertex(VertexKind::Z, Phase::ZERO);
/// d.add_edge(t, hub, EdgeKind::Hadamard);
/// d.add_edge(hub, leaf, EdgeKind::Hadamard);
/// d.add_edge(t, other, EdgeKind::Hadamard);
/// apply_id_fuse(&mut d, hub).unwrap();
/// assert_eq!(d.phase(t), Phase::constant(Angle::HALF_PI));
/// assert!(!d.contains(leaf));
/// ```
pub fn apply_id_fuse(d: &mut ZxDiagram, z: V) -> Result<RewriteEvent, RewriteError> {
    let (a, b) = id_neighbors(d, z).ok_or_else(|| no_match(Rule::IdFuse, &[z]))?;
    let keep_a = if d.touches_boundary(a) != d.touches_boundary(b) {
        d.touches_boundary(a)
    } else if is_leaf(d, a) != is_leaf(d, b) {
        !is_leaf(d, a)
    } else {
        a < b
    };
    let (keep, drop) = if keep_a { (a, b) } else { (b, a) };
    d.remove_vertex(z);
    if d.remove_edge(keep, drop).is_some() {
        d.add_to_phase(keep, Angle::PI);
    }
    let (sum, fusion) = d.phase(keep).fuse(d.phase(drop));
    d.set_phase(keep, sum);
    let inc: Vec<(V, EdgeKind)> = d.incident(drop).collect();
    d.remove_vertex(drop);
    for (w, k) in inc {
        d.add_edge(keep, w, k);
    }
    Ok(RewriteEvent {
        rule: Rule::IdFuse,
        matched: vec![z],
        removed: vec![z, drop],
        fusion,
    })
}

fn targets(d: &ZxDiagram, leaf: V, hub: V) -> Vec<V> {
    d.neighbors(hub).filter(|&w| w != leaf).collect()
}

/// Pairs of gadget leaves `(kept, absorbed)` whose hubs have identical
/// targets. Each group of equal gadgets contributes its two lowest leaves.
pub fn match_gadget_fuse(d: &ZxDiagram) -> Vec<(V, V)> {
    let mut groups: BTreeMap<Vec<V>, Vec<V>> = BTreeMap::new();
    for (leaf, hub) in gadgets(d) {
        groups.entry(targets(d, leaf, hub)).or_default().push(leaf);
    }
    let mut out: Vec<(V, V)> = groups
        .values()
        .filter(|ls| ls.len() >= 2)
        .map(|ls| (ls[0], ls[1]))
        .collect();
    out.sort();
    out
}

/// Merges the gadget with leaf `l2` into the gadget with leaf `l1`: the
/// phases add and the second leaf and hub are removed.
pub fn apply_gadget_fuse(d: &mut ZxDiagram, l1: V, l2: V) -> Result<RewriteEvent, RewriteError> {
    let err = || no_match(Rule::GadgetFuse, &[l1, l2]);
    let h1 = gadget_hub(d, l1).ok_or_else(err)?;
    let h2 = gadget_hub(d, l2).ok_or_else(err)?;
    if h1 == h2 || targets(d, l1, h1) != targets(d, l2, h2) {
        return Err(err());
    }
    normalize_hub(d, h1);
    normalize_hub(d, h2);
    let (sum, fusion) = d.phase(l1).fuse(d.phase(l2));
    d.set_phase(l1, sum);
    d.remove_vertex(l2);
    d.remove_vertex(h2);
    Ok(RewriteEvent {
        rule: Rule::GadgetFuse,
        matched: vec![l1, l2],
        removed: vec![l2, h2],
        fusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexKind;
    use crate::phase::VarId;
    use crate::semantics::{proportional, tensor_of_diagram, DEFAULT_TOL};

    /// Two wires with spiders `a`, `b`; returns (diagram, a, b).
    fn wires() -> (ZxDiagram, V, V) {
        let mut d = ZxDiagram::new();
        let mut ins = Vec::new();
        let mut outs = Vec::new();
        let mut zs = Vec::new();
        for _ in 0..2 {
            let i = d.add_vertex(VertexKind::Boundary, Phase::ZERO);
            let z = d.add_vertex(VertexKind::Z, Phase::ZERO);
            let o = d.add_vertex(VertexKind::Boundary, Phase::ZERO);
            let z2 = d.add_vertex(VertexKind::Z, Phase::ZERO);
            d.add_edge(i, z, EdgeKind::Simple);
            d.add_edge(z, z2, EdgeKind::Hadamard);
            d.add_edge(z2, o, EdgeKind::Hadamard);
            ins.push(i);
            outs.push(o);
            zs.push(z);
        }
        d.set_inputs(ins);
        d.set_outputs(outs);
        (d, zs[0], zs[1])
    }

    fn gadget(d: &mut ZxDiagram, p: Phase, hub_phase: Angle, ts: &[V]) -> (V, V) {
        let hub = d.add_vertex(VertexKind::Z, Phase::constant(hub_phase));
        let leaf = d.add_vertex(VertexKind::Z, p);
        d.add_edge(hub, leaf, EdgeKind::Hadamard);
        for &t in ts {
            d.add_edge(hub, t, EdgeKind::Hadamard);
        }
        (leaf, hub)
    }

    fn same(a: &ZxDiagram, b: &ZxDiagram) -> bool {
        let x = tensor_of_diagram(a, None).unwrap();
        let y = tensor_of_diagram(b, None).unwrap();
        proportional(&x, &y, DEFAULT_TOL).unwrap()
    }

    #[test]
    fn single_target_gadget_fuses_into_target() {
        let (mut d, a, _) = wires();
        d.set_phase(a, Phase::constant(Angle::QUARTER_PI));
        let (leaf, hub) = gadget(&mut d, Phase::constant(Angle::QUARTER_PI), Angle::ZERO, &[a]);
        let before = d.clone();
        assert!(match_id_fuse(&d).contains(&hub));
        let ev = apply_id_fuse(&mut d, hub).unwrap();
        assert_eq!(ev.removed, vec![hub, leaf]);
        assert_eq!(d.phase(a), Phase::constant(Angle::HALF_PI));
        assert!(d.is_graph_like());
        assert!(same(&before, &d));
    }

    #[test]
    fn opposite_sign_variables() {
        let (mut d, a, _) = wires();
        d.set_phase(a, -Phase::var(VarId(2)));
        let (_, hub) = gadget(&mut d, Phase::var(VarId(1)), Angle::ZERO, &[a]);
        let ev = apply_id_fuse(&mut d, hub).unwrap();
        let f = ev.fusion.unwrap();
        assert_eq!((f.kept, f.absorbed, f.same_sign), (VarId(2), VarId(1), false));
        assert_eq!(d.phase(a), -Phase::var(VarId(2)));
    }

    #[test]
    fn identity_between_boundary_spiders_left_alone() {
        let (mut d, a, b) = wires();
        let z = d.add_vertex(VertexKind::Z, Phase::ZERO);
        d.add_edge(a, z, EdgeKind::Hadamard);
        d.add_edge(z, b, EdgeKind::Hadamard);
        assert!(!match_id_fuse(&d).contains(&z));
    }

    #[test]
    fn identity_with_existing_edge_adds_pi() {
        let (mut d, a, _) = wires();
        let x = d.add_vertex(VertexKind::Z, Phase::constant(Angle::QUARTER_PI));
        let y = d.add_vertex(VertexKind::Z, Phase::ZERO);
        let z = d.add_vertex(VertexKind::Z, Phase::ZERO);
        for (p, q) in [(a, x), (x, z), (z, y), (x, y), (y, a)] {
            d.add_edge(p, q, EdgeKind::Hadamard);
        }
        let before = d.clone();
        apply_id_fuse(&mut d, z).unwrap();
        assert!(d.is_graph_like());
        assert!(same(&before, &d));
    }

    #[test]
    fn gadgets_fuse() {
        let (mut d, a, b) = wires();
        let q = Phase::constant(Angle::QUARTER_PI);
        let (l1, _) = gadget(&mut d, q, Angle::ZERO, &[a, b]);
        let (l2, _) = gadget(&mut d, q, Angle::ZERO, &[a, b]);
        let before = d.clone();
        assert_eq!(match_gadget_fuse(&d), vec![(l1, l2)]);
        apply_gadget_fuse(&mut d, l1, l2).unwrap();
        assert_eq!(d.phase(l1), Phase::constant(Angle::HALF_PI));
        assert!(same(&before, &d));
    }

    #[test]
    fn gadgets_cancel_and_pi_hubs_normalize() {
        let (mut d, a, b) = wires();
        let (l1, _) = gadget(&mut d, Phase::constant(Angle::QUARTER_PI), Angle::PI, &[a, b]);
        let (l2, _) = gadget(&mut d, Phase::constant(Angle::QUARTER_PI), Angle::ZERO, &[a, b]);
        let before = d.clone();
        apply_gadget_fuse(&mut d, l1, l2).unwrap();
        assert_eq!(d.phase(l1), Phase::ZERO);
        assert!(same(&before, &d));
    }

    #[test]
    fn same_sign_gadget_variables() {
        let (mut d, a, b) = wires();
        let (l1, _) = gadget(&mut d, Phase::var(VarId(2)), Angle::ZERO, &[a, b]);
        let (l2, _) = gadget(&mut d, Phase::var(VarId(5)), Angle::ZERO, &[a, b]);
        let ev = apply_gadget_fuse(&mut d, l1, l2).unwrap();
        let f = ev.fusion.unwrap();
        assert_eq!((f.kept, f.absorbed, f.same_sign), (VarId(2), VarId(5), true));
    }

    #[test]
    fn different_targets_do_not_fuse() {
        let (mut d, a, b) = wires();
        let q = Phase::constant(Angle::QUARTER_PI);
        let (l1, _) = gadget(&mut d, q, Angle::ZERO, &[a, b]);
        let (l2, _) = gadget(&mut d, q, Angle::ZERO, &[a]);
        assert!(match_gadget_fuse(&d).is_empty());
        assert!(apply_gadget_fuse(&mut d, l1, l2).is_err());
    }
}
