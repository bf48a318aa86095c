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

//! Local complementation and the pivot family.

use std::collections::BTreeSet;

use super::{boundary_leg, has_leaf, is_interior, no_match, normalize_hub, RewriteError, RewriteEvent, Rule};
use crate::graph::{EdgeKind, VertexKind, ZxDiagram, V};
use crate::phase::{Angle, Phase};

fn event(rule: Rule, matched: &[V], removed: Vec<V>) -> RewriteEvent {
    RewriteEvent {
        rule,
        matched: matched.to_vec(),
        removed,
        fusion: None,
    }
}

fn is_lcomp(d: &ZxDiagram, v: V) -> bool {
    is_interior(d, v) && d.phase(v).is_proper_clifford()
}

/// Interior spiders with phase `±π/2`.
pub fn match_lcomp(d: &ZxDiagram) -> Vec<V> {
    d.vertices().filter(|&v| is_lcomp(d, v)).collect()
}

/// Deletes `v`, complements the edges among its neighbours and subtracts
/// its phase from each of them.
///
/// ```
/// use zxopt::graph::{EdgeKind, VertexKind, ZxDiagram};
/// use zxopt::phase::{Angle, Phase};
/// use zxopt::rewrite::apply_lcomp;
///
/// let mut d = ZxDiagram::new();
/// let a = d.add_vertex(VertexKind::Z, Phase::ZERO);
/// let b = d.add_vertex(VertexKind::Z, Phase::ZERO);
/// let v = d.add_vertex(VertexKind::Z, Phase::constant(Angle::HALF_PI));
/// d.add_edge(a, v, EdgeKind::Hadamard);
/// d.add_edge(b, v, EdgeKind::Hadamard);
/// apply_lcomp(&mut d, v).unwrap();
/// assert_eq!(d.edge(a, b), Some(EdgeKind::Hadamard));
/// assert_eq!(d.phase(a), Phase::constant(Angle::new(3, 2)));
/// ```
pub fn apply_lcomp(d: &mut ZxDiagram, v: V) -> Result<RewriteEvent, RewriteError> {
    if !is_lcomp(d, v) {
        return Err(no_match(Rule::LComp, &[v]));
    }
    let a = d.phase(v).constant;
    let nbrs: Vec<V> = d.neighbors(v).collect();
    d.remove_vertex(v);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            d.toggle_hadamard(x, y);
        }
        d.add_to_phase(x, -a);
    }
    Ok(event(Rule::LComp, &[v], vec![v]))
}

fn hadamard_joined(d: &ZxDiagram, u: V, v: V) -> bool {
    d.edge(u, v) == Some(EdgeKind::Hadamard)
}

fn is_pivot(d: &ZxDiagram, u: V, v: V) -> bool {
    is_interior(d, u)
        && is_interior(d, v)
        && d.phase(u).is_pauli()
        && d.phase(v).is_pauli()
        && hadamard_joined(d, u, v)
}

/// Adjacent pairs `(u, v)`, `u < v`, of interior Pauli spiders.
pub fn match_pivot(d: &ZxDiagram) -> Vec<(V, V)> {
    let mut out = Vec::new();
    for u in d.vertices() {
        if d.kind(u) != VertexKind::Z {
            continue;
        }
        for v in d.neighbors(u).filter(|&v| v > u) {
            if is_pivot(d, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Deletes the Pauli pair `u`, `v`. Writing `U`, `V` for the neighbours of
/// only `u` or only `v` and `W` for the shared ones, the edges between each
/// two of these sets are complemented; `U` gains `v`'s phase, `V` gains
/// `u`'s, and `W` gains both plus `π`.
pub fn apply_pivot(d: &mut ZxDiagram, u: V, v: V) -> Result<RewriteEvent, RewriteError> {
    if !is_pivot(d, u, v) {
        return Err(no_match(Rule::Pivot, &[u, v]));
    }
    pivot_core(d, u, v, None);
    Ok(event(Rule::Pivot, &[u, v], vec![u, v]))
}

/// Pivot on Pauli `u`, `v` where `v` may carry one extra leg that is not
/// part of the neighbourhood classes. With a leg, `u` survives in place of
/// the pair and takes the leg with its edge type toggled.
fn pivot_core(d: &mut ZxDiagram, u: V, v: V, leg: Option<(V, EdgeKind)>) {
    let pu = d.phase(u).constant;
    let pv = d.phase(v).constant;
    let leg_v = leg.map(|l| l.0);
    let nu: BTreeSet<V> = d.neighbors(u).filter(|&w| w != v).collect();
    let nv: BTreeSet<V> = d.neighbors(v).filter(|&w| w != u && Some(w) != leg_v).collect();
    let n2: Vec<V> = nu.intersection(&nv).copied().collect();
    let n0: Vec<V> = nu.difference(&nv).copied().collect();
    let n1: Vec<V> = nv.difference(&nu).copied().collect();

    for (xs, ys) in [(&n0, &n1), (&n0, &n2), (&n1, &n2)] {
        for &x in xs {
            for &y in ys {
                d.toggle_hadamard(x, y);
            }
        }
    }
    let shifts = [(&n0, pv), (&n1, pu), (&n2, Angle::PI + pu + pv)];
    for (xs, a) in shifts {
        if !a.is_zero() {
            for &x in xs {
                d.add_to_phase(x, a);
            }
        }
    }
    d.remove_vertex(v);
    match leg {
        None => d.remove_vertex(u),
        Some((l, k)) => d.set_edge(u, l, k.toggle()),
    }
}

fn is_pivot_gadget(d: &ZxDiagram, u: V, v: V) -> bool {
    is_interior(d, u)
        && is_interior(d, v)
        && d.phase(u).is_pauli()
        && !has_leaf(d, u)
        && !d.phase(v).is_pauli()
        && d.degree(v) > 1
        && hadamard_joined(d, u, v)
}

/// Pairs `(u, v)` with `u` an interior Pauli spider that is not a gadget hub
/// and `v` an interior non-Pauli spider that is not a gadget leaf.
pub fn match_pivot_gadget(d: &ZxDiagram) -> Vec<(V, V)> {
    let mut out = Vec::new();
    for u in d.vertices() {
        if d.kind(u) != VertexKind::Z || !d.phase(u).is_pauli() {
            continue;
        }
        for v in d.neighbors(u) {
            if is_pivot_gadget(d, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Moves `v`'s phase onto a new leaf, then pivots on `u`, `v`. The result
/// is a phase gadget whose hub is `u`.
pub fn apply_pivot_gadget(d: &mut ZxDiagram, u: V, v: V) -> Result<RewriteEvent, RewriteError> {
    if !is_pivot_gadget(d, u, v) {
        return Err(no_match(Rule::PivotGadget, &[u, v]));
    }
    let leaf = d.add_vertex(VertexKind::Z, d.phase(v));
    d.set_phase(v, Phase::ZERO);
    d.set_edge(v, leaf, EdgeKind::Simple);
    pivot_core(d, u, v, Some((leaf, EdgeKind::Simple)));
    normalize_hub(d, u);
    Ok(event(Rule::PivotGadget, &[u, v], vec![v]))
}

fn pivot_boundary_ok(d: &ZxDiagram, u: V) -> bool {
    is_interior(d, u) && d.phase(u).is_pauli() && !has_leaf(d, u)
}

/// For each interior Pauli spider `u` that is not a gadget hub and has a
/// neighbour on the boundary, the pair `(u, v)` with `v` that neighbour.
/// A neighbour with phase `±π/2` is preferred, then the lowest id.
pub fn match_pivot_boundary(d: &ZxDiagram) -> Vec<(V, V)> {
    let mut out = Vec::new();
    for u in d.vertices() {
        if d.kind(u) != VertexKind::Z || !pivot_boundary_ok(d, u) {
            continue;
        }
        let cands: Vec<V> = d
            .neighbors(u)
            .filter(|&v| boundary_leg(d, v).is_some() && hadamard_joined(d, u, v))
            .collect();
        let pick = cands
            .iter()
            .find(|&&v| d.phase(v).is_proper_clifford())
            .or(cands.first());
        if let Some(&v) = pick {
            out.push((u, v));
        }
    }
    out
}

/// Pivots an interior Pauli `u` with a boundary spider `v`. A non-Pauli
/// phase on `v` is first moved onto a new gadget hanging off `v`. Afterwards
/// `v` is gone and `u` holds its boundary wire.
pub fn apply_pivot_boundary(d: &mut ZxDiagram, u: V, v: V) -> Result<RewriteEvent, RewriteError> {
    let leg = boundary_leg(d, v);
    if !pivot_boundary_ok(d, u) || leg.is_none() || !hadamard_joined(d, u, v) {
        return Err(no_match(Rule::PivotBoundary, &[u, v]));
    }
    let mut hub = None;
    if !d.phase(v).is_pauli() {
        let h = d.add_vertex(VertexKind::Z, Phase::ZERO);
        let leaf = d.add_vertex(VertexKind::Z, d.phase(v));
        d.set_phase(v, Phase::ZERO);
        d.set_edge(v, h, EdgeKind::Hadamard);
        d.set_edge(h, leaf, EdgeKind::Hadamard);
        hub = Some(h);
    }
    pivot_core(d, u, v, leg);
    if let Some(h) = hub {
        normalize_hub(d, h);
    }
    Ok(event(Rule::PivotBoundary, &[u, v], vec![v]))
}
