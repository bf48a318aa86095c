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

//! Matchers and appliers for the simplification rules on graph-like
//! diagrams.
//!
//! Every matcher lists candidates in ascending vertex id order (pairs
//! lexicographically). Appliers re-check their match and fail with
//! [`RewriteError::NoMatch`] rather than corrupting the diagram.

mod fuse;
mod pivot;

pub use fuse::{apply_gadget_fuse, apply_id_fuse, match_gadget_fuse, match_id_fuse, normalize_hub};
pub use pivot::{
    apply_lcomp, apply_pivot, apply_pivot_boundary, apply_pivot_gadget, match_lcomp, match_pivot,
    match_pivot_boundary, match_pivot_gadget,
};

use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeKind, VertexKind, ZxDiagram, V};
use crate::phase::Fusion;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Rule {
    LComp,
    Pivot,
    PivotGadget,
    PivotBoundary,
    IdFuse,
    GadgetFuse,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Rule::LComp,
        Rule::Pivot,
        Rule::PivotGadget,
        Rule::PivotBoundary,
        Rule::IdFuse,
        Rule::GadgetFuse,
    ];
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One applied rewrite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteEvent {
    pub rule: Rule,
    /// The matched vertices, in the order given to the applier.
    pub matched: Vec<V>,
    pub removed: Vec<V>,
    /// Present when two variable-carrying phases were combined.
    pub fusion: Option<Fusion>,
}

impl fmt::Display for RewriteEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |vs: &[V]| vs.iter().map(V::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{} [{}] removed [{}]", self.rule, list(&self.matched), list(&self.removed))?;
        if let Some(x) = self.fusion {
            let s = if x.same_sign { "same" } else { "opposite" };
            write!(f, " fuse {} <- {} ({} sign)", x.kept, x.absorbed, s)?;
        }
        Ok(())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("{rule} does not match at {at:?}")]
    NoMatch { rule: Rule, at: Vec<V> },
}

fn no_match(rule: Rule, at: &[V]) -> RewriteError {
    RewriteError::NoMatch { rule, at: at.to_vec() }
}

/// A Z spider with no boundary neighbour.
pub fn is_interior(d: &ZxDiagram, v: V) -> bool {
    d.contains(v) && d.kind(v) == VertexKind::Z && !d.touches_boundary(v)
}

/// A Z spider adjacent to exactly one boundary vertex, which is returned
/// with the kind of the connecting edge.
pub fn boundary_leg(d: &ZxDiagram, v: V) -> Option<(V, EdgeKind)> {
    if !d.contains(v) || d.kind(v) != VertexKind::Z {
        return None;
    }
    let mut it = d.incident(v).filter(|&(w, _)| d.is_boundary(w));
    let first = it.next()?;
    it.next().is_none().then_some(first)
}

/// An interior spider of degree one hanging off a Z spider.
pub fn is_leaf(d: &ZxDiagram, v: V) -> bool {
    is_interior(d, v) && d.degree(v) == 1
}

/// A spider with at least one leaf neighbour.
pub fn has_leaf(d: &ZxDiagram, v: V) -> bool {
    d.neighbors(v).any(|w| is_leaf(d, w))
}

/// The hub of the phase gadget whose leaf is `leaf`: an interior spider
/// with Pauli phase joined to `leaf` by a Hadamard edge and to no other
/// leaf.
pub fn gadget_hub(d: &ZxDiagram, leaf: V) -> Option<V> {
    if !is_leaf(d, leaf) {
        return None;
    }
    let (h, k) = d.incident(leaf).next()?;
    let ok = k == EdgeKind::Hadamard
        && is_interior(d, h)
        && d.phase(h).is_pauli()
        && d.degree(h) >= 2
        && d.neighbors(h).filter(|&w| is_leaf(d, w)).count() == 1;
    ok.then_some(h)
}

/// `(leaf, hub)` of every phase gadget, by ascending leaf id.
pub fn gadgets(d: &ZxDiagram) -> Vec<(V, V)> {
    d.vertices().filter_map(|l| gadget_hub(d, l).map(|h| (l, h))).collect()
}

