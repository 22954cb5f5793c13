//! Annular diagrams between the rightmost and leftmost canonical forms of a
//! closed curve, and partial diagrams of thick double paths.
//!
//! Both constructions track a *connector*: the canonical path joining two
//! vertices that face each other across the diagram. Along a diagram of
//! width at most one, a connector is either empty (the vertices coincide)
//! or two consecutive arcs of a quad with turn 1 (the vertices are
//! diagonally opposite).

mod annular;
mod partial;

pub use annular::{annular_diagram, diagram_problems, verify_diagram, AnnularDiagram, Relation, Spoke};
pub use partial::{maximal_partial_diagrams, Configuration, PartialDiagram};

use crate::surface::{twin, ArcId, QuadSystem, VertexId};
use crate::walk::canonical_path_arcs;

/// Canonical path between two vertices that face each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connector {
    Trivial,
    Diagonal([ArcId; 2]),
}

impl Connector {
    pub fn arcs(&self) -> &[ArcId] {
        match self {
            Connector::Trivial => &[],
            Connector::Diagonal(a) => a,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Connector::Trivial)
    }

    fn from_canonical(q: &QuadSystem, arcs: &[ArcId]) -> Option<Connector> {
        match *arcs {
            [] => Some(Connector::Trivial),
            [a, b] if q.turn_between(a, b) == 1 => Some(Connector::Diagonal([a, b])),
            _ => None,
        }
    }

    /// Candidate connectors from `u` to `v`, the trivial one first.
    pub(crate) fn candidates(q: &QuadSystem, u: VertexId, v: VertexId) -> Vec<Connector> {
        let mut out = Vec::new();
        if u == v {
            out.push(Connector::Trivial);
        }
        for &e in q.surface().rotation(u) {
            let f = q.face_next(e);
            if q.target(f) == v {
                out.push(Connector::Diagonal([e, f]));
            }
        }
        out
    }
}

/// Connector between the ends of `before` and `after`, given the connector
/// between their starts: canonical form of `before⁻¹ · g · after`.
pub(crate) fn advance(q: &QuadSystem, g: Connector, before: ArcId, after: ArcId) -> Option<Connector> {
    let mut path = Vec::with_capacity(4);
    path.push(twin(before));
    path.extend_from_slice(g.arcs());
    path.push(after);
    let start = q.target(before);
    let canon = canonical_path_arcs(q, path, start).ok()?;
    Connector::from_canonical(q, &canon)
}

/// Canonical form of `g · extra` as arcs.
pub(crate) fn extend_by(q: &QuadSystem, g: Connector, extra: ArcId) -> Vec<ArcId> {
    let mut path = Vec::with_capacity(3);
    path.extend_from_slice(g.arcs());
    path.push(extra);
    let start = q.origin(path[0]);
    canonical_path_arcs(q, path, start).unwrap_or_default()
}
