//! Closed curves and paths as arc sequences, with turn sequences,
//! canonical forms and elementary homotopies.
//!
//! For a closed walk `c` of length `L`, `c[i, i+1]` is the arc at index
//! `i mod L` and `c(i)` is its origin.

mod canonical;
mod moves;
mod strings;
mod turns;

pub(crate) use canonical::canonical_path_arcs;
pub use canonical::{canonicalize, freely_homotopic, leftmost_canonical, path_homotopic, primitive_root};
pub use moves::{apply_move, ElementaryMove};
pub(crate) use strings::z_function;
pub use strings::{cyclic_equal, cyclic_shift_of, least_rotation, smallest_period};
pub use turns::{is_canonical, is_geodesic, turn_sequence, turns, TurnSequence};

use crate::error::{Error, Result};
use crate::surface::{twin, ArcId, CombinatorialSurface, VertexId};
use std::fmt::Write as _;

/// A closed walk or a path on a combinatorial surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    arcs: Vec<ArcId>,
    closed: bool,
    start: VertexId,
    end: VertexId,
}

impl Walk {
    /// A closed walk; `arcs` must be non-empty, incident and close up.
    pub fn closed(surface: &CombinatorialSurface, arcs: Vec<ArcId>) -> Result<Walk> {
        if arcs.is_empty() {
            return Err(Error::InvalidWalk("a closed walk needs at least one arc, use a trivial walk".into()));
        }
        check_arcs(surface, &arcs)?;
        let start = surface.origin(arcs[0]);
        if surface.target(*arcs.last().unwrap()) != start {
            return Err(Error::InvalidWalk("closed walk does not return to its first vertex".into()));
        }
        Ok(Walk { arcs, closed: true, start, end: start })
    }

    /// The constant closed walk at `v`.
    pub fn trivial(v: VertexId) -> Walk {
        Walk { arcs: Vec::new(), closed: true, start: v, end: v }
    }

    /// A path starting at `start`; `arcs` may be empty.
    pub fn path(surface: &CombinatorialSurface, arcs: Vec<ArcId>, start: VertexId) -> Result<Walk> {
        if start >= surface.vertex_count() {
            return Err(Error::InvalidWalk(format!("vertex index {start} out of range")));
        }
        check_arcs(surface, &arcs)?;
        if let Some(&first) = arcs.first() {
            if surface.origin(first) != start {
                return Err(Error::InvalidWalk("path does not start at its declared vertex".into()));
            }
        }
        let end = arcs.last().map_or(start, |&a| surface.target(a));
        Ok(Walk { arcs, closed: false, start, end })
    }

    pub(crate) fn closed_unchecked(arcs: Vec<ArcId>, start: VertexId) -> Walk {
        Walk { arcs, closed: true, start, end: start }
    }

    pub(crate) fn path_unchecked(arcs: Vec<ArcId>, start: VertexId, end: VertexId) -> Walk {
        Walk { arcs, closed: false, start, end }
    }

    /// Rebuilds a closed walk from arcs known to be incident; an empty
    /// sequence yields the trivial walk at `fallback`.
    pub(crate) fn closed_from(surface: &CombinatorialSurface, arcs: Vec<ArcId>, fallback: VertexId) -> Walk {
        let start = arcs.first().map_or(fallback, |&a| surface.origin(a));
        Walk { arcs, closed: true, start, end: start }
    }

    pub fn arcs(&self) -> &[ArcId] {
        &self.arcs
    }

    pub fn into_arcs(self) -> Vec<ArcId> {
        self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn is_trivial(&self) -> bool {
        self.closed && self.arcs.is_empty()
    }

    /// First vertex (the basepoint of a closed walk).
    pub fn base(&self) -> VertexId {
        self.start
    }

    /// Last vertex; equals [`base`](Self::base) for closed walks.
    pub fn end(&self) -> VertexId {
        self.end
    }

    /// The arc `c[i, i+1]`, indices taken modulo the length of a closed walk.
    #[inline]
    pub fn arc(&self, i: i64) -> ArcId {
        let n = self.arcs.len() as i64;
        self.arcs[i.rem_euclid(n) as usize]
    }

    /// The vertex `c(i)`.
    pub fn vertex(&self, surface: &CombinatorialSurface, i: i64) -> VertexId {
        if self.arcs.is_empty() {
            return self.start;
        }
        if !self.closed && i == self.arcs.len() as i64 {
            return self.end;
        }
        surface.origin(self.arc(i))
    }

    pub fn inverse(&self) -> Walk {
        let arcs = self.arcs.iter().rev().map(|&a| twin(a)).collect();
        Walk { arcs, closed: self.closed, start: self.end, end: self.start }
    }

    /// The `k`-th power of a closed walk.
    pub fn power(&self, k: usize) -> Walk {
        assert!(self.closed, "powers are defined for closed walks only");
        let mut arcs = Vec::with_capacity(self.arcs.len() * k);
        for _ in 0..k {
            arcs.extend_from_slice(&self.arcs);
        }
        Walk { arcs, closed: true, start: self.start, end: self.start }
    }

    /// The closed walk read from index `k` on.
    pub fn rotated(&self, surface: &CombinatorialSurface, k: i64) -> Walk {
        if self.arcs.is_empty() || !self.closed {
            return self.clone();
        }
        let n = self.arcs.len();
        let k = k.rem_euclid(n as i64) as usize;
        let mut arcs = Vec::with_capacity(n);
        arcs.extend_from_slice(&self.arcs[k..]);
        arcs.extend_from_slice(&self.arcs[..k]);
        let start = surface.origin(arcs[0]);
        Walk { arcs, closed: true, start, end: start }
    }

    /// Checks that the walk is a valid walk of `surface`.
    pub fn validate(&self, surface: &CombinatorialSurface) -> Result<()> {
        if self.start >= surface.vertex_count() || self.end >= surface.vertex_count() {
            return Err(Error::InvalidWalk("walk vertex out of range".into()));
        }
        check_arcs(surface, &self.arcs)?;
        if let (Some(&first), Some(&last)) = (self.arcs.first(), self.arcs.last()) {
            if surface.origin(first) != self.start || surface.target(last) != self.end {
                return Err(Error::InvalidWalk("walk endpoints do not match its arcs".into()));
            }
        }
        if self.closed && self.start != self.end {
            return Err(Error::InvalidWalk("closed walk does not close up".into()));
        }
        Ok(())
    }

    /// Parses a closed curve: signed edge ids, or `@<vertex>` for a trivial walk.
    pub fn parse(surface: &CombinatorialSurface, text: &str) -> Result<Walk> {
        let words: Vec<&str> = text.split_whitespace().collect();
        if words.len() == 1 && words[0].starts_with('@') {
            let label: i64 =
                words[0][1..].parse().map_err(|_| Error::InvalidWalk(format!("bad vertex `{}`", words[0])))?;
            let v = surface
                .vertex_from_label(label)
                .ok_or_else(|| Error::InvalidWalk(format!("unknown vertex {label}")))?;
            return Ok(Walk::trivial(v));
        }
        if words.is_empty() {
            return Err(Error::InvalidWalk("empty curve; write `@<vertex>` for a trivial curve".into()));
        }
        let index = surface.edge_index();
        let mut arcs = Vec::with_capacity(words.len());
        for w in words {
            let label: i64 = w.parse().map_err(|_| Error::InvalidWalk(format!("bad arc `{w}`")))?;
            let e = *index
                .get(&label.abs())
                .filter(|_| label != 0)
                .ok_or_else(|| Error::InvalidWalk(format!("unknown edge {label}")))?;
            arcs.push(2 * e + usize::from(label < 0));
        }
        Walk::closed(surface, arcs)
    }

    /// Formats the walk in the curve text format.
    pub fn format(&self, surface: &CombinatorialSurface) -> String {
        if self.arcs.is_empty() {
            return format!("@{}", surface.vertex_label(self.start));
        }
        let mut out = String::new();
        for (k, &a) in self.arcs.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", surface.arc_label(a));
        }
        out
    }
}

fn check_arcs(surface: &CombinatorialSurface, arcs: &[ArcId]) -> Result<()> {
    for (k, &a) in arcs.iter().enumerate() {
        if a >= surface.arc_count() {
            return Err(Error::InvalidWalk(format!("arc index {a} out of range")));
        }
        if k > 0 && surface.target(arcs[k - 1]) != surface.origin(a) {
            return Err(Error::InvalidWalk(format!(
                "arcs {} and {} are not consecutive",
                surface.arc_label(arcs[k - 1]),
                surface.arc_label(a)
            )));
        }
    }
    Ok(())
}
