use super::{edge_of, twin, ArcId, CombinatorialSurface, FaceId, VertexId};
use crate::error::{Error, Result};
use std::collections::VecDeque;

/// A closed surface quadrangulated so that every face has four sides, the
/// graph is bipartite and every vertex has degree at least eight.
#[derive(Clone, Debug)]
pub struct QuadSystem {
    surface: CombinatorialSurface,
}

impl QuadSystem {
    /// Validates the quad system invariants on `surface`.
    pub fn new(surface: CombinatorialSurface) -> Result<Self> {
        for f in 0..surface.face_count() {
            if surface.is_perforated(f) {
                return Err(Error::NotQuadSystem("perforated faces are not allowed".into()));
            }
            let walk = surface.face_walk(f);
            if walk.len() != 4 {
                return Err(Error::NotQuadSystem(format!("face {f} has {} sides", walk.len())));
            }
            for x in 0..4 {
                for y in (x + 1)..4 {
                    if edge_of(walk[x]) == edge_of(walk[y]) {
                        return Err(Error::NotQuadSystem(format!("face {f} uses an edge twice")));
                    }
                }
            }
        }
        for v in 0..surface.vertex_count() {
            if surface.degree(v) < 8 {
                return Err(Error::NotQuadSystem(format!(
                    "vertex {} has degree {}",
                    surface.vertex_label(v),
                    surface.degree(v)
                )));
            }
        }
        let mut color = vec![u8::MAX; surface.vertex_count()];
        if !color.is_empty() {
            color[0] = 0;
            let mut queue = VecDeque::from([0usize]);
            while let Some(v) = queue.pop_front() {
                for &a in surface.rotation(v) {
                    let w = surface.target(a);
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return Err(Error::NotQuadSystem("graph is not bipartite".into()));
                    }
                }
            }
        }
        Ok(QuadSystem { surface })
    }

    pub fn surface(&self) -> &CombinatorialSurface {
        &self.surface
    }

    pub fn into_surface(self) -> CombinatorialSurface {
        self.surface
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.surface.degree(v)
    }

    #[inline]
    pub fn origin(&self, a: ArcId) -> VertexId {
        self.surface.origin(a)
    }

    #[inline]
    pub fn target(&self, a: ArcId) -> VertexId {
        self.surface.target(a)
    }

    #[inline]
    pub fn rotate(&self, a: ArcId, k: i64) -> ArcId {
        self.surface.rotate(a, k)
    }

    #[inline]
    pub fn face_next(&self, a: ArcId) -> ArcId {
        self.surface.face_next(a)
    }

    #[inline]
    pub fn face_of(&self, a: ArcId) -> FaceId {
        self.surface.face_of(a)
    }

    pub fn arc_count(&self) -> usize {
        self.surface.arc_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.surface.vertex_count()
    }

    /// Turn from `a1` to `a2`, two arcs leaving the same vertex.
    pub fn turn(&self, a1: ArcId, a2: ArcId) -> Result<i64> {
        if self.origin(a1) != self.origin(a2) {
            return Err(Error::Precondition(format!(
                "arcs {} and {} do not share their origin",
                self.surface.arc_label(a1),
                self.surface.arc_label(a2)
            )));
        }
        Ok(self.turn_unchecked(a1, a2))
    }

    /// Turn from `a1` to `a2` as a representative in `(-d/2, d/2]`.
    #[inline]
    pub fn turn_unchecked(&self, a1: ArcId, a2: ArcId) -> i64 {
        let d = self.degree(self.origin(a1)) as i64;
        let raw =
            (self.surface.position_in_rotation(a2) as i64 - self.surface.position_in_rotation(a1) as i64).rem_euclid(d);
        if 2 * raw > d {
            raw - d
        } else {
            raw
        }
    }

    /// Turn at the vertex between consecutive arcs `incoming` and `outgoing`.
    #[inline]
    pub fn turn_between(&self, incoming: ArcId, outgoing: ArcId) -> i64 {
        self.turn_unchecked(twin(incoming), outgoing)
    }

    /// Whether going clockwise from `a` one meets `b` strictly before `c`.
    #[inline]
    pub fn clockwise(&self, a: ArcId, b: ArcId, c: ArcId) -> bool {
        let d = self.degree(self.origin(a)) as i64;
        let pa = self.surface.position_in_rotation(a) as i64;
        let pb = (self.surface.position_in_rotation(b) as i64 - pa).rem_euclid(d);
        let pc = (self.surface.position_in_rotation(c) as i64 - pa).rem_euclid(d);
        pb < pc
    }
}
