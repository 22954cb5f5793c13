//! Combinatorial surfaces: graphs with a rotation system and perforated faces.
//!
//! Edge `e` owns arcs `2e` (from its first endpoint to its second) and
//! `2e + 1` (the reverse), so the twin of an arc is `a ^ 1`. Rotations list
//! the arcs leaving a vertex in clockwise order. The face to the left of an
//! arc `a` is traced by `face_next(a) = next_around_vertex(twin(a))`.

mod double;
pub mod fixtures;
mod parse;
mod quad;
mod reduce;
mod transport;

pub use double::double_along_boundary;
pub use parse::{format_surface, parse_surface, SurfaceSpec};
pub use quad::QuadSystem;
pub use reduce::{reduce_to_one_face, ArcChord, Reduction};
pub use transport::{quadify, CurveTransport, EdgeOperation};

use crate::error::{Error, Result};
use std::collections::VecDeque;

pub type ArcId = usize;
pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[inline]
pub fn twin(a: ArcId) -> ArcId {
    a ^ 1
}

#[inline]
pub fn edge_of(a: ArcId) -> EdgeId {
    a >> 1
}

/// Topological type of a surface, as used to dispatch the counting pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Topology {
    Sphere,
    Disk,
    Annulus,
    Torus,
    /// Negative Euler characteristic once boundary components are removed.
    Hyperbolic,
}

#[derive(Clone, Debug)]
pub struct CombinatorialSurface {
    edge_labels: Vec<i64>,
    vertex_labels: Vec<i64>,
    origin: Vec<VertexId>,
    next: Vec<ArcId>,
    prev: Vec<ArcId>,
    position: Vec<u32>,
    rotation_start: Vec<usize>,
    rotation_arcs: Vec<ArcId>,
    face_of: Vec<FaceId>,
    face_rep: Vec<ArcId>,
    face_len: Vec<usize>,
    perforated: Vec<bool>,
}

impl CombinatorialSurface {
    /// Builds a surface from internal arc numbering.
    ///
    /// `endpoints[e]` gives the origin of arc `2e` and of arc `2e + 1`;
    /// `rotations[v]` lists the arcs leaving `v` clockwise; `perforated_arcs`
    /// marks the faces to the left of the given arcs.
    pub fn from_rotations(
        edge_labels: Vec<i64>,
        vertex_labels: Vec<i64>,
        endpoints: &[(VertexId, VertexId)],
        rotations: Vec<Vec<ArcId>>,
        perforated_arcs: &[ArcId],
    ) -> Result<Self> {
        let edge_count = endpoints.len();
        let arc_count = 2 * edge_count;
        let vertex_count = vertex_labels.len();
        if edge_labels.len() != edge_count {
            return Err(Error::InvalidRotation("edge label count mismatch".into()));
        }
        if rotations.len() != vertex_count {
            return Err(Error::InvalidRotation("one rotation per vertex is required".into()));
        }
        let mut origin = vec![usize::MAX; arc_count];
        for (e, &(from, to)) in endpoints.iter().enumerate() {
            if from >= vertex_count || to >= vertex_count {
                return Err(Error::InvalidRotation(format!("edge {} has an unknown endpoint", edge_labels[e])));
            }
            origin[2 * e] = from;
            origin[2 * e + 1] = to;
        }
        let mut next = vec![usize::MAX; arc_count];
        let mut prev = vec![usize::MAX; arc_count];
        let mut position = vec![0u32; arc_count];
        let mut seen = vec![false; arc_count];
        let mut rotation_start = Vec::with_capacity(vertex_count + 1);
        let mut rotation_arcs = Vec::with_capacity(arc_count);
        for (v, rot) in rotations.iter().enumerate() {
            rotation_start.push(rotation_arcs.len());
            if rot.is_empty() && edge_count > 0 {
                return Err(Error::InvalidRotation(format!("vertex {} has an empty rotation", vertex_labels[v])));
            }
            for (k, &a) in rot.iter().enumerate() {
                if a >= arc_count {
                    return Err(Error::InvalidRotation(format!("arc index {a} out of range")));
                }
                if seen[a] {
                    return Err(Error::DuplicateArc(signed_label(&edge_labels, a)));
                }
                seen[a] = true;
                if origin[a] != v {
                    return Err(Error::InvalidRotation(format!(
                        "arc {} does not leave vertex {}",
                        signed_label(&edge_labels, a),
                        vertex_labels[v]
                    )));
                }
                let succ = rot[(k + 1) % rot.len()];
                next[a] = succ;
                prev[succ] = a;
                position[a] = k as u32;
                rotation_arcs.push(a);
            }
        }
        rotation_start.push(rotation_arcs.len());
        if let Some(a) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidRotation(format!(
                "arc {} is missing from the rotation of its origin",
                signed_label(&edge_labels, a)
            )));
        }

        let mut surface = CombinatorialSurface {
            edge_labels,
            vertex_labels,
            origin,
            next,
            prev,
            position,
            rotation_start,
            rotation_arcs,
            face_of: Vec::new(),
            face_rep: Vec::new(),
            face_len: Vec::new(),
            perforated: Vec::new(),
        };
        surface.check_connected()?;
        surface.compute_faces();
        for &a in perforated_arcs {
            if a >= arc_count {
                return Err(Error::UnknownPerforation(a as i64));
            }
            let f = surface.face_of[a];
            surface.perforated[f] = true;
        }
        Ok(surface)
    }

    fn check_connected(&self) -> Result<()> {
        let n = self.vertex_count();
        if n == 0 {
            return Ok(());
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &a in self.rotation(v) {
                let w = self.target(a);
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached == n {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    fn compute_faces(&mut self) {
        let arc_count = self.arc_count();
        let mut face_of = vec![usize::MAX; arc_count];
        let mut face_rep = Vec::new();
        let mut face_len = Vec::new();
        for start in 0..arc_count {
            if face_of[start] != usize::MAX {
                continue;
            }
            let f = face_rep.len();
            let mut a = start;
            let mut len = 0;
            loop {
                face_of[a] = f;
                len += 1;
                a = self.face_next(a);
                if a == start {
                    break;
                }
            }
            face_rep.push(start);
            face_len.push(len);
        }
        self.perforated = vec![false; face_rep.len()];
        self.face_of = face_of;
        self.face_rep = face_rep;
        self.face_len = face_len;
    }

    pub fn arc_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_rep.len()
    }

    #[inline]
    pub fn origin(&self, a: ArcId) -> VertexId {
        self.origin[a]
    }

    #[inline]
    pub fn target(&self, a: ArcId) -> VertexId {
        self.origin[a ^ 1]
    }

    /// Clockwise successor of `a` around its origin.
    #[inline]
    pub fn next_around_vertex(&self, a: ArcId) -> ArcId {
        self.next[a]
    }

    /// Counterclockwise successor of `a` around its origin.
    #[inline]
    pub fn prev_around_vertex(&self, a: ArcId) -> ArcId {
        self.prev[a]
    }

    /// Arc following `a` along the face to its left.
    #[inline]
    pub fn face_next(&self, a: ArcId) -> ArcId {
        self.next[a ^ 1]
    }

    #[inline]
    pub fn position_in_rotation(&self, a: ArcId) -> usize {
        self.position[a] as usize
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation_start[v + 1] - self.rotation_start[v]
    }

    /// Arcs leaving `v`, clockwise.
    #[inline]
    pub fn rotation(&self, v: VertexId) -> &[ArcId] {
        &self.rotation_arcs[self.rotation_start[v]..self.rotation_start[v + 1]]
    }

    /// Arc at clockwise offset `k` from `a` around their common origin.
    #[inline]
    pub fn rotate(&self, a: ArcId, k: i64) -> ArcId {
        let v = self.origin[a];
        let d = self.degree(v) as i64;
        let p = (self.position[a] as i64 + k).rem_euclid(d) as usize;
        self.rotation_arcs[self.rotation_start[v] + p]
    }

    #[inline]
    pub fn face_of(&self, a: ArcId) -> FaceId {
        self.face_of[a]
    }

    pub fn face_representative(&self, f: FaceId) -> ArcId {
        self.face_rep[f]
    }

    pub fn face_len(&self, f: FaceId) -> usize {
        self.face_len[f]
    }

    /// Facial walk of `f`, starting at its representative arc.
    pub fn face_walk(&self, f: FaceId) -> Vec<ArcId> {
        let start = self.face_rep[f];
        let mut walk = Vec::with_capacity(self.face_len[f]);
        let mut a = start;
        loop {
            walk.push(a);
            a = self.face_next(a);
            if a == start {
                break;
            }
        }
        walk
    }

    pub fn is_perforated(&self, f: FaceId) -> bool {
        self.perforated[f]
    }

    pub fn perforated_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.face_count()).filter(move |&f| self.perforated[f])
    }

    pub fn boundary_count(&self) -> usize {
        self.perforated.iter().filter(|&&p| p).count()
    }

    /// `V − E + F` counting every face, perforated or not.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn genus(&self) -> usize {
        ((2 - self.euler_characteristic()) / 2) as usize
    }

    /// Euler characteristic of the surface with the perforated faces removed.
    pub fn surface_euler_characteristic(&self) -> i64 {
        self.euler_characteristic() - self.boundary_count() as i64
    }

    pub fn topology(&self) -> Topology {
        match (self.genus(), self.boundary_count()) {
            (0, 0) => Topology::Sphere,
            (0, 1) => Topology::Disk,
            (0, 2) => Topology::Annulus,
            (1, 0) => Topology::Torus,
            _ => Topology::Hyperbolic,
        }
    }

    pub fn edge_label(&self, e: EdgeId) -> i64 {
        self.edge_labels[e]
    }

    pub fn vertex_label(&self, v: VertexId) -> i64 {
        self.vertex_labels[v]
    }

    pub fn edge_labels(&self) -> &[i64] {
        &self.edge_labels
    }

    pub fn vertex_labels(&self) -> &[i64] {
        &self.vertex_labels
    }

    /// Signed external id of an arc: `+id` for the forward arc, `-id` otherwise.
    pub fn arc_label(&self, a: ArcId) -> i64 {
        signed_label(&self.edge_labels, a)
    }

    /// Inverse of [`arc_label`](Self::arc_label).
    pub fn arc_from_label(&self, label: i64) -> Option<ArcId> {
        if label == 0 {
            return None;
        }
        let e = self.edge_labels.iter().position(|&l| l == label.abs())?;
        Some(2 * e + usize::from(label < 0))
    }

    /// Lookup table from external edge id to internal index.
    pub fn edge_index(&self) -> std::collections::HashMap<i64, EdgeId> {
        self.edge_labels.iter().enumerate().map(|(e, &l)| (l, e)).collect()
    }

    pub fn vertex_from_label(&self, label: i64) -> Option<VertexId> {
        self.vertex_labels.iter().position(|&l| l == label)
    }

    pub fn endpoints(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.edge_count()).map(|e| (self.origin[2 * e], self.origin[2 * e + 1])).collect()
    }

    pub fn rotations(&self) -> Vec<Vec<ArcId>> {
        (0..self.vertex_count()).map(|v| self.rotation(v).to_vec()).collect()
    }
}

fn signed_label(edge_labels: &[i64], a: ArcId) -> i64 {
    let l = edge_labels[a >> 1];
    if a & 1 == 0 {
        l
    } else {
        -l
    }
}
