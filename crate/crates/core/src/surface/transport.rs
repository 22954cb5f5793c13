use super::{double_along_boundary, reduce_to_one_face, ArcChord, ArcId, CombinatorialSurface, EdgeId, QuadSystem};
use crate::error::{Error, Result};
use crate::walk::Walk;
use std::borrow::Cow;

/// One step of the reduction from a surface to its system of quads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOperation {
    /// The surface was glued to its mirror image along its boundary first.
    DoubleAlongBoundary,
    /// A spanning-tree edge was contracted; its arcs map to empty paths.
    Contract { edge: EdgeId },
    /// An edge separating two distinct faces (or, at the end, an original
    /// edge of the one-face map) was deleted; its arcs map through the face.
    Delete { edge: EdgeId },
    /// A radial edge of the quad system was inserted in the given corner.
    Insert { edge: EdgeId, corner: usize },
}

/// Maps walks on a source surface to homotopic walks on its quad system.
#[derive(Clone, Debug)]
pub struct CurveTransport {
    source_arc_count: usize,
    source_vertex_count: usize,
    operations: Vec<EdgeOperation>,
    image: Vec<Option<[ArcId; 2]>>,
    basepoint: usize,
}

impl CurveTransport {
    pub fn operations(&self) -> &[EdgeOperation] {
        &self.operations
    }

    /// Image of one source arc: empty or two arcs of the quad system.
    pub fn arc_image(&self, a: ArcId) -> &[ArcId] {
        match &self.image[a] {
            Some(pair) => pair,
            None => &[],
        }
    }

    /// Transports a walk; the result has at most twice as many arcs.
    pub fn transport_walk(&self, walk: &Walk) -> Result<Walk> {
        if walk.base() >= self.source_vertex_count {
            return Err(Error::InvalidWalk("walk does not live on the source surface".into()));
        }
        let mut arcs = Vec::with_capacity(2 * walk.len());
        for &a in walk.arcs() {
            if a >= self.source_arc_count {
                return Err(Error::InvalidWalk("walk does not live on the source surface".into()));
            }
            arcs.extend_from_slice(self.arc_image(a));
        }
        Ok(if walk.is_closed() {
            Walk::closed_unchecked(arcs, self.basepoint)
        } else {
            Walk::path_unchecked(arcs, self.basepoint, self.basepoint)
        })
    }
}

/// Builds the system of quads of a surface with negative Euler
/// characteristic, together with the transport of curves onto it.
///
/// Surfaces with perforated faces are first doubled along their boundary;
/// curves of the original surface keep their homotopy classes and
/// intersection numbers in the double.
pub fn quadify(surface: &CombinatorialSurface) -> Result<(QuadSystem, CurveTransport)> {
    if surface.surface_euler_characteristic() >= 0 {
        return Err(Error::UnsupportedSurface(format!(
            "a system of quads needs negative Euler characteristic, found {}",
            surface.surface_euler_characteristic()
        )));
    }
    let mut operations = Vec::new();
    let closed: Cow<CombinatorialSurface> = if surface.boundary_count() > 0 {
        operations.push(EdgeOperation::DoubleAlongBoundary);
        Cow::Owned(double_along_boundary(surface)?)
    } else {
        Cow::Borrowed(surface)
    };
    let reduction = reduce_to_one_face(&closed);
    operations.extend(reduction.tree_edges.iter().map(|&edge| EdgeOperation::Contract { edge }));
    operations.extend(reduction.deleted_edges.iter().map(|&edge| EdgeOperation::Delete { edge }));

    let corners = reduction.face_walk.len();
    operations.extend((0..corners).map(|k| EdgeOperation::Insert { edge: k, corner: k }));
    operations.extend(reduction.kept_edges.iter().map(|&edge| EdgeOperation::Delete { edge }));

    let rotation_v: Vec<ArcId> = reduction.rotation.iter().map(|&x| 2 * reduction.corner_after[x]).collect();
    let rotation_w: Vec<ArcId> = (0..corners).rev().map(|k| 2 * k + 1).collect();
    let endpoints = vec![(0usize, 1usize); corners];
    let quad_surface = CombinatorialSurface::from_rotations(
        (1..=corners as i64).collect(),
        vec![0, 1],
        &endpoints,
        vec![rotation_v, rotation_w],
        &[],
    )?;
    let quads = QuadSystem::new(quad_surface)?;

    let image = (0..surface.arc_count())
        .map(|a| match reduction.chords[a] {
            ArcChord::Contracted => None,
            ArcChord::Chord { start, end } => Some([2 * start, 2 * end + 1]),
        })
        .collect();
    let transport = CurveTransport {
        source_arc_count: surface.arc_count(),
        source_vertex_count: surface.vertex_count(),
        operations,
        image,
        basepoint: 0,
    };
    Ok((quads, transport))
}
