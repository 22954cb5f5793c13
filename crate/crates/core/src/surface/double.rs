use super::{twin, ArcId, CombinatorialSurface};
use crate::error::Result;

/// Glues a surface with perforated faces to its mirror image along the
/// boundary, producing a closed surface.
///
/// Arcs of the original surface keep their ids in the result. The mirror
/// copy of arc `a` is `a + 2E`. Each corner of a perforated face gets a tube
/// edge joining the corner to its mirror, so every perforated face of length
/// `m` becomes a ring of `m` quadrilaterals.
pub fn double_along_boundary(surface: &CombinatorialSurface) -> Result<CombinatorialSurface> {
    let arc_count = surface.arc_count();
    let edge_count = surface.edge_count();
    let vertex_count = surface.vertex_count();
    let mirror = |a: ArcId| a + arc_count;

    // One tube edge per arc of a perforated face, attached at the corner that
    // follows the arc along the face.
    let mut tube_of = vec![usize::MAX; arc_count];
    let mut tube_count = 0;
    for a in 0..arc_count {
        if surface.is_perforated(surface.face_of(a)) {
            tube_of[a] = 2 * edge_count + tube_count;
            tube_count += 1;
        }
    }
    let total_edges = 2 * edge_count + tube_count;

    let max_edge = surface.edge_labels().iter().copied().max().unwrap_or(0);
    let max_vertex = surface.vertex_labels().iter().map(|l| l.abs()).max().unwrap_or(0);
    let mut edge_labels = Vec::with_capacity(total_edges);
    edge_labels.extend_from_slice(surface.edge_labels());
    edge_labels.extend(surface.edge_labels().iter().map(|l| l + max_edge));
    edge_labels.extend((0..tube_count).map(|k| 2 * max_edge + 1 + k as i64));
    let mut vertex_labels = Vec::with_capacity(2 * vertex_count);
    vertex_labels.extend_from_slice(surface.vertex_labels());
    vertex_labels.extend(surface.vertex_labels().iter().map(|l| l + max_vertex + 1));

    let mut endpoints = Vec::with_capacity(total_edges);
    let original = surface.endpoints();
    endpoints.extend_from_slice(&original);
    endpoints.extend(original.iter().map(|&(f, t)| (f + vertex_count, t + vertex_count)));
    let mut tube_endpoints = vec![(0, 0); tube_count];
    for a in 0..arc_count {
        if tube_of[a] != usize::MAX {
            let u = surface.target(a);
            tube_endpoints[tube_of[a] - 2 * edge_count] = (u, u + vertex_count);
        }
    }
    endpoints.extend_from_slice(&tube_endpoints);

    let mut rotations = vec![Vec::new(); 2 * vertex_count];
    for v in 0..vertex_count {
        let rot = surface.rotation(v);
        let upper = &mut rotations[v];
        for &x in rot {
            upper.push(x);
            let b = twin(x);
            if tube_of[b] != usize::MAX {
                upper.push(2 * tube_of[b]);
            }
        }
        let lower = &mut rotations[v + vertex_count];
        for &y in rot.iter().rev() {
            lower.push(mirror(y));
            let b = twin(surface.prev_around_vertex(y));
            if tube_of[b] != usize::MAX {
                lower.push(2 * tube_of[b] + 1);
            }
        }
    }
    CombinatorialSurface::from_rotations(edge_labels, vertex_labels, &endpoints, rotations, &[])
}
