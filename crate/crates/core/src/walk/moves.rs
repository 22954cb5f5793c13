use super::Walk;
use crate::error::{Error, Result};
use crate::surface::{twin, ArcId, CombinatorialSurface};

/// An elementary homotopy of a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementaryMove {
    /// Insert `(arc, twin(arc))` before index `index`.
    InsertSpur { index: usize, arc: ArcId },
    /// Remove the spur made of the arcs at `index` and `index + 1`.
    RemoveSpur { index: usize },
    /// Replace the `len` arcs from `index`, which must follow the face to the
    /// left of `face_arc` starting with `face_arc`, by the rest of the face
    /// walked backwards.
    ReplaceFacePart { index: usize, len: usize, face_arc: ArcId },
}

/// Applies an elementary move. Closed walks are read cyclically; the result
/// of a move that wraps around index 0 starts at `index`.
pub fn apply_move(surface: &CombinatorialSurface, w: &Walk, mv: ElementaryMove) -> Result<Walk> {
    let n = w.len();
    let bad = |msg: &str| Error::Precondition(format!("inapplicable move {mv:?}: {msg}"));
    match mv {
        ElementaryMove::InsertSpur { index, arc } => {
            let limit = if w.is_closed() { n.max(1) } else { n + 1 };
            if index >= limit || arc >= surface.arc_count() {
                return Err(bad("index or arc out of range"));
            }
            if w.vertex(surface, index as i64) != surface.origin(arc) {
                return Err(bad("arc does not leave the vertex at that index"));
            }
            let mut arcs = w.arcs().to_vec();
            arcs.splice(index..index, [arc, twin(arc)]);
            rebuild(surface, w, arcs)
        }
        ElementaryMove::RemoveSpur { index } => {
            if n < 2 || index >= n || (!w.is_closed() && index + 1 >= n) {
                return Err(bad("index out of range"));
            }
            let next = (index + 1) % n;
            if w.arcs()[next] != twin(w.arcs()[index]) {
                return Err(bad("no spur at that index"));
            }
            if w.is_closed() {
                let fallback = surface.target(w.arcs()[index]);
                let arcs: Vec<ArcId> = (0..n).filter(|&k| k != index && k != next).map(|k| w.arcs()[k]).collect();
                Ok(Walk::closed_from(surface, arcs, fallback))
            } else {
                let mut arcs = w.arcs().to_vec();
                arcs.drain(index..index + 2);
                rebuild(surface, w, arcs)
            }
        }
        ElementaryMove::ReplaceFacePart { index, len, face_arc } => {
            if face_arc >= surface.arc_count() {
                return Err(bad("arc out of range"));
            }
            let f = surface.face_of(face_arc);
            if surface.is_perforated(f) {
                return Err(bad("face is perforated"));
            }
            let flen = surface.face_len(f);
            if len > flen || len > n || (!w.is_closed() && index + len > n) || (n > 0 && index >= n && len > 0) {
                return Err(bad("part does not fit"));
            }
            let limit = if w.is_closed() { n.max(1) } else { n + 1 };
            if index >= limit {
                return Err(bad("index out of range"));
            }
            if w.vertex(surface, index as i64) != surface.origin(face_arc) {
                return Err(bad("face does not start at that vertex"));
            }
            let mut face = Vec::with_capacity(flen);
            let mut a = face_arc;
            for _ in 0..flen {
                face.push(a);
                a = surface.face_next(a);
            }
            for m in 0..len {
                if w.arc((index + m) as i64) != face[m] {
                    return Err(bad("walk does not follow the face"));
                }
            }
            let complement: Vec<ArcId> = (1..=flen - len).map(|m| twin(face[(flen - m) % flen])).collect();
            if w.is_closed() {
                let rotated = if n == 0 { w.clone() } else { w.rotated(surface, index as i64) };
                let mut arcs = complement;
                arcs.extend_from_slice(&rotated.arcs()[len..]);
                Ok(Walk::closed_from(surface, arcs, surface.origin(face_arc)))
            } else {
                let mut arcs = w.arcs().to_vec();
                arcs.splice(index..index + len, complement);
                rebuild(surface, w, arcs)
            }
        }
    }
}

fn rebuild(surface: &CombinatorialSurface, w: &Walk, arcs: Vec<ArcId>) -> Result<Walk> {
    if w.is_closed() {
        Ok(Walk::closed_from(surface, arcs, w.base()))
    } else {
        Walk::path(surface, arcs, w.base())
    }
}
