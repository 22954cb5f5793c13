use super::{twin, ArcId, CombinatorialSurface, EdgeId};
use std::collections::VecDeque;

/// Where an arc of the source surface ends up after reduction to a single
/// vertex and a single face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcChord {
    /// The arc belonged to the contracted spanning tree.
    Contracted,
    /// The arc is (homotopic to) a chord of the single face, leaving the
    /// vertex in corner `start` and entering it in corner `end`.
    Chord { start: usize, end: usize },
}

/// Result of contracting a spanning tree and deleting edges until a single
/// vertex and a single face remain.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub tree_edges: Vec<EdgeId>,
    pub deleted_edges: Vec<EdgeId>,
    pub kept_edges: Vec<EdgeId>,
    /// Kept arcs in clockwise order around the single vertex.
    pub rotation: Vec<ArcId>,
    /// The single facial walk of the reduced map.
    pub face_walk: Vec<ArcId>,
    /// `corner_after[x]` is the index of the corner between kept arc `x` and
    /// its clockwise successor; corner `k` follows `face_walk[k]`.
    pub corner_after: Vec<usize>,
    /// One entry per arc of the source surface.
    pub chords: Vec<ArcChord>,
}

/// Reduces a closed surface to one vertex and one face.
///
/// The spanning tree is a breadth-first tree from vertex 0 that scans arcs in
/// increasing id order; non-tree edges are deleted in id order whenever their
/// two sides lie in distinct faces.
pub fn reduce_to_one_face(surface: &CombinatorialSurface) -> Reduction {
    let arc_count = surface.arc_count();
    let edge_count = surface.edge_count();
    let vertex_count = surface.vertex_count();

    let mut is_tree = vec![false; edge_count];
    let mut tree_edges = Vec::with_capacity(vertex_count.saturating_sub(1));
    if vertex_count > 0 {
        let mut seen = vec![false; vertex_count];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut scratch = Vec::new();
        while let Some(v) = queue.pop_front() {
            scratch.clear();
            scratch.extend_from_slice(surface.rotation(v));
            scratch.sort_unstable();
            for &a in &scratch {
                let w = surface.target(a);
                if !seen[w] {
                    seen[w] = true;
                    is_tree[a >> 1] = true;
                    tree_edges.push(a >> 1);
                    queue.push_back(w);
                }
            }
        }
    }

    // Merged clockwise order of the non-tree arcs around the contracted vertex.
    let first_free = (0..arc_count).find(|&a| !is_tree[a >> 1]);
    let mut merged = Vec::with_capacity(arc_count - 2 * tree_edges.len());
    if let Some(start) = first_free {
        let mut a = start;
        loop {
            merged.push(a);
            let mut x = surface.next_around_vertex(a);
            while is_tree[x >> 1] {
                x = surface.next_around_vertex(twin(x));
            }
            a = x;
            if a == start {
                break;
            }
        }
    }

    let mut parent: Vec<usize> = (0..surface.face_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut kept = vec![false; edge_count];
    let mut deleted_edges = Vec::new();
    let mut kept_edges = Vec::new();
    for e in 0..edge_count {
        if is_tree[e] {
            continue;
        }
        let fa = find(&mut parent, surface.face_of(2 * e));
        let fb = find(&mut parent, surface.face_of(2 * e + 1));
        if fa != fb {
            parent[fa] = fb;
            deleted_edges.push(e);
        } else {
            kept[e] = true;
            kept_edges.push(e);
        }
    }

    let rotation: Vec<ArcId> = merged.iter().copied().filter(|&a| kept[a >> 1]).collect();
    let mut chords = vec![ArcChord::Contracted; arc_count];
    let mut corner_after = vec![usize::MAX; arc_count];
    let mut face_walk = Vec::with_capacity(rotation.len());
    if !rotation.is_empty() {
        let mut successor = vec![usize::MAX; arc_count];
        for k in 0..rotation.len() {
            successor[rotation[k]] = rotation[(k + 1) % rotation.len()];
        }
        let start = rotation[0];
        let mut a = start;
        loop {
            face_walk.push(a);
            corner_after[twin(a)] = face_walk.len() - 1;
            a = successor[twin(a)];
            if a == start {
                break;
            }
        }
        // For every merged arc, the kept arc at or counterclockwise before it.
        let n = merged.len();
        let mut at_or_before = vec![usize::MAX; arc_count];
        let mut last_kept = *rotation.last().unwrap_or(&usize::MAX);
        for &a in merged.iter() {
            if kept[a >> 1] {
                last_kept = a;
            }
            at_or_before[a] = last_kept;
        }
        for k in 0..n {
            let a = merged[k];
            let strictly_before = at_or_before[merged[(k + n - 1) % n]];
            let y = at_or_before[twin(a)];
            chords[a] = ArcChord::Chord { start: corner_after[strictly_before], end: corner_after[y] };
        }
    }

    Reduction { tree_edges, deleted_edges, kept_edges, rotation, face_walk, corner_after, chords }
}
