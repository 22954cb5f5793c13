//! Input generators shared by the benchmarks and the acceptance tests.

use curvecross::surface::{twin, ArcId, CombinatorialSurface, QuadSystem, VertexId};
use curvecross::walk::{canonicalize, smallest_period, Walk};
use rand::Rng;
use std::collections::VecDeque;

/// Arcs of a shortest path from `from` to `to`.
fn shortest_path(s: &CombinatorialSurface, from: VertexId, to: VertexId) -> Vec<ArcId> {
    let mut reached_by = vec![None; s.vertex_count()];
    let mut seen = vec![false; s.vertex_count()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &a in s.rotation(v) {
            let w = s.target(a);
            if !seen[w] {
                seen[w] = true;
                reached_by[w] = Some(a);
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while let Some(a) = reached_by[v] {
        path.push(a);
        v = s.origin(a);
    }
    path.reverse();
    path
}

/// Random walk of `len` arcs closed up by a shortest path home.
pub fn random_closed_walk<R: Rng>(s: &CombinatorialSurface, len: usize, rng: &mut R) -> Walk {
    let start = rng.gen_range(0..s.vertex_count());
    let mut arcs = Vec::with_capacity(len);
    let mut v = start;
    for _ in 0..len.max(1) {
        let r = s.rotation(v);
        let a = r[rng.gen_range(0..r.len())];
        arcs.push(a);
        v = s.target(a);
    }
    arcs.extend(shortest_path(s, v, start));
    Walk::closed(s, arcs).expect("random walk closes up")
}

/// Random walk of `len` arcs that avoids immediate backtracking, closed up
/// by a shortest path home.
pub fn random_reduced_walk<R: Rng>(s: &CombinatorialSurface, len: usize, rng: &mut R) -> Walk {
    let start = rng.gen_range(0..s.vertex_count());
    let mut arcs: Vec<ArcId> = Vec::with_capacity(len);
    let mut v = start;
    while arcs.len() < len.max(1) {
        let r = s.rotation(v);
        let a = r[rng.gen_range(0..r.len())];
        if arcs.last().is_some_and(|&b| twin(b) == a) {
            continue;
        }
        arcs.push(a);
        v = s.target(a);
    }
    arcs.extend(shortest_path(s, v, start));
    Walk::closed(s, arcs).expect("random walk closes up")
}

/// Random non-trivial canonical primitive curve of length at most `max_len`.
pub fn random_primitive_canonical<R: Rng>(q: &QuadSystem, max_len: usize, rng: &mut R) -> Walk {
    loop {
        let len = rng.gen_range(1..=max_len);
        let c = canonicalize(q, &random_closed_walk(q.surface(), len, rng)).expect("walk on the quads");
        if !c.is_empty() && c.len() <= max_len && smallest_period(c.arcs()) == c.len() {
            return c;
        }
    }
}

/// Random canonical primitive curve of length at least `min_len`.
pub fn long_canonical<R: Rng>(q: &QuadSystem, min_len: usize, rng: &mut R) -> Walk {
    let mut len = min_len + min_len / 5 + 8;
    loop {
        let c = canonicalize(q, &random_reduced_walk(q.surface(), len, rng)).expect("walk on the quads");
        if c.len() >= min_len && smallest_period(c.arcs()) == c.len() {
            return c;
        }
        len += len / 4 + 1;
    }
}

/// Closed surface of genus `g` built from the one-vertex surface with `2g`
/// loops by subdividing every loop once: `4g` edges, `2g + 1` vertices and a
/// single face.
pub fn subdivided_genus_surface(g: usize) -> CombinatorialSurface {
    let loops = 2 * g;
    let edges = 2 * loops;
    let endpoints: Vec<(VertexId, VertexId)> = (0..loops).flat_map(|k| [(0, k + 1), (k + 1, 0)]).collect();
    let out = |k: usize| 4 * k;
    let back = |k: usize| 4 * k + 3;
    let mut center = Vec::with_capacity(edges);
    for h in 0..g {
        let (a, b) = (2 * h, 2 * h + 1);
        center.extend([out(a), out(b), back(a), back(b)]);
    }
    let mut rotations = vec![center];
    rotations.extend((0..loops).map(|k| vec![4 * k + 1, 4 * k + 2]));
    CombinatorialSurface::from_rotations(
        (1..=edges as i64).collect(),
        (0..=loops as i64).collect(),
        &endpoints,
        rotations,
        &[],
    )
    .expect("subdivided surface is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use curvecross::surface::fixtures::genus2_quads;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn subdivided_surface_has_expected_genus() {
        let s = subdivided_genus_surface(3);
        assert_eq!(s.edge_count(), 12);
        assert_eq!(s.face_count(), 1);
        assert_eq!(s.genus(), 3);
    }

    #[test]
    fn generators_respect_lengths() {
        let q = genus2_quads();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            assert!(random_primitive_canonical(&q, 6, &mut rng).len() <= 6);
        }
        assert!(long_canonical(&q, 300, &mut rng).len() >= 300);
    }
}
