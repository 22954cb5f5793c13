#![allow(dead_code)]

use curvecross::surface::{CombinatorialSurface, QuadSystem};
use curvecross::walk::{canonicalize, smallest_period, Walk};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random closed walk of `len` arcs or a little more, closing up through
/// the first vertex found to lead back.
pub fn random_closed_walk(s: &CombinatorialSurface, len: usize, r: &mut ChaCha8Rng) -> Walk {
    loop {
        let start = r.gen_range(0..s.vertex_count());
        let mut arcs = Vec::new();
        let mut v = start;
        for _ in 0..len.max(1) {
            let rot = s.rotation(v);
            let a = rot[r.gen_range(0..rot.len())];
            arcs.push(a);
            v = s.target(a);
        }
        for _ in 0..4 * s.vertex_count() {
            if v == start {
                return Walk::closed(s, arcs).expect("closed walk");
            }
            let rot = s.rotation(v);
            let a = rot[r.gen_range(0..rot.len())];
            arcs.push(a);
            v = s.target(a);
        }
    }
}

/// Random non-trivial canonical primitive curve of length at most `max_len`.
pub fn random_primitive(q: &QuadSystem, max_len: usize, r: &mut ChaCha8Rng) -> Walk {
    loop {
        let len = r.gen_range(1..=max_len);
        let c = canonicalize(q, &random_closed_walk(q.surface(), len, r)).expect("canonical form");
        if !c.is_empty() && c.len() <= max_len && smallest_period(c.arcs()) == c.len() {
            return c;
        }
    }
}
