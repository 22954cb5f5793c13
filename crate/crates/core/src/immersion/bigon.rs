use super::{in_circular_order, Immersion};
use crate::diagram::{maximal_partial_diagrams, Configuration};
use crate::error::{Error, Result};
use crate::surface::{twin, ArcId, QuadSystem};
use crate::walk::{canonical_path_arcs, canonicalize, is_geodesic, Walk};

/// A bigon of the immersion of a single curve: index paths `⟨i, len⟩` and
/// `⟨j, epsilon·len⟩` with homotopic images and crossing tips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bigon {
    pub i: usize,
    pub j: usize,
    pub epsilon: i64,
    pub len: usize,
}

impl Bigon {
    /// Index of the occurrence traversed at step `p` of the second side.
    fn second_occurrence(&self, p: usize, n: usize) -> usize {
        let (j, p, n) = (self.j as i64, p as i64, n as i64);
        if self.epsilon > 0 {
            (j + p).rem_euclid(n) as usize
        } else {
            (j - p - 1).rem_euclid(n) as usize
        }
    }

    fn tips(&self, n: usize) -> [(usize, usize); 2] {
        let m = n as i64;
        let end_i = (self.i + self.len) % n;
        let end_j = (self.j as i64 + self.epsilon * self.len as i64).rem_euclid(m) as usize;
        [(self.i, self.j), (end_i, end_j)]
    }

    fn first_side(&self, c: &Walk) -> Vec<ArcId> {
        (0..self.len).map(|p| c.arc((self.i + p) as i64)).collect()
    }

    fn second_side(&self, c: &Walk) -> Vec<ArcId> {
        let n = c.len();
        (0..self.len)
            .map(|p| {
                let a = c.arcs()[self.second_occurrence(p, n)];
                if self.epsilon > 0 {
                    a
                } else {
                    twin(a)
                }
            })
            .collect()
    }
}

/// A self-crossing `(i, i + len)` of curve 0 whose enclosed subpath is
/// contractible, as `(i, len)`.
pub fn find_monogon(q: &QuadSystem, imm: &Immersion) -> Result<Option<(usize, usize)>> {
    let s = q.surface();
    let c = imm.curve(0);
    let n = c.len();
    for x in imm.crossings(s) {
        if x.first.0 != 0 || x.second.0 != 0 {
            continue;
        }
        let (a, b) = (x.first.1.min(x.second.1), x.first.1.max(x.second.1));
        for (start, len) in [(a, b - a), (b, n - (b - a))] {
            let arcs: Vec<ArcId> = (0..len).map(|p| c.arc((start + p) as i64)).collect();
            if canonical_path_arcs(q, arcs, imm.vertex_of(s, 0, start))?.is_empty() {
                return Ok(Some((start, len)));
            }
        }
    }
    Ok(None)
}

/// Whether a bigon candidate of curve 0 is a singular bigon.
pub fn is_singular(q: &QuadSystem, imm: &Immersion, b: &Bigon) -> Result<bool> {
    let s = q.surface();
    let c = imm.curve(0);
    let n = c.len();
    if b.len == 0 || b.len >= n || (b.epsilon != 1 && b.epsilon != -1) || b.i >= n || b.j >= n {
        return Ok(false);
    }
    let tips = b.tips(n);
    for (x, y) in tips {
        if x == y || !imm.is_crossing(s, (0, x), (0, y)) {
            return Ok(false);
        }
    }
    let mut used = vec![false; n];
    for p in 0..b.len {
        used[(b.i + p) % n] = true;
    }
    if (0..b.len).any(|p| used[b.second_occurrence(p, n)]) {
        return Ok(false);
    }
    let v = imm.vertex_of(s, 0, b.i);
    let one = canonical_path_arcs(q, b.first_side(c), v)?;
    let two = canonical_path_arcs(q, b.second_side(c), v)?;
    if one != two {
        return Ok(false);
    }
    if b.epsilon > 0 {
        let back = |x: usize| imm.rank(s, 0, (x + n - 1) % n, false);
        let fwd = |x: usize| imm.rank(s, 0, x % n, true);
        let (i, j, l) = (b.i, b.j, b.len);
        if j == (i + l) % n && in_circular_order(&[back(i), back(j), fwd(i), fwd(j + l), fwd(j), back(j + l)]) {
            return Ok(false);
        }
        if i == (j + l) % n && in_circular_order(&[back(i), back(j), back(i + l), fwd(i), fwd(i + l), fwd(j)]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First singular bigon of curve 0, a primitive geodesic, found by scanning
/// the index pairs of its maximal partial diagrams.
///
/// Consecutive crossing pairs of each diagram are tried first, then all
/// pairs of crossings of a diagram.
pub fn find_singular_bigon(q: &QuadSystem, imm: &Immersion) -> Result<Option<Bigon>> {
    let s = q.surface();
    let c = imm.curve(0);
    if c.is_empty() {
        return Ok(None);
    }
    if !is_geodesic(q, c) {
        return Err(Error::Precondition("bigon search needs a geodesic curve".into()));
    }
    let n = c.len();
    let mut diagrams = maximal_partial_diagrams(q, c)?;
    diagrams.sort_by_key(|d| (d.i, d.j, d.epsilon));
    let mut tips_per_diagram = Vec::with_capacity(diagrams.len());
    for d in &diagrams {
        let tips: Vec<usize> = (0..d.pair_count())
            .filter(|&p| {
                let (x, y) = d.pair(p, n);
                d.configuration(q, p) == Configuration::SameVertex && x != y && imm.is_crossing(s, (0, x), (0, y))
            })
            .collect();
        for w in tips.windows(2) {
            let b = Bigon { i: (d.i + w[0]) % n, j: d.pair(w[0], n).1, epsilon: d.epsilon, len: w[1] - w[0] };
            if is_singular(q, imm, &b)? {
                return Ok(Some(b));
            }
        }
        tips_per_diagram.push(tips);
    }
    for (d, tips) in diagrams.iter().zip(&tips_per_diagram) {
        for x in 0..tips.len() {
            for y in x + 2..tips.len() {
                let b = Bigon {
                    i: (d.i + tips[x]) % n,
                    j: d.pair(tips[x], n).1,
                    epsilon: d.epsilon,
                    len: tips[y] - tips[x],
                };
                if is_singular(q, imm, &b)? {
                    return Ok(Some(b));
                }
            }
        }
    }
    Ok(None)
}

/// Exchanges the two sides of a singular bigon of curve 0. The new curve is
/// homotopic and geodesic, and loses at least two crossings.
pub fn swap_bigon(q: &QuadSystem, imm: &Immersion, b: &Bigon) -> Result<(Walk, Immersion)> {
    if !is_singular(q, imm, b)? {
        return Err(Error::Precondition(format!("{b:?} is not a singular bigon")));
    }
    let s = q.surface();
    let c = imm.curve(0);
    let n = c.len();
    let mut arcs = c.arcs().to_vec();
    let mut position: Vec<usize> = (0..n).map(|k| imm.position(0, k)).collect();
    for p in 0..b.len {
        let x = (b.i + p) % n;
        let y = b.second_occurrence(p, n);
        let (ax, ay) = (c.arcs()[x], c.arcs()[y]);
        if b.epsilon > 0 {
            arcs[x] = ay;
            arcs[y] = ax;
        } else {
            arcs[x] = twin(ay);
            arcs[y] = twin(ax);
        }
        position.swap(x, y);
    }
    let walk = Walk::closed(s, arcs)?;
    if !is_geodesic(q, &walk) {
        return Err(Error::Internal("swapping a bigon produced a non-geodesic curve".into()));
    }
    if canonicalize(q, &walk)?.arcs() != canonicalize(q, c)?.arcs() {
        return Err(Error::Internal("swapping a bigon changed the homotopy class".into()));
    }
    let mut next = imm.clone();
    next.replace(0, walk.clone(), position);
    let before = imm.crossing_count(s, 0, 0);
    let after = next.crossing_count(s, 0, 0);
    if after + 2 > before {
        return Err(Error::Internal(format!("bigon swap went from {before} to {after} crossings")));
    }
    Ok((walk, next))
}
