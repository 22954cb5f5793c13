use super::{advance, Connector};
use crate::error::{Error, Result};
use crate::surface::{twin, ArcId, FaceId, QuadSystem};
use crate::walk::{is_geodesic, smallest_period, Walk};
use std::collections::HashSet;

/// Position of the two vertices of an index pair in a partial diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Configuration {
    SameVertex,
    Opposite { quad: FaceId },
}

/// A maximal thick double path `(⟨i, len⟩, ⟨j, ε·len⟩)` of a curve together
/// with the connectors of its index pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialDiagram {
    pub i: usize,
    pub j: usize,
    pub epsilon: i64,
    pub len: usize,
    pub connectors: Vec<Connector>,
}

impl PartialDiagram {
    /// Index pair number `p`, reduced modulo `modulus`.
    pub fn pair(&self, p: usize, modulus: usize) -> (usize, usize) {
        let m = modulus as i64;
        (
            (self.i as i64 + p as i64).rem_euclid(m) as usize,
            (self.j as i64 + self.epsilon * p as i64).rem_euclid(m) as usize,
        )
    }

    pub fn configuration(&self, q: &QuadSystem, p: usize) -> Configuration {
        match self.connectors[p] {
            Connector::Trivial => Configuration::SameVertex,
            Connector::Diagonal([a, _]) => Configuration::Opposite { quad: q.face_of(a) },
        }
    }

    pub fn pair_count(&self) -> usize {
        self.len + 1
    }
}

/// Arc of the second index path from `j + ε·p` to `j + ε·(p + 1)`.
fn second_arc(c: &Walk, j: i64, epsilon: i64, p: i64) -> ArcId {
    if epsilon > 0 {
        c.arc(j + p)
    } else {
        twin(c.arc(j - p - 1))
    }
}

/// All maximal partial diagrams of a primitive geodesic closed curve.
///
/// Each diagram is reported once: of a diagram and the one obtained by
/// exchanging its two index paths, only the one with the smaller starting
/// pair is kept.
pub fn maximal_partial_diagrams(q: &QuadSystem, c: &Walk) -> Result<Vec<PartialDiagram>> {
    if !c.is_closed() || c.is_empty() {
        return Err(Error::Precondition("partial diagrams need a non-trivial closed curve".into()));
    }
    if !is_geodesic(q, c) {
        return Err(Error::Precondition("partial diagrams are built from geodesic curves".into()));
    }
    let n = c.len();
    if smallest_period(c.arcs()) != n {
        return Err(Error::Precondition("partial diagrams are built from primitive curves".into()));
    }
    let mut at_vertex = vec![Vec::new(); q.vertex_count()];
    for i in 0..n {
        at_vertex[q.origin(c.arcs()[i])].push(i);
    }
    // Distinct index paths with homotopic images have length at most |c| + 1.
    let cap = n + 2;
    let mut out = Vec::new();
    for i in 0..n {
        let u = q.origin(c.arcs()[i]);
        let mut seeds: Vec<(usize, Connector)> = Vec::new();
        for &j in &at_vertex[u] {
            seeds.push((j, Connector::Trivial));
        }
        for &e in q.surface().rotation(u) {
            let f = q.face_next(e);
            for &j in &at_vertex[q.target(f)] {
                seeds.push((j, Connector::Diagonal([e, f])));
            }
        }
        for (j, g) in seeds {
            for epsilon in [1i64, -1] {
                if epsilon == 1 && j == i {
                    continue;
                }
                let (ii, jj) = (i as i64, j as i64);
                let back = second_arc(c, jj - epsilon, epsilon, 0);
                if advance(q, g, twin(c.arc(ii - 1)), twin(back)).is_some() {
                    continue;
                }
                let mut connectors = vec![g];
                let mut cur = g;
                loop {
                    let p = connectors.len() as i64 - 1;
                    match advance(q, cur, c.arc(ii + p), second_arc(c, jj, epsilon, p)) {
                        Some(next) => {
                            cur = next;
                            connectors.push(next);
                            if connectors.len() > cap {
                                return Err(Error::Internal("thick double path longer than the curve allows".into()));
                            }
                        }
                        None => break,
                    }
                }
                let nn = n as i64;
                let pair = |p: usize| ((ii + p as i64).rem_euclid(nn), (jj + epsilon * p as i64).rem_euclid(nn));
                // A backward chain through a pair (m, m) folds the curve onto
                // itself at a corner; it is cut there.
                let mut p = 0;
                while p < connectors.len() {
                    let (a, b) = pair(p);
                    if epsilon < 0 && a == b {
                        p += 1;
                        continue;
                    }
                    let first = p;
                    while p < connectors.len() && !(epsilon < 0 && pair(p).0 == pair(p).1) {
                        p += 1;
                    }
                    let mut seen = HashSet::new();
                    if !(first..p).all(|k| seen.insert(pair(k))) {
                        return Err(Error::Internal(
                            "index pair repeated in a partial diagram; input is not a primitive geodesic".into(),
                        ));
                    }
                    let len = p - first - 1;
                    let (si, sj) = (a as usize, b as usize);
                    let mirror =
                        if epsilon > 0 { (sj, si) } else { ((b - len as i64).rem_euclid(nn) as usize, (si + len) % n) };
                    if (si, sj) <= mirror {
                        let connectors = connectors[first..p].to_vec();
                        out.push(PartialDiagram { i: si, j: sj, epsilon, len, connectors });
                    }
                }
            }
        }
    }
    Ok(out)
}
