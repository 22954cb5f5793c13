//! Geometric intersection numbers of closed curves.
//!
//! On surfaces of negative Euler characteristic curves are moved to the
//! system of quads and put in canonical form. Crossings of two primitive
//! canonical curves `c` and `d` are then counted as the crossing double paths
//! of `(c_R, d)` and `(c_L⁻¹, d)` that survive the D+/D0/D− rules of the
//! annular diagram of `c`.

mod analyzer;
mod sets;

pub use analyzer::{intersection_number, self_intersection_number, torus_classes, winding_number, Analyzer};
pub use sets::{crossing_sets, pair_count, CrossingSets};

use crate::error::{Error, Result};
use crate::surface::{twin, QuadSystem};
use crate::walk::{is_canonical, Walk};

/// A double path of `(c, d)`: `c[i + k] = d[j + ε·k]` for `k < len`, and
/// `c(i) = d(j)` when `len = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoublePath {
    pub i: usize,
    pub j: usize,
    pub epsilon: i64,
    pub len: usize,
    pub maximal: bool,
}

/// All maximal forward double paths of two canonical closed curves.
///
/// With `same_curve`, `c` and `d` are the same curve and the identity pairs
/// `i = j` are skipped. Every double point lies on exactly one output.
pub fn maximal_double_paths(q: &QuadSystem, c: &Walk, d: &Walk, same_curve: bool) -> Result<Vec<DoublePath>> {
    for w in [c, d] {
        if !w.is_closed() || w.is_empty() || !is_canonical(q, w) {
            return Err(Error::Precondition("double paths are taken between canonical closed curves".into()));
        }
    }
    let (n, m) = (c.len(), d.len());
    let mut at_vertex = vec![Vec::new(); q.vertex_count()];
    for j in 0..m {
        at_vertex[q.origin(d.arcs()[j])].push(j);
    }
    let cap = n + m;
    let mut out = Vec::new();
    for i in 0..n {
        let (ii, vertex) = (i as i64, q.origin(c.arcs()[i]));
        for &j in &at_vertex[vertex] {
            if same_curve && i == j {
                continue;
            }
            let jj = j as i64;
            if c.arc(ii - 1) == d.arc(jj - 1) {
                continue;
            }
            let mut len = 0;
            while c.arc(ii + len as i64) == d.arc(jj + len as i64) {
                len += 1;
                if len > cap {
                    return Err(Error::Internal("double path longer than both curves; inputs are homotopic".into()));
                }
            }
            out.push(DoublePath { i, j, epsilon: 1, len, maximal: true });
        }
    }
    Ok(out)
}

/// Whether a maximal forward double path of `(c, d)` is a crossing.
pub fn classify_crossing(q: &QuadSystem, c: &Walk, d: &Walk, dp: &DoublePath) -> bool {
    let (i, j, l) = (dp.i as i64, dp.j as i64, dp.len as i64);
    if dp.len == 0 {
        let a = twin(c.arc(i - 1));
        let b = twin(d.arc(j - 1));
        let x = c.arc(i);
        let y = d.arc(j);
        let arcs = [a, b, x, y];
        for s in 0..4 {
            for t in s + 1..4 {
                if arcs[s] == arcs[t] {
                    return false;
                }
            }
        }
        q.clockwise(a, b, x) != q.clockwise(a, y, x)
    } else {
        let first = q.clockwise(twin(c.arc(i - 1)), twin(d.arc(j - 1)), c.arc(i));
        let last = q.clockwise(c.arc(i + l), d.arc(j + l), twin(c.arc(i + l - 1)));
        first == last
    }
}
