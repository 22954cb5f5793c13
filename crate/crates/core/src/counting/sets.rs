use super::{classify_crossing, maximal_double_paths, DoublePath};
use crate::diagram::{annular_diagram, AnnularDiagram};
use crate::error::{Error, Result};
use crate::surface::{twin, QuadSystem};
use crate::walk::{is_canonical, Walk};

/// Crossing double paths of a curve `c` with a curve `d`, split as D+, D0
/// and D−. Entries of `d_minus` index `c_L⁻¹` on their first side.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossingSets {
    pub d_plus: Vec<DoublePath>,
    pub d_zero: Vec<DoublePath>,
    pub d_minus: Vec<DoublePath>,
}

impl CrossingSets {
    pub fn total(&self) -> usize {
        self.d_plus.len() + self.d_zero.len() + self.d_minus.len()
    }
}

/// Classifies the crossing double paths of `d` against the diagram of `c`.
pub fn crossing_sets(q: &QuadSystem, diagram: &AnnularDiagram, d: &Walk) -> Result<CrossingSets> {
    let right = diagram.right();
    let left = diagram.left();
    if !d.is_closed() || d.is_empty() || !is_canonical(q, d) {
        return Err(Error::Precondition("crossing sets need a canonical closed curve".into()));
    }
    if right.len() != left.len() || right.is_empty() {
        return Err(Error::Precondition("diagram boundaries do not match".into()));
    }
    let n = right.len() as i64;
    let same = d.arcs() == right.arcs();
    let mut sets = CrossingSets::default();

    for dp in maximal_double_paths(q, right, d, same)? {
        if !classify_crossing(q, right, d, &dp) {
            continue;
        }
        if dp.len > 0 {
            sets.d_plus.push(dp);
        } else if in_d_zero(diagram, d, dp.i as i64, dp.j as i64) {
            sets.d_zero.push(dp);
        }
    }

    let left_inv = left.inverse();
    for dp in maximal_double_paths(q, &left_inv, d, false)? {
        if !classify_crossing(q, &left_inv, d, &dp) {
            continue;
        }
        let (i, j, l) = (dp.i as i64, dp.j as i64, dp.len as i64);
        if !excluded_from_d_minus(diagram, d, (-i).rem_euclid(n), (-(i + l)).rem_euclid(n), j, l) {
            sets.d_minus.push(dp);
        }
    }
    Ok(sets)
}

fn in_d_zero(diagram: &AnnularDiagram, d: &Walk, i: i64, j: i64) -> bool {
    let l = diagram.left();
    if diagram.is_coincident(i) && (d.arc(j - 1) == l.arc(i - 1) || d.arc(j) == l.arc(i)) {
        return true;
    }
    diagram.spokes_at_right(i).any(|sp| {
        let ip = sp.left as i64;
        (twin(d.arc(j - 1)) == sp.arc && d.arc(j - 2) == l.arc(ip - 1))
            || (d.arc(j) == sp.arc && d.arc(j + 1) == l.arc(ip))
    })
}

/// The situations that drop a crossing double path of `(c_L⁻¹, d)`.
/// `start` and `end` are the diagram indices of its two extremities.
fn excluded_from_d_minus(diagram: &AnnularDiagram, d: &Walk, start: i64, end: i64, j: i64, l: i64) -> bool {
    let r = diagram.right();
    if diagram.is_coincident(start) && d.arc(j - 1) == r.arc(start - 1) {
        return true;
    }
    if diagram.is_coincident(end) && d.arc(j + l) == r.arc(end) {
        return true;
    }
    // A spoke into the right vertex also counts as reaching it: `d` then
    // only touches the right side and leaves the strip through the left.
    let at_start = diagram.spokes_at_left(start).any(|sp| {
        let ir = sp.right as i64;
        d.arc(j - 1) == sp.arc
            && (d.arc(j - 2) == r.arc(ir - 1) || diagram.spokes_at_right(ir).any(|e| e.arc == twin(d.arc(j - 2))))
    });
    if at_start {
        return true;
    }
    diagram.spokes_at_left(end).any(|sp| {
        let ir = sp.right as i64;
        d.arc(j + l) == twin(sp.arc)
            && (d.arc(j + l + 1) == r.arc(ir) || diagram.spokes_at_right(ir).any(|e| e.arc == d.arc(j + l + 1)))
    })
}

/// `i(c, d)` counted as `|D+| + |D0| + |D−|` for primitive canonical curves.
/// When `d = c` this is twice the self-intersection number of `c`.
pub fn pair_count(q: &QuadSystem, c: &Walk, d: &Walk) -> Result<usize> {
    let diagram = annular_diagram(q, c)?;
    Ok(crossing_sets(q, &diagram, d)?.total())
}
