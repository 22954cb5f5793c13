use super::{advance, extend_by, Connector};
use crate::error::{Error, Result};
use crate::surface::{twin, ArcId, FaceId, QuadSystem};
use crate::walk::{is_canonical, leftmost_canonical, Walk};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// How the two boundaries of the diagram meet at an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Coincident,
    /// The boundary vertices are diagonally opposite in `quad`.
    InStaircase {
        quad: FaceId,
    },
}

/// An interior edge of a staircase, oriented from `right(right)` to
/// `left(left)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Spoke {
    pub right: usize,
    pub left: usize,
    pub arc: ArcId,
}

/// Annulus bounded by the rightmost canonical curve `c_R` and the leftmost
/// canonical curve `c_L` of a free homotopy class, indexed consistently.
#[derive(Clone, Debug)]
pub struct AnnularDiagram {
    right: Walk,
    left: Walk,
    relation: Vec<Relation>,
    connectors: Vec<Connector>,
    spokes: Vec<Spoke>,
    spokes_at_right: Vec<Vec<usize>>,
    spokes_at_left: Vec<Vec<usize>>,
    closed_staircase: bool,
}

impl AnnularDiagram {
    pub fn right(&self) -> &Walk {
        &self.right
    }

    pub fn left(&self) -> &Walk {
        &self.left
    }

    pub fn len(&self) -> usize {
        self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.right.is_empty()
    }

    pub fn relation(&self, i: i64) -> Relation {
        self.relation[i.rem_euclid(self.relation.len() as i64) as usize]
    }

    pub fn is_coincident(&self, i: i64) -> bool {
        self.relation(i) == Relation::Coincident
    }

    pub fn connector(&self, i: i64) -> Connector {
        self.connectors[i.rem_euclid(self.connectors.len() as i64) as usize]
    }

    pub fn spokes(&self) -> &[Spoke] {
        &self.spokes
    }

    /// Spokes with an endpoint at index `i` of the right boundary.
    pub fn spokes_at_right(&self, i: i64) -> impl Iterator<Item = &Spoke> {
        let i = i.rem_euclid(self.len() as i64) as usize;
        self.spokes_at_right[i].iter().map(move |&k| &self.spokes[k])
    }

    /// Spokes with an endpoint at index `i` of the left boundary.
    pub fn spokes_at_left(&self, i: i64) -> impl Iterator<Item = &Spoke> {
        let i = i.rem_euclid(self.len() as i64) as usize;
        self.spokes_at_left[i].iter().map(move |&k| &self.spokes[k])
    }

    pub fn closed_staircase(&self) -> bool {
        self.closed_staircase
    }

    /// One line per index: `i: C` or `i: S quad=<face-rep> spoke=<edge>`.
    pub fn dump(&self, q: &QuadSystem) -> String {
        let s = q.surface();
        let mut out = String::new();
        for i in 0..self.len() {
            match self.relation[i] {
                Relation::Coincident => {
                    let _ = writeln!(out, "{i}: C");
                }
                Relation::InStaircase { quad } => {
                    let labels: Vec<String> = self.spokes_at_right[i]
                        .iter()
                        .map(|&k| s.edge_label(self.spokes[k].arc >> 1).to_string())
                        .collect();
                    let spoke = if labels.is_empty() { "-".to_string() } else { labels.join(",") };
                    let _ = writeln!(out, "{i}: S quad={} spoke={spoke}", s.arc_label(s.face_representative(quad)));
                }
            }
        }
        out
    }

    fn assemble(
        q: &QuadSystem,
        right: Walk,
        left: Walk,
        connectors: Vec<Connector>,
        spokes: Vec<Spoke>,
    ) -> AnnularDiagram {
        let n = right.len();
        let relation: Vec<Relation> = connectors
            .iter()
            .map(|g| match g {
                Connector::Trivial => Relation::Coincident,
                Connector::Diagonal([a, _]) => Relation::InStaircase { quad: q.face_of(*a) },
            })
            .collect();
        let mut spokes_at_right = vec![Vec::new(); n];
        let mut spokes_at_left = vec![Vec::new(); n];
        for (k, sp) in spokes.iter().enumerate() {
            spokes_at_right[sp.right].push(k);
            spokes_at_left[sp.left].push(k);
        }
        let closed_staircase = relation.iter().all(|r| *r != Relation::Coincident);
        AnnularDiagram { right, left, relation, connectors, spokes, spokes_at_right, spokes_at_left, closed_staircase }
    }
}

/// Builds the annular diagram of a non-trivial canonical closed curve.
pub fn annular_diagram(q: &QuadSystem, c: &Walk) -> Result<AnnularDiagram> {
    if !c.is_closed() || c.is_empty() {
        return Err(Error::Precondition("annular diagrams need a non-trivial closed curve".into()));
    }
    if !is_canonical(q, c) {
        return Err(Error::Precondition("annular diagrams are built from canonical curves".into()));
    }
    let left = leftmost_canonical(q, c)?;
    if left.len() != c.len() {
        return Err(Error::Internal("leftmost and rightmost canonical forms differ in length".into()));
    }
    let (shift, connectors) = align(q, c.arcs(), left.arcs())
        .ok_or_else(|| Error::Internal("no consistent alignment between c_R and c_L".into()))?;
    let left = left.rotated(q.surface(), shift as i64);
    let spokes = find_spokes(q, &connectors, left.arcs());
    Ok(AnnularDiagram::assemble(q, c.clone(), left, connectors, spokes))
}

fn propagate(q: &QuadSystem, r: &[ArcId], l: &[ArcId], shift: usize, g0: Connector) -> Option<Vec<Connector>> {
    let n = r.len();
    let mut out = Vec::with_capacity(n);
    let mut g = g0;
    for i in 0..n {
        out.push(g);
        g = advance(q, g, r[i], l[(shift + i) % n])?;
    }
    (g == g0).then_some(out)
}

fn align(q: &QuadSystem, r: &[ArcId], l: &[ArcId]) -> Option<(usize, Vec<Connector>)> {
    let n = r.len();
    let r0 = q.origin(r[0]);
    for trivial_pass in [true, false] {
        for shift in 0..n {
            let v = q.origin(l[shift]);
            for g0 in Connector::candidates(q, r0, v) {
                if g0.is_trivial() != trivial_pass {
                    continue;
                }
                if let Some(conns) = propagate(q, r, l, shift, g0) {
                    return Some((shift, conns));
                }
            }
        }
    }
    None
}

fn find_spokes(q: &QuadSystem, connectors: &[Connector], left: &[ArcId]) -> Vec<Spoke> {
    let n = connectors.len();
    let mut found = BTreeSet::new();
    for i in 0..n {
        let g = connectors[i];
        if g.is_trivial() {
            continue;
        }
        let next = (i + 1) % n;
        if !connectors[next].is_trivial() {
            if let [arc] = extend_by(q, g, left[i])[..] {
                found.insert(Spoke { right: i, left: next, arc });
            }
        }
        let prev = (i + n - 1) % n;
        if !connectors[prev].is_trivial() {
            if let [arc] = extend_by(q, g, twin(left[prev]))[..] {
                found.insert(Spoke { right: i, left: prev, arc });
            }
        }
    }
    found.into_iter().collect()
}

/// Structural problems of a diagram; empty when the diagram is valid.
pub fn diagram_problems(q: &QuadSystem, d: &AnnularDiagram) -> Vec<String> {
    let mut problems = Vec::new();
    let n = d.right.len();
    if n == 0 || d.left.len() != n || d.connectors.len() != n || d.relation.len() != n {
        problems.push("boundary lengths differ or are zero".into());
        return problems;
    }
    if !is_canonical(q, &d.right) {
        problems.push("right boundary is not canonical".into());
    }
    if !is_canonical(q, &d.left.inverse()) {
        problems.push("left boundary is not leftmost canonical".into());
    }
    let r = d.right.arcs();
    let l = d.left.arcs();
    for i in 0..n {
        let (u, v) = (q.origin(r[i]), q.origin(l[i]));
        let g = d.connectors[i];
        let ok = match g {
            Connector::Trivial => u == v && d.relation[i] == Relation::Coincident,
            Connector::Diagonal([a, b]) => {
                q.origin(a) == u
                    && q.target(a) == q.origin(b)
                    && q.target(b) == v
                    && q.turn_between(a, b) == 1
                    && d.relation[i] == Relation::InStaircase { quad: q.face_of(a) }
            }
        };
        if !ok {
            problems.push(format!("index {i}: connector or relation does not join the boundaries"));
        }
        if advance(q, g, r[i], l[i]) != Some(d.connectors[(i + 1) % n]) {
            problems.push(format!("index {i}: boundaries are not parallel to index {}", (i + 1) % n));
        }
    }
    let expected = find_spokes(q, &d.connectors, l);
    if expected != d.spokes {
        problems.push("spokes do not match the staircases".into());
    }
    for sp in &d.spokes {
        let adjacent = (sp.left + 1) % n == sp.right || (sp.right + 1) % n == sp.left;
        if sp.arc >= q.arc_count()
            || q.origin(sp.arc) != q.origin(r[sp.right])
            || q.target(sp.arc) != q.origin(l[sp.left])
            || !adjacent
        {
            problems.push(format!("spoke ({}, {}) does not join facing vertices", sp.right, sp.left));
        }
    }
    let all_stairs = d.relation.iter().all(|x| *x != Relation::Coincident);
    if all_stairs != d.closed_staircase {
        problems.push("closed staircase flag is inconsistent".into());
    }
    problems
}

pub fn verify_diagram(q: &QuadSystem, d: &AnnularDiagram) -> bool {
    diagram_problems(q, d).is_empty()
}
