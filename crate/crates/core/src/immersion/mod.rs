//! Combinatorial immersions: a left-to-right order of the occurrences of
//! every edge, from which crossings are read off at each vertex.

mod bigon;
mod minimal;

pub use bigon::{find_monogon, find_singular_bigon, is_singular, swap_bigon, Bigon};
pub use minimal::{minimal_immersion, minimal_immersion_on_quads, MinimalImmersion};

use crate::error::{Error, Result};
use crate::surface::{twin, ArcId, CombinatorialSurface, EdgeId, VertexId};
use crate::walk::Walk;
use std::fmt::Write as _;

/// One traversal of an edge by a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    pub curve: usize,
    pub index: usize,
    /// `+1` when the curve traverses the even arc of the edge.
    pub direction: i8,
}

/// A double point: two visits of curves to the same vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoublePoint {
    pub first: (usize, usize),
    pub second: (usize, usize),
}

/// Left-to-right orders of the occurrences along every edge, read in the
/// direction of the even arc of the edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Immersion {
    curves: Vec<Walk>,
    orders: Vec<Vec<Occurrence>>,
    position: Vec<Vec<usize>>,
}

fn occurrence(curves: &[Walk], curve: usize, index: usize) -> Occurrence {
    let a = curves[curve].arcs()[index];
    Occurrence { curve, index, direction: if a.is_multiple_of(2) { 1 } else { -1 } }
}

impl Immersion {
    /// The immersion where every edge lists its occurrences by curve, then
    /// by index.
    pub fn new(surface: &CombinatorialSurface, curves: Vec<Walk>) -> Result<Immersion> {
        let mut orders = vec![Vec::new(); surface.edge_count()];
        for (k, c) in curves.iter().enumerate() {
            if !c.is_closed() {
                return Err(Error::InvalidWalk("immersions are defined for closed walks".into()));
            }
            c.validate(surface)?;
            for (i, &a) in c.arcs().iter().enumerate() {
                orders[a >> 1].push(occurrence(&curves, k, i));
            }
        }
        Self::from_orders(surface, curves, orders)
    }

    /// Builds an immersion from explicit per-edge orders.
    pub fn from_orders(
        surface: &CombinatorialSurface,
        curves: Vec<Walk>,
        orders: Vec<Vec<Occurrence>>,
    ) -> Result<Immersion> {
        if orders.len() != surface.edge_count() {
            return Err(Error::Precondition("one order per edge is required".into()));
        }
        let mut position: Vec<Vec<usize>> = curves.iter().map(|c| vec![usize::MAX; c.len()]).collect();
        for (e, order) in orders.iter().enumerate() {
            for (p, o) in order.iter().enumerate() {
                let slot = position
                    .get_mut(o.curve)
                    .and_then(|v| v.get_mut(o.index))
                    .ok_or_else(|| Error::Precondition(format!("occurrence {o:?} names no arc")))?;
                let a = curves[o.curve].arcs()[o.index];
                if a >> 1 != e || *slot != usize::MAX || occurrence(&curves, o.curve, o.index) != *o {
                    return Err(Error::Precondition(format!("occurrence {o:?} is misplaced or repeated")));
                }
                *slot = p;
            }
        }
        if position.iter().flatten().any(|&p| p == usize::MAX) {
            return Err(Error::Precondition("some occurrence is missing from the orders".into()));
        }
        Ok(Immersion { curves, orders, position })
    }

    pub fn curves(&self) -> &[Walk] {
        &self.curves
    }

    pub fn curve(&self, k: usize) -> &Walk {
        &self.curves[k]
    }

    pub fn order(&self, e: EdgeId) -> &[Occurrence] {
        &self.orders[e]
    }

    pub fn orders(&self) -> &[Vec<Occurrence>] {
        &self.orders
    }

    /// Position of occurrence `index` of `curve` in the order of its edge.
    pub fn position(&self, curve: usize, index: usize) -> usize {
        self.position[curve][index]
    }

    /// Position of an occurrence in the left-to-right order of `arc`.
    fn rank_along(&self, arc: ArcId, p: usize) -> usize {
        if arc.is_multiple_of(2) {
            p
        } else {
            self.orders[arc >> 1].len() - 1 - p
        }
    }

    /// Rank in the circular order at the origin of occurrence `index` of
    /// `curve` (when `leaving`) or at its target.
    pub fn rank(&self, surface: &CombinatorialSurface, curve: usize, index: usize, leaving: bool) -> (usize, usize) {
        let a = self.curves[curve].arcs()[index];
        let at_v = if leaving { a } else { twin(a) };
        (surface.position_in_rotation(at_v), self.rank_along(at_v, self.position[curve][index]))
    }

    /// Ranks of the incoming and outgoing occurrences at vertex `index` of
    /// `curve`.
    fn strand(&self, surface: &CombinatorialSurface, curve: usize, index: usize) -> ((usize, usize), (usize, usize)) {
        let n = self.curves[curve].len();
        (self.rank(surface, curve, (index + n - 1) % n, false), self.rank(surface, curve, index, true))
    }

    /// Whether the strands of two visits of the same vertex are linked.
    pub fn is_crossing(&self, surface: &CombinatorialSurface, first: (usize, usize), second: (usize, usize)) -> bool {
        let (r1, r2) = self.strand(surface, first.0, first.1);
        let (s1, s2) = self.strand(surface, second.0, second.1);
        linked(r1, r2, s1, s2)
    }

    /// Visits of every vertex, as `(curve, index)`.
    fn visits(&self, surface: &CombinatorialSurface) -> Vec<Vec<(usize, usize)>> {
        let mut at: Vec<Vec<(usize, usize)>> = vec![Vec::new(); surface.vertex_count()];
        for (k, c) in self.curves.iter().enumerate() {
            for i in 0..c.len() {
                at[surface.origin(c.arcs()[i])].push((k, i));
            }
        }
        at
    }

    /// All crossings, sorted.
    pub fn crossings(&self, surface: &CombinatorialSurface) -> Vec<DoublePoint> {
        let mut out = Vec::new();
        for list in self.visits(surface) {
            for x in 0..list.len() {
                for y in x + 1..list.len() {
                    if self.is_crossing(surface, list[x], list[y]) {
                        out.push(DoublePoint { first: list[x], second: list[y] });
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Number of crossings between curves `a` and `b`; self-crossings when
    /// `a = b`.
    pub fn crossing_count(&self, surface: &CombinatorialSurface, a: usize, b: usize) -> usize {
        self.crossings(surface)
            .iter()
            .filter(|x| (x.first.0 == a && x.second.0 == b) || (x.first.0 == b && x.second.0 == a))
            .count()
    }

    /// Checks that every occurrence is listed once at the right place.
    pub fn validate(&self, surface: &CombinatorialSurface) -> Result<()> {
        Immersion::from_orders(surface, self.curves.clone(), self.orders.clone()).map(|_| ())
    }

    /// One line per non-empty edge: `edge <label>: occ(curve,index,dir) ...`.
    pub fn format(&self, surface: &CombinatorialSurface) -> String {
        let mut out = String::new();
        for (e, order) in self.orders.iter().enumerate() {
            if order.is_empty() {
                continue;
            }
            let _ = write!(out, "edge {}:", surface.edge_label(e));
            for o in order {
                let _ = write!(out, " occ({},{},{})", o.curve, o.index, o.direction);
            }
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`Immersion::format`] for the given curves.
    pub fn parse(surface: &CombinatorialSurface, curves: Vec<Walk>, text: &str) -> Result<Immersion> {
        let index = surface.edge_index();
        let mut orders = vec![Vec::new(); surface.edge_count()];
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |m: &str| Error::Parse { line: n + 1, message: m.to_string() };
            let rest = line.strip_prefix("edge ").ok_or_else(|| bad("expected `edge`"))?;
            let (label, occs) = rest.split_once(':').ok_or_else(|| bad("expected `:`"))?;
            let label: i64 = label.trim().parse().map_err(|_| bad("bad edge label"))?;
            let e = *index.get(&label).ok_or_else(|| bad("unknown edge"))?;
            for tok in occs.split_whitespace() {
                let inner = tok
                    .strip_prefix("occ(")
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| bad("expected occ(curve,index,dir)"))?;
                let f: Vec<&str> = inner.split(',').collect();
                if f.len() != 3 {
                    return Err(bad("expected three fields"));
                }
                let curve = f[0].parse().map_err(|_| bad("bad curve"))?;
                let idx = f[1].parse().map_err(|_| bad("bad index"))?;
                let direction = f[2].parse().map_err(|_| bad("bad direction"))?;
                orders[e].push(Occurrence { curve, index: idx, direction });
            }
        }
        Immersion::from_orders(surface, curves, orders)
    }

    pub(crate) fn vertex_of(&self, surface: &CombinatorialSurface, curve: usize, index: usize) -> VertexId {
        surface.origin(self.curves[curve].arcs()[index])
    }

    pub(crate) fn replace(&mut self, curve: usize, walk: Walk, position: Vec<usize>) {
        for (i, &a) in walk.arcs().iter().enumerate() {
            let p = position[i];
            self.orders[a >> 1][p] = Occurrence { curve, index: i, direction: if a % 2 == 0 { 1 } else { -1 } };
        }
        self.curves[curve] = walk;
        self.position[curve] = position;
    }
}

/// Whether exactly one of `s1`, `s2` lies strictly between `r1` and `r2` in
/// circular order.
pub(crate) fn linked<T: Ord + Copy>(r1: T, r2: T, s1: T, s2: T) -> bool {
    between(r1, r2, s1) != between(r1, r2, s2)
}

fn between<T: Ord>(a: T, b: T, x: T) -> bool {
    if a < b {
        a < x && x < b
    } else {
        x > a || x < b
    }
}

/// Whether `items` appear in this circular order or its opposite.
pub(crate) fn in_circular_order<T: Ord + Copy>(items: &[T]) -> bool {
    let n = items.len();
    let descents = (0..n).filter(|&t| items[t] > items[(t + 1) % n]).count();
    let ascents = (0..n).filter(|&t| items[t] < items[(t + 1) % n]).count();
    let distinct = (0..n).all(|s| (s + 1..n).all(|t| items[s] != items[t]));
    distinct && (descents == 1 || ascents == 1)
}

/// Per-vertex parenthesization check: true when no two strands of the
/// immersion are linked.
pub fn check_embedding(surface: &CombinatorialSurface, imm: &Immersion) -> bool {
    let mut events: Vec<Vec<((usize, usize), usize)>> = vec![Vec::new(); surface.vertex_count()];
    let mut strand_id = 0;
    for (k, c) in imm.curves.iter().enumerate() {
        for i in 0..c.len() {
            let (r1, r2) = imm.strand(surface, k, i);
            let v = imm.vertex_of(surface, k, i);
            events[v].push((r1, strand_id));
            events[v].push((r2, strand_id));
            strand_id += 1;
        }
    }
    let mut stack = Vec::new();
    for mut ev in events {
        ev.sort_unstable();
        stack.clear();
        for (_, s) in ev {
            if stack.last() == Some(&s) {
                stack.pop();
            } else {
                stack.push(s);
            }
        }
        if !stack.is_empty() {
            return false;
        }
    }
    true
}
