//! Simplicity test. The arc occurrences of a canonical primitive curve are
//! inserted one by one into per-edge orders, switching a subpath to the
//! other side of a row of quads when that avoids a crossing. The curve is
//! homotopic to a simple curve exactly when the result has no crossing.

mod order;

pub use crate::immersion::check_embedding;
pub use order::EdgeOrders;

use crate::counting::Analyzer;
use crate::error::{Error, Result};
use crate::immersion::{Immersion, Occurrence};
use crate::surface::{twin, ArcId, CombinatorialSurface, QuadSystem};
use crate::walk::{canonicalize, is_canonical, is_geodesic, primitive_root, smallest_period, z_function, Walk};

/// Side of every occurrence of the first arc relative to occurrence `[0,1]`,
/// read off the tip of the longest common backward extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorTable {
    left: Vec<Option<bool>>,
}

impl AnchorTable {
    /// `Some(true)` when `[i,i+1]` lies left of `[0,1]`, `None` when the two
    /// occurrences do not share their arc.
    pub fn get(&self, i: usize) -> Option<bool> {
        self.left.get(i).copied().flatten()
    }

    /// Indices sharing the arc of `[0,1]`, with their side.
    pub fn entries(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.left.iter().enumerate().filter_map(|(i, s)| s.map(|s| (i, s)))
    }
}

fn check_input(q: &QuadSystem, c: &Walk) -> Result<()> {
    if !c.is_closed() || c.is_empty() {
        return Err(Error::Precondition("unzip needs a non-trivial closed curve".into()));
    }
    c.validate(q.surface())?;
    if !is_canonical(q, c) {
        return Err(Error::Precondition("unzip needs a canonical curve".into()));
    }
    if smallest_period(c.arcs()) != c.len() {
        return Err(Error::Precondition("unzip needs a primitive curve".into()));
    }
    Ok(())
}

/// Left/right order of `[0,1]` against every other occurrence of its arc.
pub fn precompute_anchor_orders(q: &QuadSystem, c: &Walk) -> Result<AnchorTable> {
    check_input(q, c)?;
    let arcs = c.arcs();
    let n = arcs.len();
    // Reversed curve, doubled: position `n - i` starts the backward walk
    // from `c[i-1]`.
    let rev: Vec<ArcId> = (0..2 * n).map(|t| arcs[(2 * n - 1 - t) % n]).collect();
    let z = z_function(&rev);
    let mut left = vec![None; n];
    for i in 1..n {
        if arcs[i] != arcs[0] {
            continue;
        }
        let m = z[n - i];
        if m >= n {
            return Err(Error::Precondition("unzip needs a primitive curve".into()));
        }
        let j = (i + n - m) % n;
        let k = (n - m) % n;
        let base = arcs[j];
        let from_i = twin(arcs[(j + n - 1) % n]);
        let from_0 = twin(arcs[(k + n - 1) % n]);
        left[i] = Some(q.clockwise(base, from_0, from_i));
    }
    Ok(AnchorTable { left })
}

/// `run_end[x]`: first vertex index `y >= x` below `n` whose turn is not 2,
/// or `n`.
fn run_ends(q: &QuadSystem, arcs: &[ArcId]) -> Vec<usize> {
    let n = arcs.len();
    let mut run_end = vec![n; n + 1];
    for x in (1..n).rev() {
        run_end[x] = if q.turn_between(arcs[x - 1], arcs[x]) != 2 { x } else { run_end[x + 1] };
    }
    run_end
}

fn switch_end(q: &QuadSystem, arcs: &[ArcId], run_end: &[usize], i: usize) -> Option<usize> {
    let n = arcs.len();
    if i == 0 || i + 1 >= n {
        return None;
    }
    let m = run_end[i + 1];
    (m < n && q.turn_between(arcs[m - 1], arcs[m]) == 1).then_some(m)
}

/// Indices `i` whose subpath from `c(i)` has turns `t 2^k 1 u` without
/// passing `[0,1]`.
pub fn mark_switchable(q: &QuadSystem, c: &Walk) -> Vec<bool> {
    let arcs = c.arcs();
    if !c.is_closed() || arcs.is_empty() {
        return vec![false; arcs.len()];
    }
    let run_end = run_ends(q, arcs);
    (0..arcs.len()).map(|i| switch_end(q, arcs, &run_end, i).is_some()).collect()
}

/// State of one run: the current curve and the orders built so far.
#[derive(Clone, Debug)]
pub struct UnzipState<'q> {
    q: &'q QuadSystem,
    original: Walk,
    arcs: Vec<ArcId>,
    switched: Vec<bool>,
    anchor: AnchorTable,
    run_end: Vec<usize>,
    orders: EdgeOrders,
    cursor: usize,
    switches: usize,
}

impl<'q> UnzipState<'q> {
    pub fn new(q: &'q QuadSystem, c: &Walk) -> Result<Self> {
        let anchor = precompute_anchor_orders(q, c)?;
        let arcs = c.arcs().to_vec();
        let n = arcs.len();
        Ok(UnzipState {
            q,
            original: c.clone(),
            run_end: run_ends(q, &arcs),
            arcs,
            switched: vec![false; n],
            anchor,
            orders: EdgeOrders::new(q.surface().edge_count(), n, 0x5eed),
            cursor: 0,
            switches: 0,
        })
    }

    /// Arcs of the current curve.
    pub fn curve(&self) -> &[ArcId] {
        &self.arcs
    }

    /// Next occurrence to insert.
    pub fn cursor(&self) -> usize {
        self.cursor
    }

    pub fn is_done(&self) -> bool {
        self.cursor == self.arcs.len()
    }

    pub fn switch_count(&self) -> usize {
        self.switches
    }

    pub fn is_switched(&self, i: usize) -> bool {
        self.switched[i]
    }

    /// Whether `[i,i+1]` is currently switchable.
    pub fn is_switchable(&self, i: usize) -> bool {
        switch_end(self.q, &self.arcs, &self.run_end, i).is_some()
    }

    fn rank_along(&self, y: ArcId, occ: usize) -> usize {
        let r = self.orders.rank(occ);
        if y.is_multiple_of(2) {
            r
        } else {
            self.orders.len(y >> 1) - 1 - r
        }
    }

    /// Position of a strand end `(arc y leaving the vertex, occurrence)`
    /// clockwise from the bundle of `base`.
    fn key(&self, base: ArcId, y: ArcId, occ: usize) -> (usize, usize) {
        let s = self.q.surface();
        let d = s.degree(s.origin(base));
        let p = (s.position_in_rotation(y) + d - s.position_in_rotation(base)) % d;
        (p, self.rank_along(y, occ))
    }

    /// Other end, at the origin of `arcs[i]`, of the strand through the
    /// inserted occurrence `k` of the same edge; `None` when that strand is
    /// not complete yet.
    fn strand_end(&self, bundle: ArcId, k: usize, i: usize) -> Option<(ArcId, usize)> {
        if self.arcs[k] == bundle {
            (k >= 1).then(|| (twin(self.arcs[k - 1]), k - 1))
        } else {
            (k + 1 < i).then(|| (self.arcs[k + 1], k + 1))
        }
    }

    /// Whether `[i,i+1]` comes before the inserted `[k,k+1]` from left to
    /// right along `arcs[i]`.
    fn precedes(&self, i: usize, k: usize) -> bool {
        let a = self.arcs[i];
        if k == 0 && self.arcs[0] == a {
            if self.switched[i] {
                return false;
            }
            debug_assert!(self.anchor.get(i).is_some());
            return self.anchor.get(i).unwrap_or(false);
        }
        let r1 = self.key(a, twin(self.arcs[i - 1]), i - 1);
        match self.strand_end(a, k, i) {
            Some((y, occ)) => self.key(a, y, occ) < r1,
            None => false,
        }
    }

    /// Whether inserting `[i,i+1]` as is crosses a complete strand through
    /// the arc one step counterclockwise from it.
    fn needs_switch(&self, i: usize) -> bool {
        let s = self.q.surface();
        let a = self.arcs[i];
        let s0 = s.prev_around_vertex(a);
        let e = s0 >> 1;
        let len = self.orders.len(e);
        if len == 0 {
            return false;
        }
        let r1 = self.key(a, twin(self.arcs[i - 1]), i - 1);
        let at = |m: usize| self.orders.select(e, if s0.is_multiple_of(2) { m } else { len - 1 - m });
        // Along `s0` strand ends sweep clockwise from just after `a`
        // backwards; skip the one incomplete strand, at vertex 0.
        let skip = (self.arcs[0] == s0).then(|| {
            let r = self.orders.rank(0);
            if s0.is_multiple_of(2) {
                r
            } else {
                len - 1 - r
            }
        });
        let count = len - usize::from(skip.is_some());
        let raw = |v: usize| match skip {
            Some(z) if v >= z => v + 1,
            _ => v,
        };
        let end_key = |v: usize| {
            let k = at(raw(v));
            self.strand_end(s0, k, i).map(|(y, occ)| self.key(a, y, occ))
        };
        // First virtual index whose strand ends inside the bundle of `a`.
        let (mut lo, mut hi) = (0, count);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match end_key(mid) {
                Some(key) if key.0 != 0 => lo = mid + 1,
                _ => hi = mid,
            }
        }
        lo > 0 && end_key(lo - 1).is_some_and(|key| key < r1)
    }

    /// Replaces the subpath `t 2^k 1 u` starting at `c(i)` by the other
    /// side of its row of quads, with turns `(t-1) -1 -2^k (u-1)`.
    pub fn switch(&mut self, i: usize) -> Result<()> {
        let Some(m) = switch_end(self.q, &self.arcs, &self.run_end, i) else {
            return Err(Error::Precondition(format!("occurrence {i} is not switchable")));
        };
        if i < self.cursor {
            return Err(Error::Precondition(format!("occurrence {i} is already inserted")));
        }
        let s = self.q.surface();
        let n = self.arcs.len();
        let mut side = Vec::with_capacity(m - i + 1);
        side.push(s.prev_around_vertex(self.arcs[i]));
        for r in i..m {
            side.push(twin(s.face_next(s.face_next(self.arcs[r]))));
        }
        let joined = side.windows(2).all(|w| s.target(w[0]) == s.origin(w[1]));
        if !joined || s.target(side[side.len() - 1]) != s.target(self.arcs[m]) {
            return Err(Error::Internal(format!("switching at {i} does not follow a row of quads")));
        }
        #[cfg(debug_assertions)]
        let (t, u) = (self.turn(i), self.turn(m + 1));
        self.arcs[i..=m].copy_from_slice(&side);
        self.switched[i..=m].iter_mut().for_each(|f| *f = true);
        #[cfg(debug_assertions)]
        {
            // Turns are representatives modulo the degree.
            let same = |x: usize, want: i64| {
                let d = s.degree(s.origin(self.arcs[x % n])) as i64;
                (self.turn(x) - want).rem_euclid(d) == 0
            };
            assert!(same(i, t - 1));
            assert!((i + 1..=m).all(|x| same(x, if x == i + 1 { -1 } else { -2 })));
            assert!(same(m + 1, u - 1));
        }
        for x in (i + 1..=(m + 1).min(n - 1)).rev() {
            self.run_end[x] = if self.turn(x) != 2 { x } else { self.run_end[x + 1] };
        }
        self.switches += 1;
        Ok(())
    }

    /// Turn at vertex `x` of the current curve.
    fn turn(&self, x: usize) -> i64 {
        let n = self.arcs.len();
        self.q.turn_between(self.arcs[(x + n - 1) % n], self.arcs[x % n])
    }

    /// Inserts the next occurrence, switching first when that avoids a
    /// crossing.
    pub fn step(&mut self) -> Result<()> {
        let i = self.cursor;
        if i >= self.arcs.len() {
            return Err(Error::Precondition("every occurrence is already inserted".into()));
        }
        if i > 0 && self.is_switchable(i) && self.needs_switch(i) {
            self.switch(i)?;
        }
        let a = self.arcs[i];
        let even = a.is_multiple_of(2);
        let rank = if i == 0 { 0 } else { self.orders.search(a >> 1, |k| self.precedes(i, k) == even) };
        self.orders.insert(a >> 1, i, rank);
        self.cursor += 1;
        Ok(())
    }

    /// The final curve and its immersion; fails unless every occurrence
    /// has been inserted.
    pub fn finish(self) -> Result<(Walk, Immersion)> {
        if !self.is_done() {
            return Err(Error::Precondition("unzip stopped before the last occurrence".into()));
        }
        let s = self.q.surface();
        let walk = Walk::closed(s, self.arcs)?;
        if !is_geodesic(self.q, &walk) {
            return Err(Error::Internal("unzip produced a non-geodesic curve".into()));
        }
        if canonicalize(self.q, &walk)?.arcs() != self.original.arcs() {
            return Err(Error::Internal("unzip changed the homotopy class".into()));
        }
        let orders = (0..s.edge_count())
            .map(|e| {
                self.orders
                    .sequence(e)
                    .into_iter()
                    .map(|index| {
                        let direction = if walk.arcs()[index] % 2 == 0 { 1 } else { -1 };
                        Occurrence { curve: 0, index, direction }
                    })
                    .collect()
            })
            .collect();
        let imm = Immersion::from_orders(s, vec![walk.clone()], orders)?;
        Ok((walk, imm))
    }
}

/// Runs the insertion over a canonical primitive curve. The immersion is
/// returned as computed; [`check_embedding`] tells whether it is simple.
pub fn unzip(q: &QuadSystem, c: &Walk) -> Result<(Walk, Immersion)> {
    let mut state = UnzipState::new(q, c)?;
    while !state.is_done() {
        state.step()?;
    }
    state.finish()
}

/// Outcome of [`is_simple`].
#[derive(Clone, Debug)]
pub struct Simplicity {
    pub simple: bool,
    /// The curve the answer is about: a geodesic on the system of quads on
    /// hyperbolic surfaces, the input otherwise.
    pub curve: Walk,
    /// An immersion without crossings, when one was built.
    pub embedding: Option<Immersion>,
}

/// Whether `c` is homotopic to a simple curve, with an embedding of a
/// homotopic geodesic when it is and the surface is hyperbolic.
pub fn is_simple(surface: &CombinatorialSurface, c: &Walk) -> Result<Simplicity> {
    let analyzer = Analyzer::new(surface)?;
    match analyzer.quads() {
        Some(q) => is_simple_on_quads(q, &analyzer.transport(c)?),
        None => Ok(Simplicity { simple: analyzer.self_intersection(c)? == 0, curve: c.clone(), embedding: None }),
    }
}

/// [`is_simple`] for a closed walk given on a system of quads.
pub fn is_simple_on_quads(q: &QuadSystem, c: &Walk) -> Result<Simplicity> {
    if !c.is_closed() {
        return Err(Error::InvalidWalk("simplicity is defined for closed walks".into()));
    }
    c.validate(q.surface())?;
    let s = q.surface();
    let canonical = canonicalize(q, c)?;
    if canonical.is_empty() {
        let embedding = Immersion::new(s, vec![canonical.clone()]).ok();
        return Ok(Simplicity { simple: true, curve: canonical, embedding });
    }
    let (_, p) = primitive_root(q, &canonical)?;
    if p > 1 {
        return Ok(Simplicity { simple: false, curve: canonical, embedding: None });
    }
    let (walk, imm) = unzip(q, &canonical)?;
    let simple = check_embedding(s, &imm);
    Ok(Simplicity { simple, curve: walk, embedding: simple.then_some(imm) })
}
