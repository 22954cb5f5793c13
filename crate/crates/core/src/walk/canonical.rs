use super::strings::{cyclic_equal, least_rotation, smallest_period};
use super::turns::{find_defect, is_canonical, Defect};
use super::Walk;
use crate::error::{Error, Result};
use crate::surface::{twin, ArcId, QuadSystem, VertexId};

/// Canonical form of a closed walk (up to free homotopy) or of a path (up to
/// homotopy with fixed endpoints).
///
/// Closed canonical forms are rotated to their lexicographically least arc
/// sequence, so two closed walks are freely homotopic exactly when their
/// canonical forms are equal.
pub fn canonicalize(q: &QuadSystem, w: &Walk) -> Result<Walk> {
    w.validate(q.surface())?;
    if w.is_closed() {
        canonical_closed(q, w.arcs().to_vec(), w.base())
    } else {
        canonical_path(q, w)
    }
}

/// The leftmost canonical curve `c_L`: the inverse of the canonical form of
/// the inverse of `c`.
pub fn leftmost_canonical(q: &QuadSystem, c: &Walk) -> Result<Walk> {
    if !c.is_closed() {
        return Err(Error::Precondition("leftmost canonical forms are defined for closed walks".into()));
    }
    let inv = canonicalize(q, &c.inverse())?.inverse();
    Ok(normalize_rotation(q, inv))
}

/// Primitive root `d` and multiplicity `k` with `c = d^k` as arc sequences.
pub fn primitive_root(q: &QuadSystem, c: &Walk) -> Result<(Walk, usize)> {
    if !c.is_closed() || c.is_empty() {
        return Err(Error::Precondition("primitive roots need a non-trivial closed walk".into()));
    }
    if !is_canonical(q, c) {
        return Err(Error::Precondition("primitive roots are taken of canonical walks".into()));
    }
    let p = smallest_period(c.arcs());
    let root = Walk::closed_unchecked(c.arcs()[..p].to_vec(), c.base());
    Ok((root, c.len() / p))
}

/// Whether two closed walks are freely homotopic.
pub fn freely_homotopic(q: &QuadSystem, a: &Walk, b: &Walk) -> Result<bool> {
    if !a.is_closed() || !b.is_closed() {
        return Err(Error::Precondition("free homotopy compares closed walks".into()));
    }
    let ca = canonicalize(q, a)?;
    let cb = canonicalize(q, b)?;
    Ok(cyclic_equal(ca.arcs(), cb.arcs()))
}

/// Whether two paths with common endpoints are homotopic.
pub fn path_homotopic(q: &QuadSystem, a: &Walk, b: &Walk) -> Result<bool> {
    if a.is_closed() || b.is_closed() {
        return Err(Error::Precondition("path homotopy compares paths".into()));
    }
    if a.base() != b.base() || a.end() != b.end() {
        return Err(Error::Precondition("paths do not share their endpoints".into()));
    }
    Ok(canonicalize(q, a)?.arcs() == canonicalize(q, b)?.arcs())
}

pub(crate) fn normalize_rotation(q: &QuadSystem, w: Walk) -> Walk {
    if w.is_empty() {
        return w;
    }
    let k = least_rotation(w.arcs());
    w.rotated(q.surface(), k as i64)
}

/// Removes spurs and brackets from a walk read as a path. Endpoints are
/// preserved.
struct Reducer<'q> {
    q: &'q QuadSystem,
    arcs: Vec<ArcId>,
    /// `turns[i]` is the turn between `arcs[i - 1]` and `arcs[i]`.
    turns: Vec<i64>,
    /// Run-length encoding of `turns[1..]`.
    runs: Vec<(i64, usize)>,
    pending: Vec<ArcId>,
}

impl<'q> Reducer<'q> {
    fn new(q: &'q QuadSystem, capacity: usize) -> Self {
        Reducer {
            q,
            arcs: Vec::with_capacity(capacity),
            turns: Vec::with_capacity(capacity),
            runs: Vec::new(),
            pending: Vec::new(),
        }
    }

    fn feed(&mut self, a: ArcId) {
        self.pending.push(a);
        while let Some(x) = self.pending.pop() {
            self.push(x);
        }
    }

    fn pop(&mut self) {
        self.arcs.pop();
        self.turns.pop();
        if !self.arcs.is_empty() {
            let last = self.runs.last_mut().expect("run for every interior turn");
            last.1 -= 1;
            if last.1 == 0 {
                self.runs.pop();
            }
        }
    }

    fn push(&mut self, x: ArcId) {
        let Some(&top) = self.arcs.last() else {
            self.arcs.push(x);
            self.turns.push(0);
            return;
        };
        let t = self.q.turn_between(top, x);
        if t == 0 {
            self.pop();
            return;
        }
        self.arcs.push(x);
        self.turns.push(t);
        match self.runs.last_mut() {
            Some((v, n)) if *v == t => *n += 1,
            _ => self.runs.push((t, 1)),
        }
        self.contract_bracket();
    }

    fn contract_bracket(&mut self) {
        let Some(&(s, count)) = self.runs.last() else { return };
        if s != 1 && s != -1 {
            return;
        }
        let r = self.runs.len();
        let k = if count >= 2 {
            0
        } else if r >= 3 && self.runs[r - 2].0 == 2 * s && self.runs[r - 3].0 == s {
            self.runs[r - 2].1
        } else {
            return;
        };
        let n = self.arcs.len();
        let first = self.arcs[n - k - 3];
        let mut replacement = Vec::with_capacity(k + 1);
        let mut e = self.q.rotate(first, -s);
        replacement.push(e);
        for _ in 0..k {
            e = self.q.rotate(twin(e), -2 * s);
            replacement.push(e);
        }
        debug_assert_eq!(self.q.target(e), self.q.target(self.arcs[n - 1]));
        for _ in 0..k + 3 {
            self.pop();
        }
        self.pending.extend(replacement.into_iter().rev());
    }
}

fn reduce_linear(q: &QuadSystem, arcs: &[ArcId]) -> Vec<ArcId> {
    let mut r = Reducer::new(q, arcs.len());
    for &a in arcs {
        r.feed(a);
    }
    r.arcs
}

fn cyclic_turns(q: &QuadSystem, arcs: &[ArcId]) -> Vec<i64> {
    let n = arcs.len();
    (0..n).map(|i| q.turn_between(arcs[(i + n - 1) % n], arcs[i])).collect()
}

fn rotate_vec(arcs: &[ArcId], k: i64) -> Vec<ArcId> {
    let n = arcs.len();
    let k = k.rem_euclid(n as i64) as usize;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&arcs[k..]);
    out.extend_from_slice(&arcs[..k]);
    out
}

/// Shortens a closed walk with turns `s (2s)^(L-1)`, the `s` at position 0,
/// by following the other side of its ring of quads.
fn ring_shortcut(q: &QuadSystem, b: &[ArcId], s: i64) -> (Vec<ArcId>, VertexId) {
    if s < 0 {
        let inv: Vec<ArcId> = b.iter().rev().map(|&a| twin(a)).collect();
        let (short, v) = ring_shortcut(q, &inv, 1);
        return (short.iter().rev().map(|&a| twin(a)).collect(), v);
    }
    let n = b.len();
    let inner = (1..n.saturating_sub(1)).map(|i| twin(q.face_next(q.face_next(b[i])))).collect();
    (inner, q.target(q.face_next(b[0])))
}

fn canonical_closed(q: &QuadSystem, arcs: Vec<ArcId>, base: VertexId) -> Result<Walk> {
    let surface = q.surface();
    let mut cur = arcs;
    let mut base = base;
    let rounds = 2 * cur.len() + 8;
    for _ in 0..rounds {
        cur = reduce_linear(q, &cur);
        if cur.is_empty() {
            return Ok(Walk::trivial(base));
        }
        let t = cyclic_turns(q, &cur);
        match find_defect(&t, true) {
            Some(Defect::Spur { at }) | Some(Defect::Bracket { at, .. }) => {
                cur = rotate_vec(&cur, at as i64 - 1);
                base = surface.origin(cur[0]);
                continue;
            }
            Some(Defect::Ring { at, s }) => {
                let rotated = rotate_vec(&cur, at as i64);
                let (short, v) = ring_shortcut(q, &rotated, s);
                cur = short;
                base = cur.first().map_or(v, |&a| surface.origin(a));
                continue;
            }
            None => {}
        }
        push_negative_turns_closed(q, &mut cur)?;
        if cyclic_turns(q, &cur).iter().all(|&x| x == -2) {
            cur = cur.iter().map(|&b| q.face_next(q.face_next(twin(b)))).collect();
        }
        let walk = Walk::closed(surface, cur.clone())
            .map_err(|e| Error::Internal(format!("canonicalization broke the walk: {e}")))?;
        if is_canonical(q, &walk) {
            return Ok(normalize_rotation(q, walk));
        }
        base = walk.base();
    }
    Err(Error::Internal("canonicalization did not converge".into()))
}

/// Rewrites `x -1 (-2)^k y` into `(x+1) 2^k 1 (y+1)` until no `-1` remains.
fn push_negative_turns_closed(q: &QuadSystem, arcs: &mut [ArcId]) -> Result<()> {
    let n = arcs.len();
    let mut t = cyclic_turns(q, arcs);
    let mut work: Vec<usize> = (0..n).filter(|&i| t[i] == -1).collect();
    let mut steps = 0usize;
    while let Some(p) = work.pop() {
        if t[p] != -1 {
            continue;
        }
        steps += 1;
        if steps > 4 * n + 16 {
            return Err(Error::Internal("too many -1 rewrites".into()));
        }
        let mut k = 0;
        while k + 1 < n && t[(p + 1 + k) % n] == -2 {
            k += 1;
        }
        if k + 2 > n {
            return Err(Error::Internal("closed walk with turns -1 (-2)* is not geodesic".into()));
        }
        let first = (p + n - 1) % n;
        let last_target = q.target(arcs[(first + k + 1) % n]);
        let mut e = q.rotate(arcs[first], 1);
        arcs[first] = e;
        for m in 1..=k {
            e = q.rotate(twin(e), 2);
            arcs[(first + m) % n] = e;
        }
        e = q.rotate(twin(e), 1);
        arcs[(first + k + 1) % n] = e;
        if q.target(e) != last_target {
            return Err(Error::Internal("-1 rewrite moved an endpoint".into()));
        }
        for m in 0..(k + 3).min(n) {
            let pos = (first + m) % n;
            t[pos] = q.turn_between(arcs[(pos + n - 1) % n], arcs[pos]);
            if t[pos] == -1 {
                work.push(pos);
            }
        }
    }
    Ok(())
}

fn push_negative_turns_path(q: &QuadSystem, arcs: &mut [ArcId]) -> Result<()> {
    let n = arcs.len();
    if n < 2 {
        return Ok(());
    }
    // t[i] is the turn between arcs[i - 1] and arcs[i], for 1 <= i < n.
    let mut t = vec![0i64; n];
    for i in 1..n {
        t[i] = q.turn_between(arcs[i - 1], arcs[i]);
    }
    let mut work: Vec<usize> = (1..n).filter(|&i| t[i] == -1).collect();
    let mut steps = 0usize;
    while let Some(p) = work.pop() {
        if t[p] != -1 {
            continue;
        }
        steps += 1;
        if steps > 4 * n + 16 {
            return Err(Error::Internal("too many -1 rewrites".into()));
        }
        let mut k = 0;
        while p + 1 + k < n && t[p + 1 + k] == -2 {
            k += 1;
        }
        let first = p - 1;
        let last_target = q.target(arcs[first + k + 1]);
        let mut e = q.rotate(arcs[first], 1);
        arcs[first] = e;
        for m in 1..=k {
            e = q.rotate(twin(e), 2);
            arcs[first + m] = e;
        }
        e = q.rotate(twin(e), 1);
        arcs[first + k + 1] = e;
        if q.target(e) != last_target {
            return Err(Error::Internal("-1 rewrite moved an endpoint".into()));
        }
        for pos in first.max(1)..(first + k + 3).min(n) {
            t[pos] = q.turn_between(arcs[pos - 1], arcs[pos]);
            if t[pos] == -1 {
                work.push(pos);
            }
        }
    }
    Ok(())
}

fn canonical_path(q: &QuadSystem, w: &Walk) -> Result<Walk> {
    let (start, end) = (w.base(), w.end());
    let mut cur = w.arcs().to_vec();
    let rounds = 2 * cur.len() + 8;
    for _ in 0..rounds {
        cur = reduce_linear(q, &cur);
        push_negative_turns_path(q, &mut cur)?;
        let walk = Walk::path(q.surface(), cur.clone(), start)
            .map_err(|e| Error::Internal(format!("canonicalization broke the path: {e}")))?;
        if walk.end() != end {
            return Err(Error::Internal("canonicalization moved the path endpoint".into()));
        }
        if is_canonical(q, &walk) {
            return Ok(walk);
        }
    }
    Err(Error::Internal("path canonicalization did not converge".into()))
}

/// Canonical form of a path given by its arcs and start vertex.
pub(crate) fn canonical_path_arcs(q: &QuadSystem, arcs: Vec<ArcId>, start: VertexId) -> Result<Vec<ArcId>> {
    let walk = Walk::path(q.surface(), arcs, start)?;
    Ok(canonical_path(q, &walk)?.into_arcs())
}
