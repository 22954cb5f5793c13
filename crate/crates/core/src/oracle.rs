//! Exponential brute-force references for small curves.
//!
//! The minimum number of crossings over all geodesics of a class and all
//! their combinatorial immersions is the geometric intersection number, and
//! homotopic geodesics have equal length, so everything here is a finite
//! enumeration.

use crate::error::{Error, Result};
use crate::immersion::{Immersion, Occurrence};
use crate::surface::{twin, ArcId, CombinatorialSurface, QuadSystem};
use crate::walk::{apply_move, canonicalize, is_geodesic, least_rotation, ElementaryMove, Walk};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, HashMap};

/// Environment variable overriding [`OracleBudget::max_enumeration`].
pub const BUDGET_ENV: &str = "CURVECROSS_ORACLE_BUDGET";

/// Bounds on oracle work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Longest canonical curve accepted.
    pub max_len: usize,
    /// Most elementary moves applied by a budgeted perturbation.
    pub max_depth: usize,
    /// Most walks plus immersions examined by one call.
    pub max_enumeration: u64,
    pub seed: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_len: 8, max_depth: 64, max_enumeration: 50_000_000, seed: 0 }
    }
}

impl OracleBudget {
    /// The default budget with `max_enumeration` read from
    /// `CURVECROSS_ORACLE_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        let mut b = OracleBudget::default();
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            b.max_enumeration = v
                .trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("{BUDGET_ENV} must be a positive integer, got {v:?}")))?;
        }
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_len == 0 || self.max_depth == 0 || self.max_enumeration == 0 {
            return Err(Error::Precondition("oracle budget bounds must be positive".into()));
        }
        Ok(())
    }
}

struct Meter {
    used: u64,
    limit: u64,
}

impl Meter {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded(format!("more than {} oracle steps", self.limit)));
        }
        Ok(())
    }
}

/// Brute-force oracle over one system of quads. Geodesics of each length
/// are enumerated once and grouped by canonical form.
pub struct Oracle<'q> {
    q: &'q QuadSystem,
    budget: OracleBudget,
    meter: Meter,
    by_length: HashMap<usize, HashMap<Vec<ArcId>, Vec<Walk>>>,
}

impl<'q> Oracle<'q> {
    pub fn new(q: &'q QuadSystem, budget: OracleBudget) -> Result<Self> {
        budget.validate()?;
        Ok(Oracle { q, budget, meter: Meter { used: 0, limit: budget.max_enumeration }, by_length: HashMap::new() })
    }

    /// Steps spent by the last call against `max_enumeration`.
    pub fn work(&self) -> u64 {
        self.meter.used
    }

    /// All geodesic closed walks homotopic to `c`, one per rotation class,
    /// each given by its least rotation.
    pub fn homotopic_geodesics(&mut self, c: &Walk) -> Result<Vec<Walk>> {
        let target = canonicalize(self.q, c)?;
        if target.is_empty() {
            return Ok(vec![target]);
        }
        let len = target.len();
        if len > self.budget.max_len {
            return Err(Error::BudgetExceeded(format!(
                "curve of length {len} exceeds the oracle limit {}",
                self.budget.max_len
            )));
        }
        if !self.by_length.contains_key(&len) {
            let groups = self.all_geodesics(len)?;
            self.by_length.insert(len, groups);
        }
        match self.by_length[&len].get(target.arcs()) {
            Some(reps) => Ok(reps.clone()),
            None => Err(Error::Internal("the canonical form was not found among the geodesics".into())),
        }
    }

    fn all_geodesics(&mut self, len: usize) -> Result<HashMap<Vec<ArcId>, Vec<Walk>>> {
        let s = self.q.surface();
        let mut found = BTreeSet::new();
        let mut path = Vec::with_capacity(len);
        let mut turns = Vec::with_capacity(len);
        for first in 0..s.arc_count() {
            path.push(first);
            self.search(len, &mut path, &mut turns, &mut found)?;
            path.pop();
        }
        let mut groups: HashMap<Vec<ArcId>, Vec<Walk>> = HashMap::new();
        for arcs in found {
            let w = Walk::closed(s, arcs)?;
            let key = canonicalize(self.q, &w)?.into_arcs();
            groups.entry(key).or_default().push(w);
        }
        Ok(groups)
    }

    fn search(
        &mut self,
        len: usize,
        path: &mut Vec<ArcId>,
        turns: &mut Vec<i64>,
        found: &mut BTreeSet<Vec<ArcId>>,
    ) -> Result<()> {
        self.meter.tick()?;
        let q = self.q;
        let s = q.surface();
        let last = *path.last().expect("non-empty path");
        if path.len() == len {
            if s.target(last) != s.origin(path[0]) {
                return Ok(());
            }
            let w = Walk::closed(s, path.clone())?;
            if is_geodesic(q, &w) {
                let k = least_rotation(path);
                let mut arcs = path[k..].to_vec();
                arcs.extend_from_slice(&path[..k]);
                found.insert(arcs);
            }
            return Ok(());
        }
        for &a in s.rotation(s.target(last)) {
            if a == twin(last) {
                continue;
            }
            turns.push(q.turn_between(last, a));
            if !has_bracket_suffix(turns) {
                path.push(a);
                self.search(len, path, turns, found)?;
                path.pop();
            }
            turns.pop();
        }
        Ok(())
    }

    /// `i(c)` when `d` is absent, `i(c, d)` otherwise.
    pub fn intersection(&mut self, c: &Walk, d: Option<&Walk>) -> Result<u64> {
        self.meter.used = 0;
        let reps_c = self.homotopic_geodesics(c)?;
        if reps_c.first().is_none_or(Walk::is_empty) {
            return Ok(0);
        }
        let s = self.q.surface();
        let mut best = usize::MAX;
        match d {
            None => {
                for rc in &reps_c {
                    best = best.min(min_crossings(s, vec![rc.clone()], &mut self.meter, best)?);
                    if best == 0 {
                        break;
                    }
                }
            }
            Some(d) => {
                let reps_d = self.homotopic_geodesics(d)?;
                if reps_d.first().is_none_or(Walk::is_empty) {
                    return Ok(0);
                }
                'outer: for rc in &reps_c {
                    for rd in &reps_d {
                        best = best.min(min_crossings(s, vec![rc.clone(), rd.clone()], &mut self.meter, best)?);
                        if best == 0 {
                            break 'outer;
                        }
                    }
                }
            }
        }
        Ok(best as u64)
    }
}

/// All geodesic closed walks homotopic to `c`, one per rotation class, each
/// given by its least rotation.
pub fn enumerate_homotopic_geodesics(q: &QuadSystem, c: &Walk, budget: &OracleBudget) -> Result<Vec<Walk>> {
    Oracle::new(q, *budget)?.homotopic_geodesics(c)
}

/// Minimum number of crossings over every pair of geodesic representatives
/// and every immersion of them: `i(c)` when `d` is absent, `i(c, d)`
/// otherwise.
pub fn brute_force_intersection(q: &QuadSystem, c: &Walk, d: Option<&Walk>, budget: &OracleBudget) -> Result<u64> {
    Oracle::new(q, *budget)?.intersection(c, d)
}

/// Whether the interior turns end with `s (2s)^k s`.
fn has_bracket_suffix(t: &[i64]) -> bool {
    let Some(&last) = t.last() else {
        return false;
    };
    if last != 1 && last != -1 {
        return false;
    }
    let mut k = t.len() - 1;
    while k > 0 {
        k -= 1;
        if t[k] == 2 * last {
            continue;
        }
        return t[k] == last;
    }
    false
}

/// Minimum crossings (self-crossings for one curve, mutual crossings for
/// two) over all per-edge orders.
fn min_crossings(s: &CombinatorialSurface, curves: Vec<Walk>, meter: &mut Meter, mut best: usize) -> Result<usize> {
    let two = curves.len() == 2;
    let base = Immersion::new(s, curves.clone())?;
    let groups: Vec<Vec<Occurrence>> = base.orders().to_vec();
    let mut perms: Vec<Vec<usize>> = groups.iter().map(|g| (0..g.len()).collect()).collect();
    loop {
        meter.tick()?;
        let orders = groups.iter().zip(&perms).map(|(g, p)| p.iter().map(|&k| g[k]).collect()).collect();
        let imm = Immersion::from_orders(s, curves.clone(), orders)?;
        let count = if two { imm.crossing_count(s, 0, 1) } else { imm.crossing_count(s, 0, 0) };
        best = best.min(count);
        if best == 0 {
            return Ok(0);
        }
        let mut advanced = false;
        for p in perms.iter_mut() {
            if next_permutation(p) {
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(best);
        }
    }
}

/// Lexicographic successor; on the last permutation, resets to the first
/// and returns false.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.reverse();
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every elementary move applicable to `w`.
fn applicable_moves(s: &CombinatorialSurface, w: &Walk) -> Vec<ElementaryMove> {
    let n = w.len();
    let limit = if w.is_closed() { n.max(1) } else { n + 1 };
    let mut moves = Vec::new();
    for index in 0..limit {
        let v = w.vertex(s, index as i64);
        for &arc in s.rotation(v) {
            moves.push(ElementaryMove::InsertSpur { index, arc });
            let f = s.face_of(arc);
            if s.is_perforated(f) {
                continue;
            }
            let flen = s.face_len(f);
            let room = if w.is_closed() { n } else { n - index.min(n) };
            let mut len = 0;
            let mut a = arc;
            moves.push(ElementaryMove::ReplaceFacePart { index, len: 0, face_arc: arc });
            while len < flen && len < room && w.arc((index + len) as i64) == a {
                len += 1;
                a = s.face_next(a);
                moves.push(ElementaryMove::ReplaceFacePart { index, len, face_arc: arc });
            }
        }
        let spur = if w.is_closed() { n >= 2 } else { index + 1 < n };
        if spur && w.arc(index as i64 + 1) == twin(w.arc(index as i64)) {
            moves.push(ElementaryMove::RemoveSpur { index });
        }
    }
    moves
}

/// Applies `steps` elementary moves chosen uniformly among the applicable
/// ones.
pub fn random_homotopic_perturbation(q: &QuadSystem, c: &Walk, steps: usize, seed: u64) -> Result<Walk> {
    let s = q.surface();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = c.clone();
    for _ in 0..steps {
        let moves = applicable_moves(s, &w);
        let mv = moves[rng.gen_range(0..moves.len())];
        w = apply_move(s, &w, mv)?;
    }
    Ok(w)
}

/// [`random_homotopic_perturbation`] with `budget.max_depth` moves and the
/// budget seed.
pub fn budgeted_perturbation(q: &QuadSystem, c: &Walk, budget: &OracleBudget) -> Result<Walk> {
    budget.validate()?;
    random_homotopic_perturbation(q, c, budget.max_depth, budget.seed)
}
