use super::Walk;
use crate::error::{Error, Result};
use crate::surface::QuadSystem;

/// Run-length encoded turn sequence of a walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TurnSequence {
    pub runs: Vec<(i64, usize)>,
    pub cyclic: bool,
}

impl TurnSequence {
    pub fn encode(turns: &[i64], cyclic: bool) -> TurnSequence {
        let mut runs: Vec<(i64, usize)> = Vec::new();
        for &t in turns {
            match runs.last_mut() {
                Some((v, n)) if *v == t => *n += 1,
                _ => runs.push((t, 1)),
            }
        }
        TurnSequence { runs, cyclic }
    }

    pub fn decode(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len());
        for &(t, n) in &self.runs {
            out.extend(std::iter::repeat_n(t, n));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.runs.iter().map(|r| r.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }
}

/// Turns of a walk. For a closed walk of length `L`, entry `i` is the turn
/// at `c(i)` between `c[i-1, i]` and `c[i, i+1]`. For a path, entry `i - 1`
/// is the turn at its interior vertex `c(i)`.
pub fn turns(q: &QuadSystem, w: &Walk) -> Vec<i64> {
    let a = w.arcs();
    let n = a.len();
    if w.is_closed() {
        (0..n).map(|i| q.turn_between(a[(i + n - 1) % n], a[i])).collect()
    } else {
        (1..n).map(|i| q.turn_between(a[i - 1], a[i])).collect()
    }
}

pub fn turn_sequence(q: &QuadSystem, w: &Walk) -> Result<TurnSequence> {
    if w.is_empty() {
        return Err(Error::InvalidWalk("the turn sequence of an empty walk is undefined".into()));
    }
    Ok(TurnSequence::encode(&turns(q, w), w.is_closed()))
}

/// A place where a closed or open turn sequence fails to be geodesic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Defect {
    /// Turn zero at turn position `at`.
    Spur { at: usize },
    /// Turns `s (2s)^k s` starting at turn position `at`.
    Bracket { at: usize, k: usize, s: i64 },
    /// A closed turn sequence `s (2s)^(L-1)`, the lone `s` at position `at`.
    Ring { at: usize, s: i64 },
}

/// First defect of a turn sequence, scanning cyclically when `cyclic`.
pub(crate) fn find_defect(t: &[i64], cyclic: bool) -> Option<Defect> {
    let n = t.len();
    if let Some(at) = t.iter().position(|&x| x == 0) {
        return Some(Defect::Spur { at });
    }
    for at in 0..n {
        let s = t[at];
        if s != 1 && s != -1 {
            continue;
        }
        let mut k = 0;
        let mut j = at + 1;
        loop {
            if !cyclic && j >= n {
                break;
            }
            if cyclic && k + 1 >= n {
                return Some(Defect::Ring { at, s });
            }
            let x = t[j % n];
            if x == 2 * s {
                k += 1;
                j += 1;
                continue;
            }
            if x == s {
                // In a closed walk of length L a bracket spans k + 3 <= L arcs
                // unless it wraps onto itself, which only the ring case does.
                if !cyclic || k + 3 <= n {
                    return Some(Defect::Bracket { at, k, s });
                }
            }
            break;
        }
    }
    None
}

/// No spurs and no brackets, checked cyclically for closed walks.
pub fn is_geodesic(q: &QuadSystem, w: &Walk) -> bool {
    find_defect(&turns(q, w), w.is_closed()).is_none()
}

/// Geodesic, no `-1` turn, and for closed walks some turn other than `-2`.
pub fn is_canonical(q: &QuadSystem, w: &Walk) -> bool {
    if w.is_empty() {
        return true;
    }
    let t = turns(q, w);
    if find_defect(&t, w.is_closed()).is_some() || t.contains(&-1) {
        return false;
    }
    !(w.is_closed() && t.iter().all(|&x| x == -2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rle_round_trip() {
        let t = vec![1, 1, 2, -3, -3, -3, 2];
        let enc = TurnSequence::encode(&t, true);
        assert_eq!(enc.runs, vec![(1, 2), (2, 1), (-3, 3), (2, 1)]);
        assert_eq!(enc.decode(), t);
    }

    #[test]
    fn defects() {
        assert_eq!(find_defect(&[2, 0, 3], false), Some(Defect::Spur { at: 1 }));
        assert_eq!(find_defect(&[3, 1, 2, 2, 1], false), Some(Defect::Bracket { at: 1, k: 2, s: 1 }));
        assert_eq!(find_defect(&[3, -1, -2, -1, 3], true), Some(Defect::Bracket { at: 1, k: 1, s: -1 }));
        assert_eq!(find_defect(&[2, 1, 2, 2], true), Some(Defect::Ring { at: 1, s: 1 }));
        assert_eq!(find_defect(&[1, 2, 2, 3], false), None);
        // Wrapping bracket across the junction.
        assert_eq!(find_defect(&[2, 1, 3, 1], true), Some(Defect::Bracket { at: 3, k: 1, s: 1 }));
        assert_eq!(find_defect(&[-2, -2, -2], true), None);
    }
}
