use super::pair_count;
use crate::error::{Error, Result};
use crate::surface::{
    quadify, reduce_to_one_face, twin, ArcChord, CombinatorialSurface, CurveTransport, QuadSystem, Topology,
};
use crate::walk::{canonicalize, primitive_root, Walk};
use std::collections::VecDeque;

#[derive(Clone, Debug)]
enum Kind {
    /// Every closed curve is contractible.
    Simply,
    /// Integer weight per arc whose sum along a closed curve is its winding
    /// number around the core.
    Annulus {
        cocycle: Vec<i64>,
    },
    /// Homology class of every arc in the basis of the two loops kept by the
    /// one-face reduction.
    Torus {
        homology: Vec<(i64, i64)>,
    },
    Hyperbolic {
        quads: QuadSystem,
        transport: Option<CurveTransport>,
    },
}

/// Computes intersection numbers of closed walks on a fixed surface.
#[derive(Clone, Debug)]
pub struct Analyzer {
    surface: CombinatorialSurface,
    kind: Kind,
}

impl Analyzer {
    pub fn new(surface: &CombinatorialSurface) -> Result<Analyzer> {
        let kind = match surface.topology() {
            Topology::Sphere | Topology::Disk => Kind::Simply,
            Topology::Annulus => Kind::Annulus { cocycle: annulus_cocycle(surface)? },
            Topology::Torus => Kind::Torus { homology: torus_homology(surface) },
            Topology::Hyperbolic => {
                let (quads, transport) = quadify(surface)?;
                Kind::Hyperbolic { quads, transport: Some(transport) }
            }
        };
        Ok(Analyzer { surface: surface.clone(), kind })
    }

    /// Analyzer for walks given directly on a system of quads.
    pub fn for_quads(q: &QuadSystem) -> Analyzer {
        Analyzer { surface: q.surface().clone(), kind: Kind::Hyperbolic { quads: q.clone(), transport: None } }
    }

    pub fn surface(&self) -> &CombinatorialSurface {
        &self.surface
    }

    pub fn topology(&self) -> Topology {
        match self.kind {
            Kind::Hyperbolic { .. } => Topology::Hyperbolic,
            _ => self.surface.topology(),
        }
    }

    /// The system of quads curves are moved to, on hyperbolic surfaces.
    pub fn quads(&self) -> Option<&QuadSystem> {
        match &self.kind {
            Kind::Hyperbolic { quads, .. } => Some(quads),
            _ => None,
        }
    }

    fn check(&self, w: &Walk) -> Result<()> {
        if !w.is_closed() {
            return Err(Error::InvalidWalk("intersection numbers are defined for closed walks".into()));
        }
        w.validate(&self.surface)
    }

    /// The walk moved to the system of quads, on hyperbolic surfaces.
    pub fn transport(&self, w: &Walk) -> Result<Walk> {
        self.check(w)?;
        match &self.kind {
            Kind::Hyperbolic { transport: Some(t), .. } => t.transport_walk(w),
            Kind::Hyperbolic { transport: None, .. } => Ok(w.clone()),
            _ => Err(Error::UnsupportedSurface("only hyperbolic surfaces have a system of quads".into())),
        }
    }

    /// Canonical primitive root and exponent of a walk on the quad system,
    /// or `None` when the walk is contractible.
    fn root(&self, quads: &QuadSystem, transport: &Option<CurveTransport>, w: &Walk) -> Result<Option<(Walk, usize)>> {
        let on_quads = match transport {
            Some(t) => t.transport_walk(w)?,
            None => w.clone(),
        };
        let c = canonicalize(quads, &on_quads)?;
        if c.is_empty() {
            return Ok(None);
        }
        primitive_root(quads, &c).map(Some)
    }

    pub fn self_intersection(&self, c: &Walk) -> Result<u64> {
        self.check(c)?;
        match &self.kind {
            Kind::Simply => Ok(0),
            Kind::Annulus { cocycle } => {
                let p = winding(cocycle, c).unsigned_abs();
                Ok(p.saturating_sub(1))
            }
            Kind::Torus { homology } => {
                let (x, y) = homology_class(homology, c);
                Ok(gcd(x.unsigned_abs(), y.unsigned_abs()).saturating_sub(1))
            }
            Kind::Hyperbolic { quads, transport } => {
                let Some((root, p)) = self.root(quads, transport, c)? else {
                    return Ok(0);
                };
                let p = p as u64;
                Ok(p * p * primitive_self(quads, &root)? + p - 1)
            }
        }
    }

    pub fn intersection(&self, c: &Walk, d: &Walk) -> Result<u64> {
        self.check(c)?;
        self.check(d)?;
        match &self.kind {
            Kind::Simply | Kind::Annulus { .. } => Ok(0),
            Kind::Torus { homology } => {
                let (x, y) = homology_class(homology, c);
                let (u, v) = homology_class(homology, d);
                Ok((x * v - y * u).unsigned_abs())
            }
            Kind::Hyperbolic { quads, transport } => {
                let (Some((rc, p)), Some((rd, k))) = (self.root(quads, transport, c)?, self.root(quads, transport, d)?)
                else {
                    return Ok(0);
                };
                let pq = (p * k) as u64;
                let rd_inv = canonicalize(quads, &rd.inverse())?;
                if rc.arcs() == rd.arcs() || rc.arcs() == rd_inv.arcs() {
                    Ok(2 * pq * primitive_self(quads, &rc)?)
                } else {
                    Ok(pq * pair_count(quads, &rc, &rd)? as u64)
                }
            }
        }
    }

    /// Homology class `(x, y)` of a closed walk on a torus.
    pub fn torus_class(&self, c: &Walk) -> Result<(i64, i64)> {
        self.check(c)?;
        match &self.kind {
            Kind::Torus { homology } => Ok(homology_class(homology, c)),
            _ => Err(Error::UnsupportedSurface("torus classes need a torus".into())),
        }
    }

    /// Winding number of a closed walk around the core of an annulus.
    pub fn winding_number(&self, c: &Walk) -> Result<i64> {
        self.check(c)?;
        match &self.kind {
            Kind::Annulus { cocycle } => Ok(winding(cocycle, c)),
            _ => Err(Error::UnsupportedSurface("winding numbers need an annulus".into())),
        }
    }
}

fn primitive_self(q: &QuadSystem, root: &Walk) -> Result<u64> {
    let twice = pair_count(q, root, root)?;
    if twice % 2 != 0 {
        return Err(Error::Internal(format!("odd crossing count {twice} of a curve with itself")));
    }
    Ok((twice / 2) as u64)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn winding(cocycle: &[i64], c: &Walk) -> i64 {
    c.arcs().iter().map(|&a| cocycle[a]).sum()
}

fn homology_class(homology: &[(i64, i64)], c: &Walk) -> (i64, i64) {
    c.arcs().iter().fold((0, 0), |(x, y), &a| (x + homology[a].0, y + homology[a].1))
}

/// Dual path between the two boundary faces; the edges it crosses carry the
/// cocycle.
fn annulus_cocycle(surface: &CombinatorialSurface) -> Result<Vec<i64>> {
    let mut holes = surface.perforated_faces();
    let (Some(from), Some(to)) = (holes.next(), holes.next()) else {
        return Err(Error::UnsupportedSurface("an annulus has two boundary faces".into()));
    };
    let mut reached_by = vec![None; surface.face_count()];
    let mut seen = vec![false; surface.face_count()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(f) = queue.pop_front() {
        if f == to {
            break;
        }
        for a in surface.face_walk(f) {
            let g = surface.face_of(twin(a));
            if !seen[g] {
                seen[g] = true;
                reached_by[g] = Some(a);
                queue.push_back(g);
            }
        }
    }
    if !seen[to] {
        return Err(Error::Disconnected);
    }
    let mut cocycle = vec![0; surface.arc_count()];
    let mut f = to;
    while let Some(a) = reached_by[f] {
        cocycle[a] += 1;
        cocycle[twin(a)] -= 1;
        f = surface.face_of(a);
    }
    Ok(cocycle)
}

fn torus_homology(surface: &CombinatorialSurface) -> Vec<(i64, i64)> {
    let red = reduce_to_one_face(surface);
    let basis = |a: usize| -> (i64, i64) {
        let sign = if a.is_multiple_of(2) { 1 } else { -1 };
        match red.kept_edges.iter().position(|&e| e == a >> 1) {
            Some(0) => (sign, 0),
            Some(_) => (0, sign),
            None => (0, 0),
        }
    };
    // prefix[k]: class of the face walk up to and including its arc k.
    let mut prefix = Vec::with_capacity(red.face_walk.len());
    let mut acc = (0, 0);
    for &a in &red.face_walk {
        let h = basis(a);
        acc = (acc.0 + h.0, acc.1 + h.1);
        prefix.push(acc);
    }
    red.chords
        .iter()
        .map(|ch| match *ch {
            ArcChord::Contracted => (0, 0),
            ArcChord::Chord { start, end } => (prefix[end].0 - prefix[start].0, prefix[end].1 - prefix[start].1),
        })
        .collect()
}

pub fn intersection_number(surface: &CombinatorialSurface, c: &Walk, d: &Walk) -> Result<u64> {
    Analyzer::new(surface)?.intersection(c, d)
}

pub fn self_intersection_number(surface: &CombinatorialSurface, c: &Walk) -> Result<u64> {
    Analyzer::new(surface)?.self_intersection(c)
}

pub fn torus_classes(surface: &CombinatorialSurface, c: &Walk) -> Result<(i64, i64)> {
    Analyzer::new(surface)?.torus_class(c)
}

pub fn winding_number(surface: &CombinatorialSurface, c: &Walk) -> Result<i64> {
    Analyzer::new(surface)?.winding_number(c)
}
