use super::{find_singular_bigon, swap_bigon, Immersion, Occurrence};
use crate::counting::Analyzer;
use crate::error::{Error, Result};
use crate::surface::{CombinatorialSurface, QuadSystem};
use crate::walk::{canonicalize, primitive_root, Walk};

/// A minimally crossing immersion and how it was reached.
#[derive(Clone, Debug)]
pub struct MinimalImmersion {
    /// The immersed curve, a geodesic on the system of quads.
    pub walk: Walk,
    pub immersion: Immersion,
    /// Self-crossings of the starting immersion of the primitive root.
    pub initial_crossings: usize,
    /// Crossings of the root after each swap.
    pub swap_trace: Vec<usize>,
    pub crossings: usize,
}

/// Minimal immersion of a closed walk on a surface of negative Euler
/// characteristic; the result lives on its system of quads.
pub fn minimal_immersion(surface: &CombinatorialSurface, c: &Walk) -> Result<MinimalImmersion> {
    let analyzer = Analyzer::new(surface)?;
    let Some(q) = analyzer.quads() else {
        return Err(Error::UnsupportedSurface(
            "minimal immersions are computed on surfaces of negative Euler characteristic".into(),
        ));
    };
    let on_quads = analyzer.transport(c)?;
    let out = minimal_immersion_on_quads(q, &on_quads)?;
    let expected = analyzer.self_intersection(c)? as usize;
    if out.crossings != expected {
        return Err(Error::Internal(format!("minimal immersion has {} crossings, expected {expected}", out.crossings)));
    }
    Ok(out)
}

/// Minimal immersion of a closed walk given on a system of quads.
pub fn minimal_immersion_on_quads(q: &QuadSystem, c: &Walk) -> Result<MinimalImmersion> {
    let s = q.surface();
    let canonical = canonicalize(q, c)?;
    if canonical.is_empty() {
        let immersion = Immersion::new(s, vec![canonical.clone()])?;
        return Ok(MinimalImmersion {
            walk: canonical,
            immersion,
            initial_crossings: 0,
            swap_trace: Vec::new(),
            crossings: 0,
        });
    }
    let (root, p) = primitive_root(q, &canonical)?;
    let mut imm = Immersion::new(s, vec![root])?;
    let initial = imm.crossing_count(s, 0, 0);
    let mut trace = Vec::new();
    while let Some(b) = find_singular_bigon(q, &imm)? {
        let (_, next) = swap_bigon(q, &imm, &b)?;
        imm = next;
        trace.push(imm.crossing_count(s, 0, 0));
        if trace.len() > initial {
            return Err(Error::Internal("bigon swaps did not terminate".into()));
        }
    }
    let root_crossings = imm.crossing_count(s, 0, 0);
    let (walk, immersion) = if p == 1 { (imm.curve(0).clone(), imm) } else { parallel_power(s, &imm, p)? };
    let crossings = immersion.crossing_count(s, 0, 0);
    if crossings != p * p * root_crossings + p - 1 {
        return Err(Error::Internal(format!("power immersion has {crossings} crossings")));
    }
    Ok(MinimalImmersion { walk, immersion, initial_crossings: initial, swap_trace: trace, crossings })
}

/// Traverses the immersed curve `p` times, each copy running just to the
/// right of the previous one.
fn parallel_power(s: &CombinatorialSurface, imm: &Immersion, p: usize) -> Result<(Walk, Immersion)> {
    let root = imm.curve(0);
    let m = root.len();
    let walk = root.power(p);
    let orders = imm
        .orders()
        .iter()
        .map(|order| {
            let mut out = Vec::with_capacity(order.len() * p);
            for o in order {
                let copies = (0..p).map(|r| Occurrence { curve: 0, index: o.index + r * m, direction: o.direction });
                if o.direction > 0 {
                    out.extend(copies);
                } else {
                    out.extend(copies.rev());
                }
            }
            out
        })
        .collect();
    let immersion = Immersion::from_orders(s, vec![walk.clone()], orders)?;
    Ok((walk, immersion))
}
