//! SVG drawings of combinatorial immersions.
//!
//! Every vertex becomes a disk and every edge a bundle of parallel strands.
//! A strand enters a disk at a port on its boundary and is joined to the
//! next strand of the curve by a straight chord. Ports around a disk follow
//! the rotation and, within one arc, the left-to-right order of the
//! immersion, so two chords cross exactly when their strands are linked.

use curvecross::immersion::Immersion;
use curvecross::surface::{twin, ArcId, CombinatorialSurface, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RenderError {
    #[error("layout placed vertices {0} and {1} on top of each other")]
    DegenerateLayout(i64, i64),
    #[error("drawing has {drawn} chord intersections but the immersion has {expected} crossings")]
    Recount { drawn: usize, expected: usize },
    #[error("the renderer draws at most two curves, got {0}")]
    TooManyCurves(usize),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    /// Seed of the force-directed layout.
    pub seed: u64,
    /// Width and height of the drawing in pixels.
    pub scale: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { seed: 1, scale: 600.0 }
    }
}

type Point = (f64, f64);

const COLORS: [&str; 2] = ["#c0392b", "#2471a3"];

/// Force-directed placement of the vertices in the unit square.
pub fn layout(surface: &CombinatorialSurface, seed: u64) -> Vec<Point> {
    let n = surface.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pos: Vec<Point> = (0..n).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect();
    if n < 2 {
        return vec![(0.5, 0.5); n];
    }
    let mut adjacent = vec![Vec::new(); n];
    for (u, v) in surface.endpoints() {
        if u != v {
            adjacent[u].push(v);
        }
    }
    let k = (1.0 / n as f64).sqrt();
    let mut temperature = 0.1;
    for _ in 0..300 {
        let mut shift = vec![(0.0, 0.0); n];
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let (dx, dy) = (pos[u].0 - pos[v].0, pos[u].1 - pos[v].1);
                let d = (dx * dx + dy * dy).sqrt().max(1e-6);
                let f = k * k / d;
                shift[u].0 += dx / d * f;
                shift[u].1 += dy / d * f;
            }
            for &v in &adjacent[u] {
                let (dx, dy) = (pos[u].0 - pos[v].0, pos[u].1 - pos[v].1);
                let d = (dx * dx + dy * dy).sqrt().max(1e-6);
                let f = d * d / k;
                shift[u].0 -= dx / d * f;
                shift[u].1 -= dy / d * f;
            }
        }
        for u in 0..n {
            let len = (shift[u].0 * shift[u].0 + shift[u].1 * shift[u].1).sqrt().max(1e-12);
            let step = len.min(temperature);
            pos[u].0 += shift[u].0 / len * step;
            pos[u].1 += shift[u].1 / len * step;
        }
        temperature *= 0.98;
    }
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for p in &pos {
        lo = (lo.0.min(p.0), lo.1.min(p.1));
        hi = (hi.0.max(p.0), hi.1.max(p.1));
    }
    let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-12);
    pos.iter().map(|p| ((p.0 - lo.0) / span, (p.1 - lo.1) / span)).collect()
}

struct Geometry<'a> {
    surface: &'a CombinatorialSurface,
    imm: &'a Immersion,
    centers: Vec<Point>,
    radius: f64,
}

impl Geometry<'_> {
    /// Angle of the port of the strand at rank `rank` along `arc`, at the
    /// origin of `arc`. Increases with the circular order of the immersion.
    fn angle(&self, arc: ArcId, rank: usize) -> f64 {
        let v = self.surface.origin(arc);
        let d = self.surface.degree(v) as f64;
        let n = self.imm.order(arc >> 1).len().max(1) as f64;
        let slot = self.surface.position_in_rotation(arc) as f64;
        (slot + 0.1 + 0.8 * (rank as f64 + 0.5) / n) * TAU / d
    }

    fn port(&self, arc: ArcId, rank: usize) -> Point {
        let c = self.centers[self.surface.origin(arc)];
        let t = self.angle(arc, rank);
        (c.0 + self.radius * t.cos(), c.1 + self.radius * t.sin())
    }

    /// Chord of visit `index` of `curve`, from the incoming to the outgoing
    /// strand.
    fn chord(&self, curve: usize, index: usize) -> (VertexId, Point, Point) {
        let c = self.imm.curve(curve);
        let n = c.len();
        let prev = (index + n - 1) % n;
        let (_, r_in) = self.imm.rank(self.surface, curve, prev, false);
        let (_, r_out) = self.imm.rank(self.surface, curve, index, true);
        let a_in = twin(c.arcs()[prev]);
        let a_out = c.arcs()[index];
        (self.surface.origin(a_out), self.port(a_in, r_in), self.port(a_out, r_out))
    }
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Whether two segments with four distinct endpoints cross.
pub fn segments_cross(p: (Point, Point), q: (Point, Point)) -> bool {
    let d1 = orient(q.0, q.1, p.0);
    let d2 = orient(q.0, q.1, p.1);
    let d3 = orient(p.0, p.1, q.0);
    let d4 = orient(p.0, p.1, q.1);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Number of pairs of chords that intersect, disk by disk.
fn count_chord_crossings(chords: &[(VertexId, Point, Point)]) -> usize {
    let mut by_vertex: std::collections::BTreeMap<VertexId, Vec<(Point, Point)>> = Default::default();
    for &(v, a, b) in chords {
        by_vertex.entry(v).or_default().push((a, b));
    }
    let mut count = 0;
    for list in by_vertex.values() {
        for x in 0..list.len() {
            for y in x + 1..list.len() {
                if segments_cross(list[x], list[y]) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Renders an immersion of one or two curves. The chord intersections of
/// the drawing are recounted and must match the crossings of `imm`.
pub fn render_svg(
    surface: &CombinatorialSurface,
    imm: &Immersion,
    options: &RenderOptions,
) -> Result<String, RenderError> {
    if imm.curves().len() > 2 {
        return Err(RenderError::TooManyCurves(imm.curves().len()));
    }
    let unit = layout(surface, options.seed);
    let mut min_gap = f64::MAX;
    for u in 0..unit.len() {
        for v in u + 1..unit.len() {
            let d = ((unit[u].0 - unit[v].0).powi(2) + (unit[u].1 - unit[v].1).powi(2)).sqrt();
            if d < 1e-6 {
                return Err(RenderError::DegenerateLayout(surface.vertex_label(u), surface.vertex_label(v)));
            }
            min_gap = min_gap.min(d);
        }
    }
    let margin = 0.15 * options.scale;
    let inner = options.scale - 2.0 * margin;
    let centers: Vec<Point> = unit.iter().map(|p| (margin + p.0 * inner, margin + p.1 * inner)).collect();
    let radius =
        if min_gap == f64::MAX { 0.2 * options.scale } else { (0.3 * min_gap * inner).min(0.12 * options.scale) };
    let geo = Geometry { surface, imm, centers, radius };

    let mut chords = Vec::new();
    for (k, c) in imm.curves().iter().enumerate() {
        for i in 0..c.len() {
            chords.push((k, geo.chord(k, i)));
        }
    }
    let flat: Vec<_> = chords.iter().map(|&(_, ch)| ch).collect();
    let drawn = count_chord_crossings(&flat);
    let expected = imm.crossings(surface).len();
    if drawn != expected {
        return Err(RenderError::Recount { drawn, expected });
    }

    let mut svg = String::new();
    let size = options.scale;
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    );
    let _ = writeln!(svg, "<!-- crossings: {expected} -->");
    let _ = writeln!(svg, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    for (v, c) in geo.centers.iter().enumerate() {
        let _ = writeln!(
            svg,
            r##"<circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="#f4f4f4" stroke="#555555" stroke-width="1"><title>vertex {}</title></circle>"##,
            c.0,
            c.1,
            radius,
            surface.vertex_label(v)
        );
    }
    for (k, c) in imm.curves().iter().enumerate() {
        let color = COLORS[k];
        for (i, &a) in c.arcs().iter().enumerate() {
            let (_, r_out) = imm.rank(surface, k, i, true);
            let (_, r_in) = imm.rank(surface, k, i, false);
            let p = geo.port(a, r_out);
            let q = geo.port(twin(a), r_in);
            let (cp, cq) = (geo.centers[surface.origin(a)], geo.centers[surface.target(a)]);
            let pull = 1.5 * radius;
            let out = |x: Point, c: Point| {
                let (dx, dy) = (x.0 - c.0, x.1 - c.1);
                let len = (dx * dx + dy * dy).sqrt().max(1e-12);
                (x.0 + dx / len * pull, x.1 + dy / len * pull)
            };
            let (c1, c2) = (out(p, cp), out(q, cq));
            let _ = writeln!(
                svg,
                r#"<path d="M {:.3} {:.3} C {:.3} {:.3} {:.3} {:.3} {:.3} {:.3}" fill="none" stroke="{color}" stroke-width="1.2" stroke-opacity="0.6"/>"#,
                p.0, p.1, c1.0, c1.1, c2.0, c2.1, q.0, q.1
            );
        }
    }
    for &(k, (_, a, b)) in &chords {
        let _ = writeln!(
            svg,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{}" stroke-width="1.5"/>"#,
            a.0, a.1, b.0, b.1, COLORS[k]
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
