use super::{ArcId, CombinatorialSurface};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;

/// A surface description as read from text, before validation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurfaceSpec {
    /// `(id, from, to)` in declaration order.
    pub edges: Vec<(i64, i64, i64)>,
    /// `(vertex, signed edge ids clockwise)` in declaration order.
    pub rotations: Vec<(i64, Vec<i64>)>,
    /// Signed edge ids whose left face is perforated.
    pub perforated: Vec<i64>,
}

impl SurfaceSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut spec = SurfaceSpec::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap_or_default();
            let numbers: Vec<i64> = words
                .map(|w| {
                    w.parse::<i64>().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("expected an integer, found `{w}`"),
                    })
                })
                .collect::<Result<_>>()?;
            let parse_err = |message: &str| Error::Parse { line: line_no, message: message.to_string() };
            match keyword {
                "edge" => {
                    if numbers.len() != 3 {
                        return Err(parse_err("expected `edge <id> <v_from> <v_to>`"));
                    }
                    if numbers[0] <= 0 {
                        return Err(parse_err("edge ids must be positive"));
                    }
                    spec.edges.push((numbers[0], numbers[1], numbers[2]));
                }
                "rotation" => {
                    if numbers.is_empty() {
                        return Err(parse_err("expected `rotation <vertex> <signed-edge-id>...`"));
                    }
                    spec.rotations.push((numbers[0], numbers[1..].to_vec()));
                }
                "perforated" => {
                    if numbers.len() != 1 {
                        return Err(parse_err("expected `perforated <signed-edge-id>`"));
                    }
                    spec.perforated.push(numbers[0]);
                }
                other => return Err(parse_err(&format!("unknown declaration `{other}`"))),
            }
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<CombinatorialSurface> {
        let mut edge_index: HashMap<i64, usize> = HashMap::with_capacity(self.edges.len());
        let mut vertex_index: HashMap<i64, usize> = HashMap::new();
        let mut vertex_labels = Vec::new();
        let mut endpoints = Vec::with_capacity(self.edges.len());
        let mut edge_labels = Vec::with_capacity(self.edges.len());
        let mut intern = |label: i64, labels: &mut Vec<i64>| -> usize {
            *vertex_index.entry(label).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            })
        };
        for &(id, from, to) in &self.edges {
            if edge_index.insert(id, edge_labels.len()).is_some() {
                return Err(Error::DuplicateEdge(id));
            }
            edge_labels.push(id);
            let f = intern(from, &mut vertex_labels);
            let t = intern(to, &mut vertex_labels);
            endpoints.push((f, t));
        }
        let resolve = |signed: i64| -> Option<ArcId> {
            let e = *edge_index.get(&signed.abs())?;
            Some(2 * e + usize::from(signed < 0))
        };
        let mut rotations = vec![Vec::new(); vertex_labels.len()];
        let mut declared = vec![false; vertex_labels.len()];
        for (vertex, signed_ids) in &self.rotations {
            let Some(&v) = vertex_index.get(vertex) else {
                return Err(Error::InvalidRotation(format!("rotation for unknown vertex {vertex}")));
            };
            if declared[v] {
                return Err(Error::InvalidRotation(format!("vertex {vertex} has two rotations")));
            }
            declared[v] = true;
            for &s in signed_ids {
                let a = resolve(s).ok_or_else(|| Error::InvalidRotation(format!("rotation names unknown edge {s}")))?;
                rotations[v].push(a);
            }
        }
        if let Some(v) = declared.iter().position(|&d| !d) {
            return Err(Error::InvalidRotation(format!("vertex {} has no rotation", vertex_labels[v])));
        }
        let mut perforated_arcs = Vec::with_capacity(self.perforated.len());
        for &s in &self.perforated {
            perforated_arcs.push(resolve(s).ok_or(Error::UnknownPerforation(s))?);
        }
        CombinatorialSurface::from_rotations(edge_labels, vertex_labels, &endpoints, rotations, &perforated_arcs)
    }
}

/// Parses and validates a surface in the line-oriented text format.
pub fn parse_surface(text: &str) -> Result<CombinatorialSurface> {
    SurfaceSpec::parse(text)?.build()
}

/// Writes a surface in the text format accepted by [`parse_surface`].
pub fn format_surface(surface: &CombinatorialSurface) -> String {
    let mut out = String::new();
    for e in 0..surface.edge_count() {
        let _ = writeln!(
            out,
            "edge {} {} {}",
            surface.edge_label(e),
            surface.vertex_label(surface.origin(2 * e)),
            surface.vertex_label(surface.origin(2 * e + 1))
        );
    }
    for v in 0..surface.vertex_count() {
        let _ = write!(out, "rotation {}", surface.vertex_label(v));
        for &a in surface.rotation(v) {
            let _ = write!(out, " {}", surface.arc_label(a));
        }
        out.push('\n');
    }
    for f in surface.perforated_faces() {
        let _ = writeln!(out, "perforated {}", surface.arc_label(surface.face_representative(f)));
    }
    out
}
