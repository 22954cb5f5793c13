mod common;

use common::{random_closed_walk, rng};
use curvecross::surface::fixtures::{genus2, torus, GENUS2_SRF};
use curvecross::surface::{format_surface, parse_surface, quadify, twin, CombinatorialSurface, QuadSystem, Topology};
use curvecross::walk::{apply_move, freely_homotopic, ElementaryMove};
use curvecross::Error;
use proptest::prelude::*;
use rand::Rng;

/// Genus 2 with two of its loops subdivided: three vertices, one face.
const SUBDIVIDED: &str = "\
edge 1 0 1
edge 2 0 0
edge 3 0 0
edge 4 0 2
edge 5 2 0
edge 6 1 0
rotation 0 1 2 -6 -2 3 4 -3 -5
rotation 1 -1 6
rotation 2 -4 5
";

/// One-holed torus: a loop around the vertex cuts off a face that is marked
/// as the boundary.
const HOLED_TORUS: &str = "\
edge 1 0 0
edge 2 0 0
edge 3 0 0
rotation 0 1 2 -1 -2 3 -3
perforated 3
";

fn check_quad_invariants(q: &QuadSystem) {
    let s = q.surface();
    for f in 0..s.face_count() {
        assert_eq!(s.face_len(f), 4);
        assert!(!s.is_perforated(f));
    }
    for v in 0..s.vertex_count() {
        assert!(s.degree(v) >= 8);
        for &a in s.rotation(v) {
            assert_ne!(s.origin(a), s.target(a), "quad systems are bipartite");
        }
    }
}

#[test]
fn twin_is_an_involution() {
    let s = genus2();
    for a in 0..s.arc_count() {
        assert_eq!(twin(twin(a)), a);
        assert_ne!(twin(a), a);
        assert_eq!(s.origin(twin(a)), s.target(a));
    }
}

#[test]
fn fixtures_have_expected_topology() {
    let g = genus2();
    assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (1, 4, 1));
    assert_eq!(g.genus(), 2);
    assert_eq!(g.topology(), Topology::Hyperbolic);
    assert_eq!(torus().topology(), Topology::Torus);
}

#[test]
fn surface_text_round_trips() {
    for text in [GENUS2_SRF, SUBDIVIDED, HOLED_TORUS] {
        let s = parse_surface(text).unwrap();
        let again = parse_surface(&format_surface(&s)).unwrap();
        assert_eq!(format_surface(&again), format_surface(&s));
        assert_eq!(again.rotations(), s.rotations());
    }
}

#[test]
fn malformed_surfaces_are_rejected() {
    assert!(matches!(parse_surface("edge 1 0 0\nedge 1 0 0\nrotation 0 1 -1 1 -1"), Err(Error::DuplicateEdge(1))));
    assert!(matches!(parse_surface("edge 1 0 0\nrotation 0 1 1 -1"), Err(Error::DuplicateArc(_))));
    assert!(matches!(parse_surface("edge 1 0 0\nrotation 0 1"), Err(Error::InvalidRotation(_))));
    assert!(matches!(parse_surface("edge 1 0 0\nrotation 0 1 -1\nperforated 7"), Err(Error::UnknownPerforation(7))));
    assert!(matches!(
        parse_surface("edge 1 0 0\nedge 2 1 1\nrotation 0 1 -1\nrotation 1 2 -2"),
        Err(Error::Disconnected)
    ));
    assert!(matches!(parse_surface("edge x 0 0"), Err(Error::Parse { line: 1, .. })));
}

#[test]
fn quadify_satisfies_invariants() {
    for text in [GENUS2_SRF, SUBDIVIDED, HOLED_TORUS] {
        let s = parse_surface(text).unwrap();
        if s.surface_euler_characteristic() >= 0 {
            continue;
        }
        let (q, _) = quadify(&s).unwrap();
        check_quad_invariants(&q);
    }
}

#[test]
fn quadify_rejects_nonnegative_characteristic() {
    assert!(matches!(quadify(&torus()), Err(Error::UnsupportedSurface(_))));
}

#[test]
fn quad_system_rejects_non_quads() {
    assert!(matches!(QuadSystem::new(genus2()), Err(Error::NotQuadSystem(_))));
}

#[test]
fn spur_has_turn_zero() {
    let (q, _) = quadify(&genus2()).unwrap();
    let s = q.surface();
    for a in 0..s.arc_count() {
        assert_eq!(q.turn_between(a, twin(a)), 0);
    }
}

/// One random elementary move applicable at a random index.
fn random_move(s: &CombinatorialSurface, w: &curvecross::Walk, r: &mut impl Rng) -> ElementaryMove {
    let index = r.gen_range(0..w.len().max(1));
    let v = w.vertex(s, index as i64);
    let rot = s.rotation(v);
    let arc = rot[r.gen_range(0..rot.len())];
    match r.gen_range(0..3) {
        0 => ElementaryMove::InsertSpur { index, arc },
        1 if !w.is_empty() && w.arc(index as i64) == arc && !s.is_perforated(s.face_of(arc)) => {
            ElementaryMove::ReplaceFacePart { index, len: 1, face_arc: arc }
        }
        _ if !s.is_perforated(s.face_of(arc)) => ElementaryMove::ReplaceFacePart { index, len: 0, face_arc: arc },
        _ => ElementaryMove::InsertSpur { index, arc },
    }
}

fn transport_respects_homotopy(text: &str, seed: u64, trials: usize) {
    let s = parse_surface(text).unwrap();
    let (q, transport) = quadify(&s).unwrap();
    let mut r = rng(seed);
    for _ in 0..trials {
        let len = r.gen_range(1..=12);
        let w = random_closed_walk(&s, len, &mut r);
        let mv = random_move(&s, &w, &mut r);
        let moved = apply_move(&s, &w, mv).unwrap();
        let (a, b) = (transport.transport_walk(&w).unwrap(), transport.transport_walk(&moved).unwrap());
        assert!(freely_homotopic(&q, &a, &b).unwrap(), "{:?} under {mv:?}", w.arcs());
    }
}

#[test]
fn transport_respects_homotopy_on_genus2() {
    transport_respects_homotopy(GENUS2_SRF, 1, 1_000);
}

#[test]
fn transport_respects_homotopy_on_subdivided_surface() {
    transport_respects_homotopy(SUBDIVIDED, 2, 300);
}

#[test]
fn transport_respects_homotopy_with_boundary() {
    transport_respects_homotopy(HOLED_TORUS, 3, 300);
}

proptest! {
    #[test]
    fn transported_walks_close_up(seed in any::<u64>(), len in 1usize..30) {
        let s = genus2();
        let (q, transport) = quadify(&s).unwrap();
        let w = random_closed_walk(&s, len, &mut rng(seed));
        let t = transport.transport_walk(&w).unwrap();
        prop_assert!(t.is_closed());
        prop_assert!(t.validate(q.surface()).is_ok());
    }
}
