mod common;

use common::{random_primitive, rng};
use curvecross::diagram::{annular_diagram, diagram_problems, maximal_partial_diagrams, verify_diagram, Relation};
use curvecross::surface::fixtures::genus2_quads;
use curvecross::walk::{canonicalize, cyclic_equal, leftmost_canonical};
use curvecross::Walk;

#[test]
fn random_diagrams_verify() {
    let q = genus2_quads();
    let mut r = rng(11);
    for _ in 0..200 {
        let c = random_primitive(&q, 24, &mut r);
        let d = annular_diagram(&q, &c).unwrap();
        assert!(verify_diagram(&q, &d), "{:?}: {:?}", c.arcs(), diagram_problems(&q, &d));
        assert_eq!(d.len(), c.len());
        assert!(cyclic_equal(d.right().arcs(), c.arcs()));
        assert!(cyclic_equal(d.left().arcs(), leftmost_canonical(&q, &c).unwrap().arcs()));
        assert_eq!(d.dump(&q).lines().count(), c.len());
    }
}

#[test]
fn equal_boundaries_give_coincident_diagram() {
    let q = genus2_quads();
    let mut r = rng(12);
    let mut seen = 0;
    for _ in 0..500 {
        let c = random_primitive(&q, 16, &mut r);
        if !cyclic_equal(leftmost_canonical(&q, &c).unwrap().arcs(), c.arcs()) {
            continue;
        }
        let d = annular_diagram(&q, &c).unwrap();
        assert!(verify_diagram(&q, &d));
        assert!((0..d.len() as i64).all(|i| d.relation(i) == Relation::Coincident));
        assert!(d.spokes().is_empty());
        assert!(!d.closed_staircase());
        assert!(d.dump(&q).lines().all(|l| l.ends_with(": C")));
        seen += 1;
    }
    assert!(seen > 0);
}

#[test]
fn closed_staircases_occur_and_verify() {
    let q = genus2_quads();
    let mut r = rng(13);
    let mut seen = 0;
    for _ in 0..2_000 {
        let c = random_primitive(&q, 10, &mut r);
        let d = annular_diagram(&q, &c).unwrap();
        assert!(verify_diagram(&q, &d));
        if d.closed_staircase() {
            assert!((0..d.len() as i64).all(|i| !d.is_coincident(i)));
            assert!(!d.spokes().is_empty());
            seen += 1;
        }
    }
    assert!(seen > 0, "no closed staircase among the samples");
}

#[test]
fn contractible_curves_have_no_diagram() {
    let q = genus2_quads();
    let point = Walk::parse(q.surface(), "@0").unwrap();
    assert!(annular_diagram(&q, &point).is_err());
}

#[test]
fn curve_on_distinct_vertices_has_no_partial_diagram() {
    let q = genus2_quads();
    let s = q.surface();
    let mut seen = 0;
    for &a in s.rotation(0) {
        for &b in s.rotation(s.target(a)) {
            if s.target(b) != 0 {
                continue;
            }
            let c = canonicalize(&q, &Walk::closed(s, vec![a, b]).unwrap()).unwrap();
            if c.len() == 2 {
                assert!(maximal_partial_diagrams(&q, &c).unwrap().is_empty());
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn partial_diagram_invariants() {
    let q = genus2_quads();
    let mut r = rng(14);
    for _ in 0..300 {
        let c = random_primitive(&q, 20, &mut r);
        let n = c.len();
        let diagrams = maximal_partial_diagrams(&q, &c).unwrap();
        let mut total = 0;
        for pd in &diagrams {
            assert_eq!(pd.connectors.len(), pd.pair_count());
            assert!(pd.len != n && pd.len <= n + 1, "{pd:?} on a curve of length {n}");
            for p in 0..pd.pair_count() {
                let (i, j) = pd.pair(p, n);
                if pd.epsilon < 0 {
                    assert_ne!(i, j, "{pd:?} shares an index");
                }
            }
            total += pd.pair_count();
        }
        assert!(total <= 5 * n * n, "{total} pairs for length {n}");
    }
}
