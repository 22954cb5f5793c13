mod common;

use common::{random_closed_walk, random_primitive, rng};
use curvecross::oracle::random_homotopic_perturbation;
use curvecross::surface::fixtures::{genus2, genus2_quads};
use curvecross::walk::{
    canonicalize, cyclic_equal, freely_homotopic, is_canonical, leftmost_canonical, path_homotopic, primitive_root,
    smallest_period, turn_sequence, turns,
};
use curvecross::{Error, Walk};
use proptest::prelude::*;

#[test]
fn curve_text_round_trips() {
    let s = genus2();
    for text in ["1 2 -1 -2", "3 -1 2 2 -3", "@0", "4"] {
        let w = Walk::parse(&s, text).unwrap();
        assert_eq!(w.format(&s), text);
    }
    assert!(matches!(Walk::parse(&s, "9"), Err(Error::InvalidWalk(_))));
    assert!(matches!(Walk::parse(&s, ""), Err(Error::InvalidWalk(_))));
    assert!(matches!(Walk::parse(&s, "@5"), Err(Error::InvalidWalk(_))));
}

#[test]
fn trivial_and_spur_walks_canonicalize_to_a_point() {
    let q = genus2_quads();
    let s = q.surface();
    let a = s.rotation(0)[0];
    let spur = Walk::closed(s, vec![a, a ^ 1]).unwrap();
    assert!(canonicalize(&q, &spur).unwrap().is_empty());
    let face = Walk::closed(s, s.face_walk(0)).unwrap();
    assert!(canonicalize(&q, &face).unwrap().is_empty());
}

#[test]
fn primitive_root_of_a_square() {
    let q = genus2_quads();
    let mut r = rng(3);
    for _ in 0..50 {
        let d = random_primitive(&q, 10, &mut r);
        for k in 1..=3 {
            let (root, p) = primitive_root(&q, &d.power(k)).unwrap();
            assert_eq!(p, k);
            assert_eq!(root.arcs(), d.arcs());
        }
    }
    assert_eq!(smallest_period(&[1, 2, 1, 2]), 2);
    assert!(primitive_root(&q, &canonicalize(&q, &Walk::closed(q.surface(), vec![0, 1]).unwrap()).unwrap()).is_err());
}

#[test]
fn leftmost_form_is_the_mirror_of_the_rightmost() {
    let q = genus2_quads();
    let mut r = rng(4);
    for _ in 0..200 {
        let c = random_primitive(&q, 20, &mut r);
        let l = leftmost_canonical(&q, &c).unwrap();
        assert_eq!(l.len(), c.len());
        assert!(freely_homotopic(&q, &l, &c).unwrap());
        assert!(!turns(&q, &l).contains(&1));
        let back = canonicalize(&q, &l.inverse()).unwrap();
        assert!(cyclic_equal(back.inverse().arcs(), l.arcs()));
    }
}

#[test]
fn run_length_turns_match_turns() {
    let q = genus2_quads();
    let mut r = rng(5);
    for _ in 0..100 {
        let c = random_primitive(&q, 30, &mut r);
        assert_eq!(turn_sequence(&q, &c).unwrap().decode(), turns(&q, &c));
    }
}

/// Index paths of length `1 ..= 2|c| - 1` never have contractible images.
#[test]
fn canonical_curves_have_no_monogons() {
    let q = genus2_quads();
    let s = q.surface();
    let mut r = rng(6);
    for _ in 0..200 {
        let c = random_primitive(&q, 8, &mut r);
        let n = c.len();
        for i in 0..n {
            for len in 1..2 * n {
                let arcs: Vec<usize> = (0..len).map(|k| c.arc((i + k) as i64)).collect();
                let path = Walk::path(s, arcs, c.vertex(s, i as i64)).unwrap();
                if path.base() == path.end() {
                    let point = Walk::path(s, Vec::new(), path.base()).unwrap();
                    assert!(!path_homotopic(&q, &path, &point).unwrap(), "{:?} from {i}, {len}", c.arcs());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonicalize_is_idempotent(seed in any::<u64>(), len in 1usize..64) {
        let q = genus2_quads();
        let w = random_closed_walk(q.surface(), len, &mut rng(seed));
        let c = canonicalize(&q, &w).unwrap();
        prop_assert!(is_canonical(&q, &c));
        let again = canonicalize(&q, &c).unwrap();
        prop_assert_eq!(again.arcs(), c.arcs());
    }

    #[test]
    fn canonicalize_is_homotopy_invariant(seed in any::<u64>(), len in 1usize..40, steps in 1usize..30) {
        let q = genus2_quads();
        let w = random_closed_walk(q.surface(), len, &mut rng(seed));
        let moved = random_homotopic_perturbation(&q, &w, steps, seed).unwrap();
        let (a, b) = (canonicalize(&q, &w).unwrap(), canonicalize(&q, &moved).unwrap());
        prop_assert!(cyclic_equal(a.arcs(), b.arcs()));
    }

    #[test]
    fn subpaths_of_canonical_curves_are_canonical(seed in any::<u64>(), len in 1usize..40) {
        let q = genus2_quads();
        let s = q.surface();
        let c = canonicalize(&q, &random_closed_walk(s, len, &mut rng(seed))).unwrap();
        let n = c.len();
        for i in 0..n {
            for l in 1..=n {
                let arcs: Vec<usize> = (0..l).map(|k| c.arc((i + k) as i64)).collect();
                let p = Walk::path(s, arcs, c.vertex(s, i as i64)).unwrap();
                prop_assert!(is_canonical(&q, &p), "{:?} from {} length {}", c.arcs(), i, l);
            }
        }
    }

    #[test]
    fn powers_of_canonical_curves_are_canonical(seed in any::<u64>(), len in 1usize..30, k in 1usize..5) {
        let q = genus2_quads();
        let c = canonicalize(&q, &random_closed_walk(q.surface(), len, &mut rng(seed))).unwrap();
        prop_assert!(is_canonical(&q, &c.power(k)));
    }

    #[test]
    fn root_multiplicities_divide(seed in any::<u64>(), len in 1usize..20, k in 1usize..4) {
        let q = genus2_quads();
        let c = canonicalize(&q, &random_closed_walk(q.surface(), len, &mut rng(seed))).unwrap();
        prop_assume!(!c.is_empty());
        let (root, m) = primitive_root(&q, &c).unwrap();
        let (root_k, mk) = primitive_root(&q, &c.power(k)).unwrap();
        prop_assert_eq!((k * m) % mk, 0);
        prop_assert_eq!(root.arcs(), root_k.arcs());
    }
}
