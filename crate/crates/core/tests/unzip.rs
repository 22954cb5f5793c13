mod common;

use common::{random_closed_walk, random_primitive, rng};
use curvecross::counting::Analyzer;
use curvecross::surface::fixtures::{genus2_quads, torus};
use curvecross::unzip::{
    check_embedding, is_simple, is_simple_on_quads, mark_switchable, precompute_anchor_orders, unzip, UnzipState,
};
use curvecross::walk::{canonicalize, freely_homotopic, is_canonical, is_geodesic, turns};
use curvecross::Walk;
use proptest::prelude::*;

#[test]
fn is_simple_matches_the_counting_on_random_curves() {
    let q = genus2_quads();
    let a = Analyzer::for_quads(&q);
    let s = q.surface();
    let mut r = rng(51);
    let mut simple = 0;
    for _ in 0..1_500 {
        let c = random_primitive(&q, 20, &mut r);
        let answer = is_simple_on_quads(&q, &c).unwrap();
        let zero = a.self_intersection(&c).unwrap() == 0;
        assert_eq!(answer.simple, zero, "{:?}", c.arcs());
        if let Some(e) = answer.embedding {
            simple += 1;
            assert!(check_embedding(s, &e));
            assert_eq!(e.crossing_count(s, 0, 0), 0);
            assert!(freely_homotopic(&q, e.curve(0), &c).unwrap());
        }
    }
    assert!(simple > 0);
}

#[test]
fn non_simple_curves_keep_a_crossing() {
    let q = genus2_quads();
    let s = q.surface();
    let mut r = rng(52);
    for _ in 0..300 {
        let c = random_primitive(&q, 16, &mut r);
        let (walk, imm) = unzip(&q, &c).unwrap();
        assert_eq!(walk.len(), c.len());
        assert!(is_geodesic(&q, &walk));
        assert!(freely_homotopic(&q, &walk, &c).unwrap());
        let crossings = imm.crossing_count(s, 0, 0);
        assert_eq!(crossings == 0, Analyzer::for_quads(&q).self_intersection(&c).unwrap() == 0);
        assert_eq!(check_embedding(s, &imm), crossings == 0);
    }
}

#[test]
fn special_cases() {
    let q = genus2_quads();
    let s = q.surface();
    let point = Walk::parse(s, "@0").unwrap();
    assert!(is_simple_on_quads(&q, &point).unwrap().simple);
    let c = random_primitive(&q, 10, &mut rng(53));
    assert!(!is_simple_on_quads(&q, &c.power(2)).unwrap().simple);
    let t = torus();
    let w = |text: &str| Walk::parse(&t, text).unwrap();
    let answer = is_simple(&t, &w("1 2")).unwrap();
    assert!(answer.simple && answer.embedding.is_none());
    assert!(!is_simple(&t, &w("1 1 2 2")).unwrap().simple);
    assert!(unzip(&q, &c.power(2)).is_err());
    assert!(unzip(&q, &point).is_err());
}

#[test]
fn anchor_table_follows_backward_extensions() {
    let q = genus2_quads();
    let s = q.surface();
    let mut r = rng(54);
    let mut checked = 0;
    for _ in 0..2_000 {
        let c = random_primitive(&q, 24, &mut r);
        let arcs = c.arcs();
        let n = arcs.len();
        let table = precompute_anchor_orders(&q, &c).unwrap();
        let expected: Vec<usize> = (1..n).filter(|&i| arcs[i] == arcs[0]).collect();
        let listed: Vec<usize> = table.entries().map(|(i, _)| i).collect();
        assert_eq!(listed, expected);
        // Without switches the unzip output is an embedding of `c` itself,
        // which fixes the side of every parallel occurrence.
        let mut state = UnzipState::new(&q, &c).unwrap();
        while !state.is_done() {
            state.step().unwrap();
        }
        if state.switch_count() > 0 {
            continue;
        }
        let (_, imm) = state.finish().unwrap();
        if !check_embedding(s, &imm) {
            continue;
        }
        let even = arcs[0].is_multiple_of(2);
        for (i, left) in table.entries() {
            let before = imm.position(0, i) < imm.position(0, 0);
            assert_eq!(left, before == even, "{arcs:?} at {i}");
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn switchable_marks_follow_the_turn_pattern() {
    let q = genus2_quads();
    let mut r = rng(55);
    for _ in 0..500 {
        let c = random_primitive(&q, 24, &mut r);
        let t = turns(&q, &c);
        let n = c.len();
        let marks = mark_switchable(&q, &c);
        for i in 0..n {
            let explicit = i > 0 && {
                let mut m = i + 1;
                while m < n && t[m] == 2 {
                    m += 1;
                }
                m < n && t[m] == 1
            };
            assert_eq!(marks[i], explicit, "{t:?} at {i}");
        }
        if !t.contains(&1) {
            assert!(marks.iter().all(|&m| !m));
        }
    }
}

#[test]
fn switches_keep_the_curve_geodesic() {
    let q = genus2_quads();
    let mut r = rng(56);
    let mut switched = 0;
    for _ in 0..500 {
        let c = random_primitive(&q, 24, &mut r);
        let n = c.len();
        let Some(i) = (0..n).find(|&i| mark_switchable(&q, &c)[i]) else {
            continue;
        };
        let mut state = UnzipState::new(&q, &c).unwrap();
        let before = turns(&q, &c);
        state.switch(i).unwrap();
        let walk = Walk::closed(q.surface(), state.curve().to_vec()).unwrap();
        assert_eq!(walk.len(), n);
        assert!(is_geodesic(&q, &walk));
        assert!(freely_homotopic(&q, &walk, &c).unwrap());
        let after = turns(&q, &walk);
        let d = |x: i64| x.rem_euclid(8);
        assert_eq!(d(after[i]), d(before[i] - 1));
        assert_eq!(after[i + 1], -1);
        assert!(state.is_switched(i + 1));
        switched += 1;
        let unmarked = (0..n).find(|&j| !state.is_switchable(j)).unwrap();
        assert!(state.switch(unmarked).is_err());
    }
    assert!(switched > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unzip_state_invariants(seed in any::<u64>(), len in 4usize..40) {
        let q = genus2_quads();
        let s = q.surface();
        let c = canonicalize(&q, &random_closed_walk(s, len, &mut rng(seed))).unwrap();
        prop_assume!(!c.is_empty() && curvecross::walk::smallest_period(c.arcs()) == c.len());
        let n = c.len();
        let mut state = UnzipState::new(&q, &c).unwrap();
        while !state.is_done() {
            let walk = Walk::closed(s, state.curve().to_vec()).unwrap();
            prop_assert!(is_geodesic(&q, &walk));
            prop_assert!(freely_homotopic(&q, &walk, &c).unwrap());
            let k = state.cursor();
            if k > 0 && k + 1 < n {
                let rest = Walk::path(s, state.curve()[k..].to_vec(), s.origin(state.curve()[k])).unwrap();
                prop_assert!(is_canonical(&q, &rest));
            }
            state.step().unwrap();
        }
        prop_assert!(state.switch_count() <= 2 * n);
        let (walk, imm) = state.finish().unwrap();
        let total: usize = imm.orders().iter().map(Vec::len).sum();
        prop_assert_eq!(total, walk.len());
    }
}
