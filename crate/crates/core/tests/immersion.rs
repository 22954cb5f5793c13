mod common;

use common::{random_primitive, rng};
use curvecross::counting::Analyzer;
use curvecross::immersion::{
    check_embedding, find_monogon, find_singular_bigon, minimal_immersion, minimal_immersion_on_quads, swap_bigon,
    Immersion,
};
use curvecross::surface::fixtures::{genus2, genus2_quads, torus};
use curvecross::walk::{canonicalize, freely_homotopic};
use curvecross::{Error, Walk};
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

/// Immersion of `c` with every edge order shuffled.
fn shuffled(q: &curvecross::surface::QuadSystem, c: &Walk, r: &mut ChaCha8Rng) -> Immersion {
    let s = q.surface();
    let base = Immersion::new(s, vec![c.clone()]).unwrap();
    let mut orders = base.orders().to_vec();
    for o in &mut orders {
        o.shuffle(r);
    }
    Immersion::from_orders(s, vec![c.clone()], orders).unwrap()
}

#[test]
fn format_round_trips() {
    let q = genus2_quads();
    let s = q.surface();
    let mut r = rng(41);
    for _ in 0..50 {
        let c = random_primitive(&q, 16, &mut r);
        let d = random_primitive(&q, 16, &mut r);
        let imm = shuffled(&q, &c, &mut r);
        let back = Immersion::parse(s, vec![c.clone()], &imm.format(s)).unwrap();
        assert_eq!(back, imm);
        let two = Immersion::new(s, vec![c.clone(), d.clone()]).unwrap();
        assert_eq!(Immersion::parse(s, vec![c, d], &two.format(s)).unwrap(), two);
    }
}

#[test]
fn malformed_orders_are_rejected() {
    let q = genus2_quads();
    let s = q.surface();
    let c = random_primitive(&q, 10, &mut rng(42));
    let text = Immersion::new(s, vec![c.clone()]).unwrap().format(s);
    let first = text.lines().next().unwrap();
    let dropped: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    assert!(Immersion::parse(s, vec![c.clone()], &dropped).is_err());
    let doubled = format!("{text}{first}\n");
    assert!(Immersion::parse(s, vec![c.clone()], &doubled).is_err());
    assert!(matches!(Immersion::parse(s, vec![c], "edge 1: occ(0,0)"), Err(Error::Parse { line: 1, .. })));
}

/// An immersion of a primitive canonical curve either has a singular bigon
/// or realizes the intersection number.
#[test]
fn bigon_or_optimal() {
    let q = genus2_quads();
    let s = q.surface();
    let a = Analyzer::for_quads(&q);
    let mut r = rng(43);
    for _ in 0..150 {
        let c = random_primitive(&q, 12, &mut r);
        let target = a.self_intersection(&c).unwrap() as usize;
        let mut imm = shuffled(&q, &c, &mut r);
        assert!(find_monogon(&q, &imm).unwrap().is_none());
        loop {
            let count = imm.crossing_count(s, 0, 0);
            assert!(count >= target);
            let Some(b) = find_singular_bigon(&q, &imm).unwrap() else {
                assert_eq!(count, target, "{:?} stuck above the minimum", c.arcs());
                break;
            };
            assert!(count > target);
            let (walk, next) = swap_bigon(&q, &imm, &b).unwrap();
            next.validate(s).unwrap();
            assert!(freely_homotopic(&q, &walk, &c).unwrap());
            assert!(next.crossing_count(s, 0, 0) < count);
            imm = next;
        }
    }
}

#[test]
fn minimal_immersions_reach_the_count() {
    let q = genus2_quads();
    let s = q.surface();
    let a = Analyzer::for_quads(&q);
    let mut r = rng(44);
    for _ in 0..200 {
        let c = random_primitive(&q, 16, &mut r);
        let m = minimal_immersion_on_quads(&q, &c).unwrap();
        assert_eq!(m.crossings as u64, a.self_intersection(&c).unwrap());
        assert_eq!(m.immersion.crossing_count(s, 0, 0), m.crossings);
        assert!(m.swap_trace.windows(2).all(|w| w[1] < w[0]));
        assert!(m.swap_trace.first().is_none_or(|&x| x < m.initial_crossings));
        assert_eq!(check_embedding(s, &m.immersion), m.crossings == 0);
    }
}

#[test]
fn minimal_immersion_of_a_power() {
    let q = genus2_quads();
    let c = random_primitive(&q, 10, &mut rng(45));
    let a = Analyzer::for_quads(&q);
    let m = minimal_immersion_on_quads(&q, &c.power(3)).unwrap();
    assert_eq!(m.crossings as u64, a.self_intersection(&c.power(3)).unwrap());
    assert_eq!(canonicalize(&q, &m.walk).unwrap().len(), 3 * c.len());
}

#[test]
fn minimal_immersion_from_the_input_surface() {
    let s = genus2();
    let c = Walk::parse(&s, "1 3 -2 4 4").unwrap();
    let m = minimal_immersion(&s, &c).unwrap();
    assert_eq!(m.crossings as u64, Analyzer::new(&s).unwrap().self_intersection(&c).unwrap());
    assert!(matches!(
        minimal_immersion(&torus(), &Walk::parse(&torus(), "1").unwrap()),
        Err(Error::UnsupportedSurface(_))
    ));
}
