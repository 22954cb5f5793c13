//! Small surfaces used by tests, benchmarks and the command-line fixtures.

use super::{parse_surface, quadify, CombinatorialSurface, QuadSystem};

/// Genus-2 surface with one vertex, four loops and a single face.
pub const GENUS2_SRF: &str = "\
# genus 2, one vertex, one face
edge 1 0 0
edge 2 0 0
edge 3 0 0
edge 4 0 0
rotation 0 1 2 -1 -2 3 4 -3 -4
";

/// Torus with one vertex, two loops and a single face.
pub const TORUS_SRF: &str = "\
# torus, one vertex, one face
edge 1 0 0
edge 2 0 0
rotation 0 1 2 -1 -2
";

pub fn genus2() -> CombinatorialSurface {
    parse_surface(GENUS2_SRF).expect("bundled genus-2 surface is valid")
}

pub fn torus() -> CombinatorialSurface {
    parse_surface(TORUS_SRF).expect("bundled torus is valid")
}

/// System of quads of [`genus2`].
pub fn genus2_quads() -> QuadSystem {
    quadify(&genus2()).expect("genus-2 surface has a system of quads").0
}
