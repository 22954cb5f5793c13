//! Geometric intersection numbers, minimal immersions and simplicity tests
//! for closed curves on combinatorial surfaces.

pub mod counting;
pub mod diagram;
pub mod error;
pub mod immersion;
pub mod oracle;
pub mod surface;
pub mod unzip;
pub mod walk;

pub use error::{Error, Result};
pub use surface::{
    parse_surface, quadify, twin, ArcId, CombinatorialSurface, CurveTransport, EdgeId, FaceId, QuadSystem, Topology,
    VertexId,
};
pub use walk::{canonicalize, is_canonical, is_geodesic, Walk};
