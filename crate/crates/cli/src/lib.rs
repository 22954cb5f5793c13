//! Command-line front end of curvecross and an SVG renderer for immersions.

pub mod commands;
pub mod fixtures;
pub mod render;

pub use commands::{run, CliError};
pub use render::{render_svg, RenderError, RenderOptions};
