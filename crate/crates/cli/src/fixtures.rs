//! Bundled fixture files and their regeneration.

use curvecross::surface::fixtures::{genus2, GENUS2_SRF, TORUS_SRF};
use curvecross::surface::{format_surface, quadify};
use std::path::Path;

/// File name and expected contents of every bundled fixture.
pub fn fixture_files() -> Vec<(&'static str, String)> {
    let quads = quadify(&genus2()).expect("genus-2 surface has a system of quads").0;
    vec![
        ("genus2.srf", GENUS2_SRF.to_string()),
        ("genus2.quads", format_surface(quads.surface())),
        ("torus.srf", TORUS_SRF.to_string()),
    ]
}

/// Names of the fixtures in `dir` whose contents differ from the generated
/// ones, including missing files.
pub fn stale_fixtures(dir: &Path) -> Vec<&'static str> {
    fixture_files()
        .into_iter()
        .filter(|(name, text)| std::fs::read_to_string(dir.join(name)).ok().as_deref() != Some(text.as_str()))
        .map(|(name, _)| name)
        .collect()
}

pub fn write_fixtures(dir: &Path) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, text) in fixture_files() {
        std::fs::write(dir.join(name), text)?;
    }
    Ok(())
}
