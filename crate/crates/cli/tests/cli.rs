use curvecross_cli::fixtures::stale_fixtures;
use curvecross_cli::{run, CliError};
use std::path::{Path, PathBuf};
use std::process::Command;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn cli(args: &[&str]) -> Result<String, CliError> {
    run(std::iter::once("curvecross").chain(args.iter().copied()).map(String::from))
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("curvecross-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn bundled_fixtures_are_fresh() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    assert!(stale_fixtures(&dir).is_empty(), "run `curvecross fixtures --dir crates/cli/fixtures`");
}

#[test]
fn torus_examples() {
    let t = fixture("torus.srf");
    assert_eq!(cli(&["selfintersect", "-s", &t, "-c", "1 1 2 2 2 2"]).unwrap(), "1\n");
    assert_eq!(cli(&["intersect", "-s", &t, "-c", "1", "-c2", "2"]).unwrap(), "1\n");
    assert_eq!(cli(&["homotopic", "-s", &t, "-c", "1 2", "--c2", "2 1"]).unwrap(), "yes\n");
    assert!(matches!(cli(&["immersion", "-s", &t, "-c", "1"]), Err(CliError::Domain(_))));
}

#[test]
fn genus2_commands() {
    let g = fixture("genus2.srf");
    assert_eq!(cli(&["is-simple", "-s", &g, "-c", "@0"]).unwrap().lines().next(), Some("simple: yes"));
    assert_eq!(cli(&["is-simple", "-s", &g, "-c", "1 1"]).unwrap(), "simple: no\n");
    assert_eq!(cli(&["homotopic", "-s", &g, "-c", "1", "-c2", "2"]).unwrap(), "no\n");
    let root = cli(&["root", "-s", &g, "-c", "1 3 1 3"]).unwrap();
    assert!(root.ends_with("power: 2\n"), "{root}");
    let out = cli(&["selfintersect", "-s", &g, "-c", "1 3 -2", "--oracle"]).unwrap();
    let values: Vec<&str> = out.lines().map(|l| l.split(": ").nth(1).unwrap()).collect();
    assert_eq!(values[0], values[1]);
    let imm = cli(&["immersion", "-s", &g, "-c", "1 1 2"]).unwrap();
    assert!(imm.starts_with("crossings: "));
    assert!(matches!(cli(&["embed", "-s", &g, "-c", "1 1"]), Err(CliError::Failed(_))));
}

#[test]
fn json_matches_text() {
    let g = fixture("genus2.srf");
    for curve in ["1 3 -2 4", "1 1 2", "2 -3 4 4 1"] {
        let text = cli(&["selfintersect", "-s", &g, "-c", curve]).unwrap();
        let json = cli(&["--json", "selfintersect", "-s", &g, "-c", curve]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["intersection"].as_u64().unwrap().to_string(), text.trim());
        let text = cli(&["canonicalize", "-s", &g, "-c", curve]).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&cli(&["--json", "canonicalize", "-s", &g, "-c", curve]).unwrap()).unwrap();
        assert_eq!(v["canonical"].as_str().unwrap(), text.trim());
    }
}

#[test]
fn curves_can_come_from_files() {
    let g = fixture("genus2.srf");
    let dir = scratch_dir("files");
    let path = dir.join("c.txt");
    std::fs::write(&path, "1 3 -2 4\n").unwrap();
    let from_file = cli(&["selfintersect", "-s", &g, "-c", path.to_str().unwrap()]).unwrap();
    assert_eq!(from_file, cli(&["selfintersect", "-s", &g, "-c", "1 3 -2 4"]).unwrap());
}

#[test]
fn render_writes_a_drawing() {
    let g = fixture("genus2.srf");
    let dir = scratch_dir("render");
    let out = dir.join("c.svg");
    let msg = cli(&["render", "-s", &g, "-c", "1 1 2 -3", "-c2", "4 2", "--out", out.to_str().unwrap()]).unwrap();
    assert!(msg.starts_with("wrote "));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<!-- crossings: "));
    assert!(matches!(cli(&["render", "-s", &g, "-c", "1", "--scale", "0"]), Err(CliError::Failed(_))));
}

#[test]
fn fixtures_command_writes_and_checks() {
    let dir = scratch_dir("fixtures");
    let d = dir.to_str().unwrap();
    assert!(cli(&["fixtures", "--dir", d, "--check"]).is_err());
    cli(&["fixtures", "--dir", d]).unwrap();
    assert_eq!(cli(&["fixtures", "--dir", d, "--check"]).unwrap(), "fixtures up to date\n");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_curvecross");
    let g = fixture("genus2.srf");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = code(&["selfintersect", "-s", &g, "-c", "1 1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "1\n");
    assert_eq!(code(&["selfintersect", "-s", &g, "-c", "9"]).status.code(), Some(1));
    assert_eq!(code(&["selfintersect", "-s", "/nonexistent.srf", "-c", "1"]).status.code(), Some(1));
    assert_eq!(code(&["selfintersect", "--bogus"]).status.code(), Some(2));
    assert_eq!(code(&["--help"]).status.code(), Some(0));
    let neg = code(&["intersect", "-s", &g, "-c", "-1", "-c2", "-2"]);
    assert_eq!(neg.status.code(), Some(0), "{}", String::from_utf8_lossy(&neg.stderr));
}
