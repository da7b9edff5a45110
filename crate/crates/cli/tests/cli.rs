//! End-to-end tests of the binary: exit codes, determinism, formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dynquant"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("dynquant-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn spectrum1d_within_tolerance_exits_zero() {
    let out = run(&[
        "spectrum1d",
        "--epsilon",
        "0",
        "--kappa",
        "0",
        "--nmax",
        "5",
        "--grids",
        "256,512,1024",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("epsilon,kappa,s,n,"));
    assert!(text.contains(",ok"));
    assert!(!text.contains("breach"));
}

#[test]
fn spectrum1d_deformed_sweep_exits_zero() {
    let out = run(&[
        "spectrum1d",
        "--epsilon",
        "0.1",
        "--kappa",
        "0,1",
        "--nmax",
        "10",
        "--grids",
        "512,1024,2048",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn absurd_tolerance_breaches_with_exit_two() {
    let out = run(&[
        "spectrum1d",
        "--epsilon",
        "0.1",
        "--kappa",
        "0",
        "--nmax",
        "3",
        "--grids",
        "128,256,512",
        "--tolerance",
        "1e-18",
    ]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("breach"));
}

#[test]
fn usage_errors_exit_one() {
    // malformed flag value
    let out = run(&["spectrum1d", "--grids", "100"]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    // grid size out of range
    let out = run(&["spectrum1d", "--grids", "8192"]);
    assert_eq!(out.status.code(), Some(1));
    // nmax over the cap
    let out = run(&["spectrum1d", "--nmax", "65"]);
    assert_eq!(out.status.code(), Some(1));
    // unknown flag
    let out = run(&["spectrum1d", "--zebra", "1"]);
    assert_eq!(out.status.code(), Some(1));
    // unknown subcommand
    let out = run(&["zebra"]);
    assert_eq!(out.status.code(), Some(1));
    // position refuses the undeformed limit
    let out = run(&["position", "--epsilon", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_algebra_passes_and_corruption_is_caught() {
    let out = run(&["verify-algebra", "--nmax", "3"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    let out = bin()
        .args(["verify-algebra", "--nmax", "3", "--corrupt-temporal-sign"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{out:?}");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("[q0, p0]"),
        "failing identity not named: {stderr}"
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("breach"));
}

#[test]
fn verify_hermiticity_sweep_passes() {
    let out = run(&["verify-hermiticity", "--kappa", "0,1"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("flat-control"));
}

#[test]
fn position_lattice_report_passes() {
    let out = run(&["position", "--grids", "256"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn convergence_emits_order_fits() {
    let out = run(&[
        "convergence",
        "--epsilon",
        "0.1",
        "--nmax",
        "2",
        "--grids",
        "128,256,512",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    let order_cells: Vec<&str> = text
        .lines()
        .skip(1)
        .filter_map(|l| l.rsplit(',').next())
        .filter(|c| *c != "-")
        .collect();
    assert!(!order_cells.is_empty());
    for cell in order_cells {
        let order: f64 = cell.parse().unwrap();
        assert!((order - 2.0).abs() < 0.3, "fitted order {order}");
    }
}

#[test]
fn identical_config_gives_byte_identical_csv() {
    let args = [
        "spectrum1d",
        "--epsilon",
        "0.05",
        "--kappa",
        "0",
        "--nmax",
        "4",
        "--grids",
        "128,256,512",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "CSV output must be deterministic");

    let h1 = run(&["verify-hermiticity", "--seed", "11"]);
    let h2 = run(&["verify-hermiticity", "--seed", "11"]);
    assert_eq!(h1.stdout, h2.stdout);
    let h3 = run(&["verify-hermiticity", "--seed", "12"]);
    assert_ne!(h1.stdout, h3.stdout, "different seeds, different samples");
}

#[test]
fn json_format_mirrors_csv() {
    let out = run(&[
        "spectrum1d",
        "--epsilon",
        "0",
        "--nmax",
        "2",
        "--grids",
        "256,512,1024",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed["meta"]["tool"], "dynquant");
    assert!(parsed["meta"]["generated_at_unix"].is_u64());
    let columns = parsed["columns"].as_array().unwrap();
    assert_eq!(columns[0], "epsilon");
    let rows = parsed["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3 * 2); // 3 levels × 2 kappa defaults
}

#[test]
fn config_file_supplies_parameters() {
    let path = tmp_path("params.cfg");
    std::fs::write(&path, "ell = 0.2\nkappa = 0.0\n").unwrap();
    let out = run(&[
        "spectrum1d",
        "--config",
        path.to_str().unwrap(),
        "--nmax",
        "2",
        "--grids",
        "256,512",
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    // ε = ωℓ/2c = 0.1 derived from the file
    assert!(text.contains("1.000000000000e-1,"), "{text}");

    let out = run(&["spectrum1d", "--config", "/nonexistent/path.cfg"]);
    assert_eq!(out.status.code(), Some(1));

    let bad = tmp_path("bad.cfg");
    std::fs::write(&bad, "mystery = 12\n").unwrap();
    let out = run(&["spectrum1d", "--config", bad.to_str().unwrap()]);
    std::fs::remove_file(&bad).ok();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_flag_writes_file() {
    let path = tmp_path("table.csv");
    let out = run(&[
        "position",
        "--out",
        path.to_str().unwrap(),
        "--grids",
        "128",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("epsilon,delta,n,"));
}
