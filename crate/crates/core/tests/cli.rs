use std::fs;
use std::process::{Command, Output};

use cq_discord::qmat::binary_entropy;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cq-discord")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap_or_else(|_| panic!("not a number: {s:?}"))
}

fn report_value(text: &str, key: &str) -> f64 {
    let line = text.lines().find(|l| l.starts_with(&format!("{key} ="))).unwrap();
    num(line.split('=').nth(1).unwrap().trim())
}

#[test]
fn evolve_three_points() {
    let text = stdout(&run(&["evolve", "--points", "3"]));
    assert_eq!(text.lines().next().unwrap(), "p,gamma_t,s,phi,discord,classical,mutual");
    let r = rows(&text);
    assert_eq!(r.len(), 3);
    assert_eq!(num(&r[0][4]), 0.0);
    assert!((num(&r[1][4]) - 0.0575).abs() < 1e-4);
    assert_eq!(num(&r[2][4]), 0.0);
    assert_eq!(r[2][1], "");
    assert!((num(&r[1][1]) - 2f64.ln()).abs() < 1e-11);
}

#[test]
fn evolve_both_with_check_and_time_axis() {
    let text = stdout(&run(&["evolve", "--points", "21", "--method", "both", "--check", "--gamma", "0.5"]));
    let header: Vec<&str> = text.lines().next().unwrap().split(',').collect();
    assert_eq!(header[2], "t");
    assert_eq!(*header.last().unwrap(), "abs_diff");
    for r in rows(&text) {
        assert!(num(r.last().unwrap()) <= 1e-4);
        if !r[1].is_empty() {
            assert!((num(&r[2]) - num(&r[1]) / 0.5).abs() < 1e-10);
        }
    }
}

#[test]
fn evolve_classical_column_decreases() {
    let r = rows(&stdout(&run(&["evolve"])));
    assert_eq!(r.len(), 201);
    let c: Vec<f64> = r.iter().map(|r| num(&r[5])).collect();
    assert!(c.windows(2).all(|w| w[1] < w[0]));
    let max = r.iter().map(|r| num(&r[4])).fold(0.0, f64::max);
    assert!(max > 0.202 / 4.0 && max < 0.202 / 2.0);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["evolve", "--method", "both", "--points", "11"][..],
        &["surface", "--ns", "11", "--nphi", "19"],
        &["delta-surface", "--n", "21", "--s0", "0.9", "--s1", "0.5", "--phi", "1.1"],
        &["trajectory", "--points", "17"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("traj.csv");
    let out = run(&["trajectory", "--points", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(fs::read(&path).unwrap(), run(&["trajectory", "--points", "5"]).stdout);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["evolve", "--points", "1"][..],
        &["evolve", "--p-min", "0.6", "--p-max", "0.4"],
        &["evolve", "--gamma", "-1"],
        &["surface", "--ns", "1"],
        &["surface", "--quantity", "entropy"],
        &["delta-surface", "--n", "1"],
        &["delta-surface", "--s0", "0.5"],
        &["delta-surface", "--s0", "1.5", "--s1", "1", "--phi", "1"],
        &["trajectory", "--points", "0"],
        &["discord", "--input", "x", "--measured", "C"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn surface_rows_and_max() {
    let r = rows(&stdout(&run(&["surface"])));
    assert_eq!(r.len(), 101 * 181 + 1);
    assert!(r.iter().filter(|r| r[0] == "grid" && num(&r[1]) == 0.0).all(|r| num(&r[3]) == 0.0));
    let max = r.last().unwrap();
    assert_eq!((max[0].as_str(), num(&max[1])), ("max", 1.0));
    assert!((num(&max[2]) - std::f64::consts::FRAC_PI_2).abs() < 1e-10);
    assert!((num(&max[3]) - 0.202).abs() < 1e-3);

    let r = rows(&stdout(&run(&["surface", "--quantity", "classical", "--ns", "11", "--nphi", "13"])));
    let max = r.last().unwrap();
    assert_eq!((num(&max[1]), num(&max[3])), (1.0, 1.0));
    assert!((num(&max[2]) - std::f64::consts::PI).abs() < 1e-10);
}

#[test]
fn delta_surface_square_and_ellipse() {
    let r = rows(&stdout(&run(&["delta-surface", "--n", "21"])));
    assert_eq!(r.len(), 441);
    let origin = r.iter().find(|r| num(&r[1]) == 0.0 && num(&r[2]) == 0.0).unwrap();
    assert_eq!(num(&origin[3]), 1.0);
    assert!(r.iter().filter(|r| num(&r[1]).abs() + num(&r[2]).abs() > 1.0 + 1e-9).all(|r| r[3].is_empty()));

    let third = std::f64::consts::FRAC_PI_3.to_string();
    let r = rows(&stdout(&run(&["delta-surface", "--n", "21", "--s0", "1", "--s1", "1", "--phi", &third])));
    let min = r.last().unwrap();
    assert_eq!(min[0], "min");
    assert!(num(&min[1]).abs() < 1e-12 && (num(&min[2]) - 0.5).abs() < 1e-11);
    assert!((num(&min[3]) - binary_entropy(0.75).unwrap()).abs() < 1e-11);

    let two_thirds = (2.0 * std::f64::consts::FRAC_PI_3).to_string();
    let r = rows(&stdout(&run(&["delta-surface", "--n", "11", "--s0", "1", "--s1", "1", "--phi", &two_thirds])));
    let expected = binary_entropy((1.0 + (std::f64::consts::FRAC_PI_3).sin()) / 2.0).unwrap();
    assert!((num(&r.last().unwrap()[3]) - expected).abs() < 1e-11);
}

#[test]
fn delta_surface_degenerate_falls_back_to_segment() {
    let out = run(&["delta-surface", "--n", "11", "--s0", "0.7", "--s1", "0.7", "--phi", "0"]);
    let text = stdout(&out);
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate"));
    let r = rows(&text);
    assert!(r[..r.len() - 1].iter().all(|r| r[0] == "segment"));
    assert_eq!(r.last().unwrap()[0], "min");
}

#[test]
fn trajectory_parabolas() {
    let r = rows(&stdout(&run(&["trajectory", "--points", "101"])));
    assert_eq!(r.len(), 101);
    assert_eq!(r[0][1..].iter().map(|v| num(v)).collect::<Vec<_>>(), [1.0, 0.0, -1.0, 0.0]);
    assert_eq!(r[100][1..].iter().map(|v| num(v)).collect::<Vec<_>>(), [0.0, 1.0, 0.0, 1.0]);
    for row in &r {
        let (x, z) = (num(&row[1]), num(&row[2]));
        assert!((z - (1.0 - x * x)).abs() < 1e-11);
    }
}

#[test]
fn discord_from_state_files() {
    let dir = tempfile::tempdir().unwrap();
    let b92 = dir.path().join("b92.toml");
    fs::write(&b92, "bloch0 = [0.0, 0.0, 1.0]\nbloch1 = [1.0, 0.0, 0.0]\n").unwrap();
    let text = stdout(&run(&["discord", "--input", b92.to_str().unwrap()]));
    assert!((report_value(&text, "discord") - 0.2019).abs() < 1e-3);
    assert!(report_value(&text, "theta").is_finite() && report_value(&text, "phi_m").is_finite());
    let text = stdout(&run(&["discord", "--input", b92.to_str().unwrap(), "--measured", "A"]));
    assert!(report_value(&text, "discord") <= 1e-9);

    // (𝟙/2 + σz/4) ⊗ (𝟙/2): a product state written out as a raw matrix.
    let product = dir.path().join("product.txt");
    fs::write(
        &product,
        "0.375 0 0 0 0 0 0 0\n0 0 0.375 0 0 0 0 0\n0 0 0 0 0.125 0 0 0\n0 0 0 0 0 0 0.125 0\n",
    )
    .unwrap();
    let text = stdout(&run(&["discord", "--input", product.to_str().unwrap(), "--ntheta", "16", "--nphi-m", "32", "--no-refine"]));
    for key in ["discord", "classical", "mutual"] {
        assert!(report_value(&text, key).abs() <= 1e-9, "{key}");
    }
}

#[test]
fn discord_validation_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("long.toml", "bloch0 = [1.0, 1.0, 0.0]\nbloch1 = [0.0, 0.0, 0.0]\n", "length"),
        ("trace.txt", "1 0 0 0 0 0 0 0\n0 0 1 0 0 0 0 0\n0 0 0 0 1 0 0 0\n0 0 0 0 0 0 1 0\n", "trace"),
        ("herm.txt", "0.25 0 0.1 0 0 0 0 0\n0 0 0.25 0 0 0 0 0\n0 0 0 0 0.25 0 0 0\n0 0 0 0 0 0 0.25 0\n", "Hermitian"),
        ("neg.txt", "0.5 0 0 0 0 0 0 0\n0 0 -0.1 0 0 0 0 0\n0 0 0 0 0.3 0 0 0\n0 0 0 0 0 0 0.3 0\n", "positive semidefinite"),
        ("nan.txt", "0.25 0 0 0 0 0 0 0\n0 0 0.25 0 0 0 0 0\n0 0 0 0 abc 0 0 0\n0 0 0 0 0 0 0.25 0\n", "malformed"),
    ];
    for (name, body, needle) in cases {
        let path = dir.path().join(name);
        fs::write(&path, body).unwrap();
        let out = run(&["discord", "--input", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{name}: {err}");
    }
    let out = run(&["discord", "--input", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
