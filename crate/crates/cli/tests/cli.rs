use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use regionstereo::image::{load_gray, save_color};
use regionstereo::synthetic::{lab_scene_sized, shifted_pair};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_regionstereo"));
    cmd.env_remove("STEREO_THREADS");
    cmd
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let Output {
        status,
        stdout,
        stderr,
    } = cmd.output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

/// Writes a synthetic pair as PPMs and returns (left, right).
fn pair(dir: &Path, width: usize, height: usize) -> (PathBuf, PathBuf) {
    let scene = lab_scene_sized(width, height, 3);
    let (l, r) = (dir.join("left.ppm"), dir.join("right.ppm"));
    save_color(&scene.left, &l).unwrap();
    save_color(&scene.right, &r).unwrap();
    (l, r)
}

#[test]
fn match_writes_disparity_and_mask() {
    let dir = tempfile::tempdir().unwrap();
    let scene = shifted_pair(48, 16, 3, 5);
    let (l, r) = (dir.path().join("l.ppm"), dir.path().join("r.ppm"));
    save_color(&scene.left, &l).unwrap();
    save_color(&scene.right, &r).unwrap();
    let out = dir.path().join("d.pgm");
    let (code, stdout, _) = run(bin()
        .args([
            "match",
            "--algorithm",
            "global",
            "-n",
            "1",
            "-m",
            "3",
            "--dmax",
            "40",
        ])
        .args([&l, &r])
        .arg("-o")
        .arg(&out));
    assert_eq!(code, 0);
    assert!(stdout.contains("# resolved config"));
    assert!(stdout.contains("d_max = 40"));
    let d = load_gray(&out).unwrap();
    let mask = load_gray(dir.path().join("d.mask.pgm")).unwrap();
    assert_eq!(d.dims(), (48, 16));
    // exact shift of 3 inside; a 3-wide window never fits at the last column
    assert_eq!(d.get(8, 10), 3.0);
    assert_eq!(d.get(8, 47), 0.0);
    assert_eq!(mask.get(8, 10), 255.0);
    assert_eq!(mask.get(8, 47), 0.0);
}

#[test]
fn linegrow_status_dump_and_filter_chain() {
    let dir = tempfile::tempdir().unwrap();
    let (l, r) = pair(dir.path(), 64, 40);
    let d = dir.path().join("lg.pgm");
    let status = dir.path().join("status.pgm");
    let (code, stdout, err) = run(bin()
        .args(["match", "--algorithm", "linegrow", "--vlg", "60", "--dmax", "20"])
        .args([&l, &r])
        .arg("-o")
        .arg(&d)
        .arg("--dump-status")
        .arg(&status));
    assert_eq!(code, 0, "{err}");
    assert!(stdout.contains("idle"));
    let s = load_gray(&status).unwrap();
    assert!(s.data().iter().all(|v| [170.0, 255.0, 85.0].contains(v)));

    let f = dir.path().join("f.pgm");
    let (code, stdout, err) = run(bin()
        .args(["filter", "--alpha", "0.5", "--dmax", "20", "-d"])
        .arg(&d)
        .args([&l, &r])
        .arg("-o")
        .arg(&f)
        .arg("--energy")
        .arg(dir.path().join("e.pgm")));
    assert_eq!(code, 0, "{err}");
    let lines: Vec<&str> = stdout.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(lines[0], "r_d,s_d,mean_energy,ve,alpha,retained_fraction");
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(fields.len(), 6);
    assert_eq!(fields[4], "0.5");
    assert!(stdout.contains("reliability R_d"));
    assert!(dir.path().join("f.mask.pgm").exists());
    assert!(dir.path().join("e.pgm").exists());

    let (code, _, err) = run(bin()
        .args(["depth", "-d"])
        .arg(&f)
        .arg("-o")
        .arg(dir.path().join("z.pgm")));
    assert_eq!(code, 0, "{err}");
    assert!(dir.path().join("z.mask.pgm").exists());

    let ply = dir.path().join("c.ply");
    let (code, stdout, err) = run(bin()
        .args(["cloud", "--median", "1", "-d"])
        .arg(&f)
        .arg("--right")
        .arg(&r)
        .arg("-o")
        .arg(&ply));
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&ply).unwrap();
    let header_count: usize = text
        .lines()
        .find_map(|l| l.strip_prefix("element vertex "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(stdout.contains(&format!("wrote {header_count} points")));
    assert_eq!(
        text.split("end_header\n").nth(1).unwrap().lines().count(),
        header_count
    );
}

#[test]
fn bench_writes_five_rows() {
    let dir = tempfile::tempdir().unwrap();
    let (l, r) = pair(dir.path(), 64, 40);
    let report = dir.path().join("report.csv");
    let (code, stdout, err) = run(bin()
        .arg("bench")
        .args([&l, &r])
        .arg("-o")
        .arg(&report)
        .env("STEREO_THREADS", "2"));
    assert_eq!(code, 0, "{err}");
    assert!(stdout.contains("linegrow 1x5 vlg=10"));
    let csv = std::fs::read_to_string(&report).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "label,r_d_unfiltered,r_d_filtered,seconds,retained_fraction,bad_pixel_rate"
    );
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("global 1x1,"));
}

#[test]
fn config_file_sits_between_defaults_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let (l, r) = pair(dir.path(), 32, 16);
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "alpha = 0.5\nd_max = 12\nm = 3\n").unwrap();
    let d = dir.path().join("d.pgm");
    let (code, stdout, err) = run(bin()
        .arg("--config")
        .arg(&cfg)
        .args(["match", "--dmax", "8"])
        .args([&l, &r])
        .arg("-o")
        .arg(&d));
    assert_eq!(code, 0, "{err}");
    assert!(stdout.contains("#   d_max = 8\n"), "{stdout}");
    assert!(stdout.contains("#   m = 3\n"));
    assert!(stdout.contains("#   alpha = 0.5\n"));
    assert!(stdout.contains("#   f = 30.0\n"));
}

#[test]
fn config_file_can_supply_paths() {
    let dir = tempfile::tempdir().unwrap();
    let (l, r) = pair(dir.path(), 32, 16);
    let out = dir.path().join("d.pgm");
    let cfg = dir.path().join("run.toml");
    std::fs::write(
        &cfg,
        format!("left = {:?}\nright = {:?}\noutput = {:?}\nd_max = 6\n", l, r, out),
    )
    .unwrap();
    let (code, _, err) = run(bin().arg("match").arg("--config").arg(&cfg));
    assert_eq!(code, 0, "{err}");
    assert!(out.exists());
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let (l, r) = pair(dir.path(), 16, 8);
    let o = dir.path().join("d.pgm");

    let (code, _, err) = run(bin().arg("explode"));
    assert_eq!(code, 2);
    assert!(err.contains("Usage"), "{err}");

    let (code, _, _) = run(bin()
        .args(["match", "--algorithm", "annealing"])
        .args([&l, &r])
        .arg("-o")
        .arg(&o));
    assert_eq!(code, 2);

    let (code, _, err) = run(bin().args(["match", "-n", "0"]).args([&l, &r]).arg("-o").arg(&o));
    assert_eq!(code, 2, "{err}");

    let (code, _, err) = run(bin().arg("match").args([&l, &r]));
    assert_eq!(code, 2);
    assert!(err.contains("output"), "{err}");

    let cfg = dir.path().join("bad.toml");
    std::fs::write(&cfg, "alpha = 1.0\nwindow = 3\n").unwrap();
    let (code, _, err) = run(bin()
        .arg("--config")
        .arg(&cfg)
        .arg("match")
        .args([&l, &r])
        .arg("-o")
        .arg(&o));
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");

    let (code, _, err) = run(bin()
        .arg("match")
        .args([&l, &r])
        .arg("-o")
        .arg(&o)
        .env("STEREO_THREADS", "many"));
    assert_eq!(code, 2);
    assert!(err.contains("STEREO_THREADS"));
}

#[test]
fn pipeline_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let (l, _) = pair(dir.path(), 16, 8);
    let o = dir.path().join("d.pgm");

    let missing = dir.path().join("nope.ppm");
    let (code, _, err) = run(bin().arg("match").arg(&l).arg(&missing).arg("-o").arg(&o));
    assert_eq!(code, 1);
    assert!(err.contains("nope.ppm"), "{err}");

    let small = dir.path().join("small.ppm");
    save_color(&lab_scene_sized(12, 8, 1).right, &small).unwrap();
    let (code, _, err) = run(bin().arg("match").arg(&l).arg(&small).arg("-o").arg(&o));
    assert_eq!(code, 1);
    assert!(err.contains("mismatch"), "{err}");
}

#[test]
fn zero_threads_means_auto() {
    let dir = tempfile::tempdir().unwrap();
    let (l, r) = pair(dir.path(), 16, 8);
    let (code, _, err) = run(bin()
        .arg("match")
        .args([&l, &r])
        .arg("-o")
        .arg(dir.path().join("d.pgm"))
        .env("STEREO_THREADS", "0"));
    assert_eq!(code, 0, "{err}");
}
