use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn cfg(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

fn uvt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uvt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn with_cfg<'a>(args: &[&'a str], c: &'a Path) -> Vec<&'a str> {
    let mut v = args.to_vec();
    v.push("--config");
    v.push(c.to_str().expect("utf-8 path"));
    v
}

#[test]
fn unknot_and_quantum_dimensions() {
    let sl2 = cfg("sl2.cfg");
    let o = uvt(&with_cfg(&["invariant", "--tangle", "unknot"], &sl2));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "v + v^-1\n");
    assert_eq!(stdout(&uvt(&with_cfg(&["qdim"], &sl2))), "v + v^-1\n");
    assert_eq!(stdout(&uvt(&with_cfg(&["qdim"], &cfg("sl2_rank1_2.cfg")))), "v^2 + 1 + v^-2\n");
    assert_eq!(stdout(&uvt(&with_cfg(&["qdim"], &cfg("sl3.cfg")))), "v^2 + 1 + v^-2\n");
}

#[test]
fn specialization_flag() {
    let sl2 = cfg("sl2.cfg");
    let full = stdout(&uvt(&with_cfg(&["invariant", "--tangle", "trefoil"], &sl2)));
    let at_one = uvt(&with_cfg(&["invariant", "--tangle", "trefoil", "--spec", "t=1"], &sl2));
    assert_eq!(at_one.status.code(), Some(0));
    assert_eq!(stdout(&at_one), full);
    assert!(!full.contains('t'));
    let both = uvt(&with_cfg(&["invariant", "--tangle", "unknot", "--spec", "t=1", "--spec", "v=2"], &sl2));
    assert_eq!(stdout(&both), "5/2\n");
}

#[test]
fn tangle_errors_exit_one() {
    let sl2 = cfg("sl2.cfg");
    let o = uvt(&with_cfg(&["invariant", "--tangle", "qtr ; up"], &sl2));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("type error"));
    let o = uvt(&with_cfg(&["invariant", "--tangle", "up * cup"], &sl2));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 5"));
    assert_eq!(uvt(&with_cfg(&["invariant", "--tangle", "up*dn"], &sl2)).status.code(), Some(1));
}

#[test]
fn tangle_file_input() {
    let dir = std::env::temp_dir().join(format!("uvt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("hopf.tangle");
    std::fs::write(&f, "xp ;\nxp\n").unwrap();
    let sl2 = cfg("sl2.cfg");
    let from_file = uvt(&with_cfg(&["invariant", "--tangle-file", f.to_str().unwrap()], &sl2));
    let named = uvt(&with_cfg(&["invariant", "--tangle", "hopf"], &sl2));
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&named));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn config_violations_exit_two() {
    let dir = std::env::temp_dir().join(format!("uvt-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (name, text) in [
        ("gcd.cfg", "rank = 2\nomega.row.1 = 2, 0\nomega.row.2 = 0, 2\nmodule = rank1:1\n"),
        ("float.cfg", "rank = 1\nomega.row.1 = 1.5\n"),
        ("asym.cfg", "rank = 2\ndot.row.1 = 2, -1\ndot.row.2 = 0, 2\nomega.row.1 = 1, -1\nomega.row.2 = 0, 1\n"),
    ] {
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        let o = uvt(&with_cfg(&["qdim"], &p));
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("config error"), "{name}");
    }
    assert_eq!(uvt(&with_cfg(&["qdim"], &dir.join("missing.cfg"))).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_suites() {
    let o = uvt(&with_cfg(&["verify", "--suite", "ybe"], &cfg("sl2.cfg")));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS ybe/"));
    let o = uvt(&with_cfg(&["verify", "--suite", "tangle-relations"], &cfg("sl3.cfg")));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("/relation ")).count(), 13);
    let o = uvt(&["verify", "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(1));
    let o = uvt(&with_cfg(&["verify", "--suite", "pairing", "--depth", "2", "--format", "lines"], &cfg("sl3.cfg")));
    assert!(stdout(&o).lines().all(|l| l.split('\t').count() == 5));
}

#[test]
fn rmatrix_dump() {
    let o = uvt(&with_cfg(&["rmatrix"], &cfg("sl2.cfg")));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    assert!(text.starts_with("1 1 | w0⊗w0 -> w0⊗w0 | v^(-1/2)\n"));
    assert_eq!(text, stdout(&uvt(&with_cfg(&["rmatrix"], &cfg("sl2.cfg")))));
    let o = uvt(&with_cfg(&["theta", "--depth", "1"], &cfg("sl2.cfg")));
    assert_eq!(stdout(&o), "(0) | 1 | 1 | 1\n(1) | F1 | E1 | -v + v^-1\n");
}
