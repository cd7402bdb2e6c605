use std::path::PathBuf;
use std::process::{Command, Output};

fn uhg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uhg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name).display().to_string()
}

#[test]
fn check_prints_the_summary_line() {
    let o = uhg(&["check", "--theorem", "theorem_48_64", "--trials", "1000", "--seed", "7", "--field", "rational"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("theorem_48_64\t1000\t1000\t0\t0"));
}

#[test]
fn characteristic_two_is_a_usage_error() {
    let o = uhg(&["check", "--theorem", "pappus", "--field", "fp:2"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(uhg(&["census", "--field", "fp:2"]).status.code(), Some(2));
    assert_eq!(uhg(&["census", "--field", "rational"]).status.code(), Some(2));
    assert_eq!(uhg(&["check", "--theorem", "nonexistent"]).status.code(), Some(2));
}

#[test]
fn eval_exit_codes() {
    let o = uhg(&["eval", &corpus("jumping_jack.uhg")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let dir = tempfile::tempdir().unwrap();
    let failing = dir.path().join("fail.uhg");
    std::fs::write(&failing, "assert on_null([1:1:1]);\n").unwrap();
    let o = uhg(&["eval", failing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL 1:1"));

    let broken = dir.path().join("broken.uhg");
    std::fs::write(&broken, "b = meet(;\n").unwrap();
    let o = uhg(&["eval", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":1:10: error"));
}

#[test]
fn render_writes_identical_svg() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    for out in [&a, &b] {
        let o = uhg(&["render", &corpus("orthocenter.uhg"), "-o", out.to_str().unwrap(), "--viewport", "-0.5,0.5,1.5"]);
        assert_eq!(o.status.code(), Some(0));
    }
    let svg = std::fs::read(&a).unwrap();
    assert_eq!(svg, std::fs::read(&b).unwrap());
    assert!(String::from_utf8(svg).unwrap().starts_with("<?xml"));
    let o = uhg(&["render", &corpus("orthocenter.uhg"), "-o", a.to_str().unwrap(), "--viewport", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn census_counts_for_seven() {
    let o = uhg(&["census", "--field", "fp:7", "--circles"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("points\t57\n"));
    assert!(text.contains("null_points\t8\n"));
    assert!(text.contains("null_lines\t8\n"));
    assert!(text.lines().any(|l| l.starts_with("circles\t")));
}
