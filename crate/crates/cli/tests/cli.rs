use std::io::Write;
use std::process::{Command, Output, Stdio};

fn conics(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conics")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const IN_F: &str = "3 -2 -1 0 0 0";
const IN_G: &str = "3 -1 -2 0 0 0";

#[test]
fn classify_prints_all_levels() {
    let o = conics(&["classify", IN_F, IN_G]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("orbit=I pair=IN couple=IN ambient=IN"));
    let o = conics(&["classify", "-1", "-1", "0", "0", "1", "0", "1", "-1", "0", "0", "1", "0"]);
    assert!(stdout(&o).starts_with("orbit=V pair=VN couple=VN/f-in"));
}

#[test]
fn exit_codes() {
    let o = conics(&["classify", IN_F, IN_F]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ProportionalConics"));
    let o = conics(&["classify", "0 0 0 0 1 0", "0 1 0 0 0 0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("conic f is degenerate"));
    let o = conics(&["classify", "1 1 1 0 0 0", "1 0 -1 0 0 0"]);
    assert!(stderr(&o).contains("conic f has no real points"));
    let o = conics(&["classify", "3 -2 -1 0 0", IN_G]);
    assert_eq!(o.status.code(), Some(2));
    let o = conics(&["classify", "3 -2 x 0 0 0", IN_G]);
    assert_eq!(o.status.code(), Some(2));
    let o = conics(&["sweep", "--family", "/nonexistent/family.json", "--from", "0", "--to", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_round_trips_byte_for_byte() {
    for cmd in ["classify", "invariants", "orbit"] {
        let o = conics(&[cmd, "0 1 0 0 1 0", "0 2 0 0 1 0", "--json"]);
        assert!(o.status.success(), "{cmd}");
        let out = stdout(&o);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, out, "{cmd}");
    }
}

#[test]
fn rationals_are_strings() {
    let o = conics(&["invariants", "0 1 0 0 1 0", "0 2 0 0 1 0", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["antisym"], "-3/256");
    assert_eq!(v["phi"]["phi30"], "-1/4");
}

#[test]
fn output_is_deterministic() {
    for cmd in ["classify", "invariants"] {
        let a = conics(&[cmd, "1 1 1 0 3 0", "1 1 1 0 4 0", "--json"]);
        let b = conics(&[cmd, "1 1 1 0 3 0", "1 1 1 0 4 0", "--json"]);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn reads_stdin_and_files() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_conics"))
        .arg("classify")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"f": ["3","-2","-1","0","0","0"], "g": [3,-1,-2,0,0,0]}"#).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(stdout(&o).starts_with("orbit=I pair=IN"));
    let dir = std::env::temp_dir().join(format!("conics-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("couple.txt");
    std::fs::write(&path, format!("{IN_F}\n{IN_G}\n")).unwrap();
    let o = conics(&["classify", "--input", path.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("orbit=I pair=IN"));
}

#[test]
fn golden_corpus_passes() {
    let o = conics(&["corpus", "--table2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with(" pass")).count(), 14);
    assert!(out.contains("14/14 passed"));
}

#[test]
fn normal_form_corpus() {
    let o = conics(&["corpus", "--uhlig", "U21"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("36/36 passed"));
    let o = conics(&["corpus", "--uhlig", "U9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_from_a_family_file() {
    let dir = std::env::temp_dir().join(format!("conics-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("family.json");
    std::fs::write(
        &path,
        r#"{"f": [["1"],["1"],["-25","0","1"],[],[],[]],
            "g": [["1/9"],["1/4"],["3","0","1/16"],[],["-4/3"],[]]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let o = conics(&["sweep", "--family", p, "--from", "-4", "--to", "4"]);
    assert_eq!(stdout(&o).lines().next(), Some("IaS / IIaS(point) / IbN / IIaS(point) / IaS"));
    let o = conics(&["sweep", "--family", p, "--from", "-4", "--to", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let segs = v["segments"].as_array().unwrap();
    assert_eq!(segs.len(), 5);
    assert_eq!(segs[1]["lo_type"], "algebraic");
    assert_eq!(segs[2]["class"], "IbN");
    let o = conics(&["sweep", "--family", p, "--from", "1", "--to", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_and_render() {
    let o = conics(&["verify", "1 1 -1 0 0 0", "2 2 -1 0 0 0", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nesting"], "g_inside_f");
    assert_eq!(v["agree"], true);
    let out = std::env::temp_dir().join(format!("conics-{}.svg", std::process::id()));
    let o = conics(&["render", IN_F, IN_G, "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("couple=IN"));
}
