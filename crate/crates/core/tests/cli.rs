use std::process::{Command, Output};

fn chordgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordgroup"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = chordgroup(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    chordgroup(args).status.code().unwrap()
}

#[test]
fn apply_golden() {
    assert_eq!(stdout(&["apply", "d", "0,4,7"]), "0,5,8\n");
    assert_eq!(stdout(&["apply", "", "0,4,7"]), "0,4,7\n");
    assert_eq!(stdout(&["apply", "a", "(0,4,7,11)"]), "0,4,8,11\n");
    assert_eq!(stdout(&["apply", "iii", "0,4,7"]), "0,4,7\n");
    assert_eq!(code(&["apply", "a", "0,4,7"]), 3);
}

#[test]
fn orbit_golden() {
    assert_eq!(stdout(&["orbit", "i", "0,3,6"]), "0,3,6\n0,3,9\n0,6,9\n");
    assert_eq!(stdout(&["orbit", "i,d,a", "0,3,6,9"]), "0,3,6,9\n");
    assert_eq!(
        stdout(&["orbit", "i,d", "0,4,7,11"]),
        "0,1,5,8\n0,3,7,8\n0,4,5,9\n0,4,7,11\n"
    );
}

#[test]
fn classify_golden() {
    assert_eq!(stdout(&["classify", "0,2,6,9"]), "Mm3\n");
    assert_eq!(stdout(&["classify", "0,1,2,3"]), "not harmonic\n");
    assert_eq!(stdout(&["classify", "0,3,8"]), "Major1\n");
    assert_eq!(stdout(&["classify", "0,3,6,11"]), "harmonic, no family\n");
    assert_eq!(code(&["classify", "0,3,6,9,11"]), 3);
}

#[test]
fn enumerate_golden() {
    let triads = stdout(&["enumerate", "--tones", "3", "--harmonic"]);
    assert_eq!(
        triads,
        "0,3,6 Diminished0\n0,3,7 Minor0\n0,3,8 Major1\n0,3,9 Diminished1\n0,4,7 Major0\n\
         0,4,8 Augmented0\n0,4,9 Minor1\n0,5,8 Minor2\n0,5,9 Major2\n0,6,9 Diminished2\n"
    );
    assert_eq!(stdout(&["enumerate", "--tones", "1"]), "0\n");
    assert_eq!(stdout(&["enumerate", "--tones", "2"]).lines().count(), 11);
}

#[test]
fn graph_outputs() {
    let dot = stdout(&["graph", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("MM0 -> MM1 [label=\"i\"]"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["graph", "--format", "json"])).unwrap();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 24);
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["graph", "--format", "json", "--include-dd"])).unwrap();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 25);
    assert_eq!(code(&["graph", "--format", "png"]), 2);
}

#[test]
fn graph_to_file() {
    let dir = std::env::temp_dir().join(format!("chordgroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.dot");
    assert_eq!(stdout(&["graph", "--output", path.to_str().unwrap()]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["graph"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["graph", "--format", "json", "--include-dd"][..],
        &["graph", "--format", "dot"],
        &["enumerate", "--tones", "4", "--harmonic"],
        &["verify"],
    ] {
        assert_eq!(chordgroup(args).stdout, chordgroup(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["classify", "0,4,x"][..],
        &["classify", "4,7,0"],
        &["apply", "q", "0,4,7"],
        &["orbit", "i;d", "0,4,7"],
        &["enumerate", "--tones", "13"],
        &["enumerate", "--tones", "2", "--harmonic"],
        &["partition", "--chords", "[3,4]"],
        &["frobnicate"],
        &[],
    ] {
        assert_eq!(code(args), 2, "{args:?}");
    }
}
