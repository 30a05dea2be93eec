use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_straightlab"))
        .args(args)
        .env_remove("STRAIGHTLAB_CUTOFF")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(dir("golden").join(name)).unwrap()
}

fn data(name: &str) -> String {
    dir("data").join(name).to_str().unwrap().to_string()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn generated_polygon_has_the_homology_of_a_circle() {
    let g = run(&["gen", "polygon", "3"], None);
    assert_eq!(g.status.code(), Some(0));
    assert_eq!(stdout(&g), golden("gen_polygon3.json"));
    let h = run(&["homology"], Some(&stdout(&g)));
    assert_eq!(stdout(&h), golden("homology_polygon3.json"));
    let t = run(&["--format", "text", "homology", "-"], Some(&stdout(&g)));
    assert_eq!(stdout(&t), "H0 = Z\nH1 = Z\n");
}

#[test]
fn empty_set_has_zero_homology() {
    let h = run(&["homology"], Some(r#"{"simplices": {}}"#));
    assert_eq!(h.status.code(), Some(0));
    assert_eq!(json(&h)["homology"], serde_json::json!([]));
}

#[test]
fn truncated_nerve_reports_degrees_below_the_cutoff() {
    let h = run(&["--format", "text", "--cutoff", "4", "homology", "nerve:Z2"], None);
    assert_eq!(stdout(&h), "H0 = Z\nH1 = Z/2\nH2 = 0\nH3 = Z/2\n");
}

#[test]
fn single_lemma_instance_holds() {
    let o = run(&["verify", "lemma9.1", "--U", "delta1", "--W", "enerve:Z2", "--no-timing"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("verify_lemma9_1_delta1.json"));
}

#[test]
fn output_is_stable_across_runs() {
    let args = ["--format", "text", "maps", "polygon3", "nerve:Z3", "--cutoff", "3"];
    let a = run(&args, None);
    assert_eq!(stdout(&a), golden("maps_polygon3_nerveZ3.txt"));
    assert_eq!(stdout(&a), stdout(&run(&args, None)));
    let uct = run(&["--format", "text", "classes", "nerve:Z2", "boundary3", "--uct", "--cutoff", "3"], None);
    assert_eq!(stdout(&uct), golden("classes_uct.txt"));
}

#[test]
fn factor_check_decisions() {
    let w = run(&["factor-check", &data("winding_z2.json")], None);
    assert_eq!(w.status.code(), Some(0));
    assert_eq!(json(&w)["straight"]["straight"], true);
    assert_eq!(json(&w)["factored"]["straight"], true);
    let i = run(&["factor-check", &data("indicator_z.json")], None);
    assert_eq!(i.status.code(), Some(0));
    assert_eq!(json(&i)["factored"]["straight"], false);
    assert_eq!(json(&i)["factored"]["witness"]["divisor"], "0");
}

#[test]
fn straight_check_over_integers_and_mod_two() {
    let z = run(&["straight-check", &data("four_maps.json")], None);
    assert_eq!(json(&z)["straight"], false);
    let table = std::fs::read_to_string(data("four_maps.json")).unwrap().replace(r#""group": "Z","#, r#""group": "Z/2", "ring": "Z/2","#);
    let k = run(&["straight-check"], Some(&table));
    assert_eq!(json(&k)["straight"], true);
    assert_eq!(json(&k)["ring"], "Z/2");
}

#[test]
fn main_invariant_of_a_winding_map() {
    let u = stdout(&run(&["gen", "polygon", "3"], None));
    let v = stdout(&run(&["gen", "nerve", "Z2", "--cutoff", "3"], None));
    let assignment = r#"{"v0": ["", "[]"], "v1": ["", "[]"], "v2": ["", "[]"], "e0": ["", "[1]"], "e1": ["s0", "[]"], "e2": ["s0", "[]"]}"#;
    let doc = format!(r#"{{"source": {u}, "target": {v}, "assignment": {assignment}}}"#);
    let o = run(&["--format", "text", "main-invariant"], Some(&doc));
    assert_eq!(stdout(&o), "h([s]) = (1, 1) in Z + Z/2\n");
}

#[test]
fn base_change_dimensions() {
    let o = run(&["base-change", "polygon3", "nerve:Z2", "--prime", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["dimension"], 2);
    assert_eq!(json(&o)["injective"], true);
}

#[test]
fn environment_sets_the_cutoff() {
    let o = Command::new(env!("CARGO_BIN_EXE_straightlab")).args(["gen", "nerve", "Z2"]).env("STRAIGHTLAB_CUTOFF", "2").output().unwrap();
    assert_eq!(json(&o)["cutoff"], 2);
    assert_eq!(json(&o)["simplices"].as_object().unwrap().len(), 3);
}

#[test]
fn schema_errors_exit_with_two() {
    for (args, stdin) in [
        (vec!["homology"], "{not json"),
        (vec!["homology"], r#"{"simplices": {"0": ["a", "a"]}}"#),
        (vec!["homology"], r#"{"simplices": {"0": ["a"], "1": ["e"]}, "faces": {"e": [["", "a"]]}}"#),
        (vec!["gen", "torus"], ""),
        (vec!["base-change", "polygon3", "nerve:Z2", "--prime", "4"], ""),
        (vec!["verify", "lemma99"], ""),
        (vec!["verify", "lemma9.1", "--U", "delta1"], ""),
        (vec!["straight-check"], r#"{"X": 1, "Y": 1, "group": "Q", "entries": []}"#),
        (vec!["factor-check", &data("winding_z2.json"), "--bogus"], ""),
    ] {
        let o = run(&args, Some(stdin));
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn inconsistent_table_is_a_schema_error() {
    let table = r#"{"source": "polygon3", "target": "nerve:Z2", "group": "Z", "entries": [
        {"assignment": {"v0": ["", "[]"], "v1": ["", "[]"], "v2": ["", "[]"], "e0": ["", "[1]"], "e1": ["", "[1]"], "e2": ["s0", "[]"]}, "value": 1},
        {"assignment": {"v0": ["", "[]"], "v1": ["", "[]"], "v2": ["", "[]"], "e0": ["s0", "[]"], "e1": ["s0", "[]"], "e2": ["s0", "[]"]}, "value": 0}
    ]}"#;
    let o = run(&["factor-check"], Some(table));
    assert_eq!(o.status.code(), Some(2));
}
