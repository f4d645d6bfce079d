use hammock_cli::run;
use serde_json::Value;

fn hammocks(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["hammocks"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn catalog_lists_one_line_per_object() {
    for (id, n) in [("e6", 36), ("nilp:4", 4), ("sub:4", 20), ("a3", 6)] {
        let (code, out, _) = hammocks(&["catalog", "--category", id]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), n, "{id}");
    }
}

#[test]
fn catalog_json_parses() {
    let (code, out, _) = hammocks(&["catalog", "--category", "e6", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v.is_object());
}

#[test]
fn e6_cok_alpha_dot_matches_golden() {
    let (code, out, _) = hammocks(&["hammock", "--category", "e6", "--functor", "cok@alpha", "--format", "dot"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("golden/e6_cok_alpha.dot"));
}

#[test]
fn report_prints_verdict_and_oracle() {
    let (code, out, _) = hammocks(&["hammock", "--category", "e6", "--functor", "cok@alpha", "--report"]);
    assert_eq!(code, 0);
    assert!(out.contains("sources: 010000"));
    assert!(out.contains("sinks: 011000"));
    assert!(out.contains("theorem1: pass"));
    assert!(out.contains("oracle: match"));
}

#[test]
fn json_report_has_classification() {
    let (code, out, _) = hammocks(&["hammock", "--category", "e6", "--functor", "im@beta", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sources"], serde_json::json!(["011110"]));
    assert_eq!(v["theorem1"]["pass"], Value::Bool(true));
}

#[test]
fn count_sub_summands_overlay_has_one_value_two() {
    let (code, out, _) = hammocks(&["hammock", "--category", "sub:4", "--functor", "count-sub-summands", "--format", "ascii"]);
    assert_eq!(code, 0);
    let twos: Vec<&str> = out.split_whitespace().filter(|w| w.ends_with("(2)")).collect();
    assert_eq!(twos, ["(42|31)(2)"]);
}

#[test]
fn renders_are_deterministic() {
    for format in ["dot", "ascii", "tikz", "json"] {
        let args = ["hammock", "--category", "sub:4", "--functor", "mult-sub@2", "--format", format];
        assert_eq!(hammocks(&args), hammocks(&args), "{format}");
    }
}

#[test]
fn functor_from_file() {
    let dir = std::env::temp_dir().join(format!("hammocks-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zero.json");
    // zero endomorphism of the simple at the middle vertex; e_* = Hom(S, -)
    let rep = serde_json::json!({"quiver": "a3", "dims": [0, 1, 0], "maps": {"a": [[]], "b": []}});
    std::fs::write(
        &path,
        serde_json::json!({"variance": "covariant", "morphism": {"source": rep, "target": rep, "components": [[], [[0]], []]}}).to_string(),
    )
    .unwrap();
    let (code, out, err) = hammocks(&["hammock", "--category", "a3", "--functor", &format!("@{}", path.display()), "--format", "json"]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["theorem1"]["pass"].as_bool().unwrap());
    let support = v["values"].as_object().map_or(0, |m| m.values().filter(|x| x.as_u64() > Some(0)).count());
    assert!(support > 0);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(hammocks(&["hammock", "--category", "e6", "--functor", "nope@alpha"]).0, 2);
    assert_eq!(hammocks(&["hammock", "--category", "e6", "--functor", "ker@zeta"]).0, 2);
    assert_eq!(hammocks(&["catalog", "--category", "sub:9"]).0, 2);
    assert_eq!(hammocks(&["frobnicate"]).0, 2);
    assert_eq!(hammocks(&["--help"]).0, 0);
    assert_eq!(hammocks(&["hammock", "--category", "sub:4", "--functor", "mult-factor@4"]).0, 2);
}

#[test]
fn verify_suite_emits_json_verdict() {
    let (code, out, _) = hammocks(&["verify", "--suite", "periodicity"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["suite"], "periodicity");
    assert_eq!(v["pass"], Value::Bool(true));
}
