use superchar::cli::{run_with, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use superchar::{SupergroupKind, WeightDiagram};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("superchar").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const ODD22: [&str; 6] = ["--group", "osp-odd", "--m", "2", "--n", "2"];

fn with<'a>(group: &[&'a str], rest: &[&'a str]) -> Vec<&'a str> {
    let mut v = rest.to_vec();
    v.extend_from_slice(group);
    v
}

#[test]
fn pim_text_output() {
    let (code, out, _) = run(&with(&ODD22, &["pim", "--diagram", "x1>; <"]));
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "+1 * E(>; < o x)\n-1 * E(>; < x)\n");
}

#[test]
fn json_and_text_agree_and_round_trip() {
    let k = SupergroupKind::osp_odd(2, 2).unwrap();
    for d in ["x1>; <", "(+) x2;", "(-) x2;", "; x x"] {
        let (_, text, _) = run(&with(&ODD22, &["pim", "--diagram", d]));
        let (code, json, _) = run(&with(&ODD22, &["--json", "pim", "--diagram", d]));
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let mut from_json: Vec<String> = Vec::new();
        for t in v["terms"].as_array().unwrap() {
            let s = t["diagram"].as_str().unwrap();
            // printed diagrams parse back to the same text
            assert_eq!(WeightDiagram::parse(k, s).unwrap().to_string(), s);
            from_json.push(format!("{:+} * E({s})", t["coeff"].as_i64().unwrap()));
        }
        let from_text: Vec<String> = text.lines().map(str::to_string).collect();
        assert_eq!(from_json, from_text);
    }
}

#[test]
fn caps_of_the_rank_three_example() {
    let (code, out, _) = run(&["caps", "--group", "osp-odd", "--m", "3", "--n", "3", "--diagram", "; o x > < x"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "(5/2, 15/2)\n(11/2, 13/2)\n");
}

#[test]
fn diagram_and_weight_conversions() {
    let (code, out, _) = run(&with(&ODD22, &["diagram", "--diagram", "x2;"]));
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 2);
    let (code, out, _) = run(&with(&ODD22, &["diagram", "--weight", "a=1/2,-1/2 b=1/2,1/2"]));
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "(+) x2;");
}

#[test]
fn translate_and_bar() {
    let (code, out, _) =
        run(&["translate", "--group", "osp-even", "--m", "1", "--n", "1", "--diagram", ">; <", "--functor", "T(0,1)"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "+1 * E([+] ; x)\n+1 * E([-] ; x)\n");
    let (code, out, _) = run(&["bar", "--group", "osp-odd", "--m", "4", "--n", "4", "--diagram", "(+) x3; x"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("(+) x1; x o o x o x\n"));
}

#[test]
fn pim_character_is_nonnegative() {
    let (code, json, _) = run(&["--json", "char", "--group", "gl", "--m", "1", "--n", "1", "--diagram", "@0 x", "--basis", "pim"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let coeffs: Vec<i64> = v["terms"].as_array().unwrap().iter().map(|t| t["coeff"].as_i64().unwrap()).collect();
    assert_eq!(coeffs.iter().sum::<i64>(), 4);
    assert!(coeffs.iter().all(|c| *c > 0));
}

#[test]
fn exit_codes() {
    let (code, _, err) = run(&with(&ODD22, &["pim", "--diagram", "x1>; ?"]));
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("byte 5"), "{err}");
    let (code, _, _) = run(&["pim", "--diagram", "x"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = run(&["nonsense"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
    let (code, _, _) = run(&["pset", "--group", "gl", "--m", "1", "--n", "2", "--diagram", "@0 x <"]);
    assert_eq!(code, EXIT_DOMAIN);
    let (code, _, _) = run(&["pset", "--group", "gl", "--m", "1", "--n", "2", "--allow-small-m", "--diagram", "@0 x <"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn verify_passes_on_a_small_group() {
    let (code, out, _) = run(&["verify", "--group", "osp-even", "--m", "2", "--n", "1", "--max-pos", "6", "--json"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ok"], true);
}
