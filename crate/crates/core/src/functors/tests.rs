use super::*;

fn odd(m: usize, n: usize) -> SupergroupKind {
    SupergroupKind::osp_odd(m, n).unwrap()
}

fn even(m: usize, n: usize) -> SupergroupKind {
    SupergroupKind::osp_even(m, n).unwrap()
}

fn dg(kind: SupergroupKind, s: &str) -> WeightDiagram {
    WeightDiagram::parse(kind, s).unwrap()
}

fn terms(x: &KElement) -> Vec<(String, i64)> {
    x.sorted_terms()
}

fn euler(kind: SupergroupKind, s: &str, f: &str) -> Vec<(String, i64)> {
    let x = KElement::single(Basis::Euler, dg(kind, s));
    terms(&translate_euler(&x, f.parse().unwrap()).unwrap())
}

fn owned(v: &[(&str, i64)]) -> Vec<(String, i64)> {
    let mut v: Vec<(String, i64)> = v.iter().map(|(s, c)| (s.to_string(), *c)).collect();
    v.sort();
    v
}

#[test]
fn functor_text_round_trip() {
    for s in [
        "T(1/2,3/2)",
        "T(3/2,1/2)",
        "T(0,1)",
        "T(1,0)",
        "T(-2,-1)",
        "sw",
    ] {
        assert_eq!(s.parse::<Functor>().unwrap().to_string(), s);
    }
    assert_eq!(
        "T(5/2,3/2)".parse::<Functor>().unwrap(),
        Functor::Down(Pos(3))
    );
    assert!("T(1,3)".parse::<Functor>().is_err());
    assert!("X(1,2)".parse::<Functor>().is_err());
}

#[test]
fn functor_validity() {
    assert!(Functor::Up(Pos(1)).check(odd(1, 1)).is_ok());
    assert!(Functor::Up(Pos(0)).check(odd(1, 1)).is_err());
    assert!(Functor::Up(Pos(0)).check(even(1, 1)).is_ok());
    assert!(Functor::Up(Pos(-2)).check(even(1, 1)).is_err());
    assert!(Functor::Switch.check(even(1, 1)).is_err());
    assert!(Functor::Up(Pos(-4))
        .check(SupergroupKind::gl(1, 1).unwrap())
        .is_ok());
}

#[test]
fn raise_splits_gt_lt() {
    // > < at (3/2, 5/2)
    let k = odd(1, 1);
    assert_eq!(
        euler(k, "; > <", "T(3/2,5/2)"),
        owned(&[("; o x", 1), ("; x", 1)])
    );
}

#[test]
fn lower_on_lt_gt() {
    let k = odd(1, 1);
    assert_eq!(
        euler(k, "; < >", "T(5/2,3/2)"),
        owned(&[("; o x", 1), ("; x", 1)])
    );
}

#[test]
fn tail_vertex_uses_the_same_table() {
    let k = odd(1, 1);
    // > at the tail, < at 3/2
    assert_eq!(
        euler(k, ">; <", "T(1/2,3/2)"),
        owned(&[("(+) x1;", 1), ("; x", 1)])
    );
    assert_eq!(euler(k, "(+) x1;", "T(1/2,3/2)"), owned(&[("<; >", 1)]));
}

#[test]
fn even_tail_tables() {
    let k = even(1, 1);
    assert_eq!(
        euler(k, ">; <", "T(0,1)"),
        owned(&[("[+] ; x", 1), ("[-] ; x", 1)])
    );
    assert_eq!(euler(k, "[+] ; x", "T(1,0)"), owned(&[(">; <", 1)]));
    assert_eq!(euler(k, "[-] ; x", "T(1,0)"), owned(&[(">; <", 1)]));
    assert_eq!(euler(k, "[-] ; x", "T(0,1)"), owned(&[]));
    let k = even(2, 1);
    assert_eq!(euler(k, ">; > <", "T(0,1)"), owned(&[]));
    assert_eq!(
        euler(k, ">; > <", "T(1,2)"),
        owned(&[(">; o x", 1), (">; x", 1)])
    );
}

#[test]
fn switch_on_euler() {
    let k = odd(1, 1);
    assert_eq!(euler(k, "(+) x1;", "sw"), owned(&[("(+) x1;", -1)]));
    assert_eq!(euler(k, ">; <", "sw"), owned(&[]));
    assert_eq!(euler(k, "; > <", "sw"), owned(&[("; > <", 1)]));
    let x = KElement::single(Basis::Euler, dg(k, "(+) x1;"));
    let twice = translate_euler(
        &translate_euler(&x, Functor::Switch).unwrap(),
        Functor::Switch,
    )
    .unwrap();
    assert_eq!(twice, x);
}

#[test]
fn euler_rejects_tailed_labels() {
    let k = odd(2, 2);
    let x = KElement::single(Basis::Euler, dg(k, "(-) x2;"));
    assert!(matches!(
        translate_euler(&x, Functor::Switch),
        Err(Error::NotTailless(_))
    ));
}

#[test]
fn switch_on_simples_and_pims() {
    let k = odd(2, 2);
    let l = KElement::single(Basis::Simple, dg(k, "(+) x2;"));
    assert_eq!(
        terms(&switch_simple_pim(&l).unwrap()),
        owned(&[("(-) x2;", 1)])
    );
    let l = KElement::single(Basis::Simple, dg(k, "x1>; <"));
    assert!(switch_simple_pim(&l).unwrap().is_zero());
    let l = KElement::single(Basis::Pim, dg(k, "; x x"));
    assert_eq!(
        terms(&switch_simple_pim(&l).unwrap()),
        owned(&[("; x x", 1)])
    );
}

#[test]
fn simple_elementary_changes() {
    let k = odd(1, 1);
    let s = |d: &str, f: &str| terms(&translate_simple(&dg(k, d), f.parse().unwrap()).unwrap());
    assert_eq!(s("; x", "T(5/2,3/2)"), owned(&[("; > <", 1)]));
    assert_eq!(s("(+) x1;", "T(3/2,1/2)"), owned(&[(">; <", 1)]));
    let k2 = odd(3, 2);
    let s2 = |d: &str, f: &str| terms(&translate_simple(&dg(k2, d), f.parse().unwrap()).unwrap());
    assert_eq!(s2("(+) x2; o >", "T(3/2,1/2)"), owned(&[("x1>; < >", 1)]));
    assert_eq!(s2("x2>;", "T(1/2,3/2)"), owned(&[("(-) x2; >", 1)]));
}

#[test]
fn even_simple_rules() {
    let k = even(2, 1);
    let s = |d: &str, f: &str| terms(&translate_simple(&dg(k, d), f.parse().unwrap()).unwrap());
    // rule 1
    assert_eq!(s("x1>;", "T(0,1)"), owned(&[("x1; >", 1)]));
    // rule 3
    let k = even(1, 1);
    let s = |d: &str, f: &str| terms(&translate_simple(&dg(k, d), f.parse().unwrap()).unwrap());
    assert_eq!(
        s(">; o <", "T(0,1)"),
        owned(&[("[+] ; > <", 1), ("[-] ; > <", 1)])
    );
    // rule 6
    assert_eq!(s("[-] ; > <", "T(1,0)"), owned(&[(">; o <", 1)]));
}

#[test]
fn even_pim_rules() {
    let k = even(2, 1);
    let p = |d: &str, f: &str| terms(&translate_pim(&dg(k, d), f.parse().unwrap()).unwrap());
    // a'
    assert_eq!(p("x1; >", "T(1,0)"), owned(&[("x1>;", 1), (">; x", 1)]));
    let k = even(1, 1);
    let p = |d: &str, f: &str| terms(&translate_pim(&dg(k, d), f.parse().unwrap()).unwrap());
    // c'
    assert_eq!(p(">; <", "T(0,1)"), owned(&[("x1;", 1)]));
    // no > at the tail
    assert_eq!(p("[+] ; x", "T(0,1)"), owned(&[]));
}

#[test]
fn odd_pim_rules() {
    let k = odd(1, 1);
    let p = |d: &str, f: &str| terms(&translate_pim(&dg(k, d), f.parse().unwrap()).unwrap());
    assert_eq!(p(">; <", "T(1/2,3/2)"), owned(&[("(+) x1;", 1)]));
    assert_eq!(p("; > <", "T(3/2,5/2)"), owned(&[("; x", 1)]));
    assert!(matches!(
        translate_pim(&dg(k, "; x"), Functor::Up(Pos(3))),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn paths_end_at_the_input() {
    let k = odd(2, 2);
    for s in ["(+) x2;", "(-) x2;", "x1>; <", "x2<;", "; x x", "x1>; > x"] {
        let Ok(d) = WeightDiagram::parse(k, s) else {
            continue;
        };
        let path = typicalization_path(&d).unwrap();
        assert_eq!(path.seed.atypicality(), 0);
        assert_eq!(path.steps.last().unwrap().target, d);
    }
    let d = dg(odd(1, 1), "; > <");
    let path = typicalization_path(&d).unwrap();
    assert!(path.steps.is_empty());
    assert_eq!(path.seed, d);
}
