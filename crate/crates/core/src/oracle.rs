//! Independent checks: translation functors recomputed from `E(lam) (x) V`,
//! PIM decompositions replayed along typicalization paths, and the Fock
//! space intertwining relations.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::charring::{
    character_weight, dual_standard_weights, euler_character, even_denominator, odd_numerator,
    rank_mod_p, standard_weights, weyl_numerator,
};
use crate::diagrams::{first_body_pos, tail_pos, Pos, Sign, Symbol, Tail, WeightDiagram};
use crate::error::Result;
use crate::fock::{alpha, apply_e, apply_f, beta, phi, psi, sigma_basis, FockVector, Model};
use crate::functors::{translate_euler, typicalization_path, Functor};
use crate::kgroup::{Basis, KElement};
use crate::lattice::{normalize_euler, rho, Family, SupergroupKind};
use crate::pims::{pim_character, pim_decomposition};

/// Outcome of one audit.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: impl Into<String>) -> Report {
        Report {
            name: name.into(),
            ..Report::default()
        }
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        // keep the report readable on a bad run
        if !ok && self.failures.len() < 50 {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        for f in other.failures {
            if self.failures.len() < 50 {
                self.failures.push(f);
            }
        }
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} checked, {} failed",
            self.name,
            self.checked,
            self.failures.len()
        )?;
        for x in &self.failures {
            write!(f, "\n  {x}")?;
        }
        Ok(())
    }
}

/// A functor on `E(d)` computed from scratch: add the weights of `V` (of `V*`
/// for `T(a+1,a)` on GL) to the rho-shifted weight, straighten each sum with
/// the Weyl group and keep the summands in the target block. The switch
/// functor keeps the source block.
pub fn translate_euler_oracle(d: &WeightDiagram, f: Functor) -> Result<KElement> {
    let kind = d.kind();
    f.check(kind)?;
    d.require_tailless()?;
    let mut out = KElement::zero(Basis::Euler);
    let target = f.target(kind, &d.block_label());
    let eta = match (kind.family, f) {
        (Family::Gl, Functor::Down(_)) => dual_standard_weights(kind),
        _ => standard_weights(kind),
    };
    let base = d.to_weight();
    for e in eta {
        let mu = base.checked_add(&e)?;
        let Some((sign, w)) = normalize_euler(&mu) else {
            continue;
        };
        let nu = WeightDiagram::from_weight(&w)?;
        if nu.block_label().gamma == target.gamma {
            out.add_term(nu, i64::from(sign))?;
        }
    }
    Ok(out)
}

fn tail_options(kind: SupergroupKind) -> Vec<(Tail, Option<Sign>)> {
    let mut out = Vec::new();
    if kind.family == Family::Gl {
        out.push((Tail::empty(), None));
        return out;
    }
    for k in 0..=kind.m.min(kind.n) as u32 {
        for core in [None, Some(Symbol::Lt), Some(Symbol::Gt)] {
            for sign in [None, Some(Sign::Plus), Some(Sign::Minus)] {
                out.push((Tail { crosses: k, core }, sign));
            }
        }
    }
    out
}

fn fill_body(
    positions: &[Pos],
    need_a: usize,
    need_b: usize,
    body: &mut BTreeMap<Pos, Symbol>,
    emit: &mut dyn FnMut(&BTreeMap<Pos, Symbol>),
) {
    let Some((&p, rest)) = positions.split_first() else {
        if need_a == 0 && need_b == 0 {
            emit(body);
        }
        return;
    };
    if need_a + need_b > 2 * (rest.len() + 1) {
        return;
    }
    fill_body(rest, need_a, need_b, body, emit);
    for (s, da, db) in [
        (Symbol::Gt, 1, 0),
        (Symbol::Lt, 0, 1),
        (Symbol::Cross, 1, 1),
    ] {
        if need_a >= da && need_b >= db {
            body.insert(p, s);
            fill_body(rest, need_a - da, need_b - db, body, emit);
            body.remove(&p);
        }
    }
}

/// Positions a window of `count` vertices covers: the tail vertex and the
/// next `count - 1` for osp, `0, 1, ..` for gl.
pub fn window_positions(kind: SupergroupKind, count: usize) -> Vec<Pos> {
    let start = tail_pos(kind).unwrap_or(Pos(0));
    (0..count as i64).map(|i| Pos(start.0 + 2 * i)).collect()
}

/// Every dominant diagram supported on a window of `count` vertices.
pub fn dominant_window(kind: SupergroupKind, count: usize) -> Vec<WeightDiagram> {
    let positions = window_positions(kind, count);
    let body_positions: Vec<Pos> = match first_body_pos(kind) {
        Some(f) => positions.iter().copied().filter(|p| *p >= f).collect(),
        None => positions,
    };
    if kind.is_osp() && count == 0 {
        return Vec::new();
    }
    let mut out = BTreeSet::new();
    for (tail, sign) in tail_options(kind) {
        let k = tail.crosses as usize;
        let ta = k + usize::from(tail.core == Some(Symbol::Gt));
        let tb = k + usize::from(tail.core == Some(Symbol::Lt));
        let (Some(na), Some(nb)) = (kind.m.checked_sub(ta), kind.n.checked_sub(tb)) else {
            continue;
        };
        let mut body = BTreeMap::new();
        fill_body(&body_positions, na, nb, &mut body, &mut |b| {
            if let Ok(d) = WeightDiagram::new(kind, tail, b.clone(), sign) {
                out.insert(d);
            }
        });
    }
    out.into_iter().collect()
}

/// The tailless diagrams, the labels of Euler characteristics, in a window.
pub fn tailless_window(kind: SupergroupKind, count: usize) -> Vec<WeightDiagram> {
    dominant_window(kind, count)
        .into_iter()
        .filter(|d| {
            d.is_tailless() && !(kind.family == Family::OspOdd && d.sign() == Some(Sign::Minus))
        })
        .collect()
}

/// Translation functors whose pair of vertices meets the window.
pub fn window_functors(kind: SupergroupKind, count: usize) -> Vec<Functor> {
    let mut out = Vec::new();
    let positions = window_positions(kind, count);
    let mut left: Vec<Pos> = positions.clone();
    if kind.family == Family::Gl {
        if let Some(p) = positions.first() {
            left.insert(0, p.prev());
        }
    }
    for a in left {
        if Functor::Up(a).check(kind).is_ok() {
            out.push(Functor::Up(a));
            out.push(Functor::Down(a));
        }
    }
    if kind.family == Family::OspOdd {
        out.push(Functor::Switch);
    }
    out
}

/// Compares the two-vertex tables with the tensor product oracle on every
/// Euler label and functor of a window.
pub fn verify_functor_tables(kind: SupergroupKind, count: usize) -> Result<Report> {
    let mut r = Report::new(format!("functor tables {kind}, {count} vertices"));
    let functors = window_functors(kind, count);
    for d in tailless_window(kind, count) {
        let x = KElement::single(Basis::Euler, d.clone());
        for &f in &functors {
            let table = translate_euler(&x, f)?;
            let oracle = translate_euler_oracle(&d, f)?;
            r.record(table == oracle, || {
                format!("{f} E({d}): table {table:?} oracle {oracle:?}")
            });
        }
    }
    Ok(r)
}

/// `[P(d)]` rebuilt as `T(P(prev)) - P(minus)` along a typicalization path.
pub fn replay_decomposition(d: &WeightDiagram) -> Result<KElement> {
    replay_memo(d, &mut HashMap::new())
}

fn replay_memo(d: &WeightDiagram, memo: &mut HashMap<WeightDiagram, KElement>) -> Result<KElement> {
    if let Some(x) = memo.get(d) {
        return Ok(x.clone());
    }
    let path = typicalization_path(d)?;
    let mut x = KElement::single(Basis::Euler, path.seed.clone());
    for step in &path.steps {
        x = translate_euler(&x, step.functor)?;
        if let Some(m) = &step.minus {
            x = x.sub(&replay_memo(m, memo)?)?;
        }
        memo.insert(step.target.clone(), x.clone());
    }
    Ok(x)
}

/// Closed-form decompositions against their replays on every dominant
/// diagram of a window.
pub fn verify_replay(kind: SupergroupKind, count: usize) -> Result<Report> {
    let mut r = Report::new(format!("replay {kind}, {count} vertices"));
    let mut memo = HashMap::new();
    for d in dominant_window(kind, count) {
        let closed = pim_decomposition(&d)?.terms;
        let replay = replay_memo(&d, &mut memo)?;
        r.record(closed == replay, || {
            format!("P({d}): closed {closed} replay {replay}")
        });
    }
    Ok(r)
}

/// Exponent of `e^lam` for the highest weight of a diagram.
pub fn highest_exponent(d: &WeightDiagram) -> Vec<i64> {
    let w = d.to_weight();
    let r = rho(d.kind());
    w.coords()
        .iter()
        .zip(r.coords())
        .map(|(x, y)| x - y)
        .collect()
}

/// Character identities on a window: `D0 ch E = D1 N` for every Euler label,
/// PIM characters nonnegative with the highest weight present, and both
/// families of characters linearly independent.
pub fn verify_characters(kind: SupergroupKind, count: usize) -> Result<Report> {
    let mut r = Report::new(format!("characters {kind}, {count} vertices"));
    let d0 = even_denominator(kind)?;
    let d1 = odd_numerator(kind)?;
    let labels = tailless_window(kind, count);
    let mut euler = Vec::new();
    for d in &labels {
        let ch = euler_character(d)?;
        let lhs = d0.mul(&ch)?;
        let rhs = d1.mul(&weyl_numerator(&character_weight(d)?)?)?;
        r.record(lhs == rhs, || format!("D0 ch E({d}) != D1 N"));
        euler.push(ch);
    }
    let rank = rank_mod_p(&euler);
    r.record(rank == euler.len(), || {
        format!("Euler characters of rank {rank} < {}", euler.len())
    });
    let mut pims = Vec::new();
    for d in dominant_window(kind, count) {
        let ch = pim_character(&d)?;
        let lam = highest_exponent(&d);
        let nonneg = ch.iter().all(|(_, c)| *c >= 0);
        r.record(nonneg && ch.coeff(&lam) >= 1, || {
            format!("ch P({d}) = {ch}")
        });
        pims.push(ch);
    }
    let rank = rank_mod_p(&pims);
    r.record(rank == pims.len(), || {
        format!("PIM characters of rank {rank} < {}", pims.len())
    });
    Ok(r)
}

fn e_indices(f: Functor) -> Option<(i64, i64)> {
    match f {
        Functor::Up(a) => Some((a.0, a.0 + 2)),
        Functor::Down(a) => Some((a.0 + 2, a.0)),
        Functor::Switch => None,
    }
}

/// `phi T = E phi` on SOSP(2m+1|2n) and `psi T = F psi` on SOSP(2m|2n).
pub fn verify_commuting_squares(kind: SupergroupKind, count: usize) -> Result<Report> {
    let mut r = Report::new(format!("commuting squares {kind}, {count} vertices"));
    let functors: Vec<Functor> = window_functors(kind, count)
        .into_iter()
        .filter(|f| *f != Functor::Switch)
        .collect();
    for d in tailless_window(kind, count) {
        match kind.family {
            Family::OspOdd => {
                let x = KElement::single(Basis::Euler, d.clone());
                let v = phi(&x)?;
                for &f in &functors {
                    let (i, j) = e_indices(f).expect("translation");
                    let lhs = phi(&translate_euler(&x, f)?)?;
                    let rhs = apply_e(i, j, &v)?;
                    r.record(lhs == rhs, || {
                        format!("phi {f} E({d}) = {lhs}, E phi = {rhs}")
                    });
                }
            }
            Family::OspEven => {
                if d.sign() == Some(Sign::Minus) {
                    continue;
                }
                for which in [Sign::Plus, Sign::Minus] {
                    if which == Sign::Minus && d.sign().is_none() {
                        continue;
                    }
                    let x = sigma_basis(which, &d)?;
                    let v = psi(which, &x)?;
                    for &f in &functors {
                        let (i, j) = e_indices(f).expect("translation");
                        if which == Sign::Minus && (i == 0 || j == 0) {
                            continue;
                        }
                        let lhs = psi(which, &translate_euler(&x, f)?)?;
                        let rhs = apply_f(i, j, &v)?;
                        r.record(lhs == rhs, || {
                            format!("psi{} {f} E({d}) = {lhs}, F psi = {rhs}", which.as_char())
                        });
                    }
                }
            }
            Family::Gl => {}
        }
    }
    Ok(r)
}

/// The odd functor matching an even one under `alpha` and `beta`, with its factor.
pub fn rel1_partner(f: Functor) -> Option<(Functor, i64)> {
    match f {
        Functor::Up(a) => Some((Functor::Up(Pos(a.0 + 1)), 1)),
        Functor::Down(Pos(0)) => Some((Functor::Down(Pos(1)), 2)),
        Functor::Down(a) => Some((Functor::Down(Pos(a.0 + 1)), 1)),
        Functor::Switch => None,
    }
}

/// `psi+ T E = c alpha T' beta psi+ E` for SOSP(2m|2n) labels.
pub fn verify_rel1(kind: SupergroupKind, count: usize) -> Result<Report> {
    let mut r = Report::new(format!("alpha/beta relation {kind}, {count} vertices"));
    if kind.family != Family::OspEven {
        return Ok(r);
    }
    let functors = window_functors(kind, count);
    for d in tailless_window(kind, count) {
        if d.sign() == Some(Sign::Minus) {
            continue;
        }
        let x = sigma_basis(Sign::Plus, &d)?;
        let v = psi(Sign::Plus, &x)?;
        let b = beta(&v)?;
        for &f in &functors {
            let (g, c) = rel1_partner(f).expect("translation");
            let (i, j) = e_indices(g).expect("translation");
            let lhs = psi(Sign::Plus, &translate_euler(&x, f)?)?;
            let rhs = alpha(&apply_e(i, j, &b)?)?.scale(c)?;
            r.record(lhs == rhs, || {
                format!("{f} on E({d}): {lhs} vs {c} alpha {g} beta: {rhs}")
            });
        }
    }
    Ok(r)
}

fn random_vector(rng: &mut StdRng, model: Model, top: i64) -> Result<FockVector> {
    let (starred, unstarred): (Vec<i64>, Vec<i64>) = match model {
        Model::Odd => (
            (1..=top).step_by(2).collect(),
            (1..=top).step_by(2).collect(),
        ),
        Model::EvenPlus => (
            (-top..=0).step_by(2).collect(),
            (2..=top).step_by(2).collect(),
        ),
        Model::EvenMinus => (
            (-top..0).step_by(2).collect(),
            (2..=top).step_by(2).collect(),
        ),
    };
    let m = rng.random_range(1..=3);
    let n = rng.random_range(1..=3);
    let mut x = FockVector::zero(model);
    for _ in 0..rng.random_range(1..=4) {
        let s: Vec<i64> = starred.choose_multiple(rng, m).copied().collect();
        let u: Vec<i64> = unstarred.choose_multiple(rng, n).copied().collect();
        let c = rng.random_range(-3..=3);
        x.add_wedge(s, u, c)?;
    }
    Ok(x)
}

type Op<'a> = &'a dyn Fn(&FockVector) -> Result<FockVector>;

/// `[a, [a, b]] x`.
fn double_commutator(a: Op, b: Op, x: &FockVector) -> Result<FockVector> {
    let ab = |y: &FockVector| -> Result<FockVector> { a(&b(y)?)?.sub(&b(&a(y)?)?) };
    a(&ab(x)?)?.sub(&ab(&a(x)?)?)
}

/// Serre relations between neighbouring generators on random vectors.
pub fn verify_serre(seed: u64, samples: usize) -> Result<Report> {
    let mut r = Report::new(format!("Serre relations, seed {seed}"));
    let mut rng = StdRng::seed_from_u64(seed);
    const TOP: i64 = 13;
    for _ in 0..samples {
        let odd = rng.random_bool(0.5);
        let (model, a) = if odd {
            (Model::Odd, 2 * rng.random_range(0..5) + 1)
        } else {
            (
                if rng.random_bool(0.5) {
                    Model::EvenPlus
                } else {
                    Model::EvenMinus
                },
                2 * rng.random_range(0..5),
            )
        };
        let x = random_vector(&mut rng, model, TOP)?;
        let b = a + 2;
        let gen = |i: i64, j: i64| -> Box<dyn Fn(&FockVector) -> Result<FockVector>> {
            if odd {
                Box::new(move |y| apply_e(i, j, y))
            } else {
                Box::new(move |y| apply_f(i, j, y))
            }
        };
        if model == Model::EvenMinus && a == 0 {
            continue;
        }
        let (ea, eb) = (gen(a, a + 2), gen(b, b + 2));
        let (fa, fb) = (gen(a + 2, a), gen(b + 2, b));
        for (p, q, name) in [
            (&ea, &eb, "e"),
            (&eb, &ea, "e'"),
            (&fa, &fb, "f"),
            (&fb, &fa, "f'"),
        ] {
            let z = double_commutator(p.as_ref(), q.as_ref(), &x)?;
            r.record(z.is_zero(), || format!("{name} at {a} on {x}: {z}"));
        }
        // generators at distance two commute
        let (p, q) = (gen(a, a + 2), gen(a + 4, a + 6));
        let z = p(&q(&x)?)?.sub(&q(&p(&x)?)?)?;
        r.record(z.is_zero(), || format!("far commutator at {a} on {x}: {z}"));
    }
    Ok(r)
}

/// A reference decomposition.
#[derive(Clone, Debug)]
pub struct Golden {
    pub kind: SupergroupKind,
    pub source: &'static str,
    pub terms: &'static [(&'static str, i64)],
}

/// Decompositions worked out by hand for small groups.
pub fn golden_decompositions() -> Vec<Golden> {
    let odd = |m, n| SupergroupKind::osp_odd(m, n).expect("valid");
    let even = |m, n| SupergroupKind::osp_even(m, n).expect("valid");
    let g = |kind, source, terms| Golden {
        kind,
        source,
        terms,
    };
    vec![
        g(
            odd(3, 3),
            "; o x > < x",
            &[
                ("; o x > < x", 1),
                ("; o x > < o x", 1),
                ("; o o > < x o x", 1),
                ("; o o > < o x x", 1),
            ],
        ),
        g(
            odd(3, 3),
            "; o x x o x",
            &[
                ("; o x x o x", 1),
                ("; o x o x x", 1),
                ("; o x x o o x", 1),
                ("; o x o x o x", 1),
                ("; o o x o x o x", 1),
                ("; o o o x x o x", 1),
                ("; o o x o o x x", 1),
                ("; o o o x o x x", 1),
            ],
        ),
        g(odd(2, 2), "x1>; <", &[(">; < x", -1), (">; < o x", 1)]),
        g(
            odd(2, 2),
            "(+) x2;",
            &[
                ("(+) x1; o x", -1),
                ("; x x", -1),
                ("(+) x1; o o x", 1),
                ("; x o x", 1),
            ],
        ),
        g(
            odd(2, 2),
            "(-) x2;",
            &[
                ("(+) x1; o x", 1),
                ("; x x", -1),
                ("(+) x1; o o x", -1),
                ("; x o x", 1),
            ],
        ),
        g(even(2, 1), ">; > <", &[(">; > <", 1)]),
        g(even(2, 1), ">; x", &[(">; x", 1), (">; o x", 1)]),
        g(even(2, 1), ">; < >", &[(">; < >", 1)]),
        g(even(2, 1), "x1; o >", &[("[+] ; x >", 1), ("[-] ; x >", 1)]),
        g(even(2, 1), "x1; >", &[("[+] ; > x", 1), ("[-] ; > x", 1)]),
        g(even(2, 1), "x1>;", &[(">; x", -1), (">; o x", 1)]),
        g(
            even(2, 2),
            "x2;",
            &[
                ("[+] ; x x", -1),
                ("[-] ; x x", -1),
                ("[+] ; x o x", 1),
                ("[-] ; x o x", 1),
            ],
        ),
    ]
}

pub fn verify_goldens() -> Result<Report> {
    let mut r = Report::new("reference decompositions");
    for g in golden_decompositions() {
        let d = WeightDiagram::parse(g.kind, g.source)?;
        let got = pim_decomposition(&d)?.terms;
        let mut want = KElement::zero(Basis::Euler);
        for (s, c) in g.terms {
            want.add_term(WeightDiagram::parse(g.kind, s)?, *c)?;
        }
        r.record(got == want, || {
            format!("{}: P({}) = {got}, expected {want}", g.kind, g.source)
        });
    }
    Ok(r)
}

/// Replay, the reference decompositions of this group, and for ranks up to
/// four the nonnegativity of PIM characters.
pub fn verify_pims(kind: SupergroupKind, count: usize) -> Result<Report> {
    let mut r = verify_replay(kind, count)?;
    r.name = format!("PIMs {kind}, {count} vertices");
    let mut g = verify_goldens()?;
    g.failures.retain(|f| f.contains(&kind.to_string()));
    r.merge(g);
    if kind.rank() <= 4 {
        for d in dominant_window(kind, count) {
            let ch = pim_character(&d)?;
            let ok = ch.iter().all(|(_, c)| *c >= 0) && ch.coeff(&highest_exponent(&d)) >= 1;
            r.record(ok, || format!("ch P({d}) = {ch}"));
        }
    }
    Ok(r)
}

/// Everything the `verify` command runs for one group.
pub fn verify_all(kind: SupergroupKind, count: usize, seed: u64) -> Result<Vec<Report>> {
    let mut out = vec![verify_functor_tables(kind, count)?];
    if kind.is_osp() {
        out.push(verify_pims(kind, count)?);
        let mut sq = verify_commuting_squares(kind, count)?;
        if kind.family == Family::OspEven {
            sq.merge(verify_rel1(kind, count)?);
        }
        out.push(sq);
    }
    out.push(verify_serre(seed, 100)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_counts() {
        // gl(1|1): one cross or a > and a < at distinct vertices
        let k = SupergroupKind::gl(1, 1).unwrap();
        assert_eq!(dominant_window(k, 3).len(), 3 + 6);
        let k = SupergroupKind::osp_odd(1, 1).unwrap();
        let w = tailless_window(k, 2);
        assert!(w.iter().all(|d| d.is_tailless()));
        assert!(w.iter().any(|d| d.to_string() == "(+) x1;"));
        assert!(!w.iter().any(|d| d.to_string() == "(-) x1;"));
    }

    #[test]
    fn oracle_matches_a_hand_case() {
        let k = SupergroupKind::osp_odd(1, 1).unwrap();
        let d = WeightDiagram::parse(k, "; > <").unwrap();
        let got = translate_euler_oracle(&d, Functor::Up(Pos(3))).unwrap();
        assert_eq!(
            got.sorted_terms(),
            vec![("; o x".to_string(), 1), ("; x".to_string(), 1)]
        );
    }

    #[test]
    fn small_audits() {
        for kind in [
            SupergroupKind::gl(2, 1).unwrap(),
            SupergroupKind::osp_odd(2, 1).unwrap(),
            SupergroupKind::osp_even(2, 1).unwrap(),
        ] {
            for rep in verify_all(kind, 5, 7).unwrap() {
                assert!(rep.is_ok(), "{rep}");
            }
        }
    }
}
