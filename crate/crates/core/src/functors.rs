//! Translation functors `T(a,a+1)`, `T(a+1,a)` and the switch functor, acting
//! on Euler characteristics by local two-vertex tables, on simple modules and
//! PIMs by elementary changes, and the reduction of a weight to a typical one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::{
    first_body_pos, tail_pos, BlockLabel, Cell, Pos, Sign, Symbol, Tail, WeightDiagram,
};
use crate::error::{Error, Result};
use crate::kgroup::{Basis, KElement};
use crate::lattice::{fmt_half, parse_half, Family, SupergroupKind};

use Symbol::{Cross as X, Gt, Lt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Functor {
    /// `T(a,a+1)`.
    Up(Pos),
    /// `T(a+1,a)`.
    Down(Pos),
    Switch,
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Functor::Up(a) => write!(f, "T({},{})", fmt_half(a.0), fmt_half(a.0 + 2)),
            Functor::Down(a) => write!(f, "T({},{})", fmt_half(a.0 + 2), fmt_half(a.0)),
            Functor::Switch => f.write_str("sw"),
        }
    }
}

impl std::str::FromStr for Functor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Functor> {
        let t = s.trim();
        if t == "sw" {
            return Ok(Functor::Switch);
        }
        let inner = t
            .strip_prefix("T(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, format!("expected `T(a,b)` or `sw`, got `{t}`")))?;
        let (x, y) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(2, "missing `,`"))?;
        let (x, y) = (parse_half(x.trim())?, parse_half(y.trim())?);
        match y - x {
            2 => Ok(Functor::Up(Pos(x))),
            -2 => Ok(Functor::Down(Pos(y))),
            _ => Err(Error::parse(2, "the two indices must be adjacent")),
        }
    }
}

impl Functor {
    pub fn adjoint(self) -> Functor {
        match self {
            Functor::Up(a) => Functor::Down(a),
            Functor::Down(a) => Functor::Up(a),
            Functor::Switch => Functor::Switch,
        }
    }

    /// Left vertex of the pair the functor acts on.
    pub fn left(self) -> Option<Pos> {
        match self {
            Functor::Up(a) | Functor::Down(a) => Some(a),
            Functor::Switch => None,
        }
    }

    pub fn check(self, kind: SupergroupKind) -> Result<()> {
        let bad = |m: &str| Err(Error::Unsupported(format!("{self} for {kind}: {m}")));
        match (self.left(), kind.family) {
            (None, Family::OspOdd) => Ok(()),
            (None, _) => bad("the switch functor is defined for SOSP(2m+1|2n)"),
            (Some(a), _) => {
                if a.0.rem_euclid(2) != kind.coordinate_parity() {
                    return bad("index off the vertex lattice");
                }
                match tail_pos(kind) {
                    Some(t) if a < t => bad("index left of the tail"),
                    _ => Ok(()),
                }
            }
        }
    }

    /// Block weight reached from `gamma`.
    pub fn target(self, kind: SupergroupKind, gamma: &BlockLabel) -> BlockLabel {
        let out = match self {
            Functor::Up(a) => gamma.shifted(a, 1).shifted(a.next(), -1),
            Functor::Down(a) => gamma.shifted(a, -1).shifted(a.next(), 1),
            Functor::Switch => BlockLabel {
                gamma: gamma.gamma.clone(),
                bracket: None,
            },
        };
        if kind.family == Family::OspEven {
            let mut g = out.gamma;
            g.remove(&Pos(0));
            BlockLabel {
                gamma: g,
                bracket: None,
            }
        } else {
            out
        }
    }

    /// Atypicality of the target block, `None` when it holds no weights.
    fn target_atypicality(self, d: &WeightDiagram) -> Option<u32> {
        self.target(d.kind(), &d.block_label())
            .atypicality(d.kind())
    }
}

type Pair = (Cell, Cell);

/// `T(a,a+1)` on the pair at `(a, a+1)` of an Euler label.
fn raise_table(p: Pair) -> Vec<Pair> {
    match p {
        (None, Some(Lt)) => vec![(Some(Lt), None)],
        (None, Some(X)) => vec![(Some(Lt), Some(Gt))],
        (Some(Gt), None) => vec![(None, Some(Gt))],
        (Some(Gt), Some(Lt)) => vec![(None, Some(X)), (Some(X), None)],
        (Some(Gt), Some(X)) => vec![(Some(X), Some(Gt))],
        (Some(X), None) => vec![(Some(Lt), Some(Gt))],
        (Some(X), Some(Lt)) => vec![(Some(Lt), Some(X))],
        (None, None | Some(Gt))
        | (Some(Lt), _)
        | (Some(Gt), Some(Gt))
        | (Some(X), Some(Gt) | Some(X)) => vec![],
    }
}

/// `T(a+1,a)` on the pair at `(a, a+1)` of an Euler label.
fn lower_table(p: Pair) -> Vec<Pair> {
    match p {
        (None, Some(Gt)) => vec![(Some(Gt), None)],
        (None, Some(X)) => vec![(Some(Gt), Some(Lt))],
        (Some(Lt), None) => vec![(None, Some(Lt))],
        (Some(Lt), Some(Gt)) => vec![(None, Some(X)), (Some(X), None)],
        (Some(Lt), Some(X)) => vec![(Some(X), Some(Lt))],
        (Some(X), None) => vec![(Some(Gt), Some(Lt))],
        (Some(X), Some(Gt)) => vec![(Some(Gt), Some(X))],
        (None, None | Some(Lt))
        | (Some(Lt), Some(Lt))
        | (Some(Gt), _)
        | (Some(X), Some(Lt) | Some(X)) => vec![],
    }
}

/// Even `T(0,1)` on (tail, vertex 1). Outputs carry a bracket when the tail empties.
fn even_raise_table(p: Pair) -> Vec<(Pair, Option<Sign>)> {
    let both = |c1| {
        vec![
            ((None, c1), Some(Sign::Plus)),
            ((None, c1), Some(Sign::Minus)),
        ]
    };
    match p {
        (Some(Gt), Some(Lt)) => both(Some(X)),
        (Some(Gt), None) => both(Some(Gt)),
        (None, _) | (Some(Gt), Some(Gt) | Some(X)) => vec![],
        (Some(Lt | X), _) => unreachable!("tailless even labels hold ∘ or > at the tail"),
    }
}

/// Even `T(1,0)` on (tail, vertex 1).
fn even_lower_table(p: Pair) -> Vec<(Pair, Option<Sign>)> {
    match p {
        (None, Some(Gt)) => vec![((Some(Gt), None), None)],
        (None, Some(X)) => vec![((Some(Gt), Some(Lt)), None)],
        (None, None | Some(Lt)) | (Some(Gt), _) => vec![],
        (Some(Lt | X), _) => unreachable!("tailless even labels hold ∘ or > at the tail"),
    }
}

fn translate_label(d: &WeightDiagram, f: Functor) -> Result<KElement> {
    f.check(d.kind())?;
    d.require_tailless()?;
    let kind = d.kind();
    let mut out = KElement::zero(Basis::Euler);
    let a = match f {
        Functor::Switch => {
            let c = match (d.tail().crosses, d.tail().core) {
                (0, None) => 1,
                (_, None) => -1,
                (_, Some(_)) => 0,
            };
            out.add_term(d.clone(), c)?;
            return Ok(out);
        }
        Functor::Up(a) | Functor::Down(a) => a,
    };
    let pair = (d.cell(a)?, d.cell(a.next())?);
    let outputs: Vec<(Pair, Option<Sign>)> =
        match (f, kind.family == Family::OspEven && a == Pos(0)) {
            (Functor::Up(_), false) => raise_table(pair).into_iter().map(|p| (p, None)).collect(),
            (Functor::Down(_), false) => lower_table(pair).into_iter().map(|p| (p, None)).collect(),
            (Functor::Up(_), true) => even_raise_table(pair),
            (Functor::Down(_), true) => even_lower_table(pair),
            (Functor::Switch, _) => unreachable!(),
        };
    for ((c0, c1), bracket) in outputs {
        out.add_term(d.edit(&[(a, c0), (a.next(), c1)], bracket)?, 1)?;
    }
    Ok(out)
}

/// Applies a functor to a combination of Euler characteristics.
pub fn translate_euler(x: &KElement, f: Functor) -> Result<KElement> {
    if x.basis != Basis::Euler {
        return Err(Error::Unsupported(
            "translate_euler takes the Euler basis".into(),
        ));
    }
    x.map_linear(Basis::Euler, |d| translate_label(d, f))
}

/// The switch functor on simple modules or PIMs of SOSP(2m+1|2n).
pub fn switch_simple_pim(x: &KElement) -> Result<KElement> {
    if x.basis == Basis::Euler {
        return Err(Error::Unsupported(
            "use translate_euler for Euler characteristics".into(),
        ));
    }
    x.map_linear(x.basis, |d| {
        Functor::Switch.check(d.kind())?;
        let tail = d.tail();
        let img = match (tail.crosses, tail.core) {
            (0, None) => Some(d.clone()),
            (_, Some(_)) => None,
            (_, None) => Some(WeightDiagram::new(
                d.kind(),
                tail,
                d.body().clone(),
                d.sign().map(Sign::flip),
            )?),
        };
        Ok(img.map_or(KElement::zero(x.basis), |d| KElement::single(x.basis, d)))
    })
}

/// Rewrites the tail and the first body vertex.
fn with_tail_pair(
    d: &WeightDiagram,
    tail: Tail,
    sign: Option<Sign>,
    c1: Cell,
) -> Result<WeightDiagram> {
    let p1 = first_body_pos(d.kind()).expect("tailed kinds only");
    let mut body = d.body().clone();
    match c1 {
        Some(s) => body.insert(p1, s),
        None => body.remove(&p1),
    };
    WeightDiagram::new(d.kind(), tail, body, sign)
}

fn tail(crosses: u32, core: Option<Symbol>) -> Tail {
    Tail { crosses, core }
}

/// `(-)` in front of an all-cross tail, nothing in front of an empty one.
fn minus_if(k: u32) -> Option<Sign> {
    (k > 0).then_some(Sign::Minus)
}

fn unsupported(d: &WeightDiagram, f: Functor, what: &str) -> Error {
    Error::Unsupported(format!("{f} on {what} {d}"))
}

/// Non-tail elementary changes on the pair `(a, a+1)`.
fn pair_change(d: &WeightDiagram, f: Functor, basis: Basis) -> Result<Option<WeightDiagram>> {
    let a = f.left().expect("pair functor");
    let pair = (d.cell(a)?, d.cell(a.next())?);
    let new = match (basis, f, pair) {
        (Basis::Simple, Functor::Down(_), (Some(X), None)) => (Some(Gt), Some(Lt)),
        (Basis::Pim, Functor::Up(_), (Some(Gt), Some(Lt))) => (Some(X), None),
        (_, Functor::Down(_), (Some(Lt), None)) => (None, Some(Lt)),
        (_, Functor::Down(_), (None, Some(Gt))) => (Some(Gt), None),
        (_, Functor::Up(_), (None, Some(Lt))) => (Some(Lt), None),
        (_, Functor::Up(_), (Some(Gt), None)) => (None, Some(Gt)),
        _ => return Ok(None),
    };
    Ok(Some(d.edit(&[(a, new.0), (a.next(), new.1)], None)?))
}

fn is_tail_pair(kind: SupergroupKind, a: Pos) -> bool {
    tail_pos(kind) == Some(a)
}

/// Image of a simple module under an elementary change.
pub fn translate_simple(d: &WeightDiagram, f: Functor) -> Result<KElement> {
    let kind = d.kind();
    f.check(kind)?;
    let zero = KElement::zero(Basis::Simple);
    if f == Functor::Switch {
        return switch_simple_pim(&KElement::single(Basis::Simple, d.clone()));
    }
    let Some(target_at) = f.target_atypicality(d) else {
        return Ok(zero);
    };
    if d.atypicality() < target_at {
        return Err(unsupported(
            d,
            f,
            "a simple module whose atypicality is below the target block's:",
        ));
    }
    let a = f.left().expect("pair functor");
    let one = |w: WeightDiagram| Ok(KElement::single(Basis::Simple, w));
    if !is_tail_pair(kind, a) {
        return match pair_change(d, f, Basis::Simple)? {
            Some(w) => one(w),
            None => Err(unsupported(d, f, "simple module")),
        };
    }
    let t = d.tail();
    let c1 = d.cell(a.next())?;
    let (k, core, sign) = (t.crosses, t.core, d.sign());
    if kind.family == Family::OspOdd {
        let img = match (f, k, core, sign, c1) {
            // at
            (Functor::Down(_), 1.., None, Some(Sign::Plus), None) => {
                with_tail_pair(d, tail(k - 1, Some(Gt)), None, Some(Lt))?
            }
            // bt inverse
            (Functor::Down(_), 1.., None, Some(Sign::Minus), Some(Gt))
            | (Functor::Down(_), 0, None, None, Some(Gt)) => {
                with_tail_pair(d, tail(k, Some(Gt)), None, None)?
            }
            // ct
            (Functor::Down(_), _, Some(Lt), None, None) => {
                with_tail_pair(d, tail(k, None), minus_if(k), Some(Lt))?
            }
            // bt
            (Functor::Up(_), _, Some(Gt), None, None) => {
                with_tail_pair(d, tail(k, None), minus_if(k), Some(Gt))?
            }
            // ct inverse
            (Functor::Up(_), 1.., None, Some(Sign::Minus), Some(Lt))
            | (Functor::Up(_), 0, None, None, Some(Lt)) => {
                with_tail_pair(d, tail(k, Some(Lt)), None, None)?
            }
            _ => return Err(unsupported(d, f, "simple module")),
        };
        return one(img);
    }
    // even family, T(0,1) and T(1,0)
    match f {
        Functor::Up(_) => {
            if core != Some(Gt) {
                return Ok(zero);
            }
            match (k, c1) {
                (1.., None) => one(with_tail_pair(d, tail(k, None), None, Some(Gt))?),
                (_, Some(X)) => one(with_tail_pair(d, tail(k + 1, None), None, Some(Gt))?),
                (0, None) => both_brackets(d, Some(Gt), Basis::Simple),
                _ => Err(unsupported(d, f, "simple module")),
            }
        }
        Functor::Down(_) => {
            if core == Some(Gt) || matches!(c1, Some(Lt) | Some(X)) {
                return Ok(zero);
            }
            match (k, c1) {
                (1.., None) => one(with_tail_pair(d, tail(k - 1, Some(Gt)), None, Some(Lt))?),
                (_, Some(Gt)) => one(with_tail_pair(d, tail(k, Some(Gt)), None, None)?),
                _ => Err(unsupported(d, f, "simple module")),
            }
        }
        Functor::Switch => unreachable!(),
    }
}

fn both_brackets(d: &WeightDiagram, c1: Cell, basis: Basis) -> Result<KElement> {
    let mut out = KElement::zero(basis);
    for s in [Sign::Plus, Sign::Minus] {
        out.add_term(with_tail_pair(d, tail(0, None), Some(s), c1)?, 1)?;
    }
    Ok(out)
}

/// Image of a PIM under an elementary change.
pub fn translate_pim(d: &WeightDiagram, f: Functor) -> Result<KElement> {
    let kind = d.kind();
    f.check(kind)?;
    let zero = KElement::zero(Basis::Pim);
    if f == Functor::Switch {
        return switch_simple_pim(&KElement::single(Basis::Pim, d.clone()));
    }
    let Some(target_at) = f.target_atypicality(d) else {
        return Ok(zero);
    };
    if d.atypicality() > target_at {
        return Err(unsupported(
            d,
            f,
            "a PIM whose atypicality exceeds the target block's:",
        ));
    }
    let a = f.left().expect("pair functor");
    let one = |w: WeightDiagram| Ok(KElement::single(Basis::Pim, w));
    if !is_tail_pair(kind, a) {
        return match pair_change(d, f, Basis::Pim)? {
            Some(w) => one(w),
            None => Err(unsupported(d, f, "PIM")),
        };
    }
    let t = d.tail();
    let c1 = d.cell(a.next())?;
    let (k, core, sign) = (t.crosses, t.core, d.sign());
    if kind.family == Family::OspOdd {
        let img = match (f, k, core, sign, c1) {
            // at'
            (Functor::Up(_), _, Some(Gt), None, Some(Lt)) => {
                with_tail_pair(d, tail(k + 1, None), Some(Sign::Plus), None)?
            }
            // bt
            (Functor::Up(_), _, Some(Gt), None, None) => {
                with_tail_pair(d, tail(k, None), minus_if(k), Some(Gt))?
            }
            // ct inverse
            (Functor::Up(_), 1.., None, Some(Sign::Minus), Some(Lt))
            | (Functor::Up(_), 0, None, None, Some(Lt)) => {
                with_tail_pair(d, tail(k, Some(Lt)), None, None)?
            }
            // bt inverse
            (Functor::Down(_), 1.., None, Some(Sign::Minus), Some(Gt))
            | (Functor::Down(_), 0, None, None, Some(Gt)) => {
                with_tail_pair(d, tail(k, Some(Gt)), None, None)?
            }
            // ct
            (Functor::Down(_), _, Some(Lt), None, None) => {
                with_tail_pair(d, tail(k, None), minus_if(k), Some(Lt))?
            }
            _ => return Err(unsupported(d, f, "PIM")),
        };
        return one(img);
    }
    match f {
        Functor::Down(_) => {
            if core == Some(Gt) {
                return Ok(zero);
            }
            match (k, c1) {
                (1.., Some(Gt)) => KElement::from_terms(
                    Basis::Pim,
                    [
                        (with_tail_pair(d, tail(k, Some(Gt)), None, None)?, 1),
                        (with_tail_pair(d, tail(k - 1, Some(Gt)), None, Some(X))?, 1),
                    ],
                ),
                (0, Some(Gt)) => one(with_tail_pair(d, tail(0, Some(Gt)), None, None)?),
                _ => Err(unsupported(d, f, "PIM")),
            }
        }
        Functor::Up(_) => {
            if core != Some(Gt) {
                return Ok(zero);
            }
            match (k, c1) {
                (_, Some(Lt)) => one(with_tail_pair(d, tail(k + 1, None), None, None)?),
                (1.., None) => one(with_tail_pair(d, tail(k, None), None, Some(Gt))?),
                (0, None) => both_brackets(d, Some(Gt), Basis::Pim),
                _ => Err(unsupported(d, f, "PIM")),
            }
        }
        Functor::Switch => unreachable!(),
    }
}

/// One step `P(target) = F(P(previous)) - P(minus)` of a typicalization path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub functor: Functor,
    pub target: WeightDiagram,
    pub minus: Option<WeightDiagram>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypicalizationPath {
    pub seed: WeightDiagram,
    pub steps: Vec<PathStep>,
}

/// Moves the run of core symbols starting at `start` one step to the right,
/// returning the weight one step closer to typical and the functor that undoes the move.
fn shift_run(d: &WeightDiagram, start: Pos) -> Result<(Functor, WeightDiagram)> {
    let mut s = start;
    while d.body().contains_key(&s.next()) {
        s = s.next();
    }
    let sym = d.body()[&s];
    let prev = d.edit(&[(s, None), (s.next(), Some(sym))], None)?;
    let f = match sym {
        Lt => Functor::Up(s),
        Gt => Functor::Down(s),
        X => {
            return Err(Error::Internal(format!(
                "cross right of the rightmost cross in {d}"
            )))
        }
    };
    Ok((f, prev))
}

/// The weight `d` is reached from in one step, or `None` for typical `d`.
fn predecessor(
    d: &WeightDiagram,
) -> Result<Option<(Functor, WeightDiagram, Option<WeightDiagram>)>> {
    if d.atypicality() == 0 {
        return Ok(None);
    }
    let kind = d.kind();
    if let Some((&t, _)) = d.body().iter().rev().find(|(_, &s)| s == X) {
        if d.body().contains_key(&t.next()) {
            let (f, p) = shift_run(d, t.next())?;
            return Ok(Some((f, p, None)));
        }
        let p = d.edit(&[(t, Some(Gt)), (t.next(), Some(Lt))], None)?;
        return Ok(Some((Functor::Up(t), p, None)));
    }
    let t0 = tail_pos(kind).expect("GL crosses live in the body");
    let p1 = t0.next();
    if d.body().contains_key(&p1) {
        let (f, p) = shift_run(d, p1)?;
        return Ok(Some((f, p, None)));
    }
    let tl = d.tail();
    let k = tl.crosses;
    let step = match (kind.family, tl.core, d.sign()) {
        (Family::OspOdd, None, Some(Sign::Plus)) => (
            Functor::Up(t0),
            with_tail_pair(d, tail(k - 1, Some(Gt)), None, Some(Lt))?,
            None,
        ),
        (Family::OspOdd, None, _) => (
            Functor::Switch,
            with_tail_pair(d, tl, Some(Sign::Plus), None)?,
            None,
        ),
        (Family::OspOdd, Some(Gt), _) => (
            Functor::Down(t0),
            with_tail_pair(d, tail(k, None), minus_if(k), Some(Gt))?,
            None,
        ),
        (Family::OspOdd, Some(Lt), _) => (
            Functor::Up(t0),
            with_tail_pair(d, tail(k, None), minus_if(k), Some(Lt))?,
            None,
        ),
        (Family::OspEven, None, _) => (
            Functor::Up(t0),
            with_tail_pair(d, tail(k - 1, Some(Gt)), None, Some(Lt))?,
            None,
        ),
        (Family::OspEven, Some(Gt), _) => (
            Functor::Down(t0),
            with_tail_pair(d, tail(k, None), None, Some(Gt))?,
            Some(with_tail_pair(d, tail(k - 1, Some(Gt)), None, Some(X))?),
        ),
        _ => return Err(Error::Internal(format!("no reduction step for {d}"))),
    };
    Ok(Some(step))
}

/// A chain of elementary changes from a typical weight to `d`.
pub fn typicalization_path(d: &WeightDiagram) -> Result<TypicalizationPath> {
    const MAX_STEPS: usize = 100_000;
    let mut steps = Vec::new();
    let mut cur = d.clone();
    while let Some((functor, prev, minus)) = predecessor(&cur)? {
        steps.push(PathStep {
            functor,
            target: cur,
            minus,
        });
        cur = prev;
        if steps.len() > MAX_STEPS {
            return Err(Error::Internal(format!(
                "typicalization of {d} does not terminate"
            )));
        }
    }
    steps.reverse();
    Ok(TypicalizationPath { seed: cur, steps })
}

#[cfg(test)]
mod tests;
