//! Weight diagrams: symbols `<`, `>`, `x` placed on a half line (or on the
//! integers for GL), the tail multiset at the leftmost vertex, and the sign
//! indicator distinguishing weights that share a picture.

mod caps;
mod grammar;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{fmt_half, Family, SupergroupKind, Weight};

pub use caps::p_set_moves;
pub use caps::{
    bar_weight, cap_diagram, p_set, prime_shift, unprime_shift, BarWeight, Cap, CapDiagram,
    PrimeShift,
};
pub use grammar::parse_candidates;

/// A vertex of the diagram, stored doubled like weight coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pos(pub i64);

impl Pos {
    pub fn next(self) -> Pos {
        Pos(self.0 + 2)
    }

    pub fn prev(self) -> Pos {
        Pos(self.0 - 2)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_half(self.0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    Lt,
    Gt,
    Cross,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Lt => '<',
            Symbol::Gt => '>',
            Symbol::Cross => 'x',
        }
    }
}

/// Contents of one vertex: `None` is the empty vertex.
pub type Cell = Option<Symbol>;

pub(crate) fn cell_char(c: Cell) -> char {
    c.map_or('o', Symbol::as_char)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// The multiset at the tail vertex: some crosses and at most one core symbol.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct Tail {
    pub crosses: u32,
    pub core: Option<Symbol>,
}

impl Tail {
    pub fn empty() -> Tail {
        Tail::default()
    }

    pub fn is_empty(&self) -> bool {
        self.crosses == 0 && self.core.is_none()
    }

    pub fn len(&self) -> u32 {
        self.crosses + u32::from(self.core.is_some())
    }

    fn from_cell(c: Cell) -> Tail {
        match c {
            None => Tail::empty(),
            Some(Symbol::Cross) => Tail {
                crosses: 1,
                core: None,
            },
            Some(s) => Tail {
                crosses: 0,
                core: Some(s),
            },
        }
    }
}

/// Position of the tail vertex: 1/2 for SOSP(2m+1|2n), 0 for SOSP(2m|2n).
pub fn tail_pos(kind: SupergroupKind) -> Option<Pos> {
    match kind.family {
        Family::Gl => None,
        Family::OspOdd => Some(Pos(1)),
        Family::OspEven => Some(Pos(0)),
    }
}

pub fn first_body_pos(kind: SupergroupKind) -> Option<Pos> {
    tail_pos(kind).map(Pos::next)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightDiagram {
    kind: SupergroupKind,
    tail: Tail,
    body: BTreeMap<Pos, Symbol>,
    sign: Option<Sign>,
}

impl WeightDiagram {
    /// Checks symbol counts, vertex parity, tail shape and sign placement.
    pub fn new(
        kind: SupergroupKind,
        tail: Tail,
        body: BTreeMap<Pos, Symbol>,
        sign: Option<Sign>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::MalformedDiagram(m));
        let p = kind.coordinate_parity();
        if let Some((q, _)) = body.iter().find(|(q, _)| q.0.rem_euclid(2) != p) {
            return bad(format!("vertex {q} is not on the lattice of {kind}"));
        }
        match tail_pos(kind) {
            None => {
                if !tail.is_empty() || sign.is_some() {
                    return bad("GL diagrams carry no tail or sign".into());
                }
            }
            Some(t) => {
                if let Some((q, _)) = body.iter().next() {
                    if *q <= t {
                        return bad(format!("vertex {q} lies left of the first vertex"));
                    }
                }
                if tail.core == Some(Symbol::Cross) {
                    return bad("tail core must be `<` or `>`".into());
                }
            }
        }
        let count = |s: Symbol| body.values().filter(|&&x| x == s).count() as u32;
        let crosses = count(Symbol::Cross) + tail.crosses;
        let gt = count(Symbol::Gt) + u32::from(tail.core == Some(Symbol::Gt));
        let lt = count(Symbol::Lt) + u32::from(tail.core == Some(Symbol::Lt));
        if (gt + crosses) as usize != kind.m || (lt + crosses) as usize != kind.n {
            return bad(format!(
                "{kind} needs #> + #x = {} and #< + #x = {}, found {} and {}",
                kind.m,
                kind.n,
                gt + crosses,
                lt + crosses
            ));
        }
        match kind.family {
            Family::Gl => {}
            Family::OspOdd => {
                let needs = tail.crosses > 0 && tail.core.is_none();
                if needs != sign.is_some() {
                    return Err(Error::Sign(if needs {
                        "a tail made only of crosses needs a (+) or (-) indicator".into()
                    } else {
                        "indicator given where the weight is already determined".into()
                    }));
                }
            }
            Family::OspEven => {
                if tail.core == Some(Symbol::Lt) {
                    return bad("the even tail cannot hold `<`".into());
                }
                let needs = tail.is_empty();
                if needs != sign.is_some() {
                    return Err(Error::Sign(if needs {
                        "an empty even tail needs a [+] or [-] bracket".into()
                    } else {
                        "bracket given with a nonempty tail".into()
                    }));
                }
            }
        }
        Ok(WeightDiagram {
            kind,
            tail,
            body,
            sign,
        })
    }

    pub fn kind(&self) -> SupergroupKind {
        self.kind
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn body(&self) -> &BTreeMap<Pos, Symbol> {
        &self.body
    }

    pub fn sign(&self) -> Option<Sign> {
        self.sign
    }

    pub fn tail_crosses(&self) -> u32 {
        self.tail.crosses
    }

    pub fn atypicality(&self) -> u32 {
        self.tail.crosses + self.body.values().filter(|&&s| s == Symbol::Cross).count() as u32
    }

    /// Tailless diagrams label Euler characteristics.
    pub fn is_tailless(&self) -> bool {
        match self.kind.family {
            Family::Gl => true,
            Family::OspOdd => {
                self.tail.crosses == 0
                    || (self.tail.crosses == 1
                        && self.tail.core.is_none()
                        && self.sign == Some(Sign::Plus))
            }
            Family::OspEven => self.tail.crosses == 0,
        }
    }

    pub fn require_tailless(&self) -> Result<()> {
        if self.is_tailless() {
            Ok(())
        } else {
            Err(Error::NotTailless(self.to_string()))
        }
    }

    /// Largest occupied vertex, the tail included.
    pub fn max_pos(&self) -> Option<Pos> {
        self.body.keys().next_back().copied().or_else(|| {
            if self.tail.is_empty() {
                None
            } else {
                tail_pos(self.kind)
            }
        })
    }

    /// Contents of a vertex. Asking for a tail holding more than one symbol is an error.
    pub fn cell(&self, p: Pos) -> Result<Cell> {
        if Some(p) == tail_pos(self.kind) {
            return match (self.tail.crosses, self.tail.core) {
                (0, c) => Ok(c),
                (1, None) => Ok(Some(Symbol::Cross)),
                _ => Err(Error::NotTailless(self.to_string())),
            };
        }
        if let Some(t) = tail_pos(self.kind) {
            if p < t {
                return Err(Error::MalformedDiagram(format!(
                    "vertex {p} is left of the tail"
                )));
            }
        }
        Ok(self.body.get(&p).copied())
    }

    /// Rewrites single vertices. When the tail is rewritten its sign is
    /// recomputed: a lone odd tail cross is (+), an empty even tail takes
    /// `bracket` (or keeps the old one).
    pub fn edit(&self, edits: &[(Pos, Cell)], bracket: Option<Sign>) -> Result<WeightDiagram> {
        let t = tail_pos(self.kind);
        let mut body = self.body.clone();
        let mut tail = self.tail;
        let mut tail_edited = false;
        for &(p, c) in edits {
            if Some(p) == t {
                tail = Tail::from_cell(c);
                tail_edited = true;
            } else {
                match c {
                    Some(s) => {
                        body.insert(p, s);
                    }
                    None => {
                        body.remove(&p);
                    }
                }
            }
        }
        let sign = match self.kind.family {
            Family::Gl => None,
            Family::OspOdd => {
                if !tail_edited {
                    self.sign
                } else if tail.crosses == 1 && tail.core.is_none() {
                    Some(Sign::Plus)
                } else {
                    None
                }
            }
            Family::OspEven => {
                if tail.is_empty() {
                    bracket.or(self.sign)
                } else {
                    None
                }
            }
        };
        WeightDiagram::new(self.kind, tail, body, sign)
    }

    /// The diagram of a dominant rho-shifted weight.
    pub fn from_weight(w: &Weight) -> Result<WeightDiagram> {
        let kind = w.kind;
        let not_dom = || Error::NotDominant(w.to_string());
        let decreasing = |v: &[i64]| v.windows(2).all(|p| p[0] > p[1]);
        let mut body = BTreeMap::new();
        let put = |body: &mut BTreeMap<Pos, Symbol>, p: i64, s: Symbol| {
            let e = body.entry(Pos(p)).or_insert(s);
            if *e != s {
                *e = Symbol::Cross;
            }
        };
        match kind.family {
            Family::Gl => {
                if !decreasing(&w.a) || !decreasing(&w.b) {
                    return Err(not_dom());
                }
                for &x in &w.a {
                    put(&mut body, x, Symbol::Gt);
                }
                for &y in &w.b {
                    put(&mut body, -y, Symbol::Lt);
                }
                WeightDiagram::new(kind, Tail::empty(), body, None)
            }
            Family::OspOdd => {
                let s_b = w.b.iter().filter(|&&y| y == 1).count();
                let (b_head, b_tail) = w.b.split_at(kind.n - s_b);
                if !decreasing(b_head)
                    || b_head.iter().any(|&y| y < 3)
                    || b_tail.iter().any(|&y| y != 1)
                {
                    return Err(not_dom());
                }
                let s_a = w.a.iter().filter(|&&x| x.abs() == 1).count();
                let (a_head, a_tail) = w.a.split_at(kind.m - s_a);
                if !decreasing(a_head)
                    || a_head.iter().any(|&x| x < 3)
                    || a_tail.iter().any(|&x| x.abs() != 1)
                {
                    return Err(not_dom());
                }
                if s_a.abs_diff(s_b) > 1 {
                    return Err(not_dom());
                }
                let plus_pattern =
                    !a_tail.is_empty() && a_tail[0] == 1 && a_tail[1..].iter().all(|&x| x == -1);
                let minus_pattern = a_tail.iter().all(|&x| x == -1);
                let crosses = s_a.min(s_b) as u32;
                let (core, sign) = if s_a > s_b {
                    if !plus_pattern {
                        return Err(not_dom());
                    }
                    (Some(Symbol::Gt), None)
                } else if s_b > s_a {
                    if !minus_pattern {
                        return Err(not_dom());
                    }
                    (Some(Symbol::Lt), None)
                } else if s_a == 0 {
                    (None, None)
                } else if plus_pattern {
                    (None, Some(Sign::Plus))
                } else if minus_pattern {
                    (None, Some(Sign::Minus))
                } else {
                    return Err(not_dom());
                };
                for &x in a_head {
                    put(&mut body, x, Symbol::Gt);
                }
                for &y in b_head {
                    put(&mut body, y, Symbol::Lt);
                }
                WeightDiagram::new(kind, Tail { crosses, core }, body, sign)
            }
            Family::OspEven => {
                let s_b = w.b.iter().filter(|&&y| y == 0).count();
                let (b_head, b_tail) = w.b.split_at(kind.n - s_b);
                if !decreasing(b_head)
                    || b_head.iter().any(|&y| y <= 0)
                    || b_tail.iter().any(|&y| y != 0)
                {
                    return Err(not_dom());
                }
                let s_a = w.a.iter().filter(|&&x| x == 0).count();
                let (a_head, a_tail) = w.a.split_at(kind.m - s_a);
                if a_tail.iter().any(|&x| x != 0) || s_a < s_b || s_a > s_b + 1 {
                    return Err(not_dom());
                }
                let mut sign = None;
                if s_a == 0 {
                    let m = kind.m;
                    let last = w.a[m - 1];
                    if !decreasing(&w.a[..m - 1]) || (m >= 2 && w.a[m - 2] <= last.abs()) {
                        return Err(not_dom());
                    }
                    sign = Some(if last > 0 { Sign::Plus } else { Sign::Minus });
                } else if !decreasing(a_head) || a_head.iter().any(|&x| x <= 0) {
                    return Err(not_dom());
                }
                let core = (s_a > s_b).then_some(Symbol::Gt);
                for &x in a_head {
                    put(&mut body, x.abs(), Symbol::Gt);
                }
                for &y in b_head {
                    put(&mut body, y, Symbol::Lt);
                }
                WeightDiagram::new(
                    kind,
                    Tail {
                        crosses: s_b as u32,
                        core,
                    },
                    body,
                    sign,
                )
            }
        }
    }

    /// The dominant rho-shifted weight of this diagram.
    pub fn to_weight(&self) -> Weight {
        let kind = self.kind;
        let desc = |sym: Symbol| -> Vec<i64> {
            self.body
                .iter()
                .rev()
                .filter(|(_, &s)| s == sym || s == Symbol::Cross)
                .map(|(p, _)| p.0)
                .collect()
        };
        let mut a = desc(Symbol::Gt);
        let mut b = desc(Symbol::Lt);
        let s_a = (self.tail.crosses + u32::from(self.tail.core == Some(Symbol::Gt))) as usize;
        let s_b = (self.tail.crosses + u32::from(self.tail.core == Some(Symbol::Lt))) as usize;
        match kind.family {
            Family::Gl => {
                b = b.into_iter().rev().map(|y| -y).collect();
            }
            Family::OspOdd => {
                let plus = self.tail.core == Some(Symbol::Gt) || self.sign == Some(Sign::Plus);
                for i in 0..s_a {
                    a.push(if i == 0 && plus { 1 } else { -1 });
                }
                b.extend(std::iter::repeat_n(1, s_b));
            }
            Family::OspEven => {
                a.extend(std::iter::repeat_n(0, s_a));
                b.extend(std::iter::repeat_n(0, s_b));
                if self.sign == Some(Sign::Minus) {
                    let m = a.len();
                    a[m - 1] = -a[m - 1];
                }
            }
        }
        Weight { kind, a, b }
    }

    /// All dominant weights drawn as this diagram. Indicators are part of
    /// the diagram, so the list always has one entry.
    pub fn to_weights(&self) -> Vec<Weight> {
        vec![self.to_weight()]
    }

    pub fn core(&self) -> Core {
        let body = self
            .body
            .iter()
            .filter(|(_, &s)| s != Symbol::Cross)
            .map(|(p, s)| (*p, *s))
            .collect();
        let bracket = match self.kind.family {
            Family::OspEven if self.atypicality() == 0 && self.tail.is_empty() => self.sign,
            _ => None,
        };
        Core {
            kind: self.kind,
            tail: self.tail.core,
            body,
            bracket,
        }
    }

    pub fn block_label(&self) -> BlockLabel {
        let mut gamma = BTreeMap::new();
        let weight = |s: Symbol| match s {
            Symbol::Lt => 1,
            Symbol::Gt => -1,
            Symbol::Cross => 0,
        };
        for (p, s) in &self.body {
            if weight(*s) != 0 {
                gamma.insert(*p, weight(*s));
            }
        }
        if self.kind.family == Family::OspOdd {
            if let Some(c) = self.tail.core {
                gamma.insert(Pos(1), weight(c));
            }
        }
        BlockLabel {
            gamma,
            bracket: self.core().bracket,
        }
    }
}

/// A diagram with its crosses removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Core {
    pub kind: SupergroupKind,
    pub tail: Option<Symbol>,
    pub body: BTreeMap<Pos, Symbol>,
    pub bracket: Option<Sign>,
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match first_body_pos(self.kind) {
            None => match (self.body.keys().next(), self.body.keys().next_back()) {
                (Some(lo), Some(hi)) => {
                    write!(f, "@{}", lo.0 / 2)?;
                    let mut p = *lo;
                    while p <= *hi {
                        write!(f, " {}", cell_char(self.body.get(&p).copied()))?;
                        p = p.next();
                    }
                    Ok(())
                }
                _ => f.write_str("@0"),
            },
            Some(start) => {
                if let Some(s) = self.bracket {
                    write!(f, "[{}] ", s.as_char())?;
                }
                if let Some(c) = self.tail {
                    write!(f, "{}", c.as_char())?;
                }
                f.write_str(";")?;
                if let Some(hi) = self.body.keys().next_back() {
                    let mut p = start;
                    while p <= *hi {
                        write!(f, " {}", cell_char(self.body.get(&p).copied()))?;
                        p = p.next();
                    }
                }
                Ok(())
            }
        }
    }
}

/// The gl(infinity) weight of a block: `+1` per `<`, `-1` per `>`, crosses
/// contribute nothing. The even family ignores the tail vertex, whose basis
/// vector has weight zero, and records the bracket of typical weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockLabel {
    pub gamma: BTreeMap<Pos, i64>,
    pub bracket: Option<Sign>,
}

impl BlockLabel {
    pub fn shifted(&self, p: Pos, delta: i64) -> BlockLabel {
        let mut gamma = self.gamma.clone();
        let v = gamma.entry(p).or_insert(0);
        *v += delta;
        if *v == 0 {
            gamma.remove(&p);
        }
        BlockLabel {
            gamma,
            bracket: None,
        }
    }

    /// Atypicality of the block with this weight, or `None` when no dominant
    /// weight of `kind` has it.
    pub fn atypicality(&self, kind: SupergroupKind) -> Option<u32> {
        if self.gamma.values().any(|v| v.abs() != 1) {
            return None;
        }
        if let Some(t) = tail_pos(kind) {
            let lowest = if kind.family == Family::OspEven {
                t.next()
            } else {
                t
            };
            if self
                .gamma
                .keys()
                .any(|p| *p < lowest || p.0.rem_euclid(2) != kind.coordinate_parity())
            {
                return None;
            }
        }
        let lt = self.gamma.values().filter(|&&v| v == 1).count();
        let gt = self.gamma.values().filter(|&&v| v == -1).count();
        let atyp = kind.n.checked_sub(lt)?;
        match kind.family {
            Family::OspEven => {
                let tail_gt = kind.m.checked_sub(atyp + gt)?;
                (tail_gt <= 1).then_some(atyp as u32)
            }
            _ => (kind.m.checked_sub(gt)? == atyp).then_some(atyp as u32),
        }
    }
}

impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&grammar::render(self))
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Family::from_name(s)
    }
}
