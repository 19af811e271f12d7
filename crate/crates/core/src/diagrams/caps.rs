//! Cap diagrams, the sets of weights obtained by sliding crosses along caps,
//! the bar weight of a tailed odd diagram, and the half-unit shift between
//! the even and odd families.

use std::collections::{BTreeMap, BTreeSet};

use super::{tail_pos, Pos, Sign, Symbol, Tail, WeightDiagram};
use crate::error::{Error, Result};
use crate::lattice::{Family, SupergroupKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cap {
    pub left: Pos,
    pub right: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapDiagram {
    pub diagram: WeightDiagram,
    /// Ordered by left end.
    pub caps: Vec<Cap>,
}

/// Joins each cross, right to left, to the nearest vertex on its right that
/// is empty and not yet a cap end.
fn caps_for(crosses: &[Pos], occupied: impl Fn(Pos) -> bool) -> (Vec<Cap>, BTreeSet<Pos>) {
    let mut ends = BTreeSet::new();
    let mut caps = Vec::new();
    for &p in crosses.iter().rev() {
        let mut q = p.next();
        while occupied(q) || ends.contains(&q) {
            q = q.next();
        }
        ends.insert(q);
        caps.push(Cap { left: p, right: q });
    }
    caps.sort();
    (caps, ends)
}

fn crosses_of(d: &WeightDiagram) -> Vec<Pos> {
    let mut xs: Vec<Pos> = Vec::new();
    if d.tail().crosses == 1 {
        xs.extend(tail_pos(d.kind()));
    }
    xs.extend(
        d.body()
            .iter()
            .filter(|(_, &s)| s == Symbol::Cross)
            .map(|(p, _)| *p),
    );
    xs
}

pub fn cap_diagram(d: &WeightDiagram) -> Result<CapDiagram> {
    d.require_tailless()?;
    let (caps, _) = caps_for(&crosses_of(d), |q| d.body().contains_key(&q));
    Ok(CapDiagram {
        diagram: d.clone(),
        caps,
    })
}

/// Every weight reached by moving some crosses to the right ends of their caps,
/// together with the left ends that moved.
pub fn p_set_moves(d: &WeightDiagram) -> Result<Vec<(WeightDiagram, BTreeSet<Pos>)>> {
    let cd = cap_diagram(d)?;
    let k = cd.caps.len();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u64..(1u64 << k) {
        let mut edits = Vec::new();
        let mut moved = BTreeSet::new();
        for (i, cap) in cd.caps.iter().enumerate() {
            if mask >> i & 1 == 1 {
                edits.push((cap.left, None));
                edits.push((cap.right, Some(Symbol::Cross)));
                moved.insert(cap.left);
            }
        }
        out.push((d.edit(&edits, None)?, moved));
    }
    Ok(out)
}

pub fn p_set(d: &WeightDiagram) -> Result<Vec<WeightDiagram>> {
    Ok(p_set_moves(d)?.into_iter().map(|(w, _)| w).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarWeight {
    pub diagram: WeightDiagram,
    /// Vertices of the crosses that came from the tail, the tail included
    /// when one cross stays there.
    pub emerald: BTreeSet<Pos>,
}

/// Empties the tail of an odd diagram: the tail crosses go to the odd free
/// vertices (1st, 3rd, ...) when a core symbol sits at the tail, otherwise one
/// cross stays as `(+)` and the rest go to the 2nd, 4th, ... free vertices.
pub fn bar_weight(d: &WeightDiagram) -> Result<BarWeight> {
    let kind = d.kind();
    if kind.family != Family::OspOdd || d.tail_crosses() == 0 {
        return Err(Error::Unsupported(
            "bar weights need an odd diagram with crosses at the tail".into(),
        ));
    }
    let t = Pos(1);
    if d.is_tailless() {
        return Ok(BarWeight {
            diagram: d.clone(),
            emerald: BTreeSet::from([t]),
        });
    }
    let tail = d.tail();
    let body_crosses: Vec<Pos> = d
        .body()
        .iter()
        .filter(|(_, &s)| s == Symbol::Cross)
        .map(|(p, _)| *p)
        .collect();
    let (_, ends) = caps_for(&body_crosses, |q| d.body().contains_key(&q));
    let mut free = Vec::new();
    let mut q = t.next();
    let k = tail.crosses as usize;
    while free.len() < 2 * k {
        if !d.body().contains_key(&q) && !ends.contains(&q) {
            free.push(q);
        }
        q = q.next();
    }
    let mut body = d.body().clone();
    let mut emerald = BTreeSet::new();
    let (new_tail, sign) = if tail.core.is_some() {
        for i in 0..k {
            body.insert(free[2 * i], Symbol::Cross);
            emerald.insert(free[2 * i]);
        }
        (
            Tail {
                crosses: 0,
                core: tail.core,
            },
            None,
        )
    } else {
        for i in 1..k {
            body.insert(free[2 * i - 1], Symbol::Cross);
            emerald.insert(free[2 * i - 1]);
        }
        emerald.insert(t);
        (
            Tail {
                crosses: 1,
                core: None,
            },
            Some(Sign::Plus),
        )
    };
    let diagram = WeightDiagram::new(kind, new_tail, body, sign)?;
    Ok(BarWeight { diagram, emerald })
}

/// An even diagram moved half a unit to the right, as an odd diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeShift {
    pub diagram: WeightDiagram,
    /// Bracket of an empty even tail, kept for block bookkeeping.
    pub bracket: Option<Sign>,
}

fn shift_body(body: &BTreeMap<Pos, Symbol>, by: i64) -> BTreeMap<Pos, Symbol> {
    body.iter().map(|(p, s)| (Pos(p.0 + by), *s)).collect()
}

/// `sign` is required exactly when the tail holds crosses and no `>`.
pub fn prime_shift(d: &WeightDiagram, sign: Option<Sign>) -> Result<PrimeShift> {
    let kind = d.kind();
    if kind.family != Family::OspEven {
        return Err(Error::Unsupported(
            "prime shift starts from an even diagram".into(),
        ));
    }
    let tail = d.tail();
    let needs = tail.crosses > 0 && tail.core.is_none();
    if needs != sign.is_some() {
        return Err(Error::Sign(if needs {
            "choose a sign for the all-cross tail".into()
        } else {
            "no sign is needed for this tail".into()
        }));
    }
    let odd = SupergroupKind {
        family: Family::OspOdd,
        ..kind
    };
    let diagram = WeightDiagram::new(odd, tail, shift_body(d.body(), 1), sign)?;
    let bracket = if tail.is_empty() { d.sign() } else { None };
    Ok(PrimeShift { diagram, bracket })
}

/// Inverse of [`prime_shift`] on odd diagrams without `<` at the tail.
pub fn unprime_shift(d: &WeightDiagram, bracket: Option<Sign>) -> Result<WeightDiagram> {
    let kind = d.kind();
    if kind.family != Family::OspOdd {
        return Err(Error::Unsupported(
            "inverse prime shift starts from an odd diagram".into(),
        ));
    }
    let tail = d.tail();
    if tail.core == Some(Symbol::Lt) {
        return Err(Error::Unsupported(
            "`<` at the odd tail has no even counterpart".into(),
        ));
    }
    if tail.is_empty() != bracket.is_some() {
        return Err(Error::Sign(if tail.is_empty() {
            "an empty tail needs a bracket".into()
        } else {
            "no bracket is needed for this tail".into()
        }));
    }
    let even = SupergroupKind {
        family: Family::OspEven,
        ..kind
    };
    WeightDiagram::new(even, tail, shift_body(d.body(), -1), bracket)
}
