//! Wedge-space models on which translation functors act as Chevalley
//! generators: `L^m(V*) (x) L^n(V)` for SOSP(2m+1|2n) and
//! `X+- = L^m(U<=0 or U<0) (x) L^n(U>0)` for SOSP(2m|2n).
//!
//! Indices are doubled like vertex positions. Basis vectors are kept in
//! increasing normal form; this differs from writing `x_lambda` with
//! decreasing indices by a sign depending only on `m` and `n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::diagrams::{Pos, Sign, Symbol, Tail, WeightDiagram};
use crate::error::{Error, Result};
use crate::kgroup::{Basis, KElement};
use crate::lattice::{fmt_half, Family, SupergroupKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    /// `w_i` (starred) and `v_i` (unstarred), `i` in 1/2 + Z>=0.
    Odd,
    /// `u_i`, starred `i <= 0`, unstarred `i > 0`.
    EvenPlus,
    /// As `EvenPlus` with `u_0` removed from the starred factor.
    EvenMinus,
}

impl Model {
    fn starred_ok(self, i: i64) -> bool {
        match self {
            Model::Odd => i >= 1 && i % 2 != 0,
            Model::EvenPlus => i <= 0 && i % 2 == 0,
            Model::EvenMinus => i < 0 && i % 2 == 0,
        }
    }

    fn unstarred_ok(self, i: i64) -> bool {
        match self {
            Model::Odd => i >= 1 && i % 2 != 0,
            Model::EvenPlus | Model::EvenMinus => i > 0 && i % 2 == 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeLabel {
    pub starred: Vec<i64>,
    pub unstarred: Vec<i64>,
}

impl WedgeLabel {
    fn render(&self, model: Model) -> String {
        let (s, u) = match model {
            Model::Odd => ('w', 'v'),
            _ => ('u', 'u'),
        };
        let part =
            |c: char, v: &[i64]| v.iter().map(|i| format!("{c}[{}]", fmt_half(*i))).join("^");
        format!(
            "{} (x) {}",
            part(s, &self.starred),
            part(u, &self.unstarred)
        )
    }
}

/// Sorts increasingly, returning the sign of the permutation, or `None` on a repeat.
pub fn wedge_normalize(mut v: Vec<i64>) -> Option<(i64, Vec<i64>)> {
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    pub model: Model,
    terms: BTreeMap<WedgeLabel, i64>,
}

impl FockVector {
    pub fn zero(model: Model) -> FockVector {
        FockVector {
            model,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WedgeLabel, &i64)> {
        self.terms.iter()
    }

    /// Adds `c` times the wedge of the given (unordered) indices.
    pub fn add_wedge(&mut self, starred: Vec<i64>, unstarred: Vec<i64>, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let model = self.model;
        if starred.iter().any(|i| !model.starred_ok(*i))
            || unstarred.iter().any(|i| !model.unstarred_ok(*i))
        {
            return Ok(());
        }
        let (Some((s1, starred)), Some((s2, unstarred))) =
            (wedge_normalize(starred), wedge_normalize(unstarred))
        else {
            return Ok(());
        };
        let c = c.checked_mul(s1 * s2).ok_or(Error::Overflow)?;
        let label = WedgeLabel { starred, unstarred };
        let v = self.terms.entry(label.clone()).or_insert(0);
        *v = v.checked_add(c).ok_or(Error::Overflow)?;
        if *v == 0 {
            self.terms.remove(&label);
        }
        Ok(())
    }

    pub fn add(&self, other: &FockVector) -> Result<FockVector> {
        if self.model != other.model {
            return Err(Error::Internal("adding vectors of different models".into()));
        }
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_wedge(l.starred.clone(), l.unstarred.clone(), *c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<FockVector> {
        let mut out = FockVector::zero(self.model);
        for (l, c) in &self.terms {
            out.add_wedge(
                l.starred.clone(),
                l.unstarred.clone(),
                c.checked_mul(k).ok_or(Error::Overflow)?,
            )?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FockVector) -> Result<FockVector> {
        self.add(&other.scale(-1)?)
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let s = self
            .terms
            .iter()
            .map(|(l, c)| format!("{c:+} * {}", l.render(self.model)))
            .join("\n");
        f.write_str(&s)
    }
}

fn half_sign(doubled_sum: i64) -> i64 {
    // (-1)^(i+j) for i + j = doubled_sum / 2
    if (doubled_sum / 2).rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `E_{i,j}` acting as a derivation. On `V`, `E v_k = delta_jk v_i`; on the
/// dual `V*`, `E w_k = (-1)^{i+j} delta_ik w_j`; on `U`, `E u_k = delta_jk u_i`
/// in both factors, dropping images that leave the factor.
pub fn apply_e(i: i64, j: i64, x: &FockVector) -> Result<FockVector> {
    let model = x.model;
    let mut out = FockVector::zero(model);
    for (l, c) in &x.terms {
        for (slot, &k) in l.unstarred.iter().enumerate() {
            if k == j {
                let mut u = l.unstarred.clone();
                u[slot] = i;
                out.add_wedge(l.starred.clone(), u, *c)?;
            }
        }
        for (slot, &k) in l.starred.iter().enumerate() {
            let (hit, new, sign) = match model {
                Model::Odd => (k == i, j, half_sign(i + j)),
                _ => (k == j, i, 1),
            };
            if hit {
                let mut s = l.starred.clone();
                s[slot] = new;
                out.add_wedge(s, l.unstarred.clone(), c * sign)?;
            }
        }
    }
    Ok(out)
}

/// The folded generators of the even model, indices `i, j >= 0` doubled.
pub fn apply_f(i: i64, j: i64, x: &FockVector) -> Result<FockVector> {
    if x.model == Model::Odd {
        return Err(Error::Unsupported("F acts on the even models".into()));
    }
    if i < 0 || j < 0 || i % 2 != 0 || j % 2 != 0 || i == j {
        return Err(Error::Unsupported(format!(
            "F({},{})",
            fmt_half(i),
            fmt_half(j)
        )));
    }
    match (i, j) {
        (0, _) => apply_e(-j, 0, x),
        (_, 0) => apply_e(0, -i, x)?.scale(2),
        _ => {
            let sign = if ((i + j) / 2 + 1) % 2 == 0 { 1 } else { -1 };
            apply_e(i, j, x)?.add(&apply_e(-j, -i, x)?)?.scale(sign)
        }
    }
}

fn body_indices(d: &WeightDiagram, sym: Symbol) -> Vec<i64> {
    d.body()
        .iter()
        .filter(|(_, &s)| s == sym || s == Symbol::Cross)
        .map(|(p, _)| p.0)
        .collect()
}

fn require_family(d: &WeightDiagram, f: Family) -> Result<()> {
    if d.kind().family != f {
        return Err(Error::KindMismatch);
    }
    d.require_tailless()
}

/// `x_lambda` for a tailless SOSP(2m+1|2n) label.
pub fn odd_label(d: &WeightDiagram) -> Result<WedgeLabel> {
    require_family(d, Family::OspOdd)?;
    let mut starred = body_indices(d, Symbol::Gt);
    let mut unstarred = body_indices(d, Symbol::Lt);
    let t = d.tail();
    if t.crosses == 1 || t.core == Some(Symbol::Gt) {
        starred.insert(0, 1);
    }
    if t.crosses == 1 || t.core == Some(Symbol::Lt) {
        unstarred.insert(0, 1);
    }
    Ok(WedgeLabel { starred, unstarred })
}

/// `x_lambda` for a tailless SOSP(2m|2n) label, ignoring the bracket.
pub fn even_label(d: &WeightDiagram) -> Result<WedgeLabel> {
    require_family(d, Family::OspEven)?;
    let mut starred: Vec<i64> = body_indices(d, Symbol::Gt)
        .into_iter()
        .map(|a| -a)
        .collect();
    if d.tail().core == Some(Symbol::Gt) {
        starred.push(0);
    }
    starred.sort();
    Ok(WedgeLabel {
        starred,
        unstarred: body_indices(d, Symbol::Lt),
    })
}

fn check_basis(x: &KElement) -> Result<()> {
    if x.basis != Basis::Euler {
        return Err(Error::Unsupported(
            "the Fock maps take Euler characteristics".into(),
        ));
    }
    Ok(())
}

/// `phi`: Euler characteristics of SOSP(2m+1|2n) to `L^m(V*) (x) L^n(V)`.
pub fn phi(x: &KElement) -> Result<FockVector> {
    check_basis(x)?;
    let mut out = FockVector::zero(Model::Odd);
    for (d, c) in x.iter() {
        let l = odd_label(d)?;
        out.add_wedge(l.starred, l.unstarred, *c)?;
    }
    Ok(out)
}

/// Inverse of [`phi`].
pub fn phi_inverse(kind: SupergroupKind, x: &FockVector) -> Result<KElement> {
    if kind.family != Family::OspOdd || x.model != Model::Odd {
        return Err(Error::KindMismatch);
    }
    let mut out = KElement::zero(Basis::Euler);
    for (l, c) in x.iter() {
        let s: BTreeSet<i64> = l.starred.iter().copied().collect();
        let u: BTreeSet<i64> = l.unstarred.iter().copied().collect();
        let mut body = BTreeMap::new();
        for p in s.union(&u).filter(|p| **p > 1) {
            let sym = match (s.contains(p), u.contains(p)) {
                (true, true) => Symbol::Cross,
                (true, false) => Symbol::Gt,
                _ => Symbol::Lt,
            };
            body.insert(Pos(*p), sym);
        }
        let (tail, sign) = match (s.contains(&1), u.contains(&1)) {
            (true, true) => (
                Tail {
                    crosses: 1,
                    core: None,
                },
                Some(Sign::Plus),
            ),
            (true, false) => (
                Tail {
                    crosses: 0,
                    core: Some(Symbol::Gt),
                },
                None,
            ),
            (false, true) => (
                Tail {
                    crosses: 0,
                    core: Some(Symbol::Lt),
                },
                None,
            ),
            (false, false) => (Tail::empty(), None),
        };
        out.add_term(WeightDiagram::new(kind, tail, body, sign)?, *c)?;
    }
    Ok(out)
}

/// `psi+` (`which = Plus`) or `psi-` on Euler characteristics of SOSP(2m|2n).
/// A label with a `>` at the tail counts once; an empty tail must come in
/// the bracket pair `[+]`/`[-]` with equal (`psi+`) or opposite (`psi-`) coefficients.
pub fn psi(which: Sign, x: &KElement) -> Result<FockVector> {
    check_basis(x)?;
    let model = match which {
        Sign::Plus => Model::EvenPlus,
        Sign::Minus => Model::EvenMinus,
    };
    let mut out = FockVector::zero(model);
    for (d, c) in x.iter() {
        let l = even_label(d)?;
        match d.sign() {
            None => {
                if which == Sign::Plus {
                    out.add_wedge(l.starred, l.unstarred, *c)?;
                }
            }
            Some(s) => {
                let partner =
                    WeightDiagram::new(d.kind(), d.tail(), d.body().clone(), Some(s.flip()))?;
                let pc = x.coeff(&partner);
                let expect = if which == Sign::Plus { *c } else { -*c };
                if pc != expect {
                    return Err(Error::NotSymmetric);
                }
                if s == Sign::Plus {
                    out.add_wedge(l.starred, l.unstarred, *c)?;
                }
            }
        }
    }
    Ok(out)
}

/// The symmetrised (`Plus`) or antisymmetrised basis element for a label.
pub fn sigma_basis(which: Sign, d: &WeightDiagram) -> Result<KElement> {
    let mut out = KElement::single(Basis::Euler, d.clone());
    if let Some(s) = d.sign() {
        let partner = WeightDiagram::new(d.kind(), d.tail(), d.body().clone(), Some(s.flip()))?;
        let c = match (which, s) {
            (Sign::Plus, _) => 1,
            (Sign::Minus, Sign::Plus) => -1,
            (Sign::Minus, Sign::Minus) => {
                out = out.scale(-1)?;
                1
            }
        };
        out.add_term(partner, c)?;
    }
    Ok(out)
}

fn map_indices(
    x: &FockVector,
    to: Model,
    f: impl Fn(&WedgeLabel) -> Option<(Vec<i64>, Vec<i64>)>,
) -> Result<FockVector> {
    let mut out = FockVector::zero(to);
    for (l, c) in x.iter() {
        if let Some((s, u)) = f(l) {
            out.add_wedge(s, u, *c)?;
        }
    }
    Ok(out)
}

/// `alpha(v_1/2) = 0`, `alpha(v_i) = u_{i-1/2}`, `alpha(w_i) = u_{1/2-i}`.
pub fn alpha(x: &FockVector) -> Result<FockVector> {
    if x.model != Model::Odd {
        return Err(Error::KindMismatch);
    }
    map_indices(x, Model::EvenPlus, |l| {
        if l.unstarred.contains(&1) {
            return None;
        }
        Some((
            l.starred.iter().map(|i| 1 - i).collect(),
            l.unstarred.iter().map(|i| i - 1).collect(),
        ))
    })
}

/// `beta(u_i) = w_{1/2-i}` for `i <= 0` and `beta(u_i) = v_{i+1/2}` for `i > 0`.
pub fn beta(x: &FockVector) -> Result<FockVector> {
    if x.model != Model::EvenPlus {
        return Err(Error::KindMismatch);
    }
    map_indices(x, Model::Odd, |l| {
        Some((
            l.starred.iter().map(|i| 1 - i).collect(),
            l.unstarred.iter().map(|i| i + 1).collect(),
        ))
    })
}
