//! Supergroup kinds, rho-shifted weights and the Weyl group of the even part.
//!
//! Every coordinate is stored doubled, so `3/2` is `3` and `1` is `2`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ENUM: u128 = 10_000_000;
pub const MAX_ENUM_ENV: &str = "SUPERCHAR_MAX_ENUM";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Gl,
    OspOdd,
    OspEven,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::OspOdd => "osp-odd",
            Family::OspEven => "osp-even",
        }
    }

    pub fn from_name(s: &str) -> Result<Family> {
        match s {
            "gl" => Ok(Family::Gl),
            "osp-odd" => Ok(Family::OspOdd),
            "osp-even" => Ok(Family::OspEven),
            _ => Err(Error::InvalidKind(format!("unknown group family `{s}`"))),
        }
    }
}

/// GL(m|n), SOSP(2m+1|2n) or SOSP(2m|2n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SupergroupKind {
    pub family: Family,
    pub m: usize,
    pub n: usize,
}

impl SupergroupKind {
    /// GL with m < n is refused here; see [`SupergroupKind::gl_any`].
    pub fn new(family: Family, m: usize, n: usize) -> Result<Self> {
        if family == Family::Gl && m < n {
            return Err(Error::InvalidKind(format!(
                "GL({m}|{n}) has m < n; use the explicit small-m constructor"
            )));
        }
        Self::build(family, m, n)
    }

    /// GL(m|n) without the m >= n restriction. The Borel keeps the
    /// epsilon-before-delta ordering.
    pub fn gl_any(m: usize, n: usize) -> Result<Self> {
        Self::build(Family::Gl, m, n)
    }

    pub fn gl(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::Gl, m, n)
    }

    pub fn osp_odd(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::OspOdd, m, n)
    }

    pub fn osp_even(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::OspEven, m, n)
    }

    fn build(family: Family, m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidKind(format!(
                "m and n must be positive, got m={m} n={n}"
            )));
        }
        if m > 64 || n > 64 {
            return Err(Error::InvalidKind("rank above 64".into()));
        }
        Ok(SupergroupKind { family, m, n })
    }

    pub fn is_osp(&self) -> bool {
        self.family != Family::Gl
    }

    /// Residue of doubled coordinates modulo 2.
    pub fn coordinate_parity(&self) -> i64 {
        match self.family {
            Family::OspOdd => 1,
            _ => 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }
}

impl fmt::Display for SupergroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gl => write!(f, "GL({}|{})", self.m, self.n),
            Family::OspOdd => write!(f, "SOSP({}|{})", 2 * self.m + 1, 2 * self.n),
            Family::OspEven => write!(f, "SOSP({}|{})", 2 * self.m, 2 * self.n),
        }
    }
}

/// Formats a doubled coordinate as an integer or a half-integer.
pub fn fmt_half(v: i64) -> String {
    if v % 2 == 0 {
        format!("{}", v / 2)
    } else {
        format!("{v}/2")
    }
}

/// Parses `3/2`, `-1/2`, `2` or `-4` into a doubled coordinate.
pub fn parse_half(s: &str) -> Result<i64> {
    let s = s.trim();
    let bad = || Error::InvalidWeight(format!("cannot read coordinate `{s}`"));
    if let Some((num, den)) = s.split_once('/') {
        if den.trim() != "2" {
            return Err(bad());
        }
        let v: i64 = num.trim().parse().map_err(|_| bad())?;
        Ok(v)
    } else {
        let v: i64 = s.parse().map_err(|_| bad())?;
        v.checked_mul(2).ok_or(Error::Overflow)
    }
}

/// A rho-shifted weight `lambda + rho`, coordinates doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub kind: SupergroupKind,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl Weight {
    /// Builds a rho-shifted weight from doubled coordinates.
    pub fn new(kind: SupergroupKind, a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if a.len() != kind.m || b.len() != kind.n {
            return Err(Error::InvalidWeight(format!(
                "{kind} needs {} epsilon and {} delta coordinates, got {} and {}",
                kind.m,
                kind.n,
                a.len(),
                b.len()
            )));
        }
        let p = kind.coordinate_parity();
        if a.iter().chain(&b).any(|v| v.rem_euclid(2) != p) {
            let what = if p == 1 { "half-integers" } else { "integers" };
            return Err(Error::InvalidWeight(format!(
                "coordinates of {kind} must be {what}"
            )));
        }
        Ok(Weight { kind, a, b })
    }

    /// Builds `lambda + rho` from an unshifted `lambda` given in doubled coordinates.
    pub fn from_plain(kind: SupergroupKind, a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if a.len() != kind.m || b.len() != kind.n {
            return Err(Error::InvalidWeight("wrong number of coordinates".into()));
        }
        let r = rho(kind);
        let a = a
            .iter()
            .zip(&r.a)
            .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        let b = b
            .iter()
            .zip(&r.b)
            .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Weight::new(kind, a, b)
    }

    /// The unshifted weight `lambda`, doubled.
    pub fn plain(&self) -> (Vec<i64>, Vec<i64>) {
        let r = rho(self.kind);
        (
            self.a.iter().zip(&r.a).map(|(x, y)| x - y).collect(),
            self.b.iter().zip(&r.b).map(|(x, y)| x - y).collect(),
        )
    }

    pub fn coords(&self) -> Vec<i64> {
        self.a.iter().chain(&self.b).copied().collect()
    }

    pub fn from_coords(kind: SupergroupKind, v: &[i64]) -> Result<Self> {
        if v.len() != kind.rank() {
            return Err(Error::InvalidWeight("wrong number of coordinates".into()));
        }
        Weight::new(kind, v[..kind.m].to_vec(), v[kind.m..].to_vec())
    }

    pub fn checked_add(&self, other: &[i64]) -> Result<Weight> {
        let v = self
            .coords()
            .iter()
            .zip(other)
            .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Weight::from_coords(self.kind, &v)
    }

    /// Parses `a=3/2,1/2 b=1/2`, optionally preceded by `group=.. m=.. n=..`.
    pub fn parse_text(s: &str, default_kind: Option<SupergroupKind>) -> Result<Weight> {
        let mut family = default_kind.map(|k| k.family);
        let mut m = default_kind.map(|k| k.m);
        let mut n = default_kind.map(|k| k.n);
        let mut a = None;
        let mut b = None;
        for tok in s.split_whitespace() {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| Error::InvalidWeight(format!("expected key=value, got `{tok}`")))?;
            let coords = |val: &str| -> Result<Vec<i64>> {
                if val.is_empty() {
                    return Ok(Vec::new());
                }
                val.split(',').map(parse_half).collect()
            };
            let int = |val: &str| -> Result<usize> {
                val.parse()
                    .map_err(|_| Error::InvalidWeight(format!("bad integer `{val}`")))
            };
            match key {
                "group" => family = Some(Family::from_name(val)?),
                "m" => m = Some(int(val)?),
                "n" => n = Some(int(val)?),
                "a" => a = Some(coords(val)?),
                "b" => b = Some(coords(val)?),
                _ => return Err(Error::InvalidWeight(format!("unknown key `{key}`"))),
            }
        }
        let (Some(family), Some(m), Some(n)) = (family, m, n) else {
            return Err(Error::InvalidWeight("group, m and n must be given".into()));
        };
        let kind = match (family, default_kind) {
            (Family::Gl, Some(k)) if k.family == Family::Gl && k.m == m && k.n == n => k,
            (Family::Gl, _) => SupergroupKind::gl_any(m, n)?,
            _ => SupergroupKind::new(family, m, n)?,
        };
        let a = a.ok_or_else(|| Error::InvalidWeight("missing a=".into()))?;
        let b = b.ok_or_else(|| Error::InvalidWeight("missing b=".into()))?;
        Weight::new(kind, a, b)
    }

    pub fn to_text(&self) -> String {
        let j = |v: &[i64]| v.iter().map(|x| fmt_half(*x)).join(",");
        format!(
            "group={} m={} n={} a={} b={}",
            self.kind.family.name(),
            self.kind.m,
            self.kind.n,
            j(&self.a),
            j(&self.b)
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[i64]| v.iter().map(|x| fmt_half(*x)).join(", ");
        write!(f, "({} | {})", j(&self.a), j(&self.b))
    }
}

/// The rho vector fixed by the distinguished Borel of each family.
pub fn rho(kind: SupergroupKind) -> Weight {
    let (m, n) = (kind.m as i64, kind.n as i64);
    let (a, b): (Vec<i64>, Vec<i64>) = match kind.family {
        // (m-n-2i)/2 and (m+n-2j+2)/2
        Family::Gl => (
            (1..=m).map(|i| m - n - 2 * i).collect(),
            (1..=n).map(|j| m + n - 2 * j + 2).collect(),
        ),
        Family::OspOdd => {
            let mut a = vec![-1; kind.m];
            let mut b = vec![1; kind.n];
            if m >= n {
                for i in 1..=(m - n) {
                    a[(i - 1) as usize] += 2 * (m - n - i + 1);
                }
            } else {
                for j in 1..=(n - m) {
                    b[(j - 1) as usize] += 2 * (n - m - j);
                }
            }
            (a, b)
        }
        Family::OspEven => {
            let mut a = vec![0; kind.m];
            let mut b = vec![0; kind.n];
            if m > n {
                for i in 1..=(m - n) {
                    a[(i - 1) as usize] = 2 * (m - n - i);
                }
            } else {
                for j in 1..=(n - m) {
                    b[(j - 1) as usize] = 2 * (n - m - j + 1);
                }
            }
            (a, b)
        }
    };
    Weight { kind, a, b }
}

/// Coordinate index of a letter: epsilon_i is `i`, delta_j is `m + j`.
fn letter_order(kind: SupergroupKind) -> Vec<usize> {
    let (m, n) = (kind.m, kind.n);
    let eps = |i: usize| i - 1;
    let del = |j: usize| m + j - 1;
    let mut out = Vec::with_capacity(m + n);
    match kind.family {
        Family::Gl => out.extend(0..m + n),
        Family::OspOdd if m >= n => {
            out.extend((1..=m - n + 1).map(eps));
            for j in 1..=n {
                out.push(del(j));
                if j < n {
                    out.push(eps(m - n + 1 + j));
                }
            }
        }
        Family::OspOdd => {
            out.extend((1..=n - m).map(del));
            for i in 1..=m {
                out.push(eps(i));
                out.push(del(n - m + i));
            }
        }
        Family::OspEven if m > n => {
            out.extend((1..=m - n).map(eps));
            for j in 1..=n {
                out.push(del(j));
                out.push(eps(m - n + j));
            }
        }
        Family::OspEven => {
            out.extend((1..=n - m + 1).map(del));
            for i in 1..=m {
                out.push(eps(i));
                if i < m {
                    out.push(del(n - m + 1 + i));
                }
            }
        }
    }
    out
}

/// A positive root as an integer coefficient vector in the epsilon/delta basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub odd: bool,
}

/// Positive roots of the Borel whose simple roots follow [`letter_order`].
pub fn positive_roots(kind: SupergroupKind) -> Vec<Root> {
    let order = letter_order(kind);
    let r = kind.rank();
    let is_delta = |c: usize| c >= kind.m;
    let unit = |c: usize, s: i64| {
        let mut v = vec![0; r];
        v[c] = s;
        v
    };
    let mut roots = Vec::new();
    for (x, &ci) in order.iter().enumerate() {
        for &cj in &order[x + 1..] {
            let odd = is_delta(ci) != is_delta(cj);
            let mut v = unit(ci, 1);
            v[cj] -= 1;
            roots.push(Root { coeffs: v, odd });
            if kind.is_osp() {
                let mut v = unit(ci, 1);
                v[cj] += 1;
                roots.push(Root { coeffs: v, odd });
            }
        }
    }
    if kind.is_osp() {
        for c in 0..r {
            if is_delta(c) {
                roots.push(Root {
                    coeffs: unit(c, 2),
                    odd: false,
                });
            }
            if kind.family == Family::OspOdd {
                roots.push(Root {
                    coeffs: unit(c, 1),
                    odd: is_delta(c),
                });
            }
        }
    }
    roots
}

/// Half the even positive roots minus half the odd ones, doubled.
pub fn rho_from_roots(kind: SupergroupKind) -> Weight {
    let mut v = vec![0i64; kind.rank()];
    for root in positive_roots(kind) {
        let s = if root.odd { -1 } else { 1 };
        for (x, c) in v.iter_mut().zip(&root.coeffs) {
            *x += s * c;
        }
    }
    Weight {
        kind,
        a: v[..kind.m].to_vec(),
        b: v[kind.m..].to_vec(),
    }
}

fn strictly_decreasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

/// Dominant regular region for `lambda + rho`.
pub fn in_lambda_plus(w: &Weight) -> bool {
    match w.kind.family {
        Family::Gl => strictly_decreasing(&w.a) && strictly_decreasing(&w.b),
        Family::OspOdd => {
            strictly_decreasing(&w.a)
                && strictly_decreasing(&w.b)
                && w.a.iter().chain(&w.b).all(|&x| x >= 1)
        }
        Family::OspEven => {
            let m = w.a.len();
            let head_ok =
                strictly_decreasing(&w.a[..m - 1]) && (m < 2 || w.a[m - 2] > w.a[m - 1].abs());
            head_ok && strictly_decreasing(&w.b) && w.b.iter().all(|&x| x > 0)
        }
    }
}

/// Signed permutation acting by `(w v)[i] = sign[i] * v[perm[i]]`, separately
/// on the epsilon and delta blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub a_perm: Vec<usize>,
    pub a_sign: Vec<i8>,
    pub b_perm: Vec<usize>,
    pub b_sign: Vec<i8>,
}

fn perm_sign(p: &[usize]) -> i8 {
    let mut seen = vec![false; p.len()];
    let mut s = 1i8;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

impl WeylElement {
    pub fn identity(kind: SupergroupKind) -> Self {
        WeylElement {
            a_perm: (0..kind.m).collect(),
            a_sign: vec![1; kind.m],
            b_perm: (0..kind.n).collect(),
            b_sign: vec![1; kind.n],
        }
    }

    /// The determinant, equal to the sign used in the Weyl numerator.
    pub fn sign(&self) -> i8 {
        let flips = self
            .a_sign
            .iter()
            .chain(&self.b_sign)
            .filter(|&&s| s < 0)
            .count();
        let f = if flips % 2 == 0 { 1 } else { -1 };
        perm_sign(&self.a_perm) * perm_sign(&self.b_perm) * f
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let act = |perm: &[usize], sign: &[i8], v: &[i64]| -> Vec<i64> {
            perm.iter()
                .zip(sign)
                .map(|(&p, &s)| s as i64 * v[p])
                .collect()
        };
        Weight {
            kind: w.kind,
            a: act(&self.a_perm, &self.a_sign, &w.a),
            b: act(&self.b_perm, &self.b_sign, &w.b),
        }
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

pub fn weyl_group_order(kind: SupergroupKind) -> u128 {
    let (m, n) = (kind.m, kind.n);
    let pow = |k: usize| 1u128.checked_shl(k as u32).unwrap_or(u128::MAX);
    match kind.family {
        Family::Gl => factorial(m).saturating_mul(factorial(n)),
        Family::OspOdd => factorial(m)
            .saturating_mul(pow(m))
            .saturating_mul(factorial(n))
            .saturating_mul(pow(n)),
        Family::OspEven => factorial(m)
            .saturating_mul(pow(m - 1))
            .saturating_mul(factorial(n))
            .saturating_mul(pow(n)),
    }
}

pub fn enumeration_cap() -> u128 {
    std::env::var(MAX_ENUM_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ENUM)
}

/// All elements of the Weyl group of the even part, refusing groups above the cap.
pub fn weyl_elements(kind: SupergroupKind) -> Result<Vec<WeylElement>> {
    weyl_elements_capped(kind, enumeration_cap())
}

pub fn weyl_elements_capped(kind: SupergroupKind, cap: u128) -> Result<Vec<WeylElement>> {
    let size = weyl_group_order(kind);
    if size > cap {
        return Err(Error::EnumerationCap { size, cap });
    }
    let signs = |k: usize, even_only: bool| -> Vec<Vec<i8>> {
        (0..1u64 << k)
            .filter(|mask| !even_only || mask.count_ones() % 2 == 0)
            .map(|mask| {
                (0..k)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect()
            })
            .collect()
    };
    let (a_signs, b_signs) = match kind.family {
        Family::Gl => (vec![vec![1; kind.m]], vec![vec![1; kind.n]]),
        Family::OspOdd => (signs(kind.m, false), signs(kind.n, false)),
        Family::OspEven => (signs(kind.m, true), signs(kind.n, false)),
    };
    let a_perms: Vec<Vec<usize>> = (0..kind.m).permutations(kind.m).collect();
    let b_perms: Vec<Vec<usize>> = (0..kind.n).permutations(kind.n).collect();
    let mut out = Vec::with_capacity(size as usize);
    for ap in &a_perms {
        for asg in &a_signs {
            for bp in &b_perms {
                for bsg in &b_signs {
                    out.push(WeylElement {
                        a_perm: ap.clone(),
                        a_sign: asg.clone(),
                        b_perm: bp.clone(),
                        b_sign: bsg.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Sorts `v` decreasingly, returning the sign of the sorting permutation, or
/// `None` when two entries coincide.
fn sort_desc_sign(v: &mut [i64]) -> Option<i8> {
    let mut sign = 1i8;
    // insertion sort keeps the transposition count
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Moves `v` into the dominant regular region by a Weyl element `w`,
/// returning `(det w, w v)`, or `None` when `v` has a nontrivial stabiliser
/// and the alternating sum vanishes.
pub fn normalize_euler(v: &Weight) -> Option<(i8, Weight)> {
    let kind = v.kind;
    let mut a = v.a.clone();
    let mut b = v.b.clone();
    let mut sign = 1i8;
    match kind.family {
        Family::Gl => {}
        Family::OspOdd => {
            for x in a.iter_mut().chain(b.iter_mut()) {
                if *x < 0 {
                    *x = -*x;
                    sign = -sign;
                }
            }
        }
        Family::OspEven => {
            if b.contains(&0) {
                return None;
            }
            for x in b.iter_mut() {
                if *x < 0 {
                    *x = -*x;
                    sign = -sign;
                }
            }
            let negatives = a.iter().filter(|&&x| x < 0).count();
            for x in a.iter_mut() {
                *x = x.abs();
            }
            let s = sort_desc_sign(&mut a)?;
            sign *= sort_desc_sign(&mut b)? * s;
            // D-type: an odd number of flips is only absorbed by a zero entry
            if negatives % 2 == 1 && a[kind.m - 1] != 0 {
                a[kind.m - 1] = -a[kind.m - 1];
            }
            return Some((sign, Weight { kind, a, b }));
        }
    }
    sign *= sort_desc_sign(&mut a)?;
    sign *= sort_desc_sign(&mut b)?;
    Some((sign, Weight { kind, a, b }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn k(f: Family, m: usize, n: usize) -> SupergroupKind {
        SupergroupKind::new(f, m, n).unwrap()
    }

    #[test]
    fn rho_small_cases() {
        let r = rho(k(Family::Gl, 1, 1));
        assert_eq!((r.a, r.b), (vec![-2], vec![2]));
        let r = rho(k(Family::OspOdd, 2, 1));
        assert_eq!((r.a, r.b), (vec![1, -1], vec![1]));
        let r = rho(k(Family::OspEven, 1, 1));
        assert_eq!((r.a, r.b), (vec![0], vec![0]));
        // m = n: the delta sum is empty
        let r = rho(k(Family::OspEven, 2, 2));
        assert_eq!((r.a, r.b), (vec![0, 0], vec![0, 0]));
        let r = rho(k(Family::OspEven, 1, 2));
        assert_eq!((r.a, r.b), (vec![0], vec![2, 0]));
    }

    #[test]
    fn rho_matches_roots_for_osp() {
        for f in [Family::OspOdd, Family::OspEven] {
            for m in 1..=4 {
                for n in 1..=4 {
                    let kind = k(f, m, n);
                    assert_eq!(rho(kind), rho_from_roots(kind), "{kind}");
                }
            }
        }
    }

    #[test]
    fn gl_rho_differs_by_supertrace() {
        for m in 1..=4 {
            for n in 1..=m {
                let kind = k(Family::Gl, m, n);
                let (r, t) = (rho(kind), rho_from_roots(kind));
                // difference is (-1/2, .., -1/2 | 1/2, .., 1/2), doubled
                assert!(r.a.iter().zip(&t.a).all(|(x, y)| x - y == -1));
                assert!(r.b.iter().zip(&t.b).all(|(x, y)| x - y == 1));
            }
        }
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_elements(k(Family::Gl, 2, 1)).unwrap().len(), 2);
        assert_eq!(weyl_elements(k(Family::OspOdd, 2, 1)).unwrap().len(), 16);
        assert_eq!(weyl_elements(k(Family::OspEven, 2, 1)).unwrap().len(), 8);
        for f in [Family::Gl, Family::OspOdd, Family::OspEven] {
            let kind = k(f, 3, 2);
            assert_eq!(
                weyl_elements(kind).unwrap().len() as u128,
                weyl_group_order(kind)
            );
        }
    }

    #[test]
    fn gl_rho_is_regular() {
        for f in [Family::Gl] {
            for m in 1..=3 {
                for n in 1..=3 {
                    if f == Family::Gl && m < n {
                        continue;
                    }
                    assert!(in_lambda_plus(&rho(k(f, m, n))), "{f:?} {m} {n}");
                }
            }
        }
    }

    #[test]
    fn normalize_osp_odd_example() {
        let kind = k(Family::OspOdd, 1, 1);
        let w = Weight::new(kind, vec![1], vec![-1]).unwrap();
        let (s, u) = normalize_euler(&w).unwrap();
        assert_eq!(s, -1);
        assert_eq!((u.a, u.b), (vec![1], vec![1]));
    }

    #[test]
    fn parse_and_print_weights() {
        let w = Weight::parse_text("group=osp-odd m=2 n=2 a=3/2,1/2 b=3/2,1/2", None).unwrap();
        assert_eq!(w.a, vec![3, 1]);
        assert_eq!(w.to_text(), "group=osp-odd m=2 n=2 a=3/2,1/2 b=3/2,1/2");
        assert!(Weight::parse_text("group=osp-odd m=1 n=1 a=1 b=1/2", None).is_err());
        assert!(Weight::parse_text("group=gl m=1 n=2 a=0 b=0,1", None).is_ok());
    }

    /// Brute force over W: the unique dominant regular point of the orbit and
    /// the signed count of elements reaching it.
    fn brute_normalize(v: &Weight) -> Option<(i8, Weight)> {
        let group = weyl_elements(v.kind).unwrap();
        let mut hits: HashMap<Weight, Vec<i8>> = HashMap::new();
        for w in &group {
            let u = w.apply(v);
            if in_lambda_plus(&u) {
                hits.entry(u).or_default().push(w.sign());
            }
        }
        if hits.is_empty() {
            return None;
        }
        assert_eq!(hits.len(), 1);
        let (u, signs) = hits.into_iter().next().unwrap();
        // regular points are reached by a single element
        if signs.len() != 1 {
            return None;
        }
        Some((signs[0], u))
    }

    #[test]
    fn normalize_matches_brute_force() {
        for f in [Family::Gl, Family::OspOdd, Family::OspEven] {
            let kind = k(f, 2, 2);
            let p = kind.coordinate_parity();
            let vals: Vec<i64> = (-5..=5).filter(|x: &i64| x.rem_euclid(2) == p).collect();
            for a0 in &vals {
                for a1 in &vals {
                    for b0 in &vals {
                        for b1 in &vals {
                            let w = Weight::new(kind, vec![*a0, *a1], vec![*b0, *b1]).unwrap();
                            assert_eq!(normalize_euler(&w), brute_normalize(&w), "{f:?} {w}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cap_is_respected() {
        let r = weyl_elements_capped(k(Family::OspOdd, 2, 1), 10);
        assert!(matches!(r, Err(Error::EnumerationCap { .. })));
    }
}
