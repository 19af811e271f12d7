//! Formal characters as Laurent polynomials with doubled exponents, Weyl
//! numerators, the even/odd denominators and exact division.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::diagrams::WeightDiagram;
use crate::error::{Error, Result};
use crate::lattice::{
    fmt_half, positive_roots, rho, rho_from_roots, weyl_elements, Family, SupergroupKind, Weight,
};

/// Finite sum `sum c_v e^v`; exponents are doubled weight vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: BTreeMap<Vec<i64>, i64>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent::default()
    }

    pub fn monomial(exp: Vec<i64>, c: i64) -> Laurent {
        let mut l = Laurent::zero();
        if c != 0 {
            l.terms.insert(exp, c);
        }
        l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[i64]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &i64)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let e = self.terms.entry(exp).or_insert(0);
        *e = e.checked_add(c).ok_or(Error::Overflow)?;
        if *e == 0 {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| **v == 0)
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
        Ok(())
    }

    fn add_term_at(&mut self, exp: &[i64], c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.get_mut(exp) {
            Some(v) => {
                *v = v.checked_add(c).ok_or(Error::Overflow)?;
                if *v == 0 {
                    self.terms.remove(exp);
                }
            }
            None => {
                self.terms.insert(exp.to_vec(), c);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Laurent) -> Result<Laurent> {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term_at(e, *c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<Laurent> {
        let mut out = Laurent::zero();
        if k == 0 {
            return Ok(out);
        }
        for (e, c) in &self.terms {
            out.terms
                .insert(e.clone(), c.checked_mul(k).ok_or(Error::Overflow)?);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Laurent) -> Result<Laurent> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = add_exp(e1, e2)?;
                out.add_term_at(&e, c1.checked_mul(*c2).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by `e^beta + s e^-beta`.
    pub fn mul_binomial(&self, beta: &[i64], s: i64) -> Result<Laurent> {
        let neg: Vec<i64> = beta.iter().map(|x| -x).collect();
        let mut out = Laurent::zero();
        for (e, c) in &self.terms {
            out.add_term_at(&add_exp(e, beta)?, *c)?;
            out.add_term_at(&add_exp(e, &neg)?, c.checked_mul(s).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    /// Exact division by `e^beta - e^-beta`, peeling off the lex-leading term.
    pub fn div_binomial(&self, beta: &[i64]) -> Result<Laurent> {
        if self.is_zero() {
            return Ok(Laurent::zero());
        }
        // make the leading exponent of the divisor lex-positive
        let zero = vec![0; beta.len()];
        let (beta, sign): (Vec<i64>, i64) = if beta > zero.as_slice() {
            (beta.to_vec(), 1)
        } else {
            (beta.iter().map(|x| -x).collect(), -1)
        };
        if beta == zero {
            return Err(Error::InexactDivision("zero root".into()));
        }
        let two_beta: Vec<i64> = beta.iter().map(|x| 2 * x).collect();
        let lowest = self.terms.keys().next().cloned().unwrap_or_default();
        let floor = add_exp(&lowest, &beta)?;
        let mut rest = self.terms.clone();
        let mut q = Laurent::zero();
        while let Some((mu, c)) = rest.pop_last() {
            let qe = sub_exp(&mu, &beta)?;
            if qe < floor {
                return Err(Error::InexactDivision(format!(
                    "e^{} - e^-{}",
                    fmt_exp(&beta),
                    fmt_exp(&beta)
                )));
            }
            q.add_term_at(&qe, c.checked_mul(sign).ok_or(Error::Overflow)?)?;
            let low = sub_exp(&mu, &two_beta)?;
            let v = rest.entry(low.clone()).or_insert(0);
            *v = v.checked_add(c).ok_or(Error::Overflow)?;
            if *v == 0 {
                rest.remove(&low);
            }
        }
        Ok(q)
    }
}

fn add_exp(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow))
        .collect()
}

fn sub_exp(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y).ok_or(Error::Overflow))
        .collect()
}

fn fmt_exp(e: &[i64]) -> String {
    e.iter().map(|x| fmt_half(*x)).join(",")
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let s = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| format!("{c}*e[{}]", fmt_exp(e)))
            .join(" + ");
        f.write_str(&s)
    }
}

/// `sum_w det(w) e^{w v}` over the Weyl group of the even part.
pub fn weyl_numerator(v: &Weight) -> Result<Laurent> {
    let mut out = Laurent::zero();
    for w in weyl_elements(v.kind)? {
        out.add_term_at(&w.apply(v).coords(), w.sign() as i64)?;
    }
    Ok(out)
}

/// Product over even positive roots of `e^{alpha/2} - e^{-alpha/2}`.
pub fn even_denominator(kind: SupergroupKind) -> Result<Laurent> {
    let mut d = Laurent::monomial(vec![0; kind.rank()], 1);
    for r in positive_roots(kind).into_iter().filter(|r| !r.odd) {
        d = d.mul_binomial(&r.coeffs, -1)?;
    }
    Ok(d)
}

/// Product over odd positive roots of `e^{alpha/2} + e^{-alpha/2}`.
pub fn odd_numerator(kind: SupergroupKind) -> Result<Laurent> {
    let mut d = Laurent::monomial(vec![0; kind.rank()], 1);
    for r in positive_roots(kind).into_iter().filter(|r| r.odd) {
        d = d.mul_binomial(&r.coeffs, 1)?;
    }
    Ok(d)
}

/// `lambda + rho` for the rho of the root system. Diagrams of GL use a rho
/// that differs from it by a W-invariant vector; for osp the two agree.
pub fn character_weight(d: &WeightDiagram) -> Result<Weight> {
    let kind = d.kind();
    let w = d.to_weight();
    let (ra, rb) = (rho(kind), rho_from_roots(kind));
    let shift = |v: &[i64], p: &[i64], q: &[i64]| -> Result<Vec<i64>> {
        v.iter().zip(p.iter().zip(q)).map(|(x, (p, q))| x.checked_add(q - p).ok_or(Error::Overflow)).collect()
    };
    // off the GL lattice by half a unit, so built without the parity check
    Ok(Weight { kind, a: shift(&w.a, &ra.a, &rb.a)?, b: shift(&w.b, &ra.b, &rb.b)? })
}

/// Character of the Euler characteristic of a tailless label.
pub fn euler_character(d: &WeightDiagram) -> Result<Laurent> {
    d.require_tailless()?;
    let kind = d.kind();
    let mut f = weyl_numerator(&character_weight(d)?)?;
    for r in positive_roots(kind).into_iter().filter(|r| r.odd) {
        f = f.mul_binomial(&r.coeffs, 1)?;
    }
    for r in positive_roots(kind).into_iter().filter(|r| !r.odd) {
        f = f.div_binomial(&r.coeffs)?;
    }
    Ok(f)
}

/// Weights of the standard module, doubled.
pub fn standard_weights(kind: SupergroupKind) -> Vec<Vec<i64>> {
    let r = kind.rank();
    let unit = |c: usize, s: i64| {
        let mut v = vec![0; r];
        v[c] = 2 * s;
        v
    };
    let mut out: Vec<Vec<i64>> = (0..r).map(|c| unit(c, 1)).collect();
    if kind.is_osp() {
        out.extend((0..r).map(|c| unit(c, -1)));
    }
    if kind.family == Family::OspOdd {
        out.push(vec![0; r]);
    }
    out
}

/// Weights of the dual of the standard module.
pub fn dual_standard_weights(kind: SupergroupKind) -> Vec<Vec<i64>> {
    standard_weights(kind)
        .into_iter()
        .map(|v| v.into_iter().map(|x| -x).collect())
        .collect()
}

pub fn standard_character(kind: SupergroupKind) -> Laurent {
    let mut out = Laurent::zero();
    for v in standard_weights(kind) {
        out.add_term_at(&v, 1).expect("small coefficients");
    }
    out
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

/// Rank of a family of Laurent polynomials over `Z/p`, `p = 2^61 - 1`.
pub fn rank_mod_p(polys: &[Laurent]) -> usize {
    let to_mod = |c: i64| -> u64 { (c as i128).rem_euclid(PRIME as i128) as u64 };
    let mut pivots: Vec<(Vec<i64>, BTreeMap<Vec<i64>, u64>)> = Vec::new();
    for p in polys {
        let mut row: BTreeMap<Vec<i64>, u64> = p
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), to_mod(*c)))
            .collect();
        row.retain(|_, v| *v != 0);
        for (lead, prow) in &pivots {
            let Some(&c) = row.get(lead) else { continue };
            // prow is normalised to 1 at lead
            for (e, v) in prow {
                let cur = row.get(e).copied().unwrap_or(0);
                let new = (cur + PRIME - mulmod(c, *v)) % PRIME;
                if new == 0 {
                    row.remove(e);
                } else {
                    row.insert(e.clone(), new);
                }
            }
        }
        if let Some((lead, &c)) = row.iter().next_back() {
            let lead = lead.clone();
            let inv = powmod(c, PRIME - 2);
            for v in row.values_mut() {
                *v = mulmod(*v, inv);
            }
            pivots.push((lead, row));
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::in_lambda_plus;

    fn kind(f: Family, m: usize, n: usize) -> SupergroupKind {
        SupergroupKind::new(f, m, n).unwrap()
    }

    #[test]
    fn division_round_trips() {
        let f = Laurent::monomial(vec![3, 1], 2)
            .add(&Laurent::monomial(vec![-1, 5], -7))
            .unwrap();
        for beta in [vec![1, 0], vec![1, -1], vec![-1, 1], vec![0, 2]] {
            let g = f.mul_binomial(&beta, -1).unwrap();
            assert_eq!(g.div_binomial(&beta).unwrap(), f);
        }
    }

    #[test]
    fn inexact_division_is_refused() {
        let f = Laurent::monomial(vec![2, 0], 1);
        assert!(matches!(
            f.div_binomial(&[1, 0]),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn trivial_gl_euler_character() {
        // the trivial GL(1|1) module: lambda = 0
        let k = kind(Family::Gl, 1, 1);
        let d = WeightDiagram::from_weight(&crate::lattice::rho(k)).unwrap();
        let ch = euler_character(&d).unwrap();
        // Kac module of the trivial weight: e^0 + e^{-(eps - delta)}
        let mut want = Laurent::monomial(vec![0, 0], 1);
        want.add_term(vec![-2, 2], 1).unwrap();
        assert_eq!(ch, want);
    }

    #[test]
    fn osp_small_character_is_nonzero() {
        let k = kind(Family::OspOdd, 1, 1);
        let d = WeightDiagram::parse(k, "(+) x1;").unwrap();
        let ch = euler_character(&d).unwrap();
        assert!(ch.iter().map(|(_, c)| *c).sum::<i64>() != 0);
    }

    #[test]
    fn weyl_numerator_vanishes_off_regular_points() {
        let k = kind(Family::OspEven, 2, 1);
        let w = Weight::new(k, vec![2, 2], vec![2]).unwrap();
        assert!(weyl_numerator(&w).unwrap().is_zero());
    }

    #[test]
    fn euler_characters_are_independent() {
        for f in [Family::Gl, Family::OspOdd, Family::OspEven] {
            let k = kind(f, 2, 1);
            let p = k.coordinate_parity();
            let vals: Vec<i64> = (-8..=8).filter(|x: &i64| x.rem_euclid(2) == p).collect();
            let mut chars = Vec::new();
            for a0 in &vals {
                for a1 in &vals {
                    for b0 in &vals {
                        let w = Weight::new(k, vec![*a0, *a1], vec![*b0]).unwrap();
                        if in_lambda_plus(&w) {
                            let d = WeightDiagram::from_weight(&w).unwrap();
                            chars.push(euler_character(&d).unwrap());
                        }
                    }
                }
            }
            assert!(chars.len() > 5, "{f:?} {}", chars.len());
            assert_eq!(rank_mod_p(&chars), chars.len(), "{f:?}");
        }
    }

    #[test]
    fn standard_character_sizes() {
        assert_eq!(standard_character(kind(Family::Gl, 2, 2)).len(), 4);
        assert_eq!(standard_character(kind(Family::OspOdd, 2, 2)).len(), 9);
        assert_eq!(standard_character(kind(Family::OspEven, 2, 2)).len(), 8);
    }

    #[test]
    fn display_format() {
        let l = Laurent::monomial(vec![3, 1], -2);
        assert_eq!(l.to_string(), "-2*e[3/2,1/2]");
    }
}
