//! Projective indecomposables as combinations of Euler characteristics.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::charring::{euler_character, Laurent};
use crate::diagrams::{
    bar_weight, p_set, p_set_moves, prime_shift, unprime_shift, Sign, Symbol, WeightDiagram,
};
use crate::error::{Error, Result};
use crate::kgroup::{Basis, KElement, TermJson};
use crate::lattice::Family;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PimDecomposition {
    pub source: WeightDiagram,
    /// Coefficients `a(source, mu)` over the Euler basis.
    pub terms: KElement,
}

#[derive(Serialize)]
struct DecompositionJson<'a> {
    source: String,
    basis: &'a str,
    terms: Vec<TermJson>,
}

impl PimDecomposition {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DecompositionJson {
            source: self.source.to_string(),
            basis: self.terms.basis.name(),
            terms: self.terms.to_json_terms(),
        })
        .expect("plain data")
    }
}

fn unit_sum(d: &WeightDiagram) -> Result<KElement> {
    KElement::from_terms(Basis::Euler, p_set(d)?.into_iter().map(|nu| (nu, 1)))
}

/// Signed cap moves of the bar weight of an odd diagram with a tail.
fn odd_tailed(d: &WeightDiagram) -> Result<KElement> {
    let bar = bar_weight(d)?;
    let x = bar.emerald.len();
    let flip_tail = d.sign() == Some(Sign::Plus);
    let mut out = KElement::zero(Basis::Euler);
    for (nu, moved) in p_set_moves(&bar.diagram)? {
        let y = moved.intersection(&bar.emerald).count();
        let mut c = if (x + y) % 2 == 0 { 1 } else { -1 };
        if flip_tail && nu.tail_crosses() > 0 {
            c = -c;
        }
        out.add_term(nu, c)?;
    }
    Ok(out)
}

fn odd_decomposition(d: &WeightDiagram) -> Result<KElement> {
    if d.is_tailless() {
        unit_sum(d)
    } else {
        odd_tailed(d)
    }
}

/// Runs the odd algorithm on the half-shifted weights and keeps the terms
/// without a cross at the tail.
fn even_tailed(d: &WeightDiagram) -> Result<KElement> {
    let signs: Vec<Option<Sign>> = if d.tail().core == Some(Symbol::Gt) {
        vec![None]
    } else {
        vec![Some(Sign::Plus), Some(Sign::Minus)]
    };
    let mut images: Vec<BTreeMap<WeightDiagram, i64>> = Vec::new();
    for s in signs {
        let shifted = prime_shift(d, s)?.diagram;
        let dec = odd_decomposition(&shifted)?;
        images.push(
            dec.iter()
                .filter(|(nu, _)| nu.tail_crosses() == 0)
                .map(|(nu, c)| (nu.clone(), *c))
                .collect(),
        );
    }
    if images.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Internal(format!(
            "the two shifted weights of {d} disagree"
        )));
    }
    let block = d.block_label();
    let mut out = KElement::zero(Basis::Euler);
    for (nu, c) in &images[0] {
        let brackets: Vec<Option<Sign>> = if nu.tail().is_empty() {
            vec![Some(Sign::Plus), Some(Sign::Minus)]
        } else {
            vec![None]
        };
        for b in brackets {
            let back = unprime_shift(nu, b)?;
            if back.block_label() == block {
                out.add_term(back, *c)?;
            }
        }
    }
    Ok(out)
}

/// `[P(d)] = sum a(d, mu) E(mu)`.
pub fn pim_decomposition(d: &WeightDiagram) -> Result<PimDecomposition> {
    let terms = match d.kind().family {
        _ if d.is_tailless() => unit_sum(d)?,
        Family::Gl => unreachable!("GL diagrams are tailless"),
        Family::OspOdd => odd_tailed(d)?,
        Family::OspEven => even_tailed(d)?,
    };
    Ok(PimDecomposition {
        source: d.clone(),
        terms,
    })
}

/// `b(nu, lam)`: the signed multiplicity of `L(lam)` in `E(nu)`, read off as `a(lam, nu)`.
pub fn bgg_multiplicity(nu: &WeightDiagram, lam: &WeightDiagram) -> Result<i64> {
    if nu.kind() != lam.kind() {
        return Err(Error::KindMismatch);
    }
    nu.require_tailless()?;
    Ok(pim_decomposition(lam)?.terms.coeff(nu))
}

/// Character of `P(d)`.
pub fn pim_character(d: &WeightDiagram) -> Result<Laurent> {
    let dec = pim_decomposition(d)?;
    let mut out = Laurent::zero();
    for (mu, c) in dec.terms.iter() {
        out = out.add(&euler_character(mu)?.scale(*c)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SupergroupKind;

    fn dec(kind: SupergroupKind, s: &str) -> Vec<(String, i64)> {
        pim_decomposition(&WeightDiagram::parse(kind, s).unwrap())
            .unwrap()
            .terms
            .sorted_terms()
    }

    fn owned(v: &[(&str, i64)]) -> Vec<(String, i64)> {
        let mut v: Vec<(String, i64)> = v.iter().map(|(s, c)| (s.to_string(), *c)).collect();
        v.sort();
        v
    }

    #[test]
    fn odd_tail_signs() {
        let k = SupergroupKind::osp_odd(2, 2).unwrap();
        assert_eq!(dec(k, "x1>; <"), owned(&[(">; < x", -1), (">; < o x", 1)]));
        assert_eq!(
            dec(k, "(+) x2;"),
            owned(&[
                ("(+) x1; o x", -1),
                ("; x x", -1),
                ("(+) x1; o o x", 1),
                ("; x o x", 1)
            ])
        );
        assert_eq!(
            dec(k, "(-) x2;"),
            owned(&[
                ("(+) x1; o x", 1),
                ("; x x", -1),
                ("(+) x1; o o x", -1),
                ("; x o x", 1)
            ])
        );
    }

    #[test]
    fn even_two_brackets() {
        let k = SupergroupKind::osp_even(2, 1).unwrap();
        assert_eq!(
            dec(k, "x1; o >"),
            owned(&[("[+] ; x >", 1), ("[-] ; x >", 1)])
        );
        assert_eq!(dec(k, "x1>;"), owned(&[(">; x", -1), (">; o x", 1)]));
    }

    #[test]
    fn typical_is_singleton() {
        let k = SupergroupKind::osp_even(2, 1).unwrap();
        assert_eq!(dec(k, ">; > <"), owned(&[(">; > <", 1)]));
        let d = WeightDiagram::parse(k, ">; > <").unwrap();
        assert_eq!(bgg_multiplicity(&d, &d).unwrap(), 1);
    }

    #[test]
    fn gl_decomposition_is_cap_moves() {
        let k = SupergroupKind::gl(1, 1).unwrap();
        let d = WeightDiagram::parse(k, "@0 x").unwrap();
        assert_eq!(pim_decomposition(&d).unwrap().terms.len(), 2);
        let ch = pim_character(&d).unwrap();
        assert!(ch.iter().all(|(_, c)| *c > 0));
    }

    #[test]
    fn json_shape() {
        let k = SupergroupKind::osp_odd(2, 2).unwrap();
        let d = WeightDiagram::parse(k, "x1>; <").unwrap();
        let j = pim_decomposition(&d).unwrap().to_json();
        assert_eq!(j["source"], "x1>; <");
        assert_eq!(j["basis"], "euler");
        assert_eq!(j["terms"][0]["diagram"], ">; < o x");
        assert_eq!(j["terms"][1]["coeff"], -1);
    }
}
