//! Finite integer combinations of diagram labels in one of three bases.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::WeightDiagram;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Euler characteristics.
    Euler,
    /// Projective indecomposables.
    Pim,
    /// Simple modules.
    Simple,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::Euler => 'E',
            Basis::Pim => 'P',
            Basis::Simple => 'L',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Euler => "euler",
            Basis::Pim => "pim",
            Basis::Simple => "simple",
        }
    }

    pub fn from_name(s: &str) -> Result<Basis> {
        match s {
            "euler" | "E" => Ok(Basis::Euler),
            "pim" | "P" => Ok(Basis::Pim),
            "simple" | "L" => Ok(Basis::Simple),
            _ => Err(Error::parse(0, format!("unknown basis `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KElement {
    pub basis: Basis,
    terms: BTreeMap<WeightDiagram, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: i64,
    pub diagram: String,
}

impl KElement {
    pub fn zero(basis: Basis) -> KElement {
        KElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(basis: Basis, d: WeightDiagram) -> KElement {
        KElement {
            basis,
            terms: BTreeMap::from([(d, 1)]),
        }
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (WeightDiagram, i64)>,
    ) -> Result<KElement> {
        let mut out = KElement::zero(basis);
        for (d, c) in terms {
            out.add_term(d, c)?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, d: &WeightDiagram) -> i64 {
        self.terms.get(d).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightDiagram, &i64)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, d: WeightDiagram, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let v = self.terms.entry(d).or_insert(0);
        *v = v.checked_add(c).ok_or(Error::Overflow)?;
        if *v == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
        Ok(())
    }

    pub fn add(&self, other: &KElement) -> Result<KElement> {
        if self.basis != other.basis {
            return Err(Error::Internal(format!(
                "adding {} and {} elements",
                self.basis.name(),
                other.basis.name()
            )));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), *c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &KElement) -> Result<KElement> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, k: i64) -> Result<KElement> {
        let mut out = KElement::zero(self.basis);
        if k == 0 {
            return Ok(out);
        }
        for (d, c) in &self.terms {
            out.terms
                .insert(d.clone(), c.checked_mul(k).ok_or(Error::Overflow)?);
        }
        Ok(out)
    }

    /// Applies a linear map given on basis labels.
    pub fn map_linear(
        &self,
        basis: Basis,
        mut f: impl FnMut(&WeightDiagram) -> Result<KElement>,
    ) -> Result<KElement> {
        let mut out = KElement::zero(basis);
        for (d, c) in &self.terms {
            let img = f(d)?;
            out = out.add(&img.scale(*c)?)?;
        }
        Ok(out)
    }

    /// Terms ordered by their printed diagram.
    pub fn sorted_terms(&self) -> Vec<(String, i64)> {
        let mut v: Vec<(String, i64)> = self
            .terms
            .iter()
            .map(|(d, c)| (d.to_string(), *c))
            .collect();
        v.sort();
        v
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.sorted_terms()
            .into_iter()
            .map(|(diagram, coeff)| TermJson { coeff, diagram })
            .collect()
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let lines: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(d, c)| format!("{c:+} * {}({d})", self.basis.letter()))
            .collect();
        f.write_str(&lines.join("\n"))
    }
}
