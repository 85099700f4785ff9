//! Finitely presented connected graded algebras: noncommutative polynomials
//! over named generators, a small text grammar, and degreewise truncations.

pub(crate) mod cases;
mod truncated;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, Field, Scalar};
use crate::skew::split_signed_terms;

pub use cases::presentation_of_case;
pub use truncated::TruncatedAlgebra;

/// A word in the generators, as generator indices.
pub type Word = Vec<usize>;

/// A linear combination of words with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPolynomial {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl NcPolynomial {
    pub fn zero(field: Field) -> NcPolynomial {
        NcPolynomial { field, terms: BTreeMap::new() }
    }

    pub fn word(field: Field, word: Word) -> NcPolynomial {
        NcPolynomial::zero(field).add_term(word, field.one())
    }

    pub fn generator(field: Field, g: usize) -> NcPolynomial {
        NcPolynomial::word(field, vec![g])
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(field: Field, terms: I) -> NcPolynomial {
        terms.into_iter().fold(NcPolynomial::zero(field), |p, (w, c)| p.add_term(w, c))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    fn add_term(mut self, word: Word, c: Scalar) -> NcPolynomial {
        let sum = match self.terms.remove(&word) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(word, sum);
        }
        self
    }

    pub fn add_scaled(&self, other: &NcPolynomial, c: &Scalar) -> NcPolynomial {
        other.terms.iter().fold(self.clone(), |p, (w, x)| p.add_term(w.clone(), x * c))
    }

    pub fn add(&self, other: &NcPolynomial) -> NcPolynomial {
        self.add_scaled(other, &self.field.one())
    }

    pub fn sub(&self, other: &NcPolynomial) -> NcPolynomial {
        self.add_scaled(other, &-self.field.one())
    }

    pub fn scale(&self, c: &Scalar) -> NcPolynomial {
        NcPolynomial::zero(self.field).add_scaled(self, c)
    }

    pub fn mul(&self, other: &NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero(self.field);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out = out.add_term([u.as_slice(), v.as_slice()].concat(), a * b);
            }
        }
        out
    }

    /// `uv + vu`.
    pub fn anticommutator(&self, other: &NcPolynomial) -> NcPolynomial {
        self.mul(other).add(&other.mul(self))
    }

    /// `uv - vu`.
    pub fn commutator(&self, other: &NcPolynomial) -> NcPolynomial {
        self.mul(other).sub(&other.mul(self))
    }

    /// Every word read backwards.
    pub fn reversed(&self) -> NcPolynomial {
        NcPolynomial::from_terms(self.field, self.terms.iter().map(|(w, c)| (w.iter().rev().copied().collect(), c.clone())))
    }

    /// Common degree of the terms, `None` for zero.
    pub fn degree(&self, degrees: &[u32]) -> Result<Option<u32>> {
        let mut found = None;
        for w in self.terms.keys() {
            let d = word_degree(w, degrees);
            match found {
                None => found = Some(d),
                Some(e) if e != d => return Err(Error::Inhomogeneous(format!("terms of degrees {e} and {d}"))),
                _ => {}
            }
        }
        Ok(found)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            out.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let word = w.iter().map(|&g| names[g].as_str()).collect::<Vec<_>>().join("*");
            match (word.is_empty(), abs.is_one()) {
                (true, _) => out.push_str(&abs.to_string()),
                (false, true) => out.push_str(&word),
                (false, false) => out.push_str(&format!("{abs}*{word}")),
            }
        }
        out
    }
}

pub(crate) fn word_degree(word: &[usize], degrees: &[u32]) -> u32 {
    word.iter().map(|&g| degrees[g]).sum()
}

/// Generators with positive degrees and homogeneous relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    field: Field,
    names: Vec<String>,
    degrees: Vec<u32>,
    relations: Vec<NcPolynomial>,
}

impl AlgebraPresentation {
    pub fn new(field: Field, generators: &[(&str, u32)], relations: Vec<NcPolynomial>) -> Result<AlgebraPresentation> {
        let mut names: Vec<String> = Vec::new();
        for (name, deg) in generators {
            if !is_identifier(name) {
                return Err(Error::Parse(format!("bad generator name `{name}`")));
            }
            if names.iter().any(|n| n == name) {
                return Err(Error::Parse(format!("generator `{name}` declared twice")));
            }
            if *deg == 0 {
                return Err(Error::Presentation(format!("generator `{name}` has degree 0")));
            }
            names.push(name.to_string());
        }
        let degrees: Vec<u32> = generators.iter().map(|g| g.1).collect();
        let mut kept = Vec::new();
        for r in relations {
            if r.field() != field {
                return Err(Error::Parse(format!("relation over {} in a presentation over {field}", r.field())));
            }
            if r.terms().any(|(w, _)| w.iter().any(|&g| g >= names.len())) {
                return Err(Error::Parse("relation uses an undeclared generator".into()));
            }
            match r.degree(&degrees)? {
                None => {}
                Some(0) => return Err(Error::Presentation("relation of degree 0".into())),
                Some(_) => kept.push(r),
            }
        }
        Ok(AlgebraPresentation { field, names, degrees, relations: kept })
    }

    /// Parses `"gen x:1, y:1, z:2; rel x*y + y*x; rel ..."`.
    pub fn parse(field: Field, text: &str) -> Result<AlgebraPresentation> {
        let mut generators: Vec<(String, u32)> = Vec::new();
        let mut relation_texts = Vec::new();
        for stmt in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            if let Some(rest) = stmt.strip_prefix("gen") {
                for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let (name, deg) = item.split_once(':').ok_or_else(|| Error::Parse(format!("expected name:degree, got `{item}`")))?;
                    let deg = deg.trim().parse().map_err(|_| Error::Parse(format!("bad degree in `{item}`")))?;
                    generators.push((name.trim().to_string(), deg));
                }
            } else if let Some(rest) = stmt.strip_prefix("rel") {
                relation_texts.push(rest.trim().to_string());
            } else {
                return Err(Error::Parse(format!("expected `gen` or `rel`, got `{stmt}`")));
            }
        }
        let gens: Vec<(&str, u32)> = generators.iter().map(|(n, d)| (n.as_str(), *d)).collect();
        let shell = AlgebraPresentation::new(field, &gens, Vec::new())?;
        let relations = relation_texts.iter().map(|t| shell.polynomial(t)).collect::<Result<Vec<_>>>()?;
        AlgebraPresentation::new(field, &gens, relations)
    }

    /// Parses a polynomial in this presentation's generators, e.g. `"2*x*y - y^2"`.
    pub fn polynomial(&self, text: &str) -> Result<NcPolynomial> {
        let field = self.field;
        let mut out = NcPolynomial::zero(field);
        for (negative, term) in split_signed_terms(text)? {
            let mut coeff = field.one();
            let mut word = Word::new();
            for tok in term.split(|c: char| c == '*' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                if tok.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff = coeff * field.from_rational(&parse_rational(tok)?)?;
                    continue;
                }
                let (name, exp) = match tok.split_once('^') {
                    Some((n, e)) => (n, e.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?),
                    None => (tok, 1),
                };
                let g = self.generator_index(name).ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))?;
                word.extend(std::iter::repeat_n(g, exp));
            }
            if negative {
                coeff = -coeff;
            }
            out = out.add_scaled(&NcPolynomial::word(field, word), &coeff);
        }
        out.degree(&self.degrees)?;
        Ok(out)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn relations(&self) -> &[NcPolynomial] {
        &self.relations
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generator(&self, name: &str) -> NcPolynomial {
        let g = self.generator_index(name).unwrap_or_else(|| panic!("no generator `{name}`"));
        NcPolynomial::generator(self.field, g)
    }

    pub fn relation_degrees(&self) -> Vec<u32> {
        self.relations.iter().map(|r| r.degree(&self.degrees).ok().flatten().unwrap_or(0)).collect()
    }

    /// The presentation with every word reversed.
    pub fn opposite(&self) -> AlgebraPresentation {
        AlgebraPresentation { relations: self.relations.iter().map(NcPolynomial::reversed).collect(), ..self.clone() }
    }

    pub fn with_relations(&self, extra: Vec<NcPolynomial>) -> Result<AlgebraPresentation> {
        let gens: Vec<(&str, u32)> = self.names.iter().map(String::as_str).zip(self.degrees.iter().copied()).collect();
        AlgebraPresentation::new(self.field, &gens, self.relations.iter().cloned().chain(extra).collect())
    }

    pub fn truncate(&self, bound: u32) -> Result<TruncatedAlgebra> {
        TruncatedAlgebra::new(self, bound)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.names.iter().zip(&self.degrees).map(|(n, d)| format!("{n}:{d}")).collect();
        match gens.is_empty() {
            true => write!(f, "gen")?,
            false => write!(f, "gen {}", gens.join(", "))?,
        }
        for r in &self.relations {
            write!(f, "; rel {}", r.render(&self.names))?;
        }
        Ok(())
    }
}

impl Serialize for AlgebraPresentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
