//! The graded skew polynomial algebra `k<x1,x2,x3>/(x_i x_j + x_j x_i, i != j)`
//! with all generators in degree 1.
//!
//! Elements are stored in the normal-form basis `x1^a x2^b x3^c`. Moving a
//! generator past a different one costs a sign, so the product of two normal
//! monomials is again a normal monomial up to sign.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, Field, Scalar};

/// `x1^a x2^b x3^c`, with exponents `[a, b, c]`.
///
/// Ordered so that, within a degree, the sequence matches
/// [`degree_basis`]: `x1^2 < x1 x2 < x1 x3 < x2^2 < x2 x3 < x3^2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub exps: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(a: u32, b: u32, c: u32) -> Monomial {
        Monomial { exps: [a, b, c] }
    }

    pub fn generator(i: usize) -> Monomial {
        let mut exps = [0; 3];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Returns `(negative, product)`; the sign is
    /// `(-1)^(a2 (b1 + c1) + b2 c1)`.
    pub fn mul(&self, other: &Monomial) -> (bool, Monomial) {
        let [a1, b1, c1] = self.exps;
        let [a2, b2, c2] = other.exps;
        let negative = (a2 * (b1 + c1) + b2 * c1) % 2 == 1;
        (negative, Monomial::new(a1 + a2, b1 + b2, c1 + c2))
    }

    /// Position in [`degree_basis`] of this monomial's degree.
    pub fn index(&self) -> usize {
        let d = self.degree() as usize;
        let [a, b, _] = self.exps.map(|e| e as usize);
        (d - a) * (d - a + 1) / 2 + (d - a - b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All `C(d+2, 2)` monomials of degree `d`, lexicographically descending in
/// the exponent triple.
pub fn degree_basis(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(dim(d));
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push(Monomial::new(a, b, d - a - b));
        }
    }
    out
}

/// `dim A^d = C(d+2, 2)`.
pub fn dim(d: u32) -> usize {
    let d = d as usize;
    (d + 1) * (d + 2) / 2
}

/// A homogeneous element; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedElement {
    field: Field,
    degree: u32,
    terms: BTreeMap<Monomial, Scalar>,
}

impl GradedElement {
    pub fn zero(field: Field, degree: u32) -> GradedElement {
        GradedElement { field, degree, terms: BTreeMap::new() }
    }

    pub fn one(field: Field) -> GradedElement {
        GradedElement::monomial(Monomial::ONE, field.one())
    }

    pub fn monomial(m: Monomial, coeff: Scalar) -> GradedElement {
        let mut e = GradedElement::zero(coeff.field(), m.degree());
        e.add_term(m, coeff);
        e
    }

    /// `x_i` for `i` in `0..3`.
    pub fn generator(field: Field, i: usize) -> GradedElement {
        GradedElement::monomial(Monomial::generator(i), field.one())
    }

    /// `c1 x1 + c2 x2 + c3 x3`.
    pub fn linear(coeffs: &[Scalar]) -> GradedElement {
        let field = coeffs[0].field();
        let mut e = GradedElement::zero(field, 1);
        for (i, c) in coeffs.iter().enumerate() {
            e.add_term(Monomial::generator(i), c.clone());
        }
        e
    }

    /// `c1 x1^2 + c2 x2^2 + c3 x3^2`.
    pub fn squares(coeffs: &[Scalar]) -> GradedElement {
        let field = coeffs[0].field();
        let mut e = GradedElement::zero(field, 2);
        for (i, c) in coeffs.iter().enumerate() {
            let mut exps = [0; 3];
            exps[i] = 2;
            e.add_term(Monomial { exps }, c.clone());
        }
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(field: Field, degree: u32, terms: I) -> Result<GradedElement> {
        let mut e = GradedElement::zero(field, degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::Inhomogeneous(format!("{m} in degree {degree}")));
            }
            e.add_term(m, c);
        }
        Ok(e)
    }

    /// Coordinates in [`degree_basis`] order.
    pub fn from_vector(field: Field, degree: u32, v: &[Scalar]) -> GradedElement {
        assert_eq!(v.len(), dim(degree), "coordinate vector length");
        let mut e = GradedElement::zero(field, degree);
        for (m, c) in degree_basis(degree).into_iter().zip(v) {
            e.add_term(m, c.clone());
        }
        e
    }

    pub fn to_vector(&self) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); dim(self.degree)];
        for (m, c) in &self.terms {
            v[m.index()] = c.clone();
        }
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_compatible(&self, other: &GradedElement) {
        assert_eq!(self.field, other.field, "elements over different fields");
    }

    /// Sum of two elements of the same degree. A zero element of another
    /// degree is accepted and ignored.
    pub fn add(&self, other: &GradedElement) -> GradedElement {
        self.add_scaled(other, &self.field.one())
    }

    pub fn sub(&self, other: &GradedElement) -> GradedElement {
        self.add_scaled(other, &-self.field.one())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &GradedElement, c: &Scalar) -> GradedElement {
        self.check_compatible(other);
        if other.is_zero() {
            return self.clone();
        }
        let mut out = if self.is_zero() { GradedElement::zero(self.field, other.degree) } else { self.clone() };
        assert_eq!(out.degree, other.degree, "adding elements of different degrees");
        for (m, x) in &other.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> GradedElement {
        let mut out = GradedElement::zero(self.field, self.degree);
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    pub fn neg(&self) -> GradedElement {
        self.scale(&-self.field.one())
    }

    pub fn mul(&self, other: &GradedElement) -> GradedElement {
        self.check_compatible(other);
        let mut out = GradedElement::zero(self.field, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let (negative, m) = m1.mul(m2);
                let c = c1 * c2;
                out.add_term(m, if negative { -c } else { c });
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> GradedElement {
        (0..n).fold(GradedElement::one(self.field), |acc, _| acc.mul(self))
    }

    /// Parses the rendering grammar, e.g. `"x1^2 x2 - 3/2*x1 x3^2 + x2^3"`.
    /// Coefficients may be joined to monomials by `*`, `·` or whitespace;
    /// factors inside a monomial may be repeated and are multiplied in the
    /// order written, so `"x2 x1"` parses to `-x1 x2`.
    pub fn parse(field: Field, text: &str) -> Result<GradedElement> {
        let mut result: Option<GradedElement> = None;
        for (negative, term) in split_signed_terms(text)? {
            let mut coeff = field.one();
            let mut factor = GradedElement::one(field);
            for tok in term.split(|c: char| c == '*' || c == '·' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                if let Some(rest) = tok.strip_prefix('x') {
                    let (idx, exp) = match rest.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?),
                        None => (rest, 1),
                    };
                    let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad generator `{tok}`")))?;
                    if !(1..=3).contains(&i) {
                        return Err(Error::Parse(format!("generator `{tok}` out of range x1..x3")));
                    }
                    factor = factor.mul(&GradedElement::generator(field, i - 1).pow(exp));
                } else {
                    coeff = coeff * field.from_rational(&parse_rational(tok)?)?;
                }
            }
            if negative {
                coeff = -coeff;
            }
            let term = factor.scale(&coeff);
            result = Some(match result {
                None => term,
                Some(acc) => {
                    if acc.degree != term.degree {
                        return Err(Error::Inhomogeneous(text.to_string()));
                    }
                    acc.add(&term)
                }
            });
        }
        result.ok_or_else(|| Error::Parse("empty element".into()))
    }
}

pub(crate) fn split_signed_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    let mut expect_term = true;
    for ch in text.chars() {
        match ch {
            '+' | '-' if !current.trim().is_empty() && !current.trim_end().ends_with('^') => {
                out.push((negative, current.trim().to_string()));
                current.clear();
                negative = ch == '-';
                expect_term = true;
            }
            '+' | '-' if current.trim().is_empty() => {
                if ch == '-' {
                    negative = !negative;
                }
            }
            _ => {
                current.push(ch);
                expect_term = false;
            }
        }
    }
    if expect_term || current.trim().is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{text}`")));
    }
    out.push((negative, current.trim().to_string()));
    Ok(out)
}

impl Serialize for GradedElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}·{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn el(s: &str) -> GradedElement {
        GradedElement::parse(Q, s).unwrap()
    }

    #[test]
    fn monomial_signs() {
        let (x1, x2, x3) = (Monomial::generator(0), Monomial::generator(1), Monomial::generator(2));
        assert_eq!(x1.mul(&x2), (false, Monomial::new(1, 1, 0)));
        assert_eq!(x2.mul(&x1), (true, Monomial::new(1, 1, 0)));
        assert_eq!(Monomial::new(0, 1, 1).mul(&x1), (false, Monomial::new(1, 1, 1)));
        assert_eq!(x3.mul(&x3), (false, Monomial::new(0, 0, 2)));
    }

    #[test]
    fn basis_sizes_and_order() {
        assert_eq!(degree_basis(0), vec![Monomial::ONE]);
        let b2: Vec<String> = degree_basis(2).iter().map(|m| m.to_string()).collect();
        assert_eq!(b2, ["x1^2", "x1 x2", "x1 x3", "x2^2", "x2 x3", "x3^2"]);
        assert_eq!(degree_basis(3).len(), 10);
        for d in 0..8 {
            for (i, m) in degree_basis(d).iter().enumerate() {
                assert_eq!(m.index(), i);
            }
            let mut sorted = degree_basis(d);
            sorted.sort();
            assert_eq!(sorted, degree_basis(d));
        }
    }

    #[test]
    fn products_of_elements() {
        assert_eq!(el("x1 + x2").mul(&el("x1 - x2")), el("x1^2 - 2 x1 x2 - x2^2"));
        let v = el("2·x1 x3 - x2^2");
        assert_eq!(GradedElement::one(Q).mul(&v), v);
        // 2 l1 l2 x1^2 with l1 = 3, l2 = -2
        let a = el("3 x1 - x2");
        let b = el("-2 x1 - x3");
        assert_eq!(a.mul(&b).add(&b.mul(&a)), el("-12 x1^2"));
    }

    #[test]
    fn squares_are_central() {
        for i in 0..3 {
            let sq = GradedElement::generator(Q, i).pow(2);
            for j in 0..3 {
                let g = GradedElement::generator(Q, j);
                assert_eq!(sq.mul(&g), g.mul(&sq));
            }
        }
    }

    #[test]
    fn render_and_parse_round_trip() {
        let e = el("x1^2 x2 - 3/2·x1 x3^2 + x2^3");
        assert_eq!(e.to_string(), "x1^2 x2 - 3/2·x1 x3^2 + x2^3");
        assert_eq!(el(&e.to_string()), e);
        assert_eq!(el("x2 x1"), el("-x1 x2"));
        assert!(el("x1 x2 + x2 x1").is_zero());
        assert_eq!(el("-2").to_string(), "-2");
        assert!(GradedElement::parse(Q, "x1 + x2^2").is_err());
        assert!(GradedElement::parse(Q, "x4").is_err());
        assert!(GradedElement::parse(Q, "x1 +").is_err());
    }
}
