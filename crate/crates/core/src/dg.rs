//! The differential `d(x_i) = sum_j m_ij x_j^2`, extended by the graded
//! Leibniz rule, and its matrices in the normal-form bases.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::skew::{self, degree_basis, GradedElement, Monomial};

/// Default degree bound for cohomology computations.
pub const DEFAULT_MAX_DEGREE: u32 = 8;

/// A DG structure on the skew polynomial algebra, given by a 3x3 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgSpec {
    matrix: Matrix,
    images: [GradedElement; 3],
}

impl DgSpec {
    pub fn new(matrix: Matrix) -> Result<DgSpec> {
        if matrix.rows() != 3 || matrix.cols() != 3 {
            return Err(Error::Dimension(format!("expected a 3x3 matrix, got {}x{}", matrix.rows(), matrix.cols())));
        }
        let images = [0, 1, 2].map(|i| GradedElement::squares(matrix.row(i)));
        Ok(DgSpec { matrix, images })
    }

    pub fn from_ints(field: Field, rows: [[i64; 3]; 3]) -> DgSpec {
        DgSpec::new(Matrix::from_ints(field, &rows)).expect("3x3")
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    /// `d(x_i)` for `i` in `0..3`.
    pub fn d_generator(&self, i: usize) -> &GradedElement {
        &self.images[i]
    }

    /// `d(x_i^e)`: zero for even `e`, `d(x_i) x_i^(e-1)` for odd `e`.
    fn d_power(&self, i: usize, e: u32) -> GradedElement {
        if e.is_multiple_of(2) {
            let mut exps = [0; 3];
            exps[i] = e;
            return GradedElement::zero(self.field(), Monomial { exps }.degree() + 1);
        }
        let mut exps = [0; 3];
        exps[i] = e - 1;
        self.images[i].mul(&GradedElement::monomial(Monomial { exps }, self.field().one()))
    }

    /// `d` of a normal monomial via the three-block Leibniz expansion
    /// `d(X1) X2 X3 + (-1)^a X1 d(X2) X3 + (-1)^(a+b) X1 X2 d(X3)`.
    pub fn d_monomial(&self, m: &Monomial) -> GradedElement {
        let field = self.field();
        let one = field.one();
        let mut out = GradedElement::zero(field, m.degree() + 1);
        let mut prefix_degree = 0;
        for i in 0..3 {
            let e = m.exps[i];
            if e % 2 == 1 {
                let mut left = [0; 3];
                left[..i].copy_from_slice(&m.exps[..i]);
                let mut right = [0; 3];
                right[i + 1..].copy_from_slice(&m.exps[i + 1..]);
                let term = GradedElement::monomial(Monomial { exps: left }, one.clone())
                    .mul(&self.d_power(i, e))
                    .mul(&GradedElement::monomial(Monomial { exps: right }, one.clone()));
                let sign = if prefix_degree % 2 == 1 { -one.clone() } else { one.clone() };
                out = out.add_scaled(&term, &sign);
            }
            prefix_degree += e;
        }
        out
    }

    pub fn d(&self, u: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero(self.field(), u.degree() + 1);
        for (m, c) in u.terms() {
            out = out.add_scaled(&self.d_monomial(m), c);
        }
        out
    }

    /// Matrix of `d: A^deg -> A^(deg+1)`; column `j` is `d` of the `j`-th
    /// basis monomial of degree `deg`.
    pub fn d_matrix(&self, deg: u32) -> Matrix {
        let field = self.field();
        let columns: Vec<_> = degree_basis(deg).iter().map(|m| self.d_monomial(m).to_vector()).collect();
        Matrix::from_columns(field, skew::dim(deg + 1), &columns)
    }

    /// Checks the DG axioms up to `max_degree`.
    pub fn verify(&self, max_degree: u32, seed: u64) -> DgVerification {
        let mut report = DgVerification { max_degree, ..Default::default() };
        let field = self.field();

        let mats: Vec<Matrix> = (0..=max_degree).map(|d| self.d_matrix(d)).collect();
        for d in 0..max_degree as usize {
            let composite = mats[d + 1].mul(&mats[d]).expect("compatible");
            if !composite.is_zero() {
                report.failures.push(format!("d∘d ≠ 0 on degree {d}"));
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random_element = |rng: &mut ChaCha8Rng, deg: u32| {
            let v: Vec<_> = (0..skew::dim(deg)).map(|_| field.int(rng.gen_range(-3..=3))).collect();
            GradedElement::from_vector(field, deg, &v)
        };
        for _ in 0..if max_degree >= 1 { LEIBNIZ_SAMPLES } else { 0 } {
            let p = rng.gen_range(0..max_degree);
            let q = rng.gen_range(0..max_degree - p);
            let u = random_element(&mut rng, p);
            let v = random_element(&mut rng, q);
            let lhs = self.d(&u.mul(&v));
            let sign = if p % 2 == 1 { -field.one() } else { field.one() };
            let rhs = self.d(&u).mul(&v).add_scaled(&u.mul(&self.d(&v)), &sign);
            report.leibniz_checked += 1;
            if lhs != rhs {
                report.failures.push(format!("Leibniz fails on u = {u}, v = {v}"));
            }
        }

        for i in 0..3 {
            for j in (i + 1)..3 {
                let (xi, xj) = (GradedElement::generator(field, i), GradedElement::generator(field, j));
                let (di, dj) = (&self.images[i], &self.images[j]);
                let w = di.mul(&xj).sub(&xi.mul(dj)).add(&dj.mul(&xi)).sub(&xj.mul(di));
                report.relations_checked += 1;
                if !w.is_zero() {
                    report.failures.push(format!("d does not kill x{}x{} + x{}x{}: {w}", i + 1, j + 1, j + 1, i + 1));
                }
            }
        }

        // Leibniz on free words agrees with d on their normal forms.
        let word_bound = max_degree.min(WORD_CHECK_DEGREE);
        for len in 1..=word_bound {
            for word in words(len) {
                let normal = word_product(field, &word);
                let mut via_leibniz = GradedElement::zero(field, len + 1);
                for k in 0..word.len() {
                    let sign = if k % 2 == 1 { -field.one() } else { field.one() };
                    let term = word_product(field, &word[..k])
                        .mul(&self.images[word[k]])
                        .mul(&word_product(field, &word[k + 1..]));
                    via_leibniz = via_leibniz.add_scaled(&term, &sign);
                }
                report.words_checked += 1;
                if via_leibniz != self.d(&normal) {
                    report.failures.push(format!("d is not well defined on word {word:?}"));
                }
            }
        }
        report
    }
}

const LEIBNIZ_SAMPLES: usize = 100;
const WORD_CHECK_DEGREE: u32 = 5;

fn words(len: u32) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..3).map(move |g| {
                    let mut w = w.clone();
                    w.push(g);
                    w
                })
            })
            .collect();
    }
    out
}

fn word_product(field: Field, word: &[usize]) -> GradedElement {
    word.iter().fold(GradedElement::one(field), |acc, &g| acc.mul(&GradedElement::generator(field, g)))
}

/// Outcome of [`DgSpec::verify`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct DgVerification {
    pub max_degree: u32,
    pub leibniz_checked: usize,
    pub relations_checked: usize,
    pub words_checked: usize,
    pub failures: Vec<String>,
}

impl DgVerification {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn generator_images() {
        let id = DgSpec::from_ints(Q, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(id.d_generator(0).to_string(), "x1^2");
        let m = DgSpec::from_ints(Q, [[1, 1, 0], [1, 1, 0], [1, 1, 0]]);
        assert_eq!(m.d_generator(1).to_string(), "x1^2 + x2^2");
        let zero = DgSpec::from_ints(Q, [[0; 3]; 3]);
        assert!(zero.d_generator(2).is_zero());
    }

    #[test]
    fn leibniz_examples() {
        let id = DgSpec::from_ints(Q, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let x1x2 = GradedElement::parse(Q, "x1 x2").unwrap();
        assert_eq!(id.d(&x1x2), GradedElement::parse(Q, "x1^2 x2 - x1 x2^2").unwrap());
        let sq = GradedElement::parse(Q, "x1^2").unwrap();
        assert!(id.d(&sq).is_zero());
    }

    #[test]
    fn generic_d_of_x1x2() {
        // entries m_ij = 10 i + j
        let rows = [[11, 12, 13], [21, 22, 23], [31, 32, 33]];
        let spec = DgSpec::from_ints(Q, rows);
        let got = spec.d(&GradedElement::parse(Q, "x1 x2").unwrap());
        let want = GradedElement::parse(Q, "-21 x1^3 + 11 x1^2 x2 - 22 x1 x2^2 + 12 x2^3 - 23 x1 x3^2 + 13 x2 x3^2").unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn d_matrix_shapes_and_ranks() {
        let id = DgSpec::from_ints(Q, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let d0 = id.d_matrix(0);
        assert_eq!((d0.rows(), d0.cols()), (3, 1));
        assert!(d0.is_zero());
        let d1 = id.d_matrix(1);
        assert_eq!((d1.rows(), d1.cols()), (6, 3));
        assert_eq!(d1.rank(), 3);
        let r1 = DgSpec::from_ints(Q, [[1, 2, 3], [2, 4, 6], [-1, -2, -3]]);
        assert_eq!(r1.d_matrix(1).rank(), 1);
    }

    #[test]
    fn verification_passes() {
        for rows in [[[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0; 3]; 3], [[2, -1, 3], [0, 5, 1], [7, 7, -2]]] {
            let report = DgSpec::from_ints(Q, rows).verify(6, 7);
            assert!(report.passed(), "{:?}", report.failures);
            assert_eq!(report.leibniz_checked, 100);
        }
    }
}
