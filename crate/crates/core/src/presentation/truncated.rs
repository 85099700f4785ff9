use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AlgebraPresentation, NcPolynomial, Word};
use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar, Subspace};

type Sparse = Vec<(usize, Scalar)>;

/// A presented algebra computed degree by degree up to a bound.
///
/// Degree `d` is the quotient of `W_d = ⊕_g A_{d-|g|} ⊗ g` by the images of
/// `A_{d-|r|} · r`; the basis consists of the lexicographically smallest
/// surviving words, and right multiplication by each generator is stored as
/// a sparse table.
#[derive(Clone, Debug)]
pub struct TruncatedAlgebra {
    presentation: AlgebraPresentation,
    bound: u32,
    bases: Vec<Vec<Word>>,
    /// `right[d][g][b]`: the basis element `b` of degree `d` times generator `g`.
    right: Vec<Vec<Vec<Sparse>>>,
}

impl TruncatedAlgebra {
    pub fn new(presentation: &AlgebraPresentation, bound: u32) -> Result<TruncatedAlgebra> {
        let field = presentation.field();
        let degrees = presentation.degrees().to_vec();
        let mut alg = TruncatedAlgebra {
            presentation: presentation.clone(),
            bound,
            bases: vec![vec![Word::new()]],
            right: Vec::new(),
        };
        let relations: Vec<(u32, &NcPolynomial)> =
            presentation.relations().iter().map(|r| (r.degree(&degrees).ok().flatten().unwrap_or(0), r)).collect();
        if relations.iter().any(|(d, _)| *d == 0) {
            return Err(Error::Presentation("relation of degree 0".into()));
        }
        alg.right.push(vec![Vec::new(); degrees.len()]);

        for d in 1..=bound {
            // Columns of W_d, largest word first.
            let mut columns: Vec<(Word, usize, usize)> = Vec::new();
            for (g, &dg) in degrees.iter().enumerate() {
                if dg <= d {
                    for (b, w) in alg.bases[(d - dg) as usize].iter().enumerate() {
                        let mut word = w.clone();
                        word.push(g);
                        columns.push((word, g, b));
                    }
                }
            }
            columns.sort_by(|a, b| b.0.cmp(&a.0));
            let mut col_of = vec![Vec::new(); degrees.len()];
            for (g, &dg) in degrees.iter().enumerate() {
                if dg <= d {
                    col_of[g] = vec![0; alg.bases[(d - dg) as usize].len()];
                }
            }
            for (j, (_, g, b)) in columns.iter().enumerate() {
                col_of[*g][*b] = j;
            }

            let mut span = Subspace::zero(field, columns.len());
            for &(e, r) in &relations {
                if e > d {
                    continue;
                }
                for b in 0..alg.bases[(d - e) as usize].len() {
                    let mut row = vec![field.zero(); columns.len()];
                    for (u, c) in r.terms() {
                        let (&g, prefix) = u.split_last().expect("relations have positive degree");
                        let v = alg.right_word(d - e, vec![(b, field.one())], prefix);
                        for (i, x) in v {
                            let j = col_of[g][i];
                            row[j] = &row[j] + &(c * &x);
                        }
                    }
                    span.insert(row);
                }
            }

            let pivots = span.pivots().to_vec();
            let mut is_pivot = vec![None; columns.len()];
            for (k, &p) in pivots.iter().enumerate() {
                is_pivot[p] = Some(k);
            }
            // Surviving columns in ascending word order.
            let survivors: Vec<usize> = (0..columns.len()).rev().filter(|&j| is_pivot[j].is_none()).collect();
            let mut position = vec![usize::MAX; columns.len()];
            for (k, &j) in survivors.iter().enumerate() {
                position[j] = k;
            }
            let normal = |j: usize| -> Sparse {
                match is_pivot[j] {
                    None => vec![(position[j], field.one())],
                    Some(k) => {
                        let row = &span.basis()[k];
                        let mut out: Sparse =
                            survivors.iter().enumerate().filter(|(_, &c)| !row[c].is_zero()).map(|(i, &c)| (i, -&row[c])).collect();
                        out.sort_by_key(|t| t.0);
                        out
                    }
                }
            };
            alg.right.push(vec![Vec::new(); degrees.len()]);
            for (g, &dg) in degrees.iter().enumerate() {
                if dg <= d {
                    let src = (d - dg) as usize;
                    alg.right[src][g] = (0..alg.bases[src].len()).map(|b| normal(col_of[g][b])).collect();
                }
            }
            alg.bases.push(survivors.iter().map(|&j| columns[j].0.clone()).collect());
        }
        Ok(alg)
    }

    fn field(&self) -> Field {
        self.presentation.field()
    }

    /// Right multiplication of a sparse element of degree `deg` by one generator.
    fn right_gen(&self, deg: u32, v: &Sparse, g: usize) -> Sparse {
        let target = deg + self.presentation.degrees()[g];
        let mut acc = vec![self.field().zero(); self.bases[target as usize].len()];
        for (b, x) in v {
            for (i, y) in &self.right[deg as usize][g][*b] {
                acc[*i] = &acc[*i] + &(x * y);
            }
        }
        to_sparse(acc)
    }

    fn right_word(&self, mut deg: u32, mut v: Sparse, word: &[usize]) -> Sparse {
        for &g in word {
            v = self.right_gen(deg, &v, g);
            deg += self.presentation.degrees()[g];
        }
        v
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn dim(&self, degree: u32) -> usize {
        self.bases[degree as usize].len()
    }

    pub fn hilbert_function(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// Basis words of one degree, in ascending lexicographic order.
    pub fn basis(&self, degree: u32) -> &[Word] {
        &self.bases[degree as usize]
    }

    fn check(&self, degree: u32) -> Result<()> {
        if degree > self.bound {
            return Err(Error::DegreeOverflow { degree: degree as usize, bound: self.bound as usize });
        }
        Ok(())
    }

    /// Degree and basis coordinates of a homogeneous polynomial. The zero
    /// polynomial is reported in degree 0.
    pub fn normal_form(&self, p: &NcPolynomial) -> Result<(u32, Vec<Scalar>)> {
        let field = self.field();
        let deg = p.degree(self.presentation.degrees())?.unwrap_or(0);
        self.check(deg)?;
        let mut acc = vec![field.zero(); self.dim(deg)];
        for (w, c) in p.terms() {
            for (i, x) in self.right_word(0, vec![(0, field.one())], w) {
                acc[i] = &acc[i] + &(c * &x);
            }
        }
        Ok((deg, acc))
    }

    /// Product of `x` in degree `p` and `y` in degree `q`.
    pub fn mul(&self, p: u32, x: &[Scalar], q: u32, y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check(p + q)?;
        let field = self.field();
        let xs = to_sparse(x.to_vec());
        let mut acc = vec![field.zero(); self.dim(p + q)];
        for (w, c) in self.bases[q as usize].iter().zip(y) {
            if c.is_zero() {
                continue;
            }
            for (i, v) in self.right_word(p, xs.clone(), w) {
                acc[i] = &acc[i] + &(c * &v);
            }
        }
        Ok(acc)
    }

    /// Product of the basis element `b` of degree `p` with `y` of degree `q`.
    pub fn mul_basis(&self, p: u32, b: usize, q: u32, y: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut x = vec![self.field().zero(); self.dim(p)];
        x[b] = self.field().one();
        self.mul(p, &x, q, y)
    }

    pub fn unit_vector(&self, degree: u32, b: usize) -> Vec<Scalar> {
        let mut x = vec![self.field().zero(); self.dim(degree)];
        x[b] = self.field().one();
        x
    }

    pub fn render(&self, degree: u32, v: &[Scalar]) -> String {
        let terms = self.bases[degree as usize].iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(w, c)| (w.clone(), c.clone()));
        NcPolynomial::from_terms(self.field(), terms).render(self.presentation.names())
    }

    /// Compares `(ab)c` with `a(bc)` on random basis triples within the bound.
    /// Returns the failing triples as `(degree, index)` pairs.
    pub fn check_associativity(&self, samples: usize, seed: u64) -> Vec<[(u32, usize); 3]> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = Vec::new();
        let degrees: Vec<u32> = (0..=self.bound).filter(|&d| self.dim(d) > 0).collect();
        for _ in 0..samples {
            let pick = |rng: &mut ChaCha8Rng| degrees[rng.gen_range(0..degrees.len())];
            let (p, q, r) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            if p + q + r > self.bound || self.dim(p + q + r) == 0 {
                continue;
            }
            let (i, j, k) = (rng.gen_range(0..self.dim(p)), rng.gen_range(0..self.dim(q)), rng.gen_range(0..self.dim(r)));
            let (a, b, c) = (self.unit_vector(p, i), self.unit_vector(q, j), self.unit_vector(r, k));
            let left = self.mul(p + q, &self.mul(p, &a, q, &b).unwrap(), r, &c).unwrap();
            let right = self.mul(p, &a, q + r, &self.mul(q, &b, r, &c).unwrap()).unwrap();
            if left != right {
                failures.push([(p, i), (q, j), (r, k)]);
            }
        }
        failures
    }
}

fn to_sparse(v: Vec<Scalar>) -> Sparse {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    /// Number of words of each degree in the free algebra on generators of the given degrees.
    fn free_dims(degrees: &[u32], bound: u32) -> Vec<usize> {
        let mut dims = vec![0usize; bound as usize + 1];
        dims[0] = 1;
        for d in 1..=bound as usize {
            dims[d] = degrees.iter().filter(|&&g| g as usize <= d).map(|&g| dims[d - g as usize]).sum();
        }
        dims
    }

    fn words_of_degree(degrees: &[u32], d: u32) -> Vec<Word> {
        if d == 0 {
            return vec![Word::new()];
        }
        let mut out = Vec::new();
        for (g, &dg) in degrees.iter().enumerate() {
            if dg <= d {
                for mut w in words_of_degree(degrees, d - dg) {
                    w.push(g);
                    out.push(w);
                }
            }
        }
        out
    }

    fn alg(text: &str, bound: u32) -> TruncatedAlgebra {
        AlgebraPresentation::parse(Q, text).unwrap().truncate(bound).unwrap()
    }

    #[test]
    fn skew_polynomial_dims() {
        let a = alg("gen x1:1, x2:1, x3:1; rel x1*x2 + x2*x1; rel x1*x3 + x3*x1; rel x2*x3 + x3*x2", 5);
        assert_eq!(a.hilbert_function(), vec![1, 3, 6, 10, 15, 21]);
        assert!(a.check_associativity(200, 1).is_empty());
    }

    #[test]
    fn fibonacci_dims_and_normal_forms() {
        let a = alg("gen x:1, y:1; rel y*y", 5);
        assert_eq!(a.hilbert_function(), vec![1, 2, 3, 5, 8, 13]);
        let p = a.presentation();
        let (d, v) = a.normal_form(&p.polynomial("y*y").unwrap()).unwrap();
        assert_eq!(d, 2);
        assert!(v.iter().all(Scalar::is_zero));
        let (_, v) = a.normal_form(&p.polynomial("y*x*y").unwrap()).unwrap();
        assert_eq!(a.render(3, &v), "y*x*y");
        assert!(matches!(a.normal_form(&p.polynomial("x^6").unwrap()), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn quadratic_with_parameter() {
        let a = alg("gen x:1, y:1; rel x*x + x*y + y*x + y*y", 5);
        assert_eq!(a.hilbert_function(), vec![1, 2, 3, 5, 8, 13]);
        assert!(a.check_associativity(200, 2).is_empty());
    }

    #[test]
    fn mixed_degrees() {
        let a = alg("gen xi:1, eta:2; rel xi*xi; rel xi*eta - eta*xi", 6);
        assert_eq!(a.hilbert_function(), vec![1, 1, 1, 1, 1, 1, 1]);
        let none = AlgebraPresentation::new(Q, &[], vec![]).unwrap().truncate(4).unwrap();
        assert_eq!(none.hilbert_function(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn free_algebra_matches_word_count() {
        let degrees = [1, 1, 2];
        let a = AlgebraPresentation::new(Q, &[("a", 1), ("b", 1), ("c", 2)], vec![]).unwrap().truncate(6).unwrap();
        assert_eq!(a.hilbert_function(), free_dims(&degrees, 6));
        for d in 0..=6 {
            let mut words = words_of_degree(&degrees, d);
            words.sort();
            assert_eq!(a.basis(d), words.as_slice());
        }
    }
}
