//! The action `N = C⁻¹ M (c_ij²)` of invertible monomial matrices on
//! differential matrices, and the matching change of variables `x = C y`.

use serde::{Deserialize, Serialize};

use crate::classify::{classify, GorensteinPrediction};
use crate::cohomology::Cohomology;
use crate::dg::DgSpec;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::skew::GradedElement;

/// A 3x3 matrix with exactly one nonzero entry in each row and column.
///
/// Only these substitutions `x_i ↦ c·x_σ(i)` preserve the anticommutation
/// relations, so they stand in for the symmetry group of the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    matrix: Matrix,
    /// `support[i]` is the column of the nonzero entry in row `i`.
    support: [usize; 3],
}

impl MonomialMatrix {
    pub fn new(matrix: Matrix) -> Result<MonomialMatrix> {
        if matrix.rows() != 3 || matrix.cols() != 3 {
            return Err(Error::NotMonomial(format!("expected 3x3, got {}x{}", matrix.rows(), matrix.cols())));
        }
        let mut support = [0; 3];
        for (i, slot) in support.iter_mut().enumerate() {
            let nonzero: Vec<usize> = (0..3).filter(|&j| !matrix.get(i, j).is_zero()).collect();
            match nonzero.as_slice() {
                [j] => *slot = *j,
                [] => return Err(Error::NotMonomial(format!("row {} is zero", i + 1))),
                many => {
                    let entries: Vec<String> = many.iter().map(|j| format!("({},{})", i + 1, j + 1)).collect();
                    return Err(Error::NotMonomial(format!("row {} has nonzero entries at {}", i + 1, entries.join(", "))));
                }
            }
        }
        for j in 0..3 {
            let rows: Vec<String> = (0..3).filter(|&i| support[i] == j).map(|i| format!("({},{})", i + 1, j + 1)).collect();
            if rows.len() > 1 {
                return Err(Error::NotMonomial(format!("column {} has nonzero entries at {}", j + 1, rows.join(", "))));
            }
        }
        Ok(MonomialMatrix { matrix, support })
    }

    pub fn identity(field: Field) -> MonomialMatrix {
        MonomialMatrix::new(Matrix::identity(field, 3)).expect("identity")
    }

    /// The permutation matrix with `P[i][perm[i]] = 1`.
    pub fn permutation(field: Field, perm: [usize; 3]) -> Result<MonomialMatrix> {
        let mut m = Matrix::zeros(field, 3, 3);
        for (i, &j) in perm.iter().enumerate() {
            if j >= 3 {
                return Err(Error::NotMonomial(format!("permutation entry {j} out of range")));
            }
            m.set(i, j, field.one());
        }
        MonomialMatrix::new(m)
    }

    /// Swaps `x_i` and `x_j`.
    pub fn transposition(field: Field, i: usize, j: usize) -> MonomialMatrix {
        let mut perm = [0, 1, 2];
        perm.swap(i, j);
        MonomialMatrix::permutation(field, perm).expect("valid")
    }

    pub fn diagonal(entries: [Scalar; 3]) -> Result<MonomialMatrix> {
        let field = entries[0].field();
        let mut m = Matrix::zeros(field, 3, 3);
        for (i, c) in entries.into_iter().enumerate() {
            m.set(i, i, c);
        }
        MonomialMatrix::new(m)
    }

    /// Parses a JSON 3x3 array whose entries are integers or `"p/q"` strings.
    pub fn from_json(field: Field, text: &str) -> Result<MonomialMatrix> {
        MonomialMatrix::new(parse_json_matrix(field, text)?)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn support(&self) -> [usize; 3] {
        self.support
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let mut m = Matrix::zeros(self.field(), 3, 3);
        for (i, &j) in self.support.iter().enumerate() {
            m.set(j, i, self.matrix.get(i, j).inv().expect("nonzero"));
        }
        MonomialMatrix::new(m).expect("inverse of a monomial matrix is monomial")
    }

    /// Entrywise square `(c_ij²)`.
    pub fn squared(&self) -> MonomialMatrix {
        let mut m = self.matrix.clone();
        for (i, &j) in self.support.iter().enumerate() {
            let c = self.matrix.get(i, j);
            m.set(i, j, c * c);
        }
        MonomialMatrix::new(m).expect("monomial")
    }

    pub fn compose(&self, other: &MonomialMatrix) -> MonomialMatrix {
        MonomialMatrix::new(self.matrix.mul(&other.matrix).expect("3x3")).expect("products of monomial matrices are monomial")
    }
}

pub fn parse_json_matrix(field: Field, text: &str) -> Result<Matrix> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Int(i64),
        Text(String),
    }
    let rows: Vec<Vec<Entry>> = serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    let rows = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|e| match e {
                    Entry::Int(n) => Ok(field.int(n)),
                    Entry::Text(s) => field.parse(&s),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

/// `C⁻¹ · M · (c_ij²)`.
pub fn apply_transform(c: &MonomialMatrix, m: &Matrix) -> Result<Matrix> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(Error::Dimension(format!("expected a 3x3 matrix, got {}x{}", m.rows(), m.cols())));
    }
    c.inverse().matrix().mul(m)?.mul(c.squared().matrix())
}

/// The algebra automorphism `x_i ↦ Σ_j c_ij x_j` applied to `u`.
pub fn substitute(u: &GradedElement, c: &MonomialMatrix) -> GradedElement {
    let field = u.field();
    let images: Vec<GradedElement> = (0..3).map(|i| GradedElement::linear(c.matrix().row(i))).collect();
    let mut out = GradedElement::zero(field, u.degree());
    for (m, coeff) in u.terms() {
        let mut term = GradedElement::one(field);
        for (i, &e) in m.exps.iter().enumerate() {
            term = term.mul(&images[i].pow(e));
        }
        out = out.add_scaled(&term, coeff);
    }
    out
}

/// Comparison of `M` with `C⁻¹ M (c_ij²)`.
#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    pub original: Matrix,
    pub transformed: Matrix,
    pub max_degree: u32,
    pub dims_original: Vec<usize>,
    pub dims_transformed: Vec<usize>,
    pub rank_original: usize,
    pub rank_transformed: usize,
    pub verdict_original: GorensteinPrediction,
    pub verdict_transformed: GorensteinPrediction,
    /// Basis cocycles of `M` whose substituted images fail to be cocycles for `N`.
    pub unmapped_cocycles: Vec<String>,
    pub falsifications: Vec<String>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.falsifications.is_empty()
    }
}

pub fn invariance_check(m: &Matrix, c: &MonomialMatrix, max_degree: u32) -> Result<InvarianceReport> {
    let n = apply_transform(c, m)?;
    let (hm, hn) = (Cohomology::compute(&DgSpec::new(m.clone())?, max_degree), Cohomology::compute(&DgSpec::new(n.clone())?, max_degree));
    let (cm, cn) = (classify(m)?, classify(&n)?);
    let spec_n = hn.spec();
    // x = C y turns a cocycle z(x) of M into the cocycle z(C y) of N.
    let mut unmapped = Vec::new();
    for d in 0..=max_degree {
        for z in hm.basis(d) {
            let image = substitute(&z, c);
            if !spec_n.d(&image).is_zero() {
                unmapped.push(z.to_string());
            }
        }
    }
    let mut falsifications = Vec::new();
    if hm.dims() != hn.dims() {
        falsifications.push(format!("dims differ: {:?} vs {:?}", hm.dims(), hn.dims()));
    }
    if cm.rank != cn.rank {
        falsifications.push(format!("rank differs: {} vs {}", cm.rank, cn.rank));
    }
    if cm.predicted_gorenstein != cn.predicted_gorenstein {
        falsifications.push(format!("verdict differs: {:?} vs {:?}", cm.predicted_gorenstein, cn.predicted_gorenstein));
    }
    if !unmapped.is_empty() {
        falsifications.push(format!("{} cocycles do not map to cocycles", unmapped.len()));
    }
    Ok(InvarianceReport {
        original: m.clone(),
        transformed: n,
        max_degree,
        dims_original: hm.dims(),
        dims_transformed: hn.dims(),
        rank_original: cm.rank,
        rank_transformed: cn.rank,
        verdict_original: cm.predicted_gorenstein,
        verdict_transformed: cn.predicted_gorenstein,
        unmapped_cocycles: unmapped,
        falsifications,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn validation_names_entries() {
        let bad = Matrix::from_ints(Q, &[[1, 1, 0], [0, 0, 1], [0, 0, 0]]);
        let err = MonomialMatrix::new(bad).unwrap_err().to_string();
        assert!(err.contains("(1,1)") && err.contains("(1,2)"), "{err}");
        let col = Matrix::from_ints(Q, &[[1, 0, 0], [1, 0, 0], [0, 0, 1]]);
        assert!(MonomialMatrix::new(col).unwrap_err().to_string().contains("column 1"));
        assert!(MonomialMatrix::from_json(Q, r#"[[0,"2/3",0],[1,0,0],[0,0,-1]]"#).is_ok());
        assert!(MonomialMatrix::from_json(Q, "[[1,0],[0,1]]").is_err());
    }

    #[test]
    fn identity_and_permutations() {
        let m = Matrix::from_ints(Q, &[[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        assert_eq!(apply_transform(&MonomialMatrix::identity(Q), &m).unwrap(), m);
        let p = MonomialMatrix::transposition(Q, 0, 1);
        let want = Matrix::from_ints(Q, &[[5, 4, 6], [2, 1, 3], [8, 7, 10]]);
        assert_eq!(apply_transform(&p, &m).unwrap(), want);
    }

    #[test]
    fn diagonal_scaling() {
        let m = Matrix::from_ints(Q, &[[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        let c = MonomialMatrix::diagonal([Q.int(2), Q.one(), Q.one()]).unwrap();
        let n = apply_transform(&c, &m).unwrap();
        let want = Matrix::from_rows(
            Q,
            vec![
                vec![Q.int(2), Q.int(1), Q.ratio(3, 2).unwrap()],
                vec![Q.int(16), Q.int(5), Q.int(6)],
                vec![Q.int(28), Q.int(8), Q.int(10)],
            ],
        )
        .unwrap();
        assert_eq!(n, want);
        assert_eq!(n.rank(), m.rank());
    }

    #[test]
    fn substitution_carries_cocycles() {
        let m = Matrix::from_ints(Q, &[[1, 1, 0], [1, 1, 0], [1, 1, 0]]);
        let c = MonomialMatrix::from_json(Q, "[[0,0,2],[1,0,0],[0,-3,0]]").unwrap();
        let report = invariance_check(&m, &c, 5).unwrap();
        assert!(report.passed(), "{:?}", report.falsifications);
        assert_eq!(report.dims_original, vec![1, 2, 3, 4, 5, 6]);
    }
}
