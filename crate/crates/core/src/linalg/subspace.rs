use super::scalar::{Field, Scalar};

/// A subspace of `field^dim` kept as a reduced row-echelon basis.
///
/// Rows are sorted by pivot column; each pivot entry is 1 and every other
/// row is zero in that column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, dim: ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by<I: IntoIterator<Item = Vec<Scalar>>>(field: Field, ambient: usize, vectors: I) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the multiples of basis rows that clear every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim, "vector length");
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = &*o - &(&f * r);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (row, c) in self.rows.iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in residual.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o = &*o - &(c * r);
                }
            }
        }
        residual.iter().all(Scalar::is_zero).then_some(coords)
    }

    /// Adds `v` to the span. Returns `false` when it was already contained.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (o, x) in row.iter_mut().zip(&r) {
                if !x.is_zero() {
                    *o = &*o - &(&f * x);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_keeps_reduced_form() {
        let q = Field::Rational;
        let v = |xs: &[i64]| xs.iter().map(|&x| q.int(x)).collect::<Vec<_>>();
        let mut s = Subspace::zero(q, 3);
        assert!(s.insert(v(&[0, 2, 4])));
        assert!(s.insert(v(&[1, 1, 1])));
        assert!(!s.insert(v(&[1, 3, 5])));
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.basis()[0], v(&[1, 0, -1]));
        assert_eq!(s.basis()[1], v(&[0, 1, 2]));
        assert_eq!(s.coordinates(&v(&[2, 3, 4])), Some(v(&[2, 3])));
        assert_eq!(s.coordinates(&v(&[0, 0, 1])), None);
    }
}
