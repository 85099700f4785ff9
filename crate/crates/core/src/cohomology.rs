//! Degreewise cohomology `H^d = ker d^d / im d^(d-1)` with deterministic
//! representatives, class membership and products of classes.

use rayon::prelude::*;
use serde::Serialize;

use crate::dg::DgSpec;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::skew::{self, GradedElement};

/// Linear algebra of one degree.
#[derive(Clone, Debug)]
struct DegreeData {
    cochain_dim: usize,
    differential_rank: usize,
    cocycle_dim: usize,
    boundaries: Subspace,
    /// Representatives reduced modulo `boundaries`, in echelon form; their
    /// pivots are disjoint from those of `boundaries`.
    classes: Subspace,
}

/// Cohomology of a [`DgSpec`] through a fixed degree.
#[derive(Clone, Debug)]
pub struct Cohomology {
    spec: DgSpec,
    max_degree: u32,
    degrees: Vec<DegreeData>,
}

/// A cohomology class: a cocycle together with its coordinates in the
/// chosen basis of `H^degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: u32,
    pub representative: GradedElement,
    pub coordinates: Vec<Scalar>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Scalar::is_zero)
    }
}

/// Serializable summary of a [`Cohomology`] computation.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub field: String,
    pub matrix: Matrix,
    pub max_degree: u32,
    pub dims: Vec<usize>,
    pub cochain_dims: Vec<usize>,
    pub cocycle_ranks: Vec<usize>,
    pub coboundary_ranks: Vec<usize>,
    pub bases: Vec<Vec<String>>,
}

impl Cohomology {
    /// Computes `H^0 .. H^max_degree`.
    pub fn compute(spec: &DgSpec, max_degree: u32) -> Cohomology {
        let field = spec.field();
        let mats: Vec<Matrix> = (0..=max_degree).into_par_iter().map(|d| spec.d_matrix(d)).collect();
        let degrees = (0..=max_degree)
            .into_par_iter()
            .map(|d| {
                let n = skew::dim(d);
                let cocycles = mats[d as usize].kernel_basis();
                let boundaries = match d {
                    0 => Subspace::zero(field, n),
                    _ => mats[d as usize - 1].column_space(),
                };
                let mut classes = Subspace::zero(field, n);
                for z in &cocycles {
                    classes.insert(boundaries.reduce(z));
                }
                DegreeData {
                    cochain_dim: n,
                    differential_rank: n - cocycles.len(),
                    cocycle_dim: cocycles.len(),
                    boundaries,
                    classes,
                }
            })
            .collect();
        Cohomology { spec: spec.clone(), max_degree, degrees }
    }

    pub fn spec(&self) -> &DgSpec {
        &self.spec
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.classes.dim()).collect()
    }

    pub fn dim(&self, degree: u32) -> usize {
        self.degrees[degree as usize].classes.dim()
    }

    pub fn cocycle_dim(&self, degree: u32) -> usize {
        self.degrees[degree as usize].cocycle_dim
    }

    pub fn coboundary_dim(&self, degree: u32) -> usize {
        self.degrees[degree as usize].boundaries.dim()
    }

    /// Rank of `d: A^degree -> A^(degree+1)`.
    pub fn differential_rank(&self, degree: u32) -> usize {
        self.degrees[degree as usize].differential_rank
    }

    /// Representatives of the basis of `H^degree`.
    pub fn basis(&self, degree: u32) -> Vec<GradedElement> {
        let field = self.spec.field();
        self.degrees[degree as usize]
            .classes
            .basis()
            .iter()
            .map(|v| GradedElement::from_vector(field, degree, v))
            .collect()
    }

    fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::DegreeOverflow { degree: degree as usize, bound: self.max_degree as usize });
        }
        Ok(())
    }

    /// The class of `z`; `None` when `z` is not a cocycle.
    pub fn class_of(&self, z: &GradedElement) -> Result<Option<CohomologyClass>> {
        self.check_degree(z.degree())?;
        if !self.spec.d(z).is_zero() {
            return Ok(None);
        }
        let data = &self.degrees[z.degree() as usize];
        let reduced = data.boundaries.reduce(&z.to_vector());
        let coordinates = data
            .classes
            .coordinates(&reduced)
            .expect("a reduced cocycle lies in the span of the class representatives");
        Ok(Some(CohomologyClass { degree: z.degree(), representative: z.clone(), coordinates }))
    }

    /// Whether `z` is a coboundary (and hence also a cocycle).
    pub fn is_coboundary(&self, z: &GradedElement) -> Result<bool> {
        self.check_degree(z.degree())?;
        Ok(self.degrees[z.degree() as usize].boundaries.contains(&z.to_vector()))
    }

    pub fn unit(&self) -> CohomologyClass {
        self.class_of(&GradedElement::one(self.spec.field())).expect("degree 0").expect("1 is a cocycle")
    }

    pub fn class_product(&self, u: &CohomologyClass, v: &CohomologyClass) -> Result<CohomologyClass> {
        let product = u.representative.mul(&v.representative);
        Ok(self.class_of(&product)?.expect("products of cocycles are cocycles"))
    }

    /// Class of a cocycle, panicking if it is not one.
    pub fn class_of_cocycle(&self, z: &GradedElement) -> Result<CohomologyClass> {
        self.class_of(z)?
            .ok_or_else(|| Error::Dimension(format!("{z} is not a cocycle")))
    }

    pub fn report(&self) -> CohomologyReport {
        CohomologyReport {
            field: self.spec.field().label(),
            matrix: self.spec.matrix().clone(),
            max_degree: self.max_degree,
            dims: self.dims(),
            cochain_dims: self.degrees.iter().map(|d| d.cochain_dim).collect(),
            cocycle_ranks: self.degrees.iter().map(|d| d.cocycle_dim).collect(),
            coboundary_ranks: self.degrees.iter().map(|d| d.boundaries.dim()).collect(),
            bases: (0..=self.max_degree).map(|d| self.basis(d).iter().map(|e| e.to_string()).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    const Q: Field = Field::Rational;

    fn el(s: &str) -> GradedElement {
        GradedElement::parse(Q, s).unwrap()
    }

    #[test]
    fn identity_has_trivial_cohomology() {
        let h = Cohomology::compute(&DgSpec::from_ints(Q, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 8);
        assert_eq!(h.dims(), vec![1, 0, 0, 0, 0, 0, 0, 0, 0]);
        let c = h.class_of(&el("x1^2")).unwrap().unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn zero_differential_gives_binomials() {
        let h = Cohomology::compute(&DgSpec::from_ints(Q, [[0; 3]; 3]), 4);
        assert_eq!(h.dims(), vec![1, 3, 6, 10, 15]);
    }

    #[test]
    fn rank_bookkeeping() {
        let h = Cohomology::compute(&DgSpec::from_ints(Q, [[1, 2, 0], [0, 1, 1], [1, 3, 1]]), 6);
        for d in 0..=6 {
            assert_eq!(skew::dim(d), h.differential_rank(d) + h.cocycle_dim(d));
            assert_eq!(h.dim(d), h.cocycle_dim(d) - h.coboundary_dim(d));
            if d > 0 {
                assert_eq!(h.coboundary_dim(d), h.differential_rank(d - 1));
            }
        }
        assert_eq!(h.dim(0), 1);
    }

    #[test]
    fn non_cocycles_have_no_class() {
        let h = Cohomology::compute(&DgSpec::from_ints(Q, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 3);
        assert_eq!(h.class_of(&el("x1")).unwrap(), None);
        assert!(matches!(h.class_of(&el("x1^4")), Err(Error::DegreeOverflow { .. })));
        assert!(h.class_of(&el("x1 x2 + x2 x1")).unwrap().unwrap().is_zero());
    }
}
