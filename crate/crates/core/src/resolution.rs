//! Minimal graded free resolutions of the trivial module over a truncated
//! algebra, `Ext(k, A)` from the dualized resolution, and Gorenstein
//! certificates built on them.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::{classify, observed_presentation, Classification, GorensteinPrediction};
use crate::cohomology::Cohomology;
use crate::dg::{DgSpec, DEFAULT_MAX_DEGREE};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::presentation::{AlgebraPresentation, TruncatedAlgebra};

pub const DEFAULT_HOM_BOUND: usize = 6;
pub const DEFAULT_INT_BOUND: u32 = 10;

/// One free module `F_i = ⊕_j A e_j` with `d(e_j)` stored as a vector of
/// `(F_{i-1})_{g_j}`.
#[derive(Clone, Debug)]
struct FreeStep {
    degrees: Vec<u32>,
    images: Vec<Vec<Scalar>>,
}

impl FreeStep {
    fn dim(&self, alg: &TruncatedAlgebra, n: u32) -> usize {
        self.degrees.iter().filter(|&&g| g <= n).map(|&g| alg.dim(n - g)).sum()
    }

    /// Start of each generator's block in degree `n`.
    fn offsets(&self, alg: &TruncatedAlgebra, n: u32) -> Vec<Option<usize>> {
        let mut at = 0;
        self.degrees
            .iter()
            .map(|&g| {
                (g <= n).then(|| {
                    let start = at;
                    at += alg.dim(n - g);
                    start
                })
            })
            .collect()
    }
}

/// A minimal free resolution `F_P → ... → F_0 → k` valid in internal degrees
/// up to the bound.
#[derive(Clone, Debug)]
pub struct Resolution {
    algebra: TruncatedAlgebra,
    hom_bound: usize,
    int_bound: u32,
    steps: Vec<FreeStep>,
    matrices: HashMap<(usize, u32), Matrix>,
}

pub fn minimal_resolution(algebra: &TruncatedAlgebra, hom_bound: usize, int_bound: u32) -> Result<Resolution> {
    if hom_bound == 0 {
        return Err(Error::Config("homological bound must be at least 1".into()));
    }
    if int_bound > algebra.bound() {
        return Err(Error::BoundInsufficient {
            step: 0,
            degree: int_bound as usize,
            reason: format!("algebra truncated at degree {}", algebra.bound()),
        });
    }
    if hom_bound as u32 > int_bound {
        return Err(Error::BoundInsufficient {
            step: hom_bound,
            degree: int_bound as usize,
            reason: format!("generators of F_{hom_bound} sit in internal degree at least {hom_bound}"),
        });
    }
    let field = algebra.presentation().field();
    let mut res = Resolution {
        algebra: algebra.clone(),
        hom_bound,
        int_bound,
        steps: vec![FreeStep { degrees: vec![0], images: vec![vec![field.one()]] }],
        matrices: HashMap::new(),
    };
    for i in 1..=hom_bound {
        res.steps.push(FreeStep { degrees: Vec::new(), images: Vec::new() });
        for n in 1..=int_bound {
            let cycles: Vec<Vec<Scalar>> = if i == 1 {
                (0..algebra.dim(n)).map(|b| algebra.unit_vector(n, b)).collect()
            } else {
                res.matrix(i - 1, n).kernel_basis()
            };
            let mut image = res.matrix(i, n).column_space();
            for z in cycles {
                if image.insert(z.clone()) {
                    let step = &mut res.steps[i];
                    step.degrees.push(n);
                    step.images.push(z);
                }
            }
            // The cached matrix predates the generators just added.
            res.matrices.remove(&(i, n));
        }
    }
    Ok(res)
}

impl Resolution {
    pub fn algebra(&self) -> &TruncatedAlgebra {
        &self.algebra
    }

    pub fn hom_bound(&self) -> usize {
        self.hom_bound
    }

    pub fn int_bound(&self) -> u32 {
        self.int_bound
    }

    /// Internal degrees of the generators of `F_i`.
    pub fn generator_degrees(&self, i: usize) -> &[u32] {
        &self.steps[i].degrees
    }

    pub fn rank(&self, i: usize) -> usize {
        self.steps[i].degrees.len()
    }

    /// `d(e_j)` of `F_i` as coefficients in `A`, one per generator of `F_{i-1}`
    /// (`None` where the coefficient's degree would be negative).
    pub fn image_coefficients(&self, i: usize, j: usize) -> Vec<Option<(u32, Vec<Scalar>)>> {
        let g = self.steps[i].degrees[j];
        let prev = &self.steps[i - 1];
        let offsets = prev.offsets(&self.algebra, g);
        prev.degrees
            .iter()
            .zip(offsets)
            .map(|(&h, off)| {
                off.map(|o| {
                    let len = self.algebra.dim(g - h);
                    (g - h, self.steps[i].images[j][o..o + len].to_vec())
                })
            })
            .collect()
    }

    /// Matrix of `d_i: (F_i)_n → (F_{i-1})_n`.
    pub fn matrix(&mut self, i: usize, n: u32) -> Matrix {
        if let Some(m) = self.matrices.get(&(i, n)) {
            return m.clone();
        }
        let m = self.build_matrix(i, n);
        self.matrices.insert((i, n), m.clone());
        m
    }

    fn build_matrix(&self, i: usize, n: u32) -> Matrix {
        let alg = &self.algebra;
        let field = alg.presentation().field();
        let (src, dst) = (&self.steps[i], &self.steps[i - 1]);
        let rows = dst.dim(alg, n);
        let dst_offsets = dst.offsets(alg, n);
        let mut columns = Vec::new();
        for (j, &g) in src.degrees.iter().enumerate() {
            if g > n {
                continue;
            }
            let coeffs = self.image_coefficients(i, j);
            for b in 0..alg.dim(n - g) {
                let mut col = vec![field.zero(); rows];
                for (k, c) in coeffs.iter().enumerate() {
                    if let (Some((deg, c)), Some(off)) = (c, dst_offsets[k]) {
                        let prod = alg.mul_basis(n - g, b, *deg, c).expect("within the truncation");
                        for (t, x) in prod.into_iter().enumerate() {
                            col[off + t] = x;
                        }
                    }
                }
                columns.push(col);
            }
        }
        Matrix::from_columns(field, rows, &columns)
    }

    /// Degree-0 coefficients in the differentials, as `(i, j, k)`.
    pub fn minimality_violations(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.hom_bound {
            for j in 0..self.rank(i) {
                for (k, c) in self.image_coefficients(i, j).iter().enumerate() {
                    if let Some((0, v)) = c {
                        if v.iter().any(|x| !x.is_zero()) {
                            out.push((i, j, k));
                        }
                    }
                }
            }
        }
        out
    }

    /// `(i, n)` where `d_{i-1} d_i ≠ 0`.
    pub fn complex_violations(&mut self) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        for i in 2..=self.hom_bound {
            for n in 0..=self.int_bound {
                let prod = self.matrix(i - 1, n).mul(&self.matrix(i, n)).expect("compatible");
                if !prod.is_zero() {
                    out.push((i, n));
                }
            }
        }
        out
    }

    /// `(i, n)` where `ker d_i ≠ im d_{i+1}` (with `d_0` the augmentation).
    pub fn exactness_violations(&mut self) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.hom_bound {
            for n in 0..=self.int_bound {
                let dim = self.steps[i].dim(&self.algebra, n);
                let rank_out = if i == 0 { usize::from(n == 0) } else { self.matrix(i, n).rank() };
                let rank_in = self.matrix(i + 1, n).rank();
                if rank_out + rank_in != dim {
                    out.push((i, n));
                }
            }
        }
        out
    }

    /// Alternating sums `Σ_i (-1)^i dim (F_i)_n` for `n ≤ min(P, D)`, where
    /// generators of `F_{P+1}` cannot contribute. They equal `dim k_n`.
    pub fn euler_characteristics(&self) -> Vec<i64> {
        (0..=self.int_bound.min(self.hom_bound as u32))
            .map(|n| {
                (0..=self.hom_bound)
                    .map(|i| {
                        let d = self.steps[i].dim(&self.algebra, n) as i64;
                        if i % 2 == 0 {
                            d
                        } else {
                            -d
                        }
                    })
                    .sum()
            })
            .collect()
    }

    pub fn report(&mut self) -> ResolutionReport {
        let mut differentials = Vec::new();
        for i in 1..=self.hom_bound {
            let mut lines = Vec::new();
            for j in 0..self.rank(i) {
                let terms: Vec<String> = self
                    .image_coefficients(i, j)
                    .iter()
                    .enumerate()
                    .filter_map(|(k, c)| {
                        let (deg, v) = c.as_ref()?;
                        v.iter().any(|x| !x.is_zero()).then(|| format!("({})·e{}_{}", self.algebra.render(*deg, v), i - 1, k))
                    })
                    .collect();
                lines.push(format!("d(e{i}_{j}) = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") }));
            }
            differentials.push(lines);
        }
        let euler = self.euler_characteristics();
        ResolutionReport {
            presentation: self.algebra.presentation().to_string(),
            hom_bound: self.hom_bound,
            int_bound: self.int_bound,
            hilbert_function: self.algebra.hilbert_function(),
            betti: (0..=self.hom_bound).map(|i| self.steps[i].degrees.clone()).collect(),
            differentials,
            minimal: self.minimality_violations().is_empty(),
            complex: self.complex_violations().is_empty(),
            exact: self.exactness_violations().is_empty(),
            euler_ok: euler.iter().enumerate().all(|(n, &e)| e == i64::from(n == 0)),
            euler_characteristics: euler,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionReport {
    pub presentation: String,
    pub hom_bound: usize,
    /// Betti data is exact for generators in internal degrees up to this bound.
    pub int_bound: u32,
    pub hilbert_function: Vec<usize>,
    /// Internal degrees of the generators of each `F_i`.
    pub betti: Vec<Vec<u32>>,
    pub differentials: Vec<Vec<String>>,
    pub minimal: bool,
    pub complex: bool,
    pub exact: bool,
    pub euler_characteristics: Vec<i64>,
    pub euler_ok: bool,
}

impl ResolutionReport {
    pub fn valid(&self) -> bool {
        self.minimal && self.complex && self.exact && self.euler_ok
    }

    /// Aligned table: one row per homological degree, one column per internal degree.
    pub fn betti_table(&self) -> String {
        let mut out = String::new();
        let width = 4;
        let _ = write!(out, "{:>4} |", "i");
        for n in 0..=self.int_bound {
            let _ = write!(out, "{n:>width$}");
        }
        out.push('\n');
        out.push_str(&"-".repeat(6 + width * (self.int_bound as usize + 1)));
        out.push('\n');
        for (i, degs) in self.betti.iter().enumerate() {
            let _ = write!(out, "{i:>4} |");
            for n in 0..=self.int_bound {
                let count = degs.iter().filter(|&&g| g == n).count();
                if count == 0 {
                    let _ = write!(out, "{:>width$}", ".");
                } else {
                    let _ = write!(out, "{count:>width$}");
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Graded pieces of the complex `Hom_A(F, A)`.
struct DualComplex<'a> {
    res: &'a Resolution,
}

impl DualComplex<'_> {
    /// Start of each generator's block in `Hom(F_i, A)^t = ⊕_j A_{g_j + t}`.
    fn layout(&self, i: usize, t: i64) -> (Vec<Option<(usize, u32)>>, usize) {
        let alg = &self.res.algebra;
        let mut at = 0;
        let blocks = self.res.steps[i]
            .degrees
            .iter()
            .map(|&g| {
                let deg = g as i64 + t;
                (deg >= 0 && deg <= alg.bound() as i64).then(|| {
                    let start = at;
                    at += alg.dim(deg as u32);
                    (start, deg as u32)
                })
            })
            .collect();
        (blocks, at)
    }

    /// `δφ(e_j) = Σ_k c_jk φ(e'_k)` for `φ ∈ Hom(F_i, A)^t`, landing in `Hom(F_{i+1}, A)^t`.
    fn apply(&self, i: usize, t: i64, phi: &[Scalar]) -> Vec<Scalar> {
        let alg = &self.res.algebra;
        let field = alg.presentation().field();
        let (src, _) = self.layout(i, t);
        let (dst, len) = self.layout(i + 1, t);
        let mut out = vec![field.zero(); len];
        for j in 0..self.res.rank(i + 1) {
            let Some((off, deg)) = dst[j] else { continue };
            for (k, c) in self.res.image_coefficients(i + 1, j).into_iter().enumerate() {
                let (Some((cdeg, c)), Some((soff, sdeg))) = (c, src[k]) else { continue };
                let value = &phi[soff..soff + alg.dim(sdeg)];
                let prod = alg.mul(cdeg, &c, sdeg, value).expect("within the truncation");
                debug_assert_eq!(cdeg + sdeg, deg);
                for (x, y) in out[off..off + prod.len()].iter_mut().zip(prod) {
                    *x = &*x + &y;
                }
            }
        }
        out
    }

    fn matrix(&self, i: usize, t: i64) -> Matrix {
        let field = self.res.algebra.presentation().field();
        let (_, cols) = self.layout(i, t);
        let (_, rows) = self.layout(i + 1, t);
        let columns: Vec<Vec<Scalar>> = (0..cols)
            .map(|c| {
                let mut e = vec![field.zero(); cols];
                e[c] = field.one();
                self.apply(i, t, &e)
            })
            .collect();
        Matrix::from_columns(field, rows, &columns)
    }

    fn coboundaries(&self, i: usize, t: i64) -> Subspace {
        let field = self.res.algebra.presentation().field();
        let (_, dim) = self.layout(i, t);
        if i == 0 {
            return Subspace::zero(field, dim);
        }
        self.matrix(i - 1, t).column_space()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtEntry {
    pub homological_degree: usize,
    pub internal_degree: i64,
    pub cochain_dim: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub dim: usize,
    /// False when the value relies on `F_{i+1}` having no generators beyond the bound.
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtReport {
    pub entries: Vec<ExtEntry>,
    /// Homological degrees whose window was empty.
    pub exhausted: Vec<usize>,
    /// Class representatives, aligned with `entries`.
    #[serde(skip)]
    classes: Vec<Vec<Vec<Scalar>>>,
}

impl ExtReport {
    pub fn dims(&self, i: usize) -> Vec<(i64, usize)> {
        self.entries.iter().filter(|e| e.homological_degree == i).map(|e| (e.internal_degree, e.dim)).collect()
    }

    pub fn total(&self, i: usize) -> usize {
        self.dims(i).iter().map(|p| p.1).sum()
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:>4} {:>5} {:>5}  exact", "i", "t", "dim");
        for e in &self.entries {
            let _ = writeln!(out, "{:>4} {:>5} {:>5}  {}", e.homological_degree, e.internal_degree, e.dim, if e.exact { "yes" } else { "assumed" });
        }
        out
    }
}

/// Internal-degree window for `Ext^i`: every block of `Hom(F_j, A)^t`,
/// `j = i-1, i, i+1`, lies inside the truncation.
pub fn ext_window(res: &Resolution, i: usize) -> Option<(i64, i64)> {
    let max_of = |j: usize| res.steps[j].degrees.iter().copied().max();
    let lo = -(max_of(i)? as i64);
    let top = [i.checked_sub(1), Some(i), Some(i + 1)].into_iter().flatten().filter_map(max_of).max().unwrap_or(0);
    let hi = res.int_bound as i64 - top as i64;
    (lo <= hi).then_some((lo, hi))
}

/// `Ext^i_A(k, A)` for `i < P`, graded by internal degree within each window.
/// Values for `i ≥ 2` assume `F_{i+1}` has no generators beyond the bound;
/// for `i ≤ 1` the next module is generated by the relations and is known.
pub fn ext_against_algebra(res: &Resolution) -> ExtReport {
    let dual = DualComplex { res };
    let mut entries = Vec::new();
    let mut exhausted = Vec::new();
    let mut classes = Vec::new();
    let max_relation = res.algebra.presentation().relation_degrees().into_iter().max().unwrap_or(0);
    for i in 0..res.hom_bound {
        let Some((lo, hi)) = ext_window(res, i) else {
            if res.rank(i) > 0 {
                exhausted.push(i);
            }
            continue;
        };
        for t in lo..=hi {
            let (_, dim) = dual.layout(i, t);
            let cocycles = dual.matrix(i, t).kernel_basis();
            let boundaries = dual.coboundaries(i, t);
            let mut quotient = Subspace::zero(res.algebra.presentation().field(), dim);
            for z in &cocycles {
                quotient.insert(boundaries.reduce(z));
            }
            entries.push(ExtEntry {
                homological_degree: i,
                internal_degree: t,
                cochain_dim: dim,
                cocycle_dim: cocycles.len(),
                coboundary_dim: boundaries.dim(),
                dim: quotient.dim(),
                exact: i <= 1 && max_relation <= res.int_bound,
            });
            classes.push(quotient.basis().to_vec());
        }
    }
    ExtReport { entries, exhausted, classes }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessClass {
    pub homological_degree: usize,
    pub internal_degree: i64,
    /// `φ(e_j)` for each generator of `F_i`.
    pub values: Vec<String>,
    #[serde(skip)]
    vector: Vec<Scalar>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict")]
pub enum GorensteinVerdict {
    NonGorenstein { witness: [WitnessClass; 2] },
    ConsistentUpToCutoff { classes: Vec<(usize, i64, usize)> },
}

impl GorensteinVerdict {
    pub fn is_non_gorenstein(&self) -> bool {
        matches!(self, GorensteinVerdict::NonGorenstein { .. })
    }
}

/// Checks that each witness is a cocycle, and that the two are independent
/// modulo coboundaries, by recomputing from the resolution.
pub fn verify_witness(res: &Resolution, witness: &[WitnessClass; 2]) -> bool {
    let dual = DualComplex { res };
    for w in witness {
        if dual.apply(w.homological_degree, w.internal_degree, &w.vector).iter().any(|x| !x.is_zero()) {
            return false;
        }
    }
    let [a, b] = witness;
    if (a.homological_degree, a.internal_degree) == (b.homological_degree, b.internal_degree) {
        let mut span = dual.coboundaries(a.homological_degree, a.internal_degree);
        let base = span.dim();
        span.insert(a.vector.clone());
        span.insert(b.vector.clone());
        span.dim() == base + 2
    } else {
        witness.iter().all(|w| !dual.coboundaries(w.homological_degree, w.internal_degree).contains(&w.vector))
    }
}

fn witness_class(res: &Resolution, i: usize, t: i64, vector: Vec<Scalar>) -> WitnessClass {
    let dual = DualComplex { res };
    let (layout, _) = dual.layout(i, t);
    let values = layout
        .iter()
        .map(|b| match b {
            Some((off, deg)) => res.algebra.render(*deg, &vector[*off..*off + res.algebra.dim(*deg)]),
            None => "0".into(),
        })
        .collect();
    WitnessClass { homological_degree: i, internal_degree: t, values, vector }
}

/// Looks for two independent classes in the exactly known part of
/// `Ext(k, A)`; their presence rules out `dim Ext = 1`.
pub fn certify(res: &Resolution) -> GorensteinVerdict {
    let ext = ext_against_algebra(res);
    let mut found: Vec<WitnessClass> = Vec::new();
    for (e, basis) in ext.entries.iter().zip(&ext.classes) {
        if !e.exact {
            continue;
        }
        for v in basis {
            if found.len() < 2 {
                found.push(witness_class(res, e.homological_degree, e.internal_degree, v.clone()));
            }
        }
    }
    if found.len() == 2 {
        let witness: [WitnessClass; 2] = [found[0].clone(), found[1].clone()];
        if verify_witness(res, &witness) {
            return GorensteinVerdict::NonGorenstein { witness };
        }
    }
    let classes = ext.entries.iter().filter(|e| e.dim > 0).map(|e| (e.homological_degree, e.internal_degree, e.dim)).collect();
    GorensteinVerdict::ConsistentUpToCutoff { classes }
}

pub fn gorenstein_certificate(p: &AlgebraPresentation, hom_bound: usize, int_bound: u32) -> Result<GorensteinVerdict> {
    let alg = p.truncate(int_bound)?;
    let res = minimal_resolution(&alg, hom_bound, int_bound)?;
    Ok(certify(&res))
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub classification: Classification,
    pub left: GorensteinVerdict,
    pub right: GorensteinVerdict,
    /// Present when relations among the generator classes are missing from
    /// the predicted presentation.
    pub observed: Option<ObservedCertificate>,
    pub falsifications: Vec<String>,
}

/// Certificates for the predicted presentation extended by the relations
/// found in computed cohomology.
#[derive(Clone, Debug, Serialize)]
pub struct ObservedCertificate {
    pub discovery_degree: u32,
    pub missing_relations: Vec<String>,
    pub presentation: AlgebraPresentation,
    pub left: GorensteinVerdict,
    pub right: GorensteinVerdict,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.falsifications.is_empty()
    }
}

/// Classifies `M`, then certifies its predicted cohomology presentation and
/// the opposite presentation against the predicted verdict.
pub fn predicted_vs_certified(m: &Matrix, hom_bound: usize, int_bound: u32) -> Result<CertificationReport> {
    let classification = classify(m)?;
    let p = &classification.presentation;
    let left = gorenstein_certificate(p, hom_bound, int_bound)?;
    let right = gorenstein_certificate(&p.opposite(), hom_bound, int_bound)?;
    let mut falsifications = Vec::new();
    compare(&classification, "", &left, &right, &mut falsifications);

    let discovery_degree = int_bound.min(DEFAULT_MAX_DEGREE);
    let h = Cohomology::compute(&DgSpec::new(m.clone())?, discovery_degree);
    let (extended, missing) = observed_presentation(&classification, &h)?;
    let observed = if missing.is_empty() {
        None
    } else {
        let left = gorenstein_certificate(&extended, hom_bound, int_bound)?;
        let right = gorenstein_certificate(&extended.opposite(), hom_bound, int_bound)?;
        compare(&classification, "observed presentation, ", &left, &right, &mut falsifications);
        let missing_relations = missing.iter().map(|r| r.render(p.names())).collect();
        Some(ObservedCertificate { discovery_degree, missing_relations, presentation: extended, left, right })
    };
    Ok(CertificationReport { classification, left, right, observed, falsifications })
}

fn compare(c: &Classification, prefix: &str, left: &GorensteinVerdict, right: &GorensteinVerdict, out: &mut Vec<String>) {
    for (side, v) in [("left", left), ("right", right)] {
        match (c.predicted_gorenstein, v.is_non_gorenstein()) {
            (GorensteinPrediction::NonGorenstein, false) => {
                out.push(format!("{prefix}{side}: predicted non-Gorenstein but no witness within bounds"))
            }
            (GorensteinPrediction::Gorenstein, true) => {
                out.push(format!("{prefix}{side}: predicted Gorenstein but a two-class witness was found"))
            }
            _ => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    const Q: Field = Field::Rational;

    fn resolve(text: &str, p: usize, d: u32) -> Resolution {
        let alg = AlgebraPresentation::parse(Q, text).unwrap().truncate(d).unwrap();
        minimal_resolution(&alg, p, d).unwrap()
    }

    #[test]
    fn skew_plane() {
        let mut res = resolve("gen x:1, y:1; rel x*y + y*x", 4, 6);
        let report = res.report();
        assert!(report.valid(), "{report:?}");
        assert_eq!(report.betti, vec![vec![0], vec![1, 1], vec![2], vec![], vec![]]);
        let ext = ext_against_algebra(&res);
        assert_eq!(ext.total(0) + ext.total(1), 0);
        assert_eq!(ext.total(2), 1);
        assert_eq!(ext.dims(2).iter().find(|p| p.1 == 1).unwrap().0, -2);
        assert!(!certify(&res).is_non_gorenstein());
    }

    #[test]
    fn square_zero_generator() {
        let mut res = resolve("gen x:1, y:1; rel y*y", 6, 8);
        let report = res.report();
        assert!(report.valid());
        assert_eq!(report.betti[1], vec![1, 1]);
        for n in 2..=6 {
            assert_eq!(report.betti[n], vec![n as u32]);
        }
        assert!(report.differentials[2][0].contains("(y)·e2_0"), "{:?}", report.differentials);
        let ext = ext_against_algebra(&res);
        assert_eq!(ext.total(0), 0);
        assert!(ext.dims(1).iter().filter(|p| p.1 > 0).count() >= 2);
        match certify(&res) {
            GorensteinVerdict::NonGorenstein { witness } => assert!(verify_witness(&res, &witness)),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn bounds_are_checked() {
        let alg = AlgebraPresentation::parse(Q, "gen x:1").unwrap().truncate(3).unwrap();
        assert!(matches!(minimal_resolution(&alg, 4, 3), Err(Error::BoundInsufficient { .. })));
        assert!(matches!(minimal_resolution(&alg, 2, 5), Err(Error::BoundInsufficient { .. })));
    }

    #[test]
    fn betti_table_layout() {
        let mut res = resolve("gen x:1, y:1; rel x*y + y*x", 2, 3);
        let table = res.report().betti_table();
        assert!(table.lines().nth(3).unwrap().starts_with("   1 |   .   2"), "{table}");
    }
}
