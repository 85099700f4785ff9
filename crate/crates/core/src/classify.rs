//! Rank-based case analysis of the differential matrix: canonical
//! parameters, predicted cohomology presentation and Gorenstein verdict, and
//! a cross-check of every prediction against computed cohomology.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cohomology::Cohomology;
use crate::dg::DgSpec;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::presentation::{cases, AlgebraPresentation, NcPolynomial};
use crate::skew::{self, GradedElement};
use crate::transform::{apply_transform, substitute, MonomialMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    R0,
    R3,
    R2PairingNonzero,
    R2PairingZero,
    R1a,
    R1b,
    R1c,
    R1d,
    R1e,
    R1f,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::R0 => "R0",
            CaseLabel::R3 => "R3",
            CaseLabel::R2PairingNonzero => "R2_pairing_nonzero",
            CaseLabel::R2PairingZero => "R2_pairing_zero",
            CaseLabel::R1a => "R1a",
            CaseLabel::R1b => "R1b",
            CaseLabel::R1c => "R1c",
            CaseLabel::R1d => "R1d",
            CaseLabel::R1e => "R1e",
            CaseLabel::R1f => "R1f",
        }
    }

    pub const RANK_ONE: [CaseLabel; 6] = [CaseLabel::R1a, CaseLabel::R1b, CaseLabel::R1c, CaseLabel::R1d, CaseLabel::R1e, CaseLabel::R1f];
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GorensteinPrediction {
    Gorenstein,
    NonGorenstein,
}

/// Normalized data of a rank-one matrix: after an optional swap of `x1` with
/// another variable, `M = (1, l1, l2)ᵀ · row`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankOneData {
    pub row: [Scalar; 3],
    pub l1: Scalar,
    pub l2: Scalar,
    /// `m12 l1² + m13 l2²`.
    pub s_value: Scalar,
    /// Index of the variable exchanged with `x1`, if any.
    pub swapped_with: Option<usize>,
    pub normalized: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Parameters {
    None,
    RankTwo { s: Vec<Scalar>, t: Vec<Scalar>, pairing: Scalar },
    RankOne(RankOneData),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorRepresentative {
    pub name: String,
    pub degree: u32,
    pub representative: GradedElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub field: Field,
    pub matrix: Matrix,
    pub rank: usize,
    pub case: CaseLabel,
    pub parameters: Parameters,
    pub generators: Vec<GeneratorRepresentative>,
    pub presentation: AlgebraPresentation,
    pub predicted_gorenstein: GorensteinPrediction,
}

/// Writes a rank-one `M` as `(1, l1, l2)ᵀ · row`, first swapping `x1` with
/// the first variable whose row is nonzero when row 1 vanishes.
pub fn normalize_rank_one(m: &Matrix) -> Result<RankOneData> {
    check_square(m)?;
    let rank = m.rank();
    if rank != 1 {
        return Err(Error::WrongRank { expected: "1".into(), actual: rank });
    }
    let field = m.field();
    let k = (0..3).find(|&i| m.row(i).iter().any(|x| !x.is_zero())).expect("rank one");
    let (normalized, swapped_with) = match k {
        0 => (m.clone(), None),
        _ => (apply_transform(&MonomialMatrix::transposition(field, 0, k), m)?, Some(k)),
    };
    let row: [Scalar; 3] = [0, 1, 2].map(|j| normalized.get(0, j).clone());
    let j = (0..3).find(|&j| !row[j].is_zero()).expect("first row nonzero after the swap");
    let pivot_inv = row[j].inv().expect("nonzero");
    let l1 = normalized.get(1, j) * &pivot_inv;
    let l2 = normalized.get(2, j) * &pivot_inv;
    let s_value = &(&row[1] * &(&l1 * &l1)) + &(&row[2] * &(&l2 * &l2));
    Ok(RankOneData { row, l1, l2, s_value, swapped_with, normalized })
}

fn check_square(m: &Matrix) -> Result<()> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(Error::Dimension(format!("expected a 3x3 matrix, got {}x{}", m.rows(), m.cols())));
    }
    Ok(())
}

pub fn rank_one_case(r: &RankOneData) -> CaseLabel {
    let on_quadric = r.s_value == r.row[0];
    match (on_quadric, r.l1.is_zero(), r.l2.is_zero()) {
        (false, false, false) => CaseLabel::R1a,
        (false, _, _) => CaseLabel::R1b,
        (true, false, false) => CaseLabel::R1c,
        (true, false, true) => CaseLabel::R1d,
        (true, true, false) => CaseLabel::R1e,
        (true, true, true) => CaseLabel::R1f,
    }
}

/// Whether the closed-form conditions single out a non-Gorenstein algebra.
pub fn rank_one_prediction(case: CaseLabel, r: &RankOneData) -> GorensteinPrediction {
    let [m11, m12, m13] = &r.row;
    let degenerate = match case {
        CaseLabel::R1c => (m12 * m13).is_zero(),
        CaseLabel::R1a => {
            let lhs = &(&(m12 * m13) * &(&r.l1 * &r.l1)) * &(&(&r.l2 * &r.l2) * &r.s_value.field().int(4));
            let diff = &r.s_value - m11;
            lhs == &diff * &diff
        }
        _ => false,
    };
    if degenerate {
        GorensteinPrediction::NonGorenstein
    } else {
        GorensteinPrediction::Gorenstein
    }
}

pub fn classify(m: &Matrix) -> Result<Classification> {
    check_square(m)?;
    let field = m.field();
    let rank = m.rank();
    let (case, parameters) = match rank {
        0 => (CaseLabel::R0, Parameters::None),
        3 => (CaseLabel::R3, Parameters::None),
        2 => {
            let s = m.kernel_basis().remove(0);
            let t = m.transpose().kernel_basis().remove(0);
            let pairing = pairing(&s, &t);
            let case = if pairing.is_zero() { CaseLabel::R2PairingZero } else { CaseLabel::R2PairingNonzero };
            (case, Parameters::RankTwo { s, t, pairing })
        }
        _ => {
            let r = normalize_rank_one(m)?;
            (rank_one_case(&r), Parameters::RankOne(r))
        }
    };
    let predicted_gorenstein = match &parameters {
        Parameters::RankOne(r) => rank_one_prediction(case, r),
        _ => GorensteinPrediction::Gorenstein,
    };
    let data = cases::build(field, case, &parameters);
    // Representatives are built in normalized coordinates y with x = P y.
    let back = match &parameters {
        Parameters::RankOne(RankOneData { swapped_with: Some(k), .. }) => Some(MonomialMatrix::transposition(field, 0, *k)),
        _ => None,
    };
    let generators = data
        .presentation
        .names()
        .iter()
        .zip(data.presentation.degrees())
        .zip(&data.representatives)
        .map(|((name, &degree), rep)| GeneratorRepresentative {
            name: name.clone(),
            degree,
            representative: match &back {
                Some(p) => substitute(rep, &p.inverse()),
                None => rep.clone(),
            },
        })
        .collect();
    Ok(Classification {
        field,
        matrix: m.clone(),
        rank,
        case,
        parameters,
        generators,
        presentation: data.presentation,
        predicted_gorenstein,
    })
}

/// `Σ s_i t_i²`.
pub fn pairing(s: &[Scalar], t: &[Scalar]) -> Scalar {
    s.iter().zip(t).fold(s[0].field().zero(), |acc, (si, ti)| &acc + &(si * &(ti * ti)))
}

/// Hilbert function of the predicted presentation through degree `bound`.
pub fn predicted_dims(c: &Classification, bound: u32) -> Result<Vec<usize>> {
    Ok(c.presentation.truncate(bound)?.hilbert_function())
}

/// Rank of the 6x9 coefficient matrix built from `M` whose rank is 5
/// exactly when `M` has rank 2.
pub fn square_coefficient_rank(m: &Matrix) -> Result<usize> {
    Ok(squares_coefficient_matrix(m)?.rank())
}

pub fn squares_coefficient_matrix(m: &Matrix) -> Result<Matrix> {
    check_square(m)?;
    let field = m.field();
    let z = || field.zero();
    // column block k holds (m_1k, m_2k, m_3k), i.e. column k of M
    let col = |k: usize| -> [Scalar; 3] { [m.get(0, k).clone(), m.get(1, k).clone(), m.get(2, k).clone()] };
    let zero3 = || [z(), z(), z()];
    let rows: Vec<[[Scalar; 3]; 3]> = vec![
        [col(0), zero3(), zero3()],
        [col(1), col(0), zero3()],
        [col(2), zero3(), col(0)],
        [zero3(), col(2), col(1)],
        [zero3(), col(1), zero3()],
        [zero3(), zero3(), col(2)],
    ];
    Matrix::from_rows(field, rows.into_iter().map(|blocks| blocks.into_iter().flatten().collect()).collect())
}

/// The ideal generated by the linear forms `r_i = Σ_j m_ij u_j` in the
/// commutative polynomial ring `k[u1, u2, u3]`, `u_j` standing for `x_j²`.
#[derive(Clone, Debug, Serialize)]
pub struct SquaresIdealReport {
    pub forms: Vec<Vec<Scalar>>,
    /// Indices of two forms spanning the ideal's linear part.
    pub independent: [usize; 2],
    /// `t` with `Σ t_i r_i = 0`.
    pub dependency: Vec<Scalar>,
    /// Index of the variable whose powers span the quotient.
    pub surviving_variable: usize,
    pub quotient_dims: Vec<usize>,
    /// Degrees where `u_k^n` fails to span the quotient.
    pub spanning_failures: Vec<u32>,
}

impl SquaresIdealReport {
    pub fn quotient_is_univariate(&self) -> bool {
        self.quotient_dims.iter().all(|&d| d == 1) && self.spanning_failures.is_empty()
    }
}

pub fn squares_ideal_analysis(m: &Matrix, bound: u32) -> Result<SquaresIdealReport> {
    check_square(m)?;
    let rank = m.rank();
    if rank != 2 {
        return Err(Error::WrongRank { expected: "2".into(), actual: rank });
    }
    let field = m.field();
    let forms = m.row_vecs();
    let (_, pivots) = m.transpose().rref();
    let independent = [pivots[0], pivots[1]];
    let dependency = m.transpose().kernel_basis().remove(0);
    let row_space = m.row_space();
    let surviving_variable = (0..3)
        .find(|&k| {
            let mut e = vec![field.zero(); 3];
            e[k] = field.one();
            !row_space.contains(&e)
        })
        .expect("a rank-2 row space misses some coordinate vector");

    // Commutative monomials u^(a,b,c) are indexed exactly like skew monomials.
    let mut quotient_dims = Vec::new();
    let mut spanning_failures = Vec::new();
    for n in 0..=bound {
        let basis = skew::degree_basis(n);
        let mut rows = Vec::new();
        if n >= 1 {
            for mono in skew::degree_basis(n - 1) {
                for form in &forms {
                    let mut row = vec![field.zero(); basis.len()];
                    for (j, c) in form.iter().enumerate() {
                        let mut exps = mono.exps;
                        exps[j] += 1;
                        let idx = skew::Monomial { exps }.index();
                        row[idx] = &row[idx] + c;
                    }
                    rows.push(row);
                }
            }
        }
        let ideal = crate::linalg::Subspace::spanned_by(field, basis.len(), rows);
        quotient_dims.push(basis.len() - ideal.dim());
        let mut exps = [0; 3];
        exps[surviving_variable] = n;
        let mut power = vec![field.zero(); basis.len()];
        power[skew::Monomial { exps }.index()] = field.one();
        if ideal.contains(&power) {
            spanning_failures.push(n);
        }
    }
    Ok(SquaresIdealReport { forms, independent, dependency, surviving_variable, quotient_dims, spanning_failures })
}

/// Outcome of a relation or ring-structure probe.
#[derive(Clone, Debug, Serialize)]
pub struct Probe {
    pub description: String,
    pub expected: bool,
    pub observed: bool,
}

impl Probe {
    pub fn passed(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub classification: Classification,
    pub max_degree: u32,
    pub computed_dims: Vec<usize>,
    pub predicted_dims: Vec<usize>,
    /// Per degree, the rank of the map from the presentation to cohomology.
    pub realization_ranks: Vec<usize>,
    pub probes: Vec<Probe>,
    pub square_coefficient_rank: Option<usize>,
    pub squares_ideal: Option<SquaresIdealReport>,
    /// Relations among the generator classes that the predicted presentation lacks.
    pub missing_relations: Vec<String>,
    /// Hilbert function of the predicted presentation extended by the missing relations.
    pub observed_dims: Vec<usize>,
    pub falsifications: Vec<String>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.falsifications.is_empty()
    }
}

/// Image in the cochain algebra of a polynomial in the presentation generators.
pub fn realize(poly: &NcPolynomial, reps: &[GradedElement], degree: u32) -> GradedElement {
    let field = reps.first().map(GradedElement::field).unwrap_or(poly.field());
    let mut out = GradedElement::zero(field, degree);
    for (w, c) in poly.terms() {
        let term = w.iter().fold(GradedElement::one(field), |acc, &g| acc.mul(&reps[g]));
        out = out.add_scaled(&term, c);
    }
    out
}

/// The predicted presentation extended by every relation that holds among the
/// generator classes through `max_degree`, degree by degree. The returned
/// list holds only the added relations; it is empty when the prediction is
/// faithful in that range.
pub fn observed_presentation(c: &Classification, h: &Cohomology) -> Result<(AlgebraPresentation, Vec<NcPolynomial>)> {
    let field = c.field;
    let reps: Vec<GradedElement> = c.generators.iter().map(|g| g.representative.clone()).collect();
    let mut current = c.presentation.clone();
    let mut added = Vec::new();
    for d in 1..=h.max_degree() {
        let truncated = current.truncate(d)?;
        let words = truncated.basis(d).to_vec();
        if words.is_empty() {
            continue;
        }
        let mut columns = Vec::with_capacity(words.len());
        for w in &words {
            let image = realize(&NcPolynomial::word(field, w.clone()), &reps, d);
            match h.class_of(&image)? {
                Some(class) => columns.push(class.coordinates),
                None => return Err(Error::Presentation(format!("word image in degree {d} is not a cocycle"))),
            }
        }
        let kernel = Matrix::from_columns(field, h.dim(d), &columns).kernel_basis();
        if kernel.is_empty() {
            continue;
        }
        let found: Vec<NcPolynomial> = kernel
            .iter()
            .map(|k| NcPolynomial::from_terms(field, words.iter().cloned().zip(k.iter().cloned())))
            .collect();
        current = current.with_relations(found.clone())?;
        added.extend(found);
    }
    Ok((current, added))
}

pub fn crosscheck(m: &Matrix, max_degree: u32) -> Result<CrosscheckReport> {
    let c = classify(m)?;
    let field = c.field;
    let spec = DgSpec::new(m.clone())?;
    let h = Cohomology::compute(&spec, max_degree);
    let truncated = c.presentation.truncate(max_degree)?;
    let predicted = truncated.hilbert_function();
    let computed = h.dims();
    let reps: Vec<GradedElement> = c.generators.iter().map(|g| g.representative.clone()).collect();
    let mut falsifications = Vec::new();
    let mut probes = Vec::new();

    if predicted != computed {
        falsifications.push(format!("predicted dims {predicted:?} differ from computed {computed:?}"));
    }
    for g in &c.generators {
        if !spec.d(&g.representative).is_zero() {
            falsifications.push(format!("generator {} = {} is not a cocycle", g.name, g.representative));
        }
    }

    // Relations vanish in cohomology, and basis words map onto H^d.
    for (rel, deg) in c.presentation.relations().iter().zip(c.presentation.relation_degrees()) {
        if deg > max_degree {
            continue;
        }
        let image = realize(rel, &reps, deg);
        let zero = h.class_of(&image)?.map(|k| k.is_zero()).unwrap_or(false);
        probes.push(Probe { description: format!("relation {} vanishes", rel.render(c.presentation.names())), expected: true, observed: zero });
    }
    let mut realization_ranks = Vec::new();
    for d in 0..=max_degree {
        let mut span = crate::linalg::Subspace::zero(field, h.dim(d));
        for w in truncated.basis(d) {
            let image = realize(&NcPolynomial::word(field, w.clone()), &reps, d);
            if let Some(class) = h.class_of(&image)? {
                span.insert(class.coordinates);
            }
        }
        realization_ranks.push(span.dim());
        if span.dim() != h.dim(d) || span.dim() != truncated.dim(d) {
            falsifications.push(format!(
                "degree {d}: presentation words span {} of H^{d} (dim {}), presentation has dim {}",
                span.dim(),
                h.dim(d),
                truncated.dim(d)
            ));
        }
    }

    let (observed, missing) = observed_presentation(&c, &h)?;
    let observed_dims = observed.truncate(max_degree)?.hilbert_function();
    let missing_relations: Vec<String> = missing.iter().map(|r| r.render(c.presentation.names())).collect();
    if !missing_relations.is_empty() {
        falsifications.push(format!("relations hold in cohomology but not in the prediction: {}", missing_relations.join(", ")));
    }

    let mut coefficient_rank = None;
    let mut squares_ideal = None;
    match &c.parameters {
        Parameters::RankTwo { s, t, pairing } => {
            let xi = GradedElement::linear(t);
            if max_degree >= 2 {
                let square_zero = h.class_of_cocycle(&xi.mul(&xi))?.is_zero();
                probes.push(Probe { description: "square of the degree-1 generator vanishes".into(), expected: pairing.is_zero(), observed: square_zero });
            }
            if pairing.is_zero() {
                let eta = GradedElement::squares(s);
                for k in 1..=max_degree / 2 {
                    let nonzero = !h.class_of_cocycle(&eta.pow(k))?.is_zero();
                    probes.push(Probe { description: format!("power {k} of the degree-2 generator is nonzero"), expected: true, observed: nonzero });
                }
            } else {
                for k in 1..=max_degree {
                    let nonzero = !h.class_of_cocycle(&xi.pow(k))?.is_zero();
                    probes.push(Probe { description: format!("power {k} of the degree-1 generator is nonzero"), expected: true, observed: nonzero });
                }
            }
            let r = square_coefficient_rank(m)?;
            if r != 5 {
                falsifications.push(format!("coefficient matrix has rank {r}, expected 5"));
            }
            coefficient_rank = Some(r);
            let ideal = squares_ideal_analysis(m, max_degree.max(2))?;
            if !ideal.quotient_is_univariate() {
                falsifications.push(format!("squares ideal quotient has dims {:?}", ideal.quotient_dims));
            }
            squares_ideal = Some(ideal);
        }
        Parameters::RankOne(_) => {
            if max_degree >= 1 {
                let mut span = crate::linalg::Subspace::zero(field, h.dim(1));
                for g in c.generators.iter().filter(|g| g.degree == 1) {
                    span.insert(h.class_of_cocycle(&g.representative)?.coordinates);
                }
                probes.push(Probe { description: "degree-1 generators are independent in H^1".into(), expected: true, observed: span.dim() == 2 });
            }
        }
        Parameters::None => {}
    }
    for p in probes.iter().filter(|p| !p.passed()) {
        falsifications.push(format!("probe failed: {}", p.description));
    }
    Ok(CrosscheckReport {
        classification: c,
        max_degree,
        computed_dims: computed,
        predicted_dims: predicted,
        realization_ranks,
        probes,
        square_coefficient_rank: coefficient_rank,
        squares_ideal,
        missing_relations,
        observed_dims,
        falsifications,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn m(rows: [[i64; 3]; 3]) -> Matrix {
        Matrix::from_ints(Q, &rows)
    }

    #[test]
    fn example_matrices() {
        let c = classify(&m([[1, 1, 0], [1, 1, 0], [1, 1, 0]])).unwrap();
        assert_eq!((c.rank, c.case, c.predicted_gorenstein), (1, CaseLabel::R1c, GorensteinPrediction::NonGorenstein));
        let c = classify(&m([[1, 1, 1], [1, 1, 1], [2, 2, 2]])).unwrap();
        assert_eq!((c.case, c.predicted_gorenstein), (CaseLabel::R1a, GorensteinPrediction::NonGorenstein));
        let c = classify(&m([[0, 1, 1], [0, 1, 1], [0, 1, 1]])).unwrap();
        assert_eq!((c.case, c.predicted_gorenstein), (CaseLabel::R1a, GorensteinPrediction::NonGorenstein));
        let c = classify(&m([[1, 0, 0], [0, 1, 0], [0, 0, 0]])).unwrap();
        assert_eq!(c.case, CaseLabel::R2PairingNonzero);
        match &c.parameters {
            Parameters::RankTwo { s, t, pairing } => {
                assert_eq!(s, &vec![Q.zero(), Q.zero(), Q.one()]);
                assert_eq!(t, &vec![Q.zero(), Q.zero(), Q.one()]);
                assert!(pairing.is_one());
            }
            p => panic!("{p:?}"),
        }
        assert_eq!(classify(&m([[0; 3]; 3])).unwrap().case, CaseLabel::R0);
        assert_eq!(classify(&Matrix::identity(Q, 3)).unwrap().case, CaseLabel::R3);
    }

    #[test]
    fn normalization() {
        let r = normalize_rank_one(&m([[1, 1, 0], [1, 1, 0], [1, 1, 0]])).unwrap();
        assert_eq!((r.l1.clone(), r.l2.clone(), r.swapped_with), (Q.one(), Q.one(), None));
        let r = normalize_rank_one(&m([[0, 0, 0], [0, 1, 1], [0, 2, 2]])).unwrap();
        assert_eq!(r.swapped_with, Some(1));
        assert_eq!(r.row, [Q.one(), Q.zero(), Q.one()]);
        assert_eq!((r.l1.clone(), r.l2.clone()), (Q.zero(), Q.int(2)));
        assert_eq!(r.normalized.rank(), 1);
        let r = normalize_rank_one(&m([[0, 1, 1], [0, 0, 0], [0, 0, 0]])).unwrap();
        assert_eq!((r.l1.is_zero(), r.l2.is_zero()), (true, true));
        assert_eq!(rank_one_case(&r), CaseLabel::R1f);
        assert!(matches!(normalize_rank_one(&Matrix::identity(Q, 3)), Err(Error::WrongRank { .. })));
    }

    #[test]
    fn coefficient_matrix_ranks() {
        assert_eq!(square_coefficient_rank(&m([[1, 0, 0], [0, 1, 0], [0, 0, 0]])).unwrap(), 5);
        assert_eq!(square_coefficient_rank(&m([[1, 2, 3], [2, 4, 7], [3, 6, 10]])).unwrap(), 5);
        assert_eq!(square_coefficient_rank(&Matrix::identity(Q, 3)).unwrap(), 6);
        assert_eq!(square_coefficient_rank(&m([[0; 3]; 3])).unwrap(), 0);
    }

    #[test]
    fn squares_ideal() {
        let r = squares_ideal_analysis(&m([[1, 0, 0], [0, 1, 0], [0, 0, 0]]), 10).unwrap();
        assert_eq!(r.surviving_variable, 2);
        assert!(r.quotient_is_univariate());
        let r = squares_ideal_analysis(&m([[1, 0, 0], [0, 0, 1], [0, 0, 0]]), 10).unwrap();
        assert_eq!(r.surviving_variable, 1);
        let r = squares_ideal_analysis(&m([[1, 2, 0], [0, 1, 1], [2, 5, 1]]), 6).unwrap();
        assert_eq!(r.independent, [0, 1]);
        assert_eq!(r.dependency, vec![Q.int(-2), Q.int(-1), Q.one()]);
        assert!(r.quotient_is_univariate());
    }

    #[test]
    fn crosscheck_examples() {
        for rows in [[[1, 0, 0], [0, 0, 1], [0, 0, 0]], [[1, 0, 0], [0, 1, 0], [0, 0, 0]], [[2, 1, 0], [0, 1, 3], [1, 1, 1]], [[0; 3]; 3]] {
            let r = crosscheck(&m(rows), 6).unwrap();
            assert!(r.passed(), "{rows:?}: {:?}", r.falsifications);
        }
    }
}
