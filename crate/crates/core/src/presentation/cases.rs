use super::{AlgebraPresentation, NcPolynomial};
use crate::classify::{CaseLabel, Classification, Parameters};
use crate::linalg::{Field, Scalar};
use crate::skew::GradedElement;

/// A predicted presentation together with a cocycle representative for each
/// generator, written in the coordinates of the normalized matrix.
pub(crate) struct CaseData {
    pub presentation: AlgebraPresentation,
    pub representatives: Vec<GradedElement>,
}

/// The predicted presentation of the cohomology algebra for a classified matrix.
pub fn presentation_of_case(c: &Classification) -> AlgebraPresentation {
    build(c.field, c.case, &c.parameters).presentation
}

pub(crate) fn build(field: Field, case: CaseLabel, params: &Parameters) -> CaseData {
    let q = |g: usize| NcPolynomial::generator(field, g);
    let x = |i: usize| GradedElement::generator(field, i);
    let sq = |i: usize| GradedElement::generator(field, i).pow(2);
    let (gens, relations, representatives): (Vec<(&str, u32)>, Vec<NcPolynomial>, Vec<GradedElement>) = match (case, params) {
        (CaseLabel::R3, _) => (vec![], vec![], vec![]),
        (CaseLabel::R0, _) => (
            vec![("x1", 1), ("x2", 1), ("x3", 1)],
            vec![q(0).anticommutator(&q(1)), q(0).anticommutator(&q(2)), q(1).anticommutator(&q(2))],
            vec![x(0), x(1), x(2)],
        ),
        (CaseLabel::R2PairingNonzero, Parameters::RankTwo { t, .. }) => {
            (vec![("xi", 1)], vec![], vec![GradedElement::linear(t)])
        }
        (CaseLabel::R2PairingZero, Parameters::RankTwo { s, t, .. }) => (
            vec![("xi", 1), ("eta", 2)],
            vec![q(0).mul(&q(0)), q(0).commutator(&q(1))],
            vec![GradedElement::linear(t), GradedElement::squares(s)],
        ),
        (_, Parameters::RankOne(r)) => {
            let [m11, m12, m13] = [&r.row[0], &r.row[1], &r.row[2]];
            let lin = |c: [Scalar; 3]| GradedElement::linear(&c);
            let xi_l1 = lin([r.l1.clone(), -field.one(), field.zero()]);
            let xi_l2 = lin([r.l2.clone(), field.zero(), -field.one()]);
            let (xi, eta) = (q(0), q(1));
            let quad = |a: &Scalar, b: &Scalar| xi.mul(&xi).scale(a).add(&eta.mul(&eta).scale(b));
            let two_dim = vec![("xi", 1), ("eta", 1)];
            let three_dim = vec![("xi", 1), ("eta", 1), ("zeta", 2)];
            let zeta = q(2);
            let central = |rel: NcPolynomial| vec![rel, zeta.commutator(&xi), zeta.commutator(&eta), xi.anticommutator(&eta)];
            match case {
                CaseLabel::R1a => {
                    // ξη + ηξ = 2 l1 l2 ⌈x1²⌉ and m12 ξ² + m13 η² = (S - m11) ⌈x1²⌉
                    let two_l1l2 = &(&r.l1 * &r.l2) * &field.int(2);
                    let coeff = &(&r.s_value - m11) * &two_l1l2.inv().expect("l1 l2 ≠ 0 in this case");
                    let rel = quad(m12, m13).sub(&xi.anticommutator(&eta).scale(&coeff));
                    (two_dim, vec![rel], vec![xi_l1, xi_l2])
                }
                CaseLabel::R1b => (two_dim, vec![xi.anticommutator(&eta)], vec![xi_l1, xi_l2]),
                CaseLabel::R1c => (two_dim, vec![quad(m12, m13)], vec![xi_l1, xi_l2]),
                CaseLabel::R1d => (three_dim, central(quad(m12, m13)), vec![xi_l1, x(2), sq(0)]),
                CaseLabel::R1e => (three_dim, central(quad(m13, m12)), vec![xi_l2, x(1), sq(0)]),
                CaseLabel::R1f => (three_dim, central(quad(m13, m12)), vec![x(2), x(1), sq(0)]),
                _ => unreachable!("rank-one parameters with label {case:?}"),
            }
        }
        (case, params) => unreachable!("parameters {params:?} do not fit {case:?}"),
    };
    let presentation = AlgebraPresentation::new(field, &gens, relations).expect("case presentations are homogeneous");
    CaseData { presentation, representatives }
}
