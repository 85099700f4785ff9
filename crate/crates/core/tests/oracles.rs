//! Independent reference computations checked against the library.

use skewdg::classify::{square_coefficient_rank, observed_presentation};
use skewdg::resolution::{ext_against_algebra, gorenstein_certificate, minimal_resolution};
use skewdg::skew::{degree_basis, dim};
use skewdg::{classify, AlgebraPresentation, Cohomology, DgSpec, Field, GorensteinPrediction, GradedElement, Matrix, Monomial};

const Q: Field = Field::Rational;

/// Sign of sorting a word in x1, x2, x3 into normal order, counting one
/// transposition per adjacent swap of distinct letters.
fn word_sign(word: &[usize]) -> (bool, [u32; 3]) {
    let mut w = word.to_vec();
    let mut swaps = 0;
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                swaps += 1;
            }
        }
    }
    let mut exps = [0; 3];
    for &g in &w {
        exps[g] += 1;
    }
    (swaps % 2 == 1, exps)
}

fn words(len: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![vec![]], |acc, _| acc.into_iter().flat_map(|w| (0..3).map(move |g| [w.clone(), vec![g]].concat())).collect())
}

fn normal_word(m: &Monomial) -> Vec<usize> {
    (0..3).flat_map(|g| std::iter::repeat_n(g, m.exps[g] as usize)).collect()
}

#[test]
fn monomial_signs_match_word_sorting() {
    for p in 0..=3 {
        for q in 0..=(6 - p) {
            for u in degree_basis(p) {
                for v in degree_basis(q) {
                    let (neg, prod) = u.mul(&v);
                    let (oracle_neg, exps) = word_sign(&[normal_word(&u), normal_word(&v)].concat());
                    assert_eq!((neg, prod.exps), (oracle_neg, exps), "{u} * {v}");
                }
            }
        }
    }
}

#[test]
fn graded_dimensions() {
    for d in 0..=12u32 {
        let distinct: std::collections::BTreeSet<[u32; 3]> = words(d as usize).iter().map(|w| word_sign(w).1).collect();
        assert_eq!(dim(d), distinct.len());
        assert_eq!(dim(d), ((d + 1) * (d + 2) / 2) as usize);
        if d <= 7 {
            assert_eq!(degree_basis(d).len(), distinct.len());
        }
    }
}

/// `∂` of a monomial expanded generator by generator from `∂x_i = Σ m_ij x_j²`.
fn d_by_words(m: &Matrix, mono: &Monomial) -> GradedElement {
    let word = normal_word(mono);
    let mut out = GradedElement::zero(Q, mono.degree() + 1);
    for (k, &g) in word.iter().enumerate() {
        let sign = if k % 2 == 1 { -Q.one() } else { Q.one() };
        for j in 0..3 {
            let mut expanded = word[..k].to_vec();
            expanded.extend([j, j]);
            expanded.extend(&word[k + 1..]);
            let (neg, exps) = word_sign(&expanded);
            let c = &(&sign * m.get(g, j)) * &if neg { -Q.one() } else { Q.one() };
            let term = GradedElement::monomial(Monomial { exps }, Q.one());
            out = out.add_scaled(&term, &c);
        }
    }
    out
}

#[test]
fn differential_matches_word_expansion() {
    let m = Matrix::from_ints(Q, &[[1, -2, 3], [0, 5, -1], [2, 2, 7]]);
    let spec = DgSpec::new(m.clone()).unwrap();
    for d in 0..=5 {
        for mono in degree_basis(d) {
            assert_eq!(spec.d_monomial(&mono), d_by_words(&m, &mono), "{mono}");
        }
    }
}

#[test]
fn closed_form_cohomology() {
    let h = Cohomology::compute(&DgSpec::new(Matrix::identity(Q, 3)).unwrap(), 8);
    assert_eq!(h.dims(), [1, 0, 0, 0, 0, 0, 0, 0, 0]);
    let zero = Cohomology::compute(&DgSpec::new(Matrix::zeros(Q, 3, 3)).unwrap(), 8);
    assert_eq!(zero.dims(), (0..=8).map(dim).collect::<Vec<_>>());
    // d = 0 on x3 with d x1 = x1², d x2 = x2²: H is k[x3]/... with one class per degree.
    let h = Cohomology::compute(&DgSpec::new(Matrix::from_ints(Q, &[[1, 0, 0], [0, 1, 0], [0, 0, 0]])).unwrap(), 8);
    assert_eq!(h.dims(), vec![1; 9]);
    for d in 0..=8 {
        assert_eq!(h.cocycle_dim(d) - h.coboundary_dim(d), h.dim(d));
    }
}

#[test]
fn coefficient_matrix_of_the_identity() {
    assert_eq!(square_coefficient_rank(&Matrix::identity(Q, 3)).unwrap(), 6);
}

#[test]
fn koszul_resolutions() {
    // Quadratic complete intersection in two variables: Betti numbers 1, 2, 1.
    let alg = AlgebraPresentation::parse(Q, "gen x:1, y:1; rel x*y + y*x").unwrap().truncate(8).unwrap();
    let mut res = minimal_resolution(&alg, 4, 8).unwrap();
    let report = res.report();
    assert_eq!(report.betti, vec![vec![0], vec![1, 1], vec![2], vec![], vec![]]);
    // Exterior algebra on two generators: F_n has n + 1 generators in degree n.
    let ext = AlgebraPresentation::parse(Q, "gen x:1, y:1; rel x*x; rel y*y; rel x*y + y*x").unwrap().truncate(8).unwrap();
    let res = minimal_resolution(&ext, 5, 8).unwrap();
    for n in 0..=5 {
        assert_eq!(res.generator_degrees(n), vec![n as u32; n + 1].as_slice());
    }
    // Frobenius, hence Gorenstein: Ext(k, A) is one-dimensional, in degree 0.
    let e = ext_against_algebra(&res);
    assert_eq!(e.total(0), 1);
}

/// The three degenerate rank-one matrices: cohomology has one extra cubic
/// relation beyond the predicted presentation, and with it the algebra
/// carries no non-Gorenstein witness.
#[test]
fn degenerate_rank_one_cohomology() {
    for rows in [[[1, 1, 0], [1, 1, 0], [1, 1, 0]], [[1, 1, 1], [1, 1, 1], [2, 2, 2]], [[0, 1, 1], [0, 1, 1], [0, 1, 1]]] {
        let m = Matrix::from_ints(Q, &rows);
        let c = classify(&m).unwrap();
        assert_eq!(c.predicted_gorenstein, GorensteinPrediction::NonGorenstein);
        let h = Cohomology::compute(&DgSpec::new(m).unwrap(), 8);
        assert_eq!(h.dims(), (1..=9).collect::<Vec<_>>());
        assert_eq!(c.presentation.truncate(5).unwrap().hilbert_function(), [1, 2, 3, 5, 8, 13]);
        let (observed, missing) = observed_presentation(&c, &h).unwrap();
        assert_eq!(missing.len(), 1, "{rows:?}");
        assert_eq!(c.presentation.relation_degrees(), [2]);
        assert_eq!(observed.truncate(8).unwrap().hilbert_function(), h.dims());
        assert!(gorenstein_certificate(&c.presentation, 5, 10).unwrap().is_non_gorenstein());
        assert!(!gorenstein_certificate(&observed, 5, 10).unwrap().is_non_gorenstein());
    }
}

/// `k<x,y>/(x², y²)` has one-dimensional Ext(k, A), in homological degree 1.
#[test]
fn free_product_of_dual_numbers() {
    let alg = AlgebraPresentation::parse(Q, "gen x:1, y:1; rel x*x; rel y*y").unwrap().truncate(10).unwrap();
    assert_eq!(alg.hilbert_function(), [1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]);
    let res = minimal_resolution(&alg, 4, 10).unwrap();
    let e = ext_against_algebra(&res);
    assert_eq!((e.total(0), e.total(1)), (0, 1));
    assert_eq!(e.dims(1).iter().filter(|(_, d)| *d > 0).collect::<Vec<_>>(), [&(0, 1)]);
}
