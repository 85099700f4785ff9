//! Randomized invariants of the linear algebra, the skew algebra, the
//! differential, the transform action and the case analysis.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skewdg::classify::{observed_presentation, predicted_dims};
use skewdg::skew::degree_basis;
use skewdg::suite::{random_matrix, random_monomial, random_rank_one, LARGE_PRIME};
use skewdg::transform::invariance_check;
use skewdg::{apply_transform, classify, Cohomology, DgSpec, Field, GorensteinPrediction, GradedElement, Matrix, Monomial, MonomialMatrix, Scalar};

const Q: Field = Field::Rational;

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, cols), rows)
}

fn element(degree: u32) -> impl Strategy<Value = GradedElement> {
    let n = degree_basis(degree).len();
    prop::collection::vec(-3i64..=3, n).prop_map(move |v| {
        let coords: Vec<Scalar> = v.into_iter().map(|c| Q.int(c)).collect();
        GradedElement::from_vector(Q, degree, &coords)
    })
}

fn graded() -> impl Strategy<Value = GradedElement> {
    (0u32..=3).prop_flat_map(element)
}

fn rng() -> impl Strategy<Value = ChaCha8Rng> {
    any::<u64>().prop_map(ChaCha8Rng::seed_from_u64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(rows in 1usize..5, cols in 1usize..6, seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let entries: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rand::Rng::gen_range(&mut r, -3..=3)).collect()).collect();
        let m = Matrix::from_ints(Q, &entries);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for k in &kernel {
            prop_assert!(m.mul_vec(k).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rank_agrees_over_q_and_large_prime(entries in int_matrix(4, 4)) {
        let fp = Field::prime(LARGE_PRIME).unwrap();
        prop_assert_eq!(Matrix::from_ints(Q, &entries).rank(), Matrix::from_ints(fp, &entries).rank());
    }

    #[test]
    fn monomial_product_is_associative(a in prop::array::uniform3(0u32..4), b in prop::array::uniform3(0u32..4), c in prop::array::uniform3(0u32..4)) {
        let (a, b, c) = (Monomial { exps: a }, Monomial { exps: b }, Monomial { exps: c });
        let (s1, ab) = a.mul(&b);
        let (s2, ab_c) = ab.mul(&c);
        let (s3, bc) = b.mul(&c);
        let (s4, a_bc) = a.mul(&bc);
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(s1 ^ s2, s3 ^ s4);
    }

    #[test]
    fn elements_form_an_algebra(u in graded(), v in graded(), w in graded()) {
        prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        if v.degree() == w.degree() {
            prop_assert_eq!(u.mul(&v.add(&w)), u.mul(&v).add(&u.mul(&w)));
        }
    }

    #[test]
    fn differential_is_a_derivation(entries in int_matrix(3, 3), u in graded(), v in graded()) {
        let spec = DgSpec::new(Matrix::from_ints(Q, &entries)).unwrap();
        let sign = if u.degree() % 2 == 1 { -Q.one() } else { Q.one() };
        let rhs = spec.d(&u).mul(&v).add_scaled(&u.mul(&spec.d(&v)), &sign);
        prop_assert_eq!(spec.d(&u.mul(&v)), rhs);
        prop_assert!(spec.d(&spec.d(&u)).is_zero());
    }

    #[test]
    fn transform_is_an_action(mut r in rng()) {
        let m = random_matrix(Q, &mut r);
        let (c1, c2) = (random_monomial(Q, &mut r), random_monomial(Q, &mut r));
        let stepwise = apply_transform(&c2, &apply_transform(&c1, &m).unwrap()).unwrap();
        prop_assert_eq!(&stepwise, &apply_transform(&c1.compose(&c2), &m).unwrap());
        prop_assert_eq!(stepwise.rank(), m.rank());
        prop_assert_eq!(apply_transform(&MonomialMatrix::identity(Q), &m).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cohomology_is_invariant_under_transforms(mut r in rng()) {
        let m = random_matrix(Q, &mut r);
        let c = random_monomial(Q, &mut r);
        let report = invariance_check(&m, &c, 8).unwrap();
        prop_assert!(report.passed(), "{:?}", report.falsifications);
    }

    #[test]
    fn class_products_are_associative_and_unital(mut r in rng(), picks in prop::array::uniform3(0usize..16)) {
        let m = random_matrix(Q, &mut r);
        let h = Cohomology::compute(&DgSpec::new(m).unwrap(), 6);
        let classes: Vec<_> = (1..=2).flat_map(|d| h.basis(d)).map(|z| h.class_of_cocycle(&z).unwrap()).collect();
        prop_assume!(!classes.is_empty());
        let [a, b, c] = picks.map(|i| &classes[i % classes.len()]);
        let left = h.class_product(&h.class_product(a, b).unwrap(), c).unwrap();
        let right = h.class_product(a, &h.class_product(b, c).unwrap()).unwrap();
        prop_assert_eq!(left.coordinates, right.coordinates);
        prop_assert_eq!(&h.class_product(&h.unit(), a).unwrap().coordinates, &a.coordinates);
    }

    /// Predicted and computed dimensions agree exactly when the prediction
    /// is Gorenstein; otherwise one missing relation restores agreement.
    #[test]
    fn predicted_dims_match_cohomology(mut r in rng(), rank_one in any::<bool>()) {
        let m = if rank_one { random_rank_one(Q, &mut r) } else { random_matrix(Q, &mut r) };
        let c = classify(&m).unwrap();
        let h = Cohomology::compute(&DgSpec::new(m).unwrap(), 8);
        let predicted = predicted_dims(&c, 8).unwrap();
        match c.predicted_gorenstein {
            GorensteinPrediction::Gorenstein => prop_assert_eq!(predicted, h.dims()),
            GorensteinPrediction::NonGorenstein => {
                prop_assert_ne!(&predicted, &h.dims());
                let (observed, missing) = observed_presentation(&c, &h).unwrap();
                prop_assert_eq!(missing.len(), 1);
                prop_assert_eq!(observed.truncate(8).unwrap().hilbert_function(), h.dims());
            }
        }
    }

    #[test]
    fn truncated_skew_algebra_is_associative(seed in any::<u64>()) {
        let p = skewdg::presentation_of_case(&classify(&Matrix::zeros(Q, 3, 3)).unwrap());
        prop_assert!(p.truncate(6).unwrap().check_associativity(40, seed).is_empty());
    }

    #[test]
    fn reports_are_deterministic(mut r in rng()) {
        let m = random_matrix(Q, &mut r);
        let once = serde_json::to_string(&classify(&m).unwrap()).unwrap();
        let twice = serde_json::to_string(&classify(&m).unwrap()).unwrap();
        prop_assert_eq!(once, twice);
        let h = |m: &Matrix| serde_json::to_string(&Cohomology::compute(&DgSpec::new(m.clone()).unwrap(), 5).report()).unwrap();
        prop_assert_eq!(h(&m), h(&m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn classification_survives_scaling(mut r in rng(), k in prop_oneof![-5i64..=-1, 1i64..=5]) {
        let m = random_matrix(Q, &mut r);
        let (a, b) = (classify(&m).unwrap(), classify(&m.scale(&Q.int(k))).unwrap());
        prop_assert_eq!((a.rank, a.case, a.predicted_gorenstein), (b.rank, b.case, b.predicted_gorenstein));
    }

    /// Renaming variables keeps rank, verdict and generator degrees; the
    /// rank-one label may move between mirror cases.
    #[test]
    fn classification_survives_variable_permutations(mut r in rng()) {
        let m = random_matrix(Q, &mut r);
        let base = classify(&m).unwrap();
        for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let p = MonomialMatrix::permutation(Q, perm).unwrap();
            let c = classify(&apply_transform(&p, &m).unwrap()).unwrap();
            prop_assert_eq!((c.rank, c.predicted_gorenstein), (base.rank, base.predicted_gorenstein));
            prop_assert_eq!(c.presentation.degrees(), base.presentation.degrees());
        }
    }
}
