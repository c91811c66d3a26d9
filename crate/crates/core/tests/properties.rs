use fano::invariants::{discriminant_integrand, expected_dimension};
use fano::oracle::{naive_coefficient, vandermonde_integrand, SparsePoly};
use fano::{ExponentVector, FanoProblem, LinearForm, TruncPoly};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn sparse_product(num_vars: usize, factors: &[LinearForm]) -> SparsePoly {
    factors
        .iter()
        .fold(SparsePoly::constant(num_vars, BigInt::from(1)), |acc, f| {
            acc.mul(&SparsePoly::from_linear_form(f))
        })
}

fn dense_product(num_vars: usize, cap: u32, factors: &[LinearForm]) -> TruncPoly {
    let mut p = TruncPoly::one(num_vars, cap).unwrap();
    for f in factors {
        p.mul_linear_assign(f).unwrap();
    }
    p
}

fn all_exponents(num_vars: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..num_vars {
        out = out
            .into_iter()
            .flat_map(|e| {
                (0..=cap).map(move |x| {
                    let mut e = e.clone();
                    e.push(x);
                    e
                })
            })
            .collect();
    }
    out
}

fn linear_forms(num_vars: usize, max_len: usize) -> impl Strategy<Value = Vec<LinearForm>> {
    prop::collection::vec(
        prop::collection::vec(-5i64..=5, num_vars).prop_map(LinearForm::new),
        0..=max_len,
    )
}

fn ring_and_forms() -> impl Strategy<Value = (usize, u32, Vec<LinearForm>)> {
    (1usize..=3, 0u32..=4).prop_flat_map(|(v, cap)| (Just(v), Just(cap), linear_forms(v, 8)))
}

fn poly(num_vars: usize, cap: u32) -> impl Strategy<Value = TruncPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=cap, num_vars), -20i64..=20),
        0..6,
    )
    .prop_map(move |terms| {
        TruncPoly::from_terms(
            num_vars,
            cap,
            terms
                .into_iter()
                .map(|(e, c)| (ExponentVector::new(e), BigInt::from(c))),
        )
        .unwrap()
    })
}

fn three_polys() -> impl Strategy<Value = (TruncPoly, TruncPoly, TruncPoly)> {
    (1usize..=3, 0u32..=4).prop_flat_map(|(v, cap)| (poly(v, cap), poly(v, cap), poly(v, cap)))
}

proptest! {
    #[test]
    fn truncated_product_matches_naive_expansion((v, cap, forms) in ring_and_forms()) {
        let dense = dense_product(v, cap, &forms);
        let sparse = sparse_product(v, &forms);
        for e in all_exponents(v, cap) {
            let got = dense.coefficient(&ExponentVector::new(e.clone())).unwrap();
            prop_assert_eq!(got, sparse.coefficient(&e));
        }
        // nothing beyond the cap is ever stored
        for (e, _) in dense.terms() {
            prop_assert!(e.as_slice().iter().all(|&x| x <= cap));
        }
    }

    #[test]
    fn dense_mul_matches_naive((v, cap, forms) in ring_and_forms(), split in 0usize..=8) {
        let split = split.min(forms.len());
        let (left, right) = forms.split_at(split);
        let p = dense_product(v, cap, left);
        let q = dense_product(v, cap, right);
        let pq = p.mul(&q).unwrap();
        prop_assert_eq!(&pq, &q.mul(&p).unwrap());
        prop_assert_eq!(pq, dense_product(v, cap, &forms));
    }

    #[test]
    fn ring_laws((p, q, s) in three_polys()) {
        let one = TruncPoly::one(p.num_vars(), p.cap()).unwrap();
        prop_assert_eq!(&one.mul(&p).unwrap(), &p);
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        prop_assert_eq!(
            p.mul(&q).unwrap().mul(&s).unwrap(),
            p.mul(&q.mul(&s).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.mul(&q.add(&s).unwrap()).unwrap(),
            p.mul(&q).unwrap().add(&p.mul(&s).unwrap()).unwrap()
        );
    }

    #[test]
    fn pow_is_repeated_multiplication((p, _, _) in three_polys(), e in 0u32..5) {
        let mut expected = TruncPoly::one(p.num_vars(), p.cap()).unwrap();
        for _ in 0..e {
            expected = expected.mul(&p).unwrap();
        }
        prop_assert_eq!(p.pow(e), expected);
    }

    #[test]
    fn untruncated_products_are_homogeneous((v, _, forms) in ring_and_forms()) {
        // cap >= number of factors, so no truncation loss
        let p = dense_product(v, forms.len() as u32, &forms);
        for (exps, _) in p.terms() {
            prop_assert_eq!(exps.total_degree(), forms.len() as u64);
        }
    }

    #[test]
    fn factor_order_is_irrelevant((v, cap, mut forms) in ring_and_forms()) {
        let a = dense_product(v, cap, &forms);
        let b = dense_product(v, cap, &forms);
        prop_assert_eq!(&a, &b);
        forms.reverse();
        prop_assert_eq!(a, dense_product(v, cap, &forms));
    }

    #[test]
    fn naive_coefficient_is_permutation_covariant(
        forms in linear_forms(3, 6),
        perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
        target_seed in prop::collection::vec(0u32..=6, 3),
    ) {
        let deg = forms.len() as u32;
        // spread the total degree over the target as the seed suggests
        let mut target = vec![0u32; 3];
        let mut left = deg;
        for (i, &s) in target_seed.iter().enumerate() {
            let take = if i == 2 { left } else { s.min(left) };
            target[i] = take;
            left -= take;
        }
        let permute = |v: &[i64]| {
            let mut out = vec![0; 3];
            for (i, &x) in v.iter().enumerate() {
                out[perm[i]] = x;
            }
            out
        };
        let permuted_forms: Vec<LinearForm> =
            forms.iter().map(|f| LinearForm::new(permute(f.coefficients()))).collect();
        let mut permuted_target = vec![0u32; 3];
        for (i, &x) in target.iter().enumerate() {
            permuted_target[perm[i]] = x;
        }
        let a = naive_coefficient(&forms, None, &ExponentVector::new(target)).unwrap();
        let b = naive_coefficient(&permuted_forms, None, &ExponentVector::new(permuted_target)).unwrap();
        prop_assert_eq!(a, b);
    }
}

/// Every structurally valid problem with k = 1, n <= max_n and nonnegative delta.
fn small_line_problems(max_n: u32) -> Vec<FanoProblem> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for r in 1..=3 {
            for ds in multisets(2..=8, r) {
                let p = FanoProblem::new(n, ds, 1).unwrap();
                if !expected_dimension(&p).is_negative() {
                    out.push(p);
                }
            }
        }
    }
    out
}

fn multisets(range: std::ops::RangeInclusive<u32>, r: usize) -> Vec<Vec<u32>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for head in range.clone() {
        for mut tail in multisets(head..=*range.end(), r - 1) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[test]
fn discriminant_integrand_is_symmetric() {
    for p in small_line_problems(4) {
        let integrand = discriminant_integrand(&p).unwrap();
        let poly = dense_product(2, p.n(), &integrand.factors);
        for a in 0..=p.n() {
            for b in 0..=p.n() {
                let ab = poly.coefficient(&ExponentVector::new(vec![a, b])).unwrap();
                let ba = poly.coefficient(&ExponentVector::new(vec![b, a])).unwrap();
                assert_eq!(ab, ba, "{p} at ({a},{b})");
            }
        }
    }
}

#[test]
fn vandermonde_integrand_is_antisymmetric() {
    for p in small_line_problems(4) {
        let integrand = vandermonde_integrand(&p).unwrap();
        let poly = dense_product(2, p.n(), &integrand.factors);
        for a in 0..=p.n() {
            for b in 0..=p.n() {
                let ab = poly.coefficient(&ExponentVector::new(vec![a, b])).unwrap();
                let ba = poly.coefficient(&ExponentVector::new(vec![b, a])).unwrap();
                assert_eq!(ab, -ba, "{p} at ({a},{b})");
            }
        }
    }
}

#[test]
fn both_integrands_match_naive_expansion_on_small_instances() {
    let mut problems = small_line_problems(5);
    for n in 3..=4 {
        let p = FanoProblem::new(n, vec![2], 2).unwrap();
        if !expected_dimension(&p).is_negative() {
            problems.push(p);
        }
    }
    assert!(problems.len() > 5);
    for p in &problems {
        for integrand in [
            discriminant_integrand(p).unwrap(),
            vandermonde_integrand(p).unwrap(),
        ] {
            let dense = integrand.coefficient().unwrap();
            let naive = naive_coefficient(&integrand.factors, None, &integrand.target).unwrap();
            assert_eq!(dense, naive, "{p}");
        }
    }
}

#[test]
fn naive_coefficient_accepts_power_separately() {
    // quartic threefold, delta = 1: pass the hyperplane factor as the power argument
    let p = FanoProblem::new(4, vec![4], 1).unwrap();
    let integrand = discriminant_integrand(&p).unwrap();
    let sum = LinearForm::sum_of_variables(2);
    let without_sum: Vec<LinearForm> = integrand
        .factors
        .iter()
        .filter(|f| **f != sum)
        .cloned()
        .collect();
    assert_eq!(without_sum.len() + 1, integrand.factors.len());
    let c = naive_coefficient(&without_sum, Some((&sum, 1)), &integrand.target).unwrap();
    assert_eq!(c, BigInt::from(640));
}
