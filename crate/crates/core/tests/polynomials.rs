mod common;

use bajinv::perm::max_baj_minus_inv;
use bajinv::verify::distribution;
use bajinv::{rhs_product, QPolynomial};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(0u64..1000, 0..8).prop_map(QPolynomial::from_coeffs)
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        let add = |x: &QPolynomial, y: &QPolynomial| x.checked_add(y).unwrap();
        let mul = |x: &QPolynomial, y: &QPolynomial| x.checked_mul(y).unwrap();
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        prop_assert_eq!(mul(&a, &QPolynomial::one()), a.clone());
        prop_assert_eq!(add(&a, &QPolynomial::zero()), a);
    }

    #[test]
    fn degrees_add(a in small_poly(), b in small_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let product = a.checked_mul(&b).unwrap();
        prop_assert_eq!(product.degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
        prop_assert_eq!(product.eval_at_one(), a.eval_at_one() * b.eval_at_one());
    }
}

#[test]
fn rhs_sanity_up_to_twelve() {
    for n in 1..=12usize {
        let p = rhs_product(n).unwrap();
        assert_eq!(
            p.eval_at_one(),
            common::factorial(n as u64 - 1) as u128,
            "n={n}"
        );
        assert_eq!(p.degree().unwrap() as u64, max_baj_minus_inv(n), "n={n}");
        assert!(p.is_palindromic(), "n={n}");
    }
}

#[test]
fn rhs_has_no_internal_zeros_for_small_n() {
    // checked against the enumerated tally, then read off the product
    for n in 1..=9usize {
        let p = rhs_product(n).unwrap();
        let tally = distribution(n, 1).unwrap();
        assert_eq!(tally.to_qpoly(), p);
        assert!(p.coeffs().iter().all(|&c| c >= 1), "n={n}: {p}");
    }
}
