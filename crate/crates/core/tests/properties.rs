//! Property tests: field axioms on random scalars, substitution and limit
//! laws, text-form round trips, and the graded interchange law on random
//! elementary operators.

use proptest::prelude::*;

use glmn_core::scalars::{parse_scalar, LimitDir, Poly, Scalar, Var};
use glmn_core::superlinalg::{GradedMatrix, SuperSpace, TensorConvention};

fn small_rational() -> impl Strategy<Value = i64> {
    -4i64..=4
}

fn monomial_vars() -> Vec<Var> {
    vec![Var::Q, Var::A, Var::Z]
}

prop_compose! {
    fn arb_poly()(terms in prop::collection::vec((small_rational(), 0u32..3, 0u32..2, 0u32..2), 1..3)) -> Poly {
        let vars = monomial_vars();
        let mut acc = Poly::zero();
        for (c, e0, e1, e2) in terms {
            let mono = [
                (vars[0].clone(), e0),
                (vars[1].clone(), e1),
                (vars[2].clone(), e2),
            ];
            let mut m = glmn_core::scalars::Monomial::one();
            for (v, e) in mono {
                m = m.mul(&glmn_core::scalars::Monomial::var_pow(v, e));
            }
            acc = acc.add(&Poly::monomial(m, num_rational::BigRational::from_integer(c.into())));
        }
        acc
    }
}

/// Denominators of the shapes the toolkit actually produces: power
/// products and small spectral binomials. Dense random denominators drive
/// the reduction gcds into pathological territory without exercising
/// anything the artifact computes.
fn arb_denominator() -> impl Strategy<Value = Poly> {
    prop_oneof![
        Just(Poly::one()),
        (1u32..3).prop_map(|e| Poly::var(Var::Q).pow(e)),
        Just(Poly::one().sub(&Poly::var(Var::Z).mul(&Poly::var(Var::A)))),
        Just(Poly::var(Var::Q).sub(&Poly::var(Var::Z))),
        (1i64..3).prop_map(|k| {
            Poly::one().sub(
                &Poly::var(Var::Z)
                    .mul(&Poly::var(Var::A))
                    .mul(&Poly::var(Var::Q).pow(k as u32)),
            )
        }),
    ]
}

prop_compose! {
    fn arb_scalar()(num in arb_poly(), den in arb_denominator()) -> Scalar {
        Scalar::from_fraction(num, den).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
        // associativity and commutativity
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        // distributivity
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        // inverses
        if !x.is_zero() {
            prop_assert!((&x * &x.recip().unwrap()).is_one());
        }
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn substitution_commutes(x in arb_scalar(), p in small_rational(), r in small_rational()) {
        // substitute two distinct variables by constants, in either order
        let pv = Scalar::from_int(p);
        let rv = Scalar::from_int(r);
        let first = x.substitute(&Var::A, &pv).and_then(|y| y.substitute(&Var::Z, &rv));
        let second = x.substitute(&Var::Z, &rv).and_then(|y| y.substitute(&Var::A, &pv));
        match (first, second) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            // a pole can surface at either substitution order
            (Err(_), _) | (_, Err(_)) => {}
        }
    }

    #[test]
    fn limit_to_zero_is_substitution(x in arb_scalar()) {
        let sub = x.substitute(&Var::Z, &Scalar::zero());
        if let Ok(v) = sub {
            prop_assert_eq!(x.limit(&Var::Z, LimitDir::ToZero).unwrap(), v);
        }
    }

    #[test]
    fn text_roundtrip(x in arb_scalar()) {
        let text = format!("{x}");
        let back = parse_scalar(&text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn super_interchange(i1 in 0usize..3, j1 in 0usize..3, i2 in 0usize..3, j2 in 0usize..3,
                         k1 in 0usize..3, l1 in 0usize..3, k2 in 0usize..3, l2 in 0usize..3) {
        // (a (x) b)(c (x) d) = (-1)^{|b||c|} (ac (x) bd) over gl(2,1)
        let sp = SuperSpace::standard(2, 1);
        let a = GradedMatrix::elementary(&sp, i1, j1);
        let b = GradedMatrix::elementary(&sp, i2, j2);
        let c = GradedMatrix::elementary(&sp, k1, l1);
        let d = GradedMatrix::elementary(&sp, k2, l2);
        let lhs = GradedMatrix::tensor_action(&a, &b, TensorConvention::Graded).unwrap()
            .matmul(&GradedMatrix::tensor_action(&c, &d, TensorConvention::Graded).unwrap())
            .unwrap();
        let ac = a.matmul(&c).unwrap();
        let bd = b.matmul(&d).unwrap();
        let mut rhs = GradedMatrix::tensor_action(&ac, &bd, TensorConvention::Graded).unwrap();
        if b.parity().unwrap().sign_if_odd_pair(c.parity().unwrap()) < 0 {
            rhs = rhs.scale(&-&Scalar::one());
        }
        prop_assert_eq!(lhs.to_dense(), rhs.to_dense());
    }

    #[test]
    fn kernel_annihilates_and_rank_nullity(entries in prop::collection::vec((0usize..4, 0usize..4, small_rational()), 0..8)) {
        let sp = SuperSpace::standard(2, 2);
        let mut m = GradedMatrix::zero(sp.clone(), sp);
        for (r, c, v) in entries {
            m.set(r, c, Scalar::from_int(v));
        }
        let kernel = m.kernel();
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
        let rank = glmn_core::superlinalg::row_space_basis(m.to_dense()).len();
        prop_assert_eq!(rank + kernel.len(), m.cols());
    }
}
