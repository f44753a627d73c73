//! Truncated expansion and Laurent polynomial arithmetic.

use proptest::prelude::*;

use eqhom::series::{euler_char, expand, poincare_dual_check, LaurentPolynomial, RationalExpr};

const T: usize = 14;

fn rational_expr() -> impl Strategy<Value = RationalExpr> {
    (
        proptest::collection::vec(-3i64..=3, 1..5),
        proptest::collection::vec(-2i64..=2, 0..4),
    )
        .prop_map(|(num, tail)| {
            let mut den = vec![1];
            den.extend(tail);
            RationalExpr::new(num, den).unwrap()
        })
}

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    proptest::collection::vec((-6i64..=6, -4i64..=4), 0..6).prop_map(LaurentPolynomial::from_terms)
}

/// Power series of `num / den` by solving `den · s = num` term by term.
fn solve(e: &RationalExpr, t: usize) -> Vec<i64> {
    let mut s = vec![0i64; t + 1];
    for k in 0..=t {
        let mut v = e.num().get(k).copied().unwrap_or(0);
        for (j, &d) in e.den().iter().enumerate().skip(1).take(k) {
            v -= d * s[k - j];
        }
        s[k] = v;
    }
    s
}

proptest! {
    #[test]
    fn expansion_matches_recurrence(e in rational_expr()) {
        prop_assert_eq!(expand(&e, T).unwrap().coeffs().to_vec(), solve(&e, T));
    }

    #[test]
    fn expand_is_multiplicative(a in rational_expr(), b in rational_expr()) {
        let lhs = expand(&a.mul(&b), T).unwrap();
        let rhs = expand(&a, T).unwrap().mul(&expand(&b, T).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expand_is_additive(a in rational_expr(), b in rational_expr()) {
        let lhs = expand(&a.add(&b), T).unwrap();
        let rhs = expand(&a, T).unwrap().add(&expand(&b, T).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_char_is_multiplicative(p in laurent(), q in laurent()) {
        prop_assert_eq!(euler_char(&p.mul(&q)), euler_char(&p) * euler_char(&q));
        prop_assert_eq!(euler_char(&p.add(&q)), euler_char(&p) + euler_char(&q));
    }

    #[test]
    fn duality_check_accepts_its_own_mirror(p in laurent(), top in 0u64..20) {
        let mirror = p.reflect().shift(top as i64);
        prop_assert!(poincare_dual_check(&p, &mirror, top));
        prop_assert_eq!(mirror.reflect().shift(top as i64), p.clone());
        if !p.is_zero() {
            prop_assert!(!poincare_dual_check(&p, &mirror.shift(1), top));
        }
    }

    #[test]
    fn laurent_ring_laws(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert!(p.sub(&p).is_zero());
        prop_assert_eq!(p.mul(&LaurentPolynomial::one()), p.clone());
    }
}
