use proptest::prelude::*;

use steenrod_harmonics::poly::{monomials_of_degree, Monomial, MultiPoly};
use steenrod_harmonics::scalar::{Field, QScalar, Rational, Ring, UniPoly};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn upoly(max_len: usize) -> impl Strategy<Value = UniPoly<Rational>> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(UniPoly::new)
}

fn qscalar() -> impl Strategy<Value = QScalar> {
    (upoly(3), upoly(3)).prop_filter_map("zero denominator", |(n, d)| QScalar::from_parts(n, d))
}

fn poly(n: usize) -> impl Strategy<Value = MultiPoly<Rational>> {
    prop::collection::vec((rational(), prop::collection::vec(0u16..4, n)), 0..6)
        .prop_map(move |ts| MultiPoly::from_terms(n, ts.into_iter().map(|(c, e)| (c, Monomial::new(e)))))
}

fn homogeneous(n: usize, d: usize) -> impl Strategy<Value = MultiPoly<Rational>> {
    let ms = monomials_of_degree(n, d);
    let len = ms.len();
    prop::collection::vec((nonzero_rational(), 0..len), 1..5).prop_map(move |ts| {
        MultiPoly::from_terms(n, ts.into_iter().map(|(c, i)| (c, ms[i].clone())))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_canonical_form_is_stable(r in rational()) {
        let again = Rational::from_bigints(r.numer(), r.denom());
        prop_assert_eq!(&again, &r);
        prop_assert!(r.denom() > 0.into());
        if r.is_zero() {
            prop_assert_eq!(r.denom(), 1.into());
        }
    }

    #[test]
    fn qscalar_canonical_form_is_stable(x in qscalar()) {
        let again = QScalar::from_parts(x.numer().clone(), x.denom().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert!(x.denom().leading().is_some_and(|c| c.is_one()));
        prop_assert!(x.numer().gcd(x.denom()).degree() == Some(0));
    }

    #[test]
    fn qscalar_field_axioms(a in qscalar(), b in qscalar(), c in qscalar()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
        match a.inv() {
            Some(inv) => prop_assert!(a.mul(&inv).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn multipoly_canonical_form_is_stable(p in poly(3)) {
        let again = MultiPoly::from_terms(3, p.terms().map(|(m, c)| (c.clone(), m.clone())));
        prop_assert!(again == p);
        prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn multiplying_by_zero_gives_zero(p in poly(3)) {
        prop_assert!((&p * &MultiPoly::zero(3)).is_zero());
    }

    #[test]
    fn apolar_pairing_is_symmetric_and_bilinear(p in poly(3), q in poly(3), r in poly(3), c in rational()) {
        let pq = p.apolar_pairing(&q).unwrap();
        prop_assert_eq!(&pq, &q.apolar_pairing(&p).unwrap());
        let lhs = (&p.scale(&c) + &r).apolar_pairing(&q).unwrap();
        let rhs = c.mul(&pq).add(&r.apolar_pairing(&q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn apolar_pairing_is_positive(p in poly(3)) {
        let s = p.apolar_pairing(&p).unwrap();
        if p.is_zero() {
            prop_assert!(s.is_zero());
        } else {
            prop_assert!(s > Rational::from(0));
        }
    }

    #[test]
    fn degrees_add_under_multiplication(
        (d1, p) in (0usize..4).prop_flat_map(|d| (Just(d), homogeneous(3, d))),
        (d2, q) in (0usize..4).prop_flat_map(|d| (Just(d), homogeneous(3, d))),
    ) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!(p.homogeneous_degree(), Some(d1));
        prop_assert_eq!((&p * &q).homogeneous_degree(), Some(d1 + d2));
    }
}
