use proptest::prelude::*;

use steenrod_harmonics::operator::{reduce_composition, DiffOperator, OperatorFamily};
use steenrod_harmonics::poly::{monomials_of_degree, Monomial, MultiPoly};
use steenrod_harmonics::scalar::{QScalar, Rational, Ring};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn operator(n: usize) -> impl Strategy<Value = DiffOperator<Rational>> {
    let exps = move || prop::collection::vec(0u16..3, n);
    prop::collection::vec((rational(), exps(), exps()), 1..4).prop_map(move |ts| {
        ts.into_iter().fold(DiffOperator::zero(n), |acc, (c, x, d)| {
            acc.try_add(&DiffOperator::term(n, c, Monomial::new(x), Monomial::new(d))).unwrap()
        })
    })
}

fn poly(n: usize) -> impl Strategy<Value = MultiPoly<Rational>> {
    prop::collection::vec((rational(), prop::collection::vec(0u16..4, n)), 0..5)
        .prop_map(move |ts| MultiPoly::from_terms(n, ts.into_iter().map(|(c, e)| (c, Monomial::new(e)))))
}

fn families(n: usize, q: Rational, a: Vec<Rational>, b: Vec<Rational>) -> Vec<OperatorFamily<Rational>> {
    vec![
        OperatorFamily::classical(n),
        OperatorFamily::q_steenrod(n, q),
        OperatorFamily::tilde(n),
        OperatorFamily::hat(n),
        OperatorFamily::general(a, b).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Composition computed by normal ordering must agree with composing the
    // actions, and must not depend on how a triple product is associated.
    #[test]
    fn normal_ordering_is_confluent(a in operator(2), b in operator(2), c in operator(2), f in poly(2)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert!(left == right);
        let direct = a.apply(&b.apply(&c.apply(&f).unwrap()).unwrap()).unwrap();
        prop_assert!(left.apply(&f).unwrap() == direct);
    }

    #[test]
    fn dual_is_adjoint_for_every_family(
        q in nonzero_rational(),
        a in prop::collection::vec(nonzero_rational(), 3),
        b in prop::collection::vec(nonzero_rational(), 3),
        k in 1usize..4,
        d in 0usize..4,
        i in 0usize..64,
        j in 0usize..64,
    ) {
        for fam in families(3, q.clone(), a.clone(), b.clone()) {
            let op = fam.member(k).unwrap();
            let fs = monomials_of_degree(3, d + k);
            let gs = monomials_of_degree(3, d);
            let f = MultiPoly::monomial(Rational::one(), fs[i % fs.len()].clone());
            let g = MultiPoly::monomial(Rational::one(), gs[j % gs.len()].clone());
            let lhs = op.dual().apply(&g).unwrap().apolar_pairing(&f).unwrap();
            let rhs = g.apolar_pairing(&op.apply(&f).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs, "family {}", fam.name());
        }
    }

    #[test]
    fn q_steenrod_brackets(q in nonzero_rational()) {
        let fam = OperatorFamily::q_steenrod(2, q.clone());
        for k in 2..=4usize {
            for j in 1..k {
                let lhs = fam.member(k).unwrap().bracket(&fam.member(j).unwrap()).unwrap();
                let c = q.mul(&Rational::from((k - j) as i64));
                prop_assert!(lhs == fam.member(k + j).unwrap().scale(&c));
                let dual = fam.member(k).unwrap().dual().bracket(&fam.member(j).unwrap().dual()).unwrap();
                prop_assert!(dual == fam.member(k + j).unwrap().dual().scale(&c.neg()));
            }
        }
    }

    #[test]
    fn symmetric_members_commute_with_permutations(
        perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
        q in nonzero_rational(),
        f in poly(3),
        k in 1usize..4,
    ) {
        let a = vec![q.clone(); 3];
        let b = vec![Rational::one(); 3];
        for fam in families(3, q.clone(), a.clone(), b.clone()) {
            prop_assert!(fam.is_symmetric());
            let op = fam.member(k).unwrap();
            let lhs = op.apply(&f.permute(&perm)).unwrap();
            let rhs = op.apply(&f).unwrap().permute(&perm);
            prop_assert!(lhs == rhs, "family {}", fam.name());
        }
    }

    // The reduced expansion of a product of dual operators indexed by a
    // composition equals the product itself.
    #[test]
    fn composition_products_reduce_to_partition_products(
        alpha in prop::collection::vec(1usize..4, 1..4),
        q in nonzero_rational(),
    ) {
        let fam = OperatorFamily::q_steenrod(2, q.clone());
        let star = |i: usize| fam.member(i).unwrap().dual();
        let product = |w: &[usize]| {
            w.iter().fold(DiffOperator::identity(2), |acc, &i| acc.compose(&star(i)).unwrap())
        };
        let c = |i: usize, j: usize| q.mul(&Rational::from(j as i64 - i as i64));
        let expansion = reduce_composition(&alpha, &c);
        let mut total = DiffOperator::zero(2);
        for (lambda, coef) in &expansion {
            prop_assert!(lambda.windows(2).all(|p| p[0] >= p[1]));
            prop_assert_eq!(lambda.iter().sum::<usize>(), alpha.iter().sum::<usize>());
            total = total.try_add(&product(lambda).scale(coef)).unwrap();
        }
        prop_assert!(total == product(&alpha));
    }
}

#[test]
fn tilde_and_symbolic_brackets() {
    let tilde = OperatorFamily::<Rational>::tilde(3);
    let sym = OperatorFamily::q_steenrod(2, QScalar::q());
    for k in 2..=4usize {
        for j in 1..k {
            let c = (k - j) as i64;
            let lhs = tilde.member(k).unwrap().bracket(&tilde.member(j).unwrap()).unwrap();
            assert!(lhs == tilde.member(k + j).unwrap().scale(&Rational::from(c)));
            let lhs = sym.member(k).unwrap().bracket(&sym.member(j).unwrap()).unwrap();
            assert!(lhs == sym.member(k + j).unwrap().scale(&QScalar::q().mul(&QScalar::from_int(c))));
        }
    }
}
