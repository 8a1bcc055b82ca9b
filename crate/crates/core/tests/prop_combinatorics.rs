use proptest::prelude::*;

use steenrod_harmonics::diagonal::{apex_polynomial, solve_diagonal};
use steenrod_harmonics::experiments::{run, Command, ExperimentConfig, Format, ParamSpec};
use steenrod_harmonics::hilbert::HilbertSeries;
use steenrod_harmonics::poly::{binomial, Monomial, MultiPoly};
use steenrod_harmonics::regseq::{
    ideal_membership, phi_reduce, power_determinant, power_determinant_factored, quotient_hilbert,
    subset_sum_regularity, PhiFamily,
};
use steenrod_harmonics::scalar::{Rational, Ring, UniPoly};
use steenrod_harmonics::symfunc::{character_table, partitions, standard_tableaux, Basis, Partition, SymFunc};

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn class_size(mu: &Partition) -> i128 {
    factorial(mu.size()) as i128 / mu.z() as i128
}

#[test]
fn characters_are_orthogonal() {
    for n in 1..=6 {
        let (ps, table) = character_table(n);
        for (i, row) in table.iter().enumerate() {
            for (j, other) in table.iter().enumerate() {
                let s: i128 = ps
                    .iter()
                    .enumerate()
                    .map(|(c, mu)| class_size(mu) * row[c] as i128 * other[c] as i128)
                    .sum();
                assert_eq!(s, if i == j { factorial(n) as i128 } else { 0 }, "n = {n}");
            }
        }
    }
}

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let ps = partitions(n);
    (0..ps.len()).prop_map(move |i| ps[i].clone())
}

fn sym_func(n: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition_of(n), prop::collection::vec(-4i64..=4, 1..3)), 1..4).prop_map(|ts| {
        ts.into_iter().fold(SymFunc::zero(Basis::Power), |acc, (lambda, cs)| {
            let c = UniPoly::new(cs.into_iter().map(Rational::from).collect());
            acc.add(&SymFunc::term(Basis::Power, lambda, c))
        })
    })
}

fn standard_tableau() -> impl Strategy<Value = steenrod_harmonics::symfunc::Tableau> {
    (1usize..=5).prop_flat_map(partition_of).prop_flat_map(|shape| {
        let ts = standard_tableaux(&shape);
        (0..ts.len()).prop_map(move |i| ts[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn power_schur_round_trip(f in (1usize..=5).prop_flat_map(sym_func)) {
        let back = f.to_basis(Basis::Schur).to_basis(Basis::Power);
        prop_assert!(back == f);
        let h = f.to_basis(Basis::Homogeneous).to_basis(Basis::Power);
        prop_assert!(h == f);
    }

    #[test]
    fn power_sums_expand_by_characters(mu in (1usize..=5).prop_flat_map(partition_of)) {
        let s = SymFunc::basis_element(Basis::Power, mu.clone()).to_basis(Basis::Schur);
        let (ps, table) = character_table(mu.size());
        let col = ps.iter().position(|p| *p == mu).unwrap();
        for (row, lambda) in ps.iter().enumerate() {
            let expected = UniPoly::constant(Rational::from(table[row][col]));
            prop_assert_eq!(s.coeff(lambda), expected);
        }
    }

    #[test]
    fn garnir_polynomials(t in standard_tableau()) {
        let g = t.garnir();
        prop_assert_eq!(g.homogeneous_degree(), Some(t.shape().n_statistic()));
        for col in t.columns() {
            for (i, &a) in col.iter().enumerate() {
                for &b in &col[i + 1..] {
                    prop_assert!(t.swap_entries(a, b).garnir() == -&g);
                }
            }
        }
    }

    #[test]
    fn regularity_criteria_agree(a in prop::collection::vec(
        (-4i64..=4).prop_filter("nonzero", |v| *v != 0).prop_map(Rational::from), 1..=3)
    ) {
        let n = a.len();
        let (regular, witness) = subset_sum_regularity(&a);
        if let Some(w) = &witness {
            let s = w.iter().fold(Rational::zero(), |acc, &i| acc.add(&a[i - 1]));
            prop_assert!(s.is_zero());
        }
        // Independent check over all nonempty subsets.
        let brute = (1u32..1 << n).all(|mask| {
            (0..n).filter(|i| mask >> i & 1 == 1).fold(Rational::zero(), |acc, i| acc.add(&a[i])) != Rational::zero()
        });
        prop_assert_eq!(regular, brute);
        let fam = PhiFamily::new(a.clone()).unwrap();
        let dmax = fam.d_max(1);
        let h = quotient_hilbert(1, &fam, dmax + n).unwrap();
        let terminates = h.coeff(dmax + 1) == 0;
        prop_assert_eq!(terminates && h.total() == factorial(n), regular);
        let top = binomial(n, 2) as u16 + 1;
        let member = (0..n).all(|i| {
            let mut e = vec![0u16; n];
            e[i] = top;
            ideal_membership(&MultiPoly::monomial(Rational::one(), Monomial::new(e)), 1, &fam).unwrap()
        });
        prop_assert_eq!(member, regular);
    }

    #[test]
    fn higher_power_sums_lie_in_the_ideal(a in prop::collection::vec(
        (1i64..=5).prop_map(Rational::from), 1..=3), extra in 1usize..4)
    {
        let fam = PhiFamily::new(a.clone()).unwrap();
        let m = a.len() + extra;
        let r = phi_reduce(m, &fam).unwrap();
        prop_assert!(r.verified);
        prop_assert!(ideal_membership(&fam.phi(m), 1, &fam).unwrap());
    }

    #[test]
    fn diagonal_table_is_swap_symmetric(a in prop::collection::vec((1i64..=6).prop_map(Rational::from), 2)) {
        let kernel = solve_diagonal(&a, 4).unwrap();
        prop_assert!(kernel.swap_symmetric());
        prop_assert_eq!(kernel.x_only_series().trimmed(), HilbertSeries::t_factorial(2));
        prop_assert_eq!(kernel.total(), 3);
    }

    #[test]
    fn apex_degree(a in prop::collection::vec((1i64..=6).prop_map(Rational::from), 2..=3)) {
        let n = a.len();
        let apex = apex_polynomial(&a).unwrap();
        prop_assert_eq!(apex.poly.homogeneous_degree(), Some(binomial(n, 2)));
    }

    #[test]
    fn reports_are_deterministic(seed in 0u64..1000, format in 0usize..3) {
        let format = [Format::Text, Format::Json, Format::Csv][format];
        let mut config = ExperimentConfig::new(Command::Regseq, 3);
        config.seed = seed;
        config.format = format;
        config.a = Some(ParamSpec::Values(vec![Rational::from(1), Rational::from(2), Rational::from(-3)]));
        let first = run(&config).unwrap().render(format);
        let second = run(&config).unwrap().render(format);
        prop_assert_eq!(first, second);
    }
}

#[test]
fn sign_patterns_agree() {
    let values = [-1i64, 1, 2];
    for n in 1..=3usize {
        for code in 0..3usize.pow(n as u32) {
            let a: Vec<Rational> = (0..n).map(|i| Rational::from(values[code / 3usize.pow(i as u32) % 3])).collect();
            let fam = PhiFamily::new(a.clone()).unwrap();
            let dmax = fam.d_max(1);
            let h = quotient_hilbert(1, &fam, dmax + n).unwrap();
            let by_hilbert = h.coeff(dmax + 1) == 0 && h.total() == factorial(n);
            assert_eq!(subset_sum_regularity(&a).0, by_hilbert, "a = {a:?}");
        }
    }
}

#[test]
fn power_determinant_factors() {
    for n in 1..=4 {
        assert!(power_determinant(n) == power_determinant_factored(n), "n = {n}");
    }
}

#[test]
fn diagonal_reports_are_deterministic() {
    let mut config = ExperimentConfig::new(Command::Diagonal, 2);
    config.format = Format::Json;
    let first = run(&config).unwrap().render(Format::Json);
    assert_eq!(first, run(&config).unwrap().render(Format::Json));
}
