use crate::error::Result;
use crate::hilbert::HilbertSeries;
use crate::operator::{DiffOperator, OperatorFamily};
use crate::poly::{binomial, Monomial, MultiPoly, QPoly};
use crate::scalar::{Rational, Ring};

use super::{solve_kernel, Mode};

/// Outcome of the tilde/hat decomposition check.
#[derive(Clone, Debug)]
pub struct TildeDecomposition {
    /// `tilde_k e = e hat_k` for every tested `k`.
    pub operator_identity: bool,
    pub tilde: HilbertSeries,
    /// Hat Hilbert series in `k` variables for `k = 0..=n` (`k = 0`: constants).
    pub hat_by_size: Vec<HilbertSeries>,
    /// `sum_k C(n, k) t^k H^hat_k(t)`.
    pub predicted: HilbertSeries,
    pub series_match: bool,
    /// Every support component of every tilde basis element is hat-harmonic.
    pub support_decomposition: bool,
}

impl TildeDecomposition {
    pub fn passed(&self) -> bool {
        self.operator_identity && self.series_match && self.support_decomposition
    }
}

/// Multiplication by `x_1 x_2 ... x_n`.
pub fn e_operator(n: usize) -> DiffOperator<Rational> {
    DiffOperator::term(n, Rational::one(), Monomial::new(vec![1; n]), Monomial::one(n))
}

/// Check `tilde_k e = e hat_k` as normal-ordered operators.
pub fn tilde_hat_identity(n: usize, k: usize) -> bool {
    let e = e_operator(n);
    let lhs = OperatorFamily::<Rational>::tilde(n).member(k).unwrap().compose(&e).unwrap();
    let rhs = e.compose(&OperatorFamily::<Rational>::hat(n).member(k).unwrap()).unwrap();
    lhs == rhs
}

/// Split `f` as `sum_y e_y f_y` by support; returns `(y, f_y)` with `f_y` a
/// polynomial in the variables of `y`, renumbered in increasing order.
pub fn support_decomposition(f: &QPoly) -> Vec<(Vec<usize>, QPoly)> {
    let mut parts: std::collections::BTreeMap<Vec<usize>, Vec<(Rational, Monomial)>> = Default::default();
    for (m, c) in f.terms() {
        let y = m.support();
        let reduced: Vec<u16> = y.iter().map(|&i| m.get(i) - 1).collect();
        parts.entry(y).or_default().push((c.clone(), Monomial::new(reduced)));
    }
    parts
        .into_iter()
        .map(|(y, terms)| {
            let k = y.len();
            (y, MultiPoly::from_terms(k, terms))
        })
        .collect()
}

fn hat_harmonic(g: &QPoly) -> bool {
    let k = g.n_vars();
    if k == 0 {
        return true;
    }
    let hat = OperatorFamily::<Rational>::hat(k);
    let d = g.degree().unwrap_or(0);
    (1..=d).all(|j| hat.member(j).unwrap().apply(g).unwrap().is_zero())
}

/// Verify the tilde/hat relations up to `degree_cap` in `n` variables.
pub fn decomposition_check_tilde(n: usize, degree_cap: usize) -> Result<TildeDecomposition> {
    let operator_identity = (1..=4).all(|k| tilde_hat_identity(n, k));
    let tk = solve_kernel(&OperatorFamily::<Rational>::tilde(n), degree_cap, Mode::All)?;
    let mut hat_by_size = vec![HilbertSeries::polynomial(vec![1])];
    for k in 1..=n {
        let hk = solve_kernel(&OperatorFamily::<Rational>::hat(k), degree_cap, Mode::All)?;
        hat_by_size.push(hk.hilbert().clone());
    }
    let mut predicted = HilbertSeries::polynomial(Vec::new());
    for (k, h) in hat_by_size.iter().enumerate() {
        predicted = predicted.add(&h.shift_scale(k, binomial(n, k)));
    }
    let series_match = tk.hilbert().agrees_up_to(&predicted, degree_cap);
    let support_decomposition = tk
        .bases()
        .iter()
        .flatten()
        .all(|f| support_decomposition(f).iter().all(|(_, g)| hat_harmonic(g)));
    Ok(TildeDecomposition {
        operator_identity,
        tilde: tk.hilbert().clone(),
        hat_by_size,
        predicted: predicted.truncate(degree_cap),
        series_match,
        support_decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_small() {
        assert!(tilde_hat_identity(2, 1));
        assert!(tilde_hat_identity(3, 2));
    }

    #[test]
    fn two_variables() {
        let r = decomposition_check_tilde(2, 5).unwrap();
        assert!(r.passed());
        assert_eq!(r.tilde.trimmed().coefficients(), &[1, 2, 1, 1]);
    }
}
