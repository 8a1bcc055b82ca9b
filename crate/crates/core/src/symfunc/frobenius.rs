use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::kernel::{default_mode, solve_kernel, GradedKernel, Mode};
use crate::operator::OperatorFamily;
use crate::scalar::{Field, Rational, Ring};

use super::partition::{all_fillings, partitions, standard_tableaux, Partition};
use super::{Basis, SymFunc, TPoly};

/// Graded Frobenius characteristic of a kernel, in the Schur basis.
///
/// For each degree and each cycle type the trace of a representative
/// permutation is read off from exact coordinates in the kernel basis.
/// Fails with [`Error::NotSymmetric`] if the permuted basis leaves the span,
/// and with [`Error::NonIntegral`] if a multiplicity is not a nonnegative
/// integer.
pub fn frobenius_of_kernel<F: Field>(kernel: &GradedKernel<F>) -> Result<SymFunc> {
    let n = kernel.n_vars();
    let classes = partitions(n);
    let per_degree: Vec<Result<Vec<Rational>>> = (0..=kernel.degree_cap())
        .into_par_iter()
        .map(|d| {
            let basis = kernel.basis(d);
            classes
                .iter()
                .map(|mu| {
                    let perm = mu.representative();
                    let mut trace = F::zero();
                    for (i, b) in basis.iter().enumerate() {
                        let coords = kernel.coordinates(d, &b.permute(&perm)).ok_or(Error::NotSymmetric)?;
                        trace = trace.add(&coords[i]);
                    }
                    trace.as_rational().ok_or_else(|| Error::NonIntegral(format!("trace {trace} in degree {d}")))
                })
                .collect()
        })
        .collect();
    let mut f = SymFunc::zero(Basis::Power);
    for (d, traces) in per_degree.into_iter().enumerate() {
        for (mu, tr) in classes.iter().zip(traces?) {
            let c = tr.div(&Rational::from(mu.z() as i64)).unwrap();
            f.add_term(mu.clone(), &TPoly::monomial(c, d));
        }
    }
    let s = f.to_basis(Basis::Schur);
    if !s.is_nonnegative_integral() {
        return Err(Error::NonIntegral(s.render()));
    }
    Ok(s)
}

/// Solve the kernel of a symmetric family and return its characteristic.
pub fn frobenius_of_family<F: Field>(family: &OperatorFamily<F>, degree_cap: usize, mode: Mode) -> Result<SymFunc> {
    if !family.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    frobenius_of_kernel(&solve_kernel(family, degree_cap, mode)?)
}

/// `prod_{k <= n} (1 - t^k)`.
fn one_minus_product(parts: &[usize]) -> TPoly {
    parts.iter().fold(TPoly::one(), |acc, &k| {
        acc.mul(&TPoly::one().sub(&TPoly::monomial(Rational::one(), k)))
    })
}

/// `[n]!_t (1-t)^n sum_lambda prod_k (p_k / (k (1 - t^k)))^{d_k} / d_k!`,
/// in the Schur basis.
pub fn frobenius_formula_regular(n: usize) -> SymFunc {
    let full = one_minus_product(&(1..=n).collect::<Vec<_>>());
    let mut f = SymFunc::zero(Basis::Power);
    for lambda in partitions(n) {
        let (quot, rem) = full.div_rem(&one_minus_product(lambda.parts()));
        assert!(rem.is_zero(), "prod (1 - t^k) over parts divides [n]!_t (1-t)^n");
        let z = Rational::from(lambda.z() as i64);
        f.add_term(lambda, &quot.scale(&z.inv().unwrap()));
    }
    f.to_basis(Basis::Schur)
}

/// `sum_lambda s_lambda sum_{tau in SYT(lambda)} t^{co(tau)}`.
pub fn frobenius_formula_tableaux(n: usize) -> SymFunc {
    let mut f = SymFunc::zero(Basis::Schur);
    for lambda in partitions(n) {
        for tau in standard_tableaux(&lambda) {
            f.add_term(lambda.clone(), &TPoly::monomial(Rational::one(), tau.cocharge()));
        }
    }
    f
}

/// `sum_k t^k F_k h_{n-k}` from characteristics `F_0, ..., F_n` with `F_k`
/// of degree `k` (so `F_0 = 1`).
pub fn frobenius_tilde_formula(hats: &[SymFunc]) -> SymFunc {
    let n = hats.len().saturating_sub(1);
    let mut out = SymFunc::zero(Basis::Schur);
    for (k, fk) in hats.iter().enumerate() {
        let h = SymFunc::basis_element(Basis::Homogeneous, Partition::new(vec![n - k]));
        let tk = TPoly::monomial(Rational::one(), k);
        out = out.add(&fk.mul(&h).scale(&tk));
    }
    out.to_basis(Basis::Schur)
}

/// The formula with hat characteristics from the solver, truncated at the
/// cap, together with the directly computed tilde characteristic.
pub fn frobenius_tilde_from_solver(n: usize, degree_cap: usize) -> Result<(SymFunc, SymFunc)> {
    let mut hats = vec![SymFunc::one()];
    for k in 1..=n {
        hats.push(frobenius_of_family(&OperatorFamily::<Rational>::hat(k), degree_cap, Mode::All)?);
    }
    let predicted = frobenius_tilde_formula(&hats).truncate_t(degree_cap);
    let direct = frobenius_of_family(&OperatorFamily::<Rational>::tilde(n), degree_cap, Mode::All)?;
    Ok((predicted, direct))
}

/// `sum_{lambda |- n} f_lambda t^{n(lambda)}`.
pub fn garnir_bound(n: usize) -> HilbertSeries {
    let ps = partitions(n);
    let top = ps.iter().map(|l| l.n_statistic()).max().unwrap_or(0);
    let mut c = vec![0usize; top + 1];
    for l in ps {
        c[l.n_statistic()] += l.count_standard() as usize;
    }
    HilbertSeries::polynomial(c)
}

/// Outcome of the Garnir checks for one family.
#[derive(Clone, Debug, Serialize)]
pub struct GarnirReport {
    /// Fillings whose Garnir polynomial some member fails to annihilate.
    pub failures: Vec<String>,
    pub fillings_checked: usize,
    pub bound: HilbertSeries,
    pub hilbert: HilbertSeries,
    pub dominated: bool,
}

impl GarnirReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.dominated
    }
}

/// Check that every Garnir polynomial (over all fillings of all shapes) is
/// killed by the members `D_1..D_cap`, and that the Garnir bound is
/// dominated by the Hilbert series up to the cap.
pub fn garnir_lower_bound_check<F: Field>(family: &OperatorFamily<F>, degree_cap: usize) -> Result<GarnirReport> {
    if !family.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = family.n_vars();
    let members: Vec<_> = (1..=degree_cap).filter_map(|k| family.member(k)).collect();
    let fillings: Vec<_> = partitions(n).iter().flat_map(all_fillings).collect();
    let failures: Vec<String> = fillings
        .par_iter()
        .filter_map(|tau| {
            let g = tau.garnir().map_coeffs(|c| F::from_rational(c));
            let ok = members.iter().all(|op| op.apply(&g).is_ok_and(|r| r.is_zero()));
            (!ok).then(|| tau.to_string())
        })
        .collect();
    let hilbert = solve_kernel(family, degree_cap, default_mode(family))?.hilbert().clone();
    let bound = garnir_bound(n);
    let dominated = bound.truncate(degree_cap).dominated_by(&hilbert);
    Ok(GarnirReport { failures, fillings_checked: fillings.len(), bound, hilbert, dominated })
}

impl SymFunc {
    /// Drop all powers of `t` above `cap`.
    pub fn truncate_t(&self, cap: usize) -> SymFunc {
        let mut out = SymFunc::zero(self.basis);
        for (l, c) in &self.terms {
            let kept = c.coeffs().iter().take(cap + 1).cloned().collect();
            out.add_term(l.clone(), &TPoly::new(kept));
        }
        out
    }
}
