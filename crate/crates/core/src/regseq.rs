//! The power sums `phi_m = sum_i a_i x_i^m`, the ideals
//! `Phi_n^k = (phi_k, ..., phi_{k+n-1})`, and the criteria deciding when the
//! generators form a regular sequence.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::kernel::CAP_LIMIT;
use crate::linalg::{to_sparse, Echelon};
use crate::operator::{DiffOperator, OperatorFamily};
use crate::poly::{binomial, monomials_of_degree, Monomial, MonomialBasis, MultiPoly, QPoly};
use crate::scalar::{Field, Rational, Ring};
use crate::symfunc::permutations;

/// `phi_m = sum_i a_i x_i^m` for a fixed coefficient vector.
#[derive(Clone, Debug)]
pub struct PhiFamily<F> {
    a: Vec<F>,
}

impl<F: Field> PhiFamily<F> {
    pub fn new(a: Vec<F>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidParameters("need at least one coefficient".into()));
        }
        Ok(PhiFamily { a })
    }

    pub fn n_vars(&self) -> usize {
        self.a.len()
    }

    pub fn coefficients(&self) -> &[F] {
        &self.a
    }

    pub fn phi(&self, m: usize) -> MultiPoly<F> {
        let n = self.n_vars();
        MultiPoly::from_terms(n, self.a.iter().enumerate().map(|(i, c)| {
            let mut e = Monomial::one(n);
            e.set(i, m as u16);
            (c.clone(), e)
        }))
    }

    /// `d_max = sum_j (deg phi_{k+j} - 1) = n (k - 1) + C(n, 2)`.
    pub fn d_max(&self, k: usize) -> usize {
        let n = self.n_vars();
        n * (k - 1) + binomial(n, 2)
    }

    /// Echelon form of the degree-`d` piece of `Phi_n^k` in monomial
    /// coordinates.
    pub fn ideal_piece(&self, k: usize, d: usize) -> (MonomialBasis, Echelon<F>) {
        let n = self.n_vars();
        let basis = MonomialBasis::of_degree(n, d);
        let mut ech = Echelon::new(basis.len());
        for j in k..k + n {
            if j > d {
                break;
            }
            let phi = self.phi(j);
            for m in monomials_of_degree(n, d - j) {
                if ech.is_full() {
                    return (basis, ech);
                }
                let row: Vec<(usize, F)> = phi
                    .mul_monomial(&m)
                    .terms()
                    .map(|(t, c)| (basis.index_of(t).unwrap(), c.clone()))
                    .collect();
                let mut row = row;
                row.sort_by_key(|(i, _)| *i);
                ech.insert_sparse(&row);
            }
        }
        (basis, ech)
    }
}

/// `e_r` in `n` variables.
pub fn elementary<F: Field>(n: usize, r: usize) -> MultiPoly<F> {
    let mut out = MultiPoly::zero(n);
    let mut idx: Vec<usize> = (0..n).collect();
    subsets_of_size(&mut idx, r, &mut |s| {
        let mut m = Monomial::one(n);
        for &i in s {
            m.set(i, 1);
        }
        out.add_term(m, &F::one());
    });
    out
}

fn subsets_of_size(items: &mut [usize], r: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, r, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, r, 0, &mut Vec::new(), f);
}

/// One step of the recurrence `phi_m = sum_{r=1}^n (-1)^{r+1} e_r phi_{m-r}`.
#[derive(Clone, Debug)]
pub struct PhiReduction<F: Ring> {
    pub m: usize,
    /// `(r, (-1)^{r+1} e_r, phi_{m-r})` for `r = 1..=n`.
    pub terms: Vec<(usize, MultiPoly<F>, MultiPoly<F>)>,
    /// The expanded right-hand side equals `phi_m`.
    pub verified: bool,
}

/// Express `phi_m` through `phi_{m-1}, ..., phi_{m-n}`; requires `m > n`.
pub fn phi_reduce<F: Field>(m: usize, family: &PhiFamily<F>) -> Result<PhiReduction<F>> {
    let n = family.n_vars();
    if m <= n {
        return Err(Error::Precondition(format!("reduction needs m > n, got m = {m}, n = {n}")));
    }
    let mut rhs = MultiPoly::zero(n);
    let mut terms = Vec::new();
    for r in 1..=n {
        let e = elementary::<F>(n, r);
        let e = if r % 2 == 1 { e } else { e.scale(&F::one().neg()) };
        let phi = family.phi(m - r);
        rhs = &rhs + &(&e * &phi);
        terms.push((r, e, phi));
    }
    Ok(PhiReduction { m, verified: rhs == family.phi(m), terms })
}

/// Whether every nonempty subset sum of `a` is nonzero. On failure the
/// witness is the first vanishing subset (by size, then lexicographically),
/// with 1-based indices.
pub fn subset_sum_regularity<F: Field>(a: &[F]) -> (bool, Option<Vec<usize>>) {
    let n = a.len();
    let mut idx: Vec<usize> = (0..n).collect();
    for r in 1..=n {
        let mut witness = None;
        subsets_of_size(&mut idx, r, &mut |s| {
            if witness.is_none() {
                let sum = s.iter().fold(F::zero(), |acc, &i| acc.add(&a[i]));
                if sum.is_zero() {
                    witness = Some(s.iter().map(|i| i + 1).collect());
                }
            }
        });
        if witness.is_some() {
            return (false, witness);
        }
    }
    (true, None)
}

/// Whether the homogeneous `f` lies in `Phi_n^k`.
pub fn ideal_membership<F: Field>(f: &MultiPoly<F>, k: usize, family: &PhiFamily<F>) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if f.n_vars() != family.n_vars() {
        return Err(Error::VarMismatch(f.n_vars(), family.n_vars()));
    }
    let (basis, ech) = family.ideal_piece(k, d);
    let mut v = vec![F::zero(); basis.len()];
    for (m, c) in f.terms() {
        v[basis.index_of(m).unwrap()] = c.clone();
    }
    Ok(ech.contains(&v))
}

/// Dimensions of `F[x] / Phi_n^k` in degrees `0..=cap`. Marked exact when
/// some degree vanishes, since then every higher degree does too.
pub fn quotient_hilbert<F: Field>(k: usize, family: &PhiFamily<F>, cap: usize) -> Result<HilbertSeries> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    if cap > CAP_LIMIT {
        return Err(Error::CapOverflow { cap, limit: CAP_LIMIT });
    }
    let dims: Vec<usize> = (0..=cap)
        .into_par_iter()
        .map(|d| {
            let (basis, ech) = family.ideal_piece(k, d);
            basis.len() - ech.rank()
        })
        .collect();
    let exact = dims.contains(&0);
    Ok(HilbertSeries::new(dims, exact))
}

/// `[k]_t [k+1]_t ... [k+n-1]_t`.
pub fn product_formula(k: usize, n: usize) -> HilbertSeries {
    (k..k + n).fold(HilbertSeries::polynomial(vec![1]), |acc, j| acc.mul(&HilbertSeries::q_integer(j)))
}

/// Regularity by Hilbert-series termination: the quotient vanishes in
/// degree `d_max + 1`.
pub fn regular_by_hilbert<F: Field>(k: usize, family: &PhiFamily<F>) -> Result<bool> {
    let d = family.d_max(k) + 1;
    let (basis, ech) = family.ideal_piece(k, d);
    Ok(basis.len() == ech.rank())
}

/// Summary of all regularity criteria for one coefficient vector.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    pub a: Vec<String>,
    pub k: usize,
    pub regular: bool,
    pub witness_subset: Option<Vec<usize>>,
    pub hilbert: HilbertSeries,
    /// `x_i^{C(n,2)+1}` in `Phi_n` for every `i`.
    pub membership_stated: bool,
    /// `x_i^{d_max+1}` in `Phi_n^k` for every `i`.
    pub membership_dmax: bool,
    pub terminates: bool,
    /// In regular cases, the quotient series equals the product formula.
    pub product_formula: bool,
    pub criteria_agree: bool,
}

fn powers_in_ideal<F: Field>(family: &PhiFamily<F>, k: usize, e: usize) -> Result<bool> {
    let n = family.n_vars();
    for i in 0..n {
        let mut m = Monomial::one(n);
        m.set(i, e as u16);
        if !ideal_membership(&MultiPoly::monomial(F::one(), m), k, family)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluate every criterion; `cap` defaults to `d_max + n`.
pub fn regularity_report<F: Field>(family: &PhiFamily<F>, k: usize, cap: Option<usize>) -> Result<RegularityReport> {
    let n = family.n_vars();
    let d_max = family.d_max(k);
    let cap = cap.unwrap_or(d_max + n).max(d_max + 1);
    let (subset, witness) = subset_sum_regularity(family.coefficients());
    let hilbert = quotient_hilbert(k, family, cap)?;
    let terminates = hilbert.coeff(d_max + 1) == 0;
    let membership_stated = powers_in_ideal(family, 1, binomial(n, 2) + 1)?;
    let membership_dmax = powers_in_ideal(family, k, d_max + 1)?;
    let product_formula = !subset || hilbert.agrees_up_to(&product_formula(k, n), cap);
    Ok(RegularityReport {
        a: family.coefficients().iter().map(|c| c.to_string()).collect(),
        k,
        regular: subset,
        witness_subset: witness,
        hilbert,
        membership_stated,
        membership_dmax,
        terminates,
        product_formula,
        criteria_agree: subset == terminates && subset == membership_stated && subset == membership_dmax,
    })
}

/// Regularity at shift `k` against regularity at shift 1.
#[derive(Clone, Debug, Serialize)]
pub struct ShiftReport {
    pub k: usize,
    pub regular_at_k: bool,
    pub regular_at_1: bool,
    pub agree: bool,
}

pub fn shift_equivalence_check<F: Field>(k: usize, family: &PhiFamily<F>) -> Result<ShiftReport> {
    let regular_at_k = regular_by_hilbert(k, family)?;
    let regular_at_1 = regular_by_hilbert(1, family)?;
    Ok(ShiftReport { k, regular_at_k, regular_at_1, agree: regular_at_k == regular_at_1 })
}

/// `det(x_j^i)_{1 <= i, j <= n}` by the Leibniz formula.
pub fn power_determinant(n: usize) -> QPoly {
    let mut out = MultiPoly::zero(n);
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        // row i (power i + 1) meets column p[i]
        let mut m = Monomial::one(n);
        for (i, &j) in p.iter().enumerate() {
            m.set(j, (i + 1) as u16);
        }
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let s = if inversions % 2 == 0 { 1 } else { -1 };
        out.add_term(m, &Rational::from(s));
    });
    out
}

/// `x_1 ... x_n prod_{i > j} (x_i - x_j)`.
pub fn power_determinant_factored(n: usize) -> QPoly {
    let mut out = MultiPoly::monomial(Rational::one(), Monomial::new(vec![1; n]));
    for i in 0..n {
        for j in 0..i {
            let diff = &MultiPoly::var(n, i) - &MultiPoly::<Rational>::var(n, j);
            out = &out * &diff;
        }
    }
    out
}

/// One symbol-matching step of the operator expansion.
#[derive(Clone, Debug, Serialize)]
pub struct ExpansionStep {
    pub order: usize,
    /// `(u_i, r, coefficient)` for each nonzero coefficient.
    pub coefficients: Vec<(String, Vec<usize>, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionReport {
    pub probe: Vec<String>,
    pub quotient_basis: Vec<String>,
    pub steps: Vec<ExpansionStep>,
    /// The residual order dropped strictly at every step and reached zero.
    pub orders_decrease: bool,
}

/// The operator at a point: `sum c x'^a xi^b` as a polynomial in `xi`.
fn at_point(op: &DiffOperator<Rational>, x: &[Rational]) -> QPoly {
    let n = op.n_vars();
    MultiPoly::from_terms(
        n,
        op.terms().map(|(c, xe, de)| {
            let v = xe.exps().iter().zip(x).fold(c.clone(), |acc, (&e, xi)| acc.mul(&xi.pow(e as u32)));
            (v, de.clone())
        }),
    )
}

fn compose_all(ops: &[DiffOperator<Rational>], n: usize) -> DiffOperator<Rational> {
    ops.iter().fold(DiffOperator::identity(n), |acc, o| acc.compose(o).unwrap())
}

/// Exponent vectors `r` with `sum_k r_k w_k = d`.
fn weighted_compositions(weights: &[usize], d: usize) -> Vec<Vec<usize>> {
    let Some((&w, rest)) = weights.split_first() else {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    };
    let mut out = Vec::new();
    for r in 0..=d / w {
        for mut tail in weighted_compositions(rest, d - r * w) {
            tail.insert(0, r);
            out.push(tail);
        }
    }
    out
}

/// Expand `op` as `sum a_{i;r} u_i(d) D_{1;q}^{r_1} ... D_{n;q}^{r_n}` at a
/// probe point, matching symbols order by order. The probe is
/// `(1, 2, ..., n)` first, then seeded random integer points.
pub fn expand_operator(op: &DiffOperator<Rational>, q: &Rational, cap: usize, seed: u64) -> Result<ExpansionReport> {
    use rand::{Rng, SeedableRng};
    let n = op.n_vars();
    let order = op.order().unwrap_or(0);
    if order > cap {
        return Err(Error::Precondition(format!("operator order {order} exceeds cap {cap}")));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut probe: Vec<Rational> = (1..=n as i64).map(Rational::from).collect();
    let mut last_err = None;
    for _ in 0..8 {
        match expand_at(op, q, cap, &probe) {
            Ok(r) => return Ok(r),
            Err(e @ Error::SingularProbe(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
        probe = (0..n).map(|_| Rational::from(rng.gen_range(-20i64..=20))).collect();
    }
    Err(last_err.unwrap())
}

fn expand_at(op: &DiffOperator<Rational>, q: &Rational, cap: usize, x: &[Rational]) -> Result<ExpansionReport> {
    let n = op.n_vars();
    let family = OperatorFamily::q_steenrod(n, q.clone());
    let members: Vec<DiffOperator<Rational>> = (1..=n).map(|k| family.member(k).unwrap()).collect();
    let symbols: Vec<QPoly> = members.iter().map(|d| at_point(d, x).graded_component(d.order().unwrap())).collect();
    let weights: Vec<usize> = members.iter().map(|d| d.order().unwrap()).collect();
    if symbols.iter().any(|s| s.is_zero()) {
        return Err(Error::SingularProbe("a symbol vanishes at the probe".into()));
    }
    // Monomial basis of the quotient by the symbols, degree by degree,
    // smallest monomials first.
    let ideal_rows = |d: usize| -> Vec<QPoly> {
        let mut rows = Vec::new();
        for (s, &w) in symbols.iter().zip(&weights) {
            if w <= d {
                for m in monomials_of_degree(n, d - w) {
                    rows.push(s.mul_monomial(&m));
                }
            }
        }
        rows
    };
    let mut quotient: Vec<Monomial> = Vec::new();
    for d in 0..=cap {
        let basis = MonomialBasis::of_degree(n, d);
        let mut ech = Echelon::new(basis.len());
        for r in ideal_rows(d) {
            ech.insert_sparse(&sparse_in(&basis, &r));
        }
        for m in basis.monomials() {
            let v = sparse_in(&basis, &MultiPoly::monomial(Rational::one(), m.clone()));
            if ech.insert_sparse(&v) {
                quotient.push(m.clone());
            }
        }
    }
    let mut residual = at_point(op, x);
    let mut steps = Vec::new();
    let mut orders_decrease = true;
    let mut prev = usize::MAX;
    while let Some(d) = residual.degree() {
        if residual.is_zero() {
            break;
        }
        if d >= prev {
            orders_decrease = false;
            break;
        }
        prev = d;
        // spanning set u_i sigma^r of degree d
        let mut cands: Vec<(usize, Vec<usize>, QPoly)> = Vec::new();
        for (i, u) in quotient.iter().enumerate() {
            if u.degree() > d {
                continue;
            }
            for r in weighted_compositions(&weights, d - u.degree()) {
                let mut p = MultiPoly::monomial(Rational::one(), u.clone());
                for (s, &e) in symbols.iter().zip(&r) {
                    p = &p * &s.pow(e as u32);
                }
                cands.push((i, r, p));
            }
        }
        let top = residual.graded_component(d);
        let basis = MonomialBasis::of_degree(n, d);
        let coeffs = solve_combination(&basis, &cands.iter().map(|c| c.2.clone()).collect::<Vec<_>>(), &top)
            .ok_or_else(|| Error::SingularProbe(format!("symbol of order {d} not in span at the probe")))?;
        let mut step = ExpansionStep { order: d, coefficients: Vec::new() };
        for ((i, r, _), c) in cands.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            let u = &quotient[*i];
            let mut factors = vec![DiffOperator::term(n, Rational::one(), Monomial::one(n), u.clone())];
            for (k, &e) in r.iter().enumerate() {
                factors.extend(std::iter::repeat_n(members[k].clone(), e));
            }
            let t = at_point(&compose_all(&factors, n), x).scale(&c);
            residual = &residual - &t;
            step.coefficients.push((u.to_string(), r.clone(), c.to_string()));
        }
        steps.push(step);
    }
    Ok(ExpansionReport {
        probe: x.iter().map(|c| c.to_string()).collect(),
        quotient_basis: quotient.iter().map(|m| m.to_string()).collect(),
        orders_decrease: orders_decrease && residual.is_zero(),
        steps,
    })
}

fn sparse_in(basis: &MonomialBasis, p: &QPoly) -> Vec<(usize, Rational)> {
    let mut v: Vec<(usize, Rational)> = p.terms().map(|(m, c)| (basis.index_of(m).unwrap(), c.clone())).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Coefficients `c` with `sum c_j cands_j = target`, if any.
fn solve_combination(basis: &MonomialBasis, cands: &[QPoly], target: &QPoly) -> Option<Vec<Rational>> {
    // Nullspace of [cands | -target]: pick a vector with last coordinate 1.
    let m = cands.len();
    let cols: Vec<Vec<Rational>> = cands
        .iter()
        .chain(std::iter::once(&target.scale(&Rational::one().neg())))
        .map(|p| {
            let mut v = vec![Rational::zero(); basis.len()];
            for (mon, c) in p.terms() {
                v[basis.index_of(mon).unwrap()] = c.clone();
            }
            v
        })
        .collect();
    let mut ech = Echelon::new(m + 1);
    for row in 0..basis.len() {
        let r: Vec<Rational> = cols.iter().map(|c| c[row].clone()).collect();
        ech.insert_sparse(&to_sparse(&r));
    }
    ech.nullspace().into_iter().find(|v| !v[m].is_zero()).map(|v| {
        let s = v[m].inv().unwrap();
        v[..m].iter().map(|c| c.mul(&s)).collect()
    })
}
