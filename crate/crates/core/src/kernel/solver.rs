use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::linalg::{to_sparse, Echelon};
use crate::operator::{DiffOperator, FamilyKind, OperatorFamily};
use crate::poly::{Monomial, MonomialBasis, MultiPoly};
use crate::scalar::Field;

/// Largest degree cap accepted by the solvers.
pub const CAP_LIMIT: usize = 40;

/// Which members of a family are imposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every member `D_k` that can act nontrivially in the given degree.
    All,
    /// Only `D_1` and `D_2`.
    TwoGenerators,
}

/// Per-degree bases of the common kernel of an operator family.
#[derive(Clone)]
pub struct GradedKernel<F> {
    n_vars: usize,
    degree_cap: usize,
    bases: Vec<Vec<MultiPoly<F>>>,
    hilbert: HilbertSeries,
}

impl<F: Field> GradedKernel<F> {
    pub fn new(n_vars: usize, bases: Vec<Vec<MultiPoly<F>>>, exact_beyond_cap: bool) -> Self {
        let degree_cap = bases.len().saturating_sub(1);
        let hilbert = HilbertSeries::new(bases.iter().map(|b| b.len()).collect(), exact_beyond_cap);
        GradedKernel { n_vars, degree_cap, bases, hilbert }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// Basis of the degree-`d` component, in reduced echelon form: the
    /// leading monomials are distinct, have coefficient 1, and do not occur
    /// in the other basis elements.
    pub fn basis(&self, d: usize) -> &[MultiPoly<F>] {
        self.bases.get(d).map_or(&[], |b| b.as_slice())
    }

    pub fn bases(&self) -> &[Vec<MultiPoly<F>>] {
        &self.bases
    }

    pub fn hilbert(&self) -> &HilbertSeries {
        &self.hilbert
    }

    /// Coordinates of `f` (homogeneous of degree `d`) in the degree-`d`
    /// basis, or `None` if `f` is not in the span.
    pub fn coordinates(&self, d: usize, f: &MultiPoly<F>) -> Option<Vec<F>> {
        let basis = self.basis(d);
        let coords: Vec<F> = basis.iter().map(|b| f.coeff(b.leading_term().unwrap().0)).collect();
        let mut rest = f.clone();
        for (b, c) in basis.iter().zip(&coords) {
            rest = rest.try_sub(&b.scale(c)).ok()?;
        }
        rest.is_zero().then_some(coords)
    }
}

impl<F: Field> std::fmt::Debug for GradedKernel<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedKernel")
            .field("n_vars", &self.n_vars)
            .field("hilbert", &self.hilbert.render())
            .field("bases", &self.bases)
            .finish()
    }
}

/// Members imposed in degree `d` with their lowering amounts.
fn members_for_degree<F: Field>(
    family: &OperatorFamily<F>,
    d: usize,
    mode: Mode,
) -> Vec<DiffOperator<F>> {
    let ks: Vec<usize> = match mode {
        Mode::All => (1..=d).collect(),
        Mode::TwoGenerators => vec![1, 2],
    };
    ks.into_iter()
        .filter_map(|k| {
            let low = family.lowering(k)?;
            (low <= d).then(|| family.member(k)).flatten()
        })
        .collect()
}

/// The default mode: two generators when the bracket relations allow it.
pub fn default_mode<F: Field>(family: &OperatorFamily<F>) -> Mode {
    if family.two_generators_suffice() {
        Mode::TwoGenerators
    } else {
        Mode::All
    }
}

fn check_cap(cap: usize) -> Result<()> {
    if cap > CAP_LIMIT {
        return Err(Error::CapOverflow { cap, limit: CAP_LIMIT });
    }
    Ok(())
}

/// Harmonic space of `family` in every degree `<= degree_cap`.
pub fn solve_kernel<F: Field>(
    family: &OperatorFamily<F>,
    degree_cap: usize,
    mode: Mode,
) -> Result<GradedKernel<F>> {
    check_cap(degree_cap)?;
    if family.member(1).is_none() {
        return Err(Error::EmptyFamily);
    }
    let n = family.n_vars();
    let bases: Vec<Vec<MultiPoly<F>>> = (0..=degree_cap)
        .into_par_iter()
        .map(|d| {
            let ops = members_for_degree(family, d, mode);
            common_kernel(&MonomialBasis::of_degree(n, d), &ops)
        })
        .collect();
    // Constant-coefficient kernels are closed under derivatives, so one empty
    // degree forces all higher ones to vanish. Nothing is claimed otherwise.
    let exact = matches!(family.kind(), FamilyKind::Laplacian) && bases.iter().any(|b| b.is_empty());
    Ok(GradedKernel::new(n, bases, exact))
}

/// Common kernel of `ops` on the span of `basis` (all monomials must map
/// into a space where the images are compared monomialwise). Returned in
/// reduced echelon form with respect to the order of `basis`.
pub fn common_kernel<F: Field>(basis: &MonomialBasis, ops: &[DiffOperator<F>]) -> Vec<MultiPoly<F>> {
    let ncols = basis.len();
    if ncols == 0 {
        return Vec::new();
    }
    let n_vars = basis.monomial(0).n_vars();
    // One equation per (operator, target monomial).
    let mut rows: BTreeMap<(usize, Monomial), Vec<(usize, F)>> = BTreeMap::new();
    for (j, m) in basis.monomials().iter().enumerate() {
        for (o, op) in ops.iter().enumerate() {
            for (t, c) in op.apply_monomial(m).terms() {
                rows.entry((o, t.clone())).or_default().push((j, c.clone()));
            }
        }
    }
    let mut rows: Vec<Vec<(usize, F)>> = rows.into_values().collect();
    rows.sort_by_key(|r| r.len());
    let mut ech = Echelon::new(ncols);
    for r in &rows {
        if ech.is_full() {
            break;
        }
        ech.insert_sparse(r);
    }
    ech.nullspace()
        .into_iter()
        .map(|v| vector_to_poly(basis, &v, n_vars))
        .collect()
}

pub(crate) fn vector_to_poly<F: Field>(basis: &MonomialBasis, v: &[F], n_vars: usize) -> MultiPoly<F> {
    MultiPoly::from_terms(
        n_vars,
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (c.clone(), basis.monomial(j).clone())),
    )
}

pub(crate) fn poly_to_vector<F: Field>(basis: &MonomialBasis, p: &MultiPoly<F>) -> Option<Vec<F>> {
    let mut v = vec![F::zero(); basis.len()];
    for (m, c) in p.terms() {
        v[basis.index_of(m)?] = c.clone();
    }
    Some(v)
}

/// Echelon form of the degree-`d` hit space `sum_k D*_k (polynomials of
/// degree d - k)` in monomial coordinates.
pub fn hit_space<F: Field>(family: &OperatorFamily<F>, d: usize, mode: Mode) -> (MonomialBasis, Echelon<F>) {
    let n = family.n_vars();
    let target = MonomialBasis::of_degree(n, d);
    let mut ech = Echelon::new(target.len());
    for op in members_for_degree(family, d, mode) {
        let dual = op.dual();
        let k = (-op.homogeneity().unwrap()) as usize;
        for m in MonomialBasis::of_degree(n, d - k).monomials() {
            if ech.is_full() {
                break;
            }
            let img = dual.apply_monomial(m);
            let v = poly_to_vector(&target, &img).expect("dual raises degree by k");
            ech.insert_sparse(&to_sparse(&v));
        }
    }
    (target, ech)
}

/// Per degree, the dimension of the polynomials modulo the hit space.
pub fn hit_quotient_dims<F: Field>(
    family: &OperatorFamily<F>,
    degree_cap: usize,
    mode: Mode,
) -> Result<HilbertSeries> {
    check_cap(degree_cap)?;
    if family.member(1).is_none() {
        return Err(Error::EmptyFamily);
    }
    let dims: Vec<usize> = (0..=degree_cap)
        .into_par_iter()
        .map(|d| {
            let (target, ech) = hit_space(family, d, mode);
            target.len() - ech.rank()
        })
        .collect();
    Ok(HilbertSeries::new(dims, false))
}
