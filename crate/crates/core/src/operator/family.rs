use std::fmt;

use super::DiffOperator;
use crate::error::{Error, Result};
use crate::poly::Monomial;
use crate::scalar::{Field, Ring};

/// The kinds of operator families.
#[derive(Clone, PartialEq)]
pub enum FamilyKind<F> {
    /// `D_k = sum_i a[i,k] x_i d_i^{k+1} + b[i,k] d_i^k`. Tables are indexed
    /// `[k-1][i]`; a table with a single row is used for every `k`.
    General { a: Vec<Vec<F>>, b: Vec<Vec<F>> },
    /// `D_{k;q} = sum_i q x_i d_i^{k+1} + d_i^k`.
    QSteenrod { q: F },
    /// `sum_i x_i d_i^{k+1}`.
    Tilde,
    /// `sum_i d_i^{k+1} x_i = sum_i x_i d_i^{k+1} + (k+1) d_i^k`.
    Hat,
    /// `sum_i d_i^k`.
    Laplacian,
    /// An explicit finite list of homogeneous lowering operators.
    Custom(Vec<DiffOperator<F>>),
}

/// A family of degree-lowering operators on `n` variables.
#[derive(Clone, PartialEq)]
pub struct OperatorFamily<F> {
    n_vars: usize,
    kind: FamilyKind<F>,
}

impl<F: Field> OperatorFamily<F> {
    pub fn new(n_vars: usize, kind: FamilyKind<F>) -> Result<Self> {
        match &kind {
            FamilyKind::General { a, b } => {
                if a.is_empty() || b.is_empty() {
                    return Err(Error::InvalidParameters("empty parameter table".into()));
                }
                for row in a.iter().chain(b) {
                    if row.len() != n_vars {
                        return Err(Error::InvalidParameters(format!(
                            "parameter row has {} entries, expected {n_vars}",
                            row.len()
                        )));
                    }
                }
                if a.len() != b.len() && a.len() != 1 && b.len() != 1 {
                    return Err(Error::InvalidParameters("a and b tables differ in height".into()));
                }
            }
            FamilyKind::Custom(ops) => {
                if ops.is_empty() {
                    return Err(Error::EmptyFamily);
                }
                for op in ops {
                    if op.n_vars() != n_vars {
                        return Err(Error::VarMismatch(op.n_vars(), n_vars));
                    }
                    match op.homogeneity() {
                        Some(h) if h < 0 => {}
                        _ => {
                            return Err(Error::InvalidParameters(
                                "custom operators must be homogeneous and lowering".into(),
                            ))
                        }
                    }
                }
            }
            _ => {}
        }
        Ok(OperatorFamily { n_vars, kind })
    }

    /// Classical harmonics: `a = 0`, `b = 1`.
    pub fn classical(n: usize) -> Self {
        Self::new(n, FamilyKind::Laplacian).unwrap()
    }

    pub fn q_steenrod(n: usize, q: F) -> Self {
        Self::new(n, FamilyKind::QSteenrod { q }).unwrap()
    }

    pub fn tilde(n: usize) -> Self {
        Self::new(n, FamilyKind::Tilde).unwrap()
    }

    pub fn hat(n: usize) -> Self {
        Self::new(n, FamilyKind::Hat).unwrap()
    }

    /// General family with the same parameters for every `k`.
    pub fn general(a: Vec<F>, b: Vec<F>) -> Result<Self> {
        let n = a.len();
        Self::new(n, FamilyKind::General { a: vec![a], b: vec![b] })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn kind(&self) -> &FamilyKind<F> {
        &self.kind
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            FamilyKind::General { .. } => "general",
            FamilyKind::QSteenrod { .. } => "q-steenrod",
            FamilyKind::Tilde => "tilde",
            FamilyKind::Hat => "hat",
            FamilyKind::Laplacian => "classical",
            FamilyKind::Custom(_) => "custom",
        }
    }

    /// Largest index with a defined member, if the family is finite.
    pub fn max_index(&self) -> Option<usize> {
        match &self.kind {
            FamilyKind::General { a, b } if a.len() > 1 || b.len() > 1 => Some(a.len().max(b.len())),
            FamilyKind::Custom(ops) => Some(ops.len()),
            _ => None,
        }
    }

    /// The member `D_k` (`k >= 1`), or `None` past the end of a finite family.
    pub fn member(&self, k: usize) -> Option<DiffOperator<F>> {
        assert!(k >= 1, "members are indexed from 1");
        let n = self.n_vars;
        let sum = |ca: &dyn Fn(usize) -> F, cb: &dyn Fn(usize) -> F| {
            let mut op = DiffOperator::zero(n);
            for i in 0..n {
                let mut d1 = Monomial::one(n);
                d1.set(i, (k + 1) as u16);
                op.add_term(Monomial::var(n, i), d1, &ca(i));
                let mut d0 = Monomial::one(n);
                d0.set(i, k as u16);
                op.add_term(Monomial::one(n), d0, &cb(i));
            }
            op
        };
        match &self.kind {
            FamilyKind::General { a, b } => {
                let row = |t: &Vec<Vec<F>>| -> Option<Vec<F>> {
                    if t.len() == 1 {
                        Some(t[0].clone())
                    } else {
                        t.get(k - 1).cloned()
                    }
                };
                let (ra, rb) = (row(a)?, row(b)?);
                Some(sum(&|i| ra[i].clone(), &|i| rb[i].clone()))
            }
            FamilyKind::QSteenrod { q } => Some(sum(&|_| q.clone(), &|_| F::one())),
            FamilyKind::Tilde => Some(sum(&|_| F::one(), &|_| F::zero())),
            FamilyKind::Hat => Some(sum(&|_| F::one(), &|_| F::from_int(k as i64 + 1))),
            FamilyKind::Laplacian => Some(sum(&|_| F::zero(), &|_| F::one())),
            FamilyKind::Custom(ops) => ops.get(k - 1).cloned(),
        }
    }

    /// How far the member lowers degrees.
    pub fn lowering(&self, k: usize) -> Option<usize> {
        match &self.kind {
            FamilyKind::Custom(ops) => ops.get(k - 1).and_then(|o| o.homogeneity()).map(|h| (-h) as usize),
            _ => self.member(k).map(|_| k),
        }
    }

    /// `D_1, ..., D_{k_max}` (fewer if the family is finite).
    pub fn members(&self, k_max: usize) -> Vec<DiffOperator<F>> {
        (1..=k_max).map_while(|k| self.member(k)).collect()
    }

    /// Whether the members satisfy `[D_k, D_j] = c (k - j) D_{k+j}` with a
    /// nonzero constant, so that `D_1` and `D_2` generate all equations.
    pub fn two_generators_suffice(&self) -> bool {
        match &self.kind {
            FamilyKind::QSteenrod { q } => !q.is_zero(),
            FamilyKind::Tilde => true,
            _ => false,
        }
    }

    /// Bracket constants `c` with `[D_k, D_j] = c(k, j) D_{k+j}`, when known.
    pub fn bracket_constant(&self, k: usize, j: usize) -> Option<F> {
        let diff = F::from_int(k as i64 - j as i64);
        match &self.kind {
            FamilyKind::QSteenrod { q } => Some(q.mul(&diff)),
            FamilyKind::Tilde => Some(diff),
            FamilyKind::Laplacian => Some(F::zero()),
            _ => None,
        }
    }

    /// Whether every member commutes with permutations of the variables.
    pub fn is_symmetric(&self) -> bool {
        match &self.kind {
            FamilyKind::General { a, b } => a.iter().chain(b).all(|row| row.iter().all(|c| *c == row[0])),
            FamilyKind::Custom(ops) => ops.iter().all(|op| is_symmetric_op(op)),
            _ => true,
        }
    }
}

/// Invariance under the adjacent transpositions, which generate `S_n`.
pub fn is_symmetric_op<F: Ring>(op: &DiffOperator<F>) -> bool {
    let n = op.n_vars();
    (0..n.saturating_sub(1)).all(|i| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        op.permute(&perm) == *op
    })
}

impl<F: Field> fmt::Debug for OperatorFamily<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorFamily({}, n = {})", self.name(), self.n_vars)
    }
}
