//! Explicit description of the kernel of a single operator
//! `D_k = sum_i a_i x_i d_i^{k+1} + b_i d_i^k`.
//!
//! Split off one variable `x` (by default the last) and write
//! `f = sum_d f_d x^d / d!` with `f_d` in the remaining variables `y`. Then
//! `D_k f = 0` exactly when `f_{d+k} = -D_k(f_d) / (a d + b)` for all `d`,
//! where `a, b` are the parameters of `x` and `D_k` acts on `y` alone. The
//! first `k` slices are free, and unfolding the recurrence gives the lift
//! `Psi_k`.

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::operator::{DiffOperator, OperatorFamily};
use crate::poly::{binomial, monomials_of_degree, Monomial, MultiPoly};
use crate::scalar::{Field, Rational};

/// `[a; b]_m = b (a + b) (2a + b) ... ((m-1) a + b)`, with `[a; b]_0 = 1`.
pub fn shifted_factorial<F: Field>(a: &F, b: &F, m: usize) -> F {
    (0..m).fold(F::one(), |acc, j| acc.mul(&a.mul(&F::from_int(j as i64)).add(b)))
}

/// The lift `Psi_k` for one operator with per-variable parameters.
#[derive(Clone, Debug)]
pub struct PsiLift<F> {
    k: usize,
    a: Vec<F>,
    b: Vec<F>,
    split: usize,
}

impl<F: Field> PsiLift<F> {
    /// Lift for `D_k` with parameters `a_i, b_i`, splitting the last variable.
    pub fn new(k: usize, a: Vec<F>, b: Vec<F>) -> Result<Self> {
        if k == 0 || a.is_empty() || a.len() != b.len() {
            return Err(Error::InvalidParameters("need k >= 1 and equal-length a, b".into()));
        }
        let split = a.len() - 1;
        Ok(PsiLift { k, a, b, split })
    }

    /// Use variable `split` (zero-based) as the distinguished one.
    pub fn with_split(mut self, split: usize) -> Result<Self> {
        if split >= self.a.len() {
            return Err(Error::VarIndex { index: split, n_vars: self.a.len() });
        }
        self.split = split;
        Ok(self)
    }

    pub fn n_vars(&self) -> usize {
        self.a.len()
    }

    /// Positions of the `y` variables inside the full ring.
    fn y_positions(&self) -> Vec<usize> {
        (0..self.n_vars()).filter(|&i| i != self.split).collect()
    }

    /// The full operator `D_k` on all variables.
    pub fn operator(&self) -> DiffOperator<F> {
        let fam = OperatorFamily::new(
            self.n_vars(),
            crate::operator::FamilyKind::General { a: vec![self.a.clone()], b: vec![self.b.clone()] },
        )
        .unwrap();
        fam.member(self.k).unwrap()
    }

    /// `D_k` acting on the `y` variables only.
    pub fn y_operator(&self) -> DiffOperator<F> {
        let pos = self.y_positions();
        let a: Vec<F> = pos.iter().map(|&i| self.a[i].clone()).collect();
        let b: Vec<F> = pos.iter().map(|&i| self.b[i].clone()).collect();
        if a.is_empty() {
            return DiffOperator::zero(0);
        }
        OperatorFamily::general(a, b).unwrap().member(self.k).unwrap()
    }

    /// `a d + b` for the distinguished variable, failing if it vanishes.
    fn denominator(&self, d: usize) -> Result<F> {
        let s = self.a[self.split].mul(&F::from_int(d as i64)).add(&self.b[self.split]);
        if s.is_zero() {
            return Err(Error::SingularParameter { d });
        }
        Ok(s)
    }

    /// `x^e / e!` embedded as a polynomial times `g(y)`.
    fn embed(&self, g: &MultiPoly<F>, e: usize) -> MultiPoly<F> {
        let n = self.n_vars();
        let lifted = g.embed(n, &self.y_positions());
        let mut x = Monomial::one(n);
        x.set(self.split, e as u16);
        let inv = Rational::factorial(e as u32).inv().unwrap();
        lifted.mul_monomial(&x).scale(&F::from_rational(&inv))
    }

    /// `Psi_k(sum_{r<k} f_r x^r / r!)` for seeds `f_0..f_{k-1}` in `y`.
    pub fn psi(&self, seeds: &[MultiPoly<F>]) -> Result<MultiPoly<F>> {
        if seeds.len() > self.k {
            return Err(Error::SizeMismatch(seeds.len(), self.k));
        }
        let n = self.n_vars();
        let dy = self.y_operator();
        let mut out = MultiPoly::zero(n);
        for (r, seed) in seeds.iter().enumerate() {
            if seed.n_vars() != n - 1 {
                return Err(Error::VarMismatch(seed.n_vars(), n - 1));
            }
            // f_{km+r} = -D(f_{k(m-1)+r}) / (a (k(m-1)+r) + b)
            let mut cur = seed.clone();
            let mut m = 0;
            loop {
                let next = if n == 1 { MultiPoly::zero(0) } else { dy.apply(&cur)? };
                if next.is_zero() {
                    break;
                }
                let den = self.denominator(self.k * m + r)?;
                cur = next.scale(&den.inv().unwrap().neg());
                m += 1;
                out = &out + &self.embed(&cur, self.k * m + r);
            }
        }
        Ok(out)
    }

    /// The kernel element `sum_r f_r x^r / r! + Psi_k(...)` with these seeds.
    pub fn lift(&self, seeds: &[MultiPoly<F>]) -> Result<MultiPoly<F>> {
        let mut base = MultiPoly::zero(self.n_vars());
        for (r, s) in seeds.iter().enumerate() {
            base = &base + &self.embed(s, r);
        }
        Ok(&base + &self.psi(seeds)?)
    }

    /// The seeds `f_r`, `r < k`, of `f`: its coefficients of `x^r / r!`.
    pub fn seeds_of(&self, f: &MultiPoly<F>) -> Vec<MultiPoly<F>> {
        let pos = self.y_positions();
        let mut seeds = vec![MultiPoly::zero(self.n_vars() - 1); self.k];
        for (m, c) in f.terms() {
            let e = m.get(self.split) as usize;
            if e < self.k {
                let y = Monomial::new(pos.iter().map(|&i| m.get(i)).collect());
                let c = c.mul(&F::from_rational(&Rational::factorial(e as u32)));
                seeds[e] = &seeds[e] + &MultiPoly::monomial(c, y);
            }
        }
        seeds
    }

    /// The closed-form basis of the degree-`d` kernel: one element per seed
    /// monomial `y^r` in slot `s < k` with `|r| + s = d`.
    pub fn basis(&self, d: usize) -> Result<Vec<MultiPoly<F>>> {
        let ny = self.n_vars() - 1;
        let mut out = Vec::new();
        for s in 0..self.k.min(d + 1) {
            for m in monomials_of_degree(ny, d - s) {
                let mut seeds = vec![MultiPoly::zero(ny); s + 1];
                seeds[s] = MultiPoly::monomial(F::one(), m);
                out.push(self.lift(&seeds)?);
            }
        }
        Ok(out)
    }
}

/// Truncation of `(1 + t + ... + t^{k-1}) / (1 - t)^{n-1}`.
pub fn kernel_hilbert_single(k: usize, n: usize, cap: usize) -> HilbertSeries {
    let inv = |j: usize| if n == 1 { usize::from(j == 0) } else { binomial(j + n - 2, n - 2) };
    let c = (0..=cap).map(|d| (0..k.min(d + 1)).map(|s| inv(d - s)).sum()).collect();
    HilbertSeries::new(c, false)
}

/// Truncation of `1 + sum_{k=1}^n C(n, k) t^k / (1 - t)^{k-1}`.
pub fn tilde_single_kernel_bound(n: usize, cap: usize) -> HilbertSeries {
    let mut c = vec![0usize; cap + 1];
    c[0] = 1;
    for k in 1..=n {
        for (d, slot) in c.iter_mut().enumerate().skip(k) {
            // coefficient of t^{d-k} in 1/(1-t)^{k-1}
            let j = d - k;
            *slot += binomial(n, k) * if k == 1 { usize::from(j == 0) } else { binomial(j + k - 2, k - 2) };
        }
    }
    HilbertSeries::new(c, false)
}
