use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::scalar::{Field, Rational, Ring};

/// Sparse multivariate polynomial: a map from exponent vectors to nonzero
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<R> {
    n_vars: usize,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(n_vars: usize) -> Self {
        MultiPoly { n_vars, terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, c: R) -> Self {
        Self::monomial(c, Monomial::one(n_vars))
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, R::one())
    }

    /// The variable `x_{i+1}`.
    pub fn var(n_vars: usize, i: usize) -> Self {
        Self::monomial(R::one(), Monomial::var(n_vars, i))
    }

    pub fn monomial(c: R, m: Monomial) -> Self {
        let n_vars = m.n_vars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { n_vars, terms }
    }

    /// Collect `(coefficient, monomial)` pairs, merging duplicates.
    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (R, Monomial)>) -> Self {
        let mut p = Self::zero(n_vars);
        for (c, m) in terms {
            assert_eq!(m.n_vars(), n_vars, "monomial has wrong number of variables");
            p.add_term(m, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &R) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    /// Largest term under the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    /// Maximum total degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// The common degree of all terms, if there is one (zero has none).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::VarMismatch(self.n_vars, other.n_vars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.n_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> Self {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars);
        }
        Self::from_terms(self.n_vars, self.terms.iter().map(|(m, x)| (x.mul(c), m.clone())))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n_vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// k-th partial derivative in the (zero-based) variable `i`.
    pub fn partial_derivative(&self, i: usize, k: usize) -> Result<Self> {
        if i >= self.n_vars {
            return Err(Error::VarIndex { index: i, n_vars: self.n_vars });
        }
        let mut out = Self::zero(self.n_vars);
        for (m, c) in &self.terms {
            let e = m.get(i) as usize;
            if e < k {
                continue;
            }
            let mut mm = m.clone();
            mm.set(i, (e - k) as u16);
            out.add_term(mm, &c.mul(&R::from_int(falling(e, k))));
        }
        Ok(out)
    }

    /// Homogeneous component of degree `d`.
    pub fn graded_component(&self, d: usize) -> Self {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Apolar pairing `<f, g>`: the constant term of `f(d/dx) g`.
    pub fn apolar_pairing(&self, other: &Self) -> Result<R> {
        self.check_vars(other)?;
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            if let Some(d) = other.terms.get(m) {
                acc = acc.add(&c.mul(d).mul(&R::from_rational(&m.factorial())));
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[R]) -> R {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                t = t.mul(&x.pow(e as u32));
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Relabel variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        MultiPoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())).collect(),
        }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        MultiPoly::from_terms(self.n_vars, self.terms.iter().map(|(m, c)| (f(c), m.clone())))
    }

    pub fn try_map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<MultiPoly<S>> {
        let mut out = MultiPoly::zero(self.n_vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Embed into a ring with more variables, old variable `i` going to
    /// position `positions[i]`.
    pub fn embed(&self, n_vars: usize, positions: &[usize]) -> Self {
        MultiPoly {
            n_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut v = vec![0u16; n_vars];
                    for (i, &e) in m.exps().iter().enumerate() {
                        v[positions[i]] = e;
                    }
                    (Monomial::new(v), c.clone())
                })
                .collect(),
        }
    }

    /// Render with custom variable names; terms in descending order.
    pub fn render_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let term = if m.degree() == 0 {
                cs
            } else {
                let ms = m.render(names);
                if c.is_one() {
                    ms
                } else if cs == "-1" {
                    format!("-{ms}")
                } else if needs_parens(&cs) {
                    format!("({cs})*{ms}")
                } else {
                    format!("{cs}*{ms}")
                }
            };
            if out.is_empty() {
                out = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }

    pub fn render(&self) -> String {
        self.render_with(&|i| format!("x{}", i + 1))
    }
}

fn needs_parens(s: &str) -> bool {
    if s.starts_with('(') && s.ends_with(')') && s.matches('(').count() == 1 {
        return false;
    }
    s.chars().skip(1).any(|c| c == '+' || c == '-' || c == ' ')
}

impl<F: Field> MultiPoly<F> {
    /// Exact quotient by `rhs`, or `None` if `rhs` does not divide.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (lm, lc) = rhs.leading_term()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n_vars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm)?;
            let qc = c.mul(&lc_inv);
            let t = Self::monomial(qc.clone(), qm.clone());
            rem = rem.try_sub(&(&t * rhs)).ok()?;
            quot.add_term(qm, &qc);
        }
        Some(quot)
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }
}

pub(crate) fn falling(e: usize, k: usize) -> i64 {
    ((e - k + 1)..=e).map(|x| x as i64).product()
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<R: Ring> Add for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn add(self, rhs: Self) -> MultiPoly<R> {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<R: Ring> Sub for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn sub(self, rhs: Self) -> MultiPoly<R> {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl<R: Ring> Mul for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn mul(self, rhs: Self) -> MultiPoly<R> {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl<R: Ring> Neg for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        self.neg_ref()
    }
}

/// Shorthand for building a rational polynomial from integer terms:
/// `poly_from(n, &[(c, &[e1, e2, ...]), ...])`.
pub fn poly_from(n: usize, terms: &[(i64, &[u16])]) -> MultiPoly<Rational> {
    MultiPoly::from_terms(
        n,
        terms.iter().map(|(c, e)| (Rational::from(*c), Monomial::new(e.to_vec()))),
    )
}
