use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{falling, Monomial, MultiPoly};
use crate::scalar::Ring;

/// Differential operator with polynomial coefficients, stored in normal
/// order: each term `c * x^a * d^b` has all multiplications to the left of
/// all derivatives.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOperator<R> {
    n_vars: usize,
    terms: BTreeMap<(Monomial, Monomial), R>,
}

impl<R: Ring> DiffOperator<R> {
    pub fn zero(n_vars: usize) -> Self {
        DiffOperator { n_vars, terms: BTreeMap::new() }
    }

    pub fn identity(n_vars: usize) -> Self {
        Self::term(n_vars, R::one(), Monomial::one(n_vars), Monomial::one(n_vars))
    }

    /// The single term `c * x^xe * d^de`.
    pub fn term(n_vars: usize, c: R, xe: Monomial, de: Monomial) -> Self {
        let mut op = Self::zero(n_vars);
        op.add_term(xe, de, &c);
        op
    }

    /// `d_i^k`.
    pub fn partial(n_vars: usize, i: usize, k: u16) -> Self {
        let mut d = Monomial::one(n_vars);
        d.set(i, k);
        Self::term(n_vars, R::one(), Monomial::one(n_vars), d)
    }

    /// Multiplication by `x_i^k`.
    pub fn mult_var(n_vars: usize, i: usize, k: u16) -> Self {
        let mut x = Monomial::one(n_vars);
        x.set(i, k);
        Self::term(n_vars, R::one(), x, Monomial::one(n_vars))
    }

    /// Multiplication by a polynomial.
    pub fn mult_poly(p: &MultiPoly<R>) -> Self {
        let n = p.n_vars();
        let mut op = Self::zero(n);
        for (m, c) in p.terms() {
            op.add_term(m.clone(), Monomial::one(n), c);
        }
        op
    }

    pub(crate) fn add_term(&mut self, xe: Monomial, de: Monomial, c: &R) {
        if c.is_zero() {
            return;
        }
        let key = (xe, de);
        let s = match self.terms.get(&key) {
            Some(x) => x.add(c),
            None => c.clone(),
        };
        if s.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, s);
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(coefficient, x exponents, d exponents)`.
    pub fn terms(&self) -> impl Iterator<Item = (&R, &Monomial, &Monomial)> {
        self.terms.iter().map(|((x, d), c)| (c, x, d))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total derivative order; `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().map(|(_, d)| d.degree()).max()
    }

    /// The common value of `|x exponents| - |d exponents|`, if any.
    pub fn homogeneity(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|(x, d)| x.degree() as i64 - d.degree() as i64);
        let h = it.next()?;
        it.all(|e| e == h).then_some(h)
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.n_vars != n {
            return Err(Error::VarMismatch(self.n_vars, n));
        }
        Ok(())
    }

    pub fn apply(&self, f: &MultiPoly<R>) -> Result<MultiPoly<R>> {
        self.check(f.n_vars())?;
        let mut out = MultiPoly::zero(self.n_vars);
        for ((xe, de), c) in &self.terms {
            for (m, a) in f.terms() {
                if let Some((coef, rest)) = differentiate_monomial(m, de) {
                    let k = c.mul(a).mul(&R::from_int(coef));
                    out.add_term(rest.mul(xe), &k);
                }
            }
        }
        Ok(out)
    }

    /// Apply to a single monomial with unit coefficient.
    pub fn apply_monomial(&self, m: &Monomial) -> MultiPoly<R> {
        let mut out = MultiPoly::zero(self.n_vars);
        for ((xe, de), c) in &self.terms {
            if let Some((coef, rest)) = differentiate_monomial(m, de) {
                out.add_term(rest.mul(xe), &c.mul(&R::from_int(coef)));
            }
        }
        out
    }

    /// Normal-ordered product `self * rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        rhs.check(self.n_vars)?;
        let mut out = Self::zero(self.n_vars);
        for ((x1, d1), c1) in &self.terms {
            for ((x2, d2), c2) in &rhs.terms {
                // d^{d1} x^{x2} = sum_j prod_i C(d1_i, j_i) (x2_i)_{j_i} x^{x2-j} d^{d1-j}
                let c = c1.mul(c2);
                for_each_below(d1, x2, &mut |j| {
                    let mut w: i64 = 1;
                    for (i, &ji) in j.iter().enumerate() {
                        let ji = ji as usize;
                        w *= binom_i64(d1.get(i) as usize, ji) * falling(x2.get(i) as usize, ji);
                    }
                    let jm = Monomial::new(j.to_vec());
                    let xe = x1.mul(&x2.div(&jm).unwrap());
                    let de = d1.div(&jm).unwrap().mul(d2);
                    out.add_term(xe, de, &c.mul(&R::from_int(w)));
                });
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        rhs.check(self.n_vars)?;
        let mut out = self.clone();
        for ((x, d), c) in &rhs.terms {
            out.add_term(x.clone(), d.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.scale(&R::from_int(-1)))
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.n_vars);
        for ((x, d), a) in &self.terms {
            out.add_term(x.clone(), d.clone(), &a.mul(c));
        }
        out
    }

    /// Lie bracket `AB - BA`.
    pub fn bracket(&self, rhs: &Self) -> Result<Self> {
        self.compose(rhs)?.try_sub(&rhs.compose(self)?)
    }

    /// Adjoint for the apolar pairing: `c x^a d^b` goes to `c x^b d^a`.
    pub fn dual(&self) -> Self {
        let mut out = Self::zero(self.n_vars);
        for ((x, d), c) in &self.terms {
            out.add_term(d.clone(), x.clone(), c);
        }
        out
    }

    /// Principal symbol: the top-order terms as a polynomial in
    /// `x_1..x_n, xi_1..xi_n`.
    pub fn symbol(&self) -> Result<MultiPoly<R>> {
        let ord = self.order().ok_or(Error::ZeroOperator)?;
        let n = self.n_vars;
        let mut out = MultiPoly::zero(2 * n);
        for ((x, d), c) in &self.terms {
            if d.degree() == ord {
                let mut v = x.exps().to_vec();
                v.extend_from_slice(d.exps());
                out.add_term(Monomial::new(v), c);
            }
        }
        Ok(out)
    }

    /// Relabel variables: `x_i` (and `d_i`) become `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.n_vars);
        for ((x, d), c) in &self.terms {
            out.add_term(x.permute(perm), d.permute(perm), c);
        }
        out
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> DiffOperator<S> {
        let mut out = DiffOperator::zero(self.n_vars);
        for ((x, d), c) in &self.terms {
            out.add_term(x.clone(), d.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<DiffOperator<S>> {
        let mut out = DiffOperator::zero(self.n_vars);
        for ((x, d), c) in &self.terms {
            out.add_term(x.clone(), d.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Render in normal order, e.g. `q*x1*d1^2 + d1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let xs = |i: usize| format!("x{}", i + 1);
        let ds = |i: usize| format!("d{}", i + 1);
        let mut keys: Vec<_> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b.1.degree(), &b.1, &b.0).cmp(&(a.1.degree(), &a.1, &a.0)));
        let mut out = String::new();
        for key in keys {
            let c = &self.terms[key];
            let mut parts = Vec::new();
            if key.0.degree() > 0 {
                parts.push(key.0.render(&xs));
            }
            if key.1.degree() > 0 {
                parts.push(key.1.render(&ds));
            }
            let mono = parts.join("*");
            let cs = c.to_string();
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if cs.chars().skip(1).any(|ch| ch == '+' || ch == '-') && !cs.starts_with('(') {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
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
}

/// `d^de x^m = coef * x^rest`, or `None` when it vanishes.
fn differentiate_monomial(m: &Monomial, de: &Monomial) -> Option<(i64, Monomial)> {
    let rest = m.div(de)?;
    let mut coef: i64 = 1;
    for i in 0..m.n_vars() {
        coef *= falling(m.get(i) as usize, de.get(i) as usize);
    }
    Some((coef, rest))
}

fn binom_i64(n: usize, k: usize) -> i64 {
    crate::poly::binomial(n, k) as i64
}

/// Visit every exponent vector `j` with `j <= min(a, b)` componentwise.
fn for_each_below(a: &Monomial, b: &Monomial, f: &mut dyn FnMut(&[u16])) {
    let lim: Vec<u16> = a.exps().iter().zip(b.exps()).map(|(x, y)| *x.min(y)).collect();
    let mut j = vec![0u16; lim.len()];
    loop {
        f(&j);
        let mut i = 0;
        loop {
            if i == lim.len() {
                return;
            }
            if j[i] < lim[i] {
                j[i] += 1;
                break;
            }
            j[i] = 0;
            i += 1;
        }
    }
}

impl<R: Ring> fmt::Display for DiffOperator<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<R: Ring> fmt::Debug for DiffOperator<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_from;
    use crate::scalar::Rational;

    type Op = DiffOperator<Rational>;

    #[test]
    fn canonical_commutation() {
        let d = Op::partial(1, 0, 1);
        let x = Op::mult_var(1, 0, 1);
        let dx = d.compose(&x).unwrap();
        let expect = Op::term(1, Rational::one(), Monomial::new(vec![1]), Monomial::new(vec![1]))
            .try_add(&Op::identity(1))
            .unwrap();
        assert_eq!(dx, expect);
        assert_eq!(dx.render(), "x1*d1 + 1");
    }

    #[test]
    fn compose_with_identity() {
        let d = Op::term(2, Rational::from(3), Monomial::new(vec![1, 0]), Monomial::new(vec![0, 2]));
        assert_eq!(d.compose(&Op::identity(2)).unwrap(), d);
        assert_eq!(Op::identity(2).compose(&d).unwrap(), d);
    }

    #[test]
    fn symbol_top_order() {
        let op = Op::term(1, Rational::one(), Monomial::new(vec![1]), Monomial::new(vec![2]))
            .try_add(&Op::partial(1, 0, 1))
            .unwrap();
        assert_eq!(op.symbol().unwrap(), poly_from(2, &[(1, &[1, 2])]));
        assert_eq!(Op::zero(1).symbol(), Err(Error::ZeroOperator));
    }

    #[test]
    fn apply_monomial() {
        let op = Op::term(1, Rational::one(), Monomial::new(vec![1]), Monomial::new(vec![2]));
        let f = poly_from(1, &[(1, &[2])]);
        assert_eq!(op.apply(&f).unwrap(), poly_from(1, &[(2, &[1])]));
    }
}
