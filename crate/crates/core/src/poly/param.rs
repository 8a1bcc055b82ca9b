use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{Field, Rational, Ring};

/// Exponent vector of a parameter monomial with trailing zeros trimmed, so
/// that polynomials in different numbers of parameters compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PExp(Vec<u16>);

impl PExp {
    fn new(mut v: Vec<u16>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        PExp(v)
    }

    fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn get(&self, i: usize) -> u16 {
        self.0.get(i).copied().unwrap_or(0)
    }

    fn mul(&self, o: &PExp) -> PExp {
        let n = self.0.len().max(o.0.len());
        PExp::new((0..n).map(|i| self.get(i) + o.get(i)).collect())
    }

    fn div(&self, o: &PExp) -> Option<PExp> {
        let n = self.0.len().max(o.0.len());
        (0..n)
            .map(|i| self.get(i).checked_sub(o.get(i)))
            .collect::<Option<Vec<_>>>()
            .map(PExp::new)
    }
}

impl Ord for PExp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            (0..n)
                .map(|i| self.get(i).cmp(&other.get(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for PExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the symbolic parameters `a1, a2, ...` with rational
/// coefficients. Used as the coefficient ring for parameter-symbolic
/// computations, where exact division replaces fractions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    terms: BTreeMap<PExp, Rational>,
}

impl ParamPoly {
    /// The parameter `a_{i+1}`.
    pub fn param(i: usize) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = 1;
        Self::term(Rational::one(), v)
    }

    pub fn term(c: Rational, exps: Vec<u16>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(PExp::new(exps), c);
        }
        ParamPoly { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Vec::new())
    }

    fn add_term(&mut self, e: PExp, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&e) {
            Some(x) => x.add(c),
            None => c.clone(),
        };
        if s.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.0.as_slice(), c))
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// Substitute rational values for the parameters.
    pub fn eval(&self, a: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                t = t.mul(&a[i].pow(k as u32));
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Relabel parameters: `a_i` becomes `a_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut v = vec![0; perm.len()];
            for (i, &k) in e.0.iter().enumerate() {
                v[perm[i]] = k;
            }
            out.add_term(PExp::new(v), c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, x) in &self.terms {
            out.add_term(e.clone(), &x.mul(c));
        }
        out
    }

    fn leading(&self) -> Option<(&PExp, &Rational)> {
        self.terms.iter().next_back()
    }

    fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("a{}", i + 1) } else { format!("a{}^{}", i + 1, k) })
                .collect();
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(r) => (true, r.to_string()),
                None => (false, cs),
            };
            let t = if mono.is_empty() {
                body
            } else if body == "1" {
                mono.join("*")
            } else {
                format!("{body}*{}", mono.join("*"))
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&t);
        }
        out
    }
}

impl Ring for ParamPoly {
    fn zero() -> Self {
        ParamPoly { terms: BTreeMap::new() }
    }

    fn one() -> Self {
        Self::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.mul(e2), &c1.mul(c2));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        ParamPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }

    fn complexity(&self) -> usize {
        self.terms.len().max(1)
    }

    fn as_rational(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) => self.terms.values().next().cloned(),
            _ => None,
        }
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (le, lc) = rhs.leading()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading() {
            let qe = e.div(le)?;
            let qc = c.mul(&lc_inv);
            let t = ParamPoly { terms: BTreeMap::from([(qe.clone(), qc.clone())]) };
            rem = rem.sub(&t.mul(rhs));
            quot.add_term(qe, &qc);
        }
        Some(quot)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
