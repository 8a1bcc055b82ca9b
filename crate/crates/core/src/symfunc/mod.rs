//! Symmetric functions with coefficients in `Q[t]`, characters of `S_n`,
//! tableaux, and graded Frobenius characteristics of harmonic spaces.

mod character;
mod frobenius;
mod partition;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::scalar::{Field, Rational, Ring, UniPoly};

pub use character::{character_table, mn_character, Characters};
pub use frobenius::{
    frobenius_formula_regular, frobenius_formula_tableaux, frobenius_of_family, frobenius_of_kernel,
    frobenius_tilde_formula, frobenius_tilde_from_solver, garnir_bound, garnir_lower_bound_check, GarnirReport,
};
pub use partition::{all_fillings, compositions, partitions, permutations, standard_tableaux, Partition, Tableau};

/// Polynomials in the grading variable `t`.
pub type TPoly = UniPoly<Rational>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Power,
    Schur,
    Homogeneous,
}

impl Basis {
    fn letter(self) -> char {
        match self {
            Basis::Power => 'p',
            Basis::Schur => 's',
            Basis::Homogeneous => 'h',
        }
    }
}

/// A finite combination `sum_lambda c_lambda(t) b_lambda` in one of the
/// classical bases. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, TPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn term(basis: Basis, lambda: Partition, c: TPoly) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(lambda, &c);
        out
    }

    /// The basis element `b_lambda` with coefficient 1.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, TPoly::one())
    }

    pub fn one() -> Self {
        Self::basis_element(Basis::Schur, Partition::empty())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &TPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> TPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(TPoly::zero)
    }

    fn add_term(&mut self, lambda: Partition, c: &TPoly) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&lambda) {
            Some(x) => x.add(c),
            None => c.clone(),
        };
        if s.is_zero() {
            self.terms.remove(&lambda);
        } else {
            self.terms.insert(lambda, s);
        }
    }

    /// Sum; the result is in the basis of `self`.
    pub fn add(&self, rhs: &Self) -> Self {
        let rhs = rhs.to_basis(self.basis);
        let mut out = self.clone();
        for (l, c) in rhs.terms {
            out.add_term(l, &c);
        }
        out
    }

    pub fn scale(&self, c: &TPoly) -> Self {
        let mut out = Self::zero(self.basis);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), &x.mul(c));
        }
        out
    }

    /// Product, computed in the power-sum basis and returned in the basis
    /// of `self`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let a = self.to_basis(Basis::Power);
        let b = rhs.to_basis(Basis::Power);
        let mut out = Self::zero(Basis::Power);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                let mut parts = la.parts().to_vec();
                parts.extend_from_slice(lb.parts());
                out.add_term(Partition::new(parts), &ca.mul(cb));
            }
        }
        out.to_basis(self.basis)
    }

    /// Substitute a value for `t`.
    pub fn eval_t(&self, t: &Rational) -> Self {
        let mut out = Self::zero(self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &TPoly::constant(c.eval(t)));
        }
        out
    }

    /// Change of basis. Exact; round trips are the identity.
    pub fn to_basis(&self, target: Basis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        let mut chars = Characters::default();
        match (self.basis, target) {
            (Basis::Power, Basis::Schur) => {
                let mut out = Self::zero(Basis::Schur);
                for (mu, c) in &self.terms {
                    for lambda in partitions(mu.size()) {
                        let chi = chars.value(&lambda, mu);
                        out.add_term(lambda, &c.scale(&Rational::from(chi)));
                    }
                }
                out
            }
            (Basis::Schur, Basis::Power) => {
                let mut out = Self::zero(Basis::Power);
                for (lambda, c) in &self.terms {
                    for mu in partitions(lambda.size()) {
                        let chi = chars.value(lambda, &mu);
                        let w = Rational::new(chi, 1).div(&Rational::from(mu.z() as i64)).unwrap();
                        out.add_term(mu, &c.scale(&w));
                    }
                }
                out
            }
            (Basis::Homogeneous, Basis::Schur) => {
                let mut out = Self::zero(Basis::Schur);
                for (mu, c) in &self.terms {
                    for (lambda, k) in h_in_schur(mu) {
                        out.add_term(lambda, &c.scale(&Rational::from(k)));
                    }
                }
                out
            }
            (Basis::Schur, Basis::Homogeneous) => {
                // h_mu = s_mu + (terms s_lambda with lambda dominating mu), so
                // peeling off the lexicographically smallest term terminates.
                let mut rem = self.clone();
                let mut out = Self::zero(Basis::Homogeneous);
                while let Some((lambda, c)) = rem.terms.iter().next().map(|(l, c)| (l.clone(), c.clone())) {
                    for (nu, k) in h_in_schur(&lambda) {
                        rem.add_term(nu, &c.scale(&Rational::from(-k)));
                    }
                    out.add_term(lambda, &c);
                }
                out
            }
            (Basis::Homogeneous, Basis::Power) => self.to_basis(Basis::Schur).to_basis(Basis::Power),
            (Basis::Power, Basis::Homogeneous) => self.to_basis(Basis::Schur).to_basis(Basis::Homogeneous),
            _ => unreachable!(),
        }
    }

    /// True if every coefficient is a polynomial in `t` with nonnegative
    /// integer coefficients.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.terms.values().all(|c| c.coeffs().iter().all(|x| x.is_integer() && x.signum() >= 0))
    }

    /// Render as `s[3] + t*(1+t)*s[2,1] + t^3*s[1,1,1]`, largest partition
    /// first.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (lambda, c) in self.terms.iter().rev() {
            let v = c.valuation().unwrap();
            let mut rest = c.unshift(v);
            let neg = rest.term_count() == 1 && rest.coeff(0).signum() < 0;
            if neg {
                rest = rest.neg();
            }
            let mut factors = Vec::new();
            match v {
                0 => {}
                1 => factors.push("t".to_string()),
                _ => factors.push(format!("t^{v}")),
            }
            if !rest.is_one() {
                let r = rest.render("t");
                if rest.term_count() > 1 {
                    factors.push(format!("({r})"));
                } else {
                    factors.insert(0, r);
                }
            }
            factors.push(format!("{}{}", self.basis.letter(), lambda));
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(l, c)| {
                let coeffs: Vec<String> = c.coeffs().iter().map(|x| x.to_string()).collect();
                json!({ "partition": l.parts(), "coefficients": coeffs })
            })
            .collect();
        json!({ "basis": self.basis, "terms": terms, "rendered": self.render() })
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Partitions `mu` with `mu / lambda` a horizontal strip of size `m`.
pub fn pieri(lambda: &Partition, m: usize) -> Vec<Partition> {
    fn rec(lam: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let base = lam.get(i).copied().unwrap_or(0);
        if i == lam.len() {
            // the new row below the last one
            if left <= lam.last().copied().unwrap_or(usize::MAX) {
                let mut v = cur.clone();
                v.push(left);
                out.push(Partition::new(v));
            }
            return;
        }
        let cap = if i == 0 { left } else { (lam[i - 1] - base).min(left) };
        for add in 0..=cap {
            cur.push(base + add);
            rec(lam, i + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), 0, m, &mut Vec::new(), &mut out);
    out
}

/// `h_mu = sum_lambda K_{lambda mu} s_lambda`, by repeated Pieri steps.
fn h_in_schur(mu: &Partition) -> BTreeMap<Partition, i64> {
    let mut cur = BTreeMap::from([(Partition::empty(), 1i64)]);
    for &m in mu.parts() {
        let mut next = BTreeMap::new();
        for (l, k) in &cur {
            for nu in pieri(l, m) {
                *next.entry(nu).or_insert(0) += k;
            }
        }
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn tp(c: &[i64]) -> TPoly {
        TPoly::new(c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn render_format() {
        let mut f = SymFunc::zero(Basis::Schur);
        f.add_term(p(&[3]), &tp(&[1]));
        f.add_term(p(&[2, 1]), &tp(&[0, 1, 1]));
        f.add_term(p(&[1, 1, 1]), &tp(&[0, 0, 0, 1]));
        assert_eq!(f.render(), "s[3] + t*(1+t)*s[2,1] + t^3*s[1,1,1]");
        f.add_term(p(&[2, 1]), &tp(&[0, -1, -1]));
        f.add_term(p(&[1, 1, 1]), &tp(&[0, 0, 0, -3]));
        assert_eq!(f.render(), "s[3] - 2*t^3*s[1,1,1]");
    }

    #[test]
    fn pieri_rule() {
        let got: Vec<String> = pieri(&p(&[2, 1]), 2).iter().map(|x| x.to_string()).collect();
        let mut want = vec!["[4,1]", "[3,2]", "[3,1,1]", "[2,2,1]"];
        want.sort();
        let mut got = got;
        got.sort();
        assert_eq!(got, want);
        assert_eq!(pieri(&Partition::empty(), 3), vec![p(&[3])]);
    }

    #[test]
    fn round_trips() {
        for n in 1..6 {
            for l in partitions(n) {
                for b in [Basis::Power, Basis::Schur, Basis::Homogeneous] {
                    let f = SymFunc::basis_element(b, l.clone());
                    for c in [Basis::Power, Basis::Schur, Basis::Homogeneous] {
                        assert_eq!(f.to_basis(c).to_basis(b), f);
                    }
                }
            }
        }
    }

    #[test]
    fn h_two_one() {
        let h = SymFunc::basis_element(Basis::Homogeneous, p(&[2, 1])).to_basis(Basis::Schur);
        assert_eq!(h.render(), "s[3] + s[2,1]");
        let p1 = SymFunc::basis_element(Basis::Power, p(&[1]));
        assert_eq!(p1.mul(&p1).to_basis(Basis::Schur).render(), "s[2] + s[1,1]");
    }
}
