use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::binomial;

/// Graded dimensions `sum_d dim_d t^d`, truncated at a degree cap.
///
/// `exact_beyond_cap` records whether all coefficients past the last stored
/// one are known to vanish.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HilbertSeries {
    coefficients: Vec<usize>,
    exact_beyond_cap: bool,
}

impl HilbertSeries {
    pub fn new(coefficients: Vec<usize>, exact_beyond_cap: bool) -> Self {
        HilbertSeries { coefficients, exact_beyond_cap }
    }

    /// A polynomial series (zero beyond its degree); trailing zeros trimmed.
    pub fn polynomial(mut coefficients: Vec<usize>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        Self::new(coefficients, true)
    }

    pub fn coefficients(&self) -> &[usize] {
        &self.coefficients
    }

    pub fn coeff(&self, d: usize) -> usize {
        self.coefficients.get(d).copied().unwrap_or(0)
    }

    pub fn exact_beyond_cap(&self) -> bool {
        self.exact_beyond_cap
    }

    /// Index of the last stored coefficient.
    pub fn cap(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Sum of the stored coefficients (the value at `t = 1`).
    pub fn total(&self) -> usize {
        self.coefficients.iter().sum()
    }

    /// Degree of the last nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.iter().rposition(|&c| c > 0)
    }

    /// The same series with trailing zeros removed.
    pub fn trimmed(&self) -> Self {
        let mut c = self.coefficients.clone();
        while c.last() == Some(&0) {
            c.pop();
        }
        Self::new(c, self.exact_beyond_cap)
    }

    /// Keep only degrees `<= cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        let c = (0..=cap).map(|d| self.coeff(d)).collect();
        Self::new(c, false)
    }

    /// Coefficientwise `self <= other` on all stored degrees of both.
    pub fn dominated_by(&self, other: &Self) -> bool {
        let n = self.coefficients.len().max(other.coefficients.len());
        (0..n).all(|d| self.coeff(d) <= other.coeff(d))
    }

    /// Equality of coefficients up to and including degree `cap`.
    pub fn agrees_up_to(&self, other: &Self, cap: usize) -> bool {
        (0..=cap).all(|d| self.coeff(d) == other.coeff(d))
    }

    /// `[k]_t = 1 + t + ... + t^{k-1}`.
    pub fn q_integer(k: usize) -> Self {
        Self::polynomial(vec![1; k])
    }

    /// `[n]!_t = [1]_t [2]_t ... [n]_t`.
    pub fn t_factorial(n: usize) -> Self {
        (1..=n).fold(Self::polynomial(vec![1]), |acc, k| acc.mul(&Self::q_integer(k)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return Self::polynomial(Vec::new());
        }
        let mut c = vec![0; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c, self.exact_beyond_cap && other.exact_beyond_cap)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coefficients.len().max(other.coefficients.len());
        Self::new(
            (0..n).map(|d| self.coeff(d) + other.coeff(d)).collect(),
            self.exact_beyond_cap && other.exact_beyond_cap,
        )
    }

    /// Multiply by `c t^k`.
    pub fn shift_scale(&self, k: usize, c: usize) -> Self {
        let mut v = vec![0; k];
        v.extend(self.coefficients.iter().map(|x| x * c));
        Self::new(v, self.exact_beyond_cap)
    }

    /// `sum_k C(n, k) t^k [k]!_t`.
    pub fn tilde_prediction(n: usize) -> Self {
        (0..=n).fold(Self::polynomial(Vec::new()), |acc, k| {
            acc.add(&Self::t_factorial(k).shift_scale(k, binomial(n, k)))
        })
    }

    /// Render as `1 + 3t + 3t^2`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(d, &c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (d, 1) => format!("t^{d}"),
                (d, c) => format!("{c}t^{d}"),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
