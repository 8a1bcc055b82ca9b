use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, QPoly};
use crate::scalar::Rational;

/// Integer partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts `parts` and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `n(lambda) = sum_i (i - 1) lambda_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn conjugate(&self) -> Self {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// `z_lambda = prod_k k^{d_k} d_k!`, the centralizer order.
    pub fn z(&self) -> u128 {
        let mut out = 1u128;
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let d = self.multiplicity(k);
            for j in 1..=d {
                out *= (k * j) as u128;
            }
            i += d;
        }
        out
    }

    /// Dominance order `self >= other` (same size assumed).
    pub fn dominates(&self, other: &Self) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn count_standard(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.size() as u128).product();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j) + (conj.0[j] - i) - 1;
                num /= hook as u128;
            }
        }
        num
    }

    /// Permutation of `0..n` with cycles of these lengths filled in
    /// increasing order: `(2, 1)` gives `(0 1)(2)`.
    pub fn representative(&self) -> Vec<usize> {
        let n = self.size();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in &self.0 {
            for j in 0..len {
                perm[start + j] = start + (j + 1) % len;
            }
            start += len;
        }
        perm
    }

    /// Cycle type of a permutation of `0..n`.
    pub fn cycle_type(perm: &[usize]) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for i in 0..perm.len() {
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
                len += 1;
            }
            if len > 0 {
                parts.push(len);
            }
        }
        Partition::new(parts)
    }
}

impl From<Vec<usize>> for Partition {
    fn from(v: Vec<usize>) -> Self {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` (ordered sequences of positive parts).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A filling of a Young diagram (English convention, rows top to bottom)
/// by `1..=n`, each entry used once.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Checks the shape is a partition and the entries are a bijection
    /// onto `1..=n`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must be positive and weakly decreasing".into()));
        }
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidTableau(format!("entries must be a bijection onto 1..={n}")));
            }
            seen[e] = true;
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let w = self.rows.first().map_or(0, |r| r.len());
        (0..w).map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect()).collect()
    }

    /// Rows and columns increasing.
    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    fn row_of(&self, e: usize) -> usize {
        self.rows.iter().position(|r| r.contains(&e)).unwrap()
    }

    /// Descents: `i` such that `i + 1` lies in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.row_of(i + 1) > self.row_of(i)).collect()
    }

    /// `sum_{i in Des} (n - i)`. On `SYT(lambda)` its minimum is `n(lambda)`
    /// and its generating function is the fake degree polynomial.
    pub fn cocharge(&self) -> usize {
        let n = self.size();
        self.descents().iter().map(|&i| n - i).sum()
    }

    /// `prod (x_a - x_b)` over pairs `a` above `b` in the same column.
    pub fn garnir(&self) -> QPoly {
        let n = self.size();
        let mut out = MultiPoly::one(n);
        for col in self.columns() {
            for (j, &a) in col.iter().enumerate() {
                for &b in &col[j + 1..] {
                    let diff = &MultiPoly::var(n, a - 1) - &MultiPoly::<Rational>::var(n, b - 1);
                    out = &out * &diff;
                }
            }
        }
        out
    }

    /// Exchange two entries.
    pub fn swap_entries(&self, a: usize, b: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&e| if e == a { b } else if e == b { a } else { e }).collect())
            .collect();
        Tableau { rows }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Standard Young tableaux of the given shape, by placing `n` in each
/// removable corner.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    if n == 0 {
        return vec![Tableau { rows: Vec::new() }];
    }
    let mut out = Vec::new();
    for i in 0..shape.len() {
        let removable = shape.0.get(i + 1).is_none_or(|&next| next < shape.0[i]);
        if !removable {
            continue;
        }
        let mut smaller = shape.0.clone();
        smaller[i] -= 1;
        for t in standard_tableaux(&Partition::new(smaller)) {
            let mut rows = t.rows;
            if i == rows.len() {
                rows.push(vec![n]);
            } else {
                rows[i].push(n);
            }
            out.push(Tableau { rows });
        }
    }
    out.sort_by(|a, b| a.rows.cmp(&b.rows));
    out
}

/// Every filling of the shape by `1..=n` (there are `n!`).
pub fn all_fillings(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (1..=n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut rows = Vec::new();
        let mut k = 0;
        for &len in shape.parts() {
            rows.push(p[k..k + len].to_vec());
            k += len;
        }
        out.push(Tableau { rows });
    });
    out
}

/// Calls `f` on every permutation of `v[start..]` (Heap-free recursive swap).
pub fn permutations(v: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
    if start == v.len() {
        f(v);
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permutations(v, start + 1, f);
        v.swap(start, i);
    }
}
