//! Exact linear algebra over a [`Field`].
//!
//! The main tool is [`Echelon`], an incrementally built row echelon form of
//! sparse rows. Rows are inserted one at a time; each insertion reduces the
//! new row by the existing pivot rows and either discards it (dependent) or
//! keeps it with a new pivot. Pivots are chosen among the surviving entries
//! by smallest [`Ring::complexity`], ties going to the highest column.
//!
//! A dense fraction-free (Bareiss) determinant and rank routine over any
//! [`Ring`] with exact division is provided as an independent oracle and for
//! determinants over parameter polynomial rings.

use crate::scalar::{Field, Ring};

/// Sparse vector as sorted `(column, value)` pairs with nonzero values.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn to_sparse<F: Ring>(dense: &[F]) -> SparseVec<F> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn to_dense<F: Ring>(sparse: &[(usize, F)], n: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    for (i, c) in sparse {
        v[*i] = c.clone();
    }
    v
}

#[derive(Clone, Debug)]
struct PivotRow<F> {
    pivot: usize,
    entries: SparseVec<F>,
}

/// Incremental row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<PivotRow<F>>,
    pivot_cols: Vec<bool>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_cols: vec![false; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduce a dense vector by the stored rows in place.
    fn reduce_dense(&self, v: &mut [F]) {
        for row in &self.rows {
            let c = &v[row.pivot];
            if c.is_zero() {
                continue;
            }
            let c = c.clone();
            for (j, r) in &row.entries {
                v[*j] = v[*j].sub(&c.mul(r));
            }
        }
    }

    /// The remainder of `v` after reduction by the stored rows.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        self.reduce_dense(&mut w);
        w
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Insert a dense row; returns whether it increased the rank.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ncols, "row length mismatch");
        if self.is_full() {
            return false;
        }
        let mut w = v.to_vec();
        self.reduce_dense(&mut w);
        self.push_reduced(w)
    }

    /// Insert a sparse row.
    pub fn insert_sparse(&mut self, v: &[(usize, F)]) -> bool {
        if v.is_empty() || self.is_full() {
            return false;
        }
        let mut w = to_dense(v, self.ncols);
        self.reduce_dense(&mut w);
        self.push_reduced(w)
    }

    fn push_reduced(&mut self, w: Vec<F>) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for (j, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cx = c.complexity();
            if best.is_none_or(|(bc, _)| cx <= bc) {
                best = Some((cx, j));
            }
        }
        let Some((_, p)) = best else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero pivot");
        let entries: SparseVec<F> = w
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, if j == p { F::one() } else { c.mul(&inv) }))
            .collect();
        self.pivot_cols[p] = true;
        self.rows.push(PivotRow { pivot: p, entries });
        true
    }

    /// Basis of `{x : r . x = 0 for all stored rows r}` in reduced echelon
    /// form: each vector has its last nonzero coordinate equal to 1 and these
    /// leading positions are zero in all other vectors.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..self.ncols).filter(|&j| !self.pivot_cols[j]).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![F::zero(); self.ncols];
            x[f] = F::one();
            // Rows only involve pivots of later rows, so solve back to front.
            for row in self.rows.iter().rev() {
                let mut s = F::zero();
                for (j, r) in &row.entries {
                    if *j != row.pivot && !x[*j].is_zero() {
                        s = s.add(&r.mul(&x[*j]));
                    }
                }
                x[row.pivot] = s.neg();
            }
            out.push(x);
        }
        rref_by_last(out)
    }

    /// The stored rows as dense vectors.
    pub fn rows_dense(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|r| to_dense(&r.entries, self.ncols)).collect()
    }
}

/// Reduced echelon form of a list of vectors, with pivots at the last
/// nonzero coordinate; zero vectors are dropped and the output is sorted by
/// decreasing pivot.
pub fn rref_by_last<F: Field>(vectors: Vec<Vec<F>>) -> Vec<Vec<F>> {
    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut v in vectors {
        for (r, &p) in rows.iter().zip(&pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, y) in v.iter_mut().zip(r) {
                    if !y.is_zero() {
                        *x = x.sub(&c.mul(y));
                    }
                }
            }
        }
        let Some(p) = v.iter().rposition(|c| !c.is_zero()) else {
            continue;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut() {
            *x = x.mul(&inv);
        }
        for (r, _) in rows.iter_mut().zip(&pivots) {
            if !r[p].is_zero() {
                let c = r[p].clone();
                for (x, y) in r.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x = x.sub(&c.mul(y));
                    }
                }
            }
        }
        rows.push(v);
        pivots.push(p);
    }
    let mut idx: Vec<usize> = (0..rows.len()).collect();
    idx.sort_by(|&a, &b| pivots[b].cmp(&pivots[a]));
    idx.into_iter().map(|i| rows[i].clone()).collect()
}

/// Rank of a list of dense vectors.
pub fn rank<F: Field>(vectors: &[Vec<F>]) -> usize {
    let Some(n) = vectors.first().map(|v| v.len()) else {
        return 0;
    };
    let mut e = Echelon::new(n);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Fraction-free elimination on a dense matrix: returns the rank and, for a
/// square matrix, the determinant. Requires exact division in the ring.
pub fn bareiss<R: Ring>(matrix: &[Vec<R>]) -> (usize, Option<R>) {
    let m = matrix.len();
    let n = matrix.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<R>> = matrix.to_vec();
    let mut prev = R::one();
    let mut sign = false;
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].complexity())
        else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = !sign;
        }
        for i in (r + 1)..m {
            for j in (c + 1)..n {
                let t = a[r][c].mul(&a[i][j]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = t.div_exact(&prev).expect("Bareiss division must be exact");
            }
            a[i][c] = R::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = (m == n).then(|| {
        if r < n {
            R::zero()
        } else if sign {
            prev.neg()
        } else {
            prev
        }
    });
    (r, det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn nullspace_annihilated_and_normalized() {
        let rows = vec![q(&[1, 1, 0, 0]), q(&[0, 1, 1, 1])];
        let mut e = Echelon::new(4);
        for r in &rows {
            assert!(e.insert(r));
        }
        assert!(!e.insert(&q(&[1, 2, 1, 1])));
        let ns = e.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let dot = r.iter().zip(v).fold(Rational::zero(), |a, (x, y)| a.add(&x.mul(y)));
                assert!(dot.is_zero());
            }
        }
        assert_eq!(ns[0][3], Rational::one());
        assert!(ns[1][3].is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = vec![q(&[2, 0, 1]), q(&[1, 3, 2]), q(&[1, 1, 1])];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(bareiss(&m), (2, Some(Rational::zero())));
        let m = vec![q(&[0, 1]), q(&[1, 0])];
        assert_eq!(bareiss(&m).1, Some(Rational::from(-1)));
    }
}
