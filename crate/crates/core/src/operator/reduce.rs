use std::collections::BTreeMap;

use crate::scalar::Ring;

/// Expand the product `D*_{alpha_1} ... D*_{alpha_m}` indexed by a
/// composition as a combination of products indexed by partitions, using
/// `D*_i D*_j = D*_j D*_i + c(i, j) D*_{i+j}` to remove inversions.
///
/// Keys of the result are weakly decreasing sequences.
pub fn reduce_composition<R: Ring>(
    alpha: &[usize],
    c: &dyn Fn(usize, usize) -> R,
) -> BTreeMap<Vec<usize>, R> {
    let mut out: BTreeMap<Vec<usize>, R> = BTreeMap::new();
    let mut stack: Vec<(Vec<usize>, R)> = vec![(alpha.to_vec(), R::one())];
    while let Some((w, coef)) = stack.pop() {
        if coef.is_zero() {
            continue;
        }
        match w.windows(2).position(|p| p[0] < p[1]) {
            None => {
                let e = out.entry(w).or_insert_with(R::zero);
                *e = e.add(&coef);
            }
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                stack.push((swapped, coef.clone()));
                let cij = c(w[i], w[i + 1]);
                if !cij.is_zero() {
                    let mut merged = w[..i].to_vec();
                    merged.push(w[i] + w[i + 1]);
                    merged.extend_from_slice(&w[i + 2..]);
                    stack.push((merged, coef.mul(&cij)));
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}
