use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::linalg::Echelon;
use crate::operator::OperatorFamily;
use crate::poly::{Monomial, MultiPoly, QPoly, QqPoly};
use crate::scalar::{QScalar, Rational, Ring, UniPoly};

use super::GradedKernel;

type Up = UniPoly<Rational>;

/// A polynomial over `Q(q)` written as `q^shift (f_0 + q f_1 + ... + q^m f_m)`
/// with rational layers and `f_0, f_m` nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct QLayeredPolynomial {
    shift: i64,
    layers: Vec<QPoly>,
}

impl QLayeredPolynomial {
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn layers(&self) -> &[QPoly] {
        &self.layers
    }

    /// The index `m` of the last layer.
    pub fn length(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }

    pub fn first_term(&self) -> &QPoly {
        &self.layers[0]
    }

    pub fn last_term(&self) -> &QPoly {
        self.layers.last().unwrap()
    }

    /// `sum_i q^i f_i` (without the global power).
    pub fn reconstruct(&self, n_vars: usize) -> QqPoly {
        let mut out = MultiPoly::zero(n_vars);
        for (i, f) in self.layers.iter().enumerate() {
            let qi = QScalar::from_poly(Up::monomial(Rational::one(), i));
            out = &out + &f.map_coeffs(|c| QScalar::from_rational(c).mul(&qi));
        }
        out
    }

    /// Check the layer conditions for every `k <= k_max`:
    /// (a) `lap_k f_0 = 0`, (b) `lap_k f_i = -tilde_k f_{i-1}` for `i >= 1`,
    /// (c) `tilde_k f_m = 0`.
    pub fn check_conditions(&self, k_max: usize) -> LayerConditions {
        let n = self.layers[0].n_vars();
        let lap = OperatorFamily::<Rational>::classical(n);
        let til = OperatorFamily::<Rational>::tilde(n);
        let mut res = LayerConditions { a: true, b: true, c: true };
        for k in 1..=k_max {
            let (l, t) = (lap.member(k).unwrap(), til.member(k).unwrap());
            res.a &= l.apply(&self.layers[0]).unwrap().is_zero();
            for i in 1..self.layers.len() {
                let lhs = l.apply(&self.layers[i]).unwrap();
                let rhs = t.apply(&self.layers[i - 1]).unwrap();
                res.b &= (&lhs + &rhs).is_zero();
            }
            res.c &= t.apply(self.last_term()).unwrap().is_zero();
        }
        res
    }

    /// For each layer index `r`, every product `lap_{k_1} ... lap_{k_r}` applied
    /// to `f_r` is classically harmonic. Returns the first failing `(r, ks)`.
    pub fn check_laplacian_chains(&self) -> std::result::Result<(), (usize, Vec<usize>)> {
        let n = self.layers[0].n_vars();
        let lap = OperatorFamily::<Rational>::classical(n);
        for (r, f) in self.layers.iter().enumerate() {
            let d = f.degree().unwrap_or(0);
            for ks in multisets(r, d) {
                let mut g = f.clone();
                for &k in &ks {
                    g = lap.member(k).unwrap().apply(&g).unwrap();
                }
                if !is_classically_harmonic(&g) {
                    return Err((r, ks));
                }
            }
        }
        Ok(())
    }
}

/// Outcome of [`QLayeredPolynomial::check_conditions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LayerConditions {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl LayerConditions {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c
    }
}

/// Weakly decreasing sequences of `r` positive integers with sum `<= total`.
fn multisets(r: usize, total: usize) -> Vec<Vec<usize>> {
    fn rec(r: usize, max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 0 {
            out.push(cur.clone());
            return;
        }
        for k in 1..=max.min(left) {
            cur.push(k);
            rec(r - 1, k, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, total, total, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn is_classically_harmonic(g: &QPoly) -> bool {
    let lap = OperatorFamily::<Rational>::classical(g.n_vars());
    let d = g.degree().unwrap_or(0);
    (1..=d).all(|k| lap.member(k).unwrap().apply(g).unwrap().is_zero())
}

/// Scale by a nonzero element of `Q(q)` so that all coefficients become
/// polynomials in `q` with no common factor; the leading coefficient of
/// their gcd is normalized to 1.
pub fn clear_denominators(f: &QqPoly) -> QqPoly {
    if f.is_zero() {
        return f.clone();
    }
    let mut l = Up::one();
    for (_, c) in f.terms() {
        let d = c.denom();
        l = l.mul(d).div_exact(&l.gcd(d)).unwrap();
    }
    let nums: Vec<Up> = f.terms().map(|(_, c)| c.numer().mul(&l.div_exact(c.denom()).unwrap())).collect();
    let g = nums.iter().skip(1).fold(nums[0].clone(), |acc, p| acc.gcd(p));
    let scale = QScalar::from_parts(l, g).unwrap();
    f.scale(&scale)
}

/// Split `f` by powers of `q`. Coefficients may have denominators that are
/// powers of `q` only.
pub fn q_layers(f: &QqPoly) -> Result<QLayeredPolynomial> {
    let n = f.n_vars();
    if f.is_zero() {
        return Err(Error::Precondition("zero polynomial has no layers".into()));
    }
    // Every denominator must be a power of q: den = q^s.
    let mut shift = i64::MAX;
    let mut items: Vec<(&Monomial, &Up, i64)> = Vec::new();
    for (m, c) in f.terms() {
        let den = c.denom();
        let s = den.degree().unwrap();
        if den.term_count() != 1 {
            return Err(Error::NonPolynomialQ(c.to_string()));
        }
        let v = c.numer().valuation().unwrap() as i64 - s as i64;
        shift = shift.min(v);
        items.push((m, c.numer(), s as i64));
    }
    let mut layers: Vec<QPoly> = Vec::new();
    for (m, num, s) in items {
        for (e, a) in num.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let i = (e as i64 - s - shift) as usize;
            while layers.len() <= i {
                layers.push(MultiPoly::zero(n));
            }
            layers[i] = &layers[i] + &MultiPoly::monomial(a.clone(), m.clone());
        }
    }
    Ok(QLayeredPolynomial { shift, layers })
}

/// Spans of first and last terms of all elements of a symbolic-`q` kernel.
#[derive(Clone, Debug)]
pub struct FirstLastSpans {
    pub first: HilbertSeries,
    pub last: HilbertSeries,
    pub first_bases: Vec<Vec<QPoly>>,
    pub last_bases: Vec<Vec<QPoly>>,
}

/// Per degree, bases of `span{FT(f)}` and `span{LT(f)}` over all `f` in
/// the kernel (not only the basis elements). Starting from a basis with
/// polynomial coefficients, a `Q`-linear relation among first terms gives a
/// combination divisible by `q`, which replaces one basis element; this is
/// repeated until the first terms are independent. Last terms are handled
/// the same way using `q`-degrees.
pub fn first_last_spans(kernel: &GradedKernel<QScalar>) -> Result<FirstLastSpans> {
    let n = kernel.n_vars();
    let mut first_bases = Vec::new();
    let mut last_bases = Vec::new();
    for d in 0..=kernel.degree_cap() {
        let basis: Vec<QqPoly> = kernel.basis(d).iter().map(clear_denominators).collect();
        let mons: Vec<Monomial> = {
            let mut v: Vec<Monomial> = basis.iter().flat_map(|b| b.terms().map(|(m, _)| m.clone())).collect();
            v.sort();
            v.dedup();
            v
        };
        let vecs: Vec<Vec<Up>> = basis
            .iter()
            .map(|b| mons.iter().map(|m| b.coeff(m).numer().clone()).collect())
            .collect();
        let to_poly = |v: &Vec<Rational>| {
            MultiPoly::from_terms(n, v.iter().zip(&mons).map(|(c, m)| (c.clone(), m.clone())))
        };
        first_bases.push(reduce_terms(vecs.clone(), End::First).iter().map(to_poly).collect());
        last_bases.push(reduce_terms(vecs, End::Last).iter().map(to_poly).collect());
    }
    let dims = |b: &Vec<Vec<QPoly>>| HilbertSeries::new(b.iter().map(|x| x.len()).collect(), false);
    Ok(FirstLastSpans { first: dims(&first_bases), last: dims(&last_bases), first_bases, last_bases })
}

#[derive(Clone, Copy, PartialEq)]
enum End {
    First,
    Last,
}

fn end_index(v: &[Up], end: End) -> usize {
    match end {
        End::First => v.iter().filter_map(|p| p.valuation()).min().unwrap(),
        End::Last => v.iter().filter_map(|p| p.degree()).max().unwrap(),
    }
}

fn end_vector(v: &[Up], end: End) -> Vec<Rational> {
    let e = end_index(v, end);
    v.iter().map(|p| p.coeff(e)).collect()
}

/// Reduce a `Q(q)`-independent family of polynomial vectors until its
/// first (or last) terms are `Q`-independent; returns those terms.
fn reduce_terms(mut vecs: Vec<Vec<Up>>, end: End) -> Vec<Vec<Rational>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let ncoord = vecs[0].len();
    loop {
        let ends: Vec<Vec<Rational>> = vecs.iter().map(|v| end_vector(v, end)).collect();
        // Relations c with sum_i c_i ends_i = 0: the nullspace of the
        // coordinate-by-element matrix.
        let mut ech = Echelon::new(vecs.len());
        for r in 0..ncoord {
            let row: Vec<Rational> = ends.iter().map(|e| e[r].clone()).collect();
            ech.insert(&row);
        }
        let rel = ech.nullspace();
        let Some(c) = rel.first() else {
            return ends;
        };
        let support: Vec<usize> = (0..c.len()).filter(|&i| !c[i].is_zero()).collect();
        // For first terms, divide each vector by its lowest power of q; the
        // relation then yields a combination with zero constant term. For last
        // terms, raise each to the top q-degree so the top terms cancel.
        let j = *support
            .iter()
            .max_by_key(|&&i| match end {
                End::First => (0, i),
                End::Last => (end_index(&vecs[i], end), i),
            })
            .unwrap();
        let top = end_index(&vecs[j], end);
        let mut new = vec![Up::zero(); ncoord];
        for &i in &support {
            let e = end_index(&vecs[i], end);
            for (x, p) in new.iter_mut().zip(&vecs[i]) {
                let aligned = match end {
                    End::First => p.unshift(e),
                    End::Last => p.shift(top - e),
                };
                *x = x.add(&aligned.scale(&c[i]));
            }
        }
        vecs[j] = new;
    }
}

/// Kernel dimensions of the symbolic `q`-Steenrod family versus `[n]!_t`
/// for degrees `d <= n`.
pub fn coefficient_equality(n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let fam = OperatorFamily::q_steenrod(n, QScalar::q());
    let k = super::solve_kernel(&fam, n, super::Mode::TwoGenerators)?;
    let fact = HilbertSeries::t_factorial(n);
    Ok((k.hilbert().coefficients().to_vec(), (0..=n).map(|d| fact.coeff(d)).collect()))
}
