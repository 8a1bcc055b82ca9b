//! Diagonal harmonics: common zeros in `x1..xn, y1..yn` of the operators
//! `sum_i a_i dx_i^k dy_i^j` with `k + j > 0`, together with the apex
//! polynomial spanning the top degree of the x-only space.
//!
//! Polynomials live in `2n` variables, `x_i` at index `i` and `y_i` at
//! index `n + i`.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::kernel::{common_kernel, solve_kernel, Mode, CAP_LIMIT};
use crate::linalg::{bareiss, Echelon};
use crate::operator::{DiffOperator, FamilyKind, OperatorFamily};
use crate::poly::{binomial, monomials_of_degree, Monomial, MonomialBasis, MultiPoly, ParamPoly, QPoly};
use crate::regseq::subset_sum_regularity;
use crate::scalar::{Field, Rational, Ring};
use crate::symfunc::permutations;

/// Variable names `x1..xn, y1..yn` for `2n`-variable polynomials.
pub fn xy_name(n: usize) -> impl Fn(usize) -> String {
    move |i| if i < n { format!("x{}", i + 1) } else { format!("y{}", i - n + 1) }
}

/// `sum_i a_i dx_i^k dy_i^j`.
pub fn diagonal_operator<F: Field>(a: &[F], k: u16, j: u16) -> DiffOperator<F> {
    let n = a.len();
    a.iter().enumerate().fold(DiffOperator::zero(2 * n), |acc, (i, c)| {
        let mut d = Monomial::one(2 * n);
        d.set(i, k);
        d.set(n + i, j);
        acc.try_add(&DiffOperator::term(2 * n, c.clone(), Monomial::one(2 * n), d)).unwrap()
    })
}

/// `E_k = sum_i y_i dx_i^k`.
pub fn e_operator_xy<F: Field>(n: usize, k: u16) -> DiffOperator<F> {
    (0..n).fold(DiffOperator::zero(2 * n), |acc, i| {
        let mut d = Monomial::one(2 * n);
        d.set(i, k);
        acc.try_add(&DiffOperator::term(2 * n, F::one(), Monomial::var(2 * n, n + i), d)).unwrap()
    })
}

/// Monomials of x-degree `dx` and y-degree `dy`.
pub fn bidegree_basis(n: usize, dx: usize, dy: usize) -> MonomialBasis {
    let xs = monomials_of_degree(n, dx);
    let ys = monomials_of_degree(n, dy);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for x in &xs {
        for y in &ys {
            out.push(Monomial::new(x.exps().iter().chain(y.exps()).copied().collect()));
        }
    }
    MonomialBasis::new(out)
}

fn bidegree_of(m: &Monomial, n: usize) -> (usize, usize) {
    let e = m.exps();
    (e[..n].iter().map(|&v| v as usize).sum(), e[n..].iter().map(|&v| v as usize).sum())
}

/// Bigraded common kernel with bases per bidegree.
#[derive(Clone, Debug)]
pub struct BiGradedKernel<F: Ring> {
    n: usize,
    a: Vec<F>,
    cap: usize,
    bases: BTreeMap<(usize, usize), Vec<MultiPoly<F>>>,
    certified: bool,
}

impl<F: Field> BiGradedKernel<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parameters(&self) -> &[F] {
        &self.a
    }

    /// Largest total degree computed.
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Whether two consecutive antidiagonals vanished within the cap.
    pub fn certified(&self) -> bool {
        self.certified
    }

    pub fn basis(&self, dx: usize, dy: usize) -> &[MultiPoly<F>] {
        self.bases.get(&(dx, dy)).map_or(&[], |v| v.as_slice())
    }

    pub fn dim(&self, dx: usize, dy: usize) -> usize {
        self.basis(dx, dy).len()
    }

    pub fn total(&self) -> usize {
        self.bases.values().map(Vec::len).sum()
    }

    /// `table[dx][dy]` for `dx + dy <= cap`, zero elsewhere.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..=self.cap).map(|dx| (0..=self.cap).map(|dy| self.dim(dx, dy)).collect()).collect()
    }

    /// The table with all-zero trailing rows and columns removed.
    pub fn trimmed_table(&self) -> Vec<Vec<usize>> {
        let t = self.table();
        let rows = t.iter().rposition(|r| r.iter().any(|&c| c > 0)).map_or(0, |i| i + 1);
        let cols = (0..self.cap + 1).rposition(|j| t.iter().any(|r| r[j] > 0)).map_or(0, |j| j + 1);
        t.into_iter().take(rows).map(|r| r.into_iter().take(cols).collect()).collect()
    }

    pub fn swap_symmetric(&self) -> bool {
        let t = self.table();
        (0..t.len()).all(|i| (0..t.len()).all(|j| t[i][j] == t[j][i]))
    }

    /// The `dy = 0` row as a Hilbert series in `t`.
    pub fn x_only_series(&self) -> HilbertSeries {
        HilbertSeries::polynomial((0..=self.cap).map(|d| self.dim(d, 0)).collect())
    }

    /// Rows `dx`, columns `dy`.
    pub fn to_csv(&self) -> String {
        let t = self.trimmed_table();
        let cols = t.first().map_or(0, Vec::len);
        let mut s = String::from("dx");
        for j in 0..cols {
            s.push_str(&format!(",{j}"));
        }
        s.push('\n');
        for (i, row) in t.iter().enumerate() {
            s.push_str(&i.to_string());
            for c in row {
                s.push_str(&format!(",{c}"));
            }
            s.push('\n');
        }
        s
    }

    /// Whether `f`, bihomogeneous of bidegree `(dx, dy)`, lies in the kernel.
    pub fn contains(&self, dx: usize, dy: usize, f: &MultiPoly<F>) -> bool {
        if f.is_zero() {
            return true;
        }
        if dx + dy > self.cap {
            return false;
        }
        let basis = bidegree_basis(self.n, dx, dy);
        let mut ech = Echelon::new(basis.len());
        for b in self.basis(dx, dy) {
            ech.insert(&to_vector(&basis, b));
        }
        match try_vector(&basis, f) {
            Some(v) => ech.contains(&v),
            None => false,
        }
    }
}

fn try_vector<F: Field>(basis: &MonomialBasis, p: &MultiPoly<F>) -> Option<Vec<F>> {
    let mut v = vec![F::zero(); basis.len()];
    for (m, c) in p.terms() {
        v[basis.index_of(m)?] = c.clone();
    }
    Some(v)
}

fn to_vector<F: Field>(basis: &MonomialBasis, p: &MultiPoly<F>) -> Vec<F> {
    try_vector(basis, p).expect("polynomial outside the bidegree basis")
}

/// `(d_x, d_y)`.
type Bidegree = (usize, usize);

/// Solve antidiagonal by antidiagonal up to total degree `cap`, stopping
/// once two consecutive antidiagonals are zero.
pub fn solve_diagonal<F: Field>(a: &[F], cap: usize) -> Result<BiGradedKernel<F>> {
    if a.is_empty() {
        return Err(Error::InvalidParameters("need at least one coefficient".into()));
    }
    if cap > CAP_LIMIT {
        return Err(Error::CapOverflow { cap, limit: CAP_LIMIT });
    }
    let n = a.len();
    let mut bases = BTreeMap::new();
    let mut zeros = 0;
    let mut last = 0;
    for s in 0..=cap {
        last = s;
        let layer: Vec<(Bidegree, Vec<MultiPoly<F>>)> = (0..=s)
            .into_par_iter()
            .map(|dx| {
                let dy = s - dx;
                let mut ops = Vec::new();
                for k in 0..=dx {
                    for j in 0..=dy {
                        if k + j > 0 {
                            ops.push(diagonal_operator(a, k as u16, j as u16));
                        }
                    }
                }
                ((dx, dy), common_kernel(&bidegree_basis(n, dx, dy), &ops))
            })
            .collect();
        let empty = layer.iter().all(|(_, b)| b.is_empty());
        for (key, b) in layer {
            if !b.is_empty() {
                bases.insert(key, b);
            }
        }
        zeros = if empty { zeros + 1 } else { 0 };
        if zeros == 2 {
            break;
        }
    }
    Ok(BiGradedKernel { n, a: a.to_vec(), cap: last, bases, certified: zeros == 2 })
}

/// Generator of the top degree `C(n, 2)` of the common kernel of
/// `sum_i a_i d_i^k`, `k >= 1`.
#[derive(Clone, Debug, Serialize)]
pub struct ApexPolynomial {
    pub n: usize,
    pub a: Vec<String>,
    #[serde(serialize_with = "serialize_poly")]
    pub poly: QPoly,
}

fn serialize_poly<S: serde::Serializer>(p: &QPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.render())
}

/// `x1^{n-1} x2^{n-2} ... x_{n-1}`.
pub fn staircase(n: usize) -> Monomial {
    Monomial::new((0..n).map(|i| (n - 1 - i) as u16).collect())
}

/// Scaling of the staircase coefficient: `prod_{j<n} j / (a_1 + ... + a_j)`.
/// Equal to one at `a = (1, ..., 1)`.
pub fn apex_normalization(a: &[Rational]) -> Result<Rational> {
    let mut acc = Rational::one();
    let mut partial = Rational::zero();
    for (j, c) in a.iter().enumerate().take(a.len().saturating_sub(1)) {
        partial = partial.add(c);
        let q = Rational::from((j + 1) as i64).div(&partial).ok_or_else(|| Error::Pole("a_1 + ... + a_j = 0".into()))?;
        acc = acc.mul(&q);
    }
    Ok(acc)
}

fn x_power_sum_ops<F: Ring>(a: &[F], k_max: usize) -> Vec<DiffOperator<F>> {
    let n = a.len();
    (1..=k_max)
        .map(|k| {
            a.iter().enumerate().fold(DiffOperator::zero(n), |acc, (i, c)| {
                acc.try_add(&DiffOperator::partial(n, i, k as u16).scale(c)).unwrap()
            })
        })
        .collect()
}

/// The apex polynomial for rational `a` with nonzero subset sums.
pub fn apex_polynomial(a: &[Rational]) -> Result<ApexPolynomial> {
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidParameters("need at least one coefficient".into()));
    }
    if let (false, Some(w)) = subset_sum_regularity(a) {
        return Err(Error::Precondition(format!("subset {w:?} of the coefficients sums to zero")));
    }
    let top = binomial(n, 2);
    let kernel = common_kernel(&MonomialBasis::of_degree(n, top), &x_power_sum_ops(a, top.max(1)));
    if kernel.len() != 1 {
        return Err(Error::Precondition(format!("top component has dimension {}", kernel.len())));
    }
    let g = &kernel[0];
    let lead = g.coeff(&staircase(n));
    if lead.is_zero() {
        return Err(Error::Precondition("staircase coefficient vanishes".into()));
    }
    let poly = g.scale(&apex_normalization(a)?.div(&lead).unwrap());
    Ok(ApexPolynomial { n, a: a.iter().map(|c| c.to_string()).collect(), poly })
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(n: usize) -> QPoly {
    let mut out = MultiPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            out = &out * &(&MultiPoly::var(n, i) - &MultiPoly::var(n, j));
        }
    }
    out
}

fn pp(c: i64) -> ParamPoly {
    ParamPoly::constant(Rational::from(c))
}

fn a(i: usize) -> ParamPoly {
    ParamPoly::param(i)
}

fn pair(i: usize, j: usize) -> ParamPoly {
    a(i).add(&a(j))
}

fn product(fs: &[ParamPoly]) -> ParamPoly {
    fs.iter().fold(ParamPoly::one(), |acc, f| acc.mul(f))
}

/// `3 a1 a2 a3 (a1+a2)(a1+a3)(a2+a3)`, a common denominator for the
/// symbolic apex at `n = 3`. Symmetric in the parameters.
pub fn apex_three_denominator() -> ParamPoly {
    product(&[pp(3), a(0), a(1), a(2), pair(0, 1), pair(0, 2), pair(1, 2)])
}

/// Multiply `num / den_factors` by [`apex_three_denominator`]; the factors
/// must be drawn from it.
fn cleared(num: ParamPoly, den: &[&str]) -> ParamPoly {
    let factors = [("3", pp(3)), ("a1", a(0)), ("a2", a(1)), ("a3", a(2)), ("a12", pair(0, 1)), ("a13", pair(0, 2)), ("a23", pair(1, 2))];
    let rest: Vec<ParamPoly> = factors.iter().filter(|(k, _)| !den.contains(k)).map(|(_, f)| f.clone()).collect();
    num.mul(&product(&rest))
}

fn m3(e: [u16; 3]) -> Monomial {
    Monomial::new(e.to_vec())
}

/// The closed form of the apex at `n = 3` for symbolic `a`, multiplied by
/// [`apex_three_denominator`].
pub fn apex_three_closed_form() -> MultiPoly<ParamPoly> {
    let two = pp(2);
    let terms = vec![
        (cleared(two.clone(), &["a1", "a12"]), m3([2, 1, 0])),
        (cleared(two.neg(), &["a1", "a13"]), m3([2, 0, 1])),
        (cleared(two.neg(), &["a2", "a12"]), m3([1, 2, 0])),
        (cleared(two.clone(), &["a2", "a23"]), m3([0, 2, 1])),
        (cleared(two.clone(), &["a3", "a13"]), m3([1, 0, 2])),
        (cleared(two.neg(), &["a3", "a23"]), m3([0, 1, 2])),
        (cleared(two.mul(&a(2).sub(&a(1))), &["3", "a1", "a12", "a13"]), m3([3, 0, 0])),
        (cleared(two.mul(&a(0).sub(&a(2))), &["3", "a2", "a12", "a23"]), m3([0, 3, 0])),
        (cleared(two.mul(&a(1).sub(&a(0))), &["3", "a3", "a13", "a23"]), m3([0, 0, 3])),
    ];
    MultiPoly::from_terms(3, terms)
}

/// The two-term seed whose antisymmetrization gives the apex at `n = 3`,
/// multiplied by [`apex_three_denominator`].
pub fn apex_three_seed() -> MultiPoly<ParamPoly> {
    MultiPoly::from_terms(
        3,
        vec![
            (cleared(pp(2), &["a1", "a12"]), m3([2, 1, 0])),
            (cleared(a(2).sub(&a(1)), &["3", "a1", "a12", "a13"]), m3([3, 0, 0])),
        ],
    )
}

/// A kernel vector of the top component at `n = 3` over `Q[a1, a2, a3]`,
/// from signed maximal minors.
pub fn apex_three_symbolic() -> Result<MultiPoly<ParamPoly>> {
    let n = 3;
    let basis = MonomialBasis::of_degree(n, 3);
    let ops = x_power_sum_ops(&[a(0), a(1), a(2)], 3);
    let mut rows: BTreeMap<(usize, Monomial), Vec<ParamPoly>> = BTreeMap::new();
    for (j, m) in basis.monomials().iter().enumerate() {
        for (o, op) in ops.iter().enumerate() {
            for (t, c) in op.apply_monomial(m).terms() {
                rows.entry((o, t.clone())).or_insert_with(|| vec![ParamPoly::zero(); basis.len()])[j] = c.clone();
            }
        }
    }
    let rows: Vec<Vec<ParamPoly>> = rows.into_values().collect();
    // Independent rows, chosen at a point with nonzero subset sums.
    let point = [Rational::from(1), Rational::from(2), Rational::from(5)];
    let mut ech = Echelon::new(basis.len());
    let mut chosen = Vec::new();
    for r in &rows {
        if ech.insert(&r.iter().map(|c| c.eval(&point)).collect::<Vec<_>>()) {
            chosen.push(r.clone());
        }
    }
    if chosen.len() + 1 != basis.len() {
        return Err(Error::Precondition(format!("rank {} at the sample point", chosen.len())));
    }
    let mut terms = Vec::new();
    for j in 0..basis.len() {
        let minor: Vec<Vec<ParamPoly>> = chosen
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let det = bareiss(&minor).1.unwrap();
        let det = if j % 2 == 0 { det } else { det.neg() };
        terms.push((det, basis.monomial(j).clone()));
    }
    Ok(MultiPoly::from_terms(n, terms))
}

/// `sum_sigma sign(sigma) sigma`, acting on the variables and the
/// parameters simultaneously.
pub fn antisymmetrize(f: &MultiPoly<ParamPoly>) -> MultiPoly<ParamPoly> {
    let n = f.n_vars();
    let mut out = MultiPoly::zero(n);
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let g = f.permute(p).map_coeffs(|c| c.permute(p));
        let g = if sign(p) { g } else { g.scale(&pp(-1)) };
        out = &out + &g;
    });
    out
}

/// Whether the permutation is even.
fn sign(p: &[usize]) -> bool {
    let inv = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inv % 2 == 0
}

/// Squares the antisymmetrizer in the group algebra of `S_n` and returns the
/// scalar `c` with `R^2 = c R`, if the square is proportional.
pub fn antisymmetrizer_square(n: usize) -> Option<i64> {
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    permutations(&mut p, 0, &mut |q| perms.push(q.to_vec()));
    let mut sq: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for s in &perms {
        for t in &perms {
            let st: Vec<usize> = (0..n).map(|i| s[t[i]]).collect();
            let c = if sign(s) == sign(t) { 1 } else { -1 };
            *sq.entry(st).or_default() += c;
        }
    }
    let id: Vec<usize> = (0..n).collect();
    let c = sq[&id];
    perms.iter().all(|q| sq[q] == if sign(q) { c } else { -c }).then_some(c)
}

/// Outcome of the symbolic checks on the apex at `n = 3`.
#[derive(Clone, Debug, Serialize)]
pub struct ApexThreeReport {
    /// The minors kernel vector is proportional to the closed form.
    pub matches_closed_form: bool,
    /// The closed form is killed by `sum a_i d_i^k`, `k = 1, 2, 3`.
    pub annihilated: bool,
    /// Setting `a = (1, 1, 1)` gives the Vandermonde.
    pub vandermonde: bool,
    /// Antisymmetrizing the seed gives the closed form.
    pub antisymmetrizer: bool,
    /// The antisymmetrizer of a symmetric polynomial vanishes.
    pub kills_symmetric: bool,
    /// `R^2 = 6 R`.
    pub square: bool,
}

impl ApexThreeReport {
    pub fn passed(&self) -> bool {
        self.matches_closed_form && self.annihilated && self.vandermonde && self.antisymmetrizer && self.kills_symmetric && self.square
    }
}

/// Check the closed form of the apex at `n = 3`: proportionality to the
/// kernel vector by cross-multiplication, annihilation, the Vandermonde
/// specialization and the antisymmetrizer identity.
pub fn apex_three_check() -> Result<ApexThreeReport> {
    let closed = apex_three_closed_form();
    let computed = apex_three_symbolic()?;
    let s = staircase(3);
    let (cs, ks) = (closed.coeff(&s), computed.coeff(&s));
    let basis = MonomialBasis::of_degree(3, 3);
    let matches_closed_form = !ks.is_zero()
        && basis.monomials().iter().all(|m| computed.coeff(m).mul(&cs) == closed.coeff(m).mul(&ks));
    let ops = x_power_sum_ops(&[a(0), a(1), a(2)], 3);
    let annihilated = ops.iter().all(|op| op.apply(&closed).is_ok_and(|r| r.is_zero()));
    let ones = [Rational::one(), Rational::one(), Rational::one()];
    let at_ones = closed.map_coeffs(|c| c.eval(&ones));
    let l = apex_three_denominator().eval(&ones);
    let vandermonde = at_ones == vandermonde(3).scale(&l);
    let antisymmetrizer = antisymmetrize(&apex_three_seed()) == closed;
    let sum_a = a(0).add(&a(1)).add(&a(2));
    let p2 = MultiPoly::from_terms(3, (0..3).map(|i| (sum_a.clone(), Monomial::new((0..3).map(|j| if i == j { 2 } else { 0 }).collect()))));
    let e3 = MultiPoly::monomial(pp(1), m3([1, 1, 1]));
    let kills_symmetric = antisymmetrize(&p2).is_zero() && antisymmetrize(&e3).is_zero();
    Ok(ApexThreeReport {
        matches_closed_form,
        annihilated,
        vandermonde,
        antisymmetrizer,
        kills_symmetric,
        square: antisymmetrizer_square(3) == Some(6),
    })
}

/// Closure data for the E-operators on a diagonal kernel.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    /// `E_k` maps every computed basis element into the kernel.
    pub e_closed: bool,
    /// Every first partial of a basis element lies in the kernel.
    pub partial_closed: bool,
    /// Dimension of the smallest space containing the apex and closed under
    /// partials and the `E_k`.
    pub closure_dim: usize,
    /// Every element of that closure lies in the kernel.
    pub closure_contained: bool,
    pub kernel_dim: usize,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.e_closed && self.partial_closed && self.closure_contained
    }
}

fn xy_ops(n: usize, max_k: usize) -> Vec<DiffOperator<Rational>> {
    let mut ops: Vec<DiffOperator<Rational>> = (0..2 * n).map(|i| DiffOperator::partial(2 * n, i, 1)).collect();
    ops.extend((1..=max_k).map(|k| e_operator_xy(n, k as u16)));
    ops
}

/// Verify E- and partial-closure of the diagonal kernel and compute the
/// closure of the apex polynomial.
pub fn ek_closure_check(a: &[Rational], cap: usize) -> Result<ClosureReport> {
    let n = a.len();
    let kernel = solve_diagonal(a, cap)?;
    let ops = xy_ops(n, kernel.cap());
    let mut e_closed = true;
    let mut partial_closed = true;
    for basis in kernel.bases.values() {
        for f in basis {
            for (o, op) in ops.iter().enumerate() {
                let g = op.apply(f)?;
                let Some((m, _)) = g.leading_term() else { continue };
                let (gx, gy) = bidegree_of(m, n);
                if !kernel.contains(gx, gy, &g) {
                    if o < 2 * n {
                        partial_closed = false;
                    } else {
                        e_closed = false;
                    }
                }
            }
        }
    }
    let apex = apex_polynomial(a)?.poly.embed(2 * n, &(0..n).collect::<Vec<_>>());
    let mut spans: BTreeMap<(usize, usize), (MonomialBasis, Echelon<Rational>)> = BTreeMap::new();
    let mut queue = VecDeque::from([apex]);
    let mut closure_contained = true;
    while let Some(f) = queue.pop_front() {
        let Some((m, _)) = f.leading_term() else { continue };
        let (dx, dy) = bidegree_of(m, n);
        let (basis, ech) = spans.entry((dx, dy)).or_insert_with(|| {
            let b = bidegree_basis(n, dx, dy);
            let e = Echelon::new(b.len());
            (b, e)
        });
        if !ech.insert(&to_vector(basis, &f)) {
            continue;
        }
        closure_contained &= kernel.contains(dx, dy, &f);
        for op in &ops {
            let g = op.apply(&f)?;
            if !g.is_zero() {
                queue.push_back(g);
            }
        }
    }
    Ok(ClosureReport {
        e_closed,
        partial_closed,
        closure_dim: spans.values().map(|(_, e)| e.rank()).sum(),
        closure_contained,
        kernel_dim: kernel.total(),
    })
}

/// Dimensions of the common kernel of two general operators
/// `D_1 = sum a_i x_i d_i^2 + b_i d_i` and `D_2 = sum c_i x_i d_i^3 + d_i d_i^2`.
#[derive(Clone, Debug, Serialize)]
pub struct TwoOperatorReport {
    pub hilbert: HilbertSeries,
    pub total: usize,
    pub factorial: usize,
    pub reaches_factorial: bool,
    /// First degree from which the kernel vanishes up to the cap.
    pub vanishes_from: Option<usize>,
}

pub fn general_d1_d2_dimension(
    a: &[Rational],
    b: &[Rational],
    c: &[Rational],
    d: &[Rational],
    cap: usize,
) -> Result<TwoOperatorReport> {
    let n = a.len();
    let family = OperatorFamily::new(
        n,
        FamilyKind::General { a: vec![a.to_vec(), c.to_vec()], b: vec![b.to_vec(), d.to_vec()] },
    )?;
    let kernel = solve_kernel(&family, cap, Mode::All)?;
    let hilbert = kernel.hilbert().clone();
    let coeffs = hilbert.coefficients();
    let vanishes_from = (0..coeffs.len()).find(|&i| coeffs[i..].iter().all(|&x| x == 0));
    let factorial = (1..=n).product();
    Ok(TwoOperatorReport { total: hilbert.total(), factorial, reaches_factorial: hilbert.total() == factorial, vanishes_from, hilbert })
}
