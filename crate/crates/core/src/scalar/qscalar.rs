use std::fmt;

use super::{Field, Rational, Ring, UniPoly};
use crate::error::Error;

type QPoly = UniPoly<Rational>;

/// An element of `Q(q)`: a reduced fraction of polynomials in `q` with a
/// monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: QPoly,
    den: QPoly,
}

impl QScalar {
    /// The symbolic parameter `q`.
    pub fn q() -> Self {
        Self::from_poly(QPoly::var())
    }

    pub fn from_poly(p: QPoly) -> Self {
        QScalar { num: p, den: QPoly::one() }
    }

    /// Build `num / den` and bring it to canonical form.
    pub fn from_parts(num: QPoly, den: QPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            QScalar { num, den }
        } else {
            let inv = lead.inv().unwrap();
            QScalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Specialize `q := q0`.
    pub fn evaluate(&self, q0: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(format!("{self} has a pole at q = {q0}")));
        }
        Ok(self.num.eval(q0).div(&d).unwrap())
    }
}

impl Ring for QScalar {
    fn zero() -> Self {
        QScalar { num: QPoly::zero(), den: QPoly::one() }
    }

    fn one() -> Self {
        QScalar { num: QPoly::one(), den: QPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Self::from_poly(self.num.add(&rhs.num));
            }
            return Self::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::reduce(num, self.den.mul(&rhs.den))
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        // Cross-cancel before multiplying; both inputs are already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = rhs.den.div_rem(&g1).0;
        let n2 = rhs.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lead = den.leading().unwrap().clone();
        let inv = lead.inv().unwrap();
        QScalar { num: num.scale(&inv), den: den.scale(&inv) }
    }

    fn neg(&self) -> Self {
        QScalar { num: self.num.neg(), den: self.den.clone() }
    }

    fn from_rational(r: &Rational) -> Self {
        Self::from_poly(QPoly::constant(r.clone()))
    }

    fn complexity(&self) -> usize {
        self.num.complexity() + self.den.complexity() - 1
    }

    fn as_rational(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }
}

impl Field for QScalar {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let lead = self.num.leading().unwrap().inv().unwrap();
        Some(QScalar { num: self.den.scale(&lead), den: self.num.scale(&lead) })
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.den.is_one() && rhs.den.is_one() {
            if let Some(q) = self.num.div_exact(&rhs.num) {
                return Some(Self::from_poly(q));
            }
        }
        Some(self.mul(&rhs.inv().unwrap()))
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let paren = |p: &QPoly| {
            if p.term_count() > 1 {
                format!("({})", p.render("q"))
            } else {
                p.render("q")
            }
        };
        if self.den.is_one() {
            write!(f, "{}", paren(&self.num))
        } else {
            write!(f, "({})/({})", self.num.render("q"), self.den.render("q"))
        }
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
