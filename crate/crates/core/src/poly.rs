//! Sparse commutative polynomials in the chart variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::{Field, Scalar};

/// An exponent vector with trailing zeros removed, ordered graded-lex:
/// total degree first, then the exponent of `X1`, `X2`, ... with larger
/// exponents of earlier variables counting as larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Monomial {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(mut e: Vec<u32>) -> Monomial {
        while e.last() == Some(&0) {
            e.pop();
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::from_exponents((0..n).map(|i| self.exponent(i) + other.exponent(i)).collect())
    }

    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for i in 0..n {
                match self.exponent(i).cmp(&other.exponent(i)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(field: Field) -> Poly {
        Poly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Poly {
        Poly::term(c, Monomial::one())
    }

    pub fn one(field: Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn var(field: Field, i: usize) -> Poly {
        Poly::term(field.one(), Monomial::var(i))
    }

    pub fn term(c: Scalar, m: Monomial) -> Poly {
        let mut p = Poly::zero(c.field());
        p.add_term(m, c);
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-&self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.field);
        }
        Poly {
            field: self.field,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Evaluates at a point; `values[i]` is the value of `X_{i+1}`.
    pub fn eval(&self, values: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &values[i].pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.keys().flat_map(|m| m.variables().collect::<Vec<_>>()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The canonical associate: over `Q` the content is removed and the
    /// coefficient of the smallest monomial made positive; over `F_p` that
    /// coefficient is made 1.
    pub fn canonical(&self) -> Poly {
        let Some(lowest) = self.terms.values().next() else {
            return self.clone();
        };
        match self.field {
            Field::Prime(_) => self.scale(&lowest.inv().expect("nonzero")),
            Field::Rational => {
                let mut num_gcd = BigInt::zero();
                let mut den_lcm = BigInt::one();
                for c in self.terms.values() {
                    if let Scalar::Q(q) = c {
                        num_gcd = num_gcd.gcd(q.numer());
                        den_lcm = den_lcm.lcm(q.denom());
                    }
                }
                let mut factor = BigRational::new(den_lcm, num_gcd);
                if lowest.is_negative() {
                    factor = -factor;
                }
                self.scale(&Scalar::Q(factor))
            }
        }
    }

    pub fn display<'a>(&'a self, names: &'a dyn Fn(usize) -> String) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }

    /// Total order used to sort polynomial lists: degree, then terms from
    /// the largest monomial down.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let a = self.terms.iter().rev();
            let b = other.terms.iter().rev();
            a.cmp(b)
        })
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a dyn Fn(usize) -> String,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.poly.terms().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        (self.names)(v)
                    } else {
                        format!("{}^{e}", (self.names)(v))
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Default variable names `X1, X2, ...`.
pub fn x_name(i: usize) -> String {
    format!("X{}", i + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_display() {
        let f = Field::Rational;
        let x1 = Poly::var(f, 0);
        let x4 = Poly::var(f, 3);
        let p = x1.mul(&x4).scale(&f.from_i64(2)).sub(&Poly::constant(f.from_i64(2)));
        let c = p.canonical();
        assert_eq!(c.display(&x_name).to_string(), "1 - X1*X4");
        let g = Field::prime(3).unwrap();
        let q = Poly::var(g, 1).scale(&g.from_i64(2)).add(&Poly::var(g, 0).mul(&Poly::var(g, 0)));
        assert_eq!(q.canonical().display(&x_name).to_string(), "X2 - X1^2");
    }

    #[test]
    fn graded_lex() {
        let a = Monomial::from_exponents(vec![2]);
        let b = Monomial::from_exponents(vec![1, 1]);
        let c = Monomial::var(2);
        assert!(a > b);
        assert!(b > c);
        assert!(Monomial::one() < c);
    }

    #[test]
    fn evaluation() {
        let f = Field::prime(5).unwrap();
        let p = Poly::one(f).sub(&Poly::var(f, 0).mul(&Poly::var(f, 1)));
        assert!(p.eval(&[f.from_i64(2), f.from_i64(3)]).is_zero());
        assert_eq!(p.eval(&[f.from_i64(1), f.from_i64(1)]), f.zero());
        assert!(!p.eval(&[f.from_i64(1), f.from_i64(2)]).is_zero());
    }
}
