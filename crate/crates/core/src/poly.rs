//! Sparse bivariate polynomials over the rationals.
//!
//! A [`BiPoly`] is a finite map from [`Monomial`] (`y^i x^j`) to a nonzero
//! [`Rational`]. Monomials are ordered y-exponent major, x-exponent minor,
//! which is the order used everywhere a basis has to be enumerated.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// `y^y x^x`. Field order matters: the derived `Ord` is y-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub y: u32,
    pub x: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { y: 0, x: 0 };

    pub fn new(y: u32, x: u32) -> Self {
        Monomial { y, x }
    }

    pub fn total_degree(&self) -> u32 {
        self.x + self.y
    }

    pub fn weight(&self, wx: i64, wy: i64) -> i64 {
        wx * self.x as i64 + wy * self.y as i64
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.y + other.y, self.x + other.x)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.x {
            0 => {}
            1 => parts.push("x".to_string()),
            e => parts.push(format!("x^{e}")),
        }
        match self.y {
            0 => {}
            1 => parts.push("y".to_string()),
            e => parts.push(format!("y^{e}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Total degree of a polynomial. The zero polynomial has degree
/// [`Degree::NegInfinity`], which sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::term(c, Monomial::ONE)
    }

    pub fn x() -> Self {
        BiPoly::monomial(0, 1)
    }

    pub fn y() -> Self {
        BiPoly::monomial(1, 0)
    }

    /// The monomial `y^y_exp x^x_exp` with coefficient one.
    pub fn monomial(y_exp: u32, x_exp: u32) -> Self {
        BiPoly::term(Rational::one(), Monomial::new(y_exp, x_exp))
    }

    pub fn y_pow(k: u32) -> Self {
        BiPoly::monomial(k, 0)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = BiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The single term of a monomial-times-scalar, if that is what `self` is.
    pub fn as_term(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Highest power of `y` occurring, `None` for zero.
    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.y).max()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.x > 0)
                .map(|(m, c)| (Monomial::new(m.y, m.x - 1), c * int(m.x as i64))),
        )
    }

    pub fn partial_y(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.y > 0)
                .map(|(m, c)| (Monomial::new(m.y - 1, m.x), c * int(m.y as i64))),
        )
    }

    /// `y * d/dy`, diagonal on monomials with eigenvalue the y-exponent.
    pub fn euler_y(&self) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, c * int(m.y as i64))))
    }

    /// Antiderivative in `x` with zero integration constant.
    pub fn antiderivative_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y, m.x + 1), c / int(m.x as i64 + 1))),
        )
    }

    /// Antiderivative in `y` with zero integration constant.
    pub fn antiderivative_y(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y + 1, m.x), c / int(m.y as i64 + 1))),
        )
    }

    pub fn is_divisible_by_y_power(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.y >= k)
    }

    /// Exact division by `y^k`, `None` if some term has a lower y-power.
    pub fn div_y_power(&self, k: u32) -> Option<BiPoly> {
        if !self.is_divisible_by_y_power(k) {
            return None;
        }
        Some(BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y - k, m.x), c.clone()))
                .collect(),
        })
    }

    /// Splits `p = sum_{i<n-1} y^i low[i](x) + high` with `y^(n-1) | high`.
    pub fn y_adic_split(&self, n: u32) -> Result<YAdicSplit> {
        if n < 2 {
            return Err(Error::InvalidN(n));
        }
        let mut low = vec![BiPoly::zero(); (n - 1) as usize];
        let mut high = BiPoly::zero();
        for (m, c) in &self.terms {
            if m.y < n - 1 {
                low[m.y as usize].add_term(Monomial::new(0, m.x), c.clone());
            } else {
                high.add_term(*m, c.clone());
            }
        }
        Ok(YAdicSplit { low, high })
    }

    /// Decomposes into weighted-homogeneous components, keyed by weight.
    pub fn weight_components(&self, wx: i64, wy: i64) -> BTreeMap<i64, BiPoly> {
        let mut out: BTreeMap<i64, BiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight(wx, wy))
                .or_default()
                .add_term(*m, c.clone());
        }
        out
    }

    /// The common weight of all terms; `None` for zero or mixed weights.
    pub fn is_homogeneous(&self, wx: i64, wy: i64) -> Option<i64> {
        let mut weights = self.terms.keys().map(|m| m.weight(wx, wy));
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// Total-degree homogeneity, the grading used by the cohomology engine.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        self.is_homogeneous(1, 1)
    }
}

/// `p = sum_i y^i * low[i] + high`, where each `low[i]` only involves `x`
/// and `high` is divisible by `y^(n-1)` (stored undivided).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YAdicSplit {
    pub low: Vec<BiPoly>,
    pub high: BiPoly,
}

impl YAdicSplit {
    pub fn reassemble(&self) -> BiPoly {
        let mut acc = self.high.clone();
        for (i, part) in self.low.iter().enumerate() {
            acc += &part.mul_monomial(&Monomial::new(i as u32, 0));
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisConstraint {
    All,
    /// y-exponent at most k.
    YExpLe(u32),
    /// y-exponent at least k.
    YExpGe(u32),
}

/// Monomials of total degree `w` satisfying `constraint`, y-exponent
/// ascending. Empty for negative `w`.
pub fn monomial_basis(w: i64, constraint: BasisConstraint) -> Vec<Monomial> {
    if w < 0 {
        return Vec::new();
    }
    let w = w as u32;
    (0..=w)
        .filter(|&i| match constraint {
            BasisConstraint::All => true,
            BasisConstraint::YExpLe(k) => i <= k,
            BasisConstraint::YExpGe(k) => i >= k,
        })
        .map(|i| Monomial::new(i, w - i))
        .collect()
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// Renders in the textual grammar accepted by the CLI parser, highest total
/// degree first.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| (b.total_degree(), b.x).cmp(&(a.total_degree(), a.x)));
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: BiPoly) -> BiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: &BiPoly) -> BiPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: BiPoly) -> BiPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> BiPoly {
        BiPoly::x()
    }
    fn y() -> BiPoly {
        BiPoly::y()
    }

    #[test]
    fn additive_inverse() {
        assert!((x() - x()).is_zero());
        assert!((&x() + &(-x())).is_zero());
    }

    #[test]
    fn monomial_product() {
        assert_eq!(&y() * &BiPoly::y_pow(2), BiPoly::y_pow(3));
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (x() + y()) * (x() - y());
        assert_eq!(lhs, x().pow(2) - y().pow(2));
    }

    #[test]
    fn derivatives() {
        let x2y = BiPoly::monomial(1, 2);
        assert_eq!(x2y.partial_x(), BiPoly::monomial(1, 1).scale(&int(2)));
        assert_eq!(BiPoly::y_pow(3).euler_y(), BiPoly::y_pow(3).scale(&int(3)));
        // x^2 + 2xy^2 -> 4xy^2
        let p = x().pow(2) + BiPoly::monomial(2, 1).scale(&int(2));
        assert_eq!(p.euler_y(), BiPoly::monomial(2, 1).scale(&int(4)));
    }

    #[test]
    fn antiderivatives() {
        assert_eq!(BiPoly::one().antiderivative_x(), x());
        assert_eq!(
            BiPoly::monomial(1, 2).antiderivative_x(),
            BiPoly::monomial(1, 3).scale(&rat(1, 3))
        );
        let p = BiPoly::y_pow(2).scale(&int(3));
        assert_eq!(p.antiderivative_y(), BiPoly::y_pow(3));
        assert_eq!(p.antiderivative_y().partial_y(), p);
    }

    #[test]
    fn y_adic_examples() {
        let p = BiPoly::one() + y() + BiPoly::y_pow(3);
        let s = p.y_adic_split(2).unwrap();
        assert_eq!(s.low, vec![BiPoly::one()]);
        assert_eq!(s.high, y() + BiPoly::y_pow(3));
        assert_eq!(s.reassemble(), p);

        let s = BiPoly::zero().y_adic_split(4).unwrap();
        assert_eq!(s.low, vec![BiPoly::zero(); 3]);
        assert!(s.high.is_zero());

        let s = BiPoly::monomial(2, 1).y_adic_split(2).unwrap();
        assert_eq!(s.low, vec![BiPoly::zero()]);
        assert_eq!(s.high, BiPoly::monomial(2, 1));
        assert!(s.high.is_divisible_by_y_power(1));

        assert!(matches!(p.y_adic_split(1), Err(Error::InvalidN(1))));
    }

    #[test]
    fn y_adic_low_parts_are_univariate() {
        let p = BiPoly::monomial(1, 3) + BiPoly::monomial(0, 2) + BiPoly::monomial(4, 1);
        let s = p.y_adic_split(3).unwrap();
        assert_eq!(s.low[0], BiPoly::monomial(0, 2));
        assert_eq!(s.low[1], BiPoly::monomial(0, 3));
        assert_eq!(s.high, BiPoly::monomial(4, 1));
    }

    #[test]
    fn weights_and_homogeneity() {
        let p = x().pow(2) + &x() * &y() + BiPoly::one();
        let comps = p.weight_components(1, 1);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&0], BiPoly::one());
        assert_eq!(comps[&2], x().pow(2) + &x() * &y());

        assert_eq!(BiPoly::y_pow(5).is_homogeneous(1, 1), Some(5));
        assert_eq!((x() + y().pow(2)).is_homogeneous(1, 1), None);
        // x + y^2 is homogeneous once x carries weight 2.
        assert_eq!((x() + y().pow(2)).is_homogeneous(2, 1), Some(2));
        assert_eq!(BiPoly::zero().is_homogeneous(1, 1), None);
    }

    #[test]
    fn basis_enumeration() {
        assert_eq!(
            monomial_basis(2, BasisConstraint::All),
            vec![
                Monomial::new(0, 2),
                Monomial::new(1, 1),
                Monomial::new(2, 0)
            ]
        );
        assert_eq!(
            monomial_basis(1, BasisConstraint::YExpLe(0)),
            vec![Monomial::new(0, 1)]
        );
        assert_eq!(
            monomial_basis(3, BasisConstraint::YExpGe(2)),
            vec![Monomial::new(2, 1), Monomial::new(3, 0)]
        );
        assert!(monomial_basis(-1, BasisConstraint::All).is_empty());
    }

    #[test]
    fn zero_degree_is_sentinel() {
        assert_eq!(BiPoly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(BiPoly::monomial(2, 3).degree(), Degree::Finite(5));
    }

    #[test]
    fn display_is_stable() {
        let p = BiPoly::monomial(1, 2).scale(&rat(3, 2)) - BiPoly::one();
        assert_eq!(p.to_string(), "3/2*x^2*y - 1");
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!((-x()).to_string(), "-x");
    }
}
