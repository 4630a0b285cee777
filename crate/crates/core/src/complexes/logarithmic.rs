use crate::error::{Error, Result};
use crate::log_geometry::LogDerivation;
use crate::poly::{int, BiPoly};

use super::{CochainComplex, ComplexSpec, VariantKind};

/// Logarithmic complex of `π = y^n ∂x∧∂y` in the `(δ¹, δ²)` coordinates:
///
/// - `d¹(a) = (y^n ∂y a, −y^(n-1) ∂x a)`
/// - `d²(a¹, a²) = y^(n-1)(∂x a¹ + y∂y a²) − (n−1) y^(n-1) a²`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Logarithmic {
    pub n: u32,
}

impl Logarithmic {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidN(n));
        }
        Ok(Logarithmic { n })
    }

    /// `∂¹(f¹, f²) = f¹δ¹ + f²δ²`.
    pub fn as_derivation(&self, pair: &[BiPoly; 2]) -> LogDerivation {
        LogDerivation::new(pair[0].clone(), pair[1].clone(), self.n)
    }

    pub fn from_derivation(d: &LogDerivation) -> [BiPoly; 2] {
        [d.a.clone(), d.b.clone()]
    }

    /// `d¹(a) = y^(n-1)((δ²a)·δ¹ − (δ¹a)·δ²)`, assembled from the basis
    /// derivations rather than from coordinates.
    pub fn d1_derivation(&self, f: &BiPoly) -> LogDerivation {
        let n = self.n;
        let yn1 = BiPoly::y_pow(n - 1);
        let delta1 = LogDerivation::basis(1, n);
        let delta2 = LogDerivation::basis(2, n);
        LogDerivation::new(&yn1 * &delta2.apply(f), -(&yn1 * &delta1.apply(f)), n)
    }
}

impl CochainComplex for Logarithmic {
    fn kind(&self) -> VariantKind {
        VariantKind::Logarithmic
    }

    fn spec(&self) -> ComplexSpec {
        ComplexSpec::Logarithmic { n: self.n }
    }

    fn d1(&self, f: &BiPoly) -> [BiPoly; 2] {
        let n = self.n;
        [
            &BiPoly::y_pow(n) * &f.partial_y(),
            -(&BiPoly::y_pow(n - 1) * &f.partial_x()),
        ]
    }

    fn d2(&self, a: &[BiPoly; 2]) -> BiPoly {
        let n = self.n;
        let inner = &(&a[0].partial_x() + &a[1].euler_y()) - &a[1].scale(&int(n as i64 - 1));
        &BiPoly::y_pow(n - 1) * &inner
    }

    fn weight_shift(&self) -> Result<i64> {
        Ok(self.n as i64 - 2)
    }

    fn y_power(&self) -> Option<u32> {
        Some(self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn x() -> BiPoly {
        BiPoly::x()
    }
    fn y() -> BiPoly {
        BiPoly::y()
    }

    #[test]
    fn d1_examples() {
        let c = Logarithmic::new(2).unwrap();
        assert_eq!(c.d1(&x()), [BiPoly::zero(), -y()]);
        let [a, b] = c.d1(&BiPoly::constant(int(5)));
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn d2_examples() {
        let c2 = Logarithmic::new(2).unwrap();
        assert!(c2.d2(&[BiPoly::zero(), y()]).is_zero());
        assert!(c2.d2(&[BiPoly::zero(), BiPoly::zero()]).is_zero());
        let c3 = Logarithmic::new(3).unwrap();
        assert_eq!(c3.d2(&[x(), BiPoly::zero()]), y().pow(2));
    }

    #[test]
    fn d2_of_d1_on_y() {
        let c = Logarithmic::new(2).unwrap();
        let d = c.d1(&y());
        assert_eq!(d, [y().pow(2), BiPoly::zero()]);
        assert!(c.d2(&d).is_zero());
    }

    #[test]
    fn commuting_square() {
        for n in 2..=5 {
            let c = Logarithmic::new(n).unwrap();
            let f = &x().pow(3) * &y().pow(2) + x() - y().pow(4).scale(&int(7));
            let coords = c.d1(&f);
            assert_eq!(c.as_derivation(&coords), c.d1_derivation(&f));
            assert_eq!(Logarithmic::from_derivation(&c.d1_derivation(&f)), coords);
        }
    }

    #[test]
    fn rejects_small_n() {
        assert_eq!(Logarithmic::new(1), Err(Error::InvalidN(1)));
    }
}
