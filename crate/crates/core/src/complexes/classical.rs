use crate::error::{Error, Result};
use num_traits::One;

use crate::poly::BiPoly;

use super::{CochainComplex, ComplexSpec, VariantKind};

/// Poisson complex of the bracket `{x, y} = φ` in the `(∂x, ∂y)` coordinates:
///
/// - `d¹(f) = φ(∂y f, −∂x f)`
/// - `d²(f, g) = φ(∂x f + ∂y g) − f ∂x φ − g ∂y φ`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classical {
    phi: BiPoly,
    phi_x: BiPoly,
    phi_y: BiPoly,
}

impl Classical {
    pub fn new(phi: BiPoly) -> Self {
        Classical {
            phi_x: phi.partial_x(),
            phi_y: phi.partial_y(),
            phi,
        }
    }

    pub fn y_power_bracket(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidN(n));
        }
        Ok(Classical::new(BiPoly::y_pow(n)))
    }

    pub fn phi(&self) -> &BiPoly {
        &self.phi
    }
}

impl CochainComplex for Classical {
    fn kind(&self) -> VariantKind {
        VariantKind::Classical
    }

    fn spec(&self) -> ComplexSpec {
        ComplexSpec::Classical {
            phi: self.phi.clone(),
        }
    }

    fn d1(&self, f: &BiPoly) -> [BiPoly; 2] {
        [&self.phi * &f.partial_y(), -(&self.phi * &f.partial_x())]
    }

    fn d2(&self, a: &[BiPoly; 2]) -> BiPoly {
        let [f, g] = a;
        let div = &f.partial_x() + &g.partial_y();
        &(&(&self.phi * &div) - &(f * &self.phi_x)) - &(g * &self.phi_y)
    }

    fn weight_shift(&self) -> Result<i64> {
        self.phi
            .homogeneous_degree()
            .map(|d| d - 2)
            .ok_or_else(|| Error::NotHomogeneous(format!("phi = {}", self.phi)))
    }

    fn y_power(&self) -> Option<u32> {
        match self.phi.as_term() {
            Some((m, c)) if m.x == 0 && m.y >= 2 && c.is_one() => Some(m.y),
            _ => None,
        }
    }
}
