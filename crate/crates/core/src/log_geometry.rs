//! Logarithmic derivations and 1-forms along the divisor `y^n = 0`.
//!
//! Derivations are stored in the basis `δ¹ = ∂x`, `δ² = y∂y`; 1-forms in
//! the dual basis `ω₁ = dx`, `ω₂ = dy/y`, so that `⟨δⁱ, ωⱼ⟩ = δᵢⱼ`.

use crate::error::{Error, Result};
use crate::poly::{int, BiPoly};

/// `a·δ¹ + b·δ²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogDerivation {
    pub a: BiPoly,
    pub b: BiPoly,
    pub n: u32,
}

/// `a·ω₁ + b·ω₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogOneForm {
    pub a: BiPoly,
    pub b: BiPoly,
    pub n: u32,
}

/// `f·∂x + g·∂y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryDerivation {
    pub f: BiPoly,
    pub g: BiPoly,
}

impl LogDerivation {
    pub fn new(a: BiPoly, b: BiPoly, n: u32) -> Self {
        LogDerivation { a, b, n }
    }

    pub fn zero(n: u32) -> Self {
        LogDerivation::new(BiPoly::zero(), BiPoly::zero(), n)
    }

    /// `δ¹` (i = 1) or `δ²` (i = 2).
    pub fn basis(i: usize, n: u32) -> Self {
        match i {
            1 => LogDerivation::new(BiPoly::one(), BiPoly::zero(), n),
            2 => LogDerivation::new(BiPoly::zero(), BiPoly::one(), n),
            _ => panic!("log derivation basis index must be 1 or 2, got {i}"),
        }
    }

    /// `a·∂x f + b·(y∂y f)`.
    pub fn apply(&self, f: &BiPoly) -> BiPoly {
        &self.a * &f.partial_x() + &self.b * &f.euler_y()
    }

    pub fn pair(&self, w: &LogOneForm) -> BiPoly {
        &self.a * &w.a + &self.b * &w.b
    }

    pub fn neg(&self) -> Self {
        LogDerivation::new(-&self.a, -&self.b, self.n)
    }

    pub fn to_ordinary(&self) -> OrdinaryDerivation {
        OrdinaryDerivation {
            f: self.a.clone(),
            g: &self.b * &BiPoly::y(),
        }
    }
}

impl LogOneForm {
    pub fn new(a: BiPoly, b: BiPoly, n: u32) -> Self {
        LogOneForm { a, b, n }
    }

    pub fn zero(n: u32) -> Self {
        LogOneForm::new(BiPoly::zero(), BiPoly::zero(), n)
    }

    /// `ω₁` (i = 1) or `ω₂` (i = 2).
    pub fn basis(i: usize, n: u32) -> Self {
        match i {
            1 => LogOneForm::new(BiPoly::one(), BiPoly::zero(), n),
            2 => LogOneForm::new(BiPoly::zero(), BiPoly::one(), n),
            _ => panic!("log form basis index must be 1 or 2, got {i}"),
        }
    }

    pub fn coeff(&self, i: usize) -> &BiPoly {
        match i {
            1 => &self.a,
            2 => &self.b,
            _ => panic!("log form basis index must be 1 or 2, got {i}"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, c: &BiPoly) -> Self {
        LogOneForm::new(c * &self.a, c * &self.b, self.n)
    }

    pub fn add(&self, other: &LogOneForm) -> Self {
        assert_eq!(self.n, other.n, "log forms over different divisors");
        LogOneForm::new(&self.a + &other.a, &self.b + &other.b, self.n)
    }

    pub fn sub(&self, other: &LogOneForm) -> Self {
        assert_eq!(self.n, other.n, "log forms over different divisors");
        LogOneForm::new(&self.a - &other.a, &self.b - &other.b, self.n)
    }
}

/// `H̃(a·ω₁ + b·ω₂) = y^(n-1)(a·δ² − b·δ¹)`.
pub fn ham_tilde(w: &LogOneForm) -> LogDerivation {
    let yn1 = BiPoly::y_pow(w.n - 1);
    LogDerivation::new(-(&yn1 * &w.b), &yn1 * &w.a, w.n)
}

/// Hamiltonian vector field of `f` for the bracket `{x, y} = φ`:
/// `(−φ·∂y f)∂x + (φ·∂x f)∂y`.
pub fn ham_classical(f: &BiPoly, phi: &BiPoly) -> OrdinaryDerivation {
    OrdinaryDerivation {
        f: -(phi * &f.partial_y()),
        g: phi * &f.partial_x(),
    }
}

/// Rewrites `f∂x + g∂y` as `f·δ¹ + (g/y)·δ²`.
pub fn to_log(d: &OrdinaryDerivation, n: u32) -> Result<LogDerivation> {
    let b = d.g.div_y_power(1).ok_or(Error::NotLogarithmic)?;
    Ok(LogDerivation::new(d.f.clone(), b, n))
}

/// `[ωᵢ, ωⱼ]` in closed form: only `[ω₁, ω₂] = (n−1)y^(n-1)·ω₂` and its
/// negative are nonzero.
pub fn koszul_base(i: usize, j: usize, n: u32) -> LogOneForm {
    assert!((1..=2).contains(&i) && (1..=2).contains(&j));
    let c = BiPoly::y_pow(n - 1).scale(&int(n as i64 - 1));
    match (i, j) {
        (1, 2) => LogOneForm::new(BiPoly::zero(), c, n),
        (2, 1) => LogOneForm::new(BiPoly::zero(), -c, n),
        _ => LogOneForm::zero(n),
    }
}

/// Koszul bracket, extended from the basis values by
/// `[aα, cβ] = ac[α,β] + a·H̃(α)(c)·β − c·H̃(β)(a)·α`.
pub fn koszul(alpha: &LogOneForm, beta: &LogOneForm) -> LogOneForm {
    assert_eq!(alpha.n, beta.n, "log forms over different divisors");
    let n = alpha.n;
    let hams = [
        ham_tilde(&LogOneForm::basis(1, n)),
        ham_tilde(&LogOneForm::basis(2, n)),
    ];
    let mut out = LogOneForm::zero(n);
    for i in 1..=2 {
        let ai = alpha.coeff(i);
        if ai.is_zero() {
            continue;
        }
        for j in 1..=2 {
            let cj = beta.coeff(j);
            if cj.is_zero() {
                continue;
            }
            let base = koszul_base(i, j, n).scale(&(ai * cj));
            let left = LogOneForm::basis(j, n).scale(&(ai * &hams[i - 1].apply(cj)));
            let right = LogOneForm::basis(i, n).scale(&(cj * &hams[j - 1].apply(ai)));
            out = out.add(&base).add(&left).sub(&right);
        }
    }
    out
}

/// `d̃f = ∂x f·ω₁ + y∂y f·ω₂`.
pub fn d_tilde(f: &BiPoly, n: u32) -> LogOneForm {
    LogOneForm::new(f.partial_x(), f.euler_y(), n)
}

/// `[π, f]` for `π = y^n ∂x∧∂y`, computed from the contraction
/// `i_{df}π = y^n(∂x f·∂y − ∂y f·∂x)` and negated so that `[π, f] = d¹f`.
pub fn sn_bracket_pi_f(f: &BiPoly, n: u32) -> LogDerivation {
    let yn = BiPoly::y_pow(n);
    let contraction = OrdinaryDerivation {
        f: -(&yn * &f.partial_y()),
        g: &yn * &f.partial_x(),
    };
    to_log(&contraction, n)
        .expect("y^n ∂y coefficient is always divisible by y")
        .neg()
}
