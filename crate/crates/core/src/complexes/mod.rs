//! The classical and logarithmic Poisson cochain complexes
//! `0 → A → A² → A → 0`, behind a common [`CochainComplex`] trait.
//!
//! Concrete complexes are created by name through [`ComplexRegistry`], which
//! is how the CLI and the verification suites pick a variant at runtime.

mod classical;
mod generic;
mod logarithmic;
mod registry;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{monomial_basis, BasisConstraint, BiPoly, Monomial};

pub use classical::Classical;
pub use generic::d_generic;
pub use logarithmic::Logarithmic;
pub use registry::{ComplexFactory, ComplexRegistry, VariantParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantKind {
    #[serde(rename = "log")]
    Logarithmic,
    Classical,
}

impl VariantKind {
    pub fn name(&self) -> &'static str {
        match self {
            VariantKind::Logarithmic => "log",
            VariantKind::Classical => "classical",
        }
    }

    /// Slot names for degree 1 and the top wedge.
    fn slot_names(&self) -> ([&'static str; 2], &'static str) {
        match self {
            VariantKind::Logarithmic => (["δ¹", "δ²"], "δ¹∧δ²"),
            VariantKind::Classical => (["∂x", "∂y"], "∂x∧∂y"),
        }
    }

    pub fn slot_weights(&self) -> SlotWeights {
        match self {
            VariantKind::Logarithmic => SlotWeights {
                c1: [-1, 0],
                c2: -1,
            },
            VariantKind::Classical => SlotWeights {
                c1: [-1, -1],
                c2: -2,
            },
        }
    }
}

impl fmt::Display for VariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexSpec {
    Classical { phi: BiPoly },
    Logarithmic { n: u32 },
}

impl ComplexSpec {
    pub fn logarithmic(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidN(n));
        }
        Ok(ComplexSpec::Logarithmic { n })
    }

    pub fn kind(&self) -> VariantKind {
        match self {
            ComplexSpec::Classical { .. } => VariantKind::Classical,
            ComplexSpec::Logarithmic { .. } => VariantKind::Logarithmic,
        }
    }

    pub fn build(&self) -> Box<dyn CochainComplex> {
        match self {
            ComplexSpec::Classical { phi } => Box::new(Classical::new(phi.clone())),
            ComplexSpec::Logarithmic { n } => Box::new(Logarithmic { n: *n }),
        }
    }
}

/// Weight carried by each basis slot, added to the total degree of the
/// coefficient. Monomials themselves use `wx = wy = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotWeights {
    pub c1: [i64; 2],
    pub c2: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cochain {
    C0(BiPoly),
    C1([BiPoly; 2]),
    C2(BiPoly),
}

impl Cochain {
    pub fn degree(&self) -> usize {
        match self {
            Cochain::C0(_) => 0,
            Cochain::C1(_) => 1,
            Cochain::C2(_) => 2,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Cochain::C0(p) | Cochain::C2(p) => p.is_zero(),
            Cochain::C1([a, b]) => a.is_zero() && b.is_zero(),
        }
    }
}

/// A cochain tagged with the variant whose basis its coordinates refer to:
/// `(δ¹, δ²)` and `δ¹∧δ²` for the logarithmic complex, `(∂x, ∂y)` and
/// `∂x∧∂y` for the classical one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainElement {
    pub kind: VariantKind,
    pub value: Cochain,
}

impl CochainElement {
    pub fn new(kind: VariantKind, value: Cochain) -> Self {
        CochainElement { kind, value }
    }

    pub fn degree(&self) -> usize {
        self.value.degree()
    }

    /// Weight of a homogeneous element; `Ok(None)` for zero.
    pub fn weight(&self) -> Result<Option<i64>> {
        let sw = self.kind.slot_weights();
        let mut parts: Vec<(i64, &BiPoly)> = Vec::new();
        match &self.value {
            Cochain::C0(p) => parts.push((0, p)),
            Cochain::C1([a, b]) => {
                parts.push((sw.c1[0], a));
                parts.push((sw.c1[1], b));
            }
            Cochain::C2(p) => parts.push((sw.c2, p)),
        }
        let mut weight = None;
        for (shift, p) in parts {
            if p.is_zero() {
                continue;
            }
            let d = p
                .homogeneous_degree()
                .ok_or_else(|| Error::NotHomogeneous(format!("{self}")))?;
            match weight {
                None => weight = Some(d + shift),
                Some(w) if w == d + shift => {}
                Some(_) => return Err(Error::NotHomogeneous(format!("{self}"))),
            }
        }
        Ok(weight)
    }
}

fn render_coefficient(c: &BiPoly, slot: &str) -> String {
    if c == &BiPoly::one() {
        return slot.to_string();
    }
    if c == &-BiPoly::one() {
        return format!("-{slot}");
    }
    if c.num_terms() == 1 {
        format!("{c}·{slot}")
    } else {
        format!("({c})·{slot}")
    }
}

impl fmt::Display for CochainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (slots, top) = self.kind.slot_names();
        match &self.value {
            Cochain::C0(p) => write!(f, "{p}"),
            Cochain::C2(p) => {
                if p.is_zero() {
                    write!(f, "0")
                } else {
                    f.write_str(&render_coefficient(p, top))
                }
            }
            Cochain::C1(pair) => {
                let parts: Vec<String> = pair
                    .iter()
                    .zip(slots)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, s)| render_coefficient(c, s))
                    .collect();
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    f.write_str(&parts.join(" + "))
                }
            }
        }
    }
}

/// One coordinate of a graded basis: a monomial placed in a slot
/// (always slot 0 in degrees 0 and 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisCell {
    pub slot: usize,
    pub mono: Monomial,
}

pub trait CochainComplex: Send + Sync {
    fn kind(&self) -> VariantKind;

    fn spec(&self) -> ComplexSpec;

    /// `d¹ : C⁰ → C¹`.
    fn d1(&self, f: &BiPoly) -> [BiPoly; 2];

    /// `d² : C¹ → C²`.
    fn d2(&self, a: &[BiPoly; 2]) -> BiPoly;

    /// Weight added by both differentials.
    fn weight_shift(&self) -> Result<i64>;

    /// The exponent `n` when the bracket is `{x, y} = y^n`.
    fn y_power(&self) -> Option<u32>;

    fn label(&self) -> String {
        match self.spec() {
            ComplexSpec::Logarithmic { n } => format!("log(n={n})"),
            ComplexSpec::Classical { phi } => format!("classical(phi={phi})"),
        }
    }

    fn slot_weights(&self) -> SlotWeights {
        self.kind().slot_weights()
    }

    fn differential(&self, c: &CochainElement) -> Result<CochainElement> {
        let value = match &c.value {
            Cochain::C0(f) => Cochain::C1(self.d1(f)),
            Cochain::C1(a) => Cochain::C2(self.d2(a)),
            Cochain::C2(_) => return Err(Error::UnsupportedDegree(2)),
        };
        Ok(CochainElement::new(self.kind(), value))
    }

    /// Monomial coordinates of `C^k` at weight `w`, slot-major and in
    /// monomial order within a slot. Empty for `k > 2`.
    fn graded_basis(&self, k: usize, w: i64) -> Vec<BasisCell> {
        let sw = self.slot_weights();
        let cells = |slot: usize, deg: i64| {
            monomial_basis(deg, BasisConstraint::All)
                .into_iter()
                .map(move |mono| BasisCell { slot, mono })
        };
        match k {
            0 => cells(0, w).collect(),
            1 => cells(0, w - sw.c1[0])
                .chain(cells(1, w - sw.c1[1]))
                .collect(),
            2 => cells(0, w - sw.c2).collect(),
            _ => Vec::new(),
        }
    }

    fn cell_element(&self, k: usize, cell: &BasisCell) -> CochainElement {
        let m = BiPoly::monomial(cell.mono.y, cell.mono.x);
        let value = match (k, cell.slot) {
            (0, _) => Cochain::C0(m),
            (1, 0) => Cochain::C1([m, BiPoly::zero()]),
            (1, _) => Cochain::C1([BiPoly::zero(), m]),
            _ => Cochain::C2(m),
        };
        CochainElement::new(self.kind(), value)
    }
}

impl fmt::Debug for dyn CochainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, Default)]
pub struct ComplexCheckReport {
    pub checked: usize,
    /// Inputs `f` with `d²(d¹ f) ≠ 0`.
    pub failures: Vec<BiPoly>,
}

impl ComplexCheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `d² ∘ d¹ = 0` on every sample and on every monomial of total
/// degree at most `max_weight`.
pub fn check_complex(
    complex: &dyn CochainComplex,
    samples: &[BiPoly],
    max_weight: i64,
) -> ComplexCheckReport {
    let mut report = ComplexCheckReport::default();
    let monomials = (0..=max_weight)
        .flat_map(|w| monomial_basis(w, BasisConstraint::All))
        .map(|m| BiPoly::monomial(m.y, m.x));
    for f in samples.iter().cloned().chain(monomials) {
        report.checked += 1;
        if !complex.d2(&complex.d1(&f)).is_zero() {
            report.failures.push(f);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn element_weights() {
        let e = CochainElement::new(
            VariantKind::Logarithmic,
            Cochain::C1([BiPoly::one(), BiPoly::zero()]),
        );
        assert_eq!(e.weight(), Ok(Some(-1)));
        let e = CochainElement::new(VariantKind::Classical, Cochain::C2(BiPoly::one()));
        assert_eq!(e.weight(), Ok(Some(-2)));
        let e = CochainElement::new(
            VariantKind::Logarithmic,
            Cochain::C1([BiPoly::one(), BiPoly::one()]),
        );
        assert!(matches!(e.weight(), Err(Error::NotHomogeneous(_))));
        let e = CochainElement::new(VariantKind::Logarithmic, Cochain::C0(BiPoly::zero()));
        assert_eq!(e.weight(), Ok(None));
    }

    #[test]
    fn log_d1_is_homogeneous_of_shift_n_minus_2() {
        let log = Logarithmic::new(2).unwrap();
        let d = log
            .differential(&CochainElement::new(
                VariantKind::Logarithmic,
                Cochain::C0(BiPoly::x()),
            ))
            .unwrap();
        assert_eq!(d.value, Cochain::C1([BiPoly::zero(), -BiPoly::y()]));
        // weight(x) + (n − 2) = 1 + 0
        assert_eq!(d.weight(), Ok(Some(1)));
    }

    #[test]
    fn graded_bases() {
        for n in 2..=5 {
            let log = Logarithmic::new(n).unwrap();
            let b = log.graded_basis(1, -1);
            assert_eq!(
                b,
                vec![BasisCell {
                    slot: 0,
                    mono: Monomial::ONE
                }]
            );
            assert!(log.graded_basis(3, 4).is_empty());
        }
        let log = Logarithmic::new(3).unwrap();
        let b: Vec<_> = log.graded_basis(0, 2).into_iter().map(|c| c.mono).collect();
        assert_eq!(b, monomial_basis(2, BasisConstraint::All));
        let cl = Classical::new(BiPoly::y_pow(2));
        assert_eq!(
            cl.graded_basis(2, -2),
            vec![BasisCell {
                slot: 0,
                mono: Monomial::ONE
            }]
        );
    }

    #[test]
    fn rendering() {
        let e = CochainElement::new(
            VariantKind::Logarithmic,
            Cochain::C1([BiPoly::x(), BiPoly::one()]),
        );
        assert_eq!(e.to_string(), "x·δ¹ + δ²");
        let e = CochainElement::new(
            VariantKind::Classical,
            Cochain::C1([&BiPoly::x() + &BiPoly::y(), BiPoly::constant(int(-1))]),
        );
        assert_eq!(e.to_string(), "(x + y)·∂x + -∂y");
        let e = CochainElement::new(VariantKind::Logarithmic, Cochain::C2(BiPoly::one()));
        assert_eq!(e.to_string(), "δ¹∧δ²");
    }

    #[test]
    fn check_complex_examples() {
        let log = Logarithmic::new(2).unwrap();
        let r = check_complex(&log, &[BiPoly::y(), BiPoly::zero()], 3);
        assert!(r.passed());
        assert_eq!(r.checked, 2 + 10);
        let phi = &BiPoly::x() + &BiPoly::y_pow(2);
        let cl = Classical::new(phi);
        let r = check_complex(&cl, &[&BiPoly::x() * &BiPoly::y()], 0);
        assert!(r.passed());
    }
}
