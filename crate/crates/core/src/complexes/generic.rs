//! Literal evaluation of the Chevalley–Eilenberg style differential on
//! alternating forms over `Ω¹(log I)`. Serves as an independent route to the
//! closed-form differentials of [`Logarithmic`].

use crate::error::{Error, Result};
use crate::log_geometry::{ham_tilde, koszul, LogDerivation, LogOneForm};
use crate::poly::BiPoly;

use super::{Cochain, CochainElement, Logarithmic, VariantKind};

/// Value of a 0- or 1-cochain on a list of log 1-forms.
fn evaluate(c: &Cochain, n: u32, forms: &[LogOneForm]) -> BiPoly {
    match (c, forms) {
        (Cochain::C0(f), []) => f.clone(),
        (Cochain::C1([a1, a2]), [w]) => LogDerivation::new(a1.clone(), a2.clone(), n).pair(w),
        _ => unreachable!("arity mismatch when evaluating a cochain"),
    }
}

fn without(forms: &[LogOneForm], skip: &[usize]) -> Vec<LogOneForm> {
    forms
        .iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, w)| w.clone())
        .collect()
}

/// `(d c)(w₀, …, w_p)`: alternating sum of anchor terms plus bracket terms
/// over pairs `i < j`.
fn differential_on(c: &Cochain, n: u32, forms: &[LogOneForm]) -> BiPoly {
    let mut out = BiPoly::zero();
    for i in 0..forms.len() {
        let inner = evaluate(c, n, &without(forms, &[i]));
        let term = ham_tilde(&forms[i]).apply(&inner);
        if i % 2 == 0 {
            out += &term;
        } else {
            out -= &term;
        }
    }
    for i in 0..forms.len() {
        for j in (i + 1)..forms.len() {
            let mut args = vec![koszul(&forms[i], &forms[j])];
            args.extend(without(forms, &[i, j]));
            let term = evaluate(c, n, &args);
            if (i + j) % 2 == 0 {
                out += &term;
            } else {
                out -= &term;
            }
        }
    }
    out
}

/// Differential of a logarithmic 0- or 1-cochain computed from `H̃` and the
/// Koszul bracket, read back in the `δ` basis through `⟨δⁱ, ωⱼ⟩ = δᵢⱼ`.
pub fn d_generic(complex: &Logarithmic, c: &CochainElement) -> Result<CochainElement> {
    let n = complex.n;
    let w1 = LogOneForm::basis(1, n);
    let w2 = LogOneForm::basis(2, n);
    let value = match &c.value {
        Cochain::C0(_) => Cochain::C1([
            differential_on(&c.value, n, std::slice::from_ref(&w1)),
            differential_on(&c.value, n, std::slice::from_ref(&w2)),
        ]),
        Cochain::C1(_) => Cochain::C2(differential_on(&c.value, n, &[w1, w2])),
        Cochain::C2(_) => return Err(Error::UnsupportedDegree(2)),
    };
    Ok(CochainElement::new(VariantKind::Logarithmic, value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::CochainComplex;
    use crate::poly::int;

    fn log_elem(value: Cochain) -> CochainElement {
        CochainElement::new(VariantKind::Logarithmic, value)
    }

    #[test]
    fn degree_zero_examples() {
        let c = Logarithmic::new(2).unwrap();
        let d = d_generic(&c, &log_elem(Cochain::C0(BiPoly::x()))).unwrap();
        assert_eq!(d.value, Cochain::C1([BiPoly::zero(), -BiPoly::y()]));
        let d = d_generic(&c, &log_elem(Cochain::C0(BiPoly::constant(int(4))))).unwrap();
        assert!(d.value.is_zero());
    }

    #[test]
    fn degree_one_example() {
        let c = Logarithmic::new(3).unwrap();
        let d = d_generic(&c, &log_elem(Cochain::C1([BiPoly::x(), BiPoly::zero()]))).unwrap();
        assert_eq!(d.value, Cochain::C2(BiPoly::y_pow(2)));
    }

    #[test]
    fn agrees_with_closed_form_on_monomials() {
        for n in 2..=5 {
            let c = Logarithmic::new(n).unwrap();
            for (i, j) in [(0, 0), (1, 0), (0, 1), (2, 3), (4, 1)] {
                let m = BiPoly::monomial(i, j);
                let d = d_generic(&c, &log_elem(Cochain::C0(m.clone()))).unwrap();
                assert_eq!(d.value, Cochain::C1(c.d1(&m)));
                for pair in [[m.clone(), BiPoly::zero()], [BiPoly::zero(), m.clone()]] {
                    let d = d_generic(&c, &log_elem(Cochain::C1(pair.clone()))).unwrap();
                    assert_eq!(d.value, Cochain::C2(c.d2(&pair)));
                }
            }
        }
    }

    #[test]
    fn top_degree_is_rejected() {
        let c = Logarithmic::new(2).unwrap();
        let r = d_generic(&c, &log_elem(Cochain::C2(BiPoly::one())));
        assert_eq!(r, Err(Error::UnsupportedDegree(2)));
    }
}
