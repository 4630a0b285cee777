//! Identity suites: complex property, oracle equality, derivations, the
//! Koszul bracket and the Schouten corollary.

use crate::cli::parse::parse_poly;
use crate::complexes::{
    check_complex, d_generic, Cochain, CochainComplex, CochainElement, Logarithmic, VariantKind,
    VariantParams,
};
use crate::error::Result;
use crate::log_geometry::{
    d_tilde, ham_tilde, koszul, koszul_base, sn_bracket_pi_f, to_log, LogDerivation, LogOneForm,
};
use crate::poly::{monomial_basis, BasisConstraint, BiPoly};
use crate::random::RandomPolys;

use super::{Suite, SuiteContext, SuiteOutcome, DEFAULT_PHIS};

const COMPLEX_SAMPLES: usize = 200;
const COMPLEX_SAMPLE_DEGREE: u32 = 6;
const COMPLEX_MAX_WEIGHT: i64 = 30;
const ORACLE_SAMPLES: usize = 200;
const ANTISYMMETRY_PAIRS: usize = 200;
const JACOBI_TRIPLES: usize = 100;
const JACOBI_DEGREE: u32 = 4;
const COMPATIBILITY_DEGREE: i64 = 6;
const SCHOUTEN_SAMPLES: usize = 100;
const HOMOGENEITY_MAX_WEIGHT: i64 = 12;

fn rng(ctx: &SuiteContext, tag: &str) -> RandomPolys {
    RandomPolys::derived(ctx.seed, &format!("{tag}/{}", ctx.n))
}

fn monomials_up_to(max_deg: i64) -> impl Iterator<Item = BiPoly> {
    (0..=max_deg)
        .flat_map(|w| monomial_basis(w, BasisConstraint::All))
        .map(|m| BiPoly::monomial(m.y, m.x))
}

fn form(f: &LogOneForm) -> String {
    format!("({})·ω₁ + ({})·ω₂", f.a, f.b)
}

fn derivation(d: &LogDerivation) -> String {
    format!("({})·δ¹ + ({})·δ²", d.a, d.b)
}

fn dense_samples(rng: &mut RandomPolys) -> Vec<BiPoly> {
    (0..COMPLEX_SAMPLES)
        .map(|_| rng.dense(COMPLEX_SAMPLE_DEGREE))
        .collect()
}

fn record_complex(
    outcome: &mut SuiteOutcome,
    complex: &dyn CochainComplex,
    samples: &[BiPoly],
    max_w: i64,
) {
    let report = check_complex(complex, samples, max_w);
    outcome.record(report.checked, report.passed(), || {
        format!(
            "{}: d²(d¹(f)) = {} for f = {}",
            complex.label(),
            complex.d2(&complex.d1(&report.failures[0])),
            report.failures[0]
        )
    });
}

/// `d² ∘ d¹ = 0` for the registered `log` and `classical` complexes.
pub struct ComplexIdentitySuite;

impl Suite for ComplexIdentitySuite {
    fn name(&self) -> &'static str {
        "complex-identity"
    }

    fn description(&self) -> &'static str {
        "d2 ∘ d1 = 0 on monomials up to weight 30 and on random dense polynomials"
    }

    fn run(&self, ctx: &SuiteContext) -> Result<SuiteOutcome> {
        let mut outcome = SuiteOutcome::new(self.name());
        let samples = dense_samples(&mut rng(ctx, self.name()));
        for name in ["log", "classical"] {
            let complex = ctx.complex(name)?;
            record_complex(&mut outcome, complex.as_ref(), &samples, COMPLEX_MAX_WEIGHT);
        }
        Ok(outcome)
    }
}

/// `d² ∘ d¹ = 0` for classical complexes of general brackets `φ`.
pub struct ClassicalPhiSuite;

impl Suite for ClassicalPhiSuite {
    fn name(&self) -> &'static str {
        "classical-phi"
    }

    fn description(&self) -> &'static str {
        "d2 ∘ d1 = 0 for the classical complex of y^2, x + y^2, x^2*y - 1 and any --phi"
    }

    fn per_n(&self) -> bool {
        false
    }

    fn run(&self, ctx: &SuiteContext) -> Result<SuiteOutcome> {
        let mut outcome = SuiteOutcome::new(self.name());
        let mut phis = DEFAULT_PHIS
            .iter()
            .map(|s| parse_poly(s))
            .collect::<Result<Vec<_>>>()?;
        phis.extend(ctx.phis.iter().cloned());
        let mut rng = RandomPolys::derived(ctx.seed, self.name());
        let samples = dense_samples(&mut rng);
        for phi in phis {
            let complex = ctx
                .complexes
                .build("classical", &VariantParams::with_phi(phi))?;
            record_complex(
                &mut outcome,
                complex.as_ref(),
                &samples,
                COMPLEX_SAMPLE_DEGREE as i64,
            );
        }
        Ok(outcome)
    }
}

/// Both differentials shift element weight by exactly `n − 2`.
pub struct HomogeneitySuite;

impl Suite for HomogeneitySuite {
    fn name(&self) -> &'static str {
        "homogeneity"
    }

    fn description(&self) -> &'static str {
        "d1 and d2 map weight w to weight w + (n - 2) in both variants"
    }

    fn run(&self, ctx: &SuiteContext) -> Result<SuiteOutcome> {
        let mut outcome = SuiteOutcome::new(self.name());
        for name in ["log", "classical"] {
            let complex = ctx.complex(name)?;
            let shift = complex.weight_shift()?;
            outcome.check(shift == ctx.n as i64 - 2, || {
                format!("{}: weight shift {shift}", complex.label())
            });
            for k in 0..2 {
                for w in ctx.window.min_w..=ctx.window.max_w.min(HOMOGENEITY_MAX_WEIGHT) {
                    for cell in complex.graded_basis(k, w) {
                        let input = complex.cell_element(k, &cell);
                        let image = complex.differential(&input)?;
                        let got = image.weight()?;
                        outcome.check(got.is_none_or(|g| g == w + shift), || {
                            format!(
                                "{}: d({input}) = {image} has weight {got:?}, expected {}",
                                complex.label(),
                                w + shift
                            )
                        });
                    }
                }
            }
        }
        Ok(outcome)
    }
}

/// The literal alternating-sum differential agrees with the closed forms.
pub struct DefinitionOracleSuite;

impl Suite for DefinitionOracleSuite {
    fn name(&self) -> &'static str {
        "definition-oracle"
    }

    fn description(&self) -> &'static str {
        "generic differential from H̃ and the Koszul bracket equals closed-form d1 and d2"
    }

    fn run(&self, ctx: &SuiteContext) -> Result<SuiteOutcome> {
        let mut outcome = SuiteOutcome::new(self.name());
        let oracle = Logarithmic::new(ctx.n)?;
        let complex = ctx.complex("log")?;
        let mut rng = rng(ctx, self.name());
        for _ in 0..ORACLE_SAMPLES {
            let f = rng.sparse(COMPLEX_SAMPLE_DEGREE, 8);
            let input = CochainElement::new(VariantKind::Logarithmic, Cochain::C0(f.clone()));
            let generic = d_generic(&oracle, &input)?;
            let closed = complex.differential(&input)?;
            outcome.check(generic == closed, || {
                format!("d({f}): generic {generic} ≠ closed form {closed}")
            });
        }
        for _ in 0..ORACLE_SAMPLES {
            let pair = rng.sparse_pair(COMPLEX_SAMPLE_DEGREE, 8);
            let input = CochainElement::new(VariantKind::Logarithmic, Cochain::C1(pair.clone()));
            let generic = d_generic(&oracle, &input)?;
            let closed = complex.differential(&input)?;
            outcome.check(generic == closed, || {
                format!("d({input}): generic {generic} ≠ closed form {closed}")
            });
        }
        Ok(outcome)
    }
}

/// Logarithmicity, Leibniz rule and the coordinate round trips.
pub struct LogDerivationSuite;

impl Suite for LogDerivationSuite {
    fn name(&self) -> &'static str {
        "log-derivations"
    }

    fn description(&self) -> &'static str {
        "log derivations preserve y^n, obey Leibniz, and d1 agrees with its derivation form"
    }

    fn run(&self, ctx: &SuiteContext) -> Result<SuiteOutcome> {
        let mut outcome = SuiteOutcome::new(self.name());
        let n = ctx.n;
        let log = Logarithmic::new(n)?;
        let complex = ctx.complex("log")?;
        let yn = BiPoly::y_pow(n);
        let mut rng = rng(ctx, self.name());
        for _ in 0..ORACLE_SAMPLES {
            let [a, b] = rng.sparse_pair(5, 6);
            let d = LogDerivation::new(a, b, n);
            let f = rng.sparse(5, 6);
            let g = rng.sparse(5, 6);
            let image = d.apply(&(&yn * &g));
            outcome.check(image.is_divisible_by_y_power(n), || {
                format!("D = {}, g = {g}: D(y^n g) = {image}", derivation(&d))
            });
            let lhs = d.apply(&(&f * &g));
            let rhs = &f * &d.apply(&g) + &g * &d.apply(&f);
            outcome.check(lhs == rhs, || {
                format!("D = {}: Leibniz fails on f = {f}, g = {g}", derivation(&d))
            });
            let back = to_log(&d.to_ordinary(), n)?;
            outcome.check(back == d, || {
                format!("ordinary round trip of {}", derivation(&d))
            });
            let from_coords = log.as_derivation(&complex.d1(&f));
            let direct = log.d1_derivation(&f);
            outcome.check(from_coords == direct, || {
                format!(
                    "f = {f}: coordinates {} ≠ derivation form {}",
                    derivation(&from_coords),
                    derivation(&direct)
                )
            });
            outcome.check(
                Logarithmic::from_derivation(&direct) == complex.d1(&f),
                || format!("f = {f}: coordinate round trip of d1 fails"),
            );
        }
        Ok(outcome)
    }
}

/// Antisymmetry, Jacobi, the compatibility rule and the base values.
pub struct KoszulSuite;

impl Suite for KoszulSuite {
    fn name(&self) -> &'static str {
        "koszul"
    }

    fn description(&self) -> &'static str {
        "Koszul bracket: antisymmetry, Jacobi, compatibility on monomials, base values"
    }

    fn run(&self, ctx: &SuiteContext) -> Result<SuiteOutcome> {
        let mut outcome = SuiteOutcome::new(self.name());
        let n = ctx.n;
        let mut rng = rng(ctx, self.name());
        let random_form = |rng: &mut RandomPolys| {
            let [a, b] = rng.sparse_pair(JACOBI_DEGREE, 4);
            LogOneForm::new(a, b, n)
        };

        for _ in 0..ANTISYMMETRY_PAIRS {
            let alpha = random_form(&mut rng);
            let beta = random_form(&mut rng);
            let sum = koszul(&alpha, &beta).add(&koszul(&beta, &alpha));
            outcome.check(sum.is_zero(), || {
                format!(
                    "[α,β] + [β,α] = {} for α = {}, β = {}",
                    form(&sum),
                    form(&alpha),
                    form(&beta)
                )
            });
        }

        for _ in 0..JACOBI_TRIPLES {
            let a = random_form(&mut rng);
            let b = random_form(&mut rng);
            let c = random_form(&mut rng);
            let total = koszul(&a, &koszul(&b, &c))
                .add(&koszul(&b, &koszul(&c, &a)))
                .add(&koszul(&c, &koszul(&a, &b)));
            outcome.check(total.is_zero(), || {
                format!(
                    "Jacobi sum {} for α = {}, β = {}, γ = {}",
                    form(&total),
                    form(&a),
                    form(&b),
                    form(&c)
                )
            });
        }

        for a in monomials_up_to(COMPATIBILITY_DEGREE) {
            for i in 1..=2 {
                for j in 1..=2 {
                    let wi = LogOneForm::basis(i, n);
                    let wj = LogOneForm::basis(j, n);
                    let lhs = koszul(&wi, &wj.scale(&a));
                    let rhs = wj
                        .scale(&ham_tilde(&wi).apply(&a))
                        .add(&koszul_base(i, j, n).scale(&a));
                    outcome.check(lhs == rhs, || {
                        format!(
                            "[ω{i}, a·ω{j}] = {} ≠ {} for a = {a}",
                            form(&lhs),
                            form(&rhs)
                        )
                    });
                }
            }
        }

        // [dx, dy/y] = d(y^(n-1)) and [dy/y, dy/y] = 0.
        let w1 = LogOneForm::basis(1, n);
        let w2 = LogOneForm::basis(2, n);
        let anchor = d_tilde(&BiPoly::y_pow(n - 1), n);
        let base = koszul(&w1, &w2);
        outcome.check(base == anchor, || {
            format!(
                "[ω₁, ω₂] = {} ≠ d(y^(n-1)) = {}",
                form(&base),
                form(&anchor)
            )
        });
        outcome.check(koszul_base(1, 2, n) == anchor, || {
            format!("stored [ω₁, ω₂] = {}", form(&koszul_base(1, 2, n)))
        });
        for (i, j) in [(1, 1), (2, 2)] {
            let v = koszul(&LogOneForm::basis(i, n), &LogOneForm::basis(j, n));
            outcome.check(v.is_zero(), || format!("[ω{i}, ω{j}] = {}", form(&v)));
        }
        let reversed = koszul(&w2, &w1);
        outcome.check(reversed == LogOneForm::zero(n).sub(&anchor), || {
            format!("[ω₂, ω₁] = {}", form(&reversed))
        });
        Ok(outcome)
    }
}

/// `[π, f] = −H̃(d̃f) = d¹f`.
pub struct SchoutenSuite;

impl Suite for SchoutenSuite {
    fn name(&self) -> &'static str {
        "schouten"
    }

    fn description(&self) -> &'static str {
        "[π, f] = -H̃(d̃f) = d1(f) on random polynomials"
    }

    fn run(&self, ctx: &SuiteContext) -> Result<SuiteOutcome> {
        let mut outcome = SuiteOutcome::new(self.name());
        let n = ctx.n;
        let complex = ctx.complex("log")?;
        let mut rng = rng(ctx, self.name());
        for _ in 0..SCHOUTEN_SAMPLES {
            let f = rng.sparse(COMPLEX_SAMPLE_DEGREE, 8);
            let sn = sn_bracket_pi_f(&f, n);
            let ham = ham_tilde(&d_tilde(&f, n)).neg();
            outcome.check(sn == ham, || {
                format!(
                    "f = {f}: [π, f] = {} ≠ -H̃(d̃f) = {}",
                    derivation(&sn),
                    derivation(&ham)
                )
            });
            let [a, b] = complex.d1(&f);
            let d1 = LogDerivation::new(a, b, n);
            outcome.check(sn == d1, || {
                format!(
                    "f = {f}: [π, f] = {} ≠ d1(f) = {}",
                    derivation(&sn),
                    derivation(&d1)
                )
            });
        }
        Ok(outcome)
    }
}
