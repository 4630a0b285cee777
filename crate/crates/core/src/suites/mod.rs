//! Named verification suites.
//!
//! A [`Suite`] checks one family of identities for a given `n`, or once for
//! the whole run when [`Suite::per_n`] is false. Suites obtain their cochain
//! complexes from the [`ComplexRegistry`] in the [`SuiteContext`], so a
//! replaced factory is picked up by every suite that goes through it.

mod algebra;
mod groups;

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::WeightWindow;
use crate::complexes::{CochainComplex, ComplexRegistry, VariantParams};
use crate::error::Result;
use crate::poly::BiPoly;

pub use algebra::{
    ClassicalPhiSuite, ComplexIdentitySuite, DefinitionOracleSuite, HomogeneitySuite, KoszulSuite,
    LogDerivationSuite, SchoutenSuite,
};
pub use groups::{
    CorollarySuite, H0Suite, H1Suite, H2Suite, HkVanishingSuite, RepresentativesSuite,
    Z2StructureSuite,
};

/// Default brackets for the general-φ complex check.
pub const DEFAULT_PHIS: [&str; 3] = ["y^2", "x + y^2", "x^2*y - 1"];

pub struct SuiteContext<'a> {
    pub n: u32,
    pub seed: u64,
    pub window: WeightWindow,
    pub complexes: &'a ComplexRegistry,
    pub phis: &'a [BiPoly],
}

impl SuiteContext<'_> {
    pub fn complex(&self, name: &str) -> Result<Box<dyn CochainComplex>> {
        self.complexes.build(name, &VariantParams::with_n(self.n))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub pass: bool,
    #[serde(skip)]
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl SuiteOutcome {
    pub fn new(name: impl Into<String>) -> Self {
        SuiteOutcome {
            name: name.into(),
            pass: true,
            checked: 0,
            counterexample: None,
        }
    }

    /// Records one check; the first failure's message is kept.
    pub fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.record(1, ok, counterexample);
    }

    /// Records a batch of `count` checks with a single verdict.
    pub fn record(&mut self, count: usize, ok: bool, counterexample: impl FnOnce() -> String) {
        self.checked += count;
        if !ok && self.pass {
            self.pass = false;
            self.counterexample = Some(counterexample());
        }
    }

    pub fn failed_with(name: impl Into<String>, message: impl Into<String>) -> Self {
        SuiteOutcome {
            name: name.into(),
            pass: false,
            checked: 0,
            counterexample: Some(message.into()),
        }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn per_n(&self) -> bool {
        true
    }

    fn run(&self, ctx: &SuiteContext) -> Result<SuiteOutcome>;
}

#[derive(Default)]
pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_defaults() -> Self {
        let mut reg = Self::new();
        reg.register(Box::new(ComplexIdentitySuite));
        reg.register(Box::new(ClassicalPhiSuite));
        reg.register(Box::new(HomogeneitySuite));
        reg.register(Box::new(DefinitionOracleSuite));
        reg.register(Box::new(LogDerivationSuite));
        reg.register(Box::new(KoszulSuite));
        reg.register(Box::new(SchoutenSuite));
        reg.register(Box::new(H0Suite));
        reg.register(Box::new(H1Suite));
        reg.register(Box::new(H2Suite));
        reg.register(Box::new(HkVanishingSuite));
        reg.register(Box::new(Z2StructureSuite));
        reg.register(Box::new(RepresentativesSuite));
        reg.register(Box::new(CorollarySuite));
        reg
    }

    /// Adds a suite, replacing any suite with the same name in place.
    pub fn register(&mut self, suite: Box<dyn Suite>) {
        match self.suites.iter().position(|s| s.name() == suite.name()) {
            Some(i) => self.suites[i] = suite,
            None => self.suites.push(suite),
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites
            .iter()
            .find(|s| s.name() == name)
            .map(|b| b.as_ref())
    }

    pub fn suites(&self) -> impl Iterator<Item = &dyn Suite> {
        self.suites.iter().map(|b| b.as_ref())
    }

    /// Runs every suite (per-`n` suites once per value in `ns`) in parallel
    /// on the current rayon pool. Output order is registration order, then
    /// `n`, independent of scheduling.
    pub fn run_all(
        &self,
        ns: &[u32],
        seed: u64,
        window: WeightWindow,
        complexes: &ComplexRegistry,
        phis: &[BiPoly],
    ) -> Vec<SuiteOutcome> {
        let mut jobs: Vec<(&dyn Suite, u32, String)> = Vec::new();
        for suite in self.suites() {
            if suite.per_n() {
                for &n in ns {
                    jobs.push((suite, n, format!("{}[n={n}]", suite.name())));
                }
            } else {
                let n = ns.first().copied().unwrap_or(2);
                jobs.push((suite, n, suite.name().to_string()));
            }
        }
        jobs.par_iter()
            .map(|(suite, n, label)| {
                let ctx = SuiteContext {
                    n: *n,
                    seed,
                    window,
                    complexes,
                    phis,
                };
                match suite.run(&ctx) {
                    Ok(mut outcome) => {
                        outcome.name = label.clone();
                        outcome
                    }
                    Err(e) => SuiteOutcome::failed_with(label.clone(), format!("error: {e}")),
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique_and_stable() {
        let reg = SuiteRegistry::with_defaults();
        let names = reg.names();
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len());
        assert_eq!(names[0], "complex-identity");
        assert!(reg.get("koszul").is_some());
        assert!(reg.get("nope").is_none());
    }

    #[test]
    fn outcome_keeps_first_failure() {
        let mut o = SuiteOutcome::new("t");
        o.check(true, || "a".into());
        o.check(false, || "b".into());
        o.check(false, || "c".into());
        assert!(!o.pass);
        assert_eq!(o.checked, 3);
        assert_eq!(o.counterexample.as_deref(), Some("b"));
    }
}
