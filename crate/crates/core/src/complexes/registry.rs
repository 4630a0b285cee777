use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::BiPoly;

use super::{Classical, CochainComplex, Logarithmic};

/// Parameters a factory may consume. The classical factory defaults `phi`
/// to `y^n` when no explicit bracket is given.
#[derive(Debug, Clone, Default)]
pub struct VariantParams {
    pub n: Option<u32>,
    pub phi: Option<BiPoly>,
}

impl VariantParams {
    pub fn with_n(n: u32) -> Self {
        VariantParams {
            n: Some(n),
            phi: None,
        }
    }

    pub fn with_phi(phi: BiPoly) -> Self {
        VariantParams {
            n: None,
            phi: Some(phi),
        }
    }
}

pub type ComplexFactory =
    Arc<dyn Fn(&VariantParams) -> Result<Box<dyn CochainComplex>> + Send + Sync>;

/// Complex constructors keyed by variant name.
#[derive(Clone, Default)]
pub struct ComplexRegistry {
    factories: BTreeMap<String, ComplexFactory>,
}

impl ComplexRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registry holding the `log` and `classical` variants.
    pub fn with_defaults() -> Self {
        let mut reg = Self::new();
        reg.register("log", |p: &VariantParams| {
            let n = p.n.ok_or(Error::MissingParameter("log".into(), "n"))?;
            Ok(Box::new(Logarithmic::new(n)?) as Box<dyn CochainComplex>)
        });
        reg.register("classical", |p: &VariantParams| {
            let phi = match (&p.phi, p.n) {
                (Some(phi), _) => phi.clone(),
                (None, Some(n)) => Classical::y_power_bracket(n)?.phi().clone(),
                (None, None) => {
                    return Err(Error::MissingParameter("classical".into(), "n or phi"))
                }
            };
            Ok(Box::new(Classical::new(phi)) as Box<dyn CochainComplex>)
        });
        reg
    }

    /// Registers (or replaces) the factory for `name`.
    pub fn register<F>(&mut self, name: &str, factory: F)
    where
        F: Fn(&VariantParams) -> Result<Box<dyn CochainComplex>> + Send + Sync + 'static,
    {
        self.factories.insert(name.to_string(), Arc::new(factory));
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.factories.keys().map(String::as_str)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.factories.contains_key(name)
    }

    pub fn build(&self, name: &str, params: &VariantParams) -> Result<Box<dyn CochainComplex>> {
        let factory = self
            .factories
            .get(name)
            .ok_or_else(|| Error::UnknownVariant(name.to_string()))?;
        factory(params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{ComplexSpec, VariantKind};

    #[test]
    fn defaults() {
        let reg = ComplexRegistry::with_defaults();
        assert_eq!(reg.names().collect::<Vec<_>>(), vec!["classical", "log"]);
        let c = reg.build("log", &VariantParams::with_n(3)).unwrap();
        assert_eq!(c.kind(), VariantKind::Logarithmic);
        assert_eq!(c.spec(), ComplexSpec::Logarithmic { n: 3 });
        let c = reg.build("classical", &VariantParams::with_n(3)).unwrap();
        assert_eq!(c.y_power(), Some(3));
    }

    #[test]
    fn errors() {
        let reg = ComplexRegistry::with_defaults();
        assert!(matches!(
            reg.build("koszul", &VariantParams::with_n(2)),
            Err(Error::UnknownVariant(_))
        ));
        assert!(matches!(
            reg.build("log", &VariantParams::with_n(1)),
            Err(Error::InvalidN(1))
        ));
        assert!(matches!(
            reg.build("log", &VariantParams::default()),
            Err(Error::MissingParameter(..))
        ));
    }

    #[test]
    fn override_replaces_factory() {
        let mut reg = ComplexRegistry::with_defaults();
        reg.register("log", |_: &VariantParams| {
            Ok(Box::new(Classical::new(BiPoly::y_pow(2))) as Box<dyn CochainComplex>)
        });
        let c = reg.build("log", &VariantParams::with_n(5)).unwrap();
        assert_eq!(c.kind(), VariantKind::Classical);
    }
}
