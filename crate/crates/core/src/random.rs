//! Seeded random polynomials.
//!
//! Sparse polynomials pick a number of terms uniformly in `0..=max_terms`,
//! each monomial uniformly among those of total degree `≤ max_deg`, and each
//! coefficient uniformly in `[−9, 9]`. Dense polynomials draw a coefficient
//! in `[−9, 9]` for every monomial of degree `≤ max_deg`. The stream is a
//! ChaCha8 generator, so a seed reproduces every sample on any platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{int, monomial_basis, BasisConstraint, BiPoly, Monomial};

pub const COEFF_RANGE: i64 = 9;

pub struct RandomPolys {
    rng: ChaCha8Rng,
}

impl RandomPolys {
    pub fn new(seed: u64) -> Self {
        RandomPolys {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream derived from `seed` and a tag, so that suites do
    /// not perturb each other's samples.
    pub fn derived(seed: u64, tag: &str) -> Self {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in tag.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        RandomPolys::new(seed ^ h)
    }

    fn monomials_up_to(max_deg: u32) -> Vec<Monomial> {
        (0..=max_deg as i64)
            .flat_map(|w| monomial_basis(w, BasisConstraint::All))
            .collect()
    }

    pub fn coefficient(&mut self) -> i64 {
        self.rng.gen_range(-COEFF_RANGE..=COEFF_RANGE)
    }

    pub fn sparse(&mut self, max_deg: u32, max_terms: usize) -> BiPoly {
        let monos = Self::monomials_up_to(max_deg);
        let terms = self.rng.gen_range(0..=max_terms);
        let mut p = BiPoly::zero();
        for _ in 0..terms {
            let m = monos[self.rng.gen_range(0..monos.len())];
            let c = self.coefficient();
            p += &BiPoly::term(int(c), m);
        }
        p
    }

    pub fn dense(&mut self, max_deg: u32) -> BiPoly {
        let monos = Self::monomials_up_to(max_deg);
        BiPoly::from_terms(monos.into_iter().map(|m| (m, int(self.coefficient()))))
    }

    pub fn sparse_pair(&mut self, max_deg: u32, max_terms: usize) -> [BiPoly; 2] {
        [
            self.sparse(max_deg, max_terms),
            self.sparse(max_deg, max_terms),
        ]
    }
}
