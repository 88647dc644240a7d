//! Gröbner bases and zero-dimensional (cofinite) ideals: quotient algebras,
//! radicals, rational maximal ideals and Chinese-remainder idempotents.

mod groebner;
mod quotient;
mod radical;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Ring};

pub use groebner::{buchberger, is_groebner, is_reduced, GroebnerBasis};
pub use quotient::QuotientAlgebra;
pub use radical::{crt_idempotents, ideal_product, maximal_points, radical_zero_dim};

/// An ideal given by generators. Zero generators are dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), generators: generators.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring, generators: &[S]) -> Result<Self> {
        let gens = generators.iter().map(|g| ring.parse(g.as_ref())).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), generators: vec![ring.one()] }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner(&self) -> GroebnerBasis {
        buchberger(self)
    }
}
