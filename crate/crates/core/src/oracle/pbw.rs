use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::polyring::Rational;

/// Ordered product of lowering generators applied to the vacuum, stored as
/// nondecreasing generator ids. The empty monomial is the vacuum itself.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PbwMonomial(Vec<u16>);

impl PbwMonomial {
    pub fn vacuum() -> Self {
        PbwMonomial(Vec::new())
    }

    /// Panics unless `ids` is nondecreasing.
    pub fn new(ids: Vec<u16>) -> Self {
        assert!(ids.windows(2).all(|w| w[0] <= w[1]), "PBW factors out of order");
        PbwMonomial(ids)
    }

    pub fn factors(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_vacuum()
    }

    pub(crate) fn split_first(&self) -> Option<(u16, PbwMonomial)> {
        self.0.split_first().map(|(&g, rest)| (g, PbwMonomial(rest.to_vec())))
    }

    /// `id · self`, valid when `id` does not exceed the first factor.
    pub(crate) fn prepend(&self, id: u16) -> PbwMonomial {
        debug_assert!(self.0.first().is_none_or(|&g| id <= g));
        let mut ids = Vec::with_capacity(self.0.len() + 1);
        ids.push(id);
        ids.extend_from_slice(&self.0);
        PbwMonomial(ids)
    }
}

/// Finite rational combination of PBW monomials; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PbwVector(BTreeMap<PbwMonomial, Rational>);

impl PbwVector {
    pub fn zero() -> Self {
        PbwVector(BTreeMap::new())
    }

    pub fn vacuum() -> Self {
        PbwVector::monomial(PbwMonomial::vacuum())
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        PbwVector(BTreeMap::from([(m, Rational::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.0.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Rational {
        self.0.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn vacuum_coeff(&self) -> Rational {
        self.coeff(&PbwMonomial::vacuum())
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &PbwVector, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.0 {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> PbwVector {
        let mut out = PbwVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &PbwVector) -> PbwVector {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }
}
