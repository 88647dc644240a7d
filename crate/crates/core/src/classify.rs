//! Classification of a highest-weight functional `ψ` given over a cofinite
//! ideal: descend to the radical, split by evaluation points, read off one
//! weight per point and decide integrability.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hwchar::{freudenthal_character, tensor_character, CharacterTable};
use crate::liecore::{CartanData, Weight};
use crate::polyring::{Monomial, Polynomial, Rational, Ring};
use crate::zerodim::{crt_idempotents, maximal_points, radical_zero_dim, GroebnerBasis, Ideal, QuotientAlgebra};

/// One value `ψ(h_coroot ⊗ monomial)`; the monomial is unparsed text.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PsiEntry {
    pub coroot: usize,
    pub monomial: String,
    pub value: Rational,
}

impl PsiEntry {
    pub fn new(coroot: usize, monomial: impl Into<String>, value: Rational) -> Self {
        PsiEntry { coroot, monomial: monomial.into(), value }
    }
}

/// Unvalidated input for [`psi_validate`].
#[derive(Clone, Debug)]
pub struct PsiInput {
    pub cartan: CartanData,
    pub ideal: Ideal,
    pub entries: Vec<PsiEntry>,
    pub hpp: Option<Vec<Rational>>,
}

/// A validated functional: `values[i][k] = ψ(h_i ⊗ basis_k)` over the
/// standard monomials of `A/I`.
#[derive(Clone, Debug)]
pub struct PsiSpec {
    cartan: CartanData,
    quotient: QuotientAlgebra,
    values: Vec<Vec<Rational>>,
    hpp: Option<Vec<Rational>>,
}

impl PartialEq for PsiSpec {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
            && self.quotient.groebner() == other.quotient.groebner()
            && self.values == other.values
            && self.hpp == other.hpp
    }
}

impl PsiSpec {
    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn quotient(&self) -> &QuotientAlgebra {
        &self.quotient
    }

    pub fn ring(&self) -> &Ring {
        self.quotient.ring()
    }

    pub fn values(&self) -> &[Vec<Rational>] {
        &self.values
    }

    pub fn hpp(&self) -> Option<&[Rational]> {
        self.hpp.as_deref()
    }

    /// `ψ(h_i ⊗ a)` for `a` in standard-monomial coordinates.
    pub fn apply(&self, coroot: usize, coords: &[Rational]) -> Rational {
        self.values[coroot].iter().zip(coords).filter(|(_, c)| !c.is_zero()).map(|(v, c)| v * c).sum()
    }

    /// `ψ(h_i ⊗ p)` for any polynomial of the ring.
    pub fn apply_polynomial(&self, coroot: usize, p: &Polynomial) -> Result<Rational> {
        Ok(self.apply(coroot, &self.quotient.coords(p)?))
    }

    /// Same functional with every value multiplied by `c`.
    pub fn scale(&self, c: &Rational) -> PsiSpec {
        let values = self.values.iter().map(|row| row.iter().map(|v| v * c).collect()).collect();
        PsiSpec { values, ..self.clone() }
    }

    /// The entries in basis order, suitable for rebuilding through [`psi_validate`].
    pub fn entries(&self) -> Vec<PsiEntry> {
        let mut out = Vec::new();
        for (i, row) in self.values.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                out.push(PsiEntry::new(i, self.quotient.basis_label(k), v.clone()));
            }
        }
        out
    }
}

fn parse_key(ring: &Ring, coroot: usize, text: &str) -> Result<Monomial> {
    let unknown = || Error::UnknownPsiKey { coroot, monomial: text.to_string() };
    let p = ring.parse(text).map_err(|_| unknown())?;
    match p.leading_term() {
        Some((m, c)) if p.num_terms() == 1 && *c == Rational::from_integer(1.into()) => Ok(m.clone()),
        _ => Err(unknown()),
    }
}

/// Check the presentation: `I` cofinite and the entries cover exactly the
/// pairs (coroot, standard monomial of `A/I`).
pub fn psi_validate(input: &PsiInput) -> Result<PsiSpec> {
    let gb = input.ideal.groebner();
    let quotient = QuotientAlgebra::new(&gb)?;
    let ring = input.ideal.ring();
    let rank = input.cartan.rank();
    let mut seen: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for e in &input.entries {
        let mono = parse_key(ring, e.coroot, &e.monomial)?;
        let k = match quotient.basis_index(&mono) {
            Some(k) if e.coroot < rank => k,
            _ => return Err(Error::UnknownPsiKey { coroot: e.coroot, monomial: e.monomial.clone() }),
        };
        if seen.insert((e.coroot, k), e.value.clone()).is_some() {
            return Err(Error::DuplicatePsiEntry { coroot: e.coroot, monomial: e.monomial.clone() });
        }
    }
    let mut values = vec![vec![Rational::zero(); quotient.dim()]; rank];
    for (i, row) in values.iter_mut().enumerate() {
        for (k, slot) in row.iter_mut().enumerate() {
            *slot = seen
                .remove(&(i, k))
                .ok_or_else(|| Error::MissingPsiEntry { coroot: i, monomial: quotient.basis_label(k) })?;
        }
    }
    Ok(PsiSpec { cartan: input.cartan.clone(), quotient, values, hpp: input.hpp.clone() })
}

/// `ψ(h_coroot ⊗ witness) ≠ 0` for an element `witness` of the radical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RadicalObstruction {
    pub coroot: usize,
    pub witness: Polynomial,
}

impl fmt::Display for RadicalObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "psi(h{} ⊗ {}) ≠ 0 with {} in the radical", self.coroot + 1, self.witness, self.witness)
    }
}

fn radical_of(spec: &PsiSpec) -> GroebnerBasis {
    radical_zero_dim(spec.quotient.groebner()).expect("radical of a cofinite ideal is cofinite")
}

/// Re-express `ψ` over `A/J`, `J = √I`, or report where it fails to vanish on `h ⊗ J`.
pub fn radical_descent(spec: &PsiSpec) -> std::result::Result<PsiSpec, RadicalObstruction> {
    let radical = radical_of(spec);
    let q = &spec.quotient;
    for g in radical.elements() {
        for m in q.basis() {
            let element = q.coords(&g.mul_term(m, &Rational::from_integer(1.into()))).expect("same ring");
            for coroot in 0..spec.cartan.rank() {
                if !spec.apply(coroot, &element).is_zero() {
                    return Err(RadicalObstruction { coroot, witness: q.to_polynomial(&element) });
                }
            }
        }
    }
    let target = QuotientAlgebra::new(&radical).expect("radical of a cofinite ideal is cofinite");
    let lifts: Vec<Vec<Rational>> = target
        .basis()
        .iter()
        .map(|m| q.coords(&Polynomial::monomial(q.ring(), m.clone(), Rational::from_integer(1.into()))))
        .collect::<Result<_>>()
        .expect("same ring");
    let values = (0..spec.cartan.rank()).map(|i| lifts.iter().map(|c| spec.apply(i, c)).collect()).collect();
    Ok(PsiSpec { cartan: spec.cartan.clone(), quotient: target, values, hpp: spec.hpp.clone() })
}

/// `λ_j(h_i) = ψ(h_i ⊗ e_j)` for each idempotent `e_j`.
pub fn evaluation_weights(spec: &PsiSpec, idempotents: &[Vec<Rational>]) -> Vec<Weight> {
    idempotents.iter().map(|e| Weight::new((0..spec.cartan.rank()).map(|i| spec.apply(i, e)).collect())).collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Obstruction {
    Radical(RadicalObstruction),
    NonDominantWeight { point: usize, coroot: usize },
}

impl Obstruction {
    pub fn kind(&self) -> &'static str {
        match self {
            Obstruction::Radical(_) => "RadicalObstruction",
            Obstruction::NonDominantWeight { .. } => "NonDominantWeight",
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Radical(r) => r.fmt(f),
            Obstruction::NonDominantWeight { point, coroot } => {
                write!(f, "weight at point {} is not a non-negative integer on h{}", point + 1, coroot + 1)
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Integrable,
    NotIntegrable(Obstruction),
}

impl Verdict {
    pub fn is_integrable(&self) -> bool {
        matches!(self, Verdict::Integrable)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub cartan: CartanData,
    pub verdict: Verdict,
    pub quotient_dim: usize,
    pub radical: GroebnerBasis,
    /// Rational points of the radical, sorted; empty after a radical obstruction.
    pub points: Vec<Vec<Rational>>,
    pub weights: Vec<Weight>,
    pub idempotents: Vec<Polynomial>,
    pub hpp: Option<Vec<Rational>>,
}

impl Decomposition {
    pub fn is_integrable(&self) -> bool {
        self.verdict.is_integrable()
    }
}

/// Full pipeline. Fails only when the radical has irrational points.
pub fn classify_module(spec: &PsiSpec) -> Result<Decomposition> {
    let quotient_dim = spec.quotient.dim();
    let descended = match radical_descent(spec) {
        Ok(d) => d,
        Err(obstruction) => {
            return Ok(Decomposition {
                cartan: spec.cartan.clone(),
                verdict: Verdict::NotIntegrable(Obstruction::Radical(obstruction)),
                quotient_dim,
                radical: radical_of(spec),
                points: Vec::new(),
                weights: Vec::new(),
                idempotents: Vec::new(),
                hpp: spec.hpp.clone(),
            })
        }
    };
    let radical = descended.quotient.groebner().clone();
    let points = maximal_points(&radical)?;
    let idempotents = crt_idempotents(&descended.quotient, &points)?;
    let weights = evaluation_weights(&descended, &idempotents);
    let mut verdict = Verdict::Integrable;
    'scan: for (j, w) in weights.iter().enumerate() {
        for (i, v) in w.values().iter().enumerate() {
            if !Weight::new(vec![v.clone()]).is_dominant_integral() {
                verdict = Verdict::NotIntegrable(Obstruction::NonDominantWeight { point: j, coroot: i });
                break 'scan;
            }
        }
    }
    let idempotents = idempotents.iter().map(|e| descended.quotient.to_polynomial(e)).collect();
    Ok(Decomposition {
        cartan: spec.cartan.clone(),
        verdict,
        quotient_dim,
        radical,
        points,
        weights,
        idempotents,
        hpp: spec.hpp.clone(),
    })
}

/// Character of `V(λ_1) ⊗ ... ⊗ V(λ_k)` down to height `depth`.
pub fn predicted_character(d: &Decomposition, depth: usize) -> Result<CharacterTable> {
    if !d.is_integrable() {
        return Err(Error::NotIntegrable);
    }
    let parts = d.weights.iter().map(|w| freudenthal_character(&d.cartan, w, depth)).collect::<Result<Vec<_>>>()?;
    tensor_character(&d.cartan, &parts, depth)
}
