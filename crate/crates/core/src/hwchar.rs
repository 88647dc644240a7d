//! Weight multiplicities of irreducible integrable highest-weight modules,
//! indexed by the drop `β` below the highest weight and truncated by height.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::liecore::{roots_up_to_height, CartanData, RootLatticeElement, Weight};
use crate::polyring::{rat, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterTable {
    cartan: CartanData,
    highest_weight: Weight,
    depth: usize,
    // nonzero entries only
    entries: BTreeMap<RootLatticeElement, u64>,
}

impl CharacterTable {
    pub fn trivial(cartan: &CartanData, depth: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(RootLatticeElement::zero(cartan.rank()), 1);
        CharacterTable { cartan: cartan.clone(), highest_weight: Weight::zero(cartan.rank()), depth, entries }
    }

    /// Table from explicit nonzero multiplicities.
    pub fn from_entries(
        cartan: &CartanData,
        highest_weight: Weight,
        depth: usize,
        entries: impl IntoIterator<Item = (RootLatticeElement, u64)>,
    ) -> Self {
        let entries = entries.into_iter().filter(|(_, m)| *m > 0).collect();
        CharacterTable { cartan: cartan.clone(), highest_weight, depth, entries }
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Multiplicity of the weight `λ − β`; zero outside the table.
    pub fn get(&self, beta: &RootLatticeElement) -> u64 {
        self.entries.get(beta).copied().unwrap_or(0)
    }

    /// Nonzero entries in (height, lexicographic) order.
    pub fn entries(&self) -> impl Iterator<Item = (&RootLatticeElement, u64)> {
        self.entries.iter().map(|(b, &m)| (b, m))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// True when every weight of the module lies within the table: some
    /// height up to the depth carries no weight at all.
    pub fn is_complete(&self) -> bool {
        self.entries.keys().map(|b| b.height()).max().unwrap_or(0) < self.depth as i64
    }

    /// Multiplicities along `k·α_i`, `k = 0..=depth`.
    pub fn string(&self, i: usize) -> Vec<u64> {
        let a = RootLatticeElement::simple(self.cartan.rank(), i);
        (0..=self.depth as i64).map(|k| self.get(&a.scale(k))).collect()
    }
}

/// Freudenthal recursion, layer by layer in the height of `β`:
///
/// ```text
/// (2(λ+ρ, β) − (β, β)) m(β) = 2 Σ_{α>0} mult(α) Σ_{k≥1} (λ − β + kα, α) m(β − kα)
/// ```
pub fn freudenthal_character(cartan: &CartanData, weight: &Weight, depth: usize) -> Result<CharacterTable> {
    if weight.rank() != cartan.rank() {
        return Err(Error::WeightLength { rank: cartan.rank(), found: weight.rank() });
    }
    if !weight.is_dominant_integral() {
        return Err(Error::NotDominant);
    }
    let n = cartan.rank();
    let roots: Vec<(RootLatticeElement, u64, i64, Rational)> = roots_up_to_height(cartan, depth as i64)
        .iter()
        .map(|(a, m)| (a.clone(), m, cartan.form(a, a), cartan.weight_pairing(weight, a)))
        .collect();

    let mut entries: BTreeMap<RootLatticeElement, u64> = BTreeMap::new();
    entries.insert(RootLatticeElement::zero(n), 1);
    let mut layer = vec![RootLatticeElement::zero(n)];
    for _h in 1..=depth {
        let mut candidates: Vec<RootLatticeElement> =
            layer.iter().flat_map(|b| (0..n).map(move |i| b + &RootLatticeElement::simple(n, i))).collect();
        candidates.sort();
        candidates.dedup();

        let mut next = Vec::new();
        for beta in candidates {
            let denom = rat(2) * (cartan.weight_pairing(weight, &beta) + rat(cartan.rho_pairing(&beta)))
                - rat(cartan.form(&beta, &beta));
            let mut numer = Rational::zero();
            for (alpha, mult, norm, lam_alpha) in &roots {
                if alpha.height() > beta.height() {
                    break;
                }
                let beta_alpha = cartan.form(&beta, alpha);
                let mut k = 1;
                loop {
                    let lower = &beta - &alpha.scale(k);
                    if !lower.is_nonnegative() {
                        break;
                    }
                    let m = entries.get(&lower).copied().unwrap_or(0);
                    if m > 0 {
                        let pairing = lam_alpha - rat(beta_alpha) + rat(k * norm);
                        numer += pairing * rat(m as i64) * rat(*mult as i64);
                    }
                    k += 1;
                }
            }
            numer *= rat(2);
            if denom.is_zero() {
                if numer.is_zero() {
                    continue;
                }
                return Err(Error::FreudenthalDegenerate(beta.to_string()));
            }
            let m = numer / denom;
            assert!(m.is_integer() && !m.is_negative(), "non-integral multiplicity {m} at drop {beta}");
            let m = m.to_integer().to_u64().expect("multiplicity fits in u64");
            if m > 0 {
                entries.insert(beta.clone(), m);
                next.push(beta);
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    Ok(CharacterTable { cartan: cartan.clone(), highest_weight: weight.clone(), depth, entries })
}

/// Character of a tensor product by convolution of drop tables, truncated at `depth`.
pub fn tensor_character(cartan: &CartanData, parts: &[CharacterTable], depth: usize) -> Result<CharacterTable> {
    let mut acc = CharacterTable::trivial(cartan, depth);
    for part in parts {
        if &part.cartan != cartan {
            return Err(Error::ContextMismatch);
        }
        if part.depth < depth && !part.is_complete() {
            return Err(Error::InsufficientDepth { requested: depth, available: part.depth });
        }
        let mut out: BTreeMap<RootLatticeElement, u64> = BTreeMap::new();
        for (b1, m1) in &acc.entries {
            for (b2, m2) in &part.entries {
                let b = b1 + b2;
                if b.height() <= depth as i64 {
                    *out.entry(b).or_insert(0) += m1 * m2;
                }
            }
        }
        acc = CharacterTable {
            cartan: cartan.clone(),
            highest_weight: &acc.highest_weight + &part.highest_weight,
            depth,
            entries: out,
        };
    }
    Ok(acc)
}
