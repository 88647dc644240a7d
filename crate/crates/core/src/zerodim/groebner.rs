use std::collections::BTreeSet;

use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Rational, Ring};

use super::Ideal;

/// Reduced Gröbner basis under graded reverse lexicographic order.
///
/// Elements are monic and sorted by ascending leading monomial, so two bases
/// of the same ideal compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().expect("nonzero basis element"))
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(Polynomial::is_constant)
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.elements.clone()).expect("basis elements share the ring")
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(reduce(p, &self.elements))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Dimension of the quotient when it is finite.
    pub fn quotient_dimension(&self) -> Option<usize> {
        self.standard_monomials().map(|s| s.len())
    }

    pub fn is_cofinite(&self) -> bool {
        self.quotient_dimension().is_some()
    }

    /// Monomials outside the leading-monomial ideal, ascending; `None` when
    /// there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if self.is_unit() {
            return Some(Vec::new());
        }
        let n = self.ring.nvars();
        let mut bounds = vec![None; n];
        for lm in self.leading_monomials() {
            if let Some((i, e)) = lm.pure_power() {
                bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
            }
        }
        let bounds: Vec<u32> = bounds.into_iter().collect::<Option<_>>()?;
        let lms: Vec<&Monomial> = self.leading_monomials().collect();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::new(exps.clone());
            if !lms.iter().any(|lm| lm.divides(&m)) {
                out.push(m);
            }
            // odometer over the bounding box
            let mut k = 0;
            loop {
                if k == n {
                    out.sort();
                    return Some(out);
                }
                exps[k] += 1;
                if exps[k] < bounds[k] {
                    break;
                }
                exps[k] = 0;
                k += 1;
            }
        }
    }
}

/// Full reduction of `p` modulo `basis` (any monic-or-not nonzero list).
pub(crate) fn reduce(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut rest = p.clone();
    let mut out = p.ring().zero();
    let leads: Vec<(&Monomial, Rational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term().expect("nonzero basis element");
            (m, c.recip())
        })
        .collect();
    while let Some((m, c)) = rest.pop_leading() {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let (lm, inv) = &leads[k];
                let shift = lm.quotient_of(&m);
                let factor = &c * inv;
                // the leading term cancels against the popped one
                let mut tail = basis[k].clone();
                tail.pop_leading();
                rest.sub_mul_term(&tail, &shift, &factor);
            }
            None => out.add_term(m, c),
        }
    }
    out
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l), &cf.recip());
    let b = g.mul_term(&mg.quotient_of(&l), &cg.recip());
    &a - &b
}

/// Reduced Gröbner basis of `ideal` (Buchberger with the normal selection strategy).
pub fn buchberger(ideal: &Ideal) -> GroebnerBasis {
    let ring = ideal.ring().clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        let r = reduce(g, &basis).monic();
        if !r.is_zero() && !basis.contains(&r) {
            basis.push(r);
        }
    }
    if basis.iter().any(Polynomial::is_constant) {
        return GroebnerBasis { ring: ring.clone(), elements: vec![ring.one()] };
    }

    // pairs keyed by (lcm, i, j) so the smallest lcm comes first
    let mut pairs: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let lcm_of =
        |b: &[Polynomial], i: usize, j: usize| b[i].leading_monomial().unwrap().lcm(b[j].leading_monomial().unwrap());
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((lcm_of(&basis, i, j), i, j));
        }
    }
    while let Some((_, i, j)) = pairs.pop_first() {
        let (li, lj) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
        if li.is_coprime(lj) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.is_constant() {
            return GroebnerBasis { ring: ring.clone(), elements: vec![ring.one()] };
        }
        basis.push(r);
        let k = basis.len() - 1;
        for i in 0..k {
            pairs.insert((lcm_of(&basis, i, k), i, k));
        }
    }
    GroebnerBasis { ring, elements: interreduce(basis) }
}

fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in sorted {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
        let (lm, lc) = minimal[k].leading_term().unwrap();
        let mut tail = minimal[k].clone();
        tail.pop_leading();
        let mut g = reduce(&tail, &others);
        g.add_term(lm.clone(), lc.clone());
        reduced.push(g.monic());
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    debug_assert!(reduced.iter().all(|g| g.leading_term().is_some_and(|(_, c)| c.is_one())));
    reduced
}

/// Checks the Buchberger criterion: every S-polynomial reduces to zero.
pub fn is_groebner(gb: &GroebnerBasis) -> bool {
    let e = gb.elements();
    (0..e.len()).all(|j| (0..j).all(|i| reduce(&s_polynomial(&e[i], &e[j]), e).is_zero()))
}

/// Checks that no term of any element is divisible by another element's leading monomial.
pub fn is_reduced(gb: &GroebnerBasis) -> bool {
    let e = gb.elements();
    e.iter().enumerate().all(|(k, g)| {
        g.leading_term().is_some_and(|(_, c)| c.is_one())
            && g.terms()
                .all(|(m, _)| e.iter().enumerate().all(|(i, h)| i == k || !h.leading_monomial().unwrap().divides(m)))
    })
}
