use num_traits::Zero;

use crate::liecore::RootLatticeElement;
use crate::linalg::{self, Matrix};
use crate::polyring::Rational;
use crate::zerodim::QuotientAlgebra;

use super::{coroot_element, Generator, LieElement, ModuleOracle, PbwVector};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Nilpotency {
    /// Smallest `k` with `x^k · v = 0` in `V(ψ)`.
    Nilpotent(u32),
    NotNilpotentUpTo(u32),
}

/// `I_i = {a : (f_i ⊗ a) · v = 0 in V(ψ)}` inside `A/I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecoveredIdeal {
    pub coroot: usize,
    pub basis: Vec<Vec<Rational>>,
    pub codimension: usize,
    /// `dim V(ψ)_{λ−α_i}`
    pub weight_space_dim: usize,
    pub closure_codimension: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnnihilatorReport {
    /// `g' ⊗ I₀` kills every weight vector of height below the probe depth.
    pub annihilates: bool,
    /// Basis (row echelon) of the ideal generated by the candidates in `A/I`.
    pub closure: Vec<Vec<Rational>>,
    pub psi_vanishes_on_closure: bool,
    pub recovered: Vec<RecoveredIdeal>,
    /// `I_1² I_2² ... I_l²` inside `A/I`.
    pub product: Vec<Vec<Rational>>,
    pub psi_vanishes_on_product: bool,
}

fn span(vectors: Vec<Vec<Rational>>, dim: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m: Matrix = vectors.into_iter().filter(|v| v.len() == dim).collect();
    linalg::rref(&m).0
}

/// Linear span of `{a · b_k}`: the ideal generated by `elements` in `A/I`.
pub fn ideal_span(q: &QuotientAlgebra, elements: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let products = elements.iter().flat_map(|a| (0..q.dim()).map(move |k| q.mul(a, &q.unit_vector(k)))).collect();
    span(products, q.dim())
}

fn product_span(q: &QuotientAlgebra, left: &[Vec<Rational>], right: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let products = left.iter().flat_map(|a| right.iter().map(move |b| q.mul(a, b))).collect();
    span(products, q.dim())
}

/// `E_pq ⊗ a` for `a` given in standard-monomial coordinates.
pub fn root_element(row: usize, col: usize, a: &[Rational]) -> LieElement {
    a.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (Generator::new(row, col, k), c.clone())).collect()
}

/// `h_i ⊗ a`
pub fn coroot_times(i: usize, a: &[Rational]) -> LieElement {
    a.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .flat_map(|(k, c)| coroot_element(i, k).into_iter().map(move |(g, s)| (g, s * c)))
        .collect()
}

impl ModuleOracle {
    /// Smallest `k ≤ max_power` with `x^k · start = 0` in `V(ψ)`, counting from `k = 0`.
    pub fn nilpotency_probe(&mut self, x: &LieElement, start: &PbwVector, max_power: u32) -> Nilpotency {
        let mut v = start.clone();
        for k in 0..=max_power {
            if self.is_zero_in_irreducible(&v) {
                return Nilpotency::Nilpotent(k);
            }
            if k < max_power {
                v = self.act_element(x, &v);
            }
        }
        Nilpotency::NotNilpotentUpTo(max_power)
    }

    /// Checks `(g' ⊗ I₀) · V(ψ) = 0` on weight spaces of height below `depth`,
    /// where `I₀` is the ideal of `A/I` generated by `candidates`, and recovers
    /// the ideals `I_i` from the height-one weight spaces.
    ///
    /// Each weight space is tested on its chosen basis; the radical is a
    /// submodule, so this covers every PBW vector of that weight.
    pub fn annihilator_probe(&mut self, candidates: &[Vec<Rational>], depth: usize) -> AnnihilatorReport {
        let q = self.algebra.quotient().clone();
        let rank = self.rank();
        let size = self.algebra.matrix_size();
        let closure = ideal_span(&q, candidates);

        let mut elements: Vec<LieElement> = Vec::new();
        for a in &closure {
            for row in 0..size {
                for col in 0..size {
                    if row != col {
                        elements.push(root_element(row, col, a));
                    }
                }
            }
            elements.extend((0..rank).map(|i| coroot_times(i, a)));
        }

        let mut annihilates = true;
        'heights: for h in 0..depth as i64 {
            let mut layer_empty = true;
            for beta in RootLatticeElement::of_height(rank, h) {
                let basis = self.level(&beta).vectors.clone();
                layer_empty &= basis.is_empty();
                for r in &basis {
                    for x in &elements {
                        let image = self.act_element(x, r);
                        if !self.is_zero_in_irreducible(&image) {
                            annihilates = false;
                            break 'heights;
                        }
                    }
                }
            }
            if layer_empty {
                break;
            }
        }

        let psi_vanishes_on_closure = closure.iter().all(|a| (0..rank).all(|i| self.spec.apply(i, a).is_zero()));

        let mut recovered = Vec::new();
        for i in 0..rank {
            let alpha = RootLatticeElement::simple(rank, i);
            let columns: Vec<Vec<Rational>> = (0..q.dim())
                .map(|k| {
                    let v = self.act(&Generator::lowering(i, k), &PbwVector::vacuum());
                    self.pairing_vector(&alpha, &v)
                })
                .collect();
            let weight_space_dim = self.weight_dimension(&alpha);
            let m: Matrix = (0..weight_space_dim).map(|j| columns.iter().map(|c| c[j].clone()).collect()).collect();
            let basis = if weight_space_dim == 0 {
                (0..q.dim()).map(|k| q.unit_vector(k)).collect()
            } else {
                linalg::nullspace(&m, q.dim())
            };
            let closure_codimension = q.dim() - ideal_span(&q, &basis).len();
            recovered.push(RecoveredIdeal {
                coroot: i,
                codimension: q.dim() - basis.len(),
                basis,
                weight_space_dim,
                closure_codimension,
            });
        }

        let mut product = if q.dim() == 0 { Vec::new() } else { vec![q.one()] };
        for r in &recovered {
            product = product_span(&q, &product, &r.basis);
            product = product_span(&q, &product, &r.basis);
        }
        let psi_vanishes_on_product = product.iter().all(|a| (0..rank).all(|i| self.spec.apply(i, a).is_zero()));

        AnnihilatorReport { annihilates, closure, psi_vanishes_on_closure, recovered, product, psi_vanishes_on_product }
    }
}
