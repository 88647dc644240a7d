use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::liecore::RootLatticeElement;
use crate::polyring::{rat, Rational};
use crate::zerodim::QuotientAlgebra;

/// `E_{row,col} ⊗ basis_k` in `gl_{n+1} ⊗ A/I`, indices zero-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator {
    pub row: usize,
    pub col: usize,
    pub basis: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorKind {
    Raising,
    Lowering,
    Diagonal,
}

impl Generator {
    pub fn new(row: usize, col: usize, basis: usize) -> Self {
        Generator { row, col, basis }
    }

    /// `e_i ⊗ basis_k`
    pub fn raising(i: usize, basis: usize) -> Self {
        Generator::new(i, i + 1, basis)
    }

    /// `f_i ⊗ basis_k`
    pub fn lowering(i: usize, basis: usize) -> Self {
        Generator::new(i + 1, i, basis)
    }

    pub fn kind(&self) -> GeneratorKind {
        match self.row.cmp(&self.col) {
            std::cmp::Ordering::Less => GeneratorKind::Raising,
            std::cmp::Ordering::Greater => GeneratorKind::Lowering,
            std::cmp::Ordering::Equal => GeneratorKind::Diagonal,
        }
    }

    /// Image under the anti-involution `E_pq ⊗ a ↦ E_qp ⊗ a`.
    pub fn transpose(&self) -> Self {
        Generator::new(self.col, self.row, self.basis)
    }

    /// Positive root `α_p + ... + α_{q-1}` attached to `E_pq` and `E_qp`; zero for diagonal units.
    pub fn root(&self, rank: usize) -> RootLatticeElement {
        let (lo, hi) = (self.row.min(self.col), self.row.max(self.col));
        RootLatticeElement::new((0..rank).map(|i| i64::from(lo <= i && i < hi)).collect())
    }
}

/// Linear combination of generators.
pub type LieElement = Vec<(Generator, Rational)>;

/// `h_i ⊗ basis_k = (E_ii − E_{i+1,i+1}) ⊗ basis_k`
pub fn coroot_element(i: usize, basis: usize) -> LieElement {
    vec![(Generator::new(i, i, basis), rat(1)), (Generator::new(i + 1, i + 1, basis), rat(-1))]
}

/// `gl_{n+1} ⊗ A/I` with exact structure constants.
#[derive(Clone, Debug)]
pub struct CurrentAlgebra {
    rank: usize,
    quotient: QuotientAlgebra,
}

impl CurrentAlgebra {
    pub fn new(rank: usize, quotient: QuotientAlgebra) -> Self {
        CurrentAlgebra { rank, quotient }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix_size(&self) -> usize {
        self.rank + 1
    }

    pub fn quotient(&self) -> &QuotientAlgebra {
        &self.quotient
    }

    /// Every `E_pq ⊗ basis_k` with `p ≠ q`.
    pub fn root_generators(&self) -> Vec<Generator> {
        let size = self.matrix_size();
        let mut out = Vec::new();
        for row in 0..size {
            for col in 0..size {
                if row != col {
                    out.extend((0..self.quotient.dim()).map(|k| Generator::new(row, col, k)));
                }
            }
        }
        out
    }

    /// `[E_pq ⊗ a, E_rs ⊗ b] = δ_qr E_ps ⊗ ab − δ_sp E_rq ⊗ ab`
    pub fn bracket(&self, x: &Generator, y: &Generator) -> LieElement {
        let product = self.quotient.basis_product(x.basis, y.basis);
        let mut acc: BTreeMap<Generator, Rational> = BTreeMap::new();
        for (k, c) in product.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if x.col == y.row {
                *acc.entry(Generator::new(x.row, y.col, k)).or_insert_with(Rational::zero) += c;
            }
            if y.col == x.row {
                *acc.entry(Generator::new(y.row, x.col, k)).or_insert_with(Rational::zero) -= c;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn bracket_elements(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut acc: BTreeMap<Generator, Rational> = BTreeMap::new();
        for (gx, cx) in x {
            for (gy, cy) in y {
                for (g, c) in self.bracket(gx, gy) {
                    *acc.entry(g).or_insert_with(Rational::zero) += c * cx * cy;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn label(&self, g: &Generator) -> GeneratorLabel<'_> {
        GeneratorLabel { algebra: self, generator: *g }
    }
}

pub struct GeneratorLabel<'a> {
    algebra: &'a CurrentAlgebra,
    generator: Generator,
}

impl fmt::Display for GeneratorLabel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.generator;
        write!(f, "E{},{}⊗{}", g.row + 1, g.col + 1, self.algebra.quotient.basis_label(g.basis))
    }
}
