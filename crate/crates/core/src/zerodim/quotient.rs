use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::polyring::{Monomial, Polynomial, Rational, Ring, UniPoly};

use super::GroebnerBasis;

/// Finite-dimensional quotient `A/I` with its standard-monomial basis.
///
/// Elements are coordinate vectors in that basis. `var_matrix(i)` has as
/// column `j` the coordinates of `x_i * basis[j]`.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    var_mats: Vec<Matrix>,
    // table[a][b] = coordinates of basis[a] * basis[b]
    table: Vec<Vec<Vec<Rational>>>,
}

impl QuotientAlgebra {
    pub fn new(gb: &GroebnerBasis) -> Result<Self> {
        let basis = gb.standard_monomials().ok_or(Error::NotCofinite)?;
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let ring = gb.ring().clone();
        let mut q = QuotientAlgebra { gb: gb.clone(), basis, index, var_mats: Vec::new(), table: Vec::new() };
        let n = q.basis.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for (a, left) in q.basis.iter().enumerate() {
            for (b, right) in q.basis.iter().enumerate().skip(a) {
                let prod = Polynomial::monomial(&ring, left.mul(right), Rational::one());
                let c = q.coords(&prod).expect("same ring");
                table[b][a] = c.clone();
                table[a][b] = c;
            }
        }
        q.table = table;
        q.var_mats = (0..ring.nvars())
            .map(|i| {
                let x = q.coords(&ring.var(i)).expect("same ring");
                q.element_matrix(&x)
            })
            .collect();
        Ok(q)
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn ring(&self) -> &Ring {
        self.gb.ring()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn basis_label(&self, k: usize) -> String {
        self.basis[k].display(self.ring()).to_string()
    }

    pub fn var_matrix(&self, i: usize) -> &Matrix {
        &self.var_mats[i]
    }

    /// Coordinates of the normal form of `p`.
    pub fn coords(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        let nf = self.gb.normal_form(p)?;
        let mut out = vec![Rational::zero(); self.dim()];
        for (m, c) in nf.terms() {
            let k = self.index[m];
            out[k] = c.clone();
        }
        Ok(out)
    }

    pub fn to_polynomial(&self, coords: &[Rational]) -> Polynomial {
        Polynomial::from_terms(self.ring(), self.basis.iter().cloned().zip(coords.iter().cloned()))
    }

    pub fn one(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        if let Some(first) = v.first_mut() {
            *first = Rational::one();
        }
        v
    }

    pub fn unit_vector(&self, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[k] = Rational::one();
        v
    }

    /// Coordinates of `basis[a] * basis[b]`.
    pub fn basis_product(&self, a: usize, b: usize) -> &[Rational] {
        &self.table[a][b]
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let f = xa * yb;
                for (o, t) in out.iter_mut().zip(&self.table[a][b]) {
                    if !t.is_zero() {
                        *o += &f * t;
                    }
                }
            }
        }
        out
    }

    /// Matrix of multiplication by the element `x`.
    pub fn element_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.mul(x, &self.unit_vector(j))).collect();
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Monic minimal polynomial of the image of variable `var`.
    pub fn minimal_polynomial(&self, var: usize) -> Result<UniPoly> {
        if var >= self.ring().nvars() {
            return Err(Error::IndexOutOfRange { index: var, size: self.ring().nvars() });
        }
        let x = self.coords(&self.ring().var(var))?;
        Ok(self.minimal_polynomial_of(&x))
    }

    /// Monic minimal polynomial of an element, from the first linear
    /// dependence among `1, x, x^2, ...`.
    pub fn minimal_polynomial_of(&self, x: &[Rational]) -> UniPoly {
        if self.dim() == 0 {
            return UniPoly::from_ints(&[1]);
        }
        let mut powers = vec![self.one()];
        loop {
            let next = self.mul(x, powers.last().unwrap());
            powers.push(next);
            let k = powers.len();
            // columns are the powers
            let m: Matrix = (0..self.dim()).map(|i| powers.iter().map(|p| p[i].clone()).collect()).collect();
            let ns = linalg::nullspace(&m, k);
            if let Some(v) = ns.into_iter().next() {
                return UniPoly::new(v).monic();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{frac, rat};
    use crate::zerodim::Ideal;

    fn quotient(vars: &[&str], gens: &[&str]) -> QuotientAlgebra {
        let gb = Ideal::parse(&Ring::new(vars), gens).unwrap().groebner();
        QuotientAlgebra::new(&gb).unwrap()
    }

    fn ints(m: &[&[i64]]) -> Matrix {
        m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn multiplication_matrix_examples() {
        let q = quotient(&["t"], &["t^2-1"]);
        assert_eq!(q.basis().len(), 2);
        assert_eq!(q.basis_label(0), "1");
        assert_eq!(q.basis_label(1), "t");
        assert_eq!(q.var_matrix(0), &ints(&[&[0, 1], &[1, 0]]));

        let q = quotient(&["t"], &["t^2"]);
        assert_eq!(q.var_matrix(0), &ints(&[&[0, 0], &[1, 0]]));

        let q = quotient(&["x", "y"], &["x", "y^2-1"]);
        assert_eq!(q.basis_label(1), "y");
        assert_eq!(q.var_matrix(0), &ints(&[&[0, 0], &[0, 0]]));
    }

    #[test]
    fn not_cofinite() {
        let gb = Ideal::parse(&Ring::new(&["x", "y"]), &["x"]).unwrap().groebner();
        assert!(matches!(QuotientAlgebra::new(&gb), Err(Error::NotCofinite)));
    }

    #[test]
    fn minimal_polynomial_examples() {
        let q = quotient(&["t"], &["t^2-1"]);
        assert_eq!(q.minimal_polynomial(0).unwrap(), UniPoly::from_ints(&[-1, 0, 1]));
        let q = quotient(&["t"], &["t^2"]);
        assert_eq!(q.minimal_polynomial(0).unwrap(), UniPoly::from_ints(&[0, 0, 1]));
        let q = quotient(&["x", "y"], &["x-y", "y^2-1/2"]);
        assert_eq!(q.minimal_polynomial(0).unwrap(), UniPoly::new(vec![frac(-1, 2), rat(0), rat(1)]));
        assert!(matches!(q.minimal_polynomial(2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn variable_matrix_applied_to_one_is_the_variable() {
        let q = quotient(&["x", "y"], &["x^2 - y", "y^2 - x*y", "x^3"]);
        for i in 0..2 {
            let image = linalg::mat_vec(q.var_matrix(i), &q.one());
            assert_eq!(image, q.coords(&q.ring().var(i)).unwrap());
        }
        // matrices commute
        let (a, b) = (q.var_matrix(0), q.var_matrix(1));
        assert_eq!(linalg::mat_mul(a, b), linalg::mat_mul(b, a));
    }
}
