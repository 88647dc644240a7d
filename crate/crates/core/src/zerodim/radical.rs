use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::polyring::{Polynomial, Rational};

use super::{buchberger, GroebnerBasis, Ideal, QuotientAlgebra};

/// Radical of a zero-dimensional ideal: adjoin the squarefree part of each
/// variable's minimal polynomial and recompute the reduced basis.
pub fn radical_zero_dim(gb: &GroebnerBasis) -> Result<GroebnerBasis> {
    let q = QuotientAlgebra::new(gb)?;
    let ring = gb.ring();
    let mut gens = gb.elements().to_vec();
    for i in 0..ring.nvars() {
        let m = q.minimal_polynomial(i)?;
        gens.push(m.squarefree().to_polynomial(ring, i));
    }
    Ok(buchberger(&Ideal::new(ring, gens)?))
}

/// Generators of `a * b`: all pairwise products.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let mut gens = Vec::with_capacity(a.generators().len() * b.generators().len());
    for f in a.generators() {
        for g in b.generators() {
            gens.push(f * g);
        }
    }
    Ideal::new(a.ring(), gens)
}

/// Rational points of a radical zero-dimensional ideal, sorted lexicographically.
///
/// Fails with `NonRationalPoint` when fewer than `dim A/J` rational points exist.
pub fn maximal_points(radical: &GroebnerBasis) -> Result<Vec<Vec<Rational>>> {
    let q = QuotientAlgebra::new(radical)?;
    let n = radical.ring().nvars();
    let candidates: Vec<Vec<Rational>> =
        (0..n).map(|i| q.minimal_polynomial(i).map(|m| m.rational_roots())).collect::<Result<_>>()?;

    let mut points = Vec::new();
    if q.dim() > 0 {
        let mut idx = vec![0usize; n];
        'grid: loop {
            if candidates.iter().any(Vec::is_empty) {
                break;
            }
            let pt: Vec<Rational> = idx.iter().zip(&candidates).map(|(&k, c)| c[k].clone()).collect();
            if radical.elements().iter().all(|g| g.eval(&pt).map(|v| v.is_zero()).unwrap_or(false)) {
                points.push(pt);
            }
            let mut k = 0;
            loop {
                if k == n {
                    break 'grid;
                }
                idx[k] += 1;
                if idx[k] < candidates[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
    points.sort();
    if points.len() != q.dim() {
        return Err(Error::NonRationalPoint { found: points.len(), dimension: q.dim() });
    }
    Ok(points)
}

/// Idempotents `e_j` of `A/J` with `e_j(point_m) = δ_jm`, in standard-monomial coordinates.
pub fn crt_idempotents(q: &QuotientAlgebra, points: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = q.dim();
    if points.len() != n {
        return Err(Error::SingularEvaluation);
    }
    let eval: Matrix = points
        .iter()
        .map(|pt| {
            q.basis()
                .iter()
                .map(|m| Polynomial::monomial(q.ring(), m.clone(), Rational::one()).eval(pt))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    (0..n)
        .map(|j| {
            let mut rhs = vec![Rational::zero(); n];
            rhs[j] = Rational::one();
            linalg::solve(&eval, &rhs).ok_or(Error::SingularEvaluation)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{frac, rat, Ring};

    fn gb(vars: &[&str], gens: &[&str]) -> GroebnerBasis {
        Ideal::parse(&Ring::new(vars), gens).unwrap().groebner()
    }

    fn strings(g: &GroebnerBasis) -> Vec<String> {
        g.elements().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn radical_examples() {
        assert_eq!(strings(&radical_zero_dim(&gb(&["t"], &["t^2"])).unwrap()), ["t"]);
        assert_eq!(strings(&radical_zero_dim(&gb(&["x", "y"], &["x^2", "y^2-1"])).unwrap()), ["x", "y^2 - 1"]);
        assert_eq!(strings(&radical_zero_dim(&gb(&["t"], &["t-1"])).unwrap()), ["t - 1"]);
        assert!(matches!(radical_zero_dim(&gb(&["x", "y"], &["x"])), Err(Error::NotCofinite)));
    }

    #[test]
    fn product_examples() {
        let r = Ring::new(&["t"]);
        let p = ideal_product(&Ideal::parse(&r, &["t-1"]).unwrap(), &Ideal::parse(&r, &["t+1"]).unwrap()).unwrap();
        let g = p.groebner();
        assert_eq!(strings(&g), ["t^2 - 1"]);
        assert_eq!(g.quotient_dimension(), Some(2));

        let r2 = Ring::new(&["x", "y"]);
        let m = Ideal::parse(&r2, &["x", "y"]).unwrap();
        let g = ideal_product(&m, &m).unwrap().groebner();
        assert_eq!(g.quotient_dimension(), Some(3));
        let labels: Vec<String> = g.standard_monomials().unwrap().iter().map(|m| m.display(&r2).to_string()).collect();
        assert_eq!(labels, ["1", "y", "x"]);

        let i = Ideal::parse(&r2, &["x^2 - y", "y^3"]).unwrap();
        let same = ideal_product(&i, &Ideal::unit(&r2)).unwrap();
        assert_eq!(same.groebner(), i.groebner());
    }

    #[test]
    fn point_examples() {
        assert_eq!(maximal_points(&gb(&["t"], &["t^2-1"])).unwrap(), vec![vec![rat(-1)], vec![rat(1)]]);
        assert_eq!(
            maximal_points(&gb(&["x", "y"], &["x", "y^2-1"])).unwrap(),
            vec![vec![rat(0), rat(-1)], vec![rat(0), rat(1)]]
        );
        assert_eq!(maximal_points(&gb(&["t"], &["t^2-2"])), Err(Error::NonRationalPoint { found: 0, dimension: 2 }));
        // one rational point and one irrational pair
        assert_eq!(maximal_points(&gb(&["t"], &["t^3-2*t"])), Err(Error::NonRationalPoint { found: 1, dimension: 3 }));
    }

    #[test]
    fn idempotent_examples() {
        let g = gb(&["t"], &["t^2-1"]);
        let q = QuotientAlgebra::new(&g).unwrap();
        let e = crt_idempotents(&q, &[vec![rat(1)], vec![rat(-1)]]).unwrap();
        assert_eq!(e, vec![vec![frac(1, 2), frac(1, 2)], vec![frac(1, 2), frac(-1, 2)]]);

        let g = gb(&["t"], &["t-3"]);
        let q = QuotientAlgebra::new(&g).unwrap();
        assert_eq!(crt_idempotents(&q, &[vec![rat(3)]]).unwrap(), vec![vec![rat(1)]]);

        let g = gb(&["x", "y"], &["x", "y^2-1"]);
        let q = QuotientAlgebra::new(&g).unwrap();
        let e = crt_idempotents(&q, &[vec![rat(0), rat(1)], vec![rat(0), rat(-1)]]).unwrap();
        assert_eq!(q.to_polynomial(&e[0]).to_string(), "1/2*y + 1/2");
        assert_eq!(q.to_polynomial(&e[1]).to_string(), "-1/2*y + 1/2");

        assert_eq!(crt_idempotents(&q, &[vec![rat(0), rat(1)]]), Err(Error::SingularEvaluation));
        assert_eq!(crt_idempotents(&q, &[vec![rat(0), rat(1)], vec![rat(0), rat(1)]]), Err(Error::SingularEvaluation));
    }
}
