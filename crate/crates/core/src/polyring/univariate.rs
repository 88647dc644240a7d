use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rat, Monomial, Polynomial, Rational, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients from the constant term upward.
/// The coefficient vector never has a trailing zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(lc) => {
                let inv = lc.recip();
                UniPoly { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
            None => UniPoly::zero(),
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lc_inv;
            if !c.is_zero() {
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + k] -= &c * d;
                }
                quot[top - dd] = c;
            }
            rem.pop();
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd by the Euclidean algorithm. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Monic `p / gcd(p, p')`.
    pub fn squarefree(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Distinct rational roots in ascending order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let ints = integer_coefficients(&self.squarefree());
        let mut roots = Vec::new();
        let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
        if low > 0 {
            roots.push(Rational::zero());
        }
        let ints = &ints[low..];
        if ints.len() > 1 {
            let p_div = divisors(&ints[0].abs());
            let q_div = divisors(&ints[ints.len() - 1].abs());
            let poly = UniPoly::new(ints.iter().map(|c| Rational::from_integer(c.clone())).collect());
            for p in &p_div {
                for q in &q_div {
                    if !p.gcd(q).is_one() {
                        continue;
                    }
                    for cand in [Rational::new(p.clone(), q.clone()), Rational::new(-p.clone(), q.clone())] {
                        if poly.eval(&cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// Embeds as a polynomial in variable `var` of `ring`.
    pub fn to_polynomial(&self, ring: &Ring, var: usize) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.coeffs.iter().enumerate().map(|(e, c)| {
                let mut exps = vec![0; ring.nvars()];
                exps[var] = e as u32;
                (Monomial::new(exps), c.clone())
            }),
        )
    }

    /// Reads a polynomial that involves only variable `var`.
    pub fn from_polynomial(p: &Polynomial, var: usize) -> Result<UniPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in p.terms() {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &x)| i != var && x > 0) {
                return Err(Error::NotUnivariate);
            }
            let d = e.get(var).copied().unwrap_or(0) as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = Ring::new(&["z"]);
        write!(f, "{}", self.to_polynomial(&ring, 0))
    }
}

/// Squarefree part of a polynomial involving at most one variable,
/// returned monic in the same ring.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars = p.support_vars();
    match vars.as_slice() {
        [] => Ok(p.ring().one()),
        [v] => Ok(UniPoly::from_polynomial(p, *v)?.squarefree().to_polynomial(p.ring(), *v)),
        _ => Err(Error::NotUnivariate),
    }
}

fn integer_coefficients(p: &UniPoly) -> Vec<BigInt> {
    let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if let Some(small) = n.to_u128() {
        let mut out = Vec::new();
        let mut d: u128 = 1;
        while d * d <= small {
            if small % d == 0 {
                out.push(BigInt::from(d));
                if d * d != small {
                    out.push(BigInt::from(small / d));
                }
            }
            d += 1;
        }
        return out;
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            if &d * &d != *n {
                out.push(n / &d);
            }
        }
        d += 1;
    }
    out
}
