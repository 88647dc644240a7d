//! Generalized Cartan matrices, the invariant form, positive roots with
//! multiplicities, and weights given by their coroot pairings.
//!
//! Root multiplicities come from the Peterson recursion
//!
//! ```text
//! (β | β − 2ρ) c_β = Σ_{β'+β''=β} (β' | β'') c_β' c_β''     c_β = Σ_{k≥1} mult(β/k) / k
//! ```
//!
//! which needs nothing beyond the symmetrized matrix, so finite, affine and
//! indefinite types are handled uniformly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::polyring::{rat, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Finite => "finite",
            Kind::Affine => "affine",
            Kind::Indefinite => "indefinite",
        })
    }
}

/// A validated, symmetrizable generalized Cartan matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanData {
    matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    kind: Kind,
}

impl CartanData {
    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Minimal positive integers `d_i` with `d_i a_ij = d_j a_ji` on each component.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// `(α_i, α_j) = d_i a_ij`
    pub fn simple_form(&self, i: usize, j: usize) -> i64 {
        self.symmetrizer[i] * self.matrix[i][j]
    }

    pub fn form(&self, x: &RootLatticeElement, y: &RootLatticeElement) -> i64 {
        let mut s = 0;
        for (i, &xi) in x.0.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.0.iter().enumerate() {
                if yj != 0 {
                    s += xi * yj * self.simple_form(i, j);
                }
            }
        }
        s
    }

    /// `(ρ, β)` where `ρ(h_i) = 1`, i.e. `Σ β_i d_i`.
    pub fn rho_pairing(&self, beta: &RootLatticeElement) -> i64 {
        beta.0.iter().zip(&self.symmetrizer).map(|(b, d)| b * d).sum()
    }

    /// `(λ, β)` for a weight given by coroot pairings: `Σ β_i d_i λ(h_i)`.
    pub fn weight_pairing(&self, weight: &Weight, beta: &RootLatticeElement) -> Rational {
        beta.0
            .iter()
            .zip(&self.symmetrizer)
            .zip(&weight.0)
            .filter(|((b, _), _)| **b != 0)
            .map(|((b, d), l)| l * rat(b * d))
            .sum()
    }

    /// `⟨β, α_i^∨⟩ = Σ_j a_ij β_j`
    pub fn coroot_pairing(&self, i: usize, beta: &RootLatticeElement) -> i64 {
        self.matrix[i].iter().zip(&beta.0).map(|(a, b)| a * b).sum()
    }

    pub fn reflect(&self, i: usize, beta: &RootLatticeElement) -> RootLatticeElement {
        let mut out = beta.clone();
        out.0[i] -= self.coroot_pairing(i, beta);
        out
    }

    pub fn simple_root(&self, i: usize) -> RootLatticeElement {
        RootLatticeElement::simple(self.rank(), i)
    }

    /// True for the Cartan matrix of `sl_{rank+1}` in the standard chain order.
    pub fn is_type_a(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let expected = if i == j {
                    2
                } else if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                };
                self.matrix[i][j] == expected
            })
        })
    }
}

/// Checks the GCM axioms, computes the symmetrizer and classifies the type.
pub fn validate_gcm(matrix: &[Vec<i64>]) -> Result<CartanData> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::NotGcm("empty matrix".into()));
    }
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotGcm(format!("row {} has length {}, expected {n}", i + 1, row.len())));
        }
        if row[i] != 2 {
            return Err(Error::NotGcm(format!("diagonal entry a{0}{0} = {1}", i + 1, row[i])));
        }
        for (j, &a) in row.iter().enumerate() {
            if i == j {
                continue;
            }
            if a > 0 {
                return Err(Error::NotGcm(format!("positive off-diagonal entry a{}{} = {a}", i + 1, j + 1)));
            }
            if (a == 0) != (matrix[j][i] == 0) {
                return Err(Error::NotGcm(format!(
                    "a{}{} = {a} but a{}{} = {}",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1,
                    matrix[j][i]
                )));
            }
        }
    }

    let components = components(matrix);
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for comp in &components {
        d[comp[0]] = Some(Rational::one());
        let mut stack = vec![comp[0]];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && matrix[i][j] != 0 && d[j].is_none() {
                    let dj = d[i].clone().unwrap() * rat(matrix[i][j]) / rat(matrix[j][i]);
                    d[j] = Some(dj);
                    stack.push(j);
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("every index lies in a component")).collect();
    for i in 0..n {
        for j in 0..n {
            if &d[i] * rat(matrix[i][j]) != &d[j] * rat(matrix[j][i]) {
                return Err(Error::NotSymmetrizable);
            }
        }
    }
    let mut symmetrizer = vec![0i64; n];
    for comp in &components {
        let l = comp.iter().fold(BigInt::one(), |acc, &i| acc.lcm(d[i].denom()));
        let scaled: Vec<BigInt> =
            comp.iter().map(|&i| (&d[i] * Rational::from_integer(l.clone())).to_integer()).collect();
        let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, s) in comp.iter().zip(&scaled) {
            symmetrizer[i] = (s / &g).to_i64().expect("symmetrizer fits in i64");
        }
    }

    let sym: Matrix = (0..n).map(|i| (0..n).map(|j| rat(symmetrizer[i] * matrix[i][j])).collect()).collect();
    let kinds: Vec<Kind> = components.iter().map(|c| component_kind(&sym, c)).collect();
    let kind = if kinds.contains(&Kind::Indefinite) {
        Kind::Indefinite
    } else if kinds.contains(&Kind::Affine) {
        Kind::Affine
    } else {
        Kind::Finite
    };
    Ok(CartanData { matrix: matrix.to_vec(), symmetrizer, kind })
}

fn components(matrix: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = matrix.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && matrix[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn principal(sym: &Matrix, idx: &[usize]) -> Matrix {
    idx.iter().map(|&i| idx.iter().map(|&j| sym[i][j].clone()).collect()).collect()
}

fn positive_definite(m: &Matrix) -> bool {
    (1..=m.len()).all(|k| {
        let lead: Matrix = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        linalg::determinant(&lead).is_positive()
    })
}

fn component_kind(sym: &Matrix, comp: &[usize]) -> Kind {
    let block = principal(sym, comp);
    if positive_definite(&block) {
        return Kind::Finite;
    }
    // indecomposable: affine iff singular with every proper principal submatrix of finite type
    let singular = linalg::determinant(&block).is_zero();
    let proper_finite = (0..comp.len()).all(|skip| {
        let idx: Vec<usize> = (0..comp.len()).filter(|&k| k != skip).collect();
        positive_definite(&principal(&block, &idx))
    });
    if singular && proper_finite {
        Kind::Affine
    } else {
        Kind::Indefinite
    }
}

/// Element of the root lattice in simple-root coordinates.
/// Ordered by height, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootLatticeElement(Vec<i64>);

impl RootLatticeElement {
    pub fn new(coords: Vec<i64>) -> Self {
        RootLatticeElement(coords)
    }

    pub fn zero(rank: usize) -> Self {
        RootLatticeElement(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootLatticeElement(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_positive(&self) -> bool {
        self.is_nonnegative() && !self.is_zero()
    }

    pub fn scale(&self, k: i64) -> Self {
        RootLatticeElement(self.0.iter().map(|c| c * k).collect())
    }

    /// `self / k` when every coordinate is divisible by `k`.
    pub fn divide(&self, k: i64) -> Option<Self> {
        self.0.iter().all(|c| c % k == 0).then(|| RootLatticeElement(self.0.iter().map(|c| c / k).collect()))
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All nonnegative elements of the given height, ascending.
    pub fn of_height(rank: usize, height: i64) -> Vec<Self> {
        fn rec(rank: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<RootLatticeElement>) {
            if cur.len() + 1 == rank {
                cur.push(left);
                out.push(RootLatticeElement(cur.clone()));
                cur.pop();
                return;
            }
            for k in 0..=left {
                cur.push(k);
                rec(rank, left - k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if rank > 0 {
            rec(rank, height, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }
}

impl Ord for RootLatticeElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.height().cmp(&other.height()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for RootLatticeElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &RootLatticeElement {
    type Output = RootLatticeElement;
    fn add(self, rhs: &RootLatticeElement) -> RootLatticeElement {
        RootLatticeElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootLatticeElement {
    type Output = RootLatticeElement;
    fn sub(self, rhs: &RootLatticeElement) -> RootLatticeElement {
        RootLatticeElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for RootLatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A weight recorded by its pairings `λ(h_i)` with the simple coroots.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(values: Vec<Rational>) -> Self {
        Weight(values)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Weight(values.iter().map(|&v| rat(v)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant_integral(&self) -> bool {
        is_dominant_integral(self)
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|v| v * c).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn is_dominant_integral(w: &Weight) -> bool {
    w.0.iter().all(|v| v.is_integer() && !v.is_negative())
}

/// Positive roots of height at most `bound` with their multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootTable {
    bound: i64,
    mults: BTreeMap<RootLatticeElement, u64>,
}

impl RootTable {
    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn multiplicity(&self, beta: &RootLatticeElement) -> u64 {
        self.mults.get(beta).copied().unwrap_or(0)
    }

    pub fn contains(&self, beta: &RootLatticeElement) -> bool {
        self.mults.contains_key(beta)
    }

    /// Roots in ascending (height, lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&RootLatticeElement, u64)> {
        self.mults.iter().map(|(b, &m)| (b, m))
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn of_height(&self, h: i64) -> impl Iterator<Item = (&RootLatticeElement, u64)> {
        self.iter().filter(move |(b, _)| b.height() == h)
    }
}

/// Incremental Peterson recursion, one height at a time.
struct Peterson<'a> {
    cartan: &'a CartanData,
    height: i64,
    // c_β for every β where it is nonzero
    c: HashMap<RootLatticeElement, Rational>,
    mults: BTreeMap<RootLatticeElement, u64>,
    last_layer: Vec<RootLatticeElement>,
}

impl<'a> Peterson<'a> {
    fn new(cartan: &'a CartanData) -> Self {
        let n = cartan.rank();
        let mut p = Peterson { cartan, height: 1, c: HashMap::new(), mults: BTreeMap::new(), last_layer: Vec::new() };
        for i in 0..n {
            let a = RootLatticeElement::simple(n, i);
            p.c.insert(a.clone(), Rational::one());
            p.mults.insert(a.clone(), 1);
            p.last_layer.push(a);
        }
        p
    }

    fn multiples_part(&self, beta: &RootLatticeElement) -> Rational {
        let mut s = Rational::zero();
        for k in 2..=beta.height() {
            if let Some(b) = beta.divide(k) {
                if let Some(&m) = self.mults.get(&b) {
                    s += Rational::new(BigInt::from(m), BigInt::from(k));
                }
            }
        }
        s
    }

    fn step(&mut self) {
        let n = self.cartan.rank();
        let h = self.height + 1;
        let mut candidates: Vec<RootLatticeElement> = Vec::new();
        for r in &self.last_layer {
            for i in 0..n {
                candidates.push(r + &RootLatticeElement::simple(n, i));
            }
        }
        for k in 2..=h {
            if h % k == 0 {
                candidates.extend(self.mults.keys().filter(|b| b.height() == h / k).map(|b| b.scale(k)));
            }
        }
        candidates.sort();
        candidates.dedup();

        let mut layer = Vec::new();
        let mut new_c = Vec::new();
        for beta in candidates {
            let multiples = self.multiples_part(&beta);
            let coeff = self.cartan.form(&beta, &beta) - 2 * self.cartan.rho_pairing(&beta);
            let (c_beta, mult) = if coeff == 0 {
                // only simple roots have (β|β−2ρ) = 0 among positive roots
                (multiples, 0)
            } else {
                let mut rhs = Rational::zero();
                for (b1, c1) in &self.c {
                    if !b1.le(&beta) || b1 == &beta {
                        continue;
                    }
                    let b2 = &beta - b1;
                    if let Some(c2) = self.c.get(&b2) {
                        rhs += c1 * c2 * rat(self.cartan.form(b1, &b2));
                    }
                }
                let c_beta = rhs / rat(coeff);
                let m = &c_beta - &multiples;
                assert!(
                    m.is_integer() && !m.is_negative(),
                    "Peterson recursion produced non-integral multiplicity {m} at {beta}"
                );
                (c_beta, m.to_integer().to_u64().expect("multiplicity fits in u64"))
            };
            if !c_beta.is_zero() {
                new_c.push((beta.clone(), c_beta));
            }
            if mult > 0 {
                layer.push((beta, mult));
            }
        }
        self.c.extend(new_c);
        self.last_layer = layer.iter().map(|(b, _)| b.clone()).collect();
        self.mults.extend(layer);
        self.height = h;
    }
}

pub fn roots_up_to_height(cartan: &CartanData, bound: i64) -> RootTable {
    let mut p = Peterson::new(cartan);
    while p.height < bound {
        p.step();
    }
    let mults = if bound < 1 { BTreeMap::new() } else { p.mults };
    RootTable { bound, mults }
}

/// All positive roots of a finite-type matrix.
pub fn positive_roots(cartan: &CartanData) -> Result<RootTable> {
    if cartan.kind() != Kind::Finite {
        return Err(Error::NotFiniteType);
    }
    let mut p = Peterson::new(cartan);
    while !p.last_layer.is_empty() {
        p.step();
    }
    Ok(RootTable { bound: p.height, mults: p.mults })
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dim(cartan: &CartanData, weight: &Weight) -> Result<BigInt> {
    if cartan.kind() != Kind::Finite {
        return Err(Error::NotFiniteType);
    }
    if weight.rank() != cartan.rank() {
        return Err(Error::WeightLength { rank: cartan.rank(), found: weight.rank() });
    }
    if !is_dominant_integral(weight) {
        return Err(Error::NotDominant);
    }
    let roots = positive_roots(cartan)?;
    let mut prod = Rational::one();
    for (alpha, _) in roots.iter() {
        let rho = rat(cartan.rho_pairing(alpha));
        prod *= (cartan.weight_pairing(weight, alpha) + &rho) / rho;
    }
    debug_assert!(prod.is_integer());
    Ok(prod.to_integer())
}
