//! Brute-force model of `V(ψ)` for `sl_{n+1} ⊗ A/I`.
//!
//! The Verma-type module `M(ψ)` is realized on ordered PBW monomials in the
//! lowering generators `E_qp ⊗ m` (`q > p`, `m` a standard monomial). The
//! irreducible quotient is `M(ψ)` modulo the radical of the contravariant form
//! attached to the transpose anti-involution, so weight dimensions of `V(ψ)` are
//! Gram ranks.
//!
//! The action is that of `gl_{n+1} ⊗ A/I`; the diagonal unit `E_pp ⊗ b` acts on
//! the vacuum by `Σ_{i≥p} ψ(h_i ⊗ b)`, which restricts to `ψ` on `h_i = E_ii − E_{i+1,i+1}`.

mod algebra;
mod pbw;
mod probe;

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::classify::PsiSpec;
use crate::error::{Error, Result};
use crate::hwchar::CharacterTable;
use crate::liecore::{RootLatticeElement, Weight};
use crate::linalg::{self, Matrix};
use crate::polyring::Rational;

pub use algebra::{coroot_element, CurrentAlgebra, Generator, GeneratorKind, LieElement};
pub use pbw::{PbwMonomial, PbwVector};
pub use probe::{coroot_times, ideal_span, root_element, AnnihilatorReport, Nilpotency, RecoveredIdeal};

/// Spanning data for one weight space of `V(ψ)`: vectors of `M(ψ)` whose
/// images form a basis, each of the form `(f_i ⊗ b_k) · r` with `r` from the
/// level below.
#[derive(Debug)]
struct Level {
    vectors: Vec<PbwVector>,
    parents: Vec<Parent>,
}

#[derive(Clone, Copy, Debug)]
struct Parent {
    coroot: usize,
    basis: usize,
    index: usize,
}

#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub drop: RootLatticeElement,
    pub monomials: Vec<PbwMonomial>,
    pub matrix: Matrix,
    pub rank: usize,
}

pub struct ModuleOracle {
    spec: PsiSpec,
    algebra: CurrentAlgebra,
    lowering: Vec<Generator>,
    lowering_roots: Vec<RootLatticeElement>,
    lowering_ids: HashMap<Generator, u16>,
    // diagonal[p][k] = action of E_pp ⊗ basis_k on the vacuum
    diagonal: Vec<Vec<Rational>>,
    actions: HashMap<(Generator, PbwMonomial), Rc<PbwVector>>,
    levels: HashMap<RootLatticeElement, Rc<Level>>,
    pairings: HashMap<PbwMonomial, Rc<Vec<Rational>>>,
}

impl ModuleOracle {
    pub fn new(spec: &PsiSpec) -> Result<Self> {
        let cartan = spec.cartan();
        if !cartan.is_type_a() {
            return Err(Error::UnsupportedOracleType(format!("{:?}", cartan.matrix())));
        }
        let rank = cartan.rank();
        let quotient = spec.quotient().clone();
        let dim = quotient.dim();
        let mut lowering: Vec<Generator> = Vec::new();
        for col in 0..=rank {
            for row in col + 1..=rank {
                lowering.extend((0..dim).map(|k| Generator::new(row, col, k)));
            }
        }
        lowering.sort_by(|a, b| a.root(rank).cmp(&b.root(rank)).then(a.basis.cmp(&b.basis)));
        let lowering_roots = lowering.iter().map(|g| g.root(rank)).collect();
        let lowering_ids = lowering.iter().enumerate().map(|(i, g)| (*g, i as u16)).collect();
        let diagonal = (0..=rank)
            .map(|p| (0..dim).map(|k| (p..rank).map(|i| spec.values()[i][k].clone()).sum()).collect())
            .collect();
        Ok(ModuleOracle {
            spec: spec.clone(),
            algebra: CurrentAlgebra::new(rank, quotient),
            lowering,
            lowering_roots,
            lowering_ids,
            diagonal,
            actions: HashMap::new(),
            levels: HashMap::new(),
            pairings: HashMap::new(),
        })
    }

    pub fn spec(&self) -> &PsiSpec {
        &self.spec
    }

    pub fn algebra(&self) -> &CurrentAlgebra {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    /// Lowering generators in PBW order: root by (height, lexicographic), then basis index.
    pub fn lowering_generators(&self) -> &[Generator] {
        &self.lowering
    }

    /// Straightened `g_1 g_2 ... g_k · v` for generators in any order.
    pub fn word(&mut self, generators: &[Generator]) -> PbwVector {
        let mut v = PbwVector::vacuum();
        for g in generators.iter().rev() {
            v = self.act(g, &v);
        }
        v
    }

    pub fn drop_of(&self, m: &PbwMonomial) -> RootLatticeElement {
        m.factors()
            .iter()
            .fold(RootLatticeElement::zero(self.rank()), |acc, &g| &acc + &self.lowering_roots[g as usize])
    }

    pub fn describe(&self, v: &PbwVector) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = v
            .terms()
            .map(|(m, c)| {
                let word: Vec<String> = m
                    .factors()
                    .iter()
                    .map(|&g| format!("({})", self.algebra.label(&self.lowering[g as usize])))
                    .collect();
                format!("{c}*{}v", word.concat())
            })
            .collect();
        terms.join(" + ")
    }

    /// Straightened `x · v`.
    pub fn act(&mut self, x: &Generator, v: &PbwVector) -> PbwVector {
        let mut out = PbwVector::zero();
        for (m, c) in v.terms() {
            let image = self.act_monomial(x, m);
            out.add_scaled(&image, c);
        }
        out
    }

    pub fn act_element(&mut self, x: &LieElement, v: &PbwVector) -> PbwVector {
        let mut out = PbwVector::zero();
        for (g, c) in x {
            let image = self.act(g, v);
            out.add_scaled(&image, c);
        }
        out
    }

    fn act_monomial(&mut self, x: &Generator, m: &PbwMonomial) -> Rc<PbwVector> {
        let key = (*x, m.clone());
        if let Some(hit) = self.actions.get(&key) {
            return Rc::clone(hit);
        }
        let result = self.straighten(x, m);
        let result = Rc::new(result);
        self.actions.insert(key, Rc::clone(&result));
        result
    }

    fn straighten(&mut self, x: &Generator, m: &PbwMonomial) -> PbwVector {
        let Some((first, rest)) = m.split_first() else {
            return match x.kind() {
                GeneratorKind::Lowering => PbwVector::monomial(PbwMonomial::new(vec![self.lowering_ids[x]])),
                GeneratorKind::Raising => PbwVector::zero(),
                GeneratorKind::Diagonal => PbwVector::vacuum().scale(&self.diagonal[x.row][x.basis]),
            };
        };
        if x.kind() == GeneratorKind::Lowering {
            let id = self.lowering_ids[x];
            if id <= first {
                return PbwVector::monomial(m.prepend(id));
            }
        }
        // x·g·rest = g·(x·rest) + [x, g]·rest
        let g = self.lowering[first as usize];
        let inner = self.act_monomial(x, &rest);
        let mut out = self.act(&g, &inner);
        for (y, c) in self.algebra.bracket(x, &g) {
            let image = self.act_monomial(&y, &rest);
            out.add_scaled(&image, &c);
        }
        out
    }

    /// All PBW monomials of drop `beta`, sorted.
    pub fn pbw_monomials(&self, beta: &RootLatticeElement) -> Vec<PbwMonomial> {
        fn walk(
            oracle: &ModuleOracle,
            remaining: &RootLatticeElement,
            min: usize,
            prefix: &mut Vec<u16>,
            out: &mut Vec<PbwMonomial>,
        ) {
            if remaining.is_zero() {
                out.push(PbwMonomial::new(prefix.clone()));
                return;
            }
            for id in min..oracle.lowering.len() {
                let root = &oracle.lowering_roots[id];
                if root.le(remaining) {
                    prefix.push(id as u16);
                    walk(oracle, &(remaining - root), id, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        if beta.is_nonnegative() {
            walk(self, beta, 0, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }

    /// Contravariant form: the vacuum coefficient of `σ(u) · w`.
    pub fn form(&mut self, u: &PbwVector, w: &PbwVector) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in u.terms() {
            let mut y = w.clone();
            for &g in m.factors() {
                let raise = self.lowering[g as usize].transpose();
                y = self.act(&raise, &y);
                if y.is_zero() {
                    break;
                }
            }
            total += c * y.vacuum_coeff();
        }
        total
    }

    /// Gram matrix of the contravariant form on the PBW monomials of drop `beta`.
    pub fn shapovalov_gram(&mut self, beta: &RootLatticeElement) -> GramMatrix {
        let monomials = self.pbw_monomials(beta);
        let vectors: Vec<PbwVector> = monomials.iter().cloned().map(PbwVector::monomial).collect();
        let n = vectors.len();
        let mut matrix = linalg::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                let value = self.form(&vectors[a], &vectors[b]);
                matrix[b][a] = value.clone();
                matrix[a][b] = value;
            }
        }
        let rank = linalg::rank(&matrix);
        GramMatrix { drop: beta.clone(), monomials, matrix, rank }
    }

    /// `dim V(ψ)_{λ−β}`.
    pub fn weight_dimension(&mut self, beta: &RootLatticeElement) -> usize {
        if !beta.is_nonnegative() {
            return 0;
        }
        self.level(beta).vectors.len()
    }

    /// Weight dimensions of `V(ψ)` for all drops of height at most `depth`.
    pub fn irreducible_character(&mut self, depth: usize) -> CharacterTable {
        let rank = self.rank();
        let mut entries = vec![(RootLatticeElement::zero(rank), 1)];
        for h in 1..=depth as i64 {
            let layer: Vec<(RootLatticeElement, u64)> = RootLatticeElement::of_height(rank, h)
                .into_iter()
                .map(|b| {
                    let d = self.weight_dimension(&b) as u64;
                    (b, d)
                })
                .filter(|(_, d)| *d > 0)
                .collect();
            if layer.is_empty() {
                break;
            }
            entries.extend(layer);
        }
        let top = Weight::new(self.spec.values().iter().map(|row| row.first().cloned().unwrap_or_default()).collect());
        CharacterTable::from_entries(self.spec.cartan(), top, depth, entries)
    }

    /// True when `v` lies in the radical of the form, i.e. vanishes in `V(ψ)`.
    pub fn is_zero_in_irreducible(&mut self, v: &PbwVector) -> bool {
        let mut by_drop: BTreeMap<RootLatticeElement, PbwVector> = BTreeMap::new();
        for (m, c) in v.terms() {
            by_drop.entry(self.drop_of(m)).or_default().add_term(m.clone(), c.clone());
        }
        by_drop.iter().all(|(beta, part)| self.pairing_vector(beta, part).iter().all(Zero::is_zero))
    }

    fn level(&mut self, beta: &RootLatticeElement) -> Rc<Level> {
        if let Some(hit) = self.levels.get(beta) {
            return Rc::clone(hit);
        }
        let level = Rc::new(self.build_level(beta));
        self.levels.insert(beta.clone(), Rc::clone(&level));
        level
    }

    fn build_level(&mut self, beta: &RootLatticeElement) -> Level {
        let rank = self.rank();
        if beta.is_zero() {
            return Level { vectors: vec![PbwVector::vacuum()], parents: vec![] };
        }
        let mut candidates = Vec::new();
        let mut parents = Vec::new();
        for i in 0..rank {
            let below = beta - &RootLatticeElement::simple(rank, i);
            if !below.is_nonnegative() {
                continue;
            }
            let lower = self.level(&below);
            for basis in 0..self.algebra.quotient().dim() {
                let f = Generator::lowering(i, basis);
                for (index, r) in lower.vectors.iter().enumerate() {
                    candidates.push(self.act(&f, r));
                    parents.push(Parent { coroot: i, basis, index });
                }
            }
        }
        // gram[c][c'] = ⟨c, c'⟩, one column per candidate
        let columns: Vec<Vec<Rational>> =
            candidates.iter().map(|c| self.pair_with_parents(beta, &parents, c)).collect();
        let n = candidates.len();
        let gram: Matrix = (0..n).map(|a| (0..n).map(|b| columns[b][a].clone()).collect()).collect();
        let (_, pivots) = linalg::rref(&gram);
        Level {
            vectors: pivots.iter().map(|&p| candidates[p].clone()).collect(),
            parents: pivots.iter().map(|&p| parents[p]).collect(),
        }
    }

    /// `(⟨c, v⟩)_c` for vectors `c = (f_i ⊗ b) · r` described by `parents`,
    /// using `⟨(f_i ⊗ b) r, v⟩ = ⟨r, (e_i ⊗ b) v⟩`.
    fn pair_with_parents(&mut self, beta: &RootLatticeElement, parents: &[Parent], v: &PbwVector) -> Vec<Rational> {
        let rank = self.rank();
        let mut out = vec![Rational::zero(); parents.len()];
        let mut cache: HashMap<(usize, usize), Vec<Rational>> = HashMap::new();
        for (slot, p) in out.iter_mut().zip(parents) {
            let values = cache.entry((p.coroot, p.basis)).or_insert_with(|| {
                let raised = self.act(&Generator::raising(p.coroot, p.basis), v);
                let below = beta - &RootLatticeElement::simple(rank, p.coroot);
                self.pairing_vector(&below, &raised)
            });
            *slot = values[p.index].clone();
        }
        out
    }

    /// Pairings of a vector of drop `beta` against the chosen basis of `V_β`.
    fn pairing_vector(&mut self, beta: &RootLatticeElement, v: &PbwVector) -> Vec<Rational> {
        let size = self.level(beta).vectors.len();
        let mut out = vec![Rational::zero(); size];
        for (m, c) in v.terms() {
            let p = self.monomial_pairing(beta, m);
            for (o, x) in out.iter_mut().zip(p.iter()) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    fn monomial_pairing(&mut self, beta: &RootLatticeElement, m: &PbwMonomial) -> Rc<Vec<Rational>> {
        if let Some(hit) = self.pairings.get(m) {
            return Rc::clone(hit);
        }
        let level = self.level(beta);
        let values = if m.is_vacuum() {
            vec![Rational::one()]
        } else {
            self.pair_with_parents(beta, &level.parents, &PbwVector::monomial(m.clone()))
        };
        let values = Rc::new(values);
        self.pairings.insert(m.clone(), Rc::clone(&values));
        values
    }
}
