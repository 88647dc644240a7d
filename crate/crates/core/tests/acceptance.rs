//! Acceptance suite. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test -p current-km --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use current_km::classify::{
    classify_module, predicted_character, psi_validate, Obstruction, PsiEntry, PsiInput, PsiSpec, Verdict,
};
use current_km::hwchar::{freudenthal_character, tensor_character};
use current_km::liecore::{positive_roots, roots_up_to_height, validate_gcm, CartanData, RootLatticeElement, Weight};
use current_km::oracle::{root_element, Generator, ModuleOracle, Nilpotency, PbwVector};
use current_km::polyring::{frac, rat, Monomial, Polynomial, Rational, Ring};
use current_km::zerodim::{crt_idempotents, ideal_product, maximal_points, radical_zero_dim, Ideal, QuotientAlgebra};

fn report(criterion: u32, name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("[PASS] criterion {criterion}: {name} ({detail})"),
        Err(detail) => {
            println!("[FAIL] criterion {criterion}: {name} ({detail})");
            panic!("criterion {criterion} failed: {detail}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn type_a(rank: usize) -> CartanData {
    let m: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    validate_gcm(&m).unwrap()
}

// ---------------------------------------------------------------------------
// random cofinite ideals

/// Random order ideal of monomials (a staircase) of the given size.
fn random_staircase(rng: &mut ChaCha8Rng, nvars: usize, size: usize) -> BTreeSet<Vec<u32>> {
    let mut set = BTreeSet::from([vec![0; nvars]]);
    while set.len() < size {
        let corners = outer_corners(&set, nvars);
        let pick = corners[rng.gen_range(0..corners.len())].clone();
        set.insert(pick);
    }
    set
}

/// Minimal monomials outside an order ideal.
fn outer_corners(set: &BTreeSet<Vec<u32>>, nvars: usize) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    for m in set {
        for i in 0..nvars {
            let mut up = m.clone();
            up[i] += 1;
            let below_in_set = (0..nvars).all(|j| {
                if up[j] == 0 {
                    return true;
                }
                let mut down = up.clone();
                down[j] -= 1;
                set.contains(&down)
            });
            if !set.contains(&up) && below_in_set {
                out.insert(up);
            }
        }
    }
    out.into_iter().collect()
}

/// Staircase ideal moved by a random unitriangular affine change of coordinates.
fn random_cofinite(rng: &mut ChaCha8Rng, ring: &Ring, size: usize) -> (Ideal, usize) {
    let n = ring.nvars();
    let stairs = random_staircase(rng, n, size);
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut p = &ring.var(i) + &ring.constant(rat(rng.gen_range(-2..=2)));
            for j in i + 1..n {
                p = &p + &ring.var(j).scale(&rat(rng.gen_range(-1..=1)));
            }
            p
        })
        .collect();
    let gens = outer_corners(&stairs, n)
        .into_iter()
        .map(|e| Polynomial::monomial(ring, Monomial::new(e), Rational::one()).compose(&images).unwrap())
        .collect();
    (Ideal::new(ring, gens).unwrap(), stairs.len())
}

fn criterion_1() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut checked = 0;
    for trial in 0..50 {
        let nvars = 1 + trial % 3;
        let names = ["x", "y", "z"];
        let ring = Ring::new(&names[..nvars]);
        let (size_a, size_b) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (a, da) = random_cofinite(&mut rng, &ring, size_a);
        let (b, db) = random_cofinite(&mut rng, &ring, size_b);
        let ga = a.groebner();
        let gb = b.groebner();
        ensure(ga.quotient_dimension() == Some(da) && gb.quotient_dimension() == Some(db), || {
            format!("trial {trial}: generated dimensions {da}, {db} not reproduced")
        })?;
        let product = ideal_product(&a, &b).map_err(|e| e.to_string())?.groebner();
        let dim = product.quotient_dimension().ok_or_else(|| format!("trial {trial}: product not cofinite"))?;
        ensure(dim >= da.max(db), || format!("trial {trial}: dim {dim} < max({da}, {db})"))?;
        checked += 1;
    }
    Ok(format!("{checked} random pairs"))
}

// ---------------------------------------------------------------------------

fn maximal_ideal(ring: &Ring, point: &[Rational]) -> Ideal {
    let gens = point.iter().enumerate().map(|(i, c)| &ring.var(i) - &ring.constant(c.clone())).collect();
    Ideal::new(ring, gens).unwrap()
}

fn criterion_2() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for trial in 0..20 {
        let nvars = 1 + trial % 2;
        let ring = Ring::new(&["x", "y"][..nvars]);
        let count = rng.gen_range(1..=3);
        let mut points: BTreeSet<Vec<Rational>> = BTreeSet::new();
        while points.len() < count {
            points.insert((0..nvars).map(|_| frac(rng.gen_range(-3..=3), rng.gen_range(1..=2))).collect());
        }
        let mut ideal = Ideal::unit(&ring);
        for p in &points {
            let m = maximal_ideal(&ring, p);
            let power = if rng.gen_bool(0.5) { ideal_product(&m, &m).unwrap() } else { m };
            ideal = ideal_product(&ideal, &power).unwrap();
        }
        let gb = ideal.groebner();
        let radical = radical_zero_dim(&gb).map_err(|e| e.to_string())?;
        let again = radical_zero_dim(&radical).map_err(|e| e.to_string())?;
        ensure(again == radical, || format!("trial {trial}: radical not idempotent"))?;

        let expected: Vec<Vec<Rational>> = points.iter().cloned().collect();
        let found = maximal_points(&radical).map_err(|e| e.to_string())?;
        ensure(found == expected, || format!("trial {trial}: zero set {found:?} != {expected:?}"))?;
        for p in &expected {
            for g in gb.elements() {
                ensure(g.eval(p).unwrap().is_zero(), || format!("trial {trial}: point off the original ideal"))?;
            }
        }

        let q = QuotientAlgebra::new(&radical).map_err(|e| e.to_string())?;
        let e = crt_idempotents(&q, &found).map_err(|e| e.to_string())?;
        let mut sum = vec![Rational::zero(); q.dim()];
        for (j, ej) in e.iter().enumerate() {
            for (s, x) in sum.iter_mut().zip(ej) {
                *s += x;
            }
            for (m, em) in e.iter().enumerate() {
                let prod = q.mul(ej, em);
                let want = if j == m { ej.clone() } else { vec![Rational::zero(); q.dim()] };
                ensure(prod == want, || format!("trial {trial}: e_{j} e_{m} wrong"))?;
            }
        }
        ensure(sum == q.one(), || format!("trial {trial}: idempotents do not sum to 1"))?;
    }
    Ok("20 rational-point ideals".into())
}

// ---------------------------------------------------------------------------
// highest-weight instances

/// `ψ(h_i ⊗ m) = Σ_j λ_j(h_i) m(p_j)` over the standard monomials of `A/I`.
fn evaluation_spec(
    rank: usize,
    vars: &[&str],
    ideal: &[&str],
    points: &[Vec<Rational>],
    weights: &[Vec<Rational>],
) -> PsiSpec {
    let ring = Ring::new(vars);
    let ideal = Ideal::parse(&ring, ideal).unwrap();
    let q = QuotientAlgebra::new(&ideal.groebner()).unwrap();
    let mut entries = Vec::new();
    for i in 0..rank {
        for (k, m) in q.basis().iter().enumerate() {
            let mono = Polynomial::monomial(&ring, m.clone(), Rational::one());
            let value = points.iter().zip(weights).map(|(p, w)| mono.eval(p).unwrap() * &w[i]).sum();
            entries.push(PsiEntry::new(i, q.basis_label(k), value));
        }
    }
    psi_validate(&PsiInput { cartan: type_a(rank), ideal, entries, hpp: None }).unwrap()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

fn pts(v: &[i64]) -> Vec<Vec<Rational>> {
    v.iter().map(|&x| vec![rat(x)]).collect()
}

struct Instance {
    name: &'static str,
    spec: PsiSpec,
    /// expected weights in sorted point order
    weights: Vec<Vec<i64>>,
}

fn integrable_instances() -> Vec<Instance> {
    let one = |rank, ideal: &'static str, p: &[i64], w: &[&[i64]], name| {
        let weights: Vec<Vec<Rational>> = w.iter().map(|x| ints(x)).collect();
        Instance {
            name,
            spec: evaluation_spec(rank, &["t"], &[ideal], &pts(p), &weights),
            weights: w.iter().map(|x| x.to_vec()).collect(),
        }
    };
    vec![
        one(1, "t^2-1", &[-1, 1], &[&[2], &[3]], "A1 t^2-1 V(2)xV(3)"),
        one(1, "t", &[0], &[&[2]], "A1 V(2)"),
        one(1, "t^2-t", &[0, 1], &[&[2], &[1]], "A1 t^2-t"),
        one(1, "t^3-t", &[-1, 0, 1], &[&[1], &[1], &[1]], "A1 three points"),
        one(1, "t^2", &[0], &[&[3]], "A1 t^2 descends"),
        one(1, "t^3-t^2-t+1", &[-1, 1], &[&[1], &[2]], "A1 non-reduced two points"),
        one(2, "t", &[0], &[&[1, 1]], "A2 adjoint"),
        one(2, "t^2-t", &[0, 1], &[&[0, 2], &[1, 0]], "A2 t^2-t"),
        one(2, "t^2-1", &[-1, 1], &[&[0, 1], &[1, 0]], "A2 V(w2)xV(w1)"),
        one(2, "t^3-t", &[-1, 0, 1], &[&[1, 0], &[0, 1], &[1, 0]], "A2 three points"),
        one(2, "t^2", &[0], &[&[2, 0]], "A2 t^2 descends"),
        Instance {
            name: "A1 two variables",
            spec: evaluation_spec(
                1,
                &["x", "y"],
                &["x^2-x", "y-x"],
                &[vec![rat(0), rat(0)], vec![rat(1), rat(1)]],
                &[ints(&[1]), ints(&[2])],
            ),
            weights: vec![vec![1], vec![2]],
        },
    ]
}

fn criterion_3() -> Result<String, String> {
    let start = Instant::now();
    let instances = integrable_instances();
    for inst in &instances {
        let d = classify_module(&inst.spec).map_err(|e| format!("{}: {e}", inst.name))?;
        ensure(d.verdict == Verdict::Integrable, || format!("{}: verdict {:?}", inst.name, d.verdict))?;
        let want: Vec<Weight> = inst.weights.iter().map(|w| Weight::from_ints(w)).collect();
        ensure(d.weights == want, || format!("{}: weights {:?}", inst.name, d.weights))?;
        let predicted = predicted_character(&d, 6).map_err(|e| e.to_string())?;
        let mut oracle = ModuleOracle::new(&inst.spec).map_err(|e| e.to_string())?;
        let observed = oracle.irreducible_character(6);
        let p: Vec<_> = predicted.entries().collect();
        let o: Vec<_> = observed.entries().collect();
        ensure(p == o, || format!("{}: predicted {p:?} vs oracle {o:?}", inst.name))?;
        for i in 0..inst.spec.cartan().rank() {
            for k in 0..inst.spec.quotient().dim() {
                let f = vec![(Generator::lowering(i, k), rat(1))];
                let probe = oracle.nilpotency_probe(&f, &PbwVector::vacuum(), 8);
                ensure(matches!(probe, Nilpotency::Nilpotent(_)), || {
                    format!("{}: f_{} ⊗ b_{k} {probe:?}", inst.name, i + 1)
                })?;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("{} instances, height <= 6, {:.1?}", instances.len(), elapsed))
}

// ---------------------------------------------------------------------------

fn a1_spec(ideal: &str, values: &[Rational]) -> PsiSpec {
    let labels = ["1", "t", "t^2", "t^3"];
    let entries = values.iter().enumerate().map(|(k, v)| PsiEntry::new(0, labels[k], v.clone())).collect();
    psi_validate(&PsiInput {
        cartan: type_a(1),
        ideal: Ideal::parse(&Ring::new(&["t"]), &[ideal]).unwrap(),
        entries,
        hpp: None,
    })
    .unwrap()
}

fn obstruction_instances() -> Vec<(&'static str, PsiSpec)> {
    vec![
        ("t^2, psi(h t) = 1", a1_spec("t^2", &[rat(2), rat(1)])),
        ("t^3, psi(h t) = 1", a1_spec("t^3", &[rat(2), rat(1), rat(0)])),
        ("t^3, psi(h t) = -1, psi(h t^2) = 3", a1_spec("t^3", &[rat(1), rat(-1), rat(3)])),
    ]
}

fn criterion_4() -> Result<String, String> {
    let f = vec![(Generator::lowering(0, 0), rat(1))];
    for (name, spec) in obstruction_instances() {
        let d = classify_module(&spec).map_err(|e| e.to_string())?;
        ensure(matches!(d.verdict, Verdict::NotIntegrable(Obstruction::Radical(_))), || {
            format!("{name}: verdict {:?}", d.verdict)
        })?;
        let mut oracle = ModuleOracle::new(&spec).map_err(|e| e.to_string())?;
        let probe = oracle.nilpotency_probe(&f, &PbwVector::vacuum(), 8);
        ensure(probe == Nilpotency::NotNilpotentUpTo(8), || format!("{name}: {probe:?}"))?;
    }
    for lambda in [rat(-1), frac(1, 2)] {
        let spec = a1_spec("t", std::slice::from_ref(&lambda));
        let d = classify_module(&spec).map_err(|e| e.to_string())?;
        ensure(d.verdict == Verdict::NotIntegrable(Obstruction::NonDominantWeight { point: 0, coroot: 0 }), || {
            format!("lambda {lambda}: verdict {:?}", d.verdict)
        })?;
        let mut oracle = ModuleOracle::new(&spec).map_err(|e| e.to_string())?;
        let ranks = oracle.irreducible_character(6).string(0);
        ensure(ranks.iter().all(|&r| r >= 1), || format!("lambda {lambda}: ranks {ranks:?}"))?;
    }
    Ok("3 radical obstructions, 2 non-dominant weights".into())
}

// ---------------------------------------------------------------------------

fn criterion_5() -> Result<String, String> {
    let mut specs: Vec<(String, PsiSpec)> =
        integrable_instances().into_iter().map(|i| (i.name.to_string(), i.spec)).collect();
    specs.extend(obstruction_instances().into_iter().map(|(n, s)| (n.to_string(), s)));
    specs.push(("lambda = -1".into(), a1_spec("t", &[rat(-1)])));
    specs.push(("lambda = 1/2".into(), a1_spec("t", &[frac(1, 2)])));

    let (mut positive, mut negative) = (0, 0);
    for (name, spec) in &specs {
        let ring = spec.ring().clone();
        let q = spec.quotient().clone();
        let mut candidates: Vec<Polynomial> = vec![ring.one()];
        candidates.extend(q.groebner().elements().iter().cloned());
        for i in 0..ring.nvars() {
            let x = ring.var(i);
            candidates.push(x.clone());
            for c in [-1, 1] {
                candidates.push(&x - &ring.constant(rat(c)));
            }
            candidates.push(&x * &x);
            candidates.push(&(&x * &x) - &x);
            candidates.push(&(&x * &x) - &ring.one());
        }
        if let Ok(radical) = radical_zero_dim(q.groebner()) {
            candidates.extend(radical.elements().iter().cloned());
        }
        let mut oracle = ModuleOracle::new(spec).map_err(|e| e.to_string())?;
        for c in &candidates {
            let coords = q.coords(c).map_err(|e| e.to_string())?;
            let report = oracle.annihilator_probe(&[coords], 5);
            ensure(report.annihilates == report.psi_vanishes_on_closure, || {
                format!(
                    "{name}, candidate {c}: annihilates {} but psi vanishes {}",
                    report.annihilates, report.psi_vanishes_on_closure
                )
            })?;
            if report.annihilates {
                positive += 1;
            } else {
                negative += 1;
            }
        }
    }
    ensure(positive > 0 && negative > 0, || format!("one-sided family: {positive} / {negative}"))?;
    Ok(format!("{} modules, {positive} annihilating and {negative} non-annihilating ideals", specs.len()))
}

// ---------------------------------------------------------------------------

fn criterion_6() -> Result<String, String> {
    let algebras = [
        ("A1", validate_gcm(&[vec![2]]).unwrap()),
        ("A2", type_a(2)),
        ("B2", validate_gcm(&[vec![2, -2], vec![-1, 2]]).unwrap()),
    ];
    let mut checked = 0;
    for (name, c) in &algebras {
        let n = c.rank();
        let mut tables = Vec::new();
        for code in 0..4usize.pow(n as u32) {
            let w: Vec<i64> = (0..n).map(|i| ((code / 4usize.pow(i as u32)) % 4) as i64).collect();
            let weight = Weight::from_ints(&w);
            let ch = freudenthal_character(c, &weight, 80).map_err(|e| e.to_string())?;
            ensure(ch.is_complete(), || format!("{name} {weight}: table truncated"))?;
            let dim = current_km::liecore::weyl_dim(c, &weight).map_err(|e| e.to_string())?;
            ensure(BigInt::from(ch.total()) == dim, || format!("{name} {weight}: {} vs {dim}", ch.total()))?;
            tables.push(ch);
            checked += 1;
        }
        for a in tables.iter().step_by(3) {
            for b in tables.iter().step_by(5) {
                let t = tensor_character(c, &[a.clone(), b.clone()], 160).map_err(|e| e.to_string())?;
                ensure(t.total() == a.total() * b.total(), || format!("{name}: tensor mass"))?;
            }
        }
    }
    let a2 = freudenthal_character(&type_a(2), &Weight::from_ints(&[1, 1]), 10).unwrap();
    ensure(a2.total() == 8 && a2.get(&RootLatticeElement::new(vec![1, 1])) == 2, || "A2 adjoint".into())?;
    Ok(format!("{checked} weights against the Weyl dimension formula"))
}

// ---------------------------------------------------------------------------

fn criterion_7() -> Result<String, String> {
    let affine = validate_gcm(&[vec![2, -2], vec![-2, 2]]).unwrap();
    let table = roots_up_to_height(&affine, 10);
    for k in 1..=5 {
        let m = table.multiplicity(&RootLatticeElement::new(vec![k, k]));
        ensure(m == 1, || format!("mult({k}δ) = {m}"))?;
    }
    let mut real = 0;
    for (root, m) in table.iter() {
        let (a, b) = (root.coords()[0], root.coords()[1]);
        if a != b {
            ensure((a - b).abs() == 1, || format!("unexpected root {root}"))?;
            ensure(m == 1, || format!("real root {root} has multiplicity {m}"))?;
            real += 1;
        }
    }
    // real roots of height ≤ 10: (k+1, k) and (k, k+1), heights 1, 3, ..., 9
    ensure(real == 10, || format!("{real} real roots"))?;

    let finite = [
        ("A2", type_a(2), 3),
        ("A3", type_a(3), 6),
        ("B2", validate_gcm(&[vec![2, -2], vec![-1, 2]]).unwrap(), 4),
        ("G2", validate_gcm(&[vec![2, -1], vec![-3, 2]]).unwrap(), 6),
    ];
    for (name, c, count) in &finite {
        let roots = positive_roots(c).map_err(|e| e.to_string())?;
        ensure(roots.len() == *count, || format!("{name}: {} roots", roots.len()))?;
        ensure(roots.iter().all(|(_, m)| m == 1), || format!("{name}: multiplicity above 1"))?;
        let deeper = roots_up_to_height(c, 20);
        let a: Vec<_> = roots.iter().collect();
        let b: Vec<_> = deeper.iter().collect();
        ensure(a == b, || format!("{name}: table does not stabilize"))?;
    }
    Ok(format!("{real} real roots, imaginary multiplicities to 5δ, 4 finite types"))
}

// ---------------------------------------------------------------------------

fn criterion_8() -> Result<String, String> {
    let mut checked = 0;
    for inst in integrable_instances() {
        let mut oracle = ModuleOracle::new(&inst.spec).map_err(|e| e.to_string())?;
        let report = oracle.annihilator_probe(&[], 5);
        for r in &report.recovered {
            ensure(r.codimension <= r.weight_space_dim, || {
                format!("{}: I_{} codim {} > dim {}", inst.name, r.coroot + 1, r.codimension, r.weight_space_dim)
            })?;
            ensure(r.closure_codimension == r.codimension, || {
                format!("{}: I_{} not an ideal", inst.name, r.coroot + 1)
            })?;
            // the recovered ideal really kills f_i ⊗ a on the vacuum
            for a in &r.basis {
                let x = root_element(r.coroot + 1, r.coroot, a);
                let v = oracle.act_element(&x, &PbwVector::vacuum());
                ensure(oracle.is_zero_in_irreducible(&v), || {
                    format!("{}: I_{} element acts", inst.name, r.coroot + 1)
                })?;
            }
            checked += 1;
        }
        ensure(report.psi_vanishes_on_product, || format!("{}: psi nonzero on the product ideal", inst.name))?;
    }
    Ok(format!("{checked} recovered ideals"))
}

#[test]
fn criterion_1_cofinite_products() {
    report(1, "products of cofinite ideals are cofinite", criterion_1());
}

#[test]
fn criterion_2_radical_and_idempotents() {
    report(2, "radical and Chinese-remainder idempotents", criterion_2());
}

#[test]
fn criterion_3_oracle_matches_prediction() {
    report(3, "oracle character equals predicted tensor character", criterion_3());
}

#[test]
fn criterion_4_negative_instances() {
    report(4, "non-integrable instances are rejected and confirmed", criterion_4());
}

#[test]
fn criterion_5_annihilation_biconditional() {
    report(5, "annihilation iff psi vanishes on the ideal", criterion_5());
}

#[test]
fn criterion_6_character_engine() {
    report(6, "Freudenthal totals and tensor masses", criterion_6());
}

#[test]
fn criterion_7_root_multiplicities() {
    report(7, "root multiplicities", criterion_7());
}

#[test]
fn criterion_8_recovered_ideals() {
    report(8, "recovered annihilator ideals are small", criterion_8());
}
