//! Acceptance suite: one PASS/FAIL line per criterion, each with its own time
//! budget. Runs without the libtest harness so the lines always reach stdout.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use zigzag::characters::{
    a_shuffle_pmf, check_recursion, evaluate, evaluate_qsym, rank, CharacterEvaluator,
};
use zigzag::graph::{dimension, martin_kernel, predecessors, successors};
use zigzag::qsym::{f_product, f_to_m, m_to_f, schur_to_f};
use zigzag::rational::{self, binomial, from_biguint, int, pow, ratio};
use zigzag::sampler::{
    empirical_pmf, encode_heights, lln_trajectory, polya_pmf, quasi_uniform_cdf, quasi_uniform_cdf_strict,
    sample_arrangement, tally,
};
use zigzag::sym::schur_value;
use zigzag::{Basis, Composition, Orientation, OrientedPaintbox, Permutation, QSymElement, Rational};
use zigzag_oracle as oracle;

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn compositions_up_to(n: usize) -> Vec<Composition> {
    (0..=n).flat_map(Composition::all_of_size).collect()
}

fn oracle_dims(n: usize) -> BTreeMap<Vec<u32>, usize> {
    oracle::enumerate_by_shape(n).unwrap().into_iter().map(|(k, v)| (k, v.len())).collect()
}

fn dimension_correctness() -> Result<String, String> {
    let mut checked = 0;
    for n in 0..=8 {
        let dims = oracle_dims(n);
        let all = Composition::all_of_size(n);
        ensure!(all.len() == dims.len(), "level {n}: {} compositions vs {} oracle shapes", all.len(), dims.len());
        let mut total = int(0);
        for lambda in &all {
            let d = from_biguint(&dimension(lambda));
            let expected = dims.get(&shape(lambda)).copied().unwrap_or(0);
            ensure!(d == int(expected as i64), "d({lambda}) = {d}, brute force {expected}");
            total += d;
            checked += 1;
        }
        ensure!(total == factorial(n), "level {n}: Σd = {total}");
    }
    Ok(format!("{checked} compositions"))
}

fn graph_duality() -> Result<String, String> {
    let mut edges = 0;
    for mu in compositions_up_to(7) {
        let succ = successors(&mu);
        ensure!(succ.len() == mu.size() + 1, "{mu} has {} successors", succ.len());
        let mut sorted = succ.clone();
        sorted.sort();
        sorted.dedup();
        ensure!(sorted.len() == succ.len(), "duplicate successor of {mu}");
        for lambda in &succ {
            ensure!(predecessors(lambda).contains(&mu), "{mu} -> {lambda} missing from predecessors");
            edges += 1;
        }
    }
    for lambda in compositions_up_to(8).into_iter().skip(1) {
        for mu in predecessors(&lambda) {
            ensure!(successors(&mu).contains(&lambda), "{mu} <- {lambda} missing from successors");
        }
    }
    Ok(format!("{edges} edges"))
}

fn f(lambda: &Composition) -> QSymElement {
    QSymElement::f(lambda.clone())
}

fn shuffle_algebra() -> Result<String, String> {
    let comps = compositions_up_to(7);
    let mut pairs = 0;
    for mu in &comps {
        for nu in comps.iter().filter(|nu| mu.size() + nu.size() <= 7) {
            let prod = f_product(&f(mu), &f(nu)).map_err(|e| e.to_string())?;
            let expected = oracle::shuffle_product_oracle(&shape(mu), &shape(nu));
            let got: BTreeMap<Vec<u32>, Rational> = prod.terms().iter().map(|(k, v)| (shape(k), v.clone())).collect();
            ensure!(got == expected, "F_{mu} F_{nu} differs from the shuffle oracle");
            pairs += 1;
        }
    }
    let one_box = f(&Composition::row(1));
    for mu in compositions_up_to(6) {
        let prod = f_product(&f(&mu), &one_box).unwrap();
        let expected = QSymElement::from_terms(Basis::F, successors(&mu).into_iter().map(|l| (l, int(1))));
        ensure!(prod == expected, "F_{mu} F_(1) is not the sum over successors");
    }
    let mut r = rng(3);
    let small = compositions_up_to(3);
    let pick = |r: &mut rand_chacha::ChaCha8Rng| small[below(r, small.len() as u64) as usize].clone();
    let mut triples = 0;
    while triples < 60 {
        let (a, b, c) = (pick(&mut r), pick(&mut r), pick(&mut r));
        if a.size() + b.size() + c.size() > 7 {
            continue;
        }
        let ab = f_product(&f(&a), &f(&b)).unwrap();
        ensure!(ab == f_product(&f(&b), &f(&a)).unwrap(), "F_{a} F_{b} not commutative");
        let left = f_product(&ab, &f(&c)).unwrap();
        let right = f_product(&f(&a), &f_product(&f(&b), &f(&c)).unwrap()).unwrap();
        ensure!(left == right, "({a} {b}) {c} not associative");
        triples += 1;
    }
    Ok(format!("{pairs} products vs oracle, {triples} triples"))
}

fn m_expansion() -> Result<String, String> {
    let c = |v: &[u32]| Composition::new(v.to_vec()).unwrap();
    let expected = QSymElement::from_terms(
        Basis::M,
        [c(&[2, 2]), c(&[1, 1, 2]), c(&[2, 1, 1]), c(&[1, 1, 1, 1])].into_iter().map(|l| (l, int(1))),
    );
    let got = f_to_m(&f(&c(&[2, 2]))).unwrap();
    ensure!(got == expected, "F_(2,2) = {got}");
    let mut round_trips = 0;
    for lambda in compositions_up_to(6) {
        let x = f(&lambda);
        ensure!(m_to_f(&f_to_m(&x).unwrap()).unwrap() == x, "F round trip fails at {lambda}");
        let m = QSymElement::m(lambda.clone());
        ensure!(f_to_m(&m_to_f(&m).unwrap()).unwrap() == m, "M round trip fails at {lambda}");
        round_trips += 2;
    }
    Ok(format!("{got}; {round_trips} round trips"))
}

fn character_recursion() -> Result<String, String> {
    let family = paintbox_family(5, 30);
    for pb in &family {
        let report = check_recursion(&CharacterEvaluator::paintbox(pb.clone()), 6);
        ensure!(report.passed(), "{pb}: {} failures, root {}", report.failures.len(), report.root_value);
    }
    let gaps = family.iter().filter(|pb| !pb.is_finitary()).count();
    Ok(format!("{} paintboxes ({gaps} with gaps), depth 6", family.len()))
}

fn closed_forms() -> Result<String, String> {
    let mut checks = 0;
    for phi in [ratio(1, 3), ratio(2, 7), ratio(1, 2), ratio(5, 6)] {
        let pb = OrientedPaintbox::bi_interval(phi.clone()).unwrap();
        for lambda in compositions_up_to(7).into_iter().skip(1) {
            let parts = lambda.parts();
            let is_hook = parts[..parts.len() - 1].iter().all(|&p| p == 1);
            let expected = if is_hook {
                let l = parts.len() - 1;
                let k = *parts.last().unwrap() as usize - 1;
                pow(&phi, l) * pow(&(int(1) - &phi), k)
            } else {
                int(0)
            };
            ensure!(evaluate(&pb, &lambda) == expected, "bi-interval φ={phi} at {lambda}");
            checks += 1;
        }
    }
    for a in [2usize, 3, 5] {
        let pb = OrientedPaintbox::equispaced(a, Orientation::Up).unwrap();
        for lambda in compositions_up_to(7).into_iter().skip(1) {
            let (n, k) = (lambda.size(), lambda.len());
            let expected = from_biguint(&binomial((n + a - k) as u64, n as u64)) / pow(&int(a as i64), n);
            ensure!(evaluate(&pb, &lambda) == expected, "{a}-shuffle at {lambda}");
            ensure!(a_shuffle_pmf(n, k, a).unwrap() == expected, "a_shuffle_pmf({n},{k},{a})");
            checks += 1;
        }
    }
    let empty = OrientedPaintbox::empty();
    for n in 0..=7 {
        let dims = oracle_dims(n);
        for lambda in Composition::all_of_size(n) {
            let d = int(dims[&shape(&lambda)] as i64);
            let p = evaluate(&empty, &lambda);
            ensure!(&d * &p == &d / factorial(n), "empty paintbox: d·p at {lambda}");
            ensure!(p == int(1) / factorial(n), "empty paintbox: p({lambda}) = {p}");
            checks += 1;
        }
    }
    Ok(format!("{checks} exact comparisons"))
}

fn multiplicativity() -> Result<String, String> {
    let comps = compositions_up_to(6);
    let mut products = Vec::new();
    for mu in &comps {
        for nu in comps.iter().filter(|nu| mu.size() + nu.size() <= 6) {
            products.push((mu, nu, f_product(&f(mu), &f(nu)).unwrap()));
        }
    }
    for pb in paintbox_family(7, 30) {
        let psi = CharacterEvaluator::paintbox(pb.clone());
        for (mu, nu, prod) in &products {
            let lhs = evaluate_qsym(&psi, prod).unwrap();
            ensure!(lhs == evaluate(&pb, mu) * evaluate(&pb, nu), "{pb}: F_{mu} F_{nu}");
        }
    }
    Ok(format!("{} products on 30 paintboxes", products.len()))
}

fn projection() -> Result<String, String> {
    let schurs: Vec<(Composition, QSymElement)> =
        (0..=5).flat_map(Composition::partitions_of).map(|l| (l.clone(), schur_to_f(&l).unwrap())).collect();
    let mut checks = 0;
    for pb in paintbox_family(11, 20) {
        let psi = CharacterEvaluator::paintbox(pb.clone());
        let freq = rank(&pb);
        for (lambda, s) in &schurs {
            let lhs = evaluate_qsym(&psi, s).unwrap();
            let rhs = schur_value(&freq, lambda).unwrap();
            ensure!(lhs == rhs, "{pb}: S_{lambda} gives {lhs} vs {rhs}");
            checks += 1;
        }
    }
    Ok(format!("{checks} Schur values"))
}

fn fidelity_paintbox() -> OrientedPaintbox {
    OrientedPaintbox::parse("0 1/4 down\n1/4 1/2 up\n5/8 1 down\n").unwrap()
}

/// `d(λ) p(λ)` for every shape of size `n`, from the brute-force oracles.
fn oracle_shape_law(pb: &OrientedPaintbox, n: usize) -> BTreeMap<Composition, Rational> {
    let factors = oracle_factors(pb);
    let dims = oracle_dims(n);
    Composition::all_of_size(n)
        .into_iter()
        .map(|l| {
            let q = int(dims[&shape(&l)] as i64) * oracle::splitting_sum_oracle(&factors, &shape(&l));
            (l, q)
        })
        .collect()
}

fn sampler_fidelity() -> Result<String, String> {
    let pb = fidelity_paintbox();
    let trials = 1_000_000;
    let emp = empirical_pmf(&pb, 4, trials, 2024).map_err(|e| e.to_string())?;
    let law = oracle_shape_law(&pb, 4);
    let mut tv = 0.0;
    let mut worst: f64 = 0.0;
    for (lambda, q) in &law {
        ensure!(&(from_biguint(&dimension(lambda)) * evaluate(&pb, lambda)) == q, "exact law disagrees with oracle at {lambda}");
        let q = rational::to_f64(q);
        let diff = (emp.frequency(lambda) - q).abs();
        tv += diff / 2.0;
        let z = if q > 0.0 { diff / stderr(q, trials) } else { diff * 1e9 };
        ensure!(z <= 4.0, "shape {lambda}: {} vs {q} ({z:.2} standard errors)", emp.frequency(lambda));
        worst = worst.max(z);
    }
    ensure!(tv <= 0.01, "total variation {tv}");
    Ok(format!("TV = {tv:.5}, worst {worst:.2} standard errors"))
}

fn shape_sufficiency() -> Result<String, String> {
    let pb = fidelity_paintbox();
    let trials = 1_000_000;
    let counts = tally(&pb, 4, trials, 77, |a| a.last());
    let mut worst: f64 = 0.0;
    for pi in Permutation::all(4) {
        let q = rational::to_f64(&evaluate(&pb, &pi.zigzag_shape()));
        let se = stderr(q, trials);
        let fr = counts.get(&pi).copied().unwrap_or(0) as f64 / trials as f64;
        ensure!((fr - q).abs() <= 4.0 * se, "Π_4 = {pi}: {fr} vs {q}");
        for other in Permutation::all(4).into_iter().filter(|o| o.zigzag_shape() == pi.zigzag_shape()) {
            let fo = counts.get(&other).copied().unwrap_or(0) as f64 / trials as f64;
            let z = (fr - fo).abs() / (2.0f64.sqrt() * se);
            ensure!(z <= 4.0, "{pi} and {other} differ by {z:.2} standard errors");
            worst = worst.max(z);
        }
    }
    // restriction invariance, empirically
    let trials5 = 100_000;
    let counts5 = tally(&pb, 5, trials5, 78, |a| a.last());
    for j in 1..=5 {
        let mut pushed: BTreeMap<Permutation, u64> = BTreeMap::new();
        for (pi, c) in &counts5 {
            *pushed.entry(pi.restrict(j).unwrap()).or_insert(0) += c;
        }
        for sigma in Permutation::all(4) {
            let q = rational::to_f64(&evaluate(&pb, &sigma.zigzag_shape()));
            let fr = pushed.get(&sigma).copied().unwrap_or(0) as f64 / trials5 as f64;
            ensure!((fr - q).abs() <= 4.0 * stderr(q, trials5), "τ_{j}: {sigma} has {fr} vs {q}");
        }
    }
    // restriction invariance, exactly
    let mut exact_checks = 0;
    let sources = [pb.clone(), OrientedPaintbox::empty(), OrientedPaintbox::bi_interval(ratio(2, 5)).unwrap(), fixture()];
    for source in &sources {
        for n in 2..=6 {
            for j in 1..=n {
                let mut pushed: BTreeMap<Permutation, Rational> = BTreeMap::new();
                for pi in oracle::permutations(n) {
                    let pi = Permutation::new(pi).unwrap();
                    *pushed.entry(pi.restrict(j).unwrap()).or_insert_with(|| int(0)) += evaluate(source, &pi.zigzag_shape());
                }
                for (sigma, mass) in pushed {
                    ensure!(mass == evaluate(source, &sigma.zigzag_shape()), "exact τ_{j} pushforward at {sigma}");
                    exact_checks += 1;
                }
            }
        }
    }
    Ok(format!("worst pair gap {worst:.2} standard errors; {exact_checks} exact pushforward values"))
}

fn rising(x: &Rational, m: usize) -> Rational {
    (0..m).fold(int(1), |acc, i| acc * (x + int(i as i64)))
}

fn polya_beta() -> Result<String, String> {
    let n = 4;
    let trials = 100_000;
    let mut worst: f64 = 0.0;
    for (t1, t2) in [(int(1), int(1)), (int(2), int(3))] {
        let emp = polya_pmf(rational::to_f64(&t1), rational::to_f64(&t2), n, trials, 31).map_err(|e| e.to_string())?;
        for lambda in Composition::all_of_size(n) {
            let parts = lambda.parts();
            let is_hook = parts[..parts.len() - 1].iter().all(|&p| p == 1);
            let fr = emp.frequency(&lambda);
            if !is_hook {
                ensure!(fr == 0.0, "non-hook {lambda} observed");
                continue;
            }
            let l = parts.len() - 1;
            let k = n - 1 - l;
            // B(θ₁+l, θ₂+k)/B(θ₁, θ₂) for each of the C(n-1, l) rank sequences
            let beta_ratio = rising(&t1, l) * rising(&t2, k) / rising(&(&t1 + &t2), l + k);
            let q = rational::to_f64(&(from_biguint(&binomial((n - 1) as u64, l as u64)) * beta_ratio));
            let z = (fr - q).abs() / stderr(q, trials);
            ensure!(z <= 4.0, "θ=({t1},{t2}) hook {lambda}: {fr} vs {q} ({z:.2} standard errors)");
            worst = worst.max(z);
        }
    }
    Ok(format!("worst {worst:.2} standard errors"))
}

fn law_of_large_numbers() -> Result<String, String> {
    let pb = fixture();
    let mut small = Vec::new();
    let mut large = Vec::new();
    for seed in 0..20 {
        let traj = lln_trajectory(&pb, &[100, 10_000], seed).map_err(|e| e.to_string())?;
        small.push(traj[0].1.clone());
        large.push(traj[1].1.clone());
    }
    let (m_small, m_large) = (median(small), median(large));
    let (fs, fl) = (rational::to_f64(&m_small), rational::to_f64(&m_large));
    ensure!(fl <= 0.05, "median distance at n=10^4 is {fl}");
    ensure!(m_large < m_small, "median did not decrease: {fs} at 10^2, {fl} at 10^4");
    Ok(format!("median {fs:.4} at n=100, {fl:.4} at n=10000"))
}

fn martin_kernel_check() -> Result<String, String> {
    let mut checks = 0;
    for n in 0..=7 {
        let table = oracle::kernel_table(n).unwrap();
        for lambda in Composition::all_of_size(n) {
            for mu in compositions_up_to(n) {
                let expected = table.get(&(shape(&mu), shape(&lambda))).cloned().unwrap_or_else(|| int(0));
                let got = martin_kernel(&mu, &lambda).map_err(|e| e.to_string())?;
                ensure!(got == expected, "K({mu}, {lambda}) = {got}, oracle {expected}");
                checks += 1;
            }
        }
    }
    let one = Composition::row(1);
    for lambda in (1..=12).flat_map(Composition::all_of_size) {
        ensure!(martin_kernel(&one, &lambda).unwrap() == int(1), "K((1), {lambda}) != 1");
        checks += 1;
    }
    Ok(format!("{checks} kernel values"))
}

fn in_support(pb: &OrientedPaintbox, x: &Rational) -> bool {
    pb.intervals().iter().all(|iv| !(&iv.left < x && x < &iv.right)) || pb.intervals().iter().any(|iv| iv.initial_point() == x)
}

fn quasi_uniform() -> Result<String, String> {
    let mut checks = 0;
    let mut skipped = 0;
    for pb in paintbox_family(13, 30) {
        let atoms: Vec<Rational> = pb.intervals().iter().map(|iv| iv.initial_point().clone()).collect();
        let grid = (0..=64).map(|k| ratio(k, 64));
        for x in atoms.into_iter().chain(grid) {
            if !in_support(&pb, &x) {
                skipped += 1;
                continue;
            }
            let below = quasi_uniform_cdf_strict(&pb, &x).unwrap();
            let upto = quasi_uniform_cdf(&pb, &x).unwrap();
            ensure!(below <= x && x <= upto, "{pb} at {x}: ν[0,x[ = {below}, ν[0,x] = {upto}");
            checks += 1;
        }
        ensure!(quasi_uniform_cdf(&pb, &int(1)).unwrap() == int(1), "{pb}: total mass");
    }
    Ok(format!("{checks} points in the support of ν, {skipped} grid points outside it"))
}

fn encoding_equivalence() -> Result<String, String> {
    let pb = fixture();
    for seed in 0..100 {
        let enc = encode_heights(&pb, 50, seed);
        ensure!(enc.reconstruct() == enc.direct, "seed {seed}: reconstruction differs");
        ensure!(enc.direct == sample_arrangement(&pb, 50, seed), "seed {seed}: stream mismatch");
    }
    Ok("100 seeds, n = 50".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, Check); 15] = [
        ("dimension correctness", 10, dimension_correctness),
        ("graph duality", 1, graph_duality),
        ("shuffle algebra", 30, shuffle_algebra),
        ("M-expansion", 1, m_expansion),
        ("character recursion", 30, character_recursion),
        ("closed forms", 10, closed_forms),
        ("multiplicativity", 60, multiplicativity),
        ("projection to symmetric functions", 60, projection),
        ("sampler fidelity", 120, sampler_fidelity),
        ("shape sufficiency and restriction invariance", 120, shape_sufficiency),
        ("Polya urn / Beta mixture", 60, polya_beta),
        ("law of large numbers", 180, law_of_large_numbers),
        ("Martin kernel", 30, martin_kernel_check),
        ("quasi-uniform characterization", 5, quasi_uniform),
        ("height encoding equivalence", 30, encoding_equivalence),
    ];
    let mut failures = 0;
    for (idx, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*budget) => Err(format!("over time budget: {detail}")),
            other => other,
        };
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(e) => {
                failures += 1;
                ("FAIL", e)
            }
        };
        println!("{tag} [{:02}] {name} ({:.2} s of {budget} s): {detail}", idx + 1, elapsed.as_secs_f64());
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
