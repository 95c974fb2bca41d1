use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::paintbox::{OrientedPaintbox, SegmentKind};
use crate::composition::{Composition, Sign};
use crate::error::{Error, Result};
use crate::graph::successors;
use crate::qsym::{Basis, QSymElement};
use crate::rational::{self, Rational};

/// Where an evaluator's values come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Elementary,
    Paintbox,
    Mixed,
    ClosedForm,
}

type ClosedFormFn = Arc<dyn Fn(&Composition) -> Rational + Send + Sync>;

#[derive(Clone)]
enum Rule {
    Plus,
    Minus,
    Uniform,
    Paintbox(OrientedPaintbox),
    Mixed(Vec<(CharacterEvaluator, Rational)>),
    ClosedForm(String, ClosedFormFn),
}

/// A linear functional on QSym given by its values `ψ(F_λ)`.
#[derive(Clone)]
pub struct CharacterEvaluator {
    rule: Rule,
}

impl fmt::Debug for CharacterEvaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rule {
            Rule::Plus => write!(f, "ψ+"),
            Rule::Minus => write!(f, "ψ-"),
            Rule::Uniform => write!(f, "uniform"),
            Rule::Paintbox(pb) => write!(f, "paintbox({pb})"),
            Rule::Mixed(factors) => f.debug_list().entries(factors.iter().map(|(c, w)| (c, rational::format(w)))).finish(),
            Rule::ClosedForm(name, _) => write!(f, "closed-form({name})"),
        }
    }
}

impl CharacterEvaluator {
    pub fn paintbox(pb: OrientedPaintbox) -> Self {
        CharacterEvaluator { rule: Rule::Paintbox(pb) }
    }

    /// Wraps an arbitrary rule, e.g. a closed-form probability function.
    pub fn closed_form(name: impl Into<String>, f: impl Fn(&Composition) -> Rational + Send + Sync + 'static) -> Self {
        CharacterEvaluator { rule: Rule::ClosedForm(name.into(), Arc::new(f)) }
    }

    pub fn provenance(&self) -> Provenance {
        match self.rule {
            Rule::Plus | Rule::Minus => Provenance::Elementary,
            Rule::Paintbox(_) => Provenance::Paintbox,
            Rule::Mixed(_) => Provenance::Mixed,
            Rule::Uniform | Rule::ClosedForm(..) => Provenance::ClosedForm,
        }
    }

    /// `ψ(F_λ)`.
    pub fn value(&self, lambda: &Composition) -> Rational {
        match &self.rule {
            Rule::Plus => indicator(lambda.len() <= 1),
            Rule::Minus => indicator(lambda.parts().iter().all(|&p| p == 1)),
            Rule::Uniform => Rational::one() / rational::from_biguint(&rational::factorial(lambda.size() as u64)),
            Rule::Paintbox(pb) => evaluate(pb, lambda),
            Rule::Mixed(factors) => mix_value(factors, lambda),
            Rule::ClosedForm(_, f) => f(lambda),
        }
    }
}

fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `ψ+(F_λ) = 1` exactly on one-row zigzags (including `∅`).
pub fn elementary_plus() -> CharacterEvaluator {
    CharacterEvaluator { rule: Rule::Plus }
}

/// `ψ-(F_λ) = 1` exactly on one-column zigzags (including `∅`).
pub fn elementary_minus() -> CharacterEvaluator {
    CharacterEvaluator { rule: Rule::Minus }
}

/// The character of uniform random permutations: every permutation of `[n]`
/// has probability `1/n!`, so `ψ(F_λ) = 1/|λ|!` and the shape `λ` itself
/// has probability `d(λ)/|λ|!`.
pub fn uniform_character() -> CharacterEvaluator {
    CharacterEvaluator { rule: Rule::Uniform }
}

/// M-mixing of `factors` in proportions `weights` (order matters).
pub fn m_mix(factors: Vec<CharacterEvaluator>, weights: Vec<Rational>) -> Result<CharacterEvaluator> {
    if factors.len() != weights.len() {
        return Err(Error::LengthMismatch { factors: factors.len(), weights: weights.len() });
    }
    let total: Rational = weights.iter().sum();
    if weights.iter().any(Signed::is_negative) || !total.is_one() {
        return Err(Error::BadWeights(rational::format(&total)));
    }
    Ok(CharacterEvaluator { rule: Rule::Mixed(factors.into_iter().zip(weights).collect()) })
}

/// DP over (factor, boxes consumed): factor `j` takes boxes `i+1..=i'` as a
/// consecutive sub-zigzag and contributes `ω_j^(i'-i) ψ_j(F_sub)`.
fn mix_value(factors: &[(CharacterEvaluator, Rational)], lambda: &Composition) -> Rational {
    let n = lambda.size();
    let mut acc = vec![Rational::zero(); n + 1];
    acc[0] = Rational::one();
    for (psi, weight) in factors {
        let powers = powers_of(weight, n);
        let mut next = vec![Rational::zero(); n + 1];
        for start in 0..=n {
            if acc[start].is_zero() {
                continue;
            }
            for end in start..=n {
                let v = psi.value(&lambda.sub_zigzag(start, end));
                if !v.is_zero() {
                    next[end] += &acc[start] * &powers[end - start] * v;
                }
            }
        }
        acc = next;
    }
    acc.swap_remove(n)
}

fn powers_of(x: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::one());
    for k in 1..=n {
        out.push(&out[k - 1] * x);
    }
    out
}

/// `p_{(U↑,U↓)}(λ)`: sum over splittings of `λ` into consecutive pieces, one
/// per segment of the paintbox layout. Up-intervals accept only one-row
/// pieces, down-intervals one-column pieces, and each complement gap of mass
/// `γ` acts as a uniform factor contributing `γ^ℓ / ℓ!`.
pub fn evaluate(pb: &OrientedPaintbox, lambda: &Composition) -> Rational {
    let n = lambda.size();
    if n == 0 {
        return Rational::one();
    }
    let word = lambda.to_word();
    let letters = word.letters();
    // run[t]: consecutive letters equal to letters[t] starting at t
    let mut run = vec![0usize; letters.len() + 1];
    for t in (0..letters.len()).rev() {
        run[t] = if t + 1 < letters.len() && letters[t + 1] == letters[t] { run[t + 1] + 1 } else { 1 };
    }
    let monotone = |start: usize, len: usize, sign: Sign| len <= 1 || (letters[start] == sign && run[start] >= len - 1);
    let inverse_factorials: Vec<Rational> =
        (0..=n).map(|k| Rational::one() / rational::from_biguint(&rational::factorial(k as u64))).collect();

    let mut acc = vec![Rational::zero(); n + 1];
    acc[0] = Rational::one();
    for seg in pb.segments() {
        let powers = powers_of(&seg.length(), n);
        let mut next = vec![Rational::zero(); n + 1];
        for start in 0..=n {
            if acc[start].is_zero() {
                continue;
            }
            for len in 0..=n - start {
                let term = match seg.kind {
                    SegmentKind::Up if !monotone(start, len, Sign::Plus) => break,
                    SegmentKind::Down if !monotone(start, len, Sign::Minus) => break,
                    SegmentKind::Gap => &powers[len] * &inverse_factorials[len],
                    _ => powers[len].clone(),
                };
                next[start + len] += &acc[start] * term;
            }
        }
        acc = next;
    }
    acc.swap_remove(n)
}

/// Linear extension of the evaluator to an F-basis element.
pub fn evaluate_qsym(eval: &CharacterEvaluator, a: &QSymElement) -> Result<Rational> {
    if a.basis() != Basis::F {
        return Err(Error::BasisMismatch { expected: "F", found: a.basis().name() });
    }
    Ok(a.terms().iter().map(|(lambda, c)| c * eval.value(lambda)).sum())
}

/// Outcome of checking `p(μ) = Σ_{μ↗λ} p(λ)` on all `|μ| < depth`.
#[derive(Debug, Clone, Default)]
pub struct RecursionReport {
    pub root_value: Rational,
    pub checked: usize,
    pub failures: Vec<(Composition, Rational, Rational)>,
}

impl RecursionReport {
    pub fn passed(&self) -> bool {
        self.root_value.is_one() && self.failures.is_empty()
    }
}

pub fn check_recursion(eval: &CharacterEvaluator, depth: usize) -> RecursionReport {
    let mut report = RecursionReport { root_value: eval.value(&Composition::empty()), ..Default::default() };
    let mut values: Vec<(Composition, Rational)> =
        Composition::all_of_size(0).into_iter().map(|c| (c.clone(), eval.value(&c))).collect();
    for n in 0..depth {
        let next: std::collections::HashMap<Composition, Rational> =
            Composition::all_of_size(n + 1).into_iter().map(|c| (c.clone(), eval.value(&c))).collect();
        for (mu, p) in &values {
            let sum: Rational = successors(mu).iter().map(|l| next[l].clone()).sum();
            report.checked += 1;
            if &sum != p {
                report.failures.push((mu.clone(), p.clone(), sum));
            }
        }
        values = next.into_iter().collect();
    }
    report
}

/// `C(n + a - k, n) a^(-n)`: probability of any one permutation of `[n]` with
/// `k - 1` descents under the inverse `a`-shuffle.
pub fn a_shuffle_pmf(n: usize, k: usize, a: usize) -> Result<Rational> {
    if k < 1 || k > n || a < 1 {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n and a >= 1, got n={n}, k={k}, a={a}")));
    }
    let top = (n + a) as u64;
    let num = if top < k as u64 { num_bigint::BigUint::zero() } else { rational::binomial(top - k as u64, n as u64) };
    Ok(rational::from_biguint(&num) / rational::pow(&rational::int(a as i64), n))
}
