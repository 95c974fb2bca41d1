//! Random arrangements directed by an oriented paintbox.

mod stream;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::characters::{paintbox_distance, Orientation, OrientedPaintbox};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::graph::iota;
use crate::permutation::{Fenwick, Permutation};
use crate::rational::Rational;

pub use stream::{draw_points, order_key, xi_to_rational, Hit, Locator, Point, SampleStream, XI_BITS, XI_SCALE};

/// The first `n` permutations of an arrangement, stored as initial ranks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrangementPrefix {
    initial_ranks: Vec<usize>,
}

impl ArrangementPrefix {
    /// Checks `1 <= r_k <= k`.
    pub fn new(initial_ranks: Vec<usize>) -> Result<Self> {
        if let Some((k, r)) = initial_ranks.iter().enumerate().find(|&(k, &r)| r < 1 || r > k + 1) {
            return Err(Error::InvalidArgument(format!("initial rank r_{} = {r} outside 1..={}", k + 1, k + 1)));
        }
        Ok(ArrangementPrefix { initial_ranks })
    }

    pub fn n(&self) -> usize {
        self.initial_ranks.len()
    }

    pub fn initial_ranks(&self) -> &[usize] {
        &self.initial_ranks
    }

    /// `Π_k`.
    pub fn permutation(&self, k: usize) -> Result<Permutation> {
        if k > self.n() {
            return Err(Error::OutOfRange { index: k, len: self.n() });
        }
        Permutation::from_initial_ranks(&self.initial_ranks[..k])
    }

    /// `Π_n`.
    pub fn last(&self) -> Permutation {
        Permutation::from_initial_ranks(&self.initial_ranks).expect("ranks validated")
    }

    /// `zs(Π_n)`.
    pub fn shape(&self) -> Composition {
        self.last().zigzag_shape()
    }

    /// Whether every `Π_k` restricts to `Π_{k-1}` and places `k` at `r_k`.
    pub fn is_coherent(&self) -> bool {
        let mut prev = Permutation::identity(0);
        for k in 1..=self.n() {
            let Ok(pi) = self.permutation(k) else { return false };
            let position = pi.values().iter().position(|&v| v as usize == k);
            if position != Some(self.initial_ranks[k - 1] - 1) || pi.restrict(k).ok().as_ref() != Some(&prev) {
                return false;
            }
            prev = pi;
        }
        true
    }
}

/// `r_k = 1 + #{i < k : i ◁ k}` for any strict order given by keys.
fn ranks_from_keys<K: Ord>(keys: &[K]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut position = vec![0usize; keys.len()];
    for (pos, &idx) in order.iter().enumerate() {
        position[idx] = pos + 1;
    }
    let mut tree = Fenwick::new(keys.len());
    position
        .iter()
        .map(|&p| {
            let below = tree.prefix(p);
            tree.add(p, 1);
            below + 1
        })
        .collect()
}

fn arrangement_from_points(locator: &Locator, points: &[Point]) -> ArrangementPrefix {
    let keys: Vec<_> = points.iter().enumerate().map(|(j, p)| order_key(locator, p, j + 1)).collect();
    ArrangementPrefix { initial_ranks: ranks_from_keys(&keys) }
}

/// One arrangement of `[n]` by the oriented paintbox construction, using the
/// stream for `(seed, trial 0)`.
pub fn sample_arrangement(pb: &OrientedPaintbox, n: usize, seed: u64) -> ArrangementPrefix {
    sample_trial(&Locator::new(pb), n, seed, 0)
}

fn sample_trial(locator: &Locator, n: usize, seed: u64, trial: u64) -> ArrangementPrefix {
    let mut stream = SampleStream::new(seed, trial);
    arrangement_from_points(locator, &draw_points(locator, n, &mut stream))
}

/// Counts `key(arrangement)` over independent trials; for several paintboxes
/// each trial first picks one with the given probabilities.
pub fn tally_mixture<K, F>(prior: &[(OrientedPaintbox, f64)], n: usize, trials: u64, seed: u64, key: F) -> Result<BTreeMap<K, u64>>
where
    K: Ord + Send,
    F: Fn(&ArrangementPrefix) -> K + Sync,
{
    if prior.is_empty() || prior.iter().any(|(_, w)| !(*w >= 0.0)) {
        return Err(Error::InvalidArgument("prior needs nonnegative weights".into()));
    }
    let total: f64 = prior.iter().map(|(_, w)| w).sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::BadWeights(total.to_string()));
    }
    let locators: Vec<Locator> = prior.iter().map(|(pb, _)| Locator::new(pb)).collect();
    let counts = (0..trials)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<K, u64>, trial| {
            let mut stream = SampleStream::new(seed, trial);
            let mut pick = 0;
            if prior.len() > 1 {
                let mut u = stream.uniform();
                while pick + 1 < prior.len() && u >= prior[pick].1 {
                    u -= prior[pick].1;
                    pick += 1;
                }
            }
            let points = draw_points(&locators[pick], n, &mut stream);
            *acc.entry(key(&arrangement_from_points(&locators[pick], &points))).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, merge_counts);
    Ok(counts)
}

fn merge_counts<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Counts `key(arrangement)` over `trials` independent arrangements of `[n]`.
pub fn tally<K, F>(pb: &OrientedPaintbox, n: usize, trials: u64, seed: u64, key: F) -> BTreeMap<K, u64>
where
    K: Ord + Send,
    F: Fn(&ArrangementPrefix) -> K + Sync,
{
    tally_mixture(&[(pb.clone(), 1.0)], n, trials, seed, key).expect("single-point prior")
}

/// Shape counts of `zs(Π_n)` over independent trials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalPmf {
    pub trials: u64,
    pub counts: BTreeMap<Composition, u64>,
}

impl EmpiricalPmf {
    pub fn frequency(&self, lambda: &Composition) -> f64 {
        self.counts.get(lambda).copied().unwrap_or(0) as f64 / self.trials as f64
    }
}

pub fn empirical_pmf(pb: &OrientedPaintbox, n: usize, trials: u64, seed: u64) -> Result<EmpiricalPmf> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    Ok(EmpiricalPmf { trials, counts: tally(pb, n, trials, seed, ArrangementPrefix::shape) })
}

/// `(n, dist(ι_n(zs(Π_n)), pb))` along one arrangement.
pub fn lln_trajectory(pb: &OrientedPaintbox, checkpoints: &[usize], seed: u64) -> Result<Vec<(usize, Rational)>> {
    if let Some(&bad) = checkpoints.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidArgument(format!("checkpoint {bad} is below 2")));
    }
    let max = checkpoints.iter().copied().max().unwrap_or(0);
    let arrangement = sample_arrangement(pb, max, seed);
    checkpoints
        .iter()
        .map(|&n| {
            let shape = arrangement.permutation(n)?.zigzag_shape();
            Ok((n, paintbox_distance(&iota(&shape)?, pb)))
        })
        .collect()
}

/// `φ̂_j = #{i <= n : i ◁ j} / n` for `j = 1..=n`.
pub fn heights(pb: &OrientedPaintbox, n: usize, seed: u64) -> Vec<f64> {
    heights_of(&sample_arrangement(pb, n, seed))
}

pub fn heights_of(arrangement: &ArrangementPrefix) -> Vec<f64> {
    let n = arrangement.n();
    let inverse = arrangement.last().inverse();
    inverse.values().iter().map(|&pos| (pos as f64 - 1.0) / n as f64).collect()
}

fn initial_point(pb: &OrientedPaintbox, k: usize) -> &Rational {
    pb.intervals()[k].initial_point()
}

/// `ν[0, x]` for the quasi-uniform measure of `pb`.
pub fn quasi_uniform_cdf(pb: &OrientedPaintbox, x: &Rational) -> Result<Rational> {
    quasi_uniform(pb, x, true)
}

/// `ν[0, x[`.
pub fn quasi_uniform_cdf_strict(pb: &OrientedPaintbox, x: &Rational) -> Result<Rational> {
    quasi_uniform(pb, x, false)
}

fn quasi_uniform(pb: &OrientedPaintbox, x: &Rational, closed: bool) -> Result<Rational> {
    if x < &Rational::zero() || x > &Rational::one() {
        return Err(Error::InvalidArgument(format!("x = {x} outside [0, 1]")));
    }
    let mut mass = x.clone();
    for (k, iv) in pb.intervals().iter().enumerate() {
        let covered = (x.min(&iv.right) - &iv.left).max(Rational::zero());
        mass -= covered;
        let atom = initial_point(pb, k);
        if atom < x || (closed && atom == x) {
            mass += iv.length();
        }
    }
    Ok(mass)
}

/// Third coordinate of the height encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
    Dot,
}

/// `(φ_j, s_j)` for one arrangement together with the arrangement built
/// directly from the same sample points.
#[derive(Debug, Clone)]
pub struct HeightEncoding {
    pub codes: Vec<(Rational, Step)>,
    pub direct: ArrangementPrefix,
}

impl HeightEncoding {
    /// Rebuilds the arrangement from `(φ_j, s_j)` alone: for `i < j`,
    /// `i ◁ j` iff `φ_i < φ_j`, or `φ_i = φ_j` and `s_j` is up. Quadratic.
    pub fn reconstruct(&self) -> ArrangementPrefix {
        let ranks = (0..self.codes.len())
            .map(|j| {
                let (phi_j, s_j) = &self.codes[j];
                1 + self.codes[..j].iter().filter(|(phi_i, _)| phi_i < phi_j || (phi_i == phi_j && *s_j == Step::Up)).count()
            })
            .collect();
        ArrangementPrefix { initial_ranks: ranks }
    }
}

pub fn encode_heights(pb: &OrientedPaintbox, n: usize, seed: u64) -> HeightEncoding {
    let locator = Locator::new(pb);
    let mut stream = SampleStream::new(seed, 0);
    let points = draw_points(&locator, n, &mut stream);
    let codes = points
        .iter()
        .map(|p| match p.hit {
            Hit::Complement => (xi_to_rational(p.xi), Step::Dot),
            Hit::Interval(k) => {
                let step = match pb.intervals()[k].orientation {
                    Orientation::Up => Step::Up,
                    Orientation::Down => Step::Down,
                };
                (initial_point(pb, k).clone(), step)
            }
        })
        .collect();
    HeightEncoding { codes, direct: arrangement_from_points(&locator, &points) }
}

/// Initial ranks of the bi-interval paintbox with a Beta(θ₁, θ₂) split point,
/// drawn sequentially by the urn: `r_1 = 1`, and for `m >= 2`
/// `P(r_m = 1) = (k + θ₁) / (m - 2 + θ₁ + θ₂)` with `k` the number of ones
/// among `r_2..r_{m-1}`, otherwise `r_m = m`.
pub fn polya_bi_interval(theta1: f64, theta2: f64, n: usize, seed: u64) -> Result<ArrangementPrefix> {
    polya_trial(theta1, theta2, n, seed, 0)
}

pub fn polya_trial(theta1: f64, theta2: f64, n: usize, seed: u64, trial: u64) -> Result<ArrangementPrefix> {
    if !(theta1 > 0.0 && theta2 > 0.0 && theta1.is_finite() && theta2.is_finite()) {
        return Err(Error::InvalidArgument(format!("θ must be positive and finite, got ({theta1}, {theta2})")));
    }
    let mut stream = SampleStream::new(seed, trial);
    let mut ranks = Vec::with_capacity(n);
    let mut ones = 0usize;
    for m in 1..=n {
        if m == 1 {
            ranks.push(1);
            continue;
        }
        let p = (ones as f64 + theta1) / ((m - 2) as f64 + theta1 + theta2);
        if stream.uniform() < p {
            ones += 1;
            ranks.push(1);
        } else {
            ranks.push(m);
        }
    }
    Ok(ArrangementPrefix { initial_ranks: ranks })
}

/// Counts `zs(Π_n)` over independent urn runs.
pub fn polya_pmf(theta1: f64, theta2: f64, n: usize, trials: u64, seed: u64) -> Result<EmpiricalPmf> {
    polya_trial(theta1, theta2, 1, seed, 0)?;
    let counts = (0..trials)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, trial| {
            let shape = polya_trial(theta1, theta2, n, seed, trial).expect("validated").shape();
            *acc.entry(shape).or_insert(0u64) += 1;
            acc
        })
        .reduce(BTreeMap::new, merge_counts);
    Ok(EmpiricalPmf { trials, counts })
}
