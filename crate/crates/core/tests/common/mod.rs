#![allow(dead_code)]

use num_rational::BigRational;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use zigzag::characters::Interval;
use zigzag::rational::{int, ratio};
use zigzag::{Composition, Orientation, OrientedPaintbox, Rational};
use zigzag_oracle::Factor;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn below(rng: &mut ChaCha8Rng, k: u64) -> u64 {
    rng.next_u64() % k
}

fn orientation(rng: &mut ChaCha8Rng) -> Orientation {
    if below(rng, 2) == 0 {
        Orientation::Up
    } else {
        Orientation::Down
    }
}

/// Distinct sorted grid points `k/den` for `k` in `0..=den`.
fn grid_points(rng: &mut ChaCha8Rng, den: i64, count: usize, inner_only: bool) -> Vec<i64> {
    let (lo, hi) = if inner_only { (1, den - 1) } else { (0, den) };
    let mut pts: Vec<i64> = Vec::new();
    while pts.len() < count {
        let k = lo + below(rng, (hi - lo + 1) as u64) as i64;
        if !pts.contains(&k) {
            pts.push(k);
        }
    }
    pts.sort_unstable();
    pts
}

/// 1 to 4 intervals on a grid of denominator 6..=12; with `gaps` the
/// complement has positive mass, otherwise the intervals tile `]0,1[`.
pub fn random_paintbox(rng: &mut ChaCha8Rng, gaps: bool) -> OrientedPaintbox {
    loop {
        let den = 6 + below(rng, 7) as i64;
        let mut m = 1 + below(rng, 4) as usize;
        if gaps {
            m = m.min((den as usize + 1) / 2);
        }
        let intervals: Vec<Interval> = if gaps {
            let pts = grid_points(rng, den, 2 * m, false);
            pts.chunks(2).map(|c| Interval::new(ratio(c[0], den), ratio(c[1], den), orientation(rng)).unwrap()).collect()
        } else {
            let mut cuts = vec![0];
            cuts.extend(grid_points(rng, den, m - 1, true));
            cuts.push(den);
            cuts.windows(2).map(|c| Interval::new(ratio(c[0], den), ratio(c[1], den), orientation(rng)).unwrap()).collect()
        };
        let pb = OrientedPaintbox::new(intervals).unwrap();
        if gaps == (pb.total_length() < int(1)) {
            return pb;
        }
    }
}

/// Half of the paintboxes with gaps, half without.
pub fn paintbox_family(seed: u64, count: usize) -> Vec<OrientedPaintbox> {
    let mut r = rng(seed);
    (0..count).map(|i| random_paintbox(&mut r, i % 2 == 0)).collect()
}

pub fn fixture() -> OrientedPaintbox {
    OrientedPaintbox::parse("0 3/8 up\n3/8 3/4 down\n3/4 1 up\n").unwrap()
}

pub fn shape(lambda: &Composition) -> Vec<u32> {
    lambda.parts().to_vec()
}

/// The oracle uses the same big-rational type; kept as a seam.
pub fn to_big(r: &Rational) -> BigRational {
    r.clone()
}

/// Factor list for the splitting-sum oracle, read directly off the intervals:
/// gaps become uniform factors weighted by their length.
pub fn oracle_factors(pb: &OrientedPaintbox) -> Vec<(Factor, BigRational)> {
    let mut out = Vec::new();
    let mut at = int(0);
    for iv in pb.intervals() {
        if iv.left > at {
            out.push((Factor::Uniform, to_big(&(&iv.left - &at))));
        }
        let f = match iv.orientation {
            Orientation::Up => Factor::Row,
            Orientation::Down => Factor::Column,
        };
        out.push((f, to_big(&(&iv.right - &iv.left))));
        at = iv.right.clone();
    }
    if at < int(1) {
        out.push((Factor::Uniform, to_big(&(int(1) - &at))));
    }
    out
}

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(int(1), |acc, k| acc * int(k))
}

pub fn median(mut xs: Vec<Rational>) -> Rational {
    xs.sort();
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2].clone()
    } else {
        (&xs[n / 2 - 1] + &xs[n / 2]) / int(2)
    }
}

/// Binomial standard error of a frequency with success probability `q`.
pub fn stderr(q: f64, trials: u64) -> f64 {
    (q * (1.0 - q) / trials as f64).sqrt()
}
