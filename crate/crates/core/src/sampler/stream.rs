use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::characters::{Orientation, OrientedPaintbox};
use crate::rational::{self, Rational};

pub const XI_BITS: u32 = 53;
pub const XI_SCALE: u64 = 1 << XI_BITS;

/// Reproducible uniforms `ξ = m / 2^53`, one ChaCha8 stream per `(seed, trial)`.
/// Repeated values are redrawn.
#[derive(Debug, Clone)]
pub struct SampleStream {
    rng: ChaCha8Rng,
    seen: HashSet<u64>,
}

impl SampleStream {
    pub fn new(seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        SampleStream { rng, seen: HashSet::new() }
    }

    /// A fresh 53-bit integer, not necessarily distinct from earlier ones.
    pub fn raw(&mut self) -> u64 {
        self.rng.next_u64() >> (64 - XI_BITS)
    }

    /// A uniform double in `[0, 1[`.
    pub fn uniform(&mut self) -> f64 {
        self.raw() as f64 / XI_SCALE as f64
    }

    /// Next `m` distinct from every earlier value of this method and
    /// accepted by `keep`.
    pub fn next_distinct(&mut self, keep: impl Fn(u64) -> bool) -> u64 {
        loop {
            let m = self.raw();
            if keep(m) && self.seen.insert(m) {
                return m;
            }
        }
    }
}

pub fn xi_to_rational(m: u64) -> Rational {
    Rational::new(BigInt::from(m), BigInt::from(XI_SCALE))
}

/// `ceil(e · 2^53)` and whether `e · 2^53` is an integer.
fn threshold(e: &Rational) -> (u64, bool) {
    let scaled = e * rational::from_biguint(&XI_SCALE.into());
    let exact = scaled.is_integer();
    (rational::ceil_int(&scaled).to_u64().expect("endpoint in [0, 1]"), exact)
}

/// Where a sample point fell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hit {
    Interval(usize),
    Complement,
}

/// A paintbox with endpoints precomputed on the `2^-53` grid, so that
/// locating a point needs integer comparisons only.
#[derive(Debug, Clone)]
pub struct Locator {
    lefts: Vec<(u64, bool)>,
    rights: Vec<(u64, bool)>,
    orientations: Vec<Orientation>,
    exact_endpoints: Vec<u64>,
}

impl Locator {
    pub fn new(pb: &OrientedPaintbox) -> Self {
        let lefts: Vec<_> = pb.intervals().iter().map(|iv| threshold(&iv.left)).collect();
        let rights: Vec<_> = pb.intervals().iter().map(|iv| threshold(&iv.right)).collect();
        let mut exact_endpoints: Vec<u64> =
            lefts.iter().chain(&rights).filter(|(_, exact)| *exact).map(|(t, _)| *t).collect();
        exact_endpoints.sort_unstable();
        exact_endpoints.dedup();
        Locator { lefts, rights, orientations: pb.intervals().iter().map(|iv| iv.orientation).collect(), exact_endpoints }
    }

    pub fn interval_count(&self) -> usize {
        self.lefts.len()
    }

    pub fn orientation(&self, k: usize) -> Orientation {
        self.orientations[k]
    }

    pub fn is_endpoint(&self, m: u64) -> bool {
        self.exact_endpoints.binary_search(&m).is_ok()
    }

    /// Number of intervals whose left endpoint lies strictly below `m / 2^53`.
    pub fn slot(&self, m: u64) -> usize {
        self.lefts.partition_point(|&(t, exact)| m > t || (m == t && !exact))
    }

    /// Locates a point that is not an endpoint.
    pub fn locate(&self, m: u64) -> Hit {
        let slot = self.slot(m);
        if slot == 0 {
            return Hit::Complement;
        }
        let (t, _) = self.rights[slot - 1];
        if m < t {
            Hit::Interval(slot - 1)
        } else {
            Hit::Complement
        }
    }
}

/// A located sample point `ξ_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Point {
    pub xi: u64,
    pub hit: Hit,
}

/// Draws `n` distinct points, none on an endpoint.
pub fn draw_points(locator: &Locator, n: usize, stream: &mut SampleStream) -> Vec<Point> {
    (0..n)
        .map(|_| {
            let xi = stream.next_distinct(|m| !locator.is_endpoint(m));
            Point { xi, hit: locator.locate(xi) }
        })
        .collect()
}

/// Sort key realising the order `◁` on located points: complement points by
/// position, points of one interval by index (up) or reversed index (down).
pub fn order_key(locator: &Locator, point: &Point, index: usize) -> (usize, i128) {
    match point.hit {
        Hit::Complement => (2 * locator.slot(point.xi), point.xi as i128),
        Hit::Interval(k) => {
            let minor = match locator.orientation(k) {
                Orientation::Up => index as i128,
                Orientation::Down => -(index as i128),
            };
            (2 * k + 1, minor)
        }
    }
}
