use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Orientation::Up => "up",
            Orientation::Down => "down",
        }
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "up" | "+" => Ok(Orientation::Up),
            "down" | "-" => Ok(Orientation::Down),
            other => Err(Error::InvalidArgument(format!("orientation must be `up` or `down`, got `{other}`"))),
        }
    }
}

/// An open interval `]left, right[` inside `]0, 1[` with an orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub left: Rational,
    pub right: Rational,
    pub orientation: Orientation,
}

impl Interval {
    pub fn new(left: Rational, right: Rational, orientation: Orientation) -> Result<Self> {
        if left < Rational::zero() || right > Rational::one() || left >= right {
            return Err(Error::MalformedPaintbox(format!(
                "interval ]{}, {}[ must satisfy 0 <= left < right <= 1",
                rational::format(&left),
                rational::format(&right)
            )));
        }
        Ok(Interval { left, right, orientation })
    }

    pub fn up(left: Rational, right: Rational) -> Result<Self> {
        Self::new(left, right, Orientation::Up)
    }

    pub fn down(left: Rational, right: Rational) -> Result<Self> {
        Self::new(left, right, Orientation::Down)
    }

    pub fn length(&self) -> Rational {
        &self.right - &self.left
    }

    /// Left endpoint for up-intervals, right endpoint for down-intervals.
    pub fn initial_point(&self) -> &Rational {
        match self.orientation {
            Orientation::Up => &self.left,
            Orientation::Down => &self.right,
        }
    }
}

/// One piece of the left-to-right layout of `[0, 1]`: an interval of either
/// orientation or a maximal gap of the complement with positive length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub left: Rational,
    pub right: Rational,
    pub kind: SegmentKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentKind {
    Up,
    Down,
    Gap,
}

impl Segment {
    pub fn length(&self) -> Rational {
        &self.right - &self.left
    }
}

/// A pair `(U↑, U↓)` of disjoint open subsets of `]0, 1[`, each a finite
/// union of intervals, stored as one list sorted by left endpoint.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct OrientedPaintbox {
    intervals: Vec<Interval>,
}

impl OrientedPaintbox {
    /// Sorts the intervals and checks that they are pairwise disjoint.
    pub fn new(mut intervals: Vec<Interval>) -> Result<Self> {
        intervals.sort_by(|a, b| a.left.cmp(&b.left));
        for w in intervals.windows(2) {
            if w[1].left < w[0].right {
                return Err(Error::MalformedPaintbox(format!(
                    "intervals ]{}, {}[ and ]{}, {}[ overlap",
                    rational::format(&w[0].left),
                    rational::format(&w[0].right),
                    rational::format(&w[1].left),
                    rational::format(&w[1].right)
                )));
            }
        }
        Ok(OrientedPaintbox { intervals })
    }

    /// `(∅, ∅)`: every point falls in the complement.
    pub fn empty() -> Self {
        OrientedPaintbox::default()
    }

    /// `a` equal up-intervals.
    pub fn equispaced(a: usize, orientation: Orientation) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidArgument("need at least one interval".into()));
        }
        let a = a as i64;
        let intervals =
            (0..a).map(|i| Interval::new(rational::ratio(i, a), rational::ratio(i + 1, a), orientation)).collect::<Result<_>>()?;
        Self::new(intervals)
    }

    /// Down-interval `]0, φ[` followed by up-interval `]φ, 1[`.
    pub fn bi_interval(phi: Rational) -> Result<Self> {
        Self::new(vec![Interval::down(Rational::zero(), phi.clone())?, Interval::up(phi, Rational::one())?])
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn total_length(&self) -> Rational {
        self.intervals.iter().map(Interval::length).sum()
    }

    /// Whether the intervals have full measure.
    pub fn is_finitary(&self) -> bool {
        self.total_length() == Rational::one()
    }

    /// Mass of the complement of `U↑ ∪ U↓`.
    pub fn gap_mass(&self) -> Rational {
        Rational::one() - self.total_length()
    }

    /// Intervals and positive-length complement gaps from left to right.
    pub fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::with_capacity(2 * self.intervals.len() + 1);
        let mut at = Rational::zero();
        for iv in &self.intervals {
            if iv.left > at {
                out.push(Segment { left: at.clone(), right: iv.left.clone(), kind: SegmentKind::Gap });
            }
            let kind = match iv.orientation {
                Orientation::Up => SegmentKind::Up,
                Orientation::Down => SegmentKind::Down,
            };
            out.push(Segment { left: iv.left.clone(), right: iv.right.clone(), kind });
            at = iv.right.clone();
        }
        if at < Rational::one() {
            out.push(Segment { left: at, right: Rational::one(), kind: SegmentKind::Gap });
        }
        out
    }

    /// Reflection `x ↦ 1 - x` with orientations swapped.
    pub fn mirror(&self) -> OrientedPaintbox {
        let one = Rational::one();
        let intervals = self
            .intervals
            .iter()
            .map(|iv| Interval { left: &one - &iv.right, right: &one - &iv.left, orientation: iv.orientation.flip() })
            .collect();
        OrientedPaintbox::new(intervals).expect("mirror of a valid paintbox")
    }

    /// `[0, 1] ∖ U_o` as sorted closed intervals (possibly single points).
    fn complement(&self, orientation: Orientation) -> Vec<(Rational, Rational)> {
        let mut out = Vec::new();
        let mut at = Rational::zero();
        for iv in self.intervals.iter().filter(|iv| iv.orientation == orientation) {
            out.push((at.clone(), iv.left.clone()));
            at = iv.right.clone();
        }
        out.push((at, Rational::one()));
        out
    }

    /// The text format: one `left right orientation` line per interval.
    pub fn to_text(&self) -> String {
        self.intervals
            .iter()
            .map(|iv| format!("{} {} {}\n", rational::format(&iv.left), rational::format(&iv.right), iv.orientation.name()))
            .collect()
    }

    /// Parses the text format. Blank lines and `#` comments are skipped; at
    /// least one interval line is required and lines must be sorted by left
    /// endpoint without overlaps.
    pub fn parse(text: &str) -> Result<Self> {
        let mut intervals: Vec<Interval> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: line_no, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(err(format!("expected `left right orientation`, got `{line}`")));
            }
            let left = rational::parse(fields[0]).map_err(|e| err(e.to_string()))?;
            let right = rational::parse(fields[1]).map_err(|e| err(e.to_string()))?;
            let orientation: Orientation = fields[2].parse().map_err(|e: Error| err(e.to_string()))?;
            let iv = Interval::new(left, right, orientation).map_err(|e| err(e.to_string()))?;
            if let Some(prev) = intervals.last() {
                if iv.left < prev.left {
                    return Err(err("intervals must be sorted by left endpoint".into()));
                }
                if iv.left < prev.right {
                    return Err(err(format!(
                        "interval overlaps the previous one ending at {}",
                        rational::format(&prev.right)
                    )));
                }
            }
            intervals.push(iv);
        }
        if intervals.is_empty() {
            return Err(Error::Parse { line: 0, message: "paintbox file contains no intervals".into() });
        }
        Self::new(intervals)
    }
}

impl fmt::Display for OrientedPaintbox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|iv| format!("{}]{},{}[", iv.orientation.name(), rational::format(&iv.left), rational::format(&iv.right)))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Interval lengths of `U↑` (`alpha`) and `U↓` (`beta`), each nonincreasing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RankedFrequencies {
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
}

impl RankedFrequencies {
    /// Sorts both sequences down and checks positivity and total mass `<= 1`.
    pub fn new(mut alpha: Vec<Rational>, mut beta: Vec<Rational>) -> Result<Self> {
        if alpha.iter().chain(&beta).any(|x| *x <= Rational::zero()) {
            return Err(Error::InvalidArgument("frequencies must be positive".into()));
        }
        alpha.sort_by(|a, b| b.cmp(a));
        beta.sort_by(|a, b| b.cmp(a));
        let r = RankedFrequencies { alpha, beta };
        if r.gamma() < Rational::zero() {
            return Err(Error::InvalidArgument("frequencies sum to more than 1".into()));
        }
        Ok(r)
    }

    /// `1 - Σα - Σβ`.
    pub fn gamma(&self) -> Rational {
        Rational::one() - self.alpha.iter().sum::<Rational>() - self.beta.iter().sum::<Rational>()
    }
}

pub fn rank(pb: &OrientedPaintbox) -> RankedFrequencies {
    let lengths = |o: Orientation| -> Vec<Rational> {
        let mut v: Vec<Rational> = pb.intervals.iter().filter(|iv| iv.orientation == o).map(Interval::length).collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    };
    RankedFrequencies { alpha: lengths(Orientation::Up), beta: lengths(Orientation::Down) }
}

/// Hausdorff-type distance: the least `θ` such that the `θ`-inflations of the
/// closed complements `[0,1] ∖ U↑` and `[0,1] ∖ U↓` of each paintbox cover
/// the corresponding complements of the other.
pub fn paintbox_distance(a: &OrientedPaintbox, b: &OrientedPaintbox) -> Rational {
    let mut best = Rational::zero();
    for o in [Orientation::Up, Orientation::Down] {
        let (ca, cb) = (a.complement(o), b.complement(o));
        for d in [directed_distance(&ca, &cb), directed_distance(&cb, &ca)] {
            if d > best {
                best = d;
            }
        }
    }
    best
}

fn dist_to_set(x: &Rational, set: &[(Rational, Rational)]) -> Rational {
    // first interval not entirely left of x
    let k = set.partition_point(|(_, hi)| hi < x);
    let right = set.get(k).map(|(lo, _)| if x < lo { lo - x } else { Rational::zero() });
    let left = k.checked_sub(1).map(|j| x - &set[j].1);
    match (left, right) {
        (Some(l), Some(r)) => l.min(r),
        (Some(d), None) | (None, Some(d)) => d,
        (None, None) => unreachable!("complements always contain 0 and 1"),
    }
}

/// `sup_{x ∈ A} dist(x, B)` for sorted disjoint unions of closed intervals.
/// The distance to `B` is piecewise linear with peaks only at midpoints of
/// the gaps of `B`, so endpoints of `A` plus those midpoints suffice.
fn directed_distance(a: &[(Rational, Rational)], b: &[(Rational, Rational)]) -> Rational {
    let two = rational::int(2);
    let contains = |x: &Rational| {
        let k = a.partition_point(|(_, hi)| hi < x);
        a.get(k).is_some_and(|(lo, _)| lo <= x)
    };
    let mut candidates: Vec<Rational> = a.iter().flat_map(|(lo, hi)| [lo.clone(), hi.clone()]).collect();
    for w in b.windows(2) {
        let mid = (&w[0].1 + &w[1].0) / &two;
        if contains(&mid) {
            candidates.push(mid);
        }
    }
    candidates.iter().map(|x| dist_to_set(x, b)).max().unwrap_or_else(Rational::zero)
}
