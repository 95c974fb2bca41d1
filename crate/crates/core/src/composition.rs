//! Compositions viewed as zigzag diagrams, and their `+`/`-` word encoding.
//!
//! A composition `(λ1, ..., λℓ)` is drawn as a zigzag whose j-th row holds
//! `λj` boxes; box `j + 1` sits either to the right of box `j` (same row, a
//! `+` letter) or below it (next row, a `-` letter). The word of a zigzag
//! with `n` boxes therefore has `n - 1` letters, and this is a bijection
//! between zigzags of size `n >= 1` and words of length `n - 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A word over `{+, -}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(pub Vec<Sign>);

impl BinaryWord {
    pub fn letters(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Maximal runs of equal letters as `(sign, length)`, left to right.
    pub fn clusters(&self) -> Vec<(Sign, usize)> {
        let mut out: Vec<(Sign, usize)> = Vec::new();
        for &s in &self.0 {
            match out.last_mut() {
                Some((last, len)) if *last == s => *len += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// Whether `self` can be obtained from `other` by deleting letters.
    pub fn is_subword_of(&self, other: &BinaryWord) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|c| it.any(|d| d == c))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                other => Err(Error::InvalidWord(format!("unexpected letter `{other}` in `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord)
    }
}

/// A composition of `n`: an ordered sequence of positive parts, possibly empty.
///
/// Ordering is lexicographic on the parts, which fixes the iteration order of
/// every level of the graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-row zigzag `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n as u32])
        }
    }

    /// The one-column zigzag `(1^n)`.
    pub fn column(n: usize) -> Self {
        Composition(vec![1; n])
    }

    /// The hook `(1^l, k + 1)`.
    pub fn hook(l: usize, k: usize) -> Self {
        let mut parts = vec![1; l];
        parts.push(k as u32 + 1);
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Letter `j` (0-based) is `+` iff boxes `j + 1` and `j + 2` share a row.
    /// The empty composition maps to the empty word by convention.
    pub fn to_word(&self) -> BinaryWord {
        let mut letters = Vec::with_capacity(self.size().saturating_sub(1));
        for (i, &p) in self.0.iter().enumerate() {
            if i > 0 {
                letters.push(Sign::Minus);
            }
            letters.extend(std::iter::repeat_n(Sign::Plus, p as usize - 1));
        }
        BinaryWord(letters)
    }

    /// Inverse of [`to_word`](Self::to_word); the empty word gives `(1)`.
    pub fn from_word(word: &BinaryWord) -> Self {
        Self::from_letters(word.letters())
    }

    pub(crate) fn from_letters(letters: &[Sign]) -> Self {
        let mut parts = vec![1u32];
        for s in letters {
            match s {
                Sign::Plus => *parts.last_mut().unwrap() += 1,
                Sign::Minus => parts.push(1),
            }
        }
        Composition(parts)
    }

    /// Reflection of the zigzag in the diagonal: flip every letter and reverse.
    pub fn conjugate(&self) -> Self {
        if self.is_empty() {
            return Self::empty();
        }
        let mut letters: Vec<Sign> = self.to_word().0.into_iter().map(Sign::flip).collect();
        letters.reverse();
        Self::from_letters(&letters)
    }

    /// Partial sums of all parts but the last: the descent set of any
    /// permutation of this shape (1-based positions).
    pub fn descent_positions(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    /// Builds the composition of `n` whose descent set is `descents`.
    pub fn from_descents(n: usize, descents: &[usize]) -> Result<Self> {
        if n == 0 {
            return if descents.is_empty() {
                Ok(Self::empty())
            } else {
                Err(Error::InvalidComposition("descents given for n = 0".into()))
            };
        }
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            if d <= prev || d >= n {
                return Err(Error::InvalidComposition(format!("descent set {descents:?} invalid for n = {n}")));
            }
            parts.push((d - prev) as u32);
            prev = d;
        }
        parts.push((n - prev) as u32);
        Ok(Composition(parts))
    }

    /// Whether this composition is a partition (weakly decreasing parts).
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// All `2^(n-1)` compositions of `n` in lexicographic order (`[∅]` for `n = 0`).
    pub fn all_of_size(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Self::empty()];
        }
        let mut out = Vec::with_capacity(1 << (n - 1).min(30));
        let mut current = Vec::new();
        fn rec(rest: usize, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(current.clone()));
                return;
            }
            for first in 1..=rest {
                current.push(first as u32);
                rec(rest - first, current, out);
                current.pop();
            }
        }
        rec(n, &mut current, &mut out);
        out
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn partitions_of(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, max: usize, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(current.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                current.push(part as u32);
                rec(rest - part, part, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Transposed Young diagram; only meaningful for partitions.
    pub fn transpose_partition(&self) -> Composition {
        let rows = self.0.first().copied().unwrap_or(0);
        let parts = (1..=rows).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect();
        Composition(parts)
    }

    /// Every composition obtained by splitting parts of `self` (including `self`).
    pub fn refinements(&self) -> Vec<Composition> {
        let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
        for &p in &self.0 {
            let pieces = Composition::all_of_size(p as usize);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    pieces.iter().map(move |piece| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(piece.parts());
                        v
                    })
                })
                .collect();
        }
        acc.into_iter().map(Composition).collect()
    }

    /// The sub-zigzag formed by boxes `start + 1 ..= end` (0-based half-open range).
    pub fn sub_zigzag(&self, start: usize, end: usize) -> Composition {
        debug_assert!(start <= end && end <= self.size());
        if start == end {
            return Self::empty();
        }
        let word = self.to_word();
        Self::from_letters(&word.letters()[start..end - 1])
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma-separated parts, e.g. `3,1,4`; parentheses are tolerated and the
    /// empty string (or `()`) is the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidComposition(format!("bad part `{}` in `{s}`", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// Shorthand used heavily in tests: `comp(&[3, 1, 4])`.
pub fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).expect("positive parts")
}
