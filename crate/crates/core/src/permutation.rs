//! Permutations in one-row notation and their descent statistics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, Sign};
use crate::error::{Error, Result};

/// A permutation `π(1) ... π(n)` of `[n]`, stored by values.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{values:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positions (1-based) of each value: `inverse()[v - 1] = π⁻¹(v)`.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.len()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = pos as u32 + 1;
        }
        Permutation(inv)
    }

    /// The word with `+` at ascents and `-` at descents.
    pub fn up_down_word(&self) -> Vec<Sign> {
        self.0.windows(2).map(|w| if w[0] < w[1] { Sign::Plus } else { Sign::Minus }).collect()
    }

    /// Lengths of the maximal increasing runs.
    pub fn zigzag_shape(&self) -> Composition {
        if self.is_empty() {
            return Composition::empty();
        }
        Composition::from_letters(&self.up_down_word())
    }

    /// Positions `j` (1-based) with `π(j) > π(j + 1)`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.0.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(j, _)| j + 1).collect()
    }

    /// Deletes value `j` and ranks the remaining values.
    pub fn restrict(&self, j: usize) -> Result<Permutation> {
        let n = self.len();
        if j == 0 || j > n {
            return Err(Error::OutOfRange { index: j, len: n });
        }
        let j = j as u32;
        Ok(Permutation(self.0.iter().filter(|&&v| v != j).map(|&v| if v > j { v - 1 } else { v }).collect()))
    }

    /// The `n + 1` permutations of `[n + 1]` obtained by inserting `n + 1`
    /// at the front, between any two entries, or at the end (in that order).
    pub fn extensions(&self) -> Vec<Permutation> {
        let n = self.len();
        let top = n as u32 + 1;
        (0..=n)
            .map(|pos| {
                let mut v = Vec::with_capacity(n + 1);
                v.extend_from_slice(&self.0[..pos]);
                v.push(top);
                v.extend_from_slice(&self.0[pos..]);
                Permutation(v)
            })
            .collect()
    }

    /// Representative of a zigzag shape: the last run receives `1..=λℓ`, the
    /// run before it the next block of values, and so on. Descents fall
    /// exactly at run boundaries.
    pub fn canonical_of_shape(shape: &Composition) -> Permutation {
        let n = shape.size() as u32;
        let mut values = Vec::with_capacity(n as usize);
        let mut top = n;
        for &part in shape.parts() {
            let start = top - part + 1;
            values.extend(start..=top);
            top -= part;
        }
        Permutation(values)
    }

    /// Initial ranks `r_k = Π_k⁻¹(k)` of the coherent family `Π_1, ..., Π_n`
    /// formed by the restrictions of `self`.
    pub fn initial_ranks(&self) -> Vec<usize> {
        let n = self.len();
        let pos = self.inverse();
        let mut fenwick = Fenwick::new(n);
        let mut ranks = Vec::with_capacity(n);
        for k in 1..=n {
            let p = pos.0[k - 1] as usize;
            ranks.push(fenwick.prefix(p) + 1);
            fenwick.add(p, 1);
        }
        ranks
    }

    /// Materialises `Π_n` from initial ranks `r_1..r_n` (`1 <= r_k <= k`).
    pub fn from_initial_ranks(ranks: &[usize]) -> Result<Permutation> {
        let n = ranks.len();
        for (i, &r) in ranks.iter().enumerate() {
            if r == 0 || r > i + 1 {
                return Err(Error::InvalidArgument(format!("initial rank r_{} = {r} outside 1..={}", i + 1, i + 1)));
            }
        }
        // Element k sits at position r_k among 1..k; peeling k = n, n-1, ...
        // each takes the r_k-th still-free slot.
        let mut fenwick = Fenwick::new(n);
        for p in 1..=n {
            fenwick.add(p, 1);
        }
        let mut values = vec![0u32; n];
        for k in (1..=n).rev() {
            let slot = fenwick.find_kth(ranks[k - 1]);
            values[slot - 1] = k as u32;
            fenwick.add(slot, -1);
        }
        Ok(Permutation(values))
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(Permutation(current.clone()));
            // next lexicographic permutation
            let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Either comma-separated values or, for `n <= 9`, a digit string like `13842567`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let values = if t.contains(',') {
            t.split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| Error::InvalidPermutation(s.to_string())))
                .collect::<Result<Vec<_>>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::InvalidPermutation(s.to_string())))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

/// Binary indexed tree over positions `1..=n`.
pub(crate) struct Fenwick {
    tree: Vec<i64>,
}

impl Fenwick {
    pub(crate) fn new(n: usize) -> Self {
        Fenwick { tree: vec![0; n + 1] }
    }

    pub(crate) fn add(&mut self, mut i: usize, delta: i64) {
        while i < self.tree.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum over positions `1..=i`.
    pub(crate) fn prefix(&self, mut i: usize) -> usize {
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        s as usize
    }

    /// Smallest position whose prefix sum reaches `k` (counts must be 0/1).
    pub(crate) fn find_kth(&self, mut k: usize) -> usize {
        let n = self.tree.len() - 1;
        let mut pos = 0;
        let mut step = n.next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next <= n && (self.tree[next] as usize) < k {
                pos = next;
                k -= self.tree[next] as usize;
            }
            step >>= 1;
        }
        pos + 1
    }
}
