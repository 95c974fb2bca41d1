//! The graded graph of zigzag diagrams.
//!
//! `μ ↗ λ` when `λ` is the shape of some permutation of `[n]` extending a
//! permutation of `[n - 1]` of shape `μ`; on words this is deletion of a
//! single letter (subword order). The empty zigzag is the root with the
//! single edge `∅ ↗ (1)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::characters::{Interval, Orientation, OrientedPaintbox};
use crate::composition::{BinaryWord, Composition, Sign};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// The `|μ| + 1` immediate followers of `μ`: each part incremented in turn,
/// then `1` prepended, then every split of a part into two positive pieces
/// with the first piece incremented.
pub fn successors(mu: &Composition) -> Vec<Composition> {
    let parts = mu.parts();
    if parts.is_empty() {
        return vec![Composition::row(1)];
    }
    let mut out = Vec::with_capacity(mu.size() + 1);
    for i in 0..parts.len() {
        let mut v = parts.to_vec();
        v[i] += 1;
        out.push(Composition::new(v).unwrap());
    }
    let mut prepended = Vec::with_capacity(parts.len() + 1);
    prepended.push(1);
    prepended.extend_from_slice(parts);
    out.push(Composition::new(prepended).unwrap());
    for (i, &p) in parts.iter().enumerate() {
        for first in 1..p {
            let mut v = Vec::with_capacity(parts.len() + 1);
            v.extend_from_slice(&parts[..i]);
            v.push(first + 1);
            v.push(p - first);
            v.extend_from_slice(&parts[i + 1..]);
            out.push(Composition::new(v).unwrap());
        }
    }
    out
}

/// All distinct `μ` with `μ ↗ λ`, found by deleting one letter of `w(λ)`,
/// starting from the last cluster.
/// Their number equals the number of letter clusters of `w(λ)` once `|λ| >= 2`.
pub fn predecessors(lambda: &Composition) -> Vec<Composition> {
    match lambda.size() {
        0 => Vec::new(),
        1 => vec![Composition::empty()],
        _ => {
            let word = lambda.to_word();
            let letters = word.letters();
            let mut out: Vec<Composition> = Vec::new();
            for i in 0..letters.len() {
                // deleting any letter of a cluster gives the same word; keep the first
                if i > 0 && letters[i] == letters[i - 1] {
                    continue;
                }
                let mut rest = letters.to_vec();
                rest.remove(i);
                out.push(Composition::from_word(&BinaryWord(rest)));
            }
            // last cluster first
            out.reverse();
            out
        }
    }
}

/// Whether `μ ↗ λ`.
pub fn is_edge(mu: &Composition, lambda: &Composition) -> bool {
    if lambda.size() != mu.size() + 1 {
        return false;
    }
    if mu.is_empty() {
        return true;
    }
    mu.to_word().is_subword_of(&lambda.to_word())
}

/// Whether some ascending chain leads from `μ` to `λ`.
pub fn precedes(mu: &Composition, lambda: &Composition) -> bool {
    if mu.size() > lambda.size() {
        return false;
    }
    if mu.is_empty() {
        return true;
    }
    mu.to_word().is_subword_of(&lambda.to_word())
}

/// Number of standard paths `∅ ↗ ... ↗ λ`, i.e. the number of permutations
/// of `[|λ|]` with zigzag shape `λ`.
///
/// Counted by the ascent/descent transfer: after reading `i` letters,
/// `counts[j]` is the number of valid relative orders of the first `i + 1`
/// entries whose last entry has rank `j + 1`.
pub fn dimension(lambda: &Composition) -> BigUint {
    if lambda.size() <= 1 {
        return BigUint::one();
    }
    let word = lambda.to_word();
    let mut counts = vec![BigUint::one()];
    for (i, &letter) in word.letters().iter().enumerate() {
        let len = i + 2;
        let mut next = vec![BigUint::zero(); len];
        match letter {
            Sign::Plus => {
                // new last entry has rank j+1, previous last rank <= j
                let mut acc = BigUint::zero();
                for j in 0..len {
                    next[j] = acc.clone();
                    if j < counts.len() {
                        acc += &counts[j];
                    }
                }
            }
            Sign::Minus => {
                let mut acc = BigUint::zero();
                for j in (0..len).rev() {
                    if j < counts.len() {
                        acc += &counts[j];
                    }
                    next[j] = acc.clone();
                }
            }
        }
        counts = next;
    }
    counts.into_iter().sum()
}

/// Number of ascending chains `μ ↗ ... ↗ λ` (1 when `μ = λ`, 0 when none exist).
///
/// Level-by-level over the zigzags between the two, keeping only those whose
/// word is a subword of `w(λ)`.
pub fn path_count(mu: &Composition, lambda: &Composition) -> BigUint {
    if !precedes(mu, lambda) {
        return BigUint::zero();
    }
    let target_word = lambda.to_word();
    let mut level: HashMap<Composition, BigUint> = HashMap::from([(mu.clone(), BigUint::one())]);
    for _ in mu.size()..lambda.size() {
        let mut next: HashMap<Composition, BigUint> = HashMap::new();
        for (nu, count) in &level {
            for succ in successors(nu) {
                if succ.to_word().is_subword_of(&target_word) {
                    *next.entry(succ).or_insert_with(BigUint::zero) += count;
                }
            }
        }
        level = next;
    }
    level.remove(lambda).unwrap_or_else(BigUint::zero)
}

/// `K(μ, λ) = d(μ, λ) / d(λ)`, the fraction of standard paths to `λ` passing through `μ`.
pub fn martin_kernel(mu: &Composition, lambda: &Composition) -> Result<Rational> {
    if mu.size() > lambda.size() {
        return Err(Error::InvalidArgument(format!("|μ| = {} exceeds |λ| = {}", mu.size(), lambda.size())));
    }
    let num = path_count(mu, lambda);
    let den = dimension(lambda);
    Ok(rational::from_biguint(&num) / rational::from_biguint(&den))
}

/// Embeds `λ` (with `|λ| >= 2`) as a finitary paintbox: each `+` cluster of
/// `w(λ)` becomes an up-interval and each `-` cluster a down-interval, with
/// lengths proportional to cluster lengths on the `1/(|λ| - 1)` scale.
pub fn iota(lambda: &Composition) -> Result<OrientedPaintbox> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::InvalidArgument(format!("iota needs at least two boxes, got {n}")));
    }
    let scale = (n - 1) as i64;
    let mut at = 0i64;
    let mut intervals = Vec::new();
    for (sign, len) in lambda.to_word().clusters() {
        let end = at + len as i64;
        let orientation = match sign {
            Sign::Plus => Orientation::Up,
            Sign::Minus => Orientation::Down,
        };
        intervals.push(Interval::new(rational::ratio(at, scale), rational::ratio(end, scale), orientation)?);
        at = end;
    }
    OrientedPaintbox::new(intervals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::comp;
    use crate::permutation::Permutation;
    use crate::rational::ratio;
    use std::collections::BTreeSet;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn successor_examples() {
        assert_eq!(successors(&comp(&[2])), vec![comp(&[3]), comp(&[1, 2]), comp(&[2, 1])]);
        assert_eq!(successors(&Composition::empty()), vec![comp(&[1])]);
        assert_eq!(
            successors(&comp(&[1, 2])),
            vec![comp(&[2, 2]), comp(&[1, 3]), comp(&[1, 1, 2]), comp(&[1, 2, 1])]
        );
    }

    #[test]
    fn successors_match_permutation_extensions() {
        for n in 0..=6 {
            for pi in Permutation::all(n) {
                let mut from_perms: Vec<_> = pi.extensions().iter().map(|e| e.zigzag_shape()).collect();
                let mut direct = successors(&pi.zigzag_shape());
                from_perms.sort();
                direct.sort();
                assert_eq!(from_perms, direct, "{pi}");
            }
        }
    }

    #[test]
    fn predecessor_examples() {
        assert_eq!(predecessors(&comp(&[1])), vec![Composition::empty()]);
        assert_eq!(predecessors(&comp(&[2, 1])), vec![comp(&[2]), comp(&[1, 1])]);
        assert_eq!(predecessors(&comp(&[3, 1, 4])).len(), 3);
        assert!(predecessors(&Composition::empty()).is_empty());
    }

    #[test]
    fn duality_up_to_size_seven() {
        for n in 0..=7 {
            for mu in Composition::all_of_size(n) {
                let succ = successors(&mu);
                assert_eq!(succ.len(), n + 1);
                assert_eq!(succ.iter().collect::<BTreeSet<_>>().len(), n + 1, "duplicate successor of {mu}");
                for lambda in &succ {
                    assert!(predecessors(lambda).contains(&mu));
                    assert!(is_edge(&mu, lambda));
                }
            }
            for lambda in Composition::all_of_size(n + 1) {
                for mu in predecessors(&lambda) {
                    assert!(successors(&mu).contains(&lambda));
                }
                if n + 1 >= 2 {
                    assert_eq!(predecessors(&lambda).len(), lambda.to_word().clusters().len());
                }
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&comp(&[5])), big(1));
        assert_eq!(dimension(&comp(&[2, 1])), big(2));
        assert_eq!(dimension(&Composition::empty()), big(1));
        // alternating permutations of 5: Euler zigzag number 16
        assert_eq!(dimension(&comp(&[2, 2, 1])), big(16));
    }

    #[test]
    fn dimension_satisfies_recursion_and_conjugation() {
        for n in 1..=9 {
            let mut total = BigUint::zero();
            for lambda in Composition::all_of_size(n) {
                let d = dimension(&lambda);
                let by_recursion: BigUint = predecessors(&lambda).iter().map(dimension).sum();
                assert_eq!(d, by_recursion, "{lambda}");
                assert_eq!(d, dimension(&lambda.conjugate()));
                total += d;
            }
            assert_eq!(total, rational::factorial(n as u64));
        }
    }

    #[test]
    fn path_count_examples() {
        let lambda = comp(&[3, 1, 2]);
        assert_eq!(path_count(&comp(&[1]), &lambda), dimension(&lambda));
        assert_eq!(path_count(&Composition::empty(), &lambda), dimension(&lambda));
        assert_eq!(path_count(&comp(&[2]), &comp(&[2, 1])), big(1));
        assert_eq!(path_count(&comp(&[3]), &comp(&[1, 1, 1])), big(0));
        assert_eq!(path_count(&lambda, &lambda), big(1));
        assert_eq!(path_count(&comp(&[2, 2]), &comp(&[3])), big(0));
    }

    #[test]
    fn path_count_recursion() {
        for lambda in Composition::all_of_size(6) {
            for m in 0..6 {
                for mu in Composition::all_of_size(m) {
                    let sum: BigUint = successors(&mu).iter().map(|nu| path_count(nu, &lambda)).sum();
                    assert_eq!(path_count(&mu, &lambda), sum);
                }
            }
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(martin_kernel(&comp(&[1]), &comp(&[2, 3, 1])).unwrap(), ratio(1, 1));
        assert_eq!(martin_kernel(&comp(&[2]), &comp(&[3])).unwrap(), ratio(1, 1));
        assert_eq!(martin_kernel(&comp(&[2]), &comp(&[1, 2])).unwrap(), ratio(1, 2));
        assert!(martin_kernel(&comp(&[3]), &comp(&[2])).is_err());
    }

    #[test]
    fn kernel_satisfies_recursion() {
        for n in [6, 8, 10] {
            for lambda in Composition::all_of_size(n).into_iter().step_by(7) {
                for m in 0..=n - 2 {
                    for mu in Composition::all_of_size(m) {
                        let sum: Rational = successors(&mu).iter().map(|nu| martin_kernel(nu, &lambda).unwrap()).sum();
                        assert_eq!(martin_kernel(&mu, &lambda).unwrap(), sum);
                    }
                }
            }
        }
    }

    #[test]
    fn iota_examples() {
        let pb = iota(&comp(&[4, 1, 1, 3])).unwrap();
        let iv = pb.intervals();
        assert_eq!(iv.len(), 3);
        assert_eq!((iv[0].left.clone(), iv[0].right.clone(), iv[0].orientation), (ratio(0, 1), ratio(3, 8), Orientation::Up));
        assert_eq!((iv[1].left.clone(), iv[1].right.clone(), iv[1].orientation), (ratio(3, 8), ratio(6, 8), Orientation::Down));
        assert_eq!((iv[2].left.clone(), iv[2].right.clone(), iv[2].orientation), (ratio(6, 8), ratio(1, 1), Orientation::Up));
        let row = iota(&comp(&[5])).unwrap();
        assert_eq!(row.intervals().len(), 1);
        assert_eq!(row.intervals()[0].orientation, Orientation::Up);
        let col = iota(&comp(&[1, 1, 1])).unwrap();
        assert_eq!(col.intervals()[0].orientation, Orientation::Down);
        assert!(iota(&comp(&[1])).is_err());
    }
}
