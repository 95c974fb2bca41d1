//! Brute-force reference implementations. Nothing here shares code with the
//! `zigzag` crate: compositions are plain `Vec<u32>`, permutations plain
//! `Vec<u32>`, elements of QSym plain maps.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Shape = Vec<u32>;
pub type Perm = Vec<u32>;

pub const MAX_ENUMERATION: usize = 9;

/// All permutations of `1..=n`, by recursive insertion (Heap-free, slow, obvious).
pub fn permutations(n: usize) -> Vec<Perm> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for pos in 0..=smaller.len() {
            let mut p = smaller.clone();
            p.insert(pos, n as u32);
            out.push(p);
        }
    }
    out.sort();
    out
}

/// Lengths of the maximal increasing runs of `perm`.
pub fn run_shape(perm: &[u32]) -> Shape {
    let mut shape = Vec::new();
    let mut len = 0u32;
    for (i, &v) in perm.iter().enumerate() {
        if i > 0 && perm[i - 1] > v {
            shape.push(len);
            len = 0;
        }
        len += 1;
    }
    if len > 0 {
        shape.push(len);
    }
    shape
}

/// Pattern of the values `1..=m` inside `perm`, renumbered (they already are).
pub fn restrict_to_prefix(perm: &[u32], m: usize) -> Perm {
    perm.iter().copied().filter(|&v| v as usize <= m).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TooLarge(pub usize);

/// Every permutation of `[n]` grouped by run shape.
pub fn enumerate_by_shape(n: usize) -> Result<BTreeMap<Shape, Vec<Perm>>, TooLarge> {
    if n > MAX_ENUMERATION {
        return Err(TooLarge(n));
    }
    let mut out: BTreeMap<Shape, Vec<Perm>> = BTreeMap::new();
    for p in permutations(n) {
        out.entry(run_shape(&p)).or_default().push(p);
    }
    Ok(out)
}

/// `F_μ F_ν` by literal enumeration: all permutations of `[|μ|+|ν|]` in which
/// the values `1..=|μ|` appear in the order of `u` and the values above it
/// appear in the order of `v + |μ|`, where `u`, `v` are the last permutations
/// (lexicographically) of the given shapes.
pub fn shuffle_product_oracle(mu: &[u32], nu: &[u32]) -> BTreeMap<Shape, BigRational> {
    let a: usize = mu.iter().map(|&x| x as usize).sum();
    let b: usize = nu.iter().map(|&x| x as usize).sum();
    let pick = |shape: &[u32], n: usize| -> Perm {
        permutations(n).into_iter().filter(|p| run_shape(p) == shape).last().expect("every shape is realised")
    };
    let u = pick(mu, a);
    let v: Perm = pick(nu, b).into_iter().map(|x| x + a as u32).collect();
    let mut out: BTreeMap<Shape, BigRational> = BTreeMap::new();
    for p in permutations(a + b) {
        let low: Perm = p.iter().copied().filter(|&x| x as usize <= a).collect();
        let high: Perm = p.iter().copied().filter(|&x| x as usize > a).collect();
        if low == u && high == v {
            *out.entry(run_shape(&p)).or_insert_with(BigRational::zero) += BigRational::one();
        }
    }
    out
}

/// Orientation of a factor in a splitting sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// Only one-row pieces, value 1.
    Row,
    /// Only one-column pieces, value 1.
    Column,
    /// Any piece of size `l`, value `1/l!`.
    Uniform,
}

/// Word of `shape` as booleans: `true` where boxes `j, j+1` share a row.
fn word(shape: &[u32]) -> Vec<bool> {
    let mut w = Vec::new();
    for (i, &part) in shape.iter().enumerate() {
        if i > 0 {
            w.push(false);
        }
        w.extend(std::iter::repeat(true).take(part as usize - 1));
    }
    w
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `Σ` over all ways to cut the boxes of `shape` into consecutive pieces, one
/// per factor (possibly empty), of `Π ω_k^{|piece|} value_k(piece)`; every
/// cut vector is enumerated explicitly.
pub fn splitting_sum_oracle(factors: &[(Factor, BigRational)], shape: &[u32]) -> BigRational {
    let w = word(shape);
    let n: usize = shape.iter().map(|&x| x as usize).sum();
    let k = factors.len();
    let mut total = BigRational::zero();
    // cut points 0 = c_0 <= c_1 <= ... <= c_k = n, enumerated as a counter
    let mut cuts = vec![0usize; k + 1];
    cuts[k] = n;
    loop {
        if cuts.windows(2).all(|p| p[0] <= p[1]) && (k > 0 || n == 0) {
            let mut term = BigRational::one();
            for (idx, (factor, weight)) in factors.iter().enumerate() {
                let (s, e) = (cuts[idx], cuts[idx + 1]);
                let len = e - s;
                let inner = if len == 0 { &w[0..0] } else { &w[s..e - 1] };
                let value = match factor {
                    Factor::Row if inner.iter().all(|&x| x) => BigRational::one(),
                    Factor::Column if inner.iter().all(|&x| !x) => BigRational::one(),
                    Factor::Uniform => BigRational::new(BigInt::one(), factorial(len)),
                    _ => BigRational::zero(),
                };
                term *= value * pow(weight, len);
            }
            total += term;
        }
        // advance the free cuts c_1..c_{k-1} as base-(n+1) digits
        let mut i = 1;
        loop {
            if i >= k {
                return total;
            }
            if cuts[i] < n {
                cuts[i] += 1;
                break;
            }
            cuts[i] = 0;
            i += 1;
        }
    }
}

fn pow(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

/// `#{π : shape(π) = λ, shape(π|[|μ|]) = μ} / (d(μ) d(λ))`.
pub fn kernel_oracle(mu: &[u32], lambda: &[u32]) -> Result<BigRational, TooLarge> {
    let m: usize = mu.iter().map(|&x| x as usize).sum();
    let n: usize = lambda.iter().map(|&x| x as usize).sum();
    if n > MAX_ENUMERATION {
        return Err(TooLarge(n));
    }
    if m > n {
        return Ok(BigRational::zero());
    }
    let table = enumerate_by_shape(n)?;
    let Some(perms) = table.get(lambda) else { return Ok(BigRational::zero()) };
    let d_mu = enumerate_by_shape(m)?.get(mu).map_or(0, Vec::len);
    if d_mu == 0 {
        return Ok(BigRational::zero());
    }
    let joint = perms.iter().filter(|p| run_shape(&restrict_to_prefix(p, m)) == mu).count();
    Ok(BigRational::new(BigInt::from(joint), BigInt::from(d_mu) * BigInt::from(perms.len())))
}

/// `kernel_oracle(μ, λ)` for every `λ` of size `n` and every `μ` of size at
/// most `n` with a nonzero value, from a single pass over the permutations.
pub fn kernel_table(n: usize) -> Result<BTreeMap<(Shape, Shape), BigRational>, TooLarge> {
    if n > MAX_ENUMERATION {
        return Err(TooLarge(n));
    }
    let mut joint: BTreeMap<(Shape, Shape), u64> = BTreeMap::new();
    let mut d_lambda: BTreeMap<Shape, u64> = BTreeMap::new();
    for p in permutations(n) {
        let lambda = run_shape(&p);
        *d_lambda.entry(lambda.clone()).or_insert(0) += 1;
        for m in 0..=n {
            *joint.entry((run_shape(&restrict_to_prefix(&p, m)), lambda.clone())).or_insert(0) += 1;
        }
    }
    let mut d_mu: BTreeMap<Shape, u64> = BTreeMap::new();
    for m in 0..=n {
        for (shape, perms) in enumerate_by_shape(m)? {
            d_mu.insert(shape, perms.len() as u64);
        }
    }
    Ok(joint
        .into_iter()
        .map(|((mu, lambda), c)| {
            let denom = BigInt::from(d_mu[&mu]) * BigInt::from(d_lambda[&lambda]);
            ((mu, lambda.clone()), BigRational::new(BigInt::from(c), denom))
        })
        .collect())
}

/// Number of permutations of `[n]` with `k - 1` descents.
pub fn eulerian(n: usize, k: usize) -> Result<u64, TooLarge> {
    if n > MAX_ENUMERATION {
        return Err(TooLarge(n));
    }
    if k == 0 || k > n.max(1) {
        return Ok(0);
    }
    Ok(permutations(n).iter().filter(|p| run_shape(p).len() == k).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn enumeration_n3() {
        let t = enumerate_by_shape(3).unwrap();
        assert_eq!(t[&vec![3]], vec![vec![1, 2, 3]]);
        assert_eq!(t[&vec![1, 2]], vec![vec![2, 1, 3], vec![3, 1, 2]]);
        assert_eq!(t[&vec![2, 1]], vec![vec![1, 3, 2], vec![2, 3, 1]]);
        assert_eq!(t[&vec![1, 1, 1]], vec![vec![3, 2, 1]]);
        assert!(enumerate_by_shape(10).is_err());
    }

    #[test]
    fn enumeration_consistency() {
        for n in 1..=7 {
            let t = enumerate_by_shape(n).unwrap();
            let total: usize = t.values().map(Vec::len).sum();
            assert_eq!(total as u64, (1..=n as u64).product::<u64>());
            assert_eq!(t.len(), 1 << (n - 1));
            for (shape, perms) in &t {
                // conjugate: flip every letter of the word, then reverse
                let w: Vec<bool> = word(shape).into_iter().rev().map(|x| !x).collect();
                let mut conj = vec![1u32];
                for x in w {
                    if x {
                        *conj.last_mut().unwrap() += 1;
                    } else {
                        conj.push(1);
                    }
                }
                assert_eq!(t[&conj].len(), perms.len());
            }
        }
    }

    #[test]
    fn eulerian_rows() {
        assert_eq!(eulerian(3, 2).unwrap(), 4);
        for n in 1..=7 {
            assert_eq!(eulerian(n, 1).unwrap(), 1);
            let row: u64 = (1..=n).map(|k| eulerian(n, k).unwrap()).sum();
            assert_eq!(row, (1..=n as u64).product::<u64>());
            for k in 1..=n {
                assert_eq!(eulerian(n, k).unwrap(), eulerian(n, n + 1 - k).unwrap());
            }
        }
    }

    #[test]
    fn shuffle_small() {
        let p = shuffle_product_oracle(&[1], &[1]);
        assert_eq!(p.len(), 2);
        assert_eq!(p[&vec![2]], r(1, 1));
        assert_eq!(p[&vec![1, 1]], r(1, 1));
        let e = shuffle_product_oracle(&[], &[2, 1]);
        assert_eq!(e.len(), 1);
        assert_eq!(e[&vec![2, 1]], r(1, 1));
        // total number of shuffles is C(a+b, a)
        let total: BigRational = shuffle_product_oracle(&[2, 1], &[1, 2]).values().sum();
        assert_eq!(total, r(20, 1));
    }

    #[test]
    fn splitting_trivia() {
        let single = [(Factor::Uniform, r(1, 1))];
        assert_eq!(splitting_sum_oracle(&single, &[2, 1]), r(1, 6));
        assert_eq!(splitting_sum_oracle(&single, &[]), r(1, 1));
        let bi = [(Factor::Column, r(1, 3)), (Factor::Row, r(2, 3))];
        // hook (1,1,3): φ^2 (1-φ)^2
        assert_eq!(splitting_sum_oracle(&bi, &[1, 1, 3]), r(4, 81));
        assert_eq!(splitting_sum_oracle(&bi, &[2, 2]), r(0, 1));
    }

    #[test]
    fn kernel_trivia() {
        for lambda in [vec![3, 1], vec![1, 2, 1], vec![4]] {
            assert_eq!(kernel_oracle(&[1], &lambda).unwrap(), r(1, 1));
        }
        assert_eq!(kernel_oracle(&[1, 1], &[3]).unwrap(), r(0, 1));
        assert_eq!(kernel_oracle(&[2], &[3]).unwrap(), r(1, 1));
        let table = kernel_table(5).unwrap();
        for ((mu, lambda), k) in &table {
            assert_eq!(&kernel_oracle(mu, lambda).unwrap(), k);
        }
    }
}
