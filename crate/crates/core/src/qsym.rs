//! Quasisymmetric functions in the fundamental (F) and monomial (M) bases.
//!
//! Elements are finite maps from compositions to exact rationals. Only the
//! structure needed by the characters is implemented: the shuffle product of
//! F functions, the deconcatenation coproduct on zigzags, the conjugation
//! involution, F/M conversion and the F-expansion of Schur functions.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    F,
    M,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::F => "F",
            Basis::M => "M",
        }
    }
}

/// A finite linear combination of basis functions. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSymElement {
    basis: Basis,
    terms: BTreeMap<Composition, Rational>,
}

impl QSymElement {
    pub fn zero(basis: Basis) -> Self {
        QSymElement { basis, terms: BTreeMap::new() }
    }

    pub fn f(lambda: Composition) -> Self {
        Self::basis_element(Basis::F, lambda)
    }

    pub fn m(lambda: Composition) -> Self {
        Self::basis_element(Basis::M, lambda)
    }

    pub fn one() -> Self {
        Self::f(Composition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Composition) -> Self {
        QSymElement { basis, terms: BTreeMap::from([(lambda, Rational::one())]) }
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Composition, Rational)>) -> Self {
        let mut e = Self::zero(basis);
        for (c, r) in terms {
            e.add_term(c, r);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Composition, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Composition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Composition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Degrees present; a homogeneous element reports a single degree.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Composition::size).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn add(&self, other: &QSymElement) -> Result<QSymElement> {
        self.same_basis(other)?;
        let mut out = self.clone();
        for (c, r) in &other.terms {
            out.add_term(c.clone(), r.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> QSymElement {
        Self::from_terms(self.basis, self.terms.iter().map(|(c, r)| (c.clone(), r * factor)))
    }

    fn same_basis(&self, other: &QSymElement) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { expected: self.basis.name(), found: other.basis.name() });
        }
        Ok(())
    }

    fn require(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::BasisMismatch { expected: basis.name(), found: self.basis.name() });
        }
        Ok(())
    }
}

impl fmt::Display for QSymElement {
    /// `coeff * F[3,1,4] + ...` in composition order; `0` for the zero element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(c, r)| format!("{} * {}[{}]", rational::format(r), self.basis.name(), c))
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

type ProductTable = RwLock<HashMap<(Composition, Composition), BTreeMap<Composition, u64>>>;

fn product_cache() -> &'static ProductTable {
    static CACHE: OnceLock<ProductTable> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Shuffles the canonical representatives of `μ` and `ν` (the latter shifted
/// by `|μ|`) and tallies the shapes of all `C(k + l, k)` interleavings.
pub fn shuffle_shapes(mu: &Composition, nu: &Composition) -> BTreeMap<Composition, u64> {
    let key = (mu.clone(), nu.clone());
    if let Some(hit) = product_cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let left = Permutation::canonical_of_shape(mu);
    let right = Permutation::canonical_of_shape(nu);
    let table = shuffle_representatives(&left, &right);
    product_cache().write().unwrap().insert(key, table.clone());
    table
}

/// Shape tally over `shuffle(π_k, π_l)` for arbitrary representatives.
pub fn shuffle_representatives(left: &Permutation, right: &Permutation) -> BTreeMap<Composition, u64> {
    let k = left.len();
    let a: Vec<u32> = left.values().to_vec();
    let b: Vec<u32> = right.values().iter().map(|&v| v + k as u32).collect();
    let mut table = BTreeMap::new();
    let mut buf = Vec::with_capacity(a.len() + b.len());
    interleave(&a, &b, &mut buf, &mut table);
    table
}

fn interleave(a: &[u32], b: &[u32], buf: &mut Vec<u32>, table: &mut BTreeMap<Composition, u64>) {
    if a.is_empty() || b.is_empty() {
        let mark = buf.len();
        buf.extend_from_slice(a);
        buf.extend_from_slice(b);
        let shape = Permutation::from_vec_unchecked(buf.clone()).zigzag_shape();
        *table.entry(shape).or_insert(0) += 1;
        buf.truncate(mark);
        return;
    }
    buf.push(a[0]);
    interleave(&a[1..], b, buf, table);
    buf.pop();
    buf.push(b[0]);
    interleave(a, &b[1..], buf, table);
    buf.pop();
}

/// Bilinear shuffle product of two F-basis elements.
pub fn f_product(a: &QSymElement, b: &QSymElement) -> Result<QSymElement> {
    a.require(Basis::F)?;
    b.require(Basis::F)?;
    let mut out = QSymElement::zero(Basis::F);
    for (mu, x) in &a.terms {
        for (nu, y) in &b.terms {
            let coeff = x * y;
            for (lambda, count) in shuffle_shapes(mu, nu) {
                out.add_term(lambda, &coeff * rational::int(count as i64));
            }
        }
    }
    Ok(out)
}

/// `δ(F_λ) = Σ F_μ ⊗ F_ν` over the `|λ| + 1` cuts of the zigzag into a first
/// `i` boxes and the remaining boxes; the letter at the cut is dropped.
pub fn comultiply(a: &QSymElement) -> Result<BTreeMap<(Composition, Composition), Rational>> {
    let mut out = BTreeMap::new();
    for (parts, coeff) in comultiply_iterated(a, 2)? {
        let mut it = parts.into_iter();
        let (mu, nu) = (it.next().unwrap(), it.next().unwrap());
        out.insert((mu, nu), coeff);
    }
    Ok(out)
}

/// `δ^(k)(F_λ)`: all splittings of `λ` into `k` consecutive, possibly empty,
/// sub-zigzags.
pub fn comultiply_iterated(a: &QSymElement, k: usize) -> Result<BTreeMap<Vec<Composition>, Rational>> {
    a.require(Basis::F)?;
    if k < 1 {
        return Err(Error::InvalidArgument("iterated coproduct needs k >= 1".into()));
    }
    let mut out: BTreeMap<Vec<Composition>, Rational> = BTreeMap::new();
    for (lambda, coeff) in &a.terms {
        let n = lambda.size();
        let mut cuts = vec![0usize; k + 1];
        cuts[k] = n;
        fn rec(
            lambda: &Composition,
            cuts: &mut Vec<usize>,
            idx: usize,
            coeff: &Rational,
            out: &mut BTreeMap<Vec<Composition>, Rational>,
        ) {
            let k = cuts.len() - 1;
            if idx == k {
                let pieces: Vec<Composition> = (0..k).map(|j| lambda.sub_zigzag(cuts[j], cuts[j + 1])).collect();
                let slot = out.entry(pieces).or_insert_with(Rational::zero);
                *slot += coeff;
                return;
            }
            let n = cuts[k];
            for c in cuts[idx - 1]..=n {
                cuts[idx] = c;
                rec(lambda, cuts, idx + 1, coeff, out);
            }
        }
        rec(lambda, &mut cuts, 1, coeff, &mut out);
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// `F_λ ↦ F_λ'`.
pub fn involution(a: &QSymElement) -> Result<QSymElement> {
    a.require(Basis::F)?;
    Ok(QSymElement::from_terms(Basis::F, a.terms.iter().map(|(c, r)| (c.conjugate(), r.clone()))))
}

/// `F_λ = Σ M_μ` over all refinements `μ` of `λ`.
pub fn f_to_m(a: &QSymElement) -> Result<QSymElement> {
    a.require(Basis::F)?;
    let mut out = QSymElement::zero(Basis::M);
    for (lambda, coeff) in &a.terms {
        for mu in lambda.refinements() {
            out.add_term(mu, coeff.clone());
        }
    }
    Ok(out)
}

/// Inverse of [`f_to_m`] by triangular elimination: repeatedly peel off the
/// coarsest remaining `M_λ` using `F_λ = M_λ + (finer terms)`.
pub fn m_to_f(a: &QSymElement) -> Result<QSymElement> {
    a.require(Basis::M)?;
    let mut rest = a.clone();
    let mut out = QSymElement::zero(Basis::F);
    while let Some(lambda) = rest.terms.keys().min_by_key(|c| (c.len(), (*c).clone())).cloned() {
        let coeff = rest.coefficient(&lambda);
        out.add_term(lambda.clone(), coeff.clone());
        let expansion = f_to_m(&QSymElement::f(lambda))?.scale(&-coeff);
        rest = rest.add(&expansion)?;
    }
    Ok(out)
}

/// Standard Young tableaux of a partition shape, as row-index sequences:
/// entry `i` of the result is the row holding `i + 1`.
pub fn standard_tableaux(shape: &Composition) -> Result<Vec<Vec<usize>>> {
    if !shape.is_partition() {
        return Err(Error::NotAPartition(shape.to_string()));
    }
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let n = shape.size();
    let mut filled = vec![0usize; rows.len()];
    let mut current = Vec::with_capacity(n);
    let mut out = Vec::new();
    fn rec(rows: &[usize], filled: &mut [usize], current: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for r in 0..rows.len() {
            let fits = filled[r] < rows[r] && (r == 0 || filled[r - 1] > filled[r]);
            if fits {
                filled[r] += 1;
                current.push(r);
                rec(rows, filled, current, n, out);
                current.pop();
                filled[r] -= 1;
            }
        }
    }
    rec(&rows, &mut filled, &mut current, n, &mut out);
    Ok(out)
}

/// `S_λ = Σ_T F_{Des(T)}` over standard Young tableaux `T` of shape `λ`, where
/// `i` is a descent of `T` when `i + 1` lies in a lower row than `i`.
pub fn schur_to_f(shape: &Composition) -> Result<QSymElement> {
    let n = shape.size();
    let mut out = QSymElement::zero(Basis::F);
    for tableau in standard_tableaux(shape)? {
        let descents: Vec<usize> = (1..n).filter(|&i| tableau[i] > tableau[i - 1]).collect();
        out.add_term(Composition::from_descents(n, &descents)?, Rational::one());
    }
    Ok(out)
}

/// Whether every coefficient is nonnegative.
pub fn is_nonnegative(a: &QSymElement) -> bool {
    a.terms.values().all(|r| !r.is_negative())
}
