//! Values of the characters `ψ_{α,β}` on the generators of symmetric functions.

use std::ops::Mul;

use num_traits::{One, Zero};

use crate::characters::RankedFrequencies;
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub const DEFAULT_ORDER: usize = 12;

/// Exact power series `c_0 + c_1 t + … + c_N t^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(mut coefficients: Vec<Rational>, order: usize) -> Self {
        coefficients.resize(order + 1, Rational::zero());
        TruncatedSeries { coefficients }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `f(ct)`.
    pub fn rescale(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coefficients.len());
        for x in &self.coefficients {
            out.push(x * &power);
            power *= c;
        }
        TruncatedSeries { coefficients: out }
    }

    /// `exp f` for `c_0 = 0`, via `n g_n = Σ k f_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coefficients[0].is_zero() {
            return Err(Error::InvalidArgument("exp needs a zero constant term".into()));
        }
        let n = self.order();
        let mut g = vec![Rational::one()];
        for m in 1..=n {
            let s: Rational = (1..=m).map(|k| Rational::from_integer(k.into()) * &self.coefficients[k] * &g[m - k]).sum();
            g.push(s / Rational::from_integer(m.into()));
        }
        Ok(TruncatedSeries { coefficients: g })
    }

    /// `log f` for `c_0 = 1`, via `n l_n = n f_n - Σ_{k<n} k l_k f_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coefficients[0].is_one() {
            return Err(Error::InvalidArgument("log needs constant term 1".into()));
        }
        let n = self.order();
        let mut l = vec![Rational::zero()];
        for m in 1..=n {
            let mut s = Rational::from_integer(m.into()) * &self.coefficients[m];
            for k in 1..m {
                s -= Rational::from_integer(k.into()) * &l[k] * &self.coefficients[m - k];
            }
            l.push(s / Rational::from_integer(m.into()));
        }
        Ok(TruncatedSeries { coefficients: l })
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coefficients: out }
    }
}

/// `e^{γt} Π(1+β_j t) / Π(1-α_i t)` to order `order`.
pub fn h_series(freq: &RankedFrequencies, order: usize) -> TruncatedSeries {
    let mut gamma_t = vec![Rational::zero(); order + 1];
    if order >= 1 {
        gamma_t[1] = freq.gamma();
    }
    let mut h = TruncatedSeries::new(gamma_t, order).exp().expect("zero constant term");
    for b in &freq.beta {
        h = &h * &TruncatedSeries::new(vec![Rational::one(), b.clone()], order);
    }
    for a in &freq.alpha {
        let geometric = (0..=order).map(|k| rational::pow(a, k)).collect();
        h = &h * &TruncatedSeries::new(geometric, order);
    }
    h
}

/// `ψ_{α,β}(h_0), …, ψ_{α,β}(h_N)`.
pub fn h_values(freq: &RankedFrequencies, order: usize) -> Vec<Rational> {
    h_series(freq, order).coefficients
}

/// `ψ_{α,β}(p_0), …, ψ_{α,β}(p_N)`; index 0 is unused and set to zero.
pub fn p_values(freq: &RankedFrequencies, order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        *slot = if n == 1 {
            Rational::one()
        } else {
            let a: Rational = freq.alpha.iter().map(|x| rational::pow(x, n)).sum();
            let b: Rational = freq.beta.iter().map(|x| rational::pow(x, n)).sum();
            if n % 2 == 0 {
                a - b
            } else {
                a + b
            }
        };
    }
    out
}

/// `ψ_{α,β}(s_λ) = det[h_{λ_i - i + j}]`.
pub fn schur_value(freq: &RankedFrequencies, lambda: &Composition) -> Result<Rational> {
    if !lambda.is_partition() {
        return Err(Error::NotAPartition(lambda.to_string()));
    }
    let h = h_values(freq, lambda.size());
    let l = lambda.len();
    let mut m: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda.parts()[i] as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        Rational::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    Ok(determinant(&mut m))
}

fn determinant(m: &mut [Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}
