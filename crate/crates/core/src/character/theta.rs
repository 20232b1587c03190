//! Truncated elliptic classes `θ[V]`.
//!
//! With `θ(p;y) = -i p^{1/8} (y^{1/2} - y^{-1/2}) prod_n (1-p^n)(1-y p^n)(1-y^{-1} p^n)`
//! and `η(p) = p^{1/24} prod_n (1-p^n)`, the normalized class of one weight is
//!
//! ```text
//! θ[t^w] = (i η)^{-1} θ(p; t^w) = -p^{1/12} [t^w] prod_{n>=1} (1 - t^w p^n)(1 - t^{-w} p^n)
//! ```
//!
//! so `θ[V] = (-1)^{rk V} p^{rk V / 12} [V] S_V(p)` where `S_V` is a power
//! series in `p` with Laurent-polynomial coefficients and constant term 1.

use num_rational::{BigRational, Rational64};
use num_traits::One;
#[cfg(test)]
use num_traits::Zero;

use super::factored::{khat, FactoredClass};
use super::rational::{Exponent, Polynomial, RationalFunction};
use super::{CharClass, Weight};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaClass {
    order: usize,
    leading: Rational64,
    base: FactoredClass,
    series: Vec<Polynomial>,
}

impl ThetaClass {
    /// Truncation order `P`: coefficients of `p^{leading + k}` for `k <= P`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Exponent of `p` in front of the series.
    pub fn leading_exponent(&self) -> Rational64 {
        self.leading
    }

    /// The bracket class carrying the constant-term sign `(-1)^{rk V}`.
    pub fn base(&self) -> &FactoredClass {
        &self.base
    }

    pub fn series(&self) -> &[Polynomial] {
        &self.series
    }

    pub fn truncate(&self, order: usize) -> ThetaClass {
        assert!(order <= self.order);
        ThetaClass {
            order,
            leading: self.leading,
            base: self.base.clone(),
            series: self.series[..=order].to_vec(),
        }
    }

    pub fn mul(&self, o: &ThetaClass) -> ThetaClass {
        let order = self.order.min(o.order);
        ThetaClass {
            order,
            leading: self.leading + o.leading,
            base: self.base.mul(&o.base),
            series: series_mul(&self.series, &o.series, order),
        }
    }

    pub fn neg(&self) -> ThetaClass {
        ThetaClass { base: self.base.neg(), ..self.clone() }
    }

    /// Coefficient of `p^{leading + k}` as a rational function in `s = t^{1/2}`.
    pub fn coefficient(&self, k: usize) -> RationalFunction {
        let b = self.base.to_rational();
        RationalFunction::new(b.num.mul(&self.series[k]), b.den)
    }
}

fn s_monomial(w: Weight, power: i32) -> Exponent {
    let f = w.linear_form();
    [2 * f[0] as i32 * power, 2 * f[1] as i32 * power, 2 * f[2] as i32 * power, 2 * f[3] as i32 * power]
}

pub(crate) fn series_mul(a: &[Polynomial], b: &[Polynomial], order: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

/// Inverse of a series with constant term 1.
fn series_inv(a: &[Polynomial], order: usize) -> Vec<Polynomial> {
    debug_assert!(a[0] == Polynomial::one());
    let mut out = vec![Polynomial::zero(); order + 1];
    out[0] = Polynomial::one();
    for k in 1..=order {
        let mut acc = Polynomial::zero();
        for j in 1..=k.min(a.len() - 1) {
            acc = acc.add(&a[j].mul(&out[k - j]));
        }
        out[k] = acc.neg();
    }
    out
}

fn series_pow(a: &[Polynomial], exp: i64, order: usize) -> Vec<Polynomial> {
    let base = if exp < 0 { series_inv(a, order) } else { a.to_vec() };
    let mut out = one_series(order);
    for _ in 0..exp.unsigned_abs() {
        out = series_mul(&out, &base, order);
    }
    out
}

fn one_series(order: usize) -> Vec<Polynomial> {
    let mut s = vec![Polynomial::zero(); order + 1];
    s[0] = Polynomial::one();
    s
}

/// `prod_{n=1}^{order} (1 - t^w p^n)(1 - t^{-w} p^n)` truncated at `p^order`.
fn weight_series(w: Weight, order: usize) -> Vec<Polynomial> {
    let mut acc = one_series(order);
    let minus_one = -BigRational::one();
    for n in 1..=order {
        for sgn in [1, -1] {
            let mut f = one_series(order);
            f[n] = Polynomial::monomial(s_monomial(w, sgn), minus_one.clone());
            acc = series_mul(&acc, &f, order);
        }
    }
    acc
}

/// `θ[V]` truncated at relative order `order`.
pub fn theta(v: &CharClass, order: usize) -> Result<ThetaClass> {
    let base = khat(v)?;
    let rank = v.rank();
    let mut series = one_series(order);
    if order > 0 {
        for (w, m) in v.sorted_terms() {
            let ws = weight_series(w, order);
            series = series_mul(&series, &series_pow(&ws, m, order), order);
        }
    }
    Ok(ThetaClass {
        order,
        leading: Rational64::new(rank, 12),
        base: base.signed(rank),
        series,
    })
}

/// The global constant relating `θ[V]` at leading order to `[V]`:
/// `(-1)^{rk V}` times `p^{rk V / 12}`.
pub fn leading_prefactor(rank: i64) -> (i64, Rational64) {
    (if rank.rem_euclid(2) == 0 { 1 } else { -1 }, Rational64::new(rank, 12))
}
