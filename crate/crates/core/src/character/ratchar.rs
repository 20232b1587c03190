//! Characters with `(1 - t^w)` denominators and their exact division.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::{CharClass, Weight};
use crate::error::{Error, Result};

/// `numerator / prod_w (1 - t^w)`; denominator weights are never trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatChar {
    pub numerator: CharClass,
    pub denominator: Vec<Weight>,
}

impl RatChar {
    pub fn new(numerator: CharClass, denominator: Vec<Weight>) -> Result<Self> {
        if let Some(w) = denominator.iter().find(|w| w.is_fixed()) {
            return Err(Error::NotDivisible { weight: *w });
        }
        Ok(Self { numerator, denominator })
    }

    /// Multiply `numerator` back by every denominator factor.
    pub fn clear(quotient: &CharClass, denominator: &[Weight]) -> CharClass {
        denominator
            .iter()
            .fold(quotient.clone(), |acc, &w| times_one_minus(&acc, w))
    }

    /// The unique Laurent polynomial `Q` with `Q * prod(1 - t^w) = numerator`.
    ///
    /// Factors are divided out one at a time in lexicographic weight order.
    pub fn divide_exact(&self) -> Result<CharClass> {
        let mut den = self.denominator.clone();
        den.sort_unstable();
        let mut q = self.numerator.clone();
        for w in den {
            q = divide_one_minus(&q, w)?;
        }
        Ok(q)
    }
}

/// `c * (1 - t^w)`.
pub fn times_one_minus(c: &CharClass, w: Weight) -> CharClass {
    let mut out = c.clone();
    for (x, m) in c.iter() {
        out.add_term(*x + w, -*m);
    }
    out
}

/// Exact division of `c` by `(1 - t^w)`.
///
/// The monomials of `c` split into chains `{x + k w}`; along each chain the
/// division is a prefix sum, and it is exact iff every chain sums to zero.
pub fn divide_one_minus(c: &CharClass, w: Weight) -> Result<CharClass> {
    if w.is_fixed() {
        return Err(Error::NotDivisible { weight: w });
    }
    let we = w.exponents();
    let pivot = we.iter().position(|&x| x != 0).expect("nonzero weight");
    let step = we[pivot];

    let mut chains: FxHashMap<Weight, BTreeMap<i32, i64>> = FxHashMap::default();
    for (x, m) in c.iter() {
        let k = x.exponents()[pivot].div_euclid(step);
        let base = *x - w.scale(k);
        *chains.entry(base).or_default().entry(k).or_insert(0) += *m;
    }

    let mut out = CharClass::zero();
    for (base, chain) in chains {
        let lo = *chain.keys().next().unwrap();
        let hi = *chain.keys().next_back().unwrap();
        let mut acc = 0i64;
        for k in lo..=hi {
            acc += chain.get(&k).copied().unwrap_or(0);
            if acc != 0 && k < hi {
                out.add_term(base + w.scale(k), acc);
            }
        }
        if acc != 0 {
            return Err(Error::NotDivisible { weight: w });
        }
    }
    Ok(out)
}

/// A finite sum of fractions `num / prod(1 - t^w)`, kept grouped by
/// denominator so that only the genuinely rational part is ever divided.
///
/// Denominator weights are stored sign-normalized: `1/(1 - t^{-u})` is
/// rewritten as `-t^u / (1 - t^u)`.
#[derive(Clone, Debug, Default)]
pub struct RatSum {
    poly: CharClass,
    groups: BTreeMap<Vec<Weight>, CharClass>,
}

impl RatSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn poly(c: CharClass) -> Self {
        Self { poly: c, groups: BTreeMap::new() }
    }

    /// `num / prod_{w in den} (1 - t^w)`.
    pub fn fraction(num: CharClass, den: &[Weight]) -> Self {
        let mut num = num;
        let mut norm = Vec::with_capacity(den.len());
        for &w in den {
            assert!(!w.is_fixed(), "trivial denominator weight");
            let (u, flipped) = w.orient();
            if flipped {
                num = num.shift(u).scale(-1);
            }
            norm.push(u);
        }
        let mut s = Self::zero();
        s.push_group(norm, num);
        s
    }

    fn push_group(&mut self, mut den: Vec<Weight>, num: CharClass) {
        if num.is_zero() {
            return;
        }
        if den.is_empty() {
            self.poly += &num;
            return;
        }
        den.sort_unstable();
        let e = self.groups.entry(den.clone()).or_default();
        *e += &num;
        if e.is_zero() {
            self.groups.remove(&den);
        }
    }

    pub fn add(&mut self, other: &RatSum) {
        self.poly += &other.poly;
        for (den, num) in &other.groups {
            self.push_group(den.clone(), num.clone());
        }
    }

    pub fn sub(&mut self, other: &RatSum) {
        self.add(&other.neg());
    }

    pub fn neg(&self) -> RatSum {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> RatSum {
        RatSum {
            poly: self.poly.scale(k),
            groups: self
                .groups
                .iter()
                .map(|(d, n)| (d.clone(), n.scale(k)))
                .filter(|(_, n)| !n.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, other: &RatSum) -> RatSum {
        let mut out = RatSum::poly(&self.poly * &other.poly);
        for (d, n) in &other.groups {
            out.push_group(d.clone(), &self.poly * n);
        }
        for (d, n) in &self.groups {
            out.push_group(d.clone(), n * &other.poly);
            for (d2, n2) in &other.groups {
                let mut den = d.clone();
                den.extend_from_slice(d2);
                out.push_group(den, n * n2);
            }
        }
        out
    }

    pub fn mul_poly(&self, c: &CharClass) -> RatSum {
        self.mul(&RatSum::poly(c.clone()))
    }

    pub fn bar(&self) -> RatSum {
        let mut out = RatSum::poly(self.poly.bar());
        for (d, n) in &self.groups {
            let dual: Vec<Weight> = d.iter().map(|w| -*w).collect();
            out.add(&RatSum::fraction(n.bar(), &dual));
        }
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.groups.is_empty()
    }

    /// Combine all groups over their least common denominator.
    pub fn to_ratchar(&self) -> RatChar {
        let mut lcm: BTreeMap<Weight, usize> = BTreeMap::new();
        for den in self.groups.keys() {
            let mut counts: BTreeMap<Weight, usize> = BTreeMap::new();
            for w in den {
                *counts.entry(*w).or_default() += 1;
            }
            for (w, c) in counts {
                let e = lcm.entry(w).or_default();
                *e = (*e).max(c);
            }
        }
        let denominator: Vec<Weight> = lcm
            .iter()
            .flat_map(|(w, c)| std::iter::repeat_n(*w, *c))
            .collect();
        let mut numerator = RatChar::clear(&self.poly, &denominator);
        for (den, num) in &self.groups {
            let mut missing = denominator.clone();
            for w in den {
                let i = missing.iter().position(|x| x == w).unwrap();
                missing.remove(i);
            }
            numerator += &RatChar::clear(num, &missing);
        }
        RatChar { numerator, denominator }
    }

    /// The Laurent polynomial this sum equals, if it is one.
    pub fn into_class(self) -> Result<CharClass> {
        if self.groups.is_empty() {
            return Ok(self.poly);
        }
        let mut poly = self.poly.clone();
        let rational = RatSum { poly: CharClass::zero(), groups: self.groups };
        poly += &rational.to_ratchar().divide_exact()?;
        Ok(poly)
    }
}

impl From<CharClass> for RatSum {
    fn from(c: CharClass) -> Self {
        RatSum::poly(c)
    }
}
