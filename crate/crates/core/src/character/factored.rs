use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::rational::{Polynomial, RationalFunction};
use super::CharClass;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Products of linear forms in `λ1, λ2, λ3, m`.
    Cohomological,
    /// Products of brackets `[t^w] = t^{w/2} - t^{-w/2}`.
    KTheoretic,
}

/// A product of primitive factors with a sign and a positive rational scalar.
///
/// Cohomological factors are primitive integer forms (content 1, first nonzero
/// coefficient positive). K-theoretic factors are bracket weights with first
/// nonzero exponent positive. Both normal forms are unique, so structural
/// equality coincides with equality of the represented functions.
#[derive(Clone, PartialEq, Eq)]
pub struct FactoredClass {
    mode: Mode,
    sign: i8,
    scalar: BigRational,
    factors: BTreeMap<[i64; 4], i64>,
}

impl FactoredClass {
    pub fn one(mode: Mode) -> Self {
        Self { mode, sign: 1, scalar: BigRational::one(), factors: BTreeMap::new() }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn factors(&self) -> &BTreeMap<[i64; 4], i64> {
        &self.factors
    }

    /// Net degree: sum of factor exponents.
    pub fn degree(&self) -> i64 {
        self.factors.values().sum()
    }

    fn push(&mut self, key: [i64; 4], exp: i64) {
        if exp == 0 {
            return;
        }
        let e = self.factors.entry(key).or_insert(0);
        *e += exp;
        if *e == 0 {
            self.factors.remove(&key);
        }
    }

    /// Multiply by `(coeffs . x)^exp` (cohomological) or `[t^coeffs]^exp`.
    pub fn push_weight(&mut self, coeffs: [i64; 4], exp: i64) {
        assert!(coeffs.iter().any(|&c| c != 0), "trivial factor");
        let flipped = coeffs.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0);
        let mut key = if flipped { coeffs.map(|c| -c) } else { coeffs };
        if flipped && exp.rem_euclid(2) == 1 {
            self.sign = -self.sign;
        }
        if self.mode == Mode::Cohomological {
            let g = key.iter().fold(0i64, |g, &c| g.gcd(&c));
            if g > 1 {
                key = key.map(|c| c / g);
                let gk = num_traits::pow(BigRational::from_integer(BigInt::from(g)), exp.unsigned_abs() as usize);
                self.scalar = if exp > 0 { &self.scalar * gk } else { &self.scalar / gk };
            }
        }
        self.push(key, exp);
    }

    pub fn mul(&self, o: &FactoredClass) -> FactoredClass {
        assert_eq!(self.mode, o.mode, "mixing factored classes of different modes");
        let mut out = self.clone();
        out.sign *= o.sign;
        out.scalar = &out.scalar * &o.scalar;
        for (k, e) in &o.factors {
            out.push(*k, *e);
        }
        out
    }

    pub fn inv(&self) -> FactoredClass {
        FactoredClass {
            mode: self.mode,
            sign: self.sign,
            scalar: self.scalar.recip(),
            factors: self.factors.iter().map(|(k, e)| (*k, -e)).collect(),
        }
    }

    pub fn neg(&self) -> FactoredClass {
        let mut out = self.clone();
        out.sign = -out.sign;
        out
    }

    /// Multiply by `(-1)^k`.
    pub fn signed(&self, k: i64) -> FactoredClass {
        if k.rem_euclid(2) == 1 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn factor_poly(mode: Mode, key: &[i64; 4]) -> Polynomial {
        match mode {
            Mode::Cohomological => Polynomial::linear(*key),
            Mode::KTheoretic => Polynomial::bracket(key.map(|c| c as i32)),
        }
    }

    pub fn signed_scalar(&self) -> BigRational {
        if self.sign < 0 {
            -self.scalar.clone()
        } else {
            self.scalar.clone()
        }
    }

    pub fn to_rational(&self) -> RationalFunction {
        let mut num = Polynomial::constant(self.signed_scalar());
        let mut den = Polynomial::one();
        for (k, &e) in &self.factors {
            let f = Self::factor_poly(self.mode, k).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = num.mul(&f);
            } else {
                den = den.mul(&f);
            }
        }
        RationalFunction::new(num, den)
    }
}

impl fmt::Debug for FactoredClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FactoredClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.sign < 0 { "-" } else { "+" }, self.scalar)?;
        for (k, e) in &self.factors {
            match self.mode {
                Mode::Cohomological => write!(f, " ({},{},{},{})^{e}", k[0], k[1], k[2], k[3])?,
                Mode::KTheoretic => write!(f, " [{},{},{},{}]^{e}", k[0], k[1], k[2], k[3])?,
            }
        }
        Ok(())
    }
}

fn class_of(v: &CharClass, mode: Mode) -> Result<FactoredClass> {
    let fixed = v.fixed_part();
    if fixed != 0 {
        return Err(Error::FixedPartPresent { rank: fixed });
    }
    let mut out = FactoredClass::one(mode);
    for (w, m) in v.sorted_terms() {
        out.push_weight(w.linear_form(), m);
    }
    Ok(out)
}

/// Cohomological Euler class `e^T(V)` of a movable class.
pub fn euler(v: &CharClass) -> Result<FactoredClass> {
    class_of(v, Mode::Cohomological)
}

/// K-theoretic bracket class `[V]` of a movable class.
pub fn khat(v: &CharClass) -> Result<FactoredClass> {
    class_of(v, Mode::KTheoretic)
}

pub fn class_in_mode(v: &CharClass, mode: Mode) -> Result<FactoredClass> {
    class_of(v, mode)
}

/// `sum_k classes[k] * multipliers[k]` as a single rational function.
///
/// The denominator is the factored least common multiple of the summands'
/// denominators; factors that divide the combined numerator are cancelled.
pub fn sum_factored(terms: &[(FactoredClass, Polynomial)], mode: Mode) -> RationalFunction {
    let mut lcm: BTreeMap<[i64; 4], i64> = BTreeMap::new();
    for (c, _) in terms {
        assert_eq!(c.mode, mode);
        for (k, &e) in &c.factors {
            if e < 0 {
                let slot = lcm.entry(*k).or_insert(0);
                *slot = (*slot).max(-e);
            }
        }
    }
    let mut num = Polynomial::zero();
    for (c, mult) in terms {
        let mut t = mult.scale(&c.signed_scalar());
        for (k, &l) in &lcm {
            let e = c.factors.get(k).copied().unwrap_or(0) + l;
            if e > 0 {
                t = t.mul(&FactoredClass::factor_poly(mode, k).pow(e as u32));
            }
        }
        for (k, &e) in &c.factors {
            if e > 0 && !lcm.contains_key(k) {
                t = t.mul(&FactoredClass::factor_poly(mode, k).pow(e as u32));
            }
        }
        num = num.add(&t);
    }
    if num.is_zero() {
        return RationalFunction::zero();
    }
    for (k, l) in lcm.iter_mut() {
        let f = FactoredClass::factor_poly(mode, k);
        while *l > 0 {
            let q = match mode {
                Mode::Cohomological => num.div_exact_polynomial(&f),
                Mode::KTheoretic => num.div_exact(&f),
            };
            match q {
                Some(q) => {
                    num = q;
                    *l -= 1;
                }
                None => break,
            }
        }
    }
    let den = lcm.iter().fold(Polynomial::one(), |acc, (k, &l)| {
        acc.mul(&FactoredClass::factor_poly(mode, k).pow(l as u32))
    });
    let mut out = RationalFunction::new(num, den);
    if out.den.terms().all(|(_, c)| c.is_negative()) {
        out = RationalFunction::new(out.num.neg(), out.den.neg());
    }
    out
}
