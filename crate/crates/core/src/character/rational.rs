//! Sparse multivariate (Laurent) polynomials over `Q` and quotients of them.
//!
//! Four variables throughout: `(λ1, λ2, λ3, m)` for cohomological values,
//! `(s1, s2, s3, s_y)` with `s = t^{1/2}` for K-theoretic ones.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Number, Value};

pub type Exponent = [i32; 4];

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponent, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn monomial(e: Exponent, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `sum_k coeffs[k] * x_k`.
    pub fn linear(coeffs: [i64; 4]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            let mut e = [0; 4];
            e[k] = 1;
            p.add_term(e, BigRational::from_integer(c.into()));
        }
        p
    }

    /// `x^e - x^{-e}`.
    pub fn bracket(e: Exponent) -> Self {
        let neg = [-e[0], -e[1], -e[2], -e[3]];
        let mut p = Self::monomial(e, BigRational::one());
        p.add_term(neg, -BigRational::one());
        p
    }

    pub fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, k: &BigRational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc: rustc_hash::FxHashMap<Exponent, BigRational> = Default::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                let prod = c1 * c2;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    fn min_exponents(&self) -> Exponent {
        let mut lo = [i32::MAX; 4];
        for e in self.terms.keys() {
            for k in 0..4 {
                lo[k] = lo[k].min(e[k]);
            }
        }
        lo
    }

    fn shift(&self, s: Exponent) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + s[0], e[1] + s[1], e[2] + s[2], e[3] + s[3]], c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d` as a Laurent polynomial, or `None`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let a = self.min_exponents();
        let b = d.min_exponents();
        let mut rem = self.shift([-a[0], -a[1], -a[2], -a[3]]);
        let d = d.shift([-b[0], -b[1], -b[2], -b[3]]);
        let (lt_e, lt_c) = d.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
        let mut q = Polynomial::zero();
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            let qe = [e[0] - lt_e[0], e[1] - lt_e[1], e[2] - lt_e[2], e[3] - lt_e[3]];
            if qe.iter().any(|&x| x < 0) {
                return None;
            }
            let qc = c / &lt_c;
            for (de, dc) in &d.terms {
                let e = [qe[0] + de[0], qe[1] + de[1], qe[2] + de[2], qe[3] + de[3]];
                let delta = &qc * dc;
                match rem.terms.entry(e) {
                    Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                }
            }
            q.add_term(qe, qc);
        }
        Some(q.shift([a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]))
    }

    /// Exact quotient in the ordinary polynomial ring (no negative exponents).
    pub fn div_exact_polynomial(&self, d: &Polynomial) -> Option<Polynomial> {
        self.div_exact(d)
            .filter(|q| q.terms.keys().all(|e| e.iter().all(|&x| x >= 0)))
    }

    /// Evaluate at a rational point; negative exponents need nonzero coordinates.
    pub fn eval(&self, x: &[BigRational; 4]) -> BigRational {
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for k in 0..4 {
                v *= pow_rat(&x[k], e[k]);
            }
            total += v;
        }
        total
    }

    /// Substitute each variable by a polynomial (only for nonnegative exponents).
    pub fn substitute(&self, images: &[Polynomial; 4]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for k in 0..4 {
                assert!(e[k] >= 0, "substitution into a Laurent monomial");
                term = term.mul(&images[k].pow(e[k] as u32));
            }
            out = out.add(&term);
        }
        out
    }

    /// `Some(d)` if every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<i32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Sorted `[exponents, coeff_num, coeff_den]` triples.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!([e.to_vec(), big_number(c.numer()), big_number(c.denom())]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Option<Polynomial> {
        let mut p = Polynomial::zero();
        for row in v.as_array()? {
            let row = row.as_array()?;
            let e: Vec<i32> = row
                .first()?
                .as_array()?
                .iter()
                .map(|x| x.as_i64().map(|x| x as i32))
                .collect::<Option<_>>()?;
            let num = BigInt::from_str(&row.get(1)?.to_string()).ok()?;
            let den = BigInt::from_str(&row.get(2)?.to_string()).ok()?;
            p.add_term([e[0], e[1], e[2], e[3]], BigRational::new(num, den));
        }
        Some(p)
    }

    pub fn fmt_with(&self, names: &[&str; 4]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let mono: Vec<String> = (0..4)
                .filter(|&k| e[k] != 0)
                .map(|k| if e[k] == 1 { names[k].to_string() } else { format!("{}^{}", names[k], e[k]) })
                .collect();
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&format!("{}*{}", abs, mono.join("*")));
            }
        }
        s
    }
}

fn pow_rat(x: &BigRational, e: i32) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

fn big_number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&["x1", "x2", "x3", "x4"]))
    }
}

/// A quotient of polynomials. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFunction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self::new(Polynomial::zero(), Polynomial::one())
    }

    pub fn one() -> Self {
        Self::new(Polynomial::one(), Polynomial::one())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::new(p, Polynomial::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(self.num.add(&o.num), self.den.clone());
        }
        RationalFunction::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &RationalFunction) -> RationalFunction {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction::new(self.num.neg(), self.den.clone())
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn scale(&self, k: &BigRational) -> RationalFunction {
        RationalFunction::new(self.num.scale(k), self.den.clone())
    }

    pub fn inv(&self) -> RationalFunction {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// `num1 * den2 == num2 * den1`.
    pub fn equals(&self, o: &RationalFunction) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// Divide out `f` from numerator and denominator as often as it goes.
    pub fn cancel(&mut self, f: &Polynomial) {
        while let (Some(n), Some(d)) = (self.num.div_exact(f), self.den.div_exact(f)) {
            self.num = n;
            self.den = d;
        }
    }

    /// Move a constant factor of the denominator into the numerator.
    pub fn normalize_constant(&mut self) {
        if let Some((_, c)) = self.den.terms.iter().next_back() {
            let c = c.clone();
            self.num = self.num.scale(&c.recip());
            self.den = self.den.scale(&c.recip());
        }
    }

    pub fn eval(&self, x: &[BigRational; 4]) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn substitute(&self, images: &[Polynomial; 4]) -> RationalFunction {
        RationalFunction::new(self.num.substitute(images), self.den.substitute(images))
    }

    pub fn to_json(&self) -> Value {
        json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    pub fn from_json(v: &Value) -> Option<RationalFunction> {
        let num = Polynomial::from_json(v.get("num")?)?;
        let den = Polynomial::from_json(v.get("den")?)?;
        (!den.is_zero()).then(|| RationalFunction::new(num, den))
    }

    pub fn fmt_with(&self, names: &[&str; 4]) -> String {
        format!("({}) / ({})", self.num.fmt_with(names), self.den.fmt_with(names))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&["x1", "x2", "x3", "x4"]))
    }
}
