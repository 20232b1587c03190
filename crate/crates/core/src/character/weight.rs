use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A character of the torus `(C*)^4 x C*_mass`, reduced modulo the
/// Calabi-Yau relation `t1 t2 t3 t4 = 1`.
///
/// The stored representative always has a zero `t4` exponent, so two weights
/// are equal exactly when they agree on the CY subtorus.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(into = "[i32; 5]", from = "[i32; 5]")]
pub struct Weight([i32; 5]);

impl Weight {
    pub const ZERO: Weight = Weight([0; 5]);

    /// Canonical representative of a raw exponent vector `(a1, a2, a3, a4, mass)`.
    pub fn new(raw: [i32; 5]) -> Self {
        let d = raw[3];
        Weight([raw[0] - d, raw[1] - d, raw[2] - d, 0, raw[4]])
    }

    /// `t_axis` for `axis` in `1..=4`.
    pub fn axis(axis: usize) -> Self {
        assert!((1..=4).contains(&axis), "axis {axis} out of range");
        let mut raw = [0; 5];
        raw[axis - 1] = 1;
        Weight::new(raw)
    }

    /// The mass character `y`.
    pub fn mass() -> Self {
        Weight([0, 0, 0, 0, 1])
    }

    /// Monomial `t1^e1 t2^e2 t3^e3 t4^e4`.
    pub fn monomial(exps: [i32; 4]) -> Self {
        Weight::new([exps[0], exps[1], exps[2], exps[3], 0])
    }

    pub fn exponents(&self) -> [i32; 5] {
        self.0
    }

    pub fn mass_exponent(&self) -> i32 {
        self.0[4]
    }

    pub fn is_fixed(&self) -> bool {
        *self == Weight::ZERO
    }

    /// Coefficients of the linear form `e^T(t^w)` in `(λ1, λ2, λ3, m)`, with
    /// `λ4 = -λ1 - λ2 - λ3` already eliminated.
    pub fn linear_form(&self) -> [i64; 4] {
        [self.0[0] as i64, self.0[1] as i64, self.0[2] as i64, self.0[4] as i64]
    }

    /// The representative with zero `t1` exponent, read as exponents of
    /// `(t2, t3, t4)` plus the mass exponent.
    pub fn transverse_to_t1(&self) -> ([i32; 3], i32) {
        let a1 = self.0[0];
        ([self.0[1] - a1, self.0[2] - a1, -a1], self.0[4])
    }

    /// Build from exponents of `(t2, t3, t4)` with no `t1` dependence.
    pub fn from_transverse(nu: [i32; 3], mass: i32) -> Self {
        Weight::new([0, nu[0], nu[1], nu[2], mass])
    }

    /// Relabel the four torus coordinates: the exponent of `t_a` moves to
    /// `t_{perm[a-1]}`. Permutations preserve the CY relation.
    pub fn permute(&self, perm: &[usize; 4]) -> Self {
        let mut raw = [0; 5];
        for a in 0..4 {
            raw[perm[a] - 1] = self.0[a];
        }
        raw[4] = self.0[4];
        Weight::new(raw)
    }

    /// Apply a linear chart map: local coordinate `a` carries the global
    /// weight `frame[a]`.
    pub fn through_frame(&self, frame: &[Weight; 4]) -> Self {
        let mut out = Weight([0, 0, 0, 0, self.0[4]]);
        for (f, &k) in frame.iter().zip(&self.0[..4]) {
            out = out + f.scale(k);
        }
        out
    }

    pub fn scale(&self, k: i32) -> Self {
        let e = self.0;
        Weight([e[0] * k, e[1] * k, e[2] * k, 0, e[4] * k])
    }

    /// The edge transition `t1 -> t1^{-1}`, `t_c -> t_c t1^{-m_c}`.
    pub fn tilde(&self, m: [i32; 3]) -> Self {
        let e = self.0;
        Weight::new([
            -e[0] - m[0] * e[1] - m[1] * e[2] - m[2] * e[3],
            e[1],
            e[2],
            e[3],
            e[4],
        ])
    }

    /// Sign-normalized representative: first nonzero exponent positive.
    /// Returns the normalized weight and whether a flip happened.
    pub fn orient(&self) -> (Weight, bool) {
        match self.0.iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => (-*self, true),
            _ => (*self, false),
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        let (a, b) = (self.0, rhs.0);
        Weight([a[0] + b[0], a[1] + b[1], a[2] + b[2], 0, a[4] + b[4]])
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        let a = self.0;
        Weight([-a[0], -a[1], -a[2], 0, -a[4]])
    }
}

impl From<[i32; 5]> for Weight {
    fn from(raw: [i32; 5]) -> Self {
        Weight::new(raw)
    }
}

impl From<Weight> for [i32; 5] {
    fn from(w: Weight) -> Self {
        w.0
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_fixed() {
            return write!(f, "1");
        }
        let names = ["t1", "t2", "t3", "t4", "y"];
        let mut first = true;
        for (name, &e) in names.iter().zip(self.0.iter()) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}
