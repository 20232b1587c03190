use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Weight;

/// A virtual torus character: a finite integer combination of weights.
///
/// Zero multiplicities are never stored, so structural equality is equality
/// in `K_T(pt)`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct CharClass {
    terms: FxHashMap<Weight, i64>,
}

impl CharClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Weight::ZERO, 1)
    }

    pub fn monomial(w: Weight, mult: i64) -> Self {
        let mut c = Self::zero();
        c.add_term(w, mult);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, i64)>>(terms: I) -> Self {
        let mut c = Self::zero();
        for (w, m) in terms {
            c.add_term(w, m);
        }
        c
    }

    /// `prod_{a in axes} (1 - t_a^{-1})`.
    pub fn p_bar(axes: &[usize]) -> Self {
        axes.iter().fold(Self::one(), |acc, &a| {
            &acc * &(Self::one() - Self::monomial(-Weight::axis(a), 1))
        })
    }

    /// `prod_{a in axes} (1 - t_a)`.
    pub fn p(axes: &[usize]) -> Self {
        axes.iter().fold(Self::one(), |acc, &a| {
            &acc * &(Self::one() - Self::monomial(Weight::axis(a), 1))
        })
    }

    pub fn add_term(&mut self, w: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.terms.entry(w).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.remove(&w);
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

    pub fn coefficient(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.terms.iter()
    }

    /// Terms in lexicographic weight order.
    pub fn sorted_terms(&self) -> Vec<(Weight, i64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, m)| (*w, *m)).collect();
        v.sort_unstable();
        v
    }

    pub fn rank(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Multiplicity of the trivial character; zero iff the class is T-movable.
    pub fn fixed_part(&self) -> i64 {
        self.coefficient(&Weight::ZERO)
    }

    pub fn is_movable(&self) -> bool {
        self.fixed_part() == 0
    }

    /// The class with its trivial summand removed.
    pub fn movable_part(&self) -> Self {
        let mut c = self.clone();
        c.terms.remove(&Weight::ZERO);
        c
    }

    /// The dual representation.
    pub fn bar(&self) -> Self {
        self.map_weights(|w| -w)
    }

    pub fn tilde(&self, m: [i32; 3]) -> Self {
        self.map_weights(|w| w.tilde(m))
    }

    pub fn permute(&self, perm: &[usize; 4]) -> Self {
        self.map_weights(|w| w.permute(perm))
    }

    pub fn through_frame(&self, frame: &[Weight; 4]) -> Self {
        self.map_weights(|w| w.through_frame(frame))
    }

    /// Multiply by the monomial `t^w`.
    pub fn shift(&self, w: Weight) -> Self {
        self.map_weights(|x| x + w)
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(w, m)| (*w, m * k)).collect(),
        }
    }

    pub fn map_weights<F: Fn(Weight) -> Weight>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (w, m) in &self.terms {
            out.add_term(f(*w), *m);
        }
        out
    }
}

impl fmt::Debug for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, m)) in terms.iter().enumerate() {
            let sign = if *m < 0 { "-" } else if i > 0 { "+" } else { "" };
            let abs = m.abs();
            if i > 0 {
                write!(f, " ")?;
            }
            if abs == 1 {
                write!(f, "{sign}{w}")?;
            } else {
                write!(f, "{sign}{abs}*{w}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&CharClass> for CharClass {
    fn add_assign(&mut self, rhs: &CharClass) {
        for (w, m) in &rhs.terms {
            self.add_term(*w, *m);
        }
    }
}

impl SubAssign<&CharClass> for CharClass {
    fn sub_assign(&mut self, rhs: &CharClass) {
        for (w, m) in &rhs.terms {
            self.add_term(*w, -*m);
        }
    }
}

impl Add for CharClass {
    type Output = CharClass;
    fn add(mut self, rhs: CharClass) -> CharClass {
        self += &rhs;
        self
    }
}

impl Add<&CharClass> for &CharClass {
    type Output = CharClass;
    fn add(self, rhs: &CharClass) -> CharClass {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for CharClass {
    type Output = CharClass;
    fn sub(mut self, rhs: CharClass) -> CharClass {
        self -= &rhs;
        self
    }
}

impl Sub<&CharClass> for &CharClass {
    type Output = CharClass;
    fn sub(self, rhs: &CharClass) -> CharClass {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for CharClass {
    type Output = CharClass;
    fn neg(self) -> CharClass {
        self.scale(-1)
    }
}

impl Neg for &CharClass {
    type Output = CharClass;
    fn neg(self) -> CharClass {
        self.scale(-1)
    }
}

impl Mul<&CharClass> for &CharClass {
    type Output = CharClass;
    fn mul(self, rhs: &CharClass) -> CharClass {
        let mut out = CharClass::zero();
        out.terms
            .reserve(self.terms.len().saturating_mul(rhs.terms.len()).min(1 << 16));
        for (a, ma) in &self.terms {
            for (b, mb) in &rhs.terms {
                out.add_term(*a + *b, ma * mb);
            }
        }
        out
    }
}

impl Mul for CharClass {
    type Output = CharClass;
    fn mul(self, rhs: CharClass) -> CharClass {
        &self * &rhs
    }
}

/// JSON form: sorted list of `[a1, a2, a3, a4, a5, multiplicity]`.
impl Serialize for CharClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<[i64; 6]> = self
            .sorted_terms()
            .into_iter()
            .map(|(w, m)| {
                let e = w.exponents();
                [e[0] as i64, e[1] as i64, e[2] as i64, e[3] as i64, e[4] as i64, m]
            })
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<[i64; 6]> = Vec::deserialize(d)?;
        let mut c = CharClass::zero();
        for r in rows {
            let w = Weight::new([r[0] as i32, r[1] as i32, r[2] as i32, r[3] as i32, r[4] as i32]);
            c.add_term(w, r[5]);
        }
        Ok(c)
    }
}
