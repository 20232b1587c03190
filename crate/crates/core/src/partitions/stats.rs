use serde::{Deserialize, Serialize};

use super::boxes::{Cell, PlanePartition, SolidPartition};
use super::curve::{embed, CurvePartition};
use crate::character::{CharClass, Weight};
use crate::error::{Error, Result};

/// Degrees `(m2, m3, m4)` of the normal bundle of an invariant line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i32; 3]", into = "[i32; 3]")]
pub struct NormalDegrees([i32; 3]);

impl NormalDegrees {
    pub fn new(m: [i32; 3]) -> Result<Self> {
        if m.iter().sum::<i32>() != -2 {
            return Err(Error::InvalidGeometry(format!("normal degrees {m:?} do not sum to -2")));
        }
        Ok(Self(m))
    }

    pub fn as_array(&self) -> [i32; 3] {
        self.0
    }

    /// `m_i` for a transverse axis `i` in `2..=4`.
    pub fn get(&self, i: usize) -> i32 {
        self.0[i - 2]
    }

    /// Degree pairing `m . ν`.
    pub fn dot(&self, nu: &[i32; 3]) -> i32 {
        self.0.iter().zip(nu).map(|(a, b)| a * b).sum()
    }

    /// Every permutation of `(0,-1,-1)`, `(0,0,-2)`, `(1,-1,-2)`, `(2,-2,-2)`.
    pub fn test_set() -> Vec<NormalDegrees> {
        let mut out = Vec::new();
        for base in [[0, -1, -1], [0, 0, -2], [1, -1, -2], [2, -2, -2]] {
            for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let m = NormalDegrees([base[p[0]], base[p[1]], base[p[2]]]);
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        out
    }
}

impl TryFrom<[i32; 3]> for NormalDegrees {
    type Error = Error;
    fn try_from(m: [i32; 3]) -> Result<Self> {
        NormalDegrees::new(m)
    }
}

impl From<NormalDegrees> for [i32; 3] {
    fn from(m: NormalDegrees) -> Self {
        m.0
    }
}

/// `Σ_{(i,j,k) ∈ λ} (1 - m2 i - m3 j - m4 k)`.
pub fn f_m(lambda: &PlanePartition, m: NormalDegrees) -> i64 {
    lambda
        .iter()
        .map(|c| 1 - m.dot(&c.map(|x| x as i32)) as i64)
        .sum()
}

/// `a_j = a_k = a_l < a_i` for the three axes other than `i`.
fn diagonal_below<const D: usize>(x: &Cell<D>, i: usize, axes: impl Iterator<Item = usize>) -> bool {
    let mut others = axes.filter(|&a| a != i).map(|a| x[a]);
    let first = others.next().expect("at least one other axis");
    others.all(|c| c == first) && first < x[i]
}

fn diagonal_count(p: &SolidPartition, i: usize) -> i64 {
    p.iter().filter(|x| diagonal_below(x, i - 1, 0..4)).count() as i64
}

/// `|π| + #{a ∈ π : a_j = a_k = a_l < a_i}`.
pub fn sigma_point(p: &SolidPartition, i: usize) -> i64 {
    assert!((1..=4).contains(&i));
    p.len() as i64 + diagonal_count(p, i)
}

/// Regularized curve sign at cut-off `n`.
pub fn sigma_curve_at(p: &CurvePartition, i: usize, n: u32) -> i64 {
    assert!((1..=4).contains(&i));
    let legs: i64 = (1..=4)
        .filter(|&a| !p.leg(a).is_empty())
        .map(|a| diagonal_count(&p.leg_truncation(a, n), i))
        .sum();
    p.volume_at(n) + diagonal_count(&p.truncation(n), i) - legs
}

/// Regularized curve sign, checked at two consecutive cut-offs.
pub fn sigma_curve(p: &CurvePartition, i: usize) -> i64 {
    let n = p.default_cutoff();
    let s = sigma_curve_at(p, i, n);
    assert_eq!(s, sigma_curve_at(p, i, n + 1), "curve sign depends on the cut-off");
    s
}

/// `f_m(λ) + |λ| m_i + #{(a2,a3,a4) ∈ λ : a_j = a_k < a_i}` for `i` in `2..=4`.
pub fn sigma_edge(lambda: &PlanePartition, m: NormalDegrees, i: usize) -> i64 {
    assert!((2..=4).contains(&i));
    let diag = lambda.iter().filter(|x| diagonal_below(x, i - 2, 0..3)).count() as i64;
    f_m(lambda, m) + lambda.len() as i64 * m.get(i) as i64 + diag
}

/// `Σ_{a ∈ π} t^a`.
pub fn char_of_solid(p: &SolidPartition) -> CharClass {
    CharClass::from_terms(p.iter().map(|x| (Weight::monomial(x.map(|c| c as i32)), 1)))
}

/// Character of a leg along `axis`, in the remaining variables taken in
/// increasing axis order.
pub fn char_of_leg(lambda: &PlanePartition, axis: usize) -> CharClass {
    CharClass::from_terms(
        lambda
            .iter()
            .map(|tau| (Weight::monomial(embed(tau, axis, 0).map(|c| c as i32)), 1)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(b: &[[u32; 3]]) -> PlanePartition {
        PlanePartition::new(b.iter().copied()).unwrap()
    }

    fn solid(b: &[[u32; 4]]) -> SolidPartition {
        SolidPartition::new(b.iter().copied()).unwrap()
    }

    fn m(a: [i32; 3]) -> NormalDegrees {
        NormalDegrees::new(a).unwrap()
    }

    #[test]
    fn normal_degrees() {
        assert!(NormalDegrees::new([0, 0, 0]).is_err());
        assert_eq!(NormalDegrees::test_set().len(), 3 + 3 + 6 + 3);
        assert!(serde_json::from_str::<NormalDegrees>("[1,1,1]").is_err());
    }

    #[test]
    fn f_m_examples() {
        let mm = m([-1, -1, 0]);
        assert_eq!(f_m(&plane(&[[0, 0, 0]]), mm), 1);
        assert_eq!(f_m(&plane(&[[0, 0, 0], [0, 0, 1]]), mm), 2);
        assert_eq!(f_m(&plane(&[[0, 0, 0], [1, 0, 0]]), mm), 3);
    }

    #[test]
    fn sigma_point_examples() {
        assert_eq!(sigma_point(&solid(&[[0, 0, 0, 0]]), 4), 1);
        assert_eq!(sigma_point(&solid(&[[0, 0, 0, 0], [0, 0, 0, 1]]), 4), 3);
        assert_eq!(sigma_point(&solid(&[[0, 0, 0, 0], [1, 0, 0, 0]]), 4), 2);
    }

    #[test]
    fn sigma_curve_examples() {
        let mut legs: [PlanePartition; 4] = Default::default();
        legs[3] = plane(&[[0, 0, 0]]);
        assert_eq!(sigma_curve(&CurvePartition::minimal(legs), 4), 0);
        let mut legs: [PlanePartition; 4] = Default::default();
        legs[0] = plane(&[[0, 0, 0]]);
        assert_eq!(sigma_curve(&CurvePartition::minimal(legs), 4), 0);
        let p = solid(&[[0, 0, 0, 0], [0, 0, 0, 1]]);
        assert_eq!(sigma_curve(&CurvePartition::from_solid(&p), 4), sigma_point(&p, 4));
    }

    #[test]
    fn sigma_edge_examples() {
        let mm = m([-1, -1, 0]);
        assert_eq!(sigma_edge(&plane(&[[0, 0, 0]]), mm, 4), 1);
        assert_eq!(sigma_edge(&plane(&[[0, 0, 0]]), mm, 3), 0);
        assert_eq!(sigma_edge(&plane(&[[0, 0, 0], [0, 0, 1]]), mm, 4), 3);
    }

    #[test]
    fn characters() {
        assert_eq!(char_of_solid(&solid(&[[0, 0, 0, 0]])), CharClass::one());
        let l = plane(&[[0, 0, 0], [1, 0, 0]]);
        assert_eq!(
            char_of_leg(&l, 1),
            CharClass::from_terms([(Weight::ZERO, 1), (Weight::axis(2), 1)])
        );
        assert_eq!(
            char_of_leg(&l, 2),
            CharClass::from_terms([(Weight::ZERO, 1), (Weight::axis(1), 1)])
        );
    }
}
