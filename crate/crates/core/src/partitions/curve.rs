use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::boxes::{predecessors, successors, Cell, PlanePartition, SolidPartition};
use crate::error::{Error, Result};

/// The three axes (1-based, increasing) transverse to a leg along `axis`.
pub fn leg_axes(axis: usize) -> [usize; 3] {
    let mut out = [0; 3];
    let mut k = 0;
    for a in 1..=4 {
        if a != axis {
            out[k] = a;
            k += 1;
        }
    }
    out
}

/// Coordinates of `x` transverse to `axis`, in increasing axis order.
pub fn project(x: &Cell<4>, axis: usize) -> Cell<3> {
    leg_axes(axis).map(|a| x[a - 1])
}

/// The box with coordinate `k` along `axis` and transverse coordinates `tau`.
pub fn embed(tau: &Cell<3>, axis: usize, k: u32) -> Cell<4> {
    let mut x = [0; 4];
    x[axis - 1] = k;
    for (c, a) in leg_axes(axis).iter().enumerate() {
        x[a - 1] = tau[c];
    }
    x
}

/// A possibly infinite solid partition: four leg cylinders plus finitely many
/// extra boxes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "CurveRepr", into = "CurveRepr")]
pub struct CurvePartition {
    legs: [PlanePartition; 4],
    extra: BTreeSet<Cell<4>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveRepr {
    legs: [PlanePartition; 4],
    extra: Vec<Cell<4>>,
}

impl TryFrom<CurveRepr> for CurvePartition {
    type Error = Error;
    fn try_from(r: CurveRepr) -> Result<Self> {
        CurvePartition::new(r.legs, r.extra)
    }
}

impl From<CurvePartition> for CurveRepr {
    fn from(c: CurvePartition) -> Self {
        CurveRepr { legs: c.legs, extra: c.extra.into_iter().collect() }
    }
}

impl CurvePartition {
    pub fn new<I: IntoIterator<Item = Cell<4>>>(legs: [PlanePartition; 4], extra: I) -> Result<Self> {
        let mut out = Self::minimal(legs);
        for x in extra {
            if out.in_cylinders(&x) {
                return Err(Error::InvalidInput(format!("extra box {x:?} lies in a leg cylinder")));
            }
            out.extra.insert(x);
        }
        if !out.extra.iter().all(|x| predecessors(x).all(|p| out.contains(&p))) {
            return Err(Error::InvalidInput("curve partition is not downward closed".into()));
        }
        Ok(out)
    }

    /// The union of the leg cylinders.
    pub fn minimal(legs: [PlanePartition; 4]) -> Self {
        Self { legs, extra: BTreeSet::new() }
    }

    pub fn from_solid(p: &SolidPartition) -> Self {
        Self { legs: Default::default(), extra: p.boxes().clone() }
    }

    pub fn legs(&self) -> &[PlanePartition; 4] {
        &self.legs
    }

    /// Leg along `axis` (1-based).
    pub fn leg(&self, axis: usize) -> &PlanePartition {
        &self.legs[axis - 1]
    }

    pub fn extra(&self) -> &BTreeSet<Cell<4>> {
        &self.extra
    }

    pub fn is_point_like(&self) -> bool {
        self.legs.iter().all(|l| l.is_empty())
    }

    pub fn leg_size(&self) -> usize {
        self.legs.iter().map(|l| l.len()).sum()
    }

    pub fn in_cylinder(&self, axis: usize, x: &Cell<4>) -> bool {
        self.legs[axis - 1].contains(&project(x, axis))
    }

    fn in_cylinders(&self, x: &Cell<4>) -> bool {
        (1..=4).any(|a| self.in_cylinder(a, x))
    }

    pub fn contains(&self, x: &Cell<4>) -> bool {
        self.extra.contains(x) || self.in_cylinders(x)
    }

    /// Largest coordinate among extra boxes and leg boxes.
    pub fn bound(&self) -> u32 {
        let e = self.extra.iter().flat_map(|x| x.iter().copied()).max();
        let l = self.legs.iter().filter_map(|l| l.max_coordinate()).max();
        e.into_iter().chain(l).max().unwrap_or(0)
    }

    pub fn default_cutoff(&self) -> u32 {
        2 + self.bound()
    }

    /// `π ∩ [0, N]^4`.
    pub fn truncation(&self, n: u32) -> SolidPartition {
        let mut boxes: BTreeSet<Cell<4>> =
            self.extra.iter().filter(|x| x.iter().all(|&c| c <= n)).copied().collect();
        for a in 1..=4 {
            boxes.extend(self.leg_truncation(a, n).boxes().iter().copied());
        }
        SolidPartition::new(boxes).expect("truncation is downward closed")
    }

    /// The leg cylinder along `axis` cut at length `N + 1`.
    pub fn leg_truncation(&self, axis: usize, n: u32) -> SolidPartition {
        let boxes = self.legs[axis - 1]
            .iter()
            .filter(|tau| tau.iter().all(|&c| c <= n))
            .flat_map(|tau| (0..=n).map(move |k| embed(tau, axis, k)));
        SolidPartition::new(boxes).expect("cylinder is downward closed")
    }

    /// `#(π ∩ [0,N]^4) - (N+1) Σ |λ_a|`.
    pub fn volume_at(&self, n: u32) -> i64 {
        assert!(n >= self.bound(), "cut-off below the partition bound");
        self.truncation(n).len() as i64 - (n as i64 + 1) * self.leg_size() as i64
    }

    /// Renormalized volume, checked at two consecutive cut-offs.
    pub fn renormalized_volume(&self) -> i64 {
        let n = self.default_cutoff();
        let v = self.volume_at(n);
        assert_eq!(v, self.volume_at(n + 1), "renormalized volume depends on the cut-off");
        v
    }

    /// Boxes outside `π` whose addition keeps it downward closed.
    pub fn addable(&self) -> Vec<Cell<4>> {
        let lim = self.bound() + 1;
        let mut seeds: BTreeSet<Cell<4>> = self.extra.clone();
        for a in 1..=4 {
            for tau in self.legs[a - 1].iter() {
                for k in 0..=lim {
                    seeds.insert(embed(tau, a, k));
                }
            }
        }
        let mut cand: BTreeSet<Cell<4>> = BTreeSet::new();
        if !self.contains(&[0; 4]) {
            cand.insert([0; 4]);
        }
        for s in &seeds {
            cand.extend(successors(s));
        }
        cand.into_iter()
            .filter(|x| x.iter().all(|&c| c <= lim))
            .filter(|x| !self.contains(x) && predecessors(x).all(|p| self.contains(&p)))
            .collect()
    }

    /// Extra boxes whose removal keeps `π` downward closed.
    pub fn removable(&self) -> impl DoubleEndedIterator<Item = &Cell<4>> {
        self.extra
            .iter()
            .filter(|x| successors(x).all(|s| !self.contains(&s)))
    }

    fn with(&self, x: Cell<4>) -> Self {
        let mut out = self.clone();
        out.extra.insert(x);
        out
    }

    /// Reverse-search children: the added box is the largest removable one.
    pub fn canonical_children(&self) -> Vec<Self> {
        self.addable()
            .into_iter()
            .filter_map(|b| {
                let child = self.with(b);
                let keep = child.removable().next_back() == Some(&b);
                keep.then_some(child)
            })
            .collect()
    }

    /// Relabel axes: coordinate `k` (0-based) moves to axis `perm[k]` (1-based).
    pub fn permute(&self, perm: &[usize; 4]) -> Self {
        let move_box = |x: &Cell<4>| {
            let mut y = [0; 4];
            for k in 0..4 {
                y[perm[k] - 1] = x[k];
            }
            y
        };
        let mut legs: [PlanePartition; 4] = Default::default();
        for a in 1..=4 {
            let b = perm[a - 1];
            let moved = self.legs[a - 1].iter().map(|tau| project(&move_box(&embed(tau, a, 0)), b));
            legs[b - 1] = PlanePartition::new(moved).expect("relabeled leg is a plane partition");
        }
        Self { legs, extra: self.extra.iter().map(move_box).collect() }
    }
}

/// All curve partitions with the given legs and at most `kmax` extra boxes,
/// grouped by the number of extra boxes.
pub fn enumerate_curve(legs: &[PlanePartition; 4], kmax: usize) -> Vec<CurvePartition> {
    let mut out = vec![CurvePartition::minimal(legs.clone())];
    let mut level = out.clone();
    for _ in 0..kmax {
        level = level.iter().flat_map(|p| p.canonical_children()).collect();
        level.sort();
        out.extend(level.iter().cloned());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single() -> PlanePartition {
        PlanePartition::new([[0, 0, 0]]).unwrap()
    }

    fn legs_with(axes: &[usize]) -> [PlanePartition; 4] {
        let mut legs: [PlanePartition; 4] = Default::default();
        for &a in axes {
            legs[a - 1] = single();
        }
        legs
    }

    #[test]
    fn leg_axes_increasing() {
        assert_eq!(leg_axes(1), [2, 3, 4]);
        assert_eq!(leg_axes(3), [1, 2, 4]);
        assert_eq!(embed(&[5, 6, 7], 2, 1), [5, 1, 6, 7]);
        assert_eq!(project(&[5, 1, 6, 7], 2), [5, 6, 7]);
    }

    #[test]
    fn volume_examples() {
        assert_eq!(CurvePartition::minimal(legs_with(&[1])).renormalized_volume(), 0);
        assert_eq!(CurvePartition::minimal(legs_with(&[1, 2])).renormalized_volume(), -1);
        let p = CurvePartition::from_solid(&SolidPartition::cuboid([2, 2, 1, 1]));
        assert_eq!(p.renormalized_volume(), 4);
    }

    #[test]
    fn empty_legs_reduce_to_solid() {
        let c = enumerate_curve(&Default::default(), 2);
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn single_leg_addable_boxes() {
        let c = enumerate_curve(&legs_with(&[1]), 1);
        // next to the x1 cylinder only (0,1,0,0), (0,0,1,0), (0,0,0,1) can be added
        assert_eq!(c.len(), 4);
        assert!(c[1..].iter().all(|p| p.extra().len() == 1));
    }

    #[test]
    fn rejects_box_inside_cylinder() {
        assert!(CurvePartition::new(legs_with(&[1]), [[3, 0, 0, 0]]).is_err());
        assert!(CurvePartition::new(legs_with(&[1]), [[0, 0, 2, 0]]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let p = CurvePartition::new(legs_with(&[2]), [[1, 0, 0, 0]]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"legs":[[],[[0,0,0]],[],[]],"extra":[[1,0,0,0]]}"#);
        assert_eq!(serde_json::from_str::<CurvePartition>(&s).unwrap(), p);
    }
}
