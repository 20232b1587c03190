use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Cell<const D: usize> = [u32; D];

/// A finite downward-closed subset of `Z^D_{>=0}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition<const D: usize> {
    boxes: BTreeSet<Cell<D>>,
}

pub type PlanePartition = Partition<3>;
pub type SolidPartition = Partition<4>;

impl<const D: usize> Partition<D> {
    pub fn empty() -> Self {
        Self { boxes: BTreeSet::new() }
    }

    pub fn new<I: IntoIterator<Item = Cell<D>>>(boxes: I) -> Result<Self> {
        let p = Self { boxes: boxes.into_iter().collect() };
        if !p.is_downward_closed() {
            return Err(Error::InvalidInput(format!("{p:?} is not downward closed")));
        }
        Ok(p)
    }

    /// The box `[0, sides)` product.
    pub fn cuboid(sides: [u32; D]) -> Self {
        let mut boxes = BTreeSet::new();
        let mut cur = [0u32; D];
        if sides.contains(&0) {
            return Self::empty();
        }
        loop {
            boxes.insert(cur);
            let mut k = 0;
            loop {
                if k == D {
                    return Self { boxes };
                }
                cur[k] += 1;
                if cur[k] < sides[k] {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, c: &Cell<D>) -> bool {
        self.boxes.contains(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cell<D>> {
        self.boxes.iter()
    }

    pub fn boxes(&self) -> &BTreeSet<Cell<D>> {
        &self.boxes
    }

    pub fn max_coordinate(&self) -> Option<u32> {
        self.boxes.iter().flat_map(|c| c.iter().copied()).max()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.boxes
            .iter()
            .all(|c| predecessors(c).all(|p| self.boxes.contains(&p)))
    }

    /// Boxes whose addition keeps the set downward closed, in lex order.
    pub fn addable(&self) -> Vec<Cell<D>> {
        if self.boxes.is_empty() {
            return vec![[0; D]];
        }
        let mut out = BTreeSet::new();
        for c in &self.boxes {
            for s in successors(c) {
                if !self.boxes.contains(&s) && predecessors(&s).all(|p| self.boxes.contains(&p)) {
                    out.insert(s);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Boxes whose removal keeps the set downward closed.
    pub fn removable(&self) -> impl DoubleEndedIterator<Item = &Cell<D>> {
        self.boxes
            .iter()
            .filter(|c| successors(c).all(|s| !self.boxes.contains(&s)))
    }

    pub fn with(&self, c: Cell<D>) -> Self {
        let mut boxes = self.boxes.clone();
        boxes.insert(c);
        Self { boxes }
    }

    /// Children in the reverse-search tree: one box added, and that box is
    /// the lexicographically largest removable box of the child.
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
    pub fn permute(&self, perm: &[usize; D]) -> Self {
        Self {
            boxes: self
                .boxes
                .iter()
                .map(|c| {
                    let mut out = [0; D];
                    for k in 0..D {
                        out[perm[k] - 1] = c[k];
                    }
                    out
                })
                .collect(),
        }
    }

    /// Whether every box has coordinate `axis` (0-based) equal to zero.
    pub fn in_hyperplane(&self, axis: usize) -> bool {
        self.boxes.iter().all(|c| c[axis] == 0)
    }
}

pub(crate) fn predecessors<const D: usize>(c: &Cell<D>) -> impl Iterator<Item = Cell<D>> + '_ {
    (0..D).filter(|&k| c[k] > 0).map(move |k| {
        let mut p = *c;
        p[k] -= 1;
        p
    })
}

pub(crate) fn successors<const D: usize>(c: &Cell<D>) -> impl Iterator<Item = Cell<D>> + '_ {
    (0..D).map(move |k| {
        let mut s = *c;
        s[k] += 1;
        s
    })
}

/// Depth-first, memory-bounded stream of all partitions of a fixed size.
pub struct PartitionIter<const D: usize> {
    target: usize,
    stack: Vec<std::vec::IntoIter<Partition<D>>>,
    root: Option<Partition<D>>,
}

impl<const D: usize> PartitionIter<D> {
    pub fn new(size: usize) -> Self {
        Self { target: size, stack: Vec::new(), root: Some(Partition::empty()) }
    }
}

impl<const D: usize> Iterator for PartitionIter<D> {
    type Item = Partition<D>;

    fn next(&mut self) -> Option<Partition<D>> {
        if let Some(root) = self.root.take() {
            if self.target == 0 {
                return Some(root);
            }
            self.stack.push(root.canonical_children().into_iter());
        }
        while let Some(top) = self.stack.last_mut() {
            match top.next() {
                None => {
                    self.stack.pop();
                }
                Some(p) if p.len() == self.target => return Some(p),
                Some(p) => {
                    let kids = p.canonical_children();
                    self.stack.push(kids.into_iter());
                }
            }
        }
        None
    }
}

/// All solid partitions with `n` boxes.
pub fn enumerate_solid(n: usize) -> Vec<SolidPartition> {
    PartitionIter::<4>::new(n).collect()
}

/// All plane partitions with `n` boxes.
pub fn enumerate_plane(n: usize) -> Vec<PlanePartition> {
    PartitionIter::<3>::new(n).collect()
}

/// Solid partitions of every size `0..=max`.
pub fn solid_up_to(max: usize) -> Vec<SolidPartition> {
    (0..=max).flat_map(enumerate_solid).collect()
}

/// Plane partitions of every size `0..=max`.
pub fn plane_up_to(max: usize) -> Vec<PlanePartition> {
    (0..=max).flat_map(enumerate_plane).collect()
}

impl<const D: usize> fmt::Debug for Partition<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.boxes.iter()).finish()
    }
}

impl<const D: usize> Serialize for Partition<D> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<u32>> = self.boxes.iter().map(|c| c.to_vec()).collect();
        rows.serialize(s)
    }
}

impl<'de, const D: usize> Deserialize<'de> for Partition<D> {
    fn deserialize<De: Deserializer<'de>>(d: De) -> std::result::Result<Self, De::Error> {
        let rows: Vec<Vec<u32>> = Vec::deserialize(d)?;
        let mut cells = Vec::with_capacity(rows.len());
        for r in rows {
            let c: Cell<D> = r
                .try_into()
                .map_err(|_| serde::de::Error::custom(format!("expected {D} coordinates per box")))?;
            cells.push(c);
        }
        Partition::new(cells).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_solid(1).len(), 1);
        assert_eq!(enumerate_solid(2).len(), 4);
        assert_eq!(enumerate_plane(1).len(), 1);
        assert_eq!(enumerate_plane(3).len(), 6);
        assert_eq!(enumerate_plane(4).len(), 13);
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let all = enumerate_solid(5);
        let set: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|p| p.is_downward_closed() && p.len() == 5));
    }

    #[test]
    fn rejects_non_closed() {
        assert!(PlanePartition::new([[1, 0, 0]]).is_err());
        assert!(PlanePartition::new([[0, 0, 0], [1, 0, 0]]).is_ok());
    }

    #[test]
    fn cuboid_is_closed() {
        let c = SolidPartition::cuboid([2, 1, 3, 1]);
        assert_eq!(c.len(), 6);
        assert!(c.is_downward_closed());
    }

    #[test]
    fn json_sorted_rows() {
        let p = PlanePartition::new([[1, 0, 0], [0, 0, 0]]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[0,0,0],[1,0,0]]");
        assert!(serde_json::from_str::<PlanePartition>("[[0,1,0]]").is_err());
    }
}
