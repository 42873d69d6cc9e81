//! Compact edge sets over graphs with at most 128 edges, which covers
//! everything this library works with at desk scale.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct EdgeSet(pub u128);

// serialized as a sorted list of edge ids, the portable representation
impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = ids.iter().find(|&&e| e >= 128) {
            return Err(serde::de::Error::custom(format!("edge id {bad} out of range")));
        }
        Ok(EdgeSet::from_iter(ids))
    }
}

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn full(m: usize) -> Self {
        assert!(m <= 128, "edge set capacity exceeded");
        if m == 128 {
            EdgeSet(u128::MAX)
        } else {
            EdgeSet((1u128 << m) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        EdgeSet(1u128 << e)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet(0);
        for e in iter {
            s.insert(e);
        }
        s
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u128 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u128 << e);
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = EdgeSet::EMPTY;
        s.insert(3);
        s.insert(100);
        assert!(s.contains(3) && s.contains(100) && !s.contains(4));
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![3, 100]);
        s.remove(3);
        assert_eq!(s.to_vec(), vec![100]);
        assert!(EdgeSet::singleton(5).is_subset(&EdgeSet::full(6)));
    }
}
