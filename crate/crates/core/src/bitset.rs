//! Fixed-capacity vertex bitset with rank selection.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet { words: vec![0; capacity.div_ceil(64)], len: 0 }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for v in 0..capacity {
            s.insert(v as u32);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: u32) -> bool {
        let v = v as usize;
        self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: u32) -> bool {
        let v = v as usize;
        let (w, bit) = (v >> 6, 1u64 << (v & 63));
        if self.words[w] & bit == 0 {
            self.words[w] |= bit;
            self.len += 1;
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn remove(&mut self, v: u32) -> bool {
        let v = v as usize;
        let (w, bit) = (v >> 6, 1u64 << (v & 63));
        if self.words[w] & bit != 0 {
            self.words[w] &= !bit;
            self.len -= 1;
            true
        } else {
            false
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn first(&self) -> Option<u32> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| (i * 64 + w.trailing_zeros() as usize) as u32)
    }

    /// The `rank`-th smallest member (0-based).
    pub fn select(&self, mut rank: usize) -> Option<u32> {
        if rank >= self.len {
            return None;
        }
        for (i, &w) in self.words.iter().enumerate() {
            let ones = w.count_ones() as usize;
            if rank < ones {
                let mut w = w;
                for _ in 0..rank {
                    w &= w - 1;
                }
                return Some((i * 64 + w.trailing_zeros() as usize) as u32);
            }
            rank -= ones;
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some((i * 64 + t) as u32)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn select_matches_sorted_members(members in proptest::collection::btree_set(0u32..300, 0..80)) {
            let mut s = VertexSet::new(300);
            for &m in &members {
                s.insert(m);
            }
            let sorted: Vec<u32> = members.iter().copied().collect();
            prop_assert_eq!(s.len(), sorted.len());
            prop_assert_eq!(s.iter().collect::<Vec<_>>(), sorted.clone());
            for (r, &m) in sorted.iter().enumerate() {
                prop_assert_eq!(s.select(r), Some(m));
            }
            prop_assert_eq!(s.select(sorted.len()), None);
            prop_assert_eq!(s.first(), sorted.first().copied());
        }
    }

    #[test]
    fn insert_remove_track_len() {
        let mut s = VertexSet::new(10);
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert!(s.contains(3));
        assert!(s.remove(3));
        assert!(!s.remove(3));
        assert!(s.is_empty());
        assert_eq!(VertexSet::full(70).len(), 70);
    }
}
