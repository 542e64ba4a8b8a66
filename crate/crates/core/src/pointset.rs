use std::fmt;

use crate::pauli::Observable;

/// A set of points of W(5,2) packed into a `u64` (bit `id` for point `id`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits & !1)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, o: Observable) -> bool {
        self.0 & o.mask() != 0
    }

    pub fn insert(&mut self, o: Observable) {
        self.0 |= o.mask();
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// The single element, if there is exactly one.
    pub fn single(self) -> Option<Observable> {
        (self.len() == 1).then(|| self.iter().next().unwrap())
    }

    /// Points in increasing id order.
    pub fn iter(self) -> impl Iterator<Item = Observable> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let id = rest.trailing_zeros() as u8;
            rest &= rest - 1;
            Some(Observable::from_id(id).expect("point set holds only ids 1..=63"))
        })
    }

    /// XOR of all coordinate vectors in the set.
    pub fn coordinate_sum(self) -> u8 {
        self.iter().fold(0, |acc, o| acc ^ o.id())
    }
}

impl FromIterator<Observable> for PointSet {
    fn from_iter<T: IntoIterator<Item = Observable>>(iter: T) -> Self {
        PointSet(iter.into_iter().fold(0, |acc, o| acc | o.mask()))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
