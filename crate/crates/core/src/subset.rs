use std::fmt;

/// A subset of `{0, …, 63}` packed into one machine word, element `i` at bit `i`.
///
/// The derived ordering compares the raw words, which is the canonical order
/// used for every sorted family in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, …, n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(x: usize) -> Self {
        Subset(1u64 << x)
    }

    #[inline]
    pub const fn contains(self, x: usize) -> bool {
        x < 64 && (self.0 >> x) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    #[inline]
    pub const fn with(self, x: usize) -> Self {
        Subset(self.0 | (1u64 << x))
    }

    #[inline]
    pub const fn without(self, x: usize) -> Self {
        Subset(self.0 & !(1u64 << x))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_proper_subset(self, other: Subset) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }
}

/// Ascending iterator over the elements of a [`Subset`].
#[derive(Debug, Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

/// Formats as `{0,2,5}`.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_handles_word_width() {
        assert_eq!(Subset::full(0), Subset::EMPTY);
        assert_eq!(Subset::full(3).bits(), 0b111);
        assert_eq!(Subset::full(64).bits(), u64::MAX);
        assert_eq!(Subset::full(64).len(), 64);
    }

    #[test]
    fn iterates_in_ascending_order() {
        let s: Subset = [5, 0, 63, 2].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5, 63]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.iter().len(), 4);
    }

    #[test]
    fn display() {
        assert_eq!(Subset::EMPTY.to_string(), "{}");
        assert_eq!(Subset::from_bits(0b101).to_string(), "{0,2}");
    }

    #[test]
    fn subset_relations() {
        let a = Subset::from_bits(0b011);
        let b = Subset::from_bits(0b111);
        assert!(a.is_subset(b));
        assert!(a.is_proper_subset(b));
        assert!(!b.is_subset(a));
        assert!(b.is_subset(b) && !b.is_proper_subset(b));
        assert_eq!(b.difference(a), Subset::singleton(2));
    }
}
