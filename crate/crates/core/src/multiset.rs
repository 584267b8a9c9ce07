use std::collections::BTreeSet;
use std::fmt;

/// Finite multiset of integers, kept in non-decreasing order.
///
/// Equality is multiset equality because the storage is canonical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multiset(Vec<i64>);

impl Multiset {
    pub fn new(values: impl IntoIterator<Item = i64>) -> Self {
        let mut v: Vec<i64> = values.into_iter().collect();
        v.sort_unstable();
        Multiset(v)
    }

    pub fn empty() -> Self {
        Multiset(Vec::new())
    }

    /// Ascending view.
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn min(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// `max − min`, zero for the empty multiset.
    pub fn spread(&self) -> i64 {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn support(&self) -> BTreeSet<i64> {
        self.0.iter().copied().collect()
    }

    pub fn multiplicity(&self, x: i64) -> usize {
        let lo = self.0.partition_point(|&v| v < x);
        let hi = self.0.partition_point(|&v| v <= x);
        hi - lo
    }

    /// Multiset union (sum of multiplicities).
    pub fn union(&self, other: &Multiset) -> Multiset {
        Multiset::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> Multiset {
        Multiset::new(self.0.iter().map(|&x| f(x)))
    }

    /// Halves every multiplicity; `None` if some multiplicity is odd.
    pub fn halve(&self) -> Option<Multiset> {
        let mut out = Vec::with_capacity(self.0.len() / 2);
        let mut i = 0;
        while i < self.0.len() {
            let x = self.0[i];
            let run = self.multiplicity(x);
            if run % 2 != 0 {
                return None;
            }
            out.extend(std::iter::repeat(x).take(run / 2));
            i += run;
        }
        Some(Multiset(out))
    }

    /// Whether `self` is a sub-multiset of `other`.
    pub fn is_submultiset_of(&self, other: &Multiset) -> bool {
        self.support()
            .iter()
            .all(|&x| self.multiplicity(x) <= other.multiplicity(x))
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl<const N: usize> From<[i64; N]> for Multiset {
    fn from(v: [i64; N]) -> Self {
        Multiset::new(v)
    }
}

impl From<Vec<i64>> for Multiset {
    fn from(v: Vec<i64>) -> Self {
        Multiset::new(v)
    }
}
