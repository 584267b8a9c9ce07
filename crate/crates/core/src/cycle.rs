//! Metric machinery specific to the cycle `C_n`: clockwise distance, spans
//! within an ordered subset, and the two families of k-multispectra.

use crate::error::{invalid, Error, Result};
use crate::multiset::Multiset;
use crate::set::VertexSet;

/// Least non-negative residue of `v − u` modulo `n`.
pub fn clockwise_distance(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < n && v < n);
    (v + n - u) % n
}

pub fn geodesic_distance_cycle(n: usize, u: usize, v: usize) -> usize {
    let d = clockwise_distance(n, u, v);
    d.min(n - d)
}

/// A vertex subset of `C_n`, members `a_0 < … < a_{m−1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicVertexSet {
    n: usize,
    members: Vec<usize>,
}

impl CyclicVertexSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set = VertexSet::new(members);
        if let Some(max) = set.largest() {
            if max >= n {
                return Err(Error::VertexOutOfRange { vertex: max, n });
            }
        }
        Ok(CyclicVertexSet {
            n,
            members: set.into_vec(),
        })
    }

    pub fn from_set(n: usize, set: &VertexSet) -> Result<Self> {
        Self::new(n, set.iter())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// `a_i` with the index reduced modulo `m`.
    pub fn member(&self, i: usize) -> usize {
        self.members[i % self.members.len()]
    }

    pub fn to_vertex_set(&self) -> VertexSet {
        VertexSet::from_sorted(self.members.clone())
    }

    pub fn complement(&self) -> CyclicVertexSet {
        CyclicVertexSet {
            n: self.n,
            members: self.to_vertex_set().complement(self.n).into_vec(),
        }
    }

    /// Image under `x ↦ sign·x + shift (mod n)`.
    pub fn transform(&self, shift: usize, reflect: bool) -> CyclicVertexSet {
        let n = self.n;
        let members = self.members.iter().map(|&a| {
            let base = if reflect { (n - a) % n } else { a };
            (base + shift) % n
        });
        CyclicVertexSet::new(n, members).expect("image stays in range")
    }

    pub fn rotate(&self, shift: usize) -> CyclicVertexSet {
        self.transform(shift % self.n.max(1), false)
    }

    fn index_of(&self, v: usize) -> Result<usize> {
        self.members
            .binary_search(&v)
            .map_err(|_| invalid(format!("vertex {v} is not a member")))
    }

    /// Least positive residue of `j − i` modulo `m`, where `u = a_i`, `v = a_j`.
    pub fn span(&self, u: usize, v: usize) -> Result<usize> {
        if u == v {
            return Err(invalid("span requires distinct members"));
        }
        let i = self.index_of(u)?;
        let j = self.index_of(v)?;
        let m = self.m();
        Ok((j + m - i) % m)
    }

    fn check_k(&self, k: usize) -> Result<()> {
        let m = self.m();
        if m < 2 || k == 0 || k >= m {
            return Err(invalid(format!("k = {k} outside 1..{m}")));
        }
        Ok(())
    }

    /// `σ*_k`: clockwise distances `d*(a_i, a_{i+k})` for `i = 0..m−1`.
    pub fn multispectrum_clockwise(&self, k: usize) -> Result<Multiset> {
        self.check_k(k)?;
        Ok(self.spectrum_with(k, clockwise_distance))
    }

    /// `σ_k`: geodesic distances `d(a_i, a_{i+k})` for `i = 0..m−1`.
    ///
    /// For even `m` and `k = m/2` every unordered pair appears twice.
    pub fn multispectrum_geodesic(&self, k: usize) -> Result<Multiset> {
        self.check_k(k)?;
        Ok(self.spectrum_with(k, geodesic_distance_cycle))
    }

    fn spectrum_with(&self, k: usize, dist: fn(usize, usize, usize) -> usize) -> Multiset {
        Multiset::new(
            (0..self.m()).map(|i| dist(self.n, self.member(i), self.member(i + k)) as i64),
        )
    }
}
