//! Kernels `g` and the pairwise functionals built from them: the energy
//! `E_g`, the Wiener and Harary indices, and the distance product.
//!
//! All values are exact. A set's energy depends only on its distance
//! histogram, so evaluation goes through [`distance_histogram`].

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::graph::DistanceMatrix;
use crate::multiset::Multiset;
use crate::set::VertexSet;

/// Exact rational number.
pub type Rational = num_rational::BigRational;

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Canonical `p/q` rendering (`q > 0`, always with a denominator).
pub fn rational_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// A kernel `g` tabulated on the distances `1..=D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    name: String,
    values: Vec<Rational>,
}

impl Kernel {
    /// `values[i]` is `g(i + 1)`.
    pub fn new(name: impl Into<String>, values: Vec<Rational>) -> Result<Kernel> {
        if values.is_empty() {
            return Err(invalid("kernel table must cover at least distance 1"));
        }
        Ok(Kernel {
            name: name.into(),
            values,
        })
    }

    fn tabulate(name: &str, max_distance: usize, f: impl Fn(i64) -> Rational) -> Result<Kernel> {
        Kernel::new(name, (1..=max_distance as i64).map(f).collect())
    }

    /// `g(r) = r`, the Wiener kernel.
    pub fn identity(max_distance: usize) -> Result<Kernel> {
        Self::tabulate("identity", max_distance, integer)
    }

    /// `g(r) = 1/r`, the Harary kernel.
    pub fn reciprocal(max_distance: usize) -> Result<Kernel> {
        Self::tabulate("reciprocal", max_distance, |r| rational(1, r))
    }

    /// `g(r) = 1/r²`.
    pub fn reciprocal_square(max_distance: usize) -> Result<Kernel> {
        Self::tabulate("reciprocal-square", max_distance, |r| rational(1, r * r))
    }

    /// `g(r) = r²`.
    pub fn square(max_distance: usize) -> Result<Kernel> {
        Self::tabulate("square", max_distance, |r| integer(r * r))
    }

    /// `g(r) = 1` at `r = distance`, zero elsewhere.
    pub fn indicator(max_distance: usize, distance: usize) -> Result<Kernel> {
        Self::tabulate(&format!("indicator-{distance}"), max_distance, |r| {
            integer((r as usize == distance) as i64)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Largest distance covered by the table.
    pub fn max_distance(&self) -> usize {
        self.values.len()
    }

    /// `g(r)` for `1 <= r <= max_distance`.
    pub fn at(&self, r: usize) -> &Rational {
        &self.values[r - 1]
    }

    fn first_differences(&self) -> impl Iterator<Item = Rational> + '_ {
        self.values.windows(2).map(|w| &w[1] - &w[0])
    }

    fn second_differences(&self) -> impl Iterator<Item = Rational> + '_ {
        self.values
            .windows(3)
            .map(|w| &w[2] - &w[1] * integer(2) + &w[0])
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.first_differences().all(|d| d < Rational::zero())
    }

    pub fn is_decreasing(&self) -> bool {
        self.first_differences().all(|d| d <= Rational::zero())
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.first_differences().all(|d| d > Rational::zero())
    }

    pub fn is_increasing(&self) -> bool {
        self.first_differences().all(|d| d >= Rational::zero())
    }

    /// Non-negative second differences on the integer domain.
    pub fn is_convex(&self) -> bool {
        self.second_differences().all(|d| d >= Rational::zero())
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.second_differences().all(|d| d > Rational::zero())
    }

    pub(crate) fn covers(&self, max_distance: usize) -> Result<()> {
        if self.values.len() < max_distance {
            Err(Error::KernelTooShort {
                needed: max_distance,
                have: self.values.len(),
            })
        } else {
            Ok(())
        }
    }

    /// `Σ_r counts[r]·g(r)`; `counts[0]` is ignored.
    pub fn weigh(&self, counts: &[u64]) -> Rational {
        let mut acc = Rational::zero();
        for (r, &c) in counts.iter().enumerate().skip(1) {
            if c != 0 {
                acc += self.at(r) * Rational::from_integer(BigInt::from(c));
            }
        }
        acc
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            writeln!(f, "{} {}", i + 1, rational_string(v))?;
        }
        Ok(())
    }
}

/// Parses a kernel table: lines `i p/q` (or `i p`) for `i = 1..=D`, in order.
pub fn parse_kernel(name: &str, text: &str) -> Result<Kernel> {
    let mut values = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected \"i p/q\", found {l:?}")));
        }
        let i: usize = fields[0]
            .parse()
            .map_err(|_| err(format!("bad distance {:?}", fields[0])))?;
        if i != values.len() + 1 {
            return Err(err(format!("expected distance {}, found {i}", values.len() + 1)));
        }
        let v = Rational::from_str(fields[1])
            .map_err(|_| err(format!("bad rational {:?}", fields[1])))?;
        values.push(v);
    }
    if values.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "empty kernel table".into(),
        });
    }
    Kernel::new(name, values)
}

/// Counts of pairwise distances within `members`, indexed by distance
/// (`0..=diameter`).
pub fn distance_histogram(dm: &DistanceMatrix, members: &[usize]) -> Vec<u64> {
    let mut counts = vec![0u64; dm.diameter() + 1];
    for (i, &u) in members.iter().enumerate() {
        let row = dm.row(u);
        for &v in &members[i + 1..] {
            counts[row[v] as usize] += 1;
        }
    }
    counts
}

fn histogram_to_multiset(counts: &[u64]) -> Multiset {
    Multiset::new(
        counts
            .iter()
            .enumerate()
            .flat_map(|(d, &c)| std::iter::repeat(d as i64).take(c as usize)),
    )
}

/// `D(A)`: distances over all unordered pairs of `A`.
pub fn distance_multiset(dm: &DistanceMatrix, a: &VertexSet) -> Multiset {
    histogram_to_multiset(&distance_histogram(dm, a.as_slice()))
}

/// `D(A, B)`: distances `d(u, v)` with one endpoint in `A` and the other in `B`.
pub fn cross_distance_multiset(dm: &DistanceMatrix, a: &VertexSet, b: &VertexSet) -> Result<Multiset> {
    if !a.is_disjoint(b) {
        return Err(invalid("cross distance multiset needs disjoint sets"));
    }
    Ok(Multiset::new(
        a.iter()
            .flat_map(|u| b.iter().map(move |v| dm.get(u, v) as i64)),
    ))
}

/// `E_g(A) = Σ_{{u,v} ⊆ A} g(d(u, v))`; zero when `|A| <= 1`.
pub fn energy(dm: &DistanceMatrix, a: &VertexSet, g: &Kernel) -> Result<Rational> {
    g.covers(dm.diameter())?;
    Ok(g.weigh(&distance_histogram(dm, a.as_slice())))
}

/// Wiener index of `A`: the total pairwise distance.
pub fn wiener(dm: &DistanceMatrix, a: &VertexSet) -> u64 {
    distance_histogram(dm, a.as_slice())
        .iter()
        .enumerate()
        .map(|(d, &c)| d as u64 * c)
        .sum()
}

/// Harary index of `A`: the total reciprocal pairwise distance.
pub fn harary(dm: &DistanceMatrix, a: &VertexSet) -> Rational {
    let counts = distance_histogram(dm, a.as_slice());
    let mut acc = Rational::zero();
    for (d, &c) in counts.iter().enumerate().skip(1) {
        if c != 0 {
            acc += rational(c as i64, d as i64);
        }
    }
    acc
}

/// `F(A) = Π_{{u,v} ⊆ A} d(u, v)`, the empty product being 1.
pub fn distance_product(dm: &DistanceMatrix, a: &VertexSet) -> BigUint {
    product_of_histogram(&distance_histogram(dm, a.as_slice()))
}

pub(crate) fn product_of_histogram(counts: &[u64]) -> BigUint {
    let mut acc = BigUint::one();
    for (d, &c) in counts.iter().enumerate().skip(1) {
        if c != 0 {
            acc *= BigUint::from(d).pow(c as u32);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_hypercube, build_path, cartesian_product};

    #[test]
    fn canonical_kernels() {
        let r = Kernel::reciprocal(4).unwrap();
        assert_eq!(r.values(), &[rational(1, 1), rational(1, 2), rational(1, 3), rational(1, 4)]);
        assert!(r.is_strictly_convex() && r.is_strictly_decreasing());
        let id = Kernel::identity(4).unwrap();
        assert!(!id.is_strictly_convex() && id.is_convex());
        assert!(id.is_strictly_increasing() && !id.is_decreasing());
        assert!(Kernel::reciprocal(0).is_err());
    }

    #[test]
    fn kernel_text_round_trip() {
        let k = Kernel::reciprocal_square(5).unwrap();
        let parsed = parse_kernel("reciprocal-square", &k.to_string()).unwrap();
        assert_eq!(parsed, k);
        assert_eq!(parse_kernel("x", "1 2\n2 -3/6\n").unwrap().values(), &[integer(2), rational(-1, 2)]);
        assert!(matches!(parse_kernel("x", "1 1\n3 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_kernel("x", "1 1/0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn empty_and_singleton_sets() {
        let c = build_cycle(6).unwrap();
        let dm = c.distances();
        let g = Kernel::reciprocal(3).unwrap();
        for a in [VertexSet::empty(), VertexSet::from([4])] {
            assert!(distance_multiset(dm, &a).is_empty());
            assert_eq!(energy(dm, &a, &g).unwrap(), Rational::zero());
            assert_eq!(distance_product(dm, &a), BigUint::one());
        }
    }

    #[test]
    fn black_keys_values() {
        let c12 = build_cycle(12).unwrap();
        let dm = c12.distances();
        let a = VertexSet::from([0, 2, 4, 7, 9]);
        assert_eq!(distance_multiset(dm, &a), Multiset::from([2, 2, 2, 3, 3, 4, 5, 5, 5, 5]));
        assert_eq!(energy(dm, &a, &Kernel::reciprocal(6).unwrap()).unwrap(), rational(193, 60));
        assert_eq!(harary(dm, &a), rational(193, 60));
        assert_eq!(wiener(dm, &a), 36);
        assert_eq!(distance_product(dm, &a), BigUint::from(180_000u32));
    }

    #[test]
    fn cube_sets() {
        let cube = cartesian_product(&build_path(2).unwrap(), &build_cycle(4).unwrap());
        let dm = cube.distances();
        let c = VertexSet::from([1, 3, 4, 6]);
        let d = VertexSet::from([2, 3, 4, 5]);
        assert_eq!(distance_multiset(dm, &c), Multiset::from([2, 2, 2, 2, 2, 2]));
        assert_eq!(harary(dm, &c), integer(3));
        assert_eq!(harary(dm, &d), rational(11, 3));
        let q3 = build_hypercube(3).unwrap();
        assert_eq!(q3.diameter(), 3);
    }

    #[test]
    fn cylinder_sets() {
        let cyl = cartesian_product(&build_path(2).unwrap(), &build_cycle(5).unwrap());
        let dm = cyl.distances();
        assert_eq!(wiener(dm, &VertexSet::from([2, 4, 5, 6, 8])), 21);
        assert_eq!(wiener(dm, &VertexSet::from([0, 3, 5, 6, 8])), 20);
    }

    #[test]
    fn cross_multisets() {
        let p2 = build_path(2).unwrap();
        let m = cross_distance_multiset(p2.distances(), &VertexSet::from([0]), &VertexSet::from([1])).unwrap();
        assert_eq!(m, Multiset::from([1]));
        let c4 = build_cycle(4).unwrap();
        let m = cross_distance_multiset(c4.distances(), &VertexSet::from([0]), &VertexSet::from([1, 2, 3])).unwrap();
        assert_eq!(m, Multiset::from([1, 1, 2]));
        assert!(cross_distance_multiset(c4.distances(), &VertexSet::from([0]), &VertexSet::from([0])).is_err());
    }

    #[test]
    fn short_kernel_rejected() {
        let c = build_cycle(8).unwrap();
        let err = energy(c.distances(), &VertexSet::from([0, 4]), &Kernel::reciprocal(3).unwrap());
        assert_eq!(err, Err(Error::KernelTooShort { needed: 4, have: 3 }));
    }

    #[test]
    fn product_of_two() {
        let p = build_path(4).unwrap();
        assert_eq!(distance_product(p.distances(), &VertexSet::from([0, 3])), BigUint::from(3u32));
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(rational_string(&rational(10, 4)), "5/2");
        assert_eq!(rational_string(&integer(3)), "3/1");
        assert_eq!(rational_string(&rational(1, -3)), "-1/3");
    }
}
