//! J-representations and maximal evenness on `C_n`.

use std::collections::BTreeSet;

use crate::cycle::CyclicVertexSet;
use crate::error::{invalid, Result};
use crate::multiset::Multiset;

/// Parameters `(n, m, r)` of `J^r_{n,m} = {⌊(n·i + r)/m⌋ : 0 <= i < m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JSpec {
    n: usize,
    m: usize,
    r: usize,
}

impl JSpec {
    pub fn new(n: usize, m: usize, r: usize) -> Result<JSpec> {
        if m == 0 || m > n {
            return Err(invalid(format!("need 1 <= m <= n, got m = {m}, n = {n}")));
        }
        if r >= n {
            return Err(invalid(format!("need 0 <= r <= n - 1, got r = {r}, n = {n}")));
        }
        Ok(JSpec { n, m, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

pub fn j_representation(spec: JSpec) -> CyclicVertexSet {
    let JSpec { n, m, r } = spec;
    CyclicVertexSet::new(n, (0..m).map(|i| (n * i + r) / m)).expect("J-representation members lie in 0..n")
}

/// Definitional test: every clockwise spectrum `σ*_k`, `1 <= k < m`, has
/// support `{c}` or `{c, c+1}`.
pub fn is_maximally_even_definitional(a: &CyclicVertexSet) -> bool {
    (1..a.m()).all(|k| {
        let s = a.multispectrum_clockwise(k).expect("k in range");
        s.spread() <= 1
    })
}

fn floor_ceil(num: usize, den: usize) -> BTreeSet<i64> {
    let lo = (num / den) as i64;
    let hi = num.div_ceil(den) as i64;
    BTreeSet::from([lo, hi])
}

/// Expected support of `σ_k(J^r_{n,m})` for `1 <= k <= ⌊m/2⌋`.
fn expected_support(n: usize, m: usize, k: usize) -> BTreeSet<i64> {
    if 2 * k == m && n % 2 == 1 {
        BTreeSet::from([(n / 2) as i64])
    } else {
        floor_ceil(n * k, m)
    }
}

fn expected_sum(n: usize, m: usize, k: usize) -> i64 {
    let (n, k) = (n as i64, k as i64);
    if 2 * k == m as i64 && n % 2 == 1 {
        (n - 1) * k
    } else {
        n * k
    }
}

/// Spectral test on geodesic spectra `σ_k`, `1 <= k <= ⌊m/2⌋`: each must
/// equal the spectrum of a J-representation, i.e. take only the values
/// `⌊nk/m⌋, ⌈nk/m⌉` (or `⌊n/2⌋` when `k = m/2`, `n` odd) and have the
/// closed-form sum.
///
/// The sum matters: `{0,1,2}` in `C_5` has `σ_1 = [1,1,2]`, the right
/// support, but is not maximally even.
pub fn is_maximally_even_spectral(a: &CyclicVertexSet) -> bool {
    let (n, m) = (a.n(), a.m());
    (1..=m / 2).all(|k| {
        let s = a.multispectrum_geodesic(k).expect("k in range");
        s.support().is_subset(&expected_support(n, m, k)) && s.sum() == expected_sum(n, m, k)
    })
}

/// The support-only form of the spectral test. Necessary for maximal
/// evenness but not sufficient; see [`is_maximally_even_spectral`].
pub fn spectral_support_condition(a: &CyclicVertexSet) -> bool {
    let (n, m) = (a.n(), a.m());
    (1..=m / 2).all(|k| {
        let s = a.multispectrum_geodesic(k).expect("k in range");
        s.support() == expected_support(n, m, k)
    })
}

/// All distinct `J^r_{n,m}` for `r = 0..n−1`, sorted.
pub fn enumerate_maximally_even(n: usize, m: usize) -> Result<Vec<CyclicVertexSet>> {
    JSpec::new(n, m, 0)?;
    let distinct: BTreeSet<CyclicVertexSet> = (0..n)
        .map(|r| j_representation(JSpec { n, m, r }))
        .collect();
    Ok(distinct.into_iter().collect())
}

/// Parameters of the complement: `C_n \ J^r_{n,m} = J^{n−r−1}_{n,n−m}`
/// for `0 <= r <= m − 1`.
pub fn complement_jrep(spec: JSpec) -> Result<JSpec> {
    let JSpec { n, m, r } = spec;
    if m >= n {
        return Err(invalid("complement needs m < n"));
    }
    if r >= m {
        return Err(invalid(format!("complement identity is stated for r <= m - 1, got r = {r}")));
    }
    JSpec::new(n, n - m, n - r - 1)
}

/// `D(m, S)`: the unique `m`-element integer multiset with sum `S` and spread at most 1.
pub fn consecutive_multiset(m: usize, sum: i64) -> Result<Multiset> {
    if m == 0 {
        return Err(invalid("D(m, S) needs m >= 1"));
    }
    let mi = m as i64;
    let lo = sum.div_euclid(mi);
    let highs = sum - mi * lo;
    Ok(Multiset::new(
        std::iter::repeat(lo)
            .take((mi - highs) as usize)
            .chain(std::iter::repeat(lo + 1).take(highs as usize)),
    ))
}

fn check_k(spec: &JSpec, k: usize) -> Result<()> {
    if k == 0 || k > spec.m / 2 {
        return Err(invalid(format!("need 1 <= k <= ⌊m/2⌋, got k = {k}, m = {}", spec.m)));
    }
    Ok(())
}

/// Closed-form support of `σ_k(J^r_{n,m})`.
pub fn jrep_spectrum_support(spec: JSpec, k: usize) -> Result<BTreeSet<i64>> {
    check_k(&spec, k)?;
    Ok(expected_support(spec.n, spec.m, k))
}

/// Closed-form sum of `σ_k(J^r_{n,m})`: `nk`, or `(n−1)k` when `k = m/2` and `n` is odd.
pub fn jrep_spectrum_sum(spec: JSpec, k: usize) -> Result<i64> {
    check_k(&spec, k)?;
    Ok(expected_sum(spec.n, spec.m, k))
}
