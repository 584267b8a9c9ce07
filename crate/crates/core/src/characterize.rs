//! Closed-form descriptions of Wiener maximizers on paths and cycles, the
//! balance conditions on cycles, and the complement identity on distance
//! degree regular graphs.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::cycle::CyclicVertexSet;
use crate::energy::{distance_histogram, energy, Kernel, Rational};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::search::Direction;
use crate::set::VertexSet;

/// Split of `C_n` into the arc `start, …, start + ⌊n/2⌋ − 1` and the
/// remaining arc.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcPartition {
    pub n: usize,
    pub start: usize,
    /// The shorter arc when `n` is odd.
    pub short: VertexSet,
    pub long: VertexSet,
}

impl ArcPartition {
    pub fn new(n: usize, start: usize) -> Result<ArcPartition> {
        if n < 2 || start >= n {
            return Err(invalid(format!("arc partition needs n >= 2 and start < n, got n = {n}, start = {start}")));
        }
        let short = VertexSet::new((0..n / 2).map(|i| (start + i) % n));
        let long = short.complement(n);
        Ok(ArcPartition { n, start, short, long })
    }
}

/// All equitable partitions of `C_n` into two arcs, without repeats.
pub fn equitable_arc_partitions(n: usize) -> Result<Vec<ArcPartition>> {
    if n < 2 {
        return Err(invalid("equitable arc partitions need n >= 2"));
    }
    // For even n the starts s and s + n/2 give the same unordered split.
    let starts = if n % 2 == 0 { n / 2 } else { n };
    (0..starts).map(|s| ArcPartition::new(n, s)).collect()
}

fn block_counts(a: &CyclicVertexSet) -> Vec<(usize, usize)> {
    let n = a.n();
    if n < 2 {
        return Vec::new();
    }
    equitable_arc_partitions(n)
        .expect("n >= 2")
        .iter()
        .map(|p| {
            let s = a.members().iter().filter(|&&v| p.short.contains(v)).count();
            (s, a.m() - s)
        })
        .collect()
}

/// Every equitable arc partition splits `A` into parts differing by at most one.
pub fn is_balanced(a: &CyclicVertexSet) -> bool {
    block_counts(a).into_iter().all(|(s, l)| s.abs_diff(l) <= 1)
}

/// Parts differ by at most two, and a difference of two is only allowed
/// when the richer block is the strictly larger arc.
pub fn is_weakly_balanced(a: &CyclicVertexSet) -> bool {
    let odd = a.n() % 2 == 1;
    block_counts(a)
        .into_iter()
        .all(|(s, l)| s.abs_diff(l) <= 1 || (l == s + 2 && odd))
}

/// `W(A) = Σ i(m−i)(a_{i+1} − a_i)` for the sorted vertices of a path.
pub fn wiener_path_formula(members: &[usize]) -> Result<u64> {
    if members.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("path vertices must be strictly increasing"));
    }
    let m = members.len() as u64;
    Ok(members
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let i = i as u64 + 1;
            i * (m - i) * (w[1] - w[0]) as u64
        })
        .sum())
}

/// All Wiener maximizers of size `m` on `P_n` with vertices `0..n−1`.
///
/// Even `m`: `{0..m/2−1} ∪ {n−m/2..n−1}`. Odd `m`: the two end blocks of
/// size `(m−1)/2` plus one more vertex `j` anywhere between them.
pub fn path_wiener_maximizers(n: usize, m: usize) -> Result<Vec<VertexSet>> {
    if m < 2 || m > n {
        return Err(invalid(format!("need 2 <= m <= n, got m = {m}, n = {n}")));
    }
    let half = m / 2;
    let ends = (0..half).chain(n - half..n);
    if m % 2 == 0 {
        return Ok(vec![VertexSet::new(ends)]);
    }
    Ok((half..n - half)
        .map(|j| VertexSet::new(ends.clone().chain([j])))
        .collect())
}

fn check_size(a: &CyclicVertexSet) -> Result<()> {
    if a.m() < 2 {
        return Err(invalid(format!("need at least 2 vertices, got {}", a.m())));
    }
    Ok(())
}

/// Clockwise spectrum test: for odd `m`, `σ*_{⌊m/2⌋}` stays within
/// `1..=⌊n/2⌋`; for even `m`, `σ*_{m/2}` takes only `⌊n/2⌋` and `⌈n/2⌉`.
pub fn cycle_wiener_max_spectral(a: &CyclicVertexSet) -> Result<bool> {
    check_size(a)?;
    let (n, m) = (a.n() as i64, a.m());
    let spec = a.multispectrum_clockwise(m / 2)?;
    Ok(if m % 2 == 1 {
        spec.iter().all(|x| (1..=n / 2).contains(&x))
    } else {
        spec.iter().all(|x| x == n / 2 || x == (n + 1) / 2)
    })
}

/// Geodesic test: `σ_k = σ*_k` for `1 <= k < m/2`, and for even `m` the
/// spectrum `σ_{m/2}` is concentrated on `⌊n/2⌋`.
pub fn cycle_wiener_max_full(a: &CyclicVertexSet) -> Result<bool> {
    check_size(a)?;
    let (n, m) = (a.n() as i64, a.m());
    for k in (1..m).take_while(|&k| 2 * k < m) {
        if a.multispectrum_geodesic(k)? != a.multispectrum_clockwise(k)? {
            return Ok(false);
        }
    }
    if m % 2 == 0 {
        let s = a.multispectrum_geodesic(m / 2)?;
        return Ok(s.support() == BTreeSet::from([n / 2]));
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    /// `E(A) − E(V \ A)`.
    pub lhs: Rational,
    /// `(2|A|/|V| − 1) · E(V)`.
    pub rhs: Rational,
    pub holds: bool,
}

pub fn complement_energy_identity(g: &Graph, a: &VertexSet, kernel: &Kernel) -> Result<IdentityCheck> {
    if a.is_empty() {
        return Err(invalid("complement identity needs a non-empty set"));
    }
    if let Some(v) = a.largest().filter(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let dm = g.distances();
    let n = g.n();
    let lhs = energy(dm, a, kernel)? - energy(dm, &a.complement(n), kernel)?;
    let coeff = Rational::new(BigInt::from(2 * a.len() as i64 - n as i64), BigInt::from(n as i64));
    let rhs = coeff * energy(dm, &g.vertex_set(), kernel)?;
    let holds = lhs == rhs;
    Ok(IdentityCheck { lhs, rhs, holds })
}

/// Identity, reciprocal, and the indicator of each distance up to the diameter.
pub fn default_kernel_family(diameter: usize) -> Result<Vec<Kernel>> {
    let d = diameter.max(1);
    let mut family = vec![Kernel::identity(d)?, Kernel::reciprocal(d)?];
    for i in 1..=d {
        family.push(Kernel::indicator(d, i)?);
    }
    Ok(family)
}

/// Largest graph [`verify_ddr_equivalence`] will enumerate.
pub const MAX_DDR_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OptimumKind {
    Global,
    Local,
}

/// An optimizer whose complement is not an optimizer of the same kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementFailure {
    pub kernel: String,
    pub direction: Direction,
    pub kind: OptimumKind,
    pub set: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DdrReport {
    pub is_ddr: bool,
    /// The complement identity holds for every non-empty subset and kernel.
    pub identity_holds: bool,
    pub identity_counterexample: Option<(VertexSet, String)>,
    /// Complements of global and local optimizers are optimizers of the same kind.
    pub complements_preserved: bool,
    pub complement_failure: Option<ComplementFailure>,
    /// Distance histograms of the vertex-deleted sets all agree. This stands
    /// in for a kernel with rationally independent values.
    pub deleted_histograms_constant: bool,
    pub subsets_checked: u64,
}

impl DdrReport {
    /// All checked conditions agree with the graph being distance degree regular.
    pub fn consistent(&self) -> bool {
        self.is_ddr == self.identity_holds
            && self.is_ddr == self.complements_preserved
            && self.is_ddr == self.deleted_histograms_constant
    }
}

fn members_of(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Exhaustively checks, over the given kernels, that distance degree
/// regularity, the complement identity, and complement-closure of
/// (local) optimizers agree.
pub fn verify_ddr_equivalence(g: &Graph, kernels: &[Kernel]) -> Result<DdrReport> {
    let n = g.n();
    if n > MAX_DDR_VERTICES {
        return Err(invalid(format!("exhaustive check limited to {MAX_DDR_VERTICES} vertices, graph has {n}")));
    }
    let dm = g.distances();
    for k in kernels {
        if k.max_distance() < dm.diameter() {
            return Err(Error::KernelTooShort { needed: dm.diameter(), have: k.max_distance() });
        }
    }
    let full: u32 = (1u32 << n) - 1;
    let total = 1usize << n;
    let histograms: Vec<Vec<u64>> = (0..total as u32)
        .map(|mask| distance_histogram(dm, &members_of(mask, n)))
        .collect();
    let sizes: Vec<usize> = (0..total as u32).map(|m| m.count_ones() as usize).collect();
    let flips: Vec<u32> = g.edges().iter().map(|&(u, v)| 1 << u | 1 << v).collect();

    let mut identity_counterexample = None;
    let mut complement_failure = None;
    for kernel in kernels {
        let values: Vec<Rational> = histograms.iter().map(|h| kernel.weigh(h)).collect();
        let whole = &values[full as usize];
        if identity_counterexample.is_none() {
            for mask in 1..=full {
                let coeff = Rational::new(
                    BigInt::from(2 * sizes[mask as usize] as i64 - n as i64),
                    BigInt::from(n as i64),
                );
                if &values[mask as usize] - &values[(full ^ mask) as usize] != coeff * whole {
                    identity_counterexample = Some((VertexSet::new(members_of(mask, n)), kernel.name().to_string()));
                    break;
                }
            }
        }
        if complement_failure.is_some() {
            continue;
        }
        // Best value per size, per direction.
        let mut lo = vec![None::<&Rational>; n + 1];
        let mut hi = vec![None::<&Rational>; n + 1];
        for (mask, v) in values.iter().enumerate() {
            let s = sizes[mask];
            if lo[s].is_none_or(|b| v < b) {
                lo[s] = Some(v);
            }
            if hi[s].is_none_or(|b| v > b) {
                hi[s] = Some(v);
            }
        }
        let is_global = |mask: u32, dir: Direction| {
            let s = sizes[mask as usize];
            let best = match dir {
                Direction::Minimize => lo[s],
                Direction::Maximize => hi[s],
            };
            Some(&values[mask as usize]) == best
        };
        // A perturbation flips one member and one adjacent non-member.
        let is_local = |mask: u32, dir: Direction| {
            let here = &values[mask as usize];
            flips.iter().filter(|&&f| (mask & f).count_ones() == 1).all(|&f| {
                let other = &values[(mask ^ f) as usize];
                !dir.improves(other, here)
            })
        };
        'search: for dir in [Direction::Minimize, Direction::Maximize] {
            for mask in 0..=full {
                let comp = full ^ mask;
                for (kind, holds) in [
                    (OptimumKind::Global, is_global(mask, dir) && !is_global(comp, dir)),
                    (OptimumKind::Local, is_local(mask, dir) && !is_local(comp, dir)),
                ] {
                    if holds {
                        complement_failure = Some(ComplementFailure {
                            kernel: kernel.name().to_string(),
                            direction: dir,
                            kind,
                            set: VertexSet::new(members_of(mask, n)),
                        });
                        break 'search;
                    }
                }
            }
        }
    }

    let deleted: BTreeSet<&Vec<u64>> = (0..n).map(|v| &histograms[(full ^ (1 << v)) as usize]).collect();
    Ok(DdrReport {
        is_ddr: g.is_distance_degree_regular(),
        identity_holds: identity_counterexample.is_none(),
        identity_counterexample,
        complements_preserved: complement_failure.is_none(),
        complement_failure,
        deleted_histograms_constant: deleted.len() <= 1,
        subsets_checked: total as u64,
    })
}
