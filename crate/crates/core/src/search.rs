//! Extremal vertex sets: exhaustive enumeration, perturbations, and the
//! first-improvement local searches.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::cycle::CyclicVertexSet;
use crate::energy::{distance_histogram, product_of_histogram, Kernel, Rational};
use crate::error::{invalid, Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::set::{binomial, Combinations, VertexSet};

/// Default ceiling on `C(n, m)` for exhaustive enumeration.
pub const DEFAULT_ENUM_CAP: u128 = 100_000_000;
/// Exhaustive enumeration refuses graphs with more vertices than this.
pub const MAX_BRUTE_FORCE_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjectiveKind {
    Energy(Kernel),
    Wiener,
    Harary,
    DistanceProduct,
}

impl ObjectiveKind {
    pub fn name(&self) -> String {
        match self {
            ObjectiveKind::Energy(k) => format!("energy:{}", k.name()),
            ObjectiveKind::Wiener => "wiener".into(),
            ObjectiveKind::Harary => "harary".into(),
            ObjectiveKind::DistanceProduct => "product".into(),
        }
    }

    /// Precomputes what evaluation needs for one distance matrix.
    pub fn bind<'a>(&self, dm: &'a DistanceMatrix) -> Result<BoundObjective<'a>> {
        let eval = match self {
            ObjectiveKind::Energy(k) => {
                k.covers(dm.diameter())?;
                Evaluator::Table(k.clone())
            }
            ObjectiveKind::Wiener => Evaluator::Linear,
            ObjectiveKind::Harary => Evaluator::Table(Kernel::reciprocal(dm.diameter().max(1))?),
            ObjectiveKind::DistanceProduct => Evaluator::Product,
        };
        Ok(BoundObjective { dm, eval })
    }

    pub fn evaluate(&self, dm: &DistanceMatrix, a: &VertexSet) -> Result<Rational> {
        Ok(self.bind(dm)?.eval(a.as_slice()))
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone)]
enum Evaluator {
    Table(Kernel),
    Linear,
    Product,
}

/// An objective tied to one graph's distances.
#[derive(Debug, Clone)]
pub struct BoundObjective<'a> {
    dm: &'a DistanceMatrix,
    eval: Evaluator,
}

impl BoundObjective<'_> {
    pub fn eval(&self, members: &[usize]) -> Rational {
        let counts = distance_histogram(self.dm, members);
        match &self.eval {
            Evaluator::Table(k) => k.weigh(&counts),
            Evaluator::Linear => {
                let w: u64 = counts.iter().enumerate().map(|(d, &c)| d as u64 * c).sum();
                Rational::from_integer(BigInt::from(w))
            }
            Evaluator::Product => Rational::from_integer(BigInt::from(product_of_histogram(&counts))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Minimize,
    Maximize,
}

impl Direction {
    /// Whether `candidate` is strictly better than `incumbent`.
    pub fn improves(self, candidate: &Rational, incumbent: &Rational) -> bool {
        match self {
            Direction::Minimize => candidate < incumbent,
            Direction::Maximize => candidate > incumbent,
        }
    }

    fn cmp_better(self, a: &Rational, b: &Rational) -> Ordering {
        match self {
            Direction::Minimize => b.cmp(a),
            Direction::Maximize => a.cmp(b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::Minimize => "min",
            Direction::Maximize => "max",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectiveSpec {
    pub kind: ObjectiveKind,
    pub direction: Direction,
}

impl ObjectiveSpec {
    pub fn new(kind: ObjectiveKind, direction: Direction) -> Self {
        ObjectiveSpec { kind, direction }
    }

    pub fn minimize(kind: ObjectiveKind) -> Self {
        Self::new(kind, Direction::Minimize)
    }

    pub fn maximize(kind: ObjectiveKind) -> Self {
        Self::new(kind, Direction::Maximize)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub m: usize,
    pub optimum: Rational,
    /// Every optimal set, sorted lexicographically.
    pub witnesses: Vec<VertexSet>,
    /// Canonical rotation/reflection representatives, filled for cycles only.
    pub classes: Option<Vec<VertexSet>>,
    /// Number of subsets evaluated.
    pub evaluated: u128,
}

impl ExtremalReport {
    /// Groups witnesses into classes under the dihedral symmetry of `C_n`.
    pub fn attach_cycle_classes(&mut self, n: usize) -> Result<()> {
        let mut classes = self
            .witnesses
            .iter()
            .map(|w| CyclicVertexSet::from_set(n, w).map(|c| canonical_cycle_class(&c).to_vertex_set()))
            .collect::<Result<Vec<_>>>()?;
        classes.sort();
        classes.dedup();
        self.classes = Some(classes);
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub cap: u128,
    pub max_vertices: usize,
    /// Split the combination space across threads.
    pub parallel: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            cap: DEFAULT_ENUM_CAP,
            max_vertices: MAX_BRUTE_FORCE_VERTICES,
            parallel: true,
        }
    }
}

/// `pert_G(A)`: sets `(A \ {u}) ∪ {v}` with `u ∈ A`, `v ∉ A`, `{u, v} ∈ E(G)`,
/// ordered by `u` then `v` ascending.
pub fn perturbations(g: &Graph, a: &VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for u in a.iter() {
        for &v in g.neighbors(u) {
            if !a.contains(v) {
                out.push(a.swap(u, v));
            }
        }
    }
    out
}

fn check_subset(g: &Graph, a: &VertexSet) -> Result<()> {
    match a.largest() {
        Some(v) if v >= g.n() => Err(Error::VertexOutOfRange { vertex: v, n: g.n() }),
        _ => Ok(()),
    }
}

fn is_local_optimum(g: &Graph, kind: &ObjectiveKind, a: &VertexSet, dir: Direction) -> Result<bool> {
    check_subset(g, a)?;
    let f = kind.bind(g.distances())?;
    let here = f.eval(a.as_slice());
    Ok(perturbations(g, a)
        .iter()
        .all(|b| !dir.improves(&f.eval(b.as_slice()), &here)))
}

/// No perturbation has a strictly smaller value.
pub fn is_local_minimizer(g: &Graph, kind: &ObjectiveKind, a: &VertexSet) -> Result<bool> {
    is_local_optimum(g, kind, a, Direction::Minimize)
}

/// No perturbation has a strictly larger value.
pub fn is_local_maximizer(g: &Graph, kind: &ObjectiveKind, a: &VertexSet) -> Result<bool> {
    is_local_optimum(g, kind, a, Direction::Maximize)
}

pub fn is_local_optimizer(g: &Graph, spec: &ObjectiveSpec, a: &VertexSet) -> Result<bool> {
    is_local_optimum(g, &spec.kind, a, spec.direction)
}

struct Partial {
    best: Option<Rational>,
    witnesses: Vec<VertexSet>,
    evaluated: u128,
}

impl Partial {
    fn empty() -> Self {
        Partial {
            best: None,
            witnesses: Vec::new(),
            evaluated: 0,
        }
    }

    fn offer(&mut self, dir: Direction, value: Rational, set: impl FnOnce() -> VertexSet) {
        self.evaluated += 1;
        match &self.best {
            Some(b) => match dir.cmp_better(&value, b) {
                Ordering::Greater => {
                    self.best = Some(value);
                    self.witnesses.clear();
                    self.witnesses.push(set());
                }
                Ordering::Equal => self.witnesses.push(set()),
                Ordering::Less => {}
            },
            None => {
                self.best = Some(value);
                self.witnesses.push(set());
            }
        }
    }

    fn merge(mut self, other: Partial, dir: Direction) -> Partial {
        self.evaluated += other.evaluated;
        match (&self.best, &other.best) {
            (_, None) => self,
            (None, Some(_)) => Partial {
                evaluated: self.evaluated,
                ..other
            },
            (Some(a), Some(b)) => match dir.cmp_better(a, b) {
                Ordering::Greater => self,
                Ordering::Less => Partial {
                    evaluated: self.evaluated,
                    ..other
                },
                Ordering::Equal => {
                    self.witnesses.extend(other.witnesses);
                    self
                }
            },
        }
    }
}

/// Exact optimum over all `m`-subsets together with every optimal set.
///
/// The result does not depend on `config.parallel`: partial results are
/// merged by exact comparison and witnesses are sorted afterwards.
pub fn brute_force_extremal(
    g: &Graph,
    spec: &ObjectiveSpec,
    m: usize,
    config: &EnumConfig,
) -> Result<ExtremalReport> {
    let n = g.n();
    if m > n {
        return Err(invalid(format!("subset size {m} exceeds vertex count {n}")));
    }
    if n > config.max_vertices {
        return Err(invalid(format!(
            "exhaustive search limited to {} vertices, graph has {n}",
            config.max_vertices
        )));
    }
    let count = binomial(n, m);
    if count > config.cap {
        return Err(Error::CapExceeded { count, cap: config.cap });
    }
    let f = spec.kind.bind(g.distances())?;
    let dir = spec.direction;

    // Subsets grouped by their least element; m = 0 is the single empty set.
    let run_block = |first: Option<usize>| -> Partial {
        let mut part = Partial::empty();
        match first {
            None => {
                part.offer(dir, f.eval(&[]), VertexSet::empty);
            }
            Some(first) => {
                let pool: Vec<usize> = (first + 1..n).collect();
                let mut members = Vec::with_capacity(m);
                for rest in Combinations::of(&pool, m - 1) {
                    members.clear();
                    members.push(first);
                    members.extend_from_slice(&rest);
                    let value = f.eval(&members);
                    part.offer(dir, value, || VertexSet::from_sorted(members.clone()));
                }
            }
        }
        part
    };

    let blocks: Vec<Option<usize>> = if m == 0 {
        vec![None]
    } else {
        (0..=n - m).map(Some).collect()
    };
    let merged = if config.parallel {
        blocks
            .into_par_iter()
            .map(run_block)
            .reduce(Partial::empty, |a, b| a.merge(b, dir))
    } else {
        blocks
            .into_iter()
            .map(run_block)
            .fold(Partial::empty(), |a, b| a.merge(b, dir))
    };
    let mut witnesses = merged.witnesses;
    witnesses.sort();
    Ok(ExtremalReport {
        m,
        optimum: merged.best.expect("at least one subset is evaluated"),
        witnesses,
        classes: None,
        evaluated: merged.evaluated,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSearchOutcome {
    pub set: VertexSet,
    pub value: Rational,
    /// Number of improving moves taken.
    pub steps: usize,
}

/// First-improvement search: repeatedly move to the first perturbation (in
/// [`perturbations`] order) that strictly improves the objective.
pub fn local_search(g: &Graph, spec: &ObjectiveSpec, start: &VertexSet) -> Result<LocalSearchOutcome> {
    check_subset(g, start)?;
    let f = spec.kind.bind(g.distances())?;
    let mut current = start.clone();
    let mut value = f.eval(current.as_slice());
    let mut steps = 0;
    'outer: loop {
        for candidate in perturbations(g, &current) {
            let cv = f.eval(candidate.as_slice());
            if spec.direction.improves(&cv, &value) {
                current = candidate;
                value = cv;
                steps += 1;
                continue 'outer;
            }
        }
        return Ok(LocalSearchOutcome {
            set: current,
            value,
            steps,
        });
    }
}

pub fn descending_local_search(g: &Graph, kind: &ObjectiveKind, start: &VertexSet) -> Result<LocalSearchOutcome> {
    local_search(g, &ObjectiveSpec::minimize(kind.clone()), start)
}

pub fn ascending_local_search(g: &Graph, kind: &ObjectiveKind, start: &VertexSet) -> Result<LocalSearchOutcome> {
    local_search(g, &ObjectiveSpec::maximize(kind.clone()), start)
}

/// Lexicographically least member list over all rotations and reflections.
pub fn canonical_cycle_class(a: &CyclicVertexSet) -> CyclicVertexSet {
    let n = a.n();
    (0..n.max(1))
        .flat_map(|s| [a.transform(s, false), a.transform(s, true)])
        .min_by(|x, y| x.members().cmp(y.members()))
        .expect("at least one image")
}
