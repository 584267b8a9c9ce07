//! Simple connected graphs, standard constructors, and geodesic distances.
//!
//! Every [`Graph`] is validated at construction (simple, connected) and carries
//! its all-pairs distance matrix, computed once by breadth-first search.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{invalid, Error, Result};
use crate::set::VertexSet;

/// All-pairs geodesic distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: usize,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

/// Sorted distances from one vertex to every other vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistanceVector(Vec<usize>);

impl DistanceVector {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    distances: DistanceMatrix,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a validated graph on vertices `0..n`.
    ///
    /// Rejects loops, repeated edges (in either orientation), out-of-range
    /// labels and disconnected inputs.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let edges: Vec<_> = seen.into_iter().collect();
        let distances = bfs_all_pairs(n, &adjacency).ok_or(Error::Disconnected)?;
        Ok(Graph {
            n,
            edges,
            adjacency,
            distances,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    pub fn diameter(&self) -> usize {
        self.distances.diameter
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.n {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn distance_vector(&self, u: usize) -> Result<DistanceVector> {
        self.check_vertex(u)?;
        let mut v: Vec<usize> = (0..self.n)
            .filter(|&w| w != u)
            .map(|w| self.distances.get(u, w))
            .collect();
        v.sort_unstable();
        Ok(DistanceVector(v))
    }

    /// Vertices at distance exactly `radius` from `u`.
    pub fn sphere(&self, u: usize, radius: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        if radius > self.diameter() {
            return Err(invalid(format!(
                "radius {radius} exceeds diameter {}",
                self.diameter()
            )));
        }
        Ok(VertexSet::from_sorted(
            (0..self.n)
                .filter(|&w| self.distances.get(u, w) == radius)
                .collect(),
        ))
    }

    /// `|S(u, i)|` for `i = 0..=diameter`.
    pub fn sphere_sizes(&self, u: usize) -> Vec<usize> {
        let mut counts = vec![0; self.diameter() + 1];
        for &d in self.distances.row(u) {
            counts[d as usize] += 1;
        }
        counts
    }

    /// The common `i`-degree when every vertex has the same number of
    /// vertices at distance `i`.
    pub fn regularity_at_distance(&self, i: usize) -> Option<usize> {
        let first = self.sphere_sizes(0).get(i).copied().unwrap_or(0);
        (1..self.n)
            .all(|u| self.sphere_sizes(u).get(i).copied().unwrap_or(0) == first)
            .then_some(first)
    }

    pub fn is_distance_degree_regular(&self) -> bool {
        let first = match self.distance_vector(0) {
            Ok(v) => v,
            Err(_) => return true,
        };
        (1..self.n).all(|u| self.distance_vector(u).map_or(false, |v| v == first))
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable();
        d
    }
}

fn bfs_all_pairs(n: usize, adjacency: &[Vec<usize>]) -> Option<DistanceMatrix> {
    const UNSEEN: u32 = u32::MAX;
    let mut d = vec![UNSEEN; n * n];
    let mut diameter = 0usize;
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in &adjacency[u] {
                if row[v] == UNSEEN {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        for &x in row.iter() {
            if x == UNSEEN {
                return None;
            }
            diameter = diameter.max(x as usize);
        }
    }
    Some(DistanceMatrix { n, d, diameter })
}

/// All-pairs geodesic distances; identical to [`Graph::distances`].
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    g.distances.clone()
}

pub fn build_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

/// The `d`-dimensional hypercube on `2^d` vertices; labels differ in one bit
/// exactly when adjacent.
pub fn build_hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 16 {
        return Err(invalid(format!("hypercube dimension must be in 1..=16, got {d}")));
    }
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::from_edge_list(n, &edges)
}

/// Möbius ladder on `2k` vertices: the cycle `C_2k` plus the `k` chords `{i, i+k}`.
pub fn build_mobius_ladder(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid(format!("Möbius ladder needs k >= 3, got {k}")));
    }
    let n = 2 * k;
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..k).map(|i| (i, i + k)));
    Graph::from_edge_list(n, &edges)
}

/// Petersen graph: outer 5-cycle on 0..=4, inner pentagram on 5..=9
/// (`5+i ~ 5+(i+2 mod 5)`), spokes `i ~ i+5`.
pub fn build_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edge_list(10, &edges).expect("petersen construction is valid")
}

/// Star with one centre (vertex 0) and `leaves` leaves.
pub fn build_star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(invalid("star needs at least one leaf"));
    }
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edge_list(leaves + 1, &edges)
}

/// Cartesian product `G □ H`; vertex `(g, h)` is labelled `g·|H| + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut edges = Vec::with_capacity(g.n() * h.edge_count() + h.n() * g.edge_count());
    for a in 0..g.n() {
        for &(x, y) in h.edges() {
            edges.push((a * nh + x, a * nh + y));
        }
    }
    for b in 0..nh {
        for &(x, y) in g.edges() {
            edges.push((x * nh + b, y * nh + b));
        }
    }
    Graph::from_edge_list(g.n() * nh, &edges).expect("product of connected graphs is connected")
}

/// Parses the edge-list text format: a header line `n m`, then `m` lines `u v`.
///
/// Blank lines and lines starting with `#` are skipped. Errors carry the
/// 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two integers, found {:?}", l),
            });
        }
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("not a non-negative integer: {s:?}"),
            })
        };
        Ok((num(fields[0])?, num(fields[1])?))
    };

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, l) in lines {
        if pairs.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, l)?;
        let err = |message: String| Error::Parse { line, message };
        if u >= n || v >= n {
            return Err(err(format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(err(format!("loop at vertex {u}")));
        }
        if pairs.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
            return Err(err(format!("duplicate edge {{{u}, {v}}}")));
        }
        pairs.push((u, v));
        last_line = line;
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("declared {m} edges, found {}", pairs.len()),
        });
    }
    Graph::from_edge_list(n, &pairs).map_err(|e| match e {
        Error::Disconnected | Error::EmptyGraph => Error::Parse {
            line: hline,
            message: e.to_string(),
        },
        other => other,
    })
}

/// Serializes in the edge-list text format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
