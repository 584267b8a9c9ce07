#![allow(dead_code)]

use proptest::prelude::*;
use vertex_energy::graph::{
    build_cycle, build_hypercube, build_mobius_ladder, build_path, build_petersen, build_star, cartesian_product,
};
use vertex_energy::Graph;

pub fn cycle(n: usize) -> Graph {
    build_cycle(n).unwrap()
}

pub fn path(n: usize) -> Graph {
    build_path(n).unwrap()
}

pub fn cylinder() -> Graph {
    cartesian_product(&path(2), &cycle(5))
}

pub fn cube() -> Graph {
    cartesian_product(&path(2), &cycle(4))
}

/// Small named graphs used across the suites, all with at most 12 vertices.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push((format!("C{n}"), cycle(n)));
    }
    for n in 1..=10 {
        out.push((format!("P{n}"), path(n)));
    }
    for d in 1..=3 {
        out.push((format!("Q{d}"), build_hypercube(d).unwrap()));
    }
    for k in 3..=6 {
        out.push((format!("M{}", 2 * k), build_mobius_ladder(k).unwrap()));
    }
    for leaves in 1..=5 {
        out.push((format!("K1,{leaves}"), build_star(leaves).unwrap()));
    }
    out.push(("Petersen".into(), build_petersen()));
    out.push(("P2xC5".into(), cylinder()));
    out.push(("P2xC4".into(), cube()));
    out.push(("P3xP3".into(), cartesian_product(&path(3), &path(3))));
    out
}

pub fn small_corpus(max_n: usize) -> Vec<(String, Graph)> {
    corpus().into_iter().filter(|(_, g)| g.n() <= max_n).collect()
}

/// Every subset of `0..n` as a sorted member list.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

/// Random connected graph: a random tree plus extra edges.
pub fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
            let extra = prop::collection::vec((0..n, 0..n), 0..=n * 2);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            for (u, v) in extra {
                let e = (u.min(v), u.max(v));
                if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
                    edges.push(e);
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
}

/// All-pairs distances by Floyd-Warshall over the edge list, independent of
/// the library's breadth-first matrix.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Convex kernels on `1..=d`: the linear ones, `r²`, `1/r`, hinges at every
/// threshold, and `random` seeded tables with increasing slopes.
///
/// On integer data the hinges `(r − t)⁺`, `(t − r)⁺` together with `±r`
/// decide the three majorization orders exactly.
pub fn convex_family(d: usize, random: usize, seed: u64) -> Vec<vertex_energy::Kernel> {
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use vertex_energy::energy::integer;
    use vertex_energy::{Kernel, Rational};

    let d = d.max(1);
    let table = |name: String, f: &dyn Fn(i64) -> Rational| Kernel::new(name, (1..=d as i64).map(f).collect()).unwrap();
    let mut out = vec![
        Kernel::identity(d).unwrap(),
        table("negated-identity".into(), &|r| integer(-r)),
        Kernel::square(d).unwrap(),
        Kernel::reciprocal(d).unwrap(),
    ];
    for t in 0..=d as i64 {
        out.push(table(format!("hinge-above-{t}"), &|r| integer((r - t).max(0))));
        out.push(table(format!("hinge-below-{t}"), &|r| integer((t - r).max(0))));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random {
        let mut slopes: Vec<Rational> = (1..d)
            .map(|_| Rational::new(BigInt::from(rng.gen_range(-30..=30)), BigInt::from(rng.gen_range(1..=6))))
            .collect();
        slopes.sort();
        let mut value = Rational::new(BigInt::from(rng.gen_range(-10..=10)), BigInt::from(rng.gen_range(1..=4)));
        let mut values = vec![value.clone()];
        for s in slopes {
            value += s;
            values.push(value.clone());
        }
        out.push(Kernel::new(format!("random-convex-{i}"), values).unwrap());
    }
    for k in &out {
        assert!(k.is_convex(), "{} is not convex", k.name());
    }
    out
}

/// Checks the three convex-kernel characterizations of majorization on
/// every pair of equal-size subsets of `g`. Returns the number of pairs.
pub fn check_majorization_energy_order(g: &Graph, kernels: &[vertex_energy::Kernel]) -> usize {
    use vertex_energy::energy::distance_multiset;
    use vertex_energy::majorization::{majorizes, weakly_submajorizes, weakly_supermajorizes};
    use vertex_energy::{Rational, VertexSet};

    let dm = g.distances();
    let n = g.n();
    let mut by_size: Vec<Vec<(Vec<i64>, Vec<Rational>)>> = vec![Vec::new(); n + 1];
    for members in all_subsets(n) {
        let a = VertexSet::new(members);
        let d = distance_multiset(dm, &a);
        let energies = kernels.iter().map(|k| k.weigh(&vertex_energy::energy::distance_histogram(dm, a.as_slice()))).collect();
        by_size[a.len()].push((d.values().to_vec(), energies));
    }
    let increasing: Vec<bool> = kernels.iter().map(|k| k.is_increasing()).collect();
    let decreasing: Vec<bool> = kernels.iter().map(|k| k.is_decreasing()).collect();
    let mut pairs = 0;
    for group in &by_size {
        for (da, ea) in group {
            for (db, eb) in group {
                pairs += 1;
                let le: Vec<bool> = ea.iter().zip(eb).map(|(x, y)| x <= y).collect();
                let all = le.iter().all(|&b| b);
                let inc = le.iter().zip(&increasing).all(|(&b, &i)| b || !i);
                let dec = le.iter().zip(&decreasing).all(|(&b, &i)| b || !i);
                assert_eq!(majorizes(da, db).unwrap(), all, "{da:?} vs {db:?}");
                assert_eq!(weakly_submajorizes(da, db).unwrap(), inc, "{da:?} vs {db:?}");
                assert_eq!(weakly_supermajorizes(da, db).unwrap(), dec, "{da:?} vs {db:?}");
            }
        }
    }
    pairs
}
