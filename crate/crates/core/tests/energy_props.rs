mod common;

use common::{all_subsets, cycle, floyd_warshall, small_corpus};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vertex_energy::energy::{
    cross_distance_multiset, distance_multiset, distance_product, energy, harary, integer, parse_kernel, wiener,
};
use vertex_energy::graph::{build_hypercube, build_mobius_ladder, build_petersen};
use vertex_energy::{Graph, Kernel, Multiset, Rational, VertexSet};

fn random_kernel(rng: &mut ChaCha8Rng, max_distance: usize) -> Kernel {
    let values = (0..max_distance)
        .map(|_| Rational::new(BigInt::from(rng.gen_range(-20..=20)), BigInt::from(rng.gen_range(1..=7))))
        .collect();
    Kernel::new("random", values).unwrap()
}

/// Pairwise energy straight from the definition, using Floyd-Warshall distances.
fn energy_oracle(d: &[Vec<usize>], a: &[usize], g: &Kernel) -> Rational {
    let mut total = integer(0);
    for (i, &u) in a.iter().enumerate() {
        for &v in &a[i + 1..] {
            total += g.at(d[u][v]).clone();
        }
    }
    total
}

#[test]
fn energy_is_kernel_summed_over_distance_multiset() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, g) in small_corpus(10) {
        let dm = g.distances();
        let oracle = floyd_warshall(&g);
        let kernel = random_kernel(&mut rng, g.diameter().max(1));
        for members in all_subsets(g.n()) {
            let a = VertexSet::new(members.clone());
            let via_multiset: Rational = distance_multiset(dm, &a).iter().map(|x| kernel.at(x as usize).clone()).sum();
            let e = energy(dm, &a, &kernel).unwrap();
            assert_eq!(e, via_multiset, "{name} {a}");
            assert_eq!(e, energy_oracle(&oracle, &members, &kernel), "{name} {a}");
        }
    }
}

#[test]
fn named_functionals_match_definitions() {
    for (name, g) in small_corpus(9) {
        let d = floyd_warshall(&g);
        for members in all_subsets(g.n()) {
            let a = VertexSet::new(members.clone());
            let mut w = 0u64;
            let mut h = integer(0);
            let mut f = BigUint::from(1u32);
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    w += d[u][v] as u64;
                    h += Rational::new(BigInt::from(1), BigInt::from(d[u][v]));
                    f *= d[u][v];
                }
            }
            assert_eq!(wiener(g.distances(), &a), w, "{name}");
            assert_eq!(harary(g.distances(), &a), h, "{name}");
            assert_eq!(distance_product(g.distances(), &a), f, "{name}");
        }
    }
}

#[test]
fn partition_identity() {
    for (name, g) in small_corpus(8) {
        let dm = g.distances();
        let whole = distance_multiset(dm, &g.vertex_set());
        for members in all_subsets(g.n()) {
            let a = VertexSet::new(members);
            let b = a.complement(g.n());
            let mixed = cross_distance_multiset(dm, &a, &b).unwrap();
            assert_eq!(mixed.len(), a.len() * b.len());
            let union = distance_multiset(dm, &a).union(&distance_multiset(dm, &b)).union(&mixed);
            assert_eq!(union, whole, "{name} {a}");
        }
    }
}

fn regular_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = (3..=12).map(|n| (format!("C{n}"), cycle(n))).collect();
    out.push(("M6".into(), build_mobius_ladder(3).unwrap()));
    out.push(("M8".into(), build_mobius_ladder(4).unwrap()));
    out.push(("Q3".into(), build_hypercube(3).unwrap()));
    out.push(("Petersen".into(), build_petersen()));
    out
}

#[test]
fn sphere_counting() {
    for (name, g) in regular_corpus() {
        let whole = distance_multiset(g.distances(), &g.vertex_set());
        for i in 1..=g.diameter() {
            let l = g.regularity_at_distance(i).expect("distance degree regular");
            assert_eq!(l * g.n(), 2 * whole.multiplicity(i as i64), "{name} i={i}");
        }
    }
}

#[test]
fn mixed_pair_counts_on_regular_distances() {
    // Any graph, restricted to the distances at which it happens to be regular.
    for (name, g) in small_corpus(8) {
        let dm = g.distances();
        for i in 1..=g.diameter() {
            let Some(l) = g.regularity_at_distance(i) else { continue };
            for members in all_subsets(g.n()) {
                let a = VertexSet::new(members);
                let mixed = cross_distance_multiset(dm, &a, &a.complement(g.n())).unwrap();
                let inside = distance_multiset(dm, &a).multiplicity(i as i64);
                assert_eq!(mixed.multiplicity(i as i64), l * a.len() - 2 * inside, "{name} i={i} {a}");
            }
        }
    }
}

#[test]
fn whole_cycle_wiener_matches_pairwise_sum() {
    for n in 3..=30 {
        let g = cycle(n);
        let pairwise: u64 = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| (v - u).min(n - (v - u)) as u64)
            .sum();
        assert_eq!(wiener(g.distances(), &g.vertex_set()), pairwise);
    }
}

#[test]
fn kernel_text_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 1..8 {
        let k = random_kernel(&mut rng, d);
        let back = parse_kernel("random", &k.to_string()).unwrap();
        assert_eq!(back, k);
    }
}

proptest! {
    #[test]
    fn multisets_have_expected_size(n in 3usize..14, mask in any::<u16>()) {
        let g = cycle(n);
        let a = VertexSet::new((0..n).filter(|&v| mask >> v & 1 == 1));
        let m = a.len();
        let d: Multiset = distance_multiset(g.distances(), &a);
        prop_assert_eq!(d.len(), m * m.saturating_sub(1) / 2);
        prop_assert!(d.iter().all(|x| x >= 1 && x as usize <= n / 2));
    }
}
