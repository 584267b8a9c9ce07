mod common;

use common::{all_subsets, convex_family, cycle, path};
use vertex_energy::characterize::{
    complement_energy_identity, cycle_wiener_max_full, cycle_wiener_max_spectral, default_kernel_family,
    equitable_arc_partitions, is_balanced, is_weakly_balanced, path_wiener_maximizers, verify_ddr_equivalence,
    wiener_path_formula,
};
use vertex_energy::energy::wiener;
use vertex_energy::graph::{build_hypercube, build_mobius_ladder, build_path, build_petersen, build_star, cartesian_product};
use vertex_energy::maxeven::{enumerate_maximally_even, is_maximally_even_definitional};
use vertex_energy::search::{brute_force_extremal, is_local_maximizer, EnumConfig, ObjectiveKind, ObjectiveSpec};
use vertex_energy::set::Combinations;
use vertex_energy::{CyclicVertexSet, Graph, VertexSet};

fn wiener_maximizers(g: &Graph, m: usize) -> Vec<VertexSet> {
    brute_force_extremal(g, &ObjectiveSpec::maximize(ObjectiveKind::Wiener), m, &EnumConfig::default())
        .unwrap()
        .witnesses
}

fn local_wiener_maximizers(g: &Graph, m: usize) -> Vec<VertexSet> {
    Combinations::new(g.n(), m)
        .map(VertexSet::new)
        .filter(|a| is_local_maximizer(g, &ObjectiveKind::Wiener, a).unwrap())
        .collect()
}

#[test]
fn path_formula_matches_pairwise_sum() {
    for n in 1..=10 {
        let g = path(n);
        for members in all_subsets(n) {
            let a = VertexSet::new(members.clone());
            assert_eq!(wiener_path_formula(&members).unwrap(), wiener(g.distances(), &a));
        }
    }
}

#[test]
fn path_maximizers_three_ways() {
    for n in 2..=12 {
        let g = path(n);
        for m in 2..=n {
            let brute = wiener_maximizers(&g, m);
            assert_eq!(brute, path_wiener_maximizers(n, m).unwrap(), "n={n} m={m}");
            assert_eq!(brute, local_wiener_maximizers(&g, m), "n={n} m={m}");
        }
    }
}

#[test]
fn cycle_maximizers_four_ways() {
    for n in 2..=12 {
        let g = if n == 2 { build_path(2).unwrap() } else { cycle(n) };
        for m in 2..=n {
            let brute = wiener_maximizers(&g, m);
            let mut spectral = Vec::new();
            let mut full = Vec::new();
            let mut weak = Vec::new();
            for members in Combinations::new(n, m) {
                let a = CyclicVertexSet::new(n, members).unwrap();
                if cycle_wiener_max_spectral(&a).unwrap() {
                    spectral.push(a.to_vertex_set());
                }
                if cycle_wiener_max_full(&a).unwrap() {
                    full.push(a.to_vertex_set());
                }
                if is_weakly_balanced(&a) {
                    weak.push(a.to_vertex_set());
                }
            }
            assert_eq!(brute, spectral, "n={n} m={m}");
            assert_eq!(brute, full, "n={n} m={m}");
            assert_eq!(brute, weak, "n={n} m={m}");
            assert_eq!(brute, local_wiener_maximizers(&g, m), "n={n} m={m}");
        }
    }
}

#[test]
fn balance_characterization() {
    for n in 3..=12 {
        let g = cycle(n);
        for m in 2..=n {
            let brute = wiener_maximizers(&g, m);
            let balanced: Vec<VertexSet> = Combinations::new(n, m)
                .map(|c| CyclicVertexSet::new(n, c).unwrap())
                .filter(is_balanced)
                .map(|a| a.to_vertex_set())
                .collect();
            if n % 2 == 0 || m % 2 == 1 {
                assert_eq!(brute, balanced, "n={n} m={m}");
            } else {
                assert!(balanced.iter().all(|b| !brute.contains(b)), "n={n} m={m}");
                for w in &brute {
                    assert!(!is_balanced(&CyclicVertexSet::from_set(n, w).unwrap()));
                }
            }
        }
    }
}

#[test]
fn maximally_even_sets_maximize_wiener_but_not_conversely() {
    for n in 3..=12 {
        let g = cycle(n);
        for m in 2..=n {
            let brute = wiener_maximizers(&g, m);
            for a in enumerate_maximally_even(n, m).unwrap() {
                assert!(brute.contains(&a.to_vertex_set()), "n={n} m={m}");
            }
        }
    }
    for (n, witness) in [(7, vec![0, 1, 4]), (8, vec![0, 1, 4])] {
        let a = CyclicVertexSet::new(n, witness).unwrap();
        assert!(wiener_maximizers(&cycle(n), 3).contains(&a.to_vertex_set()));
        assert!(!is_maximally_even_definitional(&a));
    }
}

#[test]
fn arc_partitions_are_equitable_and_connected() {
    for n in 2..=20 {
        let parts = equitable_arc_partitions(n).unwrap();
        assert_eq!(parts.len(), if n % 2 == 0 { n / 2 } else { n });
        let g = if n == 2 { build_path(2).unwrap() } else { cycle(n) };
        for p in &parts {
            assert_eq!(p.short.len(), n / 2);
            assert_eq!(p.long.len(), n - n / 2);
            assert!(p.short.is_disjoint(&p.long));
            for block in [&p.short, &p.long] {
                // A block of k cycle vertices is an arc iff it spans k − 1 edges.
                let inner = g.edges().iter().filter(|&&(u, v)| block.contains(u) && block.contains(v)).count();
                assert_eq!(inner + 1, block.len().max(1), "n={n}");
            }
        }
        let distinct: std::collections::BTreeSet<_> = parts
            .iter()
            .map(|p| std::cmp::min(p.short.clone(), p.long.clone()))
            .collect();
        assert_eq!(distinct.len(), parts.len());
    }
}

fn ddr_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = (3..=10).map(|n| (format!("C{n}"), cycle(n))).collect();
    out.push(("M6".into(), build_mobius_ladder(3).unwrap()));
    out.push(("M8".into(), build_mobius_ladder(4).unwrap()));
    out.push(("M10".into(), build_mobius_ladder(5).unwrap()));
    out.push(("Q3".into(), build_hypercube(3).unwrap()));
    out.push(("Petersen".into(), build_petersen()));
    out.push(("P2xC5".into(), cartesian_product(&path(2), &cycle(5))));
    out
}

#[test]
fn complement_equation_on_regular_graphs() {
    for (name, g) in ddr_corpus() {
        assert!(g.is_distance_degree_regular(), "{name}");
        let mut kernels = convex_family(g.diameter(), 5, 99);
        kernels.extend(default_kernel_family(g.diameter()).unwrap());
        for members in all_subsets(g.n()).filter(|m| !m.is_empty()) {
            let a = VertexSet::new(members);
            for k in &kernels {
                let c = complement_energy_identity(&g, &a, k).unwrap();
                assert!(c.holds, "{name} {a} {}", k.name());
            }
        }
    }
}

#[test]
fn ddr_equivalence_on_mixed_corpus() {
    let mut graphs = ddr_corpus();
    for n in 2..=7 {
        graphs.push((format!("P{n}"), path(n)));
    }
    for leaves in 2..=5 {
        graphs.push((format!("K1,{leaves}"), build_star(leaves).unwrap()));
    }
    graphs.push(("P3xP3".into(), cartesian_product(&path(3), &path(3))));
    for (name, g) in graphs {
        let report = verify_ddr_equivalence(&g, &default_kernel_family(g.diameter()).unwrap()).unwrap();
        assert!(report.consistent(), "{name}: {report:?}");
        assert_eq!(report.is_ddr, report.complement_failure.is_none(), "{name}");
    }
}
