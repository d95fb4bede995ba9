//! Colouring properties checked by exhaustive search on small graphs.

use chromatic_curling::chroma::{chi_minus, chi_plus, chromatic_number};
use chromatic_curling::families::{generate, Family, FamilySpec};
use chromatic_curling::graph::Graph;
use chromatic_curling::oracle::{oracle_chromatic, DEFAULT_VERTEX_BUDGET};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn member(f: Family, n: usize) -> Graph {
    generate(FamilySpec::new(f, n).unwrap()).unwrap()
}

fn induced_without(g: &Graph, removed: u32) -> Option<Graph> {
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|v| removed >> v & 1 == 0).collect();
    if keep.is_empty() {
        return None;
    }
    let pos = |v: usize| keep.iter().position(|&k| k == v);
    let edges = g
        .edges()
        .iter()
        .filter_map(|&(a, b)| Some((pos(a)?, pos(b)?)));
    Some(Graph::new(keep.len(), edges).unwrap())
}

/// Largest independent set whose removal leaves a (chi - 1)-colourable graph.
fn best_first_class(g: &Graph, chi: usize) -> usize {
    let n = g.vertex_count();
    (1u32..1 << n)
        .filter(|&s| g.edges().iter().all(|&(a, b)| s >> a & 1 == 0 || s >> b & 1 == 0))
        .filter(|&s| match induced_without(g, s) {
            None => true,
            Some(rest) => chromatic_number(&rest).unwrap() < chi,
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9, 0.0f64..0.9, any::<u64>()).prop_map(|(n, density, seed)| {
        Graph::random_connected(n, density, &mut ChaCha8Rng::seed_from_u64(seed))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn first_class_is_the_largest_removable_independent_set(g in arb_graph()) {
        let r = chi_minus(&g).unwrap();
        prop_assert_eq!(r.theta.as_slice()[0], best_first_class(&g, r.chi));
    }

    #[test]
    fn matches_oracle(g in arb_graph()) {
        let r = chi_minus(&g).unwrap();
        let o = oracle_chromatic(&g, DEFAULT_VERTEX_BUDGET).unwrap();
        prop_assert_eq!(r.chi, o.chi);
        prop_assert_eq!(r.theta, o.lex_max_theta);
    }

    #[test]
    fn curling_bounds(g in arb_graph()) {
        let r = chi_minus(&g).unwrap();
        let n = g.vertex_count();
        prop_assert!(r.cn_chi >= n.div_ceil(r.chi));
        prop_assert!(r.cn_chi <= n - r.chi + 1);
        let p = chi_plus(&r);
        prop_assert_eq!((p.cn_chi, p.cnc_chi), (r.cn_chi, r.cnc_chi));
    }

    #[test]
    fn relabelling_keeps_theta(g in arb_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(chi_minus(&g).unwrap().theta, chi_minus(&g.relabel(&perm)).unwrap().theta);
    }
}

#[test]
fn wheel_equals_its_rim() {
    for n in 3..=10 {
        let w = chi_minus(&member(Family::Wheel, n)).unwrap();
        let c = chi_minus(&member(Family::Cycle, n)).unwrap();
        assert_eq!((w.cn_chi, w.cnc_chi), (c.cn_chi, c.cnc_chi), "n={n}");
    }
}

#[test]
fn double_wheel_doubles_rim_classes() {
    for n in 3..=8 {
        let dw = chi_minus(&member(Family::DoubleWheel, n)).unwrap();
        let c = chi_minus(&member(Family::Cycle, n)).unwrap();
        let mut expected: Vec<usize> = c.theta.as_slice().iter().map(|t| 2 * t).collect();
        expected.push(1);
        expected.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(dw.theta.as_slice(), expected.as_slice(), "n={n}");
        if dw.theta.total() <= DEFAULT_VERTEX_BUDGET {
            let o = oracle_chromatic(&member(Family::DoubleWheel, n), DEFAULT_VERTEX_BUDGET).unwrap();
            assert_eq!(o.lex_max_theta, dw.theta);
        }
    }
}
