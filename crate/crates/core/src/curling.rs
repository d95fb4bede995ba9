//! Curling number and compound curling number of a degree sequence.

use serde::Serialize;

use crate::graph::{DegreeSequence, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CurlingResult {
    /// Largest multiplicity among the distinct degrees.
    pub cn: usize,
    /// Product of the multiplicities of the distinct degrees.
    pub cn_compound: u128,
    pub runs: DegreeSequence,
}

pub fn curling_number(g: &Graph) -> CurlingResult {
    let runs = g.degree_sequence();
    let cn = runs.runs.iter().map(|r| r.count).max().unwrap_or(0);
    let cn_compound = runs.runs.iter().map(|r| r.count as u128).product();
    CurlingResult {
        cn,
        cn_compound,
        runs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c7 = Graph::new(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        let r = curling_number(&c7);
        assert_eq!((r.cn, r.cn_compound), (7, 7));

        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = curling_number(&p4);
        assert_eq!((r.cn, r.cn_compound), (2, 4));

        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = curling_number(&star);
        assert_eq!((r.cn, r.cn_compound), (3, 3));

        let k1 = Graph::new(1, []).unwrap();
        let r = curling_number(&k1);
        assert_eq!((r.cn, r.cn_compound), (1, 1));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..12).prop_flat_map(|n| {
                proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
                    Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn bounds(g in arb_graph()) {
                let r = curling_number(&g);
                let n = g.vertex_count();
                let l = r.runs.distinct_count() as u32;
                prop_assert!(r.cn <= n);
                prop_assert!(r.cn_compound <= (r.cn as u128).pow(l));
                prop_assert_eq!(r.cn == n, g.is_regular());
            }

            #[test]
            fn relabel_invariant(g in arb_graph()) {
                let n = g.vertex_count();
                let perm: Vec<usize> = (0..n).rev().collect();
                prop_assert_eq!(curling_number(&g.relabel(&perm)), curling_number(&g));
            }
        }
    }
}
