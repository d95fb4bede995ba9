//! Brute-force ground truth for the colouring engine.
//!
//! Colours vertices strictly in index order and only skips labellings that
//! differ by a permutation of colour names (a vertex may open at most one
//! new colour). There is no vertex ordering heuristic and no bounding, and
//! nothing is shared with [`crate::chroma`] beyond the graph type.

use serde::Serialize;
use thiserror::Error;

use crate::chroma::ClassSizeVector;
use crate::graph::Graph;

pub const DEFAULT_VERTEX_BUDGET: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} vertices, over the oracle budget of {1}")]
    BudgetExceeded(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleResult {
    pub chi: usize,
    /// Lexicographic maximum, over every proper `chi`-colouring, of the
    /// class sizes sorted in non-increasing order.
    pub lex_max_theta: ClassSizeVector,
    /// Proper `chi`-colourings counted up to renaming colours.
    pub count: u64,
}

impl OracleResult {
    pub fn cn_chi(&self) -> usize {
        self.lex_max_theta.largest()
    }

    pub fn cnc_chi(&self) -> u128 {
        self.lex_max_theta.product()
    }
}

pub fn oracle_chromatic(g: &Graph, vertex_budget: usize) -> Result<OracleResult, OracleError> {
    let n = g.vertex_count();
    if n > vertex_budget {
        return Err(OracleError::BudgetExceeded(n, vertex_budget));
    }
    for k in 1..=n {
        let mut walk = Enumeration {
            g,
            k,
            colour: vec![0; n],
            best: None,
            count: 0,
        };
        walk.run(0, 0);
        if let Some(best) = walk.best {
            return Ok(OracleResult {
                chi: k,
                lex_max_theta: ClassSizeVector(best),
                count: walk.count,
            });
        }
    }
    unreachable!("n colours always suffice")
}

struct Enumeration<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    best: Option<Vec<usize>>,
    count: u64,
}

impl Enumeration<'_> {
    /// Assign vertex `v`, given that colours `0..opened` are in use so far.
    fn run(&mut self, v: usize, opened: usize) {
        let n = self.g.vertex_count();
        if v == n {
            if opened == self.k {
                self.record();
            }
            return;
        }
        let limit = (opened + 1).min(self.k);
        for c in 0..limit {
            let clash = self
                .g
                .neighbours(v)
                .iter()
                .any(|&w| w < v && self.colour[w] == c);
            if clash {
                continue;
            }
            self.colour[v] = c;
            self.run(v + 1, opened.max(c + 1));
        }
    }

    fn record(&mut self) {
        self.count += 1;
        let mut sizes = vec![0; self.k];
        for &c in &self.colour {
            sizes[c] += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        if self.best.as_ref().is_none_or(|b| sizes > *b) {
            self.best = Some(sizes);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn c5() {
        let r = oracle_chromatic(&cycle(5), DEFAULT_VERTEX_BUDGET).unwrap();
        assert_eq!(r.chi, 3);
        assert_eq!(r.lex_max_theta.as_slice(), &[2, 2, 1]);
        // Five choices for the lone vertex of colour 3, then the rest is a
        // path on four vertices with a unique 2-partition.
        assert_eq!(r.count, 5);
    }

    #[test]
    fn p4() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = oracle_chromatic(&g, DEFAULT_VERTEX_BUDGET).unwrap();
        assert_eq!((r.chi, r.lex_max_theta.as_slice()), (2, &[2, 2][..]));
        assert_eq!(r.count, 1);
    }

    #[test]
    fn k1() {
        let r = oracle_chromatic(&Graph::new(1, []).unwrap(), 1).unwrap();
        assert_eq!((r.chi, r.lex_max_theta.as_slice(), r.count), (1, &[1][..], 1));
        assert_eq!((r.cn_chi(), r.cnc_chi()), (1, 1));
    }

    #[test]
    fn budget() {
        assert_eq!(
            oracle_chromatic(&cycle(15), DEFAULT_VERTEX_BUDGET),
            Err(OracleError::BudgetExceeded(15, 14))
        );
    }

    #[test]
    fn complete_graph_has_one_colouring() {
        let g = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        let r = oracle_chromatic(&g, DEFAULT_VERTEX_BUDGET).unwrap();
        assert_eq!((r.chi, r.count), (5, 1));
        assert_eq!(r.lex_max_theta.as_slice(), &[1; 5]);
    }
}
