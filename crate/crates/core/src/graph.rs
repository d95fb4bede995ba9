//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("a graph needs at least one vertex")]
    Empty,
}

/// An immutable simple undirected graph.
///
/// Edges are stored normalized as `(u, v)` with `u < v`, sorted and
/// deduplicated, so two graphs with the same vertex count and edge set
/// compare equal regardless of how they were built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(raw: GraphJson) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph, collapsing duplicate pairs in either orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange(x, n));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_regular(&self) -> bool {
        self.adj.iter().all(|a| a.len() == self.adj[0].len())
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for list in &self.adj {
            *counts.entry(list.len()).or_default() += 1;
        }
        DegreeSequence {
            runs: counts
                .into_iter()
                .map(|(degree, count)| DegreeRun { degree, count })
                .collect(),
        }
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling a valid graph stays valid")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Undirected DOT. Isolated vertices are listed as bare nodes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.n {
            if self.adj[v].is_empty() {
                let _ = writeln!(out, "  {v};");
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// A connected graph on `n` vertices: a random spanning tree plus each
    /// remaining pair independently with probability `extra`.
    pub fn random_connected<R: Rng>(n: usize, extra: f64, rng: &mut R) -> Graph {
        let mut edges = Vec::new();
        for v in 1..n {
            edges.push((rng.gen_range(0..v), v));
        }
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(extra) {
                    edges.push((u, v));
                }
            }
        }
        // Shuffle labels so vertex 0 is not always the tree root.
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        Graph::new(n, edges)
            .expect("generated edges are in range")
            .relabel(&perm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRun {
    pub degree: usize,
    pub count: usize,
}

/// Degree sequence as runs of equal degree, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    pub runs: Vec<DegreeRun>,
}

impl DegreeSequence {
    /// Number of distinct degree values.
    pub fn distinct_count(&self) -> usize {
        self.runs.len()
    }

    pub fn total(&self) -> usize {
        self.runs.iter().map(|r| r.count).sum()
    }

    pub fn degree_sum(&self) -> usize {
        self.runs.iter().map(|r| r.degree * r.count).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn runs(g: &Graph) -> Vec<(usize, usize)> {
        g.degree_sequence()
            .runs
            .iter()
            .map(|r| (r.degree, r.count))
            .collect()
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 2), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange(2, 2))
        );
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn degree_runs() {
        assert_eq!(runs(&cycle(5)), vec![(2, 5)]);
        assert_eq!(runs(&path(4)), vec![(1, 2), (2, 2)]);
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(runs(&star), vec![(1, 3), (3, 1)]);
        assert_eq!(star.degree_sequence().distinct_count(), 2);
    }

    #[test]
    fn connectivity() {
        assert!(cycle(5).is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
    }

    #[test]
    fn json_shape() {
        let g = Graph::new(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(g.to_json(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert!(Graph::from_json(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn dot_shape() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(g.to_dot(), "graph {\n  2;\n  0 -- 1;\n}\n");
    }

    #[test]
    fn random_graphs_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..12 {
            assert!(Graph::random_connected(n, 0.2, &mut rng).is_connected());
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::Rng;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..12).prop_flat_map(|n| {
                proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
                    Graph::new(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn handshake(g in arb_graph()) {
                let seq = g.degree_sequence();
                prop_assert_eq!(seq.degree_sum(), 2 * g.edge_count());
                prop_assert_eq!(seq.total(), g.vertex_count());
                prop_assert!(seq.runs.windows(2).all(|w| w[0].degree < w[1].degree));
            }

            #[test]
            fn degree_sequence_survives_relabel(g in arb_graph(), seed in any::<u64>()) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
                for i in (1..perm.len()).rev() {
                    perm.swap(i, rng.gen_range(0..=i));
                }
                prop_assert_eq!(g.relabel(&perm).degree_sequence(), g.degree_sequence());
            }

            #[test]
            fn json_round_trip(g in arb_graph()) {
                prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
            }
        }
    }
}
