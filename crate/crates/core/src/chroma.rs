//! Exact colouring engine: chromatic number, chi-minus colourings and the
//! chromatic curling numbers read off their class sizes.
//!
//! A chi-minus colouring is a proper colouring with exactly `chi` colours
//! whose class-size vector `(theta_1, theta_2, ...)` is lexicographically
//! maximal over all such colourings. The maximization is global: colour
//! class 1 is not committed before the later classes are optimized.
//!
//! The search works class by class. In a lexicographically maximal
//! colouring listed in non-increasing class order, every class is a
//! maximal independent set of the vertices not used by earlier classes
//! (moving a vertex from a smaller class into a larger one it is not
//! adjacent to would give a lexicographically larger vector). So each
//! level only branches over maximal independent sets of what is left,
//! largest first, and a branch is cut once its prefix can no longer beat
//! the incumbent.

use std::collections::HashMap;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

/// Largest graph the engine accepts. Vertex sets are `u128` bitmasks.
pub const MAX_VERTICES: usize = 128;

type VSet = u128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChromaError {
    #[error("improper colouring: edge ({0}, {1}) is monochromatic")]
    ImproperColouring(usize, usize),
    #[error("colouring has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("colours must be 1..=k with every colour used; colour {0} breaks this")]
    InvalidColour(u32),
    #[error("exact search supports at most {MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

/// One colour in `1..=k` per vertex, every colour used at least once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourAssignment {
    colours: Vec<u32>,
    k: u32,
}

impl ColourAssignment {
    pub fn new(colours: Vec<u32>) -> Result<Self, ChromaError> {
        let k = colours.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k as usize + 1];
        for &c in &colours {
            if c == 0 {
                return Err(ChromaError::InvalidColour(0));
            }
            used[c as usize] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !used[c as usize]) {
            return Err(ChromaError::InvalidColour(missing));
        }
        Ok(ColourAssignment { colours, k })
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    /// Number of colours used.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// First monochromatic edge, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .iter()
            .copied()
            .find(|&(u, v)| self.colours[u] == self.colours[v])
    }
}

impl Serialize for ColourAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.colours.serialize(s)
    }
}

/// Class sizes `theta_i` indexed by colour, colour 1 first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ClassSizeVector(pub Vec<usize>);

impl ClassSizeVector {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest class size.
    pub fn largest(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Product of the class sizes.
    pub fn product(&self) -> u128 {
        self.0.iter().map(|&t| t as u128).product()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Class sizes sorted descending.
    pub fn sorted_desc(&self) -> ClassSizeVector {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        ClassSizeVector(v)
    }
}

impl From<Vec<usize>> for ClassSizeVector {
    fn from(v: Vec<usize>) -> Self {
        ClassSizeVector(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChromaticCurlingResult {
    pub chi: usize,
    pub theta: ClassSizeVector,
    /// Chromatic curling number: the largest class.
    pub cn_chi: usize,
    /// Chromatic compound curling number: the product of the classes.
    pub cnc_chi: u128,
    pub witness: ColourAssignment,
}

/// Class sizes of a proper colouring of `g`, colour 1 first.
pub fn class_sizes(g: &Graph, a: &ColourAssignment) -> Result<ClassSizeVector, ChromaError> {
    if a.len() != g.vertex_count() {
        return Err(ChromaError::LengthMismatch {
            expected: g.vertex_count(),
            got: a.len(),
        });
    }
    if let Some((u, v)) = a.conflict(g) {
        return Err(ChromaError::ImproperColouring(u, v));
    }
    let mut theta = vec![0; a.k() as usize];
    for &c in a.colours() {
        theta[c as usize - 1] += 1;
    }
    Ok(ClassSizeVector(theta))
}

pub fn chromatic_number(g: &Graph) -> Result<usize, ChromaError> {
    Ok(Solver::new(g)?.chromatic_number())
}

/// The lexicographically maximal chromatic colouring and its curling
/// numbers. Among colourings with that class-size vector the witness is the
/// one whose colour sequence, read in vertex order, is smallest.
pub fn chi_minus(g: &Graph) -> Result<ChromaticCurlingResult, ChromaError> {
    let mut solver = Solver::new(g)?;
    let chi = solver.chromatic_number();
    let theta = solver.lex_max_theta(chi);
    let colours = solver.lex_min_witness(&theta);
    let witness = ColourAssignment::new(colours).expect("witness uses every colour");
    debug_assert_eq!(class_sizes(g, &witness).as_ref(), Ok(&ClassSizeVector(theta.clone())));
    let theta = ClassSizeVector(theta);
    Ok(ChromaticCurlingResult {
        chi,
        cn_chi: theta.largest(),
        cnc_chi: theta.product(),
        theta,
        witness,
    })
}

/// Relabels colour `i` as `chi + 1 - i`.
pub fn chi_plus(r: &ChromaticCurlingResult) -> ChromaticCurlingResult {
    let k = r.chi as u32;
    let colours = r.witness.colours().iter().map(|&c| k + 1 - c).collect();
    let mut theta = r.theta.0.clone();
    theta.reverse();
    ChromaticCurlingResult {
        chi: r.chi,
        theta: ClassSizeVector(theta),
        cn_chi: r.cn_chi,
        cnc_chi: r.cnc_chi,
        witness: ColourAssignment::new(colours).expect("relabelling keeps colours contiguous"),
    }
}

fn bit(v: usize) -> VSet {
    1 << v
}

fn count(s: VSet) -> usize {
    s.count_ones() as usize
}

fn members(mut s: VSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            v
        })
    })
}

struct Solver {
    n: usize,
    nbr: Vec<VSet>,
    all: VSet,
    colourable_cache: HashMap<(VSet, usize), bool>,
}

impl Solver {
    fn new(g: &Graph) -> Result<Self, ChromaError> {
        let n = g.vertex_count();
        if n > MAX_VERTICES {
            return Err(ChromaError::TooLarge(n));
        }
        let nbr = (0..n)
            .map(|v| g.neighbours(v).iter().fold(0, |acc, &w| acc | bit(w)))
            .collect();
        let all = if n == MAX_VERTICES { VSet::MAX } else { bit(n) - 1 };
        Ok(Solver {
            n,
            nbr,
            all,
            colourable_cache: HashMap::new(),
        })
    }

    fn closed(&self, v: usize) -> VSet {
        self.nbr[v] | bit(v)
    }

    fn is_independent(&self, s: VSet) -> bool {
        members(s).all(|v| self.nbr[v] & s == 0)
    }

    fn chromatic_number(&mut self) -> usize {
        let lower = self.greedy_clique();
        let upper = self.greedy_colour_count();
        (lower..upper)
            .find(|&k| self.colourable(self.all, k))
            .unwrap_or(upper)
    }

    /// Size of a clique grown greedily from each vertex.
    fn greedy_clique(&self) -> usize {
        let mut best = 1;
        for start in 0..self.n {
            let mut clique = 1;
            let mut cand = self.nbr[start];
            while cand != 0 {
                let v = members(cand)
                    .max_by_key(|&v| (count(self.nbr[v] & cand), std::cmp::Reverse(v)))
                    .expect("non-empty candidate set");
                clique += 1;
                cand &= self.nbr[v];
            }
            best = best.max(clique);
        }
        best
    }

    /// Colours used by greedy DSatur without backtracking.
    fn greedy_colour_count(&self) -> usize {
        let mut classes: Vec<VSet> = Vec::new();
        let mut left = self.all;
        while left != 0 {
            let v = self.pick_dsatur(left, &classes);
            match classes.iter().position(|&c| c & self.nbr[v] == 0) {
                Some(c) => classes[c] |= bit(v),
                None => classes.push(bit(v)),
            }
            left &= !bit(v);
        }
        classes.len()
    }

    /// Uncoloured vertex with the most distinct neighbour colours, then
    /// the most uncoloured neighbours, then the lowest index.
    fn pick_dsatur(&self, uncoloured: VSet, classes: &[VSet]) -> usize {
        members(uncoloured)
            .max_by_key(|&v| {
                let sat = classes.iter().filter(|&&c| c & self.nbr[v] != 0).count();
                (sat, count(self.nbr[v] & uncoloured), std::cmp::Reverse(v))
            })
            .expect("non-empty uncoloured set")
    }

    /// Whether the subgraph induced by `set` admits a proper `k`-colouring.
    fn colourable(&mut self, set: VSet, k: usize) -> bool {
        if set == 0 {
            return true;
        }
        match k {
            0 => return false,
            1 => return self.is_independent(set),
            _ if k >= count(set) => return true,
            _ => {}
        }
        if let Some(&known) = self.colourable_cache.get(&(set, k)) {
            return known;
        }
        let mut classes = Vec::with_capacity(k);
        let ok = self.extend_colouring(set, &mut classes, k);
        self.colourable_cache.insert((set, k), ok);
        ok
    }

    fn extend_colouring(&self, uncoloured: VSet, classes: &mut Vec<VSet>, k: usize) -> bool {
        if uncoloured == 0 {
            return true;
        }
        let v = self.pick_dsatur(uncoloured, classes);
        for c in 0..classes.len() {
            if classes[c] & self.nbr[v] == 0 {
                classes[c] |= bit(v);
                if self.extend_colouring(uncoloured & !bit(v), classes, k) {
                    return true;
                }
                classes[c] &= !bit(v);
            }
        }
        // Opening a fresh colour: all unused colours are interchangeable.
        if classes.len() < k {
            classes.push(bit(v));
            if self.extend_colouring(uncoloured & !bit(v), classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }

    /// Maximal independent sets of the subgraph induced by `within`
    /// (Bron-Kerbosch on the complement, with pivoting).
    /// Maximal independent sets of the subgraph induced by `within` that
    /// have exactly `size` vertices (Bron-Kerbosch on the complement, with
    /// pivoting and a size bound).
    fn independent_sets_of_size(&self, within: VSet, size: usize) -> Vec<VSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, within, 0, size, &mut out);
        out
    }

    fn bron_kerbosch(&self, current: VSet, mut cand: VSet, mut excluded: VSet, size: usize, out: &mut Vec<VSet>) {
        if count(current) > size || count(current) + self.clique_cover(cand) < size {
            return;
        }
        if cand == 0 {
            if excluded == 0 {
                out.push(current);
            }
            return;
        }
        // Any maximal extension contains the pivot or one of its neighbours.
        let pivot = members(cand | excluded)
            .min_by_key(|&u| count(cand & self.closed(u)))
            .expect("non-empty");
        for v in members(cand & self.closed(pivot)) {
            let closed = self.closed(v);
            self.bron_kerbosch(current | bit(v), cand & !closed, excluded & !closed, size, out);
            cand &= !bit(v);
            excluded |= bit(v);
            if count(current) + count(cand) < size {
                return;
            }
        }
    }

    /// Size of a greedy clique cover of `set`, an upper bound on the
    /// independence number of the subgraph it induces.
    fn clique_cover(&self, mut set: VSet) -> usize {
        let mut cliques = 0;
        while set != 0 {
            let v = set.trailing_zeros() as usize;
            let mut clique = bit(v);
            let mut cand = self.nbr[v] & set;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                clique |= bit(w);
                cand &= self.nbr[w];
            }
            set &= !clique;
            cliques += 1;
        }
        cliques
    }

    fn lex_max_theta(&mut self, chi: usize) -> Vec<usize> {
        let mut best = None;
        let mut prefix = Vec::with_capacity(chi);
        self.lex_search(self.all, chi, self.n, &mut prefix, &mut best);
        best.expect("a chi-colouring exists")
    }

    fn lex_search(
        &mut self,
        remaining: VSet,
        chi: usize,
        cap: usize,
        prefix: &mut Vec<usize>,
        best: &mut Option<Vec<usize>>,
    ) {
        let level = prefix.len();
        if remaining == 0 {
            if level == chi && best.as_ref().is_none_or(|b| prefix[..] > b[..]) {
                *best = Some(prefix.clone());
            }
            return;
        }
        let classes_left = chi - level;
        let left = count(remaining);
        if classes_left == 0 || left > cap * classes_left {
            return;
        }
        // Every later class needs a vertex; the largest class is at least
        // the average.
        let top = cap.min(left + 1 - classes_left).min(self.clique_cover(remaining));
        let floor = left.div_ceil(classes_left);
        for size in (floor..=top).rev() {
            if let Some(b) = best.as_ref() {
                if prefix[..] == b[..level] && size < b[level] {
                    return;
                }
            }
            for s in self.independent_sets_of_size(remaining, size) {
                let rest = remaining & !s;
                if !self.colourable(rest, classes_left - 1) {
                    continue;
                }
                prefix.push(size);
                self.lex_search(rest, chi, size, prefix, best);
                prefix.pop();
            }
        }
    }

    /// Lexicographically smallest colour sequence whose colour `i` class
    /// has exactly `theta[i - 1]` vertices. Colours are returned 1-based.
    fn lex_min_witness(&mut self, theta: &[usize]) -> Vec<u32> {
        let chi = theta.len();
        let mut fixed: Vec<VSet> = vec![0; chi];
        let mut colours = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let c = (0..chi)
                .find(|&c| {
                    if c + 1 == chi {
                        return true;
                    }
                    fixed[c] |= bit(v);
                    let ok = self.completes(self.all, 0, theta, &fixed);
                    fixed[c] &= !bit(v);
                    ok
                })
                .expect("some colour extends a feasible partial colouring");
            fixed[c] |= bit(v);
            colours.push(c as u32 + 1);
        }
        colours
    }

    /// Whether colours `c..` can be laid out on `remaining` as maximal
    /// independent sets of the prescribed sizes, honouring the vertices
    /// already pinned in `fixed`.
    fn completes(&mut self, remaining: VSet, c: usize, theta: &[usize], fixed: &[VSet]) -> bool {
        let chi = theta.len();
        if c == chi {
            return remaining == 0;
        }
        let must = fixed[c];
        let forbid = fixed
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != c)
            .fold(0, |acc, (_, &s)| acc | s);
        if must & !remaining != 0 || !self.is_independent(must) {
            return false;
        }
        let free = remaining & !must & !members(must).fold(0, |acc, v| acc | self.nbr[v]);
        let Some(wanted) = theta[c].checked_sub(count(must)) else {
            return false;
        };
        for s in self.independent_sets_of_size(free, wanted) {
            let class = s | must;
            if class & forbid != 0 {
                continue;
            }
            let rest = remaining & !class;
            if self.colourable(rest, chi - c - 1) && self.completes(rest, c + 1, theta, fixed) {
                return true;
            }
        }
        false
    }
}
