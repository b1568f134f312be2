//! Dense undirected graphs with bit-packed adjacency rows, plus the strongly
//! regular graph toolkit built on them.

mod automorphism;
mod isomorphism;
mod srg;

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use automorphism::{automorphism_count, automorphism_count_with_budget, AutomorphismReport};
pub use isomorphism::{
    isomorphism, isomorphism_with_budget, IsoOutcome, Refutation, DEFAULT_BUDGET,
};
pub use srg::{
    flipped_sign_multiplicities, matrix_identity_witness, spectrum_from_params, srg_params,
    Degeneracy, NotSrg, Spectrum, SpectrumError, SrgParams,
};

const WORD: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            labels: None,
        }
    }

    /// Builds a graph from a symmetric predicate, evaluated on `i < j`.
    pub fn from_fn<F: FnMut(usize, usize) -> bool>(n: usize, mut adjacent: F) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Adds the edge `{u, v}`. Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return;
        }
        self.adj[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.adj[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Symmetric and loop-free.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n).all(|u| !self.has_edge(u, u) && self.neighbors(u).all(|v| self.has_edge(v, u)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::from_fn(self.n, |i, j| !self.has_edge(i, j));
        g.labels = self.labels.clone();
        g
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&w| w == 0)
    }

    /// Components as sorted vertex lists, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    pub fn induced_is_complete(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// The graph with vertex `i` renamed to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])));
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n];
            for (i, s) in l.iter().enumerate() {
                nl[perm[i]] = s.clone();
            }
            g.labels = Some(nl);
        }
        g
    }

    /// Adjacency is equal once labels are ignored.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    /// `true` iff `map` is a bijection `V(self) → V(other)` preserving both
    /// adjacency and non-adjacency.
    pub fn is_isomorphism(&self, other: &Graph, map: &[usize]) -> bool {
        if self.n != other.n || map.len() != self.n {
            return false;
        }
        let mut hit = vec![false; self.n];
        for &m in map {
            if m >= self.n || core::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        (0..self.n)
            .all(|u| (u + 1..self.n).all(|v| self.has_edge(u, v) == other.has_edge(map[u], map[v])))
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        self.is_isomorphism(self, perm)
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| u8::from(self.has_edge(u, v))).collect())
            .collect()
    }
}
