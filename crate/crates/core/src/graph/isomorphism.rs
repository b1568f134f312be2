// Isomorphism by joint colour refinement and individualization.
//
// Both graphs are refined together with one shared signature table, so a
// colour means the same thing on either side. A mismatch in cell sizes
// refutes the current branch. Search individualizes the lowest vertex of the
// first non-singleton cell of the left graph against each candidate of the
// same cell on the right, in increasing index order.

use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::error::{Error, Result};

/// Default node budget for the backtracking search.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    VertexCount {
        left: usize,
        right: usize,
    },
    /// Colour refinement from the uniform colouring already disagrees.
    RefinementSignature,
    /// Every branch of the search was refuted.
    SearchExhausted {
        nodes: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `map[v]` is the image in the right graph of left vertex `v`.
    Isomorphic(Vec<usize>),
    NonIsomorphic(Refutation),
}

impl IsoOutcome {
    pub fn mapping(&self) -> Option<&[usize]> {
        match self {
            IsoOutcome::Isomorphic(m) => Some(m),
            IsoOutcome::NonIsomorphic(_) => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

pub(crate) struct Search {
    pub nodes: u64,
    pub budget: u64,
}

fn colour_count(c: &[u32]) -> u32 {
    c.iter().max().map_or(0, |&m| m + 1)
}

/// Refines `cg`/`ch` to the coarsest joint equitable partition. Returns
/// `false` when the two sides become incompatible.
pub(crate) fn refine(g: &Graph, h: &Graph, cg: &mut [u32], ch: &mut [u32]) -> bool {
    let n = g.n();
    let mut k = colour_count(cg).max(colour_count(ch));
    loop {
        let width = k as usize + 1;
        let mut keys = vec![0u32; 2 * n * width];
        for (side, (graph, col)) in [(g, &*cg), (h, &*ch)].into_iter().enumerate() {
            for v in 0..n {
                let key = &mut keys[(side * n + v) * width..(side * n + v + 1) * width];
                key[0] = col[v];
                for u in graph.neighbors(v) {
                    key[1 + col[u] as usize] += 1;
                }
            }
        }
        let key = |i: usize| &keys[i * width..(i + 1) * width];
        let mut order: Vec<usize> = (0..2 * n).collect();
        order.sort_unstable_by(|&a, &b| key(a).cmp(key(b)));
        let mut next = vec![0u32; 2 * n];
        let mut id = 0u32;
        for w in 0..order.len() {
            if w > 0 && key(order[w]) != key(order[w - 1]) {
                id += 1;
            }
            next[order[w]] = id;
        }
        let new_k = id + 1;
        let mut balance = vec![0i64; new_k as usize];
        for v in 0..n {
            balance[next[v] as usize] += 1;
            balance[next[n + v] as usize] -= 1;
        }
        if balance.iter().any(|&b| b != 0) {
            return false;
        }
        cg.copy_from_slice(&next[..n]);
        ch.copy_from_slice(&next[n..]);
        if new_k == k {
            return true;
        }
        k = new_k;
    }
}

/// Gives `v` (left) and `w` (right) a fresh shared colour.
pub(crate) fn individualize(cg: &mut [u32], ch: &mut [u32], v: usize, w: usize) {
    let fresh = colour_count(cg).max(colour_count(ch));
    cg[v] = fresh;
    ch[w] = fresh;
}

/// Colourings after refining from uniform and then individualizing the
/// paired sequences one step at a time. `None` if refinement separates the
/// sides.
pub(crate) fn colour_with_sequence(
    g: &Graph,
    h: &Graph,
    seq_g: &[usize],
    seq_h: &[usize],
) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.n();
    let (mut cg, mut ch) = (vec![0u32; n], vec![0u32; n]);
    if !refine(g, h, &mut cg, &mut ch) {
        return None;
    }
    for (&v, &w) in seq_g.iter().zip(seq_h) {
        if cg[v] != ch[w] {
            return None;
        }
        individualize(&mut cg, &mut ch, v, w);
        if !refine(g, h, &mut cg, &mut ch) {
            return None;
        }
    }
    Some((cg, ch))
}

/// First non-singleton cell of the left colouring, as the smallest colour id.
pub(crate) fn target_cell(cg: &[u32]) -> Option<u32> {
    let mut sizes = vec![0usize; colour_count(cg) as usize];
    for &c in cg {
        sizes[c as usize] += 1;
    }
    sizes.iter().position(|&s| s > 1).map(|c| c as u32)
}

pub(crate) fn search(
    g: &Graph,
    h: &Graph,
    cg: &[u32],
    ch: &[u32],
    ctx: &mut Search,
) -> Result<Option<Vec<usize>>> {
    ctx.nodes += 1;
    if ctx.nodes > ctx.budget {
        return Err(Error::BudgetExceeded {
            nodes: ctx.nodes - 1,
        });
    }
    let n = g.n();
    let Some(cell) = target_cell(cg) else {
        let mut by_colour = vec![usize::MAX; n];
        for (w, &c) in ch.iter().enumerate() {
            by_colour[c as usize] = w;
        }
        let map: Vec<usize> = cg.iter().map(|&c| by_colour[c as usize]).collect();
        return Ok(g.is_isomorphism(h, &map).then_some(map));
    };
    let v = cg
        .iter()
        .position(|&c| c == cell)
        .expect("cell is nonempty");
    for w in (0..n).filter(|&w| ch[w] == cell) {
        let (mut cg2, mut ch2) = (cg.to_vec(), ch.to_vec());
        individualize(&mut cg2, &mut ch2, v, w);
        if refine(g, h, &mut cg2, &mut ch2) {
            if let Some(m) = search(g, h, &cg2, &ch2, ctx)? {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

pub fn isomorphism(g: &Graph, h: &Graph) -> Result<IsoOutcome> {
    isomorphism_with_budget(g, h, DEFAULT_BUDGET)
}

/// Finds an isomorphism `g → h` or certifies that none exists.
pub fn isomorphism_with_budget(g: &Graph, h: &Graph, budget: u64) -> Result<IsoOutcome> {
    if g.n() != h.n() {
        return Ok(IsoOutcome::NonIsomorphic(Refutation::VertexCount {
            left: g.n(),
            right: h.n(),
        }));
    }
    let Some((cg, ch)) = colour_with_sequence(g, h, &[], &[]) else {
        return Ok(IsoOutcome::NonIsomorphic(Refutation::RefinementSignature));
    };
    let mut ctx = Search { nodes: 0, budget };
    Ok(match search(g, h, &cg, &ch, &mut ctx)? {
        Some(map) => IsoOutcome::Isomorphic(map),
        None => IsoOutcome::NonIsomorphic(Refutation::SearchExhausted { nodes: ctx.nodes }),
    })
}
