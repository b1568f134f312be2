// Order of the automorphism group as a product of basic orbit lengths.
//
// A base b₁, …, b_m comes from repeated individualization of the first
// non-singleton cell. Levels are processed deepest first; at level i every
// automorphism found so far fixes b₁, …, b_{i−1}, so the orbit of b_i under
// them is a lower bound for the true basic orbit. Each remaining candidate
// in b_i's cell is settled by an isomorphism search that pins the prefix.
// A refuted candidate also rules out its whole orbit under the known
// generators.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::isomorphism::DEFAULT_BUDGET;
use super::isomorphism::{
    colour_with_sequence, individualize, refine, search, target_cell, Search,
};
use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismReport {
    pub order: u128,
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
    /// Automorphisms found along the way; they generate the group.
    pub generators: Vec<Vec<usize>>,
    pub nodes: u64,
}

pub fn automorphism_count(g: &Graph) -> Result<u128> {
    Ok(automorphism_count_with_budget(g, DEFAULT_BUDGET)?.order)
}

fn orbit(start: usize, gens: &[Vec<usize>], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g[x];
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn automorphism_count_with_budget(g: &Graph, budget: u64) -> Result<AutomorphismReport> {
    let n = g.n();
    let mut base = Vec::new();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let (mut cg, mut ch) =
        colour_with_sequence(g, g, &[], &[]).expect("a graph refines against itself");
    while let Some(cell) = target_cell(&cg) {
        let members: Vec<usize> = (0..n).filter(|&v| cg[v] == cell).collect();
        let v = members[0];
        base.push(v);
        cells.push(members);
        individualize(&mut cg, &mut ch, v, v);
        refine(g, g, &mut cg, &mut ch);
    }

    let mut ctx = Search { nodes: 0, budget };
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut orbit_sizes = vec![0usize; base.len()];
    for level in (0..base.len()).rev() {
        let b = base[level];
        let prefix = &base[..level];
        let mut in_orbit = orbit(b, &gens, n);
        let mut ruled_out = vec![false; n];
        for &w in &cells[level] {
            if in_orbit[w] || ruled_out[w] {
                continue;
            }
            let mut seq_h = prefix.to_vec();
            seq_h.push(w);
            let found = match colour_with_sequence(g, g, &base[..=level], &seq_h) {
                Some((c1, c2)) => search(g, g, &c1, &c2, &mut ctx)?,
                None => None,
            };
            match found {
                Some(perm) => {
                    debug_assert!(g.is_automorphism(&perm));
                    gens.push(perm);
                    in_orbit = orbit(b, &gens, n);
                }
                None => {
                    for (x, hit) in orbit(w, &gens, n).into_iter().enumerate() {
                        ruled_out[x] |= hit;
                    }
                }
            }
        }
        orbit_sizes[level] = in_orbit.iter().filter(|&&x| x).count();
    }
    let order = orbit_sizes
        .iter()
        .try_fold(1u128, |acc, &s| acc.checked_mul(s as u128))
        .ok_or(Error::Overflow)?;
    Ok(AutomorphismReport {
        order,
        base,
        orbit_sizes,
        generators: gens,
        nodes: ctx.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        assert_eq!(automorphism_count(&Graph::complete(4)).unwrap(), 24);
        assert_eq!(automorphism_count(&Graph::path(3)).unwrap(), 2);
        assert_eq!(automorphism_count(&Graph::cycle(5)).unwrap(), 10);
        assert_eq!(automorphism_count(&Graph::cycle(6)).unwrap(), 12);
        assert_eq!(automorphism_count(&Graph::new(3)).unwrap(), 6);
        assert_eq!(automorphism_count(&Graph::new(0)).unwrap(), 1);
        // K_{1,3} plus isolated vertex
        assert_eq!(
            automorphism_count(&Graph::from_edges(5, [(0, 1), (0, 2), (0, 3)])).unwrap(),
            6
        );
    }

    #[test]
    fn petersen_has_order_120() {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        let g = Graph::from_fn(10, |i, j| {
            let (a, b) = (pairs[i], pairs[j]);
            a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
        });
        let r = automorphism_count_with_budget(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.order, 120);
        assert!(r.generators.iter().all(|p| g.is_automorphism(p)));
    }

    #[test]
    fn two_disjoint_triangles() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(automorphism_count(&g).unwrap(), 72);
    }
}
