//! Exact maximum clique and complete (multipartite) subgraph containment.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::{Error, Result};

/// Largest total part size accepted by [`contains_complete_multipartite`].
pub const MULTIPARTITE_GUARD: usize = 8;

/// Clique number with one maximum clique (sorted vertex list).
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CliqueWitness {
    pub omega: usize,
    pub vertices: Vec<usize>,
}

/// Bron–Kerbosch with Tomita pivoting over a degeneracy ordering, pruned
/// once the candidate set cannot beat the incumbent.
pub fn max_clique(g: &Graph) -> CliqueWitness {
    let mut search = Search {
        g,
        best: 0,
        best_mask: 0,
    };
    let mut earlier = 0u64;
    for v in degeneracy_order(g) {
        let nv = g.neighbors(v);
        search.expand(1 << v, 1, nv & !earlier, nv & earlier);
        earlier |= 1 << v;
    }
    let vertices = bits(search.best_mask).collect();
    CliqueWitness {
        omega: search.best,
        vertices,
    }
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).omega
}

struct Search<'a> {
    g: &'a Graph,
    best: usize,
    best_mask: u64,
}

impl Search<'_> {
    fn expand(&mut self, clique: u64, size: usize, mut p: u64, mut x: u64) {
        if p == 0 {
            if x == 0 && size > self.best {
                self.best = size;
                self.best_mask = clique;
            }
            return;
        }
        if size + p.count_ones() as usize <= self.best {
            return;
        }
        let pivot = bits(p | x)
            .max_by_key(|&u| ((p & self.g.neighbors(u)).count_ones(), core::cmp::Reverse(u)))
            .expect("p is nonempty");
        let mut branch = p & !self.g.neighbors(pivot);
        while branch != 0 {
            let v = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            let nv = self.g.neighbors(v);
            self.expand(clique | 1 << v, size + 1, p & nv, x & nv);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
}

/// Repeatedly removes a minimum-degree vertex (lowest index on ties).
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut alive = g.vertex_mask();
    let mut order = Vec::with_capacity(n);
    while alive != 0 {
        let v = bits(alive)
            .min_by_key(|&v| ((g.neighbors(v) & alive).count_ones(), v))
            .expect("alive is nonempty");
        alive &= !(1 << v);
        order.push(v);
    }
    order
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// True iff `g` has no clique on `r` vertices, i.e. ω(g) < r. Stops at the
/// first `r`-clique found.
pub fn is_kr_free(g: &Graph, r: usize) -> Result<bool> {
    if r == 0 {
        return Err(Error::InvalidParameter("clique order must be at least 1"));
    }
    Ok(!has_clique(g, g.vertex_mask(), r))
}

/// Whether `candidates` contains a clique of `need` vertices.
fn has_clique(g: &Graph, candidates: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < need {
        return false;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // only later vertices, so each clique is tried once
        if has_clique(g, rest & g.neighbors(v), need - 1) {
            return true;
        }
        if (rest.count_ones() as usize) < need {
            return false;
        }
    }
    false
}

/// Whether `g` contains (as a not necessarily induced subgraph) a complete
/// multipartite graph with the given part sizes: pairwise disjoint vertex
/// sets of those sizes with every cross-part pair adjacent.
pub fn contains_complete_multipartite(g: &Graph, parts: &[usize]) -> Result<bool> {
    let total: usize = parts.iter().sum();
    if total > MULTIPARTITE_GUARD {
        return Err(Error::InvalidParameter("multipartite containment is limited to 8 vertices"));
    }
    if total > g.order() {
        return Ok(false);
    }
    let mut sizes: Vec<usize> = parts.iter().copied().filter(|&s| s > 0).collect();
    // big parts first constrain the search most
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if sizes.is_empty() {
        return Ok(true);
    }
    let mut slots = Vec::with_capacity(total);
    for (p, &s) in sizes.iter().enumerate() {
        slots.extend(core::iter::repeat_n(p, s));
    }
    let mut chosen = vec![0u64; sizes.len()];
    Ok(place(g, &sizes, &slots, 0, &mut chosen, 0))
}

/// Fills slot `i` (part `slots[i]`) with a vertex adjacent to everything
/// already placed in other parts. Within a part vertices increase; parts of
/// equal size are ordered by their first vertex.
fn place(g: &Graph, sizes: &[usize], slots: &[usize], i: usize, chosen: &mut [u64], used: u64) -> bool {
    if i == slots.len() {
        return true;
    }
    let part = slots[i];
    let total = slots.len();
    let mut cand = g.vertex_mask() & !used;
    for (q, &mask) in chosen.iter().enumerate() {
        if q != part {
            let mut m = mask;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                cand &= g.neighbors(w);
            }
        }
    }
    if chosen[part] != 0 {
        let last = 63 - chosen[part].leading_zeros() as usize;
        cand &= above(last);
    } else if part > 0 && sizes[part - 1] == sizes[part] {
        cand &= above(chosen[part - 1].trailing_zeros() as usize);
    }
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        // a vertex must reach every vertex outside its own part
        if g.degree(v) < total - sizes[part] {
            continue;
        }
        chosen[part] |= 1 << v;
        if place(g, sizes, slots, i + 1, chosen, used | 1 << v) {
            return true;
        }
        chosen[part] &= !(1 << v);
    }
    false
}

/// Mask of vertices with index greater than `v`.
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        u64::MAX << (v + 1)
    }
}
