//! Constructors for the graph families used throughout the crate.

use alloc::vec::Vec;

use super::{Graph, MAX_ORDER};
use crate::{Error, Result};

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let mask = g.vertex_mask();
    for v in 0..n {
        g.rows[v] = mask & !(1 << v);
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("a cycle needs at least 3 vertices"));
    }
    let mut g = path(n)?;
    g.add_edge(0, n - 1)?;
    Ok(g)
}

/// Star `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(0, v)?;
    }
    Ok(g)
}

/// Part sizes of `T_{n,r}`: with `n = kr + t`, `t` parts of size `k + 1`
/// followed by `r - t` parts of size `k`.
pub fn turan_part_sizes(n: usize, r: usize) -> Result<Vec<usize>> {
    if r < 1 || r > n {
        return Err(Error::InvalidParameter("Turán graph needs 1 <= r <= n"));
    }
    let (k, t) = (n / r, n % r);
    Ok((0..r).map(|i| if i < t { k + 1 } else { k }).collect())
}

/// Complete `r`-partite graph on `n` vertices with balanced parts, vertices
/// numbered consecutively part by part, larger parts first.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    let sizes = turan_part_sizes(n, r)?;
    complete_multipartite(&sizes)
}

pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    let n: usize = sizes.iter().sum();
    let mut g = Graph::empty(n)?;
    let mask = g.vertex_mask();
    let mut start = 0;
    for &s in sizes {
        let part = if s == 64 { u64::MAX } else { ((1u64 << s) - 1) << start };
        for v in start..start + s {
            g.rows[v] = mask & !part;
        }
        start += s;
    }
    Ok(g)
}

/// Edge count of `T_{n,r}` from the closed form
/// `(n^2 - n^2/r - t(r-t)/r) / 2`, `t = n mod r`, in exact integers.
pub fn turan_edge_count(n: usize, r: usize) -> Result<usize> {
    if r < 1 || r > n {
        return Err(Error::InvalidParameter("Turán graph needs 1 <= r <= n"));
    }
    let t = n % r;
    // n^2/r + t(r-t)/r = (n^2 + t(r-t)) / r, always an integer
    let sub = (n * n + t * (r - t)) / r;
    Ok((n * n - sub) / 2)
}

/// `K_r` on vertices `0..r` with a pendant path of `n - r` vertices hanging
/// from vertex 0, numbered in path order.
pub fn kite(n: usize, r: usize) -> Result<Graph> {
    if r < 2 || r > n {
        return Err(Error::InvalidParameter("kite needs 2 <= r <= n"));
    }
    attach_path(&complete(r)?, 0, n - r)
}

/// Disjoint union plus every edge between the two vertex sets.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
    let mut g = disjoint_union(a, b)?;
    let (na, n) = (a.order(), g.order());
    for u in 0..na {
        for v in na..n {
            g.rows[u] |= 1 << v;
            g.rows[v] |= 1 << u;
        }
    }
    Ok(g)
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
    let na = a.order();
    let n = na + b.order();
    if n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    let mut rows = Vec::with_capacity(n);
    rows.extend_from_slice(a.rows());
    rows.extend(b.rows().iter().map(|&r| r << na));
    Ok(Graph { n, rows })
}

pub fn complement(g: &Graph) -> Graph {
    let mask = g.vertex_mask();
    let rows = g.rows.iter().enumerate().map(|(v, &r)| !r & mask & !(1 << v)).collect();
    Graph { n: g.order(), rows }
}

/// Appends `len` new vertices forming a pendant path rooted at `root`.
pub fn attach_path(g: &Graph, root: usize, len: usize) -> Result<Graph> {
    g.check_vertex(root)?;
    let n = g.order() + len;
    if n > MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    let mut h = g.clone();
    let mut prev = root;
    for v in g.order()..n {
        h.rows.push(0);
        h.n += 1;
        h.add_edge(prev, v)?;
        prev = v;
    }
    Ok(h)
}

/// `K_r` with pendant paths of lengths `k` and `l` at two distinct clique
/// vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TailedCliqueSpec {
    pub r: usize,
    pub k: usize,
    pub l: usize,
}

impl TailedCliqueSpec {
    pub fn new(r: usize, k: usize, l: usize) -> Result<Self> {
        if r < 3 {
            return Err(Error::InvalidParameter("tailed clique needs r >= 3"));
        }
        if r + k + l > MAX_ORDER {
            return Err(Error::InvalidOrder(r + k + l));
        }
        Ok(TailedCliqueSpec { r, k, l })
    }

    pub fn order(&self) -> usize {
        self.r + self.k + self.l
    }

    /// Clique vertex carrying the first tail.
    pub fn u(&self) -> usize {
        0
    }

    /// Clique vertex carrying the second tail.
    pub fn v(&self) -> usize {
        1
    }

    /// The `r - 2` clique vertices without tails.
    pub fn hubs(&self) -> core::ops::Range<usize> {
        2..self.r
    }

    /// First tail in path order `u_1, ..., u_k`.
    pub fn u_tail(&self) -> core::ops::Range<usize> {
        self.r..self.r + self.k
    }

    /// Second tail in path order `v_1, ..., v_l`.
    pub fn v_tail(&self) -> core::ops::Range<usize> {
        self.r + self.k..self.order()
    }
}

pub fn tailed_clique(spec: TailedCliqueSpec) -> Result<Graph> {
    let spec = TailedCliqueSpec::new(spec.r, spec.k, spec.l)?;
    let g = attach_path(&complete(spec.r)?, spec.u(), spec.k)?;
    attach_path(&g, spec.v(), spec.l)
}

/// `K_r` plus a path `u_1 ... u_k` whose first vertex is adjacent to both
/// clique vertices 0 and 1. Path vertices are `r..r+k`.
pub fn theta_kite(r: usize, k: usize) -> Result<Graph> {
    if r < 3 || k < 1 {
        return Err(Error::InvalidParameter("theta kite needs r >= 3 and k >= 1"));
    }
    let mut g = attach_path(&complete(r)?, 0, k)?;
    g.add_edge(1, r)?;
    Ok(g)
}
