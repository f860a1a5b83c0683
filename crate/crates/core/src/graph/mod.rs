//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` row of the adjacency matrix, so neighborhood
//! intersection is a single AND and edge tests are a shift.

mod code;
mod connectivity;
mod families;
mod iso;

use alloc::vec::Vec;
use core::fmt;

pub use code::GraphCode;
pub use families::TailedCliqueSpec;
pub use iso::is_isomorphic;

use crate::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Graph {
            n,
            rows: alloc::vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows are symmetrized and the
    /// diagonal is cleared.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let mut g = Graph::empty(rows.len())?;
        let mask = g.vertex_mask();
        for (u, &row) in rows.iter().enumerate() {
            let mut row = row & mask & !(1u64 << u);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                g.rows[u] |= 1 << v;
                g.rows[v] |= 1 << u;
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Bit mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParameter("self-loops are not allowed"));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.rows[u] >> v) & 1 == 1
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (the graph6 order).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let mask = self.vertex_mask();
        (0..self.n).all(|v| self.rows[v] == mask & !(1 << v))
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut h = Graph::empty(vertices.len())?;
        for (a, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(a, b)?;
                }
            }
        }
        Ok(h)
    }

    /// Applies `perm` so that vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation length differs from order"));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1 << p;
        }
        if seen != self.vertex_mask() {
            return Err(Error::InvalidParameter("not a permutation"));
        }
        let mut h = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v])?;
        }
        Ok(h)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = crate::graph6::write_graph6(self);
        f.write_str(core::str::from_utf8(&text).map_err(|_| fmt::Error)?)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub use connectivity::{components, is_connected, vertex_connectivity};
pub use families::{
    attach_path, complement, complete, complete_multipartite, cycle, disjoint_union, join, kite, path, star, tailed_clique, theta_kite,
    turan, turan_edge_count, turan_part_sizes,
};
