use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::Graph;

/// Connected components as vertex masks, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<u64> {
    let mut out = Vec::new();
    let mut unseen = g.vertex_mask();
    while unseen != 0 {
        let start = unseen.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = g.neighbors(v) & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        unseen &= !comp;
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    let mut comp = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = g.neighbors(v) & !comp;
        comp |= fresh;
        frontier |= fresh;
    }
    comp == g.vertex_mask()
}

/// Minimum number of vertices whose removal disconnects `g`.
///
/// `n - 1` for complete graphs and 0 for disconnected ones. Otherwise the
/// minimum over non-adjacent pairs of the number of internally disjoint
/// paths, each computed as a unit-capacity max flow on the vertex-split
/// network.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    if !is_connected(g) {
        return 0;
    }
    let mut best = n - 1;
    let mut flow = SplitFlow::new(g);
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(flow.disjoint_paths(s, t, best));
                if best == 1 {
                    return 1;
                }
            }
        }
    }
    best
}

/// Vertex-split flow network: vertex `v` becomes `v_in = 2v` and
/// `v_out = 2v + 1` joined by a unit arc; each edge `uv` becomes arcs
/// `u_out -> v_in` and `v_out -> u_in`.
struct SplitFlow {
    head: Vec<usize>,
    cap: Vec<i32>,
    to: Vec<usize>,
    adj: Vec<Vec<usize>>,
    base_cap: Vec<i32>,
}

impl SplitFlow {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut net = SplitFlow {
            head: Vec::new(),
            cap: Vec::new(),
            to: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
            base_cap: Vec::new(),
        };
        let big = n as i32;
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, big);
            net.arc(2 * v + 1, 2 * u, big);
        }
        net.base_cap = net.cap.clone();
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.adj[from].push(self.to.len());
        self.head.push(from);
        self.to.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.to.len());
        self.head.push(to);
        self.to.push(from);
        self.cap.push(0);
    }

    /// Max flow from `s_out` to `t_in`, stopping early once `limit` is hit.
    fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base_cap);
        let (src, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut parent = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::new();
            queue.push_back(src);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    reached = true;
                    break;
                }
                for &e in &self.adj[x] {
                    let y = self.to[e];
                    if self.cap[e] > 0 && y != src && parent[y] == usize::MAX {
                        parent[y] = e;
                        queue.push_back(y);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut x = sink;
            while x != src {
                let e = parent[x];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                x = self.head[e];
            }
            flow += 1;
        }
        flow
    }
}
