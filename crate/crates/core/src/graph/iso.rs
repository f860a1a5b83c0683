use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::Graph;

/// Exact isomorphism test.
///
/// Vertices of both graphs are colored jointly by iterated degree refinement;
/// the color histograms must agree, and a backtracking search then maps
/// vertices only onto same-colored vertices with consistent adjacency.
/// Meant for small orders (n <= 10 is instant); cost grows with the size of
/// the largest color class on highly symmetric inputs.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }

    let colors = refine(a, b);
    let (ca, cb) = colors.split_at(n);
    let mut ha = ca.to_vec();
    let mut hb = cb.to_vec();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return false;
    }

    // map rarest colors first, preferring vertices adjacent to already
    // placed ones so adjacency constraints bite early
    let mut class_size = BTreeMap::new();
    for &c in ca {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                let touching = (a.neighbors(v) & placed).count_ones();
                (class_size[&ca[v]], core::cmp::Reverse(touching), v)
            })
            .unwrap();
        placed |= 1 << next;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    extend(a, b, ca, cb, &order, 0, &mut map, 0)
}

#[allow(clippy::too_many_arguments)]
fn extend(a: &Graph, b: &Graph, ca: &[u32], cb: &[u32], order: &[usize], depth: usize, map: &mut [usize], used: u64) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mut candidates = b.vertex_mask() & !used;
    while candidates != 0 {
        let w = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        if cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x| a.has_edge(v, x) == b.has_edge(w, map[x]));
        if !consistent {
            continue;
        }
        map[v] = w;
        if extend(a, b, ca, cb, order, depth + 1, map, used | 1 << w) {
            return true;
        }
        map[v] = usize::MAX;
    }
    false
}

/// Stable coloring of the disjoint union of `a` and `b` (vertices of `b`
/// are offset by `a.order()`), so colors are comparable across the graphs.
fn refine(a: &Graph, b: &Graph) -> Vec<u32> {
    let n = a.order();
    let neighbors = |v: usize| -> u64 { if v < n { a.neighbors(v) } else { b.neighbors(v - n) } };
    let offset = |v: usize| if v < n { 0 } else { n };

    let mut colors: Vec<u32> = (0..2 * n).map(|v| neighbors(v).count_ones()).collect();
    let mut classes = count_classes(&colors);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..2 * n)
            .map(|v| {
                let mut nb = Vec::new();
                let mut m = neighbors(v);
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    m &= m - 1;
                    nb.push(colors[w + offset(v)]);
                }
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        // relabel by sorted signature so colors do not depend on vertex order
        let mut distinct: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
        distinct.sort_unstable();
        distinct.dedup();
        let next: Vec<u32> = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).unwrap() as u32)
            .collect();
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    #[test]
    fn turan_variants() {
        let t73 = turan(7, 3).unwrap();
        let e2 = Graph::empty(2).unwrap();
        let e3 = Graph::empty(3).unwrap();
        let j = join(&e3, &join(&e2, &e2).unwrap()).unwrap();
        assert!(is_isomorphic(&t73, &j));
        let k331 = families::complete_multipartite(&[3, 3, 1]).unwrap();
        assert!(!is_isomorphic(&t73, &k331));
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = cycle(5).unwrap();
        assert!(is_isomorphic(&c5, &complement(&c5)));
        assert!(!is_isomorphic(&cycle(6).unwrap(), &complement(&cycle(6).unwrap())));
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C_6 and two triangles share degree sequence but are not isomorphic
        let k3 = complete(3).unwrap();
        let two = disjoint_union(&k3, &k3).unwrap();
        assert!(!is_isomorphic(&cycle(6).unwrap(), &two));
    }

    #[test]
    fn double_complement() {
        let g = kite(7, 4).unwrap();
        assert!(is_isomorphic(&g, &complement(&complement(&g))));
    }
}
