use alloc::vec::Vec;

use crate::clique::is_kr_free;
use crate::graph::{complement, components, join, Graph};
use crate::spectra::algebraic_connectivity;
use crate::{Error, Result};

const ALPHA_SLACK: f64 = 1e-8;

/// Finest join factorization of a graph: the factors are the subgraphs
/// induced on the vertex sets of the complement's connected components.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct JoinDecomposition {
    /// Ordered by smallest vertex.
    pub factors: Vec<Graph>,
    /// Original labels of each factor's vertices, increasing.
    pub vertex_sets: Vec<Vec<usize>>,
}

impl JoinDecomposition {
    pub fn of(g: &Graph) -> Self {
        let vertex_sets: Vec<Vec<usize>> = components(&complement(g)).into_iter().map(mask_vertices).collect();
        let factors = vertex_sets
            .iter()
            .map(|vs| g.induced(vs).expect("component vertices are in range"))
            .collect();
        JoinDecomposition { factors, vertex_sets }
    }

    /// Join of all factors in order; isomorphic to the original graph.
    pub fn rebuild(&self) -> Result<Graph> {
        let mut it = self.factors.iter();
        let first = it.next().ok_or(Error::InvalidParameter("no factors"))?.clone();
        it.try_fold(first, |acc, f| join(&acc, f))
    }
}

fn mask_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Outcome of testing `G = H_1 v ... v H_t v H` with every `H_i` edgeless of
/// order `k + 1`, `H` free of `K_{r+1-t}` and `α(H) >= n - (k+1)(t+1)`,
/// where `n = kr + t`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct JoinCheck {
    pub ok: bool,
    pub k: usize,
    pub t: usize,
    pub decomposition: JoinDecomposition,
    /// Indices into the factors of the accepted edgeless `H_i`.
    pub selected: Option<Vec<usize>>,
    pub remainder: Option<Graph>,
    pub remainder_alpha: Option<f64>,
}

/// An edgeless `H_i` of order at least 2 has a complete, hence connected,
/// complement, so it is exactly one finest factor; trying every choice of
/// `t` such factors is therefore complete. The first passing choice in
/// lexicographic factor order is reported.
pub fn check_join_characterization(g: &Graph, n: usize, r: usize) -> Result<JoinCheck> {
    if g.order() != n {
        return Err(Error::InvalidParameter("graph order differs from n"));
    }
    if r < 2 {
        return Err(Error::InvalidParameter("join characterization needs r >= 2"));
    }
    let (k, t) = (n / r, n % r);
    if t == 0 || t + 1 >= r {
        return Err(Error::NotApplicable("join characterization needs n = kr + t with 0 < t < r - 1"));
    }
    let decomposition = JoinDecomposition::of(g);
    let candidates: Vec<usize> = (0..decomposition.factors.len())
        .filter(|&i| {
            let f = &decomposition.factors[i];
            f.order() == k + 1 && f.edge_count() == 0
        })
        .collect();
    let need_alpha = (n - (k + 1) * (t + 1)) as f64;
    let mut check = JoinCheck {
        ok: false,
        k,
        t,
        decomposition,
        selected: None,
        remainder: None,
        remainder_alpha: None,
    };
    let mut pick = Vec::with_capacity(t);
    choose(&candidates, t, 0, &mut pick, &mut |sel| {
        let taken: Vec<usize> = sel.iter().flat_map(|&i| check.decomposition.vertex_sets[i].iter().copied()).collect();
        let rest: Vec<usize> = (0..n).filter(|v| !taken.contains(v)).collect();
        let h = g.induced(&rest)?;
        if !is_kr_free(&h, r + 1 - t)? {
            return Ok(false);
        }
        let a = algebraic_connectivity(&h)?;
        if a >= need_alpha - ALPHA_SLACK {
            check.ok = true;
            check.selected = Some(sel.to_vec());
            check.remainder = Some(h);
            check.remainder_alpha = Some(a);
            return Ok(true);
        }
        Ok(false)
    })?;
    Ok(check)
}

/// Calls `f` on each `t`-subset of `items` in lexicographic order until it
/// returns true.
fn choose(items: &[usize], t: usize, from: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
    if pick.len() == t {
        return f(pick);
    }
    for i in from..items.len() {
        if items.len() - i < t - pick.len() {
            break;
        }
        pick.push(items[i]);
        let done = choose(items, t, i + 1, pick, f)?;
        pick.pop();
        if done {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Cheap necessary condition for the characterization: at least `t` finest
/// factors are edgeless of order `k + 1`.
pub(crate) fn has_edgeless_factors(g: &Graph, k: usize, t: usize) -> bool {
    let comp = complement(g);
    components(&comp)
        .into_iter()
        .filter(|&m| {
            // edgeless in g means complete in the complement
            m.count_ones() as usize == k + 1 && mask_vertices(m).iter().all(|&v| comp.neighbors(v) & m == m & !(1 << v))
        })
        .count()
        >= t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, is_isomorphic, kite, star, turan};

    #[test]
    fn k331_decomposes() {
        let g = complete_multipartite(&[3, 3, 1]).unwrap();
        let c = check_join_characterization(&g, 7, 3).unwrap();
        assert!(c.ok);
        assert_eq!((c.k, c.t), (2, 1));
        assert_eq!(c.decomposition.factors.len(), 3);
        let h = c.remainder.unwrap();
        assert!(is_isomorphic(&h, &star(4).unwrap()));
        assert!((c.remainder_alpha.unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn turan_7_3_decomposes() {
        let c = check_join_characterization(&turan(7, 3).unwrap(), 7, 3).unwrap();
        assert!(c.ok);
        let h = c.remainder.unwrap();
        assert!(is_isomorphic(&h, &turan(4, 2).unwrap()));
        assert!((c.remainder_alpha.unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn kite_fails_and_residues_are_checked() {
        assert!(!check_join_characterization(&kite(7, 3).unwrap(), 7, 3).unwrap().ok);
        assert!(matches!(check_join_characterization(&turan(6, 3).unwrap(), 6, 3), Err(Error::NotApplicable(_))));
        assert!(matches!(check_join_characterization(&turan(8, 3).unwrap(), 8, 3), Err(Error::NotApplicable(_))));
        assert!(check_join_characterization(&turan(7, 3).unwrap(), 6, 3).is_err());
    }

    #[test]
    fn rebuild_is_isomorphic() {
        for g in [
            complete_multipartite(&[3, 3, 1]).unwrap(),
            kite(6, 3).unwrap(),
            crate::graph::complete(4).unwrap(),
            Graph::empty(3).unwrap(),
        ] {
            let d = JoinDecomposition::of(&g);
            assert!(is_isomorphic(&d.rebuild().unwrap(), &g));
        }
    }

    #[test]
    fn edgeless_factor_count() {
        let g = complete_multipartite(&[3, 3, 1]).unwrap();
        assert!(has_edgeless_factors(&g, 2, 2));
        assert!(!has_edgeless_factors(&g, 2, 3));
        assert!(!has_edgeless_factors(&kite(7, 3).unwrap(), 2, 1));
    }
}
