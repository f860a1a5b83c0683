//! Pendant-path rewrites (grafting, sliding, clique-attachment switching)
//! and numeric checks of how each one moves α.
//!
//! Every rewrite is an exchange of edges: each removed edge must exist and
//! each added edge must be absent, so order and size are preserved.

use alloc::vec::Vec;

use crate::graph::{is_isomorphic, kite, tailed_clique, theta_kite, Graph, TailedCliqueSpec};
use crate::spectra::{algebraic_connectivity, fiedler_vector};
use crate::{Error, Result};

/// Margin for strict inequalities between α values.
pub const STRICT_TOLERANCE: f64 = 1e-9;

/// Largest hub-coordinate spread accepted as "all equal".
pub const HUB_SPREAD_TOLERANCE: f64 = 1e-7;

/// A pendant path `root, vertices[0], ..., vertices[k-1]` hanging off `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TailSpec {
    pub root: usize,
    pub vertices: Vec<usize>,
}

impl TailSpec {
    pub fn new(root: usize, vertices: Vec<usize>) -> Self {
        TailSpec { root, vertices }
    }

    /// Tail `first, first+1, ..., first+len-1`, as built by `attach_path`.
    pub fn consecutive(root: usize, first: usize, len: usize) -> Self {
        TailSpec::new(root, (first..first + len).collect())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Last tail vertex, or the root for an empty tail.
    pub fn end(&self) -> usize {
        self.vertices.last().copied().unwrap_or(self.root)
    }

    fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// The tail is nonempty, avoids its root, is a path from the root, and
    /// touches the rest of `g` only through the root.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        if self.vertices.is_empty() {
            return Err(Error::InvalidTail("tail has no vertices"));
        }
        if self.root >= n || self.vertices.iter().any(|&v| v >= n) {
            return Err(Error::InvalidTail("tail vertex out of range"));
        }
        if self.mask().count_ones() as usize != self.len() || self.mask() & 1 << self.root != 0 {
            return Err(Error::InvalidTail("tail vertices repeat or include the root"));
        }
        let mut prev = self.root;
        for (i, &v) in self.vertices.iter().enumerate() {
            let mut expected = 1u64 << prev;
            if let Some(&next) = self.vertices.get(i + 1) {
                expected |= 1 << next;
            }
            if g.neighbors(v) != expected {
                return Err(Error::InvalidTail("tail is not a pendant path at its root"));
            }
            prev = v;
        }
        Ok(())
    }
}

/// Applies an edge exchange, refusing to remove a non-edge or add an edge
/// that already exists.
fn exchange(g: &Graph, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Graph> {
    let mut h = g.clone();
    for &(a, b) in remove {
        if !h.has_edge(a, b) {
            return Err(Error::InvalidParameter("rewrite removes a missing edge"));
        }
        h.remove_edge(a, b)?;
    }
    for &(a, b) in add {
        if a == b || h.has_edge(a, b) {
            return Err(Error::InvalidParameter("rewrite adds an existing edge"));
        }
        h.add_edge(a, b)?;
    }
    Ok(h)
}

fn check_disjoint(p: &TailSpec, q: &TailSpec) -> Result<()> {
    if p.mask() & q.mask() != 0 || p.mask() & 1 << q.root != 0 || q.mask() & 1 << p.root != 0 {
        return Err(Error::InvalidTail("tails overlap"));
    }
    Ok(())
}

/// Re-roots each tail onto the other's far end.
///
/// With `P = u u_1 ... u_k` and `Q = v v_1 ... v_l` returns
/// `(G - u u_1 + u_1 v_l, G - v v_1 + u_k v_1)`.
pub fn graft_endpoints(g: &Graph, p: &TailSpec, q: &TailSpec) -> Result<(Graph, Graph)> {
    p.validate(g)?;
    q.validate(g)?;
    if p.root == q.root {
        return Err(Error::InvalidTail("grafting needs distinct roots"));
    }
    check_disjoint(p, q)?;
    let (u, u1, uk) = (p.root, p.vertices[0], p.end());
    let (v, v1, vl) = (q.root, q.vertices[0], q.end());
    let first = exchange(g, &[(u, u1)], &[(u1, vl)])?;
    let second = exchange(g, &[(v, v1)], &[(uk, v1)])?;
    Ok((first, second))
}

/// Moves the last vertex of `q` to the end of `p`; both tails share a root
/// and `|p| >= |q| >= 1`.
///
/// Returns `G - v_{l-1} v_l + u_k v_l` with `v_0 = u`.
pub fn slide_tail(g: &Graph, p: &TailSpec, q: &TailSpec) -> Result<Graph> {
    if q.is_empty() {
        return Err(Error::InvalidTail("slide needs a nonempty second tail"));
    }
    p.validate(g)?;
    q.validate(g)?;
    if p.root != q.root {
        return Err(Error::InvalidTail("slide needs both tails at one root"));
    }
    if p.len() < q.len() {
        return Err(Error::InvalidTail("slide needs the first tail at least as long as the second"));
    }
    check_disjoint(p, q)?;
    let l = q.len();
    let vl = q.vertices[l - 1];
    let before = if l == 1 { q.root } else { q.vertices[l - 2] };
    exchange(g, &[(before, vl)], &[(p.end(), vl)])
}

/// The tails after [`slide_tail`]: `p` gains the moved vertex, `q` loses it.
pub fn slid_tails(p: &TailSpec, q: &TailSpec) -> (TailSpec, TailSpec) {
    let mut p2 = p.clone();
    let mut q2 = q.clone();
    if let Some(v) = q2.vertices.pop() {
        p2.vertices.push(v);
    }
    (p2, q2)
}

/// Moves the hubs' attachment from `u` to `v_1`, and from `v` to `u_1`.
///
/// The first graph is isomorphic to `tailed_clique(r, k+1, l-1)`, the
/// second to `tailed_clique(r, k-1, l+1)`.
pub fn switch_clique_attachment(spec: TailedCliqueSpec) -> Result<(Graph, Graph)> {
    if spec.k == 0 || spec.l == 0 {
        return Err(Error::InvalidParameter("switching needs both tails nonempty"));
    }
    let g = tailed_clique(spec)?;
    let (u, v) = (spec.u(), spec.v());
    let (u1, v1) = (spec.u_tail().start, spec.v_tail().start);
    let hubs: Vec<usize> = spec.hubs().collect();
    let pairs = |a: usize| hubs.iter().map(move |&w| (a, w)).collect::<Vec<_>>();
    let toward_v = exchange(&g, &pairs(u), &pairs(v1))?;
    let toward_u = exchange(&g, &pairs(v), &pairs(u1))?;
    Ok((toward_v, toward_u))
}

/// α before and after one graft. The conclusion is asserted only when α is
/// simple and the tail ends have Fiedler coordinates of equal sign.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GraftReport {
    pub alpha: f64,
    pub alpha_first: f64,
    pub alpha_second: f64,
    pub end_product: f64,
    pub hypothesis: bool,
    /// `None` when the hypothesis fails.
    pub holds: Option<bool>,
}

pub fn graft_check(g: &Graph, p: &TailSpec, q: &TailSpec) -> Result<GraftReport> {
    let (first, second) = graft_endpoints(g, p, q)?;
    let x = fiedler_vector(g)?;
    let end_product = x.values[p.end()] * x.values[q.end()];
    let hypothesis = x.is_simple() && end_product >= 0.0;
    let alpha_first = algebraic_connectivity(&first)?;
    let alpha_second = algebraic_connectivity(&second)?;
    let holds = hypothesis.then(|| x.alpha >= alpha_first.min(alpha_second) - STRICT_TOLERANCE);
    Ok(GraftReport {
        alpha: x.alpha,
        alpha_first,
        alpha_second,
        end_product,
        hypothesis,
        holds,
    })
}

/// α before and after one slide. Strictness is reported, not asserted: it
/// depends on which Fiedler vector the solver returns when α is repeated.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SlideReport {
    pub alpha_before: f64,
    pub alpha_after: f64,
    pub holds: bool,
    /// `X(u_1) != 0` or `X(v_1) != 0`; `None` when α is repeated.
    pub strict_expected: Option<bool>,
    pub strict_observed: bool,
}

pub fn slide_check(g: &Graph, p: &TailSpec, q: &TailSpec) -> Result<SlideReport> {
    let h = slide_tail(g, p, q)?;
    let x = fiedler_vector(g)?;
    let alpha_after = algebraic_connectivity(&h)?;
    let nonzero = |v: usize| x.values[v].abs() > STRICT_TOLERANCE;
    Ok(SlideReport {
        alpha_before: x.alpha,
        alpha_after,
        holds: x.alpha >= alpha_after - STRICT_TOLERANCE,
        strict_expected: x.is_simple().then(|| nonzero(p.vertices[0]) || nonzero(q.vertices[0])),
        strict_observed: x.alpha > alpha_after + STRICT_TOLERANCE,
    })
}

/// α of a tailed clique against both of its switches.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SwitchReport {
    pub spec: TailedCliqueSpec,
    pub alpha: f64,
    /// α of the switch isomorphic to `G_{k+1,l-1}`.
    pub alpha_longer_u: f64,
    /// α of the switch isomorphic to `G_{k-1,l+1}`.
    pub alpha_longer_v: f64,
    pub shapes_ok: bool,
    /// α exceeds the smaller of the two switched values.
    pub holds: bool,
}

pub fn switch_check(spec: TailedCliqueSpec) -> Result<SwitchReport> {
    let (a, b) = switch_clique_attachment(spec)?;
    let expect_a = tailed_clique(TailedCliqueSpec::new(spec.r, spec.k + 1, spec.l - 1)?)?;
    let expect_b = tailed_clique(TailedCliqueSpec::new(spec.r, spec.k - 1, spec.l + 1)?)?;
    let alpha = algebraic_connectivity(&tailed_clique(spec)?)?;
    let alpha_longer_u = algebraic_connectivity(&a)?;
    let alpha_longer_v = algebraic_connectivity(&b)?;
    Ok(SwitchReport {
        spec,
        alpha,
        alpha_longer_u,
        alpha_longer_v,
        shapes_ok: is_isomorphic(&a, &expect_a) && is_isomorphic(&b, &expect_b),
        holds: alpha > alpha_longer_u.min(alpha_longer_v) + STRICT_TOLERANCE,
    })
}

/// Sign structure of the Fiedler vector of a tailed clique, oriented so the
/// common hub coordinate is nonnegative.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FiedlerSignReport {
    pub spec: TailedCliqueSpec,
    pub alpha: f64,
    pub multiplicity: usize,
    /// α is repeated, so the vector is not determined; nothing is asserted.
    pub skipped: bool,
    /// `max - min` over the hub coordinates (0 when `r = 3`).
    pub hub_spread: f64,
    pub hub_value: f64,
    /// `X(u_k) X(v_l)`.
    pub end_product: f64,
    /// Along the tail whose end is positive, coordinates strictly increase
    /// from the hubs through the root to the end.
    pub monotone: bool,
}

impl FiedlerSignReport {
    pub fn holds(&self) -> bool {
        self.skipped || (self.hub_spread <= HUB_SPREAD_TOLERANCE && self.end_product < -STRICT_TOLERANCE && self.monotone)
    }
}

pub fn fiedler_sign_report(spec: TailedCliqueSpec) -> Result<FiedlerSignReport> {
    if spec.k == 0 || spec.l == 0 {
        return Err(Error::InvalidParameter("sign structure needs both tails nonempty"));
    }
    let g = tailed_clique(spec)?;
    let x = fiedler_vector(&g)?;
    let skipped = !x.is_simple();
    let mut values = x.values;
    let hubs: Vec<f64> = spec.hubs().map(|w| values[w]).collect();
    let (lo, hi) = hubs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &h| (lo.min(h), hi.max(h)));
    let hub_value = hubs.iter().sum::<f64>() / hubs.len() as f64;
    if hub_value < 0.0 {
        values.iter_mut().for_each(|x| *x = -*x);
    }
    let uk = values[spec.u_tail().end - 1];
    let vl = values[spec.v_tail().end - 1];
    let (root, tail) = if uk > 0.0 {
        (spec.u(), spec.u_tail())
    } else {
        (spec.v(), spec.v_tail())
    };
    let mut chain = Vec::with_capacity(spec.k.max(spec.l) + 2);
    chain.push(hub_value.abs());
    chain.push(values[root]);
    chain.extend(tail.map(|t| values[t]));
    let monotone = (uk > 0.0 || vl > 0.0) && chain.windows(2).all(|w| w[1] > w[0] + STRICT_TOLERANCE);
    Ok(FiedlerSignReport {
        spec,
        alpha: x.alpha,
        multiplicity: x.multiplicity,
        skipped,
        hub_spread: hi - lo,
        hub_value: hub_value.abs(),
        end_product: uk * vl,
        monotone,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ThetaKiteComparison {
    pub r: usize,
    pub k: usize,
    pub alpha_theta: f64,
    pub alpha_kite: f64,
}

impl ThetaKiteComparison {
    pub fn strict(&self) -> bool {
        self.alpha_theta > self.alpha_kite + STRICT_TOLERANCE
    }
}

/// α of `theta_kite(r, k)` next to α of `kite(r + k, r)`.
pub fn theta_vs_kite(r: usize, k: usize) -> Result<ThetaKiteComparison> {
    let theta = theta_kite(r, k)?;
    let alpha_kite = algebraic_connectivity(&kite(r + k, r)?)?;
    Ok(ThetaKiteComparison {
        r,
        k,
        alpha_theta: algebraic_connectivity(&theta)?,
        alpha_kite,
    })
}

/// One cell of a tailed-clique α table.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SweepRow {
    pub r: usize,
    pub k: usize,
    pub l: usize,
    pub alpha: f64,
}

/// α of `tailed_clique(r, k, l)` for every `k >= l >= 0` with
/// `1 <= k + l <= max_tail`, ordered by `(k + l, k)`.
pub fn tailed_clique_sweep(r: usize, max_tail: usize) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for total in 1..=max_tail {
        for k in total.div_ceil(2)..=total {
            let l = total - k;
            let g = tailed_clique(TailedCliqueSpec::new(r, k, l)?)?;
            rows.push(SweepRow {
                r,
                k,
                l,
                alpha: algebraic_connectivity(&g)?,
            });
        }
    }
    Ok(rows)
}

/// α of every `G_{k,l}` with `k >= l >= 1` and `k + l = n - r`, against the
/// kite on the same order.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct KiteChain {
    pub r: usize,
    pub n: usize,
    /// Ordered by increasing `k`.
    pub entries: Vec<SweepRow>,
    pub kite_alpha: f64,
}

impl KiteChain {
    pub fn strictly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].alpha > w[1].alpha + STRICT_TOLERANCE)
    }

    pub fn above_kite(&self) -> bool {
        self.entries.iter().all(|e| e.alpha > self.kite_alpha + STRICT_TOLERANCE)
    }
}

pub fn kite_minimality_chain(r: usize, n: usize) -> Result<KiteChain> {
    if r < 3 || n < r + 2 {
        return Err(Error::InvalidParameter("kite chain needs r >= 3 and n >= r + 2"));
    }
    let total = n - r;
    let mut entries = Vec::new();
    for k in total.div_ceil(2)..total {
        let l = total - k;
        let g = tailed_clique(TailedCliqueSpec::new(r, k, l)?)?;
        entries.push(SweepRow {
            r,
            k,
            l,
            alpha: algebraic_connectivity(&g)?,
        });
    }
    Ok(KiteChain {
        r,
        n,
        entries,
        kite_alpha: algebraic_connectivity(&kite(n, r)?)?,
    })
}

/// A failed α comparison on the tailed-clique grid.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum RewriteViolation {
    /// `α(G_{k,l}) <= α(G_{k+1,l-1}) + tol`.
    NotDecreasing { k: usize, l: usize, alpha: f64, next: f64 },
    NotAboveKite { k: usize, l: usize, alpha: f64, kite: f64 },
    ThetaNotAbove { k: usize, theta: f64, kite: f64 },
    SwitchShape { k: usize, l: usize },
    SwitchNotAboveMin { k: usize, l: usize },
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RewriteGridReport {
    pub r: usize,
    pub max_tail: usize,
    pub comparisons: usize,
    pub violations: Vec<RewriteViolation>,
}

/// For every `k >= l >= 1` with `k + l <= max_tail`: α decreases when one
/// vertex moves from the shorter tail to the longer, every tailed clique
/// beats the kite of its order, each switch has the expected shape and α
/// beats the smaller switch. Also `theta_kite(r, k)` beats the kite for
/// `k <= max_tail`.
pub fn verify_rewrite_grid(r: usize, max_tail: usize) -> Result<RewriteGridReport> {
    let rows = tailed_clique_sweep(r, max_tail)?;
    let alpha_of = |k: usize, l: usize| rows.iter().find(|row| row.k == k && row.l == l).map(|row| row.alpha);
    let mut violations = Vec::new();
    let mut comparisons = 0;
    for row in rows.iter().filter(|row| row.l >= 1) {
        let (k, l) = (row.k, row.l);
        let next = alpha_of(k + 1, l - 1).expect("grid is closed under the move");
        let kite_alpha = alpha_of(k + l, 0).expect("kite row present");
        comparisons += 3;
        if row.alpha <= next + STRICT_TOLERANCE {
            violations.push(RewriteViolation::NotDecreasing {
                k,
                l,
                alpha: row.alpha,
                next,
            });
        }
        if row.alpha <= kite_alpha + STRICT_TOLERANCE {
            violations.push(RewriteViolation::NotAboveKite {
                k,
                l,
                alpha: row.alpha,
                kite: kite_alpha,
            });
        }
        let switch = switch_check(TailedCliqueSpec::new(r, k, l)?)?;
        if !switch.shapes_ok {
            violations.push(RewriteViolation::SwitchShape { k, l });
        }
        if !switch.holds {
            violations.push(RewriteViolation::SwitchNotAboveMin { k, l });
        }
    }
    for k in 1..=max_tail {
        let cmp = theta_vs_kite(r, k)?;
        comparisons += 1;
        if !cmp.strict() {
            violations.push(RewriteViolation::ThetaNotAbove {
                k,
                theta: cmp.alpha_theta,
                kite: cmp.alpha_kite,
            });
        }
    }
    Ok(RewriteGridReport {
        r,
        max_tail,
        comparisons,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{attach_path, complete, path, star};

    fn spec(r: usize, k: usize, l: usize) -> TailedCliqueSpec {
        TailedCliqueSpec::new(r, k, l).unwrap()
    }

    fn tails(s: TailedCliqueSpec) -> (TailSpec, TailSpec) {
        (
            TailSpec::consecutive(s.u(), s.u_tail().start, s.k),
            TailSpec::consecutive(s.v(), s.v_tail().start, s.l),
        )
    }

    #[test]
    fn tail_validation() {
        let g = tailed_clique(spec(3, 2, 1)).unwrap();
        let (p, q) = tails(spec(3, 2, 1));
        assert!(p.validate(&g).is_ok() && q.validate(&g).is_ok());
        assert!(TailSpec::new(0, alloc::vec![4]).validate(&g).is_err());
        assert!(TailSpec::new(0, alloc::vec![3]).validate(&g).is_err(), "stops before the end");
        assert!(TailSpec::new(0, alloc::vec![]).validate(&g).is_err());
        assert!(TailSpec::new(0, alloc::vec![1]).validate(&g).is_err(), "clique vertex is not pendant");
        assert!(matches!(graft_endpoints(&g, &p, &p), Err(Error::InvalidTail(_))));
    }

    #[test]
    fn graft_on_bull_gives_paw_tails() {
        let s = spec(3, 1, 1);
        let g = tailed_clique(s).unwrap();
        let (p, q) = tails(s);
        let (a, b) = graft_endpoints(&g, &p, &q).unwrap();
        let target = kite(5, 3).unwrap();
        assert!(is_isomorphic(&a, &target) && is_isomorphic(&b, &target));
        for h in [&a, &b] {
            assert_eq!((h.order(), h.edge_count()), (g.order(), g.edge_count()));
        }
    }

    #[test]
    fn graft_conclusion_when_hypothesis_holds() {
        // a long path at vertex 0 pulls the short tails at 1 and 2 onto the
        // same side of the Fiedler vector
        let mut seen = 0;
        for base in [complete(4).unwrap(), crate::graph::cycle(5).unwrap(), star(4).unwrap()] {
            let base = attach_path(&base, 0, 6).unwrap();
            for k in 1..4 {
                for l in 1..4 {
                    let m = base.order();
                    let g = attach_path(&attach_path(&base, 1, k).unwrap(), 2, l).unwrap();
                    let p = TailSpec::consecutive(1, m, k);
                    let q = TailSpec::consecutive(2, m + k, l);
                    let rep = graft_check(&g, &p, &q).unwrap();
                    if rep.hypothesis {
                        seen += 1;
                        assert_eq!(rep.holds, Some(true), "k={k} l={l} {rep:?}");
                    } else {
                        assert_eq!(rep.holds, None);
                    }
                }
            }
        }
        assert!(seen > 0, "hypothesis never met");
    }

    #[test]
    fn slide_examples() {
        // two single-vertex tails at the center of K_1 form P_3; sliding
        // gives P_3 rooted at an end, i.e. the same path relabelled
        let g = path(3).unwrap().relabel(&[1, 0, 2]).unwrap();
        let p = TailSpec::new(0, alloc::vec![1]);
        let q = TailSpec::new(0, alloc::vec![2]);
        let h = slide_tail(&g, &p, &q).unwrap();
        assert_eq!(h, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());

        let base = complete(3).unwrap();
        let g = attach_path(&attach_path(&base, 0, 2).unwrap(), 0, 2).unwrap();
        let mut p = TailSpec::consecutive(0, 3, 2);
        let mut q = TailSpec::consecutive(0, 5, 2);
        let mut cur = g.clone();
        while !q.is_empty() {
            let rep = slide_check(&cur, &p, &q).unwrap();
            assert!(rep.holds, "{rep:?}");
            cur = slide_tail(&cur, &p, &q).unwrap();
            assert_eq!(cur.edge_count(), g.edge_count());
            (p, q) = slid_tails(&p, &q);
            assert!(p.validate(&cur).is_ok());
        }
        assert!(is_isomorphic(&cur, &kite(7, 3).unwrap()));
    }

    #[test]
    fn slide_errors() {
        let g = attach_path(&attach_path(&complete(3).unwrap(), 0, 1).unwrap(), 1, 2).unwrap();
        let p = TailSpec::consecutive(0, 3, 1);
        let q = TailSpec::consecutive(1, 4, 2);
        assert!(slide_tail(&g, &q, &p).is_err(), "distinct roots");
        assert!(slide_tail(&g, &p, &TailSpec::new(0, alloc::vec![])).is_err());
    }

    #[test]
    fn switch_examples() {
        let (a, b) = switch_clique_attachment(spec(3, 1, 1)).unwrap();
        let paw_tail = kite(5, 3).unwrap();
        assert!(is_isomorphic(&a, &paw_tail) && is_isomorphic(&b, &paw_tail));
        for r in 3..6 {
            for k in 1..4 {
                for l in 1..4 {
                    let rep = switch_check(spec(r, k, l)).unwrap();
                    assert!(rep.shapes_ok && rep.holds, "{rep:?}");
                }
            }
        }
        assert!(switch_clique_attachment(spec(4, 0, 2)).is_err());
        assert!(switch_clique_attachment(spec(4, 2, 0)).is_err());
    }

    #[test]
    fn fiedler_sign_examples() {
        for (r, k, l) in [(3, 2, 2), (4, 3, 1), (5, 2, 2), (3, 4, 4)] {
            let rep = fiedler_sign_report(spec(r, k, l)).unwrap();
            assert!(rep.skipped || rep.holds(), "{rep:?}");
        }
        let rep = fiedler_sign_report(spec(4, 3, 1)).unwrap();
        assert!(!rep.skipped && rep.hub_spread <= 1e-7 && rep.end_product < -1e-9 && rep.monotone);
        assert!(fiedler_sign_report(spec(4, 3, 0)).is_err());
    }

    #[test]
    fn theta_beats_kite() {
        let cmp = theta_vs_kite(3, 1).unwrap();
        assert!((cmp.alpha_kite - 1.0).abs() < 1e-9 && cmp.strict());
        assert!(theta_vs_kite(4, 3).unwrap().strict());
        assert!(theta_vs_kite(2, 3).is_err());
    }

    #[test]
    fn chain_examples() {
        let c = kite_minimality_chain(3, 7).unwrap();
        let kl: alloc::vec::Vec<_> = c.entries.iter().map(|e| (e.k, e.l)).collect();
        assert_eq!(kl, [(2, 2), (3, 1)]);
        assert!(c.strictly_decreasing() && c.above_kite());
        assert!(kite_minimality_chain(4, 8).unwrap().strictly_decreasing());
        let single = kite_minimality_chain(5, 7).unwrap();
        assert_eq!(single.entries.len(), 1);
        assert!(single.above_kite());
        assert!(kite_minimality_chain(3, 4).is_err());
    }

    #[test]
    fn sweep_shape() {
        let rows = tailed_clique_sweep(3, 3).unwrap();
        let kl: alloc::vec::Vec<_> = rows.iter().map(|e| (e.k, e.l)).collect();
        assert_eq!(kl, [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0)]);
        // tailed_clique(3, 1, 0) is the paw
        assert!((rows[0].alpha - 1.0).abs() < 1e-9);
    }

    #[test]
    fn small_grid_is_clean() {
        let rep = verify_rewrite_grid(3, 5).unwrap();
        assert!(rep.violations.is_empty(), "{:?}", rep.violations);
        assert!(rep.comparisons > 0);
    }
}
