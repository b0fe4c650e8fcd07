//! Directed tree-width lower bounds via k-linked sets and havens, plus the
//! biorientation bridge to ordinary treewidth.
//!
//! Directed tree-width itself is never computed for general digraphs; this
//! module deals in certificates: a verified k-linked set proves dtw >= k-1,
//! and for biorientations dtw equals the treewidth of the underlying graph,
//! which a small exact oracle computes.

use crate::density::{dense_subdigraph, DensityError, SearchMode};
use crate::digraph::{Digraph, VertexSet};
use crate::rational::rat;
use crate::undirected::UndirectedGraph;
use crate::util::{for_each_subset_of_size, subsets_below};
use std::collections::VecDeque;
use thiserror::Error;

/// Largest graph the exact treewidth oracle accepts.
pub const TREEWIDTH_MAX: usize = 12;

/// Default ceiling on how many subsets a linked-set verification may visit.
pub const DEFAULT_SUBSET_BUDGET: u128 = 5_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DtwError {
    #[error("subset enumeration needs {needed} subsets, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("set is not {k}-linked: removing {failing:?} leaves no component with a majority of it")]
    NotLinked { k: usize, failing: Vec<usize> },
    #[error("certificate verified only up to {verified_upto} of {k}")]
    Unverified { k: usize, verified_upto: usize },
    #[error("query set has {got} vertices, haven of order {k} requires fewer than {k}")]
    QueryTooLarge { got: usize, k: usize },
    #[error("no strongly connected component holds a majority of the linked set")]
    NoMajority,
    #[error("chains must satisfy S \u{2286} S'")]
    NotAChain,
    #[error("treewidth oracle limited to {max} vertices, graph has {n}")]
    TooLarge { n: usize, max: usize },
    #[error("digraph is not r-regular for any r >= 1")]
    NotRegular,
    #[error("soundness failure: {0}")]
    Soundness(String),
    #[error(transparent)]
    Density(#[from] DensityError),
}

/// Outcome of a full linked-set check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkCheck {
    Linked,
    /// Smallest failing separator in size-then-lexicographic order.
    NotLinked { failing: Vec<usize> },
}

impl LinkCheck {
    pub fn is_linked(&self) -> bool {
        matches!(self, LinkCheck::Linked)
    }
}

/// A set L together with the claim that it is k-linked: every S with
/// |S| < k leaves a strongly connected component containing more than half
/// of L. `verified_upto` is the largest k' <= k for which all |S| < k' were
/// exhaustively checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkedCertificate {
    pub l: VertexSet,
    pub k: usize,
    pub verified_upto: usize,
}

impl LinkedCertificate {
    pub fn to_value(&self, bound: usize) -> serde_json::Value {
        serde_json::json!({
            "L": self.l.as_slice(),
            "bound": bound,
            "k": self.k,
            "verified_upto": self.verified_upto,
        })
    }
}

// does some SCC of d - blocked contain more than half of l?
fn has_majority_component(d: &Digraph, blocked: &[bool], l_mask: &[bool], l_size: usize) -> bool {
    d.scc_excluding(blocked)
        .iter()
        .any(|class| 2 * class.iter().filter(|&&v| l_mask[v]).count() > l_size)
}

/// Exhaustively decides whether `l` is k-linked in `d`, enumerating removal
/// sets by size then lexicographically and stopping at the first failure.
pub fn is_k_linked(
    d: &Digraph,
    l: &VertexSet,
    k: usize,
    budget: u128,
) -> Result<LinkCheck, DtwError> {
    let needed = subsets_below(d.n(), k);
    if needed > budget {
        return Err(DtwError::BudgetExceeded { needed, budget });
    }
    let l_mask = l.mask(d.n());
    let mut blocked = vec![false; d.n()];
    let mut failing: Option<Vec<usize>> = None;
    for size in 0..k {
        let all_ok = for_each_subset_of_size(d.n(), size, |s| {
            for &v in s {
                blocked[v] = true;
            }
            let ok = has_majority_component(d, &blocked, &l_mask, l.len());
            for &v in s {
                blocked[v] = false;
            }
            if !ok {
                failing = Some(s.to_vec());
            }
            ok
        });
        if !all_ok {
            return Ok(LinkCheck::NotLinked { failing: failing.unwrap() });
        }
    }
    Ok(LinkCheck::Linked)
}

/// Builds a certificate by verifying removal-set sizes 0, 1, ... in turn,
/// charging each size against the budget. Runs out of budget gracefully
/// (partial `verified_upto`); an actual failure is an error.
pub fn build_certificate(
    d: &Digraph,
    l: VertexSet,
    k: usize,
    budget: u128,
) -> Result<LinkedCertificate, DtwError> {
    let l_mask = l.mask(d.n());
    let mut blocked = vec![false; d.n()];
    let mut spent: u128 = 0;
    let mut verified_upto = 0;
    for size in 0..k {
        let count = subsets_below(d.n(), size + 1) - subsets_below(d.n(), size);
        if spent + count > budget {
            break;
        }
        spent += count;
        let mut failing: Option<Vec<usize>> = None;
        let all_ok = for_each_subset_of_size(d.n(), size, |s| {
            for &v in s {
                blocked[v] = true;
            }
            let ok = has_majority_component(d, &blocked, &l_mask, l.len());
            for &v in s {
                blocked[v] = false;
            }
            if !ok {
                failing = Some(s.to_vec());
            }
            ok
        });
        if !all_ok {
            return Err(DtwError::NotLinked { k, failing: failing.unwrap() });
        }
        verified_upto = size + 1;
    }
    Ok(LinkedCertificate { l, k, verified_upto })
}

/// The certified lower bound dtw(d) >= k - 1; refuses certificates that were
/// not verified all the way to k.
pub fn dtw_lower_bound(cert: &LinkedCertificate) -> Result<usize, DtwError> {
    if cert.verified_upto < cert.k {
        return Err(DtwError::Unverified { k: cert.k, verified_upto: cert.verified_upto });
    }
    Ok(cert.k - 1)
}

/// Lazy haven of order k induced by a k-linked set: each query S with
/// |S| < k maps to the unique strongly connected component of d - S holding
/// a majority of L. Two disjoint majorities cannot coexist, so uniqueness
/// only needs existence.
pub struct HavenEvaluator<'a> {
    d: &'a Digraph,
    l: VertexSet,
    k: usize,
}

impl<'a> HavenEvaluator<'a> {
    pub fn new(d: &'a Digraph, cert: &LinkedCertificate) -> Self {
        HavenEvaluator { d, l: cert.l.clone(), k: cert.k }
    }

    pub fn eval(&self, s: &VertexSet) -> Result<VertexSet, DtwError> {
        if s.len() >= self.k {
            return Err(DtwError::QueryTooLarge { got: s.len(), k: self.k });
        }
        let blocked = s.mask(self.d.n());
        let l_mask = self.l.mask(self.d.n());
        let majority = self
            .d
            .scc_excluding(&blocked)
            .into_iter()
            .find(|class| 2 * class.iter().filter(|&&v| l_mask[v]).count() > self.l.len())
            .ok_or(DtwError::NoMajority)?;
        Ok(VertexSet::new(majority, self.d.n()).expect("scc vertices in range"))
    }
}

/// Checks the haven containment ρ(S) ⊇ ρ(S') on every supplied chain S ⊆ S'.
pub fn verify_haven_monotonicity(
    h: &HavenEvaluator,
    chains: &[(VertexSet, VertexSet)],
) -> Result<bool, DtwError> {
    for (s, sp) in chains {
        let sp_mask = sp.mask(h.d.n());
        if !s.iter().all(|v| sp_mask[v]) {
            return Err(DtwError::NotAChain);
        }
        let big = h.eval(s)?;
        let small = h.eval(sp)?;
        let big_mask = big.mask(h.d.n());
        if !small.iter().all(|v| big_mask[v]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The graph on V(d) whose edges are the digons of d.
pub fn digon_graph(d: &Digraph) -> UndirectedGraph {
    let mut edges = Vec::new();
    for (u, v) in d.arcs() {
        if u < v && d.has_arc(v, u) {
            edges.push((u, v));
        }
    }
    UndirectedGraph::from_edge_list(d.n(), &edges).expect("digons are valid edges")
}

/// Replaces every edge by a digon; digon_graph inverts this exactly.
pub fn symmetric_orientation(f: &UndirectedGraph) -> Digraph {
    let mut arcs = Vec::with_capacity(2 * f.edge_count());
    for &(u, v) in f.edges() {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    Digraph::from_arc_list(f.n(), &arcs).expect("edges are valid arcs")
}

// count vertices outside w ∪ {v} reachable from v via interior vertices in w
fn back_degree(f: &UndirectedGraph, w_mask: u32, v: usize) -> usize {
    let mut seen = vec![false; f.n()];
    seen[v] = true;
    let mut queue = VecDeque::from([v]);
    let mut count = 0;
    while let Some(u) = queue.pop_front() {
        for &x in f.adj(u) {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            if w_mask >> x & 1 == 1 {
                queue.push_back(x);
            } else {
                count += 1;
            }
        }
    }
    count
}

/// Exact treewidth by dynamic programming over elimination orderings:
/// f(S) is the cheapest max back-degree achievable when eliminating S first,
/// where eliminating v after W costs the number of vertices outside W ∪ {v}
/// reachable from v through W.
pub fn treewidth_small(f: &UndirectedGraph) -> Result<usize, DtwError> {
    let n = f.n();
    if n > TREEWIDTH_MAX {
        return Err(DtwError::TooLarge { n, max: TREEWIDTH_MAX });
    }
    if n == 0 {
        return Ok(0);
    }
    let full: u32 = (1u32 << n) - 1;
    let mut best = vec![u8::MAX; 1usize << n];
    best[0] = 0;
    for mask in 1..=full {
        let mut value = u8::MAX;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = mask & !(1u32 << v);
            let cost = best[without as usize].max(back_degree(f, without, v) as u8);
            value = value.min(cost);
        }
        best[mask as usize] = value;
    }
    Ok(best[full as usize] as usize)
}

/// Runs the dtw pipeline on an r-regular digraph: extract a dense
/// subdigraph (beta = 1/10, gamma = 3/10), claim its vertex set is
/// (floor(r/20) + 1)-linked in d, verify that exhaustively, and return the
/// certificate with the bound floor(r/20). A verification failure after an
/// exactly verified dense subdigraph is impossible, hence fatal.
pub fn theorem2_certificate(
    d: &Digraph,
    mode: SearchMode,
    budget: u128,
) -> Result<(LinkedCertificate, usize), DtwError> {
    let r = d.is_regular().filter(|&r| r >= 1).ok_or(DtwError::NotRegular)?;
    let (_, witness) = dense_subdigraph(d, r, &rat(1, 10), &rat(3, 10), mode)?;
    let k = r / 20 + 1;
    let l = VertexSet::new(witness.vertices.clone(), d.n()).expect("witness vertices in range");
    let needed = subsets_below(d.n(), k);
    if needed > budget {
        return Err(DtwError::BudgetExceeded { needed, budget });
    }
    match build_certificate(d, l, k, budget) {
        Ok(cert) => {
            debug_assert_eq!(cert.verified_upto, k);
            Ok((cert, k - 1))
        }
        Err(DtwError::NotLinked { k, failing }) if witness.verified => {
            Err(DtwError::Soundness(format!(
                "vertex set of a verified dense subdigraph is not {k}-linked (failing set {failing:?})"
            )))
        }
        Err(e) => Err(e),
    }
}
