//! Openly disjoint directed cycles through a common hub and the invariant
//! c(D): the maximum number of directed cycles meeting pairwise exactly in
//! one shared vertex.

use crate::density::{
    dense_subdigraph, high_degree_vertex, DenseWitness, DensityError, DensityParams, SearchMode,
};
use crate::digraph::Digraph;
use crate::menger::separate_neighborhoods;
use crate::rational::rat;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::{BTreeSet, HashMap, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("digraph is not r-regular for any r >= 1")]
    NotRegular,
    #[error("brute force limited to {max} vertices, digraph has {n}")]
    TooLarge { n: usize, max: usize },
    #[error("no vertex in the dense subdigraph meets the degree threshold")]
    HubNotFound,
    #[error("soundness failure: {0}")]
    Soundness(String),
    #[error(transparent)]
    Density(#[from] DensityError),
}

/// A family of directed cycles pairwise disjoint away from the hub. Each
/// cycle is stored as its full vertex sequence `hub, ..., hub`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePacking {
    pub hub: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl CyclePacking {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn to_value(&self) -> Value {
        json!({ "cycles": self.cycles, "hub": self.hub, "size": self.cycles.len() })
    }
}

/// Record of one run of the regular-digraph packing pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    pub params: DensityParams,
    pub dense: DenseWitness,
    pub hub: usize,
    pub packing: CyclePacking,
    pub bound: usize,
    pub meets_bound: bool,
}

impl TraceReport {
    pub fn to_value(&self) -> Value {
        json!({
            "bound": self.bound,
            "dense": self.dense.to_value(),
            "hub": self.hub,
            "meets_bound": self.meets_bound,
            "packing": self.packing.to_value(),
            "params": crate::density::params_to_value(&self.params),
        })
    }
}

/// Maximum packing at hub `v`: the neighborhood path family, with each path
/// closed into a cycle through `v`. Empty when `v` lies on no cycle.
pub fn cycles_through(d: &Digraph, v: usize) -> CyclePacking {
    assert!(v < d.n(), "hub {v} out of range for {} vertices", d.n());
    let (family, _) = separate_neighborhoods(d, v).expect("hub already validated");
    let cycles = family
        .paths
        .iter()
        .map(|p| {
            let mut c = Vec::with_capacity(p.len() + 2);
            c.push(v);
            c.extend_from_slice(p);
            c.push(v);
            c
        })
        .collect();
    CyclePacking { hub: v, cycles }
}

/// Exact c(D) with a witness packing; hub ties break to the lowest id and
/// acyclic digraphs give c = 0. Hubs are evaluated in parallel but the merge
/// is order-independent, so output is deterministic.
pub fn c_number(d: &Digraph) -> (usize, CyclePacking) {
    let n = d.n();
    if n == 0 {
        return (0, CyclePacking { hub: 0, cycles: Vec::new() });
    }
    let sizes: Vec<usize> = (0..n)
        .into_par_iter()
        .map(|v| separate_neighborhoods(d, v).expect("v in range").0.len())
        .collect();
    let mut best = 0;
    let mut hub = 0;
    for (v, &s) in sizes.iter().enumerate() {
        if s > best {
            best = s;
            hub = v;
        }
    }
    (best, cycles_through(d, hub))
}

/// Checks every packing invariant against `d`: hub in range, each cycle a
/// directed closed walk of length >= 2 visiting the hub only at its ends,
/// and interiors pairwise disjoint (which also forces each cycle simple).
pub fn verify_cycle_packing(d: &Digraph, p: &CyclePacking) -> bool {
    let n = d.n();
    if p.hub >= n {
        return false;
    }
    let mut used = vec![false; n];
    for cyc in &p.cycles {
        if cyc.len() < 3 || cyc[0] != p.hub || *cyc.last().unwrap() != p.hub {
            return false;
        }
        for &w in &cyc[1..cyc.len() - 1] {
            if w >= n || w == p.hub || used[w] {
                return false;
            }
            used[w] = true;
        }
        if cyc.windows(2).any(|a| !d.has_arc(a[0], a[1])) {
            return false;
        }
    }
    true
}

const BRUTE_FORCE_MAX: usize = 8;

/// Independent oracle for c(D): enumerate all simple cycles through each
/// hub, then pack interiors by exhaustive search over vertex masks. Shares
/// no code with the flow-based computation.
pub fn c_brute_force(d: &Digraph) -> Result<usize, CycleError> {
    let n = d.n();
    if n > BRUTE_FORCE_MAX {
        return Err(CycleError::TooLarge { n, max: BRUTE_FORCE_MAX });
    }
    fn dfs(d: &Digraph, hub: usize, x: usize, mask: u16, found: &mut BTreeSet<u16>) {
        for &y in d.out(x) {
            if y == hub {
                found.insert(mask);
            } else if mask >> y & 1 == 0 {
                dfs(d, hub, y, mask | 1 << y, found);
            }
        }
    }
    fn pack(masks: &[u16], avail: u16, memo: &mut HashMap<u16, usize>) -> usize {
        if let Some(&v) = memo.get(&avail) {
            return v;
        }
        let mut best = 0;
        for &m in masks {
            if m & !avail == 0 {
                best = best.max(1 + pack(masks, avail & !m, memo));
            }
        }
        memo.insert(avail, best);
        best
    }
    let mut best = 0;
    for hub in 0..n {
        let mut interiors = BTreeSet::new();
        for &y in d.out(hub) {
            dfs(d, hub, y, 1 << y, &mut interiors);
        }
        let masks: Vec<u16> = interiors.into_iter().collect();
        let avail = ((1u16 << n) - 1) & !(1 << hub);
        best = best.max(pack(&masks, avail, &mut HashMap::new()));
    }
    Ok(best)
}

fn ceil_3r_over_22(r: usize) -> usize {
    (3 * r).div_ceil(22)
}

/// A packing of the size every r-regular digraph is guaranteed to admit,
/// ceil(3r/22). Scans hubs in ascending id and stops at the first one that
/// reaches the bound, so the result needs not be maximum.
pub fn guaranteed_packing(d: &Digraph) -> Result<CyclePacking, CycleError> {
    let r = d.is_regular().filter(|&r| r >= 1).ok_or(CycleError::NotRegular)?;
    let bound = ceil_3r_over_22(r);
    for v in 0..d.n() {
        let p = cycles_through(d, v);
        if p.len() >= bound {
            debug_assert!(verify_cycle_packing(d, &p));
            return Ok(p);
        }
    }
    Err(CycleError::Soundness(format!(
        "no hub of an {r}-regular digraph admits {bound} openly disjoint cycles"
    )))
}

/// Replays the packing guarantee's constructive pipeline on an r-regular
/// digraph: extract a dense subdigraph (beta = 3/11, gamma = 4/11), pick the
/// lowest high-in-and-out-degree vertex (delta = 4/11) inside it, and pack
/// cycles through that vertex in the whole digraph. When the dense
/// subdigraph was exactly verified, a packing below ceil(3r/22) is
/// impossible; observing one is reported as a fatal soundness error.
pub fn theorem1_trace(d: &Digraph, mode: SearchMode) -> Result<TraceReport, CycleError> {
    let r = d.is_regular().filter(|&r| r >= 1).ok_or(CycleError::NotRegular)?;
    let params = DensityParams {
        r,
        alpha: rat(3, 22),
        beta: rat(3, 11),
        gamma: rat(4, 11),
        delta: rat(4, 11),
    };
    let (dsub, dense) = dense_subdigraph(d, r, &params.beta, &params.gamma, mode)?;
    let local = high_degree_vertex(&dsub, r, &params.delta).ok_or(CycleError::HubNotFound)?;
    let hub = dense.vertices[local];
    let packing = cycles_through(d, hub);
    let bound = ceil_3r_over_22(r);
    let meets_bound = packing.len() >= bound;
    if dense.verified && !meets_bound {
        return Err(CycleError::Soundness(format!(
            "hub {hub} from a verified dense subdigraph packs {} cycles, below the guaranteed {bound}",
            packing.len()
        )));
    }
    Ok(TraceReport { params, dense, hub, packing, bound, meets_bound })
}

/// Length of a shortest directed cycle, or None for acyclic digraphs.
pub fn girth(d: &Digraph) -> Option<usize> {
    let n = d.n();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in d.out(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for &u in d.in_neighbors(s) {
            if dist[u] != usize::MAX && best.is_none_or(|b| dist[u] + 1 < b) {
                best = Some(dist[u] + 1);
            }
        }
    }
    best
}
