//! Maximum families of vertex-disjoint directed paths between vertex sets,
//! with the dual minimum separator.
//!
//! Internal disjointness reduces to arc capacities by splitting every vertex
//! into an in-copy and an out-copy joined by a unit arc; a max-flow then
//! yields the family and the residual cut yields the separator, so the
//! duality |family| = |S| is structural. All search orders are fixed by
//! ascending vertex id, making the returned witnesses canonical.

use crate::digraph::{Digraph, GraphError, VertexSet};
use crate::util::for_each_subset_of_size;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MengerError {
    #[error("source and sink sets must be nonempty")]
    EmptyEndpointSet,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Pairwise vertex-disjoint directed U→W paths in trimmed form: each path's
/// first vertex is its only vertex in U, its last the only one in W. A
/// vertex of U∩W may stand alone as a length-0 path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub paths: Vec<Vec<usize>>,
    pub sources: VertexSet,
    pub sinks: VertexSet,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn to_value(&self) -> Value {
        json!({ "kind": "paths", "paths": self.paths })
    }
}

/// A vertex cut S with the rest of V(D) split into A (reachable from U in
/// D−S) and B; no arc starts in A and ends in B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    pub s: VertexSet,
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Separator {
    pub fn to_value(&self) -> Value {
        json!({
            "kind": "separator",
            "S": self.s.as_slice(),
            "A": self.a.as_slice(),
            "B": self.b.as_slice(),
        })
    }
}

// unit-capacity flow network over split vertices; node ids: in-copy 2v,
// out-copy 2v+1, source 2n, sink 2n+1
struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    level: Vec<usize>,
    ptr: Vec<usize>,
}

const DEAD: usize = usize::MAX;

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            level: Vec::new(),
            ptr: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i64) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(c);
        self.adj[u].push(id);
        self.to.push(u);
        self.cap.push(0);
        self.adj[v].push(id + 1);
        id
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level = vec![DEAD; self.adj.len()];
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] == DEAD {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] != DEAD
    }

    // iterative blocking-flow DFS with the current-arc optimization
    fn blocking_flow(&mut self, s: usize, t: usize) -> i64 {
        self.ptr = vec![0; self.adj.len()];
        let mut total = 0i64;
        let mut path: Vec<usize> = Vec::new();
        let mut cur = s;
        loop {
            if cur == t {
                let aug = path.iter().map(|&e| self.cap[e]).min().unwrap();
                for &e in &path {
                    self.cap[e] -= aug;
                    self.cap[e ^ 1] += aug;
                }
                total += aug;
                path.clear();
                cur = s;
                continue;
            }
            let mut advanced = false;
            while self.ptr[cur] < self.adj[cur].len() {
                let e = self.adj[cur][self.ptr[cur]];
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] != DEAD && self.level[v] == self.level[cur] + 1
                {
                    path.push(e);
                    cur = v;
                    advanced = true;
                    break;
                }
                self.ptr[cur] += 1;
            }
            if advanced {
                continue;
            }
            if cur == s {
                break;
            }
            self.level[cur] = DEAD;
            let e = path.pop().unwrap();
            cur = self.to[e ^ 1];
            self.ptr[cur] += 1;
        }
        total
    }

    // flow assigned to a forward edge
    fn flow(&self, e: usize) -> i64 {
        self.cap[e ^ 1]
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

fn trim_path(path: &[usize], in_u: &[bool], in_w: &[bool]) -> Vec<usize> {
    let i = path.iter().rposition(|&v| in_u[v]).expect("path starts in U");
    let j = (i..path.len()).find(|&j| in_w[path[j]]).expect("path ends in W");
    path[i..=j].to_vec()
}

fn separator_parts(d: &Digraph, u: &VertexSet, s_mask: &[bool]) -> (VertexSet, VertexSet) {
    let n = d.n();
    let starts: Vec<usize> = u.iter().filter(|&v| !s_mask[v]).collect();
    let reach = d.reachable(&starts, s_mask);
    let a: Vec<usize> = (0..n).filter(|&v| reach[v]).collect();
    let b: Vec<usize> = (0..n).filter(|&v| !reach[v] && !s_mask[v]).collect();
    (VertexSet::new(a, n).unwrap(), VertexSet::new(b, n).unwrap())
}

/// Maximum family of pairwise vertex-disjoint U→W paths together with a
/// minimum separator; |family| = |S| always holds.
pub fn max_disjoint_paths(
    d: &Digraph,
    u: &VertexSet,
    w: &VertexSet,
) -> Result<(PathFamily, Separator), MengerError> {
    if u.is_empty() || w.is_empty() {
        return Err(MengerError::EmptyEndpointSet);
    }
    let n = d.n();
    for &v in u.as_slice().iter().chain(w.as_slice()) {
        if v >= n {
            return Err(MengerError::Graph(GraphError::OutOfRange { v, n }));
        }
    }
    let big = n as i64 + 1;
    let (s_node, t_node) = (2 * n, 2 * n + 1);
    let mut net = FlowNet::new(2 * n + 2);
    for v in 0..n {
        net.add_edge(2 * v, 2 * v + 1, 1);
    }
    for (x, y) in d.arcs() {
        net.add_edge(2 * x + 1, 2 * y, big);
    }
    let source_edges: Vec<(usize, usize)> =
        u.iter().map(|x| (x, net.add_edge(s_node, 2 * x, big))).collect();
    for y in w.iter() {
        net.add_edge(2 * y + 1, t_node, big);
    }

    let mut flow = 0i64;
    while net.bfs(s_node, t_node) {
        flow += net.blocking_flow(s_node, t_node);
    }

    // min cut consists of saturated internal arcs: in-copy reachable in the
    // residual network, out-copy not
    let reach = net.residual_reachable(s_node);
    let s_vertices: Vec<usize> = (0..n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
    debug_assert_eq!(s_vertices.len() as i64, flow);
    let s_set = VertexSet::new(s_vertices, n).unwrap();
    let s_mask = s_set.mask(n);
    let (a, b) = separator_parts(d, u, &s_mask);
    let separator = Separator { s: s_set, a, b };

    // decompose the flow into paths, walking the unique flow-carrying
    // out-edge from each saturated source attachment
    let in_u = u.mask(n);
    let in_w = w.mask(n);
    let mut consumed = vec![false; net.to.len()];
    let mut paths = Vec::new();
    for &(x0, se) in &source_edges {
        if net.flow(se) == 0 {
            continue;
        }
        let mut raw = vec![x0];
        let mut cur = x0;
        'walk: loop {
            // flow leaves through the out-copy of cur
            for &e in &net.adj[2 * cur + 1] {
                if e % 2 == 0 && !consumed[e] && net.flow(e) > 0 {
                    consumed[e] = true;
                    if net.to[e] == t_node {
                        break 'walk;
                    }
                    cur = net.to[e] / 2;
                    raw.push(cur);
                    continue 'walk;
                }
            }
            unreachable!("flow conservation");
        }
        paths.push(trim_path(&raw, &in_u, &in_w));
    }
    paths.sort_by_key(|p| p[0]);
    debug_assert_eq!(paths.len() as i64, flow);

    let family = PathFamily { paths, sources: u.clone(), sinks: w.clone() };
    Ok((family, separator))
}

/// Disjoint paths from N⁺(v) to N⁻(v); closing each with v gives openly
/// disjoint cycles through v. Trimming keeps v itself out of every path.
/// With d⁺(v) = 0 or d⁻(v) = 0 the family is empty and S = ∅.
pub fn separate_neighborhoods(
    d: &Digraph,
    v: usize,
) -> Result<(PathFamily, Separator), MengerError> {
    let n = d.n();
    if v >= n {
        return Err(MengerError::Graph(GraphError::OutOfRange { v, n }));
    }
    let u = VertexSet::new(d.out(v).to_vec(), n).unwrap();
    let w = VertexSet::new(d.in_neighbors(v).to_vec(), n).unwrap();
    if u.is_empty() || w.is_empty() {
        let (a, b) = separator_parts(d, &u, &vec![false; n]);
        let family = PathFamily { paths: Vec::new(), sources: u, sinks: w };
        return Ok((family, Separator { s: VertexSet::empty(), a, b }));
    }
    let (family, separator) = max_disjoint_paths(d, &u, &w)?;
    debug_assert!(family.paths.iter().all(|p| !p.contains(&v)));
    debug_assert!(u.iter().all(|x| separator.a.contains(x) || separator.s.contains(x)));
    debug_assert!(w.iter().all(|x| separator.b.contains(x) || separator.s.contains(x)));
    Ok((family, separator))
}

/// Independent checker for the PathFamily invariants against D, U, W.
pub fn verify_path_family(d: &Digraph, u: &VertexSet, w: &VertexSet, f: &PathFamily) -> bool {
    let n = d.n();
    let mut used = vec![false; n];
    for p in &f.paths {
        if p.is_empty() || p.iter().any(|&v| v >= n) {
            return false;
        }
        for pair in p.windows(2) {
            if !d.has_arc(pair[0], pair[1]) {
                return false;
            }
        }
        for &v in p {
            if used[v] {
                return false;
            }
            used[v] = true;
        }
        let first = p[0];
        let last = *p.last().unwrap();
        if !u.contains(first) || !w.contains(last) {
            return false;
        }
        if p.iter().filter(|&&v| u.contains(v)).count() != 1 {
            return false;
        }
        if p.iter().filter(|&&v| w.contains(v)).count() != 1 {
            return false;
        }
    }
    true
}

/// Independent checker for the Separator invariants: (S,A,B) partition V(D),
/// no arc runs A→B, and W is unreachable from U in D−S.
pub fn verify_separator(d: &Digraph, u: &VertexSet, w: &VertexSet, sep: &Separator) -> bool {
    let n = d.n();
    let mut owner = vec![0u8; n];
    for (tag, set) in [(1u8, &sep.s), (2, &sep.a), (3, &sep.b)] {
        for v in set.iter() {
            if v >= n || owner[v] != 0 {
                return false;
            }
            owner[v] = tag;
        }
    }
    if owner.contains(&0) {
        return false;
    }
    for (x, y) in d.arcs() {
        if owner[x] == 2 && owner[y] == 3 {
            return false;
        }
    }
    let s_mask = sep.s.mask(n);
    let starts: Vec<usize> = u.iter().filter(|&v| !s_mask[v]).collect();
    let reach = d.reachable(&starts, &s_mask);
    w.iter().all(|v| !reach[v])
}

/// Exhaustive minimum-separator oracle: the least |S| over all S ⊆ V(D)
/// such that W is unreachable from U in D−S. Independent of the flow code;
/// intended for cross-checking at small n.
pub fn min_separator_brute_force(d: &Digraph, u: &VertexSet, w: &VertexSet) -> usize {
    let n = d.n();
    for k in 0..=n {
        let mut found = false;
        for_each_subset_of_size(n, k, |s| {
            let mut s_mask = vec![false; n];
            for &v in s {
                s_mask[v] = true;
            }
            let starts: Vec<usize> = u.iter().filter(|&v| !s_mask[v]).collect();
            let reach = d.reachable(&starts, &s_mask);
            if w.iter().all(|v| !reach[v]) {
                found = true;
                return false;
            }
            true
        });
        if found {
            return k;
        }
    }
    n
}
