//! Immutable loop-free simple digraphs on vertices `0..n-1`.
//!
//! Neighbor lists are kept sorted, so every iteration order downstream is
//! deterministic. Values never change after construction; operations that
//! "modify" a digraph return a new one.

use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop arc ({0},{0}) not allowed")]
    LoopArc(usize),
    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(usize, usize),
    #[error("vertex {v} out of range for order {n}")]
    OutOfRange { v: usize, n: usize },
    #[error("vertex sets must be disjoint")]
    OverlappingSets,
}

/// Sorted duplicate-free set of vertex ids, validated against a graph order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    elems: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut elems: Vec<usize>, n: usize) -> Result<Self, GraphError> {
        elems.sort_unstable();
        elems.dedup();
        if let Some(&v) = elems.iter().find(|&&v| v >= n) {
            return Err(GraphError::OutOfRange { v, n });
        }
        Ok(VertexSet { elems })
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet { elems: (0..n).collect() }
    }

    pub fn empty() -> Self {
        VertexSet { elems: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elems.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.elems
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        // merge scan over the two sorted lists
        let (mut i, mut j) = (0, 0);
        while i < self.elems.len() && j < other.elems.len() {
            match self.elems[i].cmp(&other.elems[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let elems = self.elems.iter().copied().filter(|&v| other.contains(v)).collect();
        VertexSet { elems }
    }

    /// Membership mask of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.elems {
            m[v] = true;
        }
        m
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Vec<usize> {
        s.elems
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    m: usize,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl Digraph {
    /// Builds a digraph with exactly the given arcs. Loops, duplicates and
    /// out-of-range endpoints are each rejected with an error naming the arc.
    pub fn from_arc_list(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(arcs.len());
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in arcs {
            if u >= n {
                return Err(GraphError::OutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::LoopArc(u));
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateArc(u, v));
            }
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for l in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            l.sort_unstable();
        }
        Ok(Digraph { n, m: arcs.len(), out_adj, in_adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// a(D), the number of arcs.
    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn out(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn max_out_degree(&self) -> usize {
        self.out_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_in_degree(&self) -> usize {
        self.in_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_adj[u].iter().map(move |&v| (u, v)))
    }

    /// Some(r) iff every vertex has d⁺ = d⁻ = r.
    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let r = self.out_adj[0].len();
        for v in 0..self.n {
            if self.out_adj[v].len() != r || self.in_adj[v].len() != r {
                return None;
            }
        }
        Some(r)
    }

    /// True iff d⁺(v) = d⁻(v) for every vertex (connectivity not required).
    pub fn is_eulerian(&self) -> bool {
        (0..self.n).all(|v| self.out_adj[v].len() == self.in_adj[v].len())
    }

    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            m: self.m,
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
        }
    }

    /// Subdigraph induced by X, relabeled to 0..|X|-1. The returned vector
    /// maps new ids back to old ones (`vertices[new] = old`, ascending).
    pub fn induced(&self, x: &VertexSet) -> Result<(Digraph, Vec<usize>), GraphError> {
        if let Some(&v) = x.as_slice().iter().find(|&&v| v >= self.n) {
            return Err(GraphError::OutOfRange { v, n: self.n });
        }
        let vertices: Vec<usize> = x.as_slice().to_vec();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i;
        }
        let mut arcs = Vec::new();
        for &u in &vertices {
            for &v in &self.out_adj[u] {
                if new_id[v] != usize::MAX {
                    arcs.push((new_id[u], new_id[v]));
                }
            }
        }
        let d = Digraph::from_arc_list(vertices.len(), &arcs)?;
        Ok((d, vertices))
    }

    /// Strongly connected components as a partition: each class sorted,
    /// classes ordered by smallest member.
    pub fn scc(&self) -> Vec<Vec<usize>> {
        self.scc_excluding(&vec![false; self.n])
    }

    /// SCCs of D − {v : removed[v]}. Removed vertices appear in no class.
    pub fn scc_excluding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        assert_eq!(removed.len(), self.n);
        // iterative Tarjan
        const UNSET: usize = usize::MAX;
        let mut index = vec![UNSET; self.n];
        let mut low = vec![0usize; self.n];
        let mut on_stack = vec![false; self.n];
        let mut stack: Vec<usize> = Vec::new();
        let mut call: Vec<(usize, usize)> = Vec::new();
        let mut counter = 0usize;
        let mut comps: Vec<Vec<usize>> = Vec::new();

        for root in 0..self.n {
            if removed[root] || index[root] != UNSET {
                continue;
            }
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            call.push((root, 0));
            while let Some(frame) = call.last_mut() {
                let v = frame.0;
                if frame.1 < self.out_adj[v].len() {
                    let w = self.out_adj[v][frame.1];
                    frame.1 += 1;
                    if removed[w] {
                        continue;
                    }
                    if index[w] == UNSET {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(parent) = call.last() {
                        let p = parent.0;
                        low[p] = low[p].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// (a(X,Y), a[X,Y]) for disjoint X, Y: arcs from X into Y, and arcs
    /// between them in either direction.
    pub fn arcs_between(&self, x: &VertexSet, y: &VertexSet) -> Result<(usize, usize), GraphError> {
        if !x.is_disjoint(y) {
            return Err(GraphError::OverlappingSets);
        }
        for &v in x.as_slice().iter().chain(y.as_slice()) {
            if v >= self.n {
                return Err(GraphError::OutOfRange { v, n: self.n });
            }
        }
        let ymask = y.mask(self.n);
        let xmask = x.mask(self.n);
        let mut xy = 0usize;
        let mut yx = 0usize;
        for u in x.iter() {
            xy += self.out_adj[u].iter().filter(|&&v| ymask[v]).count();
        }
        for u in y.iter() {
            yx += self.out_adj[u].iter().filter(|&&v| xmask[v]).count();
        }
        Ok((xy, xy + yx))
    }

    /// Vertices reachable from `starts` (which are themselves reachable)
    /// without entering `blocked` vertices; starts inside `blocked` are skipped.
    pub fn reachable(&self, starts: &[usize], blocked: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &s in starts {
            if !blocked[s] && !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &self.out_adj[u] {
                if !blocked[v] && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}
