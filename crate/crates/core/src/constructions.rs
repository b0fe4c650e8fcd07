//! Generators: blow-ups, cylindrical walls, complete biorientations,
//! one-way joins and seeded random regular digraphs.

use crate::digraph::Digraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("blow-up factor must be at least 1")]
    ZeroFactor,
    #[error("wall order must be at least 1")]
    ZeroOrder,
    #[error("complete biorientation needs at least 1 vertex")]
    ZeroVertices,
    #[error("degree {r} is not between 1 and {n} minus 1 for {n} vertices")]
    InvalidDegree { n: usize, r: usize },
    #[error("random regular sampling gave up after {0} permutation draws")]
    RetriesExhausted(usize),
}

/// Replaces each vertex by `b` copies (vertex v becomes ids v*b..v*b+b) and
/// each arc by the complete bipartite arc set between the copy groups. An
/// r-regular input yields an rb-regular output.
pub fn blow_up(d: &Digraph, b: usize) -> Result<Digraph, ConstructionError> {
    if b == 0 {
        return Err(ConstructionError::ZeroFactor);
    }
    let mut arcs = Vec::with_capacity(d.arc_count() * b * b);
    for (u, v) in d.arcs() {
        for i in 0..b {
            for j in 0..b {
                arcs.push((u * b + i, v * b + j));
            }
        }
    }
    Ok(Digraph::from_arc_list(d.n() * b, &arcs).expect("blow-up of a valid digraph is valid"))
}

/// Row-major layout of the wall's grid: coordinates range over 1..=2k in
/// both axes and (x, y) gets id (y-1)*2k + (x-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WallCoords {
    k: usize,
}

impl WallCoords {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Grid side length 2k.
    pub fn side(&self) -> usize {
        2 * self.k
    }

    pub fn id(&self, x: usize, y: usize) -> usize {
        let s = self.side();
        assert!((1..=s).contains(&x) && (1..=s).contains(&y), "coordinates out of grid");
        (y - 1) * s + (x - 1)
    }

    pub fn coords(&self, id: usize) -> (usize, usize) {
        let s = self.side();
        assert!(id < s * s, "id out of grid");
        (id % s + 1, id / s + 1)
    }
}

/// The cylindrical wall of order k on the grid [2k] x [2k]: odd rows point
/// right, even rows point left, and vertical arcs go upward (wrapping from
/// row 2k to row 1) in columns whose parity is opposite to the row's.
pub fn cylindrical_wall(k: usize) -> Result<(Digraph, WallCoords), ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::ZeroOrder);
    }
    let coords = WallCoords { k };
    let s = 2 * k;
    let up = |y: usize| if y == s { 1 } else { y + 1 };
    let mut arcs = Vec::with_capacity(s * (s - 1) + 2 * k * k);
    for y in 1..=s {
        for x in 1..=s {
            if y % 2 == 1 && x < s {
                arcs.push((coords.id(x, y), coords.id(x + 1, y)));
            }
            if y % 2 == 0 && x > 1 {
                arcs.push((coords.id(x, y), coords.id(x - 1, y)));
            }
            if x % 2 == 1 && y % 2 == 0 {
                arcs.push((coords.id(x, y), coords.id(x, up(y))));
            }
            if x % 2 == 0 && y % 2 == 1 {
                arcs.push((coords.id(x, y), coords.id(x, up(y))));
            }
        }
    }
    let d = Digraph::from_arc_list(s * s, &arcs).expect("wall rules produce a valid digraph");
    Ok((d, coords))
}

/// All n(n-1) ordered pairs: the (n-1)-regular digraph with every digon.
pub fn complete_biorientation(n: usize) -> Result<Digraph, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::ZeroVertices);
    }
    let mut arcs = Vec::with_capacity(n * (n - 1));
    for u in 0..n {
        for v in 0..n {
            if u != v {
                arcs.push((u, v));
            }
        }
    }
    Ok(Digraph::from_arc_list(n, &arcs).expect("complete biorientation is valid"))
}

/// Disjoint union of f1 (ids kept) and f2 (ids shifted by v(f1)), plus every
/// arc from f2 to f1. No arc returns, so the strongly connected components
/// are exactly those of the two parts.
pub fn join_construction(f1: &Digraph, f2: &Digraph) -> Digraph {
    let n1 = f1.n();
    let mut arcs: Vec<(usize, usize)> = f1.arcs().collect();
    arcs.extend(f2.arcs().map(|(u, v)| (u + n1, v + n1)));
    for u in 0..f2.n() {
        for v in 0..n1 {
            arcs.push((u + n1, v));
        }
    }
    Digraph::from_arc_list(n1 + f2.n(), &arcs).expect("join of valid digraphs is valid")
}

const PERMUTATION_DRAW_BUDGET: usize = 10_000;

/// An r-regular loop-free digraph sampled as the union of r fixed-point-free
/// permutations of [n] with pairwise disjoint arc sets. Each permutation is
/// drawn by assigning random still-available targets in a random vertex
/// order, rejecting and redrawing on a dead end. Deterministic for a fixed
/// seed. Not a uniform sampler over r-regular digraphs; exact regularity
/// and reproducibility are the contract.
pub fn random_regular_digraph(
    n: usize,
    r: usize,
    seed: u64,
) -> Result<Digraph, ConstructionError> {
    if r == 0 || r >= n {
        return Err(ConstructionError::InvalidDegree { n, r });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut successor: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order: Vec<usize> = (0..n).collect();
    let mut draws = 0;
    for _ in 0..r {
        let target = loop {
            draws += 1;
            if draws > PERMUTATION_DRAW_BUDGET {
                return Err(ConstructionError::RetriesExhausted(PERMUTATION_DRAW_BUDGET));
            }
            order.shuffle(&mut rng);
            let mut target = vec![usize::MAX; n];
            let mut taken = vec![false; n];
            let complete = order.iter().all(|&v| {
                let candidates: Vec<usize> = (0..n)
                    .filter(|&w| w != v && !taken[w] && !successor[v].contains(&w))
                    .collect();
                match candidates.get(rng.gen_range(0..candidates.len().max(1))) {
                    Some(&w) => {
                        target[v] = w;
                        taken[w] = true;
                        true
                    }
                    None => false,
                }
            });
            if complete {
                break target;
            }
        };
        for v in 0..n {
            successor[v].push(target[v]);
        }
    }
    let arcs: Vec<(usize, usize)> =
        (0..n).flat_map(|v| successor[v].iter().map(move |&w| (v, w))).collect();
    Ok(Digraph::from_arc_list(n, &arcs)
        .expect("disjoint fixed-point-free permutations give a valid digraph"))
}
