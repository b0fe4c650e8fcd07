//! Density machinery over exact rational parameters.
//!
//! A digraph is (r,β,γ)-dense when v(D) ≥ γr and a(D) ≥ r·v(D) − βr², both
//! non-strict. Every threshold comparison here is exact; the interesting
//! parameter sets sit exactly on inequality boundaries, so floats would be
//! wrong, not just sloppy.

use crate::digraph::{Digraph, VertexSet};
use crate::dtw;
use crate::rational::{
    ceil_to_usize, perfect_sqrt, rat, rat_usize, sqrt_enclosure, Rational, Surd,
};
use num::{One, Signed, ToPrimitive};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::cmp::Ordering;
use thiserror::Error;

/// Hard ceiling for the exact bitmask partition search.
const EXACT_HARD_LIMIT: usize = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DensityError {
    #[error("input digraph is not dense for the given parameters")]
    NotDense,
    #[error("exact partition search capped at {cap} vertices, digraph has {n}")]
    CapExceeded { n: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("soundness failure: {0}")]
    Soundness(String),
    #[error("treewidth oracle limited to {max} vertices, graph has {n}")]
    OracleTooLarge { n: usize, max: usize },
}

/// How partitions are searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Exhaustive over all bipartitions; complete up to `cap` vertices.
    Exact { cap: usize },
    /// Seeded multi-start local search; may miss violations.
    Heuristic { seed: u64, starts: usize },
}

impl Default for SearchMode {
    fn default() -> Self {
        SearchMode::Exact { cap: 20 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeptSide {
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseStep {
    /// The X side of the violating partition, in original vertex ids.
    pub cut_x: Vec<usize>,
    pub kept: KeptSide,
}

/// Recursion transcript of a dense-subdigraph extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseWitness {
    /// Original vertex ids of the returned subdigraph, ascending.
    pub vertices: Vec<usize>,
    /// True only when the final no-violation claim was checked exhaustively.
    pub verified: bool,
    pub steps: Vec<DenseStep>,
}

impl DenseWitness {
    pub fn to_value(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| {
                json!({
                    "cut_X": s.cut_x,
                    "kept": match s.kept { KeptSide::X => "X", KeptSide::Y => "Y" },
                })
            })
            .collect();
        json!({ "steps": steps, "verified": self.verified, "vertices": self.vertices })
    }
}

/// Parameter bundle for trace reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityParams {
    pub r: usize,
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

/// v(D) ≥ γr and a(D) ≥ r·v(D) − βr², both non-strict, exact.
pub fn is_dense(d: &Digraph, r: usize, beta: &Rational, gamma: &Rational) -> bool {
    let v = rat_usize(d.n());
    let a = rat_usize(d.arc_count());
    let rr = rat_usize(r);
    v >= gamma * &rr && a >= &rr * &v - beta * &rr * &rr
}

// cut threshold comparator: cut ≤ βr², hoisted out of the enumeration loop
struct CutThreshold {
    fast: Option<(i128, i128)>, // (numer, denom) of βr²
    exact: Rational,
}

impl CutThreshold {
    fn new(r: usize, beta: &Rational) -> Self {
        let exact = beta * rat_usize(r) * rat_usize(r);
        let fast = match (exact.numer().to_i128(), exact.denom().to_i128()) {
            (Some(p), Some(q)) => Some((p, q)),
            _ => None,
        };
        CutThreshold { fast, exact }
    }

    fn violated_by(&self, cut: u64) -> bool {
        match self.fast {
            Some((p, q)) => (cut as i128) * q <= p,
            None => rat_usize(cut as usize) <= self.exact,
        }
    }
}

/// Minimum side size |X| ≥ γr for integer |X|.
fn min_side(r: usize, gamma: &Rational) -> usize {
    ceil_to_usize(&(gamma * rat_usize(r)))
}

fn cut_value(d: &Digraph, in_x: &[bool]) -> u64 {
    let mut cut = 0u64;
    for (u, v) in d.arcs() {
        if in_x[u] != in_x[v] {
            cut += 1;
        }
    }
    cut
}

/// A partition (X,Y) with |X|,|Y| ≥ γr and a[X,Y] ≤ βr², if the search finds
/// one. Exact mode is exhaustive (vertex 0 pinned to X, halving the space)
/// and returns the violation with the smallest X-bitmask; heuristic mode
/// tries weak-component splits, then seeded local search, and may miss.
pub fn find_violating_partition(
    d: &Digraph,
    r: usize,
    beta: &Rational,
    gamma: &Rational,
    mode: SearchMode,
) -> Result<Option<(VertexSet, VertexSet)>, DensityError> {
    let n = d.n();
    let side = min_side(r, gamma).max(1);
    if n < 2 * side {
        return Ok(None);
    }
    let threshold = CutThreshold::new(r, beta);
    match mode {
        SearchMode::Exact { cap } => {
            let cap = cap.min(EXACT_HARD_LIMIT);
            if n > cap {
                return Err(DensityError::CapExceeded { n, cap });
            }
            exact_search(d, side, &threshold)
        }
        SearchMode::Heuristic { seed, starts } => {
            Ok(heuristic_search(d, side, &threshold, seed, starts))
        }
    }
}

fn exact_search(
    d: &Digraph,
    side: usize,
    threshold: &CutThreshold,
) -> Result<Option<(VertexSet, VertexSet)>, DensityError> {
    let n = d.n();
    let out_masks: Vec<u64> = (0..n)
        .map(|u| d.out(u).iter().fold(0u64, |m, &v| m | (1u64 << v)))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // vertex 0 always in X; masks ascend, so the reported violation is canonical
    for sub in 0u64..(1u64 << (n - 1)) {
        let x = (sub << 1) | 1;
        let sx = x.count_ones() as usize;
        if sx < side || n - sx < side {
            continue;
        }
        let y = all & !x;
        let mut cut = 0u64;
        for (u, m) in out_masks.iter().enumerate() {
            let targets = if x >> u & 1 == 1 { y } else { x };
            cut += (m & targets).count_ones() as u64;
        }
        if threshold.violated_by(cut) {
            let xs: Vec<usize> = (0..n).filter(|&v| x >> v & 1 == 1).collect();
            let ys: Vec<usize> = (0..n).filter(|&v| y >> v & 1 == 1).collect();
            return Ok(Some((VertexSet::new(xs, n).unwrap(), VertexSet::new(ys, n).unwrap())));
        }
    }
    Ok(None)
}

fn weak_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in d.out(u).iter().chain(d.in_neighbors(u)) {
                if comp[v] == usize::MAX {
                    comp[v] = id;
                    members.push(v);
                    stack.push(v);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    comps
}

fn heuristic_search(
    d: &Digraph,
    side: usize,
    threshold: &CutThreshold,
    seed: u64,
    starts: usize,
) -> Option<(VertexSet, VertexSet)> {
    let n = d.n();
    let package = |in_x: &[bool]| {
        let xs: Vec<usize> = (0..n).filter(|&v| in_x[v]).collect();
        let ys: Vec<usize> = (0..n).filter(|&v| !in_x[v]).collect();
        Some((VertexSet::new(xs, n).unwrap(), VertexSet::new(ys, n).unwrap()))
    };

    // whole weak components always give a zero cut; try to assemble X from
    // them before resorting to local search
    let comps = weak_components(d);
    if comps.len() >= 2 {
        for largest_first in [true, false] {
            let mut order: Vec<&Vec<usize>> = comps.iter().collect();
            order.sort_by_key(|c| (if largest_first { n - c.len() } else { c.len() }, c[0]));
            let mut in_x = vec![false; n];
            let mut size = 0;
            for c in order {
                if size >= side {
                    break;
                }
                for &v in c {
                    in_x[v] = true;
                }
                size += c.len();
            }
            if size >= side && n - size >= side && threshold.violated_by(cut_value(d, &in_x)) {
                return package(&in_x);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..starts {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let split = rng.gen_range(side..=n - side);
        let mut in_x = vec![false; n];
        for &v in &order[..split] {
            in_x[v] = true;
        }
        let mut x_size = split;
        let mut cut = cut_value(d, &in_x);
        if threshold.violated_by(cut) {
            return package(&in_x);
        }
        loop {
            // best strictly-improving single-vertex move, lowest id wins ties
            let mut best: Option<(u64, usize)> = None;
            for v in 0..n {
                let (from_x, new_x) = (in_x[v], if in_x[v] { x_size - 1 } else { x_size + 1 });
                if new_x < side || n - new_x < side {
                    continue;
                }
                // moving v flips which of its arcs cross
                let mut delta: i64 = 0;
                for &w in d.out(v).iter().chain(d.in_neighbors(v)) {
                    if in_x[w] == from_x {
                        delta += 1;
                    } else {
                        delta -= 1;
                    }
                }
                if delta < 0 {
                    let cand = (cut as i64 + delta) as u64;
                    if best.is_none_or(|(c, _)| cand < c) {
                        best = Some((cand, v));
                    }
                }
            }
            match best {
                Some((new_cut, v)) => {
                    in_x[v] = !in_x[v];
                    x_size = if in_x[v] { x_size + 1 } else { x_size - 1 };
                    cut = new_cut;
                    if threshold.violated_by(cut) {
                        return package(&in_x);
                    }
                }
                None => break,
            }
        }
    }
    None
}

/// Extracts an induced subdigraph with no (found) violating partition by
/// repeatedly descending into a dense side of each violation. At least one
/// side of a violation must be dense; anything else falsifies the counting
/// argument this recursion implements and is reported as a soundness error.
pub fn dense_subdigraph(
    d: &Digraph,
    r: usize,
    beta: &Rational,
    gamma: &Rational,
    mode: SearchMode,
) -> Result<(Digraph, DenseWitness), DensityError> {
    if !is_dense(d, r, beta, gamma) {
        return Err(DensityError::NotDense);
    }
    let mut cur = d.clone();
    let mut vertices: Vec<usize> = (0..d.n()).collect();
    let mut steps = Vec::new();
    loop {
        let viol = find_violating_partition(&cur, r, beta, gamma, mode)?;
        let (x, y) = match viol {
            None => break,
            Some(p) => p,
        };
        let (dx, xmap) = cur.induced(&x).unwrap();
        let (dy, ymap) = cur.induced(&y).unwrap();
        let dense_x = is_dense(&dx, r, beta, gamma);
        let dense_y = is_dense(&dy, r, beta, gamma);
        let kept = match (dense_x, dense_y) {
            (true, true) => {
                if x.len() <= y.len() {
                    KeptSide::X
                } else {
                    KeptSide::Y
                }
            }
            (true, false) => KeptSide::X,
            (false, true) => KeptSide::Y,
            (false, false) => {
                return Err(DensityError::Soundness(
                    "neither side of a violating partition is dense".into(),
                ))
            }
        };
        steps.push(DenseStep {
            cut_x: x.iter().map(|v| vertices[v]).collect(),
            kept,
        });
        let (next, map) = match kept {
            KeptSide::X => (dx, xmap),
            KeptSide::Y => (dy, ymap),
        };
        vertices = map.into_iter().map(|v| vertices[v]).collect();
        cur = next;
    }
    let verified = matches!(mode, SearchMode::Exact { .. });
    Ok((cur, DenseWitness { vertices, verified, steps }))
}

/// Exact evaluation of the degree lemma's two precondition groups:
/// part 1 covers the size bound (2β < (1−α/2)² and γ above the lower
/// boundary), part 2 additionally the high-degree-vertex conditions on δ.
/// Square roots are compared by sign analysis and squaring only.
pub fn check_lemma_preconditions(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
) -> (bool, bool) {
    let one = Rational::one();
    let two = rat(2, 1);
    let a2 = &one - alpha / &two;
    let disc_ok = beta * &two < &a2 * &a2;
    let part1 = disc_ok && {
        let e1 = &a2 * &a2 - beta * &two;
        // γ ≥ (1−α/2) − √e1  ⇔  √e1 ≥ (1−α/2) − γ
        Surd::sqrt_of(e1).cmp_rational(&(&a2 - gamma)) != Ordering::Less
    };
    let part2 = part1 && delta.is_positive() && *delta < rat(1, 2) && {
        // δ < 1 − √β  ⇔  √β < 1 − δ
        let om_delta = &one - delta;
        Surd::sqrt_of(beta.clone()).cmp_rational(&om_delta) == Ordering::Less && {
            let e1 = &a2 * &a2 - beta * &two;
            let e2 = &om_delta * &om_delta - beta;
            // (1−α/2) + √e1 ≥ 2((1−δ) − √e2)  ⇔  √e1 + 2√e2 ≥ 2(1−δ) − (1−α/2)
            let t = &two * &om_delta - &a2;
            let first = if !t.is_positive() {
                true
            } else {
                // square both (non-negative) sides once
                let lhs_rat = &e1 + rat(4, 1) * &e2 - &t * &t;
                Surd::new(lhs_rat, rat(4, 1), &e1 * &e2).sign() != Ordering::Less
            };
            // β/(1/2−δ) ≤ 2((1−δ) + √e2)
            let lhs = beta / (rat(1, 2) - delta);
            let second =
                Surd::new(&two * &om_delta - lhs, two.clone(), e2).sign() != Ordering::Less;
            first && second
        }
    };
    (part1, part2)
}

/// The size threshold ((1−α/2) + √((1−α/2)² − 2β))·r, exact when the
/// discriminant is a perfect rational square, else enclosed within 10⁻¹²·r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    Exact(Rational),
    Enclosure { lo: Rational, hi: Rational },
}

impl Threshold {
    pub fn lo(&self) -> &Rational {
        match self {
            Threshold::Exact(v) => v,
            Threshold::Enclosure { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &Rational {
        match self {
            Threshold::Exact(v) => v,
            Threshold::Enclosure { hi, .. } => hi,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Threshold::Exact(_))
    }
}

pub fn min_vertex_threshold(
    r: usize,
    alpha: &Rational,
    beta: &Rational,
) -> Result<Threshold, DensityError> {
    let a2 = Rational::one() - alpha / rat(2, 1);
    let disc = &a2 * &a2 - rat(2, 1) * beta;
    if disc.is_negative() {
        return Err(DensityError::Precondition("2β exceeds (1−α/2)²".into()));
    }
    let rr = rat_usize(r);
    if let Some(s) = perfect_sqrt(&disc) {
        return Ok(Threshold::Exact((&a2 + s) * rr));
    }
    let eps = Rational::new(1.into(), 1_000_000_000_000u64.into());
    let (lo, hi) = sqrt_enclosure(&disc, &eps);
    Ok(Threshold::Enclosure { lo: (&a2 + lo) * &rr, hi: (&a2 + hi) * &rr })
}

/// Lowest-id vertex with d⁺ ≥ δr and d⁻ ≥ δr, exact comparison.
pub fn high_degree_vertex(d: &Digraph, r: usize, delta: &Rational) -> Option<usize> {
    let t = delta * rat_usize(r);
    (0..d.n())
        .find(|&v| rat_usize(d.out_degree(v)) >= t && rat_usize(d.in_degree(v)) >= t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundCheckMode {
    /// a(D) < v(v + min{c, 2·tw(digon graph)})/2; needs the treewidth oracle.
    Full,
    /// a(D) < v(v + c)/2 only.
    CycleOnly,
}

/// Strict arc-count bound a(D) < v(v + min{c(D), 2·tw(F)})/2 where F is the
/// digon graph. tw(F) never exceeds dtw(D), so this is a sound sharpening.
pub fn density_bound_check(d: &Digraph, mode: BoundCheckMode) -> Result<bool, DensityError> {
    let v = d.n();
    let c = crate::cycles::c_number(d).0;
    let term = match mode {
        BoundCheckMode::Full => {
            let f = dtw::digon_graph(d);
            let tw = dtw::treewidth_small(&f)
                .map_err(|_| DensityError::OracleTooLarge { n: f.n(), max: dtw::TREEWIDTH_MAX })?;
            c.min(2 * tw)
        }
        BoundCheckMode::CycleOnly => c,
    };
    Ok(2 * d.arc_count() < v * (v + term))
}

pub fn params_to_value(p: &DensityParams) -> Value {
    use crate::rational::format_rational as fr;
    json!({
        "alpha": fr(&p.alpha),
        "beta": fr(&p.beta),
        "delta": fr(&p.delta),
        "gamma": fr(&p.gamma),
        "r": p.r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;

    fn complete_bi(n: usize) -> Digraph {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        Digraph::from_arc_list(n, &arcs).unwrap()
    }

    fn two_complete_bi(n: usize) -> Digraph {
        let mut arcs = Vec::new();
        for base in [0, n] {
            for u in 0..n {
                for v in 0..n {
                    if u != v {
                        arcs.push((base + u, base + v));
                    }
                }
            }
        }
        Digraph::from_arc_list(2 * n, &arcs).unwrap()
    }

    #[test]
    fn density_definition() {
        let k4 = complete_bi(4);
        assert!(is_dense(&k4, 3, &rat(3, 11), &rat(4, 11)));
        let single = Digraph::from_arc_list(1, &[]).unwrap();
        assert!(!is_dense(&single, 3, &rat(3, 11), &rat(4, 11)));
        // any regular digraph with v ≥ γr is dense
        let c7 = Digraph::from_arc_list(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>())
            .unwrap();
        assert!(is_dense(&c7, 1, &rat(3, 11), &rat(4, 11)));
    }

    #[test]
    fn no_violation_in_complete_biorientation() {
        let k4 = complete_bi(4);
        let got =
            find_violating_partition(&k4, 3, &rat(3, 11), &rat(4, 11), SearchMode::default())
                .unwrap();
        assert_eq!(got, None);
    }

    #[test]
    fn component_split_is_found() {
        let d = two_complete_bi(4);
        let (x, y) =
            find_violating_partition(&d, 3, &rat(3, 11), &rat(4, 11), SearchMode::default())
                .unwrap()
                .unwrap();
        assert_eq!(x.as_slice(), &[0, 1, 2, 3]);
        assert_eq!(y.as_slice(), &[4, 5, 6, 7]);
        assert_eq!(d.arcs_between(&x, &y).unwrap().1, 0);
        // heuristic mode finds it through the weak-component candidate
        let heur = find_violating_partition(
            &d,
            3,
            &rat(3, 11),
            &rat(4, 11),
            SearchMode::Heuristic { seed: 7, starts: 8 },
        )
        .unwrap();
        assert!(heur.is_some());
    }

    #[test]
    fn too_small_for_any_partition() {
        let digon = Digraph::from_arc_list(2, &[(0, 1), (1, 0)]).unwrap();
        // γr = 12/11 forces sides ≥ 2, impossible on 2 vertices
        let got =
            find_violating_partition(&digon, 3, &rat(3, 11), &rat(4, 11), SearchMode::default())
                .unwrap();
        assert_eq!(got, None);
    }

    #[test]
    fn cap_is_enforced() {
        let d = complete_bi(6);
        assert_eq!(
            find_violating_partition(&d, 3, &rat(3, 11), &rat(4, 11), SearchMode::Exact { cap: 5 }),
            Err(DensityError::CapExceeded { n: 6, cap: 5 })
        );
    }

    #[test]
    fn dense_subdigraph_fixed_point() {
        let k4 = complete_bi(4);
        let (d2, w) = dense_subdigraph(&k4, 3, &rat(3, 11), &rat(4, 11), SearchMode::default())
            .unwrap();
        assert_eq!(d2, k4);
        assert!(w.verified);
        assert!(w.steps.is_empty());
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn dense_subdigraph_descends_components() {
        let d = two_complete_bi(4);
        let (d2, w) = dense_subdigraph(&d, 3, &rat(3, 11), &rat(4, 11), SearchMode::default())
            .unwrap();
        assert_eq!(d2, complete_bi(4));
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert_eq!(w.steps.len(), 1);
        assert_eq!(w.steps[0].kept, KeptSide::X);
        assert!(is_dense(&d2, 3, &rat(3, 11), &rat(4, 11)));
    }

    #[test]
    fn non_dense_input_rejected() {
        let single = Digraph::from_arc_list(1, &[]).unwrap();
        assert_eq!(
            dense_subdigraph(&single, 3, &rat(3, 11), &rat(4, 11), SearchMode::default()),
            Err(DensityError::NotDense)
        );
    }

    #[test]
    fn preconditions_main_parameters() {
        let (p1, p2) =
            check_lemma_preconditions(&rat(3, 22), &rat(3, 11), &rat(4, 11), &rat(4, 11));
        assert!(p1 && p2);
        // the boundary identity (41/44)² − 6/11 = (25/44)²
        let e1 = rat(41, 44) * rat(41, 44) - rat(6, 11);
        assert_eq!(e1, rat(625, 1936));
        assert_eq!(perfect_sqrt(&e1), Some(rat(25, 44)));
        // γ sits exactly on the lower boundary
        assert_eq!(rat(41, 44) - rat(25, 44), rat(4, 11));
        // β/(1/2−δ) = 2 = 2((1−δ) + √((1−δ)²−β)) exactly
        assert_eq!(rat(3, 11) / (rat(1, 2) - rat(4, 11)), rat(2, 1));
        let e2 = rat(7, 11) * rat(7, 11) - rat(3, 11);
        assert_eq!(perfect_sqrt(&e2), Some(rat(4, 11)));
        assert_eq!(rat(2, 1) * (rat(7, 11) + rat(4, 11)), rat(2, 1));
    }

    #[test]
    fn preconditions_second_parameters() {
        let (p1, p2) =
            check_lemma_preconditions(&rat(1, 10), &rat(3, 20), &rat(17, 10), &rat(3, 10));
        assert!(p1 && p2);
    }

    #[test]
    fn preconditions_rejected() {
        let (p1, _) = check_lemma_preconditions(&rat(1, 2), &rat(1, 2), &rat(1, 10), &rat(1, 10));
        assert!(!p1);
    }

    #[test]
    fn vertex_threshold_values() {
        match min_vertex_threshold(22, &rat(3, 22), &rat(3, 11)).unwrap() {
            Threshold::Exact(v) => assert_eq!(v, rat(33, 1)),
            other => panic!("expected exact threshold, got {other:?}"),
        }
        let t = min_vertex_threshold(100, &rat(1, 10), &rat(1, 10)).unwrap();
        assert!(!t.is_exact());
        assert!(*t.lo() > rat(178, 1));
        assert!(t.hi() - t.lo() <= Rational::new(100.into(), 1_000_000_000_000u64.into()));
        // zero discriminant: 2β = (1−α/2)²
        let alpha = rat(1, 1);
        let beta = rat(1, 8);
        match min_vertex_threshold(16, &alpha, &beta).unwrap() {
            Threshold::Exact(v) => assert_eq!(v, rat(8, 1)),
            other => panic!("expected exact threshold, got {other:?}"),
        }
        assert!(min_vertex_threshold(5, &rat(1, 10), &rat(1, 1)).is_err());
    }

    #[test]
    fn high_degree_vertex_examples() {
        let k4 = complete_bi(4);
        assert_eq!(high_degree_vertex(&k4, 3, &rat(4, 11)), Some(0));
        let c5 = Digraph::from_arc_list(5, &(0..5).map(|i| (i, (i + 1) % 5)).collect::<Vec<_>>())
            .unwrap();
        assert_eq!(high_degree_vertex(&c5, 3, &rat(4, 11)), None);
    }

    #[test]
    fn bound_check_examples() {
        let k4 = complete_bi(4);
        assert!(density_bound_check(&k4, BoundCheckMode::Full).unwrap());
        let c3 = Digraph::from_arc_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(density_bound_check(&c3, BoundCheckMode::Full).unwrap());
    }

    #[test]
    fn witness_transcript_schema() {
        let d = two_complete_bi(4);
        let (_, w) = dense_subdigraph(&d, 3, &rat(3, 11), &rat(4, 11), SearchMode::default())
            .unwrap();
        let v = w.to_value();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"steps":[{"cut_X":[0,1,2,3],"kept":"X"}],"verified":true,"vertices":[0,1,2,3]}"#
        );
    }
}
