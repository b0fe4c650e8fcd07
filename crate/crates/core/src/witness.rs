//! Parsing and independent re-verification of the JSON witnesses the tools
//! emit: path families, separators, cycle packings, linked-set certificates
//! and dense-subdigraph transcripts.

use crate::cycles::{verify_cycle_packing, CyclePacking};
use crate::density::{find_violating_partition, is_dense, KeptSide, SearchMode};
use crate::digraph::{Digraph, VertexSet};
use crate::dtw::{is_k_linked, DtwError};
use crate::menger::{verify_path_family, verify_separator, PathFamily, Separator};
use crate::rational::{rat_usize, Rational};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("witness JSON is not an object")]
    NotAnObject,
    #[error("cannot tell what kind of witness this is")]
    UnknownKind,
    #[error("witness field '{0}' is missing or malformed")]
    BadField(&'static str),
    #[error("path and separator witnesses need the endpoint sets to be fully checked")]
    MissingEndpoints,
    #[error("dense witnesses need the degree and both density parameters as context")]
    MissingDensityContext,
    #[error("re-verification too expensive: {0}")]
    TooExpensive(String),
}

/// A parsed witness, still unchecked against any digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Paths { paths: Vec<Vec<usize>> },
    Separator { s: Vec<usize>, a: Vec<usize>, b: Vec<usize> },
    Packing { packing: CyclePacking, declared_size: Option<usize> },
    Certificate { l: Vec<usize>, k: usize, declared_bound: Option<usize> },
    Dense { vertices: Vec<usize>, verified: bool, steps: Vec<(Vec<usize>, KeptSide)> },
}

/// Side information some witness kinds need: menger endpoints, density
/// parameters, and the subset budget for certificate re-checks.
#[derive(Debug, Clone)]
pub struct VerifyContext {
    pub endpoints: Option<(VertexSet, VertexSet)>,
    pub density: Option<(usize, Rational, Rational)>,
    pub budget: u128,
}

impl Default for VerifyContext {
    fn default() -> Self {
        VerifyContext {
            endpoints: None,
            density: None,
            budget: crate::dtw::DEFAULT_SUBSET_BUDGET,
        }
    }
}

fn usize_array(v: &Value, field: &'static str) -> Result<Vec<usize>, WitnessError> {
    v.as_array()
        .and_then(|a| a.iter().map(|x| x.as_u64().map(|u| u as usize)).collect())
        .ok_or(WitnessError::BadField(field))
}

fn nested_usize_array(v: &Value, field: &'static str) -> Result<Vec<Vec<usize>>, WitnessError> {
    v.as_array()
        .ok_or(WitnessError::BadField(field))?
        .iter()
        .map(|row| usize_array(row, field))
        .collect()
}

/// Dispatches on the "kind" tag when present, otherwise on the field shape.
pub fn parse_witness(v: &Value) -> Result<Witness, WitnessError> {
    let obj = v.as_object().ok_or(WitnessError::NotAnObject)?;
    match obj.get("kind").and_then(Value::as_str) {
        Some("paths") => {
            let paths =
                nested_usize_array(obj.get("paths").unwrap_or(&Value::Null), "paths")?;
            return Ok(Witness::Paths { paths });
        }
        Some("separator") => {
            return Ok(Witness::Separator {
                s: usize_array(obj.get("S").unwrap_or(&Value::Null), "S")?,
                a: usize_array(obj.get("A").unwrap_or(&Value::Null), "A")?,
                b: usize_array(obj.get("B").unwrap_or(&Value::Null), "B")?,
            });
        }
        Some(_) => return Err(WitnessError::UnknownKind),
        None => {}
    }
    if obj.contains_key("hub") && obj.contains_key("cycles") {
        let hub = obj
            .get("hub")
            .and_then(Value::as_u64)
            .ok_or(WitnessError::BadField("hub"))? as usize;
        let cycles = nested_usize_array(obj.get("cycles").unwrap(), "cycles")?;
        let declared_size = match obj.get("size") {
            None => None,
            Some(s) => Some(s.as_u64().ok_or(WitnessError::BadField("size"))? as usize),
        };
        return Ok(Witness::Packing { packing: CyclePacking { hub, cycles }, declared_size });
    }
    if obj.contains_key("L") && obj.contains_key("k") {
        let l = usize_array(obj.get("L").unwrap(), "L")?;
        let k = obj.get("k").and_then(Value::as_u64).ok_or(WitnessError::BadField("k"))? as usize;
        let declared_bound = match obj.get("bound") {
            None => None,
            Some(b) => Some(b.as_u64().ok_or(WitnessError::BadField("bound"))? as usize),
        };
        return Ok(Witness::Certificate { l, k, declared_bound });
    }
    if obj.contains_key("vertices") && obj.contains_key("steps") {
        let vertices = usize_array(obj.get("vertices").unwrap(), "vertices")?;
        let verified = obj
            .get("verified")
            .and_then(Value::as_bool)
            .ok_or(WitnessError::BadField("verified"))?;
        let mut steps = Vec::new();
        for step in obj.get("steps").unwrap().as_array().ok_or(WitnessError::BadField("steps"))? {
            let cut = usize_array(step.get("cut_X").unwrap_or(&Value::Null), "cut_X")?;
            let kept = match step.get("kept").and_then(Value::as_str) {
                Some("X") => KeptSide::X,
                Some("Y") => KeptSide::Y,
                _ => return Err(WitnessError::BadField("kept")),
            };
            steps.push((cut, kept));
        }
        return Ok(Witness::Dense { vertices, verified, steps });
    }
    Err(WitnessError::UnknownKind)
}

fn set_in_range(elems: &[usize], n: usize) -> Option<VertexSet> {
    VertexSet::new(elems.to_vec(), n).ok()
}

// paths must be nonempty walks along arcs, pairwise fully vertex-disjoint
fn paths_intrinsically_valid(d: &Digraph, paths: &[Vec<usize>]) -> bool {
    let mut used = vec![false; d.n()];
    for p in paths {
        if p.is_empty() {
            return false;
        }
        for &v in p {
            if v >= d.n() || used[v] {
                return false;
            }
            used[v] = true;
        }
        if p.windows(2).any(|a| !d.has_arc(a[0], a[1])) {
            return false;
        }
    }
    true
}

// S, A, B must partition the vertices with no arc from A into B
fn separator_intrinsically_valid(d: &Digraph, s: &[usize], a: &[usize], b: &[usize]) -> bool {
    let n = d.n();
    if s.len() + a.len() + b.len() != n {
        return false;
    }
    let mut owner = vec![0u8; n];
    for (tag, part) in [(1u8, s), (2, a), (3, b)] {
        for &v in part {
            if v >= n || owner[v] != 0 {
                return false;
            }
            owner[v] = tag;
        }
    }
    !d.arcs().any(|(u, v)| owner[u] == 2 && owner[v] == 3)
}

fn replay_dense_steps(
    d: &Digraph,
    r: usize,
    beta: &Rational,
    gamma: &Rational,
    vertices: &[usize],
    steps: &[(Vec<usize>, KeptSide)],
) -> bool {
    let n = d.n();
    let min_side = {
        let need = gamma * rat_usize(r);
        // smallest integer >= gamma*r
        crate::rational::ceil_to_usize(&need).max(1)
    };
    let threshold = beta * rat_usize(r) * rat_usize(r);
    let mut current: Vec<usize> = (0..n).collect();
    for (cut_x, kept) in steps {
        let in_current = {
            let mut m = vec![false; n];
            for &v in &current {
                m[v] = true;
            }
            m
        };
        let mut in_x = vec![false; n];
        for &v in cut_x {
            if v >= n || !in_current[v] {
                return false;
            }
            in_x[v] = true;
        }
        let y: Vec<usize> = current.iter().copied().filter(|&v| !in_x[v]).collect();
        if cut_x.len() < min_side || y.len() < min_side {
            return false;
        }
        let cut = d
            .arcs()
            .filter(|&(u, v)| in_current[u] && in_current[v] && in_x[u] != in_x[v])
            .count();
        if rat_usize(cut) > threshold {
            return false;
        }
        current = match kept {
            KeptSide::X => {
                let mut x = cut_x.clone();
                x.sort_unstable();
                x
            }
            KeptSide::Y => y,
        };
    }
    current == vertices
}

/// Checks a witness against the digraph it claims to describe. Witnesses
/// with out-of-range vertices or violated invariants yield Ok(false);
/// errors are reserved for missing context or infeasible re-verification.
pub fn verify_witness(
    d: &Digraph,
    witness: &Witness,
    ctx: &VerifyContext,
) -> Result<bool, WitnessError> {
    match witness {
        Witness::Paths { paths } => match &ctx.endpoints {
            Some((u, w)) => {
                let family =
                    PathFamily { paths: paths.clone(), sources: u.clone(), sinks: w.clone() };
                Ok(verify_path_family(d, u, w, &family))
            }
            None => Ok(paths_intrinsically_valid(d, paths)),
        },
        Witness::Separator { s, a, b } => match &ctx.endpoints {
            Some((u, w)) => {
                let (Some(s), Some(a), Some(b)) =
                    (set_in_range(s, d.n()), set_in_range(a, d.n()), set_in_range(b, d.n()))
                else {
                    return Ok(false);
                };
                Ok(verify_separator(d, u, w, &Separator { s, a, b }))
            }
            None => Ok(separator_intrinsically_valid(d, s, a, b)),
        },
        Witness::Packing { packing, declared_size } => {
            let size_ok = declared_size.is_none_or(|s| s == packing.cycles.len());
            Ok(size_ok && verify_cycle_packing(d, packing))
        }
        Witness::Certificate { l, k, declared_bound } => {
            if declared_bound.is_some_and(|b| b + 1 != *k) {
                return Ok(false);
            }
            let Some(l) = set_in_range(l, d.n()) else {
                return Ok(false);
            };
            match is_k_linked(d, &l, *k, ctx.budget) {
                Ok(check) => Ok(check.is_linked()),
                Err(DtwError::BudgetExceeded { needed, budget }) => Err(
                    WitnessError::TooExpensive(format!(
                        "linked-set check needs {needed} subsets, budget is {budget}"
                    )),
                ),
                Err(e) => Err(WitnessError::TooExpensive(e.to_string())),
            }
        }
        Witness::Dense { vertices, verified, steps } => {
            let Some((r, beta, gamma)) = &ctx.density else {
                return Err(WitnessError::MissingDensityContext);
            };
            let Some(vs) = set_in_range(vertices, d.n()) else {
                return Ok(false);
            };
            if !replay_dense_steps(d, *r, beta, gamma, vertices, steps) {
                return Ok(false);
            }
            let (sub, _) = d.induced(&vs).expect("set already validated");
            if !is_dense(&sub, *r, beta, gamma) {
                return Ok(false);
            }
            if *verified {
                match find_violating_partition(&sub, *r, beta, gamma, SearchMode::default()) {
                    Ok(found) => Ok(found.is_none()),
                    Err(e) => Err(WitnessError::TooExpensive(e.to_string())),
                }
            } else {
                Ok(true)
            }
        }
    }
}
