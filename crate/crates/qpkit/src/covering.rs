//! The integer Galois covering of a truncated quiver, slices as height
//! functions, the cut-slice correspondence and slice-mutation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::cuts::{
    compatibility_class, coboundary_certificate, cut_mutate_minus, cut_mutate_plus, grading,
    strict_sinks, strict_sources,
};
use crate::error::{QpError, Result};
use crate::quiver::{ArrowId, Quiver, VertexId, Walk};

/// A slice of the covering, stored as integer heights per vertex with each
/// connected component normalized to minimum zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HeightFunction(pub Vec<i64>);

impl HeightFunction {
    /// Normalizes each component to minimum height zero.
    pub fn normalized(mut self, q: &Quiver) -> Self {
        for comp in q.components() {
            let min = comp.iter().map(|v| self.0[v.index()]).min().unwrap_or(0);
            for v in comp {
                self.0[v.index()] -= min;
            }
        }
        self
    }

    /// Checks the slice condition for the given cut.
    pub fn is_slice(&self, q: &Quiver, cut: &[ArrowId]) -> bool {
        let g = grading(cut);
        q.arrow_ids().all(|a| {
            let d = g(a) + self.0[q.target(a).index()] - self.0[q.source(a).index()];
            d == 0 || d == 1
        })
    }

    /// Total volume (sum of heights).
    pub fn volume(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// A finite window of the covering quiver.
#[derive(Clone, Debug)]
pub struct CoveringWindow {
    pub lo: i64,
    pub hi: i64,
    /// vertices (x, level)
    pub vertices: Vec<(VertexId, i64)>,
    /// lifted arrows (a, level) from (s(a), level) to (e(a), level - g(a)),
    /// with a flag marking arrows whose target level leaves the window
    pub arrows: Vec<WindowArrow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowArrow {
    pub arrow: ArrowId,
    pub level: i64,
    pub target_level: i64,
    pub boundary_incomplete: bool,
}

/// The literal finite window of levels `lo..=hi`.
pub fn build_covering_window(q: &Quiver, cut: &[ArrowId], lo: i64, hi: i64) -> CoveringWindow {
    assert!(lo <= hi, "window bounds must be ordered");
    let g = grading(cut);
    let mut vertices = Vec::new();
    for l in lo..=hi {
        for v in q.vertices() {
            vertices.push((v, l));
        }
    }
    let mut arrows = Vec::new();
    for l in lo..=hi {
        for a in q.arrow_ids() {
            let tl = l - g(a);
            arrows.push(WindowArrow {
                arrow: a,
                level: l,
                target_level: tl,
                boundary_incomplete: tl < lo || tl > hi,
            });
        }
    }
    CoveringWindow {
        lo,
        hi,
        vertices,
        arrows,
    }
}

/// Lifts a walk to the covering: returns the end vertex and level of the
/// unique lift starting at the given level.
pub fn lift_walk(q: &Quiver, cut: &[ArrowId], walk: &Walk, start_level: i64) -> (VertexId, i64) {
    let g = grading(cut);
    let mut level = start_level;
    let mut at = walk
        .0
        .first()
        .map(|s| s.start(q))
        .unwrap_or(VertexId(0));
    for step in &walk.0 {
        debug_assert_eq!(step.start(q), at);
        if step.forward {
            level -= g(step.arrow);
        } else {
            level += g(step.arrow);
        }
        at = step.end(q);
    }
    (at, level)
}

/// All slices of Z(Q, C) modulo shift, as normalized height functions.
pub fn enumerate_slices(q: &Quiver, cut: &[ArrowId]) -> Vec<HeightFunction> {
    // slices correspond to compatible subsets; recover heights per subset
    let class = compatibility_class(q, cut);
    let mut out: Vec<HeightFunction> = class
        .iter()
        .map(|c2| cut_to_slice(q, cut, c2).expect("class members are compatible"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The cut associated to a slice: arrows whose lifted copies leave the slice.
pub fn slice_to_cut(q: &Quiver, cut: &[ArrowId], theta: &HeightFunction) -> Vec<ArrowId> {
    let g = grading(cut);
    let mut out: Vec<ArrowId> = q
        .arrow_ids()
        .filter(|&a| g(a) + theta.0[q.target(a).index()] - theta.0[q.source(a).index()] == 1)
        .collect();
    out.sort();
    out
}

/// The slice associated to a compatible subset; errors when incompatible.
pub fn cut_to_slice(q: &Quiver, cut: &[ArrowId], other: &[ArrowId]) -> Result<HeightFunction> {
    let theta = coboundary_certificate(q, other, cut).ok_or(QpError::NotCompatible)?;
    let h = HeightFunction(theta).normalized(q);
    debug_assert!(h.is_slice(q, cut));
    Ok(h)
}

/// Slice-mutation at a strict source: the vertex drops one level.
pub fn slice_mutate_plus(
    q: &Quiver,
    cut: &[ArrowId],
    theta: &HeightFunction,
    x: VertexId,
) -> Result<HeightFunction> {
    let c_s = slice_to_cut(q, cut, theta);
    if !strict_sources(q, &c_s).contains(&x) {
        return Err(QpError::NotStrictSource(q.vertex_name(x).to_string()));
    }
    let mut h = theta.clone();
    h.0[x.index()] -= 1;
    Ok(h.normalized(q))
}

/// Slice-mutation at a strict sink: the vertex rises one level.
pub fn slice_mutate_minus(
    q: &Quiver,
    cut: &[ArrowId],
    theta: &HeightFunction,
    x: VertexId,
) -> Result<HeightFunction> {
    let c_s = slice_to_cut(q, cut, theta);
    if !strict_sinks(q, &c_s).contains(&x) {
        return Err(QpError::NotStrictSink(q.vertex_name(x).to_string()));
    }
    let mut h = theta.clone();
    h.0[x.index()] += 1;
    Ok(h.normalized(q))
}

/// Reachability of the compatibility class under cut-mutation.
#[derive(Clone, Debug)]
pub struct ReachabilityGraph {
    pub nodes: Vec<Vec<ArrowId>>,
    /// (from node, to node, mutated vertex, direction +/-)
    pub edges: Vec<(usize, usize, VertexId, bool)>,
    pub connected: bool,
    pub hypotheses_hold: bool,
}

/// BFS over the compatibility class applying all strict-source and
/// strict-sink cut-mutations. When the truncated quiver has enough
/// compatibles and is sufficiently cyclic, the graph must be connected.
pub fn cut_mutation_reachability(q: &Quiver, cut: &[ArrowId]) -> ReachabilityGraph {
    let class = compatibility_class(q, cut);
    let index: BTreeMap<Vec<ArrowId>, usize> =
        class.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut edges = Vec::new();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let start = index[&{
        let mut c = cut.to_vec();
        c.sort();
        c
    }];
    let mut queue = VecDeque::new();
    queue.push_back(start);
    seen.insert(start);
    while let Some(i) = queue.pop_front() {
        let current = &class[i];
        for x in strict_sources(q, current) {
            if let Ok(next) = cut_mutate_plus(q, current, x) {
                let j = index[&next];
                edges.push((i, j, x, true));
                if seen.insert(j) {
                    queue.push_back(j);
                }
            }
        }
        for x in strict_sinks(q, current) {
            if let Ok(next) = cut_mutate_minus(q, current, x) {
                let j = index[&next];
                edges.push((i, j, x, false));
                if seen.insert(j) {
                    queue.push_back(j);
                }
            }
        }
    }
    let connected = seen.len() == class.len();
    let hypotheses_hold = crate::cuts::has_enough_compatibles(q, cut)
        && crate::cuts::is_sufficiently_cyclic(q, cut);
    ReachabilityGraph {
        nodes: class,
        edges,
        connected,
        hypotheses_hold,
    }
}
