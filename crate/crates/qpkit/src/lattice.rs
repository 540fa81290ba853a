//! Mutation lattices: cut-mutation lattices, planar mutation lattices and
//! the transitivity report, with DOT and JSON export.

use std::collections::{BTreeMap, VecDeque};

use crate::algebra::default_degree_bound;
use crate::cuts::{
    cut_mutate_minus, cut_mutate_plus, enumerate_cuts, has_enough_cuts, is_fully_compatible,
    strict_sinks, strict_sources,
};
use crate::error::{QpError, Result};
use crate::iso::qp_canonical_form;
use crate::planar::{planar_orbit_mutate, PlanarQP};
use crate::potential::QP;
use crate::quiver::{ArrowId, VertexId};
use crate::selfinjective::{is_selfinjective, SelfinjectivityReport};

/// A mutation lattice with canonical-form node keys and labeled edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeGraph {
    /// provenance of the seed
    pub seed: String,
    /// canonical node keys, in discovery order
    pub node_keys: Vec<String>,
    /// human-readable node labels
    pub node_labels: Vec<String>,
    /// (from, to, move label)
    pub edges: Vec<(usize, usize, String)>,
    pub complete: bool,
}

impl LatticeGraph {
    pub fn node_count(&self) -> usize {
        self.node_keys.len()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            for &(a, b, _) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == i && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Every edge must be matched by an inverse move.
    pub fn is_symmetric(&self) -> bool {
        self.edges
            .iter()
            .all(|&(a, b, _)| self.edges.iter().any(|&(c, d, _)| (c, d) == (b, a)))
    }
}

fn cut_key(qp: &QP, cut: &[ArrowId]) -> String {
    let names: Vec<&str> = cut.iter().map(|&a| qp.quiver.arrow_name(a)).collect();
    format!("{{{}}}", names.join(","))
}

/// The cut-mutation lattice: all cuts as nodes, strict-source and
/// strict-sink mutations as edges.
pub fn cut_lattice(qp: &QP) -> LatticeGraph {
    let q = &qp.quiver;
    let cuts = enumerate_cuts(qp);
    let index: BTreeMap<Vec<ArrowId>, usize> = cuts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let mut edges = Vec::new();
    for (i, cut) in cuts.iter().enumerate() {
        for x in strict_sources(q, cut) {
            if let Ok(next) = cut_mutate_plus(q, cut, x) {
                if let Some(&j) = index.get(&next) {
                    edges.push((i, j, format!("mu+._{}", q.vertex_name(x))));
                }
            }
        }
        for x in strict_sinks(q, cut) {
            if let Ok(next) = cut_mutate_minus(q, cut, x) {
                if let Some(&j) = index.get(&next) {
                    edges.push((i, j, format!("mu-._{}", q.vertex_name(x))));
                }
            }
        }
    }
    LatticeGraph {
        seed: "cut lattice".into(),
        node_keys: cuts.iter().map(|c| cut_key(qp, c)).collect(),
        node_labels: cuts.iter().map(|c| cut_key(qp, c)).collect(),
        edges,
        complete: true,
    }
}

/// A node of the planar mutation lattice.
pub struct PlanarNode {
    pub pqp: PlanarQP,
    pub report: SelfinjectivityReport,
}

/// Breadth-first search over orbit planar mutations of a selfinjective
/// planar QP, deduplicating by canonical form. Every node is verified
/// selfinjective; its Nakayama permutation drives the orbit moves.
pub fn planar_mutation_lattice(
    seed: &PlanarQP,
    size_bound: usize,
) -> Result<(LatticeGraph, Vec<PlanarNode>)> {
    let mut node_keys: Vec<String> = Vec::new();
    let mut node_labels: Vec<String> = Vec::new();
    let mut nodes: Vec<PlanarNode> = Vec::new();
    let mut edges: Vec<(usize, usize, String)> = Vec::new();
    let mut index: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut complete = true;

    let insert = |pqp: &PlanarQP,
                      index: &mut BTreeMap<Vec<u8>, usize>,
                      node_keys: &mut Vec<String>,
                      node_labels: &mut Vec<String>,
                      nodes: &mut Vec<PlanarNode>|
     -> Result<(usize, bool)> {
        let qp = pqp.qp();
        let key = qp_canonical_form(&qp);
        if let Some(&i) = index.get(&key) {
            return Ok((i, false));
        }
        let report = is_selfinjective(&qp, default_degree_bound(&qp))?;
        if !report.selfinjective {
            return Err(QpError::NotSelfinjective(
                "planar mutation lattice node failed verification".into(),
            ));
        }
        let i = nodes.len();
        index.insert(key.clone(), i);
        node_keys.push(String::from_utf8_lossy(&key).into_owned());
        node_labels.push(format!(
            "V{} A{} W{}",
            qp.quiver.vertex_count(),
            qp.quiver.arrow_count(),
            qp.potential.num_terms()
        ));
        nodes.push(PlanarNode {
            pqp: pqp.clone(),
            report,
        });
        Ok((i, true))
    };

    let (root, _) = insert(seed, &mut index, &mut node_keys, &mut node_labels, &mut nodes)?;
    let mut queue = VecDeque::new();
    queue.push_back(root);
    while let Some(i) = queue.pop_front() {
        let pqp = nodes[i].pqp.clone();
        let sigma = nodes[i]
            .report
            .nakayama
            .clone()
            .expect("verified selfinjective");
        let q = pqp.quiver().clone();
        // distinct sigma-orbits, each tried once
        let mut seen_orbits: Vec<Vec<VertexId>> = Vec::new();
        let mut frontier: Vec<(usize, String)> = Vec::new();
        for k in q.vertices() {
            let mut orbit = vec![k];
            let mut at = sigma[k.index()];
            while at != k {
                orbit.push(at);
                at = sigma[at.index()];
            }
            let mut sorted = orbit.clone();
            sorted.sort();
            if seen_orbits.contains(&sorted) {
                continue;
            }
            seen_orbits.push(sorted.clone());
            let bound = default_degree_bound(&pqp.qp());
            match planar_orbit_mutate(&pqp, &sigma, k, bound) {
                Ok(next) => {
                    let (j, fresh) = insert(
                        &next,
                        &mut index,
                        &mut node_keys,
                        &mut node_labels,
                        &mut nodes,
                    )?;
                    let label = format!(
                        "orbit({})",
                        sorted
                            .iter()
                            .map(|v| q.vertex_name(*v))
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    edges.push((i, j, label.clone()));
                    if fresh {
                        frontier.push((j, label));
                    }
                }
                Err(QpError::NotPlanarMutable(_, _))
                | Err(QpError::OrbitPreconditionViolated(_))
                | Err(QpError::TwoCycleAtVertex(_)) => continue,
                Err(e) => return Err(e),
            }
            if nodes.len() > size_bound {
                complete = false;
                break;
            }
        }
        // deterministic frontier order by canonical key
        frontier.sort_by(|a, b| node_keys[a.0].cmp(&node_keys[b.0]));
        for (j, _) in frontier {
            queue.push_back(j);
        }
        if !complete {
            break;
        }
    }
    let graph = LatticeGraph {
        seed: "planar mutation lattice".into(),
        node_keys,
        node_labels,
        edges,
        complete,
    };
    Ok((graph, nodes))
}

/// Report of the derived-equivalence transitivity hypotheses and the
/// explicit mutation paths between cuts.
#[derive(Clone, Debug)]
pub struct TransitivityReport {
    pub selfinjective: bool,
    pub fully_compatible: bool,
    pub enough_cuts: bool,
    pub hypotheses_hold: bool,
    /// for each ordered cut pair, a mutation path as (vertex, direction)
    pub paths: Vec<(usize, usize, Vec<(VertexId, bool)>)>,
    pub cuts: Vec<Vec<ArrowId>>,
    pub all_pairs_connected: bool,
}

/// Checks the hypotheses (selfinjective, fully compatible, enough cuts) and,
/// when they hold, produces an explicit cut-mutation path for every pair of
/// cuts; each such path is a chain of higher tilts between the truncated
/// algebras.
pub fn transitivity_report(qp: &QP, degree_bound: usize) -> Result<TransitivityReport> {
    let selfinjective = is_selfinjective(qp, degree_bound)?.selfinjective;
    let fully_compatible = is_fully_compatible(qp);
    let enough = has_enough_cuts(qp);
    let hypotheses = selfinjective && fully_compatible && enough;
    let cuts = enumerate_cuts(qp);
    let index: BTreeMap<Vec<ArrowId>, usize> = cuts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let q = &qp.quiver;
    // BFS trees from every cut
    let mut paths = Vec::new();
    let mut all_connected = true;
    if hypotheses {
        for (start, _) in cuts.iter().enumerate() {
            let mut prev: Vec<Option<(usize, VertexId, bool)>> = vec![None; cuts.len()];
            let mut seen = vec![false; cuts.len()];
            seen[start] = true;
            let mut queue = VecDeque::new();
            queue.push_back(start);
            while let Some(i) = queue.pop_front() {
                let cut = &cuts[i];
                for x in strict_sources(q, cut) {
                    if let Ok(next) = cut_mutate_plus(q, cut, x) {
                        if let Some(&j) = index.get(&next) {
                            if !seen[j] {
                                seen[j] = true;
                                prev[j] = Some((i, x, true));
                                queue.push_back(j);
                            }
                        }
                    }
                }
                for x in strict_sinks(q, cut) {
                    if let Ok(next) = cut_mutate_minus(q, cut, x) {
                        if let Some(&j) = index.get(&next) {
                            if !seen[j] {
                                seen[j] = true;
                                prev[j] = Some((i, x, false));
                                queue.push_back(j);
                            }
                        }
                    }
                }
            }
            for (goal, _) in cuts.iter().enumerate() {
                if goal == start {
                    continue;
                }
                if !seen[goal] {
                    all_connected = false;
                    continue;
                }
                let mut path = Vec::new();
                let mut at = goal;
                while at != start {
                    let (p, x, dir) = prev[at].expect("reached node has a parent");
                    path.push((x, dir));
                    at = p;
                }
                path.reverse();
                paths.push((start, goal, path));
            }
        }
    }
    Ok(TransitivityReport {
        selfinjective,
        fully_compatible,
        enough_cuts: enough,
        hypotheses_hold: hypotheses,
        paths,
        cuts,
        all_pairs_connected: hypotheses && all_connected,
    })
}

/// Deterministic DOT export.
pub fn export_dot(graph: &LatticeGraph) -> String {
    let mut out = String::from("graph lattice {\n");
    for (i, label) in graph.node_labels.iter().enumerate() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, label));
    }
    // undirected rendering: emit each unordered pair once
    let mut seen: Vec<(usize, usize)> = Vec::new();
    let mut sorted_edges = graph.edges.clone();
    sorted_edges.sort();
    for (a, b, label) in sorted_edges {
        let key = (a.min(b), a.max(b));
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        out.push_str(&format!("  n{} -- n{} [label=\"{}\"];\n", key.0, key.1, label));
    }
    out.push_str("}\n");
    out
}

/// Deterministic JSON export.
pub fn export_json(graph: &LatticeGraph) -> String {
    serde_json::to_string_pretty(&serde_json::json!({
        "seed": graph.seed,
        "nodes": graph
            .node_keys
            .iter()
            .zip(graph.node_labels.iter())
            .map(|(k, l)| serde_json::json!({"key": k, "label": l}))
            .collect::<Vec<_>>(),
        "edges": graph
            .edges
            .iter()
            .map(|(a, b, l)| serde_json::json!([a, b, l]))
            .collect::<Vec<_>>(),
        "complete": graph.complete,
    }))
    .expect("serializable")
}

/// Parses a lattice graph back from its JSON export.
pub fn import_json(text: &str) -> Result<LatticeGraph> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| QpError::Parse(format!("invalid JSON: {e}")))?;
    let nodes = v["nodes"]
        .as_array()
        .ok_or_else(|| QpError::Parse("missing nodes".into()))?;
    let node_keys = nodes
        .iter()
        .map(|n| n["key"].as_str().unwrap_or_default().to_string())
        .collect();
    let node_labels = nodes
        .iter()
        .map(|n| n["label"].as_str().unwrap_or_default().to_string())
        .collect();
    let edges = v["edges"]
        .as_array()
        .ok_or_else(|| QpError::Parse("missing edges".into()))?
        .iter()
        .map(|e| {
            (
                e[0].as_u64().unwrap_or(0) as usize,
                e[1].as_u64().unwrap_or(0) as usize,
                e[2].as_str().unwrap_or_default().to_string(),
            )
        })
        .collect();
    Ok(LatticeGraph {
        seed: v["seed"].as_str().unwrap_or_default().to_string(),
        node_keys,
        node_labels,
        edges,
        complete: v["complete"].as_bool().unwrap_or(true),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn example_b_cut_lattice_is_a_path() {
        let qp = fixtures::example_b();
        let g = cut_lattice(&qp);
        assert_eq!(g.node_count(), 3);
        assert!(g.is_connected());
        assert!(g.is_symmetric());
    }

    #[test]
    fn empty_graph_exports_cleanly() {
        let g = LatticeGraph {
            seed: "empty".into(),
            node_keys: vec![],
            node_labels: vec![],
            edges: vec![],
            complete: true,
        };
        let dot = export_dot(&g);
        assert!(dot.starts_with("graph lattice {"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn json_round_trip() {
        let qp = fixtures::example_a();
        let g = cut_lattice(&qp);
        let text = export_json(&g);
        let back = import_json(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn transitivity_on_smallest_triangle() {
        let qp = crate::families::triangle_qp(3).unwrap().qp();
        let rep = transitivity_report(&qp, 64).unwrap();
        assert!(rep.hypotheses_hold);
        assert!(rep.all_pairs_connected);
        // one explicit path per ordered pair of distinct cuts
        let n = rep.cuts.len();
        assert_eq!(rep.paths.len(), n * (n - 1));
        assert!(rep.paths.iter().all(|(_, _, p)| !p.is_empty()));
    }

    #[test]
    fn transitivity_on_first_example_fails_selfinjectivity() {
        // two of its cuts are not algebraic, so the QP cannot be
        // selfinjective and the report must say so
        let qp = fixtures::example_a();
        let rep = transitivity_report(&qp, 24).unwrap();
        assert!(!rep.selfinjective);
        assert!(rep.fully_compatible);
        assert!(rep.enough_cuts);
        assert!(!rep.hypotheses_hold);
    }

    #[test]
    fn transitivity_hypotheses_reported_honestly() {
        // the parallel-arrow example is not selfinjective: no claim is made
        let qp = fixtures::example_b();
        let rep = transitivity_report(&qp, 24).unwrap();
        assert!(!rep.selfinjective);
        assert!(!rep.hypotheses_hold);
        assert!(rep.paths.is_empty());
    }
}
