//! Cut enumeration, algebraic cuts, gradings, compatibility and
//! cut-mutation.

use std::collections::BTreeMap;

use crate::algebra::{
    check_cut, min_generation_check, truncated_jacobian, truncation_relations, JacobianOutcome,
};
use crate::error::{QpError, Result};
use crate::modules::global_dimension_le;
use crate::potential::QP;
use crate::quiver::{ArrowId, Quiver, VertexId};

/// The degree-one grading induced by an arrow subset.
pub fn grading(cut: &[ArrowId]) -> impl Fn(ArrowId) -> i64 + '_ {
    move |a| {
        if cut.contains(&a) {
            1
        } else {
            0
        }
    }
}

/// All cuts of the QP: subsets of the arrows occurring in the potential such
/// that every potential cycle meets the subset exactly once (counting
/// multiplicity). Enumerated as an exact cover over (cycle, arrow) incidence.
pub fn enumerate_cuts(qp: &QP) -> Vec<Vec<ArrowId>> {
    let cycles: Vec<&crate::potential::CyclicWord> = qp.potential.cycles().collect();
    if cycles.is_empty() {
        return vec![Vec::new()];
    }
    let arrows = qp.potential.support();
    // candidate arrows cover each cycle with their multiplicity; arrows of
    // multiplicity >= 2 in some cycle can never belong to a cut
    let candidates: Vec<ArrowId> = arrows
        .into_iter()
        .filter(|&a| cycles.iter().all(|w| w.multiplicity(a) <= 1))
        .collect();
    let incidence: Vec<Vec<usize>> = candidates
        .iter()
        .map(|&a| {
            cycles
                .iter()
                .enumerate()
                .filter(|(_, w)| w.contains(a))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut covered = vec![false; cycles.len()];
    let mut chosen: Vec<usize> = Vec::new();
    let mut out: Vec<Vec<ArrowId>> = Vec::new();
    // exact cover search: always branch on the uncovered cycle with the
    // fewest remaining candidate arrows
    fn search(
        cycles_n: usize,
        candidates: &[ArrowId],
        incidence: &[Vec<usize>],
        covered: &mut Vec<bool>,
        banned: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<ArrowId>>,
    ) {
        let Some(target) = (0..cycles_n)
            .filter(|&c| !covered[c])
            .min_by_key(|&c| {
                (0..candidates.len())
                    .filter(|&ai| !banned[ai] && incidence[ai].contains(&c))
                    .count()
            })
        else {
            let mut cut: Vec<ArrowId> = chosen.iter().map(|&i| candidates[i]).collect();
            cut.sort();
            out.push(cut);
            return;
        };
        let options: Vec<usize> = (0..candidates.len())
            .filter(|&ai| !banned[ai] && incidence[ai].contains(&target))
            .collect();
        for ai in options {
            // choose arrow ai: it must not touch an already covered cycle
            if incidence[ai].iter().any(|&c| covered[c]) {
                continue;
            }
            for &c in &incidence[ai] {
                covered[c] = true;
            }
            chosen.push(ai);
            // ban arrows that now conflict (touch a covered cycle)
            let newly_banned: Vec<usize> = (0..candidates.len())
                .filter(|&bi| !banned[bi] && incidence[bi].iter().any(|&c| covered[c]))
                .collect();
            for &bi in &newly_banned {
                banned[bi] = true;
            }
            search(cycles_n, candidates, incidence, covered, banned, chosen, out);
            for &bi in &newly_banned {
                banned[bi] = false;
            }
            chosen.pop();
            for &c in &incidence[ai] {
                covered[c] = false;
            }
            // ban this arrow for the remaining options at this level
            banned[ai] = true;
        }
        // restore bans set at this level
        for ai in (0..candidates.len()).filter(|&ai| incidence[ai].contains(&target)) {
            banned[ai] = false;
        }
    }
    let mut banned = vec![false; candidates.len()];
    search(
        cycles.len(),
        &candidates,
        &incidence,
        &mut covered,
        &mut banned,
        &mut chosen,
        &mut out,
    );
    out.sort();
    out.dedup();
    out
}

/// Verdict of the algebraic-cut test with its diagnostic.
#[derive(Clone, Debug)]
pub struct AlgebraicCutReport {
    pub algebraic: bool,
    pub finite_dimensional: bool,
    pub gldim_le_two: bool,
    pub minimal_relations: bool,
    pub diagnostic: String,
}

/// A cut is algebraic when the truncated Jacobian algebra is finite
/// dimensional of global dimension at most two and the derivative relations
/// minimally generate their ideal.
pub fn is_algebraic_cut(qp: &QP, cut: &[ArrowId], degree_bound: usize) -> Result<AlgebraicCutReport> {
    check_cut(qp, cut)?;
    let outcome = truncated_jacobian(qp, cut, degree_bound)?;
    let alg = match outcome {
        JacobianOutcome::Finite(a) => a,
        JacobianOutcome::Undetermined { bound, .. } => {
            return Err(QpError::UndeterminedDimension(bound))
        }
    };
    let gldim = global_dimension_le(&alg, 2);
    let (sub, gens) = truncation_relations(qp, cut)?;
    let minimal = if gens.is_empty() {
        true
    } else {
        min_generation_check(&gens, &sub, degree_bound.min(2 * qp.potential.max_cycle_len() + 4))?
    };
    let algebraic = gldim && minimal;
    let diagnostic = if algebraic {
        "algebraic".to_string()
    } else if !gldim {
        "global dimension exceeds two".to_string()
    } else {
        "derivative relations are not a minimal generating set".to_string()
    };
    Ok(AlgebraicCutReport {
        algebraic,
        finite_dimensional: true,
        gldim_le_two: gldim,
        minimal_relations: minimal,
        diagnostic,
    })
}

/// Compatibility of two arrow subsets: their gradings agree on every cyclic
/// walk, equivalently the difference is the coboundary of a height function.
pub fn cuts_compatible(q: &Quiver, c1: &[ArrowId], c2: &[ArrowId]) -> bool {
    coboundary_certificate(q, c1, c2).is_some()
}

/// A vertex function θ with θ(e(a)) - θ(s(a)) = g_{c1}(a) - g_{c2}(a) for all
/// arrows, when one exists.
pub fn coboundary_certificate(q: &Quiver, c1: &[ArrowId], c2: &[ArrowId]) -> Option<Vec<i64>> {
    let g1 = grading(c1);
    let g2 = grading(c2);
    let n = q.vertex_count();
    let mut theta: Vec<Option<i64>> = vec![None; n];
    for comp in q.components() {
        let root = comp[0];
        theta[root.index()] = Some(0);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let tv = theta[v.index()].unwrap();
            for a in q.arrow_ids() {
                let (s, t) = (q.source(a), q.target(a));
                let d = g1(a) - g2(a);
                if s == v {
                    match theta[t.index()] {
                        None => {
                            theta[t.index()] = Some(tv + d);
                            stack.push(t);
                        }
                        Some(tt) => {
                            if tt - tv != d {
                                return None;
                            }
                        }
                    }
                }
                if t == v {
                    match theta[s.index()] {
                        None => {
                            theta[s.index()] = Some(tv - d);
                            stack.push(s);
                        }
                        Some(ts) => {
                            if tv - ts != d {
                                return None;
                            }
                        }
                    }
                }
            }
        }
    }
    Some(theta.into_iter().map(|t| t.unwrap_or(0)).collect())
}

/// All subsets compatible with the given one, enumerated through height
/// functions with increments keeping every grading value in {0, 1}.
/// Disconnected quivers combine their components independently.
pub fn compatibility_class(q: &Quiver, cut: &[ArrowId]) -> Vec<Vec<ArrowId>> {
    let g = grading(cut);
    let comps = q.components();
    // enumerate per-component height assignments
    let mut class: Vec<Vec<ArrowId>> = vec![Vec::new()];
    for comp in comps {
        let assignments = component_heights(q, &g, &comp);
        let mut next = Vec::new();
        for base in &class {
            for theta in &assignments {
                let mut cut2 = base.clone();
                for a in q.arrow_ids() {
                    let (s, t) = (q.source(a), q.target(a));
                    if comp.contains(&s) {
                        let d = g(a) + theta[&t] - theta[&s];
                        debug_assert!(d == 0 || d == 1);
                        if d == 1 {
                            cut2.push(a);
                        }
                    }
                }
                next.push(cut2);
            }
        }
        class = next;
    }
    for c in &mut class {
        c.sort();
    }
    class.sort();
    class.dedup();
    class
}

/// All height functions on one component (up to global shift) whose
/// increments keep g + dθ in {0, 1}.
fn component_heights(
    q: &Quiver,
    g: &impl Fn(ArrowId) -> i64,
    comp: &[VertexId],
) -> Vec<BTreeMap<VertexId, i64>> {
    let root = comp[0];
    let mut out = Vec::new();
    let mut theta: BTreeMap<VertexId, i64> = BTreeMap::new();
    theta.insert(root, 0);
    // arrows within the component
    let arrows: Vec<ArrowId> = q
        .arrow_ids()
        .filter(|&a| comp.contains(&q.source(a)))
        .collect();
    fn assignable(
        q: &Quiver,
        g: &impl Fn(ArrowId) -> i64,
        arrows: &[ArrowId],
        theta: &BTreeMap<VertexId, i64>,
    ) -> bool {
        arrows.iter().all(|&a| {
            let (s, t) = (q.source(a), q.target(a));
            match (theta.get(&s), theta.get(&t)) {
                (Some(&ts), Some(&tt)) => {
                    let d = g(a) + tt - ts;
                    d == 0 || d == 1
                }
                _ => true,
            }
        })
    }
    fn extend(
        q: &Quiver,
        g: &impl Fn(ArrowId) -> i64,
        comp: &[VertexId],
        arrows: &[ArrowId],
        theta: &mut BTreeMap<VertexId, i64>,
        out: &mut Vec<BTreeMap<VertexId, i64>>,
    ) {
        // next unassigned vertex adjacent to an assigned one
        let next = comp.iter().find(|v| !theta.contains_key(v) && {
            arrows.iter().any(|&a| {
                let (s, t) = (q.source(a), q.target(a));
                (s == **v && theta.contains_key(&t)) || (t == **v && theta.contains_key(&s))
            })
        });
        let Some(&v) = next else {
            if theta.len() == comp.len() {
                out.push(theta.clone());
            }
            return;
        };
        // candidate values from any constraining arrow
        let mut candidates: Option<Vec<i64>> = None;
        for &a in arrows {
            let (s, t) = (q.source(a), q.target(a));
            let range: Option<Vec<i64>> = if s == v {
                theta.get(&t).map(|&tt| vec![g(a) + tt, g(a) + tt - 1])
            } else if t == v {
                theta.get(&s).map(|&ts| vec![ts - g(a), ts - g(a) + 1])
            } else {
                None
            };
            if let Some(r) = range {
                candidates = Some(match candidates {
                    None => r,
                    Some(prev) => prev.into_iter().filter(|x| r.contains(x)).collect(),
                });
            }
        }
        for val in candidates.unwrap_or_default() {
            theta.insert(v, val);
            if assignable(q, g, arrows, theta) {
                extend(q, g, comp, arrows, theta, out);
            }
            theta.remove(&v);
        }
    }
    extend(q, g, comp, &arrows, &mut theta, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Vertices whose incoming arrows all lie in the subset and outgoing arrows
/// all do not.
pub fn strict_sources(q: &Quiver, cut: &[ArrowId]) -> Vec<VertexId> {
    q.vertices()
        .filter(|&v| {
            q.arrows_into(v).iter().all(|a| cut.contains(a))
                && q.arrows_from(v).iter().all(|a| !cut.contains(a))
        })
        .collect()
}

pub fn strict_sinks(q: &Quiver, cut: &[ArrowId]) -> Vec<VertexId> {
    q.vertices()
        .filter(|&v| {
            q.arrows_from(v).iter().all(|a| cut.contains(a))
                && q.arrows_into(v).iter().all(|a| !cut.contains(a))
        })
        .collect()
}

/// Cut-mutation at a strict source: incoming arrows leave the subset,
/// outgoing arrows join it.
pub fn cut_mutate_plus(q: &Quiver, cut: &[ArrowId], x: VertexId) -> Result<Vec<ArrowId>> {
    if !strict_sources(q, cut).contains(&x) {
        return Err(QpError::NotStrictSource(q.vertex_name(x).to_string()));
    }
    let mut out: Vec<ArrowId> = cut
        .iter()
        .copied()
        .filter(|&a| q.target(a) != x)
        .collect();
    out.extend(q.arrows_from(x));
    out.sort();
    out.dedup();
    Ok(out)
}

/// Cut-mutation at a strict sink: outgoing arrows leave, incoming join.
pub fn cut_mutate_minus(q: &Quiver, cut: &[ArrowId], x: VertexId) -> Result<Vec<ArrowId>> {
    if !strict_sinks(q, cut).contains(&x) {
        return Err(QpError::NotStrictSink(q.vertex_name(x).to_string()));
    }
    let mut out: Vec<ArrowId> = cut
        .iter()
        .copied()
        .filter(|&a| q.source(a) != x)
        .collect();
    out.extend(q.arrows_into(x));
    out.sort();
    out.dedup();
    Ok(out)
}

/// Whether every arrow of the quiver lies in some cut.
pub fn has_enough_cuts(qp: &QP) -> bool {
    let cuts = enumerate_cuts(qp);
    let mut covered = vec![false; qp.quiver.arrow_count()];
    for cut in &cuts {
        for a in cut {
            covered[a.index()] = true;
        }
    }
    covered.into_iter().all(|b| b)
}

/// Whether all cuts are pairwise compatible. Compatibility is equality of
/// the induced grading on cyclic walks, hence an equivalence relation, so
/// comparing every cut against the first suffices.
pub fn is_fully_compatible(qp: &QP) -> bool {
    let cuts = enumerate_cuts(qp);
    let Some(first) = cuts.first() else {
        return true;
    };
    cuts[1..]
        .iter()
        .all(|c| cuts_compatible(&qp.quiver, first, c))
}

/// Whether each arrow sits on a cycle of grading at most one.
pub fn is_sufficiently_cyclic(q: &Quiver, cut: &[ArrowId]) -> bool {
    let mut weight = vec![0i64; q.arrow_count()];
    for &c in cut {
        weight[c.index()] = 1;
    }
    q.arrow_ids().all(|a| {
        // 0-1 BFS from e(a) back to s(a) minimizing total grading
        let start = q.target(a);
        let goal = q.source(a);
        let n = q.vertex_count();
        let mut dist = vec![i64::MAX; n];
        dist[start.index()] = 0;
        let mut deque = std::collections::VecDeque::new();
        deque.push_back(start);
        while let Some(v) = deque.pop_front() {
            for &b in q.arrows_from_ref(v) {
                let w = weight[b.index()];
                let nd = dist[v.index()] + w;
                let t = q.target(b);
                if nd < dist[t.index()] {
                    dist[t.index()] = nd;
                    if w == 0 {
                        deque.push_front(t);
                    } else {
                        deque.push_back(t);
                    }
                }
            }
        }
        dist[goal.index()] != i64::MAX && dist[goal.index()] + weight[a.index()] <= 1
    })
}

/// Whether the compatibility class covers all arrows. For sufficiently
/// cyclic truncated quivers this is equivalent to acyclicity of the
/// truncated quiver; without that hypothesis acyclicity can hold while
/// coverage fails (a quiver with no cycles at all is the smallest example).
pub fn has_enough_compatibles(q: &Quiver, cut: &[ArrowId]) -> bool {
    let class = compatibility_class(q, cut);
    let mut covered = vec![false; q.arrow_count()];
    for c in &class {
        for a in c {
            covered[a.index()] = true;
        }
    }
    let union_covers = covered.into_iter().all(|b| b);
    if is_sufficiently_cyclic(q, cut) {
        let (sub, _) = q.delete_arrows(cut);
        debug_assert_eq!(union_covers, sub.is_acyclic(), "enough compatibles vs acyclicity");
    }
    union_covers
}

/// A numbering of all vertices by repeated source elimination in the
/// truncated quiver, mutating the cut as it proceeds.
pub fn source_sequence(q: &Quiver, cut: &[ArrowId], strict: bool) -> Result<Vec<VertexId>> {
    let mut current: Vec<ArrowId> = cut.to_vec();
    let mut remaining: Vec<VertexId> = q.vertices().collect();
    let mut seq = Vec::new();
    while !remaining.is_empty() {
        let pick = remaining.iter().copied().find(|&v| {
            let source_in_qc = q
                .arrows_into(v)
                .iter()
                .all(|a| current.contains(a));
            if !source_in_qc {
                return false;
            }
            if strict {
                q.arrows_from(v).iter().all(|a| !current.contains(a))
            } else {
                true
            }
        });
        let Some(v) = pick else {
            return Err(QpError::NoSequence);
        };
        // apply the mutation formula regardless of strictness
        current.retain(|&a| q.target(a) != v);
        current.extend(q.arrows_from(v));
        current.sort();
        current.dedup();
        seq.push(v);
        remaining.retain(|&u| u != v);
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(q: &Quiver, cut: &[ArrowId]) -> Vec<String> {
        cut.iter().map(|&a| q.arrow_name(a).to_string()).collect()
    }

    #[test]
    fn example_a_has_five_cuts() {
        let qp = fixtures::example_a();
        let cuts = enumerate_cuts(&qp);
        let got: Vec<Vec<String>> = cuts.iter().map(|c| names(&qp.quiver, c)).collect();
        let expect: Vec<Vec<&str>> = vec![
            vec!["a", "c"],
            vec!["a", "d"],
            vec!["b"],
            vec!["c", "e"],
            vec!["d", "e"],
        ];
        let mut got_sorted = got.clone();
        got_sorted.sort();
        let mut expect_sorted: Vec<Vec<String>> = expect
            .iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect())
            .collect();
        expect_sorted.sort();
        assert_eq!(got_sorted, expect_sorted);
    }

    #[test]
    fn example_b_has_three_cuts() {
        let qp = fixtures::example_b();
        let cuts = enumerate_cuts(&qp);
        assert_eq!(cuts.len(), 3);
        let got: Vec<Vec<String>> = cuts.iter().map(|c| names(&qp.quiver, c)).collect();
        assert!(got.contains(&vec!["a".to_string()]));
        assert!(got.contains(&vec!["b".to_string()]));
        assert!(got.contains(&vec!["c".to_string(), "d".to_string()]));
    }

    #[test]
    fn zero_potential_has_only_empty_cut() {
        let qp = fixtures::covering_example();
        let cuts = enumerate_cuts(&qp);
        assert_eq!(cuts, vec![Vec::new()]);
        assert!(!has_enough_cuts(&qp)); // three arrows, none covered
    }

    #[test]
    fn example_a_exactly_three_algebraic() {
        let qp = fixtures::example_a();
        let cuts = enumerate_cuts(&qp);
        let mut algebraic = Vec::new();
        let mut bad = Vec::new();
        for cut in &cuts {
            let rep = is_algebraic_cut(&qp, cut, 24).unwrap();
            assert!(rep.finite_dimensional);
            if rep.algebraic {
                algebraic.push(names(&qp.quiver, cut));
            } else {
                assert!(!rep.gldim_le_two);
                bad.push(names(&qp.quiver, cut));
            }
        }
        assert_eq!(algebraic.len(), 3);
        assert_eq!(bad.len(), 2);
        // regression record: the two failing cuts pair the chain-adjacent
        // derivative relations
        bad.sort();
        assert_eq!(bad, vec![vec!["a", "c"], vec!["d", "e"]]);
        // and they fail at global dimension 2 but pass at 3
        for cutnames in &bad {
            let cut: Vec<ArrowId> = cutnames
                .iter()
                .map(|n| qp.quiver.arrow_by_name(n).unwrap())
                .collect();
            let alg = truncated_jacobian(&qp, &cut, 24).unwrap().finite().unwrap();
            assert!(!global_dimension_le(&alg, 2));
            assert!(global_dimension_le(&alg, 3));
        }
    }

    #[test]
    fn example_b_cd_fails_minimality() {
        let qp = fixtures::example_b();
        let q = &qp.quiver;
        let cut = vec![q.arrow_by_name("c").unwrap(), q.arrow_by_name("d").unwrap()];
        let rep = is_algebraic_cut(&qp, &cut, 24).unwrap();
        assert!(!rep.algebraic);
        assert!(rep.gldim_le_two);
        assert!(!rep.minimal_relations);
        assert!(rep.diagnostic.contains("minimal"));
    }

    #[test]
    fn covering_example_compatibility() {
        let qp = fixtures::covering_example();
        let q = &qp.quiver;
        let b = q.arrow_by_name("b").unwrap();
        let c = q.arrow_by_name("c").unwrap();
        let class = compatibility_class(q, &[b]);
        assert_eq!(class.len(), 2);
        assert!(class.contains(&vec![b]));
        assert!({
            let mut bc = vec![b, c];
            bc.sort();
            class.contains(&bc)
        });
        // self-compatibility
        assert!(cuts_compatible(q, &[b], &[b]));
    }

    #[test]
    fn covering_example_strict_sources_and_mutation() {
        let qp = fixtures::covering_example();
        let q = &qp.quiver;
        let b = q.arrow_by_name("b").unwrap();
        let c = q.arrow_by_name("c").unwrap();
        let v3 = q.vertex_by_name("3").unwrap();
        assert_eq!(strict_sources(q, &[b, c]), vec![v3]);
        assert!(strict_sources(q, &[b]).is_empty());
        let mutated = cut_mutate_plus(q, &[b, c], v3).unwrap();
        assert_eq!(mutated, vec![b]);
        // involution
        let back = cut_mutate_minus(q, &mutated, v3).unwrap();
        let mut bc = vec![b, c];
        bc.sort();
        assert_eq!(back, bc);
    }

    #[test]
    fn isolated_vertex_is_both_strict_source_and_sink() {
        let q = Quiver::from_names(&["1"], &[]).unwrap();
        assert_eq!(strict_sources(&q, &[]), vec![VertexId(0)]);
        assert_eq!(strict_sinks(&q, &[]), vec![VertexId(0)]);
    }

    #[test]
    fn source_sequence_on_example_a() {
        let qp = fixtures::example_a();
        let q = &qp.quiver;
        let b = q.arrow_by_name("b").unwrap();
        let seq = source_sequence(q, &[b], false).unwrap();
        assert_eq!(seq.len(), 4);
    }

    #[test]
    fn no_source_sequence_with_cycle() {
        let qp = fixtures::example_a();
        match source_sequence(&qp.quiver, &[], false) {
            Err(QpError::NoSequence) => {}
            other => panic!("expected NoSequence, got {other:?}"),
        }
    }

    #[test]
    fn exact_cover_enumeration_matches_brute_force() {
        // independent oracle: filter all subsets of the potential support
        for qp in [
            fixtures::example_a(),
            fixtures::example_b(),
            crate::families::cycle_qp(4).unwrap(),
            crate::families::triangle_qp(3).unwrap().qp(),
            crate::families::tubular_2222(crate::potential::coeff(2)).unwrap(),
        ] {
            let support = qp.potential.support();
            assert!(support.len() <= 20, "oracle stays brute-forceable");
            let mut brute: Vec<Vec<ArrowId>> = Vec::new();
            for mask in 0u32..(1 << support.len()) {
                let subset: Vec<ArrowId> = support
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &a)| a)
                    .collect();
                if crate::algebra::check_cut(&qp, &subset).is_ok() {
                    brute.push(subset);
                }
            }
            brute.sort();
            assert_eq!(enumerate_cuts(&qp), brute);
        }
    }

    #[test]
    fn all_cuts_of_selfinjective_fixtures_are_algebraic() {
        // every cut of a selfinjective QP is algebraic, and the associated
        // QP of the truncation recovers the original up to isomorphism
        for qp in [
            crate::families::cycle_qp(4).unwrap(),
            crate::families::triangle_qp(3).unwrap().qp(),
        ] {
            for cut in enumerate_cuts(&qp) {
                let rep = is_algebraic_cut(&qp, &cut, 32).unwrap();
                assert!(rep.algebraic, "cut {:?}", cut);
                let (sub, gens) = truncation_relations(&qp, &cut).unwrap();
                let aqp = crate::selfinjective::qp_of_algebra(&sub, &gens, 32).unwrap();
                assert!(crate::iso::is_isomorphic(&aqp.qp, &qp));
            }
        }
    }

    #[test]
    fn strict_source_sequence_on_cycle() {
        // the 4-cycle with a single-arrow cut is sufficiently cyclic, so a
        // strict source sequence exists
        let qp = crate::families::cycle_qp(4).unwrap();
        let a1 = qp.quiver.arrow_by_name("a1").unwrap();
        assert!(is_sufficiently_cyclic(&qp.quiver, &[a1]));
        let seq = source_sequence(&qp.quiver, &[a1], true).unwrap();
        assert_eq!(seq.len(), 4);
        assert!(has_enough_compatibles(&qp.quiver, &[a1]));
        // the class consists of the four single-arrow cuts
        let class = compatibility_class(&qp.quiver, &[a1]);
        assert_eq!(class.len(), 4);
        assert!(class.iter().all(|c| c.len() == 1));
        // adjacent single-arrow cuts are compatible
        let a2 = qp.quiver.arrow_by_name("a2").unwrap();
        assert!(cuts_compatible(&qp.quiver, &[a1], &[a2]));
    }

    #[test]
    fn example_a_has_enough_cuts() {
        let qp = fixtures::example_a();
        assert!(has_enough_cuts(&qp));
    }
}
