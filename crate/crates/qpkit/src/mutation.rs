//! QP mutation: premutation, 2-cycle reduction by explicit substitutions,
//! full mutation and Nakayama-orbit mutation.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{QpError, Result};
use crate::iso;
use crate::potential::{
    cyclic_derivative, AlgebraElement, Coeff, CyclicWord, Potential, QP,
};
use crate::quiver::{ArrowId, Path, Quiver, VertexId};

/// Result of a mutation or reduction.
#[derive(Clone, Debug)]
pub struct MutationResult {
    pub qp: QP,
    pub reduced: bool,
    /// number of 2-cycle pairs split off as the trivial part
    pub trivial_part_rank: usize,
}

/// Premutation at a vertex: reverse the incident arrows, add one composite
/// arrow per incoming/outgoing pair, rewrite through-paths in the potential
/// and add the composite 3-cycles.
pub fn premutate(qp: &QP, k: VertexId) -> Result<QP> {
    let q = &qp.quiver;
    // no loops and no 2-cycles at k
    for a in q.arrow_ids() {
        if q.source(a) == k && q.target(a) == k {
            return Err(QpError::TwoCycleAtVertex(q.vertex_name(k).to_string()));
        }
    }
    for a in q.arrows_into(k) {
        for b in q.arrows_from(k) {
            // a: x -> k together with b: k -> x closes a 2-cycle
            if q.source(a) == q.target(b) {
                return Err(QpError::TwoCycleAtVertex(q.vertex_name(k).to_string()));
            }
        }
    }
    let ins = q.arrows_into(k);
    let outs = q.arrows_from(k);
    let mut new_q = Quiver::new();
    for v in q.vertices() {
        new_q.add_vertex(q.vertex_name(v))?;
    }
    // untouched arrows keep their names
    let mut name_of: BTreeMap<ArrowId, String> = BTreeMap::new();
    for a in q.arrow_ids() {
        if ins.contains(&a) || outs.contains(&a) {
            continue;
        }
        new_q.add_arrow(q.arrow_name(a), q.source(a), q.target(a))?;
        name_of.insert(a, q.arrow_name(a).to_string());
    }
    // reversed arrows
    for &a in ins.iter().chain(outs.iter()) {
        let name = format!("{}*", q.arrow_name(a));
        new_q.add_arrow(&name, q.target(a), q.source(a))?;
        name_of.insert(a, name);
    }
    // composite arrows [a|b] for a: x -> k, b: k -> y
    let mut comp: BTreeMap<(ArrowId, ArrowId), String> = BTreeMap::new();
    for &a in &ins {
        for &b in &outs {
            let name = format!("[{}|{}]", q.arrow_name(a), q.arrow_name(b));
            new_q.add_arrow(&name, q.source(a), q.target(b))?;
            comp.insert((a, b), name);
        }
    }
    // rewrite the potential
    let mut w = Potential::zero();
    for (cyc, c) in qp.potential.terms() {
        let arrows = cyc.arrows();
        let n = arrows.len();
        // rotate so the cycle does not start at k
        let start = (0..n)
            .find(|&i| q.source(arrows[i]) != k)
            .expect("cycles at k only would be loops");
        let rotated: Vec<ArrowId> = (0..n).map(|i| arrows[(start + i) % n]).collect();
        let mut new_arrows: Vec<ArrowId> = Vec::with_capacity(n);
        let mut i = 0;
        while i < n {
            let a = rotated[i];
            if q.target(a) == k {
                // the next arrow leaves k; replace the pair by the composite
                let b = rotated[(i + 1) % n];
                debug_assert_eq!(q.source(b), k);
                debug_assert!(i + 1 < n, "cycle rotated off k");
                let name = &comp[&(a, b)];
                new_arrows.push(new_q.arrow_by_name(name).expect("composite exists"));
                i += 2;
            } else {
                let name = &name_of[&a];
                new_arrows.push(new_q.arrow_by_name(name).expect("kept arrow"));
                i += 1;
            }
        }
        let cw = CyclicWord::from_arrow_cycle(&new_q, new_arrows)?;
        w.add_term(cw, c.clone())?;
    }
    // composite triangles [a|b] b* a*
    for &a in &ins {
        for &b in &outs {
            let cab = new_q.arrow_by_name(&comp[&(a, b)]).unwrap();
            let bs = new_q.arrow_by_name(&name_of[&b]).unwrap();
            let as_ = new_q.arrow_by_name(&name_of[&a]).unwrap();
            let cw = CyclicWord::from_arrow_cycle(&new_q, vec![cab, bs, as_])?;
            w.add_term(cw, Coeff::one())?;
        }
    }
    QP::new(new_q, w)
}

/// Applies arrow substitutions to a potential, expanding multilinearly.
fn substitute_potential(
    q: &Quiver,
    w: &Potential,
    subs: &BTreeMap<ArrowId, AlgebraElement>,
    degree_bound: usize,
) -> Result<Potential> {
    let mut out = Potential::zero();
    for (cyc, c) in w.terms() {
        let mut acc: Option<AlgebraElement> = None;
        for &l in cyc.arrows() {
            let factor = subs.get(&l).cloned().unwrap_or_else(|| {
                AlgebraElement::from_path(Path::from_arrows(q, vec![l]).expect("arrow path"))
            });
            acc = Some(match acc {
                None => factor,
                Some(prev) => prev.mul(&factor, q),
            });
        }
        let expanded = acc.expect("cycles are nonempty");
        for (p, pc) in expanded.terms() {
            if p.len() > degree_bound {
                return Err(QpError::ReductionBoundExceeded(degree_bound));
            }
            if p.len() < 2 {
                // substitutions never map into trivial paths here
                return Err(QpError::ReductionBoundExceeded(degree_bound));
            }
            let cw = CyclicWord::new(q, p)?;
            out.add_term(cw, c.clone() * pc.clone())?;
        }
    }
    Ok(out)
}

/// Occurrences of an arrow in the potential outside a designated cycle.
fn occurrences_outside(w: &Potential, a: ArrowId, skip: &CyclicWord) -> usize {
    w.terms()
        .filter(|(cyc, _)| *cyc != skip)
        .map(|(cyc, _)| cyc.multiplicity(a))
        .sum()
}

/// Splits off all removable 2-cycles from the potential by the substitution
/// scheme, iterating to a fixed point.
pub fn reduce_qp(qp: &QP, degree_bound: usize) -> Result<MutationResult> {
    let mut current = qp.clone();
    let mut rank = 0usize;
    'outer: loop {
        let q = current.quiver.clone();
        // 2-cycle terms, preferring the one whose arrows occur least elsewhere
        let mut two_cycles: Vec<(CyclicWord, Coeff)> = current
            .potential
            .terms()
            .filter(|(cyc, _)| cyc.len() == 2)
            .map(|(cyc, c)| (cyc.clone(), c.clone()))
            .collect();
        if two_cycles.is_empty() {
            return Ok(MutationResult {
                qp: current,
                reduced: true,
                trivial_part_rank: rank,
            });
        }
        two_cycles.sort_by(|(c1, _), (c2, _)| {
            let occ = |cyc: &CyclicWord| {
                occurrences_outside(&current.potential, cyc.arrows()[0], cyc)
                    + occurrences_outside(&current.potential, cyc.arrows()[1], cyc)
            };
            occ(c1).cmp(&occ(c2)).then(c2.cmp(c1))
        });
        let (target, _) = two_cycles[0].clone();
        let u = target.arrows()[0];
        let v = target.arrows()[1];
        // isolate u, v in the target term by repeated substitution
        for _round in 0..64 {
            let c = current.potential.coefficient(&target);
            if c == Coeff::from_integer(0.into()) {
                // the 2-cycle vanished; restart the outer scan
                continue 'outer;
            }
            let out_u = occurrences_outside(&current.potential, u, &target);
            let out_v = occurrences_outside(&current.potential, v, &target);
            let deg_u = target.multiplicity(u);
            let deg_v = target.multiplicity(v);
            if deg_u != 1 || deg_v != 1 {
                // 2-cycle uses one arrow twice (a loop square); not splittable
                return Err(QpError::ReductionBoundExceeded(degree_bound));
            }
            if out_u == 0 && out_v == 0 {
                // split off: delete both arrows and the term
                let (sub, old_to_new) = q.delete_arrows(&[u, v]);
                let mut w = Potential::zero();
                for (cyc, cc) in current.potential.terms() {
                    if cyc == &target {
                        continue;
                    }
                    let arrows: Vec<ArrowId> =
                        cyc.arrows().iter().map(|a| old_to_new[a]).collect();
                    w.add_term(CyclicWord::from_arrow_cycle(&sub, arrows)?, cc.clone())?;
                }
                current = QP::new(sub, w)?;
                rank += 1;
                continue 'outer;
            }
            // rest = W - c·uv
            let mut rest = current.potential.clone();
            let negc = -c.clone();
            rest.add_term(target.clone(), negc).expect("cancel 2-cycle");
            let du = cyclic_derivative(&q, &rest, u);
            let dv = cyclic_derivative(&q, &rest, v);
            let cinv = Coeff::one() / c.clone();
            let mut subs: BTreeMap<ArrowId, AlgebraElement> = BTreeMap::new();
            let u_el = AlgebraElement::from_path(Path::from_arrows(&q, vec![u]).unwrap());
            let v_el = AlgebraElement::from_path(Path::from_arrows(&q, vec![v]).unwrap());
            subs.insert(u, u_el.sub(&dv.scale(&cinv)));
            subs.insert(v, v_el.sub(&du.scale(&cinv)));
            let substituted = substitute_potential(&q, &current.potential, &subs, degree_bound)?;
            current = QP::new(q.clone(), substituted)?;
        }
        return Err(QpError::ReductionBoundExceeded(degree_bound));
    }
}

/// Full mutation: premutation followed by reduction.
pub fn mutate(qp: &QP, k: VertexId, degree_bound: usize) -> Result<MutationResult> {
    reduce_qp(&premutate(qp, k)?, degree_bound)
}

/// Sequential mutation along the sigma-orbit of a vertex. Requires no arrows
/// between orbit vertices; asserts order independence by also mutating in
/// the reverse order and comparing up to isomorphism.
pub fn orbit_mutate(
    qp: &QP,
    sigma: &[VertexId],
    k: VertexId,
    degree_bound: usize,
) -> Result<MutationResult> {
    let q = &qp.quiver;
    let mut orbit = vec![k];
    let mut at = sigma[k.index()];
    while at != k {
        orbit.push(at);
        at = sigma[at.index()];
        if orbit.len() > q.vertex_count() {
            return Err(QpError::OrbitPreconditionViolated(
                "sigma is not a permutation".into(),
            ));
        }
    }
    for a in q.arrow_ids() {
        let s = q.source(a);
        let t = q.target(a);
        if s != t && orbit.contains(&s) && orbit.contains(&t) {
            return Err(QpError::OrbitPreconditionViolated(format!(
                "arrow {} joins orbit vertices",
                q.arrow_name(a)
            )));
        }
    }
    let run = |order: &[VertexId]| -> Result<MutationResult> {
        let mut current = MutationResult {
            qp: qp.clone(),
            reduced: true,
            trivial_part_rank: 0,
        };
        for &v in order {
            // vertices keep their indices across mutation
            let next = mutate(&current.qp, v, degree_bound)?;
            current = MutationResult {
                qp: next.qp,
                reduced: next.reduced,
                trivial_part_rank: current.trivial_part_rank + next.trivial_part_rank,
            };
        }
        Ok(current)
    };
    let primary = run(&orbit)?;
    if orbit.len() > 1 {
        let reversed: Vec<VertexId> = orbit.iter().rev().copied().collect();
        let alt = run(&reversed)?;
        let agree = iso::is_isomorphic(&primary.qp, &alt.qp)
            || iso::is_isomorphic_up_to_rescaling(&primary.qp, &alt.qp);
        if !agree {
            return Err(QpError::OrbitPreconditionViolated(
                "orbit mutation is order dependent".into(),
            ));
        }
    }
    Ok(primary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::default_degree_bound;
    use crate::families;
    use crate::fixtures;
    use crate::iso::{is_isomorphic, is_isomorphic_up_to_rescaling, qp_canonical_form};
    use crate::potential::coeff;

    #[test]
    fn premutate_isolated_vertex_is_identity() {
        let q = Quiver::from_names(&["1", "2", "3"], &[("a", "1", "2")]).unwrap();
        let qp = QP::with_zero_potential(q);
        let k = qp.quiver.vertex_by_name("3").unwrap();
        let out = premutate(&qp, k).unwrap();
        assert_eq!(out.quiver.arrow_count(), 1);
        assert!(out.potential.is_zero());
    }

    #[test]
    fn premutate_three_cycle() {
        let qp = families::cycle_qp_unchecked(3);
        let q = &qp.quiver;
        let k = q.vertex_by_name("3").unwrap();
        let out = premutate(&qp, k).unwrap();
        // two incident arrows reversed, one composite added
        assert_eq!(out.quiver.arrow_count(), 4);
        // potential: rewritten cycle (now a 2-cycle) plus one triangle
        assert_eq!(out.potential.num_terms(), 2);
        assert!(out.potential.cycles().any(|c| c.len() == 2));
        assert!(out.potential.cycles().any(|c| c.len() == 3));
    }

    #[test]
    fn premutation_blocks_two_cycles() {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let qp = QP::with_zero_potential(q);
        match premutate(&qp, VertexId(0)) {
            Err(QpError::TwoCycleAtVertex(_)) => {}
            other => panic!("expected TwoCycleAtVertex, got {other:?}"),
        }
    }

    #[test]
    fn mutate_three_cycle_gives_acyclic_triangle() {
        // mutating the 3-cycle QP splits off the whole potential
        let qp = families::cycle_qp_unchecked(3);
        let k = qp.quiver.vertex_by_name("3").unwrap();
        let out = mutate(&qp, k, 16).unwrap();
        assert!(out.reduced);
        assert_eq!(out.trivial_part_rank, 1);
        assert!(out.qp.potential.is_zero());
        assert_eq!(out.qp.quiver.arrow_count(), 2);
    }

    #[test]
    fn reduce_already_reduced_is_identity() {
        let qp = fixtures::example_a();
        let out = reduce_qp(&qp, 16).unwrap();
        assert!(out.reduced);
        assert_eq!(out.trivial_part_rank, 0);
        assert_eq!(out.qp, qp);
    }

    #[test]
    fn loop_square_is_not_splittable() {
        // a 2-cycle term built from a single loop has no trivial-part
        // splitting; the reduction reports its bound honestly
        let q = Quiver::from_names(&["1"], &[("a", "1", "1")]).unwrap();
        let a = q.arrow_by_name("a").unwrap();
        let mut w = crate::potential::Potential::zero();
        w.add_term(
            CyclicWord::from_arrow_cycle(&q, vec![a, a]).unwrap(),
            Coeff::one(),
        )
        .unwrap();
        let qp = QP::new(q, w).unwrap();
        match reduce_qp(&qp, 8) {
            Err(QpError::ReductionBoundExceeded(_)) => {}
            other => panic!("expected ReductionBoundExceeded, got {other:?}"),
        }
    }

    #[test]
    fn tilde_q4_even_mutation_gives_q4() {
        let tilde = families::tilde_cycle_qp(4).unwrap();
        let q = &tilde.quiver;
        let v2 = q.vertex_by_name("2").unwrap();
        let v4 = q.vertex_by_name("4").unwrap();
        let m1 = mutate(&tilde, v2, 16).unwrap();
        let m2 = mutate(&m1.qp, v4, 16).unwrap();
        let target = families::cycle_qp(4).unwrap();
        assert_eq!(qp_canonical_form(&m2.qp), qp_canonical_form(&target));
    }

    #[test]
    fn mutation_involution_on_cycle() {
        let qp = families::cycle_qp(4).unwrap();
        let k = qp.quiver.vertex_by_name("2").unwrap();
        let once = mutate(&qp, k, 16).unwrap();
        let twice = mutate(&once.qp, k, 16).unwrap();
        assert!(
            is_isomorphic(&twice.qp, &qp) || is_isomorphic_up_to_rescaling(&twice.qp, &qp),
            "double mutation must recover the QP"
        );
    }

    #[test]
    fn tubular_mutation_matches_second_presentation() {
        let qp = families::tubular_2222(coeff(2)).unwrap();
        let rep = crate::selfinjective::is_selfinjective(&qp, default_degree_bound(&qp)).unwrap();
        assert!(rep.selfinjective);
        let m1 = qp.quiver.vertex_by_name("m1").unwrap();
        let out = mutate(&qp, m1, 24).unwrap();
        assert_eq!(out.trivial_part_rank, 1);
        let second = families::tubular_second_presentation(coeff(2)).unwrap();
        assert!(
            is_isomorphic_up_to_rescaling(&out.qp, &second),
            "mutated tubular QP must match the second presentation up to rescaling"
        );
    }

    #[test]
    fn orbit_mutation_trivial_orbit_is_plain_mutation() {
        let qp = families::cycle_qp(4).unwrap();
        // identity sigma: orbit of any vertex is a fixed point
        let sigma: Vec<VertexId> = qp.quiver.vertices().collect();
        let k = qp.quiver.vertex_by_name("1").unwrap();
        let orbit = orbit_mutate(&qp, &sigma, k, 16).unwrap();
        let plain = mutate(&qp, k, 16).unwrap();
        assert_eq!(qp_canonical_form(&orbit.qp), qp_canonical_form(&plain.qp));
    }

    #[test]
    fn orbit_mutation_preserves_nakayama_permutation() {
        let qp = families::tilde_cycle_qp(6).unwrap();
        let rep = crate::selfinjective::is_selfinjective(&qp, default_degree_bound(&qp)).unwrap();
        let sigma = rep.nakayama.unwrap();
        let k = qp.quiver.vertex_by_name("2").unwrap();
        let out = orbit_mutate(&qp, &sigma, k, 32).unwrap();
        let rep2 =
            crate::selfinjective::is_selfinjective(&out.qp, default_degree_bound(&out.qp)).unwrap();
        assert!(rep2.selfinjective);
        assert_eq!(rep2.nakayama.unwrap(), sigma, "the permutation survives the orbit move");
    }

    #[test]
    fn orbit_precondition_arrow_between_orbit_vertices() {
        let qp = families::cycle_qp(4).unwrap();
        // sigma swapping adjacent vertices 1 and 2 (joined by arrow a2)
        let q = &qp.quiver;
        let v1 = q.vertex_by_name("1").unwrap();
        let v2 = q.vertex_by_name("2").unwrap();
        let mut sigma: Vec<VertexId> = q.vertices().collect();
        sigma[v1.index()] = v2;
        sigma[v2.index()] = v1;
        match orbit_mutate(&qp, &sigma, v1, 16) {
            Err(QpError::OrbitPreconditionViolated(_)) => {}
            other => panic!("expected precondition violation, got {other:?}"),
        }
    }
}
