//! QP isomorphism: canonical forms, automorphism search, and isomorphism up
//! to rescaling of arrows.
//!
//! Two QPs are isomorphic when a quiver isomorphism carries one potential to
//! the other termwise with exactly matching coefficients. The canonical form
//! is a byte string equal for two QPs iff they are isomorphic, computed by
//! partition refinement plus backtracking over the remaining candidates.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{solve_f2, solve_integer, ZMat};
use crate::potential::{Coeff, CyclicWord, Potential, QP};
use crate::quiver::{ArrowId, VertexId};

/// An isomorphism of QPs as explicit vertex and arrow relabelings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QpIso {
    /// Image of each vertex of the source QP.
    pub vertex_map: Vec<VertexId>,
    /// Image of each arrow of the source QP.
    pub arrow_map: Vec<ArrowId>,
}

fn arrow_invariant(qp: &QP, a: ArrowId) -> String {
    let mut recs: Vec<String> = qp
        .potential
        .terms()
        .filter(|(w, _)| w.contains(a))
        .map(|(w, c)| format!("{}:{}:{}", c, w.len(), w.multiplicity(a)))
        .collect();
    recs.sort();
    recs.join(",")
}

fn initial_colors(qp: &QP) -> Vec<String> {
    let q = &qp.quiver;
    q.vertices()
        .map(|v| {
            let outdeg = q.arrows_from(v).len();
            let indeg = q.arrows_into(v).len();
            let mut cyc: Vec<String> = qp
                .potential
                .terms()
                .filter(|(w, _)| {
                    w.arrows().iter().any(|&a| q.source(a) == v || q.target(a) == v)
                })
                .map(|(w, c)| format!("{}:{}", c, w.len()))
                .collect();
            cyc.sort();
            format!("{outdeg}/{indeg}/{}", cyc.join(","))
        })
        .collect()
}

/// One refinement round; colors are dense indices shared across both slices.
fn refine(qps: &[&QP], colorings: &mut [Vec<usize>]) {
    loop {
        let mut keys: Vec<Vec<String>> = Vec::new();
        for (qp, colors) in qps.iter().zip(colorings.iter()) {
            let q = &qp.quiver;
            let ks = q
                .vertices()
                .map(|v| {
                    let mut incident: Vec<String> = Vec::new();
                    for a in q.arrows_from(v) {
                        incident.push(format!(
                            "o|{}|{}",
                            arrow_invariant(qp, a),
                            colors[q.target(a).index()]
                        ));
                    }
                    for a in q.arrows_into(v) {
                        incident.push(format!(
                            "i|{}|{}",
                            arrow_invariant(qp, a),
                            colors[q.source(a).index()]
                        ));
                    }
                    incident.sort();
                    format!("{}#{}", colors[v.index()], incident.join(";"))
                })
                .collect();
            keys.push(ks);
        }
        // dense renumbering over the union of keys
        let mut table: BTreeMap<&String, usize> = BTreeMap::new();
        for ks in &keys {
            for k in ks {
                table.entry(k).or_insert(0);
            }
        }
        for (i, (_, slot)) in table.iter_mut().enumerate() {
            *slot = i;
        }
        let before: usize = colorings
            .iter()
            .map(|c| {
                let mut d = c.clone();
                d.sort();
                d.dedup();
                d.len()
            })
            .sum();
        for (colors, ks) in colorings.iter_mut().zip(keys.iter()) {
            for (slot, k) in colors.iter_mut().zip(ks.iter()) {
                *slot = table[k];
            }
        }
        let after: usize = colorings
            .iter()
            .map(|c| {
                let mut d = c.clone();
                d.sort();
                d.dedup();
                d.len()
            })
            .sum();
        // stop once the partition no longer splits
        if after == before {
            break;
        }
    }
}

fn shared_initial_coloring(qps: &[&QP]) -> Vec<Vec<usize>> {
    let raw: Vec<Vec<String>> = qps.iter().map(|qp| initial_colors(qp)).collect();
    let mut table: BTreeMap<&String, usize> = BTreeMap::new();
    for ks in &raw {
        for k in ks {
            table.entry(k).or_insert(0);
        }
    }
    for (i, (_, slot)) in table.iter_mut().enumerate() {
        *slot = i;
    }
    raw.iter()
        .map(|ks| ks.iter().map(|k| table[k]).collect())
        .collect()
}

/// Enumerates all discrete colorings reachable by individualization.
fn discrete_colorings(qp: &QP, colors: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let mut colorings = [colors];
    refine(&[qp], &mut colorings);
    let colors = colorings[0].clone();
    // find smallest color class with >= 2 members
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        by_color.entry(c).or_default().push(v);
    }
    let target = by_color.values().find(|vs| vs.len() >= 2);
    match target {
        None => out.push(colors),
        Some(members) => {
            for &v in members {
                let mut next: Vec<usize> = colors.iter().map(|&c| 2 * c + 1).collect();
                next[v] = 2 * colors[v];
                discrete_colorings(qp, next, out);
            }
        }
    }
}

/// Serializes the QP under a vertex ranking, minimizing over permutations of
/// parallel arrows.
fn string_under_ranking(qp: &QP, rank: &[usize]) -> Vec<u8> {
    let q = &qp.quiver;
    // group arrows by ranked endpoints
    let mut recs: Vec<(usize, usize, ArrowId)> = q
        .arrow_ids()
        .map(|a| (rank[q.source(a).index()], rank[q.target(a).index()], a))
        .collect();
    recs.sort();
    // parallel classes are maximal runs with equal endpoint pairs
    let mut classes: Vec<Vec<ArrowId>> = Vec::new();
    let mut bounds: Vec<(usize, usize)> = Vec::new();
    for (s, t, a) in &recs {
        if bounds.last() == Some(&(*s, *t)) {
            classes.last_mut().unwrap().push(*a);
        } else {
            bounds.push((*s, *t));
            classes.push(vec![*a]);
        }
    }
    let header: String = bounds
        .iter()
        .zip(classes.iter())
        .map(|((s, t), cls)| format!("{s}>{t}x{}", cls.len()))
        .collect::<Vec<_>>()
        .join(",");

    // assign arrow indices: class base offset + position within class, then
    // minimize the potential string over within-class permutations
    let mut offsets = Vec::with_capacity(classes.len());
    let mut acc = 0;
    for cls in &classes {
        offsets.push(acc);
        acc += cls.len();
    }

    fn permutations(m: usize) -> Vec<Vec<usize>> {
        if m == 1 {
            return vec![vec![0]];
        }
        let mut out = Vec::new();
        for rest in permutations(m - 1) {
            for pos in 0..m {
                let mut p = rest.clone();
                p.insert(pos, m - 1);
                out.push(p);
            }
        }
        out
    }

    let choice_sets: Vec<Vec<Vec<usize>>> =
        classes.iter().map(|cls| permutations(cls.len())).collect();

    let mut best: Option<String> = None;
    let mut chosen = vec![0usize; classes.len()];
    loop {
        // arrow -> global index under this choice
        let mut index: BTreeMap<ArrowId, usize> = BTreeMap::new();
        for (ci, cls) in classes.iter().enumerate() {
            let perm = &choice_sets[ci][chosen[ci]];
            for (pos, &a) in cls.iter().enumerate() {
                index.insert(a, offsets[ci] + perm[pos]);
            }
        }
        let mut terms: Vec<String> = qp
            .potential
            .terms()
            .map(|(w, c)| {
                let ids: Vec<usize> = w.arrows().iter().map(|a| index[a]).collect();
                // canonical rotation under the new indices
                let n = ids.len();
                let mut bestrot = ids.clone();
                for i in 1..n {
                    let mut rot = Vec::with_capacity(n);
                    rot.extend_from_slice(&ids[i..]);
                    rot.extend_from_slice(&ids[..i]);
                    if rot < bestrot {
                        bestrot = rot;
                    }
                }
                format!(
                    "{}*{}",
                    c,
                    bestrot
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(".")
                )
            })
            .collect();
        terms.sort();
        let s = terms.join("|");
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
        // advance the mixed-radix counter
        let mut i = 0;
        loop {
            if i == classes.len() {
                let full = format!(
                    "V{};A{};W{}",
                    qp.quiver.vertex_count(),
                    header,
                    best.unwrap()
                );
                return full.into_bytes();
            }
            chosen[i] += 1;
            if chosen[i] < choice_sets[i].len() {
                break;
            }
            chosen[i] = 0;
            i += 1;
        }
    }
}

/// Canonical byte string: equal for two QPs iff they are isomorphic.
pub fn qp_canonical_form(qp: &QP) -> Vec<u8> {
    let init = shared_initial_coloring(&[qp]).pop().unwrap();
    let mut leaves = Vec::new();
    discrete_colorings(qp, init, &mut leaves);
    let mut best: Option<Vec<u8>> = None;
    for colors in leaves {
        // rank = order of colors
        let mut order: Vec<usize> = (0..colors.len()).collect();
        order.sort_by_key(|&v| colors[v]);
        let mut rank = vec![0usize; colors.len()];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let s = string_under_ranking(qp, &rank);
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    }
    best.unwrap_or_else(|| b"V0;A;W".to_vec())
}

/// Backtracking isomorphism search. In `exact` mode coefficients must match
/// termwise; otherwise only the potential supports must correspond.
fn search_isos(qp1: &QP, qp2: &QP, exact: bool, all: bool) -> Vec<QpIso> {
    let mut found = Vec::new();
    if qp1.quiver.vertex_count() != qp2.quiver.vertex_count()
        || qp1.quiver.arrow_count() != qp2.quiver.arrow_count()
        || qp1.potential.num_terms() != qp2.potential.num_terms()
    {
        return found;
    }
    let mut colorings = shared_initial_coloring(&[qp1, qp2]);
    if !exact {
        // support-only matching ignores coefficients in the invariants, so
        // recompute initial colors with coefficients blanked
        let b1 = blank_coefficients(qp1);
        let b2 = blank_coefficients(qp2);
        colorings = shared_initial_coloring(&[&b1, &b2]);
        let mut refs = colorings.clone();
        refine(&[&b1, &b2], &mut refs);
        branch(&b1, &b2, &refs[0], &refs[1], &mut Vec::new(), &mut found, all);
        // re-verify on the original QPs
        return found
            .into_iter()
            .filter(|iso| potential_matches(qp1, qp2, iso, false))
            .collect();
    }
    let mut refs = colorings.clone();
    refine(&[qp1, qp2], &mut refs);
    branch(qp1, qp2, &refs[0], &refs[1], &mut Vec::new(), &mut found, all);
    found
        .into_iter()
        .filter(|iso| potential_matches(qp1, qp2, iso, true))
        .collect()
}

fn blank_coefficients(qp: &QP) -> QP {
    let mut w = Potential::zero();
    for (cyc, _) in qp.potential.terms() {
        w.add_term(cyc.clone(), Coeff::one()).expect("support term");
    }
    QP {
        quiver: qp.quiver.clone(),
        potential: w,
    }
}

fn class_map(colors: &[usize]) -> BTreeMap<usize, Vec<usize>> {
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        by_color.entry(c).or_default().push(v);
    }
    by_color
}

fn branch(
    qp1: &QP,
    qp2: &QP,
    c1: &[usize],
    c2: &[usize],
    _stack: &mut Vec<(usize, usize)>,
    found: &mut Vec<QpIso>,
    all: bool,
) {
    if !all && !found.is_empty() {
        return;
    }
    let m1 = class_map(c1);
    let m2 = class_map(c2);
    if m1.len() != m2.len() {
        return;
    }
    for (k, vs) in &m1 {
        match m2.get(k) {
            Some(ws) if ws.len() == vs.len() => {}
            _ => return,
        }
    }
    // discrete?
    if m1.values().all(|vs| vs.len() == 1) {
        // vertex bijection by color
        let mut vmap = vec![VertexId(0); c1.len()];
        for (k, vs) in &m1 {
            vmap[vs[0]] = VertexId(m2[k][0] as u32);
        }
        extend_to_arrows(qp1, qp2, &vmap, found, all);
        return;
    }
    // individualize: smallest non-singleton class
    let (color, members1) = m1.iter().find(|(_, vs)| vs.len() >= 2).unwrap();
    let v1 = members1[0];
    let members2 = &m2[color];
    for &v2 in members2 {
        let mut n1: Vec<usize> = c1.iter().map(|&c| 2 * c + 1).collect();
        let mut n2: Vec<usize> = c2.iter().map(|&c| 2 * c + 1).collect();
        n1[v1] = 2 * c1[v1];
        n2[v2] = 2 * c2[v2];
        let mut refs = [n1, n2];
        refine(&[qp1, qp2], &mut refs);
        branch(qp1, qp2, &refs[0], &refs[1], _stack, found, all);
        if !all && !found.is_empty() {
            return;
        }
    }
}

/// Given a vertex bijection, tries all compatible arrow bijections.
fn extend_to_arrows(qp1: &QP, qp2: &QP, vmap: &[VertexId], found: &mut Vec<QpIso>, all: bool) {
    let q1 = &qp1.quiver;
    let q2 = &qp2.quiver;
    // group arrows of qp2 by endpoint pair
    let mut pool: BTreeMap<(VertexId, VertexId), Vec<ArrowId>> = BTreeMap::new();
    for a in q2.arrow_ids() {
        pool.entry((q2.source(a), q2.target(a))).or_default().push(a);
    }
    let mut classes1: BTreeMap<(VertexId, VertexId), Vec<ArrowId>> = BTreeMap::new();
    for a in q1.arrow_ids() {
        let key = (vmap[q1.source(a).index()], vmap[q1.target(a).index()]);
        classes1.entry(key).or_default().push(a);
    }
    for (key, cls) in &classes1 {
        match pool.get(key) {
            Some(ws) if ws.len() == cls.len() => {}
            _ => return,
        }
    }
    // backtrack over per-class permutations
    let keys: Vec<(VertexId, VertexId)> = classes1.keys().copied().collect();
    let mut amap: BTreeMap<ArrowId, ArrowId> = BTreeMap::new();
    assign_class(qp1, qp2, vmap, &keys, 0, &classes1, &pool, &mut amap, found, all);
}

#[allow(clippy::too_many_arguments)]
fn assign_class(
    qp1: &QP,
    qp2: &QP,
    vmap: &[VertexId],
    keys: &[(VertexId, VertexId)],
    ki: usize,
    classes1: &BTreeMap<(VertexId, VertexId), Vec<ArrowId>>,
    pool: &BTreeMap<(VertexId, VertexId), Vec<ArrowId>>,
    amap: &mut BTreeMap<ArrowId, ArrowId>,
    found: &mut Vec<QpIso>,
    all: bool,
) {
    if !all && !found.is_empty() {
        return;
    }
    if ki == keys.len() {
        let arrow_map: Vec<ArrowId> = qp1.quiver.arrow_ids().map(|a| amap[&a]).collect();
        found.push(QpIso {
            vertex_map: vmap.to_vec(),
            arrow_map,
        });
        return;
    }
    let key = keys[ki];
    let src = &classes1[&key];
    let dst = &pool[&key];
    permute_assign(qp1, qp2, vmap, keys, ki, classes1, pool, src, dst, 0, &mut vec![false; dst.len()], amap, found, all);
}

#[allow(clippy::too_many_arguments)]
fn permute_assign(
    qp1: &QP,
    qp2: &QP,
    vmap: &[VertexId],
    keys: &[(VertexId, VertexId)],
    ki: usize,
    classes1: &BTreeMap<(VertexId, VertexId), Vec<ArrowId>>,
    pool: &BTreeMap<(VertexId, VertexId), Vec<ArrowId>>,
    src: &[ArrowId],
    dst: &[ArrowId],
    i: usize,
    used: &mut Vec<bool>,
    amap: &mut BTreeMap<ArrowId, ArrowId>,
    found: &mut Vec<QpIso>,
    all: bool,
) {
    if !all && !found.is_empty() {
        return;
    }
    if i == src.len() {
        assign_class(qp1, qp2, vmap, keys, ki + 1, classes1, pool, amap, found, all);
        return;
    }
    for j in 0..dst.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        amap.insert(src[i], dst[j]);
        permute_assign(
            qp1, qp2, vmap, keys, ki, classes1, pool, src, dst, i + 1, used, amap, found, all,
        );
        amap.remove(&src[i]);
        used[j] = false;
    }
}

fn potential_matches(qp1: &QP, qp2: &QP, iso: &QpIso, exact: bool) -> bool {
    let q2 = &qp2.quiver;
    let mut image = Potential::zero();
    for (w, c) in qp1.potential.terms() {
        let arrows: Vec<ArrowId> = w.arrows().iter().map(|a| iso.arrow_map[a.index()]).collect();
        let Ok(cw) = CyclicWord::from_arrow_cycle(q2, arrows) else {
            return false;
        };
        if image.add_term(cw, c.clone()).is_err() {
            return false;
        }
    }
    if exact {
        image == qp2.potential
    } else {
        let s1: Vec<&CyclicWord> = image.cycles().collect();
        let s2: Vec<&CyclicWord> = qp2.potential.cycles().collect();
        s1 == s2
    }
}

pub fn isomorphisms(qp1: &QP, qp2: &QP) -> Vec<QpIso> {
    search_isos(qp1, qp2, true, true)
}

pub fn is_isomorphic(qp1: &QP, qp2: &QP) -> bool {
    !search_isos(qp1, qp2, true, false).is_empty()
}

/// All QP automorphisms (vertex and arrow relabelings fixing the potential
/// termwise).
pub fn automorphisms(qp: &QP) -> Vec<QpIso> {
    isomorphisms(qp, qp)
}

/// Isomorphism allowing a rescaling of arrows: a quiver isomorphism mapping
/// the potential support cycle-to-cycle such that some diagonal rescaling of
/// arrows matches the coefficients. This is a right equivalence composed of
/// a relabeling and an arrow scaling.
pub fn is_isomorphic_up_to_rescaling(qp1: &QP, qp2: &QP) -> bool {
    let candidates = search_isos(qp1, qp2, false, true);
    for iso in candidates {
        if rescaling_exists(qp1, qp2, &iso) {
            return true;
        }
    }
    false
}

/// Decides solvability of `prod_{a in c} delta(a)^{mult} = ratio_c` over the
/// nonzero rationals, prime by prime plus a sign system over GF(2).
fn rescaling_exists(qp1: &QP, qp2: &QP, iso: &QpIso) -> bool {
    let q2 = &qp2.quiver;
    let cycles1: Vec<(&CyclicWord, &Coeff)> = qp1.potential.terms().collect();
    // incidence matrix: rows cycles, cols arrows of qp2 (images)
    let ncols = q2.arrow_count();
    let nrows = cycles1.len();
    let mut incidence = ZMat::zeros(nrows, ncols);
    let mut ratios: Vec<Coeff> = Vec::with_capacity(nrows);
    for (r, (w, c1)) in cycles1.iter().enumerate() {
        let arrows: Vec<ArrowId> = w.arrows().iter().map(|a| iso.arrow_map[a.index()]).collect();
        for &a in &arrows {
            let v = incidence.get(r, a.index()) + BigInt::one();
            incidence.set(r, a.index(), v);
        }
        let cw = CyclicWord::from_arrow_cycle(q2, arrows).expect("image cycle");
        let c2 = qp2.potential.coefficient(&cw);
        if c2.is_zero() {
            return false;
        }
        ratios.push(c2 / (*c1).clone());
    }
    // sign system over GF(2)
    let f2_rows: Vec<Vec<bool>> = (0..nrows)
        .map(|r| {
            (0..ncols)
                .map(|c| (incidence.get(r, c) % BigInt::from(2)) == BigInt::one())
                .collect()
        })
        .collect();
    let signs: Vec<bool> = ratios.iter().map(|r| r.is_negative()).collect();
    if solve_f2(&f2_rows, &signs).is_none() {
        return false;
    }
    // prime exponent systems
    let mut primes: Vec<BigInt> = Vec::new();
    for r in &ratios {
        collect_primes(r.numer(), &mut primes);
        collect_primes(r.denom(), &mut primes);
    }
    primes.sort();
    primes.dedup();
    for p in primes {
        let b: Vec<BigInt> = ratios
            .iter()
            .map(|r| {
                BigInt::from(valuation(r.numer(), &p)) - BigInt::from(valuation(r.denom(), &p))
            })
            .collect();
        if solve_integer(&incidence, &b).is_none() {
            return false;
        }
    }
    true
}

fn collect_primes(n: &BigInt, out: &mut Vec<BigInt>) {
    let mut n = n.abs();
    if n <= BigInt::one() {
        return;
    }
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            out.push(p.clone());
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
}

fn valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut k = 0;
    if n.is_zero() {
        return 0;
    }
    while (&n % p).is_zero() {
        n /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::potential::coeff;
    use crate::quiver::Quiver;

    /// Rebuilds a QP with vertices listed in permuted order.
    fn relabel(qp: &QP, perm: &[usize]) -> QP {
        let q = &qp.quiver;
        let n = q.vertex_count();
        let mut q2 = Quiver::new();
        // new vertex i is old vertex perm[i]
        for i in 0..n {
            q2.add_vertex(q.vertex_name(VertexId(perm[i] as u32))).unwrap();
        }
        let inv: Vec<usize> = {
            let mut inv = vec![0; n];
            for (i, &p) in perm.iter().enumerate() {
                inv[p] = i;
            }
            inv
        };
        for a in q.arrow_ids() {
            let arr = q.arrow(a);
            q2.add_arrow(
                &arr.name,
                VertexId(inv[arr.source.index()] as u32),
                VertexId(inv[arr.target.index()] as u32),
            )
            .unwrap();
        }
        let mut w = Potential::zero();
        for (cyc, c) in qp.potential.terms() {
            let arrows = cyc
                .arrows()
                .iter()
                .map(|&a| q2.arrow_by_name(q.arrow_name(a)).unwrap())
                .collect();
            w.add_term(CyclicWord::from_arrow_cycle(&q2, arrows).unwrap(), c.clone())
                .unwrap();
        }
        QP::new(q2, w).unwrap()
    }

    #[test]
    fn canonical_form_invariant_under_relabeling() {
        let qp = fixtures::example_a();
        let base = qp_canonical_form(&qp);
        for perm in [[1usize, 0, 2, 3], [3, 2, 1, 0], [2, 0, 3, 1]] {
            let r = relabel(&qp, &perm);
            assert_eq!(qp_canonical_form(&r), base);
        }
    }

    #[test]
    fn different_vertex_counts_differ() {
        let a = fixtures::example_a();
        let b = fixtures::example_b();
        assert_ne!(qp_canonical_form(&a), qp_canonical_form(&b));
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn reversed_arrow_discriminated() {
        // 4-cycle QP vs the same quiver with one arrow reversed
        let q = Quiver::from_names(
            &["1", "2", "3", "4"],
            &[
                ("a1", "1", "2"),
                ("a2", "2", "3"),
                ("a3", "3", "4"),
                ("a4", "4", "1"),
            ],
        )
        .unwrap();
        let by = |n: &str| q.arrow_by_name(n).unwrap();
        let mut w = Potential::zero();
        w.add_term(
            CyclicWord::from_arrow_cycle(&q, vec![by("a1"), by("a2"), by("a3"), by("a4")]).unwrap(),
            coeff(1),
        )
        .unwrap();
        let qp = QP::new(q, w).unwrap();

        let q2 = Quiver::from_names(
            &["1", "2", "3", "4"],
            &[
                ("a1", "2", "1"),
                ("a2", "2", "3"),
                ("a3", "3", "4"),
                ("a4", "4", "1"),
            ],
        )
        .unwrap();
        let qp2 = QP::with_zero_potential(q2);
        assert_ne!(qp_canonical_form(&qp), qp_canonical_form(&qp2));
    }

    #[test]
    fn parallel_arrow_swap_is_automorphism() {
        let qp = fixtures::example_b();
        let autos = automorphisms(&qp);
        // swapping c and d fixes W = abc + abd
        assert!(autos.len() >= 2);
        let identity = QpIso {
            vertex_map: qp.quiver.vertices().collect(),
            arrow_map: qp.quiver.arrow_ids().collect(),
        };
        assert!(autos.contains(&identity));
    }

    #[test]
    fn canonical_form_discriminates_fixture_corpus() {
        use crate::families::*;
        let a3 = alternating_orientation(DynkinType::A(3));
        let corpus: Vec<QP> = vec![
            crate::fixtures::example_a(),
            crate::fixtures::example_b(),
            cycle_qp(4).unwrap(),
            cycle_qp(5).unwrap(),
            tilde_cycle_qp(4).unwrap(),
            tilde_cycle_qp(6).unwrap(),
            tubular_2222(coeff(2)).unwrap(),
            tubular_2222(coeff(3)).unwrap(),
            tensor_qp(&a3.quiver, &a3.quiver),
            square_product_qp(&a3.quiver, &a3.quiver).unwrap(),
            triangle_qp(3).unwrap().qp(),
            triangle_qp(4).unwrap().qp(),
        ];
        let forms: Vec<Vec<u8>> = corpus.iter().map(qp_canonical_form).collect();
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                assert_ne!(forms[i], forms[j], "fixtures {i} and {j} must differ");
            }
        }
    }

    #[test]
    fn rescaling_isomorphism() {
        // same 2-cycle with coefficients 1 and -1: related by negating one arrow
        let build = |c: i64| {
            let q =
                Quiver::from_names(&["x", "y"], &[("u", "x", "y"), ("v", "y", "x")]).unwrap();
            let u = q.arrow_by_name("u").unwrap();
            let v = q.arrow_by_name("v").unwrap();
            let mut w = Potential::zero();
            w.add_term(CyclicWord::from_arrow_cycle(&q, vec![u, v]).unwrap(), coeff(c))
                .unwrap();
            QP::new(q, w).unwrap()
        };
        let plus = build(1);
        let minus = build(-1);
        assert!(!is_isomorphic(&plus, &minus));
        assert!(is_isomorphic_up_to_rescaling(&plus, &minus));
        // coefficient 2 also reachable by scaling
        let two = build(2);
        assert!(is_isomorphic_up_to_rescaling(&plus, &two));
    }

    #[test]
    fn loop_square_not_rescalable_to_minus() {
        // W = a^2 on a loop: ratio -1 needs delta^2 = -1, impossible
        let build = |c: i64| {
            let q = Quiver::from_names(&["1"], &[("a", "1", "1")]).unwrap();
            let a = q.arrow_by_name("a").unwrap();
            let mut w = Potential::zero();
            w.add_term(CyclicWord::from_arrow_cycle(&q, vec![a, a]).unwrap(), coeff(c))
                .unwrap();
            QP::new(q, w).unwrap()
        };
        assert!(!is_isomorphic_up_to_rescaling(&build(1), &build(-1)));
        // but 4 = 2^2 works
        assert!(is_isomorphic_up_to_rescaling(&build(1), &build(4)));
        // and 2 does not (delta^2 = 2 has no rational solution)
        assert!(!is_isomorphic_up_to_rescaling(&build(1), &build(2)));
    }
}
