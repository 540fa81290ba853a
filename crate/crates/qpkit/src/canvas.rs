//! The canvas CW complex of a QP: one 2-cell per potential cycle, integral
//! homology, fundamental group presentation and a simple-connectivity
//! semi-decision.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{QpError, Result};
use crate::linalg::{invariant_factors, smith_normal_form, solve_integer, ZMat};
use crate::potential::{CyclicWord, QP};
use crate::quiver::{ArrowId, Quiver, VertexId};

/// The canvas: vertices and arrows of the quiver plus one 2-cell for each
/// potential cycle with nonzero coefficient.
#[derive(Clone, Debug)]
pub struct Canvas {
    pub quiver: Quiver,
    pub two_cells: Vec<CyclicWord>,
}

/// Builds the canvas of a QP.
pub fn build_canvas(qp: &QP) -> Canvas {
    Canvas {
        quiver: qp.quiver.clone(),
        two_cells: qp.potential.cycles().cloned().collect(),
    }
}

/// Isomorphism type of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// First integral homology of the canvas via Smith normal form.
pub fn homology_h1(canvas: &Canvas) -> AbelianGroup {
    let q = &canvas.quiver;
    let nv = q.vertex_count();
    let ne = q.arrow_count();
    // boundary of 1-cells: d1[v][a] = (a ends at v) - (a starts at v)
    let mut d1 = ZMat::zeros(nv, ne);
    for a in q.arrow_ids() {
        let s = q.source(a).index();
        let t = q.target(a).index();
        let v = d1.get(t, a.index()) + BigInt::one();
        d1.set(t, a.index(), v);
        let v = d1.get(s, a.index()) - BigInt::one();
        d1.set(s, a.index(), v);
    }
    // integer kernel basis of d1 from its Smith decomposition U d1 V = D
    let smith = smith_normal_form(&d1);
    let rank1 = (0..nv.min(ne))
        .filter(|&i| !smith.d.get(i, i).is_zero())
        .count();
    let kernel_cols: Vec<usize> = (rank1..ne).collect();
    // boundary of 2-cells expressed in kernel coordinates: the coordinates
    // of a cycle vector z in the kernel basis are the entries of V^{-1} z at
    // the kernel columns; solve V x = z instead of inverting
    let mut vmat = ZMat::zeros(ne, ne);
    for r in 0..ne {
        for c in 0..ne {
            vmat.set(r, c, smith.v.get(r, c).clone());
        }
    }
    let mut coords = ZMat::zeros(kernel_cols.len(), canvas.two_cells.len());
    for (ci, cell) in canvas.two_cells.iter().enumerate() {
        let mut z = vec![BigInt::zero(); ne];
        for &a in cell.arrows() {
            z[a.index()] += BigInt::one();
        }
        let x = solve_integer(&vmat, &z).expect("V is unimodular");
        for (ki, &col) in kernel_cols.iter().enumerate() {
            coords.set(ki, ci, x[col].clone());
        }
    }
    let factors = invariant_factors(&coords);
    let rank = kernel_cols.len() - factors.len();
    let torsion: Vec<BigInt> = factors.into_iter().filter(|f| f > &BigInt::one()).collect();
    AbelianGroup { rank, torsion }
}

/// A finite group presentation: generators indexed densely, relators as
/// words of (generator, exponent) pairs.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generator_arrows: Vec<ArrowId>,
    pub relators: Vec<Vec<(usize, i64)>>,
}

impl Presentation {
    pub fn is_trivial(&self) -> bool {
        self.generator_arrows.is_empty()
    }
}

/// Fundamental group presentation: generators are the arrows outside a
/// spanning tree, one relator per 2-cell.
pub fn pi1_presentation(canvas: &Canvas, _basepoint: VertexId) -> Result<Presentation> {
    let q = &canvas.quiver;
    if !q.is_connected() {
        return Err(QpError::Disconnected);
    }
    // spanning tree by undirected BFS
    let n = q.vertex_count();
    let mut seen = vec![false; n];
    let mut tree: Vec<bool> = vec![false; q.arrow_count()];
    if n > 0 {
        seen[0] = true;
        let mut stack = vec![VertexId(0)];
        while let Some(v) = stack.pop() {
            for a in q.arrow_ids() {
                let (s, t) = (q.source(a), q.target(a));
                for (x, y) in [(s, t), (t, s)] {
                    if x == v && !seen[y.index()] {
                        seen[y.index()] = true;
                        tree[a.index()] = true;
                        stack.push(y);
                    }
                }
            }
        }
    }
    let generator_arrows: Vec<ArrowId> = q.arrow_ids().filter(|a| !tree[a.index()]).collect();
    let gen_index: std::collections::BTreeMap<ArrowId, usize> = generator_arrows
        .iter()
        .enumerate()
        .map(|(i, &a)| (a, i))
        .collect();
    // relator of a cell: its non-tree letters in order (tree arrows die when
    // the tree is collapsed, and so do the conjugating tree walks)
    let relators = canvas
        .two_cells
        .iter()
        .map(|cell| {
            let mut word: Vec<(usize, i64)> = Vec::new();
            for &a in cell.arrows() {
                if let Some(&g) = gen_index.get(&a) {
                    if let Some(last) = word.last_mut() {
                        if last.0 == g {
                            last.1 += 1;
                            continue;
                        }
                    }
                    word.push((g, 1));
                }
            }
            word
        })
        .collect();
    Ok(Presentation {
        generator_arrows,
        relators,
    })
}

/// Bounded Tietze simplification; true when the presentation collapses to
/// the trivial group within the effort bound.
pub fn tietze_trivializes(p: &Presentation, effort: usize) -> bool {
    let mut ngens = p.generator_arrows.len();
    let mut alive: Vec<bool> = vec![true; ngens];
    let mut relators: Vec<Vec<(usize, i64)>> = p.relators.clone();
    for _ in 0..effort {
        // free + cyclic reduction, drop dead generators and empty words
        for r in relators.iter_mut() {
            r.retain(|(g, e)| alive[*g] && *e != 0);
            let mut changed = true;
            while changed {
                changed = false;
                let mut merged: Vec<(usize, i64)> = Vec::new();
                for &(g, e) in r.iter() {
                    if let Some(last) = merged.last_mut() {
                        if last.0 == g {
                            last.1 += e;
                            if last.1 == 0 {
                                merged.pop();
                            }
                            changed = true;
                            continue;
                        }
                    }
                    merged.push((g, e));
                }
                // cyclic reduction
                while merged.len() >= 2 && merged[0].0 == merged[merged.len() - 1].0 {
                    let (g, e1) = merged[0];
                    let (_, e2) = merged[merged.len() - 1];
                    merged.pop();
                    merged[0] = (g, e1 + e2);
                    if merged[0].1 == 0 {
                        merged.remove(0);
                    }
                    changed = true;
                }
                *r = merged;
            }
        }
        relators.retain(|r| !r.is_empty());
        // a relator g^{±1} kills its generator
        let mut acted = false;
        if let Some(pos) = relators
            .iter()
            .position(|r| r.len() == 1 && r[0].1.abs() == 1)
        {
            let g = relators[pos][0].0;
            alive[g] = false;
            relators.remove(pos);
            acted = true;
        } else if let Some((pos, g)) = relators.iter().enumerate().find_map(|(i, r)| {
            // a generator occurring exactly once with exponent ±1 can be
            // solved for and eliminated together with its relator
            let mut counts: std::collections::BTreeMap<usize, (usize, i64)> =
                std::collections::BTreeMap::new();
            for &(g, e) in r {
                let entry = counts.entry(g).or_insert((0, 0));
                entry.0 += 1;
                entry.1 = e;
            }
            counts
                .iter()
                .find(|(_, &(occ, e))| occ == 1 && e.abs() == 1)
                .map(|(&g, _)| (i, g))
        }) {
            // substitute the solved word for g in all other relators
            let r = relators[pos].clone();
            let k = r.iter().position(|&(h, _)| h == g).unwrap();
            let e = r[k].1;
            // g^e = inverse of the rest (cyclically rotated so g sits first)
            let mut rest: Vec<(usize, i64)> = Vec::new();
            for &(h, ex) in r[k + 1..].iter().chain(r[..k].iter()) {
                rest.push((h, ex));
            }
            // g = (rest)^{-e}
            let mut replacement: Vec<(usize, i64)> = rest
                .iter()
                .rev()
                .map(|&(h, ex)| (h, -ex))
                .collect();
            if e < 0 {
                replacement = rest.clone();
            }
            relators.remove(pos);
            for rel in relators.iter_mut() {
                let mut out: Vec<(usize, i64)> = Vec::new();
                for &(h, ex) in rel.iter() {
                    if h != g {
                        out.push((h, ex));
                        continue;
                    }
                    let copies = ex.unsigned_abs() as usize;
                    for _ in 0..copies {
                        if ex > 0 {
                            out.extend(replacement.iter().copied());
                        } else {
                            out.extend(replacement.iter().rev().map(|&(h2, e2)| (h2, -e2)));
                        }
                    }
                }
                *rel = out;
            }
            alive[g] = false;
            acted = true;
        }
        ngens = alive.iter().filter(|&&b| b).count();
        if ngens == 0 {
            return true;
        }
        if !acted {
            break;
        }
    }
    ngens == 0
}

/// Three-valued simple-connectivity verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplyConnected {
    Yes,
    No,
    Unknown,
}

/// Semi-decides simple connectivity of the canvas: `No` on disconnectedness
/// or nontrivial homology; `Yes` by a planar-disk certificate or by Tietze
/// collapse of the fundamental group; `Unknown` otherwise.
pub fn is_simply_connected(canvas: &Canvas, effort: usize) -> SimplyConnected {
    if !canvas.quiver.is_connected() {
        return SimplyConnected::No;
    }
    let h1 = homology_h1(canvas);
    if !h1.is_trivial() {
        return SimplyConnected::No;
    }
    // planar certificate: the 2-cells glue into a sphere-minus-a-face
    if crate::planar::disk_certificate(&canvas.quiver, &canvas.two_cells) {
        return SimplyConnected::Yes;
    }
    if let Ok(p) = pi1_presentation(canvas, VertexId(0)) {
        if tietze_trivializes(&p, effort) {
            return SimplyConnected::Yes;
        }
    }
    SimplyConnected::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::fixtures;

    #[test]
    fn q4_canvas_is_a_disk() {
        let qp = families::cycle_qp(4).unwrap();
        let canvas = build_canvas(&qp);
        assert_eq!(canvas.two_cells.len(), 1);
        let h1 = homology_h1(&canvas);
        assert!(h1.is_trivial());
        assert_eq!(is_simply_connected(&canvas, 16), SimplyConnected::Yes);
    }

    #[test]
    fn circle_has_h1_z() {
        // cycle quiver with zero potential
        let qp = QP::with_zero_potential(families::cycle_qp(4).unwrap().quiver);
        let canvas = build_canvas(&qp);
        let h1 = homology_h1(&canvas);
        assert_eq!(h1.rank, 1);
        assert!(h1.torsion.is_empty());
        assert_eq!(is_simply_connected(&canvas, 16), SimplyConnected::No);
    }

    #[test]
    fn example_a_canvas_trivial_h1() {
        let qp = fixtures::example_a();
        let canvas = build_canvas(&qp);
        assert_eq!(canvas.two_cells.len(), 2);
        assert_eq!(canvas.quiver.arrow_count(), 5);
        let h1 = homology_h1(&canvas);
        assert!(h1.is_trivial());
    }

    #[test]
    fn tree_presentation_is_trivial() {
        let qp = fixtures::linear_an(3);
        let canvas = build_canvas(&qp);
        let p = pi1_presentation(&canvas, VertexId(0)).unwrap();
        assert!(p.is_trivial());
        assert_eq!(is_simply_connected(&canvas, 4), SimplyConnected::Yes);
    }

    #[test]
    fn cycle_presentation_is_free_of_rank_one() {
        let qp = QP::with_zero_potential(families::cycle_qp(4).unwrap().quiver);
        let canvas = build_canvas(&qp);
        let p = pi1_presentation(&canvas, VertexId(0)).unwrap();
        assert_eq!(p.generator_arrows.len(), 1);
        assert!(p.relators.is_empty());
        assert!(!tietze_trivializes(&p, 8));
    }

    #[test]
    fn q4_presentation_is_one_relator_trivial() {
        let qp = families::cycle_qp(4).unwrap();
        let canvas = build_canvas(&qp);
        let p = pi1_presentation(&canvas, VertexId(0)).unwrap();
        assert_eq!(p.generator_arrows.len(), 1);
        assert_eq!(p.relators.len(), 1);
        assert!(tietze_trivializes(&p, 8));
    }

    #[test]
    fn abelianization_matches_h1_on_fixtures() {
        for qp in fixtures::small_corpus() {
            if !qp.quiver.is_connected() {
                continue;
            }
            let canvas = build_canvas(&qp);
            let h1 = homology_h1(&canvas);
            let p = pi1_presentation(&canvas, VertexId(0)).unwrap();
            // abelianized presentation: relator exponent-sum matrix
            let mut m = ZMat::zeros(p.relators.len().max(1), p.generator_arrows.len());
            for (r, rel) in p.relators.iter().enumerate() {
                for &(g, e) in rel {
                    let v = m.get(r, g) + BigInt::from(e);
                    m.set(r, g, v);
                }
            }
            let factors = invariant_factors(&m);
            let nonunit: Vec<BigInt> =
                factors.iter().filter(|f| *f > &BigInt::one()).cloned().collect();
            let rank = p.generator_arrows.len() - factors.len();
            assert_eq!(rank, h1.rank, "rank mismatch");
            assert_eq!(nonunit, h1.torsion, "torsion mismatch");
        }
    }

    #[test]
    fn h1_rank_matches_betti_number_identity() {
        // rank H1 = (E - V + 1) - rank d2 for a connected 1-skeleton
        for qp in [fixtures::example_a(), families::cycle_qp(5).unwrap()] {
            let canvas = build_canvas(&qp);
            let h1 = homology_h1(&canvas);
            let v = canvas.quiver.vertex_count();
            let e = canvas.quiver.arrow_count();
            let mut d2 = ZMat::zeros(e, canvas.two_cells.len());
            for (c, cell) in canvas.two_cells.iter().enumerate() {
                for &a in cell.arrows() {
                    let val = d2.get(a.index(), c) + BigInt::one();
                    d2.set(a.index(), c, val);
                }
            }
            let rank2 = invariant_factors(&d2).len();
            assert_eq!(h1.rank, (e - v + 1) - rank2);
        }
    }

    #[test]
    fn disconnected_is_not_simply_connected() {
        let q = Quiver::from_names(&["1", "2"], &[]).unwrap();
        let canvas = build_canvas(&QP::with_zero_potential(q));
        assert_eq!(is_simply_connected(&canvas, 4), SimplyConnected::No);
    }
}
