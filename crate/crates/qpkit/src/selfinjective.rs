//! Selfinjectivity of QPs via exactness of the canonical four-term complex,
//! socles and Nakayama permutations, and the 2-representation-finiteness
//! pipeline through the associated QP of an algebra presentation.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{
    jacobian_algebra, min_generation_check, quotient_algebra, FDAlgebra, JacobianOutcome,
};
use crate::error::{QpError, Result};
use crate::linalg::QMat;
use crate::modules::{global_dimension_le, socle};
use crate::potential::{double_derivative, AlgebraElement, CyclicWord, Potential, QP};
use crate::quiver::{ArrowId, Path, Quiver, VertexId};

/// Report of a selfinjectivity decision.
#[derive(Clone, Debug)]
pub struct SelfinjectivityReport {
    pub finite_dimensional: bool,
    pub selfinjective: bool,
    pub nakayama: Option<Vec<VertexId>>,
    pub per_vertex_defect: BTreeMap<VertexId, usize>,
}

impl SelfinjectivityReport {
    pub fn to_json(&self, q: &Quiver) -> String {
        let defects: BTreeMap<String, usize> = self
            .per_vertex_defect
            .iter()
            .map(|(v, d)| (q.vertex_name(*v).to_string(), *d))
            .collect();
        let nakayama: Option<BTreeMap<String, String>> = self.nakayama.as_ref().map(|sigma| {
            sigma
                .iter()
                .enumerate()
                .map(|(i, j)| {
                    (
                        q.vertex_name(VertexId(i as u32)).to_string(),
                        q.vertex_name(*j).to_string(),
                    )
                })
                .collect()
        });
        serde_json::to_string_pretty(&serde_json::json!({
            "finiteDimensional": self.finite_dimensional,
            "selfinjective": self.selfinjective,
            "nakayama": nakayama,
            "perVertexExactnessDefect": defects,
        }))
        .expect("serializable")
    }
}

fn basis_ending_at(alg: &FDAlgebra, j: VertexId) -> Vec<usize> {
    alg.basis
        .iter()
        .enumerate()
        .filter(|(_, p)| p.target(&alg.quiver) == j)
        .map(|(k, _)| k)
        .collect()
}

fn basis_starting_at(alg: &FDAlgebra, i: VertexId) -> Vec<usize> {
    alg.basis
        .iter()
        .enumerate()
        .filter(|(_, p)| p.source(&alg.quiver) == i)
        .map(|(k, _)| k)
        .collect()
}

/// Matrix of right multiplication x -> x * el from Λe_src to Λe_tgt on path
/// bases; el must run from src to tgt.
fn right_mult_matrix(
    alg: &FDAlgebra,
    el: &AlgebraElement,
    src: VertexId,
    tgt: VertexId,
) -> QMat {
    let dom = basis_ending_at(alg, src);
    let cod = basis_ending_at(alg, tgt);
    let cod_pos: BTreeMap<usize, usize> = cod.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let mut m = QMat::zeros(cod.len(), dom.len());
    for (col, &b) in dom.iter().enumerate() {
        let x = AlgebraElement::from_path(alg.basis[b].clone());
        let prod = alg.project(&x.mul(el, &alg.quiver));
        for (p, c) in prod.terms() {
            let idx = alg.basis_index(p).expect("normal form in basis");
            m.set(cod_pos[&idx], col, c.clone());
        }
    }
    m
}

/// Matrix of left multiplication x -> el * x from e_src·Λ to e_tgt·Λ.
fn left_mult_matrix(alg: &FDAlgebra, el: &AlgebraElement, src: VertexId, tgt: VertexId) -> QMat {
    let dom = basis_starting_at(alg, src);
    let cod = basis_starting_at(alg, tgt);
    let cod_pos: BTreeMap<usize, usize> = cod.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let mut m = QMat::zeros(cod.len(), dom.len());
    for (col, &b) in dom.iter().enumerate() {
        let x = AlgebraElement::from_path(alg.basis[b].clone());
        let prod = alg.project(&el.mul(&x, &alg.quiver));
        for (p, c) in prod.terms() {
            let idx = alg.basis_index(p).expect("normal form in basis");
            m.set(cod_pos[&idx], col, c.clone());
        }
    }
    m
}

fn stack_blocks(blocks: &[Vec<QMat>]) -> QMat {
    // blocks[r][c]: block row r, block column c
    let row_dims: Vec<usize> = blocks.iter().map(|br| br[0].rows).collect();
    let col_dims: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
    let total_r: usize = row_dims.iter().sum();
    let total_c: usize = col_dims.iter().sum();
    let mut m = QMat::zeros(total_r, total_c);
    let mut roff = 0;
    for (br, rd) in blocks.iter().zip(row_dims.iter()) {
        let mut coff = 0;
        for (b, cd) in br.iter().zip(col_dims.iter()) {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    if !b.get(r, c).is_zero() {
                        m.set(roff + r, coff + c, b.get(r, c).clone());
                    }
                }
            }
            coff += cd;
        }
        roff += rd;
    }
    m
}

/// Exactness defect of the left-module complex at vertex i, at the spot
/// where exactness can fail: dim ker(second map) - rank(first map).
pub fn resolution_exactness_defect(alg: &FDAlgebra, qp: &QP, i: VertexId) -> usize {
    let q = &qp.quiver;
    let outs: Vec<ArrowId> = q.arrows_from(i);
    let ins: Vec<ArrowId> = q.arrows_into(i);
    // first map: P_i -> ⊕_{b out} P_{e(b)}, x -> (x·b)_b
    let first_blocks: Vec<Vec<QMat>> = outs
        .iter()
        .map(|&b| {
            let el = AlgebraElement::from_path(
                Path::from_arrows(q, vec![b]).expect("arrow is a path"),
            );
            vec![right_mult_matrix(alg, &el, i, q.target(b))]
        })
        .collect();
    let first = if outs.is_empty() {
        QMat::zeros(0, basis_ending_at(alg, i).len())
    } else {
        stack_blocks(&first_blocks)
    };
    // second map: ⊕_{b out} P_{e(b)} -> ⊕_{a in} P_{s(a)},
    // block (a, b) = right multiplication by ∂_{(b,a)} W
    let dom_dim: usize = outs.iter().map(|&b| basis_ending_at(alg, q.target(b)).len()).sum();
    let second = if ins.is_empty() {
        QMat::zeros(0, dom_dim)
    } else if outs.is_empty() {
        QMat::zeros(
            ins.iter().map(|&a| basis_ending_at(alg, q.source(a)).len()).sum(),
            0,
        )
    } else {
        let blocks: Vec<Vec<QMat>> = ins
            .iter()
            .map(|&a| {
                outs.iter()
                    .map(|&b| {
                        let d = double_derivative(q, &qp.potential, b, a);
                        right_mult_matrix(alg, &d, q.target(b), q.source(a))
                    })
                    .collect()
            })
            .collect();
        stack_blocks(&blocks)
    };
    let ker = second.cols - second.rank().min(second.cols);
    let ker = if second.rows == 0 { second.cols } else { ker };
    let rk = first.rank();
    debug_assert!(ker >= rk, "image of the first map lies in the kernel");
    ker - rk
}

/// Exactness defect of the dual (right-module) complex at vertex i.
pub fn dual_exactness_defect(alg: &FDAlgebra, qp: &QP, i: VertexId) -> usize {
    let q = &qp.quiver;
    let ins: Vec<ArrowId> = q.arrows_into(i);
    let outs: Vec<ArrowId> = q.arrows_from(i);
    // first map: P*_i -> ⊕_{a in} P*_{s(a)}, x -> (a·x)_a
    let first_blocks: Vec<Vec<QMat>> = ins
        .iter()
        .map(|&a| {
            let el = AlgebraElement::from_path(
                Path::from_arrows(q, vec![a]).expect("arrow is a path"),
            );
            vec![left_mult_matrix(alg, &el, i, q.source(a))]
        })
        .collect();
    let first = if ins.is_empty() {
        QMat::zeros(0, basis_starting_at(alg, i).len())
    } else {
        stack_blocks(&first_blocks)
    };
    // second map: ⊕_{a in} P*_{s(a)} -> ⊕_{b out} P*_{e(b)},
    // block (b, a) = left multiplication by ∂_{(b,a)} W
    let dom_dim: usize = ins.iter().map(|&a| basis_starting_at(alg, q.source(a)).len()).sum();
    let second = if outs.is_empty() {
        QMat::zeros(0, dom_dim)
    } else if ins.is_empty() {
        QMat::zeros(
            outs.iter().map(|&b| basis_starting_at(alg, q.target(b)).len()).sum(),
            0,
        )
    } else {
        let blocks: Vec<Vec<QMat>> = outs
            .iter()
            .map(|&b| {
                ins.iter()
                    .map(|&a| {
                        let d = double_derivative(q, &qp.potential, b, a);
                        left_mult_matrix(alg, &d, q.source(a), q.target(b))
                    })
                    .collect()
            })
            .collect();
        stack_blocks(&blocks)
    };
    let ker = if second.rows == 0 {
        second.cols
    } else {
        second.cols - second.rank().min(second.cols)
    };
    let rk = first.rank();
    debug_assert!(ker >= rk);
    ker - rk
}

/// Decides selfinjectivity of a QP by exactness of the canonical complex.
pub fn is_selfinjective(qp: &QP, degree_bound: usize) -> Result<SelfinjectivityReport> {
    let alg = match jacobian_algebra(qp, degree_bound) {
        JacobianOutcome::Finite(a) => a,
        JacobianOutcome::Undetermined { bound, .. } => {
            return Err(QpError::UndeterminedDimension(bound))
        }
    };
    report_for_algebra(&alg, qp)
}

/// Selfinjectivity report for an already-computed Jacobian algebra.
pub fn report_for_algebra(alg: &FDAlgebra, qp: &QP) -> Result<SelfinjectivityReport> {
    let mut defects = BTreeMap::new();
    let mut all_zero = true;
    for v in qp.quiver.vertices() {
        let d = resolution_exactness_defect(alg, qp, v);
        if d > 0 {
            all_zero = false;
        }
        defects.insert(v, d);
    }
    let nakayama = if all_zero {
        Some(nakayama_permutation(alg)?)
    } else {
        None
    };
    Ok(SelfinjectivityReport {
        finite_dimensional: true,
        selfinjective: all_zero,
        nakayama,
        per_vertex_defect: defects,
    })
}

/// The socle-based oracle: selfinjective iff every projective has a simple
/// socle, the socle supports define a bijection, and dim e_iΛ = dim Λe_{σi}.
pub fn socle_oracle(alg: &FDAlgebra) -> Option<Vec<VertexId>> {
    let n = alg.quiver.vertex_count();
    let mut sigma = vec![None; n];
    for j in alg.quiver.vertices() {
        let s = socle(alg, j);
        if s.len() != 1 || s[0].1 != 1 {
            return None;
        }
        let i = s[0].0;
        if sigma[i.index()].is_some() {
            return None;
        }
        sigma[i.index()] = Some(j);
    }
    let sigma: Vec<VertexId> = sigma.into_iter().collect::<Option<Vec<_>>>()?;
    // dimension symmetry
    for i in alg.quiver.vertices() {
        let right = basis_starting_at(alg, i).len();
        let left = basis_ending_at(alg, sigma[i.index()]).len();
        if right != left {
            return None;
        }
    }
    Some(sigma)
}

/// The Nakayama permutation via socles: σ(i) is the unique j whose
/// projective Λe_j has socle S_i.
pub fn nakayama_permutation(alg: &FDAlgebra) -> Result<Vec<VertexId>> {
    socle_oracle(alg).ok_or_else(|| {
        QpError::NotSelfinjective("socles are not simple or not a bijection".into())
    })
}

/// The QP associated to an algebra presentation: one new arrow per relation,
/// running backwards, with potential the sum of (new arrow)·(relation).
pub struct AlgebraQp {
    pub qp: QP,
    /// the new arrows, forming the canonical cut
    pub cut: Vec<ArrowId>,
}

pub fn qp_of_algebra(
    quiver: &Quiver,
    relations: &[AlgebraElement],
    degree_bound: usize,
) -> Result<AlgebraQp> {
    for r in relations {
        if r.is_zero() || r.terms().any(|(p, _)| p.len() < 2) {
            return Err(QpError::NonAdmissibleRelation(r.display(quiver).to_string()));
        }
        if r.endpoints(quiver).is_none() {
            return Err(QpError::MixedEndpointRelation(r.display(quiver)));
        }
    }
    if !relations.is_empty() && !min_generation_check(relations, quiver, degree_bound)? {
        return Err(QpError::NonMinimalRelations);
    }
    let mut q = quiver.clone();
    let mut cut = Vec::new();
    for (i, r) in relations.iter().enumerate() {
        let (s, e) = r.endpoints(quiver).expect("checked above");
        let name = format!("rho{}", i + 1);
        let rho = q.add_arrow(&name, e, s)?;
        cut.push(rho);
    }
    let mut w = Potential::zero();
    for (rho, r) in cut.iter().zip(relations.iter()) {
        for (p, c) in r.terms() {
            let mut arrows = vec![*rho];
            arrows.extend_from_slice(p.arrows());
            let cyc = CyclicWord::from_arrow_cycle(&q, arrows)?;
            w.add_term(cyc, c.clone())?;
        }
    }
    Ok(AlgebraQp {
        qp: QP::new(q, w)?,
        cut,
    })
}

/// 2-representation-finiteness of the algebra KQ/(relations): global
/// dimension at most 2 and the associated QP selfinjective.
pub fn is_2rf(quiver: &Quiver, relations: &[AlgebraElement], degree_bound: usize) -> Result<bool> {
    let alg = match quotient_algebra(relations, quiver, degree_bound) {
        JacobianOutcome::Finite(a) => a,
        JacobianOutcome::Undetermined { bound, .. } => {
            return Err(QpError::UndeterminedDimension(bound))
        }
    };
    if !global_dimension_le(&alg, 2) {
        return Ok(false);
    }
    let aqp = qp_of_algebra(quiver, relations, degree_bound)?;
    let report = is_selfinjective(&aqp.qp, degree_bound)?;
    Ok(report.selfinjective)
}
