//! Finite dimensional left modules over an FDAlgebra, projective covers,
//! syzygies and global dimension bounds.
//!
//! A left module M is stored as one rational vector space per vertex with an
//! action matrix per arrow. With composition `ab` = first a then b, left
//! multiplication by an arrow maps the component at its target to the
//! component at its source.

use num_traits::{One, Zero};

use crate::algebra::FDAlgebra;
use crate::linalg::QMat;
use crate::potential::Coeff;
use crate::quiver::{ArrowId, Path, VertexId};

/// A left module presented by per-vertex dimensions and arrow actions.
#[derive(Clone, Debug)]
pub struct LeftModule {
    /// dimension of e_i M per vertex i
    pub dims: Vec<usize>,
    /// for arrow a: matrix from the component at e(a) to the component at s(a)
    pub maps: Vec<QMat>,
}

impl LeftModule {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// The simple module at a vertex.
    pub fn simple(alg: &FDAlgebra, v: VertexId) -> Self {
        let n = alg.quiver.vertex_count();
        let mut dims = vec![0usize; n];
        dims[v.index()] = 1;
        let maps = alg
            .quiver
            .arrow_ids()
            .map(|a| QMat::zeros(dims[alg.quiver.source(a).index()], dims[alg.quiver.target(a).index()]))
            .collect();
        LeftModule { dims, maps }
    }

    /// The indecomposable projective P_j = Λ e_j on the path basis.
    pub fn projective(alg: &FDAlgebra, j: VertexId) -> Self {
        let q = &alg.quiver;
        let n = q.vertex_count();
        // component at i: basis paths from i to j
        let comp: Vec<Vec<usize>> = (0..n)
            .map(|i| alg.basis_between(VertexId(i as u32), j))
            .collect();
        let dims: Vec<usize> = comp.iter().map(|c| c.len()).collect();
        let maps = q
            .arrow_ids()
            .map(|a| {
                let s = q.source(a).index();
                let t = q.target(a).index();
                let mut m = QMat::zeros(dims[s], dims[t]);
                for (col, &bidx) in comp[t].iter().enumerate() {
                    // left multiply the basis path by the arrow
                    let path = &alg.basis[bidx];
                    let mut arrows = vec![a];
                    arrows.extend_from_slice(path.arrows());
                    let prod = Path::from_arrows(q, arrows).expect("arrow prepends");
                    let nf = alg.project(&crate::potential::AlgebraElement::from_path(prod));
                    for (p, c) in nf.terms() {
                        let row_b = alg.basis_index(p).expect("normal form in basis");
                        let row = comp[s]
                            .iter()
                            .position(|&x| x == row_b)
                            .expect("endpoint-consistent");
                        m.set(row, col, c.clone());
                    }
                }
                m
            })
            .collect();
        LeftModule { dims, maps }
    }
}

/// A morphism of left modules: one matrix per vertex component.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub blocks: Vec<QMat>,
}

/// Dimensions of top(M) = M / (sum of arrow images) per vertex,
/// together with explicit lift vectors generating the top.
fn top_with_lifts(alg: &FDAlgebra, m: &LeftModule) -> Vec<Vec<Vec<Coeff>>> {
    let q = &alg.quiver;
    let n = q.vertex_count();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // radical component at i: sum over arrows a with s(a) = i of im(rho_a)
        let mut gens: Vec<Vec<Coeff>> = Vec::new();
        for a in q.arrows_from(VertexId(i as u32)) {
            let m_a = &m.maps[a.index()];
            for col in 0..m_a.cols {
                let v: Vec<Coeff> = (0..m_a.rows).map(|r| m_a.get(r, col).clone()).collect();
                if v.iter().any(|x| !x.is_zero()) {
                    gens.push(v);
                }
            }
        }
        let (rad_rows, rad_pivots) = crate::linalg::echelon_basis(gens);
        // complement of the radical inside the component
        let mut lifts = Vec::new();
        let mut rows = rad_rows.clone();
        let mut pivots = rad_pivots.clone();
        for k in 0..m.dims[i] {
            let mut e = vec![Coeff::zero(); m.dims[i]];
            e[k] = Coeff::one();
            let (nr, np) = crate::linalg::echelon_basis(
                rows.iter().cloned().chain(std::iter::once(e.clone())).collect(),
            );
            if nr.len() > rows.len() {
                lifts.push(e);
                rows = nr;
                pivots = np;
            }
        }
        let _ = pivots;
        out.push(lifts);
    }
    out
}

/// A projective cover: the covering projective module, the covering map, and
/// the multiplicity of each P_j.
pub struct Cover {
    pub module: LeftModule,
    pub map: ModuleMap,
    pub multiplicities: Vec<usize>,
}

/// Builds the projective cover P(top M) -> M.
pub fn projective_cover(alg: &FDAlgebra, m: &LeftModule) -> Cover {
    let q = &alg.quiver;
    let n = q.vertex_count();
    let lifts = top_with_lifts(alg, m);
    let mults: Vec<usize> = lifts.iter().map(|l| l.len()).collect();
    // assemble P = ⊕_j P_j^{mult_j}; component at i indexes (j, copy, basis path i->j)
    let mut comp_index: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for j in 0..n {
        for copy in 0..mults[j] {
            for i in 0..n {
                for &b in &alg.basis_between(VertexId(i as u32), VertexId(j as u32)) {
                    comp_index[i].push((j, copy, b));
                }
            }
        }
    }
    let dims: Vec<usize> = comp_index.iter().map(|c| c.len()).collect();
    let maps: Vec<QMat> = q
        .arrow_ids()
        .map(|a| {
            let s = q.source(a).index();
            let t = q.target(a).index();
            let mut mat = QMat::zeros(dims[s], dims[t]);
            for (col, &(j, copy, b)) in comp_index[t].iter().enumerate() {
                let path = &alg.basis[b];
                let mut arrows = vec![a];
                arrows.extend_from_slice(path.arrows());
                let prod = Path::from_arrows(q, arrows).expect("arrow prepends");
                let nf = alg.project(&crate::potential::AlgebraElement::from_path(prod));
                for (p, c) in nf.terms() {
                    let pb = alg.basis_index(p).expect("normal form in basis");
                    let row = comp_index[s]
                        .iter()
                        .position(|&(jj, cc, bb)| jj == j && cc == copy && bb == pb)
                        .expect("projective closed under action");
                    mat.set(row, col, c.clone());
                }
            }
            mat
        })
        .collect();
    let p = LeftModule { dims: dims.clone(), maps };
    // covering map: generator (j, copy, e_j) -> lift vector; general basis
    // element (j, copy, path p) -> rho_p(lift)
    let blocks: Vec<QMat> = (0..n)
        .map(|i| {
            let mut mat = QMat::zeros(m.dims[i], dims[i]);
            for (col, &(j, copy, b)) in comp_index[i].iter().enumerate() {
                let lift = &lifts[j][copy];
                let path = &alg.basis[b];
                // apply arrows right-to-left: rho_p = rho_{a1} ∘ ... ∘ rho_{ak}
                let mut vec_j = lift.clone();
                for &a in path.arrows().iter().rev() {
                    vec_j = m.maps[a.index()].apply(&vec_j);
                }
                for (r, val) in vec_j.into_iter().enumerate() {
                    mat.set(r, col, val);
                }
            }
            mat
        })
        .collect();
    Cover {
        module: p,
        map: ModuleMap { blocks },
        multiplicities: mults,
    }
}

/// The kernel of a module map as a module with induced arrow actions.
pub fn kernel_module(alg: &FDAlgebra, dom: &LeftModule, map: &ModuleMap) -> LeftModule {
    let q = &alg.quiver;
    let n = q.vertex_count();
    // kernel basis per component
    let kbases: Vec<Vec<Vec<Coeff>>> = (0..n)
        .map(|i| {
            if dom.dims[i] == 0 {
                return Vec::new();
            }
            if map.blocks[i].rows == 0 {
                // everything is in the kernel
                return (0..dom.dims[i])
                    .map(|k| {
                        let mut e = vec![Coeff::zero(); dom.dims[i]];
                        e[k] = Coeff::one();
                        e
                    })
                    .collect();
            }
            map.blocks[i].kernel_basis()
        })
        .collect();
    let dims: Vec<usize> = kbases.iter().map(|b| b.len()).collect();
    // echelonized bases for solving coordinates
    let echelons: Vec<(Vec<Vec<Coeff>>, Vec<usize>)> = kbases
        .iter()
        .map(|b| crate::linalg::echelon_basis(b.clone()))
        .collect();
    let maps: Vec<QMat> = q
        .arrow_ids()
        .map(|a| {
            let s = q.source(a).index();
            let t = q.target(a).index();
            let mut mat = QMat::zeros(dims[s], dims[t]);
            for (col, kvec) in kbases[t].iter().enumerate() {
                let image = dom.maps[a.index()].apply(kvec);
                // express image in the kernel basis at s via echelon reduction
                let (rows, pivots) = &echelons[s];
                let coords = crate::linalg::reduce_against(&image, rows, pivots)
                    .expect("kernel is a submodule");
                // coords are w.r.t. echelon rows; convert to kbasis coords
                // by solving: echelon rows are combinations of kbasis rows.
                // Instead express directly against kbasis with dense solve.
                let _ = coords;
                let mut sys = QMat::zeros(dom.dims[s], kbases[s].len());
                for (cc, kv) in kbases[s].iter().enumerate() {
                    for (rr, val) in kv.iter().enumerate() {
                        sys.set(rr, cc, val.clone());
                    }
                }
                let x = solve_dense(&sys, &image).expect("kernel is a submodule");
                for (row, val) in x.into_iter().enumerate() {
                    mat.set(row, col, val);
                }
            }
            mat
        })
        .collect();
    LeftModule { dims, maps }
}

/// Solves A x = b over the rationals (A injective on its column space).
fn solve_dense(a: &QMat, b: &[Coeff]) -> Option<Vec<Coeff>> {
    let mut aug = QMat::zeros(a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, a.cols, b[r].clone());
    }
    let pivots = aug.row_reduce();
    if pivots.contains(&a.cols) {
        return None;
    }
    let mut x = vec![Coeff::zero(); a.cols];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.get(ri, a.cols).clone();
    }
    Some(x)
}

/// Minimal projective resolution bookkeeping: multiplicities of each
/// syzygy's projective cover.
pub struct Resolution {
    pub cover_multiplicities: Vec<Vec<usize>>,
    pub terminated: bool,
}

/// Resolves a module up to `steps` projective covers; stops early when a
/// syzygy vanishes.
pub fn resolve(alg: &FDAlgebra, m: &LeftModule, steps: usize) -> Resolution {
    let mut current = m.clone();
    let mut mults = Vec::new();
    for _ in 0..=steps {
        if current.is_zero() {
            return Resolution {
                cover_multiplicities: mults,
                terminated: true,
            };
        }
        let cover = projective_cover(alg, &current);
        mults.push(cover.multiplicities.clone());
        current = kernel_module(alg, &cover.module, &cover.map);
    }
    Resolution {
        cover_multiplicities: mults,
        terminated: current.is_zero(),
    }
}

/// Whether the algebra has global dimension at most n: the (n+1)-st term of
/// the minimal projective resolution of every simple vanishes.
pub fn global_dimension_le(alg: &FDAlgebra, n: usize) -> bool {
    for v in alg.quiver.vertices() {
        let s = LeftModule::simple(alg, v);
        let res = resolve(alg, &s, n);
        if !res.terminated || res.cover_multiplicities.len() > n + 1 {
            return false;
        }
    }
    true
}

/// The socle of the left module Λe_j: elements killed by every arrow,
/// reported as (vertex, multiplicity) pairs of its simple summands.
pub fn socle(alg: &FDAlgebra, j: VertexId) -> Vec<(VertexId, usize)> {
    let q = &alg.quiver;
    let p = LeftModule::projective(alg, j);
    let n = q.vertex_count();
    let mut out = Vec::new();
    for i in 0..n {
        if p.dims[i] == 0 {
            continue;
        }
        // socle component at i: intersection of kernels of all rho_a with e(a)=i
        // stacked as one matrix from component i to ⊕ components s(a)
        let arrows: Vec<ArrowId> = q
            .arrow_ids()
            .filter(|&a| q.target(a).index() == i)
            .collect();
        let rows: usize = arrows.iter().map(|a| p.dims[q.source(*a).index()]).sum();
        let mut stacked = QMat::zeros(rows, p.dims[i]);
        let mut off = 0;
        for a in &arrows {
            let m = &p.maps[a.index()];
            for r in 0..m.rows {
                for c in 0..m.cols {
                    stacked.set(off + r, c, m.get(r, c).clone());
                }
            }
            off += m.rows;
        }
        let kdim = if rows == 0 {
            p.dims[i]
        } else {
            stacked.kernel_basis().len()
        };
        if kdim > 0 {
            out.push((VertexId(i as u32), kdim));
        }
    }
    out
}
