//! Planar QPs: combinatorial embeddings as rotation systems, face tracing,
//! reconstruction of embeddings from 2-cells, validation and planar
//! mutation.
//!
//! Rotations store the counterclockwise cyclic order of arrow ends around
//! each vertex. Faces are traced keeping their interior on the left, so a
//! bounded face whose boundary is a directed cycle is traversed either all
//! forwards or all backwards. The potential of a planar QP is the sum of its
//! directed bounded faces with coefficient one.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use crate::error::{QpError, Result};
use crate::iso;
use crate::mutation::{mutate, MutationResult};
use crate::potential::{Coeff, CyclicWord, Potential, QP};
use crate::quiver::{ArrowId, Quiver, VertexId};

/// One end of an arrow at a vertex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Dart {
    pub arrow: ArrowId,
    pub outgoing: bool,
}

/// Which side of an arrow a face lies on: `Left` is the face traversing the
/// arrow forwards.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A combinatorial embedding: counterclockwise dart orders per vertex and a
/// marker designating the outer face.
#[derive(Clone, Debug)]
pub struct RotationSystem {
    orders: Vec<Vec<Dart>>,
    outer: (ArrowId, Side),
}

/// A traced face: its boundary traversals (arrow, forwards).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face(pub Vec<(ArrowId, bool)>);

impl Face {
    /// The directed cyclic word when the boundary is a directed cycle.
    pub fn directed_cycle(&self, q: &Quiver) -> Option<CyclicWord> {
        if self.0.iter().all(|&(_, f)| f) {
            let arrows: Vec<ArrowId> = self.0.iter().map(|&(a, _)| a).collect();
            CyclicWord::from_arrow_cycle(q, arrows).ok()
        } else if self.0.iter().all(|&(_, f)| !f) {
            let arrows: Vec<ArrowId> = self.0.iter().rev().map(|&(a, _)| a).collect();
            CyclicWord::from_arrow_cycle(q, arrows).ok()
        } else {
            None
        }
    }

    pub fn contains_traversal(&self, a: ArrowId, forward: bool) -> bool {
        self.0.contains(&(a, forward))
    }

    pub fn vertices(&self, q: &Quiver) -> BTreeSet<VertexId> {
        self.0
            .iter()
            .flat_map(|&(a, _)| [q.source(a), q.target(a)])
            .collect()
    }
}

impl RotationSystem {
    pub fn new(q: &Quiver, orders: Vec<Vec<Dart>>, outer: (ArrowId, Side)) -> Result<Self> {
        // every arrow contributes its tail dart at the source and its head
        // dart at the target, each exactly once
        let mut seen: BTreeSet<(ArrowId, bool)> = BTreeSet::new();
        for (vi, darts) in orders.iter().enumerate() {
            for d in darts {
                let home = if d.outgoing {
                    q.source(d.arrow)
                } else {
                    q.target(d.arrow)
                };
                if home.index() != vi {
                    return Err(QpError::NotPlanar(format!(
                        "dart of {} listed at the wrong vertex",
                        q.arrow_name(d.arrow)
                    )));
                }
                if !seen.insert((d.arrow, d.outgoing)) {
                    return Err(QpError::NotPlanar(format!(
                        "dart of {} listed twice",
                        q.arrow_name(d.arrow)
                    )));
                }
            }
        }
        if seen.len() != 2 * q.arrow_count() {
            return Err(QpError::NotPlanar("missing darts".into()));
        }
        Ok(RotationSystem { orders, outer })
    }

    pub fn order_at(&self, v: VertexId) -> &[Dart] {
        &self.orders[v.index()]
    }

    pub fn outer_face_marker(&self) -> (ArrowId, Side) {
        self.outer
    }

    fn predecessor(&self, v: VertexId, d: Dart) -> Dart {
        let ord = &self.orders[v.index()];
        let pos = ord.iter().position(|&x| x == d).expect("dart present");
        ord[(pos + ord.len() - 1) % ord.len()]
    }

    /// Traces all faces of the embedding.
    pub fn faces(&self, q: &Quiver) -> Vec<Face> {
        let mut seen: BTreeSet<(ArrowId, bool)> = BTreeSet::new();
        let mut out = Vec::new();
        for a in q.arrow_ids() {
            for fwd in [true, false] {
                if seen.contains(&(a, fwd)) {
                    continue;
                }
                let mut walk = Vec::new();
                let mut cur = (a, fwd);
                loop {
                    walk.push(cur);
                    seen.insert(cur);
                    let (ca, cf) = cur;
                    let v = if cf { q.target(ca) } else { q.source(ca) };
                    let arrival = Dart {
                        arrow: ca,
                        outgoing: !cf,
                    };
                    let next = self.predecessor(v, arrival);
                    cur = (next.arrow, next.outgoing);
                    if cur == (a, fwd) {
                        break;
                    }
                }
                out.push(Face(walk));
            }
        }
        out
    }

    /// The index of the outer face among `faces`.
    pub fn outer_face_index(&self, faces: &[Face]) -> usize {
        let (a, side) = self.outer;
        let fwd = matches!(side, Side::Left);
        faces
            .iter()
            .position(|f| f.contains_traversal(a, fwd))
            .expect("marker names an existing face")
    }
}

/// Faces of an embedded quiver, determining its potential.
pub fn faces_and_potential(q: &Quiver, rot: &RotationSystem) -> Result<Potential> {
    if !q.is_connected() {
        return Err(QpError::NotPlanar("quiver is disconnected".into()));
    }
    let faces = rot.faces(q);
    let euler = q.vertex_count() as i64 - q.arrow_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(QpError::NotPlanar(format!(
            "Euler characteristic {} (genus is positive)",
            euler
        )));
    }
    let outer = rot.outer_face_index(&faces);
    let mut w = Potential::zero();
    for (i, f) in faces.iter().enumerate() {
        if i == outer {
            continue;
        }
        if let Some(cyc) = f.directed_cycle(q) {
            w.add_term(cyc, Coeff::one())?;
        }
    }
    Ok(w)
}

/// Glues the given 2-cells into an oriented surface and, when the result is
/// a sphere with exactly one extra face, returns the rotation system with
/// that face as the outer one.
pub fn embed_from_cells(q: &Quiver, cells: &[CyclicWord]) -> Result<RotationSystem> {
    if !q.is_connected() {
        return Err(QpError::EmbeddingMismatch("quiver is disconnected".into()));
    }
    let n_cells = cells.len();
    // arrow -> cells containing it
    let mut touching: BTreeMap<ArrowId, Vec<usize>> = BTreeMap::new();
    for (ci, cell) in cells.iter().enumerate() {
        for &a in cell.arrows() {
            touching.entry(a).or_default().push(ci);
        }
    }
    for (a, cs) in &touching {
        if cs.len() > 2 {
            return Err(QpError::EmbeddingMismatch(format!(
                "arrow {} lies on {} cells",
                q.arrow_name(*a),
                cs.len()
            )));
        }
        if cs.len() == 2 && cs[0] == cs[1] {
            return Err(QpError::EmbeddingMismatch(format!(
                "cell visits arrow {} twice",
                q.arrow_name(*a)
            )));
        }
    }
    // orient cells: adjacent cells traverse a shared arrow oppositely
    let mut eps: Vec<Option<bool>> = vec![None; n_cells];
    for start in 0..n_cells {
        if eps[start].is_some() {
            continue;
        }
        eps[start] = Some(true);
        let mut stack = vec![start];
        while let Some(ci) = stack.pop() {
            let e = eps[ci].unwrap();
            for &a in cells[ci].arrows() {
                for &cj in &touching[&a] {
                    if cj == ci {
                        continue;
                    }
                    match eps[cj] {
                        None => {
                            eps[cj] = Some(!e);
                            stack.push(cj);
                        }
                        Some(ej) => {
                            if ej == e {
                                return Err(QpError::EmbeddingMismatch(format!(
                                    "orientation conflict at arrow {}",
                                    q.arrow_name(a)
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    // corners: for consecutive traversals (t_in, t_out) of a cell at vertex v
    // the rotation successor of the leaving dart is the arriving dart
    let mut rho_next: BTreeMap<Dart, Dart> = BTreeMap::new();
    let mut rho_prev: BTreeMap<Dart, Dart> = BTreeMap::new();
    for (ci, cell) in cells.iter().enumerate() {
        let e = eps[ci].unwrap();
        let trav: Vec<(ArrowId, bool)> = if e {
            cell.arrows().iter().map(|&a| (a, true)).collect()
        } else {
            cell.arrows().iter().rev().map(|&a| (a, false)).collect()
        };
        let m = trav.len();
        for i in 0..m {
            let (a_in, f_in) = trav[i];
            let (a_out, f_out) = trav[(i + 1) % m];
            let v = if f_in { q.target(a_in) } else { q.source(a_in) };
            let d_in = Dart {
                arrow: a_in,
                outgoing: !f_in,
            };
            let d_out = Dart {
                arrow: a_out,
                outgoing: f_out,
            };
            debug_assert_eq!(
                v,
                if f_out { q.source(a_out) } else { q.target(a_out) }
            );
            if rho_next.insert(d_out, d_in).is_some() {
                return Err(QpError::EmbeddingMismatch(format!(
                    "two cells claim the same corner at {}",
                    q.vertex_name(v)
                )));
            }
            if rho_prev.insert(d_in, d_out).is_some() {
                return Err(QpError::EmbeddingMismatch(format!(
                    "two cells claim the same corner at {}",
                    q.vertex_name(v)
                )));
            }
        }
    }
    // assemble rotations: chains of darts at each vertex
    let mut orders: Vec<Vec<Dart>> = Vec::with_capacity(q.vertex_count());
    for v in q.vertices() {
        let mut darts: Vec<Dart> = Vec::new();
        for a in q.arrows_from(v) {
            darts.push(Dart {
                arrow: a,
                outgoing: true,
            });
        }
        for a in q.arrows_into(v) {
            darts.push(Dart {
                arrow: a,
                outgoing: false,
            });
        }
        darts.sort();
        if darts.is_empty() {
            orders.push(Vec::new());
            continue;
        }
        // find a chain start: a dart with no predecessor assigned, else any
        let start = darts
            .iter()
            .copied()
            .find(|d| !rho_prev.contains_key(d))
            .unwrap_or(darts[0]);
        let mut order = vec![start];
        let mut cur = start;
        while let Some(&next) = rho_next.get(&cur) {
            if next == start {
                break;
            }
            order.push(next);
            cur = next;
        }
        if order.len() != darts.len() {
            return Err(QpError::EmbeddingMismatch(format!(
                "darts at {} do not chain into one rotation",
                q.vertex_name(v)
            )));
        }
        orders.push(order);
    }
    // provisional rotation (outer marker fixed below)
    let dummy_marker = (
        q.arrow_ids().next().ok_or_else(|| {
            QpError::EmbeddingMismatch("quiver has no arrows".into())
        })?,
        Side::Left,
    );
    let rot = RotationSystem::new(q, orders, dummy_marker)?;
    let faces = rot.faces(q);
    let euler = q.vertex_count() as i64 - q.arrow_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(QpError::EmbeddingMismatch(format!(
            "glued surface has Euler characteristic {euler}"
        )));
    }
    if faces.len() != n_cells + 1 {
        return Err(QpError::EmbeddingMismatch(format!(
            "{} faces for {} cells",
            faces.len(),
            n_cells
        )));
    }
    // match faces against the cell multiset; exactly one face is left over
    let mut unmatched: Vec<CyclicWord> = cells.to_vec();
    let mut outer: Option<(ArrowId, Side)> = None;
    // all-forward faces first: they are the positively oriented cells
    let mut order: Vec<&Face> = faces.iter().collect();
    order.sort_by_key(|f| !f.0.iter().all(|&(_, fwd)| fwd));
    for f in order {
        let word = f.directed_cycle(q);
        let hit = word
            .as_ref()
            .and_then(|cyc| unmatched.iter().position(|c| c == cyc));
        match hit {
            Some(pos) => {
                unmatched.remove(pos);
            }
            None => {
                let (a, fwd) = f.0[0];
                let side = if fwd { Side::Left } else { Side::Right };
                if outer.is_some() {
                    return Err(QpError::EmbeddingMismatch(
                        "more than one non-cell face".into(),
                    ));
                }
                outer = Some((a, side));
            }
        }
    }
    if !unmatched.is_empty() {
        return Err(QpError::EmbeddingMismatch(format!(
            "{} of {} cells do not appear as faces",
            unmatched.len(),
            n_cells
        )));
    }
    match outer {
        Some(marker) => RotationSystem::new(q, rot.orders, marker),
        // all faces are cells: a closed sphere, not a disk complex
        None => Err(QpError::EmbeddingMismatch(
            "no room for an outer face".into(),
        )),
    }
}

/// Whether the cells glue into a sphere minus one face; certifies simple
/// connectivity of the corresponding canvas.
pub fn disk_certificate(q: &Quiver, cells: &[CyclicWord]) -> bool {
    if q.arrow_count() == 0 {
        return q.is_connected();
    }
    embed_from_cells(q, cells).is_ok()
}

/// A QP with a planar embedding; the potential equals the sum of directed
/// bounded faces with unit coefficients.
#[derive(Clone, Debug)]
pub struct PlanarQP {
    qp: QP,
    rot: RotationSystem,
}

impl PlanarQP {
    /// Validates that the potential matches the embedding's bounded faces.
    pub fn from_parts(qp: QP, rot: RotationSystem) -> Result<Self> {
        let derived = faces_and_potential(&qp.quiver, &rot)?;
        if derived != qp.potential {
            return Err(QpError::EmbeddingMismatch(
                "potential differs from the sum of directed bounded faces".into(),
            ));
        }
        Ok(PlanarQP { qp, rot })
    }

    /// Builds the embedding by gluing the given cells into a disk complex.
    pub fn from_cells(quiver: Quiver, cells: Vec<CyclicWord>) -> Result<Self> {
        let rot = embed_from_cells(&quiver, &cells)?;
        let mut w = Potential::zero();
        for c in cells {
            w.add_term(c, Coeff::one())?;
        }
        let qp = QP::new(quiver, w)?;
        // faces of the glued surface are exactly the cells by construction
        Ok(PlanarQP { qp, rot })
    }

    /// Builds the embedding from integer coordinates by sorting darts
    /// counterclockwise; the potential is read off the bounded faces.
    pub fn from_coordinates(quiver: Quiver, coords: &[(i64, i64)]) -> Result<Self> {
        assert_eq!(coords.len(), quiver.vertex_count());
        let mut orders = Vec::with_capacity(quiver.vertex_count());
        for v in quiver.vertices() {
            let mut darts: Vec<(Dart, (i64, i64))> = Vec::new();
            for a in quiver.arrows_from(v) {
                let t = quiver.target(a);
                let d = (
                    coords[t.index()].0 - coords[v.index()].0,
                    coords[t.index()].1 - coords[v.index()].1,
                );
                darts.push((
                    Dart {
                        arrow: a,
                        outgoing: true,
                    },
                    d,
                ));
            }
            for a in quiver.arrows_into(v) {
                let s = quiver.source(a);
                let d = (
                    coords[s.index()].0 - coords[v.index()].0,
                    coords[s.index()].1 - coords[v.index()].1,
                );
                darts.push((
                    Dart {
                        arrow: a,
                        outgoing: false,
                    },
                    d,
                ));
            }
            for (_, d) in &darts {
                if *d == (0, 0) {
                    return Err(QpError::NotPlanar(
                        "coincident coordinates for adjacent vertices".into(),
                    ));
                }
            }
            darts.sort_by(|(da, a), (db, b)| angle_cmp(*a, *b).then(da.cmp(db)));
            // reject angular ties between distinct darts
            for w in darts.windows(2) {
                if angle_cmp(w[0].1, w[1].1) == std::cmp::Ordering::Equal {
                    return Err(QpError::NotPlanar(format!(
                        "parallel darts at {}",
                        quiver.vertex_name(v)
                    )));
                }
            }
            orders.push(darts.into_iter().map(|(d, _)| d).collect::<Vec<_>>());
        }
        // outer face: at the lowest-leftmost vertex, the face arriving on the
        // minimal-angle dart
        let v0 = quiver
            .vertices()
            .min_by_key(|v| (coords[v.index()].1, coords[v.index()].0))
            .expect("nonempty quiver");
        let dm = orders[v0.index()]
            .first()
            .copied()
            .ok_or_else(|| QpError::NotPlanar("isolated vertex".into()))?;
        // the traversal arriving on dart dm
        let marker_traversal = (dm.arrow, !dm.outgoing);
        let marker = (
            marker_traversal.0,
            if marker_traversal.1 { Side::Left } else { Side::Right },
        );
        let rot = RotationSystem::new(&quiver, orders, marker)?;
        let w = faces_and_potential(&quiver, &rot)?;
        let qp = QP::new(quiver, w)?;
        Ok(PlanarQP { qp, rot })
    }

    pub fn qp(&self) -> QP {
        self.qp.clone()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.qp.quiver
    }

    pub fn potential(&self) -> &Potential {
        &self.qp.potential
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rot
    }

    /// Vertices on the outer face.
    pub fn boundary_vertices(&self) -> BTreeSet<VertexId> {
        let q = &self.qp.quiver;
        let faces = self.rot.faces(q);
        let outer = self.rot.outer_face_index(&faces);
        faces[outer].vertices(q)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rot.order_at(v).len()
    }
}

/// Outcome of planar validation.
#[derive(Clone, Debug)]
pub struct PlanarCertificate {
    pub bounded_faces: usize,
    pub all_bounded_faces_directed: bool,
    pub faces_match_cells: bool,
    pub outer_walk_is_simple: bool,
}

/// Checks planarity of the rotation system, that the potential 2-cells are
/// exactly the directed bounded faces, and whether the union is a disk.
pub fn validate_planar(pqp: &PlanarQP) -> Result<PlanarCertificate> {
    let q = pqp.quiver();
    if !q.is_connected() {
        return Err(QpError::NotPlanar("quiver is disconnected".into()));
    }
    let faces = pqp.rot.faces(q);
    let euler = q.vertex_count() as i64 - q.arrow_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(QpError::NotPlanar(format!("Euler characteristic {euler}")));
    }
    let outer = pqp.rot.outer_face_index(&faces);
    let mut directed = true;
    let mut face_words: Vec<CyclicWord> = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        if i == outer {
            continue;
        }
        match f.directed_cycle(q) {
            Some(cyc) => face_words.push(cyc),
            None => directed = false,
        }
    }
    face_words.sort();
    let mut cells: Vec<CyclicWord> = pqp.qp.potential.cycles().cloned().collect();
    cells.sort();
    let unit_coeffs = pqp
        .qp
        .potential
        .terms()
        .all(|(_, c)| c == &Coeff::one());
    let matches = directed && face_words == cells && unit_coeffs;
    if !matches {
        let msg = if !directed {
            "some bounded face is not a directed cycle".to_string()
        } else if !unit_coeffs {
            "potential has non-unit coefficients".to_string()
        } else {
            format!(
                "faces {:?} vs cells {:?}",
                face_words
                    .iter()
                    .map(|wd| wd.display(q))
                    .collect::<Vec<_>>(),
                cells.iter().map(|wd| wd.display(q)).collect::<Vec<_>>()
            )
        };
        return Err(QpError::EmbeddingMismatch(msg));
    }
    // disk diagnostic: the outer walk visits each of its vertices once
    let outer_walk = &faces[outer];
    let mut visits: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &(a, fwd) in &outer_walk.0 {
        let v = if fwd { q.target(a) } else { q.source(a) };
        *visits.entry(v).or_insert(0) += 1;
    }
    let simple = visits.values().all(|&c| c == 1);
    Ok(PlanarCertificate {
        bounded_faces: faces.len() - 1,
        all_bounded_faces_directed: true,
        faces_match_cells: true,
        outer_walk_is_simple: simple,
    })
}

/// Rescales arrows to make every potential coefficient one, peeling cells
/// that own a private arrow. Succeeds on disk-shaped cell complexes.
pub fn normalize_unit_coefficients(qp: &QP) -> Result<QP> {
    let q = &qp.quiver;
    let cells: Vec<(CyclicWord, Coeff)> = qp
        .potential
        .terms()
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect();
    let mut remaining: Vec<usize> = (0..cells.len()).collect();
    let mut peel: Vec<(usize, ArrowId)> = Vec::new();
    while !remaining.is_empty() {
        let mut found = None;
        'search: for (pos, &ci) in remaining.iter().enumerate() {
            for &a in cells[ci].0.arrows() {
                if cells[ci].0.multiplicity(a) != 1 {
                    continue;
                }
                let elsewhere = remaining
                    .iter()
                    .filter(|&&cj| cj != ci)
                    .any(|&cj| cells[cj].0.contains(a));
                if !elsewhere {
                    found = Some((pos, ci, a));
                    break 'search;
                }
            }
        }
        let Some((pos, ci, a)) = found else {
            return Err(QpError::CoefficientNormalization(
                "no cell with a private arrow remains".into(),
            ));
        };
        remaining.remove(pos);
        peel.push((ci, a));
    }
    // assign scalings in reverse peel order
    let mut delta: Vec<Coeff> = vec![Coeff::one(); q.arrow_count()];
    for &(ci, a) in peel.iter().rev() {
        let (cell, coeff) = &cells[ci];
        let mut prod = coeff.clone();
        for &b in cell.arrows() {
            if b != a {
                prod *= delta[b.index()].clone();
            }
        }
        delta[a.index()] = Coeff::one() / prod;
    }
    let mut w = Potential::zero();
    for (cell, coeff) in &cells {
        let mut c = coeff.clone();
        for &b in cell.arrows() {
            c *= delta[b.index()].clone();
        }
        w.add_term(cell.clone(), c)?;
    }
    QP::new(q.clone(), w)
}

/// Planar mutation: DWZ mutation followed by coefficient normalization and
/// re-embedding of the reduced potential's cells as a disk complex.
pub fn planar_mutate(pqp: &PlanarQP, k: VertexId, degree_bound: usize) -> Result<PlanarQP> {
    let q = pqp.quiver();
    let deg = pqp.degree(k);
    let boundary = pqp.boundary_vertices();
    if boundary.contains(&k) {
        if deg > 4 {
            return Err(QpError::NotPlanarMutable(
                q.vertex_name(k).to_string(),
                format!("boundary vertex of degree {deg}"),
            ));
        }
    } else if deg != 4 {
        return Err(QpError::NotPlanarMutable(
            q.vertex_name(k).to_string(),
            format!("interior vertex of degree {deg}"),
        ));
    }
    let m: MutationResult = mutate(&pqp.qp, k, degree_bound)?;
    let normalized = normalize_unit_coefficients(&m.qp)?;
    let cells: Vec<CyclicWord> = normalized.potential.cycles().cloned().collect();
    let out = PlanarQP::from_cells(normalized.quiver.clone(), cells).map_err(|e| {
        QpError::NotPlanarMutable(q.vertex_name(k).to_string(), format!("{e}"))
    })?;
    debug_assert!(
        iso::is_isomorphic_up_to_rescaling(&m.qp, &out.qp),
        "planar mutation must agree with DWZ mutation up to rescaling"
    );
    Ok(out)
}

/// Planar mutation along a whole sigma-orbit; the orbit must have no
/// internal arrows and every step must be planar mutable.
pub fn planar_orbit_mutate(
    pqp: &PlanarQP,
    sigma: &[VertexId],
    k: VertexId,
    degree_bound: usize,
) -> Result<PlanarQP> {
    let q = pqp.quiver();
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
        let (s, t) = (q.source(a), q.target(a));
        if s != t && orbit.contains(&s) && orbit.contains(&t) {
            return Err(QpError::OrbitPreconditionViolated(format!(
                "arrow {} joins orbit vertices",
                q.arrow_name(a)
            )));
        }
    }
    let mut current = pqp.clone();
    for &v in &orbit {
        current = planar_mutate(&current, v, degree_bound)?;
    }
    Ok(current)
}

/// Exact counterclockwise angular comparison of nonzero integer vectors.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> std::cmp::Ordering {
    fn half(v: (i64, i64)) -> u8 {
        // 0 for angle in [0, pi), 1 for [pi, 2pi)
        if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
            0
        } else {
            1
        }
    }
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    // same half-plane: compare by cross product
    let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
    if cross > 0 {
        std::cmp::Ordering::Less
    } else if cross < 0 {
        std::cmp::Ordering::Greater
    } else {
        std::cmp::Ordering::Equal
    }
}
