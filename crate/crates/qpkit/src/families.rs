//! Constructors for the concrete QP families: cycles, the tubular (2,2,2,2)
//! QP, tensor and square products of Dynkin quivers, triangle and
//! square-shaped planar QPs, and Dynkin utilities.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{QpError, Result};
use crate::planar::PlanarQP;
use crate::potential::{Coeff, CyclicWord, Potential, QP};
use crate::quiver::{ArrowId, Quiver, VertexId};

fn mod1(i: i64, n: i64) -> i64 {
    // representatives 1..=n
    ((i - 1).rem_euclid(n)) + 1
}

/// Builds a QP without the family-size restriction (used for the 3-cycle).
pub fn cycle_qp_unchecked(n: usize) -> QP {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut q = Quiver::new();
    for v in &names {
        q.add_vertex(v).unwrap();
    }
    // a_i: i -> i-1 (indices mod n)
    for i in 1..=n as i64 {
        q.add_arrow_by_names(
            &format!("a{i}"),
            &i.to_string(),
            &mod1(i - 1, n as i64).to_string(),
        )
        .unwrap();
    }
    // the unique n-cycle starting at vertex 1: a_1, a_n, a_{n-1}, ..., a_2
    let mut order = vec![q.arrow_by_name("a1").unwrap()];
    for i in (2..=n as i64).rev() {
        order.push(q.arrow_by_name(&format!("a{i}")).unwrap());
    }
    let mut w = Potential::zero();
    w.add_term(
        CyclicWord::from_arrow_cycle(&q, order).unwrap(),
        Coeff::one(),
    )
    .unwrap();
    QP::new(q, w).unwrap()
}

/// The cyclic family: an n-cycle with its full cycle as potential (n > 3).
pub fn cycle_qp(n: usize) -> Result<QP> {
    if n <= 3 {
        return Err(QpError::BadParameter(format!("cycle family needs n > 3, got {n}")));
    }
    Ok(cycle_qp_unchecked(n))
}

/// The even companion family: chords a_i (odd i) plus the boundary arrows
/// b_i, with potential a_1 a_{n-1} ... a_3 minus the chord triangles.
pub fn tilde_cycle_qp(n: usize) -> Result<QP> {
    if n <= 3 || !n.is_multiple_of(2) {
        return Err(QpError::BadParameter(format!(
            "tilde cycle family needs even n > 3, got {n}"
        )));
    }
    let n_i = n as i64;
    let mut q = Quiver::new();
    for i in 1..=n {
        q.add_vertex(&i.to_string()).unwrap();
    }
    // a_i: i -> i-2 for odd i; b_i: i -> i+1 for all i
    for i in (1..=n_i).step_by(2) {
        q.add_arrow_by_names(
            &format!("a{i}"),
            &i.to_string(),
            &mod1(i - 2, n_i).to_string(),
        )
        .unwrap();
    }
    for i in 1..=n_i {
        q.add_arrow_by_names(
            &format!("b{i}"),
            &i.to_string(),
            &mod1(i + 1, n_i).to_string(),
        )
        .unwrap();
    }
    let mut w = Potential::zero();
    // central chord cycle: starting at 1, repeatedly apply a: 1 -> n-1 -> ...
    let mut chord = vec![q.arrow_by_name("a1").unwrap()];
    let mut at = mod1(-1, n_i);
    while at != 1 {
        chord.push(q.arrow_by_name(&format!("a{at}")).unwrap());
        at = mod1(at - 2, n_i);
    }
    w.add_term(
        CyclicWord::from_arrow_cycle(&q, chord).unwrap(),
        Coeff::one(),
    )
    .unwrap();
    // triangles a_i b_{i-2} b_{i-1} with coefficient -1
    for i in (1..=n_i).step_by(2) {
        let tri = vec![
            q.arrow_by_name(&format!("a{i}")).unwrap(),
            q.arrow_by_name(&format!("b{}", mod1(i - 2, n_i))).unwrap(),
            q.arrow_by_name(&format!("b{}", mod1(i - 1, n_i))).unwrap(),
        ];
        w.add_term(
            CyclicWord::from_arrow_cycle(&q, tri).unwrap(),
            -Coeff::one(),
        )
        .unwrap();
    }
    QP::new(q, w)
}

/// The tubular (2,2,2,2) QP with parameter lambda outside {0, 1}.
pub fn tubular_2222(lambda: Coeff) -> Result<QP> {
    if lambda.is_zero() || lambda.is_one() {
        return Err(QpError::BadParameter("lambda must avoid 0 and 1".into()));
    }
    let q = Quiver::from_names(
        &["t", "m1", "m2", "m3", "m4", "b"],
        &[
            ("a", "t", "m1"),
            ("b", "t", "m2"),
            ("c", "t", "m3"),
            ("d", "t", "m4"),
            ("a'", "m1", "b"),
            ("b'", "m2", "b"),
            ("c'", "m3", "b"),
            ("d'", "m4", "b"),
            ("e", "b", "t"),
            ("f", "b", "t"),
        ],
    )?;
    let by = |n: &str| q.arrow_by_name(n).unwrap();
    let mut w = Potential::zero();
    let mut term = |x: &str, xp: &str, z: &str, c: Coeff| {
        let cyc = CyclicWord::from_arrow_cycle(&q, vec![by(x), by(xp), by(z)]).unwrap();
        w.add_term(cyc, c).unwrap();
    };
    term("a", "a'", "e", Coeff::one());
    term("b", "b'", "e", Coeff::one());
    term("c", "c'", "e", Coeff::one());
    term("a", "a'", "f", Coeff::one());
    term("b", "b'", "f", lambda);
    term("d", "d'", "f", Coeff::one());
    QP::new(q, w)
}

/// The second tubular presentation, parametrized directly by lambda'.
pub fn tubular_second_presentation(lambda_prime: Coeff) -> Result<QP> {
    if lambda_prime.is_zero() || lambda_prime.is_one() {
        return Err(QpError::BadParameter("lambda' must avoid 0 and 1".into()));
    }
    let q = Quiver::from_names(
        &["t", "m1", "m2", "m3", "m4", "b"],
        &[
            ("a", "m1", "t"),
            ("b", "t", "m2"),
            ("c", "t", "m3"),
            ("d", "t", "m4"),
            ("a'", "b", "m1"),
            ("b'", "m2", "b"),
            ("c'", "m3", "b"),
            ("d'", "m4", "b"),
            ("e", "b", "t"),
        ],
    )?;
    let by = |n: &str| q.arrow_by_name(n).unwrap();
    let mut w = Potential::zero();
    for (x, xp) in [("b", "b'"), ("c", "c'"), ("d", "d'")] {
        w.add_term(
            CyclicWord::from_arrow_cycle(&q, vec![by(x), by(xp), by("e")]).unwrap(),
            Coeff::one(),
        )
        .unwrap();
    }
    w.add_term(
        CyclicWord::from_arrow_cycle(&q, vec![by("b"), by("b'"), by("a'"), by("a")]).unwrap(),
        lambda_prime,
    )
    .unwrap();
    w.add_term(
        CyclicWord::from_arrow_cycle(&q, vec![by("d"), by("d'"), by("a'"), by("a")]).unwrap(),
        Coeff::one(),
    )
    .unwrap();
    QP::new(q, w)
}

/// Dynkin types with the diagram numbering used throughout.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) => n,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
            DynkinType::E8 => 8,
        }
    }

    /// Undirected diagram edges on vertices 1..=rank.
    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            DynkinType::A(n) => (1..n).map(|i| (i, i + 1)).collect(),
            DynkinType::D(n) => {
                let mut e: Vec<(usize, usize)> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e
            }
            DynkinType::E6 => vec![(1, 2), (2, 3), (3, 5), (5, 6), (3, 4)],
            DynkinType::E7 => vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)],
            DynkinType::E8 => vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
        }
    }
}

/// Coxeter number of a Dynkin type.
pub fn coxeter_number(t: DynkinType) -> usize {
    match t {
        DynkinType::A(n) => n + 1,
        DynkinType::D(n) => 2 * (n - 1),
        DynkinType::E6 => 12,
        DynkinType::E7 => 18,
        DynkinType::E8 => 30,
    }
}

/// The canonical diagram involution, as a map on vertices 1..=rank.
pub fn canonical_involution(t: DynkinType) -> Vec<usize> {
    let n = t.rank();
    let mut omega: Vec<usize> = (0..=n).collect();
    match t {
        DynkinType::A(_) => {
            for i in 1..=n {
                omega[i] = n + 1 - i;
            }
        }
        DynkinType::D(m) if m % 2 == 1 => {
            omega[m - 1] = m;
            omega[m] = m - 1;
        }
        DynkinType::E6 => {
            omega[1] = 6;
            omega[6] = 1;
            omega[2] = 5;
            omega[5] = 2;
        }
        _ => {}
    }
    omega
}

/// A Dynkin quiver: a type together with an orientation of its diagram.
#[derive(Clone, Debug)]
pub struct DynkinQuiver {
    pub dynkin_type: DynkinType,
    pub quiver: Quiver,
}

fn quiver_from_directed_edges(n: usize, edges: &[(usize, usize)]) -> Quiver {
    let mut q = Quiver::new();
    for i in 1..=n {
        q.add_vertex(&i.to_string()).unwrap();
    }
    for (k, &(s, t)) in edges.iter().enumerate() {
        q.add_arrow_by_names(&format!("e{}", k + 1), &s.to_string(), &t.to_string())
            .unwrap();
    }
    q
}

/// Alternating orientation: vertices at even distance from vertex 1 are
/// sources.
pub fn alternating_orientation(t: DynkinType) -> DynkinQuiver {
    let n = t.rank();
    let edges = t.edges();
    // 2-color the tree
    let mut color = vec![usize::MAX; n + 1];
    color[1] = 0;
    let mut queue = vec![1usize];
    while let Some(v) = queue.pop() {
        for &(a, b) in &edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && color[y] == usize::MAX {
                    color[y] = 1 - color[v];
                    queue.push(y);
                }
            }
        }
    }
    let directed: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| if color[a] == 0 { (a, b) } else { (b, a) })
        .collect();
    DynkinQuiver {
        dynkin_type: t,
        quiver: quiver_from_directed_edges(n, &directed),
    }
}

/// Linear orientation of type A: 1 -> 2 -> ... -> n.
pub fn linear_orientation_a(n: usize) -> DynkinQuiver {
    DynkinQuiver {
        dynkin_type: DynkinType::A(n),
        quiver: quiver_from_directed_edges(n, &DynkinType::A(n).edges()),
    }
}

/// Whether the orientation is stable under the canonical involution.
pub fn is_stable(dq: &DynkinQuiver) -> bool {
    let omega = canonical_involution(dq.dynkin_type);
    let q = &dq.quiver;
    q.arrow_ids().all(|a| {
        let s: usize = q.vertex_name(q.source(a)).parse().unwrap();
        let t: usize = q.vertex_name(q.target(a)).parse().unwrap();
        let (os, ot) = (omega[s], omega[t]);
        q.arrow_ids().any(|b| {
            q.vertex_name(q.source(b)).parse::<usize>().unwrap() == os
                && q.vertex_name(q.target(b)).parse::<usize>().unwrap() == ot
        })
    })
}

fn tensor_vertex(x: &str, y: &str) -> String {
    format!("{x},{y}")
}

/// The twisted tensor product of two acyclic quivers, with the commutator
/// potential on its triangles through the diagonal arrows.
pub fn tensor_qp(q1: &Quiver, q2: &Quiver) -> QP {
    let mut q = Quiver::new();
    for x in q1.vertices() {
        for y in q2.vertices() {
            q.add_vertex(&tensor_vertex(q1.vertex_name(x), q2.vertex_name(y)))
                .unwrap();
        }
    }
    // horizontal (a, y), vertical (x, b), diagonal (a, b)
    for a in q1.arrow_ids() {
        for y in q2.vertices() {
            q.add_arrow_by_names(
                &format!("h:{},{}", q1.arrow_name(a), q2.vertex_name(y)),
                &tensor_vertex(q1.vertex_name(q1.source(a)), q2.vertex_name(y)),
                &tensor_vertex(q1.vertex_name(q1.target(a)), q2.vertex_name(y)),
            )
            .unwrap();
        }
    }
    for x in q1.vertices() {
        for b in q2.arrow_ids() {
            q.add_arrow_by_names(
                &format!("v:{},{}", q1.vertex_name(x), q2.arrow_name(b)),
                &tensor_vertex(q1.vertex_name(x), q2.vertex_name(q2.source(b))),
                &tensor_vertex(q1.vertex_name(x), q2.vertex_name(q2.target(b))),
            )
            .unwrap();
        }
    }
    for a in q1.arrow_ids() {
        for b in q2.arrow_ids() {
            q.add_arrow_by_names(
                &format!("d:{},{}", q1.arrow_name(a), q2.arrow_name(b)),
                &tensor_vertex(q1.vertex_name(q1.target(a)), q2.vertex_name(q2.target(b))),
                &tensor_vertex(q1.vertex_name(q1.source(a)), q2.vertex_name(q2.source(b))),
            )
            .unwrap();
        }
    }
    let mut w = Potential::zero();
    for a in q1.arrow_ids() {
        for b in q2.arrow_ids() {
            let (xs, xe) = (q1.vertex_name(q1.source(a)), q1.vertex_name(q1.target(a)));
            let (ys, ye) = (q2.vertex_name(q2.source(b)), q2.vertex_name(q2.target(b)));
            let va = |n: String| q.arrow_by_name(&n).unwrap();
            let plus = vec![
                va(format!("v:{},{}", xs, q2.arrow_name(b))),
                va(format!("h:{},{}", q1.arrow_name(a), ye)),
                va(format!("d:{},{}", q1.arrow_name(a), q2.arrow_name(b))),
            ];
            w.add_term(
                CyclicWord::from_arrow_cycle(&q, plus).unwrap(),
                Coeff::one(),
            )
            .unwrap();
            let minus = vec![
                va(format!("h:{},{}", q1.arrow_name(a), ys)),
                va(format!("v:{},{}", xe, q2.arrow_name(b))),
                va(format!("d:{},{}", q1.arrow_name(a), q2.arrow_name(b))),
            ];
            w.add_term(
                CyclicWord::from_arrow_cycle(&q, minus).unwrap(),
                -Coeff::one(),
            )
            .unwrap();
        }
    }
    QP::new(q, w).unwrap()
}

fn sinks_and_sources(q: &Quiver) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    let mut sources = Vec::new();
    let mut sinks = Vec::new();
    for v in q.vertices() {
        let indeg = q.arrows_into(v).len();
        let outdeg = q.arrows_from(v).len();
        if indeg == 0 && outdeg > 0 {
            sources.push(v);
        } else if outdeg == 0 && indeg > 0 {
            sinks.push(v);
        } else if indeg > 0 && outdeg > 0 {
            return Err(QpError::NotAlternating(q.vertex_name(v).to_string()));
        } else {
            // isolated vertex counts as a source
            sources.push(v);
        }
    }
    Ok((sources, sinks))
}

/// The square product of two alternating quivers with its 4-cycle potential.
pub fn square_product_qp(q1: &Quiver, q2: &Quiver) -> Result<QP> {
    let (x1, _y1) = sinks_and_sources(q1)?;
    let (x2, _y2) = sinks_and_sources(q2)?;
    let mut q = Quiver::new();
    for x in q1.vertices() {
        for y in q2.vertices() {
            q.add_vertex(&tensor_vertex(q1.vertex_name(x), q2.vertex_name(y)))
                .unwrap();
        }
    }
    // horizontal (a, y): reversed iff y is a source of q2
    for a in q1.arrow_ids() {
        for y in q2.vertices() {
            let name = format!("h:{},{}", q1.arrow_name(a), q2.vertex_name(y));
            let s = tensor_vertex(q1.vertex_name(q1.source(a)), q2.vertex_name(y));
            let t = tensor_vertex(q1.vertex_name(q1.target(a)), q2.vertex_name(y));
            if x2.contains(&y) {
                q.add_arrow_by_names(&format!("{name}*"), &t, &s).unwrap();
            } else {
                q.add_arrow_by_names(&name, &s, &t).unwrap();
            }
        }
    }
    // vertical (x, b): reversed iff x is a sink of q1
    for x in q1.vertices() {
        for b in q2.arrow_ids() {
            let name = format!("v:{},{}", q1.vertex_name(x), q2.arrow_name(b));
            let s = tensor_vertex(q1.vertex_name(x), q2.vertex_name(q2.source(b)));
            let t = tensor_vertex(q1.vertex_name(x), q2.vertex_name(q2.target(b)));
            if x1.contains(&x) {
                q.add_arrow_by_names(&name, &s, &t).unwrap();
            } else {
                q.add_arrow_by_names(&format!("{name}*"), &t, &s).unwrap();
            }
        }
    }
    let mut w = Potential::zero();
    for a in q1.arrow_ids() {
        for b in q2.arrow_ids() {
            let x = q1.vertex_name(q1.source(a));
            let y = q1.vertex_name(q1.target(a));
            let xp = q2.vertex_name(q2.source(b));
            let yp = q2.vertex_name(q2.target(b));
            let va = |n: String| q.arrow_by_name(&n).unwrap();
            let cyc = vec![
                va(format!("v:{},{}", x, q2.arrow_name(b))),
                va(format!("h:{},{}", q1.arrow_name(a), yp)),
                va(format!("v:{},{}*", y, q2.arrow_name(b))),
                va(format!("h:{},{}*", q1.arrow_name(a), xp)),
            ];
            w.add_term(
                CyclicWord::from_arrow_cycle(&q, cyc).unwrap(),
                Coeff::one(),
            )
            .unwrap();
        }
    }
    QP::new(q, w)
}

/// The triangle-lattice planar QP: vertices are nonnegative integer triples
/// summing to s-1, arrows step by the three lattice directions, and the
/// potential is read off the embedding's bounded faces.
pub fn triangle_qp(s: usize) -> Result<PlanarQP> {
    if s < 2 {
        return Err(QpError::BadParameter(format!("triangle family needs s >= 2, got {s}")));
    }
    let s_i = s as i64 - 1;
    let mut verts: Vec<(i64, i64, i64)> = Vec::new();
    for x1 in 0..=s_i {
        for x2 in 0..=s_i - x1 {
            verts.push((x1, x2, s_i - x1 - x2));
        }
    }
    verts.sort();
    let name = |v: (i64, i64, i64)| format!("{},{},{}", v.0, v.1, v.2);
    let mut q = Quiver::new();
    for &v in &verts {
        q.add_vertex(&name(v)).unwrap();
    }
    let dirs = [(-1i64, 1i64, 0i64), (0, -1, 1), (1, 0, -1)];
    for &v in &verts {
        for (i, d) in dirs.iter().enumerate() {
            let w = (v.0 + d.0, v.1 + d.1, v.2 + d.2);
            if w.0 >= 0 && w.1 >= 0 && w.2 >= 0 {
                q.add_arrow_by_names(&format!("t{}:{}", i + 1, name(v)), &name(v), &name(w))
                    .unwrap();
            }
        }
    }
    // planar coordinates: p = x2 * (2, 0) + x3 * (1, 2)
    let coords: Vec<(i64, i64)> = q
        .vertices()
        .map(|vid| {
            let parts: Vec<i64> = q
                .vertex_name(vid)
                .split(',')
                .map(|p| p.parse().unwrap())
                .collect();
            (2 * parts[1] + parts[2], 2 * parts[2])
        })
        .collect();
    PlanarQP::from_coordinates(q, &coords)
}

/// The three direction classes of a triangle QP; each is a cut.
pub fn triangle_type_cut(pqp: &PlanarQP, i: usize) -> Vec<ArrowId> {
    let q = pqp.quiver();
    q.arrow_ids()
        .filter(|&a| q.arrow_name(a).starts_with(&format!("t{i}:")))
        .collect()
}

/// Local pattern of one unit square of a square-shaped QP.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SquarePattern {
    /// directed 4-cycle around the square
    Plain,
    /// split by the antidiagonal from the top-left to the bottom-right corner
    AntiDiag,
    /// split by the main diagonal from the bottom-left to the top-right corner
    MainDiag,
}

/// One choice per unit square: a pattern and whether to reverse all arrows.
pub type FaceChoices = BTreeMap<(usize, usize), (SquarePattern, bool)>;

/// Builds a square-shaped planar QP on the s-by-s grid from per-square
/// pattern choices. Shared edges of neighbouring squares must agree.
pub fn square_shaped_qp(s: usize, choices: &FaceChoices) -> Result<PlanarQP> {
    if s < 2 {
        return Err(QpError::BadParameter(format!("square family needs s >= 2, got {s}")));
    }
    let name = |i: usize, j: usize| format!("{i},{j}");
    // collect directed edges; detect conflicts per unit square
    let mut directed: BTreeMap<(String, String), (usize, usize)> = BTreeMap::new();
    let mut add = |s_: String, t_: String, sq: (usize, usize)| -> Result<()> {
        if directed.contains_key(&(t_.clone(), s_.clone())) {
            return Err(QpError::IllegalFacePattern(sq.0, sq.1));
        }
        if let Some(_prev) = directed.get(&(s_.clone(), t_.clone())) {
            return Ok(()); // same direction confirmed by a neighbour
        }
        directed.insert((s_, t_), sq);
        Ok(())
    };
    for i in 1..s {
        for j in 1..s {
            let Some(&(pattern, flip)) = choices.get(&(i, j)) else {
                return Err(QpError::IllegalFacePattern(i, j));
            };
            let a = name(i, j);
            let b = name(i + 1, j);
            let c = name(i, j + 1);
            let d = name(i + 1, j + 1);
            let mut edges: Vec<(String, String)> = match pattern {
                SquarePattern::Plain => vec![
                    (a.clone(), c.clone()),
                    (c.clone(), d.clone()),
                    (d.clone(), b.clone()),
                    (b.clone(), a.clone()),
                ],
                SquarePattern::AntiDiag => vec![
                    (a.clone(), c.clone()),
                    (c.clone(), b.clone()),
                    (b.clone(), a.clone()),
                    (b.clone(), d.clone()),
                    (d.clone(), c.clone()),
                ],
                SquarePattern::MainDiag => vec![
                    (c.clone(), a.clone()),
                    (d.clone(), c.clone()),
                    (d.clone(), b.clone()),
                    (a.clone(), d.clone()),
                    (b.clone(), a.clone()),
                ],
            };
            if flip {
                edges = edges.into_iter().map(|(x, y)| (y, x)).collect();
            }
            for (x, y) in edges {
                add(x, y, (i, j))?;
            }
        }
    }
    let mut q = Quiver::new();
    for j in 1..=s {
        for i in 1..=s {
            q.add_vertex(&name(i, j)).unwrap();
        }
    }
    let mut k = 0usize;
    for (s_, t_) in directed.keys() {
        k += 1;
        q.add_arrow_by_names(&format!("s{k}"), s_, t_).unwrap();
    }
    let coords: Vec<(i64, i64)> = q
        .vertices()
        .map(|vid| {
            let parts: Vec<i64> = q
                .vertex_name(vid)
                .split(',')
                .map(|p| p.parse().unwrap())
                .collect();
            (parts[0], parts[1])
        })
        .collect();
    PlanarQP::from_coordinates(q, &coords)
}

/// The checkerboard of plain squares: the planar presentation of the square
/// product of two alternating type-A quivers.
pub fn square_product_planar(s: usize) -> Result<PlanarQP> {
    let mut choices = FaceChoices::new();
    for i in 1..s {
        for j in 1..s {
            choices.insert((i, j), (SquarePattern::Plain, (i + j) % 2 == 1));
        }
    }
    square_shaped_qp(s, &choices)
}

/// The 16-vertex square-shaped example displayed with mixed patterns.
pub fn square_shaped_display_example() -> Result<PlanarQP> {
    let mut choices = FaceChoices::new();
    choices.insert((1, 1), (SquarePattern::MainDiag, false));
    choices.insert((2, 1), (SquarePattern::AntiDiag, true));
    choices.insert((3, 1), (SquarePattern::Plain, true));
    choices.insert((1, 2), (SquarePattern::Plain, false));
    choices.insert((2, 2), (SquarePattern::Plain, true));
    choices.insert((3, 2), (SquarePattern::AntiDiag, false));
    choices.insert((1, 3), (SquarePattern::MainDiag, true));
    choices.insert((2, 3), (SquarePattern::AntiDiag, false));
    choices.insert((3, 3), (SquarePattern::Plain, false));
    square_shaped_qp(4, &choices)
}

/// Whether a square-shaped QP has an automorphism realizing the half-turn
/// (i, j) -> (s-i+1, s-j+1) on vertices.
pub fn is_symmetric_square_shaped(pqp: &PlanarQP, s: usize) -> bool {
    let qp = pqp.qp();
    let q = &qp.quiver;
    let image_name = |v: VertexId| -> String {
        let parts: Vec<usize> = q
            .vertex_name(v)
            .split(',')
            .map(|p| p.parse().unwrap())
            .collect();
        format!("{},{}", s - parts[0] + 1, s - parts[1] + 1)
    };
    // arrow map: unique arrows between ordered vertex pairs here
    let mut arrow_map: Vec<Option<ArrowId>> = vec![None; q.arrow_count()];
    for a in q.arrow_ids() {
        let s_img = image_name(q.source(a));
        let t_img = image_name(q.target(a));
        let img = q.arrow_ids().find(|&b| {
            q.vertex_name(q.source(b)) == s_img && q.vertex_name(q.target(b)) == t_img
        });
        match img {
            Some(b) => arrow_map[a.index()] = Some(b),
            None => return false,
        }
    }
    // potential must be preserved termwise
    for (cyc, c) in qp.potential.terms() {
        let arrows: Vec<ArrowId> = cyc
            .arrows()
            .iter()
            .map(|a| arrow_map[a.index()].unwrap())
            .collect();
        let Ok(img) = CyclicWord::from_arrow_cycle(q, arrows) else {
            return false;
        };
        if &qp.potential.coefficient(&img) != c {
            return false;
        }
    }
    true
}

/// The n-gon as a planar QP: one face bounded by the full cycle.
pub fn ngon_planar(n: usize) -> Result<PlanarQP> {
    if n < 4 {
        return Err(QpError::BadParameter(format!("n-gon family needs n >= 4, got {n}")));
    }
    let qp = cycle_qp(n)?;
    let cells: Vec<CyclicWord> = qp.potential.cycles().cloned().collect();
    PlanarQP::from_cells(qp.quiver, cells)
}

/// The even companion n-gon with unit coefficients, as a planar QP.
pub fn tilde_ngon_planar(n: usize) -> Result<PlanarQP> {
    let qp = tilde_cycle_qp(n)?;
    let cells: Vec<CyclicWord> = qp.potential.cycles().cloned().collect();
    PlanarQP::from_cells(qp.quiver, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso;
    use crate::planar::validate_planar;
    use crate::potential::coeff;

    #[test]
    fn cycle_family_shapes() {
        let qp = cycle_qp(4).unwrap();
        assert_eq!(qp.quiver.vertex_count(), 4);
        assert_eq!(qp.quiver.arrow_count(), 4);
        assert_eq!(qp.potential.num_terms(), 1);
        assert!(cycle_qp(3).is_err());
    }

    #[test]
    fn tilde_cycle_shapes() {
        let qp = tilde_cycle_qp(4).unwrap();
        assert_eq!(qp.quiver.vertex_count(), 4);
        assert_eq!(qp.quiver.arrow_count(), 6);
        assert_eq!(qp.potential.num_terms(), 3);
        assert!(tilde_cycle_qp(5).is_err());
        assert!(tilde_cycle_qp(6).is_ok());
    }

    #[test]
    fn tubular_shapes() {
        let qp = tubular_2222(coeff(2)).unwrap();
        assert_eq!(qp.quiver.vertex_count(), 6);
        assert_eq!(qp.quiver.arrow_count(), 10);
        assert_eq!(qp.potential.num_terms(), 6);
        assert!(tubular_2222(coeff(0)).is_err());
        assert!(tubular_2222(coeff(1)).is_err());
    }

    #[test]
    fn dynkin_tables() {
        assert_eq!(coxeter_number(DynkinType::A(5)), 6);
        assert_eq!(coxeter_number(DynkinType::D(4)), 6);
        assert_eq!(coxeter_number(DynkinType::E6), 12);
        assert_eq!(coxeter_number(DynkinType::E7), 18);
        assert_eq!(coxeter_number(DynkinType::E8), 30);
        let omega = canonical_involution(DynkinType::A(4));
        assert_eq!(omega[1], 4);
        assert_eq!(omega[2], 3);
    }

    #[test]
    fn alternating_a3_is_stable() {
        let dq = alternating_orientation(DynkinType::A(3));
        assert!(is_stable(&dq));
        // alternating A4 is not stable
        let dq4 = alternating_orientation(DynkinType::A(4));
        assert!(!is_stable(&dq4));
        // alternating A5 is stable
        let dq5 = alternating_orientation(DynkinType::A(5));
        assert!(is_stable(&dq5));
        // any D4 orientation is stable
        assert!(is_stable(&alternating_orientation(DynkinType::D(4))));
    }

    #[test]
    fn tensor_a2_a2_shape() {
        let a2 = alternating_orientation(DynkinType::A(2));
        let qp = tensor_qp(&a2.quiver, &a2.quiver);
        assert_eq!(qp.quiver.vertex_count(), 4);
        assert_eq!(qp.quiver.arrow_count(), 5);
        assert_eq!(qp.potential.num_terms(), 2);
    }

    #[test]
    fn square_product_a2_is_the_4gon() {
        let a2 = alternating_orientation(DynkinType::A(2));
        let qp = square_product_qp(&a2.quiver, &a2.quiver).unwrap();
        assert_eq!(qp.quiver.vertex_count(), 4);
        assert_eq!(qp.quiver.arrow_count(), 4);
        assert_eq!(qp.potential.num_terms(), 1);
        assert!(iso::is_isomorphic(&qp, &cycle_qp(4).unwrap()));
    }

    #[test]
    fn square_product_rejects_non_alternating() {
        let lin = linear_orientation_a(3);
        match square_product_qp(&lin.quiver, &lin.quiver) {
            Err(QpError::NotAlternating(_)) => {}
            other => panic!("expected NotAlternating, got {other:?}"),
        }
    }

    #[test]
    fn triangle_qp_shapes() {
        assert!(triangle_qp(1).is_err());
        let t2 = triangle_qp(2).unwrap();
        assert_eq!(t2.quiver().vertex_count(), 3);
        assert_eq!(t2.potential().num_terms(), 1);
        let t5 = triangle_qp(5).unwrap();
        assert_eq!(t5.quiver().vertex_count(), 15);
        assert_eq!(t5.quiver().arrow_count(), 30);
        assert_eq!(t5.potential().num_terms(), 16);
        let cert = validate_planar(&t5).unwrap();
        // Euler characteristic of the disk complex: V - E + cells = 1
        assert_eq!(
            t5.quiver().vertex_count() as i64 - t5.quiver().arrow_count() as i64
                + cert.bounded_faces as i64,
            1
        );
    }

    #[test]
    fn triangle_type_classes_are_cuts() {
        let t3 = triangle_qp(3).unwrap();
        let qp = t3.qp();
        for i in 1..=3 {
            let cut = triangle_type_cut(&t3, i);
            crate::algebra::check_cut(&qp, &cut).unwrap();
        }
    }

    #[test]
    fn square_product_planar_matches_abstract_square_product() {
        let a3 = alternating_orientation(DynkinType::A(3));
        let abstract_qp = square_product_qp(&a3.quiver, &a3.quiver).unwrap();
        let planar = square_product_planar(3).unwrap();
        assert!(iso::is_isomorphic(&planar.qp(), &abstract_qp)
            || iso::is_isomorphic_up_to_rescaling(&planar.qp(), &abstract_qp));
    }

    #[test]
    fn display_example_constructs() {
        let pqp = square_shaped_display_example().unwrap();
        assert_eq!(pqp.quiver().vertex_count(), 16);
        validate_planar(&pqp).unwrap();
    }

    #[test]
    fn symmetric_checkerboard() {
        let planar = square_product_planar(3).unwrap();
        assert!(is_symmetric_square_shaped(&planar, 3));
        let p4 = square_product_planar(4).unwrap();
        assert!(is_symmetric_square_shaped(&p4, 4));
    }

    #[test]
    fn tensor_diagonal_cut_gives_tensor_algebra() {
        // the diagonal arrows form an algebraic cut whose truncation has the
        // dimension vector of the tensor product of the two path algebras
        let a3 = alternating_orientation(DynkinType::A(3));
        let a2 = alternating_orientation(DynkinType::A(2));
        let qp = tensor_qp(&a3.quiver, &a2.quiver);
        let cut: Vec<ArrowId> = qp
            .quiver
            .arrow_ids()
            .filter(|&a| qp.quiver.arrow_name(a).starts_with("d:"))
            .collect();
        crate::algebra::check_cut(&qp, &cut).unwrap();
        let alg = crate::algebra::truncated_jacobian(&qp, &cut, 32)
            .unwrap()
            .finite()
            .unwrap();
        // dim K(A3 alternating) = 5, dim K(A2) = 3
        assert_eq!(alg.dim(), 15);
        // per-pair dimension vector is the product of the factors'
        let count_paths = |q: &Quiver, i: VertexId, j: VertexId| -> usize {
            // paths in an acyclic quiver by dynamic programming
            let mut memo = vec![None::<usize>; q.vertex_count()];
            fn go(q: &Quiver, at: VertexId, j: VertexId, memo: &mut Vec<Option<usize>>) -> usize {
                if let Some(v) = memo[at.index()] {
                    return v;
                }
                let mut total = usize::from(at == j);
                for a in q.arrows_from(at) {
                    total += go(q, q.target(a), j, memo);
                }
                memo[at.index()] = Some(total);
                total
            }
            go(q, i, j, &mut memo)
        };
        let dv = alg.dimension_vector();
        for v in qp.quiver.vertices() {
            for w in qp.quiver.vertices() {
                let vp: Vec<&str> = qp.quiver.vertex_name(v).split(',').collect();
                let wp: Vec<&str> = qp.quiver.vertex_name(w).split(',').collect();
                let f1 = count_paths(
                    &a3.quiver,
                    a3.quiver.vertex_by_name(vp[0]).unwrap(),
                    a3.quiver.vertex_by_name(wp[0]).unwrap(),
                );
                let f2 = count_paths(
                    &a2.quiver,
                    a2.quiver.vertex_by_name(vp[1]).unwrap(),
                    a2.quiver.vertex_by_name(wp[1]).unwrap(),
                );
                assert_eq!(dv[v.index()][w.index()], f1 * f2);
            }
        }
    }

    #[test]
    fn ngon_planar_families() {
        let g = ngon_planar(5).unwrap();
        assert_eq!(g.potential().num_terms(), 1);
        validate_planar(&g).unwrap();
        let t = tilde_ngon_planar(4).unwrap();
        assert_eq!(t.potential().num_terms(), 3);
        validate_planar(&t).unwrap();
    }
}
