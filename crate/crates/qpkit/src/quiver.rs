//! Quivers, paths and walks.
//!
//! A quiver is a finite directed graph allowing loops and parallel arrows.
//! Vertices and arrows carry user-facing string names; all computations use
//! dense integer indices. The composition `ab` of arrows means first `a`,
//! then `b`, so a path stores its arrows in traversal order.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{QpError, Result};

/// Index of a vertex inside its quiver.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

/// Index of an arrow inside its quiver.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArrowId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl ArrowId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver with named vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_names: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_lookup: BTreeMap<String, VertexId>,
    arrow_lookup: BTreeMap<String, ArrowId>,
    out_adjacency: Vec<Vec<ArrowId>>,
    in_adjacency: Vec<Vec<ArrowId>>,
}

impl Quiver {
    pub fn new() -> Self {
        Quiver {
            vertex_names: Vec::new(),
            arrows: Vec::new(),
            vertex_lookup: BTreeMap::new(),
            arrow_lookup: BTreeMap::new(),
            out_adjacency: Vec::new(),
            in_adjacency: Vec::new(),
        }
    }

    /// Builds a quiver from vertex names and (arrow name, source, target) triples.
    pub fn from_names(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let mut q = Quiver::new();
        for v in vertices {
            q.add_vertex(v)?;
        }
        for (name, s, t) in arrows {
            q.add_arrow_by_names(name, s, t)?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.vertex_lookup.contains_key(name) {
            return Err(QpError::Parse(format!("duplicate vertex id {name}")));
        }
        let id = VertexId(self.vertex_names.len() as u32);
        self.vertex_names.push(name.to_string());
        self.vertex_lookup.insert(name.to_string(), id);
        self.out_adjacency.push(Vec::new());
        self.in_adjacency.push(Vec::new());
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: &str, source: VertexId, target: VertexId) -> Result<ArrowId> {
        if self.arrow_lookup.contains_key(name) {
            return Err(QpError::Parse(format!("duplicate arrow id {name}")));
        }
        if source.index() >= self.vertex_names.len() || target.index() >= self.vertex_names.len() {
            return Err(QpError::DanglingArrow(name.to_string()));
        }
        let id = ArrowId(self.arrows.len() as u32);
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        self.arrow_lookup.insert(name.to_string(), id);
        self.out_adjacency[source.index()].push(id);
        self.in_adjacency[target.index()].push(id);
        Ok(id)
    }

    pub fn add_arrow_by_names(&mut self, name: &str, source: &str, target: &str) -> Result<ArrowId> {
        let s = *self
            .vertex_lookup
            .get(source)
            .ok_or_else(|| QpError::DanglingArrow(name.to_string()))?;
        let t = *self
            .vertex_lookup
            .get(target)
            .ok_or_else(|| QpError::DanglingArrow(name.to_string()))?;
        self.add_arrow(name, s, t)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len() as u32).map(ArrowId)
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.index()]
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.index()].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.index()].target
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.index()]
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.index()].name
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrow_lookup.get(name).copied()
    }

    pub fn arrows_from(&self, v: VertexId) -> Vec<ArrowId> {
        self.out_adjacency[v.index()].clone()
    }

    pub fn arrows_into(&self, v: VertexId) -> Vec<ArrowId> {
        self.in_adjacency[v.index()].clone()
    }

    pub fn arrows_from_ref(&self, v: VertexId) -> &[ArrowId] {
        &self.out_adjacency[v.index()]
    }

    pub fn arrows_into_ref(&self, v: VertexId) -> &[ArrowId] {
        &self.in_adjacency[v.index()]
    }

    /// The subquiver on the same vertices with the given arrows removed.
    pub fn delete_arrows(&self, remove: &[ArrowId]) -> (Quiver, BTreeMap<ArrowId, ArrowId>) {
        let mut q = Quiver::new();
        for name in &self.vertex_names {
            q.add_vertex(name).expect("fresh quiver");
        }
        let mut old_to_new = BTreeMap::new();
        for a in self.arrow_ids() {
            if remove.contains(&a) {
                continue;
            }
            let arr = self.arrow(a);
            let id = q
                .add_arrow(&arr.name, arr.source, arr.target)
                .expect("fresh quiver");
            old_to_new.insert(a, id);
        }
        (q, old_to_new)
    }

    /// Whether the underlying undirected graph is connected (vacuously true when empty).
    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![VertexId(0)];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in self.arrow_ids() {
                let (s, t) = (self.source(a), self.target(a));
                if s == v && !seen[t.index()] {
                    seen[t.index()] = true;
                    stack.push(t);
                }
                if t == v && !seen[s.index()] {
                    seen[s.index()] = true;
                    stack.push(s);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Vertex sets of the connected components of the underlying graph.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut n = 0;
        for start in self.vertices() {
            if comp[start.index()] != usize::MAX {
                continue;
            }
            comp[start.index()] = n;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for a in self.arrow_ids() {
                    let (s, t) = (self.source(a), self.target(a));
                    for (x, y) in [(s, t), (t, s)] {
                        if x == v && comp[y.index()] == usize::MAX {
                            comp[y.index()] = n;
                            stack.push(y);
                        }
                    }
                }
            }
            n += 1;
        }
        let mut out = vec![Vec::new(); n];
        for v in self.vertices() {
            out[comp[v.index()]].push(v);
        }
        out
    }

    /// Whether the quiver has no directed cycles.
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for a in self.arrow_ids() {
            indeg[self.target(a).index()] += 1;
        }
        let mut queue: Vec<VertexId> = self
            .vertices()
            .filter(|v| indeg[v.index()] == 0)
            .collect();
        let mut removed = 0;
        while let Some(v) = queue.pop() {
            removed += 1;
            for a in self.arrows_from(v) {
                let t = self.target(a);
                indeg[t.index()] -= 1;
                if indeg[t.index()] == 0 {
                    queue.push(t);
                }
            }
        }
        removed == n
    }
}

impl Default for Quiver {
    fn default() -> Self {
        Self::new()
    }
}

/// A composable sequence of arrows; trivial paths carry a base vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Path {
    base: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            base: v,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        if arrows.is_empty() {
            return Err(QpError::Parse("empty path needs a base vertex".into()));
        }
        for w in arrows.windows(2) {
            if q.target(w[0]) != q.source(w[1]) {
                return Err(QpError::Parse(format!(
                    "arrows {} and {} do not compose",
                    q.arrow_name(w[0]),
                    q.arrow_name(w[1])
                )));
            }
        }
        Ok(Path {
            base: q.source(arrows[0]),
            arrows,
        })
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self, q: &Quiver) -> VertexId {
        if self.arrows.is_empty() {
            self.base
        } else {
            q.source(self.arrows[0])
        }
    }

    pub fn target(&self, q: &Quiver) -> VertexId {
        if self.arrows.is_empty() {
            self.base
        } else {
            q.target(*self.arrows.last().unwrap())
        }
    }

    pub fn is_cyclic(&self, q: &Quiver) -> bool {
        self.source(q) == self.target(q)
    }

    /// Concatenation `self` then `other`; `None` when endpoints do not match.
    pub fn compose(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.target(q) != other.source(q) {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            base: self.source(q),
            arrows,
        })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertex_name(self.base))
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow_name(a).to_string())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// One step of a walk: an arrow traversed forwards or backwards.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WalkStep {
    pub arrow: ArrowId,
    pub forward: bool,
}

impl WalkStep {
    pub fn start(&self, q: &Quiver) -> VertexId {
        if self.forward {
            q.source(self.arrow)
        } else {
            q.target(self.arrow)
        }
    }

    pub fn end(&self, q: &Quiver) -> VertexId {
        if self.forward {
            q.target(self.arrow)
        } else {
            q.source(self.arrow)
        }
    }
}

/// A path in the double quiver.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Walk(pub Vec<WalkStep>);

impl Walk {
    pub fn is_valid(&self, q: &Quiver) -> bool {
        self.0.windows(2).all(|w| w[0].end(q) == w[1].start(q))
    }

    pub fn is_cyclic(&self, q: &Quiver) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(f), Some(l)) => f.start(q) == l.end(q),
            _ => true,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_composition_checks_endpoints() {
        let q = Quiver::from_names(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let a = q.arrow_by_name("a").unwrap();
        let b = q.arrow_by_name("b").unwrap();
        let p = Path::from_arrows(&q, vec![a, b]).unwrap();
        assert_eq!(p.source(&q), q.vertex_by_name("1").unwrap());
        assert_eq!(p.target(&q), q.vertex_by_name("3").unwrap());
        assert!(Path::from_arrows(&q, vec![b, a]).is_err());
    }

    #[test]
    fn trivial_paths_have_base_vertices() {
        let q = Quiver::from_names(&["1"], &[]).unwrap();
        let e = Path::trivial(VertexId(0));
        assert!(e.is_cyclic(&q));
        assert_eq!(e.len(), 0);
    }

    #[test]
    fn acyclicity() {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        assert!(!q.is_acyclic());
        let (q2, _) = q.delete_arrows(&[q.arrow_by_name("b").unwrap()]);
        assert!(q2.is_acyclic());
    }
}
