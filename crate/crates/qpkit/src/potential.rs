//! Potentials, noncommutative polynomials and the cyclic derivative calculus.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{QpError, Result};
use crate::quiver::{ArrowId, Path, Quiver, VertexId};

pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(n.into())
}

/// A cyclic path stored in its canonical rotation: the lexicographically
/// minimal arrow-id sequence among all rotations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CyclicWord {
    arrows: Vec<ArrowId>,
}

impl CyclicWord {
    /// Canonicalizes a closed path of length at least one.
    pub fn new(q: &Quiver, path: &Path) -> Result<Self> {
        if path.is_empty() {
            return Err(QpError::NonCyclicTerm("trivial path".into()));
        }
        if !path.is_cyclic(q) {
            return Err(QpError::NonCyclicTerm(path.display(q)));
        }
        Ok(Self::canonical_rotation(path.arrows()))
    }

    pub fn from_arrow_cycle(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        let p = Path::from_arrows(q, arrows)?;
        CyclicWord::new(q, &p)
    }

    fn canonical_rotation(arrows: &[ArrowId]) -> Self {
        let n = arrows.len();
        let mut best: Option<Vec<ArrowId>> = None;
        for i in 0..n {
            let mut rot = Vec::with_capacity(n);
            rot.extend_from_slice(&arrows[i..]);
            rot.extend_from_slice(&arrows[..i]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
        CyclicWord {
            arrows: best.unwrap(),
        }
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All rotations as paths (with multiplicity: repeated rotations repeat).
    pub fn rotations(&self, q: &Quiver) -> Vec<Path> {
        let n = self.arrows.len();
        (0..n)
            .map(|i| {
                let mut rot = Vec::with_capacity(n);
                rot.extend_from_slice(&self.arrows[i..]);
                rot.extend_from_slice(&self.arrows[..i]);
                Path::from_arrows(q, rot).expect("rotation of a cyclic word composes")
            })
            .collect()
    }

    pub fn contains(&self, a: ArrowId) -> bool {
        self.arrows.contains(&a)
    }

    pub fn multiplicity(&self, a: ArrowId) -> usize {
        self.arrows.iter().filter(|&&x| x == a).count()
    }

    pub fn as_path(&self, q: &Quiver) -> Path {
        Path::from_arrows(q, self.arrows.clone()).expect("cyclic word is a path")
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.arrows
            .iter()
            .map(|&a| q.arrow_name(a).to_string())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A noncommutative polynomial: finite sum of paths with nonzero rational
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Path, Coeff>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(p: Path) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, Coeff::one());
        AlgebraElement { terms }
    }

    pub fn from_terms(pairs: Vec<(Path, Coeff)>) -> Self {
        let mut el = AlgebraElement::zero();
        for (p, c) in pairs {
            el.add_term(p, c);
        }
        el
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, p: &Path) -> Coeff {
        self.terms.get(p).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, p: Path, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(p, x)| (p.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &AlgebraElement, q: &Quiver) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (p, c) in self.terms() {
            for (r, d) in other.terms() {
                if let Some(pr) = p.compose(r, q) {
                    out.add_term(pr, c.clone() * d.clone());
                }
            }
        }
        out
    }

    /// Largest path length among the terms; zero for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|p| p.len()).max().unwrap_or(0)
    }

    /// The common (source, target) pair when all terms agree, else `None`.
    pub fn endpoints(&self, q: &Quiver) -> Option<(VertexId, VertexId)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let pair = (first.source(q), first.target(q));
        for p in it {
            if (p.source(q), p.target(q)) != pair {
                return None;
            }
        }
        Some(pair)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| format!("{}·{}", c, p.display(q)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A potential: rational linear combination of cyclic words of length >= 2.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Potential {
    terms: BTreeMap<CyclicWord, Coeff>,
}

impl Potential {
    pub fn zero() -> Self {
        Potential {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, w: CyclicWord, c: Coeff) -> Result<()> {
        if w.len() < 2 {
            return Err(QpError::NonCyclicTerm(
                "potential cycles must have length >= 2".into(),
            ));
        }
        if c.is_zero() {
            return Err(QpError::ZeroCoefficient(format!("{:?}", w)));
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CyclicWord, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &CyclicWord) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn cycles(&self) -> impl Iterator<Item = &CyclicWord> {
        self.terms.keys()
    }

    /// Arrows occurring in some cycle of the potential.
    pub fn support(&self) -> Vec<ArrowId> {
        let mut out: Vec<ArrowId> = self
            .terms
            .keys()
            .flat_map(|w| w.arrows().iter().copied())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn max_cycle_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| format!("{}·{}", c, w.display(q)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A quiver with potential.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QP {
    pub quiver: Quiver,
    pub potential: Potential,
}

impl QP {
    pub fn new(quiver: Quiver, potential: Potential) -> Result<Self> {
        for w in potential.cycles() {
            // Re-validate against this quiver.
            Path::from_arrows(&quiver, w.arrows().to_vec())
                .ok()
                .filter(|p| p.is_cyclic(&quiver))
                .ok_or_else(|| QpError::NonCyclicTerm(w.display(&quiver)))?;
        }
        Ok(QP { quiver, potential })
    }

    pub fn with_zero_potential(quiver: Quiver) -> Self {
        QP {
            quiver,
            potential: Potential::zero(),
        }
    }
}

/// Expands `sigma(W)`: each cycle contributes all of its rotations.
pub fn sigma_expand(q: &Quiver, w: &Potential) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (cycle, c) in w.terms() {
        for rot in cycle.rotations(q) {
            out.add_term(rot, c.clone());
        }
    }
    out
}

/// The cyclic derivative of the potential with respect to an arrow: keep the
/// rotations starting with `a` and strip that first letter.
pub fn cyclic_derivative(q: &Quiver, w: &Potential, a: ArrowId) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (cycle, c) in w.terms() {
        for rot in cycle.rotations(q) {
            let arrows = rot.arrows();
            if arrows[0] == a {
                let rest = &arrows[1..];
                let p = if rest.is_empty() {
                    Path::trivial(q.target(a))
                } else {
                    Path::from_arrows(q, rest.to_vec()).expect("rotation tail composes")
                };
                out.add_term(p, c.clone());
            }
        }
    }
    out
}

/// The double derivative: strip a leading `a` and a trailing `b` from each
/// rotation. Terms of length two yield trivial paths.
pub fn double_derivative(q: &Quiver, w: &Potential, a: ArrowId, b: ArrowId) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (cycle, c) in w.terms() {
        for rot in cycle.rotations(q) {
            let arrows = rot.arrows();
            let n = arrows.len();
            if n >= 2 && arrows[0] == a && arrows[n - 1] == b {
                let mid = &arrows[1..n - 1];
                let p = if mid.is_empty() {
                    Path::trivial(q.target(a))
                } else {
                    Path::from_arrows(q, mid.to_vec()).expect("rotation middle composes")
                };
                out.add_term(p, c.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cyclic_word_canonical_rotation_is_fixed_point() {
        let q = Quiver::from_names(
            &["1", "2", "3"],
            &[("b", "1", "2"), ("c", "2", "3"), ("a", "3", "1")],
        )
        .unwrap();
        let a = q.arrow_by_name("a").unwrap();
        let b = q.arrow_by_name("b").unwrap();
        let c = q.arrow_by_name("c").unwrap();
        let w1 = CyclicWord::from_arrow_cycle(&q, vec![a, b, c]).unwrap();
        let w2 = CyclicWord::from_arrow_cycle(&q, vec![b, c, a]).unwrap();
        let w3 = CyclicWord::from_arrow_cycle(&q, vec![c, a, b]).unwrap();
        assert_eq!(w1, w2);
        assert_eq!(w2, w3);
        // re-canonicalizing is a fixed point
        let again = CyclicWord::canonical_rotation(w1.arrows());
        assert_eq!(again, w1);
    }

    #[test]
    fn sigma_expand_abe() {
        // W = abe on the example (a) quiver: three distinct rotations.
        let qp = fixtures::example_a();
        let q = &qp.quiver;
        let mut w = Potential::zero();
        let abe = CyclicWord::from_arrow_cycle(
            q,
            vec![
                q.arrow_by_name("a").unwrap(),
                q.arrow_by_name("b").unwrap(),
                q.arrow_by_name("e").unwrap(),
            ],
        )
        .unwrap();
        w.add_term(abe, coeff(1)).unwrap();
        let s = sigma_expand(q, &w);
        assert_eq!(s.num_terms(), 3);
        for (_, c) in s.terms() {
            assert_eq!(c, &coeff(1));
        }
    }

    #[test]
    fn sigma_expand_of_zero_is_zero() {
        let q = Quiver::from_names(&["1"], &[]).unwrap();
        assert!(sigma_expand(&q, &Potential::zero()).is_zero());
    }

    #[test]
    fn sigma_expand_loop_square_has_multiplicity_two() {
        let q = Quiver::from_names(&["1"], &[("a", "1", "1")]).unwrap();
        let a = q.arrow_by_name("a").unwrap();
        let mut w = Potential::zero();
        w.add_term(CyclicWord::from_arrow_cycle(&q, vec![a, a]).unwrap(), coeff(1))
            .unwrap();
        let s = sigma_expand(&q, &w);
        assert_eq!(s.num_terms(), 1);
        let aa = Path::from_arrows(&q, vec![a, a]).unwrap();
        assert_eq!(s.coefficient(&aa), coeff(2));
    }

    #[test]
    fn cyclic_derivatives_of_example_a() {
        let qp = fixtures::example_a();
        let q = &qp.quiver;
        let by = |n: &str| q.arrow_by_name(n).unwrap();
        // ∂_b W = ea + cd
        let db = cyclic_derivative(q, &qp.potential, by("b"));
        let ea = Path::from_arrows(q, vec![by("e"), by("a")]).unwrap();
        let cd = Path::from_arrows(q, vec![by("c"), by("d")]).unwrap();
        assert_eq!(db.coefficient(&ea), coeff(1));
        assert_eq!(db.coefficient(&cd), coeff(1));
        assert_eq!(db.num_terms(), 2);
        // ∂_a W = be
        let da = cyclic_derivative(q, &qp.potential, by("a"));
        let be = Path::from_arrows(q, vec![by("b"), by("e")]).unwrap();
        assert_eq!(da.coefficient(&be), coeff(1));
        assert_eq!(da.num_terms(), 1);
    }

    #[test]
    fn derivative_of_missing_arrow_is_zero() {
        let qp = fixtures::example_a();
        let q = qp.quiver.clone();
        let mut q2 = q.clone();
        // fresh arrow that does not occur in W
        let x = q2.add_arrow("x", VertexId(0), VertexId(0)).unwrap();
        let qp2 = QP::new(q2.clone(), qp.potential.clone()).unwrap();
        assert!(cyclic_derivative(&q2, &qp2.potential, x).is_zero());
    }

    #[test]
    fn double_derivative_examples() {
        let qp = fixtures::example_a();
        let q = &qp.quiver;
        let by = |n: &str| q.arrow_by_name(n).unwrap();
        // W contains abe; ∂_{(a,e)} W = b
        let dae = double_derivative(q, &qp.potential, by("a"), by("e"));
        let b = Path::from_arrows(q, vec![by("b")]).unwrap();
        assert_eq!(dae.coefficient(&b), coeff(1));
        assert_eq!(dae.num_terms(), 1);
        // no rotation starts with a and ends with b
        let dab = double_derivative(q, &qp.potential, by("a"), by("b"));
        assert!(dab.is_zero());
    }

    #[test]
    fn double_derivative_of_two_cycle_is_trivial_path() {
        let q = Quiver::from_names(&["x", "y"], &[("a", "x", "y"), ("b", "y", "x")]).unwrap();
        let a = q.arrow_by_name("a").unwrap();
        let b = q.arrow_by_name("b").unwrap();
        let mut w = Potential::zero();
        w.add_term(CyclicWord::from_arrow_cycle(&q, vec![a, b]).unwrap(), coeff(1))
            .unwrap();
        let d = double_derivative(&q, &w, a, b);
        // the stripped rotation is the trivial path at e(a)
        let e_y = Path::trivial(q.target(a));
        assert_eq!(d.coefficient(&e_y), coeff(1));
        assert_eq!(d.num_terms(), 1);
    }

    /// The two derivative identities from the defining relations of the
    /// resolution complexes, checked as polynomial identities.
    #[test]
    fn derivative_identities() {
        for qp in fixtures::small_corpus() {
            let q = &qp.quiver;
            for b in q.arrow_ids() {
                let mut lhs = AlgebraElement::zero();
                for a in q.arrow_ids() {
                    let ae = AlgebraElement::from_path(
                        Path::from_arrows(q, vec![a]).unwrap(),
                    );
                    lhs = lhs.add(&ae.mul(&double_derivative(q, &qp.potential, a, b), q));
                }
                assert_eq!(lhs, cyclic_derivative(q, &qp.potential, b), "sum_a a·∂(a,b)W");
            }
            for a in q.arrow_ids() {
                let mut lhs = AlgebraElement::zero();
                for b in q.arrow_ids() {
                    let be = AlgebraElement::from_path(
                        Path::from_arrows(q, vec![b]).unwrap(),
                    );
                    lhs = lhs.add(&double_derivative(q, &qp.potential, a, b).mul(&be, q));
                }
                assert_eq!(lhs, cyclic_derivative(q, &qp.potential, a), "sum_b ∂(a,b)W·b");
            }
        }
    }
}
