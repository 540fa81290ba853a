//! Noncommutative reduction systems on path algebras.
//!
//! A reduction system is a set of rewriting rules `lead -> tail` oriented by
//! the degree-lexicographic path order (length first, then the arrow-id
//! sequence). Completion resolves overlap and inclusion ambiguities degree by
//! degree, so normal forms of elements up to the completed degree are unique.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_traits::One;

use crate::error::{QpError, Result};
use crate::potential::{AlgebraElement, Coeff};
use crate::quiver::{ArrowId, Path, Quiver};

type Word = Vec<ArrowId>;

#[derive(Clone, Debug)]
pub struct Rule {
    pub lead: Word,
    pub tail: AlgebraElement,
}

/// Degree-lex comparison of words: length first, then arrow ids.
fn word_lt(a: &[ArrowId], b: &[ArrowId]) -> bool {
    (a.len(), a) < (b.len(), b)
}

/// Splits a nonzero element into its leading term and coefficient.
pub fn leading_term(el: &AlgebraElement) -> Option<(Path, Coeff)> {
    let mut best: Option<(&Path, &Coeff)> = None;
    for (p, c) in el.terms() {
        if best.is_none_or(|(bp, _)| word_lt(bp.arrows(), p.arrows())) {
            best = Some((p, c));
        }
    }
    best.map(|(p, c)| (p.clone(), c.clone()))
}

#[derive(Clone, Debug)]
pub struct ReductionSystem {
    pub ambient: Quiver,
    rules: Vec<Option<Rule>>,
    /// rule indices keyed by the first arrow of the lead
    by_first: BTreeMap<ArrowId, Vec<usize>>,
    /// rule indices keyed by the last arrow of the lead
    by_last: BTreeMap<ArrowId, Vec<usize>>,
    pub complete_degree: usize,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct OverlapItem {
    degree: usize,
    word: Word,
    left: usize,
    right: usize,
    /// position of the right lead inside the overlap word
    offset: usize,
}

impl ReductionSystem {
    fn new(ambient: Quiver) -> Self {
        ReductionSystem {
            ambient,
            rules: Vec::new(),
            by_first: BTreeMap::new(),
            by_last: BTreeMap::new(),
            complete_degree: 0,
        }
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().flatten()
    }

    pub fn rule_count(&self) -> usize {
        self.rules.iter().flatten().count()
    }

    pub fn max_rule_degree(&self) -> usize {
        self.rules().map(|r| r.lead.len()).max().unwrap_or(0)
    }

    fn push_rule(&mut self, rule: Rule) -> usize {
        let idx = self.rules.len();
        self.by_first.entry(rule.lead[0]).or_default().push(idx);
        self.by_last
            .entry(*rule.lead.last().unwrap())
            .or_default()
            .push(idx);
        self.rules.push(Some(rule));
        idx
    }

    fn remove_rule(&mut self, idx: usize) -> Option<Rule> {
        self.rules[idx].take()
    }

    /// First reducible occurrence in a word: (position, rule index).
    fn find_occurrence(&self, word: &[ArrowId]) -> Option<(usize, usize)> {
        for pos in 0..word.len() {
            if let Some(cands) = self.by_first.get(&word[pos]) {
                for &ri in cands {
                    if let Some(rule) = &self.rules[ri] {
                        let l = rule.lead.len();
                        if pos + l <= word.len() && word[pos..pos + l] == rule.lead[..] {
                            return Some((pos, ri));
                        }
                    }
                }
            }
        }
        None
    }

    /// Whether some rule lead is a suffix of the word (used when the proper
    /// prefix is already known to be irreducible).
    fn suffix_reducible(&self, word: &[ArrowId]) -> bool {
        let last = *word.last().expect("nonempty");
        if let Some(cands) = self.by_last.get(&last) {
            for &ri in cands {
                if let Some(rule) = &self.rules[ri] {
                    let l = rule.lead.len();
                    if l <= word.len() && word[word.len() - l..] == rule.lead[..] {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn is_irreducible(&self, word: &[ArrowId]) -> bool {
        self.find_occurrence(word).is_none()
    }

    /// Fully reduces an element. Terminates because every rewrite strictly
    /// decreases the degree-lex multiset of terms.
    pub fn reduce(&self, el: &AlgebraElement) -> AlgebraElement {
        let q = &self.ambient;
        let mut current = el.clone();
        loop {
            let mut target: Option<(Path, usize, usize)> = None;
            for (p, _) in current.terms() {
                if let Some((pos, ri)) = self.find_occurrence(p.arrows()) {
                    target = Some((p.clone(), pos, ri));
                    break;
                }
            }
            let Some((path, pos, ri)) = target else {
                return current;
            };
            let c = current.coefficient(&path);
            let rule = self.rules[ri].as_ref().expect("live rule");
            let l = rule.lead.len();
            let arrows = path.arrows();
            let prefix = &arrows[..pos];
            let suffix = &arrows[pos + l..];
            current.add_term(path.clone(), -c.clone());
            for (t, tc) in rule.tail.terms() {
                let mut w: Word = Vec::with_capacity(prefix.len() + t.len() + suffix.len());
                w.extend_from_slice(prefix);
                w.extend_from_slice(t.arrows());
                w.extend_from_slice(suffix);
                let newp = if w.is_empty() {
                    Path::trivial(path.source(q))
                } else {
                    Path::from_arrows(q, w).expect("rewrite composes")
                };
                current.add_term(newp, c.clone() * tc.clone());
            }
        }
    }

    /// Unique normal form for elements within the completed degree.
    pub fn normal_form(&self, el: &AlgebraElement) -> Result<AlgebraElement> {
        if el.degree() > self.complete_degree {
            return Err(QpError::DegreeExceeded {
                degree: el.degree(),
                bound: self.complete_degree,
            });
        }
        Ok(self.reduce(el))
    }

    /// Irreducible words of each length `0..=max_len`, grouped by length.
    /// Level 0 lists the trivial paths.
    pub fn irreducible_words_by_length(&self, max_len: usize) -> Vec<Vec<Path>> {
        let q = &self.ambient;
        let mut levels: Vec<Vec<Path>> = Vec::with_capacity(max_len + 1);
        levels.push(q.vertices().map(Path::trivial).collect());
        for len in 1..=max_len {
            let mut level = Vec::new();
            for p in &levels[len - 1] {
                let end = p.target(q);
                for a in q.arrows_from(end) {
                    let mut w = p.arrows().to_vec();
                    w.push(a);
                    if !self.suffix_reducible(&w) {
                        level.push(Path::from_arrows(q, w).expect("extension composes"));
                    }
                }
            }
            levels.push(level);
        }
        levels
    }
}

/// Incremental completion state; `run_to` may be called with growing bounds.
pub struct Completion {
    pub system: ReductionSystem,
    queue: BinaryHeap<Reverse<OverlapItem>>,
    /// elements not yet oriented into rules
    pending: Vec<AlgebraElement>,
}

impl Completion {
    pub fn new(gens: &[AlgebraElement], ambient: &Quiver) -> Self {
        let mut gens: Vec<AlgebraElement> =
            gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        // deterministic processing order: largest leading term first
        gens.sort_by(|a, b| {
            let la = leading_term(a).unwrap().0;
            let lb = leading_term(b).unwrap().0;
            (lb.len(), lb.arrows().to_vec()).cmp(&(la.len(), la.arrows().to_vec()))
        });
        Completion {
            system: ReductionSystem::new(ambient.clone()),
            queue: BinaryHeap::new(),
            pending: gens,
        }
    }

    fn enqueue_overlaps(&mut self, idx: usize) {
        let Some(rule) = &self.system.rules[idx] else {
            return;
        };
        let p = rule.lead.clone();
        let live: Vec<(usize, Word)> = self
            .system
            .rules
            .iter()
            .enumerate()
            .filter_map(|(j, r)| r.as_ref().map(|r| (j, r.lead.clone())))
            .collect();
        for (j, q) in live {
            self.enqueue_pair(idx, j, &p, &q);
            if j != idx {
                self.enqueue_pair(j, idx, &q, &p);
            }
        }
    }

    /// Ambiguities with the left lead `p` starting at position 0.
    fn enqueue_pair(&mut self, li: usize, ri: usize, p: &[ArrowId], q: &[ArrowId]) {
        // proper overlaps: suffix of p of length k = prefix of q, 1 <= k < min
        for k in 1..p.len().min(q.len()) {
            if p[p.len() - k..] == q[..k] {
                let mut word = p.to_vec();
                word.extend_from_slice(&q[k..]);
                self.queue.push(Reverse(OverlapItem {
                    degree: word.len(),
                    word,
                    left: li,
                    right: ri,
                    offset: p.len() - k,
                }));
            }
        }
        // inclusions: q strictly shorter and contained in p
        if q.len() < p.len() {
            for off in 0..=p.len() - q.len() {
                if p[off..off + q.len()] == q[..] {
                    self.queue.push(Reverse(OverlapItem {
                        degree: p.len(),
                        word: p.to_vec(),
                        left: li,
                        right: ri,
                        offset: off,
                    }));
                }
            }
        }
    }

    fn orient_and_add(&mut self, el: AlgebraElement) {
        let reduced = self.system.reduce(&el);
        if reduced.is_zero() {
            return;
        }
        let (lead, c) = leading_term(&reduced).expect("nonzero element");
        assert!(
            !lead.is_empty(),
            "ideal contains a trivial path; generators must lie in the arrow ideal"
        );
        let mut tail = reduced.clone();
        tail.add_term(lead.clone(), -c.clone());
        let tail = tail.scale(&(-Coeff::one() / c));
        let new_rule = Rule {
            lead: lead.arrows().to_vec(),
            tail,
        };
        // retire rules whose lead contains the new lead as a subword
        let mut retired = Vec::new();
        for (j, slot) in self.system.rules.iter().enumerate() {
            if let Some(r) = slot {
                let l = new_rule.lead.len();
                if r.lead.len() > l
                    && (0..=r.lead.len() - l).any(|off| r.lead[off..off + l] == new_rule.lead[..])
                {
                    retired.push(j);
                }
            }
        }
        let idx = self.system.push_rule(new_rule);
        self.enqueue_overlaps(idx);
        for j in retired {
            if let Some(old) = self.system.remove_rule(j) {
                let mut el = AlgebraElement::from_path(
                    Path::from_arrows(&self.system.ambient, old.lead.clone()).expect("rule lead"),
                );
                el = el.sub(&old.tail);
                self.pending.push(el);
            }
        }
    }

    /// Processes all pending elements and ambiguities of degree `<= bound`.
    /// Elements above the bound stay pending for a later call.
    pub fn run_to(&mut self, bound: usize) {
        loop {
            if let Some(pos) = self.pending.iter().position(|e| e.degree() <= bound) {
                let el = self.pending.remove(pos);
                self.orient_and_add(el);
                continue;
            }
            let Some(Reverse(top)) = self.queue.peek().cloned() else {
                break;
            };
            if top.degree > bound {
                break;
            }
            self.queue.pop();
            let (Some(lr), Some(rr)) = (
                self.system.rules[top.left].clone(),
                self.system.rules[top.right].clone(),
            ) else {
                continue;
            };
            let w = &top.word;
            debug_assert!(w[..lr.lead.len()] == lr.lead[..]);
            debug_assert!(w[top.offset..top.offset + rr.lead.len()] == rr.lead[..]);
            let q = self.system.ambient.clone();
            let base = Path::from_arrows(&q, w.clone()).expect("overlap word composes");
            // rewrite via the left rule at position 0
            let mut left_el = AlgebraElement::zero();
            let suffix_l = &w[lr.lead.len()..];
            for (t, c) in lr.tail.terms() {
                let mut word = t.arrows().to_vec();
                word.extend_from_slice(suffix_l);
                let p = if word.is_empty() {
                    Path::trivial(base.source(&q))
                } else {
                    Path::from_arrows(&q, word).expect("left rewrite composes")
                };
                left_el.add_term(p, c.clone());
            }
            // rewrite via the right rule at its offset
            let mut right_el = AlgebraElement::zero();
            let prefix_r = &w[..top.offset];
            let suffix_r = &w[top.offset + rr.lead.len()..];
            for (t, c) in rr.tail.terms() {
                let mut word = prefix_r.to_vec();
                word.extend_from_slice(t.arrows());
                word.extend_from_slice(suffix_r);
                let p = if word.is_empty() {
                    Path::trivial(base.source(&q))
                } else {
                    Path::from_arrows(&q, word).expect("right rewrite composes")
                };
                right_el.add_term(p, c.clone());
            }
            let s = left_el.sub(&right_el);
            self.orient_and_add(s);
        }
        if self.is_quiescent(bound) {
            self.system.complete_degree = self.system.complete_degree.max(bound);
        }
    }

    /// True when no pending work of degree `<= bound` remains.
    pub fn is_quiescent(&self, bound: usize) -> bool {
        self.pending.iter().all(|e| e.degree() > bound)
            && self
                .queue
                .peek()
                .is_none_or(|Reverse(t)| t.degree > bound)
    }
}

/// Completes a reduction system up to the degree bound. Deterministic for a
/// fixed generator order.
pub fn complete_reduction_system(
    gens: &[AlgebraElement],
    ambient: &Quiver,
    degree_bound: usize,
) -> ReductionSystem {
    let mut comp = Completion::new(gens, ambient);
    comp.run_to(degree_bound);
    comp.system
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::coeff;

    fn element(q: &Quiver, arrows: &[&str], c: i64) -> AlgebraElement {
        let ids = arrows.iter().map(|n| q.arrow_by_name(n).unwrap()).collect();
        AlgebraElement::from_path(Path::from_arrows(q, ids).unwrap()).scale(&coeff(c))
    }

    #[test]
    fn monomial_ideal_single_rule() {
        let q = Quiver::from_names(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let ab = element(&q, &["a", "b"], 1);
        let sys = complete_reduction_system(std::slice::from_ref(&ab), &q, 6);
        assert_eq!(sys.rule_count(), 1);
        assert!(sys.normal_form(&ab).unwrap().is_zero());
        let a = element(&q, &["a"], 1);
        assert_eq!(sys.normal_form(&a).unwrap(), a);
    }

    #[test]
    fn binomial_rule_reduces_to_parallel_path() {
        let q = Quiver::from_names(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "1", "2"), ("d", "2", "3")],
        )
        .unwrap();
        let rel = element(&q, &["c", "d"], 1).sub(&element(&q, &["a", "b"], 1));
        let sys = complete_reduction_system(&[rel], &q, 6);
        assert_eq!(sys.rule_count(), 1);
        // cd is the larger word, so cd -> ab
        let cd = element(&q, &["c", "d"], 1);
        let ab = element(&q, &["a", "b"], 1);
        assert_eq!(sys.normal_form(&cd).unwrap(), ab);
        assert_eq!(sys.normal_form(&ab).unwrap(), ab);
    }

    #[test]
    fn cycle_relations_of_q4() {
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
        let gens = vec![
            element(&q, &["a2", "a3", "a4"], 1),
            element(&q, &["a3", "a4", "a1"], 1),
            element(&q, &["a4", "a1", "a2"], 1),
            element(&q, &["a1", "a2", "a3"], 1),
        ];
        let sys = complete_reduction_system(&gens, &q, 12);
        assert_eq!(sys.rule_count(), 4);
        let nf = sys.normal_form(&element(&q, &["a1", "a2", "a3"], 1)).unwrap();
        assert!(nf.is_zero());
        let a12 = element(&q, &["a1", "a2"], 1);
        assert_eq!(sys.normal_form(&a12).unwrap(), a12);
        let levels = sys.irreducible_words_by_length(4);
        assert_eq!(levels[0].len(), 4);
        assert_eq!(levels[1].len(), 4);
        assert_eq!(levels[2].len(), 4);
        assert_eq!(levels[3].len(), 0);
        assert_eq!(levels[4].len(), 0);
    }

    #[test]
    fn commutativity_overlap_completes() {
        // two parallel routes with a shared middle: xy - uv and yz - vw force
        // an overlap-derived relation on the longer words
        let q = Quiver::from_names(
            &["1", "2", "3"],
            &[
                ("x", "1", "2"),
                ("u", "1", "2"),
                ("y", "2", "3"),
                ("v", "2", "3"),
                ("z", "3", "1"),
                ("w", "3", "1"),
            ],
        )
        .unwrap();
        let g1 = element(&q, &["x", "y"], 1).sub(&element(&q, &["u", "v"], 1));
        let g2 = element(&q, &["y", "z"], 1).sub(&element(&q, &["v", "w"], 1));
        let sys = complete_reduction_system(&[g1, g2], &q, 8);
        // confluence: reduce x*y*z both ways to the same normal form
        let xyz = element(&q, &["x", "y", "z"], 1);
        let nf = sys.normal_form(&xyz).unwrap();
        assert_eq!(sys.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn normal_form_is_idempotent() {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let rel = element(&q, &["a", "b"], 1);
        let sys = complete_reduction_system(&[rel], &q, 8);
        let x = element(&q, &["b", "a", "b"], 2);
        let nf = sys.normal_form(&x).unwrap();
        assert_eq!(sys.normal_form(&nf).unwrap(), nf);
        assert!(nf.is_zero());
    }

    #[test]
    fn degree_exceeded_reported() {
        let q = Quiver::from_names(&["1"], &[("a", "1", "1")]).unwrap();
        let rel = element(&q, &["a", "a"], 1);
        let sys = complete_reduction_system(&[rel], &q, 3);
        let big = element(&q, &["a", "a", "a", "a"], 1);
        match sys.normal_form(&big) {
            Err(QpError::DegreeExceeded { .. }) => {}
            other => panic!("expected DegreeExceeded, got {other:?}"),
        }
    }
}
