//! One-term and four-term relations on chord diagrams.

use std::collections::BTreeSet;

use crate::diagrams::chord::ChordDiagram;

/// `D1 - D2 + D3 - D4 = 0`. For two chords `a` (endpoints `x`, `y`) and `b`,
/// the four diagrams place the moving end of `b` just before `x`, just after
/// `x`, just before `y` and just after `y`; the other `n - 2` chords and the
/// fixed end of `b` stay put.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FourTermRelation {
    pub diagrams: [ChordDiagram; 4],
}

impl FourTermRelation {
    pub const COEFFICIENTS: [i64; 4] = [1, -1, 1, -1];

    pub fn order(&self) -> usize {
        self.diagrams[0].order()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ChordDiagram, i64)> {
        self.diagrams.iter().zip(Self::COEFFICIENTS)
    }

    /// True when the terms cancel identically as a formal sum.
    pub fn is_trivial(&self) -> bool {
        let mut sum: std::collections::BTreeMap<&ChordDiagram, i64> = Default::default();
        for (d, c) in self.terms() {
            *sum.entry(d).or_default() += c;
        }
        sum.values().all(|&c| c == 0)
    }
}

/// Order-`n` diagrams with at least one isolated chord.
pub fn one_term_diagrams(n: usize) -> Vec<ChordDiagram> {
    ChordDiagram::enumerate(n).into_iter().filter(ChordDiagram::has_isolated_chord).collect()
}

/// Cyclic label word of a diagram, chords numbered by first endpoint.
fn label_word(d: &ChordDiagram) -> Vec<usize> {
    let p = d.involution();
    let mut word = vec![usize::MAX; p.len()];
    let mut next = 0;
    for i in 0..p.len() {
        if word[i] == usize::MAX {
            word[i] = next;
            word[p[i]] = next;
            next += 1;
        }
    }
    word
}

/// All distinct 4T relations of order `n`. Every configuration is a rotation
/// of one whose underlying diagram is canonical, so it suffices to mark an
/// end of each chord `b` and each other chord `a` in every canonical diagram.
pub fn four_term_relations(n: usize) -> Vec<FourTermRelation> {
    if n < 2 {
        return Vec::new();
    }
    let mut out = BTreeSet::new();
    for d in ChordDiagram::enumerate(n) {
        let word = label_word(&d);
        for q in 0..word.len() {
            let b = word[q];
            let mut rest = word.clone();
            rest.remove(q);
            for a in (0..n).filter(|&a| a != b) {
                let mut ends = rest.iter().enumerate().filter(|(_, &l)| l == a).map(|(i, _)| i);
                let (x, y) = (ends.next().unwrap(), ends.next().unwrap());
                let place = |at: usize| {
                    let mut w = rest.clone();
                    w.insert(at, b);
                    ChordDiagram::from_labels(&w).expect("relation diagrams are well formed")
                };
                out.insert(FourTermRelation { diagrams: [place(x), place(x + 1), place(y), place(y + 1)] });
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_term_small_orders() {
        assert_eq!(one_term_diagrams(1).len(), 1);
        assert_eq!(one_term_diagrams(2), vec![ChordDiagram::parallel2()]);
        assert_eq!(one_term_diagrams(3).len(), 3);
    }

    #[test]
    fn relations_are_homogeneous() {
        for n in 2..=4 {
            for r in four_term_relations(n) {
                assert!(r.diagrams.iter().all(|d| d.order() == n));
            }
        }
        assert!(four_term_relations(1).is_empty());
    }

    #[test]
    fn order_two_relations_cancel_formally() {
        let rels = four_term_relations(2);
        assert!(!rels.is_empty());
        assert!(rels.iter().all(|r| r.is_trivial()));
    }
}
