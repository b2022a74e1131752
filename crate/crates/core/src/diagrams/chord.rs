//! Chord diagrams up to rotation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::ChordError;

/// `n` chords on an oriented circle, stored as the fixed-point-free
/// involution on `0..2n` that is lexicographically least among all
/// rotations. Reflections are not identified.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    pairing: Vec<usize>,
}

/// Least rotation of an involution word.
pub fn canonical_form(involution: &[usize]) -> Vec<usize> {
    let len = involution.len();
    let mut best: Option<Vec<usize>> = None;
    let mut rotated = vec![0; len];
    for k in 0..len {
        for (i, slot) in rotated.iter_mut().enumerate() {
            *slot = (involution[(i + k) % len] + len - k) % len;
        }
        if best.as_ref().is_none_or(|b| rotated < *b) {
            best = Some(rotated.clone());
        }
    }
    best.unwrap_or_default()
}

fn validate(involution: &[usize]) -> Result<(), ChordError> {
    let len = involution.len();
    if len % 2 == 1 {
        return Err(ChordError::Malformed(format!("odd length {len}")));
    }
    for (i, &j) in involution.iter().enumerate() {
        if j >= len {
            return Err(ChordError::Malformed(format!("entry {j} out of range")));
        }
        if j == i {
            return Err(ChordError::Malformed(format!("fixed point {i}")));
        }
        if involution[j] != i {
            return Err(ChordError::Malformed(format!("{i} -> {j} is not matched by {j} -> {i}")));
        }
    }
    Ok(())
}

impl ChordDiagram {
    pub fn empty() -> Self {
        ChordDiagram { pairing: Vec::new() }
    }

    pub fn from_involution(involution: Vec<usize>) -> Result<Self, ChordError> {
        validate(&involution)?;
        Ok(ChordDiagram { pairing: canonical_form(&involution) })
    }

    pub fn from_chords(chords: &[(usize, usize)]) -> Result<Self, ChordError> {
        let len = chords.len() * 2;
        let mut p = vec![usize::MAX; len];
        for &(a, b) in chords {
            if a >= len || b >= len || p[a] != usize::MAX || p[b] != usize::MAX || a == b {
                return Err(ChordError::Malformed(format!("bad chord ({a}, {b})")));
            }
            p[a] = b;
            p[b] = a;
        }
        ChordDiagram::from_involution(p)
    }

    /// Chord diagram of a cyclic word in which every label occurs twice.
    pub fn from_labels<T: Ord + Copy>(labels: &[T]) -> Result<Self, ChordError> {
        let mut first: BTreeMap<T, usize> = BTreeMap::new();
        let mut p = vec![usize::MAX; labels.len()];
        for (i, l) in labels.iter().enumerate() {
            match first.remove(l) {
                Some(j) => {
                    p[i] = j;
                    p[j] = i;
                }
                None => {
                    first.insert(*l, i);
                }
            }
        }
        if !first.is_empty() {
            return Err(ChordError::Malformed("unpaired label".into()));
        }
        ChordDiagram::from_involution(p)
    }

    /// Already canonical by construction, so this is the identity.
    pub fn canonicalize(&self) -> ChordDiagram {
        self.clone()
    }

    pub fn order(&self) -> usize {
        self.pairing.len() / 2
    }

    pub fn involution(&self) -> &[usize] {
        &self.pairing
    }

    /// Chords as `(a, b)` with `a < b`, sorted.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        self.pairing
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (i, j))
            .collect()
    }

    /// A chord is isolated when its endpoints are neighbours on the circle.
    pub fn has_isolated_chord(&self) -> bool {
        let len = self.pairing.len();
        (0..len).any(|i| self.pairing[i] == (i + 1) % len)
    }

    /// All canonical diagrams of order `n`, sorted.
    pub fn enumerate(n: usize) -> Vec<ChordDiagram> {
        let mut out = BTreeSet::new();
        let mut p = vec![usize::MAX; 2 * n];
        fn rec(p: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
            let Some(a) = p.iter().position(|&x| x == usize::MAX) else {
                out.insert(canonical_form(p));
                return;
            };
            for b in a + 1..p.len() {
                if p[b] == usize::MAX {
                    p[a] = b;
                    p[b] = a;
                    rec(p, out);
                    p[a] = usize::MAX;
                    p[b] = usize::MAX;
                }
            }
        }
        rec(&mut p, &mut out);
        out.into_iter().map(|pairing| ChordDiagram { pairing }).collect()
    }

    /// The order-2 diagram whose chords intersect.
    pub fn crossed2() -> ChordDiagram {
        ChordDiagram { pairing: vec![2, 3, 0, 1] }
    }

    /// The order-2 diagram whose chords do not intersect.
    pub fn parallel2() -> ChordDiagram {
        ChordDiagram { pairing: vec![1, 0, 3, 2] }
    }
}

pub fn enumerate_chord_diagrams(n: usize) -> Vec<ChordDiagram> {
    ChordDiagram::enumerate(n)
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pairing.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for ChordDiagram {
    type Err = ChordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let p = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| ChordError::Malformed(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        ChordDiagram::from_involution(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotate(p: &[usize], k: usize) -> Vec<usize> {
        let len = p.len();
        (0..len).map(|i| (p[(i + k) % len] + len - k) % len).collect()
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=5).map(|n| ChordDiagram::enumerate(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 18, 105]);
    }

    #[test]
    fn order_two_diagrams_are_distinct() {
        let d2 = ChordDiagram::enumerate(2);
        assert!(d2.contains(&ChordDiagram::crossed2()));
        assert!(d2.contains(&ChordDiagram::parallel2()));
        assert_ne!(ChordDiagram::crossed2(), ChordDiagram::parallel2());
        for k in 0..4 {
            let r = ChordDiagram::from_involution(rotate(&[2, 3, 0, 1], k)).unwrap();
            assert_eq!(r, ChordDiagram::crossed2());
        }
    }

    #[test]
    fn reflections_are_not_identified() {
        // 17 classes up to rotation and reflection, 18 up to rotation alone.
        let reflect = |d: &ChordDiagram| {
            let len = d.involution().len();
            let p: Vec<usize> = (0..len).map(|i| len - 1 - d.involution()[len - 1 - i]).collect();
            ChordDiagram::from_involution(p).unwrap()
        };
        let d4 = ChordDiagram::enumerate(4);
        let classes: BTreeSet<ChordDiagram> = d4.iter().map(|d| d.clone().min(reflect(d))).collect();
        assert_eq!(classes.len(), 17);
        assert!(d4.iter().any(|d| reflect(d) != *d));
    }

    #[test]
    fn isolated_chords() {
        assert!(ChordDiagram::enumerate(1)[0].has_isolated_chord());
        assert!(ChordDiagram::parallel2().has_isolated_chord());
        assert!(!ChordDiagram::crossed2().has_isolated_chord());
        let d3: Vec<_> = ChordDiagram::enumerate(3).into_iter().filter(|d| d.has_isolated_chord()).collect();
        assert_eq!(d3.len(), 3);
    }

    #[test]
    fn malformed() {
        assert!(ChordDiagram::from_involution(vec![0, 1]).is_err());
        assert!(ChordDiagram::from_involution(vec![1, 2, 0]).is_err());
        assert!(ChordDiagram::from_involution(vec![1, 0, 3]).is_err());
        assert!("2 3 0 x".parse::<ChordDiagram>().is_err());
        assert_eq!("3 2 1 0".parse::<ChordDiagram>().unwrap(), ChordDiagram::parallel2());
    }

    #[test]
    fn labels() {
        let d = ChordDiagram::from_labels(&['a', 'b', 'a', 'b']).unwrap();
        assert_eq!(d, ChordDiagram::crossed2());
        assert!(ChordDiagram::from_labels(&['a', 'b']).is_err());
    }
}
