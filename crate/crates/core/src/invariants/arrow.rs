//! Arrow patterns and the pairing `<A, G>`: the signed count of
//! subdiagrams of `G` isomorphic to `A`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::diagrams::chord::ChordDiagram;
use crate::diagrams::gauss::{Arrow, GaussDiagram};
use crate::rational::{int, Rational};

/// Which end of an arrow an endpoint is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Tail,
    Head,
}

/// A small arrow diagram. Based patterns are compared as linear words read
/// from the basepoint; unbased ones up to rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrowPattern {
    word: Vec<(u8, End)>,
    based: bool,
}

/// Packed endpoint word: 4 bits per endpoint (`2 * label + head`), labels
/// numbered by first occurrence, length in the top byte.
type Key = u64;

const MAX_ARROWS: usize = 7;

fn pack(word: impl Iterator<Item = (usize, End)>) -> Key {
    let mut labels = [u8::MAX; 64];
    let mut next = 0u8;
    let mut key: Key = 0;
    let mut len = 0u64;
    for (id, end) in word {
        let slot = &mut labels[id];
        if *slot == u8::MAX {
            *slot = next;
            next += 1;
        }
        key = (key << 4) | (2 * *slot as u64 + (end == End::Head) as u64);
        len += 1;
    }
    key | (len << 56)
}

fn pack_cyclic(word: &[(usize, End)]) -> Key {
    (0..word.len().max(1))
        .map(|k| pack(word[k.min(word.len())..].iter().chain(&word[..k.min(word.len())]).copied()))
        .min()
        .unwrap_or(0)
}

impl ArrowPattern {
    pub fn new(word: Vec<(u8, End)>, based: bool) -> Result<Self, String> {
        let arrows = word.len() / 2;
        if word.len() % 2 == 1 || arrows > MAX_ARROWS {
            return Err(format!("bad pattern length {}", word.len()));
        }
        for a in 0..arrows as u8 {
            let tails = word.iter().filter(|&&(l, e)| l == a && e == End::Tail).count();
            let heads = word.iter().filter(|&&(l, e)| l == a && e == End::Head).count();
            if tails != 1 || heads != 1 {
                return Err(format!("arrow {a} needs exactly one tail and one head"));
            }
        }
        if word.iter().any(|&(l, _)| l as usize >= arrows) {
            return Err("arrow labels must be 0..m".into());
        }
        Ok(ArrowPattern { word, based })
    }

    pub fn arrows(&self) -> usize {
        self.word.len() / 2
    }

    pub fn is_based(&self) -> bool {
        self.based
    }

    pub fn word(&self) -> &[(u8, End)] {
        &self.word
    }

    /// Underlying chord diagram.
    pub fn chord_diagram(&self) -> ChordDiagram {
        let labels: Vec<u8> = self.word.iter().map(|&(l, _)| l).collect();
        ChordDiagram::from_labels(&labels).expect("pattern words pair up")
    }

    fn key(&self) -> Key {
        let word: Vec<(usize, End)> = self.word.iter().map(|&(l, e)| (l as usize, e)).collect();
        if self.based {
            pack(word.into_iter())
        } else {
            pack_cyclic(&word)
        }
    }

    /// `<A, G>` for this single pattern.
    pub fn pair(&self, g: &GaussDiagram) -> Rational {
        PatternCombination::single(self.clone()).pair(g)
    }
}

impl fmt::Display for ArrowPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.based {
            f.write_str("*")?;
        }
        for (i, (l, e)) in self.word.iter().enumerate() {
            if i > 0 || self.based {
                f.write_str(" ")?;
            }
            write!(f, "{l}{}", if *e == End::Tail { 't' } else { 'h' })?;
        }
        Ok(())
    }
}

impl FromStr for ArrowPattern {
    type Err = String;

    /// `[*] <label><t|h> ...`; a leading `*` marks a based pattern.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut based = false;
        let mut word = Vec::new();
        for (i, tok) in s.split_whitespace().enumerate() {
            if tok == "*" && i == 0 {
                based = true;
                continue;
            }
            let (label, end) = tok.split_at(tok.len().saturating_sub(1));
            let end = match end {
                "t" => End::Tail,
                "h" => End::Head,
                _ => return Err(format!("bad endpoint {tok:?}")),
            };
            let label: u8 = label.parse().map_err(|_| format!("bad endpoint {tok:?}"))?;
            word.push((label, end));
        }
        ArrowPattern::new(word, based)
    }
}

/// A formal rational combination of arrow patterns.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PatternCombination {
    terms: Vec<(Rational, ArrowPattern)>,
}

impl PatternCombination {
    pub fn new(terms: Vec<(Rational, ArrowPattern)>) -> Self {
        PatternCombination { terms }
    }

    pub fn single(p: ArrowPattern) -> Self {
        PatternCombination { terms: vec![(int(1), p)] }
    }

    pub fn terms(&self) -> &[(Rational, ArrowPattern)] {
        &self.terms
    }

    pub fn push(&mut self, coefficient: Rational, pattern: ArrowPattern) {
        self.terms.push((coefficient, pattern));
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        PatternCombination { terms: self.terms.iter().map(|(c, p)| (c * factor, p.clone())).collect() }
    }

    pub fn extend(&mut self, other: PatternCombination) {
        self.terms.extend(other.terms);
    }

    /// `sum_i n_i <A_i, G>`. Each subset of arrows of `g` is visited once
    /// per (size, basedness) group of patterns present.
    pub fn pair(&self, g: &GaussDiagram) -> Rational {
        let mut groups: HashMap<(usize, bool), HashMap<Key, Rational>> = HashMap::new();
        for (c, p) in &self.terms {
            *groups
                .entry((p.arrows(), p.based))
                .or_default()
                .entry(p.key())
                .or_insert_with(Rational::zero) += c;
        }
        let arrows = g.arrows();
        let mut total = Rational::zero();
        for ((m, based), wanted) in groups {
            let counts = count_subdiagrams(&arrows, m, based, &wanted);
            for (key, count) in counts {
                if count != 0 {
                    total += &wanted[&key] * int(count);
                }
            }
        }
        total
    }
}

/// Signed counts of the `m`-arrow subdiagrams whose key is in `wanted`.
fn count_subdiagrams<V>(arrows: &[Arrow], m: usize, based: bool, wanted: &HashMap<Key, V>) -> HashMap<Key, i64> {
    let mut counts: HashMap<Key, i64> = HashMap::new();
    let n = arrows.len();
    if m > n {
        return counts;
    }
    let mut idx: Vec<usize> = (0..m).collect();
    let mut ends: Vec<(usize, usize, End)> = Vec::with_capacity(2 * m);
    let mut word: Vec<(usize, End)> = Vec::with_capacity(2 * m);
    loop {
        ends.clear();
        let mut sign = 1i64;
        for (slot, &i) in idx.iter().enumerate() {
            let a = &arrows[i];
            ends.push((a.tail, slot, End::Tail));
            ends.push((a.head, slot, End::Head));
            sign *= a.sign.value();
        }
        ends.sort_unstable_by_key(|e| e.0);
        word.clear();
        word.extend(ends.iter().map(|&(_, s, e)| (s, e)));
        let key = if based { pack(word.iter().copied()) } else { pack_cyclic(&word) };
        if wanted.contains_key(&key) {
            *counts.entry(key).or_default() += sign;
        }
        // next combination
        let mut k = m;
        loop {
            if k == 0 {
                return counts;
            }
            k -= 1;
            if idx[k] < n - m + k {
                idx[k] += 1;
                for j in k + 1..m {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All arrow patterns with `m` arrows, up to isomorphism, as canonical
/// representatives. Mostly useful for searching formula spaces.
pub fn enumerate_patterns(m: usize, based: bool) -> Vec<ArrowPattern> {
    let mut seen = std::collections::BTreeMap::new();
    for d in ChordDiagram::enumerate(m) {
        let chords = d.chords();
        for mask in 0..(1u32 << m) {
            let mut word = vec![(0u8, End::Tail); 2 * m];
            for (k, &(a, b)) in chords.iter().enumerate() {
                let flipped = mask >> k & 1 == 1;
                word[a] = (k as u8, if flipped { End::Head } else { End::Tail });
                word[b] = (k as u8, if flipped { End::Tail } else { End::Head });
            }
            let rotations = if based { 2 * m } else { 1 };
            for r in 0..rotations.max(1) {
                let mut w = word.clone();
                w.rotate_left(r);
                let p = ArrowPattern::new(w, based).expect("well formed");
                seen.entry(p.key()).or_insert(p);
            }
        }
    }
    seen.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::gauss::parse_gauss_code;

    fn pat(s: &str) -> ArrowPattern {
        s.parse().unwrap()
    }

    #[test]
    fn empty_cases() {
        let unknot = GaussDiagram::unknot();
        assert_eq!(pat("* 1h 0t 1t 0h").pair(&unknot), int(0));
        assert_eq!(pat("").pair(&unknot), int(1));
        let kink = parse_gauss_code("O1+ U1+").unwrap();
        assert_eq!(pat("0h 2t 1h 0t 2h 1t").pair(&kink), int(0));
    }

    #[test]
    fn single_arrow_counts_writhe() {
        let g = parse_gauss_code("O1+ U2- O3+ U1+ O2- U3+").unwrap();
        assert_eq!(pat("0t 0h").pair(&g), int(1));
        assert_eq!(pat("* 0t 0h").pair(&g) + pat("* 0h 0t").pair(&g), int(1));
    }

    #[test]
    fn trefoil_pairs_by_brute_force() {
        // arrows 1: 0->3, 2: 4->1, 3: 2->5; only the pair {2, 3} reads
        // head, tail, tail, head from the basepoint.
        let g = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        assert_eq!(pat("* 1h 0t 1t 0h").pair(&g), int(1));
        assert_eq!(pat("* 0t 1h 0h 1t").pair(&g), int(1));
        assert_eq!(pat("* 0t 1t 0h 1h").pair(&g), int(1));
        // unbased, every crossed pair is counted
        assert_eq!(pat("0t 1t 0h 1h").pair(&g), int(3));
    }

    #[test]
    fn text_round_trip() {
        for s in ["* 1h 0t 1t 0h", "0h 2t 1h 0t 2h 1t", ""] {
            assert_eq!(pat(s).to_string(), s);
        }
        assert!("0t 0t".parse::<ArrowPattern>().is_err());
        assert!("0t 1h".parse::<ArrowPattern>().is_err());
        assert!("0x 0h".parse::<ArrowPattern>().is_err());
    }

    #[test]
    fn pattern_counts() {
        // unbased two-arrow diagrams: every orientation of the crossed pair
        // is a rotation of any other; the parallel pair has three classes
        // (both arrows forward, both backward, mixed)
        assert_eq!(enumerate_patterns(1, true).len(), 2);
        assert_eq!(enumerate_patterns(1, false).len(), 1);
        assert_eq!(enumerate_patterns(2, false).len(), 4);
    }
}
