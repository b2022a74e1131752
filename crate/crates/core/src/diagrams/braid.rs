//! Braid words and their closures.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::diagrams::gauss::{Endpoint, GaussDiagram, Role, Sign};
use crate::error::BraidError;

/// A word in the braid group on `strands` strands. Letter `i` is the
/// generator exchanging positions `i` and `i + 1` with the strand coming
/// from position `i` passing over; `-i` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for (index, &letter) in letters.iter().enumerate() {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter, index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Permutation of positions `0..strands` induced by the word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    /// Gauss diagram of the closure. The traversal starts on strand 1 just
    /// below the braid and runs upward; crossing `k + 1` is letter `k`.
    pub fn closure(&self) -> Result<GaussDiagram, BraidError> {
        let components = self.components();
        if components != 1 {
            return Err(BraidError::NotAKnot(components));
        }
        let mut endpoints = Vec::with_capacity(2 * self.letters.len());
        let mut pos = 1usize;
        loop {
            for (k, &l) in self.letters.iter().enumerate() {
                let i = l.unsigned_abs() as usize;
                let from_left = if pos == i {
                    pos = i + 1;
                    true
                } else if pos == i + 1 {
                    pos = i;
                    false
                } else {
                    continue;
                };
                // the strand moving right passes over for a positive letter
                let role = if from_left == (l > 0) { Role::Over } else { Role::Under };
                endpoints.push(Endpoint { crossing: k as u32 + 1, role });
            }
            if pos == 1 {
                break;
            }
        }
        let signs: BTreeMap<u32, Sign> = self
            .letters
            .iter()
            .enumerate()
            .map(|(k, &l)| (k as u32 + 1, if l > 0 { Sign::Positive } else { Sign::Negative }))
            .collect();
        Ok(GaussDiagram::from_parts_unchecked(endpoints, signs))
    }
}

pub fn braid_closure_to_gauss(word: &[i32], strands: usize) -> Result<GaussDiagram, BraidError> {
    BraidWord::new(strands, word.to_vec())?.closure()
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid {}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    /// `braid <strands>: i1 i2 ... ik`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: &str| BraidError::Malformed(m.to_string());
        let rest = s.trim().strip_prefix("braid").ok_or_else(|| bad("missing 'braid' keyword"))?;
        let (strands, word) = rest.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let strands: usize = strands.trim().parse().map_err(|_| bad("bad strand count"))?;
        let letters = parse_letters(word)?;
        BraidWord::new(strands, letters)
    }
}

/// Whitespace or comma separated nonzero integers.
pub fn parse_letters(word: &str) -> Result<Vec<i32>, BraidError> {
    word.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i32>().map_err(|_| BraidError::Malformed(format!("bad letter {t:?}"))))
        .collect()
}
