//! Based Gauss (arrow) diagrams and their singular variant.
//!
//! A diagram is read from the basepoint along the orientation of the knot.
//! Every crossing is met twice, once on the over-branch and once on the
//! under-branch. Viewed as an arrow diagram, the chord of a crossing points
//! from its over endpoint to its under endpoint.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::GaussCodeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flip(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

/// Local writhe of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_value(v: i64) -> Sign {
        if v < 0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub crossing: u32,
    pub role: Role,
}

/// A crossing seen as an arrow: positions of its tail (over) and head (under).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    pub crossing: u32,
    pub tail: usize,
    pub head: usize,
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    endpoints: Vec<Endpoint>,
    signs: BTreeMap<u32, Sign>,
}

impl GaussDiagram {
    pub fn unknot() -> Self {
        GaussDiagram { endpoints: Vec::new(), signs: BTreeMap::new() }
    }

    pub fn new(endpoints: Vec<Endpoint>, signs: BTreeMap<u32, Sign>) -> Result<Self, GaussCodeError> {
        let mut seen: BTreeMap<u32, (bool, bool)> = BTreeMap::new();
        for (position, e) in endpoints.iter().enumerate() {
            let slot = seen.entry(e.crossing).or_default();
            let flag = match e.role {
                Role::Over => &mut slot.0,
                Role::Under => &mut slot.1,
            };
            if *flag {
                return Err(GaussCodeError::DuplicateRole { id: e.crossing, role: e.role.symbol(), position });
            }
            *flag = true;
        }
        if endpoints.len() % 2 == 1 {
            return Err(GaussCodeError::OddTokenCount(endpoints.len()));
        }
        for (&id, &(o, u)) in &seen {
            if !(o && u) || !signs.contains_key(&id) {
                return Err(GaussCodeError::MissingPartner { id });
            }
        }
        let signs = signs.into_iter().filter(|(id, _)| seen.contains_key(id)).collect();
        Ok(GaussDiagram { endpoints, signs })
    }

    /// Number of crossings.
    pub fn order(&self) -> usize {
        self.signs.len()
    }

    pub fn endpoints(&self) -> &[Endpoint] {
        &self.endpoints
    }

    pub fn signs(&self) -> &BTreeMap<u32, Sign> {
        &self.signs
    }

    pub fn sign(&self, crossing: u32) -> Option<Sign> {
        self.signs.get(&crossing).copied()
    }

    /// Crossing ids in increasing order.
    pub fn crossings(&self) -> impl Iterator<Item = u32> + '_ {
        self.signs.keys().copied()
    }

    /// Crossing ids in order of first passage from the basepoint.
    pub fn crossings_by_first_passage(&self) -> Vec<u32> {
        let mut seen = BTreeSet::new();
        self.endpoints
            .iter()
            .filter(|e| seen.insert(e.crossing))
            .map(|e| e.crossing)
            .collect()
    }

    /// Arrows ordered by first passage from the basepoint.
    pub fn arrows(&self) -> Vec<Arrow> {
        let mut tails = BTreeMap::new();
        let mut heads = BTreeMap::new();
        for (i, e) in self.endpoints.iter().enumerate() {
            match e.role {
                Role::Over => tails.insert(e.crossing, i),
                Role::Under => heads.insert(e.crossing, i),
            };
        }
        let mut arrows: Vec<Arrow> = self
            .signs
            .iter()
            .map(|(&id, &sign)| Arrow { crossing: id, tail: tails[&id], head: heads[&id], sign })
            .collect();
        arrows.sort_by_key(|a| a.tail.min(a.head));
        arrows
    }

    pub fn max_id(&self) -> u32 {
        self.signs.keys().next_back().copied().unwrap_or(0)
    }

    /// Diagram of the mirror knot: signs negated, over and under exchanged.
    pub fn mirror(&self) -> GaussDiagram {
        GaussDiagram {
            endpoints: self
                .endpoints
                .iter()
                .map(|e| Endpoint { crossing: e.crossing, role: e.role.flip() })
                .collect(),
            signs: self.signs.iter().map(|(&id, s)| (id, s.flip())).collect(),
        }
    }

    /// Moves the basepoint forward past `offset` endpoints (taken modulo 2n).
    pub fn shift_basepoint(&self, offset: usize) -> GaussDiagram {
        let len = self.endpoints.len();
        if len == 0 {
            return self.clone();
        }
        let k = offset % len;
        let mut endpoints = self.endpoints[k..].to_vec();
        endpoints.extend_from_slice(&self.endpoints[..k]);
        GaussDiagram { endpoints, signs: self.signs.clone() }
    }

    /// Builds a diagram without validation; callers guarantee the invariants.
    pub(crate) fn from_parts_unchecked(endpoints: Vec<Endpoint>, signs: BTreeMap<u32, Sign>) -> Self {
        debug_assert!(GaussDiagram::new(endpoints.clone(), signs.clone()).is_ok());
        GaussDiagram { endpoints, signs }
    }

    /// Renumbers crossings 1..=n in order of first passage.
    pub fn relabeled(&self) -> GaussDiagram {
        let map: BTreeMap<u32, u32> = self
            .crossings_by_first_passage()
            .into_iter()
            .zip(1..)
            .collect();
        GaussDiagram {
            endpoints: self
                .endpoints
                .iter()
                .map(|e| Endpoint { crossing: map[&e.crossing], role: e.role })
                .collect(),
            signs: self.signs.iter().map(|(id, &s)| (map[id], s)).collect(),
        }
    }
}

/// Parses whitespace separated `[OU]<id><+|->` tokens; the basepoint sits
/// before the first token.
pub fn parse_gauss_code(text: &str) -> Result<GaussDiagram, GaussCodeError> {
    let mut endpoints = Vec::new();
    let mut signs: BTreeMap<u32, (Sign, usize)> = BTreeMap::new();
    for (position, token) in text.split_whitespace().enumerate() {
        let (passage, id, sign) = parse_token(token, position)?;
        let role = match passage {
            'O' => Role::Over,
            'U' => Role::Under,
            _ => return Err(GaussCodeError::MalformedToken { position, token: token.to_string() }),
        };
        let sign = sign.ok_or_else(|| GaussCodeError::MalformedToken { position, token: token.to_string() })?;
        if let Some(&(previous, _)) = signs.get(&id) {
            if previous != sign {
                return Err(GaussCodeError::SignMismatch { id, position });
            }
        }
        signs.entry(id).or_insert((sign, position));
        endpoints.push(Endpoint { crossing: id, role });
    }
    GaussDiagram::new(endpoints, signs.into_iter().map(|(id, (s, _))| (id, s)).collect())
}

/// Splits a token into passage letter, id and optional sign.
fn parse_token(token: &str, position: usize) -> Result<(char, u32, Option<Sign>), GaussCodeError> {
    let malformed = || GaussCodeError::MalformedToken { position, token: token.to_string() };
    let mut chars = token.chars();
    let passage = chars.next().ok_or_else(malformed)?;
    let rest = chars.as_str();
    let (digits, sign) = match rest.chars().last() {
        Some('+') => (&rest[..rest.len() - 1], Some(Sign::Positive)),
        Some('-') => (&rest[..rest.len() - 1], Some(Sign::Negative)),
        _ => (rest, None),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let id: u32 = digits.parse().map_err(|_| malformed())?;
    if id == 0 {
        return Err(malformed());
    }
    Ok((passage, id, sign))
}

impl FromStr for GaussDiagram {
    type Err = GaussCodeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gauss_code(s)
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.endpoints.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}{}", e.role.symbol(), e.crossing, self.signs[&e.crossing].symbol())?;
        }
        Ok(())
    }
}

/// How a singular diagram passes through one of its chords.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Passage {
    Over,
    Under,
    Double,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SingularEndpoint {
    pub id: u32,
    pub passage: Passage,
}

/// A Gauss diagram in which some chords are double points. Double points
/// carry neither sign nor over/under information.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingularGaussDiagram {
    endpoints: Vec<SingularEndpoint>,
    signs: BTreeMap<u32, Sign>,
}

impl SingularGaussDiagram {
    pub fn new(endpoints: Vec<SingularEndpoint>, signs: BTreeMap<u32, Sign>) -> Result<Self, GaussCodeError> {
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for e in &endpoints {
            if e.passage == Passage::Double {
                *count.entry(e.id).or_default() += 1;
            }
        }
        for (&id, &c) in &count {
            if c != 2 {
                return Err(GaussCodeError::BadChordMultiplicity { id, count: c });
            }
            if signs.contains_key(&id) {
                return Err(GaussCodeError::DuplicateRole { id, role: 'S', position: 0 });
            }
        }
        let regular: Vec<Endpoint> = endpoints
            .iter()
            .filter_map(|e| match e.passage {
                Passage::Over => Some(Endpoint { crossing: e.id, role: Role::Over }),
                Passage::Under => Some(Endpoint { crossing: e.id, role: Role::Under }),
                Passage::Double => None,
            })
            .collect();
        if regular.iter().any(|e| count.contains_key(&e.crossing)) {
            let id = regular.iter().find(|e| count.contains_key(&e.crossing)).unwrap().crossing;
            return Err(GaussCodeError::BadChordMultiplicity { id, count: 3 });
        }
        GaussDiagram::new(regular, signs.clone())?;
        Ok(SingularGaussDiagram { endpoints, signs })
    }

    pub fn from_gauss(g: &GaussDiagram) -> Self {
        SingularGaussDiagram {
            endpoints: g
                .endpoints()
                .iter()
                .map(|e| SingularEndpoint {
                    id: e.crossing,
                    passage: match e.role {
                        Role::Over => Passage::Over,
                        Role::Under => Passage::Under,
                    },
                })
                .collect(),
            signs: g.signs().clone(),
        }
    }

    /// Turns the listed crossings of `g` into double points.
    pub fn flatten(g: &GaussDiagram, singular: &BTreeSet<u32>) -> Self {
        let mut sd = SingularGaussDiagram::from_gauss(g);
        for e in &mut sd.endpoints {
            if singular.contains(&e.id) {
                e.passage = Passage::Double;
            }
        }
        sd.signs.retain(|id, _| !singular.contains(id));
        sd
    }

    pub fn endpoints(&self) -> &[SingularEndpoint] {
        &self.endpoints
    }

    pub fn signs(&self) -> &BTreeMap<u32, Sign> {
        &self.signs
    }

    /// Ids of the double points, in order of first passage.
    pub fn singular_ids(&self) -> Vec<u32> {
        let mut seen = BTreeSet::new();
        self.endpoints
            .iter()
            .filter(|e| e.passage == Passage::Double && seen.insert(e.id))
            .map(|e| e.id)
            .collect()
    }

    pub fn singular_count(&self) -> usize {
        self.endpoints.iter().filter(|e| e.passage == Passage::Double).count() / 2
    }

    /// The diagram with all double points deleted.
    pub fn regular_part(&self) -> GaussDiagram {
        let endpoints = self
            .endpoints
            .iter()
            .filter_map(|e| match e.passage {
                Passage::Over => Some(Endpoint { crossing: e.id, role: Role::Over }),
                Passage::Under => Some(Endpoint { crossing: e.id, role: Role::Under }),
                Passage::Double => None,
            })
            .collect();
        GaussDiagram::from_parts_unchecked(endpoints, self.signs.clone())
    }

    /// Replaces each double point by a crossing. `choice(id, first_passage)`
    /// returns the role of the first passage and the sign of the crossing.
    pub(crate) fn resolve_with(&self, mut choice: impl FnMut(u32) -> (Role, Sign)) -> GaussDiagram {
        let mut signs = self.signs.clone();
        let mut first_role: BTreeMap<u32, Role> = BTreeMap::new();
        let endpoints = self
            .endpoints
            .iter()
            .map(|e| match e.passage {
                Passage::Over => Endpoint { crossing: e.id, role: Role::Over },
                Passage::Under => Endpoint { crossing: e.id, role: Role::Under },
                Passage::Double => {
                    let role = match first_role.get(&e.id) {
                        Some(r) => r.flip(),
                        None => {
                            let (r, s) = choice(e.id);
                            first_role.insert(e.id, r);
                            signs.insert(e.id, s);
                            r
                        }
                    };
                    Endpoint { crossing: e.id, role }
                }
            })
            .collect();
        GaussDiagram::from_parts_unchecked(endpoints, signs)
    }
}

impl FromStr for SingularGaussDiagram {
    type Err = GaussCodeError;

    /// Same tokens as a Gauss code plus `S<id>` for the two preimages of a
    /// double point.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut endpoints = Vec::new();
        let mut signs: BTreeMap<u32, Sign> = BTreeMap::new();
        for (position, token) in text.split_whitespace().enumerate() {
            let (letter, id, sign) = parse_token(token, position)?;
            let malformed = || GaussCodeError::MalformedToken { position, token: token.to_string() };
            let passage = match (letter, sign) {
                ('O', Some(_)) => Passage::Over,
                ('U', Some(_)) => Passage::Under,
                ('S', None) => Passage::Double,
                _ => return Err(malformed()),
            };
            if let Some(s) = sign {
                if let Some(&prev) = signs.get(&id) {
                    if prev != s {
                        return Err(GaussCodeError::SignMismatch { id, position });
                    }
                }
                signs.insert(id, s);
            }
            endpoints.push(SingularEndpoint { id, passage });
        }
        SingularGaussDiagram::new(endpoints, signs)
    }
}

impl fmt::Display for SingularGaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.endpoints.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match e.passage {
                Passage::Over => write!(f, "O{}{}", e.id, self.signs[&e.id].symbol())?,
                Passage::Under => write!(f, "U{}{}", e.id, self.signs[&e.id].symbol())?,
                Passage::Double => write!(f, "S{}", e.id)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "O1+ U2+ O3+ U1+ O2+ U3+";

    #[test]
    fn empty_code_is_unknot() {
        let g = parse_gauss_code("").unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(g, GaussDiagram::unknot());
    }

    #[test]
    fn trefoil_parses() {
        let g = parse_gauss_code(TREFOIL).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.signs().values().all(|&s| s == Sign::Positive));
        assert_eq!(g.to_string(), TREFOIL);
    }

    #[test]
    fn kink_is_valid() {
        let g = parse_gauss_code("O1+ U1+").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_gauss_code("O1+ U1-"),
            Err(GaussCodeError::SignMismatch { id: 1, position: 1 })
        );
        assert!(matches!(parse_gauss_code("O1+ O1+"), Err(GaussCodeError::DuplicateRole { id: 1, .. })));
        assert_eq!(parse_gauss_code("O1+ U1+ O2+"), Err(GaussCodeError::OddTokenCount(3)));
        assert!(matches!(parse_gauss_code("O1+ U2+"), Err(GaussCodeError::MissingPartner { .. })));
        for bad in ["X1+", "O+", "O1", "Oa+", "O0+", "O1+-"] {
            assert!(matches!(parse_gauss_code(bad), Err(GaussCodeError::MalformedToken { position: 0, .. })), "{bad}");
        }
    }

    #[test]
    fn mirror_is_involution() {
        let g = parse_gauss_code(TREFOIL).unwrap();
        assert_eq!(g.mirror().to_string(), "U1- O2- U3- O1- U2- O3-");
        assert_eq!(g.mirror().mirror(), g);
        assert_eq!(GaussDiagram::unknot().mirror(), GaussDiagram::unknot());
    }

    #[test]
    fn shifts() {
        let g = parse_gauss_code(TREFOIL).unwrap();
        assert_eq!(g.shift_basepoint(0), g);
        assert_eq!(g.shift_basepoint(6), g);
        assert_eq!(g.shift_basepoint(2).to_string(), "O3+ U1+ O2+ U3+ O1+ U2+");
        assert_eq!(g.shift_basepoint(1).mirror(), g.mirror().shift_basepoint(1));
    }

    #[test]
    fn singular_roundtrip() {
        let sd: SingularGaussDiagram = "S1 O2+ S1 U2+ S3 S3".parse().unwrap();
        assert_eq!(sd.singular_count(), 2);
        assert_eq!(sd.singular_ids(), vec![1, 3]);
        assert_eq!(sd.to_string(), "S1 O2+ S1 U2+ S3 S3");
        assert_eq!(sd.regular_part().to_string(), "O2+ U2+");
        assert!("S1 O2+ U2+".parse::<SingularGaussDiagram>().is_err());
        assert!("S1+ S1".parse::<SingularGaussDiagram>().is_err());
    }
}
