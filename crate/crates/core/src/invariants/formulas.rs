//! The concrete invariant formulas.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::algebra::builtin::{self, sections};
use crate::algebra::weight::WeightSystem;
use crate::diagrams::chord::ChordDiagram;
use crate::diagrams::gauss::{GaussDiagram, Role, Sign};
use crate::error::{PatternError, WeightError};
use crate::invariants::arrow::{ArrowPattern, PatternCombination};
use crate::rational::{int, parse_rational, Rational};

const DATA: &str = include_str!("../../data/arrow_patterns.txt");

/// Parses `<coefficient> : <pattern>` lines.
pub fn parse_combination(text: &str) -> Result<PatternCombination, PatternError> {
    let mut c = PatternCombination::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| PatternError::Parse { line: i + 1, message };
        let (coef, pattern) = line.split_once(':').ok_or_else(|| err("expected `coefficient : pattern`".into()))?;
        let coef = parse_rational(coef.trim()).ok_or_else(|| err(format!("bad coefficient {:?}", coef.trim())))?;
        let pattern: ArrowPattern = pattern.parse().map_err(err)?;
        c.push(coef, pattern);
    }
    Ok(c)
}

struct Data {
    v2: PatternCombination,
    v3: PatternCombination,
    v4: PatternCombination,
    v4new: Vec<(Rational, ChordDiagram, PatternCombination)>,
    constraint: ChordDiagram,
}

fn data() -> &'static Data {
    static DATA_CELL: OnceLock<Data> = OnceLock::new();
    DATA_CELL.get_or_init(|| {
        let mut d = Data {
            v2: PatternCombination::default(),
            v3: PatternCombination::default(),
            v4: PatternCombination::default(),
            v4new: Vec::new(),
            constraint: ChordDiagram::empty(),
        };
        for (header, body) in sections(DATA) {
            let parse = || parse_combination(&body).expect("builtin patterns parse");
            match header.as_str() {
                "v2pv" => d.v2 = parse(),
                "v3pv" => d.v3 = parse(),
                "v4pv" => d.v4 = parse(),
                "v4new-constraint" => d.constraint = body.trim().parse().expect("constraint diagram"),
                h => {
                    let rest = h.strip_prefix("v4new ").expect("known section");
                    let (coef, diagram) = rest.split_once('|').expect("`coef | diagram`");
                    let coef = parse_rational(coef.trim()).expect("group coefficient");
                    d.v4new.push((coef, diagram.trim().parse().expect("group diagram"), parse()));
                }
            }
        }
        d
    })
}

/// The order-2 Polyak-Viro combination.
pub fn v2_combination() -> &'static PatternCombination {
    &data().v2
}

pub fn v3_combination() -> &'static PatternCombination {
    &data().v3
}

pub fn v4_combination() -> &'static PatternCombination {
    &data().v4
}

/// The diagram on which an admissible `W4` must vanish.
pub fn v4_new_constraint() -> &'static ChordDiagram {
    &data().constraint
}

/// Groups `(coefficient, diagram, patterns)` of the W4-parameterized formula.
pub fn v4_new_groups() -> &'static [(Rational, ChordDiagram, PatternCombination)] {
    &data().v4new
}

pub fn pairing(c: &PatternCombination, g: &GaussDiagram) -> Rational {
    c.pair(g)
}

pub fn v2_polyak_viro(g: &GaussDiagram) -> Rational {
    v2_combination().pair(g)
}

pub fn v3_polyak_viro(g: &GaussDiagram) -> Rational {
    v3_combination().pair(g)
}

pub fn v4_polyak_viro(g: &GaussDiagram) -> Rational {
    v4_combination().pair(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingLocalData {
    pub crossing: u32,
    pub first: Role,
    pub delta: u8,
    pub sign: Sign,
}

/// Local data of each crossing, in order of first passage. `delta` is 0
/// when the first passage is over and 1 when it is under. The Lannes
/// formulas below are symmetric under `delta -> 1 - delta`, so the opposite
/// convention gives the same values.
pub fn local_data(g: &GaussDiagram) -> Vec<CrossingLocalData> {
    let mut seen = std::collections::BTreeSet::new();
    g.endpoints()
        .iter()
        .filter(|e| seen.insert(e.crossing))
        .map(|e| CrossingLocalData {
            crossing: e.crossing,
            first: e.role,
            delta: (e.role == Role::Under) as u8,
            sign: g.sign(e.crossing).expect("validated"),
        })
        .collect()
}

/// Chord diagram spanned by a set of crossings.
fn chords_of(g: &GaussDiagram, ids: &[u32]) -> ChordDiagram {
    let labels: Vec<u32> = g.endpoints().iter().map(|e| e.crossing).filter(|c| ids.contains(c)).collect();
    ChordDiagram::from_labels(&labels).expect("each crossing appears twice")
}

pub fn v2_lannes(g: &GaussDiagram) -> Rational {
    let w2 = builtin::w2();
    let data = local_data(g);
    let mut total = Rational::zero();
    for (i, x) in data.iter().enumerate() {
        for y in &data[i + 1..] {
            let (dx, dy) = (x.delta as i64, y.delta as i64);
            let bracket = dx * (1 - dy) + dy * (1 - dx);
            if bracket == 0 {
                continue;
            }
            let w = w2.value(&chords_of(g, &[x.crossing, y.crossing]));
            if w.is_zero() {
                continue;
            }
            let parity = if (dx + dy) % 2 == 0 { 1 } else { -1 };
            total += w * int(parity * bracket * x.sign.value() * y.sign.value());
        }
    }
    total / int(2)
}

/// Triplets are ordered by first passage.
pub fn v3_lannes(g: &GaussDiagram) -> Rational {
    let w3 = builtin::w3();
    let data = local_data(g);
    let mut total = Rational::zero();
    for (i, x) in data.iter().enumerate() {
        for (j, y) in data.iter().enumerate().skip(i + 1) {
            for z in &data[j + 1..] {
                let (dx, dy, dz) = (x.delta as i64, y.delta as i64, z.delta as i64);
                let bracket = dy * (1 - dx) * (1 - dz) - dx * dz * (1 - dy);
                if bracket == 0 {
                    continue;
                }
                let w = w3.value(&chords_of(g, &[x.crossing, y.crossing, z.crossing]));
                if w.is_zero() {
                    continue;
                }
                let parity = if (dx + dy + dz) % 2 == 0 { 1 } else { -1 };
                let signs = x.sign.value() * y.sign.value() * z.sign.value();
                total += w * int(parity * bracket * signs);
            }
        }
    }
    total / int(2)
}

/// The W4-parameterized order-4 formula, specialized to one weight system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct V4New {
    w4: WeightSystem,
    combination: PatternCombination,
}

impl V4New {
    /// Fails unless `w4` is an order-4 weight system vanishing on the
    /// constraint diagram.
    pub fn new(w4: &WeightSystem) -> Result<Self, WeightError> {
        if w4.order() != 4 {
            return Err(WeightError::OrderMismatch { expected: 4, found: w4.order() });
        }
        let violations = w4.check();
        if !violations.is_empty() {
            return Err(WeightError::NotAWeightSystem { name: w4.name().to_string(), count: violations.len() });
        }
        let constraint = v4_new_constraint();
        let at = w4.value(constraint);
        if !at.is_zero() {
            return Err(WeightError::ConstraintViolation {
                name: w4.name().to_string(),
                value: at.to_string(),
                diagram: constraint.to_string(),
            });
        }
        let mut combination = PatternCombination::default();
        for (coef, diagram, patterns) in v4_new_groups() {
            let w = w4.value(diagram);
            if !w.is_zero() {
                combination.extend(patterns.scaled(&(coef * w)));
            }
        }
        Ok(V4New { w4: w4.clone(), combination })
    }

    pub fn weight_system(&self) -> &WeightSystem {
        &self.w4
    }

    pub fn combination(&self) -> &PatternCombination {
        &self.combination
    }

    pub fn eval(&self, g: &GaussDiagram) -> Rational {
        self.combination.pair(g)
    }
}

pub fn v4_new(g: &GaussDiagram, w4: &WeightSystem) -> Result<Rational, WeightError> {
    Ok(V4New::new(w4)?.eval(g))
}

/// The builtin order-4 weight systems accepted by [`V4New::new`].
pub fn admissible_builtin_w4() -> Vec<&'static WeightSystem> {
    builtin::order_four().into_iter().filter(|w| V4New::new(w).is_ok()).collect()
}

/// An evaluator selectable by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    V2PolyakViro,
    V2Lannes,
    V3PolyakViro,
    V3Lannes,
    V4PolyakViro,
    V4New(Arc<V4New>),
}

impl Formula {
    /// The six evaluators, with `v4new` taken at the first admissible
    /// builtin weight system.
    pub fn all() -> Vec<Formula> {
        let mut v = vec![
            Formula::V2PolyakViro,
            Formula::V2Lannes,
            Formula::V3PolyakViro,
            Formula::V3Lannes,
            Formula::V4PolyakViro,
        ];
        if let Some(w) = admissible_builtin_w4().first() {
            v.push(Formula::v4_new(w).expect("admissible"));
        }
        v
    }

    pub fn v4_new(w4: &WeightSystem) -> Result<Formula, WeightError> {
        Ok(Formula::V4New(Arc::new(V4New::new(w4)?)))
    }

    pub fn id(&self) -> &'static str {
        match self {
            Formula::V2PolyakViro => "v2pv",
            Formula::V2Lannes => "v2l",
            Formula::V3PolyakViro => "v3pv",
            Formula::V3Lannes => "v3l",
            Formula::V4PolyakViro => "v4pv",
            Formula::V4New(_) => "v4new",
        }
    }

    /// Vassiliev order of the invariant.
    pub fn order(&self) -> usize {
        match self {
            Formula::V2PolyakViro | Formula::V2Lannes => 2,
            Formula::V3PolyakViro | Formula::V3Lannes => 3,
            Formula::V4PolyakViro | Formula::V4New(_) => 4,
        }
    }

    pub fn eval(&self, g: &GaussDiagram) -> Rational {
        match self {
            Formula::V2PolyakViro => v2_polyak_viro(g),
            Formula::V2Lannes => v2_lannes(g),
            Formula::V3PolyakViro => v3_polyak_viro(g),
            Formula::V3Lannes => v3_lannes(g),
            Formula::V4PolyakViro => v4_polyak_viro(g),
            Formula::V4New(f) => f.eval(g),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::V4New(v) => write!(f, "v4new[{}]", v.weight_system().name()),
            other => f.write_str(other.id()),
        }
    }
}

impl FromStr for Formula {
    type Err = String;

    /// `v2pv`, `v2l`, `v3pv`, `v3l`, `v4pv`, `v4new` or `v4new[<builtin name>]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim() {
            "v2pv" => Formula::V2PolyakViro,
            "v2l" => Formula::V2Lannes,
            "v3pv" => Formula::V3PolyakViro,
            "v3l" => Formula::V3Lannes,
            "v4pv" => Formula::V4PolyakViro,
            "v4new" => {
                let w = *admissible_builtin_w4().first().ok_or("no admissible weight system")?;
                Formula::v4_new(w).map_err(|e| e.to_string())?
            }
            other => {
                let name = other
                    .strip_prefix("v4new[")
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| format!("unknown formula {other:?}"))?;
                let w = builtin::by_name(name).ok_or_else(|| format!("unknown weight system {name:?}"))?;
                Formula::v4_new(w).map_err(|e| e.to_string())?
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::braid::braid_closure_to_gauss;

    fn code(s: &str) -> GaussDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn data_loads() {
        assert_eq!(v2_combination().terms().len(), 1);
        assert_eq!(v3_combination().terms().len(), 2);
        assert_eq!(v4_combination().terms().len(), 16);
        assert_eq!(v4_new_groups().len(), 6);
        assert_eq!(v4_new_constraint().to_string(), "4 5 6 7 0 1 2 3");
        for (_, d, p) in v4_new_groups() {
            for (_, a) in p.terms() {
                assert_eq!(&a.chord_diagram(), d);
            }
        }
    }

    #[test]
    fn local_data_reads_first_passages() {
        let d = local_data(&code("O1+ U2+ O3+ U1+ O2+ U3+"));
        let firsts: Vec<Role> = d.iter().map(|x| x.first).collect();
        assert_eq!(firsts, [Role::Over, Role::Under, Role::Over]);
        assert_eq!(local_data(&code("O1+ U1+"))[0].delta, 0);
    }

    #[test]
    fn trefoil_values() {
        let t = code("O1+ U2+ O3+ U1+ O2+ U3+");
        assert_eq!(v2_polyak_viro(&t), int(1));
        assert_eq!(v3_polyak_viro(&t), int(1));
        assert_eq!(v3_polyak_viro(&t.mirror()), int(-1));
        assert_eq!(v2_lannes(&t), int(-1));
        assert_eq!(v3_lannes(&t), int(-1));
        let fig8 = braid_closure_to_gauss(&[1, -2, 1, -2], 3).unwrap();
        assert_eq!(v2_polyak_viro(&fig8), int(-1));
        assert_eq!(v3_polyak_viro(&fig8), int(0));
    }

    #[test]
    fn admissibility() {
        let names: Vec<&str> = admissible_builtin_w4().iter().map(|w| w.name()).collect();
        assert_eq!(names, ["W4_2", "W4_3"]);
        let w41 = builtin::by_name("W4_1").unwrap();
        assert!(matches!(V4New::new(w41), Err(WeightError::ConstraintViolation { .. })));
        assert!(matches!(V4New::new(builtin::w2()), Err(WeightError::OrderMismatch { .. })));
        for w in admissible_builtin_w4() {
            assert_eq!(v4_new(&GaussDiagram::unknot(), w).unwrap(), int(0));
        }
    }

    #[test]
    fn formula_names() {
        for f in Formula::all() {
            assert_eq!(f.id().parse::<Formula>().unwrap().id(), f.id());
        }
        assert_eq!("v4new[W4_3]".parse::<Formula>().unwrap().to_string(), "v4new[W4_3]");
        assert!("v4new[W4_1]".parse::<Formula>().is_err());
        assert!("v5".parse::<Formula>().is_err());
    }
}
