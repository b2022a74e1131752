//! Weight systems: rational functions on chord diagrams of a fixed order
//! satisfying the one-term and four-term relations.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::algebra::linalg::{Eliminator, SparseRow};
use crate::algebra::relations::{four_term_relations, one_term_diagrams, FourTermRelation};
use crate::diagrams::chord::ChordDiagram;
use crate::error::WeightError;
use crate::rational::{int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    name: String,
    order: usize,
    values: BTreeMap<ChordDiagram, Rational>,
}

/// A relation a weight system fails, with the offending value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OneTerm { diagram: ChordDiagram, value: Rational },
    FourTerm { relation: FourTermRelation, sum: Rational },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OneTerm { diagram, value } => write!(f, "1T: W({diagram}) = {value}"),
            Violation::FourTerm { relation, sum } => {
                let [a, b, c, d] = &relation.diagrams;
                write!(f, "4T: W({a}) - W({b}) + W({c}) - W({d}) = {sum}")
            }
        }
    }
}

impl WeightSystem {
    /// Zero values are dropped; every key must have order `order`.
    pub fn new(
        name: impl Into<String>,
        order: usize,
        values: BTreeMap<ChordDiagram, Rational>,
    ) -> Result<Self, WeightError> {
        if let Some(d) = values.keys().find(|d| d.order() != order) {
            return Err(WeightError::OrderMismatch { expected: order, found: d.order() });
        }
        let values = values.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(WeightSystem { name: name.into(), order, values })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Nonzero values only.
    pub fn values(&self) -> &BTreeMap<ChordDiagram, Rational> {
        &self.values
    }

    pub fn eval(&self, d: &ChordDiagram) -> Result<Rational, WeightError> {
        if d.order() != self.order {
            return Err(WeightError::OrderMismatch { expected: self.order, found: d.order() });
        }
        Ok(self.value(d))
    }

    pub(crate) fn value(&self, d: &ChordDiagram) -> Rational {
        self.values.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn scaled(&self, factor: &Rational) -> WeightSystem {
        let values = self.values.iter().map(|(d, v)| (d.clone(), v * factor)).collect();
        WeightSystem::new(self.name.clone(), self.order, values).expect("same order")
    }

    /// Every violated 1T and 4T relation of this order; empty iff `self` is
    /// a weight system.
    pub fn check(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.order >= 1 {
            for diagram in one_term_diagrams(self.order) {
                let value = self.value(&diagram);
                if !value.is_zero() {
                    out.push(Violation::OneTerm { diagram, value });
                }
            }
        }
        for relation in relations(self.order).iter() {
            let sum: Rational = relation.terms().map(|(d, c)| self.value(d) * int(c)).sum();
            if !sum.is_zero() {
                out.push(Violation::FourTerm { relation: relation.clone(), sum });
            }
        }
        out
    }

    /// Coordinates on `enumerate_chord_diagrams(order)`.
    pub fn to_vector(&self) -> Vec<Rational> {
        ChordDiagram::enumerate(self.order).iter().map(|d| self.value(d)).collect()
    }

    /// Parses `<involution> = <value>` lines; `#` starts a comment. The
    /// order is taken from the first entry unless given.
    pub fn parse(name: &str, text: &str, order: Option<usize>) -> Result<Self, WeightError> {
        let mut values = BTreeMap::new();
        let mut order = order;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| WeightError::Parse { line: i + 1, message };
            let (word, value) = line.split_once('=').ok_or_else(|| err("expected '='".into()))?;
            let d: ChordDiagram = word.trim().parse().map_err(|e| err(format!("{e}")))?;
            let v = parse_rational(value).ok_or_else(|| err(format!("bad rational {:?}", value.trim())))?;
            let expected = *order.get_or_insert(d.order());
            if d.order() != expected {
                return Err(WeightError::OrderMismatch { expected, found: d.order() });
            }
            if values.insert(d, v).is_some() {
                return Err(err("diagram listed twice".into()));
            }
        }
        WeightSystem::new(name, order.unwrap_or(0), values)
    }

    /// One line per nonzero value, in the format read by [`WeightSystem::parse`].
    pub fn serialize(&self) -> String {
        self.values.iter().map(|(d, v)| format!("{d} = {v}\n")).collect()
    }
}

const CACHED_ORDERS: usize = 7;

/// Relation lists, cached for the orders the crate works with.
fn relations(n: usize) -> Cow<'static, [FourTermRelation]> {
    static CACHE: [OnceLock<Vec<FourTermRelation>>; CACHED_ORDERS] = [const { OnceLock::new() }; CACHED_ORDERS];
    match CACHE.get(n) {
        Some(cell) => Cow::Borrowed(cell.get_or_init(|| four_term_relations(n))),
        None => Cow::Owned(four_term_relations(n)),
    }
}

fn relation_matrix(n: usize) -> Eliminator {
    let diagrams = ChordDiagram::enumerate(n);
    let index: BTreeMap<&ChordDiagram, usize> = diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let mut e = Eliminator::new(diagrams.len());
    if n >= 1 {
        for d in one_term_diagrams(n) {
            e.push(SparseRow::from([(index[&d], int(1))]));
        }
    }
    for r in relations(n).iter() {
        let mut row = SparseRow::new();
        for (d, c) in r.terms() {
            *row.entry(index[d]).or_insert_with(Rational::zero) += int(c);
        }
        e.push(row);
    }
    e
}

/// Dimension of the space of order-`n` weight systems.
pub fn weight_space_dimension(n: usize) -> usize {
    let e = relation_matrix(n);
    e.columns() - e.rank()
}

/// A basis of the order-`n` weight systems, named `basis_n_k`.
pub fn weight_space_basis(n: usize) -> Vec<WeightSystem> {
    let diagrams = ChordDiagram::enumerate(n);
    relation_matrix(n)
        .nullspace()
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            let values = diagrams.iter().cloned().zip(v).collect();
            WeightSystem::new(format!("basis_{n}_{k}"), n, values).expect("same order")
        })
        .collect()
}
