//! Vassiliev derivatives through the skein relation, and symbols.
//!
//! A double point is resolved positively by letting the branch met first
//! pass over, with a positive sign, and negatively by letting it pass under
//! with a negative sign.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagrams::chord::ChordDiagram;
use crate::diagrams::gauss::{GaussDiagram, Passage, Role, Sign, SingularEndpoint, SingularGaussDiagram};
use crate::error::WeightError;
use crate::rational::{int, Rational};

/// All `2^k` resolutions, each with the product of its resolution signs.
pub fn resolve(sd: &SingularGaussDiagram) -> Vec<(i64, GaussDiagram)> {
    let ids = sd.singular_ids();
    let k = ids.len();
    (0..1u64 << k)
        .map(|mask| {
            let negative = |id: u32| {
                let i = ids.iter().position(|&x| x == id).expect("singular id");
                mask >> i & 1 == 1
            };
            let g = sd.resolve_with(|id| {
                if negative(id) {
                    (Role::Under, Sign::Negative)
                } else {
                    (Role::Over, Sign::Positive)
                }
            });
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            (sign, g)
        })
        .collect()
}

/// `f^(k)(sd) = sum over resolutions of sign * f`.
pub fn derivative_eval(f: impl Fn(&GaussDiagram) -> Rational, sd: &SingularGaussDiagram) -> Rational {
    resolve(sd).iter().fold(Rational::zero(), |acc, (s, g)| acc + f(g) * int(*s))
}

/// A diagram whose only chords are the double points of `d`.
pub fn realize_chord_diagram(d: &ChordDiagram) -> SingularGaussDiagram {
    let inv = d.involution();
    let mut ids = vec![0u32; inv.len()];
    let mut next = 1;
    for i in 0..inv.len() {
        if inv[i] > i {
            ids[i] = next;
            ids[inv[i]] = next;
            next += 1;
        }
    }
    let endpoints = ids.into_iter().map(|id| SingularEndpoint { id, passage: Passage::Double }).collect();
    SingularGaussDiagram::new(endpoints, BTreeMap::new()).expect("involution pairs endpoints")
}

/// A realization of `d` with a random basepoint and `extra` random regular
/// crossings interleaved anywhere. Evaluators are total on Gauss diagrams,
/// so these are as good as planar realizations for symbol computations.
pub fn random_realization<R: Rng>(d: &ChordDiagram, extra: usize, rng: &mut R) -> SingularGaussDiagram {
    let base = realize_chord_diagram(d);
    let mut endpoints = base.endpoints().to_vec();
    if !endpoints.is_empty() {
        let k = rng.gen_range(0..endpoints.len());
        endpoints.rotate_left(k);
    }
    let first = d.order() as u32 + 1;
    let mut signs = BTreeMap::new();
    for id in first..first + extra as u32 {
        let roles = if rng.gen() { [Passage::Over, Passage::Under] } else { [Passage::Under, Passage::Over] };
        for passage in roles {
            let at = rng.gen_range(0..=endpoints.len());
            endpoints.insert(at, SingularEndpoint { id, passage });
        }
        signs.insert(id, *[Sign::Positive, Sign::Negative].choose(rng).expect("nonempty"));
    }
    SingularGaussDiagram::new(endpoints, signs).expect("well formed by construction")
}

/// The order-`n` symbol of `f` on `d`.
pub fn symbol_eval(f: impl Fn(&GaussDiagram) -> Rational, n: usize, d: &ChordDiagram) -> Result<Rational, WeightError> {
    if d.order() != n {
        return Err(WeightError::OrderMismatch { expected: n, found: d.order() });
    }
    Ok(derivative_eval(f, &realize_chord_diagram(d)))
}
