//! Verification suites shared by the CLI and the acceptance tests. Each
//! returns a list of named checks; failed checks carry a reproducer.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::builtin;
use crate::algebra::linalg::{rank, solve};
use crate::algebra::weight::{weight_space_dimension, WeightSystem};
use crate::corpus;
use crate::diagrams::braid::BraidWord;
use crate::diagrams::chord::ChordDiagram;
use crate::diagrams::gauss::{GaussDiagram, SingularGaussDiagram};
use crate::invariants::formulas::{admissible_builtin_w4, Formula};
use crate::invariants::skein::{derivative_eval, random_realization, symbol_eval};
use crate::moves::braid::{random_equivalent_words, random_rewrite};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", if self.passed { "ok" } else { "FAIL" }, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        writeln!(f, "suite {}: {}/{} checks passed", self.suite, ok, self.checks.len())?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

/// Every evaluator, with `v4new` once per admissible builtin weight system.
pub fn evaluators() -> Vec<Formula> {
    let mut v: Vec<Formula> = Formula::all().into_iter().filter(|f| !matches!(f, Formula::V4New(_))).collect();
    for w in admissible_builtin_w4() {
        v.push(Formula::v4_new(w).expect("admissible"));
    }
    v
}

/// Dimensions of W_n and of V_n = sum of W_k for k <= n.
pub fn dims(max: usize) -> Vec<(usize, usize, usize)> {
    let mut cumulative = 0;
    (0..=max)
        .map(|n| {
            let w = weight_space_dimension(n);
            cumulative += w;
            (n, w, cumulative)
        })
        .collect()
}

pub fn weights() -> SuiteReport {
    let mut checks: Vec<Check> = builtin::all()
        .iter()
        .map(|w| {
            let v = w.check();
            let detail = match v.first() {
                None => "0 violations".to_string(),
                Some(first) => format!("{} violations, first: {first}", v.len()),
            };
            Check::new(format!("{} satisfies 1T and 4T", w.name()), v.is_empty(), detail)
        })
        .collect();
    let rows: Vec<Vec<Rational>> = builtin::order_four().iter().map(|w| w.to_vector()).collect();
    let r = rank(&rows);
    checks.push(Check::new("order-4 builtins are independent", r == 3, format!("rank {r}")));
    SuiteReport { suite: "weights".into(), checks }
}

/// Each corpus knot against `trials` random rewrite-equivalent words.
pub fn invariance(seed: u64, trials: usize, steps: usize) -> SuiteReport {
    let formulas = evaluators();
    let mut checks = Vec::new();
    for (k, (name, word)) in corpus::standard().into_iter().enumerate() {
        let base = word.closure().expect("corpus knots are knots");
        let words = random_equivalent_words(&word, trials, steps, seed.wrapping_add(k as u64));
        let diagrams: Vec<GaussDiagram> = words.iter().map(|w| w.closure().expect("knot")).collect();
        for f in &formulas {
            let expected = f.eval(&base);
            let bad: Vec<(usize, Rational)> = diagrams
                .iter()
                .enumerate()
                .filter_map(|(i, g)| {
                    let v = f.eval(g);
                    (v != expected).then_some((i, v))
                })
                .collect();
            let detail = match bad.first() {
                None => format!("{expected} on {} diagrams", trials + 1),
                Some((i, v)) => format!(
                    "{}/{} differ; reproducer: {f} on `{}` gives {v}, on `{word}` gives {expected}",
                    bad.len(),
                    trials,
                    words[*i]
                ),
            };
            checks.push(Check::new(format!("{f} constant on {name}"), bad.is_empty(), detail));
        }
    }
    SuiteReport { suite: "invariance".into(), checks }
}

pub fn basepoint() -> SuiteReport {
    let mut checks = Vec::new();
    for (name, word) in corpus::standard() {
        let g = word.closure().expect("knot");
        for f in evaluators() {
            let expected = f.eval(&g);
            let bad = (1..g.endpoints().len()).find(|&k| f.eval(&g.shift_basepoint(k)) != expected);
            let detail = match bad {
                None => format!("{expected} under all {} shifts", g.endpoints().len()),
                Some(k) => format!("shift by {k} of `{g}` changes the value"),
            };
            checks.push(Check::new(format!("{f} basepoint-free on {name}"), bad.is_none(), detail));
        }
    }
    SuiteReport { suite: "basepoint".into(), checks }
}

/// A random diagram with `k` double points, from a random equivalent of a
/// random corpus knot.
pub fn random_singular<R: Rng>(k: usize, rng: &mut R) -> SingularGaussDiagram {
    let knots = corpus::standard();
    let (_, word) = knots.choose(rng).expect("nonempty corpus");
    let mut w: BraidWord = word.clone();
    while w.len() < k + 2 {
        w = random_rewrite(&w, rng);
    }
    for _ in 0..rng.gen_range(0..8) {
        w = random_rewrite(&w, rng);
    }
    let g = w.closure().expect("knot");
    let mut ids: Vec<u32> = g.crossings().collect();
    ids.shuffle(rng);
    let chosen: BTreeSet<u32> = ids.into_iter().take(k).collect();
    SingularGaussDiagram::flatten(&g, &chosen)
}

/// The (order+1)-st derivative of each evaluator on random diagrams.
pub fn derivatives(seed: u64, trials: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for f in evaluators() {
        let k = f.order() + 1;
        let mut bad = None;
        for _ in 0..trials {
            let sd = random_singular(k, &mut rng);
            let v = derivative_eval(|g| f.eval(g), &sd);
            if !v.is_zero() {
                bad = Some((sd, v));
                break;
            }
        }
        let detail = match &bad {
            None => format!("0 on {trials} diagrams with {k} double points"),
            Some((sd, v)) => format!("derivative {v} on `{sd}`"),
        };
        checks.push(Check::new(format!("{f} has vanishing order-{k} derivative"), bad.is_none(), detail));
    }
    SuiteReport { suite: "derivatives".into(), checks }
}

fn symbol_vector(f: &Formula, n: usize) -> Vec<(ChordDiagram, Rational)> {
    ChordDiagram::enumerate(n)
        .into_iter()
        .map(|d| {
            let v = symbol_eval(|g| f.eval(g), n, &d).expect("order matches");
            (d, v)
        })
        .collect()
}

/// `Some(c)` with `symbol = c * w` on every diagram.
fn proportion(symbol: &[(ChordDiagram, Rational)], w: &WeightSystem) -> Option<Rational> {
    let mut c: Option<Rational> = None;
    for (d, s) in symbol {
        let wd = w.eval(d).ok()?;
        if wd.is_zero() {
            if !s.is_zero() {
                return None;
            }
            continue;
        }
        let q = s / &wd;
        match &c {
            None => c = Some(q),
            Some(prev) if *prev != q => return None,
            _ => {}
        }
    }
    c
}

fn realization_independent<R: Rng>(f: &Formula, n: usize, realizations: usize, rng: &mut R) -> Option<String> {
    for (d, expected) in symbol_vector(f, n) {
        for _ in 0..realizations {
            let extra = rng.gen_range(0..4);
            let sd = random_realization(&d, extra, rng);
            let v = derivative_eval(|g| f.eval(g), &sd);
            if v != expected {
                return Some(format!("symbol on `{d}` is {expected} but {v} on realization `{sd}`"));
            }
        }
    }
    None
}

pub fn symbols(seed: u64, realizations: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let s2 = symbol_vector(&Formula::V2PolyakViro, 2);
    let w2 = builtin::w2();
    let ok = s2.iter().all(|(d, v)| w2.eval(d).map(|w| &w == v).unwrap_or(false));
    let rendered: Vec<String> = s2.iter().map(|(d, v)| format!("{d} -> {v}")).collect();
    checks.push(Check::new("symbol of v2pv equals W2", ok, rendered.join(", ")));

    let s3 = symbol_vector(&Formula::V3PolyakViro, 3);
    let c = proportion(&s3, builtin::w3()).filter(|c| !c.is_zero());
    checks.push(Check::new(
        "symbol of v3pv is a nonzero multiple of W3",
        c.is_some(),
        match &c {
            Some(c) => format!("factor {c} on all {} diagrams", s3.len()),
            None => "not proportional".into(),
        },
    ));

    for w in admissible_builtin_w4() {
        let f = Formula::v4_new(w).expect("admissible");
        let s4 = symbol_vector(&f, 4);
        let bad = s4.iter().find(|(d, v)| w.eval(d).map(|x| &x != v).unwrap_or(true));
        checks.push(Check::new(
            format!("symbol of {f} equals {}", w.name()),
            bad.is_none(),
            match bad {
                None => format!("on all {} diagrams", s4.len()),
                Some((d, v)) => format!("{v} on `{d}`"),
            },
        ));
    }

    let mut formulas = vec![(Formula::V2PolyakViro, 2), (Formula::V3PolyakViro, 3)];
    for w in admissible_builtin_w4() {
        formulas.push((Formula::v4_new(w).expect("admissible"), 4));
    }
    for (f, n) in formulas {
        let bad = realization_independent(&f, n, realizations, &mut rng);
        checks.push(Check::new(
            format!("symbol of {f} is realization independent"),
            bad.is_none(),
            bad.unwrap_or_else(|| format!("{realizations} random realizations per diagram")),
        ));
    }
    SuiteReport { suite: "symbols".into(), checks }
}

/// Fitted constants of the cross-formula relations, for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossFit {
    pub v2: Option<Vec<Rational>>,
    pub v3: Option<Vec<Rational>>,
}

/// Fits `v2l = a*v2pv + b` on two knots and `v3l = c0 + c1*v2pv + c2*v3pv`
/// on three, then checks the fits on the remaining knots.
pub fn cross_formula() -> (SuiteReport, CrossFit) {
    let values: Vec<(&str, [Rational; 4])> = corpus::standard()
        .into_iter()
        .map(|(name, w)| {
            let g = w.closure().expect("knot");
            (
                name,
                [
                    Formula::V2PolyakViro.eval(&g),
                    Formula::V3PolyakViro.eval(&g),
                    Formula::V2Lannes.eval(&g),
                    Formula::V3Lannes.eval(&g),
                ],
            )
        })
        .collect();
    let pick = |names: &[&str]| -> Vec<&[Rational; 4]> {
        names.iter().map(|n| &values.iter().find(|(m, _)| m == n).expect("corpus name").1).collect()
    };
    let mut checks = Vec::new();

    let fit2 = ["right trefoil", "figure-eight"];
    let rows = pick(&fit2);
    let a: Vec<Vec<Rational>> = rows.iter().map(|v| vec![v[0].clone(), int(1)]).collect();
    let b: Vec<Rational> = rows.iter().map(|v| v[2].clone()).collect();
    let v2 = solve(&a, &b);
    let detail = match &v2 {
        None => "no fit".to_string(),
        Some(x) => {
            let bad: Vec<&str> = values
                .iter()
                .filter(|(n, v)| !fit2.contains(n) && &x[0] * &v[0] + &x[1] != v[2])
                .map(|(n, _)| *n)
                .collect();
            if bad.is_empty() {
                format!("alpha = {}, beta = {} (fitted on {})", x[0], x[1], fit2.join(", "))
            } else {
                format!("fit alpha = {}, beta = {} fails on {}", x[0], x[1], bad.join(", "))
            }
        }
    };
    let ok2 = v2.as_ref().is_some_and(|x| values.iter().all(|(_, v)| &x[0] * &v[0] + &x[1] == v[2]));
    checks.push(Check::new("v2l = alpha * v2pv + beta", ok2, detail));

    let fit3 = ["unknot", "right trefoil", "figure-eight"];
    let rows = pick(&fit3);
    let a: Vec<Vec<Rational>> = rows.iter().map(|v| vec![int(1), v[0].clone(), v[1].clone()]).collect();
    let b: Vec<Rational> = rows.iter().map(|v| v[3].clone()).collect();
    let v3 = solve(&a, &b);
    let predict = |x: &[Rational], v: &[Rational; 4]| &x[0] + &x[1] * &v[0] + &x[2] * &v[1];
    let ok3 = v3.as_ref().is_some_and(|x| values.iter().all(|(_, v)| predict(x, v) == v[3]));
    let detail = match &v3 {
        None => "no fit".to_string(),
        Some(x) => format!(
            "v3l = {} + {} * v2pv + {} * v3pv (fitted on {}){}",
            x[0],
            x[1],
            x[2],
            fit3.join(", "),
            if ok3 { "" } else { ", fails elsewhere" }
        ),
    };
    checks.push(Check::new("v3l in span{1, v2pv, v3pv}", ok3, detail));
    (SuiteReport { suite: "cross-formula".into(), checks }, CrossFit { v2, v3 })
}

pub fn mirror() -> SuiteReport {
    let mut checks = Vec::new();
    for (name, w) in corpus::standard() {
        let g = w.closure().expect("knot");
        let m = g.mirror();
        for f in [Formula::V2PolyakViro, Formula::V2Lannes] {
            let (a, b) = (f.eval(&g), f.eval(&m));
            checks.push(Check::new(format!("{f} mirror-invariant on {name}"), a == b, format!("{a} vs {b}")));
        }
        for f in [Formula::V3PolyakViro, Formula::V3Lannes] {
            let (a, b) = (f.eval(&g), f.eval(&m));
            checks.push(Check::new(format!("{f} negates under mirror on {name}"), a == -&b, format!("{a} vs {b}")));
        }
    }
    SuiteReport { suite: "mirror".into(), checks }
}
