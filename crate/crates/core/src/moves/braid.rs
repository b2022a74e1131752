//! Braid relations and Markov moves on braid words.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use crate::diagrams::braid::BraidWord;
use crate::diagrams::gauss::GaussDiagram;
use crate::error::BraidError;

/// Rewrites that preserve the knot type of the closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rewrite {
    /// `s_i s_j -> s_j s_i` for `|i - j| >= 2`.
    Commute,
    /// `s_i s_j s_i -> s_j s_i s_j` for `|i - j| = 1` (all exponents equal),
    /// and `s_i^e s_j^f s_i^-e -> s_j^-e s_i^f s_j^e`.
    YangBaxter,
    /// Deletes `s_i s_i^-1`.
    FreeReduce,
    /// Inserts `letter, -letter`.
    FreeExpand(i32),
    /// Moves the first `site` letters to the end.
    Conjugate,
    /// Adds a strand and the letter `+-(strands)` at the end.
    Stabilize(bool),
    /// Inverse of `Stabilize`.
    Destabilize,
}

impl Rewrite {
    pub fn name(self) -> &'static str {
        match self {
            Rewrite::Commute => "commute",
            Rewrite::YangBaxter => "yang-baxter",
            Rewrite::FreeReduce => "free-reduce",
            Rewrite::FreeExpand(_) => "free-expand",
            Rewrite::Conjugate => "conjugate",
            Rewrite::Stabilize(_) => "stabilize",
            Rewrite::Destabilize => "destabilize",
        }
    }
}

fn adjacent(a: i32, b: i32) -> bool {
    a.unsigned_abs().abs_diff(b.unsigned_abs()) == 1
}

fn yang_baxter(a: i32, b: i32, c: i32) -> Option<[i32; 3]> {
    if !adjacent(a, b) {
        return None;
    }
    if a == c && (a > 0) == (b > 0) {
        Some([b, a, b])
    } else if c == -a {
        let (e, j) = (a.signum(), b.abs());
        Some([-e * j, b.signum() * a.abs(), e * j])
    } else {
        None
    }
}

/// Applies `rule` at `site`, checking applicability.
pub fn braid_rewrite(w: &BraidWord, rule: Rewrite, site: usize) -> Result<BraidWord, BraidError> {
    let l = w.letters();
    let strands = w.strands();
    let inapplicable = || BraidError::Inapplicable { rule: rule.name(), site };
    let mut letters = l.to_vec();
    let mut new_strands = strands;
    match rule {
        Rewrite::Commute => {
            let (&a, &b) = (l.get(site).ok_or_else(inapplicable)?, l.get(site + 1).ok_or_else(inapplicable)?);
            if a.unsigned_abs().abs_diff(b.unsigned_abs()) < 2 {
                return Err(inapplicable());
            }
            letters.swap(site, site + 1);
        }
        Rewrite::YangBaxter => {
            let t = l.get(site..site + 3).ok_or_else(inapplicable)?;
            let r = yang_baxter(t[0], t[1], t[2]).ok_or_else(inapplicable)?;
            letters[site..site + 3].copy_from_slice(&r);
        }
        Rewrite::FreeReduce => {
            let (&a, &b) = (l.get(site).ok_or_else(inapplicable)?, l.get(site + 1).ok_or_else(inapplicable)?);
            if a != -b {
                return Err(inapplicable());
            }
            letters.drain(site..site + 2);
        }
        Rewrite::FreeExpand(x) => {
            if site > l.len() || x == 0 || x.unsigned_abs() as usize >= strands {
                return Err(inapplicable());
            }
            letters.splice(site..site, [x, -x]);
        }
        Rewrite::Conjugate => {
            if site == 0 || site >= l.len() {
                return Err(inapplicable());
            }
            letters.rotate_left(site);
        }
        Rewrite::Stabilize(positive) => {
            let s = strands as i32;
            letters.push(if positive { s } else { -s });
            new_strands += 1;
        }
        Rewrite::Destabilize => {
            let last = strands as i32 - 1;
            let ok = strands >= 2
                && l.last().is_some_and(|x| x.abs() == last)
                && l.iter().filter(|x| x.abs() == last).count() == 1;
            if !ok {
                return Err(inapplicable());
            }
            letters.pop();
            new_strands -= 1;
        }
    }
    BraidWord::new(new_strands, letters)
}

/// Every applicable `(rule, site)` pair, grouped by rule.
pub fn applicable_rewrites(w: &BraidWord) -> Vec<Vec<(Rewrite, usize)>> {
    let l = w.letters();
    let mut groups: Vec<Vec<(Rewrite, usize)>> = Vec::new();
    let mut push = |group: Vec<(Rewrite, usize)>| {
        if !group.is_empty() {
            groups.push(group);
        }
    };
    push(
        (0..l.len().saturating_sub(1))
            .filter(|&i| l[i].unsigned_abs().abs_diff(l[i + 1].unsigned_abs()) >= 2)
            .map(|i| (Rewrite::Commute, i))
            .collect(),
    );
    push(
        (0..l.len().saturating_sub(2))
            .filter(|&i| yang_baxter(l[i], l[i + 1], l[i + 2]).is_some())
            .map(|i| (Rewrite::YangBaxter, i))
            .collect(),
    );
    push(
        (0..l.len().saturating_sub(1))
            .filter(|&i| l[i] == -l[i + 1])
            .map(|i| (Rewrite::FreeReduce, i))
            .collect(),
    );
    let s = w.strands() as i32;
    push(
        (0..=l.len())
            .flat_map(|i| (1..s).flat_map(move |x| [(Rewrite::FreeExpand(x), i), (Rewrite::FreeExpand(-x), i)]))
            .collect(),
    );
    push((1..l.len()).map(|i| (Rewrite::Conjugate, i)).collect());
    push(vec![(Rewrite::Stabilize(true), l.len()), (Rewrite::Stabilize(false), l.len())]);
    if braid_rewrite(w, Rewrite::Destabilize, l.len()).is_ok() {
        push(vec![(Rewrite::Destabilize, l.len())]);
    }
    groups
}

/// One random rewrite: a rule chosen uniformly among the applicable ones,
/// then a site uniformly among that rule's sites.
pub fn random_rewrite<R: Rng>(w: &BraidWord, rng: &mut R) -> BraidWord {
    let groups = applicable_rewrites(w);
    let group = groups.choose(rng).expect("stabilization always applies");
    let &(rule, site) = group.choose(rng).expect("groups are nonempty");
    braid_rewrite(w, rule, site).expect("listed rewrites apply")
}

/// `count` words, each after `steps` seeded random rewrites of `w`.
pub fn random_equivalent_words(w: &BraidWord, count: usize, steps: usize, seed: u64) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut cur = w.clone();
            for _ in 0..steps {
                cur = random_rewrite(&cur, &mut rng);
            }
            cur
        })
        .collect()
}

/// Closures of [`random_equivalent_words`].
pub fn random_equivalents(
    w: &BraidWord,
    count: usize,
    steps: usize,
    seed: u64,
) -> Result<Vec<GaussDiagram>, BraidError> {
    random_equivalent_words(w, count, steps, seed).iter().map(BraidWord::closure).collect()
}
