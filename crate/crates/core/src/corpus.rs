//! Standard knots as braid closures.

use crate::diagrams::braid::BraidWord;

/// (name, braid word) for the unknot, both trefoils, the figure-eight,
/// 5_1 and 5_2.
pub fn standard() -> Vec<(&'static str, BraidWord)> {
    [
        ("unknot", 1, vec![]),
        ("right trefoil", 2, vec![1, 1, 1]),
        ("left trefoil", 2, vec![-1, -1, -1]),
        ("figure-eight", 3, vec![1, -2, 1, -2]),
        ("5_1", 2, vec![1, 1, 1, 1, 1]),
        ("5_2", 3, vec![1, 1, 1, 2, -1, 2]),
    ]
    .into_iter()
    .map(|(name, strands, letters)| (name, BraidWord::new(strands, letters).expect("valid braid")))
    .collect()
}

pub fn by_name(name: &str) -> Option<BraidWord> {
    standard().into_iter().find(|(n, _)| *n == name).map(|(_, w)| w)
}
