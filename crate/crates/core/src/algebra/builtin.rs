//! Weight systems shipped with the crate. The values live in
//! `data/weight_systems.txt`.

use std::sync::OnceLock;

use crate::algebra::weight::WeightSystem;

const DATA: &str = include_str!("../../data/weight_systems.txt");

/// Splits a sectioned data file into `(header, body)` pairs.
pub(crate) fn sections(text: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        let trimmed = line.trim();
        if let Some(header) = trimmed.strip_prefix('[').and_then(|h| h.strip_suffix(']')) {
            out.push((header.trim().to_string(), String::new()));
        } else if let Some((_, body)) = out.last_mut() {
            body.push_str(line);
            body.push('\n');
        }
    }
    out
}

fn load() -> Vec<WeightSystem> {
    sections(DATA)
        .into_iter()
        .map(|(header, body)| {
            let (name, order) = header.split_once(' ').expect("section header is `name order`");
            let order: usize = order.trim().parse().expect("section order");
            WeightSystem::parse(name, &body, Some(order)).expect("builtin weight data parses")
        })
        .collect()
}

pub fn all() -> &'static [WeightSystem] {
    static ALL: OnceLock<Vec<WeightSystem>> = OnceLock::new();
    ALL.get_or_init(load)
}

pub fn by_name(name: &str) -> Option<&'static WeightSystem> {
    all().iter().find(|w| w.name() == name)
}

pub fn w2() -> &'static WeightSystem {
    by_name("W2").expect("W2 is builtin")
}

pub fn w3() -> &'static WeightSystem {
    by_name("W3").expect("W3 is builtin")
}

/// `W4_1`, `W4_2`, `W4_3` in that order.
pub fn order_four() -> Vec<&'static WeightSystem> {
    ["W4_1", "W4_2", "W4_3"].iter().map(|n| by_name(n).expect("builtin")).collect()
}
