//! Reidemeister I and II moves on Gauss diagrams.
//!
//! Arcs are indexed by insertion gaps: arc `i` lies just before endpoint `i`,
//! so a diagram with `2n` endpoints has `2n + 1` arcs and arcs `0` and `2n`
//! lie on the same edge. Edge `k` runs from endpoint `k` to endpoint `k + 1`.

use std::collections::BTreeMap;

use crate::diagrams::gauss::{Endpoint, GaussDiagram, Role, Sign};
use crate::error::MoveError;

/// A side of an edge: the edge index and whether the face boundary runs
/// along the knot orientation.
pub type Dart = (usize, bool);

/// Faces of the planar diagram, each traced with the face on the left.
///
/// The rotation at a crossing is read from its sign; for Gauss codes that
/// are not planar the result is still a partition of darts, but the Euler
/// characteristic comes out below 2.
pub fn faces(g: &GaussDiagram) -> Vec<Vec<Dart>> {
    let len = g.endpoints().len();
    if len == 0 {
        return vec![vec![(0, true)], vec![(0, false)]];
    }
    // Half-edge: (position, outgoing).
    let mut over = BTreeMap::new();
    let mut under = BTreeMap::new();
    for (i, e) in g.endpoints().iter().enumerate() {
        match e.role {
            Role::Over => over.insert(e.crossing, i),
            Role::Under => under.insert(e.crossing, i),
        };
    }
    let rotation = |pos: usize| -> [(usize, bool); 4] {
        let c = g.endpoints()[pos].crossing;
        let (p, q) = (over[&c], under[&c]);
        match g.sign(c).expect("validated") {
            Sign::Positive => [(p, true), (q, true), (p, false), (q, false)],
            Sign::Negative => [(p, true), (q, false), (p, false), (q, true)],
        }
    };
    let next = |(k, forward): Dart| -> Dart {
        let arrival = if forward { ((k + 1) % len, false) } else { (k, true) };
        let rot = rotation(arrival.0);
        let idx = rot.iter().position(|&h| h == arrival).expect("half-edge at its crossing");
        let (j, out) = rot[(idx + 3) % 4];
        if out {
            (j, true)
        } else {
            ((j + len - 1) % len, false)
        }
    };
    let mut seen = vec![[false; 2]; len];
    let mut result = Vec::new();
    for start in (0..len).flat_map(|k| [(k, true), (k, false)]) {
        if seen[start.0][start.1 as usize] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d.0][d.1 as usize] {
            seen[d.0][d.1 as usize] = true;
            face.push(d);
            d = next(d);
        }
        result.push(face);
    }
    result
}

fn edge_of(g: &GaussDiagram, arc: usize) -> Result<usize, MoveError> {
    let len = g.endpoints().len();
    if arc > len {
        return Err(MoveError::ArcOutOfRange { arc, arcs: len + 1 });
    }
    Ok(if len == 0 { 0 } else { (arc + len - 1) % len })
}

fn insert_at(g: &GaussDiagram, inserts: &mut [(usize, Vec<Endpoint>)], signs: &[(u32, Sign)]) -> GaussDiagram {
    inserts.sort_by_key(|(arc, _)| *arc);
    let mut endpoints = Vec::with_capacity(g.endpoints().len() + 4);
    let mut it = inserts.iter().peekable();
    for i in 0..=g.endpoints().len() {
        while let Some((_, es)) = it.next_if(|(arc, _)| *arc == i) {
            endpoints.extend_from_slice(es);
        }
        if let Some(&e) = g.endpoints().get(i) {
            endpoints.push(e);
        }
    }
    let mut all = g.signs().clone();
    all.extend(signs.iter().copied());
    GaussDiagram::from_parts_unchecked(endpoints, all)
}

fn remove(g: &GaussDiagram, ids: &[u32]) -> GaussDiagram {
    let endpoints = g.endpoints().iter().filter(|e| !ids.contains(&e.crossing)).copied().collect();
    let signs = g.signs().iter().filter(|(id, _)| !ids.contains(id)).map(|(&k, &v)| (k, v)).collect();
    GaussDiagram::from_parts_unchecked(endpoints, signs)
}

/// Adds a kink on `arc`; the strand first passes the new crossing as `first`.
pub fn r1_insert(g: &GaussDiagram, arc: usize, first: Role, sign: Sign) -> Result<GaussDiagram, MoveError> {
    edge_of(g, arc)?;
    let id = g.max_id() + 1;
    let pair = vec![Endpoint { crossing: id, role: first }, Endpoint { crossing: id, role: first.flip() }];
    Ok(insert_at(g, &mut [(arc, pair)], &[(id, sign)]))
}

/// Removes a kink: both passages of `crossing` must be cyclically adjacent.
pub fn r1_delete(g: &GaussDiagram, crossing: u32) -> Result<GaussDiagram, MoveError> {
    g.sign(crossing).ok_or(MoveError::UnknownCrossing(crossing))?;
    let len = g.endpoints().len();
    let pos: Vec<usize> = (0..len).filter(|&i| g.endpoints()[i].crossing == crossing).collect();
    let d = pos[1] - pos[0];
    if d != 1 && d != len - 1 {
        return Err(MoveError::NotRemovable(crossing));
    }
    Ok(remove(g, &[crossing]))
}

/// Pushes a finger of `arc1` across `arc2`, over it when `arc1_over`.
/// The arcs must lie on distinct edges of a common face.
pub fn r2_insert(g: &GaussDiagram, arc1: usize, arc2: usize, arc1_over: bool) -> Result<GaussDiagram, MoveError> {
    let (e1, e2) = (edge_of(g, arc1)?, edge_of(g, arc2)?);
    if e1 == e2 {
        return Err(MoveError::SameEdge(arc1, arc2));
    }
    let (s1, s2) = faces(g)
        .iter()
        .find_map(|f| {
            let a = f.iter().find(|d| d.0 == e1)?;
            let b = f.iter().find(|d| d.0 == e2)?;
            Some((if a.1 { 1 } else { -1 }, if b.1 { 1 } else { -1 }))
        })
        .ok_or(MoveError::NoCommonFace(arc1, arc2))?;
    let (a, b) = (g.max_id() + 1, g.max_id() + 2);
    let r1 = if arc1_over { Role::Over } else { Role::Under };
    let r2 = r1.flip();
    let ep = |crossing, role| Endpoint { crossing, role };
    let first = vec![ep(a, r1), ep(b, r1)];
    let second = if s1 * s2 == -1 { vec![ep(a, r2), ep(b, r2)] } else { vec![ep(b, r2), ep(a, r2)] };
    let ea = Sign::from_value(if arc1_over { s2 } else { -s2 });
    Ok(insert_at(g, &mut [(arc1, first), (arc2, second)], &[(a, ea), (b, ea.flip())]))
}

/// Removes a bigon formed by crossings `a` and `b`.
pub fn r2_delete(g: &GaussDiagram, a: u32, b: u32) -> Result<GaussDiagram, MoveError> {
    let sa = g.sign(a).ok_or(MoveError::UnknownCrossing(a))?;
    let sb = g.sign(b).ok_or(MoveError::UnknownCrossing(b))?;
    if a == b || sa == sb {
        return Err(MoveError::NotRemovable(b));
    }
    let eps = g.endpoints();
    let len = eps.len();
    // Edges running between a and b on the same level.
    let between: Vec<usize> = (0..len)
        .filter(|&k| {
            let (x, y) = (eps[k], eps[(k + 1) % len]);
            x.role == y.role && ((x.crossing, y.crossing) == (a, b) || (x.crossing, y.crossing) == (b, a))
        })
        .collect();
    if between.len() != 2 || eps[between[0]].role == eps[between[1]].role {
        return Err(MoveError::NotRemovable(b));
    }
    let bigon = faces(g).iter().any(|f| f.len() == 2 && f.iter().all(|d| between.contains(&d.0)));
    if !bigon {
        return Err(MoveError::NotRemovable(b));
    }
    Ok(remove(g, &[a, b]))
}
