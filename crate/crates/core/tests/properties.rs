use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vassiliev::diagrams::{Role, Sign};
use vassiliev::invariants::{derivative_eval, Formula};
use vassiliev::moves::{r1_delete, r1_insert, r2_delete, r2_insert, random_rewrite};
use vassiliev::rational::int;
use vassiliev::{corpus, BraidWord, ChordDiagram, GaussDiagram, SingularGaussDiagram, WeightSystem};

fn low_order() -> [Formula; 4] {
    [Formula::V2PolyakViro, Formula::V2Lannes, Formula::V3PolyakViro, Formula::V3Lannes]
}

fn knot_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=4, prop::collection::vec((1i32..4, any::<bool>()), 0..9)).prop_filter_map("closure is a knot", |(s, l)| {
        let letters: Vec<i32> = l.into_iter().map(|(x, p)| (1 + (x - 1) % (s as i32 - 1)) * if p { 1 } else { -1 }).collect();
        BraidWord::new(s, letters).ok().filter(BraidWord::is_knot)
    })
}

/// An arbitrary (possibly non-planar) Gauss diagram.
fn any_diagram() -> impl Strategy<Value = GaussDiagram> {
    (0usize..7).prop_flat_map(|n| {
        (Just(n), Just((0..2 * n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
    })
    .prop_map(|(n, order, signs)| {
        let mut tokens = vec![String::new(); 2 * n];
        for (k, pair) in order.chunks(2).enumerate() {
            let s = if signs[k] { '+' } else { '-' };
            tokens[pair[0]] = format!("O{}{s}", k + 1);
            tokens[pair[1]] = format!("U{}{s}", k + 1);
        }
        tokens.join(" ").parse().unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_rotation(d in (1usize..6).prop_flat_map(|n| prop::sample::select(ChordDiagram::enumerate(n).into_iter().collect::<Vec<_>>())), r in 0usize..12) {
        let inv = d.involution();
        let m = inv.len();
        let rotated: Vec<usize> = (0..m).map(|i| (inv[(i + r) % m] + m - r % m) % m).collect();
        prop_assert_eq!(ChordDiagram::from_involution(rotated).unwrap(), d);
    }

    #[test]
    fn gauss_code_round_trip(g in any_diagram()) {
        let back: GaussDiagram = g.to_string().parse().unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(g.mirror().mirror(), g);
    }

    #[test]
    fn rewrites_preserve_low_order_invariants(w in knot_word(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = w.closure().unwrap();
        let mut cur = w;
        for _ in 0..6 {
            cur = random_rewrite(&cur, &mut rng);
        }
        let h = cur.closure().unwrap();
        for f in low_order() {
            prop_assert_eq!(f.eval(&g), f.eval(&h), "{} on {} vs {}", f, g, h);
        }
    }

    #[test]
    fn basepoint_shifts(w in knot_word(), k in 0usize..40) {
        let g = w.closure().unwrap();
        let h = g.shift_basepoint(k);
        for f in Formula::all() {
            prop_assert_eq!(f.eval(&g), f.eval(&h), "{}", f);
        }
    }

    #[test]
    fn mirror_signs(w in knot_word()) {
        let g = w.closure().unwrap();
        let m = g.mirror();
        prop_assert_eq!(Formula::V2PolyakViro.eval(&g), Formula::V2PolyakViro.eval(&m));
        prop_assert_eq!(Formula::V3PolyakViro.eval(&g), -Formula::V3PolyakViro.eval(&m));
        prop_assert_eq!(Formula::V3Lannes.eval(&g), -Formula::V3Lannes.eval(&m));
    }

    #[test]
    fn reidemeister_one(w in knot_word(), arc in 0usize..40, over in any::<bool>(), positive in any::<bool>()) {
        let g = w.closure().unwrap();
        let arc = arc % (g.endpoints().len() + 1);
        let role = if over { Role::Over } else { Role::Under };
        let sign = if positive { Sign::Positive } else { Sign::Negative };
        let h = r1_insert(&g, arc, role, sign).unwrap();
        for f in Formula::all() {
            prop_assert_eq!(f.eval(&g), f.eval(&h), "{}", f);
        }
        prop_assert_eq!(r1_delete(&h, g.max_id() + 1).unwrap(), g);
    }

    #[test]
    fn reidemeister_two(w in knot_word(), a1 in 0usize..40, a2 in 0usize..40, over in any::<bool>()) {
        let g = w.closure().unwrap();
        let arcs = g.endpoints().len() + 1;
        if let Ok(h) = r2_insert(&g, a1 % arcs, a2 % arcs, over) {
            for f in low_order() {
                prop_assert_eq!(f.eval(&g), f.eval(&h), "{}", f);
            }
            prop_assert_eq!(r2_delete(&h, g.max_id() + 1, g.max_id() + 2).unwrap(), g);
        }
    }

    #[test]
    fn order_bound_on_any_diagram(g in any_diagram(), pick in any::<u64>()) {
        for f in Formula::all() {
            let k = f.order() + 1;
            if g.order() < k {
                continue;
            }
            let ids: Vec<u32> = g.crossings().collect();
            let chosen: BTreeSet<u32> = (0..k).map(|i| ids[(pick as usize + 3 * i) % ids.len()]).collect();
            if chosen.len() < k {
                continue;
            }
            let sd = SingularGaussDiagram::flatten(&g, &chosen);
            prop_assert_eq!(derivative_eval(|x| f.eval(x), &sd), int(0), "{} on {}", f, sd);
        }
    }

    #[test]
    fn weight_systems_form_a_space(a in -3i64..4, b in -3i64..4, c in -3i64..4) {
        let ws = vassiliev::algebra::builtin::order_four();
        let mut values = std::collections::BTreeMap::new();
        for (w, k) in ws.iter().zip([a, b, c]) {
            for (d, v) in w.values() {
                *values.entry(d.clone()).or_insert_with(|| int(0)) += v * int(k);
            }
        }
        let combo = WeightSystem::new("combo", 4, values).unwrap();
        prop_assert!(combo.check().is_empty());
    }
}

#[test]
fn corpus_knots_are_knots() {
    for (name, w) in corpus::standard() {
        assert!(w.is_knot(), "{name}");
    }
}
