mod common;

use std::fs;
use std::path::Path;

use braidtk::braid::{closure_summary, BraidWord};
use braidtk::divide::{divide_to_braid, EmissionTable, Event, OrderedMorseDivide};
use braidtk::forms::{alexander_polynomial, seifert_matrix};
use proptest::prelude::*;

pub fn fixtures() -> Vec<(String, OrderedMorseDivide)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/divides");
    let mut out: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            (name, text.trim().parse().unwrap())
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[test]
fn fixture_faces_match_raster() {
    for (name, d) in fixtures() {
        let c = d.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(c.faces, common::raster_faces(&d), "{name}");
    }
}

#[test]
fn fixture_braids_have_divide_counts() {
    for (name, d) in fixtures() {
        let c = d.validate().unwrap();
        assert!(d.is_connected().unwrap(), "{name}");
        let s = closure_summary(&divide_to_braid(&d).unwrap());
        assert_eq!(s.betti as usize, c.delta + c.faces, "{name}");
        assert_eq!(s.components, c.intervals, "{name}");
    }
}

#[test]
fn four_line_divide() {
    let d: OrderedMorseDivide = "lines=4; events = m1 m3 C2 C1 C3 M2".parse().unwrap();
    let c = d.validate().unwrap();
    assert_eq!((c.delta, c.faces, c.intervals, c.mu), (3, 3, 1, 6));
    let w = divide_to_braid(&d).unwrap();
    let s = closure_summary(&w);
    assert_eq!((s.components, s.betti), (1, 6));
    let torus: BraidWord = "s1 s2 s3 s1 s2 s3 s1 s2 s3".parse().unwrap();
    let a = alexander_polynomial(&seifert_matrix(&w).unwrap());
    let b = alexander_polynomial(&seifert_matrix(&torus).unwrap());
    assert_eq!(a.normalized(), b.normalized());
    assert_eq!(common::burau_det(&w), common::burau_det(&torus));
}

#[test]
fn rejects_bad_divides() {
    for bad in [
        "lines=2; events = C1 m1",
        "lines=2; events = C2",
        "lines=3; events = m1 m2",
        "lines=2; events = m1 M1",
    ] {
        let d: OrderedMorseDivide = bad.parse().unwrap();
        assert!(d.validate().is_err(), "{bad}");
    }
}

fn shift(d: &OrderedMorseDivide, by: usize) -> Vec<Event> {
    d.events
        .iter()
        .map(|e| match *e {
            Event::Crossing(j) => Event::Crossing(j + by),
            Event::Min(j) => Event::Min(j + by),
            Event::Max(j) => Event::Max(j + by),
        })
        .collect()
}

/// Random ordered Morse event words: caps on disjoint level pairs, then
/// crossings.
fn divide_strategy() -> impl Strategy<Value = OrderedMorseDivide> {
    (2usize..=5)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(1..n, 0..3),
                proptest::collection::vec(1..n, 1..7),
                proptest::collection::vec(1..n, 0..3),
            )
        })
        .prop_map(|(n, mins, cs, maxs)| {
            let caps = |v: Vec<usize>, f: fn(usize) -> Event| {
                let mut used = vec![false; n + 2];
                let mut out = Vec::new();
                for j in v {
                    if !used[j] && !used[j + 1] {
                        used[j] = true;
                        used[j + 1] = true;
                        out.push(f(j));
                    }
                }
                out
            };
            let mut events = caps(mins, Event::Min);
            events.extend(cs.into_iter().map(Event::Crossing));
            events.extend(caps(maxs, Event::Max));
            OrderedMorseDivide::new(n, events)
        })
}

proptest! {
    #[test]
    fn faces_match_raster(d in divide_strategy()) {
        if let Ok(c) = d.validate() {
            prop_assert_eq!(c.faces, common::raster_faces(&d), "{}", d);
        }
    }

    #[test]
    fn connected_divides_give_mu_and_intervals(d in divide_strategy()) {
        if let (Ok(c), Ok(true)) = (d.validate(), d.is_connected()) {
            let s = closure_summary(&divide_to_braid(&d).unwrap());
            prop_assert_eq!(s.betti as usize, c.mu, "{}", d);
            prop_assert_eq!(s.components, c.intervals, "{}", d);
        }
    }

    #[test]
    fn emission_is_local(d in divide_strategy()) {
        if let Ok(true) = d.is_connected() {
            let w = divide_to_braid(&d).unwrap();
            let forward = d.events.iter().map(|e| e.level());
            let back = d.events.iter().rev().filter_map(|e| match *e {
                Event::Crossing(j) => Some(j),
                _ => None,
            });
            let each: Vec<usize> = forward.chain(back).collect();
            prop_assert_eq!(w.letters(), &each[..]);
        }
    }

    #[test]
    fn side_by_side_counts_add(a in divide_strategy(), b in divide_strategy()) {
        let (Ok(ca), Ok(cb)) = (a.validate(), b.validate()) else {
            return Ok(());
        };
        let rank = |e: &Event| match e {
            Event::Min(_) => 0,
            Event::Crossing(_) => 1,
            Event::Max(_) => 2,
        };
        let mut events: Vec<Event> = a.events.iter().copied().chain(shift(&b, a.lines)).collect();
        events.sort_by_key(rank);
        let both = OrderedMorseDivide::new(a.lines + b.lines, events);
        let c = both.validate().unwrap();
        prop_assert_eq!(c.delta, ca.delta + cb.delta);
        prop_assert_eq!(c.faces, ca.faces + cb.faces);
        prop_assert_eq!(c.intervals, ca.intervals + cb.intervals);
        prop_assert!(!both.is_connected().unwrap());
        prop_assert!(divide_to_braid(&both).is_err());
    }
}

#[test]
fn fishtail_is_a_trefoil() {
    let d: OrderedMorseDivide = "lines=3; events = m1 C2 M1".parse().unwrap();
    let w = divide_to_braid(&d).unwrap();
    assert_eq!(w.letters(), &[1, 2, 1, 2]);
    assert_eq!(closure_summary(&w).components, 1);
    let adjacent = d.to_braid(EmissionTable::ADJACENT).unwrap().word;
    assert_eq!(closure_summary(&adjacent).components, 3);
}
