//! From an ordered Morse divide to a positive braid.

use braidtk::braid::closure_summary;
use braidtk::divide::{divide_to_braid, OrderedMorseDivide};
use braidtk::forms::{alexander_polynomial, seifert_matrix};

pub fn run_example() -> String {
    let mut out = String::new();
    for text in [
        "lines=4; events = m1 m3 C2 C1 C3 M2",
        "lines=3; events = m1 C2 M1",
        "lines=2; events = C1",
        "lines=1; events =",
    ] {
        let d: OrderedMorseDivide = text.parse().unwrap();
        let counts = d.validate().unwrap();
        let w = divide_to_braid(&d).unwrap();
        let s = closure_summary(&w);
        let alex = seifert_matrix(&w)
            .map(|sd| alexander_polynomial(&sd).to_string())
            .unwrap_or_default();
        out += &format!(
            "{d}\n  braid {w}\n  delta={} faces={} intervals={} mu={}\n  r={} b1={} alexander {alex}\n",
            counts.delta, counts.faces, counts.intervals, counts.mu, s.components, s.betti
        );
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
