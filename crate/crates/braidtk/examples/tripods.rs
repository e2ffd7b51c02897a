//! Neighbourhoods of tripods and chains of curves.

use braidtk::surface::{is_e_arboreal, neighborhood_summary, CurveConfiguration};

pub fn run_example() -> String {
    let mut out = String::new();
    for (a, b, c) in [(1, 2, 2), (1, 2, 6), (2, 2, 5), (3, 2, 4), (1, 4, 4)] {
        let t = CurveConfiguration::tripod(a, b, c);
        let s = neighborhood_summary(&t).unwrap();
        out += &format!(
            "T({a},{b},{c}): curves {} betti {} r {} genus {} E-arboreal {}\n",
            t.curve_count(),
            s.betti,
            s.r,
            s.h,
            is_e_arboreal(&t)
        );
    }
    for n in 1..=12 {
        let s = neighborhood_summary(&CurveConfiguration::chain(n)).unwrap();
        out += &format!("A{n}: r {} genus {}\n", s.r, s.h);
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
