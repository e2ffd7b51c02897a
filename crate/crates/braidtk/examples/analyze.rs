//! Closure invariants of a few positive braids.

use braidtk::braid::{closure_summary, BraidWord};
use braidtk::cli::analyze_json;

pub fn run_example() -> String {
    let mut out = String::new();
    for text in ["s1^3", "s1^2", "s3 s1 s2 s1 s1 s3 s2", "s1^2 s3^2"] {
        let w: BraidWord = text.parse().unwrap();
        let s = closure_summary(&w);
        out += &format!(
            "{w}: r={} b1={} g={} prime={}\n",
            s.components, s.betti, s.genus, s.prime
        );
    }
    let fig: BraidWord = "s3 s1 s2 s1 s1 s3 s2".parse().unwrap();
    out += &serde_json::to_string_pretty(&analyze_json(&fig)).unwrap();
    out.push('\n');
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
