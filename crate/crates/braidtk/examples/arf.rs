//! Seifert forms, Alexander polynomials and the Arf invariant two ways.

use braidtk::braid::BraidWord;
use braidtk::forms::{alexander_polynomial, arf_invariant, arf_via_determinant, seifert_matrix};

pub fn run_example() -> String {
    let mut out = String::new();
    for text in ["s1^3", "s1^5", "s1^7", "s1 s2 s1 s2", "s1 s2 s3 s1 s2 s3 s1 s2 s3", "s1^3 s2 s1^2 s2^2"] {
        let w: BraidWord = text.parse().unwrap();
        let sd = seifert_matrix(&w).unwrap();
        out += &format!(
            "{w}: alexander {} arf {} (via determinant {})\n",
            alexander_polynomial(&sd),
            arf_invariant(&sd).unwrap(),
            arf_via_determinant(&sd).unwrap()
        );
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
