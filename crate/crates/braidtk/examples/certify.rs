//! Certifying braids and replaying the certificates.

use braidtk::braid::BraidWord;
use braidtk::certifier::{
    certify, search_assemblage, verify_certificate_json, Budget, CertifyOutcome,
};

fn describe(w: &BraidWord, o: &CertifyOutcome) -> String {
    match o {
        CertifyOutcome::Certified(c) => {
            let json = serde_json::to_string(c).unwrap();
            let ok = verify_certificate_json(w, &json).is_ok();
            format!(
                "certified via {} with core {:?}, h={}, replay {}",
                c.working_word,
                c.v0_bricks,
                c.h,
                if ok { "ok" } else { "FAILED" }
            )
        }
        other => format!("{} (exit {})", other.label(), other.exit_code()),
    }
}

pub fn run_example() -> String {
    let budget = Budget::default();
    let mut out = String::new();
    for text in [
        "s1^2 s2^2 s1^2 s2^2 s1^2 s2^3",
        "s1^5",
        "s1^5 s2 s1^2 s2 s1^2 s2",
        "s1^2 s2 s1^3 s2^2 s1^2 s2^2",
    ] {
        let w: BraidWord = text.parse().unwrap();
        out += &format!("{w}: {}\n", describe(&w, &certify(&w, budget)));
    }
    // A link: gated by certify, but the search itself still applies.
    let w: BraidWord = "s1^2 s2 s1^2 s2 s1^2 s2 s1^2 s2 s1^2 s2^2".parse().unwrap();
    out += &format!("{w}: {}\n", describe(&w, &certify(&w, budget)));
    out += &format!("{w}: search only, {}\n", describe(&w, &search_assemblage(&w, budget)));
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
