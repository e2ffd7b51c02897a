//! Searching positive braids for assemblage certificates.

mod certificate;
mod enumerate;
mod search;

use serde::{Deserialize, Serialize};

use crate::braid::{closure_summary, BraidWord};
use crate::linking::{dynkin_type, linking_graph, DynkinType};

pub use certificate::{
    check_certificate, verify_certificate, verify_certificate_json, AssemblageCertificate,
    VerifyError, CERTIFICATE_VERSION,
};
pub use enumerate::{
    classify, enumerate_and_classify, extended_d_word, three_braid_normal_forms, Family, Row,
    TSV_HEADER,
};

/// Search limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Words visited by the move search, and subtrees examined per word.
    pub states: usize,
    /// Braid relations applied along any search branch.
    pub depth: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            states: 100_000,
            depth: 12,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Gate {
    NotPrime,
    NotAKnot,
    /// The linking graph is a path.
    TypeA,
    /// Genus below five.
    Genus,
}

impl std::fmt::Display for Gate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Gate::NotPrime => "not prime",
            Gate::NotAKnot => "not a knot",
            Gate::TypeA => "type A_n (path linking graph)",
            Gate::Genus => "genus below 5",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetReport {
    pub states: usize,
    pub depth: usize,
    pub exhausted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "snake_case")]
pub enum CertifyOutcome {
    Certified(Box<AssemblageCertificate>),
    KnownException(String),
    NotApplicable(Gate),
    Unknown(BudgetReport),
}

impl CertifyOutcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            CertifyOutcome::Certified(_) => 0,
            CertifyOutcome::KnownException(_) => 3,
            CertifyOutcome::NotApplicable(_) => 4,
            CertifyOutcome::Unknown(_) => 5,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            CertifyOutcome::Certified(_) => "certified",
            CertifyOutcome::KnownException(_) => "known_exception",
            CertifyOutcome::NotApplicable(_) => "not_applicable",
            CertifyOutcome::Unknown(_) => "unknown",
        }
    }
}

/// Three-braids for which no core is known.
pub const KNOWN_EXCEPTIONS: [&str; 3] = [
    "s1^2 s2^2 s1^2 s2^2 s1^2 s2^3",
    "s1^3 s2^2 s1^2 s2^2 s1^2 s2^2",
    "s1^3 s2 s1^3 s2^2 s1^2 s2^2",
];

fn symmetry_class(w: &BraidWord) -> Vec<BraidWord> {
    let mut out: Vec<BraidWord> = [w.clone(), w.flipped(), w.reversed(), w.flipped().reversed()]
        .iter()
        .map(|v| v.least_rotation().1)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Name of the known exception `w` is a rotation, flip or reversal of.
pub fn known_exception(w: &BraidWord) -> Option<&'static str> {
    if w.strands() != 3 {
        return None;
    }
    let mine = symmetry_class(w);
    KNOWN_EXCEPTIONS.iter().copied().find(|word| {
        let e: BraidWord = word.parse().unwrap();
        symmetry_class(&e).iter().any(|x| mine.contains(x))
    })
}

/// The gate `w` fails, if any.
pub fn gate(w: &BraidWord) -> Option<Gate> {
    let s = closure_summary(w);
    if !s.prime {
        return Some(Gate::NotPrime);
    }
    if s.components != 1 {
        return Some(Gate::NotAKnot);
    }
    if matches!(dynkin_type(&linking_graph(w)), DynkinType::A(_)) {
        return Some(Gate::TypeA);
    }
    if s.genus < 5 {
        return Some(Gate::Genus);
    }
    None
}

/// Runs the gates and then the search.
pub fn certify(w: &BraidWord, budget: Budget) -> CertifyOutcome {
    if let Some(name) = known_exception(w) {
        return CertifyOutcome::KnownException(name.to_string());
    }
    if let Some(g) = gate(w) {
        return CertifyOutcome::NotApplicable(g);
    }
    search_assemblage(w, budget)
}

/// The search alone, without gates or the exception list. Links are
/// searched like knots; the span condition then asks for every boundary
/// component of the fibre surface.
pub fn search_assemblage(w: &BraidWord, budget: Budget) -> CertifyOutcome {
    let r = search::bfs(w, budget);
    match r.found {
        Some((moves, working, found)) => {
            match certificate::build(w, moves, &working, found.v0, found.attachment) {
                Some(cert) => CertifyOutcome::Certified(Box::new(cert)),
                None => CertifyOutcome::Unknown(BudgetReport {
                    states: r.states,
                    depth: r.depth,
                    exhausted: false,
                }),
            }
        }
        None => CertifyOutcome::Unknown(BudgetReport {
            states: r.states,
            depth: r.depth,
            exhausted: r.exhausted,
        }),
    }
}
