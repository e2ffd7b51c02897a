use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{apply_move, closure_summary, parse_braid, BraidWord, Move};
use crate::forms::{arf_invariant, seifert_matrix};
use crate::linking::e6_witness_in;
use crate::surface::{verify_assemblage, CurveConfiguration, SurfaceModel, TierEvidence};

pub const CERTIFICATE_VERSION: u32 = 1;

/// A replayable witness that a word admits an assemblage of type E and
/// genus at least five.
///
/// Brick indices refer to the linking graph of `working_word`. Every field
/// is determined by the word, the moves, the core and the attachment
/// order, so the serialized form is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssemblageCertificate {
    pub version: u32,
    pub input_word: String,
    pub moves: Vec<Move>,
    pub working_word: String,
    pub v0_bricks: Vec<usize>,
    /// Homological twist modifications of the core. Never needed so far.
    pub twists: Vec<[usize; 2]>,
    pub tree_edges: Vec<[usize; 2]>,
    pub e6_witness: [usize; 6],
    pub h: i64,
    pub attachment: Vec<usize>,
    pub tier_evidence: Vec<TierEvidence>,
    /// Genus of the fibre surface.
    pub genus: i64,
    /// Arf invariant of the framing, when the closure is a knot.
    pub arf: Option<u8>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("unsupported version {0}")]
    Version(u32),
    #[error("certificate is for {found}, not {expected}")]
    WrongInput { expected: String, found: String },
    #[error("move {index} fails: {reason}")]
    Move { index: usize, reason: String },
    #[error("moves lead to {reached}, certificate claims {claimed}")]
    WorkingWord { reached: String, claimed: String },
    #[error("twist modifications are not supported")]
    Twists,
    #[error("core and attachment do not partition the bricks")]
    Partition,
    #[error("tree edges do not match the core")]
    TreeEdges,
    #[error("E6 witness does not match the core")]
    Witness,
    #[error("assemblage rejected at condition ({condition}), curve {index}")]
    Assemblage { condition: char, index: usize },
    #[error("recorded {0} does not match")]
    Mismatch(&'static str),
}

fn labels(w: &BraidWord) -> (i64, Option<u8>) {
    let s = closure_summary(w);
    let arf = seifert_matrix(w).ok().and_then(|sd| arf_invariant(&sd).ok());
    (s.genus, arf)
}

pub(crate) fn build(
    input: &BraidWord,
    moves: Vec<Move>,
    working: &BraidWord,
    mut v0: Vec<usize>,
    attachment: Vec<usize>,
) -> Option<AssemblageCertificate> {
    v0.sort_unstable();
    let model = Arc::new(SurfaceModel::new(working));
    let g = model.graph();
    let order: Vec<usize> = v0.iter().chain(&attachment).copied().collect();
    let cfg = CurveConfiguration::from_model(model.clone(), &order).ok()?;
    let report = verify_assemblage(&cfg, v0.len(), 5);
    if !report.accepted {
        return None;
    }
    let (genus, arf) = labels(input);
    let cert = AssemblageCertificate {
        version: CERTIFICATE_VERSION,
        input_word: input.to_string(),
        moves,
        working_word: working.to_string(),
        tree_edges: g.induced_edges(&v0).into_iter().map(|(a, b)| [a, b]).collect(),
        e6_witness: e6_witness_in(g, &v0)?,
        v0_bricks: v0,
        twists: Vec::new(),
        h: report.h,
        tier_evidence: evidence_in_bricks(&report.evidence, &order),
        attachment,
        genus,
        arf,
    };
    debug_assert_eq!(check_certificate(input, &cert), Ok(()));
    Some(cert)
}

fn evidence_in_bricks(ev: &[TierEvidence], order: &[usize]) -> Vec<TierEvidence> {
    ev.iter()
        .map(|e| {
            let mut meets: Vec<usize> = e.meets.iter().map(|&k| order[k]).collect();
            meets.sort_unstable();
            TierEvidence {
                tier: e.tier,
                meets,
            }
        })
        .collect()
}

/// Replays a certificate from scratch and reports the first failure.
pub fn check_certificate(w: &BraidWord, cert: &AssemblageCertificate) -> Result<(), VerifyError> {
    if cert.version != CERTIFICATE_VERSION {
        return Err(VerifyError::Version(cert.version));
    }
    if cert.input_word != w.to_string() {
        return Err(VerifyError::WrongInput {
            expected: w.to_string(),
            found: cert.input_word.clone(),
        });
    }
    let mut cur = w.clone();
    for (index, &m) in cert.moves.iter().enumerate() {
        cur = apply_move(&cur, m).map_err(|e| VerifyError::Move {
            index,
            reason: e.reason,
        })?;
    }
    if cur.to_string() != cert.working_word {
        return Err(VerifyError::WorkingWord {
            reached: cur.to_string(),
            claimed: cert.working_word.clone(),
        });
    }
    if parse_braid(&cert.working_word).ok().as_ref() != Some(&cur) {
        return Err(VerifyError::Malformed("working word".into()));
    }
    if !cert.twists.is_empty() {
        return Err(VerifyError::Twists);
    }
    let model = Arc::new(SurfaceModel::new(&cur));
    let g = model.graph();
    let n = g.vertex_count();
    let v0 = &cert.v0_bricks;
    if v0.windows(2).any(|p| p[0] >= p[1]) {
        return Err(VerifyError::Partition);
    }
    let mut used = vec![false; n];
    for &b in v0.iter().chain(&cert.attachment) {
        if b >= n || used[b] {
            return Err(VerifyError::Partition);
        }
        used[b] = true;
    }
    if used.contains(&false) {
        return Err(VerifyError::Partition);
    }
    let edges: Vec<[usize; 2]> = g.induced_edges(v0).into_iter().map(|(a, b)| [a, b]).collect();
    if edges != cert.tree_edges {
        return Err(VerifyError::TreeEdges);
    }
    if e6_witness_in(g, v0) != Some(cert.e6_witness) {
        return Err(VerifyError::Witness);
    }
    let order: Vec<usize> = v0.iter().chain(&cert.attachment).copied().collect();
    let cfg = CurveConfiguration::from_model(model.clone(), &order)
        .map_err(|e| VerifyError::Malformed(e.to_string()))?;
    let report = verify_assemblage(&cfg, v0.len(), 5);
    if !report.accepted {
        return Err(VerifyError::Assemblage {
            condition: report.failed_condition.unwrap_or('?'),
            index: report.failed_index.unwrap_or(0),
        });
    }
    if report.h != cert.h {
        return Err(VerifyError::Mismatch("genus of the core"));
    }
    if evidence_in_bricks(&report.evidence, &order) != cert.tier_evidence {
        return Err(VerifyError::Mismatch("tier evidence"));
    }
    if labels(w) != (cert.genus, cert.arf) {
        return Err(VerifyError::Mismatch("genus and Arf labels"));
    }
    Ok(())
}

pub fn verify_certificate(w: &BraidWord, cert: &AssemblageCertificate) -> bool {
    check_certificate(w, cert).is_ok()
}

/// Parses and checks a serialized certificate against `w`.
pub fn verify_certificate_json(w: &BraidWord, json: &str) -> Result<(), VerifyError> {
    let cert: AssemblageCertificate =
        serde_json::from_str(json).map_err(|e| VerifyError::Malformed(e.to_string()))?;
    if serde_json::to_string(&cert).ok().as_deref() != Some(json) {
        return Err(VerifyError::Malformed("not in canonical form".into()));
    }
    check_certificate(w, &cert)
}
