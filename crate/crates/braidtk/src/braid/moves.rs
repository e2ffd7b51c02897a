use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::reduce::{strand_reduce, DEFAULT_REDUCE_BUDGET};
use super::BraidWord;

/// A single rewrite of a braid word. Positions are 0-based letter indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum Move {
    /// Swap letters `position` and `position + 1`, which must differ by at least 2.
    FarCommutation { position: usize },
    /// Rewrite σ_iσ_{i+1}σ_i ↔ σ_{i+1}σ_iσ_{i+1} starting at `position`.
    BraidRelation { position: usize },
    /// Rotate by one letter: first letter to the end, or the last letter to
    /// the front when `backward` is set.
    ElementaryConjugation { backward: bool },
    /// Append σ_N on a new strand.
    MarkovStabilize,
    /// Remove the unique σ_{N−1}.
    MarkovDestabilize,
    /// Conjugate by the half twist, σ_i ↦ σ_{N−i}.
    Flip,
    StrandReduction { column: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{mv:?} is not applicable: {reason}")]
pub struct MoveError {
    pub mv: Move,
    pub reason: String,
}

pub fn apply_move(w: &BraidWord, m: Move) -> Result<BraidWord, MoveError> {
    let fail = |reason: String| MoveError { mv: m, reason };
    let l = w.letters();
    match m {
        Move::FarCommutation { position: p } => {
            if p + 1 >= l.len() {
                return Err(fail(format!("position {p} out of range")));
            }
            if l[p].abs_diff(l[p + 1]) < 2 {
                return Err(fail(format!("letters {} and {} do not commute", l[p], l[p + 1])));
            }
            let mut out = l.to_vec();
            out.swap(p, p + 1);
            Ok(w.with_letters(out))
        }
        Move::BraidRelation { position: p } => {
            if p + 2 >= l.len() {
                return Err(fail(format!("position {p} out of range")));
            }
            let (a, b, c) = (l[p], l[p + 1], l[p + 2]);
            if a != c || a.abs_diff(b) != 1 {
                return Err(fail(format!("no braid relation at {p}: {a} {b} {c}")));
            }
            let mut out = l.to_vec();
            out[p..p + 3].copy_from_slice(&[b, a, b]);
            Ok(w.with_letters(out))
        }
        Move::ElementaryConjugation { backward } => {
            if l.is_empty() {
                return Err(fail("empty word".into()));
            }
            let mut out = l.to_vec();
            if backward {
                out.rotate_right(1);
            } else {
                out.rotate_left(1);
            }
            Ok(w.with_letters(out))
        }
        Move::MarkovStabilize => {
            let mut out = l.to_vec();
            out.push(w.strands());
            Ok(BraidWord {
                strands: w.strands() + 1,
                letters: out,
            })
        }
        Move::MarkovDestabilize => {
            let n = w.strands();
            if n < 2 {
                return Err(fail("a single strand cannot be destabilized".into()));
            }
            let hits: Vec<usize> = (0..l.len()).filter(|&k| l[k] == n - 1).collect();
            if hits.len() != 1 {
                return Err(fail(format!("σ{} occurs {} times", n - 1, hits.len())));
            }
            let mut out = l.to_vec();
            out.remove(hits[0]);
            Ok(BraidWord {
                strands: n - 1,
                letters: out,
            })
        }
        Move::Flip => Ok(w.flipped()),
        Move::StrandReduction { column } => {
            strand_reduce(w, column, DEFAULT_REDUCE_BUDGET).map_err(|e| fail(e.to_string()))
        }
    }
}
