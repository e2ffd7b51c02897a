use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use super::BraidWord;
use crate::linking::linking_graph;

pub const DEFAULT_REDUCE_BUDGET: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReduceError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("normalization budget exhausted after {states} states")]
    BudgetExhausted { states: usize },
}

/// Removes the strand between columns whose single letter is σ_k.
///
/// The closure of `uσ_k` is the connected sum of the closures of the
/// parts of `u` on either side, which is also the closure of the word with
/// the two middle strands merged.
pub fn contract_column(w: &BraidWord, k: usize) -> Option<BraidWord> {
    let l = w.letters();
    let hits: Vec<usize> = (0..l.len()).filter(|&p| l[p] == k).collect();
    if hits.len() != 1 || w.strands() < 2 {
        return None;
    }
    let p = hits[0];
    let rest = l[p + 1..].iter().chain(&l[..p]);
    let left: Vec<usize> = rest.clone().copied().filter(|&x| x < k).collect();
    let right = rest.copied().filter(|&x| x > k).map(|x| x - 1);
    let letters = left.into_iter().chain(right).collect();
    Some(BraidWord {
        strands: w.strands() - 1,
        letters,
    })
}

/// Tries to make `σ_p σ_q σ_s` (a braid relation pattern) adjacent by far
/// commutations and then applies the relation.
pub(crate) fn gather_relation(l: &[usize], p: usize, q: usize, s: usize) -> Option<Vec<usize>> {
    let (a, b) = (l[p], l[q]);
    if l[s] != a || a.abs_diff(b) != 1 {
        return None;
    }
    let commutes = |x: usize, y: usize| x.abs_diff(y) >= 2;
    let between: Vec<usize> = (p + 1..s).filter(|&k| k != q).collect();
    let can_left = |k: usize| {
        if k < q {
            commutes(l[k], a)
        } else {
            commutes(l[k], a) && commutes(l[k], b)
        }
    };
    let can_right = |k: usize| {
        if k < q {
            commutes(l[k], a) && commutes(l[k], b)
        } else {
            commutes(l[k], a)
        }
    };
    for prefer_left in [true, false] {
        let mut side = Vec::with_capacity(between.len());
        let mut ok = true;
        for &k in &between {
            let go_left = match (can_left(k), can_right(k)) {
                (true, true) => prefer_left,
                (true, false) => true,
                (false, true) => false,
                (false, false) => {
                    ok = false;
                    break;
                }
            };
            side.push(go_left);
        }
        if !ok {
            return None;
        }
        // An earlier letter moving right must pass every later letter moving left.
        let crossing_ok = (0..between.len()).all(|x| {
            side[x]
                || (x + 1..between.len())
                    .all(|y| !side[y] || commutes(l[between[x]], l[between[y]]))
        });
        if !crossing_ok {
            continue;
        }
        let mut out = l[..p].to_vec();
        out.extend(between.iter().zip(&side).filter(|(_, &s)| s).map(|(&k, _)| l[k]));
        out.extend([b, a, b]);
        out.extend(between.iter().zip(&side).filter(|(_, &s)| !s).map(|(&k, _)| l[k]));
        out.extend(&l[s + 1..]);
        return Some(out);
    }
    None
}

/// All words reachable by one braid relation on letters from `allowed`,
/// after any rotation and the far commutations needed to bring it together.
pub(crate) fn relation_neighbours(
    w: &BraidWord,
    allowed: impl Fn(usize, usize) -> bool,
) -> Vec<BraidWord> {
    let n = w.len();
    let mut out = Vec::new();
    for r in 0..n {
        let rot = w.rotated(r);
        let l = rot.letters();
        for p in 0..n {
            for q in p + 1..n {
                if l[p].abs_diff(l[q]) != 1 || !allowed(l[p], l[q]) {
                    continue;
                }
                // s is the next occurrence of l[p] after q.
                let Some(s) = (q + 1..n).find(|&s| l[s] == l[p]) else {
                    continue;
                };
                if (p + 1..q).any(|k| l[k] == l[p] || l[k] == l[q])
                    || (q + 1..s).any(|k| l[k] == l[q])
                {
                    continue;
                }
                if let Some(v) = gather_relation(l, p, q, s) {
                    out.push(w.with_letters(v));
                }
            }
        }
    }
    out
}

fn is_path_graph(w: &BraidWord) -> bool {
    let g = linking_graph(w);
    let n = g.vertex_count();
    n == 0 || (g.is_connected() && g.edge_count() == n - 1 && (0..n).all(|v| g.degree(v) <= 2))
}

/// Removes one strand from a prime word whose subword on σ_i, σ_{i+1} has a
/// path as linking graph, keeping the closure.
pub fn strand_reduce(w: &BraidWord, i: usize, budget: usize) -> Result<BraidWord, ReduceError> {
    let n = w.strands();
    if n < 3 {
        return Err(ReduceError::PreconditionViolated(format!(
            "{n} strands, at least 3 needed"
        )));
    }
    if i == 0 || i + 1 >= n {
        return Err(ReduceError::PreconditionViolated(format!(
            "columns {i}, {} do not both exist",
            i + 1
        )));
    }
    if !crate::linking::is_prime(w) {
        return Err(ReduceError::PreconditionViolated("word is not prime".into()));
    }
    let sub: Vec<usize> = w
        .letters()
        .iter()
        .filter(|&&l| l == i || l == i + 1)
        .map(|&l| l - i + 1)
        .collect();
    if !is_path_graph(&BraidWord::new(3, sub).unwrap()) {
        return Err(ReduceError::PreconditionViolated(format!(
            "subword on columns {i}, {} is not path-shaped",
            i + 1
        )));
    }
    let start = w.least_rotation().1;
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        for k in [i, i + 1] {
            if cur.column_count(k) == 1 {
                return Ok(contract_column(&cur, k).unwrap());
            }
        }
        for next in relation_neighbours(&cur, |a, b| a.min(b) == i && a.max(b) == i + 1) {
            let next = next.least_rotation().1;
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(ReduceError::BudgetExhausted { states: seen.len() });
                }
                queue.push_back(next);
            }
        }
    }
    Err(ReduceError::BudgetExhausted { states: seen.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{closure_summary, parse_braid};

    #[test]
    fn three_strand_normal_form() {
        let w = parse_braid("s1^3 s2 s1 s2^2").unwrap();
        let r = strand_reduce(&w, 1, DEFAULT_REDUCE_BUDGET).unwrap();
        assert_eq!((r.strands(), r.letters()), (2, &[1; 6][..]));
        assert_eq!(closure_summary(&r).betti, closure_summary(&w).betti);
    }

    #[test]
    fn guard_cases() {
        let w = parse_braid("s1^3").unwrap();
        assert!(matches!(
            strand_reduce(&w, 1, 100),
            Err(ReduceError::PreconditionViolated(_))
        ));
        let w = parse_braid("s1^2 s2^2 s1^2 s2^2").unwrap();
        assert!(matches!(
            strand_reduce(&w, 1, 100),
            Err(ReduceError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn contraction_keeps_sides() {
        let w = parse_braid("s1 s3 s2 s1 s3").unwrap();
        let c = contract_column(&w, 2).unwrap();
        assert_eq!((c.strands(), c.letters()), (3, &[1, 1, 2, 2][..]));
    }

    #[test]
    fn gathering_past_far_letters() {
        // s1 s3 s2 s1: the s3 moves out of the way.
        let out = gather_relation(&[1, 3, 2, 1], 0, 2, 3).unwrap();
        assert_eq!(out, vec![3, 2, 1, 2]);
        assert_eq!(gather_relation(&[1, 2, 3, 1], 0, 1, 3).unwrap(), vec![2, 1, 2, 3]);
        assert!(gather_relation(&[2, 1, 3, 2], 0, 1, 3).is_none());
    }
}
