use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{closure_summary, BraidWord};
use crate::forms::{arf_invariant, seifert_matrix};
use crate::linking::{dynkin_type, linking_graph};

use super::{certify, Budget, CertifyOutcome};

/// Word families for batch classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// Three-braids σ1^{a1}σ2^{b1}···σ1^{am}σ2^{bm} with a_i ≥ 2, b_i ≥ 1
    /// and first Betti number in the range, one per cyclic class of pairs.
    ThreeBraids { min_betti: i64, max_betti: i64 },
    /// Every word with at most `crossings` letters on `strands` strands.
    AllWords { crossings: usize, strands: usize },
    /// σ1^a σ2 σ3^b σ2 σ1^c σ2 σ3^d σ2 σ1^e, exponents up to `max`.
    FamilyA { max: usize },
    /// β1 σ2σ3 β2 σ3σ2 β3 with β1, β3 over σ3, σ4 and β2 over σ1, σ2.
    FamilyB { max: usize },
    /// β1 σ2 β2 σ2σ3 β3 σ3 β4 with β1, β4 over σ1, σ4, β2 over σ3, σ4 and
    /// β3 over σ1, σ2, or a power of σ1σ2 when `power` is set.
    FamilyC { max: usize, power: bool },
    /// σ1σ2²σ1σ2^{n−4}σ3σ2²σ3 for 4 ≤ n ≤ `max_n`.
    ExtendedD { max_n: usize },
}

impl FromStr for Family {
    type Err = String;

    /// `three-braids:10-14`, `words:8:4`, `family-a:3`, `family-b:3`,
    /// `family-c:3`, `family-c-power:3`, `extended-d:12`.
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("unknown family `{s}`");
        let (name, rest) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        Ok(match name {
            "three-braids" => {
                let (a, b) = rest.split_once('-').unwrap_or((rest, rest));
                Family::ThreeBraids {
                    min_betti: num(a)? as i64,
                    max_betti: num(b)? as i64,
                }
            }
            "words" => {
                let (c, n) = rest.split_once(':').ok_or_else(bad)?;
                Family::AllWords {
                    crossings: num(c)?,
                    strands: num(n)?,
                }
            }
            "family-a" => Family::FamilyA { max: num(rest)? },
            "family-b" => Family::FamilyB { max: num(rest)? },
            "family-c" => Family::FamilyC {
                max: num(rest)?,
                power: false,
            },
            "family-c-power" => Family::FamilyC {
                max: num(rest)?,
                power: true,
            },
            "extended-d" => Family::ExtendedD { max_n: num(rest)? },
            _ => return Err(bad()),
        })
    }
}

/// Words over `gens` of length at most `max`, shortest first.
fn monoid(gens: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                gens.iter().map(move |&g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn concat(parts: &[&[usize]]) -> Vec<usize> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn word(strands: usize, letters: Vec<usize>) -> BraidWord {
    BraidWord::new(strands, letters).expect("letters below strand count")
}

/// Normal forms σ1^{a1}σ2^{b1}··· with the given first Betti number, one
/// per class of cyclic rotations of the exponent pairs.
pub fn three_braid_normal_forms(betti: i64) -> Vec<BraidWord> {
    let total = (betti + 2) as usize;
    let mut out = Vec::new();
    fn rec(left: usize, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if left == 0 && !pairs.is_empty() {
            out.push(pairs.clone());
            return;
        }
        for a in 2..=left {
            for b in 1..=left.saturating_sub(a) {
                pairs.push((a, b));
                rec(left - a - b, pairs, out);
                pairs.pop();
            }
        }
    }
    let mut seqs = Vec::new();
    rec(total, &mut Vec::new(), &mut seqs);
    for s in seqs {
        let least = (0..s.len())
            .map(|r| [&s[r..], &s[..r]].concat())
            .min()
            .unwrap();
        if least != s {
            continue;
        }
        let letters = s
            .iter()
            .flat_map(|&(a, b)| std::iter::repeat(1).take(a).chain(std::iter::repeat(2).take(b)))
            .collect();
        out.push(word(3, letters));
    }
    out
}

impl Family {
    /// Members in a fixed order.
    pub fn words(&self) -> Vec<BraidWord> {
        match *self {
            Family::ThreeBraids {
                min_betti,
                max_betti,
            } => (min_betti..=max_betti)
                .flat_map(three_braid_normal_forms)
                .collect(),
            Family::AllWords { crossings, strands } => {
                let gens: Vec<usize> = (1..strands).collect();
                monoid(&gens, crossings)
                    .into_iter()
                    .filter(|l| !l.is_empty())
                    .map(|l| word(strands, l))
                    .collect()
            }
            Family::FamilyA { max } => {
                let mut out = Vec::new();
                let r = 0..=max;
                for a in r.clone() {
                    for b in r.clone() {
                        for c in r.clone() {
                            for d in r.clone() {
                                for e in r.clone() {
                                    let p = |g: usize, k: usize| vec![g; k];
                                    let l = concat(&[
                                        &p(1, a),
                                        &[2],
                                        &p(3, b),
                                        &[2],
                                        &p(1, c),
                                        &[2],
                                        &p(3, d),
                                        &[2],
                                        &p(1, e),
                                    ]);
                                    out.push(word(4, l));
                                }
                            }
                        }
                    }
                }
                out
            }
            Family::FamilyB { max } => {
                let outer = monoid(&[3, 4], max);
                let inner = monoid(&[1, 2], max);
                let mut out = Vec::new();
                for b1 in &outer {
                    for b2 in &inner {
                        for b3 in &outer {
                            out.push(word(5, concat(&[b1, &[2, 3], b2, &[3, 2], b3])));
                        }
                    }
                }
                out
            }
            Family::FamilyC { max, power } => {
                let ends = monoid(&[1, 4], max);
                let second = monoid(&[3, 4], max);
                let third = if power {
                    (0..=max).map(|k| [1, 2].repeat(k)).collect()
                } else {
                    monoid(&[1, 2], max)
                };
                let mut out = Vec::new();
                for b1 in &ends {
                    for b2 in &second {
                        for b3 in &third {
                            for b4 in &ends {
                                out.push(word(5, concat(&[b1, &[2], b2, &[2, 3], b3, &[3], b4])));
                            }
                        }
                    }
                }
                out
            }
            Family::ExtendedD { max_n } => (4..=max_n).map(extended_d_word).collect(),
        }
    }
}

/// σ1σ2²σ1σ2^{n−4}σ3σ2²σ3.
pub fn extended_d_word(n: usize) -> BraidWord {
    let l = concat(&[&[1, 2, 2, 1], &vec![2; n - 4], &[3, 2, 2, 3]]);
    word(4, l)
}

/// One line of a classification table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub index: usize,
    pub word: String,
    pub strands: usize,
    pub crossings: usize,
    pub components: usize,
    pub betti: i64,
    pub genus: i64,
    pub arf: Option<u8>,
    pub dynkin: String,
    pub outcome: CertifyOutcome,
}

pub const TSV_HEADER: &str =
    "index\tword\tstrands\tcrossings\tcomponents\tbetti\tgenus\tarf\tdynkin\toutcome\tdetail";

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arf = self.arf.map_or("-".to_string(), |a| a.to_string());
        let detail = match &self.outcome {
            CertifyOutcome::Certified(c) => serde_json::to_string(c).unwrap(),
            CertifyOutcome::KnownException(name) => name.clone(),
            CertifyOutcome::NotApplicable(g) => g.to_string(),
            CertifyOutcome::Unknown(r) => format!(
                "states={} depth={}{}",
                r.states,
                r.depth,
                if r.exhausted { " exhausted" } else { "" }
            ),
        };
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.index,
            self.word,
            self.strands,
            self.crossings,
            self.components,
            self.betti,
            self.genus,
            arf,
            self.dynkin,
            self.outcome.label(),
            detail
        )
    }
}

pub fn classify(index: usize, w: &BraidWord, budget: Budget) -> Row {
    let s = closure_summary(w);
    let arf = if s.components == 1 {
        seifert_matrix(w).ok().and_then(|sd| arf_invariant(&sd).ok())
    } else {
        None
    };
    Row {
        index,
        word: w.to_string(),
        strands: s.strands,
        crossings: s.crossings,
        components: s.components,
        betti: s.betti,
        genus: s.genus,
        arf,
        dynkin: dynkin_type(&linking_graph(w)).to_string(),
        outcome: certify(w, budget),
    }
}

/// Classifies the family members from index `skip` on, in parallel, in
/// family order. Resuming a partial table means passing its row count.
pub fn enumerate_and_classify(family: &Family, budget: Budget, skip: usize) -> Vec<Row> {
    let words = family.words();
    words
        .par_iter()
        .enumerate()
        .skip(skip)
        .map(|(i, w)| classify(i, w, budget))
        .collect()
}
