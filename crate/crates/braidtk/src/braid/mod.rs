//! Positive braid words and the data of their closures.

mod garside;
mod moves;
mod reduce;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use garside::{half_twist_divides, left_divide};
pub use moves::{apply_move, Move, MoveError};
pub use reduce::{contract_column, strand_reduce, ReduceError, DEFAULT_REDUCE_BUDGET};
pub(crate) use reduce::relation_neighbours;

/// A positive braid word. Letter `i` stands for the generator σ_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("letter s{letter} at byte {pos} is out of range for {strands} strands")]
    OutOfRange {
        pos: usize,
        letter: usize,
        strands: usize,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("letter {letter} is out of range for {strands} strands")]
pub struct LetterError {
    pub letter: usize,
    pub strands: usize,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self, LetterError> {
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l >= strands.max(1)) {
            return Err(LetterError { letter, strands });
        }
        Ok(BraidWord {
            strands: strands.max(1),
            letters,
        })
    }

    /// Infers the strand count as the largest letter plus one.
    pub fn from_letters(letters: Vec<usize>) -> Result<Self, LetterError> {
        let strands = letters.iter().copied().max().unwrap_or(0) + 1;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn with_letters(&self, letters: Vec<usize>) -> Self {
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotated(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        self.with_letters(letters)
    }

    /// The image under σ_i ↦ σ_{N−i} (conjugation by the half twist).
    pub fn flipped(&self) -> Self {
        let n = self.strands;
        self.with_letters(self.letters.iter().map(|&l| n - l).collect())
    }

    /// The word read backwards.
    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        self.with_letters(letters)
    }

    /// Lexicographically least cyclic rotation.
    pub fn least_rotation(&self) -> (usize, Self) {
        let n = self.letters.len();
        if n == 0 {
            return (0, self.clone());
        }
        let k = (0..n)
            .min_by(|&a, &b| {
                let ra = self.letters[a..].iter().chain(&self.letters[..a]);
                let rb = self.letters[b..].iter().chain(&self.letters[..b]);
                ra.cmp(rb)
            })
            .unwrap();
        (k, self.rotated(k))
    }

    pub fn column_count(&self, i: usize) -> usize {
        self.letters.iter().filter(|&&l| l == i).count()
    }

    pub fn is_split(&self) -> bool {
        (1..self.strands).any(|i| !self.letters.contains(&i))
    }

    /// Images of the strands under the closure permutation, 0-based.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            pos.swap(l - 1, l);
        }
        // pos[p] is the strand sitting at position p after the word.
        let mut image = vec![0; self.strands];
        for (p, &s) in pos.iter().enumerate() {
            image[s] = p;
        }
        image
    }

    pub fn components(&self) -> usize {
        count_cycles(&self.permutation())
    }
}

pub(crate) fn count_cycles(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        cycles += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
        }
    }
    cycles
}

impl fmt::Display for BraidWord {
    /// Canonical text: an `N=` prefix, then exponent-compressed letters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={};", self.strands)?;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            if j - i == 1 {
                write!(f, " s{l}")?;
            } else {
                write!(f, " s{l}^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid(s)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError::Syntax {
                pos: start,
                msg: "integer too large".into(),
            })
    }
}

/// Parses `[ "N=" int ";" ] term+` with `term := "s" int [ "^" int ]`.
pub fn parse_braid(text: &str) -> Result<BraidWord, ParseError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    cur.skip_ws();
    let mut declared = None;
    if cur.peek() == Some(b'N') {
        cur.pos += 1;
        cur.skip_ws();
        cur.expect(b'=')?;
        cur.skip_ws();
        let n = cur.int()?;
        if n == 0 {
            return Err(cur.err("strand count must be positive"));
        }
        cur.skip_ws();
        cur.expect(b';')?;
        declared = Some(n);
    }
    let mut letters = Vec::new();
    let mut spans = Vec::new();
    loop {
        cur.skip_ws();
        let Some(b) = cur.peek() else { break };
        if b != b's' {
            return Err(cur.err("expected a generator 's<i>'"));
        }
        let start = cur.pos;
        cur.pos += 1;
        let letter = cur.int()?;
        if letter == 0 {
            return Err(ParseError::Syntax {
                pos: start,
                msg: "generators start at s1".into(),
            });
        }
        let mut exp = 1;
        if cur.peek() == Some(b'^') {
            cur.pos += 1;
            exp = cur.int()?;
            if exp == 0 {
                return Err(cur.err("exponents must be at least 1"));
            }
        }
        for _ in 0..exp {
            letters.push(letter);
            spans.push(start);
        }
    }
    if letters.is_empty() && declared.is_none() {
        return Err(cur.err("empty braid word"));
    }
    let strands = declared.unwrap_or_else(|| letters.iter().max().unwrap() + 1);
    if let Some(k) = letters.iter().position(|&l| l >= strands) {
        return Err(ParseError::OutOfRange {
            pos: spans[k],
            letter: letters[k],
            strands,
        });
    }
    Ok(BraidWord { strands, letters })
}

/// Topological data of the closure of a positive braid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureSummary {
    pub strands: usize,
    pub crossings: usize,
    /// 1-based images, `permutation[k-1]` is the image of strand `k`.
    pub permutation: Vec<usize>,
    pub components: usize,
    pub betti: i64,
    pub genus: i64,
    pub split: bool,
    pub prime: bool,
}

pub fn closure_summary(w: &BraidWord) -> ClosureSummary {
    let perm = w.permutation();
    let r = count_cycles(&perm) as i64;
    let n = w.strands as i64;
    let c = w.letters.len() as i64;
    // Each unused generator disconnects the fibre surface.
    let unused = (1..w.strands).filter(|i| !w.letters.contains(i)).count() as i64;
    let pieces = unused + 1;
    let betti = c - n + pieces;
    let genus = (betti - r + pieces) / 2;
    let split = unused > 0;
    let prime = !split && crate::linking::linking_graph(w).is_connected();
    ClosureSummary {
        strands: w.strands,
        crossings: w.letters.len(),
        permutation: perm.iter().map(|&p| p + 1).collect(),
        components: r as usize,
        betti,
        genus,
        split,
        prime,
    }
}
