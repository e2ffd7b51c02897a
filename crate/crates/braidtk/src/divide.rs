//! Ordered Morse divides given as scan-ordered event words, and their
//! conversion to positive braids.
//!
//! A divide on `lines` levels is read left to right. `Min(j)` opens a cap
//! joining levels `j` and `j+1`, `Max(j)` closes one, and `Crossing(j)` is a
//! double point where the branches at levels `j` and `j+1` cross. Levels
//! without a minimum (maximum) run into the disk boundary on the left
//! (right).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::linking::Brick;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Event {
    Crossing(usize),
    Min(usize),
    Max(usize),
}

impl Event {
    pub fn level(self) -> usize {
        match self {
            Event::Crossing(j) | Event::Min(j) | Event::Max(j) => j,
        }
    }

    fn rank(self) -> u8 {
        match self {
            Event::Min(_) => 0,
            Event::Crossing(_) => 1,
            Event::Max(_) => 2,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Crossing(j) => write!(f, "C{j}"),
            Event::Min(j) => write!(f, "m{j}"),
            Event::Max(j) => write!(f, "M{j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedMorseDivide {
    pub lines: usize,
    pub events: Vec<Event>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivideCounts {
    pub delta: usize,
    pub faces: usize,
    pub intervals: usize,
    pub mu: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DivideError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("not ordered Morse: {0}")]
    NotOrderedMorse(String),
    #[error("not generic: {0}")]
    NonGeneric(String),
    #[error("the divide is disconnected ({0} components)")]
    Disconnected(usize),
}

/// Generators emitted per event, all at the event's level.
///
/// The divide is read twice: left to right, emitting every event, then
/// right to left, emitting only the crossings when `return_pass` is set.
/// Each crossing thus gives a pair of generators and each cap one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmissionTable {
    pub crossing: usize,
    pub minimum: usize,
    pub maximum: usize,
    pub return_pass: bool,
}

impl Default for EmissionTable {
    fn default() -> Self {
        EmissionTable {
            crossing: 1,
            minimum: 1,
            maximum: 1,
            return_pass: true,
        }
    }
}

impl EmissionTable {
    /// Both generators of a crossing side by side. Gives the wrong link
    /// as soon as a crossing sits between two caps, e.g. the fishtail
    /// `lines=3; events = m1 C2 M1`.
    pub const ADJACENT: EmissionTable = EmissionTable {
        crossing: 2,
        minimum: 1,
        maximum: 1,
        return_pass: false,
    };
}

/// Which vanishing cycle of the divide a brick of the emitted word carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CycleSource {
    /// The crossing with this index among the divide's crossings.
    Crossing(usize),
    Face,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivideBraid {
    pub word: BraidWord,
    pub cycles: Vec<(Brick, CycleSource)>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
        a != b
    }
}

/// Summary of the scan structure, shared by validation and conversion.
struct Scan {
    crossings: usize,
    caps: usize,
    intervals: usize,
    components: usize,
}

impl OrderedMorseDivide {
    pub fn new(lines: usize, events: Vec<Event>) -> Self {
        OrderedMorseDivide { lines, events }
    }

    fn scan(&self) -> Result<Scan, DivideError> {
        let n = self.lines;
        if n == 0 {
            return Err(DivideError::NonGeneric("no lines".into()));
        }
        for (k, e) in self.events.iter().enumerate() {
            let j = e.level();
            if j == 0 || j >= n {
                return Err(DivideError::NonGeneric(format!(
                    "event {k} ({e}) needs levels {j} and {} among 1..{n}",
                    j + 1
                )));
            }
        }
        if let Some(k) = self
            .events
            .windows(2)
            .position(|p| p[0].rank() > p[1].rank())
        {
            return Err(DivideError::NotOrderedMorse(format!(
                "{} after {} at event {}",
                self.events[k + 1],
                self.events[k],
                k + 1
            )));
        }
        // Caps pair up levels; a level carries at most one cap on each side.
        let mut left_cap = vec![false; n + 1];
        let mut right_cap = vec![false; n + 1];
        for e in &self.events {
            let side = match e {
                Event::Min(_) => &mut left_cap,
                Event::Max(_) => &mut right_cap,
                Event::Crossing(_) => continue,
            };
            let j = e.level();
            if side[j] || side[j + 1] {
                return Err(DivideError::NonGeneric(format!("cap {e} overlaps another cap")));
            }
            side[j] = true;
            side[j + 1] = true;
        }
        // Branch b starts at level b+1 and moves with the crossings.
        let mut at_level: Vec<usize> = (0..n).collect();
        let mut branches = Dsu::new(n);
        let mut touching = Dsu::new(n);
        let mut crossings = 0;
        let mut caps = 0;
        for e in &self.events {
            let j = e.level() - 1;
            match e {
                Event::Min(_) | Event::Max(_) => {
                    caps += 1;
                    if !branches.union(at_level[j], at_level[j + 1]) {
                        return Err(DivideError::NonGeneric(format!(
                            "cap {e} closes a component into a circle"
                        )));
                    }
                    touching.union(at_level[j], at_level[j + 1]);
                }
                Event::Crossing(_) => {
                    crossings += 1;
                    touching.union(at_level[j], at_level[j + 1]);
                    at_level.swap(j, j + 1);
                }
            }
        }
        let free_ends = (1..=n).filter(|&l| !left_cap[l]).count()
            + (1..=n).filter(|&l| !right_cap[l]).count();
        let components = (0..n).filter(|&b| touching.find(b) == b).count();
        Ok(Scan {
            crossings,
            caps,
            intervals: free_ends / 2,
            components,
        })
    }

    /// Checks the ordered Morse structure and computes the counts.
    ///
    /// Faces come from Euler's formula on the divide together with the
    /// boundary circle: vertices are crossings, cap points and endpoints,
    /// and each line is cut into edges by the crossings it passes.
    pub fn validate(&self) -> Result<DivideCounts, DivideError> {
        let s = self.scan()?;
        let v = s.crossings + s.caps + 2 * s.intervals;
        let e = 2 * s.crossings + self.lines + 2 * s.intervals;
        // The union with the boundary circle is connected, so the disk
        // holds e − v + 1 regions; 2n − c + 1 of them meet the boundary.
        let regions = e + 1 - v;
        let outer = 2 * s.intervals + 1 - s.components;
        let faces = regions - outer;
        Ok(DivideCounts {
            delta: s.crossings,
            faces,
            intervals: s.intervals,
            mu: s.crossings + faces,
        })
    }

    pub fn is_connected(&self) -> Result<bool, DivideError> {
        Ok(self.scan()?.components == 1)
    }

    pub fn to_braid(&self, table: EmissionTable) -> Result<DivideBraid, DivideError> {
        let s = self.scan()?;
        if s.components != 1 {
            return Err(DivideError::Disconnected(s.components));
        }
        let mut letters = Vec::new();
        let mut crossing_at = Vec::new();
        for e in &self.events {
            let reps = match e {
                Event::Crossing(_) => {
                    crossing_at.push(letters.len());
                    table.crossing
                }
                Event::Min(_) => table.minimum,
                Event::Max(_) => table.maximum,
            };
            letters.extend(std::iter::repeat(e.level()).take(reps));
        }
        if table.return_pass {
            for e in self.events.iter().rev() {
                if let Event::Crossing(j) = e {
                    letters.push(*j);
                }
            }
        }
        let word = BraidWord::new(self.lines, letters).expect("levels were validated");
        // A crossing carries the brick that starts at its first generator.
        let cycles = crate::linking::bricks(&word)
            .into_iter()
            .map(|b| {
                let src = crossing_at
                    .iter()
                    .position(|&p| p == b.top)
                    .map_or(CycleSource::Face, CycleSource::Crossing);
                (b, src)
            })
            .collect();
        Ok(DivideBraid { word, cycles })
    }
}

pub fn validate_divide(d: &OrderedMorseDivide) -> Result<DivideCounts, DivideError> {
    d.validate()
}

pub fn divide_to_braid(d: &OrderedMorseDivide) -> Result<BraidWord, DivideError> {
    Ok(d.to_braid(EmissionTable::default())?.word)
}

pub fn vanishing_cycle_count(d: &OrderedMorseDivide) -> Result<usize, DivideError> {
    Ok(d.validate()?.mu)
}

impl fmt::Display for OrderedMorseDivide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lines={}; events =", self.lines)?;
        for e in &self.events {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl FromStr for OrderedMorseDivide {
    type Err = DivideError;

    /// `lines=N; events = C3 m1 M2 ...`
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |pos: usize, msg: &str| DivideError::Syntax {
            pos,
            msg: msg.into(),
        };
        let semi = text.find(';').ok_or_else(|| err(text.len(), "expected ';'"))?;
        let head = &text[..semi];
        let (key, value) = head.split_once('=').ok_or_else(|| err(0, "expected 'lines='"))?;
        if key.trim() != "lines" {
            return Err(err(0, "expected 'lines='"));
        }
        let lines = value
            .trim()
            .parse()
            .map_err(|_| err(key.len() + 1, "expected an integer line count"))?;
        let tail = &text[semi + 1..];
        let (key, body) = tail
            .split_once('=')
            .ok_or_else(|| err(semi + 1, "expected 'events ='"))?;
        if key.trim() != "events" {
            return Err(err(semi + 1, "expected 'events ='"));
        }
        let base = semi + 1 + key.len() + 1;
        let mut events = Vec::new();
        let mut offset = 0;
        for tok in body.split_whitespace() {
            let pos = base + offset + body[offset..].find(tok).unwrap();
            offset = pos - base + tok.len();
            let (kind, num) = tok.split_at(1);
            let j: usize = num.parse().map_err(|_| err(pos + 1, "expected a level"))?;
            events.push(match kind {
                "C" => Event::Crossing(j),
                "m" => Event::Min(j),
                "M" => Event::Max(j),
                _ => return Err(err(pos, "expected C, m or M")),
            });
        }
        Ok(OrderedMorseDivide { lines, events })
    }
}
