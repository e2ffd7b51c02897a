//! Seifert forms on the brick basis, Alexander polynomials, the mod 2
//! quadratic refinement and its Arf invariant, and twist bookkeeping.

pub mod poly;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::linking::{linking_graph, Brick};
use poly::{det, det_int, Poly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormsError {
    #[error("the braid is split, so its fibre surface is disconnected")]
    SplitBraid,
    #[error("the closure has {0} components, not a knot")]
    NotAKnot(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertData {
    pub bricks: Vec<Brick>,
    /// Row-major, indexed by bricks in column-major order.
    pub matrix: Vec<Vec<i64>>,
    pub components: usize,
}

/// The Seifert matrix of the fibre surface in the brick basis.
///
/// Each brick curve is the core of a positive Hopf band, so the diagonal is
/// −1. For linked bricks x before y, the entry S[x][y] is +1 when x starts
/// higher in the word than y and −1 otherwise, and S[y][x] = 0.
pub fn seifert_matrix(w: &BraidWord) -> Result<SeifertData, FormsError> {
    if w.is_split() {
        return Err(FormsError::SplitBraid);
    }
    let g = linking_graph(w);
    let n = g.vertex_count();
    let mut s = vec![vec![0i64; n]; n];
    for (v, row) in s.iter_mut().enumerate() {
        row[v] = -1;
    }
    for &(a, b, _) in g.edges() {
        s[a][b] = if g.brick(a).top < g.brick(b).top { 1 } else { -1 };
    }
    Ok(SeifertData {
        bricks: g.bricks().to_vec(),
        matrix: s,
        components: w.components(),
    })
}

impl SeifertData {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// J = S − Sᵀ.
    pub fn intersection_form(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[i][j] - self.matrix[j][i]).collect())
            .collect()
    }

    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[i][j] + self.matrix[j][i]).collect())
            .collect()
    }

    /// vᵀ S v.
    pub fn form(&self, v: &[i64]) -> i64 {
        bilinear(&self.matrix, v, v)
    }

    pub fn quadratic_refinement(&self) -> QuadraticRefinement {
        QuadraticRefinement {
            pairing: mod2(&self.intersection_form()),
            values: (0..self.size())
                .map(|i| self.matrix[i][i].rem_euclid(2) as u8)
                .collect(),
        }
    }

    fn require_knot(&self) -> Result<(), FormsError> {
        if self.components == 1 {
            Ok(())
        } else {
            Err(FormsError::NotAKnot(self.components))
        }
    }
}

pub fn bilinear(m: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, row) in m.iter().enumerate() {
        if x[i] == 0 {
            continue;
        }
        for (j, &e) in row.iter().enumerate() {
            acc += x[i] * e * y[j];
        }
    }
    acc
}

fn mod2(m: &[Vec<i64>]) -> Vec<Vec<u8>> {
    m.iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(2) as u8).collect())
        .collect()
}

/// A Laurent polynomial in t^{1/2}; keys are doubled exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly(BTreeMap<i64, i64>);

impl LaurentPoly {
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    /// Coefficient of t^{doubled/2}.
    pub fn coeff(&self, doubled: i64) -> i64 {
        self.0.get(&doubled).copied().unwrap_or(0)
    }

    /// Value at t = 1 when all exponents are integers.
    pub fn at_one(&self) -> i64 {
        self.0.values().sum()
    }

    /// Value at t = −1 up to sign, for integral exponents.
    pub fn at_minus_one_abs(&self) -> i64 {
        self.0
            .iter()
            .map(|(&e, &c)| if (e / 2) % 2 == 0 { c } else { -c })
            .sum::<i64>()
            .abs()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    /// Shifts so the lowest exponent is 0 and makes the top coefficient
    /// positive; equality up to units ±t^k becomes plain equality.
    pub fn normalized(&self) -> Vec<i64> {
        let Some((&lo, _)) = self.0.iter().next() else {
            return Vec::new();
        };
        let (&hi, &top) = self.0.iter().next_back().unwrap();
        let sign = top.signum();
        let mut v = vec![0; ((hi - lo) / 2 + 1) as usize];
        for (&e, &c) in &self.0 {
            v[((e - lo) / 2) as usize] = sign * c;
        }
        v
    }
}

fn exponent_label(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (k, (&e, &c)) in self.0.iter().rev().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let body = match e {
                0 => mag.to_string(),
                2 => "t".into(),
                _ => format!("t^{}", exponent_label(e)),
            };
            if mag != 1 && e != 0 {
                write!(f, "{mag}{body}")?;
            } else {
                f.write_str(&body)?;
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (&e, &c) in &self.0 {
            map.serialize_entry(&exponent_label(e), &c)?;
        }
        map.end()
    }
}

/// det(tS − Sᵀ) multiplied by t^{−n/2}, sign fixed so the top coefficient is
/// positive.
pub fn alexander_polynomial(sd: &SeifertData) -> LaurentPoly {
    let n = sd.size();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let s = sd.matrix[i][j] as i128;
                    let st = sd.matrix[j][i] as i128;
                    Poly::new(vec![-st, s])
                })
                .collect()
        })
        .collect();
    let d = det(m);
    let top = d.coeffs().last().copied().unwrap_or(1).signum();
    let mut out = BTreeMap::new();
    for (k, &c) in d.coeffs().iter().enumerate() {
        if c != 0 {
            out.insert(2 * k as i64 - n as i64, (top * c) as i64);
        }
    }
    LaurentPoly(out)
}

/// The mod 2 intersection pairing with values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRefinement {
    pub pairing: Vec<Vec<u8>>,
    pub values: Vec<u8>,
}

impl QuadraticRefinement {
    pub fn pair(&self, x: &[u8], y: &[u8]) -> u8 {
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 1 {
                for (j, &yj) in y.iter().enumerate() {
                    acc ^= yj & self.pairing[i][j];
                }
            }
        }
        acc
    }

    /// q(Σ x_i e_i) = Σ x_i q(e_i) + Σ_{i<j} x_i x_j ⟨e_i, e_j⟩.
    pub fn value(&self, x: &[u8]) -> u8 {
        let mut acc = 0;
        for i in 0..x.len() {
            if x[i] == 0 {
                continue;
            }
            acc ^= self.values[i];
            for j in i + 1..x.len() {
                acc ^= x[j] & self.pairing[i][j];
            }
        }
        acc
    }

    /// A symplectic basis by Gram–Schmidt with lowest-index pivots, or
    /// `None` when the pairing is degenerate.
    pub fn symplectic_basis(&self) -> Option<Vec<(Vec<u8>, Vec<u8>)>> {
        let n = self.values.len();
        let mut pool: Vec<Vec<u8>> = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as u8).collect())
            .collect();
        let mut out = Vec::new();
        while !pool.is_empty() {
            let x = pool.remove(0);
            let k = pool.iter().position(|y| self.pair(&x, y) == 1)?;
            let y = pool.remove(k);
            for z in &mut pool {
                let (zy, zx) = (self.pair(z, &y), self.pair(z, &x));
                for i in 0..n {
                    z[i] ^= (zy & x[i]) ^ (zx & y[i]);
                }
            }
            out.push((x, y));
        }
        Some(out)
    }

    pub fn arf(&self) -> Option<u8> {
        let basis = self.symplectic_basis()?;
        Some(
            basis
                .iter()
                .fold(0, |acc, (x, y)| acc ^ (self.value(x) & self.value(y))),
        )
    }
}

pub fn arf_invariant(sd: &SeifertData) -> Result<u8, FormsError> {
    sd.require_knot()?;
    Ok(sd
        .quadratic_refinement()
        .arf()
        .expect("the intersection form of a knot is unimodular"))
}

/// Murasugi's criterion: Arf vanishes iff det(S + Sᵀ) ≡ ±1 mod 8.
pub fn arf_via_determinant(sd: &SeifertData) -> Result<u8, FormsError> {
    sd.require_knot()?;
    let d = det_int(&sd.symmetrized()).abs() % 8;
    Ok(u8::from(d != 1 && d != 7))
}

pub fn twist_update(phi_x: i64, algebraic_intersection: i64, phi_a: i64) -> i64 {
    phi_x + algebraic_intersection * phi_a
}

/// The homological transvection x ↦ x + ⟨x, a⟩ a.
pub fn twist_homology(x: &[i64], a: &[i64], j: &[Vec<i64>]) -> Result<Vec<i64>, FormsError> {
    if x.len() != a.len() {
        return Err(FormsError::DimensionMismatch(x.len(), a.len()));
    }
    if j.len() != x.len() {
        return Err(FormsError::DimensionMismatch(j.len(), x.len()));
    }
    let k = bilinear(j, x, a);
    Ok(x.iter().zip(a).map(|(xi, ai)| xi + k * ai).collect())
}

/// Winding numbers of the fibre framing, known on the brick basis (all 0)
/// and propagated along explicitly applied twists.
#[derive(Clone, Debug)]
pub struct WindingAssignment {
    pairing: Vec<Vec<i64>>,
    values: HashMap<Vec<i64>, i64>,
}

impl WindingAssignment {
    pub fn for_braid(sd: &SeifertData) -> Self {
        let n = sd.size();
        let values = (0..n)
            .map(|i| ((0..n).map(|j| (i == j) as i64).collect(), 0))
            .collect();
        WindingAssignment {
            pairing: sd.intersection_form(),
            values,
        }
    }

    pub fn value(&self, class: &[i64]) -> Option<i64> {
        self.values.get(class).copied()
    }

    /// Records the image of `x` under the twist along `a`, both known.
    pub fn apply_twist(&mut self, x: &[i64], a: &[i64]) -> Result<(Vec<i64>, i64), FormsError> {
        let image = twist_homology(x, a, &self.pairing)?;
        let (Some(px), Some(pa)) = (self.value(x), self.value(a)) else {
            return Err(FormsError::DimensionMismatch(x.len(), self.pairing.len()));
        };
        let v = twist_update(px, bilinear(&self.pairing, x, a), pa);
        self.values.insert(image.clone(), v);
        Ok((image, v))
    }

    /// The mod 2 form x ↦ φ(x) + 1 on the basis.
    pub fn framing_refinement(&self) -> QuadraticRefinement {
        let n = self.pairing.len();
        QuadraticRefinement {
            pairing: mod2(&self.pairing),
            values: (0..n)
                .map(|i| {
                    let e: Vec<i64> = (0..n).map(|j| (i == j) as i64).collect();
                    ((self.values[&e] + 1).rem_euclid(2)) as u8
                })
                .collect(),
        }
    }
}
