//! Dense integer polynomials in one variable and exact determinants.

use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients from degree 0 upwards, without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly(Vec<i128>);

impl Poly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: i128) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c·t^k.
    pub fn monomial(c: i128, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.0.iter().position(|&c| c != 0)
    }

    pub fn eval(&self, t: i128) -> i128 {
        self.0.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let dd = d.degree()?;
        let lead = d.0[dd];
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return self.is_zero().then(Poly::zero);
        }
        let mut q = vec![0; rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = rem[k + dd];
            if c % lead != 0 {
                return None;
            }
            let f = c / lead;
            q[k] = f;
            for (j, &dc) in d.0.iter().enumerate() {
                rem[k + j] -= f * dc;
            }
        }
        rem.iter().all(|&c| c == 0).then(|| Poly::new(q))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&0) + o.0.get(k).unwrap_or(&0))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

/// Determinant by fraction-free Bareiss elimination.
pub fn det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(1);
    }
    let mut sign = 1;
    let mut prev = Poly::constant(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Poly::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -&d
    } else {
        d
    }
}

/// Integer determinant through the constant polynomials.
pub fn det_int(m: &[Vec<i64>]) -> i128 {
    let pm = m
        .iter()
        .map(|row| row.iter().map(|&x| Poly::constant(x as i128)).collect())
        .collect();
    det(pm).eval(0)
}
