//! Prime-field scalars and dense linear algebra over F_p.
//!
//! The characteristic is a runtime value carried by [`PrimeField`]; scalars are
//! plain reduced residues and every operation goes through the field.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A residue in `[0, p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
#[repr(transparent)]
pub struct Scalar(pub(crate) u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field F_p for an odd prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || p > u64::from(u16::MAX) || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer.
    pub fn elem(&self, v: i64) -> Scalar {
        Scalar(v.rem_euclid(i64::from(self.p)) as u32)
    }

    pub fn from_u64(&self, v: u64) -> Scalar {
        Scalar((v % u64::from(self.p)) as u32)
    }

    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a.0 + b.0;
        Scalar(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    pub fn neg(&self, a: Scalar) -> Scalar {
        Scalar(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(((u64::from(a.0) * u64::from(b.0)) % u64::from(self.p)) as u32)
    }

    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a;
        let mut acc = Scalar::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::ZeroInverse(self.p));
        }
        Ok(self.pow(a, u64::from(self.p) - 2))
    }

    /// `(-1)^k`, for any integer k.
    pub fn sign(&self, k: i64) -> Scalar {
        if k.rem_euclid(2) == 0 {
            Scalar::ONE
        } else {
            Scalar(self.p - 1)
        }
    }

    /// `a + c * b`
    pub fn mul_add(&self, a: Scalar, c: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.mul(c, b))
    }

    /// All residues `0..p`.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        (0..self.p).map(Scalar)
    }
}

/// Dense row-major matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFp {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl MatrixFp {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Scalar::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::ONE);
        }
        m
    }

    pub fn from_rows(field: &PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: r.len(),
                });
            }
            entries.extend(r.iter().map(|&v| field.elem(v)));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, field: &PrimeField, r: usize, c: usize, v: Scalar) {
        let e = &mut self.entries[r * self.cols + c];
        *e = field.add(*e, v);
    }

    pub fn mul_vec(&self, field: &PrimeField, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let row = &self.entries[r * self.cols..(r + 1) * self.cols];
                row.iter()
                    .zip(x)
                    .fold(Scalar::ZERO, |acc, (&a, &b)| field.mul_add(acc, a, b))
            })
            .collect())
    }
}

/// Reduced row echelon form of `[a | b]`; returns pivot columns (in `a`).
fn rref(field: &PrimeField, work: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let rows = work.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !work[i][c].is_zero()) else {
            continue;
        };
        work.swap(r, pr);
        let inv = field.inv(work[r][c]).expect("pivot is nonzero");
        for v in work[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = work[r].clone();
        for (i, row) in work.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = field.neg(row[c]);
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = field.mul_add(*v, f, pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `a x = b`. Returns `None` when the system is inconsistent. Free
/// variables are set to zero; pivots are the first nonzero entry scanning
/// columns left to right.
pub fn solve_linear(field: &PrimeField, a: &MatrixFp, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            actual: b.len(),
        });
    }
    let mut work: Vec<Vec<Scalar>> = (0..a.rows)
        .map(|r| {
            let mut row = a.entries[r * a.cols..(r + 1) * a.cols].to_vec();
            row.push(b[r]);
            row
        })
        .collect();
    let pivots = rref(field, &mut work, a.cols);
    if work[pivots.len()..].iter().any(|row| !row[a.cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Scalar::ZERO; a.cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = work[row][a.cols];
    }
    Ok(Some(x))
}

/// A basis of the null space of `a`.
pub fn kernel_basis(field: &PrimeField, a: &MatrixFp) -> Vec<Vec<Scalar>> {
    let mut work: Vec<Vec<Scalar>> = (0..a.rows)
        .map(|r| a.entries[r * a.cols..(r + 1) * a.cols].to_vec())
        .collect();
    let pivots = rref(field, &mut work, a.cols);
    let mut is_pivot = vec![false; a.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..a.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::ZERO; a.cols];
            v[free] = Scalar::ONE;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(work[row][free]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: u32) -> Scalar {
        Scalar(v)
    }

    #[test]
    fn scalar_examples() {
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(f3.inv(s(2)).unwrap(), s(2));
        assert_eq!(f3.add(s(2), s(2)), s(1));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.pow(s(2), 4), s(1));
        assert_eq!(f3.inv(Scalar::ZERO), Err(Error::ZeroInverse(3)));
    }

    #[test]
    fn rejects_bad_characteristic() {
        for p in [0, 1, 2, 4, 9, 15] {
            assert_eq!(PrimeField::new(p), Err(Error::NotOddPrime(p)));
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [3, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), Scalar::ZERO);
                assert_eq!(f.sub(a, a), Scalar::ZERO);
                assert_eq!(f.mul(a, Scalar::ONE), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Scalar::ONE);
                    assert_eq!(f.pow(a, u64::from(f.characteristic()) - 1), Scalar::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(f.sub(a, b), b), a);
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn solve_examples() {
        let f = PrimeField::new(3).unwrap();
        let a = MatrixFp::from_rows(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(solve_linear(&f, &a, &[s(2), s(1)]).unwrap(), Some(vec![s(1), s(1)]));

        let a = MatrixFp::from_rows(&f, &[vec![1], vec![1]]).unwrap();
        assert_eq!(solve_linear(&f, &a, &[s(0), s(1)]).unwrap(), None);

        let b = vec![s(2), s(0), s(1), s(2)];
        assert_eq!(solve_linear(&f, &MatrixFp::identity(4), &b).unwrap(), Some(b));

        assert!(matches!(
            solve_linear(&f, &MatrixFp::identity(2), &[s(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel_is_annihilated() {
        let f = PrimeField::new(5).unwrap();
        let a = MatrixFp::from_rows(&f, &[vec![1, 2, 3, 4], vec![2, 4, 1, 3], vec![3, 1, 4, 2]]).unwrap();
        let ker = kernel_basis(&f, &a);
        assert!(!ker.is_empty());
        for v in ker {
            assert!(a.mul_vec(&f, &v).unwrap().iter().all(|x| x.is_zero()));
        }
    }
}
