//! Dense Gaussian elimination over an exact field.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::poly::Q;
use super::ratfunc::RationalFunction;
use super::scalar::Scalar;

pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Division by a nonzero element.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RationalFunction::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RationalFunction::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalFunction::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        RationalFunction::div(self, o).expect("nonzero pivot")
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        Scalar::div(self, o).expect("nonzero pivot")
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduces `m` in place to row echelon form; returns pivot columns.
fn echelon<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one().div(&m[r][c]);
        for x in &mut m[r][c..] {
            *x = x.mul(&inv);
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    if !p.is_zero() {
                        *x = x.sub(&p.mul(&f));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of sparse rows keyed by arbitrary column labels.
pub fn sparse_rank<K: Ord + Clone, F: Field>(rows: Vec<BTreeMap<K, F>>) -> usize {
    // reduced rows, indexed by their leading key
    let mut basis: BTreeMap<K, BTreeMap<K, F>> = BTreeMap::new();
    for mut row in rows {
        row.retain(|_, v| !v.is_zero());
        while let Some((lead, lv)) = row.iter().next().map(|(k, v)| (k.clone(), v.clone())) {
            let Some(b) = basis.get(&lead) else {
                let inv = F::one().div(&lv);
                let normed = row.into_iter().map(|(k, v)| (k, v.mul(&inv))).collect();
                basis.insert(lead, normed);
                break;
            };
            for (k, v) in b {
                let t = v.mul(&lv);
                let e = row.entry(k.clone()).or_insert_with(F::zero);
                *e = e.sub(&t);
                if e.is_zero() {
                    row.remove(k);
                }
            }
        }
    }
    basis.len()
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let mut m = m.clone();
    echelon(&mut m).len()
}

/// Some solution `x` of `a x = b`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix<F> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Dimension of the kernel `{x : a x = 0}`.
pub fn nullity<F: Field>(a: &Matrix<F>, cols: usize) -> usize {
    cols - rank(a)
}
