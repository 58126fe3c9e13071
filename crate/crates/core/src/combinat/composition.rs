use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::VarId;

/// An element `(i, j)` of the index set, both components 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Index {
    pub row: u32,
    pub col: u32,
}

impl Index {
    pub const fn new(row: u32, col: u32) -> Self {
        Index { row, col }
    }

    pub fn var(self) -> VarId {
        VarId::X(self.row, self.col)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A composition `λ = (λ_1, …, λ_k)` with all parts positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn k(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Sum of the parts.
    pub fn m(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `λ_i`, with `λ_0 = 0` and `λ_{k+1} = 0`.
    pub fn part(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn max_part(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    /// `I^{(i)}`; empty for `i = 0` and `i > k`.
    pub fn row(&self, i: u32) -> Vec<Index> {
        (1..=self.part(i)).map(|j| Index::new(i, j)).collect()
    }

    /// The whole index set `I`, row-major.
    pub fn indices(&self) -> Vec<Index> {
        (1..=self.k()).flat_map(|i| self.row(i)).collect()
    }

    /// Indices whose variables are shifted by the lattice: rows `1..k-1`.
    pub fn shiftable(&self) -> Vec<Index> {
        (1..self.k()).flat_map(|i| self.row(i)).collect()
    }

    pub fn contains(&self, a: Index) -> bool {
        a.row >= 1 && a.row <= self.k() && a.col >= 1 && a.col <= self.part(a.row)
    }

    pub fn check(&self, a: Index) -> Result<Index> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::InvalidIndex(a.to_string()))
        }
    }

    /// All compositions of `n`, in lexicographic order.
    pub fn all_of(n: u32) -> Vec<Composition> {
        fn rec(n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if n == 0 {
                out.push(Composition { parts: prefix.clone() });
                return;
            }
            for p in 1..=n {
                prefix.push(p);
                rec(n - p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// An element of the shift lattice: integer offsets on rows `1..k-1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ShiftVector {
    entries: BTreeMap<Index, i64>,
}

impl ShiftVector {
    pub fn zero() -> Self {
        ShiftVector::default()
    }

    /// Builds a shift vector, rejecting offsets outside rows `1..k-1`.
    pub fn new<I: IntoIterator<Item = (Index, i64)>>(lambda: &Composition, it: I) -> Result<Self> {
        let mut s = ShiftVector::zero();
        for (a, n) in it {
            if !lambda.contains(a) || a.row >= lambda.k() {
                return Err(Error::InvalidIndex(format!("{a} is not shiftable")));
            }
            s.set(a, s.get(a) + n);
        }
        Ok(s)
    }

    /// The generator `φ_a` raised to `n`.
    pub fn unit(a: Index, n: i64) -> Self {
        let mut s = ShiftVector::zero();
        s.set(a, n);
        s
    }

    pub fn get(&self, a: Index) -> i64 {
        self.entries.get(&a).copied().unwrap_or(0)
    }

    pub fn set(&mut self, a: Index, n: i64) {
        if n == 0 {
            self.entries.remove(&a);
        } else {
            self.entries.insert(a, n);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Index, i64)> + '_ {
        self.entries.iter().map(|(&a, &n)| (a, n))
    }

    pub fn add(&self, o: &ShiftVector) -> ShiftVector {
        let mut s = self.clone();
        for (a, n) in o.entries() {
            s.set(a, s.get(a) + n);
        }
        s
    }

    pub fn neg(&self) -> ShiftVector {
        ShiftVector { entries: self.entries.iter().map(|(&a, &n)| (a, -n)).collect() }
    }

    pub fn sub(&self, o: &ShiftVector) -> ShiftVector {
        self.add(&o.neg())
    }

    /// Largest absolute offset.
    pub fn sup_norm(&self) -> i64 {
        self.entries.values().map(|n| n.abs()).max().unwrap_or(0)
    }

    /// Offsets of row `i` as a tuple over columns `1..=len`.
    pub fn row_tuple(&self, i: u32, len: u32) -> Vec<i64> {
        (1..=len).map(|j| self.get(Index::new(i, j))).collect()
    }

    /// Offsets in the order of `lambda.shiftable()`.
    pub fn coords(&self, lambda: &Composition) -> Vec<i64> {
        lambda.shiftable().into_iter().map(|a| self.get(a)).collect()
    }

    pub fn from_coords(lambda: &Composition, coords: &[i64]) -> ShiftVector {
        let mut s = ShiftVector::zero();
        for (a, &n) in lambda.shiftable().into_iter().zip(coords) {
            s.set(a, n);
        }
        s
    }

    /// Renders as `(n_1,…,n_r)` over the shiftable indices of `lambda`.
    pub fn render(&self, lambda: &Composition) -> String {
        let c: Vec<String> = self.coords(lambda).iter().map(i64::to_string).collect();
        format!("({})", c.join(","))
    }
}

/// All shift vectors with every offset in `-r..=r`, in lexicographic order of
/// their coordinates.
pub fn window_shifts(lambda: &Composition, r: i64) -> Vec<ShiftVector> {
    let dims = lambda.shiftable().len();
    let mut out = Vec::new();
    let mut cur = vec![-r; dims];
    loop {
        out.push(ShiftVector::from_coords(lambda, &cur));
        let mut k = dims;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < r {
                cur[k] += 1;
                for c in cur.iter_mut().skip(k + 1) {
                    *c = -r;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_set_shape() {
        let l = Composition::new(vec![1, 2, 3]).unwrap();
        assert_eq!(l.m(), 6);
        assert_eq!(l.indices().len(), 6);
        assert!(l.row(0).is_empty());
        assert_eq!(l.shiftable().len(), 3);
        assert!(Composition::new(vec![2, 0]).is_err());
        assert!(Composition::new(vec![]).is_err());
    }

    #[test]
    fn shift_group_laws() {
        let l = Composition::new(vec![2, 1]).unwrap();
        let a = ShiftVector::new(&l, [(Index::new(1, 1), 2), (Index::new(1, 2), -1)]).unwrap();
        let b = ShiftVector::unit(Index::new(1, 2), 1);
        assert_eq!(a.add(&b), b.add(&a));
        assert!(a.add(&a.neg()).is_zero());
        assert!(ShiftVector::new(&l, [(Index::new(2, 1), 1)]).is_err());
    }

    #[test]
    fn window_size() {
        let l = Composition::new(vec![2, 1]).unwrap();
        assert_eq!(window_shifts(&l, 1).len(), 9);
        assert_eq!(window_shifts(&l, 3).len(), 49);
        assert_eq!(Composition::all_of(3).len(), 4);
    }
}
