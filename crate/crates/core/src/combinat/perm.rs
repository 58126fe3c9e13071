use std::fmt;

use super::composition::{Composition, Index};
use crate::error::{Error, Result};

/// An element of `G = S_{λ_1} × ⋯ × S_{λ_k}`: one permutation per row, each in
/// one-line notation with 1-based images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowPermutation {
    rows: Vec<Vec<u32>>,
}

impl RowPermutation {
    pub fn identity(lambda: &Composition) -> Self {
        RowPermutation { rows: lambda.parts().iter().map(|&n| (1..=n).collect()).collect() }
    }

    pub fn from_rows(lambda: &Composition, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != lambda.parts().len() {
            return Err(Error::Validation("wrong number of rows".into()));
        }
        for (row, &n) in rows.iter().zip(lambda.parts()) {
            let mut seen = vec![false; n as usize + 1];
            if row.len() != n as usize {
                return Err(Error::Validation(format!("row {row:?} has wrong length")));
            }
            for &j in row {
                if j == 0 || j > n || seen[j as usize] {
                    return Err(Error::Validation(format!("{row:?} is not a permutation")));
                }
                seen[j as usize] = true;
            }
        }
        Ok(RowPermutation { rows })
    }

    /// The transposition swapping two indices of the same row.
    pub fn transposition(lambda: &Composition, a: Index, b: Index) -> Result<Self> {
        lambda.check(a)?;
        lambda.check(b)?;
        if a.row != b.row || a == b {
            return Err(Error::InvalidPair(format!("{a}, {b}")));
        }
        let mut p = Self::identity(lambda);
        let r = &mut p.rows[a.row as usize - 1];
        r.swap(a.col as usize - 1, b.col as usize - 1);
        Ok(p)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn apply(&self, a: Index) -> Index {
        Index::new(a.row, self.rows[a.row as usize - 1][a.col as usize - 1])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RowPermutation) -> RowPermutation {
        RowPermutation {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(s, o)| o.iter().map(|&j| s[j as usize - 1]).collect())
                .collect(),
        }
    }

    pub fn inverse(&self) -> RowPermutation {
        RowPermutation {
            rows: self
                .rows
                .iter()
                .map(|r| {
                    let mut inv = vec![0; r.len()];
                    for (j, &img) in r.iter().enumerate() {
                        inv[img as usize - 1] = j as u32 + 1;
                    }
                    inv
                })
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().all(|r| r.iter().enumerate().all(|(j, &v)| v == j as u32 + 1))
    }

    /// True iff the last row component is the identity, i.e. the permutation
    /// lies in the subgroup `S_{λ_1} × ⋯ × S_{λ_{k-1}}`.
    pub fn in_lower_group(&self) -> bool {
        self.rows.last().is_none_or(|r| r.iter().enumerate().all(|(j, &v)| v == j as u32 + 1))
    }

    /// Coxeter length: the total number of inversions over all rows.
    pub fn length(&self) -> usize {
        self.rows
            .iter()
            .map(|r| {
                let mut n = 0;
                for a in 0..r.len() {
                    for b in a + 1..r.len() {
                        if r[a] > r[b] {
                            n += 1;
                        }
                    }
                }
                n
            })
            .sum()
    }

    /// `self ∘ s` for a simple reflection `s`.
    pub fn mul_simple(&self, s: SimpleReflection) -> RowPermutation {
        let mut p = self.clone();
        p.rows[s.row as usize - 1].swap(s.p as usize - 1, s.p as usize);
        p
    }

    /// True iff `ℓ(self ∘ s) < ℓ(self)`.
    pub fn has_right_descent(&self, s: SimpleReflection) -> bool {
        let r = &self.rows[s.row as usize - 1];
        r[s.p as usize - 1] > r[s.p as usize]
    }

    /// A reduced word, built by peeling off the leftmost right descent.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut w = self.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for (i, r) in w.rows.iter().enumerate() {
                for p in 1..r.len() {
                    let s = SimpleReflection { row: i as u32 + 1, p: p as u32 };
                    if w.has_right_descent(s) {
                        rev.push(s);
                        w = w.mul_simple(s);
                        continue 'outer;
                    }
                }
            }
            break;
        }
        rev.reverse();
        ReducedWord { letters: rev }
    }

    /// Cycle notation over indices, e.g. `((1,1) (1,2))`; `id` for the identity.
    pub fn cycles(&self) -> String {
        let mut out = String::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut seen = vec![false; r.len()];
            for start in 0..r.len() {
                if seen[start] || r[start] as usize == start + 1 {
                    continue;
                }
                let mut cyc = Vec::new();
                let mut j = start;
                while !seen[j] {
                    seen[j] = true;
                    cyc.push(Index::new(i as u32 + 1, j as u32 + 1).to_string());
                    j = r[j] as usize - 1;
                }
                out.push_str(&format!("({})", cyc.join(" ")));
            }
        }
        if out.is_empty() {
            "id".into()
        } else {
            out
        }
    }
}

/// One-line notation per row, e.g. `[2,1][1]`.
impl fmt::Display for RowPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let s: Vec<String> = r.iter().map(u32::to_string).collect();
            write!(f, "[{}]", s.join(","))?;
        }
        Ok(())
    }
}

/// The simple reflection swapping `(row, p)` and `(row, p+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleReflection {
    pub row: u32,
    pub p: u32,
}

impl SimpleReflection {
    pub fn new(row: u32, p: u32) -> Self {
        SimpleReflection { row, p }
    }

    pub fn left(self) -> Index {
        Index::new(self.row, self.p)
    }

    pub fn right(self) -> Index {
        Index::new(self.row, self.p + 1)
    }

    pub fn validate(self, lambda: &Composition) -> Result<Self> {
        if self.row >= 1 && self.row <= lambda.k() && self.p >= 1 && self.p < lambda.part(self.row) {
            Ok(self)
        } else {
            Err(Error::InvalidPair(self.to_string()))
        }
    }
}

impl fmt::Display for SimpleReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s[{},{}]", self.row, self.p)
    }
}

/// A word in the simple reflections. The name reflects its main use; words
/// that are not reduced can be represented and detected.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ReducedWord {
    letters: Vec<SimpleReflection>,
}

/// Summary returned by [`ReducedWord::ops`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordInfo {
    pub length: usize,
    pub product: RowPermutation,
    pub is_reduced: bool,
}

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord::default()
    }

    pub fn new(letters: Vec<SimpleReflection>) -> Self {
        ReducedWord { letters }
    }

    pub fn letters(&self) -> &[SimpleReflection] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &ReducedWord) -> ReducedWord {
        let mut l = self.letters.clone();
        l.extend_from_slice(&other.letters);
        ReducedWord { letters: l }
    }

    pub fn product(&self, lambda: &Composition) -> RowPermutation {
        self.letters.iter().fold(RowPermutation::identity(lambda), |w, &s| w.mul_simple(s))
    }

    pub fn is_reduced(&self, lambda: &Composition) -> bool {
        self.product(lambda).length() == self.letters.len()
    }

    pub fn ops(&self, lambda: &Composition) -> Result<WordInfo> {
        for &s in &self.letters {
            s.validate(lambda)?;
        }
        let product = self.product(lambda);
        let is_reduced = product.length() == self.letters.len();
        Ok(WordInfo { length: self.letters.len(), product, is_reduced })
    }
}

/// Letters separated by spaces; `e` for the empty word.
impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(row: u32, p: u32) -> SimpleReflection {
        SimpleReflection::new(row, p)
    }

    #[test]
    fn word_examples() {
        let l = Composition::new(vec![3]).unwrap();
        let w = ReducedWord::new(vec![s(1, 1), s(1, 1)]);
        assert!(!w.ops(&l).unwrap().is_reduced);
        let w = ReducedWord::new(vec![s(1, 1), s(1, 2), s(1, 1)]);
        let info = w.ops(&l).unwrap();
        assert_eq!(info.length, 3);
        assert!(info.is_reduced);
        assert_eq!(info.product.rows()[0], vec![3, 2, 1]);
        assert!(ReducedWord::new(vec![s(1, 3)]).ops(&l).is_err());
    }

    #[test]
    fn reduced_word_round_trip() {
        let l = Composition::new(vec![4, 2]).unwrap();
        let p = RowPermutation::from_rows(&l, vec![vec![3, 1, 4, 2], vec![2, 1]]).unwrap();
        let w = p.reduced_word();
        assert_eq!(w.product(&l), p);
        assert_eq!(w.len(), p.length());
        assert!(!p.in_lower_group());
    }

    #[test]
    fn composition_and_inverse() {
        let l = Composition::new(vec![3]).unwrap();
        let a = RowPermutation::from_rows(&l, vec![vec![2, 3, 1]]).unwrap();
        let b = RowPermutation::from_rows(&l, vec![vec![2, 1, 3]]).unwrap();
        let ab = a.compose(&b);
        let i = Index::new(1, 1);
        assert_eq!(ab.apply(i), a.apply(b.apply(i)));
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.cycles(), "((1,1) (1,2) (1,3))");
    }
}
