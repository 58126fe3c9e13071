use std::collections::BTreeMap;

use super::composition::{Composition, Index};
use super::perm::{ReducedWord, RowPermutation, SimpleReflection};
use crate::error::{Error, Result};

/// Largest group order for which elements are ever enumerated.
pub const ENUMERATION_LIMIT: u64 = 5040;

/// A Young subgroup of `G`, stored as a partition of every row into blocks.
/// The subgroup permutes each block arbitrarily and fixes the block structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YoungSubgroup {
    lambda: Composition,
    blocks: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub orbits: Vec<Vec<u32>>,
    pub contiguous: bool,
}

impl YoungSubgroup {
    pub fn new(lambda: &Composition, blocks: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        if blocks.len() != lambda.parts().len() {
            return Err(Error::InvalidSubgroup("one partition per row expected".into()));
        }
        let mut canon = Vec::with_capacity(blocks.len());
        for (i, row) in blocks.into_iter().enumerate() {
            let n = lambda.parts()[i] as usize;
            let mut seen = vec![false; n + 1];
            let mut row: Vec<Vec<u32>> = row
                .into_iter()
                .filter(|b| !b.is_empty())
                .map(|mut b| {
                    b.sort_unstable();
                    b
                })
                .collect();
            for b in &row {
                for &j in b {
                    if j == 0 || j as usize > n || seen[j as usize] {
                        return Err(Error::InvalidSubgroup(format!("row {} blocks {row:?}", i + 1)));
                    }
                    seen[j as usize] = true;
                }
            }
            if seen[1..].iter().any(|s| !s) {
                return Err(Error::InvalidSubgroup(format!("row {} blocks {row:?} do not cover", i + 1)));
            }
            row.sort();
            canon.push(row);
        }
        Ok(YoungSubgroup { lambda: lambda.clone(), blocks: canon })
    }

    pub fn trivial(lambda: &Composition) -> Self {
        let blocks = lambda.parts().iter().map(|&n| (1..=n).map(|j| vec![j]).collect()).collect();
        YoungSubgroup { lambda: lambda.clone(), blocks }
    }

    /// `S_{λ_1} × ⋯` with the rows listed in `rows` taken in full and the
    /// others trivial.
    pub fn full_rows(lambda: &Composition, rows: impl Fn(u32) -> bool) -> Self {
        let blocks = lambda
            .parts()
            .iter()
            .enumerate()
            .map(
                |(i, &n)| {
                    if rows(i as u32 + 1) {
                        vec![(1..=n).collect()]
                    } else {
                        (1..=n).map(|j| vec![j]).collect()
                    }
                },
            )
            .collect();
        YoungSubgroup { lambda: lambda.clone(), blocks }
    }

    /// Blocks from contiguous segment sizes per row; rows not listed are trivial.
    pub fn from_segments(lambda: &Composition, segments: &[(u32, Vec<u32>)]) -> Result<Self> {
        let mut blocks: Vec<Vec<Vec<u32>>> =
            lambda.parts().iter().map(|&n| (1..=n).map(|j| vec![j]).collect()).collect();
        for (row, sizes) in segments {
            let mut start = 1;
            let mut row_blocks = Vec::new();
            for &s in sizes {
                row_blocks.push((start..start + s).collect());
                start += s;
            }
            *blocks.get_mut(*row as usize - 1).ok_or_else(|| Error::InvalidSubgroup(format!("row {row}")))? =
                row_blocks;
        }
        Self::new(lambda, blocks)
    }

    pub fn lambda(&self) -> &Composition {
        &self.lambda
    }

    pub fn blocks(&self, row: u32) -> &[Vec<u32>] {
        &self.blocks[row as usize - 1]
    }

    /// Block of the index `a`.
    pub fn block_of(&self, a: Index) -> &[u32] {
        self.blocks(a.row).iter().find(|b| b.contains(&a.col)).expect("blocks cover the row")
    }

    pub fn orbits(&self, row: u32) -> OrbitReport {
        let orbits = self.blocks(row).to_vec();
        let contiguous = orbits.iter().all(|b| b.windows(2).all(|w| w[1] == w[0] + 1));
        OrbitReport { orbits, contiguous }
    }

    pub fn all_contiguous(&self) -> bool {
        (1..=self.lambda.k()).all(|i| self.orbits(i).contiguous)
    }

    /// Block sizes of a row in order of their minima (a composition of `λ_i`
    /// when the blocks are contiguous).
    pub fn row_composition(&self, row: u32) -> Vec<u32> {
        self.blocks(row).iter().map(|b| b.len() as u32).collect()
    }

    pub fn order(&self) -> u64 {
        self.blocks.iter().flatten().map(|b| (1..=b.len() as u64).product::<u64>()).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().flatten().all(|b| b.len() == 1)
    }

    /// True iff `self ⊆ other`.
    pub fn is_subgroup_of(&self, other: &YoungSubgroup) -> bool {
        self.lambda == other.lambda
            && self
                .blocks
                .iter()
                .zip(&other.blocks)
                .all(|(mine, theirs)| mine.iter().all(|b| theirs.iter().any(|t| b.iter().all(|j| t.contains(j)))))
    }

    pub fn contains(&self, p: &RowPermutation) -> bool {
        self.blocks.iter().enumerate().all(|(i, row)| {
            row.iter().all(|b| b.iter().all(|&j| b.contains(&p.apply(Index::new(i as u32 + 1, j)).col)))
        })
    }

    /// Simple reflections lying in the subgroup.
    pub fn simple_reflections(&self) -> Vec<SimpleReflection> {
        let mut out = Vec::new();
        for (i, row) in self.blocks.iter().enumerate() {
            for b in row {
                for w in b.windows(2) {
                    if w[1] == w[0] + 1 {
                        out.push(SimpleReflection::new(i as u32 + 1, w[0]));
                    }
                }
            }
        }
        out
    }

    /// All elements; refuses groups larger than [`ENUMERATION_LIMIT`].
    pub fn elements(&self) -> Result<Vec<RowPermutation>> {
        if self.order() > ENUMERATION_LIMIT {
            return Err(Error::InvalidSubgroup(format!("order {} exceeds enumeration limit", self.order())));
        }
        let mut out = vec![RowPermutation::identity(&self.lambda)];
        for (i, row) in self.blocks.iter().enumerate() {
            for b in row {
                if b.len() < 2 {
                    continue;
                }
                let perms = permutations(b);
                let mut next = Vec::with_capacity(out.len() * perms.len());
                for p in &out {
                    for img in &perms {
                        let mut rows = p.rows().to_vec();
                        for (&from, &to) in b.iter().zip(img) {
                            rows[i][from as usize - 1] = to;
                        }
                        next.push(RowPermutation::from_rows(&self.lambda, rows).expect("valid"));
                    }
                }
                out = next;
            }
        }
        out.sort();
        Ok(out)
    }

    /// True iff `w` is the shortest element of its coset `w·self`.
    pub fn is_min_coset_rep(&self, w: &RowPermutation) -> bool {
        if self.all_contiguous() {
            return self.simple_reflections().into_iter().all(|s| !w.has_right_descent(s));
        }
        let l = w.length();
        self.elements().map(|els| els.iter().all(|u| w.compose(u).length() >= l)).unwrap_or(false)
    }
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Shortest representatives of the left cosets `big / small`, one reduced word
/// each, sorted by length and then by permutation.
pub fn shortest_coset_reps(big: &YoungSubgroup, small: &YoungSubgroup) -> Result<Vec<ReducedWord>> {
    Ok(shortest_coset_perms(big, small)?.into_iter().map(|p| p.reduced_word()).collect())
}

pub fn shortest_coset_perms(big: &YoungSubgroup, small: &YoungSubgroup) -> Result<Vec<RowPermutation>> {
    if !small.is_subgroup_of(big) {
        return Err(Error::NotASubgroup(format!("{:?} ⊄ {:?}", small.blocks, big.blocks)));
    }
    // w and w' share a coset iff they map every block of `small` onto the same set
    let mut best: BTreeMap<Vec<Vec<u32>>, RowPermutation> = BTreeMap::new();
    for w in big.elements()? {
        let mut key = Vec::new();
        for (i, row) in small.blocks.iter().enumerate() {
            for b in row {
                let mut img: Vec<u32> = b.iter().map(|&j| w.apply(Index::new(i as u32 + 1, j)).col).collect();
                img.sort_unstable();
                key.push(img);
            }
        }
        match best.get(&key) {
            Some(cur) if cur.length() <= w.length() => {}
            _ => {
                best.insert(key, w);
            }
        }
    }
    let mut reps: Vec<RowPermutation> = best.into_values().collect();
    reps.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    Ok(reps)
}

/// The longest among the shortest coset representatives of `big / small`.
pub fn longest_coset_rep(big: &YoungSubgroup, small: &YoungSubgroup) -> Result<ReducedWord> {
    let reps = shortest_coset_perms(big, small)?;
    Ok(reps.last().expect("identity coset always exists").reduced_word())
}

/// Orbits of a subgroup in one row and whether they are contiguous segments.
pub fn orbits_and_stabilizer(group: &YoungSubgroup, row: u32) -> Result<OrbitReport> {
    if row == 0 || row > group.lambda.k() {
        return Err(Error::InvalidSubgroup(format!("no row {row}")));
    }
    Ok(group.orbits(row))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_row(n: u32, blocks: Vec<Vec<u32>>) -> YoungSubgroup {
        YoungSubgroup::new(&Composition::new(vec![n]).unwrap(), vec![blocks]).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let g = one_row(3, vec![vec![1, 2], vec![3]]);
        let r = orbits_and_stabilizer(&g, 1).unwrap();
        assert_eq!(r.orbits, vec![vec![1, 2], vec![3]]);
        assert!(r.contiguous);
        assert!(!orbits_and_stabilizer(&one_row(3, vec![vec![1, 3], vec![2]]), 1).unwrap().contiguous);
        let r = orbits_and_stabilizer(&one_row(4, vec![vec![1, 2, 3, 4]]), 1).unwrap();
        assert_eq!(r.orbits.len(), 1);
        assert!(r.contiguous);
        let l = Composition::new(vec![3]).unwrap();
        assert!(YoungSubgroup::new(&l, vec![vec![vec![1, 2], vec![2, 3]]]).is_err());
        assert!(YoungSubgroup::new(&l, vec![vec![vec![1, 2]]]).is_err());
    }

    #[test]
    fn coset_rep_examples() {
        let s2 = one_row(2, vec![vec![1, 2]]);
        let triv = one_row(2, vec![vec![1], vec![2]]);
        assert_eq!(shortest_coset_reps(&s2, &s2).unwrap(), vec![ReducedWord::empty()]);
        let reps = shortest_coset_reps(&s2, &triv).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[1].to_string(), "s[1,1]");
        assert_eq!(longest_coset_rep(&s2, &triv).unwrap().to_string(), "s[1,1]");
        assert!(matches!(shortest_coset_reps(&triv, &s2), Err(Error::NotASubgroup(_))));

        let s3 = one_row(3, vec![vec![1, 2, 3]]);
        let s21 = one_row(3, vec![vec![1, 2], vec![3]]);
        let lens: Vec<usize> = shortest_coset_reps(&s3, &s21).unwrap().iter().map(ReducedWord::len).collect();
        assert_eq!(lens, vec![0, 1, 2]);
    }
}
