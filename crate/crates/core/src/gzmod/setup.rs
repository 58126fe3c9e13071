use serde::Serialize;

use super::point::{EvalPoint, GZCharacter};
use crate::combinat::{
    shortest_coset_perms, window_shifts, Composition, Index, ReducedWord, RowPermutation, ShiftVector, YoungSubgroup,
};
use crate::error::{Error, Result};

/// Stabilizer of `v` in `S_{λ_1} × ⋯ × S_{λ_{k-1}}`: indices of one row with
/// equal values form a block.
pub fn stabilizer(v: &EvalPoint) -> YoungSubgroup {
    let lambda = v.lambda();
    let blocks = (1..=lambda.k())
        .map(|i| {
            let mut groups: Vec<Vec<u32>> = Vec::new();
            for a in lambda.row(i) {
                let slot = if i < lambda.k() {
                    groups.iter_mut().find(|g| v.value(Index::new(i, g[0])) == v.value(a))
                } else {
                    None
                };
                match slot {
                    Some(g) => g.push(a.col),
                    None => groups.push(vec![a.col]),
                }
            }
            groups
        })
        .collect();
    YoungSubgroup::new(lambda, blocks).expect("a partition of every row")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetupReport {
    /// No window shift enlarges the stabilizer beyond `G_v`.
    pub maximal_stabilizer: bool,
    /// A shift that breaks maximality, rendered over the shiftable indices.
    pub witness: Option<String>,
    /// Every `G_v`-orbit in every row is a segment of consecutive columns.
    pub contiguous_orbits: bool,
    pub orbits: Vec<Vec<Vec<u32>>>,
    pub stabilizer_order: u64,
}

impl SetupReport {
    pub fn passes(&self) -> bool {
        self.maximal_stabilizer && self.contiguous_orbits
    }
}

/// Checks that `G_v` is the largest stabilizer on the window of radius `r`
/// and that its orbits are contiguous.
pub fn singularity_setup_check(v: &EvalPoint, r: i64) -> SetupReport {
    let lambda = v.lambda();
    let gv = stabilizer(v);
    // a shift enlarges the stabilizer exactly when it equalizes two values of
    // one row that differ by a nonzero integer
    let mut witness = None;
    'search: for i in 1..lambda.k() {
        let row = lambda.row(i);
        for (p, &a) in row.iter().enumerate() {
            for &b in &row[p + 1..] {
                if let Some(d) = v.value(a).integer_difference(v.value(b)) {
                    if d != 0 && d.abs() <= 2 * r {
                        let h = d / 2;
                        let xi = ShiftVector::new(lambda, [(b, d - h), (a, -h)]).expect("shiftable row");
                        witness = Some(xi.render(lambda));
                        break 'search;
                    }
                }
            }
        }
    }
    SetupReport {
        maximal_stabilizer: witness.is_none(),
        witness,
        contiguous_orbits: gv.all_contiguous(),
        orbits: (1..=lambda.k()).map(|i| gv.blocks(i).to_vec()).collect(),
        stabilizer_order: gv.order(),
    }
}

/// One `G_v`-orbit of window shifts with its canonical representative.
#[derive(Clone, Debug)]
pub struct OrbitData {
    /// `ξ_j`: weakly decreasing along every block of `G_v`.
    pub shift: ShiftVector,
    pub members: Vec<ShiftVector>,
    /// `u_j = v + ξ_j`.
    pub point: EvalPoint,
    /// `G_{u_j}`.
    pub stabilizer: YoungSubgroup,
    /// `X_j`, shortest first.
    pub reps: Vec<RowPermutation>,
    pub words: Vec<ReducedWord>,
    pub character: GZCharacter,
}

/// Sorts a shift decreasingly along the blocks of `gv`. Returns the sorted
/// shift and `ρ ∈ gv` with `ρ ξ ρ⁻¹` equal to it.
pub fn canonicalize(lambda: &Composition, gv: &YoungSubgroup, xi: &ShiftVector) -> (ShiftVector, RowPermutation) {
    let mut rows: Vec<Vec<u32>> = lambda.parts().iter().map(|&n| (1..=n).collect()).collect();
    let mut out = ShiftVector::zero();
    for i in 1..=lambda.k() {
        for block in gv.blocks(i) {
            let mut order = block.clone();
            order.sort_by_key(|&c| (std::cmp::Reverse(xi.get(Index::new(i, c))), c));
            for (&dst, &src) in block.iter().zip(&order) {
                rows[i as usize - 1][src as usize - 1] = dst;
                out.set(Index::new(i, dst), xi.get(Index::new(i, src)));
            }
        }
    }
    (out, RowPermutation::from_rows(lambda, rows).expect("block permutation"))
}

pub fn canonical_representatives(v: &EvalPoint, r: i64) -> Result<Vec<OrbitData>> {
    let report = singularity_setup_check(v, r);
    if !report.passes() {
        return Err(Error::InvalidSingularSetup(format!(
            "maximal stabilizer: {}, contiguous orbits: {}{}",
            report.maximal_stabilizer,
            report.contiguous_orbits,
            report.witness.map(|w| format!(", witness shift {w}")).unwrap_or_default()
        )));
    }
    let lambda = v.lambda();
    let gv = stabilizer(v);
    let mut orbits: std::collections::BTreeMap<Vec<i64>, Vec<ShiftVector>> = Default::default();
    for xi in window_shifts(lambda, r) {
        let (c, _) = canonicalize(lambda, &gv, &xi);
        orbits.entry(c.coords(lambda)).or_default().push(xi);
    }
    orbits
        .into_iter()
        .map(|(coords, members)| {
            let shift = ShiftVector::from_coords(lambda, &coords);
            let point = v.shifted(&shift);
            let gu = stabilizer(&point);
            let reps = shortest_coset_perms(&gv, &gu)?;
            let words = reps.iter().map(RowPermutation::reduced_word).collect();
            let character = point.character();
            Ok(OrbitData { shift, members, point, stabilizer: gu, reps, words, character })
        })
        .collect()
}
