//! Compositions, the index set, the shift lattice, row permutation groups,
//! Coxeter words and Young subgroups.

mod composition;
mod perm;
mod young;

pub use composition::{window_shifts, Composition, Index, ShiftVector};
pub use perm::{ReducedWord, RowPermutation, SimpleReflection, WordInfo};
pub use young::{
    longest_coset_rep, orbits_and_stabilizer, shortest_coset_perms, shortest_coset_reps, OrbitReport, YoungSubgroup,
    ENUMERATION_LIMIT,
};
