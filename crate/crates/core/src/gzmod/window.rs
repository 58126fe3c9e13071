use std::collections::BTreeMap;

use serde::Serialize;

use super::functional::{eval_functional, Functional};
use super::point::{render_rational, EvalPoint, GZCharacter};
use super::setup::{canonical_representatives, canonicalize, stabilizer, OrbitData};
use crate::combinat::{Composition, RowPermutation, ShiftVector, YoungSubgroup};
use crate::error::{Error, Result};
use crate::exactalg::{rank, Polynomial, Scalar, VarId, Q};
use crate::invariants;

/// Highest test degree tried before giving up on a rank certificate.
pub const MAX_TEST_DEGREE: u32 = 40;

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub orbit: usize,
    pub perm: RowPermutation,
    pub functional: Functional,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub size: usize,
    pub test_degree: u32,
    pub family_size: usize,
    /// Rational values substituted for the parameters; a full rank after
    /// substitution implies full rank over the parameter field.
    pub specialization: Vec<(u32, String)>,
}

/// The basis `𝐁` of the functionals `ev_v ∘ ∂_w ∘ ξ_j` on a box of shifts.
#[derive(Clone, Debug)]
pub struct ModuleWindow {
    pub lambda: Composition,
    pub point: EvalPoint,
    pub radius: i64,
    pub gv: YoungSubgroup,
    pub orbits: Vec<OrbitData>,
    pub basis: Vec<BasisElement>,
    index: BTreeMap<(usize, RowPermutation), usize>,
    orbit_of: BTreeMap<ShiftVector, usize>,
    /// Invariant test polynomials in the rows below the top.
    pub family: Vec<Polynomial>,
    /// `values[b][f]`: basis element `b` on family member `f`.
    pub values: Vec<Vec<Scalar>>,
    pub certificate: RankCertificate,
}

/// Builds `𝐁` on the window of radius `r` and certifies its independence.
pub fn build_basis_b(v: &EvalPoint, r: i64) -> Result<ModuleWindow> {
    build_basis_b_from(v, r, None)
}

/// As [`build_basis_b`], starting the test degree at `degree` if given.
pub fn build_basis_b_from(v: &EvalPoint, r: i64, degree: Option<u32>) -> Result<ModuleWindow> {
    let lambda = v.lambda().clone();
    let orbits = canonical_representatives(v, r)?;
    let gv = stabilizer(v);
    let mut basis = Vec::new();
    let mut index = BTreeMap::new();
    let mut orbit_of = BTreeMap::new();
    for (j, o) in orbits.iter().enumerate() {
        orbit_of.insert(o.shift.clone(), j);
        for (w, word) in o.reps.iter().zip(&o.words) {
            index.insert((j, w.clone()), basis.len());
            basis.push(BasisElement {
                orbit: j,
                perm: w.clone(),
                functional: Functional::new(word.clone(), o.shift.clone()),
            });
        }
    }
    let rows: Vec<u32> = (1..lambda.k()).collect();
    let spec = v.specialization();
    let n = basis.len();
    let mut degree = degree.unwrap_or_else(|| lambda.max_part()).max(1);
    while invariants::family(&lambda, &rows, degree).len() < n && degree < MAX_TEST_DEGREE {
        degree += 1;
    }
    loop {
        let family = invariants::family(&lambda, &rows, degree);
        let values: Vec<Vec<Scalar>> = basis
            .iter()
            .map(|b| family.iter().map(|f| eval_functional(v, &b.functional.word, &b.functional.shift, f)).collect())
            .collect();
        let numeric: Vec<Vec<Q>> =
            values.iter().map(|row| row.iter().map(|s| specialize(s, &spec)).collect()).collect();
        let rk = rank(&numeric);
        if rk == n {
            let certificate = RankCertificate {
                rank: rk,
                size: n,
                test_degree: degree,
                family_size: family.len(),
                specialization: spec.iter().map(|(t, q)| (*t, render_rational(q))).collect(),
            };
            return Ok(ModuleWindow {
                lambda,
                point: v.clone(),
                radius: r,
                gv,
                orbits,
                basis,
                index,
                orbit_of,
                family,
                values,
                certificate,
            });
        }
        if degree >= MAX_TEST_DEGREE {
            return Err(Error::WindowRankError(format!("rank {rk} < {n} at test degree {degree}")));
        }
        degree += 1;
    }
}

/// Value of a parameter-only scalar after substituting rationals.
pub fn specialize(s: &Scalar, spec: &BTreeMap<u32, Q>) -> Q {
    let at = |v: VarId| match v {
        VarId::Param(t) => spec[&t].clone(),
        VarId::X(..) => unreachable!("scalars carry parameters only"),
    };
    let rf = s.as_rf();
    rf.numer().eval_q(&at) / rf.denom().eval_q(&at)
}

impl ModuleWindow {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Number of lattice points in the window.
    pub fn window_size(&self) -> usize {
        self.orbits.iter().map(|o| o.members.len()).sum()
    }

    pub fn index_of(&self, orbit: usize, perm: &RowPermutation) -> Option<usize> {
        self.index.get(&(orbit, perm.clone())).copied()
    }

    /// Orbit containing a shift, if it lies in the window.
    pub fn orbit_of_shift(&self, xi: &ShiftVector) -> Option<usize> {
        if xi.sup_norm() > self.radius {
            return None;
        }
        let (c, _) = canonicalize(&self.lambda, &self.gv, xi);
        self.orbit_of.get(&c).copied()
    }

    /// Orbit index of the shift `0`, whose block holds `ev_v`.
    pub fn base_orbit(&self) -> usize {
        self.orbit_of[&ShiftVector::zero()]
    }

    /// Index of `ev_v` itself.
    pub fn base_index(&self) -> usize {
        self.index_of(self.base_orbit(), &RowPermutation::identity(&self.lambda)).expect("identity word")
    }

    /// True iff every `±1` neighbour of the element's orbit lies in the window.
    pub fn is_interior(&self, b: usize) -> bool {
        self.orbits[self.basis[b].orbit].shift.sup_norm() < self.radius
    }

    pub fn character(&self, b: usize) -> &GZCharacter {
        &self.orbits[self.basis[b].orbit].character
    }

    /// `ev_v ∘ ∂_w ∘ ξ` on every family member.
    pub fn evaluate(&self, f: &Functional) -> Vec<Scalar> {
        self.family.iter().map(|p| f.eval(&self.point, p)).collect()
    }

    pub fn specialization(&self) -> BTreeMap<u32, Q> {
        self.point.specialization()
    }
}
