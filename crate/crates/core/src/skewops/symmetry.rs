use std::fmt;

use crate::combinat::{Composition, Index, RowPermutation, ShiftVector};
use crate::exactalg::{RationalFunction, VarId, Q};

/// `x_a ↦ x_{p(a)} + n_{p(a)}`: a row permutation followed by a lattice shift.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineSymmetry {
    perm: RowPermutation,
    shift: ShiftVector,
}

impl AffineSymmetry {
    pub fn identity(lambda: &Composition) -> Self {
        AffineSymmetry { perm: RowPermutation::identity(lambda), shift: ShiftVector::zero() }
    }

    pub fn new(perm: RowPermutation, shift: ShiftVector) -> Self {
        AffineSymmetry { perm, shift }
    }

    pub fn from_perm(perm: RowPermutation) -> Self {
        AffineSymmetry { perm, shift: ShiftVector::zero() }
    }

    pub fn from_shift(lambda: &Composition, shift: ShiftVector) -> Self {
        AffineSymmetry { perm: RowPermutation::identity(lambda), shift }
    }

    pub fn perm(&self) -> &RowPermutation {
        &self.perm
    }

    pub fn shift(&self) -> &ShiftVector {
        &self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.shift.is_zero() && self.perm.is_identity()
    }

    /// Image of the variable `x_a` as `(target index, offset)`.
    pub fn image(&self, a: Index) -> (Index, i64) {
        let b = self.perm.apply(a);
        (b, self.shift.get(b))
    }

    pub fn act(&self, f: &RationalFunction) -> RationalFunction {
        if self.is_identity() {
            return f.clone();
        }
        f.apply_affine(|v| match v {
            VarId::X(i, j) => {
                let (b, n) = self.image(Index::new(i, j));
                Some((b.var(), Q::from_integer(n.into())))
            }
            VarId::Param(_) => None,
        })
    }

    /// `self ∘ other`, so that `(self ∘ other)(f) = self(other(f))`.
    pub fn compose(&self, other: &AffineSymmetry) -> AffineSymmetry {
        let mut shift = self.shift.clone();
        for (c, n) in other.shift.entries() {
            let d = self.perm.apply(c);
            shift.set(d, shift.get(d) + n);
        }
        AffineSymmetry { perm: self.perm.compose(&other.perm), shift }
    }

    pub fn inverse(&self) -> AffineSymmetry {
        let pinv = self.perm.inverse();
        let mut shift = ShiftVector::zero();
        for (c, n) in self.shift.entries() {
            shift.set(pinv.apply(c), -n);
        }
        AffineSymmetry { perm: pinv, shift }
    }

    /// `perm * shift` rendering; `id` for the identity.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if !self.perm.is_identity() {
            parts.push(self.perm.cycles());
        }
        for (a, n) in self.shift.entries() {
            if n == 1 {
                parts.push(format!("phi[{},{}]", a.row, a.col));
            } else {
                parts.push(format!("phi[{},{}]^{}", a.row, a.col, n));
            }
        }
        if parts.is_empty() {
            "id".into()
        } else {
            parts.join(" * ")
        }
    }
}

impl fmt::Display for AffineSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
