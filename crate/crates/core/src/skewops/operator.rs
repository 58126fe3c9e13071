use std::collections::BTreeMap;
use std::fmt;

use super::symmetry::AffineSymmetry;
use crate::combinat::{Composition, Index, RowPermutation, ShiftVector};
use crate::error::Result;
use crate::exactalg::{Polynomial, RationalFunction, Q};

/// `Σ f_π · π` with symmetries pushed to the right; zero coefficients are
/// never stored, so equal operators have equal term maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewOperator {
    lambda: Composition,
    terms: BTreeMap<AffineSymmetry, RationalFunction>,
}

impl SkewOperator {
    pub fn zero(lambda: &Composition) -> Self {
        SkewOperator { lambda: lambda.clone(), terms: BTreeMap::new() }
    }

    pub fn identity(lambda: &Composition) -> Self {
        Self::term(lambda, RationalFunction::one(), AffineSymmetry::identity(lambda))
    }

    /// `f · π`.
    pub fn term(lambda: &Composition, f: RationalFunction, pi: AffineSymmetry) -> Self {
        let mut op = Self::zero(lambda);
        op.add_term(pi, f);
        op
    }

    /// Multiplication by `f`.
    pub fn mult(lambda: &Composition, f: RationalFunction) -> Self {
        Self::term(lambda, f, AffineSymmetry::identity(lambda))
    }

    pub fn symmetry(lambda: &Composition, pi: AffineSymmetry) -> Self {
        Self::term(lambda, RationalFunction::one(), pi)
    }

    /// `φ_a^n`.
    pub fn shift(lambda: &Composition, a: Index, n: i64) -> Self {
        Self::symmetry(lambda, AffineSymmetry::from_shift(lambda, ShiftVector::unit(a, n)))
    }

    pub fn perm(lambda: &Composition, p: RowPermutation) -> Self {
        Self::symmetry(lambda, AffineSymmetry::from_perm(p))
    }

    pub fn from_terms<I: IntoIterator<Item = (AffineSymmetry, RationalFunction)>>(lambda: &Composition, it: I) -> Self {
        let mut op = Self::zero(lambda);
        for (pi, f) in it {
            op.add_term(pi, f);
        }
        op
    }

    fn add_term(&mut self, pi: AffineSymmetry, f: RationalFunction) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&pi) {
            Some(c) => {
                let s = c.add(&f);
                if s.is_zero() {
                    self.terms.remove(&pi);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(pi, f);
            }
        }
    }

    pub fn lambda(&self) -> &Composition {
        &self.lambda
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineSymmetry, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, pi: &AffineSymmetry) -> RationalFunction {
        self.terms.get(pi).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient if the operator is a pure multiplication (or zero).
    pub fn as_multiplication(&self) -> Option<RationalFunction> {
        match self.terms.len() {
            0 => Some(RationalFunction::zero()),
            1 => {
                let (pi, f) = self.terms.iter().next().unwrap();
                pi.is_identity().then(|| f.clone())
            }
            _ => None,
        }
    }

    pub fn apply(&self, f: &RationalFunction) -> RationalFunction {
        let mut out = RationalFunction::zero();
        if f.is_zero() {
            return out;
        }
        for (pi, c) in &self.terms {
            out = out.add(&c.mul(&pi.act(f)));
        }
        out
    }

    pub fn apply_poly(&self, f: &Polynomial) -> RationalFunction {
        self.apply(&RationalFunction::from_poly(f.clone()))
    }

    /// `self ∘ other`, using `(f·π)∘(g·ρ) = (f·π(g))·(πρ)`.
    pub fn compose(&self, other: &SkewOperator) -> SkewOperator {
        let mut op = Self::zero(&self.lambda);
        for (pi, f) in &self.terms {
            for (rho, g) in &other.terms {
                op.add_term(pi.compose(rho), f.mul(&pi.act(g)));
            }
        }
        op
    }

    pub fn add(&self, other: &SkewOperator) -> SkewOperator {
        let mut op = self.clone();
        for (pi, f) in &other.terms {
            op.add_term(pi.clone(), f.clone());
        }
        op
    }

    pub fn neg(&self) -> SkewOperator {
        SkewOperator {
            lambda: self.lambda.clone(),
            terms: self.terms.iter().map(|(p, f)| (p.clone(), f.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &SkewOperator) -> SkewOperator {
        self.add(&other.neg())
    }

    /// `f ∘ self`: left multiplication of every coefficient.
    pub fn left_mul(&self, f: &RationalFunction) -> SkewOperator {
        Self::from_terms(&self.lambda, self.terms.iter().map(|(p, c)| (p.clone(), f.mul(c))))
    }

    pub fn scale(&self, c: &Q) -> SkewOperator {
        Self::from_terms(&self.lambda, self.terms.iter().map(|(p, f)| (p.clone(), f.scale(c))))
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &SkewOperator) -> SkewOperator {
        self.compose(other).sub(&other.compose(self))
    }

    /// `u ∘ self ∘ u⁻¹`.
    pub fn conjugate(&self, u: &AffineSymmetry) -> SkewOperator {
        Self::symmetry(&self.lambda, u.clone()).compose(self).compose(&Self::symmetry(&self.lambda, u.inverse()))
    }

    pub fn pow(&self, n: u32) -> SkewOperator {
        (0..n).fold(Self::identity(&self.lambda), |acc, _| acc.compose(self))
    }

    /// Substitutes into every coefficient, e.g. to specialize parameters.
    pub fn map_coefficients<F>(&self, f: F) -> Result<SkewOperator>
    where
        F: Fn(&RationalFunction) -> Result<RationalFunction>,
    {
        let mut terms = Vec::new();
        for (p, c) in &self.terms {
            terms.push((p.clone(), f(c)?));
        }
        Ok(Self::from_terms(&self.lambda, terms))
    }
}

/// Terms `(coeff) * perm * shift` joined by ` + `; `0` for the zero operator.
impl fmt::Display for SkewOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(pi, c)| format!("({c}) * {pi}")).collect();
        f.write_str(&parts.join(" + "))
    }
}
