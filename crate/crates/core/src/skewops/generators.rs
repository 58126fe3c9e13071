use std::collections::BTreeMap;

use super::operator::SkewOperator;
use crate::combinat::{Composition, Index};
use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, RationalFunction};
use crate::invariants;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// Numerator over row `i+1`, shift `+1`: the `E` generators.
    Plus,
    /// Numerator over row `i-1`, shift `-1`: the `F` generators.
    Minus,
}

impl Sign {
    pub fn row_offset(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// `Π_{a ∈ I^{(i±1)}} (x_c − x_a) / Π_{b ∈ I^{(i)}∖{c}} (x_c − x_b)` for `c = (i,j)`.
pub fn gz_coefficient(lambda: &Composition, c: Index, sign: Sign) -> RationalFunction {
    let xc = Polynomial::var(c.var());
    let other = (c.row as i64 + sign.row_offset()) as u32;
    let mut num = Polynomial::one();
    for a in lambda.row(other) {
        num = &num * &(&xc - &Polynomial::var(a.var()));
    }
    let mut den = Polynomial::one();
    for b in lambda.row(c.row) {
        if b != c {
            den = &den * &(&xc - &Polynomial::var(b.var()));
        }
    }
    RationalFunction::normalize(num, den).expect("distinct variables give a nonzero denominator")
}

#[derive(Clone, Debug)]
pub struct GZGenerators {
    lambda: Composition,
    e: Vec<SkewOperator>,
    f: Vec<SkewOperator>,
    gamma: BTreeMap<Index, SkewOperator>,
}

impl GZGenerators {
    pub fn lambda(&self) -> &Composition {
        &self.lambda
    }

    /// `E_i`, `1 ≤ i ≤ k-1`.
    pub fn e(&self, i: u32) -> Result<&SkewOperator> {
        self.e.get((i as usize).wrapping_sub(1)).ok_or_else(|| Error::InvalidIndex(format!("E{i}")))
    }

    pub fn f(&self, i: u32) -> Result<&SkewOperator> {
        self.f.get((i as usize).wrapping_sub(1)).ok_or_else(|| Error::InvalidIndex(format!("F{i}")))
    }

    pub fn gamma(&self, a: Index) -> Result<&SkewOperator> {
        self.gamma.get(&a).ok_or_else(|| Error::InvalidIndex(format!("gamma{a}")))
    }

    pub fn gammas(&self) -> impl Iterator<Item = (&Index, &SkewOperator)> {
        self.gamma.iter()
    }

    /// Looks up a generator by name: `E1`, `F2`, `gamma(1,2)`.
    pub fn by_name(&self, name: &str) -> Result<&SkewOperator> {
        let bad = || Error::NameError(name.to_string());
        if let Some(rest) = name.strip_prefix('E') {
            return self.e(rest.parse().map_err(|_| bad())?).map_err(|_| bad());
        }
        if let Some(rest) = name.strip_prefix('F') {
            return self.f(rest.parse().map_err(|_| bad())?).map_err(|_| bad());
        }
        if let Some(rest) = name.strip_prefix("gamma") {
            let inner = rest.trim_start_matches('(').trim_end_matches(')');
            let (i, j) = inner.split_once(',').ok_or_else(bad)?;
            let a = Index::new(i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?);
            return self.gamma(a).map_err(|_| bad());
        }
        Err(bad())
    }

    /// All generators with their names: `E_i`, `F_i`, then `γ_a`.
    pub fn named(&self) -> Vec<(String, &SkewOperator)> {
        let mut out = Vec::new();
        for (i, e) in self.e.iter().enumerate() {
            out.push((format!("E{}", i + 1), e));
        }
        for (i, f) in self.f.iter().enumerate() {
            out.push((format!("F{}", i + 1), f));
        }
        for (a, g) in &self.gamma {
            out.push((format!("gamma({},{})", a.row, a.col), g));
        }
        out
    }
}

pub fn build_generators(lambda: &Composition) -> GZGenerators {
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 1..lambda.k() {
        let mut ei = SkewOperator::zero(lambda);
        let mut fi = SkewOperator::zero(lambda);
        for c in lambda.row(i) {
            ei = ei.add(&SkewOperator::shift(lambda, c, 1).left_mul(&gz_coefficient(lambda, c, Sign::Plus)));
            fi = fi.add(&SkewOperator::shift(lambda, c, -1).left_mul(&gz_coefficient(lambda, c, Sign::Minus)));
        }
        e.push(ei);
        f.push(fi);
    }
    let gamma = lambda
        .indices()
        .into_iter()
        .map(|a| {
            let p = invariants::elementary(lambda, a.row, a.col);
            (a, SkewOperator::mult(lambda, RationalFunction::from_poly(p)))
        })
        .collect();
    GZGenerators { lambda: lambda.clone(), e, f, gamma }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub is_invariant_image: bool,
    pub image: RationalFunction,
}

/// Applies `op` to a `G`-invariant polynomial and reports whether the image
/// is again a `G`-invariant polynomial.
pub fn check_invariance(op: &SkewOperator, f: &Polynomial) -> Result<InvarianceReport> {
    let lambda = op.lambda();
    if !invariants::is_g_invariant(lambda, f) {
        return Err(Error::NotInvariantInput);
    }
    let image = op.apply_poly(f);
    let is_invariant_image = image.as_polynomial().is_some_and(|p| invariants::is_g_invariant(lambda, p));
    Ok(InvarianceReport { is_invariant_image, image })
}
