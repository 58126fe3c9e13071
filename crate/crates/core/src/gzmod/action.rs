use std::collections::{BTreeMap, BTreeSet};

use super::functional::eval_functional;
use super::point::GZCharacter;
use super::window::{specialize, ModuleWindow};
use crate::error::{Error, Result};
use crate::exactalg::{rank, solve, Polynomial, Scalar, Q};
use crate::skewops::SkewOperator;

/// Sparse coefficient vector over the window basis.
pub type Coeffs = BTreeMap<usize, Scalar>;

/// A generator together with its images of the test family.
#[derive(Clone, Debug)]
pub struct PreparedGenerator {
    pub op: SkewOperator,
    pub images: Vec<Polynomial>,
}

impl ModuleWindow {
    pub fn prepare(&self, op: &SkewOperator) -> Result<PreparedGenerator> {
        let images = self
            .family
            .iter()
            .map(|f| {
                let img = op.apply_poly(f);
                img.as_polynomial()
                    .cloned()
                    .ok_or_else(|| Error::Validation(format!("image of an invariant is not a polynomial: {img}")))
            })
            .collect::<Result<_>>()?;
        Ok(PreparedGenerator { op: op.clone(), images })
    }

    /// Coefficients of `β ∘ gen` over the basis, for `β` the basis element `b`.
    pub fn act(&self, op: &SkewOperator, b: usize) -> Result<Coeffs> {
        self.act_prepared(&self.prepare(op)?, b)
    }

    /// Basis elements whose blocks can receive `b ∘ gen`.
    fn candidates(&self, op: &SkewOperator, b: usize) -> Result<Vec<usize>> {
        let o = &self.orbits[self.basis[b].orbit];
        let mut orbits = BTreeSet::new();
        for (pi, _) in op.terms() {
            if !pi.perm().is_identity() {
                return Err(Error::Validation("generator terms must be pure shifts".into()));
            }
            let target = o.shift.add(pi.shift());
            let j = self.orbit_of_shift(&target).ok_or_else(|| {
                Error::WindowLeakage(format!(
                    "basis element {b} reaches {} outside radius {}",
                    target.render(&self.lambda),
                    self.radius
                ))
            })?;
            orbits.insert(j);
        }
        Ok((0..self.len()).filter(|c| orbits.contains(&self.basis[*c].orbit)).collect())
    }

    pub fn act_prepared(&self, gen: &PreparedGenerator, b: usize) -> Result<Coeffs> {
        let cands = self.candidates(&gen.op, b)?;
        let beta = &self.basis[b].functional;
        let rhs: Vec<Scalar> =
            gen.images.iter().map(|g| eval_functional(&self.point, &beta.word, &beta.shift, g)).collect();
        if cands.is_empty() {
            return if rhs.iter().all(Scalar::is_zero) {
                Ok(Coeffs::new())
            } else {
                Err(Error::WindowLeakage(format!("basis element {b} has no target block")))
            };
        }
        // rows whose numeric restriction has full column rank
        let spec = self.specialization();
        let mut chosen: Vec<usize> = Vec::new();
        let mut numeric: Vec<Vec<Q>> = Vec::new();
        for f in 0..self.family.len() {
            let row: Vec<Q> = cands.iter().map(|&c| specialize(&self.values[c][f], &spec)).collect();
            numeric.push(row);
            if rank(&numeric) > chosen.len() {
                chosen.push(f);
                if chosen.len() == cands.len() {
                    break;
                }
            } else {
                numeric.pop();
            }
        }
        if chosen.len() < cands.len() {
            return Err(Error::WindowRankError(format!("candidate columns for element {b} are dependent")));
        }
        let a: Vec<Vec<Scalar>> =
            chosen.iter().map(|&f| cands.iter().map(|&c| self.values[c][f].clone()).collect()).collect();
        let rhs_sel: Vec<Scalar> = chosen.iter().map(|&f| rhs[f].clone()).collect();
        let x = solve(&a, &rhs_sel).ok_or_else(|| Error::WindowRankError("singular selected system".into()))?;
        for (f, want) in rhs.iter().enumerate() {
            let mut got = Scalar::zero();
            for (&c, coef) in cands.iter().zip(&x) {
                if !coef.is_zero() {
                    got = got.add(&coef.mul(&self.values[c][f]));
                }
            }
            if got != *want {
                return Err(Error::WindowLeakage(format!("nonzero residual for element {b} on test polynomial {f}")));
            }
        }
        Ok(cands.into_iter().zip(x).filter(|(_, s)| !s.is_zero()).collect())
    }

    /// `pr_χ`: keeps the coefficients of basis elements in block `chi`.
    pub fn project(&self, v: &Coeffs, chi: &GZCharacter) -> Coeffs {
        v.iter().filter(|(b, _)| self.character(**b) == chi).map(|(b, s)| (*b, s.clone())).collect()
    }

    /// Splits a vector into its nonzero block components.
    pub fn split_blocks(&self, v: &Coeffs) -> BTreeMap<usize, Coeffs> {
        let mut out: BTreeMap<usize, Coeffs> = BTreeMap::new();
        for (b, s) in v {
            out.entry(self.basis[*b].orbit).or_default().insert(*b, s.clone());
        }
        out
    }

    /// `φ ∘ gen` for a vector `φ`, from per-element actions.
    pub fn act_vector(&self, v: &Coeffs, table: &BTreeMap<usize, Coeffs>) -> Option<Coeffs> {
        let mut out = Coeffs::new();
        for (b, s) in v {
            for (c, t) in table.get(b)? {
                let e = out.entry(*c).or_insert_with(Scalar::zero);
                *e = e.add(&s.mul(t));
            }
        }
        out.retain(|_, s| !s.is_zero());
        Some(out)
    }
}
