use std::collections::BTreeMap;

use super::action::Coeffs;
use super::setup::canonicalize;
use super::window::ModuleWindow;
use crate::combinat::{Composition, RowPermutation, ShiftVector, SimpleReflection};
use crate::divdiff::{composition_blocks, partial_word};
use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, RationalFunction, Scalar};
use crate::invariants::swap_vars;
use crate::skewops::{AffineSymmetry, SkewOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    E(u32),
    F(u32),
}

impl Direction {
    pub fn row(self) -> u32 {
        match self {
            Direction::E(i) | Direction::F(i) => i,
        }
    }

    pub fn step(self) -> i64 {
        match self {
            Direction::E(_) => 1,
            Direction::F(_) => -1,
        }
    }
}

fn swap_rf(h: &RationalFunction, s: SimpleReflection) -> RationalFunction {
    let (a, b) = (s.left(), s.right());
    RationalFunction::normalize(swap_vars(h.numer(), a, b), swap_vars(h.denom(), a, b)).expect("nonzero denominator")
}

/// `∂_s(h)` for a rational function.
fn partial_rf(h: &RationalFunction, s: SimpleReflection) -> RationalFunction {
    let diff = h.sub(&swap_rf(h, s));
    let d = &Polynomial::var(s.left().var()) - &Polynomial::var(s.right().var());
    diff.div(&RationalFunction::from_poly(d)).expect("nonzero divisor")
}

/// Rewrites `∂_{s_1} ∘ ⋯ ∘ ∂_{s_l} ∘ g` as `Σ_P h_P ∘ ∂_P` by the Leibniz rule,
/// dropping products that are not reduced.
pub fn leibniz_expand(
    lambda: &Composition,
    letters: &[SimpleReflection],
    g: &RationalFunction,
) -> BTreeMap<RowPermutation, RationalFunction> {
    let mut terms: BTreeMap<RowPermutation, RationalFunction> = BTreeMap::new();
    terms.insert(RowPermutation::identity(lambda), g.clone());
    for &s in letters.iter().rev() {
        let sp = RowPermutation::identity(lambda).mul_simple(s);
        let mut next: BTreeMap<RowPermutation, RationalFunction> = BTreeMap::new();
        let mut add = |p: RowPermutation, h: RationalFunction| {
            if h.is_zero() {
                return;
            }
            let e = next.entry(p).or_insert_with(RationalFunction::zero);
            *e = e.add(&h);
        };
        for (p, h) in terms {
            add(p.clone(), partial_rf(&h, s));
            let q = sp.compose(&p);
            if q.length() == p.length() + 1 {
                add(q, swap_rf(&h, s));
            }
        }
        next.retain(|_, h| !h.is_zero());
        terms = next;
    }
    terms
}

/// Writes an operator `Σ_σ a_σ σ` (permutations only) as `Σ_Q h_Q ∂_Q`.
pub fn expand_in_partials(op: &SkewOperator) -> Result<BTreeMap<RowPermutation, RationalFunction>> {
    let lambda = op.lambda().clone();
    let mut rest = op.clone();
    let mut out = BTreeMap::new();
    while let Some((sigma, a)) = rest
        .terms()
        .max_by(|(p, _), (q, _)| p.perm().length().cmp(&q.perm().length()).then_with(|| p.cmp(q)))
        .map(|(p, a)| (p.clone(), a.clone()))
    {
        if !sigma.shift().is_zero() {
            return Err(Error::Validation("operator contains shifts".into()));
        }
        let d = partial_word(&lambda, &sigma.perm().reduced_word())?;
        let lead = d.coefficient(&sigma);
        let h = a.div(&lead)?;
        rest = rest.sub(&d.left_mul(&h));
        out.insert(sigma.perm().clone(), h);
    }
    Ok(out)
}

impl ModuleWindow {
    /// `β ∘ E_i` or `β ∘ F_i` computed through the divided-difference form
    /// of the generator, the Leibniz rule and the conjugation and vanishing
    /// properties of the basis.
    pub fn act_structural(&self, dir: Direction, b: usize) -> Result<Coeffs> {
        let lambda = &self.lambda;
        let i = dir.row();
        if i == 0 || i >= lambda.k() {
            return Err(Error::InvalidIndex(format!("generator row {i}")));
        }
        let elem = &self.basis[b];
        let orbit = &self.orbits[elem.orbit];
        let mu = Composition::new(orbit.stabilizer.row_composition(i))?;
        let blocks = composition_blocks(lambda, i, &mu)?;
        let xi = AffineSymmetry::from_shift(lambda, orbit.shift.clone());
        let mut out = Coeffs::new();
        for block in &blocks {
            let f = match dir {
                Direction::E(_) => &block.f_plus,
                Direction::F(_) => &block.f_minus,
            };
            let g = xi.act(f);
            let mut letters = elem.functional.word.letters().to_vec();
            letters.extend_from_slice(block.chain.letters());
            let target = orbit.shift.add(&ShiftVector::unit(block.min(), dir.step()));
            for (p, h) in leibniz_expand(lambda, &letters, &g) {
                let c = self.point.eval_rf(&h)?;
                if !c.is_zero() {
                    self.add_transported(&mut out, &c, &p, &target)?;
                }
            }
        }
        out.retain(|_, s| !s.is_zero());
        Ok(out)
    }

    /// Adds `c · ev_v ∘ ∂_P ∘ ξ` in basis coordinates, moving `ξ` to its
    /// canonical representative by conjugation.
    fn add_transported(&self, out: &mut Coeffs, c: &Scalar, p: &RowPermutation, xi: &ShiftVector) -> Result<()> {
        let lambda = &self.lambda;
        let j = self.orbit_of_shift(xi).ok_or_else(|| {
            Error::WindowLeakage(format!("{} lies outside radius {}", xi.render(lambda), self.radius))
        })?;
        let (_, rho) = canonicalize(lambda, &self.gv, xi);
        let terms = if rho.is_identity() {
            BTreeMap::from([(p.clone(), RationalFunction::one())])
        } else {
            let d = partial_word(lambda, &p.reduced_word())?;
            expand_in_partials(&d.conjugate(&AffineSymmetry::from_perm(rho)))?
        };
        for (q, h) in terms {
            // words outside X_j give the zero functional
            let Some(idx) = self.index_of(j, &q) else { continue };
            let k = self.point.eval_rf(&h)?;
            let e = out.entry(idx).or_insert_with(Scalar::zero);
            *e = e.add(&c.mul(&k));
        }
        Ok(())
    }
}
