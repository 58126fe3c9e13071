//! Divided difference operators inside the skew operator algebra, and the
//! divided-difference form of the Gelfand-Zeitlin generators.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::combinat::{Composition, Index, ReducedWord, RowPermutation, SimpleReflection};
use crate::error::{Error, Result};
use crate::exactalg::{sparse_rank, Monomial, Polynomial, RationalFunction, Q};
use crate::invariants::swap_vars;
use crate::skewops::{build_generators, AffineSymmetry, SkewOperator};

/// `∂_{a,b} = (x_a − x_b)^{-1} (id − (a,b))`.
pub fn partial(lambda: &Composition, a: Index, b: Index) -> Result<SkewOperator> {
    let t = RowPermutation::transposition(lambda, a, b)?;
    let c = RationalFunction::normalize(Polynomial::one(), &Polynomial::var(a.var()) - &Polynomial::var(b.var()))?;
    Ok(SkewOperator::mult(lambda, c.clone()).sub(&SkewOperator::perm(lambda, t).left_mul(&c)))
}

pub fn partial_simple(lambda: &Composition, s: SimpleReflection) -> Result<SkewOperator> {
    s.validate(lambda)?;
    partial(lambda, s.left(), s.right())
}

/// `∂_{s_1} ∘ ⋯ ∘ ∂_{s_l}`; the zero operator when the word is not reduced.
pub fn partial_word(lambda: &Composition, w: &ReducedWord) -> Result<SkewOperator> {
    if !w.ops(lambda)?.is_reduced {
        return Ok(SkewOperator::zero(lambda));
    }
    let mut op = SkewOperator::identity(lambda);
    for &s in w.letters() {
        op = op.compose(&partial_simple(lambda, s)?);
    }
    Ok(op)
}

/// `u ∘ op ∘ u⁻¹`.
pub fn conjugate(u: &RowPermutation, op: &SkewOperator) -> SkewOperator {
    op.conjugate(&AffineSymmetry::from_perm(u.clone()))
}

/// `∂_{a,b}(f)` for a polynomial, by exact division.
pub fn partial_poly(a: Index, b: Index, f: &Polynomial) -> Polynomial {
    let diff = f - &swap_vars(f, a, b);
    diff.div_exact(&(&Polynomial::var(a.var()) - &Polynomial::var(b.var())))
        .expect("antisymmetric polynomials are divisible by x_a - x_b")
}

/// `∂_w(f)` for a polynomial, letters applied right to left; zero for a
/// non-reduced word.
pub fn partial_word_poly(lambda: &Composition, w: &ReducedWord, f: &Polynomial) -> Result<Polynomial> {
    if !w.ops(lambda)?.is_reduced {
        return Ok(Polynomial::zero());
    }
    let mut g = f.clone();
    for s in w.letters().iter().rev() {
        g = partial_poly(s.left(), s.right(), &g);
        if g.is_zero() {
            break;
        }
    }
    Ok(g)
}

/// The two sides of `∂_{a,b}∘f∘γ = ∂_{a,b}(f)∘γ + f^{(a,b)}∘∂_{a,b}∘γ`.
#[derive(Clone, Debug)]
pub struct LeibnizMove {
    pub derivative_term: SkewOperator,
    pub swapped_term: SkewOperator,
}

impl LeibnizMove {
    pub fn sum(&self) -> SkewOperator {
        self.derivative_term.add(&self.swapped_term)
    }
}

pub fn leibniz_move(a: Index, b: Index, f: &RationalFunction, tail: &SkewOperator) -> Result<LeibnizMove> {
    let lambda = tail.lambda();
    let d = partial(lambda, a, b)?;
    let df = d.apply(f);
    let t = AffineSymmetry::from_perm(RowPermutation::transposition(lambda, a, b)?);
    let fs = t.act(f);
    Ok(LeibnizMove { derivative_term: tail.left_mul(&df), swapped_term: d.compose(tail).left_mul(&fs) })
}

/// One part of a composition `μ` of `λ_i`.
#[derive(Clone, Debug)]
pub struct CompositionBlock {
    pub row: u32,
    /// Columns of the block, consecutive.
    pub cols: Vec<u32>,
    /// `∂(μ,j)`: identity for a singleton block.
    pub partial: SkewOperator,
    pub chain: ReducedWord,
    pub f_plus: RationalFunction,
    pub f_minus: RationalFunction,
}

impl CompositionBlock {
    pub fn min(&self) -> Index {
        Index::new(self.row, self.cols[0])
    }
}

pub fn composition_blocks(lambda: &Composition, i: u32, mu: &Composition) -> Result<Vec<CompositionBlock>> {
    if i == 0 || i >= lambda.k() {
        return Err(Error::InvalidIndex(format!("row {i} carries no generators")));
    }
    if mu.m() != lambda.part(i) {
        return Err(Error::InvalidComposition(format!("{mu} is not a composition of {}", lambda.part(i))));
    }
    let mut out = Vec::new();
    let mut start = 1;
    for &len in mu.parts() {
        let cols: Vec<u32> = (start..start + len).collect();
        start += len;
        let min = Index::new(i, cols[0]);
        // ∂_{(l-1,l)} ∘ ⋯ ∘ ∂_{(min,min+1)}
        let letters: Vec<SimpleReflection> =
            cols[..cols.len() - 1].iter().rev().map(|&p| SimpleReflection::new(i, p)).collect();
        let chain = ReducedWord::new(letters);
        let partial = partial_word(lambda, &chain)?;
        let xm = Polynomial::var(min.var());
        let prod = |row: u32| {
            lambda
                .row(row)
                .into_iter()
                .filter(|a| a.row != i || !cols.contains(&a.col))
                .fold(Polynomial::one(), |acc, a| &acc * &(&xm - &Polynomial::var(a.var())))
        };
        let den = prod(i);
        let f_plus = RationalFunction::normalize(prod(i + 1), den.clone())?;
        let f_minus = RationalFunction::normalize(prod(i - 1), den)?;
        out.push(CompositionBlock { row: i, cols, partial, chain, f_plus, f_minus });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct DdiffForm {
    pub e: SkewOperator,
    pub f: SkewOperator,
}

/// `E_i = Σ_j ∂(μ,j) f(μ,j)^+ φ_{min(μ_j)}` and the matching `F_i`.
pub fn generators_ddiff_form(lambda: &Composition, i: u32, mu: &Composition) -> Result<DdiffForm> {
    let mut e = SkewOperator::zero(lambda);
    let mut f = SkewOperator::zero(lambda);
    for b in composition_blocks(lambda, i, mu)? {
        let up = SkewOperator::shift(lambda, b.min(), 1).left_mul(&b.f_plus);
        let down = SkewOperator::shift(lambda, b.min(), -1).left_mul(&b.f_minus);
        e = e.add(&b.partial.compose(&up));
        f = f.add(&b.partial.compose(&down));
    }
    Ok(DdiffForm { e, f })
}

/// Result of comparing classical and divided-difference generators on a
/// family of invariant polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DdiffComparison {
    pub row: u32,
    pub mu: Vec<u32>,
    pub tested: usize,
    pub e_mismatches: usize,
    pub f_mismatches: usize,
}

impl DdiffComparison {
    pub fn agrees(&self) -> bool {
        self.e_mismatches == 0 && self.f_mismatches == 0
    }
}

pub fn compare_forms(lambda: &Composition, i: u32, mu: &Composition, family: &[Polynomial]) -> Result<DdiffComparison> {
    let g = build_generators(lambda);
    let form = generators_ddiff_form(lambda, i, mu)?;
    let (e, f) = (g.e(i)?, g.f(i)?);
    let mut report = DdiffComparison { row: i, mu: mu.parts().to_vec(), tested: 0, e_mismatches: 0, f_mismatches: 0 };
    for p in family {
        report.tested += 1;
        if e.apply_poly(p) != form.e.apply_poly(p) {
            report.e_mismatches += 1;
        }
        if f.apply_poly(p) != form.f.apply_poly(p) {
            report.f_mismatches += 1;
        }
    }
    Ok(report)
}

/// Rank of `{∂_w : w ∈ S_n}` acting on the monomials of degree at most
/// `n(n-1)/2` in one row of length `n`.
pub fn nil_coxeter_rank(n: u32) -> usize {
    let lambda = Composition::new(vec![n]).expect("positive");
    let vars: Vec<Index> = lambda.row(1);
    let top = n * n.saturating_sub(1) / 2;
    let monos = monomials_up_to(&vars, top);
    let words = all_words(&lambda);
    let rows = words
        .iter()
        .map(|w| {
            let mut row: BTreeMap<(usize, Monomial), Q> = BTreeMap::new();
            for (mi, m) in monos.iter().enumerate() {
                let img = partial_word_poly(&lambda, w, m).expect("valid word");
                for (mono, c) in img.terms() {
                    row.insert((mi, mono.clone()), c.clone());
                }
            }
            row
        })
        .collect();
    sparse_rank(rows)
}

/// Nil-Coxeter relations among the `∂_s` of one row, as operator identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilCoxeterReport {
    pub row: u32,
    pub n: u32,
    pub squares: usize,
    pub braids: usize,
    pub commuting: usize,
    pub failures: Vec<String>,
    pub rank: usize,
    pub expected_rank: usize,
}

impl NilCoxeterReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.rank == self.expected_rank
    }
}

pub fn nil_coxeter_relations(lambda: &Composition, row: u32) -> Result<NilCoxeterReport> {
    lambda.check(Index::new(row, 1))?;
    let n = lambda.part(row);
    let ds: Vec<SkewOperator> =
        (1..n).map(|p| partial_simple(lambda, SimpleReflection::new(row, p))).collect::<Result<_>>()?;
    let mut report = NilCoxeterReport {
        row,
        n,
        squares: 0,
        braids: 0,
        commuting: 0,
        failures: Vec::new(),
        rank: nil_coxeter_rank(n),
        expected_rank: (1..=n as usize).product(),
    };
    for (p, d) in ds.iter().enumerate() {
        report.squares += 1;
        if !d.compose(d).is_zero() {
            report.failures.push(format!("square s{}", p + 1));
        }
        for (q, e) in ds.iter().enumerate().skip(p + 1) {
            if q == p + 1 {
                report.braids += 1;
                if d.compose(e).compose(d) != e.compose(d).compose(e) {
                    report.failures.push(format!("braid s{} s{}", p + 1, q + 1));
                }
            } else {
                report.commuting += 1;
                if d.compose(e) != e.compose(d) {
                    report.failures.push(format!("commute s{} s{}", p + 1, q + 1));
                }
            }
        }
    }
    Ok(report)
}

/// One reduced word for each element of the group of `lambda`.
pub fn all_words(lambda: &Composition) -> Vec<ReducedWord> {
    crate::combinat::YoungSubgroup::full_rows(lambda, |_| true)
        .elements()
        .expect("small group")
        .into_iter()
        .map(|p| p.reduced_word())
        .collect()
}

fn monomials_up_to(vars: &[Index], degree: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    fn rec(vars: &[Index], budget: u32, acc: Polynomial, out: &mut Vec<Polynomial>) {
        let Some((first, rest)) = vars.split_first() else {
            out.push(acc);
            return;
        };
        let x = Polynomial::var(first.var());
        let mut p = acc;
        for e in 0..=budget {
            rec(rest, budget - e, p.clone(), out);
            if e < budget {
                p = &p * &x;
            }
        }
    }
    rec(vars, degree, Polynomial::one(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants;

    fn lam(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn x(i: u32, j: u32) -> Polynomial {
        Polynomial::x(i, j)
    }

    fn s(row: u32, p: u32) -> SimpleReflection {
        SimpleReflection::new(row, p)
    }

    #[test]
    fn partial_examples() {
        let l = lam(&[2, 1]);
        let (a, b) = (Index::new(1, 1), Index::new(1, 2));
        let d = partial(&l, a, b).unwrap();
        assert!(d.apply_poly(&x(1, 1)).is_one());
        assert!(d.apply_poly(&(&x(1, 1) + &x(1, 2))).is_zero());
        assert_eq!(d.apply_poly(&x(1, 1).pow(2)), RationalFunction::from_poly(&x(1, 1) + &x(1, 2)));
        assert_eq!(partial_poly(a, b, &x(1, 1).pow(2)), &x(1, 1) + &x(1, 2));
        assert_eq!(partial(&l, b, a).unwrap(), d.neg());
        assert!(matches!(partial(&l, a, Index::new(2, 1)), Err(Error::InvalidPair(_))));
    }

    #[test]
    fn word_examples() {
        let l = lam(&[3]);
        assert!(partial_word(&l, &ReducedWord::new(vec![s(1, 1), s(1, 1)])).unwrap().is_zero());
        let w1 = partial_word(&l, &ReducedWord::new(vec![s(1, 1), s(1, 2), s(1, 1)])).unwrap();
        let w2 = partial_word(&l, &ReducedWord::new(vec![s(1, 2), s(1, 1), s(1, 2)])).unwrap();
        assert_eq!(w1, w2);
        assert_eq!(partial_word(&l, &ReducedWord::empty()).unwrap(), SkewOperator::identity(&l));
    }

    #[test]
    fn conjugate_transports_pair() {
        let l = lam(&[3]);
        let d = partial(&l, Index::new(1, 1), Index::new(1, 2)).unwrap();
        assert_eq!(conjugate(&RowPermutation::identity(&l), &d), d);
        let u = RowPermutation::from_rows(&l, vec![vec![2, 3, 1]]).unwrap();
        let moved = partial(&l, u.apply(Index::new(1, 1)), u.apply(Index::new(1, 2))).unwrap();
        assert_eq!(conjugate(&u, &d), moved);
        let t = RowPermutation::transposition(&l, Index::new(1, 1), Index::new(1, 2)).unwrap();
        assert_eq!(conjugate(&t, &d), d.neg());
        let e = partial(&l, Index::new(1, 2), Index::new(1, 3)).unwrap();
        assert_eq!(conjugate(&u, &d.compose(&e)), conjugate(&u, &d).compose(&conjugate(&u, &e)));
    }

    #[test]
    fn leibniz_examples() {
        let l = lam(&[2, 1]);
        let (a, b) = (Index::new(1, 1), Index::new(1, 2));
        let d = partial(&l, a, b).unwrap();
        let id = SkewOperator::identity(&l);
        let fx = RationalFunction::from_poly(x(1, 1));
        let mv = leibniz_move(a, b, &fx, &id).unwrap();
        assert_eq!(mv.derivative_term, id);
        assert_eq!(mv.swapped_term, d.left_mul(&RationalFunction::from_poly(x(1, 2))));
        assert_eq!(mv.sum(), d.compose(&SkewOperator::mult(&l, fx)));

        let sym = RationalFunction::from_poly(&x(1, 1) * &x(1, 2));
        let mv = leibniz_move(a, b, &sym, &id).unwrap();
        assert!(mv.derivative_term.is_zero());

        let l = lam(&[2, 2, 1]);
        let d = partial(&l, a, b).unwrap();
        let tail = SkewOperator::shift(&l, Index::new(2, 1), 1);
        assert_eq!(d.compose(&tail), tail.compose(&d));
        let g = RationalFunction::from_poly(&x(1, 1) - &x(2, 2));
        assert_eq!(leibniz_move(a, b, &g, &tail).unwrap().sum(), d.compose(&tail.left_mul(&g)));
    }

    #[test]
    fn nil_coxeter_relations() {
        for n in 2..=4 {
            let l = lam(&[n]);
            let ds: Vec<SkewOperator> = (1..n).map(|p| partial_simple(&l, s(1, p)).unwrap()).collect();
            for (p, d) in ds.iter().enumerate() {
                assert!(d.compose(d).is_zero());
                for (q, e) in ds.iter().enumerate() {
                    if p.abs_diff(q) > 1 {
                        assert_eq!(d.compose(e), e.compose(d));
                    } else if p + 1 == q {
                        assert_eq!(d.compose(e).compose(d), e.compose(d).compose(e));
                    }
                }
            }
        }
    }

    #[test]
    fn divided_differences_are_independent() {
        assert_eq!(nil_coxeter_rank(2), 2);
        assert_eq!(nil_coxeter_rank(3), 6);
    }

    #[test]
    fn ddiff_form_examples() {
        let l = lam(&[2, 1]);
        let form = generators_ddiff_form(&l, 1, &lam(&[2])).unwrap();
        let want = partial(&l, Index::new(1, 1), Index::new(1, 2)).unwrap().compose(
            &SkewOperator::shift(&l, Index::new(1, 1), 1).left_mul(&RationalFunction::from_poly(&x(1, 1) - &x(2, 1))),
        );
        assert_eq!(form.e, want);
        let f = &x(1, 1) + &x(1, 2);
        assert_eq!(form.e.apply_poly(&f), RationalFunction::from_poly(&f + &Polynomial::one()));
        let g = build_generators(&l);
        let p = &x(1, 1) * &x(1, 2);
        assert_eq!(form.f.apply_poly(&p), g.f(1).unwrap().apply_poly(&p));
        let classical = generators_ddiff_form(&l, 1, &lam(&[1, 1])).unwrap();
        assert_eq!(&classical.e, g.e(1).unwrap());
        assert_eq!(&classical.f, g.f(1).unwrap());
        assert!(matches!(generators_ddiff_form(&l, 1, &lam(&[3])), Err(Error::InvalidComposition(_))));
    }

    #[test]
    fn forms_differ_off_invariants() {
        let l = lam(&[2, 1]);
        let form = generators_ddiff_form(&l, 1, &lam(&[2])).unwrap();
        let g = build_generators(&l);
        assert_ne!(&form.e, g.e(1).unwrap());
        let fam = invariants::family(&l, &[1, 2], 3);
        assert!(compare_forms(&l, 1, &lam(&[2]), &fam).unwrap().agrees());
    }
}
