//! Properties of the skew operator algebra, divided differences and the
//! Gelfand-Zeitlin generators.

use proptest::prelude::*;

use ogz::combinat::{Composition, Index, RowPermutation, ShiftVector, SimpleReflection};
use ogz::divdiff::{compare_forms, nil_coxeter_rank, nil_coxeter_relations, partial, partial_simple};
use ogz::exactalg::{Monomial, Polynomial, RationalFunction, VarId, Q};
use ogz::invariants::{self, rand_like::SplitMix, swap_vars};
use ogz::skewops::{build_generators, check_invariance, AffineSymmetry, SkewOperator};

fn lam22() -> Composition {
    Composition::new(vec![2, 2]).unwrap()
}

fn vars22() -> Vec<VarId> {
    vec![VarId::X(1, 1), VarId::X(1, 2), VarId::X(2, 1), VarId::X(2, 2)]
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 4), -4i64..=4), 0..4).prop_map(|terms| {
        let vs = vars22();
        Polynomial::from_terms(terms.into_iter().map(|(exps, c)| {
            let pairs = vs.iter().copied().zip(exps).filter(|&(_, e)| e > 0).collect();
            (Monomial::from_pairs(pairs), Q::from_integer(c.into()))
        }))
    })
}

/// Coefficients `p / (x_a - x_b + n)` keep denominators simple and nonzero.
fn coefficient() -> impl Strategy<Value = RationalFunction> {
    (poly(), 0usize..4, 0usize..4, -2i64..=2).prop_map(|(p, a, b, n)| {
        let vs = vars22();
        if a == b {
            return RationalFunction::from_poly(p);
        }
        let den = &(&Polynomial::var(vs[a]) - &Polynomial::var(vs[b])) + &Polynomial::int(n);
        RationalFunction::normalize(p, den).unwrap()
    })
}

fn symmetry() -> impl Strategy<Value = AffineSymmetry> {
    (any::<bool>(), any::<bool>(), -2i64..=2, -2i64..=2).prop_map(|(s1, s2, n1, n2)| {
        let l = lam22();
        let row = |s: bool| if s { vec![2, 1] } else { vec![1, 2] };
        let p = RowPermutation::from_rows(&l, vec![row(s1), row(s2)]).unwrap();
        AffineSymmetry::new(p, ShiftVector::from_coords(&l, &[n1, n2]))
    })
}

fn operator() -> impl Strategy<Value = SkewOperator> {
    prop::collection::vec((symmetry(), coefficient()), 1..3).prop_map(|terms| SkewOperator::from_terms(&lam22(), terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn composition_is_associative(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn normal_form_is_faithful_to_action(a in operator(), b in operator(), f in poly()) {
        let f = RationalFunction::from_poly(f);
        prop_assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
        prop_assert_eq!(a.add(&b).apply(&f), a.apply(&f).add(&b.apply(&f)));
    }

    #[test]
    fn symmetries_form_a_group(s in symmetry(), t in symmetry(), f in poly()) {
        let l = lam22();
        let f = RationalFunction::from_poly(f);
        prop_assert!(s.compose(&s.inverse()).is_identity());
        let st = SkewOperator::symmetry(&l, s.compose(&t));
        prop_assert_eq!(st.apply(&f), s.act(&t.act(&f)));
    }

    #[test]
    fn divided_difference_matches_quotient(f in poly()) {
        let l = lam22();
        for (a, b) in [(Index::new(1, 1), Index::new(1, 2)), (Index::new(2, 2), Index::new(2, 1))] {
            let d = partial(&l, a, b).unwrap().apply_poly(&f);
            let diff = &f - &swap_vars(&f, a, b);
            let den = &Polynomial::var(a.var()) - &Polynomial::var(b.var());
            prop_assert_eq!(d.as_polynomial().cloned(), diff.div_exact(&den));
        }
    }

    #[test]
    fn generator_images_are_invariant(seed in any::<u64>(), which in 0usize..5) {
        let parts: [&[u32]; 5] = [&[1, 1], &[2, 1], &[1, 2], &[2, 2], &[1, 2, 3]];
        let l = Composition::new(parts[which].to_vec()).unwrap();
        let g = build_generators(&l);
        let f = invariants::random_invariant(&l, 3, &mut SplitMix(seed));
        for i in 1..l.k() {
            prop_assert!(check_invariance(g.e(i).unwrap(), &f).unwrap().is_invariant_image);
            prop_assert!(check_invariance(g.f(i).unwrap(), &f).unwrap().is_invariant_image);
        }
    }
}

#[test]
fn nil_coxeter_rank_is_group_order() {
    assert_eq!(nil_coxeter_rank(4), 24);
    let l = Composition::new(vec![4]).unwrap();
    assert!(nil_coxeter_relations(&l, 1).unwrap().holds());
}

#[test]
fn divided_differences_kill_symmetric_polynomials() {
    let l = Composition::new(vec![3]).unwrap();
    for k in 1..=3 {
        let e = invariants::elementary(&l, 1, k);
        for p in 1..3 {
            assert!(partial_simple(&l, SimpleReflection::new(1, p)).unwrap().apply_poly(&e).is_zero());
        }
    }
}

#[test]
fn ddiff_form_on_larger_rows() {
    let l = Composition::new(vec![3, 2]).unwrap();
    let family = invariants::family(&l, &[1, 2], 4);
    for mu in Composition::all_of(3) {
        assert!(compare_forms(&l, 1, &mu, &family).unwrap().agrees(), "μ={mu}");
    }
}

#[test]
fn gl_commutators_on_three_rows() {
    let l = Composition::new(vec![1, 1, 1]).unwrap();
    let g = build_generators(&l);
    let x = |i| Polynomial::x(i, 1);
    // [E1,F1] = 1 and [E2,F2] = (x2 - x3) + (x2 - x1), expanded by hand
    let expected = [Polynomial::one(), &(&x(2).scale(&Q::from_integer(2.into())) - &x(1)) - &x(3)];
    for i in 1..3 {
        let c = g.e(i).unwrap().commutator(g.f(i).unwrap());
        assert_eq!(c, SkewOperator::mult(&l, RationalFunction::from_poly(expected[i as usize - 1].clone())));
    }
    assert!(g.e(1).unwrap().commutator(g.f(2).unwrap()).is_zero());
}
