use num_traits::Zero;

use super::*;
use crate::combinat::{Composition, Index, ReducedWord, RowPermutation, ShiftVector, SimpleReflection};
use crate::exactalg::{Polynomial, Scalar, Q};
use crate::skewops::build_generators;

fn lam(p: &[u32]) -> Composition {
    Composition::new(p.to_vec()).unwrap()
}

fn x(i: u32, j: u32) -> Polynomial {
    Polynomial::x(i, j)
}

/// `λ = (2,1)`, `v(x11) = v(x12) = z1`, `v(x21) = z2`.
pub(super) fn singular_21() -> EvalPoint {
    EvalPoint::from_pairs(&lam(&[2, 1]), &[((1, 1), 1, Q::zero()), ((1, 2), 1, Q::zero()), ((2, 1), 2, Q::zero())])
        .unwrap()
}

fn sv(l: &Composition, c: &[i64]) -> ShiftVector {
    ShiftVector::from_coords(l, c)
}

#[test]
fn point_action_contract() {
    let l = lam(&[2, 1]);
    let v = EvalPoint::generic(&l);
    let g = ShiftVector::unit(Index::new(1, 1), 1);
    let moved = point_action(&g, &v);
    assert_eq!(moved.eval_poly(&x(1, 1)), v.eval_poly(&x(1, 1)).sub(&Scalar::one()));
    assert_eq!(point_action(&ShiftVector::zero(), &v), v);
    let d = sv(&l, &[2, -1]);
    assert_eq!(point_action(&g.add(&d), &v), point_action(&g, &point_action(&d, &v)));
    // ev_{γ·v}(f) = ev_v(γ⁻¹ f)
    let f = &(&x(1, 1) * &x(1, 2)) + &x(2, 1).pow(2);
    let inv = crate::skewops::SkewOperator::shift(&l, Index::new(1, 1), -1);
    assert_eq!(moved.eval_poly(&f), v.eval_rf(&inv.apply_poly(&f)).unwrap());
}

#[test]
fn characters_and_functionals() {
    let v = singular_21();
    let l = v.lambda().clone();
    let f = &x(1, 1) + &x(1, 2);
    assert_eq!(Functional::evaluation(ShiftVector::zero()).eval(&v, &f), v.eval_poly(&f));
    let s = ReducedWord::new(vec![SimpleReflection::new(1, 1)]);
    let beta = Functional::new(s, ShiftVector::unit(Index::new(1, 1), 1));
    assert!(beta.eval(&v, &f).is_zero());
    let w = EvalPoint::generic(&l);
    let t = RowPermutation::transposition(&l, Index::new(1, 1), Index::new(1, 2)).unwrap();
    let swapped: std::collections::BTreeMap<_, _> =
        l.indices().into_iter().map(|a| (a, w.value(t.apply(a)).clone())).collect();
    assert_eq!(character_of(&w), character_of(&EvalPoint::new(&l, swapped).unwrap()));
}

#[test]
fn setup_examples() {
    let v = singular_21();
    let r = singularity_setup_check(&v, 3);
    assert!(r.passes());
    assert_eq!(r.stabilizer_order, 2);
    let l = lam(&[2, 1]);
    let bad = EvalPoint::from_pairs(
        &l,
        &[((1, 1), 1, Q::zero()), ((1, 2), 1, Q::from_integer(1.into())), ((2, 1), 2, Q::zero())],
    )
    .unwrap();
    let r = singularity_setup_check(&bad, 1);
    assert!(!r.maximal_stabilizer);
    assert!(r.witness.is_some());
    assert!(singularity_setup_check(&EvalPoint::generic(&l), 2).passes());
}

#[test]
fn canonical_representative_examples() {
    let v = singular_21();
    let l = v.lambda().clone();
    let orbits = canonical_representatives(&v, 1).unwrap();
    let find = |c: &[i64]| orbits.iter().find(|o| o.members.contains(&sv(&l, c))).unwrap();
    let o = find(&[0, 1]);
    assert_eq!(o.shift, sv(&l, &[1, 0]));
    assert_eq!(o.members.len(), 2);
    assert_eq!(o.reps.len(), 2);
    assert_eq!(find(&[1, 1]).reps.len(), 1);
    let z = find(&[0, 0]);
    assert!(z.shift.is_zero());
    assert_eq!(z.reps, vec![RowPermutation::identity(&l)]);
}

#[test]
fn basis_sizes() {
    let v = singular_21();
    let w = build_basis_b(&v, 1).unwrap();
    assert_eq!(w.len(), 9);
    assert_eq!(w.window_size(), 9);
    assert_eq!(w.certificate.rank, 9);
    let g = EvalPoint::generic(&lam(&[2, 1]));
    let w = build_basis_b(&g, 1).unwrap();
    assert!(w.basis.iter().all(|b| b.functional.word.is_empty()));
}

#[test]
fn words_outside_coset_reps_vanish() {
    let v = singular_21();
    let w = build_basis_b(&v, 1).unwrap();
    let s = ReducedWord::new(vec![SimpleReflection::new(1, 1)]);
    let beta = Functional::new(s, sv(&w.lambda, &[1, 1]));
    assert!(w.evaluate(&beta).iter().all(Scalar::is_zero));
}

#[test]
fn regular_one_one_action() {
    let l = lam(&[1, 1]);
    let v = EvalPoint::generic(&l);
    let w = build_basis_b(&v, 2).unwrap();
    let g = build_generators(&l);
    let b = w.index_of(w.orbit_of_shift(&ShiftVector::zero()).unwrap(), &RowPermutation::identity(&l)).unwrap();
    let c = w.act(g.e(1).unwrap(), b).unwrap();
    let target = w.index_of(w.orbit_of_shift(&sv(&l, &[1])).unwrap(), &RowPermutation::identity(&l)).unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[&target], v.eval_poly(&(&x(1, 1) - &x(2, 1))));
    let c = w.act(g.gamma(Index::new(1, 1)).unwrap(), b).unwrap();
    assert_eq!(c[&b], v.eval_poly(&x(1, 1)));
}

#[test]
fn singular_action_agrees_with_structural() {
    let v = singular_21();
    let w = build_basis_b(&v, 2).unwrap();
    let g = build_generators(&w.lambda);
    let e = w.prepare(g.e(1).unwrap()).unwrap();
    let f = w.prepare(g.f(1).unwrap()).unwrap();
    for b in 0..w.len() {
        if !w.is_interior(b) {
            continue;
        }
        assert_eq!(w.act_prepared(&e, b).unwrap(), w.act_structural(Direction::E(1), b).unwrap(), "E on {b}");
        assert_eq!(w.act_prepared(&f, b).unwrap(), w.act_structural(Direction::F(1), b).unwrap(), "F on {b}");
    }
    let ev = w.base_index();
    let img = w.act_prepared(&e, ev).unwrap();
    assert!(img.keys().any(|&c| w.basis[c].functional.word.len() == 1));
}

#[test]
fn singular_blocks() {
    let v = singular_21();
    let w = build_basis_b(&v, 1).unwrap();
    for row in w.block_table().unwrap() {
        assert_eq!(row.dim, row.coset_reps);
        assert!(row.dim == 1 || row.dim == 2);
        assert_eq!(row.socle_dim, 1);
        assert!(row.nilpotent);
    }
    let blocks = w.block_decompose();
    assert_eq!(blocks.values().map(Vec::len).sum::<usize>(), w.len());
}

#[test]
fn component_graph_examples() {
    let l = lam(&[1, 1]);
    let wall = EvalPoint::from_pairs(&l, &[((1, 1), 1, Q::zero()), ((2, 1), 1, Q::zero())]).unwrap();
    assert_eq!(component_graph(&wall, 3, EdgeRule::Both).unwrap().components.len(), 2);
    assert_eq!(component_graph(&wall, 3, EdgeRule::Either).unwrap().components.len(), 1);
    let generic = EvalPoint::generic(&l);
    assert_eq!(component_graph(&generic, 3, EdgeRule::Both).unwrap().components.len(), 1);
    let g21 = EvalPoint::generic(&lam(&[2, 1]));
    let cg = component_graph(&g21, 3, EdgeRule::Both).unwrap();
    assert_eq!(cg.components.len(), 1);
    assert_eq!(cg.vertices.len(), 49);
    assert!(component_graph(&singular_21(), 1, EdgeRule::Both).is_err());
    assert!(component_graph(&wall, 1, EdgeRule::Both).unwrap().to_dot().contains("style=dashed"));
}

#[test]
fn probe_singular() {
    let r = simplicity_probe(&singular_21(), 2);
    assert!(r.passes(), "{r:?}");
    let l = lam(&[2, 1]);
    let bad =
        EvalPoint::from_pairs(&l, &[((1, 1), 1, Q::zero()), ((1, 2), 1, Q::zero()), ((2, 1), 1, Q::zero())]).unwrap();
    let r = simplicity_probe(&bad, 1);
    assert!(!r.hypotheses_ok);
    assert!(!r.cross_row_violations.is_empty());
}
