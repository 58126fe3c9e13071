use std::collections::BTreeSet;
use std::fmt;

use super::point::EvalPoint;
use crate::combinat::{Composition, Index, ReducedWord, RowPermutation, ShiftVector};
use crate::divdiff::partial_word_poly;
use crate::exactalg::{Polynomial, Scalar, VarId, Q};
use crate::skewops::SkewOperator;

/// `f ↦ ev_v(∂_w(ξ(f)))`, with the base point held by the caller.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Functional {
    pub word: ReducedWord,
    pub shift: ShiftVector,
}

impl Functional {
    pub fn new(word: ReducedWord, shift: ShiftVector) -> Self {
        Functional { word, shift }
    }

    pub fn evaluation(shift: ShiftVector) -> Self {
        Functional { word: ReducedWord::empty(), shift }
    }

    pub fn perm(&self, lambda: &Composition) -> RowPermutation {
        self.word.product(lambda)
    }

    pub fn eval(&self, v: &EvalPoint, f: &Polynomial) -> Scalar {
        eval_functional(v, &self.word, &self.shift, f)
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shifts: Vec<String> = self.shift.entries().map(|(a, n)| format!("{}:{}", a, n)).collect();
        write!(f, "ev . d[{}] . phi[{}]", self.word, shifts.join(" "))
    }
}

/// `ev_v(∂_w(ξ(f)))`. Variables untouched by `w` are evaluated before the
/// divided differences, which only see the variables they swap.
pub fn eval_functional(v: &EvalPoint, w: &ReducedWord, xi: &ShiftVector, f: &Polynomial) -> Scalar {
    let lambda = v.lambda();
    let touched: BTreeSet<Index> = w.letters().iter().flat_map(|s| [s.left(), s.right()]).collect();
    let g = f.affine_substitute(|var| match var {
        VarId::X(i, j) => {
            let a = Index::new(i, j);
            let n = Q::from_integer(xi.get(a).into());
            if touched.contains(&a) {
                (xi.get(a) != 0).then_some((var, n))
            } else {
                let pv = v.value(a);
                Some((VarId::Param(pv.tag), &pv.offset + n))
            }
        }
        VarId::Param(_) => None,
    });
    if touched.is_empty() {
        return Scalar::new(g.into()).expect("only parameters remain");
    }
    let g = partial_word_poly(lambda, w, &g).expect("word letters lie in the index set");
    v.eval_poly(&g)
}

/// `ev_v ∘ T` for an operator preserving polynomials on the input.
pub fn eval_operator_functional(v: &EvalPoint, op: &SkewOperator, f: &Polynomial) -> crate::Result<Scalar> {
    v.eval_rf(&op.apply_poly(f))
}
