use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{Composition, Index, ShiftVector};
use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, RationalFunction, Scalar, VarId, Q};

/// `z_tag + offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointValue {
    pub tag: u32,
    pub offset: Q,
}

impl PointValue {
    pub fn new(tag: u32, offset: Q) -> Self {
        PointValue { tag, offset }
    }

    pub fn scalar(&self) -> Scalar {
        Scalar::param_plus(self.tag, self.offset.clone())
    }

    /// `self − other` when it is an integer.
    pub fn integer_difference(&self, other: &PointValue) -> Option<i64> {
        if self.tag != other.tag {
            return None;
        }
        let d = &self.offset - &other.offset;
        if d.is_integer() {
            i64::try_from(d.to_integer()).ok()
        } else {
            None
        }
    }

    pub fn shifted(&self, n: i64) -> PointValue {
        PointValue { tag: self.tag, offset: &self.offset + Q::from_integer(n.into()) }
    }
}

impl fmt::Display for PointValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset.is_zero() {
            write!(f, "z[{}]", self.tag)
        } else if self.offset > Q::zero() {
            write!(f, "z[{}]+{}", self.tag, self.offset)
        } else {
            write!(f, "z[{}]{}", self.tag, self.offset)
        }
    }
}

/// A point `v` with `v(x_a) = z_t + q` for every index `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvalPoint {
    lambda: Composition,
    values: BTreeMap<Index, PointValue>,
}

impl EvalPoint {
    pub fn new(lambda: &Composition, values: BTreeMap<Index, PointValue>) -> Result<Self> {
        for a in values.keys() {
            lambda.check(*a)?;
        }
        if let Some(a) = lambda.indices().into_iter().find(|a| !values.contains_key(a)) {
            return Err(Error::Validation(format!("no value at {a}")));
        }
        Ok(EvalPoint { lambda: lambda.clone(), values })
    }

    /// Every index gets its own tag, numbered row-major from 1.
    pub fn generic(lambda: &Composition) -> Self {
        let values = lambda
            .indices()
            .into_iter()
            .enumerate()
            .map(|(t, a)| (a, PointValue::new(t as u32 + 1, Q::zero())))
            .collect();
        EvalPoint { lambda: lambda.clone(), values }
    }

    pub fn from_pairs(lambda: &Composition, pairs: &[((u32, u32), u32, Q)]) -> Result<Self> {
        let values = pairs.iter().map(|((i, j), t, q)| (Index::new(*i, *j), PointValue::new(*t, q.clone()))).collect();
        Self::new(lambda, values)
    }

    pub fn lambda(&self) -> &Composition {
        &self.lambda
    }

    pub fn value(&self, a: Index) -> &PointValue {
        &self.values[&a]
    }

    pub fn values(&self) -> impl Iterator<Item = (&Index, &PointValue)> {
        self.values.iter()
    }

    /// `v + ξ`: the point whose evaluation equals `ev_v ∘ ξ`.
    pub fn shifted(&self, xi: &ShiftVector) -> EvalPoint {
        let mut p = self.clone();
        for (a, n) in xi.entries() {
            let v = p.values.get_mut(&a).expect("shift inside the index set");
            *v = v.shifted(n);
        }
        p
    }

    /// True iff no two indices of one row below the top differ by an integer.
    pub fn is_regular(&self) -> bool {
        self.first_integral_pair().is_none()
    }

    fn first_integral_pair(&self) -> Option<(Index, Index)> {
        for i in 1..self.lambda.k() {
            let row = self.lambda.row(i);
            for (p, &a) in row.iter().enumerate() {
                for &b in &row[p + 1..] {
                    if self.value(a).integer_difference(self.value(b)).is_some() {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    pub fn require_regular(&self) -> Result<()> {
        if self.is_regular() {
            Ok(())
        } else {
            Err(Error::RegularityError)
        }
    }

    /// Pairs in adjacent rows whose values differ by an integer.
    pub fn cross_row_integral_pairs(&self) -> Vec<(Index, Index)> {
        let mut out = Vec::new();
        for i in 1..self.lambda.k() {
            for a in self.lambda.row(i) {
                for b in self.lambda.row(i + 1) {
                    if self.value(a).integer_difference(self.value(b)).is_some() {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    /// `x_a ↦ z_t + q`, as an affine substitution.
    pub fn substitution(&self) -> impl Fn(VarId) -> Option<(VarId, Q)> + '_ {
        move |v| match v {
            VarId::X(i, j) => {
                let pv = self.values.get(&Index::new(i, j))?;
                Some((VarId::Param(pv.tag), pv.offset.clone()))
            }
            VarId::Param(_) => None,
        }
    }

    pub fn eval_poly(&self, f: &Polynomial) -> Scalar {
        Scalar::new(RationalFunction::from_poly(f.affine_substitute(self.substitution())))
            .expect("only parameters remain")
    }

    /// Evaluates a rational function; a vanishing denominator is an error.
    pub fn eval_rf(&self, f: &RationalFunction) -> Result<Scalar> {
        let num = f.numer().affine_substitute(self.substitution());
        let den = f.denom().affine_substitute(self.substitution());
        if den.is_zero() {
            return Err(Error::HypothesisViolation(format!("denominator {} vanishes", f.denom())));
        }
        Scalar::fraction(num, den)
    }

    /// Replaces every `z_t` by a rational number.
    pub fn specialization(&self) -> BTreeMap<u32, Q> {
        let tags: std::collections::BTreeSet<u32> = self.values.values().map(|v| v.tag).collect();
        tags.into_iter()
            .enumerate()
            // well away from small integers and from each other
            .map(|(n, t)| (t, Q::new((101 + 37 * n as i64).into(), (7 + 2 * n as i64).into())))
            .collect()
    }

    /// Per-row sorted multisets of values.
    pub fn character(&self) -> GZCharacter {
        character_of(self)
    }
}

/// `γ·v`, defined by `ev_{γ·v} = ev_v ∘ γ⁻¹`, i.e. `(γ·v)(x_a) = v(x_a) − n_a`.
pub fn point_action(gamma: &ShiftVector, v: &EvalPoint) -> EvalPoint {
    v.shifted(&gamma.neg())
}

/// A character of the invariant ring, stored as per-row value multisets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GZCharacter(pub Vec<Vec<PointValue>>);

impl GZCharacter {
    /// `χ(γ_{(i,j)}) = e_j(values of row i)`.
    pub fn gamma_value(&self, a: Index) -> Scalar {
        let row = &self.0[a.row as usize - 1];
        let mut e = vec![Scalar::one()];
        for v in row {
            let s = v.scalar();
            let mut next = e.clone();
            next.push(Scalar::zero());
            for d in 1..next.len() {
                let prev = e.get(d).cloned().unwrap_or_else(Scalar::zero);
                next[d] = prev.add(&e[d - 1].mul(&s));
            }
            e = next;
        }
        e.get(a.col as usize).cloned().unwrap_or_else(Scalar::zero)
    }
}

impl fmt::Display for GZCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("{{{}}}", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", rows.join(" "))
    }
}

pub fn character_of(v: &EvalPoint) -> GZCharacter {
    GZCharacter(
        (1..=v.lambda.k())
            .map(|i| {
                let mut r: Vec<PointValue> = v.lambda.row(i).into_iter().map(|a| v.value(a).clone()).collect();
                r.sort();
                r
            })
            .collect(),
    )
}

/// JSON form of a point value: `{"tag": t, "offset": "p/q"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointValueSpec {
    pub tag: u32,
    #[serde(default = "zero_string")]
    pub offset: String,
}

fn zero_string() -> String {
    "0".into()
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Validation(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Q::new(n, d))
}

pub fn render_rational(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
