use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::{Polynomial, Q};
use super::var::VarId;
use crate::error::{Error, Result};

/// Reduced fraction of polynomials with a denominator of leading coefficient 1.
///
/// Two rational functions are equal as field elements iff their stored
/// representations are equal, so `==` and `Hash` are the field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Polynomial::one(), den: Polynomial::one() }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(Polynomial::int(n))
    }

    pub fn var(v: VarId) -> Self {
        Self::from_poly(Polynomial::var(v))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    /// Canonical form of `num / den`: common factors cancelled and the
    /// denominator made monic.
    pub fn normalize(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(c) = den.as_constant() {
            return Ok(Self::from_poly(num.scale(&c.recip())));
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Ok(Self::monic_den(num, den))
    }

    /// Assumes `num` and `den` are coprime; only fixes the denominator scale.
    fn monic_den(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            return RationalFunction { num, den };
        }
        let inv = lc.recip();
        RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Q> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn vars(&self) -> std::collections::BTreeSet<VarId> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = &self.num + &other.num;
            return Self::normalize(num, self.den.clone()).expect("nonzero denominator");
        }
        if self.den.is_one() {
            let num = &(&self.num * &other.den) + &other.num;
            return RationalFunction { num, den: other.den.clone() };
        }
        if other.den.is_one() {
            let num = &self.num + &(&other.num * &self.den);
            return RationalFunction { num, den: self.den.clone() };
        }
        let g = gcd(&self.den, &other.den);
        let (b1, d1) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (self.den.div_exact(&g).unwrap(), other.den.div_exact(&g).unwrap())
        };
        let num = &(&self.num * &d1) + &(&other.num * &b1);
        if num.is_zero() {
            return Self::zero();
        }
        let den = &b1 * &other.den;
        if g.is_one() {
            // a/b + c/d with gcd(b,d) = 1 is already reduced
            return Self::monic_den(num, den);
        }
        // only factors of g can be shared between num and den
        let h = gcd(&num, &g);
        if h.is_one() {
            Self::monic_den(num, den)
        } else {
            Self::monic_den(num.div_exact(&h).unwrap(), den.div_exact(&h).unwrap())
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num * &other.num);
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d = if g1.is_one() { other.den.clone() } else { other.den.div_exact(&g1).unwrap() };
        let c = if g2.is_one() { other.num.clone() } else { other.num.div_exact(&g2).unwrap() };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        Self::monic_den(&a * &c, &b * &d)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Exact composition with a substitution of variables by rational functions.
    ///
    /// Variables without an image are left in place.
    pub fn substitute<F>(&self, map: F) -> Result<Self>
    where
        F: Fn(VarId) -> Option<RationalFunction>,
    {
        let num = subst_poly(&self.num, &map);
        let den = subst_poly(&self.den, &map);
        if den.is_zero() {
            return Err(Error::SingularSubstitution);
        }
        num.div(&den).map_err(|_| Error::SingularSubstitution)
    }

    /// Substitution by polynomial images.
    pub fn substitute_poly<F>(&self, map: F) -> Result<Self>
    where
        F: Fn(VarId) -> Option<Polynomial>,
    {
        let num = self.num.substitute_poly(&map);
        let den = if self.den.is_one() { Polynomial::one() } else { self.den.substitute_poly(&map) };
        if den.is_zero() {
            return Err(Error::SingularSubstitution);
        }
        Self::normalize(num, den)
    }

    /// Image under a field automorphism given by an invertible affine change
    /// of variables. Coprimality is preserved, so no gcd is needed.
    pub fn apply_affine<F>(&self, map: F) -> Self
    where
        F: Fn(VarId) -> Option<(VarId, Q)>,
    {
        let num = self.num.affine_substitute(&map);
        let den = if self.den.is_one() { Polynomial::one() } else { self.den.affine_substitute(&map) };
        Self::monic_den(num, den)
    }
}

fn subst_poly<F>(p: &Polynomial, map: &F) -> RationalFunction
where
    F: Fn(VarId) -> Option<RationalFunction>,
{
    let mut out = RationalFunction::zero();
    for (m, c) in p.terms() {
        let mut t = RationalFunction::constant(c.clone());
        for &(v, e) in m.pairs() {
            let img = map(v).unwrap_or_else(|| RationalFunction::var(v));
            t = t.mul(&img.pow(e));
        }
        out = out.add(&t);
    }
    out
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::add(self, rhs)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::sub(self, rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::mul(self, rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::neg(self)
    }
}

/// `num` alone for polynomials, otherwise `(num)/(den)`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
