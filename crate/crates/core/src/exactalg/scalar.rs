use std::fmt;

use super::poly::{Polynomial, Q};
use super::ratfunc::RationalFunction;
use super::var::VarId;
use crate::error::{Error, Result};

/// Value field of evaluation points: rational functions in the parameters
/// `z[t]` only. A typed view over [`RationalFunction`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(RationalFunction);

impl Scalar {
    pub fn new(f: RationalFunction) -> Result<Self> {
        if f.vars().iter().all(|v| v.is_param()) {
            Ok(Scalar(f))
        } else {
            Err(Error::Validation(format!("{f} is not a scalar")))
        }
    }

    pub fn fraction(num: Polynomial, den: Polynomial) -> Result<Self> {
        Self::new(RationalFunction::normalize(num, den)?)
    }

    pub fn rational(c: Q) -> Self {
        Scalar(RationalFunction::constant(c))
    }

    pub fn zero() -> Self {
        Scalar(RationalFunction::zero())
    }

    pub fn one() -> Self {
        Scalar(RationalFunction::one())
    }

    /// `z[t] + offset`.
    pub fn param_plus(t: u32, offset: Q) -> Self {
        Scalar(RationalFunction::from_poly(&Polynomial::var(VarId::Param(t)) + &Polynomial::constant(offset)))
    }

    pub fn as_rf(&self) -> &RationalFunction {
        &self.0
    }

    pub fn into_rf(self) -> RationalFunction {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        Scalar(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        Scalar(self.0.sub(&o.0))
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        Scalar(self.0.mul(&o.0))
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(Scalar(self.0.div(&o.0)?))
    }

    pub fn neg(&self) -> Scalar {
        Scalar(self.0.neg())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_module_variables_and_zero_denominators() {
        assert!(Scalar::new(RationalFunction::var(VarId::X(1, 1))).is_err());
        assert!(Scalar::fraction(Polynomial::one(), Polynomial::zero()).is_err());
        let s = Scalar::param_plus(1, super::super::poly::q(2));
        assert_eq!(s.to_string(), "z[1]+2");
        assert!(s.div(&Scalar::zero()).is_err());
    }
}
