use std::fmt;

/// A variable of the polynomial engine.
///
/// Parameters `z[t]` stand for independent transcendentals and are used to build
/// generic evaluation points. Module variables `x[i,j]` are indexed by the
/// ambient index set of a composition. The derived ordering puts all parameters
/// before all module variables and orders module variables row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Param(u32),
    X(u32, u32),
}

impl VarId {
    pub fn x(i: u32, j: u32) -> Self {
        VarId::X(i, j)
    }

    pub fn z(t: u32) -> Self {
        VarId::Param(t)
    }

    pub fn is_param(self) -> bool {
        matches!(self, VarId::Param(_))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::Param(t) => write!(f, "z[{t}]"),
            VarId::X(i, j) => write!(f, "x[{i},{j}]"),
        }
    }
}
