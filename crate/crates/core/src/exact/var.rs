use core::fmt;

/// A named variable. The derived order is the global canonical order:
/// `z_1 < … < z_n < t_1 < … < t_d < h <` auxiliaries.
///
/// `Z(0)` is the single residue variable `z` of the one-variable formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Z(u8),
    T(u8),
    H,
    /// Hyperplane class `H` of a projective space.
    Hyper,
    Rho,
    Zeta(u8),
    Nu,
    /// Line parameter of the line-substitution limit.
    Eps,
}

impl Var {
    pub fn z(b: usize) -> Var {
        Var::Z(b as u8)
    }

    pub fn t(a: usize) -> Var {
        Var::T(a as u8)
    }

    pub fn zeta(b: usize) -> Var {
        Var::Zeta(b as u8)
    }

    pub fn is_z(self) -> bool {
        matches!(self, Var::Z(b) if b > 0)
    }

    pub fn parse(s: &str) -> Option<Var> {
        let idx = |rest: &str| rest.parse::<u8>().ok().filter(|&b| b > 0);
        match s {
            "z" => Some(Var::Z(0)),
            "h" => Some(Var::H),
            "H" => Some(Var::Hyper),
            "rho" => Some(Var::Rho),
            "nu" => Some(Var::Nu),
            "eps" => Some(Var::Eps),
            _ => {
                if let Some(rest) = s.strip_prefix("zeta") {
                    idx(rest).map(Var::Zeta)
                } else if let Some(rest) = s.strip_prefix('z') {
                    idx(rest).map(Var::Z)
                } else if let Some(rest) = s.strip_prefix('t') {
                    idx(rest).map(Var::T)
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Z(0) => write!(f, "z"),
            Var::Z(b) => write!(f, "z{b}"),
            Var::T(a) => write!(f, "t{a}"),
            Var::H => write!(f, "h"),
            Var::Hyper => write!(f, "H"),
            Var::Rho => write!(f, "rho"),
            Var::Zeta(b) => write!(f, "zeta{b}"),
            Var::Nu => write!(f, "nu"),
            Var::Eps => write!(f, "eps"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn canonical_order() {
        assert!(Var::z(1) < Var::z(9));
        assert!(Var::z(9) < Var::t(1));
        assert!(Var::t(3) < Var::H);
        assert!(Var::H < Var::Hyper);
        assert!(Var::Hyper < Var::Nu);
    }

    #[test]
    fn names_round_trip() {
        for v in [Var::Z(0), Var::z(3), Var::t(2), Var::H, Var::Hyper, Var::Rho, Var::zeta(4), Var::Nu, Var::Eps] {
            assert_eq!(Var::parse(&v.to_string()), Some(v));
        }
        assert_eq!(Var::parse("q1"), None);
        assert_eq!(Var::parse("z0"), None);
    }
}
