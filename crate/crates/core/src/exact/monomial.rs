use core::cmp::Ordering;
use core::fmt;

use smallvec::SmallVec;

use super::var::Var;

/// A Laurent monomial: variables sorted by [`Var`] order, no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: i32,
    exps: SmallVec<[(Var, i32); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { deg: 0, exps: SmallVec::new() }
    }

    pub fn var(v: Var, e: i32) -> Self {
        let mut m = Monomial::one();
        if e != 0 {
            m.exps.push((v, e));
            m.deg = e;
        }
        m
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m = m.mul(&Monomial::var(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Total degree (may be negative for Laurent monomials).
    pub fn degree(&self) -> i32 {
        self.deg
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.exps.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn has_negative(&self) -> bool {
        self.exps.iter().any(|&(_, e)| e < 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[(Var, i32); 6]> = SmallVec::new();
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { deg: self.deg + other.deg, exps: out }
    }

    pub fn inv(&self) -> Monomial {
        Monomial { deg: -self.deg, exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect() }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    /// `self` divides `other` in the polynomial sense (all exponents of the
    /// quotient nonnegative).
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exp(v) >= e) && other.exps.iter().all(|&(v, e)| e >= 0 || self.exp(v) <= e)
    }

    /// Componentwise minimum of exponents (treating absent variables as 0).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut pairs: SmallVec<[(Var, i32); 6]> = SmallVec::new();
        for &(v, e) in self.exps.iter() {
            let m = e.min(other.exp(v));
            if m != 0 {
                pairs.push((v, m));
            }
        }
        for &(v, e) in other.exps.iter() {
            if self.exp(v) == 0 && e < 0 {
                pairs.push((v, e));
            }
        }
        Monomial::from_pairs(pairs)
    }

    pub fn without(&self, v: Var) -> Monomial {
        let exps: SmallVec<[(Var, i32); 6]> = self.exps.iter().copied().filter(|&(w, _)| w != v).collect();
        let deg = exps.iter().map(|&(_, e)| e).sum();
        Monomial { deg, exps }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { deg: self.deg * k, exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect() }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent of the
    /// earliest variable in canonical order where the two differ.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (idx, (v, e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_cancels_exponents() {
        let a = Monomial::from_pairs([(Var::z(1), 2), (Var::H, 1)]);
        let b = Monomial::from_pairs([(Var::z(1), -2), (Var::z(2), 1)]);
        let c = a.mul(&b);
        assert_eq!(c, Monomial::from_pairs([(Var::z(2), 1), (Var::H, 1)]));
        assert_eq!(c.degree(), 2);
    }

    #[test]
    fn graded_lex() {
        let z1 = Monomial::var(Var::z(1), 1);
        let z2 = Monomial::var(Var::z(2), 1);
        let h2 = Monomial::var(Var::H, 2);
        assert!(z1 > z2);
        assert!(h2 > z1);
        assert!(Monomial::one() < z2);
        assert!(z1.mul(&z2) > Monomial::var(Var::z(2), 2));
    }

    #[test]
    fn divisibility() {
        let a = Monomial::from_pairs([(Var::z(1), 1)]);
        let b = Monomial::from_pairs([(Var::z(1), 2), (Var::H, 1)]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.gcd(&b), a);
    }
}
