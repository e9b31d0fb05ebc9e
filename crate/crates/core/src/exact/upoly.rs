use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::poly::Poly;
use super::scalar::{int, scalar_to_string, Scalar};
use super::var::Var;
use crate::error::{Error, Result};

/// Dense univariate polynomial in `h`; `coeffs[k]` is the coefficient of
/// `h^k`, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        UPoly::from_coeffs(alloc::vec![c])
    }

    pub fn int(c: i64) -> Self {
        UPoly::constant(int(c))
    }

    /// The monomial `h`.
    pub fn h() -> Self {
        UPoly::from_coeffs(alloc::vec![Scalar::zero(), Scalar::one()])
    }

    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut v = alloc::vec![Scalar::zero(); k + 1];
        v[k] = c;
        UPoly::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = alloc::vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }

    pub fn pow(&self, k: u32) -> UPoly {
        (0..k).fold(UPoly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = d.degree().ok_or(Error::NotDivisible)?;
        let lc = d.leading().recip();
        let mut r = self.coeffs.clone();
        let mut q = alloc::vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() * &lc;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((UPoly::from_coeffs(q), UPoly::from_coeffs(r)))
    }

    pub fn exact_div(&self, d: &UPoly) -> Result<UPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lc = a.leading().recip();
            a.scale(&lc)
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// Composition `self(p(h))`.
    pub fn compose(&self, p: &UPoly) -> UPoly {
        self.coeffs.iter().rev().fold(UPoly::zero(), |acc, c| acc.mul(p).add(&UPoly::constant(c.clone())))
    }

    /// Whether no coefficient is negative.
    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_poly(&self, v: Var) -> Poly {
        Poly::from_terms(self.coeffs.iter().enumerate().map(|(k, c)| (Monomial::var(v, k as i32), c.clone())))
    }

    /// Reads a polynomial that involves only `v` with nonnegative exponents.
    pub fn from_poly(p: &Poly, v: Var) -> Result<UPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in p.terms() {
            let e = m.exp(v);
            if e < 0 || m.degree() != e {
                return Err(Error::NotPolynomial(alloc::format!("`{p}` is not a polynomial in {v}")));
            }
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Scalar::zero());
            }
            coeffs[e] = c.clone();
        }
        Ok(UPoly::from_coeffs(coeffs))
    }

    pub fn to_string_in(&self, name: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => String::from(name),
                _ => alloc::format!("{name}^{k}"),
            };
            if mono.is_empty() {
                s.push_str(&scalar_to_string(&abs));
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&alloc::format!("{}*{mono}", scalar_to_string(&abs)));
            }
        }
        s
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("h"))
    }
}

/// Reduced rational function in `h` with a monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct URat {
    num: UPoly,
    den: UPoly,
}

impl URat {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::IdenticallyZeroDenominator);
        }
        if num.is_zero() {
            return Ok(URat::zero());
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc = den.leading().recip();
        Ok(URat { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn zero() -> Self {
        URat { num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one() -> Self {
        URat::from_poly(UPoly::one())
    }

    pub fn from_poly(p: UPoly) -> Self {
        URat { num: p, den: UPoly::one() }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_poly(&self) -> Option<&UPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn add(&self, o: &URat) -> URat {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        URat::new(num, self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn neg(&self) -> URat {
        URat { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &URat) -> URat {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &URat) -> URat {
        URat::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<URat> {
        URat::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &URat) -> Result<URat> {
        Ok(self.mul(&o.inv()?))
    }
}

impl fmt::Display for URat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_display() {
        let p = UPoly::from_ints(&[1, 1]).pow(2);
        assert_eq!(p.to_string(), "h^2 + 2*h + 1");
        assert_eq!(p.exact_div(&UPoly::from_ints(&[1, 1])).unwrap(), UPoly::from_ints(&[1, 1]));
        assert!(p.exact_div(&UPoly::h()).is_err());
    }

    #[test]
    fn gcd_is_monic() {
        let a = UPoly::from_ints(&[2, 2]).mul(&UPoly::from_ints(&[0, 1]));
        let b = UPoly::from_ints(&[3, 3]).mul(&UPoly::from_ints(&[5, 1]));
        assert_eq!(a.gcd(&b), UPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn rational_functions_reduce() {
        let x = UPoly::from_ints(&[1, 1]);
        let r = URat::new(x.mul(&UPoly::h()), x.scale(&int(2))).unwrap();
        assert_eq!(r.as_poly().unwrap(), &UPoly::h().scale(&super::super::scalar::rat(1, 2)));
        let s = r.sub(&r);
        assert!(s.is_zero());
    }

    #[test]
    fn compose_shift() {
        // (h)^2 at h -> -1 - h gives h^2 + 2h + 1.
        let nu = UPoly::from_ints(&[-1, -1]);
        assert_eq!(UPoly::h().pow(2).compose(&nu), UPoly::from_ints(&[1, 2, 1]));
    }
}
