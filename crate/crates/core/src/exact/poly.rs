use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::scalar::{int, scalar_to_string, Scalar};
use super::var::Var;
use crate::error::{Error, Result};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing graded-lex monomial order and never
/// carry a zero coefficient, so structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(int(c))
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: alloc::vec![(m, c)] }
        }
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Monomial::var(v, 1), Scalar::one())
    }

    pub fn z(b: usize) -> Self {
        Poly::var(Var::z(b))
    }

    pub fn t(a: usize) -> Self {
        Poly::var(Var::t(a))
    }

    pub fn h() -> Self {
        Poly::var(Var::H)
    }

    /// Collects terms, merging equal monomials and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Poly::from_map(acc)
    }

    fn from_map(acc: BTreeMap<Monomial, Scalar>) -> Self {
        let mut terms: Vec<(Monomial, Scalar)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(Scalar::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.has_negative())
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.iter().flat_map(|(m, _)| m.pairs().map(|(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    pub fn degree_in(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(v)).max()
    }

    pub fn min_degree_in(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(v)).min()
    }

    /// Largest total degree over the terms.
    pub fn total_degree(&self) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Poly {
        // Multiplying by a monomial preserves the relative term order.
        Poly { terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return Poly { terms: self.terms.iter().map(|(a, x)| (a.mul(m), x * c)).collect() };
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly::from_map(acc)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Poly>) -> Poly {
        factors.into_iter().fold(Poly::one(), |acc, f| acc.mul(f))
    }

    /// Replaces each bound variable by a polynomial. A negative exponent of a
    /// bound variable requires its replacement to be a monomial.
    pub fn substitute(&self, bindings: &[(Var, Poly)]) -> Result<Poly> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let mut cache: BTreeMap<(Var, i32), Poly> = BTreeMap::new();
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut part = Poly::constant(c.clone());
            for (v, e) in m.pairs() {
                match bindings.iter().find(|(w, _)| *w == v) {
                    None => kept = kept.mul(&Monomial::var(v, e)),
                    Some((_, rep)) => {
                        let p = match cache.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = power_of(rep, e)?;
                                cache.insert((v, e), p.clone());
                                p
                            }
                        };
                        part = part.mul(&p);
                    }
                }
            }
            for (pm, pc) in part.terms {
                let mm = pm.mul(&kept);
                match acc.get_mut(&mm) {
                    Some(x) => *x += pc,
                    None => {
                        acc.insert(mm, pc);
                    }
                }
            }
        }
        Ok(Poly::from_map(acc))
    }

    /// Evaluates the variables in `values`; the rest stay symbolic.
    pub fn eval(&self, values: &[(Var, Scalar)]) -> Result<Poly> {
        let bindings: Vec<(Var, Poly)> = values.iter().map(|(v, c)| (*v, Poly::constant(c.clone()))).collect();
        self.substitute(&bindings)
    }

    /// Coefficient of `v^deg`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, v: Var, deg: i32) -> Poly {
        Poly::from_terms(self.terms.iter().filter(|(m, _)| m.exp(v) == deg).map(|(m, c)| (m.without(v), c.clone())))
    }

    /// Largest monomial dividing every term (componentwise minimum).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, (m, _)| acc.gcd(m))
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients.
    pub fn content(&self) -> Scalar {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Scalar::one();
        }
        Scalar::new(num, den)
    }

    /// Splits off `(c, m)` so that `self = c * m * p` with `p` having coprime
    /// integer coefficients, a positive leading coefficient and no monomial
    /// factor.
    pub fn normalize(&self) -> (Scalar, Monomial, Poly) {
        if self.is_zero() {
            return (Scalar::zero(), Monomial::one(), Poly::zero());
        }
        let mono = self.monomial_content();
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        let inv_m = mono.inv();
        let inv_c = c.recip();
        let p = Poly { terms: self.terms.iter().map(|(m, x)| (m.mul(&inv_m), x * &inv_c)).collect() };
        (c, mono, p)
    }

    /// Exact quotient `self / den`, or [`Error::NotDivisible`].
    pub fn exact_div(&self, den: &Poly) -> Result<Poly> {
        if den.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if den.terms.len() == 1 {
            let (m, c) = &den.terms[0];
            let inv_m = m.inv();
            let inv_c = c.recip();
            return Ok(Poly { terms: self.terms.iter().map(|(a, x)| (a.mul(&inv_m), x * &inv_c)).collect() });
        }
        // Laurent parts are split off so the division runs on honest polynomials.
        let num_m = self.monomial_content();
        let den_m = den.monomial_content();
        let num = self.mul_monomial(&num_m.inv());
        let den_p = den.mul_monomial(&den_m.inv());
        let q = poly_divide(&num, &den_p)?;
        Ok(q.mul_monomial(&num_m.mul(&den_m.inv())))
    }

    /// Quotient in the polynomial ring: like [`Poly::exact_div`], but a
    /// quotient needing negative exponents of honest polynomials is
    /// [`Error::NotDivisible`].
    pub fn exact_quotient(&self, den: &Poly) -> Result<Poly> {
        let q = self.exact_div(den)?;
        if q.has_negative_exponents() && !self.has_negative_exponents() && !den.has_negative_exponents() {
            return Err(Error::NotDivisible);
        }
        Ok(q)
    }

    /// Whether `den` divides `self`.
    pub fn divisible_by(&self, den: &Poly) -> bool {
        self.exact_div(den).is_ok()
    }

    /// Parses the canonical text form produced by `Display`, e.g.
    /// `-z1*h + 3*h^2 + 1/2`. Exponents may be negative: `z1^-2`.
    pub fn parse(s: &str) -> Result<Poly> {
        let bad = |why: &str| Error::InvalidInput(alloc::format!("cannot parse polynomial {s:?}: {why}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad("empty"));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in text.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    pieces.push((neg, core::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad("dangling sign"));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad("dangling sign"));
        }
        pieces.push((neg, cur));
        if pieces.len() == 1 && pieces[0].1 == "0" {
            return Ok(Poly::zero());
        }
        let mut terms = Vec::new();
        for (neg, piece) in pieces {
            let mut c = Scalar::one();
            let mut mono = Monomial::one();
            for factor in piece.split('*') {
                if factor.starts_with(|ch: char| ch.is_ascii_digit()) {
                    let (num, den) = factor.split_once('/').unwrap_or((factor, "1"));
                    let num: BigInt = num.parse().map_err(|_| bad(factor))?;
                    let den: BigInt = den.parse().map_err(|_| bad(factor))?;
                    if den.is_zero() {
                        return Err(bad("zero denominator"));
                    }
                    c *= Scalar::new(num, den);
                } else {
                    let (name, e) = factor.split_once('^').unwrap_or((factor, "1"));
                    let v = Var::parse(name).ok_or_else(|| bad(name))?;
                    let e: i32 = e.parse().map_err(|_| bad(factor))?;
                    mono = mono.mul(&Monomial::var(v, e));
                }
            }
            terms.push((mono, if neg { -c } else { c }));
        }
        Ok(Poly::from_terms(terms))
    }

    pub fn to_canonical_string(&self) -> String {
        alloc::format!("{self}")
    }
}

fn power_of(rep: &Poly, e: i32) -> Result<Poly> {
    if e >= 0 {
        return Ok(rep.pow(e as u32));
    }
    match rep.terms.as_slice() {
        [(m, c)] => Ok(Poly::term(m.pow(e), c.recip().pow(-e))),
        _ => Err(Error::InvalidInput(alloc::format!("negative power of a non-monomial replacement `{rep}`"))),
    }
}

/// Multivariate division with remainder tracked in a sorted map; fails as
/// soon as the leading remainder term is not divisible by the divisor's.
fn poly_divide(num: &Poly, den: &Poly) -> Result<Poly> {
    let (lm, lc) = den.terms[0].clone();
    let inv_lc = lc.recip();
    let mut rem: BTreeMap<Monomial, Scalar> = num.terms.iter().cloned().collect();
    let mut quot: Vec<(Monomial, Scalar)> = Vec::new();
    let rest = &den.terms[1..];
    while let Some((m, c)) = rem.pop_last() {
        if !lm.divides(&m) {
            return Err(Error::NotDivisible);
        }
        let qm = m.div(&lm);
        let qc = c * &inv_lc;
        for (dm, dc) in rest {
            let key = dm.mul(&qm);
            let delta = dc * &qc;
            match rem.get_mut(&key) {
                Some(x) => {
                    *x -= delta;
                    if x.is_zero() {
                        rem.remove(&key);
                    }
                }
                None => {
                    rem.insert(key, -delta);
                }
            }
        }
        quot.push((qm, qc));
    }
    // Quotient terms come out in decreasing order already.
    Ok(Poly { terms: quot })
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            match a.0.cmp(&b.0) {
                Ordering::Equal => {}
                o => return o,
            }
            match a.1.cmp(&b.1) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl fmt::Display for Poly {
    /// Canonical text form, e.g. `-z1*h + 3*h^2 + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", scalar_to_string(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", scalar_to_string(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for text in ["-z1*h + 3*h^2 + 1/2", "0", "h^4", "-2*z1^-1*z3*h", "7", "nu - 1/3*eps^-2"] {
            let p = Poly::parse(text).unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert_eq!(Poly::parse("h*2").unwrap(), Poly::h().scale(&int(2)));
        assert!(Poly::parse("h +").is_err());
        assert!(Poly::parse("q1").is_err());
        assert!(Poly::parse("1/0").is_err());
    }
    use alloc::string::ToString;

    fn z(b: usize) -> Poly {
        Poly::z(b)
    }

    #[test]
    fn display_is_canonical() {
        let p = Poly::h()
            .pow(2)
            .scale(&int(3))
            .sub(&z(1).mul(&Poly::h()))
            .add(&Poly::constant(super::super::scalar::rat(1, 2)));
        assert_eq!(p.to_string(), "-z1*h + 3*h^2 + 1/2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(z(1).neg().to_string(), "-z1");
    }

    #[test]
    fn difference_of_squares_divides() {
        let num = z(1).pow(2).sub(&z(2).pow(2));
        let den = z(1).sub(&z(2));
        assert_eq!(num.exact_div(&den).unwrap(), z(1).add(&z(2)));
    }

    #[test]
    fn not_divisible_is_reported() {
        let num = z(1).add(&Poly::h());
        assert_eq!(num.exact_quotient(&z(2)).unwrap_err(), Error::NotDivisible);
        assert!(num.exact_div(&z(2)).is_ok());
        let num = z(1).pow(2).add(&Poly::h());
        assert_eq!(num.exact_div(&z(1).sub(&z(2))).unwrap_err(), Error::NotDivisible);
    }

    #[test]
    fn laurent_division() {
        // (z1 - z2)/z1 divided by (z1 - z2) is 1/z1.
        let inv_z1 = Poly::term(Monomial::var(Var::z(1), -1), Scalar::one());
        let num = z(1).sub(&z(2)).mul(&inv_z1);
        assert_eq!(num.exact_div(&z(1).sub(&z(2))).unwrap(), inv_z1);
    }

    #[test]
    fn coefficient_extraction() {
        let z0 = Poly::var(Var::Z(0));
        let p = z0.add(&Poly::h()).pow(2);
        assert_eq!(p.coefficient_of(Var::Z(0), 1), Poly::h().scale(&int(2)));
        assert_eq!(p.coefficient_of(Var::Z(0), 5), Poly::zero());
    }

    #[test]
    fn substitution() {
        let e = z(2).sub(&Poly::t(1)).add(&Poly::h());
        let r = e.substitute(&[(Var::t(1), z(2))]).unwrap();
        assert_eq!(r, Poly::h());
    }

    #[test]
    fn normalize_extracts_content_and_sign() {
        let p = z(1).scale(&int(-4)).mul(&z(2).add(&Poly::h())).mul(&z(1));
        let (c, m, q) = p.normalize();
        assert_eq!(c, int(-4));
        assert_eq!(m, Monomial::var(Var::z(1), 2));
        assert_eq!(q, z(2).add(&Poly::h()));
    }
}
