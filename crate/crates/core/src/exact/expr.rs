use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::poly::Poly;
use super::scalar::{scalar_to_string, Scalar};
use super::var::Var;
use crate::error::{Error, Result};

/// Rational function kept as `coeff * Π factor^exp`.
///
/// Factors are primitive polynomials with a positive leading coefficient and
/// either a single variable or no monomial content at all. Exponents are
/// nonzero and may be negative. Equal factors are merged, so two values with
/// the same factorization compare equal structurally; [`Expr::eq_value`]
/// decides equality of values in general.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expr {
    coeff: Scalar,
    factors: Vec<(Poly, i32)>,
}

impl Default for Expr {
    fn default() -> Self {
        Expr::zero()
    }
}

impl From<Poly> for Expr {
    fn from(p: Poly) -> Self {
        Expr::from_poly(&p)
    }
}

impl Expr {
    pub fn zero() -> Self {
        Expr { coeff: Scalar::zero(), factors: Vec::new() }
    }

    pub fn one() -> Self {
        Expr::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Expr { coeff: c, factors: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Expr::from_poly(&Poly::var(v))
    }

    pub fn from_poly(p: &Poly) -> Self {
        if p.is_zero() {
            return Expr::zero();
        }
        let (c, mono, q) = p.normalize();
        let mut factors: Vec<(Poly, i32)> = mono.pairs().map(|(v, e)| (Poly::var(v), e)).collect();
        if !q.is_constant() {
            factors.push((q, 1));
        }
        Expr::build(c, factors)
    }

    /// `num / den` for polynomials.
    pub fn ratio(num: &Poly, den: &Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::IdenticallyZeroDenominator);
        }
        Ok(Expr::from_poly(num).mul(&Expr::from_poly(den).inv()?))
    }

    /// Product of already-normalized factors, merging duplicates.
    fn build(coeff: Scalar, factors: Vec<(Poly, i32)>) -> Self {
        if coeff.is_zero() {
            return Expr::zero();
        }
        let mut acc: BTreeMap<Poly, i32> = BTreeMap::new();
        for (f, e) in factors {
            *acc.entry(f).or_insert(0) += e;
        }
        Expr { coeff, factors: acc.into_iter().filter(|(_, e)| *e != 0).collect() }
    }

    pub fn coeff(&self) -> &Scalar {
        &self.coeff
    }

    pub fn factors(&self) -> &[(Poly, i32)] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn as_constant(&self) -> Option<&Scalar> {
        self.factors.is_empty().then_some(&self.coeff)
    }

    /// Exponent of the factor `v` (a single variable).
    pub fn var_exponent(&self, v: Var) -> i32 {
        let pv = Poly::var(v);
        self.factors.iter().find(|(f, _)| *f == pv).map_or(0, |(_, e)| *e)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.factors.iter().flat_map(|(f, _)| f.vars()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.factors.iter().any(|(f, _)| f.contains_var(v))
    }

    pub fn neg(&self) -> Expr {
        Expr { coeff: -&self.coeff, factors: self.factors.clone() }
    }

    pub fn scale(&self, s: &Scalar) -> Expr {
        if s.is_zero() {
            return Expr::zero();
        }
        Expr { coeff: &self.coeff * s, factors: self.factors.clone() }
    }

    pub fn mul(&self, other: &Expr) -> Expr {
        if self.is_zero() || other.is_zero() {
            return Expr::zero();
        }
        let mut fs = self.factors.clone();
        fs.extend(other.factors.iter().cloned());
        Expr::build(&self.coeff * &other.coeff, fs)
    }

    pub fn mul_poly(&self, p: &Poly) -> Expr {
        self.mul(&Expr::from_poly(p))
    }

    pub fn product<'a>(items: impl IntoIterator<Item = &'a Expr>) -> Expr {
        items.into_iter().fold(Expr::one(), |acc, e| acc.mul(e))
    }

    pub fn inv(&self) -> Result<Expr> {
        if self.is_zero() {
            return Err(Error::IdenticallyZeroDenominator);
        }
        Ok(Expr { coeff: self.coeff.recip(), factors: self.factors.iter().map(|(f, e)| (f.clone(), -e)).collect() })
    }

    pub fn div(&self, other: &Expr) -> Result<Expr> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Expr> {
        if k == 0 {
            return Ok(Expr::one());
        }
        if self.is_zero() {
            return if k > 0 { Ok(Expr::zero()) } else { Err(Error::IdenticallyZeroDenominator) };
        }
        let coeff = if k > 0 { self.coeff.pow(k) } else { self.coeff.recip().pow(-k) };
        Ok(Expr { coeff, factors: self.factors.iter().map(|(f, e)| (f.clone(), e * k)).collect() })
    }

    /// Numerator and denominator as expanded polynomials (the coefficient
    /// goes to the numerator).
    pub fn num_den(&self) -> (Poly, Poly) {
        let mut num = Poly::constant(self.coeff.clone());
        let mut den = Poly::one();
        for (f, e) in &self.factors {
            if *e > 0 {
                num = num.mul(&f.pow(*e as u32));
            } else {
                den = den.mul(&f.pow((-e) as u32));
            }
        }
        (num, den)
    }

    /// Whether every denominator factor is a single variable.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.factors.iter().all(|(f, e)| *e > 0 || f.is_monomial())
    }

    pub fn is_polynomial(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e > 0)
    }

    /// Expanded (Laurent) polynomial, after trying to cancel denominators.
    pub fn to_poly(&self) -> Result<Poly> {
        let e = if self.is_laurent_polynomial() { self.clone() } else { self.cancel() };
        if !e.is_laurent_polynomial() {
            return Err(Error::NotPolynomial(alloc::format!("{e}")));
        }
        let (num, den) = e.num_den();
        num.exact_div(&den)
    }

    /// Divides numerator factors by denominator factors wherever exact.
    pub fn cancel(&self) -> Expr {
        if self.factors.iter().all(|(_, e)| *e > 0) || self.factors.iter().all(|(_, e)| *e < 0) {
            return self.clone();
        }
        let mut nums: Vec<(Poly, i32)> = self.factors.iter().filter(|(_, e)| *e > 0).cloned().collect();
        let mut dens: Vec<(Poly, i32)> =
            self.factors.iter().filter(|(_, e)| *e < 0).map(|(f, e)| (f.clone(), -e)).collect();
        let mut coeff = self.coeff.clone();
        for (q, qe) in dens.iter_mut() {
            if q.is_monomial() {
                continue;
            }
            let mut idx = 0;
            while *qe > 0 && idx < nums.len() {
                if nums[idx].1 == 0 {
                    idx += 1;
                    continue;
                }
                // Peel one copy of the numerator factor off and divide it.
                let Ok(mut r) = nums[idx].0.exact_div(q) else {
                    idx += 1;
                    continue;
                };
                *qe -= 1;
                while *qe > 0 {
                    match r.exact_div(q) {
                        Ok(r2) => {
                            r = r2;
                            *qe -= 1;
                        }
                        Err(_) => break,
                    }
                }
                nums[idx].1 -= 1;
                match r.as_constant() {
                    Some(c) => coeff *= c,
                    None => nums.push((r, 1)),
                }
            }
        }
        let mut out = Expr::constant(coeff);
        for (f, e) in nums.into_iter().filter(|(_, e)| *e != 0) {
            out = out.mul(&Expr::from_poly(&f).pow(e).expect("nonzero factor"));
        }
        let fs: Vec<(Poly, i32)> = dens.into_iter().filter(|(_, e)| *e != 0).map(|(f, e)| (f, -e)).collect();
        out.mul(&Expr::build(Scalar::one(), fs))
    }

    /// Splits every factor by trial division with `candidates`, so that
    /// shared candidates cancel between numerator and denominator.
    pub fn factor_over(&self, candidates: &[Poly]) -> Expr {
        if self.is_zero() {
            return Expr::zero();
        }
        let cands: Vec<Poly> = candidates.iter().filter(|c| c.len() > 1).map(|c| c.normalize().2).collect();
        let mut out = Expr::constant(self.coeff.clone());
        for (f, e) in &self.factors {
            let mut rest = f.clone();
            let mut found: Vec<(Poly, i32)> = Vec::new();
            for c in &cands {
                while let Ok(q) = rest.exact_quotient(c) {
                    found.push((c.clone(), *e));
                    rest = q;
                }
            }
            out = out.mul(&Expr::build(Scalar::one(), found));
            out = out.mul(&Expr::from_poly(&rest).pow(*e).expect("nonzero factor"));
        }
        out
    }

    pub fn add(&self, other: &Expr) -> Expr {
        Expr::sum([self.clone(), other.clone()])
    }

    pub fn sub(&self, other: &Expr) -> Expr {
        self.add(&other.neg())
    }

    /// Sum over a common denominator, cancelling what divides exactly.
    pub fn sum(items: impl IntoIterator<Item = Expr>) -> Expr {
        let items: Vec<Expr> = items.into_iter().filter(|e| !e.is_zero()).collect();
        match items.len() {
            0 => return Expr::zero(),
            1 => return items.into_iter().next().unwrap().cancel(),
            _ => {}
        }
        // Exponent of each factor in the common part: the minimum over all
        // terms, an absent factor counting as exponent zero.
        let mut common: BTreeMap<Poly, i32> = BTreeMap::new();
        for (idx, it) in items.iter().enumerate() {
            if idx == 0 {
                for (f, e) in &it.factors {
                    common.insert(f.clone(), *e);
                }
                continue;
            }
            for (f, g) in common.iter_mut() {
                let e = it.factors.iter().find(|(p, _)| p == f).map_or(0, |(_, e)| *e);
                *g = (*g).min(e);
            }
            for (f, e) in &it.factors {
                if *e < 0 && !common.contains_key(f) {
                    common.insert(f.clone(), *e);
                }
            }
            common.retain(|_, g| *g != 0 || idx == 0);
        }
        let mut total = Poly::zero();
        let mut pow_cache: BTreeMap<(Poly, i32), Poly> = BTreeMap::new();
        for it in &items {
            let mut term = Poly::constant(it.coeff.clone());
            let mut seen: Vec<&Poly> = Vec::new();
            for (f, e) in &it.factors {
                let g = common.get(f).copied().unwrap_or(0);
                let k = e - g;
                seen.push(f);
                if k > 0 {
                    let p = pow_cache.entry((f.clone(), k)).or_insert_with(|| f.pow(k as u32)).clone();
                    term = term.mul(&p);
                }
            }
            for (f, g) in &common {
                if *g < 0 && !seen.contains(&f) {
                    let k = -g;
                    let p = pow_cache.entry((f.clone(), k)).or_insert_with(|| f.pow(k as u32)).clone();
                    term = term.mul(&p);
                }
            }
            total = total.add(&term);
        }
        if total.is_zero() {
            return Expr::zero();
        }
        let mut total_expr = Expr::from_poly(&total);
        let mut rest: Vec<(Poly, i32)> = Vec::new();
        for (f, g) in common {
            if g >= 0 || f.is_monomial() {
                rest.push((f, g));
                continue;
            }
            // Strip copies of a denominator factor dividing the new numerator.
            let mut g = g;
            let Some(pos) = total_expr.factors.iter().position(|(p, e)| *e > 0 && p.len() > 1) else {
                rest.push((f, g));
                continue;
            };
            let mut num = total_expr.factors[pos].0.clone();
            let ne = total_expr.factors[pos].1;
            if ne != 1 {
                rest.push((f, g));
                continue;
            }
            while g < 0 {
                match num.exact_div(&f) {
                    Ok(q) => {
                        num = q;
                        g += 1;
                    }
                    Err(_) => break,
                }
            }
            let coeff = total_expr.coeff.clone();
            let mut fs = total_expr.factors.clone();
            fs.remove(pos);
            total_expr = Expr::build(coeff, fs).mul(&Expr::from_poly(&num));
            rest.push((f, g));
        }
        total_expr.mul(&Expr::build(Scalar::one(), rest))
    }

    /// Substitutes polynomials for variables, factor by factor.
    pub fn substitute(&self, bindings: &[(Var, Poly)]) -> Result<Expr> {
        if self.is_zero() {
            return Ok(Expr::zero());
        }
        let mut out = Expr::constant(self.coeff.clone());
        for (f, e) in &self.factors {
            if !bindings.iter().any(|(v, _)| f.contains_var(*v)) {
                out = out.mul(&Expr::build(Scalar::one(), alloc::vec![(f.clone(), *e)]));
                continue;
            }
            let g = f.substitute(bindings)?;
            if g.is_zero() {
                if *e < 0 {
                    return Err(Error::IdenticallyZeroDenominator);
                }
                return Ok(Expr::zero());
            }
            out = out.mul(&Expr::from_poly(&g).pow(*e)?);
        }
        Ok(out)
    }

    /// Substitutes arbitrary expressions for variables.
    pub fn substitute_expr(&self, bindings: &[(Var, Expr)]) -> Result<Expr> {
        if self.is_zero() {
            return Ok(Expr::zero());
        }
        let mut out = Expr::constant(self.coeff.clone());
        for (f, e) in &self.factors {
            let g = poly_at_exprs(f, bindings)?;
            if g.is_zero() {
                if *e < 0 {
                    return Err(Error::IdenticallyZeroDenominator);
                }
                return Ok(Expr::zero());
            }
            out = out.mul(&g.pow(*e)?);
        }
        Ok(out)
    }

    /// Evaluates at scalar values of some variables.
    pub fn eval(&self, values: &[(Var, Scalar)]) -> Result<Expr> {
        let b: Vec<(Var, Poly)> = values.iter().map(|(v, c)| (*v, Poly::constant(c.clone()))).collect();
        self.substitute(&b)
    }

    /// Value equality. Shared factors cancel in the quotient before the
    /// rest is expanded.
    pub fn eq_value(&self, other: &Expr) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return true,
            (true, false) | (false, true) => return false,
            _ => {}
        }
        let Ok(q) = self.div(other) else { return false };
        let (a, b) = q.num_den();
        a == b
    }

    pub fn to_canonical_string(&self) -> String {
        alloc::format!("{self}")
    }
}

fn poly_at_exprs(p: &Poly, bindings: &[(Var, Expr)]) -> Result<Expr> {
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let mut kept = Monomial::one();
        let mut t = Expr::constant(c.clone());
        for (v, e) in m.pairs() {
            match bindings.iter().find(|(w, _)| *w == v) {
                Some((_, x)) => t = t.mul(&x.pow(e)?),
                None => kept = kept.mul(&Monomial::var(v, e)),
            }
        }
        terms.push(t.mul(&Expr::from_poly(&Poly::term(kept, Scalar::one()))));
    }
    Ok(Expr::sum(terms))
}

impl fmt::Display for Expr {
    /// Factored text form, e.g. `-2*(z1 - z2 + h)^2*h/(z1*(z2 + h))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let wrap = |p: &Poly| -> String {
            if p.is_monomial() {
                alloc::format!("{p}")
            } else {
                alloc::format!("({p})")
            }
        };
        let mut num: Vec<String> = Vec::new();
        let mut den: Vec<String> = Vec::new();
        for (p, e) in &self.factors {
            let k = e.abs();
            let s = if k == 1 { wrap(p) } else { alloc::format!("{}^{k}", wrap(p)) };
            if *e > 0 {
                num.push(s);
            } else {
                den.push(s);
            }
        }
        let c = &self.coeff;
        if c.is_negative() {
            write!(f, "-")?;
        }
        let abs = c.abs();
        if num.is_empty() {
            write!(f, "{}", scalar_to_string(&abs))?;
        } else if abs.is_one() {
            write!(f, "{}", num.join("*"))?;
        } else {
            write!(f, "{}*{}", scalar_to_string(&abs), num.join("*"))?;
        }
        match den.len() {
            0 => Ok(()),
            1 => write!(f, "/{}", den[0]),
            _ => write!(f, "/({})", den.join("*")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;
    use alloc::string::ToString;

    fn z(b: usize) -> Poly {
        Poly::z(b)
    }

    #[test]
    fn normalization_merges_and_extracts_content() {
        let e = Expr::from_poly(&z(1).sub(&z(2)).scale(&int(-3)));
        assert_eq!(e.coeff(), &int(-3));
        let sq = e.mul(&e);
        assert_eq!(sq.factors().len(), 1);
        assert_eq!(sq.factors()[0].1, 2);
        assert_eq!(sq.to_string(), "9*(z1 - z2)^2");
    }

    #[test]
    fn factor_over_splits_and_cancels() {
        let h = Poly::h();
        let a = z(1).sub(&z(2)).add(&h);
        let b = z(3).sub(&h);
        let e = Expr::ratio(&a.mul(&a).mul(&b), &a.mul(&z(2))).unwrap();
        let f = e.factor_over(&[a.clone(), b.clone()]);
        assert!(f.eq_value(&e));
        assert_eq!(f.to_string(), "(z3 - h)*(z1 - z2 + h)/z2");
    }

    #[test]
    fn sum_cancels_to_polynomial() {
        // h^2/(z2 - z1) + h(z1 - z2 + h)/(z1 - z2) = h
        let h = Poly::h();
        let a = Expr::ratio(&h.pow(2), &z(2).sub(&z(1))).unwrap();
        let b = Expr::ratio(&h.mul(&z(1).sub(&z(2)).add(&h)), &z(1).sub(&z(2))).unwrap();
        let s = a.add(&b);
        assert_eq!(s.to_poly().unwrap(), h);
    }

    #[test]
    fn substitution_hits_zero_denominator() {
        let e = Expr::ratio(&Poly::one(), &z(1).sub(&z(2))).unwrap();
        assert_eq!(e.substitute(&[(Var::z(2), z(1))]).unwrap_err(), Error::IdenticallyZeroDenominator);
        let f = Expr::from_poly(&z(2).sub(&Poly::t(1)).add(&Poly::h()));
        assert_eq!(f.substitute(&[(Var::t(1), z(2))]).unwrap().to_poly().unwrap(), Poly::h());
    }

    #[test]
    fn value_equality_by_cross_multiplication() {
        let a = Expr::ratio(&z(1).pow(2).sub(&z(2).pow(2)), &z(1).sub(&z(2))).unwrap();
        assert!(a.eq_value(&Expr::from_poly(&z(1).add(&z(2)))));
        assert_eq!(a.to_poly().unwrap(), z(1).add(&z(2)));
    }

    #[test]
    fn zero_handling() {
        let a = Expr::from_poly(&z(1));
        assert!(a.sub(&a).is_zero());
        assert!(Expr::zero().inv().is_err());
        assert_eq!(Expr::zero().to_string(), "0");
    }
}
