//! Nonequivariant limits of equivariant structure constants: `z → 0` in
//! cohomology and `z → 1` (that is `ζ_b = z_b - 1 → 0`) in K-theory.
//!
//! Two methods are provided. `SumAndCancel` clears denominators of the whole
//! fixed-point sum, certifies a polynomial and evaluates it. `LineSubstitution`
//! restricts every summand to the line `z_b = b ε` (or `z_b = 1 + b ε`), sums
//! the resulting functions of `ε, h` and lets `ε → 0`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, order_at, series_coefficient, Expr, Monomial, Poly, Scalar, UPoly, Var};
use crate::table::{SCTable, Theory};
use crate::weightfn::{SubsetIndex, WeightData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LimitMethod {
    SumAndCancel,
    LineSubstitution,
}

impl LimitMethod {
    pub fn name(self) -> &'static str {
        match self {
            LimitMethod::SumAndCancel => "sum_and_cancel",
            LimitMethod::LineSubstitution => "line_substitution",
        }
    }
}

/// A nonequivariant value together with the data certifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitResult {
    pub value: UPoly,
    pub method: LimitMethod,
    /// The cleared polynomial in `z, h`, or in `ε, h` for a line.
    pub certificate: Poly,
}

fn point_of(theory: Theory) -> Scalar {
    match theory {
        Theory::H => Scalar::zero(),
        Theory::K => int(1),
    }
}

fn pole(theory: Theory) -> Error {
    match theory {
        Theory::H => Error::PoleAtOrigin,
        Theory::K => Error::PoleAtOne,
    }
}

fn z_vars_of(e: &Expr) -> Vec<Var> {
    e.vars().into_iter().filter(|v| v.is_z()).collect()
}

fn to_h_poly(p: &Poly) -> Result<UPoly> {
    UPoly::from_poly(p, Var::H).map_err(|_| Error::NonPolynomialResult(alloc::format!("{p}")))
}

fn limit_sum_and_cancel(theory: Theory, expr: &Expr) -> Result<LimitResult> {
    let e = expr.cancel();
    let at = point_of(theory);
    let zs = z_vars_of(&e);
    let values: Vec<(Var, Scalar)> = zs.iter().map(|&v| (v, at.clone())).collect();
    // Every remaining denominator factor must stay nonzero at the point.
    for (f, ex) in e.factors() {
        if *ex < 0 && f.eval(&values)?.is_zero() {
            return Err(pole(theory));
        }
    }
    let v = e.eval(&values)?;
    let p = v.to_poly().map_err(|_| Error::NonPolynomialResult(alloc::format!("{v}")))?;
    let certificate = if e.is_laurent_polynomial() { e.to_poly()? } else { Poly::zero() };
    Ok(LimitResult { value: to_h_poly(&p)?, method: LimitMethod::SumAndCancel, certificate })
}

/// The line `z_b = b ε` (H) or `z_b = 1 + b ε` (K).
fn line(theory: Theory, zs: &[Var]) -> Vec<(Var, Poly)> {
    let eps = Poly::var(Var::Eps);
    zs.iter()
        .map(|&v| {
            let Var::Z(b) = v else { unreachable!() };
            (v, eps.scale(&int(i64::from(b))).add(&Poly::constant(point_of(theory))))
        })
        .collect()
}

/// `lim_{ε→0}` of a sum of functions of `ε, h`, from the Laurent expansion
/// of each term. The polar parts must cancel across the sum. Returns the
/// value and the summed expansion up to order zero.
fn line_limit(terms: &[Expr]) -> Result<(UPoly, Poly)> {
    let zero = Poly::zero();
    let low = terms.iter().map(|t| order_at(t, Var::Eps, &zero)).collect::<Result<Vec<_>>>()?;
    let start = low.iter().copied().min().unwrap_or(0).min(0);
    let mut expansion = Poly::zero();
    let mut value = UPoly::zero();
    for m in start..=0 {
        let parts = terms
            .iter()
            .zip(&low)
            .filter(|(_, &o)| o <= m)
            .map(|(t, _)| series_coefficient(t, Var::Eps, &zero, m))
            .collect::<Result<Vec<_>>>()?;
        let c = Expr::sum(parts);
        let p = c.to_poly().map_err(|_| Error::NonPolynomialResult(alloc::format!("{c}")))?;
        if m < 0 && !p.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        if m == 0 {
            value = to_h_poly(&p)?;
        }
        expansion = expansion.add(&p.mul_monomial(&Monomial::var(Var::Eps, m)));
    }
    Ok((value, expansion))
}

fn limit_line(theory: Theory, terms: &[Expr]) -> Result<LimitResult> {
    let mut zs: Vec<Var> = terms.iter().flat_map(z_vars_of).collect();
    zs.sort();
    zs.dedup();
    let b = line(theory, &zs);
    let on_line = terms.iter().map(|t| t.substitute(&b)).collect::<Result<Vec<_>>>()?;
    let (value, certificate) = line_limit(&on_line).map_err(|e| match e {
        Error::PoleAtOrigin => pole(theory),
        other => other,
    })?;
    Ok(LimitResult { value, method: LimitMethod::LineSubstitution, certificate })
}

/// Cohomological limit `z → 0` of a sum of terms.
pub fn limit_h(terms: &[Expr], method: LimitMethod) -> Result<LimitResult> {
    match method {
        LimitMethod::SumAndCancel => limit_sum_and_cancel(Theory::H, &Expr::sum(terms.iter().cloned())),
        LimitMethod::LineSubstitution => limit_line(Theory::H, terms),
    }
}

/// K-theoretic limit `z → 1` of a sum of terms.
pub fn limit_k(terms: &[Expr], method: LimitMethod) -> Result<LimitResult> {
    match method {
        LimitMethod::SumAndCancel => limit_sum_and_cancel(Theory::K, &Expr::sum(terms.iter().cloned())),
        LimitMethod::LineSubstitution => limit_line(Theory::K, terms),
    }
}

/// A polynomial written in `ν = -1 - h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuPolynomial {
    coeffs: Vec<Scalar>,
}

fn nu_map() -> UPoly {
    UPoly::from_ints(&[-1, -1])
}

impl NuPolynomial {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The form in `h`, substituting `ν = -1 - h`.
    pub fn to_h(&self) -> UPoly {
        UPoly::from_coeffs(self.coeffs.clone()).compose(&nu_map())
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Lowest `ν`-degree and its coefficient.
    pub fn lowest(&self) -> Option<(usize, &Scalar)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn neg(&self) -> NuPolynomial {
        NuPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for NuPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&UPoly::from_coeffs(self.coeffs.clone()).to_string_in("ν"))
    }
}

/// Rewrites a polynomial in `h` in the variable `ν = -1 - h`.
pub fn nu_expand(p: &UPoly) -> NuPolynomial {
    let q = p.compose(&nu_map());
    let out = NuPolynomial { coeffs: q.coeffs().to_vec() };
    assert_eq!(out.to_h(), *p, "ν round trip");
    out
}

/// Size limits of the general solver: the number `d` of `t`-variables and
/// the number `binom(n, d)` of fixed points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_d: usize,
    pub max_points: usize,
}

impl Default for Budget {
    /// Full tables up to `Gr(2, 5)`.
    fn default() -> Self {
        Budget { max_d: 2, max_points: 10 }
    }
}

impl Budget {
    /// Single constants up to `Gr(3, 6)`.
    pub fn extended() -> Self {
        Budget { max_d: 3, max_points: 20 }
    }

    pub fn check(&self, d: usize, n: usize) -> Result<()> {
        let points = crate::exact::binomial_i(n as i64, d as i64);
        if d <= self.max_d && points <= self.max_points.into() {
            Ok(())
        } else {
            Err(Error::BudgetExceeded(alloc::format!(
                "Gr({d}, {n}) has {points} fixed points; the budget allows d <= {} and {} points",
                self.max_d,
                self.max_points
            )))
        }
    }
}

/// Restrictions and localization denominators already placed on the line.
#[derive(Debug, Clone)]
struct LineData {
    res: Vec<Vec<Expr>>,
    dual: Vec<Vec<Expr>>,
    rq: Vec<Expr>,
}

impl LineData {
    fn new(data: &WeightData) -> Result<Self> {
        let zs: Vec<Var> = (1..=data.n).map(Var::z).collect();
        let b = line(data.theory, &zs);
        let on = |p: &Poly| Expr::from_poly(p).substitute(&b);
        let r = data.subsets().len();
        let mut res = Vec::with_capacity(r);
        let mut dual = Vec::with_capacity(r);
        for i in 0..r {
            res.push((0..r).map(|l| on(data.restriction(i, l))).collect::<Result<Vec<_>>>()?);
            dual.push((0..r).map(|l| on(data.dual_restriction(i, l))).collect::<Result<Vec<_>>>()?);
        }
        let rq = (0..r).map(|l| data.rq(l).substitute(&b)).collect::<Result<Vec<_>>>()?;
        Ok(LineData { res, dual, rq })
    }
}

/// Nonequivariant structure constants of `Gr(d, n)` from weight functions.
#[derive(Debug, Clone)]
pub struct Solver {
    data: WeightData,
    line: Option<LineData>,
    pub method: LimitMethod,
}

impl Solver {
    pub fn new(theory: Theory, d: usize, n: usize, method: LimitMethod, budget: Budget) -> Result<Self> {
        budget.check(d, n)?;
        let data = WeightData::new(theory, d, n)?;
        let line = match method {
            LimitMethod::LineSubstitution => Some(LineData::new(&data)?),
            LimitMethod::SumAndCancel => None,
        };
        Ok(Solver { data, line, method })
    }

    pub fn data(&self) -> &WeightData {
        &self.data
    }

    pub fn theory(&self) -> Theory {
        self.data.theory
    }

    /// Limit of the constant with positions `(i, j, k)` in [`WeightData::subsets`].
    pub fn constant_at(&self, i: usize, j: usize, k: usize) -> Result<LimitResult> {
        let Some(line) = &self.line else {
            // Certifies polynomiality of the equivariant constant first.
            let p = self.data.equivariant_sc(i, j, k)?;
            let r = limit_sum_and_cancel(self.theory(), &Expr::from_poly(&p))?;
            return Ok(LimitResult { certificate: p, ..r });
        };
        let mut terms = Vec::new();
        for l in self.data.support(i, j, k) {
            terms.push(line.res[i][l].mul(&line.res[j][l]).mul(&line.dual[k][l]).div(&line.rq[l])?);
        }
        let (value, certificate) = line_limit(&terms).map_err(|e| match e {
            Error::PoleAtOrigin => pole(self.theory()),
            other => other,
        })?;
        Ok(LimitResult { value, method: self.method, certificate })
    }

    pub fn constant(&self, i: &SubsetIndex, j: &SubsetIndex, k: &SubsetIndex) -> Result<LimitResult> {
        self.constant_at(self.data.position(i)?, self.data.position(j)?, self.data.position(k)?)
    }

    /// Full table, labels being the subsets in lexicographic order.
    pub fn table(&self) -> Result<SCTable> {
        let subsets = self.data.subsets();
        let labels: Vec<String> = subsets.iter().map(|s| alloc::format!("{s}")).collect();
        let mut t = SCTable::new(self.theory(), labels)
            .with_meta("space", &alloc::format!("Gr({},{})", self.data.d, self.data.n))
            .with_meta("pipeline", "weight_function")
            .with_meta("limit", self.method.name());
        let r = subsets.len();
        for i in 0..r {
            for j in i..r {
                for k in 0..r {
                    if !(subsets[k].bruhat_le(&subsets[i]) && subsets[k].bruhat_le(&subsets[j])) {
                        continue;
                    }
                    t.set(i, j, k, self.constant_at(i, j, k)?.value.to_poly(Var::H));
                }
            }
        }
        Ok(t)
    }
}

/// One nonequivariant constant `c^K_{I,J}` (H) or `C^K_{I,J}` (K).
pub fn sc_nonequivariant(
    theory: Theory,
    i: &SubsetIndex,
    j: &SubsetIndex,
    k: &SubsetIndex,
    budget: Budget,
) -> Result<UPoly> {
    let s = Solver::new(theory, i.d(), i.n(), LimitMethod::SumAndCancel, budget)?;
    Ok(s.constant(i, j, k)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn s(n: usize, e: &[usize]) -> SubsetIndex {
        SubsetIndex::new(n, e).unwrap()
    }

    #[test]
    fn simple_limits() {
        let h = Poly::h();
        let (z1, z2) = (Poly::z(1), Poly::z(2));
        let terms = [
            Expr::ratio(&h.pow(2), &z2.sub(&z1)).unwrap(),
            Expr::ratio(&h.mul(&z1.sub(&z2).add(&h)), &z1.sub(&z2)).unwrap(),
        ];
        for m in [LimitMethod::SumAndCancel, LimitMethod::LineSubstitution] {
            assert_eq!(limit_h(&terms, m).unwrap().value, UPoly::monomial(int(1), 1));
            let p = Expr::from_poly(&z1.mul(&h).add(&h.pow(3)));
            assert_eq!(limit_h(&[p], m).unwrap().value, UPoly::monomial(int(1), 3));
            let bad = Expr::var(Var::z(1)).inv().unwrap();
            assert_eq!(limit_h(&[bad], m).unwrap_err(), Error::PoleAtOrigin);
            let c = Expr::constant(int(5));
            assert_eq!(limit_k(&[c], m).unwrap().value, UPoly::int(5));
            let bad = Expr::ratio(&Poly::one(), &z1.sub(&Poly::one())).unwrap();
            assert_eq!(limit_k(&[bad], m).unwrap_err(), Error::PoleAtOne);
        }
    }

    #[test]
    fn nu_forms() {
        let p = UPoly::from_ints(&[1, 1]);
        assert_eq!(nu_expand(&p).coeffs(), [int(0), int(-1)]);
        assert_eq!(nu_expand(&p.pow(2)).coeffs(), [int(0), int(0), int(1)]);
        let q = p.mul(&UPoly::from_ints(&[1, 2])).neg();
        assert_eq!(nu_expand(&q).coeffs(), [int(0), int(-1), int(-2)]);
        assert_eq!(nu_expand(&q).to_string(), "-2*ν^2 - ν");
    }

    #[test]
    fn gr12_both_theories() {
        for m in [LimitMethod::SumAndCancel, LimitMethod::LineSubstitution] {
            let k = Solver::new(Theory::K, 1, 2, m, Budget::default()).unwrap();
            let (p1, p2) = (s(2, &[1]), s(2, &[2]));
            assert_eq!(k.constant(&p2, &p2, &p2).unwrap().value, UPoly::from_ints(&[1, 1]));
            assert_eq!(k.constant(&p2, &p2, &p1).unwrap().value, UPoly::from_ints(&[-1, -3, -2]));
            let h = Solver::new(Theory::H, 1, 2, m, Budget::default()).unwrap();
            assert_eq!(h.constant(&p2, &p2, &p1).unwrap().value, UPoly::monomial(int(1), 1));
        }
    }

    #[test]
    fn gr24_examples() {
        let b = Budget::default();
        let s34 = s(4, &[3, 4]);
        assert_eq!(sc_nonequivariant(Theory::H, &s34, &s34, &s34, b).unwrap(), UPoly::monomial(int(1), 4));
        let s14 = s(4, &[1, 4]);
        let line = Solver::new(Theory::H, 2, 4, LimitMethod::LineSubstitution, b).unwrap();
        assert_eq!(line.constant(&s34, &s34, &s14).unwrap().value, UPoly::monomial(int(7), 4));
    }

    #[test]
    fn budget() {
        assert!(Solver::new(Theory::H, 3, 6, LimitMethod::SumAndCancel, Budget::default()).is_err());
        assert!(Budget::default().check(1, 6).is_ok());
        assert!(Budget::default().check(2, 6).is_err());
        assert!(Budget::extended().check(3, 6).is_ok());
    }
}
