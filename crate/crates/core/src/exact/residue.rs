use alloc::vec::Vec;

use super::expr::Expr;
use super::poly::Poly;
use super::var::Var;
use crate::error::{Error, Result};

/// Moves `point` to the origin: `var ← var + point`.
fn shifted(expr: &Expr, var: Var, point: &Poly) -> Result<Expr> {
    if point.is_zero() {
        return Ok(expr.clone());
    }
    if point.contains_var(var) {
        return Err(Error::EssentialOrUndetermined(alloc::format!("point `{point}` involves {var}")));
    }
    expr.substitute(&[(var, Poly::var(var).add(point))])
}

/// Splits a shifted expression as `var^s * num / den` with `den(0) != 0`.
///
/// After normalization no factor other than `var` itself can vanish
/// identically at `var = 0`, so `s` is exactly the exponent of that factor.
fn split_at_origin(e: &Expr, var: Var) -> (i32, Poly, Vec<(Poly, i32)>) {
    let pv = Poly::var(var);
    let mut s = 0;
    let mut num = Poly::constant(e.coeff().clone());
    let mut den = Vec::new();
    for (f, k) in e.factors() {
        if *f == pv {
            s = *k;
        } else if *k > 0 {
            num = num.mul(&f.pow(*k as u32));
        } else {
            den.push((f.clone(), -k));
        }
    }
    (s, num, den)
}

/// Residue of `expr` (rational in `var`) at `var = point`, by exact series
/// division after shifting the point to the origin.
pub fn residue_at(expr: &Expr, var: Var, point: &Poly) -> Result<Expr> {
    series_coefficient(expr, var, point, -1)
}

/// Order of `expr` in `var` at `var = point`: the exponent of the lowest
/// term of its Laurent expansion.
pub fn order_at(expr: &Expr, var: Var, point: &Poly) -> Result<i32> {
    Ok(shifted(expr, var, point)?.var_exponent(var))
}

/// Coefficient of `(var - point)^m` in the Laurent expansion of `expr`.
pub fn series_coefficient(expr: &Expr, var: Var, point: &Poly, m: i32) -> Result<Expr> {
    let e = shifted(expr, var, point)?;
    if e.is_zero() {
        return Ok(Expr::zero());
    }
    let (s, num, den) = split_at_origin(&e, var);
    let k = m - s;
    if k < 0 {
        return Ok(Expr::zero());
    }
    let k = k as usize;
    if num.has_negative_exponents() && num.min_degree_in(var).is_some_and(|d| d < 0) {
        return Err(Error::EssentialOrUndetermined(alloc::format!("negative powers of {var} left in `{num}`")));
    }
    let den_poly = den.iter().fold(Poly::one(), |acc, (f, j)| acc.mul(&f.pow(*j as u32)));
    let d: Vec<Poly> = (0..=k).map(|i| den_poly.coefficient_of(var, i as i32)).collect();
    let n: Vec<Poly> = (0..=k).map(|i| num.coefficient_of(var, i as i32)).collect();
    if d[0].is_zero() {
        return Err(Error::EssentialOrUndetermined(alloc::format!("denominator vanishes at {var} = {point}")));
    }
    // q_j = N_j / d0^{j+1} with N_j = n_j d0^j - Σ_{i=1..j} d_i N_{j-i} d0^{i-1}.
    let mut d0_pows = alloc::vec![Poly::one()];
    for i in 1..=k {
        let p = d0_pows[i - 1].mul(&d[0]);
        d0_pows.push(p);
    }
    let mut big_n: Vec<Poly> = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let mut acc = n[j].mul(&d0_pows[j]);
        for i in 1..=j {
            if d[i].is_zero() {
                continue;
            }
            acc = acc.sub(&d[i].mul(&big_n[j - i]).mul(&d0_pows[i - 1]));
        }
        big_n.push(acc);
    }
    let d0_expr = den.iter().try_fold(Expr::one(), |acc, (f, j)| -> Result<Expr> {
        let f0 = f.substitute(&[(var, Poly::zero())])?;
        Ok(acc.mul(&Expr::from_poly(&f0).pow(*j)?))
    })?;
    let q = Expr::from_poly(&big_n[k]).mul(&d0_expr.pow(-(k as i32) - 1)?);
    Ok(q.cancel())
}

/// Limit of `expr` as `var → point`; a pole is reported as
/// [`Error::PoleAtOrigin`].
pub fn limit_at(expr: &Expr, var: Var, point: &Poly) -> Result<Expr> {
    let e = shifted(expr, var, point)?;
    if e.is_zero() {
        return Ok(Expr::zero());
    }
    let s = e.var_exponent(var);
    if s > 0 {
        return Ok(Expr::zero());
    }
    if s < 0 {
        return Err(Error::PoleAtOrigin);
    }
    e.substitute(&[(var, Poly::zero())])
}

/// Coefficient of `var^degree` in a polynomial expression.
pub fn coefficient_of(expr: &Expr, var: Var, degree: i32) -> Result<Poly> {
    let p = expr.to_poly()?;
    Ok(p.coefficient_of(var, degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;

    fn zb() -> Poly {
        Poly::z(2)
    }

    fn zl() -> Poly {
        Poly::z(1)
    }

    // (z_b - z_l + h)^2 / ((z_b - z_l) z_b)
    fn lemma_f() -> Expr {
        let h = Poly::h();
        let d = zb().sub(&zl());
        Expr::ratio(&d.add(&h).pow(2), &d.mul(&zb())).unwrap()
    }

    #[test]
    fn residue_at_origin() {
        let r = residue_at(&lemma_f(), Var::z(2), &Poly::zero()).unwrap();
        let expect = Expr::ratio(&Poly::h().sub(&zl()).pow(2), &zl().neg()).unwrap();
        assert!(r.eq_value(&expect));
    }

    #[test]
    fn residues_sum() {
        let a = residue_at(&lemma_f(), Var::z(2), &Poly::zero()).unwrap();
        let b = residue_at(&lemma_f(), Var::z(2), &zl()).unwrap();
        let s = a.add(&b).to_poly().unwrap();
        assert_eq!(s, Poly::h().scale(&int(2)).sub(&zl()));
    }

    #[test]
    fn higher_order_pole() {
        // Res_{z=0} h^2 (z+h)^2 / z^3 = h^2
        let z = Poly::var(Var::Z(0));
        let h = Poly::h();
        let e = Expr::ratio(&h.pow(2).mul(&z.add(&h).pow(2)), &z.pow(3)).unwrap();
        let r = residue_at(&e, Var::Z(0), &Poly::zero()).unwrap();
        assert_eq!(r.to_poly().unwrap(), h.pow(2));
    }

    #[test]
    fn pole_with_nontrivial_denominator() {
        // Res_{z=0} 1/(z^2 (z - a)) = -1/a^2
        let z = Poly::var(Var::Z(0));
        let a = Poly::z(1);
        let e = Expr::ratio(&Poly::one(), &z.pow(2).mul(&z.sub(&a))).unwrap();
        let r = residue_at(&e, Var::Z(0), &Poly::zero()).unwrap();
        assert!(r.eq_value(&Expr::ratio(&Poly::int(-1), &a.pow(2)).unwrap()));
    }

    #[test]
    fn limits() {
        let e = Expr::ratio(&Poly::one(), &Poly::z(1)).unwrap();
        assert_eq!(limit_at(&e, Var::z(1), &Poly::zero()).unwrap_err(), Error::PoleAtOrigin);
        let p = Expr::from_poly(&Poly::z(1).add(&Poly::h()));
        assert_eq!(limit_at(&p, Var::z(1), &Poly::zero()).unwrap().to_poly().unwrap(), Poly::h());
    }
}
