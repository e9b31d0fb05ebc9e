//! Closed formulas for projective spaces and Pieri triples in `Gr(2, n)`,
//! together with their one-variable residue realizations.
//!
//! Residues are taken in the bare variable `z` ([`Var::Z`]`(0)`) at the
//! origin. Index conventions follow the cells: `Ω_1` is the point.

use crate::error::{Error, Result};
use crate::exact::{binomial, coefficient_of, residue_at, Expr, Poly, UPoly, Var};

/// The residue variable `z`.
pub const Z: Var = Var::Z(0);

fn zvar() -> Poly {
    Poly::var(Z)
}

fn check_range(name: &str, lo: usize, hi: usize, vals: &[usize]) -> Result<()> {
    if vals.iter().all(|&v| (lo..=hi).contains(&v)) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(alloc::format!("{name}: indices {vals:?} outside [{lo}, {hi}]")))
    }
}

/// `c^k_{i,j} = binom(i+j-k-2, m-1) h^m` on `P^m`.
pub fn c_projective(m: usize, i: usize, j: usize, k: usize) -> Result<UPoly> {
    check_range("c_projective", 1, m + 1, &[i, j, k])?;
    let b = binomial((i + j) as i64 - k as i64 - 2, m as i64 - 1);
    Ok(UPoly::monomial(b, m))
}

/// Normalized K-theoretic constant
/// `C̃^k_{i,j} = binom(i+j-k-2, m) h^{i+j-k-m-2} + binom(i+j-k-1, m) h^{i+j-k-m-1}`.
pub fn c_tilde_projective(m: usize, i: usize, j: usize, k: usize) -> Result<UPoly> {
    check_range("c_tilde_projective", 1, m + 1, &[i, j, k])?;
    let s = (i + j) as i64 - k as i64;
    let m_ = m as i64;
    let mut out = UPoly::zero();
    for (top, e) in [(s - 2, s - m_ - 2), (s - 1, s - m_ - 1)] {
        let b = binomial(top, m_);
        if b == num_traits::Zero::zero() {
            continue;
        }
        if e < 0 {
            return Err(Error::NonPolynomialResult(alloc::format!("h^{e} with nonzero binomial at ({m},{i},{j},{k})")));
        }
        out = out.add(&UPoly::monomial(b, e as usize));
    }
    Ok(out)
}

/// `C^k_{i,j} = (-1)^{m+i+j+k+1} (1+h)^m C̃^k_{i,j}` on `P^m`.
pub fn c_projective_k(m: usize, i: usize, j: usize, k: usize) -> Result<UPoly> {
    let t = c_tilde_projective(m, i, j, k)?;
    let p = t.mul(&UPoly::from_ints(&[1, 1]).pow(m as u32));
    Ok(if (m + i + j + k + 1) % 2 == 1 { p.neg() } else { p })
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

/// `(z + c h)^e` as an expression.
fn shifted_power(c: i64, e: i64) -> Result<Expr> {
    Expr::from_poly(&zvar().add(&Poly::h().scale(&crate::exact::int(c)))).pow(e as i32)
}

fn h_power(e: i64) -> Result<Expr> {
    Expr::var(Var::H).pow(e as i32)
}

fn z_power(e: i64) -> Result<Expr> {
    Expr::var(Z).pow(e as i32)
}

fn residue_to_upoly(e: &Expr) -> Result<UPoly> {
    let r = residue_at(e, Z, &Poly::zero())?;
    let p = r.to_poly().map_err(|_| Error::NonPolynomialResult(alloc::format!("{r}")))?;
    UPoly::from_poly(&p, Var::H)
}

/// Term `c^{k,l}_{i,j}` of the weight-function decomposition on `Gr(1, n)`,
/// evaluated as a residue at `z = 0`.
pub fn c_term_projective(n: usize, i: usize, j: usize, k: usize, l: usize) -> Result<UPoly> {
    check_range("c_term_projective", 1, n, &[i, j, k, l])?;
    let (i, j) = (i.min(j), i.max(j));
    if !(k <= l && l <= i) {
        return Ok(UPoly::zero());
    }
    if k == i {
        return Ok(if j == n { UPoly::monomial(num_traits::One::one(), n - 1) } else { UPoly::zero() });
    }
    let (n_, i_, j_, k_, l_) = (n as i64, i as i64, j as i64, k as i64, l as i64);
    let d = delta(i, j);
    let f = if l == k {
        h_power(2)?.mul(&shifted_power(1, i_ + j_ - k_ - 3)?).mul(&z_power(-(i_ + j_ - k_ - n_ + 1))?)
    } else if l < i {
        h_power(3)?
            .mul(&shifted_power(1, i_ + j_ + k_ - 2 * l_ - 3)?)
            .mul(&shifted_power(2, l_ - k_ - 1)?)
            .mul(&z_power(-(i_ + j_ - l_ - n_ + 1))?)
    } else {
        h_power(2 - d)?
            .mul(&shifted_power(1, k_ - 1 + (j_ - i_ - 1) * (1 - d))?)
            .mul(&shifted_power(2, i_ - k_ - 1)?)
            .mul(&z_power(-(j_ - n_ + 1))?)
    };
    residue_to_upoly(&f)
}

/// `p^k_{i,j}(z)` for `k < i <= j`, and its coefficient of `z^{i+j-k-n}`.
pub fn p_poly_projective(n: usize, i: usize, j: usize, k: usize) -> Result<(Poly, UPoly)> {
    check_range("p_poly_projective", 1, n, &[i, j, k])?;
    let (i, j) = (i.min(j), i.max(j));
    if k >= i {
        return Err(Error::IndexOutOfRange(alloc::format!("p_poly_projective needs k < i, got k={k}, i={i}")));
    }
    let (i_, j_, k_) = (i as i64, j as i64, k as i64);
    let d = delta(i, j);
    let mut terms = alloc::vec![
        h_power(2)?.mul(&shifted_power(1, i_ + j_ - k_ - 3)?),
        h_power(2 - d)?
            .mul(&z_power(i_ - k_)?)
            .mul(&shifted_power(1, k_ - 1 + (j_ - i_ - 1) * (1 - d))?)
            .mul(&shifted_power(2, i_ - k_ - 1)?),
    ];
    for l_ in k_ + 1..i_ {
        terms.push(
            h_power(3)?
                .mul(&z_power(l_ - k_)?)
                .mul(&shifted_power(1, i_ + j_ + k_ - 2 * l_ - 3)?)
                .mul(&shifted_power(2, l_ - k_ - 1)?),
        );
    }
    let p = Expr::sum(terms).to_poly()?;
    let deg = i_ + j_ - k_ - n as i64;
    let c = if deg < 0 { Poly::zero() } else { coefficient_of(&Expr::from_poly(&p), Z, deg as i32)? };
    Ok((p, UPoly::from_poly(&c, Var::H)?))
}

/// A 2-subset of `[1, n]` containing `n`, identified by its least element.
fn pieri_least(n: usize, s: &[usize]) -> Result<usize> {
    match s {
        [a, b] if *b == n && *a >= 1 && *a < n => Ok(*a),
        _ => Err(Error::NotAPieriTriple),
    }
}

/// Term `c^{K,L}_{I,J}` for a Pieri triple of `Gr(2, n)` (`n ∈ I, J, K`).
pub fn c_pieri_gr2(n: usize, ii: &[usize], jj: &[usize], kk: &[usize], ll: &[usize]) -> Result<UPoly> {
    let (i, j, k) = (pieri_least(n, ii)?, pieri_least(n, jj)?, pieri_least(n, kk)?);
    let Ok(l) = pieri_least(n, ll) else {
        return Ok(UPoly::zero());
    };
    let (i, j) = (i.min(j), i.max(j));
    if !(k <= l && l <= i) {
        return Ok(UPoly::zero());
    }
    if k == i {
        return Ok(if j == n - 1 { UPoly::monomial(num_traits::One::one(), 2 * (n - 2)) } else { UPoly::zero() });
    }
    let (n_, i_, j_, k_, l_) = (n as i64, i as i64, j as i64, k as i64, l as i64);
    let d = delta(i, j);
    let two = Expr::constant(crate::exact::int(2));
    let f = if l == k {
        h_power(n_)?.mul(&shifted_power(1, i_ + j_ - k_ - 3)?).mul(&z_power(-(i_ + j_ - k_ - n_ + 2))?)
    } else if l < i {
        two.mul(&h_power(n_ + 1)?)
            .mul(&shifted_power(1, i_ + j_ + k_ - 2 * l_ - 3)?)
            .mul(&shifted_power(3, l_ - k_ - 1)?)
            .mul(&z_power(-(i_ + j_ - l_ - n_ + 2))?)
    } else {
        two.mul(&h_power(n_ - d)?)
            .mul(&shifted_power(1, k_ - 1 + (j_ - i_ - 1) * (1 - d))?)
            .mul(&shifted_power(3, i_ - k_ - 1)?)
            .mul(&z_power(-(j_ - n_ + 2))?)
    };
    residue_to_upoly(&f)
}

/// `c^K_{I,J} = Σ_L c^{K,L}_{I,J}` for a Pieri triple.
pub fn c_pieri_total(n: usize, ii: &[usize], jj: &[usize], kk: &[usize]) -> Result<UPoly> {
    let mut total = UPoly::zero();
    for l in 1..n {
        total = total.add(&c_pieri_gr2(n, ii, jj, kk, &[l, n])?);
    }
    Ok(total)
}

/// `p^K_{I,J}(z)` for a Pieri triple with `k < i <= j`, and its coefficient
/// of `z^{i+j-k-n+1}`.
pub fn p_poly_pieri(n: usize, ii: &[usize], jj: &[usize], kk: &[usize]) -> Result<(Poly, UPoly)> {
    let (i, j, k) = (pieri_least(n, ii)?, pieri_least(n, jj)?, pieri_least(n, kk)?);
    let (i, j) = (i.min(j), i.max(j));
    if k >= i {
        return Err(Error::IndexOutOfRange(alloc::format!("p_poly_pieri needs k < i, got k={k}, i={i}")));
    }
    let (n_, i_, j_, k_) = (n as i64, i as i64, j as i64, k as i64);
    let d = delta(i, j);
    let two = Expr::constant(crate::exact::int(2));
    let mut terms = alloc::vec![
        h_power(n_)?.mul(&shifted_power(1, i_ + j_ - k_ - 3)?),
        two.mul(&h_power(n_ - d)?)
            .mul(&z_power(i_ - k_)?)
            .mul(&shifted_power(1, k_ - 1 + (j_ - i_ - 1) * (1 - d))?)
            .mul(&shifted_power(3, i_ - k_ - 1)?),
    ];
    for l_ in k_ + 1..i_ {
        terms.push(
            two.mul(&h_power(n_ + 1)?)
                .mul(&z_power(l_ - k_)?)
                .mul(&shifted_power(1, i_ + j_ + k_ - 2 * l_ - 3)?)
                .mul(&shifted_power(3, l_ - k_ - 1)?),
        );
    }
    let p = Expr::sum(terms).to_poly()?;
    let deg = i_ + j_ - k_ - n_ + 1;
    let c = if deg < 0 { Poly::zero() } else { coefficient_of(&Expr::from_poly(&p), Z, deg as i32)? };
    Ok((p, UPoly::from_poly(&c, Var::H)?))
}

/// Variables of the two-variable residue lemmas: `z_b` and `z_l`.
pub const ZB: Var = Var::Z(2);
pub const ZL: Var = Var::Z(1);

/// `(z_b - z_l + h)^r / ((z_b - z_l) z_b)`, times `(z_b + h)` when `pieri`.
pub fn lemma_integrand(r: u32, pieri: bool) -> Expr {
    let zb = Poly::var(ZB);
    let diff = zb.sub(&Poly::var(ZL));
    let mut num = diff.add(&Poly::h()).pow(r);
    if pieri {
        num = num.mul(&zb.add(&Poly::h()));
    }
    Expr::ratio(&num, &diff.mul(&zb)).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn hm(c: i64, k: usize) -> UPoly {
        UPoly::monomial(int(c), k)
    }

    #[test]
    fn projective_examples() {
        assert_eq!(c_projective(2, 3, 3, 1).unwrap(), hm(3, 2));
        assert_eq!(c_projective(2, 1, 1, 1).unwrap(), UPoly::zero());
        assert_eq!(c_projective(1, 2, 2, 1).unwrap(), hm(1, 1));
        assert!(c_projective(2, 4, 1, 1).is_err());
    }

    #[test]
    fn k_projective_examples() {
        assert_eq!(c_projective_k(1, 2, 2, 2).unwrap(), UPoly::from_ints(&[1, 1]));
        assert_eq!(c_projective_k(1, 2, 2, 1).unwrap(), UPoly::from_ints(&[-1, -3, -2]));
        let expect = UPoly::from_ints(&[1, 1]).pow(2).mul(&UPoly::from_ints(&[1, 3])).neg();
        assert_eq!(c_projective_k(2, 3, 3, 2).unwrap(), expect);
    }

    #[test]
    fn terms_on_p2() {
        assert_eq!(c_term_projective(3, 3, 3, 1, 1).unwrap(), hm(1, 2));
        assert_eq!(c_term_projective(3, 3, 3, 1, 2).unwrap(), UPoly::zero());
        assert_eq!(c_term_projective(3, 3, 3, 1, 3).unwrap(), hm(2, 2));
        let (_, c) = p_poly_projective(3, 3, 3, 1).unwrap();
        assert_eq!(c, hm(3, 2));
    }

    #[test]
    fn pieri_examples() {
        let s34 = [3, 4];
        assert_eq!(c_pieri_gr2(4, &s34, &s34, &s34, &s34).unwrap(), hm(1, 4));
        let s24 = [2, 4];
        assert_eq!(c_pieri_total(4, &s24, &s24, &s24).unwrap(), UPoly::zero());
        let s14 = [1, 4];
        let terms: alloc::vec::Vec<UPoly> =
            (1..=3).map(|l| c_pieri_gr2(4, &s34, &s34, &s14, &[l, 4]).unwrap()).collect();
        assert_eq!(terms, [hm(1, 4), UPoly::zero(), hm(6, 4)]);
        assert_eq!(c_pieri_total(4, &s34, &s34, &s14).unwrap(), hm(7, 4));
        assert_eq!(p_poly_pieri(4, &s34, &s34, &s14).unwrap().1, hm(7, 4));
        assert_eq!(c_pieri_gr2(4, &[1, 2], &s34, &s34, &s34).unwrap_err(), Error::NotAPieriTriple);
    }
}
