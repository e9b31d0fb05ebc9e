//! Weight functions of `Gr(d, n)`, their fixed-point restrictions, the
//! localization inner products and equivariant structure constants.
//!
//! Variables: `t_a` is [`Var::T`]`(a)`, `z_b` is [`Var::Z`]`(b)`, both 1-based.
//! Fixed points and Schubert cells are indexed by [`SubsetIndex`].

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::exact::{Expr, Poly, Var};
use crate::table::Theory;

/// A `d`-subset `i_1 < … < i_d` of `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetIndex {
    n: usize,
    elems: Vec<usize>,
}

impl SubsetIndex {
    pub fn new(n: usize, elems: &[usize]) -> Result<Self> {
        let ok = !elems.is_empty()
            && elems.len() <= n
            && elems.windows(2).all(|w| w[0] < w[1])
            && elems.iter().all(|&e| (1..=n).contains(&e));
        if !ok {
            return Err(Error::IndexOutOfRange(alloc::format!("{elems:?} is not an ascending subset of [1, {n}]")));
        }
        Ok(SubsetIndex { n, elems: elems.to_vec() })
    }

    /// Parses `"34"` (one digit per element) or `"3,4"`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let bad = || Error::InvalidInput(alloc::format!("cannot parse subset {s:?}"));
        let elems: Vec<usize> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|v| v as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        SubsetIndex::new(n, &elems)
    }

    /// All `d`-subsets of `[1, n]` in lexicographic order.
    pub fn all(d: usize, n: usize) -> Vec<SubsetIndex> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=d).collect();
        if d == 0 || d > n {
            return out;
        }
        loop {
            out.push(SubsetIndex { n, elems: cur.clone() });
            let Some(a) = (0..d).rev().find(|&a| cur[a] < n - (d - 1 - a)) else {
                break;
            };
            cur[a] += 1;
            for b in a + 1..d {
                cur[b] = cur[b - 1] + 1;
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    /// `dim Ω_I = Σ (i_a - a)`.
    pub fn dim(&self) -> usize {
        self.elems.iter().enumerate().map(|(a, &i)| i - (a + 1)).sum()
    }

    pub fn codim(&self) -> usize {
        self.d() * (self.n - self.d()) - self.dim()
    }

    /// `λ_I = ((n - d) - (i_a - a))_a`.
    pub fn partition(&self) -> Vec<usize> {
        let d = self.d();
        self.elems.iter().enumerate().map(|(a, &i)| (self.n - d) - (i - (a + 1))).collect()
    }

    /// Bruhat order: `i_a <= j_a` for every `a`.
    pub fn bruhat_le(&self, other: &SubsetIndex) -> bool {
        self.d() == other.d() && self.elems.iter().zip(&other.elems).all(|(a, b)| a <= b)
    }

    /// Image `{σ^{-1}(i)}` under the inverse of a 1-based permutation.
    fn preimage(&self, sigma: &[usize]) -> SubsetIndex {
        let mut e: Vec<usize> = self.elems.iter().map(|&i| sigma.iter().position(|&s| s == i).unwrap() + 1).collect();
        e.sort_unstable();
        SubsetIndex { n: self.n, elems: e }
    }
}

impl PartialOrd for SubsetIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubsetIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.elems).cmp(&(other.n, &other.elems))
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n >= 10 { "," } else { "" };
        let parts: Vec<String> = self.elems.iter().map(|e| alloc::format!("{e}")).collect();
        f.write_str(&parts.join(sep))
    }
}

/// All permutations of `0..k`, in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// The longest permutation `b ↦ n + 1 - b`, 1-based.
pub fn longest_permutation(n: usize) -> Vec<usize> {
    (1..=n).rev().collect()
}

/// `U_I` at the given values of `t`, `z` and `h`.
fn u_at(theory: Theory, idx: &[usize], t: &[Expr], z: &[Expr], h: &Expr) -> Result<Expr> {
    let d = idx.len();
    let one = Expr::one();
    let mut num = Vec::with_capacity(d * z.len());
    for (a, &ia) in idx.iter().enumerate() {
        for (b0, zb) in z.iter().enumerate() {
            let b = b0 + 1;
            let f = match theory {
                Theory::H => {
                    let x = zb.sub(&t[a]);
                    match b.cmp(&ia) {
                        Ordering::Less => x.add(h),
                        Ordering::Equal => h.clone(),
                        Ordering::Greater => x,
                    }
                }
                Theory::K => {
                    let x = t[a].div(zb)?;
                    match b.cmp(&ia) {
                        Ordering::Less => one.add(&h.mul(&x)),
                        Ordering::Equal => one.add(h).mul(&x),
                        Ordering::Greater => one.sub(&x),
                    }
                }
            };
            num.push(f);
        }
    }
    let mut den = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            let f = match (theory, a < b) {
                (Theory::H, true) => t[b].sub(&t[a]),
                (Theory::H, false) => t[b].sub(&t[a]).add(h),
                (Theory::K, true) => one.sub(&t[a].div(&t[b])?),
                (Theory::K, false) => one.add(&h.mul(&t[a].div(&t[b])?)),
            };
            den.push(f);
        }
    }
    Expr::product(&num).div(&Expr::product(&den))
}

/// `Sym_t U_{σ^{-1}(I)}(t; z_{σ(1)}, …, z_{σ(n)}; h)` at given `t`, `z`, `h`.
fn w_at(theory: Theory, sigma: &[usize], index: &SubsetIndex, t: &[Expr], z: &[Expr], h: &Expr) -> Result<Expr> {
    let j = index.preimage(sigma);
    let zs: Vec<Expr> = sigma.iter().map(|&s| z[s - 1].clone()).collect();
    let mut terms = Vec::new();
    for p in permutations(t.len()) {
        let tp: Vec<Expr> = p.iter().map(|&a| t[a].clone()).collect();
        terms.push(u_at(theory, j.elems(), &tp, &zs, h)?);
    }
    Ok(Expr::sum(terms))
}

fn t_vars(d: usize) -> Vec<Expr> {
    (1..=d).map(|a| Expr::var(Var::t(a))).collect()
}

fn z_vars(n: usize) -> Vec<Expr> {
    (1..=n).map(|b| Expr::var(Var::z(b))).collect()
}

fn z_at(n: usize, index: &SubsetIndex) -> Vec<Expr> {
    index.elems().iter().map(|&l| Expr::var(Var::z(l))).take(n).collect()
}

/// `U_I^{theory}` in `t_1..t_d`, `z_1..z_n`, `h`.
pub fn weight_u(theory: Theory, index: &SubsetIndex) -> Result<Expr> {
    u_at(theory, index.elems(), &t_vars(index.d()), &z_vars(index.n()), &Expr::var(Var::H))
}

/// A symmetrized weight function `W_{σ,I}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    pub theory: Theory,
    pub sigma: Vec<usize>,
    pub index: SubsetIndex,
    pub expr: Expr,
}

impl WeightFunction {
    /// Whether swapping `t_a` and `t_b` leaves the function unchanged, for all `a < b`.
    pub fn is_symmetric(&self) -> Result<bool> {
        let d = self.index.d();
        for a in 1..=d {
            for b in a + 1..=d {
                let swapped = self.expr.substitute(&[(Var::t(a), Poly::t(b)), (Var::t(b), Poly::t(a))])?;
                if !swapped.eq_value(&self.expr) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `W^{theory}_{σ,I}` with `σ` a 1-based permutation of `[1, n]`.
pub fn weight_w(theory: Theory, sigma: &[usize], index: &SubsetIndex) -> Result<WeightFunction> {
    let n = index.n();
    let mut sorted = sigma.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n).collect::<Vec<_>>() {
        return Err(Error::NotAPermutation);
    }
    let expr = w_at(theory, sigma, index, &t_vars(index.d()), &z_vars(n), &Expr::var(Var::H))?;
    Ok(WeightFunction { theory, sigma: sigma.to_vec(), index: index.clone(), expr })
}

/// The involution `f(t; z; h) ↦ f(1/t; 1/z; 1/h)`.
pub fn iota(f: &Expr) -> Result<Expr> {
    let mut b: Vec<(Var, Expr)> = Vec::new();
    for v in f.vars() {
        if matches!(v, Var::T(_) | Var::Z(_) | Var::H) {
            b.push((v, Expr::var(v).inv()?));
        }
    }
    f.substitute_expr(&b)
}

/// `W_{id,I}` at `t = z_J`: the restriction of the CSM (H) or motivic Chern
/// (K) class of `Ω_I` to the fixed point `x_J`.
pub fn restriction(theory: Theory, i: &SubsetIndex, j: &SubsetIndex) -> Result<Poly> {
    let n = i.n();
    let id: Vec<usize> = (1..=n).collect();
    let e = w_at(theory, &id, i, &z_at(n, j), &z_vars(n), &Expr::var(Var::H))?;
    e.to_poly().map_err(|_| Error::NotPolynomialAfterRestriction(alloc::format!("W_{i} at x_{j}: {e}")))
}

/// The dual weight function at `t = z_L`: `W^H_{s0,K}` in cohomology and
/// `(-h)^{-dim Ω_K} ι(W^K_{s0,K})` in K-theory.
pub fn dual_restriction(theory: Theory, k: &SubsetIndex, l: &SubsetIndex) -> Result<Poly> {
    let n = k.n();
    let s0 = longest_permutation(n);
    let h = Expr::var(Var::H);
    let e = match theory {
        Theory::H => w_at(theory, &s0, k, &z_at(n, l), &z_vars(n), &h)?,
        Theory::K => {
            let inv = |v: &[Expr]| v.iter().map(|x| x.inv()).collect::<Result<Vec<_>>>();
            let w = w_at(theory, &s0, k, &inv(&z_at(n, l))?, &inv(&z_vars(n))?, &h.inv()?)?;
            w.mul(&h.neg().pow(-(k.dim() as i32))?)
        }
    };
    e.to_poly().map_err(|_| Error::NotPolynomialAfterRestriction(alloc::format!("dual W_{k} at x_{l}: {e}")))
}

/// `R_L Q_L` as an expression.
pub fn rq(theory: Theory, l: &SubsetIndex) -> Result<Expr> {
    let h = Poly::h();
    let mut factors = Vec::new();
    for &a in l.elems() {
        for b in (1..=l.n()).filter(|b| !l.elems().contains(b)) {
            let (za, zb) = (Poly::z(a), Poly::z(b));
            match theory {
                Theory::H => {
                    let r = zb.sub(&za);
                    factors.push(Expr::from_poly(&r));
                    factors.push(Expr::from_poly(&r.add(&h)));
                }
                Theory::K => {
                    factors.push(Expr::ratio(&zb.sub(&za), &zb)?);
                    factors.push(Expr::ratio(&h.mul(&za).add(&zb), &h.mul(&za))?);
                }
            }
        }
    }
    Ok(Expr::product(&factors))
}

/// `⟨f, g⟩ = Σ_L f(z_L) g(z_L) / (R_L Q_L)` for `f, g` rational in `t, z, h`.
pub fn inner_product(theory: Theory, d: usize, n: usize, f: &Expr, g: &Expr) -> Result<Expr> {
    let mut terms = Vec::new();
    for l in SubsetIndex::all(d, n) {
        let b: Vec<(Var, Poly)> = l.elems().iter().enumerate().map(|(a, &e)| (Var::t(a + 1), Poly::z(e))).collect();
        let fg = f.substitute(&b)?.mul(&g.substitute(&b)?);
        terms.push(fg.div(&rq(theory, &l)?)?);
    }
    Ok(Expr::sum(terms))
}

/// Restrictions and dual restrictions of all weight functions of `Gr(d, n)`
/// in one theory, computed once.
#[derive(Debug, Clone)]
pub struct WeightData {
    pub theory: Theory,
    pub d: usize,
    pub n: usize,
    subsets: Vec<SubsetIndex>,
    /// `res[I][L] = W_{id,I}(z_L)`.
    res: Vec<Vec<Poly>>,
    /// `dual[K][L]`, see [`dual_restriction`].
    dual: Vec<Vec<Poly>>,
    rq: Vec<Expr>,
}

impl WeightData {
    pub fn new(theory: Theory, d: usize, n: usize) -> Result<Self> {
        if d == 0 || d > n || n > 255 {
            return Err(Error::InvalidInput(alloc::format!("no Grassmannian Gr({d}, {n})")));
        }
        let subsets = SubsetIndex::all(d, n);
        let mut res = Vec::new();
        let mut dual = Vec::new();
        for a in &subsets {
            res.push(subsets.iter().map(|l| restriction(theory, a, l)).collect::<Result<Vec<_>>>()?);
            dual.push(subsets.iter().map(|l| dual_restriction(theory, a, l)).collect::<Result<Vec<_>>>()?);
        }
        let rq = subsets.iter().map(|l| rq(theory, l)).collect::<Result<Vec<_>>>()?;
        Ok(WeightData { theory, d, n, subsets, res, dual, rq })
    }

    pub fn subsets(&self) -> &[SubsetIndex] {
        &self.subsets
    }

    pub fn position(&self, s: &SubsetIndex) -> Result<usize> {
        self.subsets
            .iter()
            .position(|x| x == s)
            .ok_or_else(|| Error::IndexOutOfRange(alloc::format!("{s} is not a {}-subset of [1, {}]", self.d, self.n)))
    }

    pub fn restriction(&self, i: usize, l: usize) -> &Poly {
        &self.res[i][l]
    }

    pub fn dual_restriction(&self, k: usize, l: usize) -> &Poly {
        &self.dual[k][l]
    }

    pub fn rq(&self, l: usize) -> &Expr {
        &self.rq[l]
    }

    /// `⟨W_{id,I}, dual W_J⟩`.
    pub fn pairing(&self, i: usize, j: usize) -> Result<Expr> {
        let mut terms = Vec::new();
        for l in 0..self.subsets.len() {
            let p = self.res[i][l].mul(&self.dual[j][l]);
            if !p.is_zero() {
                terms.push(Expr::from_poly(&p).div(&self.rq[l])?);
            }
        }
        Ok(Expr::sum(terms))
    }

    /// Summand `ĉ^{K,L}_{I,J}` at the fixed point `L`.
    pub fn sc_term(&self, i: usize, j: usize, k: usize, l: usize) -> Result<Expr> {
        let p = self.res[i][l].mul(&self.res[j][l]).mul(&self.dual[k][l]);
        if p.is_zero() {
            return Ok(Expr::zero());
        }
        Expr::from_poly(&p).div(&self.rq[l])
    }

    /// Indices `L` with a possibly nonzero summand.
    pub fn support(&self, i: usize, j: usize, k: usize) -> Vec<usize> {
        (0..self.subsets.len())
            .filter(|&l| !self.res[i][l].is_zero() && !self.res[j][l].is_zero() && !self.dual[k][l].is_zero())
            .collect()
    }

    /// Equivariant structure constant, certified to be a (Laurent) polynomial.
    pub fn equivariant_sc(&self, i: usize, j: usize, k: usize) -> Result<Poly> {
        let terms = self.support(i, j, k).into_iter().map(|l| self.sc_term(i, j, k, l)).collect::<Result<Vec<_>>>()?;
        let s = Expr::sum(terms);
        s.to_poly().map_err(|_| {
            Error::NotPolynomial(alloc::format!(
                "{} constant ({}, {}, {}): {s}",
                self.theory,
                self.subsets[i],
                self.subsets[j],
                self.subsets[k]
            ))
        })
    }
}

/// `ĉ^K_{I,J}` (H) or `Ĉ^K_{I,J}` (K) as a polynomial in `z` and `h`.
pub fn equivariant_sc(theory: Theory, i: &SubsetIndex, j: &SubsetIndex, k: &SubsetIndex) -> Result<Poly> {
    let data = WeightData::new(theory, i.d(), i.n())?;
    data.equivariant_sc(data.position(i)?, data.position(j)?, data.position(k)?)
}

/// Summand of [`equivariant_sc`] at the fixed point `L`.
pub fn sc_term(theory: Theory, i: &SubsetIndex, j: &SubsetIndex, k: &SubsetIndex, l: &SubsetIndex) -> Result<Expr> {
    let data = WeightData::new(theory, i.d(), i.n())?;
    data.sc_term(data.position(i)?, data.position(j)?, data.position(k)?, data.position(l)?)
}

/// `Π_{b <= n-1, b != l} (z_b - z_n + h)`, the Pieri factor of a summand.
pub fn pieri_factor(n: usize, l: usize) -> Poly {
    let zn = Poly::z(n);
    let factors: Vec<Poly> = (1..n).filter(|&b| b != l).map(|b| Poly::z(b).sub(&zn).add(&Poly::h())).collect();
    Poly::product(&factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn s(n: usize, e: &[usize]) -> SubsetIndex {
        SubsetIndex::new(n, e).unwrap()
    }

    fn z(b: usize) -> Poly {
        Poly::z(b)
    }

    #[test]
    fn subsets_and_partitions() {
        assert_eq!(SubsetIndex::all(2, 4).len(), 6);
        assert_eq!(s(4, &[3, 4]).partition(), [0, 0]);
        assert_eq!(s(4, &[1, 2]).partition(), [2, 2]);
        assert_eq!(s(5, &[2, 4]).partition(), [2, 1]);
        assert_eq!(s(5, &[2, 4]).codim(), 3);
        assert_eq!(SubsetIndex::parse("34", 4).unwrap(), s(4, &[3, 4]));
        assert_eq!(SubsetIndex::parse("3,11", 12).unwrap().to_string(), "3,11");
        assert!(SubsetIndex::parse("43", 4).is_err());
        assert!(s(4, &[1, 3]).bruhat_le(&s(4, &[2, 3])));
        assert!(!s(4, &[1, 4]).bruhat_le(&s(4, &[2, 3])));
        assert_eq!(permutations(3).len(), 6);
    }

    #[test]
    fn u_examples() {
        let h = Poly::h();
        let t1 = Poly::t(1);
        assert_eq!(weight_u(Theory::H, &s(2, &[2])).unwrap(), Expr::from_poly(&z(1).sub(&t1).add(&h)));
        assert_eq!(weight_u(Theory::H, &s(2, &[1])).unwrap(), Expr::from_poly(&z(2).sub(&t1)));
        assert!(weight_u(Theory::K, &s(1, &[1])).unwrap().eq_value(&Expr::ratio(&t1, &z(1)).unwrap()));
        let w = weight_w(Theory::H, &longest_permutation(2), &s(2, &[1])).unwrap();
        assert_eq!(w.expr, Expr::from_poly(&z(2).sub(&t1).add(&h)));
    }

    #[test]
    fn symmetrized_weight_is_polynomial() {
        let w = weight_w(Theory::H, &[1, 2, 3, 4], &s(4, &[2, 3])).unwrap();
        let t12 = Poly::t(1).sub(&Poly::t(2));
        assert!(w.expr.factors().iter().all(|(f, e)| *e > 0 || *f != t12));
        assert!(w.expr.mul_poly(&t12.add(&Poly::h())).mul_poly(&t12.sub(&Poly::h())).is_polynomial());
        assert!(w.is_symmetric().unwrap());
        let wk = weight_w(Theory::K, &[1, 2, 3, 4], &s(4, &[2, 3])).unwrap();
        assert!(wk.is_symmetric().unwrap());
        assert_eq!(iota(&iota(&wk.expr).unwrap()).unwrap(), wk.expr);
    }

    #[test]
    fn gr12_restrictions() {
        let h = Poly::h();
        let (p1, p2) = (s(2, &[1]), s(2, &[2]));
        assert!(restriction(Theory::H, &p1, &p2).unwrap().is_zero());
        assert_eq!(restriction(Theory::H, &p2, &p1).unwrap(), h);
        assert_eq!(restriction(Theory::H, &p2, &p2).unwrap(), z(1).sub(&z(2)).add(&h));
        assert_eq!(restriction(Theory::H, &p1, &p1).unwrap(), z(2).sub(&z(1)));
    }

    #[test]
    fn gr24_restrictions() {
        let h = Poly::h();
        let i = s(4, &[2, 3]);
        let at23 = Poly::product(&[z(2).sub(&z(4)), z(3).sub(&z(4)), h.add(&z(1)).sub(&z(2)), h.add(&z(1)).sub(&z(3))]);
        assert_eq!(restriction(Theory::H, &i, &i).unwrap(), at23);
        let at12 = Poly::product(&[h.neg(), z(1).sub(&z(4)), z(2).sub(&z(4)), h.neg().add(&z(2)).sub(&z(3))]);
        assert_eq!(restriction(Theory::H, &i, &s(4, &[1, 2])).unwrap(), at12);
    }

    #[test]
    fn support_is_bruhat_lower() {
        for theory in [Theory::H, Theory::K] {
            for (d, n) in [(1, 3), (2, 4)] {
                let data = WeightData::new(theory, d, n).unwrap();
                for (a, i) in data.subsets().iter().enumerate() {
                    for (b, j) in data.subsets().iter().enumerate() {
                        assert_eq!(data.restriction(a, b).is_zero(), !j.bruhat_le(i), "{i} at {j}");
                        assert_eq!(data.dual_restriction(a, b).is_zero(), !i.bruhat_le(j), "dual {i} at {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonality_small() {
        for theory in [Theory::H, Theory::K] {
            for (d, n) in [(1, 2), (1, 3)] {
                let data = WeightData::new(theory, d, n).unwrap();
                let r = data.subsets().len();
                for i in 0..r {
                    for j in 0..r {
                        let p = data.pairing(i, j).unwrap();
                        let expect = if i == j { Expr::one() } else { Expr::zero() };
                        assert_eq!(p, expect, "{theory} ({i}, {j})");
                    }
                }
            }
        }
    }

    #[test]
    fn gr12_constants() {
        let h = Poly::h();
        let (p1, p2) = (s(2, &[1]), s(2, &[2]));
        assert_eq!(equivariant_sc(Theory::H, &p2, &p2, &p1).unwrap(), h);
        assert_eq!(equivariant_sc(Theory::H, &p2, &p2, &p2).unwrap(), z(1).sub(&z(2)).add(&h));
        let t11 = sc_term(Theory::H, &p2, &p2, &p1, &p1).unwrap();
        assert!(t11.eq_value(&Expr::ratio(&h.pow(2), &z(2).sub(&z(1))).unwrap()));
        let t12 = sc_term(Theory::H, &p2, &p2, &p1, &p2).unwrap();
        let e = z(1).sub(&z(2));
        assert!(t12.eq_value(&Expr::ratio(&h.mul(&e.add(&h)), &e).unwrap()));
    }

    #[test]
    fn inner_product_generic_matches_restrictions() {
        let n = 3;
        let s0 = longest_permutation(n);
        let w = weight_w(Theory::H, &[1, 2, 3], &s(n, &[2])).unwrap();
        let v = weight_w(Theory::H, &s0, &s(n, &[2])).unwrap();
        assert_eq!(inner_product(Theory::H, 1, n, &w.expr, &v.expr).unwrap(), Expr::one());
    }

    #[test]
    fn pieri_factorization() {
        let n = 4;
        let data = WeightData::new(Theory::H, 2, n).unwrap();
        let g1 = WeightData::new(Theory::H, 1, n - 1).unwrap();
        let (i, k) = (data.position(&s(n, &[3, 4])).unwrap(), data.position(&s(n, &[1, 4])).unwrap());
        for l in 1..n {
            let lhs = data.sc_term(i, i, k, data.position(&s(n, &[l, n])).unwrap()).unwrap();
            let rhs = g1.sc_term(2, 2, 0, l - 1).unwrap().mul_poly(&pieri_factor(n, l));
            assert!(lhs.eq_value(&rhs), "L = {{{l}, {n}}}");
        }
    }
}
