//! Cohomology of a shelled smooth complete toric variety, with the classes
//! of its cells.
//!
//! `H^*(X)` is realized as a finite-rank module with basis the closures
//! `[V_{s}]` of the cells, one per cell, and a precomputed multiplication
//! table. Coordinates of a class are polynomials in `h`; basis index `i`
//! is the closure of cell `Ω_{i+1}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Scalar, UPoly, URat};
use crate::fan::{coordinates, is_subset, RaySet, ShelledFan};
use crate::table::{SCTable, Theory};

/// Element of `H^*(X)[h]` in the cell-closure basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohClass {
    coords: Vec<UPoly>,
}

impl CohClass {
    pub fn zero(rank: usize) -> Self {
        CohClass { coords: alloc::vec![UPoly::zero(); rank] }
    }

    pub fn from_coords(coords: Vec<UPoly>) -> Self {
        CohClass { coords }
    }

    pub fn coords(&self) -> &[UPoly] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &UPoly {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(UPoly::is_zero)
    }

    pub fn add(&self, other: &CohClass) -> CohClass {
        CohClass { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &CohClass) -> CohClass {
        CohClass { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, p: &UPoly) -> CohClass {
        CohClass { coords: self.coords.iter().map(|a| a.mul(p)).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohRing {
    shelled: ShelledFan,
    /// Closure cone of each basis element.
    basis: Vec<RaySet>,
    /// Normal forms of squarefree cone monomials, keyed by cone.
    cone_nf: BTreeMap<RaySet, Vec<Scalar>>,
    /// `mult[a][b]`: coordinates of the product of basis elements.
    mult: Vec<Vec<Vec<Scalar>>>,
}

impl CohRing {
    pub fn shelled(&self) -> &ShelledFan {
        &self.shelled
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.shelled.fan().dim()
    }

    /// Cohomological degree (halved) of basis element `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.basis[i].len()
    }

    /// Ranks of the graded pieces, degree 0 first.
    pub fn graded_ranks(&self) -> Vec<usize> {
        let mut r = alloc::vec![0; self.dim() + 1];
        for b in &self.basis {
            r[b.len()] += 1;
        }
        r
    }

    /// The class `[V_γ]` for a cone `γ` (zero if `γ` is not a cone).
    pub fn cone_class(&self, gamma: &[usize]) -> CohClass {
        let mut g = gamma.to_vec();
        g.sort_unstable();
        match self.cone_nf.get(&g) {
            Some(v) => lift(v),
            None => CohClass::zero(self.rank()),
        }
    }

    /// The divisor class `X_τ` of ray `tau`.
    pub fn ray_class(&self, tau: usize) -> CohClass {
        self.cone_class(&[tau])
    }

    pub fn basis_class(&self, i: usize) -> CohClass {
        let mut c = CohClass::zero(self.rank());
        c.coords[i] = UPoly::one();
        c
    }

    pub fn one(&self) -> CohClass {
        self.cone_class(&[])
    }

    pub fn mul(&self, a: &CohClass, b: &CohClass) -> CohClass {
        let n = self.rank();
        let mut out = alloc::vec![UPoly::zero(); n];
        for i in 0..n {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b.coords[j].is_zero() {
                    continue;
                }
                let ab = a.coords[i].mul(&b.coords[j]);
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].add(&ab.scale(c));
                    }
                }
            }
        }
        CohClass { coords: out }
    }

    /// `f(x)` for a truncated power series `f` with `f[k]` the coefficient
    /// of `x^k`; `x` must be nilpotent (no degree-0 part).
    fn apply_series(&self, f: &[Scalar], x: &CohClass) -> CohClass {
        let mut out = CohClass::zero(self.rank());
        let mut pw = self.one();
        for c in f {
            if !c.is_zero() {
                out = out.add(&pw.scale(&UPoly::constant(c.clone())));
            }
            pw = self.mul(&pw, x);
            if pw.is_zero() {
                break;
            }
        }
        out
    }

    /// Writes `target` in terms of `basis` with coefficients in `Q(h)`; the
    /// result is certified by multiplying back.
    pub fn expand_in_basis(&self, target: &CohClass, basis: &[CohClass]) -> Result<Vec<URat>> {
        let n = self.rank();
        let cols = basis.len();
        let mut m: Vec<Vec<URat>> = (0..n)
            .map(|r| {
                let mut row: Vec<URat> = basis.iter().map(|b| URat::from_poly(b.coords[r].clone())).collect();
                row.push(URat::from_poly(target.coords[r].clone()));
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
                return Err(Error::SingularBasis);
            };
            m.swap(row, p);
            let inv = m[row][col].inv()?;
            for x in m[row].iter_mut() {
                *x = x.mul(&inv);
            }
            let pivot = m[row].clone();
            for (r, line) in m.iter_mut().enumerate() {
                if r != row && !line[col].is_zero() {
                    let f = line[col].clone();
                    for (x, p) in line[col..=cols].iter_mut().zip(&pivot[col..=cols]) {
                        *x = x.sub(&p.mul(&f));
                    }
                }
            }
            pivots.push(row);
            row += 1;
        }
        if (row..n).any(|r| !m[r][cols].is_zero()) {
            return Err(Error::SingularBasis);
        }
        let coeffs: Vec<URat> = pivots.iter().map(|&r| m[r][cols].clone()).collect();
        for r in 0..n {
            let mut acc = URat::zero();
            for (c, b) in coeffs.iter().zip(basis) {
                acc = acc.add(&c.mul(&URat::from_poly(b.coords[r].clone())));
            }
            if acc != URat::from_poly(target.coords[r].clone()) {
                return Err(Error::SingularBasis);
            }
        }
        Ok(coeffs)
    }
}

fn lift(v: &[Scalar]) -> CohClass {
    CohClass { coords: v.iter().map(|c| UPoly::constant(c.clone())).collect() }
}

/// Builds the ring degree by degree from squarefree cone monomials, using
/// the linear relations to rewrite repeated variables.
pub fn build_ring(shelled: &ShelledFan) -> Result<CohRing> {
    let fan = shelled.fan();
    let m = fan.dim();
    let r = shelled.num_cells();
    let basis: Vec<RaySet> = (0..r).map(|i| shelled.cell_closure(i).clone()).collect();
    let mut builder = Builder { shelled, basis: &basis, cone_nf: BTreeMap::new(), memo: BTreeMap::new() };
    for d in 0..=m {
        builder.degree(d)?;
    }
    let cone_nf = builder.cone_nf;
    let mut ring = CohRing { shelled: shelled.clone(), basis: basis.clone(), cone_nf, mult: Vec::new() };
    let mut mult = alloc::vec![alloc::vec![Vec::new(); r]; r];
    let mut b2 = Builder { shelled, basis: &basis, cone_nf: ring.cone_nf.clone(), memo: BTreeMap::new() };
    for a in 0..r {
        for b in 0..r {
            let mut e = alloc::vec![0u32; fan.rays().len()];
            for &x in basis[a].iter().chain(basis[b].iter()) {
                e[x] += 1;
            }
            mult[a][b] = b2.reduce(&e);
        }
    }
    ring.mult = mult;
    Ok(ring)
}

struct Builder<'a> {
    shelled: &'a ShelledFan,
    basis: &'a [RaySet],
    cone_nf: BTreeMap<RaySet, Vec<Scalar>>,
    memo: BTreeMap<Vec<u32>, Vec<Scalar>>,
}

impl Builder<'_> {
    fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Normal forms of all degree-`d` cone monomials.
    fn degree(&mut self, d: usize) -> Result<()> {
        let fan = self.shelled.fan();
        let n = self.rank();
        let cones: Vec<RaySet> = fan.cones().iter().filter(|c| c.len() == d).cloned().collect();
        let basis_here: Vec<usize> = (0..n).filter(|&i| self.basis[i].len() == d).collect();
        // Non-basis cones first so that elimination pivots on them.
        let mut cols: Vec<RaySet> =
            cones.iter().filter(|c| !basis_here.iter().any(|&i| &self.basis[i] == *c)).cloned().collect();
        let free_start = cols.len();
        cols.extend(basis_here.iter().map(|&i| self.basis[i].clone()));
        if cols.len() != cones.len() {
            return Err(Error::RankMismatch { degree: d, rank: cones.len(), cells: basis_here.len() });
        }
        let col_of: BTreeMap<&RaySet, usize> = cols.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        if d > 0 {
            let lower: Vec<RaySet> = fan.cones().iter().filter(|c| c.len() == d - 1).cloned().collect();
            for delta in &lower {
                for k in 0..fan.dim() {
                    let mut row = alloc::vec![Scalar::zero(); cols.len()];
                    for (i, ray) in fan.rays().iter().enumerate() {
                        if ray[k] == 0 {
                            continue;
                        }
                        let w = int(ray[k]);
                        for (c, x) in self.squarefree_expansion(delta, i)? {
                            let idx = col_of[&c];
                            row[idx] += &w * x;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let pivots = rref(&mut rows, cols.len());
        let rank_here = cols.len() - pivots.len();
        if rank_here != basis_here.len() || pivots.iter().any(|&(_, c)| c >= free_start) {
            return Err(Error::RankMismatch { degree: d, rank: rank_here, cells: basis_here.len() });
        }
        for (ci, c) in cols.iter().enumerate() {
            let mut v = alloc::vec![Scalar::zero(); n];
            if ci >= free_start {
                v[basis_here[ci - free_start]] = Scalar::one();
            } else {
                let &(ri, _) = pivots.iter().find(|&&(_, pc)| pc == ci).expect("pivot column");
                for (fi, &b) in basis_here.iter().enumerate() {
                    v[b] = -rows[ri][free_start + fi].clone();
                }
            }
            self.cone_nf.insert(c.clone(), v);
        }
        Ok(())
    }

    /// `X_i * X^δ` as a combination of squarefree cone monomials of degree
    /// `|δ| + 1`.
    fn squarefree_expansion(&self, delta: &RaySet, i: usize) -> Result<Vec<(RaySet, Scalar)>> {
        let fan = self.shelled.fan();
        if !delta.contains(&i) {
            let mut c = delta.clone();
            c.push(i);
            c.sort_unstable();
            return Ok(if fan.is_cone(&c) { alloc::vec![(c, Scalar::one())] } else { Vec::new() });
        }
        let (sigma, u) = self.dual_form(delta, i)?;
        let mut out = Vec::new();
        for (k, uk) in u.into_iter().enumerate() {
            if uk.is_zero() || sigma.contains(&k) {
                continue;
            }
            let mut c = delta.clone();
            c.push(k);
            c.sort_unstable();
            if fan.is_cone(&c) {
                out.push((c, -uk));
            }
        }
        Ok(out)
    }

    /// A maximal cone `σ ⊇ support` and the values `u(τ_k)` of the linear
    /// form dual to ray `i` in the basis of `σ`, so that
    /// `X_i = -Σ_{k∉σ} u(τ_k) X_k` in `H^*`.
    fn dual_form(&self, support: &[usize], i: usize) -> Result<(RaySet, Vec<Scalar>)> {
        let fan = self.shelled.fan();
        let sigma = fan
            .maximal_cones()
            .into_iter()
            .find(|c| c.len() == fan.dim() && is_subset(support, c))
            .ok_or_else(|| Error::InvalidFan("cone not contained in a full-dimensional cone".into()))?;
        let basis: Vec<&[i64]> = sigma.iter().map(|&j| fan.ray(j)).collect();
        let pos = sigma.iter().position(|&j| j == i).expect("ray in cone");
        let mut u = Vec::with_capacity(fan.rays().len());
        for ray in fan.rays() {
            u.push(coordinates(&basis, ray)?[pos].clone());
        }
        Ok((sigma, u))
    }

    /// Normal form of an arbitrary monomial given by exponents.
    fn reduce(&mut self, e: &[u32]) -> Vec<Scalar> {
        if let Some(v) = self.memo.get(e) {
            return v.clone();
        }
        let fan = self.shelled.fan();
        let n = self.rank();
        let support: RaySet = (0..e.len()).filter(|&i| e[i] > 0).collect();
        let out = if !fan.is_cone(&support) {
            alloc::vec![Scalar::zero(); n]
        } else if let Some(i) = (0..e.len()).find(|&i| e[i] > 1) {
            let (sigma, u) = self.dual_form(&support, i).expect("smooth complete fan");
            let mut acc = alloc::vec![Scalar::zero(); n];
            for (k, uk) in u.into_iter().enumerate() {
                if uk.is_zero() || sigma.contains(&k) {
                    continue;
                }
                let mut e2 = e.to_vec();
                e2[i] -= 1;
                e2[k] += 1;
                let v = self.reduce(&e2);
                for (a, b) in acc.iter_mut().zip(v) {
                    *a -= &uk * b;
                }
            }
            acc
        } else {
            self.cone_nf[&support].clone()
        };
        self.memo.insert(e.to_vec(), out.clone());
        out
    }
}

/// Reduced row echelon form in place; returns `(row, pivot column)` pairs.
fn rref(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, line) in rows.iter_mut().enumerate() {
            if i != r && !line[c].is_zero() {
                let f = line[c].clone();
                for (x, p) in line[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// `csm(Ω_{i+1}) = Σ_{γ ∈ cell} h^{m - dim γ} [V_γ]`.
pub fn csm_cell(ring: &CohRing, i: usize) -> CohClass {
    let m = ring.dim();
    ring.shelled.cell(i).iter().fold(CohClass::zero(ring.rank()), |acc, g| {
        acc.add(&ring.cone_class(g).scale(&UPoly::monomial(Scalar::one(), m - g.len())))
    })
}

fn factorial(k: usize) -> Scalar {
    (1..=k as i64).fold(Scalar::one(), |acc, x| acc * int(x))
}

/// Coefficients of `(1 - e^{-x})/x` up to `x^n`.
fn inv_todd_series(n: usize) -> Vec<Scalar> {
    (0..=n)
        .map(|k| {
            let s = factorial(k + 1).recip();
            if k % 2 == 0 {
                s
            } else {
                -s
            }
        })
        .collect()
}

/// Coefficients of `x/(e^x - 1) = e^{-x} x/(1 - e^{-x})` up to `x^n`.
fn bernoulli_series(n: usize) -> Vec<Scalar> {
    // Inverse of (e^x - 1)/x = Σ x^k/(k+1)!.
    let a: Vec<Scalar> = (0..=n).map(|k| factorial(k + 1).recip()).collect();
    let mut b = alloc::vec![Scalar::zero(); n + 1];
    b[0] = Scalar::one();
    for k in 1..=n {
        let mut s = Scalar::zero();
        for j in 1..=k {
            s += &a[j] * &b[k - j];
        }
        b[k] = -s;
    }
    b
}

/// Chern character of `ι_{γ*} ω_γ` by Grothendieck–Riemann–Roch:
/// `[V_γ] · Π_{τ adjacent} X_τ/(e^{X_τ} - 1) · Π_{all τ} (1 - e^{-X_τ})/X_τ`.
pub fn ch_pushforward_canonical(ring: &CohRing, gamma: &[usize]) -> CohClass {
    let fan = ring.shelled.fan();
    let m = ring.dim();
    let bern = bernoulli_series(m);
    let itodd = inv_todd_series(m);
    let mut out = ring.cone_class(gamma);
    let mut adj: Vec<usize> = Vec::new();
    for c in fan.cones_containing(gamma) {
        if c.len() == gamma.len() + 1 {
            adj.extend(c.iter().copied().filter(|r| !gamma.contains(r)));
        }
    }
    for t in adj {
        out = ring.mul(&out, &ring.apply_series(&bern, &ring.ray_class(t)));
    }
    for t in 0..fan.rays().len() {
        out = ring.mul(&out, &ring.apply_series(&itodd, &ring.ray_class(t)));
    }
    out
}

/// Whether the shelled fan is one of the projective-space fans, where the
/// motivic Chern character formula is established.
pub fn is_projective(shelled: &ShelledFan) -> bool {
    let fan = shelled.fan();
    let m = fan.dim();
    if fan.rays().len() != m + 1 || fan.maximal_cones().len() != m + 1 {
        return false;
    }
    let sum: Vec<i64> = (0..m).map(|k| fan.rays().iter().map(|r| r[k]).sum()).collect();
    sum.iter().all(|&s| s == 0)
}

/// `ch(mC(Ω_{i+1})) = Σ_{γ ∈ cell} (1+h)^{m - dim γ} ch(ι_{γ*} ω_γ)`.
///
/// Only projective spaces are supported unless `experimental` is set.
pub fn mc_chern_character_cell(ring: &CohRing, i: usize, experimental: bool) -> Result<CohClass> {
    if !experimental && !is_projective(&ring.shelled) {
        return Err(Error::UnsupportedSpace);
    }
    let m = ring.dim();
    let one_h = UPoly::from_ints(&[1, 1]);
    let mut out = CohClass::zero(ring.rank());
    for g in ring.shelled.cell(i) {
        let w = one_h.pow((m - g.len()) as u32);
        out = out.add(&ch_pushforward_canonical(ring, g).scale(&w));
    }
    Ok(out)
}

/// Which family of cell classes to use as a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    Csm,
    Mc,
}

/// Cell classes of the given kind, in cell order.
pub fn cell_classes(ring: &CohRing, kind: ClassKind, experimental: bool) -> Result<Vec<CohClass>> {
    (0..ring.rank())
        .map(|i| match kind {
            ClassKind::Csm => Ok(csm_cell(ring, i)),
            ClassKind::Mc => mc_chern_character_cell(ring, i, experimental),
        })
        .collect()
}

/// Full table of structure constants of the cell-class basis; every
/// constant is asserted to be a polynomial in `h`.
pub fn structure_constants(ring: &CohRing, kind: ClassKind, experimental: bool) -> Result<SCTable> {
    let classes = cell_classes(ring, kind, experimental)?;
    let r = ring.rank();
    let theory = match kind {
        ClassKind::Csm => Theory::H,
        ClassKind::Mc => Theory::K,
    };
    let mut table = SCTable::new(theory, ring.shelled.cell_names().to_vec());
    for i in 0..r {
        for j in i..r {
            let prod = ring.mul(&classes[i], &classes[j]);
            let coeffs = ring.expand_in_basis(&prod, &classes)?;
            for (k, c) in coeffs.into_iter().enumerate() {
                let p = c.as_poly().ok_or_else(|| {
                    Error::NonPolynomialResult(alloc::format!("coefficient {k} of product ({i},{j}) is {c}"))
                })?;
                table.set(i, j, k, p.to_poly(crate::exact::Var::H));
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Poly;
    use crate::fan::{builtin_space, Space};

    fn hp(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn p2_ring() {
        let ring = build_ring(&builtin_space(Space::Projective(2)).unwrap()).unwrap();
        assert_eq!(ring.graded_ranks(), [1, 1, 1]);
        let h1 = ring.ray_class(0);
        for t in 1..3 {
            assert_eq!(ring.ray_class(t), h1);
        }
        let h3 = ring.mul(&ring.mul(&h1, &h1), &h1);
        assert!(h3.is_zero());
    }

    #[test]
    fn hirzebruch_relations() {
        let ring = build_ring(&builtin_space(Space::Hirzebruch).unwrap()).unwrap();
        assert_eq!(ring.ray_class(1), ring.ray_class(3));
        assert_eq!(ring.ray_class(0), ring.ray_class(2).add(&ring.ray_class(3)));
        let c2 = csm_cell(&ring, 1);
        let expect = ring.mul(&ring.ray_class(2), &ring.ray_class(3)).add(&ring.ray_class(2).scale(&UPoly::h()));
        assert_eq!(c2, expect);
    }

    #[test]
    fn a2_ranks() {
        let ring = build_ring(&builtin_space(Space::A2Permutohedral).unwrap()).unwrap();
        assert_eq!(ring.graded_ranks(), [1, 4, 1]);
    }

    #[test]
    fn projective_csm_cells() {
        for m in 1..=4usize {
            let ring = build_ring(&builtin_space(Space::Projective(m)).unwrap()).unwrap();
            let hcl = ring.ray_class(0);
            let hh = CohClass::from_coords(ring.one().coords().to_vec()).scale(&UPoly::h()).add(&hcl);
            for i in 1..=m + 1 {
                let mut expect = ring.one();
                for _ in 0..(m + 1 - i) {
                    expect = ring.mul(&expect, &hcl);
                }
                for _ in 0..(i - 1) {
                    expect = ring.mul(&expect, &hh);
                }
                assert_eq!(csm_cell(&ring, i - 1), expect);
            }
        }
    }

    #[test]
    fn p1_mc_cells() {
        let ring = build_ring(&builtin_space(Space::Projective(1)).unwrap()).unwrap();
        // basis 0 is the point class H, basis 1 is 1.
        let c1 = mc_chern_character_cell(&ring, 0, false).unwrap();
        assert_eq!(c1.coords(), &[hp(&[1]), hp(&[])]);
        let c2 = mc_chern_character_cell(&ring, 1, false).unwrap();
        assert_eq!(c2.coords(), &[hp(&[-1, -2]), hp(&[1, 1])]);
    }

    #[test]
    fn expansion_examples() {
        let ring = build_ring(&builtin_space(Space::Projective(1)).unwrap()).unwrap();
        let basis = cell_classes(&ring, ClassKind::Csm, false).unwrap();
        let sq = ring.mul(&basis[1], &basis[1]);
        let c = ring.expand_in_basis(&sq, &basis).unwrap();
        assert_eq!(c, [URat::from_poly(UPoly::h()), URat::from_poly(UPoly::h())]);
        let mc = cell_classes(&ring, ClassKind::Mc, false).unwrap();
        let sq = ring.mul(&mc[1], &mc[1]);
        let c = ring.expand_in_basis(&sq, &mc).unwrap();
        assert_eq!(c, [URat::from_poly(hp(&[-1, -3, -2])), URat::from_poly(hp(&[1, 1]))]);
        let unit = ring.expand_in_basis(&mc[0], &mc).unwrap();
        assert_eq!(unit, [URat::one(), URat::zero()]);
    }

    #[test]
    fn surface_constants() {
        let h2 = Poly::h().pow(2);
        let ring = build_ring(&builtin_space(Space::Hirzebruch).unwrap()).unwrap();
        let t = structure_constants(&ring, ClassKind::Csm, false).unwrap();
        assert_eq!(t.product(1, 1), [(0, h2.neg())]);
        assert_eq!(t.product(3, 3), [(0, h2.clone()), (1, h2.clone()), (2, h2.scale(&int(2))), (3, h2.clone())]);
        let a2 = builtin_space(Space::A2Permutohedral).unwrap();
        let ring = build_ring(&a2).unwrap();
        let t = structure_constants(&ring, ClassKind::Csm, false).unwrap();
        let id = a2.cell_index("id").unwrap();
        let got: Vec<(&str, Poly)> = t.product(id, id).into_iter().map(|(k, v)| (a2.cell_name(k), v)).collect();
        let mut expect =
            alloc::vec![("(1,3)", h2.neg()), ("(1,3,2)", h2.clone()), ("(1,2,3)", h2.clone()), ("id", h2.clone()),];
        expect.sort_by_key(|(n, _)| a2.cell_index(n).unwrap());
        assert_eq!(got, expect);
    }

    #[test]
    fn mc_outside_projective_is_flagged() {
        let ring = build_ring(&builtin_space(Space::Hirzebruch).unwrap()).unwrap();
        assert_eq!(mc_chern_character_cell(&ring, 0, false).unwrap_err(), Error::UnsupportedSpace);
    }
}
