//! Smooth fans, stars, shellings and the CW cells they induce.
//!
//! Rays are indexed from 0 internally; a cone is the sorted list of its ray
//! indices, the zero cone being the empty list. Only simplicial fans are
//! supported, so every subset of a cone's rays spans a face.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Scalar};

/// Sorted ray indices of a cone.
pub type RaySet = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<RaySet>,
    inserted_faces: usize,
}

impl Fan {
    /// Builds a fan from a list of cones, inserting any missing faces.
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, cones: Vec<RaySet>) -> Result<Fan> {
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::InvalidFan(alloc::format!(
                    "ray {} has {} coordinates, expected {dim}",
                    i + 1,
                    r.len()
                )));
            }
        }
        let given: BTreeSet<RaySet> = cones
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        for c in &given {
            if let Some(&i) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidFan(alloc::format!("cone refers to ray {} of {}", i + 1, rays.len())));
            }
        }
        let mut all: BTreeSet<RaySet> = BTreeSet::new();
        for c in &given {
            for mask in 0u64..(1u64 << c.len()) {
                let face: RaySet = c.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &r)| r).collect();
                all.insert(face);
            }
        }
        all.insert(Vec::new());
        let inserted_faces = all.len() - given.len() - usize::from(!given.contains(&Vec::new()));
        let mut cones: Vec<RaySet> = all.into_iter().collect();
        cones.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(Fan { dim, rays, cones, inserted_faces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &[i64] {
        &self.rays[i]
    }

    /// All cones, sorted by dimension and then lexicographically.
    pub fn cones(&self) -> &[RaySet] {
        &self.cones
    }

    /// Number of faces added while closing the input under faces.
    pub fn inserted_faces(&self) -> usize {
        self.inserted_faces
    }

    pub fn is_cone(&self, rays: &[usize]) -> bool {
        self.cones.binary_search_by(|c| c.len().cmp(&rays.len()).then_with(|| c.as_slice().cmp(rays))).is_ok()
    }

    /// Cones not properly contained in another cone, in cone order.
    pub fn maximal_cones(&self) -> Vec<RaySet> {
        self.cones
            .iter()
            .filter(|c| !self.cones.iter().any(|d| d.len() > c.len() && is_subset(c, d)))
            .cloned()
            .collect()
    }

    /// Cones containing `gamma`.
    pub fn cones_containing<'a>(&'a self, gamma: &'a [usize]) -> impl Iterator<Item = &'a RaySet> + 'a {
        self.cones.iter().filter(move |c| is_subset(gamma, c))
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn intersect(a: &[usize], b: &[usize]) -> RaySet {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, x| g.gcd(x))
}

/// Determinant of a small integer matrix by fraction-free elimination.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

/// gcd of the maximal minors of the given vectors (as rows); 1 exactly when
/// they extend to a lattice basis.
fn minors_gcd(vecs: &[&[i64]], dim: usize) -> i128 {
    let k = vecs.len();
    if k == 0 {
        return 1;
    }
    let mut g: i128 = 0;
    for cols in subsets(dim, k) {
        let m: Vec<Vec<i128>> = vecs.iter().map(|v| cols.iter().map(|&c| v[c] as i128).collect()).collect();
        g = g.gcd(&det(m));
    }
    g
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Outcome of [`validate_fan`]; never aborts, lists every failure found.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub primitive: bool,
    pub smooth: bool,
    pub complete: bool,
    pub face_closed: bool,
    pub failures: Vec<String>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.primitive && self.smooth && self.complete && self.face_closed
    }
}

/// Checks primitivity, unimodularity of maximal cones, face closure and
/// completeness (every wall lies in exactly two maximal cones).
pub fn validate_fan(fan: &Fan) -> ValidationReport {
    let mut rep =
        ValidationReport { primitive: true, smooth: true, complete: true, face_closed: true, ..Default::default() };
    let one_based = |c: &[usize]| -> String {
        let v: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
        alloc::format!("{{{}}}", v.join(","))
    };
    for (i, r) in fan.rays.iter().enumerate() {
        if gcd_all(r) != 1 {
            rep.primitive = false;
            rep.failures.push(alloc::format!("ray {} = {r:?} is not primitive", i + 1));
        }
        if let Some(j) = fan.rays[..i].iter().position(|s| s == r) {
            rep.primitive = false;
            rep.failures.push(alloc::format!("rays {} and {} coincide", j + 1, i + 1));
        }
    }
    if fan.inserted_faces > 0 {
        rep.warnings.push(alloc::format!("inserted {} missing faces", fan.inserted_faces));
    }
    for c in &fan.cones {
        for r in c {
            let face: RaySet = c.iter().copied().filter(|x| x != r).collect();
            if !fan.is_cone(&face) {
                rep.face_closed = false;
                rep.failures.push(alloc::format!("face {} of cone {} missing", one_based(&face), one_based(c)));
            }
        }
    }
    let maximal = fan.maximal_cones();
    for c in &maximal {
        let vecs: Vec<&[i64]> = c.iter().map(|&i| fan.ray(i)).collect();
        if c.len() > fan.dim || minors_gcd(&vecs, fan.dim) != 1 {
            rep.smooth = false;
            rep.failures.push(alloc::format!("maximal cone {} is not unimodular", one_based(c)));
        }
        if c.len() != fan.dim {
            rep.complete = false;
            rep.failures.push(alloc::format!("maximal cone {} is not full-dimensional", one_based(c)));
        }
    }
    if rep.complete {
        let mut walls: BTreeSet<RaySet> = BTreeSet::new();
        for c in &maximal {
            for r in c {
                walls.insert(c.iter().copied().filter(|x| x != r).collect());
            }
        }
        for w in walls {
            let k = maximal.iter().filter(|c| is_subset(&w, c)).count();
            if k != 2 {
                rep.complete = false;
                rep.failures.push(alloc::format!("wall {} lies in {k} maximal cones", one_based(&w)));
            }
        }
    }
    rep
}

/// Solves `x * basis = v` over the rationals for a square invertible basis
/// given as rows.
pub(crate) fn coordinates(basis: &[&[i64]], v: &[i64]) -> Result<Vec<Scalar>> {
    let n = basis.len();
    // Augmented system A^T x = v with A the matrix of rows.
    let mut m: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            let mut row: Vec<Scalar> = (0..n).map(|c| int(basis[c][r])).collect();
            row.push(int(v[r]));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::SingularBasis)?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[col].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != col && !line[col].is_zero() {
                let f = line[col].clone();
                for (x, p) in line[col..=n].iter_mut().zip(&pivot[col..=n]) {
                    *x -= p * &f;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Star of `gamma`: the fan of cones containing `gamma`, projected to the
/// quotient lattice. Ray `k` of the result corresponds to the `k`-th ray
/// (in index order) adjacent to `gamma`.
pub fn star(fan: &Fan, gamma: &[usize]) -> Result<Fan> {
    let mut gamma = gamma.to_vec();
    gamma.sort_unstable();
    if !fan.is_cone(&gamma) {
        return Err(Error::ConeNotInFan);
    }
    let (fan_star, _) = star_with_labels(fan, &gamma)?;
    Ok(fan_star)
}

/// Star together with the original index of each of its rays.
pub fn star_with_labels(fan: &Fan, gamma: &[usize]) -> Result<(Fan, Vec<usize>)> {
    if !fan.is_cone(gamma) {
        return Err(Error::ConeNotInFan);
    }
    if gamma.is_empty() {
        return Ok((fan.clone(), (0..fan.rays.len()).collect()));
    }
    let sigma = fan
        .maximal_cones()
        .into_iter()
        .find(|c| c.len() == fan.dim && is_subset(gamma, c))
        .ok_or_else(|| Error::InvalidFan("no full-dimensional cone contains the star's cone".into()))?;
    let basis: Vec<&[i64]> = sigma.iter().map(|&i| fan.ray(i)).collect();
    let keep: Vec<usize> = (0..sigma.len()).filter(|k| !gamma.contains(&sigma[*k])).collect();
    let above: Vec<&RaySet> = fan.cones_containing(gamma).collect();
    let labels: Vec<usize> = {
        let mut s: BTreeSet<usize> = BTreeSet::new();
        for c in &above {
            s.extend(c.iter().copied().filter(|r| !gamma.contains(r)));
        }
        s.into_iter().collect()
    };
    let mut rays = Vec::with_capacity(labels.len());
    for &r in &labels {
        let x = coordinates(&basis, fan.ray(r))?;
        let mut den = num_bigint::BigInt::one();
        for k in &keep {
            den = den.lcm(x[*k].denom());
        }
        let mut v: Vec<i64> = keep
            .iter()
            .map(|k| (&x[*k] * Scalar::from_integer(den.clone())).to_integer().to_i64().expect("small coordinates"))
            .collect();
        let g = gcd_all(&v);
        if g == 0 {
            return Err(Error::InvalidFan("ray projects to zero in the quotient".into()));
        }
        v.iter_mut().for_each(|c| *c /= g);
        rays.push(v);
    }
    let cones: Vec<RaySet> = above
        .iter()
        .map(|c| {
            c.iter()
                .filter(|r| !gamma.contains(r))
                .map(|r| labels.iter().position(|l| l == r).expect("adjacent ray"))
                .collect()
        })
        .collect();
    Ok((Fan::new(fan.dim - gamma.len(), rays, cones)?, labels))
}

/// Fan together with a shelling order, its shelling cones and cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShelledFan {
    fan: Fan,
    order: Vec<RaySet>,
    shelling: Vec<RaySet>,
    cells: Vec<Vec<RaySet>>,
    cell_names: Vec<String>,
}

impl ShelledFan {
    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    /// Maximal cones `σ_1..σ_r` in shelling order.
    pub fn order(&self) -> &[RaySet] {
        &self.order
    }

    /// Shelling cones `s_1..s_r`.
    pub fn shelling(&self) -> &[RaySet] {
        &self.shelling
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    /// Cones whose orbits make up cell `Ω_{i+1}`.
    pub fn cell(&self, i: usize) -> &[RaySet] {
        &self.cells[i]
    }

    pub fn cells(&self) -> &[Vec<RaySet>] {
        &self.cells
    }

    /// Cone `γ` with `closure(Ω_{i+1}) = V_γ`.
    pub fn cell_closure(&self, i: usize) -> &RaySet {
        &self.shelling[self.shelling.len() - 1 - i]
    }

    /// Complex dimension of cell `Ω_{i+1}`.
    pub fn cell_dim(&self, i: usize) -> usize {
        self.fan.dim - self.cell_closure(i).len()
    }

    pub fn cell_name(&self, i: usize) -> &str {
        &self.cell_names[i]
    }

    pub fn cell_names(&self) -> &[String] {
        &self.cell_names
    }

    /// Replaces the default labels `1..r`.
    pub fn with_cell_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.cells.len() {
            return Err(Error::InvalidInput("one name per cell required".into()));
        }
        self.cell_names = names;
        Ok(self)
    }

    pub fn cell_index(&self, name: &str) -> Option<usize> {
        self.cell_names.iter().position(|n| n == name)
    }
}

/// Shelling induced by an explicit order of the maximal cones, given as
/// indices into [`Fan::maximal_cones`].
pub fn shell(fan: &Fan, order: &[usize]) -> Result<ShelledFan> {
    let maximal = fan.maximal_cones();
    let r = maximal.len();
    let mut seen = alloc::vec![false; r];
    if order.len() != r {
        return Err(Error::NotAPermutation);
    }
    for &i in order {
        if i >= r || seen[i] {
            return Err(Error::NotAPermutation);
        }
        seen[i] = true;
    }
    let sigma: Vec<RaySet> = order.iter().map(|&i| maximal[i].clone()).collect();
    let m = fan.dim;
    let mut shelling = Vec::with_capacity(r);
    for i in 0..r {
        if i == r - 1 {
            shelling.push(sigma[i].clone());
            continue;
        }
        let mut s = sigma[i].clone();
        for j in i + 1..r {
            let w = intersect(&sigma[i], &sigma[j]);
            if w.len() + 1 == m {
                s = intersect(&s, &w);
            }
        }
        if !fan.is_cone(&s) {
            return Err(Error::DegenerateShelling(i + 1));
        }
        shelling.push(s);
    }
    let mut assigned: BTreeSet<RaySet> = BTreeSet::new();
    let mut cells = Vec::with_capacity(r);
    for i in 0..r {
        let s = &shelling[r - 1 - i];
        let cell: Vec<RaySet> = fan.cones_containing(s).filter(|c| !assigned.contains(*c)).cloned().collect();
        if cell.is_empty() {
            return Err(Error::DegenerateShelling(r - i));
        }
        assigned.extend(cell.iter().cloned());
        cells.push(cell);
    }
    if assigned.len() != fan.cones.len() {
        return Err(Error::DegenerateShelling(r));
    }
    let cell_names = (1..=r).map(|i| i.to_string()).collect();
    Ok(ShelledFan { fan: fan.clone(), order: sigma, shelling, cells, cell_names })
}

/// Built-in toric spaces with their standard shellings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Projective(usize),
    Hirzebruch,
    A2Permutohedral,
}

impl Space {
    pub fn parse(name: &str, m: Option<usize>) -> Result<Space> {
        match name {
            "projective" | "P" => match m {
                Some(m) if m >= 1 => Ok(Space::Projective(m)),
                _ => Err(Error::InvalidInput("projective space needs m >= 1".into())),
            },
            "hirzebruch" => Ok(Space::Hirzebruch),
            "a2" | "a2_permutohedral" => Ok(Space::A2Permutohedral),
            other => Err(Error::UnknownSpace(other.into())),
        }
    }
}

/// Names of the `A_2` cells, `Ω_1..Ω_6`, by the Weyl group element of the
/// shelling cone that closes them.
pub const A2_CELL_NAMES: [&str; 6] = ["(1,3)", "(1,3,2)", "(2,3)", "(1,2,3)", "(1,2)", "id"];

pub fn builtin_space(space: Space) -> Result<ShelledFan> {
    match space {
        Space::Projective(m) => {
            if m == 0 {
                return Err(Error::InvalidInput("projective space needs m >= 1".into()));
            }
            let mut rays: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| i64::from(i == j)).collect()).collect();
            rays.push(alloc::vec![-1; m]);
            let max: Vec<RaySet> = (0..=m).map(|i| (0..=m).filter(|&j| j != i).collect()).collect();
            let fan = Fan::new(m, rays, max.clone())?;
            let maximal = fan.maximal_cones();
            let order: Vec<usize> = max.iter().map(|c| maximal.iter().position(|d| d == c).unwrap()).collect();
            shell(&fan, &order)
        }
        Space::Hirzebruch => {
            let rays = alloc::vec![alloc::vec![1, 0], alloc::vec![0, 1], alloc::vec![-1, 0], alloc::vec![-1, -1]];
            let max = alloc::vec![alloc::vec![0, 3], alloc::vec![0, 1], alloc::vec![2, 3], alloc::vec![1, 2]];
            ordered(2, rays, max)
        }
        Space::A2Permutohedral => {
            let rays = alloc::vec![
                alloc::vec![1, 0],
                alloc::vec![0, 1],
                alloc::vec![-1, 1],
                alloc::vec![-1, 0],
                alloc::vec![0, -1],
                alloc::vec![1, -1],
            ];
            // id < (1,2) < (1,2,3) < (2,3) < (1,3,2) < (1,3)
            let max = alloc::vec![
                alloc::vec![0, 1],
                alloc::vec![1, 2],
                alloc::vec![2, 3],
                alloc::vec![0, 5],
                alloc::vec![4, 5],
                alloc::vec![3, 4],
            ];
            ordered(2, rays, max)?.with_cell_names(A2_CELL_NAMES.iter().map(|s| s.to_string()).collect())
        }
    }
}

/// Shells a fan whose maximal cones are listed in shelling order.
pub fn ordered(dim: usize, rays: Vec<Vec<i64>>, max: Vec<RaySet>) -> Result<ShelledFan> {
    let fan = Fan::new(dim, rays, max.clone())?;
    let maximal = fan.maximal_cones();
    let mut order = Vec::with_capacity(max.len());
    for c in &max {
        let mut c = c.clone();
        c.sort_unstable();
        order.push(maximal.iter().position(|d| *d == c).ok_or(Error::NotAPermutation)?);
    }
    shell(&fan, &order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial;

    #[test]
    fn p2_validates() {
        let s = builtin_space(Space::Projective(2)).unwrap();
        assert!(validate_fan(s.fan()).passes());
        assert_eq!(s.fan().maximal_cones().len(), 3);
        let dims: Vec<usize> = (0..3).map(|i| s.cell_dim(i)).collect();
        assert_eq!(dims, [0, 1, 2]);
    }

    #[test]
    fn non_unimodular_cone_fails() {
        let fan =
            Fan::new(2, alloc::vec![alloc::vec![1, 0], alloc::vec![1, 2]], alloc::vec![alloc::vec![0, 1]]).unwrap();
        let rep = validate_fan(&fan);
        assert!(!rep.smooth);
        assert!(!rep.passes());
    }

    #[test]
    fn hirzebruch_shelling() {
        let s = builtin_space(Space::Hirzebruch).unwrap();
        assert!(validate_fan(s.fan()).passes());
        let expect: [RaySet; 4] = [alloc::vec![], alloc::vec![1], alloc::vec![2], alloc::vec![1, 2]];
        assert_eq!(s.shelling(), &expect);
        assert_eq!(s.cell(0), &[alloc::vec![1, 2]]);
        assert_eq!(s.cell(1), &[alloc::vec![2], alloc::vec![2, 3]]);
        assert_eq!(s.cell(2), &[alloc::vec![1], alloc::vec![0, 1]]);
        assert_eq!(s.cell(3), &[alloc::vec![], alloc::vec![0], alloc::vec![3], alloc::vec![0, 3]]);
    }

    #[test]
    fn a2_shelling() {
        let s = builtin_space(Space::A2Permutohedral).unwrap();
        assert!(validate_fan(s.fan()).passes());
        let expect: [RaySet; 6] =
            [alloc::vec![], alloc::vec![2], alloc::vec![3], alloc::vec![5], alloc::vec![4], alloc::vec![3, 4]];
        assert_eq!(s.shelling(), &expect);
        assert_eq!(s.cell_name(5), "id");
        assert_eq!(s.cell(5).len(), 4);
        assert_eq!(s.cell(0), &[alloc::vec![3, 4]]);
    }

    #[test]
    fn projective_orbit_counts() {
        for m in 1..=5usize {
            for reversed in [false, true] {
                let base = builtin_space(Space::Projective(m)).unwrap();
                let s = if reversed {
                    let maximal = base.fan().maximal_cones();
                    let order: Vec<usize> =
                        base.order().iter().rev().map(|c| maximal.iter().position(|d| d == c).unwrap()).collect();
                    shell(base.fan(), &order).unwrap()
                } else {
                    base
                };
                for i in 0..=m {
                    for d in 0..=m {
                        let count = s.cell(i).iter().filter(|c| m - c.len() == d).count() as i64;
                        assert_eq!(int(count), binomial(i as i64, d as i64));
                    }
                }
            }
        }
    }

    #[test]
    fn stars() {
        let p2 = builtin_space(Space::Projective(2)).unwrap();
        let f = p2.fan();
        assert_eq!(&star(f, &[]).unwrap(), f);
        let line = star(f, &[0]).unwrap();
        assert_eq!(line.dim(), 1);
        assert_eq!(line.rays().len(), 2);
        assert_eq!(line.ray(0)[0], -line.ray(1)[0]);
        assert!(validate_fan(&line).passes());
        let pt = star(f, &[0, 1]).unwrap();
        assert_eq!(pt.dim(), 0);
        assert_eq!(pt.cones(), &[Vec::<usize>::new()]);
        assert_eq!(star(f, &[0, 1, 2]).unwrap_err(), Error::ConeNotInFan);
    }

    #[test]
    fn bad_order() {
        let p2 = builtin_space(Space::Projective(2)).unwrap();
        assert_eq!(shell(p2.fan(), &[0, 0, 1]).unwrap_err(), Error::NotAPermutation);
    }
}
