//! Verification suites: golden tables, cross-pipeline equality, identity
//! checks and conjecture reports.
//!
//! Every check yields one [`InstanceResult`]. Hard checks are theorems and
//! golden data; report-only checks (conjectures, observed properties) never
//! fail a run.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::{Duration, Instant};

use hdlr_core::closedform::{
    c_pieri_gr2, c_pieri_total, c_projective, c_projective_k, c_term_projective, lemma_integrand, p_poly_pieri,
    p_poly_projective, ZB, ZL,
};
use hdlr_core::cohomology::{build_ring, mc_chern_character_cell, structure_constants, ClassKind, CohClass, CohRing};
use hdlr_core::exact::{binomial, int, residue_at, Expr, Poly, Scalar, UPoly, Var};
use hdlr_core::fan::{builtin_space, Space};
use hdlr_core::limits::{nu_expand, Budget, LimitMethod, Solver};
use hdlr_core::table::{SCTable, Theory};
use hdlr_core::weightfn::{pieri_factor, SubsetIndex, WeightData};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::golden;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    PassUpToSign,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::PassUpToSign => "SIGN",
        }
    }

    /// Literal result first, then the result up to a global sign.
    pub fn from_sign(literal: bool, up_to_sign: bool) -> Status {
        if literal {
            Status::Pass
        } else if up_to_sign {
            Status::PassUpToSign
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub check: String,
    pub instance: String,
    pub status: Status,
    pub hard: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl InstanceResult {
    fn new(check: &str, instance: impl Into<String>, status: Status, hard: bool, witness: Option<String>) -> Self {
        InstanceResult { check: check.into(), instance: instance.into(), status, hard, witness }
    }

    /// Hard check that passes iff `witness` is `None`.
    fn hard(check: &str, instance: impl Into<String>, witness: Option<String>) -> Self {
        let status = if witness.is_none() { Status::Pass } else { Status::Fail };
        Self::new(check, instance, status, true, witness)
    }

    /// Report-only check.
    fn report(check: &str, instance: impl Into<String>, status: Status, witness: Option<String>) -> Self {
        Self::new(check, instance, status, false, witness)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub pass_up_to_sign: usize,
    pub hard_fail: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub engine_version: String,
    pub results: Vec<InstanceResult>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall time; kept out of the JSON form so reports are reproducible.
    #[serde(skip)]
    pub runtime: Duration,
}

impl VerificationReport {
    fn new(suite: &str, params: &[(&str, String)], results: Vec<InstanceResult>, start: Instant) -> Self {
        let mut summary = Summary::default();
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::PassUpToSign => summary.pass_up_to_sign += 1,
                Status::Fail => {
                    summary.fail += 1;
                    if r.hard {
                        summary.hard_fail += 1;
                    }
                }
            }
        }
        VerificationReport {
            suite: suite.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            engine_version: ENGINE_VERSION.into(),
            results,
            summary,
            notes: Vec::new(),
            runtime: start.elapsed(),
        }
    }

    fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    pub fn has_hard_failure(&self) -> bool {
        self.summary.hard_fail > 0
    }

    /// Results whose check name starts with `prefix`.
    pub fn select<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a InstanceResult> + 'a {
        self.results.iter().filter(move |r| r.check.starts_with(prefix))
    }

    /// True iff every selected result passes literally (and at least one exists).
    pub fn all_pass(&self, prefix: &str) -> bool {
        let mut any = false;
        for r in self.select(prefix) {
            any = true;
            if r.status != Status::Pass {
                return false;
            }
        }
        any
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "suite: {}", self.suite).unwrap();
        for (k, v) in &self.params {
            writeln!(out, "param {k}: {v}").unwrap();
        }
        writeln!(out, "engine version: {}", self.engine_version).unwrap();
        for r in &self.results {
            let kind = if r.hard { "" } else { " (report)" };
            writeln!(out, "{} {}{kind} [{}]", r.status.label(), r.check, r.instance).unwrap();
            if let Some(w) = &r.witness {
                for line in w.lines() {
                    writeln!(out, "    {line}").unwrap();
                }
            }
        }
        for n in &self.notes {
            writeln!(out, "note: {n}").unwrap();
        }
        let s = &self.summary;
        writeln!(
            out,
            "summary: {} pass, {} pass up to sign, {} fail ({} hard); runtime {:.3} s",
            s.pass,
            s.pass_up_to_sign,
            s.fail,
            s.hard_fail,
            self.runtime.as_secs_f64()
        )
        .unwrap();
        out
    }
}

/// Witnesses of one Pieri triple: value, term shape, p-polynomial.
type Witnesses = (Option<String>, Option<String>, Option<String>);

/// Pairs sharing a key.
type Groups<K> = BTreeMap<K, Vec<(usize, usize)>>;

type Job<'a> = Box<dyn Fn() -> Result<Vec<InstanceResult>> + Send + Sync + 'a>;

/// Runs independent jobs in parallel, keeping their order in the output.
fn run_jobs(jobs: Vec<Job<'_>>) -> Result<Vec<InstanceResult>> {
    let parts = jobs.par_iter().map(|j| j()).collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().flatten().collect())
}

fn hp(u: &UPoly) -> String {
    u.to_poly(Var::H).to_string()
}

fn hmono(c: i64, k: usize) -> UPoly {
    UPoly::monomial(int(c), k)
}

/// `Σ_k coeffs[k] · Ω_{labels[k]}`, highest cell first.
fn expansion(coeffs: &[Poly], labels: &[String]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("({c})*Ω_{}", labels[k]))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// First `(i, j, k)` (1-based) where `got` differs from `expected`, over the
/// full `r × r × r` cube.
fn first_mismatch(
    r: usize,
    got: &SCTable,
    expected: impl Fn(usize, usize, usize) -> Result<Poly>,
) -> Result<Option<String>> {
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let (e, g) = (expected(i, j, k)?, got.get(i, j, k));
                if e != g {
                    return Ok(Some(format!("(i,j,k) = ({},{},{}): expected {e}, got {g}", i + 1, j + 1, k + 1)));
                }
            }
        }
    }
    Ok(None)
}

fn projective_ring(m: usize) -> Result<CohRing> {
    Ok(build_ring(&builtin_space(Space::Projective(m))?)?)
}

fn line_solver(theory: Theory, d: usize, n: usize, budget: Budget) -> Result<Solver> {
    Ok(Solver::new(theory, d, n, LimitMethod::LineSubstitution, budget)?)
}

/// Golden comparison of the toric pipeline with the embedded tables.
pub fn tables() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut results = Vec::new();
    for g in golden::tables()? {
        let shelled = builtin_space(Space::parse(&g.space, None)?)?;
        let ring = build_ring(&shelled)?;
        let table = structure_constants(&ring, ClassKind::Csm, false)?;
        let names: Vec<String> = shelled.cell_names().iter().map(|n| format!("Ω_{n}")).collect();
        if names != g.cells {
            return Err(Error::Format(format!("{}: cell labels {:?} differ from {:?}", g.name, g.cells, names)));
        }
        let bare: Vec<String> = shelled.cell_names().to_vec();
        for p in &g.products {
            let (i, j) = (g.cell(&p.left)?, g.cell(&p.right)?);
            let expected = g.coefficients(p)?;
            let got: Vec<Poly> = (0..names.len()).map(|k| table.get(i, j, k)).collect();
            let witness = (expected != got)
                .then(|| format!("expected {}\ngot      {}", expansion(&expected, &bare), expansion(&got, &bare)));
            results.push(InstanceResult::hard(
                &format!("{}.golden", g.name),
                format!("csm({})·csm({})", p.left, p.right),
                witness,
            ));
        }
    }
    Ok(VerificationReport::new("tables", &[], results, start))
}

fn hlr_parts(m: usize) -> Result<Vec<InstanceResult>> {
    let c = |i, j, k| c_projective(m, i, j, k);
    let r = m + 1;
    let (mut w1, mut w2, mut w3, mut w4) = (None, None, None, None);
    for i in 1..=r {
        for j in 1..=r {
            for k in 1..=r {
                let v = c(i, j, k)?;
                if (k > i || k > j) && !v.is_zero() && w1.is_none() {
                    w1 = Some(format!("c^{k}_{{{i},{j}}} = {}", hp(&v)));
                }
                if i > 1 && j < r && v != c(i - 1, j + 1, k)? && w2.is_none() {
                    w2 = Some(format!("(i,j,k) = ({i},{j},{k})"));
                }
                if j < r && k < r && v != c(i, j + 1, k + 1)? && w3.is_none() {
                    w3 = Some(format!("(i,j,k) = ({i},{j},{k})"));
                }
            }
        }
    }
    for k in 1..=r {
        let e = UPoly::monomial(binomial(2 * m as i64 - k as i64, m as i64 - 1), m);
        let v = c(r, r, k)?;
        if v != e && w4.is_none() {
            w4 = Some(format!("k = {k}: expected {}, got {}", hp(&e), hp(&v)));
        }
    }
    let inst = format!("P^{m}");
    Ok(vec![
        InstanceResult::hard("hlr.part1", &inst, w1),
        InstanceResult::hard("hlr.part2", &inst, w2),
        InstanceResult::hard("hlr.part3", &inst, w3),
        InstanceResult::hard("hlr.part4", &inst, w4),
    ])
}

/// Cohomology of `P^m`: toric table against the closed form for
/// `m <= max_m`, theorem identities for `m <= 8`, weight functions for
/// `m <= weightfn_max_m`.
pub fn projective_h(max_m: usize, weightfn_max_m: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut jobs: Vec<Job> = Vec::new();
    for m in 1..=max_m {
        jobs.push(Box::new(move || {
            let t = structure_constants(&projective_ring(m)?, ClassKind::Csm, false)?;
            let w = first_mismatch(m + 1, &t, |i, j, k| Ok(c_projective(m, i + 1, j + 1, k + 1)?.to_poly(Var::H)))?;
            Ok(vec![InstanceResult::hard("projective_h.toric", format!("P^{m}"), w)])
        }));
    }
    for m in 1..=max_m.max(8) {
        jobs.push(Box::new(move || hlr_parts(m)));
    }
    for m in 1..=weightfn_max_m {
        jobs.push(Box::new(move || {
            let t = line_solver(Theory::H, 1, m + 1, Budget { max_d: 1, max_points: m + 1 })?.table()?;
            let w = first_mismatch(m + 1, &t, |i, j, k| Ok(c_projective(m, i + 1, j + 1, k + 1)?.to_poly(Var::H)))?;
            Ok(vec![InstanceResult::hard("projective_h.weightfn", format!("Gr(1,{})", m + 1), w)])
        }));
    }
    let results = run_jobs(jobs)?;
    Ok(VerificationReport::new(
        "projective_H",
        &[("max_m", max_m.to_string()), ("weightfn_max_m", weightfn_max_m.to_string())],
        results,
        start,
    ))
}

fn klr_parts(m: usize) -> Result<Vec<InstanceResult>> {
    let c = |i, j, k| c_projective_k(m, i, j, k);
    let r = m + 1;
    let (mut w1, mut w2, mut w3, mut w4) = (None, None, None, None);
    for i in 1..=r {
        for j in 1..=r {
            for k in 1..=r {
                let v = c(i, j, k)?;
                if (k > i || k > j) && !v.is_zero() && w1.is_none() {
                    w1 = Some(format!("C^{k}_{{{i},{j}}} = {}", hp(&v)));
                }
                if i > 1 && j < r && v != c(i - 1, j + 1, k)? && w2.is_none() {
                    w2 = Some(format!("(i,j,k) = ({i},{j},{k})"));
                }
                if j < r && k < r && v != c(i, j + 1, k + 1)? && w3.is_none() {
                    w3 = Some(format!("(i,j,k) = ({i},{j},{k})"));
                }
            }
        }
    }
    let (m_, one_h) = (m as i64, UPoly::from_ints(&[1, 1]));
    for k in 1..=r {
        let k_ = k as i64;
        // C̃ recovered from C through the sign and (1+h)^m relation.
        let mut tilde = c(r, r, k)?.exact_div(&one_h.pow(m as u32))?;
        if (m + 2 * r + k + 1) % 2 == 1 {
            tilde = tilde.neg();
        }
        let mut e = UPoly::zero();
        for (top, deg) in [(2 * m_ - k_, m_ - k_), (2 * m_ - k_ + 1, m_ - k_ + 1)] {
            let b = binomial(top, m_);
            if !b.is_zero() {
                e = e.add(&UPoly::monomial(b, deg as usize));
            }
        }
        if tilde != e && w4.is_none() {
            w4 = Some(format!("k = {k}: expected {}, got {}", hp(&e), hp(&tilde)));
        }
    }
    let inst = format!("P^{m}");
    Ok(vec![
        InstanceResult::hard("klr.part1", &inst, w1),
        InstanceResult::hard("klr.part2", &inst, w2),
        InstanceResult::hard("klr.part3", &inst, w3),
        InstanceResult::hard("klr.part4", &inst, w4),
    ])
}

/// Lowest `ν` coefficient of `C^k_{i,j}` against `c^k_{i,j} / h^m`, literally
/// and up to `(-1)^m`.
fn kt_to_h(m: usize) -> Result<InstanceResult> {
    let r = m + 1;
    let sign: Scalar = if m.is_multiple_of(2) { int(1) } else { int(-1) };
    let (mut literal, mut signed) = (true, true);
    let mut witness = None;
    for i in 1..=r {
        for j in 1..=r {
            for k in 1..=r {
                let big = nu_expand(&c_projective_k(m, i, j, k)?);
                let low = big.lowest().map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero);
                let small = c_projective(m, i, j, k)?.coeff(m);
                let (l, s) = (low == small, low == &small * &sign);
                if !l && witness.is_none() {
                    witness = Some(format!("(i,j,k) = ({i},{j},{k}): C = {big}, c/h^{m} = {small}"));
                }
                literal &= l;
                signed &= s;
            }
        }
    }
    let status = Status::from_sign(literal, signed);
    let witness = if status == Status::Pass { None } else { witness };
    Ok(InstanceResult::report("kt_to_h_proj", format!("P^{m}"), status, witness))
}

/// K-theory of `P^m`: toric Chern-character table against the closed form,
/// theorem identities, the lowest `ν` term, and weight functions.
pub fn projective_k(max_m: usize, weightfn_max_m: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut jobs: Vec<Job> = Vec::new();
    for m in 1..=max_m {
        jobs.push(Box::new(move || {
            let t = structure_constants(&projective_ring(m)?, ClassKind::Mc, false)?;
            let w = first_mismatch(m + 1, &t, |i, j, k| Ok(c_projective_k(m, i + 1, j + 1, k + 1)?.to_poly(Var::H)))?;
            Ok(vec![InstanceResult::hard("projective_k.toric", format!("P^{m}"), w)])
        }));
    }
    for m in 1..=max_m.max(8) {
        jobs.push(Box::new(move || klr_parts(m)));
        jobs.push(Box::new(move || Ok(vec![kt_to_h(m)?])));
    }
    for m in 1..=weightfn_max_m {
        jobs.push(Box::new(move || {
            let t = line_solver(Theory::K, 1, m + 1, Budget { max_d: 1, max_points: m + 1 })?.table()?;
            let w = first_mismatch(m + 1, &t, |i, j, k| Ok(c_projective_k(m, i + 1, j + 1, k + 1)?.to_poly(Var::H)))?;
            Ok(vec![InstanceResult::hard("projective_k.weightfn", format!("Gr(1,{})", m + 1), w)])
        }));
    }
    let results = run_jobs(jobs)?;
    Ok(VerificationReport::new(
        "projective_K",
        &[("max_m", max_m.to_string()), ("weightfn_max_m", weightfn_max_m.to_string())],
        results,
        start,
    ))
}

fn b(n: i64, k: i64) -> Scalar {
    binomial(n, k)
}

/// Binomial identities used for the projective theorems.
fn binomial_identities() -> Vec<InstanceResult> {
    let mut out = Vec::new();
    let mut w = None;
    for n in -2..=12i64 {
        for k in -2..=12i64 {
            if (n, k) != (0, 0) && b(n, k) != b(n - 1, k - 1) + b(n - 1, k) && w.is_none() {
                w = Some(format!("(n,k) = ({n},{k})"));
            }
        }
    }
    out.push(InstanceResult::hard("identity.pascal", "n, k in -2..=12 except (0,0)", w));

    let mut w = None;
    for a in 0..=12i64 {
        for c in 0..=12i64 {
            for r in 0..=24i64 {
                let s: Scalar = (0..=r).map(|k| b(a, k) * b(c, r - k)).sum();
                if s != b(a + c, r) && w.is_none() {
                    w = Some(format!("(a,c,r) = ({a},{c},{r})"));
                }
            }
        }
    }
    out.push(InstanceResult::hard("identity.vandermonde", "a, c in 0..=12", w));

    let mut w = None;
    for m in 1..=8i64 {
        for l in 0..=m {
            let s: Scalar = (0..=m - l).map(|k| b(2 * m - k - l - 1, m - 1) * b(k + l, l)).sum();
            if s != b(2 * m, m + l) && w.is_none() {
                w = Some(format!("(m,l) = ({m},{l})"));
            }
        }
    }
    out.push(InstanceResult::hard("identity.vandermonde_hlr", "m <= 8", w));

    // Four sums over k in [m-l+1, m+1], then Pascal on the last two.
    type Sum = (&'static str, fn(i64, i64, i64) -> Scalar, fn(i64, i64) -> Scalar);
    let sums: [Sum; 4] = [
        ("1", |m, l, k| b(2 * m - k, m) * b(k - 1, m - l), |m, l| b(2 * m, l - 1)),
        ("2", |m, l, k| b(2 * m - k, m) * b(k - 1, m - l + 1), |m, l| b(2 * m, l - 2)),
        ("3", |m, l, k| b(2 * m - k + 1, m) * b(k - 1, m - l), |m, l| b(2 * m, l) + b(2 * m, l - 1)),
        ("4", |m, l, k| b(2 * m - k + 1, m) * b(k - 1, m - l + 1), |m, l| b(2 * m, l - 1) + b(2 * m, l - 2)),
    ];
    for (name, term, rhs) in sums {
        let mut w = None;
        for m in 1..=8i64 {
            for l in 0..=m {
                let s: Scalar = (m - l + 1..=m + 1).map(|k| term(m, l, k)).sum();
                if s != rhs(m, l) && w.is_none() {
                    w = Some(format!("(m,l) = ({m},{l}): sum {s}, expected {}", rhs(m, l)));
                }
            }
        }
        out.push(InstanceResult::hard(&format!("identity.vandermonde_klr{name}"), "m <= 8", w));
    }
    out
}

/// Residues of `(z_b - z_l + h)^r / ((z_b - z_l) z_b)` (and the Pieri
/// variant with an extra `z_b + h`) at `z_b = 0` and `z_b = z_l`.
fn residue_lemmas() -> Result<Vec<InstanceResult>> {
    let (h, zl) = (Poly::h(), Poly::var(ZL));
    let e = |p: &Poly| Expr::from_poly(p);
    let over = |p: &Poly, q: &Poly| Expr::ratio(p, q);
    let mut out = Vec::new();
    for (pieri, name) in [(false, "lemma.residue"), (true, "lemma.residue_pieri")] {
        for r in 1..=2u32 {
            let f = lemma_integrand(r, pieri);
            let at0 = residue_at(&f, ZB, &Poly::zero())?;
            let atl = residue_at(&f, ZB, &zl)?;
            let shifted = zl.neg().add(&h).pow(r);
            let extra = if pieri { h.clone() } else { Poly::one() };
            let p1 = over(&shifted.mul(&extra), &zl.neg())?;
            let p2 = if pieri { over(&zl.add(&h).mul(&h.pow(r)), &zl)? } else { over(&h.pow(r), &zl)? };
            let p3 = match (pieri, r) {
                (false, 1) => Expr::one(),
                (false, _) => e(&zl.neg().add(&h.scale(&int(2)))),
                (true, 1) => e(&h.scale(&int(2))),
                (true, _) => e(&h.mul(&zl.neg().add(&h.scale(&int(3))))),
            };
            let sum = at0.add(&atl);
            for (part, got, want) in [(1, &at0, &p1), (2, &atl, &p2), (3, &sum, &p3)] {
                let w = (!got.eq_value(want)).then(|| format!("expected {want}, got {got}"));
                out.push(InstanceResult::hard(&format!("{name}.part{part}"), format!("r = {r}"), w));
            }
        }
    }
    Ok(out)
}

/// Binomial identities and the two residue lemmas.
pub fn identities() -> Result<VerificationReport> {
    let start = Instant::now();
    let mut results = binomial_identities();
    results.extend(residue_lemmas()?);
    Ok(VerificationReport::new("identities", &[], results, start))
}

/// Whether `u` is a nonnegative integer multiple of `h^e`.
fn nonneg_multiple(u: &UPoly, e: usize) -> bool {
    u.is_zero()
        || (u.degree() == Some(e) && *u == UPoly::monomial(u.coeff(e), e) && {
            let c = u.coeff(e);
            c.is_integer() && !c.is_negative()
        })
}

/// Term-wise residues on `Gr(1, n)`: `Σ_l c^{k,l}_{i,j} = c^k_{i,j}`, the
/// `p`-polynomial coefficient, and the shape of every term.
pub fn residues(max_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let jobs: Vec<Job> = (2..=max_n)
        .map(|n| -> Job {
            Box::new(move || {
                let m = n - 1;
                let (mut ws, mut wp, mut wt) = (None, None, None);
                for i in 1..=n {
                    for j in 1..=n {
                        for k in 1..=n {
                            let mut total = UPoly::zero();
                            for l in 1..=n {
                                let t = c_term_projective(n, i, j, k, l)?;
                                if !nonneg_multiple(&t, m) && wt.is_none() {
                                    wt = Some(format!("(i,j,k,l) = ({i},{j},{k},{l}): {}", hp(&t)));
                                }
                                total = total.add(&t);
                            }
                            let c = c_projective(m, i, j, k)?;
                            if total != c && ws.is_none() {
                                ws = Some(format!("(i,j,k) = ({i},{j},{k}): sum {}, constant {}", hp(&total), hp(&c)));
                            }
                            if k < i.min(j) {
                                let (_, coeff) = p_poly_projective(n, i.min(j), i.max(j), k)?;
                                if coeff != c && wp.is_none() {
                                    wp = Some(format!("(i,j,k) = ({i},{j},{k}): coefficient {}", hp(&coeff)));
                                }
                            }
                        }
                    }
                }
                let inst = format!("Gr(1,{n})");
                Ok(vec![
                    InstanceResult::hard("residues.sum", &inst, ws),
                    InstanceResult::hard("residues.p_polynomial", &inst, wp),
                    InstanceResult::hard("residues.term_shape", &inst, wt),
                ])
            })
        })
        .collect();
    let results = run_jobs(jobs)?;
    Ok(VerificationReport::new("residues", &[("max_n", max_n.to_string())], results, start))
}

fn pieri_sets(n: usize) -> Vec<[usize; 2]> {
    (1..n).map(|a| [a, n]).collect()
}

/// Pieri triples of `Gr(2, n)`: closed form against the general solver,
/// the `p`-polynomial coefficient, term shapes and the factorization of
/// summands through `Gr(1, n-1)`.
pub fn pieri(ns: &[usize]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut results = Vec::new();
    for &n in ns {
        if n < 3 {
            return Err(Error::Format(format!("Pieri triples need n >= 3, got {n}")));
        }
        let method = if n <= 4 { LimitMethod::SumAndCancel } else { LimitMethod::LineSubstitution };
        let solver = Solver::new(Theory::H, 2, n, method, Budget::default())?;
        let sets = pieri_sets(n);
        let mut triples = Vec::new();
        for i in &sets {
            for j in &sets {
                for k in &sets {
                    triples.push((*i, *j, *k));
                }
            }
        }
        let dim = 2 * (n - 2);
        let found = triples
            .par_iter()
            .map(|(i, j, k)| -> Result<(Option<String>, Option<String>, Option<String>)> {
                let closed = c_pieri_total(n, i, j, k)?;
                let s = |e: &[usize; 2]| SubsetIndex::new(n, e);
                let general = solver.constant(&s(i)?, &s(j)?, &s(k)?)?.value;
                let name = format!("({}{},{}{},{}{})", i[0], i[1], j[0], j[1], k[0], k[1]);
                let mismatch =
                    (closed != general).then(|| format!("{name}: closed {}, general {}", hp(&closed), hp(&general)));
                let mut shape = None;
                for l in &sets {
                    let t = c_pieri_gr2(n, i, j, k, l)?;
                    if !nonneg_multiple(&t, dim) {
                        shape = Some(format!("{name}, L = {}{}: {}", l[0], l[1], hp(&t)));
                    }
                }
                let (lo, hi) = (i[0].min(j[0]), i[0].max(j[0]));
                let mut poly = None;
                if k[0] < lo {
                    let (_, coeff) = p_poly_pieri(n, &[lo, n], &[hi, n], k)?;
                    if coeff != closed {
                        poly = Some(format!("{name}: coefficient {}, constant {}", hp(&coeff), hp(&closed)));
                    }
                }
                Ok((mismatch, shape, poly))
            })
            .collect::<Result<Vec<_>>>()?;
        let first = |f: fn(&Witnesses) -> Option<String>| found.iter().find_map(f);
        let inst = format!("Gr(2,{n}), {} triples, {}", triples.len(), method.name());
        results.push(InstanceResult::hard("pieri.closed_vs_general", &inst, first(|t| t.0.clone())));
        results.push(InstanceResult::hard("pieri.term_shape", &inst, first(|t| t.1.clone())));
        results.push(InstanceResult::hard("pieri.p_polynomial", &inst, first(|t| t.2.clone())));
        // k = l = i <= j: the only summand is L = I.
        let mut diag = None;
        for a in 1..n {
            for b in a..n {
                let (ii, jj) = ([a, n], [b, n]);
                let want = if b == n - 1 { hmono(1, dim) } else { UPoly::zero() };
                let term = c_pieri_gr2(n, &ii, &jj, &ii, &ii)?;
                let s = |e: &[usize; 2]| SubsetIndex::new(n, e);
                let general = solver.constant(&s(&ii)?, &s(&jj)?, &s(&ii)?)?.value;
                if (term != want || general != want) && diag.is_none() {
                    diag = Some(format!("(i,j) = ({a},{b}): term {}, general {}", hp(&term), hp(&general)));
                }
            }
        }
        results.push(InstanceResult::hard(
            "pieri.diagonal",
            format!("Gr(2,{n}), c^{{I,I}}_{{I,J}} = h^{dim} iff j = n-1"),
            diag,
        ));
        results.push(pieri_factorization(n)?);
    }
    let params = [("n", ns.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","))];
    Ok(VerificationReport::new("pieri", &params, results, start))
}

/// Every summand with `n ∈ I, J, K, L` and `i <= j` equals the `Gr(1, n-1)`
/// summand times the Pieri factor.
fn pieri_factorization(n: usize) -> Result<InstanceResult> {
    let big = WeightData::new(Theory::H, 2, n)?;
    let small = WeightData::new(Theory::H, 1, n - 1)?;
    let pos = |a: usize| big.position(&SubsetIndex::new(n, &[a, n])?);
    let mut quads = Vec::new();
    for i in 1..n {
        for j in i..n {
            for k in 1..n {
                for l in 1..n {
                    quads.push((i, j, k, l));
                }
            }
        }
    }
    let bad = quads
        .par_iter()
        .map(|&(i, j, k, l)| -> Result<Option<String>> {
            let lhs = big.sc_term(pos(i)?, pos(j)?, pos(k)?, pos(l)?)?;
            let rhs = small.sc_term(i - 1, j - 1, k - 1, l - 1)?.mul_poly(&pieri_factor(n, l));
            Ok((!lhs.eq_value(&rhs)).then(|| format!("(i,j,k,l) = ({i},{j},{k},{l})")))
        })
        .collect::<Result<Vec<_>>>()?;
    let witness = bad.into_iter().flatten().next();
    Ok(InstanceResult::hard("pieri.factorization", format!("Gr(2,{n})"), witness))
}

/// `⟨W_{id,I}, dual W_J⟩ = δ_{I,J}` on each `Gr(d, n)` in both theories.
pub fn orthogonality(cases: &[(usize, usize)]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut jobs: Vec<Job> = Vec::new();
    for &(d, n) in cases {
        for theory in [Theory::H, Theory::K] {
            jobs.push(Box::new(move || {
                let data = WeightData::new(theory, d, n)?;
                let r = data.subsets().len();
                let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).collect();
                let bad = pairs
                    .par_iter()
                    .map(|&(i, j)| -> Result<Option<String>> {
                        let p = data.pairing(i, j)?;
                        let want = if i == j { Expr::one() } else { Expr::zero() };
                        Ok((!p.eq_value(&want)).then(|| format!("({}, {}): {p}", data.subsets()[i], data.subsets()[j])))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let w = bad.into_iter().flatten().next();
                Ok(vec![InstanceResult::hard(
                    "orthogonality",
                    format!("{theory} Gr({d},{n}), {} pairs", pairs.len()),
                    w,
                )])
            }));
        }
    }
    let results = run_jobs(jobs)?;
    let params = [("cases", cases.iter().map(|(d, n)| format!("Gr({d},{n})")).collect::<Vec<_>>().join(" "))];
    Ok(VerificationReport::new("orthogonality", &params, results, start))
}

/// Three pipelines on `Gr(1, n) = P^{n-1}` (cohomology for `n <= max_n_h`,
/// K-theory for `n <= max_n_k`), and agreement of the two limit methods on
/// `Gr(2, 4)` when `gr24` is set.
pub fn cross_pipeline(max_n_h: usize, max_n_k: usize, gr24: bool) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut jobs: Vec<Job> = Vec::new();
    for (theory, max_n) in [(Theory::H, max_n_h), (Theory::K, max_n_k)] {
        for n in 2..=max_n {
            jobs.push(Box::new(move || {
                let m = n - 1;
                let closed = |i: usize, j: usize, k: usize| -> Result<Poly> {
                    Ok(match theory {
                        Theory::H => c_projective(m, i + 1, j + 1, k + 1)?,
                        Theory::K => c_projective_k(m, i + 1, j + 1, k + 1)?,
                    }
                    .to_poly(Var::H))
                };
                let kind = if theory == Theory::H { ClassKind::Csm } else { ClassKind::Mc };
                let toric = structure_constants(&projective_ring(m)?, kind, false)?;
                let wf = line_solver(theory, 1, n, Budget { max_d: 1, max_points: n })?.table()?;
                let inst = format!("{theory} Gr(1,{n})");
                Ok(vec![
                    InstanceResult::hard("cross.toric_vs_closed", &inst, first_mismatch(n, &toric, closed)?),
                    InstanceResult::hard("cross.weightfn_vs_closed", &inst, first_mismatch(n, &wf, closed)?),
                ])
            }));
        }
    }
    if gr24 {
        for theory in [Theory::H, Theory::K] {
            jobs.push(Box::new(move || {
                let a = Solver::new(theory, 2, 4, LimitMethod::SumAndCancel, Budget::default())?.table()?;
                let b = line_solver(theory, 2, 4, Budget::default())?.table()?;
                let w = first_mismatch(6, &b, |i, j, k| Ok(a.get(i, j, k)))?;
                Ok(vec![InstanceResult::hard("cross.limit_methods", format!("{theory} Gr(2,4)"), w)])
            }));
        }
    }
    let results = run_jobs(jobs)?;
    Ok(VerificationReport::new(
        "cross_pipeline",
        &[("max_n_h", max_n_h.to_string()), ("max_n_k", max_n_k.to_string()), ("gr24", gr24.to_string())],
        results,
        start,
    ))
}

type Triple = (usize, usize, usize);

/// Constants `(c, C)` of `Gr(d, n)`. Every triple with `K` not below `I, J`
/// is included; of the others, every one, or an evenly spaced sample of
/// about `sample` of them in lexicographic order.
#[allow(clippy::type_complexity)]
fn constants(
    d: usize,
    n: usize,
    budget: Budget,
    sample: Option<usize>,
) -> Result<(Vec<SubsetIndex>, BTreeMap<Triple, (UPoly, UPoly)>)> {
    let h = line_solver(Theory::H, d, n, budget)?;
    let k = line_solver(Theory::K, d, n, budget)?;
    let subsets = h.data().subsets().to_vec();
    let r = subsets.len();
    let below = |i: usize, j: usize, k: usize| subsets[k].bruhat_le(&subsets[i]) && subsets[k].bruhat_le(&subsets[j]);
    let mut admissible = Vec::new();
    let mut triples = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                if below(i, j, k) {
                    admissible.push((i, j, k));
                } else {
                    triples.push((i, j, k));
                }
            }
        }
    }
    let stride = sample.map_or(1, |s| admissible.len().div_ceil(s.max(1)));
    triples.extend(admissible.into_iter().step_by(stride));
    triples.sort_unstable();
    let values = triples
        .par_iter()
        .map(|&(i, j, kk)| Ok(((i, j, kk), (h.constant_at(i, j, kk)?.value, k.constant_at(i, j, kk)?.value))))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok((subsets, values))
}

fn sum_vec(a: &SubsetIndex, b: &SubsetIndex) -> Vec<usize> {
    a.elems().iter().zip(b.elems()).map(|(x, y)| x + y).collect()
}

fn diff_vec(a: &SubsetIndex, b: &SubsetIndex) -> Vec<i64> {
    a.elems().iter().zip(b.elems()).map(|(x, y)| *x as i64 - *y as i64).collect()
}

/// Conjectured properties of K-theoretic constants on `Gr(d, n)`, over all
/// triples, or with `sample` every triple with `K` not below `I, J` plus an
/// evenly spaced sample of the rest. Nothing here is a hard check.
pub fn check_conjectures(d: usize, n: usize, budget: Budget, sample: Option<usize>) -> Result<VerificationReport> {
    let start = Instant::now();
    budget.check(d, n)?;
    let (subsets, values) = constants(d, n, budget, sample)?;
    let at = |i: usize, j: usize, k: usize| &values[&(i, j, k)];
    let dim = d * (n - d);
    let sign: Scalar = if dim.is_multiple_of(2) { int(1) } else { int(-1) };
    let name = |i: usize, j: usize, k: usize| format!("(I,J,K) = ({},{},{})", subsets[i], subsets[j], subsets[k]);
    let space = format!("Gr({d},{n})");
    let mut results = Vec::new();

    let (mut p1_lit, mut p1_sign, mut p1_w) = (0usize, 0usize, None);
    let (mut k_lit, mut k_sign, mut k_w) = (0usize, 0usize, None);
    let mut p2_w = None;
    let mut p2_count = 0;
    for (&(i, j, k), (c, big)) in &values {
        let nu = nu_expand(big);
        let lit = nu.all_nonnegative();
        let signed = if sign.is_one() { lit } else { nu.neg().all_nonnegative() };
        p1_lit += usize::from(lit);
        p1_sign += usize::from(signed);
        if !lit && p1_w.is_none() {
            p1_w = Some(format!("{}: C = {nu}", name(i, j, k)));
        }
        let low = nu.lowest().map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero);
        let small = c.coeff(dim);
        let homogeneous = *c == UPoly::monomial(small.clone(), dim) || c.is_zero();
        let (l, s) = (homogeneous && low == small, homogeneous && low == &small * &sign);
        k_lit += usize::from(l);
        k_sign += usize::from(s);
        if !l && k_w.is_none() {
            k_w = Some(format!("{}: C = {nu}, c = {}", name(i, j, k), hp(c)));
        }
        let below = subsets[k].bruhat_le(&subsets[i]) && subsets[k].bruhat_le(&subsets[j]);
        if !below {
            p2_count += 1;
            if !big.is_zero() && p2_w.is_none() {
                p2_w = Some(format!("{}: C = {}", name(i, j, k), hp(big)));
            }
        }
    }
    let total = values.len();
    let counts = |lit: usize, signed: usize| format!("{space}, {total} triples: {lit} literal, {signed} up to sign");
    results.push(InstanceResult::report(
        "conj.nu_positivity.literal",
        counts(p1_lit, p1_sign),
        Status::from_sign(p1_lit == total, false),
        p1_w.clone(),
    ));
    results.push(InstanceResult::report(
        "conj.nu_positivity.up_to_sign",
        counts(p1_lit, p1_sign),
        Status::from_sign(p1_lit == total, p1_sign == total),
        (p1_sign != total).then(|| p1_w.clone()).flatten(),
    ));
    results.push(InstanceResult::report(
        "conj.bruhat_vanishing",
        format!("{space}, {p2_count} triples with K not below I, J"),
        Status::from_sign(p2_w.is_none(), false),
        p2_w,
    ));

    let mut groups3: Groups<(Vec<usize>, usize)> = BTreeMap::new();
    let mut groups4: Groups<(usize, Vec<i64>)> = BTreeMap::new();
    for &(i, j, k) in values.keys() {
        groups3.entry((sum_vec(&subsets[i], &subsets[j]), k)).or_default().push((i, j));
        groups4.entry((i, diff_vec(&subsets[j], &subsets[k]))).or_default().push((j, k));
    }
    let mut w3 = None;
    for ((_, k), members) in &groups3 {
        let (i0, j0) = members[0];
        for &(i, j) in &members[1..] {
            if at(i, j, *k).1 != at(i0, j0, *k).1 && w3.is_none() {
                w3 = Some(format!("{} vs {}", name(i0, j0, *k), name(i, j, *k)));
            }
        }
    }
    results.push(InstanceResult::report(
        "conj.sum_invariance",
        format!("{space}, {} classes", groups3.len()),
        Status::from_sign(w3.is_none(), false),
        w3,
    ));
    let mut w4 = None;
    for ((i, _), members) in &groups4 {
        let (j0, k0) = members[0];
        for &(j, k) in &members[1..] {
            if at(*i, j, k).1 != at(*i, j0, k0).1 && w4.is_none() {
                w4 = Some(format!("{} vs {}", name(*i, j0, k0), name(*i, j, k)));
            }
        }
    }
    results.push(InstanceResult::report(
        "conj.difference_invariance",
        format!("{space}, {} classes", groups4.len()),
        Status::from_sign(w4.is_none(), false),
        w4,
    ));
    results.push(InstanceResult::report(
        "conj.lowest_coefficient.literal",
        counts(k_lit, k_sign),
        Status::from_sign(k_lit == total, false),
        k_w.clone(),
    ));
    results.push(InstanceResult::report(
        "conj.lowest_coefficient.up_to_sign",
        counts(k_lit, k_sign),
        Status::from_sign(k_lit == total, k_sign == total),
        (k_sign != total).then(|| k_w.clone()).flatten(),
    ));
    results.extend(gr12_anomaly()?);
    let notes = vec![
        format!("global sign (-1)^(d(n-d)) = {sign} on {space}"),
        "ν-positivity and the lowest coefficient are listed literally and up to the global sign; the rest literally".into(),
        "the Gr(1,2) block shows C^2_{2,2} = -ν: ν-positivity fails literally there, so d = 1 may be outside its intended scope"
            .into(),
    ];
    let mut params = vec![("d", d.to_string()), ("n", n.to_string())];
    if let Some(s) = sample {
        params.push(("sample", s.to_string()));
    }
    Ok(VerificationReport::new("conjectures", &params, results, start).with_notes(notes))
}

/// The `P^1` sign anomaly of ν-positivity, always included in conjecture reports.
fn gr12_anomaly() -> Result<Vec<InstanceResult>> {
    let s = line_solver(Theory::K, 1, 2, Budget::default())?;
    let p2 = SubsetIndex::new(2, &[2])?;
    let v = s.constant(&p2, &p2, &p2)?.value;
    let nu = nu_expand(&v);
    let literal = nu.all_nonnegative();
    let signed = nu.neg().all_nonnegative();
    Ok(vec![InstanceResult::report(
        "conj.nu_positivity.gr12_anomaly",
        format!("Gr(1,2), C^2_{{2,2}} = {nu} = {}", hp(&v)),
        Status::from_sign(literal, signed),
        Some(format!(
            "literal {}, up to sign {}",
            if literal { "holds" } else { "fails" },
            if signed { "holds" } else { "fails" }
        )),
    )])
}

fn eval_h0(c: &CohClass) -> CohClass {
    CohClass::from_coords(c.coords().iter().map(|u| UPoly::constant(u.eval(&Scalar::zero()))).collect())
}

/// Degeneration checks: codimension-additive triples on `Gr(1, n)`, K-theory
/// at `h = 0` against the toric `h = 0` expansion, and `h^{dim}`-divisibility
/// of cohomological constants.
pub fn classical_degeneration_check(d: usize, n: usize, budget: Budget) -> Result<VerificationReport> {
    let start = Instant::now();
    budget.check(d, n)?;
    let dim = d * (n - d);
    let space = format!("Gr({d},{n})");
    let mut results = Vec::new();
    let h = line_solver(Theory::H, d, n, budget)?;
    let subsets = h.data().subsets().to_vec();
    let r = subsets.len();
    if d == 1 {
        let m = n - 1;
        let mut w = None;
        let mut count = 0;
        for i in 1..=n {
            for j in 1..=n {
                let Some(k) = (i + j).checked_sub(n).filter(|&k| k >= 1) else {
                    continue;
                };
                count += 1;
                let closed = c_projective(m, i, j, k)?;
                let general = h.constant_at(i - 1, j - 1, k - 1)?.value;
                if (closed != hmono(1, m) || general != closed) && w.is_none() {
                    w = Some(format!(
                        "(i,j,k) = ({i},{j},{k}): closed {}, weight functions {}",
                        hp(&closed),
                        hp(&general)
                    ));
                }
            }
        }
        results.push(InstanceResult::hard(
            "classical.codim_additive",
            format!("{space}, {count} triples, c = h^{dim}"),
            w,
        ));

        let ring = projective_ring(m)?;
        let classes =
            (0..r).map(|i| Ok(eval_h0(&mc_chern_character_cell(&ring, i, false)?))).collect::<Result<Vec<_>>>()?;
        let k = line_solver(Theory::K, d, n, budget)?;
        let mut w = None;
        for i in 0..r {
            for j in 0..r {
                let coeffs = ring.expand_in_basis(&ring.mul(&classes[i], &classes[j]), &classes)?;
                for (kk, c) in coeffs.iter().enumerate() {
                    let toric = c
                        .as_poly()
                        .cloned()
                        .ok_or_else(|| hdlr_core::Error::NonPolynomialResult(format!("h = 0 coefficient {c}")))?;
                    let wf = UPoly::constant(k.constant_at(i, j, kk)?.value.eval(&Scalar::zero()));
                    if toric != wf && w.is_none() {
                        w = Some(format!(
                            "(i,j,k) = ({},{},{}): toric {toric}, weight functions {wf}",
                            i + 1,
                            j + 1,
                            kk + 1
                        ));
                    }
                }
            }
        }
        results.push(InstanceResult::hard("classical.k_at_h0", format!("{space}, toric vs weight functions"), w));
    }

    let triples: Vec<(usize, usize, usize)> =
        (0..r).flat_map(|i| (0..r).flat_map(move |j| (0..r).map(move |k| (i, j, k)))).collect();
    let values = triples.par_iter().map(|&(i, j, k)| Ok(h.constant_at(i, j, k)?.value)).collect::<Result<Vec<_>>>()?;
    let mut w = None;
    let mut nonzero = 0;
    for (&(i, j, k), v) in triples.iter().zip(&values) {
        if v.is_zero() {
            continue;
        }
        nonzero += 1;
        if v.coeffs()[..dim.min(v.coeffs().len())].iter().any(|c| !c.is_zero()) && w.is_none() {
            w = Some(format!("({},{},{}): {}", subsets[i], subsets[j], subsets[k], hp(v)));
        }
    }
    results.push(InstanceResult::report(
        "classical.h_dim_divisibility",
        format!("{space}, {nonzero} nonzero constants divisible by h^{dim}"),
        Status::from_sign(w.is_none(), false),
        w,
    ));
    Ok(VerificationReport::new("classical", &[("d", d.to_string()), ("n", n.to_string())], results, start))
}

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 10] = [
    "tables",
    "projective_H",
    "projective_K",
    "pieri",
    "orthogonality",
    "cross_pipeline",
    "identities",
    "residues",
    "conjectures",
    "classical",
];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteParams {
    pub max_m: Option<usize>,
    pub d: Option<usize>,
    pub n: Option<usize>,
    /// Lifts the budget to [`Budget::extended`]; conjecture reports beyond
    /// `Gr(2, 4)` need it.
    pub extended: bool,
    /// Sample size for conjecture reports.
    pub sample: Option<usize>,
}

impl SuiteParams {
    pub fn budget(&self) -> Budget {
        if self.extended {
            Budget::extended()
        } else {
            Budget::default()
        }
    }
}

/// Conjecture reports without `extended` stop at `Gr(2, 4)`.
pub const CONJECTURE_BUDGET: Budget = Budget { max_d: 2, max_points: 6 };

pub fn run_suite(name: &str, p: &SuiteParams) -> Result<VerificationReport> {
    match name {
        "tables" => tables(),
        "projective_H" => {
            let m = p.max_m.unwrap_or(5);
            projective_h(m, m.min(4))
        }
        "projective_K" => {
            let m = p.max_m.unwrap_or(4);
            projective_k(m, m.min(3))
        }
        "pieri" => match p.n {
            Some(n) => {
                p.budget().check(2, n)?;
                pieri(&[n])
            }
            None => pieri(&[4, 5]),
        },
        "orthogonality" => match (p.d, p.n) {
            (Some(d), Some(n)) => {
                p.budget().check(d, n)?;
                orthogonality(&[(d, n)])
            }
            _ => orthogonality(&[(1, 2), (1, 3), (1, 4), (2, 4)]),
        },
        "cross_pipeline" => {
            let n = p.n.unwrap_or(5);
            cross_pipeline(n, n.min(4), true)
        }
        "identities" => identities(),
        "residues" => residues(p.n.unwrap_or(7)),
        "conjectures" => {
            let budget = if p.extended { Budget::extended() } else { CONJECTURE_BUDGET };
            check_conjectures(p.d.unwrap_or(2), p.n.unwrap_or(4), budget, p.sample)
        }
        "classical" => classical_degeneration_check(p.d.unwrap_or(1), p.n.unwrap_or(4), p.budget()),
        other => Err(Error::Format(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_from_sign() {
        assert_eq!(Status::from_sign(true, false), Status::Pass);
        assert_eq!(Status::from_sign(false, true), Status::PassUpToSign);
        assert_eq!(Status::from_sign(false, false), Status::Fail);
    }

    #[test]
    fn nonneg_multiples() {
        assert!(nonneg_multiple(&hmono(3, 2), 2));
        assert!(nonneg_multiple(&UPoly::zero(), 2));
        assert!(!nonneg_multiple(&hmono(-1, 2), 2));
        assert!(!nonneg_multiple(&hmono(1, 3), 2));
        assert!(!nonneg_multiple(&UPoly::from_ints(&[0, 1, 1]), 2));
    }

    #[test]
    fn small_suites_pass() {
        let r = identities().unwrap();
        assert!(!r.has_hard_failure(), "{}", r.to_text());
        let r = residues(4).unwrap();
        assert!(!r.has_hard_failure(), "{}", r.to_text());
        let r = projective_h(2, 2).unwrap();
        assert!(!r.has_hard_failure(), "{}", r.to_text());
    }

    #[test]
    fn report_json_is_deterministic() {
        let a = residues(3).unwrap().to_json().unwrap();
        let b = residues(3).unwrap().to_json().unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"engine_version\""));
        assert!(!a.contains("runtime"));
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteParams::default()).is_err());
    }
}
