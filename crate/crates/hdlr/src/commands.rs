//! Implementations of the `toric`, `gr`, `verify` and `cache` commands.

use hdlr_core::cohomology::{build_ring, structure_constants, ClassKind};
use hdlr_core::exact::{Expr, Poly, Var};
use hdlr_core::fan::{builtin_space, shell, ShelledFan, Space};
use hdlr_core::limits::{LimitMethod, Solver};
use hdlr_core::table::{SCTable, Theory};
use hdlr_core::weightfn::{SubsetIndex, WeightData};

use crate::cache::CacheKey;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::fanio::load_fan;
use crate::harness::{run_suite, SuiteParams, VerificationReport};

/// Where a fan comes from.
#[derive(Debug, Clone)]
pub enum FanSource {
    Builtin { name: String, m: Option<usize> },
    Json(String),
}

/// Full structure-constant table of a toric space. `order` (1-based,
/// positions among the maximal cones) reshells the fan.
pub fn toric(src: &FanSource, kind: ClassKind, order: Option<&[usize]>, cfg: &Config) -> Result<SCTable> {
    let (mut shelled, space) = match src {
        FanSource::Builtin { name, m } => {
            let space = Space::parse(name, *m)?;
            let label = match space {
                Space::Projective(m) => format!("P^{m}"),
                _ => name.clone(),
            };
            (builtin_space(space)?, label)
        }
        FanSource::Json(text) => (load_fan(text)?, "fan".to_string()),
    };
    if let Some(order) = order {
        shelled = reshell(&shelled, order)?;
    }
    let ring = build_ring(&shelled)?;
    let table = structure_constants(&ring, kind, cfg.experimental)?;
    Ok(table.with_meta("space", &space).with_meta("pipeline", "toric"))
}

fn reshell(s: &ShelledFan, order: &[usize]) -> Result<ShelledFan> {
    let r = s.fan().maximal_cones().len();
    let zero_based = order
        .iter()
        .map(
            |&i| {
                if i == 0 || i > r {
                    Err(Error::Format(format!("cone {i} out of range 1..={r}")))
                } else {
                    Ok(i - 1)
                }
            },
        )
        .collect::<Result<Vec<_>>>()?;
    Ok(shell(s.fan(), &zero_based)?)
}

/// Parses `"34,34,14"`, or `"3,4;3,4;1,4"` when `n >= 10`.
pub fn parse_triple(s: &str, n: usize) -> Result<[SubsetIndex; 3]> {
    let parts: Vec<&str> = if s.contains(';') { s.split(';').collect() } else { s.split(',').collect() };
    let [a, b, c] = parts.as_slice() else {
        return Err(Error::Format(format!("expected three subsets in {s:?}")));
    };
    Ok([SubsetIndex::parse(a, n)?, SubsetIndex::parse(b, n)?, SubsetIndex::parse(c, n)?])
}

#[derive(Debug, Clone)]
pub struct GrRequest {
    pub d: usize,
    pub n: usize,
    pub theory: Theory,
    pub equivariant: bool,
    pub method: LimitMethod,
    pub use_cache: bool,
}

/// One constant, with whether it came from the cache.
pub fn gr_constant(req: &GrRequest, triple: &[SubsetIndex; 3], cfg: &Config) -> Result<(Poly, bool)> {
    cfg.budget.check(req.d, req.n)?;
    for s in triple {
        if s.d() != req.d {
            return Err(Error::Format(format!("subset {s} does not have {} elements", req.d)));
        }
    }
    let [i, j, k] = triple;
    let key = CacheKey {
        theory: req.theory,
        d: req.d,
        n: req.n,
        i: i.clone(),
        j: j.clone(),
        k: k.clone(),
        equivariant: req.equivariant,
    };
    let cache = cfg.cache();
    if req.use_cache {
        if let Some(v) = cache.get(&key)? {
            return Ok((v, true));
        }
    }
    let value = if req.equivariant {
        hdlr_core::weightfn::equivariant_sc(req.theory, i, j, k)?
    } else {
        Solver::new(req.theory, req.d, req.n, req.method, cfg.budget)?.constant(i, j, k)?.value.to_poly(Var::H)
    };
    if req.use_cache {
        cache.put(&key, &value)?;
    }
    Ok((value, false))
}

/// One localization summand of an equivariant constant: the term of the
/// fixed point `l`, a rational function in `z` and `h`.
pub fn gr_term(theory: Theory, triple: &[SubsetIndex; 3], l: &SubsetIndex, cfg: &Config) -> Result<Expr> {
    cfg.budget.check(l.d(), l.n())?;
    let [i, j, k] = triple;
    let term = hdlr_core::weightfn::sc_term(theory, i, j, k, l)?;
    Ok(term.factor_over(&linear_forms(theory, l.n())))
}

/// The linear forms that restrictions of weight functions are built from.
fn linear_forms(theory: Theory, n: usize) -> Vec<Poly> {
    let h = Poly::h();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a == b {
                continue;
            }
            let (za, zb) = (Poly::z(a), Poly::z(b));
            match theory {
                Theory::H => {
                    out.push(za.sub(&zb));
                    out.push(za.sub(&zb).add(&h));
                }
                Theory::K => {
                    out.push(za.sub(&zb));
                    out.push(za.add(&zb.mul(&h)));
                    out.push(za.sub(&zb.mul(&h)));
                }
            }
        }
    }
    out
}

/// Full table of `Gr(d, n)`. Entries are read from and written to the cache
/// one constant at a time.
pub fn gr_table(req: &GrRequest, cfg: &Config) -> Result<SCTable> {
    cfg.budget.check(req.d, req.n)?;
    let cache = cfg.cache();
    let key = |i: &SubsetIndex, j: &SubsetIndex, k: &SubsetIndex| CacheKey {
        theory: req.theory,
        d: req.d,
        n: req.n,
        i: i.clone(),
        j: j.clone(),
        k: k.clone(),
        equivariant: req.equivariant,
    };
    let subsets = SubsetIndex::all(req.d, req.n);
    let r = subsets.len();
    let mut todo = Vec::new();
    let mut known = Vec::new();
    for i in 0..r {
        for j in i..r {
            for k in 0..r {
                if !(subsets[k].bruhat_le(&subsets[i]) && subsets[k].bruhat_le(&subsets[j])) {
                    continue;
                }
                match req.use_cache.then(|| cache.get(&key(&subsets[i], &subsets[j], &subsets[k]))).transpose()? {
                    Some(Some(v)) => known.push((i, j, k, v)),
                    _ => todo.push((i, j, k)),
                }
            }
        }
    }
    let computed = if todo.is_empty() {
        Vec::new()
    } else if req.equivariant {
        let data = WeightData::new(req.theory, req.d, req.n)?;
        todo.iter().map(|&(i, j, k)| Ok((i, j, k, data.equivariant_sc(i, j, k)?))).collect::<Result<Vec<_>>>()?
    } else {
        let solver = Solver::new(req.theory, req.d, req.n, req.method, cfg.budget)?;
        todo.iter()
            .map(|&(i, j, k)| Ok((i, j, k, solver.constant_at(i, j, k)?.value.to_poly(Var::H))))
            .collect::<Result<Vec<_>>>()?
    };
    if req.use_cache {
        for (i, j, k, v) in &computed {
            cache.put(&key(&subsets[*i], &subsets[*j], &subsets[*k]), v)?;
        }
    }
    let labels = subsets.iter().map(|s| s.to_string()).collect();
    let mut t = SCTable::new(req.theory, labels)
        .with_meta("space", &format!("Gr({},{})", req.d, req.n))
        .with_meta("pipeline", "weight_function")
        .with_meta("equivariant", &req.equivariant.to_string());
    if !req.equivariant {
        t = t.with_meta("limit", req.method.name());
    }
    for (i, j, k, v) in known.into_iter().chain(computed) {
        t.set(i, j, k, v);
    }
    Ok(t)
}

pub fn verify(suite: &str, params: &SuiteParams) -> Result<VerificationReport> {
    run_suite(suite, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hdlr_core::exact::Poly;

    fn cfg(dir: &std::path::Path) -> Config {
        Config { cache_dir: dir.to_path_buf(), ..Config::default() }
    }

    fn req(theory: Theory, d: usize, n: usize, equivariant: bool) -> GrRequest {
        GrRequest { d, n, theory, equivariant, method: LimitMethod::LineSubstitution, use_cache: true }
    }

    #[test]
    fn triple_forms() {
        let [a, b, c] = parse_triple("34,34,14", 4).unwrap();
        assert_eq!((a.elems(), b.elems(), c.elems()), (&[3, 4][..], &[3, 4][..], &[1, 4][..]));
        let [a, _, _] = parse_triple("3,10;1,2;1,2", 10).unwrap();
        assert_eq!(a.elems(), [3, 10]);
        assert!(parse_triple("34,34", 4).is_err());
    }

    #[test]
    fn pieri_constant_and_cache_hit() {
        let dir = tempfile::tempdir().unwrap();
        let c = cfg(dir.path());
        let t = parse_triple("34,34,14", 4).unwrap();
        let r = req(Theory::H, 2, 4, false);
        let (v, hit) = gr_constant(&r, &t, &c).unwrap();
        assert_eq!((v.clone(), hit), (Poly::parse("7*h^4").unwrap(), false));
        let (w, hit) = gr_constant(&r, &t, &c).unwrap();
        assert_eq!((w, hit), (v, true));
    }

    #[test]
    fn table_from_cache_matches_recompute() {
        let dir = tempfile::tempdir().unwrap();
        let c = cfg(dir.path());
        let r = req(Theory::K, 1, 3, false);
        let fresh = gr_table(&r, &c).unwrap();
        assert!(c.cache().inspect().unwrap().entries > 0);
        let cached = gr_table(&r, &c).unwrap();
        assert_eq!(fresh, cached);
        let uncached = gr_table(&GrRequest { use_cache: false, ..r }, &c).unwrap();
        assert_eq!(fresh, uncached);
    }

    #[test]
    fn projective_toric_builtin() {
        let dir = tempfile::tempdir().unwrap();
        let src = FanSource::Builtin { name: "projective".into(), m: Some(2) };
        let t = toric(&src, ClassKind::Csm, None, &cfg(dir.path())).unwrap();
        assert_eq!(t.get(2, 2, 0), Poly::parse("3*h^2").unwrap());
        assert_eq!(t.metadata["space"], "P^2");
    }
}
