//! File formats and cache on computed tables.

use hdlr::cache::{Cache, CacheKey};
use hdlr::formats::{from_json, to_csv, to_json};
use hdlr_core::limits::{Budget, LimitMethod, Solver};
use hdlr_core::table::Theory;
use hdlr_core::weightfn::SubsetIndex;

#[test]
fn json_round_trip_of_k_table() {
    let t = Solver::new(Theory::K, 2, 4, LimitMethod::LineSubstitution, Budget::default()).unwrap().table().unwrap();
    let json = to_json(&t).unwrap();
    let back = from_json(&json).unwrap();
    assert_eq!(back.entries().collect::<Vec<_>>(), t.entries().collect::<Vec<_>>());
    assert_eq!(back.labels, t.labels);
    assert_eq!(to_json(&back).unwrap(), json);
    let csv = to_csv(&t).unwrap();
    assert_eq!(csv.lines().count(), t.entries().count() + 1);
}

#[test]
fn cache_keys_separate_theories() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let s = |e: &[usize]| SubsetIndex::new(4, e).unwrap();
    let key = |theory| CacheKey { theory, d: 2, n: 4, i: s(&[3, 4]), j: s(&[3, 4]), k: s(&[1, 4]), equivariant: false };
    cache.put(&key(Theory::H), &hdlr_core::exact::Poly::parse("7*h^4").unwrap()).unwrap();
    assert!(cache.get(&key(Theory::K)).unwrap().is_none());
    assert_eq!(cache.get(&key(Theory::H)).unwrap().unwrap().to_string(), "7*h^4");
    assert_eq!(cache.inspect().unwrap().entries, 1);
}
