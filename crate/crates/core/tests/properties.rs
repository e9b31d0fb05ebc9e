//! Randomized algebraic properties of the exact layer.

use hdlr_core::exact::{binomial, int, residue_at, Expr, Monomial, Poly, Scalar, UPoly, Var};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0i32..3, 0i32..3, 0i32..3), -5i64..=5), 0..5).prop_map(|terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::from_pairs([(Var::z(1), a), (Var::z(2), b), (Var::H, c)]), int(k))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(|c| UPoly::from_ints(&c))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&Poly::one()), a);
    }

    #[test]
    fn exact_quotient_inverts_product(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!(a.mul(&b).exact_quotient(&b).unwrap(), a);
    }

    #[test]
    fn parse_round_trip(a in poly()) {
        prop_assert_eq!(Poly::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn upoly_division(a in upoly(), b in upoly().prop_filter("nonzero", |p| !p.is_zero())) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn expr_value_equality(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let x = Expr::ratio(&a.mul(&c), &b.mul(&c)).unwrap();
        prop_assert!(x.eq_value(&Expr::ratio(&a, &b).unwrap()));
        prop_assert!(x.mul(&Expr::ratio(&b, &a).unwrap()).eq_value(&Expr::one()));
    }

    #[test]
    fn residue_is_linear(a in poly(), b in poly(), k in -4i64..=4, e in 1i32..4) {
        let z = Var::z(1);
        let pole = Expr::from_poly(&Poly::z(1)).pow(-e).unwrap();
        let fa = Expr::from_poly(&a).mul(&pole);
        let fb = Expr::from_poly(&b).mul(&pole);
        let combo = fa.scale(&int(k)).add(&fb);
        let lhs = residue_at(&combo, z, &Poly::zero()).unwrap();
        let rhs = residue_at(&fa, z, &Poly::zero()).unwrap().scale(&int(k)).add(&residue_at(&fb, z, &Poly::zero()).unwrap());
        prop_assert!(lhs.eq_value(&rhs));
    }

    #[test]
    fn pascal(n in -2i64..=12, k in -2i64..=12) {
        // At (0, 0) the convention binom(-1, -1) = 0 breaks the recursion.
        prop_assume!((n, k) != (0, 0));
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
    }

    #[test]
    fn vandermonde(m in 0i64..8, n in 0i64..8, k in 0i64..10) {
        let sum: Scalar = (0..=k).map(|j| binomial(m, j) * binomial(n, k - j)).sum();
        prop_assert_eq!(sum, binomial(m + n, k));
    }
}

#[test]
fn residue_of_simple_pole() {
    let z = Var::z(1);
    let f = Expr::ratio(&Poly::z(1).add(&Poly::h()), &Poly::z(1).pow(2)).unwrap();
    assert_eq!(residue_at(&f, z, &Poly::zero()).unwrap(), Expr::one());
}
