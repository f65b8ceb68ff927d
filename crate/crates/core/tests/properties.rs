use num_traits::{One, Zero};
use proptest::prelude::*;

use cometric::d6::certificate::Certificate;
use cometric::d6::{certify_infeasible, validate, v7_factorization_check, D6Params};
use cometric::exact::poly::Poly;
use cometric::exact::rat::{self, int, rat, Rat};
use cometric::exact::sturm::{sturm_isolate, AlgebraicReal};
use cometric::scheme::KreinArray;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 1..=max_deg + 1).prop_map(Poly::new)
}

/// `(m, b3, b4, c5)` on a half-integer grid; `c2` is then fixed by `a2 = a4 + a5`.
fn d6_params() -> impl Strategy<Value = D6Params> {
    (5i64..=16, 1i64..=30, 1i64..=30, 1i64..=30).prop_filter_map("invalid tuple", |(m2, b3, b4, c5)| {
        let m = rat(m2, 2);
        let (b3, b4, c5) = (rat(b3, 2), rat(b4, 2), rat(c5, 2));
        let c2 = &b4 + &c5 - (&m - Rat::one());
        validate(m, c2, b3, b4, c5).ok()
    })
}

proptest! {
    #[test]
    fn rat_text_round_trip(q in small_rat()) {
        prop_assert_eq!(rat::parse(&rat::format(&q)).unwrap(), q);
    }

    #[test]
    fn division_identity(a in small_poly(6), b in small_poly(3)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in small_poly(4), b in small_poly(4), c in small_poly(2)) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        prop_assert!(ac.rem(&g).unwrap().is_zero());
        prop_assert!(bc.rem(&g).unwrap().is_zero());
        prop_assert!(g.rem(&c).unwrap().is_zero());
    }

    #[test]
    fn isolation_finds_every_rational_root(roots in prop::collection::btree_set(-20i64..=20, 1..6)) {
        let p = roots.iter().fold(Poly::one(), |acc, &r| &acc * &Poly::linear_root(&int(r)));
        let found = sturm_isolate(&p);
        prop_assert_eq!(found.len(), roots.len());
        for x in &found {
            let q = x.to_rational().expect("rational root recognized");
            prop_assert!(roots.contains(&q.numer().try_into().unwrap()));
            prop_assert!(q.denom().is_one());
        }
    }

    #[test]
    fn refinement_keeps_the_root(p in small_poly(5), k in 4u32..30) {
        prop_assume!(!p.is_zero());
        let w = rat::pow2_neg(k);
        for x in sturm_isolate(&p) {
            let y: AlgebraicReal = x.refine(&w);
            prop_assert!(y.width() <= w || y.to_rational().is_some());
            prop_assert!(y.same_root(&x));
        }
    }

    #[test]
    fn krein_array_text_round_trip(bc in prop::collection::vec((1i64..9, 1i64..9), 1..6)) {
        let b: Vec<Rat> = bc.iter().map(|&(b, _)| int(b)).collect();
        let c: Vec<Rat> = bc.iter().map(|&(_, c)| int(c)).collect();
        if let Ok(k) = KreinArray::new(b, c) {
            prop_assert_eq!(KreinArray::parse(&k.to_string()).unwrap(), k);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn factorization_identity_on_valid_params(p in d6_params()) {
        prop_assert!(v7_factorization_check(&p).difference.is_zero());
    }

    #[test]
    fn certificates_round_trip_and_bound_x1(p in d6_params()) {
        let cert = certify_infeasible(&p).unwrap();
        let text = cert.to_json();
        let back = Certificate::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert!(cert.x1_enclosure.lo > &p.m - Rat::one());
        prop_assert!(cert.x1_enclosure.hi < p.m);
        prop_assert!(!cert.alpha.is_zero());
    }
}
