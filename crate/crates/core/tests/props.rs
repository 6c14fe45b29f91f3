//! Property-based invariants: exact cyclotomic field arithmetic, cochain
//! differentials, and Smith normal form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use std::sync::Arc;

use gfrob_core::cohomology::{d1, d2, Cochain1};
use gfrob_core::groups::{make_group, Group, GroupSpec};
use gfrob_core::intmat::{smith_normal_form, IntMat, SnfOptions};
use gfrob_core::Cyclotomic;

const ORDERS: &[u64] = &[1, 2, 3, 4, 6, 8, 12, 24];

fn arb_cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (
        0..ORDERS.len(),
        proptest::collection::vec((0i64..24, -3i64..4, 1i64..4), 0..3),
    )
        .prop_map(|(oi, terms)| {
            let order = ORDERS[oi];
            let mut acc = Cyclotomic::zero(1);
            for (exp, num, den) in terms {
                let root = Cyclotomic::root(order, exp);
                let q = BigRational::new(BigInt::from(num), BigInt::from(den));
                acc = acc.add(&root.scale(&q));
            }
            acc
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative_and_commutative(
        a in arb_cyclotomic(),
        b in arb_cyclotomic(),
        c in arb_cyclotomic(),
    ) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.sub(&a), Cyclotomic::zero(1));
    }

    #[test]
    fn multiplication_distributes(
        a in arb_cyclotomic(),
        b in arb_cyclotomic(),
        c in arb_cyclotomic(),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&Cyclotomic::one()), a);
    }

    #[test]
    fn nonzero_elements_invert(a in arb_cyclotomic()) {
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!(a.mul(&inv).is_one());
        }
    }

    #[test]
    fn embedding_is_multiplicative(
        a in arb_cyclotomic(),
        b in arb_cyclotomic(),
    ) {
        let n = 24;
        let ea = a.embed(n).unwrap();
        let eb = b.embed(n).unwrap();
        prop_assert_eq!(ea.mul(&eb), a.mul(&b).embed(n).unwrap());
        prop_assert_eq!(ea.add(&eb), a.add(&b).embed(n).unwrap());
    }

    #[test]
    fn coboundaries_are_cocycles(
        gi in 0usize..4,
        m in 1u64..7,
        raw in proptest::collection::vec(0u64..60, 12),
    ) {
        let specs = ["cyclic 3", "cyclic 4", "product(cyclic 2, cyclic 2)", "symmetric 3"];
        let g: Group = Arc::new(make_group(&GroupSpec::parse(specs[gi]).unwrap()).unwrap());
        let mut values = vec![0u64; g.size];
        for (i, v) in values.iter_mut().enumerate().skip(1) {
            *v = raw[i % raw.len()] % m;
        }
        values[g.identity] = 0;
        let beta = Cochain1::new(g.clone(), m, values).unwrap();
        prop_assert!(d2(&d1(&beta)).is_zero());
    }

    #[test]
    fn smith_normal_form_invariants(
        entries in proptest::collection::vec(-9i64..10, 12),
    ) {
        let a = IntMat::from_fn(3, 4, |i, j| entries[i * 4 + j]);
        let snf = smith_normal_form(&a, SnfOptions {
            want_u: true,
            want_u_inv: false,
            want_v: true,
            want_v_inv: false,
        });
        let u = snf.u.as_ref().unwrap();
        let v = snf.v.as_ref().unwrap();
        let uav = u.mul(&a).mul(v);
        for i in 0..3 {
            for j in 0..4 {
                let expect = if i == j {
                    snf.diag[i].clone()
                } else {
                    BigInt::zero()
                };
                prop_assert_eq!(&uav[(i, j)], &expect);
            }
        }
        // successive divisibility
        for w in snf.diag.windows(2) {
            if !w[0].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            } else {
                prop_assert!(w[1].is_zero());
            }
        }
    }
}
