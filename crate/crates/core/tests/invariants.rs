//! Randomized identities: monoid action, divisibility, colon composition,
//! and the pivot recursion checked from outside the oracle.

use equichain::hilbert::{hilbert_quotient, series_prefix};
use equichain::ideal::MonomialIdeal;
use equichain::monomial::{apply_inc_map, enumerate_inc_maps, inc_divides, Monomial};
use proptest::prelude::*;

const ROWS: u32 = 3;
const WIDTH: u32 = 4;

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1..=ROWS, 1..=WIDTH, 1..=2u32), 0..5).prop_map(|factors| {
        factors
            .into_iter()
            .fold(Monomial::one(ROWS), |m, (r, c, e)| m.times_var(r, c, e))
    })
}

fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(arb_monomial(), 1..5)
        .prop_map(|gens| MonomialIdeal::new(gens, ROWS, WIDTH).unwrap())
}

proptest! {
    #[test]
    fn action_is_multiplicative(u in arb_monomial(), v in arb_monomial(), i in 0..=2u32) {
        let m = u.max_column().max(v.max_column()).max(i).max(1);
        for pi in enumerate_inc_maps(i, m, m + 2).unwrap() {
            let lhs = apply_inc_map(&pi, &u.mul(&v)).unwrap();
            let rhs = apply_inc_map(&pi, &u).unwrap().mul(&apply_inc_map(&pi, &v).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn action_respects_composition(u in arb_monomial(), i in 0..=2u32) {
        let m = u.max_column().max(i).max(1);
        let inner = enumerate_inc_maps(i, m, m + 1).unwrap();
        let outer = enumerate_inc_maps(i, m + 1, m + 2).unwrap();
        for rho in &inner {
            for pi in &outer {
                let composed = pi.compose_on(rho, m).unwrap();
                let lhs = apply_inc_map(&composed, &u).unwrap();
                let rhs = apply_inc_map(pi, &apply_inc_map(rho, &u).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn divisibility_witness_divides(u in arb_monomial(), v in arb_monomial(), i in 0..=2u32) {
        prop_assert!(inc_divides(i, &u, &u).is_some());
        if let Some(pi) = inc_divides(i, &u, &v) {
            prop_assert!(apply_inc_map(&pi, &u).unwrap().divides(&v));
        }
        // divisibility is preserved by padding the target
        let w = v.mul(&u);
        prop_assert!(inc_divides(i, &u, &w).is_some());
    }

    #[test]
    fn colon_composes(j in arb_ideal(), u in arb_monomial(), v in arb_monomial()) {
        prop_assert_eq!(j.colon(&u).colon(&v), j.colon(&u.mul(&v)));
    }

    #[test]
    fn pivot_recursion_holds_externally(j in arb_ideal(), m in arb_monomial()) {
        prop_assume!(!m.is_one());
        // H(R/J) = H(R/(J + m)) + t^deg(m) H(R/(J : m))
        let whole = hilbert_quotient(&j);
        let plus = hilbert_quotient(&j.add(&MonomialIdeal::new(vec![m.clone()], ROWS, WIDTH).unwrap()).unwrap());
        let colon = hilbert_quotient(&j.colon(&m));
        let bound = 8;
        let lhs = series_prefix(&whole, bound);
        let a = series_prefix(&plus, bound);
        let b = series_prefix(&colon, bound);
        let d = m.degree() as usize;
        for (n, coeff) in lhs.iter().enumerate() {
            let shifted = if n >= d { b[n - d].clone() } else { 0.into() };
            prop_assert_eq!(coeff.clone(), a[n].clone() + shifted, "degree {}", n);
        }
    }
}
