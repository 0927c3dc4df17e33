//! Property tests for cyclotomic arithmetic and pc group multiplication.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use ratrep_core::catalog::{odd_catalog, two_group_catalog};
use ratrep_core::cyclotomic::{cyclotomic_poly, divisors, euler_phi, units};
use ratrep_core::{CycNum, PcGroup, Rational};

const CONDUCTORS: [u64; 12] = [1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 25, 27];

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn element(n: u64) -> impl Strategy<Value = CycNum> {
    prop::collection::vec(small_rational(), euler_phi(n) as usize).prop_map(move |c| CycNum::from_coeffs(n, &c))
}

fn triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| (element(n), element(n), element(n)))
}

fn unit_pair() -> impl Strategy<Value = (u64, u64, u64, CycNum)> {
    prop::sample::select(CONDUCTORS[1..].to_vec()).prop_flat_map(|n| {
        let us = units(n);
        (Just(n), prop::sample::select(us.clone()), prop::sample::select(us), element(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        let n = a.order();
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &CycNum::one(n), a.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn inverses((a, b, _) in triple()) {
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(b.div_ref(&a).unwrap().mul_ref(&a), b.clone());
        }
        prop_assert!(CycNum::zero(a.order()).inv().is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn galois_composes((n, j, k, x) in unit_pair()) {
        let once = x.galois(((j * k) % n) as i64).unwrap();
        let twice = x.galois(k as i64).unwrap().galois(j as i64).unwrap();
        prop_assert_eq!(once, twice);
        let y = CycNum::zeta(n, 1).add_ref(&x);
        let hom = x.mul_ref(&y).galois(j as i64).unwrap();
        prop_assert_eq!(hom, x.galois(j as i64).unwrap().mul_ref(&y.galois(j as i64).unwrap()));
    }

    #[test]
    fn lift_then_lower((a, _, _) in triple(), m in 1u64..4) {
        let n = a.order();
        let big = n * [1, 2, 3, 5][m as usize];
        let l = a.lift(big);
        prop_assert_eq!(l.lower(n).unwrap(), a.clone());
        prop_assert_eq!(l.mul_ref(&l), a.mul_ref(&a).lift(big));
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn cyclotomic_polynomials_up_to_64() {
    for n in 1..=64u64 {
        let phi = cyclotomic_poly(n);
        assert_eq!(phi.len() as u64 - 1, euler_phi(n), "degree of Phi_{n}");
        assert!(phi.last().unwrap().is_one());
        let prod = divisors(n).into_iter().map(cyclotomic_poly).fold(vec![BigInt::one()], |a, b| poly_mul(&a, &b));
        let mut want = vec![BigInt::zero(); n as usize + 1];
        want[0] = BigInt::from(-1);
        want[n as usize] = BigInt::one();
        assert_eq!(prod, want, "x^{n} - 1");
        let root = phi
            .iter()
            .enumerate()
            .map(|(i, c)| CycNum::zeta(n, i as i64).scale(&Rational::from_integer(c.clone())))
            .fold(CycNum::zero(n), |acc, t| acc.add_ref(&t));
        assert!(root.is_zero(), "z{n} is a root of Phi_{n}");
    }
}

fn groups() -> &'static [PcGroup] {
    static G: OnceLock<Vec<PcGroup>> = OnceLock::new();
    G.get_or_init(|| {
        two_group_catalog().into_iter().chain(odd_catalog(3)).map(|id| id.build().unwrap()).collect()
    })
}

fn group_and_elements() -> impl Strategy<Value = (usize, u32, u32, u32)> {
    (0..groups().len()).prop_flat_map(|i| {
        let n = groups()[i].order() as u32;
        (Just(i), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5_000))]

    #[test]
    fn group_axioms((i, x, y, z) in group_and_elements()) {
        let g = &groups()[i];
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inv(x)), 0);
        prop_assert_eq!(g.mul(0, x), x);
        prop_assert_eq!(g.from_exps(&g.exps(x)), x);
        prop_assert_eq!(g.pow(x, g.element_order(x) as i64), 0);
        prop_assert_eq!(g.conj(g.mul(x, y), z), g.mul(g.conj(x, z), g.conj(y, z)));
    }
}
