#![allow(dead_code)]

use proptest::prelude::*;
use riordan_core::exactnum::{rat, Cyclo, Rat};
use riordan_core::riordan::PolySpec;

pub fn q(n: i64, d: i64) -> Cyclo {
    Cyclo::from_rat(&rat(n, d))
}

pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

/// An element of `Q(ζ_N)` for one of a few small orders.
pub fn cyclo_in(order: usize) -> impl Strategy<Value = Cyclo> {
    prop::collection::vec(small_rat(), order).prop_map(move |raw| Cyclo::new(order, &raw).unwrap())
}

pub fn cyclo() -> impl Strategy<Value = Cyclo> {
    prop::sample::select(vec![1usize, 3, 4, 5, 6, 12]).prop_flat_map(cyclo_in)
}

/// A root of unity times a small rational, the shape of every interesting
/// coefficient in the families.
pub fn scaled_root(orders: Vec<usize>) -> impl Strategy<Value = Cyclo> {
    (prop::sample::select(orders), 0i64..60, small_rat())
        .prop_map(|(n, k, r)| &Cyclo::from_rat(&r) * &Cyclo::zeta(n, k).unwrap())
}

/// Polynomial of degree `≤ max_deg` with nonzero constant term.
pub fn poly_spec(order: usize, max_deg: usize) -> impl Strategy<Value = PolySpec<Cyclo>> {
    (cyclo_in(order), prop::collection::vec(cyclo_in(order), 0..=max_deg)).prop_filter_map(
        "constant term must be nonzero",
        |(a0, rest)| {
            let mut c = vec![a0];
            c.extend(rest);
            PolySpec::new(c).ok()
        },
    )
}
