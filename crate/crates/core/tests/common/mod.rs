#![allow(dead_code)]

use fmethod_core::pbw::UEnv;
use fmethod_core::ring::{rat, ParamPoly};
use fmethod_core::weyl::{Space, WeylElement, WeylMono};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, 1i64..=4)
}

/// Polynomials in `s, l1, l2` with up to four terms of degree ≤ 2 per variable.
pub fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((small_rational(), 0u32..=2, 0u32..=2, 0u32..=2), 0..4).prop_map(
        |terms| {
            terms
                .into_iter()
                .fold(ParamPoly::zero(), |acc, ((n, d), a, b, c)| {
                    let mono =
                        ParamPoly::s().pow(a) * ParamPoly::l1().pow(b) * ParamPoly::l2().pow(c);
                    acc + mono.scale(&rat(n, d))
                })
        },
    )
}

fn exps3(max_total: u32) -> impl Strategy<Value = [u32; 3]> {
    (0..=max_total, 0..=max_total, 0..=max_total)
        .prop_filter("total degree", move |(a, b, c)| a + b + c <= max_total)
        .prop_map(|(a, b, c)| [a, b, c])
}

/// Weyl elements in three variables with total degree ≤ 6.
pub fn weyl(space: Space) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec((exps3(3), exps3(3), small_rational()), 0..4).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(WeylElement::zero(3, space), |acc, (mono, deriv, (n, d))| {
                let t = WeylElement::term(
                    3,
                    space,
                    WeylMono {
                        mono: mono.to_vec(),
                        deriv: deriv.to_vec(),
                    },
                    ParamPoly::constant(rat(n, d)),
                );
                acc.add(&t).unwrap()
            })
    })
}

/// Polynomials in three variables of total degree ≤ 4.
pub fn poly(space: Space) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec((exps3(4), small_rational()), 0..4).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(WeylElement::zero(3, space), |acc, (mono, (n, d))| {
                let t = WeylElement::monomial(3, space, &mono, ParamPoly::constant(rat(n, d)));
                acc.add(&t).unwrap()
            })
    })
}

/// Elements of `U(n-)` with PBW degree ≤ `max`.
pub fn nminus(max: u32) -> impl Strategy<Value = UEnv> {
    prop::collection::vec((exps3(max), small_rational()), 0..4).prop_map(|terms| {
        terms.into_iter().fold(UEnv::zero(), |acc, (e, (n, d))| {
            let u = UEnv::nminus(e[0] as u8, e[1] as u8, e[2] as u8);
            acc.add(&u.scale_rational(&rat(n, d)))
        })
    })
}

/// Elements of `U(sl3)` touching all eight generators, total degree ≤ `max`.
pub fn uenv(max: u32) -> impl Strategy<Value = UEnv> {
    prop::collection::vec((prop::array::uniform8(0u8..=2), small_rational()), 0..3).prop_map(
        move |terms| {
            terms
                .into_iter()
                .filter(|(e, _)| e.iter().map(|&x| u32::from(x)).sum::<u32>() <= max)
                .fold(UEnv::zero(), |acc, (e, (n, d))| {
                    acc.add(&UEnv::term(e, ParamPoly::constant(rat(n, d))))
                })
        },
    )
}
