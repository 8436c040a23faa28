#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use krw::poly::{parse, Monomial, Polynomial, Rational, Symbol, SymbolSet};
use krw::quotient::QuotientRingSpec;
use num_bigint::BigInt;
use proptest::prelude::*;

pub use Symbol::{Param, T, U, V, X, Y, Z};

pub fn p(text: &str) -> Polynomial {
    parse(text, &SymbolSet::all()).unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn term_strategy(
    symbols: &'static [Symbol],
    max_exp: u32,
) -> impl Strategy<Value = (Monomial, Rational)> {
    (
        proptest::collection::vec(0..=max_exp, symbols.len()),
        -6i64..=6,
        prop_oneof![4 => Just(1i64), 1 => 2i64..=5],
    )
        .prop_map(move |(exps, n, d)| {
            let m = Monomial::from_exponents(symbols.iter().copied().zip(exps));
            (m, q(n, d))
        })
}

/// Random polynomials over `symbols` with small exponents and rational
/// coefficients.
pub fn poly_in(
    symbols: &'static [Symbol],
    max_exp: u32,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(term_strategy(symbols, max_exp), 0..=max_terms)
        .prop_map(Polynomial::from_terms)
}

pub const MAIN: &[Symbol] = &[X, Y, Z, T];
pub const MAIN_C0: &[Symbol] = &[X, Y, Z, T, Param(0)];
pub const EVERYTHING: &[Symbol] = &[X, Y, Z, T, U, V, Param(0), Param(1)];
pub const ZT: &[Symbol] = &[Z, T];

pub fn nonzero(s: impl Strategy<Value = Polynomial>) -> impl Strategy<Value = Polynomial> {
    s.prop_filter("nonzero", |p| !p.is_zero())
}

/// A few rings used across the property tests.
pub fn ring_strategy() -> impl Strategy<Value = Arc<QuotientRingSpec>> {
    prop_oneof![
        Just(QuotientRingSpec::generic(0)),
        Just(QuotientRingSpec::generic(2)),
        Just(QuotientRingSpec::translate(&p("x")).unwrap()),
        Just(QuotientRingSpec::translate(&p("1 - 3*x^3")).unwrap()),
    ]
}

/// Dense oracle: multiplies term lists by convolution of exponent vectors
/// over the fixed symbol order `X Y Z T U V c0 c1`, without touching
/// `Polynomial` arithmetic.
pub fn oracle_mul(
    a: &[(Rational, [u32; 8])],
    b: &[(Rational, [u32; 8])],
) -> BTreeMap<[u32; 8], Rational> {
    let mut out: BTreeMap<[u32; 8], Rational> = BTreeMap::new();
    for (ca, ea) in a {
        for (cb, eb) in b {
            let mut e = [0u32; 8];
            for i in 0..8 {
                e[i] = ea[i] + eb[i];
            }
            *out.entry(e).or_insert_with(|| q(0, 1)) += ca * cb;
        }
    }
    out.retain(|_, c| *c != q(0, 1));
    out
}

pub fn dense(p: &Polynomial) -> BTreeMap<[u32; 8], Rational> {
    p.terms()
        .map(|(m, c)| {
            let mut e = [0u32; 8];
            for (i, s) in EVERYTHING.iter().enumerate() {
                e[i] = m.exponent(*s);
            }
            (e, c.clone())
        })
        .collect()
}

pub fn terms_of(p: &Polynomial) -> Vec<(Rational, [u32; 8])> {
    dense(p).into_iter().map(|(e, c)| (c, e)).collect()
}
