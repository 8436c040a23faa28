use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{Monomial, Polynomial, Rational, Symbol};
use crate::quotient::{QuotientElement, QuotientRingSpec};

/// Highest `y`-exponent drawn for random monomials.
pub const MAX_SAMPLE_Y_DEGREE: u32 = 3;

/// Random elements with bounded degrees and small integer coefficients.
pub struct Sampler {
    rng: ChaCha8Rng,
    max_degree: u32,
    coefficient_bound: i64,
}

impl Sampler {
    pub fn new(rng: ChaCha8Rng, max_degree: u32, coefficient_bound: u32) -> Self {
        Sampler {
            rng,
            max_degree,
            coefficient_bound: i64::from(coefficient_bound),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn coefficient(&mut self) -> Rational {
        Rational::from_integer(BigInt::from(
            self.rng
                .gen_range(-self.coefficient_bound..=self.coefficient_bound),
        ))
    }

    fn nonzero_coefficient(&mut self) -> Rational {
        loop {
            let c = self.coefficient();
            if c != Rational::from_integer(0.into()) {
                return c;
            }
        }
    }

    fn draw(&mut self, symbols: &[(Symbol, u32)]) -> Polynomial {
        let terms = self.rng.gen_range(1..=4);
        let mut p = Polynomial::zero();
        for _ in 0..terms {
            let exps: Vec<(Symbol, u32)> = symbols
                .iter()
                .map(|&(s, bound)| (s, self.rng.gen_range(0..=bound)))
                .collect();
            let c = self.coefficient();
            p.add_term(Monomial::from_exponents(exps), c);
        }
        p
    }

    fn draw_nonzero(&mut self, symbols: &[(Symbol, u32)]) -> Polynomial {
        loop {
            let p = self.draw(symbols);
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// A random polynomial in `x, y, z, t` (possibly zero).
    pub fn polynomial(&mut self) -> Polynomial {
        let d = self.max_degree;
        self.draw(&[
            (Symbol::X, d),
            (Symbol::Y, MAX_SAMPLE_Y_DEGREE),
            (Symbol::Z, d),
            (Symbol::T, d),
        ])
    }

    /// A nonzero random element, redrawn until its canonical form is nonzero.
    pub fn element(&mut self, ring: &Arc<QuotientRingSpec>) -> QuotientElement {
        loop {
            let e = ring.element(&self.polynomial());
            if !e.is_zero() {
                return e;
            }
        }
    }

    pub fn zt(&mut self) -> Polynomial {
        let d = self.max_degree;
        self.draw(&[(Symbol::Z, d), (Symbol::T, d)])
    }

    pub fn nonzero_zt(&mut self) -> Polynomial {
        let d = self.max_degree;
        self.draw_nonzero(&[(Symbol::Z, d), (Symbol::T, d)])
    }

    pub fn nonzero_x(&mut self) -> Polynomial {
        let d = self.max_degree;
        self.draw_nonzero(&[(Symbol::X, d)])
    }

    /// Random concrete `eta` of degree at most `degree`.
    pub fn eta(&mut self, degree: u8) -> Polynomial {
        let mut p = Polynomial::zero();
        for i in 0..=u32::from(degree) {
            let c = self.coefficient();
            p.add_term(Monomial::from_exponents([(Symbol::X, i)]), c);
        }
        p
    }

    pub fn nonzero_constant(&mut self) -> Rational {
        self.nonzero_coefficient()
    }

    pub fn range(&mut self, lo: u32, hi: u32) -> u32 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }
}
