use std::cmp::Ordering;

use super::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grlex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp_lex(b),
            MonomialOrder::Grlex => a.cmp_grlex(b),
        }
    }

    fn leading(self, p: &Polynomial) -> Option<(&Monomial, &Rational)> {
        match self {
            MonomialOrder::Grlex => p.leading_term(),
            MonomialOrder::Lex => p.terms().max_by(|a, b| a.0.cmp_lex(b.0)),
        }
    }
}

impl Polynomial {
    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// Division with remainder by the single polynomial `d`: the remainder
    /// is zero iff `d` divides `self`. A leading term not divisible by the
    /// leading term of `d` would land in the remainder and can never be
    /// cancelled later, so the loop stops at the first one.
    pub fn exact_divide(&self, d: &Polynomial, order: MonomialOrder) -> Result<Option<Polynomial>> {
        let (lm_d, lc_d) = order.leading(d).ok_or(Error::DivisorZero)?;
        let (lm_d, lc_d) = (lm_d.clone(), lc_d.clone());
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero();
        while let Some((lm, lc)) = order.leading(&rest) {
            let Some(m) = lm_d.divide_into(lm) else {
                return Ok(None);
            };
            let c = lc / &lc_d;
            rest -= &d.mul_term(&m, &c);
            quotient.add_term(m, c);
        }
        Ok(Some(quotient))
    }

    /// `self` is a multiple of `d`.
    pub fn divisible_by(&self, d: &Polynomial) -> Result<bool> {
        Ok(self.exact_divide(d, MonomialOrder::Grlex)?.is_some())
    }
}
