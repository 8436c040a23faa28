//! Text rendering in the expression grammar accepted by [`super::parse`].
//!
//! Terms are listed by ascending `U`-degree, then ascending `V`-degree, then
//! descending lexicographic order with `x > y > z > t > c0 > c1 > ...`. This
//! reads elements of `R[U]` as polynomials in `U` with coefficients written
//! the usual way, e.g. `y + 2*z*U - x^2*U^2`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed};

use super::{Monomial, Polynomial, Rational, Symbol};

pub(crate) fn display_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exponent(Symbol::U)
        .cmp(&b.exponent(Symbol::U))
        .then_with(|| a.exponent(Symbol::V).cmp(&b.exponent(Symbol::V)))
        .then_with(|| b.cmp_lex_by(a, |s| !s.is_aux()))
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    // main variables first, then parameters, then U and V
    let rank = |s: Symbol| match s {
        Symbol::U => 1,
        Symbol::V => 2,
        _ => 0,
    };
    let mut factors: Vec<(Symbol, u32)> = m.exponents().to_vec();
    factors.sort_by_key(|&(s, _)| (rank(s), s));
    for (i, (s, e)) in factors.into_iter().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        if e == 1 {
            write!(f, "{s}")?;
        } else {
            write!(f, "{s}^{e}")?;
        }
    }
    Ok(())
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        write_monomial(f, self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms().collect();
        terms.sort_by(|a, b| display_cmp(a.0, b.0));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write_rational(f, &abs)?;
            } else if abs.is_one() {
                write_monomial(f, m)?;
            } else {
                write_rational(f, &abs)?;
                f.write_str("*")?;
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}
