//! Exact sparse multivariate polynomials over the rationals, with the
//! formal parameters `c0, c1, ...` as extra commuting indeterminates.

mod divide;
mod format;
mod monomial;
mod parse;
mod polynomial;
mod symbol;

pub use divide::MonomialOrder;
pub use monomial::Monomial;
pub use parse::parse;
pub use polynomial::Polynomial;
pub use symbol::{Symbol, SymbolSet, MAX_PARAM_INDEX};

/// Exact rational coefficient; always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `a * b`, skipping the gcd normalization when both are integers.
pub(crate) fn coeff_mul(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

/// `*a += b`, skipping the gcd normalization when both are integers.
pub(crate) fn coeff_add_assign(a: &mut Rational, b: &Rational) {
    if a.is_integer() && b.is_integer() {
        *a = Rational::from_integer(a.numer() + b.numer());
    } else {
        *a += b;
    }
}

/// Shorthand for `Polynomial::var`.
pub fn var(symbol: Symbol) -> Polynomial {
    Polynomial::var(symbol)
}
