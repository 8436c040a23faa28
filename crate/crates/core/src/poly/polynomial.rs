use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{coeff_add_assign, coeff_mul, Monomial, Rational, Symbol};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by monomial (graded lexicographic order)
/// and never store a zero coefficient, so structural equality is ring
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn integer(n: i64) -> Self {
        Polynomial::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(symbol: Symbol) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(symbol))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                coeff_add_assign(o.get_mut(), &c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree_in(&self, symbol: Symbol) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(symbol))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn mentions(&self, symbol: Symbol) -> bool {
        self.terms.keys().any(|m| m.exponent(symbol) > 0)
    }

    /// True iff every monomial only uses symbols accepted by `allowed`.
    pub fn uses_only(&self, allowed: impl Fn(Symbol) -> bool) -> bool {
        self.terms.keys().all(|m| m.symbols().all(&allowed))
    }

    /// Coefficient of `symbol^k`, as a polynomial in the remaining symbols.
    pub fn coefficient_of(&self, symbol: Symbol, k: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(symbol);
            if e == k {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Coefficients of the powers of `symbol`, indexed by exponent.
    pub fn coefficients_in(&self, symbol: Symbol) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); self.degree_in(symbol) as usize + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(symbol);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), coeff_mul(d, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(n, d)| (n.mul(m), coeff_mul(d, c)))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Applies the ring homomorphism sending each symbol in `assignment` to
    /// its image and fixing every other symbol.
    pub fn substitute(&self, assignment: &BTreeMap<Symbol, Polynomial>) -> Polynomial {
        let mut powers: HashMap<(Symbol, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Polynomial::one();
            for &(s, e) in m.exponents() {
                match assignment.get(&s) {
                    None => kept.push((s, e)),
                    Some(image) => {
                        let power = powers.entry((s, e)).or_insert_with(|| image.pow(e));
                        acc = &acc * &*power;
                    }
                }
            }
            out += acc.mul_term(&Monomial::from_exponents(kept), c);
        }
        out
    }

    /// Renames one symbol into another polynomial; shorthand for a single
    /// substitution.
    pub fn substitute_one(&self, symbol: Symbol, image: &Polynomial) -> Polynomial {
        self.substitute(&BTreeMap::from([(symbol, image.clone())]))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Terms accepted by `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial, &Rational) -> bool) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, c)| keep(m, c))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl From<Symbol> for Polynomial {
    fn from(s: Symbol) -> Self {
        Polynomial::var(s)
    }
}

impl std::ops::AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
            return;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl std::ops::AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl std::ops::SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * rhs.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let c = coeff_mul(ca, cb);
                match acc.entry(a.mul(b)) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        coeff_add_assign(o.get_mut(), &c)
                    }
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                self.$f(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
