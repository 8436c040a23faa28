use std::cmp::Ordering;

use super::Symbol;

/// A power product, stored as `(symbol, exponent)` pairs sorted by symbol.
/// Exponents are never zero; the empty monomial is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(symbol: Symbol) -> Self {
        Monomial(vec![(symbol, 1)])
    }

    pub fn from_exponents(exponents: impl IntoIterator<Item = (Symbol, u32)>) -> Self {
        let mut pairs: Vec<(Symbol, u32)> = Vec::new();
        for (s, e) in exponents {
            if e == 0 {
                continue;
            }
            match pairs.iter_mut().find(|(t, _)| *t == s) {
                Some((_, f)) => *f += e,
                None => pairs.push((s, e)),
            }
        }
        pairs.sort_unstable_by_key(|&(s, _)| s);
        Monomial(pairs)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn exponent(&self, symbol: Symbol) -> u32 {
        self.0
            .binary_search_by_key(&symbol, |&(s, _)| s)
            .map_or(0, |i| self.0[i].1)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().map(|&(s, _)| s)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(s, e)| (s, e * k)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(s, e)| other.exponent(s) >= e)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let pairs = other
            .0
            .iter()
            .filter_map(|&(s, e)| {
                let rest = e - self.exponent(s);
                (rest > 0).then_some((s, rest))
            })
            .collect();
        Some(Monomial(pairs))
    }

    /// The monomial with `symbol` removed, together with its exponent.
    pub fn split_off(&self, symbol: Symbol) -> (u32, Monomial) {
        let e = self.exponent(symbol);
        let rest = self
            .0
            .iter()
            .copied()
            .filter(|&(s, _)| s != symbol)
            .collect();
        (e, Monomial(rest))
    }

    /// Lexicographic comparison with `X > Y > Z > T > U > V > c0 > ...`,
    /// restricted to symbols accepted by `keep`.
    pub fn cmp_lex_by(&self, other: &Monomial, keep: impl Fn(Symbol) -> bool) -> Ordering {
        let mut a = self.0.iter().filter(|(s, _)| keep(*s));
        let mut b = other.0.iter().filter(|(s, _)| keep(*s));
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(sa, ea)), Some(&(sb, eb))) => {
                    if sa != sb {
                        // the side holding the earlier symbol has the larger exponent there
                        return if sa < sb {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
        }
    }

    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.cmp_lex_by(other, |_| true)
    }

    pub fn cmp_grlex(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.cmp_lex(other))
    }
}

/// Monomials are totally ordered by graded lexicographic order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Symbol::*;

    fn m(pairs: &[(Symbol, u32)]) -> Monomial {
        Monomial::from_exponents(pairs.iter().copied())
    }

    #[test]
    fn product_and_division() {
        let a = m(&[(X, 2), (Y, 1)]);
        let b = m(&[(Y, 2), (Z, 1), (Param(3), 1)]);
        let ab = a.mul(&b);
        assert_eq!(ab, m(&[(X, 2), (Y, 3), (Z, 1), (Param(3), 1)]));
        assert_eq!(a.divide_into(&ab), Some(b.clone()));
        assert_eq!(b.divide_into(&a), None);
        assert_eq!(ab.total_degree(), 7);
        assert_eq!(m(&[(X, 0)]), Monomial::one());
    }

    #[test]
    fn orders() {
        let x = Monomial::var(X);
        let y2 = m(&[(Y, 2)]);
        let t3 = m(&[(T, 3)]);
        assert_eq!(x.cmp_lex(&y2), Ordering::Greater);
        assert_eq!(x.cmp_grlex(&y2), Ordering::Less);
        assert_eq!(y2.cmp_grlex(&t3), Ordering::Less);
        assert_eq!(
            m(&[(X, 1), (Z, 1)]).cmp_lex(&m(&[(X, 1), (T, 4)])),
            Ordering::Greater
        );
        assert_eq!(
            Monomial::one().cmp(&Monomial::var(Param(0))),
            Ordering::Less
        );
    }
}
