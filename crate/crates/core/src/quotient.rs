//! The rings `B/(X^2*Y + g)` with `B = k[X,Y,Z,T]` and `g` free of `Y`.
//!
//! Elements are stored in canonical form: no monomial is divisible by
//! `X^2*Y`. Those monomials form a basis of the quotient (over `k`, and over
//! `k[U]`, `k[U,V]` since `U` and `V` are inert), so canonical forms are
//! unique and equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{var, Monomial, Polynomial, Symbol};

/// How the relation was specified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaMode {
    /// `eta` with explicit rational coefficients.
    Concrete,
    /// `eta = c0 + c1*x + ... + cn*x^n` with formal parameters.
    Generic { degree: u8 },
}

/// A principal quotient `B/(X^2*Y + g)` whose relation passed the primality check.
#[derive(Clone, Debug)]
pub struct QuotientRingSpec {
    g: Polynomial,
    relation: Polynomial,
    mode: EtaMode,
}

impl PartialEq for QuotientRingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g
    }
}

impl Eq for QuotientRingSpec {}

fn x2y() -> Polynomial {
    var(Symbol::X).pow(2) * var(Symbol::Y)
}

/// `c0 + c1*X + ... + cn*X^n`.
pub fn generic_eta(degree: u8) -> Polynomial {
    (0..=degree)
        .map(|i| var(Symbol::Param(i)) * var(Symbol::X).pow(u32::from(i)))
        .fold(Polynomial::zero(), |acc, t| acc + t)
}

impl QuotientRingSpec {
    /// Validates `X^2*Y + g`. Since the relation is linear in `Y`, it is
    /// prime exactly when `gcd(X^2, g) = 1`, i.e. when `g(0, Z, T) != 0`.
    pub fn new(g: Polynomial, mode: EtaMode) -> Result<Arc<Self>> {
        if g.mentions(Symbol::Y) {
            return Err(Error::ContainsY(g.to_string()));
        }
        let at_zero = g.substitute_one(Symbol::X, &Polynomial::zero());
        if at_zero.is_zero() {
            let cofactor = g
                .exact_divide(&var(Symbol::X), Default::default())?
                .expect("X divides g when g(0,Z,T) = 0");
            let inner = var(Symbol::X) * var(Symbol::Y) + cofactor;
            return Err(Error::NotPrime {
                witness: format!("x*({inner})"),
            });
        }
        let relation = x2y() + &g;
        Ok(Arc::new(QuotientRingSpec { g, relation, mode }))
    }

    /// `R_eta = B/(X^2*Y + Z^2 + T^3 + eta(X))`. The mode is generic when
    /// `eta` carries parameters.
    pub fn translate(eta: &Polynomial) -> Result<Arc<Self>> {
        let mode = match (0..=crate::poly::MAX_PARAM_INDEX)
            .rev()
            .find(|&i| eta.mentions(Symbol::Param(i)))
        {
            Some(top) => EtaMode::Generic { degree: top },
            None => EtaMode::Concrete,
        };
        Self::new(kr_base() + eta, mode)
    }

    /// `R_eta` for the generic `eta` of the given degree.
    pub fn generic(degree: u8) -> Arc<Self> {
        Self::new(kr_base() + generic_eta(degree), EtaMode::Generic { degree })
            .expect("c0 keeps Z^2 + T^3 + eta(0) nonzero")
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    /// `X^2*Y + g`.
    pub fn relation(&self) -> &Polynomial {
        &self.relation
    }

    pub fn mode(&self) -> EtaMode {
        self.mode
    }

    /// Rewrites `X^2*Y -> -g` until no monomial is divisible by `X^2*Y`,
    /// always reducing the terms of highest `Y`-degree first. Each rewrite
    /// lowers the `Y`-degree of the rewritten term, so this terminates.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let neg_g = -&self.g;
        let mut powers = vec![Polynomial::one(), neg_g.clone()];
        let mut done = Polynomial::zero();
        let mut pending: BTreeMap<u32, Polynomial> = BTreeMap::new();

        let route = |m: Monomial,
                     c: crate::poly::Rational,
                     done: &mut Polynomial,
                     pending: &mut BTreeMap<u32, Polynomial>| {
            if is_reducible(&m) {
                pending
                    .entry(m.exponent(Symbol::Y))
                    .or_default()
                    .add_term(m, c);
            } else {
                done.add_term(m, c);
            }
        };
        for (m, c) in p.terms() {
            route(m.clone(), c.clone(), &mut done, &mut pending);
        }
        while let Some((_, batch)) = pending.pop_last() {
            for (m, c) in batch.into_terms() {
                let k = (m.exponent(Symbol::X) / 2).min(m.exponent(Symbol::Y));
                while powers.len() <= k as usize {
                    let next = powers.last().unwrap() * &neg_g;
                    powers.push(next);
                }
                let shift = Monomial::from_exponents([(Symbol::X, 2 * k), (Symbol::Y, k)]);
                let rest = shift.divide_into(&m).expect("X^2k*Y^k divides m");
                for (n, d) in powers[k as usize].terms() {
                    route(
                        n.mul(&rest),
                        crate::poly::coeff_mul(d, &c),
                        &mut done,
                        &mut pending,
                    );
                }
            }
        }
        done
    }

    pub fn element(self: &Arc<Self>, p: &Polynomial) -> QuotientElement {
        QuotientElement {
            rep: self.normal_form(p),
            ring: Arc::clone(self),
        }
    }

    pub fn generator(self: &Arc<Self>, s: Symbol) -> QuotientElement {
        self.element(&var(s))
    }

    pub fn is_canonical(p: &Polynomial) -> bool {
        p.terms().all(|(m, _)| !is_reducible(m))
    }
}

impl fmt::Display for QuotientRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[x,y,z,t]/({})", self.relation)
    }
}

/// `Z^2 + T^3`.
pub fn kr_base() -> Polynomial {
    var(Symbol::Z).pow(2) + var(Symbol::T).pow(3)
}

fn is_reducible(m: &Monomial) -> bool {
    m.exponent(Symbol::X) >= 2 && m.exponent(Symbol::Y) >= 1
}

/// An element of a quotient ring, held by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientElement {
    rep: Polynomial,
    ring: Arc<QuotientRingSpec>,
}

impl QuotientElement {
    pub fn rep(&self) -> &Polynomial {
        &self.rep
    }

    pub fn ring(&self) -> &Arc<QuotientRingSpec> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn check_ring(&self, other: &QuotientElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Equality modulo the relation.
    pub fn equals(&self, other: &QuotientElement) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.rep == other.rep)
    }

    pub fn plus(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.check_ring(other)?;
        Ok(QuotientElement {
            rep: &self.rep + &other.rep,
            ring: Arc::clone(&self.ring),
        })
    }

    pub fn minus(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.check_ring(other)?;
        Ok(QuotientElement {
            rep: &self.rep - &other.rep,
            ring: Arc::clone(&self.ring),
        })
    }

    pub fn times(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.check_ring(other)?;
        Ok(self.ring.element(&(&self.rep * &other.rep)))
    }

    pub fn pow(&self, k: u32) -> QuotientElement {
        let mut acc = self.ring.element(&Polynomial::one());
        for _ in 0..k {
            acc = self.ring.element(&(&acc.rep * &self.rep));
        }
        acc
    }

    /// Splits the element as `h + sum_{j=1}^{eps} (u_j*x + v_j)*y^j`.
    ///
    /// In canonical form every monomial with positive `y`-degree has
    /// `x`-degree at most one, so grouping by `y`-degree and then by
    /// `x`-degree reads off the pieces directly.
    pub fn decompose(&self) -> TrickDecomposition {
        let mut h = Polynomial::zero();
        let mut pairs: Vec<(Polynomial, Polynomial)> = Vec::new();
        for (m, c) in self.rep.terms() {
            let (j, rest) = m.split_off(Symbol::Y);
            if j == 0 {
                h.add_term(m.clone(), c.clone());
                continue;
            }
            let j = j as usize;
            if pairs.len() < j {
                pairs.resize(j, (Polynomial::zero(), Polynomial::zero()));
            }
            let (e, zt) = rest.split_off(Symbol::X);
            match e {
                0 => pairs[j - 1].1.add_term(zt, c.clone()),
                1 => pairs[j - 1].0.add_term(zt, c.clone()),
                _ => unreachable!("canonical monomial {m} has x^2*y"),
            }
        }
        TrickDecomposition {
            h,
            epsilon: pairs.len(),
            pairs,
        }
    }

    pub fn member_of(&self, sub: Subring) -> bool {
        subring_member(&self.rep, sub)
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

/// `p = h + sum_{j=1}^{epsilon} (u_j*x + v_j)*y^j` with `h` in `k[x,z,t]`
/// and `u_j, v_j` in `k[z,t]`; `pairs[j-1] = (u_j, v_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrickDecomposition {
    pub h: Polynomial,
    pub pairs: Vec<(Polynomial, Polynomial)>,
    pub epsilon: usize,
}

impl TrickDecomposition {
    pub fn recompose(&self) -> Polynomial {
        let (x, y) = (var(Symbol::X), var(Symbol::Y));
        let mut out = self.h.clone();
        for (j, (u, v)) in self.pairs.iter().enumerate() {
            out += (u * &x + v) * y.pow(j as u32 + 1);
        }
        out
    }
}

impl fmt::Display for TrickDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "epsilon = {}", self.epsilon)?;
        write!(f, "h = {}", self.h)?;
        for (j, (u, v)) in self.pairs.iter().enumerate() {
            write!(f, "\nu{0} = {1}\nv{0} = {2}", j + 1, u, v)?;
        }
        Ok(())
    }
}

/// The polynomial subrings generated by a subset of `x, z, t` over `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subring {
    K,
    KX,
    KZT,
    KXT,
    KXZ,
    KXZT,
}

impl Subring {
    pub const ALL: [Subring; 6] = [
        Subring::K,
        Subring::KX,
        Subring::KZT,
        Subring::KXT,
        Subring::KXZ,
        Subring::KXZT,
    ];

    pub fn generators(self) -> &'static [Symbol] {
        use Symbol::*;
        match self {
            Subring::K => &[],
            Subring::KX => &[X],
            Subring::KZT => &[Z, T],
            Subring::KXT => &[X, T],
            Subring::KXZ => &[X, Z],
            Subring::KXZT => &[X, Z, T],
        }
    }

    pub fn allows(self, s: Symbol) -> bool {
        s.is_param() || self.generators().contains(&s)
    }
}

impl fmt::Display for Subring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.generators().iter().map(ToString::to_string).collect();
        if names.is_empty() {
            f.write_str("k")
        } else {
            write!(f, "k[{}]", names.join(","))
        }
    }
}

/// Membership of a canonical representative in a subring. Monomials of the
/// subring are canonical, so this is a support check.
pub fn subring_member(rep: &Polynomial, sub: Subring) -> bool {
    rep.uses_only(|s| sub.allows(s))
}
