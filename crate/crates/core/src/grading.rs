//! Integer weight gradings on `B`, the filtrations they induce on quotient
//! rings, degree functions and leading forms.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Symbol};
use crate::quotient::{EtaMode, QuotientElement, QuotientRingSpec};

/// Default bound on reduction steps in [`FiltrationSpec::degree_leading`].
pub const DEFAULT_ITERATION_CAP: usize = 10_000;

/// Integer weights on the symbols. Symbols without an entry have weight 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    name: String,
    weights: BTreeMap<Symbol, i64>,
}

impl Grading {
    pub fn new(name: impl Into<String>, weights: impl IntoIterator<Item = (Symbol, i64)>) -> Self {
        Grading {
            name: name.into(),
            weights: weights.into_iter().filter(|&(_, w)| w != 0).collect(),
        }
    }

    /// `-i1 + 2*i2` on `X^i1 Y^i2 Z^i3 T^i4`.
    pub fn omega1() -> Self {
        Grading::new("omega1", [(Symbol::X, -1), (Symbol::Y, 2)])
    }

    /// `6*i1 - 6*i2 + 3*i3 + 2*i4` on `X^i1 Y^i2 Z^i3 T^i4`.
    pub fn omega2() -> Self {
        Grading::new(
            "omega2",
            [
                (Symbol::X, 6),
                (Symbol::Y, -6),
                (Symbol::Z, 3),
                (Symbol::T, 2),
            ],
        )
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "omega1" => Some(Grading::omega1()),
            "omega2" => Some(Grading::omega2()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn weight(&self, s: Symbol) -> i64 {
        self.weights.get(&s).copied().unwrap_or(0)
    }

    /// Every weight multiplied by `factor`.
    pub fn scaled(&self, factor: i64) -> Grading {
        let name = if factor == 1 {
            self.name.clone()
        } else {
            format!("{}x{}", self.name, factor)
        };
        Grading::new(name, self.weights.iter().map(|(&s, &w)| (s, w * factor)))
    }

    pub fn grade(&self, m: &Monomial) -> i64 {
        m.exponents()
            .iter()
            .map(|&(s, e)| self.weight(s) * i64::from(e))
            .sum()
    }

    /// Terms of `p` grouped by grade.
    pub fn homogeneous_components(&self, p: &Polynomial) -> BTreeMap<i64, Polynomial> {
        let mut out: BTreeMap<i64, Polynomial> = BTreeMap::new();
        for (m, c) in p.terms() {
            out.entry(self.grade(m))
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn is_homogeneous(&self, p: &Polynomial) -> bool {
        self.homogeneous_components(p).len() <= 1
    }

    /// The component of maximal grade, with that grade.
    pub fn leading_form(&self, p: &Polynomial) -> LeadingFormResult {
        match self.homogeneous_components(p).pop_last() {
            Some((d, form)) => LeadingFormResult {
                degree: Degree::Finite(d),
                form,
            },
            None => LeadingFormResult {
                degree: Degree::NegInfinity,
                form: Polynomial::zero(),
            },
        }
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A filtration degree; `NegInfinity` is the degree of `0` and sits below
/// every integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl std::ops::Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::NegInfinity => s.serialize_str("-inf"),
            Degree::Finite(d) => s.serialize_i64(*d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingFormResult {
    pub degree: Degree,
    pub form: Polynomial,
}

/// Degree and leading form of a quotient-ring element; the form lives in
/// the associated graded ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredLeadingForm {
    pub degree: Degree,
    pub form: QuotientElement,
}

/// The filtration on `ring` induced by `grading`, together with its
/// associated graded ring `B/(leading form of the relation)`.
#[derive(Clone, Debug)]
pub struct FiltrationSpec {
    ring: Arc<QuotientRingSpec>,
    grading: Grading,
    lead_relation: Polynomial,
    graded_ring: Arc<QuotientRingSpec>,
    iteration_cap: usize,
}

impl FiltrationSpec {
    /// Builds the filtration and its associated graded ring.
    ///
    /// The leading form of `X^2*Y + g` must again have the shape
    /// `X^2*Y + g'` and pass the primality check; then the graded ring is a
    /// domain and the filtration is a degree filtration.
    pub fn new(ring: &Arc<QuotientRingSpec>, grading: Grading) -> Result<Self> {
        let lead = grading.leading_form(ring.relation()).form;
        let x2y = Monomial::from_exponents([(Symbol::X, 2), (Symbol::Y, 1)]);
        let g_lead = lead.filter_terms(|m, _| *m != x2y);
        if lead.coefficient(&x2y) != num_traits::One::one() || g_lead.mentions(Symbol::Y) {
            return Err(Error::NotApplicable(lead.to_string()));
        }
        let mode = match ring.mode() {
            EtaMode::Concrete => EtaMode::Concrete,
            // only the constant parameter can survive
            EtaMode::Generic { .. } if g_lead.mentions(Symbol::Param(0)) => {
                EtaMode::Generic { degree: 0 }
            }
            EtaMode::Generic { .. } => EtaMode::Concrete,
        };
        let graded_ring = QuotientRingSpec::new(g_lead, mode)?;
        Ok(FiltrationSpec {
            ring: Arc::clone(ring),
            grading,
            lead_relation: lead,
            graded_ring,
            iteration_cap: DEFAULT_ITERATION_CAP,
        })
    }

    pub fn with_iteration_cap(mut self, cap: usize) -> Self {
        self.iteration_cap = cap;
        self
    }

    pub fn ring(&self) -> &Arc<QuotientRingSpec> {
        &self.ring
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn lead_relation(&self) -> &Polynomial {
        &self.lead_relation
    }

    pub fn graded_ring(&self) -> &Arc<QuotientRingSpec> {
        &self.graded_ring
    }

    pub fn iteration_cap(&self) -> usize {
        self.iteration_cap
    }

    /// Same filtration with every weight multiplied by `factor`.
    pub fn scaled(&self, factor: i64) -> FiltrationSpec {
        FiltrationSpec {
            grading: self.grading.scaled(factor),
            ..self.clone()
        }
    }

    /// `delta(p)` and the leading form `Xi(p)` in the graded ring.
    ///
    /// Starting from the canonical representative, while the top homogeneous
    /// component is a multiple `m` of the leading relation, subtract `m`
    /// times the full relation. Each step strictly lowers the top grade; the
    /// loop stops once the top component is nonzero in the graded ring.
    pub fn degree_leading(&self, p: &QuotientElement) -> Result<FilteredLeadingForm> {
        if **p.ring() != *self.ring {
            return Err(Error::RingMismatch);
        }
        self.degree_leading_of(p.rep())
    }

    /// [`Self::degree_leading`] starting from an arbitrary representative.
    pub fn degree_leading_of(&self, representative: &Polynomial) -> Result<FilteredLeadingForm> {
        let mut q = representative.clone();
        let mut steps = 0;
        loop {
            let lf = self.grading.leading_form(&q);
            if lf.form.is_zero() {
                return Ok(FilteredLeadingForm {
                    degree: Degree::NegInfinity,
                    form: self.graded_ring.element(&Polynomial::zero()),
                });
            }
            match lf
                .form
                .exact_divide(&self.lead_relation, MonomialOrder::Grlex)?
            {
                None => {
                    return Ok(FilteredLeadingForm {
                        degree: lf.degree,
                        form: self.graded_ring.element(&lf.form),
                    })
                }
                Some(_) if steps == self.iteration_cap => {
                    return Err(Error::IterationCapExceeded {
                        cap: self.iteration_cap,
                    })
                }
                Some(m) => {
                    q -= &(&m * self.ring.relation());
                    steps += 1;
                }
            }
        }
    }

    pub fn degree(&self, p: &QuotientElement) -> Result<Degree> {
        Ok(self.degree_leading(p)?.degree)
    }
}
