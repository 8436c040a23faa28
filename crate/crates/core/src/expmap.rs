//! Exponential maps `phi: R -> R[U]` given by the images of the generators.
//!
//! The `U`-coefficients of `phi(p)` are the components `D_i(p)` of the
//! associated higher derivation.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{Degree, FiltrationSpec, Grading};
use crate::poly::{parse, var, Polynomial, Rational, Symbol, SymbolSet};
use crate::quotient::{QuotientElement, QuotientRingSpec};

/// An exponential-map candidate on a quotient ring.
///
/// Construction only enforces `phi|_{U=0} = id`; well-definedness and
/// iterativity are separate checks whose results the caller carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpMap {
    name: String,
    images: [Polynomial; 4],
    ring: Arc<QuotientRingSpec>,
}

/// Outcome of a check, with a serialized witness when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub holds: bool,
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn pass() -> Self {
        CheckOutcome {
            holds: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        CheckOutcome {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Whether `p` is fixed; otherwise the first nonzero higher component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedCheck {
    pub fixed: bool,
    pub witness: Option<(u32, QuotientElement)>,
}

#[derive(Clone, Debug)]
pub struct InducedMapResult {
    /// Largest value of `(delta(D_i g) - delta(g)) / i` over generators.
    pub u_weight: Rational,
    /// Factor applied to the grading so that the `U`-weight is integral.
    pub scale: i64,
    pub grading: Grading,
    pub induced: ExpMap,
    pub verified: bool,
    /// Why verification failed, when it did.
    pub witness: Option<String>,
}

/// JSON map-definition file: exactly the keys `x`, `y`, `z`, `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub x: String,
    pub y: String,
    pub z: String,
    pub t: String,
}

fn slot(s: Symbol) -> usize {
    match s {
        Symbol::X => 0,
        Symbol::Y => 1,
        Symbol::Z => 2,
        Symbol::T => 3,
        other => panic!("{other} is not a generator"),
    }
}

fn image_symbols() -> SymbolSet {
    SymbolSet::main_with_params(Some(crate::poly::MAX_PARAM_INDEX)).with(Symbol::U)
}

impl ExpMap {
    /// `phi1` or `phi2`.
    pub fn builtin(name: &str, ring: &Arc<QuotientRingSpec>) -> Result<Self> {
        let (x, y, z, t, u) = (
            var(Symbol::X),
            var(Symbol::Y),
            var(Symbol::Z),
            var(Symbol::T),
            var(Symbol::U),
        );
        let x2u = x.pow(2) * &u;
        let n = Polynomial::integer;
        let images = match name {
            // z -> z - x^2 U, y -> y + 2zU - x^2 U^2
            "phi1" => [
                x.clone(),
                &y + &(n(2) * &z * &u) - x.pow(2) * u.pow(2),
                &z - &x2u,
                t.clone(),
            ],
            // t -> t - x^2 U, y -> y + 3t^2 U - 3x^2 t U^2 + x^4 U^3
            "phi2" => [
                x.clone(),
                &y + &(n(3) * t.pow(2) * &u) - n(3) * x.pow(2) * &t * u.pow(2)
                    + x.pow(4) * u.pow(3),
                z.clone(),
                &t - &x2u,
            ],
            other => return Err(Error::UnknownName(other.to_string())),
        };
        Self::load_named(name, images, ring)
    }

    pub fn identity(ring: &Arc<QuotientRingSpec>) -> Self {
        Self::load_named("identity", Symbol::MAIN.map(var), ring)
            .expect("identity is the identity at U = 0")
    }

    /// Canonicalizes the images in `R[U]` and checks `phi|_{U=0} = id`.
    pub fn load(
        images: BTreeMap<Symbol, Polynomial>,
        ring: &Arc<QuotientRingSpec>,
    ) -> Result<Self> {
        let images = Symbol::MAIN.map(|s| images.get(&s).cloned().unwrap_or_else(|| var(s)));
        Self::load_named("custom", images, ring)
    }

    fn load_named(
        name: &str,
        images: [Polynomial; 4],
        ring: &Arc<QuotientRingSpec>,
    ) -> Result<Self> {
        let images = images.map(|p| ring.normal_form(&p));
        for (s, image) in Symbol::MAIN.iter().zip(&images) {
            let at_zero = ring.normal_form(&image.substitute_one(Symbol::U, &Polynomial::zero()));
            if at_zero != ring.normal_form(&var(*s)) {
                return Err(Error::NotIdentityAtZero {
                    generator: s.to_string(),
                    value: at_zero.to_string(),
                });
            }
        }
        Ok(ExpMap {
            name: name.to_string(),
            images,
            ring: Arc::clone(ring),
        })
    }

    pub fn from_map_file(file: &MapFile, ring: &Arc<QuotientRingSpec>) -> Result<Self> {
        let allowed = image_symbols();
        let mut images = BTreeMap::new();
        for (s, text) in Symbol::MAIN
            .iter()
            .zip([&file.x, &file.y, &file.z, &file.t])
        {
            let p =
                parse(text, &allowed).map_err(|e| Error::MapFile(format!("image of {s}: {e}")))?;
            images.insert(*s, p);
        }
        Self::load(images, ring)
    }

    pub fn from_json(text: &str, ring: &Arc<QuotientRingSpec>) -> Result<Self> {
        let file: MapFile =
            serde_json::from_str(text).map_err(|e| Error::MapFile(e.to_string()))?;
        Self::from_map_file(&file, ring)
    }

    pub fn to_map_file(&self) -> MapFile {
        let [x, y, z, t] = self.images.clone().map(|p| p.to_string());
        MapFile { x, y, z, t }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<QuotientRingSpec> {
        &self.ring
    }

    pub fn image(&self, s: Symbol) -> &Polynomial {
        &self.images[slot(s)]
    }

    fn assignment(&self, u: &Polynomial) -> BTreeMap<Symbol, Polynomial> {
        Symbol::MAIN
            .iter()
            .map(|&s| (s, self.image(s).substitute_one(Symbol::U, u)))
            .collect()
    }

    /// Image of an arbitrary representative, canonical in `R[U]`.
    pub fn apply_rep(&self, p: &Polynomial) -> Polynomial {
        let images: BTreeMap<Symbol, Polynomial> = Symbol::MAIN
            .iter()
            .map(|&s| (s, self.image(s).clone()))
            .collect();
        self.ring.normal_form(&p.substitute(&images))
    }

    pub fn apply(&self, p: &QuotientElement) -> Result<Polynomial> {
        self.same_ring(p)?;
        Ok(self.apply_rep(p.rep()))
    }

    fn same_ring(&self, p: &QuotientElement) -> Result<()> {
        if **p.ring() == *self.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// The relation must map to zero in `R[U]`; the residue is the witness.
    pub fn check_well_defined(&self) -> CheckOutcome {
        let residue = self.apply_rep(self.ring.relation());
        if residue.is_zero() {
            CheckOutcome::pass()
        } else {
            CheckOutcome::fail(residue.to_string())
        }
    }

    /// `phi_V(phi_U(g)) = phi_{U+V}(g)` in `R[U,V]` for each generator `g`.
    /// Both sides are ring homomorphisms in `g`, so generators suffice.
    pub fn check_iterative(&self) -> Result<CheckOutcome> {
        let wd = self.check_well_defined();
        if !wd.holds {
            return Err(Error::NotWellDefined {
                residue: wd.witness.unwrap_or_default(),
            });
        }
        let in_v = self.assignment(&var(Symbol::V));
        let u_plus_v = var(Symbol::U) + var(Symbol::V);
        let mut failures = Vec::new();
        for &s in &Symbol::MAIN {
            let lhs = self.ring.normal_form(&self.image(s).substitute(&in_v));
            let rhs = self
                .ring
                .normal_form(&self.image(s).substitute_one(Symbol::U, &u_plus_v));
            let diff = &lhs - &rhs;
            if !diff.is_zero() {
                failures.push(format!("{s}: {diff}"));
            }
        }
        Ok(if failures.is_empty() {
            CheckOutcome::pass()
        } else {
            CheckOutcome::fail(failures.join("; "))
        })
    }

    /// `D_0(p), D_1(p), ...` up to the `U`-degree of `phi(p)`.
    pub fn components(&self, p: &QuotientElement) -> Result<Vec<QuotientElement>> {
        let image = self.apply(p)?;
        let mut out: Vec<QuotientElement> = image
            .coefficients_in(Symbol::U)
            .iter()
            .map(|c| self.ring.element(c))
            .collect();
        if out.is_empty() {
            out.push(self.ring.element(&Polynomial::zero()));
        }
        Ok(out)
    }

    pub fn derivation_component(&self, p: &QuotientElement, i: u32) -> Result<QuotientElement> {
        let image = self.apply(p)?;
        Ok(self.ring.element(&image.coefficient_of(Symbol::U, i)))
    }

    pub fn is_fixed(&self, p: &QuotientElement) -> Result<FixedCheck> {
        let components = self.components(p)?;
        let witness = components
            .into_iter()
            .enumerate()
            .skip(1)
            .find(|(_, d)| !d.is_zero())
            .map(|(i, d)| (i as u32, d));
        Ok(FixedCheck {
            fixed: witness.is_none(),
            witness,
        })
    }

    pub fn is_trivial(&self) -> bool {
        Symbol::MAIN
            .iter()
            .all(|&s| !self.image(s).mentions(Symbol::U))
    }

    /// The grade-preserving map induced on the associated graded ring.
    ///
    /// With `w` the largest `(delta(D_i g) - delta(g)) / i`, each bar
    /// generator goes to `Xi(g) + sum Xi(D_i g) U^i` over the indices
    /// attaining `w`. The result is checked for well-definedness and
    /// iterativity; a failed check is an error.
    pub fn induce_graded(&self, filt: &FiltrationSpec) -> Result<InducedMapResult> {
        let res = self.homogenize(filt)?;
        if !res.verified {
            return Err(Error::VerificationFailed {
                witness: res.witness.unwrap_or_default(),
            });
        }
        Ok(res)
    }

    /// The construction behind [`Self::induce_graded`], reporting the
    /// verification outcome instead of failing on it.
    pub fn homogenize(&self, filt: &FiltrationSpec) -> Result<InducedMapResult> {
        if *self.ring != **filt.ring() {
            return Err(Error::RingMismatch);
        }
        let wd = self.check_well_defined();
        if !wd.holds {
            return Err(Error::NotWellDefined {
                residue: wd.witness.unwrap_or_default(),
            });
        }
        let finite = |d: Degree| d.finite().expect("nonzero elements have finite degree");

        let mut ratios: Vec<(Symbol, u32, Rational)> = Vec::new();
        for &s in &Symbol::MAIN {
            let g = self.ring.generator(s);
            let base = finite(filt.degree(&g)?);
            for (i, d) in self.components(&g)?.iter().enumerate().skip(1) {
                if d.is_zero() {
                    continue;
                }
                let delta = finite(filt.degree(d)?);
                ratios.push((
                    s,
                    i as u32,
                    Rational::new(BigInt::from(delta - base), BigInt::from(i)),
                ));
            }
        }
        let w = ratios
            .iter()
            .map(|(_, _, r)| r.clone())
            .max()
            .ok_or(Error::TrivialMap)?;
        let scale: i64 = w.denom().try_into().expect("denominator fits in i64");
        let scaled = filt.scaled(scale);

        let mut images = BTreeMap::new();
        for &s in &Symbol::MAIN {
            let g = self.ring.generator(s);
            let mut image = scaled.degree_leading(&g)?.form.rep().clone();
            for (_, i, _) in ratios.iter().filter(|(t, _, r)| *t == s && *r == w) {
                let d = self.derivation_component(&g, *i)?;
                let lead = scaled.degree_leading(&d)?.form;
                image += lead.rep() * &var(Symbol::U).pow(*i);
            }
            images.insert(s, image);
        }
        let mut res = InducedMapResult {
            u_weight: w,
            scale,
            grading: scaled.grading().clone(),
            induced: ExpMap::identity(filt.graded_ring()),
            verified: false,
            witness: None,
        };
        let induced = match ExpMap::load(images, filt.graded_ring()) {
            Ok(m) => m.with_name(format!("gr({})", self.name)),
            Err(e) => {
                res.witness = Some(e.to_string());
                return Ok(res);
            }
        };
        let wd = induced.check_well_defined();
        res.witness = if !wd.holds {
            Some(format!(
                "relation maps to {}",
                wd.witness.unwrap_or_default()
            ))
        } else {
            let it = induced.check_iterative()?;
            it.witness.map(|w| format!("not iterative: {w}"))
        };
        res.verified = res.witness.is_none();
        res.induced = induced;
        Ok(res)
    }
}

/// Renders a rational as `n` or `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExpMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in Symbol::MAIN.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{s} -> {}", self.images[i])?;
        }
        Ok(())
    }
}

impl fmt::Display for InducedMapResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "u-weight: {}", format_rational(&self.u_weight))?;
        writeln!(f, "scale: {}", self.scale)?;
        writeln!(f, "verified: {}", self.verified)?;
        write!(f, "{}", self.induced)
    }
}
