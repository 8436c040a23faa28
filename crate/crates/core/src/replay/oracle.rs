//! Independent re-derivation of the `h + sum (u_j x + v_j) y^j`
//! decomposition by exact linear algebra.
//!
//! The element is written in the basis `{x^a z^b t^c} ∪ {x^e z^b t^c y^j :
//! e <= 1, j >= 1}` by solving the coefficient-matching system with
//! Gaussian elimination. Basis elements have rational entries; the
//! right-hand side carries the parameter part of each coefficient, so the
//! system is solved over `Q` with `Q[c0, c1, ...]`-valued unknowns.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::poly::{var, Monomial, Polynomial, Rational, Symbol};
use crate::quotient::{QuotientElement, TrickDecomposition};

/// Role of a basis element in the decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Slot {
    H,
    U(u32),
    V(u32),
}

#[derive(Clone, Debug)]
struct Row {
    entries: BTreeMap<usize, Rational>,
    rhs: Polynomial,
}

/// Result of the oracle solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSolution {
    pub decomposition: TrickDecomposition,
    /// Number of basis elements in the system.
    pub unknowns: usize,
    /// Every unknown was a pivot, so the solution is unique.
    pub unique: bool,
}

fn main_part(m: &Monomial) -> (Monomial, Monomial) {
    let (main, params): (Vec<_>, Vec<_>) = m.exponents().iter().partition(|(s, _)| s.is_main());
    (
        Monomial::from_exponents(main),
        Monomial::from_exponents(params),
    )
}

/// Decomposition read off the exact solution of the basis system.
pub fn oracle_decompose(p: &QuotientElement) -> TrickDecomposition {
    solve(p).decomposition
}

/// Full oracle solve with uniqueness diagnostics.
///
/// Panics if the representative is not canonical: such an element has no
/// expression in the basis.
pub fn solve(p: &QuotientElement) -> OracleSolution {
    let rep = p.rep();
    let bound = |s: Symbol| rep.degree_in(s);
    let (dx, dy, dz, dt) = (
        bound(Symbol::X),
        bound(Symbol::Y),
        bound(Symbol::Z),
        bound(Symbol::T),
    );

    // basis elements, built as products of generator powers
    let (x, y, z, t) = (
        var(Symbol::X),
        var(Symbol::Y),
        var(Symbol::Z),
        var(Symbol::T),
    );
    let mut basis: Vec<(Slot, Monomial, Polynomial)> = Vec::new();
    for b in 0..=dz {
        for c in 0..=dt {
            let zt = z.pow(b) * t.pow(c);
            let zt_mono = Monomial::from_exponents([(Symbol::Z, b), (Symbol::T, c)]);
            for a in 0..=dx {
                let mono =
                    Monomial::from_exponents([(Symbol::X, a), (Symbol::Z, b), (Symbol::T, c)]);
                basis.push((Slot::H, mono, &x.pow(a) * &zt));
            }
            for j in 1..=dy {
                let yj = y.pow(j);
                basis.push((Slot::U(j), zt_mono.clone(), &x * &zt * &yj));
                basis.push((Slot::V(j), zt_mono.clone(), &zt * &yj));
            }
        }
    }

    // coefficient-matching rows, one per monomial in x, y, z, t
    let mut row_of: HashMap<Monomial, usize> = HashMap::new();
    let mut rows: Vec<Row> = Vec::new();
    for (col, (_, _, element)) in basis.iter().enumerate() {
        for (m, c) in element.terms() {
            let idx = *row_of.entry(m.clone()).or_insert_with(|| {
                rows.push(Row {
                    entries: BTreeMap::new(),
                    rhs: Polynomial::zero(),
                });
                rows.len() - 1
            });
            rows[idx].entries.insert(col, c.clone());
        }
    }
    for (m, c) in rep.terms() {
        let (main, params) = main_part(m);
        let idx = *row_of
            .get(&main)
            .unwrap_or_else(|| panic!("monomial {m} of {rep} is outside the canonical basis"));
        rows[idx].rhs.add_term(params, c.clone());
    }

    let (values, unique) = eliminate(rows, basis.len());

    let mut h = Polynomial::zero();
    let mut pairs = vec![(Polynomial::zero(), Polynomial::zero()); dy as usize];
    for ((slot, mono, _), value) in basis.iter().zip(values) {
        let piece = value * Polynomial::term(Rational::from_integer(1.into()), mono.clone());
        match *slot {
            Slot::H => h += piece,
            Slot::U(j) => pairs[j as usize - 1].0 += piece,
            Slot::V(j) => pairs[j as usize - 1].1 += piece,
        }
    }
    while pairs
        .last()
        .is_some_and(|(u, v)| u.is_zero() && v.is_zero())
    {
        pairs.pop();
    }
    OracleSolution {
        decomposition: TrickDecomposition {
            h,
            epsilon: pairs.len(),
            pairs,
        },
        unknowns: basis.len(),
        unique,
    }
}

/// Sparse Gaussian elimination. Returns the solution (free unknowns set to
/// zero) and whether every unknown was determined.
fn eliminate(rows: Vec<Row>, unknowns: usize) -> (Vec<Polynomial>, bool) {
    let mut pivots: Vec<(usize, Row)> = Vec::new();
    let mut pivot_of: HashMap<usize, usize> = HashMap::new();
    for mut row in rows {
        while let Some((&col, _)) = row
            .entries
            .iter()
            .find(|(col, _)| pivot_of.contains_key(col))
        {
            let factor = row.entries[&col].clone();
            let pivot = &pivots[pivot_of[&col]].1;
            for (&k, a) in &pivot.entries {
                let entry = row.entries.entry(k).or_insert_with(Rational::zero);
                *entry -= &factor * a;
                if entry.is_zero() {
                    row.entries.remove(&k);
                }
            }
            row.rhs -= &pivot.rhs.scale(&factor);
        }
        let Some((&col, lead)) = row.entries.iter().next() else {
            assert!(
                row.rhs.is_zero(),
                "inconsistent system: element is outside the basis span"
            );
            continue;
        };
        let inv = lead.recip();
        for a in row.entries.values_mut() {
            *a *= &inv;
        }
        row.rhs = row.rhs.scale(&inv);
        pivot_of.insert(col, pivots.len());
        pivots.push((col, row));
    }

    let unique = pivots.len() == unknowns;
    let mut values = vec![Polynomial::zero(); unknowns];
    for (col, row) in pivots.iter().rev() {
        let mut value = row.rhs.clone();
        for (&k, a) in &row.entries {
            if k != *col {
                value -= &values[k].scale(a);
            }
        }
        values[*col] = value;
    }
    (values, unique)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, SymbolSet};
    use crate::quotient::QuotientRingSpec;

    fn p(s: &str) -> Polynomial {
        parse(s, &SymbolSet::all()).unwrap()
    }

    #[test]
    fn agrees_on_spec_examples() {
        let r = QuotientRingSpec::generic(0);
        for text in ["x*y", "x^3*y^2 + t", "0", "z", "5*x^7*z - y^3*t + c0*x*y^2"] {
            let e = r.element(&p(text));
            let sol = solve(&e);
            assert!(sol.unique, "{text}");
            assert_eq!(sol.decomposition, e.decompose(), "{text}");
        }
    }

    #[test]
    fn hand_solved_instance() {
        let r = QuotientRingSpec::generic(0);
        let d = oracle_decompose(&r.element(&p("x^3*y^2 + t")));
        assert_eq!(d.epsilon, 1);
        assert_eq!(d.pairs, vec![(p("-z^2 - t^3 - c0"), Polynomial::zero())]);
        assert_eq!(d.h, p("t"));
    }

    #[test]
    fn zero_element() {
        let r = QuotientRingSpec::generic(2);
        let d = oracle_decompose(&r.element(&Polynomial::zero()));
        assert_eq!((d.epsilon, d.h.is_zero()), (0, true));
    }

    #[test]
    fn elimination_handles_dependent_columns() {
        // x + y = 3, 2x + 2y = 6 leaves one free unknown
        let row = |a: i64, b: i64, r: i64| Row {
            entries: BTreeMap::from([
                (0, Rational::from_integer(a.into())),
                (1, Rational::from_integer(b.into())),
            ]),
            rhs: Polynomial::integer(r),
        };
        let (values, unique) = eliminate(vec![row(1, 1, 3), row(2, 2, 6)], 2);
        assert!(!unique);
        assert_eq!(values, vec![Polynomial::integer(3), Polynomial::zero()]);
        let (values, unique) = eliminate(vec![row(1, 1, 3), row(1, -1, 1)], 2);
        assert!(unique);
        assert_eq!(values, vec![Polynomial::integer(2), Polynomial::integer(1)]);
    }
}
