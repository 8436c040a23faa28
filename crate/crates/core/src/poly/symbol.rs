use std::collections::BTreeSet;
use std::fmt;

/// Largest parameter index accepted by the expression grammar (`c0` .. `c99`).
pub const MAX_PARAM_INDEX: u8 = 99;

/// A polynomial indeterminate.
///
/// The derived order ranks `X < Y < Z < T < U < V < c0 < c1 < ...`; the
/// lexicographic monomial comparisons treat an earlier symbol as the more
/// significant one, so this is the precedence `X > Y > Z > T > U > V > c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    X,
    Y,
    Z,
    T,
    /// Auxiliary variable of `R[U]`.
    U,
    /// Second auxiliary variable, used by the iterativity check in `R[U, V]`.
    V,
    /// Formal coefficient `c_i` of a generic `eta`.
    Param(u8),
}

impl Symbol {
    pub const MAIN: [Symbol; 4] = [Symbol::X, Symbol::Y, Symbol::Z, Symbol::T];

    pub fn is_main(self) -> bool {
        matches!(self, Symbol::X | Symbol::Y | Symbol::Z | Symbol::T)
    }

    pub fn is_aux(self) -> bool {
        matches!(self, Symbol::U | Symbol::V)
    }

    pub fn is_param(self) -> bool {
        matches!(self, Symbol::Param(_))
    }

    /// Parses an identifier of the expression grammar. `x y z t` are
    /// case-insensitive, `U` and `V` are exact-case.
    pub fn from_ident(ident: &str) -> Option<Symbol> {
        match ident {
            "x" | "X" => Some(Symbol::X),
            "y" | "Y" => Some(Symbol::Y),
            "z" | "Z" => Some(Symbol::Z),
            "t" | "T" => Some(Symbol::T),
            "U" => Some(Symbol::U),
            "V" => Some(Symbol::V),
            _ => {
                let digits = ident.strip_prefix('c')?;
                if digits.is_empty()
                    || digits.len() > 2
                    || !digits.bytes().all(|b| b.is_ascii_digit())
                {
                    return None;
                }
                // "c05" is not a valid spelling of c5
                if digits.len() == 2 && digits.starts_with('0') {
                    return None;
                }
                digits.parse().ok().map(Symbol::Param)
            }
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::X => f.write_str("x"),
            Symbol::Y => f.write_str("y"),
            Symbol::Z => f.write_str("z"),
            Symbol::T => f.write_str("t"),
            Symbol::U => f.write_str("U"),
            Symbol::V => f.write_str("V"),
            Symbol::Param(i) => write!(f, "c{i}"),
        }
    }
}

/// Set of symbols an expression may mention.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymbolSet(BTreeSet<Symbol>);

impl SymbolSet {
    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        SymbolSet(symbols.into_iter().collect())
    }

    /// `x, y, z, t` plus parameters `c0 ..= c{max_param}`.
    pub fn main_with_params(max_param: Option<u8>) -> Self {
        let mut set = SymbolSet::new(Symbol::MAIN);
        set.add_params(max_param);
        set
    }

    /// Every symbol of the grammar.
    pub fn all() -> Self {
        let mut set = SymbolSet::new(Symbol::MAIN.into_iter().chain([Symbol::U, Symbol::V]));
        set.add_params(Some(MAX_PARAM_INDEX));
        set
    }

    pub fn with(mut self, symbol: Symbol) -> Self {
        self.0.insert(symbol);
        self
    }

    fn add_params(&mut self, max_param: Option<u8>) {
        if let Some(n) = max_param {
            self.0.extend((0..=n).map(Symbol::Param));
        }
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        self.0.contains(&symbol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identifiers() {
        assert_eq!(Symbol::from_ident("X"), Some(Symbol::X));
        assert_eq!(Symbol::from_ident("t"), Some(Symbol::T));
        assert_eq!(Symbol::from_ident("U"), Some(Symbol::U));
        assert_eq!(Symbol::from_ident("u"), None);
        assert_eq!(Symbol::from_ident("c0"), Some(Symbol::Param(0)));
        assert_eq!(Symbol::from_ident("c99"), Some(Symbol::Param(99)));
        assert_eq!(Symbol::from_ident("c100"), None);
        assert_eq!(Symbol::from_ident("c07"), None);
        assert_eq!(Symbol::from_ident("c"), None);
        assert_eq!(Symbol::from_ident("C1"), None);
    }

    #[test]
    fn precedence() {
        assert!(Symbol::X < Symbol::Y && Symbol::T < Symbol::U && Symbol::V < Symbol::Param(0));
        assert!(Symbol::Param(1) < Symbol::Param(2));
    }
}
