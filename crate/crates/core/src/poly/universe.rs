//! The fixed, ordered variable universe.
//!
//! Every polynomial in the crate lives over the same list of variables:
//!
//! ```text
//! x1 x2 y1 y2 z1 z2 f1 f2 g1 g2 a0 .. a12 b0 .. b12
//! ```
//!
//! The `f`/`g` pairs hold the symbolic letters of umbral expressions before
//! they are eliminated by the differential operators of the resultant kit.

use std::fmt;
use std::sync::OnceLock;

use crate::error::PolyError;

/// Largest coefficient index supported for the `a` and `b` families.
pub const MAX_FORM_DEGREE: usize = 12;

const PAIR_SLOTS: usize = 10;

/// Number of variables in the universe.
pub const NVARS: usize = PAIR_SLOTS + 2 * (MAX_FORM_DEGREE + 1);

/// Runtime limits, fixed once at startup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Cap on the order `d` (or `e`) of a generic form.
    pub max_form_degree: usize,
    /// Cap on the total degree produced by [`crate::poly::MPoly::pow`].
    pub max_total_degree: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_form_degree: MAX_FORM_DEGREE,
            max_total_degree: 255,
        }
    }
}

static CONFIG: OnceLock<Config> = OnceLock::new();

/// Installs the process-wide configuration. Only the first call wins; returns
/// `false` if a configuration was already in place.
pub fn configure(config: Config) -> bool {
    assert!(config.max_form_degree <= MAX_FORM_DEGREE);
    CONFIG.set(config).is_ok()
}

pub fn config() -> Config {
    *CONFIG.get_or_init(Config::default)
}

/// A variable of the universe, identified by its position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u8);

impl Var {
    pub const X1: Var = Var(0);
    pub const X2: Var = Var(1);
    pub const Y1: Var = Var(2);
    pub const Y2: Var = Var(3);
    pub const Z1: Var = Var(4);
    pub const Z2: Var = Var(5);
    pub const F1: Var = Var(6);
    pub const F2: Var = Var(7);
    pub const G1: Var = Var(8);
    pub const G2: Var = Var(9);

    pub fn from_index(i: usize) -> Var {
        assert!(i < NVARS, "variable index {i} out of range");
        Var(i as u8)
    }

    /// The coefficient variable `a_i`.
    pub fn a(i: usize) -> Var {
        assert!(i <= MAX_FORM_DEGREE, "a{i} outside the variable universe");
        Var((PAIR_SLOTS + i) as u8)
    }

    /// The coefficient variable `b_i`.
    pub fn b(i: usize) -> Var {
        assert!(i <= MAX_FORM_DEGREE, "b{i} outside the variable universe");
        Var((PAIR_SLOTS + MAX_FORM_DEGREE + 1 + i) as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Index `i` when this is `a_i`.
    pub fn a_index(self) -> Option<usize> {
        let i = self.index();
        (PAIR_SLOTS..PAIR_SLOTS + MAX_FORM_DEGREE + 1)
            .contains(&i)
            .then(|| i - PAIR_SLOTS)
    }

    /// Index `j` when this is `b_j`.
    pub fn b_index(self) -> Option<usize> {
        let i = self.index();
        let start = PAIR_SLOTS + MAX_FORM_DEGREE + 1;
        (start..NVARS).contains(&i).then(|| i - start)
    }

    pub fn name(self) -> String {
        const PAIR_NAMES: [&str; PAIR_SLOTS] =
            ["x1", "x2", "y1", "y2", "z1", "z2", "f1", "f2", "g1", "g2"];
        let i = self.index();
        if i < PAIR_SLOTS {
            PAIR_NAMES[i].to_string()
        } else if let Some(k) = self.a_index() {
            format!("a{k}")
        } else {
            format!("b{}", self.b_index().unwrap())
        }
    }

    pub fn parse(name: &str) -> Result<Var, PolyError> {
        (0..NVARS)
            .map(Var::from_index)
            .find(|v| v.name() == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NVARS).map(Var::from_index)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// One of the variable pairs a binary form can be written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pair {
    X,
    Y,
    Z,
    F,
    G,
}

impl Pair {
    pub fn vars(self) -> (Var, Var) {
        match self {
            Pair::X => (Var::X1, Var::X2),
            Pair::Y => (Var::Y1, Var::Y2),
            Pair::Z => (Var::Z1, Var::Z2),
            Pair::F => (Var::F1, Var::F2),
            Pair::G => (Var::G1, Var::G2),
        }
    }

    pub fn first(self) -> Var {
        self.vars().0
    }

    pub fn second(self) -> Var {
        self.vars().1
    }

    pub fn name(self) -> &'static str {
        match self {
            Pair::X => "x",
            Pair::Y => "y",
            Pair::Z => "z",
            Pair::F => "f",
            Pair::G => "g",
        }
    }

    pub fn parse(s: &str) -> Option<Pair> {
        match s {
            "x" => Some(Pair::X),
            "y" => Some(Pair::Y),
            "z" => Some(Pair::Z),
            "f" => Some(Pair::F),
            "g" => Some(Pair::G),
            _ => None,
        }
    }
}

/// Which family of coefficient variables a generic form uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefSymbol {
    A,
    B,
}

impl CoefSymbol {
    pub fn var(self, i: usize) -> Var {
        match self {
            CoefSymbol::A => Var::a(i),
            CoefSymbol::B => Var::b(i),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for v in Var::all() {
            assert_eq!(Var::parse(&v.name()).unwrap(), v);
        }
        assert_eq!(Var::a(3).name(), "a3");
        assert_eq!(Var::b(12).name(), "b12");
        assert_eq!(Var::a(0).a_index(), Some(0));
        assert_eq!(Var::X1.a_index(), None);
        assert!(Var::parse("q7").is_err());
    }
}
