//! Charge formulas and rule vocabularies of the four discharging variants.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// No chorded 5-cycle: μ = d − 6, ν = 2ℓ − 6.
    C5,
    /// No chorded 6-cycle: μ = d − 4, ν = ℓ − 4.
    Cc6,
    /// No doubly-chorded 6-cycle and no doubly-chorded 7-cycle; same charges as `Cc6`.
    Dcc67,
    /// No chorded 7-cycle, with a precoloured subgraph: μ = d − 4 + 2δ, ν = ℓ − 4 + ε.
    Cc7,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::C5, Variant::Cc6, Variant::Dcc67, Variant::Cc7];

    pub fn mu(self, d: usize, precolored: bool) -> Rational {
        let d = d as i64;
        match self {
            Variant::C5 => int(d - 6),
            Variant::Cc6 | Variant::Dcc67 => int(d - 4),
            Variant::Cc7 => int(d - 4 + 2 * precolored as i64),
        }
    }

    pub fn nu(self, l: usize, precolored_face: bool) -> Rational {
        let l = l as i64;
        match self {
            Variant::C5 => int(2 * l - 6),
            Variant::Cc6 | Variant::Dcc67 => int(l - 4),
            Variant::Cc7 => int(l - 4 + precolored_face as i64),
        }
    }

    pub fn rules(self) -> &'static [Rule] {
        use Rule::*;
        match self {
            Variant::C5 => &[R1, R2, R3, R4],
            Variant::Cc6 | Variant::Dcc67 => &[R1, R1a, R1b, R2, R2a, R2b, R3],
            Variant::Cc7 => &[R0, R1, R1a, R1b, R1c, R2, R2a, R2b, R3],
        }
    }

    pub fn allows(self, r: Rule) -> bool {
        self.rules().contains(&r)
    }

    /// Σμ + Σν by Euler's formula, given |P| and the number of faces with ε = 1.
    pub fn closed_form_sum(self, precolored_vertices: usize, precolored_faces: usize) -> Rational {
        match self {
            Variant::C5 => int(-12),
            Variant::Cc6 | Variant::Dcc67 => int(-8),
            Variant::Cc7 => int(-8 + 2 * precolored_vertices as i64 + precolored_faces as i64),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::C5 => "c5",
            Variant::Cc6 => "cc6",
            Variant::Dcc67 => "dcc67",
            Variant::Cc7 => "cc7",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.to_string() == s)
            .ok_or_else(|| Error::input(format!("unknown variant `{s}` (expected c5, cc6, dcc67 or cc7)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    R0,
    R1,
    R1a,
    R1b,
    R1c,
    R2,
    R2a,
    R2b,
    R3,
    R4,
}

impl Rule {
    pub const ALL: [Rule; 10] =
        [Rule::R0, Rule::R1, Rule::R1a, Rule::R1b, Rule::R1c, Rule::R2, Rule::R2a, Rule::R2b, Rule::R3, Rule::R4];
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rule::ALL
            .into_iter()
            .find(|r| r.to_string() == s)
            .ok_or_else(|| Error::input(format!("unknown rule `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.to_string().parse::<Variant>().unwrap(), v);
        }
        assert!("c6".parse::<Variant>().is_err());
        assert_eq!("R1c".parse::<Rule>().unwrap(), Rule::R1c);
        assert!(!Variant::C5.allows(Rule::R0));
        assert!(Variant::Cc7.allows(Rule::R0));
    }

    #[test]
    fn charges() {
        assert_eq!(Variant::C5.nu(4, false), int(2));
        assert_eq!(Variant::Cc7.mu(3, true), int(1));
        assert_eq!(Variant::Cc7.nu(3, true), int(0));
    }
}
