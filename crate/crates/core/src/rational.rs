//! Exact rationals. Everything in the charge audit goes through this type.

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(tok: &str) -> Result<Rational> {
    let bad = || Error::input(format!("bad rational `{tok}`"));
    match tok.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.parse().map_err(|_| bad())?;
            let d: i64 = d.parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => tok.parse::<i64>().map(int).map_err(|_| bad()),
    }
}

/// Always renders as `p/q`, including integers (`-8/1`), so records are uniform.
pub fn fmt_q(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn floor_div(n: i64, d: i64) -> i64 {
    num_integer::Integer::div_floor(&n, &d)
}
