//! Exact rational arithmetic helpers.
//!
//! Densities like `m_2(K4) = 5/2` sit exactly on decision boundaries of the
//! coloring lemmas, so every density in this crate is a reduced `Ratio<i64>`
//! and comparisons are exact.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{One, Signed};

pub type Rat = Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rat {
    Ratio::new(num, den)
}

/// Formats a rational as `a/b` (or just `a` when the denominator is 1).
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a`, `a/b` or a decimal like `0.1` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let num: i64 = a
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad rational numerator {a:?}")))?;
        let den: i64 = b
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad rational denominator {b:?}")))?;
        if den == 0 {
            return Err(Error::input("rational with zero denominator"));
        }
        return Ok(Ratio::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int_part: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse()
                .map_err(|_| Error::input(format!("bad decimal {s:?}")))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::input(format!("bad decimal {s:?}")));
        }
        let frac_num: i64 = frac
            .parse()
            .map_err(|_| Error::input(format!("decimal part too long in {s:?}")))?;
        let den = 10i64
            .checked_pow(frac.len() as u32)
            .ok_or_else(|| Error::input(format!("decimal part too long in {s:?}")))?;
        let frac_rat = Ratio::new(frac_num, den);
        let int_rat = Ratio::from_integer(int_part);
        return Ok(if neg { int_rat - frac_rat } else { int_rat + frac_rat });
    }
    let n: i64 = s
        .parse()
        .map_err(|_| Error::input(format!("bad rational {s:?}")))?;
    Ok(Ratio::from_integer(n))
}

/// `ceil(r)` as an integer.
pub fn ceil_int(r: &Rat) -> i64 {
    r.ceil().to_integer()
}

/// `floor(r)` as an integer.
pub fn floor_int(r: &Rat) -> i64 {
    r.floor().to_integer()
}

/// True when `r` is a non-negative integer.
pub fn is_nonneg_integer(r: &Rat) -> bool {
    r.denom().is_one() && !r.is_negative()
}

impl From<Error> for String {
    fn from(e: Error) -> String {
        e.to_string()
    }
}
