//! Exact rational thresholds.
//!
//! Density and homogeneity comparisons are never done in floating point:
//! every `count >= coeff * count` style check cross-multiplies integers.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rat = Ratio<i128>;

pub fn rat(num: i128, den: i128) -> Rat {
    Rat::new(num, den)
}

pub fn rat_int(v: i128) -> Rat {
    Rat::from_integer(v)
}

/// Parse "1/3", "0.25" or "2" into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i128 = num
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad rational numerator `{num}`")))?;
        let d: i128 = den
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad rational denominator `{den}`")))?;
        if d == 0 {
            return Err(Error::input("rational denominator is zero"));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let int_part = if int_part.is_empty() { "0" } else { int_part };
        let neg = int_part.starts_with('-');
        let i: i128 = int_part
            .parse()
            .map_err(|_| Error::input(format!("bad decimal `{s}`")))?;
        if frac_part.is_empty() {
            return Ok(rat_int(i));
        }
        if frac_part.len() > 27 || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::input(format!("bad decimal `{s}`")));
        }
        let f: i128 = frac_part
            .parse()
            .map_err(|_| Error::input(format!("bad decimal `{s}`")))?;
        let scale = 10i128.pow(frac_part.len() as u32);
        let frac = Rat::new(f, scale);
        let whole = rat_int(i.abs());
        let abs = whole + frac;
        return Ok(if neg { -abs } else { abs });
    }
    let i: i128 = s
        .parse()
        .map_err(|_| Error::input(format!("bad rational `{s}`")))?;
    Ok(rat_int(i))
}

/// Canonical text form, stable across runs: lowest terms `num/den` or `num`.
pub fn format_rat(r: &Rat) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn rat_floor(r: &Rat) -> i128 {
    r.floor().to_integer()
}

pub fn rat_ceil(r: &Rat) -> i128 {
    r.ceil().to_integer()
}

/// Exact test of `count >= coeff * base` for nonnegative integer counts.
/// A nonpositive coefficient makes the inequality vacuous.
pub fn count_ge(count: u128, coeff: &Rat, base: u128) -> Result<bool> {
    if coeff.is_negative() || coeff.is_zero() {
        return Ok(true);
    }
    let num = *coeff.numer() as u128;
    let den = *coeff.denom() as u128;
    let lhs = count
        .checked_mul(den)
        .ok_or_else(|| Error::Overflow("count_ge lhs".into()))?;
    let rhs = num
        .checked_mul(base)
        .ok_or_else(|| Error::Overflow("count_ge rhs".into()))?;
    Ok(lhs >= rhs)
}

/// Exact test of `count <= coeff * base`.
pub fn count_le(count: u128, coeff: &Rat, base: u128) -> Result<bool> {
    if coeff.is_negative() {
        return Ok(count == 0 && base == 0);
    }
    let num = *coeff.numer() as u128;
    let den = *coeff.denom() as u128;
    let lhs = count
        .checked_mul(den)
        .ok_or_else(|| Error::Overflow("count_le lhs".into()))?;
    let rhs = num
        .checked_mul(base)
        .ok_or_else(|| Error::Overflow("count_le rhs".into()))?;
    Ok(lhs <= rhs)
}

/// `binom(n, k)` in u128 with overflow checks.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::Overflow("binomial".into()))?;
        acc /= (i + 1) as u128;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rat("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rat("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rat("2").unwrap(), rat_int(2));
        assert_eq!(parse_rat("-0.5").unwrap(), rat(-1, 2));
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 4).unwrap(), 15);
        assert_eq!(binomial(30, 4).unwrap(), 27405);
        assert_eq!(binomial(5, 3).unwrap(), 10);
        assert_eq!(binomial(3, 5).unwrap(), 0);
    }

    #[test]
    fn exact_comparisons() {
        // 461 >= (1 - 0.15) * 512 but not >= (1 - 0.05) * 512
        assert!(count_ge(461, &rat(85, 100), 512).unwrap());
        assert!(!count_ge(461, &rat(95, 100), 512).unwrap());
    }
}
