//! Exact rational scalars: `num_rational::BigRational` plus small helpers.
//!
//! Rationals print as `p/q` (or `p` when q = 1) and are always in lowest
//! terms with positive denominator, which `BigRational` guarantees.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p", "-p" or "p/q".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parts: Vec<&str> = s.split('/').collect();
    let bad = || Error::Parse(format!("invalid rational: {s:?}"));
    match parts.as_slice() {
        [p] => Ok(Rat::from_integer(p.trim().parse::<BigInt>().map_err(|_| bad())?)),
        [p, q] => {
            let num: BigInt = p.trim().parse().map_err(|_| bad())?;
            let den: BigInt = q.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(num, den))
        }
        _ => Err(bad()),
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Falling factorial v (v-1) ... (v-k+1) with k >= 0.
pub fn falling(v: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= v - rat(i as i64);
    }
    acc
}

/// Approximate natural log of |r| for growth-rate checks; exact code never
/// calls this.
pub fn ln_abs_approx(r: &Rat) -> f64 {
    fn ln_big(x: &BigInt) -> f64 {
        let bits = x.bits();
        if bits <= 52 {
            let v: f64 = x.abs().to_string().parse().unwrap();
            if v == 0.0 {
                return f64::NEG_INFINITY;
            }
            v.ln()
        } else {
            // keep the top 52 bits, account for the shift
            let shifted = x.abs() >> (bits - 52);
            let v: f64 = shifted.to_string().parse().unwrap();
            v.ln() + (bits - 52) as f64 * std::f64::consts::LN_2
        }
    }
    ln_big(r.numer()) - ln_big(r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3", "-3", "3/2", "-7/4", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        assert_eq!(fmt_rat(&parse_rat("6/4").unwrap()), "3/2");
        assert_eq!(fmt_rat(&parse_rat("3/-2").unwrap()), "-3/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling(&rat(5), 3), rat(60));
        assert_eq!(falling(&rat(2), 3), rat(0));
        assert_eq!(falling(&rat(-1), 3), rat(-6));
        assert_eq!(falling(&rat_frac(1, 2), 2), rat_frac(-1, 4));
        assert_eq!(falling(&rat(7), 0), rat(1));
    }

    #[test]
    fn ln_abs_is_close_for_large_values() {
        let big = falling(&rat(120), 80); // 120!/40!
        let exact: f64 = (41..=120).map(|k| (k as f64).ln()).sum();
        assert!((ln_abs_approx(&big) - exact).abs() < 1e-6 * exact);
    }
}
