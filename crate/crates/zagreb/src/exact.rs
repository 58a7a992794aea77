//! Exact rational arithmetic helpers.
//!
//! All index computations that are rational functions of the degrees go
//! through `Rat` so that equality cases of the inequality checks can be
//! decided exactly instead of within a floating tolerance.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Integer as an exact rational.
pub fn rint(v: i128) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Exact fraction p/q. Panics if q == 0.
pub fn rfrac(p: i128, q: i128) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rzero() -> Rat {
    Rat::zero()
}

pub fn rone() -> Rat {
    Rat::one()
}

/// Nearest f64 to an exact rational, for display and for real-valued checks.
pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders `9/4` style, or plain `12` when the value is an integer.
pub fn display(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fixed-point decimal rendering with the given number of fractional digits,
/// rounded half away from zero. Exact, does not pass through f64.
pub fn decimal(r: &Rat, digits: u32) -> String {
    let neg = r < &Rat::zero();
    let abs = if neg { -r.clone() } else { r.clone() };
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (abs * Rat::from_integer(scale.clone())).round();
    let v = scaled.to_integer();
    let (int_part, frac_part) = (v.clone() / &scale, v % &scale);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = digits as usize
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(display(&rfrac(9, 4)), "9/4");
        assert_eq!(display(&rint(12)), "12");
        assert_eq!(display(&rfrac(-6, 4)), "-3/2");
    }

    #[test]
    fn decimal_rounds_exactly() {
        assert_eq!(decimal(&rfrac(9, 4), 3), "2.250");
        assert_eq!(decimal(&rfrac(3010, 121), 3), "24.876");
        assert_eq!(decimal(&rfrac(4220, 121), 3), "34.876");
        assert_eq!(decimal(&rfrac(-1, 8), 2), "-0.13");
        assert_eq!(decimal(&rint(5), 0), "5");
    }

    #[test]
    fn fraction_reduction() {
        assert_eq!(rfrac(4, 8), rfrac(1, 2));
        assert_eq!(to_f64(&rfrac(1, 2)), 0.5);
    }
}
