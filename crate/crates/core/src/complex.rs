//! Complex scalar conventions shared by every module.
//!
//! Literal grammar used by the CLI and config files:
//!
//! ```text
//! complex  = real | imag | real sign imag
//! imag     = [ unsigned ] "i"        (a bare "i" means 1i)
//! real     = [ sign ] unsigned
//! unsigned = digits [ "." digits ] [ ("e"|"E") [ sign ] digits ]
//! sign     = "+" | "-"
//! ```

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

#[inline]
pub fn is_finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub fn all_finite(zs: &[C64]) -> bool {
    zs.iter().all(|z| is_finite(*z))
}

/// Max-modulus norm.
pub fn norm_inf(zs: &[C64]) -> f64 {
    zs.iter().fold(0.0, |m, z| m.max(z.norm()))
}

/// z^n for a signed integer exponent.
pub fn powi(z: C64, n: i64) -> C64 {
    if n >= 0 {
        z.powu(n as u32)
    } else {
        ONE / z.powu((-n) as u32)
    }
}

/// (e^x - 1)/x, continuous at 0.
pub fn expm1_over(x: C64) -> C64 {
    if x.norm() < 1e-4 {
        ONE + x / 2.0 + x * x / 6.0 + x * x * x / 24.0
    } else {
        (x.exp() - ONE) / x
    }
}

/// tanh(x)/x, continuous at 0.
pub fn tanh_over(x: C64) -> C64 {
    if x.norm() < 1e-4 {
        let x2 = x * x;
        ONE - x2 / 3.0 + x2 * x2 * (2.0 / 15.0)
    } else {
        x.tanh() / x
    }
}

/// Parse a complex literal ("1.5-2i", "i", "-3e-2", "0.1+0.2i").
pub fn parse_complex(text: &str) -> Result<C64> {
    let s: String = text.chars().filter(|ch| !ch.is_whitespace()).collect();
    let bad = || Error::Parse(format!("bad complex literal {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let bytes = s.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        let ch = bytes[i];
        if (ch == b'+' || ch == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
            break;
        }
    }
    let parse_real = |t: &str| t.parse::<f64>().map_err(|_| bad());
    let parse_imag = |t: &str| -> Result<f64> {
        let body = t.strip_suffix('i').ok_or_else(bad)?;
        match body {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            b => parse_real(b),
        }
    };
    let value = if s.ends_with('i') {
        match split {
            Some(i) => C64::new(parse_real(&s[..i])?, parse_imag(&s[i..])?),
            None => C64::new(0.0, parse_imag(&s)?),
        }
    } else {
        C64::new(parse_real(&s)?, 0.0)
    };
    if !is_finite(value) {
        return Err(bad());
    }
    Ok(value)
}

/// Comma separated list of complex literals.
pub fn parse_complex_list(text: &str) -> Result<Vec<C64>> {
    text.split(',').map(parse_complex).collect()
}

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn fmt_complex(z: C64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", fmt_real(z.re), sign, fmt_real(z.im.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_complex("1+2i").unwrap(), c(1.0, 2.0));
        assert_eq!(parse_complex("1-2.5e-3i").unwrap(), c(1.0, -2.5e-3));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("3i").unwrap(), c(0.0, 3.0));
        assert_eq!(parse_complex("-0.5").unwrap(), c(-0.5, 0.0));
        assert_eq!(parse_complex("1e-3+i").unwrap(), c(1e-3, 1.0));
        assert_eq!(parse_complex("2E+2-1E-1i").unwrap(), c(200.0, -0.1));
        assert!(parse_complex("").is_err());
        assert!(parse_complex("1+").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("nan").is_err());
    }

    #[test]
    fn formatting_round_trips() {
        for z in [c(0.1, -0.2), c(-1.0 / 3.0, 1e-300), c(12345.678, 0.0), c(-0.0, -0.0)] {
            let back = parse_complex(&fmt_complex(z)).unwrap();
            assert_eq!(back.re.to_bits(), z.re.to_bits());
            assert_eq!(back.im.abs().to_bits(), z.im.abs().to_bits());
        }
    }

    #[test]
    fn limits() {
        let x = c(1e-6, 2e-6);
        assert!((expm1_over(x) - (x.exp() - ONE) / x).norm() < 1e-9);
        assert!((tanh_over(c(0.3, 0.1)) - c(0.3, 0.1).tanh() / c(0.3, 0.1)).norm() < 1e-15);
        assert_eq!(tanh_over(ZERO), ONE);
    }
}
