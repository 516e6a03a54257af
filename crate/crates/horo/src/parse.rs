//! Spinor tokens: `re[+im i],re[+im i]`, whitespace-insensitive.
//!
//! Each component is a real, an imaginary (`2i`, `-i`, `i`), or a sum
//! (`1+2i`, `-1.5e-3+0.25i`). The split between real and imaginary part is
//! the last sign that neither starts the string nor follows an exponent
//! marker.

use horolib::Spinor;
use num_complex::Complex64;

pub fn parse_spinor(token: &str) -> Result<Spinor, String> {
    let cleaned: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    let (xi, eta) = cleaned
        .split_once(',')
        .ok_or_else(|| format!("expected 're[+im i],re[+im i]', got '{token}'"))?;
    if eta.contains(',') {
        return Err(format!("expected exactly one ',' in '{token}'"));
    }
    Ok(Spinor::new(parse_complex(xi)?, parse_complex(eta)?))
}

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    if s.is_empty() {
        return Err("empty number".to_string());
    }
    let Some(body) = s.strip_suffix(['i', 'I']) else {
        return Ok(Complex64::new(parse_real(s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    match split {
        Some(i) => Ok(Complex64::new(
            parse_real(&body[..i])?,
            parse_signed_unit(&body[i..])?,
        )),
        None => Ok(Complex64::new(0.0, parse_signed_unit(body)?)),
    }
}

/// The coefficient of i: empty or a bare sign means ±1.
fn parse_signed_unit(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(s),
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("invalid number '{s}'"))?;
    if !v.is_finite() {
        return Err(format!("non-finite number '{s}'"));
    }
    Ok(v)
}
