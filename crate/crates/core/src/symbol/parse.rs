//! Text forms: complex literals `a+bi` and symbols `j,k:coeff;j,k:coeff`.

use num_complex::Complex64;

use super::MonomialSymbol;
use crate::error::{Error, Result};

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` (no spaces, optional exponents).
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s = text.trim();
    let bad = || Error::Parse(format!("invalid complex literal {text:?}"));
    if s.is_empty() || s.contains(char::is_whitespace) {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return parse_real(s)
            .map(|re| Complex64::new(re, 0.0))
            .ok_or_else(bad);
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re_text, im_text) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let re = if re_text.is_empty() {
        Some(0.0)
    } else {
        parse_real(re_text)
    };
    let im = match im_text {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        t => parse_real(t),
    };
    match (re, im) {
        (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
        _ => Err(bad()),
    }
}

fn parse_real(s: &str) -> Option<f64> {
    // reject "inf", "nan" and friends
    if !s
        .bytes()
        .all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'+' | b'-' | b'e' | b'E'))
    {
        return None;
    }
    s.parse::<f64>().ok().filter(|x| x.is_finite())
}

/// Comma-separated complex literals.
pub fn parse_complex_list(text: &str) -> Result<Vec<Complex64>> {
    text.split(',').map(parse_complex).collect()
}

/// Shortest round-trippable `a+bi` form.
pub fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else if c.im < 0.0 {
        format!("{}-{}i", c.re, -c.im)
    } else {
        format!("{}+{}i", c.re, c.im)
    }
}

pub(super) fn parse_symbol(text: &str) -> Result<MonomialSymbol> {
    let mut terms = Vec::new();
    for term in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (idx, coeff) = term
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("term {term:?} lacks ':'")))?;
        let (j, k) = idx
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("term {term:?} needs an index pair j,k")))?;
        let j: u32 = j
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad index {j:?} in {term:?}")))?;
        let k: u32 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad index {k:?} in {term:?}")))?;
        terms.push(((j, k), parse_complex(coeff)?));
    }
    if terms.is_empty() {
        return Err(Error::Parse(format!("empty symbol {text:?}")));
    }
    Ok(MonomialSymbol::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let cases = [
            ("0", Complex64::new(0.0, 0.0)),
            ("-1.5", Complex64::new(-1.5, 0.0)),
            ("0.3+0.2i", Complex64::new(0.3, 0.2)),
            ("0.3-0.2i", Complex64::new(0.3, -0.2)),
            ("-2i", Complex64::new(0.0, -2.0)),
            ("i", Complex64::new(0.0, 1.0)),
            ("-i", Complex64::new(0.0, -1.0)),
            ("1+i", Complex64::new(1.0, 1.0)),
            ("1e-3-2.5e+2i", Complex64::new(1e-3, -250.0)),
            ("+0.5", Complex64::new(0.5, 0.0)),
        ];
        for (text, want) in cases {
            assert_eq!(parse_complex(text).unwrap(), want, "{text}");
        }
    }

    #[test]
    fn rejects_malformed_literals() {
        for text in ["", "1 + 2i", "abc", "1+2j", "inf", "nan", "1++2i", "0.5i+1"] {
            assert!(parse_complex(text).is_err(), "{text}");
        }
    }

    #[test]
    fn symbol_text() {
        let u: MonomialSymbol = "1,1:1".parse().unwrap();
        assert_eq!(u, MonomialSymbol::abs_sq());
        let v: MonomialSymbol = "1,0:i;0,1:-i".parse().unwrap();
        assert_eq!(v.coeff(1, 0), Complex64::new(0.0, 1.0));
        assert_eq!(v.coeff(0, 1), Complex64::new(0.0, -1.0));
        assert!("1,1".parse::<MonomialSymbol>().is_err());
        assert!("x,1:1".parse::<MonomialSymbol>().is_err());
        assert!("".parse::<MonomialSymbol>().is_err());
    }

    #[test]
    fn list_parsing() {
        let zs = parse_complex_list("0.5,0.75,0.875").unwrap();
        assert_eq!(zs.len(), 3);
        assert_eq!(zs[2], Complex64::new(0.875, 0.0));
    }
}
