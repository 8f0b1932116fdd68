//! Text form of exterior polynomials.
//!
//! ```text
//! poly  := "0" | ["-"] term (("+" | "-") term)*
//! term  := coeff | [coeff "*"] mono
//! mono  := name ("^" name)*
//! coeff := digits ["/" digits]
//! name  := [A-Za-z_][A-Za-z0-9_.]*
//! ```
//!
//! `^` is the wedge product, so `y^x` parses as `-x^y`. Printing lists terms
//! from the largest monomial down, variables in increasing rank, and omits
//! unit coefficients: `3/2*x1^y2 - g12^g13`.

use super::{ExtPoly, VarTable};
use crate::error::{Error, Result};
use crate::Scalar;

pub fn to_text<T: Scalar>(p: &ExtPoly<T>, vars: &VarTable) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.degree() == 0 {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&vars.monomial_name(*m));
        }
    }
    out
}

fn parse_coeff<T: Scalar>(s: &str) -> Option<T> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let all_digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(n) || !all_digits(d) {
        return None;
    }
    let digits = |x: &str| x.bytes().fold(T::zero(), |acc, b| acc * T::from_int(10) + T::from_int((b - b'0') as i64));
    let (n, d) = (digits(n), digits(d));
    (!d.is_zero()).then(|| n / d)
}

fn parse_term<T: Scalar>(s: &str, vars: &VarTable) -> Result<ExtPoly<T>> {
    let perr = |msg: String| Error::Parse { line: 1, msg };
    let s = s.trim();
    if s.is_empty() {
        return Err(perr("empty term".into()));
    }
    let (coeff, mono) = match s.split_once('*') {
        Some((c, m)) => {
            (parse_coeff::<T>(c.trim()).ok_or_else(|| perr(format!("bad coefficient `{c}`")))?, Some(m.trim()))
        }
        None => match parse_coeff::<T>(s) {
            Some(c) => (c, None),
            None => (T::one(), Some(s)),
        },
    };
    let mut p = ExtPoly::constant(coeff);
    if let Some(mono) = mono {
        for name in mono.split('^') {
            let name = name.trim();
            let v = vars.rank(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            p = &p * &ExtPoly::var(v);
        }
    }
    Ok(p)
}

/// Parse the grammar above against a variable table.
pub fn parse_poly<T: Scalar>(s: &str, vars: &VarTable) -> Result<ExtPoly<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse { line: 1, msg: "empty polynomial".into() });
    }
    let mut out = ExtPoly::zero();
    let mut sign = false;
    let mut start = 0;
    let bytes = s.as_bytes();
    let push = |piece: &str, negative: bool, out: &mut ExtPoly<T>| -> Result<()> {
        let t = parse_term::<T>(piece, vars)?;
        *out = if negative { &*out - &t } else { &*out + &t };
        Ok(())
    };
    let mut i = 0;
    if bytes[0] == b'-' {
        sign = true;
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && i > start {
            push(&s[start..i], sign, &mut out)?;
            sign = bytes[i] == b'-';
            start = i + 1;
        }
        i += 1;
    }
    push(&s[start..], sign, &mut out)?;
    Ok(out)
}
