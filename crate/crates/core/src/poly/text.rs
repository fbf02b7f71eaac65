//! Plain-text interchange format.
//!
//! ```text
//! # comment lines start with '#'
//! vars: 3
//! 1/12 x1 x2^2 - x3 + 2
//! ```
//!
//! `poly := [sign] term (('+'|'-') term)*`, `term := [rational] var*`,
//! `rational := int | int '/' posint`, `var := 'x' index ['^' posint]`.
//! Factors are whitespace separated and variables are 1-based. The `vars:`
//! header declares the arity; without it the arity is the largest index
//! used (at least 1). The polynomial may span several lines.
//!
//! The canonical form lists terms in descending graded-lex order with
//! coefficients in lowest terms, omits unit coefficients, and prints the
//! zero polynomial as `0`.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExponentVector, Polynomial, Rational};
use crate::error::{Error, Result};

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let constant = e.degree() == 0;
        let mut parts: Vec<String> = Vec::new();
        if constant || !abs.is_one() {
            parts.push(abs.to_string());
        }
        for (i, &k) in e.entries().iter().enumerate() {
            match k {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{}", i + 1, k)),
            }
        }
        out.push_str(&parts.join(" "));
    }
    out
}

/// Header plus canonical polynomial line.
pub fn format_file(p: &Polynomial) -> String {
    let mut s = String::new();
    writeln!(s, "vars: {}", p.arity()).unwrap();
    writeln!(s, "{}", format_polynomial(p)).unwrap();
    s
}

pub fn parse_polynomial(input: &str) -> Result<Polynomial> {
    parse_inner(input, None)
}

/// Parses with a fixed arity; a `vars:` header, if present, must agree.
pub fn parse_with_arity(input: &str, arity: usize) -> Result<Polynomial> {
    parse_inner(input, Some(arity))
}

/// `print(parse(input))`.
pub fn canonical(input: &str) -> Result<String> {
    parse_polynomial(input).map(|p| format_polynomial(&p))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Slash,
    Int(BigInt),
    Var { index: usize, exp: u32 },
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Appends `line` with every character but newlines replaced by spaces of
/// the same byte width.
fn blank_into(body: &mut String, line: &str) {
    for c in line.chars() {
        if c == '\n' {
            body.push('\n');
        } else {
            body.extend(std::iter::repeat(' ').take(c.len_utf8()));
        }
    }
}

fn parse_inner(input: &str, fixed: Option<usize>) -> Result<Polynomial> {
    // Blank out comment and header lines so byte positions stay meaningful.
    let mut body = String::with_capacity(input.len());
    let mut header: Option<(usize, usize)> = None;
    let mut offset = 0;
    for line in input.split_inclusive('\n') {
        let trimmed = line.trim_start();
        if trimmed.starts_with('#') {
            blank_into(&mut body, line);
        } else if let Some(rest) = trimmed.strip_prefix("vars:") {
            let pos = offset + (line.len() - trimmed.len());
            let n: usize = rest.trim().parse().map_err(|_| err(pos, "malformed `vars:` header"))?;
            if n == 0 {
                return Err(err(pos, "arity must be positive"));
            }
            if header.is_some() {
                return Err(err(pos, "duplicate `vars:` header"));
            }
            header = Some((n, pos));
            blank_into(&mut body, line);
        } else {
            body.push_str(line);
        }
        offset += line.len();
    }

    let toks = tokenize(&body)?;
    let terms = parse_terms(&toks, body.len())?;

    let used = terms.iter().flat_map(|(vars, _, _)| vars.iter().map(|(i, _)| *i)).max();
    let arity = match (fixed, header) {
        (Some(a), Some((h, pos))) if a != h => {
            return Err(err(pos, format!("header declares {h} variables, expected {a}")))
        }
        (Some(a), _) => a,
        (None, Some((h, _))) => h,
        (None, None) => used.map_or(1, |m| m + 1),
    };
    let mut p = Polynomial::zero(arity);
    for (vars, coeff, pos) in terms {
        let mut e = vec![0u32; arity];
        for (i, k) in vars {
            if i >= arity {
                return Err(err(pos, format!("variable x{} exceeds declared arity {arity}", i + 1)));
            }
            e[i] += k;
        }
        p.add_term(ExponentVector::new(e), coeff);
    }
    Ok(p)
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        let start = j;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        (start, j)
    };
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            b'/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let (a, j) = digits(i);
                out.push((Tok::Int(s[a..j].parse().expect("digits")), i));
                i = j;
            }
            b'x' => {
                let (a, j) = digits(i + 1);
                if a == j {
                    return Err(err(i, "expected variable index after 'x'"));
                }
                let index: usize = s[a..j].parse().map_err(|_| err(a, "variable index too large"))?;
                if index == 0 {
                    return Err(err(a, "variables are numbered from x1"));
                }
                let mut exp = 1u32;
                let mut end = j;
                if j < bytes.len() && bytes[j] == b'^' {
                    let (c, d) = digits(j + 1);
                    if c == d {
                        return Err(err(j + 1, "expected exponent after '^'"));
                    }
                    exp = s[c..d].parse().map_err(|_| err(c, "exponent too large"))?;
                    if exp == 0 {
                        return Err(err(c, "exponent must be positive"));
                    }
                    end = d;
                }
                out.push((Tok::Var { index: index - 1, exp }, i));
                i = end;
            }
            _ => {
                let c = s[i..].chars().next().unwrap();
                return Err(err(i, format!("unexpected character {c:?}")));
            }
        }
    }
    Ok(out)
}

type RawTerm = (Vec<(usize, u32)>, Rational, usize);

fn parse_terms(toks: &[(Tok, usize)], end: usize) -> Result<Vec<RawTerm>> {
    let mut terms = Vec::new();
    let mut k = 0;
    let pos_at = |k: usize| toks.get(k).map_or(end, |t| t.1);
    if toks.is_empty() {
        return Err(err(end, "empty polynomial"));
    }
    let mut negative = false;
    match toks[0].0 {
        Tok::Minus => {
            negative = true;
            k = 1;
        }
        Tok::Plus => k = 1,
        _ => {}
    }
    loop {
        let start = pos_at(k);
        let mut coeff = Rational::one();
        let mut any = false;
        if let Some((Tok::Int(n), _)) = toks.get(k) {
            let n = n.clone();
            k += 1;
            any = true;
            if let Some((Tok::Slash, p)) = toks.get(k) {
                let p = *p;
                k += 1;
                match toks.get(k) {
                    Some((Tok::Int(d), dp)) => {
                        if d.is_zero() {
                            return Err(err(*dp, "zero denominator"));
                        }
                        coeff = Rational::new(n, d.clone());
                        k += 1;
                    }
                    _ => return Err(err(p + 1, "expected denominator after '/'")),
                }
            } else {
                coeff = Rational::from_integer(n);
            }
        }
        let mut vars = Vec::new();
        while let Some((Tok::Var { index, exp }, _)) = toks.get(k) {
            vars.push((*index, *exp));
            k += 1;
            any = true;
        }
        if !any {
            return Err(err(start, "expected a term"));
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((vars, coeff, start));
        match toks.get(k) {
            None => break,
            Some((Tok::Plus, _)) => negative = false,
            Some((Tok::Minus, _)) => negative = true,
            Some((_, p)) => return Err(err(*p, "expected '+' or '-' between terms")),
        }
        k += 1;
        if k >= toks.len() {
            return Err(err(end, "dangling operator"));
        }
    }
    Ok(terms)
}
