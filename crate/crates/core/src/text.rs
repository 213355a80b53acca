//! Multivector literals: `-1 + 0.5 e123 - 2e23`.
//!
//! A literal is a sum of terms `[±][coefficient][e<digits>]`. Whitespace is
//! ignored everywhere, a missing coefficient means 1 and a missing blade means
//! the scalar. Blade digits must be strictly increasing and within the
//! algebra's dimension. Repeated blades are summed. Scientific notation uses
//! an upper-case `E` since a lower-case `e` always starts a blade.

use std::ops::Range;

use crate::algebra::{canonical_order, Blade, Multivector, Signature};
use crate::error::{Error, Result};

struct Scanner<'a> {
    // (byte offset in the original text, char) with whitespace removed
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            chars: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            pos: 0,
            text,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self, pos: usize) -> usize {
        self.chars.get(pos).map_or(self.text.len(), |&(o, _)| o)
    }

    /// Span in the original text covering scanner positions `start..end`.
    fn span(&self, start: usize, end: usize) -> Range<usize> {
        let lo = self.offset(start);
        let hi = if end > start {
            let (o, c) = self.chars[end - 1];
            o + c.len_utf8()
        } else {
            lo
        };
        lo..hi
    }

    fn eat_while(&mut self, pred: impl Fn(char) -> bool) -> usize {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn collect(&self, start: usize, end: usize) -> String {
        self.chars[start..end].iter().map(|&(_, c)| c).collect()
    }

    fn error(&self, message: impl Into<String>, start: usize, end: usize) -> Error {
        Error::Parse {
            message: message.into(),
            span: self.span(start, end),
        }
    }
}

/// Parses a multivector literal for the given algebra.
pub fn parse_mv(text: &str, sig: Signature) -> Result<Multivector> {
    let mut sc = Scanner::new(text);
    if sc.chars.is_empty() {
        return Err(Error::Parse {
            message: "empty multivector literal".into(),
            span: 0..text.len(),
        });
    }
    let mut mv = Multivector::zero(sig);
    let mut first = true;
    while sc.peek().is_some() {
        let term_start = sc.pos;
        let sign = match sc.peek() {
            Some('+') => {
                sc.pos += 1;
                1.0
            }
            Some('-') => {
                sc.pos += 1;
                -1.0
            }
            _ if first => 1.0,
            _ => return Err(sc.error("expected '+' or '-' between terms", sc.pos, sc.pos + 1)),
        };
        first = false;

        let num_start = sc.pos;
        let coef = scan_number(&mut sc)?;
        let has_coef = sc.pos > num_start;
        if has_coef && sc.peek() == Some('*') {
            sc.pos += 1;
        }

        let blade = if sc.peek() == Some('e') {
            let blade_start = sc.pos;
            sc.pos += 1;
            let digits_start = sc.pos;
            sc.eat_while(|c| c.is_ascii_digit());
            let digits = sc.collect(digits_start, sc.pos);
            parse_blade(&digits, sig).map_err(|m| sc.error(m, blade_start, sc.pos))?
        } else if has_coef {
            Blade::SCALAR
        } else {
            let end = (sc.pos + 1).min(sc.chars.len());
            return Err(sc.error("expected a number or a blade", term_start, end));
        };

        let value = sign * coef.unwrap_or(1.0);
        mv.set_coeff(blade, mv.coeff(blade) + value);
    }
    Ok(mv)
}

fn scan_number(sc: &mut Scanner) -> Result<Option<f64>> {
    let start = sc.pos;
    let int_digits = sc.eat_while(|c| c.is_ascii_digit());
    let mut frac_digits = 0;
    if sc.peek() == Some('.') {
        sc.pos += 1;
        frac_digits = sc.eat_while(|c| c.is_ascii_digit());
    }
    if sc.pos == start {
        return Ok(None);
    }
    if int_digits + frac_digits == 0 {
        return Err(sc.error("malformed number", start, sc.pos));
    }
    if sc.peek() == Some('E') {
        sc.pos += 1;
        if matches!(sc.peek(), Some('+' | '-')) {
            sc.pos += 1;
        }
        if sc.eat_while(|c| c.is_ascii_digit()) == 0 {
            return Err(sc.error("malformed exponent", start, sc.pos));
        }
    }
    let literal = sc.collect(start, sc.pos);
    literal
        .parse::<f64>()
        .map(Some)
        .map_err(|_| sc.error(format!("malformed number '{literal}'"), start, sc.pos))
}

fn parse_blade(digits: &str, sig: Signature) -> std::result::Result<Blade, String> {
    if digits.is_empty() {
        return Err("blade 'e' needs at least one index".into());
    }
    let mut last = 0;
    let mut indices = Vec::with_capacity(digits.len());
    for c in digits.chars() {
        let i = c.to_digit(10).unwrap_or(0) as usize;
        if i == 0 || i > sig.dim() {
            return Err(format!(
                "e{digits}: index {i} is not a basis vector of {sig}"
            ));
        }
        if i <= last {
            return Err(format!("e{digits}: indices must be strictly increasing"));
        }
        last = i;
        indices.push(i);
    }
    Blade::from_indices(&indices).ok_or_else(|| format!("invalid blade e{digits}"))
}

/// Formats a multivector as a literal accepted by [`parse_mv`], e.g.
/// `1 + 0.5 e123 - 2 e23`. Coefficients print in shortest round-trip form.
pub fn format_mv(mv: &Multivector) -> String {
    let mut out = String::new();
    for (&blade, &c) in canonical_order(mv.signature()).iter().zip(mv.coeffs()) {
        if c == 0.0 {
            continue;
        }
        let neg = c.is_sign_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if blade == Blade::SCALAR {
            out.push_str(&mag.to_string());
        } else if mag == 1.0 {
            out.push_str(&blade.to_string());
        } else {
            out.push_str(&format!("{mag} {blade}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
