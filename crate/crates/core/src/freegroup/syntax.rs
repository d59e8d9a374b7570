//! Plain-text word syntax.
//!
//! `a`/`A` are α and α⁻¹ (generator 0), `g`/`G` are γ and γ⁻¹ (generator 1),
//! `x3`/`X3` are `x_3` and its inverse. Any letter may carry a power suffix
//! `^k` with `k` a possibly negative integer. Tokens may be separated by
//! whitespace. `1` (or an empty string) is the identity.
//!
//! The printer groups runs into powers and separates tokens with one space,
//! e.g. `a^2 G A G`.

use alloc::string::String;
use core::fmt::{self, Write};

use super::{reduce, FreeWord, Letter, Sign};
use crate::presentations::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("word syntax error at byte {position}: {message}")]
pub struct WordSyntaxError {
    pub position: usize,
    pub message: &'static str,
}

fn err(position: usize, message: &'static str) -> WordSyntaxError {
    WordSyntaxError { position, message }
}

pub fn parse_word(text: &str) -> Result<FreeWord, WordSyntaxError> {
    let bytes = text.as_bytes();
    let mut i = 0usize;
    let mut letters = alloc::vec::Vec::new();
    while i < bytes.len() {
        let start = i;
        let ch = bytes[i];
        if ch.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let (generator, sign) = match ch {
            b'1' => {
                i += 1;
                continue;
            }
            b'a' => (0, Sign::Pos),
            b'A' => (0, Sign::Neg),
            b'g' => (1, Sign::Pos),
            b'G' => (1, Sign::Neg),
            b'x' | b'X' => {
                let digits_start = i + 1;
                let mut j = digits_start;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == digits_start {
                    return Err(err(start, "generator index expected after x"));
                }
                let index: u32 = text[digits_start..j]
                    .parse()
                    .map_err(|_| err(digits_start, "generator index out of range"))?;
                i = j - 1;
                (index, if ch == b'x' { Sign::Pos } else { Sign::Neg })
            }
            _ => return Err(err(start, "unexpected character")),
        };
        i += 1;
        let mut exponent: i64 = 1;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let exp_start = i;
            if i < bytes.len() && bytes[i] == b'-' {
                i += 1;
            }
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            exponent = text[exp_start..i]
                .parse()
                .map_err(|_| err(exp_start, "integer exponent expected after ^"))?;
        }
        let sign = if exponent < 0 { sign.flip() } else { sign };
        for _ in 0..exponent.unsigned_abs() {
            letters.push(Letter::new(generator, sign));
        }
    }
    Ok(reduce(letters))
}

fn write_letter<W: Write>(out: &mut W, l: Letter, alphabet: Alphabet) -> fmt::Result {
    let pos = l.sign == Sign::Pos;
    match (alphabet, l.generator) {
        (Alphabet::AlphaGamma, 0) => out.write_char(if pos { 'a' } else { 'A' }),
        (Alphabet::AlphaGamma, 1) => out.write_char(if pos { 'g' } else { 'G' }),
        (_, k) => write!(out, "{}{}", if pos { 'x' } else { 'X' }, k),
    }
}

pub fn write_word<W: Write>(out: &mut W, w: &FreeWord, alphabet: Alphabet) -> fmt::Result {
    let letters = w.letters();
    if letters.is_empty() {
        return out.write_char('1');
    }
    let mut i = 0;
    while i < letters.len() {
        let mut j = i + 1;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        if i > 0 {
            out.write_char(' ')?;
        }
        write_letter(out, letters[i], alphabet)?;
        if j - i > 1 {
            write!(out, "^{}", j - i)?;
        }
        i = j;
    }
    Ok(())
}

pub fn format_word(w: &FreeWord, alphabet: Alphabet) -> String {
    let mut s = String::new();
    write_word(&mut s, w, alphabet).expect("writing to a String cannot fail");
    s
}
