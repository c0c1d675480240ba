//! Tokenizer for the `name(arg, ...)[@seed]` text form shared by family,
//! weight and grid specs.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Arg {
    Number(f64),
    Term(Box<Term>),
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Term {
    pub name: String,
    pub args: Vec<Arg>,
    pub seed: Option<u64>,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                match a {
                    Arg::Number(v) => write!(f, "{:?}", v)?,
                    Arg::Term(t) => write!(f, "{}", t)?,
                }
            }
            f.write_str(")")?;
        }
        if let Some(seed) = self.seed {
            write!(f, "@{}", seed)?;
        }
        Ok(())
    }
}

pub(crate) fn parse_term(text: &str) -> Result<Term> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let term = p.term()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(term)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        let text = core::str::from_utf8(self.src).unwrap_or("");
        Error::Parse(format!("{} at byte {} of `{}`", what, self.pos, text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos || !self.src[start].is_ascii_alphabetic() {
            return Err(self.error("expected a name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).to_ascii_lowercase())
    }

    fn number_text(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && matches!(
                self.src[self.pos],
                b'0'..=b'9' | b'.' | b'-' | b'+' | b'e' | b'E'
            )
        {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn term(&mut self) -> Result<Term> {
        let name = self.ident()?;
        let mut args = Vec::new();
        if self.eat(b'(') && !self.eat(b')') {
            loop {
                args.push(self.arg()?);
                if self.eat(b')') {
                    break;
                }
                if !self.eat(b',') {
                    return Err(self.error("expected `,` or `)`"));
                }
            }
        }
        let seed = if self.eat(b'@') {
            let text = self.number_text().to_string();
            Some(
                text.parse::<u64>()
                    .map_err(|_| self.error("expected an unsigned integer seed"))?,
            )
        } else {
            None
        };
        Ok(Term { name, args, seed })
    }

    fn arg(&mut self) -> Result<Arg> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => Ok(Arg::Term(Box::new(self.term()?))),
            Some(_) => {
                let text = self.number_text().to_string();
                let v = text
                    .parse::<f64>()
                    .map_err(|_| self.error("expected a number"))?;
                if !v.is_finite() {
                    return Err(self.error("non-finite number"));
                }
                Ok(Arg::Number(v))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses `[v1, v2, ...]` into reals.
pub(crate) fn parse_real_list(text: &str) -> Result<Vec<f64>> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[...]`, got `{}`", text)))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad number `{}`", s.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_terms_with_seed() {
        let t = parse_term("perturbed(3, harmonic(1.0), 0.01)@42").unwrap();
        assert_eq!(t.name, "perturbed");
        assert_eq!(t.seed, Some(42));
        assert_eq!(t.args.len(), 3);
        assert_eq!(t.to_string(), "perturbed(3.0,harmonic(1.0),0.01)@42");
    }

    #[test]
    fn bare_names_and_errors() {
        assert!(parse_term("logdamped").unwrap().args.is_empty());
        assert!(parse_term("harmonic(1.0").is_err());
        assert!(parse_term("harmonic(1.0) x").is_err());
        assert!(parse_term("1harmonic").is_err());
        assert!(parse_term("h(1)@-3").is_err());
    }

    #[test]
    fn real_lists() {
        assert_eq!(parse_real_list("[1, 0.5]").unwrap(), alloc::vec![1.0, 0.5]);
        assert!(parse_real_list("1,2").is_err());
    }
}
