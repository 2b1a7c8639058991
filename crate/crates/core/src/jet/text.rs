//! Canonical text form of jets: `1 t^3 + 1 t^2 xi + 1/5 t xi^2`.
//!
//! Terms are listed by increasing total degree and, inside a degree, by
//! increasing exponent of the leading variable. Every term carries an
//! explicit exact coefficient. The parser also accepts `*`, omitted unit
//! coefficients, decimals and `ξ`.

use std::fmt;
use std::iter::Peekable;
use std::str::{Chars, FromStr};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Multidegree, VarSet};
use super::poly::TruncatedPoly;
use super::Rational;
use crate::error::{Error, Result};

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| {
            a.degree().cmp(&b.degree()).then_with(|| a.exponents().cmp(b.exponents()))
        });
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mag = if i == 0 {
                c.clone()
            } else if c.is_negative() {
                f.write_str(" - ")?;
                -c.clone()
            } else {
                f.write_str(" + ")?;
                c.clone()
            };
            write!(f, "{mag}")?;
            if m.degree() > 0 {
                write!(f, " {m}")?;
            }
        }
        Ok(())
    }
}

impl TruncatedPoly {
    /// Parses a jet over `vars`, dropping terms above `cap`.
    pub fn parse(vars: VarSet, cap: u32, text: &str) -> Result<Self> {
        Parser { chars: text.chars().peekable(), vars }.expr(cap)
    }
}

/// Parses over the source variables at the default cap.
impl FromStr for TruncatedPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TruncatedPoly::parse(VarSet::Source, crate::DEFAULT_CAP, s)
    }
}

/// Exact rational from `p`, `p/q` or a finite decimal such as `-0.25`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational number: `{text}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{text}`")));
        }
        return Ok(Rational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}0").parse().map_err(|_| bad())?;
    let scale = BigInt::from(10u8).pow(frac.len() as u32 + 1);
    let r = Rational::new(digits, scale);
    Ok(if neg { -r } else { r })
}

struct Parser<'a> {
    chars: Peekable<Chars<'a>>,
    vars: VarSet,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn expr(&mut self, cap: u32) -> Result<TruncatedPoly> {
        let mut out = TruncatedPoly::zero(self.vars, cap);
        self.skip_ws();
        let mut sign = Rational::one();
        match self.chars.peek() {
            None => return Err(Error::Parse("empty polynomial".into())),
            Some('-') => {
                self.chars.next();
                sign = -sign;
            }
            Some('+') => {
                self.chars.next();
            }
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, c * &sign);
            self.skip_ws();
            match self.chars.next() {
                None => return Ok(out),
                Some('+') => sign = Rational::one(),
                Some('-') => sign = -Rational::one(),
                Some(other) => return Err(Error::Parse(format!("unexpected `{other}`"))),
            }
        }
    }

    fn term(&mut self) -> Result<(Multidegree, Rational)> {
        self.skip_ws();
        let mut coeff = Rational::one();
        let mut seen = false;
        if self.chars.peek().is_some_and(|c| c.is_ascii_digit() || *c == '.') {
            let mut num = self.take_while(|c| c.is_ascii_digit() || c == '.');
            self.skip_ws();
            if self.chars.peek() == Some(&'/') {
                self.chars.next();
                self.skip_ws();
                let den = self.take_while(|c| c.is_ascii_digit());
                num = format!("{num}/{den}");
            }
            coeff = parse_rational(&num)?;
            seen = true;
        }
        let mut exps = [0u16; 3];
        loop {
            self.skip_ws();
            if self.chars.peek() == Some(&'*') {
                self.chars.next();
                self.skip_ws();
            }
            match self.chars.peek() {
                Some(c) if c.is_alphabetic() => {}
                _ => break,
            }
            let name = self.take_while(|c| c.is_alphanumeric() || c == '_');
            let idx = self.vars.index_of(&name).ok_or(Error::UnknownVariable(name))?;
            self.skip_ws();
            let mut e = 1u16;
            if self.chars.peek() == Some(&'^') {
                self.chars.next();
                self.skip_ws();
                let digits = self.take_while(|c| c.is_ascii_digit());
                e = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent `{digits}`")))?;
            }
            exps[idx] += e;
            seen = true;
        }
        if !seen {
            return Err(Error::Parse("expected a term".into()));
        }
        Ok((Multidegree::new(self.vars, &exps[..self.vars.arity()]), coeff))
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(&c) = self.chars.peek() {
            if !pred(c) {
                break;
            }
            s.push(c);
            self.chars.next();
        }
        s
    }
}
