//! Parsing of cyclotomic coefficient literals.
//!
//! A coefficient is a signed sum of terms `RAT`, `RAT*z^K`, `z^K` (or bare
//! `z`), where `RAT` is `INT` or `INT/POSINT` and `z` stands for `ζ_N` with
//! `N` fixed per invocation. A coefficient list separates coefficients with
//! commas: `"1, z^2, z"`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cyclo::Cyclo;
use super::rat::Rat;
use crate::error::{Error, Result};

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Scanner<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.base + self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse as integer"))
    }

    /// `z` or `z^K`, cursor on the `z`.
    fn zpower(&mut self) -> Result<usize> {
        self.pos += 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.digits()?;
            let k: usize = k
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            Ok(k)
        } else {
            Ok(1)
        }
    }
}

/// Parse one coefficient literal into `Q(ζ_order)`.
pub fn parse_cyclo(text: &str, order: usize) -> Result<Cyclo> {
    parse_at(text, order, 0)
}

fn parse_at(text: &str, order: usize, base: usize) -> Result<Cyclo> {
    let mut sc = Scanner {
        src: text.as_bytes(),
        pos: 0,
        base,
    };
    let mut raw: Vec<Rat> = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match sc.peek() {
            None if first => return Err(sc.err("empty coefficient")),
            None => return Err(sc.err("dangling operator")),
            Some(b'+') if !first => sc.pos += 1,
            Some(b'-') => {
                sc.pos += 1;
                negative = true;
            }
            Some(b'+') => sc.pos += 1,
            _ if !first => return Err(sc.err("expected '+' or '-' between terms")),
            _ => {}
        }
        let (coef, power) = match sc.peek() {
            Some(b'z') => (Rat::one(), sc.zpower()?),
            Some(c) if c.is_ascii_digit() => {
                let n = sc.digits()?;
                let mut value = Rat::from_integer(n);
                if sc.peek() == Some(b'/') {
                    sc.pos += 1;
                    let d = sc.digits()?;
                    if d.is_zero() {
                        return Err(sc.err("zero denominator"));
                    }
                    value /= Rat::from_integer(d);
                }
                if sc.peek() == Some(b'*') {
                    sc.pos += 1;
                    if sc.peek() != Some(b'z') {
                        return Err(sc.err("expected 'z' after '*'"));
                    }
                    (value, sc.zpower()?)
                } else {
                    (value, 0)
                }
            }
            Some(_) => return Err(sc.err("expected a number or 'z'")),
            None => return Err(sc.err("unexpected end of input")),
        };
        if raw.len() <= power {
            raw.resize(power + 1, Rat::zero());
        }
        raw[power] += if negative { -coef } else { coef };
        first = false;
        match sc.peek() {
            None => break,
            Some(b'+') | Some(b'-') => continue,
            Some(_) => return Err(sc.err("unexpected character")),
        }
    }
    Cyclo::new(order, &raw)
}

/// Parse a comma-separated list of coefficient literals.
pub fn parse_coeff_list(text: &str, order: usize) -> Result<Vec<Cyclo>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        out.push(parse_at(part, order, offset)?);
        offset += part.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::rat;

    #[test]
    fn parses_rationals_and_powers() {
        let xi = Cyclo::zeta(3, 1).unwrap();
        let list = parse_coeff_list("1, z^2, z", 3).unwrap();
        assert_eq!(list, vec![Cyclo::one(), &xi * &xi, xi.clone()]);
        let c = parse_cyclo("1/3*z^2 + 1/3", 3).unwrap();
        assert_eq!(c, &(&(&xi * &xi) + &Cyclo::one()) * &Cyclo::from_rat(&rat(1, 3)));
        assert_eq!(parse_cyclo("-1/2", 1).unwrap(), Cyclo::from_rat(&rat(-1, 2)));
        assert_eq!(parse_cyclo(" - z ", 4).unwrap(), -Cyclo::zeta(4, 1).unwrap());
    }

    #[test]
    fn literal_output_parses_back() {
        let c = parse_cyclo("3/7*z^3 - 2*z + 5", 10).unwrap();
        assert_eq!(parse_cyclo(&c.to_literal(), 10).unwrap(), c);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_coeff_list("1/2, 3/0", 1).unwrap_err();
        assert!(matches!(err, Error::Parse { position: 8, .. }), "{err:?}");
        assert!(matches!(parse_cyclo("", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_cyclo("1 +", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_cyclo("2*y", 1), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_cyclo("1 2", 1), Err(Error::Parse { .. })));
    }
}
