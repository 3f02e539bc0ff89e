//! Parser for the canonical scalar text form.
//!
//! Grammar (usual precedence, `*` and `/` left-associative):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-'* atom ('^' '-'? digits)?
//! atom   := digits | ident | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Scalar, ScalarError, Var};

pub fn parse_scalar(input: &str) -> Result<Scalar, ScalarError> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse(format!("{msg} at position {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                '/' => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.try_div(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        let mut negate = false;
        while self.peek() == Some('-') {
            self.bump();
            negate = !negate;
        }
        let base = self.atom()?;
        let value = if self.peek() == Some('^') {
            self.bump();
            let mut sign = 1i64;
            if self.peek() == Some('-') {
                self.bump();
                sign = -1;
            }
            let digits = self.digits()?;
            let exp: i64 = digits
                .parse()
                .map_err(|_| self.err("exponent out of range"))?;
            if sign < 0 && base.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            base.pow_int(sign * exp)
        } else {
            base
        };
        Ok(if negate { -&value } else { value })
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits()?;
                let n: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Scalar::from_rational(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.ident();
                Ok(Scalar::var(Var::from_name(&name)))
            }
            _ => Err(self.err("expected a number, name or '('")),
        }
    }

    fn digits(&mut self) -> Result<String, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_precedence() {
        let x = parse_scalar("1/q*z").unwrap();
        let want = &(&Scalar::one() / &Scalar::q()) * &Scalar::z();
        assert_eq!(x, want);
    }

    #[test]
    fn parses_negative_exponent() {
        let x = parse_scalar("q^-2").unwrap();
        assert_eq!(x, Scalar::q_pow(-2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("q +").is_err());
        assert!(parse_scalar("(q").is_err());
        assert!(parse_scalar("q ) ").is_err());
        assert!(parse_scalar("1/0").is_err());
    }
}
