//! Text syntax for polynomials: variables `x1,x2,x3` (aliases `x,y,z` and
//! `x_1,x_2,x_3`), integer or rational coefficients, operators `+ - * ^`,
//! parentheses, and implicit multiplication by juxtaposition.

use super::{Polynomial, Rat};
use crate::error::{EngineError, Result};
use num_bigint::BigInt;


#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn var_index(name: &str, nvars: usize) -> Option<usize> {
    let idx = match name {
        "x" | "x1" | "x_1" => 0,
        "y" | "x2" | "x_2" => 1,
        "z" | "x3" | "x_3" => 2,
        _ => return None,
    };
    (idx < nvars).then_some(idx)
}

fn tokenize(input: &str, nvars: usize) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' | '−' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' | '·' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                let n = lit
                    .parse::<BigInt>()
                    .map_err(|e| EngineError::Parse(format!("bad integer `{lit}`: {e}")))?;
                tokens.push(Token::Num(n));
            }
            'a'..='z' => {
                let start = i;
                i += 1;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                let idx = var_index(&name, nvars).ok_or_else(|| {
                    EngineError::Parse(format!(
                        "unknown variable `{name}` (expected one of x1..x{nvars})"
                    ))
                })?;
                tokens.push(Token::Var(idx));
            }
            _ => {
                return Err(EngineError::Parse(format!(
                    "unexpected character `{c}` at byte {i}"
                )))
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        while let Some(t) = self.peek() {
            match t {
                Token::Minus => {
                    negate = !negate;
                    self.pos += 1;
                }
                Token::Plus => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        while let Some(t) = self.peek() {
            match t {
                Token::Plus => {
                    self.pos += 1;
                    let rhs = self.signed_term()?;
                    acc = &acc + &rhs;
                }
                Token::Minus => {
                    self.pos += 1;
                    let rhs = self.signed_term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn signed_term(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        while let Some(Token::Minus) = self.peek() {
            negate = !negate;
            self.pos += 1;
        }
        let t = self.term()?;
        Ok(if negate { -&t } else { t })
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = &acc * &rhs;
                }
                // implicit multiplication: 2x, x y, 3(x+y), (x+y)(x-y)
                Some(Token::Var(_)) | Some(Token::Num(_)) | Some(Token::LParen) => {
                    let rhs = self.factor()?;
                    acc = &acc * &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let mut base = self.base()?;
        while let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.bump() {
                Some(Token::Num(n)) => {
                    let exp = u32::try_from(&n)
                        .map_err(|_| EngineError::Parse(format!("exponent `{n}` too large")))?;
                    base = base.pow(exp);
                }
                other => {
                    return Err(EngineError::Parse(format!(
                        "expected integer exponent after `^`, got {other:?}"
                    )))
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some(Token::Num(n)) => {
                // rational literal p/q
                if let Some(Token::Slash) = self.peek() {
                    self.pos += 1;
                    match self.bump() {
                        Some(Token::Num(d)) => Ok(Polynomial::constant(
                            self.nvars,
                            Rat::new(n, d),
                        )),
                        other => Err(EngineError::Parse(format!(
                            "expected denominator after `/`, got {other:?}"
                        ))),
                    }
                } else {
                    Ok(Polynomial::constant(self.nvars, Rat::from(n)))
                }
            }
            Some(Token::Var(i)) => Ok(Polynomial::var(self.nvars, i)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    other => Err(EngineError::Parse(format!(
                        "expected `)`, got {other:?}"
                    ))),
                }
            }
            Some(Token::Minus) => {
                let inner = self.base()?;
                Ok(-&inner)
            }
            other => Err(EngineError::Parse(format!(
                "unexpected token {other:?} where a value was expected"
            ))),
        }
    }
}

pub fn parse_polynomial(input: &str, nvars: usize) -> Result<Polynomial> {
    let tokens = tokenize(input, nvars)?;
    if tokens.is_empty() {
        return Err(EngineError::Parse("empty polynomial".into()));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        nvars,
    };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(EngineError::Parse(format!(
            "trailing input from token {}",
            parser.pos
        )));
    }
    Ok(p)
}

/// Parse an exact rational written as `p`, `p/q`, or `-p/q`.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = num_str
        .parse::<BigInt>()
        .map_err(|e| EngineError::Parse(format!("bad rational `{s}`: {e}")))?;
    let d = den_str
        .parse::<BigInt>()
        .map_err(|e| EngineError::Parse(format!("bad rational `{s}`: {e}")))?;
    if d == BigInt::from(0) {
        return Err(EngineError::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(n, d))
}
