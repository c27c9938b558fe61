//! Text notation for Fock states and momenta.
//!
//! ```text
//! state  := term (('+'|'-') term)*
//! term   := rat? '*'? factor*
//! factor := gen '[' int ']' | 'e^{' vector '}' | '(' state ')' | 'T' '(' state ')'
//! vector := vterm (('+'|'-') vterm)*
//! vterm  := rat? '*'? sym ('*' sym)* ('/' 'sqrtp')?
//! ```
//!
//! Mode factors act on the state to their right; a term without a state
//! factor acts on the vacuum. In a vector, `sqrtp` is `√p` and `alpha`
//! stands for `√p·a` in spaces that declare the rescaled generator `a`, so
//! `sqrtp*alpha` is `p·a`. Canonical printing is [`FockState::pretty`].

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::rat::{int, Rat};
use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::lattice::QuadSpace;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
    text: String,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = (line, col);
        let (tok, len) = if c.is_ascii_digit() {
            let len = chars[i..].iter().take_while(|c| c.is_ascii_digit()).count();
            let text: String = chars[i..i + len].iter().collect();
            (Tok::Num(text.parse().expect("digits")), len)
        } else if c.is_alphabetic() || c == '_' {
            let len = chars[i..]
                .iter()
                .take_while(|c| c.is_alphanumeric() || **c == '_')
                .count();
            (Tok::Ident(chars[i..i + len].iter().collect()), len)
        } else if "+-*/^{}[]()".contains(c) {
            (Tok::Sym(c), 1)
        } else {
            return Err(Error::Parse {
                line,
                column: col,
                token: c.to_string(),
                message: "unexpected character".into(),
            });
        };
        out.push(Token {
            tok,
            line: start.0,
            column: start.1,
            text: chars[i..i + len].iter().collect(),
        });
        i += len;
        col += len;
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
        text: "end of input".into(),
    });
    Ok(out)
}

enum Factor {
    Mode(usize, i64),
    State(FockState),
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    space: &'a Arc<QuadSpace>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.tokens[(self.pos + k).min(self.tokens.len() - 1)].tok
    }

    fn error(&self, message: &str) -> Error {
        let t = &self.tokens[self.pos];
        Error::Parse {
            line: t.line,
            column: t.column,
            token: t.text.clone(),
            message: message.to_string(),
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.pos].tok.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == &Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    /// An unsigned rational `n` or `n/d`, if present.
    fn rational(&mut self) -> Result<Option<Rat>> {
        let Tok::Num(n) = self.peek().clone() else {
            return Ok(None);
        };
        self.bump();
        if self.peek() == &Tok::Sym('/') {
            if let Tok::Num(d) = self.peek_at(1).clone() {
                self.bump();
                self.bump();
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                return Ok(Some(Rat::new(n, d)));
            }
        }
        Ok(Some(Rat::from_integer(n)))
    }

    fn state(&mut self) -> Result<FockState> {
        let mut acc = FockState::zero(self.space.clone());
        let mut sign = int(1);
        if self.eat('-') {
            sign = int(-1);
        } else {
            self.eat('+');
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&t.scale(&sign))?;
            if self.eat('+') {
                sign = int(1);
            } else if self.eat('-') {
                sign = int(-1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FockState> {
        let coeff = self.rational()?;
        if coeff.is_some() {
            self.eat('*');
        }
        let mut factors = Vec::new();
        while let Some(f) = self.factor()? {
            factors.push(f);
            self.eat('*');
        }
        if coeff.is_none() && factors.is_empty() {
            return Err(self.error("expected a term"));
        }
        let mut state = match factors.last() {
            Some(Factor::State(_)) => match factors.pop() {
                Some(Factor::State(s)) => s,
                _ => unreachable!("last factor is a state"),
            },
            _ => FockState::vacuum(self.space.clone()),
        };
        for f in factors.iter().rev() {
            match f {
                Factor::Mode(g, n) => state = state.mode(*g, *n),
                Factor::State(_) => return Err(self.error("a state factor must come last in its term")),
            }
        }
        Ok(state.scale(&coeff.unwrap_or_else(Rat::one)))
    }

    fn factor(&mut self) -> Result<Option<Factor>> {
        match self.peek().clone() {
            Tok::Sym('(') => {
                self.bump();
                let s = self.state()?;
                self.expect(')')?;
                Ok(Some(Factor::State(s)))
            }
            Tok::Ident(name) if name == "e" && self.peek_at(1) == &Tok::Sym('^') => {
                self.bump();
                self.bump();
                self.expect('{')?;
                let v = self.vector()?;
                self.expect('}')?;
                Ok(Some(Factor::State(FockState::exp(self.space.clone(), v))))
            }
            Tok::Ident(name) if name == "T" && self.peek_at(1) == &Tok::Sym('(') => {
                self.bump();
                self.bump();
                let s = self.state()?;
                self.expect(')')?;
                Ok(Some(Factor::State(s.translate())))
            }
            Tok::Ident(name) => {
                let g = self
                    .space
                    .index_of(&name)
                    .map_err(|_| Error::UnknownGenerator(name.clone()))?;
                self.bump();
                self.expect('[')?;
                let neg = self.eat('-');
                let Tok::Num(n) = self.peek().clone() else {
                    return Err(self.error("expected a mode index"));
                };
                self.bump();
                self.expect(']')?;
                let n: i64 = n.try_into().map_err(|_| self.error("mode index out of range"))?;
                Ok(Some(Factor::Mode(g, if neg { -n } else { n })))
            }
            _ => Ok(None),
        }
    }

    /// `p` recovered from the rescaled generator `a` with `(a, a) = 2/p`.
    fn p_value(&self) -> Option<Rat> {
        let a = self.space.index_of("a").ok()?;
        let g = self.space.gram(a, a);
        (!g.is_zero()).then(|| int(2) / g)
    }

    fn vector(&mut self) -> Result<Vec<Rat>> {
        let mut acc = vec![Rat::zero(); self.space.dim()];
        let mut sign = int(1);
        if self.eat('-') {
            sign = int(-1);
        } else {
            self.eat('+');
        }
        loop {
            let coeff = self.rational()?;
            if coeff.is_some() {
                self.eat('*');
            }
            let mut sqrt_power = 0i32;
            let mut target: Option<usize> = None;
            while let Tok::Ident(name) = self.peek().clone() {
                if name == "sqrtp" {
                    sqrt_power += 1;
                } else if let Ok(g) = self.space.index_of(&name) {
                    if target.replace(g).is_some() {
                        return Err(self.error("a vector term names one generator"));
                    }
                } else if name == "alpha" && self.p_value().is_some() {
                    let g = self.space.index_of("a").expect("checked");
                    if target.replace(g).is_some() {
                        return Err(self.error("a vector term names one generator"));
                    }
                    sqrt_power += 1;
                } else {
                    return Err(Error::UnknownGenerator(name));
                }
                self.bump();
                if !self.eat('*') {
                    break;
                }
            }
            if self.peek() == &Tok::Sym('/') && self.peek_at(1) == &Tok::Ident("sqrtp".into()) {
                self.bump();
                self.bump();
                sqrt_power -= 1;
            }
            let mut c = &sign * coeff.clone().unwrap_or_else(Rat::one);
            match target {
                Some(g) => {
                    if sqrt_power % 2 != 0 {
                        return Err(Error::NonRational(format!(
                            "odd power of sqrtp on {}",
                            self.space.names()[g]
                        )));
                    }
                    if sqrt_power != 0 {
                        let p = self
                            .p_value()
                            .ok_or_else(|| self.error("sqrtp needs a rescaled generator a"))?;
                        for _ in 0..sqrt_power.abs() / 2 {
                            c = if sqrt_power > 0 { c * &p } else { c / &p };
                        }
                    }
                    acc[g] += c;
                }
                None => {
                    let bare_zero = coeff.as_ref().is_some_and(|x| x.is_zero()) && sqrt_power == 0;
                    if !bare_zero {
                        return Err(self.error("expected a generator name"));
                    }
                }
            }
            if self.eat('+') {
                sign = int(1);
            } else if self.eat('-') {
                sign = int(-1);
            } else {
                return Ok(acc);
            }
        }
    }
}

/// Parses a state in `space`.
pub fn parse_expr(input: &str, space: &Arc<QuadSpace>) -> Result<FockState> {
    let mut parser = Parser {
        tokens: lex(input)?,
        pos: 0,
        space,
    };
    let s = parser.state()?;
    if parser.peek() != &Tok::End {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(s)
}

/// Parses a momentum vector in `space`, such as `u+v` or `-1/2*sqrtp*alpha`.
pub fn parse_vector(input: &str, space: &Arc<QuadSpace>) -> Result<Vec<Rat>> {
    let mut parser = Parser {
        tokens: lex(input)?,
        pos: 0,
        space,
    };
    let v = parser.vector()?;
    if parser.peek() != &Tok::End {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(v)
}
