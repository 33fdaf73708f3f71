//! Hand-rolled recursive-descent parser for the formula syntax.
//!
//! Precedence, loosest first: `|`, `&`, binary `U`/`S`, then prefix `!` and
//! the unary temporal operators. `&` and `|` associate to the left; the
//! binary temporal operators are non-associative and need parentheses for
//! nesting. The letters F G O H U S are reserved operator names.

use super::{Formula, TimeInterval};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    True,
    False,
    Number(u32),
    Bang,
    Amp,
    Pipe,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Op(char),
    Eof,
}

struct Lexer<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(text: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lex = Lexer {
            text: text.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        loop {
            let (tok, pos) = lex.next_token()?;
            let done = tok == Tok::Eof;
            out.push((tok, pos));
            if done {
                return Ok(out);
            }
        }
    }

    fn next_token(&mut self) -> Result<(Tok, usize)> {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        if self.pos >= self.text.len() {
            return Ok((Tok::Eof, start));
        }
        let c = self.text[self.pos];
        self.pos += 1;
        let tok = match c {
            b'!' => Tok::Bang,
            b'&' => Tok::Amp,
            b'|' => Tok::Pipe,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                let mut value: u64 = (c - b'0') as u64;
                while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
                    value = value * 10 + (self.text[self.pos] - b'0') as u64;
                    if value > u32::MAX as u64 {
                        return Err(Error::Syntax {
                            pos: start,
                            msg: "interval bound too large".into(),
                        });
                    }
                    self.pos += 1;
                }
                Tok::Number(value as u32)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while self.pos < self.text.len()
                    && (self.text[self.pos].is_ascii_alphanumeric() || self.text[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii");
                match word {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    "U" | "S" | "F" | "G" | "O" | "H" => Tok::Op(word.as_bytes()[0] as char),
                    _ => Tok::Ident(word.to_owned()),
                }
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character {:?}", other as char),
                })
            }
        };
        Ok((tok, start))
    }
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    index: usize,
}

pub fn parse(text: &str) -> Result<Formula> {
    let mut parser = Parser {
        tokens: Lexer::tokens(text)?,
        index: 0,
    };
    let formula = parser.or_expr()?;
    parser.expect_eof()?;
    Ok(formula)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.index].0
    }

    fn pos(&self) -> usize {
        self.tokens[self.index].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.tokens[self.index].0.clone();
        if self.index < self.tokens.len() - 1 {
            self.index += 1;
        }
        tok
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        }
    }

    fn expect_eof(&self) -> Result<()> {
        if *self.peek() != Tok::Eof {
            return Err(self.err("trailing input after formula"));
        }
        Ok(())
    }

    fn or_expr(&mut self) -> Result<Formula> {
        let mut lhs = self.and_expr()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            let rhs = self.and_expr()?;
            lhs = Formula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and_expr(&mut self) -> Result<Formula> {
        let mut lhs = self.binary_temporal()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.binary_temporal()?;
            lhs = Formula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn binary_temporal(&mut self) -> Result<Formula> {
        let lhs = self.unary()?;
        let op = match self.peek() {
            Tok::Op('U') => 'U',
            Tok::Op('S') => 'S',
            _ => return Ok(lhs),
        };
        self.bump();
        let interval = self.interval()?;
        let rhs = self.unary()?;
        if matches!(self.peek(), Tok::Op('U') | Tok::Op('S')) {
            return Err(self.err(
                "binary temporal operators are non-associative; parenthesize nested until/since",
            ));
        }
        Ok(match op {
            'U' => Formula::Until(interval, Box::new(lhs), Box::new(rhs)),
            _ => Formula::Since(interval, Box::new(lhs), Box::new(rhs)),
        })
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                Ok(Formula::Not(Box::new(self.unary()?)))
            }
            Tok::Op(op @ ('F' | 'G' | 'O' | 'H')) => {
                self.bump();
                let interval = self.interval()?;
                let arg = Box::new(self.unary()?);
                Ok(match op {
                    'F' => Formula::Finally(interval, arg),
                    'G' => Formula::Globally(interval, arg),
                    'O' => Formula::Once(interval, arg),
                    _ => Formula::Historically(interval, arg),
                })
            }
            Tok::Op(op) => Err(self.err(format!("operator {op} needs a left operand"))),
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.bump() {
            Tok::True => Ok(Formula::True),
            Tok::False => Ok(Formula::False),
            Tok::Ident(name) => Ok(Formula::Prop(name)),
            Tok::LParen => {
                let inner = self.or_expr()?;
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => Err(self.err("expected closing parenthesis")),
                }
            }
            other => Err(self.err(format!("expected a formula, found {other:?}"))),
        }
    }

    /// `[a,b]` or the singular shorthand `[a]`.
    fn interval(&mut self) -> Result<TimeInterval> {
        if self.bump() != Tok::LBracket {
            return Err(self.err("expected [a,b] interval"));
        }
        let lo = self.number()?;
        match self.bump() {
            Tok::RBracket => Ok(TimeInterval::singular(lo)),
            Tok::Comma => {
                let hi = self.number()?;
                if self.bump() != Tok::RBracket {
                    return Err(self.err("expected closing bracket"));
                }
                TimeInterval::closed(lo, hi)
            }
            _ => Err(self.err("expected , or ] in interval")),
        }
    }

    fn number(&mut self) -> Result<u32> {
        match self.bump() {
            Tok::Number(n) => Ok(n),
            other => Err(self.err(format!("expected a natural number, found {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: u32, b: u32) -> TimeInterval {
        TimeInterval::closed(a, b).unwrap()
    }

    #[test]
    fn parses_once() {
        assert_eq!(
            parse("O[1,4] p").unwrap(),
            Formula::Once(iv(1, 4), Box::new(Formula::prop("p")))
        );
    }

    #[test]
    fn parses_since() {
        assert_eq!(
            parse("p S[2,4] q").unwrap(),
            Formula::Since(
                iv(2, 4),
                Box::new(Formula::prop("p")),
                Box::new(Formula::prop("q"))
            )
        );
    }

    #[test]
    fn rejects_inverted_interval() {
        assert!(matches!(
            parse("F[4,2] p"),
            Err(Error::Interval { lo: 4, hi: 2 })
        ));
    }

    #[test]
    fn precedence_and_over_or() {
        assert_eq!(
            parse("p | q & r").unwrap(),
            Formula::Or(
                Box::new(Formula::prop("p")),
                Box::new(Formula::And(
                    Box::new(Formula::prop("q")),
                    Box::new(Formula::prop("r"))
                ))
            )
        );
    }

    #[test]
    fn until_binds_tighter_than_and() {
        assert_eq!(
            parse("r & p U[1,2] q").unwrap(),
            Formula::And(
                Box::new(Formula::prop("r")),
                Box::new(Formula::Until(
                    iv(1, 2),
                    Box::new(Formula::prop("p")),
                    Box::new(Formula::prop("q"))
                ))
            )
        );
    }

    #[test]
    fn until_is_non_associative() {
        assert!(parse("p U[1,2] q U[1,2] r").is_err());
        assert!(parse("p U[1,2] (q U[1,2] r)").is_ok());
    }

    #[test]
    fn singular_shorthand() {
        assert_eq!(
            parse("F[3] p").unwrap(),
            Formula::Finally(TimeInterval::singular(3), Box::new(Formula::prop("p")))
        );
    }

    #[test]
    fn syntax_error_carries_position() {
        match parse("p @ q") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn negation_binds_tightest() {
        assert_eq!(
            parse("!p & q").unwrap(),
            Formula::And(
                Box::new(Formula::Not(Box::new(Formula::prop("p")))),
                Box::new(Formula::prop("q"))
            )
        );
        assert_eq!(
            parse("!F[1,2] p").unwrap(),
            Formula::Not(Box::new(Formula::Finally(
                iv(1, 2),
                Box::new(Formula::prop("p"))
            )))
        );
    }
}
