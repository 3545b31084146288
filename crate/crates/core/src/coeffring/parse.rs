//! Recursive-descent parser for coefficient expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor | '/' factor)*
//! factor := base ('^' unsigned-integer)?
//! base   := identifier | unsigned-integer | '(' expr ')' | '-' base
//! ```
//!
//! Identifiers are chart variable names, `/` builds rational functions and
//! `^` requires a nonnegative integer literal exponent.

use num_bigint::BigInt;

use super::chart::Chart;
use super::ratfunc::RatFunc;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        if ch.is_whitespace() {
            chars.next();
            bump(ch, &mut line, &mut col);
            continue;
        }
        if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                    bump(c, &mut line, &mut col);
                } else {
                    break;
                }
            }
            let value: BigInt = s.parse().expect("digits parse as integer");
            out.push(Spanned { tok: Tok::Int(value), line: tline, col: tcol });
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                    bump(c, &mut line, &mut col);
                } else {
                    break;
                }
            }
            out.push(Spanned { tok: Tok::Ident(s), line: tline, col: tcol });
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Parse {
                    line: tline,
                    col: tcol,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        chars.next();
        bump(ch, &mut line, &mut col);
        out.push(Spanned { tok, line: tline, col: tcol });
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    chart: &'a Chart,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn advance(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let t = self.peek();
        Error::Parse { line: t.line, col: t.col, msg: msg.into() }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.advance();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.advance();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.advance();
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => {
                    let at = self.advance();
                    let rhs = self.factor()?;
                    if rhs.is_zero() {
                        return Err(Error::Parse {
                            line: at.line,
                            col: at.col,
                            msg: "division by zero".into(),
                        });
                    }
                    acc = &acc / &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let base = self.base()?;
        if self.peek().tok == Tok::Caret {
            self.advance();
            match self.advance() {
                Spanned { tok: Tok::Int(e), line, col } => {
                    let exp: u32 = e.try_into().map_err(|_| Error::Parse {
                        line,
                        col,
                        msg: "exponent too large".into(),
                    })?;
                    return Ok(base.pow(exp));
                }
                other => {
                    return Err(Error::Parse {
                        line: other.line,
                        col: other.col,
                        msg: "expected a nonnegative integer exponent after '^'".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<RatFunc> {
        let t = self.advance();
        match t.tok {
            Tok::Ident(name) => match self.chart.var_index(&name) {
                Some(i) => RatFunc::var(self.chart, i),
                None => Err(Error::UnknownVariable { name, line: t.line, col: t.col }),
            },
            Tok::Int(v) => Ok(RatFunc::constant(self.chart, Rational::from_integer(v))),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.advance() {
                    Spanned { tok: Tok::RParen, .. } => Ok(inner),
                    other => Err(Error::Parse {
                        line: other.line,
                        col: other.col,
                        msg: "expected ')'".into(),
                    }),
                }
            }
            Tok::Minus => Ok(-&self.base()?),
            _ => Err(Error::Parse { line: t.line, col: t.col, msg: "expected an expression".into() }),
        }
    }
}

/// Parse a coefficient expression against a chart's variable list.
pub fn parse_coeff(text: &str, chart: &Chart) -> Result<RatFunc> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, chart };
    let value = p.expr()?;
    match p.peek().tok {
        Tok::Eof => Ok(value),
        _ => Err(p.err("unexpected trailing input")),
    }
}

#[cfg(test)]
mod tests {
    use crate::coeffring::Poly;
    use super::*;

    fn chart2() -> Chart {
        Chart::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn parses_polynomials() {
        let c = chart2();
        let r = parse_coeff("x^2 - 3*y + 1/2", &c).unwrap();
        let x = RatFunc::var(&c, 0).unwrap();
        let y = RatFunc::var(&c, 1).unwrap();
        let expect = &(&(&x * &x) - &(&RatFunc::int(&c, 3) * &y))
            + &RatFunc::constant(&c, Rational::new(1.into(), 2.into()));
        assert!(r.is_equal(&expect));
    }

    #[test]
    fn parses_quotients() {
        let c = chart2();
        let r = parse_coeff("(x+y)/(x-y)", &c).unwrap();
        let x = RatFunc::var(&c, 0).unwrap();
        let y = RatFunc::var(&c, 1).unwrap();
        assert!(r.is_equal(&(&(&x + &y) / &(&x - &y))));
        let den: Poly = r.den().clone();
        assert_eq!(den, (&x - &y).num().clone());
    }

    #[test]
    fn unknown_variable_reports_position() {
        let c = chart2();
        match parse_coeff("x + z", &c) {
            Err(Error::UnknownVariable { name, line, col }) => {
                assert_eq!(name, "z");
                assert_eq!((line, col), (1, 5));
            }
            other => panic!("expected UnknownVariable, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_report_position() {
        let c = chart2();
        assert!(matches!(parse_coeff("x^~", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_coeff("x^-2", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_coeff("(x", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_coeff("x y", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_coeff("1/0", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_coeff("1/(x - x)", &c), Err(Error::Parse { .. })));
    }

    #[test]
    fn unary_minus_binds_to_base() {
        // Per the grammar, -x^2 is (-x)^2.
        let c = chart2();
        let r = parse_coeff("-x^2", &c).unwrap();
        let x = RatFunc::var(&c, 0).unwrap();
        assert!(r.is_equal(&(&x * &x)));
    }

    #[test]
    fn print_parse_round_trip() {
        let c = chart2();
        for text in ["x^2 - 3*y + 1/2", "(x+y)/(x-y)", "-x*y - 1", "2/3*x^4"] {
            let r = parse_coeff(text, &c).unwrap();
            let again = parse_coeff(&r.to_string(), &c).unwrap();
            assert!(r.is_equal(&again), "round trip failed for {text}: printed {r}");
        }
    }
}
