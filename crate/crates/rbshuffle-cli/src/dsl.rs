//! The expression language: lexer, parser, and parse diagnostics.
//!
//! ```text
//! EXPR   := ['-'] TERM (('+'|'-') TERM)*
//! TERM   := FACTOR ('*' FACTOR)*
//! FACTOR := ATOM ['^' NAT]
//! ATOM   := RATIONAL | '1_K' | SYMBOL | FN '(' EXPR (';' EXPR)* ')'
//!         | '[' EXPR (',' EXPR)* ']' | WORD | '(' EXPR ')'
//! WORD   := '(' LETTER ('|' LETTER)* ')'
//! LETTER := '1' | SYMBOL ['^' NAT] ('*' SYMBOL ['^' NAT])*
//! ```
//!
//! A parenthesized group is read as a word literal exactly when its body
//! matches the LETTER grammar, so `(a|b)`, `(a^2*b)` and `(1)` are tensor
//! words while `(2)` and `(a + b)` are grouped expressions. `1_K` is the
//! empty word. Rendered values reparse: the canonical text of any scalar or
//! tensor value is itself a valid expression.

use std::fmt;

use rbshuffle::scalar::parse_rational;
use rbshuffle::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    UnitK,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Caret,
    Pipe,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::UnitK => "`1_K`".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::LBracket => "`[`".to_string(),
            Tok::RBracket => "`]`".to_string(),
            Tok::Comma => "`,`".to_string(),
            Tok::Semi => "`;`".to_string(),
            Tok::Plus => "`+`".to_string(),
            Tok::Minus => "`-`".to_string(),
            Tok::Star => "`*`".to_string(),
            Tok::Caret => "`^`".to_string(),
            Tok::Pipe => "`|`".to_string(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

/// A parse failure with position and the token set that would have been
/// accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.col, self.message
        )?;
        if !self.expected.is_empty() {
            write!(f, "; expected {}", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostic {}

/// Built-in function names; everything else in call position is a symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FnName {
    P,
    Q,
    Pu,
    Sh,
    Qsh,
    Rsh,
    Lsh,
    Bsh,
    Prec,
    Succ,
    Dot,
    Star,
    Dagger,
    Delta,
    Eps,
    Omega,
    Bstar,
}

impl FnName {
    fn from_ident(s: &str) -> Option<FnName> {
        Some(match s {
            "P" => FnName::P,
            "Q" => FnName::Q,
            "Pu" => FnName::Pu,
            "sh" => FnName::Sh,
            "qsh" => FnName::Qsh,
            "rsh" => FnName::Rsh,
            "lsh" => FnName::Lsh,
            "bsh" => FnName::Bsh,
            "prec" => FnName::Prec,
            "succ" => FnName::Succ,
            "dot" => FnName::Dot,
            "star" => FnName::Star,
            "dagger" => FnName::Dagger,
            "delta" => FnName::Delta,
            "eps" => FnName::Eps,
            "omega" => FnName::Omega,
            "bstar" => FnName::Bstar,
            _ => return None,
        })
    }

    pub fn label(&self) -> &'static str {
        match self {
            FnName::P => "P",
            FnName::Q => "Q",
            FnName::Pu => "Pu",
            FnName::Sh => "sh",
            FnName::Qsh => "qsh",
            FnName::Rsh => "rsh",
            FnName::Lsh => "lsh",
            FnName::Bsh => "bsh",
            FnName::Prec => "prec",
            FnName::Succ => "succ",
            FnName::Dot => "dot",
            FnName::Star => "star",
            FnName::Dagger => "dagger",
            FnName::Delta => "delta",
            FnName::Eps => "eps",
            FnName::Omega => "omega",
            FnName::Bstar => "bstar",
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            FnName::P
            | FnName::Q
            | FnName::Dagger
            | FnName::Delta
            | FnName::Eps
            | FnName::Omega
            | FnName::Bstar => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Rational(Rational),
    /// The empty tensor word `1_K`.
    EmptyWord,
    Symbol(String),
    /// `[e1, e2, ...]`: a word whose letters are base-valued expressions.
    Word(Vec<Expr>),
    /// `(m1|m2|...)`: a single basis word, letters in monomial text.
    WordLiteral(Vec<String>),
    Apply(FnName, Vec<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

fn lex(src: &str) -> Result<Vec<Spanned>, Diagnostic> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col);
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut text = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                text.push(chars[i]);
                advance(&mut i, &mut line, &mut col);
            }
            if text == "1"
                && chars.get(i) == Some(&'_')
                && chars.get(i + 1) == Some(&'K')
                && !chars
                    .get(i + 2)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
            {
                advance(&mut i, &mut line, &mut col);
                advance(&mut i, &mut line, &mut col);
                Tok::UnitK
            } else if chars.get(i) == Some(&'/') && chars.get(i + 1).is_some_and(char::is_ascii_digit) {
                text.push('/');
                advance(&mut i, &mut line, &mut col);
                while i < chars.len() && chars[i].is_ascii_digit() {
                    text.push(chars[i]);
                    advance(&mut i, &mut line, &mut col);
                }
                Tok::Number(text)
            } else {
                Tok::Number(text)
            }
        } else if c.is_ascii_alphabetic() {
            let mut text = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                text.push(chars[i]);
                advance(&mut i, &mut line, &mut col);
            }
            Tok::Ident(text)
        } else {
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '|' => Tok::Pipe,
                other => {
                    return Err(Diagnostic {
                        line: tline,
                        col: tcol,
                        message: format!("unexpected character `{other}`"),
                        expected: Vec::new(),
                    })
                }
            };
            advance(&mut i, &mut line, &mut col);
            tok
        };
        out.push(Spanned { tok, line: tline, col: tcol });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|s| &s.tok)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn diag(&self, message: impl Into<String>, expected: &[&str]) -> Diagnostic {
        let (line, col) = self.here();
        Diagnostic {
            line,
            col,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn unexpected(&self, expected: &[&str]) -> Diagnostic {
        let message = match self.peek() {
            Some(t) => format!("unexpected {}", t.describe()),
            None => "unexpected end of input".to_string(),
        };
        self.diag(message, expected)
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<(), Diagnostic> {
        if self.peek() == Some(&tok) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn expr(&mut self) -> Result<Expr, Diagnostic> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, Diagnostic> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, Diagnostic> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let n = self.natural()?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn natural(&mut self) -> Result<u32, Diagnostic> {
        match self.peek() {
            Some(Tok::Number(s)) if !s.contains('/') => {
                let n: u32 = s
                    .parse()
                    .map_err(|_| self.diag(format!("exponent `{s}` is out of range"), &[]))?;
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected(&["a natural number"])),
        }
    }

    fn atom(&mut self) -> Result<Expr, Diagnostic> {
        match self.peek().cloned() {
            Some(Tok::Number(s)) => {
                let r = self.rational(&s)?;
                self.bump();
                Ok(Expr::Rational(r))
            }
            Some(Tok::UnitK) => {
                self.bump();
                Ok(Expr::EmptyWord)
            }
            Some(Tok::Ident(name)) => {
                self.bump();
                match FnName::from_ident(&name) {
                    Some(f) if self.peek() == Some(&Tok::LParen) => {
                        self.bump();
                        let mut args = vec![self.expr()?];
                        while self.peek() == Some(&Tok::Semi) {
                            self.bump();
                            args.push(self.expr()?);
                        }
                        self.expect(Tok::RParen, &["`)`", "`;`"])?;
                        Ok(Expr::Apply(f, args))
                    }
                    _ => Ok(Expr::Symbol(name)),
                }
            }
            Some(Tok::LBracket) => {
                self.bump();
                let mut letters = vec![self.expr()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.bump();
                    letters.push(self.expr()?);
                }
                self.expect(Tok::RBracket, &["`]`", "`,`"])?;
                Ok(Expr::Word(letters))
            }
            Some(Tok::LParen) => {
                let save = self.pos;
                self.bump();
                if let Some(letters) = self.word_literal_body() {
                    return Ok(Expr::WordLiteral(letters));
                }
                self.pos = save;
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, &["`)`"])?;
                Ok(inner)
            }
            _ => Err(self.unexpected(&["an expression"])),
        }
    }

    fn rational(&self, text: &str) -> Result<Rational, Diagnostic> {
        parse_rational(text).map_err(|_| self.diag(format!("invalid rational literal `{text}`"), &[]))
    }

    /// `LETTER ('|' LETTER)* ')'` after the opening paren, or None (caller
    /// backtracks to a grouped expression).
    fn word_literal_body(&mut self) -> Option<Vec<String>> {
        let mut letters = vec![self.word_letter()?];
        loop {
            match self.peek() {
                Some(Tok::Pipe) => {
                    self.bump();
                    letters.push(self.word_letter()?);
                }
                Some(Tok::RParen) => {
                    self.bump();
                    return Some(letters);
                }
                _ => return None,
            }
        }
    }

    fn word_letter(&mut self) -> Option<String> {
        match self.peek() {
            Some(Tok::Number(s)) if s == "1" => {
                self.bump();
                Some("1".to_string())
            }
            Some(Tok::Ident(_)) => {
                let mut text = self.monomial_factor()?;
                while self.peek() == Some(&Tok::Star) && matches!(self.peek2(), Some(Tok::Ident(_))) {
                    self.bump();
                    text.push('*');
                    text.push_str(&self.monomial_factor()?);
                }
                Some(text)
            }
            _ => None,
        }
    }

    fn monomial_factor(&mut self) -> Option<String> {
        let name = match self.peek() {
            Some(Tok::Ident(name)) => name.clone(),
            _ => return None,
        };
        self.bump();
        if self.peek() == Some(&Tok::Caret) {
            match self.peek2() {
                Some(Tok::Number(s)) if !s.contains('/') => {
                    let exp = s.clone();
                    self.bump();
                    self.bump();
                    return Some(format!("{name}^{exp}"));
                }
                _ => return None,
            }
        }
        Some(name)
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, Diagnostic> {
    let toks = lex(src)?;
    let mut end_line = 1;
    let mut end_col = 1;
    for c in src.chars() {
        if c == '\n' {
            end_line += 1;
            end_col = 1;
        } else {
            end_col += 1;
        }
    }
    let mut p = Parser { toks, pos: 0, end_line, end_col };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected(&["`+`", "`-`", "`*`", "`^`", "end of input"]));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rbshuffle::scalar::{frac, rat};

    fn word(names: &[&str]) -> Expr {
        Expr::WordLiteral(names.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn function_application_and_words() {
        assert_eq!(
            parse_expr("lsh([a];[b])").unwrap(),
            Expr::Apply(
                FnName::Lsh,
                vec![
                    Expr::Word(vec![Expr::Symbol("a".into())]),
                    Expr::Word(vec![Expr::Symbol("b".into())]),
                ]
            )
        );
        assert_eq!(
            parse_expr("P([a,b]) - [1,a,b]").unwrap(),
            Expr::Sub(
                Box::new(Expr::Apply(
                    FnName::P,
                    vec![Expr::Word(vec![
                        Expr::Symbol("a".into()),
                        Expr::Symbol("b".into())
                    ])]
                )),
                Box::new(Expr::Word(vec![
                    Expr::Rational(rat(1)),
                    Expr::Symbol("a".into()),
                    Expr::Symbol("b".into()),
                ]))
            )
        );
    }

    #[test]
    fn word_literals_versus_groups() {
        assert_eq!(parse_expr("(a|b)").unwrap(), word(&["a", "b"]));
        assert_eq!(parse_expr("(a^2*b|1)").unwrap(), word(&["a^2*b", "1"]));
        assert_eq!(parse_expr("(a)").unwrap(), word(&["a"]));
        assert_eq!(parse_expr("(1)").unwrap(), word(&["1"]));
        assert_eq!(parse_expr("(2)").unwrap(), Expr::Rational(rat(2)));
        assert_eq!(parse_expr("(3/2)").unwrap(), Expr::Rational(frac(3, 2)));
        assert_eq!(
            parse_expr("(a + b)").unwrap(),
            Expr::Add(
                Box::new(Expr::Symbol("a".into())),
                Box::new(Expr::Symbol("b".into()))
            )
        );
        assert_eq!(
            parse_expr("(a*2)").unwrap(),
            Expr::Mul(Box::new(Expr::Symbol("a".into())), Box::new(Expr::Rational(rat(2))))
        );
        assert_eq!(parse_expr("((a|b))").unwrap(), word(&["a", "b"]));
    }

    #[test]
    fn sums_products_powers() {
        assert_eq!(
            parse_expr("-(a*b|1) + (a|b) + (b|a)").unwrap(),
            Expr::Add(
                Box::new(Expr::Add(
                    Box::new(Expr::Neg(Box::new(word(&["a*b", "1"])))),
                    Box::new(word(&["a", "b"])),
                )),
                Box::new(word(&["b", "a"])),
            )
        );
        assert_eq!(
            parse_expr("3/2*(a|b*c) - (1)").unwrap(),
            Expr::Sub(
                Box::new(Expr::Mul(
                    Box::new(Expr::Rational(frac(3, 2))),
                    Box::new(word(&["a", "b*c"])),
                )),
                Box::new(word(&["1"])),
            )
        );
        assert_eq!(
            parse_expr("a^2*b").unwrap(),
            Expr::Mul(
                Box::new(Expr::Pow(Box::new(Expr::Symbol("a".into())), 2)),
                Box::new(Expr::Symbol("b".into()))
            )
        );
        assert_eq!(parse_expr("6*1_K").unwrap(), Expr::Mul(Box::new(Expr::Rational(rat(6))), Box::new(Expr::EmptyWord)));
    }

    #[test]
    fn fn_names_demote_to_symbols_outside_calls() {
        assert_eq!(
            parse_expr("eps(delta)").unwrap(),
            Expr::Apply(FnName::Eps, vec![Expr::Symbol("delta".into())])
        );
    }

    #[test]
    fn diagnostics_carry_position_and_expectations() {
        let err = parse_expr("qsh([a];[b,c]").unwrap_err();
        assert_eq!((err.line, err.col), (1, 14));
        assert!(err.message.contains("unexpected end of input"), "{err}");
        assert!(err.expected.contains(&"`)`".to_string()), "{err}");

        let err = parse_expr("[a,]").unwrap_err();
        assert_eq!((err.line, err.col), (1, 4));

        let err = parse_expr("2 $ 3").unwrap_err();
        assert!(err.message.contains('$'), "{err}");

        let err = parse_expr("(a|b) (c)").unwrap_err();
        assert!(err.expected.contains(&"end of input".to_string()), "{err}");

        let err = parse_expr("a^(2)").unwrap_err();
        assert!(err.expected.contains(&"a natural number".to_string()), "{err}");
    }

    #[test]
    fn rationals_reject_zero_denominators() {
        let err = parse_expr("1/0").unwrap_err();
        assert!(err.message.contains("invalid rational"), "{err}");
    }
}
