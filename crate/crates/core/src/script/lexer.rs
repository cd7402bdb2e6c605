use num_bigint::BigInt;

use super::ast::{Diagnostic, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    /// The words following `#field` on its line.
    Directive(Vec<String>),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Colon,
    Semi,
    Comma,
    Assign,
    Plus,
    Minus,
    Star,
    Slash,
    Dot,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Directive(_) => "`#field`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Assign => "`=`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

/// Splits source text into tokens. `#field` is a directive only before the
/// first token of the program; every other `#` starts a comment.
pub fn lex(src: &str) -> Result<Vec<Token>, Vec<Diagnostic>> {
    let mut out: Vec<Token> = Vec::new();
    let mut errors = Vec::new();
    for (ln, line) in src.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos { line: ln + 1, col: i + 1 };
            match c {
                _ if c.is_whitespace() => {}
                '#' => {
                    let rest: String = chars[i + 1..].iter().collect();
                    if !(out.is_empty() && rest.starts_with("field")) {
                        break;
                    }
                    // The directive takes `rational`, or `fp` and a modulus;
                    // code may follow on the same line.
                    i += 1 + "field".len();
                    let mut words = Vec::new();
                    let word = |i: &mut usize| {
                        while *i < chars.len() && chars[*i].is_whitespace() {
                            *i += 1;
                        }
                        let start = *i;
                        while *i < chars.len() && (chars[*i].is_alphanumeric() || chars[*i] == ':') {
                            *i += 1;
                        }
                        chars[start..*i].iter().collect::<String>()
                    };
                    let first = word(&mut i);
                    if first == "fp" {
                        words.push(first);
                        words.push(word(&mut i));
                    } else {
                        words.push(first);
                    }
                    words.retain(|w| !w.is_empty());
                    out.push(Token { tok: Tok::Directive(words), pos });
                    continue;
                }
                '[' => out.push(Token { tok: Tok::LBracket, pos }),
                ']' => out.push(Token { tok: Tok::RBracket, pos }),
                '(' => out.push(Token { tok: Tok::LParen, pos }),
                ')' => out.push(Token { tok: Tok::RParen, pos }),
                ':' => out.push(Token { tok: Tok::Colon, pos }),
                ';' => out.push(Token { tok: Tok::Semi, pos }),
                ',' => out.push(Token { tok: Tok::Comma, pos }),
                '=' => out.push(Token { tok: Tok::Assign, pos }),
                '+' => out.push(Token { tok: Tok::Plus, pos }),
                '-' | '−' => out.push(Token { tok: Tok::Minus, pos }),
                '*' => out.push(Token { tok: Tok::Star, pos }),
                '/' => out.push(Token { tok: Tok::Slash, pos }),
                '.' => out.push(Token { tok: Tok::Dot, pos }),
                _ if c.is_ascii_digit() => {
                    let start = i;
                    while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..=i].iter().collect();
                    out.push(Token { tok: Tok::Int(digits.parse().expect("ascii digits")), pos });
                }
                _ if c.is_alphabetic() || c == '_' => {
                    let start = i;
                    while i + 1 < chars.len() && (chars[i + 1].is_alphanumeric() || chars[i + 1] == '_') {
                        i += 1;
                    }
                    out.push(Token { tok: Tok::Ident(chars[start..=i].iter().collect()), pos });
                }
                _ => errors.push(Diagnostic::error(pos, format!("unexpected character `{c}`"))),
            }
            i += 1;
        }
    }
    let end = Pos { line: src.lines().count().max(1), col: src.lines().last().map_or(1, |l| l.chars().count() + 1) };
    out.push(Token { tok: Tok::Eof, pos: end });
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(errors)
    }
}
