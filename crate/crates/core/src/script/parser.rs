use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::FieldCtx;

use super::ast::*;
use super::lexer::{lex, Tok, Token};

/// Parses a whole script, resolving names; any problem yields diagnostics
/// and no program.
pub fn parse(src: &str) -> Result<Program, Vec<Diagnostic>> {
    let tokens = lex(src)?;
    let mut p = Parser { tokens, at: 0, diags: Vec::new(), bound: HashSet::new() };
    let program = p.program();
    if p.diags.is_empty() {
        Ok(program)
    } else {
        Err(p.diags)
    }
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    diags: Vec<Diagnostic>,
    bound: HashSet<String>,
}

/// Raised to abandon the current statement after a diagnostic.
struct Bail;

type PResult<T> = Result<T, Bail>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&mut self, pos: Pos, message: impl Into<String>) -> PResult<T> {
        self.diags.push(Diagnostic::error(pos, message));
        Err(Bail)
    }

    fn expect(&mut self, want: Tok) -> PResult<Pos> {
        if *self.peek() == want {
            Ok(self.bump().pos)
        } else {
            let msg = format!("expected {}, found {}", want.describe(), self.peek().describe());
            self.fail(self.pos(), msg)
        }
    }

    /// Skips to just past the next `;` after an error.
    fn recover(&mut self) {
        while !matches!(self.peek(), Tok::Semi | Tok::Eof) {
            self.bump();
        }
        if *self.peek() == Tok::Semi {
            self.bump();
        }
    }

    fn program(&mut self) -> Program {
        let mut field = FieldSpec::Rational;
        if let Tok::Directive(words) = self.peek().clone() {
            let pos = self.bump().pos;
            match field_spec(&words) {
                Ok(f) => field = f,
                Err(msg) => self.diags.push(Diagnostic::error(pos, msg)),
            }
        }
        let mut stmts = Vec::new();
        while *self.peek() != Tok::Eof {
            match self.stmt() {
                Ok(s) => stmts.push(s),
                Err(Bail) => self.recover(),
            }
        }
        Program { field, stmts }
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(word) if word == "assert" => {
                self.bump();
                let name_pos = self.pos();
                let Tok::Ident(name) = self.peek().clone() else {
                    let msg = format!("expected a predicate, found {}", self.peek().describe());
                    return self.fail(name_pos, msg);
                };
                self.bump();
                let Some(pred) = Pred::from_name(&name) else {
                    return self.fail(name_pos, format!("unknown predicate `{name}`"));
                };
                let args = self.args(name_pos, pred.name(), pred.arity())?;
                self.expect(Tok::Semi)?;
                Ok(Stmt { kind: StmtKind::Assert(pred, args), pos })
            }
            Tok::Ident(name) => {
                self.bump();
                if Func::from_name(&name).is_some() || Pred::from_name(&name).is_some() {
                    return self.fail(pos, format!("`{name}` is a built-in and cannot be bound"));
                }
                self.expect(Tok::Assign)?;
                let e = self.expr()?;
                self.expect(Tok::Semi)?;
                if !self.bound.insert(name.clone()) {
                    return self.fail(pos, format!("`{name}` is already bound"));
                }
                Ok(Stmt { kind: StmtKind::Bind(name, e), pos })
            }
            other => self.fail(pos, format!("expected a binding or `assert`, found {}", other.describe())),
        }
    }

    fn args(&mut self, pos: Pos, name: &str, arity: usize) -> PResult<Vec<Expr>> {
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                args.push(self.expr()?);
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        if args.len() != arity {
            let plural = if arity == 1 { "" } else { "s" };
            return self.fail(pos, format!("`{name}` takes {arity} argument{plural}, got {}", args.len()));
        }
        Ok(args)
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> PResult<Expr> {
        let mut e = self.primary()?;
        while *self.peek() == Tok::Dot {
            self.bump();
            let pos = self.pos();
            match self.bump().tok {
                Tok::Int(n) => match usize::try_from(&n) {
                    Ok(k) if k >= 1 => e = Expr::Index(Box::new(e), k),
                    _ => return self.fail(pos, "tuple components are numbered from 1"),
                },
                other => return self.fail(pos, format!("expected a component number, found {}", other.describe())),
            }
        }
        Ok(e)
    }

    fn primary(&mut self) -> PResult<Expr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::LBracket => {
                self.bump();
                let c = self.coords(pos, Tok::RBracket)?;
                Ok(Expr::Point(c))
            }
            Tok::LParen => {
                // A line literal when a number is followed by `:`,
                // otherwise a parenthesized expression.
                let save = self.at;
                self.bump();
                let before = self.diags.len();
                if self.signed_rational().is_ok() && *self.peek() == Tok::Colon {
                    self.at = save + 1;
                    let c = self.coords(pos, Tok::RParen)?;
                    return Ok(Expr::Line(c));
                }
                self.diags.truncate(before);
                self.at = save + 1;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                if *self.peek() == Tok::LParen {
                    let Some(f) = Func::from_name(&name) else {
                        let hint = if Pred::from_name(&name).is_some() { " (predicates need `assert`)" } else { "" };
                        return self.fail(pos, format!("unknown function `{name}`{hint}"));
                    };
                    let args = self.args(pos, f.name(), f.arity())?;
                    return Ok(Expr::Call(f, args));
                }
                if !self.bound.contains(&name) {
                    return self.fail(pos, format!("unknown name `{name}`"));
                }
                Ok(Expr::Var(name))
            }
            other => self.fail(pos, format!("expected an expression, found {}", other.describe())),
        }
    }

    /// `-? INT ('/' INT)?`
    fn signed_rational(&mut self) -> PResult<BigRational> {
        let pos = self.pos();
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let Tok::Int(num) = self.peek().clone() else {
            let msg = format!("expected a number, found {}", self.peek().describe());
            return self.fail(self.pos(), msg);
        };
        self.bump();
        let mut den = BigInt::one();
        if *self.peek() == Tok::Slash {
            self.bump();
            let Tok::Int(d) = self.peek().clone() else {
                let msg = format!("expected a denominator, found {}", self.peek().describe());
                return self.fail(self.pos(), msg);
            };
            self.bump();
            if d.is_zero() {
                return self.fail(pos, "zero denominator in literal");
            }
            den = d;
        }
        let r = BigRational::new(num, den);
        Ok(if negative { -r } else { r })
    }

    fn coords(&mut self, open: Pos, close: Tok) -> PResult<[BigRational; 3]> {
        let x = self.signed_rational()?;
        self.expect(Tok::Colon)?;
        let y = self.signed_rational()?;
        self.expect(Tok::Colon)?;
        let z = self.signed_rational()?;
        self.expect(close)?;
        if x.is_zero() && y.is_zero() && z.is_zero() {
            return self.fail(open, "literal has all coordinates zero");
        }
        Ok([x, y, z])
    }
}

fn field_spec(words: &[String]) -> Result<FieldSpec, String> {
    let words: Vec<&str> = words.iter().map(String::as_str).collect();
    let modulus = match words.as_slice() {
        ["rational"] => return Ok(FieldSpec::Rational),
        ["fp", p] => *p,
        [w] if w.starts_with("fp:") => &w[3..],
        _ => return Err("`#field` expects `rational` or `fp` followed by a prime".into()),
    };
    let p: u64 = modulus.parse().map_err(|_| format!("`{modulus}` is not a valid modulus"))?;
    FieldCtx::prime(p).map_err(|e| e.to_string())?;
    Ok(FieldSpec::Prime(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn errors(src: &str) -> Vec<Diagnostic> {
        parse(src).unwrap_err()
    }

    #[test]
    fn one_line_program() {
        let p = parse("#field rational  a=[0:0:1]; A=dual(a); assert incident([1:0:0], A);").unwrap();
        assert_eq!(p.field, FieldSpec::Rational);
        assert_eq!(p.stmts.len(), 3);
    }

    #[test]
    fn syntax_error_location() {
        let d = errors("b = meet(;");
        assert_eq!(d[0].pos, Pos { line: 1, col: 10 });
    }

    #[test]
    fn characteristic_two_rejected() {
        let d = errors("#field fp 2");
        assert!(d[0].message.contains("two"), "{}", d[0].message);
        assert!(parse("#field fp 101\na = [1:0:2];").is_ok());
        assert!(parse("#field fp:7").is_ok());
        assert!(!errors("#field fp 9").is_empty());
    }

    #[test]
    fn name_and_arity_errors() {
        assert!(errors("a = frobnicate([1:0:0]);")[0].message.contains("unknown function"));
        assert!(errors("a = dual(b);")[0].message.contains("unknown name `b`"));
        let d = errors("a = join([1:0:0]);");
        assert!(d[0].message.contains("takes 2 arguments"));
        assert!(errors("a = [1:0:0]; a = [0:1:0];")[0].message.contains("already bound"));
        assert!(errors("a = [0:0:0];")[0].message.contains("all coordinates zero"));
        assert!(errors("a = [1:2];")[0].message.contains("expected `:`"));
        assert!(errors("assert bogus(1);")[0].message.contains("unknown predicate"));
    }

    #[test]
    fn several_diagnostics_are_collected() {
        let d = errors("a = ;\nb = [1:0:0]\nc = dual(b);");
        assert!(d.len() >= 2);
        assert_eq!(d[0].pos.line, 1);
    }

    #[test]
    fn literals_and_grouping() {
        let p = parse("a = (1:-2/3:4); x = (1 + 2) * 3; y = -x / 2;").unwrap();
        match &p.stmts[0].kind {
            StmtKind::Bind(_, Expr::Line(c)) => assert_eq!(c[1], BigRational::new((-2).into(), 3.into())),
            other => panic!("{other:?}"),
        }
        match &p.stmts[1].kind {
            StmtKind::Bind(_, Expr::Bin(BinOp::Mul, _, _)) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn comments_are_skipped() {
        let p = parse("# intro\n#field rational\na = [1:0:2]; # trailing\n").unwrap();
        // The directive after a comment line is still the first token.
        assert_eq!(p.stmts.len(), 1);
    }
}
