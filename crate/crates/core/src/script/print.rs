//! Canonical text for programs; reparsing the output gives an equal program.

use std::fmt::Write;

use num_rational::BigRational;
use num_traits::One;

use super::ast::*;

const UNARY: u8 = 3;
const POSTFIX: u8 = 4;

fn rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn coords(c: &[BigRational; 3]) -> String {
    c.iter().map(rational).collect::<Vec<_>>().join(":")
}

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Bin(op, ..) => op.precedence(),
        Expr::Neg(_) => UNARY,
        _ => POSTFIX,
    }
}

fn wrap(e: &Expr, min: u8) -> String {
    let text = expr(e);
    if precedence(e) < min {
        format!("({text})")
    } else {
        text
    }
}

pub fn expr(e: &Expr) -> String {
    match e {
        Expr::Point(c) => format!("[{}]", coords(c)),
        Expr::Line(c) => format!("({})", coords(c)),
        Expr::Int(n) => n.to_string(),
        Expr::Var(name) => name.clone(),
        Expr::Call(f, args) => format!("{f}({})", list(args)),
        Expr::Index(base, k) => format!("{}.{k}", wrap(base, POSTFIX)),
        Expr::Neg(inner) => format!("-{}", wrap(inner, UNARY)),
        Expr::Bin(op, l, r) => {
            let p = op.precedence();
            format!("{} {} {}", wrap(l, p), op.symbol(), wrap(r, p + 1))
        }
    }
}

fn list(args: &[Expr]) -> String {
    args.iter().map(expr).collect::<Vec<_>>().join(", ")
}

pub fn stmt(s: &Stmt) -> String {
    match &s.kind {
        StmtKind::Bind(name, e) => format!("{name} = {};", expr(e)),
        StmtKind::Assert(p, args) => format!("assert {p}({});", list(args)),
    }
}

pub fn program(p: &Program) -> String {
    let mut out = String::new();
    writeln!(out, "#field {}", p.field).unwrap();
    for s in &p.stmts {
        writeln!(out, "{}", stmt(s)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn round_trip_keeps_structure() {
        let src = "#field fp 13\na = [1:-2:3];\nL = (1/2:0:-1);\nx = quadrance(a, [0:0:1]);\n\
                   y = -(x - 1) * (2 - -x) / (x + 1);\nz = -x.1;\nw = (-x).2;\nassert eq(y - 1 - 2, y - (1 - 2));\n";
        let p = parse(src).unwrap();
        let text = program(&p);
        assert_eq!(parse(&text).unwrap(), p, "{text}");
        assert!(text.contains("(1/2:0:-1)"));
        assert!(text.contains("y - (1 - 2)"));
    }
}
