use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

/// A 1-based source location.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub pos: Pos,
    pub message: String,
}

impl Diagnostic {
    pub fn error(pos: Pos, message: impl Into<String>) -> Self {
        Diagnostic { severity: Severity::Error, pos, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}: {sev}: {}", self.pos, self.message)
    }
}

/// The `#field` directive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("rational"),
            FieldSpec::Prime(p) => write!(f, "fp {p}"),
        }
    }
}

macro_rules! named_enum {
    ($(#[$m:meta])* $name:ident { $($variant:ident => $text:literal),* $(,)? }) => {
        $(#[$m])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum $name { $($variant),* }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $($name::$variant => $text),* }
            }

            pub fn from_name(s: &str) -> Option<$name> {
                match s { $($text => Some($name::$variant),)* _ => None }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }
    };
}

named_enum!(
    /// Built-in functions.
    Func {
        Join => "join",
        Meet => "meet",
        Dual => "dual",
        AltitudeLine => "altitude_line",
        AltitudePoint => "altitude_point",
        ParallelLine => "parallel_line",
        BasePoint => "base_point",
        Conjugates => "conjugates",
        Reflect => "reflect",
        Midpoints => "midpoints",
        Quadrance => "quadrance",
        Spread => "spread",
        Quadrea => "quadrea",
        CrossRatio => "cross_ratio",
        NullPointsOn => "null_points_on",
        NullPoint => "null_point",
    }
);

named_enum!(
    /// Assertion predicates.
    Pred {
        Collinear => "collinear",
        Concurrent => "concurrent",
        Incident => "incident",
        Perp => "perp",
        OnNull => "on_null",
        Eq => "eq",
    }
);

impl Func {
    pub fn arity(self) -> usize {
        match self {
            Func::Dual | Func::NullPointsOn | Func::NullPoint => 1,
            Func::Quadrea => 3,
            Func::CrossRatio => 4,
            _ => 2,
        }
    }
}

impl Pred {
    pub fn arity(self) -> usize {
        match self {
            Pred::OnNull => 1,
            Pred::Collinear | Pred::Concurrent => 3,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }

    pub fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Point([BigRational; 3]),
    Line([BigRational; 3]),
    Int(BigInt),
    Var(String),
    Call(Func, Vec<Expr>),
    /// 1-based tuple component.
    Index(Box<Expr>, usize),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Bind(String, Expr),
    Assert(Pred, Vec<Expr>),
}

/// A statement and where it starts. Equality ignores the location.
#[derive(Clone, Debug)]
pub struct Stmt {
    pub kind: StmtKind,
    pub pos: Pos,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Stmt {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    pub field: FieldSpec,
    pub stmts: Vec<Stmt>,
}
