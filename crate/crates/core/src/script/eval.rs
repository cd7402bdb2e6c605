use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;

use crate::duality::{
    altitude_line, altitude_point, base_point, conjugate_lines, conjugate_points, dual_of_line, dual_of_point,
    midpoints, null_point_from_param, null_points_on, parallel_line, reflect_line, reflect_point, Couple, Side,
    Vertex,
};
use crate::error::GeomError;
use crate::field::{FieldCtx, FieldElement, FieldError};
use crate::linalg::{self, Vec3};
use crate::metric::{quadrance, spread, triangle_metrics};
use crate::projective::{cross_ratio, cross_ratio_lines, join, meet, ExtValue, ProjLine, ProjPoint};

use super::ast::*;
use super::print;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Point(ProjPoint),
    Line(ProjLine),
    Scalar(FieldElement),
    Infinity,
    Tuple(Vec<Value>),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Scalar(_) => "scalar",
            Value::Infinity => "infinity",
            Value::Tuple(_) => "tuple",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Point(p) => p.fmt(f),
            Value::Line(l) => l.fmt(f),
            Value::Scalar(x) => x.fmt(f),
            Value::Infinity => f.write_str("inf"),
            Value::Tuple(items) => {
                let parts: Vec<String> = items.iter().map(Value::to_string).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

impl From<ExtValue> for Value {
    fn from(v: ExtValue) -> Self {
        match v {
            ExtValue::Finite(x) => Value::Scalar(x),
            ExtValue::Infinity => Value::Infinity,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    Geom(GeomError),
    Type(String),
}

impl EvalError {
    pub fn name(&self) -> &'static str {
        match self {
            EvalError::Geom(e) => e.name(),
            EvalError::Type(_) => "TypeMismatch",
        }
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Geom(e) => write!(f, "{}: {e}", e.name()),
            EvalError::Type(msg) => write!(f, "TypeMismatch: {msg}"),
        }
    }
}

impl From<GeomError> for EvalError {
    fn from(e: GeomError) -> Self {
        EvalError::Geom(e)
    }
}

impl From<FieldError> for EvalError {
    fn from(e: FieldError) -> Self {
        EvalError::Geom(e.into())
    }
}

type EResult<T> = Result<T, EvalError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Bound(Value),
    /// Evaluation stops here.
    BindFailed(EvalError),
    Passed(Vec<Value>),
    Failed(Vec<Value>),
    AssertError(EvalError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StmtResult {
    pub pos: Pos,
    pub text: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub field: FieldCtx,
    pub bindings: Vec<(String, Value)>,
    pub results: Vec<StmtResult>,
}

impl Evaluation {
    /// Every statement ran and every assertion held.
    pub fn ok(&self) -> bool {
        self.results.iter().all(|r| matches!(r.status, Status::Bound(_) | Status::Passed(_)))
    }

    pub fn assertions(&self) -> impl Iterator<Item = &StmtResult> {
        self.results
            .iter()
            .filter(|r| matches!(r.status, Status::Passed(_) | Status::Failed(_) | Status::AssertError(_)))
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    /// Evaluates an expression against the bindings made so far.
    pub fn value_of(&self, e: &Expr) -> Result<Value, EvalError> {
        let env: HashMap<String, Value> = self.bindings.iter().cloned().collect();
        if let Some(name) = unbound(&env, e) {
            return Err(EvalError::Type(format!("`{name}` is not bound")));
        }
        eval(self.field, &env, e)
    }
}

fn unbound<'a>(env: &HashMap<String, Value>, e: &'a Expr) -> Option<&'a str> {
    match e {
        Expr::Var(name) if !env.contains_key(name) => Some(name),
        Expr::Call(_, args) => args.iter().find_map(|a| unbound(env, a)),
        Expr::Index(x, _) | Expr::Neg(x) => unbound(env, x),
        Expr::Bin(_, l, r) => unbound(env, l).or_else(|| unbound(env, r)),
        _ => None,
    }
}

fn values(vs: &[Value]) -> String {
    vs.iter().map(Value::to_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "#field {}", self.field)?;
        for r in &self.results {
            match &r.status {
                Status::Bound(v) => {
                    let name = r.text.split(" =").next().unwrap_or_default();
                    writeln!(f, "{name} = {v}")?
                }
                Status::BindFailed(e) => writeln!(f, "error {}: {} {e}", r.pos, r.text)?,
                Status::Passed(vs) => writeln!(f, "pass {}: {} [{}]", r.pos, r.text, values(vs))?,
                Status::Failed(vs) => writeln!(f, "FAIL {}: {} [{}]", r.pos, r.text, values(vs))?,
                Status::AssertError(e) => writeln!(f, "FAIL {}: {} {e}", r.pos, r.text)?,
            }
        }
        Ok(())
    }
}

pub fn field_ctx(spec: FieldSpec) -> FieldCtx {
    match spec {
        FieldSpec::Rational => FieldCtx::rational(),
        FieldSpec::Prime(p) => FieldCtx::prime(p).expect("validated by the parser"),
    }
}

/// Runs a program in order. Failed assertions are recorded and evaluation
/// continues; a failed binding ends the run.
pub fn evaluate(p: &Program) -> Evaluation {
    let ctx = field_ctx(p.field);
    let mut env: HashMap<String, Value> = HashMap::new();
    let mut out = Evaluation { field: ctx, bindings: Vec::new(), results: Vec::new() };
    for s in &p.stmts {
        let text = print::stmt(s);
        let status = match &s.kind {
            StmtKind::Bind(name, e) => match eval(ctx, &env, e) {
                Ok(v) => {
                    env.insert(name.clone(), v.clone());
                    out.bindings.push((name.clone(), v.clone()));
                    Status::Bound(v)
                }
                Err(err) => Status::BindFailed(err),
            },
            StmtKind::Assert(pred, args) => {
                match args.iter().map(|a| eval(ctx, &env, a)).collect::<EResult<Vec<_>>>() {
                    Ok(vals) => match check(*pred, &vals) {
                        Ok((true, shown)) => Status::Passed(shown),
                        Ok((false, shown)) => Status::Failed(shown),
                        Err(err) => Status::AssertError(err),
                    },
                    Err(err) => Status::AssertError(err),
                }
            }
        };
        let stop = matches!(status, Status::BindFailed(_));
        out.results.push(StmtResult { pos: s.pos, text, status });
        if stop {
            break;
        }
    }
    out
}

fn literal(ctx: FieldCtx, c: &[BigRational; 3]) -> EResult<Vec3> {
    let conv = |r: &BigRational| -> EResult<FieldElement> {
        if ctx.is_rational() {
            Ok(FieldElement::from_rational(r.clone()))
        } else {
            Ok(ctx.bigint(r.numer()).checked_div(&ctx.bigint(r.denom()))?)
        }
    };
    Ok([conv(&c[0])?, conv(&c[1])?, conv(&c[2])?])
}

fn type_error(f: impl fmt::Display, args: &[Value]) -> EvalError {
    let kinds: Vec<&str> = args.iter().map(Value::kind).collect();
    EvalError::Type(format!("`{f}` does not accept ({})", kinds.join(", ")))
}

fn eval(ctx: FieldCtx, env: &HashMap<String, Value>, e: &Expr) -> EResult<Value> {
    Ok(match e {
        Expr::Point(c) => Value::Point(ProjPoint::from_coords(literal(ctx, c)?)?),
        Expr::Line(c) => Value::Line(ProjLine::from_coords(literal(ctx, c)?)?),
        Expr::Int(n) => Value::Scalar(ctx.bigint(n)),
        Expr::Var(name) => env.get(name).cloned().expect("names are resolved by the parser"),
        Expr::Index(base, k) => match eval(ctx, env, base)? {
            Value::Tuple(items) => items
                .get(k - 1)
                .cloned()
                .ok_or_else(|| EvalError::Type(format!("component {k} of a {}-tuple", items.len())))?,
            other => return Err(EvalError::Type(format!("cannot index a {}", other.kind()))),
        },
        Expr::Neg(inner) => match eval(ctx, env, inner)? {
            Value::Scalar(x) => Value::Scalar(-&x),
            other => return Err(EvalError::Type(format!("cannot negate a {}", other.kind()))),
        },
        Expr::Bin(op, l, r) => {
            let (a, b) = (eval(ctx, env, l)?, eval(ctx, env, r)?);
            let (Value::Scalar(x), Value::Scalar(y)) = (&a, &b) else {
                return Err(type_error(op.symbol(), &[a, b]));
            };
            Value::Scalar(match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
                BinOp::Div => x.checked_div(y)?,
            })
        }
        Expr::Call(f, args) => {
            let vals = args.iter().map(|a| eval(ctx, env, a)).collect::<EResult<Vec<_>>>()?;
            call(ctx, *f, &vals)?
        }
    })
}

fn pair<T: Clone>(p: (T, T), wrap: fn(T) -> Value) -> Value {
    Value::Tuple(vec![wrap(p.0), wrap(p.1)])
}

fn call(ctx: FieldCtx, f: Func, args: &[Value]) -> EResult<Value> {
    use Value::*;
    let bad = || type_error(f, args);
    Ok(match (f, args) {
        (Func::Join, [Point(a), Point(b)]) => Line(join(a, b)?),
        (Func::Meet, [Line(a), Line(b)]) => Point(meet(a, b)?),
        (Func::Dual, [Point(a)]) => Line(dual_of_point(a)),
        (Func::Dual, [Line(l)]) => Point(dual_of_line(l)),
        (Func::AltitudeLine, [Point(a), Line(l)]) => Line(altitude_line(&Couple::new(a.clone(), l.clone()))?),
        (Func::AltitudePoint, [Point(a), Line(l)]) => Point(altitude_point(&Couple::new(a.clone(), l.clone()))?),
        (Func::ParallelLine, [Point(a), Line(l)]) => Line(parallel_line(&Couple::new(a.clone(), l.clone()))?),
        (Func::BasePoint, [Point(a), Line(l)]) => Point(base_point(&Couple::new(a.clone(), l.clone()))?),
        (Func::Conjugates, [Point(a), Point(b)]) => {
            pair(conjugate_points(&Side::new(a.clone(), b.clone())?)?, Value::Point)
        }
        (Func::Conjugates, [Line(a), Line(b)]) => {
            pair(conjugate_lines(&Vertex::new(a.clone(), b.clone())?)?, Value::Line)
        }
        (Func::Reflect, [x, mirror]) => {
            let a = match mirror {
                Point(a) => a.clone(),
                Line(l) => dual_of_line(l),
                _ => return Err(bad()),
            };
            match x {
                Point(b) => Point(reflect_point(b, &a)?),
                Line(m) => Line(reflect_line(m, &a)?),
                _ => return Err(bad()),
            }
        }
        (Func::Midpoints, [Point(a), Point(b)]) => {
            let side = Side::new(a.clone(), b.clone())?;
            let m = midpoints(&side)?.ok_or_else(|| GeomError::MidpointsAbsent(format!("{a}{b}")))?;
            pair(m, Value::Point)
        }
        (Func::Quadrance, [Point(a), Point(b)]) => Scalar(quadrance(a, b)?),
        (Func::Spread, [Line(a), Line(b)]) => Scalar(spread(a, b)?),
        (Func::Quadrea, [Point(a), Point(b), Point(c)]) => Scalar(triangle_metrics(a, b, c)?.quadrea),
        (Func::CrossRatio, [Point(a), Point(b), Point(c), Point(d)]) => cross_ratio(a, b, c, d)?.into(),
        (Func::CrossRatio, [Line(a), Line(b), Line(c), Line(d)]) => cross_ratio_lines(a, b, c, d)?.into(),
        (Func::NullPointsOn, [Line(l)]) => Tuple(null_points_on(l).into_iter().map(Point).collect()),
        (Func::NullPoint, [Scalar(t)]) => Point(null_point_from_param(ctx, &ExtValue::Finite(t.clone()))),
        (Func::NullPoint, [Infinity]) => Point(null_point_from_param(ctx, &ExtValue::Infinity)),
        _ => return Err(bad()),
    })
}

/// Evaluates a predicate, returning whether it holds and the exact values
/// it compared: the determinant, incidence form or bilinear form involved.
fn check(pred: Pred, args: &[Value]) -> EResult<(bool, Vec<Value>)> {
    use Value::*;
    let zero = |x: FieldElement| (x.is_zero(), vec![Scalar(x)]);
    Ok(match (pred, args) {
        (Pred::Collinear, [Point(a), Point(b), Point(c)]) => zero(linalg::det(a.coords(), b.coords(), c.coords())),
        (Pred::Concurrent, [Line(a), Line(b), Line(c)]) => zero(linalg::det(a.coords(), b.coords(), c.coords())),
        (Pred::Incident, [Point(a), Line(l)]) | (Pred::Incident, [Line(l), Point(a)]) => {
            zero(linalg::form(l.coords(), a.coords()))
        }
        (Pred::Perp, [Point(a), Point(b)]) => zero(linalg::form(a.coords(), b.coords())),
        (Pred::Perp, [Line(a), Line(b)]) => zero(linalg::form(a.coords(), b.coords())),
        (Pred::OnNull, [Point(a)]) => zero(linalg::form(a.coords(), a.coords())),
        (Pred::OnNull, [Line(l)]) => zero(linalg::form(l.coords(), l.coords())),
        (Pred::Eq, [x, y]) => (x == y, vec![x.clone(), y.clone()]),
        _ => return Err(type_error(pred, args)),
    })
}
