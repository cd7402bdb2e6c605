//! Homogeneous points and lines of the projective plane.
//!
//! A point `[x:y:z]` lies on a line `(a:b:c)` when `ax + by − cz = 0`. Both
//! kinds of object are stored in a canonical scale so that structural
//! equality is projective equality:
//!
//! * over ℚ the triple is a primitive integer vector whose first nonzero
//!   entry is positive;
//! * over F_p the first nonzero entry is 1.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{GeomError, Result};
use crate::field::{FieldCtx, FieldElement, FieldError};
use crate::linalg::{self, Vec3};

fn canonical(v: Vec3) -> Result<Vec3> {
    let ctx = v[0].ctx();
    for e in &v[1..] {
        if e.ctx() != ctx {
            return Err(FieldError::MixedContexts(ctx, e.ctx()).into());
        }
    }
    let lead = v
        .iter()
        .position(|e| !e.is_zero())
        .ok_or(GeomError::ZeroVector)?;
    if ctx.is_rational() {
        let rats: Vec<&BigRational> = v.iter().map(|e| e.as_rational().unwrap()).collect();
        let lcm = rats
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let ints: Vec<BigInt> = rats
            .iter()
            .map(|r| r.numer() * (&lcm / r.denom()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        if ints[lead].is_negative() {
            g = -g;
        }
        let out: Vec<FieldElement> = ints
            .iter()
            .map(|n| FieldElement::from_rational(BigRational::from_integer(n / &g)))
            .collect();
        Ok(out.try_into().unwrap())
    } else {
        let inv = v[lead].inv()?;
        Ok(linalg::scale(&v, &inv))
    }
}

macro_rules! homogeneous {
    ($name:ident, $open:literal, $close:literal) => {
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name(Vec3);

        impl $name {
            pub fn new(a: FieldElement, b: FieldElement, c: FieldElement) -> Result<Self> {
                Self::from_coords([a, b, c])
            }

            pub fn from_coords(v: Vec3) -> Result<Self> {
                canonical(v).map($name)
            }

            pub fn from_ints(ctx: FieldCtx, v: [i64; 3]) -> Result<Self> {
                Self::from_coords(v.map(|n| ctx.int(n)))
            }

            pub fn coords(&self) -> &Vec3 {
                &self.0
            }

            pub fn ctx(&self) -> FieldCtx {
                self.0[0].ctx()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(
                    f,
                    concat!($open, "{}:{}:{}", $close),
                    self.0[0], self.0[1], self.0[2]
                )
            }
        }
    };
}

homogeneous!(ProjPoint, "[", "]");
homogeneous!(ProjLine, "(", ")");

/// A field value or ∞, the range of the cross-ratio.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtValue {
    Finite(FieldElement),
    Infinity,
}

impl ExtValue {
    pub fn finite(&self) -> Option<&FieldElement> {
        match self {
            ExtValue::Finite(v) => Some(v),
            ExtValue::Infinity => None,
        }
    }
}

impl From<FieldElement> for ExtValue {
    fn from(v: FieldElement) -> Self {
        ExtValue::Finite(v)
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Finite(v) => v.fmt(f),
            ExtValue::Infinity => write!(f, "inf"),
        }
    }
}

pub fn incident(a: &ProjPoint, l: &ProjLine) -> bool {
    linalg::form(l.coords(), a.coords()).is_zero()
}

/// The line through two distinct points.
pub fn join(a: &ProjPoint, b: &ProjPoint) -> Result<ProjLine> {
    let c = linalg::cross(a.coords(), b.coords());
    if linalg::is_zero(&c) {
        return Err(GeomError::IdenticalArguments);
    }
    ProjLine::from_coords(linalg::flip_z(&c))
}

/// The point common to two distinct lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
    let c = linalg::cross(&linalg::flip_z(l.coords()), &linalg::flip_z(m.coords()));
    if linalg::is_zero(&c) {
        return Err(GeomError::IdenticalArguments);
    }
    ProjPoint::from_coords(c)
}

pub fn collinear(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    linalg::det(a.coords(), b.coords(), c.coords()).is_zero()
}

pub fn concurrent(l: &ProjLine, m: &ProjLine, n: &ProjLine) -> bool {
    linalg::det(l.coords(), m.coords(), n.coords()).is_zero()
}

/// Two distinct points on a line, used to parametrize it.
pub fn points_on(l: &ProjLine) -> (ProjPoint, ProjPoint) {
    let cov = linalg::flip_z(l.coords());
    let ctx = l.ctx();
    let basis = |i: usize| {
        let mut e = [ctx.zero(), ctx.zero(), ctx.zero()];
        e[i] = ctx.one();
        e
    };
    let mut found: Vec<ProjPoint> = Vec::with_capacity(2);
    for i in 0..3 {
        let c = linalg::cross(&basis(i), &cov);
        if let Ok(p) = ProjPoint::from_coords(c) {
            if !found.contains(&p) {
                found.push(p);
            }
        }
        if found.len() == 2 {
            break;
        }
    }
    let b = found.pop().expect("a line carries two basis points");
    let a = found.pop().expect("a line carries two basis points");
    (a, b)
}

/// Homogeneous coordinates of `p` in the basis `{u, v}` of the line `uv`.
fn line_coords(p: &Vec3, u: &Vec3, v: &Vec3) -> (FieldElement, FieldElement) {
    let w = linalg::cross(u, v);
    let k = w.iter().position(|e| !e.is_zero()).expect("distinct basis");
    let s = linalg::cross(p, v)[k].clone();
    let t = linalg::cross(u, p)[k].clone();
    (s, t)
}

/// The cross-ratio `(a,b:c,d) = ((a−c)/(b−c)) / ((a−d)/(b−d))` of four
/// collinear points.
pub fn cross_ratio(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, d: &ProjPoint) -> Result<ExtValue> {
    cross_ratio_coords([a.coords(), b.coords(), c.coords(), d.coords()])
}

/// The cross-ratio of four concurrent lines, with the same conventions.
pub fn cross_ratio_lines(a: &ProjLine, b: &ProjLine, c: &ProjLine, d: &ProjLine) -> Result<ExtValue> {
    cross_ratio_coords([a.coords(), b.coords(), c.coords(), d.coords()])
}

// Inputs are canonical, so equal vectors are equal projective objects.
fn cross_ratio_coords(pts: [&Vec3; 4]) -> Result<ExtValue> {
    let mut distinct: Vec<&Vec3> = Vec::new();
    for p in pts {
        if !distinct.contains(&p) {
            distinct.push(p);
        }
    }
    if distinct.len() < 2 {
        return Err(GeomError::DegenerateQuadruple);
    }
    let (u, v) = (distinct[0], distinct[1]);
    if pts.iter().any(|p| !linalg::det(u, v, p).is_zero()) {
        return Err(GeomError::NotCollinear);
    }
    let [pa, pb, pc, pd] = pts.map(|p| line_coords(p, u, v));
    let bracket = |x: &(FieldElement, FieldElement), y: &(FieldElement, FieldElement)| {
        &x.0 * &y.1 - &x.1 * &y.0
    };
    let num = bracket(&pa, &pc) * bracket(&pb, &pd);
    let den = bracket(&pb, &pc) * bracket(&pa, &pd);
    match (num.is_zero(), den.is_zero()) {
        (true, true) => Err(GeomError::DegenerateQuadruple),
        (false, true) => Ok(ExtValue::Infinity),
        _ => Ok(ExtValue::Finite(num.checked_div(&den)?)),
    }
}

fn degenerate(what: &str) -> GeomError {
    GeomError::DegenerateConfiguration(what.to_string())
}

fn meet_of_joins(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint, s: &ProjPoint) -> Result<ProjPoint> {
    meet(&join(p, q)?, &join(r, s)?)
}

/// Evaluates Pappus' configuration: with the `a`s collinear and the `b`s
/// collinear, the three cross-joins meet on a line.
pub fn pappus_holds(a: [&ProjPoint; 3], b: [&ProjPoint; 3]) -> Result<bool> {
    if !collinear(a[0], a[1], a[2]) || !collinear(b[0], b[1], b[2]) {
        return Err(degenerate("pappus points are not on two lines"));
    }
    let x1 = meet_of_joins(a[1], b[2], a[2], b[1]).map_err(|_| degenerate("x1"))?;
    let x2 = meet_of_joins(a[2], b[0], a[0], b[2]).map_err(|_| degenerate("x2"))?;
    let x3 = meet_of_joins(a[0], b[1], a[1], b[0]).map_err(|_| degenerate("x3"))?;
    Ok(collinear(&x1, &x2, &x3))
}

/// Evaluates Desargues' configuration: triangles perspective from a point
/// are perspective from a line.
pub fn desargues_holds(a: [&ProjPoint; 3], b: [&ProjPoint; 3]) -> Result<bool> {
    let spokes = [
        join(a[0], b[0]).map_err(|_| degenerate("a1b1"))?,
        join(a[1], b[1]).map_err(|_| degenerate("a2b2"))?,
        join(a[2], b[2]).map_err(|_| degenerate("a3b3"))?,
    ];
    if !concurrent(&spokes[0], &spokes[1], &spokes[2]) {
        return Err(degenerate("triangles are not in perspective"));
    }
    let x1 = meet_of_joins(a[1], a[2], b[1], b[2]).map_err(|_| degenerate("x1"))?;
    let x2 = meet_of_joins(a[2], a[0], b[2], b[0]).map_err(|_| degenerate("x2"))?;
    let x3 = meet_of_joins(a[0], a[1], b[0], b[1]).map_err(|_| degenerate("x3"))?;
    Ok(collinear(&x1, &x2, &x3))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldCtx {
        FieldCtx::rational()
    }

    fn pt(v: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(q(), v).unwrap()
    }

    fn ln(v: [i64; 3]) -> ProjLine {
        ProjLine::from_ints(q(), v).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(pt([-2, 4, 6]).to_string(), "[1:-2:-3]");
        assert_eq!(pt([0, -3, 0]), pt([0, 1, 0]));
        let half = q().ratio(1, 2).unwrap();
        assert_eq!(
            ProjPoint::new(half.clone(), half, q().one()).unwrap(),
            pt([1, 1, 2])
        );
        let f7 = FieldCtx::prime(7).unwrap();
        assert_eq!(ProjPoint::from_ints(f7, [0, 3, 5]).unwrap().to_string(), "[0:1:4]");
        assert_eq!(ProjPoint::from_ints(q(), [0, 0, 0]), Err(GeomError::ZeroVector));
    }

    #[test]
    fn incidence_examples() {
        assert!(incident(&pt([1, 0, 1]), &ln([1, 0, 1])));
        assert!(!incident(&pt([0, 0, 1]), &ln([0, 0, 1])));
        assert!(incident(&pt([1, 2, 0]), &ln([0, 0, 1])));
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(join(&pt([1, 0, 1]), &pt([-1, 0, 1])).unwrap(), ln([0, 1, 0]));
        assert_eq!(meet(&ln([0, 1, 0]), &ln([1, 0, 0])).unwrap(), pt([0, 0, 1]));
        // x = 1 and x = 2 are Euclidean parallel: they meet at infinity.
        let m = meet(&ln([1, 0, 1]), &ln([1, 0, 2])).unwrap();
        assert!(m.coords()[2].is_zero());
        assert_eq!(join(&pt([1, 2, 3]), &pt([2, 4, 6])), Err(GeomError::IdenticalArguments));
        assert_eq!(meet(&ln([1, 2, 3]), &ln([1, 2, 3])), Err(GeomError::IdenticalArguments));
    }

    #[test]
    fn collinearity_examples() {
        assert!(collinear(&pt([0, 0, 1]), &pt([1, 0, 1]), &pt([2, 0, 1])));
        assert!(!collinear(&pt([0, 0, 1]), &pt([1, 0, 1]), &pt([0, 1, 1])));
        assert!(collinear(&pt([3, 1, 1]), &pt([3, 1, 1]), &pt([0, 1, 1])));
        assert!(concurrent(&ln([1, 0, 0]), &ln([0, 1, 0]), &ln([1, 1, 0])));
    }

    #[test]
    fn cross_ratio_examples() {
        // Affine parameters 0, 1, 2, 3 on y = 0.
        let p = |x| pt([x, 0, 1]);
        let four_thirds = ExtValue::Finite(q().ratio(4, 3).unwrap());
        assert_eq!(cross_ratio(&p(0), &p(1), &p(2), &p(3)).unwrap(), four_thirds);
        assert_eq!(
            cross_ratio(&p(0), &p(1), &p(2), &p(2)).unwrap(),
            ExtValue::Finite(q().one())
        );
        assert_eq!(
            cross_ratio(&p(0), &p(1), &p(0), &p(3)).unwrap(),
            ExtValue::Finite(q().zero())
        );
        assert_eq!(cross_ratio(&p(0), &p(1), &p(2), &p(0)).unwrap(), ExtValue::Infinity);
        assert_eq!(
            cross_ratio(&p(0), &p(0), &p(0), &p(3)),
            Err(GeomError::DegenerateQuadruple)
        );
        assert_eq!(
            cross_ratio(&p(0), &p(1), &p(2), &pt([0, 1, 1])),
            Err(GeomError::NotCollinear)
        );
        // Point at infinity of the x-axis behaves as parameter ∞.
        let inf = pt([1, 0, 0]);
        assert_eq!(
            cross_ratio(&p(0), &inf, &p(2), &p(3)).unwrap(),
            ExtValue::Finite(q().ratio(2, 3).unwrap())
        );
    }

    #[test]
    fn pappus_desargues_fixed_instances() {
        let a = [pt([0, 0, 1]), pt([1, 0, 1]), pt([3, 0, 1])];
        let b = [pt([0, 1, 1]), pt([2, 3, 1]), pt([5, 6, 1])];
        assert!(pappus_holds([&a[0], &a[1], &a[2]], [&b[0], &b[1], &b[2]]).unwrap());
        let bad = pt([3, 1, 1]);
        assert!(matches!(
            pappus_holds([&a[0], &a[1], &bad], [&b[0], &b[1], &b[2]]),
            Err(GeomError::DegenerateConfiguration(_))
        ));
        // Perspective from the origin: b_i = a_i + k_i·o direction.
        let o = pt([0, 0, 1]);
        let a = [pt([1, 0, 1]), pt([0, 1, 1]), pt([2, 3, 1])];
        let b = [pt([3, 0, 1]), pt([0, 5, 1]), pt([4, 6, 1])];
        for i in 0..3 {
            assert!(collinear(&o, &a[i], &b[i]));
        }
        assert!(desargues_holds([&a[0], &a[1], &a[2]], [&b[0], &b[1], &b[2]]).unwrap());
    }
}
