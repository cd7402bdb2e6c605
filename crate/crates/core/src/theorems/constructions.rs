//! Triangle centers, conic constructions and the cubic relations.

use crate::duality::{
    altitude_line, altitude_point, base_point, dual_of_line, dual_of_point, is_null_point, midlines, midpoints,
    null_points_on, parallel_line, perp_points, reflect_point, Couple, Side,
};
use crate::error::{GeomError, Result};
use crate::field::FieldElement;
use crate::linalg::{self, Mat3};
use crate::metric::{quadrance, spread, Residual};
use crate::projective::{collinear, concurrent, incident, join, meet, ProjLine, ProjPoint};

use super::conic::{circle_conic, outer, Conic};

/// Lines `L1 = a2a3`, `L2 = a1a3`, `L3 = a1a2` of a triangle.
pub fn lines_of(a: [&ProjPoint; 3]) -> Result<[ProjLine; 3]> {
    if collinear(a[0], a[1], a[2]) {
        return Err(GeomError::CollinearPoints);
    }
    Ok([join(a[1], a[2])?, join(a[0], a[2])?, join(a[0], a[1])?])
}

/// Points `a1 = L2L3`, `a2 = L1L3`, `a3 = L1L2` of a trilateral.
pub fn points_of(l: [&ProjLine; 3]) -> Result<[ProjPoint; 3]> {
    if concurrent(l[0], l[1], l[2]) {
        return Err(GeomError::DegenerateConfiguration("concurrent lines".into()));
    }
    Ok([meet(l[1], l[2])?, meet(l[0], l[2])?, meet(l[0], l[1])?])
}

/// The altitude lines from each point to its opposite line.
pub fn altitude_lines(a: [&ProjPoint; 3]) -> Result<[ProjLine; 3]> {
    let l = lines_of(a)?;
    let alt = |i: usize| {
        altitude_line(&Couple::new(a[i].clone(), l[i].clone())).map_err(|e| match e {
            GeomError::DualCouple => GeomError::DualTriangle,
            other => other,
        })
    };
    Ok([alt(0)?, alt(1)?, alt(2)?])
}

pub fn orthocenter(a1: &ProjPoint, a2: &ProjPoint, a3: &ProjPoint) -> Result<ProjPoint> {
    let n = altitude_lines([a1, a2, a3])?;
    meet(&n[0], &n[1]).map_err(|_| GeomError::DegenerateConfiguration("altitudes coincide".into()))
}

/// The altitude points on each line from its opposite point.
pub fn altitude_points(l: [&ProjLine; 3]) -> Result<[ProjPoint; 3]> {
    let p = points_of(l)?;
    let alt = |i: usize| {
        altitude_point(&Couple::new(p[i].clone(), l[i].clone())).map_err(|e| match e {
            GeomError::DualCouple => GeomError::DualTriangle,
            other => other,
        })
    };
    Ok([alt(0)?, alt(1)?, alt(2)?])
}

pub fn ortholine(l1: &ProjLine, l2: &ProjLine, l3: &ProjLine) -> Result<ProjLine> {
    let n = altitude_points([l1, l2, l3])?;
    join(&n[0], &n[1]).map_err(|_| GeomError::DegenerateConfiguration("altitude points coincide".into()))
}

/// Six midpoints of a triangle and the circumlines/circumcenters they give.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circumcircles {
    /// `midpoints[i]` are the midpoints of the side opposite `a_i`.
    pub midpoints: [[ProjPoint; 2]; 3],
    pub circumlines: Vec<ProjLine>,
    pub circumcenters: Vec<ProjPoint>,
}

pub fn circumcenters(a1: &ProjPoint, a2: &ProjPoint, a3: &ProjPoint) -> Result<Circumcircles> {
    let a = [a1, a2, a3];
    lines_of(a)?;
    let names = ["a2a3", "a1a3", "a1a2"];
    let mut mids: Vec<[ProjPoint; 2]> = Vec::new();
    for (i, name) in names.iter().enumerate() {
        let (j, k) = [(1, 2), (0, 2), (0, 1)][i];
        let side = Side::new(a[j].clone(), a[k].clone())?;
        let (d, e) = midpoints(&side)
            .map_err(|_| GeomError::MidpointsAbsent(name.to_string()))?
            .ok_or_else(|| GeomError::MidpointsAbsent(name.to_string()))?;
        mids.push([d, e]);
    }
    let mids: [[ProjPoint; 2]; 3] = mids.try_into().unwrap();
    let mut circumlines: Vec<ProjLine> = Vec::new();
    for pick in 0..8usize {
        let m = [&mids[0][pick & 1], &mids[1][(pick >> 1) & 1], &mids[2][(pick >> 2) & 1]];
        if collinear(m[0], m[1], m[2]) {
            let line = join(m[0], m[1]).or_else(|_| join(m[0], m[2]))?;
            if !circumlines.contains(&line) {
                circumlines.push(line);
            }
        }
    }
    let circumcenters = circumlines.iter().map(dual_of_line).collect();
    Ok(Circumcircles { midpoints: mids, circumlines, circumcenters })
}

/// The triangle whose lines are the parallels through each `a_i` to the
/// opposite line; `d1 = P2P3` and so on.
pub fn double_triangle(a: [&ProjPoint; 3]) -> Result<[ProjPoint; 3]> {
    let l = lines_of(a).map_err(|_| GeomError::DegenerateDouble)?;
    let par = |i: usize| {
        parallel_line(&Couple::new(a[i].clone(), l[i].clone())).map_err(|_| GeomError::DegenerateDouble)
    };
    let p = [par(0)?, par(1)?, par(2)?];
    let d = points_of([&p[0], &p[1], &p[2]]).map_err(|_| GeomError::DegenerateDouble)?;
    if d.iter().zip(a).any(|(di, ai)| di == ai) {
        return Err(GeomError::DegenerateDouble);
    }
    Ok(d)
}

/// Joins `a_i b_i`, the lines whose concurrency defines the double points.
pub fn spokes(a: [&ProjPoint; 3], b: &[ProjPoint; 3]) -> Result<[ProjLine; 3]> {
    let j = |i: usize| join(a[i], &b[i]).map_err(|_| GeomError::DegenerateDouble);
    Ok([j(0)?, j(1)?, j(2)?])
}

fn spoke_meet(s: &[ProjLine; 3]) -> Result<ProjPoint> {
    meet(&s[0], &s[1]).map_err(|_| GeomError::DegenerateDouble)
}

pub fn double_point(a1: &ProjPoint, a2: &ProjPoint, a3: &ProjPoint) -> Result<ProjPoint> {
    let a = [a1, a2, a3];
    spoke_meet(&spokes(a, &double_triangle(a)?)?)
}

pub fn second_double_point(a1: &ProjPoint, a2: &ProjPoint, a3: &ProjPoint) -> Result<ProjPoint> {
    let a = [a1, a2, a3];
    let d = double_triangle(a)?;
    let g = double_triangle([&d[0], &d[1], &d[2]])?;
    spoke_meet(&spokes(a, &g)?)
}

/// `1/P + 1/R + 1/T − 3/4`.
pub fn reciprocal_sum_48(p: &FieldElement, r: &FieldElement, t: &FieldElement) -> Result<Residual> {
    let ctx = p.ctx();
    let mut sum = ctx.zero();
    for x in [p, r, t] {
        if x.is_zero() {
            return Err(GeomError::ZeroSpread);
        }
        sum = &sum + &x.inv()?;
    }
    let value = &sum - &ctx.ratio(3, 4)?;
    Ok(Residual { law: "reciprocal_sum_48", value })
}

/// Spreads `(P, R, T)` between opposite lines of a quadrangle:
/// `P = S(α1α3, α2α4)`, `R = S(α1α2, α3α4)`, `T = S(α2α3, α4α1)`.
pub fn quadrangle_spreads(a: [&ProjPoint; 4]) -> Result<[FieldElement; 3]> {
    let j = |x: usize, y: usize| join(a[x], a[y]);
    Ok([
        spread(&j(0, 2)?, &j(1, 3)?)?,
        spread(&j(0, 1)?, &j(2, 3)?)?,
        spread(&j(1, 2)?, &j(3, 0)?)?,
    ])
}

/// Quadrances `(p, r, t)` between opposite points of a quadrilateral.
pub fn quadrilateral_quadrances(l: [&ProjLine; 4]) -> Result<[FieldElement; 3]> {
    let m = |x: usize, y: usize| meet(l[x], l[y]);
    Ok([
        quadrance(&m(0, 2)?, &m(1, 3)?)?,
        quadrance(&m(0, 1)?, &m(2, 3)?)?,
        quadrance(&m(1, 2)?, &m(3, 0)?)?,
    ])
}

/// `PR + RT + PT − 48` and `PRT − 64`.
pub fn residuals_48_64(v: &[FieldElement; 3]) -> (FieldElement, FieldElement) {
    let ctx = v[0].ctx();
    let pairs = &(&(&v[0] * &v[1]) + &(&v[1] * &v[2])) + &(&v[0] * &v[2]);
    let product = &(&v[0] * &v[1]) * &v[2];
    (pairs - ctx.int(48), product - ctx.int(64))
}

/// Diagonal points `b` and opposite points `c` of a pentagon.
pub fn pentagon_points(a: [&ProjPoint; 5]) -> Result<([ProjPoint; 5], [ProjPoint; 5])> {
    let j = |x: usize, y: usize| join(a[x], a[y]);
    // b1 = (a2a4)(a3a5), cycling indices.
    let mut b = Vec::with_capacity(5);
    for i in 0..5 {
        b.push(meet(&j((i + 1) % 5, (i + 3) % 5)?, &j((i + 2) % 5, (i + 4) % 5)?)?);
    }
    // c1 = (a1b1)(a2a5), c2 = (a2b2)(a3a1), ...
    let mut c = Vec::with_capacity(5);
    for i in 0..5 {
        c.push(meet(&join(a[i], &b[i])?, &j((i + 1) % 5, (i + 4) % 5)?)?);
    }
    Ok((b.try_into().unwrap(), c.try_into().unwrap()))
}

/// Diagonal points `b` and opposite points `c` of a septagon.
pub fn septagon_points(a: [&ProjPoint; 7]) -> Result<([ProjPoint; 7], [ProjPoint; 7])> {
    let j = |x: usize, y: usize| join(a[x % 7], a[y % 7]);
    // b1 = (a3a5)(a4a6), c1 = (a1b1)(a7a2).
    let mut b = Vec::with_capacity(7);
    for i in 0..7 {
        b.push(meet(&j(i + 2, i + 4)?, &j(i + 3, i + 5)?)?);
    }
    let mut c = Vec::with_capacity(7);
    for i in 0..7 {
        c.push(meet(&join(a[i], &b[i])?, &j(i + 6, i + 1)?)?);
    }
    Ok((b.try_into().unwrap(), c.try_into().unwrap()))
}

/// `(q − 4r)² − 8qr(2r − q)`.
pub fn canonical_cubic(q: &FieldElement, r: &FieldElement) -> FieldElement {
    let lhs = (q - &r.scale(4)).square();
    let rhs = (&(q * r) * &(&r.scale(2) - q)).scale(8);
    lhs - rhs
}

/// `16rs(3 − 4(s + r)) − 1`.
pub fn jumping_jack_cubic(r: &FieldElement, s: &FieldElement) -> FieldElement {
    let ctx = r.ctx();
    let inner = &ctx.int(3) - &(s + r).scale(4);
    &(&(r * s).scale(16) * &inner) - &ctx.one()
}

/// Points of the Jumping Jack configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpingJack {
    pub g: ProjPoint,
    pub x: ProjPoint,
    pub y: ProjPoint,
    pub z: ProjPoint,
    pub w: ProjPoint,
    pub r: FieldElement,
    pub s: FieldElement,
    pub residual: Residual,
}

pub fn jumping_jack(alpha: [&ProjPoint; 5], l: &ProjLine) -> Result<JumpingJack> {
    let bad = |what: &str| GeomError::DegenerateConfiguration(what.to_string());
    for (i, p) in alpha.iter().enumerate() {
        if !is_null_point(p) || alpha[..i].contains(p) {
            return Err(bad("need five distinct null points"));
        }
    }
    let j = |x: usize, y: usize| join(alpha[x], alpha[y]).map_err(|_| bad("join"));
    let m = |a: &ProjLine, b: &ProjLine| meet(a, b).map_err(|_| bad("meet"));
    let g = m(&j(0, 2)?, &j(1, 3)?)?;
    if !incident(&g, l) {
        return Err(bad("L does not pass through g"));
    }
    let a45 = j(3, 4)?;
    let a35 = j(2, 4)?;
    let x = m(&j(0, 2)?, &a45)?;
    let y = m(l, &a45)?;
    let z = m(&j(1, 3)?, &a35)?;
    let w = m(l, &a35)?;
    if x == y || z == w {
        return Err(bad("coincident measured points"));
    }
    let r = quadrance(&x, &y)?;
    let s = quadrance(&z, &w)?;
    let value = jumping_jack_cubic(&r, &s);
    Ok(JumpingJack { g, x, y, z, w, r, s, residual: Residual { law: "jumping_jack", value } })
}

/// Which pair of joins meets in `b3` in the canonical points construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B3Reading {
    /// `b3 = (x1y2)(x2y1)`.
    Crossed,
    /// `b3 = (x1y1)(x2y2)`.
    Paired,
}

/// The reading under which `b3` lies on `α1α2` identically; established by
/// `canonical_b3_reading_is_resolved` in the test suite.
pub const B3_READING: B3Reading = B3Reading::Crossed;

/// Auxiliary choices of the canonical points construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalAux {
    pub alpha3: ProjPoint,
    /// On `α2α3`.
    pub b1: ProjPoint,
    /// On `α1α3`.
    pub b2: ProjPoint,
}

/// All points of the canonical points construction, indexed from zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalConstruction {
    pub alpha: [ProjPoint; 3],
    pub x: [ProjPoint; 3],
    pub y: [ProjPoint; 3],
    pub b: [ProjPoint; 3],
    pub c: [ProjPoint; 3],
    pub z: [ProjPoint; 3],
    pub w: [ProjPoint; 3],
}

pub fn canonical_construction(
    alpha1: &ProjPoint,
    alpha2: &ProjPoint,
    x3: &ProjPoint,
    y3: &ProjPoint,
    aux: &CanonicalAux,
    reading: B3Reading,
) -> Result<CanonicalConstruction> {
    let d = |_| GeomError::DegenerateAux;
    let j = |p: &ProjPoint, q: &ProjPoint| join(p, q).map_err(d);
    let m = |l: &ProjLine, n: &ProjLine| meet(l, n).map_err(d);
    let a3 = &aux.alpha3;
    if a3 == alpha1 || a3 == alpha2 || !is_null_point(a3) {
        return Err(GeomError::DegenerateAux);
    }
    let a12 = j(alpha1, alpha2)?;
    let a13 = j(alpha1, a3)?;
    let a23 = j(alpha2, a3)?;
    if !incident(&aux.b1, &a23) || !incident(&aux.b2, &a13) {
        return Err(GeomError::DegenerateAux);
    }
    let x2 = m(&a13, &j(y3, &aux.b1)?)?;
    let y2 = m(&a13, &j(x3, &aux.b1)?)?;
    let x1 = m(&a23, &j(y3, &aux.b2)?)?;
    let y1 = m(&a23, &j(x3, &aux.b2)?)?;
    let b3 = match reading {
        B3Reading::Crossed => m(&j(&x1, &y2)?, &j(&x2, &y1)?)?,
        B3Reading::Paired => m(&j(&x1, &y1)?, &j(&x2, &y2)?)?,
    };
    let c1 = m(&j(&x2, x3)?, &j(&y2, y3)?)?;
    let c2 = m(&j(&x1, x3)?, &j(&y1, y3)?)?;
    let c3 = m(&j(&x1, &x2)?, &j(&y1, &y2)?)?;
    let cb1 = j(&c1, &aux.b1)?;
    let cb2 = j(&c2, &aux.b2)?;
    let cb3 = j(&c3, &b3)?;
    let z3 = m(&cb1, &a12)?;
    let w2 = m(&cb1, &a13)?;
    let z1 = m(&cb2, &a23)?;
    let w3 = m(&cb2, &a12)?;
    let z2 = m(&cb3, &a13)?;
    let w1 = m(&cb3, &a23)?;
    Ok(CanonicalConstruction {
        alpha: [alpha1.clone(), alpha2.clone(), a3.clone()],
        x: [x1, x2, x3.clone()],
        y: [y1, y2, y3.clone()],
        b: [aux.b1.clone(), aux.b2.clone(), b3],
        c: [c1, c2, c3],
        z: [z1, z2, z3],
        w: [w1, w2, w3],
    })
}

/// Which quadrance plays `r` in the canonical points cubic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicReading {
    /// `r = q(z3, w3)`, as displayed with the cubic.
    Canonical,
    /// `r = q(x3, z3)`, which equals `q(y3, w3)`.
    Adjacent,
}

/// The reading under which the cubic vanishes identically; established by
/// `canonical_cubic_reading_is_resolved` in the test suite. Under the
/// displayed reading the pair instead satisfies `q² = 4r(q − 1)`.
pub const CUBIC_READING: CubicReading = CubicReading::Adjacent;

/// The canonical points `z3, w3` of `x3, y3` and the cubic residual
/// relating `q = q(x3,y3)` to `r` per [`CUBIC_READING`].
pub fn canonical_points(
    x3: &ProjPoint,
    y3: &ProjPoint,
    aux: &CanonicalAux,
) -> Result<(ProjPoint, ProjPoint, Residual)> {
    let line = join(x3, y3)?;
    let nulls = null_points_on(&line);
    if nulls.len() != 2 {
        return Err(GeomError::NoNullPointsOnJoin);
    }
    let k = canonical_construction(&nulls[0], &nulls[1], x3, y3, aux, B3_READING)?;
    let q = quadrance(x3, y3)?;
    let r = match CUBIC_READING {
        CubicReading::Canonical => quadrance(&k.z[2], &k.w[2])?,
        CubicReading::Adjacent => quadrance(x3, &k.z[2])?,
    };
    let value = canonical_cubic(&q, &r);
    let [_, _, z3] = k.z;
    let [_, _, w3] = k.w;
    Ok((z3, w3, Residual { law: "canonical_cubic", value }))
}

/// The parabola with focus `f1` and directrix `D1`, written through the sum
/// law `q(x,f1) + q(x,f2) = 1` with `f2 = D1⊥` and denominators cleared:
/// `k1k2⟨x,x⟩ − k2⟨x,f1⟩² − k1⟨x,f2⟩² = 0`.
pub fn parabola_conic(f1: &ProjPoint, d1: &ProjLine) -> Result<Conic> {
    let f2 = dual_of_line(d1);
    let k1 = linalg::form(f1.coords(), f1.coords());
    let k2 = linalg::form(f2.coords(), f2.coords());
    if k1.is_zero() || k2.is_zero() {
        return Err(GeomError::NullArgument);
    }
    let j1 = linalg::flip_z(f1.coords());
    let j2 = linalg::flip_z(f2.coords());
    let mut m = super::conic::null_circle(f1.ctx()).0;
    let k12 = &k1 * &k2;
    let o1 = outer(&j1, &j1);
    let o2 = outer(&j2, &j2);
    for i in 0..3 {
        for c in 0..3 {
            m.0[i][c] = &(&(&m.0[i][c] * &k12) - &(&k2 * &o1.0[i][c])) - &(&k1 * &o2.0[i][c]);
        }
    }
    Ok(Conic(m))
}

/// Two parabola points found from `b1` on the directrix, and the midlines
/// through them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolaPoints {
    pub points: [ProjPoint; 2],
    pub tangents: [ProjLine; 2],
}

pub fn parabola_points(f1: &ProjPoint, d1: &ProjLine, b1: &ProjPoint) -> Result<ParabolaPoints> {
    if !incident(b1, d1) {
        return Err(GeomError::HypothesisViolated("b1 is not on the directrix".into()));
    }
    if is_null_point(f1) || is_null_point(&dual_of_line(d1)) || incident(f1, d1) {
        return Err(GeomError::DegenerateCouple);
    }
    if dual_of_point(f1) == *d1 {
        return Err(GeomError::DegenerateCouple);
    }
    let side = Side::new(b1.clone(), f1.clone()).map_err(|_| GeomError::DegenerateCouple)?;
    let (m1, m2) = midlines(&side)
        .map_err(|_| GeomError::MidlinesAbsent)?
        .ok_or(GeomError::MidlinesAbsent)?;
    let alt = join(b1, &dual_of_line(d1)).map_err(|_| GeomError::DegenerateCouple)?;
    let a1 = meet(&m1, &alt).map_err(|_| GeomError::DegenerateCouple)?;
    let a2 = meet(&m2, &alt).map_err(|_| GeomError::DegenerateCouple)?;
    Ok(ParabolaPoints { points: [a1, a2], tangents: [m1, m2] })
}

/// `q(a, D)`: the quadrance from `a` to the foot of its altitude on `D`.
pub fn quadrance_to_line(a: &ProjPoint, d: &ProjLine) -> Result<FieldElement> {
    quadrance(a, &base_point(&Couple::new(a.clone(), d.clone()))?)
}

/// Intermediate objects of the limiting-line construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bolyai {
    pub c: ProjPoint,
    pub k: ProjLine,
    pub p: ProjLine,
    pub midpoints: [ProjPoint; 2],
    pub n: ProjLine,
    pub d: ProjPoint,
    pub e: ProjPoint,
    pub u: ProjPoint,
    pub v: ProjPoint,
    pub lines: [ProjLine; 2],
}

/// Limiting lines from `a` to the interior line `L`, using the auxiliary
/// point `b` on `L`.
pub fn bolyai_limiting_lines(a: &ProjPoint, l: &ProjLine, b: &ProjPoint) -> Result<Bolyai> {
    if null_points_on(l).len() != 2 {
        return Err(GeomError::ExteriorLine);
    }
    if !incident(b, l) {
        return Err(GeomError::HypothesisViolated("b is not on L".into()));
    }
    let couple = Couple::new(a.clone(), l.clone());
    let k = altitude_line(&couple)?;
    let c = base_point(&couple)?;
    let p = parallel_line(&couple)?;
    let side = Side::new(a.clone(), c.clone()).map_err(|_| GeomError::MidpointsAbsent("ac".into()))?;
    let (m1, m2) = midpoints(&side)
        .map_err(|_| GeomError::MidpointsAbsent("ac".into()))?
        .ok_or_else(|| GeomError::MidpointsAbsent("ac".into()))?;
    let n = altitude_line(&Couple::new(b.clone(), p.clone()))?;
    let d = reflect_point(b, &m1)?;
    let e = reflect_point(b, &m2)?;
    let radius = quadrance(a, &d)?;
    let circle = circle_conic(a, &radius)?;
    let hits = circle.meet_line(&n).ok_or(GeomError::DegenerateAux)?;
    if hits.is_empty() {
        return Err(GeomError::NoIntersection);
    }
    if hits.len() != 2 {
        return Err(GeomError::DegenerateAux);
    }
    let u = hits[0].clone();
    let v = hits[1].clone();
    let lines = [join(a, &u)?, join(a, &v)?];
    Ok(Bolyai { c, k, p, midpoints: [m1, m2], n, d, e, u, v, lines })
}

/// Lifts a 2×2 Möbius matrix on the null-circle parameter `[s:t]` to the
/// isometry of the plane it induces through `[s²−t² : 2st : s²+t²]`.
pub fn conic_isometry(m: [[FieldElement; 2]; 2]) -> Mat3 {
    let ctx = m[0][0].ctx();
    let half = ctx.ratio(1, 2).expect("odd characteristic");
    let image = |v: [FieldElement; 3]| -> [FieldElement; 3] {
        // s² = (x+z)/2, st = y/2, t² = (z−x)/2.
        let ss = &(&v[0] + &v[2]) * &half;
        let st = &v[1] * &half;
        let tt = &(&v[2] - &v[0]) * &half;
        let [[a, b], [c, d]] = &m;
        let s2 = &(&(&a.square() * &ss) + &(&(a * b).scale(2) * &st)) + &(&b.square() * &tt);
        let t2 = &(&(&c.square() * &ss) + &(&(c * d).scale(2) * &st)) + &(&d.square() * &tt);
        let mixed = &(&(&(a * c) * &ss) + &(&(&(a * d) + &(b * c)) * &st)) + &(&(b * d) * &tt);
        [&s2 - &t2, mixed.scale(2), &s2 + &t2]
    };
    let (o, z) = (ctx.one(), ctx.zero());
    let cols = [
        image([o.clone(), z.clone(), z.clone()]),
        image([z.clone(), o.clone(), z.clone()]),
        image([z.clone(), z, o]),
    ];
    Mat3(cols).transpose()
}

/// `true` when `c` is one of the two midpoints of `b, d`: `σ_c(b) = d`.
pub fn is_midpoint(c: &ProjPoint, b: &ProjPoint, d: &ProjPoint) -> Result<bool> {
    Ok(reflect_point(b, c)? == *d)
}

/// Four pairings `a1[i] ⊥ a2[j]`, as `(i, j)` for those that hold.
pub fn perpendicular_pairings(a1: &[ProjPoint; 2], a2: &[ProjPoint; 2]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, p) in a1.iter().enumerate() {
        for (j, q) in a2.iter().enumerate() {
            if perp_points(p, q) {
                out.push((i, j));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn q() -> FieldCtx {
        FieldCtx::rational()
    }

    fn pt(v: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(q(), v).unwrap()
    }

    #[test]
    fn hand_instance_48_64() {
        let a = [pt([1, 0, 1]), pt([0, 1, 1]), pt([-1, 0, 1]), pt([0, -1, 1])];
        let v = quadrangle_spreads([&a[0], &a[1], &a[2], &a[3]]).unwrap();
        assert_eq!(v, [q().int(1), q().int(-8), q().int(-8)]);
        let (r48, r64) = residuals_48_64(&v);
        assert!(r48.is_zero() && r64.is_zero());
        assert!(reciprocal_sum_48(&v[0], &v[1], &v[2]).unwrap().holds());
        assert!(!reciprocal_sum_48(&q().int(2), &v[1], &v[2]).unwrap().holds());
        assert_eq!(reciprocal_sum_48(&q().zero(), &v[1], &v[2]), Err(GeomError::ZeroSpread));
    }

    #[test]
    fn cubic_curve_points() {
        let nine_eighths = q().ratio(9, 8).unwrap();
        assert!(canonical_cubic(&nine_eighths, &nine_eighths).is_zero());
        let quarter = q().ratio(1, 4).unwrap();
        assert!(jumping_jack_cubic(&quarter, &quarter).is_zero());
        assert!(!jumping_jack_cubic(&quarter, &nine_eighths).is_zero());
    }

    #[test]
    fn equilateral_isometry_has_order_three() {
        let (o, z) = (q().one(), q().zero());
        let g = conic_isometry([[o.clone(), -&o], [o, z]]);
        let g3 = g.mul(&g).mul(&g);
        let k = g3.0[0][0].clone();
        assert!(!k.is_zero());
        assert_eq!(g3, Mat3(Mat3::identity(q()).0.map(|r| r.map(|e| &e * &k))));
        // Null points go to null points.
        let alpha = pt([3, 4, 5]);
        let img = ProjPoint::from_coords(g.apply(alpha.coords())).unwrap();
        assert!(is_null_point(&img));
    }

    #[test]
    fn orthocenter_of_equilateral_is_its_center() {
        let (o, z) = (q().one(), q().zero());
        let g = conic_isometry([[o.clone(), -&o], [o, z]]);
        let a1 = pt([1, 2, 7]);
        let a2 = ProjPoint::from_coords(g.apply(a1.coords())).unwrap();
        let a3 = ProjPoint::from_coords(g.apply(a2.coords())).unwrap();
        let h = orthocenter(&a1, &a2, &a3).unwrap();
        let gh = ProjPoint::from_coords(g.apply(h.coords())).unwrap();
        assert_eq!(gh, h);
        let n = altitude_lines([&a1, &a2, &a3]).unwrap();
        assert!(concurrent(&n[0], &n[1], &n[2]));
    }

    struct CanonicalInstance {
        alpha: Vec<ProjPoint>,
        x3: ProjPoint,
        y3: ProjPoint,
        aux: CanonicalAux,
    }

    fn canonical_instances(ctx: FieldCtx, n: usize) -> Vec<CanonicalInstance> {
        use crate::theorems::Gen;
        let mut out = Vec::new();
        let mut seed = 0;
        while out.len() < n {
            seed += 1;
            let mut g = Gen::new(ctx, seed);
            let mut draw = || -> Result<CanonicalInstance> {
                let pair = g.null_points(2)?;
                let line = join(&pair[0], &pair[1])?;
                let x3 = g.point_on(&line, &[])?;
                let y3 = g.point_on(&line, &[&x3])?;
                let alpha = null_points_on(&line);
                let alpha3 = g.null_point();
                let b1 = g.point_on(&join(&alpha[1], &alpha3)?, &[])?;
                let b2 = g.point_on(&join(&alpha[0], &alpha3)?, &[])?;
                let aux = CanonicalAux { alpha3, b1, b2 };
                canonical_construction(&alpha[0], &alpha[1], &x3, &y3, &aux, B3Reading::Crossed)?;
                canonical_construction(&alpha[0], &alpha[1], &x3, &y3, &aux, B3Reading::Paired)?;
                Ok(CanonicalInstance { alpha, x3, y3, aux })
            };
            if let Ok(inst) = draw() {
                out.push(inst);
            }
        }
        out
    }

    #[test]
    fn canonical_b3_reading_is_resolved() {
        for ctx in [q(), FieldCtx::prime(101).unwrap()] {
            let on_line = |reading: B3Reading| {
                canonical_instances(ctx, 30)
                    .iter()
                    .filter(|k| {
                        let c = canonical_construction(&k.alpha[0], &k.alpha[1], &k.x3, &k.y3, &k.aux, reading)
                            .unwrap();
                        incident(&c.b[2], &join(&k.alpha[0], &k.alpha[1]).unwrap())
                    })
                    .count()
            };
            assert_eq!(on_line(B3_READING), 30);
            assert!(on_line(B3Reading::Paired) < 30);
        }
    }

    #[test]
    fn canonical_cubic_reading_is_resolved() {
        for ctx in [q(), FieldCtx::prime(101).unwrap()] {
            let mut displayed_fails = 0;
            for k in canonical_instances(ctx, 30) {
                let c = canonical_construction(&k.alpha[0], &k.alpha[1], &k.x3, &k.y3, &k.aux, B3_READING).unwrap();
                let qq = quadrance(&k.x3, &k.y3).unwrap();
                let adjacent = quadrance(&k.x3, &c.z[2]).unwrap();
                assert_eq!(adjacent, quadrance(&k.y3, &c.w[2]).unwrap());
                assert!(canonical_cubic(&qq, &adjacent).is_zero());
                assert!(canonical_cubic(&qq, &quadrance(&k.x3, &c.w[2]).unwrap()).is_zero());
                let r = quadrance(&c.z[2], &c.w[2]).unwrap();
                if !canonical_cubic(&qq, &r).is_zero() {
                    displayed_fails += 1;
                }
                assert_eq!(qq.square(), (&r * &(&qq - &ctx.one())).scale(4));
            }
            assert!(displayed_fails > 0);
        }
    }
}
