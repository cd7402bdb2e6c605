//! Polarity in the null circle `x² + y² − z² = 0` and the constructions
//! built from it: perpendiculars, altitudes, conjugates, reflections and
//! midpoints.

use crate::error::{GeomError, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::{self, Mat3};
use crate::projective::{join, meet, points_on, ExtValue, ProjLine, ProjPoint};

/// Two distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side(pub ProjPoint, pub ProjPoint);

/// Two distinct lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex(pub ProjLine, pub ProjLine);

/// A point together with a line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Couple {
    pub point: ProjPoint,
    pub line: ProjLine,
}

impl Side {
    pub fn new(a1: ProjPoint, a2: ProjPoint) -> Result<Self> {
        if a1 == a2 {
            return Err(GeomError::IdenticalArguments);
        }
        Ok(Side(a1, a2))
    }

    pub fn join(&self) -> ProjLine {
        join(&self.0, &self.1).expect("side members are distinct")
    }

    pub fn is_null(&self) -> bool {
        is_null_line(&self.join())
    }

    pub fn is_nil(&self) -> bool {
        is_null_point(&self.0) || is_null_point(&self.1)
    }

    pub fn dual(&self) -> Vertex {
        Vertex(dual_of_point(&self.0), dual_of_point(&self.1))
    }
}

impl Vertex {
    pub fn new(l1: ProjLine, l2: ProjLine) -> Result<Self> {
        if l1 == l2 {
            return Err(GeomError::IdenticalArguments);
        }
        Ok(Vertex(l1, l2))
    }

    pub fn meet(&self) -> ProjPoint {
        meet(&self.0, &self.1).expect("vertex members are distinct")
    }

    pub fn is_null(&self) -> bool {
        is_null_point(&self.meet())
    }

    pub fn is_nil(&self) -> bool {
        is_null_line(&self.0) || is_null_line(&self.1)
    }

    pub fn dual(&self) -> Side {
        Side(dual_of_line(&self.0), dual_of_line(&self.1))
    }
}

impl Couple {
    pub fn new(point: ProjPoint, line: ProjLine) -> Self {
        Couple { point, line }
    }

    pub fn is_dual(&self) -> bool {
        dual_of_point(&self.point) == self.line
    }

    fn check(&self) -> Result<()> {
        if self.is_dual() {
            Err(GeomError::DualCouple)
        } else {
            Ok(())
        }
    }
}

/// `⟨a,a⟩` for a point.
pub fn quad_form(a: &ProjPoint) -> FieldElement {
    linalg::form(a.coords(), a.coords())
}

/// `⟨L,L⟩` for a line.
pub fn line_quad_form(l: &ProjLine) -> FieldElement {
    linalg::form(l.coords(), l.coords())
}

pub fn is_null_point(a: &ProjPoint) -> bool {
    quad_form(a).is_zero()
}

pub fn is_null_line(l: &ProjLine) -> bool {
    line_quad_form(l).is_zero()
}

/// Interior points satisfy `x² + y² < z²`. Only defined over ℚ.
pub fn is_interior_point(a: &ProjPoint) -> Option<bool> {
    quad_form(a).signum().map(|s| s < 0)
}

pub fn is_exterior_point(a: &ProjPoint) -> Option<bool> {
    quad_form(a).signum().map(|s| s > 0)
}

/// A line is interior when it passes through two null points, that is when
/// its dual point is exterior. Only defined over ℚ.
pub fn is_interior_line(l: &ProjLine) -> Option<bool> {
    line_quad_form(l).signum().map(|s| s > 0)
}

pub fn dual_of_point(a: &ProjPoint) -> ProjLine {
    ProjLine::from_coords(a.coords().clone()).expect("nonzero")
}

pub fn dual_of_line(l: &ProjLine) -> ProjPoint {
    ProjPoint::from_coords(l.coords().clone()).expect("nonzero")
}

pub fn perp_points(a: &ProjPoint, b: &ProjPoint) -> bool {
    linalg::form(a.coords(), b.coords()).is_zero()
}

pub fn perp_lines(l: &ProjLine, m: &ProjLine) -> bool {
    linalg::form(l.coords(), m.coords()).is_zero()
}

/// The line through `a` perpendicular to `L`.
pub fn altitude_line(c: &Couple) -> Result<ProjLine> {
    c.check()?;
    join(&c.point, &dual_of_line(&c.line))
}

/// The point on `L` perpendicular to `a`.
pub fn altitude_point(c: &Couple) -> Result<ProjPoint> {
    c.check()?;
    meet(&dual_of_point(&c.point), &c.line)
}

pub fn parallel_line(c: &Couple) -> Result<ProjLine> {
    join(&c.point, &altitude_point(c)?)
}

pub fn parallel_point(c: &Couple) -> Result<ProjPoint> {
    meet(&dual_of_point(&c.point), &altitude_line(c)?)
}

/// Foot of the altitude from `a` on `L`.
pub fn base_point(c: &Couple) -> Result<ProjPoint> {
    meet(&altitude_line(c)?, &c.line)
}

pub fn base_line(c: &Couple) -> Result<ProjLine> {
    join(&altitude_point(c)?, &dual_of_line(&c.line))
}

/// Conjugate points `b1 = (a1a2)a1⊥` and `b2 = (a1a2)a2⊥` of a side.
pub fn conjugate_points(s: &Side) -> Result<(ProjPoint, ProjPoint)> {
    if s.is_nil() && s.is_null() {
        return Err(GeomError::NilNullSide);
    }
    let l = s.join();
    let b1 = meet(&l, &dual_of_point(&s.0))?;
    let b2 = meet(&l, &dual_of_point(&s.1))?;
    Ok((b1, b2))
}

pub fn conjugate_lines(v: &Vertex) -> Result<(ProjLine, ProjLine)> {
    let (b1, b2) = conjugate_points(&v.dual())?;
    Ok((dual_of_point(&b1), dual_of_point(&b2)))
}

/// The null points lying on `L`: two, one for a tangent, or none.
pub fn null_points_on(l: &ProjLine) -> Vec<ProjPoint> {
    let (p, q) = points_on(l);
    let (pc, qc) = (p.coords(), q.coords());
    // ⟨s·p + t·q, s·p + t·q⟩ = A s² + 2B st + C t².
    let a = linalg::form(pc, pc);
    let b = linalg::form(pc, qc);
    let c = linalg::form(qc, qc);
    let mut out: Vec<ProjPoint> = Vec::new();
    let mut push = |v: linalg::Vec3| {
        if let Ok(pt) = ProjPoint::from_coords(v) {
            if !out.contains(&pt) {
                out.push(pt);
            }
        }
    };
    if c.is_zero() {
        // s(A s + 2B t) = 0: the roots are q and 2B·p − A·q.
        push(qc.clone());
        push(linalg::combine(&(&b + &b), pc, &(-&a), qc));
        return out;
    }
    let disc = &(&b * &b) - &(&a * &c);
    let Some(r) = disc.sqrt() else {
        return out;
    };
    // t/s = (−B ± r)/C.
    for sign in [1i64, -1] {
        let t = &(-&b) + &r.scale(sign);
        push(linalg::combine(&c, pc, &t, qc));
    }
    out
}

/// Rational parametrization of the null circle.
pub fn null_point_from_param(ctx: FieldCtx, t: &ExtValue) -> ProjPoint {
    match t {
        ExtValue::Infinity => ProjPoint::from_ints(ctx, [-1, 0, 1]).unwrap(),
        ExtValue::Finite(t) => {
            let t2 = t.square();
            ProjPoint::new(&ctx.one() - &t2, t.scale(2), &ctx.one() + &t2)
                .expect("1 − t² and 1 + t² never both vanish in odd characteristic")
        }
    }
}

/// Matrix of `σ_a` acting on column vectors: `x ↦ 2⟨x,a⟩a − ⟨a,a⟩x`.
///
/// The (3,3) entry is `−(u² + v² + w²)`; with `+w²` in that slot the map
/// would not fix `a⊥` pointwise.
pub fn reflection_matrix(a: &ProjPoint) -> Result<Mat3> {
    let [u, v, w] = a.coords();
    let (uu, vv, ww) = (u.square(), v.square(), w.square());
    if (&(&uu + &vv) - &ww).is_zero() {
        return Err(GeomError::NullMirror);
    }
    let two = |x: &FieldElement, y: &FieldElement| (x * y).scale(2);
    Ok(Mat3([
        [&(&uu - &vv) + &ww, two(u, v), -two(u, w)],
        [two(u, v), &(&vv - &uu) + &ww, -two(v, w)],
        [two(u, w), two(v, w), -(&(&uu + &vv) + &ww)],
    ]))
}

/// Image of `b` under the reflection in the non-null point `a`.
pub fn reflect_point(b: &ProjPoint, a: &ProjPoint) -> Result<ProjPoint> {
    let m = reflection_matrix(a)?;
    ProjPoint::from_coords(m.apply(b.coords()))
}

/// Image of `M` under the reflection in `a`, by reflecting two of its points.
pub fn reflect_line(m: &ProjLine, a: &ProjPoint) -> Result<ProjLine> {
    let (p, q) = points_on(m);
    join(&reflect_point(&p, a)?, &reflect_point(&q, a)?)
}

/// Reflection of a null point `α` in `a`: the other null point on `αa`.
pub fn reflect_null_point(alpha: &ProjPoint, a: &ProjPoint) -> Result<ProjPoint> {
    if is_null_point(a) {
        return Err(GeomError::NullMirror);
    }
    if !is_null_point(alpha) {
        return Err(GeomError::HypothesisViolated("point is not null".into()));
    }
    let l = join(alpha, a)?;
    let pts = null_points_on(&l);
    Ok(pts.iter().find(|p| *p != alpha).unwrap_or(alpha).clone())
}

/// Reflection of `b` in `a` by the ruler construction through null points:
/// a secant through `b` meets the circle at `β1, β2`; their images give
/// `c = (ab)(γ1γ2)`. The secant is `join(b, null_point_from_param(t))`.
pub fn reflect_point_by_construction(b: &ProjPoint, a: &ProjPoint, t: &ExtValue) -> Result<ProjPoint> {
    let beta1 = null_point_from_param(b.ctx(), t);
    let secant = join(b, &beta1)?;
    let nulls = null_points_on(&secant);
    let beta2 = nulls
        .iter()
        .find(|p| **p != beta1)
        .ok_or(GeomError::DegenerateAux)?
        .clone();
    let g1 = reflect_null_point(&beta1, a)?;
    let g2 = reflect_null_point(&beta2, a)?;
    let ab = join(a, b).map_err(|_| GeomError::DegenerateAux)?;
    meet(&ab, &join(&g1, &g2).map_err(|_| GeomError::DegenerateAux)?)
        .map_err(|_| GeomError::DegenerateAux)
}

/// The polar of `a` by the complete-quadrangle construction: two secants
/// through `a` meet the circle at `α1, α2` and `α3, α4`; the diagonal points
/// `(α1α3)(α2α4)` and `(α1α4)(α2α3)` span `a⊥`.
pub fn polar_by_construction(a: &ProjPoint, t1: &ExtValue, t2: &ExtValue) -> Result<ProjLine> {
    let other = |alpha: &ProjPoint| -> Result<ProjPoint> {
        let l = join(a, alpha).map_err(|_| GeomError::DegenerateAux)?;
        null_points_on(&l)
            .into_iter()
            .find(|p| p != alpha)
            .ok_or(GeomError::DegenerateAux)
    };
    let a1 = null_point_from_param(a.ctx(), t1);
    let a3 = null_point_from_param(a.ctx(), t2);
    let a2 = other(&a1)?;
    let a4 = other(&a3)?;
    let aux = |r: Result<ProjPoint>| r.map_err(|_| GeomError::DegenerateAux);
    let j = |p: &ProjPoint, q: &ProjPoint| join(p, q).map_err(|_| GeomError::DegenerateAux);
    let d = aux(meet(&j(&a1, &a3)?, &j(&a2, &a4)?))?;
    let e = aux(meet(&j(&a1, &a4)?, &j(&a2, &a3)?))?;
    j(&d, &e)
}

fn check_midpoint_side(s: &Side) -> Result<()> {
    if s.is_nil() || s.is_null() {
        Err(GeomError::DegenerateSide)
    } else {
        Ok(())
    }
}

/// Midpoints of a side: the points `d` on `bc` with `σ_d(b) = c`.
///
/// They are `b ± λc` where `λ² = ⟨b,b⟩/⟨c,c⟩`, so they exist exactly when
/// that ratio is a square.
pub fn midpoints(s: &Side) -> Result<Option<(ProjPoint, ProjPoint)>> {
    check_midpoint_side(s)?;
    let (b, c) = (s.0.coords(), s.1.coords());
    let ratio = linalg::form(b, b).checked_div(&linalg::form(c, c))?;
    let Some(lambda) = ratio.sqrt() else {
        return Ok(None);
    };
    let one = s.0.ctx().one();
    let d = ProjPoint::from_coords(linalg::combine(&one, b, &lambda, c))?;
    let e = ProjPoint::from_coords(linalg::combine(&one, b, &(-&lambda), c))?;
    Ok(Some((d, e)))
}

/// Midpoints by the ruler construction: joins from `b` and `c` to
/// `a = (bc)⊥` are met by the null circle in `β1, β2` and `γ1, γ2`; the two
/// diagonal points of that quadrangle on `bc` are the midpoints.
///
/// Returns `None` when either join misses the circle. This can happen even
/// when midpoints exist, so it is an oracle for [`midpoints`], not a
/// replacement.
pub fn midpoints_by_construction(s: &Side) -> Result<Option<(ProjPoint, ProjPoint)>> {
    check_midpoint_side(s)?;
    let l = s.join();
    let a = dual_of_line(&l);
    let nb = null_points_on(&join(&s.0, &a)?);
    let nc = null_points_on(&join(&s.1, &a)?);
    if nb.len() != 2 || nc.len() != 2 {
        return Ok(None);
    }
    let j = |p: &ProjPoint, q: &ProjPoint| join(p, q);
    let x = meet(&j(&nb[0], &nc[0])?, &j(&nb[1], &nc[1])?)?;
    let y = meet(&j(&nb[0], &nc[1])?, &j(&nb[1], &nc[0])?)?;
    Ok(Some((x, y)))
}

pub fn midlines(s: &Side) -> Result<Option<(ProjLine, ProjLine)>> {
    Ok(midpoints(s)?.map(|(d, e)| (dual_of_point(&d), dual_of_point(&e))))
}

pub fn bilines(v: &Vertex) -> Result<Option<(ProjLine, ProjLine)>> {
    midlines(&v.dual()).map_err(|e| match e {
        GeomError::DegenerateSide => GeomError::DegenerateVertex,
        other => other,
    })
}

pub fn bipoints(v: &Vertex) -> Result<Option<(ProjPoint, ProjPoint)>> {
    midpoints(&v.dual()).map_err(|e| match e {
        GeomError::DegenerateSide => GeomError::DegenerateVertex,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::incident;

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
    fn duals_and_perpendicularity() {
        assert_eq!(dual_of_point(&pt([0, 0, 1])), ln([0, 0, 1]));
        let alpha = pt([1, 0, 1]);
        let t = dual_of_point(&alpha);
        assert_eq!(t, ln([1, 0, 1]));
        assert!(incident(&alpha, &t) && is_null_line(&t));
        assert_eq!(dual_of_line(&dual_of_point(&pt([2, 3, 7]))), pt([2, 3, 7]));
        assert!(perp_points(&pt([1, 0, 0]), &pt([0, 1, 0])));
        assert!(perp_lines(&ln([1, 0, 0]), &ln([0, 1, 0])));
        assert!(!perp_points(&pt([2, 3, 7]), &pt([2, 3, 7])));
    }

    #[test]
    fn couple_constructions() {
        let c = Couple::new(pt([0, 0, 1]), ln([0, 1, 1]));
        assert_eq!(altitude_line(&c).unwrap(), ln([1, 0, 0]));
        let dual = Couple::new(pt([2, 1, 3]), ln([2, 1, 3]));
        assert_eq!(altitude_line(&dual), Err(GeomError::DualCouple));
        assert_eq!(parallel_point(&dual), Err(GeomError::DualCouple));
        let c = Couple::new(pt([1, 2, 5]), ln([3, -1, 4]));
        let n = altitude_line(&c).unwrap();
        assert_eq!(altitude_point(&c).unwrap(), dual_of_line(&n));
        let p = parallel_line(&c).unwrap();
        assert!(incident(&c.point, &p));
        assert!(perp_lines(&p, &n));
        assert_eq!(parallel_point(&c).unwrap(), dual_of_line(&p));
        let b = base_point(&c).unwrap();
        assert!(incident(&b, &c.line) && incident(&b, &n));
        assert_eq!(base_line(&c).unwrap(), dual_of_point(&b));
    }

    #[test]
    fn conjugates() {
        let s = Side::new(pt([0, 0, 1]), pt([1, 0, 2])).unwrap();
        let (b1, b2) = conjugate_points(&s).unwrap();
        assert_eq!(b1, pt([1, 0, 0]));
        assert!(perp_points(&b2, &s.1));
        let back = conjugate_points(&Side::new(b1, b2).unwrap()).unwrap();
        assert_eq!(back, (s.0.clone(), s.1.clone()));
        // Right side: a1 ⊥ a2, conjugates coincide with the side.
        let r = Side::new(pt([1, 0, 0]), pt([0, 1, 0])).unwrap();
        assert_eq!(conjugate_points(&r).unwrap(), (r.1.clone(), r.0.clone()));
        let nil_null = Side::new(pt([1, 0, 1]), pt([1, 1, 1])).unwrap();
        assert_eq!(conjugate_points(&nil_null), Err(GeomError::NilNullSide));
    }

    #[test]
    fn null_points_on_lines() {
        let mut xs = null_points_on(&ln([0, 1, 0]));
        xs.sort_by_key(|p| p.to_string());
        assert_eq!(xs, vec![pt([-1, 0, 1]), pt([1, 0, 1])]);
        assert_eq!(null_points_on(&ln([1, 0, 1])), vec![pt([1, 0, 1])]);
        assert!(null_points_on(&ln([1, 0, 3])).is_empty());
        // A line whose second basis point is already null.
        let l = join(&pt([0, 1, 1]), &pt([5, 0, 1])).unwrap();
        let ns = null_points_on(&l);
        assert_eq!(ns.len(), 2);
        assert!(ns.iter().all(|p| is_null_point(p) && incident(p, &l)));
    }

    #[test]
    fn null_parametrization() {
        let z = ExtValue::Finite(q().zero());
        assert_eq!(null_point_from_param(q(), &z), pt([1, 0, 1]));
        assert_eq!(null_point_from_param(q(), &ExtValue::Finite(q().one())), pt([0, 1, 1]));
        assert_eq!(null_point_from_param(q(), &ExtValue::Infinity), pt([-1, 0, 1]));
    }

    #[test]
    fn reflection_examples() {
        let o = pt([0, 0, 1]);
        assert_eq!(reflect_point(&pt([2, 3, 7]), &o).unwrap(), pt([2, 3, -7]));
        let a = pt([1, 0, 0]);
        // σ_a fixes a and every point of a⊥.
        assert_eq!(reflect_point(&a, &a).unwrap(), a);
        assert_eq!(reflect_point(&pt([0, 3, 5]), &a).unwrap(), pt([0, 3, 5]));
        assert_eq!(reflect_point(&pt([0, 1, 1]), &pt([1, 0, 1])), Err(GeomError::NullMirror));
        let a = pt([1, 2, 7]);
        let alpha = pt([3, 4, 5]);
        assert_eq!(
            reflect_point(&alpha, &a).unwrap(),
            reflect_null_point(&alpha, &a).unwrap()
        );
        let b = pt([2, -1, 9]);
        let by_ruler = reflect_point_by_construction(&b, &a, &ExtValue::Finite(q().int(2))).unwrap();
        assert_eq!(reflect_point(&b, &a).unwrap(), by_ruler);
    }

    #[test]
    fn midpoint_examples() {
        let s = Side::new(pt([0, 0, 1]), pt([3, 0, 5])).unwrap();
        let (d, e) = midpoints(&s).unwrap().unwrap();
        assert!(perp_points(&d, &e));
        for m in [&d, &e] {
            assert_eq!(reflect_point(&s.0, m).unwrap(), s.1);
        }
        let absent = Side::new(pt([0, 0, 1]), pt([1, 0, 2])).unwrap();
        assert_eq!(midpoints(&absent).unwrap(), None);
        let nil = Side::new(pt([1, 0, 1]), pt([0, 0, 1])).unwrap();
        assert_eq!(midpoints(&nil), Err(GeomError::DegenerateSide));
    }

    #[test]
    fn midpoints_exist_without_ruler_construction() {
        let s = Side::new(pt([1, 0, 2]), pt([0, 1, 2])).unwrap();
        let (d, e) = midpoints(&s).unwrap().unwrap();
        let mut got = [d, e];
        got.sort_by_key(|p| p.to_string());
        assert_eq!(got, [pt([1, -1, 0]), pt([1, 1, 4])]);
        assert_eq!(midpoints_by_construction(&s).unwrap(), None);
    }

    #[test]
    fn polar_construction_example() {
        let a = pt([3, 1, 2]);
        let t1 = ExtValue::Finite(q().int(3));
        let t2 = ExtValue::Finite(q().ratio(-1, 2).unwrap());
        assert_eq!(polar_by_construction(&a, &t1, &t2).unwrap(), dual_of_point(&a));
    }
}
