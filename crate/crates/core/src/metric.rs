//! Quadrance, spread, quadrea and the basic trigonometric laws.

use std::fmt;
use std::str::FromStr;

use crate::duality::{conjugate_lines, conjugate_points, dual_of_line, is_null_line, is_null_point, Side, Vertex};
use crate::error::{GeomError, Result};
use crate::field::FieldElement;
use crate::linalg::{self, Vec3};
use crate::projective::{collinear, cross_ratio, cross_ratio_lines, join, ExtValue, ProjLine, ProjPoint};

fn closed_form(a: &Vec3, b: &Vec3) -> Result<FieldElement> {
    let aa = linalg::form(a, a);
    let bb = linalg::form(b, b);
    if aa.is_zero() || bb.is_zero() {
        return Err(GeomError::NullArgument);
    }
    let ab = linalg::form(a, b);
    Ok(&aa.ctx().one() - &ab.square().checked_div(&(aa * bb))?)
}

/// `q(a1,a2) = 1 − ⟨a1,a2⟩² / (⟨a1,a1⟩⟨a2,a2⟩)`.
pub fn quadrance(a1: &ProjPoint, a2: &ProjPoint) -> Result<FieldElement> {
    closed_form(a1.coords(), a2.coords())
}

/// `S(L1,L2)`, the same expression in line coordinates.
pub fn spread(l1: &ProjLine, l2: &ProjLine) -> Result<FieldElement> {
    closed_form(l1.coords(), l2.coords())
}

fn finite(v: ExtValue) -> Result<FieldElement> {
    match v {
        ExtValue::Finite(x) => Ok(x),
        ExtValue::Infinity => Err(GeomError::DegenerateQuadruple),
    }
}

/// Quadrance as the cross-ratio `(a1,b2:a2,b1)` with the conjugate points
/// `b1, b2` of the side.
pub fn quadrance_cr(a1: &ProjPoint, a2: &ProjPoint) -> Result<FieldElement> {
    if is_null_point(a1) || is_null_point(a2) {
        return Err(GeomError::NullArgument);
    }
    let side = Side::new(a1.clone(), a2.clone()).map_err(|_| GeomError::DegenerateQuadruple)?;
    let (b1, b2) = conjugate_points(&side)?;
    finite(cross_ratio(a1, &b2, a2, &b1)?)
}

/// Spread as the cross-ratio `(L1,M2:L2,M1)` with the conjugate lines.
pub fn spread_cr(l1: &ProjLine, l2: &ProjLine) -> Result<FieldElement> {
    if is_null_line(l1) || is_null_line(l2) {
        return Err(GeomError::NullArgument);
    }
    let v = Vertex::new(l1.clone(), l2.clone()).map_err(|_| GeomError::DegenerateQuadruple)?;
    let (m1, m2) = conjugate_lines(&v)?;
    finite(cross_ratio_lines(l1, &m2, l2, &m1)?)
}

/// `S(L1,L2) − q(L1⊥,L2⊥)`.
pub fn spread_equals_dual_quadrance(l1: &ProjLine, l2: &ProjLine) -> Result<Residual> {
    let s = spread(l1, l2)?;
    let q = quadrance(&dual_of_line(l1), &dual_of_line(l2))?;
    Ok(Residual { law: "spread_equals_dual_quadrance", value: s - q })
}

/// A law identifier with the value `LHS − RHS`; zero means the law holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub law: &'static str,
    pub value: FieldElement,
}

impl Residual {
    pub fn holds(&self) -> bool {
        self.value.is_zero()
    }
}

/// Quadrances and spreads of a triangle, with `q1 = q(a2,a3)` opposite `a1`
/// and `S1 = S(L2,L3)` at `a1`, where `L1 = a2a3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleMetrics {
    pub q: [FieldElement; 3],
    pub s: [FieldElement; 3],
    pub quadrea: FieldElement,
}

/// The lines `L1 = a2a3`, `L2 = a1a3`, `L3 = a1a2`.
pub fn triangle_lines(a: [&ProjPoint; 3]) -> Result<[ProjLine; 3]> {
    if collinear(a[0], a[1], a[2]) {
        return Err(GeomError::CollinearPoints);
    }
    Ok([join(a[1], a[2])?, join(a[0], a[2])?, join(a[0], a[1])?])
}

pub fn triangle_metrics(a1: &ProjPoint, a2: &ProjPoint, a3: &ProjPoint) -> Result<TriangleMetrics> {
    let [l1, l2, l3] = triangle_lines([a1, a2, a3])?;
    let q = [quadrance(a2, a3)?, quadrance(a1, a3)?, quadrance(a1, a2)?];
    let s = [spread(&l2, &l3)?, spread(&l1, &l3)?, spread(&l1, &l2)?];
    let quadrea = &(&s[0] * &q[1]) * &q[2];
    Ok(TriangleMetrics { q, s, quadrea })
}

impl TriangleMetrics {
    /// The three products `S1q2q3`, `S2q1q3`, `S3q1q2`.
    pub fn quadrea_products(&self) -> [FieldElement; 3] {
        let (q, s) = (&self.q, &self.s);
        [
            &(&s[0] * &q[1]) * &q[2],
            &(&s[1] * &q[0]) * &q[2],
            &(&s[2] * &q[0]) * &q[1],
        ]
    }

    /// The metrics of the dual trilateral: quadrances and spreads trade places.
    pub fn dual(&self) -> TriangleMetrics {
        let quadrea = &(&self.q[0] * &self.s[1]) * &self.s[2];
        TriangleMetrics { q: self.s.clone(), s: self.q.clone(), quadrea }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    TripleQuad,
    TripleSpread,
    Pythagoras,
    PythagorasDual,
    SpreadLaw,
    SpreadDual,
    CrossLaw,
    CrossDual,
}

impl Law {
    pub const ALL: [Law; 8] = [
        Law::TripleQuad,
        Law::TripleSpread,
        Law::Pythagoras,
        Law::PythagorasDual,
        Law::SpreadLaw,
        Law::SpreadDual,
        Law::CrossLaw,
        Law::CrossDual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::TripleQuad => "triple_quad",
            Law::TripleSpread => "triple_spread",
            Law::Pythagoras => "pythagoras",
            Law::PythagorasDual => "pythagoras_dual",
            Law::SpreadLaw => "spread_law",
            Law::SpreadDual => "spread_dual",
            Law::CrossLaw => "cross_law",
            Law::CrossDual => "cross_dual",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        Law::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| GeomError::UnknownTheorem(s.to_string()))
    }
}

/// What a law is evaluated on.
#[derive(Clone, Debug)]
pub enum LawInput {
    /// `q1, q2, q3` of three collinear points.
    Quadrances([FieldElement; 3]),
    /// `S1, S2, S3` of three concurrent lines.
    Spreads([FieldElement; 3]),
    Triangle(TriangleMetrics),
}

/// `(x1+x2+x3)² − 2(x1²+x2²+x3²) − 4x1x2x3`.
pub fn triple_residual(x: &[FieldElement; 3]) -> FieldElement {
    let sum = &(&x[0] + &x[1]) + &x[2];
    let squares = &(&x[0].square() + &x[1].square()) + &x[2].square();
    let product = &(&x[0] * &x[1]) * &x[2];
    &(&sum.square() - &squares.scale(2)) - &product.scale(4)
}

/// `(x1x2y3 − (x1+x2+x3) + 2)² − 4(1−x1)(1−x2)(1−x3)`.
fn cross_residual(x: &[FieldElement; 3], y3: &FieldElement) -> FieldElement {
    let one = x[0].ctx().one();
    let two = one.scale(2);
    let sum = &(&x[0] + &x[1]) + &x[2];
    let lhs = (&(&(&(&x[0] * &x[1]) * y3) - &sum) + &two).square();
    let rhs = (&(&(&one - &x[0]) * &(&one - &x[1])) * &(&one - &x[2])).scale(4);
    lhs - rhs
}

/// `x3 − (x1 + x2 − x1x2)`.
fn pythagoras_residual(x: &[FieldElement; 3]) -> FieldElement {
    &x[2] - &(&(&x[0] + &x[1]) - &(&x[0] * &x[1]))
}

/// First nonzero of `S1q2 − S2q1` and `S2q3 − S3q2`.
fn ratio_residual(num: &[FieldElement; 3], den: &[FieldElement; 3]) -> FieldElement {
    let r1 = &(&num[0] * &den[1]) - &(&num[1] * &den[0]);
    if !r1.is_zero() {
        return r1;
    }
    &(&num[1] * &den[2]) - &(&num[2] * &den[1])
}

pub fn law_residual(law: Law, input: &LawInput) -> Result<Residual> {
    let wrong = || GeomError::HypothesisViolated(format!("{law} does not apply to this input"));
    let value = match (law, input) {
        (Law::TripleQuad, LawInput::Quadrances(q)) => triple_residual(q),
        (Law::TripleSpread, LawInput::Spreads(s)) => triple_residual(s),
        (Law::Pythagoras, LawInput::Triangle(m)) => {
            if !m.s[2].is_one() {
                return Err(GeomError::HypothesisViolated("S3 ≠ 1".into()));
            }
            pythagoras_residual(&m.q)
        }
        (Law::PythagorasDual, LawInput::Triangle(m)) => {
            if !m.q[2].is_one() {
                return Err(GeomError::HypothesisViolated("q3 ≠ 1".into()));
            }
            pythagoras_residual(&m.s)
        }
        (Law::SpreadLaw, LawInput::Triangle(m)) => ratio_residual(&m.s, &m.q),
        (Law::SpreadDual, LawInput::Triangle(m)) => ratio_residual(&m.q, &m.s),
        (Law::CrossLaw, LawInput::Triangle(m)) => cross_residual(&m.q, &m.s[2]),
        (Law::CrossDual, LawInput::Triangle(m)) => cross_residual(&m.s, &m.q[2]),
        _ => return Err(wrong()),
    };
    Ok(Residual { law: law.name(), value })
}

/// `S1q3 − q1` and `S2q3 − q2` for a right triangle with `S3 = 1`.
pub fn thales_ratios(m: &TriangleMetrics) -> Result<(Residual, Residual)> {
    if !m.s[2].is_one() {
        return Err(GeomError::HypothesisViolated("S3 ≠ 1".into()));
    }
    if m.q[2].is_zero() {
        return Err(GeomError::HypothesisViolated("q3 = 0".into()));
    }
    let r = |i: usize| Residual { law: "thales", value: &(&m.s[i] * &m.q[2]) - &m.q[i] };
    Ok((r(0), r(1)))
}

/// `q = (S − 1)/S`.
pub fn right_parallax(s: &FieldElement) -> Result<FieldElement> {
    if s.is_zero() {
        return Err(GeomError::ZeroSpread);
    }
    Ok((s - &s.ctx().one()).checked_div(s)?)
}

/// One of the five measurements of a right triangle with `S3 = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Napier {
    S1,
    S2,
    Q1,
    Q2,
    Q3,
}

impl Napier {
    fn swapped(self) -> Napier {
        match self {
            Napier::S1 => Napier::S2,
            Napier::S2 => Napier::S1,
            Napier::Q1 => Napier::Q2,
            Napier::Q2 => Napier::Q1,
            Napier::Q3 => Napier::Q3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NapierSolution {
    pub s1: FieldElement,
    pub s2: FieldElement,
    pub q1: FieldElement,
    pub q2: FieldElement,
    pub q3: FieldElement,
}

impl NapierSolution {
    fn swapped(self) -> NapierSolution {
        NapierSolution { s1: self.s2, s2: self.s1, q1: self.q2, q2: self.q1, q3: self.q3 }
    }

    /// Residuals of `S1q3 = q1`, `S2q3 = q2` and Pythagoras.
    pub fn residuals(&self) -> [FieldElement; 3] {
        [
            &(&self.s1 * &self.q3) - &self.q1,
            &(&self.s2 * &self.q3) - &self.q2,
            &self.q3 - &(&(&self.q1 + &self.q2) - &(&self.q1 * &self.q2)),
        ]
    }
}

fn div(n: FieldElement, d: &FieldElement) -> Result<FieldElement> {
    if d.is_zero() {
        return Err(GeomError::DegenerateDenominator);
    }
    Ok(n.checked_div(d)?)
}

/// `q2 = (q3 − q1)/(1 − q1)`, from `1 − q3 = (1 − q1)(1 − q2)`.
fn other_leg(q1: &FieldElement, q3: &FieldElement) -> Result<FieldElement> {
    div(q3 - q1, &(&q1.ctx().one() - q1))
}

/// Solves a right triangle from two of `S1, S2, q1, q2, q3`.
///
/// The ten cases reduce by the `1 ↔ 2` symmetry to six:
/// * `(q1,q2)`: Pythagoras gives `q3`; needs `q3 ≠ 0`.
/// * `(q1,q3)`: `q2 = (q3−q1)/(1−q1)`; needs `q1 ≠ 1`, `q3 ≠ 0`.
/// * `(S1,q1)`: `q3 = q1/S1`; needs `S1 ≠ 0`, then as `(q1,q3)`.
/// * `(S1,q3)`: `q1 = S1q3`, then as `(q1,q3)`.
/// * `(S1,q2)`: `q3 = q2/(1 − S1 + S1q2)` and `S2 = 1 − S1 + S1q2`; needs `q2 ≠ 0`.
/// * `(S1,S2)`: `q3 = (S1 + S2 − 1)/(S1S2)`; needs `S1S2 ≠ 0`.
pub fn napier_solve(known: [(Napier, FieldElement); 2]) -> Result<NapierSolution> {
    let [(k1, v1), (k2, v2)] = known;
    if k1 == k2 {
        return Err(GeomError::Inconsistent);
    }
    use Napier::*;
    let swap = matches!(
        (k1, k2),
        (Q2, Q3) | (Q3, Q2) | (S2, Q2) | (Q2, S2) | (S2, Q3) | (Q3, S2) | (S2, Q1) | (Q1, S2)
    );
    let (k1, k2) = if swap { (k1.swapped(), k2.swapped()) } else { (k1, k2) };
    let get = |k: Napier| if k == k1 { v1.clone() } else { v2.clone() };
    let ctx = v1.ctx();
    let one = ctx.one();
    let from_q1_q3 = |q1: FieldElement, q3: FieldElement| -> Result<NapierSolution> {
        let q2 = other_leg(&q1, &q3)?;
        let s1 = div(q1.clone(), &q3)?;
        let s2 = div(q2.clone(), &q3)?;
        Ok(NapierSolution { s1, s2, q1, q2, q3 })
    };
    let mut key = [k1, k2];
    key.sort_by_key(|k| *k as u8);
    let sol = match key {
        [Q1, Q2] => {
            let (q1, q2) = (get(Q1), get(Q2));
            let q3 = &(&q1 + &q2) - &(&q1 * &q2);
            let s1 = div(q1.clone(), &q3)?;
            let s2 = div(q2.clone(), &q3)?;
            NapierSolution { s1, s2, q1, q2, q3 }
        }
        [Q1, Q3] => from_q1_q3(get(Q1), get(Q3))?,
        [S1, Q1] => {
            let (s1, q1) = (get(S1), get(Q1));
            if s1.is_zero() && !q1.is_zero() {
                return Err(GeomError::Inconsistent);
            }
            let q3 = div(q1.clone(), &s1)?;
            from_q1_q3(q1, q3)?
        }
        [S1, Q3] => {
            let (s1, q3) = (get(S1), get(Q3));
            from_q1_q3(&s1 * &q3, q3)?
        }
        [S1, Q2] => {
            let (s1, q2) = (get(S1), get(Q2));
            if q2.is_zero() {
                return Err(GeomError::DegenerateDenominator);
            }
            let s2 = &(&one - &s1) + &(&s1 * &q2);
            let q3 = div(q2.clone(), &s2)?;
            let q1 = &s1 * &q3;
            NapierSolution { s1, s2, q1, q2, q3 }
        }
        [S1, S2] => {
            let (s1, s2) = (get(S1), get(S2));
            let q3 = div(&(&s1 + &s2) - &one, &(&s1 * &s2))?;
            let q1 = &s1 * &q3;
            let q2 = &s2 * &q3;
            NapierSolution { s1, s2, q1, q2, q3 }
        }
        _ => unreachable!("every pair of distinct knowns is covered"),
    };
    if sol.residuals().iter().any(|r| !r.is_zero()) {
        return Err(GeomError::Inconsistent);
    }
    Ok(if swap { sol.swapped() } else { sol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn q() -> FieldCtx {
        FieldCtx::rational()
    }

    fn r(n: i64, d: i64) -> FieldElement {
        q().ratio(n, d).unwrap()
    }

    fn pt(v: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(q(), v).unwrap()
    }

    fn ln(v: [i64; 3]) -> ProjLine {
        ProjLine::from_ints(q(), v).unwrap()
    }

    #[test]
    fn quadrance_examples() {
        let a = pt([2, 3, 7]);
        assert!(quadrance(&a, &a).unwrap().is_zero());
        assert_eq!(quadrance(&pt([0, 0, 1]), &pt([1, 0, 2])).unwrap(), r(-1, 3));
        assert_eq!(quadrance(&pt([2, 0, 1]), &pt([0, 0, 1])).unwrap(), r(4, 3));
        assert_eq!(quadrance(&pt([1, 0, 1]), &a), Err(GeomError::NullArgument));
        // Both on the tangent x = z.
        assert!(quadrance(&pt([1, 1, 1]), &pt([1, 2, 1])).unwrap().is_zero());
    }

    #[test]
    fn spread_examples() {
        assert!(spread(&ln([1, 0, 0]), &ln([0, 1, 0])).unwrap().is_one());
        assert!(spread(&ln([1, 2, 5]), &ln([1, 2, 5])).unwrap().is_zero());
        assert_eq!(spread(&ln([1, 1, 1]), &ln([-1, -1, 1])).unwrap(), q().int(-8));
    }

    #[test]
    fn cross_ratio_routes() {
        assert_eq!(quadrance_cr(&pt([0, 0, 1]), &pt([1, 0, 2])).unwrap(), r(-1, 3));
        assert!(spread_cr(&ln([1, 0, 0]), &ln([0, 1, 0])).unwrap().is_one());
        let (a, b) = (pt([1, 1, 1]), pt([1, 2, 1]));
        assert!(quadrance_cr(&a, &b).unwrap().is_zero());
        let (l, m) = (ln([3, -1, 4]), ln([1, 5, 2]));
        assert_eq!(spread_cr(&l, &m).unwrap(), spread(&l, &m).unwrap());
        assert!(spread_equals_dual_quadrance(&ln([1, 0, 0]), &ln([0, 1, 0])).unwrap().holds());
    }

    #[test]
    fn triple_quad_witnesses() {
        let z = [q().zero(), q().zero(), q().zero()];
        assert!(law_residual(Law::TripleQuad, &LawInput::Quadrances(z)).unwrap().holds());
        let v = [q().int(1), q().int(1), q().int(4)];
        assert_eq!(
            law_residual(Law::TripleQuad, &LawInput::Quadrances(v)).unwrap().value,
            q().int(-16)
        );
    }

    #[test]
    fn triangle_metric_example() {
        let m = triangle_metrics(&pt([0, 0, 1]), &pt([1, 0, 3]), &pt([0, 1, 3])).unwrap();
        let [p1, p2, p3] = m.quadrea_products();
        assert!(p1 == p2 && p2 == p3);
        assert_eq!(m.q[1], m.q[2]);
        assert_eq!(m.s[1], m.s[2]);
        assert_eq!(m.s[0].signum(), Some(1));
        assert_eq!(m.quadrea.signum(), Some(1));
        // Right angle at the center.
        assert!(m.s[0].is_one());
        for law in [Law::SpreadLaw, Law::SpreadDual, Law::CrossLaw, Law::CrossDual] {
            assert!(law_residual(law, &LawInput::Triangle(m.clone())).unwrap().holds(), "{law}");
        }
        assert!(matches!(
            law_residual(Law::Pythagoras, &LawInput::Triangle(m.clone())),
            Err(GeomError::HypothesisViolated(_))
        ));
        assert_eq!(
            triangle_metrics(&pt([0, 0, 1]), &pt([1, 0, 3]), &pt([2, 0, 3])),
            Err(GeomError::CollinearPoints)
        );
    }

    #[test]
    fn parallax_examples() {
        assert!(right_parallax(&q().one()).unwrap().is_zero());
        assert_eq!(right_parallax(&q().int(2)).unwrap(), r(1, 2));
        assert_eq!(right_parallax(&q().zero()), Err(GeomError::ZeroSpread));
    }

    #[test]
    fn napier_examples() {
        let half = r(1, 2);
        let sol = napier_solve([(Napier::Q1, half.clone()), (Napier::Q2, half)]).unwrap();
        assert_eq!(sol.q3, r(3, 4));
        assert_eq!(sol.s1, r(2, 3));
        assert_eq!(sol.s2, r(2, 3));
        let back = napier_solve([(Napier::S1, r(2, 3)), (Napier::S2, r(2, 3))]).unwrap();
        assert_eq!(back.q3, r(3, 4));
        assert_eq!(
            napier_solve([(Napier::Q1, q().one()), (Napier::Q3, r(1, 2))]),
            Err(GeomError::DegenerateDenominator)
        );
        assert_eq!(
            napier_solve([(Napier::Q1, q().one()), (Napier::Q1, q().one())]),
            Err(GeomError::Inconsistent)
        );
    }

    #[test]
    fn napier_all_ten_cases_round_trip() {
        let full = napier_solve([(Napier::Q1, r(1, 3)), (Napier::Q2, r(-2, 5))]).unwrap();
        let all = [
            (Napier::S1, full.s1.clone()),
            (Napier::S2, full.s2.clone()),
            (Napier::Q1, full.q1.clone()),
            (Napier::Q2, full.q2.clone()),
            (Napier::Q3, full.q3.clone()),
        ];
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    let got = napier_solve([all[i].clone(), all[j].clone()]).unwrap();
                    assert_eq!(got, full, "{:?} {:?}", all[i].0, all[j].0);
                }
            }
        }
    }
}
