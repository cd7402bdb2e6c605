//! Conics as symmetric matrices, evaluated on homogeneous point coordinates.

use crate::error::{GeomError, Result};
use crate::field::FieldElement;
use crate::linalg::{self, Mat3, Vec3};
use crate::projective::{points_on, ProjLine, ProjPoint};

/// The conic `xᵀ M x = 0` for a symmetric `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conic(pub Mat3);

impl Conic {
    pub fn bilinear(&self, u: &Vec3, v: &Vec3) -> FieldElement {
        let mv = self.0.apply(v);
        &(&(&u[0] * &mv[0]) + &(&u[1] * &mv[1])) + &(&u[2] * &mv[2])
    }

    pub fn eval(&self, p: &ProjPoint) -> FieldElement {
        self.bilinear(p.coords(), p.coords())
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// Coefficients `(A, B, C, D, E, F)` of
    /// `A x² + B y² + C z² + D xy + E xz + F yz`.
    pub fn coefficients(&self) -> [FieldElement; 6] {
        let m = &self.0 .0;
        [
            m[0][0].clone(),
            m[1][1].clone(),
            m[2][2].clone(),
            m[0][1].scale(2),
            m[0][2].scale(2),
            m[1][2].scale(2),
        ]
    }

    /// The polar line of `p`; the tangent when `p` lies on the conic.
    pub fn polar(&self, p: &ProjPoint) -> Result<ProjLine> {
        ProjLine::from_coords(linalg::flip_z(&self.0.apply(p.coords())))
    }

    /// Points of the conic on `l`. `None` when the whole line lies on it.
    pub fn meet_line(&self, l: &ProjLine) -> Option<Vec<ProjPoint>> {
        let (p, q) = points_on(l);
        let (pc, qc) = (p.coords(), q.coords());
        let a = self.bilinear(pc, pc);
        let b = self.bilinear(pc, qc);
        let c = self.bilinear(qc, qc);
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return None;
        }
        let mut out: Vec<ProjPoint> = Vec::new();
        let mut push = |v: Vec3| {
            if let Ok(pt) = ProjPoint::from_coords(v) {
                if !out.contains(&pt) {
                    out.push(pt);
                }
            }
        };
        if c.is_zero() {
            push(qc.clone());
            push(linalg::combine(&b.scale(2), pc, &(-&a), qc));
            return Some(out);
        }
        if let Some(r) = (&b.square() - &(&a * &c)).sqrt() {
            for sign in [1i64, -1] {
                push(linalg::combine(&c, pc, &(&(-&b) + &r.scale(sign)), qc));
            }
        }
        Some(out)
    }

    /// `x ↦ Hx` pushes the conic forward to `Mᴴ = H⁻ᵀ M H⁻¹`, up to scale.
    pub fn pushforward(&self, h: &Mat3) -> Conic {
        let inv = h.adjugate();
        Conic(inv.transpose().mul(&self.0).mul(&inv))
    }
}

/// The diagonal matrix `J = diag(1, 1, −1)` of the null circle.
pub fn null_circle(ctx: crate::field::FieldCtx) -> Conic {
    let mut m = Mat3::identity(ctx);
    m.0[2][2] = -&m.0[2][2];
    Conic(m)
}

/// `(Ja)(Ja)ᵀ − (1−k)⟨a,a⟩J`: the points `x` with `q(x,a) = k`, after
/// clearing the quadrance denominator.
pub fn circle_conic(a: &ProjPoint, k: &FieldElement) -> Result<Conic> {
    let aa = linalg::form(a.coords(), a.coords());
    if aa.is_zero() {
        return Err(GeomError::NullCenter);
    }
    let ja = linalg::flip_z(a.coords());
    let s = &(&k.ctx().one() - k) * &aa;
    let j = null_circle(k.ctx()).0;
    let mut m = outer(&ja, &ja);
    for i in 0..3 {
        for c in 0..3 {
            m.0[i][c] = &m.0[i][c] - &(&s * &j.0[i][c]);
        }
    }
    Ok(Conic(m))
}

pub fn outer(u: &Vec3, v: &Vec3) -> Mat3 {
    Mat3([
        [&u[0] * &v[0], &u[0] * &v[1], &u[0] * &v[2]],
        [&u[1] * &v[0], &u[1] * &v[1], &u[1] * &v[2]],
        [&u[2] * &v[0], &u[2] * &v[1], &u[2] * &v[2]],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::metric::quadrance;

    fn pt(v: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(FieldCtx::rational(), v).unwrap()
    }

    #[test]
    fn circle_membership_matches_quadrance() {
        let q = FieldCtx::rational();
        let a = pt([1, 2, 5]);
        let x = pt([3, -1, 7]);
        let k = quadrance(&x, &a).unwrap();
        let c = circle_conic(&a, &k).unwrap();
        assert!(c.contains(&x));
        assert!(!c.contains(&pt([0, 0, 1])));
        // k = 0: only a itself among nearby non-null points.
        let c0 = circle_conic(&a, &q.zero()).unwrap();
        assert!(c0.contains(&a));
        assert!(!c0.contains(&x));
        assert_eq!(circle_conic(&pt([1, 0, 1]), &k), Err(GeomError::NullCenter));
    }

    #[test]
    fn unit_circle_is_doubled_dual_line() {
        let q = FieldCtx::rational();
        let a = pt([1, 2, 5]);
        let c = circle_conic(&a, &q.one()).unwrap();
        let ja = linalg::flip_z(a.coords());
        assert_eq!(c.0, outer(&ja, &ja));
        // A point on a⊥ lies on it.
        assert!(c.contains(&pt([2, -1, 0])));
    }

    #[test]
    fn exterior_zero_circle_is_two_null_lines() {
        let q = FieldCtx::rational();
        // [5:0:3] is exterior; its tangents touch at [3/5, ±4/5].
        let a = pt([5, 0, 3]);
        let c = circle_conic(&a, &q.zero()).unwrap();
        for touch in [pt([3, 4, 5]), pt([3, -4, 5])] {
            let tangent = crate::duality::dual_of_point(&touch);
            assert_eq!(c.meet_line(&tangent), None);
        }
    }

    #[test]
    fn null_circle_meet_agrees_with_duality() {
        let q = FieldCtx::rational();
        let l = ProjLine::from_ints(q, [0, 1, 0]).unwrap();
        let mut got = null_circle(q).meet_line(&l).unwrap();
        got.sort_by_key(|p| p.to_string());
        let mut want = crate::duality::null_points_on(&l);
        want.sort_by_key(|p| p.to_string());
        assert_eq!(got, want);
    }
}
