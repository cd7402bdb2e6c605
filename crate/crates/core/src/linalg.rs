//! Small exact 3-vector and 3×3 matrix helpers.

use crate::field::{FieldCtx, FieldElement};

pub type Vec3 = [FieldElement; 3];

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// The hyperbolic bilinear form x₁x₂ + y₁y₂ − z₁z₂.
pub fn form(a: &Vec3, b: &Vec3) -> FieldElement {
    &a[0] * &b[0] + &a[1] * &b[1] - &a[2] * &b[2]
}

pub fn det(a: &Vec3, b: &Vec3, c: &Vec3) -> FieldElement {
    let k = cross(b, c);
    &a[0] * &k[0] + &a[1] * &k[1] + &a[2] * &k[2]
}

pub fn is_zero(v: &Vec3) -> bool {
    v.iter().all(FieldElement::is_zero)
}

pub fn scale(v: &Vec3, k: &FieldElement) -> Vec3 {
    [&v[0] * k, &v[1] * k, &v[2] * k]
}

pub fn add(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

/// `s·a + t·b`.
pub fn combine(s: &FieldElement, a: &Vec3, t: &FieldElement, b: &Vec3) -> Vec3 {
    add(&scale(a, s), &scale(b, t))
}

/// Flip the sign of the third coordinate: the map between the coordinates
/// of a line and the covector that pairs with point coordinates.
pub fn flip_z(v: &Vec3) -> Vec3 {
    [v[0].clone(), v[1].clone(), -&v[2]]
}

/// A 3×3 matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3(pub [Vec3; 3]);

impl Mat3 {
    pub fn identity(ctx: FieldCtx) -> Self {
        let (o, z) = (ctx.one(), ctx.zero());
        Mat3([
            [o.clone(), z.clone(), z.clone()],
            [z.clone(), o.clone(), z.clone()],
            [z.clone(), z, o],
        ])
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        let row = |r: &Vec3| &(&r[0] * &v[0] + &r[1] * &v[1]) + &(&r[2] * &v[2]);
        [row(&self.0[0]), row(&self.0[1]), row(&self.0[2])]
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let col = |j: usize| [other.0[0][j].clone(), other.0[1][j].clone(), other.0[2][j].clone()];
        let cols = [col(0), col(1), col(2)];
        let entry = |i: usize, j: usize| {
            let r = &self.0[i];
            let c = &cols[j];
            &(&r[0] * &c[0] + &r[1] * &c[1]) + &(&r[2] * &c[2])
        };
        Mat3([
            [entry(0, 0), entry(0, 1), entry(0, 2)],
            [entry(1, 0), entry(1, 1), entry(1, 2)],
            [entry(2, 0), entry(2, 1), entry(2, 2)],
        ])
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.0;
        Mat3([
            [m[0][0].clone(), m[1][0].clone(), m[2][0].clone()],
            [m[0][1].clone(), m[1][1].clone(), m[2][1].clone()],
            [m[0][2].clone(), m[1][2].clone(), m[2][2].clone()],
        ])
    }

    pub fn det(&self) -> FieldElement {
        det(&self.0[0], &self.0[1], &self.0[2])
    }

    /// Adjugate; equals `det · inverse` and is defined for singular matrices too.
    pub fn adjugate(&self) -> Mat3 {
        let m = &self.0;
        // Columns of the inverse are cross products of rows.
        let c0 = cross(&m[1], &m[2]);
        let c1 = cross(&m[2], &m[0]);
        let c2 = cross(&m[0], &m[1]);
        Mat3([c0, c1, c2]).transpose()
    }
}
