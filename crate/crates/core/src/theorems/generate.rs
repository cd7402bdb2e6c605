//! Seeded random configurations with rejection of degenerate cases.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::duality::{dual_of_line, dual_of_point, is_null_line, is_null_point, null_point_from_param, reflect_point};
use crate::error::{GeomError, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::{self, Mat3};
use crate::projective::{collinear, join, points_on, ExtValue, ProjLine, ProjPoint};

use super::constructions::{conic_isometry, lines_of};
use super::Configuration;

const REJECTIONS: u32 = 64;

/// A seeded source of random field elements, points and lines.
pub struct Gen {
    ctx: FieldCtx,
    rng: ChaCha8Rng,
}

fn exhausted() -> GeomError {
    GeomError::GeneratorExhausted
}

impl Gen {
    pub fn new(ctx: FieldCtx, seed: u64) -> Self {
        Gen { ctx, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// Small integers over ℚ, uniform residues over F_p.
    pub fn coord(&mut self) -> FieldElement {
        match self.ctx.modulus() {
            None => self.ctx.int(self.rng.gen_range(-9..=9)),
            Some(p) => self.ctx.int(self.rng.gen_range(0..p) as i64),
        }
    }

    /// A random field element; fractions with small terms over ℚ.
    pub fn scalar(&mut self) -> FieldElement {
        match self.ctx.modulus() {
            None => {
                let n = self.rng.gen_range(-12..=12);
                let d = self.rng.gen_range(1..=6);
                self.ctx.ratio(n, d).expect("nonzero denominator")
            }
            Some(_) => self.coord(),
        }
    }

    pub fn nonzero_scalar(&mut self) -> Result<FieldElement> {
        for _ in 0..REJECTIONS {
            let x = self.scalar();
            if !x.is_zero() {
                return Ok(x);
            }
        }
        Err(exhausted())
    }

    pub fn any_point(&mut self) -> Result<ProjPoint> {
        for _ in 0..REJECTIONS {
            if let Ok(p) = ProjPoint::new(self.coord(), self.coord(), self.coord()) {
                return Ok(p);
            }
        }
        Err(exhausted())
    }

    /// A random non-null point.
    pub fn point(&mut self) -> Result<ProjPoint> {
        for _ in 0..REJECTIONS {
            let p = self.any_point()?;
            if !is_null_point(&p) {
                return Ok(p);
            }
        }
        Err(exhausted())
    }

    /// A random non-null line.
    pub fn line(&mut self) -> Result<ProjLine> {
        Ok(dual_of_point(&self.point()?))
    }

    /// A parameter for the null circle; over F_p it may be ∞.
    pub fn param(&mut self) -> ExtValue {
        match self.ctx.modulus() {
            None => ExtValue::Finite(self.scalar()),
            Some(p) => {
                let k = self.rng.gen_range(0..=p);
                if k == p {
                    ExtValue::Infinity
                } else {
                    ExtValue::Finite(self.ctx.int(k as i64))
                }
            }
        }
    }

    pub fn null_point(&mut self) -> ProjPoint {
        let t = self.param();
        null_point_from_param(self.ctx, &t)
    }

    /// `n` distinct null points.
    pub fn null_points(&mut self, n: usize) -> Result<Vec<ProjPoint>> {
        let mut out: Vec<ProjPoint> = Vec::with_capacity(n);
        let mut tries = 0;
        while out.len() < n {
            tries += 1;
            if tries > REJECTIONS * n as u32 {
                return Err(exhausted());
            }
            let p = self.null_point();
            if !out.contains(&p) {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// A random point of `l` other than the listed ones, non-null.
    pub fn point_on(&mut self, l: &ProjLine, avoid: &[&ProjPoint]) -> Result<ProjPoint> {
        let (p, q) = points_on(l);
        for _ in 0..REJECTIONS {
            let (s, t) = (self.coord(), self.coord());
            let Ok(x) = ProjPoint::from_coords(linalg::combine(&s, p.coords(), &t, q.coords())) else {
                continue;
            };
            if !is_null_point(&x) && !avoid.contains(&&x) {
                return Ok(x);
            }
        }
        Err(exhausted())
    }

    /// A random non-null line through `p`.
    pub fn line_through(&mut self, p: &ProjPoint) -> Result<ProjLine> {
        for _ in 0..REJECTIONS {
            let q = self.any_point()?;
            if let Ok(l) = join(p, &q) {
                if !is_null_line(&l) {
                    return Ok(l);
                }
            }
        }
        Err(exhausted())
    }

    /// Three non-null points, not collinear, with non-null lines, no point
    /// dual to its opposite line.
    pub fn triangle(&mut self) -> Result<[ProjPoint; 3]> {
        for _ in 0..REJECTIONS {
            let a = [self.point()?, self.point()?, self.point()?];
            if check_triangle(&a).is_ok() {
                return Ok(a);
            }
        }
        Err(exhausted())
    }

    /// A random invertible matrix.
    pub fn invertible_matrix(&mut self) -> Result<Mat3> {
        for _ in 0..REJECTIONS {
            let mut row = || [self.coord(), self.coord(), self.coord()];
            let m = Mat3([row(), row(), row()]);
            if !m.det().is_zero() {
                return Ok(m);
            }
        }
        Err(exhausted())
    }

    /// A random invertible 2×2 matrix.
    pub fn mobius(&mut self) -> Result<[[FieldElement; 2]; 2]> {
        for _ in 0..REJECTIONS {
            let m = [[self.coord(), self.coord()], [self.coord(), self.coord()]];
            if !(&(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])).is_zero() {
                return Ok(m);
            }
        }
        Err(exhausted())
    }
}

fn check_triangle(a: &[ProjPoint; 3]) -> Result<[ProjLine; 3]> {
    let l = lines_of([&a[0], &a[1], &a[2]])?;
    if l.iter().any(is_null_line) || a.iter().any(is_null_point) {
        return Err(GeomError::NullArgument);
    }
    if (0..3).any(|i| dual_of_point(&a[i]) == l[i]) {
        return Err(GeomError::DualTriangle);
    }
    Ok(l)
}

fn mobius_mul(x: &[[FieldElement; 2]; 2], y: &[[FieldElement; 2]; 2]) -> [[FieldElement; 2]; 2] {
    let e = |i: usize, j: usize| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// The configuration families the checks draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Point,
    Line,
    Triangle,
    NullQuadrangle,
    NullPentagon,
    NullSeptagon,
    SeptagonConic,
    RightTriangle,
    IsoscelesTriangle,
    EquilateralTriangle,
    MidpointRichTriangle,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 11] = [
        GeneratorKind::Point,
        GeneratorKind::Line,
        GeneratorKind::Triangle,
        GeneratorKind::NullQuadrangle,
        GeneratorKind::NullPentagon,
        GeneratorKind::NullSeptagon,
        GeneratorKind::SeptagonConic,
        GeneratorKind::RightTriangle,
        GeneratorKind::IsoscelesTriangle,
        GeneratorKind::EquilateralTriangle,
        GeneratorKind::MidpointRichTriangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Point => "point",
            GeneratorKind::Line => "line",
            GeneratorKind::Triangle => "triangle",
            GeneratorKind::NullQuadrangle => "null_quadrangle",
            GeneratorKind::NullPentagon => "null_pentagon",
            GeneratorKind::NullSeptagon => "null_septagon",
            GeneratorKind::SeptagonConic => "septagon_conic",
            GeneratorKind::RightTriangle => "right_triangle",
            GeneratorKind::IsoscelesTriangle => "isosceles_triangle",
            GeneratorKind::EquilateralTriangle => "equilateral_triangle",
            GeneratorKind::MidpointRichTriangle => "midpoint_rich_triangle",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown generator `{s}`"))
    }
}

fn null_polygon(gen: &mut Gen, cfg: &mut Configuration, n: usize) -> Result<()> {
    let pts = gen.null_points(n)?;
    for i in 0..n {
        for j in i + 1..n {
            if is_null_line(&join(&pts[i], &pts[j])?) {
                return Err(GeomError::DegenerateConfiguration("null join".into()));
            }
        }
    }
    for (i, p) in pts.into_iter().enumerate() {
        cfg.bind(&format!("alpha{}", i + 1), p);
    }
    Ok(())
}

fn bind_triangle(cfg: &mut Configuration, a: [ProjPoint; 3]) {
    for (i, p) in a.into_iter().enumerate() {
        cfg.bind(&format!("a{}", i + 1), p);
    }
}

/// A right triangle with the right angle at `a3`: `S3 = 1`.
pub fn right_triangle(gen: &mut Gen) -> Result<[ProjPoint; 3]> {
    let a3 = gen.point()?;
    let a1 = gen.point()?;
    let l2 = join(&a1, &a3)?;
    let l1 = join(&a3, &dual_of_line(&l2))?;
    let a2 = gen.point_on(&l1, &[&a3])?;
    let a = [a1, a2, a3];
    check_triangle(&a)?;
    Ok(a)
}

/// An isosceles triangle with `q1 = q2`: `a2` is the image of `a1` under a
/// reflection fixing `a3`.
pub fn isosceles_triangle(gen: &mut Gen) -> Result<[ProjPoint; 3]> {
    let a3 = gen.point()?;
    let a1 = gen.point()?;
    let m = gen.point_on(&dual_of_point(&a3), &[])?;
    let a2 = reflect_point(&a1, &m)?;
    let a = [a1, a2, a3];
    check_triangle(&a)?;
    Ok(a)
}

/// An equilateral triangle: the orbit of a point under an isometry of
/// order three, conjugated by a random isometry.
pub fn equilateral_triangle(gen: &mut Gen) -> Result<[ProjPoint; 3]> {
    let ctx = gen.ctx();
    let (o, z) = (ctx.one(), ctx.zero());
    let rot = [[o.clone(), -&o], [o, z]];
    let h = gen.mobius()?;
    let h_inv = [[h[1][1].clone(), -&h[0][1]], [-&h[1][0], h[0][0].clone()]];
    let g = conic_isometry(mobius_mul(&mobius_mul(&h, &rot), &h_inv));
    let a1 = gen.point()?;
    let a2 = ProjPoint::from_coords(g.apply(a1.coords()))?;
    let a3 = ProjPoint::from_coords(g.apply(a2.coords()))?;
    let a = [a1, a2, a3];
    check_triangle(&a)?;
    Ok(a)
}

/// A triangle all of whose sides have midpoints: the duals of three lines
/// each through two null points. Returns the six null points too.
pub fn midpoint_rich_triangle(gen: &mut Gen) -> Result<([ProjPoint; 3], Vec<ProjPoint>)> {
    let alpha = gen.null_points(6)?;
    let lines = [join(&alpha[0], &alpha[1])?, join(&alpha[2], &alpha[3])?, join(&alpha[4], &alpha[5])?];
    let a = lines.map(|l| dual_of_line(&l));
    check_triangle(&a)?;
    Ok((a, alpha))
}

/// Seven null points pushed forward by a random invertible matrix; they lie
/// on the image conic.
pub fn septagon_on_conic(gen: &mut Gen) -> Result<(Vec<ProjPoint>, Mat3)> {
    let h = gen.invertible_matrix()?;
    let alpha = gen.null_points(7)?;
    let pts = alpha
        .iter()
        .map(|a| ProjPoint::from_coords(h.apply(a.coords())))
        .collect::<Result<Vec<_>>>()?;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[..i] {
            if p == q {
                return Err(GeomError::DegenerateConfiguration("repeated point".into()));
            }
        }
    }
    Ok((pts, h))
}

fn generate_once(kind: GeneratorKind, gen: &mut Gen, cfg: &mut Configuration) -> Result<()> {
    match kind {
        GeneratorKind::Point => cfg.bind("a", gen.point()?),
        GeneratorKind::Line => cfg.bind("L", gen.line()?),
        GeneratorKind::Triangle => {
            let a = gen.triangle()?;
            bind_triangle(cfg, a);
        }
        GeneratorKind::NullQuadrangle => null_polygon(gen, cfg, 4)?,
        GeneratorKind::NullPentagon => null_polygon(gen, cfg, 5)?,
        GeneratorKind::NullSeptagon => null_polygon(gen, cfg, 7)?,
        GeneratorKind::SeptagonConic => {
            let (pts, h) = septagon_on_conic(gen)?;
            let conic = super::conic::null_circle(gen.ctx()).pushforward(&h);
            for (i, p) in pts.into_iter().enumerate() {
                cfg.bind(&format!("a{}", i + 1), p);
            }
            for (name, c) in ["xx", "yy", "zz", "xy", "xz", "yz"].iter().zip(conic.coefficients()) {
                cfg.bind(&format!("conic_{name}"), c);
            }
        }
        GeneratorKind::RightTriangle => {
            let a = right_triangle(gen)?;
            bind_triangle(cfg, a);
        }
        GeneratorKind::IsoscelesTriangle => {
            let a = isosceles_triangle(gen)?;
            bind_triangle(cfg, a);
        }
        GeneratorKind::EquilateralTriangle => {
            let a = equilateral_triangle(gen)?;
            bind_triangle(cfg, a);
        }
        GeneratorKind::MidpointRichTriangle => {
            let (a, _) = midpoint_rich_triangle(gen)?;
            bind_triangle(cfg, a);
        }
    }
    Ok(())
}

/// A deterministic configuration of the given family.
pub fn generate(kind: GeneratorKind, seed: u64, ctx: FieldCtx) -> Result<Configuration> {
    for attempt in 0..REJECTIONS {
        let s = super::trial_seed(seed, 0, attempt);
        let mut gen = Gen::new(ctx, s);
        let mut cfg = Configuration::new(kind.name(), seed);
        if generate_once(kind, &mut gen, &mut cfg).is_ok() {
            return Ok(cfg);
        }
    }
    Err(GeomError::GeneratorExhausted)
}

/// Rejects configurations with three collinear points among `pts`.
pub fn no_three_collinear(pts: &[&ProjPoint]) -> Result<()> {
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(pts[i], pts[j], pts[k]) {
                    return Err(GeomError::CollinearPoints);
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::conic::null_circle;

    #[test]
    fn generators_are_deterministic() {
        let q = FieldCtx::rational();
        for kind in GeneratorKind::ALL {
            assert_eq!(generate(kind, 7, q).unwrap(), generate(kind, 7, q).unwrap(), "{kind}");
        }
    }

    #[test]
    fn null_quadrangle_contract() {
        let cfg = generate(GeneratorKind::NullQuadrangle, 3, FieldCtx::rational()).unwrap();
        let pts: Vec<&ProjPoint> = (1..=4).map(|i| cfg.point(&format!("alpha{i}")).unwrap()).collect();
        for (i, p) in pts.iter().enumerate() {
            assert!(is_null_point(p));
            for q in &pts[..i] {
                assert_ne!(p, q);
                assert!(!is_null_line(&join(p, q).unwrap()));
            }
        }
    }

    #[test]
    fn septagon_points_share_a_conic() {
        for ctx in [FieldCtx::rational(), FieldCtx::prime(101).unwrap()] {
            let mut gen = Gen::new(ctx, 11);
            let (pts, h) = septagon_on_conic(&mut gen).unwrap();
            let conic = null_circle(ctx).pushforward(&h);
            assert!(pts.iter().all(|p| conic.contains(p)));
        }
    }

    #[test]
    fn special_triangles_have_their_shape() {
        use crate::metric::triangle_metrics;
        let ctx = FieldCtx::rational();
        let mut gen = Gen::new(ctx, 5);
        let [a1, a2, a3] = right_triangle(&mut gen).unwrap();
        assert!(triangle_metrics(&a1, &a2, &a3).unwrap().s[2].is_one());
        let [a1, a2, a3] = isosceles_triangle(&mut gen).unwrap();
        let m = triangle_metrics(&a1, &a2, &a3).unwrap();
        assert_eq!(m.q[0], m.q[1]);
        let [a1, a2, a3] = equilateral_triangle(&mut gen).unwrap();
        let m = triangle_metrics(&a1, &a2, &a3).unwrap();
        assert!(m.q[0] == m.q[1] && m.q[1] == m.q[2]);
    }
}
