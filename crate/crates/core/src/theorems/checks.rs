//! One trial function per registered theorem.
//!
//! Each trial draws a configuration, binds its defining objects for the
//! witness, and evaluates the theorem's equalities exactly. Construction
//! errors propagate and make the runner retry with a fresh seed.

use crate::duality::{
    base_point, dual_of_line, dual_of_point, is_null_line, is_null_point, null_points_on, perp_lines, perp_points,
    reflect_line, reflect_point, reflect_point_by_construction, Couple,
};
use crate::error::{GeomError, Result};
use crate::field::FieldElement;
use crate::metric::{
    law_residual, napier_solve, quadrance, quadrance_cr, right_parallax, spread, spread_cr,
    spread_equals_dual_quadrance, thales_ratios, triangle_metrics, Law, LawInput, Napier, TriangleMetrics,
};
use crate::projective::{
    collinear, concurrent, desargues_holds, incident, join, meet, pappus_holds, ProjLine, ProjPoint,
};

use super::constructions::*;
use super::generate::{
    equilateral_triangle, isosceles_triangle, midpoint_rich_triangle, no_three_collinear, right_triangle,
    septagon_on_conic,
};
use super::{Configuration, Gen, Outcome, Theorem};

type Trial = Result<Outcome>;

fn q(a: &ProjPoint, b: &ProjPoint) -> Result<FieldElement> {
    quadrance(a, b)
}

fn s(l: &ProjLine, m: &ProjLine) -> Result<FieldElement> {
    spread(l, m)
}

fn j(a: &ProjPoint, b: &ProjPoint) -> Result<ProjLine> {
    join(a, b)
}

fn m(l: &ProjLine, n: &ProjLine) -> Result<ProjPoint> {
    meet(l, n)
}

fn product(xs: &[FieldElement]) -> FieldElement {
    let mut it = xs.iter();
    let first = it.next().expect("non-empty product").clone();
    it.fold(first, |acc, x| &acc * x)
}

fn bind_points(cfg: &mut Configuration, prefix: &str, pts: &[ProjPoint]) {
    for (i, p) in pts.iter().enumerate() {
        cfg.bind(&format!("{prefix}{}", i + 1), p.clone());
    }
}

fn triangle(g: &mut Gen, cfg: &mut Configuration) -> Result<[ProjPoint; 3]> {
    let a = g.triangle()?;
    bind_points(cfg, "a", &a);
    Ok(a)
}

fn nulls(g: &mut Gen, cfg: &mut Configuration, n: usize) -> Result<Vec<ProjPoint>> {
    let a = g.null_points(n)?;
    bind_points(cfg, "alpha", &a);
    Ok(a)
}

fn metrics(a: &[ProjPoint; 3]) -> Result<TriangleMetrics> {
    triangle_metrics(&a[0], &a[1], &a[2])
}

fn refs<const N: usize>(a: &[ProjPoint]) -> [&ProjPoint; N] {
    std::array::from_fn(|i| &a[i])
}

fn degenerate(what: &str) -> GeomError {
    GeomError::DegenerateConfiguration(what.to_string())
}

// Projective.

fn pappus(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let l1 = g.line()?;
    let l2 = g.line()?;
    let a = [g.point_on(&l1, &[])?, g.point_on(&l1, &[])?, g.point_on(&l1, &[])?];
    let b = [g.point_on(&l2, &[])?, g.point_on(&l2, &[])?, g.point_on(&l2, &[])?];
    bind_points(cfg, "a", &a);
    bind_points(cfg, "b", &b);
    let mut out = Outcome::default();
    out.check(pappus_holds(refs(&a), refs(&b))?, || "cross-joins are not collinear".into());
    Ok(out)
}

fn desargues(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let o = g.point()?;
    cfg.bind("o", o.clone());
    let mut a = Vec::new();
    let mut b = Vec::new();
    for _ in 0..3 {
        let l = g.line_through(&o)?;
        a.push(g.point_on(&l, &[&o])?);
        b.push(g.point_on(&l, &[&o])?);
    }
    bind_points(cfg, "a", &a);
    bind_points(cfg, "b", &b);
    let mut out = Outcome::default();
    out.check(desargues_holds(refs(&a), refs(&b))?, || "side meets are not collinear".into());
    Ok(out)
}

// Perpendicularity and triangle centers.

fn orthocenter_check(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    let n = altitude_lines(refs(&a))?;
    let mut out = Outcome::default();
    out.check(concurrent(&n[0], &n[1], &n[2]), || "altitude lines are not concurrent".into());
    let h = orthocenter(&a[0], &a[1], &a[2])?;
    let duals = a.clone().map(|p| dual_of_point(&p));
    let o = ortholine(&duals[0], &duals[1], &duals[2])?;
    out.check_eq("ortholine of dual trilateral = dual(orthocenter)", &o, &dual_of_point(&h));
    let l = lines_of(refs(&a))?;
    let alt = altitude_points([&l[0], &l[1], &l[2]])?;
    out.check(collinear(&alt[0], &alt[1], &alt[2]), || "altitude points are not collinear".into());
    Ok(out)
}

fn triply_nil_altitudes(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 3)?;
    let b = g.point_on(&j(&al[0], &al[1])?, &[])?;
    cfg.bind("b", b.clone());
    let n1 = j(&b, &dual_of_line(&j(&al[0], &al[2])?))?;
    let n2 = j(&b, &dual_of_line(&j(&al[1], &al[2])?))?;
    let mut out = Outcome::default();
    out.check(perp_lines(&n1, &n2), || format!("{n1} and {n2} are not perpendicular"));
    Ok(out)
}

fn diagonal_points(al: &[ProjPoint]) -> Result<[ProjPoint; 3]> {
    let e = m(&j(&al[0], &al[1])?, &j(&al[2], &al[3])?)?;
    let f = m(&j(&al[0], &al[2])?, &j(&al[1], &al[3])?)?;
    let g = m(&j(&al[0], &al[3])?, &j(&al[1], &al[2])?)?;
    Ok([e, f, g])
}

fn nil_quadrangle_diagonal(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 4)?;
    let [e, f, gg] = diagonal_points(&al)?;
    let mut out = Outcome::default();
    for (x, y, name) in [(&e, &f, "e,f"), (&e, &gg, "e,g"), (&f, &gg, "f,g")] {
        out.check(perp_points(x, y), || format!("points {name} are not perpendicular"));
    }
    let (ef, eg, fg) = (j(&e, &f)?, j(&e, &gg)?, j(&f, &gg)?);
    for (x, y, name) in [(&ef, &eg, "ef,eg"), (&ef, &fg, "ef,fg"), (&eg, &fg, "eg,fg")] {
        out.check(perp_lines(x, y), || format!("lines {name} are not perpendicular"));
    }
    Ok(out)
}

fn circumcircles(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let mut out = Outcome::default();
    // A random triangle rarely has all six midpoints over ℚ; fall back to
    // the triangle dual to three null secants, which always does.
    let random = g.triangle()?;
    let (a, alpha) = match circumcenters(&random[0], &random[1], &random[2]) {
        Ok(_) => {
            out.observe("random triangle");
            (random, None)
        }
        Err(_) => {
            let (a, alpha) = midpoint_rich_triangle(g)?;
            out.observe("triangle dual to null secants");
            (a, Some(alpha))
        }
    };
    bind_points(cfg, "a", &a);
    let c = circumcenters(&a[0], &a[1], &a[2])?;
    let all: Vec<&ProjPoint> = c.midpoints.iter().flatten().collect();
    out.check(c.circumlines.len() == 4, || format!("{} circumlines", c.circumlines.len()));
    for l in &c.circumlines {
        let on = all.iter().filter(|p| incident(p, l)).count();
        out.check(on == 3, || format!("circumline {l} holds {on} midpoints"));
    }
    for cc in &c.circumcenters {
        let d = [q(cc, &a[0])?, q(cc, &a[1])?, q(cc, &a[2])?];
        out.check(d[0] == d[1] && d[1] == d[2], || {
            format!("circumcenter {cc} quadrances {}, {}, {}", d[0], d[1], d[2])
        });
    }
    if let Some(al) = alpha {
        bind_points(cfg, "alpha", &al);
        // Midpoints of a_i a_j are the diagonal points of the quadrangle on
        // the null points of the dual lines.
        let groups = [[2, 3, 4, 5], [0, 1, 4, 5], [0, 1, 2, 3]];
        for (side, grp) in groups.iter().enumerate() {
            let quad: Vec<ProjPoint> = grp.iter().map(|&i| al[i].clone()).collect();
            let [_, f, gg] = diagonal_points(&quad)?;
            let mids = &c.midpoints[side];
            let same = (mids[0] == f && mids[1] == gg) || (mids[0] == gg && mids[1] == f);
            out.check(same, || format!("midpoints of side {} are not the diagonal points", side + 1));
        }
    }
    Ok(out)
}

fn double_median(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    let d = double_triangle(refs(&a))?;
    let mut out = Outcome::default();
    let l = lines_of(refs(&a))?;
    for i in 0..3 {
        let (x, y) = (&d[(i + 1) % 3], &d[(i + 2) % 3]);
        let par = crate::duality::parallel_line(&Couple::new(a[i].clone(), l[i].clone()))?;
        out.check_eq(&format!("d-line {} is the parallel through a{}", i + 1, i + 1), &j(x, y)?, &par);
        out.check_eq(&format!("a{} is a midpoint of its double side", i + 1), &reflect_point(x, &a[i])?, y);
    }
    Ok(out)
}

fn double_point_check(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    let d = double_triangle(refs(&a))?;
    let sp = spokes(refs(&a), &d)?;
    let mut out = Outcome::default();
    out.check(concurrent(&sp[0], &sp[1], &sp[2]), || "joins a_i d_i are not concurrent".into());
    Ok(out)
}

fn second_double_point_check(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    let d = double_triangle(refs(&a))?;
    let gg = double_triangle([&d[0], &d[1], &d[2]])?;
    let sp = spokes(refs(&a), &gg)?;
    let mut out = Outcome::default();
    out.check(concurrent(&sp[0], &sp[1], &sp[2]), || "joins a_i g_i are not concurrent".into());
    Ok(out)
}

// The basic laws.

fn law_outcome(law: Law, input: &LawInput) -> Trial {
    let r = law_residual(law, input)?;
    let mut out = Outcome::default();
    out.check_zero(r.law, &r.value);
    Ok(out)
}

fn triple_quad(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let l = g.line()?;
    let a1 = g.point_on(&l, &[])?;
    let a2 = g.point_on(&l, &[&a1])?;
    let a3 = g.point_on(&l, &[&a1, &a2])?;
    let a = [a1, a2, a3];
    bind_points(cfg, "a", &a);
    let qs = [q(&a[1], &a[2])?, q(&a[0], &a[2])?, q(&a[0], &a[1])?];
    law_outcome(Law::TripleQuad, &LawInput::Quadrances(qs))
}

fn triple_spread(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let p = g.point()?;
    let l = [g.line_through(&p)?, g.line_through(&p)?, g.line_through(&p)?];
    for (i, x) in l.iter().enumerate() {
        cfg.bind(&format!("L{}", i + 1), x.clone());
    }
    if l[0] == l[1] || l[0] == l[2] || l[1] == l[2] {
        return Err(degenerate("repeated line"));
    }
    let ss = [s(&l[1], &l[2])?, s(&l[0], &l[2])?, s(&l[0], &l[1])?];
    law_outcome(Law::TripleSpread, &LawInput::Spreads(ss))
}

fn right(g: &mut Gen, cfg: &mut Configuration) -> Result<[ProjPoint; 3]> {
    let a = right_triangle(g)?;
    bind_points(cfg, "a", &a);
    Ok(a)
}

fn pythagoras(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = right(g, cfg)?;
    law_outcome(Law::Pythagoras, &LawInput::Triangle(metrics(&a)?))
}

fn pythagoras_dual(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    // q3 = q(a1,a2) = 1 when a2 lies on a1⊥.
    let a1 = g.point()?;
    let a2 = g.point_on(&dual_of_point(&a1), &[])?;
    let a3 = g.point()?;
    let a = [a1, a2, a3];
    bind_points(cfg, "a", &a);
    law_outcome(Law::PythagorasDual, &LawInput::Triangle(metrics(&a)?))
}

fn spread_law(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    law_outcome(Law::SpreadLaw, &LawInput::Triangle(metrics(&a)?))
}

fn spread_dual(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    law_outcome(Law::SpreadDual, &LawInput::Triangle(metrics(&a)?))
}

fn cross_law(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    law_outcome(Law::CrossLaw, &LawInput::Triangle(metrics(&a)?))
}

fn cross_dual(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    law_outcome(Law::CrossDual, &LawInput::Triangle(metrics(&a)?))
}

// Right triangles.

fn thales(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = right(g, cfg)?;
    let (r1, r2) = thales_ratios(&metrics(&a)?)?;
    let mut out = Outcome::default();
    out.check_zero("S1 q3 = q1", &r1.value);
    out.check_zero("S2 q3 = q2", &r2.value);
    Ok(out)
}

fn right_parallax_check(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a1 = g.null_point();
    let a3 = g.point()?;
    let l2 = j(&a1, &a3)?;
    let l1 = j(&a3, &dual_of_line(&l2))?;
    let a2 = g.point_on(&l1, &[&a3])?;
    let a = [a1, a2, a3];
    bind_points(cfg, "a", &a);
    let l3 = j(&a[0], &a[1])?;
    if is_null_line(&l3) || is_null_line(&l2) || is_null_line(&l1) {
        return Err(degenerate("null side"));
    }
    let s1 = s(&l2, &l3)?;
    let s2 = s(&l1, &l3)?;
    let s3 = s(&l1, &l2)?;
    let q1 = q(&a[1], &a[2])?;
    let mut out = Outcome::default();
    out.check(s3.is_one(), || format!("S3 = {s3}, expected 1"));
    out.check(s1.is_zero(), || format!("S1 = {s1} at the null point, expected 0"));
    out.check_eq("q1 = (S2 - 1)/S2", &q1, &right_parallax(&s2)?);
    Ok(out)
}

fn napier(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    use Napier::*;
    let a = right(g, cfg)?;
    let mt = metrics(&a)?;
    let value = |k: Napier| match k {
        S1 => mt.s[0].clone(),
        S2 => mt.s[1].clone(),
        Q1 => mt.q[0].clone(),
        Q2 => mt.q[1].clone(),
        Q3 => mt.q[2].clone(),
    };
    let all = [S1, S2, Q1, Q2, Q3];
    let mut out = Outcome::default();
    for (i, &k1) in all.iter().enumerate() {
        for &k2 in &all[i + 1..] {
            match napier_solve([(k1, value(k1)), (k2, value(k2))]) {
                Ok(sol) => {
                    let got = [&sol.s1, &sol.s2, &sol.q1, &sol.q2, &sol.q3];
                    let want = [&mt.s[0], &mt.s[1], &mt.q[0], &mt.q[1], &mt.q[2]];
                    out.check(got == want, || format!("solving from {k1:?},{k2:?} gave {sol:?}"));
                }
                Err(e) => out.observe(format!("{k1:?},{k2:?} not solvable: {}", e.name())),
            }
        }
    }
    Ok(out)
}

// Proportions.

fn triangle_proportions(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    let mt = metrics(&a)?;
    let d = g.point_on(&j(&a[0], &a[1])?, &[&a[0], &a[1]])?;
    cfg.bind("d", d.clone());
    let (r1, r2) = (q(&a[0], &d)?, q(&a[1], &d)?);
    let a3d = j(&a[2], &d)?;
    let big_r1 = s(&j(&a[2], &a[0])?, &a3d)?;
    let big_r2 = s(&j(&a[2], &a[1])?, &a3d)?;
    let mut out = Outcome::default();
    out.check_eq(
        "R1 S2 r2 = R2 S1 r1",
        &product(&[big_r1.clone(), mt.s[1].clone(), r2.clone()]),
        &product(&[big_r2.clone(), mt.s[0].clone(), r1.clone()]),
    );
    out.check_eq(
        "R1 q2 r2 = R2 q1 r1",
        &product(&[big_r1, mt.q[1].clone(), r2]),
        &product(&[big_r2, mt.q[0].clone(), r1]),
    );
    Ok(out)
}

/// `r1r2r3` and `t1t2t3` for points `b_i` on the lines of a triangle.
fn point_ratios(a: &[ProjPoint; 3], b: &[ProjPoint; 3]) -> Result<(FieldElement, FieldElement)> {
    let r = [q(&a[1], &b[0])?, q(&a[2], &b[1])?, q(&a[0], &b[2])?];
    let t = [q(&b[0], &a[2])?, q(&b[1], &a[0])?, q(&b[2], &a[1])?];
    Ok((product(&r), product(&t)))
}

/// `R1R2R3` and `T1T2T3` for lines `B_i` through the points of a trilateral.
fn line_ratios(l: &[ProjLine; 3], b: &[ProjLine; 3]) -> Result<(FieldElement, FieldElement)> {
    let r = [s(&l[1], &b[0])?, s(&l[2], &b[1])?, s(&l[0], &b[2])?];
    let t = [s(&b[0], &l[2])?, s(&b[1], &l[0])?, s(&b[2], &l[1])?];
    Ok((product(&r), product(&t)))
}

fn menelaus(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    let line = g.line()?;
    cfg.bind("L", line.clone());
    let l = lines_of(refs(&a))?;
    let b = [m(&line, &l[0])?, m(&line, &l[1])?, m(&line, &l[2])?];
    let (r, t) = point_ratios(&a, &b)?;
    let mut out = Outcome::default();
    out.check_eq("r1r2r3 = t1t2t3", &r, &t);
    Ok(out)
}

fn ceva(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    let a0 = g.point()?;
    cfg.bind("a0", a0.clone());
    let l = lines_of(refs(&a))?;
    let b = [
        m(&j(&a0, &a[0])?, &l[0])?,
        m(&j(&a0, &a[1])?, &l[1])?,
        m(&j(&a0, &a[2])?, &l[2])?,
    ];
    let (r, t) = point_ratios(&a, &b)?;
    let mut out = Outcome::default();
    out.check_eq("r1r2r3 = t1t2t3", &r, &t);
    Ok(out)
}

fn menelaus_dual(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    let l = lines_of(refs(&a))?;
    let p = g.point()?;
    cfg.bind("l", p.clone());
    // A1A2A3's points opposite each line are a1, a2, a3.
    let b = [j(&p, &a[0])?, j(&p, &a[1])?, j(&p, &a[2])?];
    let (r, t) = line_ratios(&l, &b)?;
    let mut out = Outcome::default();
    out.check_eq("R1R2R3 = T1T2T3", &r, &t);
    Ok(out)
}

fn ceva_dual(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = triangle(g, cfg)?;
    let l = lines_of(refs(&a))?;
    let l0 = g.line()?;
    cfg.bind("A0", l0.clone());
    let b = [
        j(&m(&l0, &l[0])?, &a[0])?,
        j(&m(&l0, &l[1])?, &a[1])?,
        j(&m(&l0, &l[2])?, &a[2])?,
    ];
    let (r, t) = line_ratios(&l, &b)?;
    let mut out = Outcome::default();
    out.check_eq("R1R2R3 = T1T2T3", &r, &t);
    Ok(out)
}

// Isosceles and equilateral triangles.

fn pons_asinorum(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = isosceles_triangle(g)?;
    bind_points(cfg, "a", &a);
    let mt = metrics(&a)?;
    let mut out = Outcome::default();
    out.check_eq("q1 = q2", &mt.q[0], &mt.q[1]);
    out.check_eq("S1 = S2", &mt.s[0], &mt.s[1]);
    // Converse: the dual trilateral has S1 = S2 and should have q1 = q2.
    let duals = a.clone().map(|p| dual_of_point(&p));
    let b = points_of([&duals[0], &duals[1], &duals[2]])?;
    bind_points(cfg, "b", &b);
    let mb = metrics(&b)?;
    out.check_eq("dual S1 = S2", &mb.s[0], &mb.s[1]);
    out.check_eq("dual q1 = q2", &mb.q[0], &mb.q[1]);
    Ok(out)
}

fn isosceles_right(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a1 = g.point()?;
    let a2 = g.point()?;
    let a3 = dual_of_line(&j(&a1, &a2)?);
    let a = [a1, a2, a3];
    bind_points(cfg, "a", &a);
    let mt = metrics(&a)?;
    let mut out = Outcome::default();
    out.check(mt.s[0].is_one() && mt.s[1].is_one(), || format!("S1 = {}, S2 = {}", mt.s[0], mt.s[1]));
    out.check(mt.q[0].is_one() && mt.q[1].is_one(), || format!("q1 = {}, q2 = {}", mt.q[0], mt.q[1]));
    out.check_eq("S3 = q3", &mt.s[2], &mt.q[2]);
    Ok(out)
}

fn isosceles(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = isosceles_triangle(g)?;
    bind_points(cfg, "a", &a);
    let mt = metrics(&a)?;
    let (qq, ss) = (&mt.q[0], &mt.s[0]);
    let one = qq.ctx().one();
    let den = (&one - &(ss * qq)).square();
    if den.is_zero() {
        return Err(GeomError::DegenerateDenominator);
    }
    let q3 = product(&[(&one - ss), qq.clone(), (&one - qq)]).scale(4).checked_div(&den)?;
    let s3 = product(&[ss.clone(), (&one - ss), (&one - qq)]).scale(4).checked_div(&den)?;
    let mut out = Outcome::default();
    out.check_eq("q3 = 4(1-S)q(1-q)/(1-Sq)^2", &mt.q[2], &q3);
    out.check_eq("S3 = 4S(1-S)(1-q)/(1-Sq)^2", &mt.s[2], &s3);
    Ok(out)
}

fn isosceles_parallax(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a1 = g.null_point();
    let a2 = g.point()?;
    let mirror = g.point_on(&dual_of_point(&a1), &[])?;
    let a3 = reflect_point(&a2, &mirror)?;
    let a = [a1, a2, a3];
    bind_points(cfg, "a", &a);
    let l = lines_of(refs(&a))?;
    if l.iter().any(is_null_line) {
        return Err(degenerate("null side"));
    }
    let q1 = q(&a[1], &a[2])?;
    let s2 = s(&l[0], &l[2])?;
    let s3 = s(&l[0], &l[1])?;
    if s2.is_zero() {
        return Err(GeomError::ZeroSpread);
    }
    let want = (&s2 - &s2.ctx().one()).scale(4).checked_div(&s2.square())?;
    let mut out = Outcome::default();
    out.check_eq("S2 = S3", &s2, &s3);
    out.check_eq("q = 4(S-1)/S^2", &q1, &want);
    Ok(out)
}

fn equilateral(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = equilateral_triangle(g)?;
    bind_points(cfg, "a", &a);
    let mt = metrics(&a)?;
    let mut out = Outcome::default();
    out.check(mt.q[0] == mt.q[1] && mt.q[1] == mt.q[2], || "quadrances differ".into());
    out.check(mt.s[0] == mt.s[1] && mt.s[1] == mt.s[2], || "spreads differ".into());
    let (qq, ss) = (&mt.q[0], &mt.s[0]);
    let one = qq.ctx().one();
    let lhs = (&one - &(ss * qq)).square();
    let rhs = (&(&one - ss) * &(&one - qq)).scale(4);
    out.check_eq("(1-Sq)^2 = 4(1-S)(1-q)", &lhs, &rhs);
    Ok(out)
}

// Quadrilaterals and thinness.

fn lambert(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = g.point()?;
    let b = g.point()?;
    let ab = j(&a, &b)?;
    let perp_a = j(&a, &dual_of_line(&ab))?;
    let perp_b = j(&b, &dual_of_line(&ab))?;
    let c = g.point_on(&perp_b, &[&b])?;
    let d = m(&perp_a, &j(&c, &dual_of_line(&perp_b))?)?;
    for (label, p) in [("a", &a), ("b", &b), ("c", &c), ("d", &d)] {
        cfg.bind(label, p.clone());
    }
    let (qq, pp) = (q(&a, &b)?, q(&b, &c)?);
    let one = qq.ctx().one();
    let den = &one - &(&qq * &pp);
    let ss = &(&qq + &pp) - &(&qq * &pp);
    if den.is_zero() || ss.is_zero() {
        return Err(GeomError::DegenerateDenominator);
    }
    let x = (&pp * &(&one - &qq)).checked_div(&den)?;
    let y = (&qq * &(&one - &pp)).checked_div(&den)?;
    let r = (&(&qq + &pp) - &(&qq * &pp).scale(2)).checked_div(&den)?;
    if r.is_zero() {
        return Err(GeomError::DegenerateDenominator);
    }
    let (ba, bc, bd) = (j(&b, &a)?, j(&b, &c)?, j(&b, &d)?);
    let (ca, cd, ad) = (j(&c, &a)?, j(&c, &d)?, j(&a, &d)?);
    let mut out = Outcome::default();
    out.check(s(&ab, &ad)?.is_one(), || "spread at a is not 1".into());
    out.check(s(&ba, &bc)?.is_one(), || "spread at b is not 1".into());
    out.check(s(&bc, &cd)?.is_one(), || "spread at c is not 1".into());
    out.check_eq("q(c,d) = y", &q(&c, &d)?, &y);
    out.check_eq("q(a,d) = x", &q(&a, &d)?, &x);
    out.check_eq("q(a,c) = s", &q(&a, &c)?, &ss);
    out.check_eq("q(b,d) = r", &q(&b, &d)?, &r);
    out.check_eq("S(ba,bd) = x/r", &s(&ba, &bd)?, &x.checked_div(&r)?);
    out.check_eq("S(bc,bd) = y/r", &s(&bc, &bd)?, &y.checked_div(&r)?);
    out.check_eq("S(cb,ca) = q/s", &s(&bc, &ca)?, &qq.checked_div(&ss)?);
    out.check_eq("S(ac,ab) = p/s", &s(&ca, &ab)?, &pp.checked_div(&ss)?);
    out.check_eq("S(ac,ad) = q(1-p)/s", &s(&ca, &ad)?, &(&qq * &(&one - &pp)).checked_div(&ss)?);
    out.check_eq("S(ca,cd) = p(1-q)/s", &s(&ca, &cd)?, &(&pp * &(&one - &qq)).checked_div(&ss)?);
    out.check_eq("S(da,dc) = 1-pq", &s(&ad, &cd)?, &den);
    Ok(out)
}

fn quadrea_of(p: &[ProjPoint; 3]) -> Result<FieldElement> {
    Ok(metrics(p)?.quadrea)
}

fn cevian_thinness(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 3)?;
    let a = g.point()?;
    cfg.bind("a", a.clone());
    let c = [
        m(&j(&a, &al[0])?, &j(&al[1], &al[2])?)?,
        m(&j(&a, &al[1])?, &j(&al[0], &al[2])?)?,
        m(&j(&a, &al[2])?, &j(&al[0], &al[1])?)?,
    ];
    let mut out = Outcome::default();
    let area = quadrea_of(&c)?;
    out.check(area.is_one(), || format!("quadrea of cevian triangle is {area}"));
    Ok(out)
}

fn altitude_thinness(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 3)?;
    let a = g.point()?;
    cfg.bind("a", a.clone());
    let sides = lines_of(refs(&al))?;
    let b = [
        base_point(&Couple::new(a.clone(), sides[0].clone()))?,
        base_point(&Couple::new(a.clone(), sides[1].clone()))?,
        base_point(&Couple::new(a.clone(), sides[2].clone()))?,
    ];
    let mut out = Outcome::default();
    let area = quadrea_of(&b)?;
    out.check(area.is_one(), || format!("quadrea of altitude triangle is {area}"));
    Ok(out)
}

// Null points.

fn null_perspective(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 3)?;
    let b = g.point_on(&j(&al[0], &al[2])?, &[])?;
    let l12 = j(&al[0], &al[1])?;
    let x = g.point_on(&l12, &[])?;
    let y = g.point_on(&l12, &[&x])?;
    for (label, p) in [("b", &b), ("x", &x), ("y", &y)] {
        cfg.bind(label, p.clone());
    }
    let l23 = j(&al[1], &al[2])?;
    let x1 = m(&l23, &j(&x, &b)?)?;
    let y1 = m(&l23, &j(&y, &b)?)?;
    let mut out = Outcome::default();
    out.check_eq("q(x,y) = q(x1,y1)", &q(&x, &y)?, &q(&x1, &y1)?);
    Ok(out)
}

fn subtended(al: &[ProjPoint], a3: &ProjPoint, line: &ProjLine) -> Result<FieldElement> {
    let a1 = m(&j(&al[0], a3)?, line)?;
    let a2 = m(&j(&al[1], a3)?, line)?;
    q(&a1, &a2)
}

fn null_subtended(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 4)?;
    let line = g.line()?;
    cfg.bind("M", line.clone());
    let l = j(&al[0], &al[1])?;
    let qq = subtended(&al, &al[2], &line)?;
    let mut out = Outcome::default();
    let prod = &qq * &s(&l, &line)?;
    out.check(prod.is_one(), || format!("q S = {prod}"));
    out.check_eq("q independent of alpha3", &qq, &subtended(&al, &al[3], &line)?);
    Ok(out)
}

fn null_subtended_dual(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 3)?;
    let lam = al.iter().map(dual_of_point).collect::<Vec<_>>();
    let l = m(&lam[0], &lam[1])?;
    let mm = g.point()?;
    cfg.bind("m", mm.clone());
    let a1 = j(&m(&lam[0], &lam[2])?, &mm)?;
    let a2 = j(&m(&lam[1], &lam[2])?, &mm)?;
    let mut out = Outcome::default();
    let prod = &s(&a1, &a2)? * &q(&l, &mm)?;
    out.check(prod.is_one(), || format!("S q = {prod}"));
    Ok(out)
}

fn opposite_subtended(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 6)?;
    let [alpha, beta, gamma, delta, mu, upsilon] = refs::<6>(&al);
    let gd = j(gamma, delta)?;
    let ab = j(alpha, beta)?;
    let a = m(&j(alpha, mu)?, &gd)?;
    let b = m(&j(beta, mu)?, &gd)?;
    let c = m(&j(gamma, upsilon)?, &ab)?;
    let d = m(&j(delta, upsilon)?, &ab)?;
    let mut out = Outcome::default();
    out.check_eq("q(a,b) = q(c,d)", &q(&a, &b)?, &q(&c, &d)?);
    Ok(out)
}

fn butterfly(g: &mut Gen, cfg: &mut Configuration) -> Result<(ProjPoint, ProjPoint, ProjPoint, ProjLine, [ProjLine; 2])> {
    let al = nulls(g, cfg, 4)?;
    let gg = m(&j(&al[0], &al[2])?, &j(&al[1], &al[3])?)?;
    let l = g.line_through(&gg)?;
    cfg.bind("L", l.clone());
    let ad = j(&al[0], &al[3])?;
    let bc = j(&al[1], &al[2])?;
    let x = m(&l, &ad)?;
    let y = m(&l, &bc)?;
    Ok((gg, x, y, l, [ad, bc]))
}

fn butterfly_quadrance(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let (gg, x, y, _, _) = butterfly(g, cfg)?;
    let mut out = Outcome::default();
    out.check_eq("q(g,x) = q(g,y)", &q(&gg, &x)?, &q(&gg, &y)?);
    Ok(out)
}

fn butterfly_spread(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let (_, _, _, l, [ad, bc]) = butterfly(g, cfg)?;
    let mut out = Outcome::default();
    out.check_eq("S(L,ad) = S(L,bc)", &s(&l, &ad)?, &s(&l, &bc)?);
    Ok(out)
}

fn check_48_64(out: &mut Outcome, v: &[FieldElement; 3]) -> Result<()> {
    let (r48, r64) = residuals_48_64(v);
    out.check_zero("PR+RT+PT = 48", &r48);
    out.check_zero("PRT = 64", &r64);
    match reciprocal_sum_48(&v[0], &v[1], &v[2]) {
        Ok(r) => out.check_zero("1/P+1/R+1/T = 3/4", &r.value),
        Err(_) => out.observe("reciprocal sum undefined"),
    }
    Ok(())
}

fn theorem_48_64(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 4)?;
    let v = quadrangle_spreads(refs(&al))?;
    let mut out = Outcome::default();
    check_48_64(&mut out, &v)?;
    Ok(out)
}

fn theorem_48_64_dual(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 4)?;
    let lam = al.iter().map(dual_of_point).collect::<Vec<_>>();
    let v = quadrilateral_quadrances([&lam[0], &lam[1], &lam[2], &lam[3]])?;
    let mut out = Outcome::default();
    check_48_64(&mut out, &v)?;
    Ok(out)
}

// Pentagons and septagons. Indices below are zero-based: `b[0]` is b1.

fn pentagon_ratio(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a: Vec<ProjPoint> = (0..5).map(|_| g.point()).collect::<Result<_>>()?;
    bind_points(cfg, "a", &a);
    no_three_collinear(&refs::<5>(&a))?;
    let (b, c) = pentagon_points(refs(&a))?;
    let lhs = [q(&b[0], &c[3])?, q(&b[1], &c[4])?, q(&b[2], &c[0])?, q(&b[3], &c[1])?, q(&b[4], &c[2])?];
    let rhs = [q(&b[1], &c[3])?, q(&b[2], &c[4])?, q(&b[3], &c[0])?, q(&b[4], &c[1])?, q(&b[0], &c[2])?];
    let mut out = Outcome::default();
    out.check_eq("product ratio", &product(&lhs), &product(&rhs));
    Ok(out)
}

fn pentagon_null_product(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 5)?;
    let (b, _) = pentagon_points(refs(&al))?;
    let qs = (0..5).map(|i| q(&b[i], &b[(i + 1) % 5])).collect::<Result<Vec<_>>>()?;
    let p = product(&qs);
    let mut out = Outcome::default();
    out.check_eq("product of consecutive quadrances", &p, &p.ctx().ratio(-1, 1024)?);
    Ok(out)
}

fn pentagon_null_symmetry(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let mut al = nulls(g, cfg, 5)?;
    let (b, c) = pentagon_points(refs(&al))?;
    let mut out = Outcome::default();
    let pairs = [((0, 3), (4, 1)), ((1, 4), (0, 2)), ((2, 0), (1, 3)), ((3, 1), (2, 4)), ((4, 2), (3, 0))];
    for ((i, k), (x, y)) in pairs {
        out.check_eq(
            &format!("q(b{},c{}) = q(b{},c{})", i + 1, k + 1, x + 1, y + 1),
            &q(&b[i], &c[k])?,
            &q(&b[x], &c[y])?,
        );
    }
    let before = q(&b[3], &c[1])?;
    let replacement = g.null_point();
    if al.contains(&replacement) {
        return Err(degenerate("replacement alpha1 repeats a point"));
    }
    cfg.bind("alpha1'", replacement.clone());
    al[0] = replacement;
    let (b2, c2) = pentagon_points(refs(&al))?;
    out.check_eq("q(b4,c2) independent of alpha1", &before, &q(&b2[3], &c2[1])?);
    Ok(out)
}

fn septagon_conic_ratio(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let (a, _) = septagon_on_conic(g)?;
    bind_points(cfg, "a", &a);
    no_three_collinear(&refs::<7>(&a))?;
    let (b, c) = septagon_points(refs(&a))?;
    let lhs = (0..7).map(|i| q(&c[i], &b[(i + 4) % 7])).collect::<Result<Vec<_>>>()?;
    let rhs = (0..7).map(|i| q(&c[i], &b[(i + 3) % 7])).collect::<Result<Vec<_>>>()?;
    let mut out = Outcome::default();
    out.check_eq("product ratio", &product(&lhs), &product(&rhs));
    Ok(out)
}

// Conics.

struct ParabolaSetup {
    f1: ProjPoint,
    d1: ProjLine,
    b1: ProjPoint,
}

fn parabola_setup(g: &mut Gen, cfg: &mut Configuration) -> Result<ParabolaSetup> {
    let f1 = g.point()?;
    let mid = g.point()?;
    let b1 = reflect_point(&f1, &mid)?;
    let d1 = g.line_through(&b1)?;
    cfg.bind("f1", f1.clone());
    cfg.bind("d", mid);
    cfg.bind("D1", d1.clone());
    Ok(ParabolaSetup { f1, d1, b1 })
}

fn parabola(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let ParabolaSetup { f1, d1, b1 } = parabola_setup(g, cfg)?;
    let pp = parabola_points(&f1, &d1, &b1)?;
    let f2 = dual_of_line(&d1);
    let conic = parabola_conic(&f1, &d1)?;
    let mut out = Outcome::default();
    for (a, t) in pp.points.iter().zip(&pp.tangents) {
        let qf1 = q(a, &f1)?;
        out.check_eq(&format!("locus at {a}"), &qf1, &quadrance_to_line(a, &d1)?);
        let sum = &qf1 + &q(a, &f2)?;
        out.check(sum.is_one(), || format!("q(a,f1)+q(a,f2) = {sum} at {a}"));
        out.check(conic.contains(a), || format!("{a} is not on the parabola conic"));
        out.check_eq(&format!("midline is the tangent at {a}"), t, &conic.polar(a)?);
    }
    // The swapped focus/directrix pair describes the same curve.
    let d2 = dual_of_point(&f1);
    let b2 = dual_of_line(&j(&b1, &f1)?);
    out.check(incident(&b2, &d2), || "b2 is not on D2".into());
    match parabola_points(&f2, &d2, &b2) {
        Ok(pp2) => {
            for a in &pp2.points {
                out.check(conic.contains(a), || format!("{a} from (f2,D2) is not on the parabola"));
                out.check_eq(&format!("locus at {a}"), &q(a, &f1)?, &quadrance_to_line(a, &d1)?);
            }
            let pairs = perpendicular_pairings(&pp.points, &pp2.points);
            out.observe(format!("perpendicular pairings {pairs:?}"));
        }
        Err(e) => out.observe(format!("second family: {}", e.name())),
    }
    Ok(out)
}

fn parabola_chords(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let ParabolaSetup { f1, d1, b1 } = parabola_setup(g, cfg)?;
    let pp = parabola_points(&f1, &d1, &b1)?;
    let conic = parabola_conic(&f1, &d1)?;
    let a = pp.points[0].clone();
    // A second point: the other intersection of a secant through a.
    let secant = g.line_through(&a)?;
    let hits = conic.meet_line(&secant).ok_or_else(|| degenerate("secant on conic"))?;
    let b = hits.into_iter().find(|p| *p != a).ok_or_else(|| degenerate("tangent secant"))?;
    cfg.bind("a", a.clone());
    cfg.bind("b", b.clone());
    let (ta, tb) = (conic.polar(&a)?, conic.polar(&b)?);
    let f = &f1;
    let c = m(&d1, &ta)?;
    let d = m(&d1, &tb)?;
    let mut out = Outcome::default();
    out.check_eq("S(cf,fd) = S(af,fb)", &s(&j(&c, f)?, &j(f, &d)?)?, &s(&j(&a, f)?, &j(f, &b)?)?);
    let e = m(&d1, &j(&a, &b)?)?;
    let gg = m(&ta, &tb)?;
    let (ef, gf) = (j(&e, f)?, j(&gg, f)?);
    out.check(perp_lines(&ef, &gf), || format!("{ef} is not perpendicular to {gf}"));
    Ok(out)
}

fn bolyai(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let pair = g.null_points(2)?;
    let l = j(&pair[0], &pair[1])?;
    let c = g.point_on(&l, &[])?;
    let k = j(&c, &dual_of_line(&l))?;
    let mid = g.point_on(&k, &[&c])?;
    let a = reflect_point(&c, &mid)?;
    let b = g.point_on(&l, &[&c])?;
    cfg.bind("L", l.clone());
    cfg.bind("a", a.clone());
    cfg.bind("b", b.clone());
    let res = bolyai_limiting_lines(&a, &l, &b)?;
    let mut out = Outcome::default();
    for u in &res.lines {
        let hit = m(u, &l)?;
        out.check(is_null_point(&hit), || format!("{u} meets L at the non-null point {hit}"));
    }
    let mut want = null_points_on(&l).iter().map(|p| j(&a, p)).collect::<Result<Vec<_>>>()?;
    let mut got = res.lines.to_vec();
    want.sort_by_key(|x| x.to_string());
    got.sort_by_key(|x| x.to_string());
    out.check(got == want, || "limiting lines differ from joins to the null points of L".into());
    Ok(out)
}

fn canonical_aux(g: &mut Gen, alpha1: &ProjPoint, alpha2: &ProjPoint) -> Result<CanonicalAux> {
    let alpha3 = g.null_point();
    if alpha3 == *alpha1 || alpha3 == *alpha2 {
        return Err(GeomError::DegenerateAux);
    }
    let b1 = g.point_on(&j(alpha2, &alpha3)?, &[])?;
    let b2 = g.point_on(&j(alpha1, &alpha3)?, &[])?;
    Ok(CanonicalAux { alpha3, b1, b2 })
}

struct CanonicalSetup {
    alpha: [ProjPoint; 2],
    x3: ProjPoint,
    y3: ProjPoint,
}

fn canonical_setup(g: &mut Gen, cfg: &mut Configuration) -> Result<CanonicalSetup> {
    let pair = g.null_points(2)?;
    let line = j(&pair[0], &pair[1])?;
    let x3 = g.point_on(&line, &[])?;
    let y3 = g.point_on(&line, &[&x3])?;
    cfg.bind("x3", x3.clone());
    cfg.bind("y3", y3.clone());
    // Order the null points as canonical_points will.
    let nulls = null_points_on(&line);
    Ok(CanonicalSetup { alpha: [nulls[0].clone(), nulls[1].clone()], x3, y3 })
}

fn canonical_points_check(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let CanonicalSetup { alpha, x3, y3 } = canonical_setup(g, cfg)?;
    let aux1 = canonical_aux(g, &alpha[0], &alpha[1])?;
    let aux2 = canonical_aux(g, &alpha[0], &alpha[1])?;
    cfg.bind("alpha3", aux1.alpha3.clone());
    cfg.bind("b1", aux1.b1.clone());
    cfg.bind("b2", aux1.b2.clone());
    let k = canonical_construction(&alpha[0], &alpha[1], &x3, &y3, &aux1, B3_READING)?;
    let mut out = Outcome::default();
    out.check(incident(&k.b[2], &j(&alpha[0], &alpha[1])?), || "b3 is not on alpha1 alpha2".into());
    for (bi, zi, wi) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        out.check(collinear(&k.b[bi], &k.z[zi], &k.w[wi]), || {
            format!("b{}, z{}, w{} are not collinear", bi + 1, zi + 1, wi + 1)
        });
    }
    let (z, w, _) = canonical_points(&x3, &y3, &aux1)?;
    let (z2, w2, _) = canonical_points(&x3, &y3, &aux2)?;
    out.check((z == z2 && w == w2) || (z == w2 && w == z2), || {
        format!("aux choices give ({z}, {w}) and ({z2}, {w2})")
    });
    if z == w2 && w == z2 && z != w {
        out.observe("aux change swapped z3 and w3");
    }
    Ok(out)
}

fn canonical_cubic_check(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let CanonicalSetup { alpha, x3, y3 } = canonical_setup(g, cfg)?;
    let aux = canonical_aux(g, &alpha[0], &alpha[1])?;
    let (_, _, r) = canonical_points(&x3, &y3, &aux)?;
    let mut out = Outcome::default();
    out.check_zero(r.law, &r.value);
    Ok(out)
}

fn jumping_jack_check(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let al = nulls(g, cfg, 5)?;
    let gg = m(&j(&al[0], &al[2])?, &j(&al[1], &al[3])?)?;
    let l = g.line_through(&gg)?;
    cfg.bind("L", l.clone());
    let jj = jumping_jack(refs(&al), &l)?;
    let mut out = Outcome::default();
    out.check_zero(jj.residual.law, &jj.residual.value);
    Ok(out)
}

// Measurements and reflections.

fn reflection(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let a = g.point()?;
    let (b, c) = (g.point()?, g.point()?);
    let (l, n) = (g.line()?, g.line()?);
    for (label, p) in [("a", &a), ("b", &b), ("c", &c)] {
        cfg.bind(label, p.clone());
    }
    cfg.bind("L", l.clone());
    cfg.bind("M", n.clone());
    let rb = reflect_point(&b, &a)?;
    let rc = reflect_point(&c, &a)?;
    let mut out = Outcome::default();
    out.check_eq("q preserved", &q(&rb, &rc)?, &q(&b, &c)?);
    out.check_eq("S preserved", &s(&reflect_line(&l, &a)?, &reflect_line(&n, &a)?)?, &s(&l, &n)?);
    out.check_eq("involution", &reflect_point(&rb, &a)?, &b);
    // The same map seen as acting on lines through duality.
    let via_dual = dual_of_point(&reflect_point(&dual_of_line(&l), &a)?);
    out.check_eq("line action agrees with point action on duals", &reflect_line(&l, &a)?, &via_dual);
    let axis = dual_of_point(&a);
    let on_axis = g.point_on(&axis, &[])?;
    out.check_eq("points of a⊥ are fixed", &reflect_point(&on_axis, &a)?, &on_axis);
    // Ruler construction through null points, when the secant has them.
    let t = g.param();
    match reflect_point_by_construction(&b, &a, &t) {
        Ok(x) => out.check_eq("matrix and construction agree", &rb, &x),
        Err(e) => out.observe(format!("construction path unavailable: {}", e.name())),
    }
    Ok(out)
}

fn metric_agreement(g: &mut Gen, cfg: &mut Configuration) -> Trial {
    let (a, b) = (g.point()?, g.point()?);
    let (l, n) = (g.line()?, g.line()?);
    cfg.bind("a", a.clone());
    cfg.bind("b", b.clone());
    cfg.bind("L", l.clone());
    cfg.bind("M", n.clone());
    let mut out = Outcome::default();
    out.check_eq("quadrance = cross-ratio quadrance", &q(&a, &b)?, &quadrance_cr(&a, &b)?);
    out.check_eq("spread = cross-ratio spread", &s(&l, &n)?, &spread_cr(&l, &n)?);
    let r = spread_equals_dual_quadrance(&l, &n)?;
    out.check_zero(r.law, &r.value);
    Ok(out)
}

macro_rules! theorem {
    ($id:literal, $statement:literal, $f:ident) => {
        Theorem { id: $id, statement: $statement, trial: $f }
    };
}

pub(super) static REGISTRY: &[Theorem] = &[
    theorem!("pappus", "cross-joins of two collinear triples are collinear", pappus),
    theorem!("desargues", "triangles in perspective from a point are in perspective from a line", desargues),
    theorem!("orthocenter", "altitudes concur; dual ortholine is the dual of the orthocenter", orthocenter_check),
    theorem!("triply_nil_altitudes", "altitude lines through b of a triply nil triangle are perpendicular", triply_nil_altitudes),
    theorem!("nil_quadrangle_diagonal", "diagonal points of a null quadrangle are mutually perpendicular", nil_quadrangle_diagonal),
    theorem!("circumcircles", "six midpoints lie three at a time on four circumlines", circumcircles),
    theorem!("double_median", "each point is a midpoint of the double triangle side through it", double_median),
    theorem!("double_point", "joins of points to the double triangle points concur", double_point_check),
    theorem!("second_double_point", "joins of points to the second double triangle points concur", second_double_point_check),
    theorem!("triple_quad", "triple quad formula for collinear points", triple_quad),
    theorem!("triple_spread", "triple spread formula for concurrent lines", triple_spread),
    theorem!("pythagoras", "q3 = q1 + q2 - q1q2 when S3 = 1", pythagoras),
    theorem!("pythagoras_dual", "S3 = S1 + S2 - S1S2 when q3 = 1", pythagoras_dual),
    theorem!("spread_law", "S1/q1 = S2/q2 = S3/q3", spread_law),
    theorem!("spread_dual", "q1/S1 = q2/S2 = q3/S3", spread_dual),
    theorem!("cross_law", "cross law for a triangle", cross_law),
    theorem!("cross_dual", "cross dual law for a triangle", cross_dual),
    theorem!("thales", "S1 q3 = q1 and S2 q3 = q2 in a right triangle", thales),
    theorem!("right_parallax", "q1 = (S2 - 1)/S2 for a right triangle with a null point", right_parallax_check),
    theorem!("napier", "two measurements of a right triangle determine the rest", napier),
    theorem!("triangle_proportions", "R1/R2 = (S1/S2)(r1/r2)", triangle_proportions),
    theorem!("menelaus", "r1r2r3 = t1t2t3 for a transversal", menelaus),
    theorem!("menelaus_dual", "R1R2R3 = T1T2T3 for a point", menelaus_dual),
    theorem!("ceva", "r1r2r3 = t1t2t3 for concurrent cevians", ceva),
    theorem!("ceva_dual", "R1R2R3 = T1T2T3 for collinear cevian points", ceva_dual),
    theorem!("pons_asinorum", "q1 = q2 exactly when S1 = S2", pons_asinorum),
    theorem!("isosceles_right", "S1 = S2 = 1 gives q1 = q2 = 1 and S3 = q3", isosceles_right),
    theorem!("isosceles", "base quadrance and apex spread of an isosceles triangle", isosceles),
    theorem!("isosceles_parallax", "q = 4(S-1)/S^2 with a null apex", isosceles_parallax),
    theorem!("equilateral", "(1-Sq)^2 = 4(1-S)(1-q)", equilateral),
    theorem!("lambert", "measurements of a quadrilateral with three right spreads", lambert),
    theorem!("cevian_thinness", "cevian triangle of a triply nil triangle has quadrea 1", cevian_thinness),
    theorem!("altitude_thinness", "altitude triangle of a triply nil triangle has quadrea 1", altitude_thinness),
    theorem!("null_perspective", "perspectivity through a null point preserves quadrance", null_perspective),
    theorem!("null_subtended", "q S = 1 for a chord subtended from a null point", null_subtended),
    theorem!("null_subtended_dual", "S q = 1 for the dual configuration", null_subtended_dual),
    theorem!("opposite_subtended", "opposite null chords subtend equal quadrances", opposite_subtended),
    theorem!("butterfly_quadrance", "q(g,x) = q(g,y) in the null butterfly", butterfly_quadrance),
    theorem!("butterfly_spread", "S(L,ad) = S(L,bc) in the null butterfly", butterfly_spread),
    theorem!("theorem_48_64", "spreads of a null quadrangle satisfy the 48 and 64 relations", theorem_48_64),
    theorem!("theorem_48_64_dual", "quadrances of a null quadrilateral satisfy the 48 and 64 relations", theorem_48_64_dual),
    theorem!("pentagon_ratio", "product ratio of a pentagon's diagonal and opposite points", pentagon_ratio),
    theorem!("pentagon_null_product", "consecutive diagonal quadrances of a null pentagon multiply to -1/1024", pentagon_null_product),
    theorem!("pentagon_null_symmetry", "symmetric quadrances of a null pentagon", pentagon_null_symmetry),
    theorem!("septagon_conic_ratio", "product ratio of a septagon on a conic", septagon_conic_ratio),
    theorem!("parabola", "midlines give parabola points and their tangents", parabola),
    theorem!("parabola_chords", "spread and perpendicularity theorems for parabola chords", parabola_chords),
    theorem!("bolyai", "the limiting line construction meets L at null points", bolyai),
    theorem!("canonical_points", "canonical points depend only on x3 and y3", canonical_points_check),
    theorem!("canonical_cubic", "(q-4r)^2 = 8qr(2r-q)", canonical_cubic_check),
    theorem!("jumping_jack", "16rs(3-4(s+r)) = 1", jumping_jack_check),
    theorem!("reflection", "reflections are isometric involutions", reflection),
    theorem!("metric_agreement", "closed forms equal cross-ratio measurements", metric_agreement),
];
