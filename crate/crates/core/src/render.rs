//! SVG figures of evaluated scripts. Exact values become floats in
//! [`project`] and [`project_line`] only.

use std::fmt::Write;

use crate::error::{GeomError, Result};
use crate::projective::{ProjLine, ProjPoint};
use crate::script::{ast::Pred, ast::StmtKind, Evaluation, Program, Value};

const SIZE: f64 = 800.0;
const NULL_BLUE: &str = "#1f4fd8";

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Projected {
    Finite(f64, f64),
    /// A point with z = 0, drawn as an arrow at the boundary.
    Direction(f64, f64),
}

fn float(x: &crate::FieldElement) -> Result<f64> {
    x.to_f64().ok_or_else(|| GeomError::HypothesisViolated("rendering needs the rational field".into()))
}

pub fn project(p: &ProjPoint) -> Result<Projected> {
    let [x, y, z] = p.coords();
    if z.is_zero() {
        return Ok(Projected::Direction(float(x)?, float(y)?));
    }
    Ok(Projected::Finite(float(&x.checked_div(z)?)?, float(&y.checked_div(z)?)?))
}

/// The affine line `a x + b y = c` scaled to a² + b² = 1, or None for the
/// line at infinity.
pub fn project_line(l: &ProjLine) -> Result<Option<(f64, f64, f64)>> {
    let [a, b, c] = l.coords();
    let (a, b, c) = (float(a)?, float(b)?, float(c)?);
    let n = a.hypot(b);
    if n == 0.0 {
        return Ok(None);
    }
    Ok(Some((a / n, b / n, c / n)))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub cx: f64,
    pub cy: f64,
    pub half_width: f64,
}

impl Default for Viewport {
    fn default() -> Self {
        Viewport { cx: 0.0, cy: 0.0, half_width: 2.5 }
    }
}

impl std::str::FromStr for Viewport {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|e| format!("bad viewport `{s}`: {e}")))
            .collect::<std::result::Result<_, _>>()?;
        match parts[..] {
            [cx, cy, hw] if hw > 0.0 && hw.is_finite() => Ok(Viewport { cx, cy, half_width: hw }),
            _ => Err(format!("viewport must be cx,cy,hw with hw > 0, got `{s}`")),
        }
    }
}

impl Viewport {
    fn sx(&self, x: f64) -> f64 {
        (x - self.cx + self.half_width) / (2.0 * self.half_width) * SIZE
    }

    fn sy(&self, y: f64) -> f64 {
        (self.cy + self.half_width - y) / (2.0 * self.half_width) * SIZE
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        (x - self.cx).abs() <= self.half_width && (y - self.cy).abs() <= self.half_width
    }

    /// Liang-Barsky clip of the line through `p` with direction `d`.
    fn clip(&self, p: (f64, f64), d: (f64, f64)) -> Option<((f64, f64), (f64, f64))> {
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (pi, di, c) in [(p.0, d.0, self.cx), (p.1, d.1, self.cy)] {
            let (min, max) = (c - self.half_width, c + self.half_width);
            if di.abs() < 1e-300 {
                if pi < min || pi > max {
                    return None;
                }
                continue;
            }
            let (t0, t1) = ((min - pi) / di, (max - pi) / di);
            lo = lo.max(t0.min(t1));
            hi = hi.min(t0.max(t1));
        }
        (lo < hi).then_some(((p.0 + lo * d.0, p.1 + lo * d.1), (p.0 + hi * d.0, p.1 + hi * d.1)))
    }
}

/// Fixed formatting so identical scenes give identical bytes.
fn num(x: f64) -> String {
    let s = format!("{x:.9}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000000".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

struct Canvas {
    view: Viewport,
    body: String,
}

impl Canvas {
    fn line(&mut self, label: &str, l: &ProjLine) -> Result<()> {
        let Some((a, b, c)) = project_line(l)? else { return Ok(()) };
        let Some((p, q)) = self.view.clip((a * c, b * c), (-b, a)) else { return Ok(()) };
        let v = self.view;
        writeln!(
            self.body,
            r#"<line class="line" x1="{}" y1="{}" x2="{}" y2="{}"><title>{}</title></line>"#,
            num(v.sx(p.0)),
            num(v.sy(p.1)),
            num(v.sx(q.0)),
            num(v.sy(q.1)),
            escape(label)
        )
        .unwrap();
        Ok(())
    }

    fn point(&mut self, label: &str, p: &ProjPoint) -> Result<()> {
        let v = self.view;
        match project(p)? {
            Projected::Finite(x, y) => {
                if !v.contains(x, y) {
                    return Ok(());
                }
                let (px, py) = (v.sx(x), v.sy(y));
                writeln!(self.body, r#"<circle class="point" cx="{}" cy="{}" r="3"/>"#, num(px), num(py)).unwrap();
                writeln!(self.body, r#"<text x="{}" y="{}">{}</text>"#, num(px + 5.0), num(py - 5.0), escape(label))
                    .unwrap();
            }
            Projected::Direction(dx, dy) => {
                let n = dx.hypot(dy);
                let (ux, uy) = (dx / n, dy / n);
                // The ray from the center leaves the square at this parameter.
                let t = v.half_width / ux.abs().max(uy.abs());
                let tip = (v.cx + ux * t, v.cy + uy * t);
                let tail = (v.cx + ux * t * 0.9, v.cy + uy * t * 0.9);
                writeln!(
                    self.body,
                    r#"<line class="direction" x1="{}" y1="{}" x2="{}" y2="{}" marker-end="url(#arrow)"/>"#,
                    num(v.sx(tail.0)),
                    num(v.sy(tail.1)),
                    num(v.sx(tip.0)),
                    num(v.sy(tip.1))
                )
                .unwrap();
                writeln!(
                    self.body,
                    r#"<text x="{}" y="{}">{}</text>"#,
                    num(v.sx(tail.0) + 5.0),
                    num(v.sy(tail.1) - 5.0),
                    escape(label)
                )
                .unwrap();
            }
        }
        Ok(())
    }

    /// A small corner at the meet of two perpendicular lines, opened along both.
    fn right_angle(&mut self, l: &ProjLine, m: &ProjLine) -> Result<()> {
        let (Some(lf), Some(mf)) = (project_line(l)?, project_line(m)?) else { return Ok(()) };
        let Ok(p) = crate::projective::meet(l, m) else { return Ok(()) };
        let Projected::Finite(x, y) = project(&p)? else { return Ok(()) };
        let v = self.view;
        if !v.contains(x, y) {
            return Ok(());
        }
        let s = v.half_width * 0.04;
        let (u, w) = ((-lf.1 * s, lf.0 * s), (-mf.1 * s, mf.0 * s));
        writeln!(
            self.body,
            r#"<path class="marker" d="M {} {} L {} {} L {} {}"/>"#,
            num(v.sx(x + u.0)),
            num(v.sy(y + u.1)),
            num(v.sx(x + u.0 + w.0)),
            num(v.sy(y + u.1 + w.1)),
            num(v.sx(x + w.0)),
            num(v.sy(y + w.1))
        )
        .unwrap();
        Ok(())
    }

    fn value(&mut self, label: &str, value: &Value, layer: Layer) -> Result<()> {
        match (value, layer) {
            (Value::Line(l), Layer::Lines) => self.line(label, l),
            (Value::Point(p), Layer::Points) => self.point(label, p),
            (Value::Tuple(items), _) => {
                for (i, item) in items.iter().enumerate() {
                    self.value(&format!("{label}.{}", i + 1), item, layer)?;
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Layer {
    Lines,
    Points,
}

/// Draws the null circle, every bound line and point, and a corner for each
/// asserted perpendicularity of lines.
pub fn render(program: &Program, ev: &Evaluation, view: Viewport) -> Result<String> {
    if !ev.field.is_rational() {
        return Err(GeomError::HypothesisViolated("rendering needs the rational field".into()));
    }
    let mut canvas = Canvas { view, body: String::new() };
    for layer in [Layer::Lines, Layer::Points] {
        for (name, value) in &ev.bindings {
            canvas.value(name, value, layer)?;
        }
    }
    for s in &program.stmts {
        if let StmtKind::Assert(Pred::Perp, args) = &s.kind {
            let vals: Vec<Value> = args.iter().filter_map(|a| ev.value_of(a).ok()).collect();
            if let [Value::Line(l), Value::Line(m)] = &vals[..] {
                canvas.right_angle(l, m)?;
            }
        }
    }
    let r = SIZE / (2.0 * view.half_width);
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="8" markerHeight="8" orient="auto"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>"#
    )
    .unwrap();
    writeln!(
        out,
        "<style>.line{{stroke:#444;stroke-width:1}} .direction{{stroke:#444;stroke-width:1.5}} \
         .point{{fill:#c0392b}} .marker{{fill:none;stroke:#444}} text{{font:12px sans-serif}}</style>"
    )
    .unwrap();
    writeln!(out, r##"<rect width="{SIZE}" height="{SIZE}" fill="#ffffff"/>"##).unwrap();
    writeln!(
        out,
        r#"<circle class="null" cx="{}" cy="{}" r="{}" fill="none" stroke="{NULL_BLUE}" stroke-width="2"/>"#,
        num(view.sx(0.0)),
        num(view.sy(0.0)),
        num(r)
    )
    .unwrap();
    out.push_str(&canvas.body);
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::null_point_from_param;
    use crate::projective::ExtValue;
    use crate::script::{evaluate, parse};
    use crate::FieldCtx;

    #[test]
    fn projection_examples() {
        let ctx = FieldCtx::rational();
        let p = ProjPoint::from_ints(ctx, [1, 0, 2]).unwrap();
        assert_eq!(project(&p).unwrap(), Projected::Finite(0.5, 0.0));
        let d = ProjPoint::from_ints(ctx, [1, 2, 0]).unwrap();
        assert_eq!(project(&d).unwrap(), Projected::Direction(1.0, 2.0));
        let n = null_point_from_param(ctx, &ExtValue::Finite(ctx.one()));
        assert_eq!(project(&n).unwrap(), Projected::Finite(0.0, 1.0));
    }

    #[test]
    fn viewport_parsing() {
        assert_eq!("1,-2,0.5".parse::<Viewport>().unwrap(), Viewport { cx: 1.0, cy: -2.0, half_width: 0.5 });
        assert!("1,2".parse::<Viewport>().is_err());
        assert!("0,0,0".parse::<Viewport>().is_err());
    }

    #[test]
    fn svg_is_deterministic_and_blue() {
        let src = "a = [1:0:2]; b = [0:1:3]; L = join(a, b); d = [1:2:0]; A = dual(a);\nassert perp(L, altitude_line(a, L));";
        let p = parse(src).unwrap();
        let ev = evaluate(&p);
        let one = render(&p, &ev, Viewport::default()).unwrap();
        let two = render(&p, &evaluate(&p), Viewport::default()).unwrap();
        assert_eq!(one, two);
        assert!(one.contains(NULL_BLUE));
        assert!(one.contains("marker-end"));
        assert!(one.contains(r#"class="marker""#));
        assert!(one.contains("<title>L</title>"));
    }

    #[test]
    fn finite_fields_are_refused() {
        let p = parse("#field fp 7\na = [1:0:2];").unwrap();
        assert!(render(&p, &evaluate(&p), Viewport::default()).is_err());
    }
}
