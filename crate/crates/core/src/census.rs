//! Exhaustive counts over the projective plane of F_p.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::Result;
use crate::field::{FieldCtx, FieldElement};
use crate::linalg;
use crate::projective::{ProjLine, ProjPoint};

/// Square class of ⟨a,a⟩; well defined because rescaling multiplies it by a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SquareClass {
    Zero,
    Square,
    NonSquare,
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareClass::Zero => "zero",
            SquareClass::Square => "square",
            SquareClass::NonSquare => "nonsquare",
        })
    }
}

/// Circles about one center: the size of {x : q(x, c) = k} for each k.
pub type CircleProfile = BTreeMap<u64, u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub p: u64,
    pub points: u64,
    pub null_points: u64,
    pub null_lines: u64,
    pub tallies: BTreeMap<SquareClass, u64>,
    /// Distinct circle profiles over non-null centers, with how many centers share each.
    pub circles: Option<BTreeMap<Vec<(u64, u64)>, u64>>,
}

/// Normalized representatives of every projective point: [x:y:1], [x:1:0], [1:0:0].
pub fn projective_points(ctx: FieldCtx) -> Vec<ProjPoint> {
    let p = ctx.modulus().expect("finite field") as i64;
    let mut out = Vec::with_capacity((p * p + p + 1) as usize);
    for x in 0..p {
        for y in 0..p {
            out.push(ProjPoint::from_ints(ctx, [x, y, 1]).expect("nonzero"));
        }
    }
    for x in 0..p {
        out.push(ProjPoint::from_ints(ctx, [x, 1, 0]).expect("nonzero"));
    }
    out.push(ProjPoint::from_ints(ctx, [1, 0, 0]).expect("nonzero"));
    out
}

fn class(v: &linalg::Vec3) -> SquareClass {
    let n = linalg::form(v, v);
    if n.is_zero() {
        SquareClass::Zero
    } else if n.is_square() {
        SquareClass::Square
    } else {
        SquareClass::NonSquare
    }
}

pub fn census(ctx: FieldCtx, circles: bool) -> Result<Census> {
    let p = ctx.modulus().expect("census needs a finite field");
    let points = projective_points(ctx);
    let mut tallies = BTreeMap::new();
    for a in &points {
        *tallies.entry(class(a.coords())).or_default() += 1;
    }
    let null_points = tallies.get(&SquareClass::Zero).copied().unwrap_or(0);
    // Counted directly, not assumed equal to the null-point count.
    let null_lines = points
        .iter()
        .map(|a| ProjLine::from_coords(a.coords().clone()).expect("nonzero"))
        .filter(|l| linalg::form(l.coords(), l.coords()).is_zero())
        .count() as u64;
    let circles = if circles { Some(circle_profiles(&points)?) } else { None };
    Ok(Census { p, points: points.len() as u64, null_points, null_lines, tallies, circles })
}

fn circle_profiles(points: &[ProjPoint]) -> Result<BTreeMap<Vec<(u64, u64)>, u64>> {
    // q(x, c) = 1 − ⟨x,c⟩² / (⟨x,x⟩⟨c,c⟩), with the norms computed once.
    let live: Vec<(&ProjPoint, FieldElement)> = points
        .iter()
        .map(|a| (a, linalg::form(a.coords(), a.coords())))
        .filter(|(_, n)| !n.is_zero())
        .collect();
    let mut shared = BTreeMap::new();
    for (c, nc) in &live {
        let mut profile: HashMap<FieldElement, u64> = HashMap::new();
        for (x, nx) in &live {
            let f = linalg::form(x.coords(), c.coords());
            let q = &nx.ctx().one() - &f.square().checked_div(&(nx * nc))?;
            *profile.entry(q).or_default() += 1;
        }
        let profile: CircleProfile = profile.into_iter().map(|(k, n)| (k.residue().expect("finite field"), n)).collect();
        *shared.entry(profile.into_iter().collect::<Vec<_>>()).or_default() += 1;
    }
    Ok(shared)
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field\tfp {}", self.p)?;
        writeln!(f, "points\t{}", self.points)?;
        writeln!(f, "null_points\t{}", self.null_points)?;
        writeln!(f, "null_lines\t{}", self.null_lines)?;
        for (c, n) in &self.tallies {
            writeln!(f, "norm_{c}\t{n}")?;
        }
        if let Some(circles) = &self.circles {
            for (profile, centers) in circles {
                let sizes: Vec<String> = profile.iter().map(|(k, n)| format!("{k}:{n}")).collect();
                writeln!(f, "circles\t{centers}\t{}", sizes.join(" "))?;
            }
        }
        Ok(())
    }
}
